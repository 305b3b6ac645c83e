"""
Constructive direction: from an LR sequence to an explicit embedding realizing it.

step() builds, for a semisimple U in B, a submodule A with pA = U whose length-2 partition
sequence is a prescribed window. realize_full() iterates it from the top window down, working
in quotients of the fixed ambient module B and pulling each result back to B.
"""

################## Importing packages ####################

from dataclasses import dataclass, field

from ..combinat.lrseq import ( PartitionSequence, column_signatures, sequence_type, tau21_matching,
                               validate_inequalities )
from ..utils.errors import ( NotIncreasingError, NotLRError, NotSemisimpleError, PreconditionError,
                             StripError, VerificationError )
from ..utils.utils import check_prime, write_feedback, feedback_prefix
from .embed import Embedding, analyze
from .pmod import ( PModule, Submodule, is_p_bounded, normalize_semisimple, p_power,
                    quotient_presentation, quotient_type, same_submodule, submodule_type )


################## Classes ####################


@dataclass( frozen = True )
class RealizationStep:
    """One application of step(): U_in = p A_out, and A_out realizes 'window' in 'ambient'."""
    window: PartitionSequence
    ambient: PModule
    U_in: Submodule
    A_out: Submodule


@dataclass
class Realization:
    """
    Witness for an LR sequence: A in B with quotient_type(B, p^h A) = gamma^h for every h.
    chain[h] is U_h = p^h A as built during the construction.
    """
    sequence: PartitionSequence
    ambient: PModule
    sub: Submodule
    chain: list = field( default_factory = list )
    steps: list = field( default_factory = list )

    @property
    def p( self ):
        return self.ambient.p

    @property
    def embedding( self ):
        return Embedding( self.ambient, self.sub )

    @property
    def certificate( self ):
        return [ { 'h' : h, 'quotient_type' : quotient_type( self.ambient, p_power( self.sub, h ) ).to_json() }
                 for h in range( self.sequence.r + 1 ) ]

    def verify( self ):
        """Checks every quotient type and the chain p^h A = U_h; raises VerificationError."""
        for h, gam in enumerate( self.sequence.gammas ):
            got = quotient_type( self.ambient, p_power( self.sub, h ) )
            if got != gam:
                raise VerificationError( 'B/p^{0}A has type {1}, expected {2}'.format( h, got, gam ) )
        if not is_p_bounded( self.sub, self.sequence.r ):
            raise VerificationError( 'p^r A is not zero for r = {0}'.format( self.sequence.r ) )
        for h, U in enumerate( self.chain ):
            if not same_submodule( U, p_power( self.sub, h ) ):
                raise VerificationError( 'Chain entry U_{0} differs from p^{0}A'.format( h ) )
        return True

    def to_json( self ):
        return { 'p' : self.p,
                 'B' : self.ambient.lam.to_json(),
                 'A_generators' : self.sub.to_json(),
                 'certificate' : self.certificate }


################## Functions ####################


def initial_semisimple( gamma1, gamma2, p ):
    """
    Top of the construction: the semisimple submodule U = p^(r-1) A, read off the last step.

    Required Parameters
    -------------------

            gamma1          Partition

                                gamma^(r-1), the type B/U must have.

            gamma2          Partition

                                gamma^r, the type of B. Must contain gamma1 with every part growing
                                by at most one.

            p               Integer

                                Prime.

    Returns
    -------

            B               PModule

                                Of type gamma2.

            U               Submodule of B

                                Generated by p^(lam_i - 1) e_i for the columns i with kappa_i = 1,
                                kappa = gamma2 - gamma1 columnwise, so that pU = 0 and B/U has type
                                gamma1.

    Raises NotIncreasingError if gamma2 does not contain gamma1 and StripError when some kappa_i
    is larger than 1.
    """
    check_prime( p )
    kappa = [ gamma2.part(i) - gamma1.part(i) for i in range( max( len(gamma1), len(gamma2) ) ) ]
    if any( k < 0 for k in kappa ):
        raise NotIncreasingError( '{0} does not contain {1}'.format( gamma2, gamma1 ) )
    if any( k > 1 for k in kappa ):
        raise StripError( '{0} -> {1} grows a column by more than one box'.format( gamma1, gamma2 ) )
    B = PModule( p, gamma2 )
    gens = [ tuple( p ** ( l-1 ) if j == i else 0 for j in range( B.rank ) )
             for i, l in enumerate( B.lam ) if kappa[i] == 1 ]
    return B, Submodule( B, tuple( gens ) )


def strip_repeated_tail( seq ):
    """
    Drops final partitions equal to their predecessor: [gamma^0, ..., gamma^k, gamma^k, ...]
    becomes [gamma^0, ..., gamma^k]. This is the sequence analyze() reports for a witness.
    """
    gam = seq.gammas
    k = len( gam )
    while k > 1 and gam[k-1] == gam[k-2]:
        k -= 1
    return seq if k == len( gam ) else PartitionSequence( gam[:k] )


def _window_to_basis( sigs, lam, kappa ):
    """
    Matches tableau columns of the window to adapted basis vectors with the same exponent and
    kappa = has_two; within equal exponents both lists run kappa = 0 first.
    """
    pool = {}
    for i, ( l, k ) in enumerate( zip( lam, kappa ) ):
        pool.setdefault( ( l, k ), [] ).append( i )
    colmap = {}
    for i, sig in enumerate( sigs ):
        key = ( sig.length, int( sig.has_two ) )
        if len( pool.get( key, [] ) ) == 0:
            raise PreconditionError( 'Window column {0} has no matching basis vector'.format( i+1 ) )
        colmap[i] = pool[key].pop( 0 )
    return colmap


def step( window, B, U, debug = False ):
    """
    Builds A in B with pA = U realizing a length-2 window [gamma^0, gamma^1, gamma^2].

    Required Parameters
    -------------------

            window          PartitionSequence

                                LR sequence with r = 2.

            B               PModule

                                Must have type gamma^2.

            U               Submodule of B

                                Must satisfy p U = 0 and quotient_type( B, U ) = gamma^1.

    Optional Parameters
    -------------------

            debug           Boolean

                                [ Default = False ]

                                If True, prints the column matching and the generators produced.

    Returns
    -------

            A               Submodule of B

                                pA = U, type(A) = alpha of the window and B/A of type gamma^0. All
                                three are checked before returning.
    """
    if window.r != 2:
        raise PreconditionError( 'A window has three partitions, got {0}'.format( window ) )
    if not validate_inequalities( window ):
        raise NotLRError( 'Window {0} is not an LR sequence'.format( window ) )
    if not is_p_bounded( U, 1 ):
        raise NotSemisimpleError( 'U = {0} is not killed by p'.format( U ) )
    g0, g1, g2 = window.gammas
    if B.lam != g2:
        raise PreconditionError( 'Ambient type {0} differs from gamma^2 = {1}'.format( B.lam, g2 ) )
    if quotient_type( B, U ) != g1:
        raise PreconditionError( 'B/U has type {0}, expected gamma^1 = {1}'.format( quotient_type( B, U ), g1 ) )

    p = B.p
    lam = B.lam
    basis, kappa = normalize_semisimple( B, U )
    sigs = column_signatures( window )
    colmap = _window_to_basis( sigs, lam, kappa )
    matching = tau21_matching( sigs )
    if matching is None:
        raise PreconditionError( 'Window {0} has no tau21 matching'.format( window ) )

    gens = []
    for i, j in matching.items():
        bi, bj = colmap[i], colmap[j]
        ell, s = lam.part(bi), lam.part(bj)
        if s < ell - 1:
            gens.append( B.combine( [ p ** ( ell-2 ), p ** ( s-1 ) ], [ basis[bi], basis[bj] ] ) )
        else:
            gens.append( B.scale( p ** ( ell-2 ), basis[bi] ) )
    matched = set( matching.values() )
    for i, sig in enumerate( sigs ):
        b = colmap[i]
        if sig.kind == 'both':
            gens.append( B.scale( p ** ( lam.part(b) - 2 ), basis[b] ) )
        elif sig.kind == 'one' and i not in matched:
            gens.append( B.scale( p ** ( lam.part(b) - 1 ), basis[b] ) )
    A = Submodule.from_vectors( B, gens )

    if debug:
        print( 'STEP.DEBUG               window : {0}'.format( window ) )
        print( 'STEP.DEBUG               tau21  : {0}'.format( matching ) )
        print( 'STEP.DEBUG               gens   : {0}'.format( A ) )

    if not same_submodule( p_power( A, 1 ), U ):
        raise VerificationError( 'pA differs from U for window {0}'.format( window ) )
    if submodule_type( A ) != sequence_type( window ).alpha:
        raise VerificationError( 'Type of A is {0}, window needs {1}'.format( submodule_type( A ),
                                                                              sequence_type( window ).alpha ) )
    if quotient_type( B, A ) != g0:
        raise VerificationError( 'B/A has type {0}, expected gamma^0 = {1}'.format( quotient_type( B, A ), g0 ) )
    return A


def realize_full( seq, p, logfile = None, debug = False ):
    """
    Constructs an embedding A in B whose partition sequence is the LR sequence seq.

    Required Parameters
    -------------------

            seq             PartitionSequence

                                Must be an LR sequence; checked before any construction.

            p               Integer

                                Prime.

    Optional Parameters
    -------------------

            logfile         String or None

                                [ Default = None ]

                                File name (and path) of a log file in which to provide feedback on the
                                function's progress. If not provided, progress is only printed when
                                debug is set.

            debug           Boolean

                                [ Default = False ]

                                If True, prints each window as it is handled.

    Returns
    -------

            realization     Realization

                                Verified before it is returned.
    """
    check_prime( p )
    if not validate_inequalities( seq ):
        raise NotLRError( '{0} is not an LR sequence'.format( seq ) )
    # p^h A = 0 past the last strict step, so repeated final partitions are carried by zeros
    core = strip_repeated_tail( seq )
    r = core.r
    gam = core.gammas
    prefix = feedback_prefix( 'realize_full' )
    if logfile is not None:
        write_feedback( '{0}Realizing {1} over p = {2}'.format( prefix, seq, p ), logfile = logfile )

    B = PModule( p, gam[-1] )
    steps = []
    if r == 0:
        chain = [ Submodule.zero( B ) ]
    elif r == 1:
        _, U = initial_semisimple( gam[0], gam[1], p )
        chain = [ U, Submodule.zero( B ) ]
    else:
        _, U = initial_semisimple( gam[r-1], gam[r], p )
        window = PartitionSequence( gam[r-2:r+1] )
        top = step( window, B, U, debug = debug )
        steps.append( RealizationStep( window, B, U, top ) )
        chain = [ None ] * ( r+1 )
        chain[r] = Submodule.zero( B )
        chain[r-1] = U
        chain[r-2] = top
        for h in range( r-3, -1, -1 ):
            pres = quotient_presentation( B, chain[h+2] )
            Bq = pres.quotient
            Uq = pres.image( chain[h+1] )
            window = PartitionSequence( gam[h:h+3] )
            Aq = step( window, Bq, Uq, debug = debug )
            steps.append( RealizationStep( window, Bq, Uq, Aq ) )
            chain[h] = pres.preimage( Aq )
            if debug:
                print( 'REALIZE_FULL.DEBUG       U_{0} = {1}'.format( h, chain[h] ) )

    chain += [ Submodule.zero( B ) ] * ( seq.r - r )
    realization = Realization( seq, B, chain[0], chain, steps )
    realization.verify()
    if analyze( realization.embedding ) != core:
        raise VerificationError( 'Witness for {0} analyzes to {1}'.format( core, analyze( realization.embedding ) ) )
    if logfile is not None:
        write_feedback( '{0}Witness A = {1} in {2}'.format( prefix, realization.sub, B ), logfile = logfile )
    return realization
