"""
Embeddings (A in B) of finite p-modules.

Covers the partition sequence of an embedding, the indecomposable embeddings P(l,m) and Q(l,s)
of submodules killed by p^2, direct sums, and the decomposition of a p^2-bounded embedding into
indecomposables.
"""

################## Importing packages ####################

from collections import Counter
from dataclasses import dataclass
import re

from ..combinat.partitions import Partition, union
from ..combinat.lrseq import PartitionSequence
from ..utils.errors import ( ElementRangeError, InputFormatError, NotP2BoundedError, PrimeMismatchError,
                             SummandRangeError, VerificationError )
from .pmod import ( PModule, Submodule, adapted_coordinates, exponent, normalize_semisimple,
                    p_power, quotient_type, socle_coordinates, socle_rref )


################## Classes ####################


@dataclass( frozen = True )
class Embedding:
    """A submodule 'sub' of the module 'ambient'."""
    ambient: PModule
    sub: Submodule

    def __post_init__( self ):
        if self.sub.ambient != self.ambient:
            raise ElementRangeError( 'Submodule of {0} does not live in {1}'.format( self.sub.ambient,
                                                                                    self.ambient ) )

    @classmethod
    def from_generators( cls, p, lam, gens ):
        B = PModule( p, lam )
        return cls( B, Submodule( B, tuple( tuple(g) for g in gens ) ) )

    @classmethod
    def from_json( cls, obj ):
        """Reads {'module': {'p': .., 'lambda': [..]}, 'generators': [[..], ..]}."""
        if not isinstance( obj, dict ) or 'module' not in obj:
            raise InputFormatError( 'An embedding needs a "module" entry, got {0!r}'.format( obj ) )
        B = PModule.from_json( obj['module'] )
        gens = obj.get( 'generators', [] )
        if not isinstance( gens, list ) or not all( isinstance( g, list ) and
                                                    all( isinstance( c, int ) and not isinstance( c, bool ) for c in g )
                                                    for g in gens ):
            raise InputFormatError( 'Generators are written as lists of integers, got {0!r}'.format( gens ) )
        return cls( B, Submodule( B, tuple( tuple(g) for g in gens ) ) )

    def to_json( self ):
        return { 'module' : self.ambient.to_json(), 'generators' : self.sub.to_json() }

    @property
    def p( self ):
        return self.ambient.p

    def __str__( self ):
        return '{0} in {1}'.format( self.sub, self.ambient )


_SUMMAND_RE = re.compile( r'^\s*([PQ])\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*$' )


@dataclass( frozen = True )
class Summand:
    """
    Indecomposable embedding: P(l,m) is (p^(l-m)) in R/(p^l), 0 <= m <= min(l,2);
    Q(l,s) is ((p^(l-2), p^(s-1))) in R/(p^l) + R/(p^s), 1 <= s < l-1.
    """
    kind: str
    ell: int
    m: int = 0
    s: int = 0

    def __post_init__( self ):
        if self.kind == 'P':
            if self.ell < 1:
                raise SummandRangeError( 'P(l,m) needs l >= 1, got l={0}'.format( self.ell ) )
            if self.ell == 1 and self.m == 2:
                raise SummandRangeError( 'P(1,2) does not exist: its generator would be p^(-1). The range '
                                         '0 <= m <= max{l,2} is read as 0 <= m <= min{l,2}.' )
            if not 0 <= self.m <= min( self.ell, 2 ):
                raise SummandRangeError( 'P(l,m) needs 0 <= m <= min(l,2), got P({0},{1})'.format(
                                                                                    self.ell, self.m ) )
        elif self.kind == 'Q':
            if not 1 <= self.s < self.ell - 1:
                raise SummandRangeError( 'Q(l,s) needs 1 <= s < l-1, got Q({0},{1})'.format( self.ell, self.s ) )
        else:
            raise SummandRangeError( 'Summand kind must be P or Q, got {0!r}'.format( self.kind ) )

    @classmethod
    def P( cls, ell, m ):
        return cls( 'P', ell, m = m )

    @classmethod
    def Q( cls, ell, s ):
        return cls( 'Q', ell, s = s )

    @classmethod
    def parse( cls, text ):
        match = _SUMMAND_RE.match( text )
        if match is None:
            raise SummandRangeError( 'Cannot read summand from {0!r}'.format( text ) )
        kind, a, b = match.group(1), int( match.group(2) ), int( match.group(3) )
        return cls.P( a, b ) if kind == 'P' else cls.Q( a, b )

    @property
    def second( self ):
        return self.m if self.kind == 'P' else self.s

    @property
    def sort_key( self ):
        return ( -self.ell, self.kind != 'Q', -self.second )

    @property
    def ambient_type( self ):
        return Partition( (self.ell,) ) if self.kind == 'P' else Partition( (self.ell, self.s) )

    def __str__( self ):
        return '{0}({1},{2})'.format( self.kind, self.ell, self.second )


@dataclass( frozen = True )
class SummandMultiset:
    """Multiset of indecomposables, stored as sorted (summand, multiplicity) pairs."""
    items: tuple = ()

    def __post_init__( self ):
        if any( k < 1 for _, k in self.items ):
            raise SummandRangeError( 'Multiplicities must be positive' )
        object.__setattr__( self, 'items', tuple( sorted( self.items, key = lambda sk: sk[0].sort_key ) ) )

    @classmethod
    def from_summands( cls, summands ):
        return cls( tuple( Counter( summands ).items() ) )

    @classmethod
    def parse( cls, text ):
        """Reads 'Q(4,2) + P(3,1)'; '0' or '' is the empty multiset."""
        text = text.strip()
        if text in ( '', '0' ):
            return cls()
        return cls.from_summands( Summand.parse( part ) for part in text.split('+') )

    @property
    def counts( self ):
        return dict( self.items )

    def summands( self ):
        return [ s for s, k in self.items for _ in range(k) ]

    def to_json( self ):
        return [ str(s) for s in self.summands() ]

    def __len__( self ):
        return sum( k for _, k in self.items )

    def __str__( self ):
        summands = self.summands()
        return ' + '.join( str(s) for s in summands ) if len(summands) > 0 else '0'


################## Functions ####################


def model( s, p ):
    """The standard embedding of the indecomposable s over the prime p."""
    if s.kind == 'P':
        B = PModule( p, ( s.ell, ) )
        gens = ( ( p ** ( s.ell - s.m ), ), ) if s.m > 0 else ()
        return Embedding( B, Submodule( B, gens ) )
    B = PModule( p, ( s.ell, s.s ) )
    return Embedding( B, Submodule( B, ( ( p ** ( s.ell - 2 ), p ** ( s.s - 1 ) ), ) ) )


def analyze( E ):
    """
    Partition sequence of an embedding.

    Required Parameters
    -------------------

            E               Embedding

                                A in B.

    Returns
    -------

            seq             PartitionSequence

                                [type(B/p^h A)] for h = 0..r, with r the exponent of A (least r with
                                p^r A = 0). The last term is always the type of B, and seq is an LR
                                sequence of type (type(A), type(B), type(B/A)).
    """
    r = exponent( E.sub )
    return PartitionSequence( tuple( quotient_type( E.ambient, p_power( E.sub, h ) ) for h in range( r+1 ) ) )


def direct_sum( E1, E2 ):
    """
    Direct sum of two embeddings over the same prime.

    Required Parameters
    -------------------

            E1, E2          Embedding

    Returns
    -------

            E               Embedding

                                A1 + A2 in B1 + B2. The cyclic summands of the ambient modules are
                                merged and re-sorted by decreasing exponent (stable, so the columns of
                                E1 come first on ties) and the generators are permuted to match.
    """
    if E1.p != E2.p:
        raise PrimeMismatchError( 'Cannot add embeddings over p={0} and p={1}'.format( E1.p, E2.p ) )
    lam = E1.ambient.lam.parts + E2.ambient.lam.parts
    perm = sorted( range( len(lam) ), key = lambda k: -lam[k] )
    B = PModule( E1.p, Partition( tuple( lam[k] for k in perm ) ) )
    n1 = E1.ambient.rank
    n2 = E2.ambient.rank
    # E1 on the first n1 coordinates, E2 on the rest, then permuted like lam
    padded = [ tuple(g) + (0,) * n2 for g in E1.sub.gens ] + [ (0,) * n1 + tuple(g) for g in E2.sub.gens ]
    gens = tuple( tuple( x[perm[k]] for k in range( len(lam) ) ) for x in padded )
    return Embedding( B, Submodule( B, gens ) )


def zero_embedding( p ):
    B = PModule( p, () )
    return Embedding( B, Submodule.zero( B ) )


def multiset_model( M, p ):
    """Direct sum of the models of all summands of M."""
    E = zero_embedding( p )
    for s in M.summands():
        E = direct_sum( E, model( s, p ) )
    return E


def summand_sequence( s ):
    """Partition sequence of an indecomposable, in closed form."""
    if s.kind == 'P':
        return PartitionSequence( tuple( Partition( ( s.ell - s.m + h, ) ) for h in range( s.m + 1 ) ) )
    return PartitionSequence( ( Partition( ( s.ell - 1, s.s - 1 ) ), Partition( ( s.ell - 1, s.s ) ),
                                Partition( ( s.ell, s.s ) ) ) )


def sequence_union( seq1, seq2 ):
    """Componentwise union, the shorter sequence padded with its last term."""
    r = max( seq1.r, seq2.r )
    pad = lambda seq, h: seq.gammas[ min( h, seq.r ) ]
    return PartitionSequence( tuple( union( pad( seq1, h ), pad( seq2, h ) ) for h in range( r+1 ) ) )


def multiset_sequence( M ):
    """Union of the summand sequences; the partition sequence of multiset_model(M, p)."""
    seq = PartitionSequence( ( Partition(), ) )
    for s in M.summands():
        seq = sequence_union( seq, summand_sequence( s ) )
    return seq


################## Decomposition ####################


def _solve_unit_rows( S, p ):
    """
    For the rows S[k] (vectors over F_p spanning F_p^K) returns, for each coordinate c, a
    coefficient vector v_c over the rows with sum_k v_c[k] S[k] = e_c.
    """
    nrows = len( S )
    ncols = len( S[0] ) if nrows > 0 else 0
    # Augment each row with the identity to track combinations
    rows = [ [ x % p for x in S[k] ] + [ 1 if j == k else 0 for j in range( nrows ) ] for k in range( nrows ) ]
    found = {}
    used = set()
    for c in range( ncols ):
        k = next( ( k for k in range( nrows ) if k not in used and rows[k][c] != 0 ), None )
        if k is None:
            raise VerificationError( 'Socle of pA is not spanned by p times the generators of A' )
        inv = pow( rows[k][c], -1, p )
        rows[k] = [ (a * inv) % p for a in rows[k] ]
        for k2 in range( nrows ):
            if k2 != k and rows[k2][c] != 0:
                f = rows[k2][c]
                rows[k2] = [ (a - f * b) % p for a, b in zip( rows[k2], rows[k] ) ]
        used.add( k )
        found[c] = k
    return { c : rows[k][ncols:] for c, k in found.items() }


def _column_op( rows, i, q, f, p ):
    """col_i -= f * col_q on every row (socle coordinates mod p)."""
    for row in rows:
        if row[q] != 0:
            row[i] = ( row[i] - f * row[q] ) % p


def decompose( E, debug = False ):
    """
    Decomposes a p^2-bounded embedding into indecomposables P(l,m) and Q(l,s).

    Required Parameters
    -------------------

            E               Embedding

                                p^2 A must vanish, otherwise a NotP2BoundedError is raised.

    Optional Parameters
    -------------------

            debug           Boolean

                                [ Default = False ]

                                If True, prints the adapted basis data and each pairing decision.

    Returns
    -------

            multiset        SummandMultiset

                                The union of the summands' partition sequences is checked against
                                analyze( E ); a mismatch raises a VerificationError.
    """
    B = E.ambient
    A = E.sub
    p = B.p
    lam = B.lam
    n = B.rank
    if exponent( A ) > 2:
        raise NotP2BoundedError( 'Submodule {0} is not killed by p^2 (exponent {1})'.format( A, exponent(A) ) )

    # Stage 1: adapted basis for pA; K holds the columns of the socle of pA
    basis, kappa = normalize_semisimple( B, p_power( A, 1 ) )
    K = [ c for c in range( n ) if kappa[c] == 1 ]
    gens = [ adapted_coordinates( B, basis, g ) for g in A.gens ]
    if debug:
        print( 'DECOMPOSE.DEBUG          kappa : {0}'.format( kappa ) )

    # Lifts a_c in A with p a_c = p^(lam_c - 1) b_c, and the order-p part W of A
    S = [ [ socle_coordinates( B, B.scale( p, g ) )[c] for c in K ] for g in gens ]
    lifts = {}
    if len(K) > 0:
        combos = _solve_unit_rows( S, p )
        for t, c in enumerate( K ):
            lifts[c] = B.combine( combos[t], gens )
    W = []
    for k, g in enumerate( gens ):
        w = B.combine( [1] + [ -S[k][t] for t in range( len(K) ) ], [g] + [ lifts[c] for c in K ] )
        W.append( socle_coordinates( B, w ) )

    # Order-p residues of the lifts
    residues = {}
    for c in K:
        a = lifts[c]
        r = [ ( a[j] // p ** ( lam.part(j) - 1 ) ) % p for j in range( n ) ]
        r[c] = ( ( a[c] - p ** ( lam.part(c) - 2 ) ) // p ** ( lam.part(c) - 1 ) ) % p
        residues[c] = r

    # W modulo pA, made into unit vectors by automorphisms
    for w in W:
        for c in K:
            w[c] = 0
    wpivots = socle_rref( B, W )
    residue_rows = [ residues[c] for c in K ]
    for q, w in wpivots.items():
        for i in range( n ):
            if i != q and w[i] != 0:
                _column_op( residue_rows, i, q, w[i], p )
                _column_op( [ w2 for q2, w2 in wpivots.items() if q2 != q ], i, q, w[i], p )
                w[i] = 0
    for r in residue_rows:
        for j in list( K ) + list( wpivots ):
            r[j] = 0

    # Stage 2: pair the pA columns, longest first
    summands = []
    used = set()
    order = sorted( K, key = lambda c: ( -lam.part(c), c ) )
    for pos, c in enumerate( order ):
        lc = lam.part(c)
        r = residues[c]
        # only unused columns shorter than lc - 1 can pair with c
        for j in range( n ):
            if j in used or lam.part(j) >= lc - 1:
                r[j] = 0
        support = [ j for j in range( n ) if r[j] != 0 ]
        if len(support) == 0:
            summands.append( Summand.P( lc, 2 ) )
            if debug:
                print( 'DECOMPOSE.DEBUG          column {0: >3} -> P({1},2)'.format( c, lc ) )
            continue
        # shortest partner, lowest index on ties
        j = min( support, key = lambda j: ( lam.part(j), j ) )
        inv = pow( r[j], -1, p )
        # column operations clearing the rest of the support, applied to the later rows too
        rest = [ residues[c2] for c2 in order[pos+1:] ]
        for i in support:
            if i != j:
                _column_op( rest + [ r ], i, j, ( r[i] * inv ) % p, p )
        # column j is taken
        for r2 in rest:
            r2[j] = 0
        used.add( j )
        summands.append( Summand.Q( lc, lam.part(j) ) )
        if debug:
            print( 'DECOMPOSE.DEBUG          column {0: >3} -> Q({1},{2}) with column {3}'.format(
                                                                        c, lc, lam.part(j), j ) )

    # order-p generators outside pA
    for q in wpivots:
        summands.append( Summand.P( lam.part(q), 1 ) )
    for j in range( n ):
        if j not in used and j not in wpivots and kappa[j] == 0:
            summands.append( Summand.P( lam.part(j), 0 ) )

    M = SummandMultiset.from_summands( summands )
    ambient = Partition( tuple( sorted( ( x for s in M.summands() for x in s.ambient_type ), reverse = True ) ) )
    if ambient != lam:
        raise VerificationError( 'Summands {0} do not fill the ambient type {1}'.format( M, lam ) )
    if multiset_sequence( M ) != analyze( E ):
        raise VerificationError( 'Partition sequence of {0} does not match the embedding {1}'.format( M, E ) )
    return M
