"""
Exact arithmetic in finite p-modules B = M(lambda) = sum_i R/(p^lambda_i).

Elements are tuples of integers, coordinate i reduced mod p^lambda_i. R is the integers localized
at p; every computation happens modulo powers of p, so plain integers suffice. Homomorphisms of
B act on row vectors: x -> x M, with row j of M the image of the basis vector e_j.
"""

################## Importing packages ####################

from dataclasses import dataclass, field
from itertools import product

import numpy as np

from ..combinat.partitions import Partition, conjugate
from ..utils.errors import ( ElementRangeError, InputFormatError, NotSemisimpleError, PrimeMismatchError,
                             VerificationError )
from ..utils.utils import check_prime, is_prime, valuation
from .snf import smith_normal_form


################## Classes ####################


@dataclass( frozen = True )
class PModule:
    """
    The p-module M(lam) with basis e_1, ..., e_n, order(e_i) = p^lam_i.
    """
    p: int
    lam: Partition

    def __post_init__( self ):
        check_prime( self.p )
        if not isinstance( self.lam, Partition ):
            object.__setattr__( self, 'lam', Partition( tuple( self.lam ) ) )

    @classmethod
    def from_json( cls, obj ):
        if not isinstance( obj, dict ) or 'p' not in obj or 'lambda' not in obj:
            raise InputFormatError( 'A module is written as {{"p": .., "lambda": [..]}}, got {0!r}'.format( obj ) )
        if isinstance( obj['p'], bool ) or not isinstance( obj['p'], int ):
            raise InputFormatError( 'The prime must be an integer, got {0!r}'.format( obj['p'] ) )
        return cls( obj['p'], Partition.from_json( obj['lambda'] ) )

    def to_json( self ):
        return { 'p' : self.p, 'lambda' : self.lam.to_json() }

    @property
    def rank( self ):
        return len( self.lam )

    @property
    def moduli( self ):
        return tuple( self.p ** l for l in self.lam )

    @property
    def order( self ):
        return self.p ** self.lam.weight

    def zero( self ):
        return (0,) * self.rank

    def basis( self ):
        return [ tuple( 1 if j == i else 0 for j in range( self.rank ) ) for i in range( self.rank ) ]

    def reduce( self, x ):
        """Reduces an integer vector into canonical coordinates."""
        if len(x) != self.rank:
            raise ElementRangeError( 'Element {0} has {1} coordinates, module {2} needs {3}'.format(
                                                                    tuple(x), len(x), self, self.rank ) )
        return tuple( int(c) % m for c, m in zip( x, self.moduli ) )

    def check_element( self, x ):
        """Returns x as a tuple if it is in canonical range, raises ElementRangeError otherwise."""
        if len(x) != self.rank or any( isinstance(c, bool) for c in x ):
            raise ElementRangeError( 'Element {0} does not fit module {1}'.format( list(x), self ) )
        x = tuple( int(c) for c in x )
        if any( c < 0 or c >= m for c, m in zip( x, self.moduli ) ):
            raise ElementRangeError( 'Element {0} is out of range for moduli {1}'.format( list(x),
                                                                                       list(self.moduli) ) )
        return x

    def add( self, x, y ):
        return tuple( (a + b) % m for a, b, m in zip( x, y, self.moduli ) )

    def scale( self, c, x ):
        return tuple( (c * a) % m for a, m in zip( x, self.moduli ) )

    def combine( self, coeffs, vectors ):
        """sum_k coeffs[k] * vectors[k], reduced."""
        out = [0] * self.rank
        for c, v in zip( coeffs, vectors ):
            if c != 0:
                for i in range( self.rank ):
                    out[i] += c * v[i]
        return self.reduce( out )

    def order_exponent( self, x ):
        """Least e with p^e x = 0."""
        e = 0
        for c, l in zip( x, self.lam ):
            if c % self.p ** l != 0:
                e = max( e, l - valuation( c, self.p ) )
        return e

    def index( self, x ):
        """Mixed-radix index of a reduced element, 0 <= index < order."""
        out = 0
        for c, m in zip( x, self.moduli ):
            out = out * m + c
        return out

    def elements( self ):
        """All elements, in index order. Only sensible for small modules."""
        return product( *[ range(m) for m in self.moduli ] )

    def apply( self, M, x ):
        """Image x M of x under the homomorphism with matrix M."""
        out = [0] * self.rank
        for j, c in enumerate( x ):
            if c != 0:
                for i in range( self.rank ):
                    out[i] += c * M[j][i]
        return self.reduce( out )

    def __str__( self ):
        return 'M_{0}({1})'.format( self.p, self.lam )


@dataclass( frozen = True )
class Submodule:
    """Submodule of 'ambient' generated by 'gens' (tuples in canonical range)."""
    ambient: PModule
    gens: tuple = ()

    def __post_init__( self ):
        gens = tuple( self.ambient.check_element( g ) for g in self.gens )
        object.__setattr__( self, 'gens', gens )

    @classmethod
    def zero( cls, ambient ):
        return cls( ambient, () )

    @classmethod
    def from_vectors( cls, ambient, vectors ):
        """Submodule generated by arbitrary integer vectors, reduced first; zero vectors are dropped."""
        gens = [ ambient.reduce( v ) for v in vectors ]
        return cls( ambient, tuple( g for g in gens if any( g ) ) )

    @property
    def p( self ):
        return self.ambient.p

    def element_set( self ):
        """All elements of the submodule as a set of tuples."""
        B = self.ambient
        span = { B.zero() }
        for g in self.gens:
            multiples = [ B.scale( c, g ) for c in range( self.p ** B.order_exponent( g ) ) ]
            span = { B.add( s, m ) for s in span for m in multiples }
        return span

    def to_json( self ):
        return [ list(g) for g in self.gens ]

    def __str__( self ):
        return '<' + ', '.join( str( list(g) ) for g in self.gens ) + '>'


@dataclass( frozen = True )
class QuotientPresentation:
    """
    B/W presented as the p-module 'quotient'.

    projection is the n x k matrix sending x in B to (x projection)_t mod p^mu_t; lift is the
    k x n matrix whose row t is a representative in B of the t-th quotient generator.
    """
    ambient: PModule
    sub: Submodule
    quotient: PModule
    projection: list = field( default_factory = list )
    lift: list = field( default_factory = list )

    @property
    def quotient_type( self ):
        return self.quotient.lam

    def project( self, x ):
        k = self.quotient.rank
        out = [ sum( x[j] * self.projection[j][t] for j in range( len(x) ) ) for t in range( k ) ]
        return self.quotient.reduce( out )

    def lift_element( self, y ):
        return self.ambient.combine( y, self.lift )

    def contains( self, x ):
        """x in W."""
        return not any( self.project( x ) )

    def image( self, S ):
        """Image of a submodule of B in the quotient."""
        return Submodule.from_vectors( self.quotient, [ self.project( g ) for g in S.gens ] )

    def preimage( self, S ):
        """Inverse image in B of a submodule of the quotient: lifts of its generators plus W."""
        gens = [ self.lift_element( g ) for g in S.gens ] + list( self.sub.gens )
        return Submodule.from_vectors( self.ambient, gens )

    def verify( self ):
        """projection o lift = id on quotient generators; W maps to zero."""
        for t in range( self.quotient.rank ):
            unit = tuple( 1 if s == t else 0 for s in range( self.quotient.rank ) )
            if self.project( self.lift[t] ) != unit:
                raise VerificationError( 'Lift of quotient generator {0} does not project back'.format(t) )
        for g in self.sub.gens:
            if not self.contains( g ):
                raise VerificationError( 'Generator {0} of W survives in the quotient'.format( g ) )
        return True


################## Helpers ####################


def _relation_snf( B, W ):
    rows = [ [ B.p ** l if j == i else 0 for j in range( B.rank ) ] for i, l in enumerate( B.lam ) ]
    rows += [ list(g) for g in W.gens ]
    return smith_normal_form( rows, ncols = B.rank )


def _require_same_module( B, W ):
    if W.ambient != B:
        if W.ambient.p != B.p:
            raise PrimeMismatchError( 'Submodule over p={0} used with module over p={1}'.format( W.p, B.p ) )
        raise ElementRangeError( 'Submodule of {0} used with module {1}'.format( W.ambient, B ) )


################## Functions ####################


def quotient_presentation( B, W ):
    """
    Presents B/W through the Smith normal form of the relation matrix [ diag(p^lam_i) ; gens of W ].

    Required Parameters
    -------------------

            B               PModule

            W               Submodule of B

    Returns
    -------

            pres            QuotientPresentation

                                Quotient generators are sorted by decreasing exponent; trivial
                                factors (unit diagonal entries) are dropped.
    """
    _require_same_module( B, W )
    snf = _relation_snf( B, W )
    diag = snf.diagonal
    keep = [ j for j in range( B.rank ) if abs( diag[j] ) != 1 ]
    exps = { j : valuation( diag[j], B.p ) for j in keep }
    keep = sorted( keep, key = lambda j: -exps[j] )
    quotient = PModule( B.p, Partition( tuple( exps[j] for j in keep ) ) )

    Q = snf.Q
    Qinv = snf.Qinv
    projection = [ [ int( Q[i, j] ) for j in keep ] for i in range( B.rank ) ]
    lift = [ B.reduce( [ int(c) for c in Qinv[j, :] ] ) for j in keep ]
    pres = QuotientPresentation( B, W, quotient, projection, lift )
    pres.verify()
    return pres


def quotient_type( B, W ):
    """Exponent type of B/W."""
    _require_same_module( B, W )
    diag = _relation_snf( B, W ).diagonal
    exps = [ valuation( d, B.p ) for d in diag if abs(d) != 1 ]
    return Partition( tuple( sorted( exps, reverse = True ) ) )


def contains_element( A, x ):
    """x in A."""
    B = A.ambient
    return quotient_presentation( B, A ).contains( B.reduce( x ) )


def contains_submodule( A, S ):
    """S subset of A (both in the same ambient module)."""
    pres = quotient_presentation( A.ambient, A )
    return all( pres.contains( g ) for g in S.gens )


def same_submodule( A, S ):
    return contains_submodule( A, S ) and contains_submodule( S, A )


def p_power( A, h ):
    """p^h A, generated by p^h times each generator."""
    if h == 0:
        return A
    return Submodule.from_vectors( A.ambient, [ A.ambient.scale( A.p ** h, g ) for g in A.gens ] )


def exponent( A ):
    """Least r with p^r A = 0."""
    return max( ( A.ambient.order_exponent( g ) for g in A.gens ), default = 0 )


def is_p_bounded( A, k ):
    """p^k A = 0."""
    return exponent( A ) <= k


def submodule_order_exponent( A ):
    """log_p |A|."""
    return A.ambient.lam.weight - quotient_type( A.ambient, A ).weight


def submodule_type( A ):
    """
    Type of A read off the chain p^h A: the h-th part of its conjugate is log_p |p^(h-1)A / p^h A|.
    """
    sizes = [ submodule_order_exponent( p_power( A, h ) ) for h in range( exponent( A ) + 1 ) ]
    layers = [ sizes[h-1] - sizes[h] for h in range( 1, len(sizes) ) ]
    return conjugate( Partition( tuple( layers ) ) )


def socle_coordinates( B, x ):
    """
    Coordinates of a socle element x (p x = 0) in the basis p^(lam_i - 1) e_i, as residues mod p.
    """
    return [ ( c // B.p ** ( l-1 ) ) % B.p for c, l in zip( x, B.lam ) ]


def socle_rref( B, rows ):
    """
    Full row reduction over F_p. Each new pivot is the support column of minimal (lam_j, j);
    returns {pivot column: normalized row}. Every pivot row is supported on columns with
    lam_j >= lam_pivot and vanishes on the other pivot columns.
    """
    p = B.p
    pivots = {}
    for row in rows:
        r = [ x % p for x in row ]
        for c, pv in pivots.items():
            if r[c] != 0:
                f = r[c]
                r = [ (a - f * b) % p for a, b in zip( r, pv ) ]
        support = [ j for j in range( B.rank ) if r[j] != 0 ]
        if len(support) == 0:
            continue
        c = min( support, key = lambda j: ( B.lam.part(j), j ) )
        inv = pow( r[c], -1, p )
        r = [ (a * inv) % p for a in r ]
        for c2, pv in pivots.items():
            if pv[c] != 0:
                f = pv[c]
                pivots[c2] = [ (a - f * b) % p for a, b in zip( pv, r ) ]
        pivots[c] = r
    return dict( sorted( pivots.items() ) )


def normalize_semisimple( B, U, debug = False ):
    """
    Adapted basis for a semisimple submodule U of B.

    Required Parameters
    -------------------

            B               PModule

            U               Submodule of B

                                Must satisfy p U = 0, otherwise a NotSemisimpleError is raised.

    Optional Parameters
    -------------------

            debug           Boolean

                                [ Default = False ]

                                If True, prints the pivot rows of the socle reduction.

    Returns
    -------

            basis           List of tuples

                                Basis b_1, ..., b_n of B with order(b_i) = p^lam_i and B the direct sum
                                of the <b_i>. The basis matrix T (rows b_i) satisfies (T - I)^2 = 0,
                                so coordinates in it are x (I - (T - I)); see adapted_coordinates.

            kappa           List of 0/1

                                U is spanned by p^(lam_i - 1) b_i over the i with kappa_i = 1.
    """
    _require_same_module( B, U )
    for g in U.gens:
        if any( B.scale( B.p, g ) ):
            raise NotSemisimpleError( 'Generator {0} of U is not killed by p'.format( list(g) ) )

    pivots = socle_rref( B, [ socle_coordinates( B, g ) for g in U.gens ] )
    if debug:
        for c, row in pivots.items():
            print( 'NORMALIZE_SEMISIMPLE.DEBUG    pivot {0: >3} : {1}'.format( c, row ) )

    basis = B.basis()
    kappa = [0] * B.rank
    for c, row in pivots.items():
        lc = B.lam.part(c)
        basis[c] = B.reduce( [ row[j] * B.p ** ( B.lam.part(j) - lc ) if row[j] != 0 else 0
                               for j in range( B.rank ) ] )
        kappa[c] = 1

    # Postcondition: U equals the span of the claimed socle generators, with the right quotient
    claimed = Submodule.from_vectors( B, [ B.scale( B.p ** ( B.lam.part(c) - 1 ), basis[c] )
                                           for c in range( B.rank ) if kappa[c] == 1 ] )
    if not same_submodule( U, claimed ):
        raise VerificationError( 'Adapted basis does not reproduce U = {0}'.format( U ) )
    expected = Partition( tuple( sorted( ( l - k for l, k in zip( B.lam, kappa ) ), reverse = True ) ) )
    if quotient_type( B, U ) != expected:
        raise VerificationError( 'Quotient type of U does not match kappa = {0}'.format( kappa ) )
    return basis, kappa


def adapted_coordinates( B, basis, x ):
    """
    Coordinates of x in a basis from normalize_semisimple: y = x (I - N) with N = T - I, N^2 = 0.
    """
    N = [ [ basis[i][j] - ( 1 if i == j else 0 ) for j in range( B.rank ) ] for i in range( B.rank ) ]
    y = [ x[j] - sum( x[i] * N[i][j] for i in range( B.rank ) ) for j in range( B.rank ) ]
    return B.reduce( y )


################## Automorphisms ####################


def _primitive_root( p ):
    """Smallest primitive root modulo the odd prime p."""
    factors = [ q for q in range( 2, p ) if (p-1) % q == 0 and is_prime( q ) ]
    return next( g for g in range( 2, p ) if all( pow( g, (p-1) // q, p ) != 1 for q in factors ) )


def _unit_generators( p, l ):
    """Generators of the unit group of Z/p^l."""
    if l == 0 or ( p == 2 and l == 1 ):
        return []
    if p == 2:
        return [ -1, 5 ] if l >= 3 else [ -1 ]
    g = _primitive_root( p )
    # A primitive root mod p^2 generates the units mod every p^l
    if l >= 2 and pow( g, p-1, p*p ) == 1:
        g += p
    return [ g ]


def elementary_automorphisms( B ):
    """
    Generating set of Aut(B) as matrices (rows = images of e_j): transvections
    e_j -> e_j + p^max(0, lam_i - lam_j) e_i, unit scalings of one e_j, and swaps of summands of
    equal exponent.
    """
    n = B.rank
    lam = B.lam
    eye = [ [ 1 if i == j else 0 for j in range(n) ] for i in range(n) ]
    gens = []
    for j in range( n ):
        for i in range( n ):
            if i != j:
                M = [ row[:] for row in eye ]
                M[j][i] = B.p ** max( 0, lam.part(i) - lam.part(j) ) % B.moduli[i]
                if M[j][i] != 0:
                    gens.append( M )
    for j in range( n ):
        for u in _unit_generators( B.p, lam.part(j) ):
            M = [ row[:] for row in eye ]
            M[j][j] = u % B.moduli[j]
            gens.append( M )
    for j in range( n ):
        for i in range( j+1, n ):
            if lam.part(i) == lam.part(j):
                M = [ row[:] for row in eye ]
                M[i], M[j] = M[j], M[i]
                gens.append( M )
    return gens


def compose_automorphisms( B, M1, M2 ):
    """Matrix of x -> (x M1) M2."""
    return [ list( B.apply( M2, row ) ) for row in M1 ]


def random_automorphism( B, rng = None, steps = 20 ):
    """
    Product of 'steps' elementary automorphisms drawn with a numpy Generator (default_rng() if
    rng is None).
    """
    if rng is None:
        rng = np.random.default_rng()
    M = [ list(e) for e in B.basis() ]
    gens = elementary_automorphisms( B )
    if len(gens) == 0:
        return M
    for _ in range( steps ):
        M = compose_automorphisms( B, M, gens[ int( rng.integers( len(gens) ) ) ] )
    return M


def apply_to_submodule( M, A ):
    """Image of A under the automorphism M."""
    return Submodule.from_vectors( A.ambient, [ A.ambient.apply( M, g ) for g in A.gens ] )
