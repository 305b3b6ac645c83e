"""
Brute-force census of all submodules of a small p-module.

Elements are handled as rows of an integer array, indexed in mixed radix; a submodule is
identified by the sorted array of its element indices.
"""

################## Importing packages ####################

from collections import deque
from dataclasses import dataclass, field

import numpy as np
from astropy.table import Table

from ..algebra.embed import Embedding, analyze
from ..algebra.pmod import Submodule, submodule_type
from ..utils.config import read_config, config_value
from ..utils.errors import BoundExceededError


################## Classes ####################


@dataclass( frozen = True )
class CensusEntry:
    """One submodule of the census with its invariants."""
    sub: Submodule
    elements: frozenset
    alpha: object
    gamma: object
    sequence: object

    @property
    def triple( self ):
        return ( self.alpha, self.gamma, self.sequence )


@dataclass
class SubgroupCensus:
    """All submodules of 'ambient', each exactly once."""
    ambient: object
    entries: list = field( default_factory = list )

    def __len__( self ):
        return len( self.entries )

    def __iter__( self ):
        return iter( self.entries )

    def sequences_by_type( self ):
        """{(alpha, gamma): set of partition sequences occurring with that type}"""
        out = {}
        for e in self.entries:
            out.setdefault( ( e.alpha, e.gamma ), set() ).add( e.sequence )
        return out

    def triples( self ):
        return { e.triple for e in self.entries }


class ElementTable:
    """
    Array of all elements of B (row k is the element with index k) plus vectorized index
    arithmetic.
    """

    def __init__( self, B ):
        self.B = B
        self.moduli = np.array( B.moduli, dtype = np.int64 )
        self.elements = np.array( list( B.elements() ), dtype = np.int64 ).reshape( B.order, B.rank )
        weights = [ int( np.prod( B.moduli[i+1:] ) ) for i in range( B.rank ) ]
        self.weights = np.array( weights, dtype = np.int64 )

    def indices( self, X ):
        """Indices of the (unreduced) integer rows of X."""
        X = np.asarray( X, dtype = np.int64 )
        if self.B.rank == 0:
            return np.zeros( 1, dtype = np.int64 )
        X = X.reshape( -1, self.B.rank )
        return ( X % self.moduli ) @ self.weights

    def multiples( self, k ):
        """Indices of 0, x, 2x, ..., up to the order of the element x with index k."""
        x = self.elements[k]
        out = [ 0 ]
        cur = x.copy()
        idx = int( self.indices( cur )[0] )
        while idx != 0:
            out.append( idx )
            cur = ( cur + x ) % self.moduli
            idx = int( self.indices( cur )[0] )
        return np.array( out, dtype = np.int64 )

    def span_with( self, S, k ):
        """Sorted indices of S + <x_k> for the index array S of a subgroup."""
        mult = self.elements[ self.multiples( k ) ]
        sums = self.elements[S][:, None, :] + mult[None, :, :]
        return np.unique( self.indices( sums ) )

    def image( self, M, S ):
        """Sorted indices of the image of the index set S under the homomorphism M."""
        if self.B.rank == 0:
            return np.array( sorted(S), dtype = np.int64 )
        X = self.elements[ np.asarray( sorted(S), dtype = np.int64 ) ]
        return np.unique( self.indices( X @ np.array( M, dtype = np.int64 ) ) )


################## Functions ####################


def iter_subgroup_index_sets( B, table = None ):
    """
    Generates (index array, generator indices) for every subgroup of B once, by closing S + <x>
    breadth first from the zero subgroup.
    """
    if table is None:
        table = ElementTable( B )
    start = np.array( [0], dtype = np.int64 )
    seen = { start.tobytes() }
    queue = deque( [ ( start, [] ) ] )
    while queue:
        S, gens = queue.popleft()
        yield S, gens
        inside = np.zeros( B.order, dtype = bool )
        inside[S] = True
        for k in range( B.order ):
            if inside[k]:
                continue
            T = table.span_with( S, k )
            key = T.tobytes()
            if key not in seen:
                seen.add( key )
                queue.append( ( T, gens + [k] ) )


def enumerate_submodules( B, max_order = None, config = None, debug = False ):
    """
    Lists every submodule of B with its type, quotient type and partition sequence.

    Required Parameters
    -------------------

            B               PModule

    Optional Parameters
    -------------------

            max_order       Integer or None

                                [ Default = None ]

                                Largest allowed order |B|. If set to None, will use value imported from
                                the provided config file as max_census_order. A larger B raises a
                                BoundExceededError.

            config          String, ConfigParser or None

                                [ Default = None ]

                                The file name (with path) of the configuration file. If None, package
                                defaults are used.

            debug           Boolean

                                [ Default = False ]

                                If True, prints the number of submodules found.

    Returns
    -------

            census          SubgroupCensus

                                Entries sorted by (order, element indices).

    Config File Parameters Used
    ---------------------------

            [COMPUTING]     max_census_order
    """
    conf = read_config( config )
    max_order = config_value( conf, 'COMPUTING', 'max_census_order', max_order )
    if B.order > max_order:
        raise BoundExceededError( '|B| = {0} exceeds the census bound {1}'.format( B.order, max_order ) )

    table = ElementTable( B )
    found = sorted( iter_subgroup_index_sets( B, table ), key = lambda sg: ( len(sg[0]), tuple( sg[0] ) ) )
    entries = []
    for S, gens in found:
        sub = Submodule( B, tuple( tuple( int(c) for c in table.elements[k] ) for k in gens ) )
        seq = analyze( Embedding( B, sub ) )
        entries.append( CensusEntry( sub, frozenset( int(k) for k in S ), submodule_type( sub ),
                                     seq.gammas[0], seq ) )
    if debug:
        print( 'ENUMERATE_SUBMODULES.DEBUG    {0}: {1} submodules'.format( B, len(entries) ) )
    return SubgroupCensus( B, entries )


def census_table( census ):
    """astropy Table with one row per submodule."""
    rows = [ ( len( e.sub.gens ), len( e.elements ), str( e.alpha ), str( e.gamma ), str( e.sequence ),
               str( e.sub ) ) for e in census ]
    table = Table( rows = rows if len(rows) > 0 else None,
                   names = ( 'ngens', 'order', 'alpha', 'gamma', 'sequence', 'generators' ),
                   dtype = ( int, int, str, str, str, str ) )
    table.meta['P'] = census.ambient.p
    table.meta['BETA'] = str( census.ambient.lam )
    return table
