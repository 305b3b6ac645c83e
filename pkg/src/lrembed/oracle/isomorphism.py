"""
Brute-force isomorphism of embeddings: (A1 in B) and (A2 in B) are isomorphic iff some
automorphism of B maps A1 onto A2.
"""

################## Importing packages ####################

from collections import deque

import numpy as np

from ..algebra.embed import Embedding, analyze, decompose
from ..algebra.pmod import apply_to_submodule, elementary_automorphisms, random_automorphism
from ..combinat.partitions import Partition, conjugate
from ..utils.config import read_config, config_value
from ..utils.errors import BoundExceededError, PrimeMismatchError
from ..utils.utils import feedback_prefix, valuation, write_feedback
from .census import ElementTable


################## Helpers ####################


def _index_set( table, A ):
    return np.unique( table.indices( sorted( A.element_set() ) ) ) if A.ambient.rank > 0 \
        else np.array( [0], dtype = np.int64 )


def _type_of_index_set( table, S ):
    """Type of the subgroup whose element indices are S, from the sizes of its p-power layers."""
    p = table.B.p
    sizes = [ len(S) ]
    cur = S
    while len(cur) > 1:
        cur = np.unique( table.indices( table.elements[cur] * p ) )
        sizes.append( len(cur) )
    layers = [ valuation( sizes[h-1] // sizes[h], p ) for h in range( 1, len(sizes) ) ]
    return conjugate( Partition( tuple( layers ) ) )


def _permutations( table ):
    """Element permutations induced by the elementary automorphisms of B."""
    B = table.B
    if B.rank == 0:
        return []
    return [ table.indices( table.elements @ np.array( M, dtype = np.int64 ) ) for M in elementary_automorphisms( B ) ]


def _orbit_keys( perms, S, stop = None ):
    """Keys of the orbit of the index set S; returns early once 'stop' is reached."""
    start = np.unique( S )
    seen = { start.tobytes() }
    queue = deque( [ start ] )
    while queue:
        cur = queue.popleft()
        for perm in perms:
            img = np.unique( perm[cur] )
            key = img.tobytes()
            if key not in seen:
                if key == stop:
                    return seen | { key }
                seen.add( key )
                queue.append( img )
    return seen


def _check_bound( B, max_order ):
    if B.order > max_order:
        raise BoundExceededError( '|B| = {0} exceeds the isomorphism bound {1}'.format( B.order, max_order ) )


################## Functions ####################


def embedding_invariants( E, table = None ):
    """
    Necessary conditions for isomorphism: the partition sequence of E and the types of
    A intersected with p^k B for k = 0..exponent(B).
    """
    B = E.ambient
    if table is None:
        table = ElementTable( B )
    A = set( int(k) for k in _index_set( table, E.sub ) )
    layers = []
    for k in range( B.lam.part(0) + 1 ):
        pkB = set( int(i) for i in np.unique( table.indices( table.elements * B.p ** k ) ) ) if B.rank > 0 else { 0 }
        meet = np.array( sorted( A & pkB ), dtype = np.int64 )
        layers.append( _type_of_index_set( table, meet ) )
    return ( analyze( E ), tuple( layers ) )


def candidate_images( table ):
    """For each basis vector e_j the indices of the elements of the same order p^lam_j."""
    B = table.B
    orders = [ B.order_exponent( tuple( int(c) for c in x ) ) for x in table.elements ]
    return [ [ k for k, e in enumerate( orders ) if e == l ] for l in B.lam ]


def iter_automorphisms( B, table = None ):
    """
    Generates every automorphism of B as a matrix (row j = image of e_j). Images are chosen
    among elements of the right order, and a partial choice is kept only while the chosen
    images generate a subgroup of the full order p^(lam_1 + ... + lam_j).
    """
    if table is None:
        table = ElementTable( B )
    cands = candidate_images( table )
    n = B.rank

    def _extend( j, S, chosen ):
        if j == n:
            yield [ [ int(c) for c in table.elements[k] ] for k in chosen ]
            return
        target = len(S) * B.p ** B.lam.part(j)
        for k in cands[j]:
            T = table.span_with( S, k )
            if len(T) == target:
                yield from _extend( j+1, T, chosen + [k] )

    yield from _extend( 0, np.array( [0], dtype = np.int64 ), [] )


def embeddings_isomorphic( E1, E2, max_order = None, max_candidates = None, config = None, debug = False ):
    """
    Decides whether two embeddings are isomorphic.

    Required Parameters
    -------------------

            E1, E2          Embedding

                                Over the same prime, otherwise a PrimeMismatchError is raised.

    Optional Parameters
    -------------------

            max_order       Integer or None

                                [ Default = None ]

                                Largest allowed |B|. If set to None, will use value imported from the
                                provided config file as max_iso_order.

            max_candidates  Integer or None

                                [ Default = None ]

                                Largest number of candidate image tuples for which every automorphism is
                                enumerated; above it an orbit search under elementary automorphisms is
                                used. If set to None, will use max_automorphism_candidates from the config.

            config          String, ConfigParser or None

                                [ Default = None ]

            debug           Boolean

                                [ Default = False ]

    Returns
    -------

            verdict         Bool

    Config File Parameters Used
    ---------------------------

            [COMPUTING]     max_iso_order, max_automorphism_candidates
    """
    if E1.p != E2.p:
        raise PrimeMismatchError( 'Embeddings over p={0} and p={1}'.format( E1.p, E2.p ) )
    if E1.ambient.lam != E2.ambient.lam:
        return False
    conf = read_config( config )
    max_order = config_value( conf, 'COMPUTING', 'max_iso_order', max_order )
    max_candidates = config_value( conf, 'COMPUTING', 'max_automorphism_candidates', max_candidates )
    B = E1.ambient
    _check_bound( B, max_order )

    table = ElementTable( B )
    if embedding_invariants( E1, table ) != embedding_invariants( E2, table ):
        if debug:
            print( 'EMBEDDINGS_ISOMORPHIC.DEBUG    invariants differ' )
        return False

    A2 = set( int(k) for k in _index_set( table, E2.sub ) )
    ncand = int( np.prod( [ len(c) for c in candidate_images( table ) ] ) )
    if debug:
        print( 'EMBEDDINGS_ISOMORPHIC.DEBUG    candidate image tuples : {0}'.format( ncand ) )
    if ncand <= max_candidates:
        for M in iter_automorphisms( B, table ):
            if all( B.index( B.apply( M, g ) ) in A2 for g in E1.sub.gens ):
                return True
        return False

    stop = _index_set( table, E2.sub ).tobytes()
    return stop in _orbit_keys( _permutations( table ), _index_set( table, E1.sub ), stop = stop )


def isomorphism_classes( B, submodules, max_order = None, config = None ):
    """
    Partitions a list of submodules of B into Aut(B)-orbits.

    Returns a list of classes, each a list of positions into 'submodules', ordered by first
    position.

    Config File Parameters Used
    ---------------------------

            [COMPUTING]     max_iso_order
    """
    conf = read_config( config )
    max_order = config_value( conf, 'COMPUTING', 'max_iso_order', max_order )
    _check_bound( B, max_order )
    table = ElementTable( B )
    perms = _permutations( table )
    keys = [ _index_set( table, A ).tobytes() for A in submodules ]
    classes = []
    assigned = {}
    for pos, A in enumerate( submodules ):
        if pos in assigned:
            continue
        orbit = _orbit_keys( perms, _index_set( table, A ) )
        members = [ q for q, key in enumerate( keys ) if q not in assigned and key in orbit ]
        for q in members:
            assigned[q] = len( classes )
        classes.append( members )
    return classes


def decompose_is_invariant( E, n = None, seed = None, config = None, logfile = None ):
    """
    Applies n random automorphisms of B to the submodule and checks that decompose returns the
    same multiset every time. Returns the list of automorphism matrices that changed it (empty
    when the decomposition is invariant).

    Config File Parameters Used
    ---------------------------

            [ORACLE]        random_automorphisms, seed
    """
    conf = read_config( config )
    n    = config_value( conf, 'ORACLE', 'random_automorphisms', n )
    seed = config_value( conf, 'ORACLE', 'seed',                 seed )
    rng = np.random.default_rng( seed )
    B = E.ambient
    reference = decompose( E )
    changed = []
    for _ in range( n ):
        M = random_automorphism( B, rng )
        if decompose( Embedding( B, apply_to_submodule( M, E.sub ) ) ) != reference:
            changed.append( M )
    if len( changed ) > 0:
        write_feedback( '{0}{1} of {2} automorphisms changed the decomposition of {3}'.format(
                                        feedback_prefix( 'decompose_is_invariant' ), len(changed), n, E ), logfile = logfile )
    return changed
