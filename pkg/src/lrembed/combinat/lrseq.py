"""
Littlewood-Richardson sequences.

An increasing sequence of partitions Gamma = [gamma^0, ..., gamma^r] (parts read as columns) is an
LR sequence when
    (LR1) every step gamma^h - gamma^(h-1) adds at most one box per column, and
    (LR2) for h >= 2 and every k:
              sum_{i>=k} (gamma^h_i - gamma^(h-1)_i) <= sum_{i>=k} (gamma^(h-1)_i - gamma^(h-2)_i).
Three independent validators are provided (inequalities, reading word, length-2 windows), plus
the column-signature criterion for r = 2 and an enumerator whose count is the LR coefficient.
"""

################## Importing packages ####################

from dataclasses import dataclass
from itertools import chain, combinations
import json

from .partitions import Partition, conjugate, contains, partitions_up_to
from .tableau import reading_word, is_lattice_word
from ..utils.errors import ( NotIncreasingError, NotLRError, PreconditionError, StripError,
                             WeightMismatchError, PartitionError )


################## Classes ####################


@dataclass( frozen = True )
class PartitionSequence:
    """Sequence [gamma^0, ..., gamma^r] of partitions; r = len - 1."""
    gammas: tuple

    def __post_init__( self ):
        gammas = tuple( g if isinstance( g, Partition ) else Partition( tuple(g) ) for g in self.gammas )
        if len(gammas) == 0:
            raise PartitionError( 'A partition sequence needs at least one partition' )
        object.__setattr__( self, 'gammas', gammas )

    @classmethod
    def from_json( cls, obj ):
        if not isinstance( obj, (list, tuple) ) or not all( isinstance(g, (list, tuple)) for g in obj ):
            raise PartitionError( 'A sequence is written as a list of partitions, got {0!r}'.format(obj) )
        return cls( tuple( Partition.from_json(g) for g in obj ) )

    @classmethod
    def parse( cls, text ):
        try:
            obj = json.loads( text )
        except json.JSONDecodeError:
            raise PartitionError( 'Cannot read partition sequence from {0!r}'.format(text) )
        return cls.from_json( obj )

    def to_json( self ):
        return [ g.to_json() for g in self.gammas ]

    @property
    def r( self ):
        return len( self.gammas ) - 1

    def is_increasing( self ):
        return all( contains( self.gammas[h], self.gammas[h-1] ) for h in range( 1, len(self.gammas) ) )

    def __len__( self ):
        return len( self.gammas )

    def __iter__( self ):
        return iter( self.gammas )

    def __getitem__( self, h ):
        return self.gammas[h]

    def __str__( self ):
        return '[' + ','.join( str(g) for g in self.gammas ) + ']'


@dataclass( frozen = True )
class SequenceType:
    """The type (alpha, gamma^r, gamma^0) of a sequence; |alpha| + |gamma| = |beta|."""
    alpha: Partition
    beta: Partition
    gamma: Partition

    def __post_init__( self ):
        if self.alpha.weight + self.gamma.weight != self.beta.weight:
            raise WeightMismatchError( 'Weights do not add up: |{0}| + |{2}| != |{1}|'.format(
                                                                        self.alpha, self.beta, self.gamma ) )

    def __str__( self ):
        return '({0}, {1}, {2})'.format( self.alpha, self.beta, self.gamma )


@dataclass( frozen = True )
class ColumnSignature:
    """
    Shape of one tableau column of a length-2 sequence: its length gamma^2_i and whether it holds
    a 1 and/or a 2.
    """
    length: int
    has_one: bool
    has_two: bool

    @property
    def kind( self ):
        if self.has_one and self.has_two:
            return 'both'
        if self.has_one:
            return 'one'
        if self.has_two:
            return 'two'
        return 'plain'

    @property
    def rank( self ):
        """
        Rank in the column poset. Two signatures are comparable iff they are equal or their
        ranks differ; the only collision is (l, plain) with (l+1, both).
        """
        offset = { 'one' : 3, 'plain' : 2, 'both' : 5, 'two' : 4 }[ self.kind ]
        return 3 * self.length - offset


################## Helpers ####################


def _require_increasing( seq ):
    if not seq.is_increasing():
        raise NotIncreasingError( 'Sequence {0} is not increasing'.format(seq) )


def _differences( seq ):
    """gamma^h - gamma^(h-1) for h = 1..r, each padded to the number of columns of gamma^r."""
    ncols = max( len(g) for g in seq.gammas )
    return [ [ seq.gammas[h].part(k) - seq.gammas[h-1].part(k) for k in range(ncols) ]
             for h in range( 1, len(seq.gammas) ) ]


def _suffix_dominated( upper, lower ):
    """True iff sum_{i>=k} upper_i <= sum_{i>=k} lower_i for every k."""
    su = 0
    sl = 0
    for k in range( len(upper)-1, -1, -1 ):
        su += upper[k]
        sl += lower[k]
        if su > sl:
            return False
    return True


################## Validators ####################


def validate_inequalities( seq ):
    """
    Checks (LR1) and (LR2) on the parts.

    Required Parameters
    -------------------

            seq             PartitionSequence

                                Must be increasing; a NotIncreasingError is raised otherwise.

    Returns
    -------

            verdict         Bool
    """
    _require_increasing( seq )
    diffs = _differences( seq )
    for d in diffs:
        if any( x < 0 or x > 1 for x in d ):
            return False
    for h in range( 1, len(diffs) ):
        if not _suffix_dominated( diffs[h], diffs[h-1] ):
            return False
    return True


def validate_word( seq ):
    """
    Lattice-word form of (LR2).

    Required Parameters
    -------------------

            seq             PartitionSequence

    Returns
    -------

            valid           Boolean

                                True iff the reading word of the tableau of seq (rows from the top,
                                right to left within a row) is a lattice word. Sequences that are
                                not increasing or violate (LR1) are reported as False rather than
                                raising, unlike the other two validators.
    """
    if not seq.is_increasing():
        return False
    # (LR1): no column grows by two boxes in one step
    if any( any( x > 1 for x in d ) for d in _differences( seq ) ):
        return False
    return is_lattice_word( reading_word( seq ) )


def _padded( seq, h ):
    return seq.gammas[ min( h, seq.r ) ]


def validate_windows( seq ):
    """
    Window form of the LR test: every three consecutive partitions must form an LR sequence.

    Required Parameters
    -------------------

            seq             PartitionSequence

                                Must be increasing; a NotIncreasingError is raised otherwise.

    Returns
    -------

            valid           Boolean

                                True iff every window [gamma^(h-2), gamma^(h-1), gamma^h] for
                                2 <= h <= max(r, 2) passes validate_inequalities, where gamma^h =
                                gamma^r for h > r. Sequences with r < 2 are padded to one window.
    """
    _require_increasing( seq )
    for h in range( 2, max( seq.r, 2 ) + 1 ):
        window = PartitionSequence( ( _padded(seq, h-2), _padded(seq, h-1), _padded(seq, h) ) )
        if not validate_inequalities( window ):
            return False
    return True


################## Types ####################


def _alpha_conjugate( seq ):
    return [ seq.gammas[h].weight - seq.gammas[h-1].weight for h in range( 1, len(seq.gammas) ) ]


def sequence_type( seq ):
    """
    Type (alpha, gamma^r, gamma^0) where alpha' has h-th part |gamma^h - gamma^(h-1)|. Raises
    NotLRError when these sizes are not weakly decreasing.
    """
    _require_increasing( seq )
    sizes = _alpha_conjugate( seq )
    if any( sizes[h] < sizes[h+1] for h in range( len(sizes)-1 ) ):
        raise NotLRError( 'Step sizes {0} of {1} are not weakly decreasing'.format( sizes, seq ) )
    alpha = conjugate( Partition( tuple(sizes) ) )
    return SequenceType( alpha, seq.gammas[-1], seq.gammas[0] )


def window_types( seq ):
    """
    For each padded window [gamma^(h-2), gamma^(h-1), gamma^h], h = 2..max(r,2), the type
    ((alpha'_(h-1), alpha'_h)', gamma^h, gamma^(h-2)).
    """
    _require_increasing( seq )
    sizes = _alpha_conjugate( seq )
    size = lambda h: sizes[h-1] if 1 <= h <= len(sizes) else 0
    types = []
    for h in range( 2, max( seq.r, 2 ) + 1 ):
        if size(h-1) < size(h):
            raise NotLRError( 'Window ending at h={0} of {1} has growing step sizes'.format( h, seq ) )
        alpha = conjugate( Partition( ( size(h-1), size(h) ) ) )
        types.append( SequenceType( alpha, _padded(seq, h), _padded(seq, h-2) ) )
    return types


################## Column criterion (r = 2) ####################


def column_signatures( seq ):
    """
    One ColumnSignature per column of gamma^2: (gamma^2_i, gamma^1_i > gamma^0_i, gamma^2_i > gamma^1_i).
    Raises StripError if a column would hold two equal entries.
    """
    if seq.r != 2:
        raise PreconditionError( 'Column signatures need a sequence of length 2, got r={0}'.format(seq.r) )
    _require_increasing( seq )
    g0, g1, g2 = seq.gammas
    sigs = []
    for i in range( len(g2) ):
        d1 = g1.part(i) - g0.part(i)
        d2 = g2.part(i) - g1.part(i)
        if d1 > 1 or d2 > 1:
            raise StripError( 'Column {0} of {1} grows by more than one box in a step'.format( i+1, seq ) )
        sigs.append( ColumnSignature( g2.part(i), d1 == 1, d2 == 1 ) )
    return sigs


def is_chain_in_L( signatures ):
    """True iff the signatures are pairwise comparable in the column poset."""
    by_rank = {}
    for sig in signatures:
        by_rank.setdefault( sig.rank, set() ).add( sig )
    return all( len(s) == 1 for s in by_rank.values() )


def tau21_matching( signatures ):
    """
    Injection from the columns holding only a 2 into the columns holding only a 1, each image
    strictly shorter. 2-columns are handled by decreasing length (then position); each takes the
    longest unused shorter 1-column (leftmost on ties). Returns a dict {2-column index:
    1-column index}, or None if no injection exists.
    """
    twos = sorted( ( i for i, s in enumerate(signatures) if s.kind == 'two' ),
                   key = lambda i: ( -signatures[i].length, i ) )
    ones = [ i for i, s in enumerate(signatures) if s.kind == 'one' ]
    used = set()
    matching = {}
    for i in twos:
        ell = signatures[i].length
        candidates = [ j for j in ones if j not in used and signatures[j].length < ell ]
        if len(candidates) == 0:
            return None
        j = min( candidates, key = lambda j: ( -signatures[j].length, j ) )
        used.add( j )
        matching[i] = j
    return matching


def column_criterion( seq ):
    """
    LR test for r = 2 through columns: signatures well defined, totally ordered in the column
    poset, and tau21 exists.
    """
    try:
        sigs = column_signatures( seq )
    except StripError:
        return False
    return is_chain_in_L( sigs ) and tau21_matching( sigs ) is not None


################## Enumeration ####################


def horizontal_strips( mu, size, bound ):
    """
    Partitions nu with mu <= nu <= bound obtained by adding one box to exactly 'size' columns.
    """
    ncols = len( bound )
    grow = [ k for k in range( ncols ) if mu.part(k) < bound.part(k) ]
    for cols in combinations( grow, size ):
        parts = [ mu.part(k) for k in range( ncols ) ]
        for k in cols:
            parts[k] += 1
        if all( parts[k] <= parts[k-1] for k in range( 1, ncols ) ):
            yield Partition( tuple(parts) )


def _step_ok( a, b, c ):
    ncols = max( len(a), len(b), len(c) )
    upper = [ c.part(k) - b.part(k) for k in range(ncols) ]
    lower = [ b.part(k) - a.part(k) for k in range(ncols) ]
    return _suffix_dominated( upper, lower )


def _sort_key( seq ):
    return tuple( chain.from_iterable( g.parts for g in seq.gammas ) )


def enumerate_lr( stype ):
    """
    All LR sequences of the given type, built by backtracking over horizontal strips and pruned
    by (LR2) at each step. The number of results is the LR coefficient c^beta_{alpha gamma}.

    Required Parameters
    -------------------

            stype           SequenceType

                                (alpha, beta, gamma): sequences run from gamma^0 = gamma to
                                gamma^r = beta with r = alpha_1 and |gamma^h - gamma^(h-1)| = alpha'_h.

    Returns
    -------

            seqs            List of PartitionSequence

                                In lexicographic order of the concatenated parts.
    """
    alpha, beta, gamma = stype.alpha, stype.beta, stype.gamma
    if alpha.weight + gamma.weight != beta.weight:
        raise WeightMismatchError( 'Weights do not add up: |{0}| + |{2}| != |{1}|'.format( alpha, beta, gamma ) )
    sizes = conjugate( alpha ).parts
    r = len( sizes )
    if not contains( beta, gamma ):
        return []
    if r == 0:
        return [ PartitionSequence( (gamma,) ) ] if gamma == beta else []

    results = []

    def _extend( chain_so_far ):
        h = len( chain_so_far )
        if h > r:
            results.append( PartitionSequence( tuple(chain_so_far) ) )
            return
        prev = chain_so_far[-1]
        for nxt in horizontal_strips( prev, sizes[h-1], beta ):
            if h >= 2 and not _step_ok( chain_so_far[-2], prev, nxt ):
                continue
            _extend( chain_so_far + [nxt] )

    _extend( [ gamma ] )
    return sorted( results, key = _sort_key )


def lr_coefficient( alpha, beta, gamma ):
    """c^beta_{alpha gamma} as the number of LR sequences of type (alpha, beta, gamma)."""
    return len( enumerate_lr( SequenceType( alpha, beta, gamma ) ) )


def _subpartitions( tau, strips_only ):
    parts = tau.parts

    def _gen( k, prev ):
        if k == len(parts):
            yield ()
            return
        lo = max( parts[k] - 1, 0 ) if strips_only else 0
        for x in range( min( parts[k], prev ), lo-1, -1 ):
            for rest in _gen( k+1, x ):
                yield (x,) + rest

    for t in _gen( 0, parts[0] if len(parts) > 0 else 0 ):
        yield Partition( t )


def iter_increasing_sequences( max_weight, r, max_part = None, strips_only = False ):
    """
    All increasing sequences [gamma^0, ..., gamma^r] with |gamma^r| <= max_weight and parts
    <= max_part. With strips_only, every step is restricted to a horizontal strip.
    """
    def _down( chain_so_far, steps ):
        if steps == 0:
            yield PartitionSequence( tuple( reversed(chain_so_far) ) )
            return
        for mu in _subpartitions( chain_so_far[-1], strips_only ):
            yield from _down( chain_so_far + [mu], steps-1 )

    for top in partitions_up_to( max_weight, max_part = max_part ):
        yield from _down( [ top ], r )
