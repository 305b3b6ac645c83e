"""
Partitions as used throughout lrembed.

A partition is a weakly decreasing tuple of positive integers. The same value is read in two
ways: as a Young diagram whose parts are the COLUMN heights, and as the type of a p-module
M(lambda) = sum_i R/(p^lambda_i). Conjugation transposes the diagram.
"""

################## Importing packages ####################

from dataclasses import dataclass
from itertools import zip_longest
import json
import numbers

from ..utils.errors import PartitionError


################## Classes ####################


@dataclass( frozen = True, order = True )
class Partition:
    """
    Immutable partition. Trailing zeros are dropped on construction, so equal partitions compare
    equal regardless of padding. Ordering is lexicographic on the parts.
    """
    parts: tuple = ()

    def __post_init__( self ):
        raw = tuple( self.parts )
        if any( isinstance(x, bool) or not isinstance(x, numbers.Integral) for x in raw ):
            raise PartitionError( 'Partition parts must be integers, got {0!r}'.format(raw) )
        parts = [ int(x) for x in raw ]
        while len(parts) > 0 and parts[-1] == 0:
            parts.pop()
        if any( x < 1 for x in parts ):
            raise PartitionError( 'Partition parts must be positive, got {0!r}'.format(raw) )
        if any( parts[i] < parts[i+1] for i in range(len(parts)-1) ):
            raise PartitionError( 'Partition parts must be weakly decreasing, got {0!r}'.format(raw) )
        object.__setattr__( self, 'parts', tuple(parts) )

    @classmethod
    def from_json( cls, obj ):
        if not isinstance( obj, (list, tuple) ):
            raise PartitionError( 'A partition is written as a list of parts, got {0!r}'.format(obj) )
        return cls( tuple(obj) )

    @classmethod
    def parse( cls, text ):
        """Reads the text form '[3,1]' ('[]' is the empty partition)."""
        try:
            obj = json.loads( text )
        except json.JSONDecodeError:
            raise PartitionError( 'Cannot read partition from {0!r}'.format(text) )
        return cls.from_json( obj )

    def to_json( self ):
        return list( self.parts )

    @property
    def weight( self ):
        return sum( self.parts )

    def part( self, i ):
        """i-th part (0-based), reading 0 beyond the stored parts."""
        return self.parts[i] if i < len(self.parts) else 0

    def __len__( self ):
        return len( self.parts )

    def __iter__( self ):
        return iter( self.parts )

    def __str__( self ):
        return '[' + ','.join( str(x) for x in self.parts ) + ']'


################## Functions ####################


def conjugate( lam ):
    """
    Transpose of the diagram, swapping rows and columns.

    Required Parameters
    -------------------

            lam             Partition

    Returns
    -------

            conj            Partition

                                The k-th part counts the parts of lam that are >= k, so conj has
                                lam_1 parts and the same weight as lam.
    """
    if len(lam) == 0:
        return Partition()
    return Partition( tuple( sum( 1 for x in lam if x >= k ) for k in range( 1, lam.part(0)+1 ) ) )


def union( lam, mu ):
    """
    Multiset union of the parts, sorted decreasingly. This is the type of the direct sum of two
    p-modules, so union is commutative and associative with the empty partition as identity.

    Required Parameters
    -------------------

            lam, mu         Partition

    Returns
    -------

            nu              Partition

                                Of weight |lam| + |mu| and length len(lam) + len(mu).
    """
    return Partition( tuple( sorted( lam.parts + mu.parts, reverse = True ) ) )


def contains( lam, mu ):
    """True iff mu_i <= lam_i for all i."""
    if len(mu) > len(lam):
        return False
    return all( m <= l for l, m in zip( lam, mu ) )


def part_differences( lam, mu ):
    """List of lam_k - mu_k over the longer of the two, padding with zeros."""
    return [ l - m for l, m in zip_longest( lam, mu, fillvalue = 0 ) ]


def is_horizontal_strip( mu, lam ):
    """
    Tests whether lam - mu is a horizontal strip.

    Required Parameters
    -------------------

            mu              Partition

                                The smaller partition.

            lam             Partition

                                The larger partition.

    Returns
    -------

            strip           Boolean

                                True iff lam contains mu and every part grows by at most one. With
                                parts read as columns, this is exactly the condition that the skew
                                diagram lam - mu has at most one box per column.
    """
    if not contains( lam, mu ):
        return False
    return all( d <= 1 for d in part_differences( lam, mu ) )


def partitions_of( n, max_part = None, max_len = None ):
    """
    Generates all partitions of n in decreasing lexicographic order.

    Required Parameters
    -------------------

            n               Integer

                                Weight of the partitions, n >= 0. For n = 0 the empty partition is
                                the only one generated.

    Optional Parameters
    -------------------

            max_part        Integer or None

                                [ Default = None ]

                                Largest part allowed. If None, parts are bounded by n only.

            max_len         Integer or None

                                [ Default = None ]

                                Largest number of parts allowed. If None, up to n parts.

    Returns
    -------

            generator of Partition
    """
    if max_part is None:
        max_part = n
    if max_len is None:
        max_len = n

    def _gen( remaining, bound, slots ):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range( min(bound, remaining), 0, -1 ):
            # Filling every slot with 'first' can no longer reach 'remaining'
            if first * slots < remaining:
                break
            for rest in _gen( remaining - first, first, slots - 1 ):
                yield (first,) + rest

    for parts in _gen( n, max_part, max_len ):
        yield Partition( parts )


def partitions_up_to( n, max_part = None, max_len = None ):
    """All partitions of weight 0..n, by increasing weight."""
    for k in range( n+1 ):
        yield from partitions_of( k, max_part = max_part, max_len = max_len )
