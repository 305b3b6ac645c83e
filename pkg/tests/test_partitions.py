import pytest
from hypothesis import given, strategies as st

from lrembed.combinat.partitions import ( Partition, conjugate, contains, is_horizontal_strip, partitions_of,
                                          partitions_up_to, union )
from lrembed.utils.errors import PartitionError


partitions = st.lists( st.integers( min_value = 1, max_value = 6 ), max_size = 6 ).map(
                                                lambda xs: Partition( tuple( sorted( xs, reverse = True ) ) ) )


def test_trailing_zeros_dropped():
    assert Partition( (3, 1, 0, 0) ) == Partition( (3, 1) )
    assert len( Partition( (0,) ) ) == 0


def test_text_form():
    assert str( Partition( (3, 1) ) ) == '[3,1]'
    assert str( Partition() ) == '[]'
    assert Partition.parse( '[2,2,1]' ) == Partition( (2, 2, 1) )
    assert Partition.parse( '[]' ) == Partition()


@pytest.mark.parametrize( 'bad', [ (1, 2), (2, -1), (1.5,), (True,) ] )
def test_rejects_malformed( bad ):
    with pytest.raises( PartitionError ):
        Partition( bad )


def test_parse_rejects_garbage():
    with pytest.raises( PartitionError ):
        Partition.parse( '[3,' )
    with pytest.raises( PartitionError ):
        Partition.parse( '3' )


def test_conjugate():
    assert conjugate( Partition( (3, 1) ) ) == Partition( (2, 1, 1) )
    assert conjugate( Partition( (2, 2) ) ) == Partition( (2, 2) )
    assert conjugate( Partition() ) == Partition()


@given( partitions )
def test_conjugate_is_involution( lam ):
    assert conjugate( conjugate( lam ) ) == lam
    assert conjugate( lam ).weight == lam.weight


@given( partitions, partitions )
def test_union_is_multiset_union( lam, mu ):
    u = union( lam, mu )
    assert u.weight == lam.weight + mu.weight
    assert sorted( u.parts ) == sorted( lam.parts + mu.parts )
    assert union( lam, mu ) == union( mu, lam )


@given( partitions, partitions, partitions )
def test_union_is_associative( lam, mu, nu ):
    assert union( union( lam, mu ), nu ) == union( lam, union( mu, nu ) )


@given( partitions )
def test_empty_partition_is_union_identity( lam ):
    assert union( lam, Partition() ) == lam
    assert union( Partition(), lam ) == lam


def test_conjugate_involution_up_to_weight_10():
    for lam in partitions_up_to( 10 ):
        assert conjugate( conjugate( lam ) ) == lam
        assert conjugate( lam ).weight == lam.weight
        assert len( conjugate( lam ) ) == ( lam.parts[0] if len( lam ) > 0 else 0 )


def test_union_example():
    assert union( Partition( (2,) ), Partition( (3, 1) ) ) == Partition( (3, 2, 1) )


def test_contains_and_strips():
    assert contains( Partition( (3, 1) ), Partition( (2,) ) )
    assert not contains( Partition( (2,) ), Partition( (1, 1) ) )
    assert is_horizontal_strip( Partition( (2, 1) ), Partition( (3, 1) ) )
    assert is_horizontal_strip( Partition( (1,) ), Partition( (2, 1) ) )
    assert not is_horizontal_strip( Partition( (1,) ), Partition( (3,) ) )
    assert not is_horizontal_strip( Partition( (2,) ), Partition( (1, 1) ) )


def _cells( lam ):
    # (row, column) boxes, parts as column heights
    return { ( k, i ) for i, l in enumerate( lam.parts ) for k in range( l ) }


def test_strips_match_cell_level_check():
    small = list( partitions_up_to( 8 ) )
    for mu in small:
        for lam in small:
            skew = _cells( lam ) - _cells( mu )
            expected = _cells( mu ) <= _cells( lam ) and len( { i for _, i in skew } ) == len( skew )
            assert is_horizontal_strip( mu, lam ) == expected, ( mu, lam )


def test_partitions_of():
    assert [ p.parts for p in partitions_of( 4 ) ] == [ (4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1) ]
    assert [ p.parts for p in partitions_of( 5, max_part = 2 ) ] == [ (2, 2, 1), (2, 1, 1, 1), (1, 1, 1, 1, 1) ]
    assert [ p.parts for p in partitions_of( 4, max_len = 2 ) ] == [ (4,), (3, 1), (2, 2) ]
    assert list( partitions_of( 0 ) ) == [ Partition() ]


def test_partitions_up_to_counts():
    counts = [ 1, 1, 2, 3, 5, 7, 11, 15, 22 ]
    assert len( list( partitions_up_to( 8 ) ) ) == sum( counts )
    weights = [ p.weight for p in partitions_up_to( 4 ) ]
    assert weights == sorted( weights )
