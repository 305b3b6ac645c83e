import numpy as np
import pytest
from hypothesis import given, strategies as st

from lrembed.algebra.snf import SmithNormalForm, as_integer_matrix, identity, matmul, smith_normal_form


def check_snf( M, snf ):
    A = as_integer_matrix( M, snf.Q.shape[0] )
    assert ( matmul( snf.P, matmul( A, snf.Q ) ) == snf.D ).all()
    assert ( matmul( snf.Q, snf.Qinv ) == identity( snf.Q.shape[0] ) ).all()
    m, n = snf.D.shape
    for i in range( m ):
        for j in range( n ):
            if i != j:
                assert snf.D[i, j] == 0
    diag = snf.diagonal
    assert all( d >= 0 for d in diag )
    for a, b in zip( diag, diag[1:] ):
        assert ( a == 0 and b == 0 ) or ( a != 0 and b % a == 0 )


def test_relation_matrix_example():
    # Z/8 + Z/2 modulo <(2,1)>
    M = [ [8, 0], [0, 2], [2, 1] ]
    snf = smith_normal_form( M )
    assert snf.diagonal == [1, 4]
    check_snf( M, snf )


def test_zero_and_empty():
    snf = smith_normal_form( [ [0, 0], [0, 0] ] )
    assert snf.diagonal == [0, 0]
    snf = smith_normal_form( [], ncols = 3 )
    assert snf.D.shape == (0, 3)
    assert snf.diagonal == []
    assert ( snf.Q == identity( 3 ) ).all()


def test_exact_integers_survive():
    big = 2 ** 70
    snf = smith_normal_form( [ [big, 0], [0, 3 * big] ] )
    assert snf.diagonal == [ big, 3 * big ]
    assert all( isinstance( d, int ) for d in snf.diagonal )


def test_usage_pattern():
    snf = SmithNormalForm( np.array( [ [2, 4, 4], [-6, 6, 12], [10, -4, -16] ] ) )
    snf.run()
    assert snf.diagonal == [2, 6, 12]


@given( st.integers( min_value = 1, max_value = 4 ).flatmap(
            lambda n: st.lists( st.lists( st.integers( -20, 20 ), min_size = n, max_size = n ),
                                min_size = 0, max_size = 5 ).map( lambda rows: ( n, rows ) ) ) )
def test_random_matrices( n_rows ):
    n, rows = n_rows
    snf = smith_normal_form( rows, ncols = n )
    check_snf( rows, snf )


@pytest.mark.parametrize( 'M', [ [ [4, 0], [0, 6] ], [ [6, 4], [4, 6] ] ] )
def test_divisibility_repaired( M ):
    snf = smith_normal_form( M )
    assert snf.diagonal[1] % snf.diagonal[0] == 0
    check_snf( M, snf )
