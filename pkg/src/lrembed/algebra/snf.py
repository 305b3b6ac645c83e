"""
Smith normal form of integer matrices of any shape.

Input m x n integer matrix M is transformed to a diagonal matrix D by unimodular P (m x m) and
Q (n x n):

    D = P M Q

with nonnegative diagonal entries d_1 | d_2 | ... (zeros last). Q^-1 is tracked as well, since
the rows of Q^-1 are the lifts used by quotient presentations. All arithmetic is done on numpy
object arrays holding Python integers, so entries never overflow.
"""

################## Importing packages ####################

import numpy as np

from ..utils.errors import VerificationError


################## Helpers ####################


def identity( n ):
    """n x n identity as an object array of Python integers."""
    out = np.zeros( (n, n), dtype = object )
    for i in range( n ):
        out[i, i] = 1
    return out


def as_integer_matrix( M, ncols = None ):
    """
    Converts a nested list (or array) to an object array of Python integers. An empty list
    needs ncols to get the right shape.
    """
    rows = [ [ int(x) for x in row ] for row in M ]
    if len(rows) == 0:
        return np.zeros( (0, ncols or 0), dtype = object )
    out = np.empty( (len(rows), len(rows[0])), dtype = object )
    for i, row in enumerate( rows ):
        out[i, :] = row
    return out


def matmul( A, B ):
    """Exact product of two object matrices (np.dot on empty object arrays returns floats)."""
    out = np.zeros( (A.shape[0], B.shape[1]), dtype = object )
    for i in range( A.shape[0] ):
        for j in range( B.shape[1] ):
            out[i, j] = sum( ( A[i, k] * B[k, j] for k in range( A.shape[1] ) ), 0 )
    return out


################## Classes ####################


class SmithNormalForm:
    """Smith normal form of an m x n integer matrix.

    Usage
    -----
    snf = SmithNormalForm( int_mat )
    snf.run()

    Attributes
    ----------
    D, P, Q, Qinv : object ndarray
        D = P M Q, and Qinv = Q^-1.
    diagonal : list of int
        The min(m, n) diagonal entries of D.
    """

    def __init__( self, M, ncols = None ):
        self._M_orig = as_integer_matrix( M, ncols )
        self._A = self._M_orig.copy()
        m, n = self._A.shape
        self._P = identity( m )
        self._Q = identity( n )
        self._Qinv = identity( n )
        self._done = False

    def run( self ):
        """Calculates the SNF and checks D = P M Q and the divisibility chain."""
        m, n = self._A.shape
        for t in range( min( m, n ) ):
            if not self._pivot( t ):
                break
            self._clear( t )
            if self._A[t, t] < 0:
                self._negate_row( t )

        D = matmul( self._P, matmul( self._M_orig, self._Q ) )
        if not ( D == self._A ).all():
            raise VerificationError( 'SNF transforms do not reproduce the diagonal form' )
        if not ( matmul( self._Q, self._Qinv ) == identity( n ) ).all():
            raise VerificationError( 'SNF inverse transform is wrong' )
        diag = self.diagonal
        for k in range( len(diag)-1 ):
            if diag[k] == 0 and diag[k+1] != 0:
                raise VerificationError( 'SNF zero diagonal entry before a nonzero one' )
            if diag[k] != 0 and diag[k+1] % diag[k] != 0:
                raise VerificationError( 'SNF diagonal {0} is not a divisibility chain'.format( diag ) )
        self._done = True
        return self

    @property
    def D( self ):
        """Return D of D = PMQ."""
        return self._A

    @property
    def P( self ):
        """Return P of D = PMQ."""
        return self._P

    @property
    def Q( self ):
        """Return Q of D = PMQ."""
        return self._Q

    @property
    def Qinv( self ):
        """Return the inverse of Q."""
        return self._Qinv

    @property
    def diagonal( self ):
        m, n = self._A.shape
        return [ int( self._A[k, k] ) for k in range( min( m, n ) ) ]

    # --- elementary operations, each applied to A and the matching transform ---

    def _swap_rows( self, i, j ):
        if i != j:
            self._A[[i, j], :] = self._A[[j, i], :]
            self._P[[i, j], :] = self._P[[j, i], :]

    def _swap_cols( self, i, j ):
        if i != j:
            self._A[:, [i, j]] = self._A[:, [j, i]]
            self._Q[:, [i, j]] = self._Q[:, [j, i]]
            self._Qinv[[i, j], :] = self._Qinv[[j, i], :]

    def _add_row( self, target, source, q ):
        """row_target += q * row_source"""
        self._A[target, :] = self._A[target, :] + q * self._A[source, :]
        self._P[target, :] = self._P[target, :] + q * self._P[source, :]

    def _add_col( self, target, source, q ):
        """col_target += q * col_source"""
        self._A[:, target] = self._A[:, target] + q * self._A[:, source]
        self._Q[:, target] = self._Q[:, target] + q * self._Q[:, source]
        self._Qinv[source, :] = self._Qinv[source, :] - q * self._Qinv[target, :]

    def _negate_row( self, i ):
        self._A[i, :] = -self._A[i, :]
        self._P[i, :] = -self._P[i, :]

    # --- algorithm ---

    def _pivot( self, t ):
        """Moves the smallest nonzero entry of the lower right block to (t, t)."""
        m, n = self._A.shape
        best = None
        for i in range( t, m ):
            for j in range( t, n ):
                a = self._A[i, j]
                if a != 0 and ( best is None or abs(a) < abs( self._A[best] ) ):
                    best = (i, j)
        if best is None:
            return False
        self._swap_rows( t, best[0] )
        self._swap_cols( t, best[1] )
        return True

    def _clear( self, t ):
        m, n = self._A.shape
        A = self._A
        while True:
            for i in range( t+1, m ):
                if A[i, t] != 0:
                    self._add_row( i, t, -( A[i, t] // A[t, t] ) )
            for j in range( t+1, n ):
                if A[t, j] != 0:
                    self._add_col( j, t, -( A[t, j] // A[t, t] ) )

            # Remainders left in row or column t: move the smallest one to the pivot and repeat
            rest = [ (i, t) for i in range( t+1, m ) if A[i, t] != 0 ] + \
                   [ (t, j) for j in range( t+1, n ) if A[t, j] != 0 ]
            if len(rest) > 0:
                i, j = min( rest, key = lambda ij: abs( A[ij] ) )
                self._swap_rows( t, i )
                self._swap_cols( t, j )
                continue

            # Pivot must divide the whole remaining block
            bad = next( ( i for i in range( t+1, m ) for j in range( t+1, n ) if A[i, j] % A[t, t] != 0 ),
                        None )
            if bad is None:
                return
            self._add_row( t, bad, 1 )


################## Functions ####################


def smith_normal_form( M, ncols = None ):
    """Convenience wrapper: runs SmithNormalForm on M and returns it."""
    return SmithNormalForm( M, ncols ).run()
