"""
Tableau view of an increasing partition sequence [gamma^0, ..., gamma^r].

Columns are indexed left to right by decreasing height (the parts of gamma^r). Row 1 is the top
row; the boxes of gamma^0 sit at the top of each column and are drawn as dots, and the box in
row j of column i carries the symbol h when gamma^(h-1)_i < j <= gamma^h_i.
"""

################## Importing packages ####################

from collections import Counter


################## Functions ####################


def box_entry( gammas, col, row ):
    """
    Symbol in the box (row, col), both 1-based: 0 for a box of gamma^0, h for a box of
    gamma^h - gamma^(h-1), None if the column is shorter than row.
    """
    for h, gam in enumerate( gammas ):
        if gam.part( col-1 ) >= row:
            return h
    return None


def tableau_rows( seq ):
    """
    Rows of the tableau from top to bottom; each row is a list over the columns of gamma^r with
    entries as in box_entry (None past the end of a column).
    """
    gammas = seq.gammas
    top = gammas[-1]
    ncols = len( top )
    nrows = top.part(0)
    return [ [ box_entry( gammas, i, j ) for i in range( 1, ncols+1 ) ] for j in range( 1, nrows+1 ) ]


def reading_word( seq ):
    """
    Reading word of the tableau of seq.

    Required Parameters
    -------------------

            seq             PartitionSequence

                                Increasing sequence [gamma^0, ..., gamma^r].

    Returns
    -------

            word            List of Integers

                                The numbered boxes read row by row from the top, and within each
                                row from the rightmost (shortest) column to the leftmost. Boxes of
                                gamma^0 are skipped, so len(word) = |gamma^r| - |gamma^0|.
    """
    word = []
    for row in tableau_rows( seq ):
        # right to left
        for entry in reversed( row ):
            if entry is not None and entry > 0:
                word.append( entry )
    return word


def is_lattice_word( word ):
    """True iff every prefix contains at least as many h's as (h+1)'s, for every h >= 1."""
    counts = Counter()
    for h in word:
        counts[h] += 1
        if h > 1 and counts[h] > counts[h-1]:
            return False
    return True


def render_tableau( seq ):
    """
    Fixed-width text picture of the tableau.

    Required Parameters
    -------------------

            seq             PartitionSequence

    Returns
    -------

            text            String

                                One line per row, columns left to right by decreasing height, digit
                                h for boxes of gamma^h - gamma^(h-1) and '.' for boxes of gamma^0.
                                Trailing blanks are stripped. Cells are padded to the width of the
                                largest symbol, so columns stay aligned for r >= 10. The empty
                                partition renders as ''.
    """
    width = len( str( max( len(seq.gammas)-1, 0 ) ) )
    lines = []
    for row in tableau_rows( seq ):
        cells = []
        for entry in row:
            if entry is None:
                cells.append( ' ' * width )
            elif entry == 0:
                cells.append( '.'.rjust(width) )
            else:
                cells.append( str(entry).rjust(width) )
        sep = '' if width == 1 else ' '
        lines.append( sep.join( cells ).rstrip() )
    return '\n'.join( lines )
