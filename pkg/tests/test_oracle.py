import json

import pytest
from astropy.table import Table

from lrembed.algebra.embed import Embedding, Summand, decompose, model
from lrembed.algebra.pmod import PModule, is_p_bounded
from lrembed.combinat.lrseq import SequenceType, sequence_type, validate_inequalities
from lrembed.combinat.partitions import Partition, partitions_of
from lrembed.oracle.census import ElementTable, census_table, enumerate_submodules
from lrembed.oracle.crossval import Report, census_statistics, cross_validate
from lrembed.oracle.isomorphism import ( decompose_is_invariant, embedding_invariants, embeddings_isomorphic,
                                         isomorphism_classes, iter_automorphisms )
from lrembed.utils.errors import BoundExceededError, PrimeMismatchError


def P( *parts ):
    return Partition( parts )


def emb( p, lam, *gens ):
    return Embedding.from_generators( p, lam, gens )


################## census ####################


@pytest.mark.parametrize( 'p, lam, count', [
    ( 2, (1,), 2 ),
    ( 2, (1, 1), 5 ),
    ( 3, (1, 1), 6 ),
    ( 2, (2,), 3 ),
    ( 2, (2, 1), 8 ),
    ( 2, (1, 1, 1), 16 ),
    ( 2, (), 1 ),
] )
def test_census_counts( p, lam, count ):
    census = enumerate_submodules( PModule( p, P( *lam ) ) )
    assert len( census ) == count
    assert len( { e.elements for e in census } ) == count


def test_census_entries_are_consistent():
    B = PModule( 2, P(3, 1) )
    census = enumerate_submodules( B )
    for e in census:
        assert e.sub.element_set() == { tuple( int(c) for c in ElementTable( B ).elements[k] ) for k in e.elements }
        assert e.sequence.gammas[-1] == B.lam
        assert sequence_type( e.sequence ) == SequenceType( e.alpha, B.lam, e.gamma )
    orders = [ len( e.elements ) for e in census ]
    assert orders == sorted( orders )


@pytest.mark.parametrize( 'p', [ 2, 3 ] )
def test_census_sequences_are_lr( p ):
    for n in range( 1, 5 if p == 2 else 4 ):
        for beta in partitions_of( n ):
            for e in enumerate_submodules( PModule( p, beta ) ):
                assert validate_inequalities( e.sequence ), ( beta, str( e.sub ) )


def test_census_bound():
    with pytest.raises( BoundExceededError ):
        enumerate_submodules( PModule( 2, P(3, 2) ), max_order = 16 )


def test_census_table():
    table = census_table( enumerate_submodules( PModule( 2, P(2) ) ) )
    assert isinstance( table, Table )
    assert len( table ) == 3
    assert list( table['order'] ) == [ 1, 2, 4 ]
    assert table.meta['P'] == 2
    assert table.meta['BETA'] == '[2]'


def test_element_table_indices():
    B = PModule( 3, P(2, 1) )
    table = ElementTable( B )
    for k, x in enumerate( B.elements() ):
        assert B.index( x ) == k
        assert int( table.indices( [ x ] )[0] ) == k
    assert len( table.span_with( table.indices( [ (0, 0) ] ), B.index( (1, 0) ) ) ) == 9


################## isomorphism ####################


def test_automorphism_count():
    # |Aut(Z/4 + Z/2)| = 8
    assert len( list( iter_automorphisms( PModule( 2, P(2, 1) ) ) ) ) == 8
    # |GL_2(F_2)| = 6
    assert len( list( iter_automorphisms( PModule( 2, P(1, 1) ) ) ) ) == 6


def test_isomorphic_examples():
    E = emb( 2, (3, 1), (2, 1) )
    assert embeddings_isomorphic( E, E )
    assert embeddings_isomorphic( E, emb( 2, (3, 1), (6, 1) ) )
    assert not embeddings_isomorphic( E, emb( 2, (3, 1), (2, 0) ) )


def test_same_sequence_not_isomorphic():
    E1 = emb( 2, (4, 3, 2), (4, 0, 2), (0, 4, 0) )
    E2 = emb( 2, (4, 3, 2), (4, 0, 0), (0, 0, 2) )
    assert embedding_invariants( E1 )[0] == embedding_invariants( E2 )[0]
    assert not embeddings_isomorphic( E1, E2, max_order = 2 ** 9 )


def test_orbit_search_agrees_with_enumeration():
    E1 = emb( 2, (3, 1), (2, 1) )
    E2 = emb( 2, (3, 1), (2, 1) )
    E3 = emb( 2, (3, 1), (6, 1) )
    assert embeddings_isomorphic( E1, E3, max_candidates = 0 )
    assert embeddings_isomorphic( E1, E2, max_candidates = 0 )
    assert not embeddings_isomorphic( E1, emb( 2, (3, 1), (2, 0) ), max_candidates = 0 )


def test_isomorphism_errors():
    with pytest.raises( PrimeMismatchError ):
        embeddings_isomorphic( emb( 2, (1,) ), emb( 3, (1,) ) )
    with pytest.raises( BoundExceededError ):
        embeddings_isomorphic( emb( 2, (4, 3) ), emb( 2, (4, 3) ) )
    assert not embeddings_isomorphic( emb( 2, (2,) ), emb( 2, (1, 1) ) )


@pytest.mark.parametrize( 'n', [ 2, 3, 4, 5, 6 ] )
def test_summands_classify_p2_bounded_embeddings( n ):
    for beta in partitions_of( n ):
        B = PModule( 2, beta )
        subs = [ e.sub for e in enumerate_submodules( B ) if is_p_bounded( e.sub, 2 ) ]
        classes = isomorphism_classes( B, subs )
        labels = [ decompose( Embedding( B, A ) ) for A in subs ]
        for cls in classes:
            assert len( { labels[q] for q in cls } ) == 1, str( beta )
        assert len( { labels[cls[0]] for cls in classes } ) == len( classes ), str( beta )


def test_decomposition_invariance_check():
    E = model( Summand.Q( 4, 2 ), 2 )
    assert decompose_is_invariant( E, n = 10, seed = 3 ) == []
    # config values are used when nothing is passed
    assert decompose_is_invariant( emb( 2, (3, 2, 1), (2, 0, 1), (0, 2, 0) ) ) == []


@pytest.mark.slow
@pytest.mark.parametrize( 'n', [ 1, 2, 3, 4, 5, 6 ] )
def test_decompose_invariant_on_census( n ):
    # 50 random automorphisms (config default) per p^2-bounded subgroup
    for beta in partitions_of( n ):
        B = PModule( 2, beta )
        for e in enumerate_submodules( B ):
            if is_p_bounded( e.sub, 2 ):
                assert decompose_is_invariant( Embedding( B, e.sub ) ) == [], ( str( beta ), str( e.sub ) )


################## cross validation ####################


@pytest.mark.parametrize( 'p, max_weight', [ ( 2, 1 ), ( 2, 3 ), ( 2, 4 ), ( 3, 3 ) ] )
def test_cross_validate_clean( p, max_weight, capsys ):
    report = cross_validate( p = p, max_weight = max_weight )
    assert report.ok, report.to_text()
    assert len( report.rows ) == sum( 1 for n in range( 1, max_weight+1 ) for _ in partitions_of( n ) )
    for row in report.rows:
        assert row['realized'] == row['sequences']
    assert 'CROSS_VALIDATE:' in capsys.readouterr().out


@pytest.mark.slow
def test_cross_validate_clean_to_weight_7():
    report = cross_validate( p = 2, max_weight = 7 )
    assert report.ok, report.to_text()
    assert len( report.rows ) == sum( 1 for n in range( 1, 8 ) for _ in partitions_of( n ) )


def test_cross_validate_rows():
    report = cross_validate( p = 2, max_weight = 2 )
    rows = { row['beta'] : row for row in report.rows }
    assert rows['[1,1]']['submodules'] == 5
    assert rows['[2]']['submodules'] == 3
    assert rows['[1]']['types'] == 2


def test_cross_validate_logfile_and_workers( tmp_path ):
    log = tmp_path / 'oracle.log'
    report = cross_validate( p = 2, max_weight = 3, nprocs = 2, logfile = str( log ) )
    assert report.ok
    assert log.read_text().startswith( 'CROSS_VALIDATE:' )


def test_cross_validate_bound( tmp_path ):
    with pytest.raises( BoundExceededError ):
        cross_validate( p = 3, max_weight = 7 )
    with pytest.raises( BoundExceededError ):
        cross_validate( p = 2, max_weight = 3, max_order = 4 )
    # an explicit bound wins over the config value
    ini = tmp_path / 'small.ini'
    ini.write_text( '[COMPUTING]\nmax_census_order = 2\n' )
    with pytest.raises( BoundExceededError ):
        cross_validate( p = 2, max_weight = 2, config = str( ini ) )
    assert cross_validate( p = 2, max_weight = 2, max_order = 4, config = str( ini ) ).ok


def test_report_output( tmp_path ):
    report = cross_validate( p = 2, max_weight = 2 )
    out = tmp_path / 'report.json'
    report.write( str( out ) )
    data = json.loads( out.read_text() )
    assert data['ok'] is True and data['p'] == 2
    ecsv = tmp_path / 'report.ecsv'
    report.write( str( ecsv ) )
    table = Table.read( str( ecsv ) )
    assert table.meta['NVIOL'] == 0
    assert 'No violations.' in report.to_text()


def test_report_with_violation():
    report = Report( 2, 1, rows = [], violations = [ { 'check' : 'b', 'beta' : '[1]', 'detail' : 'x' } ] )
    assert not report.ok
    assert '(b) beta = [1]: x' in report.to_text()


def test_statistics_do_not_depend_on_prime():
    assert census_statistics( 2, 5 ) == census_statistics( 3, 5 )
