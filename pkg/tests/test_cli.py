import json

import pytest

from lrembed.cli import EXIT_FALSE, EXIT_INPUT, EXIT_OK, main, parse_partition_arg
from lrembed.combinat.partitions import Partition


Q31 = '{"module": {"p": 2, "lambda": [3, 1]}, "generators": [[2, 1]]}'


def test_check( capsys ):
    assert main( [ 'check', '[[1],[2],[3]]' ] ) == EXIT_OK
    out = capsys.readouterr().out
    assert 'agreement    : True' in out
    assert main( [ 'check', '[[],[1],[1,1]]' ] ) == EXIT_FALSE


def test_check_json( capsys ):
    assert main( [ 'check', '[[2],[2,1],[3,1]]', '--json' ] ) == EXIT_OK
    data = json.loads( capsys.readouterr().out )
    assert data['inequalities'] is True and data['word'] is True and data['windows'] is True
    assert data['sequence'] == [ [2], [2, 1], [3, 1] ]


def test_check_not_increasing( capsys ):
    assert main( [ 'check', '[[2],[1]]' ] ) == EXIT_INPUT
    assert 'not increasing' in capsys.readouterr().err


def test_coeff_and_enumerate( capsys ):
    assert main( [ 'coeff', '[2,1]', '[3,2,1]', '[2,1]' ] ) == EXIT_OK
    assert capsys.readouterr().out.strip() == '2'
    assert main( [ 'enumerate', '[2,1]', '[3,2,1]', '[2,1]' ] ) == EXIT_OK
    assert capsys.readouterr().out.split() == [ '[[2,1],[2,2,1],[3,2,1]]', '[[2,1],[3,1,1],[3,2,1]]' ]


@pytest.mark.parametrize( 'argv', [
    [ 'coeff', '[2,1]', '[3,2]', '[2,1]' ],
    [ 'coeff', '[1,2]', '[3]', '[]' ],
    [ 'coeff', '[1', '[3]', '[]' ],
    [ 'realize', '[[2],[2,1],[3,1]]', '--p', '4' ],
    [ 'realize', '[[],[1],[1,1]]' ],
    [ 'decompose', '{"module": {"p": 2, "lambda": [3]}, "generators": [[1]]}' ],
    [ 'analyze', '{"module": {"p": 2, "lambda": [3]}, "generators": [[9]]}' ],
    [ 'analyze', '{"generators": [[1]]}' ],
    [ 'analyze', '{"module": {"p": "2", "lambda": [1]}, "generators": []}' ],
    [ 'analyze', '{"module": {"p": 2, "lambda": [1]}, "generators": [["a"]]}' ],
    [ 'analyze', '{"module": {"p": 2}}' ],
    [ 'check', '[[1], "x"]' ],
    [ 'check', '[[1], [2]' ],
] )
def test_bad_input_exit_code( argv, capsys ):
    assert main( argv ) == EXIT_INPUT
    assert capsys.readouterr().err.startswith( 'LREMBED:' )


def test_realize( capsys ):
    assert main( [ 'realize', '[[2],[2,1],[3,1]]', '--p', '3', '--json' ] ) == EXIT_OK
    data = json.loads( capsys.readouterr().out )
    assert data['p'] == 3
    assert data['B'] == [3, 1]
    assert [ c['quotient_type'] for c in data['certificate'] ] == [ [2], [2, 1], [3, 1] ]


def test_realize_repeated_final_partition( capsys ):
    assert main( [ 'realize', '[[1],[1]]', '--json' ] ) == EXIT_OK
    data = json.loads( capsys.readouterr().out )
    assert data['A_generators'] == []
    assert [ c['quotient_type'] for c in data['certificate'] ] == [ [1], [1] ]


def test_realize_text( capsys ):
    assert main( [ 'realize', '[[1],[2],[3]]' ] ) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith( 'B = M_2([3])' )
    assert 'h = 2: B/p^hA has type [3]' in out


def test_analyze_and_decompose( capsys ):
    assert main( [ 'analyze', Q31 ] ) == EXIT_OK
    out = capsys.readouterr().out
    assert 'sequence      : [[2],[2,1],[3,1]]' in out
    assert 'decomposition : Q(3,1)' in out
    assert main( [ 'decompose', Q31, '--json' ] ) == EXIT_OK
    assert json.loads( capsys.readouterr().out ) == [ 'Q(3,1)' ]


def test_embedding_from_file( tmp_path, capsys ):
    f = tmp_path / 'embedding.json'
    f.write_text( Q31 )
    assert main( [ 'decompose', str( f ) ] ) == EXIT_OK
    assert capsys.readouterr().out.strip() == 'Q(3,1)'


def test_tableau( capsys ):
    assert main( [ 'tableau', '[[2],[2,1],[3,1]]' ] ) == EXIT_OK
    assert capsys.readouterr().out == '.1\n.\n2\n'


def test_oracle( tmp_path, capsys ):
    assert main( [ 'oracle', '--max-weight', '2' ] ) == EXIT_OK
    assert 'No violations.' in capsys.readouterr().out
    out = tmp_path / 'report.json'
    assert main( [ 'oracle', '--max-weight', '2', '--p', '3', '--out', str( out ) ] ) == EXIT_OK
    assert json.loads( out.read_text() )['ok'] is True


def test_oracle_bound( capsys ):
    assert main( [ 'oracle', '--max-weight', '12' ] ) == EXIT_INPUT


def test_config_file( tmp_path, capsys ):
    ini = tmp_path / 'lrembed.ini'
    ini.write_text( '[OUTPUT]\nformat = json\n' )
    assert main( [ 'coeff', '[2,1]', '[3,2,1]', '[2,1]', '--config', str( ini ) ] ) == EXIT_OK
    assert json.loads( capsys.readouterr().out ) == { 'coefficient' : 2 }
    assert main( [ 'coeff', '[1]', '[1]', '[]', '--config', str( tmp_path / 'missing.ini' ) ] ) == EXIT_INPUT


def test_out_file( tmp_path, capsys ):
    out = tmp_path / 'coeff.txt'
    assert main( [ 'coeff', '[1]', '[2]', '[1]', '--out', str( out ) ] ) == EXIT_OK
    assert out.read_text() == '1\n'
    assert capsys.readouterr().out == ''


def test_usage_errors():
    with pytest.raises( SystemExit ):
        main( [] )
    with pytest.raises( SystemExit ):
        main( [ 'coeff', '[1]' ] )


def test_partition_argument():
    assert parse_partition_arg( '[3,1]' ) == Partition( (3, 1) )


def test_internal_errors_are_not_input_errors( monkeypatch ):
    def broken( seq_type ):
        raise TypeError( 'unexpected' )
    monkeypatch.setattr( 'lrembed.cli.enumerate_lr', broken )
    with pytest.raises( TypeError ):
        main( [ 'coeff', '[1]', '[2]', '[1]' ] )
