import configparser

import pytest

from lrembed.utils.config import read_config, config_value
from lrembed.utils.errors import InputFormatError, LREmbedError, PrimeError
from lrembed.utils.utils import ( check_prime, debug_lines, feedback_prefix, is_prime, load_json_arg,
                                  valuation, write_feedback )


def test_defaults_without_file():
    conf = read_config()
    assert config_value( conf, 'ORACLE', 'p' ) == 2
    assert config_value( conf, 'COMPUTING', 'max_census_order' ) == 1024
    assert conf['OUTPUT']['format'] == 'text'


def test_file_overrides_defaults( tmp_path ):
    ini = tmp_path / 'lrembed.ini'
    ini.write_text( '[ORACLE]\np = 3\n' )
    conf = read_config( str( ini ) )
    assert config_value( conf, 'ORACLE', 'p' ) == 3
    # untouched keys keep their defaults
    assert config_value( conf, 'ORACLE', 'max_weight' ) == 4


def test_explicit_value_wins():
    conf = read_config()
    assert config_value( conf, 'ORACLE', 'p', 5 ) == 5


def test_parser_passes_through():
    conf = configparser.ConfigParser()
    assert read_config( conf ) is conf


def test_missing_config_file( tmp_path ):
    with pytest.raises( FileNotFoundError ):
        read_config( str( tmp_path / 'nope.ini' ) )


def test_feedback_goes_to_logfile( tmp_path, capsys ):
    log = tmp_path / 'run.log'
    write_feedback( 'FIRST:               one', logfile = str( log ) )
    write_feedback( [ 'SECOND:              two', 'SECOND:              three' ], logfile = str( log ) )
    assert log.read_text().splitlines() == [ 'FIRST:               one', 'SECOND:              two',
                                             'SECOND:              three' ]
    assert capsys.readouterr().out == ''


def test_feedback_prints_without_logfile( capsys ):
    write_feedback( 'X' )
    assert capsys.readouterr().out == 'X\n'


def test_prefix_and_debug_lines():
    assert feedback_prefix( 'realize_full' ) == 'REALIZE_FULL:        '
    lines = debug_lines( 'cross_validate', { 'p' : 2 } )
    assert lines[0].startswith( 'CROSS_VALIDATE.DEBUG' )
    assert lines[1].rstrip().endswith( 'p : 2' )


@pytest.mark.parametrize( 'p, expected', [ (2, True), (3, True), (4, False), (1, False), (0, False), (97, True) ] )
def test_is_prime( p, expected ):
    assert is_prime( p ) is expected


def test_check_prime_raises():
    with pytest.raises( PrimeError ):
        check_prime( 4 )
    with pytest.raises( LREmbedError ):
        check_prime( 1 )


def test_valuation():
    assert valuation( 24, 2 ) == 3
    assert valuation( -9, 3 ) == 2
    assert valuation( 5, 2 ) == 0


def test_json_argument_inline_or_file( tmp_path ):
    f = tmp_path / 'lam.json'
    f.write_text( '[3, 1]' )
    assert load_json_arg( str( f ) ) == [3, 1]
    assert load_json_arg( '[2]' ) == [2]
    bad = tmp_path / 'bad.json'
    bad.write_text( '[3,' )
    for text in ( str( bad ), '[1', 'not json' ):
        with pytest.raises( InputFormatError ):
            load_json_arg( text )
