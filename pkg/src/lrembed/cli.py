"""
Command-line front end.

    lrembed check     '[[1],[2],[3]]'
    lrembed coeff     [2,1] [3,2,1] [2,1]
    lrembed enumerate [2,1] [3,2,1] [2,1]
    lrembed realize   '[[2],[2,1],[3,1]]' --p 2
    lrembed analyze   '{"module": {"p": 2, "lambda": [3,1]}, "generators": [[2,1]]}'
    lrembed decompose embedding.json
    lrembed oracle    --p 3 --max-weight 4 --out report.json
    lrembed tableau   '[[2],[2,1],[3,1]]'

Exit codes: 0 success or true, 1 false or violations, 2 bad input, 3 internal disagreement.
"""

################## Importing packages ####################

import argparse
import json
import sys

from .algebra.embed import Embedding, analyze, decompose
from .algebra.pmod import is_p_bounded
from .algebra.realize import realize_full
from .combinat.lrseq import ( PartitionSequence, SequenceType, enumerate_lr, validate_inequalities,
                              validate_windows, validate_word )
from .combinat.partitions import Partition
from .combinat.tableau import render_tableau
from .oracle.crossval import cross_validate
from .utils.config import read_config, config_value
from .utils.errors import LREmbedError, NotIncreasingError, VerificationError
from .utils.utils import check_prime, load_json_arg


EXIT_OK       = 0
EXIT_FALSE    = 1
EXIT_INPUT    = 2
EXIT_INTERNAL = 3


################## Helpers ####################


def parse_partition_arg( text ):
    """Partition from inline JSON ('[3,1]') or from a file holding it."""
    return Partition.from_json( load_json_arg( text ) )


def _sequence_arg( text ):
    return PartitionSequence.from_json( load_json_arg( text ) )


def _embedding_arg( text ):
    return Embedding.from_json( load_json_arg( text ) )


def _type_args( args ):
    return SequenceType( parse_partition_arg( args.alpha ), parse_partition_arg( args.beta ),
                         parse_partition_arg( args.gamma ) )


def _emit( args, text = None, obj = None ):
    """Writes obj as JSON when --json is set (or the config asks for it), text otherwise."""
    payload = json.dumps( obj, indent = 2 ) if args.as_json and obj is not None else text
    if args.out is not None:
        with open( args.out, 'w' ) as fp:
            fp.write( payload + '\n' )
    else:
        print( payload )


################## Commands ####################


def cmd_check( args ):
    seq = _sequence_arg( args.sequence )
    if not seq.is_increasing():
        raise NotIncreasingError( 'Sequence {0} is not increasing'.format( seq ) )
    verdicts = { 'inequalities' : validate_inequalities( seq ),
                 'word'         : validate_word( seq ),
                 'windows'      : validate_windows( seq ) }
    agree = len( set( verdicts.values() ) ) == 1
    lines = [ '{0: <12} : {1}'.format( k, v ) for k, v in verdicts.items() ]
    lines.append( '{0: <12} : {1}'.format( 'agreement', agree ) )
    _emit( args, '\n'.join( lines ), dict( verdicts, sequence = seq.to_json(), agreement = agree ) )
    if not agree:
        return EXIT_INTERNAL
    return EXIT_OK if verdicts['inequalities'] else EXIT_FALSE


def cmd_coeff( args ):
    coeff = len( enumerate_lr( _type_args( args ) ) )
    _emit( args, str( coeff ), { 'coefficient' : coeff } )
    return EXIT_OK


def cmd_enumerate( args ):
    seqs = enumerate_lr( _type_args( args ) )
    _emit( args, '\n'.join( str(s) for s in seqs ), [ s.to_json() for s in seqs ] )
    return EXIT_OK


def cmd_realize( args, conf ):
    p = check_prime( config_value( conf, 'ORACLE', 'p', args.p ) )
    seq = _sequence_arg( args.sequence )
    witness = realize_full( seq, p, logfile = args.logfile, debug = args.debug )
    lines = [ 'B = {0}'.format( witness.ambient ), 'A = {0}'.format( witness.sub ), 'certificate:' ]
    lines += [ '  h = {0}: B/p^hA has type {1}'.format( c['h'], c['quotient_type'] ) for c in witness.certificate ]
    _emit( args, '\n'.join( lines ), witness.to_json() )
    return EXIT_OK


def cmd_analyze( args ):
    E = _embedding_arg( args.embedding )
    seq = analyze( E )
    obj = { 'sequence' : seq.to_json() }
    lines = [ 'sequence      : {0}'.format( seq ) ]
    if is_p_bounded( E.sub, 2 ):
        M = decompose( E, debug = args.debug )
        obj['decomposition'] = M.to_json()
        lines.append( 'decomposition : {0}'.format( M ) )
    _emit( args, '\n'.join( lines ), obj )
    return EXIT_OK


def cmd_decompose( args ):
    M = decompose( _embedding_arg( args.embedding ), debug = args.debug )
    _emit( args, str( M ), M.to_json() )
    return EXIT_OK


def cmd_oracle( args, conf ):
    report = cross_validate( p = args.p, max_weight = args.max_weight, nprocs = args.nprocs, config = conf,
                             logfile = args.logfile, debug = args.debug )
    if args.out is not None:
        report.write( args.out )
    else:
        print( json.dumps( report.to_json(), indent = 2 ) if args.as_json else report.to_text() )
    return EXIT_OK if report.ok else EXIT_FALSE


def cmd_tableau( args ):
    seq = _sequence_arg( args.sequence )
    if not seq.is_increasing():
        raise NotIncreasingError( 'Sequence {0} is not increasing'.format( seq ) )
    _emit( args, render_tableau( seq ), { 'rows' : render_tableau( seq ).split('\n') } )
    return EXIT_OK


################## Parser ####################


def build_parser():
    common = argparse.ArgumentParser( add_help = False )
    common.add_argument( '--p', type = int, default = None, help = 'prime (default from config, 2)' )
    common.add_argument( '--max-weight', type = int, default = None, dest = 'max_weight',
                         help = 'largest |beta| for the oracle sweep' )
    common.add_argument( '--nprocs', type = int, default = None, help = 'worker processes for the oracle' )
    common.add_argument( '--json', action = 'store_true', dest = 'json', help = 'JSON output' )
    common.add_argument( '--out', default = None, help = 'write output to this file' )
    common.add_argument( '--config', default = None, help = 'INI configuration file' )
    common.add_argument( '--logfile', default = None, help = 'append progress lines to this file' )
    common.add_argument( '--debug', action = 'store_true', help = 'print debugging lines' )

    parser = argparse.ArgumentParser( prog = 'lrembed',
                                      description = 'LR sequences and subgroup embeddings of finite abelian p-groups' )
    sub = parser.add_subparsers( dest = 'command', required = True )

    p = sub.add_parser( 'check', parents = [common], help = 'run the three LR validators' )
    p.add_argument( 'sequence', help = 'partition sequence, inline JSON or file' )

    for name, helptext in ( ( 'coeff', 'LR coefficient' ), ( 'enumerate', 'list LR sequences of a type' ) ):
        p = sub.add_parser( name, parents = [common], help = helptext )
        p.add_argument( 'alpha' )
        p.add_argument( 'beta' )
        p.add_argument( 'gamma' )

    p = sub.add_parser( 'realize', parents = [common], help = 'construct a witness embedding' )
    p.add_argument( 'sequence' )

    for name, helptext in ( ( 'analyze', 'partition sequence of an embedding' ),
                            ( 'decompose', 'indecomposable summands of a p^2-bounded embedding' ) ):
        p = sub.add_parser( name, parents = [common], help = helptext )
        p.add_argument( 'embedding', help = '{"module": {"p":..,"lambda":[..]}, "generators": [[..]]}' )

    sub.add_parser( 'oracle', parents = [common], help = 'exhaustive cross-validation' )

    p = sub.add_parser( 'tableau', parents = [common], help = 'render the tableau of a sequence' )
    p.add_argument( 'sequence' )
    return parser


def main( argv = None ):
    parser = build_parser()
    args = parser.parse_args( argv )
    try:
        conf = read_config( args.config )
        args.as_json = args.json or conf['OUTPUT']['format'].lower() == 'json'
        if args.command == 'check':
            return cmd_check( args )
        if args.command == 'coeff':
            return cmd_coeff( args )
        if args.command == 'enumerate':
            return cmd_enumerate( args )
        if args.command == 'realize':
            return cmd_realize( args, conf )
        if args.command == 'analyze':
            return cmd_analyze( args )
        if args.command == 'decompose':
            return cmd_decompose( args )
        if args.command == 'oracle':
            return cmd_oracle( args, conf )
        return cmd_tableau( args )
    except VerificationError as err:
        print( 'LREMBED:             internal check failed: {0}'.format( err ), file = sys.stderr )
        return EXIT_INTERNAL
    except ( LREmbedError, FileNotFoundError ) as err:
        print( 'LREMBED:             error: {0}'.format( err ), file = sys.stderr )
        return EXIT_INPUT


if __name__ == '__main__':
    sys.exit( main() )
