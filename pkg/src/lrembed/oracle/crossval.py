"""
Exhaustive cross-validation of the combinatorial and module-theoretic sides.

For every module type beta up to a weight bound the full submodule census is compared with
the LR sequences enumerated from partitions, and every occurring sequence is realized again.
"""

################## Importing packages ####################

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
import json
import os

from astropy.table import Table

from ..algebra.embed import analyze
from ..algebra.pmod import PModule
from ..algebra.realize import realize_full
from ..combinat.lrseq import SequenceType, enumerate_lr, sequence_type, validate_inequalities
from ..combinat.partitions import partitions_of, partitions_up_to
from ..utils.config import read_config, config_value
from ..utils.errors import BoundExceededError, LREmbedError
from ..utils.utils import check_prime, debug_lines, feedback_prefix, write_feedback
from .census import enumerate_submodules


################## Classes ####################


@dataclass
class Report:
    """
    Outcome of cross_validate. 'rows' holds one summary dict per beta; 'violations' one dict per
    counterexample with keys check, beta and detail.
    """
    p: int
    max_weight: int
    rows: list = field( default_factory = list )
    violations: list = field( default_factory = list )

    @property
    def ok( self ):
        return len( self.violations ) == 0

    def summary_table( self ):
        """astropy Table with one row per beta."""
        names = ( 'beta', 'submodules', 'types', 'sequences', 'realized', 'violations' )
        rows = [ tuple( row[n] for n in names ) for row in self.rows ]
        table = Table( rows = rows if len(rows) > 0 else None, names = names,
                       dtype = ( str, int, int, int, int, int ) )
        table.meta['P'] = self.p
        table.meta['MAXWGHT'] = self.max_weight
        table.meta['NVIOL'] = len( self.violations )
        return table

    def to_json( self ):
        return { 'p' : self.p, 'max_weight' : self.max_weight, 'ok' : self.ok,
                 'rows' : self.rows, 'violations' : self.violations }

    def to_text( self ):
        lines = [ 'Cross-validation over p = {0}, |beta| <= {1}'.format( self.p, self.max_weight ), '' ]
        lines += self.summary_table().pformat( max_lines = -1, max_width = -1 )
        lines.append( '' )
        if self.ok:
            lines.append( 'No violations.' )
        else:
            lines.append( '{0} violation(s):'.format( len( self.violations ) ) )
            for v in self.violations:
                lines.append( '  ({0}) beta = {1}: {2}'.format( v['check'], v['beta'], v['detail'] ) )
        return '\n'.join( lines )

    def write( self, outfile ):
        """
        Writes the report; the format follows the extension: .json, .ecsv or .fits for the
        summary table (meta in the header), anything else as text.
        """
        ext = os.path.splitext( outfile )[1].lower()
        if ext == '.json':
            with open( outfile, 'w' ) as fp:
                json.dump( self.to_json(), fp, indent = 2 )
        elif ext in ( '.ecsv', '.fits' ):
            self.summary_table().write( outfile, overwrite = True )
        else:
            with open( outfile, 'w' ) as fp:
                fp.write( self.to_text() + '\n' )


################## Helpers ####################


def _violation( check, beta, detail ):
    return { 'check' : check, 'beta' : str( beta ), 'detail' : detail }


def _check_beta( args ):
    """All four checks for one ambient type. Runs in a worker process when nprocs > 1."""
    p, beta, max_order = args
    B = PModule( p, beta )
    census = enumerate_submodules( B, max_order = max_order )
    violations = []

    # (a) every census sequence is an LR sequence of the right type
    for e in census:
        seq = e.sequence
        if not validate_inequalities( seq ):
            violations.append( _violation( 'a', beta, '{0} from {1} is not an LR sequence'.format( seq, e.sub ) ) )
        elif sequence_type( seq ) != SequenceType( e.alpha, beta, e.gamma ):
            violations.append( _violation( 'a', beta, '{0} from {1} has type {2}'.format(
                                                                    seq, e.sub, sequence_type( seq ) ) ) )

    # (b) occurring sequences per type equal the enumerated LR sequences
    occurring = census.sequences_by_type()
    for ( alpha, gamma ), seqs in occurring.items():
        expected = set( enumerate_lr( SequenceType( alpha, beta, gamma ) ) )
        if seqs != expected:
            missing = sorted( str(s) for s in expected - seqs )
            extra = sorted( str(s) for s in seqs - expected )
            violations.append( _violation( 'b', beta, 'type ({0}, {1}): missing {2}, unexpected {3}'.format(
                                                                        alpha, gamma, missing, extra ) ) )

    # (c) every occurring sequence is realized again
    realized = 0
    for seqs in occurring.values():
        for seq in sorted( seqs, key = str ):
            try:
                witness = realize_full( seq, p )
                if analyze( witness.embedding ) != seq:
                    violations.append( _violation( 'c', beta, 'witness for {0} analyzes differently'.format( seq ) ) )
                else:
                    realized += 1
            except LREmbedError as err:
                violations.append( _violation( 'c', beta, 'realizing {0} failed: {1}'.format( seq, err ) ) )

    # (d) a submodule of type alpha with quotient gamma exists iff the coefficient is positive
    n = beta.weight
    for k in range( n+1 ):
        for alpha in partitions_of( k ):
            for gamma in partitions_of( n-k ):
                coeff = len( enumerate_lr( SequenceType( alpha, beta, gamma ) ) )
                if ( coeff > 0 ) != ( ( alpha, gamma ) in occurring ):
                    violations.append( _violation( 'd', beta, 'c = {0} for ({1}, {2}) but occurs = {3}'.format(
                                                            coeff, alpha, gamma, ( alpha, gamma ) in occurring ) ) )

    row = { 'beta' : str( beta ), 'submodules' : len( census ), 'types' : len( occurring ),
            'sequences' : sum( len(s) for s in occurring.values() ), 'realized' : realized,
            'violations' : len( violations ) }
    return row, violations


def _map( func, jobs, nprocs ):
    if nprocs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor( max_workers = nprocs ) as pool:
            return list( pool.map( func, jobs ) )
    return [ func( job ) for job in jobs ]


################## Functions ####################


def cross_validate( p = None, max_weight = None, nprocs = None, max_order = None, config = None, logfile = None,
                    debug = False ):
    """
    Runs the four census checks for every beta with 1 <= |beta| <= max_weight.

    Optional Parameters
    -------------------

            p               Integer or None

                                [ Default = None ]

                                Prime. If set to None, will use value imported from the provided config
                                file.

            max_weight      Integer or None

                                [ Default = None ]

                                Largest |beta|. If set to None, will use value imported from the provided
                                config file.

            nprocs          Integer or None

                                [ Default = None ]

                                Number of worker processes for the per-beta censuses. If set to None, will
                                use value imported from the provided config file.

            max_order       Integer or None

                                [ Default = None ]

                                Largest module order for which a census is built. If set to None, will use
                                value imported from the provided config file as max_census_order.

            config          String, ConfigParser or None

                                [ Default = None ]

                                The file name (with path) of the configuration file.

            logfile         String or None

                                [ Default = None ]

                                File name (and path) of a log file in which to provide feedback on the
                                function's progress. If not provided, progress will be printed to the
                                terminal.

            debug           Boolean

                                [ Default = False ]

                                If True, prints the resolved parameters.

    Returns
    -------

            report          Report

                                Rows sorted by beta; violations are report content, not errors. A
                                BoundExceededError is raised up front if p^max_weight exceeds the
                                census bound.

    Config File Parameters Used
    ---------------------------

            [COMPUTING]     nprocs, max_census_order

            [ORACLE]        p, max_weight
    """
    conf = read_config( config )
    p          = config_value( conf, 'ORACLE',    'p',                p )
    max_weight = config_value( conf, 'ORACLE',    'max_weight',       max_weight )
    nprocs     = config_value( conf, 'COMPUTING', 'nprocs',           nprocs )
    max_order  = config_value( conf, 'COMPUTING', 'max_census_order', max_order )
    check_prime( p )
    if p ** max_weight > max_order:
        raise BoundExceededError( 'p^max_weight = {0} exceeds the census bound {1}'.format( p ** max_weight,
                                                                                           max_order ) )
    if debug:
        write_feedback( debug_lines( 'cross_validate', { 'p' : p, 'max_weight' : max_weight, 'nprocs' : nprocs,
                                                         'max_order' : max_order } ) )

    prefix = feedback_prefix( 'cross_validate' )
    betas = [ beta for beta in partitions_up_to( max_weight ) if beta.weight > 0 ]
    write_feedback( '{0}Checking {1} module types over p = {2} with {3} process(es)'.format(
                                                                prefix, len(betas), p, nprocs ), logfile = logfile )

    results = _map( _check_beta, [ ( p, beta, max_order ) for beta in betas ], nprocs )
    report = Report( p, max_weight )
    for beta, ( row, violations ) in sorted( zip( betas, results ), key = lambda br: ( br[0].weight, br[0] ) ):
        report.rows.append( row )
        report.violations.extend( violations )
        write_feedback( '{0}beta = {1: <12} {2: >6} submodules, {3} violation(s)'.format(
                                    prefix, row['beta'], row['submodules'], row['violations'] ), logfile = logfile )
    return report


def census_statistics( p, max_weight, max_order = None, config = None ):
    """
    {beta: set of (type A, type B/A, sequence)} over all beta with |beta| <= max_weight. The sets
    depend on beta only, not on p.
    """
    conf = read_config( config )
    max_order = config_value( conf, 'COMPUTING', 'max_census_order', max_order )
    return { beta : enumerate_submodules( PModule( p, beta ), max_order = max_order ).triples()
             for beta in partitions_up_to( max_weight ) }
