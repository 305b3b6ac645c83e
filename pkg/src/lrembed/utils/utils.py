################## Importing packages ####################

import json
import os

from .errors import InputFormatError, PrimeError


################## Functions ####################


def write_feedback( feedback_msg, logfile = None ):
    """
    Writes a progress line to the log file, if one was given, or prints it to the terminal.
    
    Required Parameters
    -------------------
    
            feedback_msg    String or List of Strings
            
                                Line(s) to write. Lines are expected to carry the routine prefix already,
                                eg. 'CROSS_VALIDATE:      Census for beta = [3,1]'.
    
    Optional Parameters
    -------------------
    
            logfile         String or None
                            
                                [ Default = None ]
                            
                                File name (and path) of a log file in which to provide feedback on the 
                                function's progress. If not provided, progress will be printed to the 
                                terminal.
    """
    if isinstance( feedback_msg, str ):
        feedback_msg = [ feedback_msg, ]
    if logfile is not None:
        with open(logfile,'a') as lf:
            for flin in feedback_msg:
                lf.write( '{0}\n'.format(flin) )
    else:
        for flin in feedback_msg:
            print(flin)


def debug_lines( routine, params ):
    """
    Formats the parameter listing printed at the start of a driver when debug is set.
    
    Returns one line per (name, value) pair of the params dictionary, in insertion order.
    """
    prefix = '{0}.DEBUG'.format( routine.upper() )
    lines = [ '{0: <25}Parameters set manually or determined from config file:'.format(prefix) ]
    for key, val in params.items():
        lines.append( '{0: <25}    {1: >16} : {2}'.format( prefix, key, val ) )
    return lines


def feedback_prefix( routine ):
    """Routine prefix padded to the feedback column, eg. 'REALIZE_FULL:        '."""
    return '{0: <21}'.format( routine.upper() + ':' )


def is_prime( p ):
    """Trial division; the primes used here are tiny."""
    if not isinstance( p, int ) or p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def check_prime( p ):
    """Raises PrimeError unless p is a prime."""
    if not is_prime( p ):
        raise PrimeError( 'p must be a prime, got {0!r}'.format(p) )
    return p


def valuation( n, p ):
    """Exponent of p in the nonzero integer n."""
    n = abs(int(n))
    if n == 0:
        raise ValueError( 'valuation of 0 is undefined' )
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def load_json_arg( text ):
    """
    Reads a CLI argument that is either inline JSON or the name of a file containing JSON.
    """
    try:
        if os.path.isfile( text ):
            with open( text ) as fp:
                return json.load( fp )
        return json.loads( text )
    except json.JSONDecodeError as err:
        raise InputFormatError( 'Cannot read JSON from {0!r}: {1}'.format( text, err ) )
