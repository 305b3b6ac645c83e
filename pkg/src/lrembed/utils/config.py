################## Importing packages ####################

import configparser


################## Defaults ####################

# Values used whenever a config file is not given or does not set a key. Layout mirrors
#   docs/example_config.ini.
DEFAULTS = {
    'COMPUTING' : { 'nprocs'                      : '1',
                    'max_census_order'            : '1024',
                    'max_iso_order'               : '64',
                    'max_automorphism_candidates' : '200000' },
    'ORACLE'    : { 'p'                           : '2',
                    'max_weight'                  : '4',
                    'random_automorphisms'        : '50',
                    'seed'                        : '0' },
    'OUTPUT'    : { 'format'                      : 'text' },
}


################## Functions ####################

def read_config( config = None ):
    """
    Builds the ConfigParser used by the drivers, with the package defaults loaded first and the
    values from the config file (if any) layered on top.
    
    Optional Parameters
    -------------------
    
            config          String, ConfigParser, or None
            
                                [ Default = None ]
                                
                                The file name (with path) of the configuration file. If a ConfigParser
                                is passed it is returned unchanged. If None, only the defaults are used.
    
    Returns
    -------
    
            conf            ConfigParser
    """
    if isinstance( config, configparser.ConfigParser ):
        return config
    
    conf = configparser.ConfigParser()
    conf.read_dict( DEFAULTS )
    if config is not None:
        found = conf.read( config )
        if len(found) == 0:
            raise FileNotFoundError( 'Config file not found: {0}'.format(config) )
    return conf


def config_value( conf, section, key, value = None, kind = int ):
    """
    Returns value if it was given explicitly, otherwise the config value converted with kind.
    """
    if value is not None:
        return value
    raw = conf[section][key]
    if kind is bool:
        return conf[section].getboolean(key)
    return kind( raw )
