from . import errors, config, utils
