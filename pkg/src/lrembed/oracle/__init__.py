from . import census, isomorphism, crossval
