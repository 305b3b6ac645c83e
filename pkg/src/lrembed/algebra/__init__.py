from . import snf, pmod, embed, realize
