from . import utils, combinat, algebra, oracle
