from . import partitions, tableau, lrseq
