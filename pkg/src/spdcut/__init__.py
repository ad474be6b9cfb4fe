"""Typical sequences, dominating merges and exact width solvers for series parallel digraphs."""

from .intseq import (
    EmptySequenceError,
    TypicalView,
    dominates,
    equivalent,
    is_typical,
    parse_seq,
    typical_sequence,
    typical_sequence_naive,
)
from .mergedom import GridPath, MergeContext, NotTypicalError, merge_dominator, path_values, split_and_chop
from .spdigraph import (
    CyclicGraphError,
    Digraph,
    GraphFormatError,
    Leaf,
    NotSeriesParallelError,
    Parallel,
    Series,
    TerminalError,
    parse_graph,
    read_graph,
    recognize_spd,
)
from .width import (
    cut_size_sequence,
    cutwidth_of_order,
    mcw_transform,
    modified_cutwidth_of_order,
    spd_cutwidth,
    spd_modified_cutwidth,
    spd_weighted_cutwidth,
)

__version__ = "0.1.0"
