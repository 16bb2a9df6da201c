"""Codes for DNA storage channels: deletions, unordered strands, duplications."""

import json

from ._dnacode import (
    DnacodeError,
    data_indexed_layout,
    distance_to_root_table,
    irreducible_count,
    polya_exact_dist,
    reproduce,
    set_redundancy,
    sliced_decode,
    sliced_encode,
    t_del_decode,
    t_del_encode,
    t_del_redundancy,
    tandem_root,
    tandem_roots,
    vt_data_length,
    vt_decode,
    vt_encode,
    vt_syndrome,
    weighted_sums,
)
from ._dnacode import _run


def run(module, operation, parameters=None, *, seed=0, format="text", alphabet="", input=""):
    """Dispatch one operation exactly as the command-line tool does and return the report."""
    return _run(module, operation, json.dumps(parameters or {}), seed, format, alphabet, input)


__all__ = [
    "DnacodeError",
    "data_indexed_layout",
    "distance_to_root_table",
    "irreducible_count",
    "polya_exact_dist",
    "reproduce",
    "run",
    "set_redundancy",
    "sliced_decode",
    "sliced_encode",
    "t_del_decode",
    "t_del_encode",
    "t_del_redundancy",
    "tandem_root",
    "tandem_roots",
    "vt_data_length",
    "vt_decode",
    "vt_encode",
    "vt_syndrome",
    "weighted_sums",
]
