from .kronecker import KroneckerParams, kronecker_prefix, kronecker_terms
from .sorted_sequence import (
    SortedSequence,
    check_separation,
    predecessor,
    sort_permutation,
    successor,
)
from .values import SeqValue, ValueKind
from .van_der_corput import radical_inverse, vdc_prefix, vdc_successor_bits

__all__ = [
    # kronecker
    "KroneckerParams",
    "kronecker_prefix",
    "kronecker_terms",
    # sorted_sequence
    "SortedSequence",
    "check_separation",
    "predecessor",
    "sort_permutation",
    "successor",
    # values
    "SeqValue",
    "ValueKind",
    # van_der_corput
    "radical_inverse",
    "vdc_prefix",
    "vdc_successor_bits",
]
