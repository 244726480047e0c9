"""Exact enumeration of Catalan convolutions and k-in-n polygon dissections."""

from catconv.core import (
    DomainError,
    average_cycles_closed,
    binomial,
    catalan,
    convolution_lhs,
    convolution_rhs,
    f_closed,
    lemma_pq_sum,
    segner_sum,
    weighted_catalan_sum,
)
from catconv.model import Dissection, KInN, ParseError, as_k_in_n, faces, parse, serialize
from catconv.verify import IdentityReport, verify_identity

__all__ = [
    "DomainError",
    "Dissection",
    "IdentityReport",
    "KInN",
    "ParseError",
    "as_k_in_n",
    "average_cycles_closed",
    "binomial",
    "catalan",
    "convolution_lhs",
    "convolution_rhs",
    "f_closed",
    "faces",
    "lemma_pq_sum",
    "parse",
    "segner_sum",
    "serialize",
    "verify_identity",
    "weighted_catalan_sum",
]

__version__ = "0.1.0"
