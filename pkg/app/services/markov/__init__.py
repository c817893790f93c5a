"""
Markov partitions, transition matrices, Parry measures and the multinacci
isomorphism certificate.
"""
from app.services.markov.certificate import Certificate, certify_isomorphism
from app.services.markov.measure import (
    EntropyEnclosure,
    MarkovMeasure,
    R1Result,
    check_r1,
    cylinder_measure,
    directed_decimal,
    entropy,
    parry_measure,
)
from app.services.markov.partition import (
    CodingResult,
    MarkovPartition,
    TransitionMatrix,
    coding_check,
    detect_markov,
    transition_matrix,
)

__all__ = [
    "Certificate",
    "CodingResult",
    "EntropyEnclosure",
    "MarkovMeasure",
    "MarkovPartition",
    "R1Result",
    "TransitionMatrix",
    "certify_isomorphism",
    "check_r1",
    "coding_check",
    "cylinder_measure",
    "detect_markov",
    "directed_decimal",
    "entropy",
    "parry_measure",
    "transition_matrix",
]
