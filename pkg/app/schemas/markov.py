"""
Markov partition, transition matrix, measure and certificate schemas.
"""
from pydantic import BaseModel
from typing import List, Optional


class StateSchema(BaseModel):
    label: int
    left: str
    right: str


class R1Report(BaseModel):
    irreducible: bool
    contiguous: bool
    spectral_radius_ok: bool
    charpoly_divisible: bool
    positive_eigenvector: bool
    noncontiguous_rows: List[int] = []
    holds: bool


class MeasureReport(BaseModel):
    """Parry measure: stochastic matrix P and stationary vector q"""
    P: List[List[str]]
    q: List[str]
    q_decimal: List[str]


class EntropyReport(BaseModel):
    """Decimal bounds rounded outward from the exact enclosure"""
    lo: str
    hi: str
    log_beta_lo: str
    log_beta_hi: str
    contains_log_beta: bool
    width: str


class CodingReport(BaseModel):
    depth: int
    admissible: List[int]
    cells: int
    nonempty: bool
    single_intervals: bool
    tiles: bool
    shift_compatible: bool
    forbidden_empty: bool
    holds: bool


class MarkovReport(BaseModel):
    """Everything known about one map's Markov partition"""
    map: str
    found: bool
    cut_points: List[str] = []
    extra_points: List[str] = []
    scheme: Optional[str] = None
    states: List[StateSchema] = []
    matrix: List[List[int]] = []
    r1: Optional[R1Report] = None
    measure: Optional[MeasureReport] = None
    entropy: Optional[EntropyReport] = None
    coding: Optional[CodingReport] = None


class CutPointSchema(BaseModel):
    map: str
    state: int
    left: str
    right: str


class CertificateReport(BaseModel):
    n: int
    matrix: List[List[int]]
    matrices_equal: bool
    permutation: Optional[List[int]] = None
    cut_points: List[CutPointSchema]
    r1: R1Report
    entropy: Optional[EntropyReport] = None


class MarkovBundle(BaseModel):
    """Markov reports of both maps"""
    reports: List[MarkovReport]
