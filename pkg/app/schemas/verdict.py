"""
Isomorphism verdict schema.
"""
from pydantic import BaseModel
from typing import List, Optional

from app.schemas.markov import CertificateReport


class WitnessSchema(BaseModel):
    """A level k taken on positive length on exactly one side"""
    k: int
    length_plus: str
    length_minus: str
    length_plus_decimal: str
    length_minus_decimal: str


class VerdictReport(BaseModel):
    tag: str
    n: int
    witnesses: List[WitnessSchema] = []
    case: Optional[str] = None
    predicted: List[int] = []
    prediction_mode: Optional[str] = None
    matches_prediction: bool = True
    certificate: Optional[CertificateReport] = None
