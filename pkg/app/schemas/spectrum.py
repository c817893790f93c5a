"""
Preimage spectra, type census and parity profile schemas.
"""
from pydantic import BaseModel
from typing import List, Optional


class SpectrumCell(BaseModel):
    left: str
    right: str
    value: int
    left_exact: str
    right_exact: str


class SpectrumReport(BaseModel):
    """psi_n on every cell of one map"""
    map: str
    n: int
    cells: List[SpectrumCell]
    maximum: int
    minimum: int
    mass: str
    mass_identity: bool


class CensusRowSchema(BaseModel):
    map: str
    m: int
    j: int
    observed: int
    expected: int
    matches: bool

    class Config:
        from_attributes = True


class CensusReport(BaseModel):
    n: int
    case: Optional[str] = None
    target: str
    rows: List[CensusRowSchema]
    holds: bool


class ParityCellSchema(BaseModel):
    left: str
    right: str
    value: int
    expected: str
    holds: bool

    class Config:
        from_attributes = True


class ParityReport(BaseModel):
    n: int
    maximum: int
    minimum: int
    cells: List[ParityCellSchema]
    odd_below_even: bool
    maximum_on_first_cell: bool
    holds: bool


class SpectrumBundle(BaseModel):
    """Spectra of the requested maps at one iterate"""
    n: int
    spectra: List[SpectrumReport]
