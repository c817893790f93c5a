"""
Shared report schemas: the beta summary and the envelope every report is
wrapped in.
"""
from pydantic import BaseModel
from typing import Generic, List, Optional, TypeVar

ResultT = TypeVar("ResultT")


class BetaSummary(BaseModel):
    """Where beta lives and which regime it falls in"""
    beta_spec: Optional[str] = None
    minpoly: str
    degree: int
    interval: List[str]
    decimal: str
    regime: str
    n: int

    class Config:
        from_attributes = True


class RunConfig(BaseModel):
    """Parameters a report was produced with"""
    command: str
    target: Optional[str] = None
    map: Optional[str] = None
    n: Optional[int] = None
    m: Optional[int] = None
    depth: Optional[int] = None
    digits: int
    precision_limit: int


class Report(BaseModel, Generic[ResultT]):
    """Envelope for every CLI report"""
    version: str
    beta_spec: Optional[str] = None
    regime: str
    beta: BetaSummary
    config: RunConfig
    result: ResultT
    passed: Optional[bool] = None


class ErrorReport(BaseModel):
    """Emitted instead of a report when the command fails"""
    version: str
    beta_spec: Optional[str] = None
    error: str
    message: str
