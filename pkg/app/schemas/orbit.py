"""
Orbit dumps and the order checks on the orbit of 1.
"""
from pydantic import BaseModel
from typing import List


class OrbitRow(BaseModel):
    k: int
    exact: str
    decimal: str


class OrbitReport(BaseModel):
    """F^k(1) for k = 0..depth"""
    map: str
    depth: int
    points: List[OrbitRow]
    fixed_points: List[str]


class OrderCheckSchema(BaseModel):
    left: str
    relation: str
    right: str
    holds: bool

    class Config:
        from_attributes = True


class FixedPointBoundsReport(BaseModel):
    n: int
    checks: List[OrderCheckSchema]
    equality: bool
    holds: bool


class ClosedFormRowSchema(BaseModel):
    k: int
    closed_form: str
    iterate: str
    holds: bool


class ClosedFormReport(BaseModel):
    rows: List[ClosedFormRowSchema]
    holds: bool


class OrbitOrderReport(BaseModel):
    chain: List[str]
    checks: List[OrderCheckSchema]
    permutation: List[int]
    holds: bool
