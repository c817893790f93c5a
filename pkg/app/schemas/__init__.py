from app.schemas.common import BetaSummary, ErrorReport, Report, RunConfig
from app.schemas.markov import (
    CertificateReport,
    CodingReport,
    CutPointSchema,
    EntropyReport,
    MarkovBundle,
    MarkovReport,
    MeasureReport,
    R1Report,
    StateSchema,
)
from app.schemas.orbit import (
    ClosedFormReport,
    ClosedFormRowSchema,
    FixedPointBoundsReport,
    OrbitOrderReport,
    OrbitReport,
    OrbitRow,
    OrderCheckSchema,
)
from app.schemas.spectrum import (
    CensusReport,
    CensusRowSchema,
    ParityCellSchema,
    ParityReport,
    SpectrumBundle,
    SpectrumCell,
    SpectrumReport,
)
from app.schemas.verdict import VerdictReport, WitnessSchema

__all__ = [
    "BetaSummary",
    "CensusReport",
    "CensusRowSchema",
    "CertificateReport",
    "ClosedFormReport",
    "ClosedFormRowSchema",
    "CodingReport",
    "CutPointSchema",
    "EntropyReport",
    "ErrorReport",
    "FixedPointBoundsReport",
    "MarkovBundle",
    "MarkovReport",
    "MeasureReport",
    "OrbitOrderReport",
    "OrbitReport",
    "OrbitRow",
    "OrderCheckSchema",
    "ParityCellSchema",
    "ParityReport",
    "R1Report",
    "Report",
    "RunConfig",
    "SpectrumBundle",
    "SpectrumCell",
    "SpectrumReport",
    "VerdictReport",
    "WitnessSchema",
]
