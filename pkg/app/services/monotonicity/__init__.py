"""
Intervals of monotonicity of T^n and S^n, preimage spectra and the
non-isomorphism verdict.
"""
from app.services.monotonicity.census import (
    CensusResult,
    census,
    critical_case,
    iota_closed,
    iota_n_closed,
    kappa_closed,
)
from app.services.monotonicity.decomposition import (
    BranchDecomposition,
    MonotoneBranch,
    assign_types,
    decompose,
    decompose_iterates,
)
from app.services.monotonicity.obstruction import Verdict, VerdictTag, Witness, obstruction_check
from app.services.monotonicity.spectrum import (
    LevelSet,
    ParityResult,
    PreimageSpectrum,
    count_preimages,
    level_set,
    mass,
    parity_profile,
    preimage_spectrum,
    spectrum_rows,
    value_at,
)

__all__ = [
    "BranchDecomposition",
    "CensusResult",
    "LevelSet",
    "MonotoneBranch",
    "ParityResult",
    "PreimageSpectrum",
    "Verdict",
    "VerdictTag",
    "Witness",
    "assign_types",
    "census",
    "count_preimages",
    "critical_case",
    "decompose",
    "decompose_iterates",
    "iota_closed",
    "iota_n_closed",
    "kappa_closed",
    "level_set",
    "mass",
    "obstruction_check",
    "parity_profile",
    "preimage_spectrum",
    "spectrum_rows",
    "value_at",
]
