"""
Command-level orchestration: runs the exact services for one beta and converts
the results into report schemas.
"""
import logging
from typing import List, Optional, Tuple

from pydantic import BaseModel

from app.core.config import get_settings
from app.exceptions import InvalidArgumentException
from app.schemas.markov import MarkovBundle, MarkovReport
from app.schemas.orbit import OrbitReport
from app.schemas.spectrum import SpectrumBundle
from app.schemas.verdict import VerdictReport
from app.services.algebra import AlgebraicField, BetaClass, classify_beta
from app.services.converters import ReportConverter
from app.services.dynamics import (
    Orientation,
    make_map,
    orbit_of_one,
    orbit_order_check,
    verify_closed_form,
    verify_fixed_point_bounds,
)
from app.services.markov import (
    check_r1,
    coding_check,
    detect_markov,
    entropy,
    parry_measure,
    transition_matrix,
)
from app.services.monotonicity import (
    Verdict,
    census,
    decompose,
    obstruction_check,
    parity_profile,
    preimage_spectrum,
)

logger = logging.getLogger(__name__)

VERIFY_TARGETS = ("lemma31", "claim", "kappa", "iota", "parity", "orbit-order", "markov")

# descriptive spellings accepted for the first two targets
TARGET_ALIASES = {"fixed-point-bounds": "lemma31", "closed-form": "claim"}


def _orientations(map_name: Optional[str]) -> List[Orientation]:
    if map_name is None or map_name.lower() == "both":
        return [Orientation.POSITIVE, Orientation.NEGATIVE]
    return [Orientation.parse(map_name)]


class AnalysisService:
    """
    Runs one command against one beta and returns report schemas.
    Each public method mirrors a CLI command.
    """

    def __init__(self, field: AlgebraicField, digits: Optional[int] = None):
        self.field = field
        self.digits = digits or get_settings().DECIMAL_DIGITS
        self.beta_class: BetaClass = classify_beta(field)

    def critical_iterate(self) -> int:
        """Iterate at which the two spectra are compared: n for Gap(n)/Exact(n), 3 for SubGolden."""
        return 3 if self.beta_class.is_subgolden else self.beta_class.n

    def certify(self, forced_n: Optional[int] = None) -> Tuple[VerdictReport, Verdict]:
        verdict = obstruction_check(self.field, forced_n)
        logger.info(
            f"Verdict {verdict.tag.value} for {self.beta_class}",
            extra={"beta_spec": self.field.spec, "witnesses": verdict.witness_values},
        )
        return ReportConverter.verdict(verdict, self.digits), verdict

    def verify(
        self,
        target: str,
        n: Optional[int] = None,
        m: Optional[int] = None,
        map_name: Optional[str] = None,
        depth: Optional[int] = None,
    ) -> Tuple[BaseModel, bool]:
        """
        Run one property check.

        Returns:
            The report schema and whether the property holds

        Raises:
            InvalidArgumentException: unknown target or bad --m
        """
        target = TARGET_ALIASES.get(target, target)
        if target == "lemma31":
            if n is None:
                n = self.beta_class.n if self.beta_class.is_exact else max(self.beta_class.n - 1, 2)
            report = ReportConverter.fixed_point_bounds(verify_fixed_point_bounds(self.field, n))
            return report, report.holds

        if target == "claim":
            report = ReportConverter.closed_form(verify_closed_form(self.field, self.beta_class))
            return report, report.holds

        if target in ("kappa", "iota"):
            report = ReportConverter.census(census(self.field, n), target)
            if m is not None:
                if m < 1 or m > report.n:
                    raise InvalidArgumentException(f"--m must lie in 1..{report.n}, got {m}")
                report.rows = [row for row in report.rows if row.m == m]
                report.holds = all(row.matches for row in report.rows)
            return report, report.holds

        if target == "parity":
            n = n if n is not None else self.beta_class.n
            spectrum = preimage_spectrum(decompose(make_map(self.field, Orientation.POSITIVE), n))
            report = ReportConverter.parity(parity_profile(spectrum, n))
            return report, report.holds

        if target == "orbit-order":
            report = ReportConverter.orbit_order(orbit_order_check(self.field, self.beta_class))
            return report, report.holds

        if target == "markov":
            reports = [self.markov_report(o, depth, with_measure=False) for o in _orientations(map_name)]
            passed = all(
                r.found and r.r1 is not None and r.r1.holds and r.coding is not None and r.coding.holds
                for r in reports
            )
            return MarkovBundle(reports=reports), passed

        raise InvalidArgumentException(f"Unknown verify target {target!r}; expected one of {VERIFY_TARGETS}")

    def spectrum(self, n: Optional[int] = None, map_name: Optional[str] = None) -> SpectrumBundle:
        n = n if n is not None else self.critical_iterate()
        spectra = [
            ReportConverter.spectrum(
                preimage_spectrum(decompose(make_map(self.field, orientation), n)), self.digits
            )
            for orientation in _orientations(map_name)
        ]
        return SpectrumBundle(n=n, spectra=spectra)

    def markov_report(
        self, orientation: Orientation, depth: Optional[int] = None, with_measure: bool = True
    ) -> MarkovReport:
        """Partition, matrix, r1 and coding check; measure and entropy when the matrix qualifies."""
        pl_map = make_map(self.field, orientation)
        partition = detect_markov(pl_map)
        if partition is None:
            logger.info(f"No Markov partition for {pl_map.name} at {self.beta_class}")
            return ReportConverter.markov(pl_map.name, None)

        transitions = transition_matrix(partition)
        r1 = check_r1(transitions.matrix, self.field)
        coding = coding_check(partition, transitions, depth)
        measure = enclosure = None
        if with_measure and r1.irreducible and r1.spectral_radius_ok:
            measure = parry_measure(transitions.matrix, self.field)
            enclosure = entropy(measure)
        return ReportConverter.markov(
            pl_map.name, partition, transitions, r1, measure, enclosure, coding, self.digits
        )

    def markov(self, map_name: Optional[str] = None, depth: Optional[int] = None) -> MarkovReport:
        orientation = Orientation.parse(map_name) if map_name else Orientation.POSITIVE
        return self.markov_report(orientation, depth)

    def orbit(self, map_name: Optional[str] = None, depth: Optional[int] = None) -> OrbitReport:
        depth = depth if depth is not None else get_settings().ORBIT_DEFAULT_DEPTH
        orientation = Orientation.parse(map_name) if map_name else Orientation.POSITIVE
        return ReportConverter.orbit(orbit_of_one(make_map(self.field, orientation), depth), self.digits)
