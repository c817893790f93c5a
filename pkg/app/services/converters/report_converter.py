"""
Analysis results to report schemas.
Converts the exact service dataclasses into pydantic models for JSON export,
writing field elements both as residues in beta and as decimals.
"""
import logging
from typing import List, Optional, Sequence

from app.core.config import get_settings
from app.schemas.common import BetaSummary, Report, RunConfig
from app.schemas.markov import (
    CertificateReport,
    CodingReport,
    CutPointSchema,
    EntropyReport,
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
    SpectrumCell,
    SpectrumReport,
)
from app.schemas.verdict import VerdictReport, WitnessSchema
from app.services.algebra import AlgebraicField, BetaClass, classify_beta, to_decimal, to_expression
from app.services.dynamics import (
    ClosedFormRow,
    FixedPointBoundsResult,
    OrbitOrderResult,
    OrbitTable,
    fixed_points,
    orbit_rows,
)
from app.services.markov import (
    Certificate,
    CodingResult,
    EntropyEnclosure,
    MarkovMeasure,
    MarkovPartition,
    R1Result,
    TransitionMatrix,
    directed_decimal,
)
from app.services.monotonicity import CensusResult, ParityResult, PreimageSpectrum, Verdict, mass, spectrum_rows

logger = logging.getLogger(__name__)


class ReportConverter:
    """
    Converter from analysis results to report schemas.
    Every method is pure; digits defaults to DECIMAL_DIGITS.
    """

    @staticmethod
    def beta_summary(field: AlgebraicField, beta_class: Optional[BetaClass] = None, digits: Optional[int] = None) -> BetaSummary:
        beta_class = beta_class or classify_beta(field)
        lo, hi = field.interval
        return BetaSummary(
            beta_spec=field.spec,
            minpoly=field.minpoly.to_text(),
            degree=field.degree,
            interval=[str(lo), str(hi)],
            decimal=to_decimal(field.beta, digits),
            regime=str(beta_class),
            n=beta_class.n,
        )

    @staticmethod
    def envelope(field: AlgebraicField, config: RunConfig, result, passed: Optional[bool] = None) -> Report:
        """
        Wrap a result schema with the beta summary and the run configuration.

        Args:
            field: Field of beta the result was computed in
            config: Command parameters
            result: Any report schema
            passed: Overall outcome for verify targets

        Returns:
            Report ready for model_dump_json
        """
        beta_class = classify_beta(field)
        summary = ReportConverter.beta_summary(field, beta_class, config.digits)
        return Report[type(result)](
            version=get_settings().APP_VERSION,
            beta_spec=field.spec,
            regime=str(beta_class),
            beta=summary,
            config=config,
            result=result,
            passed=passed,
        )

    @staticmethod
    def orbit(table: OrbitTable, digits: Optional[int] = None) -> OrbitReport:
        return OrbitReport(
            map=table.map.name,
            depth=table.depth,
            points=[OrbitRow(k=k, exact=exact, decimal=decimal) for k, exact, decimal in orbit_rows(table, digits)],
            fixed_points=[to_expression(x) for x in fixed_points(table.map)],
        )

    @staticmethod
    def fixed_point_bounds(result: FixedPointBoundsResult) -> FixedPointBoundsReport:
        return FixedPointBoundsReport(
            n=result.n,
            checks=[OrderCheckSchema.model_validate(check) for check in result.checks],
            equality=result.equality,
            holds=result.holds,
        )

    @staticmethod
    def closed_form(rows: Sequence[ClosedFormRow]) -> ClosedFormReport:
        return ClosedFormReport(
            rows=[
                ClosedFormRowSchema(
                    k=row.k,
                    closed_form=to_expression(row.closed_form),
                    iterate=to_expression(row.iterate),
                    holds=row.holds,
                )
                for row in rows
            ],
            holds=all(row.holds for row in rows),
        )

    @staticmethod
    def orbit_order(result: OrbitOrderResult) -> OrbitOrderReport:
        return OrbitOrderReport(
            chain=result.chain,
            checks=[OrderCheckSchema.model_validate(check) for check in result.checks],
            permutation=result.permutation,
            holds=result.holds,
        )

    @staticmethod
    def spectrum(spectrum: PreimageSpectrum, digits: Optional[int] = None) -> SpectrumReport:
        total = mass(spectrum)
        return SpectrumReport(
            map=spectrum.map.name,
            n=spectrum.n,
            cells=[
                SpectrumCell(left=left, right=right, value=value, left_exact=left_exact, right_exact=right_exact)
                for left, right, value, left_exact, right_exact in spectrum_rows(spectrum, digits)
            ],
            maximum=spectrum.maximum,
            minimum=spectrum.minimum,
            mass=to_expression(total),
            mass_identity=total == spectrum.map.field.beta ** spectrum.n,
        )

    @staticmethod
    def census(result: CensusResult, target: str) -> CensusReport:
        rows = result.rows
        if target == "kappa":
            rows = [row for row in rows if row.map == "T"]
        elif target == "iota":
            rows = [row for row in rows if row.map == "S"]
        return CensusReport(
            n=result.n,
            case=result.case,
            target=target,
            rows=[CensusRowSchema.model_validate(row) for row in rows],
            holds=all(row.matches for row in rows),
        )

    @staticmethod
    def parity(result: ParityResult) -> ParityReport:
        return ParityReport(
            n=result.n,
            maximum=result.maximum,
            minimum=result.minimum,
            cells=[ParityCellSchema.model_validate(cell) for cell in result.cells],
            odd_below_even=result.odd_below_even,
            maximum_on_first_cell=result.maximum_on_first_cell,
            holds=result.holds,
        )

    @staticmethod
    def states(transitions: TransitionMatrix) -> List[StateSchema]:
        return [
            StateSchema(label=i, left=to_expression(lo), right=to_expression(hi))
            for i, (lo, hi) in enumerate(transitions.states, start=1)
        ]

    @staticmethod
    def r1(result: R1Result) -> R1Report:
        return R1Report(
            irreducible=result.irreducible,
            contiguous=result.contiguous,
            spectral_radius_ok=result.spectral_radius_ok,
            charpoly_divisible=result.charpoly_divisible,
            positive_eigenvector=result.positive_eigenvector,
            noncontiguous_rows=result.noncontiguous_rows,
            holds=result.holds,
        )

    @staticmethod
    def measure(measure: MarkovMeasure, digits: Optional[int] = None) -> MeasureReport:
        return MeasureReport(
            P=[[to_expression(entry) for entry in row] for row in measure.P],
            q=[to_expression(entry) for entry in measure.q],
            q_decimal=[to_decimal(entry, digits) for entry in measure.q],
        )

    @staticmethod
    def entropy(enclosure: EntropyEnclosure, digits: Optional[int] = None) -> EntropyReport:
        """Lower ends rounded down, upper ends and the width rounded up."""
        digits = digits or get_settings().DECIMAL_DIGITS
        return EntropyReport(
            lo=directed_decimal(enclosure.lo, digits, upward=False),
            hi=directed_decimal(enclosure.hi, digits, upward=True),
            log_beta_lo=directed_decimal(enclosure.log_beta_lo, digits, upward=False),
            log_beta_hi=directed_decimal(enclosure.log_beta_hi, digits, upward=True),
            contains_log_beta=enclosure.contains_log_beta,
            width=directed_decimal(enclosure.width, digits, upward=True),
        )

    @staticmethod
    def coding(result: CodingResult) -> CodingReport:
        return CodingReport(
            depth=result.depth,
            admissible=[result.admissible[length] for length in sorted(result.admissible)],
            cells=result.cells,
            nonempty=result.nonempty,
            single_intervals=result.single_intervals,
            tiles=result.tiles,
            shift_compatible=result.shift_compatible,
            forbidden_empty=result.forbidden_empty,
            holds=result.holds,
        )

    @staticmethod
    def markov(
        map_name: str,
        partition: Optional[MarkovPartition],
        transitions: Optional[TransitionMatrix] = None,
        r1: Optional[R1Result] = None,
        measure: Optional[MarkovMeasure] = None,
        enclosure: Optional[EntropyEnclosure] = None,
        coding: Optional[CodingResult] = None,
        digits: Optional[int] = None,
    ) -> MarkovReport:
        if partition is None:
            return MarkovReport(map=map_name, found=False)
        return MarkovReport(
            map=map_name,
            found=True,
            cut_points=[to_expression(point) for point in partition.cut_points],
            extra_points=list(partition.extra_points),
            scheme=transitions.scheme if transitions else None,
            states=ReportConverter.states(transitions) if transitions else [],
            matrix=transitions.as_lists() if transitions else [],
            r1=ReportConverter.r1(r1) if r1 else None,
            measure=ReportConverter.measure(measure, digits) if measure else None,
            entropy=ReportConverter.entropy(enclosure, digits) if enclosure else None,
            coding=ReportConverter.coding(coding) if coding else None,
        )

    @staticmethod
    def cut_points(map_name: str, transitions: TransitionMatrix) -> List[CutPointSchema]:
        return [
            CutPointSchema(map=map_name, state=state.label, left=state.left, right=state.right)
            for state in ReportConverter.states(transitions)
        ]

    @staticmethod
    def certificate(certificate: Certificate, digits: Optional[int] = None) -> CertificateReport:
        return CertificateReport(
            n=certificate.n,
            matrix=certificate.matrix,
            matrices_equal=certificate.matrices_equal,
            permutation=list(certificate.permutation) if certificate.permutation else None,
            cut_points=ReportConverter.cut_points("T", certificate.matrix_T)
            + ReportConverter.cut_points("S", certificate.matrix_S),
            r1=ReportConverter.r1(certificate.r1_T),
            entropy=ReportConverter.entropy(certificate.entropy, digits) if certificate.entropy else None,
        )

    @staticmethod
    def verdict(verdict: Verdict, digits: Optional[int] = None) -> VerdictReport:
        return VerdictReport(
            tag=verdict.tag.value,
            n=verdict.n,
            witnesses=[
                WitnessSchema(
                    k=w.k,
                    length_plus=to_expression(w.length_plus),
                    length_minus=to_expression(w.length_minus),
                    length_plus_decimal=to_decimal(w.length_plus, digits),
                    length_minus_decimal=to_decimal(w.length_minus, digits),
                )
                for w in verdict.witnesses
            ],
            case=verdict.case,
            predicted=verdict.predicted,
            prediction_mode=verdict.prediction_mode if verdict.predicted else None,
            matches_prediction=verdict.matches_prediction,
            certificate=ReportConverter.certificate(verdict.certificate, digits) if verdict.certificate else None,
        )
