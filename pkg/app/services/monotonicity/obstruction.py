"""
Isomorphism verdicts.

For a multinacci beta the verdict carries a Markov certificate. For every other
beta the preimage spectra of T^n and S^n are compared level by level: a value k
taken on a set of positive length on one side and on a null set on the other
rules out a measurable isomorphism, since both invariant measures are
equivalent to Lebesgue measure.
"""
import logging
from dataclasses import dataclass, field as dataclass_field
from enum import Enum
from typing import List, Optional

from app.core.metrics import track_analysis, verdicts_total
from app.exceptions import InvalidArgumentException
from app.services.algebra import AlgebraicField, BetaClass, FieldElement, classify_beta, compare
from app.services.dynamics.maps import Orientation, make_map, orbit_of_one
from app.services.markov.certificate import Certificate, certify_isomorphism
from app.services.monotonicity.census import critical_case
from app.services.monotonicity.decomposition import decompose
from app.services.monotonicity.spectrum import PreimageSpectrum, level_set, preimage_spectrum

logger = logging.getLogger(__name__)


class VerdictTag(str, Enum):
    ISOMORPHIC_MULTINACCI = "IsomorphicMultinacci"
    NOT_ISOMORPHIC = "NotIsomorphic"
    BOUNDARY_MARKOV_CASE = "BoundaryMarkovCase"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Witness:
    k: int
    length_plus: FieldElement
    length_minus: FieldElement


@dataclass
class Verdict:
    tag: VerdictTag
    beta_class: BetaClass
    n: int
    witnesses: List[Witness] = dataclass_field(default_factory=list)
    case: Optional[str] = None
    predicted: List[int] = dataclass_field(default_factory=list)
    # "all": every predicted k is a witness, "any": at least one of the pair is
    prediction_mode: str = "all"
    certificate: Optional[Certificate] = None
    spectrum_plus: Optional[PreimageSpectrum] = None
    spectrum_minus: Optional[PreimageSpectrum] = None

    @property
    def witness_values(self) -> List[int]:
        return [w.k for w in self.witnesses]

    @property
    def matches_prediction(self) -> bool:
        if not self.predicted:
            return True
        found = set(self.witness_values)
        if self.prediction_mode == "any":
            return any(k in found for k in self.predicted)
        return all(k in found for k in self.predicted)


def scan_witnesses(plus: PreimageSpectrum, minus: PreimageSpectrum) -> List[Witness]:
    """Every k whose level set is null on exactly one side."""
    witnesses = []
    for k in sorted(set(plus.values) | set(minus.values)):
        length_plus = level_set(plus, k).length
        length_minus = level_set(minus, k).length
        if length_plus.is_zero != length_minus.is_zero:
            witnesses.append(Witness(k, length_plus, length_minus))
    return witnesses


def predicted_witnesses(field: AlgebraicField, beta_class: BetaClass, n: int):
    """
    Witnesses expected from the case analysis, with the matching mode and the
    case label (None for SubGolden).
    """
    if beta_class.is_subgolden:
        return [2], "all", None
    case = critical_case(field, n)
    if n == 3:
        s_two = orbit_of_one(make_map(field, Orientation.NEGATIVE), 2)[2]
        position = compare(s_two, field.inv_beta)
        if position < 0:
            return [6], "all", case
        if position > 0:
            return [3], "all", case
        return [3, 6], "all", case
    if case == "1":
        return [2 ** n - 3, 2 ** (n - 1)], "any", case
    if case == "3*":
        return [2 ** n - 3, 2 ** (n - 2) + 2 ** (n - 1)], "any", case
    return [2 ** n - 2], "all", case


@track_analysis("obstruction_check")
def obstruction_check(field: AlgebraicField, forced_n: Optional[int] = None) -> Verdict:
    """
    Verdict for beta.

    Exact(n) delegates to the Markov certificate. SubGolden compares the
    spectra at n = 3, Gap(n) at n; forced_n overrides the iterate.
    """
    if forced_n is not None and forced_n < 1:
        raise InvalidArgumentException(f"Iterate must be at least 1, got {forced_n}")
    beta_class = classify_beta(field)

    if beta_class.is_exact:
        certificate = certify_isomorphism(field)
        verdict = Verdict(
            tag=VerdictTag.ISOMORPHIC_MULTINACCI,
            beta_class=beta_class,
            n=beta_class.n,
            certificate=certificate,
        )
        verdicts_total.labels(tag=verdict.tag.value).inc()
        return verdict

    natural_n = 3 if beta_class.is_subgolden else beta_class.n
    n = forced_n if forced_n is not None else natural_n

    plus = preimage_spectrum(decompose(make_map(field, Orientation.POSITIVE), n))
    minus = preimage_spectrum(decompose(make_map(field, Orientation.NEGATIVE), n))
    witnesses = scan_witnesses(plus, minus)

    if n == natural_n:
        predicted, mode, case = predicted_witnesses(field, beta_class, n)
    else:
        predicted, mode, case = [], "all", None

    if not witnesses:
        tag = VerdictTag.INCONCLUSIVE
    elif case in ("2", "2*"):
        tag = VerdictTag.BOUNDARY_MARKOV_CASE
    else:
        tag = VerdictTag.NOT_ISOMORPHIC

    verdict = Verdict(
        tag=tag,
        beta_class=beta_class,
        n=n,
        witnesses=witnesses,
        case=case,
        predicted=predicted,
        prediction_mode=mode,
        spectrum_plus=plus,
        spectrum_minus=minus,
    )
    verdicts_total.labels(tag=tag.value).inc()

    if tag == VerdictTag.INCONCLUSIVE:
        logger.error(f"No level-set witness for {beta_class} at n={n}")
    elif not verdict.matches_prediction:
        logger.warning(
            f"Witnesses {verdict.witness_values} differ from the predicted {predicted} "
            f"for {beta_class}, case {case}"
        )
    return verdict
