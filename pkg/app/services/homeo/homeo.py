"""Classification of Macias spaces and the explicit homeomorphism.

Two spaces are homeomorphic exactly when the rings have equally many units
and equally many prime classes.  When they do, H multiplies out the
factorization again with mapped primes and a mapped unit; H sends supports to
supports, hence basic opens to basic opens.
"""
import logging
from functools import partial
from typing import List, Optional, Sequence, Tuple

from app.core.errors import (
    NotHomeomorphicPrecondition,
    PreconditionHomeomorphic,
    RingMismatch,
    UnsupportedForRing,
)
from app.services.enumeration.enumeration import Window, enumerate_elements, nth_prime_class
from app.services.invariants.invariants import classification_invariants, maximal_singleton_closures, semiprimitivity
from app.services.rings.rings import check_nonzero, factor, get_ring, multiply, power
from app.services.rings.rings_schema import Element, PrimeClass, RingId, RingKind
from app.services.topology.topology import in_basic_open, is_generic_point, support
from app.services.topology.topology_schema import Support
from app.utils.sweep import ordered_map

from .homeo_schema import (
    CertificateReport,
    ClassificationVerdict,
    ClassifyResponse,
    Difference,
    Homeomorphic,
    HomeoMap,
    HomeoMapResponse,
    NotHomeomorphic,
    UnitRule,
    VerificationReport,
)

logger = logging.getLogger(__name__)

# violations kept verbatim in a verification report
MAX_LISTED_VIOLATIONS = 50


def _unit_rule(source: RingId, target: RingId) -> UnitRule:
    if get_ring(source).finite_units() is not None:
        return UnitRule.POSITIONAL
    if source.kind == target.kind == RingKind.S_INVERTED and len(source.primes) == len(target.primes):
        return UnitRule.COORDINATES
    return UnitRule.ENUMERATION


def classify(source: RingId, target: RingId) -> ClassificationVerdict:
    """Compare (units, primes); primes are reported first when both differ."""
    source_units, source_primes = classification_invariants(source)
    target_units, target_primes = classification_invariants(target)
    differences = []
    if source_primes != target_primes:
        differences.append(Difference("primes", source_primes, target_primes))
    if source_units != target_units:
        differences.append(Difference("units", source_units, target_units))
    if differences:
        return NotHomeomorphic(tuple(differences))
    return Homeomorphic(HomeoMap(source, target, _unit_rule(source, target)))


def classify_semiprimitive(source: RingId, target: RingId) -> ClassificationVerdict:
    """Semiprimitive rings all have infinitely many primes, so the unit count decides."""
    for ring_id in (source, target):
        if not semiprimitivity(ring_id).semiprimitive:
            raise UnsupportedForRing(f"{ring_id} is not semiprimitive")
    source_units, _ = classification_invariants(source)
    target_units, _ = classification_invariants(target)
    if source_units != target_units:
        return NotHomeomorphic((Difference("units", source_units, target_units),))
    return Homeomorphic(HomeoMap(source, target, _unit_rule(source, target)))


def build_homeo(source: RingId, target: RingId) -> HomeoMap:
    verdict = classify(source, target)
    if isinstance(verdict, NotHomeomorphic):
        raise NotHomeomorphicPrecondition(f"{source} and {target} are not homeomorphic ({verdict.reason})")
    return verdict.map


# -- phi and psi --------------------------------------------------------------

def map_prime(m: HomeoMap, prime: PrimeClass) -> PrimeClass:
    return nth_prime_class(m.target, m.prime_index(prime.index))


def _transfer_unit(rule: UnitRule, unit: Element, into: RingId) -> Element:
    source_ring, target_ring = get_ring(unit.ring), get_ring(into)
    if rule == UnitRule.POSITIONAL:
        position = source_ring.finite_units().index(unit.value)
        return Element(into, target_ring.finite_units()[position])
    if rule == UnitRule.COORDINATES:
        sign, exponents = source_ring.unit_coordinates(unit.value)
        return Element(into, target_ring.unit_from_coordinates(sign, exponents))
    return Element(into, target_ring.nth_unit(source_ring.unit_index(unit.value)))


def map_unit(m: HomeoMap, unit: Element) -> Element:
    return _transfer_unit(m.unit_rule, unit, m.target)


# -- H and its inverse --------------------------------------------------------

def apply_homeo(m: HomeoMap, x: Element) -> Element:
    check_nonzero(x)
    if x.ring != m.source:
        raise RingMismatch(f"{x} is not an element of the source ring {m.source}")
    decomposition = factor(x)
    image = map_unit(m, decomposition.unit)
    for prime, exponent in decomposition.factors:
        image = multiply(image, power(map_prime(m, prime).representative, exponent))
    return image


def apply_homeo_inverse(m: HomeoMap, y: Element) -> Element:
    return apply_homeo(m.inverse(), y)


# -- verification -------------------------------------------------------------

def _membership_row(i: int, sources: Tuple[Element, ...], images: Tuple[Element, ...]) -> List[str]:
    r, hr = sources[i], images[i]
    violations = []
    for s, hs in zip(sources, images):
        before, after = in_basic_open(r, s), in_basic_open(hr, hs)
        if before != after:
            violations.append(
                f"membership: {r} in sigma({s}) is {str(before).lower()} but "
                f"{hr} in sigma({hs}) is {str(after).lower()}"
            )
    return violations


def verify_homeo(m: HomeoMap, source_window: Window) -> VerificationReport:
    """Injectivity, support transport and basic-open membership over the window."""
    if isinstance(classify(m.source, m.target), NotHomeomorphic):
        raise NotHomeomorphicPrecondition(f"{m.source} and {m.target} are not homeomorphic")
    if source_window.ring != m.source:
        raise RingMismatch(f"window over {source_window.ring}, map from {m.source}")

    sources = source_window.elements
    images = tuple(ordered_map(partial(apply_homeo, m), sources))

    injectivity: List[str] = []
    first_preimage = {}
    for x, hx in zip(sources, images):
        if hx in first_preimage:
            injectivity.append(f"injectivity: H({first_preimage[hx]}) = H({x}) = {hx}")
        else:
            first_preimage[hx] = x

    transport: List[str] = []
    for x, hx in zip(sources, images):
        expected = Support(m.target, tuple(map_prime(m, c) for c in support(x).classes))
        if support(hx) != expected:
            transport.append(f"support: supp(H({x})) = {support(hx)} but phi(supp({x})) = {expected}")

    inverse: List[str] = []
    for x, hx in zip(sources, images):
        back = apply_homeo_inverse(m, hx)
        if back != x:
            inverse.append(f"inverse: H^-1(H({x})) = {back}")

    rows = ordered_map(partial(_membership_row, sources=sources, images=images), range(len(sources)))
    membership = [v for row in rows for v in row]

    everything = injectivity + transport + membership + inverse
    logger.info(
        f"Verified H: {m.source} -> {m.target} on {len(sources)} elements: {len(everything)} violations"
    )
    return VerificationReport(
        source=m.source,
        target=m.target,
        window_bound=source_window.bound,
        elements=len(sources),
        pairs=len(sources) ** 2,
        injective=not injectivity,
        support_transport=not transport,
        membership_preserved=not membership,
        inverse_law=not inverse,
        violation_total=len(everything),
        violations=everything[:MAX_LISTED_VIOLATIONS],
    )


# -- non-homeomorphism --------------------------------------------------------

def generic_point_count(w: Window) -> int:
    return sum(1 for x in w if is_generic_point(x))


def maximal_closure_count(w: Window) -> int:
    return len(maximal_singleton_closures(w))


def non_homeo_certificate(
    source: RingId,
    target: RingId,
    w_s: Window,
    w_t: Window,
    bounds_s: Optional[Sequence[int]] = None,
    bounds_t: Optional[Sequence[int]] = None,
) -> CertificateReport:
    """A homeomorphism invariant, counted on windows, that tells the two spaces apart.

    Differing prime counts show up as maximal proper singleton closures (one
    per prime class); differing unit counts as generic points (the units).
    Each count is taken at the given window and at its doubled bound unless
    explicit bounds are passed.
    """
    verdict = classify(source, target)
    if isinstance(verdict, Homeomorphic):
        raise PreconditionHomeomorphic(f"{source} and {target} are homeomorphic; there is nothing to certify")
    if w_s.ring != source or w_t.ring != target:
        raise RingMismatch("certificate windows must be over the source and target rings")

    reason = verdict.reason
    if reason.invariant == "primes":
        invariant, count = "maximal_singleton_closures", maximal_closure_count
    else:
        invariant, count = "generic_points", generic_point_count

    bounds_s = list(bounds_s or (w_s.bound, 2 * w_s.bound))
    bounds_t = list(bounds_t or (w_t.bound, 2 * w_t.bound))
    source_counts = [count(w_s if b == w_s.bound else enumerate_elements(source, b)) for b in bounds_s]
    target_counts = [count(w_t if b == w_t.bound else enumerate_elements(target, b)) for b in bounds_t]

    if reason.source_value.is_finite and reason.target_value.is_finite:
        # both counts saturate at the cardinals themselves
        discrepancy = all(a != b for a, b in zip(source_counts, target_counts))
    else:
        # the finite side stays put while the infinite side keeps growing
        finite_counts, infinite_counts = (
            (source_counts, target_counts) if reason.source_value.is_finite else (target_counts, source_counts)
        )
        discrepancy = len(set(finite_counts)) == 1 and infinite_counts[-1] > infinite_counts[0]
        discrepancy = discrepancy and infinite_counts[-1] != finite_counts[-1]
    logger.info(f"Certificate {source} vs {target} on {invariant}: {source_counts} vs {target_counts}")
    return CertificateReport(
        source=source,
        target=target,
        reason=str(reason),
        invariant=invariant,
        source_bounds=bounds_s,
        target_bounds=bounds_t,
        source_counts=source_counts,
        target_counts=target_counts,
        discrepancy=discrepancy,
    )


class HomeoService:
    """Classification, transport and certification between two rings."""

    def classify(self, source: RingId, target: RingId) -> ClassifyResponse:
        verdict = classify(source, target)
        homeomorphic = isinstance(verdict, Homeomorphic)
        return ClassifyResponse(
            source=source,
            target=target,
            homeomorphic=homeomorphic,
            source_invariants=list(classification_invariants(source)),
            target_invariants=list(classification_invariants(target)),
            differences=[] if homeomorphic else [str(d) for d in verdict.differences],
            unit_rule=verdict.map.unit_rule.value if homeomorphic else None,
        )

    def map_element(self, source: RingId, target: RingId, x: Element, inverse: bool = False) -> HomeoMapResponse:
        """H(x), or H^-1(x) with ``inverse`` when x lies in the target ring."""
        m = build_homeo(source, target)
        if inverse:
            m = m.inverse()
        image = apply_homeo(m, x)
        return HomeoMapResponse(
            source=m.source,
            target=m.target,
            direction=m.direction,
            element=x,
            image=image,
            inverse=apply_homeo_inverse(m, image),
        )

    def verify(self, source: RingId, target: RingId, bound: int) -> VerificationReport:
        m = build_homeo(source, target)
        return verify_homeo(m, enumerate_elements(source, bound))

    def certificate(self, source: RingId, target: RingId, bound: int, target_bound: Optional[int] = None) -> CertificateReport:
        return non_homeo_certificate(
            source,
            target,
            enumerate_elements(source, bound),
            enumerate_elements(target, bound if target_bound is None else target_bound),
        )
