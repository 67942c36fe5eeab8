"""Executable certificates for the equivalence theorem and the classification invariants.

For a PID that is not a field the following agree: the units are not open,
the primes are dense, there are infinitely many prime classes, and the ring
is semiprimitive.  Each condition is computed here on its own and then
compared.
"""
import logging
from typing import Dict, List, Optional, Sequence, Tuple

from app.core.errors import InvariantViolation, NoPrimeOutside
from app.services.enumeration.enumeration import Window, enumerate_elements, enumerate_prime_classes, find_prime_outside
from app.services.oracle.oracle import OracleService
from app.services.rings.rings import get_ring, is_unit, multiply, one, primes_cardinality, require_pid, units_cardinality
from app.services.rings.rings_schema import Cardinal, Element, RingId, RingKind
from app.services.topology.topology import closure_singleton, in_basic_open, support
from app.services.topology.topology_schema import DivisibleByAll, Support, WholeSpace
from app.utils.sweep import ordered_map

from .invariants_schema import (
    CONSISTENT,
    DENSE_CERTIFIED,
    INCONSISTENT,
    NOT_DENSE,
    NOT_SEMIPRIMITIVE,
    SEMIPRIMITIVE,
    UNITS_NOT_OPEN,
    UNITS_OPEN,
    ClaimRecord,
    ClosuresReport,
    DensityReport,
    EquivalenceReport,
    GrowthReport,
    GrowthRow,
    InvariantsReport,
    OpennessReport,
    PartitionBlock,
    PartitionReport,
    SectionRecord,
    SemiprimitivityVerdict,
    WitnessRecord,
)

logger = logging.getLogger(__name__)


def _all_primes(ring_id: RingId) -> List[Element]:
    count = primes_cardinality(ring_id).count
    return [c.representative for c in enumerate_prime_classes(ring_id, count)]


def semiprimitivity(ring_id: RingId) -> SemiprimitivityVerdict:
    """Declared per ring and checked against the prime count.

    Z_(p) is local, so its Jacobson radical is <p>; every other instance has
    infinitely many maximal ideals meeting in 0.
    """
    require_pid(ring_id, "semiprimitivity")
    semiprimitive = ring_id.kind != RingKind.P_LOCAL
    primes = primes_cardinality(ring_id)
    if semiprimitive == primes.is_finite:
        raise InvariantViolation(f"{ring_id}: semiprimitivity disagrees with the number of prime classes")
    witness = None if semiprimitive else Element(ring_id, get_ring(ring_id).normalize(ring_id.p))
    return SemiprimitivityVerdict(
        ring=ring_id,
        verdict=SEMIPRIMITIVE if semiprimitive else NOT_SEMIPRIMITIVE,
        semiprimitive=semiprimitive,
        jacobson_witness=witness,
        records=[
            ClaimRecord(claim="primes_infinite", holds=not primes.is_finite, evidence=f"prime classes: {primes}"),
            ClaimRecord(
                claim="jacobson_radical_zero",
                holds=semiprimitive,
                evidence=None if semiprimitive else f"{witness} lies in every maximal ideal",
            ),
        ],
    )


def _witness_record(k: Element) -> WitnessRecord:
    """The least prime outside supp(k); it lies in sigma_k and is not a unit."""
    try:
        prime = find_prime_outside(support(k))
    except NoPrimeOutside as exc:
        return WitnessRecord(k=k, failure=exc.message)
    return WitnessRecord(k=k, witness=prime.representative)


def _check_witness(record: WitnessRecord) -> Optional[str]:
    p = record.witness
    if p is None:
        return None
    if is_unit(p):
        return f"witness {p} for {record.k} is a unit"
    if not in_basic_open(p, record.k):
        return f"witness {p} is not in sigma({record.k})"
    return None


def _witness_records(w: Window) -> Tuple[List[WitnessRecord], List[str]]:
    records = ordered_map(_witness_record, w.elements)
    violations = [v for v in (_check_witness(r) for r in records) if v]
    return records, violations


def units_openness(ring_id: RingId, w: Window) -> OpennessReport:
    require_pid(ring_id, "units_openness")
    if primes_cardinality(ring_id).is_finite:
        primes = _all_primes(ring_id)
        alpha = one(ring_id)
        for p in primes:
            alpha = multiply(alpha, p)
        violations = []
        if set(support(alpha).classes) != set(support(p).classes[0] for p in primes):
            violations.append(f"supp({alpha}) does not cover every prime class")
        members = [y for y in w if in_basic_open(y, alpha)]
        violations.extend(f"{y} is in sigma({alpha}) but is not a unit" for y in members if not is_unit(y))
        logger.info(f"Units of {ring_id} open via alpha = {alpha}; {len(members)} window points checked")
        return OpennessReport(
            ring=ring_id, window_bound=w.bound, verdict=UNITS_OPEN, certificate=alpha,
            checked=len(members), violations=violations,
        )

    records, violations = _witness_records(w)
    violations.extend(f"no non-unit found in sigma({r.k}): {r.failure}" for r in records if r.witness is None)
    logger.info(f"Units of {ring_id} not open: {len(records)} generators, {len(violations)} violations")
    return OpennessReport(
        ring=ring_id, window_bound=w.bound, verdict=UNITS_NOT_OPEN, records=records, violations=violations,
    )


def prime_density(ring_id: RingId, w: Window) -> DensityReport:
    require_pid(ring_id, "prime_density")
    records, violations = _witness_records(w)
    if not primes_cardinality(ring_id).is_finite:
        violations.extend(f"no prime found in sigma({r.k})" for r in records if r.witness is None)
        verdict = DENSE_CERTIFIED if all(r.witness is not None for r in records) else NOT_DENSE
        logger.info(f"Primes of {ring_id}: {verdict}, {len(violations)} violations")
        return DensityReport(ring=ring_id, window_bound=w.bound, verdict=verdict, records=records, violations=violations)

    # sigma_alpha holds no prime when alpha is the product of all of them
    primes = _all_primes(ring_id)
    alpha = one(ring_id)
    for p in primes:
        alpha = multiply(alpha, p)
    inside = [p for p in primes if in_basic_open(p, alpha)]
    violations.extend(f"prime {p} lies in sigma({alpha})" for p in inside)
    certificate = f"sigma({alpha}) contains no prime"
    return DensityReport(
        ring=ring_id, window_bound=w.bound, verdict=NOT_DENSE, records=records,
        certificate=certificate, violations=violations,
    )


def maximal_singleton_closures(w: Window) -> List[DivisibleByAll]:
    """Proper singleton closures maximal under inclusion, by first prime index."""
    require_pid(w.ring, "maximal_singleton_closures")
    descriptors = []
    seen = set()
    for x in w:
        descriptor = closure_singleton(x)
        if isinstance(descriptor, WholeSpace) or descriptor in seen:
            continue
        seen.add(descriptor)
        descriptors.append(descriptor)
    maximal = [
        d for d in descriptors
        if not any(other != d and other.contains(d) for other in descriptors)
    ]
    return sorted(maximal, key=lambda d: [c.order_key for c in d.support.classes])


def closures_report(w: Window) -> ClosuresReport:
    maximal = maximal_singleton_closures(w)
    singletons = all(len(d.support) == 1 for d in maximal)
    return ClosuresReport(
        ring=w.ring,
        window_bound=w.bound,
        verdict="single-prime" if singletons else "multi-prime closure found maximal",
        records=[str(d) for d in maximal],
        count=len(maximal),
    )


def support_partition(w: Window) -> Dict[Support, List[Element]]:
    """Window points grouped by support, blocks in order of first appearance."""
    require_pid(w.ring, "support_partition")
    blocks: Dict[Support, List[Element]] = {}
    for x, s in zip(w.elements, ordered_map(support, w.elements)):
        blocks.setdefault(s, []).append(x)
    return blocks


def partition_report(w: Window) -> PartitionReport:
    blocks = support_partition(w)
    units_block = blocks.get(Support(w.ring), [])
    verdict = "units-block-exact" if all(is_unit(u) for u in units_block) else "units-block-mismatch"
    return PartitionReport(
        ring=w.ring,
        window_bound=w.bound,
        verdict=verdict,
        records=[
            PartitionBlock(support=[c.representative for c in s.classes], size=len(members), members=members)
            for s, members in blocks.items()
        ],
    )


def classification_invariants(ring_id: RingId) -> Tuple[Cardinal, Cardinal]:
    require_pid(ring_id, "classification_invariants")
    return units_cardinality(ring_id), primes_cardinality(ring_id)


def four_way_report(ring_id: RingId, w: Window) -> EquivalenceReport:
    openness = units_openness(ring_id, w)
    density = prime_density(ring_id, w)
    primes = primes_cardinality(ring_id)
    semi = semiprimitivity(ring_id)

    units_not_open = openness.verdict == UNITS_NOT_OPEN
    primes_dense = density.verdict == DENSE_CERTIFIED
    primes_infinite = not primes.is_finite
    flags = (units_not_open, primes_dense, primes_infinite, semi.semiprimitive)
    consistent = len(set(flags)) == 1

    alpha = f"alpha = {openness.certificate}" if openness.certificate is not None else None
    records = [
        ClaimRecord(claim="units_not_open", holds=units_not_open, evidence=alpha or openness.verdict),
        ClaimRecord(claim="primes_dense", holds=primes_dense, evidence=density.certificate or density.verdict),
        ClaimRecord(claim="primes_infinite", holds=primes_infinite, evidence=f"prime classes: {primes}"),
        ClaimRecord(
            claim="semiprimitive",
            holds=semi.semiprimitive,
            evidence=None if semi.jacobson_witness is None else f"jacobson_witness: {semi.jacobson_witness}",
        ),
    ]
    return EquivalenceReport(
        ring=ring_id,
        window_bound=w.bound,
        verdict=CONSISTENT if consistent else INCONSISTENT,
        units_not_open=units_not_open,
        primes_dense=primes_dense,
        primes_infinite=primes_infinite,
        semiprimitive=semi.semiprimitive,
        consistent=consistent,
        records=records,
    )


def partition_growth(ring_id: RingId, bounds: Sequence[int]) -> GrowthReport:
    """Block sizes, along increasing bounds, of the supports seen at the smallest bound."""
    bounds = sorted(bounds)
    partitions = [support_partition(enumerate_elements(ring_id, b)) for b in bounds]
    rows, growing = [], []
    for s in partitions[0]:
        sizes = [len(p.get(s, [])) for p in partitions]
        rows.append(GrowthRow(support=[c.representative for c in s.classes], sizes=sizes))
        if len(sizes) > 1 and all(a < b for a, b in zip(sizes, sizes[1:])):
            growing.append(str(s))
    return GrowthReport(ring=ring_id, bounds=bounds, records=rows, growing=growing)


class InvariantsService:
    """Reports of the invariants commands; ``report`` bundles them for one ring."""

    def __init__(self, oracle: Optional[OracleService] = None):
        self.oracle = oracle or OracleService()

    def density(self, w: Window) -> DensityReport:
        return prime_density(w.ring, w)

    def units_open(self, w: Window) -> OpennessReport:
        return units_openness(w.ring, w)

    def semiprimitive(self, ring_id: RingId) -> SemiprimitivityVerdict:
        return semiprimitivity(ring_id)

    def partition(self, w: Window) -> PartitionReport:
        return partition_report(w)

    def report(self, w: Window, with_oracle: bool = False) -> InvariantsReport:
        ring_id = w.ring
        units, primes = classification_invariants(ring_id)
        equivalence = four_way_report(ring_id, w)
        semi = semiprimitivity(ring_id)
        openness = units_openness(ring_id, w)
        density = prime_density(ring_id, w)
        closures = closures_report(w)

        oracle_disagreements = None
        if with_oracle:
            witnesses = [r.witness for r in density.records if r.witness is not None]
            oracle_disagreements = [
                f"density witness {p} fails trial division" for p in self.oracle.non_primes(witnesses)
            ]

        sections = [
            ("equivalence", equivalence),
            ("semiprimitivity", semi),
            ("units_openness", openness),
            ("prime_density", density),
            ("maximal_closures", closures),
        ]
        return InvariantsReport(
            ring=ring_id,
            window_bound=w.bound,
            verdict=equivalence.verdict,
            units=units,
            primes=primes,
            equivalence=equivalence,
            semiprimitivity=semi,
            openness=openness,
            density=density,
            maximal_closures=closures,
            records=[
                SectionRecord(section=name, verdict=section.verdict, violations=section.violation_count())
                for name, section in sections
            ],
            oracle_disagreements=oracle_disagreements,
        )
