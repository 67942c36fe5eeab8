from typing import List, Optional

from app.core.schema import Record, ReportBase
from app.services.rings.rings_schema import CardinalField, ElementField, RingField

DENSE_CERTIFIED = "dense-certified"
NOT_DENSE = "not dense"
UNITS_OPEN = "units-open"
UNITS_NOT_OPEN = "units-not-open-certified"
SEMIPRIMITIVE = "semiprimitive"
NOT_SEMIPRIMITIVE = "not-semiprimitive"
CONSISTENT = "consistent"
INCONSISTENT = "inconsistent"


class ClaimRecord(Record):
    """One condition of a verdict, whether it holds, and what shows it."""
    claim: str
    holds: bool
    evidence: Optional[str] = None


class SemiprimitivityVerdict(ReportBase):
    ring: RingField
    # ring-level: no window involved
    window_bound: Optional[int] = None
    verdict: str
    semiprimitive: bool
    jacobson_witness: Optional[ElementField] = None
    records: List[ClaimRecord] = []

    def text_lines(self) -> List[str]:
        lines = [str(self.semiprimitive).lower()]
        if self.jacobson_witness is not None:
            lines.append(f"jacobson_witness: {self.jacobson_witness}")
        return lines


class WitnessRecord(Record):
    """Generator k and a non-unit (prime) point of sigma_k, or why none exists."""
    k: ElementField
    witness: Optional[ElementField] = None
    failure: Optional[str] = None


class DensityReport(ReportBase):
    ring: RingField
    window_bound: int
    verdict: str
    records: List[WitnessRecord]
    certificate: Optional[str] = None
    violations: List[str] = []

    def text_lines(self) -> List[str]:
        found = sum(1 for r in self.records if r.witness is not None)
        lines = [f"verdict: {self.verdict}", f"witnesses: {found}/{len(self.records)}"]
        if self.certificate:
            lines.append(f"certificate: {self.certificate}")
        lines.extend(f"violation: {v}" for v in self.violations)
        return lines

    def violation_count(self) -> int:
        return len(self.violations)


class OpennessReport(ReportBase):
    ring: RingField
    window_bound: int
    verdict: str
    # alpha with sigma_alpha inside the units, when they are open
    certificate: Optional[ElementField] = None
    checked: int = 0
    records: List[WitnessRecord] = []
    violations: List[str] = []

    def text_lines(self) -> List[str]:
        lines = [f"verdict: {self.verdict}"]
        if self.certificate is not None:
            lines.append(f"certificate: alpha = {self.certificate} ({self.checked} window points of sigma_alpha are units)")
        else:
            lines.append(f"witnesses: {len(self.records)}")
        lines.extend(f"violation: {v}" for v in self.violations)
        return lines

    def violation_count(self) -> int:
        return len(self.violations)


class PartitionBlock(Record):
    support: List[ElementField]
    size: int
    members: List[ElementField]


class PartitionReport(ReportBase):
    ring: RingField
    window_bound: int
    verdict: str
    records: List[PartitionBlock]

    def text_lines(self) -> List[str]:
        return [
            "{" + ",".join(str(p) for p in block.support) + f"}} ({block.size}): " + ", ".join(str(m) for m in block.members)
            for block in self.records
        ]


class ClosuresReport(ReportBase):
    ring: RingField
    window_bound: int
    verdict: str
    records: List[str]
    count: int


class EquivalenceReport(ReportBase):
    ring: RingField
    window_bound: int
    verdict: str
    units_not_open: bool
    primes_dense: bool
    primes_infinite: bool
    semiprimitive: bool
    consistent: bool
    records: List[ClaimRecord] = []

    def violation_count(self) -> int:
        return 0 if self.consistent else 1


class GrowthRow(Record):
    support: List[ElementField]
    sizes: List[int]


class GrowthReport(ReportBase):
    ring: RingField
    bounds: List[int]
    records: List[GrowthRow]
    growing: List[str]


class SectionRecord(Record):
    section: str
    verdict: str
    violations: int


class InvariantsReport(ReportBase):
    """Everything the ``report`` command checks for one ring."""
    ring: RingField
    window_bound: int
    verdict: str
    units: CardinalField
    primes: CardinalField
    equivalence: EquivalenceReport
    semiprimitivity: SemiprimitivityVerdict
    openness: OpennessReport
    density: DensityReport
    maximal_closures: ClosuresReport
    records: List[SectionRecord] = []
    oracle_disagreements: Optional[List[str]] = None

    def text_lines(self) -> List[str]:
        e = self.equivalence
        lines = [
            f"ring: {self.ring}",
            f"units: {self.units}",
            f"primes: {self.primes}",
            f"units_not_open: {str(e.units_not_open).lower()}",
            f"primes_dense: {str(e.primes_dense).lower()}",
            f"primes_infinite: {str(e.primes_infinite).lower()}",
            f"semiprimitive: {str(e.semiprimitive).lower()}",
            f"verdict: {self.verdict}",
            f"maximal_closures: {self.maximal_closures.count}",
        ]
        for section in (self.openness, self.density):
            lines.extend(f"violation: {v}" for v in section.violations)
        lines.extend(f"oracle: {d}" for d in self.oracle_disagreements or [])
        return lines

    def violation_count(self) -> int:
        return (
            self.equivalence.violation_count()
            + self.openness.violation_count()
            + self.density.violation_count()
            + len(self.oracle_disagreements or [])
        )
