from dataclasses import dataclass, replace
from enum import Enum
from typing import List, Optional, Tuple, Union

from app.core.schema import ReportBase
from app.services.rings.rings_schema import Cardinal, CardinalField, ElementField, RingField, RingId


class UnitRule(str, Enum):
    # finite unit groups, paired in window order
    POSITIONAL = "positional"
    # Z[1/S] with |S| equal: sign and exponent vector carried over
    COORDINATES = "coordinates"
    # any other infinite unit groups: n-th unit to n-th unit by height
    ENUMERATION = "enumeration"


class MapDirection(str, Enum):
    FORWARD = "forward"
    INVERSE = "inverse"


@dataclass(frozen=True)
class HomeoMap:
    """H(u * prod p^a) = psi(u) * prod phi(p)^a.

    phi sends the n-th prime class of the source to the n-th of the target;
    ``prime_overrides`` replaces single images and exists to build broken maps
    that the verifier has to reject.  An INVERSE map runs from the target of
    the classified pair back to its source.
    """
    source: RingId
    target: RingId
    unit_rule: UnitRule
    prime_overrides: Tuple[Tuple[int, int], ...] = ()
    direction: MapDirection = MapDirection.FORWARD

    def prime_index(self, index: int) -> int:
        return dict(self.prime_overrides).get(index, index)

    def inverse(self) -> "HomeoMap":
        # the last pair wins in prime_index, so the first override survives the swap
        swapped = tuple((target, source) for source, target in reversed(self.prime_overrides))
        direction = MapDirection.INVERSE if self.direction == MapDirection.FORWARD else MapDirection.FORWARD
        return replace(self, source=self.target, target=self.source, prime_overrides=swapped, direction=direction)

    def with_prime_override(self, source_index: int, target_index: int) -> "HomeoMap":
        return replace(self, prime_overrides=self.prime_overrides + ((source_index, target_index),))


@dataclass(frozen=True)
class Difference:
    invariant: str
    source_value: Cardinal
    target_value: Cardinal

    def __str__(self) -> str:
        return f"{self.invariant}: {self.source_value} != {self.target_value}"


@dataclass(frozen=True)
class Homeomorphic:
    map: HomeoMap


@dataclass(frozen=True)
class NotHomeomorphic:
    differences: Tuple[Difference, ...]

    @property
    def reason(self) -> Difference:
        return self.differences[0]


ClassificationVerdict = Union[Homeomorphic, NotHomeomorphic]


# ---------------------------------------------------------------------------
# CLI responses
# ---------------------------------------------------------------------------

class ClassifyResponse(ReportBase):
    source: RingField
    target: RingField
    homeomorphic: bool
    source_invariants: List[CardinalField]
    target_invariants: List[CardinalField]
    differences: List[str] = []
    unit_rule: Optional[str] = None

    def text_lines(self) -> List[str]:
        if self.homeomorphic:
            return [f"Homeomorphic (units {self.source_invariants[0]}, primes {self.source_invariants[1]})"]
        return [f"NotHomeomorphic({'; '.join(self.differences)})"]


class HomeoMapResponse(ReportBase):
    source: RingField
    target: RingField
    direction: MapDirection = MapDirection.FORWARD
    element: ElementField
    image: ElementField
    inverse: ElementField

    def text_lines(self) -> List[str]:
        return [str(self.image)]

    def violation_count(self) -> int:
        return 0 if self.inverse == self.element else 1


class VerificationReport(ReportBase):
    source: RingField
    target: RingField
    window_bound: int
    elements: int
    pairs: int
    injective: bool
    support_transport: bool
    membership_preserved: bool
    inverse_law: bool
    violation_total: int
    # first violations only
    violations: List[str]

    def text_lines(self) -> List[str]:
        lines = [
            f"injective: {str(self.injective).lower()}",
            f"support_transport: {str(self.support_transport).lower()}",
            f"membership_preserved: {str(self.membership_preserved).lower()}",
            f"inverse_law: {str(self.inverse_law).lower()}",
            f"checked: {self.elements} elements, {self.pairs} pairs",
            f"violations: {self.violation_total}",
        ]
        lines.extend(f"  {v}" for v in self.violations)
        return lines

    def violation_count(self) -> int:
        return self.violation_total


class CertificateReport(ReportBase):
    source: RingField
    target: RingField
    reason: str
    invariant: str
    source_bounds: List[int]
    target_bounds: List[int]
    source_counts: List[int]
    target_counts: List[int]
    discrepancy: bool

    def text_lines(self) -> List[str]:
        return [
            f"reason: {self.reason}",
            f"{self.invariant} in {self.source}: {self.source_counts} at bounds {self.source_bounds}",
            f"{self.invariant} in {self.target}: {self.target_counts} at bounds {self.target_bounds}",
            f"discrepancy: {str(self.discrepancy).lower()}",
        ]

    def violation_count(self) -> int:
        return 0 if self.discrepancy else 1
