from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

from pydantic import BaseModel

from app.core.schema import ReportBase
from app.services.rings.rings_schema import Element, PrimeClass, RingId


@dataclass(frozen=True)
class Support:
    """Finite set of prime classes, kept in enumeration order."""
    ring: RingId
    classes: Tuple[PrimeClass, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(sorted(set(self.classes), key=lambda c: c.order_key)))

    @property
    def is_empty(self) -> bool:
        return not self.classes

    def issubset(self, other: "Support") -> bool:
        return set(self.classes) <= set(other.classes)

    def isdisjoint(self, other: "Support") -> bool:
        return set(self.classes).isdisjoint(other.classes)

    def __len__(self) -> int:
        return len(self.classes)

    def __str__(self) -> str:
        return "{" + ",".join(str(c) for c in self.classes) + "}"


@dataclass(frozen=True)
class BasicOpen:
    generator: Element
    # None over Z[x], where supports are not computed
    generator_support: Optional[Support] = field(default=None, compare=False)

    def __str__(self) -> str:
        return f"sigma({self.generator})"


@dataclass(frozen=True)
class WholeSpace:
    def contains(self, other: "ClosureDescriptor") -> bool:
        return True

    def __str__(self) -> str:
        return "R0"


@dataclass(frozen=True)
class DivisibleByAll:
    """Nonzero elements divisible by every class of the support."""
    support: Support

    def contains(self, other: "ClosureDescriptor") -> bool:
        if isinstance(other, WholeSpace):
            return False
        # fewer required divisors, larger set
        return self.support.issubset(other.support)

    def __str__(self) -> str:
        return " & ".join(f"<{c.representative}>0" for c in self.support.classes)


ClosureDescriptor = Union[WholeSpace, DivisibleByAll]


@dataclass(frozen=True)
class SpecializationGraph:
    """Edges y -> x (indices into ``nodes``) whenever x lies in the closure of {y}."""
    ring: RingId
    bound: int
    nodes: Tuple[Element, ...]
    edges: Tuple[Tuple[int, int], ...]

    def successors(self) -> Dict[int, List[int]]:
        adjacency: Dict[int, List[int]] = {i: [] for i in range(len(self.nodes))}
        for source, target in self.edges:
            adjacency[source].append(target)
        return adjacency


# ---------------------------------------------------------------------------
# CLI responses
# ---------------------------------------------------------------------------

class SupportResponse(ReportBase):
    ring: str
    element: str
    support: List[str]

    def text_lines(self) -> List[str]:
        return ["{" + ",".join(self.support) + "}"]


class MemberResponse(ReportBase):
    ring: str
    k: str
    s: str
    member: bool
    supports_disjoint: Optional[bool] = None
    oracle_agrees: Optional[bool] = None

    def text_lines(self) -> List[str]:
        lines = [str(self.member).lower()]
        if self.supports_disjoint is not None:
            lines.append(f"supports_disjoint: {str(self.supports_disjoint).lower()}")
        if self.oracle_agrees is not None:
            lines.append(f"oracle_agrees: {str(self.oracle_agrees).lower()}")
        return lines

    def violation_count(self) -> int:
        disagreements = 0
        if self.supports_disjoint is not None and self.supports_disjoint != self.member:
            disagreements += 1
        if self.oracle_agrees is False:
            disagreements += 1
        return disagreements


class ClosureResponse(ReportBase):
    ring: str
    element: str
    closure: str
    window_bound: int
    members: List[str]
    oracle_agrees: Optional[bool] = None

    def text_lines(self) -> List[str]:
        lines = [f"closure: {self.closure}", f"members: {', '.join(self.members)}"]
        if self.oracle_agrees is not None:
            lines.append(f"oracle_agrees: {str(self.oracle_agrees).lower()}")
        return lines

    def violation_count(self) -> int:
        return 1 if self.oracle_agrees is False else 0


class WitnessResponse(ReportBase):
    ring: str
    x: str
    y: str
    witness: Optional[str] = None

    def text_lines(self) -> List[str]:
        return [self.witness if self.witness is not None else "none"]


class AdjacencyItem(BaseModel):
    node: str
    successors: List[str]


class GraphResponse(ReportBase):
    ring: str
    window_bound: int
    nodes: List[str]
    adjacency: List[AdjacencyItem]

    def text_lines(self) -> List[str]:
        return [f"{item.node} -> {target}" for item in self.adjacency for target in item.successors]

    def dot_lines(self) -> List[str]:
        lines = ["digraph specialization {"]
        lines.extend(f'  "{node}";' for node in self.nodes)
        lines.extend(f'  "{item.node}" -> "{target}";' for item in self.adjacency for target in item.successors)
        lines.append("}")
        return lines


class ControlPair(BaseModel):
    a: str
    b: str
    coprime: bool
    oracle_coprime: bool
    cofactors: Optional[List[str]] = None


class CounterexampleResponse(ReportBase):
    ring: str
    a: str
    b: str
    prime_certificates: Dict[str, str]
    supports_disjoint: bool
    coprime: bool
    constant_terms_even: bool
    oracle_coprime: bool
    controls: List[ControlPair]

    def violation_count(self) -> int:
        violations = int(not self.supports_disjoint) + int(self.coprime) + int(self.oracle_coprime)
        violations += int(not self.constant_terms_even)
        violations += sum(1 for c in self.controls if c.coprime != c.oracle_coprime)
        return violations
