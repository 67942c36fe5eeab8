from dataclasses import dataclass
from functools import cached_property
from enum import Enum
from typing import Annotated, List, Optional, Tuple, Union

from pydantic import BaseModel, PlainSerializer
from sympy import isprime

from app.core.errors import LiteralParseError
from app.core.schema import ReportBase

# Integer, or a tuple of integers (coefficients, Gaussian pair, or fraction)
Value = Union[int, Tuple[int, ...]]


class RingKind(str, Enum):
    INT = "Int"
    POLY_FP = "PolyOverFp"
    GAUSSIAN = "GaussianInt"
    P_LOCAL = "PLocal"
    S_INVERTED = "SInverted"
    INT_POLY = "IntPoly"


@dataclass(frozen=True)
class RingId:
    kind: RingKind
    p: Optional[int] = None
    primes: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind in (RingKind.POLY_FP, RingKind.P_LOCAL):
            if self.p is None or not isprime(self.p):
                raise LiteralParseError(f"{self.kind.value} needs a prime modulus, got {self.p!r}")
        if self.kind == RingKind.S_INVERTED:
            if not self.primes:
                raise LiteralParseError("SInverted needs a nonempty set of primes")
            if len(set(self.primes)) != len(self.primes) or not all(isprime(q) for q in self.primes):
                raise LiteralParseError(f"SInverted needs distinct rational primes, got {self.primes!r}")
            object.__setattr__(self, "primes", tuple(sorted(self.primes)))

    @property
    def spec(self) -> str:
        if self.kind == RingKind.INT:
            return "Z"
        if self.kind == RingKind.POLY_FP:
            return f"GF({self.p})[x]"
        if self.kind == RingKind.GAUSSIAN:
            return "Z[i]"
        if self.kind == RingKind.P_LOCAL:
            return f"Z_({self.p})"
        if self.kind == RingKind.S_INVERTED:
            return "Z[1/" + ",".join(str(q) for q in self.primes) + "]"
        return "Z[x]"

    @property
    def is_pid(self) -> bool:
        return self.kind != RingKind.INT_POLY

    def __str__(self) -> str:
        return self.spec


@dataclass(frozen=True)
class Element:
    ring: RingId
    value: Value

    def __str__(self) -> str:
        from .literals import format_element
        return format_element(self)


@dataclass(frozen=True)
class Cardinal:
    """Finite(n) or countably infinite (``count is None``)."""
    count: Optional[int] = None

    @classmethod
    def finite(cls, n: int) -> "Cardinal":
        return cls(count=n)

    @classmethod
    def countably_infinite(cls) -> "Cardinal":
        return cls(count=None)

    @property
    def is_finite(self) -> bool:
        return self.count is not None

    def __str__(self) -> str:
        return str(self.count) if self.is_finite else "aleph_0"


@dataclass(frozen=True)
class PrimeClass:
    """A prime class by its canonical representative.

    The enumeration index is looked up on first use only; ordering by
    ``order_key`` agrees with ordering by index.
    """
    ring: RingId
    representative: Element

    @classmethod
    def at(cls, ring: RingId, representative: Element, index: int) -> "PrimeClass":
        prime_class = cls(ring, representative)
        prime_class.__dict__["index"] = index
        return prime_class

    @cached_property
    def index(self) -> int:
        from .rings import get_ring
        return get_ring(self.ring).prime_index(self.representative.value)

    @property
    def order_key(self) -> tuple:
        from .rings import get_ring
        return get_ring(self.ring).order_key(self.representative.value)

    def __str__(self) -> str:
        return f"[{self.representative}]"


@dataclass(frozen=True)
class UnitDecomposition:
    unit: Element
    factors: Tuple[Tuple[PrimeClass, int], ...]


# Report fields holding domain values; dumped as their canonical literals
ElementField = Annotated[Element, PlainSerializer(str, return_type=str)]
RingField = Annotated[RingId, PlainSerializer(str, return_type=str)]
CardinalField = Annotated[Cardinal, PlainSerializer(str, return_type=str)]


# ---------------------------------------------------------------------------
# CLI responses
# ---------------------------------------------------------------------------

class FactorItem(BaseModel):
    prime: str
    index: int
    exponent: int


class FactorResponse(ReportBase):
    ring: str
    element: str
    unit: str
    factors: List[FactorItem]
    oracle_agrees: Optional[bool] = None

    def text_lines(self) -> List[str]:
        parts = [f"({self.unit})"] + [
            f"({f.prime})" + (f"^{f.exponent}" if f.exponent > 1 else "") for f in self.factors
        ]
        lines = [f"{self.element} = " + " * ".join(parts)]
        if self.oracle_agrees is not None:
            lines.append(f"oracle_agrees: {str(self.oracle_agrees).lower()}")
        return lines

    def violation_count(self) -> int:
        return 1 if self.oracle_agrees is False else 0


class RingInfoResponse(ReportBase):
    ring: str
    kind: str
    euclidean: bool
    units: str
    primes: str
    unit_list: Optional[List[str]] = None
    first_primes: List[str]
