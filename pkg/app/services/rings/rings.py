"""Public ring operations on Elements, dispatched to the ring instances."""
import logging
from functools import lru_cache
from typing import List, Optional, Tuple

from app.core.config import settings
from app.core.errors import RingMismatch, UnsupportedForRing, ZeroElement

from .base import Ring
from .gaussian import GaussianRing
from .int_poly import IntPolyRing
from .integers import IntegerRing
from .localizations import LocalRing, SIntegerRing
from .poly_fp import PolyFpRing
from .rings_schema import (
    Cardinal,
    Element,
    FactorItem,
    FactorResponse,
    PrimeClass,
    RingId,
    RingInfoResponse,
    RingKind,
    UnitDecomposition,
)

logger = logging.getLogger(__name__)

_RING_CLASSES = {
    RingKind.INT: IntegerRing,
    RingKind.POLY_FP: PolyFpRing,
    RingKind.GAUSSIAN: GaussianRing,
    RingKind.P_LOCAL: LocalRing,
    RingKind.S_INVERTED: SIntegerRing,
    RingKind.INT_POLY: IntPolyRing,
}


@lru_cache(maxsize=None)
def get_ring(ring_id: RingId) -> Ring:
    return _RING_CLASSES[ring_id.kind](ring_id)


def element(ring_id: RingId, raw) -> Element:
    return Element(ring_id, get_ring(ring_id).normalize(raw))


def one(ring_id: RingId) -> Element:
    return Element(ring_id, get_ring(ring_id).one)


def check_nonzero(*xs: Element) -> Ring:
    """Ring of the operands after the zero, same-ring and size checks."""
    ring_id = xs[0].ring
    if any(x.ring != ring_id for x in xs):
        raise RingMismatch(f"operands live in different rings: {', '.join(str(x.ring) for x in xs)}")
    ring = get_ring(ring_id)
    for x in xs:
        if ring.is_zero(x.value):
            raise ZeroElement(f"0 is not a point of the punctured ring {ring_id}")
        ring.guard(x.value, settings.MAX_INTEGER_BITS, settings.MAX_DEGREE)
    return ring


def require_pid(ring_id: RingId, operation: str) -> None:
    if not ring_id.is_pid:
        raise UnsupportedForRing(f"{operation} applies to principal ideal domains only, not {ring_id}")


def multiply(a: Element, b: Element) -> Element:
    return Element(a.ring, get_ring(a.ring).mul(a.value, b.value))


def power(a: Element, exponent: int) -> Element:
    return Element(a.ring, get_ring(a.ring).power(a.value, exponent))


def divides(d: Element, x: Element) -> bool:
    return get_ring(x.ring).exact_div(x.value, d.value) is not None


def exact_quotient(x: Element, d: Element) -> Optional[Element]:
    quotient = get_ring(x.ring).exact_div(x.value, d.value)
    return None if quotient is None else Element(x.ring, quotient)


def gcd_bezout(a: Element, b: Element) -> Tuple[Element, Element, Element]:
    ring = check_nonzero(a, b)
    g, x, y = ring.gcdex(a.value, b.value)
    return Element(a.ring, g), Element(a.ring, x), Element(a.ring, y)


def is_unit(x: Element) -> bool:
    return check_nonzero(x).is_unit(x.value)


def canonical_associate(x: Element) -> Tuple[Element, Element]:
    unit, rep = check_nonzero(x).canonical(x.value)
    return Element(x.ring, unit), Element(x.ring, rep)


def prime_class(rep: Element) -> PrimeClass:
    """PrimeClass of a canonical prime representative."""
    return PrimeClass(rep.ring, rep)


def factor(x: Element) -> UnitDecomposition:
    ring = check_nonzero(x)
    unit, factors = ring.factor(x.value)
    classes = sorted(
        ((prime_class(Element(x.ring, rep)), exponent) for rep, exponent in factors),
        key=lambda item: item[0].order_key,
    )
    return UnitDecomposition(Element(x.ring, unit), tuple(classes))


def recompose(decomposition: UnitDecomposition) -> Element:
    result = decomposition.unit
    for prime, exponent in decomposition.factors:
        result = multiply(result, power(prime.representative, exponent))
    return result


def coprime(k: Element, s: Element) -> bool:
    """Whether <k> + <s> is the whole ring."""
    ring = check_nonzero(k, s)
    return ring.comaximal(k.value, s.value)


def units_cardinality(ring_id: RingId) -> Cardinal:
    return get_ring(ring_id).unit_cardinality()


def list_units(ring_id: RingId) -> List[Element]:
    units = get_ring(ring_id).finite_units()
    if units is None:
        raise UnsupportedForRing(f"{ring_id} has infinitely many units; they cannot be listed")
    return [Element(ring_id, u) for u in units]


def primes_cardinality(ring_id: RingId) -> Cardinal:
    return get_ring(ring_id).prime_cardinality()


class RingsService:
    """Ring cardinals and factorizations for the ``ring-info`` and ``factor`` commands.

    ``oracle`` is any object with ``agrees_on_factorization``; it is only
    consulted when a caller asks for the cross-check.
    """

    # prime classes listed by ring-info
    first_primes = 10

    def __init__(self, oracle=None):
        self.oracle = oracle

    def info(self, ring_id: RingId) -> RingInfoResponse:
        ring = get_ring(ring_id)
        try:
            primes = str(primes_cardinality(ring_id))
            first_primes = [str(Element(ring_id, rep)) for rep in ring.primes.first(self.first_primes)]
        except UnsupportedForRing:
            primes, first_primes = "not enumerated", []
        return RingInfoResponse(
            ring=str(ring_id),
            kind=ring_id.kind.value,
            euclidean=ring.euclidean,
            units=str(units_cardinality(ring_id)),
            primes=primes,
            unit_list=[str(u) for u in list_units(ring_id)] if ring.finite_units() is not None else None,
            first_primes=first_primes,
        )

    def factor(self, x: Element, with_oracle: bool = False) -> FactorResponse:
        decomposition = factor(x)
        oracle_agrees = None
        if with_oracle and self.oracle is not None:
            expected = {prime.representative: exponent for prime, exponent in decomposition.factors}
            oracle_agrees = self.oracle.agrees_on_factorization(x, expected)
        return FactorResponse(
            ring=str(x.ring),
            element=str(x),
            unit=str(decomposition.unit),
            factors=[FactorItem(prime=str(p.representative), index=p.index, exponent=e) for p, e in decomposition.factors],
            oracle_agrees=oracle_agrees,
        )
