"""Height-ordered enumeration of nonzero elements and of prime classes.

Windows are the finite slices of the punctured ring on which every
brute-force check runs.  The order is total and stable: (height, ring
tiebreak), so a smaller window is always an ordered subset of a larger one.
"""
import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Tuple

from app.core.config import settings
from app.core.errors import NoPrimeOutside, SizeLimit
from app.services.rings.rings import check_nonzero, get_ring
from app.services.rings.rings_schema import Element, PrimeClass, RingId, RingKind
from app.services.topology.topology_schema import Support

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Window:
    ring: RingId
    bound: int
    elements: Tuple[Element, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Element]:
        return iter(self.elements)

    def __contains__(self, x: Element) -> bool:
        return x in self._members

    @property
    def _members(self) -> frozenset:
        cached = self.__dict__.get("_member_set")
        if cached is None:
            cached = frozenset(self.elements)
            object.__setattr__(self, "_member_set", cached)
        return cached


def height(x: Element) -> int:
    return check_nonzero(x).height(x.value)


def _guard_bound(ring_id: RingId, bound: int) -> None:
    if bound < 1:
        raise SizeLimit(f"window bound must be positive, got {bound}")
    if bound.bit_length() > settings.MAX_INTEGER_BITS:
        raise SizeLimit(f"window bound {bound} exceeds {settings.MAX_INTEGER_BITS} bits")
    ring = get_ring(ring_id)
    if ring_id.kind == RingKind.POLY_FP and ring.degree(ring.from_height(bound)) > settings.MAX_DEGREE:
        raise SizeLimit(f"window bound {bound} reaches past degree {settings.MAX_DEGREE}")
    if ring_id.kind == RingKind.INT_POLY and bound - 1 > settings.MAX_DEGREE:
        raise SizeLimit(f"window bound {bound} reaches past degree {settings.MAX_DEGREE}")


@lru_cache(maxsize=64)
def enumerate_elements(ring_id: RingId, bound: int) -> Window:
    _guard_bound(ring_id, bound)
    ring = get_ring(ring_id)
    values = set(ring.window_values(bound))
    values.update(ring.finite_units() or ())
    values.add(ring.one)
    ordered = sorted(values, key=ring.order_key)
    logger.debug(f"Window {ring_id} bound {bound}: {len(ordered)} elements")
    return Window(ring_id, bound, tuple(Element(ring_id, v) for v in ordered))


def nth_prime_class(ring_id: RingId, n: int) -> PrimeClass:
    return PrimeClass.at(ring_id, Element(ring_id, get_ring(ring_id).nth_prime(n)), n)


def enumerate_prime_classes(ring_id: RingId, count: int) -> List[PrimeClass]:
    reps = get_ring(ring_id).primes.first(count)
    return [PrimeClass.at(ring_id, Element(ring_id, rep), i) for i, rep in enumerate(reps)]


def find_prime_outside(support: Support) -> PrimeClass:
    """Least-index prime class not in the support."""
    taken = {c.representative for c in support.classes}
    ring_id = support.ring
    cardinal = get_ring(ring_id).prime_cardinality()
    for n in itertools.count():
        if cardinal.is_finite and n >= cardinal.count:
            raise NoPrimeOutside(f"the support {support} already covers every prime class of {ring_id}")
        candidate = nth_prime_class(ring_id, n)
        if candidate.representative not in taken:
            return candidate
