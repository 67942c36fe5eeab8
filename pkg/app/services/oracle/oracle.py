"""Brute-force cross-checks for the fast ring and topology paths.

Coprimality is a bounded search for Bezout cofactors, and primality and
factorization are trial division over the height enumeration; neither calls
gcd or factor.  Closures are approximated with a finite pool of basic opens.
Pool membership goes through the ring gcd (``coprime``); the support formula
is never used.
"""
import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from app.core.config import settings
from app.core.errors import InvariantViolation, SizeLimit
from app.services.enumeration.enumeration import enumerate_elements, height
from app.services.rings.rings import (
    canonical_associate,
    check_nonzero,
    coprime,
    exact_quotient,
    get_ring,
    is_unit,
    require_pid,
)
from app.services.rings.rings_schema import Element, RingKind

from .oracle_schema import WitnessPool

logger = logging.getLogger(__name__)

# Largest Z[x] cofactor box searched
MAX_POLY_BOX = 1_000_000

Coeffs = Tuple[int, ...]


# -- plain integer polynomial arithmetic (coefficients low -> high) ---------

def _trim(coeffs: List[int]) -> Coeffs:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _poly_mul(a: Coeffs, b: Coeffs) -> Coeffs:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _trim(out)


def _poly_sub(a: Coeffs, b: Coeffs) -> Coeffs:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _trim(out)


def _poly_exact_div(a: Coeffs, b: Coeffs) -> Optional[Coeffs]:
    """a / b over Z[x] by schoolbook division, None unless exact."""
    remainder = list(a)
    if len(remainder) < len(b):
        return () if not remainder else None
    quotient = [0] * (len(remainder) - len(b) + 1)
    lead = b[-1]
    for shift in range(len(quotient) - 1, -1, -1):
        top = remainder[shift + len(b) - 1]
        if top % lead:
            return None
        q = top // lead
        quotient[shift] = q
        for i, c in enumerate(b):
            remainder[shift + i] -= q * c
    if any(remainder):
        return None
    return _trim(quotient)


# -- coprimality ------------------------------------------------------------

def default_bound(a: Element, b: Element) -> int:
    biggest = max(height(a), height(b))
    if a.ring.kind == RingKind.INT_POLY:
        return biggest
    return biggest * settings.ORACLE_BOUND_FACTOR


def _poly_cofactors(a: Element, b: Element, bound: int) -> Iterable[Coeffs]:
    ring = get_ring(a.ring)
    max_degree = max(ring.degree(a.value), ring.degree(b.value))
    if (2 * bound + 1) ** (max_degree + 1) > MAX_POLY_BOX:
        raise SizeLimit(f"Z[x] cofactor box of degree {max_degree} and coefficients {bound} is too large")
    yield ()
    yield from ring.box_values(max_degree, bound)


def bezout_search(a: Element, b: Element, bound: Optional[int] = None) -> Optional[Tuple[Element, Element]]:
    """Cofactors (x, y) with x*a + y*b = 1 and x of height <= bound, if any."""
    ring = check_nonzero(a, b)
    bound = bound or default_bound(a, b)

    if a.ring.kind == RingKind.INT_POLY:
        for x in _poly_cofactors(a, b, bound):
            y = _poly_exact_div(_poly_sub((1,), _poly_mul(x, a.value)), b.value)
            if y is not None:
                return Element(a.ring, x), Element(a.ring, y)
        return None

    candidates = [ring.zero] + [x.value for x in enumerate_elements(a.ring, bound)]
    for x in candidates:
        y = ring.exact_div(ring.sub(ring.one, ring.mul(x, a.value)), b.value)
        if y is not None:
            return Element(a.ring, x), Element(a.ring, y)
    return None


def oracle_coprime(a: Element, b: Element, bound: Optional[int] = None) -> bool:
    return bezout_search(a, b, bound) is not None


# -- primality and factorization --------------------------------------------

def _smaller(x: Element, window: Optional[Sequence[Element]]) -> Iterable[Element]:
    h = height(x)
    if window is None:
        return enumerate_elements(x.ring, max(1, h - 1))
    return (d for d in window if height(d) < h)


def oracle_is_prime(x: Element, window: Optional[Sequence[Element]] = None) -> bool:
    """No non-unit d of smaller height splits x into two non-units."""
    require_pid(x.ring, "oracle_is_prime")
    if is_unit(x):
        return False
    for d in _smaller(x, window):
        if is_unit(d):
            continue
        quotient = exact_quotient(x, d)
        if quotient is not None and not is_unit(quotient):
            return False
    return True


def oracle_factor(x: Element, window: Optional[Sequence[Element]] = None) -> Dict[Element, int]:
    """Canonical prime -> exponent by trial division in height order."""
    require_pid(x.ring, "oracle_factor")
    candidates = list(window) if window is not None else list(enumerate_elements(x.ring, height(x)))
    remaining = x
    exponents: Dict[Element, int] = {}
    for d in candidates:
        if is_unit(remaining):
            break
        if is_unit(d) or exact_quotient(remaining, d) is None:
            continue
        if canonical_associate(d)[1] != d or not oracle_is_prime(d, candidates):
            continue
        while True:
            quotient = exact_quotient(remaining, d)
            if quotient is None:
                break
            remaining = quotient
            exponents[d] = exponents.get(d, 0) + 1
    if not is_unit(remaining):
        raise InvariantViolation(f"trial division of {x} stopped at the non-unit {remaining}; widen the window")
    return exponents


# -- closures ---------------------------------------------------------------

def oracle_closure_upper(x: Element, w: Iterable[Element], pool: WitnessPool) -> List[Element]:
    """Points y of w such that every pool basic open containing y also contains x."""
    require_pid(x.ring, "oracle_closure_upper")
    separating = [k for k in pool.generators if not coprime(k, x)]
    return [y for y in w if not any(coprime(k, y) for k in separating)]


class OracleService:
    """The brute-force checks behind ``--with-oracle``, one per fast-path answer."""

    def __init__(self, bound: Optional[int] = None):
        # None: each check derives its search bound from the operands
        self.bound = bound

    def agrees_on_membership(self, k: Element, s: Element, member: bool) -> bool:
        return oracle_coprime(k, s, self.bound) == member

    def agrees_on_factorization(self, x: Element, factors: Dict[Element, int]) -> bool:
        return oracle_factor(x) == factors

    def agrees_on_closure(self, x: Element, w: Sequence[Element], members: List[Element]) -> bool:
        return oracle_closure_upper(x, w, WitnessPool.of(x.ring, w)) == members

    def non_primes(self, candidates: Iterable[Element]) -> List[Element]:
        """Candidates that trial division does not confirm as prime."""
        return [p for p in candidates if not oracle_is_prime(p)]
