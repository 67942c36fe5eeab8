"""Integer polynomials Z[x]: a UFD that is not a PID.

Only two-generator coprimality is decided here.  <f, g> = Z[x] exactly when
the reductions of f and g generate F_q[x] for every rational prime q; only
the primes dividing the resultant (or the constant operand) can fail.
"""
import itertools
from math import gcd
from typing import Iterable, Iterator, List, Optional, Tuple

from sympy import Poly, Symbol, factorint, isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_from_int_poly, gf_gcd
from sympy.polys.polyerrors import ExactQuotientFailed

from app.core.errors import UnsupportedForRing

from .base import Ring
from .rings_schema import Cardinal

IntPoly = Tuple[int, ...]

X = Symbol("x")


def to_poly(value: IntPoly) -> Poly:
    return Poly(list(reversed(value)) or [0], X, domain=ZZ)


def from_poly(poly: Poly) -> IntPoly:
    coeffs = [int(c) for c in reversed(poly.all_coeffs())]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def content(value: IntPoly) -> int:
    return gcd(*value)


class IntPolyRing(Ring):
    euclidean = False

    zero: IntPoly = ()
    one: IntPoly = (1,)

    def normalize(self, raw) -> IntPoly:
        if isinstance(raw, int):
            raw = (raw,)
        coeffs = [int(c) for c in raw]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return tuple(coeffs)

    def integers(self, value: IntPoly) -> Iterable[int]:
        return value

    def degree(self, value: IntPoly) -> int:
        return len(value) - 1

    def add(self, a: IntPoly, b: IntPoly) -> IntPoly:
        return from_poly(to_poly(a) + to_poly(b))

    def sub(self, a: IntPoly, b: IntPoly) -> IntPoly:
        return from_poly(to_poly(a) - to_poly(b))

    def mul(self, a: IntPoly, b: IntPoly) -> IntPoly:
        return from_poly(to_poly(a) * to_poly(b))

    def exact_div(self, a: IntPoly, b: IntPoly) -> Optional[IntPoly]:
        try:
            return from_poly(to_poly(a).exquo(to_poly(b)))
        except ExactQuotientFailed:
            return None

    def is_unit(self, value: IntPoly) -> bool:
        return value in ((1,), (-1,))

    def canonical(self, value: IntPoly) -> Tuple[IntPoly, IntPoly]:
        if value[-1] > 0:
            return (1,), value
        return (-1,), tuple(-c for c in value)

    def gcdex(self, a: IntPoly, b: IntPoly):
        raise UnsupportedForRing("Z[x] is not a Euclidean domain; gcd/Bezout is unavailable")

    def factor(self, value: IntPoly):
        raise UnsupportedForRing("Z[x] is coprimality-only; factorization is unavailable")

    # -- coprimality ------------------------------------------------------

    def critical_primes(self, f: IntPoly, g: IntPoly) -> Optional[List[int]]:
        """Rational primes at which <f, g> might fail to be everything; None if never comaximal."""
        if len(f) == 1 or len(g) == 1:
            constant = f[0] if len(f) == 1 else g[0]
            return sorted(int(q) for q in factorint(abs(constant)))
        res = int(to_poly(f).resultant(to_poly(g)))
        if res == 0:
            # common factor over Q
            return None
        return sorted(int(q) for q in factorint(abs(res)))

    def generates_mod(self, f: IntPoly, g: IntPoly, q: int) -> bool:
        fq = gf_from_int_poly([ZZ(c) for c in reversed(f)], q)
        gq = gf_from_int_poly([ZZ(c) for c in reversed(g)], q)
        return gf_gcd(fq, gq, q, ZZ) == [ZZ(1)]

    def comaximal(self, f: IntPoly, g: IntPoly) -> bool:
        if self.is_unit(f) or self.is_unit(g):
            return True
        critical = self.critical_primes(f, g)
        if critical is None:
            return False
        return all(self.generates_mod(f, g, q) for q in critical)

    def certify_prime(self, value: IntPoly) -> Optional[str]:
        """A reason the value is prime in Z[x], for the shapes this module can certify."""
        if len(value) == 1 and isprime(abs(value[0])):
            return "rational prime constant: Z[x]/<q> = F_q[x] is a domain"
        if len(value) == 2 and content(value) == 1:
            return "primitive linear polynomial: Z[x]/<ax+b> embeds in Q"
        return None

    # -- cardinalities / enumeration --------------------------------------

    def unit_cardinality(self) -> Cardinal:
        return Cardinal.finite(2)

    def prime_cardinality(self) -> Cardinal:
        raise UnsupportedForRing("prime classes of Z[x] are not enumerated")

    def finite_units(self) -> List[IntPoly]:
        return [(1,), (-1,)]

    def height(self, value: IntPoly) -> int:
        return max(abs(c) * (i + 1) for i, c in enumerate(value))

    def order_key(self, value: IntPoly) -> tuple:
        return (self.height(value), len(value)) + tuple((abs(c), c < 0) for c in reversed(value))

    def box_values(self, max_degree: int, max_coeff: int) -> Iterator[IntPoly]:
        """Every nonzero polynomial with degree <= max_degree and |coefficients| <= max_coeff."""
        span = range(-max_coeff, max_coeff + 1)
        leading = [c for c in span if c]
        for degree in range(max_degree + 1):
            for lower in itertools.product(span, repeat=degree):
                for lc in leading:
                    yield lower + (lc,)

    def window_values(self, bound: int) -> Iterable[IntPoly]:
        for degree in range(bound):
            limits = [bound // (i + 1) for i in range(degree + 1)]
            if limits[-1] == 0:
                break
            ranges = [range(-m, m + 1) for m in limits[:-1]]
            ranges.append([c for c in range(-limits[-1], limits[-1] + 1) if c])
            for coeffs in itertools.product(*ranges):
                yield tuple(coeffs)

    def prime_candidates(self):
        raise UnsupportedForRing("prime classes of Z[x] are not enumerated")

    def is_prime_rep(self, value: IntPoly) -> bool:
        raise UnsupportedForRing("prime classes of Z[x] are not enumerated")
