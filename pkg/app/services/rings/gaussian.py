"""Gaussian integers a+bi as pairs (a, b).

Class representatives lie in the half-open first quadrant (a > 0, b >= 0).
Factorization splits the norm over the integers and then trial-divides by the
Gaussian primes lying over each rational prime.
"""
import itertools
from math import isqrt
from typing import Iterable, Iterator, List, Optional, Tuple

from sympy import factorint, isprime

from .base import Ring
from .rings_schema import Cardinal

Gauss = Tuple[int, int]

# i^0, i^1, i^2, i^3
_UNITS: List[Gauss] = [(1, 0), (0, 1), (-1, 0), (0, -1)]


def norm(value: Gauss) -> int:
    a, b = value
    return a * a + b * b


def conjugate(value: Gauss) -> Gauss:
    return value[0], -value[1]


def _round_div(n: int, d: int) -> int:
    """Nearest integer to n/d for d > 0, exact."""
    return (2 * n + d) // (2 * d)


class GaussianRing(Ring):
    zero: Gauss = (0, 0)
    one: Gauss = (1, 0)

    def normalize(self, raw) -> Gauss:
        if isinstance(raw, int):
            return raw, 0
        a, b = raw
        return int(a), int(b)

    def integers(self, value: Gauss) -> Iterable[int]:
        return value

    def add(self, x: Gauss, y: Gauss) -> Gauss:
        return x[0] + y[0], x[1] + y[1]

    def sub(self, x: Gauss, y: Gauss) -> Gauss:
        return x[0] - y[0], x[1] - y[1]

    def mul(self, x: Gauss, y: Gauss) -> Gauss:
        (a, b), (c, d) = x, y
        return a * c - b * d, a * d + b * c

    def exact_div(self, x: Gauss, y: Gauss) -> Optional[Gauss]:
        n = norm(y)
        re, im = self.mul(x, conjugate(y))
        if re % n or im % n:
            return None
        return re // n, im // n

    def _quotient(self, x: Gauss, y: Gauss) -> Gauss:
        n = norm(y)
        re, im = self.mul(x, conjugate(y))
        return _round_div(re, n), _round_div(im, n)

    def is_unit(self, value: Gauss) -> bool:
        return norm(value) == 1

    def canonical(self, value: Gauss) -> Tuple[Gauss, Gauss]:
        for k, rotation in enumerate(_UNITS):
            a, b = self.mul(value, rotation)
            if a > 0 and b >= 0:
                return _UNITS[(4 - k) % 4], (a, b)
        raise ValueError("zero has no associate class")

    def gcdex(self, x: Gauss, y: Gauss) -> Tuple[Gauss, Gauss, Gauss]:
        r0, r1 = x, y
        s0, s1 = self.one, self.zero
        t0, t1 = self.zero, self.one
        while r1 != self.zero:
            q = self._quotient(r0, r1)
            r0, r1 = r1, self.sub(r0, self.mul(q, r1))
            s0, s1 = s1, self.sub(s0, self.mul(q, s1))
            t0, t1 = t1, self.sub(t0, self.mul(q, t1))
        unit, g = self.canonical(r0)
        inverse = conjugate(unit)
        return g, self.mul(s0, inverse), self.mul(t0, inverse)

    def primes_over(self, q: int) -> List[Gauss]:
        """Canonical Gaussian primes dividing the rational prime q."""
        if q == 2:
            return [(1, 1)]
        if q % 4 == 3:
            return [(q, 0)]
        for a in range(1, isqrt(q) + 1):
            b = isqrt(q - a * a)
            if b * b == q - a * a:
                return sorted({(a, b), (b, a)}, key=self.order_key)
        raise ValueError(f"{q} is not a sum of two squares")

    def factor(self, value: Gauss) -> Tuple[Gauss, List[Tuple[Gauss, int]]]:
        remaining = value
        factors: List[Tuple[Gauss, int]] = []
        for q in sorted(factorint(norm(value))):
            for pi in self.primes_over(int(q)):
                exponent = 0
                while True:
                    quotient = self.exact_div(remaining, pi)
                    if quotient is None:
                        break
                    remaining, exponent = quotient, exponent + 1
                if exponent:
                    factors.append((pi, exponent))
        return remaining, factors

    def unit_cardinality(self) -> Cardinal:
        return Cardinal.finite(4)

    def prime_cardinality(self) -> Cardinal:
        return Cardinal.countably_infinite()

    def finite_units(self) -> List[Gauss]:
        return [(1, 0), (-1, 0), (0, 1), (0, -1)]

    def height(self, value: Gauss) -> int:
        return norm(value)

    def order_key(self, value: Gauss) -> tuple:
        a, b = value
        return norm(value), -abs(a), a < 0, abs(b), b < 0

    def window_values(self, bound: int) -> Iterable[Gauss]:
        radius = isqrt(bound)
        for a in range(-radius, radius + 1):
            for b in range(-radius, radius + 1):
                if 0 < a * a + b * b <= bound:
                    yield a, b

    def prime_candidates(self) -> Iterator[Gauss]:
        for n in itertools.count(2):
            reps = []
            for a in range(1, isqrt(n) + 1):
                b = isqrt(n - a * a)
                if b * b == n - a * a:
                    reps.append((a, b))
            yield from sorted(reps, key=self.order_key)

    def is_prime_rep(self, value: Gauss) -> bool:
        a, b = value
        if a <= 0 or b < 0:
            return False
        if b == 0:
            return a % 4 == 3 and isprime(a)
        return isprime(norm(value))
