"""Subrings of the rationals: the local ring Z_(p) and the S-integers Z[1/S].

Values are reduced fractions (num, den) with den > 0.  In Z_(p) the
denominator is prime to p; in Z[1/S] it is a product of primes from S.
"""
import heapq
import itertools
from fractions import Fraction
from math import gcd, prod
from typing import Iterable, Iterator, List, Optional, Tuple

from sympy import divisors, factorint, isprime, mobius, prime, primepi

from app.core.errors import InvariantViolation, LiteralParseError

from .base import Ring
from .integers import igcdex
from .rings_schema import Cardinal, RingId

Frac = Tuple[int, int]


def _frac(value: Frac) -> Fraction:
    return Fraction(value[0], value[1])


def _pair(q: Fraction) -> Frac:
    return q.numerator, q.denominator


def valuation(n: int, q: int) -> int:
    n, v = abs(n), 0
    while n and n % q == 0:
        n //= q
        v += 1
    return v


def coprime_below(h: int, primes: Iterable[int]) -> int:
    """Count of 1 <= a < h divisible by none of the primes."""
    radical = prod(primes)
    return sum(int(mobius(d)) * ((h - 1) // d) for d in divisors(radical))


def smooth_numbers(primes: Iterable[int]) -> Iterator[int]:
    """Positive integers whose prime factors all lie in primes, increasing."""
    heap, seen = [1], {1}
    while True:
        n = heapq.heappop(heap)
        yield n
        for q in primes:
            if n * q not in seen:
                seen.add(n * q)
                heapq.heappush(heap, n * q)


class FractionRing(Ring):
    zero: Frac = (0, 1)
    one: Frac = (1, 1)

    def admissible_denominator(self, den: int) -> bool:
        raise NotImplementedError

    def normalize(self, raw) -> Frac:
        if isinstance(raw, int):
            raw = (raw, 1)
        num, den = raw
        if den == 0:
            raise LiteralParseError(f"zero denominator in {num}/{den}")
        num, den = _pair(Fraction(int(num), int(den)))
        if not self.admissible_denominator(den):
            raise LiteralParseError(f"{num}/{den} is not an element of {self.ring_id}")
        return num, den

    def integers(self, value: Frac) -> Iterable[int]:
        return value

    def add(self, a: Frac, b: Frac) -> Frac:
        return _pair(_frac(a) + _frac(b))

    def sub(self, a: Frac, b: Frac) -> Frac:
        return _pair(_frac(a) - _frac(b))

    def mul(self, a: Frac, b: Frac) -> Frac:
        return _pair(_frac(a) * _frac(b))

    def exact_div(self, a: Frac, b: Frac) -> Optional[Frac]:
        quotient = _frac(a) / _frac(b)
        return _pair(quotient) if self.admissible_denominator(quotient.denominator) else None

    def unit_cardinality(self) -> Cardinal:
        return Cardinal.countably_infinite()

    def height(self, value: Frac) -> int:
        return max(abs(value[0]), value[1])

    def order_key(self, value: Frac) -> tuple:
        num, den = value
        return max(abs(num), den), den, abs(num), num < 0

    def _values_of_height(self, h: int) -> List[Frac]:
        found = []
        for den in range(1, h + 1):
            if not self.admissible_denominator(den):
                continue
            numerators = range(1, h + 1) if den == h else (h,)
            for num in numerators:
                if gcd(num, den) == 1:
                    found.extend([(num, den), (-num, den)])
        return found

    def window_values(self, bound: int) -> Iterable[Frac]:
        for h in range(1, bound + 1):
            yield from self._values_of_height(h)

    # -- unit enumeration: height by height, order_key inside a height ----

    def unit_heights(self) -> Iterator[int]:
        """Increasing heights that carry at least one unit."""
        raise NotImplementedError

    def units_of_height(self, h: int) -> List[Frac]:
        units = [v for v in self._values_of_height(h) if self.is_unit(v)]
        return sorted(units, key=self.order_key)

    def unit_count(self, h: int) -> int:
        return len(self.units_of_height(h))

    def unit_index(self, unit: Frac) -> int:
        if not self.is_unit(unit):
            raise InvariantViolation(f"{unit!r} is not a unit of {self.ring_id}")
        target, n = self.height(unit), 0
        for h in self.unit_heights():
            if h == target:
                return n + self.units_of_height(h).index(unit)
            if h > target:
                break
            n += self.unit_count(h)
        raise InvariantViolation(f"no units of height {target} in {self.ring_id}")

    def nth_unit(self, n: int) -> Frac:
        for h in self.unit_heights():
            count = self.unit_count(h)
            if n < count:
                return self.units_of_height(h)[n]
            n -= count


class LocalRing(FractionRing):
    """Z_(p): a discrete valuation ring with the single prime class [p]."""

    def __init__(self, ring_id: RingId):
        super().__init__(ring_id)
        self.p = ring_id.p

    def admissible_denominator(self, den: int) -> bool:
        return den % self.p != 0

    def is_unit(self, value: Frac) -> bool:
        return value[0] % self.p != 0

    def canonical(self, value: Frac) -> Tuple[Frac, Frac]:
        rep = (self.p ** valuation(value[0], self.p), 1)
        return self.exact_div(value, rep), rep

    def gcdex(self, a: Frac, b: Frac) -> Tuple[Frac, Frac, Frac]:
        va, vb = valuation(a[0], self.p), valuation(b[0], self.p)
        g = (self.p ** min(va, vb), 1)
        if va <= vb:
            return g, self.exact_div(g, a), self.zero
        return g, self.zero, self.exact_div(g, b)

    def factor(self, value: Frac) -> Tuple[Frac, List[Tuple[Frac, int]]]:
        unit, rep = self.canonical(value)
        v = valuation(rep[0], self.p)
        return unit, ([((self.p, 1), v)] if v else [])

    def prime_cardinality(self) -> Cardinal:
        return Cardinal.finite(1)

    def prime_candidates(self) -> Iterator[Frac]:
        yield (self.p, 1)

    def is_prime_rep(self, value: Frac) -> bool:
        return value == (self.p, 1)

    def unit_heights(self) -> Iterator[int]:
        return (h for h in itertools.count(1) if h % self.p)

    def unit_count(self, h: int) -> int:
        if h % self.p:
            return 2 if h == 1 else 4 * coprime_below(h, set(factorint(h)) | {self.p})
        return 0


class SIntegerRing(FractionRing):
    """Z[1/S]: primes in S become units, every other rational prime stays prime."""

    def __init__(self, ring_id: RingId):
        super().__init__(ring_id)
        self.s_primes = ring_id.primes

    def admissible_denominator(self, den: int) -> bool:
        return self.s_free(den) == 1

    def s_free(self, n: int) -> int:
        n = abs(n)
        for q in self.s_primes:
            while n % q == 0:
                n //= q
        return n

    def is_unit(self, value: Frac) -> bool:
        return self.s_free(value[0]) == 1

    def canonical(self, value: Frac) -> Tuple[Frac, Frac]:
        rep = (self.s_free(value[0]), 1)
        return self.exact_div(value, rep), rep

    def gcdex(self, a: Frac, b: Frac) -> Tuple[Frac, Frac, Frac]:
        ua, (ma, _) = self.canonical(a)
        ub, (mb, _) = self.canonical(b)
        x, y, g = igcdex(ma, mb)
        return (int(g), 1), self.exact_div((int(x), 1), ua), self.exact_div((int(y), 1), ub)

    def factor(self, value: Frac) -> Tuple[Frac, List[Tuple[Frac, int]]]:
        unit, (m, _) = self.canonical(value)
        return unit, [((int(q), 1), int(e)) for q, e in factorint(m).items()]

    def unit_coordinates(self, unit: Frac) -> Tuple[int, Tuple[int, ...]]:
        """(sign, exponent of each S-prime) with unit = sign * prod q^e."""
        num, den = unit
        sign = 1 if num > 0 else -1
        return sign, tuple(valuation(num, q) - valuation(den, q) for q in self.s_primes)

    def unit_from_coordinates(self, sign: int, exponents: Tuple[int, ...]) -> Frac:
        value = Fraction(sign)
        for q, e in zip(self.s_primes, exponents):
            value *= Fraction(q) ** e
        return _pair(value)

    def prime_cardinality(self) -> Cardinal:
        return Cardinal.countably_infinite()

    def prime_candidates(self) -> Iterator[Frac]:
        return ((n, 1) for n in itertools.count(2))

    def is_prime_rep(self, value: Frac) -> bool:
        num, den = value
        return den == 1 and num not in self.s_primes and isprime(num)

    def prime_index(self, rep: Frac) -> int:
        num = rep[0]
        return int(primepi(num)) - 1 - sum(1 for q in self.s_primes if q < num)

    def nth_prime(self, n: int) -> Frac:
        # skip past the S-primes among the first primes
        for k in itertools.count(n + 1):
            candidate = int(prime(k))
            if candidate in self.s_primes:
                continue
            if k - sum(1 for q in self.s_primes if q < candidate) == n + 1:
                return candidate, 1

    def unit_heights(self) -> Iterator[int]:
        return smooth_numbers(self.s_primes)

    def units_of_height(self, h: int) -> List[Frac]:
        if h == 1:
            return [(1, 1), (-1, 1)]
        units = []
        for m in itertools.takewhile(lambda m: m < h, smooth_numbers(self.s_primes)):
            if gcd(m, h) == 1:
                units.extend([(h, m), (-h, m), (m, h), (-m, h)])
        return sorted(units, key=self.order_key)
