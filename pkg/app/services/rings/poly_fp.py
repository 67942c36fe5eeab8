"""Polynomials over the prime field F_p.

Values are coefficient tuples indexed by degree (constant term first); the
zero polynomial is the empty tuple.  sympy's galoistools work on dense lists
with the leading coefficient first, so values are reversed at the boundary.
"""
import itertools
from typing import Iterable, Iterator, List, Optional, Tuple

from sympy import divisors, mobius
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (
    gf_add,
    gf_div,
    gf_factor,
    gf_gcdex,
    gf_irreducible_p,
    gf_monic,
    gf_mul,
    gf_sub,
)

from .base import Ring
from .rings_schema import Cardinal, RingId

Poly = Tuple[int, ...]


def _to_gf(value: Poly) -> list:
    return [ZZ(c) for c in reversed(value)]


def _from_gf(f: list) -> Poly:
    return tuple(int(c) for c in reversed(f))


class PolyFpRing(Ring):
    zero: Poly = ()
    one: Poly = (1,)

    def __init__(self, ring_id: RingId):
        super().__init__(ring_id)
        self.p = ring_id.p

    def normalize(self, raw) -> Poly:
        if isinstance(raw, int):
            raw = (raw,)
        coeffs = [int(c) % self.p for c in raw]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return tuple(coeffs)

    def integers(self, value: Poly) -> Iterable[int]:
        return value

    def degree(self, value: Poly) -> int:
        return len(value) - 1

    def add(self, a: Poly, b: Poly) -> Poly:
        return _from_gf(gf_add(_to_gf(a), _to_gf(b), self.p, ZZ))

    def sub(self, a: Poly, b: Poly) -> Poly:
        return _from_gf(gf_sub(_to_gf(a), _to_gf(b), self.p, ZZ))

    def mul(self, a: Poly, b: Poly) -> Poly:
        return _from_gf(gf_mul(_to_gf(a), _to_gf(b), self.p, ZZ))

    def exact_div(self, a: Poly, b: Poly) -> Optional[Poly]:
        quotient, remainder = gf_div(_to_gf(a), _to_gf(b), self.p, ZZ)
        return None if remainder else _from_gf(quotient)

    def is_unit(self, value: Poly) -> bool:
        return len(value) == 1

    def canonical(self, value: Poly) -> Tuple[Poly, Poly]:
        lc, monic = gf_monic(_to_gf(value), self.p, ZZ)
        return (int(lc),), _from_gf(monic)

    def gcdex(self, a: Poly, b: Poly) -> Tuple[Poly, Poly, Poly]:
        s, t, h = gf_gcdex(_to_gf(a), _to_gf(b), self.p, ZZ)
        return _from_gf(h), _from_gf(s), _from_gf(t)

    def factor(self, value: Poly) -> Tuple[Poly, List[Tuple[Poly, int]]]:
        lc, factors = gf_factor(_to_gf(value), self.p, ZZ)
        return (int(lc),), [(_from_gf(f), int(e)) for f, e in factors]

    def unit_cardinality(self) -> Cardinal:
        return Cardinal.finite(self.p - 1)

    def prime_cardinality(self) -> Cardinal:
        return Cardinal.countably_infinite()

    def finite_units(self) -> List[Poly]:
        return [(c,) for c in range(1, self.p)]

    def height(self, value: Poly) -> int:
        # base-p digits are the coefficients: orders by degree, then coefficients from the top
        return sum(c * self.p ** i for i, c in enumerate(value))

    def from_height(self, height: int) -> Poly:
        digits = []
        while height:
            height, digit = divmod(height, self.p)
            digits.append(digit)
        return tuple(digits)

    def window_values(self, bound: int) -> Iterable[Poly]:
        for h in range(1, bound + 1):
            yield self.from_height(h)
        for unit in self.finite_units():
            if self.height(unit) > bound:
                yield unit

    def prime_candidates(self) -> Iterator[Poly]:
        # monic polynomials of degree d have heights in [p^d, 2 p^d)
        for d in itertools.count(1):
            for h in range(self.p ** d, 2 * self.p ** d):
                yield self.from_height(h)

    def is_prime_rep(self, value: Poly) -> bool:
        return len(value) >= 2 and value[-1] == 1 and gf_irreducible_p(_to_gf(value), self.p, ZZ)

    def irreducible_count(self, d: int) -> int:
        """Number of monic irreducible polynomials of degree d."""
        return sum(int(mobius(e)) * self.p ** (d // e) for e in divisors(d)) // d

    def _irreducible_of_degree(self, d: int, below: Optional[int] = None) -> Iterator[Poly]:
        for h in range(self.p ** d, below if below is not None else 2 * self.p ** d):
            value = self.from_height(h)
            if self.is_prime_rep(value):
                yield value

    def prime_index(self, rep: Poly) -> int:
        d = self.degree(rep)
        lower = sum(self.irreducible_count(e) for e in range(1, d))
        return lower + sum(1 for _ in self._irreducible_of_degree(d, below=self.height(rep)))

    def nth_prime(self, n: int) -> Poly:
        for d in itertools.count(1):
            count = self.irreducible_count(d)
            if n < count:
                return next(itertools.islice(self._irreducible_of_degree(d), n, None))
            n -= count
