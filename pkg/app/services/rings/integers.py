import itertools
from typing import Iterable, Iterator, List, Optional, Tuple

from sympy import factorint, isprime, prime, primepi

try:
    from sympy.core.intfunc import igcdex
except ImportError:  # sympy < 1.13
    from sympy.core.numbers import igcdex

from .base import Ring
from .rings_schema import Cardinal


class IntegerRing(Ring):
    """The ring of integers; class representatives are positive."""

    zero = 0
    one = 1

    def normalize(self, raw) -> int:
        return int(raw)

    def integers(self, value: int) -> Iterable[int]:
        return (value,)

    def add(self, a: int, b: int) -> int:
        return a + b

    def sub(self, a: int, b: int) -> int:
        return a - b

    def mul(self, a: int, b: int) -> int:
        return a * b

    def exact_div(self, a: int, b: int) -> Optional[int]:
        quotient, remainder = divmod(a, b)
        return quotient if remainder == 0 else None

    def is_unit(self, value: int) -> bool:
        return abs(value) == 1

    def canonical(self, value: int) -> Tuple[int, int]:
        return (1 if value > 0 else -1), abs(value)

    def gcdex(self, a: int, b: int) -> Tuple[int, int, int]:
        x, y, g = igcdex(a, b)
        return int(g), int(x), int(y)

    def factor(self, value: int) -> Tuple[int, List[Tuple[int, int]]]:
        unit = 1 if value > 0 else -1
        return unit, [(int(q), int(e)) for q, e in factorint(abs(value)).items()]

    def unit_cardinality(self) -> Cardinal:
        return Cardinal.finite(2)

    def prime_cardinality(self) -> Cardinal:
        return Cardinal.countably_infinite()

    def finite_units(self) -> List[int]:
        return [1, -1]

    def height(self, value: int) -> int:
        return abs(value)

    def order_key(self, value: int) -> tuple:
        return abs(value), value < 0

    def window_values(self, bound: int) -> Iterable[int]:
        for n in range(1, bound + 1):
            yield n
            yield -n

    def prime_candidates(self) -> Iterator[int]:
        return itertools.count(2)

    def is_prime_rep(self, value: int) -> bool:
        return value > 1 and isprime(value)

    def prime_index(self, rep: int) -> int:
        return int(primepi(rep)) - 1

    def nth_prime(self, n: int) -> int:
        return int(prime(n + 1))
