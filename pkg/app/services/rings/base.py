"""Uniform interface shared by every ring instance.

Ring objects work on raw values (ints and int tuples); the public functions in
``rings.py`` wrap them in ``Element``.  Prime enumerations are memoized
per ring in a catalog that only ever grows, so every process
computes the same indices.  Rings that can count their primes or units
arithmetically override the index lookups instead of walking the catalog.
"""
import threading
from abc import ABC, abstractmethod
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from app.core.errors import IndexBeyondFinitePrimes, InvariantViolation, SizeLimit, UnsupportedForRing

from .rings_schema import Cardinal, RingId, Value


class Ring(ABC):
    euclidean = True

    def __init__(self, ring_id: RingId):
        self.ring_id = ring_id
        self.primes = PrimeCatalog(self)

    # -- representation ---------------------------------------------------

    @property
    @abstractmethod
    def zero(self) -> Value: ...

    @property
    @abstractmethod
    def one(self) -> Value: ...

    @abstractmethod
    def normalize(self, raw) -> Value:
        """Validate ring membership and return the canonical stored value."""

    @abstractmethod
    def integers(self, value: Value) -> Iterable[int]:
        """The integers stored in a value (for size guards)."""

    def degree(self, value: Value) -> int:
        return 0

    def is_zero(self, value: Value) -> bool:
        return value == self.zero

    def guard(self, value: Value, max_bits: int, max_degree: int) -> None:
        if self.degree(value) > max_degree:
            raise SizeLimit(f"degree {self.degree(value)} exceeds the limit {max_degree} in {self.ring_id}")
        for n in self.integers(value):
            if int(n).bit_length() > max_bits:
                raise SizeLimit(f"integer of {int(n).bit_length()} bits exceeds the limit {max_bits} in {self.ring_id}")

    # -- arithmetic -------------------------------------------------------

    @abstractmethod
    def add(self, a: Value, b: Value) -> Value: ...

    @abstractmethod
    def sub(self, a: Value, b: Value) -> Value: ...

    @abstractmethod
    def mul(self, a: Value, b: Value) -> Value: ...

    @abstractmethod
    def exact_div(self, a: Value, b: Value) -> Optional[Value]:
        """a / b if it lies in the ring, else None."""

    def power(self, a: Value, exponent: int) -> Value:
        result, base = self.one, a
        while exponent:
            if exponent & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            exponent >>= 1
        return result

    # -- structure --------------------------------------------------------

    @abstractmethod
    def is_unit(self, value: Value) -> bool: ...

    @abstractmethod
    def canonical(self, value: Value) -> Tuple[Value, Value]:
        """(u, rep) with value = u * rep, u a unit and rep the class representative."""

    @abstractmethod
    def gcdex(self, a: Value, b: Value) -> Tuple[Value, Value, Value]:
        """(g, x, y) with g = x*a + y*b and g canonical."""

    @abstractmethod
    def factor(self, value: Value) -> Tuple[Value, List[Tuple[Value, int]]]:
        """(unit, [(canonical prime, exponent)]) in any order."""

    def comaximal(self, a: Value, b: Value) -> bool:
        g, _, _ = self.gcdex(a, b)
        return g == self.one

    # -- cardinalities ----------------------------------------------------

    @abstractmethod
    def unit_cardinality(self) -> Cardinal: ...

    @abstractmethod
    def prime_cardinality(self) -> Cardinal: ...

    def finite_units(self) -> Optional[List[Value]]:
        """All units in window order when the unit group is finite."""
        return None

    # -- enumeration ------------------------------------------------------

    @abstractmethod
    def height(self, value: Value) -> int: ...

    def order_key(self, value: Value) -> tuple:
        return (self.height(value),)

    @abstractmethod
    def window_values(self, bound: int) -> Iterable[Value]:
        """Every nonzero value of height <= bound (any order)."""

    @abstractmethod
    def prime_candidates(self) -> Iterator[Value]:
        """Canonical values in order_key order; primes are filtered by is_prime_rep."""

    @abstractmethod
    def is_prime_rep(self, value: Value) -> bool: ...

    def prime_index(self, rep: Value) -> int:
        """Position of a canonical prime in the enumeration."""
        return self.primes.index_of(rep)

    def nth_prime(self, n: int) -> Value:
        return self.primes.nth(n)

    # Infinite unit groups only: units ordered by order_key, indexed from 0

    def unit_index(self, unit: Value) -> int:
        raise UnsupportedForRing(f"{self.ring_id} has no infinite unit enumeration")

    def nth_unit(self, n: int) -> Value:
        raise UnsupportedForRing(f"{self.ring_id} has no infinite unit enumeration")


class PrimeCatalog:
    """Prime class representatives of one ring, in enumeration order."""

    def __init__(self, ring: Ring):
        self._ring = ring
        self._reps: List[Value] = []
        self._index: dict = {}
        self._candidates: Optional[Iterator[Value]] = None
        self._last_key: Optional[tuple] = None
        self._exhausted = False
        self._lock = threading.Lock()

    def _advance(self) -> bool:
        if self._candidates is None:
            self._candidates = self._ring.prime_candidates()
        for candidate in self._candidates:
            self._last_key = self._ring.order_key(candidate)
            if self._ring.is_prime_rep(candidate):
                self._index[candidate] = len(self._reps)
                self._reps.append(candidate)
                return True
        self._exhausted = True
        return False

    def nth(self, n: int) -> Value:
        with self._lock:
            while len(self._reps) <= n:
                if self._exhausted or not self._advance():
                    raise IndexBeyondFinitePrimes(
                        f"{self._ring.ring_id} has only {len(self._reps)} prime classes; index {n} requested"
                    )
            return self._reps[n]

    def first(self, count: int) -> Sequence[Value]:
        if count > 0:
            try:
                self.nth(count - 1)
            except IndexBeyondFinitePrimes:
                pass
        return tuple(self._reps[:count])

    def index_of(self, rep: Value) -> int:
        target = self._ring.order_key(rep)
        with self._lock:
            while rep not in self._index:
                if self._exhausted or (self._last_key is not None and self._last_key > target):
                    raise InvariantViolation(f"{rep!r} is not a prime representative of {self._ring.ring_id}")
                self._advance()
            return self._index[rep]

