from dataclasses import dataclass
from typing import Iterable, Tuple

from app.core.errors import RingMismatch
from app.services.rings.rings_schema import Element, RingId


@dataclass(frozen=True)
class WitnessPool:
    """Generators k whose basic opens are used to separate points."""
    ring: RingId
    generators: Tuple[Element, ...]

    def __post_init__(self):
        if not self.generators:
            raise ValueError("a witness pool needs at least one generator")
        if any(k.ring != self.ring for k in self.generators):
            raise RingMismatch(f"witness pool generators must all lie in {self.ring}")

    @classmethod
    def of(cls, ring: RingId, generators: Iterable[Element]) -> "WitnessPool":
        return cls(ring, tuple(generators))
