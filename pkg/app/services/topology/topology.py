"""The Macias space of a ring: basic opens, supports, closures, specialization.

In a PID, s lies in sigma_k exactly when k and s share no prime class, so
every question here reduces either to a gcd or to prime supports.  Closures
stay symbolic; windows only materialize finite slices of them.
"""
import logging
from functools import lru_cache, partial
from typing import List, Optional, Tuple

from app.core.config import settings
from app.core.errors import InvariantViolation, RingMismatch
from app.services.enumeration.enumeration import Window
from app.services.oracle.oracle import OracleService, bezout_search, oracle_coprime
from app.services.rings.rings import (
    check_nonzero,
    coprime,
    divides,
    element,
    factor,
    get_ring,
    is_unit,
    multiply,
    one,
    require_pid,
)
from app.services.rings.rings_schema import Element, RingId, RingKind
from app.utils.sweep import ordered_map

from .topology_schema import (
    AdjacencyItem,
    BasicOpen,
    ClosureDescriptor,
    ClosureResponse,
    ControlPair,
    CounterexampleResponse,
    DivisibleByAll,
    GraphResponse,
    MemberResponse,
    SpecializationGraph,
    Support,
    SupportResponse,
    WholeSpace,
    WitnessResponse,
)

logger = logging.getLogger(__name__)

Z_X = RingId(RingKind.INT_POLY)


@lru_cache(maxsize=1 << 16)
def support(x: Element) -> Support:
    require_pid(x.ring, "support")
    decomposition = factor(x)
    return Support(x.ring, tuple(prime for prime, _ in decomposition.factors))


def basic_open(k: Element) -> BasicOpen:
    check_nonzero(k)
    return BasicOpen(k, support(k) if k.ring.is_pid else None)


def in_basic_open(s: Element, k: Element) -> bool:
    """s in sigma_k, i.e. <k> + <s> is the whole ring."""
    member = coprime(k, s)
    if settings.CROSS_CHECK_SUPPORTS and s.ring.is_pid:
        disjoint = support(k).isdisjoint(support(s))
        if disjoint != member:
            raise InvariantViolation(
                f"gcd says {s} {'is' if member else 'is not'} in sigma({k}) but supports "
                f"{support(s)} and {support(k)} {'are' if disjoint else 'are not'} disjoint"
            )
    return member


def basic_open_intersection(a: Element, b: Element) -> BasicOpen:
    """sigma_a meet sigma_b, which is sigma_ab."""
    check_nonzero(a, b)
    return basic_open(multiply(a, b))


def same_basic_open(k1: Element, k2: Element) -> bool:
    """In a PID the basic open only depends on the generator's support."""
    require_pid(k1.ring, "same_basic_open")
    check_nonzero(k1, k2)
    return support(k1) == support(k2)


def non_hausdorff_witness(a: Element, b: Element) -> Element:
    """A common point of sigma_a and sigma_b; 1 lies in every basic open."""
    check_nonzero(a, b)
    witness = one(a.ring)
    if not (in_basic_open(witness, a) and in_basic_open(witness, b)):
        raise InvariantViolation(f"1 is missing from sigma({a}) or sigma({b})")
    return witness


def closure_singleton(x: Element) -> ClosureDescriptor:
    require_pid(x.ring, "closure_singleton")
    if is_unit(x):
        return WholeSpace()
    return DivisibleByAll(support(x))


def _same_ring(x: Element, w: Window) -> None:
    if x.ring != w.ring:
        raise RingMismatch(f"{x} lives in {x.ring} but the window is over {w.ring}")


def closure_members(x: Element, w: Window) -> List[Element]:
    _same_ring(x, w)
    descriptor = closure_singleton(x)
    if isinstance(descriptor, WholeSpace):
        return list(w.elements)
    return [y for y in w if descriptor.support.issubset(support(y))]


def separating_witness(x: Element, y: Element) -> Optional[Element]:
    """A prime p dividing x but not y, so y in sigma_p while x is not."""
    require_pid(x.ring, "separating_witness")
    check_nonzero(x, y)
    for prime in support(x).classes:
        if not divides(prime.representative, y):
            return prime.representative
    return None


def is_generic_point(x: Element) -> bool:
    return is_unit(x)


def _successors(i: int, supports: Tuple[Support, ...]) -> List[int]:
    source = supports[i]
    return [j for j, target in enumerate(supports) if j != i and source.issubset(target)]


def specialization_graph(w: Window) -> SpecializationGraph:
    """Edge y -> x whenever x is in the closure of {y}; reflexive edges left out."""
    require_pid(w.ring, "specialization_graph")
    supports = tuple(ordered_map(support, w.elements))
    rows = ordered_map(partial(_successors, supports=supports), range(len(supports)))
    edges = tuple((i, j) for i, row in enumerate(rows) for j in row)
    logger.debug(f"Specialization graph over {w.ring} bound {w.bound}: {len(edges)} edges")
    return SpecializationGraph(w.ring, w.bound, w.elements, edges)


# -- Z[x] ---------------------------------------------------------------------

def _control(a: Element, b: Element) -> ControlPair:
    found = bezout_search(a, b)
    return ControlPair(
        a=str(a),
        b=str(b),
        coprime=coprime(a, b),
        oracle_coprime=found is not None,
        cofactors=[str(c) for c in found] if found else None,
    )


def zx_counterexample() -> CounterexampleResponse:
    """2 and x are non-associate primes of Z[x], yet <2, x> is a proper ideal."""
    ring = get_ring(Z_X)
    two, x = element(Z_X, 2), element(Z_X, (0, 1))

    certificates = {str(p): ring.certify_prime(p.value) for p in (two, x)}
    # distinct prime classes: both certified and not associates
    supports_disjoint = all(certificates.values()) and ring.canonical(two.value)[1] != ring.canonical(x.value)[1]

    # 2f + xg has constant term 2 f(0)
    cofactor_box = [()] + list(ring.box_values(1, 2))
    constant_terms_even = all(
        (ring.add(ring.mul(two.value, f), ring.mul(x.value, g)) or (0,))[0] % 2 == 0
        for f in cofactor_box
        for g in cofactor_box
    )

    controls = [
        _control(two, element(Z_X, (1, 1))),
        _control(two, element(Z_X, (1, 2))),
    ]
    report = CounterexampleResponse(
        ring=str(Z_X),
        a=str(two),
        b=str(x),
        prime_certificates={k: v or "" for k, v in certificates.items()},
        supports_disjoint=supports_disjoint,
        coprime=coprime(two, x),
        constant_terms_even=constant_terms_even,
        oracle_coprime=oracle_coprime(two, x),
        controls=controls,
    )
    logger.info(f"Z[x] counterexample: {report.violation_count()} violations")
    return report



class TopologyService:
    """Responses of the topology commands, with optional oracle cross-checks."""

    def __init__(self, oracle: Optional[OracleService] = None):
        self.oracle = oracle or OracleService()

    def describe_support(self, x: Element) -> SupportResponse:
        return SupportResponse(
            ring=str(x.ring),
            element=str(x),
            support=[str(c.representative) for c in support(x).classes],
        )

    def check_member(self, k: Element, s: Element, with_oracle: bool = False) -> MemberResponse:
        member = in_basic_open(s, k)
        supports_disjoint = oracle_agrees = None
        if with_oracle:
            if k.ring.is_pid:
                supports_disjoint = support(k).isdisjoint(support(s))
            oracle_agrees = self.oracle.agrees_on_membership(k, s, member)
        return MemberResponse(
            ring=str(k.ring),
            k=str(k),
            s=str(s),
            member=member,
            supports_disjoint=supports_disjoint,
            oracle_agrees=oracle_agrees,
        )

    def closure(self, x: Element, w: Window, with_oracle: bool = False) -> ClosureResponse:
        members = closure_members(x, w)
        return ClosureResponse(
            ring=str(x.ring),
            element=str(x),
            closure=str(closure_singleton(x)),
            window_bound=w.bound,
            members=[str(y) for y in members],
            oracle_agrees=self.oracle.agrees_on_closure(x, w.elements, members) if with_oracle else None,
        )

    def witness(self, x: Element, y: Element) -> WitnessResponse:
        found = separating_witness(x, y)
        return WitnessResponse(
            ring=str(x.ring),
            x=str(x),
            y=str(y),
            witness=str(found) if found is not None else None,
        )

    def graph(self, w: Window) -> GraphResponse:
        graph = specialization_graph(w)
        labels = [str(node) for node in graph.nodes]
        return GraphResponse(
            ring=str(w.ring),
            window_bound=graph.bound,
            nodes=labels,
            adjacency=[
                AdjacencyItem(node=labels[i], successors=[labels[j] for j in targets])
                for i, targets in graph.successors().items()
                if targets
            ],
        )

    def counterexample(self) -> CounterexampleResponse:
        return zx_counterexample()
