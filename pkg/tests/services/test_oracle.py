import itertools

import pytest
from hypothesis import given, settings as hsettings, strategies as st

from app.core.errors import RingMismatch, SizeLimit
from app.services.enumeration.enumeration import enumerate_elements
from app.services.oracle.oracle import (
    OracleService,
    bezout_search,
    oracle_closure_upper,
    oracle_coprime,
    oracle_factor,
    oracle_is_prime,
)
from app.services.oracle.oracle_schema import WitnessPool
from app.services.rings.rings import coprime, factor, get_ring, multiply
from app.services.rings.rings_schema import Element
from app.services.topology.topology import closure_members
from tests.helpers import F2, F3, L5, PIDS, S2, S23, Z, ZI, ZX, el, els


def _check_cofactors(a, b, found):
    x, y = found
    ring = get_ring(a.ring)
    assert ring.add(multiply(x, a).value, multiply(y, b).value) == ring.one


# -- coprimality ----------------------------------------------------------

@pytest.mark.parametrize(
    "ring, a, b",
    [(Z, 6, 35), (F3, "x^2+1", "x"), (ZI, "2+i", "2-i"), (L5, 5, 3), (S2, 9, 4), (S23, "5/6", 7), (ZX, 2, "2x+1"), (ZX, "x", "x+1")],
)
def test_bezout_search_finds_cofactors(ring, a, b):
    a, b = el(ring, a), el(ring, b)
    found = bezout_search(a, b)
    assert found is not None
    _check_cofactors(a, b, found)


@pytest.mark.parametrize(
    "ring, a, b",
    [(Z, 6, 10), (ZI, "1+i", 2), (L5, 10, 15), (S23, 10, "15/4"), (ZX, 2, "x"), (ZX, 2, "x+1"), (ZX, "x^2+1", "x+1")],
)
def test_bezout_search_fails_on_proper_ideals(ring, a, b):
    assert bezout_search(el(ring, a), el(ring, b)) is None


def test_integer_oracle_agrees_on_a_grid():
    values = [n for n in range(-30, 31) if n]
    for a, b in itertools.product(values, repeat=2):
        assert oracle_coprime(Element(Z, a), Element(Z, b)) == coprime(Element(Z, a), Element(Z, b))


@pytest.mark.slow
def test_integer_oracle_agrees_on_the_full_grid():
    values = [n for n in range(-100, 101) if n]
    for a, b in itertools.product(values, repeat=2):
        x, y = Element(Z, a), Element(Z, b)
        assert oracle_coprime(x, y, bound=100) == coprime(x, y)


@pytest.mark.parametrize("ring", [F2, F3, ZI])
def test_oracle_agrees_on_small_windows(ring):
    w = list(enumerate_elements(ring, 10))
    for a, b in itertools.product(w, repeat=2):
        assert oracle_coprime(a, b) == coprime(a, b)


def test_zx_oracle_agrees_on_the_linear_box():
    # cofactors of degree <= 1 and height <= 4 settle every pair in this box
    box = [Element(ZX, v) for v in get_ring(ZX).box_values(1, 2)]
    for a, b in itertools.product(box, repeat=2):
        assert oracle_coprime(a, b, bound=4) == coprime(a, b)


zx_polys = st.lists(st.integers(-5, 5), min_size=1, max_size=4).map(lambda c: Element(ZX, get_ring(ZX).normalize(c)))


@hsettings(max_examples=60, deadline=None)
@given(zx_polys.filter(lambda f: f.value), zx_polys.filter(lambda f: f.value))
def test_zx_oracle_is_sound(a, b):
    # a found Bezout pair is a proof; the converse needs an unbounded search
    found = bezout_search(a, b, bound=2)
    if found is not None:
        _check_cofactors(a, b, found)
        assert coprime(a, b)


def test_zx_cofactor_box_is_guarded():
    with pytest.raises(SizeLimit):
        bezout_search(el(ZX, "x^6+2"), el(ZX, "x^5+3"), bound=50)


# -- primality and factorization ------------------------------------------

@pytest.mark.parametrize(
    "ring, x, expected",
    [
        (Z, 7, True),
        (Z, -7, True),
        (Z, 9, False),
        (Z, 1, False),
        (F2, "x^2+x+1", True),
        (F2, "x^2+1", False),
        (ZI, 3, True),
        (ZI, 5, False),
        (ZI, "1+i", True),
        (L5, "5/3", True),
        (L5, 25, False),
        (S2, 6, True),
    ],
)
def test_oracle_is_prime(ring, x, expected):
    assert oracle_is_prime(el(ring, x)) is expected


@pytest.mark.parametrize("ring", [Z, F2, F3, ZI])
def test_oracle_primality_agrees_with_factorization(ring):
    for x in enumerate_elements(ring, 40):
        decomposition = factor(x)
        fast = len(decomposition.factors) == 1 and decomposition.factors[0][1] == 1
        assert oracle_is_prime(x) == fast


@pytest.mark.parametrize("ring", PIDS)
def test_oracle_factor_agrees(ring):
    w = enumerate_elements(ring, 30)
    for x in w:
        expected = {p.representative: e for p, e in factor(x).factors}
        assert oracle_factor(x, w) == expected


def test_oracle_factor_without_window():
    assert oracle_factor(el(Z, -360)) == {el(Z, 2): 3, el(Z, 3): 2, el(Z, 5): 1}


# -- closures -------------------------------------------------------------

def test_closure_upper_bound_matches_on_full_pool():
    w = enumerate_elements(Z, 40)
    pool = WitnessPool.of(Z, w)
    for x in els(Z, 6, -4, 15, 1):
        assert oracle_closure_upper(x, w, pool) == closure_members(x, w)


def test_closure_upper_bound_shrinks_as_pool_grows():
    w = enumerate_elements(Z, 40)
    x = el(Z, 6)
    small = set(oracle_closure_upper(x, w, WitnessPool.of(Z, els(Z, 2))))
    large = set(oracle_closure_upper(x, w, WitnessPool.of(Z, els(Z, 2, 3))))
    assert large <= small
    assert el(Z, 4) in small and el(Z, 4) not in large
    assert set(closure_members(x, w)) <= large


def test_witness_pool_validation():
    with pytest.raises(ValueError):
        WitnessPool.of(Z, [])
    with pytest.raises(RingMismatch):
        WitnessPool.of(Z, els(F3, "x"))


def test_oracle_service_checks():
    service = OracleService()
    assert service.agrees_on_membership(el(Z, 6), el(Z, 35), True)
    assert not service.agrees_on_membership(el(Z, 4), el(Z, 6), True)
    assert service.agrees_on_factorization(el(Z, -12), {el(Z, 2): 2, el(Z, 3): 1})
    assert service.non_primes(els(Z, 2, 9, 7, 15)) == els(Z, 9, 15)
