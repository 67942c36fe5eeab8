from math import gcd

import pytest
from hypothesis import assume, given, settings as hsettings, strategies as st

from app.core.errors import InvariantViolation, LiteralParseError, RingMismatch, SizeLimit, UnsupportedForRing, ZeroElement
from app.services.enumeration.enumeration import enumerate_elements
from app.services.rings.literals import format_element, parse_element, parse_ring_spec
from app.services.rings.rings import (
    canonical_associate,
    coprime,
    factor,
    gcd_bezout,
    get_ring,
    is_unit,
    list_units,
    multiply,
    primes_cardinality,
    recompose,
    units_cardinality,
)
from app.services.rings.rings_schema import Cardinal, Element, RingKind
from tests.helpers import F2, F3, L5, S2, S3, S23, Z, ZI, ZX, el

nonzero_ints = st.integers(-10**6, 10**6).filter(bool)
small_ints = st.integers(-60, 60).filter(bool)


def _poly(ring):
    return st.lists(st.integers(0, ring.p - 1), min_size=1, max_size=7).map(lambda c: Element(ring, get_ring(ring).normalize(c)))


def _gauss():
    return st.tuples(st.integers(-40, 40), st.integers(-40, 40)).filter(any).map(lambda v: Element(ZI, v))


def _local(ring):
    dens = st.integers(1, 60).filter(lambda d: d % ring.p)
    return st.tuples(small_ints, dens).map(lambda v: Element(ring, get_ring(ring).normalize(v)))


def _s_integers(ring):
    dens = st.sampled_from([1, 2, 3, 4, 6, 8, 9, 12, 16, 18, 27])
    return st.tuples(small_ints, dens).map(lambda v: Element(ring, get_ring(ring).normalize(v)))


def _units(ring):
    finite = get_ring(ring).finite_units()
    if finite is not None:
        return st.sampled_from([Element(ring, u) for u in finite])
    if ring.kind == RingKind.P_LOCAL:
        prime_to_p = st.integers(-60, 60).filter(lambda n: n % ring.p)
        return st.tuples(prime_to_p, prime_to_p.map(abs)).map(lambda v: Element(ring, get_ring(ring).normalize(v)))
    exponents = st.tuples(*(st.integers(-6, 6) for _ in ring.primes))
    return st.tuples(st.sampled_from([1, -1]), exponents).map(
        lambda v: Element(ring, get_ring(ring).unit_from_coordinates(*v))
    )


any_pid_element = st.one_of(
    nonzero_ints.map(lambda n: Element(Z, n)),
    _poly(F2).filter(lambda x: x.value),
    _poly(F3).filter(lambda x: x.value),
    _gauss(),
    _local(L5),
    _s_integers(S23),
)


# -- ring specs and literals ----------------------------------------------

@pytest.mark.parametrize(
    "spec, kind, text",
    [
        ("Z", RingKind.INT, "Z"),
        ("GF(3)[x]", RingKind.POLY_FP, "GF(3)[x]"),
        ("F(2)[x]", RingKind.POLY_FP, "GF(2)[x]"),
        ("Z[i]", RingKind.GAUSSIAN, "Z[i]"),
        ("Z_(5)", RingKind.P_LOCAL, "Z_(5)"),
        ("Z[1/3,2]", RingKind.S_INVERTED, "Z[1/2,3]"),
        ("Z[x]", RingKind.INT_POLY, "Z[x]"),
    ],
)
def test_parse_ring_spec(spec, kind, text):
    ring_id = parse_ring_spec(spec)
    assert ring_id.kind == kind
    assert str(ring_id) == text


@pytest.mark.parametrize("spec", ["Q", "GF(4)[x]", "Z_(6)", "Z[1/2,2]", ""])
def test_parse_ring_spec_rejects(spec):
    with pytest.raises(LiteralParseError):
        parse_ring_spec(spec)


@pytest.mark.parametrize(
    "ring, text, printed",
    [
        (Z, "-12", "-12"),
        (F2, "x^2+3x+1", "x^2+x+1"),
        (F3, "2x^2 + 1", "2x^2+1"),
        (ZI, "1-2i", "1-2i"),
        (ZI, "-i", "-i"),
        (ZI, "3i", "3i"),
        (L5, "6/4", "3/2"),
        (S3, "50/3", "50/3"),
        (ZX, "-x^3+2x-5", "-x^3+2x-5"),
    ],
)
def test_literals_print_canonically(ring, text, printed):
    x = el(ring, text)
    assert str(x) == printed
    assert parse_element(ring, format_element(x)) == x


@pytest.mark.parametrize("ring, text", [(L5, "1/5"), (S2, "1/3"), (Z, "abc"), (ZI, "1+2j"), (L5, "1/0")])
def test_parse_element_rejects(ring, text):
    with pytest.raises(LiteralParseError):
        el(ring, text)


# -- arithmetic laws ------------------------------------------------------

@given(nonzero_ints, nonzero_ints)
def test_integer_bezout(a, b):
    g, x, y = gcd_bezout(Element(Z, a), Element(Z, b))
    assert g.value == gcd(a, b)
    assert x.value * a + y.value * b == g.value


@given(_gauss(), _gauss())
def test_gaussian_bezout(a, b):
    ring = get_ring(ZI)
    g, x, y = gcd_bezout(a, b)
    assert ring.add(ring.mul(x.value, a.value), ring.mul(y.value, b.value)) == g.value
    assert ring.exact_div(a.value, g.value) is not None
    assert ring.exact_div(b.value, g.value) is not None


@given(_poly(F3).filter(lambda x: x.value), _poly(F3).filter(lambda x: x.value))
def test_polynomial_bezout(a, b):
    ring = get_ring(F3)
    g, x, y = gcd_bezout(a, b)
    assert ring.add(ring.mul(x.value, a.value), ring.mul(y.value, b.value)) == g.value
    assert g.value[-1] == 1


@hsettings(max_examples=150, deadline=None)
@given(any_pid_element)
def test_factorization_recomposes(x):
    decomposition = factor(x)
    assert recompose(decomposition) == x
    assert is_unit(decomposition.unit)
    indices = [p.index for p, _ in decomposition.factors]
    assert indices == sorted(indices)


@given(any_pid_element, st.data())
def test_canonical_associate_is_constant_on_associates(x, data):
    u = data.draw(_units(x.ring))
    assert canonical_associate(multiply(u, x))[1] == canonical_associate(x)[1]


@given(any_pid_element)
def test_canonical_associate_is_idempotent(x):
    unit, rep = canonical_associate(x)
    assert is_unit(unit)
    assert multiply(unit, rep) == x
    assert canonical_associate(rep) == (Element(x.ring, get_ring(x.ring).one), rep)


# -- worked examples ------------------------------------------------------

def test_factor_negative_integer():
    decomposition = factor(el(Z, -12))
    assert decomposition.unit == el(Z, -1)
    assert [(str(p.representative), p.index, e) for p, e in decomposition.factors] == [("2", 0, 2), ("3", 1, 1)]


def test_factor_in_s_integers_drops_inverted_primes():
    decomposition = factor(el(S3, "50/3"))
    assert decomposition.unit == el(S3, "1/3")
    assert [(str(p.representative), e) for p, e in decomposition.factors] == [("2", 1), ("5", 2)]


def test_factor_in_local_ring():
    decomposition = factor(el(L5, "50/3"))
    assert decomposition.unit == el(L5, "2/3")
    assert [(str(p.representative), e) for p, e in decomposition.factors] == [("5", 2)]


def test_gaussian_five_splits():
    decomposition = factor(el(ZI, 5))
    assert decomposition.unit == el(ZI, "-i")
    assert {str(p.representative): e for p, e in decomposition.factors} == {"2+i": 1, "1+2i": 1}


def test_local_ring_units():
    assert is_unit(el(L5, "3/2"))
    assert not is_unit(el(L5, "10/3"))


@pytest.mark.parametrize(
    "ring, a, b, expected",
    [
        (Z, 6, 35, True),
        (Z, 4, 6, False),
        (F2, "x", "x+1", True),
        (ZI, "1+i", 2, False),
        (ZI, "2+i", "2-i", True),
        (L5, 5, "10/3", False),
        (L5, 2, 5, True),
        (S2, 4, 3, True),
        (S2, 6, 9, False),
        (ZX, 2, "x", False),
        (ZX, 2, "x+1", False),
        (ZX, 2, "2x+1", True),
        (ZX, "x", "x+1", True),
        (ZX, "x^2+1", "x+1", False),
    ],
)
def test_coprime(ring, a, b, expected):
    assert coprime(el(ring, a), el(ring, b)) is expected


def test_integer_polynomials_have_no_gcd_or_factorization():
    with pytest.raises(UnsupportedForRing):
        gcd_bezout(el(ZX, 2), el(ZX, "x"))
    with pytest.raises(UnsupportedForRing):
        factor(el(ZX, "x^2-1"))


def test_integer_polynomial_prime_certificates():
    ring = get_ring(ZX)
    assert ring.certify_prime(el(ZX, 2).value)
    assert ring.certify_prime(el(ZX, "x").value)
    assert ring.certify_prime(el(ZX, "2x+2").value) is None


# -- guards ---------------------------------------------------------------

def test_zero_is_not_a_point():
    with pytest.raises(ZeroElement):
        is_unit(el(Z, 0))


def test_size_guard():
    with pytest.raises(SizeLimit):
        is_unit(Element(Z, 2 ** 300))


def test_operands_must_share_a_ring():
    with pytest.raises(RingMismatch):
        coprime(el(Z, 2), el(ZI, 2))


# -- cardinalities --------------------------------------------------------

@pytest.mark.parametrize(
    "ring, units, primes",
    [
        (Z, Cardinal.finite(2), Cardinal.countably_infinite()),
        (F2, Cardinal.finite(1), Cardinal.countably_infinite()),
        (F3, Cardinal.finite(2), Cardinal.countably_infinite()),
        (ZI, Cardinal.finite(4), Cardinal.countably_infinite()),
        (L5, Cardinal.countably_infinite(), Cardinal.finite(1)),
        (S2, Cardinal.countably_infinite(), Cardinal.countably_infinite()),
    ],
)
def test_cardinalities(ring, units, primes):
    assert units_cardinality(ring) == units
    assert primes_cardinality(ring) == primes


def test_unit_lists():
    assert [str(u) for u in list_units(Z)] == ["1", "-1"]
    assert [str(u) for u in list_units(ZI)] == ["1", "-1", "i", "-i"]
    with pytest.raises(UnsupportedForRing):
        list_units(S2)


@given(_s_integers(S23))
def test_s_unit_coordinates_round_trip(x):
    assume(is_unit(x))
    ring = get_ring(S23)
    sign, exponents = ring.unit_coordinates(x.value)
    assert ring.unit_from_coordinates(sign, exponents) == x.value


@pytest.mark.parametrize("ring", [Z, F2, F3, ZI, L5, S2, S23])
def test_coprime_iff_canonical_gcd_is_one(ring):
    w = enumerate_elements(ring, 12 if ring == Z else 8)
    one = Element(ring, get_ring(ring).one)
    for k in w:
        for s in w:
            assert coprime(k, s) is (gcd_bezout(k, s)[0] == one)


# -- prime and unit indexing ----------------------------------------------

@pytest.mark.parametrize("ring, count", [(Z, 40), (F2, 40), (F3, 30), (S2, 30), (S23, 30)])
def test_arithmetic_prime_index_matches_the_catalog(ring, count):
    r = get_ring(ring)
    reps = r.primes.first(count)
    assert [r.prime_index(rep) for rep in reps] == list(range(count))
    assert [r.nth_prime(n) for n in range(count)] == list(reps)


def test_factor_large_integer_prime():
    decomposition = factor(el(Z, 10000019))
    [(prime, exponent)] = decomposition.factors
    assert exponent == 1
    assert prime.index == 664579


def test_factor_sixteenth_degree_polynomial():
    x = el(F2, "x^16+x^5+x^3+x^2+1")
    decomposition = factor(x)
    assert recompose(decomposition) == x
    keys = [p.order_key for p, _ in decomposition.factors]
    assert keys == sorted(keys)
    assert [p.index for p, _ in decomposition.factors] == sorted(p.index for p, _ in decomposition.factors)


def test_factor_leaves_prime_index_unset_until_asked():
    decomposition = factor(el(Z, 2 ** 61 - 1))
    [(prime, _)] = decomposition.factors
    assert "index" not in prime.__dict__


@pytest.mark.parametrize("ring, bound", [(L5, 14), (S2, 16), (S23, 18)])
def test_unit_index_matches_height_order(ring, bound):
    r = get_ring(ring)
    units = sorted((v for v in r.window_values(bound) if r.is_unit(v)), key=r.order_key)
    assert [r.nth_unit(n) for n in range(len(units))] == units
    assert [r.unit_index(u) for u in units] == list(range(len(units)))


@pytest.mark.parametrize("h", range(1, 40))
def test_local_unit_count_per_height(h):
    r = get_ring(L5)
    assert r.unit_count(h) == len(r.units_of_height(h))


def test_unit_index_rejects_non_units():
    with pytest.raises(InvariantViolation):
        get_ring(L5).unit_index(el(L5, 10).value)
