import pytest
from hypothesis import given, strategies as st

from app.core.errors import NotHomeomorphicPrecondition, PreconditionHomeomorphic, RingMismatch, UnsupportedForRing
from app.services.enumeration.enumeration import enumerate_elements
from app.services.homeo.homeo import (
    apply_homeo,
    apply_homeo_inverse,
    HomeoService,
    build_homeo,
    classify,
    classify_semiprimitive,
    non_homeo_certificate,
    verify_homeo,
)
from app.services.homeo.homeo_schema import Homeomorphic, MapDirection, NotHomeomorphic, UnitRule
from app.services.rings.literals import parse_ring_spec
from app.services.rings.rings import get_ring
from app.services.rings.rings_schema import Element
from tests.helpers import F2, F3, L5, L7, S2, S3, S23, Z, ZI, ZX, el

F5 = parse_ring_spec("GF(5)[x]")


# -- classification -------------------------------------------------------

@pytest.mark.parametrize(
    "source, target, rule",
    [
        (Z, F3, UnitRule.POSITIONAL),
        (ZI, F5, UnitRule.POSITIONAL),
        (S2, S3, UnitRule.COORDINATES),
        (S2, S23, UnitRule.ENUMERATION),
        (L5, L7, UnitRule.ENUMERATION),
    ],
)
def test_classify_homeomorphic(source, target, rule):
    verdict = classify(source, target)
    assert isinstance(verdict, Homeomorphic)
    assert verdict.map.unit_rule == rule


@pytest.mark.parametrize(
    "source, target, reasons",
    [
        (Z, F2, ["units: 2 != 1"]),
        (ZI, Z, ["units: 4 != 2"]),
        (Z, L5, ["primes: aleph_0 != 1", "units: 2 != aleph_0"]),
        (S2, L5, ["primes: aleph_0 != 1"]),
    ],
)
def test_classify_not_homeomorphic(source, target, reasons):
    verdict = classify(source, target)
    assert isinstance(verdict, NotHomeomorphic)
    assert [str(d) for d in verdict.differences] == reasons
    assert str(verdict.reason) == reasons[0]


def test_classify_needs_pids():
    with pytest.raises(UnsupportedForRing):
        classify(Z, ZX)


@pytest.mark.parametrize("source, target", [(Z, F2), (Z, F3), (ZI, F5), (S2, S23), (F2, S2)])
def test_semiprimitive_classification_agrees(source, target):
    fast = classify_semiprimitive(source, target)
    assert isinstance(fast, Homeomorphic) == isinstance(classify(source, target), Homeomorphic)


def test_semiprimitive_classification_rejects_local_rings():
    with pytest.raises(UnsupportedForRing):
        classify_semiprimitive(Z, L5)


def test_build_homeo_needs_matching_invariants():
    with pytest.raises(NotHomeomorphicPrecondition):
        build_homeo(Z, F2)


# -- the map --------------------------------------------------------------

@pytest.mark.parametrize(
    "source, target, x, image",
    [
        (Z, F3, 2, "x"),
        (Z, F3, -1, "2"),
        (Z, F3, -4, "2x^2"),
        (Z, F3, 6, "x^2+x"),
        (Z, F3, 7, "x^2+1"),
        (S2, S3, "3/2", "2/3"),
        (S2, S3, 12, "18"),
        (S2, S3, -5, "-5"),
        (L5, L7, 25, "49"),
        (L5, L7, "10/3", "14/3"),
        (L5, L7, 1024, "499/965"),
        (L5, L7, 4096, "493/3861"),
    ],
)
def test_apply_homeo(source, target, x, image):
    m = build_homeo(source, target)
    y = apply_homeo(m, el(source, x))
    assert str(y) == image
    assert apply_homeo_inverse(m, y) == el(source, x)


def test_apply_homeo_checks_the_ring():
    m = build_homeo(Z, F3)
    with pytest.raises(RingMismatch):
        apply_homeo(m, el(F3, "x"))
    with pytest.raises(RingMismatch):
        apply_homeo_inverse(m, el(Z, 2))



def test_inverse_map_carries_its_direction():
    m = build_homeo(L5, L7)
    inverse = m.inverse()
    assert m.direction == MapDirection.FORWARD
    assert (inverse.source, inverse.target, inverse.direction) == (L7, L5, MapDirection.INVERSE)
    assert inverse.inverse() == m
    y = el(L7, "98/5")
    assert apply_homeo(inverse, y) == apply_homeo_inverse(m, y)


def test_inverse_of_a_broken_map_undoes_the_override():
    broken = build_homeo(Z, F3).with_prime_override(0, 1)
    assert broken.inverse().prime_overrides == ((1, 0),)
    assert apply_homeo_inverse(broken, apply_homeo(broken, el(Z, 2))) == el(Z, 2)


def test_homeo_service_maps_both_ways():
    service = HomeoService()
    forward = service.map_element(S2, S3, el(S2, "3/2"))
    assert (str(forward.image), forward.direction) == ("2/3", MapDirection.FORWARD)
    backward = service.map_element(S2, S3, el(S3, "2/3"), inverse=True)
    assert (str(backward.image), backward.direction) == ("3/2", MapDirection.INVERSE)
    assert backward.violation_count() == 0
    assert not service.classify(Z, L5).homeomorphic

@given(st.integers(-2000, 2000).filter(bool))
def test_integer_to_polynomial_inverse_law(n):
    m = build_homeo(Z, F3)
    assert apply_homeo_inverse(m, apply_homeo(m, Element(Z, n))) == Element(Z, n)


@given(st.integers(-300, 300).filter(bool), st.sampled_from([1, 2, 4, 8, 16, 32]))
def test_s_integer_inverse_law(num, den):
    m = build_homeo(S2, S3)
    x = Element(S2, get_ring(S2).normalize((num, den)))
    assert apply_homeo_inverse(m, apply_homeo(m, x)) == x


# -- verification ---------------------------------------------------------

@pytest.mark.parametrize("source, target, bound", [(Z, F3, 30), (S2, S3, 12), (L5, L7, 15), (ZI, F5, 20)])
def test_verify_homeo(source, target, bound):
    report = verify_homeo(build_homeo(source, target), enumerate_elements(source, bound))
    assert report.injective
    assert report.support_transport
    assert report.membership_preserved
    assert report.inverse_law
    assert report.violation_count() == 0
    assert report.pairs == report.elements ** 2


@pytest.mark.slow
@pytest.mark.parametrize("source, target, bound", [(Z, F3, 200), (S2, S3, 100), (L5, L7, 60)])
def test_verify_homeo_on_large_windows(source, target, bound):
    report = verify_homeo(build_homeo(source, target), enumerate_elements(source, bound))
    assert report.violation_count() == 0


def test_verify_rejects_a_broken_map():
    broken = build_homeo(Z, F3).with_prime_override(0, 1)
    report = verify_homeo(broken, enumerate_elements(Z, 10))
    assert not report.injective
    assert not report.membership_preserved
    assert not report.inverse_law
    assert report.violation_count() > 0
    assert any(v.startswith("injectivity: H(2) = H(3)") for v in report.violations)


def test_verify_is_independent_of_workers():
    from app.core.config import settings

    m, w = build_homeo(Z, F3), enumerate_elements(Z, 15)
    serial = verify_homeo(m, w)
    settings.WORKERS = 2
    assert verify_homeo(m, w) == serial


def test_verify_needs_a_source_window():
    with pytest.raises(RingMismatch):
        verify_homeo(build_homeo(Z, F3), enumerate_elements(F3, 10))


# -- certificates ---------------------------------------------------------

def test_certificate_on_unit_counts():
    report = non_homeo_certificate(Z, F2, enumerate_elements(Z, 20), enumerate_elements(F2, 20))
    assert report.invariant == "generic_points"
    assert report.source_counts == [2, 2]
    assert report.target_counts == [1, 1]
    assert report.discrepancy
    assert report.violation_count() == 0


def test_certificate_for_gaussian_against_integers():
    report = non_homeo_certificate(ZI, Z, enumerate_elements(ZI, 10), enumerate_elements(Z, 10))
    assert report.source_counts == [4, 4]
    assert report.target_counts == [2, 2]


def test_certificate_on_prime_counts():
    report = non_homeo_certificate(Z, L5, enumerate_elements(Z, 100), enumerate_elements(L5, 20))
    assert report.invariant == "maximal_singleton_closures"
    assert report.reason == "primes: aleph_0 != 1"
    assert report.source_counts[0] == 25
    assert report.source_counts[1] > 25
    assert report.target_counts == [1, 1]
    assert report.discrepancy


def test_certificate_with_explicit_bounds():
    report = non_homeo_certificate(
        Z, F2, enumerate_elements(Z, 5), enumerate_elements(F2, 5), bounds_s=[5, 10, 40], bounds_t=[5, 10, 40]
    )
    assert report.source_counts == [2, 2, 2]
    assert report.target_counts == [1, 1, 1]


def test_certificate_needs_non_homeomorphic_rings():
    with pytest.raises(PreconditionHomeomorphic):
        non_homeo_certificate(Z, F3, enumerate_elements(Z, 5), enumerate_elements(F3, 5))
