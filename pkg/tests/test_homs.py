import pytest

from ringline import (
    HomomorphismError,
    IdealError,
    RingHom,
    check_hom,
    compose,
    hom_violation,
    identity_hom,
    jacobson_radical,
    kernel,
    principal_ideal,
    quotient_ring,
    require_hom,
)
from ringline.homs import QuotientRing


def fibers_by_name(quot):
    out = {}
    for a in quot.source.elements():
        image = quot.ring.element_name(quot.projection(a))
        out.setdefault(image, set()).add(quot.source.element_name(a))
    return out


def test_quotient_by_x(r_cubic):
    ideal = principal_ideal(r_cubic, r_cubic.parse_element("x"))
    quot = quotient_ring(r_cubic, ideal, label="<x>")
    assert isinstance(quot, QuotientRing)
    assert quot.ring.n == 2
    assert fibers_by_name(quot) == {
        "0": {"0", "x", "x^2", "x^2+x"},
        "1": {"1", "x+1", "x^2+1", "x^2+x+1"},
    }


def test_quotient_by_x_plus_one(r_cubic):
    ideal = principal_ideal(r_cubic, r_cubic.parse_element("x+1"))
    quot = quotient_ring(r_cubic, ideal)
    assert quot.ring.n == 2
    assert fibers_by_name(quot) == {
        "0": {"0", "x+1", "x^2+1", "x^2+x"},
        "1": {"1", "x", "x^2", "x^2+x+1"},
    }


def test_quotient_by_radical(quot_j):
    assert quot_j.ring.n == 4
    assert quot_j.coset_names == ("0", "1", "x", "x+1")
    assert fibers_by_name(quot_j) == {
        "0": {"0", "x^2+x"},
        "1": {"1", "x^2+x+1"},
        "x": {"x", "x^2"},
        "x+1": {"x+1", "x^2+1"},
    }


def test_quotient_by_radical_mul_table(quot_j):
    ring = quot_j.ring
    expected = (
        ("0", "0", "0", "0"),
        ("0", "1", "x", "x+1"),
        ("0", "x", "x", "0"),
        ("0", "x+1", "0", "x+1"),
    )
    for i in range(4):
        for j in range(4):
            assert ring.element_name(ring.mul(i, j)) == expected[i][j]


def test_quotients_by_maximal_ideals_are_fields(r_cubic):
    from ringline import maximal_ideals

    for ideal in maximal_ideals(r_cubic):
        field = quotient_ring(r_cubic, ideal).ring
        assert all(field.is_unit(a) for a in field.elements() if a != field.zero)


def test_projection_is_hom_with_right_kernel(r_cubic, quot_j):
    radical = jacobson_radical(r_cubic)
    assert check_hom(quot_j.projection)
    assert kernel(quot_j.projection) == radical
    assert quot_j.projection.is_surjective()


def test_kernel_of_identity(r_cubic):
    assert kernel(identity_hom(r_cubic)).elements == (0,)


def test_compose_with_identity(r_cubic, quot_j):
    proj = quot_j.projection
    same = compose(proj, identity_hom(r_cubic))
    assert same.mapping == proj.mapping
    also_same = compose(identity_hom(quot_j.ring), proj)
    assert also_same.mapping == proj.mapping


def test_compose_requires_matching_rings(r_cubic, gf2):
    with pytest.raises(HomomorphismError, match="compose"):
        compose(identity_hom(gf2), identity_hom(r_cubic))


def test_hom_violation_reports_witness(gf2, r_cubic):
    # map everything of GF(2) to one: breaks addition
    bad = RingHom(gf2, gf2, (1, 1))
    violation = hom_violation(bad)
    assert violation is not None and "+" in violation
    assert not check_hom(bad)
    with pytest.raises(HomomorphismError):
        require_hom(bad)
    # swapping two non-zero elements of the cubic ring breaks multiplication
    mapping = list(range(r_cubic.n))
    mapping[2], mapping[3] = mapping[3], mapping[2]
    assert not check_hom(RingHom(r_cubic, r_cubic, mapping))


def test_hom_must_preserve_one(gf2xgf2):
    to_zero = RingHom(gf2xgf2, gf2xgf2, (0, 0, 0, 0))
    assert "1" in hom_violation(to_zero)


def test_hom_map_length_validated(gf2):
    with pytest.raises(HomomorphismError, match="length"):
        RingHom(gf2, gf2, (0,))
    with pytest.raises(HomomorphismError, match="range"):
        RingHom(gf2, gf2, (0, 7))


def test_quotient_rejects_foreign_ideal(r_cubic, gf2):
    ideal = jacobson_radical(gf2)
    with pytest.raises(IdealError, match="belong"):
        quotient_ring(r_cubic, ideal)


def test_hom_json(quot_j):
    doc = quot_j.projection.to_json()
    assert doc["domain"] == "GF(2)[x]/(x^3+x)"
    assert doc["codomain"] == "GF(2)[x]/(x^3+x)/J"
    assert ["x^2", "x"] in doc["map"]
    assert len(doc["map"]) == 8
