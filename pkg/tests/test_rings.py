import numpy as np
import pytest

from ringline import (
    BoundExceededError,
    ElementClass,
    ElementError,
    FiniteRing,
    RingAxiomError,
    all_ideals,
    build_ring_from_text,
    verify_ring,
)
from ringline.rings import MAX_ELEMENTS_ENV

# The full 8x8 multiplication table of GF(2)[x]/(x^3-x) in the order
# 0, 1, x, x^2, x+1, x^2+1, x^2+x, x^2+x+1 (hand-checked: x^3 = x, char 2).
CUBIC_ORDER = ("0", "1", "x", "x^2", "x+1", "x^2+1", "x^2+x", "x^2+x+1")
CUBIC_MUL = (
    ("0", "0", "0", "0", "0", "0", "0", "0"),
    ("0", "1", "x", "x^2", "x+1", "x^2+1", "x^2+x", "x^2+x+1"),
    ("0", "x", "x^2", "x", "x^2+x", "0", "x^2+x", "x^2"),
    ("0", "x^2", "x", "x^2", "x^2+x", "0", "x^2+x", "x"),
    ("0", "x+1", "x^2+x", "x^2+x", "x^2+1", "x^2+1", "0", "x+1"),
    ("0", "x^2+1", "0", "0", "x^2+1", "x^2+1", "0", "x^2+1"),
    ("0", "x^2+x", "x^2+x", "x^2+x", "0", "0", "0", "x^2+x"),
    ("0", "x^2+x+1", "x^2", "x", "x+1", "x^2+1", "x^2+x", "1"),
)


def test_cubic_ring_elements(r_cubic):
    assert r_cubic.n == 8
    assert r_cubic.names == (
        "0", "1", "x", "x+1", "x^2", "x^2+1", "x^2+x", "x^2+x+1"
    )
    assert r_cubic.zero == 0
    assert r_cubic.element_name(r_cubic.one) == "1"


def test_cubic_mul_table_matches_reference(r_cubic):
    ids = [r_cubic.parse_element(nm) for nm in CUBIC_ORDER]
    for i, a in enumerate(ids):
        for j, b in enumerate(ids):
            assert r_cubic.element_name(r_cubic.mul(a, b)) == CUBIC_MUL[i][j], (
                f"{CUBIC_ORDER[i]} * {CUBIC_ORDER[j]}"
            )


def test_cubic_sample_products(r_cubic):
    x = r_cubic.parse_element("x")
    x1 = r_cubic.parse_element("x+1")
    x2 = r_cubic.parse_element("x^2")
    x21 = r_cubic.parse_element("x^2+1")
    assert r_cubic.mul(x2, x) == x  # x^3 = x
    assert r_cubic.element_name(r_cubic.mul(x, x1)) == "x^2+x"
    assert r_cubic.mul(x21, x) == r_cubic.zero


def test_characteristic(r_cubic, gf2xgf2):
    assert r_cubic.characteristic() == 2
    assert build_ring_from_text("GF(3)").characteristic() == 3
    assert gf2xgf2.characteristic() == 2


def test_classification_and_inverses(r_cubic):
    units = {r_cubic.element_name(a) for a in r_cubic.units()}
    zdivs = {r_cubic.element_name(a) for a in r_cubic.zero_divisors()}
    assert units == {"1", "x^2+x+1"}
    assert zdivs == {"0", "x", "x+1", "x^2", "x^2+1", "x^2+x"}
    big_unit = r_cubic.parse_element("x^2+x+1")
    assert r_cubic.classify(big_unit) is ElementClass.UNIT
    assert r_cubic.inverse(big_unit) == big_unit  # self-inverse
    assert r_cubic.inverse(r_cubic.zero) is None
    assert r_cubic.classify(r_cubic.zero) is ElementClass.ZERO_DIVISOR


def test_partition_into_units_and_zero_divisors(r_cubic):
    units = set(r_cubic.units())
    zdivs = set(r_cubic.zero_divisors())
    assert units | zdivs == set(r_cubic.elements())
    assert not units & zdivs
    # unit iff some product hits one, by direct table scan
    for a in r_cubic.elements():
        hit = any(r_cubic.mul(a, b) == r_cubic.one for b in r_cubic.elements())
        assert hit == (a in units)


def test_units_form_a_group(r_cubic):
    units = set(r_cubic.units())
    for a in units:
        assert r_cubic.inverse(a) in units
        for b in units:
            assert r_cubic.mul(a, b) in units


def test_product_ring_unit_count_by_scan(gf2xgf2):
    # brute-force oracle over the 4-element table
    units = [
        a
        for a in gf2xgf2.elements()
        if any(gf2xgf2.mul(a, b) == gf2xgf2.one for b in gf2xgf2.elements())
    ]
    assert len(units) == 1
    assert gf2xgf2.element_name(units[0]) == "(1,1)"
    assert gf2xgf2.units() == tuple(units)


def test_prime_field_unit_count():
    for p in (2, 3, 5):
        ring = build_ring_from_text(f"GF({p})")
        assert len(ring.units()) == p - 1


def test_product_matches_quadratic_quotient_statistics(gf2xgf2):
    # GF(2)[x]/(x^2-x) and GF(2)*GF(2) carry identical invariant statistics
    quad = build_ring_from_text("GF(2)[x]/(x^2-x)")
    for ring in (quad, gf2xgf2):
        assert ring.n == 4
        assert ring.characteristic() == 2
        assert len(ring.units()) == 1
        assert len(all_ideals(ring)) == 4


def test_product_mul_table_matches_reference(gf2xgf2):
    # naming map between the 4-element quotient-table layout and pairs
    naming = {"0": "(0,0)", "1": "(1,1)", "x": "(1,0)", "x+1": "(0,1)"}
    table = (
        ("0", "0", "0", "0"),
        ("0", "1", "x", "x+1"),
        ("0", "x", "x", "0"),
        ("0", "x+1", "0", "x+1"),
    )
    order = ("0", "1", "x", "x+1")
    ids = {nm: gf2xgf2.parse_element(naming[nm]) for nm in order}
    for i, a in enumerate(order):
        for j, b in enumerate(order):
            got = gf2xgf2.mul(ids[a], ids[b])
            assert got == ids[table[i][j]], f"{a} * {b}"


def test_element_names_round_trip(r_cubic, gf2xgf2):
    for ring in (r_cubic, gf2xgf2, build_ring_from_text("GF(3)*GF(2)")):
        for a in ring.elements():
            assert ring.parse_element(ring.element_name(a)) == a


def test_parse_element_reduces_representatives(r_cubic):
    assert r_cubic.element_name(r_cubic.parse_element("x^3")) == "x"
    assert r_cubic.element_name(r_cubic.parse_element("x^3-x")) == "0"
    assert r_cubic.parse_element(" x^2 + x + 1 ") == r_cubic.parse_element("x^2+x+1")
    assert build_ring_from_text("GF(3)").parse_element("5") == 2


def test_parse_element_product_naming(gf2xgf2):
    x_like = gf2xgf2.parse_element("(1,0)")
    assert gf2xgf2.element_name(x_like) == "(1,0)"
    nested = build_ring_from_text("GF(2)*GF(2)*GF(2)")
    assert nested.element_name(nested.parse_element("((1,0),1)")) == "((1,0),1)"


def test_parse_element_rejects_garbage(r_cubic, gf2, gf2xgf2):
    with pytest.raises(ElementError):
        r_cubic.parse_element("(1,0)")
    with pytest.raises(ElementError):
        gf2.parse_element("x")
    with pytest.raises(ElementError):
        gf2xgf2.parse_element("x^2")
    with pytest.raises(ElementError):
        r_cubic.parse_element("y+1")


def test_add_neg_inverse_property(r_cubic):
    for a in r_cubic.elements():
        assert r_cubic.add(a, r_cubic.neg(a)) == r_cubic.zero


def test_out_of_range_ids_rejected(r_cubic):
    with pytest.raises(ElementError):
        r_cubic.add(0, 8)
    with pytest.raises(ElementError):
        r_cubic.mul(-1, 0)


def test_bound_enforced(monkeypatch):
    with pytest.raises(BoundExceededError):
        build_ring_from_text("GF(2)[x]/(x^13)")  # 8192 > 4096
    with pytest.raises(BoundExceededError):
        build_ring_from_text("GF(3)", max_elements=2)
    monkeypatch.setenv(MAX_ELEMENTS_ENV, "4")
    with pytest.raises(BoundExceededError):
        build_ring_from_text("GF(5)")
    assert build_ring_from_text("GF(3)").n == 3


def test_verify_ring_catches_corruption(gf2):
    mul = np.array(gf2.mul_table)
    mul[1, 1] = 0  # break 1*1 = 1
    broken = FiniteRing(
        add_table=np.array(gf2.add_table),
        mul_table=mul,
        neg_table=np.array(gf2.neg_table),
        one=gf2.one,
        names=gf2.names,
        spec=gf2.spec,
        label="broken GF(2)",
        check=False,
    )
    with pytest.raises(RingAxiomError):
        verify_ring(broken)


def test_verify_ring_reports_witness(gf2xgf2):
    add = np.array(gf2xgf2.add_table)
    add[2, 3] = 2  # breaks commutativity/associativity somewhere
    broken = FiniteRing(
        add_table=add,
        mul_table=np.array(gf2xgf2.mul_table),
        neg_table=np.array(gf2xgf2.neg_table),
        one=gf2xgf2.one,
        names=gf2xgf2.names,
        check=False,
    )
    with pytest.raises(RingAxiomError, match=r"not (commutative|associative)"):
        verify_ring(broken)
