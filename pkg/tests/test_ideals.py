import itertools

import pytest

from ringline import (
    Ideal,
    IdealError,
    all_ideals,
    build_ring_from_text,
    ideal_intersection,
    ideal_sum,
    is_local,
    jacobson_radical,
    jacobson_radical_quasiregular,
    maximal_ideals,
    principal_ideal,
)


def brute_force_ideals(ring):
    """Independent oracle: test every subset containing zero (n <= 12)."""
    assert ring.n <= 12, "oracle is exponential; keep it for small rings"
    others = [a for a in ring.elements() if a != ring.zero]
    found = []
    for size in range(len(others) + 1):
        for extra in itertools.combinations(others, size):
            members = {ring.zero, *extra}
            closed = all(
                ring.add(a, b) in members for a in members for b in members
            ) and all(
                ring.mul(r, a) in members for r in ring.elements() for a in members
            )
            if closed:
                found.append(tuple(sorted(members)))
    return sorted(found, key=lambda s: (len(s), s))


@pytest.mark.parametrize(
    "spec,expected_count",
    [("GF(2)", 2), ("GF(3)", 2), ("GF(2)*GF(2)", 4), ("GF(2)[x]/(x^2)", 3),
     ("GF(3)*GF(2)", 4), ("GF(2)[x]/(x^3-x)", 6)],
)
def test_all_ideals_against_subset_oracle(spec, expected_count):
    ring = build_ring_from_text(spec)
    oracle = brute_force_ideals(ring)
    assert len(oracle) == expected_count
    assert [ideal.elements for ideal in all_ideals(ring)] == oracle


def test_cubic_principal_ideals(r_cubic):
    x = r_cubic.parse_element("x")
    x1 = r_cubic.parse_element("x+1")
    assert principal_ideal(r_cubic, x).names() == ("0", "x", "x^2", "x^2+x")
    assert principal_ideal(r_cubic, x1).names() == ("0", "x+1", "x^2+1", "x^2+x")
    assert principal_ideal(r_cubic, r_cubic.zero).names() == ("0",)
    assert len(principal_ideal(r_cubic, r_cubic.one)) == r_cubic.n


def test_cubic_lattice_contains_xsquared_plus_one_ideal(r_cubic):
    # <x^2+1> = {0, x^2+1} is principal: (x^2+1)*r is 0 or x^2+1 for every r
    gen = r_cubic.parse_element("x^2+1")
    ideal = principal_ideal(r_cubic, gen)
    assert ideal.names() == ("0", "x^2+1")
    assert ideal in all_ideals(r_cubic)


def test_cubic_maximal_ideals(r_cubic):
    got = {ideal.names() for ideal in maximal_ideals(r_cubic)}
    assert got == {
        ("0", "x", "x^2", "x^2+x"),
        ("0", "x+1", "x^2+1", "x^2+x"),
    }


def test_cubic_radical_and_oracle(r_cubic):
    assert jacobson_radical(r_cubic).names() == ("0", "x^2+x")
    assert jacobson_radical_quasiregular(r_cubic).names() == ("0", "x^2+x")


def test_radical_on_fields_and_products(gf2, gf2xgf2):
    assert jacobson_radical(gf2).elements == (0,)
    assert jacobson_radical(gf2xgf2).elements == (0,)
    assert jacobson_radical_quasiregular(gf2xgf2).elements == (0,)


def test_radical_oracle_agreement_everywhere():
    for spec in ("GF(5)", "GF(2)[x]/(x^2)", "GF(3)[x]/(x^2)", "GF(3)*GF(2)"):
        ring = build_ring_from_text(spec)
        assert jacobson_radical(ring) == jacobson_radical_quasiregular(ring)


def test_is_local(r_cubic, gf2, gf2xgf2):
    assert not is_local(r_cubic)
    assert is_local(gf2)
    assert not is_local(gf2xgf2)
    assert is_local(build_ring_from_text("GF(2)[x]/(x^2)"))


def test_product_ring_maximal_ideals(gf2xgf2):
    sizes = sorted(len(ideal) for ideal in maximal_ideals(gf2xgf2))
    assert sizes == [2, 2]


def test_lattice_closure(r_cubic):
    lattice = all_ideals(r_cubic)
    members = {ideal.elements for ideal in lattice}
    for left in lattice:
        for right in lattice:
            assert ideal_sum(left, right).elements in members
            assert ideal_intersection(left, right).elements in members


def test_ideal_predicate_rejections(r_cubic):
    x = r_cubic.parse_element("x")
    with pytest.raises(IdealError, match="zero"):
        Ideal(r_cubic, [x])
    with pytest.raises(IdealError, match="absorbed|addition"):
        Ideal(r_cubic, [r_cubic.zero, r_cubic.one, x])  # misses x+1 = 1+x
    with pytest.raises(IdealError, match="absorbed"):
        Ideal(r_cubic, [r_cubic.zero, r_cubic.parse_element("x^2")])


def test_every_returned_ideal_passes_predicate(r_cubic):
    for ideal in all_ideals(r_cubic):
        ideal._verify()
    for a in r_cubic.elements():
        principal_ideal(r_cubic, a)._verify()


def test_ideal_json(r_cubic):
    ideal = jacobson_radical(r_cubic)
    assert ideal.to_json() == {
        "ring": "GF(2)[x]/(x^3+x)",
        "elements": ["0", "x^2+x"],
    }
