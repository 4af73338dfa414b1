"""Self-check suites behind the ``verify`` command.

Two layers: a generic invariant suite that any ring within the bound
must pass (axioms, partition into units and zero-divisors, lattice
closure, radical oracle agreement, orbit freeness, classification
symmetry, induced-map well-definedness), and a reference suite that
rebuilds the bundled showcase ring GF(2)[x]/(x^3+x) with its quotients
and lines and compares every structural fact against known-correct data
frozen below.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property


from . import ideals, report
from .errors import RinglineError
from .homs import check_hom, kernel, quotient_ring
from .projline import (
    PointKind,
    _maximal_reduction_maps,
    count_formulas,
    enumerate_points,
    induced_map,
    is_admissible,
    jacobson_points,
    neighbourhood,
    neighbourhood_profile,
)
from .rings import FiniteRing, build_ring_from_text, verify_ring
from .specparse import PrimeField


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


class CheckFailure(Exception):
    pass


def _run_checks(checks) -> list[CheckResult]:
    results = []
    for name, fn in checks:
        try:
            fn()
        except CheckFailure as exc:
            results.append(CheckResult(name, False, str(exc)))
        except (RinglineError, RuntimeError) as exc:
            results.append(CheckResult(name, False, f"{type(exc).__name__}: {exc}"))
        else:
            results.append(CheckResult(name, True))
    return results


def _require(condition, detail: str) -> None:
    if not condition:
        raise CheckFailure(detail)


# ---------------------------------------------------------------------------
# generic suite


def run_ring_suite(target, max_elements=None) -> list[CheckResult]:
    """Invariant checks for one ring (spec text or a built FiniteRing)."""
    if isinstance(target, FiniteRing):
        ring = target
    else:
        ring = build_ring_from_text(target, max_elements=max_elements)
    label = ring.label
    checks = [
        (f"{label}: ring axioms", lambda: verify_ring(ring)),
        (f"{label}: unit/zero-divisor partition", lambda: _check_partition(ring)),
        (f"{label}: units form a group", lambda: _check_unit_group(ring)),
        (f"{label}: ideal lattice closed and verified", lambda: _check_lattice(ring)),
        (f"{label}: radical agrees with quasi-regularity", lambda: _check_radical(ring)),
        (f"{label}: maximal quotients are fields", lambda: _check_maximal_quotients(ring)),
        (f"{label}: projections verify with defining kernels",
         lambda: _check_projections(ring)),
        (f"{label}: line orbits partition admissible pairs", lambda: _check_orbits(ring)),
        (f"{label}: admissibility scan cross-check", lambda: _check_admissibility(ring)),
        (f"{label}: pair classification well behaved", lambda: _check_pair_class(ring)),
        (f"{label}: induced maps over maximal ideals", lambda: _check_induced(ring)),
    ]
    if isinstance(ring.spec, PrimeField):
        checks.append(
            (f"{label}: field line has p+1 points", lambda: _check_field_line(ring))
        )
    return _run_checks(checks)


def _check_partition(ring) -> None:
    units = set(ring.units())
    zdivs = set(ring.zero_divisors())
    _require(units | zdivs == set(ring.elements()) and not units & zdivs,
             "unit and zero-divisor sets do not partition the ring")
    for a in ring.elements():
        inv = ring.inverse(a)
        if a in units:
            _require(inv is not None and ring.mul(a, inv) == ring.one,
                     f"unit {ring.element_name(a)} has no working inverse")
        else:
            _require(inv is None, f"{ring.element_name(a)} classified both ways")
            annihilator = any(
                ring.mul(a, s) == ring.zero for s in ring.elements() if s != ring.zero
            )
            _require(annihilator,
                     f"non-unit {ring.element_name(a)} annihilates nothing")


def _check_unit_group(ring) -> None:
    units = set(ring.units())
    _require(ring.one in units, "1 is not a unit")
    for a in units:
        _require(ring.inverse(a) in units,
                 f"inverse of {ring.element_name(a)} is not a unit")
        for b in units:
            _require(ring.mul(a, b) in units,
                     f"{ring.element_name(a)}*{ring.element_name(b)} left the units")


def _check_lattice(ring) -> None:
    lattice = ideals.all_ideals(ring)
    members = {ideal.elements for ideal in lattice}
    _require((ring.zero,) in members, "lattice misses the zero ideal")
    _require(tuple(ring.elements()) in members, "lattice misses the whole ring")
    for ideal in lattice:
        ideal._verify()
    for a in ring.elements():
        _require(ideals.principal_ideal(ring, a).elements in members,
                 f"<{ring.element_name(a)}> missing from the lattice")
    for left in lattice:
        for right in lattice:
            _require(ideals.ideal_sum(left, right).elements in members,
                     "lattice not closed under sums")
            _require(ideals.ideal_intersection(left, right).elements in members,
                     "lattice not closed under intersections")


def _check_radical(ring) -> None:
    direct = ideals.jacobson_radical(ring)
    oracle = ideals.jacobson_radical_quasiregular(ring)
    _require(direct == oracle,
             f"radical {direct.names()} != quasi-regular set {oracle.names()}")


def _check_maximal_quotients(ring) -> None:
    for ideal in ideals.maximal_ideals(ring):
        quot = quotient_ring(ring, ideal).ring
        for a in quot.elements():
            if a != quot.zero:
                _require(quot.is_unit(a),
                         f"non-zero non-unit in {quot.label}: {quot.element_name(a)}")


def _check_projections(ring) -> None:
    for ideal in ideals.all_ideals(ring):
        if not ideal.is_proper():
            continue
        quot = quotient_ring(ring, ideal)
        _require(check_hom(quot.projection), f"projection modulo {ideal.names()} fails")
        _require(kernel(quot.projection) == ideal, "kernel != defining ideal")
        _require(quot.projection.is_surjective(), "projection not surjective")


def _check_orbits(ring) -> None:
    line = enumerate_points(ring)
    unit_count = len(ring.units())
    seen = set()
    for point in line.points:
        _require(len(point.orbit) == unit_count,
                 f"orbit of {point.canonical} has size {len(point.orbit)}")
        _require(point.canonical == min(point.orbit),
                 f"canonical member of {point.canonical} is not the minimum")
        _require(not seen & set(point.orbit), "orbits overlap")
        seen.update(point.orbit)
    admissible = {
        (a, b)
        for a in ring.elements()
        for b in ring.elements()
        if line.is_admissible_pair(a, b)
    }
    _require(seen == admissible, "orbits do not cover the admissible pairs")


def _check_admissibility(ring) -> None:
    # enumerate_points already asserts the scan against the maximal-ideal
    # criterion on every pair; re-run the scalar scan on a bounded grid.
    line = enumerate_points(ring)
    sample = range(min(ring.n, 16))
    for a in sample:
        for b in sample:
            _require(
                is_admissible(ring, a, b) == line.is_admissible_pair(a, b),
                f"scalar admissibility scan differs at ({ring.element_name(a)},"
                f"{ring.element_name(b)})",
            )


def _check_pair_class(ring) -> None:
    line = enumerate_points(ring)
    m = len(line)
    for i in range(m):
        _require(not line.distant(i, i), "a point is distant from itself")
        for j in range(i + 1, m):
            _require(line.distant(i, j) == line.distant(j, i),
                     "distant relation is not symmetric")
    unit = ring.unit_mask()
    for p in line.points:
        for q in line.points:
            expected = line.distant(p.index, q.index)
            for a, b in p.orbit:
                for c, d in q.orbit:
                    det = ring.sub(ring.mul(a, d), ring.mul(b, c))
                    _require(bool(unit[det]) == expected,
                             f"classification depends on representatives at "
                             f"{p.canonical} vs {q.canonical}")
    for p in line.points:
        coords_unit = unit[p.canonical[0]] or unit[p.canonical[1]]
        _require((p.kind is PointKind.TYPE_I) == bool(coords_unit),
                 f"kind of {p.canonical} contradicts its coordinates")


def _check_induced(ring) -> None:
    line = enumerate_points(ring)
    for lm in _maximal_reduction_maps(line):
        covered = sorted(i for fiber in lm.fibers for i in fiber)
        _require(covered == list(range(len(line))),
                 "induced-map fibers do not partition the source line")


def _check_field_line(ring) -> None:
    actual = len(enumerate_points(ring))
    _require(actual == ring.spec.p + 1,
             f"expected {ring.spec.p + 1} points, found {actual}")


# ---------------------------------------------------------------------------
# reference suite for the bundled showcase ring

_SHOWCASE_SPEC = "GF(2)[x]/(x^3-x)"

_ELEMENTS = ("0", "1", "x", "x+1", "x^2", "x^2+1", "x^2+x", "x^2+x+1")
_UNITS = ("1", "x^2+x+1")
_ZERO_DIVISORS = ("0", "x", "x+1", "x^2", "x^2+1", "x^2+x")
_DISPLAY = ("0", "1", "x", "x^2", "x+1", "x^2+1", "x^2+x", "x^2+x+1")
_MUL_DISPLAY = (
    ("0", "0", "0", "0", "0", "0", "0", "0"),
    ("0", "1", "x", "x^2", "x+1", "x^2+1", "x^2+x", "x^2+x+1"),
    ("0", "x", "x^2", "x", "x^2+x", "0", "x^2+x", "x^2"),
    ("0", "x^2", "x", "x^2", "x^2+x", "0", "x^2+x", "x"),
    ("0", "x+1", "x^2+x", "x^2+x", "x^2+1", "x^2+1", "0", "x+1"),
    ("0", "x^2+1", "0", "0", "x^2+1", "x^2+1", "0", "x^2+1"),
    ("0", "x^2+x", "x^2+x", "x^2+x", "0", "0", "0", "x^2+x"),
    ("0", "x^2+x+1", "x^2", "x", "x+1", "x^2+1", "x^2+x", "1"),
)
_IDEAL_X = ("0", "x", "x^2", "x^2+x")
_IDEAL_X1 = ("0", "x+1", "x^2+1", "x^2+x")
_RADICAL = ("0", "x^2+x")
_FIBERS_X = {"0": {"0", "x", "x^2", "x^2+x"}, "1": {"1", "x+1", "x^2+1", "x^2+x+1"}}
_FIBERS_X1 = {"0": {"0", "x+1", "x^2+1", "x^2+x"}, "1": {"1", "x", "x^2", "x^2+x+1"}}
_FIBERS_J = {
    "0": {"0", "x^2+x"},
    "1": {"1", "x^2+x+1"},
    "x": {"x", "x^2"},
    "x+1": {"x+1", "x^2+1"},
}
_QUOT_J_MUL = (
    ("0", "0", "0", "0"),
    ("0", "1", "x", "x+1"),
    ("0", "x", "x", "0"),
    ("0", "x+1", "0", "x+1"),
)
_TYPE_I_REPS = (
    ("1", "0"), ("1", "x"), ("1", "x^2"), ("1", "x+1"), ("1", "x^2+1"),
    ("1", "x^2+x"), ("1", "1"), ("1", "x^2+x+1"),
    ("0", "1"), ("x", "1"), ("x^2", "1"), ("x+1", "1"), ("x^2+1", "1"),
    ("x^2+x", "1"),
)
_TYPE_II_REPS = (("x", "x+1"), ("x", "x^2+1"), ("x+1", "x"), ("x^2+1", "x"))
_NEIGHBOURS_U = (
    ("1", "x"), ("1", "x^2"), ("1", "x+1"), ("1", "x^2+1"), ("1", "x^2+x"),
    ("x", "x+1"), ("x", "x^2+1"), ("x+1", "x"), ("x^2+1", "x"),
)
# induced maps on the (1,0) neighbourhood, by subscript (0 and 1..8)
_SUBSCRIPTS_TO_HAT = {(1, 2, 7, 8, 0): ("1", "0"), (5, 6): ("0", "1"), (3, 4): ("1", "1")}
_SUBSCRIPTS_TO_BAR = {(3, 4, 5, 6, 0): ("1", "0"), (7, 8): ("0", "1"), (1, 2): ("1", "1")}
# radical-induced map: source representative pairs -> image representative
_RADICAL_MAP_FIBERS = {
    (("1", "0"), ("1", "x^2+x")): ("1", "0"),
    (("0", "1"), ("x^2+x", "1")): ("0", "1"),
    (("1", "1"), ("1", "x^2+x+1")): ("1", "1"),
    (("1", "x"), ("1", "x^2")): ("1", "x"),
    (("1", "x+1"), ("1", "x^2+1")): ("1", "x+1"),
    (("x", "1"), ("x^2", "1")): ("x", "1"),
    (("x+1", "1"), ("x^2+1", "1")): ("x+1", "1"),
    (("x", "x+1"), ("x", "x^2+1")): ("x", "x+1"),
    (("x+1", "x"), ("x^2+1", "x")): ("x+1", "x"),
}
_QUOT_NEIGHBOURHOODS = {
    ("1", "0"): {("1", "x"), ("1", "x+1"), ("x", "x+1"), ("x+1", "x")},
    ("0", "1"): {("x", "1"), ("x+1", "1"), ("x", "x+1"), ("x+1", "x")},
    ("1", "1"): {("1", "x"), ("1", "x+1"), ("x", "1"), ("x+1", "1")},
}
_PRODUCT_NAMING = {"0": "(0,0)", "1": "(1,1)", "x": "(1,0)", "x+1": "(0,1)"}


class _ReferenceContext:
    """Lazily built rings, quotients and lines shared by the checks."""

    @cached_property
    def ring(self):
        return build_ring_from_text(_SHOWCASE_SPEC)

    @cached_property
    def line(self):
        return enumerate_points(self.ring)

    def _principal_quotient(self, gen_text):
        gen = self.ring.parse_element(gen_text)
        ideal = ideals.principal_ideal(self.ring, gen)
        return quotient_ring(self.ring, ideal, label=f"<{gen_text}>")

    @cached_property
    def quot_x(self):
        return self._principal_quotient("x")

    @cached_property
    def quot_x1(self):
        return self._principal_quotient("x+1")

    @cached_property
    def quot_j(self):
        return quotient_ring(self.ring, ideals.jacobson_radical(self.ring), label="J")

    @cached_property
    def quot_j_line(self):
        return enumerate_points(self.quot_j.ring)

    @cached_property
    def gf2(self):
        return build_ring_from_text("GF(2)")

    @cached_property
    def gf2_line(self):
        return enumerate_points(self.gf2)

    @cached_property
    def product(self):
        return build_ring_from_text("GF(2)*GF(2)")

    def point(self, pair_names):
        a, b = pair_names
        return self.line.point_for(
            (self.ring.parse_element(a), self.ring.parse_element(b))
        )

    def subscripts(self, letter):
        triad = report.default_triad(self.line)
        center = self.line.points[triad["UVW".index(letter)]]
        return report.neighbour_subscripts(self.line, center), center


def _canonical_names(ring, point):
    return tuple(ring.element_name(c) for c in point.canonical)


def run_reference_suite() -> list[CheckResult]:
    ctx = _ReferenceContext()
    checks = [
        ("reference: element inventory and characteristic",
         lambda: _ref_inventory(ctx)),
        ("reference: unit and zero-divisor sets", lambda: _ref_units(ctx)),
        ("reference: multiplication table", lambda: _ref_mul_table(ctx)),
        ("reference: principal ideals <x> and <x+1>", lambda: _ref_ideals(ctx)),
        ("reference: maximal ideals and radical", lambda: _ref_radical(ctx)),
        ("reference: fibers modulo <x>",
         lambda: _ref_fibers(ctx.quot_x, _FIBERS_X)),
        ("reference: fibers modulo <x+1>",
         lambda: _ref_fibers(ctx.quot_x1, _FIBERS_X1)),
        ("reference: radical quotient fibers and table", lambda: _ref_quot_j(ctx)),
        ("reference: maximal quotients are 2-element fields",
         lambda: _ref_maximal_quotients(ctx)),
        ("reference: line has 18 = 14 + 4 points", lambda: _ref_line_points(ctx)),
        ("reference: count formulas give 14 and 4 with 28 covered pairs",
         lambda: _ref_count_formulas(ctx)),
        ("reference: quotient lines have 9 = 7 + 2 and 3 points",
         lambda: _ref_quotient_lines(ctx)),
        ("reference: neighbourhood profile 9/4/0, not transitive",
         lambda: _ref_profile(ctx)),
        ("reference: neighbourhood of (1,0)", lambda: _ref_neighbourhood_u(ctx)),
        ("reference: subscript identities across the triad",
         lambda: _ref_triad_identities(ctx)),
        ("reference: radical-quotient neighbourhoods 4/2/0",
         lambda: _ref_quot_profile(ctx)),
        ("reference: induced map modulo <x>",
         lambda: _ref_induced(ctx, ctx.quot_x, _SUBSCRIPTS_TO_HAT)),
        ("reference: induced map modulo <x+1>",
         lambda: _ref_induced(ctx, ctx.quot_x1, _SUBSCRIPTS_TO_BAR)),
        ("reference: radical-induced map pairs points two-to-one",
         lambda: _ref_radical_map(ctx)),
        ("reference: one jacobson point per point, none on quotients",
         lambda: _ref_jacobson(ctx)),
        ("reference: product of fields matches the radical quotient",
         lambda: _ref_product_form(ctx)),
    ]
    return _run_checks(checks)


def _ref_inventory(ctx) -> None:
    _require(ctx.ring.n == 8, f"expected 8 elements, found {ctx.ring.n}")
    _require(ctx.ring.names == _ELEMENTS, f"element names {ctx.ring.names}")
    _require(ctx.ring.characteristic() == 2,
             f"characteristic {ctx.ring.characteristic()}")


def _ref_units(ctx) -> None:
    units = tuple(ctx.ring.element_name(a) for a in ctx.ring.units())
    zdivs = tuple(ctx.ring.element_name(a) for a in ctx.ring.zero_divisors())
    _require(units == _UNITS, f"units {units}")
    _require(zdivs == _ZERO_DIVISORS, f"zero-divisors {zdivs}")


def _ref_mul_table(ctx) -> None:
    ring = ctx.ring
    order = [ring.parse_element(nm) for nm in _DISPLAY]
    _require(order == report.display_order(ring), "display order override missing")
    for i, row_i in enumerate(order):
        for j, row_j in enumerate(order):
            got = ring.element_name(ring.mul(row_i, row_j))
            _require(got == _MUL_DISPLAY[i][j],
                     f"{_DISPLAY[i]}*{_DISPLAY[j]} = {got}, "
                     f"expected {_MUL_DISPLAY[i][j]}")


def _ref_ideals(ctx) -> None:
    ring = ctx.ring
    got_x = ideals.principal_ideal(ring, ring.parse_element("x")).names()
    got_x1 = ideals.principal_ideal(ring, ring.parse_element("x+1")).names()
    _require(got_x == _IDEAL_X, f"<x> = {got_x}")
    _require(got_x1 == _IDEAL_X1, f"<x+1> = {got_x1}")


def _ref_radical(ctx) -> None:
    ring = ctx.ring
    maximal = {ideal.names() for ideal in ideals.maximal_ideals(ring)}
    _require(maximal == {_IDEAL_X, _IDEAL_X1}, f"maximal ideals {maximal}")
    _require(ideals.jacobson_radical(ring).names() == _RADICAL, "radical differs")
    _require(ideals.jacobson_radical_quasiregular(ring).names() == _RADICAL,
             "quasi-regularity oracle differs")
    _require(not ideals.is_local(ring), "ring reported local")


def _ref_fibers(quot, expected) -> None:
    source, proj = quot.source, quot.projection
    fibers: dict[str, set[str]] = {}
    for a in source.elements():
        fibers.setdefault(
            quot.ring.element_name(proj(a)), set()
        ).add(source.element_name(a))
    _require(fibers == expected, f"fibers {fibers}")


def _ref_quot_j(ctx) -> None:
    _ref_fibers(ctx.quot_j, _FIBERS_J)
    quot = ctx.quot_j.ring
    _require(quot.names == ("0", "1", "x", "x+1"), f"coset names {quot.names}")
    for i in range(4):
        for j in range(4):
            got = quot.element_name(quot.mul(i, j))
            _require(got == _QUOT_J_MUL[i][j],
                     f"{quot.names[i]}*{quot.names[j]} = {got}")


def _ref_maximal_quotients(ctx) -> None:
    for quot in (ctx.quot_x, ctx.quot_x1):
        ring = quot.ring
        _require(ring.n == 2, f"{ring.label} has {ring.n} elements")
        _require(all(ring.is_unit(a) for a in ring.elements() if a != ring.zero),
                 f"{ring.label} is not a field")


def _ref_line_points(ctx) -> None:
    line = ctx.line
    _require(len(line) == 18, f"{len(line)} points")
    type_i = {p.index for p in line.points if p.kind is PointKind.TYPE_I}
    type_ii = {p.index for p in line.points if p.kind is PointKind.TYPE_II}
    _require((len(type_i), len(type_ii)) == (14, 4),
             f"split {len(type_i)}+{len(type_ii)}")
    _require({ctx.point(rep).index for rep in _TYPE_I_REPS} == type_i,
             "unit-coordinate point list differs")
    _require({ctx.point(rep).index for rep in _TYPE_II_REPS} == type_ii,
             "zero-divisor point list differs")
    _require(ctx.point(("x", "x+1")) is ctx.point(("x^2", "x+1")),
             "(x,x+1) and (x^2,x+1) are not the same point")


def _ref_count_formulas(ctx) -> None:
    counts = count_formulas(ctx.ring)
    _require(
        (counts.type_i_formula, counts.type_ii_formula, counts.covered_pairs)
        == (14, 4, 28),
        f"formulas {counts}",
    )
    _require(counts.type_i_actual == 14 and counts.type_ii_actual == 4,
             f"actuals {counts}")


def _ref_quotient_lines(ctx) -> None:
    quot_line = ctx.quot_j_line
    split = (
        sum(1 for p in quot_line.points if p.kind is PointKind.TYPE_I),
        sum(1 for p in quot_line.points if p.kind is PointKind.TYPE_II),
    )
    _require(len(quot_line) == 9 and split == (7, 2),
             f"radical-quotient line: {len(quot_line)} points, split {split}")
    _require(len(ctx.gf2_line) == 3, f"GF(2) line has {len(ctx.gf2_line)} points")


def _ref_profile(ctx) -> None:
    profile = neighbourhood_profile(ctx.line)
    _require(set(profile.sizes) == {9}, f"sizes {set(profile.sizes)}")
    _require(set(profile.distant_pair_overlaps) == {4},
             f"pair overlaps {set(profile.distant_pair_overlaps)}")
    _require(set(profile.distant_triple_overlaps) == {0},
             f"triple overlaps {set(profile.distant_triple_overlaps)}")
    _require(not profile.transitive and profile.nontransitive_witness is not None,
             "neighbour relation unexpectedly transitive")


def _ref_neighbourhood_u(ctx) -> None:
    u = ctx.point(("1", "0"))
    got = {q.index for q in neighbourhood(ctx.line, u)}
    expected = {ctx.point(rep).index for rep in _NEIGHBOURS_U}
    _require(got == expected, "neighbourhood of (1,0) differs")


def _ref_triad_identities(ctx) -> None:
    subs_u, _ = ctx.subscripts("U")
    subs_v, _ = ctx.subscripts("V")
    subs_w, _ = ctx.subscripts("W")
    for subs in (subs_u, subs_v, subs_w):
        _require(sorted(subs) == list(range(9)), f"subscripts {sorted(subs)}")
    for i in (1, 2, 3, 4):
        _require(subs_u[i] is subs_w[i], f"U{i} != W{i}")
    for j in (5, 6, 7, 8):
        _require(subs_u[j] is subs_v[j], f"U{j} != V{j}")
    for k in (1, 2, 3, 4):
        _require(subs_v[k] is subs_w[k + 4], f"V{k} != W{k + 4}")


def _ref_quot_profile(ctx) -> None:
    line = ctx.quot_j_line
    ring = ctx.quot_j.ring
    profile = neighbourhood_profile(line)
    _require(set(profile.sizes) == {4}, f"sizes {set(profile.sizes)}")
    _require(set(profile.distant_pair_overlaps) == {2},
             f"pair overlaps {set(profile.distant_pair_overlaps)}")
    _require(set(profile.distant_triple_overlaps) == {0},
             f"triple overlaps {set(profile.distant_triple_overlaps)}")
    _require(not profile.transitive, "quotient line unexpectedly transitive")
    for center_rep, expected in _QUOT_NEIGHBOURHOODS.items():
        center = line.point_for(tuple(ring.parse_element(t) for t in center_rep))
        got = {_canonical_names(ring, q) for q in neighbourhood(line, center)}
        _require(got == expected, f"neighbourhood of {center_rep} is {got}")


def _ref_induced(ctx, quot, expected_groups) -> None:
    dst = enumerate_points(quot.ring)
    lm = induced_map(quot.projection, ctx.line, dst)
    subs_u, _ = ctx.subscripts("U")
    for group, image_rep in expected_groups.items():
        image = dst.point_for(tuple(quot.ring.parse_element(t) for t in image_rep))
        for sub in group:
            got = lm(subs_u[sub])
            _require(got is image,
                     f"subscript {sub} maps to {_canonical_names(quot.ring, got)}, "
                     f"expected {image_rep}")
    sizes = sorted(len(f) for f in lm.fibers)
    _require(sizes == [6, 6, 6], f"fiber sizes {sizes}")


def _ref_radical_map(ctx) -> None:
    lm = induced_map(ctx.quot_j.projection, ctx.line, ctx.quot_j_line)
    _require(sorted(len(f) for f in lm.fibers) == [2] * 9,
             f"fiber sizes {sorted(len(f) for f in lm.fibers)}")
    quot = ctx.quot_j.ring
    for source_reps, image_rep in _RADICAL_MAP_FIBERS.items():
        image = ctx.quot_j_line.point_for(
            tuple(quot.parse_element(t) for t in image_rep)
        )
        sources = {ctx.point(rep).index for rep in source_reps}
        _require(set(lm.fibers[image.index]) == sources,
                 f"fiber over {image_rep} is not {source_reps}")


def _ref_jacobson(ctx) -> None:
    for p in ctx.line.points:
        got = jacobson_points(ctx.line, p)
        _require(len(got) == 1,
                 f"{_canonical_names(ctx.ring, p)} has {len(got)} jacobson points")
    u = ctx.point(("1", "0"))
    only = jacobson_points(ctx.line, u)[0]
    _require(_canonical_names(ctx.ring, only) == ("1", "x^2+x"),
             f"jacobson point of (1,0) is {_canonical_names(ctx.ring, only)}")
    for line in (ctx.quot_j_line, ctx.gf2_line):
        for p in line.points:
            _require(not jacobson_points(line, p),
                     f"unexpected jacobson point on {line.ring.label}")


def _ref_product_form(ctx) -> None:
    quot = ctx.quot_j.ring
    prod = ctx.product
    to_prod = {
        quot.parse_element(q_name): prod.parse_element(p_name)
        for q_name, p_name in _PRODUCT_NAMING.items()
    }
    for a in quot.elements():
        for b in quot.elements():
            _require(
                to_prod[quot.mul(a, b)] == prod.mul(to_prod[a], to_prod[b]),
                f"product tables differ at ({quot.element_name(a)},"
                f"{quot.element_name(b)})",
            )
    _require(len(prod.units()) == 1, "product ring should have exactly one unit")
    stats = (quot.n, len(quot.units()), quot.characteristic(),
             len(ideals.all_ideals(quot)))
    prod_stats = (prod.n, len(prod.units()), prod.characteristic(),
                  len(ideals.all_ideals(prod)))
    _require(stats == prod_stats, f"invariant statistics differ: {stats} vs {prod_stats}")


_DEFAULT_RINGS = (_SHOWCASE_SPEC, "GF(2)*GF(2)", "GF(2)")


def run_default_suite() -> list[CheckResult]:
    """Reference checks plus the generic suite on the bundled rings."""
    results = run_reference_suite()
    for spec_text in _DEFAULT_RINGS:
        results.extend(run_ring_suite(spec_text))
    return results
