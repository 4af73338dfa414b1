"""The projective line over a finite ring.

A coordinate pair (a, b) is admissible when it completes to an
invertible 2x2 matrix, i.e. some (c, d) makes the determinant a*d - b*c
a unit; this is decided by the exhaustive completion scan (the compiled
kernel's quartic hot loop) and cross-checked against an independent
criterion from the ideal lattice: a pair is admissible exactly when no
single maximal ideal contains both coordinates.

Points are the orbits of admissible pairs under coordinatewise unit
scaling, keyed by their lexicographically minimal member. Two points are
distant when the cross determinant of their representatives is a unit
and neighbours otherwise; the relation is reflexive and symmetric but
not transitive in general. Stored neighbourhoods exclude the point
itself, matching how neighbourhood sizes are counted.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import ideals, kernels
from .errors import ElementError, InducedMapError
from .homs import RingHom, hom_violation, quotient_ring, require_hom
from .rings import FiniteRing


class PointKind(enum.Enum):
    TYPE_I = "I"  # at least one coordinate is a unit
    TYPE_II = "II"  # both coordinates are zero-divisors


class PairClass(enum.Enum):
    NEIGHBOUR = "neighbour"  # cross determinant is a zero-divisor
    DISTANT = "distant"  # cross determinant is a unit


@dataclass(frozen=True)
class ProjPoint:
    """One projective point: a unit-scaling orbit of admissible pairs."""

    index: int
    canonical: tuple[int, int]  # lexicographically minimal orbit member
    orbit: tuple[tuple[int, int], ...]
    kind: PointKind


class ProjLine:
    """All projective points over a ring, with the distant-pair matrix."""

    def __init__(self, ring: FiniteRing, points, point_of, distant):
        self.ring = ring
        self.points = tuple(points)
        self._point_of = point_of
        self._distant = distant
        point_of.setflags(write=False)
        distant.setflags(write=False)

    def __len__(self) -> int:
        return len(self.points)

    def __repr__(self):
        return f"<ProjLine over {self.ring.label}: {len(self.points)} points>"

    def point_index(self, pair) -> int:
        """Point index owning an admissible pair, or -1."""
        a, b = pair
        a = self.ring._check_id(a)
        b = self.ring._check_id(b)
        return int(self._point_of[a * self.ring.n + b])

    def point_for(self, pair) -> ProjPoint:
        idx = self.point_index(pair)
        if idx < 0:
            a, b = pair
            raise ElementError(
                f"({self.ring.element_name(a)},{self.ring.element_name(b)}) "
                f"is not an admissible pair over {self.ring.label}"
            )
        return self.points[idx]

    def is_admissible_pair(self, a: int, b: int) -> bool:
        return self.point_index((a, b)) >= 0

    def distant(self, i: int, j: int) -> bool:
        return bool(self._distant[i, j])

    def neighbour_indices(self, i: int) -> tuple[int, ...]:
        row = self._distant[i]
        return tuple(
            int(j) for j in np.flatnonzero(row == 0) if j != i
        )


def is_admissible(ring: FiniteRing, a: int, b: int) -> bool:
    """Exhaustive completion scan: does some (c, d) give a unit determinant?"""
    a = ring._check_id(a)
    b = ring._check_id(b)
    add = ring.add_table.tolist()
    neg = ring.neg_table.tolist()
    unit = ring.unit_mask().tolist()
    row_a = ring.mul_table[a].tolist()
    row_b = ring.mul_table[b].tolist()
    return any(unit[add[ad][neg[bc]]] for ad in set(row_a) for bc in set(row_b))


def _cover_bitsets(ring: FiniteRing) -> np.ndarray:
    """Per-element bitset of which maximal ideals contain the element."""
    cover = np.zeros(ring.n, dtype=np.int64)
    for bit, ideal in enumerate(ideals.maximal_ideals(ring)):
        cover[list(ideal)] |= np.int64(1 << bit)
    return cover


@lru_cache(maxsize=None)
def enumerate_points(ring: FiniteRing) -> ProjLine:
    """Enumerate the projective line: admissible pairs modulo unit scaling.

    The kernel scan is asserted against the maximal-ideal cover criterion
    and the unit action is asserted free, so the point count always
    satisfies points * units = admissible pairs.
    """
    unit_mask = np.ascontiguousarray(ring.unit_mask().view(np.uint8))
    mask = kernels.admissible_mask(
        ring.add_table, ring.mul_table, ring.neg_table, unit_mask
    )

    cover = _cover_bitsets(ring)
    expected = (cover[:, None] & cover[None, :]) == 0
    if not np.array_equal(mask.astype(bool), expected):
        a, b = map(int, np.argwhere(mask.astype(bool) != expected)[0])
        raise RuntimeError(
            "admissibility scan disagrees with the maximal-ideal criterion at "
            f"({ring.element_name(a)},{ring.element_name(b)}) over {ring.label}"
        )

    units = np.array(ring.units(), dtype=np.int32)
    point_of, canon = kernels.unit_orbits(mask, ring.mul_table, units)
    m = canon.shape[0]
    counts = np.bincount(point_of[point_of >= 0], minlength=m)
    if m and not (counts == len(units)).all():
        raise RuntimeError(f"unit action is not free on {ring.label}")
    if int(mask.sum()) != m * len(units):
        raise RuntimeError(f"orbits do not partition the admissible pairs of {ring.label}")

    orbits: list[list[tuple[int, int]]] = [[] for _ in range(m)]
    n = ring.n
    for flat in np.flatnonzero(point_of >= 0):
        orbits[point_of[flat]].append((int(flat) // n, int(flat) % n))
    points = []
    for i in range(m):
        a, b = int(canon[i, 0]), int(canon[i, 1])
        kind = (
            PointKind.TYPE_I
            if ring.is_unit(a) or ring.is_unit(b)
            else PointKind.TYPE_II
        )
        points.append(
            ProjPoint(index=i, canonical=(a, b), orbit=tuple(orbits[i]), kind=kind)
        )

    distant = kernels.distant_matrix(
        canon, ring.add_table, ring.mul_table, ring.neg_table, unit_mask
    )
    return ProjLine(ring, points, point_of, distant)


def _as_point(line: ProjLine, point) -> ProjPoint:
    if isinstance(point, ProjPoint):
        return point
    if isinstance(point, int):
        return line.points[point]
    return line.point_for(point)


def pair_class(line: ProjLine, p, q) -> PairClass:
    """Neighbour/distant classification of two points (p = q allowed).

    The class does not depend on the choice of representatives: scaling
    both rows by units scales the determinant by a unit.
    """
    p = _as_point(line, p)
    q = _as_point(line, q)
    return PairClass.DISTANT if line.distant(p.index, q.index) else PairClass.NEIGHBOUR


def neighbourhood(line: ProjLine, p) -> tuple[ProjPoint, ...]:
    """All points neighbour to p, excluding p itself."""
    p = _as_point(line, p)
    return tuple(line.points[j] for j in line.neighbour_indices(p.index))


@dataclass(frozen=True)
class NeighbourGraph:
    """Symmetric neighbour-pair graph over point indices, no self loops."""

    line: ProjLine
    edges: tuple[tuple[int, int], ...]

    def degrees(self) -> tuple[int, ...]:
        out = [0] * len(self.line)
        for i, j in self.edges:
            out[i] += 1
            out[j] += 1
        return tuple(out)


def neighbour_graph(line: ProjLine) -> NeighbourGraph:
    edges = tuple(
        (i, j)
        for i in range(len(line))
        for j in range(i + 1, len(line))
        if not line.distant(i, j)
    )
    return NeighbourGraph(line=line, edges=edges)


@dataclass(frozen=True)
class NeighbourhoodProfile:
    """Neighbourhood sizes and overlap statistics across a whole line."""

    sizes: tuple[int, ...]  # per point, sorted
    distant_pair_overlaps: tuple[int, ...]  # per distant pair, sorted
    distant_triple_overlaps: tuple[int, ...]  # per pairwise-distant triple, sorted
    transitive: bool
    nontransitive_witness: tuple[int, int, int] | None


def neighbourhood_profile(line: ProjLine) -> NeighbourhoodProfile:
    m = len(line)
    neighbour_sets = [frozenset(line.neighbour_indices(i)) for i in range(m)]
    sizes = tuple(sorted(len(s) for s in neighbour_sets))
    pair_overlaps = sorted(
        len(neighbour_sets[i] & neighbour_sets[j])
        for i in range(m)
        for j in range(i + 1, m)
        if line.distant(i, j)
    )
    triple_overlaps = sorted(
        len(neighbour_sets[i] & neighbour_sets[j] & neighbour_sets[k])
        for i, j, k in itertools.combinations(range(m), 3)
        if line.distant(i, j) and line.distant(i, k) and line.distant(j, k)
    )
    witness = None
    for q in range(m):
        for p in neighbour_sets[q]:
            for s in neighbour_sets[q]:
                if p < s and line.distant(p, s):
                    witness = (p, q, s)
                    break
            if witness:
                break
        if witness:
            break
    return NeighbourhoodProfile(
        sizes=sizes,
        distant_pair_overlaps=tuple(pair_overlaps),
        distant_triple_overlaps=tuple(triple_overlaps),
        transitive=witness is None,
        nontransitive_witness=witness,
    )


@dataclass(frozen=True)
class LineCounts:
    """Point counts: closed-form values next to the enumerated ones.

    The closed forms are (t^2 - z^2)/u for unit-coordinate points and
    (z^2 - s)/u for zero-divisor points, with t, u, z the element, unit
    and zero-divisor counts and s the number of ordered zero-divisor
    pairs covered by a single maximal ideal (computed by brute force).
    The record reports formula and actual side by side; callers decide
    whether to require agreement.
    """

    total_elements: int
    unit_count: int
    zero_divisor_count: int
    covered_pairs: int
    type_i_formula: int
    type_ii_formula: int
    type_i_actual: int
    type_ii_actual: int

    @property
    def total_actual(self) -> int:
        return self.type_i_actual + self.type_ii_actual


def count_formulas(ring: FiniteRing) -> LineCounts:
    t = ring.n
    u = len(ring.units())
    z = t - u
    covered = {
        (a, b)
        for ideal in ideals.maximal_ideals(ring)
        for a in ideal
        for b in ideal
    }
    s = len(covered)
    type_i, rem_i = divmod(t * t - z * z, u)
    type_ii, rem_ii = divmod(z * z - s, u)
    if rem_i or rem_ii:
        raise RuntimeError(f"point-count formulas are not integral on {ring.label}")
    line = enumerate_points(ring)
    actual_i = sum(1 for p in line.points if p.kind is PointKind.TYPE_I)
    return LineCounts(
        total_elements=t,
        unit_count=u,
        zero_divisor_count=z,
        covered_pairs=s,
        type_i_formula=type_i,
        type_ii_formula=type_ii,
        type_i_actual=actual_i,
        type_ii_actual=len(line.points) - actual_i,
    )


@dataclass(frozen=True)
class LineMap:
    """A homomorphism-induced map between projective lines."""

    hom: RingHom
    src: ProjLine
    dst: ProjLine
    point_map: tuple[int, ...]  # src point index -> dst point index
    fibers: tuple[tuple[int, ...], ...]  # dst point index -> src point indices

    def __call__(self, point) -> ProjPoint:
        point = _as_point(self.src, point)
        return self.dst.points[self.point_map[point.index]]


def induced_map(hom: RingHom, src: ProjLine, dst: ProjLine) -> LineMap:
    """Map each point with representative (a, b) to the point of (h(a), h(b)).

    Every orbit member is pushed through the homomorphism: an
    inadmissible image reports the witnessing pair (the homomorphism is
    unsuitable, e.g. not surjective), and any disagreement between
    members would be an internal error.
    """
    if hom_violation(hom) is not None:
        require_hom(hom)
    if src.ring is not hom.domain or dst.ring is not hom.codomain:
        raise InducedMapError("lines do not match the homomorphism's rings")
    point_map = []
    for point in src.points:
        targets = set()
        for a, b in point.orbit:
            image = (hom(a), hom(b))
            target = dst.point_index(image)
            if target < 0:
                raise InducedMapError(
                    f"image ({dst.ring.element_name(image[0])},"
                    f"{dst.ring.element_name(image[1])}) of "
                    f"({src.ring.element_name(a)},{src.ring.element_name(b)}) "
                    "is not admissible in the codomain"
                )
            targets.add(target)
        if len(targets) != 1:
            raise InducedMapError(
                f"image of point {point.canonical} depends on the representative"
            )
        point_map.append(targets.pop())
    fibers = [[] for _ in range(len(dst))]
    for i, target in enumerate(point_map):
        fibers[target].append(i)
    return LineMap(
        hom=hom,
        src=src,
        dst=dst,
        point_map=tuple(point_map),
        fibers=tuple(tuple(f) for f in fibers),
    )


@lru_cache(maxsize=None)
def _maximal_reduction_maps(line: ProjLine) -> tuple[LineMap, ...]:
    """Induced maps of the canonical projections modulo each maximal ideal."""
    out = []
    for ideal in ideals.maximal_ideals(line.ring):
        quot = quotient_ring(line.ring, ideal)
        out.append(induced_map(quot.projection, line, enumerate_points(quot.ring)))
    return tuple(out)


def jacobson_points(line: ProjLine, p) -> tuple[ProjPoint, ...]:
    """Neighbours of p indistinguishable from p modulo every maximal ideal.

    Non-empty only when the Jacobson radical is non-trivial; the members
    are the neighbours whose image coincides with p's under the
    reduction modulo each maximal ideal of the ring.
    """
    p = _as_point(line, p)
    maps = _maximal_reduction_maps(line)
    return tuple(
        q
        for q in neighbourhood(line, p)
        if all(lm.point_map[q.index] == lm.point_map[p.index] for lm in maps)
    )
