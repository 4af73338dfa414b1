"""Human-readable reports and shared presentation helpers.

Report element order normally follows the canonical element ids; for the
bundled showcase ring GF(2)[x]/(x^3+x) a fixed presentation order
(0, 1, x, x^2, x+1, x^2+1, x^2+x, x^2+x+1) is used instead so printed
tables match the traditional layout for that ring.
"""

from __future__ import annotations

from . import ideals
from .homs import quotient_ring
from .projline import (
    LineMap,
    PointKind,
    ProjLine,
    ProjPoint,
    count_formulas,
    enumerate_points,
    induced_map,
    jacobson_points,
    neighbourhood,
    neighbourhood_profile,
)
from .rings import FiniteRing
from .specparse import PolyQuotient

_CUBIC_SHOWCASE_ORDER = [0, 1, 2, 4, 3, 5, 6, 7]  # 0,1,x,x^2,x+1,...


def display_order(ring: FiniteRing) -> list[int]:
    """Element order used in printed tables and subscript labels."""
    spec = ring.spec
    if (
        isinstance(spec, PolyQuotient)
        and spec.base.p == 2
        and spec.modulus == (0, 1, 0, 1)
    ):
        return list(_CUBIC_SHOWCASE_ORDER)
    return list(range(ring.n))


def pair_name(ring: FiniteRing, pair) -> str:
    return f"({ring.element_name(pair[0])},{ring.element_name(pair[1])})"


def format_table_text(ring: FiniteRing, op: str, order=None) -> str:
    table = ring.add_table if op == "add" else ring.mul_table
    order = list(order) if order is not None else display_order(ring)
    sym = "+" if op == "add" else "*"
    width = max(len(nm) for nm in ring.names)
    width = max(width, len(sym))
    head = [sym.ljust(width)] + [ring.names[j].ljust(width) for j in order]
    lines = ["  ".join(head).rstrip()]
    lines.append("-" * len(lines[0]))
    for i in order:
        row = [ring.names[i].ljust(width)] + [
            ring.names[table[i, j]].ljust(width) for j in order
        ]
        lines.append("  ".join(row).rstrip())
    return "\n".join(lines) + "\n"


def _ideal_flags(ring: FiniteRing, ideal: ideals.Ideal, maximal, radical) -> dict:
    generator = None
    for a in ring.elements():
        if ideals.principal_ideal(ring, a) == ideal:
            generator = a
            break
    return {
        "elements": list(ideal.names()),
        "size": len(ideal),
        "principal": generator is not None,
        "generator": None if generator is None else ring.element_name(generator),
        "maximal": ideal in maximal,
        "jacobson_radical": ideal == radical,
    }


def ring_info_dict(ring: FiniteRing) -> dict:
    maximal = ideals.maximal_ideals(ring)
    radical = ideals.jacobson_radical(ring)
    return {
        "ring": ring.describe(),
        "size": ring.n,
        "characteristic": ring.characteristic(),
        "local": ideals.is_local(ring),
        "elements": list(ring.names),
        "units": [ring.element_name(a) for a in ring.units()],
        "zero_divisors": [ring.element_name(a) for a in ring.zero_divisors()],
        "ideals": [
            _ideal_flags(ring, ideal, maximal, radical)
            for ideal in ideals.all_ideals(ring)
        ],
        "jacobson_radical": list(radical.names()),
    }


def ring_info_text(ring: FiniteRing) -> str:
    info = ring_info_dict(ring)
    out = [
        f"ring: {info['ring']}",
        f"elements ({info['size']}): {', '.join(info['elements'])}",
        f"characteristic: {info['characteristic']}",
        f"local: {'yes' if info['local'] else 'no'}",
        f"units ({len(info['units'])}): {', '.join(info['units'])}",
        f"zero-divisors ({len(info['zero_divisors'])}): "
        f"{', '.join(info['zero_divisors'])}",
        f"ideals ({len(info['ideals'])}):",
    ]
    for entry in info["ideals"]:
        flags = []
        if entry["principal"]:
            flags.append(f"principal <{entry['generator']}>")
        if entry["maximal"]:
            flags.append("maximal")
        if entry["jacobson_radical"]:
            flags.append("jacobson radical")
        flag_text = f"  [{', '.join(flags)}]" if flags else ""
        out.append(f"  {{{', '.join(entry['elements'])}}}{flag_text}")
    out.append(f"jacobson radical: {{{', '.join(info['jacobson_radical'])}}}")
    return "\n".join(out) + "\n"


def line_points_dict(line: ProjLine) -> dict:
    name = line.ring.element_name
    return {
        "ring": line.ring.describe(),
        "total": len(line),
        "type_i": sum(1 for p in line.points if p.kind is PointKind.TYPE_I),
        "type_ii": sum(1 for p in line.points if p.kind is PointKind.TYPE_II),
        "points": [
            {
                "index": p.index,
                "canonical": [name(p.canonical[0]), name(p.canonical[1])],
                "kind": p.kind.value,
                "orbit": [[name(a), name(b)] for a, b in p.orbit],
            }
            for p in line.points
        ],
    }


def line_points_text(line: ProjLine) -> str:
    info = line_points_dict(line)
    out = [
        f"projective line over {info['ring']}: {info['total']} points "
        f"({info['type_i']} with a unit coordinate, {info['type_ii']} without)"
    ]
    for p in line.points:
        orbit = " ".join(pair_name(line.ring, member) for member in p.orbit)
        out.append(
            f"  {p.index:3d}  {pair_name(line.ring, p.canonical)}  "
            f"[{p.kind.value}]  orbit: {orbit}"
        )
    return "\n".join(out) + "\n"


def default_triad(line: ProjLine) -> tuple[int, int, int] | None:
    """Indices of the points of (1,0), (0,1), (1,1) when all three exist."""
    ring = line.ring
    reps = [(ring.one, ring.zero), (ring.zero, ring.one), (ring.one, ring.one)]
    idxs = [line.point_index(rep) for rep in reps]
    if any(i < 0 for i in idxs):
        return None
    return tuple(idxs)


def neighbour_subscripts(line: ProjLine, center) -> dict[int, ProjPoint]:
    """Deterministic subscripts for the neighbours of a reference point.

    Subscript 0 goes to the single neighbour (when there is exactly one)
    that agrees with the centre under reduction modulo every maximal
    ideal; the remaining unit-coordinate neighbours come first, then the
    zero-divisor-coordinate ones, each block sorted by the display
    element order.
    """
    rank = {e: i for i, e in enumerate(display_order(line.ring))}
    key = lambda q: (rank[q.canonical[0]], rank[q.canonical[1]])
    jac = sorted(jacobson_points(line, center), key=key)
    rest = [q for q in neighbourhood(line, center) if q not in jac]
    type_i = sorted((q for q in rest if q.kind is PointKind.TYPE_I), key=key)
    type_ii = sorted((q for q in rest if q.kind is PointKind.TYPE_II), key=key)
    out: dict[int, ProjPoint] = {}
    numbered = type_i + type_ii
    if len(jac) == 1:
        out[0] = jac[0]
    else:
        numbered = jac + numbered
    for sub, q in enumerate(numbered, start=1):
        out[sub] = q
    return out


def neighbours_dict(line: ProjLine, point: ProjPoint) -> dict:
    ring = line.ring
    jac = set(q.index for q in jacobson_points(line, point))
    triad = default_triad(line)
    labels: dict[int, str] = {}
    if triad is not None and point.index in triad:
        letter = "UVW"[triad.index(point.index)]
        for sub, q in neighbour_subscripts(line, point).items():
            labels[q.index] = f"{letter}{sub}"
    return {
        "ring": ring.describe(),
        "point": [ring.element_name(point.canonical[0]),
                  ring.element_name(point.canonical[1])],
        "neighbours": [
            {
                "canonical": [ring.element_name(q.canonical[0]),
                              ring.element_name(q.canonical[1])],
                "kind": q.kind.value,
                "jacobson": q.index in jac,
                "label": labels.get(q.index),
            }
            for q in neighbourhood(line, point)
        ],
    }


def neighbours_text(line: ProjLine, point: ProjPoint) -> str:
    info = neighbours_dict(line, point)
    head = f"neighbours of ({','.join(info['point'])}) over {info['ring']}: "
    out = [head + f"{len(info['neighbours'])} points"]
    for entry in info["neighbours"]:
        marks = [entry["kind"]]
        if entry["jacobson"]:
            marks.append("jacobson")
        label = f"  {entry['label']}" if entry["label"] else ""
        out.append(
            f"  ({','.join(entry['canonical'])})  [{', '.join(marks)}]{label}"
        )
    return "\n".join(out) + "\n"


def _multiset(values) -> list[list[int]]:
    out: dict[int, int] = {}
    for v in values:
        out[v] = out.get(v, 0) + 1
    return [[k, out[k]] for k in sorted(out)]


def line_stats_dict(line: ProjLine) -> dict:
    counts = count_formulas(line.ring)
    profile = neighbourhood_profile(line)
    jac_counts = _multiset(
        len(jacobson_points(line, p)) for p in line.points
    )
    return {
        "ring": line.ring.describe(),
        "points_total": counts.total_actual,
        "type_i": {"formula": counts.type_i_formula, "actual": counts.type_i_actual},
        "type_ii": {"formula": counts.type_ii_formula, "actual": counts.type_ii_actual},
        "element_counts": {
            "total": counts.total_elements,
            "units": counts.unit_count,
            "zero_divisors": counts.zero_divisor_count,
            "covered_zero_divisor_pairs": counts.covered_pairs,
        },
        "neighbourhood_sizes": _multiset(profile.sizes),
        "distant_pair_overlaps": _multiset(profile.distant_pair_overlaps),
        "distant_triple_overlaps": _multiset(profile.distant_triple_overlaps),
        "neighbour_relation_transitive": profile.transitive,
        "jacobson_points_per_point": jac_counts,
    }


def line_stats_text(line: ProjLine) -> str:
    info = line_stats_dict(line)

    def fmt_multiset(pairs):
        return (
            ", ".join(f"{k} (x{c})" for k, c in pairs) if pairs else "none"
        )

    out = [
        f"projective line over {info['ring']}",
        f"points: {info['points_total']} = {info['type_i']['actual']} with a unit "
        f"coordinate + {info['type_ii']['actual']} without",
        f"count formulas: type I {info['type_i']['formula']} "
        f"(actual {info['type_i']['actual']}), type II {info['type_ii']['formula']} "
        f"(actual {info['type_ii']['actual']}), covered zero-divisor pairs "
        f"{info['element_counts']['covered_zero_divisor_pairs']}",
        f"neighbourhood sizes: {fmt_multiset(info['neighbourhood_sizes'])}",
        f"distant-pair overlaps: {fmt_multiset(info['distant_pair_overlaps'])}",
        f"distant-triple overlaps: {fmt_multiset(info['distant_triple_overlaps'])}",
        "neighbour relation transitive: "
        + ("yes" if info["neighbour_relation_transitive"] else "no"),
        f"jacobson points per point: {fmt_multiset(info['jacobson_points_per_point'])}",
    ]
    return "\n".join(out) + "\n"


def build_induced(ring: FiniteRing, ideal_text: str):
    """Quotient by <element> or by the radical ("jacobson"), with lines."""
    if ideal_text.strip().lower() == "jacobson":
        ideal = ideals.jacobson_radical(ring)
        label = "J"
    else:
        gen = ring.parse_element(ideal_text)
        ideal = ideals.principal_ideal(ring, gen)
        label = f"<{ring.element_name(gen)}>"
    quot = quotient_ring(ring, ideal, label=label)
    src = enumerate_points(ring)
    dst = enumerate_points(quot.ring)
    return induced_map(quot.projection, src, dst)


def induced_dict(lm: LineMap) -> dict:
    return {
        "ring": lm.src.ring.describe(),
        "quotient": lm.dst.ring.describe(),
        "hom": lm.hom.to_json(),
        "fibers": [
            {
                "image": [lm.dst.ring.element_name(c) for c in
                          lm.dst.points[t].canonical],
                "sources": [
                    [lm.src.ring.element_name(c) for c in lm.src.points[i].canonical]
                    for i in lm.fibers[t]
                ],
            }
            for t in range(len(lm.dst))
        ],
    }


def induced_text(lm: LineMap) -> str:
    info = induced_dict(lm)
    out = [
        f"line map induced by {info['ring']} -> {info['quotient']}",
        f"{len(lm.src)} points -> {len(lm.dst)} points",
        "fibers:",
    ]
    for fiber in info["fibers"]:
        sources = ", ".join(f"({a},{b})" for a, b in fiber["sources"])
        out.append(f"  {{{sources}}} -> ({fiber['image'][0]},{fiber['image'][1]})")
    return "\n".join(out) + "\n"
