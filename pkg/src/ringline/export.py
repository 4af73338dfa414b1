"""Machine-readable exports: JSON documents, DOT graphs, CSV tables.

All exports are deterministic: identical input produces byte-identical
output, and every emitted document ends with a newline.
"""

from __future__ import annotations

import csv
import io
import json

from .projline import PointKind, ProjLine
from .rings import FiniteRing


def dumps(obj) -> str:
    """Deterministic JSON with a trailing newline."""
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def line_to_dict(line: ProjLine) -> dict:
    """Schema: {ring, points: [{canonical, kind, orbit}], edges}."""
    name = line.ring.element_name
    points = [
        {
            "canonical": [name(p.canonical[0]), name(p.canonical[1])],
            "kind": p.kind.value,
            "orbit": [[name(a), name(b)] for a, b in p.orbit],
        }
        for p in line.points
    ]
    edges = [
        [i, j]
        for i in range(len(line))
        for j in range(i + 1, len(line))
        if not line.distant(i, j)
    ]
    return {"ring": line.ring.describe(), "points": points, "edges": edges}


def line_to_dot(line: ProjLine) -> str:
    """Undirected DOT graph; zero-divisor-coordinate points drawn as boxes."""
    name = line.ring.element_name
    out = [f'graph "{line.ring.describe()}" {{']
    for p in line.points:
        label = f"({name(p.canonical[0])},{name(p.canonical[1])})"
        shape = ' shape=box kind="II"' if p.kind is PointKind.TYPE_II else ""
        out.append(f'  p{p.index} [label="{label}"{shape}];')
    for i in range(len(line)):
        for j in range(i + 1, len(line)):
            if not line.distant(i, j):
                out.append(f"  p{i} -- p{j};")
    out.append("}")
    return "\n".join(out) + "\n"


def table_to_csv(ring: FiniteRing, op: str, order=None) -> str:
    """Operation table as CSV, one table row per line, header row first."""
    table = ring.add_table if op == "add" else ring.mul_table
    order = list(order) if order is not None else list(range(ring.n))
    sym = "+" if op == "add" else "*"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([sym] + [ring.names[j] for j in order])
    for i in order:
        writer.writerow([ring.names[i]] + [ring.names[table[i, j]] for j in order])
    return buf.getvalue()
