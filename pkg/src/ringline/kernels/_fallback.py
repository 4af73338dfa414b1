"""Pure-Python kernels, used when the compiled extension is unavailable.

Semantics match ringline.kernels._native exactly; see that module for the
contracts. The admissibility scan memoizes on the pair of row value sets
(the two principal ideals), which leaves the result unchanged but avoids
rescanning structurally identical pairs.
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"


def admissible_mask(add, mul, neg, is_unit):
    """uint8 (n, n) mask: 1 iff some (c, d) gives a unit determinant a*d - b*c."""
    n = add.shape[0]
    add_l = add.tolist()
    mul_l = mul.tolist()
    neg_l = neg.tolist()
    unit_l = [bool(v) for v in is_unit.tolist()]
    row_sets = [frozenset(row) for row in mul_l]
    out = np.zeros((n, n), dtype=np.uint8)
    cache: dict[tuple[frozenset, frozenset], bool] = {}
    for a in range(n):
        ra = row_sets[a]
        for b in range(n):
            key = (ra, row_sets[b])
            hit = cache.get(key)
            if hit is None:
                hit = any(
                    unit_l[add_l[u][neg_l[v]]] for u in ra for v in row_sets[b]
                )
                cache[key] = hit
            if hit:
                out[a, b] = 1
    return out


def unit_orbits(mask, mul, units):
    """Group admissible pairs into orbits under coordinatewise unit scaling.

    Returns (point_of, canon): point_of is int32 of length n*n mapping the
    flattened pair a*n+b to its orbit index (-1 when inadmissible); canon
    is int32 (m, 2) listing each orbit's first pair in lexicographic scan
    order, which is also the orbit's lexicographic minimum.
    """
    n = mask.shape[0]
    mask_l = mask.tolist()
    mul_l = mul.tolist()
    unit_ids = [int(u) for u in units.tolist()]
    point_of = [-1] * (n * n)
    canon: list[tuple[int, int]] = []
    for a in range(n):
        row = mask_l[a]
        base = a * n
        for b in range(n):
            if not row[b] or point_of[base + b] >= 0:
                continue
            k = len(canon)
            canon.append((a, b))
            for u in unit_ids:
                idx = mul_l[u][a] * n + mul_l[u][b]
                prev = point_of[idx]
                if prev >= 0 and prev != k:
                    raise RuntimeError("unit orbits overlap; tables are corrupt")
                point_of[idx] = k
    return (
        np.array(point_of, dtype=np.int32),
        np.array(canon, dtype=np.int32).reshape(-1, 2),
    )


def distant_matrix(canon, add, mul, neg, is_unit):
    """uint8 (m, m): 1 iff the cross determinant of two orbit reps is a unit."""
    add_l = add.tolist()
    mul_l = mul.tolist()
    neg_l = neg.tolist()
    unit_l = [bool(v) for v in is_unit.tolist()]
    reps = [(int(a), int(b)) for a, b in canon.tolist()]
    m = len(reps)
    out = np.zeros((m, m), dtype=np.uint8)
    for i, (a, b) in enumerate(reps):
        mul_a = mul_l[a]
        mul_b = mul_l[b]
        for j in range(i, m):
            c, d = reps[j]
            det = add_l[mul_a[d]][neg_l[mul_b[c]]]
            if unit_l[det]:
                out[i, j] = 1
                out[j, i] = 1
    return out
