# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled kernels for the hot loops of projective-line enumeration.

All tables are int32 element-id lookup tables; is_unit is a uint8 mask.
The three kernels:

* admissible_mask  - for every coordinate pair (a, b), scan all (c, d)
  for a unit determinant a*d - b*c; quartic in the ring size and the
  dominant cost, so the scan runs once per pair of multiple-set classes.
* unit_orbits      - group admissible pairs into unit-scaling orbits.
* distant_matrix   - unit/zero-divisor classification of the cross
  determinant for every pair of orbit representatives.
"""

import numpy as np

BACKEND = "native"


def admissible_mask(const int[:, ::1] add, const int[:, ::1] mul, const int[::1] neg,
                    const unsigned char[::1] is_unit):
    # The verdict for (a, b) depends only on the value sets {a*d} and
    # {b*c}, so elements sharing a multiple set share one scan.
    cdef Py_ssize_t n = add.shape[0]
    mul_arr = np.asarray(mul)
    class_ids: dict = {}
    class_of = np.empty(n, dtype=np.intp)
    value_sets = []
    for a in range(n):
        key = tuple(np.unique(mul_arr[a]))
        idx = class_ids.get(key)
        if idx is None:
            idx = len(value_sets)
            class_ids[key] = idx
            value_sets.append(key)
        class_of[a] = idx
    cdef Py_ssize_t k = len(value_sets)
    offsets_arr = np.zeros(k + 1, dtype=np.int32)
    for i, vals in enumerate(value_sets):
        offsets_arr[i + 1] = offsets_arr[i] + len(vals)
    values_arr = np.fromiter(
        (v for vals in value_sets for v in vals), dtype=np.int32
    )
    cdef const int[::1] values = values_arr
    cdef const int[::1] offsets = offsets_arr
    verdict_arr = np.zeros((k, k), dtype=np.uint8)
    cdef unsigned char[:, ::1] verdict = verdict_arr
    cdef Py_ssize_t ca, cb, iu, iv
    cdef int u
    cdef bint hit
    for ca in range(k):
        for cb in range(k):
            hit = False
            for iu in range(offsets[ca], offsets[ca + 1]):
                u = values[iu]
                for iv in range(offsets[cb], offsets[cb + 1]):
                    if is_unit[add[u, neg[values[iv]]]]:
                        hit = True
                        break
                if hit:
                    break
            verdict[ca, cb] = 1 if hit else 0
    return np.ascontiguousarray(verdict_arr[class_of[:, None], class_of[None, :]])


def unit_orbits(const unsigned char[:, ::1] mask, const int[:, ::1] mul, const int[::1] units):
    cdef Py_ssize_t n = mask.shape[0]
    cdef Py_ssize_t nu = units.shape[0]
    point_arr = np.full(n * n, -1, dtype=np.int32)
    cdef int[::1] point_of = point_arr
    canon = []
    cdef Py_ssize_t a, b, i, idx
    cdef int k, prev, u
    for a in range(n):
        for b in range(n):
            if mask[a, b] == 0 or point_of[a * n + b] >= 0:
                continue
            k = len(canon)
            canon.append((a, b))
            for i in range(nu):
                u = units[i]
                idx = mul[u, a] * n + mul[u, b]
                prev = point_of[idx]
                if prev >= 0 and prev != k:
                    raise RuntimeError("unit orbits overlap; tables are corrupt")
                point_of[idx] = k
    return point_arr, np.array(canon, dtype=np.int32).reshape(-1, 2)


def distant_matrix(const int[:, ::1] canon, const int[:, ::1] add, const int[:, ::1] mul,
                   const int[::1] neg, const unsigned char[::1] is_unit):
    cdef Py_ssize_t m = canon.shape[0]
    out_arr = np.zeros((m, m), dtype=np.uint8)
    cdef unsigned char[:, ::1] out = out_arr
    cdef Py_ssize_t i, j
    cdef int a, b, c, d
    cdef unsigned char v
    for i in range(m):
        a = canon[i, 0]
        b = canon[i, 1]
        for j in range(i, m):
            c = canon[j, 0]
            d = canon[j, 1]
            v = is_unit[add[mul[a, d], neg[mul[b, c]]]]
            out[i, j] = v
            out[j, i] = v
    return out_arr
