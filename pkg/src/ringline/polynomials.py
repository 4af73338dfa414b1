"""Dense polynomial arithmetic over a prime field GF(p).

A polynomial is a tuple of integer coefficients in {0, ..., p-1}, lowest
degree first, with no stored trailing zeros; the zero polynomial is the
empty tuple.  These helpers back the ring-spec parser (reducing a parsed
modulus) and the construction of quotient-ring tables.
"""

from __future__ import annotations

ZERO: tuple[int, ...] = ()


def normalize(coeffs, p: int) -> tuple[int, ...]:
    """Reduce coefficients mod p and strip trailing zeros."""
    out = [c % p for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def degree(a) -> int:
    """Degree of a normalized polynomial; -1 for the zero polynomial."""
    return len(a) - 1


def add(a, b, p: int) -> tuple[int, ...]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return normalize(out, p)


def neg(a, p: int) -> tuple[int, ...]:
    return tuple((-c) % p for c in a)


def mul(a, b, p: int) -> tuple[int, ...]:
    if not a or not b:
        return ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return normalize(out, p)


def monomial(k: int) -> tuple[int, ...]:
    """x**k."""
    return (0,) * k + (1,)


def monic(m, p: int) -> tuple[int, ...]:
    """Scale m by the inverse of its leading coefficient."""
    if not m:
        raise ValueError("zero polynomial has no monic form")
    inv = pow(m[-1], -1, p)
    return normalize((c * inv for c in m), p)


def mod(a, m, p: int) -> tuple[int, ...]:
    """Remainder of a modulo m (m nonzero, any leading coefficient)."""
    if not m:
        raise ValueError("division by the zero polynomial")
    inv_lead = pow(m[-1], -1, p)
    rem = list(a)
    dm = len(m) - 1
    while len(rem) - 1 >= dm and rem:
        factor = (rem[-1] * inv_lead) % p
        shift = len(rem) - 1 - dm
        for i, c in enumerate(m):
            rem[shift + i] = (rem[shift + i] - factor * c) % p
        while rem and rem[-1] == 0:
            rem.pop()
    return tuple(rem)


def name(a, var: str) -> str:
    """Display form, highest power first: "x^2+x+1", "2*x", "0"."""
    if not a:
        return "0"
    terms = []
    for k in range(len(a) - 1, -1, -1):
        c = a[k]
        if not c:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            head = "" if c == 1 else f"{c}*"
            power = var if k == 1 else f"{var}^{k}"
            terms.append(head + power)
    return "+".join(terms)
