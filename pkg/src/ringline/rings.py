"""Construction of fully tabulated finite commutative rings with unity.

A ring is stored as n x n addition and multiplication lookup tables over
element ids 0..n-1, with id 0 always the additive zero. Three
constructions are supported: prime fields GF(p), polynomial quotients
GF(p)[x]/(m), and direct products. Quotient rings by an ideal are built
on the same class by :func:`ringline.homs.quotient_ring`.

Element ids are assigned in a fixed canonical order: polynomial residues
by their coefficient vector read as a base-p integer (0, 1, x, x+1, x^2,
... for p = 2), product elements lexicographically by component. Tables
are numpy int32 arrays, frozen after construction, and every constructed
ring is checked exhaustively against the commutative-unital-ring axioms
(at most cubic in the element count, which the enumeration bound keeps
tractable).
"""

from __future__ import annotations

import enum
import os

import numpy as np

from . import polynomials, specparse
from .errors import (
    BoundExceededError,
    ElementError,
    RingAxiomError,
    RingSpecError,
)
from .specparse import PolyQuotient, PrimeField, Product, RingSpec

DEFAULT_MAX_ELEMENTS = 4096
MAX_ELEMENTS_ENV = "RINGLINE_MAX_ELEMENTS"


class ElementClass(enum.Enum):
    """Every element of a finite ring is exactly one of the two."""

    UNIT = "unit"
    ZERO_DIVISOR = "zero-divisor"  # zero itself included


def resolve_max_elements(max_elements=None) -> int:
    """Effective enumeration bound: argument, else environment, else default."""
    if max_elements is None:
        raw = os.environ.get(MAX_ELEMENTS_ENV)
        max_elements = int(raw) if raw else DEFAULT_MAX_ELEMENTS
    bound = int(max_elements)
    if bound < 1:
        raise ValueError("enumeration bound must be positive")
    return bound


class FiniteRing:
    """A finite commutative ring with unity, fully tabulated.

    Attributes:
        n: element count.
        add_table, mul_table: (n, n) int32 operation tables.
        neg_table: (n,) int32 additive inverses.
        zero, one: element ids (zero is always 0).
        names: per-element display strings, pairwise distinct.
        spec: originating AST, or None for quotient/custom rings.
        label: display form of the construction, e.g. "GF(2)[x]/(x^3+x)".
    """

    def __init__(self, add_table, mul_table, neg_table, one, names,
                 spec=None, label="", components=None, check=True):
        self.add_table = np.ascontiguousarray(add_table, dtype=np.int32)
        self.mul_table = np.ascontiguousarray(mul_table, dtype=np.int32)
        self.neg_table = np.ascontiguousarray(neg_table, dtype=np.int32)
        self.n = int(self.add_table.shape[0])
        self.zero = 0
        self.one = int(one)
        self.names = tuple(names)
        self.spec = spec
        self.label = label or f"ring({self.n} elements)"
        self._components = components
        self._name_index = {nm: i for i, nm in enumerate(self.names)}
        self._unit_mask = None
        self._inverse_table = None
        for arr in (self.add_table, self.mul_table, self.neg_table):
            arr.setflags(write=False)
        if check:
            verify_ring(self)

    def __repr__(self):
        return f"<FiniteRing {self.label} n={self.n}>"

    def describe(self) -> str:
        return self.label

    def elements(self) -> range:
        return range(self.n)

    def _check_id(self, a: int) -> int:
        a = int(a)
        if not 0 <= a < self.n:
            raise ElementError(f"element id {a} out of range for {self.label}")
        return a

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[self._check_id(a), self._check_id(b)])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[self._check_id(a), self._check_id(b)])

    def neg(self, a: int) -> int:
        return int(self.neg_table[self._check_id(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def characteristic(self) -> int:
        """Additive order of the multiplicative identity."""
        s = self.one
        k = 1
        while s != self.zero:
            s = self.add(s, self.one)
            k += 1
        return k

    def unit_mask(self) -> np.ndarray:
        """Boolean mask of units, found by exhaustive scan of the tables."""
        if self._unit_mask is None:
            mask = (self.mul_table == self.one).any(axis=1)
            mask.setflags(write=False)
            self._unit_mask = mask
        return self._unit_mask

    def is_unit(self, a: int) -> bool:
        return bool(self.unit_mask()[self._check_id(a)])

    def classify(self, a: int) -> ElementClass:
        return ElementClass.UNIT if self.is_unit(a) else ElementClass.ZERO_DIVISOR

    def inverse(self, a: int) -> int | None:
        """Multiplicative inverse of a, or None for a zero-divisor."""
        if self._inverse_table is None:
            table = np.full(self.n, -1, dtype=np.int32)
            rows, cols = np.nonzero(self.mul_table == self.one)
            table[rows] = cols  # unique per row in a commutative unital ring
            table.setflags(write=False)
            self._inverse_table = table
        inv = int(self._inverse_table[self._check_id(a)])
        return None if inv < 0 else inv

    def units(self) -> tuple[int, ...]:
        return tuple(int(i) for i in np.flatnonzero(self.unit_mask()))

    def zero_divisors(self) -> tuple[int, ...]:
        return tuple(int(i) for i in np.flatnonzero(~self.unit_mask()))

    def element_name(self, a: int) -> str:
        return self.names[self._check_id(a)]

    def parse_element(self, text: str) -> int:
        """Resolve an element name; any representative form is reduced.

        Polynomial input is reduced mod p and mod the modulus, so "x^3"
        denotes the same element as "x" in GF(2)[x]/(x^3+x). For rings
        without a spec (quotients), only the stored names match.
        """
        stripped = "".join(text.split())
        hit = self._name_index.get(stripped)
        if hit is not None:
            return hit
        if isinstance(self.spec, PrimeField):
            if not stripped.isdigit():
                raise ElementError(
                    f"{text!r} is not an element of {self.label}"
                )
            return int(stripped) % self.spec.p
        if isinstance(self.spec, PolyQuotient):
            p = self.spec.base.p
            try:
                coeffs = specparse.parse_poly(stripped, self.spec.var, p)
            except RingSpecError as exc:
                raise ElementError(
                    f"{text!r} is not an element of {self.label}: {exc}"
                ) from None
            residue = polynomials.mod(coeffs, self.spec.modulus, p)
            return _poly_index(residue, p)
        if isinstance(self.spec, Product):
            left_text, right_text = _split_pair(stripped, self.label)
            left, right = self._components
            return left.parse_element(left_text) * right.n + right.parse_element(
                right_text
            )
        raise ElementError(f"{text!r} is not an element of {self.label}")


def _split_pair(text: str, label: str) -> tuple[str, str]:
    """Split "(left,right)" at the top-level comma."""
    if not (text.startswith("(") and text.endswith(")")):
        raise ElementError(f"{text!r} is not an element of {label}")
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                break
        elif ch == "," and depth == 1:
            return text[1:i], text[i + 1:-1]
    raise ElementError(f"{text!r} is not an element of {label}")


def _poly_index(coeffs, p: int) -> int:
    idx = 0
    for k, c in enumerate(coeffs):
        idx += c * p**k
    return idx


def build_ring(spec: RingSpec, max_elements=None) -> FiniteRing:
    """Construct the fully tabulated ring a spec describes.

    Raises BoundExceededError when the element count exceeds the
    enumeration bound (argument, RINGLINE_MAX_ELEMENTS, or 4096).
    """
    specparse.validate_spec(spec)
    bound = resolve_max_elements(max_elements)
    n = specparse.count_elements(spec)
    if n > bound:
        raise BoundExceededError(
            f"{specparse.spec_to_string(spec)} has {n} elements, "
            f"exceeding the enumeration bound {bound}"
        )
    if isinstance(spec, PrimeField):
        return _build_prime_field(spec)
    if isinstance(spec, PolyQuotient):
        return _build_poly_quotient(spec)
    left = build_ring(spec.left, max_elements=bound)
    right = build_ring(spec.right, max_elements=bound)
    return _build_product(spec, left, right)


def _build_prime_field(spec: PrimeField) -> FiniteRing:
    p = spec.p
    i = np.arange(p, dtype=np.int64)
    return FiniteRing(
        add_table=(i[:, None] + i[None, :]) % p,
        mul_table=(i[:, None] * i[None, :]) % p,
        neg_table=(-i) % p,
        one=1,
        names=tuple(str(v) for v in range(p)),
        spec=spec,
        label=specparse.spec_to_string(spec),
    )


def _build_poly_quotient(spec: PolyQuotient) -> FiniteRing:
    p = spec.base.p
    modulus = polynomials.monic(spec.modulus, p)
    d = polynomials.degree(modulus)
    n = p**d
    powers = p ** np.arange(d, dtype=np.int64)
    digits = (np.arange(n, dtype=np.int64)[:, None] // powers[None, :]) % p

    add_table = ((digits[:, None, :] + digits[None, :, :]) % p) @ powers
    neg_table = ((-digits) % p) @ powers

    # x^k mod modulus for k < 2d-1, as rows of a reduction matrix
    red = np.zeros((2 * d - 1, d), dtype=np.int64)
    for k in range(2 * d - 1):
        residue = polynomials.mod(polynomials.monomial(k), modulus, p)
        red[k, : len(residue)] = residue
    mul_table = np.empty((n, n), dtype=np.int64)
    conv = np.empty((n, 2 * d - 1), dtype=np.int64)
    for a in range(n):
        conv[:] = 0
        for k in range(d):
            if digits[a, k]:
                conv[:, k : k + d] += digits[a, k] * digits
        mul_table[a] = (((conv % p) @ red) % p) @ powers

    names = tuple(
        polynomials.name(polynomials.normalize(digits[a], p), spec.var)
        for a in range(n)
    )
    return FiniteRing(
        add_table=add_table,
        mul_table=mul_table,
        neg_table=neg_table,
        one=1,
        names=names,
        spec=spec,
        label=specparse.spec_to_string(spec),
    )


def _build_product(spec: Product, left: FiniteRing, right: FiniteRing) -> FiniteRing:
    n2 = right.n
    ids = np.arange(left.n * n2)
    a1, a2 = ids // n2, ids % n2
    add_table = left.add_table[np.ix_(a1, a1)].astype(np.int64) * n2 + right.add_table[
        np.ix_(a2, a2)
    ]
    mul_table = left.mul_table[np.ix_(a1, a1)].astype(np.int64) * n2 + right.mul_table[
        np.ix_(a2, a2)
    ]
    neg_table = left.neg_table[a1].astype(np.int64) * n2 + right.neg_table[a2]
    names = tuple(
        f"({left.names[i]},{right.names[j]})" for i, j in zip(a1, a2)
    )
    return FiniteRing(
        add_table=add_table,
        mul_table=mul_table,
        neg_table=neg_table,
        one=left.one * n2 + right.one,
        names=names,
        spec=spec,
        label=specparse.spec_to_string(spec),
        components=(left, right),
    )


def build_ring_from_text(text: str, max_elements=None) -> FiniteRing:
    return build_ring(specparse.parse_ring_spec(text), max_elements=max_elements)


def verify_ring(ring: FiniteRing) -> None:
    """Exhaustively check the commutative-unital-ring axioms on the tables.

    Raises RingAxiomError with a witnessing element tuple on the first
    violation. Cost is at most cubic in the element count.
    """
    n = ring.n
    add, mul, neg = ring.add_table, ring.mul_table, ring.neg_table
    names = ring.names

    if add.shape != (n, n) or mul.shape != (n, n) or neg.shape != (n,):
        raise RingAxiomError("table shapes are inconsistent")
    if len(names) != n:
        raise RingAxiomError("name count does not match element count")
    if len(set(names)) != n:
        raise RingAxiomError("element names are not pairwise distinct")
    for table, what in ((add, "addition"), (mul, "multiplication"), (neg, "negation")):
        if table.min(initial=0) < 0 or table.max(initial=0) >= n:
            raise RingAxiomError(f"{what} table contains out-of-range ids")
    if not 0 <= ring.one < n:
        raise RingAxiomError("multiplicative identity id out of range")

    idx = np.arange(n)
    if not np.array_equal(add[0], idx):
        a = int(np.flatnonzero(add[0] != idx)[0])
        raise RingAxiomError(f"zero is not an additive identity: 0+{names[a]}")
    bad = np.flatnonzero(add[idx, neg] != 0)
    if bad.size:
        raise RingAxiomError(f"missing additive inverse for {names[int(bad[0])]}")
    for table, sym in ((add, "+"), (mul, "*")):
        if not np.array_equal(table, table.T):
            a, b = map(int, np.argwhere(table != table.T)[0])
            raise RingAxiomError(
                f"not commutative: {names[a]}{sym}{names[b]} != {names[b]}{sym}{names[a]}"
            )
    if not np.array_equal(mul[ring.one], idx):
        a = int(np.flatnonzero(mul[ring.one] != idx)[0])
        raise RingAxiomError(f"one is not a multiplicative identity at {names[a]}")

    for table, sym in ((add, "+"), (mul, "*")):
        for a in range(n):
            lhs = table[table[a]]  # (a.b).c
            rhs = table[a][table]  # a.(b.c)
            if not np.array_equal(lhs, rhs):
                b, c = map(int, np.argwhere(lhs != rhs)[0])
                raise RingAxiomError(
                    f"not associative: ({names[a]}{sym}{names[b]}){sym}{names[c]} "
                    f"!= {names[a]}{sym}({names[b]}{sym}{names[c]})"
                )
    for a in range(n):
        row = mul[a]
        lhs = row[add]  # a*(b+c)
        rhs = add[row[:, None], row[None, :]]  # a*b + a*c
        if not np.array_equal(lhs, rhs):
            b, c = map(int, np.argwhere(lhs != rhs)[0])
            raise RingAxiomError(
                f"not distributive: {names[a]}*({names[b]}+{names[c]}) "
                f"!= {names[a]}*{names[b]}+{names[a]}*{names[c]}"
            )

    counts = (mul == ring.one).sum(axis=1)
    if counts.max(initial=0) > 1:
        a = int(np.flatnonzero(counts > 1)[0])
        raise RingAxiomError(f"{names[a]} has more than one inverse")

    for i, nm in enumerate(names):
        if ring.parse_element(nm) != i:
            raise RingAxiomError(f"element name {nm!r} does not round-trip")
