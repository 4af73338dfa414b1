"""Ideals of a finite ring: the full lattice, maximal ideals, the radical.

Everything here is exhaustive. The lattice is computed by closing the
set of principal ideals under pairwise ideal sums, which reaches every
ideal of a finite commutative unital ring (each one is a finite sum of
principal ideals) without enumerating subsets.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import IdealError
from .rings import FiniteRing


class Ideal:
    """A verified ideal: contains zero, closed under +, -, and r*I."""

    def __init__(self, ring: FiniteRing, elements, check=True):
        self.ring = ring
        self.elements = tuple(sorted({int(a) for a in elements}))
        self._set = frozenset(self.elements)
        if check:
            self._verify()

    def _verify(self) -> None:
        ring, members = self.ring, self._set
        name = ring.element_name
        if ring.zero not in members:
            raise IdealError("ideal does not contain zero")
        for a in self.elements:
            if ring.neg(a) not in members:
                raise IdealError(f"not closed under negation at {name(a)}")
            for b in self.elements:
                if ring.add(a, b) not in members:
                    raise IdealError(
                        f"not closed under addition: {name(a)}+{name(b)}"
                    )
            for r in ring.elements():
                if ring.mul(r, a) not in members:
                    raise IdealError(
                        f"not absorbed by multiplication: {name(r)}*{name(a)}"
                    )

    def __contains__(self, a: int) -> bool:
        return int(a) in self._set

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other):
        return (
            isinstance(other, Ideal)
            and other.ring is self.ring
            and other.elements == self.elements
        )

    def __hash__(self):
        return hash((id(self.ring), self.elements))

    def __repr__(self):
        return f"<Ideal {{{', '.join(self.names())}}} of {self.ring.label}>"

    def names(self) -> tuple[str, ...]:
        return tuple(self.ring.element_name(a) for a in self.elements)

    def is_proper(self) -> bool:
        return len(self.elements) < self.ring.n

    def to_json(self) -> dict:
        return {"ring": self.ring.describe(), "elements": list(self.names())}


def principal_ideal(ring: FiniteRing, a: int) -> Ideal:
    """The ideal R*a (sufficient in a commutative unital ring)."""
    return Ideal(ring, np.unique(ring.mul_table[:, ring._check_id(a)]))


@lru_cache(maxsize=None)
def all_ideals(ring: FiniteRing) -> tuple[Ideal, ...]:
    """The complete ideal lattice, sorted by size then element sets.

    Computed as the closure of the principal ideals under pairwise sums,
    iterated to a fixpoint; includes {0} and R.
    """
    add = ring.add_table
    seen: set[frozenset[int]] = set()
    for a in ring.elements():
        seen.add(frozenset(int(v) for v in np.unique(ring.mul_table[:, a])))
    frontier = list(seen)
    while frontier:
        fresh = []
        for left in frontier:
            li = sorted(left)
            for right in seen.copy():
                total = frozenset(
                    int(v) for v in np.unique(add[np.ix_(li, sorted(right))])
                )
                if total not in seen:
                    seen.add(total)
                    fresh.append(total)
        frontier = fresh
    ordered = sorted(seen, key=lambda s: (len(s), sorted(s)))
    return tuple(Ideal(ring, members) for members in ordered)


def maximal_ideals(ring: FiniteRing) -> tuple[Ideal, ...]:
    """Proper ideals maximal under inclusion among proper ideals."""
    proper = [ideal for ideal in all_ideals(ring) if ideal.is_proper()]
    return tuple(
        ideal
        for ideal in proper
        if not any(
            other is not ideal and ideal._set < other._set for other in proper
        )
    )


def jacobson_radical(ring: FiniteRing) -> Ideal:
    """Intersection of all maximal ideals.

    Cross-checked against the quasi-regularity characterization; a
    mismatch would mean an internal bug, not bad input.
    """
    members = frozenset(ring.elements())
    for ideal in maximal_ideals(ring):
        members &= ideal._set
    radical = Ideal(ring, members)
    oracle = jacobson_radical_quasiregular(ring)
    if radical != oracle:
        raise RuntimeError(
            f"radical mismatch on {ring.label}: intersection gave "
            f"{radical.names()}, quasi-regularity gave {oracle.names()}"
        )
    return radical


def jacobson_radical_quasiregular(ring: FiniteRing) -> Ideal:
    """Independent radical computation: {a : 1 + r*a is a unit for all r}."""
    members = [
        a
        for a in ring.elements()
        if all(ring.is_unit(ring.add(ring.one, ring.mul(r, a))) for r in ring.elements())
    ]
    return Ideal(ring, members)


def is_local(ring: FiniteRing) -> bool:
    """True iff the ring has a unique maximal ideal."""
    return len(maximal_ideals(ring)) == 1


def ideal_sum(left: Ideal, right: Ideal) -> Ideal:
    if left.ring is not right.ring:
        raise IdealError("ideal sum requires ideals of the same ring")
    add = left.ring.add_table
    return Ideal(
        left.ring, np.unique(add[np.ix_(list(left), list(right))])
    )


def ideal_intersection(left: Ideal, right: Ideal) -> Ideal:
    if left.ring is not right.ring:
        raise IdealError("ideal intersection requires ideals of the same ring")
    return Ideal(left.ring, left._set & right._set)
