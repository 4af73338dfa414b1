"""Ring homomorphisms, kernels, composition, and quotient rings.

Homomorphisms are plain element maps; nothing is trusted, the three laws
(addition, multiplication, unit preservation) are always checkable
exhaustively and quotient construction re-asserts well-definedness of
the coset operations.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import HomomorphismError, IdealError
from .ideals import Ideal
from .rings import FiniteRing


class RingHom:
    """An element-wise map between two finite rings."""

    def __init__(self, domain: FiniteRing, codomain: FiniteRing, mapping):
        self.domain = domain
        self.codomain = codomain
        self.mapping = tuple(int(v) for v in mapping)
        if len(self.mapping) != domain.n:
            raise HomomorphismError("map length does not match the domain")
        if any(not 0 <= v < codomain.n for v in self.mapping):
            raise HomomorphismError("map image out of range for the codomain")

    def __call__(self, a: int) -> int:
        return self.mapping[self.domain._check_id(a)]

    def __repr__(self):
        return f"<RingHom {self.domain.label} -> {self.codomain.label}>"

    def is_surjective(self) -> bool:
        return len(set(self.mapping)) == self.codomain.n

    def to_json(self) -> dict:
        return {
            "domain": self.domain.describe(),
            "codomain": self.codomain.describe(),
            "map": [
                [self.domain.element_name(a), self.codomain.element_name(b)]
                for a, b in enumerate(self.mapping)
            ],
        }


def hom_violation(h: RingHom) -> str | None:
    """First homomorphism-law violation with a witnessing pair, or None."""
    src, dst = h.domain, h.codomain
    image = np.asarray(h.mapping, dtype=np.int32)
    if h.mapping[src.one] != dst.one:
        return f"1 maps to {dst.element_name(h.mapping[src.one])}, not 1"
    for table, dst_table, sym in (
        (src.add_table, dst.add_table, "+"),
        (src.mul_table, dst.mul_table, "*"),
    ):
        lhs = image[table]  # h(a.b)
        rhs = dst_table[image[:, None], image[None, :]]  # h(a).h(b)
        if not np.array_equal(lhs, rhs):
            a, b = map(int, np.argwhere(lhs != rhs)[0])
            return (
                f"h({src.element_name(a)}{sym}{src.element_name(b)}) != "
                f"h({src.element_name(a)}){sym}h({src.element_name(b)})"
            )
    return None


def check_hom(h: RingHom) -> bool:
    """Exhaustively verify the three homomorphism laws."""
    return hom_violation(h) is None


def require_hom(h: RingHom) -> RingHom:
    violation = hom_violation(h)
    if violation is not None:
        raise HomomorphismError(
            f"{h.domain.label} -> {h.codomain.label} is not a homomorphism: {violation}"
        )
    return h


def kernel(h: RingHom) -> Ideal:
    """{a : h(a) = 0}, returned as a verified ideal of the domain."""
    zero = h.codomain.zero
    return Ideal(h.domain, [a for a in h.domain.elements() if h(a) == zero])


def compose(g: RingHom, h: RingHom) -> RingHom:
    """g after h (element-wise); requires codomain(h) = domain(g)."""
    if h.codomain is not g.domain:
        raise HomomorphismError("compose requires codomain(h) = domain(g)")
    return RingHom(h.domain, g.codomain, (g.mapping[v] for v in h.mapping))


def identity_hom(ring: FiniteRing) -> RingHom:
    return RingHom(ring, ring, range(ring.n))


@dataclass(frozen=True)
class QuotientRing:
    """A quotient ring together with its canonical projection."""

    source: FiniteRing
    ideal: Ideal
    ring: FiniteRing
    projection: RingHom

    @property
    def coset_names(self) -> tuple[str, ...]:
        return self.ring.names


def quotient_ring(source: FiniteRing, ideal: Ideal, label: str | None = None) -> QuotientRing:
    """Build R/I from cosets, named by their minimal-id representative.

    Coset operations are inherited through representatives and their
    well-definedness is asserted exhaustively, so a defective ideal can
    never produce a silently wrong quotient.
    """
    if ideal.ring is not source:
        raise IdealError("the ideal does not belong to this ring")
    add = source.add_table
    coset_of = np.full(source.n, -1, dtype=np.int32)
    reps: list[int] = []
    for a in source.elements():
        if coset_of[a] >= 0:
            continue
        members = add[a, list(ideal)]
        coset_of[members] = len(reps)
        reps.append(a)  # ascending scan: a is the minimal member

    qadd = coset_of[add[np.ix_(reps, reps)]]
    qmul = coset_of[source.mul_table[np.ix_(reps, reps)]]
    qneg = coset_of[source.neg_table[reps]]
    for table, qtable, what in ((add, qadd, "addition"),
                                (source.mul_table, qmul, "multiplication")):
        expected = qtable[coset_of[:, None], coset_of[None, :]]
        if not np.array_equal(coset_of[table], expected):
            a, b = map(int, np.argwhere(coset_of[table] != expected)[0])
            raise IdealError(
                f"coset {what} is not well defined at "
                f"({source.element_name(a)}, {source.element_name(b)})"
            )

    if label is None:
        label = "{" + ",".join(ideal.names()) + "}"
    quotient = FiniteRing(
        add_table=qadd,
        mul_table=qmul,
        neg_table=qneg,
        one=int(coset_of[source.one]),
        names=tuple(source.names[r] for r in reps),
        spec=None,
        label=f"{source.label}/{label}",
    )
    projection = require_hom(RingHom(source, quotient, coset_of))
    if kernel(projection) != ideal:
        raise IdealError("projection kernel differs from the defining ideal")
    return QuotientRing(source=source, ideal=ideal, ring=quotient, projection=projection)
