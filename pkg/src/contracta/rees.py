"""Height ideals and Rees factor semigroups of regular contraction semigroups.

K(n, p) collects the elements of height at most p inside a regular base; the
Rees factor keeps the height-p layer and collapses everything below into a
single absorbing zero.
"""

from __future__ import annotations

from dataclasses import dataclass

from .maps import ChainMap, compose, height, map_to_text
from .semigroups import FiniteSemigroup, regular_elements

__all__ = [
    "HeightIdeal",
    "ReesQuotient",
    "height_ideal",
    "rees_quotient",
    "verify_inverse",
    "InverseVerification",
]

# Associativity of the collapsing product is asserted exhaustively up to this
# carrier size (cubic cost).
_ASSOC_CHECK_MAX = 220


@dataclass(frozen=True)
class HeightIdeal:
    """Elements of the base with height at most p; a two-sided ideal."""

    base: FiniteSemigroup
    p: int
    elements: tuple[ChainMap, ...]


def height_ideal(base: FiniteSemigroup, p: int) -> HeightIdeal:
    """Filter the base down to heights <= p and assert the ideal property."""
    if not 1 <= p <= base.n:
        raise ValueError(f"height bound p={p} out of range 1..{base.n}")
    selected = tuple(m for m in base.elements if height(m) <= p)
    chosen = {base.index_of(m) for m in selected}
    for i in chosen:
        for j in range(base.size):
            if base.product(i, j) not in chosen or base.product(j, i) not in chosen:
                raise RuntimeError(
                    f"height-{p} slice of {base!r} is not a two-sided ideal; "
                    "the base is not height-monotone"
                )
    return HeightIdeal(base, p, selected)


class ReesQuotient:
    """The height-p layer of a regular base with a collapsing zero.

    Index 0 is the distinguished zero (serialized as the token "0"); indices
    1..m are the height-p maps in lexicographic order.  The product of two
    maps is their composite when that stays at height p and zero otherwise;
    zero absorbs.
    """

    def __init__(self, base: FiniteSemigroup, p: int, maps):
        self.base = base
        self.p = p
        self.n = base.n
        self.maps = tuple(sorted(maps))
        self._map_index = {m: i + 1 for i, m in enumerate(self.maps)}
        self._table = self._build_table()
        if len(self.maps) <= _ASSOC_CHECK_MAX:
            self._assert_associative()

    @property
    def size(self) -> int:
        return len(self.maps) + 1

    @property
    def zero_index(self) -> int:
        return 0

    def element(self, i: int) -> ChainMap | None:
        """The map at index i, or None for the zero."""
        return None if i == 0 else self.maps[i - 1]

    def label(self, i: int) -> str:
        return "0" if i == 0 else map_to_text(self.maps[i - 1])

    def index_of(self, m) -> int:
        if m is None or m == "0":
            return 0
        try:
            return self._map_index[m]
        except KeyError:
            raise ValueError(f"{m} is not in this quotient's carrier") from None

    def product(self, i: int, j: int) -> int:
        return self._table[i][j]

    def _build_table(self):
        m = len(self.maps)
        table = [[0] * (m + 1) for _ in range(m + 1)]
        for i, a in enumerate(self.maps, start=1):
            for j, b in enumerate(self.maps, start=1):
                ab = compose(a, b)
                if height(ab) == self.p:
                    # The slice at height p of an ideal: the composite must be
                    # one of the carrier maps.
                    table[i][j] = self._map_index[ab]
        return table

    def _assert_associative(self):
        size = self.size
        t = self._table
        for i in range(size):
            for j in range(size):
                ij = t[i][j]
                for k in range(size):
                    if t[ij][k] != t[i][t[j][k]]:
                        raise RuntimeError(
                            f"collapsing product is not associative at indices ({i},{j},{k})"
                        )

    def __repr__(self):
        return f"ReesQuotient(n={self.n}, p={self.p}, size={self.size})"


def rees_quotient(base: FiniteSemigroup, p: int, *, allow_irregular_base=False) -> ReesQuotient:
    """Rees factor of the height-(<= p) ideal by the height-(<= p-1) ideal.

    The base must consist of regular elements (use ``allow_irregular_base``
    for experimental carriers; the collapsing rule is applied unchanged).
    """
    if not 2 <= p <= base.n:
        raise ValueError(f"quotient height p={p} out of range 2..{base.n}")
    if not allow_irregular_base and len(regular_elements(base)) != base.size:
        raise ValueError(
            "base contains non-regular elements; pass allow_irregular_base=True to proceed"
        )
    upper = height_ideal(base, p)
    layer = tuple(m for m in upper.elements if height(m) == p)
    if not layer:
        raise RuntimeError(f"height-{p} layer of {base!r} is empty")
    return ReesQuotient(base, p, layer)


@dataclass(frozen=True)
class InverseVerification:
    """Independently computed inverse-semigroup criteria for one quotient.

    ``inverse`` is the agreed verdict; ``consistent`` records that the three
    routes (regular + commuting idempotents, unique inverses, orthodox +
    L-unipotent + R-unipotent) all said the same thing.
    """

    size: int
    all_regular: bool
    idempotents_commute: bool
    unique_inverses: bool
    orthodox: bool
    l_unipotent: bool
    r_unipotent: bool
    inverse: bool
    consistent: bool

    def as_dict(self) -> dict:
        return {
            "size": self.size,
            "all_regular": self.all_regular,
            "idempotents_commute": self.idempotents_commute,
            "unique_inverses": self.unique_inverses,
            "orthodox": self.orthodox,
            "l_unipotent": self.l_unipotent,
            "r_unipotent": self.r_unipotent,
            "inverse": self.inverse,
            "consistent": self.consistent,
        }


def quotient_idempotents(q: ReesQuotient) -> list[int]:
    return [i for i in range(q.size) if q.product(i, i) == i]


def verify_inverse(q: ReesQuotient) -> InverseVerification:
    """Check the inverse-semigroup property three independent ways.

    (i) every element regular and idempotents commute, (ii) every element has
    exactly one inverse, (iii) orthodox plus unique idempotents per L-class
    and per R-class.  All three must agree.
    """
    from .relations import green_oracle  # local import to avoid a cycle

    size = q.size
    idx = range(size)
    all_regular = all(
        any(q.product(q.product(a, b), a) == a for b in idx) for a in idx
    )
    ids = quotient_idempotents(q)
    commute = all(q.product(e, f) == q.product(f, e) for e in ids for f in ids)
    unique = all(
        sum(
            1
            for b in idx
            if q.product(q.product(a, b), a) == a and q.product(q.product(b, a), b) == b
        )
        == 1
        for a in idx
    )
    id_set = set(ids)
    ids_closed = all(q.product(e, f) in id_set for e in ids for f in ids)
    orthodox = all_regular and ids_closed
    l_classes = green_oracle(q, "l").classes
    r_classes = green_oracle(q, "r").classes
    l_uni = all(len(id_set.intersection(c)) == 1 for c in l_classes)
    r_uni = all(len(id_set.intersection(c)) == 1 for c in r_classes)
    by_structure = all_regular and commute
    by_uniqueness = unique
    by_unipotence = orthodox and l_uni and r_uni
    consistent = by_structure == by_uniqueness == by_unipotence
    return InverseVerification(
        size=size,
        all_regular=all_regular,
        idempotents_commute=commute,
        unique_inverses=unique,
        orthodox=orthodox,
        l_unipotent=l_uni,
        r_unipotent=r_uni,
        inverse=by_structure,
        consistent=consistent,
    )
