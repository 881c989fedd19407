"""Enumerated finite semigroups of chain maps, with cached product tables.

Families are enumerated by filtering all n^n image words, which guarantees no
element is missed and doubles as a closure oracle: building the product table
fails loudly if any product escapes the element set.
"""

from __future__ import annotations

from itertools import product as iter_product

import numpy as np

from .limits import check_family_size
from .maps import ChainMap, FamilyTag, compose, is_idempotent

__all__ = [
    "FiniteSemigroup",
    "enumerate_family",
    "subsemigroup",
    "idempotents",
    "regular_elements",
    "regular_subsemigroup",
    "generated_subsemigroup",
    "is_subsemigroup",
    "idempotents_commute",
    "is_orthodox",
    "is_inverse",
]

# Product tables are cached once size^2 fits this entry budget.
DEFAULT_TABLE_BUDGET = 64_000_000


class ClosureError(ValueError):
    """An element set claimed to be closed under composition is not."""


class FiniteSemigroup:
    """A closed, deterministically ordered set of chain maps under composition.

    Elements are sorted lexicographically by image word so that class
    numbering and reports are reproducible.  Instances are immutable after
    construction; the lazily built product table is write-once.
    """

    def __init__(self, n, family, elements, *, table_budget=DEFAULT_TABLE_BUDGET, check_closed=True):
        self.n = n
        self.family = family
        self.elements = tuple(sorted(set(elements)))
        if not self.elements:
            raise ValueError("a semigroup needs at least one element")
        for m in self.elements:
            if m.n != n:
                raise ValueError(f"element {m} lives on a chain of size {m.n}, not {n}")
        self._index = {m: i for i, m in enumerate(self.elements)}
        self._table_budget = table_budget
        self._table = None
        if check_closed:
            self._assert_closed()

    # -- basic container behaviour -------------------------------------

    @property
    def size(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, m):
        return m in self._index

    def __repr__(self):
        return f"FiniteSemigroup(family={self.family!r}, n={self.n}, size={self.size})"

    def index_of(self, m: ChainMap) -> int:
        try:
            return self._index[m]
        except KeyError:
            raise ValueError(f"{m} is not an element of this semigroup") from None

    # -- products --------------------------------------------------------

    def product(self, i: int, j: int) -> int:
        """Index of element_i composed-then element_j."""
        table = self.table()
        if table is not None:
            return int(table[i, j])
        ab = compose(self.elements[i], self.elements[j])
        try:
            return self._index[ab]
        except KeyError:
            raise ClosureError(
                f"product {self.elements[i]} * {self.elements[j]} = {ab} escapes the element set"
            ) from None

    def table(self):
        """The full product table, or None when it exceeds the entry budget."""
        if self._table is None and self.size * self.size <= self._table_budget:
            self._table = self._build_table()
        return self._table

    def _build_table(self):
        m, n = self.size, self.n
        words = np.array([e.images for e in self.elements], dtype=np.int64)
        weights = n ** np.arange(n - 1, -1, -1, dtype=np.int64)
        codes = (words - 1) @ weights  # ascending, since elements are sorted
        table = np.empty((m, m), dtype=np.int32)
        for j in range(m):
            right = words[j]
            composed = right[words - 1]  # row i = element_i then element_j
            ccodes = (composed - 1) @ weights
            idx = np.searchsorted(codes, ccodes)
            bad = (idx >= m) | (codes[np.minimum(idx, m - 1)] != ccodes)
            if bad.any():
                i = int(np.argmax(bad))
                ab = compose(self.elements[i], self.elements[j])
                raise ClosureError(
                    f"product {self.elements[i]} * {self.elements[j]} = {ab} escapes the element set"
                )
            table[:, j] = idx
        return table

    def _assert_closed(self):
        if self.family == "t" and self.size == self.n ** self.n:
            return  # the full family is closed by completeness
        if self.size * self.size <= self._table_budget:
            self.table()  # construction raises ClosureError on any escape
            return
        # Over budget for a cached table: same check, product by product.
        for i in range(self.size):
            for j in range(self.size):
                self.product(i, j)


def enumerate_family(family, n: int, *, table_budget=DEFAULT_TABLE_BUDGET) -> FiniteSemigroup:
    """All members of a family on the chain of size n, as a closed semigroup."""
    tag = FamilyTag.coerce(family)
    check_family_size(tag.value, n)
    members = [
        ChainMap(n, word)
        for word in iter_product(range(1, n + 1), repeat=n)
        if tag._word_member(word)
    ]
    return FiniteSemigroup(n, tag.value, members, table_budget=table_budget)


def subsemigroup(s: FiniteSemigroup, elements) -> FiniteSemigroup:
    """Wrap a subset of ``s`` as a semigroup of its own; fails if not closed."""
    elements = list(elements)
    for m in elements:
        s.index_of(m)
    try:
        return FiniteSemigroup(s.n, "custom", elements, table_budget=s._table_budget)
    except ClosureError as exc:
        raise ValueError(f"subset is not closed under composition: {exc}") from None


def idempotents(s: FiniteSemigroup) -> tuple[ChainMap, ...]:
    """All elements e with e*e = e."""
    return tuple(m for m in s.elements if is_idempotent(m))


def is_regular_in(s: FiniteSemigroup, m: ChainMap) -> bool:
    """True iff m = m*b*m for some witness b in s (single-element scan)."""
    a = s.index_of(m)
    return any(s.product(s.product(a, b), a) == a for b in range(s.size))


def regular_elements(s: FiniteSemigroup, subset=None) -> tuple[ChainMap, ...]:
    """Elements a with a*b*a = a for some witness b.

    With ``subset`` given, both a and the witness b range over the subset
    ("regular within"); otherwise over the whole semigroup.
    """
    if subset is None:
        pool = list(range(s.size))
    else:
        pool = [s.index_of(m) for m in subset]
    table = s.table()
    out = []
    if table is not None:
        pool_arr = np.array(pool, dtype=np.int32)
        for a in pool:
            # a*b for all b in pool, then *a again
            aba = table[table[a, pool_arr], a]
            if bool((aba == a).any()):
                out.append(s.elements[a])
    else:
        for a in pool:
            if any(s.product(s.product(a, b), a) == a for b in pool):
                out.append(s.elements[a])
    return tuple(out)


def regular_subsemigroup(family, n: int) -> FiniteSemigroup:
    """The regular elements of a family, wrapped as a semigroup.

    Raises if the regular elements fail to be closed (they are closed for the
    families handled here, but that fact is checked, not assumed).
    """
    s = enumerate_family(family, n)
    return subsemigroup(s, regular_elements(s))


def generated_subsemigroup(s: FiniteSemigroup, gens) -> FiniteSemigroup:
    """Closure of ``gens`` under composition, as a semigroup."""
    current = {s.elements[s.index_of(m)] for m in gens}
    if not current:
        raise ValueError("at least one generator is required")
    frontier = list(current)
    while frontier:
        fresh = []
        for a in frontier:
            for b in list(current):
                for prod_map in (compose(a, b), compose(b, a)):
                    if prod_map not in current:
                        current.add(prod_map)
                        fresh.append(prod_map)
        frontier = fresh
    return FiniteSemigroup(s.n, "custom", current, table_budget=s._table_budget)


def _subset_indices(s: FiniteSemigroup, subset) -> list[int]:
    idx = [s.index_of(m) for m in subset]
    if not idx:
        raise ValueError("subset must be nonempty")
    return idx


def is_subsemigroup(s: FiniteSemigroup, subset) -> bool:
    """True iff the subset is closed under the ambient product."""
    idx = _subset_indices(s, subset)
    pool = set(idx)
    return all(s.product(a, b) in pool for a in idx for b in idx)


def _require_closed(s: FiniteSemigroup, subset) -> list[int]:
    idx = _subset_indices(s, subset)
    pool = set(idx)
    for a in idx:
        for b in idx:
            if s.product(a, b) not in pool:
                raise ValueError(
                    f"subset is not closed: {s.elements[a]} * {s.elements[b]} escapes"
                )
    return idx


def idempotents_commute(s: FiniteSemigroup, subset) -> bool:
    """True iff e*f = f*e for all idempotents e, f of the subset."""
    idx = _subset_indices(s, subset)
    ids = [a for a in idx if s.product(a, a) == a]
    return all(s.product(e, f) == s.product(f, e) for e in ids for f in ids)


def is_orthodox(s: FiniteSemigroup, subset) -> bool:
    """True iff every subset element is regular within the subset and the
    subset's idempotents are closed under product."""
    idx = _require_closed(s, subset)
    for a in idx:
        if not any(s.product(s.product(a, b), a) == a for b in idx):
            return False
    ids = [a for a in idx if s.product(a, a) == a]
    for e in ids:
        for f in ids:
            ef = s.product(e, f)
            if s.product(ef, ef) != ef:
                return False
    return True


def _unique_inverse_counts(s: FiniteSemigroup, idx: list[int]) -> list[int]:
    counts = []
    for a in idx:
        c = 0
        for b in idx:
            if s.product(s.product(a, b), a) == a and s.product(s.product(b, a), b) == b:
                c += 1
        counts.append(c)
    return counts


def is_inverse(s: FiniteSemigroup, subset) -> bool:
    """True iff the subset is orthodox with commuting idempotents.

    The equivalent unique-inverse criterion is computed independently and the
    two verdicts are required to agree.
    """
    idx = _require_closed(s, subset)
    by_structure = is_orthodox(s, subset) and idempotents_commute(s, subset)
    by_uniqueness = all(c == 1 for c in _unique_inverse_counts(s, idx))
    if by_structure != by_uniqueness:
        raise RuntimeError(
            "inverse-semigroup criteria disagree (orthodox+commuting vs unique inverses); "
            "this indicates a bug in the product machinery"
        )
    return by_structure
