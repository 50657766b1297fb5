"""Finite monoids materialized from confluent rewrite systems.

Elements are the normal-form words discovered by breadth-first closure
from the identity under right multiplication by generators; the Cayley
table stores products as element indices. Homomorphisms onto such
monoids are validated against every defining relation of their source.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Mapping

from .errors import AlphabetMismatch, BudgetExceeded, NotConfluent, RelationViolated
from .identities import Identity
from .rewriting import RewriteSystem, is_locally_confluent
from .words import Word

DEFAULT_ELEMENT_BUDGET = 10_000


@dataclass(frozen=True)
class FiniteMonoid:
    """Explicit element list (shortlex order, identity first) plus Cayley table."""

    elements: tuple[Word, ...]
    table: tuple[tuple[int, ...], ...]
    source: RewriteSystem

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> int:
        return 0

    @cached_property
    def _index(self) -> dict[tuple[int, ...], int]:
        return {w.letters: i for i, w in enumerate(self.elements)}

    def index_of(self, w: Word) -> int:
        """Index of the element represented by w (normalized first)."""
        if w.alphabet != self.source.generators:
            raise AlphabetMismatch("word is not over this monoid's generators")
        return self._index[self.source.reduce_letters(w.letters)]

    def multiply(self, i: int, j: int) -> int:
        return self.table[i][j]


def build_finite(rs: RewriteSystem, budget: int = DEFAULT_ELEMENT_BUDGET) -> FiniteMonoid:
    """Closure enumeration; raises BudgetExceeded past `budget` elements."""
    ok, bad = is_locally_confluent(rs)
    if not ok:
        assert bad is not None
        raise NotConfluent(
            f"cannot enumerate elements of a non-confluent system (peak '{bad.peak.text}')"
        )
    n_gens = len(rs.generators)
    seen: set[tuple[int, ...]] = {()}
    queue: deque[tuple[int, ...]] = deque([()])
    while queue:
        w = queue.popleft()
        for a in range(n_gens):
            nf = rs.reduce_letters(w + (a,))
            if nf not in seen:
                seen.add(nf)
                if len(seen) > budget:
                    raise BudgetExceeded(
                        f"element closure exceeded {budget}; the monoid may be infinite"
                    )
                queue.append(nf)
    ordered = sorted(seen, key=lambda t: (len(t), t))
    index = {t: i for i, t in enumerate(ordered)}
    table = tuple(
        tuple(index[rs.reduce_letters(u + v)] for v in ordered) for u in ordered
    )
    elements = tuple(Word(rs.generators, t) for t in ordered)
    return FiniteMonoid(elements, table, rs)


def idempotents(m: FiniteMonoid) -> tuple[Word, ...]:
    return tuple(m.elements[i] for i in range(m.order) if m.table[i][i] == i)


@dataclass(frozen=True)
class Homomorphism:
    """A validated generator map from a presented monoid onto a finite one."""

    source: RewriteSystem
    target: FiniteMonoid
    generator_images: tuple[int, ...]

    def image_index(self, letters: Iterable[int]) -> int:
        table = self.target.table
        images = self.generator_images
        cur = 0
        for a in letters:
            cur = table[cur][images[a]]
        return cur

    @property
    def map_text(self) -> str:
        gens = self.source.generators.symbols
        elems = self.target.elements
        return ",".join(f"{g}={elems[i].text}" for g, i in zip(gens, self.generator_images))


def make_hom(
    source: RewriteSystem, gmap: Mapping[str, Word], target: FiniteMonoid
) -> Homomorphism:
    """Extend a generator map to a homomorphism, checking every relation."""
    gens = source.generators
    missing = [g for g in gens.symbols if g not in gmap]
    if missing:
        raise ValueError(f"generator map misses: {', '.join(missing)}")
    extra = [g for g in gmap if g not in gens]
    if extra:
        raise ValueError(f"generator map has unknown generators: {', '.join(extra)}")
    images = tuple(target.index_of(gmap[g]) for g in gens.symbols)
    hom = Homomorphism(source, target, images)
    for lhs, rhs in source.presentation.relations:
        li = hom.image_index(lhs.letters)
        ri = hom.image_index(rhs.letters)
        if li != ri:
            raise RelationViolated(
                f"relation '{lhs.text} = {rhs.text}' maps to "
                f"'{target.elements[li].text}' != '{target.elements[ri].text}'"
            )
    return hom


def image(h: Homomorphism, w: Word) -> Word:
    """The target element (as its normal-form word) of a source word."""
    if w.alphabet != h.source.generators:
        raise AlphabetMismatch("word is not over the homomorphism's source generators")
    return h.target.elements[h.image_index(w.letters)]


def holds_in_finite(
    m: FiniteMonoid, ident: Identity
) -> tuple[bool, dict[str, Word] | None]:
    """Exhaustive model check; a counterexample is the lexicographically
    least assignment of elements (by index) to variables in declaration order."""
    names = ident.vars.symbols
    lhs = ident.lhs.letters
    rhs = ident.rhs.letters
    table = m.table
    for combo in product(range(m.order), repeat=len(names)):
        a = 0
        for v in lhs:
            a = table[a][combo[v]]
        b = 0
        for v in rhs:
            b = table[b][combo[v]]
        if a != b:
            return False, {n: m.elements[i] for n, i in zip(names, combo)}
    return True, None
