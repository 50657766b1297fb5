"""Identities over variable alphabets and bounded counterexample search.

An identity u = v holds in a monoid if every substitution of elements
for variables equates the two sides. Against a rewrite system we get a
semi-decision: enumerate substitutions whose values are irreducible
words up to a length bound and compare normal forms. Isoterm checking
restricts rival words to those with the target's letter counts, because
an unbalanced rival already fails in any free cyclic subsemigroup
(additively, the nonnegative integers).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import chain, product
from typing import Iterator, Mapping

from .errors import AlphabetMismatch, IdentitySyntaxError
from .rewriting import RewriteSystem, enumerate_normal_forms
from .words import (
    VARIABLES,
    Alphabet,
    Substitution,
    Word,
    is_balanced,
    substitute,
    zimin,
)

DEFAULT_IDENTITY_BOUND = 3
DEFAULT_ISOTERM_BOUND = 2


@dataclass(frozen=True)
class Identity:
    """An ordered pair of words over one variable alphabet."""

    vars: Alphabet
    lhs: Word
    rhs: Word

    def __post_init__(self):
        if self.vars.kind != VARIABLES:
            raise ValueError("identities are written over a variable alphabet")
        if self.lhs.alphabet != self.vars or self.rhs.alphabet != self.vars:
            raise ValueError("identity sides must be over the declared variables")

    @property
    def trivial(self) -> bool:
        return self.lhs.letters == self.rhs.letters

    @property
    def text(self) -> str:
        return f"{self.lhs.text} = {self.rhs.text}"


def parse_identity(text: str) -> Identity:
    """Parse ``U = V``; variables are inferred in order of first appearance."""
    if text.count("=") != 1:
        raise IdentitySyntaxError(f"identity needs exactly one '=': {text!r}")
    left, right = text.split("=")
    sides = []
    names: list[str] = []
    for part in (left, right):
        tokens = part.split()
        if not tokens:
            raise IdentitySyntaxError("empty identity side (write '1' for the empty word)")
        if tokens == ["1"]:
            sides.append([])
            continue
        if "1" in tokens:
            raise IdentitySyntaxError("'1' denotes the empty word and cannot be a variable")
        for t in tokens:
            if t not in names:
                names.append(t)
        sides.append(tokens)
    variables = Alphabet(tuple(names), VARIABLES)
    lhs, rhs = (Word.from_symbols(variables, s) for s in sides)
    return Identity(variables, lhs, rhs)


def evaluate(rs: RewriteSystem, ident: Identity, s: Substitution) -> tuple[Word, Word]:
    """Normal forms of both sides under a substitution into the generators."""
    if s.target != rs.generators:
        raise AlphabetMismatch("substitution does not land in the system's generators")
    lhs = substitute(ident.lhs, s)
    rhs = substitute(ident.rhs, s)
    return (
        Word(rs.generators, rs.reduce_letters(lhs.letters)),
        Word(rs.generators, rs.reduce_letters(rhs.letters)),
    )


def _flatten(side: tuple[int, ...], values: tuple[Word, ...]) -> tuple[int, ...]:
    return tuple(chain.from_iterable(values[i].letters for i in side))


def _scan_for_witness(
    rs: RewriteSystem, ident: Identity, domain: list[Word]
) -> tuple[Substitution | None, int]:
    # Assignments run in lexicographic order: variables in declaration
    # order, values in shortlex order, so the first hit is the least witness.
    names = ident.vars
    lhs = ident.lhs.letters
    rhs = ident.rhs.letters
    reduce = rs.reduce_letters
    searched = 0
    for values in product(domain, repeat=len(names)):
        searched += 1
        if reduce(_flatten(lhs, values)) != reduce(_flatten(rhs, values)):
            return Substitution(names, values, rs.generators), searched
    return None, searched


def find_witness(
    rs: RewriteSystem, ident: Identity, max_sub_len: int
) -> Substitution | None:
    """Least substitution (irreducible values of length <= max_sub_len,
    the empty word included) separating the two sides, if any."""
    if max_sub_len < 0:
        raise ValueError("max_sub_len must be nonnegative")
    domain = enumerate_normal_forms(rs, max_sub_len)
    witness, _ = _scan_for_witness(rs, ident, domain)
    return witness


@dataclass(frozen=True)
class Verdict:
    """Bounded search outcome: a re-checkable witness or exhaustion."""

    failed: bool
    witness: Substitution | None
    bound: int
    searched: int

    @property
    def status(self) -> str:
        if self.failed:
            assert self.witness is not None
            return f"FAILS {self.witness.text}"
        return f"NO-WITNESS-UP-TO {self.bound}"


def check_identity(rs: RewriteSystem, ident: Identity, max_sub_len: int) -> Verdict:
    if max_sub_len < 0:
        raise ValueError("max_sub_len must be nonnegative")
    domain = enumerate_normal_forms(rs, max_sub_len)
    witness, searched = _scan_for_witness(rs, ident, domain)
    return Verdict(witness is not None, witness, max_sub_len, searched)


def naturals_value(w: Word, assignment: Mapping[str, int]) -> int:
    """Value of a word in the additive monoid of nonnegative integers."""
    names = w.alphabet.symbols
    return sum(assignment[names[i]] for i in w.letters)


def holds_in_naturals(ident: Identity) -> bool:
    """True iff the identity holds in (N, +, 0); equivalently, it is balanced."""
    return is_balanced(ident.lhs, ident.rhs)


def balanced_candidates(target: Word) -> Iterator[Word]:
    """All words with the target's letter counts, streamed in lexicographic
    order (they share a length, so shortlex and lex agree). Contains the
    target; the count is the multinomial of its letter multiplicities."""
    current = sorted(target.letters)
    alphabet = target.alphabet
    if not current:
        yield Word(alphabet)
        return
    n = len(current)
    while True:
        yield Word(alphabet, tuple(current))
        i = n - 2
        while i >= 0 and current[i] >= current[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while current[j] <= current[i]:
            j -= 1
        current[i], current[j] = current[j], current[i]
        current[i + 1:] = reversed(current[i + 1:])


@dataclass(frozen=True)
class IsotermReport:
    """Outcome of checking that no balanced rival equals the target.

    The candidate space is restricted to balanced rivals: an unbalanced
    identity already fails in a free cyclic subsemigroup of the monoid
    (assumed present; recorded, not verified).
    """

    target: Word
    bound: int
    candidates_total: int
    refuted: tuple[tuple[Word, Substitution], ...]
    unresolved: tuple[Word, ...]
    candidate_space: str = field(default="balanced rivals only", compare=False)

    @property
    def is_isoterm(self) -> bool:
        return not self.unresolved

    @property
    def status(self) -> str:
        return "Isoterm" if self.is_isoterm else "Inconclusive"


def _isoterm_scan(
    rs: RewriteSystem,
    target: Word,
    max_sub_len: int,
    fast_subs: tuple[Substitution, ...] = (),
) -> IsotermReport:
    domain = enumerate_normal_forms(rs, max_sub_len)
    reduce = rs.reduce_letters
    # the target side under each canonical substitution is fixed; hoist it
    fast = [
        (sub, sub.values, reduce(_flatten(target.letters, sub.values)))
        for sub in fast_subs
    ]
    refuted: list[tuple[Word, Substitution]] = []
    unresolved: list[Word] = []
    total = 0
    target_letters = target.letters
    for cand in balanced_candidates(target):
        if cand.letters == target_letters:
            continue
        total += 1
        witness: Substitution | None = None
        for sub, values, target_image in fast:
            if reduce(_flatten(cand.letters, values)) != target_image:
                witness = sub
                break
        if witness is None:
            witness, _ = _scan_for_witness(
                rs, Identity(target.alphabet, target, cand), domain
            )
        if witness is None:
            unresolved.append(cand)
        else:
            refuted.append((cand, witness))
    return IsotermReport(target, max_sub_len, total, tuple(refuted), tuple(unresolved))


def isoterm_check(rs: RewriteSystem, target: Word, max_sub_len: int) -> IsotermReport:
    """Try to refute every balanced rival of the target by witness search."""
    return _isoterm_scan(rs, target, max_sub_len)


def _canonical_pq(rs: RewriteSystem) -> tuple[int, int] | None:
    # p: first generator whose square rewrites to itself or to the empty
    # word (idempotent or involution); q: first other generator.
    gens = rs.generators
    if len(gens) < 2:
        return None
    p = None
    for g in range(len(gens)):
        for rule in rs.rules:
            if rule.lhs.letters == (g, g) and rule.rhs.letters in ((g,), ()):
                p = g
                break
        if p is not None:
            break
    if p is None:
        p = 0
    q = 1 if p == 0 else 0
    return p, q


def zimin_isoterm_check(rs: RewriteSystem, n: int, max_sub_len: int) -> IsotermReport:
    """Isoterm check for the n-th Zimin word with a fast path.

    Before general enumeration each rival is tried against two canonical
    substitutions: erase x1 and map the remaining variables to the two
    chosen generators, and map x1 to the idempotent-like generator with
    every other variable to the second one. A rival with two adjacent x1
    occurrences loses a letter to the square relation under the latter,
    so its value cannot match the alternating value of the Zimin word.
    """
    target = zimin(n)
    variables = target.alphabet
    fast_subs: list[Substitution] = []
    pq = _canonical_pq(rs)
    if pq is not None:
        p, q = pq
        gens = rs.generators
        p_word = Word(gens, (p,))
        q_word = Word(gens, (q,))
        if n >= 2:
            erased = (Word(gens), p_word) + (q_word,) * (n - 2)
            fast_subs.append(Substitution(variables, erased))
        fast_subs.append(Substitution(variables, (p_word,) + (q_word,) * (n - 1)))
    return _isoterm_scan(rs, target, max_sub_len, tuple(fast_subs))


@dataclass(frozen=True)
class FreePairResult:
    """Whether all short products of two elements are pairwise distinct."""

    free: bool
    products_checked: int
    collision: tuple[Word, Word] | None
    collision_choices: tuple[tuple[int, ...], tuple[int, ...]] | None

    def choices_text(self) -> tuple[str, str] | None:
        if self.collision_choices is None:
            return None
        return tuple(
            " ".join("uv"[c] for c in choices) for choices in self.collision_choices
        )  # type: ignore[return-value]


def free_pair_check(rs: RewriteSystem, u: Word, v: Word, max_len: int) -> FreePairResult:
    """True iff the 2 + 4 + ... + 2**max_len products of u and v have
    pairwise distinct normal forms; else the least colliding pair of
    products (ordered by factor count, then u-before-v)."""
    if u.alphabet != rs.generators or v.alphabet != rs.generators:
        raise AlphabetMismatch("pair words must be over the system's generators")
    if not u.letters or not v.letters:
        raise ValueError("pair words must be nonempty")
    if u.letters == v.letters:
        raise ValueError("pair words must be distinct")
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    factors = (u.letters, v.letters)
    by_nf: dict[tuple[int, ...], list[tuple[tuple[int, ...], tuple[int, ...]]]] = {}
    checked = 0
    for length in range(1, max_len + 1):
        for choices in product((0, 1), repeat=length):
            checked += 1
            prod = tuple(chain.from_iterable(factors[c] for c in choices))
            by_nf.setdefault(rs.reduce_letters(prod), []).append((choices, prod))
    best = None
    for group in by_nf.values():
        if len(group) < 2:
            continue
        pair = (group[0], group[1])
        pair_key = (
            (len(pair[0][0]), pair[0][0]),
            (len(pair[1][0]), pair[1][0]),
        )
        if best is None or pair_key < best[0]:
            best = (pair_key, pair)
    if best is None:
        return FreePairResult(True, checked, None, None)
    (first, second) = best[1]
    gens = rs.generators
    return FreePairResult(
        False,
        checked,
        (Word(gens, first[1]), Word(gens, second[1])),
        (first[0], second[0]),
    )
