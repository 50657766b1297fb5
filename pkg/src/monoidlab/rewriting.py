"""Presentations, oriented rewrite systems, normal forms, and completion.

Relations are oriented into rules that strictly decrease the shortlex
order (length first, then lexicographic by declaration order), so every
rewrite sequence terminates. Local confluence is decided by critical
pairs; together with termination that gives unique normal forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import AlphabetMismatch, NotConfluent, PresentationSyntaxError, WordSyntaxError
from .words import GENERATORS, Alphabet, Word, parse_word

Letters = tuple[int, ...]


@dataclass(frozen=True)
class Presentation:
    """A generator alphabet plus defining relations (unordered word pairs)."""

    generators: Alphabet
    relations: tuple[tuple[Word, Word], ...]

    def __post_init__(self):
        object.__setattr__(self, "relations", tuple(self.relations))
        if self.generators.kind != GENERATORS:
            raise ValueError("presentation needs a generator alphabet")
        for lhs, rhs in self.relations:
            if lhs.alphabet != self.generators or rhs.alphabet != self.generators:
                raise ValueError("relation words must be over the declared generators")


def parse_presentation(text: str) -> Presentation:
    """Parse the presentation file format.

    One ``generators:`` line, then ``relation: U = V`` lines, with words in
    word text format (``1`` for the empty word). ``#`` starts a comment.
    """
    generators: Alphabet | None = None
    relations: list[tuple[Word, Word]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("generators:"):
            if generators is not None:
                raise PresentationSyntaxError("duplicate generators line", lineno)
            names = line[len("generators:"):].split()
            try:
                # zero generators is legal and presents the trivial monoid
                generators = Alphabet(tuple(names), GENERATORS)
            except ValueError as exc:
                raise PresentationSyntaxError(str(exc), lineno) from None
        elif line.startswith("relation:"):
            if generators is None:
                raise PresentationSyntaxError("relation before generators line", lineno)
            body = line[len("relation:"):]
            if body.count("=") != 1:
                raise PresentationSyntaxError("relation needs exactly one '='", lineno)
            left, right = body.split("=")
            try:
                relations.append((parse_word(generators, left), parse_word(generators, right)))
            except WordSyntaxError as exc:
                raise PresentationSyntaxError(str(exc), lineno) from None
        else:
            raise PresentationSyntaxError(f"unrecognized line: {line!r}", lineno)
    if generators is None:
        raise PresentationSyntaxError("no generators line found")
    return Presentation(generators, tuple(relations))


@dataclass(frozen=True)
class RewriteRule:
    """An oriented rule lhs -> rhs with lhs strictly above rhs in shortlex."""

    lhs: Word
    rhs: Word

    def __post_init__(self):
        if self.lhs.alphabet != self.rhs.alphabet:
            raise ValueError("rule sides must share an alphabet")
        if not self.lhs.letters:
            raise ValueError("rule left-hand side must be nonempty")
        if self.lhs.key <= self.rhs.key:
            raise ValueError("rule must decrease the shortlex order")

    @property
    def text(self) -> str:
        return f"{self.lhs.text} -> {self.rhs.text}"


def _reduce(letters: Iterable[int], buckets, back: int) -> Letters:
    # Leftmost redex, lowest rule index first. After a rewrite at i the
    # leftmost new redex starts no earlier than i - (max lhs length - 1),
    # so rescanning from there preserves the leftmost strategy.
    buf = list(letters)
    n = len(buf)
    i = 0
    while i < n:
        for lhs, rhs, size in buckets[buf[i]]:
            j = i + size
            if j <= n and buf[i:j] == lhs:
                buf[i:j] = rhs
                n += len(rhs) - size
                i = i - back if i > back else 0
                break
        else:
            i += 1
    return tuple(buf)


def _make_buckets(alphabet_size: int, rules: Sequence[tuple[Letters, Letters]]):
    buckets: list[list[tuple[list[int], list[int], int]]] = [[] for _ in range(alphabet_size)]
    max_lhs = 1
    for lhs, rhs in rules:
        buckets[lhs[0]].append((list(lhs), list(rhs), len(lhs)))
        max_lhs = max(max_lhs, len(lhs))
    return buckets, max_lhs - 1


@dataclass(frozen=True)
class RewriteSystem:
    """An oriented, deterministic rule list derived from a presentation."""

    presentation: Presentation
    rules: tuple[RewriteRule, ...]
    warnings: tuple[str, ...] = ()

    @property
    def generators(self) -> Alphabet:
        return self.presentation.generators

    @cached_property
    def _engine(self):
        return _make_buckets(
            len(self.generators), [(r.lhs.letters, r.rhs.letters) for r in self.rules]
        )

    def reduce_letters(self, letters: Iterable[int]) -> Letters:
        if not self.rules:
            return tuple(letters)
        buckets, back = self._engine
        return _reduce(letters, buckets, back)


def orient(p: Presentation) -> RewriteSystem:
    """Orient each relation larger-side-to-smaller; drop trivial u = u pairs."""
    warnings: list[str] = []
    seen: set[tuple[Letters, Letters]] = set()
    rules: list[RewriteRule] = []
    for k, (left, right) in enumerate(p.relations, start=1):
        if left.letters == right.letters:
            warnings.append(f"relation {k} '{left.text} = {right.text}' is trivial; dropped")
            continue
        lhs, rhs = (left, right) if left.key > right.key else (right, left)
        pair = (lhs.letters, rhs.letters)
        if pair in seen:
            continue
        seen.add(pair)
        rules.append(RewriteRule(lhs, rhs))
    rules.sort(key=lambda r: (r.lhs.key, r.rhs.key))
    return RewriteSystem(p, tuple(rules), tuple(warnings))


def normal_form(rs: RewriteSystem, w: Word) -> Word:
    """The unique irreducible descendant of w (unique given confluence)."""
    if w.alphabet != rs.generators:
        raise AlphabetMismatch("word is not over the system's generator alphabet")
    return Word(rs.generators, rs.reduce_letters(w.letters))


@dataclass(frozen=True)
class CriticalPair:
    """A minimal peak with its two one-step descendants."""

    peak: Word
    left: Word
    right: Word
    resolved: bool


def critical_pairs(rs: RewriteSystem) -> list[CriticalPair]:
    """All rule overlaps, including self-overlaps and lhs-inside-lhs inclusions."""
    gens = rs.generators
    rules = [(r.lhs.letters, r.rhs.letters) for r in rs.rules]
    pairs: list[CriticalPair] = []

    def add(peak: Letters, left: Letters, right: Letters) -> None:
        resolved = rs.reduce_letters(left) == rs.reduce_letters(right)
        pairs.append(
            CriticalPair(Word(gens, peak), Word(gens, left), Word(gens, right), resolved)
        )

    for i, (l1, r1) in enumerate(rules):
        for j, (l2, r2) in enumerate(rules):
            # proper suffix of l1 meeting a proper prefix of l2
            for k in range(1, min(len(l1), len(l2))):
                if l1[-k:] == l2[:k]:
                    add(l1 + l2[k:], r1 + l2[k:], l1[:-k] + r2)
            # l2 occurring inside l1 (skip a rule fully overlapping itself)
            if len(l2) < len(l1) or (i != j and len(l2) == len(l1)):
                for pos in range(len(l1) - len(l2) + 1):
                    if l1[pos:pos + len(l2)] == l2:
                        add(l1, r1, l1[:pos] + r2 + l1[pos + len(l2):])
    return pairs


def is_locally_confluent(rs: RewriteSystem) -> tuple[bool, CriticalPair | None]:
    """True iff every critical pair resolves; else the first unresolved pair.

    Rules terminate, so local confluence implies global confluence and
    unique normal forms.
    """
    for cp in critical_pairs(rs):
        if not cp.resolved:
            return False, cp
    return True, None


def enumerate_normal_forms(rs: RewriteSystem, max_len: int) -> list[Word]:
    """All irreducible words of length <= max_len in shortlex order."""
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    ok, bad = is_locally_confluent(rs)
    if not ok:
        assert bad is not None
        raise NotConfluent(
            f"system is not confluent: peak '{bad.peak.text}' splits into "
            f"'{bad.left.text}' and '{bad.right.text}'"
        )
    gens = rs.generators
    lhss = [r.lhs.letters for r in rs.rules]
    words = [Word(gens)]
    level: list[Letters] = [()]
    for _ in range(max_len):
        nxt: list[Letters] = []
        for stem in level:
            for a in range(len(gens)):
                cand = stem + (a,)
                # a new redex must end at the final letter, so a suffix check suffices
                if any(cand[-len(l):] == l for l in lhss if len(l) <= len(cand)):
                    continue
                nxt.append(cand)
        level = nxt
        words.extend(Word(gens, t) for t in level)
    return words


@dataclass(frozen=True)
class CompletionResult:
    """Outcome of bounded completion: a system tagged complete or partial."""

    system: RewriteSystem
    complete: bool
    iterations: int
    notes: tuple[str, ...] = ()


def _key(t: Letters) -> tuple[int, Letters]:
    return (len(t), t)


def _reduce_with(pairs: Sequence[tuple[Letters, Letters]], size: int, letters: Letters) -> Letters:
    if not pairs:
        return letters
    buckets, back = _make_buckets(size, pairs)
    return _reduce(letters, buckets, back)


def _interreduce(pairs: set[tuple[Letters, Letters]], size: int) -> set[tuple[Letters, Letters]]:
    # Fixpoint: every lhs irreducible w.r.t. the other rules, every rhs fully reduced.
    changed = True
    while changed:
        changed = False
        for lhs, rhs in sorted(pairs, key=lambda p: (_key(p[0]), _key(p[1]))):
            rest = [p for p in pairs if p != (lhs, rhs)]
            new_lhs = _reduce_with(rest, size, lhs)
            new_rhs = _reduce_with(rest, size, rhs)
            if new_lhs == lhs and new_rhs == rhs:
                continue
            pairs.discard((lhs, rhs))
            changed = True
            if new_lhs != new_rhs:
                if _key(new_lhs) < _key(new_rhs):
                    new_lhs, new_rhs = new_rhs, new_lhs
                pairs.add((new_lhs, new_rhs))
            break
    return pairs


def knuth_bendix(
    p: Presentation, *, max_rules: int = 256, max_iterations: int = 100
) -> CompletionResult:
    """Bounded completion: resolve unresolved critical pairs into new rules.

    Under the total shortlex order every nontrivial derived equation is
    orientable, so the only partial outcomes are budget exhaustion.
    """
    oriented = orient(p)
    notes = list(oriented.warnings)
    size = len(p.generators)
    pairs = {(r.lhs.letters, r.rhs.letters) for r in oriented.rules}

    def build(current: set[tuple[Letters, Letters]]) -> RewriteSystem:
        gens = p.generators
        rules = tuple(
            sorted(
                (RewriteRule(Word(gens, l), Word(gens, r)) for l, r in current),
                key=lambda r: (r.lhs.key, r.rhs.key),
            )
        )
        return RewriteSystem(p, rules, tuple(notes))

    for iteration in range(max_iterations + 1):
        pairs = _interreduce(pairs, size)
        rs = build(pairs)
        unresolved = [cp for cp in critical_pairs(rs) if not cp.resolved]
        if not unresolved:
            return CompletionResult(rs, True, iteration, tuple(notes))
        if iteration == max_iterations:
            break
        for cp in unresolved:
            a = rs.reduce_letters(cp.left.letters)
            b = rs.reduce_letters(cp.right.letters)
            if a == b:
                continue
            if _key(a) < _key(b):
                a, b = b, a
            pairs.add((a, b))
            if len(pairs) > max_rules:
                notes.append(f"rule budget of {max_rules} exceeded")
                return CompletionResult(build(_interreduce(pairs, size)), False, iteration + 1, tuple(notes))
    notes.append(f"iteration budget of {max_iterations} exhausted")
    return CompletionResult(build(pairs), False, max_iterations, tuple(notes))
