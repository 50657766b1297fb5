"""Alphabets, words, letter counts, substitutions, and Zimin words.

A word is a sequence of indices into a fixed alphabet; the empty word is
the monoid identity and is written ``1`` in word text format. Declaration
order of the alphabet induces the lexicographic order used everywhere for
shortlex (length, then lex) comparisons. All values are immutable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, total_ordering
from itertools import chain
from typing import Iterable, Iterator, Mapping

from .errors import AlphabetMismatch, WordSyntaxError

GENERATORS = "generators"
VARIABLES = "variables"

_NAME_RE = re.compile(r"[A-Za-z0-9]+\Z")


@dataclass(frozen=True)
class Alphabet:
    """An ordered tuple of distinct symbol names plus a kind tag."""

    symbols: tuple[str, ...]
    kind: str = GENERATORS

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if self.kind not in (GENERATORS, VARIABLES):
            raise ValueError(f"unknown alphabet kind: {self.kind!r}")
        seen = set()
        for name in self.symbols:
            if not _NAME_RE.match(name):
                raise ValueError(f"bad symbol name: {name!r}")
            if name in seen:
                raise ValueError(f"duplicate symbol: {name!r}")
            seen.add(name)

    @cached_property
    def _positions(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.symbols)}

    def index(self, name: str) -> int:
        try:
            return self._positions[name]
        except KeyError:
            raise WordSyntaxError(f"symbol {name!r} is not in the alphabet") from None

    def __contains__(self, name: str) -> bool:
        return name in self._positions

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)


@total_ordering
@dataclass(frozen=True, slots=True)
class Word:
    """A finite (possibly empty) sequence of letters over one alphabet.

    Ordering is shortlex; ``u * v`` concatenates without any rewriting.
    """

    alphabet: Alphabet
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        size = len(self.alphabet)
        for i in self.letters:
            if not 0 <= i < size:
                raise ValueError(f"letter index {i} out of range for the alphabet")

    @classmethod
    def from_symbols(cls, alphabet: Alphabet, names: Iterable[str]) -> "Word":
        return cls(alphabet, tuple(alphabet.index(n) for n in names))

    @property
    def text(self) -> str:
        """Word text format: space-separated symbols, ``1`` for the empty word."""
        if not self.letters:
            return "1"
        names = self.alphabet.symbols
        return " ".join(names[i] for i in self.letters)

    def symbols(self) -> tuple[str, ...]:
        names = self.alphabet.symbols
        return tuple(names[i] for i in self.letters)

    @property
    def key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self.letters), self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return concat(self, other)

    def __lt__(self, other: "Word") -> bool:
        if self.alphabet != other.alphabet:
            raise AlphabetMismatch("cannot order words over different alphabets")
        return self.key < other.key

    def __repr__(self) -> str:
        return f"Word({self.text!r})"


def parse_word(alphabet: Alphabet, text: str) -> Word:
    """Parse word text format; a lone ``1`` is the empty word unless declared."""
    tokens = text.split()
    if not tokens:
        raise WordSyntaxError("empty word text (write '1' for the identity)")
    if tokens == ["1"] and "1" not in alphabet:
        return Word(alphabet)
    return Word.from_symbols(alphabet, tokens)


def concat(u: Word, v: Word) -> Word:
    if u.alphabet != v.alphabet:
        raise AlphabetMismatch("cannot concatenate words over different alphabets")
    return Word(u.alphabet, u.letters + v.letters)


@dataclass(frozen=True)
class ParikhVector:
    """Occurrence counts per alphabet symbol, aligned with declaration order."""

    alphabet: Alphabet
    counts: tuple[int, ...]

    def __getitem__(self, name: str) -> int:
        return self.counts[self.alphabet.index(name)]

    def as_dict(self) -> dict[str, int]:
        return dict(zip(self.alphabet.symbols, self.counts))

    def __add__(self, other: "ParikhVector") -> "ParikhVector":
        if self.alphabet != other.alphabet:
            raise AlphabetMismatch("cannot add counts over different alphabets")
        return ParikhVector(
            self.alphabet, tuple(a + b for a, b in zip(self.counts, other.counts))
        )


def parikh(w: Word) -> ParikhVector:
    counts = [0] * len(w.alphabet)
    for i in w.letters:
        counts[i] += 1
    return ParikhVector(w.alphabet, tuple(counts))


def is_balanced(u: Word, v: Word) -> bool:
    """True iff every symbol occurs equally often in both words."""
    if u.alphabet != v.alphabet:
        raise AlphabetMismatch("cannot compare counts over different alphabets")
    return parikh(u) == parikh(v)


def zimin_alphabet(n: int) -> Alphabet:
    return Alphabet(tuple(f"x{i}" for i in range(1, n + 1)), VARIABLES)


def zimin(n: int, variables: Alphabet | None = None) -> Word:
    """The n-th Zimin word: Z_1 = x1 and Z_{k+1} = Z_k x_{k+1} Z_k.

    Its length is 2**n - 1 and x_i occurs 2**(n-i) times. With no
    alphabet given, variables x1..xn are generated.
    """
    if n < 1:
        raise ValueError("zimin words are defined for n >= 1")
    if variables is None:
        variables = zimin_alphabet(n)
    elif len(variables) < n:
        raise ValueError(f"need at least {n} variables, got {len(variables)}")
    letters: tuple[int, ...] = (0,)
    for k in range(1, n):
        letters = letters + (k,) + letters
    return Word(variables, letters)


@dataclass(frozen=True)
class Substitution:
    """A total map from a variable alphabet to words over a target alphabet.

    Values may be empty words, so a variable can be erased (sent to 1).
    """

    domain: Alphabet
    values: tuple[Word, ...]
    target: Alphabet | None = None

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if self.domain.kind != VARIABLES:
            raise ValueError("substitution domain must be a variable alphabet")
        if len(self.values) != len(self.domain):
            raise ValueError("substitution must assign a word to every variable")
        target = self.target
        for w in self.values:
            if target is None:
                target = w.alphabet
            elif w.alphabet != target:
                raise AlphabetMismatch("substitution values use different alphabets")
        if target is None:
            raise ValueError("target alphabet required when the domain is empty")
        object.__setattr__(self, "target", target)

    @classmethod
    def of(
        cls,
        domain: Alphabet,
        mapping: Mapping[str, Word],
        target: Alphabet | None = None,
    ) -> "Substitution":
        missing = [n for n in domain.symbols if n not in mapping]
        if missing:
            raise ValueError(f"substitution misses variables: {', '.join(missing)}")
        extra = [n for n in mapping if n not in domain]
        if extra:
            raise ValueError(f"substitution has unknown variables: {', '.join(extra)}")
        return cls(domain, tuple(mapping[n] for n in domain.symbols), target)

    def value(self, name: str) -> Word:
        return self.values[self.domain.index(name)]

    def as_dict(self) -> dict[str, Word]:
        return dict(zip(self.domain.symbols, self.values))

    @property
    def text(self) -> str:
        return ",".join(f"{n}={w.text}" for n, w in zip(self.domain.symbols, self.values))

    def __repr__(self) -> str:
        return f"Substitution({self.text!r})"


def substitute(w: Word, s: Substitution) -> Word:
    """Replace every variable occurrence by its assigned word; no rewriting."""
    if w.alphabet != s.domain:
        raise AlphabetMismatch("word is not over the substitution's domain")
    values = s.values
    letters = tuple(chain.from_iterable(values[i].letters for i in w.letters))
    assert s.target is not None
    return Word(s.target, letters)
