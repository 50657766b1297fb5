"""Kernel-congruence analysis of a homomorphism onto a finite quotient.

The kernel classes are preimages of target elements. A class is a
subsemigroup exactly when its image is idempotent, and those are the
classes whose commutativity matters for membership in the product
"commutative-by-finite": quotient finite, subsemigroup classes
commutative. The checks here are bounded and every report says so.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import PatternError, WordSyntaxError
from .finite import FiniteMonoid, Homomorphism, make_hom
from .rewriting import RewriteSystem, enumerate_normal_forms
from .words import Alphabet, Word, parse_word

_PATTERN_RE = re.compile(
    r"(?:(?P<pre>[A-Za-z0-9]+)\s+)?"
    r"\(\s*(?P<p>[A-Za-z0-9]+)\s+(?P<q>[A-Za-z0-9]+)\s*\)\s*\^\s*k"
    r"(?:\s+(?P<suf>[A-Za-z0-9]+))?\Z"
)


@dataclass(frozen=True)
class KernelClass:
    """One target element with its (bounded) set of source-word preimages."""

    quotient_element: Word
    quotient_index: int
    is_idempotent: bool
    members: tuple[Word, ...]


def classify(h: Homomorphism, max_len: int) -> tuple[KernelClass, ...]:
    """Partition the irreducible source words of length <= max_len by image."""
    words = enumerate_normal_forms(h.source, max_len)
    buckets: dict[int, list[Word]] = {i: [] for i in range(h.target.order)}
    for w in words:
        buckets[h.image_index(w.letters)].append(w)
    table = h.target.table
    return tuple(
        KernelClass(h.target.elements[i], i, table[i][i] == i, tuple(buckets[i]))
        for i in range(h.target.order)
    )


@dataclass(frozen=True)
class ClassDescriptor:
    """A claimed shape for one kernel class.

    Either a singleton word, or a parametric family ``(p q)^k`` with at
    most one extra symbol at one end (covering ``(p q)^k p`` and
    ``q (p q)^k``), with k >= 0 or k > 0.
    """

    image: Word
    singleton: Word | None = None
    p: int | None = None
    q: int | None = None
    leading: int | None = None
    trailing: int | None = None
    k_min: int = 0

    def instances(self, source: Alphabet, max_len: int) -> list[Word]:
        if self.singleton is not None:
            return [self.singleton] if len(self.singleton) <= max_len else []
        assert self.p is not None and self.q is not None
        out: list[Word] = []
        k = self.k_min
        while True:
            letters: tuple[int, ...] = ()
            if self.leading is not None:
                letters += (self.leading,)
            letters += (self.p, self.q) * k
            if self.trailing is not None:
                letters += (self.trailing,)
            if len(letters) > max_len:
                break
            out.append(Word(source, letters))
            k += 1
        return out


def parse_descriptor(text: str, source: Alphabet, target: Alphabet) -> ClassDescriptor:
    """Parse the descriptor text format.

    ``class <elementWord>: singleton <word>`` or
    ``class <elementWord>: pattern <shape>, k>=0|k>0``.
    The element word is over the quotient's generators, the shape over
    the source's.
    """
    body = text.strip()
    if not body.startswith("class "):
        raise PatternError(f"descriptor must start with 'class ': {text!r}")
    body = body[len("class "):]
    if ":" not in body:
        raise PatternError(f"descriptor needs ':' after the class element: {text!r}")
    element_text, rest = body.split(":", 1)
    image = parse_word(target, element_text)
    rest = rest.strip()
    if rest.startswith("singleton "):
        return ClassDescriptor(image, singleton=parse_word(source, rest[len("singleton "):]))
    if not rest.startswith("pattern "):
        raise PatternError(f"descriptor body must be 'singleton' or 'pattern': {text!r}")
    rest = rest[len("pattern "):]
    if "," not in rest:
        raise PatternError(f"pattern needs a k-range ('k>=0' or 'k>0'): {text!r}")
    shape, krange = rest.rsplit(",", 1)
    krange = krange.replace(" ", "")
    if krange == "k>=0":
        k_min = 0
    elif krange == "k>0":
        k_min = 1
    else:
        raise PatternError(f"unknown k-range {krange!r}")
    m = _PATTERN_RE.match(shape.strip())
    if not m:
        raise PatternError(f"unrecognized pattern shape: {shape.strip()!r}")
    if m.group("pre") and m.group("suf"):
        raise PatternError("pattern may have a leading or a trailing symbol, not both")
    try:
        p, q = source.index(m.group("p")), source.index(m.group("q"))
        leading = source.index(m.group("pre")) if m.group("pre") else None
        trailing = source.index(m.group("suf")) if m.group("suf") else None
    except WordSyntaxError as exc:
        raise PatternError(str(exc)) from None
    return ClassDescriptor(image, p=p, q=q, leading=leading, trailing=trailing, k_min=k_min)


def match_class_descriptors(
    h: Homomorphism, max_len: int, descriptors: list[ClassDescriptor]
) -> bool:
    """True iff, up to max_len, each described class equals the union of
    its descriptors' instances. Several descriptors may share an image."""
    classes = {c.quotient_index: c for c in classify(h, max_len)}
    source = h.source.generators
    claimed: dict[int, set[tuple[int, ...]]] = {}
    for d in descriptors:
        idx = h.target.index_of(d.image)
        bucket = claimed.setdefault(idx, set())
        bucket.update(w.letters for w in d.instances(source, max_len))
    for idx, instance_set in claimed.items():
        members = {w.letters for w in classes[idx].members}
        if members != instance_set:
            return False
    return True


@dataclass(frozen=True)
class CommutativityVerdict:
    """Bounded pairwise commutativity check of one kernel class."""

    element: Word
    bound: int
    members_checked: int
    commutative: bool
    counterexample: tuple[Word, Word] | None


def class_commutative(h: Homomorphism, q: Word, max_len: int) -> CommutativityVerdict:
    """Check nf(uv) = nf(vu) for all class members up to the bound; the
    reported violation is least in the (u, v) pair order."""
    idx = h.target.index_of(q)
    if h.target.table[idx][idx] != idx:
        raise ValueError(
            f"class of '{h.target.elements[idx].text}' is not a subsemigroup "
            "(its image is not idempotent)"
        )
    members = [
        w
        for w in enumerate_normal_forms(h.source, max_len)
        if h.image_index(w.letters) == idx
    ]
    reduce = h.source.reduce_letters
    for i, u in enumerate(members):
        for v in members[i:]:
            uv = reduce(u.letters + v.letters)
            vu = reduce(v.letters + u.letters)
            # closure sanity: a product of class members stays in the class
            assert h.image_index(uv) == idx
            if uv != vu:
                return CommutativityVerdict(
                    h.target.elements[idx], max_len, len(members), False, (u, v)
                )
    return CommutativityVerdict(h.target.elements[idx], max_len, len(members), True, None)


@dataclass(frozen=True)
class MalcevReport:
    """Evidence that a monoid is commutative-by-finite via one quotient.

    PASS means the generator map is a homomorphism and every idempotent
    kernel class is commutative up to the bound; the classes are
    typically infinite, so this is bounded evidence, not a proof.
    """

    hom: Homomorphism
    bound: int
    verdicts: tuple[CommutativityVerdict, ...]
    unchecked: tuple[Word, ...]
    counterexample: tuple[Word, Word, Word] | None

    @property
    def status(self) -> str:
        return "FAIL" if self.counterexample else "PASS"


def malcev_com_fin_evidence(
    source: RewriteSystem,
    target: FiniteMonoid,
    gmap,
    max_len: int,
) -> MalcevReport:
    """Compose hom validation, kernel classification, and per-class
    commutativity checks over all idempotent classes."""
    h = make_hom(source, gmap, target)
    verdicts: list[CommutativityVerdict] = []
    unchecked: list[Word] = []
    counterexample = None
    for cls in classify(h, max_len):
        if not cls.is_idempotent:
            unchecked.append(cls.quotient_element)
            continue
        verdict = class_commutative(h, cls.quotient_element, max_len)
        verdicts.append(verdict)
        if not verdict.commutative and counterexample is None:
            assert verdict.counterexample is not None
            u, v = verdict.counterexample
            counterexample = (cls.quotient_element, u, v)
    return MalcevReport(h, max_len, tuple(verdicts), tuple(unchecked), counterexample)
