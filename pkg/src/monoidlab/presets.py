"""Built-in presentations.

``j-inf``, ``d-inf``, ``k-inf`` are the free products of two two-element
monoids (idempotent*idempotent, group*group, idempotent*group). ``t`` is
the six-element quotient used for the kernel analysis of ``k-inf``,
``i2c3`` feeds the free-pair check, and ``c2`` is the two-element group
used as the quotient of ``d-inf``.
"""

from __future__ import annotations

from .rewriting import Presentation, RewriteSystem, orient, parse_presentation

PRESET_TEXTS: dict[str, str] = {
    "j-inf": """\
generators: e f
relation: e e = e
relation: f f = f
""",
    "d-inf": """\
generators: a b
relation: a a = 1
relation: b b = 1
""",
    "k-inf": """\
generators: e b
relation: e e = e
relation: b b = 1
""",
    "t": """\
generators: f g
relation: f f = f
relation: f g f = f
relation: g g = 1
""",
    "i2c3": """\
generators: e g
relation: e e = e
relation: g g g = 1
""",
    "c2": """\
generators: c
relation: c c = 1
""",
}


def preset_names() -> tuple[str, ...]:
    return tuple(PRESET_TEXTS)


def load_presentation(name: str) -> Presentation:
    try:
        text = PRESET_TEXTS[name]
    except KeyError:
        known = ", ".join(PRESET_TEXTS)
        raise KeyError(f"unknown preset {name!r} (known: {known})") from None
    return parse_presentation(text)


def load_system(name: str) -> RewriteSystem:
    return orient(load_presentation(name))
