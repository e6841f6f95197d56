"""Reaction DSL parser.

One reaction per line:

    <complex> -> <complex> : <rate>
    <complex> <-> <complex> : <rate_fwd>, <rate_rev>

A complex is a `+`-separated list of terms `[coefficient]Species` (default
coefficient 1); a bare `0` is the empty complex. `#` starts a comment. A rate
is a positive number (integer, p/q, or decimal), a symbolic name, or an
inline binding `name = value`; binding the same name twice to different
values is an error, repeating the same value is fine.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import ParseError

_TERM_RE = re.compile(r"^(\d+)?\s*([A-Za-z_][A-Za-z0-9_]*)$")
_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")

Rate = Fraction | str


@dataclass(frozen=True)
class Reaction:
    source: int
    target: int
    rate: Rate


@dataclass(frozen=True)
class Network:
    species: tuple[str, ...]
    complexes: tuple[tuple[int, ...], ...]  # rows of Y^T: one vector per complex
    reactions: tuple[Reaction, ...]
    bindings: dict = field(default_factory=dict)  # inline name -> Fraction

    @property
    def n_species(self) -> int:
        return len(self.species)

    @property
    def n_complexes(self) -> int:
        return len(self.complexes)

    def complex_label(self, index: int) -> str:
        vec = self.complexes[index]
        bits = []
        for coeff, name in zip(vec, self.species):
            if coeff == 0:
                continue
            bits.append(name if coeff == 1 else f"{coeff}{name}")
        return " + ".join(bits) if bits else "0"


def _parse_complex(text: str, line: int) -> dict:
    text = text.strip()
    if not text:
        raise ParseError("empty complex", line)
    if text == "0":
        return {}
    counts: dict = {}
    for raw in text.split("+"):
        term = raw.strip()
        m = _TERM_RE.match(term)
        if not m:
            raise ParseError(f"bad complex term {term!r}", line)
        coeff = int(m.group(1)) if m.group(1) else 1
        if coeff == 0:
            raise ParseError(f"zero stoichiometric coefficient in {term!r}", line)
        name = m.group(2)
        counts[name] = counts.get(name, 0) + coeff
    return counts


def _parse_rate(token: str, line: int, bindings: dict) -> Rate:
    token = token.strip()
    if "=" in token:
        name, _, value = token.partition("=")
        name, value = name.strip(), value.strip()
        if not _NAME_RE.match(name):
            raise ParseError(f"bad rate name {name!r}", line)
        bound = _parse_rate(value, line, bindings)
        if isinstance(bound, str):
            raise ParseError(f"binding for {name!r} must be numeric", line)
        if name in bindings and bindings[name] != bound:
            raise ParseError(
                f"duplicate rate name {name!r} with conflicting value "
                f"({bindings[name]} vs {bound})",
                line,
            )
        bindings[name] = bound
        return name
    if _NAME_RE.match(token):
        return token
    try:
        value = Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad rate {token!r}", line) from None
    if value <= 0:
        raise ParseError(f"rate must be positive, got {token}", line)
    return value


def parse_network(text: str) -> Network:
    """Parse DSL text; species and complexes keep first-appearance order."""
    species: list[str] = []
    raw_reactions: list[tuple[dict, dict, Rate, int]] = []
    bindings: dict = {}

    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        stripped = raw_line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if ":" not in stripped:
            raise ParseError("expected '<complex> -> <complex> : <rate>'", lineno)
        head, _, rate_part = stripped.rpartition(":")
        reversible = "<->" in head
        arrow = "<->" if reversible else "->"
        sides = head.split(arrow)
        if len(sides) != 2:
            raise ParseError(f"expected exactly one {arrow!r}", lineno)
        lhs = _parse_complex(sides[0], lineno)
        rhs = _parse_complex(sides[1], lineno)
        for counts in (lhs, rhs):
            for name in counts:
                if name not in species:
                    species.append(name)
        rate_tokens = [t for t in rate_part.split(",")]
        if reversible:
            if len(rate_tokens) != 2:
                raise ParseError("reversible reaction needs 'fwd, rev' rates", lineno)
            fwd = _parse_rate(rate_tokens[0], lineno, bindings)
            rev = _parse_rate(rate_tokens[1], lineno, bindings)
            raw_reactions.append((lhs, rhs, fwd, lineno))
            raw_reactions.append((rhs, lhs, rev, lineno))
        else:
            if len(rate_tokens) != 1:
                raise ParseError("expected a single rate", lineno)
            rate = _parse_rate(rate_tokens[0], lineno, bindings)
            raw_reactions.append((lhs, rhs, rate, lineno))

    if not raw_reactions:
        raise ParseError("no reactions found", None)

    complexes: list[tuple[int, ...]] = []
    index: dict = {}

    def complex_index(counts: dict, line: int) -> int:
        vec = tuple(counts.get(name, 0) for name in species)
        if vec not in index:
            index[vec] = len(complexes)
            complexes.append(vec)
        return index[vec]

    reactions: list[Reaction] = []
    for lhs, rhs, rate, lineno in raw_reactions:
        src = complex_index(lhs, lineno)
        tgt = complex_index(rhs, lineno)
        if src == tgt:
            raise ParseError("loop reaction (source equals target)", lineno)
        reactions.append(Reaction(src, tgt, rate))

    return Network(tuple(species), tuple(complexes), tuple(reactions), bindings)
