"""Parser for the ideal input grammar.

Generators are separated by commas or newlines; a generator is a product of
`*`-separated factors; a factor is an identifier with an optional positive
power, e.g. ``x1*x2^3``.  Whitespace is insignificant.  The variable universe
is first-appearance order unless an explicit list is given (which may include
unused variables; those still count toward n).
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError
from .polarization import MonomialIdeal

# the skip prefix must not eat newlines: they separate generators
_TOKEN = re.compile(
    r"[^\S\n]*(?:(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<power>\^)|(?P<times>\*)"
    r"|(?P<sep>[,\n])|(?P<int>\d+))"
)


def _tokens(text: str):
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            rest = text[pos:]
            stripped = rest.lstrip()
            if not stripped:
                return
            raise ParseError(
                f"unexpected character {stripped[0]!r}",
                pos + len(rest) - len(stripped),
            )
        pos = match.end()
        kind = match.lastgroup
        if kind is not None:
            yield kind, match.group(kind), match.start(kind)
    return


def parse_ideal(text: str, variables=None) -> MonomialIdeal:
    """Parse ideal text into a monomial ideal.

    ``variables`` fixes the universe and its order; names outside it are
    rejected.  Redundant generators (divisible by another) are dropped by the
    MonomialIdeal constructor; callers who care can compare generator counts.
    """
    order: list[str] = list(variables) if variables is not None else []
    fixed = variables is not None
    seen = set(order)
    if fixed and len(seen) != len(order):
        raise ParseError("duplicate name in explicit variable list")

    raw: list[dict[str, int]] = []
    current: dict[str, int] | None = None
    expect = "factor"  # factor | power_int | after_factor
    pending_name = None

    for kind, value, pos in _tokens(text):
        if expect == "power_int":
            if kind != "int":
                raise ParseError("expected an integer exponent after '^'", pos)
            e = int(value)
            if e < 1:
                raise ParseError("exponent must be a positive integer", pos)
            current[pending_name] = current.get(pending_name, 0) + e
            pending_name = None
            expect = "after_factor"
            continue
        if kind == "name":
            if expect != "factor":
                raise ParseError("missing '*' or ',' before name", pos)
            if fixed and value not in seen:
                raise ParseError(f"unknown variable {value!r}", pos)
            if not fixed and value not in seen:
                seen.add(value)
                order.append(value)
            if current is None:
                current = {}
            pending_name = value
            expect = "maybe_power"
        elif kind == "power":
            if expect != "maybe_power":
                raise ParseError("'^' must follow a variable", pos)
            expect = "power_int"
        elif kind == "times":
            if expect not in ("maybe_power", "after_factor"):
                raise ParseError("'*' must follow a factor", pos)
            if expect == "maybe_power":
                current[pending_name] = current.get(pending_name, 0) + 1
                pending_name = None
            expect = "factor"
        elif kind == "sep":
            if expect == "factor" and current is None:
                continue  # tolerate leading/duplicate separators
            if expect == "maybe_power":
                current[pending_name] = current.get(pending_name, 0) + 1
                pending_name = None
            elif expect != "after_factor":
                raise ParseError("dangling '*' before separator", pos)
            raw.append(current)
            current = None
            expect = "factor"
        elif kind == "int":
            raise ParseError("bare integer is not a monomial", pos)

    if expect == "power_int":
        raise ParseError("unterminated '^' at end of input")
    if expect == "maybe_power":
        current[pending_name] = current.get(pending_name, 0) + 1
        raw.append(current)
    elif expect == "after_factor":
        raw.append(current)
    elif current is not None:
        raise ParseError("dangling '*' at end of input")

    if not raw:
        raise ParseError("empty input: no generators")

    index = {name: i for i, name in enumerate(order)}
    n = len(order)
    gens = []
    for mono in raw:
        vec = [0] * n
        for name, e in mono.items():
            vec[index[name]] = e
        gens.append(tuple(vec))
    return MonomialIdeal(n, gens, tuple(order))


@dataclass(frozen=True)
class IdealSource:
    """Raw input text together with what it parsed to."""

    text: str
    ideal: MonomialIdeal

    @classmethod
    def from_text(cls, text: str, variables=None) -> "IdealSource":
        return cls(text=text, ideal=parse_ideal(text, variables=variables))

    @property
    def dropped_generators(self) -> int:
        """How many input generators were divisibility-redundant."""
        pieces = [p for p in re.split(r"[,\n]", self.text) if p.strip()]
        return len(pieces) - len(self.ideal.gens)
