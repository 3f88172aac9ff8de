"""Elements of the ordered group Q + Q*t, plus infinity.

Here t denotes a fixed positive infinitesimal: 0 < t < q for every
positive rational q.  A finite element is stored as a pair (r, s) of
Fractions meaning r + s*t, and the order is lexicographic on (r, s).
Infinity compares above everything and absorbs addition.

These elements carry all values produced by valuation chains: rational
values have s == 0, and s != 0 only ever appears in the final level of a
value-transcendental chain.

Values print as ``3/2``, ``3/2 + 1/2t``, ``-1 - 2t`` or ``inf``, and
``Value.parse`` accepts the same forms (whitespace around ``t`` is
ignored, so the chain-file spelling ``3/2 + 1 t`` also parses).
"""

from __future__ import annotations

import re
from fractions import Fraction

_TERM_RE = re.compile(
    r"""^\s*(?P<r>[+-]?\d+(?:/\d+)?)\s*
        (?:(?P<sign>[+-])\s*(?P<s>\d+(?:/\d+)?)?\s*t\s*)?$""",
    re.VERBOSE,
)


class Value:
    """An element r + s*t of Q + Q*t, or infinity."""

    __slots__ = ("r", "s", "infinite")

    def __init__(self, r=0, s=0, infinite=False):
        if infinite:
            self.r = None
            self.s = None
            self.infinite = True
        else:
            self.r = Fraction(r)
            self.s = Fraction(s)
            self.infinite = False

    @classmethod
    def of(cls, x) -> "Value":
        """Coerce an int, Fraction or Value to a Value."""
        if isinstance(x, Value):
            return x
        return cls(Fraction(x))

    @classmethod
    def parse(cls, text: str) -> "Value":
        """Parse ``r``, ``r + s t``, ``r - s t`` or ``inf``."""
        stripped = text.strip()
        if stripped in ("inf", "Infinity", "oo"):
            return INFINITY
        m = _TERM_RE.match(stripped)
        if not m:
            raise ValueError(f"cannot parse value {text!r}")
        r = Fraction(m.group("r"))
        if m.group("sign") is None:
            return cls(r)
        s = Fraction(m.group("s")) if m.group("s") is not None else Fraction(1)
        if m.group("sign") == "-":
            s = -s
        return cls(r, s)

    @property
    def is_rational(self) -> bool:
        """True when the value lies in Q, i.e. has no infinitesimal part."""
        return not self.infinite and self.s == 0

    def __add__(self, other):
        other = Value.of(other)
        if self.infinite or other.infinite:
            return INFINITY
        return Value(self.r + other.r, self.s + other.s)

    __radd__ = __add__

    def __sub__(self, other):
        other = Value.of(other)
        if other.infinite:
            raise ArithmeticError("cannot subtract infinity")
        if self.infinite:
            return INFINITY
        return Value(self.r - other.r, self.s - other.s)

    def __neg__(self):
        if self.infinite:
            raise ArithmeticError("cannot negate infinity")
        return Value(-self.r, -self.s)

    def scale(self, c) -> "Value":
        """Multiply by a rational scalar c; scaling infinity by 0 is undefined."""
        c = Fraction(c)
        if self.infinite:
            if c == 0:
                raise ArithmeticError("0 * infinity is undefined")
            if c < 0:
                raise ArithmeticError("cannot scale infinity by a negative")
            return INFINITY
        return Value(self.r * c, self.s * c)

    def _key(self):
        if self.infinite:
            return (1,)
        return (0, self.r, self.s)

    def __eq__(self, other):
        if not isinstance(other, Value):
            try:
                other = Value.of(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __lt__(self, other):
        other = Value.of(other)
        if self.infinite:
            return False
        if other.infinite:
            return True
        return (self.r, self.s) < (other.r, other.s)

    def __le__(self, other):
        return self == Value.of(other) or self < Value.of(other)

    def __gt__(self, other):
        return not self <= Value.of(other)

    def __ge__(self, other):
        return not self < Value.of(other)

    def __repr__(self):
        return f"Value({self})"

    def __str__(self):
        if self.infinite:
            return "inf"
        if self.s == 0:
            return str(self.r)
        sign = "+" if self.s > 0 else "-"
        return f"{self.r} {sign} {abs(self.s)}t"


INFINITY = Value(infinite=True)


def value_min(*vals) -> Value:
    return min((Value.of(v) for v in vals), key=Value._key, default=INFINITY)


def value_max(*vals) -> Value:
    vv = [Value.of(v) for v in vals]
    if not vv:
        raise ValueError("value_max of empty sequence")
    return max(vv, key=Value._key)
