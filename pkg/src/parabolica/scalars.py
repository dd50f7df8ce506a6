"""Exact scalar rings: rationals, Gaussian rationals and rational quaternions.

Rationals are plain :class:`fractions.Fraction` values.  The two extensions
are small immutable value classes that interoperate with ``int`` and
``Fraction`` operands, so a single elimination routine serves all three rings.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from numbers import Rational


class Ring(enum.Enum):
    RAT = "Q"
    GAUSS = "Q(i)"
    QUAT = "H(Q)"

    @property
    def degree(self) -> int:
        """Dimension of the ring as a vector space over Q."""
        return {Ring.RAT: 1, Ring.GAUSS: 2, Ring.QUAT: 4}[self]

    @property
    def field(self) -> str:
        """Ground field of the real Lie algebra this ring models."""
        return {Ring.RAT: "R", Ring.GAUSS: "C", Ring.QUAT: "H"}[self]

    @classmethod
    def from_field(cls, name: str) -> "Ring":
        try:
            return {"R": cls.RAT, "C": cls.GAUSS, "H": cls.QUAT}[name.upper()]
        except KeyError:
            raise ValueError(f"unknown ground field {name!r}; expected R, C or H") from None


def _q(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class Gauss:
    """Element ``re + im*i`` of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _q(re))
        object.__setattr__(self, "im", _q(im))

    def __setattr__(self, name, value):
        raise AttributeError("Gauss is immutable")

    @staticmethod
    def lift(x) -> "Gauss":
        if isinstance(x, Gauss):
            return x
        if isinstance(x, Quat):
            raise TypeError("cannot coerce a quaternion into Q(i)")
        return Gauss(x, 0)

    def __add__(self, other):
        if isinstance(other, Quat):
            return NotImplemented
        o = Gauss.lift(other)
        return Gauss(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return Gauss(-self.re, -self.im)

    def __sub__(self, other):
        if isinstance(other, Quat):
            return NotImplemented
        o = Gauss.lift(other)
        return Gauss(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return Gauss.lift(other) - self

    def __mul__(self, other):
        if isinstance(other, Quat):
            return NotImplemented
        o = Gauss.lift(other)
        return Gauss(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def conjugate(self) -> "Gauss":
        return Gauss(self.re, -self.im)

    def inverse(self) -> "Gauss":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("zero has no inverse in Q(i)")
        return Gauss(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if isinstance(other, Quat):
            return NotImplemented
        return self * Gauss.lift(other).inverse()

    def __rtruediv__(self, other):
        return Gauss.lift(other) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, Gauss):
            return self.re == other.re and self.im == other.im
        if isinstance(other, Quat):
            return other == self
        if isinstance(other, (int, Rational)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def components(self) -> tuple[Fraction, Fraction]:
        return (self.re, self.im)

    def __repr__(self):
        return f"Gauss({self.re}, {self.im})"

    def __str__(self):
        return _format_components((self.re, self.im), ("", "i"))


class Quat:
    """Rational quaternion ``a + b*i + c*j + d*k``."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        object.__setattr__(self, "a", _q(a))
        object.__setattr__(self, "b", _q(b))
        object.__setattr__(self, "c", _q(c))
        object.__setattr__(self, "d", _q(d))

    def __setattr__(self, name, value):
        raise AttributeError("Quat is immutable")

    @staticmethod
    def lift(x) -> "Quat":
        if isinstance(x, Quat):
            return x
        if isinstance(x, Gauss):
            return Quat(x.re, x.im, 0, 0)
        return Quat(x, 0, 0, 0)

    def __add__(self, other):
        o = Quat.lift(other)
        return Quat(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __neg__(self):
        return Quat(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other):
        o = Quat.lift(other)
        return Quat(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __rsub__(self, other):
        return Quat.lift(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            o = _q(other)
            return Quat(self.a * o, self.b * o, self.c * o, self.d * o)
        o = Quat.lift(other)
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = o.a, o.b, o.c, o.d
        return Quat(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __rmul__(self, other):
        return Quat.lift(other) * self

    def norm(self) -> Fraction:
        return self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d

    def conjugate(self) -> "Quat":
        return Quat(self.a, -self.b, -self.c, -self.d)

    def inverse(self) -> "Quat":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("zero has no inverse in H(Q)")
        return Quat(self.a / n, -self.b / n, -self.c / n, -self.d / n)

    def __truediv__(self, other):
        # right division: self * other^-1
        return self * Quat.lift(other).inverse()

    def __rtruediv__(self, other):
        return Quat.lift(other) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, Quat):
            return (self.a, self.b, self.c, self.d) == (other.a, other.b, other.c, other.d)
        if isinstance(other, Gauss):
            return self.c == 0 and self.d == 0 and self.a == other.re and self.b == other.im
        if isinstance(other, (int, Rational)):
            return self.b == 0 and self.c == 0 and self.d == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if not (self.b or self.c or self.d):
            return hash(self.a)
        return hash((self.a, self.b, self.c, self.d))

    def __bool__(self):
        return bool(self.a) or bool(self.b) or bool(self.c) or bool(self.d)

    def components(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def __repr__(self):
        return f"Quat({self.a}, {self.b}, {self.c}, {self.d})"

    def __str__(self):
        return _format_components((self.a, self.b, self.c, self.d), ("", "i", "j", "k"))


def _format_components(parts, units) -> str:
    terms = []
    for value, unit in zip(parts, units):
        if value == 0:
            continue
        if unit and value in (1, -1):
            body = unit
        else:
            body = f"{value}{'*' + unit if unit else ''}"
        if value < 0 and not (unit and value == -1):
            terms.append(("-", body[1:]))
        elif value < 0:
            terms.append(("-", body))
        else:
            terms.append(("+", body))
    if not terms:
        return "0"
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


I = Gauss(0, 1)
QI = Quat(0, 1, 0, 0)
QJ = Quat(0, 0, 1, 0)
QK = Quat(0, 0, 0, 1)


def zero(ring: Ring):
    return {Ring.RAT: Fraction(0), Ring.GAUSS: Gauss(0, 0), Ring.QUAT: Quat()}[ring]


def one(ring: Ring):
    return {Ring.RAT: Fraction(1), Ring.GAUSS: Gauss(1, 0), Ring.QUAT: Quat(1)}[ring]


def coerce(x, ring: Ring):
    """Embed ``x`` into ``ring``; raises if ``x`` lives in a larger ring."""
    if ring is Ring.RAT:
        if isinstance(x, (Gauss, Quat)):
            comps = x.components()
            if any(comps[1:]):
                raise TypeError(f"{x} is not rational")
            return comps[0]
        return _q(x)
    if ring is Ring.GAUSS:
        if isinstance(x, Quat):
            if x.c or x.d:
                raise TypeError(f"{x} is not in Q(i)")
            return Gauss(x.a, x.b)
        return Gauss.lift(x)
    return Quat.lift(x)


def ring_of(x) -> Ring:
    if isinstance(x, Quat):
        return Ring.QUAT
    if isinstance(x, Gauss):
        return Ring.GAUSS
    return Ring.RAT


def conj(x):
    if isinstance(x, (Gauss, Quat)):
        return x.conjugate()
    return x


def inverse(x):
    if isinstance(x, (Gauss, Quat)):
        return x.inverse()
    if x == 0:
        raise ZeroDivisionError("zero has no inverse")
    return 1 / _q(x)


def components(x, ring: Ring) -> tuple[Fraction, ...]:
    """Rational coordinates of ``x`` over the Q-basis of ``ring``."""
    x = coerce(x, ring)
    if ring is Ring.RAT:
        return (x,)
    return x.components()


def from_components(parts, ring: Ring):
    if ring is Ring.RAT:
        (a,) = parts
        return _q(a)
    if ring is Ring.GAUSS:
        return Gauss(*parts)
    return Quat(*parts)


def units(ring: Ring) -> tuple:
    """The standard Q-basis of ``ring`` (1, i, j, k as applicable)."""
    if ring is Ring.RAT:
        return (Fraction(1),)
    if ring is Ring.GAUSS:
        return (Gauss(1), I)
    return (Quat(1), QI, QJ, QK)


def left_mult_matrix(x, ring: Ring) -> list[list[Fraction]]:
    """Rational matrix of ``y -> x*y`` on the Q-coordinates of ``ring``."""
    basis = units(ring)
    cols = [components(x * u, ring) for u in basis]
    d = ring.degree
    return [[cols[c][r] for c in range(d)] for r in range(d)]


def parse_scalar(text: str):
    """Parse ``"3/2"``, ``"1+i"``, ``"j"``, ``"1/2-k"`` into the smallest ring."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty scalar")
    parts = {"": Fraction(0), "i": Fraction(0), "j": Fraction(0), "k": Fraction(0)}
    i = 0
    token = ""
    tokens = []
    while i < len(s):
        ch = s[i]
        if ch in "+-" and token and token[-1] not in "+-*":
            tokens.append(token)
            token = ch
        else:
            token += ch
        i += 1
    if token:
        tokens.append(token)
    for tok in tokens:
        unit = ""
        if tok[-1] in "ijk":
            unit = tok[-1]
            coeff = tok[:-1].rstrip("*")
            if coeff in ("", "+"):
                coeff = "1"
            elif coeff == "-":
                coeff = "-1"
        else:
            coeff = tok
        parts[unit] += Fraction(coeff)
    if parts["j"] or parts["k"]:
        return Quat(parts[""], parts["i"], parts["j"], parts["k"])
    if parts["i"]:
        return Gauss(parts[""], parts["i"])
    return parts[""]


def format_scalar(x) -> str:
    if isinstance(x, (Gauss, Quat)):
        return str(x)
    return str(_q(x))
