"""Exact coordinate rings and the scalar operations on them.

Elements are plain immutable values.  Rationals are :class:`fractions.Fraction`
(ints are accepted wherever a rational is expected), prime-field elements are
:class:`Residue`, and quaternions are :class:`Quaternion` with rational
components.  Mixing elements of different rings raises
:class:`~desargues.errors.RingMismatchError`.

Canonical text forms::

    rational    5/6, -3
    gf(p)       4 mod 7
    quaternion  1+2i+0j-3/2k
"""

from __future__ import annotations

import enum
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from .errors import NotEnumerableError, OrderUnavailableError, RingMismatchError

__all__ = [
    "Ordering",
    "Quaternion",
    "Residue",
    "RingDescriptor",
    "Scalar",
    "is_prime",
    "parse_ring",
    "ring_of",
    "scalar_add",
    "scalar_cmp",
    "scalar_inv",
    "scalar_mul",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _mismatch(a, b) -> RingMismatchError:
    return RingMismatchError(f"cannot combine {a!r} and {b!r}: different rings")


@dataclass(frozen=True, slots=True)
class Residue:
    """An element of the prime field GF(p), stored as its least residue."""

    value: int
    p: int

    def __post_init__(self):
        if not 0 <= self.value < self.p:
            object.__setattr__(self, "value", self.value % self.p)

    def _check(self, other) -> Residue:
        if not isinstance(other, Residue) or other.p != self.p:
            raise _mismatch(self, other)
        return other

    def __add__(self, other):
        o = self._check(other)
        return Residue((self.value + o.value) % self.p, self.p)

    def __sub__(self, other):
        o = self._check(other)
        return Residue((self.value - o.value) % self.p, self.p)

    def __mul__(self, other):
        o = self._check(other)
        return Residue(self.value * o.value % self.p, self.p)

    def __truediv__(self, other):
        return self * self._check(other).inverse()

    def __radd__(self, other):
        raise _mismatch(other, self)

    __rsub__ = __rmul__ = __rtruediv__ = __radd__

    def __neg__(self):
        return Residue(-self.value % self.p, self.p)

    def __bool__(self):
        return self.value != 0

    def inverse(self) -> Residue:
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return Residue(pow(self.value, -1, self.p), self.p)

    def __str__(self):
        return f"{self.value} mod {self.p}"

    def __repr__(self):
        return f"Residue({self.value}, {self.p})"


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise _mismatch(x, "quaternion component")


@dataclass(frozen=True, slots=True)
class Quaternion:
    """a + b*i + c*j + d*k with rational components; multiplication is Hamilton's."""

    a: Fraction
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    d: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            v = getattr(self, name)
            if not isinstance(v, Fraction):
                object.__setattr__(self, name, _frac(v))

    def _check(self, other) -> Quaternion:
        if not isinstance(other, Quaternion):
            raise _mismatch(self, other)
        return other

    def __add__(self, other):
        o = self._check(other)
        return Quaternion(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def __sub__(self, other):
        o = self._check(other)
        return Quaternion(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __mul__(self, other):
        o = self._check(other)
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = o.a, o.b, o.c, o.d
        return Quaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __truediv__(self, other):
        # right division: self * other^-1
        return self * self._check(other).inverse()

    def __radd__(self, other):
        raise _mismatch(other, self)

    __rsub__ = __rmul__ = __rtruediv__ = __radd__

    def __neg__(self):
        return Quaternion(-self.a, -self.b, -self.c, -self.d)

    def __bool__(self):
        return bool(self.a or self.b or self.c or self.d)

    def conjugate(self) -> Quaternion:
        return Quaternion(self.a, -self.b, -self.c, -self.d)

    def norm(self) -> Fraction:
        return self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d

    def inverse(self) -> Quaternion:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("zero quaternion has no inverse")
        q = self.conjugate()
        return Quaternion(q.a / n, q.b / n, q.c / n, q.d / n)

    def __str__(self):
        out = str(self.a)
        for v, unit in ((self.b, "i"), (self.c, "j"), (self.d, "k")):
            out += ("-" if v < 0 else "+") + str(abs(v)) + unit
        return out

    def __repr__(self):
        return f"Quaternion({self})"


Scalar = Union[Fraction, int, Residue, Quaternion]


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


_QTERM = re.compile(r"([+-]?)(\d+(?:/\d+)?)?([ijk]?)")


def _parse_quaternion(text: str) -> Quaternion:
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty quaternion literal")
    comps = {"": Fraction(0), "i": Fraction(0), "j": Fraction(0), "k": Fraction(0)}
    pos = 0
    while pos < len(s):
        m = _QTERM.match(s, pos)
        sign, num, unit = m.groups()
        if m.end() == pos or (not num and not unit) or (pos > 0 and not sign):
            raise ValueError(f"malformed quaternion literal {text!r}")
        v = Fraction(num) if num else Fraction(1)
        comps[unit] += -v if sign == "-" else v
        pos = m.end()
    return Quaternion(comps[""], comps["i"], comps["j"], comps["k"])


@dataclass(frozen=True, slots=True)
class RingDescriptor:
    """Identifies one coordinate ring: ``rational``, ``gf`` (with prime ``p``) or ``quaternion``."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind not in ("rational", "gf", "quaternion"):
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.kind == "gf":
            if self.p is None or not is_prime(self.p):
                raise ValueError(f"{self.p} is not prime")
        elif self.p is not None:
            raise ValueError(f"ring kind {self.kind!r} takes no modulus")

    @classmethod
    def rational(cls) -> RingDescriptor:
        return cls("rational")

    @classmethod
    def gf(cls, p: int) -> RingDescriptor:
        return cls("gf", p)

    @classmethod
    def quaternion(cls) -> RingDescriptor:
        return cls("quaternion")

    @property
    def ordered(self) -> bool:
        return self.kind == "rational"

    @property
    def commutative(self) -> bool:
        return self.kind != "quaternion"

    @property
    def finite(self) -> bool:
        return self.kind == "gf"

    @property
    def size(self) -> int:
        if self.kind != "gf":
            raise NotEnumerableError(f"{self} is infinite")
        return self.p

    def __str__(self):
        return f"gf({self.p})" if self.kind == "gf" else self.kind

    def zero(self) -> Scalar:
        return self(0)

    def one(self) -> Scalar:
        return self(1)

    def __call__(self, value) -> Scalar:
        """Coerce a number, a canonical string or a ring element into this ring."""
        if isinstance(value, str):
            return self.parse(value)
        if self.kind == "rational":
            if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
                return Fraction(value)
        elif self.kind == "gf":
            if isinstance(value, Residue):
                if value.p != self.p:
                    raise _mismatch(value, self)
                return value
            if isinstance(value, int) and not isinstance(value, bool):
                return Residue(value % self.p, self.p)
            if isinstance(value, Fraction):
                return Residue(value.numerator, self.p) * Residue(value.denominator, self.p).inverse()
        else:
            if isinstance(value, Quaternion):
                return value
            if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
                return Quaternion(Fraction(value))
        raise _mismatch(value, self)

    def contains(self, x) -> bool:
        try:
            return ring_of(x) == self
        except RingMismatchError:
            return False

    def parse(self, text: str) -> Scalar:
        """Parse a canonical text form (or a plain integer/fraction) into this ring."""
        s = text.strip()
        if self.kind == "rational":
            return Fraction(s)
        if self.kind == "gf":
            m = re.fullmatch(r"(-?\d+(?:/\d+)?)(?:\s*mod\s*(\d+))?", s)
            if not m:
                raise ValueError(f"malformed residue {text!r}")
            if m.group(2) is not None and int(m.group(2)) != self.p:
                raise RingMismatchError(f"{text!r} is not in {self}")
            return self(Fraction(m.group(1)))
        return _parse_quaternion(s)

    def format(self, x) -> str:
        return str(self(x))

    def elements(self) -> Iterator[Scalar]:
        if self.kind != "gf":
            raise NotEnumerableError(f"{self} is infinite")
        return (Residue(v, self.p) for v in range(self.p))

    def random(self, rng: random.Random, bound: int = 20) -> Scalar:
        """Draw an element; rationals have |numerator|, denominator <= bound."""
        if self.kind == "gf":
            return Residue(rng.randrange(self.p), self.p)
        if self.kind == "rational":
            return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        qb = max(1, min(bound, 3))
        return Quaternion(*(Fraction(rng.randint(-qb, qb), rng.randint(1, 2)) for _ in range(4)))

    def random_nonzero(self, rng: random.Random, bound: int = 20) -> Scalar:
        while True:
            x = self.random(rng, bound)
            if x:
                return x


def parse_ring(text: str) -> RingDescriptor:
    """Parse ``rational``, ``quaternion`` or ``gf(p)``."""
    s = text.strip().lower().replace(" ", "")
    if s in ("rational", "q"):
        return RingDescriptor.rational()
    if s in ("quaternion", "h"):
        return RingDescriptor.quaternion()
    m = re.fullmatch(r"gf\((\d+)\)", s)
    if m:
        return RingDescriptor.gf(int(m.group(1)))
    raise ValueError(f"unknown model {text!r}")


def ring_of(x) -> RingDescriptor:
    if isinstance(x, Residue):
        return RingDescriptor("gf", x.p)
    if isinstance(x, Quaternion):
        return RingDescriptor("quaternion")
    if isinstance(x, (Fraction, int)) and not isinstance(x, bool):
        return RingDescriptor("rational")
    raise RingMismatchError(f"{x!r} is not a scalar")


def _same_ring(a, b) -> None:
    if ring_of(a) != ring_of(b):
        raise _mismatch(a, b)


def scalar_add(a: Scalar, b: Scalar) -> Scalar:
    _same_ring(a, b)
    return a + b


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    _same_ring(a, b)
    return a * b


def scalar_inv(a: Scalar) -> Scalar:
    if not a:
        raise ZeroDivisionError("zero has no inverse")
    if isinstance(a, (Residue, Quaternion)):
        return a.inverse()
    return 1 / Fraction(a)


def scalar_cmp(a: Scalar, b: Scalar) -> Ordering:
    ra, rb = ring_of(a), ring_of(b)
    if not ra.ordered or not rb.ordered:
        raise OrderUnavailableError(f"{ra if not ra.ordered else rb} carries no order")
    return Ordering((a > b) - (a < b))
