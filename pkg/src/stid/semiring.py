"""Exact scalars of the tropical (max-plus) and supertropical semirings.

Tropical scalars are ``-inf`` or a rational; supertropical scalars add a
ghost copy of the rationals.  Magnitudes are ``int`` or ``Fraction`` and
never floats, since ghost creation depends on exact ties.

Both scalar classes overload ``+`` as the semiring addition and ``*`` as the
semiring multiplication, so generic code (matrix products, word evaluation)
works for either kind.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Union

Magnitude = Union[int, Fraction]

_SCALAR_RE = re.compile(r"^(-?\d+)(?:/(\d+))?(v?)$")


class ScalarParseError(ValueError):
    pass


def _magnitude(value) -> Magnitude:
    if isinstance(value, bool) or not isinstance(value, Rational):
        raise TypeError(f"magnitude must be an exact rational, got {value!r}")
    if isinstance(value, int):
        return value
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else value


class TropScalar:
    """An element of the tropical semiring: ``-inf`` or an exact rational."""

    __slots__ = ("value",)

    def __init__(self, value: Magnitude | None):
        self.value = None if value is None else _magnitude(value)

    @property
    def is_zero(self) -> bool:
        return self.value is None

    def __add__(self, other: TropScalar) -> TropScalar:
        if self.value is None:
            return other
        if other.value is None:
            return self
        return self if self.value >= other.value else other

    def __mul__(self, other: TropScalar) -> TropScalar:
        if self.value is None:
            return self
        if other.value is None:
            return other
        x = object.__new__(TropScalar)
        x.value = self.value + other.value
        return x

    def __eq__(self, other) -> bool:
        return isinstance(other, TropScalar) and self.value == other.value

    def __hash__(self) -> int:
        return hash(("T", self.value))

    def _key(self):
        return (0,) if self.value is None else (1, self.value)

    def __lt__(self, other: TropScalar) -> bool:
        return self._key() < other._key()

    def __le__(self, other: TropScalar) -> bool:
        return self._key() <= other._key()

    def __repr__(self) -> str:
        return f"TropScalar({format_scalar(self)})"

    def __str__(self) -> str:
        return format_scalar(self)

    @classmethod
    def zero(cls) -> TropScalar:
        return NEG_INF

    @classmethod
    def one(cls) -> TropScalar:
        return TROP_ONE


NEG_INF = TropScalar(None)
TROP_ONE = TropScalar(0)

ZERO_TAG, REAL_TAG, GHOST_TAG = 0, 1, 2


class SupertropScalar:
    """An element of the supertropical semiring.

    ``tag`` is one of ``ZERO_TAG``, ``REAL_TAG``, ``GHOST_TAG``; ``mag`` is the
    magnitude (``None`` for the zero element).  Addition of two elements with
    the same magnitude yields a ghost, multiplication adds magnitudes and is
    ghost as soon as one factor is.
    """

    __slots__ = ("tag", "mag")

    def __init__(self, tag: int, mag: Magnitude | None = None):
        if tag == ZERO_TAG:
            if mag is not None:
                raise ValueError("the zero element carries no magnitude")
        elif tag in (REAL_TAG, GHOST_TAG):
            if mag is None:
                raise ValueError("real and ghost elements need a magnitude")
            mag = _magnitude(mag)
        else:
            raise ValueError(f"unknown tag {tag!r}")
        self.tag = tag
        self.mag = mag

    @property
    def is_zero(self) -> bool:
        return self.tag == ZERO_TAG

    @property
    def is_ghost(self) -> bool:
        return self.tag == GHOST_TAG

    @property
    def is_real(self) -> bool:
        return self.tag == REAL_TAG

    def __add__(self, other: SupertropScalar) -> SupertropScalar:
        if self.tag == ZERO_TAG:
            return other
        if other.tag == ZERO_TAG:
            return self
        if self.mag == other.mag:
            return self if self.tag == GHOST_TAG else _st(GHOST_TAG, self.mag)
        return self if self.mag > other.mag else other

    def __mul__(self, other: SupertropScalar) -> SupertropScalar:
        if self.tag == ZERO_TAG:
            return self
        if other.tag == ZERO_TAG:
            return other
        tag = REAL_TAG if self.tag == REAL_TAG and other.tag == REAL_TAG else GHOST_TAG
        return _st(tag, self.mag + other.mag)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SupertropScalar)
            and self.tag == other.tag
            and self.mag == other.mag
        )

    def __hash__(self) -> int:
        return hash(("ST", self.tag, self.mag))

    def _key(self):
        # 0 < a < a^nu < b < b^nu for a < b
        return (0,) if self.tag == ZERO_TAG else (1, self.mag, self.tag)

    def __lt__(self, other: SupertropScalar) -> bool:
        return self._key() < other._key()

    def __le__(self, other: SupertropScalar) -> bool:
        return self._key() <= other._key()

    def __repr__(self) -> str:
        return f"SupertropScalar({format_scalar(self)})"

    def __str__(self) -> str:
        return format_scalar(self)

    @classmethod
    def zero(cls) -> SupertropScalar:
        return ZERO

    @classmethod
    def one(cls) -> SupertropScalar:
        return ST_ONE


def _st(tag: int, mag) -> SupertropScalar:
    # unchecked constructor for results of arithmetic on valid scalars
    x = object.__new__(SupertropScalar)
    x.tag = tag
    x.mag = mag
    return x


ZERO = SupertropScalar(ZERO_TAG)
ST_ONE = SupertropScalar(REAL_TAG, 0)


def real(a) -> SupertropScalar:
    return SupertropScalar(REAL_TAG, a)


def ghost(a) -> SupertropScalar:
    return SupertropScalar(GHOST_TAG, a)


def trop(a) -> TropScalar:
    """Tropical scalar from a rational, or ``-inf`` when ``a`` is None."""
    return TropScalar(a)


def trop_add(x: TropScalar, y: TropScalar) -> TropScalar:
    return x + y


def trop_mul(x: TropScalar, y: TropScalar) -> TropScalar:
    return x * y


def st_add(x: SupertropScalar, y: SupertropScalar) -> SupertropScalar:
    return x + y


def st_mul(x: SupertropScalar, y: SupertropScalar) -> SupertropScalar:
    return x * y


def nu(x: SupertropScalar) -> SupertropScalar:
    """Ghost projection: reals become ghosts, ghosts and zero are fixed."""
    if x.tag == REAL_TAG:
        return SupertropScalar(GHOST_TAG, x.mag)
    return x


def nu_equiv(x: SupertropScalar, y: SupertropScalar) -> bool:
    return nu(x) == nu(y)


def st_cmp(x: SupertropScalar, y: SupertropScalar) -> int:
    """Three-way comparison in the total order; returns -1, 0 or 1."""
    kx, ky = x._key(), y._key()
    return (kx > ky) - (kx < ky)


def hat(x: SupertropScalar) -> SupertropScalar:
    """Lift a ghost to the real of the same magnitude."""
    if x.tag == GHOST_TAG:
        return SupertropScalar(REAL_TAG, x.mag)
    return x


def embed(x: TropScalar) -> SupertropScalar:
    """The ghost-free copy of a tropical scalar inside the supertropical one."""
    return ZERO if x.value is None else SupertropScalar(REAL_TAG, x.value)


def to_trop(x: SupertropScalar) -> TropScalar:
    """Forget the ghost tag (the tropical value of ``nu(x)``)."""
    return NEG_INF if x.tag == ZERO_TAG else TropScalar(x.mag)


def _format_mag(m: Magnitude) -> str:
    return str(m)


def format_scalar(x: TropScalar | SupertropScalar) -> str:
    """Render ``-inf``, ``p``, ``p/q`` or a ghost ``p/qv``."""
    if isinstance(x, TropScalar):
        return "-inf" if x.value is None else _format_mag(x.value)
    if x.tag == ZERO_TAG:
        return "-inf"
    return _format_mag(x.mag) + ("v" if x.tag == GHOST_TAG else "")


def parse_scalar(text: str, kind: str = "st") -> TropScalar | SupertropScalar:
    """Parse the textual scalar syntax.

    ``kind`` is ``"st"`` (supertropical) or ``"trop"``; ghosts are rejected for
    the tropical kind.  Decimal notation is not accepted.
    """
    if kind not in ("st", "trop"):
        raise ValueError(f"unknown scalar kind {kind!r}")
    s = text.strip()
    if s == "-inf":
        return NEG_INF if kind == "trop" else ZERO
    m = _SCALAR_RE.match(s)
    if m is None:
        raise ScalarParseError(f"malformed scalar {text!r}")
    num, den, ghost_suffix = m.groups()
    if den is not None and int(den) == 0:
        raise ScalarParseError(f"zero denominator in {text!r}")
    value = _magnitude(Fraction(int(num), int(den) if den else 1))
    if kind == "trop":
        if ghost_suffix:
            raise ScalarParseError(f"ghost scalar {text!r} in a tropical context")
        return TropScalar(value)
    return SupertropScalar(GHOST_TAG if ghost_suffix else REAL_TAG, value)
