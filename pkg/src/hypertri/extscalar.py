"""Arithmetic over the extended length system of the hyperbolic plane.

Segment lengths in the extended plane (real points plus boundary points and
the poles beyond them) take values ``r + q*i`` where the real part ``r`` is a
real number or a signed infinity and the imaginary part ``q`` is one of the
three quanta ``0``, ``pi/2``, ``pi``.  The two complementary segments cut
from a line by a point pair always have lengths summing to ``pi*i``, and the
segment tables never produce any other imaginary part, so the imaginary
channel is stored as an exact three-valued enum rather than a float.

Signed infinities follow the operational rules

    inf + inf = inf     -inf + (-inf) = -inf     inf + (-inf) = 0
    inf + a = inf       cosh(+-inf) = inf        sinh(+-inf) = +-inf
    tanh(+-inf) = +-1   inf + b*i = inf + 0*i

Addition involving infinities is not associative in general; it is safe for
expressions with at most two infinite operands, which is all the segment
calculus needs.

One value falls outside this system: a segment of the ideal line itself (both
endpoints and the line beyond the boundary) has a purely imaginary length
``phi*i`` with free magnitude, the angle of the endpoint polars times ``i``.
`PureImaginary` represents that case.

The real-number channel is an ordinary ``float``; ``math.inf`` and
``-math.inf`` are the two extra elements of the extended real line.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import (
    ImaginaryOverflow,
    UndefinedComparison,
    UndefinedProduct,
    UnsupportedConfiguration,
)

HALF_PI = math.pi / 2.0


class Quantum(Enum):
    """The three admissible imaginary parts of a segment length, as exact quanta."""

    ZERO = 0
    HALF_PI = 1
    PI = 2

    @property
    def radians(self) -> float:
        return (0.0, HALF_PI, math.pi)[self.value]

    def __add__(self, other: "Quantum") -> "Quantum":
        total = self.value + other.value
        if total > 2:
            raise ImaginaryOverflow(
                f"imaginary parts {self.name} + {other.name} exceed pi"
            )
        return Quantum(total)


class PointKind(Enum):
    """Taxonomy of points of the extended plane."""

    REAL = "real"
    INFINITE = "infinite"
    IDEAL = "ideal"


_QUANTUM_JSON = {Quantum.ZERO: 0, Quantum.HALF_PI: "pi/2", Quantum.PI: "pi"}
_QUANTUM_FROM_JSON = {0: Quantum.ZERO, "pi/2": Quantum.HALF_PI, "pi": Quantum.PI}


@dataclass(frozen=True, slots=True)
class ExtLength:
    """A length value: extended-real part plus quantized imaginary part.

    Infinite values carry imaginary quantum ZERO by the rule
    ``+-inf + b*i = +-inf + 0*i``; the constructor normalizes this.
    """

    re: float
    im: Quantum = Quantum.ZERO

    def __post_init__(self):
        if math.isnan(self.re):
            raise ValueError("extended length with NaN real part")
        if math.isinf(self.re) and self.im is not Quantum.ZERO:
            object.__setattr__(self, "im", Quantum.ZERO)

    @property
    def finite(self) -> bool:
        return math.isfinite(self.re)

    def complement(self) -> "ExtLength":
        """The other segment of the same point pair: ``pi*i - self``."""
        if math.isinf(self.re):
            return ExtLength(-self.re)
        return ExtLength(-self.re, Quantum(2 - self.im.value))

    def as_complex(self) -> complex:
        """Numeric value; infinite lengths map to complex(+-inf, 0)."""
        return complex(self.re, self.im.radians if self.finite else 0.0)

    def _check_comparable(self, other: "ExtLength"):
        if not isinstance(other, ExtLength):
            raise TypeError("can only compare ExtLength with ExtLength")
        if self.im is not other.im and self.finite and other.finite:
            raise UndefinedComparison(
                f"order undefined between imaginary parts {self.im.name} and {other.im.name}"
            )

    def __lt__(self, other: "ExtLength") -> bool:
        self._check_comparable(other)
        return self.re < other.re

    def __le__(self, other: "ExtLength") -> bool:
        self._check_comparable(other)
        return self.re <= other.re

    def __gt__(self, other: "ExtLength") -> bool:
        self._check_comparable(other)
        return self.re > other.re

    def __ge__(self, other: "ExtLength") -> bool:
        self._check_comparable(other)
        return self.re >= other.re

    def to_json(self):
        re: float | str = self.re
        if math.isinf(self.re):
            re = "inf" if self.re > 0 else "-inf"
        return {"re": re, "im": _QUANTUM_JSON[self.im]}

    @classmethod
    def from_json(cls, obj) -> "ExtLength":
        re = obj["re"]
        if re == "inf":
            re = math.inf
        elif re == "-inf":
            re = -math.inf
        return cls(float(re), _QUANTUM_FROM_JSON[obj["im"]])

    def __str__(self):
        if math.isinf(self.re):
            return "inf" if self.re > 0 else "-inf"
        if self.im is Quantum.ZERO:
            return f"{self.re:g}"
        tag = "pi/2" if self.im is Quantum.HALF_PI else "pi"
        return f"{self.re:g} + ({tag})i"


INF = ExtLength(math.inf)
NEG_INF = ExtLength(-math.inf)


@dataclass(frozen=True, slots=True)
class PureImaginary:
    """Purely imaginary length ``magnitude * i`` with free magnitude.

    Only segments of the ideal line produce these; the magnitude is the angle
    of the endpoint polars, so complementary segments sum to ``pi*i`` here too.
    """

    magnitude: float

    def complement(self) -> "PureImaginary":
        return PureImaginary(math.pi - self.magnitude)

    def as_complex(self) -> complex:
        return complex(0.0, self.magnitude)


def ext_add(x: ExtLength, y: ExtLength) -> ExtLength:
    """Sum of two extended lengths under the operational rules above."""
    xi, yi = math.isinf(x.re), math.isinf(y.re)
    if xi and yi:
        if (x.re > 0) != (y.re > 0):
            return ExtLength(0.0)
        return ExtLength(x.re)
    if xi:
        return ExtLength(x.re)
    if yi:
        return ExtLength(y.re)
    return ExtLength(x.re + y.re, x.im + y.im)


def ext_sub_real(x: ExtLength, t: float) -> ExtLength:
    """Subtract a plain real number; the imaginary quantum is untouched."""
    if math.isinf(t):
        raise UndefinedProduct("subtracting an infinite real is not defined here")
    if math.isinf(x.re):
        return ExtLength(x.re)
    return ExtLength(x.re - t, x.im)


def ext_mul(k: float, x: ExtLength) -> ExtLength:
    """Scalar multiple, restricted to the cases the operational rules define.

    Allowed: nonzero real times an infinite length (sign rule), and any real
    times a quantum-free finite length.  Everything else (``inf * 0``,
    scaling a genuinely complex length) is rejected rather than guessed.
    """
    if math.isinf(x.re):
        if k == 0.0:
            raise UndefinedProduct("0 * infinity is not defined")
        return ExtLength(math.copysign(math.inf, k * x.re))
    if x.im is not Quantum.ZERO:
        raise UndefinedProduct("scaling a length with nonzero imaginary part")
    return ExtLength(k * x.re)


def ext_cosh(x: ExtLength) -> complex:
    """cosh over the extended system; ``cosh(+-inf) = inf``."""
    if math.isinf(x.re):
        return complex(math.inf, 0.0)
    if x.im is Quantum.ZERO:
        return complex(math.cosh(x.re), 0.0)
    if x.im is Quantum.HALF_PI:
        return complex(0.0, math.sinh(x.re))
    return complex(-math.cosh(x.re), 0.0)


def ext_sinh(x: ExtLength) -> complex:
    """sinh over the extended system; ``sinh(+-inf) = +-inf``."""
    if math.isinf(x.re):
        return complex(x.re, 0.0)
    if x.im is Quantum.ZERO:
        return complex(math.sinh(x.re), 0.0)
    if x.im is Quantum.HALF_PI:
        return complex(0.0, math.cosh(x.re))
    return complex(-math.sinh(x.re), 0.0)


def ext_tanh(x: ExtLength) -> complex:
    """tanh over the extended system; ``tanh(+-inf) = +-1``.

    For quantum pi/2 the value is real: tanh(a + i*pi/2) = coth(a), with a
    pole at a = 0 reported as a signed infinity.
    """
    if math.isinf(x.re):
        return complex(math.copysign(1.0, x.re), 0.0)
    if x.im is Quantum.ZERO or x.im is Quantum.PI:
        return complex(math.tanh(x.re), 0.0)
    if x.re == 0.0:
        return complex(math.inf, 0.0)
    return complex(1.0 / math.tanh(x.re), 0.0)


def ext_coth(x: ExtLength) -> complex:
    """coth over the extended system; ``coth(+-inf) = +-1``."""
    if math.isinf(x.re):
        return complex(math.copysign(1.0, x.re), 0.0)
    if x.im is Quantum.ZERO or x.im is Quantum.PI:
        if x.re == 0.0:
            return complex(math.inf, 0.0)
        return complex(1.0 / math.tanh(x.re), 0.0)
    return complex(math.tanh(x.re), 0.0)


_R, _IN, _ID = PointKind.REAL, PointKind.INFINITE, PointKind.IDEAL

# (kind_a, kind_b) -> pair builder for segments of a real line
_REAL_LINE_TABLE = {
    (_R, _R): lambda d: (ExtLength(d), ExtLength(-d, Quantum.PI)),
    (_R, _IN): lambda d: (INF, NEG_INF),
    (_IN, _R): lambda d: (INF, NEG_INF),
    (_R, _ID): lambda d: (ExtLength(d, Quantum.HALF_PI), ExtLength(-d, Quantum.HALF_PI)),
    (_ID, _R): lambda d: (ExtLength(d, Quantum.HALF_PI), ExtLength(-d, Quantum.HALF_PI)),
    (_IN, _IN): lambda d: (INF, NEG_INF),
    (_IN, _ID): lambda d: (INF, NEG_INF),
    (_ID, _IN): lambda d: (INF, NEG_INF),
    (_ID, _ID): lambda d: (ExtLength(d, Quantum.PI), ExtLength(-d)),
}

# (kind_a, kind_b) -> pair for segments of the line at infinity (no real points)
_INFINITY_LINE_TABLE = {
    (_IN, _IN): (ExtLength(0.0), ExtLength(0.0, Quantum.PI)),
    (_IN, _ID): (ExtLength(0.0, Quantum.HALF_PI), ExtLength(0.0, Quantum.HALF_PI)),
    (_ID, _IN): (ExtLength(0.0, Quantum.HALF_PI), ExtLength(0.0, Quantum.HALF_PI)),
    (_ID, _ID): (ExtLength(0.0), ExtLength(0.0, Quantum.PI)),
}

_REAL_LINE_NEEDS_D = {(_R, _R), (_R, _ID), (_ID, _R), (_ID, _ID)}


def segment_lengths(
    kind_a: PointKind,
    kind_b: PointKind,
    d: float | None = None,
    line: str | None = None,
) -> tuple[ExtLength, ExtLength]:
    """Tabulated lengths (AB, BA) of the two segments a point pair cuts from a line.

    ``d`` is the auxiliary real distance of the configuration: between the two
    points when both are real, from the real point to the polar of the ideal
    one for a mixed pair, and between the two polars for an ideal pair.

    ``line`` selects the carrier: "real" or "infinity".  When omitted it is
    inferred: any real endpoint, or a supplied ``d``, implies a real line;
    pairs of infinite/ideal points without ``d`` refer to the line at
    infinity.  Segments of the ideal line are not tabulated here (they are
    purely imaginary, see `PureImaginary` and the plane module).
    """
    if line is None:
        if kind_a is _R or kind_b is _R or d is not None:
            line = "real"
        else:
            line = "infinity"
    if line == "real":
        builder = _REAL_LINE_TABLE.get((kind_a, kind_b))
        if builder is None:
            raise UnsupportedConfiguration(
                f"no real-line entry for ({kind_a.name}, {kind_b.name})"
            )
        needs_d = (kind_a, kind_b) in _REAL_LINE_NEEDS_D
        if needs_d:
            if d is None:
                raise UnsupportedConfiguration(
                    f"({kind_a.name}, {kind_b.name}) on a real line needs the distance d"
                )
            if d < 0:
                raise UnsupportedConfiguration("auxiliary distance d must be >= 0")
        return builder(d if needs_d else 0.0)
    if line == "infinity":
        pair = _INFINITY_LINE_TABLE.get((kind_a, kind_b))
        if pair is None:
            raise UnsupportedConfiguration(
                f"no infinity-line entry for ({kind_a.name}, {kind_b.name})"
            )
        return pair
    raise UnsupportedConfiguration(f"unknown line selector {line!r}")
