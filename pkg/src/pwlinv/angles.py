"""Angular arithmetic: exact turn fractions, unit directions, sectors.

Angles are stored dually.  Inputs that come as rational fractions of a full
turn keep that exact form (``TurnAngle``) alongside the floating radian
value; everything computed downstream (image fans, inverses) exists only in
floating point, so every predicate has a float path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .policy import policy

TAU = math.tau


class TurnAngle:
    """An exact angle, stored as a reduced fraction of a full turn in [0, 1)."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator, denominator=1):
        f = Fraction(numerator, denominator) % 1
        object.__setattr__(self, "numerator", f.numerator)
        object.__setattr__(self, "denominator", f.denominator)

    def __setattr__(self, name, value):
        raise AttributeError("TurnAngle is immutable")

    @classmethod
    def parse(cls, text: str) -> "TurnAngle":
        """Parse 'p/q' or a bare integer 'p'."""
        return cls(Fraction(text.strip()))

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    @property
    def radians(self) -> float:
        # tau is the correctly rounded double for a full turn; one division
        # and one product keep the result within 1 ulp of exact.
        return TAU * (self.numerator / self.denominator)

    def plus(self, delta: Fraction) -> "TurnAngle":
        return TurnAngle(self.fraction + delta)

    def delta_to(self, other: "TurnAngle") -> Fraction:
        """Counterclockwise gap to ``other`` as a fraction in (0, 1]."""
        d = (other.fraction - self.fraction) % 1
        return d if d != 0 else Fraction(1)

    def __eq__(self, other):
        return (
            isinstance(other, TurnAngle)
            and self.numerator == other.numerator
            and self.denominator == other.denominator
        )

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def __repr__(self):
        return f"TurnAngle({self.numerator}, {self.denominator})"

    def __str__(self):
        return f"{self.numerator}/{self.denominator}"


def normalize_angle(a: float) -> float:
    """Map a finite angle to [0, 2*pi)."""
    a = math.fmod(a, TAU)
    return a + TAU if a < 0 else a


@dataclass(frozen=True)
class Direction:
    """A unit vector on the circle with its angle in [0, 2*pi).

    ``turn`` carries the exact fraction-of-a-turn when the direction came
    from rational input; it is None for computed directions.
    """

    x: float
    y: float
    angle: float
    turn: Optional[TurnAngle] = None

    @classmethod
    def from_angle(cls, angle: float, turn: Optional[TurnAngle] = None) -> "Direction":
        a = normalize_angle(angle)
        return cls(math.cos(a), math.sin(a), a, turn)

    @classmethod
    def from_turn(cls, turn: TurnAngle) -> "Direction":
        return cls.from_angle(turn.radians, turn)

    @classmethod
    def from_vector(cls, x: float, y: float) -> "Direction":
        r = math.hypot(x, y)
        if r == 0.0:
            raise ValueError("the zero vector has no direction")
        return cls(x / r, y / r, normalize_angle(math.atan2(y, x)))

    def rotated(self, delta: float) -> "Direction":
        return Direction.from_angle(self.angle + delta)

    def as_tuple(self):
        return (self.x, self.y)


@dataclass(frozen=True)
class Sector:
    """A closed planar cone with vertex at the origin: start + ccw width.

    Width lies in (0, 2*pi]; a full-turn sector means the whole plane.
    Both boundary rays belong to the sector.
    """

    start: Direction
    width: float
    exact_start: Optional[TurnAngle] = None
    exact_width: Optional[Fraction] = None

    def __post_init__(self):
        if not (0.0 < self.width <= TAU + policy.angle_tol):
            raise ValueError(f"sector width {self.width} outside (0, 2*pi]")
        if self.exact_start is not None:
            if abs(self.exact_start.radians - self.start.angle) > 1e-12:
                raise ValueError("exact start disagrees with floating start")
        if self.exact_width is not None:
            if not (0 < self.exact_width <= 1):
                raise ValueError("exact width outside (0, 1] turns")
            if abs(float(self.exact_width) * TAU - self.width) > 1e-12:
                raise ValueError("exact width disagrees with floating width")

    @classmethod
    def from_angles(cls, start: float, width: float) -> "Sector":
        return cls(Direction.from_angle(start), width)

    @classmethod
    def from_turns(cls, start: TurnAngle, width: Fraction) -> "Sector":
        return cls(
            Direction.from_turn(start),
            float(width) * TAU,
            exact_start=start,
            exact_width=Fraction(width),
        )

    @property
    def end(self) -> Direction:
        if self.exact_start is not None and self.exact_width is not None:
            return Direction.from_turn(self.exact_start.plus(self.exact_width))
        return Direction.from_angle(self.start.angle + self.width)

    @property
    def is_exact(self) -> bool:
        return self.exact_start is not None and self.exact_width is not None

    def contains(self, d: Direction) -> bool:
        return sector_contains(self, d)


def wrap_sweep(from_angle: float, to_angle: float, orientation: int) -> float:
    """Signed angular step congruent to ``to - from`` modulo a full turn.

    orientation=+1 returns the counterclockwise representative in (0, 2*pi];
    orientation=-1 the clockwise one in [-2*pi, 0).
    """
    if orientation > 0:
        d = (to_angle - from_angle) % TAU
        return d if d != 0.0 else TAU
    d = (from_angle - to_angle) % TAU
    return -d if d != 0.0 else -TAU


def sector_contains(s: Sector, d: Direction) -> bool:
    """Closed membership test; exact when both sides carry turn data."""
    if s.is_exact and d.turn is not None:
        delta = (d.turn.fraction - s.exact_start.fraction) % 1
        return delta <= s.exact_width
    delta = (d.angle - s.start.angle) % TAU
    tol = policy.angle_tol
    return delta <= s.width + tol or delta >= TAU - tol


def sector_is_strictly_convex(s: Sector) -> bool:
    """True iff the sector contains no half-plane, i.e. width < pi."""
    if s.exact_width is not None:
        return s.exact_width < Fraction(1, 2)
    return s.width < math.pi
