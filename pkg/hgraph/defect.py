"""
Defect arithmetic.

A Defect is an exact non-negative rational or Infinite. Infinite absorbs under
addition and multiplication, and every comparison that drives control flow is
done exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Dict, FrozenSet, Iterable, Optional, Sequence, Tuple, Union

from .core import common_neighborhood, pe_restricted
from .errors import ArgumentError, LayoutError
from .schema import Hypergraph

Rational = Union[int, Fraction, str]


def as_fraction(value: Rational) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


@total_ordering
@dataclass(frozen=True, eq=False)
class Defect:
    value: Optional[Fraction]  # None is Infinite

    @classmethod
    def of(cls, value: Rational) -> "Defect":
        frac = as_fraction(value)
        if frac < 0:
            raise ArgumentError(f"defects are non-negative, got {frac}")
        return cls(frac)

    @classmethod
    def infinite(cls) -> "Defect":
        return cls(None)

    @classmethod
    def zero(cls) -> "Defect":
        return cls(Fraction(0))

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    @staticmethod
    def _coerce(other) -> "Defect":
        return other if isinstance(other, Defect) else Defect.of(other)

    def __add__(self, other) -> "Defect":
        other = self._coerce(other)
        if self.is_infinite or other.is_infinite:
            return Defect.infinite()
        return Defect(self.value + other.value)

    __radd__ = __add__

    def __mul__(self, other) -> "Defect":
        other = self._coerce(other)
        if self.is_infinite or other.is_infinite:
            return Defect.infinite()
        return Defect(self.value * other.value)

    __rmul__ = __mul__

    def __pow__(self, t: int) -> "Defect":
        if t < 0:
            raise ArgumentError("defect powers take t >= 0")
        if t == 0:
            return Defect(Fraction(1))
        if self.is_infinite:
            return Defect.infinite()
        return Defect(self.value ** t)

    def __truediv__(self, m: Rational) -> "Defect":
        m = as_fraction(m)
        if m <= 0:
            raise ArgumentError("defects are divided by positive numbers only")
        if self.is_infinite:
            return Defect.infinite()
        return Defect(self.value / m)

    def __eq__(self, other) -> bool:
        try:
            other = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.value == other.value

    def __lt__(self, other) -> bool:
        other = self._coerce(other)
        if self.is_infinite:
            return False
        if other.is_infinite:
            return True
        return self.value < other.value

    def __hash__(self) -> int:
        return hash(("defect", self.value))

    def __float__(self) -> float:
        return math.inf if self.is_infinite else float(self.value)

    def __str__(self) -> str:
        return "inf" if self.is_infinite else str(self.value)

    def __repr__(self) -> str:
        return f"Defect({self})"

    def to_json(self) -> str:
        return str(self)


def omega_theta(x: Rational, theta: Rational) -> Defect:
    """Infinite if x = 0, theta/x if 0 < x < theta, else 0."""
    theta = as_fraction(theta)
    if theta <= 0:
        raise ArgumentError(f"theta must be positive, got {theta}")
    x = as_fraction(x)
    if x < 0:
        raise ArgumentError(f"neighborhood sizes are non-negative, got {x}")
    if x == 0:
        return Defect.infinite()
    if x < theta:
        return Defect(theta / x)
    return Defect.zero()


class DefectMeter:
    """
    Cached neighborhood sizes N(PE_Q(G); G) ∩ V_i for one host and one choice of parts.

    An edgeless host has no partial edge to extend, so every neighborhood is empty there.
    """

    def __init__(self, G: Hypergraph, parts: Optional[Sequence[Sequence[int]]] = None):
        if parts is None:
            if G.layout is None:
                raise LayoutError("defects need the host parts")
            parts = G.layout.parts
        self.G = G
        self.parts: Tuple[FrozenSet[int], ...] = tuple(frozenset(p) for p in parts)
        self._cache: Dict[Tuple[FrozenSet[int], int], FrozenSet[int]] = {}

    def neighborhood(self, Q: Iterable[int], i: int) -> FrozenSet[int]:
        q = frozenset(Q)
        key = (q, i)
        if key not in self._cache:
            target = self.parts[i]
            if q & target:
                raise ArgumentError(f"Q must avoid part {i}")
            if self.G.num_edges == 0:
                result = frozenset()
            else:
                pe = pe_restricted(self.G, q)
                if pe.max_size >= self.G.k:
                    result = frozenset()
                else:
                    result = common_neighborhood(self.G, pe) & target
            self._cache[key] = result
        return self._cache[key]

    def size(self, Q: Iterable[int], i: int) -> int:
        return len(self.neighborhood(Q, i))

    def defect(self, Q: Iterable[int], i: int, theta: Rational) -> Defect:
        return omega_theta(self.size(Q, i), theta)


def set_defect(
    G: Hypergraph,
    Q: Iterable[int],
    i: int,
    theta: Rational,
    parts: Optional[Sequence[Sequence[int]]] = None,
) -> Defect:
    """omega_theta(Q, V_i; G)."""
    return DefectMeter(G, parts).defect(Q, i, theta)


def average_defect(
    G: Hypergraph,
    Qs: Sequence[Sequence[int]],
    i: int,
    theta: Rational,
    t: int,
    parts: Optional[Sequence[Sequence[int]]] = None,
    meter: Optional[DefectMeter] = None,
) -> Defect:
    """mu_{theta,t}: the mean of omega_theta(Q, V_i; G)^t over Qs."""
    if not Qs:
        raise ArgumentError("average_defect needs at least one tuple")
    meter = meter or DefectMeter(G, parts)
    total = Defect.zero()
    for Q in Qs:
        total = total + meter.defect(Q, i, theta) ** t
        if total.is_infinite:
            return total
    return total / len(Qs)


def defect_lower_bound_check(
    G: Hypergraph,
    Qs: Sequence[Sequence[int]],
    i: int,
    theta: Rational,
    t: int,
    parts: Optional[Sequence[Sequence[int]]] = None,
) -> bool:
    """Every Q in Qs has |N| >= theta / (|Qs| * mu)^(1/t), compared exactly."""
    meter = DefectMeter(G, parts)
    theta = as_fraction(theta)
    mu = average_defect(G, Qs, i, theta, t, meter=meter)
    if mu.is_infinite:
        return True
    if mu == 0:
        return all(meter.size(Q, i) >= theta for Q in Qs)
    mass = len(Qs) * mu.value
    return all(Fraction(meter.size(Q, i)) ** t * mass >= theta ** t for Q in Qs)
