"""Rank-2 hyperbolic Cartan data, integral weights and the Weyl orbit of a shape.

Weights are stored in the basis of fundamental weights, so the pairing with a
simple coroot is just a coordinate read-off.  Simple roots are

    alpha_1 = 2 L1 - a2 L2,     alpha_2 = -a1 L1 + 2 L2.

The reduced words used throughout are iota+ = (..., 2, 1, 2, 1) and
iota- = (2, 1, 2, 1, ...), so the k-th letter is 1 for odd k and 2 for even k
(see :func:`letter`).
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Union

Number = Union[int, Fraction]


class WeightError(ValueError):
    """A weight or Cartan datum failed a required condition."""


def letter(k: int) -> int:
    """Simple-root index attached to position ``k`` of the fixed reduced words."""
    return 2 if k % 2 == 0 else 1


def other(i: int) -> int:
    return 3 - i


@dataclass(frozen=True)
class Weight:
    """Point of P = Z L1 + Z L2 (or of its rational span)."""

    c1: Number
    c2: Number

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(self.c1 + other.c1, self.c2 + other.c2)

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(self.c1 - other.c1, self.c2 - other.c2)

    def __neg__(self) -> "Weight":
        return Weight(-self.c1, -self.c2)

    def __mul__(self, s: Number) -> "Weight":
        return Weight(s * self.c1, s * self.c2)

    __rmul__ = __mul__

    def pair(self, i: int) -> Number:
        """<self, alpha_i^vee>."""
        return self.c1 if i == 1 else self.c2

    def is_integral(self) -> bool:
        return all(Fraction(c).denominator == 1 for c in (self.c1, self.c2))

    def to_int(self) -> "Weight":
        if not self.is_integral():
            raise WeightError(f"{self} is not integral")
        return Weight(int(self.c1), int(self.c2))

    def __str__(self) -> str:
        return f"({self.c1},{self.c2})"


ZERO = Weight(0, 0)
LAMBDA1 = Weight(1, 0)
LAMBDA2 = Weight(0, 1)


def pairing(w: Weight, i: int) -> Number:
    return w.pair(i)


class _Recurrence:
    """Two-sided integer sequence u with u[l] + u[l+2] = mult(l) * u[l+1].

    The upper half grows from two seeds at ``up_start``, ``up_start + 1``; the
    lower half grows downward from two seeds at ``down_start``,
    ``down_start - 1``.  Both halves extend lazily under a lock.
    """

    def __init__(self, mult: Callable[[int], int], up_start: int,
                 up_seed: tuple[int, int], down_start: int,
                 down_seed: tuple[int, int]):
        self._mult = mult
        self._up_start = up_start
        self._up = list(up_seed)
        self._down_start = down_start
        self._down = list(down_seed)
        self._lock = threading.Lock()

    def __getitem__(self, j: int) -> int:
        if j >= self._up_start:
            idx = j - self._up_start
            if idx >= len(self._up):
                with self._lock:
                    while idx >= len(self._up):
                        l = self._up_start + len(self._up) - 2
                        self._up.append(self._mult(l) * self._up[-1] - self._up[-2])
            return self._up[idx]
        idx = self._down_start - j
        if idx >= len(self._down):
            with self._lock:
                while idx >= len(self._down):
                    l = self._down_start - len(self._down)
                    self._down.append(self._mult(l) * self._down[-1] - self._down[-2])
        return self._down[idx]


@dataclass(frozen=True)
class CartanData:
    """Generalized Cartan matrix ((2, -a1), (-a2, 2)) of hyperbolic type."""

    a1: int
    a2: int

    def __post_init__(self):
        if self.a1 < 2 or self.a2 < 2:
            raise WeightError(f"need a1, a2 >= 2, got ({self.a1}, {self.a2})")
        if self.a1 * self.a2 <= 4:
            raise WeightError(f"need a1*a2 > 4, got {self.a1 * self.a2}")

    @property
    def symmetric(self) -> bool:
        return self.a1 == self.a2

    def alpha(self, i: int) -> Weight:
        return Weight(2, -self.a2) if i == 1 else Weight(-self.a1, 2)

    def entry(self, i: int, j: int) -> int:
        """<alpha_j, alpha_i^vee>, i.e. the (i, j) Cartan matrix entry."""
        return self.alpha(j).pair(i)

    def c(self, j: int) -> int:
        """Coefficients of the image inequalities of the polyhedral realization."""
        return _c_table(self)[j]


_TABLES: dict = {}
_TABLES_LOCK = threading.Lock()


def _cached(key, build):
    table = _TABLES.get(key)
    if table is None:
        with _TABLES_LOCK:
            table = _TABLES.setdefault(key, build())
    return table


def _c_table(cartan: CartanData) -> _Recurrence:
    a1, a2 = cartan.a1, cartan.a2
    return _cached(("c", a1, a2), lambda: _Recurrence(
        lambda l: a1 if l % 2 == 0 else a2,
        up_start=1, up_seed=(1, a1), down_start=0, down_seed=(1, a2)))


def c_seq(cartan: CartanData, j: int) -> int:
    return cartan.c(j)


def simple_reflection(cartan: CartanData, w: Weight, i: int) -> Weight:
    return w - w.pair(i) * cartan.alpha(i)


class ShapeKind(Enum):
    CASE_I = "I"     # k2 <= k1 < (a1 - 1) k2
    CASE_II = "II"   # k1 < k2 <= (a2 - 1) k1


@dataclass(frozen=True)
class ShapeWeight:
    """lambda = k1 L1 - k2 L2 whose W-orbit misses both dominant cones.

    Construct through :func:`classify_weight` or :meth:`of`; the constructor
    re-checks the case condition.
    """

    cartan: CartanData
    k1: int
    k2: int
    kind: ShapeKind

    def __post_init__(self):
        if _case_of(self.cartan, self.k1, self.k2) is not self.kind:
            raise WeightError(
                f"k1={self.k1}, k2={self.k2} is not of case {self.kind.value}")

    @classmethod
    def of(cls, a1: int, a2: int, k1: int, k2: int) -> "ShapeWeight":
        return classify_weight(CartanData(a1, a2), Weight(k1, -k2))

    @property
    def weight(self) -> Weight:
        return Weight(self.k1, -self.k2)

    def p(self, m: int) -> int:
        return _p_table(self)[m]

    def orbit(self, m: int) -> Weight:
        return orbit_weight(self, m)

    def __str__(self) -> str:
        return (f"{self.k1}L1-{self.k2}L2 "
                f"[a1={self.cartan.a1}, a2={self.cartan.a2}]")


def _p_table(shape: ShapeWeight) -> _Recurrence:
    a1, a2 = shape.cartan.a1, shape.cartan.a2
    k1, k2 = shape.k1, shape.k2
    return _cached(("p", a1, a2, k1, k2), lambda: _Recurrence(
        lambda l: a2 if l % 2 == 0 else a1,
        up_start=0, up_seed=(k2, k1), down_start=1, down_seed=(k1, k2)))


def p_seq(shape: ShapeWeight, m: int) -> int:
    return shape.p(m)


def _case_of(cartan: CartanData, k1: int, k2: int) -> ShapeKind | None:
    if k1 <= 0 or k2 <= 0:
        return None
    if k2 <= k1 < (cartan.a1 - 1) * k2:
        return ShapeKind.CASE_I
    if k1 < k2 <= (cartan.a2 - 1) * k1:
        return ShapeKind.CASE_II
    return None


def classify_weight(cartan: CartanData, w: Weight) -> ShapeWeight:
    """Return ``w`` as a :class:`ShapeWeight`, or raise naming the failed condition."""
    if not w.is_integral():
        raise WeightError(f"{w} is not integral")
    k1, k2 = int(w.c1), -int(w.c2)
    if k1 > 0 and k2 < 0:
        raise WeightError(f"{w} is dominant")
    if k1 < 0 and k2 > 0:
        raise WeightError(f"{w} is antidominant")
    if k1 <= 0 or k2 <= 0:
        raise WeightError(f"{w} is not of the form k1 L1 - k2 L2 with k1, k2 > 0")
    kind = _case_of(cartan, k1, k2)
    if kind is None:
        a1, a2 = cartan.a1, cartan.a2
        if k1 >= k2:
            why = f"case I needs k2 <= k1 < (a1-1)k2, but {k1} >= {(a1 - 1) * k2}"
        else:
            why = f"case II needs k1 < k2 <= (a2-1)k1, but {k2} > {(a2 - 1) * k1}"
        raise WeightError(f"{w} rejected: {why}")
    return ShapeWeight(cartan, k1, k2, kind)


def orbit_weight(shape: ShapeWeight, m: int) -> Weight:
    """x_m lambda; consecutive members differ by x_m = x_{m-1} - p_m alpha_{letter(m)}."""
    if m % 2 == 0:
        return Weight(shape.p(m + 1), -shape.p(m))
    return Weight(-shape.p(m), shape.p(m + 1))


def weyl_word(m: int) -> list[int]:
    """Simple reflections making up x_m, in the order they act (rightmost first)."""
    if m >= 0:
        return [1 if t % 2 == 0 else 2 for t in range(m)]
    return [2 if t % 2 == 0 else 1 for t in range(-m)]


def root_coords(shape: ShapeWeight, mu: Weight) -> tuple[int, int]:
    """(n1, n2) with mu = lambda - n1 alpha_1 - n2 alpha_2; raise if not integral."""
    a1, a2 = shape.cartan.a1, shape.cartan.a2
    d = shape.weight - mu
    det = 4 - a1 * a2
    n1 = Fraction(2 * d.c1 + a1 * d.c2, det)
    n2 = Fraction(a2 * d.c1 + 2 * d.c2, det)
    if n1.denominator != 1 or n2.denominator != 1:
        raise WeightError(f"{mu} - lambda is not in the root lattice")
    return int(n1), int(n2)


def from_root_coords(shape: ShapeWeight, n1: int, n2: int) -> Weight:
    c = shape.cartan
    return shape.weight - n1 * c.alpha(1) - n2 * c.alpha(2)
