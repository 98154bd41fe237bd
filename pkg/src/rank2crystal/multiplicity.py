"""Weight multiplicities of the extremal weight module V(L1 - L2), symmetric case.

With A = ((2, -a), (-a, 2)), a >= 3, the weight-mu elements of the crystal
basis below (resp. above) lambda = L1 - L2 are counted by sequences
y_1, y_2, ... with y_1 = 1 (resp. y_0, y_-1, ... with y_0 = -1) whose
successors are bounded by F(x) = floor(gamma x) (resp. F'(x) = ceil(gamma x)),
gamma = (a + sqrt(a^2 - 4)) / 2, and whose odd/even position sums are the
root coordinates of lambda - mu.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .algebra import ShapeWeight, Weight, WeightError, root_coords
from .embedding import theta
from .lspath import LSPath
from .report import Report


@dataclass(frozen=True)
class SymmetricConfig:
    a: int

    def __post_init__(self):
        if self.a < 3:
            raise WeightError(f"need a >= 3, got {self.a}")

    @property
    def shape(self) -> ShapeWeight:
        return ShapeWeight.of(self.a, self.a, 1, 1)


class Side(Enum):
    MINUS = "minus"   # sequences y_1, y_2, ... >= 0
    PLUS = "plus"     # sequences y_0, y_-1, ... <= 0


def big_f(cfg: SymmetricConfig, x: int) -> int:
    """floor(gamma x) for x >= 0, exactly."""
    if x < 0:
        raise ValueError("F is defined for x >= 0")
    a = cfg.a
    # (a^2 - 4) is never a square for a >= 3, so sqrt((a^2-4) x^2) is irrational
    # for x > 0 and floor((a x + s) / 2) == (a x + floor(s)) // 2.
    return (a * x + math.isqrt((a * a - 4) * x * x)) // 2


def big_f_prime(cfg: SymmetricConfig, x: int) -> int:
    """ceil(gamma x) for x <= 0; equals -F(-x) because gamma x is never an integer."""
    if x > 0:
        raise ValueError("F' is defined for x <= 0")
    return -big_f(cfg, -x)


def n_index(cfg: SymmetricConfig, x: int) -> int:
    """The n >= 1 with p_{n-1} < x <= p_n (x >= 2); n(1) = 1."""
    if x < 1:
        raise ValueError("n(x) needs x >= 1")
    if x == 1:
        return 1
    p = cfg.shape.p
    n = 1
    while not p(n - 1) < x <= p(n):
        n += 1
    return n


def n_prime_index(cfg: SymmetricConfig, x: int) -> int:
    """The n <= -1 with -p_n <= x < -p_{n+1} (x <= -2); n'(-1) = 0."""
    if x > -1:
        raise ValueError("n'(x) needs x <= -1")
    if x == -1:
        return 0
    p = cfg.shape.p
    n = -1
    while not -p(n) <= x < -p(n + 1):
        n -= 1
    return n


def big_f_definitional(cfg: SymmetricConfig, x: int) -> int:
    """F(x) as the integer with F/p_{n+1} <= x/p_n < (F+1)/p_{n+1}, n = n(x)."""
    if x == 0:
        return 0
    p = cfg.shape.p
    n = n_index(cfg, x)
    return (x * p(n + 1)) // p(n)


def big_f_prime_definitional(cfg: SymmetricConfig, x: int) -> int:
    """F'(x) as the integer with (F'-1)/p_{n-1} < x/p_n <= F'/p_{n-1}, n = n'(x)."""
    if x == 0:
        return 0
    p = cfg.shape.p
    n = n_prime_index(cfg, x)
    return -((-x * p(n - 1)) // p(n))


def count_y(cfg: SymmetricConfig, n1: int, n2: int, m: int, side: Side) -> int:
    """#Y_-(n1, n2; m) or #Y_+(n1, n2; m); 0 outside the admissible key range."""
    if side is Side.MINUS:
        if n1 < 0 or n2 < 0 or not 0 <= m <= n1:
            return 0
        return _count_minus(cfg.a, n1, n2, m)
    if n1 > 0 or n2 > 0 or not n2 <= m <= 0:
        return 0
    return _count_plus(cfg.a, n1, n2, m)


@lru_cache(maxsize=None)
def _count_minus(a: int, n1: int, n2: int, m: int) -> int:
    # m sits at an odd position and counts toward n1; the next entry y_2 = l
    # starts a sequence whose roles of odd and even positions are swapped.
    if m == 0:
        return int(n1 == 0 and n2 == 0)
    if n2 == 0:
        return int(m == n1)
    cfg = SymmetricConfig(a)
    total = 0
    for l in range(1, min(big_f(cfg, m), n2) + 1):
        assert n2 + (n1 - m) < n1 + n2
        total += _count_minus(a, n2, n1 - m, l)
    return total


@lru_cache(maxsize=None)
def _count_plus(a: int, n1: int, n2: int, m: int) -> int:
    # mirror image: m sits at position 0 (even) and counts toward n2.
    if m == 0:
        return int(n1 == 0 and n2 == 0)
    if n1 == 0:
        return int(m == n2)
    cfg = SymmetricConfig(a)
    total = 0
    for l in range(max(big_f_prime(cfg, m), n1), 0):
        assert (n2 - m) + n1 > n1 + n2
        total += _count_plus(a, n2 - m, n1, l)
    return total


def brute_force_y(cfg: SymmetricConfig, n1: int, n2: int, m: int, side: Side,
                  support_bound: int | None = None) -> int:
    """Count Y_-(n1, n2; m) / Y_+(n1, n2; m) by enumerating sequences directly."""
    return len(enumerate_y(cfg, n1, n2, m, side, support_bound))


def enumerate_y(cfg: SymmetricConfig, n1: int, n2: int, m: int, side: Side,
                support_bound: int | None = None) -> list[tuple[int, ...]]:
    """All members, each as its entries from the first position outward (zeros dropped)."""
    sgn = 1 if side is Side.MINUS else -1
    # work with magnitudes; position 0 of ``seq`` is y_1 (minus) or y_0 (plus)
    first, second = (n1, n2) if side is Side.MINUS else (-n2, -n1)
    if sgn * m < 0 or first < 0 or second < 0:
        return []
    bound = support_bound if support_bound is not None else first + second + 1
    bound_fn = big_f if side is Side.MINUS else (lambda c, x: -big_f_prime(c, -x))
    out = []

    def walk(seq, sums):
        if sums == [first, second]:
            out.append(tuple(sgn * v for v in seq))
        if len(seq) >= bound or seq[-1] == 0:
            return
        slot = len(seq) % 2
        for v in range(1, bound_fn(cfg, seq[-1]) + 1):
            if sums[slot] + v > (first, second)[slot]:
                break
            sums[slot] += v
            walk(seq + [v], sums)
            sums[slot] -= v

    start = sgn * m
    if start == 0:
        return [()] if first == second == 0 else []
    if start <= first:
        walk([start], [start, 0])
    return out


def multiplicity(cfg: SymmetricConfig, mu: Weight) -> int:
    """dim V(L1 - L2)_mu."""
    shape = cfg.shape
    try:
        n1, n2 = root_coords(shape, mu)
    except WeightError:
        return 0
    if n1 == 0 and n2 == 0:
        return 1
    if n1 >= 0 and n2 >= 0:
        return count_y(cfg, n1, n2, 1, Side.MINUS)
    if n1 <= 0 and n2 <= 0:
        return count_y(cfg, n1, n2, -1, Side.PLUS)
    return 0


def multiplicity_at(cfg: SymmetricConfig, n1: int, n2: int) -> int:
    """Multiplicity of lambda - n1 alpha_1 - n2 alpha_2."""
    c = cfg.shape.cartan
    return multiplicity(cfg, cfg.shape.weight - n1 * c.alpha(1) - n2 * c.alpha(2))


# Z = Y -----------------------------------------------------------------------

def _paths_with_sum(shape: ShapeWeight, bound: int, side: Side) -> list[LSPath]:
    """Paths with 1 <= n <= m (side MINUS) or n <= m <= -1 (side PLUS) whose
    image has total |entry| sum at most ``bound``.

    Both sides are grown outward from the entry next to t_lambda, so every
    step adds at least 1 to the total.
    """
    p = shape.p
    found = []

    def grow_up(n, q, total, m):
        # q holds q_{n+1}, ..., q_m; try adding q_{m+1}
        found.append(LSPath(shape, m, n, tuple(reversed(q))))
        j = m + 1
        for qj in range(1, p(j)):
            if q and qj * p(j - 1) >= q[-1] * p(j):
                break
            if total + qj > bound:
                break
            grow_up(n, q + [qj], total + qj, j)

    def grow_down(m, q, total, n):
        # q holds q_m, ..., q_{n+1}; try adding q_n
        found.append(LSPath(shape, m, n, tuple(q)))
        j = n
        for qj in range(p(j) - 1, 0, -1):
            if q and qj * p(j + 1) <= q[-1] * p(j):
                break
            if total + p(j) - qj > bound:
                break
            grow_down(m, q + [qj], total + p(j) - qj, j - 1)

    if side is Side.MINUS:
        n, base = 1, p(1)
        while base <= bound:
            grow_up(n, [], base, n)
            n += 1
            base += p(n)
    else:
        m, base = -1, p(0)
        while base <= bound:
            grow_down(m, [], base, m)
            m -= 1
            base += p(m + 1)
    return found


def z_equals_y_check(cfg: SymmetricConfig, bound: int) -> Report:
    """Compare, up to total size ``bound``, the plus (minus) parts of images of
    paths with 1 <= n <= m (n <= m <= -1) against the sequences y_1 = 1,
    y_{j+1} <= F(y_j) (y_0 = -1, y_{j-1} >= F'(y_j))."""
    rep = Report(f"Z = Y, a={cfg.a}, bound={bound}")
    shape = cfg.shape
    for side in (Side.MINUS, Side.PLUS):
        z_set = set()
        for path in _paths_with_sum(shape, bound, side):
            y = theta(path)
            part = y.plus if side is Side.MINUS else y.minus
            other_part = y.minus if side is Side.MINUS else y.plus
            rep.check(f"{side.value}: {path} has one-sided image", not other_part, str(y))
            keys = sorted(part, reverse=side is Side.PLUS)
            z_set.add(tuple(part[k] for k in keys))
        y_set = set()
        for s in range(1, bound + 1):
            for n1 in range(0, s + 1):
                n2 = s - n1
                if side is Side.MINUS:
                    y_set.update(enumerate_y(cfg, n1, n2, 1, side))
                else:
                    y_set.update(enumerate_y(cfg, -n1, -n2, -1, side))
        rep.check(f"{side.value}: Z subset Y", z_set <= y_set, str(sorted(z_set - y_set)))
        rep.check(f"{side.value}: Y subset Z", y_set <= z_set, str(sorted(y_set - z_set)))
        rep.check(f"{side.value}: nonempty", len(z_set) > 0)
    return rep
