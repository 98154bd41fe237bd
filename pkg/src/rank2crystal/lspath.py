"""LS paths of shape lambda whose directions step down the Weyl orbit one at a time.

A path is stored canonically as ``(m, n, q)``: it runs along x_m lambda, then
x_{m-1} lambda, ..., x_n lambda, turning from x_j lambda to x_{j-1} lambda at
time q_j / p_j.  ``q`` lists q_m, q_{m-1}, ..., q_{n+1}.

Root operators follow Littelmann's definition on the underlying piecewise
linear path (reflect the piece between t0 and t1, shift the rest), and the
result is brought back to canonical form.  Everything is exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .algebra import ShapeWeight, Weight, letter, orbit_weight


class PathError(ValueError):
    """Data does not describe an element of the crystal."""


@dataclass(frozen=True)
class LSPath:
    shape: ShapeWeight
    m: int
    n: int
    q: tuple[int, ...] = ()

    def __post_init__(self):
        _check(self.shape, self.m, self.n, self.q)

    def qj(self, j: int) -> int:
        return self.q[self.m - j]

    def turn(self, j: int) -> Fraction:
        """Time at which the path leaves x_j lambda, for n < j <= m."""
        return Fraction(self.qj(j), self.shape.p(j))

    def encode(self) -> str:
        return f"{self.m}:{self.n}:[{','.join(map(str, self.q))}]"

    def __str__(self) -> str:
        return self.encode()


def _check(shape: ShapeWeight, m: int, n: int, q) -> None:
    if n > m:
        raise PathError(f"need n <= m, got m={m}, n={n}")
    if len(q) != m - n:
        raise PathError(f"expected {m - n} numerators, got {len(q)}")
    for idx, qj in enumerate(q):
        j = m - idx
        pj = shape.p(j)
        if not 0 < qj < pj:
            raise PathError(f"need 0 < q_{j} < p_{j}={pj}, got q_{j}={qj}")
    for idx in range(len(q) - 1):
        j = m - idx - 1  # compare q_{j+1}/p_{j+1} with q_j/p_j
        if q[idx] * shape.p(j) >= q[idx + 1] * shape.p(j + 1):
            raise PathError(
                f"need q_{j + 1}/p_{j + 1} < q_{j}/p_{j}, got "
                f"{q[idx]}/{shape.p(j + 1)} >= {q[idx + 1]}/{shape.p(j)}")


def validate(shape: ShapeWeight, m: int, n: int, numerators) -> LSPath:
    return LSPath(shape, m, n, tuple(numerators))


def straight_line(shape: ShapeWeight) -> LSPath:
    return LSPath(shape, 0, 0, ())


def segments(path: LSPath) -> list[tuple[int, Fraction, Fraction]]:
    """(j, start, end) for each piece of the path, in time order."""
    times = [Fraction(0)] + [path.turn(j) for j in range(path.m, path.n, -1)] + [Fraction(1)]
    return [(path.m - idx, times[idx], times[idx + 1]) for idx in range(len(times) - 1)]


def breakpoints(path: LSPath) -> list[tuple[Fraction, Optional[int]]]:
    """Turning times, each with the orbit index of the piece starting there."""
    segs = segments(path)
    return [(s, j) for j, s, _ in segs] + [(Fraction(1), None)]


def evaluate(path: LSPath, t) -> Weight:
    t = Fraction(t)
    if not 0 <= t <= 1:
        raise PathError(f"t={t} outside [0, 1]")
    total = Weight(Fraction(0), Fraction(0))
    for j, s, e in segments(path):
        if t <= s:
            break
        total = total + (min(t, e) - s) * orbit_weight(path.shape, j)
    return total


def weight(path: LSPath) -> Weight:
    """x_n lambda - sum_j q_j alpha_{letter(j)}."""
    cartan = path.shape.cartan
    w = orbit_weight(path.shape, path.n)
    for j in range(path.n + 1, path.m + 1):
        w = w - path.qj(j) * cartan.alpha(letter(j))
    return w


def _heights(segs, shape: ShapeWeight, i: int) -> list[Fraction]:
    """H_i at every segment boundary of ``segs``."""
    h = [Fraction(0)]
    for j, s, e in segs:
        h.append(h[-1] + (e - s) * orbit_weight(shape, j).pair(i))
    return h


def heights(path: LSPath, i: int) -> list[Fraction]:
    return _heights(segments(path), path.shape, i)


def _check_minima(h: list[Fraction], i: int, path: LSPath) -> None:
    for idx in range(1, len(h) - 1):
        if h[idx] <= h[idx - 1] and h[idx] <= h[idx + 1] and h[idx].denominator != 1:
            raise PathError(f"H_{i} has a non-integral local minimum {h[idx]} on {path}")


def h_min(path: LSPath, i: int) -> tuple[int, Fraction]:
    """Minimum of H_i on [0, 1] and the first time it is reached."""
    segs = segments(path)
    h = _heights(segs, path.shape, i)
    _check_minima(h, i, path)
    low = min(h)
    times = [s for _, s, _ in segs] + [Fraction(1)]
    return int(low), times[h.index(low)]


def eps_phi(path: LSPath, i: int) -> tuple[int, int]:
    h = heights(path, i)
    low = min(h)
    return int(-low), int(h[-1] - low)


def _reflected(j: int, i: int) -> int:
    # s_i x_j lambda is x_{j-1} lambda when i is the letter of j, else x_{j+1} lambda.
    return j - 1 if letter(j) == i else j + 1


def _rebuild(shape: ShapeWeight, segs, t0: Fraction, t1: Fraction, i: int) -> LSPath:
    pieces = []
    for j, s, e in segs:
        for a, b in ((s, min(e, t0)), (max(s, t0), min(e, t1)), (max(s, t1), e)):
            if a < b:
                inside = t0 <= a and b <= t1
                pieces.append((_reflected(j, i) if inside else j, a, b))
    merged = []
    for j, a, b in pieces:
        if merged and merged[-1][0] == j:
            merged[-1] = (j, merged[-1][1], b)
        else:
            merged.append((j, a, b))
    dirs = [j for j, _, _ in merged]
    if any(x - y != 1 for x, y in zip(dirs, dirs[1:])):
        raise PathError(f"result leaves the one-step subcrystal: directions {dirs}")
    q = []
    for j, _, b in merged[:-1]:
        qj = b * shape.p(j)
        if qj.denominator != 1:
            raise PathError(f"turning time {b} is not a multiple of 1/p_{j}")
        q.append(int(qj))
    return LSPath(shape, dirs[0], dirs[-1], tuple(q))


def _crossing(h_start, h_end, s, e, level) -> Fraction:
    if h_end == h_start:
        return e
    return s + (level - h_start) / (h_end - h_start) * (e - s)


def raising(path: LSPath, i: int) -> Optional[LSPath]:
    """e_i, or None."""
    segs = segments(path)
    h = _heights(segs, path.shape, i)
    _check_minima(h, i, path)
    low = min(h)
    if low == 0:
        return None
    k1 = h.index(low)
    t1 = segs[k1 - 1][2]
    level = low + 1
    t0 = None
    for k in range(k1 - 1, -1, -1):
        j, s, e = segs[k]
        if min(h[k], h[k + 1]) <= level <= max(h[k], h[k + 1]):
            t0 = _crossing(h[k], h[k + 1], s, e, level)
            break
    assert t0 is not None
    return _rebuild(path.shape, segs, t0, t1, i)


def lowering(path: LSPath, i: int) -> Optional[LSPath]:
    """f_i, or None."""
    segs = segments(path)
    h = _heights(segs, path.shape, i)
    _check_minima(h, i, path)
    low = min(h)
    if h[-1] - low == 0:
        return None
    k0 = len(h) - 1 - h[::-1].index(low)
    t0 = segs[k0][1]
    level = low + 1
    t1 = None
    for k in range(k0, len(segs)):
        j, s, e = segs[k]
        if min(h[k], h[k + 1]) <= level <= max(h[k], h[k + 1]):
            t1 = _crossing(h[k], h[k + 1], s, e, level)
            break
    assert t1 is not None
    return _rebuild(path.shape, segs, t0, t1, i)


def decode(shape: ShapeWeight, text: str) -> LSPath:
    """Inverse of :meth:`LSPath.encode`."""
    m, n, rest = text.split(":", 2)
    body = rest.strip()[1:-1].strip()
    q = tuple(int(x) for x in body.split(",")) if body else ()
    return LSPath(shape, int(m), int(n), q)
