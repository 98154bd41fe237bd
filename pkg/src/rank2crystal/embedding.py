"""The map from one-step LS paths into the polyhedral tensor crystal, and checks on it."""
from __future__ import annotations

from typing import Callable, Optional

from . import lspath, polyhedral
from .algebra import letter
from .lspath import LSPath
from .polyhedral import TensorElement
from .report import Report

ThetaFn = Callable[[LSPath], TensorElement]


def theta_entry(path: LSPath, k: int) -> int:
    """z_k of the image of ``path``."""
    m, n, p = path.m, path.n, path.shape.p
    inside = n + 1 <= k <= m
    if k >= 1:
        if inside:
            return path.qj(k)
        return p(k) if k <= n else 0
    if inside:
        return path.qj(k) - p(k)
    return -p(k) if k >= m + 1 else 0


def theta(path: LSPath) -> TensorElement:
    m, n = path.m, path.n
    lo, hi = min(n, 0) + 1, max(m, 0)
    seq = {k: theta_entry(path, k) for k in range(lo, hi + 1)}
    shape = path.shape
    return TensorElement.make(shape.cartan, shape.weight,
                              {k: v for k, v in seq.items() if k >= 1 and v},
                              {k: v for k, v in seq.items() if k <= 0 and v})


def _same(a: Optional[TensorElement], b: Optional[TensorElement]) -> bool:
    return a == b


def verify_morphism(path: LSPath, i: int, theta_fn: ThetaFn = theta) -> Report:
    """wt / eps / phi agree and theta commutes with e_i and f_i (None <-> None)."""
    rep = Report(f"morphism {path} i={i}")
    y = theta_fn(path)
    wt_path = lspath.weight(path)
    rep.check("wt", polyhedral.crystal_wt(y) == wt_path,
              f"{polyhedral.crystal_wt(y)} != {wt_path}")
    eps, phi = lspath.eps_phi(path, i)
    rep.check("eps", polyhedral.crystal_eps(y, i) == eps,
              f"{polyhedral.crystal_eps(y, i)} != {eps}")
    rep.check("phi", polyhedral.crystal_phi(y, i) == phi,
              f"{polyhedral.crystal_phi(y, i)} != {phi}")
    for name, on_path, on_tensor in (("e", lspath.raising, polyhedral.raising),
                                     ("f", lspath.lowering, polyhedral.lowering)):
        moved = on_path(path, i)
        lhs = None if moved is None else theta_fn(moved)
        rhs = on_tensor(y, i)
        rep.check(f"{name}_{i} commutes", _same(lhs, rhs), f"{lhs} != {rhs}")
    return rep


def sigma_cross_check(path: LSPath, theta_fn: ThetaFn = theta) -> Report:
    """-sigma_k of the image equals H_{letter(k)} at 0, at q_k/p_k, or at 1.

    The time is 0 above the top segment (k > m), the turning time q_k/p_k
    for n < k <= m, and 1 for k <= n.
    """
    rep = Report(f"sigma table {path}")
    y = theta_fn(path)
    bps = [t for t, _ in lspath.breakpoints(path)]
    h = {i: lspath.heights(path, i) for i in (1, 2)}
    m, n = path.m, path.n
    for k in range(min(n, 0) - 2, max(m, 0) + 3):
        i = letter(k)
        if k > m:
            idx = 0
        elif k <= n:
            idx = len(bps) - 1
        else:
            idx = m - k + 1
        expected = h[i][idx]
        got = -polyhedral.sigma_k(y, k)
        rep.check(f"k={k}", got == expected,
                  f"-sigma_{k}={got}, H_{i}({bps[idx]})={expected}")
    return rep


def image_report(path: LSPath, depth: int = 8, theta_fn: ThetaFn = theta) -> Report:
    """Image inequalities on both factors and (truncated) crystal-basis membership."""
    rep = Report(f"image {path}")
    y = theta_fn(path)
    cartan = y.cartan
    plus_ok = rep.check("plus in image", polyhedral.membership_plus(cartan, y.plus), str(y))
    minus_ok = rep.check("minus in image", polyhedral.membership_minus(cartan, y.minus), str(y))
    if plus_ok and minus_ok:
        rep.check(f"in crystal basis (depth {depth})",
                  polyhedral.is_in_crystal_basis(y, depth), str(y))
    return rep
