"""Verification suites shared by the CLI and the acceptance tests.

Each suite returns a :class:`Report`; nothing here raises on a failed check.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction

from . import lspath, polyhedral
from .algebra import ShapeWeight, root_coords
from .crystalgraph import PATHS, TENSORS, Model, bfs_ball, path_ball, tensor_ball
from .embedding import ThetaFn, image_report, sigma_cross_check, theta, verify_morphism
from .multiplicity import (Side, SymmetricConfig, big_f, big_f_definitional, big_f_prime,
                           big_f_prime_definitional, brute_force_y, count_y, multiplicity_at,
                           n_index, n_prime_index, z_equals_y_check)
from .report import Report


def morphism_suite(shape: ShapeWeight, radius: int, theta_fn: ThetaFn = theta) -> Report:
    rep = Report(f"morphism [{shape}] r={radius}")
    ball = path_ball(shape, radius)
    for b in ball:
        for i in (1, 2):
            rep.extend(verify_morphism(b, i, theta_fn))
    images = [theta_fn(b) for b in ball]
    rep.check("theta injective on ball", len(set(images)) == len(ball))
    return rep


def image_suite(shape: ShapeWeight, radius: int, depth: int = 8,
                theta_fn: ThetaFn = theta) -> Report:
    rep = Report(f"image [{shape}] r={radius} depth={depth}")
    for b in path_ball(shape, radius):
        rep.extend(image_report(b, depth, theta_fn))
    return rep


def sigma_suite(shape: ShapeWeight, radius: int, theta_fn: ThetaFn = theta) -> Report:
    rep = Report(f"sigma table [{shape}] r={radius}")
    for b in path_ball(shape, radius):
        rep.extend(sigma_cross_check(b, theta_fn))
    return rep


def _axioms(rep: Report, ball, model: Model, alpha) -> None:
    for b in ball:
        for i in (1, 2):
            eps, phi = model.eps(b, i), model.phi(b, i)
            wt = model.weight(b)
            tag = f"{b} i={i}"
            rep.check(f"{tag}: eps, phi >= 0", eps >= 0 and phi >= 0)
            rep.check(f"{tag}: phi - eps = <wt, alpha_i>", phi - eps == wt.pair(i))
            fb = model.lower(b, i)
            rep.check(f"{tag}: f null iff phi = 0", (fb is None) == (phi == 0))
            if fb is not None:
                rep.check(f"{tag}: e f b = b", model.raise_(fb, i) == b)
                rep.check(f"{tag}: eps(f b) = eps + 1", model.eps(fb, i) == eps + 1)
                rep.check(f"{tag}: phi(f b) = phi - 1", model.phi(fb, i) == phi - 1)
                rep.check(f"{tag}: wt(f b) = wt - alpha_i", model.weight(fb) == wt - alpha(i))
            eb = model.raise_(b, i)
            rep.check(f"{tag}: e null iff eps = 0", (eb is None) == (eps == 0))
            if eb is not None:
                rep.check(f"{tag}: f e b = b", model.lower(eb, i) == b)
                rep.check(f"{tag}: wt(e b) = wt + alpha_i", model.weight(eb) == wt + alpha(i))


def _alternates(h) -> bool:
    steps = [y - x for x, y in zip(h, h[1:])]
    return all(s != 0 for s in steps) and all(s * t < 0 for s, t in zip(steps, steps[1:]))


def axiom_suite(shape: ShapeWeight, radius: int) -> Report:
    """Normal-crystal bookkeeping on both models, plus path-side invariants."""
    rep = Report(f"axioms [{shape}] r={radius}")
    alpha = shape.cartan.alpha
    paths = path_ball(shape, radius)
    _axioms(rep, paths, PATHS, alpha)
    for b in paths:
        rep.check(f"{b}: weight = evaluate(1)", lspath.weight(b) == lspath.evaluate(b, 1))
        for i in (1, 2):
            h = lspath.heights(b, i)
            rep.check(f"{b}: H_{i} alternates at breakpoints", _alternates(h), str(h))
            rep.check(f"{b}: H_{i} minima integral",
                      all(x.denominator == 1 for k, x in enumerate(h)
                          if (k == 0 or x <= h[k - 1]) and (k == len(h) - 1 or x <= h[k + 1])))
    tensors = tensor_ball(shape, radius)
    _axioms(rep, tensors, TENSORS, alpha)
    cartan = shape.cartan
    for y in tensors:
        rep.check(f"{y}: in image", polyhedral.membership_plus(cartan, y.plus)
                  and polyhedral.membership_minus(cartan, y.minus))
    return rep


def star_suite(shape: ShapeWeight, radius: int) -> Report:
    rep = Report(f"star and Weyl action [{shape}] r={radius}")
    c = shape.cartan
    for y in tensor_ball(shape, radius):
        s = polyhedral.star(y)
        rep.check(f"{y}: wt(y*) = -mu", polyhedral.crystal_wt(s) == -y.mu)
        rep.check(f"{y}: y** = y", polyhedral.star(s) == y)
        for i in (1, 2):
            r = polyhedral.reflect(y, i)
            rep.check(f"{y}: S_{i} S_{i} = id", polyhedral.reflect(r, i) == y)
            wt = polyhedral.crystal_wt(y)
            rep.check(f"{y}: wt(S_{i} y) = s_{i} wt",
                      polyhedral.crystal_wt(r) == wt - wt.pair(i) * c.alpha(i))
            rep.check(f"{y}: S_{i} keeps image",
                      polyhedral.membership_plus(c, r.plus)
                      and polyhedral.membership_minus(c, r.minus))
    return rep


def structure_suite(shape: ShapeWeight, radius: int, depth: int = 8) -> Report:
    """One tensor side vanishes, and positive/negative root offsets are f-/e-reachable."""
    rep = Report(f"structure [{shape}] r={radius}")
    if 1 not in (shape.k1, shape.k2):
        rep.check("needs k1 = 1 or k2 = 1", False, str(shape))
        return rep
    ball = tensor_ball(shape, radius)
    z = polyhedral.zero_element(shape.cartan, shape.weight)
    f_only = set(bfs_ball(z, TENSORS, radius, ("f",)))
    e_only = set(bfs_ball(z, TENSORS, radius, ("e",)))
    for y in ball:
        if not polyhedral.is_in_crystal_basis(y, depth):
            rep.check(f"{y}: in crystal basis", False)
            continue
        rep.check(f"{y}: one side zero", not y.plus or not y.minus)
        n1, n2 = root_coords(shape, polyhedral.crystal_wt(y))
        if (n1, n2) == (0, 0):
            rep.check(f"{y}: weight lambda only at z", y == z)
        elif n1 >= 0 and n2 >= 0:
            rep.check(f"{y}: f-reachable", y in f_only or n1 + n2 > radius)
        elif n1 <= 0 and n2 <= 0:
            rep.check(f"{y}: e-reachable", y in e_only or -(n1 + n2) > radius)
        else:
            rep.check(f"{y}: root coords of one sign", False, f"({n1},{n2})")
    return rep


def count_suite(cfg: SymmetricConfig, max_total: int) -> Report:
    """Recursive counts against exhaustive enumeration, both sides, and the mirror identity."""
    rep = Report(f"count_y vs brute force a={cfg.a} n1+n2<={max_total}")
    for s in range(max_total + 1):
        for n1 in range(s + 1):
            n2 = s - n1
            for m in range(n1 + 1):
                got = count_y(cfg, n1, n2, m, Side.MINUS)
                want = brute_force_y(cfg, n1, n2, m, Side.MINUS)
                rep.check(f"Y-({n1},{n2};{m})", got == want, f"{got} != {want}")
                mirror = count_y(cfg, -n2, -n1, -m, Side.PLUS)
                rep.check(f"Y+({-n2},{-n1};{-m}) mirrors", mirror == got, f"{mirror} != {got}")
            for m in range(-n2, 1):
                got = count_y(cfg, -n1, -n2, m, Side.PLUS)
                want = brute_force_y(cfg, -n1, -n2, m, Side.PLUS)
                rep.check(f"Y+({-n1},{-n2};{m})", got == want, f"{got} != {want}")
    return rep


def multiplicity_suite(cfg: SymmetricConfig, max_total: int) -> Report:
    """multiplicity = weight count in the f-only (e-only) path ball = brute force."""
    rep = Report(f"multiplicity a={cfg.a} |n1+n2|<={max_total}")
    shape = cfg.shape
    for kinds, sign, side in ((("f",), 1, Side.MINUS), (("e",), -1, Side.PLUS)):
        ball = path_ball(shape, max_total, kinds)
        counts = Counter(root_coords(shape, lspath.weight(b)) for b in ball)
        for s in range(max_total + 1):
            for n1 in range(s + 1):
                n1s, n2s = sign * n1, sign * (s - n1)
                got = multiplicity_at(cfg, n1s, n2s)
                rep.check(f"({n1s},{n2s}) vs ball", got == counts.get((n1s, n2s), 0),
                          f"{got} != {counts.get((n1s, n2s), 0)}")
                if s:
                    brute = brute_force_y(cfg, n1s, n2s, sign, side)
                    rep.check(f"({n1s},{n2s}) vs brute force", got == brute, f"{got} != {brute}")
    # mixed signs never occur
    for n1, n2 in ((1, -1), (-1, 1), (3, -2)):
        rep.check(f"({n1},{n2}) mixed signs -> 0", multiplicity_at(cfg, n1, n2) == 0)
    rep.check("lambda -> 1", multiplicity_at(cfg, 0, 0) == 1)
    return rep


def f_suite(cfg: SymmetricConfig, x_max: int = 10_000, p_max: int = 40,
            stab_x: int = 1000, stab_extra: int = 20) -> Report:
    rep = Report(f"F functions a={cfg.a}")
    p = cfg.shape.p
    closed = all(big_f(cfg, x) == big_f_definitional(cfg, x) for x in range(x_max + 1))
    rep.check(f"F closed = definitional, 0<=x<={x_max}", closed)
    closed_p = all(big_f_prime(cfg, -x) == big_f_prime_definitional(cfg, -x)
                   for x in range(x_max + 1))
    rep.check(f"F' closed = definitional, -{x_max}<=x<=0", closed_p)
    rep.check(f"F' = -F(-x), -{x_max}<=x<=0",
              all(big_f_prime(cfg, -x) == -big_f(cfg, x) for x in range(x_max + 1)))
    rep.check(f"F(p_m) = p_m+1, 1<=m<={p_max}",
              all(big_f(cfg, p(m)) == p(m + 1) for m in range(1, p_max + 1)))
    rep.check(f"F'(-p_m) = -p_m-1, -{p_max}<=m<=-1",
              all(big_f_prime(cfg, -p(m)) == -p(m - 1) for m in range(-p_max, 0)))
    rep.check("F(0) = F'(0) = 0", big_f(cfg, 0) == 0 and big_f_prime(cfg, 0) == 0)
    stable = stable_p = True
    for x in range(1, stab_x + 1):
        f, n = big_f(cfg, x), n_index(cfg, x)
        for m in range(n, n + stab_extra + 1):
            r = Fraction(x, p(m))
            stable &= Fraction(f, p(m + 1)) <= r < Fraction(f + 1, p(m + 1))
        g, n = big_f_prime(cfg, -x), n_prime_index(cfg, -x)
        for m in range(n, n - stab_extra - 1, -1):
            r = Fraction(-x, p(m))
            stable_p &= Fraction(g - 1, p(m - 1)) < r <= Fraction(g, p(m - 1))
    rep.check(f"F stable over {stab_extra} extra indices, x<={stab_x}", stable)
    rep.check(f"F' stable over {stab_extra} extra indices, x>=-{stab_x}", stable_p)
    return rep


def full_verification(shape: ShapeWeight, radius: int, depth: int = 8,
                      theta_fn: ThetaFn = theta) -> list[Report]:
    """Everything the CLI verify command runs for one configuration."""
    reports = [
        morphism_suite(shape, radius, theta_fn),
        image_suite(shape, radius, depth, theta_fn),
        sigma_suite(shape, radius, theta_fn),
        axiom_suite(shape, radius),
    ]
    if 1 in (shape.k1, shape.k2):
        reports.append(structure_suite(shape, radius, depth))
    c = shape.cartan
    if c.symmetric and c.a1 >= 3 and (shape.k1, shape.k2) == (1, 1):
        cfg = SymmetricConfig(c.a1)
        reports.append(count_suite(cfg, radius))
        reports.append(multiplicity_suite(cfg, radius))
        reports.append(z_equals_y_check(cfg, radius))
    return reports


def corrupted_theta(path) -> polyhedral.TensorElement:
    """Test hook: theta with the first plus entry bumped by one."""
    y = theta(path)
    plus = dict(y.plus)
    k = min(plus, default=1)
    plus[k] = plus.get(k, 0) + 1
    return polyhedral.TensorElement.make(y.cartan, y.mu, plus, y.minus)
