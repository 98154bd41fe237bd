"""Polyhedral realization Z^{+inf} (x) T_mu (x) Z^{-inf} for iota+ = (...,2,1,2,1), iota- = (2,1,2,1,...).

An element is one finitely supported integer sequence y indexed by Z: entries
at k >= 1 form the plus factor (all >= 0), entries at k <= 0 the minus factor
(all <= 0).  Position k carries the simple root alpha_{letter(k)}.

Operators act through the sigma functionals.  Adding delta at position k0
shifts sigma_k by delta * <alpha_{i_k0}, alpha_{i_k}^vee> for every k < k0 and
sigma_k0 by delta; positions above k0 are untouched (for the tensor crystal
and for the plus factor alone).  Applying e_i or f_i many times therefore
keeps hitting the same position until a competitor's sigma catches up, and the
number of steps until that happens is the gap between the two.  ``_drive``
uses that to apply e_i^N / f_i^N in time independent of N, which keeps the
Weyl-group action cheap even though its exponents grow exponentially.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Optional

from .algebra import CartanData, Weight, WeightError, letter, weyl_word


class CrystalError(RuntimeError):
    """An operation that must be defined was not (bad input or a bug)."""


Seq = dict  # position -> nonzero integer


def _freeze(y: Seq) -> tuple[tuple[int, int], ...]:
    return tuple(sorted((k, v) for k, v in y.items() if v))


def _root_sum(cartan: CartanData, y: Seq) -> Weight:
    s1 = sum(v for k, v in y.items() if k % 2)
    s2 = sum(v for k, v in y.items() if not k % 2)
    return s1 * cartan.alpha(1) + s2 * cartan.alpha(2)


# sigma tables ---------------------------------------------------------------
# Each returns (lo, values) with values[k - lo] = sigma_k on a window that
# contains the whole support plus two positions of each parity on every open
# side; beyond the window sigma is constant per parity.

def _plus_part(cartan: CartanData, y: Seq, lo: int, hi: int) -> list[int]:
    """sigma^+_k for lo <= k <= hi (all k >= 1)."""
    out = [0] * (hi - lo + 1)
    s = {1: 0, 2: 0}  # sums of y_j over j > k, split by letter
    for k in range(hi, lo - 1, -1):
        ik = letter(k)
        yk = y.get(k, 0)
        out[k - lo] = yk + cartan.entry(ik, 1) * s[1] + cartan.entry(ik, 2) * s[2]
        s[ik] += yk
    return out


def _minus_part(cartan: CartanData, y: Seq, lo: int, hi: int) -> list[int]:
    """sigma^-_k for lo <= k <= hi (all k <= 0)."""
    out = [0] * (hi - lo + 1)
    s = {1: 0, 2: 0}  # sums of y_j over j < k
    for k in range(lo, hi + 1):
        ik = letter(k)
        yk = y.get(k, 0)
        out[k - lo] = -yk - cartan.entry(ik, 1) * s[1] - cartan.entry(ik, 2) * s[2]
        s[ik] += yk
    return out


def _plus_window(y: Seq) -> tuple[int, int]:
    return 1, max([k for k in y if k >= 1] + [0]) + 2


def _minus_window(y: Seq) -> tuple[int, int]:
    return min([k for k in y if k <= 0] + [1]) - 2, 0


def plus_sigmas(cartan: CartanData, y: Seq) -> tuple[int, list[int]]:
    lo, hi = _plus_window(y)
    return lo, _plus_part(cartan, y, lo, hi)


def minus_sigmas(cartan: CartanData, y: Seq) -> tuple[int, list[int]]:
    lo, hi = _minus_window(y)
    return lo, _minus_part(cartan, y, lo, hi)


def tensor_sigmas(cartan: CartanData, mu: Weight, y: Seq) -> tuple[int, list[int]]:
    lo, _ = _minus_window(y)
    _, hi = _plus_window(y)
    wt = mu - _root_sum(cartan, y)
    minus = _minus_part(cartan, y, lo, 0)
    minus = [v - wt.pair(letter(k)) for k, v in zip(range(lo, 1), minus)]
    return lo, minus + _plus_part(cartan, y, 1, hi)


def _drive(y: Seq, i: int, count: int, raising: bool,
           sigmas: Callable[[Seq], tuple[int, list[int]]]) -> Seq:
    """Apply e_i^count (raising) or f_i^count to ``y`` in place.

    The caller guarantees every step is defined.  For f the chosen position
    is min M_(i) and only lower positions can overtake it; for e it is
    max M_(i) and only higher positions can.  In each case the gap closes by
    exactly one per step.
    """
    remaining = count
    while remaining > 0:
        lo, vals = sigmas(y)
        ks = [k for k in range(lo, lo + len(vals)) if letter(k) == i]
        best = max(vals[k - lo] for k in ks)
        tops = [k for k in ks if vals[k - lo] == best]
        if raising:
            k0 = max(tops)
            rivals = [k for k in ks if k > k0]
        else:
            k0 = min(tops)
            rivals = [k for k in ks if k < k0]
        step = min([remaining] + [best - vals[k - lo] for k in rivals])
        assert step >= 1
        v = y.get(k0, 0) + (-step if raising else step)
        if v:
            y[k0] = v
        else:
            y.pop(k0, None)
        remaining -= step
    return y


def _sign_ok(y: Seq) -> bool:
    return all((v > 0) if k >= 1 else (v < 0) for k, v in y.items())


# half crystals ------------------------------------------------------------

def plus_eps(cartan: CartanData, y: Seq, i: int) -> int:
    lo, vals = plus_sigmas(cartan, y)
    return max(v for k, v in enumerate(vals, lo) if letter(k) == i)


def minus_phi(cartan: CartanData, y: Seq, i: int) -> int:
    lo, vals = minus_sigmas(cartan, y)
    return max(v for k, v in enumerate(vals, lo) if letter(k) == i)


def plus_weight(cartan: CartanData, y: Seq) -> Weight:
    return -_root_sum(cartan, {k: v for k, v in y.items() if k >= 1})


def minus_weight(cartan: CartanData, y: Seq) -> Weight:
    return -_root_sum(cartan, {k: v for k, v in y.items() if k <= 0})


def plus_f(cartan: CartanData, y: Seq, i: int, count: int = 1) -> Seq:
    return _drive(dict(y), i, count, False, lambda s: plus_sigmas(cartan, s))


def plus_e(cartan: CartanData, y: Seq, i: int, count: int = 1) -> Optional[Seq]:
    if plus_eps(cartan, y, i) < count:
        return None
    return _drive(dict(y), i, count, True, lambda s: plus_sigmas(cartan, s))


def minus_e(cartan: CartanData, y: Seq, i: int, count: int = 1) -> Seq:
    return _drive(dict(y), i, count, True, lambda s: minus_sigmas(cartan, s))


def minus_f(cartan: CartanData, y: Seq, i: int, count: int = 1) -> Optional[Seq]:
    if minus_phi(cartan, y, i) < count:
        return None
    return _drive(dict(y), i, count, False, lambda s: minus_sigmas(cartan, s))


def membership_plus(cartan: CartanData, y: Seq) -> bool:
    """Is the plus sequence in the image of B(infinity)?"""
    if any(k < 1 or v < 0 for k, v in y.items()):
        return False
    top = max(y, default=0)
    return all(cartan.c(l) * y.get(l, 0) - cartan.c(l - 1) * y.get(l + 1, 0) >= 0
               for l in range(2, top + 1))


def membership_minus(cartan: CartanData, y: Seq) -> bool:
    """Is the minus sequence in the image of B(-infinity)?"""
    if any(k > 0 or v > 0 for k, v in y.items()):
        return False
    bottom = min(y, default=0)
    return all(cartan.c(l) * y.get(l, 0) - cartan.c(l + 1) * y.get(l - 1, 0) <= 0
               for l in range(bottom, 0))


# tensor crystal -------------------------------------------------------------

@dataclass(frozen=True)
class TensorElement:
    """y+ (x) t_mu (x) y-, with both factors stored in one sparse sequence."""

    cartan: CartanData
    mu: Weight
    entries: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        y = dict(self.entries)
        if len(y) != len(self.entries) or not _sign_ok(y):
            raise WeightError(f"bad entries {self.entries}")

    @classmethod
    def make(cls, cartan: CartanData, mu: Weight, plus: Seq = None,
             minus: Seq = None) -> "TensorElement":
        y = dict(plus or {})
        y.update(minus or {})
        return cls(cartan, mu, _freeze(y))

    @cached_property
    def seq(self) -> Seq:
        return dict(self.entries)

    @property
    def plus(self) -> Seq:
        return {k: v for k, v in self.entries if k >= 1}

    @property
    def minus(self) -> Seq:
        return {k: v for k, v in self.entries if k <= 0}

    def y(self, k: int) -> int:
        return self.seq.get(k, 0)

    def sigmas(self) -> tuple[int, list[int]]:
        return tensor_sigmas(self.cartan, self.mu, self.seq)

    def encode(self) -> str:
        plus = ",".join(f"{k}:{v}" for k, v in self.entries if k >= 1)
        minus = ",".join(f"{k}:{v}" for k, v in self.entries if k <= 0)
        return f"{{{plus}}}|t{self.mu}|{{{minus}}}"

    def __str__(self) -> str:
        return self.encode()


def sigma_k(y: TensorElement, k: int) -> int:
    lo, vals = y.sigmas()
    hi = lo + len(vals) - 1
    if k > hi:
        k = hi - ((hi - k) % 2)
    elif k < lo:
        k = lo + ((k - lo) % 2)
    return vals[k - lo]


def crystal_wt(y: TensorElement) -> Weight:
    return y.mu - _root_sum(y.cartan, y.seq)


def crystal_eps(y: TensorElement, i: int) -> int:
    lo, vals = y.sigmas()
    return max(v for k, v in enumerate(vals, lo) if letter(k) == i)


def crystal_phi(y: TensorElement, i: int) -> int:
    return crystal_eps(y, i) + crystal_wt(y).pair(i)


def _tensor_drive(y: TensorElement, i: int, count: int, raising: bool) -> TensorElement:
    seq = _drive(dict(y.seq), i, count, raising,
                 lambda s: tensor_sigmas(y.cartan, y.mu, s))
    if not _sign_ok(seq):
        raise CrystalError(f"sign invariant broken applying {'e' if raising else 'f'}"
                           f"_{i}^{count} to {y}")
    return TensorElement(y.cartan, y.mu, _freeze(seq))


def raising(y: TensorElement, i: int, count: int = 1) -> Optional[TensorElement]:
    """e_i^count, or None when eps_i < count."""
    if crystal_eps(y, i) < count:
        return None
    return _tensor_drive(y, i, count, True)


def lowering(y: TensorElement, i: int, count: int = 1) -> Optional[TensorElement]:
    """f_i^count, or None when phi_i < count."""
    if crystal_phi(y, i) < count:
        return None
    return _tensor_drive(y, i, count, False)


def zero_element(cartan: CartanData, mu: Weight) -> TensorElement:
    return TensorElement(cartan, mu, ())


def star(y: TensorElement) -> TensorElement:
    """The *-involution, computed by operator words on the zero sequences."""
    cartan = y.cartan
    plus, minus = y.plus, y.minus
    if not membership_plus(cartan, plus):
        raise CrystalError(f"plus part of {y} is outside the image of B(infinity)")
    if not membership_minus(cartan, minus):
        raise CrystalError(f"minus part of {y} is outside the image of B(-infinity)")
    new_plus: Seq = {}
    for k in sorted(plus, reverse=True):
        new_plus = plus_f(cartan, new_plus, letter(k), plus[k])
    new_minus: Seq = {}
    for k in sorted(minus):
        new_minus = minus_e(cartan, new_minus, letter(k), -minus[k])
    mu = -y.mu - plus_weight(cartan, plus) - minus_weight(cartan, minus)
    return TensorElement.make(cartan, mu, new_plus, new_minus)


def reflect(y: TensorElement, i: int) -> TensorElement:
    """S_i: f_i^<wt, alpha_i^vee> or e_i^-<wt, alpha_i^vee>."""
    h = crystal_wt(y).pair(i)
    out = lowering(y, i, h) if h >= 0 else raising(y, i, -h)
    if out is None:
        raise CrystalError(f"S_{i} undefined on {y}")
    return out


def weyl_action(y: TensorElement, word) -> TensorElement:
    """S_{i_1} ... S_{i_r} y for the word (i_1, ..., i_r); the last letter acts first."""
    for i in reversed(list(word)):
        y = reflect(y, i)
    return y


def _violates(b: TensorElement) -> bool:
    wt = crystal_wt(b)
    for i in (1, 2):
        h = wt.pair(i)
        if h >= 0 and crystal_eps(b, i) > 0:
            return True
        if h <= 0 and crystal_phi(b, i) > 0:
            return True
    return False


def is_extremal_truncated(y: TensorElement, depth: int = 8) -> bool:
    """Check extremality against x_m for |m| <= depth.  True is a bounded verdict."""
    if _violates(y):
        return False
    for sign in (1, -1):
        b = y
        for i in weyl_word(sign * depth):
            b = reflect(b, i)
            if _violates(b):
                return False
    return True


def is_in_crystal_basis(y: TensorElement, depth: int = 8) -> bool:
    """Membership in the realization of B(mu): is y* extremal (up to ``depth``)?"""
    return is_extremal_truncated(star(y), depth)
