"""Minimal Hilbert functions with a prescribed polynomial and regularity, and
the exact endpoints of the achievable regularity interval.

For an admissible polynomial p and target rho, the backward recursion
f(t) = shrink(f(t+1)) below rho produces the pointwise-minimal function with
polynomial p and regularity at most rho; the g-variant bumps the value just
below rho by one to pin the regularity exactly when f stabilizes early.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from regrange import kernels
from regrange.errors import CertificationError, InputError
from regrange.hilbert import (
    HilbertFunction,
    IntPolynomial,
    gotzmann_number,
    is_admissible,
)
from regrange.monomial import lex_ideal, reg_ss


def _require_admissible(p):
    if not is_admissible(p):
        raise InputError(f"{p} is not an admissible Hilbert polynomial")


def _pi_member(p, t, r):
    # growth bound and positivity along t, t+1, ..., r+1; beyond r the bound
    # holds with equality along the lex Hilbert function
    for tau in range(t, r + 2):
        a = p(tau)
        b = p(tau + 1)
        if a < 0 or b < 1:
            return False
        if kernels.growth(a, tau) < b:
            return False
    return True


@lru_cache(maxsize=None)
def rho_poly(p):
    """Minimal regularity over all Hilbert functions with polynomial p."""
    _require_admissible(p)
    r = gotzmann_number(p)
    for t in range(1, r + 1):
        if _pi_member(p, t, r):
            return 0 if t == 1 and p(0) == 1 else t
    raise CertificationError("no admissible starting degree found")


@lru_cache(maxsize=None)
def bar_rho_poly(p):
    """Minimal regularity over Hilbert functions of schemes with polynomial p.

    For constant p the derivative is zero (not admissible), and the minimum
    over plain Hilbert functions already comes from points, so the value
    coincides with rho_poly.
    """
    _require_admissible(p)
    if p.degree == 0:
        return rho_poly(p)
    return max(rho_poly(p), rho_poly(p.delta()) - 1)


@lru_cache(maxsize=None)
def minimal_f(p, rho):
    """Pointwise-minimal Hilbert function with polynomial p and regularity <= rho."""
    _require_admissible(p)
    if rho < rho_poly(p):
        raise InputError(f"rho={rho} is below the minimum {rho_poly(p)} for {p}")
    vals = [0] * (rho + 1)
    vals[rho] = p(rho)
    for t in range(rho - 1, -1, -1):
        vals[t] = kernels.shrink(vals[t + 1], t + 1)
    return HilbertFunction(tuple(vals[:rho]), p)


def minimal_g(p, rho):
    """Minimal Hilbert function with polynomial p and regularity exactly rho.

    The value just below rho is p(rho-1)+1, except at t=0 where numerical
    functions keep the value 1.
    """
    _require_admissible(p)
    if rho < max(1, rho_poly(p)):
        raise InputError(f"rho={rho} is below the minimum for {p}")
    vals = [0] * rho
    vals[rho - 1] = p(rho - 1) + 1 if rho > 1 else 1
    if vals[rho - 1] < 0:
        raise InputError(f"{p} is too negative at {rho - 1}")
    for t in range(rho - 2, -1, -1):
        vals[t] = kernels.shrink(vals[t + 1], t + 1)
    return HilbertFunction(tuple(vals), p)


@lru_cache(maxsize=None)
def is_scheme_hf(u):
    """Whether u is the Hilbert function of a nonempty closed projective scheme.

    Characterization: u is an O-sequence with admissible tail whose first
    derivative is again an O-sequence.
    """
    if u(0) != 1:
        return False
    if u.tail.is_zero or not is_admissible(u.tail):
        return False
    if not u.is_o_sequence():
        return False
    try:
        du = u.delta()
    except InputError:
        return False
    return du.is_o_sequence()


def class_nonempty(p, rho):
    """Whether some scheme has Hilbert polynomial p and regularity exactly rho."""
    _require_admissible(p)
    bar = bar_rho_poly(p)
    if rho < bar:
        return False
    if rho == bar:
        return True
    f = minimal_f(p, rho)
    if f.rho() == rho:
        return is_scheme_hf(f)
    g = minimal_g(p, rho)
    return g.rho() == rho and is_scheme_hf(g)


@lru_cache(maxsize=None)
def _full_ring_tail(n):
    return IntPolynomial.from_values([comb(z + n, n) for z in range(n + 1)])


def is_full_ring_hf(u):
    """Whether u is the Hilbert function of a whole polynomial ring x0..xn."""
    if u.prefix or u(0) != 1:
        return False
    n = u(1) - 1
    return n >= 0 and u.tail == _full_ring_tail(n)


def _require_scheme(u):
    if not is_scheme_hf(u):
        raise InputError(f"{u} is not the Hilbert function of a scheme")


@lru_cache(maxsize=None)
def min_reg(u):
    """Minimal regularity over all schemes with Hilbert function u.

    Descends to hyperplane-section level: the dominated minimal function with
    the derived polynomial is located by search from the scheme-level floor,
    and its own minimal regularity recurses until the zero-dimensional case.
    The whole ring is the one scheme with an empty ideal, regularity 0.
    """
    _require_scheme(u)
    if is_full_ring_hf(u):
        return 0
    if u.tail.degree == 0:
        return u.rho() + 1
    dp = u.tail.delta()
    du = u.delta()
    t = bar_rho_poly(dp)
    limit = max(du.rho(), t)
    while not minimal_f(dp, t).leq(du):
        t += 1
        if t > limit:
            raise CertificationError("dominated minimal function search overran")
    return max(min_reg(minimal_f(dp, t)), u.rho() + 1)


def max_reg(u):
    """Maximal regularity over all schemes with Hilbert function u.

    Closed form max(rho(u) + 1, Gotzmann number of the derived tail), always
    cross-checked against the regularity of the explicit lex-segment ideal of
    the derivative; a mismatch is an internal error, never silent drift.
    """
    _require_scheme(u)
    if is_full_ring_hf(u):
        return 0
    du = u.delta()
    if u.tail.degree == 0:
        closed = u.rho() + 1
    else:
        closed = max(u.rho() + 1, gotzmann_number(u.tail.delta()))
    explicit = reg_ss(lex_ideal(du, max(1, du(1))))
    if explicit != closed:
        raise CertificationError(
            f"closed-form maximal regularity {closed} disagrees with the "
            f"lex-segment route {explicit}"
        )
    return closed


@dataclass(frozen=True)
class RegularityRange:
    """The interval [min_reg, max_reg] of achievable regularities."""

    min_reg: int
    max_reg: int

    def __post_init__(self):
        if not 0 <= self.min_reg <= self.max_reg:
            raise InputError("invalid regularity interval")

    def __contains__(self, m):
        return self.min_reg <= m <= self.max_reg

    def interval(self):
        return range(self.min_reg, self.max_reg + 1)
