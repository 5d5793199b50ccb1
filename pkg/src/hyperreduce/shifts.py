"""Shift calculus: dispersion sets, shift-free structure, kernel and shell.

The shift operator sigma maps y to y+1.  The dispersion set of (p, q) is
{ l in Z : gcd(p, sigma^l(q)) is nonconstant }.  It is computed exactly:
small root-bound windows are enumerated directly; mid-size problems go
through the resultant res_y(p(y), q(y+k)) (interpolated from integer
resultant values) and exact integer root extraction; very large instances
fall back to verified candidates from high-precision root differences plus
an exhaustive window.  Every returned shift is certified by an exact gcd.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .polynomials import (Poly, _int_roots, _iprimitive, _iresultant, _ishift,
                          _q_clear, gcd_poly, extract_power_part, radical,
                          squarefree_decomposition)
from .ratfunc import RatFunc
from .stats import bump

_WINDOW_BOUND = 128          # exhaustive gcd scan when the root bound fits
_RESULTANT_CAP = 400         # interpolated-resultant route when dp*dq fits
_FALLBACK_WINDOW = 64        # always-scanned window on the fallback path


def shift_y(p: Poly, ell: int) -> Poly:
    """p(y + ell), exact."""
    return p.shift(ell)


def _cauchy_bound(ints) -> int:
    lead = abs(ints[-1])
    m = max(abs(c) for c in ints)
    return 1 + (m + lead - 1) // lead


def _nontrivial_gcd(p: Poly, q: Poly, ell: int) -> bool:
    return gcd_poly(p, q.shift(ell)).degree > 0


def _numeric_candidates(pints, qints):
    """Near-integer root differences of two integer polynomials."""
    import mpmath

    out = set()
    digits = max(len(str(abs(c))) for c in itertools.chain(pints, qints))
    deg = max(len(pints), len(qints))
    with mpmath.workdps(50 + 2 * digits + 2 * deg):
        try:
            pr = mpmath.polyroots([mpmath.mpf(c) for c in reversed(pints)],
                                  maxsteps=200, extraprec=200)
            qr = mpmath.polyroots([mpmath.mpf(c) for c in reversed(qints)],
                                  maxsteps=200, extraprec=200)
        except mpmath.libmp.NoConvergence:
            return out
        for a in pr:
            for b in qr:
                d = a - b
                if abs(mpmath.im(d)) < 0.25:
                    n = int(mpmath.nint(mpmath.re(d)))
                    if abs(mpmath.re(d) - n) < 0.25:
                        out.add(n)
    return out


def _dispersion_q(p: Poly, q: Poly):
    pints, _ = _q_clear(radical(p).coeffs)
    qints, _ = _q_clear(radical(q).coeffs)
    dp, dq = len(pints) - 1, len(qints) - 1
    if dp == 0 or dq == 0:
        return set()
    bound = _cauchy_bound(pints) + _cauchy_bound(qints)
    if bound <= _WINDOW_BOUND:
        return {l for l in range(-bound, bound + 1)
                if _nontrivial_gcd(p, q, l)}
    if dp * dq <= _RESULTANT_CAP:
        res_poly = _shift_resultant(pints, qints)
        cand = _int_roots(res_poly)
        return {l for l in cand if abs(l) <= bound
                and _nontrivial_gcd(p, q, l)}
    cand = _numeric_candidates(pints, qints)
    cand.update(range(-_FALLBACK_WINDOW, _FALLBACK_WINDOW + 1))
    return {l for l in cand if abs(l) <= bound and _nontrivial_gcd(p, q, l)}


def _shift_resultant(pints, qints):
    """res_y(p(y), q(y+k)) as an integer polynomial in k, by interpolation."""
    dp, dq = len(pints) - 1, len(qints) - 1
    n = dp * dq + 1
    points = [0]
    step = 1
    while len(points) < n:
        points.append(step)
        if len(points) < n:
            points.append(-step)
        step += 1
    values = [Fraction(_iresultant(pints, _ishift(qints, k))) for k in points]
    # Newton divided differences, then expand to the monomial basis
    coeffs = list(values)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (points[i] - points[i - j])
    poly = [Fraction(0)] * n
    acc = [Fraction(1)]
    for j in range(n):
        for i, c in enumerate(acc):
            poly[i] += coeffs[j] * c
        if j < n - 1:
            nxt = [Fraction(0)] * (len(acc) + 1)
            for i, c in enumerate(acc):
                nxt[i + 1] += c
                nxt[i] -= c * points[j]
            acc = nxt
    ints = []
    for c in poly:
        assert c.denominator == 1
        ints.append(c.numerator)
    while ints and ints[-1] == 0:
        ints.pop()
    return ints


def _dispersion_qx(p: Poly, q: Poly):
    import random as _random

    f = p.field
    p = radical(p)
    q = radical(q)
    if p.degree == 0 or q.degree == 0:
        return set()
    rng = _random.Random(0xA11CE)
    cand = set(range(-32, 33))
    found = 0
    attempts = 0
    while found < 2 and attempts < 200:
        attempts += 1
        theta = rng.randint(-60, 60)
        try:
            pe = [f.eval_x(c, theta) for c in p.coeffs]
            qe = [f.eval_x(c, theta) for c in q.coeffs]
        except ZeroDivisionError:
            continue
        if pe[-1] == 0 or qe[-1] == 0:
            continue
        found += 1
        from .fields import QQ
        cand |= _dispersion_q(Poly(QQ, pe), Poly(QQ, qe))
    return {l for l in cand if _nontrivial_gcd(p, q, l)}


def dispersion_set(p: Poly, q: Poly):
    """{ l : gcd(p, sigma^l(q)) is nonconstant }, exact."""
    if p.is_zero or q.is_zero:
        raise ValueError("dispersion of the zero polynomial")
    bump("dispersion")
    if p.degree == 0 or q.degree == 0:
        return set()
    if p.field.tag == "Q":
        return _dispersion_q(p, q)
    return _dispersion_qx(p, q)


def is_shift_free(b: Poly) -> bool:
    """True iff b is coprime with every nontrivial shift of itself."""
    if b.is_zero:
        raise ValueError("shift-freeness of the zero polynomial")
    return dispersion_set(b, b) <= {0} if b.degree > 0 else True


# ---------------------------------------------------------------------------
# kernels
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Kernel:
    """A shift-reduced rational function u/v with gcd(u, v) = 1, v monic."""

    num: Poly
    den: Poly

    @staticmethod
    def of(u: Poly, v: Poly) -> "Kernel":
        if u.is_zero or v.is_zero:
            raise ValueError("kernel with zero numerator or denominator")
        g = gcd_poly(u, v)
        if g.degree > 0:
            u = u.exact_div(g)
            v = v.exact_div(g)
        c = v.field.inv(v.lc)
        return Kernel(u.scale(c), v.monic())

    @property
    def field(self):
        return self.num.field

    @property
    def is_one(self) -> bool:
        f = self.field
        return (self.num.degree == 0 and self.den.degree == 0
                and self.num.lc == f.one)

    def value(self) -> RatFunc:
        return RatFunc(self.num, self.den)

    def inverse_value(self) -> RatFunc:
        return RatFunc(self.den, self.num)

    def is_shift_reduced(self) -> bool:
        if self.num.degree == 0 or self.den.degree == 0:
            return True
        return not dispersion_set(self.num, self.den)

    def format(self, var="y"):
        return self.value().format(var)


@dataclass(frozen=True)
class KernelShell:
    kernel: Kernel
    shell: RatFunc


def is_strongly_prime(p: Poly, kernel: Kernel) -> bool:
    """gcd(p, sigma^-i(u)) = gcd(p, sigma^i(v)) = 1 for all i >= 0."""
    if p.is_zero:
        raise ValueError("strong primality of the zero polynomial")
    if p.degree == 0:
        return True
    if kernel.num.degree > 0:
        if any(l <= 0 for l in dispersion_set(p, kernel.num)):
            return False
    if kernel.den.degree > 0:
        if any(l >= 0 for l in dispersion_set(p, kernel.den)):
            return False
    return True


def kernel_shell(g: RatFunc) -> KernelShell:
    """Multiplicative decomposition g = K * sigma(S)/S with K shift-reduced.

    Positive-shift common factors are peeled in decreasing order of the
    shift, then negative ones; the result is deterministic.
    """
    if g.is_zero:
        raise ValueError("kernel/shell of zero")
    bump("kernel_shell")
    f = g.field
    num, den = g.num, g.den
    shell = RatFunc.const(f, f.one)
    while True:
        if num.degree == 0 or den.degree == 0:
            break
        hits = sorted((l for l in dispersion_set(num, den) if l != 0),
                      key=lambda l: (l < 0, -abs(l), l))
        if not hits:
            break
        ell = hits[0]
        if ell > 0:
            d = gcd_poly(num, den.shift(ell))
            num = num.exact_div(d)
            den = den.exact_div(d.shift(-ell))
            for j in range(1, ell + 1):
                shell = shell * RatFunc.from_poly(d.shift(-j))
        else:
            m = -ell
            d = gcd_poly(num, den.shift(-m))
            num = num.exact_div(d)
            den = den.exact_div(d.shift(m))
            for j in range(0, m):
                shell = shell / RatFunc.from_poly(d.shift(j))
    kernel = Kernel.of(num, den)
    return KernelShell(kernel, shell)


# ---------------------------------------------------------------------------
# shift-coprime decomposition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ShiftCoprimeDecomp:
    """g = gtilde * prod sigma^{l_i}(p_i^{m_i}) with gtilde shift-coprime
    to the reference polynomial and p_i its monic factors."""

    gtilde: Poly
    parts: tuple  # of (p_i: Poly, ell_i: int, m_i: int)

    def recombine(self) -> Poly:
        out = self.gtilde
        for p, ell, m in self.parts:
            out = out * p.power(m).shift(ell)
        return out


def shift_coprime_decomposition(g: Poly, f: Poly) -> ShiftCoprimeDecomp:
    """Split off from g every factor that is a nontrivial shift of a factor
    of f; requires both inputs shift-free."""
    if g.is_zero or f.is_zero:
        raise ValueError("shift-coprime decomposition of zero")
    if not is_shift_free(g) or not is_shift_free(f):
        raise ValueError("inputs must be shift-free")
    remaining = g
    parts = []
    for ell in sorted(dispersion_set(g, f)):
        if ell == 0:
            continue
        d = gcd_poly(remaining, f.shift(ell))
        if d.degree == 0:
            continue
        lc = remaining.lc
        chunk, rest = extract_power_part(remaining, d)
        for w, m in squarefree_decomposition(chunk):
            parts.append((w.shift(-ell), ell, m))
        remaining = rest.scale(lc)  # gtilde keeps g's leading coefficient
    return ShiftCoprimeDecomp(remaining, tuple(parts))
