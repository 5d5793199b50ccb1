"""Reduction machinery deciding hypergeometric summability.

Given a term with kernel K = u/v (shift-reduced) and shell S, the chain is

    shell reduction:      S = K*sigma(S1) - S1 + a/b + t/v
    polynomial reduction: t = u*sigma(h) - v*h + q,  q in the standard
                          complement of the reduction map p -> u*sigma(p) - v*p
    residual form:        r = a/b + q/v,   zero iff the term is summable.

Every congruence produced here carries an explicit witness w realizing
input - output = K*sigma(w) - w, so all results are exactly checkable.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .polynomials import Poly, gcd_poly, lcm_poly, xgcd_poly, extract_power_part, radical
from .ratfunc import RatFunc, partial_fractions
from .shifts import Kernel, KernelShell, dispersion_set, is_shift_free, \
    is_strongly_prime, kernel_shell
from .stats import bump


# ---------------------------------------------------------------------------
# the polynomial reduction map and its echelon basis
# ---------------------------------------------------------------------------


def reduction_map(p: Poly, kernel: Kernel) -> Poly:
    """u*sigma(p) - v*p; injective on F[y] for kernels different from 1."""
    if kernel.is_one:
        raise ValueError("reduction map is not injective for kernel 1")
    return kernel.num * p.shift(1) - kernel.den * p


@dataclass(frozen=True)
class ReductionBasis:
    """Echelon-basis data for reducing polynomials modulo the image of the
    reduction map.

    case_id follows the degree comparison of u, v and v-u; complement holds
    the monomial exponents spanning the standard complement of the image.
    For case 5 the special generator (the reduced image of y^tau and its
    preimage) is stored explicitly.
    """

    kernel: Kernel
    case_id: int
    alpha1: int
    alpha2: int
    beta: int
    tau_int: int | None
    special_preimage: Poly | None
    special_image: Poly | None
    complement: frozenset

    def generator(self, d: int):
        """(preimage, image) of the echelon element with image degree d,
        or None when d is a complement exponent."""
        f = self.kernel.field
        a1 = self.alpha1
        if self.case_id == 1:
            i = d - self.alpha2
        elif self.case_id == 2:
            i = d - a1
        elif self.case_id == 3:
            if d == self.beta:
                i = 0
            elif d >= a1:
                i = d - a1 + 1
            else:
                return None
        elif self.case_id == 4:
            i = d - a1 + 1
        else:
            if d == self.special_image.degree:
                return self.special_preimage, self.special_image
            if d == a1 + self.tau_int - 1:
                return None
            i = d - a1 + 1
        if i < 0 or (self.case_id == 3 and d < a1 and d != self.beta):
            return None
        pre = Poly.monomial(f, f.one, i)
        img = reduction_map(pre, self.kernel)
        return pre, img


def _as_positive_int(tau, field):
    """The scalar tau as a positive integer, or None."""
    if field.tag == "Q":
        if tau > 0 and tau.denominator == 1:
            return int(tau)
        return None
    if tau.is_poly() and tau.num.degree <= 0:
        c = tau.num.coeff(0)
        if c > 0 and c.denominator == 1:
            return int(c)
    return None


@functools.lru_cache(maxsize=256)
def build_reduction_basis(kernel: Kernel) -> ReductionBasis:
    """Classify the kernel and build the echelon/complement data."""
    if kernel.is_one:
        raise ValueError("no reduction basis for kernel 1")
    bump("build_basis")
    u, v = kernel.num, kernel.den
    f = kernel.field
    a1, a2 = u.degree, v.degree
    diff = v - u
    if diff.is_zero:
        raise ValueError("kernel with u = v cannot occur")
    beta = diff.degree
    tau = None
    tau_int = None
    if beta == a1 - 1:
        tau = diff.lc / u.lc if f.tag == "Q" else diff.lc / u.lc
        tau_int = _as_positive_int(tau, f)
    if beta > a1:
        case, comp = 1, frozenset(range(a2))
    elif beta == a1:
        case, comp = 2, frozenset(range(a1))
    elif beta < a1 - 1:
        case, comp = 3, frozenset(set(range(a1)) - {beta})
    elif tau_int is None:
        case, comp = 4, frozenset(range(a1 - 1))
    else:
        case = 5
        comp = None
    special_pre = special_img = None
    if case == 5:
        base = ReductionBasis(kernel, 4, a1, a2, beta, tau_int, None, None,
                              frozenset())
        pre = Poly.monomial(f, f.one, tau_int)
        img = reduction_map(pre, kernel)
        # reduce img against the images of y^i, i != tau
        while not img.is_zero:
            d = img.degree
            if d < a1 - 1:
                break
            assert d != a1 + tau_int - 1
            g = base.generator(d)
            gp, gi = g
            c = img.lc / gi.lc
            img = img - gi.scale(c)
            pre = pre - gp.scale(c)
        assert not img.is_zero, "case-5 special image must be nonzero"
        special_pre, special_img = pre, img
        comp = frozenset((set(range(a1 - 1)) - {img.degree})
                         | {a1 + tau_int - 1})
    return ReductionBasis(kernel, case, a1, a2, beta, tau_int,
                          special_pre, special_img, comp)


def reduce_polynomial(p: Poly, basis: ReductionBasis):
    """(h, q) with p = u*sigma(h) - v*h + q and q supported on the
    complement exponents."""
    bump("poly_reduction")
    f = basis.kernel.field
    h = Poly(f, ())
    q = Poly(f, ())
    while not p.is_zero:
        d = p.degree
        gen = basis.generator(d)
        if gen is None:
            assert d in basis.complement, (d, basis)
            mono = Poly.monomial(f, p.lc, d)
            q = q + mono
            p = p - mono
        else:
            pre, img = gen
            assert img.degree == d
            c = p.lc / img.lc
            h = h + pre.scale(c)
            p = p - img.scale(c)
    return h, q


# ---------------------------------------------------------------------------
# residual forms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ResidualForm:
    """a/b + q/v with deg a < deg b, b monic shift-free and strongly prime
    with the kernel, and q supported on the complement exponents."""

    a: Poly
    b: Poly
    q: Poly
    kernel: Kernel

    @property
    def is_zero(self):
        return self.a.is_zero and self.q.is_zero

    def value(self) -> RatFunc:
        return RatFunc(self.a, self.b) + RatFunc(self.q, self.kernel.den)

    def check_valid(self) -> bool:
        if not self.a.is_zero and not (self.a.degree < self.b.degree):
            return False
        if not is_shift_free(self.b):
            return False
        if not is_strongly_prime(self.b, self.kernel):
            return False
        if not self.q.is_zero and not self.kernel.is_one:
            comp = build_reduction_basis(self.kernel).complement
            f = self.kernel.field
            for k, c in enumerate(self.q.coeffs):
                if not f.is_zero(c) and k not in comp:
                    return False
        return True

    def format(self, var="y"):
        return (RatFunc(self.a, self.b).format(var) + " + ("
                + self.q.format(var) + ")/(" + self.kernel.den.format(var) + ")")


@dataclass(frozen=True)
class ReductionResult:
    """T = Delta(cofactor * H) + residual * H with sigma(H)/H the kernel."""

    kernel: Kernel
    shell: RatFunc
    cofactor: RatFunc
    residual: ResidualForm

    def check_identity(self) -> bool:
        """Exact check of the defining identity in F(y)."""
        k = self.kernel.value()
        lhs = self.shell - (k * self.cofactor.shift(1) - self.cofactor) \
            - self.residual.value()
        return lhs.is_zero


# ---------------------------------------------------------------------------
# the shell-reduction engine
# ---------------------------------------------------------------------------


class _Engine:
    """Worklist processor rewriting a rational function modulo the space
    { K*sigma(w) - w } into clean pieces plus a t/v part.

    Buckets: witness (the accumulated w), tpoly (numerator over v), and a
    pool of clean proper pieces whose denominators are strongly prime with
    the kernel; the pool is merged over per-shift-class representatives at
    the end.
    """

    def __init__(self, kernel: Kernel):
        self.kernel = kernel
        self.field = kernel.field
        f = self.field
        self.u = kernel.num
        self.v = kernel.den
        self.witness = RatFunc.zero(f)
        self.tpoly = Poly(f, ())
        self.pool: list[RatFunc] = []

    # -- small helpers -------------------------------------------------------

    def _strip_poly(self, val: RatFunc) -> RatFunc:
        p, prop = val.poly_and_proper()
        if not p.is_zero:
            self.tpoly = self.tpoly + self.v * p
        return prop

    def _split(self, val: RatFunc, bases):
        """Partial-fraction val over power-part chunks of its denominator
        extracted against each base; returns list of (role, piece)."""
        den = val.den
        chunks = []
        for role, base in bases:
            if den.degree == 0:
                break
            if base.degree == 0:
                continue
            part, den = extract_power_part(den, base)
            if part.degree > 0:
                chunks.append((role, part))
        if den.degree > 0:
            chunks.append((None, den))
        if len(chunks) == 1:
            return [(chunks[0][0], val)]
        _, parts = partial_fractions(val, [c for _, c in chunks])
        return [(role, piece) for (role, _), piece in zip(chunks, parts)]

    # -- ladder absorbers (junk-free, terminal) ------------------------------

    def _absorb_num_ladder(self, num: Poly, m: int):
        """num / prod_{j=1..m} sigma^{-j}(u)  ==>  witness + t/v."""
        f = self.field
        while m > 0:
            ladder = Poly.const(f, f.one)
            for j in range(1, m + 1):
                ladder = ladder * self.u.shift(-j)
            # x/W_m = K*sigma(-x/W_m) - (-x/W_m) + sigma(x)/(v*W_{m-1})
            self.witness = self.witness - RatFunc(num, ladder)
            num = num.shift(1)
            m -= 1
            if m == 0:
                break
            rest = Poly.const(f, f.one)
            for j in range(1, m + 1):
                rest = rest * self.u.shift(-j)
            val = self._strip_poly(RatFunc(num, self.v * rest))
            if val.is_zero:
                return
            num = None
            for role, piece in self._split(val, [("v", self.v)]):
                if role == "v":
                    self.tpoly = self.tpoly + piece.num * self.v.exact_div(piece.den)
                else:
                    # piece.den divides the remaining ladder; multiply up
                    num = piece.num * rest.exact_div(piece.den)
            if num is None:
                return
        if num is not None:
            self.tpoly = self.tpoly + num

    def _absorb_den_ladder(self, num: Poly, m: int):
        """num / prod_{i=0..m} sigma^{i}(v)  ==>  witness + t/v."""
        f = self.field
        while m > 0:
            target = self.v.shift(m)
            _, A, _ = xgcd_poly(self.u, target)
            sig_s = (A * num).rem(target)
            s = sig_s.shift(-1)
            t2 = s + (num - self.u * sig_s).exact_div(target)
            lower = Poly.const(f, f.one)
            for i in range(m):
                lower = lower * self.v.shift(i)
            self.witness = self.witness + RatFunc(s, lower)
            num = t2
            m -= 1
        self.tpoly = self.tpoly + num

    # -- orbit loops ----------------------------------------------------------

    def _num_orbit_loop(self, val: RatFunc):
        """Factors meeting sigma^{-i}(u), i >= 0: move up until clean."""
        u, v = self.u, self.v
        while True:
            val = self._strip_poly(val)
            if val.is_zero:
                return
            D = val.den
            if D.degree == 0:
                return
            if not any(l <= 0 for l in dispersion_set(D, u)):
                self.pool.append(val)
                return
            self.witness = self.witness - val
            val = val.shift(1) * self.kernel.value()
            val = self._strip_poly(val)
            if val.is_zero:
                return
            if v.degree > 0:
                out = None
                for role, piece in self._split(val, [("v", v)]):
                    if role == "v":
                        cof = v.exact_div(piece.den)
                        self.tpoly = self.tpoly + piece.num * cof
                    else:
                        out = piece
                if out is None:
                    return
                val = out

    def _den_orbit_loop(self, val: RatFunc):
        """Factors meeting sigma^{i}(v), i >= 0: move down until clean."""
        u, v = self.u, self.v
        while True:
            val = self._strip_poly(val)
            if val.is_zero:
                return
            D = val.den
            if D.degree == 0:
                return
            if v.rem(D).is_zero:
                cof = v.exact_div(D)
                self.tpoly = self.tpoly + val.num * cof
                return
            if not any(l >= 0 for l in dispersion_set(D, v)):
                self.pool.append(val)
                return
            nxt = val.shift(-1) * self.kernel.inverse_value().shift(-1)
            self.witness = self.witness + nxt
            val = self._strip_poly(nxt)
            if val.is_zero:
                return
            if u.degree > 0:
                out = None
                for role, piece in self._split(val, [("rung", u.shift(-1))]):
                    if role == "rung":
                        # piece.den divides sigma^{-1}(u); multiply up
                        q, r = u.shift(-1).divmod(piece.den)
                        assert r.is_zero
                        self._absorb_num_ladder(piece.num * q, 1)
                    else:
                        out = piece
                if out is None:
                    return
                val = out

    # -- relocation of clean pieces ------------------------------------------

    def _relocate_down(self, val: RatFunc, steps: int) -> RatFunc | None:
        """Shift a clean piece's denominator down by steps, absorbing the
        numerator-orbit junk; returns the piece at the target shift."""
        for _ in range(steps):
            nxt = val.shift(-1) * self.kernel.inverse_value().shift(-1)
            self.witness = self.witness + nxt
            val = nxt
        val = self._strip_poly(val)
        if val.is_zero:
            return None
        if self.u.degree == 0 or steps == 0:
            return val
        ladder = Poly.const(self.field, self.field.one)
        for j in range(1, steps + 1):
            ladder = ladder * self.u.shift(-j)
        out = None
        for role, piece in self._split(val, [("junk", ladder)]):
            if role == "junk":
                q, r = ladder.divmod(piece.den)
                assert r.is_zero
                self._absorb_num_ladder(piece.num * q, steps)
            else:
                out = piece
        return out

    def _finish_pool(self):
        """Relocate pool pieces to per-class minimal shifts and merge."""
        f = self.field
        if not self.pool:
            return Poly(f, ()), Poly.const(f, f.one)
        rad_all = Poly.const(f, f.one)
        for piece in self.pool:
            rad_all = rad_all * radical(piece.den)
        rad_all = radical(rad_all)
        disp_pos = sorted(l for l in dispersion_set(rad_all, rad_all) if l > 0)
        minimal = rad_all
        for l in disp_pos:
            g = gcd_poly(minimal, rad_all.shift(l))
            if g.degree > 0:
                minimal = minimal.exact_div(g)
        final = []
        for piece in self.pool:
            offsets = [("off0", minimal)] + \
                [(l, minimal.shift(l)) for l in disp_pos]
            for role, chunk in self._split(piece, offsets):
                assert role is not None, "pool factor outside its class"
                if role == "off0":
                    final.append(chunk)
                else:
                    moved = self._relocate_down(chunk, role)
                    if moved is not None:
                        final.append(moved)
        if not final:
            return Poly(f, ()), Poly.const(f, f.one)
        den = Poly.const(f, f.one)
        for piece in final:
            den = lcm_poly(den, piece.den)
        num = Poly(f, ())
        for piece in final:
            num = num + piece.num * den.exact_div(piece.den)
        reduced = RatFunc(num, den)
        return reduced.num, reduced.den

    # -- entry points ----------------------------------------------------------

    def feed(self, s: RatFunc):
        val = self._strip_poly(s)
        if val.is_zero:
            return
        bases = []
        if self.u.degree > 0:
            low = [l for l in dispersion_set(val.den, self.u) if l <= 0]
            if low:
                base_u = Poly.const(self.field, self.field.one)
                ru = radical(self.u)
                for l in low:
                    base_u = base_u * ru.shift(l)
                bases.append(("u", base_u))
        if self.v.degree > 0:
            high = [l for l in dispersion_set(val.den, self.v) if l >= 0]
            if high:
                base_v = Poly.const(self.field, self.field.one)
                rv = radical(self.v)
                for l in high:
                    base_v = base_v * rv.shift(l)
                bases.append(("v", base_v))
        for role, piece in self._split(val, bases):
            if role == "u":
                self._num_orbit_loop(piece)
            elif role == "v":
                self._den_orbit_loop(piece)
            else:
                self.pool.append(piece)

    def finish(self):
        a, b = self._finish_pool()
        return self.witness, a, b, self.tpoly


def shell_reduction(s: RatFunc, kernel: Kernel):
    """Rewrite the shell: s = K*sigma(S1) - S1 + a/b + t/v with b monic,
    shift-free, strongly prime with K, gcd(a, b) = 1 and deg a < deg b."""
    if kernel.is_one:
        raise ValueError("shell reduction requires a kernel different from 1")
    if s.is_zero:
        raise ValueError("shell reduction of zero")
    bump("shell_reduction")
    eng = _Engine(kernel)
    eng.feed(s)
    return eng.finish()


# ---------------------------------------------------------------------------
# rational case (kernel 1) and the public reduction
# ---------------------------------------------------------------------------


def poly_antidifference(p: Poly) -> Poly:
    """Q with Q(y+1) - Q(y) = p, constant term zero (char 0, exact)."""
    f = p.field
    if p.is_zero:
        return p
    d = p.degree
    # Newton forward-difference coefficients at 0..d
    values = [p.eval(f.from_int(i)) for i in range(d + 2)]
    diffs = list(values)
    coeffs = [diffs[0]]
    for k in range(1, d + 2):
        diffs = [diffs[i + 1] - diffs[i] for i in range(len(diffs) - 1)]
        if diffs:
            coeffs.append(diffs[0])
    # p = sum_k coeffs[k]/k! * y(y-1)...(y-k+1);  antidifference shifts k -> k+1
    out = Poly(f, ())
    falling = Poly.const(f, f.one)
    fact = f.one
    for k in range(d + 1):
        falling = falling * Poly(f, (f.from_int(-k), f.one))
        fact = fact * f.from_int(k + 1)
        out = out + falling.scale(coeffs[k] / fact)
    return out


def _rational_engine(s: RatFunc):
    """Kernel-1 reduction: s = sigma(w) - w + a/b, b shift-free.

    Returns (w, a, b)."""
    f = s.field
    one = Poly.const(f, f.one)
    eng = _Engine(Kernel(one, one))
    eng.feed(s)
    a, b = eng._finish_pool()
    # the polynomial bucket is rationally summable outright
    ad = poly_antidifference(eng.tpoly)
    witness = eng.witness + RatFunc.from_poly(ad)
    return witness, a, b


def rational_reduction(s: RatFunc) -> ResidualForm:
    """Residual form for a rational term (kernel 1): a/b with b shift-free;
    s is summable as a rational function iff a = 0."""
    bump("rational_reduction")
    f = s.field
    one = Poly.const(f, f.one)
    _, a, b = _rational_engine(s)
    return ResidualForm(a, b, Poly(f, ()), Kernel(one, one))


def hypergeometric_reduction(g: RatFunc) -> ReductionResult:
    """Additive decomposition T = Delta(f*H) + r*H from the shift quotient
    g = sigma(T)/T; r is a residual form and T is summable iff r = 0."""
    if g.is_zero:
        raise ValueError("zero is not a shift quotient")
    bump("hyper_reduction")
    ks = kernel_shell(g)
    kernel, shell = ks.kernel, ks.shell
    f = g.field
    if kernel.is_one:
        witness, a, b = _rational_engine(shell)
        residual = ResidualForm(a, b, Poly(f, ()), kernel)
        return ReductionResult(kernel, shell, witness, residual)
    s1, a, b, t = shell_reduction(shell, kernel)
    basis = build_reduction_basis(kernel)
    h, q = reduce_polynomial(t, basis)
    cofactor = s1 + RatFunc.from_poly(h)
    return ReductionResult(kernel, shell, cofactor, ResidualForm(a, b, q, kernel))


def is_summable(g: RatFunc):
    """(verdict, ReductionResult); the cofactor certifies T = Delta(f*H)."""
    result = hypergeometric_reduction(g)
    return result.residual.is_zero, result
