"""Dense univariate polynomials over an exact coefficient field.

A polynomial is a tuple of field elements, index i holding the coefficient
of y^i.  The zero polynomial is the empty tuple; its degree is the sentinel
-1 and must never be compared numerically (use .is_zero).  The coefficient
field is duck-typed (see fields.py): scalars support +, -, *, / exactly,
and the field object supplies zero/one/is_zero plus optional fast-path
hooks.  Everything here is immutable and side-effect free.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

# ---------------------------------------------------------------------------
# integer polynomial helpers (lists of ints, little-endian)
# ---------------------------------------------------------------------------


def _itrim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _iadd(a, b):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _itrim(out)


def _imul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _itrim(out)


def _icontent(p):
    g = 0
    for c in p:
        g = math.gcd(g, abs(c))
        if g == 1:
            break
    return g


def _iprimitive(p):
    g = _icontent(p)
    if g in (0, 1):
        return list(p), max(g, 1)
    return [c // g for c in p], g


def _ishift(p, c):
    """p(y + c) for integer polynomials, by Horner on (y + c)."""
    res: list[int] = []
    for coef in reversed(p):
        new = [0] * (len(res) + 1)
        for i, a in enumerate(res):
            new[i + 1] += a
            new[i] += a * c
        new[0] += coef
        res = new
    return _itrim(res)


def _ieval(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _iprem(a, b):
    """Pseudo-remainder lc(b)^(da-db+1) * a mod b, exact over Z."""
    da, db = len(a) - 1, len(b) - 1
    r = list(a)
    lb = b[-1]
    e = da - db + 1
    while r and len(r) - 1 >= db:
        dr = len(r) - 1
        lr = r[-1]
        r = [c * lb for c in r]
        for i in range(db + 1):
            r[dr - db + i] -= lr * b[i]
        _itrim(r)
        e -= 1
    if e > 0 and r:
        s = lb ** e
        r = [c * s for c in r]
    return r


def _igcd(a, b):
    """Primitive-PRS gcd of integer polynomials, primitive output."""
    a, _ = _iprimitive(list(a))
    b, _ = _iprimitive(list(b))
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return [1]
        r = _prem_steps(a, b)
        r, _ = _iprimitive(r)
        a, b = b, r
    if a and a[-1] < 0:
        a = [-c for c in a]
    return a


def _prem_steps(a, b):
    """a reduced mod b via scaled elimination (gcd use only)."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while r and len(r) - 1 >= db:
        dr = len(r) - 1
        lr = r[-1]
        g = math.gcd(lr, lb)
        mul_r, mul_b = lb // g, lr // g
        r = [c * mul_r for c in r]
        for i in range(db + 1):
            r[dr - db + i] -= mul_b * b[i]
        _itrim(r)
    return r


def _iresultant(a, b):
    """Resultant of integer polynomials (Fraction bookkeeping, exact)."""
    if not a or not b:
        return 0
    da, db = len(a) - 1, len(b) - 1
    if da == 0 and db == 0:
        return 1
    if db == 0:
        return b[0] ** da
    if da == 0:
        return a[0] ** db
    if da < db:
        sign = -1 if (da * db) % 2 else 1
        return sign * _iresultant(b, a)
    # res(a, b) = (-1)^(da db) lc(b)^(da - dr) res(b, r) with r = a rem b
    lb = b[-1]
    r = _iprem(a, b)
    if not r:
        return 0
    # _iprem returns lb^(da-db+1) * (a rem b)
    dr = len(r) - 1
    r, cont = _iprimitive(r)
    factor = Fraction(cont, lb ** (da - db + 1))
    scale = (Fraction(-1) ** (da * db)) * Fraction(lb) ** (da - dr) * factor ** db
    sub = _iresultant(b, r)
    val = scale * sub
    assert val.denominator == 1
    return val.numerator


# ---------------------------------------------------------------------------
# prime / finite-field helpers for exact integer root extraction
# ---------------------------------------------------------------------------

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _next_prime(n):
    n += 1 + (n % 2 == 0)
    while not _is_prime(n):
        n += 2
    return n


def _ptrim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _pmod(a, f, p):
    """a mod f over F_p (f monic assumed after scaling)."""
    r = [c % p for c in a]
    _ptrim(r)
    df = len(f) - 1
    inv_lf = pow(f[-1], -1, p)
    while r and len(r) - 1 >= df:
        dr = len(r) - 1
        c = r[-1] * inv_lf % p
        for i in range(df + 1):
            r[dr - df + i] = (r[dr - df + i] - c * f[i]) % p
        _ptrim(r)
    return r


def _pmulmod(a, b, f, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pmod(out, f, p)


def _ppowmod(base, e, f, p):
    result = [1]
    base = _pmod(list(base), f, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, f, p)
        base = _pmulmod(base, base, f, p)
        e >>= 1
    return result


def _pgcd(a, b, p):
    a = [c % p for c in a]
    b = [c % p for c in b]
    _ptrim(a)
    _ptrim(b)
    while b:
        a = _pmod(a, b, p)
        a, b = b, a
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _presultant(a, b, p):
    """Resultant of integer polynomials modulo a prime p.

    Requires the leading coefficients nonzero mod p so that matrix
    dimensions match the integer resultant."""
    a = [c % p for c in a]
    b = [c % p for c in b]
    _ptrim(a)
    _ptrim(b)
    if not a or not b:
        return 0
    res = 1
    da, db = len(a) - 1, len(b) - 1
    while True:
        if da == 0 and db == 0:
            return res
        if db == 0:
            return res * pow(b[0], da, p) % p
        if da == 0:
            return res * pow(a[0], db, p) % p
        if da < db:
            if (da * db) % 2:
                res = (-res) % p
            a, b, da, db = b, a, db, da
        r = _pmod(a, b, p)
        if not r:
            return 0
        dr = len(r) - 1
        if (da * db) % 2:
            res = (-res) % p
        res = res * pow(b[-1], da - dr, p) % p
        a, b, da, db = b, r, db, dr


def _proots_linear(f, p, rng):
    """Roots in F_p of a product of distinct linear factors (monic f)."""
    if len(f) <= 1:
        return []
    if len(f) == 2:
        return [(-f[0]) * pow(f[1], -1, p) % p]
    while True:
        a = rng.randrange(p)
        g = _ppowmod([a, 1], (p - 1) // 2, f, p)
        g = list(g)
        if g:
            g[0] = (g[0] - 1) % p
        else:
            g = [p - 1]
        _ptrim(g)
        h = _pgcd(f, g, p)
        if 0 < len(h) - 1 < len(f) - 1:
            rest = _pexactdiv(f, h, p)
            return _proots_linear(h, p, rng) + _proots_linear(rest, p, rng)


def _pexactdiv(a, b, p):
    q, r = _pdivmod(a, b, p)
    assert not r
    return q


def _pdivmod(a, b, p):
    r = [c % p for c in a]
    _ptrim(r)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(r) - db, 0)
    while r and len(r) - 1 >= db:
        dr = len(r) - 1
        c = r[-1] * inv % p
        q[dr - db] = c
        for i in range(db + 1):
            r[dr - db + i] = (r[dr - db + i] - c * b[i]) % p
        _ptrim(r)
    return q, r


def _int_roots(p, bound_hint=None):
    """All integer roots of an integer polynomial, exact and complete.

    bound_hint, when given, is a proven bound on the absolute value of any
    integer root and shrinks the search."""
    p, _ = _iprimitive(list(p))
    if not p:
        raise ValueError("integer roots of the zero polynomial")
    roots = set()
    # strip roots at 0
    k = 0
    while p[k] == 0:
        k += 1
    if k:
        roots.add(0)
        p = p[k:]
    if len(p) == 1:
        return roots
    bound = 1 + max(abs(c) for c in p[:-1]) // abs(p[-1]) + 1
    if bound_hint is not None:
        bound = min(bound, bound_hint)
    if bound <= 300:
        for n in range(-bound, bound + 1):
            if _ieval(p, n) == 0:
                roots.add(n)
        return roots
    if bound <= 2_000_000:
        # screen the window modulo a word-size prime, verify survivors
        q = _next_prime((1 << 61) + 5 * len(p))
        pq = [c % q for c in p]
        for n in range(-bound, bound + 1):
            acc = 0
            m = n % q
            for c in reversed(pq):
                acc = (acc * m + c) % q
            if acc == 0 and _ieval(p, n) == 0:
                roots.add(n)
        return roots
    # exact extraction via roots modulo one or more 62-bit primes
    rng = random.Random(0xD15BE5)
    primes, prod = [], 1
    base = 1 << 62
    while prod <= 2 * bound:
        q = _next_prime(base + rng.randrange(1 << 20))
        if p[-1] % q == 0:
            continue
        primes.append(q)
        prod *= q
    root_sets = []
    for q in primes:
        fq = [c % q for c in p]
        _ptrim(fq)
        xq = _ppowmod([0, 1], q, fq, q)
        g = list(xq)
        if len(g) < 2:
            g = g + [0] * (2 - len(g))
        g[1] = (g[1] - 1) % q
        _ptrim(g)
        lin = _pgcd(fq, g, q)
        root_sets.append(_proots_linear(lin, q, rng))
    # CRT-combine candidate residues, verify exactly
    combos = [(0, 1)]
    for q, rs in zip(primes, root_sets):
        new = []
        for r0, m in combos:
            for r in rs:
                # solve x = r0 mod m, x = r mod q
                inv = pow(m % q, -1, q)
                t = (r - r0) * inv % q
                new.append((r0 + m * t, m * q))
        combos = new
        if len(combos) > 100_000:
            raise RuntimeError("integer root candidate explosion")
    for r, m in combos:
        for cand in (r % m, r % m - m):
            if abs(cand) <= bound and _ieval(p, cand) == 0:
                roots.add(cand)
    return roots


# ---------------------------------------------------------------------------
# Poly
# ---------------------------------------------------------------------------


class Poly:
    """Immutable dense polynomial in y over an exact field."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field, coeffs=()):
        cs = list(coeffs)
        while cs and field.is_zero(cs[-1]):
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)
        self._hash = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def const(field, c):
        return Poly(field, (c,))

    @staticmethod
    def var(field):
        return Poly(field, (field.zero, field.one))

    @staticmethod
    def monomial(field, c, k):
        return Poly(field, (field.zero,) * k + (c,))

    @staticmethod
    def from_int_list(field, ints):
        return Poly(field, [field.from_int(c) for c in ints])

    # -- basics -------------------------------------------------------------

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        """Degree; -1 is the zero-polynomial sentinel, never compare it."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        if not self.coeffs:
            raise ValueError("leading coefficient of zero polynomial")
        return self.coeffs[-1]

    def coeff(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.field.zero

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs \
            and self.field.tag == other.field.tag

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.tag, self.coeffs))
        return self._hash

    def __repr__(self):
        return f"Poly({self.field.tag}, {self.format()})"

    def format(self, var="y"):
        if self.is_zero:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if self.field.is_zero(c):
                continue
            cs = self.field.format(c)
            if i == 0:
                parts.append(cs)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                if cs == "1":
                    parts.append(mono)
                elif cs == "-1":
                    parts.append(f"-{mono}")
                elif any(op in cs[1:] for op in "+-") or "/" in cs or " " in cs:
                    parts.append(f"({cs})*{mono}")
                else:
                    parts.append(f"{cs}*{mono}")
        out = parts[0]
        for part in parts[1:]:
            out += " - " + part[1:] if part.startswith("-") else " + " + part
        return out

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(self.field, out)

    def __sub__(self, other):
        out = list(self.coeffs)
        if len(out) < len(other.coeffs):
            out.extend([self.field.zero] * (len(other.coeffs) - len(out)))
        for i, c in enumerate(other.coeffs):
            out[i] = out[i] - c
        return Poly(self.field, out)

    def __neg__(self):
        return Poly(self.field, [-c for c in self.coeffs])

    def __mul__(self, other):
        f = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(f, ())
        if f.tag == "Q":
            ia, sa = _q_clear(a)
            ib, sb = _q_clear(b)
            prod = _imul(ia, ib)
            s = sa * sb
            return Poly(f, [c * s for c in prod])
        out = [f.zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if f.is_zero(ai):
                continue
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
        return Poly(f, out)

    def scale(self, c):
        return Poly(self.field, [a * c for a in self.coeffs])

    def power(self, n):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly.const(self.field, self.field.one)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def monic(self):
        if self.is_zero:
            return self
        inv = self.field.inv(self.lc)
        return self.scale(inv)

    def divmod(self, other):
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        r = list(self.coeffs)
        db = other.degree
        inv_lb = f.inv(other.lc)
        q = [f.zero] * max(len(r) - db, 0)
        while r and len(r) - 1 >= db:
            while r and f.is_zero(r[-1]):
                r.pop()
            if not r or len(r) - 1 < db:
                break
            dr = len(r) - 1
            c = r[-1] * inv_lb
            q[dr - db] = c
            for i in range(db + 1):
                r[dr - db + i] = r[dr - db + i] - c * other.coeffs[i]
            r.pop()
        return Poly(f, q), Poly(f, r)

    def rem(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero:
            raise ValueError("inexact polynomial division")
        return q

    def derivative(self):
        f = self.field
        return Poly(f, [self.coeffs[i] * f.from_int(i)
                        for i in range(1, len(self.coeffs))])

    def eval(self, x):
        """Horner evaluation; x may be any value with ring operators."""
        if not self.coeffs:
            return self.field.zero
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def shift(self, ell):
        """p(y + ell) for an integer shift ell, exact."""
        if ell == 0 or self.is_zero:
            return self
        f = self.field
        if f.tag == "Q":
            ints, s = _q_clear(self.coeffs)
            shifted = _ishift(ints, ell)
            return Poly(f, [c * s for c in shifted])
        c = f.from_int(ell)
        res: list = []
        for coef in reversed(self.coeffs):
            new = [f.zero] * (len(res) + 1)
            for i, a in enumerate(res):
                new[i + 1] = new[i + 1] + a
                new[i] = new[i] + a * c
            new[0] = new[0] + coef
            res = new
        return Poly(f, res)


def _q_clear(coeffs):
    """Fractions -> (int list, Fraction scale) with coeffs = scale * ints."""
    den = 1
    for c in coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    ints2, cont = _iprimitive(ints)
    return ints2, Fraction(cont, den)


# ---------------------------------------------------------------------------
# gcd / extended gcd / resultant / squarefree
# ---------------------------------------------------------------------------


def gcd_poly(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor; gcd(0, 0) = 0."""
    f = p.field
    if p.is_zero:
        return q.monic()
    if q.is_zero:
        return p.monic()
    if f.tag == "Q":
        ia, _ = _q_clear(p.coeffs)
        ib, _ = _q_clear(q.coeffs)
        g = _igcd(ia, ib)
        return Poly(f, [Fraction(c) for c in g]).monic()
    a, b = p, q
    if a.degree < b.degree:
        a, b = b, a
    a = f.normalize_poly(a)
    b = f.normalize_poly(b)
    while not b.is_zero:
        r = a.rem(b)
        r = f.normalize_poly(r)
        a, b = b, r
    return a.monic()


def lcm_poly(p: Poly, q: Poly) -> Poly:
    if p.is_zero or q.is_zero:
        return Poly(p.field, ())
    g = gcd_poly(p, q)
    return (p.exact_div(g) * q).monic()


def xgcd_poly(p: Poly, q: Poly):
    """(g, s, t) with s*p + t*q = g = monic gcd(p, q).

    deg s < deg(q/g) and deg t < deg(p/g) whenever both inputs are nonzero
    and neither divides the other trivially.
    """
    f = p.field
    if p.is_zero and q.is_zero:
        raise ValueError("extended gcd of two zero polynomials")
    one, zero = Poly.const(f, f.one), Poly(f, ())
    r0, r1 = p, q
    s0, s1 = one, zero
    t0, t1 = zero, one
    while not r1.is_zero:
        quo, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - quo * s1
        t0, t1 = t1, t0 - quo * t1
    c = f.inv(r0.lc)
    cc = Poly.const(f, c)
    return r0.scale(c), s0 * cc, t0 * cc


def resultant(p: Poly, q: Poly):
    """Resultant in y; 0 iff p and q share a root in the closure."""
    f = p.field
    if p.is_zero or q.is_zero:
        return f.zero
    if f.tag == "Q":
        ia, sa = _q_clear(p.coeffs)
        ib, sb = _q_clear(q.coeffs)
        r = _iresultant(ia, ib)
        return Fraction(r) * sa ** q.degree * sb ** p.degree
    return _resultant_field(p, q)


def _resultant_field(p: Poly, q: Poly):
    f = p.field
    dp, dq = p.degree, q.degree
    if dp == 0 and dq == 0:
        return f.one
    if dq == 0:
        return q.lc ** dp
    if dp == 0:
        return p.lc ** dq
    r = p.rem(q)
    if r.is_zero:
        return f.zero
    sign = f.one if (dp * dq) % 2 == 0 else -f.one
    return sign * q.lc ** (dp - r.degree) * _resultant_field(q, r)


def squarefree_decomposition(p: Poly):
    """Yun decomposition: [(g_i, i)] with monic(p) = prod g_i^i, g_i monic,
    squarefree, pairwise coprime."""
    if p.is_zero:
        raise ValueError("squarefree decomposition of zero")
    p = p.monic()
    if p.degree == 0:
        return []
    out = []
    d = p.derivative()
    u = gcd_poly(p, d)
    v = p.exact_div(u)
    w = d.exact_div(u)
    i = 1
    while v.degree > 0:
        z = w - v.derivative()
        s = gcd_poly(v, z)
        if s.degree > 0:
            out.append((s, i))
        v = v.exact_div(s)
        w = z.exact_div(s)
        i += 1
    return out


def radical(p: Poly) -> Poly:
    """Product of the distinct monic irreducible factors of p."""
    result = Poly.const(p.field, p.field.one)
    for g, _ in squarefree_decomposition(p):
        result = result * g
    return result


def extract_power_part(p: Poly, base: Poly):
    """Split p = part * rest with part the maximal divisor of p all of whose
    irreducible factors divide base, and gcd(part, rest) = 1."""
    f = p.field
    part = Poly.const(f, f.one)
    rest = p.monic()
    g = gcd_poly(rest, base)
    while g.degree > 0:
        part = part * g
        rest = rest.exact_div(g)
        g = gcd_poly(rest, g)
    return part, rest


def integer_roots(p: Poly):
    """All integers n with p(n) = 0 (over Q(x): zero as a rational function)."""
    if p.is_zero:
        raise ValueError("integer roots of the zero polynomial")
    f = p.field
    if f.tag == "Q":
        ints, _ = _q_clear(p.coeffs)
        return _int_roots(ints)
    # Q(x): clear denominators, evaluate x at two integer points where the
    # leading coefficient survives, intersect the candidate sets, and verify
    # each candidate exactly.
    cand = None
    rng = random.Random(0x5EED)
    found = 0
    attempts = 0
    while found < 2:
        attempts += 1
        if attempts > 500:
            raise RuntimeError("no admissible evaluation point found")
        theta = rng.randint(-60, 60)
        try:
            evaluated = [f.eval_x(c, theta) for c in p.coeffs]
        except ZeroDivisionError:
            continue
        if evaluated[-1] == 0:
            continue
        found += 1
        pts = _int_roots(_q_clear(evaluated)[0])
        cand = pts if cand is None else cand & pts
    roots = set()
    for n in sorted(cand):
        val = p.eval(f.from_int(n))
        if f.is_zero(val):
            roots.add(n)
    return roots
