"""Reduced rational functions num/den over an exact coefficient field.

Canonical form: gcd(num, den) = 1 and den monic, enforced on construction.
Two rational functions are equal iff their canonical pairs are equal.
"""

from __future__ import annotations

from .polynomials import Poly, gcd_poly, xgcd_poly


class RatFunc:
    """Immutable reduced fraction of two polynomials."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Poly, den: Poly):
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            den = Poly.const(num.field, num.field.one)
        else:
            g = gcd_poly(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            c = den.lc
            if not (c == den.field.one):
                inv = den.field.inv(c)
                num = num.scale(inv)
                den = den.scale(inv)
        self.num = num
        self.den = den
        self._hash = None

    # -- constructors --------------------------------------------------------

    @staticmethod
    def from_poly(p: Poly):
        return RatFunc(p, Poly.const(p.field, p.field.one))

    @staticmethod
    def const(field, c):
        return RatFunc(Poly.const(field, c), Poly.const(field, field.one))

    @staticmethod
    def zero(field):
        return RatFunc(Poly(field, ()), Poly.const(field, field.one))

    # -- basics ---------------------------------------------------------------

    @property
    def field(self):
        return self.num.field

    @property
    def is_zero(self):
        return self.num.is_zero

    @property
    def is_one(self):
        return self.den.degree == 0 and self.num == self.den

    def as_poly(self):
        """The numerator when the denominator is 1, else raises."""
        if self.den.degree != 0:
            raise ValueError("not a polynomial")
        return self.num

    def is_poly(self):
        return self.den.degree == 0

    def __eq__(self, other):
        if isinstance(other, int):
            f = self.field
            return self == RatFunc.const(f, f.from_int(other))
        return isinstance(other, RatFunc) and self.num == other.num \
            and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self):
        return f"RatFunc({self.format()})"

    def format(self, var="y"):
        if self.den.degree == 0:
            return self.num.format(var)
        ns = self.num.format(var)
        ds = self.den.format(var)
        if self.num.degree > 0 and len(self.num.coeffs) - sum(
                1 for c in self.num.coeffs if self.field.is_zero(c)) > 1:
            ns = f"({ns})"
        return f"{ns}/({ds})"

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Poly):
            other = RatFunc.from_poly(other)
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    def __sub__(self, other):
        if isinstance(other, Poly):
            other = RatFunc.from_poly(other)
        return RatFunc(self.num * other.den - other.num * self.den,
                       self.den * other.den)

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __mul__(self, other):
        if isinstance(other, Poly):
            other = RatFunc.from_poly(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if isinstance(other, Poly):
            other = RatFunc.from_poly(other)
        if other.is_zero:
            raise ZeroDivisionError("rational function division by zero")
        return RatFunc(self.num * other.den, self.den * other.num)

    def inverse(self):
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num)

    def scale(self, c):
        return RatFunc(self.num.scale(c), self.den)

    def power(self, n: int):
        if n < 0:
            return self.inverse().power(-n)
        return RatFunc(self.num.power(n), self.den.power(n))

    def shift(self, ell: int):
        """Substitute y -> y + ell."""
        if ell == 0:
            return self
        return RatFunc(self.num.shift(ell), self.den.shift(ell))

    def poly_and_proper(self):
        """Split into (polynomial part, proper remainder fraction)."""
        q, r = self.num.divmod(self.den)
        return q, RatFunc(r, self.den)

    def derivative(self):
        return RatFunc(self.num.derivative() * self.den
                       - self.num * self.den.derivative(),
                       self.den * self.den)

    def eval(self, x):
        den = self.den.eval(x)
        return self.num.eval(x) / den


def partial_fractions(f: RatFunc, factors):
    """Decompose f over pairwise-coprime factors of its denominator.

    Returns (poly_part, parts) with f = poly_part + sum(parts), where
    den(parts[i]) = factors[i] (monic) and deg num(parts[i]) < deg factors[i].
    Raises ValueError if the factors are not coprime or their product does
    not match den(f).
    """
    field = f.field
    monic = [d.monic() for d in factors]
    prod = Poly.const(field, field.one)
    for d in monic:
        if d.is_zero:
            raise ValueError("zero factor")
        prod = prod * d
    if prod != f.den:
        raise ValueError("factor product does not equal the denominator")
    for i in range(len(monic)):
        for j in range(i + 1, len(monic)):
            if gcd_poly(monic[i], monic[j]).degree > 0:
                raise ValueError("factors are not pairwise coprime")
    parts = []
    total = Poly(field, ())
    for d in monic:
        if d.degree == 0:
            continue
        cof = prod.exact_div(d)
        _, s, _ = xgcd_poly(cof, d)  # s*cof = 1 mod d
        ai = (f.num * s).rem(d)
        parts.append(RatFunc(ai, d))
        total = total + ai * cof
    poly_part = (f.num - total).exact_div(prod)
    return poly_part, parts
