"""The coefficient tower: Q and Q(x).

Field objects are stateless singletons that tell Poly/RatFunc how to treat
scalars.  Scalars of QQ are fractions.Fraction; scalars of QX are RatFunc
instances over QQ in the variable x.  QX additionally carries the shift
automorphism x -> x + 1 used for bivariate terms.
"""

from __future__ import annotations

from fractions import Fraction

from .polynomials import Poly, gcd_poly, lcm_poly
from .ratfunc import RatFunc


class _FieldQ:
    """The rationals; scalars are fractions.Fraction."""

    tag = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def is_zero(a):
        return a == 0

    @staticmethod
    def from_int(n):
        return Fraction(n)

    @staticmethod
    def from_fraction(q):
        return Fraction(q)

    @staticmethod
    def inv(a):
        return 1 / a

    @staticmethod
    def format(a):
        return str(a)

    @staticmethod
    def shift_x(a, steps=1):
        return a

    @staticmethod
    def normalize_poly(p):
        return p


class _FieldQx:
    """Q(x); scalars are RatFunc over QQ in x."""

    tag = "Q(x)"

    def __init__(self):
        self.zero = RatFunc.zero(QQ)
        self.one = RatFunc.const(QQ, Fraction(1))
        self.x = RatFunc.from_poly(Poly.var(QQ))

    @staticmethod
    def is_zero(a):
        return a.is_zero

    def from_int(self, n):
        return RatFunc.const(QQ, Fraction(n))

    def from_fraction(self, q):
        return RatFunc.const(QQ, Fraction(q))

    @staticmethod
    def inv(a):
        return a.inverse()

    @staticmethod
    def format(a):
        return a.format("x")

    @staticmethod
    def shift_x(a, steps=1):
        """The automorphism x -> x + steps of Q(x)."""
        return a.shift(steps)

    @staticmethod
    def eval_x(a, theta):
        """Evaluate a at an integer x = theta (may raise ZeroDivisionError)."""
        den = a.den.eval(Fraction(theta))
        if den == 0:
            raise ZeroDivisionError
        return a.num.eval(Fraction(theta)) / den

    @staticmethod
    def normalize_poly(p):
        """Scale a Poly over Q(x) so its coefficients form a primitive
        Q[x] tuple; keeps Euclidean remainder sequences from blowing up."""
        if p.is_zero:
            return p
        den = Poly.const(QQ, Fraction(1))
        for c in p.coeffs:
            if not c.is_zero:
                den = lcm_poly(den, c.den)
        num_gcd = Poly(QQ, ())
        for c in p.coeffs:
            if not c.is_zero:
                num_gcd = gcd_poly(num_gcd, c.num * den.exact_div(c.den))
        if num_gcd.is_zero:
            return p
        scale = RatFunc(den, num_gcd)
        return p.scale(scale)


QQ = _FieldQ()
QX = _FieldQx()


def shift_y_ratfunc(r: RatFunc, ell: int) -> RatFunc:
    """sigma_y^ell on an element of F(y)."""
    return r.shift(ell)


def shift_x_poly(p: Poly, steps: int = 1) -> Poly:
    """Coefficient-wise x -> x + steps on a Poly over Q(x)."""
    f = p.field
    return Poly(f, [f.shift_x(c, steps) for c in p.coeffs])


def shift_x_ratfunc(r: RatFunc, steps: int = 1) -> RatFunc:
    """x -> x + steps on an element of Q(x)(y)."""
    return RatFunc(shift_x_poly(r.num, steps), shift_x_poly(r.den, steps))
