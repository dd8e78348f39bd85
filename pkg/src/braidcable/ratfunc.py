"""Rational functions in q: the fraction field of the Laurent ring.

Canonical form: the denominator is a primitive integer polynomial in q with
nonzero constant term and positive leading coefficient, coprime to the
numerator.  This makes equality a structural comparison.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .laurent import LaurentPoly


# -- integer polynomial helpers (dense ascending coefficient lists) --------

def _content(coeffs):
    g = 0
    for c in coeffs:
        g = gcd(g, abs(c))
        if g == 1:
            return 1
    return g


def _primitive(coeffs):
    g = _content(coeffs)
    if g > 1:
        coeffs = [c // g for c in coeffs]
    if coeffs and coeffs[-1] < 0:
        coeffs = [-c for c in coeffs]
    return coeffs


def _trim(coeffs):
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _pseudo_rem(a, b):
    """Pseudo-remainder of integer polynomial lists a, b (deg a >= deg b)."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        da = len(a) - 1
        la = a[-1]
        a = [c * lb for c in a]
        for i, bc in enumerate(b):
            a[da - db + i] -= la * bc
        _trim(a)
    return a


def _poly_gcd_int(a, b):
    """Primitive gcd of two primitive integer polynomial lists."""
    a, b = list(a), list(b)
    if not a:
        return _primitive(b)
    if not b:
        return _primitive(a)
    while b:
        if len(a) < len(b):
            a, b = b, a
            continue
        r = _pseudo_rem(a, b)
        a, b = b, _primitive(r)
    return _primitive(a)


def _laurent_to_int_poly(p):
    """Write p = (num_scale) * q^val * P with P a primitive integer poly list.

    Returns (val, P, scale) with scale a Fraction; p must be nonzero.
    """
    val = p.valuation()
    exps = sorted(p.coeffs)
    den_lcm = 1
    for c in p.coeffs.values():
        if isinstance(c, Fraction):
            den_lcm = lcm(den_lcm, c.denominator)
    coeffs = [0] * (p.degree() - val + 1)
    for e in exps:
        c = p.coeffs[e]
        coeffs[e - val] = int(c * den_lcm)
    g = _content(coeffs)
    sign = -1 if coeffs[-1] < 0 else 1
    coeffs = [c // (g * sign) for c in coeffs]
    return val, coeffs, Fraction(g * sign, den_lcm)


def _int_poly_to_laurent(coeffs, val=0):
    return LaurentPoly({val + i: c for i, c in enumerate(coeffs)})


def laurent_gcd(a, b):
    """Monic-free gcd of two Laurent polynomials (primitive integer poly in q)."""
    if a.is_zero():
        b_val, b_poly, _ = _laurent_to_int_poly(b)
        return _int_poly_to_laurent(b_poly)
    if b.is_zero():
        a_val, a_poly, _ = _laurent_to_int_poly(a)
        return _int_poly_to_laurent(a_poly)
    _, pa, _ = _laurent_to_int_poly(a)
    _, pb, _ = _laurent_to_int_poly(b)
    return _int_poly_to_laurent(_poly_gcd_int(pa, pb))


class RatFunc:
    """Immutable rational function num/den over the rationals."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = LaurentPoly.one()
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        num, den = self._canonicalize(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @staticmethod
    def _canonicalize(num, den):
        if num.is_zero():
            return LaurentPoly.zero(), LaurentPoly.one()
        # shift q-powers of the denominator into the numerator
        dval = den.valuation()
        if dval:
            den = den.shift(-dval)
            num = num.shift(-dval)
        if den.is_monomial():
            (e, c), = den.coeffs.items()
            return num._mono_mul(-e, Fraction(1) / Fraction(c)), LaurentPoly.one()
        nval, npoly, nscale = _laurent_to_int_poly(num)
        _, dpoly, dscale = _laurent_to_int_poly(den)
        g = _poly_gcd_int(npoly, dpoly)
        if len(g) > 1:
            npoly_l = _int_poly_to_laurent(npoly).divexact(_int_poly_to_laurent(g))
            dpoly_l = _int_poly_to_laurent(dpoly).divexact(_int_poly_to_laurent(g))
            _, dpoly, d2scale = _laurent_to_int_poly(dpoly_l)
            num = npoly_l.scale(nscale / (dscale * d2scale)).shift(nval)
        else:
            num = _int_poly_to_laurent(npoly).scale(nscale / dscale).shift(nval)
        den = _int_poly_to_laurent(dpoly)
        if den.is_monomial():
            (e, c), = den.coeffs.items()
            return num._mono_mul(-e, Fraction(1) / Fraction(c)), LaurentPoly.one()
        return num, den

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls):
        return cls(LaurentPoly.zero())

    @classmethod
    def one(cls):
        return cls(LaurentPoly.one())

    @classmethod
    def from_laurent(cls, p):
        return cls(p)

    @classmethod
    def const(cls, c):
        return cls(LaurentPoly.const(c))

    # -- queries -----------------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num.is_one() and self.den.is_one()

    def is_laurent(self):
        return self.den.is_one()

    def to_laurent(self):
        if not self.is_laurent():
            raise ValueError("denominator %s is not a unit" % self.den)
        return self.num

    def complexity(self):
        """Rough size measure used for pivot selection in elimination."""
        return self.num.num_terms() + self.den.num_terms()

    # -- field operations --------------------------------------------------

    def __add__(self, other):
        if isinstance(other, LaurentPoly):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        return RatFunc(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __sub__(self, other):
        if isinstance(other, LaurentPoly):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        out = RatFunc.__new__(RatFunc)
        object.__setattr__(out, "num", -self.num)
        object.__setattr__(out, "den", self.den)
        return out

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RatFunc.zero()
        return RatFunc(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if isinstance(other, LaurentPoly):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def substitute_power(self, r):
        return RatFunc(self.num.substitute_power(r), self.den.substitute_power(r))

    def evaluate(self, x):
        d = self.den.evaluate(x)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at q = %s" % x)
        return self.num.evaluate(x) / d

    def evaluate_mod(self, x, p):
        d = self.den.evaluate_mod(x, p)
        if d % p == 0:
            raise ZeroDivisionError("denominator vanishes at q = %s mod %d" % (x, p))
        return (self.num.evaluate_mod(x, p) * pow(d, -1, p)) % p

    def __str__(self):
        if self.is_laurent():
            return str(self.num)
        return "(%s) / (%s)" % (self.num, self.den)

    def __repr__(self):
        return "RatFunc(%s)" % self

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, obj):
        return cls(LaurentPoly.from_json(obj["num"]), LaurentPoly.from_json(obj["den"]))
