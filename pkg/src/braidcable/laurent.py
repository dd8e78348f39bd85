"""Exact Laurent polynomials in q with rational coefficients.

A LaurentPoly is a finite sum  sum_e  c_e * q^e  with integer exponents e
(possibly negative) and nonzero rational coefficients c_e.  Coefficients are
stored as plain ints when the denominator is 1, which keeps the common
integer-coefficient workloads (Burau word evaluation) on the fast int path.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .series import TruncSeries

_KRONECKER_MIN_TERMS = 24


def _norm(c):
    """Normalize a coefficient: Fractions with denominator 1 become ints."""
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else c
    return int(c)


class LaurentPoly:
    """Immutable Laurent polynomial in q over the rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        d = {}
        if coeffs:
            for e, c in coeffs.items():
                c = _norm(c)
                if c != 0:
                    d[int(e)] = c
        object.__setattr__(self, "coeffs", d)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def const(cls, c):
        return cls({0: c})

    @classmethod
    def q(cls):
        return cls({1: 1})

    @classmethod
    def monomial(cls, e, c=1):
        return cls({e: c})

    # -- basic queries -----------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return self.coeffs == {0: 1}

    def is_monomial(self):
        """True iff the polynomial is c*q^e with c != 0 (a unit of the ring)."""
        return len(self.coeffs) == 1

    def is_constant(self):
        return not self.coeffs or set(self.coeffs) == {0}

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant: %s" % self)
        return Fraction(self.coeffs.get(0, 0))

    def valuation(self):
        """Lowest exponent; raises on the zero polynomial."""
        if not self.coeffs:
            raise ValueError("valuation of zero polynomial")
        return min(self.coeffs)

    def degree(self):
        """Highest exponent; raises on the zero polynomial."""
        if not self.coeffs:
            raise ValueError("degree of zero polynomial")
        return max(self.coeffs)

    def leading_coeff(self):
        return Fraction(self.coeffs[self.degree()])

    def num_terms(self):
        return len(self.coeffs)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        d = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = d.get(e, 0) + c
            if s:
                d[e] = _norm(s)
            elif e in d:
                del d[e]
        out = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(out, "coeffs", d)
        return out

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        out = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(out, "coeffs", {e: -c for e, c in self.coeffs.items()})
        return out

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return LaurentPoly.zero()
        if len(a) == 1:
            (e, c), = a.items()
            return other._mono_mul(e, c)
        if len(b) == 1:
            (e, c), = b.items()
            return self._mono_mul(e, c)
        if (
            min(len(a), len(b)) >= _KRONECKER_MIN_TERMS
            and all(isinstance(c, int) for c in a.values())
            and all(isinstance(c, int) for c in b.values())
        ):
            return self._mul_kronecker(other)
        d = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                s = d.get(e, 0) + ca * cb
                if s:
                    d[e] = s
                elif e in d:
                    del d[e]
        d = {e: _norm(c) for e, c in d.items() if c}
        out = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(out, "coeffs", d)
        return out

    def _mono_mul(self, e, c):
        out = LaurentPoly.__new__(LaurentPoly)
        if c == 1:
            object.__setattr__(out, "coeffs", {k + e: v for k, v in self.coeffs.items()})
        else:
            object.__setattr__(
                out, "coeffs", {k + e: _norm(v * c) for k, v in self.coeffs.items()}
            )
        return out

    def _mul_kronecker(self, other):
        """Integer-coefficient product via packing into one big-int multiply."""
        va, vb = self.valuation(), other.valuation()
        da = self.degree() - va
        db = other.degree() - vb
        amax = max(abs(c) for c in self.coeffs.values())
        bmax = max(abs(c) for c in other.coeffs.values())
        bound = min(len(self.coeffs), len(other.coeffs)) * amax * bmax
        bits = (2 * bound + 1).bit_length() + 1
        half = 1 << (bits - 1)
        mask = (1 << bits) - 1
        pa = sum(c << (bits * (e - va)) for e, c in self.coeffs.items())
        pb = sum(c << (bits * (e - vb)) for e, c in other.coeffs.items())
        prod = pa * pb
        d = {}
        e = va + vb
        for _ in range(da + db + 1):
            digit = ((prod + half) & mask) - half
            if digit:
                d[e] = digit
            prod = (prod - digit) >> bits
            e += 1
        out = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(out, "coeffs", d)
        return out

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_monomial():
                raise ValueError("negative power of a non-unit Laurent polynomial")
            (e, c), = self.coeffs.items()
            return LaurentPoly({e * k: Fraction(1, 1) / Fraction(c) ** (-k)})
        result = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k):
        """Multiply by q^k."""
        return self._mono_mul(k, 1)

    def scale(self, c):
        """Multiply by the rational scalar c."""
        c = _norm(c if isinstance(c, (int, Fraction)) else Fraction(c))
        if c == 0:
            return LaurentPoly.zero()
        return self._mono_mul(0, c)

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    # -- morphisms and evaluation -----------------------------------------

    def substitute_power(self, r):
        """The field morphism q -> q^r applied to this polynomial (r != 0)."""
        if r == 0:
            raise ValueError("q -> q^0 is not a field morphism")
        return LaurentPoly({e * r: c for e, c in self.coeffs.items()})

    def evaluate(self, x):
        """Exact value at q = x (nonzero rational when negative exponents occur)."""
        x = Fraction(x)
        total = Fraction(0)
        for e, c in self.coeffs.items():
            total += c * x**e
        return total

    def evaluate_mod(self, x, p):
        """Value at q = x modulo the prime p (x must be invertible mod p)."""
        total = 0
        xinv = pow(x, -1, p)
        for e, c in self.coeffs.items():
            if isinstance(c, Fraction):
                cv = c.numerator * pow(c.denominator, -1, p)
            else:
                cv = c
            base = pow(x, e, p) if e >= 0 else pow(xinv, -e, p)
            total = (total + cv * base) % p
        return total

    def to_series(self, order):
        """Expand under q = exp(h/2) as a power series in h truncated at h^order."""
        if order < 1:
            raise ValueError("series order must be >= 1")
        coeffs = [Fraction(0)] * order
        for e, c in self.coeffs.items():
            half_e = Fraction(e, 2)
            term = Fraction(1)
            for k in range(order):
                coeffs[k] += c * term
                term = term * half_e / (k + 1)
        return TruncSeries(order, coeffs)

    # -- exact division ----------------------------------------------------

    def divexact(self, other):
        """Exact quotient self / other; raises ValueError if not divisible."""
        if other.is_zero():
            raise ZeroDivisionError("Laurent division by zero")
        if self.is_zero():
            return LaurentPoly.zero()
        if other.is_monomial():
            (e, c), = other.coeffs.items()
            inv = Fraction(1) / Fraction(c)
            return self._mono_mul(-e, inv)
        # long division on the polynomial parts, tracking the q-power shift
        shift = self.valuation() - other.valuation()
        rem = dict(self.shift(-self.valuation()).coeffs)
        div = other.shift(-other.valuation()).coeffs
        ddeg = max(div)
        dlead = div[ddeg]
        quot = {}
        while rem:
            rdeg = max(rem)
            if rdeg < ddeg:
                raise ValueError("not an exact Laurent division")
            f = Fraction(rem[rdeg]) / Fraction(dlead)
            quot[rdeg - ddeg] = _norm(f)
            for e, c in div.items():
                k = e + rdeg - ddeg
                s = rem.get(k, 0) - f * c
                if s:
                    rem[k] = _norm(s)
                elif k in rem:
                    del rem[k]
        return LaurentPoly(quot).shift(shift)

    # -- display and serialization ----------------------------------------

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if e == 0:
                body = str(mag)
            else:
                var = "q" if e == 1 else "q^%d" % e
                body = var if mag == 1 else "%s*%s" % (mag, var)
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += " %s %s" % (sign, body)
        return text

    def __repr__(self):
        return "LaurentPoly(%s)" % self

    def to_json(self):
        """JSON object mapping exponent strings to rational strings."""
        return {str(e): str(Fraction(c)) for e, c in sorted(self.coeffs.items())}

    @classmethod
    def from_json(cls, obj):
        return cls({int(e): Fraction(s) for e, s in obj.items()})
