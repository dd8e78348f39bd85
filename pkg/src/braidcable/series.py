"""Truncated power series in h with exact rational coefficients.

A TruncSeries of order N stores the coefficients of h^0 .. h^(N-1); all
arithmetic silently drops terms of degree >= N.
"""

from __future__ import annotations

import os
from fractions import Fraction

DEFAULT_ORDER = 4


def default_order():
    """Series truncation order, overridable via BRAIDCABLE_SERIES_ORDER."""
    raw = os.environ.get("BRAIDCABLE_SERIES_ORDER")
    if raw is None:
        return DEFAULT_ORDER
    order = int(raw)
    if order < 1:
        raise ValueError("BRAIDCABLE_SERIES_ORDER must be >= 1")
    return order


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c if isinstance(c, (int, Fraction)) else Fraction(c)


class TruncSeries:
    """Immutable truncated power series in h over the rationals."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs=()):
        if order < 1:
            raise ValueError("order must be >= 1")
        cs = [_norm(c) for c in coeffs[:order]]
        cs += [0] * (order - len(cs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries is immutable")

    @classmethod
    def zero(cls, order):
        return cls(order)

    @classmethod
    def one(cls, order):
        return cls(order, (1,))

    @classmethod
    def const(cls, c, order):
        return cls(order, (c,))

    @classmethod
    def h(cls, order):
        return cls(order, (0, 1))

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def coefficient(self, k):
        return Fraction(self.coeffs[k])

    def truncate(self, order):
        return TruncSeries(order, self.coeffs)

    def _check_order(self, other):
        if self.order != other.order:
            raise ValueError(
                "mixed truncation orders %d and %d" % (self.order, other.order)
            )

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        self._check_order(other)
        return TruncSeries(
            self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __sub__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        self._check_order(other)
        return TruncSeries(
            self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __neg__(self):
        return TruncSeries(self.order, [-a for a in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        self._check_order(other)
        n = self.order
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(n - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return TruncSeries(n, out)

    def scale(self, c):
        return TruncSeries(self.order, [a * c for a in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def exp(self):
        """Truncated exponential; the constant term must vanish."""
        if self.coeffs[0] != 0:
            raise ValueError("series_exp requires zero constant term")
        result = TruncSeries.one(self.order)
        power = TruncSeries.one(self.order)
        fact = 1
        for k in range(1, self.order):
            power = power * self
            fact *= k
            result = result + power.scale(Fraction(1, fact))
        return result

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0 and not (k == 0 and all(x == 0 for x in self.coeffs)):
                continue
            if k == 0:
                parts.append(str(c))
            else:
                var = "h" if k == 1 else "h^%d" % k
                parts.append(var if c == 1 else "%s*%s" % (c, var))
        return " + ".join(parts).replace("+ -", "- ") + " + O(h^%d)" % self.order

    def __repr__(self):
        return "TruncSeries(%d, %r)" % (self.order, list(self.coeffs))

    def to_json(self):
        return {"order": self.order, "coeffs": [str(Fraction(c)) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj):
        return cls(obj["order"], [Fraction(s) for s in obj["coeffs"]])


def series_exp(x):
    """Truncated exp of a series with zero constant term."""
    return x.exp()
