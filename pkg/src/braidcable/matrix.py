"""Dense exact matrices over Rational, LaurentPoly, RatFunc, or TruncSeries.

All entries of a matrix share one coefficient kind.  Field-level routines
(inverse, nullspace, intertwiner solving) promote Laurent entries to RatFunc.
"""

from __future__ import annotations

from fractions import Fraction

from .laurent import LaurentPoly
from .ratfunc import RatFunc
from .series import TruncSeries


class SingularMatrixError(ValueError):
    """Raised when an inverse of a singular matrix is requested."""

    def __init__(self, determinant):
        self.determinant = determinant
        super().__init__("matrix is singular (determinant = %s)" % (determinant,))


def _zero_one_like(x):
    if isinstance(x, LaurentPoly):
        return LaurentPoly.zero(), LaurentPoly.one()
    if isinstance(x, RatFunc):
        return RatFunc.zero(), RatFunc.one()
    if isinstance(x, TruncSeries):
        return TruncSeries.zero(x.order), TruncSeries.one(x.order)
    return Fraction(0), Fraction(1)


def _is_zero(x):
    if isinstance(x, (LaurentPoly, RatFunc, TruncSeries)):
        return x.is_zero()
    return x == 0


def _complexity(x):
    if isinstance(x, LaurentPoly):
        return x.num_terms()
    if isinstance(x, RatFunc):
        return x.complexity()
    return 1


class ExactMatrix:
    """Immutable rectangular matrix with one exact coefficient kind."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        entries = tuple(tuple(row) for row in entries)
        if not entries or not entries[0]:
            raise ValueError("matrix must have at least one row and column")
        ncols = len(entries[0])
        for row in entries:
            if len(row) != ncols:
                raise ValueError("ragged rows in matrix")
        kinds = {type(e) for row in entries for e in row}
        if not (
            kinds <= {int, Fraction}
            or kinds <= {LaurentPoly}
            or kinds <= {RatFunc}
            or kinds <= {TruncSeries}
        ):
            raise ValueError("mixed coefficient kinds in matrix: %s" % kinds)
        object.__setattr__(self, "rows", len(entries))
        object.__setattr__(self, "cols", ncols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    @classmethod
    def identity(cls, n, like=Fraction(1)):
        zero, one = _zero_one_like(like)
        return cls(
            [[one if i == j else zero for j in range(n)] for i in range(n)]
        )

    @classmethod
    def zeros(cls, rows, cols, like=Fraction(0)):
        zero, _ = _zero_one_like(like)
        return cls([[zero] * cols for _ in range(rows)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def sample(self):
        return self.entries[0][0]

    def is_square(self):
        return self.rows == self.cols

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and all(
                a == b
                for ra, rb in zip(self.entries, other.entries)
                for a, b in zip(ra, rb)
            )
        )

    def __hash__(self):
        return hash(self.entries)

    def __add__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in matrix addition")
        return ExactMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __sub__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in matrix subtraction")
        return ExactMatrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __neg__(self):
        return ExactMatrix([[-a for a in row] for row in self.entries])

    def __mul__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        zero, _ = _zero_one_like(self.sample())
        bt = list(zip(*other.entries))
        out = []
        for row in self.entries:
            nz = [(k, a) for k, a in enumerate(row) if not _is_zero(a)]
            out_row = []
            for col in bt:
                acc = zero
                for k, a in nz:
                    b = col[k]
                    if not _is_zero(b):
                        acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return ExactMatrix(out)

    def scalar_mul(self, c):
        return ExactMatrix([[c * a for a in row] for row in self.entries])

    def transpose(self):
        return ExactMatrix(list(zip(*self.entries)))

    def map_entries(self, f):
        return ExactMatrix([[f(a) for a in row] for row in self.entries])

    def is_identity(self):
        if not self.is_square():
            return False
        zero, one = _zero_one_like(self.sample())
        return all(
            self.entries[i][j] == (one if i == j else zero)
            for i in range(self.rows)
            for j in range(self.cols)
        )

    def direct_sum(self, other):
        zero, _ = _zero_one_like(self.sample())
        top = [list(row) + [zero] * other.cols for row in self.entries]
        bot = [[zero] * self.cols + list(row) for row in other.entries]
        return ExactMatrix(top + bot)

    # -- conversions -------------------------------------------------------

    def to_ratfunc(self):
        sample = self.sample()
        if isinstance(sample, RatFunc):
            return self
        if isinstance(sample, LaurentPoly):
            return self.map_entries(RatFunc.from_laurent)
        if isinstance(sample, TruncSeries):
            raise ValueError("cannot promote a series matrix to rational functions")
        return self.map_entries(lambda c: RatFunc.const(c))

    def to_laurent(self):
        sample = self.sample()
        if isinstance(sample, LaurentPoly):
            return self
        if isinstance(sample, RatFunc):
            return self.map_entries(lambda c: c.to_laurent())
        return self.map_entries(lambda c: LaurentPoly.const(c))

    def to_series(self, order):
        sample = self.sample()
        if isinstance(sample, LaurentPoly):
            return self.map_entries(lambda c: c.to_series(order))
        raise ValueError("series expansion needs Laurent entries")

    def evaluate_mod(self, x, p):
        """Integer matrix of entry values at q = x modulo p."""
        sample = self.sample()
        if isinstance(sample, (LaurentPoly, RatFunc)):
            return [[e.evaluate_mod(x, p) for e in row] for row in self.entries]
        return [
            [Fraction(e).numerator * pow(Fraction(e).denominator, -1, p) % p for e in row]
            for row in self.entries
        ]

    def to_json(self):
        def enc(e):
            if isinstance(e, (LaurentPoly, RatFunc, TruncSeries)):
                return e.to_json()
            return str(Fraction(e))

        return [[enc(e) for e in row] for row in self.entries]

    def __str__(self):
        strs = [[str(e) for e in row] for row in self.entries]
        widths = [max(len(strs[i][j]) for i in range(self.rows)) for j in range(self.cols)]
        lines = []
        for row in strs:
            lines.append("[ " + "  ".join(s.rjust(w) for s, w in zip(row, widths)) + " ]")
        return "\n".join(lines)

    def __repr__(self):
        return "ExactMatrix(%d x %d, %s)" % (
            self.rows,
            self.cols,
            type(self.sample()).__name__,
        )


def matrix_from_json(obj):
    """Inverse of ExactMatrix.to_json; the entry kind is inferred."""

    def dec(e):
        if isinstance(e, str):
            return Fraction(e)
        if isinstance(e, dict):
            if "num" in e and "den" in e:
                return RatFunc.from_json(e)
            if "order" in e and "coeffs" in e:
                return TruncSeries.from_json(e)
            return LaurentPoly.from_json(e)
        raise ValueError("unrecognized matrix entry %r" % (e,))

    return ExactMatrix([[dec(e) for e in row] for row in obj])


# -- determinant -----------------------------------------------------------

def matrix_determinant(m):
    """Exact determinant; fraction-free Bareiss elimination over the entries."""
    if not m.is_square():
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    zero, one = _zero_one_like(m.sample())
    if n == 1:
        return m.entries[0][0]
    if isinstance(m.sample(), TruncSeries):
        return _det_cofactor(m.entries, zero)
    a = [list(row) for row in m.entries]
    sign = 1
    prev = one
    for k in range(n - 1):
        # pick the simplest nonzero pivot in column k
        pivots = [(i, _complexity(a[i][k])) for i in range(k, n) if not _is_zero(a[i][k])]
        if not pivots:
            return zero
        i = min(pivots, key=lambda t: t[1])[0]
        if i != k:
            a[k], a[i] = a[i], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = pivot * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = _div_exact(num, prev)
            a[i][k] = zero
        prev = pivot
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def _div_exact(a, b):
    if isinstance(a, LaurentPoly):
        return a.divexact(b)
    if isinstance(a, RatFunc):
        return a / b
    return Fraction(a) / Fraction(b)


def _det_cofactor(rows, zero):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = zero
    for j in range(n):
        if _is_zero(rows[0][j]):
            continue
        minor = [[row[k] for k in range(n) if k != j] for row in rows[1:]]
        term = rows[0][j] * _det_cofactor(minor, zero)
        total = total + (term if j % 2 == 0 else -term)
    return total


# -- field elimination -----------------------------------------------------

def _promote_field(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, LaurentPoly):
        return RatFunc.from_laurent(x)
    return Fraction(x)


def matrix_inverse(m):
    """Exact inverse over the entry field (Laurent entries promoted to RatFunc)."""
    if not m.is_square():
        raise ValueError("inverse of a non-square matrix")
    sample = m.sample()
    if isinstance(sample, TruncSeries):
        raise ValueError("series matrices are not inverted here")
    field = m if isinstance(sample, (Fraction, int)) else m.to_ratfunc()
    n = m.rows
    zero, one = _zero_one_like(field.sample())
    a = [list(row) + [one if i == j else zero for j in range(n)]
         for i, row in enumerate(field.entries)]
    for col in range(n):
        pivots = [
            (i, _complexity(a[i][col])) for i in range(col, n) if not _is_zero(a[i][col])
        ]
        if not pivots:
            raise SingularMatrixError(matrix_determinant(m))
        i = min(pivots, key=lambda t: t[1])[0]
        a[col], a[i] = a[i], a[col]
        inv = _field_inv(a[col][col])
        a[col] = [inv * x for x in a[col]]
        for i in range(n):
            if i == col or _is_zero(a[i][col]):
                continue
            f = a[i][col]
            a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return ExactMatrix([row[n:] for row in a])


def _field_inv(x):
    if isinstance(x, RatFunc):
        return x.inverse()
    return Fraction(1) / Fraction(x)


def nullspace(rows, ncols, one=Fraction(1)):
    """Basis of the right nullspace of a system given as sparse rows.

    rows: iterable of dicts {column: field element}; `one` fixes the field of
    the returned dense solution vectors.  Exact throughout.
    """
    work = [dict(r) for r in rows if r]
    pivot_of_col = {}
    for col in range(ncols):
        candidates = [
            (len(r), _complexity(r[col]), idx)
            for idx, r in enumerate(work)
            if col in r and idx not in pivot_of_col.values()
        ]
        if not candidates:
            continue
        _, _, idx = min(candidates)
        prow = work[idx]
        inv = _field_inv(prow[col])
        prow = {c: inv * v for c, v in prow.items()}
        work[idx] = prow
        pivot_of_col[col] = idx
        for jdx, r in enumerate(work):
            if jdx == idx or col not in r:
                continue
            f = r.pop(col)
            for c, v in prow.items():
                if c == col:
                    continue
                nv = r.get(c)
                nv = -f * v if nv is None else nv - f * v
                if _is_zero(nv):
                    r.pop(c, None)
                else:
                    r[c] = nv
    free_cols = [c for c in range(ncols) if c not in pivot_of_col]
    basis = []
    zero, one = _zero_one_like(one)
    for fc in free_cols:
        vec = [zero] * ncols
        vec[fc] = one
        for pc, idx in pivot_of_col.items():
            v = work[idx].get(fc)
            if v is not None:
                vec[pc] = -v
        basis.append(vec)
    return basis


def solve_intertwiner_space(a_mats, b_mats, dim_a=None, dim_b=None):
    """Basis of { M : M A_k = B_k M for all k }, computed exactly.

    M has shape dim_b x dim_a.  With empty constraint lists the dimensions
    must be passed explicitly and the full matrix space is returned.
    """
    if len(a_mats) != len(b_mats):
        raise ValueError("constraint lists have different lengths")
    if a_mats:
        dim_a = a_mats[0].rows
        dim_b = b_mats[0].rows
        for a in a_mats:
            if not a.is_square() or a.rows != dim_a:
                raise ValueError("left constraint matrices must be square of equal size")
        for b in b_mats:
            if not b.is_square() or b.rows != dim_b:
                raise ValueError("right constraint matrices must be square of equal size")
    elif dim_a is None or dim_b is None:
        raise ValueError("dimensions required when no constraints are given")

    field_is_ratfunc = any(
        isinstance(m.sample(), (LaurentPoly, RatFunc)) for m in list(a_mats) + list(b_mats)
    )

    def lift(x):
        return _promote_field(x) if field_is_ratfunc else Fraction(x)

    nvars = dim_a * dim_b
    rows = []
    for a, b in zip(a_mats, b_mats):
        ae = a.entries
        be = b.entries
        for i in range(dim_b):
            for j in range(dim_a):
                row = {}
                for l in range(dim_a):
                    c = ae[l][j]
                    if not _is_zero(c):
                        var = i * dim_a + l
                        prev = row.get(var)
                        term = lift(c)
                        row[var] = term if prev is None else prev + term
                for l in range(dim_b):
                    c = be[i][l]
                    if not _is_zero(c):
                        var = l * dim_a + j
                        prev = row.get(var)
                        term = lift(c)
                        row[var] = -term if prev is None else prev - term
                row = {k: v for k, v in row.items() if not _is_zero(v)}
                if row:
                    rows.append(row)
    one = RatFunc.one() if field_is_ratfunc else Fraction(1)
    basis = nullspace(rows, nvars, one=one)
    mats = []
    for vec in basis:
        mats.append(
            ExactMatrix(
                [[vec[i * dim_a + j] for j in range(dim_a)] for i in range(dim_b)]
            )
        )
    return mats
