"""Global representations of B_n by invertible Laurent-polynomial matrices."""

from __future__ import annotations

from dataclasses import dataclass, field

from .braids import BraidWord
from .laurent import LaurentPoly
from .matrix import ExactMatrix, matrix_inverse


def q_power(k, c=1):
    return LaurentPoly.monomial(k, c)


@dataclass(frozen=True)
class GeneratorRep:
    """A representation of B_n given by one matrix per Artin generator."""

    strands: int
    dim: int
    images: tuple  # images[i-1] is the image of sigma_i, Laurent entries
    label: str = ""
    _inverses: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if len(self.images) != self.strands - 1:
            raise ValueError("need one matrix per Artin generator")
        for m in self.images:
            if m.rows != self.dim or m.cols != self.dim:
                raise ValueError("generator image of wrong shape")

    def image(self, i):
        return self.images[i - 1]

    def image_inverse(self, i):
        cached = self._inverses.get(i)
        if cached is None:
            cached = matrix_inverse(self.images[i - 1]).to_laurent()
            self._inverses[i] = cached
        return cached


def burau_rep(n):
    """Burau representation: sigma_k -> q I ++ [[q - q^-1, q], [q^-1, 0]] ++ q I."""
    if n < 2:
        raise ValueError("need n >= 2")
    q = LaurentPoly.q()
    qi = q_power(-1)
    zero = LaurentPoly.zero()
    images = []
    for k in range(1, n):
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                if i == k - 1 and j == k - 1:
                    row.append(q - qi)
                elif i == k - 1 and j == k:
                    row.append(q)
                elif i == k and j == k - 1:
                    row.append(qi)
                elif i == k and j == k:
                    row.append(zero)
                elif i == j:
                    row.append(q)
                else:
                    row.append(zero)
            rows.append(row)
        images.append(ExactMatrix(rows))
    return GeneratorRep(n, n, tuple(images), label="burau(%d)" % n)


def sym_rep(n):
    """Extended permutation representation: sigma_k -> I ++ [[0, q], [q, 0]] ++ I."""
    if n < 2:
        raise ValueError("need n >= 2")
    q = LaurentPoly.q()
    one = LaurentPoly.one()
    zero = LaurentPoly.zero()
    images = []
    for k in range(1, n):
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                if {i, j} == {k - 1, k} and i != j:
                    row.append(q)
                elif i == j and i not in (k - 1, k):
                    row.append(one)
                else:
                    row.append(zero)
            rows.append(row)
        images.append(ExactMatrix(rows))
    return GeneratorRep(n, n, tuple(images), label="sym(%d)" % n)


def frame(rep, a):
    """Multiply every generator image by the unit a (a monomial in q)."""
    if not isinstance(a, LaurentPoly) or not a.is_monomial():
        raise ValueError("framing scalar must be a nonzero monomial in q")
    images = tuple(m.scalar_mul(a) for m in rep.images)
    return GeneratorRep(
        rep.strands, rep.dim, images, label="%s * %s" % (a, rep.label)
    )


def twist(rep, r):
    """Twist by the field morphism q -> q^r, applied entrywise."""
    if r == 0:
        raise ValueError("q -> q^0 is not a field morphism")
    if r == 1:
        return rep
    images = tuple(
        m.map_entries(lambda c: c.substitute_power(r)) for m in rep.images
    )
    return GeneratorRep(
        rep.strands, rep.dim, images, label="%s^(q^%d)" % (rep.label, r)
    )


def direct_sum(reps):
    """Blockwise direct sum of representations with equal strand counts."""
    if not reps:
        raise ValueError("empty direct sum")
    n = reps[0].strands
    for r in reps:
        if r.strands != n:
            raise ValueError("mismatched strand counts in direct sum")
    if len(reps) == 1:
        return reps[0]
    images = []
    for i in range(1, n):
        m = reps[0].image(i)
        for r in reps[1:]:
            m = m.direct_sum(r.image(i))
        images.append(m)
    return GeneratorRep(
        n,
        sum(r.dim for r in reps),
        tuple(images),
        label=" + ".join(r.label for r in reps),
    )


def eval_word(rep, w):
    """Image of a braid word: the ordered product of generator images."""
    if not isinstance(w, BraidWord):
        raise TypeError("expected a BraidWord")
    if w.strands != rep.strands:
        raise ValueError(
            "word on %d strands fed to a %d-strand representation"
            % (w.strands, rep.strands)
        )
    result = ExactMatrix.identity(rep.dim, like=LaurentPoly.one())
    for k in w.reduced().letters:
        m = rep.image(k) if k > 0 else rep.image_inverse(-k)
        result = result * m
    return result
