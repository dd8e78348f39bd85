"""Infinitesimal representations: matrices for the symmetric group generators
together with one rational matrix per chord t_ij, subject to the infinitesimal
braid relations and equivariance."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .matrix import ExactMatrix


def permutation_matrix(perm):
    """Matrix P with P e_i = e_{perm(i)} (columns indexed by source)."""
    n = len(perm)
    return ExactMatrix(
        [
            [Fraction(1) if perm[j] == i + 1 else Fraction(0) for j in range(n)]
            for i in range(n)
        ]
    )


def perm_compose(a, b):
    """(a o b)(i) = a(b(i)), permutations as 1-indexed tuples."""
    return tuple(a[b[i] - 1] for i in range(len(a)))


def perm_inverse(a):
    out = [0] * len(a)
    for i, v in enumerate(a):
        out[v - 1] = i + 1
    return tuple(out)


def adjacent_transposition(n, i):
    p = list(range(1, n + 1))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def perm_to_adjacent_word(perm):
    """Indices (i1, ..., im) with perm = s_{i1} o ... o s_{im} as functions."""
    a = list(perm)
    word = []
    # sort the one-line form by adjacent position swaps; each swap at position
    # j realizes right-composition with s_j, so the product unwinds in reverse
    moved = True
    while moved:
        moved = False
        for j in range(len(a) - 1):
            if a[j] > a[j + 1]:
                a[j], a[j + 1] = a[j + 1], a[j]
                word.append(j + 1)
                moved = True
    return tuple(reversed(word))


@dataclass(frozen=True)
class InfRep:
    """Representation data for chords and symmetric group generators."""

    strands: int
    dim: int
    perm_images: tuple  # perm_images[i-1] is the image of s_i
    chord_images: tuple  # ((i, j), matrix) pairs, i < j
    label: str = ""
    _chords: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if len(self.perm_images) != self.strands - 1:
            raise ValueError("need one matrix per adjacent transposition")
        lookup = dict(self.chord_images)
        expected = {
            (i, j)
            for i in range(1, self.strands + 1)
            for j in range(i + 1, self.strands + 1)
        }
        if set(lookup) != expected:
            raise ValueError("chord images must cover exactly the pairs i < j")
        object.__setattr__(self, "_chords", lookup)

    def chord(self, i, j):
        """Image of t_ij = t_ji."""
        if i == j:
            raise ValueError("chords join distinct strands")
        key = (i, j) if i < j else (j, i)
        return self._chords[key]

    def perm_gen(self, i):
        """Image of the adjacent transposition s_i."""
        return self.perm_images[i - 1]

    def perm(self, p):
        """Image of an arbitrary permutation, via adjacent factorization."""
        m = ExactMatrix.identity(self.dim)
        for i in perm_to_adjacent_word(p):
            m = m * self.perm_images[i - 1]
        return m

    def pairs(self):
        n = self.strands
        return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def inf_burau(n):
    """Chord t_ij acts by exchanging coordinates i and j; s_i permutes them."""
    if n < 2:
        raise ValueError("need n >= 2")
    perm_images = tuple(
        permutation_matrix(adjacent_transposition(n, i)) for i in range(1, n)
    )
    chords = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            p = list(range(1, n + 1))
            p[i - 1], p[j - 1] = p[j - 1], p[i - 1]
            chords.append(((i, j), permutation_matrix(tuple(p))))
    return InfRep(n, n, perm_images, tuple(chords), label="inf_burau(%d)" % n)


def inf_sym(n):
    """Chord t_ij acts as the diagonal idempotent on coordinates i and j."""
    if n < 2:
        raise ValueError("need n >= 2")
    perm_images = tuple(
        permutation_matrix(adjacent_transposition(n, i)) for i in range(1, n)
    )
    chords = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            m = ExactMatrix(
                [
                    [
                        Fraction(1) if (a == b and a + 1 in (i, j)) else Fraction(0)
                        for b in range(n)
                    ]
                    for a in range(n)
                ]
            )
            chords.append(((i, j), m))
    return InfRep(n, n, perm_images, tuple(chords), label="inf_sym(%d)" % n)


def inf_shift(rho, v):
    """Add v * Id to every chord image; permutation images unchanged."""
    v = Fraction(v)
    ident = ExactMatrix.identity(rho.dim)
    chords = tuple(
        ((i, j), rho.chord(i, j) + ident.scalar_mul(v)) for (i, j) in rho.pairs()
    )
    return InfRep(
        rho.strands, rho.dim, rho.perm_images, chords,
        label="(%s + %s)" % (v, rho.label),
    )


def inf_scale(rho, b):
    """Scale every chord image by b != 0; permutation images unchanged."""
    b = Fraction(b)
    if b == 0:
        raise ValueError("scaling by zero degenerates the representation")
    chords = tuple(((i, j), rho.chord(i, j).scalar_mul(b)) for (i, j) in rho.pairs())
    return InfRep(
        rho.strands, rho.dim, rho.perm_images, chords,
        label="(%s * %s)" % (b, rho.label),
    )


def inf_direct_sum(reps):
    """Blockwise direct sum of infinitesimal representations."""
    if not reps:
        raise ValueError("empty direct sum")
    n = reps[0].strands
    for r in reps:
        if r.strands != n:
            raise ValueError("mismatched strand counts in direct sum")
    if len(reps) == 1:
        return reps[0]
    perm_images = []
    for i in range(1, n):
        m = reps[0].perm_gen(i)
        for r in reps[1:]:
            m = m.direct_sum(r.perm_gen(i))
        perm_images.append(m)
    chords = []
    for (i, j) in reps[0].pairs():
        m = reps[0].chord(i, j)
        for r in reps[1:]:
            m = m.direct_sum(r.chord(i, j))
        chords.append(((i, j), m))
    return InfRep(
        n,
        sum(r.dim for r in reps),
        tuple(perm_images),
        tuple(chords),
        label=" + ".join(r.label for r in reps),
    )


def _block_permutation(n, r, p):
    """Permutation of {1..nr} moving block j to block p(j), order-preserving."""
    out = [0] * (n * r)
    for j in range(1, n + 1):
        for s in range(1, r + 1):
            out[r * (j - 1) + s - 1] = r * (p[j - 1] - 1) + s
    return tuple(out)


def inf_cable_pullback(rho, n, r):
    """Pull back rho on n*r strands along the chord-doubling morphism.

    Each chord t_ij expands to the sum of all chords joining block i to block
    j; each permutation acts through the corresponding block permutation.
    """
    if rho.strands != n * r:
        raise ValueError(
            "representation on %d strands cannot be pulled back as a %d-strand "
            "cabling of %d" % (rho.strands, r, n)
        )
    def block(i):
        return range(r * (i - 1) + 1, r * i + 1)

    perm_images = tuple(
        rho.perm(_block_permutation(n, r, adjacent_transposition(n, i)))
        for i in range(1, n)
    )
    chords = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            total = ExactMatrix.zeros(rho.dim, rho.dim)
            for a in block(i):
                for b in block(j):
                    total = total + rho.chord(a, b)
            chords.append(((i, j), total))
    return InfRep(
        n, rho.dim, perm_images, tuple(chords),
        label="cable_pullback(%s, n=%d, r=%d)" % (rho.label, n, r),
    )


def check_infinitesimal_relations(rho):
    """Verify the chord relations, equivariance, and s_i^2 = 1 exactly.

    Returns (True, None) or (False, witness string).
    """
    n = rho.strands
    ident = ExactMatrix.identity(rho.dim)
    for i in range(1, n):
        s = rho.perm_gen(i)
        if s * s != ident:
            return False, "s_%d^2 != 1" % i
    for i in range(1, n - 1):
        a, b = rho.perm_gen(i), rho.perm_gen(i + 1)
        if a * b * a != b * a * b:
            return False, "braid relation fails for s_%d, s_%d" % (i, i + 1)
    for i in range(1, n):
        for j in range(i + 2, n):
            if rho.perm_gen(i) * rho.perm_gen(j) != rho.perm_gen(j) * rho.perm_gen(i):
                return False, "distant s_%d, s_%d do not commute" % (i, j)
    # equivariance: s_k t_ij s_k^-1 = t_{s_k(i) s_k(j)}
    for k in range(1, n):
        sk = rho.perm_gen(k)
        tr = adjacent_transposition(n, k)
        for (i, j) in rho.pairs():
            lhs = sk * rho.chord(i, j) * sk
            if lhs != rho.chord(tr[i - 1], tr[j - 1]):
                return False, "equivariance fails for s_%d on t_{%d,%d}" % (k, i, j)
    # [t_ij, t_kl] = 0 for 4 distinct indices
    pairs = rho.pairs()
    for (i, j) in pairs:
        for (k, l) in pairs:
            if len({i, j, k, l}) == 4:
                a, b = rho.chord(i, j), rho.chord(k, l)
                if a * b != b * a:
                    return False, "[t_{%d,%d}, t_{%d,%d}] != 0" % (i, j, k, l)
    # [t_jk, t_ij + t_ik] = 0 for 3 distinct indices
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                if len({i, j, k}) != 3:
                    continue
                a = rho.chord(j, k)
                b = rho.chord(i, j) + rho.chord(i, k)
                if a * b != b * a:
                    return False, "[t_{%d,%d}, t_{%d,%d}+t_{%d,%d}] != 0" % (
                        j, k, i, j, i, k,
                    )
    return True, None
