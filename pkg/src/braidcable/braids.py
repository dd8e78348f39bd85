"""Braid words on n strands and their combinatorics.

A word is a sequence of signed Artin generator indices: letter k with
1 <= |k| <= n-1 stands for sigma_|k|^(sign k).  Letters are read left to
right as a product applied bottom to top.
"""

from __future__ import annotations

from dataclasses import dataclass


def free_reduce(letters):
    """Cancel adjacent (k, -k) pairs until none remain."""
    stack = []
    for k in letters:
        if stack and stack[-1] == -k:
            stack.pop()
        else:
            stack.append(k)
    return tuple(stack)


@dataclass(frozen=True)
class BraidWord:
    """A braid on `strands` strands given by a sequence of signed letters."""

    strands: int
    letters: tuple

    def __init__(self, strands, letters=()):
        if strands < 1:
            raise ValueError("strand count must be >= 1")
        letters = tuple(int(k) for k in letters)
        for k in letters:
            if k == 0 or abs(k) >= strands:
                raise ValueError(
                    "letter %d out of range for %d strands" % (k, strands)
                )
        object.__setattr__(self, "strands", strands)
        object.__setattr__(self, "letters", letters)

    def __mul__(self, other):
        if not isinstance(other, BraidWord):
            return NotImplemented
        if self.strands != other.strands:
            raise ValueError("cannot concatenate words on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def __pow__(self, k):
        if k >= 0:
            return BraidWord(self.strands, self.letters * k)
        return self.inverse() ** (-k)

    def inverse(self):
        return BraidWord(self.strands, tuple(-k for k in reversed(self.letters)))

    def reduced(self):
        return BraidWord(self.strands, free_reduce(self.letters))

    def __len__(self):
        return len(self.letters)

    def to_text(self):
        return " ".join(str(k) for k in self.letters)

    @classmethod
    def from_text(cls, strands, text):
        parts = text.split()
        return cls(strands, tuple(int(p) for p in parts))

    def __str__(self):
        return "BraidWord(n=%d, %s)" % (self.strands, self.to_text() or "<empty>")


# -- permutations ----------------------------------------------------------

def underlying_permutation(w):
    """Tuple p with p[a-1] = final position of the strand starting at a."""
    n = w.strands
    pos = list(range(1, n + 1))  # pos[a-1] = current position of strand a
    for k in w.letters:
        i = abs(k)
        for a in range(n):
            if pos[a] == i:
                pos[a] = i + 1
            elif pos[a] == i + 1:
                pos[a] = i
    return tuple(pos)


def is_pure(w):
    return underlying_permutation(w) == tuple(range(1, w.strands + 1))


def exponent_sum(w):
    return sum(1 if k > 0 else -1 for k in w.letters)


def linking_numbers(w):
    """Linking numbers {(a, b): lk} of a pure braid, a < b."""
    if not is_pure(w):
        raise ValueError("linking numbers are defined for pure braids only")
    n = w.strands
    at = list(range(1, n + 1))  # at[p-1] = strand currently in position p
    counts = {}
    for k in w.letters:
        i = abs(k)
        sign = 1 if k > 0 else -1
        u, v = at[i - 1], at[i]
        key = (u, v) if u < v else (v, u)
        counts[key] = counts.get(key, 0) + sign
        at[i - 1], at[i] = v, u
    out = {}
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            c = counts.get((a, b), 0)
            if c % 2:
                raise AssertionError("odd crossing count for a pure braid")
            out[(a, b)] = c // 2
    return out


def pure_braid_generator(n, i, j):
    """Standard generator xi_ij = (s_{j-1}..s_{i+1}) s_i^2 (s_{i+1}^-1..s_{j-1}^-1)."""
    if not (1 <= i < j <= n):
        raise ValueError("need 1 <= i < j <= n")
    conj = list(range(j - 1, i, -1))
    letters = conj + [i, i] + [-k for k in reversed(conj)]
    return BraidWord(n, letters)


# -- cabling ---------------------------------------------------------------

def _block_crossing(i, r):
    """Positive crossing of block i over block i+1 in B_{nr}: r^2 letters."""
    word = []
    for k in range(1, r + 1):
        word.extend(range(r * i + k - 1, r * (i - 1) + k - 1, -1))
    return word


def cable_word(w, r):
    """Image of w under the parallel-cabling morphism into B_{nr}."""
    if r < 1:
        raise ValueError("cabling index must be >= 1")
    if r == 1:
        return w
    out = []
    for k in w.letters:
        block = _block_crossing(abs(k), r)
        if k > 0:
            out.extend(block)
        else:
            out.extend(-m for m in reversed(block))
    return BraidWord(w.strands * r, out)


# -- Artin action on the free group ---------------------------------------

def _apply_letter(word, k):
    """Apply the automorphism of sigma_|k|^(sign k) to a reduced free word."""
    i = abs(k)
    out = []

    def push(t):
        if out and out[-1] == -t:
            out.pop()
        else:
            out.append(t)

    for x in word:
        j = abs(x)
        if k > 0:
            if j == i:
                rep = (i, i + 1, -i)
            elif j == i + 1:
                rep = (i,)
            else:
                rep = (j,)
        else:
            if j == i:
                rep = (i + 1,)
            elif j == i + 1:
                rep = (-(i + 1), i, i + 1)
            else:
                rep = (j,)
        if x < 0:
            rep = tuple(-t for t in reversed(rep))
        for t in rep:
            push(t)
    return tuple(out)


_SANOV_A = (1, 2, 0, 1)
_SANOV_B = (1, 0, 2, 1)
_SCREEN_PRIMES = ((1 << 61) - 1, (1 << 31) - 1)


def _m2_mul(x, y, p):
    a, b, c, d = x
    e, f, g, h = y
    return ((a * e + b * g) % p, (a * f + b * h) % p,
            (c * e + d * g) % p, (c * f + d * h) % p)


def _m2_inv_sl2(x, p):
    a, b, c, d = x
    return (d % p, -b % p, -c % p, a % p)


def _free_generators_mod(n, p):
    """x_i -> B^i A B^-i: free generators of a subgroup of SL_2(Z), mod p."""
    mats = []
    bpow = (1, 0, 0, 1)
    for _ in range(n):
        bpow = _m2_mul(bpow, _SANOV_B, p)
        m = _m2_mul(_m2_mul(bpow, _SANOV_A, p), _m2_inv_sl2(bpow, p), p)
        mats.append(m)
    return mats


def _action_differs_mod(letters, n, p):
    """Conclusive non-triviality certificate: the induced action on exact
    matrix realizations of the free generators, compared modulo p.  A mismatch
    mod p proves the exact images differ; agreement proves nothing."""
    start = _free_generators_mod(n, p)
    h = list(start)
    for k in letters:
        i = abs(k) - 1
        if k > 0:
            h[i], h[i + 1] = (
                _m2_mul(_m2_mul(h[i], h[i + 1], p), _m2_inv_sl2(h[i], p), p),
                h[i],
            )
        else:
            h[i], h[i + 1] = (
                h[i + 1],
                _m2_mul(_m2_mul(_m2_inv_sl2(h[i + 1], p), h[i], p), h[i + 1], p),
            )
    return h != start


def _push_through(word, letters):
    for k in letters:
        word = _apply_letter(word, k)
    return word


def artin_action_is_trivial(w):
    """True iff w represents the trivial braid (Artin's faithful action on F_n).

    A modular evaluation of the action runs first; any mismatch there is an
    exact proof of non-triviality.  Otherwise the automorphism is compared
    with the identity by free-word substitution, split at the midpoint so
    each half is only pushed through half the letters.
    """
    letters = free_reduce(w.letters)
    if not letters:
        return True
    for p in _SCREEN_PRIMES:
        if _action_differs_mod(letters, w.strands, p):
            return False
    # exact check: w = u z is trivial iff z and u^-1 induce the same action
    half = (len(letters) + 1) // 2
    u, z = letters[:half], letters[half:]
    u_inv = tuple(-k for k in reversed(u))
    for g in range(1, w.strands + 1):
        if _push_through((g,), z) != _push_through((g,), u_inv):
            return False
    return True


# -- Bigelow's kernel element ---------------------------------------------

def _bigelow_pieces():
    psi1 = BraidWord(5, (-3, 2, 1, 1, 2, 4, 4, 4, 3, 2))
    psi2 = BraidWord(5, (-4, 3, 2, -1, -1, 2, 1, 1, 2, 2, 1, 4, 4, 4, 4, 4))
    delta5 = BraidWord(5, (4, 3, 2, 1, 1, 2, 3, 4))
    sigma4 = BraidWord(5, (4,))
    g = psi2 * psi1.inverse() * sigma4 * psi1 * psi2.inverse()
    return g, delta5


def bigelow_element():
    """Bigelow's nontrivial element of Ker(Burau) in B_5, freely reduced."""
    g, delta5 = _bigelow_pieces()
    beta = g * delta5 * g.inverse() * delta5.inverse()
    return beta.reduced()
