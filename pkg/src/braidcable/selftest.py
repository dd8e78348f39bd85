"""The acceptance grid: every verification the package certifies, run exactly.

Each criterion prints one pass/fail line; run() returns a process exit code.
"""

from __future__ import annotations

import random

from .braids import (
    BraidWord,
    artin_action_is_trivial,
    bigelow_element,
    cable_word,
    is_pure,
    pure_braid_generator,
)
from .decompose import (
    check_series_linearization,
    commutant_dimension,
    determinant_consistency,
    framing_kernel_criterion,
    mod_h_reduction_holds,
    verify_global_decomposition,
    verify_infinitesimal_decomposition,
    word_in_kernel,
)
from .infinitesimal import check_infinitesimal_relations, inf_burau, inf_cable_pullback, inf_sym
from .laurent import LaurentPoly
from .matrix import ExactMatrix, matrix_determinant
from .reps import burau_rep, eval_word, q_power, sym_rep


def random_pure_word(n, max_len, rng):
    """One pure word of reduced length <= max_len (may be empty)."""
    while True:
        length = rng.randrange(0, max_len + 1)
        letters = [rng.choice([1, -1]) * rng.randrange(1, n) for _ in range(length)]
        w = BraidWord(n, letters)
        if is_pure(w) and len(w.reduced()) <= max_len:
            return w


def criterion_1():
    q = LaurentPoly.q()
    for n in range(2, 7):
        rep = burau_rep(n)
        ident = ExactMatrix.identity(n, like=LaurentPoly.one())
        for i in range(1, n):
            m = rep.image(i)
            hecke = (m - ident.scalar_mul(q)) * (m + ident.scalar_mul(q_power(-1)))
            if not all(e.is_zero() for row in hecke.entries for e in row):
                return False
            if matrix_determinant(m) != q_power(n - 2, -1):
                return False
    return True


def criterion_2():
    for n in range(2, 5):
        for rho in (inf_burau(n), inf_sym(n)):
            ok, _ = check_infinitesimal_relations(rho)
            if not ok:
                return False
        for r in range(1, 4):
            ok, _ = check_infinitesimal_relations(
                inf_cable_pullback(inf_burau(n * r), n, r)
            )
            if not ok:
                return False
    return True


def criterion_3():
    for n in range(2, 5):
        for r in range(2, 4):
            if not verify_infinitesimal_decomposition(n, r).verified:
                return False
    return True


def criterion_4():
    for (n, r) in ((2, 2), (3, 2), (4, 2), (2, 3), (3, 3), (2, 4)):
        if not verify_global_decomposition(n, r).verified:
            return False
    return True


def criterion_5():
    for n in range(2, 6):
        for r in range(1, 5):
            if not determinant_consistency(n, r):
                return False
    q8 = q_power(8)
    lhs = matrix_determinant(
        eval_word(burau_rep(4), cable_word(BraidWord(2, (1,)), 2))
    )
    return lhs == q8 and determinant_consistency(2, 2)


def criterion_6(quick=False):
    beta = bigelow_element()
    if artin_action_is_trivial(beta):
        return False
    ok, _ = word_in_kernel(burau_rep(5), beta, exact=True)
    if not ok:
        return False
    ok, _ = word_in_kernel(
        burau_rep(10), cable_word(beta, 2), exact=not quick
    )
    return ok


def criterion_7():
    from .infinitesimal import inf_burau as ib, inf_sym as isym

    for n in (3, 4):
        pairs = ((burau_rep(n), ib(n)), (sym_rep(n), isym(n)))
        for rep, rho in pairs:
            if not mod_h_reduction_holds(rep, rho):
                return False
        rng = random.Random(7700 + n)
        for _ in range(50):
            w = random_pure_word(n, 20, rng)
            for rep, rho in pairs:
                if not check_series_linearization(w, rho, rep):
                    return False
    return True


def criterion_8():
    for n in (3, 4):
        if commutant_dimension(sym_rep(n)) != 1:
            return False
    xi12 = pure_braid_generator(3, 1, 2)
    xi23 = pure_braid_generator(3, 2, 3)
    comm = xi12 * xi23 * xi12.inverse() * xi23.inverse()
    if not eval_word(sym_rep(3), comm).is_identity():
        return False
    for n in range(2, 7):
        for r in range(2, 5):
            if not framing_kernel_criterion(n, r):
                return False
    return True


CRITERIA = (
    ("1 Hecke relation and determinant for Burau, n=2..6", criterion_1),
    ("2 infinitesimal relations (burau, sym, cabled pullback)", criterion_2),
    ("3 infinitesimal decomposition, n<=4, r<=3", criterion_3),
    ("4 global decomposition intertwiners, nr<=9", criterion_4),
    ("5 determinant consistency, n<=5, r<=4", criterion_5),
    ("6 Bigelow element: nontrivial, in both kernels", criterion_6),
    ("7 series bridge: mod-h and mod-h^2 linearization", criterion_7),
    ("8 irreducibility, kernel containment, framing criterion", criterion_8),
)


def run(quick=False):
    failures = 0
    for label, fn in CRITERIA:
        if fn is criterion_6:
            ok = fn(quick=quick)
        else:
            ok = fn()
        print("%s  criterion %s" % ("PASS" if ok else "FAIL", label))
        if not ok:
            failures += 1
    return 0 if failures == 0 else 1
