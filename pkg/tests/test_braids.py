"""Braid word combinatorics: permutations, linking numbers, cabling, the
Artin action oracle, and the Bigelow kernel element."""

import random

import pytest

from braidcable import (
    BraidWord,
    artin_action_is_trivial,
    bigelow_element,
    cable_word,
    exponent_sum,
    linking_numbers,
    pure_braid_generator,
    underlying_permutation,
)
from braidcable.braids import is_pure


def random_word(n, length, rng):
    return BraidWord(
        n, [rng.choice([1, -1]) * rng.randrange(1, n) for _ in range(length)]
    )


def relator_words(n):
    """Both braid relator families as words w with w ~ trivial."""
    out = []
    for i in range(1, n - 1):
        out.append(BraidWord(n, (i, i + 1, i, -(i + 1), -i, -(i + 1))))
    for i in range(1, n - 1):
        for j in range(i + 2, n):
            out.append(BraidWord(n, (i, j, -i, -j)))
    return out


class TestBraidWord:
    def test_letter_range_enforced(self):
        with pytest.raises(ValueError):
            BraidWord(3, (3,))
        with pytest.raises(ValueError):
            BraidWord(2, (0,))

    def test_concatenation_and_inverse(self):
        w = BraidWord(3, (1, -2))
        assert (w * w.inverse()).reduced().letters == ()
        assert (w ** 2).letters == (1, -2, 1, -2)
        assert (w ** -1).letters == (2, -1)

    def test_text_round_trip(self):
        w = BraidWord(4, (2, 1, 3, -2))
        assert BraidWord.from_text(4, w.to_text()) == w


class TestUnderlyingPermutation:
    def test_half_twist(self):
        w = BraidWord(3, (1, 2, 1))
        assert underlying_permutation(w) == (3, 2, 1)

    def test_empty_word(self):
        assert underlying_permutation(BraidWord(4)) == (1, 2, 3, 4)

    def test_bigelow_is_pure(self):
        assert is_pure(bigelow_element())

    def test_multiplicative(self):
        rng = random.Random(3)
        from braidcable.infinitesimal import perm_compose

        for _ in range(20):
            a = random_word(4, rng.randrange(0, 8), rng)
            b = random_word(4, rng.randrange(0, 8), rng)
            assert underlying_permutation(a * b) == perm_compose(
                underlying_permutation(b), underlying_permutation(a)
            )


class TestExponentSum:
    def test_simple(self):
        assert exponent_sum(BraidWord(3, (1, 1, -2))) == 1

    def test_commutator(self):
        a = BraidWord(3, (1, 2))
        b = BraidWord(3, (2, 1, 1))
        assert exponent_sum(a * b * a.inverse() * b.inverse()) == 0

    def test_bigelow(self):
        assert exponent_sum(bigelow_element()) == 0


class TestLinkingNumbers:
    def test_xi13(self):
        assert linking_numbers(pure_braid_generator(3, 1, 3)) == {
            (1, 2): 0,
            (1, 3): 1,
            (2, 3): 0,
        }

    def test_empty(self):
        assert linking_numbers(BraidWord(3)) == {(1, 2): 0, (1, 3): 0, (2, 3): 0}

    def test_xi12_squared(self):
        assert linking_numbers(BraidWord(2, (1, 1, 1, 1))) == {(1, 2): 2}

    def test_non_pure_rejected(self):
        with pytest.raises(ValueError):
            linking_numbers(BraidWord(2, (1,)))

    def test_generator_indicator_grid(self):
        for n in range(2, 6):
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    lk = linking_numbers(pure_braid_generator(n, i, j))
                    for key, value in lk.items():
                        assert value == (1 if key == (i, j) else 0)

    def test_additive_under_concatenation(self):
        rng = random.Random(9)
        found = 0
        while found < 10:
            a = random_word(4, rng.randrange(0, 10), rng)
            b = random_word(4, rng.randrange(0, 10), rng)
            if not (is_pure(a) and is_pure(b)):
                continue
            found += 1
            la, lb, lab = linking_numbers(a), linking_numbers(b), linking_numbers(a * b)
            assert all(lab[k] == la[k] + lb[k] for k in lab)


class TestPureBraidGenerator:
    def test_adjacent_case(self):
        assert pure_braid_generator(2, 1, 2).letters == (1, 1)

    def test_conjugated_cases(self):
        assert pure_braid_generator(3, 1, 3).letters == (2, 1, 1, -2)
        assert pure_braid_generator(4, 2, 4).letters == (3, 2, 2, -3)

    def test_index_violations(self):
        with pytest.raises(ValueError):
            pure_braid_generator(3, 2, 2)
        with pytest.raises(ValueError):
            pure_braid_generator(3, 1, 4)


class TestCabling:
    def test_doubled_generator(self):
        w = cable_word(BraidWord(2, (1,)), 2)
        assert w.strands == 4
        assert w.letters == (2, 1, 3, 2)
        assert underlying_permutation(w) == (3, 4, 1, 2)

    def test_r1_identity(self):
        w = BraidWord(3, (1, -2))
        assert cable_word(w, 1) == w

    def test_empty_word(self):
        w = cable_word(BraidWord(2), 3)
        assert w.strands == 6 and w.letters == ()

    def test_r_below_one_rejected(self):
        with pytest.raises(ValueError):
            cable_word(BraidWord(2, (1,)), 0)

    def test_multiplicative(self):
        rng = random.Random(17)
        for _ in range(10):
            a = random_word(3, rng.randrange(0, 6), rng)
            b = random_word(3, rng.randrange(0, 6), rng)
            assert cable_word(a * b, 3) == cable_word(a, 3) * cable_word(b, 3)

    def test_exponent_sum_scales_by_r_squared(self):
        rng = random.Random(23)
        for r in (2, 3):
            for _ in range(10):
                w = random_word(4, rng.randrange(0, 10), rng)
                assert exponent_sum(cable_word(w, r)) == r * r * exponent_sum(w)

    def test_block_permutation_property(self):
        rng = random.Random(29)
        for n in (2, 3, 4):
            for r in (2, 3):
                for _ in range(5):
                    w = random_word(n, rng.randrange(0, 8), rng)
                    p = underlying_permutation(w)
                    big = underlying_permutation(cable_word(w, r))
                    for i in range(1, n + 1):
                        for s in range(1, r + 1):
                            assert big[r * (i - 1) + s - 1] == r * (p[i - 1] - 1) + s

    def test_cabled_relators_are_trivial(self):
        for n in (2, 3, 4):
            for r in (1, 2, 3):
                for rel in relator_words(n):
                    assert artin_action_is_trivial(cable_word(rel, r))


class TestArtinAction:
    def test_cancelling_pair(self):
        assert artin_action_is_trivial(BraidWord(2, (1, -1)))

    def test_braid_relator(self):
        assert artin_action_is_trivial(BraidWord(3, (1, 2, 1, -2, -1, -2)))

    def test_nontrivial_generator(self):
        assert not artin_action_is_trivial(BraidWord(2, (1,)))

    def test_nontrivial_pure_word(self):
        assert not artin_action_is_trivial(pure_braid_generator(3, 1, 3))

    def test_invariant_under_relator_insertion(self):
        rng = random.Random(31)
        for _ in range(15):
            w = random_word(4, rng.randrange(0, 8), rng)
            rel = rng.choice(relator_words(4))
            cut = rng.randrange(0, len(w.letters) + 1)
            spliced = BraidWord(
                4, w.letters[:cut] + rel.letters + w.letters[cut:]
            )
            assert artin_action_is_trivial(spliced) == artin_action_is_trivial(w)
            inv = w * spliced.inverse()
            assert artin_action_is_trivial(inv)


class TestBigelowElement:
    def test_reduced_and_fixed(self):
        beta = bigelow_element()
        assert beta.strands == 5
        assert beta.reduced() == beta
        assert len(beta.letters) == 118

    def test_nontrivial(self):
        assert not artin_action_is_trivial(bigelow_element())
