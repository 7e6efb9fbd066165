import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from maxrep.errors import InstanceTooLarge, NotKRepeating
from maxrep.oracle import (all_k_repeating, brute_all_maximal, brute_sigma_starts,
                           check_k_repeating, check_maximal_k_rep, check_maximal_k_rep_naive,
                           lcs_length, lss_oracle, verify_mcs_output, witness_is_valid)
from maxrep.seqcore import Seq, kfold_embedding

from conftest import S0, naive_subseq, random_string


def lcs_dp(a, b):
    prev = [0] * (len(b) + 1)
    for ca in a:
        cur = [0]
        for j, cb in enumerate(b, 1):
            cur.append(prev[j - 1] + 1 if ca == cb else max(prev[j], cur[-1]))
        prev = cur
    return prev[-1]


class TestKRepeating:
    def test_fixture_square(self):
        ok, wit = check_k_repeating(S0, "cabcac", 2)
        assert ok and wit == [[3, 4, 5, 6, 7, 8], [9, 10, 11, 12, 13, 14]]
        assert witness_is_valid(S0, "cabcac", 2, wit)

    def test_empty_and_failure(self):
        assert check_k_repeating("xyz", "", 3) == (True, [[], [], []])
        assert check_k_repeating("aaaaa", "aa", 3) == (False, None)

    @given(st.text(alphabet="abc", max_size=16), st.text(alphabet="abc", max_size=5),
           st.integers(1, 4))
    def test_two_implementations_agree(self, s, x, k):
        ok, wit = check_k_repeating(s, x, k)
        chained = kfold_embedding(s, x, k)
        assert ok == (chained is not None) == naive_subseq(x * k, s)
        if ok:
            assert wit == chained

    def test_witness_rejects_overlap(self):
        assert not witness_is_valid("abab", "ab", 2, [[1, 2], [2, 4]])
        assert not witness_is_valid("abab", "ab", 2, [[1, 2]])


class TestMaximality:
    def test_fixture_counterexample(self):
        v = check_maximal_k_rep(S0, "abcac", 2)
        assert v.is_valid and not v.is_maximal
        assert v.counterexample == (0, "c")
        gap, sym = v.counterexample
        assert naive_subseq(("abcac"[:gap] + sym + "abcac"[gap:]) * 2, S0)

    def test_maximal_cases(self):
        assert check_maximal_k_rep("aaaa", "aa", 2).is_maximal
        assert check_maximal_k_rep(S0, "cabcac", 2).is_maximal

    def test_abc_cube(self):
        v = check_maximal_k_rep("abcabcabc", "ab", 3)
        assert not v.is_maximal and v.counterexample == (2, "c")

    def test_precondition(self):
        with pytest.raises(NotKRepeating):
            check_maximal_k_rep("aaaaa", "aa", 3)

    @given(st.text(alphabet="abcd", max_size=20), st.integers(1, 4), st.data())
    def test_vectorised_matches_naive(self, s, k, data):
        cands = sorted(all_k_repeating(s[:12], k), key=lambda x: x.symbols)
        x = data.draw(st.sampled_from(cands))
        assert check_maximal_k_rep(s, x, k) == check_maximal_k_rep_naive(s, x, k)

    def test_single_insertion_reduction(self):
        rng = random.Random(2)
        for _ in range(60):
            s = random_string(rng, rng.randint(0, 10), 3)
            for k in (1, 2, 3):
                krep = all_k_repeating(s, k)
                for x in krep:
                    by_def = not any(y != x and naive_subseq(x.text, y.text) for y in krep)
                    assert check_maximal_k_rep(s, x, k).is_maximal == by_def


class TestBruteSets:
    def test_examples(self):
        assert brute_sigma_starts(S0, "a", 2, 2) == {(1, 7), (1, 10), (4, 10)}
        assert brute_sigma_starts("aa", "a", 1, 2) == {(1, 2)}
        assert brute_sigma_starts("aba", "a", 2, 1) == {(1,)}
        assert brute_all_maximal("abab", 2) == {Seq("ab")}
        assert brute_all_maximal("abc", 2) == {Seq()}

    def test_guards(self):
        with pytest.raises(InstanceTooLarge):
            brute_all_maximal("a" * 15, 2)
        with pytest.raises(InstanceTooLarge):
            brute_all_maximal("a" * 13, 3)
        with pytest.raises(InstanceTooLarge):
            brute_sigma_starts("a" * 400, "a", 1, 4)
        with pytest.raises(InstanceTooLarge):
            lss_oracle("a" * 601)

    def test_self_consistency(self):
        rng = random.Random(9)
        for _ in range(40):
            s = random_string(rng, rng.randint(0, 12), 3)
            for k in (2, 3):
                members = brute_all_maximal(s, k)
                for x in members:
                    assert check_maximal_k_rep(s, x, k).is_maximal
                    assert not any(x != y and naive_subseq(x.text, y.text) for y in members)


class TestMcsVerdict:
    def test_examples(self):
        assert verify_mcs_output(["abcabc", "accabcac"], "aa", "abcac").ok
        v = verify_mcs_output(["ab", "ab"], "", "a")
        assert v.is_common and not v.is_maximal and v.counterexample == (1, "b")
        v = verify_mcs_output(["ab", "ba"], "", "ab")
        assert not v.is_common and not v.ok


class TestLss:
    @given(st.text(alphabet="abc", max_size=14), st.text(alphabet="abc", max_size=14))
    def test_bit_parallel_lcs(self, a, b):
        assert lcs_length(a, b) == lcs_dp(a, b)

    def test_examples(self):
        assert lss_oracle("aaaa") == 4
        assert lss_oracle("abc") == 0
        assert lss_oracle(S0) >= 12

    def test_matches_brute_maximum(self):
        rng = random.Random(31)
        for _ in range(60):
            s = random_string(rng, rng.randint(0, 14), 3)
            value = lss_oracle(s)
            assert value % 2 == 0 and value <= len(s)
            assert value == 2 * max(len(x) for x in brute_all_maximal(s, 2))
