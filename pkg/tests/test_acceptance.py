"""Acceptance suite: one pass/fail line per criterion, printed past pytest's capture."""
import random
import time
from itertools import combinations, product
from math import comb

import numpy as np
import pytest

from maxrep.cli import main
from maxrep.krepeat import enum_sigma_starts, is_sigma_split_point, maximal_k_repeating
from maxrep.mcs import McsInstance, maximal_common_subsequence, mkcs_constrained
from maxrep.oracle import (brute_all_maximal, brute_sigma_starts, check_k_repeating,
                           check_maximal_k_rep, lss_oracle, verify_mcs_output, witness_is_valid)
from maxrep.seqcore import Seq, occ_positions
from maxrep.square import choose_sigma, leftmost_anchor, maximal_square_subsequence, square_pipeline

from conftest import S0, naive_subseq, random_string


@pytest.fixture
def report(capsys):
    def emit(tag, failures, elapsed, budget, detail=""):
        ok = not failures and (budget is None or elapsed < budget)
        limit = "none" if budget is None else f"{budget}s"
        line = f"[{'PASS' if ok else 'FAIL'}] {tag}: {detail} failures={len(failures)} " \
               f"time={elapsed:.2f}s budget={limit}"
        with capsys.disabled():
            print("\n" + line)
        assert not failures, failures[:5]
        assert budget is None or elapsed < budget
    return emit


def test_ac01_fixture_string(report, capsys):
    t0 = time.perf_counter()
    fails = []
    if choose_sigma(S0) != "a":
        fails.append("sigma")
    st = square_pipeline(S0, "a")
    if st.sigma_positions != [1, 4, 7, 10, 13] or st.e != 2:
        fails.append(("positions", st.sigma_positions, st.e))
    if (leftmost_anchor(S0, "abcac", 1), leftmost_anchor(S0, "abcac", 4)) != (6, 8):
        fails.append("anchors")
    res = maximal_square_subsequence(S0)
    if not naive_subseq("aaaa", (res.unit * 2).text):
        fails.append("a^4")
    if not check_maximal_k_rep(S0, res.unit, 2).is_maximal:
        fails.append("maximal")
    code_bad = main(["verify", "krep", "-k", "2", "--candidate", "abcacabcac", "--text", S0])
    code_good = main(["verify", "krep", "-k", "2", "--candidate", "cabcaccabcac", "--text", S0])
    capsys.readouterr()
    verdict = check_maximal_k_rep(S0, "abcac", 2)
    if code_bad != 1 or verdict.is_maximal or verdict.counterexample is None:
        fails.append("abcac accepted")
    gap, sym = verdict.counterexample
    if not naive_subseq(("abcac"[:gap] + sym + "abcac"[gap:]) * 2, S0):
        fails.append("counterexample")
    if code_good != 0:
        fails.append("cabcac rejected")
    report("AC1 fixture string", fails, time.perf_counter() - t0, 1.0,
           f"sigma=a output={(res.unit * 2).text}")


def test_ac02_sigma_start_exactness(report):
    rng = random.Random(202)
    t0 = time.perf_counter()
    fails, checked = [], 0
    while checked < 200:
        s = random_string(rng, rng.randint(1, 30), rng.randint(1, 3))
        k = rng.randint(1, 4)
        sigma = rng.choice(s)
        pos = occ_positions(s, sigma)
        for r in range(1, len(pos) // k + 1):
            out = list(enum_sigma_starts(r, k, pos))
            R = len(pos) - k * r
            if set(out) != brute_sigma_starts(s, sigma, r, k) or len(out) != comb(R + k, k):
                fails.append((s, sigma, r, k))
        checked += 1
    report("AC2 sigma-start exactness", fails, time.perf_counter() - t0, 10.0,
           f"instances={checked}")


def test_ac03_square_soundness(report):
    rng = random.Random(303)
    t0 = time.perf_counter()
    fails = []
    for _ in range(500):
        s = random_string(rng, rng.randint(0, 60), rng.randint(1, 4))
        res = maximal_square_subsequence(s)
        if not (witness_is_valid(s, res.unit, 2, res.witness)
                and check_maximal_k_rep(s, res.unit, 2).is_maximal):
            fails.append(s)
    report("AC3 square soundness", fails, time.perf_counter() - t0, 60.0, "runs=500")


def test_ac04_krep_soundness(report):
    rng = random.Random(404)
    t0 = time.perf_counter()
    fails = []
    for k in (2, 3, 4):
        for _ in range(300):
            s = random_string(rng, rng.randint(0, 48), rng.randint(1, 4))
            res = maximal_k_repeating(s, k)
            ok = witness_is_valid(s, res.unit, k, res.witness) and \
                check_maximal_k_rep(s, res.unit, k).is_maximal
            if res.sigma is not None:
                seed = res.sigma * (s.count(res.sigma) // k)
                ok = ok and naive_subseq(seed, res.unit.text)
            if not ok:
                fails.append((s, k))
    report("AC4 k-rep soundness", fails, time.perf_counter() - t0, 120.0, "runs=900")


def test_ac05_exhaustive_membership(report):
    rng = random.Random(505)
    strings = ["".join(p) for n in range(13) for p in product("ab", repeat=n)]
    strings += [random_string(rng, rng.randint(0, 12), 3) for _ in range(200)]
    t0 = time.perf_counter()
    fails = []
    for s in strings:
        if maximal_square_subsequence(s).unit not in brute_all_maximal(s, 2):
            fails.append((s, 2))
        if maximal_k_repeating(s, 3).unit not in brute_all_maximal(s, 3):
            fails.append((s, 3))
    report("AC5 exhaustive membership", fails, time.perf_counter() - t0, None,
           f"strings={len(strings)}")


def test_ac06_half_containment(report):
    rng = random.Random(606)
    t0 = time.perf_counter()
    fails = []
    for _ in range(1000):
        alpha = rng.randint(1, 3)
        y = random_string(rng, rng.randint(0, 10), alpha)
        z = random_string(rng, rng.randint(0, 10), alpha)
        if naive_subseq(y, z) != naive_subseq(y + y, z + z):
            fails.append((y, z))
    report("AC6 Y<=Z iff YY<=ZZ", fails, time.perf_counter() - t0, None, "pairs=1000")


def test_ac07_mcs_contract(report):
    rng = random.Random(707)
    t0 = time.perf_counter()
    fails = []
    for _ in range(1000):
        alpha = rng.randint(1, 4)
        hosts = [random_string(rng, rng.randint(0, 40), alpha) for _ in range(rng.randint(1, 4))]
        base = maximal_common_subsequence(hosts).text
        constraint = "".join(c for c in base if rng.random() < 0.4)
        out = mkcs_constrained(McsInstance(tuple(hosts), constraint))
        if not verify_mcs_output(hosts, constraint, out).ok or \
                maximal_common_subsequence(hosts, out) != out:
            fails.append((hosts, constraint))
    report("AC7 MCS contract", fails, time.perf_counter() - t0, None, "instances=1000")


def _split_exists(s, a, sigma, b, k):
    return any(is_sigma_split_point(s, a, b, sigma, p)
               for p in combinations(occ_positions(s, sigma), k))


def test_ac08_split_point_properties(report):
    rng = random.Random(808)
    t0 = time.perf_counter()
    fails = []
    for _ in range(60):
        s = random_string(rng, rng.randint(1, 12), rng.randint(2, 3))
        for k in (1, 2, 3):
            subs = {"".join(s[i] for i in idx)
                    for m in range(len(s) // k + 1) for idx in combinations(range(len(s)), m)}
            for w in subs:
                direct = naive_subseq(w * k, s)
                for j, sigma in enumerate(w):
                    if _split_exists(s, w[:j], sigma, w[j + 1:], k) != direct:
                        fails.append(("iff", s, w, j, k))
                    a2, b2 = w[:j], w[j + 1:]
                    # one deletion at a time; shorter pairs are covered by other (w, j)
                    smaller = [(a2[:i] + a2[i + 1:], b2) for i in range(len(a2))]
                    smaller += [(a2, b2[:i] + b2[i + 1:]) for i in range(len(b2))]
                    for p in combinations(occ_positions(s, sigma), k):
                        if not is_sigma_split_point(s, a2, b2, sigma, p):
                            continue
                        for a1, b1 in smaller:
                            if not is_sigma_split_point(s, a1, b1, sigma, p):
                                fails.append(("monotone", s, a2, b2, a1, b1, p))
    report("AC8 split-point properties", fails, time.perf_counter() - t0, None, "strings=60")


def test_ac09_performance(report):
    letters = np.array(list("abcd"))
    s_big = Seq("".join(np.random.default_rng(909).choice(letters, 10_000)))
    t0 = time.perf_counter()
    res = maximal_square_subsequence(s_big)
    ok = witness_is_valid(s_big, res.unit, 2, res.witness) and \
        check_maximal_k_rep(s_big, res.unit, 2).is_maximal
    t_mss = time.perf_counter() - t0
    fails = [] if ok else ["mss n=10000"]
    if t_mss >= 30:
        fails.append(f"mss took {t_mss:.1f}s")

    s_mid = Seq("".join(np.random.default_rng(910).choice(letters, 2_000)))
    t1 = time.perf_counter()
    res3 = maximal_k_repeating(s_mid, 3)
    t_krep = time.perf_counter() - t1
    if t_krep >= 60 or not check_k_repeating(s_mid, res3.unit, 3)[0]:
        fails.append(f"krep n=2000 took {t_krep:.1f}s")

    rng = random.Random(911)
    for k in (1, 2, 3, 4):
        for _ in range(50):
            s = random_string(rng, rng.randint(k, 60), rng.randint(1, 4))
            r = maximal_k_repeating(s, k)
            if r.sigma is None or k == 1:
                continue
            st = r.stats
            if st["R"] > k - 1 or st["starts_enumerated"] > comb(2 * k - 1, k):
                fails.append(("starts", s, k, st["R"], st["starts_enumerated"]))
    report("AC9 performance budget", fails, time.perf_counter() - t0, 90.0,
           f"mss10k={t_mss:.2f}s krep2k={t_krep:.2f}s")


def test_ac10_lss_bound(report):
    rng = random.Random(1010)
    t0 = time.perf_counter()
    fails = []
    for _ in range(100):
        s = random_string(rng, rng.randint(0, 200), rng.randint(1, 4))
        if 2 * len(maximal_square_subsequence(s).unit) > lss_oracle(s):
            fails.append(s)
    if lss_oracle(S0) < 12:
        fails.append("lss(S0)")
    report("AC10 lss upper bound", fails, time.perf_counter() - t0, None,
           f"lss(S0)={lss_oracle(S0)}")
