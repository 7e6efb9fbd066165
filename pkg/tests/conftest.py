import random
from itertools import combinations

import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=200)
settings.load_profile("default")

S0 = "abcabcaccabcac"


@pytest.fixture
def s0():
    return S0


def random_string(rng: random.Random, n: int, alphabet: int) -> str:
    return "".join(rng.choice("abcdefgh"[:alphabet]) for _ in range(n))


def all_embeddings(pattern: str, host: str, lo: int = 0, hi: int = None):
    """Every 1-based index list spelling ``pattern`` inside host(lo, hi)."""
    hi = len(host) + 1 if hi is None else hi
    window = range(lo + 1, hi)
    return [list(c) for c in combinations(window, len(pattern))
            if all(host[i - 1] == ch for i, ch in zip(c, pattern))]


def naive_subseq(x, y) -> bool:
    i = 0
    for c in y:
        if i < len(x) and x[i] == c:
            i += 1
    return i == len(x)
