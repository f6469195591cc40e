"""Core kernel tests: oracles first, then frozen examples and properties.

The independent oracle for hA is plain Python set arithmetic over
itertools.combinations_with_replacement; it shares no code with the
bit-vector kernel.
"""

import random
from itertools import combinations_with_replacement

import pytest

from hsumsets import (
    RunSet,
    canonical,
    cardinality,
    hfold,
    hfold_sequential,
    intset,
    minkowski_add,
    normalize,
    reflect,
)


def brute_pairwise(a, b):
    return sorted({x + y for x in a for y in b})


def brute_hfold(a, h):
    return sorted({sum(c) for c in combinations_with_replacement(a, h)})


def runs(*pairs):
    return RunSet(tuple(pairs))


def random_set(rng, max_k=8, span=25):
    k = rng.randint(1, max_k)
    lo = rng.randint(-span, span)
    return intset(rng.sample(range(lo, lo + span + 1), k))


# ---------------------------------------------------------------- RunSet


def test_runset_from_elements_merges_and_sorts():
    s = RunSet.from_elements([14, 0, 1, 2, 5, 6, 7, 8, 10, 11, 12, 13])
    assert s.runs == ((0, 2), (5, 8), (10, 14))
    assert str(s) == "0..2, 5..8, 10..14"


def test_runset_rejects_non_maximal_runs():
    with pytest.raises(ValueError):
        RunSet(((0, 2), (3, 5)))
    with pytest.raises(ValueError):
        RunSet(((4, 2),))


def test_runset_mask_round_trip():
    rng = random.Random(7)
    for _ in range(200):
        elems = sorted(rng.sample(range(-30, 60), rng.randint(1, 20)))
        s = RunSet.from_elements(elems)
        off, mask = s.to_mask()
        assert RunSet.from_mask(mask, off) == s
        assert list(s.elements()) == elems


def test_cardinality_examples():
    assert cardinality(runs((0, 2), (5, 8), (10, 14))) == 12
    assert cardinality(runs((0, 0), (3, 10))) == 9
    assert cardinality(RunSet()) == 0


def test_runset_str_singleton():
    assert str(runs((0, 0), (3, 10))) == "0, 3..10"


# ------------------------------------------------------------- normalize


def test_normalize_examples():
    assert normalize((6, 10, 14)) == (6, 4, (0, 1, 2))
    assert normalize((0, 2, 4, 6)) == (0, 2, (0, 1, 2, 3))
    assert normalize((0, 1, 5, 6, 7)) == (0, 1, (0, 1, 5, 6, 7))


def test_normalize_reconstructs_original():
    rng = random.Random(11)
    for _ in range(300):
        a = random_set(rng)
        if len(a) < 2:
            continue
        off, d, norm = normalize(a)
        assert norm[0] == 0
        assert normalize(norm).dilation == 1
        assert tuple(d * v + off for v in norm) == a


def test_normalize_rejects_degenerate():
    with pytest.raises(ValueError, match="degenerate set"):
        normalize((5,))
    with pytest.raises(ValueError):
        normalize(())


# --------------------------------------------------------------- reflect


def test_reflect_examples():
    assert reflect((0, 1, 2)) == (0, 1, 2)
    assert reflect((0, 1, 5, 6, 7)) == (0, 1, 2, 6, 7)
    assert reflect((0, 3, 4, 5)) == (0, 1, 2, 5)


def test_reflect_is_involution_up_to_translation():
    rng = random.Random(13)
    for _ in range(200):
        a = random_set(rng)
        r = reflect(reflect(a))
        assert tuple(v - r[0] + a[0] for v in r) == a


# ------------------------------------------------------------- canonical


def test_canonical_examples():
    assert canonical((0, 1, 5, 6, 7)) == (0, 1, 2, 6, 7)
    assert canonical((0, 1, 2, 6, 7)) == (0, 1, 2, 6, 7)
    assert canonical((3, 4, 5)) == (0, 1, 2)


def test_canonical_idempotent_and_symmetric():
    rng = random.Random(17)
    for _ in range(300):
        a = random_set(rng)
        if len(a) < 2:
            continue
        c = canonical(a)
        assert canonical(c) == c
        assert canonical(reflect(a)) == c
        d = rng.choice([-3, -1, 2, 5])
        t = rng.randint(-40, 40)
        assert canonical(tuple(sorted(d * v + t for v in a))) == c


# ---------------------------------------------------------- minkowski_add


def test_minkowski_examples():
    assert minkowski_add((0, 1, 5, 6, 7), (0, 1, 5, 6, 7)) == runs(
        (0, 2), (5, 8), (10, 14)
    )
    assert minkowski_add((0,), (4, 9, 11)) == RunSet.from_elements((4, 9, 11))
    # frozen from brute_pairwise over all 16 pairs
    assert minkowski_add((0, 3, 4, 5), (0, 3, 4, 5)) == runs((0, 0), (3, 10))
    assert brute_pairwise((0, 3, 4, 5), (0, 3, 4, 5)) == [0, 3, 4, 5, 6, 7, 8, 9, 10]


def test_minkowski_matches_bruteforce_and_endpoints():
    rng = random.Random(19)
    for _ in range(300):
        a, b = random_set(rng), random_set(rng)
        s = minkowski_add(a, b)
        assert list(s.elements()) == brute_pairwise(a, b)
        assert s.min() == a[0] + b[0]
        assert s.max() == a[-1] + b[-1]


def test_minkowski_commutative_associative():
    rng = random.Random(23)
    for _ in range(100):
        a, b, c = (random_set(rng, max_k=5, span=12) for _ in range(3))
        ab = minkowski_add(a, b)
        assert ab == minkowski_add(b, a)
        assert minkowski_add(ab, c) == minkowski_add(a, minkowski_add(b, c))


def test_minkowski_accepts_runsets():
    s = RunSet.from_elements((0, 3, 4, 5))
    assert minkowski_add(s, s) == runs((0, 0), (3, 10))


def test_minkowski_rejects_empty():
    with pytest.raises(ValueError):
        minkowski_add((), (0, 1))
    with pytest.raises(ValueError):
        minkowski_add(RunSet(), (0, 1))


# ----------------------------------------------------------------- hfold


def test_hfold_examples():
    assert hfold((0, 1, 2, 3, 4), 3) == runs((0, 12))
    assert cardinality(hfold((0, 1, 2, 3, 4), 3)) == 13
    assert hfold((0, 1, 5, 6, 7), 2) == runs((0, 2), (5, 8), (10, 14))
    assert hfold((0, 3, 4, 5), 2) == runs((0, 0), (3, 10))
    assert hfold((0, 2, 4, 6, 7, 8, 9), 3) == runs((0, 0), (2, 2), (4, 4), (6, 27))


def test_hfold_h1_is_identity():
    rng = random.Random(29)
    for _ in range(50):
        a = random_set(rng)
        assert hfold(a, 1).elements() == a


def test_hfold_matches_bruteforce():
    rng = random.Random(31)
    for _ in range(200):
        a = random_set(rng, max_k=6, span=15)
        h = rng.randint(1, 5)
        assert list(hfold(a, h).elements()) == brute_hfold(a, h)


def test_hfold_chain_equals_sequential():
    rng = random.Random(37)
    for _ in range(300):
        a = random_set(rng, max_k=10, span=30)
        h = rng.randint(1, 8)
        assert hfold(a, h) == hfold_sequential(a, h)


def test_hfold_split_recombination():
    rng = random.Random(41)
    for _ in range(100):
        a = random_set(rng, max_k=6, span=12)
        h = rng.randint(2, 7)
        whole = hfold(a, h)
        for i in range(1, h):
            assert minkowski_add(hfold(a, i), hfold(a, h - i)) == whole


def test_hfold_endpoints_and_nathanson_floor():
    rng = random.Random(43)
    for _ in range(200):
        a = random_set(rng)
        h = rng.randint(1, 6)
        s = hfold(a, h)
        assert s.min() == h * a[0]
        assert s.max() == h * a[-1]
        assert cardinality(s) >= h * len(a) - h + 1


def test_hfold_translation_dilation_reflection_invariance():
    rng = random.Random(47)
    for _ in range(150):
        a = random_set(rng, max_k=7, span=18)
        h = rng.randint(1, 6)
        base = cardinality(hfold(a, h))
        c = rng.randint(-50, 50)
        d = rng.choice([-7, -2, -1, 1, 3, 10])
        moved = tuple(sorted(d * v + c for v in a))
        assert cardinality(hfold(moved, h)) == base
        assert cardinality(hfold(reflect(a), h)) == base
        # exact transported structure: h((d*A)+c) = d*(hA) + h*c
        if d > 0:
            expect = RunSet.from_elements(
                d * v + h * c for v in hfold(a, h).elements()
            )
            assert hfold(moved, h) == expect


def test_hfold_rejects_bad_h_and_empty():
    with pytest.raises(ValueError):
        hfold((0, 1), 0)
    with pytest.raises(TypeError):
        hfold((0, 1), 2.0)
    with pytest.raises(ValueError):
        hfold((), 2)


def test_hfold_overflow_guard():
    big = 2**62
    with pytest.raises(OverflowError):
        hfold((0, big), 4)
    with pytest.raises(OverflowError):
        intset((0, 2**64))


def test_negative_elements_handled_exactly():
    a = (-7, -3, 0, 2)
    assert list(hfold(a, 3).elements()) == brute_hfold(a, 3)
    s = minkowski_add((-5, -1), (-2, 6))
    assert list(s.elements()) == brute_pairwise((-5, -1), (-2, 6))
