"""Family formula tests: frozen values, then the full grid against the
kernel (the oracle for every piecewise case)."""

import pytest

from hsumsets import RunSet, cardinality, hfold, reflect
from hsumsets.families import (
    FamilyPattern,
    HypothesisError,
    adjacent_pair_cases,
    consecutive_hole_cases,
    family_set,
    predict_adjacent_pair_holes,
    predict_consecutive_holes,
    predict_holes,
    predict_small_holes,
    predict_split_interval,
    predict_spread_holes,
    punctured,
    small_hole_cases,
    split_interval_cases,
    spread_hole_cases,
)

GRID = [(h, k) for h in range(2, 7) for k in range(5, 11)]


def split_interval_set(x, y, variant):
    if variant == "a":
        return (0,) + tuple(range(x, y + 1))
    return tuple(range(0, y - x + 1)) + (y,)


# ---------------------------------------------------------------- shapes


def test_family_set_examples():
    assert family_set(FamilyPattern(7, (2, 3, 4))) == (0, 1, 5, 6, 7)
    assert family_set(FamilyPattern(5, (1,))) == (0, 2, 3, 4, 5)
    assert family_set(FamilyPattern(8, (1, 3, 5))) == (0, 2, 4, 6, 7, 8)
    assert punctured(5, (2, 3, 4)) == (0, 1, 5, 6, 7)


def test_family_pattern_validation():
    with pytest.raises(ValueError):
        FamilyPattern(7, (0, 2, 3))  # would remove the minimum
    with pytest.raises(ValueError):
        FamilyPattern(7, (2, 2, 3))
    with pytest.raises(ValueError):
        FamilyPattern(7, (2, 3, 8))


# ------------------------------------------------------- frozen examples


def test_split_interval_examples():
    p = predict_split_interval(2, 3, 5, "a")
    assert p.cardinality == 9
    assert p.structure == RunSet(((0, 0), (3, 10)))
    p = predict_split_interval(1, 2, 4, "a")
    assert p.structure.elements() == (0, 2, 3, 4)
    # frozen from hfold((0,1,2,3,4,6), 3)
    p = predict_split_interval(3, 2, 6, "b")
    assert p.cardinality == 18
    assert p.structure == RunSet(((0, 16), (18, 18)))
    assert hfold((0, 1, 2, 3, 4, 6), 3) == p.structure
    with pytest.raises(HypothesisError):
        predict_split_interval(2, 3, 4, "a")


def test_consecutive_holes_examples():
    assert predict_consecutive_holes(2, 5, 2).cardinality == 12
    assert predict_consecutive_holes(3, 6, 3).cardinality == 25
    assert predict_consecutive_holes(2, 8, 4).cardinality == 21
    assert predict_consecutive_holes(4, 5, 1).cardinality == 4 * 7 - 2
    with pytest.raises(HypothesisError):
        predict_consecutive_holes(2, 5, 5)


def test_adjacent_pair_examples():
    for h in (2, 3, 5):
        assert predict_adjacent_pair_holes(h, 6, 1, 4).cardinality == 8 * h - 2
    assert predict_adjacent_pair_holes(2, 5, 2, 5).cardinality == 13
    assert predict_adjacent_pair_holes(2, 7, 2, 8).cardinality == 17
    # z = k+1 at k=5: the {2,3,k+1} shape, not the empty z in [6,k] range
    assert predict_adjacent_pair_holes(2, 5, 2, 6).cardinality == 13
    with pytest.raises(HypothesisError):
        predict_adjacent_pair_holes(2, 5, 1, 9)  # z beyond k+1


def test_spread_holes_examples():
    assert predict_spread_holes(3, 6, 1, 3, 5).cardinality == 22
    assert predict_spread_holes(2, 7, 1, 5, 8).cardinality == 17
    assert predict_spread_holes(4, 9, 2, 5, 8).cardinality == 45
    with pytest.raises(HypothesisError):
        predict_spread_holes(3, 6, 1, 2, 5)  # adjacent holes


def test_small_holes_examples():
    assert predict_small_holes(3, 5, (2,)).cardinality == 16
    assert predict_small_holes(2, 6, (2, 3)).cardinality == 14
    assert predict_small_holes(4, 6, (3, 4)).cardinality == 29
    # hole at k+1 reduces to the one-hole family
    red = predict_small_holes(3, 6, (2, 7))
    assert red.cardinality == predict_small_holes(3, 6, (2,)).cardinality
    assert red.source.endswith(".reduced")
    with pytest.raises(HypothesisError):
        predict_small_holes(3, 6, (6, 7))  # reduces to a progression


def test_h2_exceptions_versus_h3():
    for k in range(5, 9):
        for pair in ((2, 3), (k - 2, k - 1)):
            assert predict_small_holes(2, k, pair).cardinality == 2 * k + 2
        assert predict_small_holes(3, k, (2, 3)).cardinality == 3 * k + 4


def test_consecutive_interior_boundary_cell():
    # The tabulated h=2, x in {3, k-3} value 2k+4 needs k >= 7; at k=6 the
    # set {0,1,2,6,7,8} misses 11 in its doubling and |2A| = 2k+3.
    a = punctured(6, (3, 4, 5))
    two = hfold(a, 2)
    assert 11 not in two
    assert cardinality(two) == 2 * 6 + 3
    p = predict_consecutive_holes(2, 6, 3)
    assert p.cardinality == 15
    assert p.source == "consecutive.interior_boundary"
    assert p.structure == two
    # one step up in k the tabulated value is correct again
    assert predict_consecutive_holes(2, 7, 3).cardinality == 2 * 7 + 4
    assert predict_consecutive_holes(2, 7, 4).cardinality == 2 * 7 + 4


# ------------------------------------------------ grid oracle equivalence


@pytest.mark.parametrize("h,k", GRID)
def test_split_interval_grid(h, k):
    for x, y, variant in split_interval_cases(k):
        a = split_interval_set(x, y, variant)
        assert len(a) == k
        p = predict_split_interval(h, x, y, variant)
        s = hfold(a, h)
        assert p.cardinality == cardinality(s), (x, y, variant)
        assert p.structure == s, (x, y, variant)


@pytest.mark.parametrize("h,k", GRID)
def test_consecutive_holes_grid(h, k):
    for x in consecutive_hole_cases(k):
        a = punctured(k, (x, x + 1, x + 2))
        p = predict_consecutive_holes(h, k, x)
        s = hfold(a, h)
        assert p.cardinality == cardinality(s), x
        if p.structure is not None:
            assert p.structure == s, x


@pytest.mark.parametrize("h,k", GRID)
def test_adjacent_pair_grid(h, k):
    for x, z in adjacent_pair_cases(k):
        a = punctured(k, (x, x + 1, z))
        p = predict_adjacent_pair_holes(h, k, x, z)
        s = hfold(a, h)
        assert p.cardinality == cardinality(s), (x, z)
        if p.structure is not None:
            assert p.structure == s, (x, z)


@pytest.mark.parametrize("h,k", GRID)
def test_spread_holes_grid(h, k):
    for x, y, z in spread_hole_cases(k):
        a = punctured(k, (x, y, z))
        p = predict_spread_holes(h, k, x, y, z)
        s = hfold(a, h)
        assert p.cardinality == cardinality(s), (x, y, z)
        if p.structure is not None:
            assert p.structure == s, (x, y, z)


@pytest.mark.parametrize("h,k", GRID)
def test_small_holes_grid(h, k):
    for holes in small_hole_cases(k):
        a = punctured(k, holes)
        p = predict_small_holes(h, k, holes)
        assert p.cardinality == cardinality(hfold(a, h)), holes


@pytest.mark.parametrize("h,k", GRID)
def test_dispatcher_covers_all_triples(h, k):
    for x in range(1, k):
        for y in range(x + 1, k + 1):
            for z in range(y + 1, k + 3):
                if (x, y, z) == (k, k + 1, k + 2):
                    continue  # reduces to a plain progression
                a = punctured(k, (x, y, z))
                p = predict_holes(h, k, (x, y, z))
                s = hfold(a, h)
                assert p.cardinality == cardinality(s), (x, y, z)
                if p.structure is not None:
                    assert p.structure == s, (x, y, z)


# ------------------------------------------------------ reflection duality


@pytest.mark.parametrize("h,k", [(2, 5), (3, 6), (4, 7), (6, 9)])
def test_reflection_duality(h, k):
    for x, y, z in spread_hole_cases(k):
        mirror = tuple(sorted(k + 2 - v for v in (x, y, z)))
        a = punctured(k, (x, y, z))
        b = punctured(k, mirror)
        assert b == reflect(a)
        pa = predict_spread_holes(h, k, x, y, z)
        pb = predict_spread_holes(h, k, *mirror)
        assert pa.cardinality == pb.cardinality
    for x, z in adjacent_pair_cases(k):
        mirror = tuple(sorted(k + 2 - v for v in (x, x + 1, z)))
        assert punctured(k, mirror) == reflect(punctured(k, (x, x + 1, z)))
        assert (
            predict_holes(h, k, mirror).cardinality
            == predict_adjacent_pair_holes(h, k, x, z).cardinality
        )
