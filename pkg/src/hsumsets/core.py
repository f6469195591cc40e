"""Exact arithmetic on finite integer sets and their h-fold sumsets.

A finite set A of integers is held as a strictly increasing tuple (IntSet).
Sumsets are computed on a dense bit-vector: after translating min(A) to 0,
the set becomes an arbitrary-precision int whose bit i records membership
of i.  Minkowski addition is then a shifted bitwise-OR accumulation, one
shift per element of the smaller operand, which is exact and fast for the
spans that occur here (O(h * k) bits).

hA, all sums of exactly h elements of A with repetition, is computed by a
binary addition chain over pairwise Minkowski sums; this is valid because
(i + j)A = iA + jA.  The sequential (h-1)-addition variant is retained as
an independent cross-check (`hfold_sequential`).

Sumset outputs are RunSets: sorted, disjoint, maximal integer intervals.
|hA| grows linearly in h while hA itself is a union of very few runs, so
this is the natural exact answer shape.

Every operation is a pure function of immutable values and is safe to call
from any number of threads.
"""

from dataclasses import dataclass
from math import gcd
from typing import Iterable, NamedTuple, Union

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

IntSet = tuple[int, ...]


def intset(values: Iterable[int]) -> IntSet:
    """Sorted, duplicate-free tuple of integers (the universal input type)."""
    out = tuple(sorted(set(values)))
    for v in out:
        if not isinstance(v, int) or isinstance(v, bool):
            raise TypeError(f"set elements must be integers, got {v!r}")
    if out and (out[0] < INT64_MIN or out[-1] > INT64_MAX):
        raise OverflowError("set elements exceed the 64-bit integer range")
    return out


class NormalForm(NamedTuple):
    """Witness of A = dilation * normalized + offset."""

    offset: int
    dilation: int
    normalized: IntSet


@dataclass(frozen=True)
class RunSet:
    """Union of sorted, disjoint, maximal integer intervals [lo, hi].

    Maximality means consecutive runs satisfy next.lo >= prev.hi + 2, so
    the representation of any finite set of integers is unique.
    """

    runs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        prev_hi = None
        for lo, hi in self.runs:
            if lo > hi:
                raise ValueError(f"invalid run [{lo}, {hi}]")
            if prev_hi is not None and lo < prev_hi + 2:
                raise ValueError("runs must be sorted, disjoint and non-adjacent")
            prev_hi = hi

    @classmethod
    def from_runs(cls, runs: Iterable[tuple[int, int]]) -> "RunSet":
        """Build from arbitrary intervals, merging overlaps and adjacencies."""
        items = sorted(runs)
        merged: list[list[int]] = []
        for lo, hi in items:
            if lo > hi:
                raise ValueError(f"invalid run [{lo}, {hi}]")
            if merged and lo <= merged[-1][1] + 1:
                merged[-1][1] = max(merged[-1][1], hi)
            else:
                merged.append([lo, hi])
        return cls(tuple((lo, hi) for lo, hi in merged))

    @classmethod
    def from_elements(cls, values: Iterable[int]) -> "RunSet":
        return cls.from_runs((v, v) for v in set(values))

    @classmethod
    def from_mask(cls, mask: int, offset: int) -> "RunSet":
        """Decode a bit-vector: bit i set means offset + i is a member."""
        runs = []
        pos = offset
        while mask:
            skip = (mask & -mask).bit_length() - 1
            mask >>= skip
            pos += skip
            ones = ((mask + 1) & -(mask + 1)).bit_length() - 1
            runs.append((pos, pos + ones - 1))
            mask >>= ones
            pos += ones
        return cls(tuple(runs))

    @classmethod
    def interval(cls, lo: int, hi: int) -> "RunSet":
        return cls(((lo, hi),))

    def to_mask(self) -> tuple[int, int]:
        """Inverse of from_mask: returns (offset, mask)."""
        if not self.runs:
            raise ValueError("empty set has no mask")
        offset = self.runs[0][0]
        mask = 0
        for lo, hi in self.runs:
            mask |= ((1 << (hi - lo + 1)) - 1) << (lo - offset)
        return offset, mask

    def cardinality(self) -> int:
        return sum(hi - lo + 1 for lo, hi in self.runs)

    def min(self) -> int:
        if not self.runs:
            raise ValueError("empty set")
        return self.runs[0][0]

    def max(self) -> int:
        if not self.runs:
            raise ValueError("empty set")
        return self.runs[-1][1]

    def __contains__(self, value: int) -> bool:
        return any(lo <= value <= hi for lo, hi in self.runs)

    def __bool__(self) -> bool:
        return bool(self.runs)

    def elements(self) -> IntSet:
        return tuple(v for lo, hi in self.runs for v in range(lo, hi + 1))

    def __str__(self) -> str:
        return ", ".join(
            str(lo) if lo == hi else f"{lo}..{hi}" for lo, hi in self.runs
        )


SetLike = Union[RunSet, IntSet, Iterable[int]]


def cardinality(s: RunSet) -> int:
    """Number of integers covered; 0 for the empty RunSet."""
    return s.cardinality()


def _as_intset(a: SetLike, op: str) -> IntSet:
    if isinstance(a, RunSet):
        out = a.elements()
    else:
        out = intset(a)
    if not out:
        raise ValueError(f"{op}: empty set")
    return out


def normalize(a: SetLike) -> NormalForm:
    """Translate min to 0 and divide out the gcd of the differences.

    Requires at least two elements; the dilation of a singleton is
    undefined.
    """
    s = _as_intset(a, "normalize")
    if len(s) < 2:
        raise ValueError("degenerate set: normal form needs at least 2 elements")
    a0 = s[0]
    d = 0
    for v in s[1:]:
        d = gcd(d, v - a0)
        if d == 1:
            break
    return NormalForm(a0, d, tuple((v - a0) // d for v in s))


def reflect(a: SetLike) -> IntSet:
    """max(A) - A; an involution up to translation, preserving |hA|."""
    s = _as_intset(a, "reflect")
    top = s[-1]
    return tuple(top - v for v in reversed(s))


def canonical(a: SetLike) -> IntSet:
    """Canonical representative under translation, dilation and reflection.

    The lexicographically smaller of the normal forms of A and of its
    reflection.  Idempotent; two sets are affinely equivalent (up to
    reflection) exactly when their canonical forms coincide.
    """
    direct = normalize(a).normalized
    mirrored = normalize(reflect(a)).normalized
    return min(direct, mirrored)


def _offset_mask(a: SetLike, op: str) -> tuple[int, int]:
    if isinstance(a, RunSet):
        if not a:
            raise ValueError(f"{op}: empty set")
        return a.to_mask()
    s = _as_intset(a, op)
    off = s[0]
    mask = 0
    for v in s:
        mask |= 1 << (v - off)
    return off, mask


def _mink_mask(m1: int, m2: int) -> int:
    # One shift per set bit of the sparser operand.
    if m1.bit_count() > m2.bit_count():
        m1, m2 = m2, m1
    acc = 0
    while m1:
        low = m1 & -m1
        acc |= m2 << (low.bit_length() - 1)
        m1 ^= low
    return acc


def _check_endpoint(v: int) -> None:
    if v < INT64_MIN or v > INT64_MAX:
        raise OverflowError("sumset endpoint exceeds the 64-bit integer range")


def minkowski_add(s: SetLike, t: SetLike) -> RunSet:
    """Exact pairwise sumset {a + b : a in S, b in T}."""
    off1, m1 = _offset_mask(s, "minkowski_add")
    off2, m2 = _offset_mask(t, "minkowski_add")
    off = off1 + off2
    _check_endpoint(off)
    _check_endpoint(off + (m1.bit_length() - 1) + (m2.bit_length() - 1))
    return RunSet.from_mask(_mink_mask(m1, m2), off)


def _validate_h(h) -> None:
    if not isinstance(h, int) or isinstance(h, bool):
        raise TypeError("h must be an integer")
    if h < 1:
        raise ValueError("h must be >= 1 (the 0-fold sumset is not defined here)")


def hfold(a: SetLike, h: int) -> RunSet:
    """The h-fold sumset hA, via a binary addition chain of doublings."""
    _validate_h(h)
    s = _as_intset(a, "hfold")
    _check_endpoint(h * s[0])
    _check_endpoint(h * s[-1])
    base = _offset_mask(s, "hfold")[1]  # translated so min = 0
    result = None
    n = h
    while n:
        if n & 1:
            result = base if result is None else _mink_mask(result, base)
        n >>= 1
        if n:
            base = _mink_mask(base, base)
    return RunSet.from_mask(result, h * s[0])


def hfold_sequential(a: SetLike, h: int) -> RunSet:
    """hA by h-1 successive Minkowski additions (cross-check for hfold)."""
    _validate_h(h)
    s = _as_intset(a, "hfold")
    _check_endpoint(h * s[0])
    _check_endpoint(h * s[-1])
    step = _offset_mask(s, "hfold")[1]
    acc = step
    for _ in range(h - 1):
        acc = _mink_mask(acc, step)
    return RunSet.from_mask(acc, h * s[0])
