"""Exhaustive classification of |hA| bands over normal-form sets.

A normal-form set here is k integers with min 0 and gcd 1.  The engine
enumerates every such set up to a span limit, buckets them by |hA|, and
compares buckets against the claim catalog: the inverse classifications
of the near-minimal bands (one-hole, two-hole and three-hole families),
the unattained-value ranges, and the |2A|/|3A| implication table.

Exhaustiveness is not assumed, it is certified: the chain span cutoff
(bounds.span_cutoff) proves that any set wider than the cutoff exceeds
the band, so a scan up to the cutoff is a complete search.  Every verdict
records the cutoff it relied on.

Enumeration is lexicographic and is partitioned by the second-smallest
element; partitions are independent, so they can run on worker processes
and merge deterministically in partition order.  Reports are identical
for any worker count.

Buckets store sets exactly as enumerated (min 0, gcd 1), because the
three-hole classification speaks about A itself in that normalization;
reflection-deduped canonical buckets are available as a view.
"""

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd

from .bounds import (
    SpanUnboundedError,
    freiman_containment_check,
    interval_closure_holds,
    nathanson_lower,
    span_cutoff,
)
from .core import (
    IntSet,
    canonical,
    cardinality,
    hfold,
    hfold_sequential,
    intset,
    reflect,
)
from .families import punctured
from . import families as fam

__all__ = [
    "EnumSpec",
    "ClassificationReport",
    "Verdict",
    "GapScan",
    "ImplicationReport",
    "enumerate_normal_sets",
    "count_normal_sets",
    "classify_band",
    "classify_band_at",
    "main_case_families",
    "tang_xing_families",
    "verify_main_theorem",
    "verify_tang_xing",
    "scan_gaps",
    "gap_scan_report",
    "claimed_gap_bands",
    "implication_table",
    "verify_span_lemma",
    "verify_interval_closure",
    "verify_doubling_containment",
    "verify_family_formulas",
    "run_claim",
    "CLAIM_IDS",
]


# ------------------------------------------------------------ enumeration


def _suffixes(start: int, top: int, need: int, g: int, prefix: tuple):
    """Extend prefix with `need` increasing elements from [start, top],
    keeping only completions whose overall gcd is 1."""
    if need == 0:
        if g == 1:
            yield prefix
        return
    if g == 1:
        # gcd already 1: every completion qualifies
        for combo in itertools.combinations(range(start, top + 1), need):
            yield prefix + combo
        return
    for v in range(start, top - need + 2):
        yield from _suffixes(v + 1, top, need - 1, gcd(g, v), prefix + (v,))


def _sets_with_second(k: int, max_span: int, a1: int):
    """Normal-form k-sets with second-smallest element a1 (the partition
    unit for parallel scans)."""
    yield from _suffixes(a1 + 1, max_span, k - 2, a1, (0, a1))


def enumerate_normal_sets(k: int, max_span: int):
    """Every set with min 0, k elements, max <= max_span and gcd 1, in
    lexicographic order, each exactly once."""
    if k < 2:
        raise ValueError("need k >= 2")
    if max_span < k - 1:
        raise ValueError("max_span below the minimum span k - 1")
    for a1 in range(1, max_span - k + 3):
        yield from _sets_with_second(k, max_span, a1)


def count_normal_sets(k: int, max_span: int) -> int:
    return sum(1 for _ in enumerate_normal_sets(k, max_span))


def _partition_tasks(k: int, max_span: int, extra: tuple) -> list[tuple]:
    return [(k, max_span, a1) + extra for a1 in range(1, max_span - k + 3)]


def _run_tasks(tasks: list[tuple], worker, workers: int) -> list:
    if workers <= 1 or len(tasks) <= 1:
        return [worker(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as pool:
        return list(pool.map(worker, tasks))


# ------------------------------------------------------------- data types


@dataclass(frozen=True)
class EnumSpec:
    """One banded scan: k-sets, h-fold, spans <= max_span, |hA| in [lo, hi]."""

    k: int
    h: int
    max_span: int
    lo: int
    hi: int

    def __post_init__(self):
        if self.k < 2 or self.h < 1:
            raise ValueError("need k >= 2 and h >= 1")
        if self.max_span < self.k - 1:
            raise ValueError("max_span below the minimum span k - 1")
        if self.lo < nathanson_lower(self.h, self.k):
            raise ValueError("band extends below the Nathanson floor")
        if self.hi < self.lo:
            raise ValueError("empty band")

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "h": self.h,
            "max_span": self.max_span,
            "lo": self.lo,
            "hi": self.hi,
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "EnumSpec":
        return cls(d["k"], d["h"], d["max_span"], d["lo"], d["hi"])


@dataclass(frozen=True)
class Verdict:
    """Outcome of one verified claim at one parameter point."""

    claim: str
    params: tuple[tuple[str, int], ...]
    status: str  # pass | fail | skipped
    counterexamples: tuple[tuple[tuple[str, object], ...], ...] = ()
    notes: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json_dict(self) -> dict:
        return {
            "claim": self.claim,
            "params": {name: value for name, value in self.params},
            "status": self.status,
            "counterexamples": [
                {name: value for name, value in ce} for ce in self.counterexamples
            ],
            "notes": list(self.notes),
        }


def _verdict(claim, params: dict, status, counterexamples=(), notes=()):
    return Verdict(
        claim,
        tuple(params.items()),
        status,
        tuple(tuple(ce.items()) for ce in counterexamples),
        tuple(notes),
    )


@dataclass(frozen=True)
class ClassificationReport:
    """Buckets of enumerated sets by |hA| within a band."""

    spec: EnumSpec
    buckets: tuple[tuple[int, tuple[IntSet, ...]], ...]
    sets_enumerated: int
    span_cutoff: int | None
    complete: bool
    verdicts: tuple[Verdict, ...] = field(default=())

    def bucket(self, card: int) -> tuple[IntSet, ...]:
        for c, sets in self.buckets:
            if c == card:
                return sets
        return ()

    def canonical_buckets(self) -> tuple[tuple[int, tuple[IntSet, ...]], ...]:
        """Reflection-deduped view: one canonical representative per pair."""
        out = []
        for c, sets in self.buckets:
            reps = sorted({canonical(a) for a in sets})
            out.append((c, tuple(reps)))
        return tuple(out)

    def to_json_dict(self) -> dict:
        return {
            "spec": self.spec.to_json_dict(),
            "sets_enumerated": self.sets_enumerated,
            "span_cutoff": self.span_cutoff,
            "complete": self.complete,
            "buckets": [
                {"card": c, "sets": [list(a) for a in sets]}
                for c, sets in self.buckets
            ],
            "verdicts": [v.to_json_dict() for v in self.verdicts],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "ClassificationReport":
        verdicts = tuple(
            Verdict(
                v["claim"],
                tuple((name, value) for name, value in v["params"].items()),
                v["status"],
                tuple(
                    tuple((name, value) for name, value in ce.items())
                    for ce in v["counterexamples"]
                ),
                tuple(v["notes"]),
            )
            for v in d.get("verdicts", ())
        )
        return cls(
            spec=EnumSpec.from_json_dict(d["spec"]),
            buckets=tuple(
                (b["card"], tuple(tuple(s) for s in b["sets"]))
                for b in d["buckets"]
            ),
            sets_enumerated=d["sets_enumerated"],
            span_cutoff=d["span_cutoff"],
            complete=d["complete"],
            verdicts=verdicts,
        )


# -------------------------------------------------------------- band scan


def _classify_worker(task: tuple):
    k, max_span, a1, h, lo, hi = task
    count = 0
    buckets: dict[int, list[IntSet]] = {}
    for a in _sets_with_second(k, max_span, a1):
        count += 1
        c = cardinality(hfold(a, h))
        if lo <= c <= hi:
            buckets.setdefault(c, []).append(a)
    return count, buckets


def classify_band(spec: EnumSpec, workers: int = 1) -> ClassificationReport:
    """Bucket every enumerated set whose |hA| lands in the band.

    The report is complete (a certified exhaustive classification of the
    band) exactly when max_span reaches the chain span cutoff for hi.
    """
    try:
        cutoff = span_cutoff(spec.h, spec.k, spec.hi)
    except SpanUnboundedError:
        cutoff = None
    tasks = _partition_tasks(spec.k, spec.max_span, (spec.h, spec.lo, spec.hi))
    results = _run_tasks(tasks, _classify_worker, workers)
    total = 0
    merged: dict[int, list[IntSet]] = {}
    for count, buckets in results:
        total += count
        for c, sets in buckets.items():
            merged.setdefault(c, []).extend(sets)
    for c, sets in merged.items():
        for a in sets:  # self-check via the independent sequential kernel
            assert cardinality(hfold_sequential(a, spec.h)) == c
    return ClassificationReport(
        spec=spec,
        buckets=tuple((c, tuple(merged[c])) for c in sorted(merged)),
        sets_enumerated=total,
        span_cutoff=cutoff,
        complete=cutoff is not None and spec.max_span >= cutoff,
    )


def classify_band_at(h: int, k: int, lo: int, hi: int, workers: int = 1):
    """classify_band with max_span pinned to the certified cutoff."""
    cutoff = span_cutoff(h, k, hi)  # raises when no finite cutoff exists
    return classify_band(EnumSpec(k, h, max(cutoff, k - 1), lo, hi), workers)


# --------------------------------------------------------- claim catalog
#
# Family lists are materialized literally from the claim statements,
# including their parameter ranges; empty ranges at small k are dropped
# with a note, and literal duplicates are stored once and noted.


def _twelve_low_triples(k: int) -> list[tuple[int, int, int]]:
    return [
        (1, 2, 3),
        (k - 1, k, k + 1),
        (1, 2, 4),
        (k - 2, k, k + 1),
        (1, 2, k + 1),
        (1, k, k + 1),
        (1, 2, 5),
        (k - 3, k, k + 1),
        (1, 3, 5),
        (k - 3, k - 1, k + 1),
        (1, 3, k + 1),
        (1, k - 1, k + 1),
    ]


def _main_case_triples(case_id: int, k: int) -> list[tuple[str, list]]:
    """(range label, triples) pairs for one case of the classification."""
    if case_id == 1:
        return [
            ("{2,3,k+2}", [(2, 3, k + 2)]),
            ("{k-2,k-1,k+2}", [(k - 2, k - 1, k + 2)]),
            ("{1,i,k+2}, 4<=i<=k-1", [(1, i, k + 2) for i in range(4, k)]),
            ("{i,k,k+2}, 2<=i<=k-3", [(i, k, k + 2) for i in range(2, k - 2)]),
            ("twelve low families", _twelve_low_triples(k)),
            ("{2,3,k+2} (listed twice)", [(2, 3, k + 2)]),
        ]
    if case_id == 2:
        return [
            ("twelve low families", _twelve_low_triples(k)),
            (
                "{i,j,k+2}, 2<=i<j<=k-1",
                [(i, j, k + 2) for i in range(2, k) for j in range(i + 1, k)],
            ),
        ]
    if case_id == 3:
        return [("twelve low families", _twelve_low_triples(k))]
    if case_id == 4:
        return [
            ("{1,3,4}", [(1, 3, 4)]),
            ("{k-2,k-1,k+1}", [(k - 2, k - 1, k + 1)]),
            ("{1,2,i}, 6<=i<=k", [(1, 2, i) for i in range(6, k + 1)]),
            ("{i,k,k+1}, 2<=i<=k-4", [(i, k, k + 1) for i in range(2, k - 3)]),
            ("{1,3,i}, 6<=i<=k", [(1, 3, i) for i in range(6, k + 1)]),
            (
                "{i,k-1,k+1}, 2<=i<=k-4",
                [(i, k - 1, k + 1) for i in range(2, k - 3)],
            ),
            ("{1,i,k+1}, 4<=i<=k-2", [(1, i, k + 1) for i in range(4, k - 1)]),
        ]
    if case_id == 5:
        return [
            ("{2,3,k+1}", [(2, 3, k + 1)]),
            ("{1,k-1,k}", [(1, k - 1, k)]),
            (
                "{i,i+1,k+1}, 3<=i<=k-4",
                [(i, i + 1, k + 1) for i in range(3, k - 3)],
            ),
            ("{1,i,i+1}, 5<=i<=k-2", [(1, i, i + 1) for i in range(5, k - 1)]),
            (
                "{i,i+2,k+1}, 2<=i<=k-4",
                [(i, i + 2, k + 1) for i in range(2, k - 3)],
            ),
            ("{1,i,i+2}, 4<=i<=k-2", [(1, i, i + 2) for i in range(4, k - 1)]),
            (
                "{1,i,j}, 4<=i<=j-3<=k-3",
                [(1, i, j) for i in range(4, k + 1) for j in range(i + 3, k + 1)],
            ),
            (
                "{i,j,k+1}, 2<=i<=j-3<=k-5",
                [
                    (i, j, k + 1)
                    for i in range(2, k - 1)
                    for j in range(i + 3, k - 1)
                ],
            ),
        ]
    if case_id == 6:
        return [
            (
                "{x,y,z}, 2<=x<y<z<=k",
                [
                    (x, y, z)
                    for x in range(2, k + 1)
                    for y in range(x + 1, k + 1)
                    for z in range(y + 1, k + 1)
                ],
            )
        ]
    raise ValueError(f"unknown case {case_id}")


def main_case_families(case_id: int, h: int, k: int):
    """Expected hole triples for one case, with transcription notes."""
    notes = []
    seen: dict[tuple, str] = {}
    for label, triples in _main_case_triples(case_id, k):
        if not triples:
            notes.append(f"range empty at k={k}: {label}")
            continue
        for t in triples:
            t = tuple(sorted(t))
            if t in seen:
                notes.append(
                    f"duplicate listing: {t} via '{label}' already given "
                    f"by '{seen[t]}'"
                )
            else:
                seen[t] = label
    return tuple(sorted(seen)), tuple(notes)


_MAIN_TARGETS = {
    1: lambda h, k: h * k + 2 * h - 2,  # h = 2: 2k + 2
    2: lambda h, k: h * k + 2 * h - 2,  # h = 3: 3k + 4
    3: lambda h, k: h * k + 2 * h - 2,
    4: lambda h, k: h * k + 2 * h - 1,
    5: lambda h, k: h * k + 2 * h,
    6: lambda h, k: h * k + 2 * h + 1,
}

_MAIN_RANGES = {
    1: ("h == 2 and k >= 6",),
    2: ("h == 3 and k >= 5",),
    3: ("h >= 4 and k >= 5",),
    4: ("h >= 4 and k >= 5", "h >= 3 and k >= 6"),
    5: ("h >= 4 and k >= 6", "h >= 5 and k >= 5"),
    6: ("h >= 5 and k >= 6", "h >= 6 and k >= 5"),
}


def _matched_ranges(case_id: int, h: int, k: int) -> list[str]:
    return [
        cond
        for cond in _MAIN_RANGES[case_id]
        if eval(cond, {"h": h, "k": k})  # trusted literals from the table
    ]


def verify_main_theorem(
    h: int, k: int, case_id: int, workers: int = 1
) -> Verdict:
    """Verify one case of the three-hole classification, both directions.

    Materializes the case's family list, classifies the target cardinality
    exhaustively (certified by the span cutoff) and demands bucket == list.
    Counterexamples are reported as `missing` (a listed family that does
    not attain the target) or `extra` (an unlisted set that does).
    """
    if case_id not in _MAIN_TARGETS:
        raise ValueError(f"unknown case {case_id}")
    matched = _matched_ranges(case_id, h, k)
    if not matched:
        raise ValueError(
            f"(h={h}, k={k}) outside the stated range of case {case_id}"
        )
    target = _MAIN_TARGETS[case_id](h, k)
    triples, notes = main_case_families(case_id, h, k)
    expected = {punctured(k, t): t for t in triples}
    report = classify_band_at(h, k, target, target, workers)
    observed = set(report.bucket(target))
    counterexamples = []
    for a in sorted(set(expected) - observed):
        counterexamples.append(
            {
                "kind": "missing",
                "holes": list(expected[a]),
                "set": list(a),
                "observed_card": cardinality(hfold(a, h)),
            }
        )
    for a in sorted(observed - set(expected)):
        counterexamples.append({"kind": "extra", "set": list(a)})
    params = {
        "h": h,
        "k": k,
        "case": case_id,
        "target": target,
        "span_cutoff": report.span_cutoff,
        "sets_enumerated": report.sets_enumerated,
    }
    notes = notes + tuple(f"range matched: {m}" for m in matched)
    return _verdict(
        f"main{case_id}",
        params,
        "pass" if not counterexamples else "fail",
        counterexamples,
        notes,
    )


_TANG_TARGETS = {
    1: lambda h, k: h * k,
    2: lambda h, k: h * k + 1,
    3: lambda h, k: 2 * k + 1,
    4: lambda h, k: h * k + h - 1,
    5: lambda h, k: h * k + h,
    6: lambda h, k: h * k + h + 1,
}

_TANG_RANGES = {
    1: "h >= 2",
    2: "h >= 3",
    3: "h == 2",
    4: "h >= 3",
    5: "h >= 3",
    6: "h >= 4",
}


def tang_xing_families(item: int, h: int, k: int):
    """Expected hole patterns for the one- and two-hole conclusions."""
    low_pairs = [(1, 2), (k - 1, k), (1, k), (1, 3), (k - 2, k)]
    if item == 1:
        holes = [(1,), (k - 1,)]
    elif item == 2:
        holes = [(x,) for x in range(2, k - 1)]
    elif item == 3:
        holes = low_pairs + [(i, k + 1) for i in range(2, k - 1)]
    elif item == 4:
        holes = low_pairs
    elif item == 5:
        holes = [(i, k) for i in range(2, k - 2)] + [
            (1, j) for j in range(4, k)
        ]
    elif item == 6:
        holes = [
            (x, y) for x in range(2, k) for y in range(x + 1, k)
        ]
    else:
        raise ValueError(f"unknown item {item}")
    return tuple(tuple(sorted(t)) for t in holes)


def verify_tang_xing(h: int, k: int, item: int, workers: int = 1) -> Verdict:
    """Verify one of the six one/two-hole band conclusions, both ways."""
    if item not in _TANG_TARGETS:
        raise ValueError(f"unknown item {item}")
    if not eval(_TANG_RANGES[item], {"h": h, "k": k}) or k < 5:
        raise ValueError(
            f"(h={h}, k={k}) outside the stated range of item {item}"
        )
    target = _TANG_TARGETS[item](h, k)
    holes = tang_xing_families(item, h, k)
    expected = {punctured(k, t): t for t in holes}
    report = classify_band_at(h, k, target, target, workers)
    observed = set(report.bucket(target))
    counterexamples = []
    for a in sorted(set(expected) - observed):
        counterexamples.append(
            {
                "kind": "missing",
                "holes": list(expected[a]),
                "set": list(a),
                "observed_card": cardinality(hfold(a, h)),
            }
        )
    for a in sorted(observed - set(expected)):
        counterexamples.append({"kind": "extra", "set": list(a)})
    params = {
        "h": h,
        "k": k,
        "item": item,
        "target": target,
        "span_cutoff": report.span_cutoff,
        "sets_enumerated": report.sets_enumerated,
    }
    return _verdict(
        f"smallholes{item}",
        params,
        "pass" if not counterexamples else "fail",
        counterexamples,
        (f"range matched: {_TANG_RANGES[item]}",),
    )


# --------------------------------------------------------------- gap scan


@dataclass(frozen=True)
class GapScan:
    """Unattained |hA| values in a band, with witnesses for attained ones."""

    h: int
    k: int
    lo: int
    hi: int
    span_cutoff: int
    sets_enumerated: int
    unattained: tuple[int, ...]
    witnesses: tuple[tuple[int, IntSet], ...]  # attained card -> first set

    def to_json_dict(self) -> dict:
        return {
            "h": self.h,
            "k": self.k,
            "lo": self.lo,
            "hi": self.hi,
            "span_cutoff": self.span_cutoff,
            "sets_enumerated": self.sets_enumerated,
            "unattained": list(self.unattained),
            "witnesses": [
                {"card": c, "set": list(a)} for c, a in self.witnesses
            ],
        }


def _gaps_worker(task: tuple):
    k, max_span, a1, h, lo, hi = task
    count = 0
    found: dict[int, IntSet] = {}
    for a in _sets_with_second(k, max_span, a1):
        count += 1
        c = cardinality(hfold(a, h))
        if lo <= c <= hi and c not in found:
            found[c] = a
    return count, found


def gap_scan_report(
    h: int, k: int, lo: int, hi: int, workers: int = 1
) -> GapScan:
    """Scan the band exhaustively and report which values no set attains."""
    if h < 2 or k < 2:
        raise ValueError("need h >= 2 and k >= 2")
    if lo < nathanson_lower(h, k):
        raise ValueError("band extends below the Nathanson floor")
    if hi < lo:
        raise ValueError("empty band")
    if hi > h * k + 3 * h - 4:
        raise ValueError("band extends beyond the scanner's certified range")
    cutoff = span_cutoff(h, k, hi)
    tasks = _partition_tasks(k, max(cutoff, k - 1), (h, lo, hi))
    results = _run_tasks(tasks, _gaps_worker, workers)
    total = 0
    witnesses: dict[int, IntSet] = {}
    for count, found in results:
        total += count
        for c, a in found.items():
            witnesses.setdefault(c, a)
    unattained = tuple(c for c in range(lo, hi + 1) if c not in witnesses)
    return GapScan(
        h,
        k,
        lo,
        hi,
        cutoff,
        total,
        unattained,
        tuple(sorted(witnesses.items())),
    )


def scan_gaps(h: int, k: int, lo: int, hi: int, workers: int = 1) -> list[int]:
    """Values in [lo, hi] attained by no normal-form k-set (exhaustive)."""
    return list(gap_scan_report(h, k, lo, hi, workers).unattained)


def claimed_gap_bands(h: int, k: int) -> list[tuple[str, int, int]]:
    """The four claimed-unattainable bands, as stated (k >= 5 throughout).

    gap4's top value h*k + 3h - 4 is claimed for k >= 5, although the
    span containment behind it only covers k >= 6; the scanner finds
    witnesses at k = 5 (see the verifier notes and README findings).
    """
    if k < 5:
        raise ValueError("gap claims are stated for k >= 5")
    bands = []
    if h >= 3:
        bands.append(("gap1", h * k - h + 2, h * k - 1))
    if h >= 4:
        bands.append(("gap2", h * k + 2, h * k + h - 2))
    if h >= 5:
        bands.append(("gap3", h * k + h + 2, h * k + 2 * h - 3))
    if h >= 6:
        bands.append(("gap4", h * k + 2 * h + 2, h * k + 3 * h - 4))
    return bands


# ------------------------------------------------------ implication table


@dataclass(frozen=True)
class ImplicationReport:
    k: int
    max_span: int
    sets_enumerated: int
    pair_counts: tuple[tuple[tuple[int, int], int], ...]  # (|2A|,|3A|) -> n
    verdicts: tuple[Verdict, ...]

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "max_span": self.max_span,
            "sets_enumerated": self.sets_enumerated,
            "pair_counts": [
                {"card2": c2, "card3": c3, "count": n}
                for (c2, c3), n in self.pair_counts
            ],
            "verdicts": [v.to_json_dict() for v in self.verdicts],
        }


def _pairs_worker(task: tuple):
    k, max_span, a1 = task
    out = []
    for a in _sets_with_second(k, max_span, a1):
        c2 = cardinality(hfold(a, 2))
        c3 = cardinality(hfold(a, 3))
        out.append((a, c2, c3))
    return out


def implication_table(k: int, workers: int = 1) -> ImplicationReport:
    """Check how |2A| constrains |3A| and conversely on the low bands.

    Each implication's hypothesis pins the span of any qualifying set, so
    one enumeration up to the largest of those cutoffs is exhaustive for
    all of them; wider sets satisfy every hypothesis vacuously.
    """
    if k < 6:
        raise ValueError("the implication table is stated for k >= 6")
    cutoffs = {
        "imp_ap": max(span_cutoff(2, k, 2 * k - 1), span_cutoff(3, k, 3 * k - 2)),
        "imp1": max(span_cutoff(3, k, 3 * k + 2), span_cutoff(2, k, 2 * k + 1)),
        "imp2": span_cutoff(3, k, 3 * k + 3),
        "imp3": span_cutoff(3, k, 3 * k + 4),
    }
    max_span = max(cutoffs.values())
    results = _run_tasks(
        _partition_tasks(k, max_span, ()), _pairs_worker, workers
    )
    rows = [row for chunk in results for row in chunk]

    checks = {
        "imp_ap": lambda c2, c3: (c2 == 2 * k - 1) == (c3 == 3 * k - 2),
        "imp1": lambda c2, c3: (3 * k + 1 <= c3 <= 3 * k + 2)
        == (c2 == 2 * k + 1),
        "imp2": lambda c2, c3: c3 != 3 * k + 3 or c2 == 2 * k + 2,
        "imp3": lambda c2, c3: c3 != 3 * k + 4
        or 2 * k + 2 <= c2 <= 2 * k + 3,
    }
    claims = {
        "imp_ap": "|2A| = 2k-1 iff |3A| = 3k-2",
        "imp1": "3k+1 <= |3A| <= 3k+2 iff |2A| = 2k+1",
        "imp2": "|3A| = 3k+3 implies |2A| = 2k+2",
        "imp3": "|3A| = 3k+4 implies 2k+2 <= |2A| <= 2k+3",
    }
    verdicts = []
    for name, check in checks.items():
        bad = [
            {"set": list(a), "card2": c2, "card3": c3}
            for a, c2, c3 in rows
            if not check(c2, c3)
        ]
        verdicts.append(
            _verdict(
                name,
                {"k": k, "span_cutoff": cutoffs[name]},
                "pass" if not bad else "fail",
                bad,
                (claims[name],),
            )
        )
    pair_counts: dict[tuple[int, int], int] = {}
    for _, c2, c3 in rows:
        pair_counts[(c2, c3)] = pair_counts.get((c2, c3), 0) + 1
    return ImplicationReport(
        k=k,
        max_span=max_span,
        sets_enumerated=len(rows),
        pair_counts=tuple(sorted(pair_counts.items())),
        verdicts=tuple(verdicts),
    )


# ------------------------------------------------- structural claim checks


def verify_span_lemma(h: int, k: int) -> Verdict:
    """Small |hA| pins the span to k + 2: check both stated parts.

    (a) for k >= 6, |hA| = hk + 3h - 4 forces span <= k + 2;
    (b) |hA| < hk + 3h - 4 forces span <= k + 2.
    Candidate counterexamples live between span k + 3 and the chain
    cutoff, a finite window searched in full.  Also re-checks the proof's
    key inequality k + (h-2)(2k-2) + 2k-3 >= hk + 3h - 4, which holds
    exactly when (h-1)(k-5) >= 0.
    """
    if h < 2 or k < 5:
        raise ValueError("need h >= 2 and k >= 5")
    top = h * k + 3 * h - 4
    notes = []
    counterexamples = []
    ineq = k + (h - 2) * (2 * k - 2) + 2 * k - 3 >= top
    if not ineq:
        counterexamples.append({"kind": "inequality", "h": h, "k": k})
    if (k + (h - 2) * (2 * k - 2) + 2 * k - 3 == top) and k == 5:
        notes.append("proof inequality is an equality at k = 5")
    cutoff_b = span_cutoff(h, k, top - 1)
    for a in enumerate_normal_sets(k, cutoff_b):
        if a[-1] > k + 2 and cardinality(hfold(a, h)) < top:
            counterexamples.append({"kind": "part_b", "set": list(a)})
    if k >= 6:
        cutoff_a = span_cutoff(h, k, top)
        for a in enumerate_normal_sets(k, cutoff_a):
            if a[-1] > k + 2 and cardinality(hfold(a, h)) == top:
                counterexamples.append({"kind": "part_a", "set": list(a)})
    else:
        notes.append("part (a) requires k >= 6: skipped")
    return _verdict(
        "lemma21",
        {"h": h, "k": k, "top": top},
        "pass" if not counterexamples else "fail",
        counterexamples,
        notes,
    )


def verify_interval_closure(h: int, k: int) -> Verdict:
    """Exhaustively confirm: predicate true implies hA = [0, hy].

    Sweeps every two-run shape [0, x-1] u [x+r, y] with k elements and
    both runs of length >= t, with r past the predicate's threshold.
    """
    if h < 1 or k < 4:
        raise ValueError("need h >= 1 and k >= 4")
    checked = 0
    holds = 0
    counterexamples = []
    for t in range(2, k // 2 + 1):
        for x in range(t, k - t + 1):
            for r in range(0, (h - 1) * (t - 1) + 3):
                y = k + r - 1
                a = intset(list(range(x)) + list(range(x + r, y + 1)))
                assert len(a) == k
                checked += 1
                if interval_closure_holds(x, t, r, y, h):
                    holds += 1
                    if hfold(a, h).runs != ((0, h * y),):
                        counterexamples.append(
                            {"kind": "closure", "x": x, "t": t, "r": r, "y": y}
                        )
    return _verdict(
        "lemma23",
        {"h": h, "k": k, "checked": checked, "predicate_true": holds},
        "pass" if not counterexamples else "fail",
        counterexamples,
    )


def verify_doubling_containment(k: int) -> Verdict:
    """Small doubling forces short-progression containment, exhaustively.

    Sets with |2A| >= 3k - 3 satisfy the claim vacuously, and any set
    wider than 2k - 4 provably has |2A| >= 3k - 3, so the scan stops
    there.
    """
    if k < 3:
        raise ValueError("need k >= 3")
    counterexamples = []
    checked = 0
    for a in enumerate_normal_sets(k, 2 * k - 4):
        checked += 1
        if not freiman_containment_check(a):
            counterexamples.append({"kind": "containment", "set": list(a)})
    return _verdict(
        "freiman13",
        {"k": k, "checked": checked, "max_span": 2 * k - 4},
        "pass" if not counterexamples else "fail",
        counterexamples,
    )


# ---------------------------------------------------- formula grid checks


_FORMULA_SWEEPS = {
    "split_interval": lambda h, k: (
        (
            (x, y, variant),
            fam.predict_split_interval(h, x, y, variant),
            (0,) + tuple(range(x, y + 1))
            if variant == "a"
            else tuple(range(0, y - x + 1)) + (y,),
        )
        for x, y, variant in fam.split_interval_cases(k)
    ),
    "consecutive": lambda h, k: (
        (
            (x,),
            fam.predict_consecutive_holes(h, k, x),
            punctured(k, (x, x + 1, x + 2)),
        )
        for x in fam.consecutive_hole_cases(k)
    ),
    "adjacent_pair": lambda h, k: (
        (
            (x, z),
            fam.predict_adjacent_pair_holes(h, k, x, z),
            punctured(k, (x, x + 1, z)),
        )
        for x, z in fam.adjacent_pair_cases(k)
    ),
    "spread": lambda h, k: (
        ((x, y, z), fam.predict_spread_holes(h, k, x, y, z), punctured(k, (x, y, z)))
        for x, y, z in fam.spread_hole_cases(k)
    ),
    "one_hole": lambda h, k: (
        (holes, fam.predict_small_holes(h, k, holes), punctured(k, holes))
        for holes in fam.small_hole_cases(k)
        if len(holes) == 1
    ),
    "two_hole": lambda h, k: (
        (holes, fam.predict_small_holes(h, k, holes), punctured(k, holes))
        for holes in fam.small_hole_cases(k)
        if len(holes) == 2
    ),
}


def verify_family_formulas(which: str, h: int, k: int) -> Verdict:
    """Compare one formula family against the kernel at every
    in-hypothesis parameter choice for this (h, k)."""
    if which not in _FORMULA_SWEEPS:
        raise ValueError(f"unknown formula family {which!r}")
    if h < 2 or k < 5:
        raise ValueError("formula grids are stated for h >= 2 and k >= 5")
    checked = 0
    notes = []
    counterexamples = []
    for params, pred, a in _FORMULA_SWEEPS[which](h, k):
        checked += 1
        s = hfold(a, h)
        if pred.cardinality != cardinality(s):
            counterexamples.append(
                {
                    "kind": "cardinality",
                    "params": list(params),
                    "predicted": pred.cardinality,
                    "actual": cardinality(s),
                }
            )
        elif pred.structure is not None and pred.structure != s:
            counterexamples.append(
                {"kind": "structure", "params": list(params)}
            )
        if pred.source.endswith("_boundary"):
            notes.append(
                f"corrected boundary cell used at params {list(params)}: "
                f"tabulated value exceeds the true size by one"
            )
    return _verdict(
        f"formulas.{which}",
        {"h": h, "k": k, "checked": checked},
        "pass" if not counterexamples else "fail",
        counterexamples,
        tuple(notes),
    )


# ------------------------------------------------------------ claim runner


CLAIM_IDS = (
    "thm15",
    "thm16",
    "main1",
    "main2",
    "main3",
    "main4",
    "main5",
    "main6",
    "prop31",
    "prop32",
    "prop33",
    "prop34",
    "lemma21",
    "lemma23",
    "freiman13",
)

_PROP_SWEEP = {
    "prop31": "split_interval",
    "prop32": "consecutive",
    "prop33": "adjacent_pair",
    "prop34": "spread",
}


def _skipped(claim: str, h: int, k: int, reason: str) -> Verdict:
    return _verdict(claim, {"h": h, "k": k}, "skipped", notes=(reason,))


def run_claim(claim_id: str, h: int, k: int, workers: int = 1) -> list[Verdict]:
    """Run every check behind one claim id at one (h, k) point.

    Out-of-hypothesis points come back as `skipped` verdicts, never
    failures, so grid sweeps can cover rectangles without pre-filtering.
    """
    if claim_id not in CLAIM_IDS:
        raise ValueError(f"unknown claim id {claim_id!r}")
    out = []
    if claim_id in _PROP_SWEEP:
        try:
            out.append(verify_family_formulas(_PROP_SWEEP[claim_id], h, k))
        except ValueError as exc:
            out.append(_skipped(claim_id, h, k, str(exc)))
    elif claim_id.startswith("main"):
        case_id = int(claim_id[4:])
        try:
            out.append(verify_main_theorem(h, k, case_id, workers))
        except ValueError as exc:
            out.append(_skipped(claim_id, h, k, str(exc)))
    elif claim_id == "thm15":
        try:
            out.append(verify_family_formulas("one_hole", h, k))
        except ValueError as exc:
            out.append(_skipped("formulas.one_hole", h, k, str(exc)))
        for item in (1, 2):
            try:
                out.append(verify_tang_xing(h, k, item, workers))
            except ValueError as exc:
                out.append(_skipped(f"smallholes{item}", h, k, str(exc)))
    elif claim_id == "thm16":
        try:
            out.append(verify_family_formulas("two_hole", h, k))
        except ValueError as exc:
            out.append(_skipped("formulas.two_hole", h, k, str(exc)))
        for item in (3, 4, 5, 6):
            try:
                out.append(verify_tang_xing(h, k, item, workers))
            except ValueError as exc:
                out.append(_skipped(f"smallholes{item}", h, k, str(exc)))
    elif claim_id == "lemma21":
        try:
            out.append(verify_span_lemma(h, k))
        except ValueError as exc:
            out.append(_skipped("lemma21", h, k, str(exc)))
    elif claim_id == "lemma23":
        try:
            out.append(verify_interval_closure(h, k))
        except ValueError as exc:
            out.append(_skipped("lemma23", h, k, str(exc)))
    elif claim_id == "freiman13":
        try:
            out.append(verify_doubling_containment(k))
        except ValueError as exc:
            out.append(_skipped("freiman13", h, k, str(exc)))
    return out
