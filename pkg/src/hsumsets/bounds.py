"""Direct lower bounds on |hA| and the span cutoff behind exhaustive scans.

For a normal-form set A (min 0, gcd of elements 1, |A| = k, largest element
a_last) the classical bounds implemented here are:

- Nathanson:            |hA| >= h*k - h + 1, with equality for h >= 2 only
                        when A is the arithmetic progression [0, k-1];
- Freiman (doubling):   |2A| >= k + a_last when a_last <= 2k - 3, and
                        |2A| >= 3k - 3 otherwise;
- Lev (single step):    |hA| >= |(h-1)A| + min(a_last, h(k-2) + 1).

Telescoping Lev's step from h down to 1 gives the chain bound

    |hA| >= k + sum_{i=2..h} min(a_last, i*(k-2) + 1),

which is monotone nondecreasing in a_last.  Inverting it yields
`span_cutoff`: the largest span L compatible with |hA| <= target.  Any
normal-form set with span above the cutoff provably exceeds the target, so
enumerating spans up to the cutoff is a complete search of a cardinality
band.  The chain saturates at k + sum_i (i*(k-2) + 1); targets at or above
that value are attained by sets of unbounded span and have no finite
cutoff (`SpanUnboundedError`).

Two structural predicates complete the module: `interval_closure_holds`
decides, for two-run sets [0, x-1] u [x+r, y] with second-run length >= t,
whether h*(t-1) >= r+t-1, in which case hA collapses to the full interval
[0, hy]; `residue_membership` certifies m in hA from a single membership in
2A.  Both are exact implications that the classifier leans on, so the test
suite re-proves them against the kernel on exhaustive small ranges.
"""

from dataclasses import dataclass

from .core import SetLike, _as_intset, cardinality, hfold, normalize


class SpanUnboundedError(ValueError):
    """No finite span cutoff: the chain bound saturates at or below target."""


@dataclass(frozen=True)
class BoundReport:
    """One evaluated lower bound, with the inputs it was computed from."""

    bound_name: str  # nathanson | freiman_2a | lev_step | lev_chain
    value: int
    h: int
    k: int
    a_last: int | None = None

    def __post_init__(self):
        if self.value < 1:
            raise ValueError("a lower bound on a nonempty sumset is >= 1")


def nathanson_lower(h: int, k: int) -> int:
    """h*k - h + 1, the floor for any k-element set."""
    if h < 1 or k < 1:
        raise ValueError("need h >= 1 and k >= 1")
    return h * k - h + 1


def freiman_2a_lower(k: int, a_last: int) -> int:
    """Doubling bound: k + a_last for small span, else 3k - 3."""
    if k < 3:
        raise ValueError("need k >= 3")
    if a_last < k - 1:
        raise ValueError("impossible span for k distinct elements")
    return k + a_last if a_last <= 2 * k - 3 else 3 * k - 3


def lev_step_lower(h: int, k: int, a_last: int, prev_card: int) -> int:
    """prev_card + min(a_last, h*(k-2) + 1)."""
    if h < 2 or k < 2:
        raise ValueError("need h >= 2 and k >= 2")
    if prev_card < k:
        raise ValueError("|(h-1)A| is at least |A| = k")
    return prev_card + min(a_last, h * (k - 2) + 1)


def lev_chain_lower(h: int, k: int, a_last: int) -> int:
    """k + sum_{i=2..h} min(a_last, i*(k-2) + 1); nondecreasing in a_last."""
    if h < 2 or k < 2:
        raise ValueError("need h >= 2 and k >= 2")
    if a_last < 1:
        raise ValueError("need a_last >= 1")
    return k + sum(min(a_last, i * (k - 2) + 1) for i in range(2, h + 1))


def chain_saturation(h: int, k: int) -> int:
    """Limit of the chain bound as the span grows without bound."""
    return k + sum(i * (k - 2) + 1 for i in range(2, h + 1))


def span_cutoff(h: int, k: int, target_card: int) -> int:
    """Largest span L with lev_chain_lower(h, k, L) <= target_card.

    Every normal-form k-set whose span exceeds the cutoff has
    |hA| > target_card, so a scan over spans <= cutoff is exhaustive for
    the band.  Raises SpanUnboundedError when the chain saturates at or
    below the target (arbitrarily wide sets then fit the band and no
    finite scan can be complete).
    """
    if target_card < nathanson_lower(h, k):
        raise ValueError("target below the Nathanson floor is unattainable")
    if chain_saturation(h, k) <= target_card:
        raise SpanUnboundedError(
            f"no finite span cutoff: chain bound saturates at "
            f"{chain_saturation(h, k)} <= target {target_card}"
        )
    lo = k - 1
    while lev_chain_lower(h, k, lo + 1) <= target_card:
        lo += 1
    return lo


def interval_closure_holds(x: int, t: int, r: int, y: int, h: int) -> bool:
    """Whether h >= (r+t-1)/(t-1), decided by exact integer comparison.

    Hypotheses: 2 <= t <= x, r >= 0 and x + r <= y - t + 1 (so both runs
    of A = [0, x-1] u [x+r, y] have length >= t).  When the predicate
    holds, hA = [0, hy] exactly.
    """
    if t < 2 or t > x:
        raise ValueError("need 2 <= t <= x")
    if r < 0:
        raise ValueError("need r >= 0")
    if x + r > y - t + 1:
        raise ValueError("second run shorter than t")
    if h < 1:
        raise ValueError("need h >= 1")
    return h * (t - 1) >= r + t - 1


def residue_membership(a: SetLike, t_index: int, m: int, h: int) -> bool:
    """Whether a_t + (m mod a_t) lies in 2A; if so, m is in hA.

    Requires A in normal form (min 0) and 0 < a_t <= m <= h * a_t - 1.
    """
    s = _as_intset(a, "residue_membership")
    if s[0] != 0:
        raise ValueError("set must be in normal form (min 0)")
    if not 0 <= t_index < len(s):
        raise ValueError("t_index out of range")
    a_t = s[t_index]
    if a_t <= 0:
        raise ValueError("need a_t > 0")
    if not a_t <= m <= h * a_t - 1:
        raise ValueError("need a_t <= m <= h*a_t - 1")
    return (a_t + m % a_t) in hfold(s, 2)


def freiman_containment_check(a: SetLike) -> bool:
    """Small doubling forces containment in a short arithmetic progression.

    For normal-form A with |A| = k >= 3 and |2A| = 2k - 1 + b < 3k - 3,
    checks max(A) <= k + b - 1 (an AP of length k + b covering A, once
    normalized, pins the span).  Vacuously true when |2A| >= 3k - 3.
    """
    s = _as_intset(a, "freiman_containment_check")
    k = len(s)
    if k < 3:
        raise ValueError("need k >= 3")
    if s[0] != 0 or normalize(s).dilation != 1:
        raise ValueError("set must be in normal form")
    card2 = cardinality(hfold(s, 2))
    if card2 >= 3 * k - 3:
        return True
    b = card2 - (2 * k - 1)
    return s[-1] <= k + b - 1


def direct_bounds(a: SetLike, h: int) -> list[BoundReport]:
    """All applicable direct lower bounds for |hA|, on the normal form."""
    s = _as_intset(a, "direct_bounds")
    k = len(s)
    reports = [BoundReport("nathanson", nathanson_lower(h, k), h, k)]
    if k < 2 or h < 2:
        return reports
    a_last = normalize(s).normalized[-1]
    if h == 2 and k >= 3:
        reports.append(
            BoundReport("freiman_2a", freiman_2a_lower(k, a_last), h, k, a_last)
        )
    prev = cardinality(hfold(s, h - 1))
    reports.append(
        BoundReport("lev_step", lev_step_lower(h, k, a_last, prev), h, k, a_last)
    )
    reports.append(
        BoundReport("lev_chain", lev_chain_lower(h, k, a_last), h, k, a_last)
    )
    return reports
