"""Bracketing and bisection primitives shared by the secular solvers.

Both bound-state conditions in this package are smooth scalar functions
whose zeros are isolated by a fixed-step sign scan and then polished by
bisection.  Bisection always runs the interval down to floating-point
exhaustion: the work is trivial (one function call per halving) and the
callers promise residual guarantees much tighter than any loose width
tolerance would deliver.
"""

from collections.abc import Callable, Sequence

Bracket = tuple[float, float]


def scan_sign_changes(f: Callable[[float], float], xs: Sequence[float]) -> list[Bracket]:
    """Return brackets (lo, hi) where ``f`` changes sign along ``xs``.

    A node where ``f`` is exactly zero yields the degenerate bracket
    ``(x, x)``.  Brackets are returned in grid order, so for an
    ascending grid the last bracket contains the largest root.
    """
    vals = [f(x) for x in xs]
    brackets: list[Bracket] = []
    for i, v in enumerate(vals):
        if v == 0.0:
            brackets.append((xs[i], xs[i]))
        elif i + 1 < len(vals) and vals[i + 1] != 0.0 and (v < 0.0) != (vals[i + 1] < 0.0):
            brackets.append((xs[i], xs[i + 1]))
    return brackets


def refine_bracket(f: Callable[[float], float], lo: float, hi: float) -> float:
    """Bisect a sign change of ``f`` in [lo, hi] to floating-point width.

    Assumes ``f(lo)`` and ``f(hi)`` straddle zero (a degenerate bracket
    with ``lo == hi`` is returned as-is).  Stops when the midpoint no
    longer lies strictly inside the interval, i.e. when no closer
    representable point exists.
    """
    if lo == hi:
        return lo
    f_lo = f(lo)
    if f_lo == 0.0:
        return lo
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        f_mid = f(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid < 0.0) == (f_lo < 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
