"""d-divisible alpha-labelings of the cycles C_4k.

The path obtained by deleting [x_1, y_2k] gets the standard alpha_S-labeling
with S = (allowed set) minus c, where c is picked so that the closing
difference lands exactly on it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import LabelingError
from .graphs import build_cycle
from .labeling import Labeling, mv_counts, verify_d_divisible
from .hairy import close_with


@dataclass(frozen=True)
class CycleParams:
    k: int
    d: int
    c: int
    d_x: int
    d_y: int

    @property
    def e(self) -> int:
        return 4 * self.k

    @property
    def m(self) -> int:
        return self.e // self.d


def _check(k: int, d: int) -> int:
    if k < 1:
        raise LabelingError("invalid-spec", f"k must be positive, got {k}")
    if d < 1 or (4 * k) % d:
        raise LabelingError("not-admissible", f"d={d} does not divide e={4 * k}")
    return 4 * k // d


def cycle_closing_value(k: int, d: int) -> tuple[int, ...]:
    """The closing differences that make the standard labeling of C_4k close up.

    One value when m = 4k/d is even, two (both odd) when m is odd.
    """
    m = _check(k, d)
    if m % 2 == 0:
        return (2 * k + (d - 2) // 2,) if d % 2 == 0 else (2 * k + (d - 1) // 2,)
    return (2 * k + (d - 2) // 2, 2 * k + (d + 2) // 2)


def cycle_d_divisible(k: int, d: int, c: int | None = None) -> Labeling:
    """A d-divisible alpha-labeling of C_4k; ``c`` defaults to the smaller choice."""
    choices = cycle_closing_value(k, d)
    if c is None:
        c = choices[0]
    elif c not in choices:
        raise LabelingError("invalid-spec", f"c={c} is not one of {list(choices)} for k={k}, d={d}")
    g = build_cycle(4 * k)
    l = close_with(g, d, c)
    d_x, d_y = mv_counts(l)
    meta = {**l.meta, "k": k, "d_x": d_x, "d_y": d_y}
    l = l.replace(l.values, d=d, provenance=f"cycle C_{4 * k}, d={d}, c={c}", meta=meta)
    report = verify_d_divisible(l, d, require_alpha=True)
    if not report.holds:
        raise LabelingError("internal-contradiction", f"cycle construction failed: {report.failures}")
    return l


def cycle_params(l: Labeling) -> CycleParams:
    """Read the cycle parameters back off a labeling built here."""
    meta = l.meta
    return CycleParams(meta["k"], l.d, meta["c"], meta["d_x"], meta["d_y"])

