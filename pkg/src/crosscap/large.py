"""Large path components over region ranges.

A range of consecutive regions is written ``S_{l,m}`` (puncture regions
``l..m``), extended by the first crosscap region (``S'_{l,1}``) or by both
crosscap regions (``S'_{l,2}``).  A component of the range is *large* when
it clears the range entirely on one side:

* large over/under components span the range above/below the diameter;
* large right loops anchor on the left arc ``beta_l`` and dip to the
  diameter only past the last puncture (or, in the crosscap ranges, wrap
  the crosscap without entering it);
* large left loops anchor on the right arc and turn around in the first
  region of the range.

The counts are min-formulas over single-region counts; the minimum over an
empty index set is plus infinity, which makes the boundary cases uniform
(a single region's loops are all large in the range consisting of itself,
and every count touching ``S_0`` vanishes because ``S_0`` has no above,
below or right-loop components).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import inf

from .components import ComponentProfile
from .errors import InvalidRangeError

__all__ = [
    "RegionRange",
    "LargeComponentCounts",
    "large_over_under",
    "crosscap_over_under",
    "large_right",
    "large_left",
    "counts_for_range",
]


@dataclass(frozen=True)
class RegionRange:
    """``S_{l,m}`` when ``crosscap == 0``, else ``S'_{l,crosscap}``."""

    l: int
    m: int = 0
    crosscap: int = 0

    def __post_init__(self):
        if self.crosscap not in (0, 1, 2):
            raise InvalidRangeError(f"crosscap tag must be 0, 1 or 2, got {self.crosscap}")
        if self.l < 0:
            raise InvalidRangeError(f"lower index must be >= 0, got {self.l}")
        if self.crosscap == 0 and self.m < self.l:
            raise InvalidRangeError(f"empty range S_({self.l},{self.m})")

    @classmethod
    def punctures(cls, l: int, m: int) -> "RegionRange":
        return cls(l=l, m=m, crosscap=0)

    @classmethod
    def through_first(cls, l: int) -> "RegionRange":
        return cls(l=l, crosscap=1)

    @classmethod
    def through_second(cls, l: int) -> "RegionRange":
        return cls(l=l, crosscap=2)

    def check(self, n: int):
        if self.crosscap == 0:
            if self.m > n - 1:
                raise InvalidRangeError(f"S_(l,m) needs m <= {n - 1}, got m={self.m}")
        elif self.l > n:
            raise InvalidRangeError(f"lower index must be <= {n}, got {self.l}")


@dataclass(frozen=True)
class LargeComponentCounts:
    """The four large counts of one range (``None`` where undefined).

    Over/under and left loops are undefined for ``S'_{l,2}``: that range has
    no right boundary arc to span to, and no left loops exist there.
    """

    over: int | None
    under: int | None
    right_loops: int
    left_loops: int | None


def _min_above(p: ComponentProfile, l: int, m: int) -> float:
    """``min(A_l..A_m)`` with the empty-range and ``S_0`` conventions."""
    if l == 0:
        return 0
    if l > m:
        return inf
    return min(p.above[l - 1 : m])


def _min_below(p: ComponentProfile, l: int, m: int) -> float:
    if l == 0:
        return 0
    if l > m:
        return inf
    return min(p.below[l - 1 : m])


def _check_puncture_range(p: ComponentProfile, l: int, m: int):
    if not 0 <= l <= m <= p.n - 1:
        raise InvalidRangeError(f"need 0 <= l <= m <= {p.n - 1}, got l={l}, m={m}")


def large_over_under(p: ComponentProfile, l: int, m: int) -> tuple[int, int]:
    """Large over/under counts of ``S_{l,m}``; both zero when ``l == 0``."""
    _check_puncture_range(p, l, m)
    return int(_min_above(p, l, m)), int(_min_below(p, l, m))


def crosscap_over_under(p: ComponentProfile, l: int) -> tuple[int, int]:
    """Large over/under counts of ``S'_{l,1}``."""
    if not 0 <= l <= p.n:
        raise InvalidRangeError(f"need 0 <= l <= {p.n}, got l={l}")
    over = min(_min_above(p, l, p.n - 1), p.cross1_above)
    under = min(_min_below(p, l, p.n - 1), p.cross1_below)
    return int(over), int(under)


def _loops_right(p: ComponentProfile, k: int) -> int:
    """Right loops of puncture region ``S_k`` (``b_k^+``)."""
    return p.loops[k - 1] if p.sides[k - 1] == "right" else 0


def _loops_left(p: ComponentProfile, k: int) -> int:
    return p.loops[k - 1] if p.sides[k - 1] == "left" else 0


def large_right(p: ComponentProfile, rng: RegionRange) -> int:
    """Large right loop count of the range."""
    rng.check(p.n)
    l = rng.l
    if rng.crosscap == 0:
        m = rng.m
        _check_puncture_range(p, l, m)
        if l == 0:
            return 0
        cap = min(
            _min_above(p, l, m - 1) - _min_above(p, l, m),
            _min_below(p, l, m - 1) - _min_below(p, l, m),
            _loops_right(p, m),
        )
        return max(0, int(cap))
    if rng.crosscap == 1:
        over, under = crosscap_over_under(p, l)
        cap = min(
            _min_above(p, l, p.n - 1) - over,
            _min_below(p, l, p.n - 1) - under,
            p.right_noncore_loops,
        )
        return max(0, int(cap))
    over, under = crosscap_over_under(p, l)
    return max(0, min(over, under, p.cross2_noncore_loops))


def large_left(p: ComponentProfile, rng: RegionRange) -> int:
    """Large left loop count of the range (always 0 for ``S'_{l,2}``)."""
    rng.check(p.n)
    l = rng.l
    if rng.crosscap == 0:
        m = rng.m
        _check_puncture_range(p, l, m)
        if l == 0:
            cap = min(_min_above(p, 1, m), _min_below(p, 1, m), p.s0_loops)
        else:
            cap = min(
                _min_above(p, l + 1, m) - _min_above(p, l, m),
                _min_below(p, l + 1, m) - _min_below(p, l, m),
                _loops_left(p, l),
            )
        return max(0, int(cap))
    if rng.crosscap == 1:
        if l == 0:
            o1, u1 = crosscap_over_under(p, 1)
            cap = min(o1, u1, p.s0_loops)
        elif l == p.n:  # single-region range: its own non-core left loops
            cap = p.cross1_noncore_loops if p.cross1_side == "left" else 0
        else:
            over, under = crosscap_over_under(p, l)
            o1, u1 = crosscap_over_under(p, l + 1)
            cap = min(o1 - over, u1 - under, _loops_left(p, l))
        return max(0, int(cap))
    return 0


def counts_for_range(p: ComponentProfile, rng: RegionRange) -> LargeComponentCounts:
    """All large counts of one range, bundled for inspection."""
    rng.check(p.n)
    if rng.crosscap == 0:
        over, under = large_over_under(p, rng.l, rng.m)
        return LargeComponentCounts(
            over=over,
            under=under,
            right_loops=large_right(p, rng),
            left_loops=large_left(p, rng),
        )
    if rng.crosscap == 1:
        over, under = crosscap_over_under(p, rng.l)
        return LargeComponentCounts(
            over=over,
            under=under,
            right_loops=large_right(p, rng),
            left_loops=large_left(p, rng),
        )
    return LargeComponentCounts(
        over=None,
        under=None,
        right_loops=large_right(p, rng),
        left_loops=None,
    )
