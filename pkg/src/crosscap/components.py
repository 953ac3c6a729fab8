"""Per-region path components of a minimal representative, and their gluing.

Cutting a minimal representative along the vertical arcs decomposes it into
path components, finitely many per region.  The regions, left to right:

* ``S_0`` -- between the boundary and ``beta_1``, holding puncture 1; its
  components are nested loops anchored on ``beta_1``.
* ``S_i`` (``1 <= i <= n-1``) -- between ``beta_i`` and ``beta_{i+1}``,
  holding puncture ``i+1``; components run above or below the puncture, or
  loop around it (right loops anchor on ``beta_i``, left on ``beta_{i+1}``).
* the first crosscap region -- between ``beta_n`` and ``beta_{n+1}``;
  components run above or below the crosscap, pass straight through it
  (crossing the core once), or loop around/through it.  Loops that enter
  the crosscap are core loops; the rest are non-core loops.
* the second crosscap region -- right of ``beta_{n+1}``; only right loops
  (core or non-core) live there.

:func:`profile` computes how many components of each species the counts
force, and :func:`reconstruct` produces the unique crossing-free gluing of
those components, slot by slot along every arc.  Arc slots are numbered
top to bottom; strands passing through a crosscap come out in reversed
transverse order, which is what makes the surface non-orientable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .coords import TriangleCoordinates
from .errors import EndpointMismatchError, ParityViolationError

__all__ = [
    "ABOVE",
    "BELOW",
    "LOOP_RIGHT",
    "LOOP_LEFT",
    "STRAIGHT_CORE",
    "CORE_LOOP",
    "NONCORE_LOOP",
    "CORE_CURVE",
    "BOUNDING_CURVE",
    "NonprimitiveCurves",
    "ComponentProfile",
    "half_differences",
    "profile",
    "Link",
    "GluingDescription",
    "reconstruct",
]

# Species tags. The region index disambiguates which crosscap or puncture a
# tag refers to: regions 0..n-1 are S_0..S_{n-1}, region n is the first
# crosscap region, region n+1 the second.
ABOVE = "above"
BELOW = "below"
LOOP_RIGHT = "right_loop"
LOOP_LEFT = "left_loop"
STRAIGHT_CORE = "straight_core"
CORE_LOOP = "core_loop"
NONCORE_LOOP = "noncore_loop"
CORE_CURVE = "core_curve"
BOUNDING_CURVE = "bounding_curve"


def half_differences(tri: TriangleCoordinates | Sequence[int]) -> tuple[int, ...]:
    """``b_i = (beta_i - beta_{i+1}) / 2``, exactly.

    Accepts a :class:`TriangleCoordinates` or a bare ``beta`` sequence;
    raises :class:`ParityViolationError` on odd differences.
    """
    beta = tri.beta if isinstance(tri, TriangleCoordinates) else tuple(tri)
    out = []
    for i in range(len(beta) - 1):
        d = beta[i] - beta[i + 1]
        if d % 2:
            raise ParityViolationError(
                f"beta_{i + 1}={beta[i]} and beta_{i + 2}={beta[i + 1]} "
                "differ by an odd amount"
            )
        out.append(d // 2)
    return tuple(out)


@dataclass(frozen=True)
class NonprimitiveCurves:
    """Whole non-primitive components decoded from negative ``c`` entries."""

    core1: int
    bounding1: int
    core2: int
    bounding2: int

    @classmethod
    def from_c(cls, c1: int, c2: int) -> "NonprimitiveCurves":
        def decode(ck: int) -> tuple[int, int]:
            if ck >= 0:
                return 0, 0
            return (-ck) % 2, (-ck) // 2

        k1, d1 = decode(c1)
        k2, d2 = decode(c2)
        return cls(core1=k1, bounding1=d1, core2=k2, bounding2=d2)

    def any(self) -> bool:
        return bool(self.core1 or self.bounding1 or self.core2 or self.bounding2)


def _side(b: int) -> str:
    if b > 0:
        return "right"
    if b < 0:
        return "left"
    return "none"


@dataclass(frozen=True)
class ComponentProfile:
    """Exact species counts per region for one minimal representative.

    Tuple fields are indexed by ``k = 0..n-2`` for the puncture regions
    ``S_1..S_{n-1}``.  ``beta`` is carried along because it fixes the slot
    counts of the gluing.
    """

    n: int
    beta: tuple[int, ...]
    s0_loops: int
    above: tuple[int, ...]
    below: tuple[int, ...]
    loops: tuple[int, ...]
    sides: tuple[str, ...]
    cross1_above: int
    cross1_below: int
    straight_cores: int
    cross1_core_loops: int
    cross1_noncore_loops: int
    cross1_side: str
    cross2_core_loops: int
    cross2_noncore_loops: int
    nonprimitive: NonprimitiveCurves

    @property
    def right_noncore_loops(self) -> int:
        """Non-core loops anchored on ``beta_n`` (zero when loops sit left)."""
        return self.cross1_noncore_loops if self.cross1_side == "right" else 0

    def region_above(self, region: int) -> int:
        """Above count for region ``1..n-1`` or the first crosscap (``n``)."""
        return self.cross1_above if region == self.n else self.above[region - 1]

    def region_below(self, region: int) -> int:
        return self.cross1_below if region == self.n else self.below[region - 1]

    def endpoints_on_arc(self, arc: int) -> tuple[int, int]:
        """Component endpoints on arc ``arc`` (0-based) from its two sides."""
        n = self.n
        if arc == 0:
            left = 2 * self.s0_loops
        elif arc < n:
            k = arc - 1  # region S_arc on the left
            left = (
                self.above[k]
                + self.below[k]
                + 2 * (self.loops[k] if self.sides[k] == "left" else 0)
            )
        else:
            left = (
                self.cross1_above
                + self.cross1_below
                + self.straight_cores
                + 2
                * (
                    self.cross1_core_loops + self.cross1_noncore_loops
                    if self.cross1_side == "left"
                    else 0
                )
            )
        if arc < n - 1:
            k = arc  # region S_{arc+1} on the right
            right = (
                self.above[k]
                + self.below[k]
                + 2 * (self.loops[k] if self.sides[k] == "right" else 0)
            )
        elif arc == n - 1:
            right = (
                self.cross1_above
                + self.cross1_below
                + self.straight_cores
                + 2
                * (
                    self.cross1_core_loops + self.cross1_noncore_loops
                    if self.cross1_side == "right"
                    else 0
                )
            )
        else:
            right = 2 * (self.cross2_core_loops + self.cross2_noncore_loops)
        return left, right

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "beta": list(self.beta),
            "s0_loops": self.s0_loops,
            "regions": [
                {
                    "region": k + 1,
                    "above": self.above[k],
                    "below": self.below[k],
                    "loops": self.loops[k],
                    "side": self.sides[k],
                }
                for k in range(self.n - 1)
            ],
            "crosscap1": {
                "above": self.cross1_above,
                "below": self.cross1_below,
                "straight_cores": self.straight_cores,
                "core_loops": self.cross1_core_loops,
                "noncore_loops": self.cross1_noncore_loops,
                "side": self.cross1_side,
            },
            "crosscap2": {
                "core_loops": self.cross2_core_loops,
                "noncore_loops": self.cross2_noncore_loops,
            },
            "nonprimitive": {
                "core1": self.nonprimitive.core1,
                "bounding1": self.nonprimitive.bounding1,
                "core2": self.nonprimitive.core2,
                "bounding2": self.nonprimitive.bounding2,
            },
        }


def profile(tri: TriangleCoordinates) -> ComponentProfile:
    """Species counts forced by the crossing counts ``tri``.

    ``TriangleCoordinates`` construction already rejects counts that no
    multicurve realizes, so this never fails on an existing instance.
    """
    n = tri.n
    b = tri.half_differences()
    above = tuple(tri.alpha[2 * k] - abs(b[k]) for k in range(n - 1))
    below = tuple(tri.alpha[2 * k + 1] - abs(b[k]) for k in range(n - 1))
    bn = b[-1]
    c1p = max(tri.c1, 0)
    c2p = max(tri.c2, 0)
    psi = max(c1p - abs(bn), 0)
    core1 = min(abs(bn), c1p)
    noncore1 = max(abs(bn) - c1p, 0)
    cross1_above = tri.gamma // 2 - psi - abs(bn)
    cross1_below = max(tri.beta[-2], tri.beta[-1]) - tri.gamma // 2 - abs(bn)
    return ComponentProfile(
        n=n,
        beta=tri.beta,
        s0_loops=tri.beta[0] // 2,
        above=above,
        below=below,
        loops=tuple(abs(x) for x in b[: n - 1]),
        sides=tuple(_side(x) for x in b[: n - 1]),
        cross1_above=cross1_above,
        cross1_below=cross1_below,
        straight_cores=psi,
        cross1_core_loops=core1,
        cross1_noncore_loops=noncore1,
        cross1_side=_side(bn),
        cross2_core_loops=c2p,
        cross2_noncore_loops=tri.beta[-1] // 2 - c2p,
        nonprimitive=NonprimitiveCurves.from_c(tri.c1, tri.c2),
    )


@dataclass(frozen=True)
class Link:
    """One path component: a species tag plus its arc slots.

    ``slots`` holds ``(arc, slot)`` pairs, 0-based, slots counted from the
    top of the arc; pass-through components have one slot on each
    neighbouring arc, loops two slots on their anchor arc, and whole
    non-primitive curves none.
    """

    index: int
    region: int
    species: str
    slots: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class GluingDescription:
    """The unique crossing-free assembly of a profile's components.

    ``left_links[arc][slot]`` / ``right_links[arc][slot]`` give the link
    occupying a slot from the region on either side of the arc; a strand of
    the multicurve continues across an arc through the same slot number.
    """

    n: int
    arc_sizes: tuple[int, ...]
    links: tuple[Link, ...]
    left_links: tuple[tuple[int, ...], ...]
    right_links: tuple[tuple[int, ...], ...]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "arc_strands": list(self.arc_sizes),
            "links": [
                {
                    "id": lk.index,
                    "region": lk.region,
                    "species": lk.species,
                    "slots": [list(s) for s in lk.slots],
                }
                for lk in self.links
            ],
        }


def reconstruct(prof: ComponentProfile) -> GluingDescription:
    """Glue the profile's components into their minimal position.

    Layout per arc, top to bottom: above components, then loop arms nested
    outside-in (non-core outside core at a crosscap), straight cores at the
    diameter, then the mirror image below.  A loop around a puncture nests:
    its outermost upper arm pairs with its outermost lower arm.  A loop
    through a crosscap pairs its arms in parallel order instead, and
    straight cores come out of the crosscap in reversed order -- both are
    faces of the antipodal identification.
    """
    n = prof.n
    for arc in range(n + 1):
        left, right = prof.endpoints_on_arc(arc)
        if left != prof.beta[arc] or right != prof.beta[arc]:
            raise EndpointMismatchError(
                f"arc {arc + 1} has {prof.beta[arc]} slots but {left} endpoints "
                f"from the left and {right} from the right"
            )

    sizes = prof.beta
    left_tbl: list[list[int]] = [[-1] * s for s in sizes]
    right_tbl: list[list[int]] = [[-1] * s for s in sizes]
    links: list[Link] = []

    def add(region: int, species: str, slots: tuple[tuple[int, int], ...]):
        idx = len(links)
        links.append(Link(index=idx, region=region, species=species, slots=slots))
        for arc, slot in slots:
            tbl = left_tbl if region == arc else right_tbl
            if not 0 <= slot < sizes[arc] or tbl[arc][slot] != -1:
                raise EndpointMismatchError(
                    f"slot {slot} on arc {arc + 1} assigned twice"
                )
            tbl[arc][slot] = idx

    for j in range(prof.s0_loops):
        add(0, LOOP_LEFT, ((0, j), (0, sizes[0] - 1 - j)))

    for region in range(1, n):
        k = region - 1
        above, below = prof.above[k], prof.below[k]
        loops, side = prof.loops[k], prof.sides[k]
        la, ra = region - 1, region
        for j in range(above):
            add(region, ABOVE, ((la, j), (ra, j)))
        for j in range(below):
            add(region, BELOW, ((la, sizes[la] - 1 - j), (ra, sizes[ra] - 1 - j)))
        if side == "right":
            for j in range(loops):
                add(region, LOOP_RIGHT, ((la, above + j), (la, above + 2 * loops - 1 - j)))
        elif side == "left":
            for j in range(loops):
                add(region, LOOP_LEFT, ((ra, above + j), (ra, above + 2 * loops - 1 - j)))

    # First crosscap region (index n, between arcs n-1 and n).
    above, below = prof.cross1_above, prof.cross1_below
    psi = prof.straight_cores
    core, noncore = prof.cross1_core_loops, prof.cross1_noncore_loops
    la, ra = n - 1, n
    for j in range(above):
        add(n, ABOVE, ((la, j), (ra, j)))
    for j in range(below):
        add(n, BELOW, ((la, sizes[la] - 1 - j), (ra, sizes[ra] - 1 - j)))
    loop_arc = ra if prof.cross1_side == "left" else la
    other_arc = la if loop_arc == ra else ra
    for j in range(psi):
        add(
            n,
            STRAIGHT_CORE,
            ((loop_arc, above + noncore + core + j), (other_arc, above + psi - 1 - j)),
        )
    wrap_base = above + noncore + core + psi
    for j in range(core):
        add(n, CORE_LOOP, ((loop_arc, above + noncore + j), (loop_arc, wrap_base + j)))
    for j in range(noncore):
        add(
            n,
            NONCORE_LOOP,
            ((loop_arc, above + j), (loop_arc, wrap_base + core + noncore - 1 - j)),
        )

    # Second crosscap region (index n+1, right of arc n).
    core2, noncore2 = prof.cross2_core_loops, prof.cross2_noncore_loops
    for j in range(noncore2):
        add(n + 1, NONCORE_LOOP, ((n, j), (n, sizes[n] - 1 - j)))
    for j in range(core2):
        add(n + 1, CORE_LOOP, ((n, noncore2 + j), (n, noncore2 + core2 + j)))

    for j in range(prof.nonprimitive.core1):
        add(n, CORE_CURVE, ())
    for j in range(prof.nonprimitive.bounding1):
        add(n, BOUNDING_CURVE, ())
    for j in range(prof.nonprimitive.core2):
        add(n + 1, CORE_CURVE, ())
    for j in range(prof.nonprimitive.bounding2):
        add(n + 1, BOUNDING_CURVE, ())

    for arc in range(n + 1):
        if -1 in left_tbl[arc] or -1 in right_tbl[arc]:
            raise EndpointMismatchError(f"unfilled slot on arc {arc + 1}")

    return GluingDescription(
        n=n,
        arc_sizes=sizes,
        links=tuple(links),
        left_links=tuple(tuple(col) for col in left_tbl),
        right_links=tuple(tuple(col) for col in right_tbl),
    )


def _paper_literal_crosscap_above_below(tri: TriangleCoordinates) -> tuple[int, int]:
    """Uncorrected above/below counts at the first crosscap, test-only.

    These are the published forms without the factor-of-two normalization;
    they double-count and are kept solely so the regression suite can
    document that the corrected forms are load-bearing.
    """
    b = tri.half_differences()
    bn = b[-1]
    psi = max(max(tri.c1, 0) - abs(bn), 0)
    t = tri.gamma - psi - max(tri.beta[-2], tri.beta[-1])
    mx = max(tri.beta[-2], tri.beta[-1])
    return (
        t - psi + mx - 2 * abs(bn),
        -t - psi + mx - 2 * abs(bn),
    )
