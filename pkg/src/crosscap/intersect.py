"""Elementary curves and geometric intersection numbers with a multicurve.

The elementary curves either bound a disk meeting the diameter twice and no
crosscap, or pass through crosscaps off the diameter:

* ``C_{i,j}`` (``1 <= i < j <= n``) bounds a disk around punctures ``i..j``;
* ``C'_{i,1}`` (``1 <= i <= n``) around punctures ``i..n`` plus the first
  crosscap;
* ``C'_{i,2}`` (``1 < i <= n``) around punctures ``i..n`` plus both
  crosscaps;
* ``C`` around both crosscaps and no puncture;
* ``D`` passes once through each crosscap, missing the diameter;
* the core curve of a crosscap and the curve bounding it (non-primitive
  kinds, cataloged but with no intersection formula).

Each component of the multicurve crosses a disk-bounding curve either twice
or not at all; the ones missing it are exactly the large components of the
matching region range, so the count is the strand total minus twice the
large counts.  Crossings with ``D`` reduce to the ``C`` count and the two
core crossing numbers.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import large as _large
from .components import ComponentProfile, profile
from .coords import DynnikovCoordinates, TriangleCoordinates
from .errors import (
    InvalidParameterError,
    NonprimitiveContentError,
    UnsupportedCurveError,
)
from .inversion import invert
from .large import RegionRange

__all__ = [
    "ElementaryCurve",
    "catalog",
    "parse_curve",
    "elementary_coords",
    "intersect_elementary",
    "elementary_values",
]

_KINDS = ("Cij", "Cprime1", "Cprime2", "C", "D", "core", "bounding")


@dataclass(frozen=True)
class ElementaryCurve:
    """Catalog entry.  ``i``/``j`` are meaningful only for the kinds that
    take parameters (``j`` doubles as the crosscap index for the
    non-primitive kinds)."""

    kind: str
    i: int = 0
    j: int = 0

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise InvalidParameterError(f"unknown curve kind {self.kind!r}")
        if self.kind == "Cij" and not 1 <= self.i < self.j:
            raise InvalidParameterError(f"C_(i,j) needs 1 <= i < j, got ({self.i},{self.j})")
        if self.kind == "Cprime1" and self.i < 1:
            raise InvalidParameterError("C'_(i,1) needs i >= 1")
        if self.kind == "Cprime2" and self.i < 2:
            raise InvalidParameterError("C'_(i,2) needs i >= 2")
        if self.kind in ("core", "bounding") and self.j not in (1, 2):
            raise InvalidParameterError("crosscap index must be 1 or 2")

    @classmethod
    def Cij(cls, i: int, j: int) -> "ElementaryCurve":
        return cls(kind="Cij", i=i, j=j)

    @classmethod
    def Cprime1(cls, i: int) -> "ElementaryCurve":
        return cls(kind="Cprime1", i=i)

    @classmethod
    def Cprime2(cls, i: int) -> "ElementaryCurve":
        return cls(kind="Cprime2", i=i)

    @classmethod
    def C(cls) -> "ElementaryCurve":
        return cls(kind="C")

    @classmethod
    def D(cls) -> "ElementaryCurve":
        return cls(kind="D")

    @classmethod
    def core(cls, k: int) -> "ElementaryCurve":
        return cls(kind="core", j=k)

    @classmethod
    def bounding(cls, k: int) -> "ElementaryCurve":
        return cls(kind="bounding", j=k)

    @property
    def nonprimitive(self) -> bool:
        return self.kind in ("core", "bounding")

    def label(self) -> str:
        """Human-readable name, e.g. ``C_{2,3}`` or ``C'_{1,1}``."""
        if self.kind == "Cij":
            return f"C_{{{self.i},{self.j}}}"
        if self.kind == "Cprime1":
            return f"C'_{{{self.i},1}}"
        if self.kind == "Cprime2":
            return f"C'_{{{self.i},2}}"
        if self.kind == "core":
            return f"c_{self.j}"
        if self.kind == "bounding":
            return f"d_{self.j}"
        return self.kind

    def spec(self) -> str:
        """Machine-readable form accepted by :func:`parse_curve`."""
        if self.kind == "Cij":
            return f"Cij:{self.i},{self.j}"
        if self.kind in ("Cprime1", "Cprime2"):
            return f"{self.kind}:{self.i}"
        if self.kind in ("core", "bounding"):
            return f"{self.kind}:{self.j}"
        return self.kind

    def check(self, n: int):
        """Validate the parameters against the puncture count."""
        if self.kind == "Cij" and self.j > n:
            raise InvalidParameterError(f"C_(i,j) needs j <= {n}, got j={self.j}")
        if self.kind in ("Cprime1", "Cprime2") and self.i > n:
            raise InvalidParameterError(f"i must be <= {n}, got i={self.i}")


def parse_curve(text: str) -> ElementaryCurve:
    """Parse ``"Cij:2,3"``, ``"Cprime1:1"``, ``"C"``, ``"D"``, ``"core:1"`` ..."""
    head, _, tail = text.strip().partition(":")
    if head == "Cij":
        parts = tail.split(",")
        if len(parts) != 2:
            raise InvalidParameterError(f"Cij needs two indices, got {text!r}")
        return ElementaryCurve.Cij(int(parts[0]), int(parts[1]))
    if head in ("Cprime1", "Cprime2"):
        if not tail:
            raise InvalidParameterError(f"{head} needs an index, got {text!r}")
        return ElementaryCurve(kind=head, i=int(tail))
    if head in ("core", "bounding"):
        if not tail:
            raise InvalidParameterError(f"{head} needs a crosscap index, got {text!r}")
        return ElementaryCurve(kind=head, j=int(tail))
    if head in ("C", "D") and not tail:
        return ElementaryCurve(kind=head)
    raise InvalidParameterError(f"cannot parse curve spec {text!r}")


def catalog(n: int, include_nonprimitive: bool = False) -> tuple[ElementaryCurve, ...]:
    """Every elementary curve on the surface with ``n`` punctures."""
    curves = [
        ElementaryCurve.Cij(i, j) for i in range(1, n) for j in range(i + 1, n + 1)
    ]
    curves += [ElementaryCurve.Cprime1(i) for i in range(1, n + 1)]
    curves += [ElementaryCurve.Cprime2(i) for i in range(2, n + 1)]
    curves += [ElementaryCurve.C(), ElementaryCurve.D()]
    if include_nonprimitive:
        curves += [ElementaryCurve.core(k) for k in (1, 2)]
        curves += [ElementaryCurve.bounding(k) for k in (1, 2)]
    return tuple(curves)


def elementary_coords(curve: ElementaryCurve, n: int) -> DynnikovCoordinates:
    """The ``(a; b; t; c1, c2)`` vector of an elementary curve."""
    curve.check(n)
    a = (0,) * (n - 1)
    b = [0] * n
    c1 = c2 = 0
    if curve.kind == "Cij":
        if curve.i > 1:
            b[curve.i - 2] = -1
        b[curve.j - 2] = 1
    elif curve.kind == "Cprime1":
        if curve.i > 1:
            b[curve.i - 2] = -1
        b[n - 1] = 1
    elif curve.kind == "Cprime2":
        b[curve.i - 2] = -1
    elif curve.kind == "C":
        b[n - 1] = -1
    elif curve.kind == "D":
        b[n - 1] = -1
        c1 = c2 = 1
    elif curve.kind == "core":
        c1, c2 = (-1, 0) if curve.j == 1 else (0, -1)
    else:  # bounding
        c1, c2 = (-2, 0) if curve.j == 1 else (0, -2)
    return DynnikovCoordinates(n=n, a=a, b=tuple(b), t=0, c1=c1, c2=c2)


def _beta_left(tri: TriangleCoordinates, i: int) -> int:
    """``beta_{i-1}``, reading ``beta_0 = 0`` (no arc left of puncture 1)."""
    return tri.beta[i - 2] if i >= 2 else 0


def _value_from_triangle(
    tri: TriangleCoordinates, prof: ComponentProfile, curve: ElementaryCurve
) -> int:
    n = tri.n
    if curve.kind == "Cij":
        i, j = curve.i, curve.j
        rng = RegionRange.punctures(i - 1, j - 1)
        over, under = _large.large_over_under(prof, i - 1, j - 1)
        return (
            _beta_left(tri, i)
            + tri.beta[j - 1]
            - 2
            * (
                _large.large_right(prof, rng)
                + _large.large_left(prof, rng)
                + over
                + under
            )
        )
    if curve.kind == "Cprime1":
        i = curve.i
        rng = RegionRange.through_first(i - 1)
        over, under = _large.crosscap_over_under(prof, i - 1)
        return (
            _beta_left(tri, i)
            + tri.beta[n]
            - 2
            * (
                _large.large_right(prof, rng)
                + _large.large_left(prof, rng)
                + over
                + under
            )
        )
    if curve.kind == "Cprime2":
        i = curve.i
        rng = RegionRange.through_second(i - 1)
        return _beta_left(tri, i) - 2 * _large.large_right(prof, rng)
    if curve.kind == "C":
        rng = RegionRange.through_second(n)
        return tri.beta[n - 1] - 2 * _large.large_right(prof, rng)
    # D: both cases reduce to the C count and the core crossing numbers.
    with_c = _value_from_triangle(tri, prof, ElementaryCurve.C())
    if with_c == 0:
        return abs(tri.c1 - tri.c2)
    return with_c - tri.c1 - tri.c2


def intersect_elementary(coords: DynnikovCoordinates, curve: ElementaryCurve) -> int:
    """Geometric intersection number of the multicurve with one elementary
    curve.

    Non-primitive curve kinds are rejected (no formula exists for them), as
    are multicurves with negative ``c`` entries (the formulas consume plain
    crossing counts).
    """
    if curve.nonprimitive:
        raise UnsupportedCurveError(
            f"no intersection formula for non-primitive curve {curve.label()}"
        )
    if coords.c1 < 0 or coords.c2 < 0:
        raise NonprimitiveContentError(
            "multicurve carries whole non-primitive components "
            f"(c1={coords.c1}, c2={coords.c2}); intersection with them is undefined here"
        )
    curve.check(coords.n)
    tri = invert(coords)
    return _value_from_triangle(tri, profile(tri), curve)


def elementary_values(
    coords: DynnikovCoordinates,
    curves: tuple[ElementaryCurve, ...] | None = None,
) -> list[tuple[ElementaryCurve, int]]:
    """Intersection numbers with several curves, inverting only once.

    Defaults to the full in-scope catalog for the multicurve's ``n``.
    """
    if coords.c1 < 0 or coords.c2 < 0:
        raise NonprimitiveContentError(
            "multicurve carries whole non-primitive components"
        )
    if curves is None:
        curves = catalog(coords.n)
    for curve in curves:
        if curve.nonprimitive:
            raise UnsupportedCurveError(
                f"no intersection formula for non-primitive curve {curve.label()}"
            )
        curve.check(coords.n)
    tri = invert(coords)
    prof = profile(tri)
    return [(curve, _value_from_triangle(tri, prof, curve)) for curve in curves]
