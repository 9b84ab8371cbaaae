"""Canonical symbolic expressions for homotopy types.

An expression is a tree over a fixed set of atoms (spheres, Moore
spaces, Lie groups, loop spaces, mod-m loop spaces, mapping spaces and a
few opaque fibers) joined by products, wedges and a localization tag.
Products and wedges are flattened and sorted by a fixed total order on
atoms, so two decompositions are "the same" exactly when their canonical
trees are equal.

Collapsing rules are deliberately minimal: the point is a unit for both
connectives, P^n(1) and the mod-1 loop space collapse to the point, and
nothing else is rewritten.  In particular a based loop space and its
basepoint component stay distinct atoms.

Text grammar (documented in docs/expression-grammar.md):

    S^4 v S^7                product: " x ", wedge: " v "
    P^5(25) v S^8 @ (5)      localization binds loosest
    G^1(S^4) x O^3[SU(4)] x O^7[SU(4)]
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .abelian import is_prime
from .tables import LieGroupId

__all__ = [
    "SpaceExpr",
    "Point",
    "Sphere",
    "Moore",
    "LieAtom",
    "Loop",
    "ModLoop",
    "MapStarY",
    "GaugeS4",
    "XFiber",
    "YCofiber",
    "Product",
    "Wedge",
    "Localized",
    "POINT",
    "sphere",
    "moore",
    "lie",
    "loop",
    "mod_loop",
    "map_star_y",
    "gauge_s4",
    "x_fiber",
    "y_cofiber",
    "product",
    "wedge",
    "localized",
]


class SpaceExpr:
    """Base class; all concrete expressions are frozen dataclasses."""

    def render(self) -> str:
        raise NotImplementedError

    def sort_key(self) -> tuple:
        raise NotImplementedError

    def to_json(self) -> dict:
        raise NotImplementedError

    def atoms(self):
        """Iterate over the leaf atoms of the tree."""
        yield self

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class Point(SpaceExpr):
    def render(self) -> str:
        return "*"

    def sort_key(self) -> tuple:
        return (9,)

    def to_json(self) -> dict:
        return {"type": "point"}


POINT = Point()


@dataclass(frozen=True)
class Sphere(SpaceExpr):
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("sphere dimension must be >= 1")

    def render(self) -> str:
        return f"S^{self.n}"

    def sort_key(self) -> tuple:
        return (7, self.n)

    def to_json(self) -> dict:
        return {"type": "sphere", "n": self.n}


@dataclass(frozen=True)
class Moore(SpaceExpr):
    """P^n(m): single reduced homology group Z_m in degree n-1."""

    n: int
    m: int

    def __post_init__(self) -> None:
        if self.n < 2 or self.m < 2:
            raise ValueError("Moore space needs n >= 2 and m >= 2")

    def render(self) -> str:
        return f"P^{self.n}({self.m})"

    def sort_key(self) -> tuple:
        return (6, self.n, self.m)

    def to_json(self) -> dict:
        return {"type": "moore", "n": self.n, "m": self.m}


@dataclass(frozen=True)
class LieAtom(SpaceExpr):
    group: LieGroupId

    def render(self) -> str:
        return str(self.group)

    def sort_key(self) -> tuple:
        return (1, self.group.family, self.group.n or 0)

    def to_json(self) -> dict:
        return {"type": "lie-group", "group": self.group.token()}


@dataclass(frozen=True)
class Loop(SpaceExpr):
    """O^n[X], or its basepoint component O^n_0[X] when component0 is set."""

    n: int
    inner: SpaceExpr
    component0: bool = False

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("loop degree must be >= 1")

    def render(self) -> str:
        sub = "_0" if self.component0 else ""
        return f"O^{self.n}{sub}[{self.inner.render()}]"

    def sort_key(self) -> tuple:
        return (2, self.n, int(self.component0), self.inner.sort_key())

    def to_json(self) -> dict:
        return {
            "type": "loop",
            "n": self.n,
            "component0": self.component0,
            "inner": self.inner.to_json(),
        }


@dataclass(frozen=True)
class ModLoop(SpaceExpr):
    """The mod-m loop space O^n[G]{m}: maps from P^{n+1}(m) to BG.

    It is the fiber of the m-th power map on the n-fold loop space of G.
    """

    n: int
    group: LieGroupId
    modulus: int
    component0: bool = False

    def __post_init__(self) -> None:
        if self.n < 1 or self.modulus < 2:
            raise ValueError("mod loop space needs n >= 1 and modulus >= 2")

    def render(self) -> str:
        sub = "_0" if self.component0 else ""
        return f"O^{self.n}{sub}[{self.group}]{{{self.modulus}}}"

    def sort_key(self) -> tuple:
        return (
            3,
            self.n,
            int(self.component0),
            self.group.family,
            self.group.n or 0,
            self.modulus,
        )

    def to_json(self) -> dict:
        return {
            "type": "mod-loop",
            "n": self.n,
            "component0": self.component0,
            "group": self.group.token(),
            "modulus": self.modulus,
        }


@dataclass(frozen=True)
class MapStarY(SpaceExpr):
    """Map_*(Y_t, G) where Y_t is the three-cell complex S^3 u e^7
    attached by t times a generator of pi_6(S^3) = Z_12.

    The twist t is always the canonical representative in 0..6.  For
    t = 0 the space splits and the decomposition routines expand it, so
    an atom with t = 0 should not normally appear in results.
    """

    t: int
    group: LieGroupId

    def __post_init__(self) -> None:
        if not 0 <= self.t <= 6:
            raise ValueError("twist class must be the canonical value in 0..6")

    def render(self) -> str:
        return f"Map*(Y_{self.t}, {self.group})"

    def sort_key(self) -> tuple:
        return (4, self.t, self.group.family, self.group.n or 0)

    def to_json(self) -> dict:
        return {"type": "map-star-y", "t": self.t, "group": self.group.token()}


@dataclass(frozen=True)
class GaugeS4(SpaceExpr):
    """G^k(S^4): the gauge group over S^4 of the class-k bundle, kept opaque."""

    group: LieGroupId
    k: int

    def render(self) -> str:
        return f"G^{self.k}(S^4)"

    def sort_key(self) -> tuple:
        return (0, self.group.family, self.group.n or 0, self.k)

    def to_json(self) -> dict:
        return {"type": "gauge-s4", "group": self.group.token(), "k": self.k}


@dataclass(frozen=True)
class XFiber(SpaceExpr):
    """The opaque total space X_k of the fibration
    O^4_0[G]{m} -> X_k -> O^1[G]; known only through that fibration
    unless p^r divides k."""

    group: LieGroupId
    m: int
    k: int

    def render(self) -> str:
        return f"X_{self.k}"

    def sort_key(self) -> tuple:
        return (5, self.k, self.m, self.group.family, self.group.n or 0)

    def to_json(self) -> dict:
        return {
            "type": "x-fiber",
            "group": self.group.token(),
            "m": self.m,
            "k": self.k,
        }


@dataclass(frozen=True)
class YCofiber(SpaceExpr):
    """Y_t (or its suspension SY_t): cofiber of t times a generator of
    pi_6(S^3), with t the canonical twist in 0..6."""

    t: int
    suspended: bool = False

    def __post_init__(self) -> None:
        if not 0 <= self.t <= 6:
            raise ValueError("twist class must be the canonical value in 0..6")

    def render(self) -> str:
        prefix = "SY" if self.suspended else "Y"
        return f"{prefix}_{self.t}"

    def sort_key(self) -> tuple:
        return (8, int(self.suspended), self.t)

    def to_json(self) -> dict:
        return {"type": "y-cofiber", "t": self.t, "suspended": self.suspended}


def _render_operand(expr: SpaceExpr) -> str:
    if isinstance(expr, (Product, Wedge, Localized)):
        return f"({expr.render()})"
    return expr.render()


@dataclass(frozen=True)
class Product(SpaceExpr):
    factors: tuple[SpaceExpr, ...]

    def render(self) -> str:
        return " x ".join(_render_operand(f) for f in self.factors)

    def sort_key(self) -> tuple:
        return (10, tuple(f.sort_key() for f in self.factors))

    def to_json(self) -> dict:
        return {"type": "product", "factors": [f.to_json() for f in self.factors]}

    def atoms(self):
        for f in self.factors:
            yield from f.atoms()


@dataclass(frozen=True)
class Wedge(SpaceExpr):
    summands: tuple[SpaceExpr, ...]

    def render(self) -> str:
        return " v ".join(_render_operand(s) for s in self.summands)

    def sort_key(self) -> tuple:
        return (11, tuple(s.sort_key() for s in self.summands))

    def to_json(self) -> dict:
        return {"type": "wedge", "summands": [s.to_json() for s in self.summands]}

    def atoms(self):
        for s in self.summands:
            yield from s.atoms()


@dataclass(frozen=True)
class Localized(SpaceExpr):
    """A p-local homotopy type; rendered with the loosest-binding @ (p)."""

    p: int
    inner: SpaceExpr

    def render(self) -> str:
        return f"{self.inner.render()} @ ({self.p})"

    def sort_key(self) -> tuple:
        return (12, self.p, self.inner.sort_key())

    def to_json(self) -> dict:
        return {"type": "localized", "p": self.p, "inner": self.inner.to_json()}

    def atoms(self):
        yield from self.inner.atoms()


# Canonical constructors.  Use these, not the dataclasses, when building
# expressions: they apply the collapsing rules and the sort order.


def sphere(n: int) -> SpaceExpr:
    return Sphere(n)


def moore(n: int, m: int) -> SpaceExpr:
    """P^n(m); the degree-1 attaching map gives a contractible space."""
    if m == 1:
        return POINT
    return Moore(n, m)


def lie(group: LieGroupId) -> SpaceExpr:
    return LieAtom(group)


def loop(n: int, inner: SpaceExpr, component0: bool = False) -> SpaceExpr:
    if isinstance(inner, Point):
        return POINT
    return Loop(n, inner, component0)


def mod_loop(
    n: int, group: LieGroupId, modulus: int, component0: bool = False
) -> SpaceExpr:
    """O^n[G]{m}; modulus 1 collapses to the point."""
    if modulus == 1:
        return POINT
    return ModLoop(n, group, modulus, component0)


def map_star_y(t: int, group: LieGroupId) -> SpaceExpr:
    return MapStarY(t, group)


def gauge_s4(group: LieGroupId, k: int) -> SpaceExpr:
    return GaugeS4(group, k)


def x_fiber(group: LieGroupId, m: int, k: int) -> SpaceExpr:
    return XFiber(group, m, k)


def y_cofiber(t: int, suspended: bool = False) -> SpaceExpr:
    return YCofiber(t, suspended)


def _flatten(parts, connective) -> list[SpaceExpr]:
    out: list[SpaceExpr] = []
    for part in parts:
        if isinstance(part, connective):
            inner = part.factors if connective is Product else part.summands
            out.extend(_flatten(inner, connective))
        elif isinstance(part, Point):
            continue
        else:
            out.append(part)
    return out


def product(*factors: SpaceExpr) -> SpaceExpr:
    """Flattened, sorted product; the point is the unit."""
    flat = sorted(_flatten(factors, Product), key=lambda e: e.sort_key())
    if not flat:
        return POINT
    if len(flat) == 1:
        return flat[0]
    return Product(tuple(flat))


def wedge(*summands: SpaceExpr) -> SpaceExpr:
    """Flattened, sorted wedge; the point is the unit."""
    flat = sorted(_flatten(summands, Wedge), key=lambda e: e.sort_key())
    if not flat:
        return POINT
    if len(flat) == 1:
        return flat[0]
    return Wedge(tuple(flat))


def localized(p: int, inner: SpaceExpr) -> SpaceExpr:
    """Tag an expression as p-local.  Idempotent at the same prime."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if isinstance(inner, Point):
        return POINT
    if isinstance(inner, Localized):
        if inner.p == p:
            return inner
        raise ValueError(
            f"expression is already local at {inner.p}, cannot localize at {p}"
        )
    return Localized(p, inner)
