"""Homotopy decompositions and homotopy groups of gauge groups.

The decision rules implemented here:

* m = 0 (torsion-free base).  The unpointed gauge group of the class-k
  bundle splits as G^k(S^4) x Map_*(Y_t, G) and the pointed one as
  O^4[G] x Map_*(Y_t, G), where t is the canonical twist class of l
  mod 12.  For t = 0 the mapping space expands to O^3[G] x O^7[G].
  Pointed splittings do not depend on k.

* m >= 2, localized at a prime p >= 5.  If p does not divide m the
  total space is p-locally S^7 and the trivial-class gauge group splits
  as O^7[G] x G.  If v_p(m) = r >= 1 the looped gauge group splits as
  O^8_0[G] x X_k where X_k is the fiber of a fibration
  O^4_0[G]{m} -> X_k -> O^1[G]; X_k itself splits off O^1[G] exactly
  when p^r divides k.  The pointed gauge group of the trivial class
  splits as O^3[G]{p^r} x O^7[G], and after looping any class gives
  O^4[G]{p^r} x O^8[G].

* m = 1 (the base is S^7).  Gauge groups are compared through gcd
  rules coming from Samelson products: for SU(2) integrally, and for
  G2 / SU(3) at the localizations where the connecting map's order is
  known, classes k and k' give equivalent gauge groups exactly when
  (3, k) = (3, k').  Every other simple group admits a single bundle,
  whose gauge group splits as O^7[G] x G.

Everything opaque (G^k(S^4), Map_*(Y_t, G) with t != 0, X_k without
the divisibility) stays a first-class symbolic atom with a caveat; no
silent expansion is performed.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .abelian import (
    AbGroup,
    TRIVIAL,
    direct_sum,
    is_prime,
    localize,
    tensor_with_cyclic,
    tor_with_cyclic,
    vp,
)
from .bundles import BundleClass
from .errors import OutOfScopeError, UnknownValueError
from .manifolds import twist_class
from .spaces import (
    GaugeS4,
    LieAtom,
    Localized,
    Loop,
    MapStarY,
    ModLoop,
    Moore,
    Point,
    Product,
    SpaceExpr,
    Sphere,
    XFiber,
    gauge_s4,
    lie,
    localized,
    loop,
    map_star_y,
    mod_loop,
    product,
    x_fiber,
)
from .tables import LieGroupId, PiTable, default_table, pi6_moore, pi6_moore_source

__all__ = [
    "DecompositionResult",
    "GaugeQuery",
    "PiValue",
    "CoefficientGroup",
    "S7Decision",
    "Su5Decision",
    "decompose_unpointed_m0",
    "decompose_pointed_m0",
    "decompose_plocal",
    "s7_decompose_trivial",
    "pi_of_expr",
    "pi_with_coefficients",
    "pi_pointed_gauge_m0",
    "pi0_unpointed_gauge_m0",
    "pi_pointed_gauge_plocal",
    "pi0_unpointed_gauge_plocal",
    "s7_gauge_equivalent",
    "su5_gauge_equivalent_m0",
    "run_query",
]

TAG_UNPOINTED_M0 = "unpointed splitting over a torsion-free base"
TAG_POINTED_M0 = "pointed splitting over a torsion-free base"
TAG_PLOCAL_TRIVIAL = "p-local splitting for p prime to m, trivial class"
TAG_PLOCAL_LOOPED = "p-local splitting of the looped gauge group"
TAG_PLOCAL_POINTED = "p-local pointed splitting, trivial class"
TAG_PLOCAL_POINTED_LOOPED = "p-local splitting of the looped pointed gauge group"
TAG_S7_TRIVIAL = "gauge group of the unique bundle over S^7"
TAG_S7_GCD = "gcd rule for gauge groups over S^7"

_CAVEAT_GAUGE_S4 = (
    "G^k(S^4) is an opaque factor: the splitting reduces the problem to "
    "gauge groups over S^4, it does not resolve them"
)

_OPAQUE_ATOMS = (GaugeS4, XFiber)


def _caveat_map_star(t: int, g: LieGroupId) -> str:
    return (
        f"Map*(Y_{t}, {g}) has no known closed form for twist {t} != 0 "
        "and is kept symbolic"
    )


def _caveat_x_fiber(g: LieGroupId, m: int, k: int, p: int, r: int) -> str:
    return (
        f"X_{k} is known only as the total space of a fibration "
        f"O^4_0[{g}]{{{m}}} -> X_{k} -> O^1[{g}]; it splits when "
        f"{p}^{r} divides k, which fails here"
    )


@dataclass(frozen=True)
class DecompositionResult:
    """A canonical decomposition plus its bookkeeping.

    loops says how many times the described gauge group has been looped
    (0 or 1); describes is a short display name of the object.
    """

    expr: SpaceExpr
    caveats: tuple[str, ...]
    theorem: str
    describes: str
    loops: int = 0

    def __post_init__(self) -> None:
        has_opaque = any(
            isinstance(a, _OPAQUE_ATOMS) or (isinstance(a, MapStarY) and a.t != 0)
            for a in self.expr.atoms()
        )
        if has_opaque and not self.caveats:
            raise ValueError("opaque atoms require an explanatory caveat")


def _require_pi6_zero(g: LieGroupId, table: PiTable) -> None:
    pi6 = table.pi6(g)
    if not pi6.is_trivial:
        raise OutOfScopeError(f"out of theorem scope: pi_6({g}) = {pi6} != 0")


def _check_prime_ge5(p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p < 5:
        raise OutOfScopeError(f"p-local statements here require p >= 5, got {p}")
    return p


def decompose_unpointed_m0(
    g: LieGroupId, l: int, k: int, table: PiTable | None = None
) -> DecompositionResult:
    """G^k(M(l,0)) = G^k(S^4) x Map_*(Y_t, G), expanded when t = 0."""
    table = table or default_table()
    _require_pi6_zero(g, table)
    t = twist_class(l)
    caveats = [_CAVEAT_GAUGE_S4]
    if t == 0:
        expr = product(gauge_s4(g, k), loop(3, lie(g)), loop(7, lie(g)))
    else:
        expr = product(gauge_s4(g, k), map_star_y(t, g))
        caveats.append(_caveat_map_star(t, g))
    return DecompositionResult(
        expr, tuple(caveats), TAG_UNPOINTED_M0, f"G^{k}(M({l},0))"
    )


def decompose_pointed_m0(
    g: LieGroupId, l: int, k: int, table: PiTable | None = None
) -> DecompositionResult:
    """G*^k(M(l,0)) = O^4[G] x Map_*(Y_t, G); the answer is k-independent."""
    table = table or default_table()
    _require_pi6_zero(g, table)
    t = twist_class(l)
    caveats: list[str] = []
    if t == 0:
        expr = product(loop(4, lie(g)), loop(3, lie(g)), loop(7, lie(g)))
    else:
        expr = product(loop(4, lie(g)), map_star_y(t, g))
        caveats.append(_caveat_map_star(t, g))
    return DecompositionResult(
        expr, tuple(caveats), TAG_POINTED_M0, f"G*^{k}(M({l},0))"
    )


def decompose_plocal(
    g: LieGroupId,
    l: int,
    m: int,
    k: int,
    p: int,
    pointed: bool = False,
    looped: bool | None = None,
    table: PiTable | None = None,
) -> DecompositionResult:
    """p-local decompositions for bases with torsion, p >= 5."""
    table = table or default_table()
    _require_pi6_zero(g, table)
    _check_prime_ge5(p)
    if m < 2:
        raise OutOfScopeError("p-local decompositions apply to m >= 2 only")
    k = k % m
    r = vp(m, p)

    if pointed:
        if looped is None:
            looped = k != 0
        if not looped:
            if k != 0:
                raise UnknownValueError(
                    "whether pointed gauge groups of different classes agree "
                    "for m >= 2 is open; only the looped statement covers k != 0"
                )
            expr = localized(p, product(mod_loop(3, g, p**r), loop(7, lie(g))))
            return DecompositionResult(
                expr, (), TAG_PLOCAL_POINTED, f"G*^0(M({l},{m}))"
            )
        expr = localized(p, product(mod_loop(4, g, p**r), loop(8, lie(g))))
        return DecompositionResult(
            expr,
            (),
            TAG_PLOCAL_POINTED_LOOPED,
            f"O^1 G*^{k}(M({l},{m}))",
            loops=1,
        )

    if looped:
        raise ValueError("the unpointed p-local result chooses looping itself")
    if r == 0:
        if k != 0:
            raise OutOfScopeError(
                "for v_p(m) = 0 only the trivial class k = 0 is covered"
            )
        expr = localized(p, product(loop(7, lie(g)), lie(g)))
        return DecompositionResult(
            expr, (), TAG_PLOCAL_TRIVIAL, f"G^0(M({l},{m}))"
        )
    if k % p**r == 0:
        expr = localized(
            p,
            product(
                loop(8, lie(g), component0=True),
                loop(1, lie(g)),
                mod_loop(4, g, m, component0=True),
            ),
        )
        caveats = (
            f"X_{k} splits as O^1[{g}] x O^4_0[{g}]{{{m}}} because "
            f"{p}^{r} divides k",
        )
    else:
        expr = localized(
            p, product(loop(8, lie(g), component0=True), x_fiber(g, m, k))
        )
        caveats = (_caveat_x_fiber(g, m, k, p, r),)
    return DecompositionResult(
        expr, caveats, TAG_PLOCAL_LOOPED, f"O^1 G^{k}(M({l},{m}))", loops=1
    )


def s7_decompose_trivial(g: LieGroupId, table: PiTable | None = None) -> SpaceExpr:
    """O^7[G] x G for the unique bundle over S^7 when pi_6(G) = 0."""
    table = table or default_table()
    pi6 = table.pi6(g)
    if not pi6.is_trivial:
        raise OutOfScopeError(
            f"the bundle over S^7 is not unique: pi_6({g}) = {pi6}"
        )
    return product(loop(7, lie(g)), lie(g))


# Homotopy groups of decomposition expressions.


@dataclass(frozen=True)
class PiValue:
    """A homotopy group split into a computed part and symbolic leftovers."""

    group: AbGroup
    symbolic: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()
    sources: tuple[str, ...] = ()

    @property
    def complete(self) -> bool:
        return not self.symbolic

    def __str__(self) -> str:
        if self.complete:
            return self.group.render()
        parts = [] if self.group.is_trivial else [self.group.render()]
        parts.extend(self.symbolic)
        return " + ".join(parts)


def _merge(values: list[PiValue]) -> PiValue:
    group = TRIVIAL
    symbolic: list[str] = []
    notes: list[str] = []
    sources: list[str] = []
    for v in values:
        group = direct_sum(group, v.group)
        symbolic.extend(v.symbolic)
        notes.extend(v.notes)
        sources.extend(s for s in v.sources if s not in sources)
    return PiValue(group, tuple(symbolic), tuple(notes), tuple(sources))


@dataclass(frozen=True)
class CoefficientGroup:
    """pi_i(G; Z_q) computed from the universal-coefficient sequence.

    The middle term is reported as the direct sum of the two ends;
    extension_split_assumed flags the cases where both ends are nonzero
    and the sum is therefore an assumption, not a theorem.
    """

    group: AbGroup
    extension_split_assumed: bool
    sources: tuple[str, ...] = ()


def _coefficient_group(
    g: LieGroupId, i: int, q: int, table: PiTable
) -> CoefficientGroup:
    if q == 1:
        return CoefficientGroup(TRIVIAL, False)
    rec_i = table.lie_record(g, i)
    tensor_part = tensor_with_cyclic(rec_i.group, q)
    sources = [rec_i.source]
    if i >= 1:
        rec_prev = table.lie_record(g, i - 1)
        tor_part = tor_with_cyclic(rec_prev.group, q)
        if rec_prev.source not in sources:
            sources.append(rec_prev.source)
    else:
        tor_part = TRIVIAL
    flagged = not tensor_part.is_trivial and not tor_part.is_trivial
    return CoefficientGroup(
        direct_sum(tensor_part, tor_part), flagged, tuple(sources)
    )


def pi_with_coefficients(
    g: LieGroupId, i: int, p: int, r: int, table: PiTable | None = None
) -> CoefficientGroup:
    """pi_i(G; Z_{p^r}) for p >= 5, via tensor and Tor with Z_{p^r}."""
    table = table or default_table()
    _check_prime_ge5(p)
    if r < 0:
        raise ValueError("r must be nonnegative")
    return _coefficient_group(g, i, p**r, table)


def pi_of_expr(expr: SpaceExpr, n: int, table: PiTable | None = None) -> PiValue:
    """pi_n of a product-shaped decomposition expression.

    Loop atoms over spheres and Lie groups resolve through the tables;
    mod-m loop spaces go through the universal-coefficient sequence;
    opaque atoms contribute symbolic summands.  Wedges are only resolved
    in trivial cases, since pi_n is not additive over wedges.
    """
    table = table or default_table()
    if n < 0:
        raise ValueError("homotopy degree must be nonnegative")
    if isinstance(expr, Point):
        return PiValue(TRIVIAL)
    if isinstance(expr, Localized):
        inner = pi_of_expr(expr.inner, n, table)
        return PiValue(
            localize(inner.group, expr.p),
            tuple(f"({s})_({expr.p})" for s in inner.symbolic),
            inner.notes,
            inner.sources,
        )
    if isinstance(expr, Product):
        return _merge([pi_of_expr(f, n, table) for f in expr.factors])
    if isinstance(expr, LieAtom):
        rec = table.lie_record(expr.group, n)
        return PiValue(rec.group, sources=(rec.source,))
    if isinstance(expr, Sphere):
        rec = table.sphere_record(expr.n, n)
        return PiValue(rec.group, sources=(rec.source,))
    if isinstance(expr, Loop):
        if expr.component0 and n == 0:
            return PiValue(TRIVIAL)
        inner = pi_of_expr(expr.inner, n + expr.n, table)
        return inner
    if isinstance(expr, ModLoop):
        if expr.component0 and n == 0:
            return PiValue(TRIVIAL)
        cg = _coefficient_group(expr.group, n + expr.n, expr.modulus, table)
        notes = ()
        if cg.extension_split_assumed:
            notes = (
                f"pi_{n + expr.n}({expr.group}; Z_{expr.modulus}) assumed to "
                "split as tensor + Tor",
            )
        return PiValue(cg.group, notes=notes, sources=cg.sources)
    if isinstance(expr, MapStarY):
        if expr.t == 0:
            return _merge(
                [
                    pi_of_expr(loop(3, lie(expr.group)), n, table),
                    pi_of_expr(loop(7, lie(expr.group)), n, table),
                ]
            )
        return PiValue(TRIVIAL, (f"pi_{n}(Map*(Y_{expr.t}, {expr.group}))",))
    if isinstance(expr, GaugeS4):
        return PiValue(TRIVIAL, (f"pi_{n}(G^{expr.k}(S^4))",))
    if isinstance(expr, XFiber):
        return PiValue(TRIVIAL, (f"pi_{n}(X_{expr.k})",))
    if isinstance(expr, Moore) and expr.n == 4 and n == 6:
        return PiValue(pi6_moore(expr.m), sources=(pi6_moore_source(),))
    return PiValue(TRIVIAL, (f"pi_{n}({expr.render()})",))


def pi_pointed_gauge_m0(
    g: LieGroupId, l: int, k: int, n: int, table: PiTable | None = None
) -> PiValue:
    """pi_n of the pointed gauge group over M(l,0), any k.

    Always contributes pi_{n+4}(G); the mapping-space summand expands to
    pi_{n+3}(G) + pi_{n+7}(G) when the twist class vanishes and stays
    symbolic otherwise.
    """
    table = table or default_table()
    _require_pi6_zero(g, table)
    return pi_of_expr(decompose_pointed_m0(g, l, k, table).expr, n, table)


_PI0_ROW_SPIN8 = (2 + 1, None)


def pi0_unpointed_gauge_m0(
    g: LieGroupId, l: int, table: PiTable | None = None
) -> AbGroup:
    """pi_0 of the unpointed gauge group over M(l,0) for l = 0 mod 12.

    These are the published component counts per family; the cross-check
    against the pointed formula at n = 0 lives in the acceptance suite.
    """
    table = table or default_table()
    _require_pi6_zero(g, table)
    if l % 12 != 0:
        raise OutOfScopeError(
            "the component table applies to l = 0 (mod 12) only"
        )
    c = g.canonical()
    if c.family == "Spin" and c.n == 8:
        return AbGroup(3, ())
    if c.family == "Sp":
        return AbGroup(2, (2,))
    if c.family == "SU" or c.family == "Spin":
        return AbGroup(2, ())
    return AbGroup(1, ())


def pi0_unpointed_gauge_plocal(
    g: LieGroupId, m: int, k: int, p: int, table: PiTable | None = None
) -> AbGroup:
    """pi_0 of the p-localized unpointed gauge group, m >= 2, k = 0.

    For k != 0 the component count is an open problem and the lookup
    reports unknown.
    """
    if k != 0:
        raise UnknownValueError(
            "pi_0 of the gauge group is not computed for k != 0 when m >= 2"
        )
    return pi_pointed_gauge_plocal(g, m, 0, 0, p, table=table).group


@dataclass(frozen=True)
class LocalPiResult:
    group: AbGroup
    describes: str
    theorem: str
    notes: tuple[str, ...] = ()
    sources: tuple[str, ...] = ()

    def __str__(self) -> str:
        return self.group.render()


def pi_pointed_gauge_plocal(
    g: LieGroupId,
    m: int,
    k: int,
    n: int,
    p: int,
    looped: bool | None = None,
    table: PiTable | None = None,
) -> LocalPiResult:
    """pi_n of the p-local pointed gauge group (k = 0), or of its loop
    space (any k), for m >= 2 and p >= 5.

    k = 0 unlooped:  pi_{n+3}(G; Z_{p^r}) + localized pi_{n+7}(G).
    looped, any k:   pi_{n+4}(G; Z_{p^r}) + localized pi_{n+8}(G).
    """
    table = table or default_table()
    _require_pi6_zero(g, table)
    _check_prime_ge5(p)
    if m < 2:
        raise OutOfScopeError("p-local homotopy groups apply to m >= 2 only")
    k = k % m
    r = vp(m, p)
    if looped is None:
        looped = k != 0
    if not looped and k != 0:
        raise UnknownValueError(
            "pointed gauge groups with k != 0 are only described after looping"
        )
    shift = 4 if looped else 3
    deep = 8 if looped else 7
    coeff = _coefficient_group(g, n + shift, p**r, table)
    rec_deep = table.lie_record(g, n + deep)
    group = localize(direct_sum(coeff.group, rec_deep.group), p)
    notes = ()
    if coeff.extension_split_assumed:
        notes = (
            f"pi_{n + shift}({g}; Z_{p**r}) assumed to split as tensor + Tor",
        )
    sources = tuple(
        dict.fromkeys(list(coeff.sources) + [rec_deep.source])
    )
    if looped:
        describes = f"pi_{n}(O^1 G*^{k}(M(l,{m})) @ ({p}))"
        theorem = TAG_PLOCAL_POINTED_LOOPED
    else:
        describes = f"pi_{n}(G*^0(M(l,{m})) @ ({p}))"
        theorem = TAG_PLOCAL_POINTED
    return LocalPiResult(group, describes, theorem, notes, sources)


# Homotopy equivalence decisions for gauge groups over S^7.


@dataclass(frozen=True)
class S7Decision:
    verdict: str  # "equivalent" | "not-equivalent" | "out-of-scope"
    reason: str
    expr: SpaceExpr | None = None

    def __bool__(self) -> bool:
        return self.verdict == "equivalent"


def _parse_locality(locality: str | int) -> str | int:
    if locality in ("integral", "rational"):
        return locality
    if isinstance(locality, int):
        if not is_prime(locality):
            raise ValueError(f"locality prime {locality} is not prime")
        return locality
    raise ValueError(f"locality must be 'integral', 'rational' or a prime")


def s7_gauge_equivalent(
    g: LieGroupId,
    k: int,
    k_prime: int,
    locality: str | int = "integral",
    table: PiTable | None = None,
) -> S7Decision:
    """Compare gauge groups over S^7 of the classes k and k'.

    The decisions follow the gcd criteria: SU(2) = Sp(1) integrally,
    G2 rationally or at any prime, SU(3) rationally or at primes >= 3.
    Localizations the criteria do not reach return out-of-scope.  Groups
    with pi_6 = 0 carry a single bundle and are trivially equivalent.
    """
    table = table or default_table()
    locality = _parse_locality(locality)
    order = table.pi6(g).order()
    k %= max(order, 1)
    k_prime %= max(order, 1)
    if order == 1:
        return S7Decision(
            "equivalent",
            "pi_6(G) = 0, so there is a single bundle class over S^7",
            s7_decompose_trivial(g, table),
        )
    a, b = gcd(3, k), gcd(3, k_prime)
    same = a == b
    gcd_text = (
        f"(3,{k}) = {a} and (3,{k_prime}) = {b}"
    )
    c = g.canonical()
    if c == LieGroupId("SU", 2):
        if locality == "integral":
            verdict = "equivalent" if same else "not-equivalent"
            return S7Decision(verdict, f"{gcd_text} (integral criterion)")
        if same:
            return S7Decision(
                "equivalent",
                f"{gcd_text}; integral equivalence localizes",
            )
        return S7Decision(
            "out-of-scope",
            f"{gcd_text}: the converse is only proved integrally for SU(2)",
        )
    if c == LieGroupId("G2"):
        if locality == "integral":
            return S7Decision(
                "out-of-scope",
                "only localized comparisons are decided for G2",
            )
        verdict = "equivalent" if same else "not-equivalent"
        return S7Decision(
            verdict, f"{gcd_text} (rational or any-prime criterion)"
        )
    # Remaining case: SU(3), the only other group with pi_6 != 0.
    if locality == "integral":
        return S7Decision(
            "out-of-scope",
            "only localized comparisons are decided for SU(3)",
        )
    if locality == 2:
        return S7Decision(
            "out-of-scope",
            "the order of the connecting map at p = 2 is not known for SU(3)",
        )
    verdict = "equivalent" if same else "not-equivalent"
    return S7Decision(
        verdict, f"{gcd_text} (rational or p >= 3 criterion)"
    )


@dataclass(frozen=True)
class Su5Decision:
    verdict: str  # "equivalent-locally" | "undecided"
    reason: str

    def __bool__(self) -> bool:
        return self.verdict == "equivalent-locally"


def su5_gauge_equivalent_m0(k: int, k_prime: int) -> Su5Decision:
    """One-directional gcd rule for SU(5)-gauge groups over any M(l,0).

    Equal gcds with 120 give equivalence rationally and at every prime;
    unequal gcds leave the question undecided, there is no converse.
    """
    a, b = gcd(120, k), gcd(120, k_prime)
    if a == b:
        return Su5Decision(
            "equivalent-locally",
            f"(120,{k}) = (120,{k_prime}) = {a}: equivalent rationally "
            "and at every prime",
        )
    return Su5Decision(
        "undecided",
        f"(120,{k}) = {a} != {b} = (120,{k_prime}): the criterion is "
        "one-directional, no conclusion",
    )


@dataclass(frozen=True)
class GaugeQuery:
    """A bundled decomposition request, used by the CLI front end."""

    bundle: BundleClass
    pointed: bool = False
    looped: int = 0
    locality: str | int = "integral"


def run_query(query: GaugeQuery, table: PiTable | None = None) -> DecompositionResult:
    """Dispatch a GaugeQuery to the decomposition that covers it."""
    table = table or default_table()
    base = query.bundle.base
    g = query.bundle.group
    k = query.bundle.k
    if base.m == 0:
        if query.locality != "integral":
            raise OutOfScopeError(
                "torsion-free splittings are integral statements; "
                "drop the localization"
            )
        if query.pointed:
            return decompose_pointed_m0(g, base.l, k, table)
        return decompose_unpointed_m0(g, base.l, k, table)
    if base.m == 1:
        expr = s7_decompose_trivial(g, table)
        return DecompositionResult(expr, (), TAG_S7_TRIVIAL, "G^0(S^7)")
    if not isinstance(query.locality, int):
        raise OutOfScopeError(
            "bases with torsion are only decomposed p-locally; pass a prime p >= 5"
        )
    return decompose_plocal(
        g,
        base.l,
        base.m,
        k,
        query.locality,
        pointed=query.pointed,
        looped=bool(query.looped) if query.pointed else None,
        table=table,
    )
