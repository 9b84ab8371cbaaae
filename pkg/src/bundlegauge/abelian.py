"""Exact arithmetic on finitely generated abelian groups.

A group is stored in canonical form: a free rank plus a chain of
invariant factors d_1 | d_2 | ... | d_s with every d_i >= 2.  Two groups
are isomorphic exactly when their canonical forms are equal, so
isomorphism testing is structural equality.

A group may carry a localization tag "local at p".  Every torsion factor
of a p-local group is a power of p, and free summands print as Z_(p)
instead of Z.  The trivial group is always stored integral, which makes
it a two-sided unit for direct sums regardless of locality.

>>> print(make_group(0, [4, 3]))
Z_12
>>> print(direct_sum(make_group(0, [6]), make_group(0, [4])))
Z_2 + Z_12
>>> print(localize(make_group(1, [24]), 2))
Z_(2) + Z_8
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd, isqrt

from .errors import LocalityError

__all__ = [
    "AbGroup",
    "Prime",
    "make_group",
    "parse_group",
    "is_isomorphic",
    "direct_sum",
    "localize",
    "tensor_with_cyclic",
    "tor_with_cyclic",
    "vp",
    "is_prime",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


@dataclass(frozen=True)
class Prime:
    """A primality-checked prime number."""

    value: int

    def __post_init__(self) -> None:
        if not is_prime(self.value):
            raise ValueError(f"{self.value} is not prime")

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)


def _as_prime(p: int | Prime) -> int:
    if isinstance(p, Prime):
        return p.value
    return Prime(p).value


def _factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division; inputs here are small."""
    result: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            result[p] = result.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        result[n] = result.get(n, 0) + 1
    return result


def _invariant_factors(torsion: list[int]) -> tuple[int, ...]:
    """Refactor arbitrary cyclic orders into a divisibility chain.

    Internally this is the primary decomposition: exponent lists per
    prime, sorted descending, then recombined column by column.
    """
    exponents: dict[int, list[int]] = {}
    for d in torsion:
        for p, e in _factorize(d).items():
            exponents.setdefault(p, []).append(e)
    for e_list in exponents.values():
        e_list.sort(reverse=True)
    depth = max((len(v) for v in exponents.values()), default=0)
    factors = []
    for j in range(depth):
        f = 1
        for p, e_list in exponents.items():
            if j < len(e_list):
                f *= p ** e_list[j]
        factors.append(f)
    factors.reverse()
    return tuple(factors)


@dataclass(frozen=True)
class AbGroup:
    """A finitely generated abelian group in canonical form.

    Instances are immutable and safe to share between threads.  Use
    :func:`make_group`, :func:`localize` or :func:`parse_group` rather
    than the raw constructor; the constructor only validates.
    """

    free_rank: int
    invariant_factors: tuple[int, ...]
    local_prime: int | None = None

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        prev = 1
        for d in self.invariant_factors:
            if d < 2:
                raise ValueError(f"invariant factor {d} < 2")
            if d % prev != 0:
                raise ValueError(
                    f"{self.invariant_factors} is not a divisibility chain"
                )
            prev = d
        if self.local_prime is not None:
            p = self.local_prime
            if not is_prime(p):
                raise ValueError(f"locality prime {p} is not prime")
            if self.is_trivial:
                raise ValueError("the trivial group is stored integral")
            for d in self.invariant_factors:
                while d % p == 0:
                    d //= p
                if d != 1:
                    raise ValueError(
                        f"factor in a {p}-local group is not a power of {p}"
                    )

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    @property
    def is_integral(self) -> bool:
        return self.local_prime is None

    def order(self) -> int:
        """Number of elements; 0 means infinite.

        >>> make_group(0, [3, 4]).order()
        12
        >>> make_group(1, []).order()
        0
        """
        if self.free_rank > 0:
            return 0
        result = 1
        for d in self.invariant_factors:
            result *= d
        return result

    def render(self) -> str:
        """Canonical text form, parsed back by :func:`parse_group`.

        >>> make_group(2, [2, 12]).render()
        'Z + Z + Z_2 + Z_12'
        >>> localize(make_group(0, [9]), 3).render()
        'Z_9 @ (3)'
        """
        if self.is_trivial:
            return "0"
        free = "Z" if self.local_prime is None else f"Z_({self.local_prime})"
        parts = [free] * self.free_rank
        parts.extend(f"Z_{d}" for d in self.invariant_factors)
        text = " + ".join(parts)
        if self.local_prime is not None and self.free_rank == 0:
            text += f" @ ({self.local_prime})"
        return text

    def __str__(self) -> str:
        return self.render()


def make_group(free_rank: int, torsion: list[int] | tuple[int, ...]) -> AbGroup:
    """Build the canonical integral group with the given torsion orders.

    Torsion entries may come in any order and need not form a chain;
    they are refactored through the primary decomposition.

    >>> make_group(0, [2, 12])
    AbGroup(free_rank=0, invariant_factors=(2, 12), local_prime=None)
    >>> make_group(0, [4, 3]) == make_group(0, [12])
    True
    """
    for d in torsion:
        if d < 2:
            raise ValueError(f"torsion order {d} < 2")
    return AbGroup(free_rank, _invariant_factors(list(torsion)))


def _build(free_rank: int, torsion: list[int], local_prime: int | None) -> AbGroup:
    """Internal canonical builder: drops unit factors, normalizes locality."""
    torsion = [d for d in torsion if d > 1]
    if free_rank == 0 and not torsion:
        return TRIVIAL
    return AbGroup(free_rank, _invariant_factors(torsion), local_prime)


TRIVIAL = AbGroup(0, ())
Z = AbGroup(1, ())


def is_isomorphic(a: AbGroup, b: AbGroup) -> bool:
    """Structural equality of canonical forms.

    >>> is_isomorphic(make_group(0, [12]), make_group(0, [4, 3]))
    True
    >>> is_isomorphic(make_group(0, [2, 2]), make_group(0, [4]))
    False
    """
    if a.local_prime != b.local_prime:
        raise LocalityError(
            f"cannot compare {a} (locality {a.local_prime}) "
            f"with {b} (locality {b.local_prime})"
        )
    return a == b


def _common_locality(a: AbGroup, b: AbGroup) -> int | None:
    if a.is_trivial:
        return b.local_prime
    if b.is_trivial:
        return a.local_prime
    if a.local_prime != b.local_prime:
        raise LocalityError(
            f"mixed localities: {a.local_prime} vs {b.local_prime}"
        )
    return a.local_prime


def direct_sum(a: AbGroup, b: AbGroup) -> AbGroup:
    """Direct sum in canonical form; free ranks add, torsion merges.

    >>> print(direct_sum(make_group(1, []), make_group(0, [2])))
    Z + Z_2
    >>> direct_sum(TRIVIAL, make_group(0, [5])) == make_group(0, [5])
    True
    """
    locality = _common_locality(a, b)
    return _build(
        a.free_rank + b.free_rank,
        list(a.invariant_factors) + list(b.invariant_factors),
        locality,
    )


def vp(m: int, p: int | Prime) -> int:
    """p-adic valuation of m >= 1: the largest e with p^e | m.

    >>> vp(50, 5)
    2
    >>> vp(7, 5)
    0
    """
    p = _as_prime(p)
    if m < 1:
        raise ValueError("vp is defined here only for m >= 1")
    e = 0
    while m % p == 0:
        m //= p
        e += 1
    return e


def localize(a: AbGroup, p: int | Prime) -> AbGroup:
    """Localization at p: Z becomes Z_(p), Z_n becomes Z_{p^{v_p(n)}}.

    Torsion prime to p vanishes.  Localizing an already p-local group is
    the identity; localizing at a different prime is an error.

    >>> print(localize(make_group(0, [12]), 3))
    Z_3 @ (3)
    >>> localize(make_group(0, [12]), 5).is_trivial
    True
    """
    p = _as_prime(p)
    if a.local_prime is not None:
        if a.local_prime == p:
            return a
        raise LocalityError(
            f"group is already local at {a.local_prime}, cannot localize at {p}"
        )
    torsion = []
    for d in a.invariant_factors:
        e = vp(d, p)
        if e > 0:
            torsion.append(p**e)
    return _build(a.free_rank, torsion, p)


def _tensor_modulus(a: AbGroup, q: int) -> int:
    # Z_(p) (x) Z_q is the p-part of Z_q; integrally it is Z_q itself.
    if a.local_prime is None:
        return q
    return a.local_prime ** vp(q, a.local_prime)


def tensor_with_cyclic(a: AbGroup, q: int) -> AbGroup:
    """a (x) Z_q, extended additively over the canonical decomposition.

    >>> print(tensor_with_cyclic(make_group(1, []), 25))
    Z_25
    >>> print(tensor_with_cyclic(make_group(0, [12]), 8))
    Z_4
    """
    if q < 2:
        raise ValueError("cyclic order must be >= 2")
    qq = _tensor_modulus(a, q)
    torsion = [qq] * a.free_rank
    torsion.extend(gcd(d, q) for d in a.invariant_factors)
    return _build(0, torsion, a.local_prime)


def tor_with_cyclic(a: AbGroup, q: int) -> AbGroup:
    """Tor(a, Z_q): free summands contribute nothing, Z_n gives Z_gcd(n,q).

    >>> tor_with_cyclic(make_group(3, []), 25).is_trivial
    True
    >>> print(tor_with_cyclic(make_group(0, [12]), 8))
    Z_4
    """
    if q < 2:
        raise ValueError("cyclic order must be >= 2")
    torsion = [gcd(d, q) for d in a.invariant_factors]
    return _build(0, torsion, a.local_prime)


_SUMMAND = re.compile(r"^(?:Z|Z_\((\d+)\)|Z_(\d+))$")
_LOCAL_SUFFIX = re.compile(r"^(.*?)\s*@\s*\((\d+)\)$")


def parse_group(text: str) -> AbGroup:
    """Parse the canonical text form back into a group.

    Accepts exactly what :meth:`AbGroup.render` produces: "0", "Z",
    "Z_12", "Z + Z_2 + Z_12", "Z_(5) + Z_25", "Z_9 @ (3)".

    >>> parse_group("Z + Z_2 + Z_12") == make_group(1, [2, 12])
    True
    >>> parse_group(make_group(0, [8, 3]).render()) == make_group(0, [24])
    True
    """
    text = text.strip()
    suffix_prime: int | None = None
    suffix = _LOCAL_SUFFIX.match(text)
    if suffix:
        text = suffix.group(1).strip()
        suffix_prime = int(suffix.group(2))
    if text == "0":
        return TRIVIAL
    free = 0
    torsion: list[int] = []
    local: int | None = suffix_prime
    for part in text.split("+"):
        part = part.strip()
        m = _SUMMAND.match(part)
        if not m:
            raise ValueError(f"cannot parse group summand {part!r}")
        if m.group(1):
            p = int(m.group(1))
            if local is not None and local != p:
                raise ValueError(f"conflicting localities in {text!r}")
            local = p
            free += 1
        elif m.group(2):
            torsion.append(int(m.group(2)))
        else:
            free += 1
    return _build(free, torsion, local)
