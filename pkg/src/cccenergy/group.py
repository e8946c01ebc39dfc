"""The finite p-groups G(p, m, n) in normal form.

G(p, m, n) is the group generated by x, y subject to

    x^(p^m) = y^(p^n) = z^p = 1,   z = [x, y] = x^-1 y^-1 x y central.

Since z is central of order p, every element has a unique normal form
x^a y^b z^c with 0 <= a < p^m, 0 <= b < p^n, 0 <= c < p, so the group has
order p^(m+n+1).  From z = x^-1 y^-1 x y one gets y x = x y z^-1, and
pushing x-powers left across a block of y-powers costs one z^-1 per swap.
That yields the O(1) product law

    (a, b, c) * (a', b', c') = (a + a' mod p^m,
                                b + b' mod p^n,
                                c + c' - a'*b mod p),

which is what `multiply` implements.  The relation suite in the tests
checks x^(p^m) = y^(p^n) = z^p = 1, z = x^-1 y^-1 x y, centrality of z,
and associativity, so a transcription error in the law cannot hide.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import NotPrimeError, OrderCapExceededError, ParameterRangeError

#: Default ceiling on the group order for enumeration-based operations.
DEFAULT_MAX_ORDER = 1 << 20


class GroupElement(NamedTuple):
    """Normal form x^a y^b z^c as an exponent triple."""

    a: int
    b: int
    c: int


@dataclass(frozen=True)
class GroupParams:
    """Validated (p, m, n) with the derived group order p^(m+n+1).

    ``canonicalized`` records that (m, n) were swapped to enforce m >= n;
    the swap is justified by the isomorphism G(p, m, n) = G(p, n, m)
    obtained by exchanging the two generators (which inverts z, an
    automorphism of the central Z_p factor).
    """

    p: int
    m: int
    n: int
    order: int
    canonicalized: bool = False


def is_prime(p: int) -> bool:
    """Trial division; p is tiny at the scales this package targets."""
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def make_params(
    p: int,
    m: int,
    n: int,
    canonicalize: bool = False,
    max_order: int = DEFAULT_MAX_ORDER,
) -> GroupParams:
    """Validate (p, m, n) and derive the group order.

    With ``canonicalize`` set, (m, n) with m < n is swapped to the
    isomorphic parameter triple with m >= n and the swap is flagged.
    """
    if not is_prime(p):
        raise NotPrimeError(p)
    if m < 1 or n < 1:
        raise ParameterRangeError(f"m and n must be >= 1, got m={m}, n={n}")
    swapped = False
    if canonicalize and m < n:
        m, n = n, m
        swapped = True
    order = p ** (m + n + 1)
    if order > max_order:
        raise OrderCapExceededError(order, max_order)
    return GroupParams(p=p, m=m, n=n, order=order, canonicalized=swapped)


IDENTITY = GroupElement(0, 0, 0)

X = GroupElement(1, 0, 0)
Y = GroupElement(0, 1, 0)
Z = GroupElement(0, 0, 1)


def multiply(g: GroupElement, h: GroupElement, params: GroupParams) -> GroupElement:
    """Product of two normal forms; see the module docstring for the law."""
    p = params.p
    return GroupElement(
        (g.a + h.a) % p**params.m,
        (g.b + h.b) % p**params.n,
        (g.c + h.c - h.a * g.b) % p,
    )


def inverse(g: GroupElement, params: GroupParams) -> GroupElement:
    """Two-sided inverse: (a, b, c)^-1 = (-a, -b, -c - a*b)."""
    p = params.p
    return GroupElement(
        (-g.a) % p**params.m,
        (-g.b) % p**params.n,
        (-g.c - g.a * g.b) % p,
    )


def commutes(g: GroupElement, h: GroupElement, params: GroupParams) -> bool:
    return multiply(g, h, params) == multiply(h, g, params)


def elements(params: GroupParams) -> Iterator[GroupElement]:
    """All p^(m+n+1) normal forms, in lexicographic (a, b, c) order."""
    p = params.p
    for a in range(p**params.m):
        for b in range(p**params.n):
            for c in range(p):
                yield GroupElement(a, b, c)


def power(g: GroupElement, k: int, params: GroupParams) -> GroupElement:
    """g^k by repeated squaring (k may be negative)."""
    if k < 0:
        return power(inverse(g, params), -k, params)
    acc = IDENTITY
    base = g
    while k:
        if k & 1:
            acc = multiply(acc, base, params)
        base = multiply(base, base, params)
        k >>= 1
    return acc


def center(params: GroupParams) -> frozenset[GroupElement]:
    """Elements commuting with both generators.

    Commuting with x and y suffices because x and y generate the group:
    an element commuting with each generator commutes with every product
    of generators.
    """
    return frozenset(
        g
        for g in elements(params)
        if commutes(g, X, params) and commutes(g, Y, params)
    )


@dataclass(frozen=True)
class ConjugacyClass:
    representative: GroupElement
    members: frozenset[GroupElement]

    @property
    def is_central(self) -> bool:
        return len(self.members) == 1

    @property
    def size(self) -> int:
        return len(self.members)


def conjugate(g: GroupElement, t: GroupElement, params: GroupParams) -> GroupElement:
    """t^-1 g t."""
    return multiply(multiply(inverse(t, params), g, params), t, params)


def conjugacy_classes(params: GroupParams) -> list[ConjugacyClass]:
    """Partition of the group into conjugation orbits.

    Orbits are closed under conjugation by the two generators only.  This
    suffices: conjugation by a product is the composition of conjugations
    by its factors, and conjugation by a generator's inverse is reached by
    iterating conjugation by the generator (each generator has finite
    order).  Classes are listed in first-seen enumeration order, so the
    output is deterministic.
    """
    seen: set[GroupElement] = set()
    classes: list[ConjugacyClass] = []
    generators = (X, Y)
    for g in elements(params):
        if g in seen:
            continue
        orbit = {g}
        frontier = deque([g])
        while frontier:
            h = frontier.popleft()
            for t in generators:
                k = conjugate(h, t, params)
                if k not in orbit:
                    orbit.add(k)
                    frontier.append(k)
        seen |= orbit
        classes.append(ConjugacyClass(representative=g, members=frozenset(orbit)))
    return classes
