"""Product fans, external products, and the product formula for CSM classes.

The orbit of a product is the product of the orbits and likewise for their
closures, so external products act coefficientwise through the cone-pairing
index and the product formula csm(a (x) b) = csm(a) (x) csm(b) holds at the
cycle level, not just modulo rational equivalence.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .chow import TCycle
from .constructible import ConstructibleFunction, euler_characteristic, one_x
from .csm import csm
from .errors import FanMismatch
from .fan import Cone, Fan, build_fan

__all__ = [
    "ProductFan",
    "product_fan",
    "external_product_function",
    "external_product_cycle",
    "verify_product_formula",
]


@dataclass(frozen=True, eq=False)
class ProductFan:
    """The product fan plus the pairing (cone, cone) -> product cone."""

    fan: Fan
    factors: tuple[Fan, Fan]
    _pairing: dict = field(repr=False)

    def pair(self, sigma: Cone, tau: Cone) -> Cone:
        """The product cone sigma x tau."""
        try:
            return self._pairing[(sigma.ray_indices, tau.ray_indices)]
        except KeyError:
            raise FanMismatch(
                f"({sigma}, {tau}) is not a pair of cones of the factors"
            ) from None


def product_fan(f1: Fan, f2: Fan) -> ProductFan:
    """Fan of the product variety: rays embedded blockwise, cones all pairs."""
    n1, n2 = f1.rank, f2.rank
    zeros1 = (0,) * n1
    zeros2 = (0,) * n2
    rays = [r + zeros2 for r in f1.rays] + [zeros1 + r for r in f2.rays]
    offset = len(f1.rays)
    maximal = [
        sorted(a.ray_indices) + sorted(i + offset for i in b.ray_indices)
        for a in f1.maximal_cones
        for b in f2.maximal_cones
    ]
    fan = build_fan(n1 + n2, rays, maximal)
    pairing = {}
    for a in f1.cones:
        for b in f2.cones:
            idx = a.ray_indices | frozenset(i + offset for i in b.ray_indices)
            pairing[(a.ray_indices, b.ray_indices)] = fan.cone(idx)
    return ProductFan(fan, (f1, f2), pairing)


def external_product_function(
    prod: ProductFan, alpha: ConstructibleFunction, beta: ConstructibleFunction
) -> ConstructibleFunction:
    """(a (x) b)(x, y) = a(x) * b(y), expressed in the orbit basis."""
    f1, f2 = prod.factors
    if alpha.fan != f1 or beta.fan != f2:
        raise FanMismatch("functions do not live on the product factors")
    out = {}
    for a, m in alpha.coeffs.items():
        for b, n in beta.coeffs.items():
            out[prod.pair(a, b)] = m * n
    return ConstructibleFunction(prod.fan, out)


def external_product_cycle(prod: ProductFan, z1: TCycle, z2: TCycle) -> TCycle:
    """[V(sigma)] (x) [V(tau)] = [V(sigma x tau)], extended bilinearly."""
    f1, f2 = prod.factors
    if z1.fan != f1 or z2.fan != f2:
        raise FanMismatch("cycles do not live on the product factors")
    out = {}
    for a, m in z1.coeffs.items():
        for b, n in z2.coeffs.items():
            out[prod.pair(a, b)] = m * n
    return TCycle(prod.fan, out)


def verify_product_formula(alpha: ConstructibleFunction, beta: ConstructibleFunction) -> bool:
    """csm of the external product vs external product of the csm classes.

    Exact equality in the orbit basis is required (the closure of a product
    orbit is the product of the closures).  Also cross-checks Euler
    characteristic multiplicativity.
    """
    prod = product_fan(alpha.fan, beta.fan)
    lhs = csm(external_product_function(prod, alpha, beta))
    rhs = external_product_cycle(prod, csm(alpha), csm(beta))
    if lhs != rhs:
        return False
    chi = euler_characteristic(external_product_function(prod, alpha, beta))
    return chi == euler_characteristic(alpha) * euler_characteristic(beta)
