"""Independent total-Chern-class oracle on smooth complete fans.

The total Chern class of the tangent bundle is the product over rays of
(1 + D_ray) capped with the fundamental class, expanded by iterated
invariant-divisor intersection.  It must agree, modulo rational
equivalence, with the sum of all orbit-closure classes computed by
:func:`prochow.csm.csm` -- the two pipelines share no code beyond the cycle
type, which is the point of the check.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from . import lattice
from .chow import TCycle, equivalent
from .constructible import one_x
from .csm import csm
from .errors import BadGrade, ConeNotInFan, NotComplete, NotSmooth
from .fan import Cone, Fan

__all__ = ["intersect_divisor", "tangent_chern_class", "verify_tangent_formula"]

Vector = tuple[int, ...]


def _require_smooth_complete(fan: Fan) -> None:
    if not fan.is_smooth():
        raise NotSmooth("divisor intersection rules need a smooth fan")
    if not fan.is_complete():
        raise NotComplete("divisor intersection rules need a complete fan")


def _ray_index(fan: Fan, ray: Sequence[int] | int) -> int:
    if isinstance(ray, int):
        if not 0 <= ray < len(fan.rays):
            raise ConeNotInFan(f"no ray with index {ray}")
        return ray
    ray = tuple(int(c) for c in ray)
    try:
        return fan.rays.index(ray)
    except ValueError:
        raise ConeNotInFan(f"{ray} is not a ray of the fan") from None


def _dual_vector(fan: Fan, sigma: Cone, position: int) -> tuple:
    """m with <m, u_i> = delta_{i,position} over the generators of sigma.

    The generators extend to a lattice basis (smoothness); the extension is
    fixed deterministically from the Smith transforms, so repeated runs
    produce identical cycle representatives.
    """
    gens = fan.cone_generators(sigma)
    n = fan.rank
    b = lattice.mat([[g[i] for g in gens] for i in range(n)], width=len(gens))
    u, d, v, ui, vi = lattice.smith_transforms(b)
    k = len(gens)
    # Columns of [b | ui[:, k:]] form a basis extending the generators, and
    # the corresponding dual-basis rows are blockdiag(v, 1) @ u.
    top = v @ u[:k, :]
    return tuple(int(t) for t in top[position])


def intersect_divisor(fan: Fan, ray: Sequence[int] | int, z: TCycle) -> TCycle:
    """Intersect the invariant divisor of ``ray`` with a homogeneous cycle.

    Transverse case: [V(sigma)] goes to [V(sigma + ray)] when that cone
    exists, to zero when it does not.  When the ray lies in sigma, the class
    is first rewritten by a divisor-of-character relation chosen to cancel
    the ray, then intersected transversally.
    """
    _require_smooth_complete(fan)
    if z.fan != fan:
        raise BadGrade("cycle does not live on the given fan")
    dims = z.dimensions
    if not z.coeffs:
        return TCycle(fan, {})
    if len(dims) != 1 or dims[0] < 1:
        raise BadGrade(f"cycle must be homogeneous of dimension >= 1, got {dims}")
    rho = _ray_index(fan, ray)
    u_rho = fan.rays[rho]
    out: dict[Cone, int] = {}

    def add(cone: Cone, m: int) -> None:
        out[cone] = out.get(cone, 0) + m

    for sigma, m in z.coeffs.items():
        if rho not in sigma.ray_indices:
            try:
                bigger = fan.cone(sigma.ray_indices | {rho})
            except ConeNotInFan:
                continue
            add(bigger, m)
            continue
        # Self-intersection case: rewrite via the character dual to the ray.
        position = sorted(sigma.ray_indices).index(rho)
        m_vec = _dual_vector(fan, sigma, position)
        for other in range(len(fan.rays)):
            if other in sigma.ray_indices:
                continue
            try:
                bigger = fan.cone(sigma.ray_indices | {other})
            except ConeNotInFan:
                continue
            pairing = sum(a * b for a, b in zip(m_vec, fan.rays[other]))
            if pairing:
                add(bigger, -m * pairing)
    return TCycle(fan, out)


def tangent_chern_class(fan: Fan) -> TCycle:
    """Total Chern class of the tangent bundle capped with [X].

    Expands the product over rays of (1 + D_ray) against the fundamental
    class; point classes are not intersected further.
    """
    _require_smooth_complete(fan)
    total = TCycle(fan, {fan.zero_cone: 1})
    for rho in range(len(fan.rays)):
        bump = TCycle(fan, {})
        for k in total.dimensions:
            if k >= 1:
                bump = bump + intersect_divisor(fan, rho, total.dimension_part(k))
        total = total + bump
    return total


def verify_tangent_formula(fan: Fan) -> bool:
    """Tangent Chern class vs orbit-closure sum, modulo rational equivalence."""
    return equivalent(tangent_chern_class(fan), csm(one_x(fan)))
