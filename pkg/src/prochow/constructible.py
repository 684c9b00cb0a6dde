"""Constructible functions spanned by torus-orbit indicators.

A function is a finite Z-combination of indicator functions of torus orbits,
stored as a coefficient per cone.  Orbits partition the variety, so this
representation is a normal form: equality is coefficient-wise.  Pushforward
takes the Euler characteristic fibre by fibre; it stays inside the orbit
span for the morphism classes exercised here (refinements, fibrations,
finite surjections, maps to a point) and raises NotOrbitRepresentable as
soon as the image of an orbit fails to be a union of orbits.
"""

from __future__ import annotations

from types import MappingProxyType
from typing import Mapping

from . import lattice
from .errors import ConeNotInFan, FanMismatch, NotOrbitRepresentable
from .fan import Cone, Fan, ToricMorphism

__all__ = [
    "ConstructibleFunction",
    "one_x",
    "indicator_orbit",
    "indicator_closure",
    "pushforward",
    "euler_characteristic",
]


class ConstructibleFunction:
    """Z-linear combination of orbit indicator functions on a fixed fan."""

    __slots__ = ("fan", "_coeffs")

    def __init__(self, fan: Fan, coeffs: Mapping[Cone, int]):
        self.fan = fan
        clean = {}
        for cone, m in coeffs.items():
            if not fan.has_cone(cone):
                raise ConeNotInFan(f"{cone} is not a cone of {fan!r}")
            m = int(m)
            if m != 0:
                clean[cone] = m
        self._coeffs = clean

    @property
    def coeffs(self) -> Mapping[Cone, int]:
        return MappingProxyType(self._coeffs)

    def evaluate(self, cone: Cone) -> int:
        """Value at any point of the orbit of ``cone`` (constant on orbits)."""
        if not self.fan.has_cone(cone):
            raise ConeNotInFan(f"{cone} is not a cone of {self.fan!r}")
        return self._coeffs.get(cone, 0)

    @property
    def support(self) -> tuple[Cone, ...]:
        return tuple(c for c in self.fan.cones if c in self._coeffs)

    def _require_same_fan(self, other: "ConstructibleFunction"):
        if not isinstance(other, ConstructibleFunction):
            raise TypeError(f"expected a constructible function, got {other!r}")
        if self.fan != other.fan:
            raise FanMismatch("functions live on different fans")

    def __add__(self, other):
        self._require_same_fan(other)
        out = dict(self._coeffs)
        for c, m in other._coeffs.items():
            out[c] = out.get(c, 0) + m
        return ConstructibleFunction(self.fan, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return ConstructibleFunction(self.fan, {c: -m for c, m in self._coeffs.items()})

    def __rmul__(self, k: int):
        return ConstructibleFunction(self.fan, {c: k * m for c, m in self._coeffs.items()})

    __mul__ = __rmul__

    def __eq__(self, other):
        return (
            isinstance(other, ConstructibleFunction)
            and self.fan == other.fan
            and self._coeffs == other._coeffs
        )

    __hash__ = None

    def __repr__(self):
        terms = ", ".join(
            f"{m}*1_O{tuple(sorted(c.ray_indices))}" for c, m in sorted(
                self._coeffs.items(), key=lambda cm: self.fan._sort_key(cm[0])
            )
        )
        return f"ConstructibleFunction({terms or '0'})"


def one_x(fan: Fan) -> ConstructibleFunction:
    """The constant function 1: coefficient 1 on every orbit."""
    return ConstructibleFunction(fan, {c: 1 for c in fan.cones})


def indicator_orbit(fan: Fan, cone: Cone) -> ConstructibleFunction:
    """Indicator of the single orbit of ``cone``."""
    if not fan.has_cone(cone):
        raise ConeNotInFan(f"{cone} is not a cone of {fan!r}")
    return ConstructibleFunction(fan, {cone: 1})


def indicator_closure(fan: Fan, cone: Cone) -> ConstructibleFunction:
    """Indicator of the orbit closure: 1 on every cone having ``cone`` as a face."""
    return ConstructibleFunction(fan, {c: 1 for c in fan.star_of(cone)})


def pushforward(fm: ToricMorphism, alpha: ConstructibleFunction) -> ConstructibleFunction:
    """Fibrewise-Euler-characteristic pushforward along a toric morphism.

    For one orbit with image cone tau, the restriction is a (trivial) torus
    fibration onto a subtorus of the orbit of tau.  If that subtorus is
    proper the result leaves the orbit basis (NotOrbitRepresentable); if the
    fibres are positive-dimensional tori they contribute chi = 0; otherwise
    the fibres are finite of cardinality the cokernel order of the induced
    cocharacter map.
    """
    if alpha.fan != fm.source:
        raise FanMismatch("function does not live on the source fan")
    out: dict[Cone, int] = {}
    for sigma_alpha, m in alpha._coeffs.items():
        sigma = fm.source.cone_from_generators(alpha.fan.cone_generators(sigma_alpha))
        tau = fm.image_cone(sigma)
        phi = fm.orbit_lattice_map(sigma)
        orbit_dim_target = fm.target.rank - tau.dim
        orbit_dim_source = fm.source.rank - sigma.dim
        if lattice.matrix_rank(phi) < orbit_dim_target:
            raise NotOrbitRepresentable(sigma)
        if orbit_dim_source > orbit_dim_target:
            continue
        degree = lattice.cokernel_order(phi)
        out[tau] = out.get(tau, 0) + m * degree
    return ConstructibleFunction(fm.target, out)


def euler_characteristic(alpha: ConstructibleFunction) -> int:
    """Pushforward to a point: orbits of positive dimension contribute zero."""
    n = alpha.fan.rank
    return sum(m for c, m in alpha._coeffs.items() if c.dim == n)
