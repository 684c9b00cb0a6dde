"""Torus-invariant cycles and Chow groups presented by orbit closures.

A cycle is a Z-combination of orbit-closure fundamental classes, graded by
dimension.  A_k is presented by the closures of codimension-k cones modulo
one divisor-of-character relation for every pair (cone tau of dimension
n-k-1, basis character of tau-perp).  Rational equivalence of cycles is then
an exact integer linear-system solvability question.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

import numpy as np

from . import lattice
from .errors import (
    BadDimension,
    ConeNotInFan,
    FanMismatch,
    NotOrbitRepresentable,
    NotProper,
)
from .fan import Cone, Fan, ToricMorphism

__all__ = [
    "TCycle",
    "ChowPresentation",
    "chow_presentation",
    "group_invariants",
    "equivalent",
    "pushforward_cycle",
]


class TCycle:
    """Invariant cycle: one integer per cone, the class sum of m * [V(cone)]."""

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

    def coefficient(self, cone: Cone) -> int:
        if not self.fan.has_cone(cone):
            raise ConeNotInFan(f"{cone} is not a cone of {self.fan!r}")
        return self._coeffs.get(cone, 0)

    def dimension_part(self, k: int) -> "TCycle":
        """The part of cycle dimension k (cones of dimension rank - k)."""
        n = self.fan.rank
        return TCycle(
            self.fan, {c: m for c, m in self._coeffs.items() if n - c.dim == k}
        )

    @property
    def dimensions(self) -> tuple[int, ...]:
        n = self.fan.rank
        return tuple(sorted({n - c.dim for c in self._coeffs}))

    @property
    def support(self) -> tuple[Cone, ...]:
        return tuple(c for c in self.fan.cones if c in self._coeffs)

    def _require_same_fan(self, other: "TCycle"):
        if not isinstance(other, TCycle):
            raise TypeError(f"expected a cycle, got {other!r}")
        if self.fan != other.fan:
            raise FanMismatch("cycles live on different fans")

    def __add__(self, other):
        self._require_same_fan(other)
        out = dict(self._coeffs)
        for c, m in other._coeffs.items():
            out[c] = out.get(c, 0) + m
        return TCycle(self.fan, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TCycle(self.fan, {c: -m for c, m in self._coeffs.items()})

    def __rmul__(self, k: int):
        return TCycle(self.fan, {c: k * m for c, m in self._coeffs.items()})

    __mul__ = __rmul__

    def __eq__(self, other):
        return (
            isinstance(other, TCycle)
            and self.fan == other.fan
            and self._coeffs == other._coeffs
        )

    __hash__ = None

    def __repr__(self):
        terms = ", ".join(
            f"{m}*[V{tuple(sorted(c.ray_indices))}]"
            for c, m in sorted(
                self._coeffs.items(), key=lambda cm: self.fan._sort_key(cm[0])
            )
        )
        return f"TCycle({terms or '0'})"


@dataclass(frozen=True, eq=False)
class ChowPresentation:
    """Generators and relation matrix of A_k: one column per generator cone."""

    fan: Fan
    k: int
    generators: tuple[Cone, ...]
    relation_matrix: np.ndarray  # rows = relations


def _quotient_generator_pairing(fan: Fan, sigma: Cone, tau: Cone, m_vec) -> int:
    """Pairing <m, n_{sigma,tau}> for the divisor-of-character relation.

    n_{sigma,tau} is a lattice point of sigma whose class generates the
    rank-one quotient (N ∩ span sigma)/(N ∩ span tau), oriented to the sigma
    side.  The pairing is independent of the representative since m kills
    span tau.
    """
    tau_data = fan._hrep(tau)
    sigma_data = fan._hrep(sigma)
    quotient = tau_data.u[tau_data.r :, :]
    basis_sigma = sigma_data.ui[:, : sigma_data.r]
    a = quotient @ basis_sigma
    _, d, v, _, _ = lattice.smith_transforms(a)
    assert d[0, 0] != 0  # dim sigma = dim tau + 1 forces rank one
    x0 = v[:, 0]
    n_cand = basis_sigma @ x0
    w = a @ x0
    # orient by a generator of sigma outside tau
    free = next(iter(sigma.ray_indices - tau.ray_indices))
    qu = quotient @ lattice.vec(fan.rays[free])
    j = next(i for i in range(len(w)) if w[i] != 0)
    if qu[j] * w[j] < 0:
        n_cand = -n_cand
    return int(sum(int(a_) * int(b_) for a_, b_ in zip(m_vec, n_cand)))


@functools.lru_cache(maxsize=None)
def chow_presentation(fan: Fan, k: int) -> ChowPresentation:
    """Presentation of A_k(X): orbit closures modulo divisors of characters."""
    n = fan.rank
    if not 0 <= k <= n:
        raise BadDimension(f"k must lie in [0, {n}], got {k}")
    gens = fan.cones_of_dim(n - k)
    rows: list[list[int]] = []
    if n - k - 1 >= 0:
        for tau in fan.cones_of_dim(n - k - 1):
            perp = lattice.kernel_basis(
                lattice.mat(fan.cone_generators(tau), width=n)
            )
            star = [
                s for s in gens if tau.ray_indices < s.ray_indices
            ]
            pairings = {
                s: {  # n_{s,tau} pairing against each basis character
                    m: _quotient_generator_pairing(fan, s, tau, m) for m in perp
                }
                for s in star
            }
            for m in perp:
                rows.append(
                    [pairings[s][m] if s in pairings else 0 for s in gens]
                )
    return ChowPresentation(fan, k, gens, lattice.mat(rows, width=len(gens)))


def group_invariants(pres: ChowPresentation) -> tuple[int, list[int]]:
    """Free rank and invariant factors > 1 of the presented group."""
    facs = lattice.invariant_factors(pres.relation_matrix)
    free_rank = len(pres.generators) - len(facs)
    torsion = [f for f in facs if f > 1]
    return free_rank, torsion


def _in_relation_lattice(pres: ChowPresentation, coeff_by_cone: Mapping[Cone, int]) -> bool:
    target = [coeff_by_cone.get(c, 0) for c in pres.generators]
    if all(x == 0 for x in target):
        return True
    return lattice.solve(pres.relation_matrix.T, target) is not None


def equivalent(z1: TCycle, z2: TCycle) -> bool:
    """Rational equivalence, decided grade by grade over the integers."""
    z1._require_same_fan(z2)
    diff = z1 - z2
    n = diff.fan.rank
    for k in sorted({n - c.dim for c in diff._coeffs}):
        part = diff.dimension_part(k)
        if not _in_relation_lattice(chow_presentation(diff.fan, k), part._coeffs):
            return False
    return True


def pushforward_cycle(fm: ToricMorphism, z: TCycle) -> TCycle:
    """Proper pushforward of cycles.

    Supported exactly when the source fan is complete (proper over anything)
    or the morphism is a same-lattice refinement; anything else raises
    NotProper.  On an orbit closure the image class is d * [V(tau)] when the
    dimension is preserved (d the generic fibre cardinality), zero when it
    drops, and leaves the invariant-cycle model otherwise.
    """
    if z.fan != fm.source:
        raise FanMismatch("cycle does not live on the source fan")
    if not (fm.source.is_complete() or fm.is_refinement()):
        raise NotProper(
            "cycle pushforward needs a complete source or a refinement morphism"
        )
    n1, n2 = fm.source.rank, fm.target.rank
    out: dict[Cone, int] = {}
    for sigma_z, m in z._coeffs.items():
        sigma = fm.source.cone_from_generators(z.fan.cone_generators(sigma_z))
        tau = fm.image_cone(sigma)
        dim_src = n1 - sigma.dim
        dim_tgt = n2 - tau.dim
        phi = fm.orbit_lattice_map(sigma)
        if lattice.matrix_rank(phi) < dim_src:
            continue  # the image has smaller dimension, the cycle dies
        if dim_tgt > dim_src:
            # finite onto a proper subtorus orbit: the image closure is not
            # invariant, so its class has no canonical invariant representative
            raise NotOrbitRepresentable(sigma)
        degree = lattice.cokernel_order(phi)
        out[tau] = out.get(tau, 0) + m * degree
    return TCycle(fm.target, out)
