"""Ready-made fans: projective spaces, affine spaces, tori, Hirzebruch surfaces."""

from __future__ import annotations

from .fan import Fan, build_fan, star_subdivision

__all__ = [
    "point",
    "torus",
    "affine_space",
    "affine_line",
    "affine_plane",
    "projective_space",
    "projective_line",
    "projective_plane",
    "hirzebruch",
    "blowup_projective_plane",
]


def point() -> Fan:
    """The rank-0 fan of a point."""
    return build_fan(0, [], [])


def torus(rank: int) -> Fan:
    """The fan of the torus itself: just the zero cone."""
    return build_fan(rank, [], [])


def affine_space(n: int) -> Fan:
    """Single maximal cone spanned by the standard basis."""
    rays = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    return build_fan(n, rays, [list(range(n))])


def affine_line() -> Fan:
    return affine_space(1)


def affine_plane() -> Fan:
    return affine_space(2)


def projective_space(n: int) -> Fan:
    """Rays e_1, ..., e_n and -(e_1 + ... + e_n); all n-subsets are maximal."""
    rays = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    rays.append(tuple(-1 for _ in range(n)))
    cones = [[j for j in range(n + 1) if j != i] for i in range(n + 1)]
    return build_fan(n, rays, cones)


def projective_line() -> Fan:
    return projective_space(1)


def projective_plane() -> Fan:
    return projective_space(2)


def hirzebruch(a: int) -> Fan:
    """The Hirzebruch surface F_a, rays (1,0), (0,1), (-1,a), (0,-1)."""
    rays = [(1, 0), (0, 1), (-1, a), (0, -1)]
    return build_fan(2, rays, [[0, 1], [1, 2], [2, 3], [3, 0]])


def blowup_projective_plane() -> Fan:
    """P^2 blown up at the fixed point of cone(e1, e2); isomorphic to F_1."""
    return star_subdivision(projective_plane(), (1, 1))
