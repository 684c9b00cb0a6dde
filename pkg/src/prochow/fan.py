"""Cones, fans and validated torus-equivariant morphisms.

A fan is a finite collection of strongly convex rational polyhedral cones in
a fixed lattice ``Z^rank``, closed under faces, any two cones meeting in a
common face.  Cones are stored as sets of indices into the fan's list of
primitive ray generators; across different fans cones are always compared by
their generator *vectors*, never by index.

Everything here is exact: face lattices, memberships and pairwise
intersections are decided with integer kernels and Smith normal forms, not
with floating point.
"""

from __future__ import annotations

import functools
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from . import lattice
from .errors import (
    BadIntersection,
    ConeNotInFan,
    FanError,
    FanMismatch,
    Incompatible,
    NotExtremeRay,
    NotPrimitiveRay,
    NotStronglyConvex,
    RankTooHigh,
    RayAlreadyPresent,
    RayOutsideSupport,
    UnusedRay,
    ZeroVector,
)

__all__ = [
    "Cone",
    "Fan",
    "ToricMorphism",
    "build_fan",
    "orbits",
    "star_subdivision",
    "complete_fan_2d",
    "smooth_refine_2d",
    "make_morphism",
    "identity_morphism",
    "compose",
]

Vector = tuple[int, ...]


@dataclass(frozen=True)
class Cone:
    """A cone of a fan: the set of its extreme-ray indices and its dimension."""

    ray_indices: frozenset[int]
    dim: int

    def __repr__(self) -> str:
        return f"Cone({sorted(self.ray_indices)}, dim={self.dim})"


class _ConeData:
    """Span transforms, facet normals and face list of one generated cone."""

    __slots__ = ("u", "ui", "r", "normals", "faces")

    def __init__(self, u, ui, r, normals, faces):
        self.u = u
        self.ui = ui
        self.r = r
        self.normals = normals  # primitive covectors in span coordinates
        self.faces = faces  # absolute ray-index frozensets, or None


def _span_transforms(gens: Sequence[Vector], rank: int):
    """U, Uinv, r with U mapping span(gens) ∩ Z^rank onto Z^r x 0."""
    b = lattice.mat([[g[i] for g in gens] for i in range(rank)], width=len(gens))
    u, _, _, ui, _ = lattice.smith_transforms(b)
    facs = lattice.invariant_factors(b)
    return u, ui, len(facs)


def _span_coords(u, r, gens):
    out = []
    for g in gens:
        y = u @ lattice.vec(g)
        out.append(tuple(int(t) for t in y[:r]))
    return out


def _facet_data(coords: Sequence[Vector], d: int, what: str):
    """Facet normals and facet zero-sets of a full-dimensional cone in R^d.

    Every facet of a finitely generated cone is spanned by the generators
    lying on it, so all candidate supporting hyperplanes arise from
    (d-1)-subsets of the generators.  Raises NotStronglyConvex when the valid
    normals fail to span, i.e. the cone contains a line.
    """
    k = len(coords)
    found = {}
    for subset in combinations(range(k), d - 1):
        ker = lattice.kernel_basis(lattice.mat([coords[i] for i in subset], width=d))
        if len(ker) != 1:
            continue
        normal = ker[0]
        vals = [sum(a * b for a, b in zip(normal, g)) for g in coords]
        if all(x >= 0 for x in vals):
            pass
        elif all(x <= 0 for x in vals):
            normal = tuple(-a for a in normal)
            vals = [-x for x in vals]
        else:
            continue
        found[normal] = frozenset(i for i, x in enumerate(vals) if x == 0)
    normals = list(found)
    if lattice.matrix_rank(lattice.mat(normals, width=d)) < d:
        raise NotStronglyConvex(f"{what} contains a line")
    return normals, list(found.values())


def _face_closure(k: int, facets: Iterable[frozenset]) -> set[frozenset]:
    full = frozenset(range(k))
    faces = {full}
    frontier = [full]
    while frontier:
        f = frontier.pop()
        for z in facets:
            g = f & z
            if g not in faces:
                faces.add(g)
                frontier.append(g)
    return faces


def _analyze_cone(rank: int, rays: Sequence[Vector], idxset: frozenset) -> _ConeData:
    """Validate one generated cone and list its faces (absolute indices)."""
    idx = sorted(idxset)
    gens = [rays[i] for i in idx]
    u, ui, r = _span_transforms(gens, rank)
    if not idx:
        return _ConeData(u, ui, 0, [], {frozenset()})
    what = f"cone{tuple(gens)}"
    coords = _span_coords(u, r, gens)
    normals, facets_rel = _facet_data(coords, r, what)
    faces_rel = _face_closure(len(idx), facets_rel)
    for pos in range(len(idx)):
        if frozenset({pos}) not in faces_rel:
            raise NotExtremeRay(f"generator {gens[pos]} of {what} is not an extreme ray")
    faces = {frozenset(idx[p] for p in rel) for rel in faces_rel}
    return _ConeData(u, ui, r, normals, faces)


def _intersection_extreme_rays(rank: int, a: _ConeData, b: _ConeData) -> set[Vector]:
    """Primitive extreme rays of the set-theoretic intersection of two cones.

    Works inside W = span(a) ∩ span(b); the intersection is pointed (it sits
    inside a pointed cone), so each extreme ray is cut out by w-1 independent
    active facet inequalities and brute-force enumeration is exhaustive.
    """
    tails = [tuple(int(t) for t in row) for row in a.u[a.r:, :]]
    tails += [tuple(int(t) for t in row) for row in b.u[b.r:, :]]
    wbasis = lattice.kernel_basis(lattice.mat(tails, width=rank))
    w = len(wbasis)
    if w == 0:
        return set()
    wmat = lattice.mat(wbasis, width=rank).T  # rank x w, columns = basis
    rows = []
    for data in (a, b):
        y = (data.u @ wmat)[: data.r, :]
        for nrm in data.normals:
            rows.append(tuple(int(t) for t in (lattice.vec(nrm) @ y)))
    cmat = lattice.mat(rows, width=w)
    found: set[Vector] = set()
    for subset in combinations(range(len(rows)), w - 1):
        ker = lattice.kernel_basis(cmat[list(subset), :])
        if len(ker) != 1:
            continue
        cand = lattice.vec(ker[0])
        vals = cmat @ cand
        if all(x >= 0 for x in vals):
            pass
        elif all(x <= 0 for x in vals):
            cand = -cand
        else:
            continue
        x = wmat @ cand
        found.add(tuple(int(t) for t in x))
    return found


class Fan:
    """A validated fan.  Use :func:`build_fan`; direct construction skips checks."""

    def __init__(self, rank: int, rays: tuple[Vector, ...], cones: dict[frozenset, Cone]):
        self.rank = rank
        self.rays = rays
        self._cones = cones
        self.zero_cone = cones[frozenset()]
        idxsets = list(cones)
        self.maximal_cones = tuple(
            sorted(
                (cones[f] for f in idxsets if not any(f < g for g in idxsets)),
                key=self._sort_key,
            )
        )
        self._gen_index = {
            frozenset(self.cone_generators(c)): c for c in cones.values()
        }
        self._hrep_cache: dict[frozenset, _ConeData] = {}
        self._key = (rank, frozenset(self._gen_index))
        self._sorted_cones: tuple[Cone, ...] | None = None

    # -------------------------------------------------------------- basics

    def _sort_key(self, cone: Cone):
        return (cone.dim, tuple(sorted(self.cone_generators(cone))))

    @property
    def cones(self) -> tuple[Cone, ...]:
        """All cones, sorted by dimension then generators (deterministic)."""
        if self._sorted_cones is None:
            self._sorted_cones = tuple(sorted(self._cones.values(), key=self._sort_key))
        return self._sorted_cones

    def cone(self, ray_indices: Iterable[int]) -> Cone:
        c = self._cones.get(frozenset(ray_indices))
        if c is None:
            raise ConeNotInFan(f"no cone with ray indices {sorted(set(ray_indices))}")
        return c

    def has_cone(self, cone: Cone) -> bool:
        return self._cones.get(cone.ray_indices) == cone

    def cone_generators(self, cone: Cone) -> tuple[Vector, ...]:
        return tuple(self.rays[i] for i in sorted(cone.ray_indices))

    def cone_from_generators(self, gens: Iterable[Vector]) -> Cone:
        key = frozenset(tuple(int(c) for c in g) for g in gens)
        c = self._gen_index.get(key)
        if c is None:
            raise ConeNotInFan(f"no cone generated by {sorted(key)}")
        return c

    def cones_of_dim(self, d: int) -> tuple[Cone, ...]:
        return tuple(c for c in self.cones if c.dim == d)

    def faces_of(self, cone: Cone) -> tuple[Cone, ...]:
        self._check(cone)
        return tuple(
            c for c in self.cones if c.ray_indices <= cone.ray_indices
        )

    def facets_of(self, cone: Cone) -> tuple[Cone, ...]:
        self._check(cone)
        return tuple(
            c
            for c in self.cones
            if c.dim == cone.dim - 1 and c.ray_indices < cone.ray_indices
        )

    def star_of(self, cone: Cone) -> tuple[Cone, ...]:
        """All cones having ``cone`` as a face."""
        self._check(cone)
        return tuple(c for c in self.cones if cone.ray_indices <= c.ray_indices)

    def _check(self, cone: Cone) -> None:
        if not self.has_cone(cone):
            raise ConeNotInFan(f"{cone} does not belong to this fan")

    # -------------------------------------------------------------- geometry

    def _hrep(self, cone: Cone) -> _ConeData:
        data = self._hrep_cache.get(cone.ray_indices)
        if data is None:
            gens = self.cone_generators(cone)
            u, ui, r = _span_transforms(gens, self.rank)
            if r == 0:
                normals = []
            else:
                normals, _ = _facet_data(_span_coords(u, r, gens), r, repr(cone))
            data = _ConeData(u, ui, r, normals, None)
            self._hrep_cache[cone.ray_indices] = data
        return data

    def contains_vector(self, cone: Cone, v: Sequence[int]) -> bool:
        data = self._hrep(cone)
        y = data.u @ lattice.vec(v)
        if any(t != 0 for t in y[data.r :]):
            return False
        head = y[: data.r]
        return all(
            sum(a * b for a, b in zip(nrm, head)) >= 0 for nrm in data.normals
        )

    def smallest_cone_containing(self, vectors: Sequence[Sequence[int]]) -> Cone | None:
        cands = [
            c
            for c in self._cones.values()
            if all(self.contains_vector(c, v) for v in vectors)
        ]
        if not cands:
            return None
        inter = frozenset.intersection(*(c.ray_indices for c in cands))
        return self._cones[inter]

    # -------------------------------------------------------------- predicates

    def is_complete(self) -> bool:
        """Support equals the whole space.

        Criterion: nonempty set of maximal cones, all of full dimension, and
        every codimension-one face of a maximal cone is shared by exactly two
        of them (no boundary walls).
        """
        n = self.rank
        if n == 0:
            return True
        maxc = self.maximal_cones
        if not maxc or any(c.dim != n for c in maxc):
            return False
        counts: Counter = Counter()
        for c in maxc:
            for f in self.facets_of(c):
                counts[f] += 1
        return all(v == 2 for v in counts.values())

    def is_smooth(self) -> bool:
        """Every cone is generated by part of a lattice basis."""
        for c in self.maximal_cones:
            gens = self.cone_generators(c)
            if len(gens) != c.dim:
                return False
            facs = lattice.invariant_factors(lattice.mat(gens, width=self.rank))
            if any(f != 1 for f in facs):
                return False
        return True

    def is_subfan(self, other: "Fan") -> bool:
        """True iff every cone of self is a cone of ``other`` (by generators)."""
        if self.rank != other.rank:
            return False
        return all(
            frozenset(self.cone_generators(c)) in other._gen_index for c in self.cones
        )

    # -------------------------------------------------------------- dunder

    def __eq__(self, other) -> bool:
        return isinstance(other, Fan) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"Fan(rank={self.rank}, rays={len(self.rays)}, cones={len(self._cones)})"


def build_fan(rank: int, rays: Iterable[Sequence[int]], maximal_cones: Iterable[Iterable[int]]) -> Fan:
    """Validate rays and cones, generate all faces, and check the fan axioms.

    Raises NotPrimitiveRay, NotStronglyConvex, NotExtremeRay, UnusedRay or
    BadIntersection.  Listing non-maximal cones is harmless.
    """
    rank = int(rank)
    rays = tuple(tuple(int(c) for c in ray) for ray in rays)
    for ray in rays:
        if len(ray) != rank:
            raise FanError(f"ray {ray} does not have length {rank}")
        try:
            if lattice.primitive(ray) != ray:
                raise NotPrimitiveRay(f"ray {ray} is not primitive")
        except ZeroVector:
            raise NotPrimitiveRay(f"ray {ray} is zero") from None
    if len(set(rays)) != len(rays):
        raise NotPrimitiveRay("rays are not distinct")

    listed: list[frozenset] = []
    for c in maximal_cones:
        idx = frozenset(int(i) for i in c)
        for i in idx:
            if not 0 <= i < len(rays):
                raise FanError(f"ray index {i} out of range")
        if idx not in listed:
            listed.append(idx)

    data: dict[frozenset, _ConeData] = {}
    all_faces: set[frozenset] = {frozenset()}
    for idx in listed:
        d = _analyze_cone(rank, rays, idx)
        data[idx] = d
        all_faces |= d.faces

    used = set().union(*all_faces) if all_faces else set()
    for i in range(len(rays)):
        if i not in used:
            raise UnusedRay(f"ray {rays[i]} (index {i}) appears in no cone")

    dims: dict[frozenset, int] = {}
    for f in all_faces:
        if f in data:
            dims[f] = data[f].r
        else:
            _, _, r = _span_transforms([rays[i] for i in sorted(f)], rank)
            dims[f] = r

    maximal = [f for f in all_faces if not any(f < g for g in all_faces)]
    for a, b in combinations(maximal, 2):
        common = a & b
        da, db = data[a], data[b]
        ok = common in da.faces and common in db.faces
        if ok:
            expect = {rays[i] for i in common}
            ok = _intersection_extreme_rays(rank, da, db) == expect
        if not ok:
            ga = tuple(rays[i] for i in sorted(a))
            gb = tuple(rays[i] for i in sorted(b))
            raise BadIntersection(f"cones {ga} and {gb} do not meet in a common face")

    cones = {f: Cone(f, dims[f]) for f in all_faces}
    fan = Fan(rank, rays, cones)
    for idx, d in data.items():
        fan._hrep_cache[idx] = d
    return fan


def orbits(fan: Fan) -> list[tuple[Cone, int]]:
    """Every cone paired with the dimension of its torus orbit."""
    return [(c, fan.rank - c.dim) for c in fan.cones]


# ------------------------------------------------------------------ subdivision


def star_subdivision(fan: Fan, ray: Sequence[int]) -> Fan:
    """Stellar subdivision of ``fan`` at a new primitive ray in its support."""
    ray = tuple(int(c) for c in ray)
    if len(ray) != fan.rank:
        raise FanError(f"ray {ray} does not have length {fan.rank}")
    try:
        if lattice.primitive(ray) != ray:
            raise NotPrimitiveRay(f"subdivision ray {ray} is not primitive")
    except ZeroVector:
        raise NotPrimitiveRay("subdivision ray is zero") from None
    if ray in fan.rays:
        raise RayAlreadyPresent(f"{ray} is already a ray of the fan")
    hit = [c for c in fan.maximal_cones if fan.contains_vector(c, ray)]
    if not hit:
        raise RayOutsideSupport(f"{ray} lies outside the support of the fan")
    new_index = len(fan.rays)
    new_max: list[tuple[int, ...]] = []
    for c in fan.maximal_cones:
        if c not in hit:
            new_max.append(tuple(sorted(c.ray_indices)))
            continue
        for f in fan.facets_of(c):
            if not fan.contains_vector(f, ray):
                new_max.append(tuple(sorted(f.ray_indices | {new_index})))
    return build_fan(fan.rank, fan.rays + (ray,), new_max)


def _angular_cmp(u: Vector, v: Vector) -> int:
    hu = 0 if (u[1] > 0 or (u[1] == 0 and u[0] > 0)) else 1
    hv = 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1
    if hu != hv:
        return hu - hv
    cr = u[0] * v[1] - u[1] * v[0]
    return 0 if cr == 0 else (-1 if cr > 0 else 1)


def _ccw_sorted(rays: Iterable[Vector]) -> list[Vector]:
    return sorted(rays, key=functools.cmp_to_key(_angular_cmp))


def complete_fan_2d(fan: Fan) -> Fan:
    """A complete fan containing ``fan`` as a subfan (lattice rank <= 2).

    Gap rule in rank 2: sort the rays by angle; while some gap between
    consecutive rays has angle >= pi, split it -- for a gap strictly larger
    than pi insert primitive(-(u+v)) of its bounding rays (for a single ray
    this is its negation), for a gap of exactly pi insert the
    counterclockwise perpendicular of its start ray, which -(u+v) cannot
    handle since u+v = 0.  Finally every gap is filled with the 2-cone of its
    bounding rays.  A rank-2 fan with no rays at all is seeded with (1, 0).
    """
    if fan.rank > 2:
        raise RankTooHigh("completion is only implemented for rank <= 2")
    if fan.is_complete():
        return fan
    if fan.rank == 1:
        rays = list(fan.rays)
        for missing in ((1,), (-1,)):
            if missing not in rays:
                rays.append(missing)
        return build_fan(1, rays, [[i] for i in range(len(rays))])

    rays = list(fan.rays)
    if not rays:
        rays.append((1, 0))
    while True:
        if len(rays) == 1:
            u = rays[0]
            rays.append((-u[0], -u[1]))
            continue
        order = _ccw_sorted(rays)
        inserts = []
        for u, v in zip(order, order[1:] + order[:1]):
            cr = u[0] * v[1] - u[1] * v[0]
            if cr > 0:
                continue  # gap < pi, strongly convex
            if cr < 0:
                inserts.append(lattice.primitive((-(u[0] + v[0]), -(u[1] + v[1]))))
            else:  # opposite rays, gap of exactly pi
                inserts.append((-u[1], u[0]))
        if not inserts:
            break
        rays.extend(inserts)

    order = _ccw_sorted(rays)
    pos = {r: i for i, r in enumerate(rays)}
    new_max = [
        (pos[u], pos[v]) for u, v in zip(order, order[1:] + order[:1])
    ]
    return build_fan(2, rays, new_max)


def _hilbert_rays_2d(u: Vector, v: Vector) -> list[Vector]:
    """Lattice points of cone(u, v) on the bounded hull boundary, u to v.

    These are the irreducible elements (the Hilbert basis) of the cone's
    monoid of lattice points; refining along them is the minimal smooth
    subdivision of a two-dimensional cone.
    """
    dt = u[0] * v[1] - u[1] * v[0]
    sgn = 1 if dt > 0 else -1

    def coords_ok(p):  # p = s*u + t*v with 0 <= s, t  (times |dt|)
        s = (p[0] * v[1] - p[1] * v[0]) * sgn
        t = (u[0] * p[1] - u[1] * p[0]) * sgn
        return s, t

    corners = [(0, 0), u, v, (u[0] + v[0], u[1] + v[1])]
    xs = [c[0] for c in corners]
    ys = [c[1] for c in corners]
    pts = []
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            if (x, y) == (0, 0):
                continue
            s, t = coords_ok((x, y))
            if 0 <= s <= abs(dt) and 0 <= t <= abs(dt):
                pts.append((x, y))

    def in_cone(p):
        s, t = coords_ok(p)
        return s >= 0 and t >= 0

    basis = []
    for p in pts:
        reducible = False
        for q in pts:
            if q == p:
                continue
            d = (p[0] - q[0], p[1] - q[1])
            if d != (0, 0) and in_cone(d):
                reducible = True
                break
        if not reducible:
            basis.append(p)

    def from_u_to_v(a, b):  # angular order starting at u (sgn flips orientation)
        cr = a[0] * b[1] - a[1] * b[0]
        return 0 if cr == 0 else (-sgn if cr > 0 else sgn)

    basis.sort(key=functools.cmp_to_key(from_u_to_v))
    return basis


def smooth_refine_2d(fan: Fan) -> Fan:
    """Minimal smooth refinement with the same support (lattice rank <= 2)."""
    if fan.rank > 2:
        raise RankTooHigh("smooth refinement is only implemented for rank <= 2")
    if fan.rank <= 1 or fan.is_smooth():
        return fan
    rays = list(fan.rays)
    new_max: list[tuple[int, ...]] = []
    for c in fan.maximal_cones:
        if c.dim < 2:
            new_max.append(tuple(sorted(c.ray_indices)))
            continue
        u, v = fan.cone_generators(c)
        if abs(u[0] * v[1] - u[1] * v[0]) == 1:
            new_max.append(tuple(sorted(c.ray_indices)))
            continue
        chain = _hilbert_rays_2d(u, v)
        for w in chain:
            if w not in rays:
                rays.append(w)
        idx = {r: i for i, r in enumerate(rays)}
        for a, b in zip(chain, chain[1:]):
            assert abs(a[0] * b[1] - a[1] * b[0]) == 1
            new_max.append((idx[a], idx[b]))
    return build_fan(2, rays, new_max)


# ------------------------------------------------------------------ morphisms


class ToricMorphism:
    """An integer lattice map carrying every source cone into a target cone.

    Construct with :func:`make_morphism`, which certifies compatibility and
    stores, for each source cone, the smallest target cone containing its
    image.
    """

    __slots__ = ("matrix", "source", "target", "_image", "_mnp", "_refinement")

    def __init__(self, matrix, source, target, image):
        self.matrix = matrix
        self.source = source
        self.target = target
        self._image = image
        self._mnp = lattice.mat(matrix, width=source.rank)
        self._refinement: bool | None = None

    def apply(self, v: Sequence[int]) -> Vector:
        return tuple(int(t) for t in self._mnp @ lattice.vec(v))

    def image_cone(self, cone: Cone) -> Cone:
        try:
            return self._image[cone]
        except KeyError:
            raise ConeNotInFan(f"{cone} is not a cone of the source fan") from None

    def orbit_lattice_map(self, cone: Cone) -> np.ndarray:
        """Induced map between orbit cocharacter lattices N1/N_cone -> N2/N_image.

        Computed through saturation quotients; only its rank and cokernel
        order are basis-independent.
        """
        src = self.source._hrep(cone)
        tgt = self.target._hrep(self.image_cone(cone))
        section = src.ui[:, src.r :]
        quotient = tgt.u[tgt.r :, :]
        return quotient @ self._mnp @ section

    def is_refinement(self) -> bool:
        """Identity lattice map and equal supports (source refines target)."""
        if self._refinement is None:
            self._refinement = self._compute_refinement()
        return self._refinement

    def _compute_refinement(self) -> bool:
        n = self.source.rank
        if self.target.rank != n:
            return False
        ident = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
        if self.matrix != ident:
            return False
        for tau in self.target.maximal_cones:
            cells = [
                s
                for s in self.source.maximal_cones
                if s.dim == tau.dim
                and self._image[s].ray_indices <= tau.ray_indices
            ]
            if not cells:
                return False
            counts: Counter = Counter()
            for s in cells:
                for f in self.source.facets_of(s):
                    counts[f] += 1
            for f, cnt in counts.items():
                if cnt == 2:
                    continue
                if cnt > 2 or self._image[f] == tau:
                    return False  # interior wall covered once: support gap
        return True

    def __repr__(self) -> str:
        return f"ToricMorphism({self.matrix}, {self.source!r} -> {self.target!r})"


def make_morphism(matrix: Sequence[Sequence[int]], source: Fan, target: Fan) -> ToricMorphism:
    """Validate that the lattice map carries every source cone into the target fan."""
    rows = tuple(tuple(int(c) for c in row) for row in matrix)
    if len(rows) != target.rank or any(len(r) != source.rank for r in rows):
        raise FanError(
            f"matrix must be {target.rank} x {source.rank}, got "
            f"{len(rows)} x {len(rows[0]) if rows else 0}"
        )
    mnp = lattice.mat(rows, width=source.rank)
    image: dict[Cone, Cone] = {}
    for c in source.cones:
        imgs = [
            tuple(int(t) for t in mnp @ lattice.vec(g))
            for g in source.cone_generators(c)
        ]
        tc = target.smallest_cone_containing(imgs)
        if tc is None:
            raise Incompatible(c)
        image[c] = tc
    return ToricMorphism(rows, source, target, image)


def identity_morphism(source: Fan, target: Fan | None = None) -> ToricMorphism:
    """Identity lattice map, e.g. a refinement or an open toric inclusion."""
    if target is None:
        target = source
    if source.rank != target.rank:
        raise FanMismatch("identity morphism needs equal lattice ranks")
    n = source.rank
    ident = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    return make_morphism(ident, source, target)


def compose(second: ToricMorphism, first: ToricMorphism) -> ToricMorphism:
    """The composite ``second . first`` (revalidated on the composed matrix)."""
    if first.target != second.source:
        raise FanMismatch("morphisms are not composable")
    m = second._mnp @ first._mnp
    rows = [[int(x) for x in row] for row in m]
    return make_morphism(rows, first.source, second.target)
