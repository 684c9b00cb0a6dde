import random

import pytest

from prochow import catalog
from prochow.chow import TCycle
from prochow.constructible import ConstructibleFunction, indicator_orbit, one_x
from prochow.csm import csm
from prochow.errors import (
    BaseNotSubfan,
    ConeNotInBase,
    EdgeNotRefinement,
    NodeNotComplete,
)
from prochow.families import (
    ProChowFamily,
    auto_diagram,
    build_diagram,
    compatibility_failures,
    distinguished_class,
    procsm_family,
    procsm_of_base,
    verify_compatibility,
)
from prochow.fan import build_fan, complete_fan_2d, star_subdivision
from prochow.lattice import primitive


def torus_diagram(p2, bl):
    return build_diagram(catalog.torus(2), {"P2": p2, "Bl": bl}, [("Bl", "P2")])


def test_build_diagram_torus_base(p2, bl):
    d = torus_diagram(p2, bl)
    assert len(d.edges) == 1
    assert d.edges[0].morphism.is_refinement()


def test_build_diagram_a2_base(a2):
    z0 = complete_fan_2d(a2)
    z1 = star_subdivision(z0, (-1, 1))
    d = build_diagram(a2, {"Z0": z0, "Z1": z1}, [("Z1", "Z0")])
    assert a2.is_subfan(d.nodes["Z1"])


def test_build_diagram_errors(p1, p2, a1, a2, bl):
    with pytest.raises(NodeNotComplete):
        build_diagram(p1, {"A1": a1}, [])
    with pytest.raises(BaseNotSubfan):
        build_diagram(p1xp1_base := build_fan(2, [(1, 1)], [[0]]), {"P2": p2}, [])
    with pytest.raises(EdgeNotRefinement):
        build_diagram(catalog.torus(2), {"P2": p2, "Bl": bl}, [("P2", "Bl")])


def test_auto_diagram(a2):
    d = auto_diagram(a2, [(-1, 1)])
    assert set(d.nodes) == {"Z0", "Z1"}
    assert len(d.edges) == 1
    assert verify_compatibility(procsm_family(one_x(a2), d))


def test_distinguished_class_examples(a1, a2):
    d1 = auto_diagram(a1)
    fam = distinguished_class(a1.zero_cone, d1)
    node = d1.nodes["Z0"]
    assert fam.classes["Z0"] == TCycle(node, {node.zero_cone: 1})

    d2 = auto_diagram(a2, [(-1, 1)])
    axis = a2.cone_from_generators([(1, 0)])
    fam2 = distinguished_class(axis, d2)
    for name, fan in d2.nodes.items():
        assert fam2.classes[name] == TCycle(
            fan, {fan.cone_from_generators([(1, 0)]): 1}
        )

    with pytest.raises(ConeNotInBase):
        distinguished_class(d2.nodes["Z0"].cone_from_generators([(-1, -1)]), d2)


def test_distinguished_classes_always_compatible(a1, a2, p2, bl):
    diagrams = [
        auto_diagram(a1),
        auto_diagram(a2, [(-1, 1)]),
        torus_diagram(p2, bl),
    ]
    for d in diagrams:
        for cone in d.base.cones:
            assert verify_compatibility(distinguished_class(cone, d))


def test_procsm_family_a2(a2):
    d = auto_diagram(a2)
    z = d.nodes["Z0"]
    fam = procsm_family(one_x(a2), d)
    expected = TCycle(
        z,
        {
            z.zero_cone: 1,
            z.cone_from_generators([(1, 0)]): 1,
            z.cone_from_generators([(0, 1)]): 1,
            z.cone_from_generators([(1, 0), (0, 1)]): 1,
        },
    )
    assert fam.classes["Z0"] == expected


def test_procsm_family_torus_base(p2, bl):
    d = torus_diagram(p2, bl)
    base = catalog.torus(2)
    fam = procsm_family(indicator_orbit(base, base.zero_cone), d)
    assert fam.classes["P2"] == TCycle(p2, {p2.zero_cone: 1})
    assert fam.classes["Bl"] == TCycle(bl, {bl.zero_cone: 1})
    assert verify_compatibility(fam)


def test_procsm_family_complete_base_collapses(p2):
    d = build_diagram(p2, {"P2": p2}, [])
    rng = random.Random(8)
    alpha = ConstructibleFunction(p2, {c: rng.randint(-3, 3) for c in p2.cones})
    fam = procsm_family(alpha, d)
    assert fam.classes["P2"] == csm(alpha)


def test_compatibility_p2_minus_point(p2, bl):
    # base: P^2 fan without its cone(e1,e2), i.e. the complement of a fixed point
    base = build_fan(
        2,
        [(1, 0), (0, 1), (-1, -1)],
        [[1, 2], [2, 0], [0], [1]],
    )
    d = build_diagram(base, {"P2": p2, "Bl": bl}, [("Bl", "P2")])
    fam = procsm_family(one_x(base), d)
    assert verify_compatibility(fam)


def test_compatibility_fails_for_corrupted_family(p2, bl):
    d = torus_diagram(p2, bl)
    fam = procsm_family(one_x(catalog.torus(2)), d)
    assert verify_compatibility(fam)
    corrupted = dict(fam.classes)
    pt = p2.cone_from_generators([(1, 0), (0, 1)])
    corrupted["P2"] = corrupted["P2"] + TCycle(p2, {pt: 1})
    bad = ProChowFamily(d, corrupted)
    failures = compatibility_failures(bad)
    assert len(failures) == 1
    edge, pushed, target = failures[0]
    assert edge.source == "Bl" and edge.target == "P2"
    assert (target - pushed).coefficient(pt) == 1


def test_procsm_of_base_examples(a1, a2):
    d1 = auto_diagram(a1)
    fam = procsm_of_base(one_x(a1), d1)
    node = d1.nodes["Z0"]
    origin = node.cone_from_generators([(1,)])
    assert fam.classes["Z0"] == TCycle(node, {node.zero_cone: 1, origin: 1})

    d2 = auto_diagram(a2)
    fam2 = procsm_of_base(one_x(a2), d2)
    assert len(fam2.classes["Z0"].coeffs) == 4

    base = catalog.torus(2)
    d3 = build_diagram(base, {"P2": catalog.projective_plane()}, [])
    fam3 = procsm_of_base(one_x(base), d3)
    z = d3.nodes["P2"]
    assert fam3.classes["P2"] == TCycle(z, {z.zero_cone: 1})


def test_procsm_of_base_rejects_other_functions(a1):
    d = auto_diagram(a1)
    with pytest.raises(ValueError):
        procsm_of_base(2 * one_x(a1), d)


def random_completion_diagram(base, rng, depth):
    """Chain of star subdivisions of the gap-rule completion, avoiding base cones."""
    nodes = {"Z0": complete_fan_2d(base)}
    edges = []
    prev = "Z0"
    base_interior = base != catalog.torus(2)
    for i in range(1, depth + 1):
        while True:
            cand = (rng.randint(-3, 3), rng.randint(-3, 3))
            if cand == (0, 0):
                continue
            cand = primitive(cand)
            if cand in nodes[prev].rays:
                continue
            if base_interior and cand[0] >= 0 and cand[1] >= 0:
                continue  # would subdivide a cone of the A^2 base
            break
        name = f"Z{i}"
        nodes[name] = star_subdivision(nodes[prev], cand)
        edges.append((name, prev))
        prev = name
    return build_diagram(base, nodes, edges)


def test_random_families_are_compatible():
    rng = random.Random(77)
    for _ in range(8):
        base = catalog.affine_plane() if rng.random() < 0.5 else catalog.torus(2)
        d = random_completion_diagram(base, rng, rng.randint(0, 2))
        alpha = ConstructibleFunction(base, {c: rng.randint(-3, 3) for c in base.cones})
        assert verify_compatibility(procsm_family(alpha, d))
