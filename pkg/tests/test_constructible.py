import random

import pytest

from prochow import catalog
from prochow.constructible import (
    ConstructibleFunction,
    euler_characteristic,
    indicator_closure,
    indicator_orbit,
    one_x,
    pushforward,
)
from prochow.errors import ConeNotInFan, FanMismatch, NotOrbitRepresentable
from prochow.fan import compose, identity_morphism, make_morphism, star_subdivision
from prochow.products import product_fan


def test_one_x(p1, p2):
    f = one_x(p1)
    assert all(f.evaluate(c) == 1 for c in p1.cones)
    assert len(one_x(p2).coeffs) == 7
    t = catalog.torus(2)
    assert one_x(t).coeffs == {t.zero_cone: 1}


def test_partition_of_unity(p2):
    total = ConstructibleFunction(p2, {})
    for c in p2.cones:
        total = total + indicator_orbit(p2, c)
    assert total == one_x(p2)


def test_indicator_closure(p2):
    ray = p2.cone_from_generators([(1, 0)])
    f = indicator_closure(p2, ray)
    assert f.evaluate(ray) == 1
    assert f.evaluate(p2.cone_from_generators([(1, 0), (0, 1)])) == 1
    assert f.evaluate(p2.cone_from_generators([(1, 0), (-1, -1)])) == 1
    assert f.evaluate(p2.cone_from_generators([(0, 1), (-1, -1)])) == 0
    assert sum(f.coeffs.values()) == 3
    assert indicator_closure(p2, p2.zero_cone) == one_x(p2)


def test_evaluate_errors(p2, bl):
    foreign = bl.cone_from_generators([(1, 1)])  # index 3: no such ray in P^2
    with pytest.raises(ConeNotInFan):
        one_x(p2).evaluate(foreign)


def test_pushforward_blowdown(p2, bl):
    fm = identity_morphism(bl, p2)
    pushed = pushforward(fm, one_x(bl))
    fixed = p2.cone_from_generators([(1, 0), (0, 1)])
    assert pushed == one_x(p2) + indicator_orbit(p2, fixed)


def test_pushforward_projection(p1, p1xp1):
    fm = make_morphism([[1, 0]], p1xp1, p1)
    assert pushforward(fm, one_x(p1xp1)) == 2 * one_x(p1)


def test_pushforward_multiplication_by_two(p1):
    fm = make_morphism([[2]], p1, p1)
    pushed = pushforward(fm, one_x(p1))
    plus = p1.cone_from_generators([(1,)])
    minus = p1.cone_from_generators([(-1,)])
    expected = (
        2 * indicator_orbit(p1, p1.zero_cone)
        + indicator_orbit(p1, plus)
        + indicator_orbit(p1, minus)
    )
    assert pushed == expected


def test_pushforward_diagonal_not_representable(p1, p1xp1):
    fm = make_morphism([[1], [1]], p1, p1xp1)
    with pytest.raises(NotOrbitRepresentable) as err:
        pushforward(fm, one_x(p1))
    assert err.value.cone == p1.zero_cone


def test_pushforward_fan_mismatch(p1, p2, bl):
    fm = identity_morphism(bl, p2)
    with pytest.raises(FanMismatch):
        pushforward(fm, one_x(p1))


def test_euler_characteristic(p2):
    assert euler_characteristic(one_x(p2)) == 3
    assert euler_characteristic(one_x(catalog.torus(2))) == 0
    ray = p2.cone_from_generators([(1, 0)])
    assert euler_characteristic(indicator_closure(p2, ray)) == 2
    assert euler_characteristic(one_x(catalog.affine_line())) == 1


def test_euler_matches_pushforward_to_point(p2, bl):
    to_point = make_morphism([], p2, catalog.point())
    for alpha in (one_x(p2), 3 * indicator_closure(p2, p2.cone([0]))):
        pushed = pushforward(to_point, alpha)
        assert pushed.evaluate(catalog.point().zero_cone) == euler_characteristic(alpha)


def test_pushforward_linearity(p2, bl):
    fm = identity_morphism(bl, p2)
    rng = random.Random(11)
    cones = list(bl.cones)
    a = ConstructibleFunction(bl, {c: rng.randint(-3, 3) for c in cones})
    b = ConstructibleFunction(bl, {c: rng.randint(-3, 3) for c in cones})
    assert pushforward(fm, 2 * a + 3 * b) == 2 * pushforward(fm, a) + 3 * pushforward(fm, b)


def test_pushforward_functoriality(p2, bl):
    down = identity_morphism(bl, p2)
    to_point = make_morphism([], p2, catalog.point())
    both = compose(to_point, down)
    alpha = one_x(bl)
    assert pushforward(both, alpha) == pushforward(to_point, pushforward(down, alpha))


def test_pushforward_preserves_euler(p1, p2, bl, p1xp1):
    cases = [
        (identity_morphism(bl, p2), one_x(bl)),
        (make_morphism([[1, 0]], p1xp1, p1), one_x(p1xp1)),
        (make_morphism([[3]], p1, p1), one_x(p1)),
    ]
    for fm, alpha in cases:
        assert euler_characteristic(pushforward(fm, alpha)) == euler_characteristic(alpha)


def test_refinement_difference_supported_on_subdivided_cones():
    rng = random.Random(31)
    from prochow.lattice import primitive

    for _ in range(8):
        coarse = catalog.projective_plane()
        fine = coarse
        for _ in range(rng.randint(1, 3)):
            while True:
                cand = (rng.randint(-3, 3), rng.randint(-3, 3))
                if cand != (0, 0) and primitive(cand) not in fine.rays:
                    fine = star_subdivision(fine, primitive(cand))
                    break
        fm = identity_morphism(fine, coarse)
        diff = pushforward(fm, one_x(fine)) - one_x(coarse)
        fine_gen_sets = {frozenset(fine.cone_generators(c)) for c in fine.cones}
        for cone in diff.support:
            assert frozenset(coarse.cone_generators(cone)) not in fine_gen_sets
