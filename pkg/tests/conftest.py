import pytest

from prochow import catalog
from prochow.fan import build_fan, star_subdivision
from prochow.products import product_fan


@pytest.fixture
def p1():
    return catalog.projective_line()


@pytest.fixture
def p2():
    return catalog.projective_plane()


@pytest.fixture
def a1():
    return catalog.affine_line()


@pytest.fixture
def a2():
    return catalog.affine_plane()


@pytest.fixture
def torus2():
    return catalog.torus(2)


@pytest.fixture
def bl():
    """Blow-up of P^2 at the fixed point of cone(e1, e2)."""
    return catalog.blowup_projective_plane()


@pytest.fixture
def p1xp1():
    return product_fan(catalog.projective_line(), catalog.projective_line()).fan


@pytest.fixture
def bl_p1xp1(p1xp1):
    """P^1 x P^1 blown up at one fixed point."""
    return star_subdivision(p1xp1, (1, 1))


def complete_corpus_factories():
    """The named complete smooth surfaces used across the test suite."""
    return {
        "p1": catalog.projective_line,
        "p2": catalog.projective_plane,
        "p1xp1": lambda: product_fan(
            catalog.projective_line(), catalog.projective_line()
        ).fan,
        "f1": catalog.blowup_projective_plane,
        "bl_p1xp1": lambda: star_subdivision(
            product_fan(catalog.projective_line(), catalog.projective_line()).fan,
            (1, 1),
        ),
    }
