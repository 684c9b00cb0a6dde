"""Exact computations with toric varieties presented as fans.

Capabilities: fan construction and validation, two-dimensional completion
and minimal smooth refinement, constructible functions with
Euler-characteristic pushforward, Chow groups presented by orbit closures
with an exact rational-equivalence decision procedure, CSM classes, an
independent tangent-Chern-class oracle on smooth complete fans, external
products, and compatible families of classes over diagrams of completions.
All arithmetic is exact (arbitrary-precision integers).
"""

from . import catalog
from .chern import intersect_divisor, tangent_chern_class, verify_tangent_formula
from .chow import (
    ChowPresentation,
    TCycle,
    chow_presentation,
    equivalent,
    group_invariants,
    pushforward_cycle,
)
from .constructible import (
    ConstructibleFunction,
    euler_characteristic,
    indicator_closure,
    indicator_orbit,
    one_x,
    pushforward,
)
from .csm import (
    csm,
    cycle_of_decomposition,
    degree_zero_part,
    expand_decomposition,
    verify_independence,
    verify_naturality,
)
from .errors import *  # noqa: F401,F403 -- the exception taxonomy is the API
from .families import (
    CompletionDiagram,
    DiagramEdge,
    ProChowFamily,
    auto_diagram,
    build_diagram,
    compatibility_failures,
    distinguished_class,
    procsm_family,
    procsm_of_base,
    verify_compatibility,
)
from .fan import (
    Cone,
    Fan,
    ToricMorphism,
    build_fan,
    complete_fan_2d,
    compose,
    identity_morphism,
    make_morphism,
    orbits,
    smooth_refine_2d,
    star_subdivision,
)
from .lattice import (
    INFINITE,
    cokernel_order,
    primitive,
    smith_normal_form,
    sublattice_index,
)
from .products import (
    ProductFan,
    external_product_cycle,
    external_product_function,
    product_fan,
    verify_product_formula,
)

__version__ = "0.1.0"
