"""Finite diagrams of completions and compatible families of cycle classes.

A possibly non-complete fan is completed in several ways; the completions,
together with refinement maps between them, form a finite diagram.  A family
assigns a cycle class to every node, and is *compatible* when every
refinement edge pushes the source class onto the target class modulo
rational equivalence.  Such families are the computable stand-in for a class
in the inverse limit of the Chow groups of all completions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .chow import TCycle, equivalent, pushforward_cycle
from .constructible import ConstructibleFunction, one_x, pushforward
from .csm import csm
from .errors import (
    BaseNotSubfan,
    ConeNotInBase,
    EdgeNotRefinement,
    FanMismatch,
    Incompatible,
    NodeNotComplete,
)
from .fan import Cone, Fan, ToricMorphism, complete_fan_2d, identity_morphism, star_subdivision

__all__ = [
    "DiagramEdge",
    "CompletionDiagram",
    "ProChowFamily",
    "build_diagram",
    "auto_diagram",
    "distinguished_class",
    "procsm_family",
    "compatibility_failures",
    "verify_compatibility",
    "procsm_of_base",
]


@dataclass(frozen=True, eq=False)
class DiagramEdge:
    source: str
    target: str
    morphism: ToricMorphism


@dataclass(frozen=True, eq=False)
class CompletionDiagram:
    """Validated diagram: complete nodes containing the base, refinement edges."""

    base: Fan
    nodes: Mapping[str, Fan]
    edges: tuple[DiagramEdge, ...]

    def inclusion(self, name: str) -> ToricMorphism:
        """The open toric inclusion of the base into a node."""
        return identity_morphism(self.base, self.nodes[name])


def build_diagram(
    base: Fan,
    nodes: Mapping[str, Fan],
    edges: Iterable[tuple[str, str]] = (),
) -> CompletionDiagram:
    """Validate completeness of nodes, the subfan property, and the edges."""
    nodes = dict(nodes)
    for name, fan in nodes.items():
        if not fan.is_complete():
            raise NodeNotComplete(f"node {name!r} is not complete")
        if not base.is_subfan(fan):
            raise BaseNotSubfan(f"the base is not a subfan of node {name!r}")
    built = []
    for src, dst in edges:
        if src not in nodes or dst not in nodes:
            raise EdgeNotRefinement(f"edge ({src!r}, {dst!r}) names unknown nodes")
        try:
            fm = identity_morphism(nodes[src], nodes[dst])
        except (Incompatible, FanMismatch) as exc:
            raise EdgeNotRefinement(
                f"edge ({src!r}, {dst!r}) is not a refinement: {exc}"
            ) from None
        if not fm.is_refinement():
            raise EdgeNotRefinement(
                f"edge ({src!r}, {dst!r}): supports differ, not a refinement"
            )
        built.append(DiagramEdge(src, dst, fm))
    return CompletionDiagram(base, nodes, tuple(built))


def auto_diagram(base: Fan, subdivision_rays: Sequence[Sequence[int]] = ()) -> CompletionDiagram:
    """Rank <= 2 convenience: complete the base, then chain star subdivisions.

    Node ``Z0`` is the gap-rule completion; each requested ray produces a
    further node refining the previous one, with the corresponding edge.
    """
    z = complete_fan_2d(base)
    nodes = {"Z0": z}
    edges = []
    prev = "Z0"
    for i, ray in enumerate(subdivision_rays, start=1):
        name = f"Z{i}"
        nodes[name] = star_subdivision(nodes[prev], ray)
        edges.append((name, prev))
        prev = name
    return build_diagram(base, nodes, edges)


@dataclass(frozen=True, eq=False)
class ProChowFamily:
    """A cycle class on every node of a completion diagram."""

    diagram: CompletionDiagram
    classes: Mapping[str, TCycle]


def distinguished_class(cone: Cone, diagram: CompletionDiagram) -> ProChowFamily:
    """The family of closures of one base orbit closure: [V(cone)] at each node."""
    if not diagram.base.has_cone(cone):
        raise ConeNotInBase(f"{cone} is not a cone of the base fan")
    gens = diagram.base.cone_generators(cone)
    classes = {}
    for name, fan in diagram.nodes.items():
        classes[name] = TCycle(fan, {fan.cone_from_generators(gens): 1})
    return ProChowFamily(diagram, classes)


def procsm_family(alpha: ConstructibleFunction, diagram: CompletionDiagram) -> ProChowFamily:
    """CSM classes of the extension of ``alpha`` by zero to every node.

    The component at a node Z is csm of the pushforward of ``alpha`` along
    the open inclusion base -> Z, which simply transports the orbit
    coefficients along the cone identification.
    """
    if alpha.fan != diagram.base:
        raise ConeNotInBase("function does not live on the base fan")
    classes = {}
    for name in diagram.nodes:
        classes[name] = csm(pushforward(diagram.inclusion(name), alpha))
    return ProChowFamily(diagram, classes)


def compatibility_failures(
    family: ProChowFamily,
) -> list[tuple[DiagramEdge, TCycle, TCycle]]:
    """Edges where pushing the source class does not give the target class.

    Returns (edge, pushed source class, target class) per failing edge, the
    witness data printed by the command-line driver.
    """
    bad = []
    for edge in family.diagram.edges:
        pushed = pushforward_cycle(edge.morphism, family.classes[edge.source])
        target = family.classes[edge.target]
        if not equivalent(pushed, target):
            bad.append((edge, pushed, target))
    return bad


def verify_compatibility(family: ProChowFamily) -> bool:
    """True iff every edge pushes its source class onto the target class."""
    return not compatibility_failures(family)


def procsm_of_base(alpha: ConstructibleFunction, diagram: CompletionDiagram) -> ProChowFamily:
    """CSM family of the constant function 1 on the base.

    Checked on the fly against the sum of the distinguished classes of all
    base cones, node by node and coefficient by coefficient.
    """
    if alpha != one_x(diagram.base):
        raise ValueError("procsm_of_base expects the constant function 1 on the base")
    family = procsm_family(alpha, diagram)
    for name, fan in diagram.nodes.items():
        total = TCycle(fan, {})
        for cone in diagram.base.cones:
            total = total + distinguished_class(cone, diagram).classes[name]
        if family.classes[name] != total:
            raise AssertionError(
                f"orbit-closure sum mismatch at node {name!r}: "
                f"{family.classes[name]!r} vs {total!r}"
            )
    return family
