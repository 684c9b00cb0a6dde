"""CSM classes of constructible functions on toric varieties.

On a toric variety the CSM class of an orbit indicator is the fundamental
class of the orbit closure (the log tangent bundle of any smooth toric
compactification of a torus is trivial), so the transformation is the
coefficientwise reinterpretation of a constructible function as a cycle.
In particular the class of the constant function 1 is the sum of all
orbit-closure classes, and its degree is the Euler characteristic.
"""

from __future__ import annotations

from typing import Iterable

from .chow import TCycle, equivalent, pushforward_cycle
from .constructible import ConstructibleFunction, pushforward
from .errors import ConeNotInFan, NotComplete, NotSameFunction
from .fan import Cone, Fan, ToricMorphism

__all__ = [
    "csm",
    "degree_zero_part",
    "verify_naturality",
    "verify_independence",
    "cycle_of_decomposition",
    "expand_decomposition",
]


def csm(alpha: ConstructibleFunction) -> TCycle:
    """The CSM class of ``alpha``: same coefficients, read as a cycle."""
    return TCycle(alpha.fan, dict(alpha.coeffs))


def degree_zero_part(z: TCycle) -> int:
    """Sum of the point-class coefficients; needs a complete fan.

    On a complete (connected) toric variety all invariant points are
    rationally equivalent, so this is the degree of the zero-dimensional
    part.
    """
    if not z.fan.is_complete():
        raise NotComplete("degree is only defined on complete fans")
    n = z.fan.rank
    return sum(m for c, m in z.coeffs.items() if c.dim == n)


def verify_naturality(fm: ToricMorphism, alpha: ConstructibleFunction) -> bool:
    """Check pushforward-then-csm against csm-then-pushforward.

    The comparison is modulo rational equivalence on the target: equality at
    the cycle level genuinely fails (a blow-down maps two fixed points onto
    one), the class-level identity is the contract.
    """
    lhs = pushforward_cycle(fm, csm(alpha))
    rhs = csm(pushforward(fm, alpha))
    return equivalent(lhs, rhs)


# A decomposition is a list of terms (kind, cone, coefficient) with kind
# "orbit" for an orbit indicator or "closure" for an orbit-closure indicator.
Term = tuple[str, Cone, int]


def expand_decomposition(fan: Fan, terms: Iterable[Term]) -> ConstructibleFunction:
    """Expand closure indicators into the orbit basis and sum up."""
    total = ConstructibleFunction(fan, {})
    for kind, cone, coeff in terms:
        if not fan.has_cone(cone):
            raise ConeNotInFan(f"{cone} is not a cone of {fan!r}")
        if kind == "orbit":
            total = total + ConstructibleFunction(fan, {cone: int(coeff)})
        elif kind == "closure":
            total = total + ConstructibleFunction(
                fan, {c: int(coeff) for c in fan.star_of(cone)}
            )
        else:
            raise ValueError(f"unknown term kind {kind!r}")
    return total


def cycle_of_decomposition(fan: Fan, terms: Iterable[Term]) -> TCycle:
    """CSM cycle of a decomposition, term by term.

    Orbit terms contribute the orbit-closure class directly; closure terms
    contribute the sum of the classes in their star.  This is the route a
    by-hand computation would take, kept independent of expand-then-csm.
    """
    total = TCycle(fan, {})
    for kind, cone, coeff in terms:
        if kind == "orbit":
            total = total + TCycle(fan, {cone: int(coeff)})
        elif kind == "closure":
            total = total + TCycle(fan, {c: int(coeff) for c in fan.star_of(cone)})
        else:
            raise ValueError(f"unknown term kind {kind!r}")
    return total


def verify_independence(fan: Fan, terms1: Iterable[Term], terms2: Iterable[Term]) -> bool:
    """Two decompositions of one function must induce the same cycle.

    Raises NotSameFunction if the two expansions disagree as functions.
    """
    terms1 = list(terms1)
    terms2 = list(terms2)
    if expand_decomposition(fan, terms1) != expand_decomposition(fan, terms2):
        raise NotSameFunction("the decompositions expand to different functions")
    return cycle_of_decomposition(fan, terms1) == cycle_of_decomposition(fan, terms2)
