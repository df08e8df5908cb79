"""Bases of polynomial subalgebras, indexed by degrees.

The degree-valued twin of :mod:`curvesgp.localbasis`: leading monomials
play the role of trailing ones and every division terminates on its own
because degrees strictly decrease (constants are always reducible, the
ground field being part of the algebra).
"""

from __future__ import annotations

from .poly import Poly
from .reduction import (
    BasisElement,
    ReductionContext,
    ReductionOutcome,
    ValueBasis,
    build_basis,
    reduce_poly,
)


def reduce_degree(f: Poly, basis: list[BasisElement],
                  mode: str = "algorithmic") -> ReductionOutcome:
    """Degree-division of f by a basis; expressions are always complete."""
    ctx = ReductionContext(list(basis), "global")
    return reduce_poly(f, ctx, mode)


def global_basis(gens: list[Poly], limits: dict | None = None) -> ValueBasis:
    """Basis of K[f_1, ..., f_s] together with its semigroup of degrees."""
    return build_basis(gens, "global", limits)


def reduced_basis_global(basis: ValueBasis) -> ValueBasis:
    """Tails moved onto the gaps of the degree semigroup."""
    from .localbasis import _rebuilt

    ctx = basis.context()
    new_elements = []
    for elem in basis.elements:
        tail = elem.poly - elem.poly.leading_monomial()
        if tail.is_zero:
            new_elements.append(elem)
            continue
        out = reduce_poly(tail, ctx, "reduced")
        new_elements.append(
            BasisElement(elem.poly.leading_monomial() + out.remainder, elem.value))
    return _rebuilt(basis, new_elements)
