"""Report construction: exact JSON-able dictionaries and text lines.

Coefficients are serialised as exact strings (``"num/den"`` or residues),
never floats; term lists are sorted by exponent so output is reproducible
byte for byte.
"""

from __future__ import annotations

from .deformation import DeformationSet
from .mpoly import render_mpoly
from .numsgp import NumSgp, Presentation
from .poly import Poly, render_poly
from .reduction import ReductionOutcome, ValueBasis


def poly_terms(p: Poly) -> list:
    return [[e, p.field.coeff_str(p.coeffs[e])] for e in p.support]


def poly_entry(p: Poly, value=None) -> dict:
    entry = {"terms": poly_terms(p), "string": render_poly(p, "x")}
    if value is not None:
        entry["value"] = value
    return entry


def semigroup_report(S: NumSgp) -> dict:
    rep = {
        "generators": sorted(set(S.generators)),
        "minimal_generators": S.minimal_generators(),
        "gcd": S.d,
    }
    if S.is_numerical:
        rep.update({
            "conductor": S.conductor,
            "frobenius": S.frobenius,
            "genus": S.genus,
            "gaps": S.gaps(),
            "type_set": S.type_set(),
            "symmetric": S.is_symmetric(),
            "sporadic": S.sporadic_count(),
        })
    else:
        rep["scaled_conductor"] = S.scaled_conductor
    return rep


def presentation_report(pres: Presentation) -> list:
    return [{"alpha": list(a), "beta": list(b), "value": v}
            for a, b, v in pres.pairs]


def basis_report(basis: ValueBasis) -> list:
    return [poly_entry(e.poly, e.value) for e in basis.elements]


def reduction_report(out: ReductionOutcome, field) -> dict:
    return {
        "remainder": poly_entry(out.remainder),
        "expression": [[field.coeff_str(c), list(theta)]
                       for c, theta in out.expression],
        "complete": out.complete,
        "used_conductor_shortcut": out.consumed_conductor_shortcut,
    }


def deformation_report(ds: DeformationSet) -> dict:
    return {
        "setting": ds.setting,
        "variables": list(ds.variables),
        "generators": [poly_entry(p) for p in ds.generators],
        "homogenized_generators": [render_mpoly(h)
                                   for h in ds.homogenized_generators],
        "toric": [render_mpoly(r) for r in ds.toric],
        "exact": [render_mpoly(r) for r in ds.exact],
        "homogenized": [render_mpoly(r) for r in ds.homogenized],
        "complete": ds.complete,
    }


def char_sequence_report(seq, conductor=None) -> dict:
    rep = {}
    if hasattr(seq, "m"):
        rep["m"] = list(seq.m)
    rep["d"] = list(seq.d)
    rep["e"] = list(seq.e)
    rep["r"] = list(seq.r)
    if conductor is not None:
        rep["C"] = conductor
    return rep


# -- text rendering ----------------------------------------------------


def semigroup_lines(S: NumSgp) -> list[str]:
    mg = S.minimal_generators()
    lines = [f"minimal generators: {mg}"]
    if S.is_numerical:
        lines.append(f"conductor: {S.conductor}   frobenius: {S.frobenius}   "
                     f"genus: {S.genus}")
        lines.append(f"gaps: {S.gaps()}")
        lines.append(f"type set: {S.type_set()}   symmetric: {S.is_symmetric()}   "
                     f"sporadic: {S.sporadic_count()}")
    else:
        lines.append(f"gcd: {S.d} (not a numerical semigroup); "
                     f"scaled conductor: {S.scaled_conductor}")
    return lines


def basis_lines(basis: ValueBasis, title: str) -> list[str]:
    lines = [f"{title}:"]
    for e in basis.elements:
        lines.append(f"  value {e.value}: {render_poly(e.poly, 'x')}")
    return lines


def deformation_lines(ds: DeformationSet) -> list[str]:
    lines = [f"deformation ({ds.setting}), variables {', '.join(ds.variables)}:"]
    lines.append("  homogenized generators: "
                 + ", ".join(render_mpoly(h) for h in ds.homogenized_generators))
    for rel in ds.relators:
        flag = "" if rel.complete else "   [inexact]"
        lines.append(f"  F: {render_mpoly(rel.toric)}")
        lines.append(f"  G: {render_mpoly(rel.exact)}")
        lines.append(f"  H: {render_mpoly(rel.homogenized)}{flag}")
    return lines
