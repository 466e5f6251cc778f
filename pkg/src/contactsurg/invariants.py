"""Homotopy invariants of contact structures from surgery presentations.

For a presentation with intersection form Q, rotation vector r, and l
contact (+1)-surgeries, the four-manifold X of the surgery trace has
Euler characteristic n + 1, signature sigma(Q), and c1^2 = r^T Q^{-1} r
(defined when det Q != 0, i.e. the Euler class of the contact structure
is torsion).  The homotopy invariant of the induced plane field is

    d3 = (c1^2 - 3 sigma - 2 (chi - 1)) / 4 + l,

an exact rational; no rounding occurs anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .surgery import (
    IntersectionForm,
    LegendrianData,
    convert,
    enumerate_rotations,
    linking_matrix,
)


class NonTorsionEulerClassError(ValueError):
    """det Q = 0: c1^2 undefined (non-torsion Euler class)."""


def euler_char(form: IntersectionForm) -> int:
    """chi of the trace: one 0-handle plus one 2-handle per component."""
    return form.n + 1


def c_squared(form: IntersectionForm) -> Fraction:
    """Exact value of r^T Q^{-1} r; requires a nondegenerate form."""
    if form.r is None:
        raise ValueError("intersection form has no rotation vector")
    if form.n == 0:
        return Fraction(0)
    if linalg.determinant(form.rows()) == 0:
        raise NonTorsionEulerClassError("c1^2 undefined: non-torsion Euler class")
    if all(x == 0 for x in form.r):
        return Fraction(0)
    x = linalg.solve_linear(form.rows(), list(form.r))
    return sum((Fraction(ri) * xi for ri, xi in zip(form.r, x)), Fraction(0))


@dataclass(frozen=True)
class D3Result:
    chi: int
    sigma: int
    c_squared: Fraction
    l: int
    d3: Fraction

    def __post_init__(self):
        if 4 * (self.d3 - self.l) + 3 * self.sigma + 2 * (self.chi - 1) != self.c_squared:
            raise ValueError("inconsistent d3 data")

    def to_json(self):
        return {
            "chi": self.chi,
            "sigma": self.sigma,
            "c_squared": str(self.c_squared),
            "l": self.l,
            "d3": str(self.d3),
        }


def _assemble(chi, sigma, csq, l):
    value = Fraction(csq - 3 * sigma - 2 * (chi - 1), 4) + l
    return D3Result(chi=chi, sigma=sigma, c_squared=csq, l=l, d3=value)


def d3(form: IntersectionForm) -> D3Result:
    """Assemble chi, sigma, c1^2 and l into the d3 invariant."""
    chi = euler_char(form)
    if form.n == 0:
        sigma = 0
    else:
        if linalg.determinant(form.rows()) == 0:
            raise NonTorsionEulerClassError("c1^2 undefined: non-torsion Euler class")
        sigma = linalg.signature(form.rows())
    return _assemble(chi, sigma, c_squared(form), form.l)


def _presentation_d3_values(pres, cache=None):
    """d3 of every rotation vector of one presentation.

    The signature and the needed columns of Q^{-1} are computed once and
    shared by all rotation vectors; a cache keyed by the matrix lets the
    stabilization variants of one conversion (identical framed links,
    different pinned rotations) reuse them.
    """
    form = linking_matrix(pres)
    vectors = enumerate_rotations(pres)
    support = sorted({i for v in vectors for i, x in enumerate(v) if x})
    key = (form.Q, tuple(support))
    hit = cache.get(key) if cache is not None else None
    if hit is None:
        rows = form.rows()
        if form.n and linalg.determinant(rows) == 0:
            raise NonTorsionEulerClassError("c1^2 undefined: non-torsion Euler class")
        sigma = linalg.signature(rows) if form.n else 0
        cols = linalg.solve_columns(rows, support) if support else {}
        hit = (sigma, cols)
        if cache is not None:
            cache[key] = hit
    sigma, cols = hit
    chi = form.n + 1
    values = []
    for rvec in vectors:
        csq = Fraction(0)
        for j in support:
            if rvec[j]:
                col = cols[j]
                csq += rvec[j] * sum(rvec[i] * col[i] for i in support if rvec[i])
        values.append((rvec, _assemble(chi, sigma, csq, form.l)))
    return form, values


def d3_spectrum(L: LegendrianData, smooth_slope) -> set:
    """All d3 values of contact surgeries on L with the given smooth
    coefficient, over every presentation and rotation vector."""
    smooth_slope = Fraction(smooth_slope)
    contact = smooth_slope - L.tb
    values = set()
    cache = {}
    for pres in convert(L, contact):
        _, per_vector = _presentation_d3_values(pres, cache)
        values.update(res.d3 for _, res in per_vector)
    return values


def d3_spectrum_detail(L: LegendrianData, smooth_slope):
    """Like d3_spectrum but keeps the provenance of every value."""
    smooth_slope = Fraction(smooth_slope)
    contact = smooth_slope - L.tb
    records = []
    cache = {}
    for pres in convert(L, contact):
        form, per_vector = _presentation_d3_values(pres, cache)
        rots = [{"rotations": list(rvec), "d3": res} for rvec, res in per_vector]
        records.append({"presentation": pres, "form": form, "values": rots})
    return records
