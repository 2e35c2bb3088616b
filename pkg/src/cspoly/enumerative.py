"""Face numbers: f-vectors, h-polynomials, g-numbers and local h-polynomials.

Polynomials are tuples of ints indexed by degree with trailing zeros
trimmed.  The h-polynomial carries h_i as the coefficient of x^i; for
spheres this agrees with the reversed convention because h is symmetric.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Mapping

from .complex import (
    EMPTY,
    ComplexError,
    Face,
    SimplicialComplex,
    canonical_face,
    induced,
    link,
    reduced_euler_characteristic,
)

Poly = tuple[int, ...]


def trim(coeffs: Iterable[int]) -> Poly:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_add(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return trim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))


def poly_scale(a: Poly, c: int) -> Poly:
    return trim(c * x for x in a)


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def f_vector(delta: SimplicialComplex) -> tuple[int, ...]:
    """(f_{-1}, f_0, ..., f_{dim}) with f_{-1} = 1."""
    return tuple(len(delta.faces(i)) for i in range(-1, delta.dim + 1))


def h_vector(delta: SimplicialComplex, d: int | None = None) -> tuple[int, ...]:
    """(h_0, ..., h_d) from the f-vector, with d = dim + 1 unless given."""
    if not delta.is_pure():
        raise ComplexError("h-vectors are only defined here for pure complexes")
    if d is None:
        d = delta.dim + 1
    f = f_vector(delta)
    f = f + (0,) * (d + 1 - len(f))
    return tuple(
        sum((-1) ** (i - j) * comb(d - j, i - j) * f[j] for j in range(i + 1))
        for i in range(d + 1)
    )


def h_polynomial(delta: SimplicialComplex, d: int | None = None) -> Poly:
    return trim(h_vector(delta, d))


def g_number(delta: SimplicialComplex, r: int) -> int:
    d = delta.dim + 1
    if not 0 <= r <= d:
        raise ValueError(f"g_{r} is undefined for a complex with d = {d}")
    h = h_vector(delta)
    return h[r] - (h[r - 1] if r > 0 else 0)


def g_number_alternating(delta: SimplicialComplex, r: int) -> int:
    """g_r straight from the alternating binomial sum over the f-vector."""
    d = delta.dim + 1
    if not 0 <= r <= d:
        raise ValueError(f"g_{r} is undefined for a complex with d = {d}")
    f = f_vector(delta)
    return sum((-1) ** (r - j) * f[j] * comb(d - j + 1, r - j) for j in range(r + 1))


def g2_from_counts(f0: int, f1: int, d: int) -> int:
    return f1 - d * f0 + comb(d + 1, 2)


@dataclass(frozen=True)
class SubdivisionMap:
    """A subdivision ``refinement`` of ``base`` with a carrier for each vertex.

    Vertices shared with the base carry themselves; a new vertex carries the
    unique base face in whose restriction it is interior.
    """

    base: SimplicialComplex
    refinement: SimplicialComplex
    carrier: Mapping[int, Face]

    def validate(self) -> None:
        base_verts = set(self.base.vertices)
        for v in self.refinement.vertices:
            if v not in self.carrier:
                raise ComplexError(f"vertex {v} of the refinement has no carrier")
            car = self.carrier[v]
            if v in base_verts and tuple(car) != (v,):
                raise ComplexError(f"original vertex {v} must carry itself, not {car}")
            if car not in self.base:
                raise ComplexError(f"carrier {car} of vertex {v} is not a face of the base")
        for f in self.refinement.facets:
            union = set().union(*(self.carrier[v] for v in f))
            if union not in self.base:
                raise ComplexError(f"facet {f} is not carried by a single face of the base")
        # each restriction must look like a ball of the right dimension
        for w in self.base.all_faces():
            if not w:
                continue
            piece = restrict(self, w)
            if piece.dim != len(w) - 1 or not piece.is_pure() or reduced_euler_characteristic(piece) != 0:
                raise ComplexError(f"the refinement over {w} is not a ball of dimension {len(w) - 1}")


def identity_subdivision(delta: SimplicialComplex) -> SubdivisionMap:
    return SubdivisionMap(delta, delta, {v: (v,) for v in delta.vertices})


def restrict(sub: SubdivisionMap, w: Iterable[int]) -> SimplicialComplex:
    """The part of the refinement lying over the base face ``w``."""
    face = canonical_face(w)
    if face not in sub.base:
        raise ComplexError(f"{face} is not a face of the base complex")
    ws = set(face)
    keep = [v for v in sub.refinement.vertices if set(sub.carrier[v]) <= ws]
    if not keep:
        return EMPTY
    return induced(sub.refinement, keep)


def local_h(sub: SubdivisionMap, v: Iterable[int]) -> Poly:
    """Local h-polynomial of the restriction over ``v`` by inclusion-exclusion."""
    face = canonical_face(v)
    if face not in sub.base:
        raise ComplexError(f"{face} is not a face of the base complex")
    total: Poly = ()
    for k in range(len(face) + 1):
        sign = (-1) ** (len(face) - k)
        for w in combinations(face, k):
            total = poly_add(total, poly_scale(h_polynomial(restrict(sub, w), d=k), sign))
    return total


def ellh_sides(sub: SubdivisionMap) -> tuple[Poly, Poly]:
    """Both sides of h(refinement) = sum over base faces of l_tau * h(lk tau)."""
    d = sub.base.dim + 1
    rhs: Poly = ()
    for tau in sub.base.all_faces():
        ell = local_h(sub, tau)
        if not ell:
            continue
        rhs = poly_add(rhs, poly_mul(ell, h_polynomial(link(sub.base, tau), d=d - len(tau))))
    return h_polynomial(sub.refinement, d=d), rhs


def check_ellh_identity(sub: SubdivisionMap) -> bool:
    try:
        lhs, rhs = ellh_sides(sub)
    except ComplexError:
        return False
    return lhs == rhs
