"""Exact rational realizations of cross-polytopes and their stackings.

A realized polytope keeps its facet hyperplanes so that stacking can place
each new apex beyond exactly one facet and beneath all others, which keeps
the point set in convex position with the intended boundary complex.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Iterable, Mapping, Sequence

from .complex import ComplexError, Face, SimplicialComplex, canonical_face
from .constructions import (
    StackingScript,
    cross_polytope_boundary,
    fresh_vertex,
    simplex_boundary,
    stack,
    symmetric_stack,
)
from .linalg import nullspace, rank
from .symmetry import CsComplex, Involution

Vector = tuple[Fraction, ...]

PERTURB_DENOMINATOR = 2 ** 20


class GeometryError(ValueError):
    pass


def vec(entries: Iterable[int | Fraction | str]) -> Vector:
    return tuple(Fraction(x) for x in entries)


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def neg(a: Sequence[Fraction]) -> Vector:
    return tuple(-x for x in a)


def centroid(points: Sequence[Sequence[Fraction]]) -> Vector:
    n = len(points)
    return tuple(sum(col, Fraction(0)) / n for col in zip(*points))


@dataclass(frozen=True)
class Embedding:
    d: int
    coords: Mapping[int, Vector]

    def __post_init__(self) -> None:
        for v, p in self.coords.items():
            if len(p) != self.d:
                raise GeometryError(f"vertex {v} has {len(p)} coordinates, expected {self.d}")

    def __getitem__(self, v: int) -> Vector:
        return self.coords[v]

    def restricted(self, vertices: Iterable[int]) -> "Embedding":
        return Embedding(self.d, {v: self.coords[v] for v in vertices})

    def is_symmetric(self, alpha: Involution) -> bool:
        return all(self.coords[alpha(v)] == neg(p) for v, p in self.coords.items())


def affine_rank(points: Sequence[Sequence[Fraction]]) -> int:
    """Dimension of the affine span."""
    if len(points) <= 1:
        return 0
    return rank([sub(p, points[0]) for p in points[1:]])


def affinely_independent(points: Sequence[Sequence[Fraction]]) -> bool:
    return affine_rank(points) == len(points) - 1


def hyperplane(points: Sequence[Sequence[Fraction]], inside: Sequence[Fraction]) -> tuple[Vector, Fraction]:
    """(a, b) with a.x = b through ``points`` and a.inside < b."""
    d = len(points[0])
    if len(points) != d or not affinely_independent(points):
        raise GeometryError("a facet needs d affinely independent points")
    kernel = nullspace([list(p) + [Fraction(-1)] for p in points], d + 1)
    if len(kernel) != 1:
        raise GeometryError("points do not determine a unique hyperplane")
    sol = kernel[0]
    a, b = tuple(sol[:d]), sol[d]
    side = dot(a, inside) - b
    if side == 0:
        raise GeometryError("reference point lies on the facet hyperplane")
    if side > 0:
        a, b = neg(a), -b
    return a, b


@dataclass(frozen=True)
class RealizedPolytope:
    """A simplicial polytope: boundary complex, coordinates, facet hyperplanes."""

    complex: SimplicialComplex
    embedding: Embedding
    hyperplanes: Mapping[Face, tuple[Vector, Fraction]]
    alpha: Involution | None = None

    @property
    def d(self) -> int:
        return self.embedding.d

    @property
    def cs(self) -> CsComplex:
        if self.alpha is None:
            raise ComplexError("this realization carries no involution")
        return CsComplex(self.complex, self.alpha)

    def interior_point(self) -> Vector:
        return centroid(list(self.embedding.coords.values()))


def _facet_hyperplanes(emb: Embedding, facets: Iterable[Face], inside: Vector):
    return {f: hyperplane([emb[v] for v in f], inside) for f in facets}


def certify_convex_position(p: RealizedPolytope) -> bool:
    """Every facet spans a hyperplane with all other vertices strictly on one side."""
    inside = p.interior_point()
    for f in p.complex.facets:
        try:
            a, b = hyperplane([p.embedding[v] for v in f], inside)
        except GeometryError:
            return False
        fs = set(f)
        for v, x in p.embedding.coords.items():
            if v not in fs and dot(a, x) >= b:
                return False
    return True


def _perturbation(rng: random.Random, d: int, k: int) -> Vector:
    return tuple(Fraction(rng.randint(-k, k), PERTURB_DENOMINATOR) for _ in range(d))


def realize_cross_polytope(d: int, seed: int = 0, perturb: bool = True) -> RealizedPolytope:
    """Vertices +-(e_i + delta_i) with small seeded rational perturbations."""
    if d < 2:
        raise ValueError("realize_cross_polytope needs d >= 2")
    c = cross_polytope_boundary(d)
    rng = random.Random(seed)
    k = PERTURB_DENOMINATOR // (16 * d) if perturb else 0
    for _ in range(32):
        coords: dict[int, Vector] = {}
        for i in range(d):
            unit = tuple(Fraction(int(j == i)) for j in range(d))
            p = tuple(x + y for x, y in zip(unit, _perturbation(rng, d, k)))
            coords[i] = p
            coords[i + d] = neg(p)
        if rank([coords[i] for i in range(d)]) == d:
            break
    else:
        raise GeometryError("could not draw an invertible perturbation")
    emb = Embedding(d, coords)
    zero = tuple(Fraction(0) for _ in range(d))
    return RealizedPolytope(c.complex, emb, _facet_hyperplanes(emb, c.complex.facets, zero), c.alpha)


def realize_simplex(d: int, seed: int = 0) -> RealizedPolytope:
    """Boundary of a d-simplex: e_1..e_d plus a perturbed far corner."""
    rng = random.Random(seed)
    k = PERTURB_DENOMINATOR // (16 * d)
    coords: dict[int, Vector] = {}
    for i in range(d):
        unit = tuple(Fraction(int(j == i)) for j in range(d))
        coords[i] = tuple(x + y for x, y in zip(unit, _perturbation(rng, d, k)))
    coords[d] = tuple(Fraction(-1) + y for y in _perturbation(rng, d, k))
    emb = Embedding(d, coords)
    if affine_rank(list(coords.values())) != d:
        raise GeometryError("degenerate simplex")
    delta = simplex_boundary(d)
    inside = centroid(list(coords.values()))
    return RealizedPolytope(delta, emb, _facet_hyperplanes(emb, delta.facets, inside))


def stacking_apex(
    facet_points: Sequence[Vector],
    facet_plane: tuple[Vector, Fraction],
    other_planes: Iterable[tuple[Vector, Fraction]],
    rng: random.Random | None = None,
    max_halvings: int = 64,
) -> Vector:
    """A point just beyond one facet and strictly beneath all other facets.

    Starts at the facet centroid pushed out along the normal (with a small
    seeded wobble for genericity) and halves the push until it fits.
    """
    a, b = facet_plane
    if not affinely_independent(facet_points):
        raise GeometryError("facet points are affinely dependent")
    scale = max(abs(x) for x in a)
    direction = tuple(x / scale for x in a)
    if rng is not None:
        k = PERTURB_DENOMINATOR // (64 * len(a))
        direction = tuple(x + y for x, y in zip(direction, _perturbation(rng, len(a), k)))
    c = centroid(facet_points)
    others = list(other_planes)
    eps = Fraction(1)
    for _ in range(max_halvings):
        apex = tuple(x + eps * y for x, y in zip(c, direction))
        if dot(a, apex) > b and all(dot(n, apex) < off for n, off in others):
            return apex
        eps /= 2
    raise GeometryError("no apex position found")


def _stack_realized(p: RealizedPolytope, facet: Face, apex_label: int, apex: Vector, alpha: Involution | None):
    delta = stack(p.complex, facet, apex_label)
    coords = dict(p.embedding.coords)
    coords[apex_label] = apex
    emb = Embedding(p.d, coords)
    new_facets = [tuple(sorted(set(facet) - {w} | {apex_label})) for w in facet]
    planes = {f: h for f, h in p.hyperplanes.items() if f != facet}
    inside = centroid([emb[v] for v in facet] + [apex])
    planes.update(_facet_hyperplanes(emb, new_facets, inside))
    return RealizedPolytope(delta, emb, planes, alpha)


def realized_stack(p: RealizedPolytope, facet: Iterable[int], v_new: int | None = None, seed: int = 0) -> RealizedPolytope:
    f = canonical_face(facet)
    if f not in p.hyperplanes:
        raise ComplexError(f"{f} is not a facet")
    v = fresh_vertex(p.complex) if v_new is None else v_new
    others = [h for g, h in p.hyperplanes.items() if g != f]
    apex = stacking_apex([p.embedding[u] for u in f], p.hyperplanes[f], others, random.Random(seed))
    return _stack_realized(p, f, v, apex, None)


def realized_symmetric_stack(
    p: RealizedPolytope, facet: Iterable[int], v_plus: int | None = None, v_minus: int | None = None, seed: int = 0
) -> RealizedPolytope:
    """Stack over a facet and its antipode with apexes at x and -x."""
    if p.alpha is None:
        raise ComplexError("symmetric stacking needs a centrally symmetric realization")
    f = canonical_face(facet)
    if f not in p.hyperplanes:
        raise ComplexError(f"{f} is not a facet")
    g = p.alpha.image(f)
    if v_plus is None:
        v_plus = fresh_vertex(p.complex)
    if v_minus is None:
        v_minus = fresh_vertex(p.complex, [v_plus])
    # validates labels and the involution before any geometry
    symmetric_stack(p.cs, f, v_plus, v_minus)
    rng = random.Random(seed)
    others = [h for k, h in p.hyperplanes.items() if k != f]
    apex = stacking_apex([p.embedding[u] for u in f], p.hyperplanes[f], others, rng)
    for _ in range(64):
        half = _stack_realized(p, f, v_plus, apex, None)
        rest = [h for k, h in half.hyperplanes.items() if k != g]
        anti = neg(apex)
        a, b = half.hyperplanes[g]
        if dot(a, anti) > b and all(dot(n, anti) < off for n, off in rest):
            alpha = p.alpha.extended(v_plus, v_minus)
            return _stack_realized(half, g, v_minus, anti, alpha)
        c = centroid([p.embedding[u] for u in f])
        apex = tuple((x + y) / 2 for x, y in zip(apex, c))
    raise GeometryError("no symmetric apex position found")


def is_symmetrically_generic(emb: Embedding, alpha: Involution | None = None) -> bool:
    """Every d points with no antipodal pair among them are affinely independent."""
    return generic_witness(emb, alpha) is None


def generic_witness(emb: Embedding, alpha: Involution | None = None) -> tuple[int, ...] | None:
    """First d-subset without antipodal pairs that is affinely dependent."""
    den = lcm(*(x.denominator for p in emb.coords.values() for x in p))
    scaled = {v: tuple(int(x * den) for x in p) for v, p in emb.coords.items()}
    for subset in combinations(sorted(emb.coords), emb.d):
        if alpha is not None and any(alpha.pairing.get(v) in subset for v in subset):
            continue
        pts = [scaled[v] for v in subset]
        if rank([[x - y for x, y in zip(p, pts[0])] for p in pts[1:]]) != emb.d - 1:
            return subset
    return None


def realize_script(script: StackingScript, seed: int = 0, max_attempts: int = 8, check_generic: bool = False) -> RealizedPolytope:
    """Realize a stacking script; apex wobbles are drawn from ``seed``.

    With ``check_generic`` the whole realization is redrawn (bounded) until
    the genericity predicate holds.
    """
    for attempt in range(max_attempts):
        base_seed = seed * 1009 + attempt
        if script.kind == "cross":
            p = realize_cross_polytope(script.d, base_seed)
        else:
            p = realize_simplex(script.d, base_seed)
        for i, step in enumerate(script.steps):
            step_seed = base_seed * 7919 + i
            if step.mode == "symmetric":
                p = realized_symmetric_stack(p, step.facet, seed=step_seed)
            else:
                p = realized_stack(p, step.facet, seed=step_seed)
        if not check_generic or is_symmetrically_generic(p.embedding, p.alpha):
            return p
    raise GeometryError("no generic realization found within the retry bound")


def complement_frame(normal: Sequence[Fraction]) -> list[Vector]:
    """Orthogonal (unnormalized) basis of the hyperplane perpendicular to ``normal``."""
    d = len(normal)
    n = tuple(Fraction(x) for x in normal)
    if not any(n):
        raise GeometryError("normal vector must be non-zero")
    frame: list[Vector] = [n]
    for i in range(d):
        v = tuple(Fraction(int(j == i)) for j in range(d))
        for b in frame:
            coef = dot(v, b) / dot(b, b)
            v = tuple(x - coef * y for x, y in zip(v, b))
        if any(v):
            frame.append(v)
        if len(frame) == d:
            break
    return frame[1:]


def project_orthogonal(emb: Embedding, normal: Sequence[Fraction], vertices: Iterable[int]) -> Embedding:
    """Coordinates of the orthogonal projection onto normal-perp, in a fixed frame.

    The frame is orthogonal but unnormalized; coordinates are plain dot
    products, a linear change of coordinates on the hyperplane that leaves
    infinitesimal rigidity unchanged.
    """
    frame = complement_frame(normal)
    out: dict[int, Vector] = {}
    seen: dict[Vector, int] = {}
    for v in vertices:
        img = tuple(dot(emb[v], b) for b in frame)
        if img in seen:
            raise GeometryError(f"projection identifies vertices {seen[img]} and {v}")
        seen[img] = v
        out[v] = img
    return Embedding(emb.d - 1, out)
