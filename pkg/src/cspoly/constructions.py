"""Generators and surgeries on simplicial spheres.

Fresh vertex labels may be passed explicitly; otherwise the next unused
integers above the current maximum label are taken.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Literal, Mapping, Sequence

from .complex import (
    ComplexError,
    Face,
    SimplicialComplex,
    boundary_of,
    canonical_face,
    from_facets,
    link,
    missing_facets,
)
from .enumerative import SubdivisionMap, g_number
from .symmetry import CsComplex, Involution, validate_cs


def fresh_vertex(delta: SimplicialComplex, taken: Iterable[int] = ()) -> int:
    used = set(delta.vertices) | set(taken)
    return max(used, default=-1) + 1


def _require_facet(delta: SimplicialComplex, tau: Iterable[int]) -> Face:
    face = canonical_face(tau)
    if face not in delta.facets:
        raise ComplexError(f"{face} is not a facet")
    return face


def _require_fresh(delta: SimplicialComplex, v: int) -> int:
    if v in delta.vertices:
        raise ComplexError(f"vertex {v} is already present")
    canonical_face([v])
    return v


def simplex_boundary(n: int) -> SimplicialComplex:
    """Boundary of the n-simplex on vertices 0..n."""
    if n < 1:
        raise ValueError("simplex_boundary needs n >= 1")
    return boundary_of(range(n + 1))


def cross_polytope_boundary(d: int) -> CsComplex:
    """Boundary of the d-dimensional cross-polytope.

    Vertex ``i`` stands for +e_{i+1} and ``i + d`` for -e_{i+1}.
    """
    if d < 1:
        raise ValueError("cross_polytope_boundary needs d >= 1")
    facets = []
    for signs in range(2 ** d):
        facets.append(tuple(i + d if signs >> i & 1 else i for i in range(d)))
    alpha = Involution.from_pairs((i, i + d) for i in range(d))
    return CsComplex(from_facets(facets), alpha)


def connected_sum(
    delta1: SimplicialComplex,
    tau1: Iterable[int],
    delta2: SimplicialComplex,
    tau2: Iterable[int],
    identify: Mapping[int, int] | None = None,
) -> SimplicialComplex:
    """Glue ``delta2`` to ``delta1`` along the boundaries of two facets.

    ``identify`` maps the vertices of ``tau2`` onto ``tau1`` (sorted order by
    default).  All other vertices of ``delta2`` keep their labels and must
    not occur in ``delta1``.
    """
    t1 = _require_facet(delta1, tau1)
    t2 = _require_facet(delta2, tau2)
    if len(t1) != len(t2):
        raise ComplexError("glued facets differ in size")
    if identify is None:
        identify = dict(zip(t2, t1))
    if set(identify) != set(t2) or sorted(identify.values()) != list(t1):
        raise ComplexError("identification must be a bijection from tau2 onto tau1")
    clash = (set(delta2.vertices) - set(t2)) & set(delta1.vertices)
    if clash:
        raise ComplexError(f"identification collapses distinct vertices {sorted(clash)}")
    moved = [tuple(identify.get(v, v) for v in f) for f in delta2.facets]
    facets = [f for f in delta1.facets if f != t1]
    facets += [f for f in (canonical_face(m) for m in moved) if f != t1]
    return from_facets(facets)


def stack(delta: SimplicialComplex, tau: Iterable[int], v_new: int | None = None) -> SimplicialComplex:
    """Attach a simplex over the facet ``tau`` with apex ``v_new``."""
    t = _require_facet(delta, tau)
    v = fresh_vertex(delta) if v_new is None else _require_fresh(delta, v_new)
    out = connected_sum(delta, t, boundary_of(t + (v,)), t)
    # on a 1-sphere the glued edge disappears, so g_2 moves
    assert not delta.is_pure() or delta.dim < 2 or g_number(out, 2) == g_number(delta, 2)
    return out


def symmetric_stack(
    c: CsComplex, tau: Iterable[int], v_plus: int | None = None, v_minus: int | None = None
) -> CsComplex:
    """Stack over ``tau`` and over its antipode, pairing the two apexes."""
    t = _require_facet(c.complex, tau)
    neg = c.alpha.image(t)
    if v_plus is None:
        v_plus = fresh_vertex(c.complex, [] if v_minus is None else [v_minus])
    if v_minus is None:
        v_minus = fresh_vertex(c.complex, [v_plus])
    if v_plus == v_minus:
        raise ComplexError("the two apexes must differ")
    once = stack(c.complex, t, v_plus)
    twice = stack(once, neg, _require_fresh(once, v_minus))
    return validate_cs(twice, c.alpha.extended(v_plus, v_minus))


def stellar_subdivide(delta: SimplicialComplex, tau: Iterable[int], v_new: int | None = None) -> SimplicialComplex:
    """Replace star(tau) by the cone from ``v_new`` over boundary(tau) * link(tau)."""
    t = canonical_face(tau)
    if t not in delta:
        raise ComplexError(f"{t} is not a face")
    if len(t) < 2:
        raise ComplexError("stellar subdivision needs a face of dimension at least 1")
    v = fresh_vertex(delta) if v_new is None else _require_fresh(delta, v_new)
    ts = set(t)
    facets = []
    for f in delta.facets:
        if ts.issubset(f):
            facets.extend(tuple(x for x in f if x != w) + (v,) for w in t)
        else:
            facets.append(f)
    return from_facets(facets)


def stellar_subdivision_map(
    delta: SimplicialComplex, tau: Iterable[int], v_new: int | None = None
) -> SubdivisionMap:
    t = canonical_face(tau)
    v = fresh_vertex(delta) if v_new is None else v_new
    refined = stellar_subdivide(delta, t, v)
    carrier = {u: (u,) for u in delta.vertices}
    carrier[v] = t
    return SubdivisionMap(delta, refined, carrier)


def stellar_weld(delta: SimplicialComplex, v: int, sigma: Iterable[int]) -> SimplicialComplex:
    """Inverse of stellar subdivision: merge star(v) into sigma * L.

    Requires link(v) = boundary(sigma) * L with sigma not a face.
    """
    s = canonical_face(sigma)
    if s in delta:
        raise ComplexError(f"{s} is already a face")
    lk = link(delta, (v,))
    ss = set(s)
    rest = set()
    for f in lk.facets:
        if len(ss.intersection(f)) != len(s) - 1:
            raise ComplexError(f"link of {v} is not a join with the boundary of {s}")
        rest.add(tuple(x for x in f if x not in ss))
    expected = {tuple(sorted(r + tuple(x for x in s if x != w))) for r in rest for w in s}
    if expected != set(lk.facets) or len(s) < 2:
        raise ComplexError(f"link of {v} is not a join with the boundary of {s}")
    facets = [f for f in delta.facets if v not in f]
    facets += [tuple(sorted(r + s)) for r in rest]
    return from_facets(facets)


def split_link(lk: SimplicialComplex, tau: Face) -> tuple[SimplicialComplex, SimplicialComplex]:
    """Split ``lk`` into S1, S2 with lk = S1 #_{boundary tau} S2.

    Facets of ``lk`` are adjacent when they share a ridge that is not a
    subset of ``tau``; the two classes each get ``tau`` as an extra facet.
    """
    tset = set(tau)
    by_ridge: dict[Face, list[int]] = {}
    for i, f in enumerate(lk.facets):
        for r in combinations(f, len(f) - 1):
            if not tset.issuperset(r):
                by_ridge.setdefault(r, []).append(i)
    parent = list(range(len(lk.facets)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for owners in by_ridge.values():
        for j in owners[1:]:
            parent[find(j)] = find(owners[0])
    classes: dict[int, list[Face]] = {}
    for i, f in enumerate(lk.facets):
        classes.setdefault(find(i), []).append(f)
    if len(classes) != 2:
        raise ComplexError(f"splitting along {tau} gives {len(classes)} parts, expected 2")
    a, b = sorted(classes.values())
    return from_facets(a + [tau]), from_facets(b + [tau])


def swartz_operation(
    delta: SimplicialComplex, v0: int, tau: Iterable[int], x: int | None = None, y: int | None = None
) -> SimplicialComplex:
    """Split ``v0`` into two cone points over the halves of its link.

    ``tau`` must be a missing facet of link(v0) that is not a face of
    ``delta``.  Adds one vertex and d - 1 edges, so g_2 drops by one.
    """
    t = canonical_face(tau)
    lk = link(delta, (v0,))
    if t not in missing_facets(lk):
        raise ComplexError(f"{t} is not a missing facet of the link of {v0}")
    if t in delta:
        raise ComplexError(f"{t} is a face, so {t + (v0,)} would be a missing facet")
    if x is None:
        x = fresh_vertex(delta, [] if y is None else [y])
    if y is None:
        y = fresh_vertex(delta, [x])
    _require_fresh(delta, x)
    _require_fresh(delta, y)
    if x == y:
        raise ComplexError("the two new vertices must differ")
    s1, s2 = split_link(lk, t)
    facets = [f for f in delta.facets if v0 not in f]
    facets += [f + (x,) for f in s1.facets] + [f + (y,) for f in s2.facets]
    return from_facets(canonical_face(f) for f in facets)


# -- stacking scripts ------------------------------------------------------

StepMode = Literal["symmetric", "single"]


@dataclass(frozen=True)
class StackingStep:
    facet: Face
    mode: StepMode = "symmetric"


@dataclass(frozen=True)
class StackingScript:
    """A base sphere and a sequence of stackings.

    ``kind`` is ``"cross"`` (boundary of the d-cross-polytope) or
    ``"simplex"`` (boundary of the d-simplex).  New apexes get the next
    free labels, the antipodal apex of a symmetric step second.
    """

    kind: Literal["cross", "simplex"]
    d: int
    steps: tuple[StackingStep, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.kind not in ("cross", "simplex"):
            raise ValueError(f"unknown base kind {self.kind!r}")
        if self.d < 1:
            raise ValueError("base dimension must be at least 1")
        for step in self.steps:
            if step.mode not in ("symmetric", "single"):
                raise ValueError(f"unknown step mode {step.mode!r}")


def base_complex(kind: str, d: int) -> SimplicialComplex | CsComplex:
    if kind == "cross":
        return cross_polytope_boundary(d)
    return simplex_boundary(d)


def apply_step(current: SimplicialComplex | CsComplex, step: StackingStep) -> SimplicialComplex | CsComplex:
    if step.mode == "symmetric":
        if not isinstance(current, CsComplex):
            raise ComplexError("symmetric stacking needs a centrally symmetric complex")
        return symmetric_stack(current, step.facet)
    plain = current.complex if isinstance(current, CsComplex) else current
    return stack(plain, step.facet)


def apply_script(script: StackingScript) -> SimplicialComplex | CsComplex:
    """Run a script; a single stacking drops the involution."""
    current = base_complex(script.kind, script.d)
    for step in script.steps:
        current = apply_step(current, step)
    return current


def random_script(kind: str, d: int, k: int, seed: int, mode: StepMode | None = None) -> StackingScript:
    """``k`` stackings over uniformly chosen facets.

    ``mode`` defaults to symmetric steps on a cross-polytope base and
    single steps on a simplex base.
    """
    if mode is None:
        mode = "symmetric" if kind == "cross" else "single"
    rng = random.Random(seed)
    current = base_complex(kind, d)
    steps = []
    for _ in range(k):
        plain = current.complex if isinstance(current, CsComplex) else current
        step = StackingStep(rng.choice(plain.facets), mode)
        current = apply_step(current, step)
        steps.append(step)
    return StackingScript(kind, d, tuple(steps))  # type: ignore[arg-type]


def cs_stellar_subdivide(c: CsComplex, tau: Iterable[int], v_plus: int | None = None, v_minus: int | None = None) -> CsComplex:
    """Stellar subdivisions at ``tau`` and ``-tau`` with paired new vertices."""
    t = canonical_face(tau)
    neg = c.alpha.image(t)
    if v_plus is None:
        v_plus = fresh_vertex(c.complex, [] if v_minus is None else [v_minus])
    if v_minus is None:
        v_minus = fresh_vertex(c.complex, [v_plus])
    once = stellar_subdivide(c.complex, t, v_plus)
    twice = stellar_subdivide(once, neg, v_minus)
    return validate_cs(twice, c.alpha.extended(v_plus, v_minus))


def cs_swartz_operation(c: CsComplex, v0: int, tau: Iterable[int], new: Sequence[int] | None = None) -> CsComplex:
    """Swartz's operation at ``v0`` and then at ``-v0``.

    ``new`` gives the labels (x, y, -x, -y); the part of the split link
    containing ``tau``'s sorted-first class goes to x, and its antipode to -x.
    """
    t = canonical_face(tau)
    delta = c.complex
    if new is None:
        base = fresh_vertex(delta)
        new = (base, base + 1, base + 2, base + 3)
    x, y, nx, ny = new
    s1, s2 = split_link(link(delta, (v0,)), t)
    first = swartz_operation(delta, v0, t, x, y)
    neg_v0 = c.alpha(v0)
    neg_t = c.alpha.image(t)
    # -x must cone over -S1, so match the antipodal split by content
    n1, _ = split_link(link(first, (neg_v0,)), neg_t)
    if set(n1.facets) == {c.alpha.image(f) for f in s1.facets}:
        second = swartz_operation(first, neg_v0, neg_t, nx, ny)
    else:
        second = swartz_operation(first, neg_v0, neg_t, ny, nx)
    alpha = Involution({k: w for k, w in c.alpha.pairing.items() if k not in (v0, neg_v0)})
    alpha = alpha.extended(x, nx).extended(y, ny)
    return validate_cs(second, alpha)


def swartz_demo_instance(d: int = 5) -> tuple[CsComplex, int, Face]:
    """A prime cs sphere with a vertex whose link has a missing facet.

    Subdividing the ridge R = {0, ..., d-2} of the cross-polytope (and -R)
    makes R a missing facet of the link of the new vertex.
    """
    if d < 4:
        raise ValueError("the demo needs d >= 4")
    ridge = tuple(range(d - 1))
    c = cs_stellar_subdivide(cross_polytope_boundary(d), ridge)
    v0 = 2 * d
    return c, v0, ridge
