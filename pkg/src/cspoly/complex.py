"""Abstract simplicial complexes stored as facet lists.

Faces are tuples of strictly increasing non-negative integers.  Every
complex is immutable; face enumerations are memoized per dimension.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

Face = tuple[int, ...]


class ComplexError(ValueError):
    """Raised for malformed complexes or faces that are not in a complex."""


def canonical_face(vertices: Iterable[int]) -> Face:
    verts = list(vertices)
    face = tuple(sorted(verts))
    if len(set(face)) != len(face):
        raise ComplexError(f"face {verts} has repeated vertices")
    for v in face:
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise ComplexError(f"vertex label {v!r} is not a non-negative integer")
    return face


def _maximal(faces: Iterable[Face]) -> tuple[Face, ...]:
    # largest first, so a face only needs comparing with already accepted ones
    cands = sorted(set(faces), key=lambda f: (-len(f), f))
    kept: list[frozenset[int]] = []
    out: list[Face] = []
    for f in cands:
        s = frozenset(f)
        if any(s <= k for k in kept):
            continue
        kept.append(s)
        out.append(f)
    return tuple(sorted(out))


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex given by its facets (the inclusion-maximal faces).

    The facet tuple is kept in canonical order (lexicographic on sorted
    vertex tuples), so two complexes compare equal iff they have the same
    faces.  ``((),)`` is the complex ``{∅}`` of dimension -1.
    """

    facets: tuple[Face, ...]
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        if not self.facets:
            raise ComplexError("a simplicial complex needs at least the empty face")

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1

    @property
    def vertices(self) -> Face:
        if "vertices" not in self._cache:
            self._cache["vertices"] = tuple(sorted({v for f in self.facets for v in f}))
        return self._cache["vertices"]

    @property
    def _facet_sets(self) -> tuple[frozenset[int], ...]:
        if "fsets" not in self._cache:
            self._cache["fsets"] = tuple(frozenset(f) for f in self.facets)
        return self._cache["fsets"]

    def __contains__(self, face: Iterable[int]) -> bool:
        s = frozenset(face)
        return any(s <= f for f in self._facet_sets)

    def faces(self, i: int) -> list[Face]:
        """All ``i``-dimensional faces in canonical order; [] when out of range."""
        if i < -1 or i > self.dim:
            return []
        key = ("faces", i)
        if key not in self._cache:
            found = {sub for f in self.facets if len(f) > i for sub in combinations(f, i + 1)}
            self._cache[key] = sorted(found)
        return list(self._cache[key])

    def all_faces(self) -> list[Face]:
        return [f for i in range(-1, self.dim + 1) for f in self.faces(i)]

    def face_set(self) -> frozenset[Face]:
        if "face_set" not in self._cache:
            self._cache["face_set"] = frozenset(self.all_faces())
        return self._cache["face_set"]

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) == 1

    def __repr__(self) -> str:
        return f"SimplicialComplex(dim={self.dim}, facets={list(self.facets)})"


def from_facets(faces: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Build a complex from generating faces, keeping only the maximal ones.

    An empty input gives the complex ``{∅}``.
    """
    canon = [canonical_face(f) for f in faces]
    if not canon:
        canon = [()]
    return SimplicialComplex(_maximal(canon))


EMPTY = from_facets([])


def simplex(vertices: Iterable[int]) -> SimplicialComplex:
    """The full simplex on ``vertices``."""
    return from_facets([tuple(vertices)])


def boundary_of(vertices: Iterable[int]) -> SimplicialComplex:
    """The boundary of the simplex on ``vertices`` (all proper subsets)."""
    verts = canonical_face(vertices)
    if not verts:
        raise ComplexError("the empty simplex has no boundary complex")
    return from_facets(combinations(verts, len(verts) - 1))


def _require_face(delta: SimplicialComplex, tau: Iterable[int]) -> Face:
    face = canonical_face(tau)
    if face not in delta:
        raise ComplexError(f"{face} is not a face of the complex")
    return face


def link(delta: SimplicialComplex, tau: Iterable[int]) -> SimplicialComplex:
    face = _require_face(delta, tau)
    s = set(face)
    return from_facets(tuple(v for v in f if v not in s) for f in delta.facets if s.issubset(f))


def star(delta: SimplicialComplex, tau: Iterable[int]) -> SimplicialComplex:
    """Closed star: the subcomplex generated by the facets containing ``tau``."""
    face = _require_face(delta, tau)
    s = set(face)
    return from_facets(f for f in delta.facets if s.issubset(f))


def join(gamma: SimplicialComplex, delta: SimplicialComplex) -> SimplicialComplex:
    overlap = set(gamma.vertices) & set(delta.vertices)
    if overlap:
        raise ComplexError(f"join needs disjoint vertex sets, both contain {sorted(overlap)}")
    return from_facets(a + b for a in gamma.facets for b in delta.facets)


def cone(apex: int, delta: SimplicialComplex) -> SimplicialComplex:
    return join(simplex([apex]), delta)


def induced(delta: SimplicialComplex, vertices: Iterable[int]) -> SimplicialComplex:
    """Induced subcomplex on a vertex subset."""
    w = set(vertices)
    return from_facets(tuple(v for v in f if v in w) for f in delta.facets)


def skeleton(delta: SimplicialComplex, i: int) -> SimplicialComplex:
    if i >= delta.dim:
        return delta
    if i < -1:
        raise ComplexError("skeleton dimension must be at least -1")
    return from_facets(sub for f in delta.facets for sub in combinations(f, min(len(f), i + 1)))


def relabel(delta: SimplicialComplex, mapping: dict[int, int]) -> SimplicialComplex:
    """Rename vertices; labels missing from ``mapping`` are kept."""
    images = [mapping.get(v, v) for v in delta.vertices]
    if len(set(images)) != len(images):
        raise ComplexError("relabeling identifies distinct vertices")
    return from_facets(tuple(mapping.get(v, v) for v in f) for f in delta.facets)


def missing_faces(delta: SimplicialComplex, max_size: int) -> list[Face]:
    """Minimal non-faces of size at most ``max_size``, grouped by size.

    Candidates of size k are grown from (k-1)-faces by appending a larger
    vertex and are kept only when every (k-1)-subset is a face, so no
    exhaustive subset scan is needed.
    """
    if max_size < 2:
        raise ComplexError("max_size must be at least 2")
    verts = delta.vertices
    faces = delta.face_set()
    out: list[Face] = []
    for k in range(2, max_size + 1):
        found = []
        for base in delta.faces(k - 2):
            top = base[-1] if base else -1
            for v in verts:
                if v <= top:
                    continue
                cand = base + (v,)
                if cand in faces:
                    continue
                if all(cand[:j] + cand[j + 1:] in faces for j in range(k - 1)):
                    found.append(cand)
        out.extend(sorted(found))
    return out


def missing_facets(delta: SimplicialComplex) -> list[Face]:
    size = delta.dim + 1
    if size < 2:
        return []
    return [f for f in missing_faces(delta, size) if len(f) == size]


def is_simplex_boundary(delta: SimplicialComplex) -> bool:
    n = len(delta.vertices)
    return n >= 2 and len(delta.facets) == n and all(len(f) == n - 1 for f in delta.facets)


def is_prime(delta: SimplicialComplex) -> bool:
    """True for a pure complex without missing facets.

    The boundary of a simplex is not considered prime: as for polytopes,
    primality is only meaningful away from the simplex itself.
    """
    if not delta.is_pure():
        raise ComplexError("primality is defined for pure complexes only")
    if is_simplex_boundary(delta):
        return False
    return not missing_facets(delta)


@dataclass(frozen=True)
class Graph:
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        vs = set(self.vertices)
        for u, v in self.edges:
            if u == v:
                raise ComplexError(f"loop at vertex {u}")
            if u not in vs or v not in vs:
                raise ComplexError(f"edge {(u, v)} has an endpoint outside the vertex set")

    def neighbors(self) -> dict[int, set[int]]:
        nbrs: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return nbrs

    def union(self, other: "Graph") -> "Graph":
        return make_graph(set(self.vertices) | set(other.vertices), set(self.edges) | set(other.edges))


def make_graph(vertices: Iterable[int], edges: Iterable[Iterable[int]]) -> Graph:
    es = sorted({tuple(sorted(e)) for e in edges})
    vs = set(vertices) | {v for e in es for v in e}
    return Graph(tuple(sorted(vs)), tuple(es))  # type: ignore[arg-type]


def graph(delta: SimplicialComplex) -> Graph:
    return make_graph(delta.vertices, delta.faces(1))


def components_excluding(delta: SimplicialComplex, removed: Iterable[int]) -> int:
    """Connected components of the graph of ``delta`` minus a vertex set."""
    gone = set(removed)
    nbrs = graph(delta).neighbors()
    seen: set[int] = set()
    count = 0
    for start in nbrs:
        if start in gone or start in seen:
            continue
        count += 1
        seen.add(start)
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in nbrs[u]:
                if w not in gone and w not in seen:
                    seen.add(w)
                    queue.append(w)
    return count


def reduced_euler_characteristic(delta: SimplicialComplex) -> int:
    return sum((-1) ** i * len(delta.faces(i)) for i in range(-1, delta.dim + 1))


def is_pseudomanifold(delta: SimplicialComplex) -> bool:
    """Pure, every ridge in exactly two facets, and facet-ridge connected."""
    if not delta.is_pure() or delta.dim < 1:
        return False
    ridges: dict[Face, list[int]] = {}
    for idx, f in enumerate(delta.facets):
        for r in combinations(f, len(f) - 1):
            ridges.setdefault(r, []).append(idx)
    if any(len(owners) != 2 for owners in ridges.values()):
        return False
    adj: dict[int, list[int]] = {i: [] for i in range(len(delta.facets))}
    for a, b in ridges.values():
        adj[a].append(b)
        adj[b].append(a)
    seen = {0}
    stack = [0]
    while stack:
        for j in adj[stack.pop()]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    return len(seen) == len(delta.facets)


def looks_like_sphere(delta: SimplicialComplex, depth: int = 1) -> bool:
    """Necessary combinatorial conditions for a simplicial sphere.

    Checks the pseudomanifold property and the Euler relation of the
    complex and, down to ``depth`` levels, of all vertex links.
    """
    d = delta.dim + 1
    if d == 1:
        return len(delta.vertices) == 2 and delta.is_pure()
    if not is_pseudomanifold(delta):
        return False
    if reduced_euler_characteristic(delta) != (-1) ** (d - 1):
        return False
    if depth > 0:
        return all(looks_like_sphere(link(delta, (v,)), depth - 1) for v in delta.vertices)
    return True
