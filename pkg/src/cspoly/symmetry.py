"""Free involutions and centrally symmetric complexes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .complex import ComplexError, Face, SimplicialComplex, canonical_face, link


class CsValidationError(ComplexError):
    """The involution does not make the complex centrally symmetric.

    ``witness`` holds the first offending vertex or face.
    """

    def __init__(self, message: str, witness: Face | None = None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class Involution:
    pairing: Mapping[int, int]

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[int]]) -> "Involution":
        mapping: dict[int, int] = {}
        for pair in pairs:
            a, b = pair
            for x, y in ((a, b), (b, a)):
                if mapping.get(x, y) != y:
                    raise CsValidationError(f"vertex {x} is paired twice", (x,))
                mapping[x] = y
        return cls(mapping)

    def __call__(self, v: int) -> int:
        return self.pairing[v]

    def pairs(self) -> list[tuple[int, int]]:
        return sorted((v, w) for v, w in self.pairing.items() if v < w)

    def image(self, face: Iterable[int]) -> Face:
        try:
            return tuple(sorted(self.pairing[v] for v in face))
        except KeyError as exc:
            raise ComplexError(f"vertex {exc.args[0]} is not in the involution's domain") from None

    def extended(self, a: int, b: int) -> "Involution":
        if a in self.pairing or b in self.pairing:
            raise CsValidationError(f"vertices {a}, {b} already paired")
        return Involution({**self.pairing, a: b, b: a})

    def __hash__(self) -> int:
        return hash(tuple(self.pairs()))


@dataclass(frozen=True)
class CsComplex:
    complex: SimplicialComplex
    alpha: Involution


def validate_cs(delta: SimplicialComplex, alpha: Involution) -> CsComplex:
    """Check that ``alpha`` acts freely on the non-empty faces of ``delta``."""
    verts = set(delta.vertices)
    for v, w in alpha.pairing.items():
        if v == w:
            raise CsValidationError(f"vertex {v} is a fixed point", (v,))
        if alpha.pairing.get(w) != v:
            raise CsValidationError(f"map is not an involution at vertex {v}", (v,))
    missing = verts - set(alpha.pairing)
    if missing:
        v = min(missing)
        raise CsValidationError(f"vertex {v} has no antipode", (v,))
    extra = set(alpha.pairing) - verts
    if extra:
        v = min(extra)
        raise CsValidationError(f"involution names vertex {v} outside the complex", (v,))
    faces = delta.face_set()
    for i in range(delta.dim + 1):
        for tau in delta.faces(i):
            image = alpha.image(tau)
            if image == tau:
                raise CsValidationError(f"face {tau} is fixed by the involution", tau)
            if image not in faces:
                raise CsValidationError(f"antipode {image} of face {tau} is not a face", tau)
    return CsComplex(delta, alpha)


def antipode(c: CsComplex, tau: Iterable[int]) -> Face:
    return c.alpha.image(canonical_face(tau))


def common_link_vertices(c: CsComplex, u: int) -> set[int]:
    a = link(c.complex, (u,)).vertices
    b = link(c.complex, (c.alpha(u),)).vertices
    return set(a) & set(b)


def antipodal_pairs_in(c: CsComplex, w: Iterable[int]) -> int:
    ws = set(w)
    return sum(1 for v in ws if v < c.alpha.pairing.get(v, -1) and c.alpha(v) in ws)
