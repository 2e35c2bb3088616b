"""JSON documents for complexes, subdivisions, stacking scripts and stresses.

Rationals are written as "num/den" strings with den > 0 in lowest terms.
``dumps`` is canonical: equal documents serialize to identical bytes.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Any

from .complex import ComplexError, SimplicialComplex, from_facets
from .constructions import StackingScript, StackingStep
from .enumerative import SubdivisionMap
from .geometry import Embedding
from .rigidity import StressBasis
from .symmetry import Involution

_RATIONAL = re.compile(r"^(-?\d+)/(\d+)$")


class FormatError(ValueError):
    pass


def format_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL.match(text) if isinstance(text, str) else None
    if not m:
        raise FormatError(f"{text!r} is not a rational string 'num/den'")
    num, den = int(m.group(1)), int(m.group(2))
    if den <= 0 or gcd(num, den) != 1:
        raise FormatError(f"{text!r} is not in lowest terms with a positive denominator")
    return Fraction(num, den)


@dataclass(frozen=True)
class ComplexDocument:
    complex: SimplicialComplex
    name: str | None = None
    involution: Involution | None = None
    embedding: Embedding | None = None


def complex_to_doc(doc: ComplexDocument) -> dict[str, Any]:
    out: dict[str, Any] = {}
    if doc.name is not None:
        out["name"] = doc.name
    out["dimension"] = doc.complex.dim
    out["facets"] = [list(f) for f in doc.complex.facets]
    if doc.involution is not None:
        out["involution"] = [list(p) for p in doc.involution.pairs()]
    if doc.embedding is not None:
        out["coordinates"] = {
            str(v): [format_rational(x) for x in doc.embedding[v]] for v in sorted(doc.embedding.coords)
        }
    return out


def _int_list(value: Any, what: str) -> list[int]:
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise FormatError(f"{what} must be a list of integers")
    return value


def doc_to_complex(data: Any) -> ComplexDocument:
    if not isinstance(data, dict) or "facets" not in data:
        raise FormatError("a complex document needs a 'facets' list")
    unknown = set(data) - {"name", "dimension", "facets", "involution", "coordinates"}
    if unknown:
        raise FormatError(f"unknown keys {sorted(unknown)}")
    facets = data["facets"]
    if not isinstance(facets, list):
        raise FormatError("'facets' must be a list")
    try:
        delta = from_facets(_int_list(f, "a facet") for f in facets)
    except ComplexError as exc:
        raise FormatError(str(exc)) from exc
    if "dimension" in data and data["dimension"] != delta.dim:
        raise FormatError(f"declared dimension {data['dimension']} != {delta.dim}")
    name = data.get("name")
    if name is not None and not isinstance(name, str):
        raise FormatError("'name' must be a string")
    alpha = None
    if "involution" in data:
        pairs = data["involution"]
        if not isinstance(pairs, list) or not all(len(_int_list(p, "a pair")) == 2 for p in pairs):
            raise FormatError("'involution' must list pairs [v, w]")
        try:
            alpha = Involution.from_pairs(pairs)
        except ComplexError as exc:
            raise FormatError(str(exc)) from exc
    emb = None
    if "coordinates" in data:
        coords = data["coordinates"]
        if not isinstance(coords, dict) or not coords:
            raise FormatError("'coordinates' must be a non-empty object")
        parsed = {}
        for key, entries in coords.items():
            if not key.isdigit() or not isinstance(entries, list):
                raise FormatError(f"bad coordinate entry for {key!r}")
            parsed[int(key)] = tuple(parse_rational(x) for x in entries)
        dims = {len(p) for p in parsed.values()}
        if len(dims) != 1:
            raise FormatError("coordinate vectors differ in length")
        emb = Embedding(dims.pop(), parsed)
    return ComplexDocument(delta, name, alpha, emb)


def dumps(data: Any) -> str:
    return json.dumps(data, separators=(", ", ": ")) + "\n"


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc


def subdivision_to_doc(sub: SubdivisionMap) -> dict[str, Any]:
    return {
        "base": complex_to_doc(ComplexDocument(sub.base)),
        "refinement": complex_to_doc(ComplexDocument(sub.refinement)),
        "carrier": {str(v): list(sub.carrier[v]) for v in sorted(sub.carrier)},
    }


def doc_to_subdivision(data: Any) -> SubdivisionMap:
    if not isinstance(data, dict) or set(data) != {"base", "refinement", "carrier"}:
        raise FormatError("a subdivision needs exactly 'base', 'refinement' and 'carrier'")
    carrier = data["carrier"]
    if not isinstance(carrier, dict):
        raise FormatError("'carrier' must be an object")
    parsed = {}
    for key, face in carrier.items():
        if not key.isdigit():
            raise FormatError(f"bad vertex key {key!r}")
        parsed[int(key)] = tuple(sorted(_int_list(face, "a carrier")))
    return SubdivisionMap(doc_to_complex(data["base"]).complex, doc_to_complex(data["refinement"]).complex, parsed)


def script_to_doc(script: StackingScript) -> dict[str, Any]:
    return {
        "base": {"kind": script.kind, "d": script.d},
        "steps": [{"facet": list(s.facet), "mode": s.mode} for s in script.steps],
    }


def doc_to_script(data: Any) -> StackingScript:
    try:
        base = data["base"]
        steps = tuple(
            StackingStep(tuple(sorted(_int_list(s["facet"], "a facet"))), s.get("mode", "symmetric"))
            for s in data.get("steps", [])
        )
        return StackingScript(base["kind"], int(base["d"]), steps)
    except (KeyError, TypeError, AttributeError, ValueError) as exc:
        raise FormatError(f"bad stacking script: {exc}") from exc


def stresses_to_doc(basis: StressBasis) -> list[list[dict[str, Any]]]:
    return [
        [{"edge": list(e), "weight": format_rational(w)} for e, w in zip(basis.edges, vec) if w]
        for vec in basis.vectors
    ]
