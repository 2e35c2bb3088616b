"""Named checks over generated instances, with explicit reporting.

Each check returns a ``CheckReport``.  Instances outside a statement's
hypotheses go into ``observed`` and are never counted as passes; vacuous
passes are counted separately so they cannot look stronger than they are.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from pathlib import Path
from typing import Any, Callable, Iterable

from .complex import (
    ComplexError,
    SimplicialComplex,
    graph,
    is_prime,
    link,
    looks_like_sphere,
    make_graph,
    missing_faces,
    simplex,
    star,
)
from .constructions import (
    StackingScript,
    apply_script,
    cross_polytope_boundary,
    cs_stellar_subdivide,
    random_script,
    simplex_boundary,
    stellar_subdivision_map,
    swartz_demo_instance,
    swartz_operation,
)
from .enumerative import (
    check_ellh_identity as ellh_holds,
    f_vector,
    g_number,
    h_polynomial,
    identity_subdivision,
    local_h,
)
from .geometry import (
    Embedding,
    RealizedPolytope,
    certify_convex_position,
    project_orthogonal,
    realize_cross_polytope,
    realize_script,
)
from .rigidity import (
    is_infinitesimally_rigid,
    rank,
    rigidity_matrix,
    spans_space,
    stress_basis,
    stress_through_edge,
    symmetric_stress_bound,
    symmetric_stress_subspace,
    union_graph,
)
from .symmetry import CsComplex, CsValidationError, antipodal_pairs_in, common_link_vertices, validate_cs


class ConfigError(ValueError):
    pass


@dataclass
class CheckReport:
    name: str
    instances: int = 0
    passed: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)
    observed: list[dict[str, Any]] = field(default_factory=list)
    vacuous: int = 0
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def expect(self, instance: str, observed: Any, expected: Any, witness: dict | None = None) -> bool:
        self.instances += 1
        if observed == expected:
            self.passed += 1
            return True
        failure = {"instance": instance, "observed": _jsonable(observed), "expected": _jsonable(expected)}
        if witness is not None:
            failure["witness"] = witness
        self.failures.append(failure)
        return False

    def note(self, instance: str, observed: Any, reason: str) -> None:
        """Record an instance outside the hypotheses; never asserted."""
        self.observed.append({"instance": instance, "observed": _jsonable(observed), "reason": reason})

    def vacuous_pass(self, instance: str) -> None:
        self.instances += 1
        self.passed += 1
        self.vacuous += 1

    def merge(self, other: "CheckReport") -> None:
        self.instances += other.instances
        self.passed += other.passed
        self.failures += other.failures
        self.observed += other.observed
        self.vacuous += other.vacuous

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = f", {self.vacuous} vacuous" if self.vacuous else ""
        extra += f", {len(self.observed)} observed only" if self.observed else ""
        return f"{status} {self.name}: {self.passed}/{self.instances}{extra} ({self.wall_time:.2f}s)"

    def to_json(self) -> dict[str, Any]:
        return asdict(self)


def _jsonable(x: Any) -> Any:
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, (tuple, list)):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return x


def _timed(name: str):
    def wrap(fn: Callable[..., CheckReport]) -> Callable[..., CheckReport]:
        def run(*args: Any, **kwargs: Any) -> CheckReport:
            start = time.perf_counter()
            report = fn(*args, **kwargs)
            report.name = name
            report.wall_time = time.perf_counter() - start
            return report

        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run

    return wrap


def _witness(delta: SimplicialComplex, alpha=None, emb: Embedding | None = None) -> dict:
    from .serialize import ComplexDocument, complex_to_doc

    return complex_to_doc(ComplexDocument(delta, None, alpha, emb))


@lru_cache(maxsize=256)
def _realized(script: StackingScript, seed: int) -> RealizedPolytope:
    return realize_script(script, seed)


@lru_cache(maxsize=256)
def _cached_facts(script: StackingScript, seed: int) -> dict[str, Any]:
    return _framework_facts(_realized(script, seed))


def _framework_facts(p: RealizedPolytope) -> dict[str, Any]:
    g = graph(p.complex)
    m = rigidity_matrix(g, p.embedding)
    r = rank(m)
    d, f0 = p.d, len(g.vertices)
    facts = {
        "rank": r,
        "rigid": spans_space(g, p.embedding) and r == d * f0 - comb(d + 1, 2),
        "dim_S": len(g.edges) - r,
        "g2": g_number(p.complex, 2),
        "convex": certify_convex_position(p),
    }
    if p.alpha is not None:
        basis = stress_basis(m)
        facts["dim_S_sym"], facts["all_symmetric"] = symmetric_stress_subspace(basis, p.alpha)
        facts["sym_bound"] = symmetric_stress_bound(g, d)
    return facts


# -- face-number checks ----------------------------------------------------


@_timed("g2_cross_polytope")
def check_g2_cross_polytope(d_range: Iterable[int]) -> CheckReport:
    report = CheckReport("")
    for d in d_range:
        if d < 3:
            raise ValueError("g_2 of the cross-polytope is checked for d >= 3")
        report.expect(f"C*_{d}", g_number(cross_polytope_boundary(d).complex, 2), comb(d, 2) - d)
    return report


@_timed("h_cross_polytope")
def check_h_cross_polytope(d_range: Iterable[int]) -> CheckReport:
    report = CheckReport("")
    for d in d_range:
        expected = tuple(comb(d, i) for i in range(d + 1))
        report.expect(f"C*_{d}", h_polynomial(cross_polytope_boundary(d).complex), expected)
    return report


@_timed("g_r_cross_polytope")
def check_g_r_cross_polytope(d_range: Iterable[int]) -> CheckReport:
    report = CheckReport("")
    for d in d_range:
        delta = cross_polytope_boundary(d).complex
        for r in range(1, d // 2 + 1):
            report.expect(f"C*_{d} r={r}", g_number(delta, r), comb(d, r) - comb(d, r - 1))
    return report


@_timed("handshake_identity")
def check_handshake_identity(c: CsComplex, d: int) -> CheckReport:
    """4 f1 = f0 (f0 + 2d - 4), once every vertex meets the degree premise."""
    report = CheckReport("")
    delta = c.complex
    nbrs = graph(delta).neighbors()
    bad = []
    for u in delta.vertices:
        others = set(delta.vertices) - {u, c.alpha(u)}
        covered = nbrs[u] | nbrs[c.alpha(u)]
        if not others <= covered or len(common_link_vertices(c, u)) != 2 * d - 2:
            bad.append(u)
    f = f_vector(delta)
    label = f"f0={f[1]} f1={f[2]} d={d}"
    if bad:
        report.note(label, {"premise_fails_at": bad}, "degree premise fails; identity not asserted")
        return report
    report.expect(label, 4 * f[2], f[1] * (f[1] + 2 * d - 4))
    return report


@_timed("common_neighbors")
def check_common_neighbors(c: CsComplex, d: int) -> CheckReport:
    """|lk(u) and lk(-u) share| = 2d - 2 on the cross-polytope; observed elsewhere."""
    report = CheckReport("")
    asserted = len(c.complex.vertices) == 2 * d
    for u in c.complex.vertices:
        count = len(common_link_vertices(c, u))
        if asserted:
            report.expect(f"vertex {u}", count, 2 * d - 2)
        else:
            report.note(f"vertex {u}", count, "not the cross-polytope; count reported only")
    return report


# -- realized frameworks ---------------------------------------------------


@_timed("cross_polytope_rigidity")
def check_cross_polytope_rigidity(d_range: Iterable[int], seeds: Iterable[int]) -> CheckReport:
    report = CheckReport("")
    seeds = list(seeds)
    for d in d_range:
        for seed in seeds:
            p = realize_cross_polytope(d, seed)
            facts = _framework_facts(p)
            dim_s = comb(d, 2) - d
            observed = (facts["rank"], facts["rigid"], facts["dim_S"], facts["dim_S_sym"])
            expected = (2 * d * d - comb(d + 1, 2), True, dim_s, dim_s)
            report.expect(f"C*_{d} seed={seed}", observed, expected, _witness(p.complex, p.alpha, p.embedding))
    return report


def _script_name(script: StackingScript) -> str:
    steps = ";".join(f"{s.mode[0]}{list(s.facet)}" for s in script.steps)
    return f"{script.kind}{script.d}[{steps}]"


@_timed("main_theorem_forward")
def check_main_theorem_forward(script: StackingScript, seed: int = 0) -> CheckReport:
    """Symmetric stackings of the cross-polytope keep g_2, rigidity and symmetric stresses."""
    if script.kind != "cross":
        raise ValueError("script invalid: the base must be a cross-polytope")
    report = CheckReport("")
    d = script.d
    label = _script_name(script)
    result = apply_script(script)
    if not isinstance(result, CsComplex):
        base = cross_polytope_boundary(d)
        try:
            validate_cs(result, base.alpha)
            observed = "valid"
        except CsValidationError as exc:
            observed = f"cs-validation failed: {exc}"
        report.expect(label, observed, "valid", _witness(result))
        return report
    p = _realized(script, seed)
    facts = _cached_facts(script, seed)
    dim_s = comb(d, 2) - d
    observed = (facts["g2"], facts["rigid"], facts["dim_S"], facts["all_symmetric"], facts["convex"])
    report.expect(label, observed, (dim_s, True, dim_s, True, True), _witness(p.complex, p.alpha, p.embedding))
    return report


@_timed("lbt_equality")
def check_lbt_equality(script: StackingScript, seed: int = 0) -> CheckReport:
    """Stacked polytopes carry no stresses; a cross-polytope base is an expected non-example."""
    report = CheckReport("")
    label = _script_name(script)
    p = _realized(script, seed)
    facts = _cached_facts(script, seed)
    if script.kind != "simplex" or any(s.mode != "single" for s in script.steps):
        report.note(label, {"dim_S": facts["dim_S"], "g2": facts["g2"]}, "not stacked; expected non-example")
        return report
    report.expect(label, (facts["dim_S"], facts["g2"]), (0, 0), _witness(p.complex, None, p.embedding))
    return report


@_timed("symm_stress_dim")
def check_symm_stress_dim(polytopes: Iterable[tuple[str, RealizedPolytope]]) -> CheckReport:
    """dim S_sym >= f1/2 - d f0/2 + C(d, 2) on cs frameworks."""
    report = CheckReport("")
    for label, p in polytopes:
        facts = _framework_facts(p)
        report.expect(label, facts["dim_S_sym"] >= facts["sym_bound"], True)
    return report


@_timed("missing_face_graph_lemma")
def check_missing_face_graph_lemma(c: CsComplex, emb: Embedding) -> CheckReport:
    """(tau minus e) union -e is a face, for missing faces 3 <= |tau| <= d-1 and edges e of tau."""
    report = CheckReport("")
    delta = c.complex
    d = emb.d
    g = graph(delta)
    g2 = g_number(delta, 2)
    if g2 != comb(d, 2) - d or not is_infinitesimally_rigid(g, emb):
        report.note(f"g2={g2}", g2, "outside the hypotheses (g_2 above the bound or not rigid)")
        return report
    qualifying = [t for t in missing_faces(delta, d - 1) if len(t) >= 3]
    if not qualifying:
        report.vacuous_pass(f"f0={len(delta.vertices)}: no missing face of size 3..{d - 1}")
        return report
    for tau in qualifying:
        for e in combinations(tau, 2):
            image = set(tau) - set(e) | {c.alpha(v) for v in e}
            report.expect(f"tau={list(tau)} e={list(e)}", tuple(sorted(image)) in delta, True, _witness(delta, c.alpha))
    return report


@_timed("chordless_cycle_stress")
def check_chordless_cycle_stress(d: int = 4, seed: int = 0) -> CheckReport:
    """Edge e = {u, v} of a 4-cycle u, v, -u, -v carries a stress on st(-u) + st(-v) + e."""
    report = CheckReport("")
    p = realize_cross_polytope(d, seed)
    c = p.cs
    delta = c.complex
    for u, v in graph(delta).edges:
        w, z = c.alpha(u), c.alpha(v)
        sub = union_graph(graph(star(delta, (w,))), graph(star(delta, (z,))))
        stress = stress_through_edge(graph(delta), p.embedding, sub, (u, v))
        weight = stress[(u, v)] if stress is not None else Fraction(0)
        report.expect(f"C*_{d} e={u},{v}", weight != 0, True, _witness(delta, c.alpha, p.embedding))
    return report


@_timed("cone_lemma")
def check_cone_lemma(d_range: Iterable[int], seeds: Iterable[int]) -> CheckReport:
    """star(u) rigid in R^d iff the link, projected along p(u), is rigid in R^(d-1).

    Each vertex is checked on the full star and on the star with one link
    edge removed, so both verdicts of the equivalence get exercised.
    """
    report = CheckReport("")
    seeds = list(seeds)
    for d in d_range:
        for seed in seeds:
            p = realize_cross_polytope(d, seed)
            delta = p.complex
            for u in delta.vertices:
                lk = graph(link(delta, (u,)))
                variants = [("full", lk.edges), ("minus-edge", lk.edges[1:])]
                for tag, edges in variants:
                    cone_g = make_graph(lk.vertices + (u,), list(edges) + [(u, v) for v in lk.vertices])
                    base_g = make_graph(lk.vertices, edges)
                    proj = project_orthogonal(p.embedding, p.embedding[u], lk.vertices)
                    left = is_infinitesimally_rigid(cone_g, p.embedding)
                    right = is_infinitesimally_rigid(base_g, proj)
                    report.expect(f"C*_{d} seed={seed} u={u} {tag}", left, right)
    return report


@_timed("swartz_bookkeeping")
def check_swartz_bookkeeping(d: int = 5) -> CheckReport:
    """Splitting a vertex adds one vertex and d-1 edges and lowers g_2 by one."""
    report = CheckReport("")
    c, v0, tau = swartz_demo_instance(d)
    before = c.complex
    report.expect("prime input", is_prime(before), True)
    after = swartz_operation(before, v0, tau)
    fb, fa = f_vector(before), f_vector(after)
    delta_counts = (fa[1] - fb[1], fa[2] - fb[2], g_number(after, 2) - g_number(before, 2))
    report.expect(f"d={d} v0={v0}", delta_counts, (1, d - 1, -1), _witness(before, c.alpha))
    report.expect(f"d={d} sphere checks", looks_like_sphere(after), True, _witness(after))
    return report


@_timed("ellh_identity")
def check_ellh_identity(d_max: int = 5) -> CheckReport:
    """h(refinement) = sum over base faces of local h times h of the link."""
    report = CheckReport("")
    bases: list[tuple[str, SimplicialComplex]] = []
    for d in range(3, d_max + 1):
        bases.append((f"simplex{d}", simplex_boundary(d)))
        bases.append((f"cross{d}", cross_polytope_boundary(d).complex))
    for name, delta in bases:
        report.expect(f"{name} identity", ellh_holds(identity_subdivision(delta)), True)
        for kind, face in (("facet", delta.facets[0]), ("ridge", delta.facets[0][:-1])):
            sub = stellar_subdivision_map(delta, face)
            report.expect(f"{name} {kind}", ellh_holds(sub), True, _witness(sub.refinement))
    for n in range(1, d_max + 1):
        face = tuple(range(n + 1))
        ell = local_h(stellar_subdivision_map(simplex(face), face), face)
        coeffs = list(ell) + [0] * (n + 2 - len(ell))
        nonneg_sym = all(x >= 0 for x in coeffs) and coeffs[: n + 2] == coeffs[: n + 2][::-1]
        report.expect(f"stellar simplex n={n} local h {list(ell)}", nonneg_sym, True)
    return report


# -- suites ----------------------------------------------------------------


@dataclass
class VerifyConfig:
    checks: tuple[str, ...] = ()
    d_min: int = 3
    d_max: int = 5
    max_stackings: int = 4
    seeds: tuple[int, ...] = (0, 1, 2)
    scripts_file: str | None = None
    failure_dir: str | None = None
    jobs: int = 1

    def __post_init__(self) -> None:
        if self.d_min < 3 or self.d_max < self.d_min:
            raise ConfigError(f"need 3 <= d_min <= d_max, got {self.d_min}..{self.d_max}")
        if self.max_stackings < 0 or not self.seeds or self.jobs < 1:
            raise ConfigError("max_stackings >= 0, a non-empty seed list and jobs >= 1 are required")
        unknown = [c for c in self.checks if _canonical_check(c) not in SUITE]
        if unknown:
            raise ConfigError(f"unknown checks {unknown}; known: {sorted(SUITE)}")

    @property
    def selected(self) -> list[str]:
        names = [_canonical_check(c) for c in self.checks] if self.checks else list(SUITE)
        return sorted(dict.fromkeys(names))


def _canonical_check(name: str) -> str:
    return name[len("check_"):] if name.startswith("check_") else name


def load_config(path: str | Path | None) -> VerifyConfig:
    if path is None:
        return VerifyConfig()
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return config_from_dict(data, base=Path(path).parent)


def config_from_dict(data: Any, base: Path | None = None) -> VerifyConfig:
    if not isinstance(data, dict):
        raise ConfigError("a config must be a JSON object")
    known = {f for f in VerifyConfig.__dataclass_fields__}
    unknown = set(data) - known
    if unknown:
        raise ConfigError(f"unknown config keys {sorted(unknown)}")
    kwargs = dict(data)
    for key in ("checks", "seeds"):
        if key in kwargs:
            if not isinstance(kwargs[key], list):
                raise ConfigError(f"'{key}' must be a list")
            kwargs[key] = tuple(kwargs[key])
    for key in ("d_min", "d_max", "max_stackings", "jobs"):
        if key in kwargs and (not isinstance(kwargs[key], int) or isinstance(kwargs[key], bool)):
            raise ConfigError(f"'{key}' must be an integer")
    if not all(isinstance(s, int) for s in kwargs.get("seeds", (0,))):
        raise ConfigError("'seeds' must list integers")
    if kwargs.get("scripts_file") and base is not None and not Path(kwargs["scripts_file"]).is_absolute():
        kwargs["scripts_file"] = str(base / kwargs["scripts_file"])
    cfg = VerifyConfig(**kwargs)
    load_scripts(cfg)
    return cfg


def load_scripts(cfg: VerifyConfig) -> list[StackingScript]:
    """Extra stacking scripts from ``scripts_file`` (a JSON list)."""
    if not cfg.scripts_file:
        return []
    from .serialize import FormatError, doc_to_script

    try:
        data = json.loads(Path(cfg.scripts_file).read_text())
        if not isinstance(data, list):
            raise ConfigError("the scripts file must hold a JSON list")
        return [doc_to_script(s) for s in data]
    except (OSError, json.JSONDecodeError, FormatError, ValueError) as exc:
        raise ConfigError(f"corrupt scripts file {cfg.scripts_file}: {exc}") from exc


def _stacking_scripts(cfg: VerifyConfig, kind: str) -> list[tuple[StackingScript, int]]:
    out = []
    for d in range(max(cfg.d_min, 4), cfg.d_max + 1):
        for k in range(1, cfg.max_stackings + 1):
            for seed in cfg.seeds:
                out.append((random_script(kind, d, k, seed), seed))
    out += [(s, cfg.seeds[0]) for s in load_scripts(cfg) if s.kind == kind]
    return out


def _cs_polytopes(cfg: VerifyConfig) -> list[tuple[str, RealizedPolytope]]:
    out = []
    for d in range(cfg.d_min, cfg.d_max + 1):
        for seed in cfg.seeds:
            out.append((f"C*_{d} seed={seed}", realize_cross_polytope(d, seed)))
    for script, seed in _stacking_scripts(cfg, "cross"):
        if all(s.mode == "symmetric" for s in script.steps):
            out.append((_script_name(script), _realized(script, seed)))
    return out


def _suite_g2(cfg: VerifyConfig) -> CheckReport:
    return check_g2_cross_polytope(range(cfg.d_min, cfg.d_max + 1))


def _suite_h(cfg: VerifyConfig) -> CheckReport:
    return check_h_cross_polytope(range(cfg.d_min, cfg.d_max + 1))


def _suite_g_r(cfg: VerifyConfig) -> CheckReport:
    return check_g_r_cross_polytope(range(cfg.d_min, cfg.d_max + 1))


def _suite_handshake(cfg: VerifyConfig) -> CheckReport:
    report = CheckReport("handshake_identity")
    for d in range(cfg.d_min, cfg.d_max + 1):
        report.merge(check_handshake_identity(cross_polytope_boundary(d), d))
    for script, _ in _stacking_scripts(cfg, "cross")[:3]:
        c = apply_script(script)
        report.merge(check_handshake_identity(c, script.d))
    return report


def _suite_common_neighbors(cfg: VerifyConfig) -> CheckReport:
    report = CheckReport("common_neighbors")
    for d in range(cfg.d_min, cfg.d_max + 1):
        report.merge(check_common_neighbors(cross_polytope_boundary(d), d))
    for script, _ in _stacking_scripts(cfg, "cross")[:3]:
        report.merge(check_common_neighbors(apply_script(script), script.d))
    return report


def _suite_rigidity(cfg: VerifyConfig) -> CheckReport:
    return check_cross_polytope_rigidity(range(cfg.d_min, cfg.d_max + 1), cfg.seeds)


def _suite_main_forward(cfg: VerifyConfig) -> CheckReport:
    report = CheckReport("main_theorem_forward")
    for script, seed in _stacking_scripts(cfg, "cross"):
        report.merge(check_main_theorem_forward(script, seed))
    return report


def _suite_lbt(cfg: VerifyConfig) -> CheckReport:
    report = CheckReport("lbt_equality")
    for script, seed in _stacking_scripts(cfg, "simplex"):
        report.merge(check_lbt_equality(script, seed))
    d = max(cfg.d_min, 4)
    report.merge(check_lbt_equality(StackingScript("cross", d), cfg.seeds[0]))
    return report


def _suite_symm_stress(cfg: VerifyConfig) -> CheckReport:
    return check_symm_stress_dim(_cs_polytopes(cfg))


def _suite_missing_face(cfg: VerifyConfig) -> CheckReport:
    report = CheckReport("missing_face_graph_lemma")
    for _, p in _cs_polytopes(cfg):
        report.merge(check_missing_face_graph_lemma(p.cs, p.embedding))
    d = max(cfg.d_min, 4)
    c = cs_stellar_subdivide(cross_polytope_boundary(d), tuple(range(d - 1)))
    report.note("cs ridge subdivision", g_number(c.complex, 2), "g_2 above the bound; out of hypothesis")
    return report


def _suite_chordless(cfg: VerifyConfig) -> CheckReport:
    report = CheckReport("chordless_cycle_stress")
    for seed in cfg.seeds:
        report.merge(check_chordless_cycle_stress(4, seed))
    return report


def _suite_cone(cfg: VerifyConfig) -> CheckReport:
    return check_cone_lemma(range(max(cfg.d_min, 4), min(cfg.d_max, 5) + 1), cfg.seeds[:1])


def _suite_swartz(cfg: VerifyConfig) -> CheckReport:
    report = CheckReport("swartz_bookkeeping")
    for d in range(max(cfg.d_min, 4), cfg.d_max + 1):
        report.merge(check_swartz_bookkeeping(d))
    return report


def _suite_ellh(cfg: VerifyConfig) -> CheckReport:
    return check_ellh_identity(cfg.d_max)


SUITE: dict[str, Callable[[VerifyConfig], CheckReport]] = {
    "g2_cross_polytope": _suite_g2,
    "h_cross_polytope": _suite_h,
    "g_r_cross_polytope": _suite_g_r,
    "handshake_identity": _suite_handshake,
    "common_neighbors": _suite_common_neighbors,
    "cross_polytope_rigidity": _suite_rigidity,
    "main_theorem_forward": _suite_main_forward,
    "lbt_equality": _suite_lbt,
    "symm_stress_dim": _suite_symm_stress,
    "missing_face_graph_lemma": _suite_missing_face,
    "chordless_cycle_stress": _suite_chordless,
    "cone_lemma": _suite_cone,
    "swartz_bookkeeping": _suite_swartz,
    "ellh_identity": _suite_ellh,
}


def run_check(name: str, cfg: VerifyConfig) -> CheckReport:
    start = time.perf_counter()
    report = SUITE[name](cfg)
    report.name = name
    report.wall_time = time.perf_counter() - start
    return report


def run_all(cfg: VerifyConfig) -> list[CheckReport]:
    names = cfg.selected
    if cfg.jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            reports = list(pool.map(run_check, names, [cfg] * len(names)))
    else:
        reports = [run_check(n, cfg) for n in names]
    reports.sort(key=lambda r: r.name)
    if cfg.failure_dir:
        write_failures(reports, Path(cfg.failure_dir))
    return reports


def write_failures(reports: Iterable[CheckReport], directory: Path) -> list[Path]:
    """One JSON file per failure that carries a reproducing instance."""
    written = []
    for report in reports:
        for i, failure in enumerate(report.failures):
            if "witness" not in failure:
                continue
            directory.mkdir(parents=True, exist_ok=True)
            path = directory / f"{report.name}-{i}.json"
            path.write_text(json.dumps(failure, sort_keys=True) + "\n")
            written.append(path)
    return written
