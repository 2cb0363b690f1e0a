"""Randomized soundness audit joining certificates with exact oracles.

``audit_random`` walks a seeded corpus of configuration-model graphs,
evaluates every configured certificate at every configured k, runs the
matching oracle, and emits one flat record per (graph, property, k). A
certified property contradicted by its oracle aborts the whole audit with
the per-trial reproduction seed: that situation is an implementation bug,
never new mathematics. Record streams and their CSV/JSON renderings are
byte-identical across runs and platforms for a fixed configuration.

Oracle columns: edge connectivity, vertex connectivity, and tree packing
are cheap enough to evaluate on every graph. The two rigidity oracles are
only evaluated when their certificate fired (the packing oracle per k, the
global-rigidity oracle once); otherwise the record carries an empty oracle
value, which is still a sound row.
"""

from __future__ import annotations

import json
import logging
from dataclasses import asdict, dataclass

from .certify import (
    Certificate,
    certify_edge_connectivity,
    certify_global_rigidity,
    certify_rigid_packing,
    certify_tree_packing,
    certify_vertex_connectivity,
)
from .errors import AuditUnsound, InvalidParam, MixingViolation, RetriesExhausted
from .graphs import BipartiteGraph, random_biregular
from .oracles import (
    edge_connectivity,
    greedy_rigid_packing,
    tree_packing_number,
    vertex_connectivity,
)
from .prng import SplitMix64, derive_seed
from .properties import GraphProperty, Verdict
from .spectral import Spectrum, mixing_check, singular_values

log = logging.getLogger(__name__)

AUDITABLE = (
    GraphProperty.EDGE_CONNECTIVITY,
    GraphProperty.VERTEX_CONNECTIVITY,
    GraphProperty.TREE_PACKING,
    GraphProperty.RIGID_PACKING,
    GraphProperty.GLOBAL_RIGIDITY,
)

CSV_HEADER = "graph_id,a,b,x,y,lambda2,property,k,threshold,verdict,oracle,sound"


@dataclass(frozen=True)
class AuditConfig:
    """One audit campaign: sizes, k values, properties, and the master seed."""

    trials: int
    size_grid: tuple[tuple[int, int, int, int], ...]
    k_grid: tuple[int, ...]
    properties: tuple[GraphProperty, ...]
    seed: int
    output_path: str | None = None

    def __post_init__(self):
        if self.trials < 1:
            raise InvalidParam("trials must be at least 1")
        if not self.size_grid:
            raise InvalidParam("size grid must be nonempty")
        for x, y, a, b in self.size_grid:
            if a * x != b * y:
                raise InvalidParam(
                    f"grid entry (x={x}, y={y}, a={a}, b={b}) violates a*x = b*y"
                )
        if not self.k_grid or any(k < 1 for k in self.k_grid):
            raise InvalidParam("k grid must hold positive integers")
        if not self.properties:
            raise InvalidParam("property set must be nonempty")
        for prop in self.properties:
            if prop not in AUDITABLE:
                raise InvalidParam(f"no exact oracle to audit {prop.value!r}")


@dataclass(frozen=True)
class AuditRecord:
    """One certificate/oracle join, ready for flat serialization.

    Floats are pre-rounded to 12 significant digits so every rendering of
    the record prints the same value and JSON round trips are exact.
    ``oracle`` is None when the oracle was skipped for an unfired
    certificate of an expensive property.
    """

    graph_id: str
    a: int
    b: int
    x: int
    y: int
    lambda2: float
    property: str
    k: int
    threshold: float | None
    verdict: str
    oracle: int | None
    sound: bool


def _round12(value):
    return None if value is None else float(f"{value:.12g}")


def default_size_grid() -> tuple[tuple[int, int, int, int], ...]:
    """Desk-scale grid: degrees 2..8, n <= 60, densities samplable by rejection.

    Expected rejection count for the configuration model grows like
    exp((a-1)(b-1)/2), so degree pairs are kept to (a-1)(b-1) <= 14; the
    high degrees appear in asymmetric pairs.
    """
    return (
        (4, 4, 2, 2), (12, 12, 2, 2), (30, 30, 2, 2),
        (6, 4, 2, 3), (18, 12, 2, 3),
        (4, 6, 3, 2), (12, 18, 3, 2),
        (8, 4, 2, 4), (24, 12, 2, 4),
        (4, 8, 4, 2), (12, 24, 4, 2),
        (10, 4, 2, 5), (25, 10, 2, 5),
        (4, 10, 5, 2), (10, 25, 5, 2),
        (12, 4, 2, 6), (24, 8, 2, 6),
        (4, 12, 6, 2), (8, 24, 6, 2),
        (14, 4, 2, 7), (28, 8, 2, 7),
        (4, 14, 7, 2), (8, 28, 7, 2),
        (16, 4, 2, 8), (24, 6, 2, 8),
        (4, 16, 8, 2), (6, 24, 8, 2),
        (6, 6, 3, 3), (15, 15, 3, 3),
        (8, 6, 3, 4), (16, 12, 3, 4),
        (6, 8, 4, 3), (12, 16, 4, 3),
        (10, 6, 3, 5), (20, 12, 3, 5),
        (6, 10, 5, 3), (12, 20, 5, 3),
        (10, 5, 3, 6), (16, 8, 3, 6),
        (5, 10, 6, 3), (8, 16, 6, 3),
        (14, 6, 3, 7), (6, 14, 7, 3),
        (24, 9, 3, 8), (9, 24, 8, 3),
        (8, 8, 4, 4), (14, 14, 4, 4),
        (10, 8, 4, 5), (15, 12, 4, 5),
        (8, 10, 5, 4), (12, 15, 5, 4),
        (18, 12, 4, 6), (12, 18, 6, 4),
        (10, 10, 5, 5),
    )


def default_config(
    trials: int = 10,
    seed: int = 0x5EED_B1A5,
    properties: tuple[GraphProperty, ...] = (
        GraphProperty.EDGE_CONNECTIVITY,
        GraphProperty.VERTEX_CONNECTIVITY,
        GraphProperty.TREE_PACKING,
    ),
    k_grid: tuple[int, ...] = (2, 3, 4, 5, 6, 7, 8),
) -> AuditConfig:
    return AuditConfig(
        trials=trials,
        size_grid=default_size_grid(),
        k_grid=tuple(sorted(set(k_grid))),
        properties=tuple(
            sorted(set(properties), key=lambda p: p.value)
        ),
        seed=seed,
    )


def generate_corpus(cfg: AuditConfig):
    """Yield (graph_id, trial_seed, graph, spectrum) for every sampled trial.

    Trials whose rejection sampling budget runs out are logged and skipped.
    """
    for combo_idx, (x, y, a, b) in enumerate(cfg.size_grid):
        for trial in range(cfg.trials):
            trial_seed = derive_seed(cfg.seed, combo_idx, trial)
            try:
                g = random_biregular(x, y, a, b, trial_seed)
            except RetriesExhausted:
                log.warning(
                    "skipping trial: no simple graph for "
                    "(x=%d, y=%d, a=%d, b=%d, seed=%d)", x, y, a, b, trial_seed,
                )
                continue
            gid = f"x{x}y{y}a{a}b{b}-{trial_seed:016x}"
            yield gid, trial_seed, g, singular_values(g)


def _certify(g, prop, k, spectrum) -> Certificate:
    if prop is GraphProperty.EDGE_CONNECTIVITY:
        return certify_edge_connectivity(g, k, spectrum)
    if prop is GraphProperty.VERTEX_CONNECTIVITY:
        return certify_vertex_connectivity(g, k, spectrum)
    if prop is GraphProperty.TREE_PACKING:
        return certify_tree_packing(g, k, spectrum)
    if prop is GraphProperty.RIGID_PACKING:
        return certify_rigid_packing(g, k, spectrum)
    if prop is GraphProperty.GLOBAL_RIGIDITY:
        return certify_global_rigidity(g, spectrum)
    raise InvalidParam(f"cannot audit {prop.value!r}")


def audit_random(cfg: AuditConfig) -> list[AuditRecord]:
    """Run the audit; raises AuditUnsound with a reproduction seed on failure."""
    records = []
    for gid, trial_seed, g, spectrum in generate_corpus(cfg):
        cache: dict = {}
        for prop in cfg.properties:
            ks = (1,) if prop is GraphProperty.GLOBAL_RIGIDITY else cfg.k_grid
            for k in ks:
                cert = _certify(g, prop, k, spectrum)
                oracle, exact = _oracle_value(g, prop, k, cert, cfg, cache)
                sound = not (
                    cert.verdict is Verdict.CERTIFIED
                    and exact
                    and oracle is not None
                    and oracle < k
                )
                record = AuditRecord(
                    graph_id=gid,
                    a=cert.a,
                    b=cert.b,
                    x=cert.x,
                    y=cert.y,
                    lambda2=_round12(cert.lambda2),
                    property=prop.value,
                    k=k,
                    threshold=_round12(cert.threshold),
                    verdict=cert.verdict.value,
                    oracle=oracle,
                    sound=sound,
                )
                if not sound:
                    raise AuditUnsound(record, trial_seed)
                records.append(record)
    records.sort(key=lambda r: (r.graph_id, r.property, r.k))
    return records


def _oracle_value(g, prop, k, cert, cfg, cache):
    """(value, exact) for the property's oracle; value None when skipped."""
    if prop is GraphProperty.EDGE_CONNECTIVITY:
        if "kappa_e" not in cache:
            cache["kappa_e"] = edge_connectivity(g).value
        return cache["kappa_e"], True
    if prop is GraphProperty.VERTEX_CONNECTIVITY:
        if "kappa_v" not in cache:
            cache["kappa_v"] = vertex_connectivity(g).value
        return cache["kappa_v"], True
    if prop is GraphProperty.TREE_PACKING:
        if "tau" not in cache:
            cache["tau"] = tree_packing_number(g, k_max=max(cfg.k_grid)).value
        return cache["tau"], True
    if prop is GraphProperty.RIGID_PACKING:
        if cert.verdict is not Verdict.CERTIFIED:
            return None, True
        res = greedy_rigid_packing(g, k)
        return res.value, res.exact
    if prop is GraphProperty.GLOBAL_RIGIDITY:
        if cert.verdict is not Verdict.CERTIFIED:
            return None, True
        from .oracles import is_globally_rigid

        return is_globally_rigid(g).value, True
    raise InvalidParam(f"cannot audit {prop.value!r}")


@dataclass(frozen=True)
class MixingAuditReport:
    """Summary of a sampled mixing-inequality sweep over one graph."""

    pairs: int
    violations: int
    min_slack: float
    max_slack: float


def mixing_audit(
    g: BipartiteGraph,
    pairs: int,
    seed: int,
    spectrum: Spectrum | None = None,
    tol: float = 1e-9,
) -> MixingAuditReport:
    """Check the mixing inequality on ``pairs`` uniform (A, B) subset pairs.

    Membership of each vertex is one low bit of the seeded stream, so the
    sample includes empty and full sides. Any violation raises
    MixingViolation carrying the offending pair: the inequality is a
    theorem, so a violation means a bug.
    """
    if pairs < 1:
        raise InvalidParam("pairs must be at least 1")
    if spectrum is None:
        spectrum = singular_values(g)
    rng = SplitMix64(seed)
    min_slack = None
    max_slack = None
    for _ in range(pairs):
        a_side = frozenset(
            ("x", i) for i in range(g.x_count) if rng.next_u64() & 1
        )
        b_side = frozenset(
            ("y", j) for j in range(g.y_count) if rng.next_u64() & 1
        )
        report = mixing_check(g, a_side, b_side, spectrum, tol)
        if not report.holds:
            raise MixingViolation(a_side, b_side, report.lhs, report.rhs)
        slack = report.rhs - report.lhs
        if min_slack is None or slack < min_slack:
            min_slack = slack
        if max_slack is None or slack > max_slack:
            max_slack = slack
    return MixingAuditReport(
        pairs=pairs, violations=0, min_slack=min_slack, max_slack=max_slack
    )


def _csv_value(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".12g")
    return str(value)


def report_emit(records, fmt: str = "csv") -> str:
    """Render records as CSV (fixed header) or JSON (same keys).

    Floats were rounded at record creation, so both renderings carry 12
    significant digits and repeated runs emit identical bytes.
    """
    if fmt == "csv":
        lines = [CSV_HEADER]
        for r in records:
            lines.append(
                ",".join(
                    _csv_value(v)
                    for v in (
                        r.graph_id, r.a, r.b, r.x, r.y, r.lambda2,
                        r.property, r.k, r.threshold, r.verdict,
                        r.oracle, r.sound,
                    )
                )
            )
        return "\n".join(lines) + "\n"
    if fmt == "json":
        return json.dumps([asdict(r) for r in records], indent=1) + "\n"
    raise InvalidParam(f"unknown report format {fmt!r}")


def parse_report_json(text: str) -> list[AuditRecord]:
    return [AuditRecord(**obj) for obj in json.loads(text)]
