"""Weighted dual graphs of exceptional divisors.

One vertex per irreducible component, weighted by self-intersection; edges
record intersection numbers between distinct components.  This module
models the graphs, turns them into intersection matrices, validates the
hypotheses the rest of the package relies on, generates the standard ADE
and continued-fraction chain families, and reads/writes the JSON format.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from importlib import resources
from math import gcd
from pathlib import Path

from .errors import (
    GraphFormatError,
    NotCoprimeError,
    UnsupportedIndexError,
)
from .exactlat import IntMatrix, is_negative_definite, is_prime


@dataclass(frozen=True)
class Vertex:
    """Irreducible component: self-intersection number, gcd ``d`` of the
    degrees of invertible sheaves on it, and the residue degree of a chosen
    regular closed point (1 over a separably closed base with rational
    points, which is the typical case)."""

    id: str
    self_intersection: int
    d: int = 1
    residue_degree: int = 1

    def __post_init__(self):
        if not isinstance(self.id, str) or not self.id:
            raise GraphFormatError("vertex id must be a nonempty string")
        if self.d < 1:
            raise GraphFormatError(f"vertex {self.id!r}: d must be >= 1")
        if self.residue_degree < 1:
            raise GraphFormatError(f"vertex {self.id!r}: residue_degree must be >= 1")


@dataclass(frozen=True)
class Edge:
    """Unordered intersection record; multiplicity m is the intersection
    number (E_i, E_j) >= 1 between the two components."""

    a: str
    b: str
    m: int = 1

    def __post_init__(self):
        if self.a == self.b:
            raise GraphFormatError(f"edge endpoints must differ: {self.a!r}")
        if self.m < 1:
            raise GraphFormatError(f"edge {self.a!r}-{self.b!r}: multiplicity must be >= 1")


@dataclass(frozen=True)
class DualGraph:
    name: str
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        ids = [v.id for v in self.vertices]
        if len(set(ids)) != len(ids):
            dup = next(x for i, x in enumerate(ids) if x in ids[:i])
            raise GraphFormatError(f"duplicate vertex id {dup!r}")
        known = set(ids)
        seen_pairs = set()
        for e in self.edges:
            if e.a not in known or e.b not in known:
                raise GraphFormatError(f"edge {e.a!r}-{e.b!r} references a missing vertex")
            pair = frozenset((e.a, e.b))
            if pair in seen_pairs:
                raise GraphFormatError(f"more than one edge record for pair {e.a!r}-{e.b!r}")
            seen_pairs.add(pair)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def index_of(self, vertex_id: str) -> int:
        for i, v in enumerate(self.vertices):
            if v.id == vertex_id:
                return i
        raise KeyError(vertex_id)

    def adjacency(self) -> list[list[int]]:
        """Neighbor lists by vertex index (multiplicities ignored)."""
        idx = {v.id: i for i, v in enumerate(self.vertices)}
        adj: list[list[int]] = [[] for _ in self.vertices]
        for e in self.edges:
            i, j = idx[e.a], idx[e.b]
            adj[i].append(j)
            adj[j].append(i)
        return adj


def intersection_matrix(g: DualGraph) -> IntMatrix:
    """Symmetric matrix of pairwise intersection numbers: self-intersections
    on the diagonal, edge multiplicities off it, 0 for non-adjacent pairs."""
    n = g.n
    idx = {v.id: i for i, v in enumerate(g.vertices)}
    a = [[0] * n for _ in range(n)]
    for i, v in enumerate(g.vertices):
        a[i][i] = v.self_intersection
    for e in g.edges:
        i, j = idx[e.a], idx[e.b]
        a[i][j] = e.m
        a[j][i] = e.m
    return IntMatrix.from_rows(a) if n else IntMatrix(0, 0, ())


def connected_components(g: DualGraph) -> list[list[int]]:
    adj = g.adjacency()
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        stack = [start]
        while stack:
            cur = stack.pop()
            for nxt in adj[cur]:
                if not seen[nxt]:
                    seen[nxt] = True
                    comp.append(nxt)
                    stack.append(nxt)
        comps.append(sorted(comp))
    return comps


def is_connected(g: DualGraph) -> bool:
    """Empty graphs count as connected (the regular-point case)."""
    return len(connected_components(g)) <= 1


def is_forest(g: DualGraph) -> bool:
    """Acyclic as a multigraph: an edge of multiplicity >= 2 is a cycle."""
    if any(e.m >= 2 for e in g.edges):
        return False
    return len(g.edges) == g.n - len(connected_components(g))


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[CheckResult, ...]

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def validate(g: DualGraph, ell: int) -> ValidationReport:
    """Run every hypothesis check the homology pipeline relies on.

    Failures are report entries, never exceptions: symmetry (holds by
    construction), negative definiteness of the intersection matrix,
    connectedness, each degree gcd dividing its column of the intersection
    matrix, the coefficient prime not dividing any degree gcd or residue
    degree, and the graph being a forest.
    """
    if not is_prime(ell):
        raise ValueError(f"coefficient prime required, got {ell}")
    inter = intersection_matrix(g)
    checks = [CheckResult("symmetric", True, "intersection matrix is symmetric by construction")]

    nd = is_negative_definite(inter)
    checks.append(CheckResult(
        "negative_definite", nd,
        "all leading principal minors alternate in sign" if nd
        else "some leading principal minor violates the sign condition"))

    ncomp = len(connected_components(g))
    conn = ncomp <= 1
    if conn:
        detail = "single component" if g.n else "empty graph (vacuously connected)"
    else:
        detail = f"{ncomp} components"
    checks.append(CheckResult("connected", conn, detail))

    bad_div = []
    for j, v in enumerate(g.vertices):
        if v.d == 1:
            continue
        for i in range(g.n):
            if inter[i, j] % v.d != 0:
                bad_div.append(f"d={v.d} of {v.id!r} does not divide ({g.vertices[i].id!r},{v.id!r})={inter[i, j]}")
    checks.append(CheckResult(
        "divisibility", not bad_div,
        "each d_j divides its column of the intersection matrix" if not bad_div else "; ".join(bad_div)))

    bad_unit = []
    for v in g.vertices:
        if v.d % ell == 0:
            bad_unit.append(f"{ell} divides d={v.d} of {v.id!r}")
        if v.residue_degree % ell == 0:
            bad_unit.append(f"{ell} divides residue degree {v.residue_degree} of {v.id!r}")
    checks.append(CheckResult(
        "ell_coprime", not bad_unit,
        f"{ell} is coprime to every d_j and residue degree" if not bad_unit else "; ".join(bad_unit)))

    forest = is_forest(g)
    checks.append(CheckResult(
        "forest", forest,
        "no cycles or multiple intersections" if forest
        else "cycle found (an edge of multiplicity >= 2 counts as a cycle)"))

    return ValidationReport(tuple(checks))


def gen_ade(family: str, n: int) -> DualGraph:
    """Standard ADE test catalog: Dynkin-diagram adjacency, every
    self-intersection -2, every multiplicity and degree gcd 1."""
    if family == "A":
        if n < 1:
            raise UnsupportedIndexError(f"A_n requires n >= 1, got {n}")
        edges = [(i, i + 1) for i in range(1, n)]
    elif family == "D":
        if n < 4:
            raise UnsupportedIndexError(f"D_n requires n >= 4, got {n}")
        edges = [(i, i + 1) for i in range(1, n - 2)] + [(n - 2, n - 1), (n - 2, n)]
    elif family == "E":
        if n not in (6, 7, 8):
            raise UnsupportedIndexError(f"E_n requires n in 6..8, got {n}")
        edges = [(i, i + 1) for i in range(1, n - 1)] + [(3, n)]
    else:
        raise UnsupportedIndexError(f"unknown family {family!r} (expected A, D or E)")
    return DualGraph(
        name=f"{family}{n}",
        vertices=tuple(Vertex(f"v{i}", -2) for i in range(1, n + 1)),
        edges=tuple(Edge(f"v{i}", f"v{j}") for i, j in edges),
    )


def hj_expansion(k: int, a: int) -> list[int]:
    """Continued-fraction expansion k/a = b1 - 1/(b2 - 1/(...)), all bi >= 2."""
    if k < 2 or not 1 <= a < k:
        raise ValueError(f"need k >= 2 and 1 <= a < k, got k={k}, a={a}")
    if gcd(a, k) != 1:
        raise NotCoprimeError(f"gcd({a}, {k}) = {gcd(a, k)} != 1")
    bs = []
    num, den = k, a
    while den > 0:
        b = -(-num // den)
        bs.append(b)
        num, den = den, b * den - num
    return bs


def gen_hj(k: int, a: int) -> DualGraph:
    """Chain of rational curves with self-intersections read off the
    continued-fraction expansion of k/a (the cyclic-quotient test family)."""
    bs = hj_expansion(k, a)
    return DualGraph(
        name=f"HJ-{k}-{a}",
        vertices=tuple(Vertex(f"v{i}", -b) for i, b in enumerate(bs, start=1)),
        edges=tuple(Edge(f"v{i}", f"v{i + 1}") for i in range(1, len(bs))),
    )


# ---------------------------------------------------------------------------
# JSON format (bit-exact contract; unknown keys rejected)

_VERTEX_KEYS = {"id", "self", "d", "residue_degree"}
_EDGE_KEYS = {"a", "b", "m"}


def _need_int(obj: dict, key: str, where: str, default: int | None = None) -> int:
    if key not in obj:
        if default is None:
            raise GraphFormatError(f"{where}: missing key {key!r}")
        return default
    val = obj[key]
    if type(val) is not int:
        raise GraphFormatError(f"{where}: key {key!r} must be an integer, got {val!r}")
    return val


def _need_str(obj: dict, key: str, where: str) -> str:
    if key not in obj:
        raise GraphFormatError(f"{where}: missing key {key!r}")
    val = obj[key]
    if not isinstance(val, str):
        raise GraphFormatError(f"{where}: key {key!r} must be a string, got {val!r}")
    return val


def _reject_unknown(obj: dict, allowed: set[str], where: str) -> None:
    unknown = set(obj) - allowed
    if unknown:
        raise GraphFormatError(f"{where}: unknown keys {sorted(unknown)}")


def graph_from_obj(obj) -> DualGraph:
    if not isinstance(obj, dict):
        raise GraphFormatError("graph must be a JSON object")
    _reject_unknown(obj, {"name", "vertices", "edges"}, "graph")
    name = _need_str(obj, "name", "graph")
    vs = obj.get("vertices")
    es = obj.get("edges")
    if not isinstance(vs, list) or not isinstance(es, list):
        raise GraphFormatError("graph: 'vertices' and 'edges' must be arrays")
    vertices = []
    for i, vobj in enumerate(vs):
        where = f"vertices[{i}]"
        if not isinstance(vobj, dict):
            raise GraphFormatError(f"{where}: must be an object")
        _reject_unknown(vobj, _VERTEX_KEYS, where)
        vertices.append(Vertex(
            id=_need_str(vobj, "id", where),
            self_intersection=_need_int(vobj, "self", where),
            d=_need_int(vobj, "d", where, default=1),
            residue_degree=_need_int(vobj, "residue_degree", where, default=1),
        ))
    edges = []
    for i, eobj in enumerate(es):
        where = f"edges[{i}]"
        if not isinstance(eobj, dict):
            raise GraphFormatError(f"{where}: must be an object")
        _reject_unknown(eobj, _EDGE_KEYS, where)
        edges.append(Edge(
            a=_need_str(eobj, "a", where),
            b=_need_str(eobj, "b", where),
            m=_need_int(eobj, "m", where, default=1),
        ))
    return DualGraph(name=name, vertices=tuple(vertices), edges=tuple(edges))


def graph_to_obj(g: DualGraph) -> dict:
    """Explicit form with all keys present, in stable order."""
    return {
        "name": g.name,
        "vertices": [
            {"id": v.id, "self": v.self_intersection, "d": v.d, "residue_degree": v.residue_degree}
            for v in g.vertices
        ],
        "edges": [{"a": e.a, "b": e.b, "m": e.m} for e in g.edges],
    }


def parse_graph(text: str) -> DualGraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc}") from exc
    return graph_from_obj(obj)


def serialize_graph(g: DualGraph) -> str:
    return json.dumps(graph_to_obj(g), indent=2, ensure_ascii=False) + "\n"


def load_graph(path: str | Path) -> DualGraph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


# ---------------------------------------------------------------------------
# Shipped catalog

CATALOG_ENV = "RESGRAPH_CATALOG_DIR"


def _catalog_root():
    override = os.environ.get(CATALOG_ENV)
    if override:
        return Path(override)
    return resources.files(__package__) / "catalog"


def catalog_names() -> list[str]:
    root = _catalog_root()
    if not root.is_dir():
        return []
    return sorted(entry.name[:-5] for entry in root.iterdir() if entry.name.endswith(".json"))


def load_catalog_graph(name: str) -> DualGraph:
    entry = _catalog_root() / f"{name}.json"
    if not entry.is_file():
        raise FileNotFoundError(f"no catalog graph named {name!r} (have: {', '.join(catalog_names())})")
    return parse_graph(entry.read_text(encoding="utf-8"))


def resolve_graph(spec: str) -> DualGraph:
    """Resolve ``catalog:NAME`` against the shipped catalog, anything else
    as a filesystem path."""
    if spec.startswith("catalog:"):
        return load_catalog_graph(spec[len("catalog:"):])
    return load_graph(spec)
