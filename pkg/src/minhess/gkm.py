"""
GKM graphs of the flag variety and of X_H(e_theta).

Vertices are permutations; ``w`` and ``w s_r`` are joined for every positive
root ``r``, and the edge carries the weight ``w r = t_{w(i)} - t_{w(j)}``, stored
with its sign normalised so the smaller index comes first.  The graph of
X_H(e_theta) is the full subgraph on its fixed points.

Cochains assign a polynomial in ``t1..tn`` to each vertex.  Graded dimensions
of the space of GKM-compatible cochains are computed over the coefficient ring
of the maximal torus of SL_n, realised as the polynomials in the differences
``t_i - t_n`` (rank ``n - 1``); ``torus="gl"`` uses all of ``Q[t1..tn]``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Mapping, NamedTuple

from . import linalg
from .betti import fixed_points
from .hess import HessFn
from .poly import LinearForm, MultiPoly
from .rootsys import Root, positive_roots
from .symgroup import (
    Permutation,
    act_on_root,
    check_guard,
    enumerate_perms,
    format_perm,
    right_multiply_reflection,
    validate_perm,
)

__all__ = [
    "GkmEdge",
    "GkmGraph",
    "CochainCheck",
    "DEFAULT_DEGREE_CAP",
    "flag_gkm_graph",
    "hess_gkm_graph",
    "induced_subgraph",
    "check_cochain",
    "cochain_dimension",
    "coefficient_basis",
    "export",
    "from_json",
]

DEFAULT_DEGREE_CAP = 4


class GkmEdge(NamedTuple):
    u: Permutation
    v: Permutation
    label: LinearForm
    root: Root


def _canonical_label(w: Permutation, r: Root) -> LinearForm:
    a, b = act_on_root(w, r)
    return LinearForm(a, b) if a < b else LinearForm(b, a)


def _make_edge(w: Permutation, r: Root) -> GkmEdge:
    v = right_multiply_reflection(w, r)
    label = _canonical_label(w, r)
    # w r and (w s_r) r differ only by sign
    assert _canonical_label(v, r) == label
    u, v = (w, v) if w < v else (v, w)
    return GkmEdge(u, v, label, r)


@dataclass(frozen=True)
class GkmGraph:
    n: int
    vertices: tuple[Permutation, ...]
    edges: tuple[GkmEdge, ...]

    def neighbours(self, w: Permutation) -> list[tuple[Permutation, LinearForm]]:
        out = []
        for e in self.edges:
            if e.u == w:
                out.append((e.v, e.label))
            elif e.v == w:
                out.append((e.u, e.label))
        return out

    def edge_set(self) -> set[tuple[Permutation, Permutation, tuple[int, int]]]:
        return {(e.u, e.v, (e.label.a, e.label.b)) for e in self.edges}

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GkmGraph)
            and self.n == other.n
            and self.vertices == other.vertices
            and self.edge_set() == other.edge_set()
        )

    def __hash__(self) -> int:
        return hash((self.n, self.vertices, frozenset(self.edge_set())))


def flag_gkm_graph(n: int) -> GkmGraph:
    check_guard(n)
    verts = tuple(enumerate_perms(n))
    edges = []
    for w in verts:
        for r in positive_roots(n):
            e = _make_edge(w, r)
            if e.u == w:
                edges.append(e)
    edges.sort(key=lambda e: (e.u, e.v))
    return GkmGraph(n, verts, tuple(edges))


def induced_subgraph(g: GkmGraph, keep) -> GkmGraph:
    keep = set(keep)
    verts = tuple(w for w in g.vertices if w in keep)
    edges = tuple(e for e in g.edges if e.u in keep and e.v in keep)
    return GkmGraph(g.n, verts, edges)


def hess_gkm_graph(h: HessFn) -> GkmGraph:
    return induced_subgraph(flag_gkm_graph(h.n), fixed_points(h).perms)


@dataclass(frozen=True)
class CochainCheck:
    ok: bool
    witness: GkmEdge | None = None

    def __bool__(self) -> bool:
        return self.ok


def check_cochain(g: GkmGraph, cochain: Mapping[Permutation, MultiPoly]) -> CochainCheck:
    """Every edge label ``t_a - t_b`` must divide ``f_u - f_v``."""
    missing = [w for w in g.vertices if w not in cochain]
    if missing:
        raise KeyError(f"cochain has no value at {format_perm(missing[0])}")
    for e in g.edges:
        diff = cochain[e.u] - cochain[e.v]
        if not diff.substitute_equal(e.label).is_zero():
            return CochainCheck(False, e)
    return CochainCheck(True)


def coefficient_basis(n: int, d: int, torus: str = "sl") -> list[MultiPoly]:
    """
    Basis of the degree-``d`` part of the equivariant coefficient ring.

    ``"sl"``: monomials in ``t_i - t_n`` for ``i < n``.  ``"gl"``: monomials in
    ``t1..tn``.
    """
    t = MultiPoly.variables(n)
    if torus == "sl":
        gens = [t[i] - t[n - 1] for i in range(n - 1)]
    elif torus == "gl":
        gens = t
    else:
        raise ValueError(f"unknown torus {torus!r}")
    out = []
    for combo in combinations_with_replacement(range(len(gens)), d):
        p = MultiPoly.constant(1, n)
        for k in combo:
            p = p * gens[k]
        out.append(p)
    return out


def cochain_dimension(
    g: GkmGraph, d: int, cap: int = DEFAULT_DEGREE_CAP, torus: str = "sl"
) -> int:
    """
    Dimension over Q of the homogeneous degree-``d`` GKM cochains.

    The unknowns are the coordinates of each ``f_w`` in :func:`coefficient_basis`;
    every edge contributes the linear conditions ``substitute_equal(f_u - f_v) = 0``.
    """
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if d > cap:
        raise ValueError(f"degree {d} exceeds cap {cap}")
    basis = coefficient_basis(g.n, d, torus)
    subst: dict[LinearForm, list[MultiPoly]] = {}
    rows = []
    for e in g.edges:
        images = subst.get(e.label)
        if images is None:
            images = subst[e.label] = [b.substitute_equal(e.label) for b in basis]
        by_mono: dict[tuple, dict] = {}
        for k, img in enumerate(images):
            for mono, c in img.terms.items():
                row = by_mono.setdefault(mono, {})
                row[(e.u, k)] = c
                row[(e.v, k)] = -c
        rows.extend(by_mono.values())
    return len(g.vertices) * len(basis) - linalg.rank(rows)


def to_json(g: GkmGraph) -> dict:
    return {
        "n": g.n,
        "vertices": [list(w) for w in g.vertices],
        "edges": [
            {"u": list(e.u), "v": list(e.v), "label": [e.label.a, e.label.b]} for e in g.edges
        ],
    }


def from_json(data: dict | str) -> GkmGraph:
    if isinstance(data, str):
        data = json.loads(data)
    verts = tuple(validate_perm(w) for w in data["vertices"])
    n = data.get("n", len(verts[0]) if verts else 0)
    edges = []
    for item in data["edges"]:
        u, v = validate_perm(item["u"]), validate_perm(item["v"])
        diff = [k + 1 for k in range(n) if u[k] != v[k]]
        if len(diff) != 2:
            raise ValueError(f"{u} and {v} do not differ by a reflection")
        e = _make_edge(u, Root(*diff))
        if [e.label.a, e.label.b] != list(item["label"]):
            raise ValueError(f"label {item['label']} inconsistent with edge {u} -- {v}")
        edges.append(e)
    return GkmGraph(n, verts, tuple(edges))


def to_dot(g: GkmGraph, name: str = "gkm") -> str:
    lines = [f'graph "{name}" {{', "  node [shape=plaintext];"]
    for w in g.vertices:
        lines.append(f'  "{format_perm(w)}";')
    for e in g.edges:
        lines.append(
            f'  "{format_perm(e.u)}" -- "{format_perm(e.v)}" [label="{e.label.to_text()}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def export(g: GkmGraph, format: str = "dot") -> str:
    if format == "dot":
        return to_dot(g)
    if format == "json":
        return json.dumps(to_json(g), indent=2) + "\n"
    raise ValueError(f"unknown export format {format!r}")
