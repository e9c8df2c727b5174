"""From a candidate graph of linear syzygies to isotone maps.

For each index i the conditions (G1)-(G4) are checked on the poset
P_i = (points, >=_i); when they hold, the chain-word construction labels
the chains C^p of P_i in order and produces X_i.  Adjacency always means
"joined by an edge of the graph".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .lattice import (
    Exponent,
    chain_decomposition,
    children_i,
    companion,
    edge_between,
    enumerate_points,
    is_boundary_edge,
    parents_i,
    shift,
    support,
)
from .polarization import IsotoneFamily, SyzygyGraph, isotone_maps, ls_edges, skeleton_edges


@dataclass
class Diagnostic:
    condition: str  # G1 | G2 | G3 | G4 | BOUNDARY | STAR
    index: int | None
    witness: dict = field(default_factory=dict)
    message: str = ""

    def as_dict(self) -> dict:
        return {
            "condition": self.condition,
            "index": None if self.index is None else self.index + 1,
            "witness": self.witness,
            "humanReadable": self.message,
        }


class InferenceError(ValueError):
    def __init__(self, diagnostics: list[Diagnostic]):
        super().__init__("; ".join(d.message for d in diagnostics[:3]))
        self.diagnostics = diagnostics


def _adj(graph: SyzygyGraph, a: Exponent, b: Exponent) -> bool:
    e = edge_between(a, b)
    return e is not None and e in graph.edges


def _components(graph: SyzygyGraph, verts: list[Exponent]) -> list[list[Exponent]]:
    comps: list[list[Exponent]] = []
    seen = set()
    for v in verts:
        if v in seen:
            continue
        comp, stack = [], [v]
        seen.add(v)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in verts:
                if y not in seen and _adj(graph, x, y):
                    seen.add(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def _g1(graph, i, pts) -> Iterable[Diagnostic]:
    for b in pts:
        k = b[i]
        if k == 0:
            continue
        kids = children_i(b, i)
        comps = _components(graph, kids)
        if len(comps) > k:
            yield Diagnostic("G1", i, {"point": b, "components": comps},
                             f"children of {b} in P_{i + 1} form {len(comps)} components, more than its rank {k}")
        for comp in comps:
            for x, y in combinations(comp, 2):
                if not _adj(graph, x, y):
                    yield Diagnostic("G1", i, {"point": b, "pair": [x, y]},
                                     f"a component among the children of {b} is not complete: {x} and {y} are not adjacent")
                    break
            else:
                continue
            break


def _g2(graph, i, pts) -> Iterable[Diagnostic]:
    # three pairwise non-adjacent parents of a common element
    for a in pts:
        ps = parents_i(a, i)
        for trio in combinations(ps, 3):
            if not any(_adj(graph, x, y) for x, y in combinations(trio, 2)):
                yield Diagnostic("G2", i, {"point": a, "parents": list(trio)},
                                 f"{a} has three pairwise non-adjacent parents {list(trio)}")
                break


def _g3(graph, i, pts) -> Iterable[Diagnostic]:
    # f, g in distinct components of the children of c; any two elements
    # covering both (resp. covered by both) must be adjacent
    for c in pts:
        if c[i] == 0:
            continue
        comps = _components(graph, children_i(c, i))
        for c1, c2 in combinations(comps, 2):
            for f in c1:
                for g in c2:
                    ups = set(parents_i(f, i)) & set(parents_i(g, i))
                    downs = set(children_i(f, i)) & set(children_i(g, i))
                    for group, word in ((ups, "cover"), (downs, "are covered by")):
                        for a, b in combinations(sorted(group), 2):
                            if not _adj(graph, a, b):
                                yield Diagnostic("G3", i, {"pair": [a, b], "separated": [f, g]},
                                                 f"{a} and {b} both {word} {f} and {g} but are not adjacent")


def _g4(graph, i, pts) -> Iterable[Diagnostic]:
    for f in pts:
        if f[i] == 0:
            continue
        for g in pts:
            if g == f or g[i] != f[i] or not _adj(graph, f, g):
                continue
            kf, kg = children_i(f, i), children_i(g, i)
            for dd in set(kf) & set(kg):
                for a in kf:
                    if a == dd or not _adj(graph, dd, a):
                        continue
                    for b in kg:
                        if b in (dd, a) or not _adj(graph, a, b):
                            continue
                        if not _adj(graph, dd, b):
                            yield Diagnostic("G4", i, {"f": f, "g": g, "a": a, "b": b, "d": dd},
                                             f"{dd} ~ {a} ~ {b} under adjacent parents {f}, {g}, but {dd} and {b} are not adjacent")


def check_boundary(graph: SyzygyGraph) -> list[Diagnostic]:
    out = []
    for e in skeleton_edges(graph.n, graph.d, graph.u):
        if is_boundary_edge(e) and e not in graph.edges:
            out.append(Diagnostic("BOUNDARY", None, {"edge": e},
                                  f"boundary edge ({e.apex}; {e.i + 1}, {e.j + 1}) is missing"))
    return out


def check_conditions(graph: SyzygyGraph, i: int | None = None) -> list[Diagnostic]:
    """All violated conditions for index i (or for every index)."""
    if graph.n < 2:
        raise ValueError("isotone inference needs n >= 2")
    if graph.u is not None:
        raise ValueError("inference is only defined for the full power")
    pts = enumerate_points(graph.n, graph.d)
    out = check_boundary(graph)
    for idx in range(graph.n) if i is None else [i]:
        for cond in (_g1, _g2, _g3, _g4):
            out.extend(cond(graph, idx, pts))
    return out


# -- the construction ------------------------------------------------------


def chain_words(graph: SyzygyGraph, i: int) -> dict:
    """sigma^p for every chain C^p of P_i, as tuples of labels 1..d."""
    n, d = graph.n, graph.d
    j = companion(i)
    words: dict = {}
    for info in chain_decomposition(n, d, i):
        p = info.p
        r = sum(p)
        if r == 0:
            words[p] = tuple(range(1, d + 1))
            continue
        m = support(p)[0]
        prev = shift(p, minus=m)
        sigma = list(words[prev])
        for k in range(1, d - r + 1):
            here = info.elements[k]
            there = shift(shift(here, minus=m), plus=j)
            if not _adj(graph, here, there):
                sigma[k - 1], sigma[k] = sigma[k], sigma[k - 1]
        words[p] = tuple(sigma)
    return words


def labels_from_words(n: int, d: int, i: int, words: dict) -> dict:
    out = {}
    for info in chain_decomposition(n, d, i):
        sigma = words[info.p]
        for k, a in enumerate(info.elements):
            out[a] = frozenset(sigma[:k])
    return out


def infer_family(graph: SyzygyGraph, check: bool = True) -> IsotoneFamily:
    if check:
        diags = check_conditions(graph)
        if diags:
            raise InferenceError(diags)
    n, d = graph.n, graph.d
    maps = [labels_from_words(n, d, i, chain_words(graph, i)) for i in range(n)]
    tables = {a: tuple(m[a] for m in maps) for a in enumerate_points(n, d)}
    chi = IsotoneFamily(n, d, tables)
    chi.validate()
    ok, witness = verify_star(graph, chi)
    if not ok:
        raise InferenceError([Diagnostic("STAR", None, {"edge": witness},
                                         f"constructed maps disagree with the graph at {witness}")])
    return chi


def verify_star(graph: SyzygyGraph, chi: IsotoneFamily):
    """(True, None) when the linear syzygy edges of chi are exactly the
    graph's edges, else (False, first differing edge)."""
    got = ls_edges(chi).edges
    diff = sorted(got ^ graph.edges)
    return (not diff, diff[0] if diff else None)


def per_index_realizable(graph: SyzygyGraph, i: int) -> bool:
    """Brute force: is there a rank-preserving isotone X_i whose equalities
    on edges avoiding i are exactly the graph's edges?"""
    want = {e for e in skeleton_edges(graph.n, graph.d) if i not in (e.i, e.j)}
    for m in isotone_maps(graph.n, graph.d, i):
        if all((m[e.endpoints[0]] == m[e.endpoints[1]]) == (e in graph.edges) for e in want):
            return True
    return False


def random_graph(n: int, d: int, rng, keep: float = 0.7) -> SyzygyGraph:
    """Boundary edges plus each interior edge independently with probability
    ``keep``.  Not conditioned on (G1)-(G4)."""
    edges = [e for e in skeleton_edges(n, d) if is_boundary_edge(e) or rng.random() < keep]
    return SyzygyGraph(n, d, frozenset(edges))
