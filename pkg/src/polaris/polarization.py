"""Isotone families, linear syzygy edges, and the criteria deciding whether
a family polarizes m^d (or the restricted power m^d(<= u)).

Labels of the Boolean lattice on [d] are the integers 1..d; variable and
coordinate indices are 0-based.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .algebra import Echelon
from .lattice import (
    DownEdge,
    Exponent,
    divides,
    down_graph,
    enumerate_points,
    leq_i,
    shift,
    support,
)
from .tableaux import HookTableau, standard_basis, straighten


class FamilyError(ValueError):
    """The tables do not form a rank-preserving isotone family."""


class CriterionDisagreement(RuntimeError):
    """Two criteria that must agree did not; always an implementation bug."""

    def __init__(self, verdict: dict, state: dict):
        super().__init__(f"criteria disagree: {verdict}")
        self.verdict = verdict
        self.state = state


# -- syzygy graphs ---------------------------------------------------------


@dataclass(frozen=True)
class SyzygyGraph:
    n: int
    d: int
    edges: frozenset
    u: Exponent | None = None

    def __post_init__(self):
        for e in self.edges:
            if len(e.apex) != self.n or sum(e.apex) != self.d + 1:
                raise ValueError(f"edge {e} does not live over ({self.n}, {self.d})")
            if not (e.i < e.j and e.apex[e.i] >= 1 and e.apex[e.j] >= 1):
                raise ValueError(f"malformed edge {e}")

    def __contains__(self, e) -> bool:
        return e in self.edges

    def adjacent(self, a: Exponent, b: Exponent) -> bool:
        from .lattice import edge_between

        e = edge_between(a, b)
        return e is not None and e in self.edges


def skeleton_edges(n: int, d: int, u: Exponent | None = None) -> list[DownEdge]:
    """All edges of the one-skeleton, or of its restriction to mdeg <= u.

    An edge (c; i, j) is the cell C_{c - e_i - e_j, {i, j}} with multidegree c.
    """
    out = []
    for c in enumerate_points(n, d + 1):
        if u is not None and not divides(c, u):
            continue
        out.extend(down_graph(c)[1])
    return out


def full_graph(n: int, d: int, u: Exponent | None = None) -> SyzygyGraph:
    return SyzygyGraph(n, d, frozenset(skeleton_edges(n, d, u)), u)


def l_complex_graph(n: int, d: int) -> SyzygyGraph:
    """Edges whose theta-label is a standard tableau, i.e. the linear
    syzygies of the presentation step of the L-complex."""
    from .tableaux import is_standard

    edges = [e for e in skeleton_edges(n, d) if is_standard(theta(e.apex, e.i, e.j))]
    return SyzygyGraph(n, d, frozenset(edges))


def apexes(n: int, d: int, u: Exponent | None = None) -> list[Exponent]:
    return [c for c in enumerate_points(n, d + 1) if u is None or divides(c, u)]


# -- isotone families ------------------------------------------------------


@dataclass
class IsotoneFamily:
    """For every point a, ``tables[a][i]`` is X_i(a), a frozenset of labels."""

    n: int
    d: int
    tables: dict = field(default_factory=dict)
    u: Exponent | None = None

    def X(self, i: int, a: Exponent) -> frozenset:
        return self.tables[a][i]

    @property
    def points(self) -> list[Exponent]:
        return enumerate_points(self.n, self.d, self.u)

    def key(self):
        """Hashable canonical form."""
        return tuple((a, tuple(tuple(sorted(s)) for s in self.tables[a])) for a in self.points)

    def validate(self) -> "IsotoneFamily":
        pts = self.points
        if set(self.tables) != set(pts):
            missing = sorted(set(pts) - set(self.tables))
            extra = sorted(set(self.tables) - set(pts))
            raise FamilyError(f"table domain mismatch: missing {missing}, unexpected {extra}")
        labels = set(range(1, self.d + 1))
        for a in pts:
            sets = self.tables[a]
            if len(sets) != self.n:
                raise FamilyError(f"{a}: expected {self.n} sets, got {len(sets)}")
            for i, s in enumerate(sets):
                if not s <= labels:
                    raise FamilyError(f"X_{i + 1}({a}) = {sorted(s)} is not a subset of [{self.d}]")
                if len(s) != a[i]:
                    raise FamilyError(f"X_{i + 1}({a}) has rank {len(s)}, expected {a[i]}")
        for i in range(self.n):
            for a in pts:
                for b in pts:
                    if a != b and leq_i(a, b, i) and not self.X(i, a) <= self.X(i, b):
                        raise FamilyError(
                            f"X_{i + 1} is not isotone: {b} >=_{i + 1} {a} but "
                            f"{sorted(self.X(i, b))} does not contain {sorted(self.X(i, a))}"
                        )
        return self


def make_family(n: int, d: int, tables: Mapping, u: Sequence[int] | None = None) -> IsotoneFamily:
    norm = {tuple(a): tuple(frozenset(s) for s in sets) for a, sets in tables.items()}
    return IsotoneFamily(n, d, norm, tuple(u) if u is not None else None).validate()


def standard_family(n: int, d: int, u: Sequence[int] | None = None) -> IsotoneFamily:
    """X_i(a) = {1, ..., a_i}."""
    u = tuple(u) if u is not None else None
    tables = {a: tuple(frozenset(range(1, x + 1)) for x in a) for a in enumerate_points(n, d, u)}
    return IsotoneFamily(n, d, tables, u)


def random_isotone_map(n: int, d: int, i: int, rng: random.Random, u: Exponent | None = None) -> dict:
    """A uniformly driven random rank-preserving isotone X_i, by backtracking.

    Points are labelled in increasing rank; X_i(b) must contain the labels
    of all children of b, so the only way to fail is a union that is too big.
    """
    pts = sorted(enumerate_points(n, d, u), key=lambda a: a[i])
    below = {b: [a for a in pts if a != b and a[i] == b[i] - 1 and leq_i(a, b, i)] for b in pts}
    labels = list(range(1, d + 1))
    out: dict = {}

    def options(b):
        base = frozenset().union(*(out[a] for a in below[b])) if below[b] else frozenset()
        need = b[i] - len(base)
        if need < 0:
            return []
        rest = [x for x in labels if x not in base]
        opts = [base | frozenset(extra) for extra in combinations(rest, need)]
        rng.shuffle(opts)
        return opts

    def place(k: int) -> bool:
        if k == len(pts):
            return True
        b = pts[k]
        for s in options(b):
            out[b] = s
            if place(k + 1):
                return True
        out.pop(b, None)
        return False

    if not place(0):  # pragma: no cover - the standard labels always exist
        raise RuntimeError("no isotone map found")
    return out


def random_family(n: int, d: int, rng: random.Random, u: Sequence[int] | None = None) -> IsotoneFamily:
    u = tuple(u) if u is not None else None
    maps = [random_isotone_map(n, d, i, rng, u) for i in range(n)]
    tables = {a: tuple(m[a] for m in maps) for a in enumerate_points(n, d, u)}
    return IsotoneFamily(n, d, tables, u).validate()


# -- the polarized ideal ---------------------------------------------------


def variable_index(i: int, j: int, d: int) -> int:
    """Position of x_{i,j} (0-based i, label j in 1..d) in the flat grid."""
    return i * d + (j - 1)


def generator(chi: IsotoneFamily, a: Exponent) -> frozenset:
    """m(a) as the set of its variables (i, j)."""
    return frozenset((i, j) for i, s in enumerate(chi.tables[a]) for j in s)


@dataclass(frozen=True)
class PolarizedIdeal:
    n: int
    d: int
    generators: tuple  # tuple of (point, frozenset of (i, j))

    def exponents(self) -> list[Exponent]:
        """Squarefree exponent vectors over the n*d grid variables."""
        out = []
        for _, g in self.generators:
            v = [0] * (self.n * self.d)
            for i, j in g:
                v[variable_index(i, j, self.d)] = 1
            out.append(tuple(v))
        return out

    def depolarize(self) -> list[Exponent]:
        out = []
        for _, g in self.generators:
            v = [0] * self.n
            for i, _j in g:
                v[i] += 1
            out.append(tuple(v))
        return out


def realize_ideal(chi: IsotoneFamily) -> PolarizedIdeal:
    for a in chi.points:
        for i, s in enumerate(chi.tables[a]):
            if len(s) != a[i]:
                raise FamilyError(f"rank violation at X_{i + 1}({a})")
    ideal = PolarizedIdeal(chi.n, chi.d, tuple((a, generator(chi, a)) for a in chi.points))
    if ideal.depolarize() != chi.points:
        raise FamilyError("depolarization does not recover the generators")
    return ideal


# -- linear syzygy edges ---------------------------------------------------


def is_ls_edge(chi: IsotoneFamily, e: DownEdge) -> bool:
    a, b = e.endpoints
    return all(chi.X(p, a) == chi.X(p, b) for p in range(chi.n) if p not in (e.i, e.j))


def is_ls_edge_monomial(chi: IsotoneFamily, e: DownEdge) -> bool:
    """The two generators share a factor of degree d - 1."""
    a, b = e.endpoints
    return len(generator(chi, a) & generator(chi, b)) == chi.d - 1


def ls_edges(chi: IsotoneFamily) -> SyzygyGraph:
    edges = set()
    for e in skeleton_edges(chi.n, chi.d, chi.u):
        by_table = is_ls_edge(chi, e)
        if by_table != is_ls_edge_monomial(chi, e):
            raise CriterionDisagreement({"edge": e, "table": by_table}, {"family": chi})
        if by_table:
            edges.add(e)
    return SyzygyGraph(chi.n, chi.d, frozenset(edges), chi.u)


def _connected(vertices: Iterable, edges: Iterable[tuple]) -> bool:
    parent = {v: v for v in vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for x, y in edges:
        parent[find(x)] = find(y)
    return len({find(v) for v in parent}) <= 1


def spanning_tree_check(graph: SyzygyGraph):
    """(True, None), or (False, apex) for the first down-graph that the
    edges of ``graph`` fail to connect."""
    for c in apexes(graph.n, graph.d, graph.u):
        verts = support(c)
        inside = [(e.i, e.j) for e in down_graph(c)[1] if e in graph.edges]
        if not _connected(verts, inside):
            return False, c
    return True, None


def r_ls_edges(chi: IsotoneFamily, c: Exponent, R: Sequence[int]) -> list[DownEdge]:
    R = tuple(sorted(R))
    if not set(R) <= set(support(c)):
        raise ValueError(f"{R} is not contained in the support of {c}")
    out = []
    for r, s in combinations(R, 2):
        a, b = shift(c, minus=r), shift(c, minus=s)
        if all(chi.X(p, a) == chi.X(p, b) for p in R if p not in (r, s)):
            out.append(DownEdge(tuple(c), r, s))
    return out


def r_ls_check(chi: IsotoneFamily, c: Exponent, R: Sequence[int]) -> bool:
    edges = r_ls_edges(chi, c, R)
    return _connected(tuple(sorted(R)), [(e.i, e.j) for e in edges])


# -- the dictionary and the tableau criterion -----------------------------


def psi(a: Exponent) -> HookTableau:
    """f^a, a row-only tableau."""
    return HookTableau((), tuple(a))


def omega(c: Exponent, R: Sequence[int] | None = None) -> HookTableau:
    R = tuple(sorted(support(c) if R is None else R))
    if not R or not set(R) <= set(support(c)):
        raise ValueError(f"{R} must be a non-empty subset of the support of {c}")
    row = list(c)
    for r in R:
        row[r] -= 1
    return HookTableau(R, tuple(row))


def theta(c: Exponent, i: int, j: int) -> HookTableau:
    """f_i ^ f_j (x) f^{c - e_i - e_j}."""
    if i == j:
        raise ValueError("theta needs two distinct indices")
    i, j = min(i, j), max(i, j)
    if c[i] < 1 or c[j] < 1:
        raise ValueError(f"{i}, {j} not in the support of {c}")
    return HookTableau((i, j), shift(shift(c, minus=i), minus=j))


def dictionary(kind: str, *args):
    table = {"psi": psi, "omega": omega, "theta": theta}
    if kind not in table:
        raise ValueError(f"unknown dictionary map {kind!r}")
    return table[kind](*args)


def l1_basis(n: int, d: int, u: Exponent | None = None) -> list[HookTableau]:
    basis = standard_basis(1, d, n)
    if u is not None:
        basis = [t for t in basis if divides(t.mdeg, u)]
    return basis


def tab_span_rank(n: int, d: int, edges: Iterable[DownEdge], u: Exponent | None = None):
    """(rank of the straightened theta-labels, rank of L^1_d restricted to u)."""
    basis = l1_basis(n, d, u)
    index = {t: k for k, t in enumerate(basis)}
    ech = Echelon()
    for e in edges:
        row = {}
        for t, v in straighten(theta(e.apex, e.i, e.j)).items():
            row[index[t]] = v
        ech.add(row)
    return ech.rank, len(basis)


def tab_spanning_check(chi: IsotoneFamily) -> dict:
    r, total = tab_span_rank(chi.n, chi.d, ls_edges(chi).edges, chi.u)
    return {"spans": r == total, "rank": r, "module_rank": total}


# -- verdict ---------------------------------------------------------------


def is_polarization(chi: IsotoneFamily, cross_check: bool = False, oracle: bool | None = None) -> dict:
    """Spanning-tree verdict, optionally cross-checked against the tableau
    criterion and the Betti oracle.  Disagreement raises."""
    chi.validate()
    graph = ls_edges(chi)
    ok, witness = spanning_tree_check(graph)
    verdict = {"spanningTree": ok}
    if witness is not None:
        verdict["failingApex"] = list(witness)
    if cross_check:
        verdict["tabSpan"] = tab_spanning_check(chi)["spans"]
    if oracle if oracle is not None else cross_check:
        from .oracle import verify_polarization_bruteforce

        verdict["oracle"] = verify_polarization_bruteforce(chi)
    values = {v for k, v in verdict.items() if k in ("spanningTree", "tabSpan", "oracle")}
    if len(values) > 1:
        raise CriterionDisagreement(verdict, {"family": chi, "edges": sorted(graph.edges)})
    return verdict


# -- restricted powers -----------------------------------------------------


def restricted_power_setup(n: int, d: int, u: Sequence[int]) -> dict:
    """Generators of m^d(<= u) together with the bounded complexes."""
    from .hypersimplex import hypersimplex_complex, restrict_leq_m
    from .morse import l_matching, morse_complex
    from .tableaux import build_l_complex

    u = tuple(u)
    if len(u) != n or any(x < 0 for x in u):
        raise ValueError(f"bound {u} must be a vector of {n} non-negative integers")
    gens = enumerate_points(n, d, u)
    if not gens:
        return {"empty": True, "generators": [], "u": u}
    full = hypersimplex_complex(n, d)
    bounded = hypersimplex_complex(n, d, bound=u)
    morse = restrict_leq_m(morse_complex(full, l_matching(n, d), check=False), u)
    lcx = build_l_complex(n, d, bound=u)
    return {
        "empty": False,
        "u": u,
        "generators": gens,
        "hypersimplex": bounded,
        "morse": morse,
        "lcomplex": lcx,
    }


def isotone_maps(n: int, d: int, i: int, u: Exponent | None = None, canonical: bool = True):
    """Every rank-preserving isotone X_i, as dicts point -> frozenset.

    With ``canonical`` the base chain C^0 is labelled by initial segments
    {1..k}; every map is a relabelling of exactly one canonical map, since
    permutations of [d] act freely on labelled maximal chains.
    """
    from .lattice import chain_element

    pts = sorted(enumerate_points(n, d, u), key=lambda a: a[i])
    below = {b: [a for a in pts if a != b and a[i] == b[i] - 1 and leq_i(a, b, i)] for b in pts}
    base_chain = set()
    if canonical and n >= 2:
        base_chain = {chain_element(n, d, i, (0,) * n, k) for k in range(d + 1)}
    out: dict = {}

    def place(k: int):
        if k == len(pts):
            yield dict(out)
            return
        b = pts[k]
        base = frozenset().union(*(out[a] for a in below[b])) if below[b] else frozenset()
        need = b[i] - len(base)
        if need < 0:
            return
        if b in base_chain:
            fixed = frozenset(range(1, b[i] + 1))
            choices = [fixed] if base <= fixed else []
        else:
            rest = [x for x in range(1, d + 1) if x not in base]
            choices = [base | frozenset(c) for c in combinations(rest, need)]
        for s in choices:
            out[b] = s
            yield from place(k + 1)
        out.pop(b, None)

    yield from place(0)
