"""Lattice points of dilated simplices and the combinatorics on them.

Exponents are plain tuples of non-negative integers.  Indices are 0-based
everywhere inside the library; JSON encodings (see :mod:`polaris.io`) shift
them to 1-based.
"""

from __future__ import annotations

from itertools import combinations
from typing import NamedTuple, Sequence

Exponent = tuple[int, ...]


def check_exponent(a: Sequence[int]) -> Exponent:
    a = tuple(int(x) for x in a)
    if any(x < 0 for x in a):
        raise ValueError(f"negative coordinate in {a}")
    return a


def unit(n: int, i: int) -> Exponent:
    return tuple(1 if k == i else 0 for k in range(n))


def add(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def shift(a: Exponent, plus: int | None = None, minus: int | None = None) -> Exponent:
    """Return ``a + e_plus - e_minus`` (either index may be omitted)."""
    out = list(a)
    if plus is not None:
        out[plus] += 1
    if minus is not None:
        out[minus] -= 1
    return tuple(out)


def support(a: Exponent) -> tuple[int, ...]:
    return tuple(k for k, x in enumerate(a) if x > 0)


def min_support(a: Exponent) -> float:
    """Smallest index in the support; ``inf`` for the zero vector."""
    s = support(a)
    return s[0] if s else float("inf")


def divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(vectors, n: int | None = None) -> Exponent:
    vectors = list(vectors)
    if not vectors:
        if n is None:
            raise ValueError("lcm of an empty family needs n")
        return (0,) * n
    return tuple(max(col) for col in zip(*vectors))


def _compositions(n: int, d: int):
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in _compositions(n - 1, d - first):
            yield (first,) + rest


def enumerate_points(n: int, d: int, bound: Exponent | None = None) -> list[Exponent]:
    """All a in N^n with |a| = d, in lexicographically descending order.

    With ``bound`` only points with a <= bound coordinatewise are kept.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if d < 0:
        raise ValueError("d must be non-negative")
    pts = list(_compositions(n, d))
    if bound is not None:
        pts = [a for a in pts if divides(a, bound)]
    return pts


def leq_i(a: Exponent, b: Exponent, i: int) -> bool:
    """True iff ``b >=_i a``: b_i >= a_i and b_j <= a_j for every j != i."""
    if len(a) != len(b):
        raise ValueError("dimension mismatch")
    if sum(a) != sum(b):
        raise ValueError("degree mismatch")
    return b[i] >= a[i] and all(b[j] <= a[j] for j in range(len(a)) if j != i)


def parents_i(a: Exponent, i: int) -> list[Exponent]:
    """Covers of ``a`` in the poset (points, >=_i)."""
    return [shift(a, i, t) for t in support(a) if t != i]


def children_i(b: Exponent, i: int) -> list[Exponent]:
    if b[i] == 0:
        return []
    return [shift(b, t, i) for t in range(len(b)) if t != i]


class DownEdge(NamedTuple):
    """The one-skeleton edge (apex; i, j) between apex - e_i and apex - e_j."""

    apex: Exponent
    i: int
    j: int

    @property
    def endpoints(self) -> tuple[Exponent, Exponent]:
        return shift(self.apex, minus=self.i), shift(self.apex, minus=self.j)


def make_edge(apex: Exponent, i: int, j: int) -> DownEdge:
    if i == j:
        raise ValueError("an edge needs two distinct indices")
    if i > j:
        i, j = j, i
    if apex[i] < 1 or apex[j] < 1:
        raise ValueError(f"indices {i}, {j} not in the support of {apex}")
    return DownEdge(tuple(apex), i, j)


def edge_between(u: Exponent, v: Exponent) -> DownEdge | None:
    """The skeleton edge joining u and v, or None when they are not neighbours."""
    diff = [x - y for x, y in zip(u, v)]
    plus = [k for k, x in enumerate(diff) if x == 1]
    minus = [k for k, x in enumerate(diff) if x == -1]
    if len(plus) != 1 or len(minus) != 1 or any(abs(x) > 1 for x in diff):
        return None
    # u = apex - e_minus, v = apex - e_plus
    apex = shift(u, plus=minus[0])
    return make_edge(apex, plus[0], minus[0])


def down_graph(c: Exponent, R: Sequence[int] | None = None):
    """Vertices c - e_r (r in R) and all edges (c; r, s) among them."""
    supp = support(c)
    if R is None:
        R = supp
    R = tuple(sorted(R))
    if not set(R) <= set(supp):
        raise ValueError(f"{R} is not contained in the support of {c}")
    vertices = [shift(c, minus=r) for r in R]
    edges = [DownEdge(tuple(c), r, s) for r, s in combinations(R, 2)]
    return vertices, edges


def up_graph(a: Exponent, d: int | None = None):
    """Vertices a + e_i for all i, edges (a + e_i + e_j; i, j)."""
    if d is not None and sum(a) != d - 1:
        raise ValueError(f"{a} does not have degree {d - 1}")
    n = len(a)
    vertices = [shift(a, plus=i) for i in range(n)]
    edges = [DownEdge(add(a, add(unit(n, i), unit(n, j))), i, j) for i, j in combinations(range(n), 2)]
    return vertices, edges


def all_edges(n: int, d: int, bound: Exponent | None = None) -> list[DownEdge]:
    """Every edge of the one-skeleton; with ``bound`` only edges whose
    endpoints both satisfy the bound."""
    edges = []
    for c in enumerate_points(n, d + 1):
        for e in down_graph(c)[1]:
            if bound is None or all(divides(v, bound) for v in e.endpoints):
                edges.append(e)
    return edges


def is_boundary_edge(e: DownEdge) -> bool:
    return support(e.apex) == (e.i, e.j)


# -- chains --------------------------------------------------------------


def companion(i: int) -> int:
    """The second distinguished index: 1 when i is 0, otherwise 0."""
    return 1 if i == 0 else 0


class ChainInfo(NamedTuple):
    p: Exponent
    elements: tuple[Exponent, ...]  # indexed by rank 0..d-|p|
    extension: tuple[Exponent, ...]  # maximal chain, indexed by rank 0..d


def chain_key(p: Exponent):
    # |p| first; then the chain whose first differing coordinate is larger
    # comes first (this is the order that lists e_3 before e_4)
    return (sum(p), tuple(-x for x in p))


def chain_element(n: int, d: int, i: int, p: Exponent, k: int) -> Exponent:
    j = companion(i)
    r = sum(p)
    out = list(p)
    out[i] += k
    out[j] += d - r - k
    return tuple(out)


def chain_decomposition(n: int, d: int, i: int) -> list[ChainInfo]:
    """Partition of (points, >=_i) into the chains C^p, sorted by the chain order."""
    if n < 2:
        raise ValueError("chains need n >= 2")
    j = companion(i)
    others = [k for k in range(n) if k not in (i, j)]
    ps = []
    for r in range(d + 1):
        for sub in _compositions(len(others), r) if others else ([()] if r == 0 else []):
            p = [0] * n
            for k, x in zip(others, sub):
                p[k] = x
            ps.append(tuple(p))
    ps.sort(key=chain_key)
    ext: dict[Exponent, tuple[Exponent, ...]] = {}
    out = []
    for p in ps:
        r = sum(p)
        elems = tuple(chain_element(n, d, i, p, k) for k in range(d - r + 1))
        if r == 0:
            full = elems
        else:
            m = support(p)[0]
            prev = ext[shift(p, minus=m)]
            full = elems + prev[d - r + 1:]
        ext[p] = full
        out.append(ChainInfo(p, elems, full))
    return out
