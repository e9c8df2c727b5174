"""Brute-force Betti numbers and the polarization oracle.

For a monomial ideal I and a multidegree m in its lcm lattice,

    beta_{i,m}(I) = dim H~_{i-1}(T_{<m}),

where T_{<m} is the simplicial complex of generator subsets whose lcm
strictly divides m (the restriction of the Taylor complex).  T_{<m} is the
union, over variables v of m, of the full simplices on the generators whose
v-exponent is below m_v; we take the homology of the nerve of this cover,
which is homotopy equivalent and has at most 2^|supp m| faces.
"""

from __future__ import annotations

import os
from collections import defaultdict
from itertools import combinations
from typing import Sequence

from .algebra import rank
from .homology import lcm_lattice
from .lattice import Exponent, divides, enumerate_points

DEFAULT_GUARD = 20


class GuardExceeded(RuntimeError):
    pass


def generator_guard() -> int:
    raw = os.environ.get("POLARIS_GUARD_GENERATORS")
    return int(raw) if raw else DEFAULT_GUARD


def _reduced_homology(faces: set[frozenset]) -> dict[int, int]:
    """Reduced rational homology of a simplicial complex given by all its
    faces (the empty face included)."""
    by_dim = defaultdict(list)
    for f in faces:
        by_dim[len(f) - 1].append(f)
    for fs in by_dim.values():
        fs.sort(key=sorted)
    index = {f: k for fs in by_dim.values() for k, f in enumerate(fs)}
    ranks = {}
    for k, fs in by_dim.items():
        if k < 0:
            continue
        rows = []
        for f in fs:
            verts = sorted(f)
            rows.append({index[f - {v}]: (-1) ** t for t, v in enumerate(verts)})
        ranks[k] = rank(rows)
    out = {}
    for k, fs in by_dim.items():
        h = len(fs) - ranks.get(k, 0) - ranks.get(k + 1, 0)
        if h:
            out[k] = h
    return out


def _nerve_faces(gens: list[Exponent], m: Exponent) -> set[frozenset]:
    below = [g for g in gens if divides(g, m)]
    supp = [v for v, x in enumerate(m) if x > 0]
    zsets = {frozenset(v for v in supp if g[v] < m[v]) for g in below}
    faces = {frozenset()}
    for z in zsets:
        zs = sorted(z)
        for k in range(1, len(zs) + 1):
            faces.update(frozenset(c) for c in combinations(zs, k))
    return faces


def taylor_betti(gens: Sequence[Sequence[int]], guard: int | None = None) -> dict:
    """Multigraded Betti numbers of the ideal generated by ``gens``.

    Returns {(i, m): beta} with homological degree i starting at 0 for the
    generators.  Non-minimal generating sets are reduced first.
    """
    gens = sorted({tuple(g) for g in gens})
    gens = [g for g in gens if not any(h != g and divides(h, g) for h in gens)]
    guard = generator_guard() if guard is None else guard
    if len(gens) > guard:
        raise GuardExceeded(f"{len(gens)} generators exceed the guard of {guard}")
    table = {}
    for m in lcm_lattice(gens):
        for k, h in _reduced_homology(_nerve_faces(gens, m)).items():
            table[(k + 1, m)] = h
    return table


def total_betti(table: dict) -> list[int]:
    if not table:
        return []
    top = max(i for i, _ in table)
    out = [0] * (top + 1)
    for (i, _m), b in table.items():
        out[i] += b
    return out


def graded_betti(table: dict) -> dict:
    """{(i, total degree): beta}."""
    out = defaultdict(int)
    for (i, m), b in table.items():
        out[(i, sum(m))] += b
    return dict(out)


def restricted_ranks(n: int, d: int, u: Exponent | None = None) -> list[int]:
    """Betti numbers of m^d(<= u) read off the restricted L-complex."""
    from .tableaux import build_l_complex

    cx = build_l_complex(n, d, bound=u)
    ranks = [len(cx.basis[k]) for k in sorted(cx.basis) if k > 0]
    while ranks and ranks[-1] == 0:
        ranks.pop()
    return ranks


def verify_polarization_bruteforce(chi, guard: int | None = None) -> bool:
    """Betti numbers of the polarized ideal equal those of m^d(<= u) and
    the generators depolarize correctly."""
    from .polarization import realize_ideal

    ideal = realize_ideal(chi)
    if sorted(ideal.depolarize()) != sorted(chi.points):
        return False
    table = taylor_betti(ideal.exponents(), guard)
    return total_betti(table) == restricted_ranks(chi.n, chi.d, chi.u)


# -- exhaustive enumeration -------------------------------------------------

ORACLE_VERSION = "taylor-nerve-1"


def in_desk_range(n: int, d: int) -> bool:
    return (n == 2 and d <= 4) or (n == 3 and d <= 3) or (n == 4 and d == 2)


def _oracle_job(chi) -> bool:
    return verify_polarization_bruteforce(chi)


def _orbit_representatives(maps: list, d: int) -> list:
    """One map per orbit of the relabelling action of S_d, first seen wins."""
    from itertools import permutations

    seen, out = set(), []
    for m in maps:
        forms = []
        for perm in permutations(range(1, d + 1)):
            forms.append(tuple(sorted((a, tuple(sorted(perm[x - 1] for x in s))) for a, s in m.items())))
        key = min(forms)
        if key not in seen:
            seen.add(key)
            out.append(m)
    return out


def enumerate_polarizations(
    n: int,
    d: int,
    u: Exponent | None = None,
    by_family: bool = False,
    verify: bool = True,
    jobs: int = 1,
    force: bool = False,
) -> dict:
    """All polarizations of m^d (or m^d(<= u)) reachable by isotone families.

    The search runs over the labelings of each X_i in index order.  For the
    full power the base chain of every X_i is pinned to initial segments, so
    families are enumerated up to relabelling of each index's variables (the
    ideal only changes by a renaming).  After each index the edges still able
    to be linear syzygy edges are known; a branch is cut once some down-graph
    can no longer be connected.  Under a bound the base chain may leave the
    box, so relabelling orbits are reduced explicitly instead.  Results are deduplicated by graph unless
    ``by_family``; each carries the first family found for it.
    """
    from .polarization import (
        IsotoneFamily,
        _connected,
        apexes,
        isotone_maps,
        is_polarization,
        ls_edges,
        skeleton_edges,
    )

    if not force and not in_desk_range(n, d):
        raise GuardExceeded(f"(n, d) = ({n}, {d}) is outside the enumeration range")
    u = tuple(u) if u is not None else None
    pts = enumerate_points(n, d, u)
    maps = [list(isotone_maps(n, d, i, u, canonical=u is None)) for i in range(n)]
    if u is not None:
        maps = [_orbit_representatives(ms, d) for ms in maps]
    skel = skeleton_edges(n, d, u)
    by_apex = defaultdict(list)
    for e in skel:
        by_apex[e.apex].append(e)
    tops = apexes(n, d, u)

    def viable(alive: set) -> bool:
        for c in tops:
            verts = [v for v in range(n) if c[v] > 0]
            if not _connected(verts, [(e.i, e.j) for e in by_apex[c] if e in alive]):
                return False
        return True

    found = []

    def search(i: int, chosen: list, alive: set):
        if i == n:
            tables = {a: tuple(m[a] for m in chosen) for a in pts}
            found.append(IsotoneFamily(n, d, tables, u))
            return
        for m in maps[i]:
            keep = {e for e in alive if i in (e.i, e.j) or m[e.endpoints[0]] == m[e.endpoints[1]]}
            if viable(keep):
                search(i + 1, chosen + [m], keep)

    search(0, [], set(skel))

    results, seen = [], {}
    for chi in found:
        verdict = is_polarization(chi)
        if not verdict["spanningTree"]:
            continue
        graph = ls_edges(chi)
        key = tuple(sorted(graph.edges))
        if not by_family and key in seen:
            seen[key]["families"] += 1
            continue
        entry = {"graph": graph, "family": chi, "families": 1}
        seen[key] = entry
        results.append(entry)

    if verify:
        fams = [r["family"] for r in results]
        if jobs > 1:
            from concurrent.futures import ProcessPoolExecutor

            with ProcessPoolExecutor(jobs) as pool:
                oks = list(pool.map(_oracle_job, fams))
        else:
            oks = [_oracle_job(f) for f in fams]
        for r, ok in zip(results, oks):
            r["oracle"] = ok
    return {
        "n": n,
        "d": d,
        "u": u,
        "byFamily": by_family,
        "count": len(results),
        "families": sum(r["families"] for r in results),
        "searched": len(found),
        "results": results,
    }
