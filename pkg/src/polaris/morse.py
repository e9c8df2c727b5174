"""Acyclic matchings, Morse complexes, and the matching that cuts the
hypersimplicial complex down to the L-complex."""

from __future__ import annotations

from collections import defaultdict, deque
from fractions import Fraction
from typing import Iterable

from .algebra import Chain, ComplexDesc
from .hypersimplex import Cell, enumerate_cells, hypersimplex_complex
from .lattice import min_support, shift
from .tableaux import AUGMENTATION, HookTableau, build_l_complex

Pair = tuple  # (higher cell, lower cell)


class MatchingError(ValueError):
    pass


def _check_pairs(cx: ComplexDesc, pairs: Iterable[Pair]) -> list[Pair]:
    pairs = list(pairs)
    seen = set()
    for hi, lo in pairs:
        for c in (hi, lo):
            if c not in cx:
                raise MatchingError(f"{c!r} is not a cell of the complex")
            if c in seen:
                raise MatchingError(f"{c!r} occurs in more than one pair")
            seen.add(c)
        if cx.degree_of(hi) - cx.degree_of(lo) != 1:
            raise MatchingError(f"pair {hi!r} -> {lo!r} does not drop dimension by one")
        if lo not in cx.boundary[hi]:
            raise MatchingError(f"{lo!r} is not a facet of {hi!r}")
    return pairs


def _find_cycle(nodes, succ) -> list | None:
    """Iterative DFS; returns the cell sequence of a directed cycle or None."""
    WHITE, GREY, BLACK = 0, 1, 2
    color = dict.fromkeys(nodes, WHITE)
    for start in nodes:
        if color[start] != WHITE:
            continue
        stack = [(start, iter(succ(start)))]
        path = [start]
        color[start] = GREY
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                color[node] = BLACK
                stack.pop()
                path.pop()
            elif color[nxt] == GREY:
                return path[path.index(nxt):] + [nxt]
            elif color[nxt] == WHITE:
                color[nxt] = GREY
                stack.append((nxt, iter(succ(nxt))))
                path.append(nxt)
    return None


def validate_matching(cx: ComplexDesc, pairs: Iterable[Pair]) -> dict:
    """Check condition (1) strictly (raising) and report acyclicity and
    homogeneity.  A cycle is reported as the list of cells it passes through,
    first cell repeated at the end."""
    pairs = _check_pairs(cx, pairs)
    up = {lo: hi for hi, lo in pairs}
    down = {hi: lo for hi, lo in pairs}

    def succ(c):
        out = [t for t in cx.boundary[c] if down.get(c) != t]
        if c in up:
            out.append(up[c])
        return out

    cycle = _find_cycle(list(cx.keys()), succ)
    homogeneous = cx.mdeg is None or all(cx.mdeg[hi] == cx.mdeg[lo] for hi, lo in pairs)
    report = {"acyclic": cycle is None, "homogeneous": homogeneous}
    if cycle is not None:
        report["cycleWitness"] = cycle
    return report


def critical_cells(cx: ComplexDesc, pairs: Iterable[Pair]) -> dict[int, list]:
    matched = {c for p in pairs for c in p}
    return {k: [c for c in ks if c not in matched] for k, ks in cx.basis.items()}


def morse_complex(cx: ComplexDesc, pairs: Iterable[Pair], check: bool = True) -> ComplexDesc:
    """Morse complex on the critical cells by successive pair elimination.

    Removing a pair (s, t) with incidence c = [ds : t] replaces every
    boundary dr containing t by dr - ([dr : t] / c) ds and drops s from all
    boundaries.  For an acyclic matching this realizes the gradient path sum:
    each path contributes the product of ordinary incidences and of
    -1 / (incidence of each reversed pair).  Acyclicity guarantees that no
    earlier elimination changes the incidence of a later pair, so the order
    of elimination is irrelevant.
    """
    pairs = list(pairs)
    if check:
        rep = validate_matching(cx, pairs)
        if not rep["acyclic"]:
            raise MatchingError(f"matching is not acyclic: {rep['cycleWitness']}")
    bd = {k: Chain(v) for k, v in cx.boundary.items()}
    cob = defaultdict(set)
    for k, ch in bd.items():
        for t in ch:
            cob[t].add(k)
    alive = set(cx.keys())
    for s, t in pairs:
        c = bd[s].get(t, 0)
        if not c:
            raise MatchingError(f"incidence of {s!r} on {t!r} vanished during elimination")
        ds = bd[s]
        for r in list(cob[t]):
            if r == s or r not in alive:
                continue
            b = bd[r].get(t, 0)
            if not b:
                continue
            factor = -Fraction(b) / c
            for u, v in ds.items():
                bd[r].add_term(u, v * factor)
                if u in bd[r]:
                    cob[u].add(r)
        for r in cob[s]:
            bd[r].pop(s, None)
        alive.discard(s)
        alive.discard(t)
        for u in ds:
            cob[u].discard(s)
    basis = {k: [c for c in ks if c in alive] for k, ks in cx.basis.items()}
    boundary = {c: Chain({u: v for u, v in bd[c].items() if u in alive}) for c in alive}
    mdeg = {c: cx.mdeg[c] for c in alive} if cx.mdeg is not None else None
    out = ComplexDesc(basis, boundary, mdeg)
    out.check_closed()
    return out


# -- the L-matching ------------------------------------------------------


def l_matching(n: int, d: int) -> list[Pair]:
    """C_{a,J} -> C_{a + e_min J, J - min J} for 2 <= d - |a| <= |J| - 1 and
    min J <= min Supp(a) (with min Supp(0) = infinity)."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    pairs = []
    for cells in enumerate_cells(n, d).values():
        for c in cells:
            k = d - sum(c.base)
            if c.jset and 2 <= k <= len(c.jset) - 1 and c.jset[0] <= min_support(c.base):
                pairs.append((c, Cell(shift(c.base, plus=c.jset[0]), c.jset[1:])))
    return pairs


def critical_to_tableau(c) -> object:
    """Critical cell -> L-complex basis key."""
    if c is None:
        return AUGMENTATION
    if not c.jset:
        j = int(min_support(c.base))
        return HookTableau((j,), shift(c.base, minus=j))
    return HookTableau(c.jset, c.base)


def match_signs(a: ComplexDesc, b: ComplexDesc, corr: dict):
    """Find s: keys of a -> {+1,-1} with s(v) s(u) a[v,u] = b[corr v, corr u].

    Returns (signs, None) or (None, witness) where the witness names the
    first entry that cannot be matched.
    """
    for k in a.degrees:
        if sorted(map(repr, (corr[x] for x in a.basis[k]))) != sorted(map(repr, b.basis.get(k, []))):
            return None, {"reason": "basis mismatch", "degree": k}
    adj = defaultdict(list)
    for v in a.keys():
        bv = corr[v]
        lhs = a.boundary[v]
        rhs = b.boundary[bv]
        if set(corr[u] for u in lhs) != set(rhs):
            return None, {"reason": "support mismatch", "cell": v}
        for u, x in lhs.items():
            y = rhs[corr[u]]
            if abs(x) != abs(y):
                return None, {"reason": "coefficient mismatch", "cell": v, "face": u, "values": (x, y)}
            rel = 1 if x == y else -1
            adj[v].append((u, rel))
            adj[u].append((v, rel))
    signs = {}
    for root in a.keys():
        if root in signs:
            continue
        signs[root] = 1
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u, rel in adj[v]:
                want = signs[v] * rel
                if u not in signs:
                    signs[u] = want
                    queue.append(u)
                elif signs[u] != want:
                    return None, {"reason": "inconsistent signs", "cell": v, "face": u}
    return signs, None


def verify_l_isomorphism(n: int, d: int) -> dict:
    """Compare the Morse complex of the hypersimplicial complex under the
    L-matching with the L-complex frame, up to per-element signs."""
    hx = hypersimplex_complex(n, d)
    pairs = l_matching(n, d)
    rep = validate_matching(hx, pairs)
    if not (rep["acyclic"] and rep["homogeneous"]):
        return {"isomorphic": False, "witness": rep}
    mc = morse_complex(hx, pairs, check=False)
    lc = build_l_complex(n, d)
    corr = {c: critical_to_tableau(c) for c in mc.keys()}
    for c, t in corr.items():
        if c is not None and mc.mdeg[c] != lc.mdeg.get(t):
            return {"isomorphic": False, "witness": {"reason": "multidegree mismatch", "cell": c}}
    signs, witness = match_signs(mc, lc, corr)
    if signs is None:
        return {"isomorphic": False, "witness": witness}
    return {"isomorphic": True, "signs": signs, "correspondence": corr}
