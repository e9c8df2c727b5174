"""Exact rational chains, fraction-free rank, and based chain complexes."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Callable, Hashable, Iterable, Mapping


class Chain(dict):
    """Finite formal sum of basis keys with nonzero rational coefficients."""

    @classmethod
    def of(cls, key: Hashable, coeff=1) -> "Chain":
        c = cls()
        c.add_term(key, coeff)
        return c

    def add_term(self, key, coeff) -> None:
        coeff = Fraction(coeff)
        if not coeff:
            return
        total = self.get(key, 0) + coeff
        if total:
            self[key] = total
        else:
            self.pop(key, None)

    def iadd(self, other: Mapping, scale=1) -> "Chain":
        scale = Fraction(scale)
        if scale:
            for k, v in other.items():
                self.add_term(k, v * scale)
        return self

    def __add__(self, other: Mapping) -> "Chain":
        return Chain(self).iadd(other)

    def __sub__(self, other: Mapping) -> "Chain":
        return Chain(self).iadd(other, -1)

    def __neg__(self) -> "Chain":
        return self.scaled(-1)

    def scaled(self, s) -> "Chain":
        s = Fraction(s)
        if not s:
            return Chain()
        return Chain({k: v * s for k, v in self.items()})

    def map_keys(self, f: Callable) -> "Chain":
        out = Chain()
        for k, v in self.items():
            out.add_term(f(k), v)
        return out

    def is_zero(self) -> bool:
        return not self


def linear_map(images: Callable[[Hashable], Mapping], chain: Mapping) -> Chain:
    """Extend ``images`` (basis key -> chain) linearly to ``chain``."""
    out = Chain()
    for k, v in chain.items():
        out.iadd(images(k), v)
    return out


def _integer_row(row: Mapping[int, Fraction]) -> dict[int, int]:
    den = 1
    for v in row.values():
        den = lcm(den, Fraction(v).denominator)
    out = {c: int(Fraction(v) * den) for c, v in row.items() if v}
    g = 0
    for v in out.values():
        g = gcd(g, v)
    if g > 1:
        out = {c: v // g for c, v in out.items()}
    return out


class Echelon:
    """Incremental fraction-free row echelon form over the integers.

    Rows are sparse dicts column -> coefficient.  The pivot of a row is its
    smallest column; rows are reduced in insertion order, so the result is
    deterministic.
    """

    def __init__(self):
        self.pivots: dict[int, dict[int, int]] = {}

    def reduce(self, row: Mapping[int, Fraction]) -> dict[int, int]:
        row = _integer_row(row)
        while row:
            col = min(row)
            prow = self.pivots.get(col)
            if prow is None:
                return row
            a, b = prow[col], row[col]
            g = gcd(a, b)
            ma, mb = a // g, b // g
            new = {c: v * ma for c, v in row.items()}
            for c, v in prow.items():
                x = new.get(c, 0) - mb * v
                if x:
                    new[c] = x
                else:
                    new.pop(c, None)
            row = _integer_row(new)
        return row

    def add(self, row: Mapping[int, Fraction]) -> bool:
        """Insert a row; True when it was independent of the previous ones."""
        red = self.reduce(row)
        if not red:
            return False
        self.pivots[min(red)] = red
        return True

    def contains(self, row: Mapping[int, Fraction]) -> bool:
        return not self.reduce(row)

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rank(rows: Iterable[Mapping[int, Fraction]]) -> int:
    ech = Echelon()
    for r in rows:
        ech.add(r)
    return ech.rank


def chains_rank(chains: Iterable[Mapping], index: dict | None = None) -> int:
    """Rank of the span of a family of chains over arbitrary keys."""
    index = {} if index is None else index
    rows = []
    for ch in chains:
        rows.append({index.setdefault(k, len(index)): v for k, v in ch.items()})
    return rank(rows)


class ComplexDesc:
    """A based chain complex of rational vector spaces.

    ``basis[k]`` lists the basis keys in homological degree k; ``boundary``
    maps each key to a chain one degree lower.  ``mdeg`` optionally attaches a
    multidegree to every key.
    """

    def __init__(self, basis: Mapping[int, list], boundary: Mapping[Hashable, Mapping], mdeg=None):
        self.basis = {k: list(v) for k, v in sorted(basis.items())}
        self.boundary = {key: Chain(boundary.get(key, {})) for ks in self.basis.values() for key in ks}
        self.mdeg = dict(mdeg) if mdeg is not None else None
        self._degree = {key: k for k, ks in self.basis.items() for key in ks}

    def degree_of(self, key) -> int:
        return self._degree[key]

    def __contains__(self, key) -> bool:
        return key in self._degree

    @property
    def degrees(self) -> list[int]:
        return list(self.basis)

    def ranks(self) -> dict[int, int]:
        return {k: len(v) for k, v in self.basis.items()}

    def keys(self):
        for ks in self.basis.values():
            yield from ks

    def d(self, chain: Mapping) -> Chain:
        return linear_map(lambda k: self.boundary[k], chain)

    def square_zero_witness(self):
        """First basis key whose boundary of the boundary is nonzero, or None."""
        for key in self.keys():
            if not self.d(self.boundary[key]).is_zero():
                return key
        return None

    def check_closed(self) -> None:
        for key, ch in self.boundary.items():
            for k in ch:
                if k not in self._degree:
                    raise ValueError(f"boundary of {key!r} leaves the complex at {k!r}")

    def restrict(self, keep: Callable[[Hashable], bool]) -> "ComplexDesc":
        """Subcomplex on the kept keys; boundary terms outside are dropped."""
        basis = {k: [key for key in ks if keep(key)] for k, ks in self.basis.items()}
        kept = {key for ks in basis.values() for key in ks}
        boundary = {key: Chain({t: c for t, c in self.boundary[key].items() if t in kept}) for key in kept}
        mdeg = {key: self.mdeg[key] for key in kept} if self.mdeg is not None else None
        return ComplexDesc(basis, boundary, mdeg)

    def boundary_rank(self, k: int) -> int:
        """Rank of the boundary map leaving degree k."""
        lower = self.basis.get(k - 1, [])
        index = {key: c for c, key in enumerate(lower)}
        rows = []
        for key in self.basis.get(k, []):
            rows.append({index[t]: v for t, v in self.boundary[key].items()})
        return rank(rows)
