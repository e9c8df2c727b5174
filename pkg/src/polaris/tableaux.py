"""Hook tableaux, straightening, and the L-complex resolving m^d.

A hook tableau f_J (x) f^alpha stores its column J as a strictly increasing
tuple of 0-based indices and its row as a weight vector alpha.  In the
module L^a_b the column has length a+1 and |alpha| = b-1; the module is read
as the cokernel of kappa, so straightening is reduction modulo im(kappa).
"""

from __future__ import annotations

from itertools import combinations
from typing import Mapping, NamedTuple, Sequence

from .algebra import Chain, ComplexDesc
from .lattice import Exponent, enumerate_points, min_support, shift, unit


class HookTableau(NamedTuple):
    col: tuple[int, ...]
    row: Exponent

    @property
    def shape(self) -> tuple[int, int]:
        """(number of wedge factors, degree of the symmetric part)."""
        return len(self.col), sum(self.row)

    @property
    def mdeg(self) -> Exponent:
        out = list(self.row)
        for j in self.col:
            out[j] += 1
        return tuple(out)


def make_tableau(col: Sequence[int], row: Sequence[int]) -> HookTableau:
    col = tuple(col)
    row = tuple(row)
    if not col:
        raise ValueError("empty column")
    if any(b <= a for a, b in zip(col, col[1:])):
        raise ValueError(f"column {col} is not strictly increasing")
    if any(x < 0 for x in row) or col[-1] >= len(row) or col[0] < 0:
        raise ValueError(f"invalid tableau {col} | {row}")
    return HookTableau(col, row)


def is_standard(t: HookTableau) -> bool:
    return t.col[0] <= min_support(t.row)


def straighten(t: HookTableau) -> Chain:
    """Rewrite ``t`` as a combination of standard tableaux modulo im(kappa).

    For a violation the corner j0 exceeds the smallest row entry j1; the
    shuffle relation moves j1 into the corner, and every resulting term is
    already standard because j1 is below all column entries and row entries.
    """
    if is_standard(t):
        return Chain.of(t)
    j1 = min_support(t.row)
    base_row = shift(t.row, minus=j1)
    out = Chain()
    for k, ik in enumerate(t.col):
        col = (j1,) + t.col[:k] + t.col[k + 1:]
        out.add_term(HookTableau(col, shift(base_row, plus=ik)), (-1) ** k)
    return out


def straighten_chain(chain: Mapping) -> Chain:
    out = Chain()
    for t, c in chain.items():
        out.iadd(straighten(t), c)
    return out


def standard_basis(a: int, b: int, n: int) -> list[HookTableau]:
    """Standard hook tableaux of L^a_b(F), rank F = n: column length a+1,
    row of length b-1 with entries at least the corner."""
    if n < 1 or not 0 <= a <= n - 1 or b < 1:
        raise ValueError(f"parameters out of range: a={a}, b={b}, n={n}")
    out = []
    for col in combinations(range(n), a + 1):
        for row in enumerate_points(n, b - 1):
            if col[0] <= min_support(row):
                out.append(HookTableau(col, row))
    return sorted(out)


def rank_formula(a: int, b: int, n: int) -> int:
    from math import comb

    return comb(n + b - 1, a + b) * comb(a + b - 1, a)


def _shape_of(chain: Mapping) -> tuple[int, int] | None:
    shapes = {t.shape for t in chain}
    if len(shapes) > 1:
        raise ValueError(f"mixed shapes {sorted(shapes)}")
    return shapes.pop() if shapes else None


def kappa(chain: Mapping) -> Chain:
    """f_J (x) f^alpha -> sum_t (-1)^t f_{J - j_t} (x) f_{j_t} f^alpha."""
    shape = _shape_of(chain)
    if shape is not None and shape[0] < 2:
        raise ValueError("kappa needs at least two column entries")
    out = Chain()
    for t, c in chain.items():
        for k, jk in enumerate(t.col):
            out.add_term(HookTableau(t.col[:k] + t.col[k + 1:], shift(t.row, plus=jk)), (-1) ** k * c)
    return out


def koszul(chain: Mapping, weights: Sequence | None = None) -> Chain:
    """kos^psi (x) 1 with sign (-1)^t for the 0-indexed removed position t.

    With ``weights`` (one scalar per index) the result is a rational chain of
    tableaux.  Without weights psi(f_i) = x_i and the keys of the result are
    pairs (exponent of the monomial coefficient, tableau).
    """
    shape = _shape_of(chain)
    if shape is not None and shape[0] < 2:
        raise ValueError("the Koszul map needs at least two column entries")
    out = Chain()
    for t, c in chain.items():
        n = len(t.row)
        if weights is not None and len(weights) != n:
            raise ValueError("one weight per index is required")
        for k, jk in enumerate(t.col):
            face = HookTableau(t.col[:k] + t.col[k + 1:], t.row)
            sign = (-1) ** k * c
            if weights is None:
                out.add_term((unit(n, jk), face), sign)
            else:
                out.add_term(face, sign * weights[jk])
    return out


AUGMENTATION = "R"


def l_differential(t: HookTableau) -> Chain:
    """Scalar part of the L-complex differential on a standard tableau."""
    if len(t.col) == 1:
        return Chain.of(AUGMENTATION)
    return straighten_chain(koszul({t: 1}, weights=[1] * len(t.row)))


def build_l_complex(n: int, d: int, bound: Exponent | None = None) -> ComplexDesc:
    """Frame of the L-complex L(psi, d) with psi(f_i) = x_i.

    Homological degree 0 holds the augmentation target; degree k+1 holds the
    standard basis of L^k_d.  With ``bound`` only basis elements of
    multidegree <= bound are kept.
    """
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    basis = {0: [AUGMENTATION]}
    mdeg = {AUGMENTATION: (0,) * n}
    boundary = {AUGMENTATION: Chain()}
    for k in range(n):
        ts = standard_basis(k, d, n)
        if bound is not None:
            ts = [t for t in ts if all(x <= u for x, u in zip(t.mdeg, bound))]
        basis[k + 1] = ts
        for t in ts:
            mdeg[t] = t.mdeg
            boundary[t] = l_differential(t)
    cx = ComplexDesc(basis, boundary, mdeg)
    cx.check_closed()
    return cx
