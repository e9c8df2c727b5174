"""The hypersimplicial CW-complex H^d_n and its restrictions.

A cell C_{a,J} is the intersection of the dilated simplex of degree d with
the unit box a + [0,1]^J.  With k = d - |a| the cell is a hypersimplex of
dimension |J| - 1 as long as 1 <= k <= |J| - 1; the 0-cells are the lattice
points themselves (J empty).
"""

from __future__ import annotations

from itertools import combinations
from typing import NamedTuple

from .algebra import Chain, ComplexDesc
from .lattice import Exponent, divides, enumerate_points, shift
from .tableaux import HookTableau, min_support


class Cell(NamedTuple):
    base: Exponent
    jset: tuple[int, ...]

    @property
    def dim(self) -> int:
        return max(len(self.jset) - 1, 0)

    @property
    def mdeg(self) -> Exponent:
        out = list(self.base)
        for j in self.jset:
            out[j] += 1
        return tuple(out)

    def free_degree(self, d: int) -> int:
        return d - sum(self.base)


def is_valid(cell: Cell, d: int) -> bool:
    k = d - sum(cell.base)
    if any(x < 0 for x in cell.base):
        return False
    if not cell.jset:
        return k == 0
    if list(cell.jset) != sorted(set(cell.jset)):
        return False
    return 1 <= k <= len(cell.jset) - 1


def enumerate_cells(n: int, d: int, bound: Exponent | None = None) -> dict[int, list[Cell]]:
    """All cells of H^d_n graded by dimension, optionally with mdeg <= bound."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    graded: dict[int, list[Cell]] = {0: [Cell(a, ()) for a in enumerate_points(n, d)]}
    for size in range(2, n + 1):
        cells = []
        for J in combinations(range(n), size):
            for k in range(1, min(size - 1, d) + 1):
                cells.extend(Cell(a, J) for a in enumerate_points(n, d - k))
        graded[size - 1] = sorted(cells)
    if bound is not None:
        graded = {k: [c for c in cs if divides(c.mdeg, bound)] for k, cs in graded.items()}
    return graded


def boundary(cell: Cell, d: int) -> Chain:
    """Cellular boundary, case by case on k = d - |a| against |J|.

    Facets come from the box walls: y_j = 0 keeps the base and drops j
    (present while k <= |J| - 2); y_j = 1 raises the base by e_j and drops j
    (present while k >= 2).  Both kinds carry the sign (-1)^v of the removed
    position, i.e. the differential is kos + kappa on the tableau side; with a
    minus on the raised facets the square of the boundary fails to vanish once
    |J| >= 4.  An edge (k = 1, |J| = 2) maps to C_{a+e_j0} - C_{a+e_j1}.
    """
    if not is_valid(cell, d):
        raise ValueError(f"{cell} is not a cell of degree {d}")
    a, J = cell.base, cell.jset
    k = d - sum(a)
    out = Chain()
    if k == 0:
        return out
    if k == 1 and len(J) == 2:
        out.add_term(Cell(shift(a, plus=J[0]), ()), 1)
        out.add_term(Cell(shift(a, plus=J[1]), ()), -1)
        return out
    for v, jv in enumerate(J):
        face = J[:v] + J[v + 1:]
        sign = (-1) ** v
        if k <= len(J) - 2:
            out.add_term(Cell(a, face), sign)
        if k >= 2:
            out.add_term(Cell(shift(a, plus=jv), face), sign)
    return out


def hypersimplex_complex(n: int, d: int, bound: Exponent | None = None, augmented: bool = True) -> ComplexDesc:
    """Cellular chain complex of H^d_n (or H^d_n(<= bound)).

    With ``augmented`` the cells are shifted up by one degree and an empty
    cell (key ``None``) sits in degree 0, so the result is a frame.
    """
    graded = enumerate_cells(n, d, bound)
    shift_by = 1 if augmented else 0
    basis = {k + shift_by: cs for k, cs in graded.items()}
    bd = {c: boundary(c, d) for cs in graded.values() for c in cs}
    mdeg = {c: c.mdeg for cs in graded.values() for c in cs}
    if augmented:
        basis[0] = [None]
        bd[None] = Chain()
        mdeg[None] = (0,) * n
        for c in graded[0]:
            bd[c] = Chain.of(None)
    cx = ComplexDesc(basis, bd, mdeg)
    cx.check_closed()
    return cx


def cell_to_tableau(cell: Cell) -> HookTableau:
    """C_{a,J} <-> f_J (x) f^a.  A 0-cell maps to its standard column-length-1
    tableau f_j (x) f^{a - e_j} with j the smallest index in the support."""
    if not cell.jset:
        j = int(min_support(cell.base))
        return HookTableau((j,), shift(cell.base, minus=j))
    return HookTableau(cell.jset, cell.base)


def tableau_to_cell(t: HookTableau, d: int | None = None) -> Cell:
    if len(t.col) == 1:
        return Cell(shift(t.row, plus=t.col[0]), ())
    cell = Cell(t.row, t.col)
    if d is not None and not is_valid(cell, d):
        raise ValueError(f"{t} does not correspond to a cell of degree {d}")
    return cell


def restrict_leq_m(cx: ComplexDesc, m: Exponent) -> ComplexDesc:
    if cx.mdeg is None:
        raise ValueError("complex carries no multidegree labels")
    return cx.restrict(lambda key: divides(cx.mdeg[key], m))


def remove_cells(cx: ComplexDesc, cells) -> ComplexDesc:
    drop = set(cells)
    return cx.restrict(lambda key: key not in drop)


def skeleton_dot(n: int, d: int, solid=None, bound: Exponent | None = None) -> str:
    """DOT text for the one-skeleton; edges outside ``solid`` are dashed."""
    graded = enumerate_cells(n, d, bound)
    lines = ["graph skeleton {"]
    name = {c.base: "v" + "_".join(map(str, c.base)) for c in graded[0]}
    for c in graded[0]:
        lines.append(f'  {name[c.base]} [label="{"".join(map(str, c.base))}"];')
    for e in graded.get(1, []):
        bd = boundary(e, d)
        u, v = sorted(k.base for k in bd)
        style = ""
        if solid is not None and _edge_of_cell(e) not in solid:
            style = " [style=dashed]"
        lines.append(f"  {name[u]} -- {name[v]}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _edge_of_cell(e: Cell):
    from .lattice import DownEdge

    return DownEdge(e.mdeg, e.jset[0], e.jset[1])


def edge_cell(edge) -> Cell:
    """The 1-cell realizing the skeleton edge (apex; i, j)."""
    apex, i, j = edge
    return Cell(shift(shift(apex, minus=i), minus=j), (i, j))
