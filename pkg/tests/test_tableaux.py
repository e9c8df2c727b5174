from itertools import product

import pytest

from polaris.algebra import Echelon
from polaris.tableaux import (
    HookTableau,
    build_l_complex,
    is_standard,
    kappa,
    make_tableau,
    rank_formula,
    standard_basis,
    straighten,
)


def test_is_standard():
    assert is_standard(HookTableau((0, 2), (0, 1, 1)))
    assert not is_standard(HookTableau((1, 2), (1, 0, 0)))
    assert is_standard(HookTableau((0, 1, 2), (0, 0, 0)))
    with pytest.raises(ValueError):
        make_tableau((2, 1), (0, 0, 0))


def test_straighten_example():
    got = straighten(HookTableau((1, 2), (1, 0, 0)))
    assert dict(got) == {HookTableau((0, 2), (0, 1, 0)): 1, HookTableau((0, 1), (0, 0, 1)): -1}
    t = HookTableau((0, 1), (1, 1, 0))
    assert dict(straighten(t)) == {t: 1}


def _in_kappa_image(diff, a, b, n):
    """diff lies in the span of kappa applied to all tableaux of shape (a+1, b-1)."""
    index, ech = {}, Echelon()

    def row(ch):
        return {index.setdefault(k, len(index)): v for k, v in ch.items()}

    from itertools import combinations

    from polaris.lattice import enumerate_points

    for col in combinations(range(n), a + 2):
        for r in enumerate_points(n, b - 1):
            ech.add(row(kappa({HookTableau(col, r): 1})))
    return ech.contains(row(diff))


def test_straighten_differs_by_kappa_image():
    t = HookTableau((2, 3), (1, 1, 0, 0))
    diff = straighten(t)
    diff.add_term(t, -1)
    assert all(is_standard(k) for k in straighten(t))
    assert _in_kappa_image(diff, 1, 2, 4)


def test_rank_formula_small():
    assert rank_formula(0, 2, 3) == 6
    assert rank_formula(1, 2, 3) == 8
    for n, d, a in product(range(1, 4), range(1, 4), range(3)):
        if a <= n - 1:
            assert len(standard_basis(a, d, n)) == rank_formula(a, d, n)


def test_l_complex_ranks():
    cx = build_l_complex(3, 3)
    assert [len(cx.basis[k]) for k in sorted(cx.basis)] == [1, 10, 15, 6]
    assert cx.square_zero_witness() is None
