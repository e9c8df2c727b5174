import pytest

from polaris.algebra import Chain, ComplexDesc
from polaris.hypersimplex import Cell, hypersimplex_complex
from polaris.morse import (
    MatchingError,
    critical_cells,
    l_matching,
    morse_complex,
    validate_matching,
    verify_l_isomorphism,
)
from polaris.homology import is_cellular_resolution, rational_homology
from polaris.tableaux import build_l_complex


def _square():
    # boundary of a square: 4 vertices, 4 edges, plus one 2-cell
    basis = {0: ["a", "b", "c", "d"], 1: ["ab", "bc", "cd", "da"], 2: ["F"]}
    bd = {v: Chain() for v in basis[0]}
    for e in basis[1]:
        bd[e] = Chain({e[1]: 1, e[0]: -1})
    bd["F"] = Chain({"ab": 1, "bc": 1, "cd": 1, "da": 1})
    return ComplexDesc(basis, bd)


def test_cycle_is_reported():
    cx = _square()
    pairs = [("ab", "b"), ("bc", "c"), ("cd", "d"), ("da", "a")]
    rep = validate_matching(cx, pairs)
    assert not rep["acyclic"]
    assert rep["cycleWitness"][0] == rep["cycleWitness"][-1]
    with pytest.raises(MatchingError):
        morse_complex(cx, pairs)


def test_bad_pairs_raise():
    cx = _square()
    with pytest.raises(MatchingError):
        validate_matching(cx, [("F", "a")])
    with pytest.raises(MatchingError):
        validate_matching(cx, [("ab", "c")])
    with pytest.raises(MatchingError):
        validate_matching(cx, [("ab", "b"), ("bc", "b")])


def test_collapse_of_a_disk():
    cx = _square()
    pairs = [("F", "da"), ("ab", "b"), ("bc", "c"), ("cd", "d")]
    mc = morse_complex(cx, pairs)
    assert mc.ranks() == {0: 1, 1: 0, 2: 0}
    assert rational_homology(mc) == rational_homology(cx)


@pytest.mark.parametrize("n,d", [(2, 2), (3, 2), (3, 3), (4, 2), (2, 3), (3, 1)])
def test_l_matching_gives_the_l_complex(n, d):
    hx = hypersimplex_complex(n, d)
    pairs = l_matching(n, d)
    rep = validate_matching(hx, pairs)
    assert rep["acyclic"] and rep["homogeneous"]
    crit = critical_cells(hx, pairs)
    lc = build_l_complex(n, d)
    assert {k: len(v) for k, v in crit.items() if v} == {k: len(v) for k, v in lc.basis.items() if v}
    res = verify_l_isomorphism(n, d)
    assert res["isomorphic"], res.get("witness")
    assert set(res["signs"].values()) <= {1, -1}


def test_morse_complex_is_a_resolution():
    hx = hypersimplex_complex(3, 3)
    mc = morse_complex(hx, l_matching(3, 3))
    assert mc.square_zero_witness() is None
    assert is_cellular_resolution(mc)[0]


def test_l_matching_pairs_are_facets():
    for hi, lo in l_matching(4, 3):
        assert lo == Cell(tuple(x + (k == hi.jset[0]) for k, x in enumerate(hi.base)), hi.jset[1:])
