from polaris.algebra import Chain, ComplexDesc
from polaris.homology import (
    homogenize,
    is_cellular_resolution,
    koszul_frame,
    lcm_lattice,
    rational_homology,
)


def test_koszul_frame_is_a_resolution():
    mc = homogenize(koszul_frame(3))
    assert mc.mdeg[(0, 1, 2)] == (1, 1, 1)
    assert mc.entry((0, 1), (0,)) == (-1, (0, 1, 0))
    ok, witness = is_cellular_resolution(mc)
    assert ok and witness is None


def test_lcm_lattice():
    assert lcm_lattice([(1, 0), (0, 1)]) == [(0, 1), (1, 0), (1, 1)]


def test_non_resolution_has_witness():
    # two generators with their syzygy missing
    basis = {0: ["o"], 1: ["a", "b"]}
    bd = {"o": Chain(), "a": Chain({"o": 1}), "b": Chain({"o": 1})}
    cx = ComplexDesc(basis, bd, {"o": (0, 0), "a": (1, 0), "b": (0, 1)})
    ok, witness = is_cellular_resolution(cx)
    assert not ok
    assert witness == {"multidegree": [1, 1], "homology_degree": 1, "dimension": 1}


def test_homology_of_a_circle():
    basis = {0: ["x", "y"], 1: ["p", "q"]}
    bd = {"x": Chain(), "y": Chain(), "p": Chain({"x": 1, "y": -1}), "q": Chain({"x": -1, "y": 1})}
    assert rational_homology(ComplexDesc(basis, bd)) == {0: 1, 1: 1}
