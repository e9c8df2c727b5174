"""Acceptance criteria 1-10.  Each test records one PASS/FAIL line, printed
in the terminal summary, then asserts."""

import json
import random
import time
from importlib.resources import files
from math import comb

from polaris import io
from polaris.homology import is_cellular_resolution
from polaris.hypersimplex import Cell, enumerate_cells, hypersimplex_complex, remove_cells
from polaris.isotone_infer import chain_words, check_conditions, infer_family, random_graph
from polaris.lattice import enumerate_points
from polaris.morse import critical_cells, l_matching, validate_matching, verify_l_isomorphism
from polaris.oracle import (
    enumerate_polarizations,
    restricted_ranks,
    taylor_betti,
    total_betti,
    verify_polarization_bruteforce,
)
from polaris.polarization import (
    is_polarization,
    l_complex_graph,
    ls_edges,
    random_family,
    restricted_power_setup,
    spanning_tree_check,
    standard_family,
    tab_spanning_check,
)
from polaris.tableaux import build_l_complex, standard_basis

DATA = files("polaris") / "data"


def test_criterion_01_rank_formula(criterion):
    start = time.perf_counter()
    bad = []
    for n in range(1, 6):
        for d in range(1, 5):
            for a in range(n):
                want = comb(n + d - 1, a + d) * comb(a + d - 1, a)
                if len(standard_basis(a, d, n)) != want:
                    bad.append((n, d, a))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 1
    criterion(1, ok, f"rank formula on n<=5, d<=4: mismatches {bad}, {elapsed:.2f}s (limit 1s)")
    assert ok


def test_criterion_02_l_complex_exact(criterion):
    start = time.perf_counter()
    failures = []
    for n, d in [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2), (4, 3)]:
        cx = build_l_complex(n, d)
        if cx.square_zero_witness() is not None:
            failures.append((n, d, "d^2"))
        ok, witness = is_cellular_resolution(cx)
        if not ok:
            failures.append((n, d, witness))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 60
    criterion(2, ok, f"L-complex d^2 = 0 and exact per strand on 6 sizes: failures {failures}, {elapsed:.1f}s (limit 60s)")
    assert ok


def test_criterion_03_census(criterion):
    c33 = enumerate_cells(3, 3)
    down = sorted(c.mdeg for c in c33[2] if sum(c.base) == 1)
    up = [c for c in c33[2] if sum(c.base) == 2]
    c43 = enumerate_cells(4, 3)
    octahedra = [c for c in c43[3] if 3 - sum(c.base) == 2]
    tetra = [c for c in c43[3] if 3 - sum(c.base) != 2]
    ok = (
        len(c33[0]) == 10
        and down == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
        and len(up) == 6
        and len(octahedra) == 4
    )
    criterion(3, ok, f"(3,3): {len(c33[0])} vertices, down-triangles at {down}, {len(up)} up-triangles; "
                     f"(4,3): {len(octahedra)} octahedra (+{len(tetra)} tetrahedra)")
    assert ok


def test_criterion_04_cellular_resolution(criterion):
    grid = [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2), (4, 3)]
    good = []
    for n, d in grid:
        cx = hypersimplex_complex(n, d)
        good.append(cx.square_zero_witness() is None and is_cellular_resolution(cx)[0])
    cut = remove_cells(hypersimplex_complex(3, 3), [Cell((1, 0, 0), (0, 1, 2))])
    flipped, witness = is_cellular_resolution(cut)
    ok = all(good) and not flipped and witness is not None
    criterion(4, ok, f"hypersimplex resolves on {sum(good)}/{len(grid)} sizes; "
                     f"without interior top cell C_(100),(123): witness {witness}")
    assert ok


def test_criterion_05_morse_l_isomorphism(criterion):
    start = time.perf_counter()
    rows = []
    for n, d in [(3, 2), (3, 3), (4, 2)]:
        hx = hypersimplex_complex(n, d)
        pairs = l_matching(n, d)
        rep = validate_matching(hx, pairs)
        crit = critical_cells(hx, pairs)
        lc = build_l_complex(n, d)
        counts = {k: len(v) for k, v in crit.items() if v} == {k: len(v) for k, v in lc.basis.items() if v}
        iso = verify_l_isomorphism(n, d)["isomorphic"]
        rows.append(rep["acyclic"] and rep["homogeneous"] and counts and iso)
    elapsed = time.perf_counter() - start
    ok = all(rows) and elapsed < 60
    criterion(5, ok, f"L-matching acyclic, homogeneous, counts equal, isomorphic: {rows}, {elapsed:.1f}s (limit 60s)")
    assert ok


def _three_way(chi):
    st = spanning_tree_check(ls_edges(chi))[0]
    tab = tab_spanning_check(chi)["spans"]
    orc = verify_polarization_bruteforce(chi)
    return st, tab, orc


def test_criterion_06_three_criteria(criterion):
    start = time.perf_counter()
    fams = [standard_family(n, d) for n, d in [(3, 2), (3, 3), (4, 2)]]
    fams.append(io.family_from_json(json.loads((DATA / "std_3_3.json").read_text())))
    fams.append(infer_family(io.graph_from_json(json.loads((DATA / "isotone_chains_3_3.json").read_text()))))
    for name in ("polarizations_3_2.json", "polarizations_3_3.json"):
        fams.extend(io.family_from_json(r["family"]) for r in json.loads((DATA / name).read_text())["results"])
    rng = random.Random(2024)
    sampled = {}
    for n, d in [(3, 2), (3, 3), (4, 2)]:
        batch = [random_family(n, d, rng) for _ in range(100)]
        sampled[(n, d)] = batch
        fams.extend(batch)
    disagreements, positives = [], 0
    for chi in fams:
        st, tab, orc = _three_way(chi)
        positives += st
        if not st == tab == orc:
            disagreements.append(chi.key())
    # the verdict wrapper must agree as well
    for chi in sampled[(3, 3)][:10]:
        is_polarization(chi, cross_check=True)
    elapsed = time.perf_counter() - start
    ok = not disagreements and elapsed < 600
    criterion(6, ok, f"{len(fams)} families ({positives} polarizations): {len(disagreements)} disagreements, "
                     f"{elapsed:.1f}s (limit 600s)")
    assert ok


def test_criterion_07_negative_control(criterion):
    diags = check_conditions(l_complex_graph(4, 2))
    ok = bool(diags)
    first = diags[0].as_dict()["humanReadable"] if diags else "none"
    criterion(7, ok, f"L-complex graph (4,2): {len(diags)} diagnostics, first: {first}")
    assert ok


def test_criterion_08_word_algebra_and_round_trips(criterion):
    start = time.perf_counter()
    raw = json.loads((DATA / "isotone_chains_3_3.json").read_text())
    words = chain_words(io.graph_from_json(raw), 0)
    fixture = words[(0, 0, 1)] == (2, 3, 1) and words[(0, 0, 2)] == (3, 2, 1)
    rng = random.Random(88)
    trip_a = trip_b = tried_b = 0
    for k in range(100):
        d = 2 + k % 3
        chi = random_family(3, d, rng)
        g = ls_edges(chi)
        if not check_conditions(g) and ls_edges(infer_family(g)) == g:
            trip_a += 1
        h = random_graph(3, d, rng, keep=rng.choice([0.5, 0.8, 0.95]))
        if not check_conditions(h):
            tried_b += 1
            trip_b += ls_edges(infer_family(h)) == h
    elapsed = time.perf_counter() - start
    ok = fixture and trip_a == 100 and tried_b == 100 and trip_b == tried_b and elapsed < 120
    criterion(8, ok, f"words sigma^e3={''.join(map(str, words[(0, 0, 1)]))}, sigma^2e3={''.join(map(str, words[(0, 0, 2)]))}; "
                     f"round trip A {trip_a}/100, B {trip_b}/{tried_b}, {elapsed:.1f}s (limit 120s)")
    assert ok


def test_criterion_09_restricted_powers(criterion):
    u = (1, 1, 1, 1)
    setup = restricted_power_setup(4, 2, u)
    hx_ok, hx_w = is_cellular_resolution(setup["hypersimplex"])
    mo_ok, mo_w = is_cellular_resolution(setup["morse"])
    betti = total_betti(taylor_betti(enumerate_points(4, 2, u)))
    ranks = restricted_ranks(4, 2, u)
    trunc = verify_polarization_bruteforce(standard_family(4, 2, u))
    ok = hx_ok and mo_ok and betti == ranks and trunc
    criterion(9, ok, f"u=1111, (4,2): hypersimplex acyclic {hx_ok}, Morse acyclic {mo_ok}, "
                     f"Betti {betti} vs L-ranks {ranks}, truncated standard family {trunc}")
    assert ok


def test_criterion_10_enumeration(criterion):
    start = time.perf_counter()
    notes, ok = [], True
    for n, d in [(3, 2), (3, 3)]:
        res = enumerate_polarizations(n, d)
        again = enumerate_polarizations(n, d, verify=False)
        golden = json.loads((DATA / f"polarizations_{n}_{d}.json").read_text())
        got = [{"graph": io.graph_to_json(r["graph"]), "family": io.family_to_json(r["family"])} for r in res["results"]]
        keys = [json.dumps(g["graph"]) for g in got]
        rerun = [json.dumps(io.graph_to_json(r["graph"])) for r in again["results"]]
        stable = got == golden["results"] and rerun == keys
        unique = len(set(keys)) == len(keys)
        oracle = all(r["oracle"] for r in res["results"])
        header = golden.get("provenance", {}).get("kind") == "derived"
        ok = ok and stable and unique and oracle and header and golden["count"] == res["count"]
        notes.append(f"({n},{d}) {res['count']} graphs")
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 900
    criterion(10, ok, f"{', '.join(notes)}; golden-stable, duplicate-free, all pass the oracle, {elapsed:.1f}s (limit 900s)")
    assert ok
