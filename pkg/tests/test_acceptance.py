"""Acceptance suite: one test per criterion, each printing a single PASS/FAIL line.

The lines are also collected and repeated in the terminal summary (see conftest).
Criterion 4 fails on purpose: the printed G2 bracket table and eigen-identities
do not agree with the matrices they are stated for, and this suite reports that
rather than bending the check.
"""

import json
import subprocess
import sys
import time
from itertools import combinations, product

from hypothesis import given, settings, strategies as st

from wolfcheck import g2_model, wolf
from wolfcheck.catalog import DEFAULT_CATALOG, parse_space
from wolfcheck.chevalley import (ChevalleyAlgebra, basis_triples, build_structure_constants, invariance_failures,
                                 jacobi_failures)
from wolfcheck.cli import TABLE_CATALOG
from wolfcheck.errors import NoDeltaError
from wolfcheck.gaussian import GaussianRational
from wolfcheck.roots import RootSystemType, build_root_system

RESULTS: list[str] = []


def report(n: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"criterion {n} {'PASS' if ok else 'FAIL'}: {title}" + (f" ({detail})" if detail else "")
    RESULTS.append(line)
    print(line)
    assert ok, line


def wd_of(name):
    return wolf.decomposition_for(RootSystemType.parse(name))


def test_criterion_1_tables():
    start = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "wolfcheck.cli", "tables", "--json", "/dev/stdout"],
                          capture_output=True, text=True)
    elapsed = time.perf_counter() - start
    rows = json.loads(proc.stdout)
    bad = []
    for r in rows:
        for key in ("dim_M", "dim_Hp", "dim_N", "dim_Kp"):
            want = r["published"][key]
            if want is None or r["computed"][key] != want:
                bad.append(f"{r['space']} {key}: {r['computed'][key]} vs {want}")
    want_m = {"G": 8, "FI": 28, "EII": 40, "EVI": 64, "EIX": 112}
    for r in rows:
        if r["space"] in want_m and r["computed"]["dim_M"] != want_m[r["space"]]:
            bad.append(r["space"])
        if r["group"].startswith("SU("):
            n = int(r["group"][3:-1])
            if r["computed"]["dim_M"] != 4 * (n - 2):
                bad.append(r["group"])
        if r["group"].startswith("Spin("):
            n = int(r["group"][5:-1])
            if r["computed"]["dim_M"] != 4 * (n - 4):
                bad.append(r["group"])
    ok = proc.returncode == 0 and not bad and len(rows) == len(TABLE_CATALOG) and elapsed < 60
    report(1, "table reproduction", ok, f"{len(rows)} rows in {elapsed:.1f}s" + (f"; {bad[:3]}" if bad else ""))


def test_criterion_2_lemmas():
    failures = []
    for name in DEFAULT_CATALOG:
        spec = parse_space(name)
        wd = wolf.decomposition_for(spec.rtype)
        model = wolf.build_submanifold_model(wd, wolf.choose_delta(wd))
        for lemma, v in wolf.lemma_verdicts(model, wd).items():
            if not v.ok:
                failures.append(f"{spec.name} {lemma}: {v.witnesses[:1]}")
        if 2 * model.m_N.dim != wd.m.dim:
            failures.append(f"{spec.name}: 2 dim m_N = {2 * model.m_N.dim}, dim m = {wd.m.dim}")
    report(2, "lemma suite", not failures, f"{len(DEFAULT_CATALOG)} spaces" + (f"; {failures[:3]}" if failures else ""))


def test_criterion_3_sp_exclusion():
    raised = []
    for n in range(2, 9):
        try:
            wolf.choose_delta(wd_of(f"C{n}"))
        except NoDeltaError:
            raised.append(n)
    report(3, "Sp exclusion", raised == list(range(2, 9)), f"NoDeltaError for C{raised[0]}..C{raised[-1]}")


def test_criterion_4_g2_golden_table():
    lines = g2_model.bracket_table()
    mismatched = [f"[{ln.left}, {ln.right}] printed {ln.printed}, computed {ln.computed}"
                  for ln in lines if not ln.match]
    root_data = g2_model.verify_root_data()
    grid = [t for t in product(range(-2, 3), repeat=3) if sum(map(abs, t)) <= 3]
    form_bad = 0
    for i in range(1, 8):
        for p in grid:
            for q in grid:
                if g2_model.model_form(g2_model.v(i, *p), g2_model.v(i, *q)) != 8 * sum(a * b for a, b in zip(p, q)):
                    form_bad += 1
    for i, j in combinations(range(1, 8), 2):
        if g2_model.model_form(g2_model.v(i, 1, 2, -3), g2_model.v(j, 2, -1, -1)):
            form_bad += 1
    ok = not mismatched and root_data.ok and not form_bad
    detail = (f"{9 - len(mismatched)}/9 brackets match, eigen-identities "
              f"{'hold' if root_data.ok else 'fail as printed'}, form grid {'ok' if not form_bad else form_bad}")
    if mismatched:
        detail += "; " + "; ".join(mismatched)
    report(4, "G2 golden table", ok, detail)


def test_criterion_5_not_totally_geodesic():
    dec = g2_model.g2_decomposition()
    table = {(lx, ly): val for lx, ly, val in g2_model.sff_table(dec)}
    symmetric = all(val == table[(ly, lx)] for (lx, ly), val in table.items())
    nonzero = sum(1 for val in table.values() if val)
    v7 = g2_model.v(7, 4, 1, -5)
    witness = dec.N_aL.project(v7) == g2_model.v(7, *g2_model.TWO) * 2
    verdict = g2_model.verify_not_totally_geodesic(dec).ok
    report(5, "not totally geodesic", symmetric and nonzero > 0 and witness and verdict,
           f"{nonzero} nonzero values, pi(V7(4,1,-5)) = 2 V7(2,-1,-1): {witness}")


def _alg(name):
    rs = build_root_system(name)
    return ChevalleyAlgebra(rs, build_structure_constants(rs))


_cache = {}


@settings(max_examples=40)
@given(st.sampled_from(["B3", "G2", "F4"]), st.data())
def _engine_property(name, data):
    a = _cache.setdefault(name, _alg(name))
    gauss = st.builds(GaussianRational, st.integers(-2, 2), st.integers(-2, 2))
    elems = []
    for _ in range(3):
        d = data.draw(st.dictionaries(st.integers(0, a.dim - 1), gauss, max_size=3))
        elems.append(sum((a.element(a.basis_index(k), c) for k, c in d.items()), a.zero()))
    x, y, z = elems
    br = a.bracket
    assert br(x, y) == -br(y, x)
    assert not (br(x, br(y, z)) + br(y, br(z, x)) + br(z, br(x, y)))
    assert a.invariant_form(br(z, x), y) + a.invariant_form(x, br(z, y)) == 0
    rx, ry = x + a.tau(x), y + a.tau(y)
    assert a.tau(br(rx, ry)) == br(rx, ry)



def test_criterion_6_engine():
    problems = []
    small = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"]
    for name in small:
        a = _alg(name)
        n, bad = jacobi_failures(a, basis_triples(a.dim))
        if bad:
            problems.append(f"{name} Jacobi {bad[:1]}")
        els = a.compact_basis().elements
        for i, x in enumerate(els):
            for y in els[i:]:
                z = a.bracket(x, y)
                if a.tau(z) != z:
                    problems.append(f"{name} tau-closure")
                    break
        trip = basis_triples(a.dim) if a.dim <= 28 else basis_triples(a.dim, 5000, 1)
        if invariance_failures(a, trip):
            problems.append(f"{name} invariance")
    sampled = {}
    for name in ("E6", "E7", "E8"):
        a = _alg(name)
        n, bad = jacobi_failures(a, basis_triples(a.dim, samples=10_000, seed=0))
        sampled[name] = n
        if bad or n < 10_000:
            problems.append(f"{name} Jacobi {bad[:1]}")
        if invariance_failures(a, basis_triples(a.dim, 2000, 1)):
            problems.append(f"{name} invariance")
    for name in DEFAULT_CATALOG:
        v = wolf.quaternionic_relations(wd_of(parse_space(name).rtype.name))
        if not v.ok:
            problems.append(f"{name} quaternionic {v.witnesses[:1]}")
    try:
        _engine_property()
    except AssertionError as exc:
        problems.append(f"property test: {exc}")
    report(6, "engine properties", not problems,
           f"exhaustive Jacobi on {len(small)} types, sampled {sampled}" + (f"; {problems[:3]}" if problems else ""))


def test_criterion_7_cross_model():
    r = g2_model.cross_validate_with_abstract()
    report(7, "cross-model consistency", r.ok, f"dims {r.info.get('abstract_dims')} vs {r.info.get('matrix_dims')}")


def test_criterion_8_delta_independence():
    checked, problems = [], []
    for name in DEFAULT_CATALOG:
        wd = wolf.decomposition_for(parse_space(name).rtype)
        if len(wolf.valid_deltas(wd)) > 1:
            v = wolf.verify_delta_independence(wd)
            checked.append(f"{name}:{v.info['n_deltas']}")
            if not v.ok:
                problems.append(f"{name} {v.witnesses[:1]}")
    report(8, "delta independence", not problems and bool(checked), ", ".join(checked))
