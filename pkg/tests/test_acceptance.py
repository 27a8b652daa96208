"""Acceptance criteria 1-11, one test each; every test prints a PASS/FAIL line."""

import contextlib
import io
import json
import time
from fractions import Fraction

from hopfeq import catalog, serialize
from hopfeq.cli import main
from hopfeq.comodule import (
    can_map_comodule, detect_grading, grading_to_coaction, grouplike_basis, support_coalgebra,
    universal_hopf_presentation,
)
from hopfeq.exactlin import Field, Matrix, span
from hopfeq.grading import (
    character_action, dual_action, grading_equivalent, presentation_order, universal_group, verify_regrading,
)
from hopfeq.hident import codim, codim_equiv_check, codim_series, graded_codim, growth_check
from hopfeq.modulealg import (
    action_universal_group_membership, check_module_algebra, classify_dual_numbers, cocommutative_data,
    cocommutativity_obstruction, correspondence, enumerate_G0, support_equiv_modules,
)
from hopfeq.errors import InvalidStructure
from hopfeq.structconst import FiniteGroup, check_algebra, check_hopf
from gauntlet import run_gauntlet
from oracles import dense_codim, fp_group_order

Q = Field.Q()
F5 = Field.Fp(5)


def report(capsys, number, title, checks):
    """Print one line for the criterion and fail with the first broken check."""
    broken = [label for label, ok in checks if not ok]
    status = "PASS" if not broken else "FAIL"
    with capsys.disabled():
        print(f"\n[criterion {number:2d}] {status}: {title}" + (f" (broken: {', '.join(broken)})" if broken else ""))
    assert not broken, broken


def diagonal_span(n):
    return span(Q, [Matrix.diag(Q, [int(i == k) for i in range(n)]).flat() for k in range(n)], n * n)


def test_criterion_01_axiom_gauntlet(capsys):
    start = time.perf_counter()
    checks = []
    for name in ["dual-numbers", "m2", "ab-algebra"]:
        checks.append((name, check_algebra(catalog.builtin(name), require_unit=True).ok))
    for name in ["group-algebra-z2", "group-algebra-z4", "group-algebra-s3", "dual-group-algebra-z2",
                 "dual-group-algebra-z4", "dual-group-algebra-s3", "sweedler", "sweedler-dual"]:
        checks.append((name, check_hopf(catalog.builtin(name)).ok))
    results = run_gauntlet()
    checks.append(("at least 20 corrupted variants", len(results) >= 20))
    for name, label, rep in results:
        localized = any(f["witness"] is not None for f in rep.failures)
        checks.append((f"{name}: {label}", not rep.ok and localized))
    elapsed = time.perf_counter() - start
    checks.append((f"runtime {elapsed:.2f}s < 5s", elapsed < 5))
    report(capsys, 1, f"builtins pass, {len(results)} corruptions fail with witnesses ({elapsed:.2f}s)", checks)


def test_criterion_02_example_gradings_equivalent(capsys, tmp_path):
    s3, z4 = catalog.builtin("ab-algebra-s3"), catalog.builtin("ab-algebra-z4")
    dec = grading_equivalent(s3, z4, "identity")
    expected = {"id": "0", "(12)": "1", "(23)": "2", "(123)": "3"}
    serialize.dump(s3, tmp_path / "s3.json")
    serialize.dump(z4, tmp_path / "z4.json")
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(["equiv", "--kind", "grading", str(tmp_path / "s3.json"), str(tmp_path / "z4.json"),
                     "--iso", "identity"])
    cli_rep = json.loads(buf.getvalue())
    z1, z2 = dual_action(s3), dual_action(z4)
    mod = support_equiv_modules(z1, z2)
    diag = diagonal_span(4)
    report(capsys, 2, "example gradings equivalent via identity; dual spans are the diagonal algebra", [
        ("equiv true", dec.value),
        ("support bijection", dec.certificate["bijection_names"] == expected),
        ("cli exit 0", code == 0),
        ("cli bijection", cli_rep["certificate"]["bijection_names"] == expected),
        ("dual modules support equivalent", mod.value),
        ("spans equal the diagonal", z1.image_span() == diag and z2.image_span() == diag and diag.dim == 4),
    ])


def test_criterion_03_noncocommutativity_witness(capsys):
    z = catalog.builtin("ab-algebra-s3-dual")
    H, A = z.hopf, z.algebra
    h = H.basis_vector(H.basis_names.index("h_(123)"))
    first, second = cocommutativity_obstruction(z, h, A.basis_vector(1), A.basis_vector(2))
    w = catalog.builtin("ab-algebra-z4-dual")
    all_equal = True
    for k in range(w.hopf.dim):
        for i in range(4):
            for j in range(4):
                p, q = cocommutativity_obstruction(w, w.hopf.basis_vector(k), A.basis_vector(i), A.basis_vector(j))
                all_equal = all_equal and p == q
    report(capsys, 3, "obstruction at h_(123) on (a, b) is (ab, 0); the Z/4 action has none", [
        ("first is ab", first == A.basis_vector(3)),
        ("second is 0", second == (0, 0, 0, 0)),
        ("Z/4 equal pairs on all basis triples", all_equal),
    ])


def test_criterion_04_dual_numbers_classification(capsys):
    checks = []
    for name, case in [("dual-numbers-trivial", 1), ("dual-numbers-z2", 2), ("dual-numbers-h4", 3)]:
        z = catalog.builtin(name)
        checks.append((f"{name} case {case}", classify_dual_numbers(z)["case"] == case))
        for lam in (2, 3, -1):
            phi = Matrix.diag(Q, [1, lam])
            moved = z.transport(phi, phi.inverse())
            checks.append((f"{name} conjugated by diag(1,{lam})", classify_dual_numbers(moved)["case"] == case))
    bad = catalog.builtin("dual-numbers-h4-bad")
    try:
        classify_dual_numbers(bad)
        rejected = False
    except InvalidStructure:
        rejected = True
    checks.append(("bad H4 candidate fails the module-algebra check", not check_module_algebra(bad).ok))
    checks.append(("bad H4 candidate rejected before classification", rejected))
    report(capsys, 4, "cases 1, 2, 3; stable under diag(1, lambda); incompatible action rejected", checks)


def test_criterion_05_cocommutative_data(capsys):
    data = cocommutative_data(catalog.builtin("dual-numbers-z2"))
    L0 = data.L0_basis
    g0 = enumerate_G0(catalog.builtin("dual-numbers-z2", F5))
    expected = {tuple(Matrix.diag(F5, [1, lam]).flat()) for lam in (1, 2, 3, 4)}
    zq = catalog.builtin("dual-numbers-z2")
    member = lambda d: action_universal_group_membership(zq, Matrix.diag(Q, d))
    report(capsys, 5, "L0 = span{diag(0,1)}; G0 over F5 = {diag(1, l)}; membership over Q", [
        ("L0 dim 1", len(L0) == 1),
        ("L0 is diag(0,1)", span(Q, [m.flat() for m in L0], 4) == span(Q, [(0, 0, 0, 1)], 4)),
        ("G0 has 4 elements", len(g0) == 4),
        ("G0 = diag(1, l)", {tuple(m.flat()) for m in g0} == expected),
        ("accepts diag(1,7)", member([1, 7])),
        ("rejects diag(1,0)", not member([1, 0])),
        ("rejects diag(2,1)", not member([2, 1])),
    ])


def test_criterion_06_universal_group(capsys):
    gr = catalog.builtin("m2-z2-grading")
    pres = universal_group(gr)
    order = presentation_order(pres)
    ok_z2 = verify_regrading(gr, FiniteGroup.cyclic(2), {"0": "0", "1": "1"})
    triv = verify_regrading(gr, FiniteGroup.trivial(), {"0": "e", "1": "e"})
    report(capsys, 6, "M2 Z/2-grading: universal group of order 2 with abelianization Z/2", [
        ("coset enumeration order 2", order["order"] == 2),
        ("sympy coset oracle order 2", fp_group_order(pres.ngens, pres.relations) == 2),
        ("abelianization Z/2", pres.abelianization == [2]),
        ("regrading to Z/2 passes", ok_z2.ok),
        ("trivial group: non-injective support", not triv.ok and triv.details["injective_on_support"] is False),
    ])


def test_criterion_07_support_coalgebra(capsys):
    checks = []
    gradings = [n for n in catalog.names("grading") if n != "ab-algebra-s3-swapped"]
    for name in gradings:
        gr = catalog.builtin(name)
        rho = grading_to_coaction(gr)
        sc = support_coalgebra(rho)
        found = detect_grading(rho)
        checks.append((f"{name}: dim C = |supp|", sc.dim == len(gr.support())))
        checks.append((f"{name}: group-like basis", grouplike_basis(sc) is not None))
        checks.append((f"{name}: detect_grading round trip",
                       found is not None and grading_equivalent(gr, found[1]).value))
    rho = catalog.builtin("regular-h4")
    sc = support_coalgebra(rho)
    checks.append(("Delta of H4: C = H4", sc.dim == 4))
    checks.append(("Delta of H4: no grading", detect_grading(rho) is None))
    report(capsys, 7, f"support coalgebras of {len(gradings)} grading coactions; H4 collapses to absent", checks)


def test_criterion_08_hopf_galois(capsys):
    checks = []
    for name in ["regular-z2", "regular-z4", "regular-h4", "smash-dual-numbers-h4"]:
        rep = can_map_comodule(catalog.builtin(name))
        checks.append((f"{name} bijective", rep.details["bijective"]))
        if name in ("regular-z4", "regular-h4"):
            checks.append((f"{name} 16x16 rank 16", rep.details["matrix"].shape == (16, 16) and rep.details["rank"] == 16))
    rep = can_map_comodule(catalog.builtin("m2-trivial-coaction"))
    checks.append(("trivial coaction on M2 not surjective", rep.details["surjective"] is False and not rep.ok))
    report(capsys, 8, "can is bijective for FZ/2, FZ/4, H4 and dual-numbers # H4; rejected for trivial M2", checks)


def test_criterion_09_presentation_soundness(capsys):
    checks = []
    total = 0
    for name in catalog.names("coaction"):
        pres = universal_hopf_presentation(catalog.builtin(name))
        total += len(pres.relations)
        checks.append((f"{name} counits", all(pres.counit_value(r) == 0 for r in pres.relations)))
        checks.append((f"{name} coideal identity", pres.checks["coideal_identity"]))
    report(capsys, 9, f"all {total} relations over {len(catalog.names('coaction'))} coactions have counit 0", checks)


def test_criterion_10_codimensions(capsys):
    start = time.perf_counter()
    checks = []
    names = ["dual-numbers-trivial", "dual-numbers-z2", "dual-numbers-h4"]
    zs = [catalog.builtin(n) for n in names]
    c1 = [codim(z, 1) for z in zs]
    checks.append(("c1 = (1, 2, 3)", c1 == [1, 2, 3]))
    checks.append(("c1 matches dense oracle", c1 == [dense_codim(z, 1) for z in zs]))
    series = {}
    for name, z in zip(names, zs):
        series[name] = codim_series(z, 5)
        for n in range(1, 6):
            sharded = codim(z, n, shard_size=17)
            checks.append((f"{name} n={n} sharded = dense", sharded == dense_codim(z, n) == series[name].values[n - 1]))
    pairs = [(catalog.builtin("ab-algebra-s3-dual"), catalog.builtin("ab-algebra-z4-dual"), None)]
    h4 = zs[2]
    phi = Matrix.diag(Q, [1, 3])
    pairs.append((h4, h4.transport(phi, phi.inverse()), phi))
    for i, (z1, z2, p) in enumerate(pairs):
        for n in range(1, 5):
            checks.append((f"pair {i} n={n} equal codim", codim_equiv_check(z1, z2, p, n)["equal"]))
    for gname in [n for n in catalog.names("grading") if n != "ab-algebra-s3-swapped"]:
        for n in (1, 2, 3):
            checks.append((f"{gname} graded n={n}", graded_codim(catalog.builtin(gname), n)["equal"]))
    gh = growth_check(series["dual-numbers-h4"])
    ratio = gh["last_ratio"]
    checks.append(("H4 d = 0", series["dual-numbers-h4"].d == 0))
    checks.append((f"H4 c5/c4 = {ratio} in [1, 3]", Fraction(1) <= ratio <= Fraction(3) and gh["ok"]))
    z2 = series["dual-numbers-z2"]
    gz = growth_check(z2)
    checks.append(("FZ/2 d = 1", z2.d == 1))
    checks.append(("FZ/2 polynomial bound", gz["polynomial_bound"]["holds"] and z2.values[4] <= z2.values[3] + 2))
    elapsed = time.perf_counter() - start
    checks.append((f"runtime {elapsed:.0f}s < 600s", elapsed < 600))
    vals = {n.split("-")[-1]: series[n].values for n in names}
    report(capsys, 10, f"codimensions {vals}, H4 ratio {ratio} ({elapsed:.1f}s)", checks)


def test_criterion_11_roundtrips(capsys):
    checks = []
    for name in catalog.names("module") + catalog.names("coaction"):
        x = catalog.builtin(name)
        y = correspondence(x)
        checks.append((f"{name} round trip", correspondence(y) == x))
        if hasattr(x, "coeff"):
            same = all(y.action[k][b, a] == x.coeff[b][a][k]
                       for k in range(x.hopf.dim) for a in range(x.algebra.dim) for b in range(x.algebra.dim))
        else:
            same = all(y.coeff[b][a][k] == x.action[k][b, a]
                       for k in range(x.hopf.dim) for a in range(x.algebra.dim) for b in range(x.algebra.dim))
        checks.append((f"{name} coefficient data shared", same))
    gr = catalog.builtin("dual-numbers-z4-grading")
    checks.append(("Z/4 over F5: character span = dual span",
                   gr.field == F5 and character_action(gr).image_span() == dual_action(gr).image_span()))
    for name in ["m2-z2-grading", "dual-numbers-z2-grading"]:
        g = catalog.builtin(name)
        checks.append((f"{name}: character span = dual span", character_action(g).image_span() == dual_action(g).image_span()))
    report(capsys, 11, "module <-> comodule correspondence is the identity; character and dual spans agree", checks)
