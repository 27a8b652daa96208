import pytest
from hypothesis import given, settings, strategies as st

from hopfeq import catalog
from hopfeq.errors import BudgetExceeded
from hopfeq.exactlin import Field, Matrix, span
from hopfeq.grading import (
    Grading, character_action, check_grading, coset_enumeration, dual_action, dual_span, grading_equivalent,
    grading_finer, presentation_order, trivial_grading, universal_group, verify_regrading,
)
from hopfeq.structconst import FiniteGroup, group_algebra
from oracles import fp_group_order, smith_invariants

Q = Field.Q()
F5 = Field.Fp(5)


def test_example_gradings_equivalent_with_bijection():
    dec = grading_equivalent(catalog.builtin("ab-algebra-s3"), catalog.builtin("ab-algebra-z4"), "identity")
    assert dec.value
    assert dec.certificate["bijection_names"] == {"id": "0", "(12)": "1", "(23)": "2", "(123)": "3"}


def test_swapped_grading_rejected():
    rep = check_grading(catalog.builtin("ab-algebra-s3-swapped"))
    assert not rep.ok
    assert rep.failures[0]["witness"]["names"] == ["(23)", "(12)"]


def test_m2_grading_vs_trivial():
    g = catalog.builtin("m2-z2-grading")
    t = catalog.builtin("m2-trivial-grading")
    assert not grading_equivalent(g, t).value
    assert grading_finer(g, t)
    assert not grading_finer(t, g)


def test_universal_group_m2():
    pres = universal_group(catalog.builtin("m2-z2-grading"))
    assert pres.abelianization == [2]
    assert presentation_order(pres)["order"] == 2
    assert fp_group_order(pres.ngens, pres.relations) == 2


def test_universal_group_ab_algebra_is_infinite():
    # both gradings give the same presentation; its abelianization is free of rank 2
    p1 = universal_group(catalog.builtin("ab-algebra-s3"))
    p2 = universal_group(catalog.builtin("ab-algebra-z4"))
    assert p1.relations == p2.relations
    assert p1.abelianization == [0, 0]
    assert presentation_order(p1, max_cosets=500)["status"] == "budget exceeded"


def test_abelianization_matches_determinantal_oracle():
    for name in ["m2-z2-grading", "ab-algebra-s3", "dual-numbers-z2-grading"]:
        pres = universal_group(catalog.builtin(name))
        rows = pres.relation_matrix()
        torsion = [d for d in smith_invariants(rows) if d > 1]
        free = pres.ngens - len(smith_invariants(rows))
        assert pres.abelianization == torsion + [0] * free


def test_regrading_checks():
    gr = catalog.builtin("m2-z2-grading")
    assert verify_regrading(gr, FiniteGroup.cyclic(2), {0: 0, 1: 1}).ok
    rep = verify_regrading(gr, FiniteGroup.trivial(), {0: 0, 1: 0})
    assert not rep.ok
    assert rep.details["injective_on_support"] is False
    assert rep.details["homomorphism_exists"] is True


@pytest.mark.parametrize("gname", ["z2", "z4", "s3"])
def test_natural_grading_of_group_algebra(gname):
    # F G graded by G: universal group is G itself
    G = catalog.group(gname)
    A = group_algebra(G, Q).algebra
    gr = Grading(A, G, {g: [A.basis_vector(g)] for g in range(G.order)})
    assert check_grading(gr).ok
    pres = universal_group(gr)
    assert coset_enumeration(pres.ngens, pres.relations) == G.order
    assert fp_group_order(pres.ngens, pres.relations) == G.order


@pytest.mark.parametrize("relators, order", [
    ([[(0, 2)]], 2),
    ([[(0, 3)], [(1, 2)], [(0, 1), (1, 1), (0, 1), (1, 1)]], 6),
    ([[(0, 4)], [(1, 4)], [(0, 1), (1, 1), (0, -1), (1, -1)]], 16),
])
def test_coset_enumeration_against_sympy(relators, order):
    ngens = 1 + max(g for w in relators for g, _ in w)
    assert coset_enumeration(ngens, relators) == order
    assert fp_group_order(ngens, relators) == order


def test_coset_enumeration_budget():
    with pytest.raises(BudgetExceeded):
        coset_enumeration(2, [], max_cosets=50)


def test_character_action_matches_dual_action_over_f5():
    gr = catalog.builtin("dual-numbers-z4-grading")
    assert gr.field == F5
    chars = character_action(gr)
    assert chars.image_span() == dual_action(gr).image_span()
    assert chars.action[1] == Matrix.diag(F5, [1, 2])


def test_dual_span_is_diagonal_for_example_gradings():
    s = dual_span(catalog.builtin("ab-algebra-s3"))
    assert s.dim == 4
    assert s == span(Q, [Matrix.diag(Q, [int(i == k) for i in range(4)]).flat() for k in range(4)], 16)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(1, 6), min_size=1, max_size=1), st.sampled_from(["m2-z2-grading", "ab-algebra-z4"]))
def test_equivalence_invariant_under_homogeneous_rescaling(ls, name):
    # diagonal automorphisms rescale homogeneous elements and keep the grading
    gr = catalog.builtin(name)
    lam = Q(ls[0])
    if name == "m2-z2-grading":
        P = Matrix.diag(Q, [1, lam, 1 / lam, 1])  # conjugation by diag(1, 1/lam)
    else:
        P = Matrix.diag(Q, [1, lam, lam, lam * lam])
    dec = grading_equivalent(gr, gr, P)
    assert dec.value


def test_trivial_grading_support():
    gr = trivial_grading(catalog.builtin("m2"))
    assert gr.support() == [0]
    pres = universal_group(gr)
    assert pres.abelianization == []
    assert presentation_order(pres)["order"] == 1


def test_json_roundtrip():
    for name in catalog.names("grading"):
        gr = catalog.builtin(name)
        again = Grading.from_json(gr.to_json())
        assert again.to_json() == gr.to_json()
