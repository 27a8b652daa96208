import pytest
from hypothesis import given, settings, strategies as st

from hopfeq import catalog
from hopfeq.errors import NotAnIsomorphism, NotUnital
from hopfeq.exactlin import Field, Matrix
from hopfeq.structconst import (
    FinAlgebra, FinHopf, FiniteGroup, check_algebra, check_group, check_hopf, dual_group_algebra, dual_hopf,
    find_unit, group_algebra, grouplike_search, grouplikes, primitives, require_isomorphism, smash_product,
)
from gauntlet import run_gauntlet
from oracles import brute_force_grouplikes

Q = Field.Q()
F3 = Field.Fp(3)
F5 = Field.Fp(5)

HOPF = ["group-algebra-z2", "group-algebra-z4", "group-algebra-s3", "dual-group-algebra-z2",
        "dual-group-algebra-z4", "dual-group-algebra-s3", "sweedler", "sweedler-dual", "trivial-hopf"]
ALGEBRAS = ["dual-numbers", "m2", "ab-algebra"]


@pytest.mark.parametrize("name", HOPF)
@pytest.mark.parametrize("field", [Q, F3, F5])
def test_builtin_hopf_algebras_pass(name, field):
    rep = check_hopf(catalog.builtin(name, field))
    assert rep.ok, rep.failures


@pytest.mark.parametrize("name", ALGEBRAS)
def test_builtin_algebras_pass(name):
    rep = check_algebra(catalog.builtin(name), require_unit=True)
    assert rep.ok and rep.details["unital"]


def test_gauntlet_every_variant_fails_with_witness():
    results = run_gauntlet()
    assert len(results) >= 20
    for name, label, rep in results:
        assert not rep.ok, (name, label)
        assert any(f["witness"] is not None for f in rep.failures), (name, label)


def test_sweedler_relations():
    H = catalog.sweedler(Q)
    c, v = H.basis_vector(1), H.basis_vector(2)
    assert H.multiply(c, c) == H.one
    assert H.multiply(v, v) == (0, 0, 0, 0)
    assert H.multiply(v, c) == tuple(-x for x in H.multiply(c, v))
    assert not H.is_cocommutative()


def test_double_dual_is_original():
    for name in HOPF:
        H = catalog.builtin(name)
        assert dual_hopf(dual_hopf(H)) == H


def test_dual_of_group_algebra_is_function_algebra():
    G = FiniteGroup.symmetric3()
    assert dual_hopf(group_algebra(G, Q)) == dual_group_algebra(G, Q)


def test_grouplikes_known():
    assert len(grouplikes(catalog.builtin("group-algebra-s3"))) == 6
    assert len(grouplikes(catalog.builtin("dual-group-algebra-s3"))) == 2   # characters of S_3
    assert len(grouplikes(catalog.builtin("dual-group-algebra-z4"))) == 2   # no 4th roots of unity in Q
    assert len(grouplikes(catalog.builtin("dual-group-algebra-z4", F5))) == 4
    assert set(grouplikes(catalog.builtin("sweedler"))) == {(1, 0, 0, 0), (0, 1, 0, 0)}
    assert len(grouplikes(catalog.builtin("sweedler-dual"))) == 2


def test_primitives():
    assert primitives(catalog.builtin("group-algebra-z2")).dim == 0
    assert primitives(catalog.builtin("sweedler")).dim == 0


@pytest.mark.parametrize("name", HOPF)
@pytest.mark.parametrize("field", [F3, F5])
def test_grouplike_methods_agree_with_brute_force(name, field):
    H = catalog.builtin(name, field)
    oracle = brute_force_grouplikes(H)
    eig = grouplike_search(H, method="eigen")
    exh = grouplike_search(H, method="exhaustive")
    key = lambda v: tuple(x.v for x in v)
    assert sorted(eig.details["grouplikes"], key=key) == oracle
    assert sorted(exh.details["grouplikes"], key=key) == oracle


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 6), st.sampled_from([Q, F5]))
def test_cyclic_group_algebra_properties(n, field):
    H = group_algebra(FiniteGroup.cyclic(n), field)
    assert check_hopf(H).ok
    assert H.is_cocommutative()
    assert len(grouplikes(H)) == n
    assert dual_hopf(dual_hopf(H)) == H


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(["z2", "z4", "s3"]), st.sampled_from(["z2", "trivial"]))
def test_product_groups(a, b):
    G = FiniteGroup.product(catalog.group(a), catalog.group(b))
    assert check_group(G).ok
    assert check_hopf(group_algebra(G, Q)).ok


def test_s3_composition_convention():
    G = FiniteGroup.symmetric3()
    assert G.names[G.mul(G.index("(12)"), G.index("(23)"))] == "(123)"
    assert not G.is_abelian()
    assert G.exponent() == 6


def test_unit_detection():
    A = catalog.dual_numbers(Q)
    bare = FinAlgebra(Q, A.mult)
    assert find_unit(bare) == (1, 0)
    with pytest.raises(NotUnital):
        bare.one
    nil = FinAlgebra(Q, [[(0,)]])
    assert find_unit(nil) is None


def test_require_isomorphism():
    A = catalog.dual_numbers(Q)
    phi, inv = require_isomorphism(A, A, Matrix.diag(Q, [1, 3]))
    assert phi @ inv == Matrix.identity(Q, 2)
    with pytest.raises(NotAnIsomorphism):
        require_isomorphism(A, A, Matrix.diag(Q, [2, 1]))
    with pytest.raises(NotAnIsomorphism):
        require_isomorphism(A, catalog.matrix_algebra_2(Q), "identity")


def test_smash_product_is_associative():
    B, rho = smash_product(catalog.dual_numbers_h4(Q))
    assert B.dim == 8
    assert check_algebra(B, require_unit=True).ok


def test_json_roundtrip():
    for name in HOPF:
        H = catalog.builtin(name)
        assert FinHopf.from_json(H.to_json()) == H
