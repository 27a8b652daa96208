from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from hopfeq import catalog
from hopfeq.comodule import induced_dual_module
from hopfeq.errors import BudgetExceeded
from hopfeq.exactlin import Field, Matrix
from hopfeq.hident import (
    MultilinearHPolynomial, StreamingRank, codim, codim_equiv_check, codim_series, evaluate, graded_codim,
    growth_check, is_identity, parse_polynomial,
)
from oracles import dense_codim, sympy_rank

Q = Field.Q()
F5 = Field.Fp(5)

DUAL = ["dual-numbers-trivial", "dual-numbers-z2", "dual-numbers-h4"]


def test_first_codimensions():
    assert [codim(catalog.builtin(n), 1) for n in DUAL] == [1, 2, 3]


# frozen from the dense oracle below
FROZEN = {
    "dual-numbers-trivial": [1, 1, 1, 1, 1],
    "dual-numbers-z2": [2, 3, 4, 5, 6],
    "dual-numbers-h4": [3, 7, 15, 31, 63],
}


@pytest.mark.parametrize("name", DUAL)
def test_frozen_series(name):
    assert codim_series(catalog.builtin(name), 5).values == FROZEN[name]


@pytest.mark.parametrize("name", DUAL + ["m2-z2-dual", "ab-algebra-z4-dual", "dual-numbers-z4-characters"])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_against_dense_oracle(name, n):
    assert codim(catalog.builtin(name), n) == dense_codim(catalog.builtin(name), n)


@pytest.mark.parametrize("shard", [1, 7, 64, 1000])
def test_sharding_does_not_change_rank(shard):
    z = catalog.builtin("dual-numbers-h4")
    assert codim(z, 4, shard_size=shard) == FROZEN["dual-numbers-h4"][3]


def test_ordinary_codimensions_of_m2():
    # closed formula for c_n(M_2) in characteristic zero
    expected = [comb(2 * n + 2, n + 1) // (n + 2) - comb(n, 3) + 1 - 2 ** n for n in range(1, 5)]
    assert codim_series(catalog.builtin("m2-trivial-dual"), 4).values == expected == [1, 2, 6, 23]


def test_support_equivalent_pairs_have_equal_codimensions():
    pairs = [
        (catalog.builtin("ab-algebra-s3-dual"), catalog.builtin("ab-algebra-z4-dual"), None),
        (catalog.builtin("m2-z2-dual"), induced_dual_module(catalog.builtin("m2-z2-coaction")), None),
    ]
    z = catalog.builtin("dual-numbers-h4")
    phi = Matrix.diag(Q, [1, 5])
    pairs.append((z, z.transport(phi, phi.inverse()), phi))
    for z1, z2, phi in pairs:
        for n in (1, 2, 3):
            assert codim_equiv_check(z1, z2, phi, n)["equal"]


def test_budget():
    z = catalog.builtin("dual-numbers-h4")
    with pytest.raises(BudgetExceeded):
        codim(z, 7)
    with pytest.raises(BudgetExceeded):
        codim(z, 3, budget=10)
    rep = codim_series(z, 7)
    assert rep.partial and rep.stopped_at == 6 and rep.values == FROZEN["dual-numbers-h4"]


def test_budget_environment(monkeypatch):
    monkeypatch.setenv("HOPFEQ_BUDGET", "100")
    with pytest.raises(BudgetExceeded):
        codim(catalog.builtin("dual-numbers-h4"), 3)


def test_growth_verdicts():
    h4 = codim_series(catalog.builtin("dual-numbers-h4"), 5)
    g = growth_check(h4)
    assert h4.d == 0 and g["ok"]
    assert Fraction(1) <= g["last_ratio"] <= Fraction(3)
    z2 = codim_series(catalog.builtin("dual-numbers-z2"), 5)
    g = growth_check(z2)
    assert z2.d == 1 and g["ok"] and g["polynomial_bound"]["holds"]
    assert z2.values[4] <= z2.values[3] + 2


def test_graded_codimensions_match_dual_action():
    for name in ["m2-z2-grading", "ab-algebra-s3", "ab-algebra-z4", "dual-numbers-z2-grading", "dual-numbers-z4-grading"]:
        for n in (1, 2, 3):
            assert graded_codim(catalog.builtin(name), n)["equal"]


def test_polynomial_parse_and_evaluate():
    p = parse_polynomial("x1^{h:0} x2^{h:0} - x2^{h:0} x1^{h:0}", Q)
    assert p.n == 2 and len(p.terms) == 2
    assert is_identity(p, catalog.builtin("dual-numbers-trivial")) == (True, None)
    ok, witness = is_identity(p, catalog.builtin("m2-trivial-dual"))
    assert not ok and witness is not None
    q = parse_polynomial("x1^{h:0+h:1}", Q)
    assert len(q.terms) == 2
    z = catalog.builtin("dual-numbers-z2")
    # (1 + c) x = x - x = 0
    assert evaluate(q, z, [1]) == (0, 0)
    with pytest.raises(ValueError):
        parse_polynomial("x1^{g:0}", Q)


def test_identities_of_the_h4_action():
    z = catalog.builtin("dual-numbers-h4")
    # v(x) v(x) = 1, so x1^v x2^v is not an identity
    assert is_identity(MultilinearHPolynomial.monomial((0, 1), (2, 2), field=Q), z) == (False, (1, 1))
    # v kills 1 and lands in F 1, so x1^v x2^v x3^v vanishes unless all three are x, where it is 1
    assert not is_identity(MultilinearHPolynomial.monomial((0, 1, 2), (2, 2, 2), field=Q), z)[0]
    # products commute in the dual numbers
    comm = parse_polynomial("x1^{h:2} x2^{h:1} - x2^{h:1} x1^{h:2}", Q)
    assert is_identity(comm, z) == (True, None)


def test_transport_of_polynomial():
    p = MultilinearHPolynomial.monomial((0,), (1,), field=Q)
    xi = [(1, 0), (0, 2)]
    assert p.transport(xi).terms == [(2, (0,), (1,))]


@settings(max_examples=30, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=5, max_size=5), min_size=1, max_size=12),
       st.sampled_from([None, 7]))
def test_streaming_rank_matches_sympy(rows, p):
    import numpy as np
    red = StreamingRank(5, p)
    red.add_rows(np.array(rows, dtype=object))
    assert red.rank == sympy_rank(rows, p)


@settings(max_examples=15, deadline=None)
@given(st.integers(-9, 9).filter(bool), st.sampled_from(DUAL))
def test_codim_invariant_under_conjugation(lam, name):
    z = catalog.builtin(name)
    phi = Matrix.diag(Q, [1, lam])
    moved = z.transport(phi, phi.inverse())
    assert [codim(moved, n) for n in (1, 2, 3)] == FROZEN[name][:3]
