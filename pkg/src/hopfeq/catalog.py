"""Builtin structures: dual numbers, M_2, the four-dimensional example algebra with
its two gradings, group algebras and their duals, the Sweedler algebra, and the
standard module and comodule structures on them."""

from __future__ import annotations

from .errors import UnknownExample
from .exactlin import Field, Matrix, unit_vector
from .structconst import (
    FinAlgebra, FinHopf, FiniteGroup, dual_group_algebra, dual_hopf, group_algebra, trivial_hopf,
)


def _vec(field, n, coords: dict):
    v = [field.zero] * n
    for i, c in coords.items():
        v[i] = field(c)
    return tuple(v)


def dual_numbers(field: Field) -> FinAlgebra:
    """``F[x]/(x^2)`` on the basis ``(1, x)``."""
    e = lambda i: unit_vector(field, 2, i)
    z = (field.zero,) * 2
    return FinAlgebra(field, [[e(0), e(1)], [e(1), z]], e(0), ["1", "x"])


def matrix_algebra_2(field: Field) -> FinAlgebra:
    """``M_2(F)`` on ``E11, E12, E21, E22``."""
    idx = [(0, 0), (0, 1), (1, 0), (1, 1)]
    mult = []
    for i, j in idx:
        row = []
        for k, l in idx:
            row.append(unit_vector(field, 4, idx.index((i, l))) if j == k else (field.zero,) * 4)
        mult.append(row)
    return FinAlgebra(field, mult, _vec(field, 4, {0: 1, 3: 1}), ["E11", "E12", "E21", "E22"])


def ab_algebra(field: Field) -> FinAlgebra:
    """Basis ``(1, a, b, ab)`` with ``a^2 = b^2 = ba = 0``; the only other product is ``a b = ab``."""
    n = 4
    z = (field.zero,) * n
    e = lambda i: unit_vector(field, n, i)
    mult = [[z] * n for _ in range(n)]
    for j in range(n):
        mult[0][j] = e(j)
        mult[j][0] = e(j)
    mult[1][2] = e(3)
    return FinAlgebra(field, mult, e(0), ["1", "a", "b", "ab"])


def sweedler(field: Field) -> FinHopf:
    """``H_4`` on ``(1, c, v, cv)``: ``c^2 = 1``, ``v^2 = 0``, ``vc = -cv``."""
    n = 4
    z = (field.zero,) * n
    e = lambda i: unit_vector(field, n, i)
    neg = lambda i: tuple(-x for x in e(i))
    mult = [[z] * n for _ in range(n)]
    for j in range(n):
        mult[0][j] = e(j)
        mult[j][0] = e(j)
    mult[1][1] = e(0)        # c c = 1
    mult[1][2] = e(3)        # c v = cv
    mult[1][3] = e(2)        # c cv = v
    mult[2][1] = neg(3)      # v c = -cv
    mult[3][1] = neg(2)      # cv c = -v
    delta = [
        {(0, 0): 1},
        {(1, 1): 1},
        {(1, 2): 1, (2, 0): 1},       # c (x) v + v (x) 1
        {(0, 3): 1, (3, 1): 1},       # 1 (x) cv + cv (x) c
    ]
    counit = [1, 1, 0, 0]
    antipode = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]  # S(v) = -cv, S(cv) = v
    return FinHopf.build(field, mult, e(0), delta, counit, antipode, ["1", "c", "v", "cv"])


GROUPS = {
    "z2": lambda: FiniteGroup.cyclic(2),
    "z4": lambda: FiniteGroup.cyclic(4),
    "s3": FiniteGroup.symmetric3,
    "trivial": FiniteGroup.trivial,
}


def group(name: str) -> FiniteGroup:
    try:
        return GROUPS[name]()
    except KeyError:
        raise UnknownExample(f"unknown group {name!r}") from None


# ----------------------------------------------------------------------------
# gradings

def m2_z2_grading(field):
    from .grading import Grading
    A = matrix_algebra_2(field)
    e = A.basis_vector
    return Grading(A, FiniteGroup.cyclic(2), {0: [e(0), e(3)], 1: [e(1), e(2)]})


def m2_trivial_grading(field):
    from .grading import trivial_grading
    return trivial_grading(matrix_algebra_2(field))


def ab_s3_grading(field, swapped: bool = False):
    from .grading import Grading
    A = ab_algebra(field)
    G = FiniteGroup.symmetric3()
    e = A.basis_vector
    a_slot, b_slot = ("(23)", "(12)") if swapped else ("(12)", "(23)")
    comps = {G.index("id"): [e(0)], G.index(a_slot): [e(1)], G.index(b_slot): [e(2)], G.index("(123)"): [e(3)]}
    return Grading(A, G, comps)


def ab_z4_grading(field):
    from .grading import Grading
    A = ab_algebra(field)
    e = A.basis_vector
    return Grading(A, FiniteGroup.cyclic(4), {0: [e(0)], 1: [e(1)], 2: [e(2)], 3: [e(3)]})


def dual_numbers_cyclic_grading(field, order: int):
    from .grading import Grading
    A = dual_numbers(field)
    e = A.basis_vector
    return Grading(A, FiniteGroup.cyclic(order), {0: [e(0)], 1: [e(1)]})


def dual_numbers_trivial_grading(field):
    from .grading import trivial_grading
    return trivial_grading(dual_numbers(field))


# ----------------------------------------------------------------------------
# module structures

def dual_numbers_trivial(field):
    from .modulealg import ModuleStructure
    return ModuleStructure(dual_numbers(field), trivial_hopf(field), [Matrix.identity(field, 2)])


def dual_numbers_z2(field):
    """``FZ/2`` with ``c x = -x``."""
    from .modulealg import ModuleStructure
    H = group_algebra(FiniteGroup.cyclic(2), field)
    return ModuleStructure(dual_numbers(field), H, [Matrix.identity(field, 2), Matrix.diag(field, [1, -1])])


def dual_numbers_h4(field, bad: bool = False):
    """``H_4`` with ``c x = -x``, ``v x = 1`` (or the broken ``v x = x`` when ``bad``)."""
    from .modulealg import ModuleStructure
    H = sweedler(field)
    c = Matrix.diag(field, [1, -1])
    v = Matrix(field, [[0, 0], [0, 1]]) if bad else Matrix(field, [[0, 1], [0, 0]])
    return ModuleStructure(dual_numbers(field), H, [Matrix.identity(field, 2), c, v, c @ v])


def dual_numbers_z4_characters(field):
    """Characters of ``Z/4`` acting on the ``Z/4``-graded dual numbers (needs a 4th root of unity)."""
    from .grading import character_action
    return character_action(dual_numbers_cyclic_grading(field, 4))


def m2_trivial_action(field):
    from .modulealg import trivial_action
    return trivial_action(matrix_algebra_2(field), group_algebra(FiniteGroup.cyclic(2), field))


def dual_numbers_group_action(field, order: int):
    """``Z/2`` by ``c -> diag(1,-1)``, or ``Z/4`` by ``c -> diag(1, w)`` for a primitive 4th root ``w``."""
    from .grading import _primitive_root
    from .modulealg import GroupAction
    G = FiniteGroup.cyclic(order)
    w = _primitive_root(field, order)
    if w is None:
        raise UnknownExample(f"{field} has no primitive {order}-th root of unity")
    return GroupAction.from_generator(G, dual_numbers(field), 1, Matrix.diag(field, [1, w]))


def dual_numbers_trivial_group_action(field):
    from .modulealg import GroupAction
    G = FiniteGroup.cyclic(2)
    I = Matrix.identity(field, 2)
    return GroupAction(G, dual_numbers(field), [I, I])


# ----------------------------------------------------------------------------

def _dual_action_of(builder):
    def f(field):
        from .grading import dual_action
        return dual_action(builder(field))
    return f


def _coaction_of(builder):
    def f(field):
        from .comodule import grading_to_coaction
        return grading_to_coaction(builder(field))
    return f


def _regular(builder):
    def f(field):
        from .comodule import regular_coaction
        return regular_coaction(builder(field))
    return f


def _regular_dual(builder):
    def f(field):
        from .modulealg import regular_action_on_dual
        return regular_action_on_dual(builder(field))[0]
    return f


def _smash(field):
    from .structconst import smash_product
    return smash_product(dual_numbers_h4(field))[1]


def _m2_trivial_coaction(field):
    from .comodule import trivial_coaction
    return trivial_coaction(matrix_algebra_2(field), group_algebra(FiniteGroup.cyclic(2), field))


def _trivial_coaction_dual_numbers(field):
    from .comodule import trivial_coaction
    return trivial_coaction(dual_numbers(field), trivial_hopf(field))


def _h4_module_as_comodule(field):
    from .modulealg import correspondence
    return correspondence(dual_numbers_h4(field))


F5 = 5

# name -> (kind, builder, default prime or None, description)
CATALOG = {
    "dual-numbers": ("algebra", dual_numbers, None, "F[x]/(x^2)"),
    "m2": ("algebra", matrix_algebra_2, None, "2x2 matrices"),
    "ab-algebra": ("algebra", ab_algebra, None, "algebra on 1, a, b, ab with ab the only nonzero product of a, b"),
    "group-algebra-z2": ("hopf", lambda f: group_algebra(group("z2"), f), None, "F Z/2"),
    "group-algebra-z4": ("hopf", lambda f: group_algebra(group("z4"), f), None, "F Z/4"),
    "group-algebra-s3": ("hopf", lambda f: group_algebra(group("s3"), f), None, "F S_3"),
    "dual-group-algebra-z2": ("hopf", lambda f: dual_group_algebra(group("z2"), f), None, "(F Z/2)*"),
    "dual-group-algebra-z4": ("hopf", lambda f: dual_group_algebra(group("z4"), f), None, "(F Z/4)*"),
    "dual-group-algebra-s3": ("hopf", lambda f: dual_group_algebra(group("s3"), f), None, "(F S_3)*"),
    "sweedler": ("hopf", sweedler, None, "Sweedler algebra H_4"),
    "sweedler-dual": ("hopf", lambda f: dual_hopf(sweedler(f), ["1*", "c*", "v*", "cv*"]), None, "H_4*"),
    "trivial-hopf": ("hopf", trivial_hopf, None, "the one-dimensional Hopf algebra F"),
    "m2-z2-grading": ("grading", m2_z2_grading, None, "Z/2-grading of M_2: diagonal / off-diagonal"),
    "m2-trivial-grading": ("grading", m2_trivial_grading, None, "trivial grading of M_2"),
    "ab-algebra-s3": ("grading", ab_s3_grading, None, "S_3-grading: 1, a, b, ab in id, (12), (23), (123)"),
    "ab-algebra-z4": ("grading", ab_z4_grading, None, "Z/4-grading: 1, a, b, ab in 0, 1, 2, 3"),
    "ab-algebra-s3-swapped": ("grading", lambda f: ab_s3_grading(f, True), None,
                             "invalid: a in (23), b in (12)"),
    "dual-numbers-z2-grading": ("grading", lambda f: dual_numbers_cyclic_grading(f, 2), None, "1 in 0, x in 1"),
    "dual-numbers-z4-grading": ("grading", lambda f: dual_numbers_cyclic_grading(f, 4), F5, "1 in 0, x in 1, over F_5"),
    "dual-numbers-trivial-grading": ("grading", dual_numbers_trivial_grading, None, "trivial grading"),
    "dual-numbers-trivial": ("module", dual_numbers_trivial, None, "F acting by scalars"),
    "dual-numbers-z2": ("module", dual_numbers_z2, None, "F Z/2 with c x = -x"),
    "dual-numbers-h4": ("module", dual_numbers_h4, None, "H_4 with c x = -x, v x = 1"),
    "dual-numbers-h4-action": ("module", dual_numbers_h4, None, "alias of dual-numbers-h4"),
    "dual-numbers-h4-bad": ("module", lambda f: dual_numbers_h4(f, True), None, "broken: v x = x"),
    "dual-numbers-z4-characters": ("module", dual_numbers_z4_characters, F5, "characters of Z/4 over F_5"),
    "m2-trivial-action": ("module", m2_trivial_action, None, "F Z/2 acting trivially on M_2"),
    "m2-z2-dual": ("module", _dual_action_of(m2_z2_grading), None, "(F Z/2)* action of the M_2 grading"),
    "m2-trivial-dual": ("module", _dual_action_of(m2_trivial_grading), None, "dual action of the trivial grading"),
    "ab-algebra-s3-dual": ("module", _dual_action_of(ab_s3_grading), None, "(F S_3)* action"),
    "ab-algebra-z4-dual": ("module", _dual_action_of(ab_z4_grading), None, "(F Z/4)* action"),
    "regular-dual-z2": ("module", _regular_dual(lambda f: group_algebra(group("z2"), f)), None,
                        "F Z/2 acting on its dual"),
    "regular-dual-h4": ("module", _regular_dual(sweedler), None, "H_4 acting on H_4*"),
    "regular-z2": ("coaction", _regular(lambda f: group_algebra(group("z2"), f)), None, "Delta of F Z/2"),
    "regular-z4": ("coaction", _regular(lambda f: group_algebra(group("z4"), f)), None, "Delta of F Z/4"),
    "regular-h4": ("coaction", _regular(sweedler), None, "Delta of H_4"),
    "m2-z2-coaction": ("coaction", _coaction_of(m2_z2_grading), None, "F Z/2 coaction of the M_2 grading"),
    "m2-trivial-coaction": ("coaction", _m2_trivial_coaction, None, "trivial F Z/2 coaction on M_2"),
    "m2-trivial-grading-coaction": ("coaction", _coaction_of(m2_trivial_grading), None, "trivial grading coaction"),
    "ab-algebra-s3-coaction": ("coaction", _coaction_of(ab_s3_grading), None, "F S_3 coaction"),
    "ab-algebra-z4-coaction": ("coaction", _coaction_of(ab_z4_grading), None, "F Z/4 coaction"),
    "dual-numbers-z2-coaction": ("coaction", _coaction_of(lambda f: dual_numbers_cyclic_grading(f, 2)), None,
                                 "F Z/2 coaction on the dual numbers"),
    "dual-numbers-trivial-coaction": ("coaction", _trivial_coaction_dual_numbers, None, "rho(a) = a (x) 1"),
    "dual-numbers-h4-comodule": ("coaction", _h4_module_as_comodule, None, "H_4-module read as H_4*-comodule"),
    "smash-dual-numbers-h4": ("coaction", _smash, None, "dual numbers # H_4 with its H_4-coaction"),
    "dual-numbers-z2-group-action": ("group-action", lambda f: dual_numbers_group_action(f, 2), None,
                                     "Z/2 by diag(1,-1)"),
    "dual-numbers-z4-group-action": ("group-action", lambda f: dual_numbers_group_action(f, 4), F5,
                                     "Z/4 by diag(1,2) over F_5"),
    "dual-numbers-trivial-group-action": ("group-action", dual_numbers_trivial_group_action, None,
                                          "Z/2 acting trivially"),
}


def names(kind: str | None = None) -> list:
    return sorted(k for k, v in CATALOG.items() if kind is None or v[0] == kind)


def kind_of(name: str) -> str:
    if name not in CATALOG:
        raise UnknownExample(f"unknown example {name!r}")
    return CATALOG[name][0]


def builtin(name: str, field: Field | str | None = None):
    """Build a catalog structure; ``field`` defaults to Q (or F_5 where a 4th root of unity is needed)."""
    if name not in CATALOG:
        raise UnknownExample(f"unknown example {name!r}")
    kind, build, prime, _ = CATALOG[name]
    if isinstance(field, str):
        field = Field.parse(field)
    if field is None:
        field = Field.Fp(prime) if prime else Field.Q()
    return build(field)
