"""Module algebra structures ``zeta: H -> End(A)`` and what can be decided about them."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from .errors import BudgetExceeded, InvalidStructure, NotUnital, ShapeError
from .exactlin import (
    Field, Matrix, Subspace, full_space, kernel, lincomb, solve, span, vscale, vsub,
)
from .reports import Report
from .structconst import (
    FinAlgebra, FinHopf, FiniteGroup, check_algebra_map, check_hopf, dual_hopf, kron_vec,
    require_isomorphism, tensor_terms,
)


def flatten(m: Matrix) -> tuple:
    return m.flat()


def unflatten(field: Field, v, n: int) -> Matrix:
    return Matrix(field, [v[i * n:(i + 1) * n] for i in range(n)])


def operator_span(field: Field, mats, n: int) -> Subspace:
    """Span of matrices inside ``End(F^n)``, flattened row by row."""
    return span(field, [flatten(m) for m in mats], n * n)


def conjugate(phi: Matrix, phi_inv: Matrix, m: Matrix) -> Matrix:
    return phi @ m @ phi_inv


def conjugate_span(phi: Matrix, phi_inv: Matrix, s: Subspace, n: int) -> Subspace:
    mats = [conjugate(phi, phi_inv, unflatten(s.field, b, n)) for b in s.basis]
    return operator_span(s.field, mats, n)


class ModuleStructure:
    """Left ``H``-action on ``A``: ``action[k]`` is the matrix of the ``k``-th basis vector of ``H``."""

    def __init__(self, algebra: FinAlgebra, hopf: FinHopf, action):
        if len(action) != hopf.dim:
            raise ShapeError(f"{len(action)} matrices for a {hopf.dim}-dimensional Hopf algebra")
        mats = []
        for m in action:
            if not isinstance(m, Matrix):
                m = Matrix(algebra.field, m) if algebra.dim else Matrix.zeros(algebra.field, 0, 0)
            if m.shape != (algebra.dim, algebra.dim):
                raise ShapeError("action matrix has wrong shape")
            if m.field != algebra.field:
                raise ShapeError("action matrix over a different field")
            mats.append(m)
        if hopf.field != algebra.field:
            raise ShapeError("Hopf algebra and algebra over different fields")
        self.algebra = algebra
        self.hopf = hopf
        self.action = tuple(mats)

    field = property(lambda self: self.algebra.field)

    def __repr__(self):
        return f"ModuleStructure(A dim {self.algebra.dim}, H dim {self.hopf.dim}, {self.field})"

    def __eq__(self, other):
        return (isinstance(other, ModuleStructure) and self.algebra == other.algebra
                and self.hopf == other.hopf and self.action == other.action)

    def operator(self, h) -> Matrix:
        """``zeta(h)`` for an element ``h`` of ``H`` given by coordinates."""
        n = self.algebra.dim
        f = self.field
        flat = lincomb(f, n * n, ((c, m.flat()) for c, m in zip(h, self.action)))
        return Matrix._raw(f, tuple(flat[i * n:(i + 1) * n] for i in range(n)), n)

    def act(self, h, a) -> tuple:
        return self.operator(h).apply(a)

    def image_span(self) -> Subspace:
        return operator_span(self.field, self.action, self.algebra.dim)

    def transport(self, phi: Matrix, phi_inv: Matrix | None = None, algebra: FinAlgebra | None = None):
        """The same action moved along an algebra isomorphism ``phi``."""
        phi_inv = phi_inv or phi.inverse()
        return ModuleStructure(algebra or self.algebra, self.hopf,
                               [conjugate(phi, phi_inv, m) for m in self.action])

    def to_json(self) -> dict:
        return {
            "kind": "module",
            "field": self.field.to_json(),
            "algebra": self.algebra.to_json(),
            "hopf": self.hopf.to_json(),
            "action": [m.to_json() for m in self.action],
        }

    @classmethod
    def from_json(cls, d, field: Field | None = None) -> "ModuleStructure":
        field = field or Field.from_json(d.get("field") or d["algebra"]["field"])
        A = FinAlgebra.from_json(d["algebra"], field)
        H = FinHopf.from_json(d["hopf"], field)
        return cls(A, H, [Matrix(field, m) if A.dim else Matrix.zeros(field, 0, 0) for m in d["action"]])


def trivial_action(algebra: FinAlgebra, hopf: FinHopf) -> ModuleStructure:
    """``h a = eps(h) a``."""
    ident = Matrix.identity(algebra.field, algebra.dim)
    return ModuleStructure(algebra, hopf, [ident.scale(e) for e in hopf.counit])


# ----------------------------------------------------------------------------

def check_module_algebra(z: ModuleStructure, check_hopf_axioms: bool = True) -> Report:
    """Algebra-map laws for ``zeta`` and ``h(ab) = (h_(1) a)(h_(2) b)`` on basis triples."""
    rep = Report("module algebra")
    H, A = z.hopf, z.algebra
    if check_hopf_axioms:
        hr = check_hopf(H)
        if not hr.ok:
            rep.merge(hr, "hopf: ")
            return rep
    n, m = H.dim, A.dim
    ident = Matrix.identity(A.field, m)
    if z.operator(H.one) != ident:
        rep.fail("unit of H acts as identity", None)
    for p in range(n):
        for q in range(n):
            if z.operator(H.algebra.mult[p][q]) != z.action[p] @ z.action[q]:
                rep.fail("action is multiplicative", [p, q])
    for k in range(n):
        terms = list(tensor_terms(H.coalgebra.delta[k], n))
        for i in range(m):
            for j in range(m):
                lhs = z.action[k].apply(A.mult[i][j])
                rhs = lincomb(A.field, m, (
                    (c, A.multiply(z.action[p].column(i), z.action[q].column(j))) for p, q, c in terms))
                if lhs != rhs:
                    rep.fail("h(ab) = (h1 a)(h2 b)", [k, i, j])
    if A.unit is not None:
        unital = all(z.action[k].apply(A.unit) == vscale(H.counit[k], A.unit) for k in range(n))
        rep.details["unital"] = unital
    else:
        rep.details["unital"] = None
    return rep


def check_unital_eigen(z: ModuleStructure) -> Report:
    """Is ``1_A`` a common eigenvector, and is the eigenvalue functional ``eps``?"""
    A, H = z.algebra, z.hopf
    if A.unit is None:
        raise NotUnital("algebra has no unit")
    rep = Report("unit eigenvector")
    one = A.unit
    piv = next(i for i, x in enumerate(one) if x)
    values = []
    common = True
    for k in range(H.dim):
        img = z.action[k].apply(one)
        lam = img[piv] / one[piv]
        if img != vscale(lam, one):
            common = False
            values = None
            break
        values.append(lam)
    rep.details["common_eigenvector"] = common
    rep.details["eigen_functional"] = values
    if common:
        eps_match = tuple(values) == tuple(H.counit)
        rep.details["equals_counit"] = eps_match
        if not eps_match:
            # a module algebra with 1_A an eigenvector must have eigenvalues eps(h)
            rep.fail("eigen-functional equals counit", [k for k in range(H.dim) if values[k] != H.counit[k]])
            ma = check_module_algebra(z)
            rep.details["module_algebra_violations"] = ma.failures[:5]
    return rep


@dataclass
class SpanDecision:
    """A span decision with whatever certificate was produced."""

    value: bool
    certificate: dict = dc_field(default_factory=dict)

    def __bool__(self):
        return self.value

    def to_json(self):
        from .reports import jsonable
        return {"result": self.value, "certificate": jsonable(self.certificate)}


def _pullback_map(z2: ModuleStructure, targets) -> list | None:
    """For each target operator find ``y`` in ``H2`` with ``zeta2(y) = target``."""
    cols = [m.flat() for m in z2.action]
    M = Matrix.from_columns(z2.field, cols)
    out = []
    for t in targets:
        y = solve(M, t.flat())
        if y is None:
            return None
        out.append(y)
    return out


def support_equiv_modules(z1: ModuleStructure, z2: ModuleStructure, phi=None) -> SpanDecision:
    """``phi zeta1(H1) phi^-1 == zeta2(H2)``, certified by the maps between images."""
    phi, phi_inv = require_isomorphism(z1.algebra, z2.algebra, phi)
    n = z1.algebra.dim
    s1 = conjugate_span(phi, phi_inv, z1.image_span(), n)
    s2 = z2.image_span()
    if s1 == s2:
        moved = [conjugate(phi, phi_inv, m) for m in z1.action]
        xi = _pullback_map(z2, moved)
        # lambda on image bases: coordinates of phi X phi^-1 in the canonical basis of zeta2(H2)
        src = z1.image_span()
        lam = [s2.coordinates(conjugate(phi, phi_inv, unflatten(z1.field, b, n)).flat()) for b in src.basis]
        cert = {
            "dim": s2.dim,
            "span": s2,
            "xi": xi,
            "lambda": lam,
        }
        return SpanDecision(True, cert)
    witness = s1.complement_vector(s2)
    side = "second"
    if witness is None:
        witness = s2.complement_vector(s1)
        side = "first"
    return SpanDecision(False, {
        "dims": [s1.dim, s2.dim],
        "separating_operator": unflatten(z1.field, witness, n),
        "missing_from": side,
    })


def finer_modules(z1: ModuleStructure, z2: ModuleStructure, phi=None) -> bool:
    """``zeta1`` is finer than ``zeta2`` when ``zeta2(H2)`` lies inside the transported ``zeta1(H1)``."""
    phi, phi_inv = require_isomorphism(z1.algebra, z2.algebra, phi)
    s1 = conjugate_span(phi, phi_inv, z1.image_span(), z1.algebra.dim)
    return s1.contains(z2.image_span())


def correspondence(x):
    """Module over ``H`` <-> comodule over ``H*``; the coefficient data are shared."""
    from .comodule import Coaction, induced_dual_module

    if isinstance(x, Coaction):
        return induced_dual_module(x)
    if isinstance(x, ModuleStructure):
        A, H = x.algebra, x.hopf
        K = dual_hopf(H)
        m = A.dim
        coeff = [[tuple(x.action[k][b, a] for k in range(H.dim)) for a in range(m)] for b in range(m)]
        return Coaction(A, K, coeff)
    raise TypeError(f"cannot correspond {type(x).__name__}")


def regular_action_on_dual(H: FinHopf) -> tuple:
    """``(zeta(h) lambda)(t) = lambda(t h)`` on the algebra ``H*``; returns ``(module, report)``."""
    K = dual_hopf(H)
    n = H.dim
    mats = [Matrix(H.field, [[H.algebra.mult[i][k][j] for j in range(n)] for i in range(n)]) for k in range(n)]
    z = ModuleStructure(K.algebra, H, mats)
    rep = Report("regular action on dual")
    ker = kernel(Matrix.from_columns(H.field, [m.flat() for m in mats]))
    rep.details["kernel_dim"] = ker.dim
    rep.details["faithful"] = ker.dim == 0
    ma = check_module_algebra(z)
    rep.merge(ma, "module: ")
    rep.details["unital"] = ma.details.get("unital")
    if ker.dim == 0 and ma.ok:
        rep.details["universal"] = "universal Hopf algebra is (H, zeta)"
    return z, rep


def _balanced_relations(A: FinAlgebra, sub: Subspace) -> Subspace:
    """``span{ac (x) b - a (x) cb}`` for ``c`` in a basis of ``sub``."""
    m = A.dim
    f = A.field
    vecs = []
    for c in sub.basis:
        for i in range(m):
            ac = A.multiply(A.basis_vector(i), c)
            for j in range(m):
                cb = A.multiply(c, A.basis_vector(j))
                vecs.append(vsub(kron_vec(ac, A.basis_vector(j)), kron_vec(A.basis_vector(i), cb)))
    return span(f, vecs, m * m)


def balanced_can_report(name: str, A: FinAlgebra, invariants: Subspace, can: Matrix, target_dim: int) -> Report:
    rep = Report(name)
    m = A.dim
    rel = _balanced_relations(A, invariants)
    quotient_dim = m * m - rel.dim
    rank = can.rank()
    ker_can = kernel(can)
    if not ker_can.contains(rel):
        rep.fail("can vanishes on balancing relations", ker_can.complement_vector(rel))
    if rank != quotient_dim:
        rep.fail("can is injective", rel.complement_vector(ker_can))
    if rank != target_dim:
        image = span(A.field, [can.column(j) for j in range(can.shape[1])], target_dim)
        rep.fail("can is surjective", image.complement_vector(full_space(A.field, target_dim)))
    rep.details.update(
        invariants_dim=invariants.dim,
        invariants=invariants,
        balanced_dim=quotient_dim,
        target_dim=target_dim,
        rank=rank,
        injective=rank == quotient_dim,
        surjective=rank == target_dim,
        matrix=can,
    )
    rep.details["bijective"] = rep.details["injective"] and rep.details["surjective"]
    return rep


def can_map_module(z: ModuleStructure) -> Report:
    """``can(a (x) b)(h) = a (h b)`` from ``A (x)_{A^H} A`` to ``Hom(H, A)``."""
    A, H = z.algebra, z.hopf
    if A.unit is None:
        raise NotUnital("can map needs a unital algebra")
    m, n = A.dim, H.dim
    f = A.field
    ident = Matrix.identity(f, m)
    rows = []
    for k in range(n):
        rows.extend((z.action[k] - ident.scale(H.counit[k])).tolist())
    inv = kernel(Matrix(f, rows, m)) if rows else span(f, [A.basis_vector(i) for i in range(m)], m)
    cols = []
    for i in range(m):
        for j in range(m):
            col = [f.zero] * (m * n)
            for k in range(n):
                v = A.multiply(A.basis_vector(i), z.action[k].column(j))
                for s, x in enumerate(v):
                    col[s * n + k] = x
            cols.append(tuple(col))
    can = Matrix.from_columns(f, cols)
    rep = balanced_can_report("module can map", A, inv, can, m * n)
    if rep.details["surjective"]:
        rep.details["universal"] = "universal Hopf algebra is (H, zeta)"
    return rep


# ----------------------------------------------------------------------------
# group actions

class GroupAction:
    """A group acting on ``A`` by the matrices ``images[g]``."""

    def __init__(self, group: FiniteGroup, algebra: FinAlgebra, images):
        if len(images) != group.order:
            raise ShapeError("one matrix per group element is required")
        self.group = group
        self.algebra = algebra
        self.images = tuple(m if isinstance(m, Matrix) else Matrix(algebra.field, m) for m in images)

    field = property(lambda self: self.algebra.field)

    @classmethod
    def from_generator(cls, group: FiniteGroup, algebra: FinAlgebra, gen: int, image: Matrix) -> "GroupAction":
        """Cyclic group action fixed by the image of one generator."""
        imgs = [None] * group.order
        imgs[group.identity] = Matrix.identity(algebra.field, algebra.dim)
        x, cur = gen, image
        while imgs[x] is None:
            imgs[x] = cur
            x = group.mul(x, gen)
            cur = cur @ image
        if any(m is None for m in imgs):
            raise ShapeError("generator does not generate the group")
        return cls(group, algebra, imgs)

    def image_span(self) -> Subspace:
        return operator_span(self.field, self.images, self.algebra.dim)

    def to_module(self) -> ModuleStructure:
        from .structconst import group_algebra
        return ModuleStructure(self.algebra, group_algebra(self.group, self.field), self.images)

    def to_json(self) -> dict:
        return {
            "kind": "group-action",
            "field": self.field.to_json(),
            "group": self.group.to_json(),
            "algebra": self.algebra.to_json(),
            "images": [m.to_json() for m in self.images],
        }

    @classmethod
    def from_json(cls, d, field: Field | None = None) -> "GroupAction":
        field = field or Field.from_json(d.get("field") or d["algebra"]["field"])
        return cls(FiniteGroup.from_json(d["group"]), FinAlgebra.from_json(d["algebra"], field),
                   [Matrix(field, m) for m in d["images"]])


def is_automorphism(A: FinAlgebra, m: Matrix) -> bool:
    if m.inverse() is None:
        return False
    return check_algebra_map(A, A, m).ok


def check_group_action(ga: GroupAction) -> Report:
    rep = Report("group action")
    G = ga.group
    for g in range(G.order):
        if not is_automorphism(ga.algebra, ga.images[g]):
            rep.fail("image is an automorphism", g)
        for h in range(G.order):
            if ga.images[g] @ ga.images[h] != ga.images[G.mul(g, h)]:
                rep.fail("images respect the group table", [g, h])
    return rep


def group_action_equiv(z1: GroupAction, z2: GroupAction, phi=None) -> SpanDecision:
    phi, phi_inv = require_isomorphism(z1.algebra, z2.algebra, phi)
    n = z1.algebra.dim
    s1 = conjugate_span(phi, phi_inv, z1.image_span(), n)
    s2 = z2.image_span()
    if s1 == s2:
        return SpanDecision(True, {"dim": s1.dim, "span": s1})
    return SpanDecision(False, {"dims": [s1.dim, s2.dim]})


def _as_span(z) -> Subspace:
    if isinstance(z, Subspace):
        return z
    return z.image_span()


def action_universal_group_membership(z, candidate: Matrix) -> bool:
    """Invertible, an automorphism of ``A`` and inside the span of the action."""
    A = z.algebra
    if candidate.shape != (A.dim, A.dim):
        raise ShapeError("candidate must be a square matrix of size dim A")
    if not is_automorphism(A, candidate):
        return False
    return candidate.flat() in _as_span(z)


def enumerate_G0(z, budget: int = 10 ** 6) -> list:
    """All invertible automorphisms of ``A`` lying in the span of the action (finite fields only)."""
    A = z.algebra
    f = A.field
    if f.is_rational:
        raise ValueError("enumeration of G0 needs a finite field")
    s = _as_span(z)
    if f.p ** s.dim > budget:
        raise BudgetExceeded(f"{f.p}^{s.dim} candidates exceed the budget {budget}")
    n = A.dim
    out = []
    for coords in itertools.product(range(f.p), repeat=s.dim):
        flat = lincomb(f, n * n, zip((f(c) for c in coords), s.basis))
        m = unflatten(f, flat, n)
        if is_automorphism(A, m):
            out.append(m)
    return out


def derivations(A: FinAlgebra) -> Subspace:
    """``Der(A)`` as the kernel of ``D(e_i e_j) = D(e_i) e_j + e_i D(e_j)``, flattened."""
    m = A.dim
    f = A.field
    rows = []
    # unknown D[r][c] at flat index r*m + c; D(e_j) is column j
    for i in range(m):
        for j in range(m):
            prod = A.mult[i][j]
            for s in range(m):
                row = [f.zero] * (m * m)
                for c, x in enumerate(prod):
                    if x:
                        row[s * m + c] = row[s * m + c] + x
                for r in range(m):
                    # (D e_i) e_j : sum_r D[r][i] (e_r e_j)_s
                    y = A.mult[r][j][s]
                    if y:
                        row[r * m + i] = row[r * m + i] - y
                    # e_i (D e_j) : sum_r D[r][j] (e_i e_r)_s
                    y = A.mult[i][r][s]
                    if y:
                        row[r * m + j] = row[r * m + j] - y
                rows.append(row)
    if not rows:
        return span(f, [], 0)
    return kernel(Matrix(f, rows, m * m))


def is_derivation(A: FinAlgebra, d: Matrix) -> bool:
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = d.apply(A.mult[i][j])
            rhs = [x + y for x, y in zip(A.multiply(d.column(i), A.basis_vector(j)),
                                          A.multiply(A.basis_vector(i), d.column(j)))]
            if lhs != tuple(rhs):
                return False
    return True


@dataclass
class CocommutativeData:
    operator_span: Subspace
    L0_basis: list
    G0: object
    smash_presentation: dict
    hypotheses: dict

    def to_json(self):
        from .reports import jsonable
        return {
            "operator_span": jsonable(self.operator_span),
            "L0_dim": len(self.L0_basis),
            "L0_basis": jsonable(self.L0_basis),
            "G0": jsonable(self.G0),
            "smash_presentation": jsonable(self.smash_presentation),
            "hypotheses": jsonable(self.hypotheses),
        }


def cocommutative_data(z, budget: int = 10 ** 6) -> CocommutativeData:
    """``L0 = Der(A) cap zeta(H)`` and ``G0 = U(zeta(H)) cap Aut(A)`` with the conjugation twist."""
    A = z.algebra
    f = A.field
    n = A.dim
    s = _as_span(z)
    L0 = derivations(A).intersection(s)
    L0_mats = [unflatten(f, b, n) for b in L0.basis]
    if f.is_rational:
        G0 = {
            "kind": "membership",
            "test": "invertible, multiplicative on basis pairs, preserves the unit, lies in the operator span",
            "span": s,
        }
        elements = []
    else:
        elements = enumerate_G0(z, budget)
        G0 = {"kind": "enumerated", "count": len(elements), "elements": elements}
    twist = []
    for g in elements:
        ginv = g.inverse()
        twist.append([L0.coordinates(conjugate(g, ginv, d).flat()) for d in L0_mats])
    smash = {
        "form": "U(L0) # F G0",
        "L0_dim": L0.dim,
        "G0_action_on_L0": "conjugation d -> g d g^-1",
        "twist": twist if elements else "computed per element by conjugation",
    }
    cocomm = z.hopf.is_cocommutative() if isinstance(z, ModuleStructure) else True
    hypotheses = {
        "characteristic_zero": f.characteristic == 0,
        "algebraically_closed": False,
        "cocommutative": cocomm,
    }
    hypotheses["universality_claim_applies"] = all(hypotheses.values())
    return CocommutativeData(s, L0_mats, G0, smash, hypotheses)


def cocommutativity_obstruction(z: ModuleStructure, h, a, b) -> tuple:
    """``((h_(1) a)(h_(2) b), (h_(2) a)(h_(1) b))``."""
    H, A = z.hopf, z.algebra
    n = H.dim
    t = H.comultiply(h)
    first = lincomb(A.field, A.dim, (
        (c, A.multiply(z.action[p].apply(a), z.action[q].apply(b))) for p, q, c in tensor_terms(t, n)))
    second = lincomb(A.field, A.dim, (
        (c, A.multiply(z.action[q].apply(a), z.action[p].apply(b))) for p, q, c in tensor_terms(t, n)))
    return first, second


def obstruction_search(z: ModuleStructure):
    """First basis triple ``(h, a, b)`` whose two products differ, or ``None``."""
    H, A = z.hopf, z.algebra
    for k in range(H.dim):
        for i in range(A.dim):
            for j in range(A.dim):
                p, q = cocommutativity_obstruction(z, H.basis_vector(k), A.basis_vector(i), A.basis_vector(j))
                if p != q:
                    return (k, i, j), (p, q)
    return None


# ----------------------------------------------------------------------------
# unital module structures on the dual numbers

def dual_numbers_basis(A: FinAlgebra) -> Matrix:
    """Columns ``(1, x)`` with ``x^2 = 0``, or raise when ``A`` is not ``F[x]/(x^2)``."""
    f = A.field
    if A.dim != 2:
        raise InvalidStructure("algebra is not two-dimensional")
    if f.characteristic == 2:
        raise InvalidStructure("characteristic 2 is excluded")
    if A.unit is None:
        raise NotUnital("algebra has no unit")
    one = A.unit
    e = next(A.basis_vector(j) for j in range(2) if A.basis_vector(j) not in span(f, [one], 2))
    sq = A.multiply(e, e)
    coords = solve(Matrix.from_columns(f, [one, e]), sq)
    if coords is None:
        raise InvalidStructure("algebra is not closed under multiplication")
    q = coords[1]
    x = vsub(e, vscale(q / 2, one))
    if any(A.multiply(x, x)):
        raise InvalidStructure("algebra has no nonzero square-zero element; not F[x]/(x^2)")
    return Matrix.from_columns(f, [one, x])


def classify_dual_numbers(z: ModuleStructure) -> dict:
    """Case 1 (scalars), 2 (diagonal) or 3 (upper triangular), with the functionals read off."""
    A, H = z.algebra, z.hopf
    P = dual_numbers_basis(A)
    rep = check_module_algebra(z)
    if not rep.ok:
        raise InvalidStructure("not a module algebra structure", rep)
    if not rep.details.get("unital"):
        raise InvalidStructure("module structure is not unital", rep)
    Pinv = P.inverse()
    f = A.field
    adapted = [Pinv @ m @ P for m in z.action]
    eps = tuple(H.counit)
    alpha = tuple(m[1, 1] for m in adapted)
    beta = tuple(m[0, 1] for m in adapted)
    dim = z.image_span().dim
    if dim == 3:
        case, witness = 3, "upper triangular"
    elif alpha not in span(f, [eps], H.dim):
        case, witness = 2, "diagonal"
    else:
        case, witness = 1, "scalars"
    return {
        "case": case,
        "span": witness,
        "image_dim": dim,
        "adapted_basis": P,
        "alpha": alpha,
        "beta": beta,
        "epsilon": eps,
    }


def invariant_nilpotent_dim(z: ModuleStructure) -> int:
    """``d`` for the dual numbers: 1 when the radical ``F x`` is invariant, else 0."""
    P = dual_numbers_basis(z.algebra)
    x = P.column(1)
    rad = span(z.field, [x], 2)
    return 1 if all(m.apply(x) in rad for m in z.action) else 0
