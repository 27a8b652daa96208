"""Right coactions ``rho: A -> A (x) H`` and their support coalgebras.

``coeff[b][a]`` holds the ``H``-coordinates of ``h_ba``, so that
``rho(a_a) = sum_b a_b (x) h_ba``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import InvalidStructure, NotUnital, ShapeError
from .exactlin import (
    Field, Matrix, Subspace, kernel, lincomb, solve, span, unit_vector, vadd, vscale, vsub,
)
from .modulealg import ModuleStructure, SpanDecision, balanced_can_report
from .reports import Report
from .structconst import (
    FinAlgebra, FinCoalgebra, FinHopf, FiniteGroup, check_hopf, dual_hopf, grouplikes,
    group_algebra, kron_vec, require_isomorphism, sort_vectors, tensor_terms,
)


class Coaction:
    def __init__(self, algebra: FinAlgebra, hopf: FinHopf, coeff):
        m, n = algebra.dim, hopf.dim
        f = algebra.field
        if hopf.field != f:
            raise ShapeError("Hopf algebra and algebra over different fields")
        if len(coeff) != m or any(len(row) != m for row in coeff):
            raise ShapeError("coefficient tensor must be dim A x dim A")
        rows = []
        for row in coeff:
            r = []
            for v in row:
                if len(v) != n:
                    raise ShapeError("coefficient vector has wrong length")
                r.append(tuple(f(x) for x in v))
            rows.append(tuple(r))
        self.algebra = algebra
        self.hopf = hopf
        self.coeff = tuple(rows)

    field = property(lambda self: self.algebra.field)

    def __repr__(self):
        return f"Coaction(A dim {self.algebra.dim}, H dim {self.hopf.dim}, {self.field})"

    def __eq__(self, other):
        return (isinstance(other, Coaction) and self.algebra == other.algebra
                and self.hopf == other.hopf and self.coeff == other.coeff)

    def h(self, b: int, a: int) -> tuple:
        return self.coeff[b][a]

    def rho(self, v) -> tuple:
        """``rho(v)`` as a flat tensor in ``A (x) H``."""
        m, n = self.algebra.dim, self.hopf.dim
        f = self.field
        out = [f.zero] * (m * n)
        for a, x in enumerate(v):
            if not x:
                continue
            for b in range(m):
                for k, y in enumerate(self.coeff[b][a]):
                    if y:
                        out[b * n + k] = out[b * n + k] + x * y
        return tuple(out)

    def family(self) -> list:
        """``((alpha, beta), h_alpha_beta)`` in lexicographic pair order."""
        m = self.algebra.dim
        return [((a, b), self.coeff[a][b]) for a in range(m) for b in range(m)]

    def transport(self, phi: Matrix, phi_inv: Matrix | None = None, algebra: FinAlgebra | None = None):
        """``(phi (x) id) rho phi^-1`` on the target algebra."""
        phi_inv = phi_inv or phi.inverse()
        m, n = self.algebra.dim, self.hopf.dim
        f = self.field
        new = [[None] * m for _ in range(m)]
        for b in range(m):
            for a in range(m):
                terms = []
                for s in range(m):
                    ps = phi[b, s]
                    if not ps:
                        continue
                    for t in range(m):
                        c = ps * phi_inv[t, a]
                        if c:
                            terms.append((c, self.coeff[s][t]))
                new[b][a] = lincomb(f, n, terms)
        return Coaction(algebra or self.algebra, self.hopf, new)

    def to_json(self) -> dict:
        f = self.field
        return {
            "kind": "coaction",
            "field": f.to_json(),
            "algebra": self.algebra.to_json(),
            "hopf": self.hopf.to_json(),
            "coeff": [[[f.scalar_to_json(x) for x in v] for v in row] for row in self.coeff],
        }

    @classmethod
    def from_json(cls, d, field: Field | None = None) -> "Coaction":
        field = field or Field.from_json(d.get("field") or d["algebra"]["field"])
        return cls(FinAlgebra.from_json(d["algebra"], field), FinHopf.from_json(d["hopf"], field), d["coeff"])


def trivial_coaction(algebra: FinAlgebra, hopf: FinHopf) -> Coaction:
    """``rho(a) = a (x) 1``."""
    m = algebra.dim
    zero = (hopf.field.zero,) * hopf.dim
    coeff = [[hopf.one if a == b else zero for a in range(m)] for b in range(m)]
    return Coaction(algebra, hopf, coeff)


def regular_coaction(hopf: FinHopf) -> Coaction:
    """``H`` coacting on itself by ``Delta``."""
    n = hopf.dim
    f = hopf.field
    coeff = [[(f.zero,) * n for _ in range(n)] for _ in range(n)]
    for a in range(n):
        for b, k, c in tensor_terms(hopf.coalgebra.delta[a], n):
            coeff[b][a] = vadd(coeff[b][a], vscale(c, unit_vector(f, n, k)))
    return Coaction(hopf.algebra, hopf, coeff)


# ----------------------------------------------------------------------------

def check_comodule_algebra(rho: Coaction, check_hopf_axioms: bool = True) -> Report:
    rep = Report("comodule algebra")
    A, H = rho.algebra, rho.hopf
    if check_hopf_axioms:
        hr = check_hopf(H)
        if not hr.ok:
            rep.merge(hr, "hopf: ")
            return rep
    m, n = A.dim, H.dim
    f = A.field
    for a in range(m):
        for b in range(m):
            lhs = H.comultiply(rho.coeff[a][b])
            rhs = lincomb(f, n * n, ((f.one, kron_vec(rho.coeff[a][g], rho.coeff[g][b])) for g in range(m)))
            if lhs != rhs:
                rep.fail("Delta h_ab = sum h_ag (x) h_gb", [a, b])
            if H.epsilon(rho.coeff[a][b]) != (f.one if a == b else f.zero):
                rep.fail("eps(h_ab) = delta_ab", [a, b])
    # rho(a_i a_j) = rho(a_i) rho(a_j)
    rhos = [rho.rho(A.basis_vector(i)) for i in range(m)]
    for i in range(m):
        for j in range(m):
            lhs = rho.rho(A.mult[i][j])
            rhs = _tensor_product_mult(A, H, rhos[i], rhos[j])
            if lhs != rhs:
                rep.fail("rho is multiplicative", [i, j])
    if A.unit is not None:
        rep.details["unital"] = rho.rho(A.unit) == kron_vec(A.unit, H.one)
    else:
        rep.details["unital"] = None
    return rep


def _tensor_product_mult(A: FinAlgebra, H: FinHopf, s, t) -> tuple:
    m, n = A.dim, H.dim
    f = A.field
    out = [f.zero] * (m * n)
    for i, k, x in tensor_terms(s, n):
        for j, l, y in tensor_terms(t, n):
            c = x * y
            av = A.mult[i][j]
            hv = H.algebra.mult[k][l]
            for p, u in enumerate(av):
                if u:
                    for q, w in enumerate(hv):
                        if w:
                            out[p * n + q] = out[p * n + q] + c * u * w
    return tuple(out)


def grading_to_coaction(gr) -> Coaction:
    """``rho(a) = sum_g P_g(a) (x) g`` over ``FG``; diagonal in a homogeneous basis."""
    G = gr.group
    f = gr.field
    m = gr.algebra.dim
    H = group_algebra(G, f)
    P = gr.projections()
    coeff = [[tuple(P[g][b, a] for g in range(G.order)) for a in range(m)] for b in range(m)]
    return Coaction(gr.algebra, H, coeff)


def induced_dual_module(rho: Coaction) -> ModuleStructure:
    """``zeta(f) a = f(a_(1)) a_(0)`` for ``f`` in ``H*``."""
    K = dual_hopf(rho.hopf)
    m, n = rho.algebra.dim, rho.hopf.dim
    mats = [Matrix(rho.field, [[rho.coeff[b][a][k] for a in range(m)] for b in range(m)])
            if m else Matrix.zeros(rho.field, 0, 0) for k in range(n)]
    return ModuleStructure(rho.algebra, K, mats)


# ----------------------------------------------------------------------------
# support coalgebra

@dataclass
class SupportCoalgebra:
    subspace: Subspace
    coalgebra: FinCoalgebra
    inclusion: Matrix
    coeff_in_C: list
    report: Report = dc_field(default=None)

    @property
    def dim(self) -> int:
        return self.subspace.dim

    def to_json(self) -> dict:
        from .reports import jsonable
        return {
            "dim": self.dim,
            "basis": jsonable(self.subspace.basis),
            "coalgebra": self.coalgebra.to_json(),
            "checks": self.report.to_json() if self.report else None,
        }


def _coords_in(sub: Subspace, v) -> tuple:
    c = sub.coordinates(v)
    if c is None:
        raise InvalidStructure("vector outside the support coalgebra")
    return c


def _tensor_coords(sub: Subspace, t, n: int):
    """Coordinates of a tensor of ``H (x) H`` in the basis ``c_i (x) c_j`` of ``C (x) C``."""
    r = sub.dim
    piv = sub.pivots
    coords = tuple(t[piv[i] * n + piv[j]] for i in range(r) for j in range(r))
    recon = lincomb(sub.field, n * n, ((coords[i * r + j], kron_vec(sub.basis[i], sub.basis[j]))
                                       for i in range(r) for j in range(r)))
    if recon != tuple(t):
        return None
    return coords


def support_coalgebra(rho: Coaction) -> SupportCoalgebra:
    H = rho.hopf
    f = rho.field
    n = H.dim
    C = span(f, [v for _, v in rho.family()], n)
    rep = Report("support coalgebra")
    delta = []
    for c in C.basis:
        t = _tensor_coords(C, H.comultiply(c), n)
        if t is None:
            raise InvalidStructure("span of coefficients is not a subcoalgebra; input is not a coaction")
        delta.append(t)
    counit = [H.epsilon(c) for c in C.basis]
    coal = FinCoalgebra(f, delta, counit, [f"c{i}" for i in range(C.dim)]) if C.dim else \
        FinCoalgebra(f, [], [], [])
    inclusion = Matrix.from_columns(f, list(C.basis), n) if C.dim else Matrix.zeros(f, n, 0)
    m = rho.algebra.dim
    coeff_in_C = [[_coords_in(C, rho.coeff[b][a]) for a in range(m)] for b in range(m)]
    # ker zeta = C^perp for the induced dual module
    if m:
        zeta = induced_dual_module(rho)
        ker = kernel(Matrix.from_columns(f, [mat.flat() for mat in zeta.action]))
        perp = kernel(Matrix(f, list(C.basis), n)) if C.dim else span(f, [unit_vector(f, n, i) for i in range(n)], n)
        if ker != perp:
            rep.fail("ker zeta = C^perp", None)
        rep.details["image_dim"] = n - ker.dim
    else:
        rep.details["image_dim"] = 0
    rep.details["dim"] = C.dim
    from .structconst import check_coalgebra
    if C.dim:
        rep.merge(check_coalgebra(coal), "restricted: ")
    return SupportCoalgebra(C, coal, inclusion, coeff_in_C, rep)


def grouplike_basis(sc: SupportCoalgebra) -> list | None:
    """Group-likes of ``H`` spanning ``C``, in ``H`` coordinates, or ``None``."""
    if sc.dim == 0:
        return []
    g = grouplikes(sc.coalgebra)
    if len(g) != sc.dim:
        return None
    return sort_vectors([sc.inclusion.apply(x) for x in g])


# ----------------------------------------------------------------------------
# comparing coactions

def _family_matrix(rho: Coaction) -> Matrix:
    """Columns ``h_ab`` in lexicographic pair order, as a map ``F^(m*m) -> H``."""
    return Matrix.from_columns(rho.field, [v for _, v in rho.family()], rho.hopf.dim)


def dependencies(rho: Coaction) -> Subspace:
    """Linear relations among the ``h_ab`` (kernel of the family map)."""
    return kernel(_family_matrix(rho))


def _tau_matrix(sc1: SupportCoalgebra, rho1: Coaction, rho2: Coaction) -> Matrix:
    """``tau(c_i)`` in ``H2`` coordinates, defined through ``tau(h1_ab) = h2_ab``."""
    fam1 = rho1.family()
    fam2 = dict(rho2.family())
    cols = []
    f = rho1.field
    n2 = rho2.hopf.dim
    # write each basis vector of C1 through the family, then push forward
    M1 = _family_matrix(rho1)
    for c in sc1.subspace.basis:
        x = solve(M1, c)
        col = lincomb(f, n2, ((x[i], fam2[pair]) for i, (pair, _) in enumerate(fam1)))
        cols.append(col)
    if not cols:
        return Matrix.zeros(f, n2, 0)
    return Matrix.from_columns(f, cols, n2)


def _check_tau(sc1: SupportCoalgebra, H2: FinHopf, tau: Matrix) -> Report:
    rep = Report("coalgebra map")
    r = sc1.dim
    n2 = H2.dim
    f = H2.field
    for i in range(r):
        img = tau.column(i)
        lhs = H2.comultiply(img)
        t = sc1.coalgebra.delta[i]
        rhs = lincomb(f, n2 * n2, ((t[p * r + q], kron_vec(tau.column(p), tau.column(q)))
                                    for p in range(r) for q in range(r)))
        if lhs != rhs:
            rep.fail("Delta tau = (tau (x) tau) Delta", i)
        if H2.epsilon(img) != sc1.coalgebra.counit[i]:
            rep.fail("eps tau = eps", i)
    return rep


def _grouplike_names(sc1, H1, H2, tau):
    out = {}
    for i, c in enumerate(sc1.subspace.basis):
        nz = [k for k, x in enumerate(c) if x]
        img = tau.column(i)
        nz2 = [k for k, x in enumerate(img) if x]
        if len(nz) == 1 and len(nz2) == 1 and c[nz[0]] == img[nz2[0]]:
            out[H1.basis_names[nz[0]]] = H2.basis_names[nz2[0]]
    return out


def comodule_support_equiv(rho1: Coaction, rho2: Coaction, phi=None) -> SpanDecision:
    """Same linear dependencies among coefficients after transport by ``phi``."""
    phi, phi_inv = require_isomorphism(rho1.algebra, rho2.algebra, phi)
    moved = rho1.transport(phi, phi_inv, rho2.algebra)
    d1, d2 = dependencies(moved), dependencies(rho2)
    if d1 != d2:
        w = d1.complement_vector(d2)
        holds_in = "first"
        if w is None:
            w = d2.complement_vector(d1)
            holds_in = "second"
        m = rho1.algebra.dim
        pairs = [[k // m, k % m, x] for k, x in enumerate(w) if x]
        return SpanDecision(False, {"separating_dependency": pairs, "holds_only_in": holds_in,
                                    "dims": [d1.dim, d2.dim]})
    sc1 = support_coalgebra(moved)
    tau = _tau_matrix(sc1, moved, rho2)
    chk = _check_tau(sc1, rho2.hopf, tau)
    if not chk.ok:
        raise AssertionError(f"tau is not a coalgebra map: {chk.failures}")
    return SpanDecision(True, {
        "tau": tau,
        "C_basis": sc1.subspace.basis,
        "grouplike_map": _grouplike_names(sc1, rho1.hopf, rho2.hopf, tau),
        "dim": sc1.dim,
    })


def coarser_morphism(rho1: Coaction, rho2: Coaction) -> Matrix | None:
    """The unique coalgebra map ``tau: C(rho1) -> C(rho2)`` with ``(id (x) tau) rho1 = rho2``."""
    if rho1.algebra != rho2.algebra:
        raise ShapeError("coactions on different algebras")
    if not dependencies(rho1) <= dependencies(rho2):
        return None
    sc1 = support_coalgebra(rho1)
    tau = _tau_matrix(sc1, rho1, rho2)
    chk = _check_tau(sc1, rho2.hopf, tau)
    if not chk.ok:
        raise AssertionError(f"tau is not a coalgebra map: {chk.failures}")
    return tau


# ----------------------------------------------------------------------------
# universal Hopf algebra presentation

@dataclass
class HopfPresentation:
    generators: list                 # (alpha, beta) pairs
    lin_deps: list                   # ((alpha, beta), {gen: coef})
    relations: list                  # {word: coef}, word = tuple of generator indices
    delta_data: dict
    counit_data: list
    antipode_closed: bool = True
    unit_grouplike: int | None = None
    basis: Matrix | None = None      # columns: basis of A used for the indices
    checks: dict = dc_field(default_factory=dict)
    field: Field | None = None

    def generator_names(self) -> list:
        return [f"x_{a}{b}" for a, b in self.generators]

    def counit_value(self, rel: dict):
        f = self.field
        s = f.zero
        for word, c in rel.items():
            v = c
            for g in word:
                v = v * self.counit_data[g]
            s = s + v
        return s

    def to_json(self) -> dict:
        f = self.field
        rels = []
        for rel in self.relations:
            rels.append({"terms": [{"coef": f.scalar_to_json(c), "word": list(w)} for w, c in sorted(rel.items())]})
        d = {
            "generators": [{"alpha": a, "beta": b} for a, b in self.generators],
            "lin_deps": [{"alpha": a, "beta": b,
                          "combination": [[g, f.scalar_to_json(c)] for g, c in sorted(comb.items())]}
                         for (a, b), comb in self.lin_deps],
            "relations": rels,
            "delta": {"rule": "Delta x_ab = sum_g x_ag (x) x_gb"},
            "counit": [f.scalar_to_json(x) for x in self.counit_data],
            "antipode_closed": self.antipode_closed,
            "checks": self.checks,
        }
        if self.unit_grouplike is not None:
            d["unit_grouplike"] = self.unit_grouplike
        if self.basis is not None:
            d["basis"] = self.basis.to_json()
        return d


def unit_adapted(rho: Coaction) -> tuple:
    """Rewrite ``rho`` in a basis whose first vector is ``1_A`` (when the unit is not already a basis vector)."""
    A = rho.algebra
    m = A.dim
    f = A.field
    one = A.unit
    if one == A.basis_vector(0):
        return rho, None
    j = next(i for i, x in enumerate(one) if x)
    cols = [one] + [A.basis_vector(i) for i in range(m) if i != j]
    P = Matrix.from_columns(f, cols)
    Pinv = P.inverse()
    newA = A.change_basis(P)
    return rho.transport(Pinv, P, newA), P


def _add(poly: dict, word: tuple, c):
    if not c:
        return
    v = poly.get(word)
    v = c if v is None else v + c
    if v:
        poly[word] = v
    else:
        poly.pop(word, None)


def _symbolic_coideal_check(rho: Coaction) -> bool:
    """``Delta(r^g_ab) = sum_st r^g_st (x) x_sa x_tb + sum_w x_gw (x) r^w_ab`` in the free algebra on all ``x``."""
    A = rho.algebra
    m = A.dim
    k = A.mult
    one = A.field.one

    def rel(a, b, g):
        r = {}
        for p in range(m):
            for q in range(m):
                c = k[p][q][g]
                if c:
                    _add(r, ((p, a), (q, b)), c)
        for u in range(m):
            c = k[a][b][u]
            if c:
                _add(r, ((g, u),), -c)
        return r

    def delta_word(word):
        out = {((), ()): one}
        for (s, t) in word:
            nxt = {}
            for (l, r_), c in out.items():
                for w in range(m):
                    key = (l + ((s, w),), r_ + ((w, t),))
                    nxt[key] = nxt.get(key, 0) + c
            out = nxt
        return out

    rels = {}
    for a in range(m):
        for b in range(m):
            for g in range(m):
                rels[(a, b, g)] = rel(a, b, g)
    for (a, b, g), r in rels.items():
        lhs = {}
        for word, c in r.items():
            for key, d in delta_word(word).items():
                _add(lhs, key, c * d)
        rhs = {}
        for s in range(m):
            for t in range(m):
                right = ((s, a), (t, b))
                for word, c in rels[(s, t, g)].items():
                    _add(rhs, (word, right), c)
        for w in range(m):
            for word, c in rels[(a, b, w)].items():
                _add(rhs, (((g, w),), word), c)
        if lhs != rhs:
            return False
    return True


def universal_hopf_presentation(rho: Coaction) -> HopfPresentation:
    """Generators ``x_ab`` for an independent subfamily of the ``h_ab`` and the multiplicativity relations."""
    A = rho.algebra
    f = rho.field
    basis = None
    unital = False
    if A.unit is not None and rho.rho(A.unit) == kron_vec(A.unit, rho.hopf.one):
        unital = True
        rho, basis = unit_adapted(rho)
        A = rho.algebra
    m = A.dim
    n = rho.hopf.dim
    # choose generators greedily in lexicographic pair order
    gens, vecs = [], []
    lin_deps = []
    cur = span(f, [], n)
    for pair, v in rho.family():
        if v not in cur:
            gens.append(pair)
            vecs.append(v)
            cur = span(f, vecs, n)
    G = Matrix.from_columns(f, vecs, n) if vecs else Matrix.zeros(f, n, 0)
    expr = {}
    for pair, v in rho.family():
        if pair in gens:
            expr[pair] = {gens.index(pair): f.one}
            continue
        x = solve(G, v) if vecs else ()
        comb = {i: c for i, c in enumerate(x) if c}
        expr[pair] = comb
        lin_deps.append((pair, comb))
    k = A.mult
    relations = []
    seen = set()
    for a in range(m):
        for b in range(m):
            for g in range(m):
                r = {}
                for p in range(m):
                    for q in range(m):
                        c = k[p][q][g]
                        if not c:
                            continue
                        for i, x in expr[(p, a)].items():
                            for j, y in expr[(q, b)].items():
                                _add(r, (i, j), c * x * y)
                for u in range(m):
                    c = k[a][b][u]
                    if c:
                        for i, x in expr[(g, u)].items():
                            _add(r, (i,), -c * x)
                if r:
                    key = tuple(sorted(r.items()))
                    if key not in seen:
                        seen.add(key)
                        relations.append(r)
    counit = [f.one if a == b else f.zero for a, b in gens]
    unit_gen = None
    if unital and m:
        unit_gen = gens.index((0, 0)) if (0, 0) in gens else None
        extra = []
        if unit_gen is not None:
            extra.append({(unit_gen,): f.one, (): -f.one})
        for b in range(1, m):
            comb = expr[(b, 0)]
            if comb:
                extra.append({(i,): c for i, c in comb.items()})
        for r in extra:
            key = tuple(sorted(r.items()))
            if key not in seen:
                seen.add(key)
                relations.append(r)
    pres = HopfPresentation(
        generators=gens,
        lin_deps=lin_deps,
        relations=relations,
        delta_data={"rule": "Delta x_ab = sum_g x_ag (x) x_gb"},
        counit_data=counit,
        antipode_closed=True,
        unit_grouplike=unit_gen,
        basis=basis,
        field=f,
    )
    pres.checks = {
        "counit_zero": all(pres.counit_value(r) == f.zero for r in relations),
        "coideal_identity": _symbolic_coideal_check(rho),
        "relation_count": len(relations),
    }
    return pres


def presentation_map(rho1: Coaction, rho2: Coaction) -> dict | None:
    """Generator data ``x_ab -> x'_ab`` of the induced map when ``rho1`` is finer than ``rho2``."""
    if coarser_morphism(rho1, rho2) is None:
        return None
    p1 = universal_hopf_presentation(rho1)
    p2 = universal_hopf_presentation(rho2)
    idx2 = {pair: i for i, pair in enumerate(p2.generators)}
    deps2 = dict(p2.lin_deps)
    out = {}
    for i, pair in enumerate(p1.generators):
        if pair in idx2:
            out[i] = {idx2[pair]: rho1.field.one}
        else:
            out[i] = deps2.get(pair, {})
    return out


# ----------------------------------------------------------------------------

def _hopf_grouplikes(H: FinHopf) -> tuple:
    """Group-likes of ``H`` as a group with the table induced by multiplication."""
    g = grouplikes(H)
    idx = {v: i for i, v in enumerate(g)}
    table = [[idx[H.multiply(x, y)] for y in g] for x in g]
    names = []
    for v in g:
        nz = [i for i, x in enumerate(v) if x]
        names.append(H.basis_names[nz[0]] if len(nz) == 1 and v[nz[0]] == H.field.one else
                     "+".join(H.basis_names[i] for i in nz))
    return g, FiniteGroup(table, names)


def detect_grading(rho: Coaction):
    """The grading a group-like-spanned support coalgebra induces, with its universal group; else ``None``."""
    from .grading import Grading, check_grading, universal_group

    sc = support_coalgebra(rho)
    if grouplike_basis(sc) is None:
        return None
    A = rho.algebra
    m = A.dim
    n = rho.hopf.dim
    f = rho.field
    glikes, G = _hopf_grouplikes(rho.hopf)
    comps = {}
    total = 0
    for gi, g in enumerate(glikes):
        # rho(a) - a (x) g = 0 for a = sum x_j a_j
        cols = []
        for j in range(m):
            cols.append(vsub(rho.rho(A.basis_vector(j)), kron_vec(A.basis_vector(j), g)))
        if m:
            ker = kernel(Matrix.from_columns(f, cols, m * n))
        else:
            ker = span(f, [], 0)
        if ker.dim:
            comps[gi] = ker
            total += ker.dim
    if total != m:
        return None
    gr = Grading(A, G, comps)
    if not check_grading(gr).ok:
        return None
    return universal_group(gr), gr


def can_map_comodule(rho: Coaction) -> Report:
    """``can(a (x) b) = a b_(0) (x) b_(1)`` on ``A (x)_{A^coH} A``."""
    A, H = rho.algebra, rho.hopf
    if A.unit is None:
        raise NotUnital("can map needs a unital algebra")
    m, n = A.dim, H.dim
    f = A.field
    cols = [vsub(rho.rho(A.basis_vector(j)), kron_vec(A.basis_vector(j), H.one)) for j in range(m)]
    coinv = kernel(Matrix.from_columns(f, cols, m * n))
    rhos = [rho.rho(A.basis_vector(j)) for j in range(m)]
    cancols = []
    for i in range(m):
        for j in range(m):
            col = [f.zero] * (m * n)
            for b, k, c in tensor_terms(rhos[j], n):
                v = A.mult[i][b]
                for s, x in enumerate(v):
                    if x:
                        col[s * n + k] = col[s * n + k] + c * x
            cancols.append(tuple(col))
    can = Matrix.from_columns(f, cancols, m * n)
    rep = balanced_can_report("comodule can map", A, coinv, can, m * n)
    if rep.details["surjective"]:
        rep.details["hopf_galois"] = "universal Hopf algebra is H itself"
    return rep
