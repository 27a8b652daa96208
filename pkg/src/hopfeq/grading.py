"""Group gradings, their dual actions, and universal group presentations."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import BudgetExceeded, InvalidStructure, ShapeError
from .exactlin import Field, Matrix, Subspace, full_space, lincomb, smith_normal_form, span
from .modulealg import ModuleStructure, SpanDecision, conjugate_span, operator_span
from .reports import Report
from .structconst import (
    FinAlgebra, FiniteGroup, dual_group_algebra, group_algebra, require_isomorphism,
)


class Grading:
    """``A = sum of components[g]`` over the elements ``g`` of a finite group."""

    def __init__(self, algebra: FinAlgebra, group: FiniteGroup, components):
        f, n = algebra.field, algebra.dim
        comps = []
        if isinstance(components, dict):
            components = [components.get(g, []) for g in range(group.order)]
        if len(components) != group.order:
            raise ShapeError("one component per group element is required")
        for c in components:
            if isinstance(c, Subspace):
                if c.ambient_dim != n or c.field != f:
                    raise ShapeError("component lives in the wrong space")
                comps.append(c)
            else:
                comps.append(span(f, c, n))
        self.algebra = algebra
        self.group = group
        self.components = tuple(comps)

    field = property(lambda self: self.algebra.field)

    def __repr__(self):
        dims = {self.group.names[g]: c.dim for g, c in enumerate(self.components) if c.dim}
        return f"Grading({self.group.order}-element group, dims {dims})"

    def __eq__(self, other):
        return (isinstance(other, Grading) and self.algebra == other.algebra
                and self.group == other.group and self.components == other.components)

    def support(self) -> list:
        return [g for g, c in enumerate(self.components) if c.dim]

    def homogeneous_basis(self) -> tuple:
        """``(columns, degrees)`` listing the component bases in group order."""
        cols, degs = [], []
        for g, c in enumerate(self.components):
            for b in c.basis:
                cols.append(b)
                degs.append(g)
        return cols, degs

    def projections(self) -> list:
        """Projection matrices onto each component along the others."""
        f, n = self.field, self.algebra.dim
        cols, degs = self.homogeneous_basis()
        if len(cols) != n:
            raise InvalidStructure("components do not form a direct sum decomposition")
        B = Matrix.from_columns(f, cols)
        Binv = B.inverse()
        if Binv is None:
            raise InvalidStructure("components do not form a direct sum decomposition")
        out = []
        for g in range(self.group.order):
            D = Matrix.diag(f, [1 if d == g else 0 for d in degs])
            out.append(B @ D @ Binv)
        return out

    def degree_of(self, v):
        """Group index of the component containing ``v``, or ``None``."""
        for g, c in enumerate(self.components):
            if c.dim and v in c:
                return g
        return None

    def to_json(self) -> dict:
        return {
            "kind": "grading",
            "field": self.field.to_json(),
            "algebra": self.algebra.to_json(),
            "group": self.group.to_json(),
            "components": [{"g": g, "vectors": c.to_json()} for g, c in enumerate(self.components) if c.dim],
        }

    @classmethod
    def from_json(cls, d, field: Field | None = None) -> "Grading":
        field = field or Field.from_json(d.get("field") or d["algebra"]["field"])
        A = FinAlgebra.from_json(d["algebra"], field)
        G = FiniteGroup.from_json(d["group"])
        comps = {}
        for item in d["components"]:
            g = int(item["g"])
            if not 0 <= g < G.order:
                raise ShapeError(f"component index {g} outside the group")
            comps[g] = list(comps.get(g, [])) + [tuple(field(x) for x in v) for v in item["vectors"]]
        return cls(A, G, comps)


def trivial_grading(algebra: FinAlgebra, group: FiniteGroup | None = None) -> Grading:
    group = group or FiniteGroup.trivial()
    comps = {group.identity: full_space(algebra.field, algebra.dim)}
    return Grading(algebra, group, comps)


def check_grading(gr: Grading) -> Report:
    rep = Report("grading")
    A = gr.algebra
    n = A.dim
    total = sum(c.dim for c in gr.components)
    sumspace = span(A.field, [b for c in gr.components for b in c.basis], n)
    if total != n or sumspace.dim != n:
        rep.fail("direct sum", {"sum_of_dims": total, "dim_of_sum": sumspace.dim, "dim": n})
        return rep
    G = gr.group
    supp = gr.support()
    for g in supp:
        for h in supp:
            target = gr.components[G.mul(g, h)]
            for x in gr.components[g].basis:
                bad = None
                for y in gr.components[h].basis:
                    p = A.multiply(x, y)
                    if any(p) and p not in target:
                        bad = p
                        break
                if bad is not None:
                    rep.fail("A^g A^h in A^gh", {"pair": [g, h], "names": [G.names[g], G.names[h]]})
                    break
    rep.details["support"] = supp
    return rep


def support(gr: Grading) -> list:
    return gr.support()


def dual_action(gr: Grading) -> ModuleStructure:
    """``(FG)*`` acting through the projections: ``h_g`` projects onto ``A^g``."""
    H = dual_group_algebra(gr.group, gr.field)
    return ModuleStructure(gr.algebra, H, gr.projections())


def _primitive_root(field: Field, e: int):
    if e == 1:
        return field.one
    if field.is_rational:
        if e == 2:
            return field(-1)
        return None
    p = field.p
    if (p - 1) % e:
        return None
    from sympy import factorint
    primes = list(factorint(e))
    for x in range(2, p):
        if pow(x, e, p) == 1 and all(pow(x, e // q, p) != 1 for q in primes):
            return field(x)
    return None


def characters(group: FiniteGroup, field: Field, root=None) -> list:
    """All homomorphisms ``G -> F^x`` as value tuples, for an abelian ``G``."""
    if not group.is_abelian():
        raise InvalidStructure("characters are only used for abelian groups")
    e = group.exponent()
    w = field(root) if root is not None else _primitive_root(field, e)
    if w is None:
        raise InvalidStructure(f"{field} lacks a primitive {e}-th root of unity")
    if w ** e != field.one or any(w ** k == field.one for k in range(1, e)):
        raise InvalidStructure(f"{w} is not a primitive {e}-th root of unity")
    # greedy generating set
    gens = []
    reached = {group.identity}
    for g in range(group.order):
        if g in reached:
            continue
        gens.append(g)
        frontier = list(reached)
        reached = set(frontier)
        while frontier:
            x = frontier.pop()
            for s in gens:
                y = group.mul(x, s)
                if y not in reached:
                    reached.add(y)
                    frontier.append(y)
    import itertools
    out = []
    for exps in itertools.product(*[range(e) for _ in gens]):
        vals = {group.identity: 0}
        ok = True
        frontier = [group.identity]
        while frontier and ok:
            x = frontier.pop()
            for s, k in zip(gens, exps):
                y = group.mul(x, s)
                v = (vals[x] + k) % e
                if y in vals:
                    if vals[y] != v:
                        ok = False
                        break
                else:
                    vals[y] = v
                    frontier.append(y)
        if ok:
            chi = tuple(w ** vals[g] for g in range(group.order))
            if chi not in out:
                out.append(chi)
    return out


def character_action(gr: Grading, root=None) -> ModuleStructure:
    """The character group acting by ``chi a = chi(g) a`` on ``A^g``; a module over ``F[chars]``."""
    G = gr.group
    f = gr.field
    chars = characters(G, f, root)
    k = len(chars)
    table = [[chars.index(tuple(x * y for x, y in zip(chars[a], chars[b]))) for b in range(k)] for a in range(k)]
    dual = FiniteGroup(table, [f"chi{i}" for i in range(k)])
    H = group_algebra(dual, f)
    P = gr.projections()
    n = gr.algebra.dim
    mats = []
    for chi in chars:
        flat = lincomb(f, n * n, ((chi[g], P[g].flat()) for g in range(G.order)))
        mats.append(Matrix(f, [flat[i * n:(i + 1) * n] for i in range(n)]))
    return ModuleStructure(gr.algebra, H, mats)


def dual_span(gr: Grading) -> Subspace:
    return operator_span(gr.field, gr.projections(), gr.algebra.dim)


def support_bijection(g1: Grading, g2: Grading, phi: Matrix) -> dict | None:
    """Map each support element of ``g1`` to the one of ``g2`` receiving its transported component."""
    out = {}
    for g in g1.support():
        moved = span(g1.field, [phi.apply(b) for b in g1.components[g].basis], g1.algebra.dim)
        match = [h for h in g2.support() if g2.components[h] == moved]
        if len(match) != 1:
            return None
        out[g] = match[0]
    return out


def grading_equivalent(g1: Grading, g2: Grading, phi=None) -> SpanDecision:
    phi, phi_inv = require_isomorphism(g1.algebra, g2.algebra, phi)
    n = g1.algebra.dim
    s1 = conjugate_span(phi, phi_inv, dual_span(g1), n)
    s2 = dual_span(g2)
    if s1 == s2:
        bij = support_bijection(g1, g2, phi)
        named = {g1.group.names[a]: g2.group.names[b] for a, b in (bij or {}).items()}
        return SpanDecision(True, {"bijection": bij, "bijection_names": named, "dim": s1.dim})
    w = s1.complement_vector(s2)
    if w is None:
        w = s2.complement_vector(s1)
    sep = Matrix(g1.field, [w[i * n:(i + 1) * n] for i in range(n)])
    return SpanDecision(False, {"dims": [s1.dim, s2.dim], "separating_operator": sep})


def finer_componentwise(g1: Grading, g2: Grading, phi: Matrix | None = None) -> bool:
    """Every transported component of ``g1`` sits inside some component of ``g2``."""
    n = g1.algebra.dim
    for g in g1.support():
        vecs = g1.components[g].basis if phi is None else [phi.apply(b) for b in g1.components[g].basis]
        moved = span(g1.field, vecs, n)
        if not any(g2.components[h].contains(moved) for h in g2.support()):
            return False
    return True


def grading_finer(g1: Grading, g2: Grading, phi=None) -> bool:
    """Span containment, cross-checked against the componentwise definition."""
    if phi is None and g1.algebra != g2.algebra:
        raise ShapeError("gradings on different algebras")
    phi, phi_inv = require_isomorphism(g1.algebra, g2.algebra, phi)
    s1 = conjugate_span(phi, phi_inv, dual_span(g1), g1.algebra.dim)
    by_span = s1.contains(dual_span(g2))
    by_components = finer_componentwise(g1, g2, phi)
    if by_span != by_components:
        raise AssertionError("span criterion and componentwise definition disagree")
    return by_span


# ----------------------------------------------------------------------------
# universal group

@dataclass
class GroupPresentation:
    """Generators (one per support element) and relator words ``[(gen, exp), ...]``."""

    generator_names: list
    support: list
    relations: list
    abelianization: list = dc_field(default_factory=list)
    smith_diagonal: tuple = ()

    @property
    def ngens(self) -> int:
        return len(self.generator_names)

    def relation_matrix(self) -> list:
        rows = []
        for word in self.relations:
            row = [0] * self.ngens
            for gen, e in word:
                row[gen] += e
            rows.append(row)
        return rows

    def recompute_abelianization(self) -> list:
        rows = self.relation_matrix()
        if not rows:
            return [0] * self.ngens
        snf = smith_normal_form(rows)
        return snf.invariants(self.ngens)

    def signed_relations(self) -> list:
        """Relations as lists of signed 1-based generator indices."""
        return [[(g + 1) * e for g, e in word] for word in self.relations]

    def to_json(self) -> dict:
        return {
            "generators": list(self.generator_names),
            "support": list(self.support),
            "relations": self.signed_relations(),
            "abelianization": list(self.abelianization),
        }


def universal_group(gr: Grading) -> GroupPresentation:
    """One generator per support element, a relator ``[g][h][t]^-1`` per nonzero product."""
    rep = check_grading(gr)
    if not rep.ok:
        raise InvalidStructure("universal group needs a valid grading", rep)
    A = gr.algebra
    supp = gr.support()
    idx = {g: i for i, g in enumerate(supp)}
    rels = []
    for g in supp:
        for h in supp:
            prods = [A.multiply(x, y) for x in gr.components[g].basis for y in gr.components[h].basis]
            prods = [p for p in prods if any(p)]
            if not prods:
                continue
            pspan = span(A.field, prods, A.dim)
            targets = [t for t in supp if gr.components[t].contains(pspan)]
            if len(targets) != 1:
                raise InvalidStructure(f"product of components {g},{h} is not homogeneous")
            t = targets[0]
            rels.append([(idx[g], 1), (idx[h], 1), (idx[t], -1)])
    names = [f"[{gr.group.names[g]}]" for g in supp]
    pres = GroupPresentation(names, supp, rels)
    rows = pres.relation_matrix()
    if rows:
        snf = smith_normal_form(rows)
        pres.smith_diagonal = snf.diagonal
        pres.abelianization = snf.invariants(len(supp))
    else:
        pres.abelianization = [0] * len(supp)
    return pres


def coset_enumeration(ngens: int, relators, max_cosets: int = 10 ** 4) -> int:
    """Order of the finitely presented group by Todd-Coxeter (HLT), within a coset budget."""
    ncols = 2 * ngens
    inv = [c ^ 1 for c in range(ncols)]
    words = []
    for word in relators:
        w = []
        for gen, e in word:
            col = 2 * gen if e > 0 else 2 * gen + 1
            w.extend([col] * abs(e))
        if w:
            words.append(w)
    table = [[None] * ncols]
    parent = [0]

    def rep(c):
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def define(c, x):
        if len(table) >= max_cosets:
            raise BudgetExceeded(f"coset enumeration exceeded {max_cosets} cosets")
        d = len(table)
        table.append([None] * ncols)
        parent.append(d)
        table[c][x] = d
        table[d][inv[x]] = c

    def merge(a, b, queue):
        a, b = rep(a), rep(b)
        if a != b:
            lo, hi = min(a, b), max(a, b)
            parent[hi] = lo
            queue.append(hi)

    def coincidence(a, b):
        queue = []
        merge(a, b, queue)
        i = 0
        while i < len(queue):
            g = queue[i]
            i += 1
            for x in range(ncols):
                d = table[g][x]
                if d is None:
                    continue
                if table[d][inv[x]] == g:
                    table[d][inv[x]] = None
                m1, m2 = rep(g), rep(d)
                if table[m1][x] is not None:
                    merge(m2, table[m1][x], queue)
                elif table[m2][inv[x]] is not None:
                    merge(m1, table[m2][inv[x]], queue)
                else:
                    table[m1][x] = m2
                    table[m2][inv[x]] = m1

    def scan_and_fill(a, w):
        f, i = a, 0
        b, j = a, len(w) - 1
        while True:
            while i <= j and table[f][w[i]] is not None:
                f = table[f][w[i]]
                i += 1
            if i > j:
                if f != a:
                    coincidence(f, a)
                return
            while j >= i and table[b][inv[w[j]]] is not None:
                b = table[b][inv[w[j]]]
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if i == j:
                table[f][w[i]] = b
                table[b][inv[w[i]]] = f
                return
            define(f, w[i])

    a = 0
    while a < len(table):
        for w in words:
            if parent[a] != a:
                break
            scan_and_fill(a, w)
        if parent[a] == a:
            for x in range(ncols):
                if parent[a] != a:
                    break
                if table[a][x] is None:
                    define(a, x)
        a += 1
    return sum(1 for c in range(len(table)) if parent[c] == c)


def presentation_order(pres: GroupPresentation, max_cosets: int = 10 ** 4) -> dict:
    """``{"order": n}`` or ``{"order": None, "status": "budget exceeded"}``."""
    try:
        return {"order": coset_enumeration(pres.ngens, pres.relations, max_cosets), "status": "finite"}
    except BudgetExceeded:
        return {"order": None, "status": "budget exceeded", "max_cosets": max_cosets}


def verify_regrading(gr: Grading, candidate: FiniteGroup, gen_map) -> Report:
    """Check ``gen_map: supp -> candidate`` respects the relations and regrades ``A``.

    ``gen_map`` maps group indices (or names) of the support to candidate indices (or names).
    """
    from .structconst import check_group

    rep = Report("regrading")
    grp = check_group(candidate)
    if not grp.ok:
        raise InvalidStructure("candidate is not a group", grp)
    G = gr.group
    norm = {}
    for k, v in dict(gen_map).items():
        g = G.index(k) if isinstance(k, str) else int(k)
        c = candidate.index(v) if isinstance(v, str) else int(v)
        norm[g] = c
    supp = gr.support()
    missing = [g for g in supp if g not in norm]
    if missing:
        raise ShapeError(f"generator map misses support elements {missing}")
    pres = universal_group(gr)
    hom = True
    for word in pres.relations:
        (a, _), (b, _), (t, _) = word
        ga, gb, gt = supp[a], supp[b], supp[t]
        if candidate.mul(norm[ga], norm[gb]) != norm[gt]:
            hom = False
            rep.fail("relation holds", {"relation": [G.names[ga], G.names[gb], G.names[gt]]})
    comps = {}
    for g in supp:
        comps.setdefault(norm[g], []).extend(gr.components[g].basis)
    regraded = Grading(gr.algebra, candidate, comps)
    reg = check_grading(regraded)
    if not reg.ok:
        rep.merge(reg, "regraded: ")
    images = [norm[g] for g in supp]
    injective = len(set(images)) == len(images)
    if not injective:
        rep.fail("injective on support", {"images": [candidate.names[c] for c in images]})
    rep.details.update(
        homomorphism_exists=hom and reg.ok,
        relations_hold=hom,
        regrading_valid=reg.ok,
        injective_on_support=injective,
    )
    return rep
