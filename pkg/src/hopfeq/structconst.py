"""Algebras, coalgebras and Hopf algebras given by structure constants.

Conventions (used throughout the package):

* vectors are tuples of field scalars in a fixed basis;
* an element of ``V (x) W`` with ``dim W = n`` is a flat vector with
  coordinate ``i*n + j`` for ``v_i (x) w_j``;
* ``mult[a][b]`` is the coordinate vector of ``e_a * e_b``;
* ``delta[a]`` is the flat tensor ``Delta(e_a)``;
* matrices act on column vectors; column ``j`` of a linear map is the image of ``e_j``.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Sequence

from .errors import InvalidStructure, NotUnital, ShapeError
from .exactlin import (
    Field, Fp, Matrix, is_zero_vector, kernel, lincomb, span, unit_vector, vadd, vscale, vsub,
)
from .reports import Report


def kron_vec(u, v) -> tuple:
    return tuple(a * b for a in u for b in v)


def tensor_map(f: Matrix, g: Matrix, t) -> tuple:
    """``(f (x) g)`` applied to a flat tensor ``t`` in ``F^m (x) F^n``."""
    m, n = f.cols, g.cols
    if len(t) != m * n:
        raise ShapeError("tensor length does not match the maps")
    field = f.field
    out = [field.zero] * (f.rows * g.rows)
    q = g.rows
    for i in range(m):
        for j in range(n):
            c = t[i * n + j]
            if not c:
                continue
            fi = f.column(i)
            gj = g.column(j)
            for a, x in enumerate(fi):
                if x:
                    cx = c * x
                    for b, y in enumerate(gj):
                        if y:
                            out[a * q + b] = out[a * q + b] + cx * y
    return tuple(out)


def tensor_terms(t, n):
    """Nonzero ``(i, j, c)`` entries of a flat tensor with right factor dimension ``n``."""
    for k, c in enumerate(t):
        if c:
            yield k // n, k % n, c


def _names(names, dim, prefix="e"):
    if names is None:
        return tuple(f"{prefix}{i}" for i in range(dim))
    names = tuple(str(x) for x in names)
    if len(names) != dim:
        raise ShapeError(f"{len(names)} basis names for dimension {dim}")
    return names


# ----------------------------------------------------------------------------

class FinAlgebra:
    """Finite-dimensional algebra, not necessarily associative or unital."""

    def __init__(self, field: Field, mult, unit=None, basis_names=None):
        dim = len(mult)
        table = []
        for row in mult:
            if len(row) != dim:
                raise ShapeError("multiplication table must be dim x dim x dim")
            trow = []
            for v in row:
                if len(v) != dim:
                    raise ShapeError("multiplication table must be dim x dim x dim")
                trow.append(tuple(field(x) for x in v))
            table.append(tuple(trow))
        self.field = field
        self.dim = dim
        self.mult = tuple(table)
        self.unit = None if unit is None else tuple(field(x) for x in unit)
        if self.unit is not None and len(self.unit) != dim:
            raise ShapeError("unit vector has wrong length")
        self.basis_names = _names(basis_names, dim)

    def __repr__(self):
        return f"FinAlgebra({self.field}, dim={self.dim}, basis={list(self.basis_names)})"

    def __eq__(self, other):
        return (isinstance(other, FinAlgebra) and self.field == other.field
                and self.mult == other.mult and self.unit == other.unit)

    def __hash__(self):
        return hash((self.field, self.mult))

    @property
    def one(self) -> tuple:
        if self.unit is None:
            raise NotUnital("algebra has no declared unit")
        return self.unit

    def basis_vector(self, i) -> tuple:
        return unit_vector(self.field, self.dim, i)

    def zero_vector(self) -> tuple:
        return (self.field.zero,) * self.dim

    def multiply(self, u, v) -> tuple:
        f = self.field
        out = [f.zero] * self.dim
        for a, x in enumerate(u):
            if not x:
                continue
            row = self.mult[a]
            for b, y in enumerate(v):
                if not y:
                    continue
                c = x * y
                for k, z in enumerate(row[b]):
                    if z:
                        out[k] = out[k] + c * z
        return tuple(out)

    def left_matrix(self, u) -> Matrix:
        """Matrix of ``x -> u x``."""
        cols = [self.multiply(u, self.basis_vector(j)) for j in range(self.dim)]
        return Matrix.from_columns(self.field, cols, self.dim) if cols else Matrix.zeros(self.field, 0, 0)

    def right_matrix(self, u) -> Matrix:
        """Matrix of ``x -> x u``."""
        cols = [self.multiply(self.basis_vector(j), u) for j in range(self.dim)]
        return Matrix.from_columns(self.field, cols, self.dim) if cols else Matrix.zeros(self.field, 0, 0)

    def mult_matrix(self) -> Matrix:
        """The ``dim x dim^2`` matrix of the multiplication map ``A (x) A -> A``."""
        n = self.dim
        cols = [self.mult[i][j] for i in range(n) for j in range(n)]
        if not cols:
            return Matrix.zeros(self.field, 0, 0)
        return Matrix.from_columns(self.field, cols)

    def is_commutative(self) -> bool:
        n = self.dim
        return all(self.mult[i][j] == self.mult[j][i] for i in range(n) for j in range(i + 1, n))

    def change_basis(self, p: Matrix, basis_names=None) -> "FinAlgebra":
        """The same algebra written in the basis given by the columns of ``p``."""
        pinv = p.inverse()
        if pinv is None:
            raise ShapeError("basis change matrix is singular")
        cols = [p.column(j) for j in range(self.dim)]
        mult = [[pinv.apply(self.multiply(cols[a], cols[b])) for b in range(self.dim)]
                for a in range(self.dim)]
        unit = None if self.unit is None else pinv.apply(self.unit)
        return FinAlgebra(self.field, mult, unit, basis_names or self.basis_names)

    def to_json(self) -> dict:
        f = self.field
        d = {
            "kind": "algebra",
            "field": f.to_json(),
            "dim": self.dim,
            "basis": list(self.basis_names),
            "mult": [[[f.scalar_to_json(x) for x in v] for v in row] for row in self.mult],
        }
        if self.unit is not None:
            d["unit"] = [f.scalar_to_json(x) for x in self.unit]
        return d

    @classmethod
    def from_json(cls, d, field: Field | None = None) -> "FinAlgebra":
        field = field or Field.from_json(d["field"])
        if "dim" in d and len(d["mult"]) != d["dim"]:
            raise ShapeError("dim does not match the multiplication table")
        return cls(field, d["mult"], d.get("unit"), d.get("basis"))


def tensor_algebra(a: FinAlgebra, b: FinAlgebra) -> FinAlgebra:
    """``A (x) B`` with ``(a (x) b)(c (x) d) = ac (x) bd``."""
    if a.field != b.field:
        raise ShapeError("tensor product of algebras over different fields")
    mult = [[kron_vec(a.mult[i][k], b.mult[j][l]) for k in range(a.dim) for l in range(b.dim)]
            for i in range(a.dim) for j in range(b.dim)]
    unit = None
    if a.unit is not None and b.unit is not None:
        unit = kron_vec(a.unit, b.unit)
    names = [f"{x}(x){y}" for x in a.basis_names for y in b.basis_names]
    return FinAlgebra(a.field, mult, unit, names)


class FinCoalgebra:
    """Finite-dimensional coalgebra: ``delta[a]`` is the flat tensor of ``Delta(e_a)``."""

    def __init__(self, field: Field, delta, counit, basis_names=None):
        dim = len(counit)
        rows = []
        for t in delta:
            if isinstance(t, dict):
                v = [field.zero] * (dim * dim)
                for (i, j), c in t.items():
                    v[i * dim + j] = v[i * dim + j] + field(c)
                rows.append(tuple(v))
            else:
                if len(t) != dim * dim:
                    raise ShapeError("comultiplication tensor has wrong length")
                rows.append(tuple(field(x) for x in t))
        if len(rows) != dim:
            raise ShapeError("one comultiplication tensor per basis vector is required")
        self.field = field
        self.dim = dim
        self.delta = tuple(rows)
        self.counit = tuple(field(x) for x in counit)
        self.basis_names = _names(basis_names, dim)

    def __eq__(self, other):
        return (isinstance(other, FinCoalgebra) and self.field == other.field
                and self.delta == other.delta and self.counit == other.counit)

    def __hash__(self):
        return hash((self.field, self.delta))

    def comultiply(self, v) -> tuple:
        return lincomb(self.field, self.dim * self.dim, zip(v, self.delta))

    def epsilon(self, v):
        s = self.field.zero
        for a, b in zip(v, self.counit):
            if a and b:
                s = s + a * b
        return s

    def delta_matrix(self) -> Matrix:
        return Matrix.from_columns(self.field, list(self.delta))

    def delta_triples(self):
        """``Delta`` as lists of ``(i, j, c)`` triples, one list per basis vector."""
        return [list(tensor_terms(t, self.dim)) for t in self.delta]

    def to_json(self) -> dict:
        f = self.field
        return {
            "kind": "coalgebra",
            "field": f.to_json(),
            "dim": self.dim,
            "basis": list(self.basis_names),
            "delta": [[[i, j, f.scalar_to_json(c)] for i, j, c in ts] for ts in self.delta_triples()],
            "counit": [f.scalar_to_json(x) for x in self.counit],
        }

    @classmethod
    def from_json(cls, d, field: Field | None = None) -> "FinCoalgebra":
        field = field or Field.from_json(d["field"])
        return cls(field, _delta_from_json(d["delta"], len(d["counit"])), d["counit"], d.get("basis"))


def _delta_from_json(rows, dim):
    out = []
    for ts in rows:
        t = {}
        for i, j, c in ts:
            if not (0 <= int(i) < dim and 0 <= int(j) < dim):
                raise ShapeError(f"comultiplication index ({i},{j}) out of range")
            t[(int(i), int(j))] = c
        out.append(t)
    return out


class FinHopf:
    """Finite-dimensional Hopf algebra on a single basis."""

    def __init__(self, algebra: FinAlgebra, coalgebra: FinCoalgebra, antipode: Matrix):
        if algebra.dim != coalgebra.dim or antipode.shape != (algebra.dim, algebra.dim):
            raise ShapeError("Hopf algebra pieces have inconsistent dimensions")
        if algebra.field != coalgebra.field or antipode.field != algebra.field:
            raise ShapeError("Hopf algebra pieces over different fields")
        self.algebra = algebra
        self.coalgebra = coalgebra
        self.antipode = antipode

    @classmethod
    def build(cls, field: Field, mult, unit, delta, counit, antipode, basis_names=None) -> "FinHopf":
        return cls(FinAlgebra(field, mult, unit, basis_names),
                   FinCoalgebra(field, delta, counit, basis_names),
                   Matrix(field, antipode))

    def __repr__(self):
        return f"FinHopf({self.field}, dim={self.dim}, basis={list(self.basis_names)})"

    def __eq__(self, other):
        return (isinstance(other, FinHopf) and self.algebra == other.algebra
                and self.coalgebra == other.coalgebra and self.antipode == other.antipode)

    def __hash__(self):
        return hash((self.algebra, self.coalgebra))

    field = property(lambda self: self.algebra.field)
    dim = property(lambda self: self.algebra.dim)
    basis_names = property(lambda self: self.algebra.basis_names)
    one = property(lambda self: self.algebra.one)
    counit = property(lambda self: self.coalgebra.counit)

    def multiply(self, u, v):
        return self.algebra.multiply(u, v)

    def comultiply(self, v):
        return self.coalgebra.comultiply(v)

    def epsilon(self, v):
        return self.coalgebra.epsilon(v)

    def S(self, v):
        return self.antipode.apply(v)

    def basis_vector(self, i):
        return self.algebra.basis_vector(i)

    def is_cocommutative(self) -> bool:
        n = self.dim
        for t in self.coalgebra.delta:
            for i in range(n):
                for j in range(i + 1, n):
                    if t[i * n + j] != t[j * n + i]:
                        return False
        return True

    def to_json(self) -> dict:
        d = self.algebra.to_json()
        c = self.coalgebra.to_json()
        d["kind"] = "hopf"
        d["delta"] = c["delta"]
        d["counit"] = c["counit"]
        d["antipode"] = self.antipode.to_json()
        return d

    @classmethod
    def from_json(cls, d, field: Field | None = None) -> "FinHopf":
        field = field or Field.from_json(d["field"])
        n = len(d["mult"])
        if "unit" not in d:
            raise NotUnital("Hopf algebra JSON needs a unit")
        return cls.build(field, d["mult"], d["unit"], _delta_from_json(d["delta"], n),
                         d["counit"], d["antipode"], d.get("basis"))


# ----------------------------------------------------------------------------
# checkers

def find_unit(a: FinAlgebra):
    """A two-sided unit found by solving ``u e_j = e_j = e_j u``, or ``None``."""
    n = a.dim
    f = a.field
    if n == 0:
        return ()
    rows, rhs = [], []
    for j in range(n):
        for k in range(n):
            rows.append([a.mult[i][j][k] for i in range(n)])
            rhs.append(f.one if j == k else f.zero)
            rows.append([a.mult[j][i][k] for i in range(n)])
            rhs.append(f.one if j == k else f.zero)
    from .exactlin import solve
    return solve(Matrix(f, rows), rhs)


def check_algebra(a: FinAlgebra, require_associative: bool = True, require_unit: bool = False) -> Report:
    rep = Report("algebra")
    n = a.dim
    assoc = True
    for i, j, k in itertools.product(range(n), repeat=3):
        ei, ek = a.basis_vector(i), a.basis_vector(k)
        left = a.multiply(a.mult[i][j], ek)
        right = a.multiply(ei, a.mult[j][k])
        if left != right:
            assoc = False
            if require_associative:
                rep.fail("associativity", [i, j, k])
    rep.details["associative"] = assoc
    unit = find_unit(a)
    rep.details["unit"] = unit
    rep.details["unital"] = unit is not None
    if a.unit is not None:
        for j in range(n):
            ej = a.basis_vector(j)
            if a.multiply(a.unit, ej) != ej or a.multiply(ej, a.unit) != ej:
                rep.fail("declared unit", j)
    elif require_unit and unit is None:
        rep.fail("unit exists", None)
    return rep


def check_coalgebra(c: FinCoalgebra) -> Report:
    rep = Report("coalgebra")
    n = c.dim
    f = c.field
    for a in range(n):
        t = c.delta[a]
        left = [f.zero] * (n ** 3)   # (Delta (x) id) Delta
        right = [f.zero] * (n ** 3)  # (id (x) Delta) Delta
        for i, j, x in tensor_terms(t, n):
            for p, q, y in tensor_terms(c.delta[i], n):
                k = (p * n + q) * n + j
                left[k] = left[k] + x * y
            for p, q, y in tensor_terms(c.delta[j], n):
                k = i * n * n + p * n + q
                right[k] = right[k] + x * y
        if left != right:
            rep.fail("coassociativity", a)
        ea = unit_vector(f, n, a)
        l_counit = [f.zero] * n
        r_counit = [f.zero] * n
        for i, j, x in tensor_terms(t, n):
            l_counit[j] = l_counit[j] + x * c.counit[i]
            r_counit[i] = r_counit[i] + x * c.counit[j]
        if tuple(l_counit) != ea:
            rep.fail("left counit", a)
        if tuple(r_counit) != ea:
            rep.fail("right counit", a)
    return rep


def _mult_flat(a: FinAlgebra, t) -> tuple:
    n = a.dim
    return lincomb(a.field, n, ((c, a.mult[i][j]) for i, j, c in tensor_terms(t, n)))


def check_hopf(h: FinHopf) -> Report:
    rep = Report("hopf")
    rep.merge(check_algebra(h.algebra, require_associative=True, require_unit=True), "algebra: ")
    rep.merge(check_coalgebra(h.coalgebra), "coalgebra: ")
    if h.algebra.unit is None:
        rep.fail("algebra: declared unit", None)
        return rep
    n = h.dim
    f = h.field
    one = h.one
    hh = tensor_algebra(h.algebra, h.algebra)
    for a in range(n):
        da = h.coalgebra.delta[a]
        for b in range(n):
            prod = h.algebra.mult[a][b]
            if h.comultiply(prod) != hh.multiply(da, h.coalgebra.delta[b]):
                rep.fail("comultiplication is multiplicative", [a, b])
            if h.epsilon(prod) != h.coalgebra.counit[a] * h.coalgebra.counit[b]:
                rep.fail("counit is multiplicative", [a, b])
    if h.comultiply(one) != kron_vec(one, one):
        rep.fail("comultiplication preserves unit", {"unit": one})
    if h.epsilon(one) != f.one:
        rep.fail("counit preserves unit", {"unit": one})
    ident = Matrix.identity(f, n)
    for a in range(n):
        target = vscale(h.coalgebra.counit[a], one)
        if _mult_flat(h.algebra, tensor_map(h.antipode, ident, h.coalgebra.delta[a])) != target:
            rep.fail("antipode (left)", a)
        if _mult_flat(h.algebra, tensor_map(ident, h.antipode, h.coalgebra.delta[a])) != target:
            rep.fail("antipode (right)", a)
    return rep


def dual_hopf(h: FinHopf, basis_names=None, check: bool = True) -> FinHopf:
    """``H*`` on the dual basis: products from ``Delta``, coproduct from products."""
    if check:
        rep = check_hopf(h)
        if not rep.ok:
            raise InvalidStructure("dual_hopf needs a valid Hopf algebra", rep)
    n = h.dim
    f = h.field
    mult = [[[h.coalgebra.delta[k][i * n + j] for k in range(n)] for j in range(n)] for i in range(n)]
    delta = [tuple(h.algebra.mult[i][j][k] for i in range(n) for j in range(n)) for k in range(n)]
    unit = h.coalgebra.counit
    counit = h.one
    names = basis_names or [f"{x}*" for x in h.basis_names]
    return FinHopf(FinAlgebra(f, mult, unit, names), FinCoalgebra(f, delta, counit, names), h.antipode.T)


# ----------------------------------------------------------------------------
# group-likes and primitives

def _char_poly_roots(m: Matrix) -> list:
    """Roots in the base field of the characteristic polynomial of ``m``."""
    from sympy import GF, QQ, Poly, symbols
    from sympy.polys.matrices import DomainMatrix

    field = m.field
    t = symbols("t")
    if field.is_rational:
        dom = QQ
        rows = [[QQ(x.numerator, x.denominator) for x in r] for r in m.tolist()]
        cp = DomainMatrix(rows, m.shape, dom).charpoly()
        poly = Poly([QQ(c) for c in cp], t, domain=QQ)
        return sorted(field(Fraction(int(r.p), int(r.q))) for r in poly.ground_roots())
    p = field.p
    dom = GF(p)
    rows = [[dom(int(x)) for x in r] for r in m.tolist()]
    cp = DomainMatrix(rows, m.shape, dom).charpoly()
    poly = Poly([int(c) % p for c in cp], t, modulus=p)
    return sorted({field(int(r)) for r in poly.ground_roots()}, key=int)


def _slice_operators(c: FinCoalgebra) -> list:
    """``T_i(x) = (e_i^* (x) id) Delta(x)`` for each dual basis functional."""
    n = c.dim
    ops = []
    for i in range(n):
        cols = [tuple(c.delta[a][i * n + j] for j in range(n)) for a in range(n)]
        ops.append(Matrix.from_columns(c.field, cols))
    return ops


def grouplikes_eigen(c: FinCoalgebra) -> list:
    """All group-likes as common eigenvectors of the slice operators.

    A nonzero ``x`` with ``T_i x = lambda_i x`` for every ``i`` has
    ``Delta x = lambda (x) x``; the counit laws then force ``x`` to be a
    multiple of ``lambda`` with ``eps(lambda) = 1``.  So the group-likes are
    exactly the eigenvalue vectors of joint eigenvectors, and the search is
    complete over any field containing the eigenvalues it needs.
    """
    n = c.dim
    f = c.field
    ops = _slice_operators(c)
    branches = [((), span(f, [unit_vector(f, n, i) for i in range(n)], n))]
    for i, op in enumerate(ops):
        roots = _char_poly_roots(op)
        nxt = []
        for lam, sub in branches:
            for r in roots:
                shifted = op - Matrix.identity(f, n).scale(r)
                eig = kernel(shifted)
                inter = sub.intersection(eig)
                if inter.dim:
                    nxt.append((lam + (r,), inter))
        branches = nxt
    out = []
    for lam, _ in branches:
        x = tuple(lam)
        if c.epsilon(x) == f.one and c.comultiply(x) == kron_vec(x, x):
            out.append(x)
    return sort_vectors(out)


def grouplikes_exhaustive(c: FinCoalgebra, budget: int = 10 ** 6) -> list:
    """All group-likes over a prime field by enumerating ``x`` with ``eps(x) = 1``."""
    f = c.field
    if f.is_rational:
        raise ValueError("exhaustive search needs a finite field")
    n = c.dim
    if f.p ** n > budget:
        from .errors import BudgetExceeded
        raise BudgetExceeded(f"{f.p}^{n} candidates exceed the budget {budget}")
    out = []
    for coords in itertools.product(range(f.p), repeat=n):
        x = tuple(f(v) for v in coords)
        if c.epsilon(x) == f.one and c.comultiply(x) == kron_vec(x, x):
            out.append(x)
    return sort_vectors(out)


def _scalar_key(x):
    return int(x) if isinstance(x, Fp) else x


def sort_vectors(vs) -> list:
    """Order by first nonzero coordinate, then coordinatewise."""
    def key(v):
        first = next((i for i, x in enumerate(v) if x), len(v))
        return (first, tuple(_scalar_key(x) for x in v))
    return sorted(vs, key=key)


def grouplike_search(h, method: str = "auto", budget: int = 10 ** 6) -> Report:
    """Group-likes with a report of the method used and completeness."""
    c = h.coalgebra if isinstance(h, FinHopf) else h
    f = c.field
    rep = Report("grouplikes")
    if method == "auto":
        method = "exhaustive" if (not f.is_rational and f.p ** c.dim <= budget) else "eigen"
    if method == "exhaustive":
        g = grouplikes_exhaustive(c, budget)
    elif method == "eigen":
        g = grouplikes_eigen(c)
    else:
        raise ValueError(f"unknown method {method!r}")
    rep.details.update(method=method, complete=True, grouplikes=g, count=len(g))
    return rep


def grouplikes(h, method: str = "auto") -> list:
    return grouplike_search(h, method).details["grouplikes"]


def primitives(h: FinHopf):
    """Solution space of ``Delta x = x (x) 1 + 1 (x) x``."""
    n = h.dim
    one = h.one
    cols = []
    for a in range(n):
        ea = h.basis_vector(a)
        cols.append(vsub(vsub(h.coalgebra.delta[a], kron_vec(ea, one)), kron_vec(one, ea)))
    return kernel(Matrix.from_columns(h.field, cols))


# ----------------------------------------------------------------------------
# finite groups

class FiniteGroup:
    """A finite group given by its multiplication table of indices."""

    def __init__(self, table: Sequence[Sequence[int]], names=None):
        self.table = tuple(tuple(int(x) for x in row) for row in table)
        self.order = len(self.table)
        self.names = _names(names, self.order, "g")
        ident = [e for e in range(self.order)
                 if all(self.table[e][g] == g and self.table[g][e] == g for g in range(self.order))]
        self.identity = ident[0] if ident else None

    def __repr__(self):
        return f"FiniteGroup(order={self.order}, names={list(self.names)})"

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    def inverse(self, g: int) -> int:
        for h in range(self.order):
            if self.table[g][h] == self.identity:
                return h
        raise InvalidStructure(f"{self.names[g]} has no inverse")

    def is_abelian(self) -> bool:
        return all(self.table[g][h] == self.table[h][g] for g in range(self.order) for h in range(self.order))

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != self.identity:
            x = self.table[x][g]
            k += 1
        return k

    def exponent(self) -> int:
        from math import lcm
        e = 1
        for g in range(self.order):
            e = lcm(e, self.element_order(g))
        return e

    def index(self, name: str) -> int:
        return self.names.index(name)

    def to_json(self) -> dict:
        return {"kind": "group", "order": self.order, "names": list(self.names), "table": [list(r) for r in self.table]}

    @classmethod
    def from_json(cls, d) -> "FiniteGroup":
        g = cls(d["table"], d.get("names"))
        if "order" in d and d["order"] != g.order:
            raise ShapeError("group order does not match the table")
        return g

    @classmethod
    def cyclic(cls, n: int) -> "FiniteGroup":
        return cls([[(i + j) % n for j in range(n)] for i in range(n)], [f"{i}" for i in range(n)])

    @classmethod
    def trivial(cls) -> "FiniteGroup":
        return cls([[0]], ["e"])

    @classmethod
    def symmetric3(cls) -> "FiniteGroup":
        """S_3, products composed right to left, so ``(12)(23) = (123)``."""
        perms = {
            "id": (0, 1, 2), "(12)": (1, 0, 2), "(23)": (0, 2, 1),
            "(123)": (1, 2, 0), "(132)": (2, 0, 1), "(13)": (2, 1, 0),
        }
        names = list(perms)
        elems = [perms[k] for k in names]
        table = []
        for p in elems:
            row = []
            for q in elems:
                comp = tuple(p[q[i]] for i in range(3))
                row.append(elems.index(comp))
            table.append(row)
        return cls(table, names)

    @classmethod
    def product(cls, g1: "FiniteGroup", g2: "FiniteGroup") -> "FiniteGroup":
        n2 = g2.order
        table = [[g1.table[a // n2][b // n2] * n2 + g2.table[a % n2][b % n2]
                  for b in range(g1.order * n2)] for a in range(g1.order * n2)]
        names = [f"({x},{y})" for x in g1.names for y in g2.names]
        return cls(table, names)


def check_group(g: FiniteGroup) -> Report:
    rep = Report("group")
    n = g.order
    for row in g.table:
        if len(row) != n or any(not (0 <= x < n) for x in row):
            rep.fail("table shape", row)
            return rep
    if g.identity is None:
        rep.fail("identity", None)
        return rep
    for a, b, c in itertools.product(range(n), repeat=3):
        if g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]]:
            rep.fail("associativity", [a, b, c])
            break
    for a in range(n):
        if g.identity not in g.table[a]:
            rep.fail("inverses", a)
    return rep


def group_algebra(g: FiniteGroup, field: Field) -> FinHopf:
    n = g.order
    f = field
    mult = [[unit_vector(f, n, g.table[a][b]) for b in range(n)] for a in range(n)]
    unit = unit_vector(f, n, g.identity)
    delta = [{(a, a): 1} for a in range(n)]
    counit = [1] * n
    antipode = Matrix.from_columns(f, [unit_vector(f, n, g.inverse(a)) for a in range(n)])
    names = list(g.names)
    return FinHopf(FinAlgebra(f, mult, unit, names), FinCoalgebra(f, delta, counit, names), antipode)


def dual_group_algebra(g: FiniteGroup, field: Field) -> FinHopf:
    """``(FG)*`` on the basis ``h_g`` of point functionals."""
    return dual_hopf(group_algebra(g, field), [f"h_{x}" for x in g.names], check=False)


def trivial_hopf(field: Field) -> FinHopf:
    return FinHopf.build(field, [[[1]]], [1], [{(0, 0): 1}], [1], [[1]], ["1"])


def smash_product(module, check: bool = True):
    """``A # H`` for an H-module algebra, with its coaction ``a # h -> a # h_(1) (x) h_(2)``."""
    from .comodule import Coaction
    from .modulealg import check_module_algebra

    if check:
        rep = check_module_algebra(module)
        if not rep.ok:
            raise InvalidStructure("smash product needs a module algebra", rep)
    A = module.algebra
    H = module.hopf
    f = A.field
    m, n = A.dim, H.dim
    N = m * n
    mats = module.action
    mult = [[None] * N for _ in range(N)]
    for i in range(m):
        for k in range(n):
            terms = list(tensor_terms(H.coalgebra.delta[k], n))
            for j in range(m):
                ej = A.basis_vector(j)
                for l in range(n):
                    out = [f.zero] * N
                    for p, q, c in terms:
                        av = A.multiply(A.basis_vector(i), mats[p].apply(ej))
                        hv = H.algebra.mult[q][l]
                        for s, x in enumerate(av):
                            if x:
                                for r, y in enumerate(hv):
                                    if y:
                                        out[s * n + r] = out[s * n + r] + c * x * y
                    mult[i * n + k][j * n + l] = tuple(out)
    unit = None
    if A.unit is not None:
        unit = kron_vec(A.unit, H.one)
    names = [f"{x}#{y}" for x in A.basis_names for y in H.basis_names]
    smash = FinAlgebra(f, mult, unit, names)
    zero = (f.zero,) * n
    coeff = [[zero] * N for _ in range(N)]
    for i in range(m):
        for k in range(n):
            for p, q, c in tensor_terms(H.coalgebra.delta[k], n):
                beta, alpha = i * n + p, i * n + k
                coeff[beta][alpha] = vadd(coeff[beta][alpha], vscale(c, unit_vector(f, n, q)))
    return smash, Coaction(smash, H, coeff)


def structure_summary(x) -> dict:
    return {"dim": x.dim, "basis": list(x.basis_names), "field": x.field.to_json()}


__all__ = [
    "FinAlgebra", "FinCoalgebra", "FinHopf", "FiniteGroup", "check_algebra", "check_coalgebra",
    "check_hopf", "check_group", "dual_hopf", "grouplikes", "grouplike_search", "primitives",
    "group_algebra", "dual_group_algebra", "trivial_hopf", "smash_product", "tensor_algebra",
    "tensor_map", "kron_vec", "find_unit", "is_zero_vector",
]


# ----------------------------------------------------------------------------
# algebra maps

def check_algebra_map(a1: FinAlgebra, a2: FinAlgebra, phi: Matrix) -> Report:
    """Is ``phi`` an algebra map ``A1 -> A2`` (and does it send unit to unit)?"""
    rep = Report("algebra map")
    if phi.shape != (a2.dim, a1.dim):
        rep.fail("shape", [phi.rows, phi.cols])
        return rep
    cols = [phi.column(j) for j in range(a1.dim)]
    for i in range(a1.dim):
        for j in range(a1.dim):
            if phi.apply(a1.mult[i][j]) != a2.multiply(cols[i], cols[j]):
                rep.fail("multiplicative", [i, j])
    if a1.unit is not None and a2.unit is not None and phi.apply(a1.unit) != a2.unit:
        rep.fail("unit preserved", None)
    return rep


def require_isomorphism(a1: FinAlgebra, a2: FinAlgebra, phi) -> tuple:
    """Validate ``phi`` (a Matrix, or ``None`` for the identity); return ``(phi, phi^-1)``."""
    from .errors import NotAnIsomorphism

    if phi is None or (isinstance(phi, str) and phi == "identity"):
        if a1.dim != a2.dim:
            raise NotAnIsomorphism("identity between algebras of different dimension")
        phi = Matrix.identity(a1.field, a1.dim)
    if phi.field != a1.field or a1.field != a2.field:
        raise NotAnIsomorphism("isomorphism over a different field")
    if phi.shape != (a2.dim, a1.dim):
        raise NotAnIsomorphism(f"map of shape {phi.shape} between dims {a1.dim} and {a2.dim}")
    inv = phi.inverse()
    if inv is None:
        raise NotAnIsomorphism("map is not invertible")
    rep = check_algebra_map(a1, a2, phi)
    if not rep.ok:
        raise NotAnIsomorphism(f"map is not an algebra homomorphism: {rep.failures[0]}")
    return phi, inv
