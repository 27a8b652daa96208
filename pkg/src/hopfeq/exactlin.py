"""Exact scalars, matrices and subspaces over Q and F_p.

Everything here is exact: rationals are ``fractions.Fraction`` and residues
are :class:`Fp` elements.  A :class:`Field` object is the only way scalars
enter a computation, so a rational can never silently meet a residue.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import FieldMismatch, ShapeError


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Fp:
    """A residue modulo a prime.  Plain ints mix in freely; other fields do not."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _other(self, x) -> int:
        if isinstance(x, Fp):
            if x.p != self.p:
                raise FieldMismatch(f"F_{self.p} element combined with F_{x.p} element")
            return x.v
        if isinstance(x, int):
            return x
        raise FieldMismatch(f"F_{self.p} element combined with {type(x).__name__}")

    def __add__(self, x):
        return Fp(self.v + self._other(x), self.p)

    __radd__ = __add__

    def __sub__(self, x):
        return Fp(self.v - self._other(x), self.p)

    def __rsub__(self, x):
        return Fp(self._other(x) - self.v, self.p)

    def __mul__(self, x):
        return Fp(self.v * self._other(x), self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.v, self.p)

    def inverse(self) -> "Fp":
        if self.v == 0:
            raise ZeroDivisionError("inverse of 0 in F_%d" % self.p)
        return Fp(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, x):
        o = self._other(x) % self.p
        if o == 0:
            raise ZeroDivisionError("division by 0 in F_%d" % self.p)
        return Fp(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, x):
        return Fp(self._other(x), self.p) / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return Fp(pow(self.v, k, self.p), self.p)

    def __eq__(self, x):
        if isinstance(x, Fp):
            return x.p == self.p and x.v == self.v
        if isinstance(x, int):
            return self.v == x % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"{self.v} (mod {self.p})"


class Field:
    """Context object for a base field: ``Field.Q()`` or ``Field.Fp(p)``."""

    def __init__(self, p: int | None = None):
        if p is not None and not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.zero = self(0)
        self.one = self(1)

    @classmethod
    def Q(cls) -> "Field":
        return cls(None)

    @classmethod
    def Fp(cls, p: int) -> "Field":
        return cls(p)

    @property
    def is_rational(self) -> bool:
        return self.p is None

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "Q" if self.p is None else f"F_{self.p}"

    def __call__(self, x):
        """Coerce ``x`` (int, Fraction, str like "-1/2", or field element) into this field."""
        if isinstance(x, str):
            x = Fraction(x.strip())
        if self.p is None:
            if isinstance(x, Fp):
                raise FieldMismatch(f"F_{x.p} element used over Q")
            if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
                return Fraction(x)
            raise TypeError(f"cannot coerce {x!r} into Q")
        if isinstance(x, Fp):
            if x.p != self.p:
                raise FieldMismatch(f"F_{x.p} element used over F_{self.p}")
            return x
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise FieldMismatch(f"{x} has no image in F_{self.p}")
            return Fp(x.numerator, self.p) / x.denominator
        if isinstance(x, int) and not isinstance(x, bool):
            return Fp(x, self.p)
        raise TypeError(f"cannot coerce {x!r} into F_{self.p}")

    def check(self, x) -> None:
        """Raise if ``x`` is not a canonical element of this field."""
        if self.p is None:
            if not isinstance(x, Fraction):
                raise FieldMismatch(f"{x!r} is not a rational scalar")
        elif not (isinstance(x, Fp) and x.p == self.p):
            raise FieldMismatch(f"{x!r} is not an F_{self.p} scalar")

    def elements(self):
        if self.p is None:
            raise ValueError("Q is infinite")
        return [Fp(i, self.p) for i in range(self.p)]

    # JSON
    def to_json(self) -> dict:
        return {"kind": "Q"} if self.p is None else {"kind": "Fp", "p": self.p}

    @classmethod
    def from_json(cls, d) -> "Field":
        if isinstance(d, str):
            return cls.parse(d)
        if d.get("kind") == "Q":
            return cls.Q()
        if d.get("kind") == "Fp":
            return cls.Fp(int(d["p"]))
        raise ValueError(f"bad field spec {d!r}")

    @classmethod
    def parse(cls, s: str) -> "Field":
        """Parse ``Q`` or ``Fp:5`` (also ``F5``)."""
        s = s.strip()
        if s in ("Q", "QQ"):
            return cls.Q()
        if s.startswith("Fp:"):
            return cls.Fp(int(s[3:]))
        if s.startswith("F") and s[1:].isdigit():
            return cls.Fp(int(s[1:]))
        raise ValueError(f"bad field {s!r}")

    def scalar_to_json(self, x):
        if self.p is not None:
            return x.v
        if x.denominator == 1:
            return x.numerator
        return f"{x.numerator}/{x.denominator}"


def scalar_str(x) -> str:
    if isinstance(x, Fp):
        return str(x.v)
    return str(x)


# ----------------------------------------------------------------------------
# vectors: plain tuples of field scalars

def zero_vector(field: Field, n: int) -> tuple:
    return (field.zero,) * n


def unit_vector(field: Field, n: int, i: int) -> tuple:
    v = [field.zero] * n
    v[i] = field.one
    return tuple(v)


def vadd(u, v) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v) -> tuple:
    return tuple(c * a for a in v)


def is_zero_vector(v) -> bool:
    return not any(v)


def lincomb(field: Field, n: int, terms) -> tuple:
    """Sum of ``c * v`` over ``(c, v)`` pairs, as a length-``n`` vector."""
    out = [field.zero] * n
    for c, v in terms:
        if not c:
            continue
        for i, a in enumerate(v):
            if a:
                out[i] = out[i] + c * a
    return tuple(out)


# ----------------------------------------------------------------------------

class Matrix:
    """Immutable dense matrix over a :class:`Field`.  Row-major."""

    __slots__ = ("field", "rows", "cols", "_e")

    def __init__(self, field: Field, entries: Sequence[Sequence], cols: int | None = None):
        e = tuple(tuple(field(x) for x in row) for row in entries)
        if cols is None:
            cols = len(e[0]) if e else 0
        for row in e:
            if len(row) != cols:
                raise ShapeError("ragged matrix")
        self.field = field
        self.rows = len(e)
        self.cols = cols
        self._e = e

    @classmethod
    def _raw(cls, field: Field, e: tuple, cols: int) -> "Matrix":
        m = object.__new__(cls)
        m.field = field
        m.rows = len(e)
        m.cols = cols
        m._e = e
        return m

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls._raw(field, tuple(unit_vector(field, n, i) for i in range(n)), n)

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        return cls._raw(field, tuple((field.zero,) * cols for _ in range(rows)), cols)

    @classmethod
    def diag(cls, field: Field, entries) -> "Matrix":
        n = len(entries)
        return cls(field, [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, field: Field, columns: Sequence[Sequence], rows: int | None = None) -> "Matrix":
        if not columns:
            return cls._raw(field, tuple(() for _ in range(rows or 0)), 0)
        return cls(field, list(zip(*columns)))

    def __getitem__(self, ij):
        i, j = ij
        return self._e[i][j]

    def row(self, i) -> tuple:
        return self._e[i]

    def column(self, j) -> tuple:
        return tuple(r[j] for r in self._e)

    def tolist(self) -> list:
        return [list(r) for r in self._e]

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def T(self) -> "Matrix":
        if self.rows == 0:
            return Matrix._raw(self.field, tuple(() for _ in range(self.cols)), 0)
        return Matrix._raw(self.field, tuple(zip(*self._e)), self.rows)

    def flat(self) -> tuple:
        return tuple(x for r in self._e for x in r)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and other.field == self.field
                and other.shape == self.shape and other._e == self._e)

    def __hash__(self):
        return hash((self.field, self._e))

    def __repr__(self):
        body = "; ".join(" ".join(scalar_str(x) for x in r) for r in self._e)
        return f"Matrix({self.field}, [{body}])"

    def _check(self, other):
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if other.shape != self.shape:
            raise ShapeError("shape mismatch in +")
        return Matrix._raw(self.field, tuple(vadd(a, b) for a, b in zip(self._e, other._e)), self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if other.shape != self.shape:
            raise ShapeError("shape mismatch in -")
        return Matrix._raw(self.field, tuple(vsub(a, b) for a, b in zip(self._e, other._e)), self.cols)

    def scale(self, c) -> "Matrix":
        c = self.field(c)
        return Matrix._raw(self.field, tuple(vscale(c, r) for r in self._e), self.cols)

    def __neg__(self):
        return self.scale(-1)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            self._check(other)
            if self.cols != other.rows:
                raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
            zero = self.field.zero
            cols = other._e
            out = []
            for r in self._e:
                acc = [zero] * other.cols
                for k, a in enumerate(r):
                    if a:
                        for j, b in enumerate(cols[k]):
                            if b:
                                acc[j] = acc[j] + a * b
                out.append(tuple(acc))
            return Matrix._raw(self.field, tuple(out), other.cols)
        return self.apply(other)

    def apply(self, v) -> tuple:
        """Matrix times column vector."""
        if len(v) != self.cols:
            raise ShapeError(f"vector of length {len(v)} for {self.shape} matrix")
        zero = self.field.zero
        out = []
        for r in self._e:
            s = zero
            for a, b in zip(r, v):
                if a and b:
                    s = s + a * b
            out.append(s)
        return tuple(out)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self._e)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def rank(self) -> int:
        return rref(self)[1]

    def inverse(self) -> "Matrix | None":
        """Inverse, or ``None`` when singular."""
        if not self.is_square():
            raise ShapeError("inverse of non-square matrix")
        n = self.rows
        aug = Matrix._raw(self.field, tuple(r + unit_vector(self.field, n, i) for i, r in enumerate(self._e)), 2 * n)
        red, rank, pivots = rref(aug)
        if rank < n or pivots[n - 1] != n - 1:
            return None
        return Matrix._raw(self.field, tuple(red.row(i)[n:] for i in range(n)), n)

    def kron(self, other: "Matrix") -> "Matrix":
        self._check(other)
        out = []
        for r1 in self._e:
            for r2 in other._e:
                out.append(tuple(a * b for a in r1 for b in r2))
        return Matrix._raw(self.field, tuple(out), self.cols * other.cols)

    def to_json(self):
        f = self.field
        return [[f.scalar_to_json(x) for x in r] for r in self._e]


def matrix(field: Field, rows) -> Matrix:
    return Matrix(field, rows)


# ----------------------------------------------------------------------------
# elimination

def _rref_rows(field: Field, rows: list, cols: int):
    """In-place RREF on a list of mutable rows; returns pivot columns."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(cols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = field.one / prow[c]
        if prow[c] != field.one:
            for j in range(c, cols):
                if prow[j]:
                    prow[j] = prow[j] * inv
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    ri = rows[i]
                    for j in range(c, cols):
                        if prow[j]:
                            ri[j] = ri[j] - f * prow[j]
        pivots.append(c)
        r += 1
    return pivots


def rref(m: Matrix):
    """Reduced row echelon form: ``(R, rank, pivot_columns)``.

    Leftmost pivot column first; within a column the first nonzero row is used.
    """
    rows = [list(r) for r in m._e]
    pivots = _rref_rows(m.field, rows, m.cols)
    return Matrix._raw(m.field, tuple(tuple(r) for r in rows), m.cols), len(pivots), tuple(pivots)


@dataclass(frozen=True)
class Subspace:
    """A subspace of F^d held by its canonical RREF basis.

    Equality of subspaces is equality of these canonical bases.
    """

    field: Field
    ambient_dim: int
    basis: tuple
    pivots: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def _compat(self, other: "Subspace"):
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if other.ambient_dim != self.ambient_dim:
            raise ShapeError(f"ambient F^{self.ambient_dim} vs F^{other.ambient_dim}")

    def coordinates(self, v) -> tuple | None:
        """Coordinates of ``v`` in the canonical basis, or ``None`` if ``v`` is outside."""
        if len(v) != self.ambient_dim:
            raise ShapeError("vector length does not match ambient dimension")
        coords = tuple(v[p] for p in self.pivots)
        recon = lincomb(self.field, self.ambient_dim, zip(coords, self.basis))
        if recon != tuple(v):
            return None
        return coords

    def __contains__(self, v) -> bool:
        return self.coordinates(v) is not None

    def contains(self, other: "Subspace") -> bool:
        self._compat(other)
        return all(b in self for b in other.basis)

    def __le__(self, other: "Subspace") -> bool:
        return other.contains(self)

    def __ge__(self, other: "Subspace") -> bool:
        return self.contains(other)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._compat(other)
        return span(self.field, self.basis + other.basis, self.ambient_dim)

    def intersection(self, other: "Subspace") -> "Subspace":
        self._compat(other)
        if not self.basis or not other.basis:
            return span(self.field, (), self.ambient_dim)
        # x = sum a_i u_i = sum b_j w_j  <=>  (a, -b) in kernel of [U^T | W^T]
        cols = list(self.basis) + [vscale(-self.field.one, w) for w in other.basis]
        m = Matrix.from_columns(self.field, cols)
        ker = kernel(m)
        k = len(self.basis)
        vecs = [lincomb(self.field, self.ambient_dim, zip(z[:k], self.basis)) for z in ker.basis]
        return span(self.field, vecs, self.ambient_dim)

    def complement_vector(self, other: "Subspace"):
        """Some basis vector of ``other`` not lying in ``self`` (a separating witness)."""
        for b in other.basis:
            if b not in self:
                return b
        return None

    def to_json(self):
        f = self.field
        return [[f.scalar_to_json(x) for x in b] for b in self.basis]


def span(field: Field, vectors: Iterable, ambient_dim: int) -> Subspace:
    rows = []
    for v in vectors:
        if len(v) != ambient_dim:
            raise ShapeError(f"vector of length {len(v)} in F^{ambient_dim}")
        rows.append([field(x) for x in v])
    pivots = _rref_rows(field, rows, ambient_dim)
    basis = tuple(tuple(rows[i]) for i in range(len(pivots)))
    return Subspace(field, ambient_dim, basis, tuple(pivots))


def subspace_contains(a: Subspace, b: Subspace) -> bool:
    return a.contains(b)


def subspace_equal(a: Subspace, b: Subspace) -> bool:
    a._compat(b)
    return a.basis == b.basis


def full_space(field: Field, n: int) -> Subspace:
    return span(field, [unit_vector(field, n, i) for i in range(n)], n)


def kernel(m: Matrix) -> Subspace:
    """Null space of ``m`` (as a map F^cols -> F^rows)."""
    field = m.field
    red, rank, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    vecs = []
    for f in free:
        v = [field.zero] * m.cols
        v[f] = field.one
        for i, p in enumerate(pivots):
            v[p] = -red[i, f]
        vecs.append(tuple(v))
    return span(field, vecs, m.cols)


def solve(m: Matrix, rhs) -> tuple | None:
    """Some ``x`` with ``m x = rhs``, or ``None`` when inconsistent."""
    if len(rhs) != m.rows:
        raise ShapeError(f"rhs of length {len(rhs)} for {m.shape} system")
    field = m.field
    aug = Matrix._raw(field, tuple(r + (field(b),) for r, b in zip(m._e, rhs)), m.cols + 1)
    red, rank, pivots = rref(aug)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [field.zero] * m.cols
    for i, p in enumerate(pivots):
        x[p] = red[i, m.cols]
    return tuple(x)


# ----------------------------------------------------------------------------
# Smith normal form over Z

@dataclass(frozen=True)
class SmithForm:
    """``U * A * V == diag(diagonal)`` padded to the shape of ``A``."""

    diagonal: tuple
    U: tuple
    V: tuple

    def invariants(self, ngens: int) -> list:
        """Abelian group invariants of Z^ngens / rowspace: torsion orders > 1 then 0 per free Z."""
        nonunit = [d for d in self.diagonal if d > 1]
        free = ngens - sum(1 for d in self.diagonal if d != 0)
        return nonunit + [0] * free


def _int_identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(a: Sequence[Sequence[int]]) -> SmithForm:
    """Smith normal form of an integer matrix with unimodular transforms."""
    A = [[int(x) for x in row] for row in a]
    m = len(A)
    n = len(A[0]) if m else 0
    U = _int_identity(m)
    V = _int_identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):  # row_dst += k row_src
        A[dst] = [x + k * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x + k * y for x, y in zip(U[dst], U[src])]

    def add_col(src, dst, k):
        for row in A:
            row[dst] += k * row[src]
        for row in V:
            row[dst] += k * row[src]

    t = 0
    while t < min(m, n):
        # pivot: smallest nonzero |entry| in the remaining block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        done = False
        while not done:
            done = True
            p = A[t][t]
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(t, i, -(A[i][t] // p))
                    if A[i][t]:
                        swap_rows(t, i)
                        done = False
                        break
            if not done:
                continue
            p = A[t][t]
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(t, j, -(A[t][j] // p))
                    if A[t][j]:
                        swap_cols(t, j)
                        done = False
                        break
            if not done:
                continue
            # divisibility: the pivot must divide the rest of the block
            p = A[t][t]
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if A[i][j] % p:
                        add_row(i, t, 1)
                        done = False
                        break
                if not done:
                    break
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    diag = tuple(A[i][i] for i in range(min(m, n)))
    return SmithForm(diag, tuple(map(tuple, U)), tuple(map(tuple, V)))


def int_matmul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def gcd_list(xs) -> int:
    g = 0
    for x in xs:
        g = gcd(g, int(x))
    return g
