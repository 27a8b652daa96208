"""Multilinear polynomial H-identities and their codimensions.

A monomial ``x_{s(1)}^{h_1} ... x_{s(n)}^{h_n}`` is stored as ``(sigma, hs)`` with
``sigma`` a 0-based permutation tuple and ``hs`` the H-basis indices per slot.
Products are left-normed.
"""

from __future__ import annotations

import itertools
import math
import os
import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

import numpy as np

from .errors import BudgetExceeded, InvalidStructure, ShapeError
from .exactlin import Field, Matrix, lincomb
from .modulealg import ModuleStructure, support_equiv_modules

DEFAULT_BUDGET = 2 * 10 ** 5


def row_budget() -> int:
    env = os.environ.get("HOPFEQ_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


# ----------------------------------------------------------------------------
# polynomials

@dataclass
class MultilinearHPolynomial:
    n: int
    terms: list  # (coef, sigma, hs)

    def __post_init__(self):
        merged = {}
        for c, sigma, hs in self.terms:
            sigma, hs = tuple(sigma), tuple(hs)
            if sorted(sigma) != list(range(self.n)) or len(hs) != self.n:
                raise ShapeError("each variable must appear exactly once per term")
            key = (sigma, hs)
            merged[key] = merged[key] + c if key in merged else c
        self.terms = [(c, s, h) for (s, h), c in sorted(merged.items()) if c]

    @classmethod
    def monomial(cls, sigma, hs, coef=1, field: Field | None = None):
        c = field(coef) if field else coef
        return cls(len(sigma), [(c, tuple(sigma), tuple(hs))])

    def transport(self, xi) -> "MultilinearHPolynomial":
        """Replace each ``x^h`` by ``x^{xi(h)}``, expanding linearly; ``xi[k]`` is a vector in ``H2``."""
        out = []
        for c, sigma, hs in self.terms:
            choices = [[(j, y) for j, y in enumerate(xi[h]) if y] for h in hs]
            for combo in itertools.product(*choices):
                coef = c
                for _, y in combo:
                    coef = coef * y
                out.append((coef, sigma, tuple(j for j, _ in combo)))
        return MultilinearHPolynomial(self.n, out)

    def __str__(self):
        parts = []
        for c, sigma, hs in self.terms:
            mono = " ".join(f"x{s + 1}^{{h:{h}}}" for s, h in zip(sigma, hs))
            parts.append(f"{c} {mono}")
        return " + ".join(parts) if parts else "0"


_TERM = re.compile(r"\s*([+-])?\s*([0-9]+(?:/[0-9]+)?)?\s*\*?\s*((?:x[0-9]+\^\{[^}]*\}\s*)+)")
_VAR = re.compile(r"x([0-9]+)\^\{([^}]*)\}")


def parse_polynomial(text: str, field: Field) -> MultilinearHPolynomial:
    """Parse ``"x1^{h:0} x2^{h:1} - x2^{h:1} x1^{h:0}"``.

    An exponent may be a sum such as ``{h:0+h:1}``, expanded multilinearly.
    """
    text = text.strip()
    if text in ("", "0"):
        return MultilinearHPolynomial(0, [])
    pos = 0
    raw = []
    n = None
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        coef = field(Fraction(m.group(2))) if m.group(2) else field.one
        coef = coef * sign
        vars_ = _VAR.findall(m.group(3))
        idx = [int(v) - 1 for v, _ in vars_]
        if n is None:
            n = len(idx)
        if sorted(idx) != list(range(n)):
            raise ValueError("each term must use x1..xn exactly once")
        exps = []
        for _, e in vars_:
            opts = []
            for piece in e.split("+"):
                piece = piece.strip()
                if not piece.startswith("h:"):
                    raise ValueError(f"bad exponent {e!r}")
                opts.append(int(piece[2:]))
            exps.append(opts)
        for combo in itertools.product(*exps):
            raw.append((coef, tuple(idx), tuple(combo)))
        pos = m.end()
    return MultilinearHPolynomial(n, raw)


def _as_vector(z: ModuleStructure, a):
    if isinstance(a, int):
        if not 0 <= a < z.algebra.dim:
            raise IndexError(f"basis index {a} out of range")
        return z.algebra.basis_vector(a)
    if len(a) != z.algebra.dim:
        raise ShapeError("argument has wrong length")
    return tuple(z.field(x) for x in a)


def evaluate(p: MultilinearHPolynomial, z: ModuleStructure, args) -> tuple:
    """Substitute ``x_i -> args[i]`` (basis indices or vectors) and multiply left to right."""
    A = z.algebra
    if len(args) != p.n:
        raise ShapeError(f"{len(args)} arguments for {p.n} variables")
    vals = [_as_vector(z, a) for a in args]
    for _, _, hs in p.terms:
        for h in hs:
            if not 0 <= h < z.hopf.dim:
                raise IndexError(f"H basis index {h} out of range")
    out = []
    for c, sigma, hs in p.terms:
        acc = None
        for s, h in zip(sigma, hs):
            v = z.action[h].apply(vals[s])
            acc = v if acc is None else A.multiply(acc, v)
        out.append((c, acc))
    return lincomb(A.field, A.dim, out)


def is_identity(p: MultilinearHPolynomial, z: ModuleStructure) -> tuple:
    """``(True, None)`` or ``(False, first basis tuple with a nonzero value)``."""
    for args in itertools.product(range(z.algebra.dim), repeat=p.n):
        if any(evaluate(p, z, args)):
            return False, args
    return True, None


# ----------------------------------------------------------------------------
# integer / modular encoding of the evaluation data

def _common_denominator(xs) -> int:
    d = 1
    for x in xs:
        d = math.lcm(d, x.denominator)
    return d


def _encode(z: ModuleStructure):
    """Structure constants and action matrices as integer arrays (scaled, or reduced mod p)."""
    A = z.algebra
    f = A.field
    m = A.dim
    K = [[[A.mult[a][b][c] for c in range(m)] for b in range(m)] for a in range(m)]
    Z = [m_.tolist() for m_ in z.action]
    if f.is_rational:
        flatK = [x for r in K for s in r for x in s]
        dK = _common_denominator(flatK) if flatK else 1
        Ki = np.array([[[int(x * dK) for x in s] for s in r] for r in K], dtype=object).reshape(m, m, m)
        Zi = []
        for mat in Z:
            flat = [x for r in mat for x in r]
            d = _common_denominator(flat) if flat else 1
            Zi.append(np.array([[int(x * d) for x in r] for r in mat], dtype=object).reshape(m, m))
        return Ki, Zi, None
    p = f.p
    Ki = np.array([[[int(x) for x in s] for s in r] for r in K], dtype=object).reshape(m, m, m)
    Zi = [np.array([[int(x) for x in r] for r in mat], dtype=object).reshape(m, m) for mat in Z]
    return Ki, Zi, p


class StreamingRank:
    """Exact rank of a stream of integer rows (over Q, or over F_p when ``p`` is given)."""

    def __init__(self, ncols: int, p: int | None = None):
        self.ncols = ncols
        self.p = p
        self.basis = []          # rows in reduced echelon form (Fractions or ints mod p)
        self.pivots = []
        self._seen = set()
        self._B = None           # integer matrix for vectorized reduction
        self._d = 1
        self.rows_seen = 0

    @property
    def rank(self) -> int:
        return len(self.basis)

    def full(self) -> bool:
        return self.rank == self.ncols

    def _rebuild(self):
        if self.p is None:
            d = 1
            for r in self.basis:
                d = math.lcm(d, _common_denominator(r))
            self._d = d
            self._B = np.array([[int(x * d) for x in r] for r in self.basis], dtype=object)
        else:
            self._d = 1
            self._B = np.array(self.basis, dtype=object)

    def _insert(self, row):
        """Add one row known to be independent of the current basis."""
        p = self.p
        if p is None:
            vec = [Fraction(int(x)) for x in row]
            for b, c in zip(self.basis, self.pivots):
                if vec[c]:
                    k = vec[c]
                    vec = [x - k * y for x, y in zip(vec, b)]
            lead = next(i for i, x in enumerate(vec) if x)
            inv = 1 / vec[lead]
            vec = [x * inv for x in vec]
            new_basis = []
            for b in self.basis:
                if b[lead]:
                    k = b[lead]
                    b = [x - k * y for x, y in zip(b, vec)]
                new_basis.append(b)
        else:
            vec = [int(x) % p for x in row]
            for b, c in zip(self.basis, self.pivots):
                if vec[c]:
                    k = vec[c]
                    vec = [(x - k * y) % p for x, y in zip(vec, b)]
            lead = next(i for i, x in enumerate(vec) if x)
            inv = pow(vec[lead], -1, p)
            vec = [(x * inv) % p for x in vec]
            new_basis = []
            for b in self.basis:
                if b[lead]:
                    k = b[lead]
                    b = [(x - k * y) % p for x, y in zip(b, vec)]
                new_basis.append(b)
        new_basis.append(vec)
        order = sorted(range(len(new_basis)), key=lambda i: next(j for j, x in enumerate(new_basis[i]) if x))
        self.basis = [new_basis[i] for i in order]
        self.pivots = [next(j for j, x in enumerate(b) if x) for b in self.basis]
        self._rebuild()

    def _residual(self, S):
        """Rows of ``S`` reduced against the basis (up to a nonzero row scale)."""
        if not self.basis:
            return S if self.p is None else S % self.p
        coeff = S[:, self.pivots]
        if self.p is None:
            return S * self._d - coeff.dot(self._B)
        return (S - coeff.dot(self._B)) % self.p

    def add_rows(self, rows) -> None:
        """Feed a batch of rows (2-D integer array)."""
        if self.full():
            return
        fresh = []
        for r in rows:
            key = tuple(int(x) for x in r) if self.p is None else tuple(int(x) % self.p for x in r)
            self.rows_seen += 1
            if key in self._seen or not any(key):
                continue
            self._seen.add(key)
            fresh.append(key)
        if not fresh:
            return
        S = np.array(fresh, dtype=object)
        R = self._residual(S)
        nz = [i for i in range(len(fresh)) if any(R[i])]
        while nz and not self.full():
            self._insert(R[nz[0]])
            rest = S[nz[1:]]
            if len(rest) == 0:
                break
            R2 = self._residual(rest)
            keep = [i for i in range(len(rest)) if any(R2[i])]
            S = rest[keep]
            R = R2[keep]
            nz = list(range(len(keep)))


def _check_budget(n: int, hdim: int, budget: int | None):
    budget = row_budget() if budget is None else budget
    rows = math.factorial(n) * hdim ** n
    if rows > budget:
        raise BudgetExceeded(f"n={n}: {rows} monomial rows exceed the budget {budget}")
    return rows


def _prefix_tensors(K, Z, n, p):
    """For each H-index tuple of length ``n``: array ``G[c, j1, ..., jn]`` of the left-normed product.

    Yields ``(hs, G)`` in lexicographic order of ``hs``.
    """
    hdim = len(Z)

    def rec(prefix, G):
        k = len(prefix)
        if k == n:
            yield prefix, G
            return
        for h in range(hdim):
            if k == 0:
                nxt = Z[h].copy()
            else:
                # G_k[c, J, j] = sum_{a,b} K[a,b,c] G[a, J] Z_h[b, j]
                nxt = np.einsum("abc,a...,bj->c...j", K, G, Z[h])
            if p is not None:
                nxt = nxt % p
            yield from rec(prefix + (h,), nxt)

    yield from rec((), None)


def monomial_rows(z: ModuleStructure, n: int):
    """Yield integer rows in canonical order: permutation outer, H-index tuple inner."""
    K, Z, p = _encode(z)
    m = z.algebra.dim
    tensors = [G for _, G in _prefix_tensors(K, Z, n, p)]
    stack = np.stack(tensors) if tensors else np.zeros((0,) + (m,) * (n + 1), dtype=object)
    for sigma in itertools.permutations(range(n)):
        inv = [0] * n
        for k, s in enumerate(sigma):
            inv[s] = k
        axes = [0, 1] + [2 + inv[v] for v in range(n)]
        rows = np.transpose(stack, axes).reshape(len(tensors), m ** (n + 1))
        yield rows


def codim(z: ModuleStructure, n: int, shard_size: int | None = None, budget: int | None = None) -> int:
    """Rank of the evaluation map of ``P_n^H`` into the ``n``-linear maps ``A^n -> A``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    _check_budget(n, z.hopf.dim, budget)
    m = z.algebra.dim
    p = None if z.field.is_rational else z.field.p
    red = StreamingRank(m ** (n + 1), p)
    buf = []
    for block in monomial_rows(z, n):
        if shard_size is None:
            red.add_rows(block)
        else:
            for row in block:
                buf.append(row)
                if len(buf) >= shard_size:
                    red.add_rows(np.array(buf, dtype=object))
                    buf = []
        if red.full():
            break
    if buf and not red.full():
        red.add_rows(np.array(buf, dtype=object))
    return red.rank


# ----------------------------------------------------------------------------

@dataclass
class CodimReport:
    values: list
    ratios: list
    predicted_base: Fraction | None
    d: int | None
    partial: bool = False
    stopped_at: int | None = None
    notes: list = dc_field(default_factory=list)

    def to_json(self) -> dict:
        from .reports import jsonable
        return {
            "codim": list(self.values),
            "n": list(range(1, len(self.values) + 1)),
            "ratios": jsonable(self.ratios),
            "predicted_base": jsonable(self.predicted_base),
            "d": self.d,
            "partial": self.partial,
            "stopped_at": self.stopped_at,
            "notes": list(self.notes),
        }


def codim_series(z: ModuleStructure, N: int, d: int | None = None, budget: int | None = None,
                 shard_size: int | None = None) -> CodimReport:
    if d is None:
        try:
            from .modulealg import invariant_nilpotent_dim
            d = invariant_nilpotent_dim(z)
        except Exception:
            d = None
    values = []
    partial, stopped = False, None
    for n in range(1, N + 1):
        try:
            values.append(codim(z, n, shard_size, budget))
        except BudgetExceeded:
            partial, stopped = True, n
            break
    ratios = [Fraction(values[i + 1], values[i]) if values[i] else None for i in range(len(values) - 1)]
    base = Fraction(2 - d) if d is not None else None
    return CodimReport(values, ratios, base, d, partial, stopped)


GROWTH_WINDOW = (Fraction(1, 2), Fraction(3, 2))
POLY_BOUND = (2, 1)   # c_n <= C * n^r for base 1


def growth_check(rep: CodimReport, d: int | None = None, window=GROWTH_WINDOW, poly_bound=POLY_BOUND) -> dict:
    """Compare the last ratio with ``2 - d`` and, for ``d = 1``, the values with ``C n^r``."""
    d = rep.d if d is None else d
    if d is None:
        raise ValueError("d must be supplied for this algebra")
    base = Fraction(2 - d)
    out = {"d": d, "base": base, "window": [window[0] * base, window[1] * base]}
    if len(rep.values) < 2:
        out.update(ok=False, reason="need at least two values")
        return out
    last = rep.ratios[-1]
    lo, hi = window[0] * base, window[1] * base
    in_window = last is not None and lo <= last <= hi
    out["last_ratio"] = last
    out["ratio_in_window"] = in_window
    ok = in_window
    if d == 1:
        C, r = poly_bound
        bounded = all(c <= C * (k + 1) ** r for k, c in enumerate(rep.values))
        out["polynomial_bound"] = {"C": C, "r": r, "holds": bounded}
        ok = ok and bounded
    out["ok"] = ok
    return out


# ----------------------------------------------------------------------------

def graded_codim(gr, n: int, budget: int | None = None, compare: bool = True) -> dict:
    """Sum over degree assignments of the ranks of graded multilinear monomials."""
    from .grading import dual_action

    A = gr.algebra
    f = A.field
    supp = gr.support()
    _check_budget(n, len(supp) or 1, budget)
    total = 0
    for degs in itertools.product(supp, repeat=n):
        bases = [gr.components[g].basis for g in degs]
        rows = []
        for sigma in itertools.permutations(range(n)):
            row = []
            for args in itertools.product(*bases):
                acc = None
                for s in sigma:
                    acc = args[s] if acc is None else A.multiply(acc, args[s])
                row.extend(acc)
            rows.append(row)
        if rows and rows[0]:
            total += Matrix(f, rows).rank()
    out = {"n": n, "graded": total}
    if compare:
        c = codim(dual_action(gr), n, budget=budget)
        out["module"] = c
        out["equal"] = c == total
    return out


def codim_equiv_check(z1: ModuleStructure, z2: ModuleStructure, phi=None, n: int = 1, budget: int | None = None) -> dict:
    """Equal codimensions for support-equivalent structures (failure means a bug)."""
    dec = support_equiv_modules(z1, z2, phi)
    if not dec.value:
        raise InvalidStructure("structures are not support equivalent")
    c1 = codim(z1, n, budget=budget)
    c2 = codim(z2, n, budget=budget)
    out = {"n": n, "codim": [c1, c2], "equal": c1 == c2}
    if c1 != c2:
        out["dump"] = {"first": [m.to_json() for m in z1.action], "second": [m.to_json() for m in z2.action]}
    return out
