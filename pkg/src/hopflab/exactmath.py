"""Exact scalars (rationals and cyclotomic extensions) and exact linear algebra.

Scalars live in Q or in Q[z]/Phi_n(z) for the n-th cyclotomic polynomial
Phi_n; all matrix routines are fraction-free in spirit but computed with
exact rational arithmetic, so every equality test in the package is literal.

Conventions fixed here and used everywhere else:

* matrices act on column vectors; composition is ``a @ b`` = "first b, then a";
* the tensor product of spaces k^a (x) k^b is k^(a*b) with basis order
  e_i (x) e_j |-> e_(i*b + j)  (left factor major), realized by :func:`kron`;
* row reduction pivots on the first nonzero entry scanning rows top-down,
  pivots are normalized to 1, and free variables are set to 0 in particular
  solutions; kernel basis vectors carry 1 at their free coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
import re

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover - gmpy2 is an install requirement
    from fractions import Fraction as _Q

_ZERO = _Q(0)
_ONE = _Q(1)


def rational(num, den=1):
    """Exact rational from ints or a 'p/q' string."""
    if isinstance(num, str):
        return _Q(num)
    return _Q(num, den)


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FieldSpec:
    """Ground field: Q, or the cyclotomic field Q(zeta_n) for n >= 3.

    Orders 1 and 2 are canonicalized to the rational field since
    zeta_1 = 1 and zeta_2 = -1 are already rational.
    """

    kind: str  # "rational" | "cyclotomic"
    order: int = 0

    def __post_init__(self):
        if self.kind not in ("rational", "cyclotomic"):
            raise ValueError(f"unknown field kind {self.kind!r}")
        if self.kind == "cyclotomic" and self.order < 3:
            raise ValueError("cyclotomic orders 1 and 2 canonicalize to the rational field")
        deg = 1 if self.kind == "rational" else len(_cyclotomic_poly(self.order)) - 1
        object.__setattr__(self, "_degree", deg)

    @staticmethod
    def make_rational() -> "FieldSpec":
        return _RATIONAL_FIELD

    @staticmethod
    def cyclotomic(n: int) -> "FieldSpec":
        if n < 1:
            raise ValueError("cyclotomic order must be positive")
        if n <= 2:
            return _RATIONAL_FIELD
        got = _FIELD_CACHE.get(n)
        if got is None:
            got = FieldSpec("cyclotomic", n)
            _FIELD_CACHE[n] = got
        return got

    @property
    def degree(self) -> int:
        return self._degree




_FIELD_CACHE: dict = {}


@lru_cache(maxsize=None)
def _cyclotomic_poly(n: int) -> tuple:
    """Coefficients (ascending) of Phi_n, computed by dividing z^n - 1
    by the cyclotomic polynomials of the proper divisors of n."""
    num = [-_ONE] + [_ZERO] * (n - 1) + [_ONE]
    for d in range(1, n):
        if n % d == 0:
            num = _polydiv_exact(num, list(_cyclotomic_poly(d)))
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return tuple(num)


def _polydiv_exact(num, den):
    num = list(num)
    out = [_ZERO] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1] / den[-1]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(c != 0 for c in num):
        raise ArithmeticError("inexact polynomial division")
    return out



_RATIONAL_FIELD = FieldSpec("rational")
_ZERO_CACHE: dict = {}

@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple:
    """z^k mod Phi_n for k = 0 .. 2*(deg-1), as coefficient tuples of length deg."""
    phi = _cyclotomic_poly(n)
    deg = len(phi) - 1
    rows = []
    cur = [_ONE] + [_ZERO] * (deg - 1)
    for _ in range(2 * deg - 1):
        rows.append(tuple(cur))
        nxt = [_ZERO] + cur[:-1]
        lead = cur[-1]
        if lead:
            for j in range(deg):
                nxt[j] -= lead * phi[j]
        # nxt currently has length deg+? keep deg coefficients
        cur = nxt[:deg]
    return tuple(rows)


class Scalar:
    """Element of the ground field, reduced mod Phi_n in the power basis."""

    __slots__ = ("field", "coeffs", "_hash", "_zero")

    def __init__(self, field: FieldSpec, coeffs):
        self.field = field
        self.coeffs = tuple(coeffs)
        self._hash = None
        self._zero = None
        if len(self.coeffs) != field.degree:
            raise ValueError("coefficient length does not match the field degree")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(field: FieldSpec) -> "Scalar":
        got = _ZERO_CACHE.get(field)
        if got is None:
            got = Scalar(field, (_ZERO,) * field.degree)
            _ZERO_CACHE[field] = got
        return got

    @staticmethod
    def one(field: FieldSpec) -> "Scalar":
        return Scalar(field, (_ONE,) + (_ZERO,) * (field.degree - 1))

    @staticmethod
    def from_rational(field: FieldSpec, q) -> "Scalar":
        return Scalar(field, (_Q(q),) + (_ZERO,) * (field.degree - 1))

    @staticmethod
    def generator(field: FieldSpec) -> "Scalar":
        """z itself (only meaningful over a cyclotomic field)."""
        if field.kind == "rational":
            raise ValueError("z used with rational field")
        return Scalar(field, (_ZERO, _ONE) + (_ZERO,) * (field.degree - 2))

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Scalar"):
        if self.field is not other.field and self.field != other.field:
            raise ValueError("scalars from different fields")

    def __add__(self, other):
        self._check(other)
        return Scalar(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return Scalar(self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return Scalar(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        self._check(other)
        a, b = self.coeffs, other.coeffs
        deg = len(a)
        if deg == 1:
            return Scalar(self.field, (a[0] * b[0],))
        raw = [_ZERO] * (2 * deg - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        raw[i + j] += ai * bj
        table = _power_table(self.field.order)
        out = [_ZERO] * deg
        for k, ck in enumerate(raw):
            if ck:
                row = table[k]
                for j in range(deg):
                    if row[j]:
                        out[j] += ck * row[j]
        return Scalar(self.field, out)

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        if self.field.kind == "rational":
            return Scalar(self.field, (_ONE / self.coeffs[0],))
        # extended Euclid in Q[z] against Phi_n
        phi = list(_cyclotomic_poly(self.field.order))
        r0, r1 = phi, list(self.coeffs)
        s0, s1 = [_ZERO], [_ONE]
        while True:
            while len(r1) > 1 and r1[-1] == 0:
                r1.pop()
            if len(r1) == 1:
                c = r1[0]
                deg = self.field.degree
                inv = [x / c for x in s1] + [_ZERO] * deg
                return Scalar(self.field, inv[:deg])
            q, r = _polydivmod(r0, r1)
            s_new = _polysub(s0, _polymul(q, s1))
            r0, r1, s0, s1 = r1, r, s1, s_new

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = Scalar.one(self.field)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_zero(self) -> bool:
        z = self._zero
        if z is None:
            z = True
            for c in self.coeffs:
                if c:
                    z = False
                    break
            self._zero = z
        return z

    def __eq__(self, other):
        return (
            isinstance(other, Scalar)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.coeffs))
        return self._hash

    def __repr__(self):
        return f"Scalar({format_scalar(self)!r})"


def _polydivmod(a, b):
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    if len(a) < len(b):
        return [_ZERO], a
    q = [_ZERO] * (len(a) - db)
    for i in range(len(q) - 1, -1, -1):
        c = a[i + db] / lb
        q[i] = c
        if c:
            for j in range(db + 1):
                a[i + j] -= c * b[j]
    return q, a[:db] if db else [_ZERO]


def _polymul(a, b):
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _polysub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [_ZERO] * (n - len(a))
    b = list(b) + [_ZERO] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


# ---------------------------------------------------------------------------
# scalar text grammar
# ---------------------------------------------------------------------------

_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
            (?P<coef>\d+(?:/\d+)?)\s*(?:\*\s*(?P<zpow1>z(?:\^\d+)?))?
          | (?P<zpow2>z(?:\^\d+)?)
        )\s*""",
    re.VERBOSE,
)


def parse_scalar(text: str, field: FieldSpec) -> Scalar:
    """Parse a polynomial in z with rational coefficients, e.g. '1/2 + 3*z^2'."""
    s = text.strip()
    if not s:
        raise ValueError("empty scalar text")
    out = Scalar.zero(field)
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse scalar {text!r} at position {pos}")
        sign = m.group("sign")
        if sign is None and not first:
            raise ValueError(f"missing +/- between terms in {text!r}")
        coef = rational(m.group("coef")) if m.group("coef") else _ONE
        if sign == "-":
            coef = -coef
        zpow = m.group("zpow1") or m.group("zpow2")
        term = Scalar.from_rational(field, coef)
        if zpow:
            if field.kind == "rational":
                raise ValueError("z used with rational field")
            k = int(zpow[2:]) if "^" in zpow else 1
            term = term * Scalar.generator(field) ** k
        out = out + term
        pos = m.end()
        first = False
    return out


def format_scalar(x: Scalar) -> str:
    """Canonical text form; parse_scalar(format_scalar(x)) == x bit-exactly."""
    parts = []
    for k, c in enumerate(x.coeffs):
        if c == 0:
            continue
        mag = c if c > 0 else -c
        if k == 0:
            body = str(mag)
        else:
            zs = "z" if k == 1 else f"z^{k}"
            body = zs if mag == 1 else f"{mag}*{zs}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return "0" if not parts else " ".join(parts)


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

class Matrix:
    """Dense row-major exact matrix over a fixed FieldSpec."""

    __slots__ = ("field", "rows", "cols", "entries", "_hash", "_rows_nz")

    def __init__(self, field: FieldSpec, rows: int, cols: int, entries):
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries = list(entries)
        self._hash = None
        self._rows_nz = None
        if len(self.entries) != rows * cols:
            raise ValueError("entry count does not match the shape")

    def rows_nonzero(self):
        """Per-row sparse view [(col, scalar), ...], cached."""
        got = self._rows_nz
        if got is None:
            e = self.entries
            c = self.cols
            if c == 0:
                got = [[] for _ in range(self.rows)]
            else:
                got = [
                    [(j, e[base + j]) for j in range(c) if not e[base + j].is_zero()]
                    for base in range(0, self.rows * c, c)
                ]
            self._rows_nz = got
        return got

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zeros(field: FieldSpec, rows: int, cols: int) -> "Matrix":
        z = Scalar.zero(field)
        return Matrix(field, rows, cols, [z] * (rows * cols))

    @staticmethod
    def identity(field: FieldSpec, n: int) -> "Matrix":
        m = Matrix.zeros(field, n, n)
        one = Scalar.one(field)
        for i in range(n):
            m.entries[i * n + i] = one
        return m

    @staticmethod
    def from_rows(field: FieldSpec, rows) -> "Matrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat = []
        for row in rows:
            if len(row) != c:
                raise ValueError("ragged rows")
            flat.extend(row)
        return Matrix(field, r, c, flat)

    @staticmethod
    def from_int_rows(field: FieldSpec, rows) -> "Matrix":
        return Matrix.from_rows(
            field, [[Scalar.from_rational(field, v) for v in row] for row in rows]
        )

    @staticmethod
    def column(field: FieldSpec, values) -> "Matrix":
        return Matrix(field, len(values), 1, list(values))

    @staticmethod
    def basis_column(field: FieldSpec, n: int, i: int) -> "Matrix":
        m = Matrix.zeros(field, n, 1)
        m.entries[i] = Scalar.one(field)
        return m

    # -- access ------------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def set(self, i: int, j: int, value: Scalar) -> None:
        self.entries[i * self.cols + j] = value
        self._hash = None
        self._rows_nz = None

    def row(self, i: int):
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int):
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def column_matrix(self, j: int) -> "Matrix":
        return Matrix(self.field, self.rows, 1, self.col(j))

    # -- arithmetic --------------------------------------------------------

    def _check_field(self, other: "Matrix"):
        if self.field != other.field:
            raise ValueError("matrices over different fields")

    def __add__(self, other):
        self._check_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in addition")
        out = []
        for a, b in zip(self.entries, other.entries):
            if b.is_zero():
                out.append(a)
            elif a.is_zero():
                out.append(b)
            else:
                out.append(a + b)
        return Matrix(self.field, self.rows, self.cols, out)

    def __sub__(self, other):
        self._check_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in subtraction")
        out = []
        for a, b in zip(self.entries, other.entries):
            if b.is_zero():
                out.append(a)
            elif a.is_zero():
                out.append(-b)
            else:
                out.append(a - b)
        return Matrix(self.field, self.rows, self.cols, out)

    def __neg__(self):
        return Matrix(self.field, self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c: Scalar) -> "Matrix":
        return Matrix(self.field, self.rows, self.cols, [c * a for a in self.entries])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.cols != other.rows:
            raise ValueError(
                f"shape mismatch in composition: ({self.rows}x{self.cols}) @ ({other.rows}x{other.cols})"
            )
        # zero-skipping triple loop over pre-sparsified rows of the right
        # factor; structure matrices are mostly monomial, so this runs near
        # the number of nonzero products
        zero = Scalar.zero(self.field)
        bc = other.cols
        a_e = self.entries
        b_rows = other.rows_nonzero()
        out = [zero] * (self.rows * bc)
        for i in range(self.rows):
            arow = a_e[i * self.cols : (i + 1) * self.cols]
            obase = i * bc
            for k, aik in enumerate(arow):
                if aik.is_zero():
                    continue
                for j, bkj in b_rows[k]:
                    idx = obase + j
                    cur = out[idx]
                    out[idx] = aik * bkj if cur.is_zero() else cur + aik * bkj
        return Matrix(self.field, self.rows, bc, out)

    def transpose(self) -> "Matrix":
        out = Matrix.zeros(self.field, self.cols, self.rows)
        for i in range(self.rows):
            base = i * self.cols
            for j in range(self.cols):
                out.entries[j * self.rows + i] = self.entries[base + j]
        return out

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.rows, self.cols, tuple(self.entries)))
        return self._hash

    def __repr__(self):
        body = "; ".join(
            " ".join(format_scalar(self[i, j]) for j in range(self.cols))
            for i in range(min(self.rows, 8))
        )
        tail = " ..." if self.rows > 8 else ""
        return f"Matrix({self.rows}x{self.cols}: {body}{tail})"


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Tensor product of linear maps in the fixed lexicographic basis order."""
    a._check_field(b)
    out = Matrix.zeros(a.field, a.rows * b.rows, a.cols * b.cols)
    oc = out.cols
    for i in range(a.rows):
        for k in range(a.cols):
            aik = a[i, k]
            if aik.is_zero():
                continue
            for j in range(b.rows):
                rbase = (i * b.rows + j) * oc + k * b.cols
                brow = b.entries[j * b.cols : (j + 1) * b.cols]
                for l, bjl in enumerate(brow):
                    if not bjl.is_zero():
                        out.entries[rbase + l] = aik * bjl
    return out


def kron_all(*mats: Matrix) -> Matrix:
    out = mats[0]
    for m in mats[1:]:
        out = kron(out, m)
    return out


def reorder_tensor(field: FieldSpec, dims, order) -> Matrix:
    """Permutation matrix sending e_{i_0} (x) ... (x) e_{i_{k-1}} to
    e_{i_{order[0]}} (x) ... (x) e_{i_{order[k-1]}}."""
    if sorted(order) != list(range(len(dims))):
        raise ValueError("order must be a permutation of the factors")
    total = 1
    for d in dims:
        total *= d
    out = Matrix.zeros(field, total, total)
    one = Scalar.one(field)
    tgt_dims = [dims[t] for t in order]
    for src in range(total):
        # unpack the source multi-index
        idx = []
        rem = src
        for d in reversed(dims):
            idx.append(rem % d)
            rem //= d
        idx.reverse()
        tgt = 0
        for t_pos, s_pos in enumerate(order):
            tgt = tgt * tgt_dims[t_pos] + idx[s_pos]
        out.entries[tgt * total + src] = one
    return out


def compose(*mats: Matrix) -> Matrix:
    """Composite of linear maps, applied right-to-left like function composition."""
    out = mats[-1]
    for m in reversed(mats[:-1]):
        out = m @ out
    return out


# ---------------------------------------------------------------------------
# row reduction and friends
# ---------------------------------------------------------------------------

def rref(a: Matrix):
    """Reduced row-echelon form.

    Returns (r, pivots, t) with t @ a == r, t invertible, pivot entries
    normalized to 1, and deterministic first-nonzero pivot selection.
    Rows are processed sparsely internally; the contract is unchanged.
    """
    field = a.field
    m, n = a.rows, a.cols
    one = Scalar.one(field)
    work = []
    for i in range(m):
        row = a.row(i)
        work.append({j: v for j, v in enumerate(row) if not v.is_zero()})
    t = [{i: one} for i in range(m)]
    pivots = []
    pr = 0
    for pc in range(n):
        sel = None
        for i in range(pr, m):
            if pc in work[i]:
                sel = i
                break
        if sel is None:
            continue
        if sel != pr:
            work[pr], work[sel] = work[sel], work[pr]
            t[pr], t[sel] = t[sel], t[pr]
        inv = work[pr][pc].inverse()
        if inv != one:
            work[pr] = {j: inv * v for j, v in work[pr].items()}
            t[pr] = {j: inv * v for j, v in t[pr].items()}
        prow, trow = work[pr], t[pr]
        for i in range(m):
            if i != pr and pc in work[i]:
                f = work[i][pc]
                wrow = work[i]
                for j, v in prow.items():
                    new = wrow.get(j)
                    new = -f * v if new is None else new - f * v
                    if new.is_zero():
                        wrow.pop(j, None)
                    else:
                        wrow[j] = new
                tirow = t[i]
                for j, v in trow.items():
                    new = tirow.get(j)
                    new = -f * v if new is None else new - f * v
                    if new.is_zero():
                        tirow.pop(j, None)
                    else:
                        tirow[j] = new
        pivots.append(pc)
        pr += 1
        if pr == m:
            break
    zero = Scalar.zero(field)
    r_entries = [zero] * (m * n)
    for i, row in enumerate(work):
        base = i * n
        for j, v in row.items():
            r_entries[base + j] = v
    t_entries = [zero] * (m * m)
    for i, row in enumerate(t):
        base = i * m
        for j, v in row.items():
            t_entries[base + j] = v
    return Matrix(field, m, n, r_entries), pivots, Matrix(field, m, m, t_entries)


def rank(a: Matrix) -> int:
    return len(rref(a)[1])


def kernel(a: Matrix) -> Matrix:
    """Columns form the deterministic null-space basis: each basis vector has
    a 1 at its free coordinate and back-substituted pivot coordinates."""
    field = a.field
    r, pivots, _ = rref(a)
    free = [j for j in range(a.cols) if j not in pivots]
    out = Matrix.zeros(field, a.cols, len(free))
    one = Scalar.one(field)
    for t, fc in enumerate(free):
        out.entries[fc * len(free) + t] = one
        for pr, pc in enumerate(pivots):
            out.entries[pc * len(free) + t] = -r[pr, fc]
    return out


class NoSolutionError(ArithmeticError):
    """Raised when a linear system A X = B has no solution."""


def solve_linear(a: Matrix, b: Matrix) -> Matrix:
    """Deterministic particular solution of A X = B (free variables set to 0)."""
    a._check_field(b)
    if a.rows != b.rows:
        raise ValueError("shape mismatch in solve")
    r, pivots, t = rref(a)
    tb = t @ b
    nr = len(pivots)
    for i in range(nr, a.rows):
        for j in range(b.cols):
            if not tb[i, j].is_zero():
                raise NoSolutionError(f"inconsistent row {i}")
    # with free variables at zero, row pr of r reads x_pc = tb[pr]
    x = Matrix.zeros(a.field, a.cols, b.cols)
    for pr, pc in enumerate(pivots):
        for j in range(b.cols):
            x.entries[pc * b.cols + j] = tb[pr, j]
    return x


def invert(a: Matrix) -> Matrix:
    if a.rows != a.cols:
        raise ValueError("only square matrices can be inverted")
    r, pivots, t = rref(a)
    if len(pivots) != a.rows:
        raise NoSolutionError("matrix is singular")
    return t


@dataclass(frozen=True)
class SubSpace:
    """A subspace of k^ambient_dim: inclusion (ambient x d) of full column rank
    and a chosen retraction (d x ambient) with retraction @ inclusion = id."""

    ambient_dim: int
    inclusion: Matrix
    retraction: Matrix

    @property
    def dim(self) -> int:
        return self.inclusion.cols

    def restrict(self, ambient_map: Matrix, other: "SubSpace") -> Matrix:
        """Matrix of an ambient map other.ambient -> self.ambient restricted to
        the subspaces; asserts the image lands inside self."""
        img = ambient_map @ other.inclusion
        back = self.retraction @ img
        if self.inclusion @ back != img:
            raise ArithmeticError("map does not preserve the subspace")
        return back


@dataclass(frozen=True)
class QuotSpace:
    """A quotient of k^ambient_dim: projection (d x ambient) of full row rank
    and a chosen section (ambient x d) with projection @ section = id."""

    ambient_dim: int
    projection: Matrix
    section: Matrix

    @property
    def dim(self) -> int:
        return self.projection.rows

    def descend(self, ambient_map: Matrix, other: "QuotSpace") -> Matrix:
        """Matrix of an ambient map self.ambient -> other.ambient on the
        quotients; asserts the map descends."""
        down = other.projection @ ambient_map
        out = down @ self.section
        if out @ self.projection != down:
            raise ArithmeticError("map does not descend to the quotient")
        return out


def equalizer(f: Matrix, g: Matrix) -> SubSpace:
    """The subspace {v : f v = g v} with deterministic kernel basis."""
    if (f.rows, f.cols) != (g.rows, g.cols):
        raise ValueError("equalizer arguments must have equal shape")
    inc = kernel(f - g)
    d = inc.cols
    retr = Matrix.zeros(f.field, d, f.cols)
    one = Scalar.one(f.field)
    # kernel columns carry 1 at their free coordinate; picking those
    # coordinates yields a left inverse
    r, pivots, _ = rref(f - g)
    free = [j for j in range(f.cols) if j not in pivots]
    for t, fc in enumerate(free):
        retr.entries[t * f.cols + fc] = one
    return SubSpace(f.cols, inc, retr)


def coequalizer(f: Matrix, g: Matrix) -> QuotSpace:
    """The quotient of the common target by the column span of f - g."""
    if (f.rows, f.cols) != (g.rows, g.cols):
        raise ValueError("coequalizer arguments must have equal shape")
    field = f.field
    m = f.rows
    d = f - g
    r, pivots, _ = rref(d.transpose())
    # rows of r span the column space of d inside k^m
    free = [j for j in range(m) if j not in pivots]
    dim = len(free)
    proj = Matrix.zeros(field, dim, m)
    one = Scalar.one(field)
    for t, fc in enumerate(free):
        proj.entries[t * m + fc] = one
    for pr, pc in enumerate(pivots):
        # e_pc = - sum_j r[pr, j] e_j over free coordinates in the quotient
        for t, fc in enumerate(free):
            proj.entries[t * m + pc] = -r[pr, fc]
    sec = Matrix.zeros(field, m, dim)
    for t, fc in enumerate(free):
        sec.entries[fc * dim + t] = one
    return QuotSpace(m, proj, sec)


def column_space_retraction(inc: Matrix) -> Matrix:
    """A left inverse of a full-column-rank matrix, deterministic."""
    r, pivots, t = rref(inc)
    if len(pivots) != inc.cols:
        raise NoSolutionError("columns are dependent")
    # rows of t corresponding to pivot rows of r give the retraction
    retr = Matrix.zeros(inc.field, inc.cols, inc.rows)
    for pr in range(inc.cols):
        for j in range(inc.rows):
            retr.entries[pr * inc.rows + j] = t[pr, j]
    return retr


def subspace_from_columns(inc: Matrix) -> SubSpace:
    return SubSpace(inc.rows, inc, column_space_retraction(inc))


# ---------------------------------------------------------------------------
# q-binomials
# ---------------------------------------------------------------------------

def _qbinom_poly(k: int, i: int) -> list:
    """Gaussian binomial as an integer polynomial in x (ascending coeffs),
    built with the q-Pascal recursion so no division ever happens."""
    if i < 0 or i > k:
        raise ValueError("q-binomial index out of range")
    # row r of the recursion holds binom(r, j)_x for j = 0..r
    row = [[1]]
    for r in range(1, k + 1):
        new = []
        for j in range(r + 1):
            left = row[j - 1] if j >= 1 else []
            up = row[j] if j <= r - 1 else []
            shifted = [0] * j + up  # x^j * binom(r-1, j)_x
            n = max(len(left), len(shifted))
            new.append([
                (left[t] if t < len(left) else 0) + (shifted[t] if t < len(shifted) else 0)
                for t in range(n)
            ])
        row = new
    return row[i]


def qbinomial(k: int, i: int, q: Scalar) -> Scalar:
    """Gaussian binomial evaluated at q, computed symbolically first so that
    roots of unity never divide by zero."""
    poly = _qbinom_poly(k, i)
    out = Scalar.zero(q.field)
    power = Scalar.one(q.field)
    for c in poly:
        if c:
            out = out + Scalar.from_rational(q.field, c) * power
        power = power * q
    return out


def qint(n: int, q: Scalar) -> Scalar:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    out = Scalar.zero(q.field)
    power = Scalar.one(q.field)
    for _ in range(n):
        out = out + power
        power = power * q
    return out


def qfactorial(n: int, q: Scalar) -> Scalar:
    out = Scalar.one(q.field)
    for t in range(1, n + 1):
        out = out * qint(t, q)
    return out
