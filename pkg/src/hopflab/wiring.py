"""Sparse tensor-leg calculus for assembling structure maps.

Dense matrices are fine as *results*, but intermediate spaces like
H (x) H (x) H (x) H (x) V blow up quadratically when realized as dense
permutation or Kronecker matrices. A :class:`Wire` is a sparse element of a
tensor product of coordinate spaces; Sweedler-style formulas are evaluated
column-by-column on basis wires and only the final matrix is dense.
"""

from __future__ import annotations

from .exactmath import FieldSpec, Matrix, Scalar


class Wire:
    """Sparse element of V_{d_0} (x) ... (x) V_{d_{k-1}}."""

    __slots__ = ("field", "dims", "terms")

    def __init__(self, field: FieldSpec, dims, terms=None):
        self.field = field
        self.dims = tuple(dims)
        self.terms = dict(terms or {})

    @staticmethod
    def basis(field: FieldSpec, dims, index) -> "Wire":
        return Wire(field, dims, {tuple(index): Scalar.one(field)})

    @staticmethod
    def from_flat(field: FieldSpec, dims, flat_index: int) -> "Wire":
        return Wire.basis(field, dims, unflatten(dims, flat_index))

    def copy(self) -> "Wire":
        return Wire(self.field, self.dims, self.terms)

    def add_term(self, key, coeff: Scalar) -> None:
        if coeff.is_zero():
            return
        cur = self.terms.get(key)
        new = coeff if cur is None else cur + coeff
        if new.is_zero():
            self.terms.pop(key, None)
        else:
            self.terms[key] = new

    def scaled(self, c: Scalar) -> "Wire":
        if c.is_zero():
            return Wire(self.field, self.dims)
        return Wire(self.field, self.dims, {k: c * v for k, v in self.terms.items()})

    def __add__(self, other: "Wire") -> "Wire":
        if self.dims != other.dims:
            raise ValueError("wire shapes differ")
        out = self.copy()
        for k, v in other.terms.items():
            out.add_term(k, v)
        return out

    def tensor(self, other: "Wire") -> "Wire":
        out = Wire(self.field, self.dims + other.dims)
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                out.add_term(k1 + k2, c1 * c2)
        return out

    # -- leg operations ------------------------------------------------------

    def permute(self, order) -> "Wire":
        """New factor order: output leg t is input leg order[t]."""
        if sorted(order) != list(range(len(self.dims))):
            raise ValueError("order must be a permutation of the legs")
        dims = tuple(self.dims[s] for s in order)
        out = Wire(self.field, dims)
        for key, coeff in self.terms.items():
            out.add_term(tuple(key[s] for s in order), coeff)
        return out

    def apply(self, pos: int, nlegs: int, mat: Matrix, out_dims) -> "Wire":
        """Apply a matrix to legs [pos, pos+nlegs), replacing them by legs of
        sizes out_dims; the matrix columns are indexed by the flattened
        consumed legs, rows by the flattened out_dims."""
        in_dims = self.dims[pos : pos + nlegs]
        in_total = 1
        for d in in_dims:
            in_total *= d
        out_total = 1
        for d in out_dims:
            out_total *= d
        if (mat.rows, mat.cols) != (out_total, in_total):
            raise ValueError(
                f"matrix {mat.rows}x{mat.cols} does not fit legs {in_dims} -> {out_dims}"
            )
        new_dims = self.dims[:pos] + tuple(out_dims) + self.dims[pos + nlegs :]
        out = Wire(self.field, new_dims)
        col_cache: dict = {}
        for key, coeff in self.terms.items():
            j = flatten(in_dims, key[pos : pos + nlegs])
            col = col_cache.get(j)
            if col is None:
                col = [
                    (i, mat.entries[i * mat.cols + j])
                    for i in range(mat.rows)
                    if not mat.entries[i * mat.cols + j].is_zero()
                ]
                col_cache[j] = col
            head, tail = key[:pos], key[pos + nlegs :]
            for i, val in col:
                out.add_term(head + unflatten(out_dims, i) + tail, coeff * val)
        return out

    def merge_legs(self, pos: int, nlegs: int) -> "Wire":
        """Flatten adjacent legs into one (pure reindexing)."""
        in_dims = self.dims[pos : pos + nlegs]
        total = 1
        for d in in_dims:
            total *= d
        new_dims = self.dims[:pos] + (total,) + self.dims[pos + nlegs :]
        out = Wire(self.field, new_dims)
        for key, coeff in self.terms.items():
            merged = flatten(in_dims, key[pos : pos + nlegs])
            out.add_term(key[:pos] + (merged,) + key[pos + nlegs :], coeff)
        return out

    def split_leg(self, pos: int, dims) -> "Wire":
        new_dims = self.dims[:pos] + tuple(dims) + self.dims[pos + 1 :]
        out = Wire(self.field, new_dims)
        for key, coeff in self.terms.items():
            out.add_term(key[:pos] + unflatten(dims, key[pos]) + key[pos + 1 :], coeff)
        return out

    def to_column(self) -> Matrix:
        total = 1
        for d in self.dims:
            total *= d
        out = Matrix.zeros(self.field, total, 1)
        for key, coeff in self.terms.items():
            out.set(flatten(self.dims, key), 0, coeff)
        return out


def flatten(dims, index) -> int:
    flat = 0
    for d, i in zip(dims, index):
        flat = flat * d + i
    return flat


def unflatten(dims, flat: int):
    out = []
    for d in reversed(dims):
        out.append(flat % d)
        flat //= d
    out.reverse()
    return tuple(out)


def build_matrix(field: FieldSpec, src_dims, fn) -> Matrix:
    """Assemble the dense matrix of a linear map by evaluating fn on each
    basis wire of the source; fn returns a Wire whose shape fixes the target."""
    total_src = 1
    for d in src_dims:
        total_src *= d
    cols = []
    tgt_total = None
    for j in range(total_src):
        w = fn(Wire.from_flat(field, src_dims, j))
        t = 1
        for d in w.dims:
            t *= d
        if tgt_total is None:
            tgt_total = t
        elif tgt_total != t:
            raise ValueError("inconsistent target dimensions across columns")
        cols.append(w)
    out = Matrix.zeros(field, tgt_total, total_src)
    for j, w in enumerate(cols):
        for key, coeff in w.terms.items():
            out.set(flatten(w.dims, key), j, coeff)
    return out
