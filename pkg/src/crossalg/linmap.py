"""Based vector spaces and exact linear maps on tensor-product bases.

A `LinMap` is a dense matrix over the canonical basis of a tensor product
of `Space`s: rows are indexed by the codomain tensor basis, columns by the
domain tensor basis.  The flat index of a multi-index (i1, ..., ik) over
factors of dimensions (d1, ..., dk) is i1*(d2*...*dk) + ... + ik, i.e. the
leftmost factor varies slowest.  This convention is used everywhere, so
merging adjacent tensor factors never permutes matrix entries.

Everything here is immutable and every operation is a pure function.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .fields import Field, Scalar

TENSOR_SEP = "⊗"  # the symbol used in labels of product bases


class ShapeError(ValueError):
    """Mismatched spaces, dimensions or fields in a linear-map operation."""


@dataclass(frozen=True)
class Space:
    """A based vector space: distinct basis labels, optional marked element."""

    labels: tuple[str, ...]
    marked: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(self.labels))
        if not self.labels:
            raise ShapeError("a space needs at least one basis element")
        if len(set(self.labels)) != len(self.labels):
            raise ShapeError(f"duplicate basis labels: {self.labels}")
        if self.marked is not None and not 0 <= self.marked < len(self.labels):
            raise ShapeError(f"marked index {self.marked} out of range")

    @property
    def dim(self) -> int:
        return len(self.labels)

    def with_marked(self, marked: int | None) -> "Space":
        return Space(self.labels, marked)

    def __repr__(self) -> str:
        mark = f", marked={self.marked}" if self.marked is not None else ""
        return f"Space({list(self.labels)}{mark})"


def product_space(spaces: Sequence[Space]) -> Space:
    """The tensor product as a single space; labels join with the tensor sign.

    The marked element is the tensor of the factors' marked elements, when
    all factors have one.
    """
    labels = [TENSOR_SEP.join(parts) for parts in itertools.product(*(s.labels for s in spaces))]
    marked: int | None = None
    if all(s.marked is not None for s in spaces):
        marked = flatten_index(tuple(s.dim for s in spaces), tuple(s.marked for s in spaces))
    return Space(tuple(labels), marked)


def flatten_index(dims: Sequence[int], idx: Sequence[int]) -> int:
    flat = 0
    for d, i in zip(dims, idx):
        flat = flat * d + i
    return flat


def unflatten_index(dims: Sequence[int], flat: int) -> tuple[int, ...]:
    idx = [0] * len(dims)
    for pos in range(len(dims) - 1, -1, -1):
        idx[pos] = flat % dims[pos]
        flat //= dims[pos]
    return tuple(idx)


def _total_dim(spaces: Sequence[Space]) -> int:
    n = 1
    for s in spaces:
        n *= s.dim
    return n


def tensor_labels(spaces: Sequence[Space]) -> list[str]:
    if not spaces:
        return ["1"]
    return [TENSOR_SEP.join(parts) for parts in itertools.product(*(s.labels for s in spaces))]


@dataclass(frozen=True)
class LinMap:
    """An exact linear map between tensor products of based spaces."""

    field: Field
    domain: tuple[Space, ...]
    codomain: tuple[Space, ...]
    matrix: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "domain", tuple(self.domain))
        object.__setattr__(self, "codomain", tuple(self.codomain))
        object.__setattr__(self, "matrix", tuple(tuple(row) for row in self.matrix))
        rows, cols = self.cod_dim, self.dom_dim
        if len(self.matrix) != rows or any(len(row) != cols for row in self.matrix):
            raise ShapeError(
                f"matrix shape {len(self.matrix)}x{len(self.matrix[0]) if self.matrix else 0}"
                f" does not match codomain {rows} x domain {cols}"
            )

    @property
    def dom_dim(self) -> int:
        return _total_dim(self.domain)

    @property
    def cod_dim(self) -> int:
        return _total_dim(self.codomain)

    @classmethod
    def from_rows(
        cls,
        field: Field,
        domain: Sequence[Space],
        codomain: Sequence[Space],
        rows: Iterable[Iterable[Scalar]],
    ) -> "LinMap":
        return cls(field, tuple(domain), tuple(codomain), tuple(tuple(r) for r in rows))

    @classmethod
    def on_basis(
        cls,
        field: Field,
        domain: Sequence[Space],
        codomain: Sequence[Space],
        image: Callable[[tuple[int, ...]], Sequence[Scalar]],
    ) -> "LinMap":
        """Build a map from its values on domain basis vectors.

        `image` receives a domain multi-index and returns the coordinate
        vector of its image in the codomain tensor basis.
        """
        dims = tuple(s.dim for s in domain)
        rows = _total_dim(codomain)
        cols = _total_dim(domain)
        matrix = [[field.zero] * cols for _ in range(rows)]
        for col, idx in enumerate(itertools.product(*(range(d) for d in dims))):
            vec = tuple(image(idx))
            if len(vec) != rows:
                raise ShapeError(f"image at {idx} has length {len(vec)}, expected {rows}")
            for r, x in enumerate(vec):
                if x:
                    matrix[r][col] = x
        return cls(field, tuple(domain), tuple(codomain), tuple(tuple(r) for r in matrix))

    def column(self, col: int) -> tuple[Scalar, ...]:
        return tuple(row[col] for row in self.matrix)

    def __repr__(self) -> str:
        dom = "*".join(str(s.dim) for s in self.domain) or "1"
        cod = "*".join(str(s.dim) for s in self.codomain) or "1"
        return f"LinMap({dom} -> {cod} over {self.field!r})"


def _check_same_spaces(left: Sequence[Space], right: Sequence[Space], what: str) -> None:
    if tuple(left) != tuple(right):
        raise ShapeError(
            f"{what}: expected factors {[s.labels for s in left]},"
            f" got {[s.labels for s in right]}"
        )


def identity(field: Field, spaces: Sequence[Space]) -> LinMap:
    n = _total_dim(spaces)
    one, zero = field.one, field.zero
    rows = tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))
    return LinMap(field, tuple(spaces), tuple(spaces), rows)


def element(field: Field, spaces: Sequence[Space], coords: Sequence[Scalar]) -> LinMap:
    """A vector as a map from the empty tensor product (the ground field)."""
    spaces = tuple(spaces)
    if len(coords) != _total_dim(spaces):
        raise ShapeError(f"coordinate vector length {len(coords)} != dim {_total_dim(spaces)}")
    return LinMap(field, (), spaces, tuple((x,) for x in coords))


def flip(field: Field, x: Space, y: Space) -> LinMap:
    """The permutation X (x) Y -> Y (x) X sending (i, j) to (j, i)."""
    zero, one = field.zero, field.one
    dx, dy = x.dim, y.dim
    matrix = [[zero] * (dx * dy) for _ in range(dx * dy)]
    for i in range(dx):
        for j in range(dy):
            matrix[j * dx + i][i * dy + j] = one
    return LinMap(field, (x, y), (y, x), tuple(tuple(r) for r in matrix))


def permute_factors(field: Field, spaces: Sequence[Space], perm: Sequence[int]) -> LinMap:
    """The permutation map whose j-th output factor is input factor perm[j]."""
    spaces = tuple(spaces)
    if sorted(perm) != list(range(len(spaces))):
        raise ShapeError(f"{perm} is not a permutation of {len(spaces)} factors")
    dims = tuple(s.dim for s in spaces)
    out_spaces = tuple(spaces[p] for p in perm)
    out_dims = tuple(dims[p] for p in perm)
    n = _total_dim(spaces)
    zero, one = field.zero, field.one
    matrix = [[zero] * n for _ in range(n)]
    for col in range(n):
        idx = unflatten_index(dims, col)
        row = flatten_index(out_dims, tuple(idx[p] for p in perm))
        matrix[row][col] = one
    return LinMap(field, spaces, out_spaces, tuple(tuple(r) for r in matrix))


def compose(*maps: LinMap) -> LinMap:
    """Composition f1 o f2 o ... o fn (rightmost applied first)."""
    if not maps:
        raise ShapeError("compose needs at least one map")
    result = maps[-1]
    for f in reversed(maps[:-1]):
        if f.field != result.field:
            raise ShapeError(f"cannot compose over {f.field!r} and {result.field!r}")
        _check_same_spaces(f.domain, result.codomain, "compose")
        result = LinMap(f.field, result.domain, f.codomain, _mat_mul(f, result))
    return result


def _mat_mul(f: LinMap, g: LinMap) -> tuple[tuple[Scalar, ...], ...]:
    zero = f.field.zero
    g_rows = g.matrix
    out = []
    for f_row in f.matrix:
        acc = [zero] * g.dom_dim
        for k, fk in enumerate(f_row):
            if not fk:
                continue
            for j, gkj in enumerate(g_rows[k]):
                if gkj:
                    acc[j] = acc[j] + fk * gkj
        out.append(tuple(acc))
    return tuple(out)


def tensor(*maps: LinMap) -> LinMap:
    """The tensor product map, under the leftmost-slowest index convention."""
    if not maps:
        raise ShapeError("tensor needs at least one map")
    result = maps[0]
    for g in maps[1:]:
        if g.field != result.field:
            raise ShapeError(f"cannot tensor over {result.field!r} and {g.field!r}")
        result = LinMap(
            result.field,
            result.domain + g.domain,
            result.codomain + g.codomain,
            _kron(result, g),
        )
    return result


def _kron(f: LinMap, g: LinMap) -> tuple[tuple[Scalar, ...], ...]:
    zero = f.field.zero
    gm, gn = g.cod_dim, g.dom_dim
    rows = f.cod_dim * gm
    cols = f.dom_dim * gn
    matrix = [[zero] * cols for _ in range(rows)]
    for i1, f_row in enumerate(f.matrix):
        for j1, a in enumerate(f_row):
            if not a:
                continue
            rbase, cbase = i1 * gm, j1 * gn
            for i2, g_row in enumerate(g.matrix):
                out_row = matrix[rbase + i2]
                for j2, b in enumerate(g_row):
                    if b:
                        out_row[cbase + j2] = a * b
    return tuple(tuple(r) for r in matrix)


def apply(f: LinMap, vec: Sequence[Scalar]) -> tuple[Scalar, ...]:
    """Exact matrix-vector product."""
    if len(vec) != f.dom_dim:
        raise ShapeError(f"vector length {len(vec)} != domain dim {f.dom_dim}")
    zero = f.field.zero
    support = [(j, x) for j, x in enumerate(vec) if x]
    out = []
    for row in f.matrix:
        acc = zero
        for j, x in support:
            if row[j]:
                acc = acc + row[j] * x
        out.append(acc)
    return tuple(out)


def with_spaces(f: LinMap, domain: Sequence[Space], codomain: Sequence[Space]) -> LinMap:
    """Reinterpret the factor grouping of a map, keeping the matrix.

    Valid because the flat index convention makes merging or splitting
    adjacent factors a no-op on matrices; total dimensions must agree.
    """
    domain, codomain = tuple(domain), tuple(codomain)
    if _total_dim(domain) != f.dom_dim or _total_dim(codomain) != f.cod_dim:
        raise ShapeError("regrouped spaces must preserve total dimensions")
    return LinMap(f.field, domain, codomain, f.matrix)


def basis_vector(field: Field, dim: int, index: int) -> tuple[Scalar, ...]:
    if not 0 <= index < dim:
        raise ShapeError(f"basis index {index} out of range for dim {dim}")
    return tuple(field.one if i == index else field.zero for i in range(dim))


def marked_vector(field: Field, space: Space) -> tuple[Scalar, ...]:
    if space.marked is None:
        raise ShapeError(f"space {space!r} has no marked element")
    return basis_vector(field, space.dim, space.marked)


def vec_tensor(*vecs: Sequence[Scalar]) -> tuple[Scalar, ...]:
    out: tuple[Scalar, ...] = tuple(vecs[0])
    for v in vecs[1:]:
        out = tuple(a * b for a in out for b in v)
    return out


def vec_add(field: Field, u: Sequence[Scalar], v: Sequence[Scalar]) -> tuple[Scalar, ...]:
    if len(u) != len(v):
        raise ShapeError("vector length mismatch")
    return tuple(a + b for a, b in zip(u, v))


def vec_scale(c: Scalar, v: Sequence[Scalar]) -> tuple[Scalar, ...]:
    return tuple(c * x for x in v)


def zero_vector(field: Field, dim: int) -> tuple[Scalar, ...]:
    return (field.zero,) * dim
