"""Finite-dimensional unital associative algebras as structure constants.

`make_algebra` is the gatekeeper: it brute-forces associativity over all
basis triples and both unit laws over all basis elements, by evaluating
the multiplication map on vectors.  This evaluation route is deliberately
independent of the matrix-composition route used by the product builders,
so each can catch bugs in the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .fields import Field, Scalar
from .linmap import (
    LinMap,
    ShapeError,
    Space,
    apply,
    basis_vector,
    compose,
    element,
    identity,
    tensor,
    vec_tensor,
)
from .report import (
    AxiomCheck,
    AxiomReport,
    CheckFailedError,
    Witness,
    compare_maps,
    format_combination,
    MAX_WITNESSES,
)


class AlgebraAxiomError(CheckFailedError):
    """Input data does not define an associative unital algebra."""


@dataclass(frozen=True)
class Algebra:
    """A unital associative algebra on a based space.

    `mul` maps space (x) space to space; `unit` is a coordinate vector
    (usually, but not necessarily, a basis vector).  Use `make_algebra`
    to construct one; the constructor itself does not re-verify axioms.
    """

    space: Space
    mul: LinMap
    unit: tuple[Scalar, ...]

    @property
    def field(self) -> Field:
        return self.mul.field

    @property
    def dim(self) -> int:
        return self.space.dim

    def unit_map(self) -> LinMap:
        return element(self.field, (self.space,), self.unit)

    def product(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> tuple[Scalar, ...]:
        return apply(self.mul, vec_tensor(u, v))

    def basis(self, i: int) -> tuple[Scalar, ...]:
        return basis_vector(self.field, self.dim, i)


def _unit_check(space: Space, mul: LinMap, unit: Sequence[Scalar],
                max_witnesses: int) -> AxiomCheck:
    field = mul.field
    labels = space.labels
    witnesses: list[Witness] = []
    failures = 0
    for i in range(space.dim):
        e = basis_vector(field, space.dim, i)
        for side, prod in (("left", apply(mul, vec_tensor(unit, e))),
                           ("right", apply(mul, vec_tensor(e, unit)))):
            if prod != e:
                failures += 1
                if len(witnesses) < max_witnesses:
                    witnesses.append(Witness(
                        ("1" if side == "left" else labels[i],
                         labels[i] if side == "left" else "1"),
                        format_combination(field, labels, prod),
                        format_combination(field, labels, e),
                    ))
    return AxiomCheck("unit", failures == 0, tuple(witnesses), failures)


def _associativity_check(space: Space, mul: LinMap, max_witnesses: int) -> AxiomCheck:
    field = mul.field
    labels = space.labels
    dim = space.dim
    basis = [basis_vector(field, dim, i) for i in range(dim)]
    pair = {}
    for i in range(dim):
        for j in range(dim):
            pair[i, j] = apply(mul, vec_tensor(basis[i], basis[j]))
    witnesses: list[Witness] = []
    failures = 0
    for i in range(dim):
        for j in range(dim):
            left = pair[i, j]
            for k in range(dim):
                lhs = apply(mul, vec_tensor(left, basis[k]))
                rhs = apply(mul, vec_tensor(basis[i], pair[j, k]))
                if lhs != rhs:
                    failures += 1
                    if len(witnesses) < max_witnesses:
                        witnesses.append(Witness(
                            (labels[i], labels[j], labels[k]),
                            format_combination(field, labels, lhs),
                            format_combination(field, labels, rhs),
                        ))
    return AxiomCheck("associativity", failures == 0, tuple(witnesses), failures)


def check_algebra(space: Space, mul: LinMap, unit: Sequence[Scalar],
                  max_witnesses: int = MAX_WITNESSES) -> AxiomReport:
    """Brute-force oracle for the algebra axioms over every basis tuple."""
    if mul.domain != (space, space) or mul.codomain != (space,):
        raise ShapeError("mul must map space (x) space to space")
    if len(unit) != space.dim:
        raise ShapeError(f"unit vector length {len(unit)} != dim {space.dim}")
    return AxiomReport((
        _unit_check(space, mul, unit, max_witnesses),
        _associativity_check(space, mul, max_witnesses),
    ))


def make_algebra(space: Space, mul: LinMap, unit: Sequence[Scalar],
                 max_witnesses: int = MAX_WITNESSES) -> Algebra:
    """Validate and build an algebra; reject invalid data with witnesses.

    When the unit is a standard basis vector, the returned algebra's space
    has that index marked, so the algebra can feed constructions that need
    a distinguished basis element.
    """
    unit = tuple(unit)
    report = check_algebra(space, mul, unit, max_witnesses)
    if not report.passed:
        raise AlgebraAxiomError("not an associative unital algebra", report)
    unit_index = _basis_index(mul.field, unit)
    if unit_index is not None and space.marked != unit_index:
        space = space.with_marked(unit_index)
        mul = LinMap(mul.field, (space, space), (space,), mul.matrix)
    return Algebra(space, mul, unit)


def _basis_index(field: Field, vec: Sequence[Scalar]) -> int | None:
    support = [i for i, x in enumerate(vec) if x]
    if len(support) == 1 and vec[support[0]] == field.one:
        return support[0]
    return None


def group_algebra(field: Field, cayley: Sequence[Sequence[int]], unit_index: int = 0,
                  labels: Sequence[str] | None = None) -> Algebra:
    """The group algebra of a multiplication table of element indices.

    Structure constants are c_ij^k = 1 iff cayley[i][j] = k.  The table is
    validated through `make_algebra`, so tables that are not groups (bad
    unit row/column or non-associative Latin squares) are rejected with a
    witness.
    """
    n = len(cayley)
    if labels is None:
        labels = [f"g{i}" for i in range(n)]
    if len(labels) != n:
        raise ShapeError(f"{len(labels)} labels for a {n}-element table")
    for row in cayley:
        if len(row) != n or any(not 0 <= v < n for v in row):
            raise ShapeError("cayley table must be square with entries in range")
    if not 0 <= unit_index < n:
        raise ShapeError(f"unit index {unit_index} out of range")
    space = Space(tuple(labels), marked=unit_index)
    mul = LinMap.on_basis(
        field, (space, space), (space,),
        lambda idx: basis_vector(field, n, cayley[idx[0]][idx[1]]),
    )
    return make_algebra(space, mul, basis_vector(field, n, unit_index))


def structure_algebra(field: Field, labels: Sequence[str],
                      entries: dict[tuple[int, int, int], Scalar],
                      unit: Sequence[Scalar]) -> Algebra:
    """Build an algebra from sparse structure constants (i, j, k) -> c."""
    n = len(labels)
    space = Space(tuple(labels))
    zero = field.zero
    matrix = [[zero] * (n * n) for _ in range(n)]
    for (i, j, k), c in entries.items():
        if not (0 <= i < n and 0 <= j < n and 0 <= k < n):
            raise ShapeError(f"structure constant index {(i, j, k)} out of range")
        matrix[k][i * n + j] = matrix[k][i * n + j] + c
    mul = LinMap.from_rows(field, (space, space), (space,), matrix)
    return make_algebra(space, mul, unit)


def mu2(a: Algebra) -> LinMap:
    """The triple multiplication A (x) A (x) A -> A.

    Both bracketings are assembled by matrix composition and must agree
    entrywise; this cross-checks the brute-force associativity oracle that
    admitted the algebra.
    """
    id_a = identity(a.field, (a.space,))
    left = compose(a.mul, tensor(a.mul, id_a))
    right = compose(a.mul, tensor(id_a, a.mul))
    check = compare_maps("mu2-bracketings", left, right)
    if not check.passed:
        raise AlgebraAxiomError("triple products disagree between bracketings",
                                AxiomReport((check,)))
    return left
