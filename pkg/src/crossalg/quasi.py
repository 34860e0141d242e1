"""Quasi-bialgebras and module algebras over them.

The defining axioms used here are the standard ones: comultiplication and
counit are algebra maps, coassociativity holds up to conjugation by an
invertible associator phi in H (x) H (x) H satisfying the pentagon and
counit conditions.  Our orientation is

    (id (x) comul)(comul(h)) . phi = phi . (comul (x) id)(comul(h));

data written for the opposite orientation fits by swapping phi and its
inverse.  Module-algebra carriers need not be associative: they satisfy
the phi-twisted associativity instead, so they are held in a `Carrier`
that only enforces the unit laws.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import Algebra
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
    permute_factors,
    tensor,
    vec_tensor,
)
from .report import (
    AxiomReport,
    CheckFailedError,
    combine_reports,
    compare_maps,
    compare_vectors,
    MAX_WITNESSES,
)
from .linmap import tensor_labels


@dataclass(frozen=True)
class Carrier:
    """A not-necessarily-associative unital multiplication on a based space."""

    space: Space
    mul: LinMap
    unit: tuple[Scalar, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "unit", tuple(self.unit))
        if self.mul.domain != (self.space, self.space) or self.mul.codomain != (self.space,):
            raise ShapeError("carrier mul must map space (x) space to space")
        if len(self.unit) != self.space.dim:
            raise ShapeError("carrier unit has the wrong length")
        field = self.mul.field
        for i in range(self.space.dim):
            e = basis_vector(field, self.space.dim, i)
            if apply(self.mul, vec_tensor(self.unit, e)) != e \
                    or apply(self.mul, vec_tensor(e, self.unit)) != e:
                raise ShapeError(f"carrier unit law fails at {self.space.labels[i]}")
        support = [i for i, x in enumerate(self.unit) if x]
        if len(support) == 1 and self.unit[support[0]] == field.one \
                and self.space.marked != support[0]:
            space = self.space.with_marked(support[0])
            object.__setattr__(self, "space", space)
            object.__setattr__(self, "mul",
                               LinMap(field, (space, space), (space,), self.mul.matrix))

    @property
    def field(self) -> Field:
        return self.mul.field

    @classmethod
    def from_algebra(cls, a: Algebra) -> "Carrier":
        return cls(a.space, a.mul, a.unit)

    def unit_map(self) -> LinMap:
        return element(self.field, (self.space,), self.unit)


def _power_mul(mul: LinMap, space: Space, n: int) -> LinMap:
    """Componentwise multiplication on the n-fold tensor power."""
    field = mul.field
    muls = tensor(*([mul] * n))  # (s, s)^n -> s^n
    spaces = (space,) * (2 * n)
    # interleave (x1..xn, y1..yn) -> (x1, y1, ..., xn, yn)
    perm = [0] * (2 * n)
    for i in range(n):
        perm[2 * i] = i
        perm[2 * i + 1] = n + i
    return compose(muls, permute_factors(field, spaces, perm))


class _PowerOps:
    """Elementwise operations in H^(x)n, for checking associator identities."""

    def __init__(self, h: Algebra, n: int):
        self.field = h.field
        self.space = h.space
        self.n = n
        self.mul = _power_mul(h.mul, h.space, n)
        self.one = vec_tensor(*([tuple(h.unit)] * n))
        self.labels = tensor_labels((h.space,) * n)

    def prod(self, *vecs: Sequence[Scalar]) -> tuple[Scalar, ...]:
        out = tuple(vecs[0])
        for v in vecs[1:]:
            out = apply(self.mul, vec_tensor(out, v))
        return out

    def right_mul(self, vec: Sequence[Scalar]) -> LinMap:
        ids = identity(self.field, (self.space,) * self.n)
        return compose(self.mul, tensor(ids, element(self.field, (self.space,) * self.n, vec)))

    def left_mul(self, vec: Sequence[Scalar]) -> LinMap:
        ids = identity(self.field, (self.space,) * self.n)
        return compose(self.mul, tensor(element(self.field, (self.space,) * self.n, vec), ids))


def check_quasi_bialgebra(h: Algebra, comul: LinMap, counit: LinMap,
                          phi: Sequence[Scalar], phi_inv: Sequence[Scalar],
                          max_witnesses: int = MAX_WITNESSES) -> AxiomReport:
    """The quasi-bialgebra axioms, each as an exact equality."""
    s = h.space
    field = h.field
    if comul.domain != (s,) or comul.codomain != (s, s):
        raise ShapeError("comul must map H to H (x) H")
    if counit.domain != (s,) or counit.codomain != ():
        raise ShapeError("counit must map H to the ground field")
    if len(phi) != s.dim ** 3 or len(phi_inv) != s.dim ** 3:
        raise ShapeError("phi and its inverse must be vectors in H (x) H (x) H")
    phi, phi_inv = tuple(phi), tuple(phi_inv)
    id_h = identity(field, (s,))
    ops2, ops3, ops4 = _PowerOps(h, 2), _PowerOps(h, 3), _PowerOps(h, 4)

    comul_mult = compare_maps(
        "comul-multiplicative",
        compose(comul, h.mul),
        compose(ops2.mul, tensor(comul, comul)),
        max_witnesses,
    )
    comul_unit = compare_vectors("comul-unit", field, ops2.labels,
                                 apply(comul, h.unit), ops2.one)
    counit_mult = compare_maps(
        "counit-multiplicative",
        compose(counit, h.mul),
        tensor(counit, counit),
        max_witnesses,
    )
    counit_unit = compare_vectors("counit-unit", field, ["1"],
                                  apply(counit, h.unit), (field.one,))
    counit_left = compare_maps("counit-law-left",
                               compose(tensor(counit, id_h), comul), id_h, max_witnesses)
    counit_right = compare_maps("counit-law-right",
                                compose(tensor(id_h, counit), comul), id_h, max_witnesses)

    # (id (x) comul)(comul(h)) . phi = phi . (comul (x) id)(comul(h))
    quasi_coassoc = compare_maps(
        "quasi-coassociativity",
        compose(ops3.right_mul(phi), tensor(id_h, comul), comul),
        compose(ops3.left_mul(phi), tensor(comul, id_h), comul),
        max_witnesses,
    )

    # (id(x)id(x)comul)(phi) . (comul(x)id(x)id)(phi)
    #   = (1(x)phi) . (id(x)comul(x)id)(phi) . (phi(x)1)
    id2 = tensor(id_h, id_h)
    lhs4 = ops4.prod(
        apply(tensor(id2, comul), phi),
        apply(tensor(comul, id2), phi),
    )
    rhs4 = ops4.prod(
        vec_tensor(tuple(h.unit), phi),
        apply(tensor(id_h, comul, id_h), phi),
        vec_tensor(phi, tuple(h.unit)),
    )
    pentagon = compare_vectors("pentagon", field, ops4.labels, lhs4, rhs4)

    invertible = combine_reports(
        compare_vectors("right", field, ops3.labels, ops3.prod(phi, phi_inv), ops3.one),
        compare_vectors("left", field, ops3.labels, ops3.prod(phi_inv, phi), ops3.one),
        prefix="phi-invertible-",
    )
    phi_counit = compare_vectors(
        "phi-counit", field, ops2.labels,
        apply(tensor(id_h, counit, id_h), phi), ops2.one,
    )
    return combine_reports(
        comul_mult, comul_unit, counit_mult, counit_unit,
        counit_left, counit_right, quasi_coassoc, pentagon,
        invertible, phi_counit,
    )


@dataclass(frozen=True)
class QuasiBialgebra:
    """An algebra with comultiplication, counit, and invertible associator.

    Use `make_quasi_bialgebra`; the axioms are checked exhaustively there.
    """

    algebra: Algebra
    comul: LinMap
    counit: LinMap
    phi: tuple[Scalar, ...]
    phi_inv: tuple[Scalar, ...]

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def space(self) -> Space:
        return self.algebra.space

    @property
    def phi_trivial(self) -> bool:
        return self.phi == vec_tensor(*([tuple(self.algebra.unit)] * 3))


def make_quasi_bialgebra(h: Algebra, comul: LinMap, counit: LinMap,
                         phi: Sequence[Scalar], phi_inv: Sequence[Scalar],
                         max_witnesses: int = MAX_WITNESSES) -> QuasiBialgebra:
    report = check_quasi_bialgebra(h, comul, counit, phi, phi_inv, max_witnesses)
    if not report.passed:
        raise CheckFailedError("quasi-bialgebra axioms fail", report)
    return QuasiBialgebra(h, comul, counit, tuple(phi), tuple(phi_inv))


def make_bialgebra(h: Algebra, comul: LinMap, counit: LinMap,
                   max_witnesses: int = MAX_WITNESSES) -> QuasiBialgebra:
    """An ordinary bialgebra: the associator is 1 (x) 1 (x) 1."""
    one3 = vec_tensor(*([tuple(h.unit)] * 3))
    return make_quasi_bialgebra(h, comul, counit, one3, one3, max_witnesses)


@dataclass(frozen=True)
class ModuleAlgebraAction:
    """A left or right module-algebra structure over a quasi-bialgebra.

    Built via `make_module_algebra`; the carrier satisfies phi-twisted
    associativity, which reduces to plain associativity when phi is
    trivial.
    """

    side: str
    H: QuasiBialgebra
    carrier: Carrier
    action: LinMap


def check_module_algebra(side: str, h: QuasiBialgebra, carrier: Carrier, action: LinMap,
                         max_witnesses: int = MAX_WITNESSES) -> AxiomReport:
    if side not in ("left", "right"):
        raise ShapeError(f"side must be 'left' or 'right', got {side!r}")
    hs, cs = h.space, carrier.space
    field = h.field
    if side == "left" and (action.domain != (hs, cs) or action.codomain != (cs,)):
        raise ShapeError("a left action must map H (x) A to A")
    if side == "right" and (action.domain != (cs, hs) or action.codomain != (cs,)):
        raise ShapeError("a right action must map A (x) H to A")
    id_h, id_c = identity(field, (hs,)), identity(field, (cs,))
    uh = h.algebra.unit_map()
    uc = carrier.unit_map()
    mul_h, mul_c = h.algebra.mul, carrier.mul
    act = action

    if side == "left":
        module = combine_reports(
            compare_maps("associative", compose(act, tensor(mul_h, id_c)),
                         compose(act, tensor(id_h, act)), max_witnesses),
            compare_maps("unital", compose(act, tensor(uh, id_c)), id_c, max_witnesses),
            prefix="module-",
        )
        # h . (a a') = (h_1 . a)(h_2 . a')
        multiplicative = compare_maps(
            "action-multiplicative",
            compose(act, tensor(id_h, mul_c)),
            compose(mul_c, tensor(act, act),
                    permute_factors(field, (hs, hs, cs, cs), (0, 2, 1, 3)),
                    tensor(h.comul, id_c, id_c)),
            max_witnesses,
        )
        # h . 1_A = counit(h) 1_A
        unit_act = compare_maps(
            "action-on-unit",
            compose(act, tensor(id_h, uc)),
            compose(uc, h.counit),
            max_witnesses,
        )
        # (a a') a'' = (phi^1 . a)((phi^2 . a')(phi^3 . a''))
        acts = tensor(act, act, act)
        interleave = permute_factors(field, (hs, hs, hs, cs, cs, cs), (0, 3, 1, 4, 2, 5))
        phi_map = element(field, (hs, hs, hs), h.phi)
        twisted = compare_maps(
            "twisted-associativity",
            compose(mul_c, tensor(mul_c, id_c)),
            compose(mul_c, tensor(id_c, mul_c), acts, interleave,
                    tensor(phi_map, id_c, id_c, id_c)),
            max_witnesses,
        )
    else:
        module = combine_reports(
            compare_maps("associative", compose(act, tensor(id_c, mul_h)),
                         compose(act, tensor(act, id_h)), max_witnesses),
            compare_maps("unital", compose(act, tensor(id_c, uh)), id_c, max_witnesses),
            prefix="module-",
        )
        # (b b') . h = (b . h_1)(b' . h_2)
        multiplicative = compare_maps(
            "action-multiplicative",
            compose(act, tensor(mul_c, id_h)),
            compose(mul_c, tensor(act, act),
                    permute_factors(field, (cs, cs, hs, hs), (0, 2, 1, 3)),
                    tensor(id_c, id_c, h.comul)),
            max_witnesses,
        )
        unit_act = compare_maps(
            "action-on-unit",
            compose(act, tensor(uc, id_h)),
            compose(uc, h.counit),
            max_witnesses,
        )
        # (b b') b'' = (b . phibar^1)((b' . phibar^2)(b'' . phibar^3))
        acts = tensor(act, act, act)
        interleave = permute_factors(field, (cs, cs, cs, hs, hs, hs), (0, 3, 1, 4, 2, 5))
        phi_inv_map = element(field, (hs, hs, hs), h.phi_inv)
        twisted = compare_maps(
            "twisted-associativity",
            compose(mul_c, tensor(mul_c, id_c)),
            compose(mul_c, tensor(id_c, mul_c), acts, interleave,
                    tensor(id_c, id_c, id_c, phi_inv_map)),
            max_witnesses,
        )
    return combine_reports(module, multiplicative, unit_act, twisted)


def make_module_algebra(side: str, h: QuasiBialgebra, carrier: Carrier, action: LinMap,
                        max_witnesses: int = MAX_WITNESSES) -> ModuleAlgebraAction:
    report = check_module_algebra(side, h, carrier, action, max_witnesses)
    if not report.passed:
        raise CheckFailedError(f"{side} module-algebra axioms fail", report)
    return ModuleAlgebraAction(side, h, carrier, action)
