"""Concrete instances: twisted triples, smash products, and named presets.

Every constructor here returns data that has already passed its exhaustive
checker (except the presets documented as negative examples, which exist
so that the checkers have something to catch).  Presets declare the field
characteristics they need and refuse incompatible fields.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .algebra import Algebra, group_algebra, structure_algebra
from .crossed import BrzData, MirrorData, brz_from_twisted, mirror_from_twisted
from .fields import Field, FieldError, Scalar, format_field
from .iterate import QLink, q_from_r3
from .linmap import (
    LinMap,
    ShapeError,
    Space,
    basis_vector,
    compose,
    element,
    flip,
    identity,
    permute_factors,
    product_space,
    tensor,
    vec_tensor,
)
from .quasi import (
    Carrier,
    ModuleAlgebraAction,
    QuasiBialgebra,
    make_bialgebra,
    make_module_algebra,
    make_quasi_bialgebra,
)


# ---------------------------------------------------------------------------
# small stock algebras


def field_algebra(field: Field, label: str = "1") -> Algebra:
    return group_algebra(field, [[0]], labels=(label,))


def cyclic_group_algebra(field: Field, n: int, labels: Sequence[str] | None = None) -> Algebra:
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return group_algebra(field, table, labels=labels)


def involution_algebra(field: Field, gen: str = "g") -> Algebra:
    """The group algebra on 1, g with g^2 = 1."""
    return cyclic_group_algebra(field, 2, labels=("1", gen))


def nilpotent_line(field: Field, gen: str = "x") -> Algebra:
    """k[x]/(x^2): basis 1, x with x^2 = 0."""
    one = field.one
    return structure_algebra(
        field, ("1", gen),
        {(0, 0, 0): one, (0, 1, 1): one, (1, 0, 1): one},
        (one, field.zero),
    )


def symmetric3_algebra(field: Field) -> Algebra:
    """The group algebra of the symmetric group on three letters."""
    perms = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (0, 2, 1), (2, 1, 0), (1, 0, 2)]
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[t]] for t in range(3))] for q in perms] for p in perms]
    labels = ("e", "r", "r2", "s", "sr", "sr2")
    return group_algebra(field, table, labels=labels)


def dihedral8_algebra(field: Field, labels: Sequence[str], reflection_first: bool) -> Algebra:
    """The 8-element dihedral group algebra on a supplied basis order.

    Basis index (i, j) with i in {0,1} and j in {0..3} names the element
    s^i r^j when `reflection_first` is true and r^j s^i otherwise; the two
    orders give different structure-constant tables for the same group.
    """
    def product(i, j, k, l):
        if reflection_first:  # (s^i r^j)(s^k r^l) = s^(i+k) r^((-1)^k j + l)
            return (i + k) % 2, ((j if k == 0 else -j) + l) % 4
        # (r^j s^i)(r^l s^k) = r^(j + (-1)^i l) s^(i+k)
        return (i + k) % 2, (j + (l if i == 0 else -l)) % 4

    table = []
    for i in range(2):
        for j in range(4):
            row = []
            for k in range(2):
                for l in range(4):
                    pi, pj = product(i, j, k, l)
                    row.append(pi * 4 + pj)
            table.append(row)
    return group_algebra(field, table, labels=labels)


# ---------------------------------------------------------------------------
# twisting maps


def sign_flip(field: Field, x: Space, y: Space,
              deg_x: Sequence[int], deg_y: Sequence[int]) -> LinMap:
    """The graded flip x (x) y -> (-1)^(|x||y|) y (x) x."""
    if len(deg_x) != x.dim or len(deg_y) != y.dim:
        raise ShapeError("one degree per basis element is required")
    minus_one = -field.one

    def image(idx):
        i, j = idx
        vec = [field.zero] * (x.dim * y.dim)
        vec[j * x.dim + i] = minus_one if (deg_x[i] % 2 and deg_y[j] % 2) else field.one
        return vec

    return LinMap.on_basis(field, (x, y), (y, x), image)


def anticommutation_twist(field: Field, b: Space, a: Space, shift: Scalar) -> LinMap:
    """A twisting map between two involution algebras that is not a scaled flip.

    On the generators it sends g_B (x) g_A to -g_A (x) g_B + shift 1 (x) 1,
    realizing the relation g_B g_A = -g_A g_B + shift in the product.
    """
    if a.dim != 2 or b.dim != 2:
        raise ShapeError("this twist is defined on two 2-dimensional spaces")

    def image(idx):
        i, j = idx  # i indexes B, j indexes A
        vec = [field.zero] * 4
        if i == 1 and j == 1:
            vec[1 * 2 + 1] = -field.one
            vec[0] = shift
        else:
            vec[j * 2 + i] = field.one
        return vec

    return LinMap.on_basis(field, (b, a), (a, b), image)


def absorption_twist(field: Field, b: Space, a: Space) -> LinMap:
    """A twisting map realizing the relation g_B g_A = g_A + g_B - 1."""
    if a.dim != 2 or b.dim != 2:
        raise ShapeError("this twist is defined on two 2-dimensional spaces")

    def image(idx):
        i, j = idx
        vec = [field.zero] * 4
        if i == 1 and j == 1:
            vec[1 * 2 + 0] = field.one
            vec[0 * 2 + 1] = field.one
            vec[0] = -field.one
        else:
            vec[j * 2 + i] = field.one
        return vec

    return LinMap.on_basis(field, (b, a), (a, b), image)


# ---------------------------------------------------------------------------
# braided twisted triples


@dataclass(frozen=True)
class BraidedTriple:
    """Three algebras with pairwise twisting maps R1, R2, R3."""

    A: Algebra
    B: Algebra
    C: Algebra
    r1: LinMap  # B (x) A -> A (x) B
    r2: LinMap  # C (x) B -> B (x) C
    r3: LinMap  # C (x) A -> A (x) C


def braided_triple(name: str, field: Field) -> BraidedTriple:
    """A named twisted triple; see `TRIPLE_PRESETS` for the catalogue."""
    try:
        builder = TRIPLE_PRESETS[name]
    except KeyError:
        raise KeyError(f"unknown triple preset {name!r};"
                       f" choose from {sorted(TRIPLE_PRESETS)}") from None
    return builder(field)


def triple_qlink(triple: BraidedTriple) -> QLink:
    """The linking data of a twisted triple: both twisted tensor products
    around the shared middle algebra, linked by Q(c, a) = a_R3 (x) 1 (x) c_R3."""
    mirror = mirror_from_twisted(triple.A, triple.B, triple.r1)
    brz = brz_from_twisted(triple.B, triple.C, triple.r2)
    q = q_from_r3(triple.A, triple.B, triple.C, triple.r3)
    return QLink(mirror, brz, q)


def _require_char_not(field: Field, excluded: Sequence[int], name: str) -> None:
    if field.characteristic in excluded:
        raise FieldError(
            f"preset {name!r} is not defined over {format_field(field)}"
            f" (needs characteristic outside {list(excluded)})"
        )


def _triple_trivial(field: Field) -> BraidedTriple:
    a = field_algebra(field)
    b = field_algebra(field)
    c = field_algebra(field)
    return BraidedTriple(
        a, b, c,
        flip(field, b.space, a.space),
        flip(field, c.space, b.space),
        flip(field, c.space, a.space),
    )


def _triple_flips(field: Field) -> BraidedTriple:
    a = involution_algebra(field, "a")
    b = involution_algebra(field, "b")
    c = cyclic_group_algebra(field, 3, labels=("1", "c", "c2"))
    return BraidedTriple(
        a, b, c,
        flip(field, b.space, a.space),
        flip(field, c.space, b.space),
        flip(field, c.space, a.space),
    )


def _triple_sign(field: Field) -> BraidedTriple:
    _require_char_not(field, (2,), "sign-braid")
    a = involution_algebra(field, "a")
    b = involution_algebra(field, "b")
    c = involution_algebra(field, "c")
    deg = (0, 1)
    return BraidedTriple(
        a, b, c,
        sign_flip(field, b.space, a.space, deg, deg),
        sign_flip(field, c.space, b.space, deg, deg),
        sign_flip(field, c.space, a.space, deg, deg),
    )


def _triple_mixed(field: Field) -> BraidedTriple:
    _require_char_not(field, (2,), "mixed-braid")
    a = involution_algebra(field, "a")
    b = involution_algebra(field, "b")
    c = involution_algebra(field, "c")
    shift = field.of_int(2)
    return BraidedTriple(
        a, b, c,
        anticommutation_twist(field, b.space, a.space, shift),
        flip(field, c.space, b.space),
        flip(field, c.space, a.space),
    )


def _triple_broken(field: Field) -> BraidedTriple:
    """Three valid twisting maps whose braid compatibility fails."""
    _require_char_not(field, (2,), "broken")
    a = involution_algebra(field, "a")
    b = involution_algebra(field, "b")
    c = involution_algebra(field, "c")
    deg = (0, 1)
    return BraidedTriple(
        a, b, c,
        anticommutation_twist(field, b.space, a.space, field.of_int(2)),
        flip(field, c.space, b.space),
        sign_flip(field, c.space, a.space, deg, deg),
    )


TRIPLE_PRESETS: dict[str, Callable[[Field], BraidedTriple]] = {
    "trivial": _triple_trivial,
    "flips": _triple_flips,
    "sign-braid": _triple_sign,
    "mixed-braid": _triple_mixed,
    "broken": _triple_broken,
}


# ---------------------------------------------------------------------------
# (quasi-)bialgebra instances and smash products


def involution_bialgebra(field: Field, nontrivial_phi: bool = False) -> QuasiBialgebra:
    """The group algebra on 1, g (g^2 = 1) with grouplike comultiplication.

    With `nontrivial_phi`, the associator is 1(x)1(x)1 - 2 p(x)p(x)p for the
    idempotent p = (1 - g)/2; it is its own inverse.  Needs 1/2, so the
    characteristic must not be 2.
    """
    h = involution_algebra(field, "g")
    s = h.space
    comul = LinMap.on_basis(field, (s,), (s, s),
                            lambda idx: basis_vector(field, 4, idx[0] * 2 + idx[0]))
    counit = LinMap.from_rows(field, (s,), (), [[field.one, field.one]])
    if not nontrivial_phi:
        return make_bialgebra(h, comul, counit)
    _require_char_not(field, (2,), "idempotent associator")
    half = field.from_rational(Fraction(1, 2))
    p = (half, -half)
    one3 = vec_tensor(h.unit, h.unit, h.unit)
    ppp = vec_tensor(p, p, p)
    two = field.of_int(2)
    phi = tuple(a - two * b for a, b in zip(one3, ppp))
    return make_quasi_bialgebra(h, comul, counit, phi, phi)


def sign_action(field: Field, h: QuasiBialgebra, carrier: Carrier,
                side: str, odd: Sequence[int]) -> ModuleAlgebraAction:
    """The action where g negates the odd basis elements of the carrier."""
    _require_char_not(field, (2,), "sign action")
    if h.space.dim != 2:
        raise ShapeError("the sign action needs the two-dimensional involution algebra")
    cs = carrier.space

    def left_image(idx):
        i, j = idx
        vec = [field.zero] * cs.dim
        vec[j] = -field.one if (i == 1 and odd[j] % 2) else field.one
        return vec

    if side == "left":
        act = LinMap.on_basis(field, (h.space, cs), (cs,), left_image)
    else:
        act = LinMap.on_basis(field, (cs, h.space), (cs,),
                              lambda idx: left_image((idx[1], idx[0])))
    return make_module_algebra(side, h, carrier, act)


def trivial_action(field: Field, h: QuasiBialgebra, carrier: Carrier,
                   side: str) -> ModuleAlgebraAction:
    """h . a = counit(h) a (or its right-handed mirror)."""
    cs = carrier.space
    counit_row = h.counit.matrix[0]

    def image(idx):
        hi, ci = (idx[0], idx[1]) if side == "left" else (idx[1], idx[0])
        vec = [field.zero] * cs.dim
        vec[ci] = counit_row[hi]
        return vec

    domain = (h.space, cs) if side == "left" else (cs, h.space)
    act = LinMap.on_basis(field, domain, (cs,), image)
    return make_module_algebra(side, h, carrier, act)


def left_smash(act: ModuleAlgebraAction) -> MirrorData:
    """The smash product A # H as a mirror crossed product on A (x) H.

    P(h, a) = h_1 . a (x) h_2 and nu(a, a') = (phibar^1 . a)(phibar^2 . a')
    (x) phibar^3, with phibar the inverse associator.
    """
    if act.side != "left":
        raise ShapeError("left_smash needs a left action")
    h, carrier = act.H, act.carrier
    field = h.field
    hs, cs = h.space, carrier.space
    if cs.marked is None:
        raise ShapeError("the carrier unit must be a basis vector")
    id_h, id_c = identity(field, (hs,)), identity(field, (cs,))
    p = compose(
        tensor(act.action, id_h),
        permute_factors(field, (hs, hs, cs), (0, 2, 1)),
        tensor(h.comul, id_c),
    )
    nu = compose(
        tensor(carrier.mul, id_h),
        tensor(act.action, act.action, id_h),
        permute_factors(field, (hs, hs, hs, cs, cs), (0, 3, 1, 4, 2)),
        tensor(element(field, (hs, hs, hs), h.phi_inv), id_c, id_c),
    )
    return MirrorData(cs, h.algebra, p, nu)


def right_smash(act: ModuleAlgebraAction) -> BrzData:
    """The smash product H # B as a crossed product on H (x) B.

    R(b, h) = h_1 (x) b . h_2 and sigma(b, b') = phibar^1 (x)
    (b . phibar^2)(b' . phibar^3).
    """
    if act.side != "right":
        raise ShapeError("right_smash needs a right action")
    h, carrier = act.H, act.carrier
    field = h.field
    hs, cs = h.space, carrier.space
    if cs.marked is None:
        raise ShapeError("the carrier unit must be a basis vector")
    id_h, id_c = identity(field, (hs,)), identity(field, (cs,))
    r = compose(
        tensor(id_h, act.action),
        permute_factors(field, (cs, hs, hs), (1, 0, 2)),
        tensor(id_c, h.comul),
    )
    sigma = compose(
        tensor(id_h, carrier.mul),
        tensor(id_h, act.action, act.action),
        permute_factors(field, (hs, hs, hs, cs, cs), (0, 3, 1, 4, 2)),
        tensor(element(field, (hs, hs, hs), h.phi_inv), id_c, id_c),
    )
    return BrzData(h.algebra, cs, r, sigma)


def two_sided_q(left_act: ModuleAlgebraAction, right_act: ModuleAlgebraAction) -> QLink:
    """The linking data of the two-sided smash product A # H # B.

    Q(b, a) = phibar^1 . a (x) phibar^2 (x) b . phibar^3.
    """
    if left_act.side != "left" or right_act.side != "right":
        raise ShapeError("two_sided_q needs a left action and a right action")
    if left_act.H != right_act.H:
        raise ShapeError("both actions must be over the same quasi-bialgebra")
    h = left_act.H
    field = h.field
    hs = h.space
    a_s = left_act.carrier.space
    b_s = right_act.carrier.space
    q = compose(
        tensor(left_act.action, identity(field, (hs,)), right_act.action),
        permute_factors(field, (hs, hs, hs, b_s, a_s), (0, 4, 1, 3, 2)),
        tensor(element(field, (hs, hs, hs), h.phi_inv),
               identity(field, (b_s,)), identity(field, (a_s,))),
    )
    return QLink(left_smash(left_act), right_smash(right_act), q)


def smash_instance(field: Field, kind: str) -> tuple[ModuleAlgebraAction, ModuleAlgebraAction]:
    """The stock pair of actions for the two-sided smash presets."""
    if kind == "trivial-action":
        h = involution_bialgebra(field)
        a = Carrier.from_algebra(nilpotent_line(field, "x"))
        b = Carrier.from_algebra(nilpotent_line(field, "y"))
        return trivial_action(field, h, a, "left"), trivial_action(field, h, b, "right")
    if kind in ("plain", "quasi"):
        h = involution_bialgebra(field, nontrivial_phi=(kind == "quasi"))
        a = Carrier.from_algebra(nilpotent_line(field, "x"))
        b = Carrier.from_algebra(nilpotent_line(field, "y"))
        odd = (0, 1)
        return (sign_action(field, h, a, "left", odd),
                sign_action(field, h, b, "right", odd))
    raise KeyError(f"unknown smash instance {kind!r}")


# ---------------------------------------------------------------------------
# dihedral instances for the converse extraction


@dataclass(frozen=True)
class DihedralInstance:
    """An algebra on W (x) D (x) V (D one-dimensional) with factor data."""

    M: Algebra
    mirror: MirrorData
    brz: BrzData


def dihedral_instance(field: Field, skewed: bool = False) -> DihedralInstance:
    """The dihedral group algebra seen as a product of k[s] and k[r].

    With `skewed`, the basis element at (i, j) names r^j s^i instead of
    s^i r^j; the factor embeddings still work but basis elements no longer
    factor canonically, so the linking-map extraction must reject it.
    """
    w_alg = involution_algebra(field, "s")
    d_alg = field_algebra(field)
    v_alg = cyclic_group_algebra(field, 4, labels=("1", "r", "r2", "r3"))
    labels = product_space([w_alg.space, d_alg.space, v_alg.space]).labels
    m = dihedral8_algebra(field, labels, reflection_first=not skewed)
    mirror = mirror_from_twisted(w_alg, d_alg, flip(field, d_alg.space, w_alg.space))
    brz = brz_from_twisted(d_alg, v_alg, flip(field, v_alg.space, d_alg.space))
    return DihedralInstance(m, mirror, brz)
