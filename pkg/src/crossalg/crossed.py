"""The two crossed-product flavors and the twisted-tensor specializations.

A right-handed crossed product lives on A (x) V and is driven by maps
R: V(x)A -> A(x)V and sigma: V(x)V -> A(x)V; its mirror lives on W (x) B
and is driven by P: B(x)W -> W(x)B and nu: W(x)W -> W(x)B.  Checkers
evaluate every axiom as a whole-matrix equality (equivalent to checking
all basis tuples) and report witnesses per failing basis tuple; builders
assemble the product multiplication as a composite of linear maps and
then re-verify associativity with the independent brute-force oracle in
`make_algebra`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra, make_algebra, mu2
from .linmap import (
    LinMap,
    ShapeError,
    Space,
    compose,
    element,
    identity,
    marked_vector,
    product_space,
    tensor,
    vec_tensor,
    with_spaces,
)
from .report import AxiomReport, CheckFailedError, combine_reports, compare_maps, MAX_WITNESSES


@dataclass(frozen=True)
class BrzData:
    """Data (A, V, 1_V, R, sigma) for a crossed product on A (x) V."""

    A: Algebra
    V: Space
    R: LinMap
    sigma: LinMap

    def __post_init__(self) -> None:
        if self.V.marked is None:
            raise ShapeError("V must have a marked element 1_V")
        a = self.A.space
        if self.R.domain != (self.V, a) or self.R.codomain != (a, self.V):
            raise ShapeError("R must map V (x) A to A (x) V")
        if self.sigma.domain != (self.V, self.V) or self.sigma.codomain != (a, self.V):
            raise ShapeError("sigma must map V (x) V to A (x) V")
        if self.R.field != self.A.field or self.sigma.field != self.A.field:
            raise ShapeError("R, sigma and A must share one field")


@dataclass(frozen=True)
class MirrorData:
    """Data (W, 1_W, B, P, nu) for a mirror crossed product on W (x) B."""

    W: Space
    B: Algebra
    P: LinMap
    nu: LinMap

    def __post_init__(self) -> None:
        if self.W.marked is None:
            raise ShapeError("W must have a marked element 1_W")
        b = self.B.space
        if self.P.domain != (b, self.W) or self.P.codomain != (self.W, b):
            raise ShapeError("P must map B (x) W to W (x) B")
        if self.nu.domain != (self.W, self.W) or self.nu.codomain != (self.W, b):
            raise ShapeError("nu must map W (x) W to W (x) B")
        if self.P.field != self.B.field or self.nu.field != self.B.field:
            raise ShapeError("P, nu and B must share one field")


def check_twisting_map(a: Algebra, b: Algebra, r: LinMap,
                       max_witnesses: int = MAX_WITNESSES) -> AxiomReport:
    """The four twisting-map conditions for R: B (x) A -> A (x) B."""
    sa, sb = a.space, b.space
    if r.domain != (sb, sa) or r.codomain != (sa, sb):
        raise ShapeError("R must map B (x) A to A (x) B")
    field = r.field
    id_a, id_b = identity(field, (sa,)), identity(field, (sb,))
    ua, ub = a.unit_map(), b.unit_map()
    items = (
        # R(1_B (x) a) = a (x) 1_B
        compare_maps("twist-unit-left",
                     compose(r, tensor(ub, id_a)), tensor(id_a, ub), max_witnesses),
        # R(b (x) 1_A) = 1_A (x) b
        compare_maps("twist-unit-right",
                     compose(r, tensor(id_b, ua)), tensor(ua, id_b), max_witnesses),
        # R o (id_B (x) mu_A) = (mu_A (x) id_B) o (id_A (x) R) o (R (x) id_A)
        compare_maps("twist-mul-left",
                     compose(r, tensor(id_b, a.mul)),
                     compose(tensor(a.mul, id_b), tensor(id_a, r), tensor(r, id_a)),
                     max_witnesses),
        # R o (mu_B (x) id_A) = (id_A (x) mu_B) o (R (x) id_B) o (id_B (x) R)
        compare_maps("twist-mul-right",
                     compose(r, tensor(b.mul, id_a)),
                     compose(tensor(id_a, b.mul), tensor(r, id_b), tensor(id_b, r)),
                     max_witnesses),
    )
    return AxiomReport(items)


def check_brz(data: BrzData, max_witnesses: int = MAX_WITNESSES) -> AxiomReport:
    """All five crossed-product axioms for (A, V, R, sigma), exhaustively."""
    a, v, r, sigma = data.A, data.V, data.R, data.sigma
    field = a.field
    mu = a.mul
    id_a, id_v = identity(field, (a.space,)), identity(field, (v,))
    ua = a.unit_map()
    uv = element(field, (v,), marked_vector(field, v))
    a_then_v = tensor(ua, id_v)
    brz1 = combine_reports(
        compare_maps("(1_V,a)", compose(r, tensor(uv, id_a)), tensor(id_a, uv), max_witnesses),
        compare_maps("(v,1_A)", compose(r, tensor(id_v, ua)), a_then_v, max_witnesses),
        prefix="brz1",
    )
    brz2 = combine_reports(
        compare_maps("(1_V,v)", compose(sigma, tensor(uv, id_v)), a_then_v, max_witnesses),
        compare_maps("(v,1_V)", compose(sigma, tensor(id_v, uv)), a_then_v, max_witnesses),
        prefix="brz2",
    )
    brz3 = compare_maps(
        "brz3",
        compose(r, tensor(id_v, mu)),
        compose(tensor(mu, id_v), tensor(id_a, r), tensor(r, id_a)),
        max_witnesses,
    )
    brz4 = compare_maps(
        "brz4",
        compose(tensor(mu, id_v), tensor(id_a, sigma), tensor(r, id_v), tensor(id_v, sigma)),
        compose(tensor(mu, id_v), tensor(id_a, sigma), tensor(sigma, id_v)),
        max_witnesses,
    )
    brz5 = compare_maps(
        "brz5",
        compose(tensor(mu, id_v), tensor(id_a, sigma), tensor(r, id_v), tensor(id_v, r)),
        compose(tensor(mu, id_v), tensor(id_a, r), tensor(sigma, id_a)),
        max_witnesses,
    )
    return combine_reports(brz1, brz2, brz3, brz4, brz5)


def check_mirror(data: MirrorData, max_witnesses: int = MAX_WITNESSES) -> AxiomReport:
    """All five mirror axioms for (W, B, P, nu), exhaustively."""
    w, b, p, nu = data.W, data.B, data.P, data.nu
    field = b.field
    mu = b.mul
    id_b, id_w = identity(field, (b.space,)), identity(field, (w,))
    ub = b.unit_map()
    uw = element(field, (w,), marked_vector(field, w))
    w_then_b = tensor(id_w, ub)
    mir_unit = combine_reports(
        compare_maps("(b,1_W)", compose(p, tensor(id_b, uw)), tensor(uw, id_b), max_witnesses),
        compare_maps("(1_B,w)", compose(p, tensor(ub, id_w)), w_then_b, max_witnesses),
        prefix="mir-twist-unit",
    )
    mir_counit = combine_reports(
        compare_maps("(w,1_W)", compose(nu, tensor(id_w, uw)), w_then_b, max_witnesses),
        compare_maps("(1_W,w)", compose(nu, tensor(uw, id_w)), w_then_b, max_witnesses),
        prefix="mir-cocycle-unit",
    )
    mir_twist = compare_maps(
        "mir-twist-mul",
        compose(p, tensor(mu, id_w)),
        compose(tensor(id_w, mu), tensor(p, id_b), tensor(id_b, p)),
        max_witnesses,
    )
    mir1 = compare_maps(
        "mir1",
        compose(tensor(id_w, mu), tensor(nu, id_b), tensor(id_w, p), tensor(nu, id_w)),
        compose(tensor(id_w, mu), tensor(nu, id_b), tensor(id_w, nu)),
        max_witnesses,
    )
    mir2 = compare_maps(
        "mir2",
        compose(tensor(id_w, mu), tensor(nu, id_b), tensor(id_w, p), tensor(p, id_w)),
        compose(tensor(id_w, mu), tensor(p, id_b), tensor(id_b, nu)),
        max_witnesses,
    )
    return combine_reports(mir_unit, mir_counit, mir_twist, mir1, mir2)


def brz_multiplication(data: BrzData) -> LinMap:
    """(mu2 (x) id_V) o (id_A (x) id_A (x) sigma) o (id_A (x) R (x) id_V)."""
    a, v = data.A, data.V
    id_a, id_v = identity(a.field, (a.space,)), identity(a.field, (v,))
    return compose(
        tensor(mu2(a), id_v),
        tensor(id_a, id_a, data.sigma),
        tensor(id_a, data.R, id_v),
    )


def mirror_multiplication(data: MirrorData) -> LinMap:
    """(id_W (x) mu2) o (nu (x) id_B (x) id_B) o (id_W (x) P (x) id_B)."""
    w, b = data.W, data.B
    id_b, id_w = identity(b.field, (b.space,)), identity(b.field, (w,))
    return compose(
        tensor(id_w, mu2(b)),
        tensor(data.nu, id_b, id_b),
        tensor(id_w, data.P, id_b),
    )


def build_brz(data: BrzData, max_witnesses: int = MAX_WITNESSES) -> Algebra:
    """The crossed product on A (x) V with unit 1_A (x) 1_V.

    Associativity of the assembled table is re-verified by `make_algebra`
    rather than trusted from the axioms.
    """
    report = check_brz(data, max_witnesses)
    if not report.passed:
        raise CheckFailedError("crossed-product axioms fail", report)
    space = product_space([data.A.space, data.V])
    mul = with_spaces(brz_multiplication(data), (space, space), (space,))
    unit = vec_tensor(data.A.unit, marked_vector(data.A.field, data.V))
    return make_algebra(space, mul, unit, max_witnesses)


def build_mirror(data: MirrorData, max_witnesses: int = MAX_WITNESSES) -> Algebra:
    """The mirror crossed product on W (x) B with unit 1_W (x) 1_B."""
    report = check_mirror(data, max_witnesses)
    if not report.passed:
        raise CheckFailedError("mirror crossed-product axioms fail", report)
    space = product_space([data.W, data.B.space])
    mul = with_spaces(mirror_multiplication(data), (space, space), (space,))
    unit = vec_tensor(marked_vector(data.B.field, data.W), data.B.unit)
    return make_algebra(space, mul, unit, max_witnesses)


def _require_twisting(a: Algebra, b: Algebra, r: LinMap, max_witnesses: int) -> None:
    report = check_twisting_map(a, b, r, max_witnesses)
    if not report.passed:
        raise CheckFailedError("not a twisting map", report)


def _unit_space(alg: Algebra, name: str) -> Space:
    if alg.space.marked is None:
        raise ShapeError(f"the unit of {name} must be a basis vector to mark 1 on its space")
    return alg.space


def brz_from_twisted(a: Algebra, b: Algebra, r: LinMap,
                     max_witnesses: int = MAX_WITNESSES) -> BrzData:
    """The twisted tensor product A (x)_R B seen as a crossed product.

    V is the underlying space of B and sigma(b, b') = 1_A (x) bb'.
    """
    _require_twisting(a, b, r, max_witnesses)
    v = _unit_space(b, "B")
    sigma = tensor(a.unit_map(), b.mul)
    return BrzData(a, v, r, sigma)


def mirror_from_twisted(a: Algebra, b: Algebra, r: LinMap,
                        max_witnesses: int = MAX_WITNESSES) -> MirrorData:
    """The twisted tensor product A (x)_R B seen as a mirror crossed product.

    W is the underlying space of A and nu(a, a') = aa' (x) 1_B.
    """
    _require_twisting(a, b, r, max_witnesses)
    w = _unit_space(a, "A")
    nu = tensor(a.mul, b.unit_map())
    return MirrorData(w, b, r, nu)
