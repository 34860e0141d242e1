"""Iterating a mirror crossed product with a crossed product over a shared
middle algebra D, via a linking map Q: V (x) W -> W (x) D (x) V.

`check_q` verifies the full hypothesis set: both crossed-product axiom
families, the two unit conditions on Q, and the three compatibility
conditions, all as exact matrix equalities.  `build_iterated` constructs
both bracketed products and insists their multiplication tables agree
entrywise under the flat-index identification; `extract_q` recovers Q
from an algebra on W (x) D (x) V that embeds both factors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra, check_algebra, mu2
from .crossed import (
    BrzData,
    MirrorData,
    build_brz,
    build_mirror,
    check_brz,
    check_mirror,
    check_twisting_map,
)
from .linmap import (
    LinMap,
    ShapeError,
    Space,
    apply,
    compose,
    element,
    identity,
    marked_vector,
    product_space,
    tensor,
    with_spaces,
)
from .report import (
    AxiomReport,
    CheckFailedError,
    InternalCheckError,
    combine_reports,
    compare_maps,
    compare_vectors,
    MAX_WITNESSES,
)


@dataclass(frozen=True)
class QLink:
    """Two crossed products sharing the middle algebra D, plus the map Q."""

    mirror: MirrorData
    brz: BrzData
    Q: LinMap

    def __post_init__(self) -> None:
        if self.mirror.B != self.brz.A:
            raise ShapeError("the middle algebra must be shared between both products")
        w, d, v = self.mirror.W, self.middle.space, self.brz.V
        if self.Q.domain != (v, w) or self.Q.codomain != (w, d, v):
            raise ShapeError("Q must map V (x) W to W (x) D (x) V")
        if self.Q.field != self.middle.field:
            raise ShapeError("Q must live over the shared field")

    @property
    def middle(self) -> Algebra:
        return self.brz.A


@dataclass(frozen=True)
class BarMaps:
    """The four lifted maps driving the two outer crossed products."""

    sigma_bar: LinMap  # V (x) V -> (W(x)D) (x) V
    r_bar: LinMap      # V (x) (W(x)D) -> (W(x)D) (x) V
    nu_bar: LinMap     # W (x) W -> W (x) (D(x)V)
    p_bar: LinMap      # (D(x)V) (x) W -> W (x) (D(x)V)


def check_q(link: QLink, max_witnesses: int = MAX_WITNESSES) -> AxiomReport:
    """Everything the iterated construction assumes, with witnesses."""
    mirror, brz, q = link.mirror, link.brz, link.Q
    field = q.field
    w, v = mirror.W, brz.V
    d_alg = link.middle
    d = d_alg.space
    mu_d = d_alg.mul
    r, sigma, p, nu = brz.R, brz.sigma, mirror.P, mirror.nu
    id_w, id_d, id_v = (identity(field, (s,)) for s in (w, d, v))
    uw = element(field, (w,), marked_vector(field, w))
    uv = element(field, (v,), marked_vector(field, v))
    ud = d_alg.unit_map()
    finish = tensor(id_w, mu_d, id_v)  # W (x) D (x) D (x) V -> W (x) D (x) V

    unit_items = combine_reports(
        # Q(1_V (x) w) = w (x) 1_D (x) 1_V
        compare_maps("q-unit-left", compose(q, tensor(uv, id_w)),
                     tensor(id_w, ud, uv), max_witnesses),
        # Q(v (x) 1_W) = 1_W (x) 1_D (x) v
        compare_maps("q-unit-right", compose(q, tensor(id_v, uw)),
                     tensor(uw, ud, id_v), max_witnesses),
    )
    braid = compare_maps(
        "q-braid",
        compose(finish, tensor(id_w, id_d, r), tensor(q, id_d), tensor(id_v, p)),
        compose(finish, tensor(p, id_d, id_v), tensor(id_d, q), tensor(r, id_w)),
        max_witnesses,
    )
    tw1 = compare_maps(
        "q-compat-nu",
        compose(finish, tensor(id_w, id_d, r), tensor(q, id_d), tensor(id_v, nu)),
        compose(finish, tensor(nu, mu_d, id_v), tensor(id_w, p, id_d, id_v),
                tensor(id_w, id_d, q), tensor(q, id_w)),
        max_witnesses,
    )
    tw2 = compare_maps(
        "q-compat-sigma",
        compose(finish, tensor(p, id_d, id_v), tensor(id_d, q), tensor(sigma, id_w)),
        compose(finish, tensor(id_w, mu_d, sigma), tensor(id_w, id_d, r, id_v),
                tensor(q, id_d, id_v), tensor(id_v, q)),
        max_witnesses,
    )
    return combine_reports(
        combine_reports(check_mirror(mirror, max_witnesses), prefix="mirror:"),
        combine_reports(check_brz(brz, max_witnesses), prefix="brz:"),
        unit_items,
        braid,
        tw1,
        tw2,
    )


def _bar_maps(link: QLink) -> BarMaps:
    mirror, brz, q = link.mirror, link.brz, link.Q
    field = q.field
    w, v = mirror.W, brz.V
    d_alg = link.middle
    d = d_alg.space
    id_w, id_d, id_v = (identity(field, (s,)) for s in (w, d, v))
    uw = element(field, (w,), marked_vector(field, w))
    uv = element(field, (v,), marked_vector(field, v))
    wd = product_space([w, d])
    dv = product_space([d, v])

    sigma_bar = with_spaces(tensor(uw, brz.sigma), (v, v), (wd, v))
    r_bar = with_spaces(
        compose(tensor(id_w, d_alg.mul, id_v), tensor(id_w, id_d, brz.R), tensor(q, id_d)),
        (v, wd), (wd, v),
    )
    nu_bar = with_spaces(tensor(mirror.nu, uv), (w, w), (w, dv))
    p_bar = with_spaces(
        compose(tensor(id_w, d_alg.mul, id_v), tensor(mirror.P, id_d, id_v), tensor(id_d, q)),
        (dv, w), (w, dv),
    )
    return BarMaps(sigma_bar, r_bar, nu_bar, p_bar)


def build_bar_maps(link: QLink, max_witnesses: int = MAX_WITNESSES) -> BarMaps:
    """The four lifted maps; requires the full hypothesis set to hold."""
    report = check_q(link, max_witnesses)
    if not report.passed:
        raise CheckFailedError("linking-map conditions fail", report)
    return _bar_maps(link)


def build_iterated(link: QLink, max_witnesses: int = MAX_WITNESSES) -> Algebra:
    """The iterated crossed product on W (x) D (x) V.

    Both bracketings are constructed through the crossed-product builders
    (each re-verified for associativity) and compared entrywise; any
    disagreement is a bug, not a data error, and is raised loudly.
    """
    bars = build_bar_maps(link, max_witnesses)
    wd_alg = build_mirror(link.mirror, max_witnesses)
    dv_alg = build_brz(link.brz, max_witnesses)
    left = build_brz(BrzData(wd_alg, link.brz.V, bars.r_bar, bars.sigma_bar), max_witnesses)
    right = build_mirror(MirrorData(link.mirror.W, dv_alg, bars.p_bar, bars.nu_bar),
                         max_witnesses)
    if left != right:
        raise InternalCheckError(
            "the two bracketings of the iterated product disagree; this is a bug"
        )
    return left


def extract_q(m: Algebra, mirror: MirrorData, brz: BrzData,
              max_witnesses: int = MAX_WITNESSES) -> QLink:
    """Recover the linking map from an algebra M on W (x) D (x) V.

    Requires that w (x) d -> w (x) d (x) 1_V and d (x) v -> 1_W (x) d (x) v
    are algebra maps into M and that every basis element factors as
    (w (x) 1 (x) 1) (1 (x) d (x) 1) (1 (x) 1 (x) v).  The linking map is
    then Q(v (x) w) = (1 (x) 1 (x) v) (w (x) 1 (x) 1), and the iterated
    product it affords reproduces M.
    """
    if mirror.B != brz.A:
        raise ShapeError("the middle algebra must be shared between both products")
    field = m.field
    w, v = mirror.W, brz.V
    d_alg = brz.A
    d = d_alg.space
    expected = product_space([w, d, v])
    if m.space.labels != expected.labels:
        raise ShapeError("M must live on the product space W (x) D (x) V")

    m_report = check_algebra(m.space, m.mul, m.unit, max_witnesses)
    if not m_report.passed:
        raise CheckFailedError("M is not a valid algebra", m_report)
    wd_alg = build_mirror(mirror, max_witnesses)
    dv_alg = build_brz(brz, max_witnesses)

    id_w, id_d, id_v = (identity(field, (s,)) for s in (w, d, v))
    uw = element(field, (w,), marked_vector(field, w))
    uv = element(field, (v,), marked_vector(field, v))
    ud = d_alg.unit_map()
    into_m = lambda f, dom: with_spaces(f, dom, (m.space,))
    emb_wd = into_m(tensor(id_w, id_d, uv), (w, d))
    emb_dv = into_m(tensor(uw, id_d, id_v), (d, v))
    emb_w = into_m(tensor(id_w, ud, uv), (w,))
    emb_d = into_m(tensor(uw, id_d, uv), (d,))
    emb_v = into_m(tensor(uw, ud, id_v), (v,))
    labels = m.space.labels

    def algebra_map_items(name: str, emb: LinMap, sub: Algebra, dom: tuple[Space, Space]):
        mult = compare_maps(
            f"embed-{name}-multiplicative",
            compose(m.mul, tensor(emb, emb)),
            compose(emb, with_spaces(sub.mul, dom + dom, dom)),
            max_witnesses,
        )
        unit = compare_vectors(f"embed-{name}-unit", field, labels,
                               apply(emb, sub.unit), m.unit)
        return mult, unit

    embed_report = combine_reports(
        *algebra_map_items("mirror", emb_wd, wd_alg, (w, d)),
        *algebra_map_items("brz", emb_dv, dv_alg, (d, v)),
    )
    if not embed_report.passed:
        raise CheckFailedError("factors do not embed as algebra maps", embed_report)

    canon = compare_maps(
        "canon",
        compose(mu2(m), tensor(emb_w, emb_d, emb_v)),
        with_spaces(identity(field, (w, d, v)), (w, d, v), (m.space,)),
        max_witnesses,
    )
    if not canon.passed:
        raise CheckFailedError("basis elements do not factor canonically",
                               combine_reports(canon))

    q = with_spaces(compose(m.mul, tensor(emb_v, emb_w)), (v, w), (w, d, v))

    consistency = combine_reports(
        # d . w = w_P . d_P
        compare_maps("aju-dw", compose(m.mul, tensor(emb_d, emb_w)),
                     compose(m.mul, tensor(emb_w, emb_d), mirror.P), max_witnesses),
        # v . d = d_R . v_R
        compare_maps("aju-vd", compose(m.mul, tensor(emb_v, emb_d)),
                     compose(m.mul, tensor(emb_d, emb_v), brz.R), max_witnesses),
        # w . w' = nu1 . nu2
        compare_maps("aju-ww", compose(m.mul, tensor(emb_w, emb_w)),
                     compose(m.mul, tensor(emb_w, emb_d), mirror.nu), max_witnesses),
        # v . v' = sigma1 . sigma2
        compare_maps("aju-vv", compose(m.mul, tensor(emb_v, emb_v)),
                     compose(m.mul, tensor(emb_d, emb_v), brz.sigma), max_witnesses),
    )
    if not consistency.passed:
        raise InternalCheckError(
            f"embedding relations fail after all hypotheses passed: "
            f"{list(consistency.failing())}; this is a bug"
        )

    link = QLink(mirror, brz, q)
    final = check_q(link, max_witnesses)
    if not final.passed:
        raise InternalCheckError(
            f"extracted Q violates the linking conditions: {list(final.failing())};"
            f" this is a bug"
        )
    return link


def hexagon_check(a: Algebra, b: Algebra, c: Algebra,
                  r1: LinMap, r2: LinMap, r3: LinMap,
                  max_witnesses: int = MAX_WITNESSES) -> AxiomReport:
    """Braid compatibility of three pairwise twisting maps.

    R1: B(x)A -> A(x)B, R2: C(x)B -> B(x)C, R3: C(x)A -> A(x)C.  The report
    includes the twisting-map conditions for each map (they are hypotheses
    of the braid statement) and the braid equality itself.
    """
    sa, sb, sc = a.space, b.space, c.space
    field = r1.field
    id_a, id_b, id_c = (identity(field, (s,)) for s in (sa, sb, sc))
    braid = compare_maps(
        "braid",
        compose(tensor(id_a, r2), tensor(r3, id_b), tensor(id_c, r1)),
        compose(tensor(r1, id_c), tensor(id_b, r3), tensor(r2, id_a)),
        max_witnesses,
    )
    return combine_reports(
        combine_reports(check_twisting_map(a, b, r1, max_witnesses), prefix="r1:"),
        combine_reports(check_twisting_map(b, c, r2, max_witnesses), prefix="r2:"),
        combine_reports(check_twisting_map(a, c, r3, max_witnesses), prefix="r3:"),
        braid,
    )


def q_from_r3(a: Algebra, b: Algebra, c: Algebra, r3: LinMap,
              max_witnesses: int = MAX_WITNESSES) -> LinMap:
    """The linking map of a twisted triple: Q(c (x) a) = a_R3 (x) 1_B (x) c_R3."""
    report = check_twisting_map(a, c, r3, max_witnesses)
    if not report.passed:
        raise CheckFailedError("R3 is not a twisting map", report)
    field = r3.field
    id_a = identity(field, (a.space,))
    id_c = identity(field, (c.space,))
    return compose(tensor(id_a, b.unit_map(), id_c), r3)
