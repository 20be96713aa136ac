# cuspworks/core/proposition_checks.py
"""
Registry of the checks the verification suites run.

Each check returns a short details string or raises: ``SymbolicMismatch``
(and ``AssertionError``) mean the claim failed, ``ExactFactorizationFailed``
and ``ToleranceAmbiguity`` mean it could not be decided on that input.
"""

from __future__ import annotations

import logging
import random
from collections.abc import Callable
from dataclasses import dataclass
from functools import lru_cache

from . import blowup_geometry as bg
from . import namikawa_verifier as nv
from .cyclo_arith import EPS, EPS2, ONE, ZERO, CycloNumber, random_cyclo_number
from .errors import (
    ExactFactorizationFailed,
    NothingToTransform,
    SymbolicMismatch,
    ToleranceAmbiguity,
    ZeroScale,
)
from .poly_core import Polynomial, VarTable, monomial_str
from .poly_parser import parse_polynomial
from .singularity_lab import (
    CUSP_TEXT,
    DeformationPoint,
    GermPresentation,
    SingularityClass,
    classify_singularity,
    fiber_product_singular_locus,
    hyperplane_normal_form,
    miniversal_family,
    singular_locus,
    three_node_points,
    tjurina_basis,
    versal_family,
)
from .solver_profiles import DEFAULT_PROFILE, SolverProfile

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckContext:
    seed: int = 0
    profile: SolverProfile = DEFAULT_PROFILE

    def rng(self, check_id: str) -> random.Random:
        """Independent stream per check, so results do not depend on execution order."""
        return random.Random(f"{self.seed}:{check_id}")

    def draw(self, rng: random.Random, zero_weight: float = 0.0) -> CycloNumber:
        return random_cyclo_number(rng, self.profile.max_numerator, zero_weight=zero_weight)


@dataclass(frozen=True)
class PropositionCheck:
    id: str
    cite: str
    run: Callable[[CheckContext], str]


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise SymbolicMismatch(message)


def _basis_names(text: str) -> list[str]:
    germ = GermPresentation.parse(text)
    return [monomial_str(germ.f.table, m) for m in tjurina_basis(germ)]


# --- local algebra ---


def check_tjurina_cusp(ctx: CheckContext) -> str:
    names = _basis_names(CUSP_TEXT)
    _expect(sorted(names) == sorted(["1", "y", "w", "y*w"]), f"basis {names}")
    return f"basis {', '.join(names)}; Tjurina number {len(names)}"


def check_tjurina_a2(ctx: CheckContext) -> str:
    names = _basis_names("x^2 - y^3")
    _expect(sorted(names) == ["1", "y"], f"basis {names}")
    return f"basis {', '.join(names)}; Tjurina number {len(names)}"


def check_fiber_product_cusps(ctx: CheckContext) -> str:
    points = fiber_product_singular_locus(parse_polynomial("t^6 - 1"), profile=ctx.profile)
    roots = {p.t0 for p in points}
    expected = {unit * sign for sign in (1, -1) for unit in (ONE, EPS, EPS2)}
    _expect(roots == expected, f"roots {sorted(map(str, roots))}")
    _expect(all(p.vanishing_order == 1 and p.isolated for p in points), "non-simple root")
    return f"{len(points)} isolated singular points over the sixth roots of unity"


def check_miniversal_family(ctx: CheckContext) -> str:
    family = miniversal_family(GermPresentation.parse(CUSP_TEXT))
    _expect(family == versal_family(), f"miniversal family {family}")
    return f"F + lambda + mu*y - nu*w + sigma*y*w = {family}"


# --- hyperplane S ---


def check_induced_image(ctx: CheckContext) -> str:
    locus = nv.induced_image_s()
    return f"image equations {{{', '.join(str(e) for e in locus.equations)}}} = 0"


INDUCED_EXAMPLES = (
    ((1, 0, 0, 0), (1, 0, 0, 0)),
    ((0, 0, 0, 0), (0, 0, 0, 0)),
    ((2, 3, 5, 7), (-3, 3, -7, 0)),
)


def check_induced_examples(ctx: CheckContext) -> str:
    for args, expected in INDUCED_EXAMPLES:
        point = nv.induced_point(*args)
        wanted = tuple(CycloNumber.coerce(e) for e in expected)
        _expect(point.as_tuple() == wanted, f"{args} -> {point}")
    return f"{len(INDUCED_EXAMPLES)} induced points, sigma = 0 on each"


def _hyperplane_class(mu: CycloNumber, nu: CycloNumber) -> SingularityClass:
    if mu.is_zero() and nu.is_zero():
        return SingularityClass.CA2_IIXII
    if mu.is_zero() or nu.is_zero():
        return SingularityClass.CA2_I1XII
    return SingularityClass.NODE


def _hyperplane_draw(ctx: CheckContext, rng: random.Random) -> DeformationPoint:
    """A point with sigma = 0: recentred, mu = nu with lambda = 0, or all free.

    Free mu and nu take any sign and need not be three times a square.
    """
    kind = rng.randrange(3)
    if kind == 0:
        a, b = ctx.draw(rng, zero_weight=0.3), ctx.draw(rng, zero_weight=0.3)
        point, _ = hyperplane_normal_form(a, b)
        return point
    if kind == 1:
        c = ctx.draw(rng, zero_weight=0.2)
        return DeformationPoint(0, c, c, 0)
    lam, mu, nu = (ctx.draw(rng, zero_weight=0.3) for _ in range(3))
    return DeformationPoint(lam, mu, nu, 0)


def check_hyperplane_bound(ctx: CheckContext) -> str:
    rng = ctx.rng("S/hyperplane-bound")
    singular = numeric = 0
    for _ in range(ctx.profile.locus_draws):
        point = _hyperplane_draw(ctx, rng)
        try:
            records = singular_locus(point, profile=ctx.profile)
        except ExactFactorizationFailed:
            records = singular_locus(point, mode="numeric", profile=ctx.profile)
            numeric += 1
        _expect(len(records) <= 2, f"{len(records)} singular points over {point}")
        expected = _hyperplane_class(point.mu, point.nu)
        for record in records:
            _expect(record.klass is expected, f"{record.klass.value} over {point}")
        singular += bool(records)
    return (
        f"{ctx.profile.locus_draws} draws with sigma = 0 ({numeric} numeric), "
        f"{singular} singular, at most 2 points"
    )


def check_normal_form(ctx: CheckContext) -> str:
    table = VarTable(("a", "b"))
    a, b = Polynomial.variables(table)
    _, shifted = hyperplane_normal_form(a, b)
    expected = parse_polynomial("x^2 - y^3 - z^2 + w^3 - 3*a*y^2 + 3*b*w^2", shifted.table)
    _expect(shifted == expected, f"recentred fiber {shifted}")
    return f"recentred fiber {shifted}"


def check_central_fiber(ctx: CheckContext) -> str:
    records = singular_locus(DeformationPoint(), profile=ctx.profile)
    _expect(len(records) == 1, f"{len(records)} points over 0")
    (record,) = records
    _expect(record.klass is SingularityClass.CA2_IIXII, f"class {record.klass.value}")
    cubic = parse_polynomial("-y^3 + w^3", record.corank_data.table)
    _expect(record.corank_data == cubic, f"cubic {record.corank_data}")
    return f"one IIxII point of multiplicity {record.multiplicity}, cubic {cubic}"


# --- three nodes and C ---


def check_remainder(ctx: CheckContext) -> str:
    q, r = nv.remainder_identity()
    return f"R1 = ({q})*R2 + ({r})"


def check_conditions(ctx: CheckContext) -> str:
    conditions = nv.remainder_conditions()
    return "; ".join(f"{c} = 0" for c in conditions)


def check_solutions(ctx: CheckContext) -> str:
    solutions = nv.three_node_solutions(nv.remainder_conditions(), ctx.profile)
    _expect(len(solutions) == 4, f"{len(solutions)} families")
    sigma = Polynomial.variable(nv.SCALE_TABLE, "sigma")
    lambda0 = DeformationPoint(sigma**3 / 27, 0, 0, sigma)
    _expect(solutions[0].point == lambda0, f"Lambda0 = {solutions[0].point}")
    return ", ".join(f"{s.name} = {s.point}" for s in solutions)


def check_cubic_collapse(ctx: CheckContext) -> str:
    nv.check_cubics(nv.expected_solutions())
    return "Lambda1: 3*sigma*(y - sigma/6)^3; Lambda0: three distinct linear factors"


def check_trivial_families(ctx: CheckContext) -> str:
    nv.check_trivial_families(nv.expected_solutions())
    return "(y, w) -> (eps*y, eps^2*w) and (eps^2*y, eps*w) carry Lambda2, Lambda3 to Lambda1"


def check_curve(ctx: CheckContext) -> str:
    curve = nv.curve_c()
    _expect(curve.meets_hyperplane_s_only_at_origin(), "C meets S away from 0")
    return "C = {" + ", ".join(f"{e} = 0" for e in curve.equations) + "} meets S only at 0"


def check_transversality(ctx: CheckContext) -> str:
    report = nv.curve_c_transversality()
    _expect(report.tangent == (ZERO, ZERO, ZERO, ONE), f"tangent {report.tangent}")
    _expect(report.s_value == ONE and report.transversal, f"S-equation value {report.s_value}")
    return "tangent (0, 0, 0, 1); the equation of S takes the value 1 on it"


def check_three_nodes(ctx: CheckContext) -> str:
    lambda0 = nv.expected_solutions()[0].point
    records = singular_locus(lambda0.substitute({"sigma": 3}), profile=ctx.profile)
    expected = sorted(three_node_points(CycloNumber(3)), key=lambda p: [c.sort_key() for c in p])
    _expect([r.coords for r in records] == expected, f"points {[r.coords for r in records]}")
    nodes = all(r.klass is SingularityClass.NODE and r.hessian_rank == 4 for r in records)
    _expect(nodes, "not nodes")

    symbolic = singular_locus(lambda0, profile=ctx.profile)
    sigma = Polynomial.variable(nv.SCALE_TABLE, "sigma")
    closed = {tuple(nv._lift(c, nv.SCALE_TABLE) for c in p) for p in three_node_points(sigma)}
    found = {tuple(c.retable(nv.SCALE_TABLE) for c in r.coords) for r in symbolic}
    _expect(found == closed, "symbolic nodes differ from the closed forms")
    return "3 nodes over (1, 0, 0, 3) and over Lambda0 for symbolic sigma"


def _locus_or_numeric(point: DeformationPoint, ctx: CheckContext):
    try:
        return singular_locus(point, profile=ctx.profile)
    except ExactFactorizationFailed as exc:
        logger.debug("Numeric fallback over %s: %s", point, exc)
        return singular_locus(point, mode="numeric", profile=ctx.profile)


def _random_family_point(rng: random.Random, ctx: CheckContext) -> DeformationPoint:
    kind = rng.randrange(3)
    if kind == 0:
        return DeformationPoint(*(ctx.draw(rng, zero_weight=0.2) for _ in range(4)))
    sigma = ctx.draw(rng)
    while sigma.is_zero():
        sigma = ctx.draw(rng)
    family = nv.expected_solutions()[rng.randrange(4) if kind == 2 else 0]
    return family.point.substitute({"sigma": sigma})


def check_count_bound(ctx: CheckContext) -> str:
    rng = ctx.rng("C/count-bound")
    largest = 0
    for _ in range(ctx.profile.locus_draws):
        point = _random_family_point(rng, ctx)
        try:
            records = _locus_or_numeric(point, ctx)
        except ToleranceAmbiguity:
            continue
        _expect(len(records) <= 3, f"{len(records)} singular points over {point}")
        largest = max(largest, len(records))
    return f"{ctx.profile.locus_draws} draws, at most {largest} singular points"


def _agrees(exact, numeric, tolerance: float) -> bool:
    if len(exact) != len(numeric):
        return False
    for record in exact:
        target = [c.to_complex() for c in record.coords]
        if not any(
            all(abs(t - c) <= tolerance for t, c in zip(target, other.coords, strict=True))
            for other in numeric
        ):
            return False
    return True


def check_numeric_agreement(ctx: CheckContext) -> str:
    rng = ctx.rng("C/numeric-agreement")
    compared = 0
    for i in range(ctx.profile.locus_draws):
        sigma = ctx.draw(rng)
        if i % 2 and not sigma.is_zero():
            point = nv.expected_solutions()[0].point.substitute({"sigma": sigma})
        else:
            point, _ = hyperplane_normal_form(ctx.draw(rng), ctx.draw(rng))
        try:
            exact = singular_locus(point, profile=ctx.profile)
            numeric = singular_locus(point, mode="numeric", profile=ctx.profile)
        except (ExactFactorizationFailed, ToleranceAmbiguity):
            continue
        tolerance = ctx.profile.agreement_tolerance
        _expect(_agrees(exact, numeric, tolerance), f"exact and numeric differ over {point}")
        compared += 1
    return f"{compared} exactly solvable draws agree within {ctx.profile.agreement_tolerance:g}"


def check_lambda1_point(ctx: CheckContext) -> str:
    point = DeformationPoint.from_tuple(-10, 9, -9, 6)
    _expect(point == nv.expected_solutions()[1].point.substitute({"sigma": 6}), f"{point}")
    records = singular_locus(point, profile=ctx.profile)
    _expect(len(records) == 1, f"{len(records)} points")
    (record,) = records
    _expect(record.coords == (ZERO, ONE, ZERO, -ONE), f"point {record.coords}")
    _expect(record.klass is SingularityClass.DEGENERATE_OTHER, f"class {record.klass.value}")
    _expect(record.multiplicity == 3, f"multiplicity {record.multiplicity}")
    return "one degenerate point (0, 1, 0, -1) of multiplicity 3 over Lambda1(6)"


# --- three-line family ---


def _random_lines(rng: random.Random, ctx: CheckContext, on_plane: bool) -> nv.FaParameters:
    beta, gamma = ctx.draw(rng, zero_weight=0.1), ctx.draw(rng, zero_weight=0.1)
    alpha = -(beta * EPS) - gamma * EPS2 if on_plane else ctx.draw(rng, zero_weight=0.1)
    return nv.FaParameters(alpha, beta, gamma, ctx.draw(rng), ctx.draw(rng))


def check_expansion(ctx: CheckContext) -> str:
    _expect(nv.fa_family(nv.FaParameters.symbolic()) == nv.displayed_fa(), "F_a expansion")
    central = nv.fa_family(nv.FaParameters(0, 0, 0))
    _expect(central == parse_polynomial("X^2 - U^2 - Y^3 + V^3", central.table), f"{central}")
    sample = nv.FaParameters(1, EPS2, EPS)
    _expect(sample.s == CycloNumber(3) and not sample.on_plane, f"s = {sample.s}")
    return "translated product of lines equals the expanded F_a; s(1, eps^2, eps) = 3"


def check_closed_form_points(ctx: CheckContext) -> str:
    params = nv.FaParameters.symbolic()
    records = nv.fa_singular_points(params)
    closed = nv.fa_closed_points(params)
    _expect([r.coords for r in records] == closed, "closed forms")
    _expect(all(r.klass is SingularityClass.NODE for r in records), "generic points are not nodes")
    return "p1, p2, p3 are critical points of F_a and generically nodes"


def check_distinctness(ctx: CheckContext) -> str:
    _expect(nv.coincidence_on_plane(), "closed forms do not meet exactly on the plane s = 0")
    rng = ctx.rng("fa/distinctness")
    on = 0
    for i in range(ctx.profile.fa_draws):
        params = _random_lines(rng, ctx, on_plane=i % 4 == 0)
        records = nv.fa_singular_points(params)
        if params.on_plane:
            on += 1
            _expect(len(records) == 1, f"{len(records)} points on the plane")
            _expect(records[0].klass is SingularityClass.CA2_IIXII, "coincident point")
        else:
            _expect(len(records) == 3, f"{len(records)} points off the plane")
            _expect(all(r.klass is SingularityClass.NODE for r in records), "points off the plane")
    return f"{ctx.profile.fa_draws} draws ({on} on the plane): distinct iff s != 0"


def check_coincident_cusp(ctx: CheckContext) -> str:
    for params in (nv.FaParameters(-EPS, 1, 0), nv.FaParameters(0, 0, 0)):
        (record,) = nv.fa_singular_points(params)
        _expect(record.klass is SingularityClass.CA2_IIXII, f"class {record.klass.value}")
        cubic = parse_polynomial("-Y^3 + V^3", record.corank_data.table)
        _expect(record.corank_data == cubic, f"cubic {record.corank_data}")
    return "s = 0 gives one point of type IIxII with cubic -Y^3 + V^3"


def check_map_g(ctx: CheckContext) -> str:
    symbolic = nv.map_g(nv.FaParameters.symbolic())
    _expect(nv.map_g(nv.FaParameters(-EPS, 1, 0)) == DeformationPoint(), "g on the plane")
    try:
        nv.map_g(nv.FaParameters(1, 0, 0, k=0))
    except ZeroScale:
        pass
    else:
        raise SymbolicMismatch("k = 0 was accepted")
    rng = ctx.rng("fa/map-g")
    for _ in range(ctx.profile.fa_draws):
        nv.map_g(_random_lines(rng, ctx, on_plane=False))
    return f"g(a) = {symbolic}; lies on C"


def check_image_meets_s(ctx: CheckContext) -> str:
    _expect(nv.image_meets_s(), "im(g) meets S away from 0")
    return "im(g) lies on C and C meets {sigma = 0} only at 0"


def check_pullback(ctx: CheckContext) -> str:
    _expect(nv.pullback_identity(nv.FaParameters.symbolic()), "symbolic pullback")
    rng = ctx.rng("fa/pullback")
    for _ in range(ctx.profile.fa_draws):
        params = _random_lines(rng, ctx, on_plane=rng.random() < 0.2)
        params = nv.FaParameters(*params.lines, params.xi, params.upsilon, ctx.draw(rng) or ONE)
        _expect(nv.pullback_identity(params), f"pullback at {params}")
    return "F_{p(a)} equals the versal fiber over g(a) for symbolic a, k"


def check_cross_count(ctx: CheckContext) -> str:
    rng = ctx.rng("fa/cross-count")
    for _ in range(ctx.profile.fa_draws):
        params = _random_lines(rng, ctx, on_plane=False)
        if params.on_plane:
            continue
        records = singular_locus(nv.map_g(params), profile=ctx.profile)
        _expect(len(records) == 3, f"{len(records)} points over g(a)")
        _expect(len(nv.fa_singular_points(params)) == 3, "F_a has fewer nodes")
    return f"{ctx.profile.fa_draws} draws: three nodes on F_a and over g(a)"


# --- resolution of the cusp ---


@lru_cache(maxsize=1)
def _resolution() -> tuple[bg.BlowupResult, bg.BlowupResult]:
    return bg.resolve_cusp()


def _displayed(texts: tuple[str, ...], system: bg.ChartVariety) -> tuple[Polynomial, ...]:
    return tuple(parse_polynomial(t, system.table) for t in texts)


FIRST_GLOBAL = ("mu1*x - mu0*u", "mu0*y - mu1*v*((1+eps)*v - eps*u)")
SECOND_GLOBAL = ("mu1*x - mu0*u", "nu1*y - nu0*v", "mu0*nu0 - mu1*nu1*((1+eps)*v - eps*u)")


def check_first_system(ctx: CheckContext) -> str:
    system = _resolution()[0].global_system
    _expect(system.polynomials == _displayed(FIRST_GLOBAL, system), f"{system}")
    return str(system)


def check_second_system(ctx: CheckContext) -> str:
    system = _resolution()[1].global_system
    _expect(system.polynomials == _displayed(SECOND_GLOBAL, system), f"{system}")
    return str(system)


def check_intermediate_node(ctx: CheckContext) -> str:
    blown_up = _resolution()[0].charts[1]
    chart = blown_up.variety
    _expect(not bg.is_smooth_at(chart, bg.origin(chart)), "first chart smooth at the origin")
    generic = bg.origin(chart, x=1, y=1, u=1, v=1, mu0=1)
    _expect(bg.is_smooth_at(chart, generic), "first chart singular off the exceptional locus")

    # the graph relation solves for the substituted coordinate
    (equation,) = chart.equations
    _expect(equation.derivative(blown_up.substituted).is_zero(), f"{equation}")
    germ = tuple(n for n in chart.vars if n != blown_up.substituted)
    found = classify_singularity(equation, [0] * len(germ), germ)
    _expect(
        found.klass is SingularityClass.NODE,
        f"{found.klass.value}, Hessian rank {found.hessian_rank}",
    )
    return (
        f"{chart.label} has a node at the origin (Hessian rank {found.hessian_rank} "
        f"in {', '.join(germ)}), smooth at (1, 1, 1, 1, 1)"
    )


def check_final_smooth(ctx: CheckContext) -> str:
    second = _resolution()[1]
    chart = second.charts[1].variety
    fiber = bg.exceptional_fiber(second)
    points = bg.exceptional_samples(chart, fiber, ctx.rng("blowup/final-smooth"))
    for point in points:
        _expect(bg.is_smooth_at(chart, point), f"{chart.label} singular at {point}")
    return f"smooth at {len(points)} exact points of the exceptional fiber"


def check_exceptional_fiber(ctx: CheckContext) -> str:
    fiber = bg.exceptional_fiber(_resolution()[1])
    _expect(str(fiber.equation) == "mu0*nu0", f"fiber {fiber.equation}")
    _expect(fiber.intersections == (((0, 1), (0, 1)),), f"{fiber.intersections}")
    components = ", ".join(fiber.components)
    return f"{{{fiber.equation} = 0}}: components {components} meet at ((0:1),(0:1))"


def check_flop_centers(ctx: CheckContext) -> str:
    table = bg.flop_center_table()
    found = [(offset, center.names) for offset, center in table]
    _expect(found == [(0, ("x", "u")), (2, ("x", "v")), (3, ("y", "u"))], f"{found}")
    return ", ".join(f"+{offset}: {center}" for offset, center in table) + "; one P^1 over 0 each"


def check_stability(ctx: CheckContext) -> str:
    first = _resolution()[0]
    for chart in first.charts:
        variety = chart.variety
        center = bg.BlowupCenter.of(variety.table, *first.center.names, "lam")
        try:
            bg.blowup_strict_transform(variety, center)
        except NothingToTransform:
            continue
        raise SymbolicMismatch(f"{variety.label} still meets the centre")
    return "a second blow-up along {x, u} has nothing to transform"


def check_chart_inverse(ctx: CheckContext) -> str:
    first, second = _resolution()
    _expect(bg.chart_restores_original(bg.cusp_system(), first), "first blow-up")
    _expect(bg.chart_restores_original(first.charts[1].variety, second), "second blow-up")
    return "every chart recovers the original equation times a power of the exceptional coordinate"


# --- deformation diagram ---


@lru_cache(maxsize=4)
def _friedman(profile: SolverProfile) -> nv.FriedmanReport:
    return nv.friedman_report(profile)


def check_dimdef(ctx: CheckContext) -> str:
    report = _friedman(ctx.profile)
    _expect(report.dimdef_x == 19 and report.t1_x == 19, f"dimdef(X) = {report.dimdef_x}")
    _expect(report.h12_tilde == report.h11_tilde == 19, "smoothing Hodge numbers")
    return f"dimdef(X) = 2*8 + 7 - 4 = {report.dimdef_x}"


def check_hodge(ctx: CheckContext) -> str:
    report = _friedman(ctx.profile)
    _expect((report.h12_hat, report.h11_hat) == (3, 21), f"{report.h12_hat}, {report.h11_hat}")
    return f"h12 = {report.h12_hat}, h11 = {report.h11_hat} on the small resolution"


def check_local_t1(ctx: CheckContext) -> str:
    r = _friedman(ctx.profile)
    found = (r.cusps, r.tjurina, r.t1_local_total, r.h0_r1, r.exceptional_curves, r.h2_theta)
    _expect(found == (6, 4, 24, 6, 12, 27), f"{found}")
    return (
        f"{r.cusps} cusps of Tjurina number {r.tjurina}: local T1 = {r.t1_local_total}; "
        f"h0(R1) = {r.h0_r1}; {r.exceptional_curves} exceptional curves"
    )


def check_rows(ctx: CheckContext) -> str:
    report = _friedman(ctx.profile)
    _expect(all(total == 0 for _, total in report.row_exactness), f"{report.row_exactness}")
    return f"top {list(report.top_row)}, bottom {list(report.bottom_row)}: alternating sums 0"


CHECKS: dict[str, PropositionCheck] = {
    c.id: c
    for c in (
        PropositionCheck(
            "local/tjurina-cusp",
            "Tjurina algebra of the threefold cusp is spanned by 1, y, w, yw",
            check_tjurina_cusp,
        ),
        PropositionCheck(
            "local/tjurina-a2",
            "Tjurina algebra of the plane cusp is spanned by 1, y",
            check_tjurina_a2,
        ),
        PropositionCheck(
            "local/fiber-product-cusps",
            "fiber product over B = t^6 - 1 has six isolated singular points",
            check_fiber_product_cusps,
        ),
        PropositionCheck(
            "local/miniversal-family",
            "miniversal family of the cusp is F + lambda + mu*y - nu*w + sigma*y*w",
            check_miniversal_family,
        ),
        PropositionCheck(
            "S/induced-image",
            "deformations induced by the two cuspidal curves fill the hyperplane sigma = 0",
            check_induced_image,
        ),
        PropositionCheck(
            "S/induced-examples",
            "induced point of (lambda1, mu; lambda2, nu) is (lambda1 - lambda2, mu, -nu, 0)",
            check_induced_examples,
        ),
        PropositionCheck(
            "S/hyperplane-bound",
            "fibers over sigma = 0 have at most two singular points, typed by mu and nu",
            check_hyperplane_bound,
        ),
        PropositionCheck(
            "S/normal-form",
            "fiber over sigma = 0 recentred at its singular point",
            check_normal_form,
        ),
        PropositionCheck(
            "S/central-fiber",
            "central fiber has one singular point, a threefold cusp",
            check_central_fiber,
        ),
        PropositionCheck(
            "C/remainder",
            "division of the eliminated quartic by the eliminated cubic",
            check_remainder,
        ),
        PropositionCheck(
            "C/conditions",
            "vanishing remainder gives three conditions on (lambda, mu, nu, sigma)",
            check_conditions,
        ),
        PropositionCheck(
            "C/solutions",
            "the conditions have exactly four solution families",
            check_solutions,
        ),
        PropositionCheck(
            "C/cubic-collapse",
            "the cubic is a perfect cube on Lambda1 and splits into three factors on Lambda0",
            check_cubic_collapse,
        ),
        PropositionCheck(
            "C/trivial-families",
            "Lambda2 and Lambda3 are rescalings of Lambda1",
            check_trivial_families,
        ),
        PropositionCheck(
            "C/curve",
            "three-node fibers lie over C = {sigma^3 = 27*lambda, mu = nu = 0}",
            check_curve,
        ),
        PropositionCheck(
            "C/transversality",
            "C meets the hyperplane S transversally at the origin",
            check_transversality,
        ),
        PropositionCheck(
            "C/three-nodes",
            "fibers over C away from 0 have exactly three nodes",
            check_three_nodes,
        ),
        PropositionCheck(
            "C/count-bound",
            "no fiber of the versal family has more than three singular points",
            check_count_bound,
        ),
        PropositionCheck(
            "C/numeric-agreement",
            "numeric singular points agree with the exact ones",
            check_numeric_agreement,
        ),
        PropositionCheck(
            "C/lambda1-point",
            "fiber over Lambda1 has a single non-node singular point",
            check_lambda1_point,
        ),
        PropositionCheck(
            "fa/expansion",
            "translated product of three lines expands to F_a",
            check_expansion,
        ),
        PropositionCheck(
            "fa/closed-form-points",
            "singular points of F_a are the pairwise intersections of the lines",
            check_closed_form_points,
        ),
        PropositionCheck(
            "fa/distinctness",
            "the three singular points of F_a are distinct iff a is off the plane s = 0",
            check_distinctness,
        ),
        PropositionCheck(
            "fa/coincident-cusp",
            "on the plane s = 0 the three points merge into a threefold cusp",
            check_coincident_cusp,
        ),
        PropositionCheck(
            "fa/map-g",
            "g(a) = (-k^3 s^3, 0, 0, -3ks) lies on C",
            check_map_g,
        ),
        PropositionCheck(
            "fa/image-meets-S",
            "images of g and of the induced deformations meet only at 0",
            check_image_meets_s,
        ),
        PropositionCheck(
            "fa/pullback",
            "F_a pulled back along p is the versal family over g(a)",
            check_pullback,
        ),
        PropositionCheck(
            "fa/cross-count",
            "fibers over g(a) and F_a have the same three nodes",
            check_cross_count,
        ),
        PropositionCheck(
            "blowup/first-system",
            "blow-up of the plane x = u = 0 in the cusp",
            check_first_system,
        ),
        PropositionCheck(
            "blowup/second-system",
            "blow-up of the strict transform along y = v = 0",
            check_second_system,
        ),
        PropositionCheck(
            "blowup/intermediate-node",
            "the first blow-up leaves a node",
            check_intermediate_node,
        ),
        PropositionCheck(
            "blowup/final-smooth",
            "the double blow-up is smooth along the exceptional fiber",
            check_final_smooth,
        ),
        PropositionCheck(
            "blowup/exceptional-fiber",
            "exceptional fiber is two lines mu0*nu0 = 0 meeting in one point",
            check_exceptional_fiber,
        ),
        PropositionCheck(
            "blowup/flop-centers",
            "planes x = v = 0 and y = u = 0 give the flopped small resolutions",
            check_flop_centers,
        ),
        PropositionCheck(
            "blowup/stability",
            "the strict transform no longer meets the blown-up centre",
            check_stability,
        ),
        PropositionCheck(
            "blowup/chart-inverse",
            "blow-up charts are isomorphic to the original away from the centre",
            check_chart_inverse,
        ),
        PropositionCheck(
            "friedman/dimdef",
            "Kuranishi number of the fiber product is 2*8 + 7 - 4 = 19",
            check_dimdef,
        ),
        PropositionCheck(
            "friedman/hodge",
            "the small resolution has h12 = 19 - 16 = 3 and h11 = 19 + 2 = 21",
            check_hodge,
        ),
        PropositionCheck(
            "friedman/local-t1",
            "six cusps of Tjurina number 4 give a local T1 of dimension 24",
            check_local_t1,
        ),
        PropositionCheck(
            "friedman/rows",
            "both rows of the deformation diagram are exact",
            check_rows,
        ),
    )
}


def get_check(check_id: str) -> PropositionCheck:
    return CHECKS[check_id]
