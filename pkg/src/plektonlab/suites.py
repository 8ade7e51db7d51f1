"""Property sweeps behind `plektonlab verify`.

Each suite draws its configurations from a seeded generator, runs the
module invariants at the package tolerances and reports one line per check.
Sweep sizes scale with the PLEKTONLAB_SWEEP environment variable.
"""

from __future__ import annotations

import itertools
import math
import os
from fractions import Fraction

import numpy as np

from . import cones, fields, minkowski, wigner
from .cones import (
    ConePath,
    ReferenceFrame,
    SeparationError,
    WindingError,
    cone_path,
    reflect_path,
    relative_winding,
    relative_winding_scan,
    standard_wedge_path,
)
from .minkowski import MVec3, cover_boost1, cover_compose, cover_rotation, cover_translation
from .report import ERROR, FAIL, Report
from .sectors import (
    AnyonModel,
    CyclotomicPhase,
    monodromy_prefactor,
    r_phase,
    sector_phase,
    twist_phase,
    validate_model,
)

SUITES = ("geometry", "braid", "twist", "cpt", "tomita", "wigner", "all")


def sweep_scale() -> float:
    try:
        return max(0.05, float(os.environ.get("PLEKTONLAB_SWEEP", "1.0")))
    except ValueError:
        return 1.0


def _n(base: int) -> int:
    return max(3, int(round(base * sweep_scale())))


# ---------------------------------------------------------------------------
# random generators
# ---------------------------------------------------------------------------

def random_separated_pair(rng: np.random.Generator, max_tries: int = 64):
    """A causally separated (C2, C1) pair with generic arcs and apexes."""
    for _ in range(max_tries):
        d1 = rng.uniform(0.08, 0.45)
        d2 = rng.uniform(0.08, 0.45)
        margin = 0.15
        base = rng.uniform(-math.pi, math.pi)
        rel = d1 + d2 + margin + rng.uniform(0.0, 2.0 * math.pi - 2.0 * (d1 + d2 + margin))
        apex1 = MVec3(*rng.normal(0.0, 0.05, 3))
        apex2 = MVec3(*rng.normal(0.0, 0.05, 3))
        c1 = cone_path(apex1, base, d1, sheet=int(rng.integers(-2, 3)))
        c2 = cone_path(apex2, base + rel, d2, sheet=int(rng.integers(-2, 3)))
        try:
            if cones.causally_separated(c1, c2):
                return c2, c1
        except SeparationError:
            continue
    raise RuntimeError("failed to generate a separated pair")


def random_cover_element(rng: np.random.Generator, *, translations: bool = True):
    g = cover_compose(
        cover_rotation(rng.uniform(-7.0, 7.0)),
        cover_compose(cover_boost1(rng.uniform(-1.2, 1.2)),
                      cover_rotation(rng.uniform(-3.0, 3.0))),
    )
    if translations:
        return cover_compose(cover_translation(MVec3(*rng.normal(0.0, 0.5, 3))), g)
    return g


_OBS_NAMES = ("A", "B", "C", "D")


def random_symbol(rng: np.random.Generator, loc: ConePath,
                  model: AnyonModel) -> fields.FieldSymbol:
    name = _OBS_NAMES[int(rng.integers(0, len(_OBS_NAMES)))]
    obs = fields.ObservableWord.symbol(name, star=bool(rng.integers(0, 2)))
    obs = obs.gamma(int(rng.integers(-2, 3)))
    charge = int(rng.integers(-4, 5))
    return fields.FieldSymbol(charge, obs, loc)


# ---------------------------------------------------------------------------
# geometry
# ---------------------------------------------------------------------------

def geometry_suite(model: AnyonModel | None, scene, seed: int) -> Report:
    rep = Report(command="verify", suite="geometry", seed=seed)
    rng = np.random.default_rng(seed)

    if scene is not None and len(scene.paths) >= 2:
        ids = scene.ids()
        note = "scene pairs against the definition scan"
        bad = 0
        for a, b in itertools.permutations(ids, 2):
            try:
                n1 = relative_winding(scene[a], scene[b])
                n2 = relative_winding_scan(scene[a], scene[b])
                if n1 != n2:
                    bad += 1
            except (SeparationError, WindingError):
                continue
        rep.add_outcome("scene-winding-definition-agreement", bad == 0,
                        exact=f"{bad} disagreements", note=note)

    n_pairs = _n(300)
    bad = 0
    for _ in range(n_pairs):
        c2, c1 = random_separated_pair(rng)
        if relative_winding(c2, c1) != relative_winding_scan(c2, c1):
            bad += 1
    rep.add_outcome("winding-closed-form-vs-definition", bad == 0,
                    exact=f"{bad}/{n_pairs} disagreements",
                    note="oracle scans n in [-5, 5] against both inequalities")

    bad = 0
    for _ in range(n_pairs):
        c2, c1 = random_separated_pair(rng)
        if relative_winding(c2, c1) + relative_winding(c1, c2) != -1:
            bad += 1
    rep.add_outcome("winding-antisymmetry", bad == 0,
                    exact=f"{bad}/{n_pairs} violations", note="N12 + N21 = -1 exactly")

    n_cov = _n(100)
    bad = 0
    for _ in range(n_cov):
        c2, c1 = random_separated_pair(rng)
        g = random_cover_element(rng)
        if relative_winding(cones.act(g, c2), cones.act(g, c1)) != relative_winding(c2, c1):
            bad += 1
    rep.add_outcome("winding-covariance", bad == 0,
                    exact=f"{bad}/{n_cov} violations",
                    note="N invariant under random covering elements")

    bad = 0
    for _ in range(_n(100)):
        c2, c1 = random_separated_pair(rng)
        m = int(rng.integers(-3, 4))
        shifted = cones.act(cover_rotation(2.0 * math.pi * m), c2)
        if relative_winding(shifted, c1) != relative_winding(c2, c1) + m:
            bad += 1
    rep.add_outcome("winding-rotation-shift", bad == 0,
                    exact=f"{bad} violations", note="N(r(2 pi m) C2, C1) = N + m")

    bad = 0
    frame_a = ReferenceFrame(math.pi / 2.0)
    for _ in range(_n(100)):
        c2, c1 = random_separated_pair(rng)
        frame_b = ReferenceFrame(rng.uniform(-6.0, 6.0))
        r2 = cones.rebase(c2, frame_a, frame_b)
        r1 = cones.rebase(c1, frame_a, frame_b)
        if relative_winding(r2, r1) != relative_winding(c2, c1):
            bad += 1
    rep.add_outcome("winding-rebase-invariance", bad == 0,
                    exact=f"{bad} violations", note="recomputed over a shifted base")

    bad = 0
    for _ in range(_n(100)):
        c2, c1 = random_separated_pair(rng)
        if relative_winding(reflect_path(c2), reflect_path(c1)) != relative_winding(c1, c2):
            bad += 1
    rep.add_outcome("winding-reflection-transposition", bad == 0,
                    exact=f"{bad} violations",
                    note="N(jC2, jC1) = N(C1, C2), checked against the definition")

    n_sep = _n(150)
    bad = graze = 0
    for _ in range(n_sep):
        a1 = MVec3(*rng.normal(0.0, 0.4, 3))
        a2 = MVec3(*rng.normal(0.0, 0.4, 3))
        cA = cone_path(a1, rng.uniform(-math.pi, math.pi), rng.uniform(0.1, 0.6))
        cB = cone_path(a2, rng.uniform(-math.pi, math.pi), rng.uniform(0.1, 0.6))
        try:
            sep = cones.causally_separated(cA, cB)
        except SeparationError:
            graze += 1
            continue
        if sep != (cones.find_causal_pair(cA, cB) is None):
            bad += 1
    rep.add_outcome("separation-oracle-agreement", bad == 0,
                    exact=f"{bad}/{n_sep - graze} disagreements",
                    note="dense direction sampling with exact radial profile")

    bad = 0
    for _ in range(_n(100)):
        mid = rng.uniform(-math.pi, math.pi)
        arcs = sorted(rng.uniform(0.0, 1.8, 3))
        paths = [cone_path(MVec3(0, 0, 0), mid + a, 0.06) for a in arcs]
        try:
            p01 = cones.precedes(paths[0], paths[1])
            p12 = cones.precedes(paths[1], paths[2])
            p02 = cones.precedes(paths[0], paths[2])
        except (SeparationError, WindingError):
            continue
        if p01 and p12 and not p02:
            bad += 1
        if cones.precedes(paths[0], paths[1]) and cones.precedes(paths[1], paths[0]):
            bad += 1
    rep.add_outcome("precedes-transitive-antisymmetric", bad == 0,
                    exact=f"{bad} violations", note="ordered triples of disjoint arcs")

    worst = 0.0
    for _ in range(_n(40)):
        start = rng.uniform(-math.pi, math.pi)
        sweep = rng.uniform(-2.5, 2.5)
        rap = rng.uniform(-1.0, 1.0)
        ts = np.linspace(0.0, 1.0, 200)
        pts = [MVec3(math.sinh(rap * t), math.cosh(rap * t) * math.cos(start + sweep * t),
                     math.cosh(rap * t) * math.sin(start + sweep * t)) for t in ts]
        fwd = cones.accumulated_angle(pts)
        bwd = cones.accumulated_angle([minkowski.reflect_vector(p) for p in pts])
        worst = max(worst, abs(fwd + bwd))
    rep.add_outcome("reflection-reverses-orientation", worst <= 1e-12, residual=worst,
                    note="accumulated angle of j-image negates")

    worst = 0.0
    for _ in range(_n(40)):
        c2, c1 = random_separated_pair(rng)
        g = random_cover_element(rng, translations=False)
        moved = cones.act(g, c1)
        dense = cones._continue_vector_angles(
            g, [c1.corners[0].as_array(), c1.corners[1].as_array()],
            [c1.arc.alpha_minus, c1.arc.alpha_plus],
        )
        worst = max(worst, abs(moved.arc.alpha_minus - dense[0]),
                    abs(moved.arc.alpha_plus - dense[1]))
    rep.add_outcome("arc-transport-continuation", worst <= 1e-9, residual=worst,
                    note="endpoint transport against dense continuation")
    return rep


# ---------------------------------------------------------------------------
# braid
# ---------------------------------------------------------------------------

def _separated_fan(rng: np.random.Generator, count: int,
                   max_tries: int = 32) -> list[ConePath]:
    """Pairwise separated cones spread over one angular turn.

    Apex jitter is purely spatial so the regions stay space-like near the
    apexes; the result is verified and regenerated if a pair fails.
    """
    base = rng.uniform(-math.pi, math.pi)
    step = 2.0 * math.pi / count
    for _ in range(max_tries):
        fan = [
            cone_path(MVec3(0.0, *rng.normal(0.0, 0.02, 2)), base + k * step,
                      rng.uniform(0.08, 0.3 * step))
            for k in range(count)
        ]
        try:
            if all(cones.causally_separated(a, b)
                   for a, b in itertools.combinations(fan, 2)):
                return fan
        except SeparationError:
            continue
    raise RuntimeError("failed to generate a separated fan")


def _all_reduced_routes(perm: tuple[int, ...]):
    """All shortest adjacent-transposition routes sorting ``perm`` to identity."""
    if all(perm[i] < perm[i + 1] for i in range(len(perm) - 1)):
        yield ()
        return
    for i in range(len(perm) - 1):
        if perm[i] > perm[i + 1]:
            nxt = list(perm)
            nxt[i], nxt[i + 1] = nxt[i + 1], nxt[i]
            for route in _all_reduced_routes(tuple(nxt)):
                yield (i,) + route


def braid_suite(model: AnyonModel, scene, seed: int) -> Report:
    rep = Report(command="verify", suite="braid", seed=seed)
    rng = np.random.default_rng(seed)

    n_inv = _n(200)
    bad = 0
    for _ in range(n_inv):
        c2, c1 = random_separated_pair(rng)
        w = fields.FieldWord.of(random_symbol(rng, c2, model), random_symbol(rng, c1, model))
        if fields.exchange(fields.exchange(w, 0, model), 0, model) != w:
            bad += 1
    rep.add_outcome("exchange-involution", bad == 0, exact=f"{bad}/{n_inv} violations",
                    note="double exchange restores word and coefficient")

    bad = routes = 0
    for _ in range(_n(6)):
        locs = _separated_fan(rng, 4)
        syms = [random_symbol(rng, loc, model) for loc in locs]
        for perm in itertools.permutations(range(4)):
            word = fields.FieldWord.of(*(syms[i] for i in perm))
            coeffs = set()
            for route in _all_reduced_routes(perm):
                out = word
                for i in route:
                    out = fields.exchange(out, i, model)
                coeffs.add(out.coeff)
                routes += 1
            if len(coeffs) != 1:
                bad += 1
    rep.add_outcome("exchange-confluence-4-factors", bad == 0,
                    exact=f"{bad} divergent words over {routes} reduced routes",
                    note="exhaustive adjacent-transposition routes")

    ferm = AnyonModel(2, CyclotomicPhase.from_pair(1, 2),
                      CyclotomicPhase.from_pair(1, 4), Fraction(1, 2))
    c2, c1 = random_separated_pair(rng)
    while relative_winding(c2, c1) != 0:
        c2, c1 = random_separated_pair(rng)
    w = fields.FieldWord.of(
        fields.FieldSymbol(1, fields.ObservableWord.symbol("A"), c2),
        fields.FieldSymbol(1, fields.ObservableWord.symbol("B"), c1),
    )
    got = fields.exchange(w, 0, ferm).coeff
    rep.add_outcome("fermion-anticommutation", got == CyclotomicPhase.from_pair(1, 2),
                    exact=str(got), note="omega = -1, winding 0")

    n_mono = _n(300)
    bad = 0
    for _ in range(n_mono):
        alpha = int(rng.integers(-6, 7))
        cc1 = int(rng.integers(-5, 6))
        cc2 = int(rng.integers(-5, 6))
        n = int(rng.integers(-4, 5))
        pre = monodromy_prefactor(model, alpha, alpha + cc1, alpha + cc1 + cc2,
                                  alpha + cc2, n)
        if pre != model.omega ** (2 * cc1 * cc2 * n):
            bad += 1
        if pre * r_phase(model, cc1, cc2, 0) != r_phase(model, cc1, cc2, n):
            bad += 1
    rep.add_outcome("monodromy-prefactor-identity", bad == 0,
                    exact=f"{bad}/{n_mono} violations",
                    note="prefactor = omega^(2 c1 c2 n), exact")

    bad = 0
    for _ in range(_n(200)):
        cc1 = int(rng.integers(-5, 6))
        cc2 = int(rng.integers(-5, 6))
        n = int(rng.integers(-4, 5))
        if not (r_phase(model, cc1, cc2, n) * r_phase(model, cc1, cc2, -1 - n)).is_one():
            bad += 1
    rep.add_outcome("exchange-phase-pairing", bad == 0, exact=f"{bad} violations",
                    note="phases at n and -1-n cancel")
    return rep


# ---------------------------------------------------------------------------
# twist
# ---------------------------------------------------------------------------

def twist_suite(model: AnyonModel, scene, seed: int) -> Report:
    rep = Report(command="verify", suite="twist", seed=seed)
    rng = np.random.default_rng(seed)

    n_cfg = _n(100)
    bad = 0
    for _ in range(n_cfg):
        c2, c1 = random_separated_pair(rng)
        f2 = random_symbol(rng, c2, model)
        f1 = random_symbol(rng, c1, model)
        defect = fields.twisted_commutator_defect(f2, f1, (c2, c1), model)
        if defect != (0, 0, 0):
            bad += 1
    rep.add_outcome("twisted-locality-commutator", bad == 0,
                    exact=f"{bad}/{n_cfg} nonzero defects",
                    note="graded commutator vanishes as a polynomial in q")

    # a twist whose winding is off by one shifts the defect by omega^(2 c1 c2),
    # so the control is only meaningful when omega^2 != 1
    if not (model.omega ** 2).is_one():
        c2, c1 = random_separated_pair(rng)
        mismatched = cones.act(cover_rotation(2.0 * math.pi), c2)
        f2 = fields.FieldSymbol(1, fields.ObservableWord.symbol("A"), c2)
        f1 = fields.FieldSymbol(1, fields.ObservableWord.symbol("B"), c1)
        defect = fields.twisted_commutator_defect(f2, f1, (mismatched, c1), model)
        rep.add_outcome("twisted-locality-negative-control", defect != (0, 0, 0),
                        note="mismatched twist winding must not commute")

    ok = True
    for mu, expected_n in ((math.pi / 2.0, -1), (-math.pi / 2.0, 0)):
        frame = ReferenceFrame(mu)
        we = standard_wedge_path(frame)
        jwe = reflect_path(we, frame)
        n = relative_winding(we, jwe)
        if n != expected_n:
            ok = False
        sgn = -1 if n == -1 else 1
        for q in range(-5, 6):
            if twist_phase(model, q, n) != model.omega_sqrt ** (sgn * q * q):
                ok = False
    rep.add_outcome("twist-wedge-eigenvalues", ok,
                    exact="Z E_q = omega^(-+ q^2/2) for both reference cones",
                    note="winding of the standard wedge pair is -1 or 0")

    if model.is_finite:
        n_per = _n(200)
        bad = 0
        N = model.group_order
        for _ in range(n_per):
            q = int(rng.integers(-8, 9))
            n = int(rng.integers(-3, 4))
            if sector_phase(model, q + N) != sector_phase(model, q):
                bad += 1
            if twist_phase(model, q + N, n) != twist_phase(model, q, n):
                bad += 1
        rep.add_outcome("charge-periodicity", bad == 0, exact=f"{bad} violations",
                        note="sector and twist phases are Z_N functions")
    return rep


# ---------------------------------------------------------------------------
# tomita
# ---------------------------------------------------------------------------

def _reflection_frame(scene, rep: Report) -> ReferenceFrame | None:
    """Reference frame for reflection-dependent suites.

    Uses the scene's frame when one is supplied; the reflection action is
    canonical only for a j-invariant reference cone, so anything else is an
    error naming that precondition.
    """
    frame = scene.frame if scene is not None else ReferenceFrame(math.pi / 2.0)
    if not frame.is_reflection_invariant():
        rep.add("reference-cone", ERROR,
                note="precondition violated: reference cone is not invariant "
                     "under the wedge-edge reflection (reference angle must be "
                     "pi/2 mod pi)")
        return None
    return frame


def tomita_suite(model: AnyonModel, scene, seed: int) -> Report:
    rep = Report(command="verify", suite="tomita", seed=seed)
    rng = np.random.default_rng(seed)
    frame = _reflection_frame(scene, rep)
    if frame is None:
        return rep

    wedge = standard_wedge_path(frame)
    sheet = round((wedge.arc.alpha_minus + wedge.arc.alpha_plus) / (4.0 * math.pi))

    def wedge_interior_symbol():
        center = rng.uniform(-1.0, 1.0)
        half = rng.uniform(0.05, min(0.4, (math.pi / 2.0 - abs(center)) * 0.8))
        apex = MVec3(0.0, abs(rng.normal(1.0, 0.3)) + 0.5, rng.normal(0.0, 0.2))
        loc = cone_path(apex, center, half, sheet=sheet)
        return random_symbol(rng, loc, model)

    n_inv = _n(300)
    bad = 0
    for _ in range(n_inv):
        sym = wedge_interior_symbol()
        coeff = CyclotomicPhase.from_pair(int(rng.integers(0, 12)), 12)
        v = fields.vacuum_vector(sym, coeff)
        if fields.tomita_S(fields.tomita_S(v, model, frame), model, frame) != v:
            bad += 1
    rep.add_outcome("pseudo-tomita-involution", bad == 0,
                    exact=f"{bad}/{n_inv} violations", note="S^2 = 1 exactly")

    sym = wedge_interior_symbol()
    v0 = fields.StateVector(0, sym.obs, sym.loc)
    sv = fields.tomita_S(v0, model, frame)
    ok = sv.charge == 0 and sv.obs == v0.obs.star()
    rep.add_outcome("charge-zero-star-map", ok,
                    note="S restricted to the vacuum sector is A -> A*")

    v = fields.vacuum_vector(wedge_interior_symbol(), CyclotomicPhase.from_pair(1, 3))
    lhs = fields.tomita_S(v, model, frame)
    ok = lhs.coeff == CyclotomicPhase.from_pair(2, 3)
    rep.add_outcome("anti-linearity", ok, exact=str(lhs.coeff),
                    note="coefficients conjugate")

    outside = cone_path(MVec3(0.0, -2.0, 0.0), math.pi, 0.2)
    try:
        fields.tomita_S(fields.vacuum_vector(random_symbol(rng, outside, model)), model, frame)
        rep.add("wedge-localisation-guard", FAIL, note="missing rejection")
    except ValueError:
        rep.add_pass("wedge-localisation-guard",
                     note="field outside the wedge path rejected")
    return rep


# ---------------------------------------------------------------------------
# cpt
# ---------------------------------------------------------------------------

def cpt_suite(model: AnyonModel, scene, seed: int) -> Report:
    rep = Report(command="verify", suite="cpt", seed=seed)
    rng = np.random.default_rng(seed)
    frame = _reflection_frame(scene, rep)
    if frame is None:
        return rep

    n_inv = _n(200)
    bad = 0
    for _ in range(n_inv):
        c2, c1 = random_separated_pair(rng)
        g = fields.GradedOperator(
            int(rng.integers(-4, 5)),
            Fraction(int(rng.integers(-6, 7)), 12),
            Fraction(int(rng.integers(-6, 7)), 12),
            Fraction(int(rng.integers(-6, 7)), 12),
            fields.ObservableWord.symbol("A"),
        )
        if fields.cpt_conjugate_graded(
            fields.cpt_conjugate_graded(g, model, frame), model, frame
        ) != g:
            bad += 1
    rep.add_outcome("cpt-involution", bad == 0, exact=f"{bad}/{n_inv} violations",
                    note="Theta^2 = 1 on graded operators, exact")

    n_geo = _n(150)
    bad = 0
    for _ in range(n_geo):
        c2, c1 = random_separated_pair(rng)
        sym = random_symbol(rng, c1, model)
        op, loc = fields.cpt_conjugate(sym, model, frame)
        if op.shift != -sym.charge:
            bad += 1
        if not loc.same_path(reflect_path(sym.loc, frame)):
            bad += 1
    rep.add_outcome("cpt-charge-and-localisation", bad == 0,
                    exact=f"{bad} violations",
                    note="charge conjugated, localisation reflected")

    n_guard = _n(100)
    rejected = 0
    for _ in range(n_guard):
        c2, c1 = random_separated_pair(rng)
        if relative_winding(c2, c1) != -1:
            c2 = cones.act(cover_rotation(2.0 * math.pi * (-1 - relative_winding(c2, c1))), c2)
        charge = int(rng.integers(-4, 5))
        f2 = fields.FieldSymbol(charge, fields.ObservableWord.symbol("A"), c2)
        f1 = fields.FieldSymbol(charge, fields.ObservableWord.symbol("B"), c1)
        overlap = fields.vacuum_swap((f2, f1), model)
        try:
            fields.vacuum_swap((overlap.bra, overlap.ket), model)
        except ValueError:
            rejected += 1
    rep.add_outcome("vacuum-swap-double-application-guard", rejected == n_guard,
                    exact=f"{rejected}/{n_guard} rejected",
                    note="winding of the swapped pair is 0, not -1")

    t = Fraction(1, 5)
    v = fields.gauge_operator(t)
    ok = fields.cpt_conjugate_graded(v, model, frame) == v
    rep.add_outcome("cpt-gauge-phase", ok,
                    note="anti-linear grade flip fixes the gauge phases")
    return rep


# ---------------------------------------------------------------------------
# wigner
# ---------------------------------------------------------------------------

def wigner_suite(model: AnyonModel, scene, seed: int) -> Report:
    rep = Report(command="verify", suite="wigner", seed=seed)
    rng = np.random.default_rng(seed)
    if model.mass is None:
        rep.add("wigner-mass", ERROR, note="model file does not specify a mass")
        return rep
    mass = model.mass

    n_coc = _n(30)
    pts = wigner.sample_shell(mass, rng, 12)
    worst = 0.0
    for _ in range(n_coc):
        g1 = random_cover_element(rng, translations=False)
        g2 = random_cover_element(rng, translations=False)
        worst = max(worst, wigner.verify_cocycle(g1, g2, pts))
    rep.add_outcome("wigner-cocycle", worst < 1e-9, residual=worst,
                    note=f"{n_coc} random pairs, 12 shell points each")

    psi = wigner.GaussianSum((1.0, 0.4 - 0.3j), ((0.4, -0.2), (-0.3, 0.5)), (1.0, 1.6))
    spins = [float(model.spin), 0.0, 0.5, 1.0 / 3.0]
    worst = 0.0
    for s in spins:
        rot = wigner.apply_rep(minkowski.ZERO_VEC, cover_rotation(2.0 * math.pi), s, psi)
        expected = np.exp(2j * math.pi * s) * psi.evaluate(pts)
        worst = max(worst, float(np.abs(rot.evaluate(pts) - expected).max()))
    rep.add_outcome("rotation-2pi-eigenvalue", worst < 1e-9, residual=worst,
                    exact=f"spins {spins}", note="U(r(2 pi)) psi = exp(2 pi i s) psi")

    worst = 0.0
    for _ in range(_n(10)):
        g = random_cover_element(rng, translations=False)
        res = wigner.verify_j_relations(g, float(model.spin), psi, pts)
        worst = max(worst, *res.values())
    rep.add_outcome("reflection-relations", worst < 1e-8, residual=worst,
                    note="U(j)U(g)U(j) = U(jgj) and translation covariance")

    n0 = wigner.shell_norm2(psi, mass)
    worst = 0.0
    for _ in range(2):
        g = random_cover_element(rng, translations=False)
        a = MVec3(*rng.normal(0.0, 0.3, 3))
        n1 = wigner.shell_norm2(wigner.apply_rep(a, g, float(model.spin), psi), mass)
        worst = max(worst, abs(n1 - n0) / n0)
    rep.add_outcome("unitarity", worst < 1e-6, residual=worst,
                    note="invariant-measure quadrature norm")

    g = random_cover_element(rng, translations=False)
    coarse = wigner.wigner_rotation(g, pts, initial_steps=64)
    fine = wigner.wigner_rotation(g, pts, initial_steps=128)
    worst = float(np.abs(coarse - fine).max())
    rep.add_outcome("continuation-step-independence", worst < 1e-10, residual=worst,
                    note="halving the step changes the lift below 1e-10")

    eig = sector_phase(model, 1).to_complex()
    rot = wigner.apply_rep(minkowski.ZERO_VEC, cover_rotation(2.0 * math.pi),
                           float(model.spin), psi)
    worst = float(np.abs(rot.evaluate(pts) - eig * psi.evaluate(pts)).max())
    rep.add_outcome("spin-statistics-cross-check", worst < 1e-9, residual=worst,
                    exact=str(sector_phase(model, 1)),
                    note="sector phase equals the 2 pi rotation eigenvalue")
    return rep


# ---------------------------------------------------------------------------
# driver
# ---------------------------------------------------------------------------

def model_suite_guard(model: AnyonModel | None, rep: Report) -> bool:
    if model is None:
        rep.add("model", ERROR, note="this suite requires --model")
        return False
    result = validate_model(model)
    if not result.ok:
        rep.add("model-validation", FAIL, note="; ".join(result.failures))
        return False
    return True


_SUITE_FUNCS = {
    "geometry": geometry_suite,
    "braid": braid_suite,
    "twist": twist_suite,
    "cpt": cpt_suite,
    "tomita": tomita_suite,
    "wigner": wigner_suite,
}


def run_suite(name: str, model: AnyonModel | None, scene, seed: int,
              parallel: bool = False) -> Report:
    if name == "all":
        names = [s for s in SUITES if s != "all"]
        rep = Report(command="verify", suite="all", seed=seed)
        if parallel:
            from concurrent.futures import ThreadPoolExecutor

            with ThreadPoolExecutor(max_workers=len(names)) as pool:
                futures = [pool.submit(run_suite, n, model, scene, seed) for n in names]
                parts = [f.result() for f in futures]
        else:
            parts = [run_suite(n, model, scene, seed) for n in names]
        for part in parts:
            rep.extend(part)
        return rep
    if name not in _SUITE_FUNCS:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    rep = Report(command="verify", suite=name, seed=seed)
    if name != "geometry" and not model_suite_guard(model, rep):
        return rep
    rep.extend(_SUITE_FUNCS[name](model, scene, seed))
    return rep
