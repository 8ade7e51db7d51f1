"""Space-like cones, wedges and their lifted angular arcs.

A region is stored as its apex, the light-like normals of its boundary
planes, the extreme rays of its closure, and a lifted angular arc locating
the sheet of the universal cover of the manifold of space-like directions.
All winding-number arithmetic happens on the arcs; the rays and normals
carry the rapidity extent and decide causal separation.

Roles of the stored extreme rays (order is fixed and preserved by the
orientation-preserving group action):

* ``corners[0]`` ("west")  - the ray realising the lower arc endpoint,
* ``corners[1]`` ("east")  - the ray realising the upper arc endpoint,
* ``corners[2:4]``         - the rapidity extremes (light-like for wedges).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .minkowski import (
    ETA,
    LIFT_TOL,
    TWO_PI,
    CoveringLorentz,
    CoveringPoincare,
    LiftError,
    MVec3,
    _as_poincare,
    _SymExp,
    _sym_boost_part,
    _sym_log,
    minkowski_inner,
    minkowski_norm2,
    reflect_vector,
    rotation_matrix,
    wrap_angle,
)

KIND_CONE = "cone"
KIND_WEDGE = "wedge"
KIND_CONE_COMPLEMENT = "cone-complement"

ARC_TOL = 1e-9
# dimensionless margins for the causal-separation certificate
_SEP_ZERO = 1e-10
_SEP_AMBIGUOUS = 1e-7


class SeparationError(ValueError):
    """Causal separation could not be decided (grazing or invalid input)."""


class WindingError(ValueError):
    """No valid relative winding number exists for the given pair."""


@dataclass(frozen=True)
class SpacelikeDirection:
    """A point of the direction manifold: e.e = -1."""

    e: MVec3

    def __post_init__(self) -> None:
        n2 = minkowski_norm2(self.e)
        if abs(n2 + 1.0) > 1e-9:
            raise ValueError(f"direction is not space-like unit (e.e = {n2})")


def direction_lifted_angle(e, sheet: int = 0) -> float:
    """Lifted angle atan2(e2, e1) + 2*pi*sheet, branch (-pi, pi]."""
    v = e.e if isinstance(e, SpacelikeDirection) else e
    if math.hypot(v.x1, v.x2) == 0.0:
        raise ValueError("direction has no spatial part")
    return math.atan2(v.x2, v.x1) + TWO_PI * sheet


def accumulated_angle(points) -> float:
    """Total angle swept by a discretely sampled path of directions."""
    vs = [p.e if isinstance(p, SpacelikeDirection) else p for p in points]
    angles = [math.atan2(v.x2, v.x1) for v in vs]
    total = 0.0
    for a, b in zip(angles, angles[1:]):
        total += wrap_angle(b - a)
    return total


@dataclass(frozen=True)
class LiftedArc:
    """Unreduced angular interval of a sheet; width in (0, pi]."""

    alpha_minus: float
    alpha_plus: float

    def __post_init__(self) -> None:
        w = self.width
        if not (w > 0.0 and w <= math.pi + ARC_TOL):
            raise ValueError(f"arc width {w} outside (0, pi]")

    @property
    def width(self) -> float:
        return self.alpha_plus - self.alpha_minus

    def shifted(self, delta: float) -> "LiftedArc":
        return LiftedArc(self.alpha_minus + delta, self.alpha_plus + delta)


@dataclass(frozen=True)
class ReferenceFrame:
    """Base point of the lifted-angle bookkeeping.

    ``reference_angle`` is the lifted angle of the reference direction e0,
    assumed to sit at the centre of the reference cone.  Reflection-aware
    operations require the reference cone to be invariant under
    j = diag(-1,-1,1), i.e. the angle must be pi/2 mod pi (the cone contains
    the positive or the negative x2 axis).
    """

    reference_angle: float = math.pi / 2.0

    def is_reflection_invariant(self, tol: float = 1e-12) -> bool:
        return abs(wrap_angle(2.0 * self.reference_angle - math.pi)) <= tol

    def reflection_constant(self) -> float:
        """c such that the lifted reflection is angle -> c - angle."""
        if not self.is_reflection_invariant():
            raise ValueError(
                "reference cone is not invariant under the wedge-edge reflection"
            )
        return 2.0 * self.reference_angle


DEFAULT_FRAME = ReferenceFrame()


@dataclass(frozen=True)
class ConePath:
    """A path class: apex, lifted arc, kind, boundary data.

    For ``kind == 'cone-complement'`` the stored arc, normals and corners are
    those of the complemented cone; the projected region is its causal
    complement.  Such paths can be transported and reflected but are rejected
    by the ordering and winding operations.
    """

    apex: MVec3
    arc: LiftedArc
    kind: str
    normals: tuple[MVec3, ...]
    corners: tuple[MVec3, ...]

    def __post_init__(self) -> None:
        if self.kind not in (KIND_CONE, KIND_WEDGE, KIND_CONE_COMPLEMENT):
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.kind == KIND_WEDGE:
            if abs(self.arc.width - math.pi) > ARC_TOL:
                raise ValueError("wedge arcs must have width exactly pi")
        elif self.arc.width > math.pi - ARC_TOL:
            raise ValueError("cone arcs must have width strictly below pi")
        for n in self.normals:
            if abs(minkowski_norm2(n)) > 1e-9:
                raise ValueError("boundary normals must be light-like")

    def same_path(self, other: "ConePath", tol: float = LIFT_TOL) -> bool:
        if self.kind != other.kind:
            return False
        da = self.apex - other.apex
        if max(abs(da.x0), abs(da.x1), abs(da.x2)) > tol:
            return False
        return (
            abs(self.arc.alpha_minus - other.arc.alpha_minus) <= tol
            and abs(self.arc.alpha_plus - other.arc.alpha_plus) <= tol
        )

    def translated(self, a: MVec3) -> "ConePath":
        return replace(self, apex=self.apex + a)


def _spatial(angle: float) -> MVec3:
    return MVec3(0.0, math.cos(angle), math.sin(angle))


def _wedge_normals(center: float) -> tuple[MVec3, MVec3]:
    # standard wedge W1 (center 0): <l, x> > 0 for l = (-1,-1,0) and (1,-1,0)
    r = rotation_matrix(center)
    return (r.apply(MVec3(-1.0, -1.0, 0.0)), r.apply(MVec3(1.0, -1.0, 0.0)))


def wedge_path(apex: MVec3 = MVec3(0.0, 0.0, 0.0), center_angle: float = 0.0,
               sheet: int = 0) -> ConePath:
    """Wedge with direction arc (center - pi/2, center + pi/2) on the given sheet."""
    lift = center_angle + TWO_PI * sheet
    arc = LiftedArc(lift - math.pi / 2.0, lift + math.pi / 2.0)
    west = _spatial(center_angle - math.pi / 2.0)
    east = _spatial(center_angle + math.pi / 2.0)
    axis = _spatial(center_angle)
    light_up = MVec3(1.0, axis.x1, axis.x2)
    light_down = MVec3(-1.0, axis.x1, axis.x2)
    return ConePath(apex, arc, KIND_WEDGE, _wedge_normals(center_angle),
                    (west, east, light_up, light_down))


def cone_path(apex: MVec3, center_angle: float, half_opening: float,
              sheet: int = 0, kind: str = KIND_CONE) -> ConePath:
    """Canonical space-like cone: intersection of the two wedges whose
    direction arcs overlap exactly in (center - half, center + half).

    The boundary consists of four light-like planes; the closure has four
    extreme rays, two at the angular endpoints and two at the rapidity
    extremes +-artanh(sin(half_opening)).
    """
    if not (0.0 < half_opening < math.pi / 2.0 - 1e-12):
        raise ValueError("half_opening must lie in (0, pi/2)")
    if kind not in (KIND_CONE, KIND_CONE_COMPLEMENT):
        raise ValueError("cone_path builds cones or cone-complements")
    lift = center_angle + TWO_PI * sheet
    arc = LiftedArc(lift - half_opening, lift + half_opening)
    shift = math.pi / 2.0 - half_opening
    normals = _wedge_normals(center_angle - shift) + _wedge_normals(center_angle + shift)
    axis = _spatial(center_angle)
    s = math.sin(half_opening)
    corners = (
        _spatial(center_angle - half_opening),
        _spatial(center_angle + half_opening),
        MVec3(s, axis.x1, axis.x2),
        MVec3(-s, axis.x1, axis.x2),
    )
    return ConePath(apex, arc, kind, normals, corners)


def standard_wedge_path(frame: ReferenceFrame = DEFAULT_FRAME) -> ConePath:
    """The path ending at the standard wedge with minimal accumulated angle
    from the reference sheet."""
    mu = frame.reference_angle
    best = None
    for n in (math.floor(mu / TWO_PI), round(mu / TWO_PI), math.ceil(mu / TWO_PI)):
        lo = -math.pi / 2.0 + TWO_PI * n
        hi = math.pi / 2.0 + TWO_PI * n
        dist = max(lo - mu, mu - hi, 0.0)
        if best is None or dist < best[0] - 1e-15:
            best = (dist, n)
    return wedge_path(MVec3(0.0, 0.0, 0.0), 0.0, sheet=best[1])


# ---------------------------------------------------------------------------
# causal separation
# ---------------------------------------------------------------------------

def _closure_generators(c: ConePath) -> list[np.ndarray]:
    if c.kind == KIND_WEDGE:
        west, east, up, down = (v.as_array() for v in c.corners)
        return [up, down, west, east, -west, -east]
    return [v.as_array() for v in c.corners]


_MINK_DIAG = np.array([1.0, -1.0, -1.0])


def _nappe_certificate(rows: np.ndarray, sign: float) -> float:
    """Best (smallest) normalised violation over candidate separating
    covectors w in the closed future (sign=+1) or past (sign=-1) cone.

    Returns a value <= 0 when some w certifies that the open difference set
    avoids the nappe, > 0 otherwise.  Candidates are the extreme-ray types
    of the dual feasibility cone: pairwise Minkowski cross products of the
    constraints, per-constraint light-like tangents and minimisers, and the
    nappe axis.
    """
    iu, ju = np.triu_indices(len(rows), k=1)
    crosses = np.cross(rows[iu], rows[ju]) * _MINK_DIAG
    parts = [crosses, -crosses, np.array([[sign, 0.0, 0.0]])]

    r = np.hypot(rows[:, 1], rows[:, 2])
    mask = r > 1e-14
    if np.any(mask):
        ux = rows[mask, 1] / r[mask]
        uy = rows[mask, 2] / r[mask]
        col = np.full(ux.shape, sign)
        parts.append(np.stack([col, ux, uy], axis=1))
        t = sign * rows[mask, 0] / r[mask]
        tm = np.abs(t) <= 1.0
        if np.any(tm):
            ang = np.arccos(np.clip(t[tm], -1.0, 1.0))
            base = np.arctan2(uy[tm], ux[tm])
            for psi in (base + ang, base - ang):
                parts.append(np.stack(
                    [np.full(psi.shape, sign), np.cos(psi), np.sin(psi)], axis=1))

    cand = np.vstack(parts)
    scale = np.abs(cand).max(axis=1)
    keep = scale > 1e-14
    cand = cand[keep] / scale[keep, None]
    in_nappe = (sign * cand[:, 0] >= -_SEP_ZERO) & (
        cand[:, 0] ** 2 - cand[:, 1] ** 2 - cand[:, 2] ** 2 >= -1e-9
    )
    cand = cand[in_nappe]
    if len(cand) == 0:
        return math.inf
    values = (cand * _MINK_DIAG) @ rows.T / np.abs(rows).max(axis=1)[None, :]
    violations = np.maximum(values.max(axis=1), 0.0)
    return float(violations.min())


def causally_separated(c1: ConePath, c2: ConePath) -> bool:
    """True iff no x in C1 and y in C2 are causally related.

    Decided on the polyhedral data: the open difference set d + cone(G) with
    G the closure rays of C1 and the negated rays of C2 must avoid both
    nappes of the light cone; each avoidance is certified by a covector in
    the dual nappe.  Near-grazing configurations raise SeparationError.
    """
    for c in (c1, c2):
        if c.kind == KIND_CONE_COMPLEMENT:
            raise SeparationError("cone-complement regions are not supported here")
        if c.arc.width <= ARC_TOL:
            raise SeparationError("degenerate (empty-interior) cone")
    d = (c1.apex - c2.apex).as_array()
    rows = [g for g in _closure_generators(c1)]
    rows += [-g for g in _closure_generators(c2)]
    if np.abs(d).max() > 1e-14:
        rows.append(d)
    rows = np.stack(rows)

    verdicts = []
    for sign in (1.0, -1.0):
        viol = _nappe_certificate(rows, sign)
        if _SEP_ZERO < viol < _SEP_AMBIGUOUS:
            raise SeparationError(
                f"separation undecidable within tolerance (margin {viol:.3e})"
            )
        verdicts.append(viol <= _SEP_ZERO)
    return verdicts[0] and verdicts[1]


def _simplex_grid(parts: int, total: int) -> np.ndarray:
    out: list[tuple[int, ...]] = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for v in range(remaining + 1):
            rec(prefix + (v,), remaining - v, slots - 1)

    rec((), total, parts)
    return np.array(out, dtype=float) / total


def _direction_samples(c: ConePath, resolution: int, rng=None) -> np.ndarray:
    """Space-like vectors sampled densely across the direction set of c."""
    gens = np.stack(_closure_generators(c))
    w = _simplex_grid(len(gens), resolution)
    if rng is not None:
        w = np.vstack([w, rng.dirichlet(np.ones(len(gens)), size=len(w))])
    # nudge off the light-like boundary and away from cancelling ray pairs
    w = w + 1e-3
    pts = w @ gens
    scale = np.abs(pts).max(axis=1)
    keep = scale > 1e-9
    pts = pts[keep] / scale[keep, None]
    mink = pts[:, 0] ** 2 - pts[:, 1] ** 2 - pts[:, 2] ** 2
    return pts[mink < -1e-9]


def find_causal_pair(c1: ConePath, c2: ConePath, rng=None, resolution: int = 5):
    """Dense-sampling sign oracle: search for x in C1, y in C2 with
    (x-y)^2 >= 0.

    Directions are sampled densely over each region; for each direction pair
    the radial profile r, r' >= 0 of (apex1 + r e - apex2 - r' f)^2 is a
    quadratic whose supremum over the quadrant is evaluated in closed form.
    Returns a violating (x, y) pair or None.  Independent of the certificate
    search in `causally_separated`.
    """
    E = _direction_samples(c1, resolution, rng)
    F = _direction_samples(c2, resolution, rng)
    d = (c1.apex - c2.apex).as_array()

    def mdot(u, v):
        return u[..., 0] * v[..., 0] - u[..., 1] * v[..., 1] - u[..., 2] * v[..., 2]

    a = mdot(E, E)[:, None]          # < 0
    b = mdot(F, F)[None, :]          # < 0
    c = np.einsum("ik,jk->ij", E * np.array([1.0, -1.0, -1.0]), F)
    de = mdot(E, d)[:, None]
    df = mdot(F, d)[None, :]
    dd = float(mdot(d, d))

    # recession causal: c strictly below -sqrt(a b) means r e - r' f reaches
    # the open interior of the light cone (equality is the grazing ray e = f)
    rec = c < -np.sqrt(a * b) - 1e-12
    if np.any(rec):
        i, j = np.argwhere(rec)[0]
        t = c[i, j] / a[i, 0]  # ratio r/r' maximising the quadratic part
        r, rp = 1e6 * max(t, 1e-6), 1e6
        x = c1.apex.as_array() + r * E[i]
        y = c2.apex.as_array() + rp * F[j]
        return MVec3.from_array(x), MVec3.from_array(y)

    best = np.full(c.shape, dd)
    r_best = np.zeros(c.shape)
    rp_best = np.zeros(c.shape)

    # edge r' = 0: maximum at r = -de/a when nonnegative
    r_edge = np.where(de >= 0.0, -de / a, 0.0) + np.zeros_like(c)
    v_edge = dd + 2.0 * r_edge * de + r_edge**2 * a
    upd = v_edge > best
    best = np.where(upd, v_edge, best)
    r_best = np.where(upd, r_edge, r_best)
    rp_best = np.where(upd, 0.0, rp_best)

    # edge r = 0: maximum at r' = df/b when nonnegative
    rp_edge = np.where(df <= 0.0, df / b, 0.0) + np.zeros_like(c)
    v_edge = dd - 2.0 * rp_edge * df + rp_edge**2 * b
    upd = v_edge > best
    best = np.where(upd, v_edge, best)
    r_best = np.where(upd, 0.0, r_best)
    rp_best = np.where(upd, rp_edge, rp_best)

    # interior critical point of the (negative-definite) quadratic
    det = a * b - c**2
    safe = np.abs(det) > 1e-14
    with np.errstate(divide="ignore", invalid="ignore"):
        r_in = np.where(safe, (-de * b + c * df) / det, 0.0)
        rp_in = np.where(safe, (a * df - c * de) / det, 0.0)
    feas = safe & (r_in >= 0.0) & (rp_in >= 0.0)
    v_in = dd + 2.0 * r_in * de - 2.0 * rp_in * df + r_in**2 * a + rp_in**2 * b \
        - 2.0 * r_in * rp_in * c
    v_in = np.where(feas, v_in, -np.inf)
    upd = v_in > best
    best = np.where(upd, v_in, best)
    r_best = np.where(upd, r_in, r_best)
    rp_best = np.where(upd, rp_in, rp_best)

    # the regions are open: a supremum of exactly zero is boundary contact
    # (apexes or grazing rays), not a causal pair
    strict = 1e-9 * max(1.0, float(np.abs(d).max()) ** 2)
    i, j = np.unravel_index(int(np.argmax(best)), best.shape)
    if best[i, j] > strict:
        x = c1.apex.as_array() + r_best[i, j] * E[i]
        y = c2.apex.as_array() + rp_best[i, j] * F[j]
        return MVec3.from_array(x), MVec3.from_array(y)
    return None


# ---------------------------------------------------------------------------
# ordering and winding numbers
# ---------------------------------------------------------------------------

def _arc_below(c1: ConePath, c2: ConePath, offset: float = 0.0) -> bool:
    """sup of c1's lifted angles (+offset) below inf of c2's.

    Endpoint coincidence is accepted when a wedge is involved (wedge arcs are
    open half-circles, the endpoint is never attained) and rejected as
    grazing for a cone-cone pair, which the conventions of this package do
    not classify.
    """
    a = c1.arc.alpha_plus + offset
    b = c2.arc.alpha_minus
    if b - a > ARC_TOL:
        return True
    if a - b > ARC_TOL:
        return False
    if c1.kind == KIND_WEDGE or c2.kind == KIND_WEDGE:
        return True
    raise WindingError("arcs share an endpoint (grazing light-like contact)")


def precedes(c1: ConePath, c2: ConePath) -> bool:
    """Partial order on path classes: every lifted angle of c1 below c2's."""
    if not causally_separated(c1, c2):
        raise SeparationError("precedes requires causally separated regions")
    return _arc_below(c1, c2)


def relative_winding(c2: ConePath, c1: ConePath, *, check_separation: bool = True) -> int:
    """The unique n with r(2 pi n) . c1 < c2 < r(2 pi (n+1)) . c1.

    Computed in closed form from the arcs and then verified against both
    defining inequalities; raises WindingError when no integer passes.
    """
    if check_separation and not causally_separated(c1, c2):
        raise SeparationError("relative winding requires causally separated regions")
    gap = c2.arc.alpha_minus - c1.arc.alpha_plus
    n = math.floor((gap + ARC_TOL) / TWO_PI)
    if not _arc_below(c1, c2, TWO_PI * n):
        raise WindingError(f"no valid winding number (candidate n={n} fails r(2pi n)c1 < c2)")
    if not _arc_below(c2, c1, -TWO_PI * (n + 1)):
        raise WindingError(f"no valid winding number (candidate n={n} fails c2 < r(2pi(n+1))c1)")
    return n


def relative_winding_scan(c2: ConePath, c1: ConePath, lo: int = -5, hi: int = 5) -> int:
    """Definition-based oracle: scan integers against both inequalities.

    Independent of the closed-form floor computation; raises WindingError
    unless exactly one candidate passes.
    """
    hits = []
    for n in range(lo, hi + 1):
        try:
            ok = _arc_below(c1, c2, TWO_PI * n) and _arc_below(c2, c1, -TWO_PI * (n + 1))
        except WindingError:
            raise
        if ok:
            hits.append(n)
    if len(hits) != 1:
        raise WindingError(f"definition scan found {len(hits)} candidates in [{lo}, {hi}]")
    return hits[0]


# ---------------------------------------------------------------------------
# group action and reflection
# ---------------------------------------------------------------------------

def _continue_vector_angles(lorentz: CoveringLorentz, vecs: list[np.ndarray],
                            starts: list[float]) -> list[float]:
    """Continue the spatial angles of transported rays along the canonical
    path of ``lorentz``, starting from the given lifted values."""
    theta = lorentz.angle
    b = _sym_log(_sym_boost_part(lorentz.matrix))
    bnorm = float(np.abs(b).max())
    ex = _SymExp(b)
    steps = max(8, int(abs(theta) / 0.5) + 1, int(bnorm / 0.1) + 1)
    arr = np.stack(vecs, axis=1)  # 3 x k
    prev = None
    for _ in range(24):
        ts = np.linspace(0.0, 1.0, steps + 1)
        lifted = np.array(starts, dtype=float)
        prev_ang = None
        ok = True
        for t in ts:
            m = rotation_matrix(t * theta).m @ ex(t)
            w = m @ arr
            ang = np.arctan2(w[2], w[1])
            if prev_ang is None:
                prev_ang = ang
                continue
            d = ang - prev_ang
            d = (d + math.pi) % TWO_PI - math.pi
            if np.abs(d).max() >= math.pi / 4.0:
                ok = False
                break
            lifted += d
            prev_ang = ang
        if ok:
            if prev is not None and np.abs(lifted - prev).max() <= 1e-12:
                return [float(x) for x in lifted]
            prev = lifted.copy()
        steps *= 2
    raise LiftError("direction-angle continuation did not stabilise")


def act(g, path: ConePath) -> ConePath:
    """Natural action of the covering Poincare group on path classes.

    The apex and boundary data transform by the matrix part; the lifted arc
    endpoints are continued along the canonical one-parameter path of g, so
    rotations by 2 pi n shift the arc by 2 pi n rather than acting trivially.
    """
    p = _as_poincare(g)
    lam = p.lorentz.matrix
    apex = p.translation + lam.apply(path.apex)
    normals = tuple(lam.apply(n) for n in path.normals)
    corners = tuple(lam.apply(c) for c in path.corners)

    if p.lorentz.is_pure_rotation():
        arc = path.arc.shifted(p.lorentz.angle)
        return ConePath(apex, arc, path.kind, normals, corners)

    west = path.corners[0].as_array()
    east = path.corners[1].as_array()
    lo, hi = _continue_vector_angles(
        p.lorentz, [west, east], [path.arc.alpha_minus, path.arc.alpha_plus]
    )
    if path.kind == KIND_WEDGE:
        if abs((hi - lo) - math.pi) > LIFT_TOL:
            raise LiftError("wedge arc endpoints drifted apart under transport")
        hi = lo + math.pi
    arc = LiftedArc(lo, hi)
    return ConePath(apex, arc, path.kind, normals, corners)


def reflect_path(path: ConePath, frame: ReferenceFrame = DEFAULT_FRAME) -> ConePath:
    """Canonical action of j = diag(-1,-1,1) on path classes.

    Requires a j-invariant reference cone; lifted angles map orientation-
    reversingly as angle -> c - angle with c fixed by the reference sheet.
    """
    c = frame.reflection_constant()
    apex = reflect_vector(path.apex)
    normals = tuple(reflect_vector(n) for n in path.normals)
    west, east, *rest = path.corners
    corners = (reflect_vector(east), reflect_vector(west),
               *(reflect_vector(v) for v in rest))
    arc = LiftedArc(c - path.arc.alpha_plus, c - path.arc.alpha_minus)
    return ConePath(apex, arc, path.kind, normals, corners)


def rebase(path: ConePath, old_frame: ReferenceFrame, new_frame: ReferenceFrame) -> ConePath:
    """Re-express the lifted-angle data over a new reference direction.

    The connector between the two reference directions is taken to be the
    direct angular sweep (no extra winding), so every arc shifts by the same
    offset and all relative winding numbers are unchanged.  Alternative
    connector windings are obtained by composing with act(r(2 pi k), .).
    """
    offset = new_frame.reference_angle - old_frame.reference_angle
    return replace(path, arc=path.arc.shifted(offset))


def path_within_wedge(path: ConePath, wedge: ConePath, tol: float = 1e-9) -> bool:
    """Whether a path class sits inside a wedge path (region and sheet)."""
    if wedge.kind != KIND_WEDGE:
        raise ValueError("containment target must be a wedge path")
    if path.same_path(wedge, tol):
        return True
    if path.kind != KIND_CONE:
        return False
    if path.arc.alpha_minus < wedge.arc.alpha_minus - tol:
        return False
    if path.arc.alpha_plus > wedge.arc.alpha_plus + tol:
        return False
    rel = path.apex - wedge.apex
    for n in wedge.normals:
        if minkowski_inner(n, rel) < -tol:
            return False
        for corner in path.corners:
            if minkowski_inner(n, corner) < -tol:
                return False
    return True
