"""2+1-dimensional Minkowski algebra and the universal cover of the Lorentz group.

Conventions used throughout the package:

* metric signature (+, -, -);
* a proper orthochronous Lorentz matrix factors uniquely as ``R(theta) @ B``
  with ``R`` a spatial rotation and ``B`` a symmetric positive boost (the
  polar decomposition);
* an element of the universal covering group is the matrix together with the
  polar rotation angle lifted to the real line.  Products are lifted by
  continuation of the polar angle along a canonical one-parameter path of the
  second factor, so rotations by multiples of 2*pi stay distinct from the
  identity.

Exact integers and phases never pass through the float matrices; only the
matrices themselves and the lifted angles are floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

ETA = np.diag([1.0, -1.0, -1.0])
ETA.setflags(write=False)

MAT_TOL = 1e-12
LIFT_TOL = 1e-9
TWO_PI = 2.0 * math.pi

# boost magnitude below which a covering element counts as a pure rotation
_PURE_ROTATION_EPS = 1e-12
# spatial-row magnitude below which the polar angle falls back to the
# rotation-block formula (both branches are then accurate to ~1e-12)
_SMALL_BOOST_EPS = 1e-6


class LiftError(RuntimeError):
    """Continuation of a lifted angle failed to stabilise."""


def wrap_angle(x: float) -> float:
    """Reduce an angle to the branch (-pi, pi]."""
    y = math.fmod(x, TWO_PI)
    if y > math.pi:
        y -= TWO_PI
    elif y <= -math.pi:
        y += TWO_PI
    return y


@dataclass(frozen=True)
class MVec3:
    """A vector in 2+1-dimensional Minkowski space, signature (+, -, -)."""

    x0: float
    x1: float
    x2: float

    @staticmethod
    def from_array(a) -> "MVec3":
        return MVec3(float(a[0]), float(a[1]), float(a[2]))

    def as_array(self) -> np.ndarray:
        return np.array([self.x0, self.x1, self.x2])

    @property
    def components(self) -> tuple[float, float, float]:
        return (self.x0, self.x1, self.x2)

    def __add__(self, other: "MVec3") -> "MVec3":
        return MVec3(self.x0 + other.x0, self.x1 + other.x1, self.x2 + other.x2)

    def __sub__(self, other: "MVec3") -> "MVec3":
        return MVec3(self.x0 - other.x0, self.x1 - other.x1, self.x2 - other.x2)

    def __neg__(self) -> "MVec3":
        return MVec3(-self.x0, -self.x1, -self.x2)

    def scaled(self, s: float) -> "MVec3":
        return MVec3(s * self.x0, s * self.x1, s * self.x2)


ZERO_VEC = MVec3(0.0, 0.0, 0.0)


def minkowski_inner(u: MVec3, v: MVec3) -> float:
    """u.v with signature (+,-,-); space-like unit vectors have u.u = -1."""
    return u.x0 * v.x0 - u.x1 * v.x1 - u.x2 * v.x2


def minkowski_norm2(u: MVec3) -> float:
    return minkowski_inner(u, u)


class LorentzMatrix:
    """A proper orthochronous Lorentz matrix.

    Validated on construction: ``L^T eta L = eta`` within tolerance,
    ``det L = 1`` and ``L[0,0] >= 1``.
    """

    __slots__ = ("m",)

    def __init__(self, m) -> None:
        m = np.asarray(m, dtype=float)
        if m.shape != (3, 3):
            raise ValueError("Lorentz matrix must be 3x3")
        scale = max(1.0, float(np.abs(m).max()) ** 2)
        err = np.abs(m.T @ ETA @ m - ETA).max()
        if err > MAT_TOL * scale:
            raise ValueError(f"matrix does not preserve the metric (residual {err:.3e})")
        if abs(np.linalg.det(m) - 1.0) > 1e-9 * scale:
            raise ValueError("matrix is not proper (det != 1)")
        if m[0, 0] < 1.0 - 1e-9:
            raise ValueError("matrix is not orthochronous (L00 < 1)")
        m = m.copy()
        m.setflags(write=False)
        object.__setattr__(self, "m", m)

    @staticmethod
    def identity() -> "LorentzMatrix":
        return LorentzMatrix(np.eye(3))

    def __matmul__(self, other: "LorentzMatrix") -> "LorentzMatrix":
        return LorentzMatrix(self.m @ other.m)

    def inverse(self) -> "LorentzMatrix":
        # L^-1 = eta L^T eta for Lorentz matrices
        return LorentzMatrix(ETA @ self.m.T @ ETA)

    def apply(self, v: MVec3) -> MVec3:
        return MVec3.from_array(self.m @ v.as_array())

    def is_close(self, other: "LorentzMatrix", tol: float = MAT_TOL) -> bool:
        return bool(np.abs(self.m - other.m).max() <= tol)

    def __repr__(self) -> str:
        rows = "; ".join(", ".join(f"{x:.6g}" for x in row) for row in self.m)
        return f"LorentzMatrix([{rows}])"


def rotation_matrix(theta: float) -> LorentzMatrix:
    c, s = math.cos(theta), math.sin(theta)
    return LorentzMatrix([[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]])


def boost1_matrix(t: float) -> LorentzMatrix:
    ch, sh = math.cosh(t), math.sinh(t)
    return LorentzMatrix([[ch, sh, 0.0], [sh, ch, 0.0], [0.0, 0.0, 1.0]])


def _polar_angle_raw(m: np.ndarray) -> float:
    # For L = R(theta) B with B symmetric positive: row 0 of L is row 0 of B,
    # column 0 is R applied to it, so theta is the angle between the two
    # spatial pairs.  Falls back to the rotation block for tiny boosts.
    r = math.hypot(m[0, 1], m[0, 2])
    if r > _SMALL_BOOST_EPS:
        return wrap_angle(math.atan2(m[2, 0], m[1, 0]) - math.atan2(m[0, 2], m[0, 1]))
    return math.atan2(m[2, 1], m[1, 1])


def polar_rotation_angle(L: LorentzMatrix) -> float:
    """Angle in (-pi, pi] of the rotation factor in the polar decomposition."""
    return _polar_angle_raw(L.m)


def _sym_boost_part(L: LorentzMatrix) -> np.ndarray:
    """The symmetric positive factor B with L = R(theta(L)) @ B."""
    theta = _polar_angle_raw(L.m)
    return rotation_matrix(-theta).m @ L.m


def _sym_log(B: np.ndarray) -> np.ndarray:
    w, V = np.linalg.eigh(B)
    if np.any(w <= 0.0):
        raise ValueError("boost factor is not positive definite")
    return V @ np.diag(np.log(w)) @ V.T


class _SymExp:
    """Reusable exp(t*b) for a fixed symmetric generator b."""

    def __init__(self, b: np.ndarray) -> None:
        self.w, self.V = np.linalg.eigh(b)

    def __call__(self, t: float) -> np.ndarray:
        return self.V @ np.diag(np.exp(t * self.w)) @ self.V.T


@dataclass(frozen=True)
class CoveringLorentz:
    """Element of the universal cover: matrix plus lifted polar rotation angle."""

    matrix: LorentzMatrix
    angle: float

    def __post_init__(self) -> None:
        base = polar_rotation_angle(self.matrix)
        # the polar angle of a float matrix is determined only up to
        # eps * cond(boost)^2, so the check loosens for extreme boosts
        scale = max(1.0, float(np.abs(self.matrix.m).max()) ** 2)
        tol = max(1e-6, 1e-13 * scale)
        if abs(wrap_angle(self.angle - base)) > tol:
            raise ValueError(
                f"lifted angle {self.angle} does not project to the polar angle {base}"
            )

    @staticmethod
    def identity() -> "CoveringLorentz":
        return CoveringLorentz(LorentzMatrix.identity(), 0.0)

    def is_pure_rotation(self, tol: float = _PURE_ROTATION_EPS) -> bool:
        return bool(np.abs(_sym_boost_part(self.matrix) - np.eye(3)).max() <= tol)

    def is_close(self, other: "CoveringLorentz", tol: float = LIFT_TOL) -> bool:
        return self.matrix.is_close(other.matrix, max(tol, MAT_TOL)) and abs(
            self.angle - other.angle
        ) <= tol

    def __repr__(self) -> str:
        return f"CoveringLorentz(angle={self.angle:.6g}, {self.matrix!r})"


@dataclass(frozen=True)
class CoveringPoincare:
    """Translation plus covering Lorentz part, composed semidirectly."""

    translation: MVec3
    lorentz: CoveringLorentz

    @staticmethod
    def identity() -> "CoveringPoincare":
        return CoveringPoincare(ZERO_VEC, CoveringLorentz.identity())

    def is_close(self, other: "CoveringPoincare", tol: float = LIFT_TOL) -> bool:
        d = self.translation - other.translation
        return (
            max(abs(d.x0), abs(d.x1), abs(d.x2)) <= tol
            and self.lorentz.is_close(other.lorentz, tol)
        )

    def apply(self, x: MVec3) -> MVec3:
        return self.translation + self.lorentz.matrix.apply(x)


def cover_rotation(angle: float) -> CoveringLorentz:
    """One-parameter rotation subgroup; cover_rotation(2*pi) is not the identity."""
    return CoveringLorentz(rotation_matrix(angle), angle)


def cover_boost1(t: float) -> CoveringLorentz:
    """Boost along the x1 axis; lifted angle 0."""
    return CoveringLorentz(boost1_matrix(t), 0.0)


def cover_translation(a: MVec3) -> CoveringPoincare:
    return CoveringPoincare(a, CoveringLorentz.identity())


def canonical_path(g: CoveringLorentz):
    """Path t -> Lambda(t), t in [0, 1], from the identity to g.matrix whose
    polar-angle lift runs from 0 to g.angle.

    The path is R(t * angle) @ exp(t * log(B)) with B the boost factor.
    """
    b = _sym_log(_sym_boost_part(g.matrix))
    ex = _SymExp(b)
    theta = g.angle

    def path(t: float) -> np.ndarray:
        return rotation_matrix(t * theta).m @ ex(t)

    return path


def continue_polar_angle(path_fn, start: float, *, initial_steps: int = 16,
                         max_steps: int = 1 << 20) -> float:
    """Continue the polar rotation angle along ``path_fn`` starting at the
    lifted value ``start`` (which must project onto the angle of path_fn(0)).

    Steps are halved until every increment is below pi/4 and the endpoint is
    stable; raises LiftError if the subdivision underflows.
    """
    steps = initial_steps
    prev_end = None
    while steps <= max_steps:
        ts = np.linspace(0.0, 1.0, steps + 1)
        angs = [_polar_angle_raw(np.asarray(path_fn(t))) for t in ts]
        end = start
        ok = True
        for k in range(steps):
            d = wrap_angle(angs[k + 1] - angs[k])
            if abs(d) >= math.pi / 4.0:
                ok = False
                break
            end += d
        if ok:
            if prev_end is not None and abs(end - prev_end) <= 1e-12 * max(1.0, abs(end)):
                return end
            prev_end = end
        steps *= 2
    raise LiftError("polar-angle continuation did not stabilise (step-size underflow)")


def _renormalize(m: np.ndarray) -> np.ndarray:
    """Minkowski Gram-Schmidt on the columns; keeps accumulated float drift
    out of long composition chains so products stay Lorentz to 1e-12."""
    def inner(u, v):
        return u[0] * v[0] - u[1] * v[1] - u[2] * v[2]

    c0, c1, c2 = m[:, 0], m[:, 1], m[:, 2]
    n0 = inner(c0, c0)
    if n0 <= 0.0:
        # the timelike column has degenerated to null in floats
        raise ValueError("boost too extreme to renormalise in double precision")
    u0 = c0 / math.sqrt(n0)
    u1 = c1 - inner(c1, u0) * u0
    n1 = -inner(u1, u1)
    u2 = c2 - inner(c2, u0) * u0
    if n1 <= 0.0:
        raise ValueError("boost too extreme to renormalise in double precision")
    u1 = u1 / math.sqrt(n1)
    u2 = u2 + inner(u2, u1) * u1
    n2 = -inner(u2, u2)
    if n2 <= 0.0:
        raise ValueError("boost too extreme to renormalise in double precision")
    u2 = u2 / math.sqrt(n2)
    return np.stack([u0, u1, u2], axis=1)


def _compose_lorentz(g1: CoveringLorentz, g2: CoveringLorentz) -> CoveringLorentz:
    m = LorentzMatrix(_renormalize(g1.matrix.m @ g2.matrix.m))
    # If either factor is a pure rotation the lift is exactly additive.
    if g1.is_pure_rotation() or g2.is_pure_rotation():
        return CoveringLorentz(m, g1.angle + g2.angle)
    p2 = canonical_path(g2)
    m1 = g1.matrix.m

    lifted = continue_polar_angle(lambda t: m1 @ p2(t), g1.angle)
    return CoveringLorentz(m, lifted)


def cover_compose(g1, g2):
    """Product in the universal cover.

    Accepts CoveringLorentz or CoveringPoincare arguments; the result is a
    CoveringPoincare unless both inputs are CoveringLorentz.
    """
    if isinstance(g1, CoveringLorentz) and isinstance(g2, CoveringLorentz):
        return _compose_lorentz(g1, g2)
    p1 = _as_poincare(g1)
    p2 = _as_poincare(g2)
    trans = p1.translation + p1.lorentz.matrix.apply(p2.translation)
    return CoveringPoincare(trans, _compose_lorentz(p1.lorentz, p2.lorentz))


def _as_poincare(g) -> CoveringPoincare:
    if isinstance(g, CoveringPoincare):
        return g
    if isinstance(g, CoveringLorentz):
        return CoveringPoincare(ZERO_VEC, g)
    raise TypeError(f"expected a covering group element, got {type(g).__name__}")


def cover_inverse(g):
    """Inverse in the universal cover."""
    if isinstance(g, CoveringPoincare):
        inv_l = cover_inverse(g.lorentz)
        return CoveringPoincare(inv_l.matrix.apply(-g.translation), inv_l)
    minv = g.matrix.inverse()
    if g.is_pure_rotation():
        return CoveringLorentz(minv, -g.angle)
    # reversed path Lambda^-1 P(1-t) runs from the identity to Lambda^-1
    p = canonical_path(g)
    m = minv.m
    lifted = continue_polar_angle(lambda t: m @ p(1.0 - t), 0.0)
    return CoveringLorentz(minv, lifted)


_J_MAT = np.diag([-1.0, -1.0, 1.0])
_J_MAT.setflags(write=False)


def reflect_vector(x: MVec3) -> MVec3:
    """Apply j = diag(-1,-1,1), the reflection at the edge of the standard wedge."""
    return MVec3(-x.x0, -x.x1, x.x2)


def reflect_conjugate(g):
    """The unique lift of Ad(j) to the universal cover: j g j.

    Rotations have their lifted angle negated, boosts along x1 are fixed; the
    map is a continuous involutive automorphism.
    """
    if isinstance(g, CoveringPoincare):
        return CoveringPoincare(reflect_vector(g.translation), reflect_conjugate(g.lorentz))
    m = LorentzMatrix(_J_MAT @ g.matrix.m @ _J_MAT)
    return CoveringLorentz(m, -g.angle)
