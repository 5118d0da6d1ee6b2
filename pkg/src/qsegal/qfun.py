"""The q-Gaussian measure, q-Hermite polynomials and their generating kernels.

Everything here is one-dimensional analysis: the density and quadrature of
the compactly supported measure interpolating Bernoulli (q=-1), semicircle
(q=0) and Gaussian (q->1), the monic orthogonal polynomials H_n^{q,t} with
recurrence H_{n+1} = x H_n - t [n]_q H_{n-1}, the bilinear generating
function Lambda (the q-Mehler kernel) in product and series form, and the
two-parameter kernel Gamma_q^{s,t} together with its ellipse of analyticity.

Infinite products are truncated at the first index k with |q|^k below
PRODUCT_TOL, which bounds the truncation error geometrically; the measure
routines reject |q| > Q_MAX where that convergence degrades.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import combinat
from .exactnum import is_exact, zero_like

#: accuracy guard for density/quadrature; the theta-products converge like
#: q^k and become useless close to |q| = 1.
Q_MAX = 0.95

#: infinite products are cut at the first k with |q|^k < PRODUCT_TOL.
PRODUCT_TOL = 1e-15


@dataclass(frozen=True)
class QMeasureParams:
    """Deformation q in (-1,1) and variance t > 0 of the measure."""

    q: float
    t: float = 1.0

    def __post_init__(self):
        if not -1.0 < self.q < 1.0:
            raise ValueError(f"q must lie in (-1, 1), got {self.q}")
        if not self.t > 0:
            raise ValueError(f"variance t must be positive, got {self.t}")

    @property
    def support_radius(self) -> float:
        return 2.0 * math.sqrt(self.t) / math.sqrt(1.0 - self.q)


def _check_q_accuracy(q: float) -> None:
    if abs(q) > Q_MAX:
        raise ValueError(
            f"|q| = {abs(q)} exceeds Q_MAX = {Q_MAX}; the truncated products "
            "are no longer trustworthy this close to |q| = 1"
        )


def _product_cutoff(q: float) -> int:
    aq = abs(q)
    if aq < PRODUCT_TOL:
        return 1
    return max(1, int(math.log(PRODUCT_TOL) / math.log(aq)) + 2)


def density(x: float, p: QMeasureParams) -> float:
    """Density of the q-Gaussian measure of variance t at x.

    Zero outside [-R, R] with R = 2 sqrt(t)/sqrt(1-q); inside, the theta
    product form with x = R cos(theta).
    """
    _check_q_accuracy(p.q)
    if not math.isfinite(x):
        raise ValueError("x must be finite")
    r = p.support_radius
    if abs(x) >= r:
        return 0.0
    theta = math.acos(x / r)
    return _theta_weight(theta, p.q) / (r * math.sin(theta))


def _theta_weight(theta: float, q: float) -> float:
    """Weight of the measure after x = R cos(theta): (2/pi) sin^2 * product."""
    w = (2.0 / math.pi) * math.sin(theta) ** 2
    cos2t = math.cos(2.0 * theta)
    qn = q
    for _ in range(_product_cutoff(q)):
        w *= (1.0 - qn) * (1.0 - 2.0 * qn * cos2t + qn * qn)
        qn *= q
    return w


# ---------------------------------------------------------------------------
# q-Hermite polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QHermitePoly:
    """Monic q-Hermite polynomial in the monomial basis (ascending coeffs)."""

    n: int
    q: object
    t: object
    coeffs: tuple

    def __call__(self, x):
        acc = zero_like(x, *self.coeffs)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def hermite(n: int, q, t) -> QHermitePoly:
    """H_n^{q,t} from the three-term recurrence, exact for rational q, t.

    t may be negative: the recurrence is applied verbatim, which is how the
    polynomials with parameter s - t enter the s < t transform regime.
    """
    if n < 0:
        raise ValueError("hermite requires n >= 0")
    return QHermitePoly(n, q, t, tuple(hermite_coeffs(n, q, t)))


def hermite_coeffs(n: int, q, t) -> list:
    one = Fraction(1) if is_exact(q) and is_exact(t) else 1.0
    prev = [one]          # H_0
    if n == 0:
        return prev
    cur = [one * 0, one]  # H_1 = x
    for k in range(1, n):
        nxt = [one * 0] + cur                    # x * H_k
        coef = t * combinat.q_int(k, q)
        for i, c in enumerate(prev):             # - t [k]_q H_{k-1}
            nxt[i] = nxt[i] - coef * c
        prev, cur = cur, nxt
    return cur


def poly_eval(coeffs, x):
    acc = zero_like(x, *coeffs)
    for c in reversed(list(coeffs)):
        acc = acc * x + c
    return acc


# ---------------------------------------------------------------------------
# ellipse of analyticity
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EllipseDomain:
    """Ellipse (or disk) on which the transformed functions are analytic."""

    semi_major: float
    semi_minor: float
    major_axis_direction: str  # "real-axis" or "imaginary-axis"

    def __post_init__(self):
        if not self.semi_major >= self.semi_minor > 0:
            raise ValueError("requires semi_major >= semi_minor > 0")
        if self.major_axis_direction not in ("real-axis", "imaginary-axis"):
            raise ValueError("unknown axis direction")

    @property
    def is_disk(self) -> bool:
        return self.semi_major == self.semi_minor

    @property
    def real_semi_axis(self) -> float:
        if self.major_axis_direction == "real-axis":
            return self.semi_major
        return self.semi_minor

    @property
    def imag_semi_axis(self) -> float:
        if self.major_axis_direction == "real-axis":
            return self.semi_minor
        return self.semi_major

    def contains(self, z: complex, strict: bool = True, tol: float = 1e-12) -> bool:
        z = complex(z)
        u = (z.real / self.real_semi_axis) ** 2 + (z.imag / self.imag_semi_axis) ** 2
        return u < 1.0 if strict else u <= 1.0 + tol


def ellipse_domain(q: float, s: float, t: float) -> EllipseDomain:
    """Domain of analyticity of the two-parameter transform.

    Semi-axes (2s-t)/(sqrt(s) sqrt(1-q)) along the real direction and
    t/(sqrt(s) sqrt(1-q)) along the imaginary one; for s > t the real axis is
    the major one, for s < t the imaginary one, and s = t gives the disk of
    radius sqrt(t/(1-q)).
    """
    if not (s > t / 2.0 > 0):
        raise ValueError(f"requires s > t/2 > 0, got s={s}, t={t}")
    if not -1.0 < q < 1.0:
        raise ValueError(f"q must lie in (-1, 1), got {q}")
    denom = math.sqrt(s) * math.sqrt(1.0 - q)
    along_real = (2.0 * s - t) / denom
    along_imag = t / denom
    if along_real >= along_imag:
        return EllipseDomain(along_real, along_imag, "real-axis")
    return EllipseDomain(along_imag, along_real, "imaginary-axis")


def mehler_domain(r: complex) -> EllipseDomain:
    """Ellipse (real major axis) to which the y-argument of Lambda continues."""
    ar = abs(r)
    if not 0.0 < ar < 1.0:
        raise ValueError("requires 0 < |r| < 1")
    return EllipseDomain(0.5 * (1.0 / ar + ar), 0.5 * (1.0 / ar - ar), "real-axis")


# ---------------------------------------------------------------------------
# q-Mehler kernel Lambda
# ---------------------------------------------------------------------------

def _check_mehler_r(r: complex) -> complex:
    r = complex(r)
    if not 0.0 < abs(r) < 1.0:
        raise ValueError(f"requires 0 < |r| < 1, got |r| = {abs(r)}")
    if min(abs(r.real), abs(r.imag)) > 1e-12 * abs(r):
        raise ValueError("r must be real or purely imaginary")
    return r


def mehler(r: complex, x: float, y: complex, q: float) -> complex:
    """Product form of the bilinear continuous-q-Hermite generating function.

    Arguments: 0 < |r| < 1 real or purely imaginary, x in [-1, 1], y anywhere
    in the closed ellipse with semi-axes (1/|r| +- |r|)/2.
    """
    r = _check_mehler_r(r)
    if not -1.0 <= x <= 1.0:
        raise ValueError(f"x must lie in [-1, 1], got {x}")
    y = complex(y)
    if not mehler_domain(r).contains(y, strict=False, tol=1e-9):
        raise ValueError("y lies outside the closed analyticity ellipse")
    return _mehler_unchecked(r, x, y, q)


def _mehler_factor(r: complex, x: float, y: complex, qk: float) -> complex:
    # middle coefficient 2 r^2 q^{2k} (2x^2 + 2y^2 - 1); see the analytic
    # continuation root locus, which this factor reproduces exactly
    rq = r * qk
    return (
        1.0
        - 4.0 * rq * x * y
        + 2.0 * rq * rq * (2.0 * x * x + 2.0 * y * y - 1.0)
        - 4.0 * rq * rq * rq * x * y
        + rq ** 4
    )


def mehler_series(r: complex, x: float, y: complex, q: float,
                  tol: float = 1e-14, max_terms: int = 400) -> complex:
    """Series form sum_k h_k(x) h_k(y) r^k / (q;q)_k of the same kernel.

    h_k is the continuous q-Hermite family h_{k+1} = 2u h_k - (1-q^k) h_{k-1}.
    Only valid where the series converges; used as a mutual oracle for the
    product form.
    """
    r = _check_mehler_r(r)
    hx_prev, hx = 1.0, 2.0 * x
    hy_prev, hy = 1.0 + 0.0j, 2.0 * complex(y)
    pochhammer = 1.0
    acc = 1.0 + 0.0j
    rk = 1.0 + 0.0j
    qk = 1.0
    small = 0
    for k in range(1, max_terms):
        rk *= r
        qk *= q
        pochhammer *= 1.0 - qk
        term = hx * hy * rk / pochhammer
        acc += term
        if abs(term) < tol * (1.0 + abs(acc)):
            small += 1
            if small >= 4:
                return acc
        else:
            small = 0
        hx, hx_prev = 2.0 * x * hx - (1.0 - qk) * hx_prev, hx
        hy, hy_prev = 2.0 * y * hy - (1.0 - qk) * hy_prev, hy
    raise ArithmeticError("mehler series did not converge; y too close to the boundary")


def continuous_hermite_coeffs(n: int, q) -> list:
    """Coefficients of h_n (continuous q-Hermite), exact for rational q."""
    one = Fraction(1) if is_exact(q) else 1.0
    prev = [one]
    if n == 0:
        return prev
    cur = [one * 0, 2 * one]
    qk = one * q
    for _ in range(1, n):
        nxt = [one * 0] + [2 * c for c in cur]
        coef = one - qk
        for i, c in enumerate(prev):
            nxt[i] = nxt[i] - coef * c
        prev, cur = cur, nxt
        qk *= q
    return cur


def mehler_zero_locus(r: complex, x: float, q: float, k: int = 0,
                      sign: int = 1) -> complex:
    """The y root of the k-th product factor, for real or imaginary r."""
    r = _check_mehler_r(r)
    rq = abs(r) * abs(q) ** k
    phi1 = 1.0 / rq + rq
    phi2 = 1.0 / rq - rq
    root = math.sqrt(max(0.0, 1.0 - x * x))
    if abs(r.imag) <= abs(r.real):      # real r
        return 0.5 * (phi1 * x + sign * 1j * phi2 * root)
    return 0.5 * (sign * phi1 * root - 1j * phi2 * x)


# ---------------------------------------------------------------------------
# two-parameter generating kernel Gamma_q^{s,t}
# ---------------------------------------------------------------------------

def gamma_kernel(x: float, z: complex, q: float, s: float, t: float) -> complex:
    """Gamma_q^{s,t}(x, z) via the Lambda product form.

    Requires |x| <= 2 sqrt(s)/sqrt(1-q) and z inside the closed ellipse of
    analyticity.  For s = t this is the one-parameter product
    prod_k t / (t - (1-q) q^k z x + (1-q) q^{2k} z^2).
    """
    if not (s > t / 2.0 > 0):
        raise ValueError(f"requires s > t/2 > 0, got s={s}, t={t}")
    if abs(x) > 2.0 * math.sqrt(s) / math.sqrt(1.0 - q) * (1 + 1e-12):
        raise ValueError("x outside the support of the variance-s measure")
    z = complex(z)
    if not ellipse_domain(q, s, t).contains(z, strict=False, tol=1e-9):
        raise ValueError("z outside the closed analyticity ellipse")
    if s == t:
        acc = 1.0 + 0.0j
        qk = 1.0
        for _ in range(_product_cutoff(q) + 1):
            acc *= t / (t - (1.0 - q) * qk * z * x + (1.0 - q) * qk * qk * z * z)
            qk *= q
        return acc
    r = cmath.sqrt(1.0 - t / s)
    u = x * math.sqrt(1.0 - q) / (2.0 * math.sqrt(s))
    v = z * math.sqrt(1.0 - q) / (2.0 * cmath.sqrt(complex(s - t)))
    return _mehler_unchecked(r, u, v, q)


def _mehler_unchecked(r: complex, x: complex, y: complex, q: float) -> complex:
    num = 1.0 + 0.0j
    den = 1.0 + 0.0j
    qk = 1.0
    r2 = r * r
    for _ in range(_product_cutoff(q) + 1):
        num *= 1.0 - r2 * qk
        den *= _mehler_factor(r, x, y, qk)
        qk *= q
    return num / den


def gamma_kernel_series(x: float, z: complex, q: float, s: float, t: float,
                        tol: float = 1e-13, max_terms: int = 300) -> complex:
    """Truncated series sum_k H_k^{q,s-t}(z) H_k^{q,s}(x) / (s^k [k]_q!).

    Converges on a smaller region than the product form; serves as the
    independent oracle for it.
    """
    acc = 0.0 + 0.0j
    hz_prev, hz = 0.0j, 1.0 + 0.0j          # H_{k-1}, H_k at z, parameter s-t
    hx_prev, hx = 0.0, 1.0                  # at x, parameter s
    z = complex(z)
    sk = 1.0
    qfact = 1.0
    small = 0
    for k in range(max_terms):
        term = hz * hx / (sk * qfact)
        acc += term
        if k > 2 and abs(term) < tol * (1.0 + abs(acc)):
            small += 1
            if small >= 4:
                return acc
        else:
            small = 0
        nk = combinat.q_int(k, float(q))
        hz, hz_prev = z * hz - (s - t) * nk * hz_prev, hz
        hx, hx_prev = x * hx - s * nk * hx_prev, hx
        sk *= s
        qfact *= combinat.q_int(k + 1, float(q))
    raise ArithmeticError("gamma series did not converge at this (x, z)")


# ---------------------------------------------------------------------------
# quadrature against the measure
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuadratureRule:
    """Nodes strictly inside the support and positive weights of total mass 1."""

    params: QMeasureParams
    nodes: np.ndarray
    weights: np.ndarray

    def integrate(self, f) -> complex:
        values = np.array([f(x) for x in self.nodes])
        return values @ self.weights

    def integrate_values(self, values: np.ndarray):
        return np.asarray(values) @ self.weights

    def integrate_poly(self, coeffs) -> complex:
        values = np.polynomial.polynomial.polyval(
            self.nodes, np.array([complex(c) for c in coeffs])
        )
        return values @ self.weights


def quadrature(p: QMeasureParams, n_nodes: int) -> QuadratureRule:
    """Fixed-size rule: Gauss-Legendre in theta after x = R cos(theta).

    The substitution makes the integrand smooth in theta, so the rule
    integrates moderate-degree polynomials against the measure essentially to
    machine precision once n_nodes is large enough.
    """
    _check_q_accuracy(p.q)
    if n_nodes < 2:
        raise ValueError("quadrature needs at least 2 nodes")
    gl_x, gl_w = np.polynomial.legendre.leggauss(n_nodes)
    theta = 0.5 * math.pi * (gl_x + 1.0)
    weights = 0.5 * math.pi * gl_w * np.array([_theta_weight(th, p.q) for th in theta])
    nodes = p.support_radius * np.cos(theta)
    return QuadratureRule(p, nodes, weights)


def auto_quadrature(p: QMeasureParams, max_degree: int = 12,
                    tol: float = 1e-10) -> QuadratureRule:
    """Double the node count until the moment vector (n <= max_degree) settles."""
    n = 64
    rule = quadrature(p, n)
    prev = _moment_vector(rule, max_degree)
    while n < 8192:
        n *= 2
        rule = quadrature(p, n)
        cur = _moment_vector(rule, max_degree)
        if np.max(np.abs(cur - prev)) < tol:
            return rule
        prev = cur
    raise ArithmeticError("quadrature did not stabilize; parameters too extreme")


def _moment_vector(rule: QuadratureRule, max_degree: int) -> np.ndarray:
    powers = np.vstack([rule.nodes ** k for k in range(max_degree + 1)])
    return powers @ rule.weights


def moment(n: int, q, t):
    """Exact moment t^{n/2} sum_pi q^{cr(pi)}; zero for odd n.

    Exact rationals when q and t are rational; enumeration capped at n = 16.
    """
    if n < 0:
        raise ValueError("moment requires n >= 0")
    if n > combinat.MAX_GROUND_SET:
        raise ValueError(f"moment order {n} exceeds the enumeration cap")
    if n % 2:
        return zero_like(q, t)
    hist = combinat.crossing_number_distribution(n)
    acc = Fraction(0) if is_exact(q) else 0.0
    qc = Fraction(1) if is_exact(q) else 1.0
    for count in hist:
        acc += count * qc
        qc *= q
    tpow = (Fraction(t) if is_exact(t) else t) ** (n // 2)
    return acc * tpow
