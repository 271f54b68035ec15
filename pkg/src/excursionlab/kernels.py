"""Green's functions, harmonic-measure densities and boundary Poisson kernels.

Domains covered: the unit disk, the annulus ``rho < |z| < 1`` and the
rectangle ``(-l, l) x (0, pi)``.  Everything is closed form or a rapidly
convergent series; no Monte Carlo lives here (the MC oracles that validate
these formulas live in :mod:`excursionlab.mc` and the test suite).

Normalization conventions, pinned once and used consistently everywhere:

* ``green_disk(x, y)`` is the expected-occupation density of standard planar
  Brownian motion started at ``x`` and killed on exiting the disk::

      G(x, y) = (1/pi) * log( |1 - x*conj(y)| / |x - y| )

  so ``integral_U G(x, y) dA(y) = E_x[exit time] = (1 - |x|^2) / 2``.

* ``harmonic_density_disk(x, y)`` is the exit-point density with respect to
  boundary arclength, ``(1 - |x|^2) / (2 pi |x - y|^2)``; integrates to 1.

* Boundary kernels between boundary points u, v of a domain D are::

      K^D(u, v) = lim_{s -> 0}  s^-1 * (harmonic density at v from u + s*n_u)

  with ``n_u`` the inward normal.  In the disk this gives
  ``K(x, y) = 1 / (pi |x - y|^2)``.  Because every boundary kernel in this
  module uses the same limit, ratios such as ``annulus_outer_kernel /
  boundary_kernel_disk`` are exact avoidance probabilities for excursions.

With these conventions the first/last hitting-pair density of an excursion
from x to y (conditioned to reach the inner disk of radius rho) is::

    g(x', y') = K^A(x, x') G(x', y') K^A(y, y') / (2 * (K(x,y) - K^A(x,y)))

The factor 2 in the denominator is forced by the occupation normalization of
G (harmonic density equals half the inward normal derivative of G); the test
suite checks the identity by quadrature.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .errors import CoincidentPointsError, DomainError, SeriesConvergenceError

COINCIDENT_TOL = 1e-9
BOUNDARY_TOL = 1e-12
_SERIES_RTOL = 1e-12
_SERIES_CAP = 20000
ANNULUS_RHO_MAX = 0.95


def _as_complex(z) -> complex:
    return complex(z)


def _check_interior(z: complex, name: str) -> complex:
    z = _as_complex(z)
    if abs(z) >= 1.0 - 1e-12:
        raise DomainError(f"{name}={z} must lie strictly inside the unit disk")
    return z


def _check_boundary(z: complex, name: str) -> complex:
    z = _as_complex(z)
    if abs(abs(z) - 1.0) > 1e-9:
        raise DomainError(f"{name}={z} must lie on the unit circle")
    return z / abs(z)


def _check_distinct(x: complex, y: complex) -> None:
    if abs(x - y) < COINCIDENT_TOL:
        raise CoincidentPointsError(
            f"points {x} and {y} closer than {COINCIDENT_TOL}"
        )


def green_disk(x, y) -> float:
    """Occupation-density Green's function of the unit disk.

    ``G(x, y) = (1/pi) log(|1 - x conj(y)| / |x - y|)``; symmetric, zero on
    the boundary, logarithmically divergent as ``y -> x``.
    """
    x = _check_interior(x, "x")
    y = _check_interior(y, "y")
    _check_distinct(x, y)
    return math.log(abs(1.0 - x * y.conjugate()) / abs(x - y)) / math.pi


def harmonic_density_disk(x, y) -> float:
    """Harmonic-measure (exit-point) density at boundary point y seen from x."""
    x = _check_interior(x, "x")
    y = _check_boundary(y, "y")
    return (1.0 - abs(x) ** 2) / (2.0 * math.pi * abs(x - y) ** 2)


def boundary_kernel_disk(x, y) -> float:
    """Boundary Poisson kernel of the disk, ``1 / (pi |x - y|^2)``."""
    x = _check_boundary(x, "x")
    y = _check_boundary(y, "y")
    _check_distinct(x, y)
    return 1.0 / (math.pi * abs(x - y) ** 2)


def rect_boundary_kernel(l: float, y1: float, y2: float) -> float:
    """Boundary kernel of the rectangle (-l, l) x (0, pi) between its ends.

    Dirichlet sine series in the vertical coordinate::

        K^R(y1, y2) = (2/pi) * sum_n  n sin(n y1) sin(n y2) / sinh(2 n l)

    Terms are summed until they drop below 1e-12 of the leading mode.
    """
    if l < 1.0:
        raise DomainError(f"rectangle half-length l={l} must be >= 1")
    if not (0.0 < y1 < math.pi and 0.0 < y2 < math.pi):
        raise DomainError("end heights must lie in (0, pi)")
    lead = 1.0 / math.sinh(2.0 * l)
    total = 0.0
    for n in range(1, _SERIES_CAP + 1):
        arg = 2.0 * n * l
        # sinh overflows near arg ~ 710; beyond that the term is ~ 2n*exp(-arg)
        term_mag = n / math.sinh(arg) if arg < 700.0 else 2.0 * n * math.exp(-arg)
        total += term_mag * math.sin(n * y1) * math.sin(n * y2)
        if term_mag < _SERIES_RTOL * lead:
            return 2.0 * total / math.pi
    raise SeriesConvergenceError(
        f"rectangle series tail bound not met after {_SERIES_CAP} terms (l={l})"
    )


def _check_rho(rho: float) -> float:
    rho = float(rho)
    if not (0.0 < rho < 1.0):
        raise DomainError(f"inner radius rho={rho} must lie in (0, 1)")
    if rho > ANNULUS_RHO_MAX:
        raise SeriesConvergenceError(
            f"annulus series supported for rho <= {ANNULUS_RHO_MAX}, got {rho}"
        )
    return rho


def annulus_boundary_kernel(rho: float, x, xp) -> float:
    """Annulus kernel between outer point x (|x|=1) and inner point xp (|xp|=rho).

    Fourier series in the angular coordinate::

        K^A(x, xp) = (1/(2 pi rho)) * [ 1/log(1/rho)
                     + sum_n 4 n cos(n dtheta) / (rho^-n - rho^n) ]

    This is the s^-1 limit at x of the harmonic density on the inner circle,
    i.e. the entry-point kernel used in the hitting-pair density.
    """
    rho = _check_rho(rho)
    x = _check_boundary(x, "x")
    xp = _as_complex(xp)
    if abs(abs(xp) - rho) > 1e-9:
        raise DomainError(f"xp={xp} must lie on the inner circle of radius {rho}")
    dtheta = cmath.phase(xp / rho / x)
    h = math.log(1.0 / rho)
    total = 1.0 / h
    for n in range(1, _SERIES_CAP + 1):
        denom = rho ** (-n) - rho ** n
        term = 4.0 * n / denom
        total += term * math.cos(n * dtheta)
        if term < _SERIES_RTOL / h:
            return total / (2.0 * math.pi * rho)
    raise SeriesConvergenceError(
        f"annulus inner-kernel series did not converge for rho={rho}"
    )


def annulus_outer_kernel(rho: float, x, y) -> float:
    """Annulus kernel between two outer-circle points x, y (both |.|=1).

    Written as the disk kernel minus a convergent correction::

        K^A(x, y) = K(x, y) - (1/(2 pi)) * [ 1/log(1/rho)
                    + sum_n 4 n rho^(2n) cos(n dtheta) / (1 - rho^(2n)) ]

    The correction is exactly the hitting part ``K - K^A`` (mass of
    excursions from x to y that reach the inner disk).
    """
    rho = _check_rho(rho)
    x = _check_boundary(x, "x")
    y = _check_boundary(y, "y")
    _check_distinct(x, y)
    return boundary_kernel_disk(x, y) - hitting_kernel(rho, x, y)


def hitting_kernel(rho: float, x, y) -> float:
    """Mass kernel ``K(x,y) - K^A(x,y)`` of excursions that reach ``|z| <= rho``."""
    rho = _check_rho(rho)
    x = _check_boundary(x, "x")
    y = _check_boundary(y, "y")
    _check_distinct(x, y)
    dtheta = cmath.phase(y / x)
    h = math.log(1.0 / rho)
    total = 1.0 / h
    for n in range(1, _SERIES_CAP + 1):
        r2n = rho ** (2 * n)
        term = 4.0 * n * r2n / (1.0 - r2n)
        total += term * math.cos(n * dtheta)
        if term < _SERIES_RTOL / h:
            return total / (2.0 * math.pi)
    raise SeriesConvergenceError(
        f"annulus outer-kernel series did not converge for rho={rho}"
    )


def hit_probability(rho: float, x, y) -> float:
    """Probability that the excursion from x to y reaches the disk |z| <= rho."""
    return hitting_kernel(rho, x, y) / boundary_kernel_disk(x, y)


# -- independent series route: universal-cover image sums ---------------------
#
# Mapping the annulus to a periodic horizontal strip of height h = log(1/rho)
# by log z and unrolling the period gives the annulus kernels as image sums of
# the strip kernels.  These converge for every rho in (0,1) and are used by
# the verification suite as a second route through a different derivation.

def _strip_same_side(d: float, h: float) -> float:
    arg = math.pi * d / (2.0 * h)
    if abs(arg) > 350.0:
        return 0.0
    return math.pi / (4.0 * h * h * math.sinh(arg) ** 2)


def _strip_opposite_side(d: float, h: float) -> float:
    arg = math.pi * d / (2.0 * h)
    if abs(arg) > 350.0:
        return 0.0
    return math.pi / (4.0 * h * h * math.cosh(arg) ** 2)


def annulus_outer_kernel_images(rho: float, x, y, n_images: int = 64) -> float:
    """Image-sum evaluation of ``annulus_outer_kernel`` (cross-check route)."""
    rho = float(rho)
    if not (0.0 < rho < 1.0):
        raise DomainError(f"inner radius rho={rho} must lie in (0, 1)")
    x = _check_boundary(x, "x")
    y = _check_boundary(y, "y")
    _check_distinct(x, y)
    dtheta = cmath.phase(y / x)
    h = math.log(1.0 / rho)
    total = 0.0
    for k in range(-n_images, n_images + 1):
        total += _strip_same_side(dtheta + 2.0 * math.pi * k, h)
    return total


def annulus_boundary_kernel_images(rho: float, x, xp, n_images: int = 64) -> float:
    """Image-sum evaluation of ``annulus_boundary_kernel`` (cross-check route)."""
    rho = float(rho)
    if not (0.0 < rho < 1.0):
        raise DomainError(f"inner radius rho={rho} must lie in (0, 1)")
    x = _check_boundary(x, "x")
    xp = _as_complex(xp)
    if abs(abs(xp) - rho) > 1e-9:
        raise DomainError(f"xp={xp} must lie on the inner circle of radius {rho}")
    dtheta = cmath.phase(xp / rho / x)
    h = math.log(1.0 / rho)
    total = 0.0
    for k in range(-n_images, n_images + 1):
        total += _strip_opposite_side(dtheta + 2.0 * math.pi * k, h)
    return total / rho


# -- hitting-pair density ------------------------------------------------------

def hit_pair_density(x, y, rho: float):
    """Density g of the (first, last) visit points on the circle |z| = rho.

    For an excursion from x to y conditioned to reach ``|z| <= rho``, the
    ordered pair (first visit x', last visit y') has density::

        g(t1, t2) = K^A(x, rho e^{i t1}) G(rho e^{i t1}, rho e^{i t2})
                    K^A(y, rho e^{i t2}) / (2 (K(x,y) - K^A(x,y)))

    with respect to arclength^2 on the circle of radius rho.  Returns a
    vectorized callable of the two angles.
    """
    rho = _check_rho(rho)
    x = _check_boundary(x, "x")
    y = _check_boundary(y, "y")
    _check_distinct(x, y)
    norm = 2.0 * hitting_kernel(rho, x, y)
    theta_x = cmath.phase(x)
    theta_y = cmath.phase(y)
    h = math.log(1.0 / rho)

    # tabulated cosine series for the inner kernel, reused for both endpoints
    n_terms = max(8, int(math.ceil(math.log(_SERIES_RTOL * h / 4.0)
                                   / math.log(rho))) + 1)
    ns = np.arange(1, n_terms + 1)
    coeffs = 4.0 * ns / (rho ** (-ns) - rho ** ns)

    def inner_kernel(dtheta):
        dtheta = np.asarray(dtheta, dtype=float)
        series = np.tensordot(np.cos(np.multiply.outer(dtheta, ns)), coeffs, axes=1)
        return (1.0 / h + series) / (2.0 * math.pi * rho)

    def green_same_radius(ddelta):
        ddelta = np.asarray(ddelta, dtype=float)
        chord = 2.0 * rho * np.abs(np.sin(ddelta / 2.0))
        sep = np.sqrt(1.0 + rho ** 4 - 2.0 * rho * rho * np.cos(ddelta))
        with np.errstate(divide="ignore"):
            return np.log(sep / chord) / math.pi

    def g(t1, t2):
        t1 = np.asarray(t1, dtype=float)
        t2 = np.asarray(t2, dtype=float)
        val = inner_kernel(t1 - theta_x) * inner_kernel(t2 - theta_y)
        return val * green_same_radius(t2 - t1) / norm

    return g


# -- Moebius maps of the disk --------------------------------------------------

def mobius_disk(z, alpha: complex, phi: float = 0.0):
    """Disk automorphism ``e^{i phi} (z - alpha) / (1 - conj(alpha) z)``."""
    if abs(alpha) >= 1.0:
        raise DomainError("Moebius parameter alpha must satisfy |alpha| < 1")
    z = np.asarray(z, dtype=complex)
    out = np.exp(1j * phi) * (z - alpha) / (1.0 - np.conj(alpha) * z)
    return out if out.shape else complex(out)


def mobius_disk_deriv(z, alpha: complex, phi: float = 0.0):
    """Derivative of :func:`mobius_disk` at z."""
    if abs(alpha) >= 1.0:
        raise DomainError("Moebius parameter alpha must satisfy |alpha| < 1")
    z = np.asarray(z, dtype=complex)
    out = np.exp(1j * phi) * (1.0 - abs(alpha) ** 2) / (1.0 - np.conj(alpha) * z) ** 2
    return out if out.shape else complex(out)
