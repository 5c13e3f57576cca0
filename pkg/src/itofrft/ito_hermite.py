"""Ito-Hermite polynomials H^nu_{m,n}, their normalized versions psi^nu_{m,n},
and their zero structure.

Evaluation is by two-term recurrences in (m, n), which are numerically stable;
the explicit alternating finite sum is kept in the test suite as an oracle
only, since it cancels catastrophically for large |z|.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import roots_genlaguerre

from .specfun import DEGREE_CAP

__all__ = [
    "ZeroSet",
    "hermite_ito",
    "hermite_ito_table",
    "psi",
    "psi_table",
    "zero_radii",
    "null_index_set",
]


def _check_index(m, n):
    if m < 0 or n < 0:
        raise ValueError("polynomial index must be non-negative, got (%r, %r)" % (m, n))
    if m > DEGREE_CAP or n > DEGREE_CAP:
        raise ValueError(
            "index (%d, %d) exceeds degree cap %d" % (m, n, DEGREE_CAP)
        )


def _check_nu(nu):
    if not (nu > 0 and math.isfinite(nu)):
        raise ValueError("scaling nu must be finite and positive, got %r" % (nu,))


@dataclass(frozen=True)
class ZeroSet:
    """Radii of the circles |z| = r on which H^nu_{m,n} vanishes.

    `radii` is strictly increasing with at most min(m, n) entries;
    `includes_origin` is true exactly when m != n.
    """

    index: tuple
    radii: tuple
    includes_origin: bool


def hermite_ito_table(nu, z, max_m, max_n):
    """Table of H^nu_{m,n}(z, conj(z)) for all m <= max_m, n <= max_n.

    Returns a complex array of shape (max_m+1, max_n+1) + shape(z); `z` may be
    a scalar or an ndarray.  Built from H_{0,n} = (nu conj(z))^n and the
    recurrence H_{m+1,n} = nu z H_{m,n} - n nu H_{m,n-1}.
    """
    _check_nu(nu)
    _check_index(max_m, max_n)
    z = np.asarray(z, dtype=complex)
    zc = np.conj(z)
    H = np.zeros((max_m + 1, max_n + 1) + z.shape, dtype=complex)
    H[0, 0] = 1.0
    for n in range(1, max_n + 1):
        H[0, n] = nu * zc * H[0, n - 1]
    for m in range(max_m):
        H[m + 1, 0] = nu * z * H[m, 0]
        for n in range(1, max_n + 1):
            H[m + 1, n] = nu * z * H[m, n] - n * nu * H[m, n - 1]
    return H


def hermite_ito(nu, m, n, z):
    """H^nu_{m,n}(z, conj(z)); scalar or vectorized over an ndarray z."""
    table = hermite_ito_table(nu, z, m, n)
    out = table[m, n]
    return complex(out) if out.ndim == 0 else out


def psi_table(nu, z, max_m, max_n):
    """Table of normalized polynomials psi^nu_{m,n}(z) for the index box.

    Uses the normalized recurrence
        psi_{m+1,n} = sqrt(nu/(m+1)) z psi_{m,n} - sqrt(n/(m+1)) psi_{m,n-1}
    so that no intermediate overflows even at the degree cap.
    """
    _check_nu(nu)
    _check_index(max_m, max_n)
    z = np.asarray(z, dtype=complex)
    zc = np.conj(z)
    P = np.zeros((max_m + 1, max_n + 1) + z.shape, dtype=complex)
    P[0, 0] = math.sqrt(nu / math.pi)
    for n in range(1, max_n + 1):
        P[0, n] = math.sqrt(nu / n) * zc * P[0, n - 1]
    for m in range(max_m):
        c = math.sqrt(nu / (m + 1))
        P[m + 1, 0] = c * z * P[m, 0]
        for n in range(1, max_n + 1):
            P[m + 1, n] = c * z * P[m, n] - math.sqrt(n / (m + 1)) * P[m, n - 1]
    return P


def psi(nu, m, n, z):
    """Normalized Ito-Hermite polynomial psi^nu_{m,n}(z).

    Equals (nu / (pi nu^{m+n} m! n!))^{1/2} H^nu_{m,n}(z, conj(z)); the
    psi_{m,n} form an orthonormal basis of L^2 against e^{-nu |z|^2} d(area).
    """
    table = psi_table(nu, z, m, n)
    out = table[m, n]
    return complex(out) if out.ndim == 0 else out


def zero_radii(nu, m, n):
    """Radii r > 0 where H^nu_{m,n} vanishes on the circle |z| = r.

    For m >= n the polynomial factors as
        H^nu_{m,n} = (-1)^n n! nu^m z^{m-n} L_n^{(m-n)}(nu |z|^2),
    so the radii are sqrt(x_j / nu) over the roots x_j of L_q^{(|m-n|)} with
    q = min(m, n); the origin is a zero exactly when m != n.
    """
    _check_nu(nu)
    _check_index(m, n)
    q = min(m, n)
    if q == 0:
        radii = ()
    else:
        roots, _ = roots_genlaguerre(q, abs(m - n))
        radii = tuple(sorted(math.sqrt(x / nu) for x in roots))
    return ZeroSet(index=(m, n), radii=radii, includes_origin=(m != n))


def null_index_set(nu, w, max_m, max_n, tol):
    """Indices (m, n) in the box with |psi^nu_{m,n}(w)| < tol.

    The test is applied to the normalized psi rather than the raw polynomial
    so that `tol` is scale-free across the index box.
    """
    if tol <= 0:
        raise ValueError("tol must be positive, got %r" % (tol,))
    P = psi_table(nu, complex(w), max_m, max_n)
    mm, nn = np.nonzero(np.abs(P) < tol)
    return {(int(m), int(n)) for m, n in zip(mm, nn)}
