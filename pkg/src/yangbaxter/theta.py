"""Jacobi theta functions with half-integer characteristics, the Z_N theta
series used by the Belavin R-matrix, and the elliptic weight functions.

Series convention
-----------------
    theta[a,b](u | tau) = sum_m exp(pi*i*tau*(m+a)^2 + 2*pi*i*(m+a)*(u+b))

with a, b in {0, 1/2}.  The four half-integer characteristics are exposed
under their classical Jacobi numbering:

    JTHETA1 = (1/2, 1/2)   odd
    JTHETA2 = (1/2, 0)     ~ 2 q^{1/8} cos(pi u) as q -> 0
    JTHETA3 = (0, 0)       ~ 1 + 2 q^{1/2} cos(2 pi u)
    JTHETA4 = (0, 1/2)     ~ 1 - 2 q^{1/2} cos(2 pi u)

where q = exp(2*pi*i*tau).  Fractional powers of q are always computed as
exp(2*pi*i*tau*e) directly from tau, never via principal-branch powers of q,
so that q -> 0 limits are branch-stable.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache

PI = cmath.pi
_TWO_PI_I = 2j * PI


class ThetaTruncationError(ArithmeticError):
    """Series did not reach the truncation criterion within max_terms."""


@dataclass(frozen=True)
class ThetaParams:
    """Modular parameter and series truncation policy."""

    tau: complex
    trunc_tol: float = 1e-14
    max_terms: int = 64

    def __post_init__(self):
        if self.tau.imag <= 0:
            raise ValueError(f"Im(tau) must be positive, got {self.tau}")
        if not (0 < self.trunc_tol <= 1e-10):
            raise ValueError("trunc_tol must lie in (0, 1e-10]")
        if self.max_terms < 16:
            raise ValueError("max_terms must be at least 16")


@dataclass(frozen=True)
class Characteristic:
    """Half-integer theta characteristic (a, b) with a, b in {0, 1/2}."""

    a: float
    b: float

    def __post_init__(self):
        if self.a not in (0.0, 0.5) or self.b not in (0.0, 0.5):
            raise ValueError("only half-integer characteristics are supported")


JTHETA1 = Characteristic(0.5, 0.5)
JTHETA2 = Characteristic(0.5, 0.0)
JTHETA3 = Characteristic(0.0, 0.0)
JTHETA4 = Characteristic(0.0, 0.5)


def q_power(tau: complex, exponent: complex) -> complex:
    """exp(2*pi*i*tau*exponent), the branch-stable fractional power of q."""
    return cmath.exp(_TWO_PI_I * tau * exponent)


def tau_from_q(q: complex) -> complex:
    """Modular parameter with exp(2*pi*i*tau) = q (principal logarithm)."""
    if q == 0:
        raise ValueError("q must be nonzero")
    return cmath.log(q) / _TWO_PI_I


@lru_cache(maxsize=200_000)
def _theta_series(a: float, b: float, u: complex, tau: complex,
                  trunc_tol: float, max_terms: int) -> complex:
    total = 0j
    # symmetric rings m = 0, then (+1,-1), (+2,-2), ...: the ring sum decays
    # like q^{m^2/2}, so two consecutive small rings certify convergence.
    small_rings = 0
    for ring in range(max_terms):
        if ring == 0:
            ms = (0,)
        else:
            ms = (ring, -ring)
        ring_sum = 0j
        for m in ms:
            ring_sum += cmath.exp(1j * PI * tau * (m + a) ** 2
                                  + _TWO_PI_I * (m + a) * (u + b))
        total += ring_sum
        if ring >= 2 and abs(ring_sum) < trunc_tol * (1.0 + abs(total)):
            small_rings += 1
            if small_rings >= 2:
                return total
        else:
            small_rings = 0
    raise ThetaTruncationError(
        f"theta series not converged after {max_terms} rings (Im tau = {tau.imag:g})"
    )


def theta_char(char: Characteristic, u: complex, params: ThetaParams) -> complex:
    """Value of theta[a,b](u | tau), truncated per the params policy."""
    return _theta_series(char.a, char.b, complex(u), complex(params.tau),
                         params.trunc_tol, params.max_terms)


@lru_cache(maxsize=200_000)
def _theta_sln_series(j: int, u: complex, n: int, tau: complex,
                      trunc_tol: float, max_terms: int) -> complex:
    total = 0j
    small_rings = 0
    for ring in range(max_terms):
        ms = (0,) if ring == 0 else (ring, -ring)
        ring_sum = 0j
        for m in ms:
            a = m + 0.5 - j / n
            ring_sum += cmath.exp(1j * PI * tau * n * a * a
                                  + _TWO_PI_I * a * (u + 0.5))
        total += ring_sum
        if ring >= 2 and abs(ring_sum) < trunc_tol * (1.0 + abs(total)):
            small_rings += 1
            if small_rings >= 2:
                return total
        else:
            small_rings = 0
    raise ThetaTruncationError(
        f"Z_{n} theta series not converged after {max_terms} rings"
    )


def theta_sln(j: int, u: complex, n: int, params: ThetaParams) -> complex:
    """The Z_N theta value sum_m exp(pi i N tau (m+1/2-j/N)^2 + 2 pi i (m+1/2-j/N)(u+1/2)).

    Exactly periodic in j with period N (shift m by one to see it), so j is
    reduced mod N before summation.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    return _theta_sln_series(j % n, complex(u), n, complex(params.tau),
                             params.trunc_tol, params.max_terms)


# Label order of the four weights: w_a multiplies sigma_a (x) sigma_a in the
# elliptic R-matrix; the assignment below is pinned by R(0) = 2P and by the
# q -> 0 limit reproducing the standard six-vertex trigonometric matrix.
WEIGHT_CHARS = (JTHETA1, JTHETA4, JTHETA3, JTHETA2)


def ell_weights(u: complex, eta: complex, params: ThetaParams,
                min_denom: float = 1e-12):
    """The four weight ratios w_a(u) = theta_{c(a)}(u) / theta_{c(a)}(eta)."""
    out = []
    for char in WEIGHT_CHARS:
        den = theta_char(char, eta, params)
        if abs(den) < min_denom:
            raise ZeroDivisionError(
                f"weight denominator theta{char}(eta={eta}) vanishes to tolerance"
            )
        out.append(theta_char(char, u, params) / den)
    return tuple(out)
