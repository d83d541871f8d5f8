"""Hot kernels: overflow-safe summation of the three-parameter Mittag-Leffler
series, in two interchangeable backends (numba @njit and pure numpy).

All term magnitudes are assembled in log space,

    log|term_k| = log|(gamma)_k| + k*log|z| - log|Gamma(rho*k + mu)| - log(k!),

with the sign of each factor tracked separately, so the sum never overflows
for arguments where the result itself fits in a double.  Terms where
rho*k + mu lands on a non-positive integer are exactly zero (reciprocal
gamma has zeros there); once a zero factor enters the Pochhammer product the
whole tail vanishes and the sum is final.

Truncation rule: stop once two consecutive terms satisfy
|term| <= rel_tol * |partial sum| (single-term stopping is unsafe for
alternating series).  Returns (value, terms_used, converged, last_term_mag).
"""

from __future__ import annotations

import math

import numpy as np
from scipy.special import gammaln as _gammaln

from ._accel import HAVE_NUMBA, USE_NUMBA, njit

_POLE_TOL = 1e-12


def _series_scalar_impl(rho, mu, gamma, z, rel_tol, max_terms):
    # k=0 is the only surviving term at z=0: E(0) = 1/Gamma(mu).
    if z == 0.0:
        x = mu
        if x < 0.5:
            r = math.floor(x + 0.5)
            if abs(x - r) <= _POLE_TOL:
                return 0.0, 1, True, 0.0
        sg = 1.0 if x > 0.0 else (1.0 if math.floor(x) % 2 == 0 else -1.0)
        v = sg * math.exp(-math.lgamma(x))
        return v, 1, True, abs(v)

    total = 0.0
    lpoch = 0.0  # log|(gamma)_k|
    psign = 1.0  # sign of (gamma)_k; 0.0 once a zero factor appears
    small = 0
    last = 0.0
    lz = math.log(abs(z))
    zneg = z < 0.0
    k = 0
    while k < max_terms:
        if psign == 0.0:
            # (gamma)_j = 0 for every j >= k: the tail is identically zero.
            return total, k, True, last
        x = rho * k + mu
        term = 0.0
        pole = False
        if x < 0.5:
            r = math.floor(x + 0.5)
            if abs(x - r) <= _POLE_TOL:
                pole = True
        if not pole:
            sg = psign
            if x <= 0.0 and math.floor(x) % 2 != 0:
                sg = -sg
            if zneg and (k % 2) == 1:
                sg = -sg
            term = sg * math.exp(
                lpoch + k * lz - math.lgamma(x) - math.lgamma(k + 1.0)
            )
        total += term
        last = abs(term)
        if total != 0.0 and last <= rel_tol * abs(total):
            small += 1
            if small >= 2:
                return total, k + 1, True, last
        else:
            small = 0
        g = gamma + k
        if g == 0.0:
            psign = 0.0
        else:
            lpoch += math.log(abs(g))
            if g < 0.0:
                psign = -psign
        k += 1
    return total, max_terms, False, last


if HAVE_NUMBA:
    numba_series_scalar = njit(_series_scalar_impl)

    def _make_array_loop(scalar):
        def loop(rho, mu, gamma, zs, rel_tol, max_terms):
            n = zs.shape[0]
            vals = np.empty(n, np.float64)
            terms = np.empty(n, np.int64)
            ok = np.empty(n, np.bool_)
            lasts = np.empty(n, np.float64)
            for i in range(n):
                v, t, o, l = scalar(rho, mu, gamma, zs[i], rel_tol, max_terms)
                vals[i] = v
                terms[i] = t
                ok[i] = o
                lasts[i] = l
            return vals, terms, ok, lasts

        return loop

    numba_series_array = njit(_make_array_loop(numba_series_scalar))
else:  # pragma: no cover
    numba_series_scalar = None
    numba_series_array = None


def numpy_series_scalar(rho, mu, gamma, z, rel_tol, max_terms):
    return _series_scalar_impl(rho, mu, gamma, z, rel_tol, max_terms)


def numpy_series_array(rho, mu, gamma, zs, rel_tol, max_terms):
    """Vectorized summation over a 1-d array of z, same semantics per element
    as the scalar routine (per-element two-consecutive-small stopping)."""
    zs = np.ascontiguousarray(zs, dtype=np.float64)
    n = zs.shape[0]
    total = np.zeros(n)
    terms = np.zeros(n, np.int64)
    lasts = np.zeros(n)
    small = np.zeros(n, np.int64)
    active = np.ones(n, dtype=bool)

    nonzero = zs != 0.0
    logz = np.zeros(n)
    np.log(np.abs(zs), out=logz, where=nonzero)
    zneg = zs < 0.0

    lpoch = 0.0
    psign = 1.0
    converged_all = False
    with np.errstate(over="ignore", invalid="ignore"):
        for k in range(max_terms):
            if psign == 0.0:
                terms[active] = k
                converged_all = True
                break
            x = rho * k + mu
            pole = False
            if x < 0.5:
                r = math.floor(x + 0.5)
                if abs(x - r) <= _POLE_TOL:
                    pole = True
            if pole:
                term = np.zeros(n)
            else:
                coef = lpoch - float(_gammaln(x)) - math.lgamma(k + 1.0)
                csign = psign
                if x <= 0.0 and math.floor(x) % 2 != 0:
                    csign = -csign
                if k == 0:
                    term = np.full(n, csign * math.exp(coef))
                else:
                    mag = np.zeros(n)
                    np.exp(coef + k * logz, out=mag, where=nonzero)
                    term = csign * mag
                    if k % 2 == 1:
                        term = np.where(zneg, -term, term)
            np.add(total, term, out=total, where=active)
            np.copyto(lasts, np.abs(term), where=active)
            tiny = (total != 0.0) & (np.abs(term) <= rel_tol * np.abs(total))
            small[active & ~tiny] = 0
            small[active & tiny] += 1
            done = active & (small >= 2)
            terms[done] = k + 1
            active &= small < 2
            if not active.any():
                converged_all = True
                break
            g = gamma + k
            if g == 0.0:
                psign = 0.0
            else:
                lpoch += math.log(abs(g))
                if g < 0.0:
                    psign = -psign
    ok = np.ones(n, dtype=bool)
    if not converged_all and active.any():
        ok[active] = False
        terms[active] = max_terms
    # elements with z=0 finish at k<=2 with the exact 1/Gamma(mu) value
    return total, terms, ok, lasts


if USE_NUMBA:
    series_scalar = numba_series_scalar
    series_array = numba_series_array
else:
    series_scalar = numpy_series_scalar
    series_array = numpy_series_array
