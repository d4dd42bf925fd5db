"""Power-series toolkit for normalized analytic functions on the unit disk.

Covers truncated series arithmetic (product, quotient, log/exp powers with
principal branches), the classical convolution and integral transforms
(Alexander, Libera, Bernardi and the hypergeometric kernel transform), the
Gauss hypergeometric function, the pre-Schwarzian derivative and its norm,
and the coefficient-condition membership tests for the function classes
handled by :mod:`hypmetrica.bounds`.

Series are truncated at a fixed order; all class tests operate on truncated
sums.  Membership reports carry the slack of the tested inequality so that
boundary cases are visible to the caller.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    BadParameters,
    HypergeometricFailure,
    NegativeCoefficient,
    NonConvergent,
    NotAttestedUnivalent,
    OutsideDisk,
    PolyLikePole,
    ValidationError,
    VanishingCore,
    VanishingDerivative,
)

_CHUNK = 8192


# ---------------------------------------------------------------------------
# PowerSeries
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PowerSeries:
    """Truncated Taylor series sum_{n=0}^{N} a_n z^n.

    ``normalized`` means a_0 = 0 and a_1 = 1 exactly (the usual normalization
    of univalent-function theory).
    """

    coefficients: np.ndarray
    normalized: bool = False

    def __post_init__(self):
        c = np.asarray(self.coefficients, dtype=complex)
        if c.ndim != 1 or len(c) < 2:
            raise ValidationError("series needs at least two coefficients (N >= 1)")
        object.__setattr__(self, "coefficients", c)
        if self.normalized and (c[0] != 0 or c[1] != 1):
            raise ValidationError("normalized series must have a0 = 0, a1 = 1")

    @property
    def truncation(self) -> int:
        return len(self.coefficients) - 1

    def coeff(self, n: int) -> complex:
        return complex(self.coefficients[n]) if n <= self.truncation else 0.0

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def from_coefficients(coeffs, normalized=None) -> "PowerSeries":
        c = np.asarray(list(coeffs), dtype=complex)
        if normalized is None:
            normalized = bool(len(c) >= 2 and c[0] == 0 and c[1] == 1)
        return PowerSeries(c, normalized)

    @staticmethod
    def identity(n: int = 256) -> "PowerSeries":
        c = np.zeros(n + 1, dtype=complex)
        c[1] = 1
        return PowerSeries(c, True)

    @staticmethod
    def koebe(n: int = 256) -> "PowerSeries":
        """z/(1-z)^2 = sum n z^n."""
        c = np.arange(n + 1, dtype=float).astype(complex)
        return PowerSeries(c, True)

    @staticmethod
    def ell(n: int = 256) -> "PowerSeries":
        """z/(1-z) = sum z^n (n >= 1)."""
        c = np.ones(n + 1, dtype=complex)
        c[0] = 0
        return PowerSeries(c, True)

    @staticmethod
    def g_beta(beta: float, n: int = 256) -> "PowerSeries":
        """Primitive of (1-z)^(3 beta - 2) normalized to g(0)=0, g'(0)=1."""
        gp = _binomial_series(3.0 * beta - 2.0, -1.0, n)
        return antiderivative(PowerSeries(gp))

    @staticmethod
    def extremal_AB(A: float, B: float, n: int = 256) -> "PowerSeries":
        """Primitive of (1+Bz)^(A/B-1) (of e^{Az} when B = 0)."""
        if B == 0.0:
            gp = np.array([A**k / math.factorial(k) for k in range(n + 1)],
                          dtype=complex)
        else:
            gp = _binomial_series(A / B - 1.0, B, n)
        return antiderivative(PowerSeries(gp))


def _binomial_series(c: float, b: float, n: int) -> np.ndarray:
    """Coefficients of (1 + b z)^c up to order n (principal branch)."""
    out = np.empty(n + 1, dtype=complex)
    out[0] = 1.0
    for k in range(n):
        out[k + 1] = out[k] * (c - k) / (k + 1) * b
    return out


# ---------------------------------------------------------------------------
# evaluation and calculus
# ---------------------------------------------------------------------------


def eval_many(coeffs, z) -> np.ndarray:
    """Evaluate sum c_k z^k on an array of points."""
    return _eval_blocks(np.asarray(coeffs, dtype=complex),
                        np.atleast_1d(np.asarray(z, dtype=complex)))


def _eval_blocks(c: np.ndarray, z: np.ndarray) -> np.ndarray:
    """Block-Horner evaluation; chunking over the coefficient index keeps
    very long series cheap without materializing all powers of z."""
    n = len(c)
    nblocks = (n + _CHUNK - 1) // _CHUNK
    acc = np.zeros_like(z)
    for bi in range(nblocks - 1, -1, -1):
        lo = bi * _CHUNK
        hi = min(lo + _CHUNK, n)
        block = c[lo:hi]
        zp = z[None, :] ** np.arange(hi - lo)[:, None]
        acc = acc * z ** (hi - lo) if bi < nblocks - 1 else acc
        acc = acc + block @ zp
    return acc


def evaluate(f: PowerSeries, z) -> complex:
    """Truncated-series value at a single point of the open unit disk."""
    zz = complex(z)
    if abs(zz) >= 1.0:
        raise OutsideDisk(f"|z| = {abs(zz):.6f} is not inside the unit disk")
    return complex(_eval_blocks(f.coefficients, np.array([zz], dtype=complex))[0])


def derivative(f: PowerSeries, k: int = 1) -> PowerSeries:
    c = f.coefficients
    for _ in range(k):
        n = np.arange(1, len(c), dtype=float)
        c = c[1:] * n
        if len(c) < 2:
            c = np.concatenate([c, [0.0]])
    return PowerSeries(np.asarray(c, dtype=complex))


def antiderivative(f: PowerSeries) -> PowerSeries:
    c = f.coefficients
    out = np.zeros(len(c) + 1, dtype=complex)
    out[1:] = c / np.arange(1, len(c) + 1)
    return PowerSeries(out, bool(out[0] == 0 and out[1] == 1))


# -- series ring helpers ------------------------------------------------------


def _mul(a: np.ndarray, b: np.ndarray, n: int) -> np.ndarray:
    return np.convolve(a, b)[: n + 1]


def _div(a: np.ndarray, b: np.ndarray, n: int) -> np.ndarray:
    if b[0] == 0:
        raise ValidationError("series division by a series with zero constant term")
    q = np.zeros(n + 1, dtype=complex)
    a = np.concatenate([a, np.zeros(max(0, n + 1 - len(a)), dtype=complex)])
    for k in range(n + 1):
        s = a[k]
        kk = min(k, len(b) - 1)
        if kk > 0:
            # sum_{j=1..kk} b_j q_{k-j}
            s = s - np.dot(b[1:kk + 1], q[k - 1::-1][:kk])
        q[k] = s / b[0]
    return q


def _log(b: np.ndarray, n: int) -> np.ndarray:
    """log of a series with b_0 = 1 (principal branch)."""
    if b[0] != 1:
        raise ValidationError("series log requires constant term 1")
    bp = b[1:] * np.arange(1, len(b))
    g = _div(np.concatenate([bp, [0.0]]), b, n - 1) if n >= 1 else np.array([0j])
    out = np.zeros(n + 1, dtype=complex)
    out[1:] = g[:n] / np.arange(1, n + 1)
    return out


def _exp(g: np.ndarray, n: int) -> np.ndarray:
    """exp of a series with g_0 = 0."""
    if g[0] != 0:
        raise ValidationError("series exp requires zero constant term")
    gg = np.concatenate([g, np.zeros(max(0, n + 1 - len(g)), dtype=complex)])
    kg = gg[: n + 1] * np.arange(n + 1)
    out = np.zeros(n + 1, dtype=complex)
    out[0] = 1.0
    for k in range(1, n + 1):
        out[k] = np.dot(kg[1:k + 1], out[k - 1::-1][: k]) / k
    return out


def _pow(b: np.ndarray, mu: complex, n: int) -> np.ndarray:
    """(series with b_0 = 1) ** mu, principal branch."""
    return _exp(mu * _log(b, n), n)


# ---------------------------------------------------------------------------
# reciprocal form, Hadamard product, Hornich operations
# ---------------------------------------------------------------------------


def _check_grid(radii=(0.15, 0.35, 0.55, 0.75, 0.9), angles=48) -> np.ndarray:
    th = 2 * np.pi * np.arange(angles) / angles
    ring = np.exp(1j * th)
    return np.concatenate([r * ring for r in radii])


def reciprocal_form(f: PowerSeries, mu: float) -> PowerSeries:
    """Series of (z / f(z))^mu for a normalized f (principal branch).

    Raises VanishingCore when f(z)/z (numerically) vanishes on the check
    grid, since the principal power is then ill-defined.
    """
    if not f.normalized:
        raise ValidationError("reciprocal form needs a normalized series")
    n = f.truncation - 1
    h = f.coefficients[1:]  # f/z, constant term 1
    vals = _eval_blocks(h, _check_grid())
    if np.min(np.abs(vals)) < 1e-9:
        raise VanishingCore("f(z)/z vanishes on the check grid")
    return PowerSeries(_pow(h, -mu, n))


def hadamard(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """Coefficientwise (Hadamard) product; truncations are min-matched."""
    n = min(f.truncation, g.truncation)
    return PowerSeries(f.coefficients[: n + 1] * g.coefficients[: n + 1])


def hornich_plus(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """f (+) g: the primitive of f' g' vanishing at 0."""
    n = min(f.truncation, g.truncation)
    fp = derivative(f).coefficients
    gp = derivative(g).coefficients
    prod = _mul(fp, gp, n - 1)
    return antiderivative(PowerSeries(prod))


def hornich_scale(alpha: complex, f: PowerSeries) -> PowerSeries:
    """alpha (*) f: the primitive of (f')^alpha with (f')^alpha(0) = 1."""
    fp = derivative(f).coefficients
    if fp[0] == 0:
        raise VanishingDerivative("f'(0) = 0")
    vals = _eval_blocks(fp, _check_grid())
    if np.min(np.abs(vals)) < 1e-9:
        raise VanishingDerivative("f' vanishes on the check grid")
    base = fp / fp[0]
    powed = fp[0] ** alpha * _pow(base, alpha, len(fp) - 1)
    return antiderivative(PowerSeries(powed))


# ---------------------------------------------------------------------------
# Gauss hypergeometric function
# ---------------------------------------------------------------------------


def _is_nonpositive_int(x: float) -> bool:
    return abs(x - round(x)) < 1e-12 and round(x) <= 0

_SERIES_CUT = 0.9


def hypergeometric(a: float, b: float, c: float, z) -> complex:
    """Gauss hypergeometric F(a, b; c; z).

    Series summation with term-ratio stopping for |z| <= 0.9 (or whenever the
    series terminates); the Euler integral for real z in [0.9, 1) when
    Re c > Re b > 0.  Closed forms are used when a or b equals c.
    """
    if _is_nonpositive_int(c) and not (
            (_is_nonpositive_int(a) and round(a) > round(c))
            or (_is_nonpositive_int(b) and round(b) > round(c))):
        raise PolyLikePole(f"lower parameter c = {c} triggers a pole")
    z = complex(z)
    if z == 0:
        return 1.0 + 0j
    if a == 0 or b == 0:
        return 1.0 + 0j
    if c == a and not _is_nonpositive_int(c):
        return (1.0 - z) ** (-b)
    if c == b and not _is_nonpositive_int(c):
        return (1.0 - z) ** (-a)
    terminating = _is_nonpositive_int(a) or _is_nonpositive_int(b)
    if terminating or abs(z) <= _SERIES_CUT:
        return _hyp_series(a, b, c, z)
    if abs(z.imag) == 0.0 and 0.0 < z.real < 1.0 and c > b > 0:
        return complex(_hyp_euler(a, b, c, z.real))
    if abs(z) < 1.0:
        # slowly converging series; cap the work and demand convergence
        return _hyp_series(a, b, c, z, cap=2_000_000)
    raise NonConvergent(f"no evaluation path for F({a},{b};{c};{z})")


def _hyp_series(a, b, c, z, cap=100_000):
    term = 1.0 + 0j
    total = 1.0 + 0j
    n = 0
    while True:
        term = term * (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        total += term
        n += 1
        if term == 0:
            return total
        if abs(term) <= 1e-16 * max(1.0, abs(total)) and n >= 4:
            return total
        if n >= cap:
            raise NonConvergent(
                f"hypergeometric series did not converge in {cap} terms")


def _hyp_euler(a, b, c, x):
    from scipy import integrate

    coef = math.gamma(c) / (math.gamma(b) * math.gamma(c - b))

    def integrand(t):
        return t ** (b - 1.0) * (1.0 - t) ** (c - b - 1.0) * (1.0 - x * t) ** (-a)

    pts = None
    if x > 0.99:
        w = 1.0 - x
        pts = sorted({max(1e-12, 1.0 - k * w) for k in (1.0, 10.0, 100.0)})
        pts = [p for p in pts if 0 < p < 1]
    val, err = integrate.quad(integrand, 0.0, 1.0, epsabs=1e-13, epsrel=1e-13,
                              limit=400, points=pts)
    if not math.isfinite(val) or err > 1e-8 * max(1.0, abs(val)):
        raise HypergeometricFailure(
            f"Euler integral for F({a},{b};{c};{x}) unreliable (err {err:.2e})")
    return coef * val


def hypergeometric_derivative(a: float, b: float, c: float, z) -> complex:
    """F'(a, b; c; z) = (a b / c) F(a+1, b+1; c+1; z)."""
    return a * b / c * hypergeometric(a + 1, b + 1, c + 1, z)


# ---------------------------------------------------------------------------
# integral / convolution transforms
# ---------------------------------------------------------------------------


def alexander(f: PowerSeries) -> PowerSeries:
    """a_n -> a_n / n (primitive of f(z)/z)."""
    _require_normalized(f)
    c = f.coefficients.copy()
    c[1:] = c[1:] / np.arange(1, len(c))
    return PowerSeries(c, True)


def libera(f: PowerSeries) -> PowerSeries:
    return bernardi(f, 1.0)


def bernardi(f: PowerSeries, gamma: float) -> PowerSeries:
    """a_n -> a_n (gamma + 1) / (n + gamma); gamma = 0 is Alexander."""
    _require_normalized(f)
    if not gamma > -1:
        raise BadParameters("bernardi needs gamma > -1")
    c = f.coefficients.copy()
    n = np.arange(len(c), dtype=float)
    c[1:] = c[1:] * (gamma + 1.0) / (n[1:] + gamma)
    return PowerSeries(c, True)


def bbc_transform(f: PowerSeries, b: float, c: float) -> PowerSeries:
    """Hypergeometric kernel transform: a_n -> a_n (b)_{n-1} / (c)_{n-1}."""
    _require_normalized(f)
    if not (b > 0 and c > 0):
        raise BadParameters("bbc transform needs b > 0 and c > 0")
    coeffs = f.coefficients.copy()
    ratio = 1.0
    for n in range(2, len(coeffs)):
        ratio *= (b + n - 2) / (c + n - 2)
        coeffs[n] *= ratio
    return PowerSeries(coeffs, True)


def _require_normalized(f: PowerSeries):
    if not f.normalized:
        raise ValidationError("transform requires a normalized series")


# ---------------------------------------------------------------------------
# pre-Schwarzian derivative and norm
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DiskSampler:
    """Radial/angular sampling schedule for suprema over the unit disk."""

    radii: tuple
    angles: int = 64
    refinement: float = 0.618

    def __post_init__(self):
        r = tuple(float(x) for x in self.radii)
        if any(not (0 < x < 1) for x in r) or any(b <= a for a, b in zip(r, r[1:])):
            raise ValidationError("radii must be strictly increasing in (0, 1)")
        object.__setattr__(self, "radii", r)
        if self.angles < 4:
            raise ValidationError("need at least 4 angles")


def default_disk_sampler(min_gap: float = 1e-7, angles: int = 64) -> DiskSampler:
    coarse = np.linspace(0.05, 0.9, 18)
    fine = 1.0 - np.logspace(-1, math.log10(min_gap), 25)
    radii = np.unique(np.concatenate([coarse, fine]))
    return DiskSampler(tuple(radii[radii < 1.0]), angles)


def pre_schwarzian(f: PowerSeries) -> PowerSeries:
    """Series of T_f = f''/f' (series division; needs f'(0) != 0)."""
    fp = derivative(f).coefficients
    fpp = derivative(f, 2).coefficients
    if fp[0] == 0:
        raise VanishingDerivative("f'(0) = 0")
    n = max(1, len(fp) - 2)
    return PowerSeries(_div(fpp, fp, n))


@dataclass(frozen=True)
class NormResult:
    value: float
    error_estimate: float
    arg_z: complex


def _tail_scale(c: np.ndarray) -> float:
    tail = np.abs(c[-8:]) if len(c) >= 8 else np.abs(c)
    return float(np.max(tail)) if len(tail) else 0.0


def _circle_values(c: np.ndarray, r: float, n_angles: int) -> np.ndarray:
    """Values of sum c_k z^k at z = r e^{2 pi i j / n_angles} for all j,
    via index folding and one small FFT."""
    scaled = c * np.exp(np.arange(len(c)) * math.log(max(r, 1e-300)))
    pad = (-len(scaled)) % n_angles
    if pad:
        scaled = np.concatenate([scaled, np.zeros(pad, dtype=complex)])
    folded = scaled.reshape(-1, n_angles).sum(axis=0)
    # value(j) = sum_m folded_m e^{+2 pi i m j / n}, i.e. an inverse DFT times n
    return np.fft.ifft(folded) * n_angles


class _RayEvaluator:
    """Cheap repeated evaluation of several series along a fixed ray.

    Rotating the coefficients once by e^{i k theta} reduces each evaluation
    to real powers of the radius, and those are shared across chunks through
    a single base table of length _CHUNK.
    """

    def __init__(self, coeff_list, theta: float):
        rot = np.exp(1j * theta * np.arange(max(len(c) for c in coeff_list)))
        self.ds = [np.asarray(c, complex) * rot[: len(c)] for c in coeff_list]
        self.arange = np.arange(_CHUNK, dtype=float)

    def eval(self, r: float):
        base = np.exp(self.arange * math.log(max(r, 1e-300)))
        out = []
        for d in self.ds:
            acc = 0.0 + 0.0j
            for lo in range(0, len(d), _CHUNK):
                hi = min(lo + _CHUNK, len(d))
                acc += (d[lo:hi] @ base[: hi - lo]) * (r ** lo)
            out.append(acc)
        return out


def norm_detailed(f: PowerSeries, sampler: DiskSampler = None) -> NormResult:
    """sup over the disk of (1 - |z|^2) |f''/f'|, with one refinement pass
    around the coarse argmax.  T_f is evaluated pointwise from f' and f''
    (no series division), so very long series stay tractable."""
    fp = derivative(f).coefficients
    fpp = derivative(f, 2).coefficients
    if sampler is None:
        sampler = default_disk_sampler()
    n_full = len(fp)
    tail_amp = max(_tail_scale(fp), _tail_scale(fpp), 1e-300)

    def tail_est(r):
        logtail = math.log(tail_amp) + n_full * math.log(max(r, 1e-12)) \
            - math.log(max(1e-15, 1.0 - r))
        return math.exp(min(300.0, logtail))

    # coarse pass on a truncated copy where the truncation is provably safe
    n_coarse = min(n_full, 32768)
    tail_amp_c = max(_tail_scale(fp[:n_coarse]), _tail_scale(fpp[:n_coarse]), 1e-300)

    def tail_est_coarse(r):
        logtail = math.log(tail_amp_c) + n_coarse * math.log(max(r, 1e-12)) \
            - math.log(max(1e-15, 1.0 - r))
        return math.exp(min(300.0, logtail))

    radii = np.asarray(sampler.radii)
    coarse_best, theta0, r0 = -1.0, 0.0, float(radii[0])
    min_abs_fp = math.inf
    any_radius = False
    for r in radii:
        vp = _circle_values(fp[:n_coarse], float(r), sampler.angles)
        vpp = _circle_values(fpp[:n_coarse], float(r), sampler.angles)
        est = tail_est_coarse(float(r))
        ok = est <= 1e-8 * np.abs(vp)
        if not np.any(ok):
            continue
        any_radius = True
        min_abs_fp = min(min_abs_fp, float(np.min(np.abs(vp[ok]))))
        with np.errstate(divide="ignore", invalid="ignore"):
            vals = (1.0 - r * r) * np.abs(vpp) / np.maximum(np.abs(vp), 1e-300)
        vals = np.where(ok, vals, -np.inf)
        j = int(np.argmax(vals))
        if vals[j] > coarse_best:
            coarse_best = float(vals[j])
            theta0 = 2 * np.pi * j / sampler.angles
            r0 = float(r)
    if not any_radius:
        raise ValidationError("series too short to evaluate the norm reliably")
    if min_abs_fp < 1e-12:
        raise VanishingDerivative("f' vanishes on the sampler grid")

    r_deep = max(sampler.radii)

    def make_profile(theta):
        ev = _RayEvaluator([fp, fpp], theta)

        def profile(r):
            p, pp = ev.eval(r)
            if abs(p) < 1e-300 or tail_est(r) > 1e-8 * min(abs(p), abs(pp) + 1e-300):
                return -math.inf
            return (1.0 - r * r) * abs(pp / p)

        return profile

    def radial_max(theta):
        profile = make_profile(theta)
        # expand toward 1 while evaluations stay reliable
        hi = max(r0, 0.5)
        best_v, best_r = profile(hi), hi
        if best_v == -math.inf:
            hi = r0
            best_v, best_r = profile(hi), hi
        probe = hi
        while probe < r_deep:
            probe = min(r_deep, 1.0 - 0.5 * (1.0 - probe))
            v = profile(probe)
            if v == -math.inf:
                break
            hi = probe
            if v > best_v:
                best_v, best_r = v, probe
        lo = 1e-6
        g = (math.sqrt(5) - 1) / 2
        a, b = lo, hi
        c1 = b - g * (b - a)
        c2 = a + g * (b - a)
        f1, f2 = profile(c1), profile(c2)
        for _ in range(60):
            if f1 < f2:
                a, c1, f1 = c1, c2, f2
                c2 = a + g * (b - a)
                f2 = profile(c2)
            else:
                b, c2, f2 = c2, c1, f1
                c1 = b - g * (b - a)
                f1 = profile(c1)
            if b - a < 1e-13:
                break
        for v, r in ((f1, c1), (f2, c2)):
            if v > best_v:
                best_v, best_r = v, r
        return best_v, best_r

    dth = 2 * np.pi / sampler.angles
    cands = []
    for t in (theta0 - dth, theta0, theta0 + dth):
        v, rv = radial_max(t)
        cands.append((v, rv, t))
    v_m1, v_0, v_p1 = cands[0][0], cands[1][0], cands[2][0]
    denom = v_m1 - 2 * v_0 + v_p1
    if math.isfinite(denom) and abs(denom) > 1e-15:
        t_hat = theta0 - 0.5 * dth * (v_p1 - v_m1) / denom
        if abs(t_hat - theta0) <= dth:
            v, rv = radial_max(t_hat)
            cands.append((v, rv, t_hat))
    best = max(cands, key=lambda c: c[0])
    value = max(best[0], coarse_best)
    err = abs(value - coarse_best)
    return NormResult(value, err, best[1] * np.exp(1j * best[2]))


def norm(f: PowerSeries, sampler: DiskSampler = None) -> float:
    return norm_detailed(f, sampler).value


# ---------------------------------------------------------------------------
# class specifications and membership tests
# ---------------------------------------------------------------------------

_CLASS_RANGES = {
    "Sp": lambda p: -1 <= p.get("alpha", 0) <= 1,
    "U": lambda p: p.get("lam", 0) >= 0 and p.get("mu", 1) > -1,
    "S*": lambda p: 0 <= p.get("alpha", 0) <= 1,
    "K": lambda p: 0 <= p.get("alpha", 0) <= 1,
    "K(A,B)": lambda p: -1 <= p["B"] < p["A"] <= 1,
    "S*(A,B)": lambda p: -1 <= p["B"] < p["A"] <= 1,
    "S*(a,b)": lambda p: 0 < p["alpha"] <= 1 and 0 <= p["beta"] < 1,
    "F_beta": lambda p: 2 / 3 < p["beta"] <= 1,
    "T*": lambda p: 0 <= p.get("alpha", 0) <= 1,
}


@dataclass(frozen=True)
class ClassSpec:
    name: str
    parameters: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.name not in _CLASS_RANGES:
            raise BadParameters(f"unknown class {self.name!r}")
        try:
            ok = _CLASS_RANGES[self.name](self.parameters)
        except KeyError as e:
            raise BadParameters(f"class {self.name} missing parameter {e}") from e
        if not ok:
            raise BadParameters(
                f"parameters {self.parameters} out of range for class {self.name}")


@dataclass(frozen=True)
class MembershipReport:
    satisfied: bool
    slack: float
    condition_id: str

    def __post_init__(self):
        if self.satisfied != (self.slack <= 1e-12):
            raise ValidationError("satisfied flag inconsistent with slack")


def _report(slack: float, condition_id: str) -> MembershipReport:
    return MembershipReport(bool(slack <= 1e-12), float(slack), condition_id)


def _b_tail(b) -> np.ndarray:
    """Coefficients b_1, b_2, ... from a PowerSeries of (z/f)^mu or a plain
    sequence starting at b_1."""
    if isinstance(b, PowerSeries):
        return np.asarray(b.coefficients[1:], dtype=complex)
    return np.asarray(list(b), dtype=complex)


def _require_nonneg(b: np.ndarray) -> np.ndarray:
    if np.any(np.abs(b.imag) > 1e-12) or np.any(b.real < -1e-12):
        raise NegativeCoefficient("this test requires b_n >= 0")
    return np.maximum(b.real, 0.0)


def sp_necessary(b, mu: float, alpha: float) -> MembershipReport:
    """Necessary coefficient condition for the parabolic-starlike class when
    the reciprocal-form coefficients are nonnegative:
    sum (2n - mu (1 - alpha)) b_n <= mu (1 - alpha)."""
    if not mu > 0:
        raise BadParameters("mu must be positive")
    bn = _require_nonneg(_b_tail(b))
    n = np.arange(1, len(bn) + 1, dtype=float)
    lhs = float(np.sum((2 * n - mu * (1 - alpha)) * bn))
    return _report(lhs - mu * (1 - alpha), "sp_necessary")


def sp_sufficient(b, mu: float, alpha: float) -> MembershipReport:
    """Sufficient condition: sum (2n + mu(1-alpha)) |b_n| <= mu (1-alpha)."""
    if not mu > 0:
        raise BadParameters("mu must be positive")
    bn = np.abs(_b_tail(b))
    n = np.arange(1, len(bn) + 1, dtype=float)
    lhs = float(np.sum((2 * n + mu * (1 - alpha)) * bn))
    return _report(lhs - mu * (1 - alpha), "sp_sufficient")


def sp_single_term(n: int, a_n: complex, alpha: float) -> MembershipReport:
    """Exact single-term criterion for f = z + a_n z^n:
    (2n - 1 - alpha) |a_n| <= 1 - alpha."""
    if n < 2:
        raise BadParameters("single-term index must be >= 2")
    slack = (2 * n - 1 - alpha) * abs(a_n) - (1 - alpha)
    return _report(slack, "sp_single_term")


def u_membership(b, lam: float, mu: float) -> MembershipReport:
    """Sufficient condition for the bounded-distortion class with parameters
    (lam, mu), 0 < mu <= 1:  sum (n - mu) |b_n| <= lam mu."""
    if not (0 < mu <= 1):
        raise BadParameters("mu must lie in (0, 1]")
    if lam < 0:
        raise BadParameters("lam must be nonnegative")
    bn = np.abs(_b_tail(b))
    n = np.arange(1, len(bn) + 1, dtype=float)
    lhs = float(np.sum((n - mu) * bn))
    return _report(lhs - lam * mu, "u_sufficient")


def u_exact_nonneg(b, mu: float) -> MembershipReport:
    """Exact (iff) condition at lam = 1 for nonnegative coefficients:
    sum (n - mu) b_n <= mu."""
    if not (0 < mu <= 1):
        raise BadParameters("mu must lie in (0, 1]")
    bn = _require_nonneg(_b_tail(b))
    n = np.arange(1, len(bn) + 1, dtype=float)
    lhs = float(np.sum((n - mu) * bn))
    return _report(lhs - mu, "u_exact_nonneg")


def p_membership(b, lam: float) -> MembershipReport:
    """Sufficient condition for the second-derivative class:
    sum n (n-1) |b_n| <= 2 lam."""
    bn = np.abs(_b_tail(b))
    n = np.arange(1, len(bn) + 1, dtype=float)
    lhs = float(np.sum(n * (n - 1) * bn))
    return _report(lhs - 2 * lam, "p_sufficient")


def starlike_coeff_nonneg(b, mu: float, alpha: float) -> MembershipReport:
    """Starlike-of-order-alpha screen for nonnegative coefficients:
    sum (n - mu (1 - alpha)) b_n <= mu (1 - alpha)."""
    if not mu > 0:
        raise BadParameters("mu must be positive")
    bn = _require_nonneg(_b_tail(b))
    n = np.arange(1, len(bn) + 1, dtype=float)
    lhs = float(np.sum((n - mu * (1 - alpha)) * bn))
    return _report(lhs - mu * (1 - alpha), "starlike_nonneg")


def lambda_star_f(b1: complex) -> float:
    """Largest lam for which the coefficient test also certifies
    starlikeness: (sqrt(2 - |b1|^2) - |b1|) / 2."""
    a = abs(b1)
    if a > math.sqrt(2.0):
        raise BadParameters("needs |b1| <= sqrt(2)")
    return (math.sqrt(2.0 - a * a) - a) / 2.0


def area_coefficient_check(b, mu: float) -> MembershipReport:
    """Area-theorem screen: sum (n - mu) |b_n|^2 <= mu is necessary for the
    reciprocal form of a univalent function."""
    if not mu > 0:
        raise BadParameters("mu must be positive")
    bn = np.abs(_b_tail(b))
    n = np.arange(1, len(bn) + 1, dtype=float)
    lhs = float(np.sum((n - mu) * bn**2))
    return _report(lhs - mu, "area_check")


def identity_check_th2eq2(f: PowerSeries, mu: float, grid=None) -> float:
    """Max residual of z d/dz (z/f)^mu = mu [ (z/f)^mu - (z/f)^(mu+1) f' ]
    over the grid (default |z| <= 0.7)."""
    if grid is None:
        grid = _check_grid(radii=(0.2, 0.45, 0.7), angles=64)
    U = reciprocal_form(f, mu)
    V = reciprocal_form(f, mu + 1.0)
    fp = derivative(f)
    zs = np.asarray(grid, dtype=complex)
    Uv = _eval_blocks(U.coefficients, zs)
    dU = _eval_blocks(derivative(U).coefficients, zs)
    Vv = _eval_blocks(V.coefficients, zs)
    fpv = _eval_blocks(fp.coefficients, zs)
    lhs = zs * dU
    rhs = mu * (Uv - Vv * fpv)
    return float(np.max(np.abs(lhs - rhs)))


def subordination_range_check(phi: PowerSeries, psi: PowerSeries,
                              psi_univalent: bool, radii=(0.5, 0.9, 0.99),
                              samples: int = 720) -> bool:
    """Evidence-level subordination test: phi(0) = psi(0) and the sampled
    images phi(r T) lie inside the polygon traced by psi(0.999 T)."""
    if not psi_univalent:
        raise NotAttestedUnivalent("psi must be attested univalent")
    if abs(phi.coeff(0) - psi.coeff(0)) > 1e-10:
        return False
    th = 2 * np.pi * np.arange(samples) / samples
    boundary = _eval_blocks(psi.coefficients, 0.999 * np.exp(1j * th))
    poly = np.stack([boundary.real, boundary.imag], axis=1)
    for r in radii:
        pts = _eval_blocks(phi.coefficients, r * np.exp(1j * th))
        P = np.stack([pts.real, pts.imag], axis=1)
        if not np.all(_points_in_polygon(P, poly)):
            return False
    return True


def _points_in_polygon(P, V):
    x, y = P[:, 0], P[:, 1]
    inside = np.zeros(len(P), dtype=bool)
    n = len(V)
    for i in range(n):
        a = V[i]
        b = V[(i + 1) % n]
        cond = (a[1] > y) != (b[1] > y)
        with np.errstate(divide="ignore", invalid="ignore"):
            xin = (b[0] - a[0]) * (y - a[1]) / (b[1] - a[1]) + a[0]
        inside ^= cond & (x < xin)
    return inside
