"""Photon-number distributions of one-mode Gaussian states, two-mode squeezed
light and deformed-oscillator states.

Three independently coded representations of the one-mode Gaussian
distribution are provided (two-index Hermite, Laguerre, and the direct
centered-covariance sum); on valid states they agree termwise, which is the
central cross-check of this package.  For covariances violating the
quadrature uncertainty relation the same formulas return negative or complex
values, and every distribution carries a classification verdict:

* ``PROBABILITY``: real within tolerance, nonnegative within tolerance, and
  summing to one within the truncation tail bound.
* ``SIGNED_REAL``: real but with at least one negative entry.
* ``COMPLEX``: at least one entry with a non-negligible imaginary part.

Truncation is adaptive unless an explicit ``n_max`` is given: the cutoff
starts at 32 and doubles until the estimated geometric tail drops below
1e-12 or the cutoff reaches 4096.  Sequences whose tail grows (the
uncertainty-violating families are asymptotic, not convergent) are trimmed
at their smallest term and the residual is reported in ``tail_bound``.

Everything here is pure and immutable after construction; grid sweeps over
states are embarrassingly parallel with deterministic per-cell results.
"""

from __future__ import annotations

import cmath
import enum
import json
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import (
    DivergentSeriesError,
    DomainError,
    InvalidSpecError,
    NormalizationError,
    ParityError,
    RangeOverflowError,
    SingularDenominatorError,
)
from .gaussian_state import OneModeGaussianState, XYTState, from_tau, p0, r_matrix
from .specfun import (
    LogSigned,
    hermite_sequence_log,
    laguerre_half_sequence,
    assoc_legendre,
    gauss_2f1_terminating,
    log_factorial,
    logsigned_sum,
)

__all__ = [
    "Classification",
    "PhotonDistribution",
    "TwoModeJointDistribution",
    "LegendreParams",
    "DeformationKind",
    "DeformationSpec",
    "pn_hermite",
    "pn_laguerre",
    "pn_centered_xyt",
    "pn_violation",
    "mean_photon_xyt",
    "two_mode_p2k",
    "two_mode_p2k_distribution",
    "two_mode_joint",
    "two_mode_joint_distribution",
    "deformed_pn",
    "deformed_distribution",
    "distribution_from_values",
    "distribution_to_csv",
    "distribution_to_json",
]

DEFAULT_TOL_IMAG = 1e-12
DEFAULT_TOL_NEG = 1e-12
_TAIL_TARGET = 1e-12
_ADAPTIVE_START = 32
_ADAPTIVE_CAP = 4096
_NORM_SLOP = 1e-9

_SQRT2 = math.sqrt(2)


class Classification(str, enum.Enum):
    PROBABILITY = "Probability"
    SIGNED_REAL = "SignedReal"
    COMPLEX = "Complex"


@dataclass(frozen=True)
class PhotonDistribution:
    """A truncated photon-number sequence with tail estimate and verdict.

    ``values[n]`` is the (possibly complex) weight of counting n photons;
    ``truncation`` is the largest retained n; ``tail_bound`` estimates the
    omitted mass from the geometric decay of the last retained terms.
    """

    values: tuple[complex, ...]
    truncation: int
    tail_bound: float
    classification: Classification

    def __len__(self) -> int:
        return len(self.values)

    @property
    def total(self) -> complex:
        return sum(self.values)

    def value(self, n: int) -> complex:
        """values[n], zero-extended beyond the truncation."""
        if n < 0:
            raise DomainError("photon number must be nonnegative")
        return self.values[n] if n < len(self.values) else 0j

    def real_values(self) -> np.ndarray:
        return np.array([v.real for v in self.values])


@dataclass(frozen=True)
class TwoModeJointDistribution:
    """Joint photon-pair table P(n1, n2), nonnegative with sum <= 1 + 1e-9."""

    values: np.ndarray
    truncation: tuple[int, int]
    tail_bound: float

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=float)
        if arr.ndim != 2:
            raise DomainError("joint table must be a 2-d array")
        if (arr < -DEFAULT_TOL_NEG).any():
            raise DomainError("joint table entries must be nonnegative")
        if arr.sum() > 1 + _NORM_SLOP:
            raise NormalizationError("joint table mass exceeds one")
        object.__setattr__(self, "values", arr)


@dataclass(frozen=True)
class LegendreParams:
    """Inputs (N, F1, F2, F3) of the Legendre form of the joint distribution.

    The overall scale ``n_factor`` and the three F parameters are consumed
    as given; the constants they are usually assembled from are outside the
    scope of this package.
    """

    n_factor: float
    f1: float
    f2: float
    f3: float

    def __post_init__(self):
        if not (self.f1 > 0 and self.f2 > 0):
            raise DomainError("f1 and f2 must be positive")


class DeformationKind(str, enum.Enum):
    POISSON = "poisson"
    F_COHERENT = "f-coherent"
    Q_COHERENT = "q-coherent"
    SQUEEZED_CORRELATED = "squeezed-correlated"
    SQUEEZED_VACUUM = "squeezed-vacuum"


@dataclass(frozen=True)
class DeformationSpec:
    """Parameters of a deformed-oscillator (or reference) number distribution.

    alpha_mag2 is |alpha|^2 where applicable; ``lam`` is the q-deformation
    parameter; ``r``/``theta`` the squeeze modulus and phase; ``f_values``
    the deformation profile f(0), f(1), ... (empty means f == 1
    identically); ``mean_q``/``mean_p`` displace the squeezed/correlated
    family.

    ``f_convention``: "sqrt-factorial" keeps the sqrt(n!) weight of the
    defining series, "factorial" selects the conventional n! weight.
    """

    kind: DeformationKind
    alpha_mag2: float = 0.0
    lam: float = 0.0
    r: float = 0.0
    theta: float = 0.0
    f_values: tuple[float, ...] = ()
    mean_q: float = 0.0
    mean_p: float = 0.0
    f_convention: str = "sqrt-factorial"

    def __post_init__(self):
        if self.alpha_mag2 < 0:
            raise InvalidSpecError("alpha_mag2 must be nonnegative")
        if self.f_convention not in ("sqrt-factorial", "factorial"):
            raise InvalidSpecError(f"unknown f_convention {self.f_convention!r}")
        object.__setattr__(self, "f_values", tuple(float(v) for v in self.f_values))


# ---------------------------------------------------------------------------
# truncation, tail estimation, classification
# ---------------------------------------------------------------------------


def _tail_estimate(mags: list[float]) -> float:
    """Geometric tail bound from the decay ratio of the last 5 nonzero terms.

    A lone nonzero entry followed by a run of zeros counts as finite
    support (tail 0); a lone entry with nothing after it is unbounded.
    """
    nz = [(i, m) for i, m in enumerate(mags) if m > 0.0]
    if not nz:
        return 0.0
    if len(nz) == 1:
        trailing = len(mags) - 1 - nz[-1][0]
        return 0.0 if trailing >= 4 else math.inf
    window = [m for _, m in nz[-5:]]
    ratios = [window[i + 1] / window[i] for i in range(len(window) - 1)]
    if ratios[-1] >= 1.0:
        return math.inf  # still growing at the end
    start = 0
    for i, r in enumerate(ratios):
        if r >= 1.0:
            start = i + 1  # skip any hump inside the window
    r = max(ratios[start:])
    # factor-2 headroom: the asymptotic ratio is sampled, not proven
    return 2.0 * window[-1] * r / (1.0 - r)


def _trim_divergent(values: list[complex]) -> tuple[list[complex], bool]:
    """Cut an asymptotic (decay-then-regrowth) tail back to its smallest term.

    Sequences that grow from the start are left alone: they carry their
    divergence as data (classification handles them), whereas trimming is
    only meaningful past a genuinely decayed head.
    """
    mags = [abs(v) for v in values]
    nz = [(i, m) for i, m in enumerate(mags) if m > 0.0]
    if len(nz) < 8:
        return values, False
    tail = nz[-5:]
    growing = all(tail[i + 1][1] > tail[i][1] for i in range(4))
    if not growing:
        return values, False
    i_min, m_min = min(nz, key=lambda im: im[1])
    if i_min >= nz[-1][0] - 4 or m_min >= nz[0][1]:
        return values, False
    return values[: i_min + 1], True


def _strip_trailing_zeros(values: list[complex]) -> list[complex]:
    end = len(values)
    while end > 1 and values[end - 1] == 0:
        end -= 1
    return values[:end]


def _classify(
    values: list[complex], tail_bound: float, tol_imag: float, tol_neg: float
) -> Classification:
    if any(abs(v.imag) >= tol_imag for v in values):
        return Classification.COMPLEX
    if any(v.real < -tol_neg for v in values):
        return Classification.SIGNED_REAL
    total = math.fsum(v.real for v in values)
    if 1 - tail_bound - _NORM_SLOP <= total <= 1 + _NORM_SLOP:
        return Classification.PROBABILITY
    raise NormalizationError(
        f"nonnegative weight sequence sums to {total:.12g} against tail bound "
        f"{tail_bound:.3g}: the formal series fits no classification"
    )


def _finalize(
    values: list[complex], tol_imag: float, tol_neg: float
) -> PhotonDistribution:
    tail = _tail_estimate([abs(v) for v in values])
    values = _strip_trailing_zeros(values)
    cls = _classify(values, tail, tol_imag, tol_neg)
    return PhotonDistribution(
        values=tuple(values),
        truncation=len(values) - 1,
        tail_bound=tail,
        classification=cls,
    )


def _build_distribution(series, n_max, tol_imag, tol_neg) -> PhotonDistribution:
    """Run ``series(N) -> list[complex]`` under the adaptive truncation policy."""
    if n_max is not None:
        if n_max < 0:
            raise DomainError("n_max must be nonnegative")
        vals, _ = _trim_divergent(series(n_max))
        return _finalize(vals, tol_imag, tol_neg)
    n = _ADAPTIVE_START
    best: list[complex] | None = None
    while True:
        try:
            vals, trimmed = _trim_divergent(series(n))
        except RangeOverflowError:
            if best is None:
                raise
            return _finalize(best, tol_imag, tol_neg)
        best = vals
        tail = _tail_estimate([abs(v) for v in vals])
        if trimmed or tail < _TAIL_TARGET or n >= _ADAPTIVE_CAP:
            return _finalize(vals, tol_imag, tol_neg)
        if not math.isfinite(tail) and any(abs(v) > 1e30 for v in vals):
            # growing past any probability scale: divergent, stop extending
            return _finalize(vals, tol_imag, tol_neg)
        n *= 2


def distribution_from_values(
    values,
    tol_imag: float = DEFAULT_TOL_IMAG,
    tol_neg: float = DEFAULT_TOL_NEG,
) -> PhotonDistribution:
    """Wrap an explicit weight sequence in a classified distribution."""
    return _finalize([complex(v) for v in values], tol_imag, tol_neg)


# ---------------------------------------------------------------------------
# one-mode Gaussian routes
# ---------------------------------------------------------------------------

# The chain linking the printed y1 to the Hermite/Laguerre arguments is off
# by sqrt(2) relative to the closed squeezed/correlated form; rescaling the
# y's here restores termwise agreement with that form and unit total mass
# for displaced states.
_Y_ARG_SCALE = _SQRT2


def _roots(rm) -> tuple[complex, complex, complex]:
    rho = cmath.sqrt(complex(rm.r11) * complex(rm.r22))
    if rho == 0:
        return 0j, 0j, 0j
    s1 = cmath.sqrt(complex(rm.r11))
    return rho, s1, rho / s1


def _hermite_ratio_seq(rm, n_max: int) -> list[LogSigned]:
    """P_n / P0 for n = 0..n_max through the two-index Hermite sum."""
    ys1 = _Y_ARG_SCALE * rm.y1
    ys2 = _Y_ARG_SCALE * rm.y2
    rho, s1, s2 = _roots(rm)
    out: list[LogSigned] = []
    if rho == 0:
        w = (rm.r11 * ys1 + rm.r12 * ys2) * (rm.r12 * ys1 + rm.r22 * ys2)
        lw = LogSigned.from_value(w)
        lc = LogSigned.from_value(-2 * rm.r12)
        for n in range(n_max + 1):
            terms = []
            for k in range(n + 1):
                m = n - k
                if (m > 0 and lw.is_zero) or (k > 0 and lc.is_zero):
                    continue
                mag = (
                    log_factorial(n)
                    - n * math.log(2)
                    + m * (lw.log_magnitude if m else 0.0)
                    + k * (lc.log_magnitude if k else 0.0)
                    - 2 * log_factorial(m)
                    - log_factorial(k)
                )
                ph = (lw.sign_phase**m if m else 1) * (lc.sign_phase**k if k else 1)
                terms.append(LogSigned(mag, ph))
            out.append(logsigned_sum(terms))
        return out

    z1 = (rm.r11 * ys1 + rm.r12 * ys2) / (2 * s1)
    z2 = (rm.r12 * ys1 + rm.r22 * ys2) / (2 * s2)
    h1 = hermite_sequence_log(z1, n_max)
    h2 = hermite_sequence_log(z2, n_max)
    lc = LogSigned.from_value(-2 * rm.r12 / rho)
    lhalf = LogSigned.from_value(rho / 2)
    for n in range(n_max + 1):
        terms = []
        for k in range(n + 1):
            m = n - k
            if k > 0 and lc.is_zero:
                continue
            cross = h1[m] * h2[m]
            if cross.is_zero:
                continue
            mag = (
                log_factorial(n)
                + n * lhalf.log_magnitude
                + k * (lc.log_magnitude if k else 0.0)
                - 2 * log_factorial(m)
                - log_factorial(k)
                + cross.log_magnitude
            )
            ph = (
                (lhalf.sign_phase**n)
                * (lc.sign_phase**k if k else 1)
                * cross.sign_phase
            )
            terms.append(LogSigned(mag, ph))
        out.append(logsigned_sum(terms))
    return out


def _laguerre_ratio_seq(rm, n_max: int) -> list[LogSigned]:
    """P_n / P0 for n = 0..n_max through the Laguerre-product sum."""
    ys1 = _Y_ARG_SCALE * rm.y1
    ys2 = _Y_ARG_SCALE * rm.y2
    rho, s1, s2 = _roots(rm)
    if rho == 0:
        x1 = x2 = 0j
    else:
        quad = 2 * ys1 * ys2
        skew = (s1 / s2) * ys1 * ys1 + (s2 / s1) * ys2 * ys2
        x1 = 0.125 * (rm.r12 - rho) * (quad - skew)
        x2 = 0.125 * (rm.r12 + rho) * (quad + skew)
    lam_m = LogSigned.from_value(rm.r12 - rho)
    lam_p = LogSigned.from_value(rm.r12 + rho)
    l1 = [LogSigned.from_value(v) for v in laguerre_half_sequence(x1, n_max)]
    l2 = [LogSigned.from_value(v) for v in laguerre_half_sequence(x2, n_max)]
    out: list[LogSigned] = []
    for n in range(n_max + 1):
        sign_n = LogSigned(0.0, complex((-1) ** n))
        terms = []
        for s in range(n + 1):
            if (s > 0 and lam_m.is_zero) or (n - s > 0 and lam_p.is_zero):
                continue
            cross = l1[s] * l2[n - s]
            if cross.is_zero:
                continue
            mag = (
                s * (lam_m.log_magnitude if s else 0.0)
                + (n - s) * (lam_p.log_magnitude if n - s else 0.0)
                + cross.log_magnitude
            )
            ph = (
                (lam_m.sign_phase**s if s else 1)
                * (lam_p.sign_phase ** (n - s) if n - s else 1)
                * cross.sign_phase
            )
            terms.append(LogSigned(mag, ph))
        out.append(sign_n * logsigned_sum(terms))
    return out


def _gaussian_series(state: OneModeGaussianState, ratio_fn):
    rm = r_matrix(state)
    p0v = complex(p0(state))

    def series(n_max: int) -> list[complex]:
        return [p0v * t.value() for t in ratio_fn(rm, n_max)]

    return series


def pn_hermite(
    state: OneModeGaussianState,
    n_max: int | None = None,
    *,
    tol_imag: float = DEFAULT_TOL_IMAG,
    tol_neg: float = DEFAULT_TOL_NEG,
) -> PhotonDistribution:
    """Photon-number distribution through the two-index Hermite representation.

    Works for any finite covariance, including uncertainty-violating ones
    (the result then classifies as SignedReal or Complex).

    Raises:
        SingularDenominatorError: structural denominators of the R-matrix
            or P0 vanish.
    """
    return _build_distribution(
        _gaussian_series(state, _hermite_ratio_seq), n_max, tol_imag, tol_neg
    )


def pn_laguerre(
    state: OneModeGaussianState,
    n_max: int | None = None,
    *,
    tol_imag: float = DEFAULT_TOL_IMAG,
    tol_neg: float = DEFAULT_TOL_NEG,
) -> PhotonDistribution:
    """Photon-number distribution through the Laguerre-product representation.

    Independent of :func:`pn_hermite` except for the shared state
    parametrization; their termwise agreement is a package-level invariant.
    """
    return _build_distribution(
        _gaussian_series(state, _laguerre_ratio_seq), n_max, tol_imag, tol_neg
    )


def pn_centered_xyt(
    state: XYTState,
    n_max: int | None = None,
    *,
    tol_imag: float = DEFAULT_TOL_IMAG,
    tol_neg: float = DEFAULT_TOL_NEG,
) -> PhotonDistribution:
    """Distribution of a centered covariance triple, coded directly from the
    covariance invariants (no R-matrix plumbing):

        P_n = 2 n! sum_k (-1)^k |H_{n-k}(0)|^2 / (k! ((n-k)!)^2)
              (1 - 4 det)^k (Tr^2 - 4 det)^{(n-k)/2} / (4 det + 2 Tr + 1)^{n+1/2}

    Valid on both sides of the uncertainty boundary; for det < -(2 Tr + 1)/4
    the half-integer power makes the values purely imaginary.

    Raises:
        SingularDenominatorError: 4 det + 2 Tr + 1 = 0.
    """
    tr = state.x + state.y
    det = state.x * state.y - state.t * state.t
    a = 1 - 4 * det
    b = tr * tr - 4 * det  # (x - y)^2 + 4 t^2 >= 0
    c = 4 * det + 2 * tr + 1
    if c == 0:
        raise SingularDenominatorError("4 det + 2 Tr + 1 vanishes for this state")
    log_c = cmath.log(complex(c))
    la = LogSigned.from_value(-a)  # absorbs the (-1)^k alternation
    lb = None if b == 0 else math.log(b)

    def series(n_max: int) -> list[complex]:
        out = []
        for n in range(n_max + 1):
            terms = []
            for k in range(n + 1):
                if (n - k) % 2:
                    continue  # odd-degree Hermite vanishes at 0
                m = (n - k) // 2
                if (k > 0 and la.is_zero) or (m > 0 and lb is None):
                    continue
                mag = (
                    math.log(2)
                    + log_factorial(n)
                    + k * (la.log_magnitude if k else 0.0)
                    + (m * lb if m else 0.0)
                    - log_factorial(k)
                    - 2 * log_factorial(m)
                    - (n + 0.5) * log_c.real
                )
                ph = (la.sign_phase**k if k else 1) * cmath.exp(
                    -1j * (n + 0.5) * log_c.imag
                )
                terms.append(LogSigned(mag, ph))
            out.append(logsigned_sum(terms).value())
        return out

    return _build_distribution(series, n_max, tol_imag, tol_neg)


def pn_violation(
    tau: float,
    y: float,
    t: float = 0.0,
    n_max: int | None = None,
    *,
    tol_imag: float = DEFAULT_TOL_IMAG,
    tol_neg: float = DEFAULT_TOL_NEG,
) -> PhotonDistribution:
    """Even-photon weights of the tau-parameterized violation family,
    det Sigma = 1/4 - tau with x solved from (y, t):

        P_{2l} = (2l)! sum_i tau^{2(l-i)} / (i! ((2(l-i))!)^2)
                 ((x+y)^2 - 1 - 4 tau)^i
                 2^{2l - 4i + 1/2} / (x + y + 1 - 4 tau)^{2l + 1/2}

    Odd indices are identically zero.  This family is internally consistent
    with its closed complex special cases but is NOT the analytic
    continuation of :func:`pn_centered_xyt` away from tau = 0 (they agree at
    the vacuum boundary); its series is asymptotic, so adaptive truncation
    stops at the smallest term.  Classification is typically SignedReal
    ((x+y)^2 < 1 + 4 tau) or Complex (x + y + 1 < 4 tau) for tau > 0.

    Where both of those bases are positive the weights are positive with a
    divergent tail; no classification applies there and a
    NormalizationError is raised -- the covariance route
    (:func:`pn_centered_xyt`) is the meaningful diagnostic in that corner.
    Immediately above the boundary the optimal (smallest-term) truncation
    may keep so few terms that the values pass the probability window
    within their large tail uncertainty; boundary detection should always
    use the covariance route.

    Raises:
        DomainError: tau < 0 (the family parameterizes violations only).
        SingularDenominatorError: y = 0 or the half-power base vanishes.
        NormalizationError: positive divergent corner described above.
    """
    if tau < 0:
        raise DomainError("tau must be nonnegative")
    xyt = from_tau(tau, y, t)
    tr = xyt.x + xyt.y
    bp = tr * tr - 1 - 4 * tau
    w = tr + 1 - 4 * tau
    if w == 0:
        raise SingularDenominatorError("x + y + 1 - 4 tau vanishes")
    log_w = cmath.log(complex(w))
    lb = LogSigned.from_value(bp)
    log_tau = None if tau == 0 else math.log(tau)

    def series(n_cut: int) -> list[complex]:
        out: list[complex] = []
        for n in range(n_cut + 1):
            if n % 2:
                out.append(0j)
                continue
            l = n // 2
            terms = []
            for i in range(l + 1):
                j = l - i
                if (j > 0 and log_tau is None) or (i > 0 and lb.is_zero):
                    continue
                mag = (
                    log_factorial(2 * l)
                    + (2 * j * log_tau if j else 0.0)
                    + i * (lb.log_magnitude if i else 0.0)
                    - log_factorial(i)
                    - 2 * log_factorial(2 * j)
                    + (2 * l - 4 * i + 0.5) * math.log(2)
                    - (2 * l + 0.5) * log_w.real
                )
                ph = (lb.sign_phase**i if i else 1) * cmath.exp(
                    -1j * (2 * l + 0.5) * log_w.imag
                )
                terms.append(LogSigned(mag, ph))
            out.append(logsigned_sum(terms).value())
        return out

    return _build_distribution(series, n_max, tol_imag, tol_neg)


def mean_photon_xyt(x: float, y: float) -> float:
    """Rational mean-photon form for the centered zero-covariance family:

        <n> = 2 (x - y) / (6x - 2y + 4xy + 1)

    Reported exactly as defined.  Caveats: it returns 0 for every isotropic
    (x = y) state although the series mean there is x - 1/2, and its sign
    disagrees with the companion text value in part of the violation
    region; it is therefore never used as an internal oracle and callers
    should rely on its magnitude plus an explicit sign report.

    Raises:
        SingularDenominatorError: the denominator vanishes.
    """
    den = 6 * x - 2 * y + 4 * x * y + 1
    if den == 0:
        raise SingularDenominatorError("mean-photon denominator vanishes")
    return 2 * (x - y) / den


# ---------------------------------------------------------------------------
# two-mode squeezed light
# ---------------------------------------------------------------------------


def two_mode_p2k(s1: float, s2: float, k: int) -> float:
    """Probability of counting 2k photons in total from two independently
    squeezed oscillators with squeezing fractions s_j = tanh^2 r_j:

        P_2k = sqrt(1 - s1) sqrt(1 - s2) s2^k 2F1(-k, 1/2; 1; 1 - s1/s2)

    The formula is symmetric in (s1, s2); the larger fraction is used as
    the expansion base so the hypergeometric argument stays in [0, 1]
    (this also provides the continuous limit when one fraction is 0).

    Raises:
        DomainError: either fraction outside [0, 1) or k < 0.
    """
    if k < 0:
        raise DomainError("photon pair index must be nonnegative")
    for name, s in (("s1", s1), ("s2", s2)):
        if not 0 <= s < 1:
            raise DomainError(f"{name} must lie in [0, 1), got {s}")
    lo, hi = min(s1, s2), max(s1, s2)
    if hi == 0:
        return 1.0 if k == 0 else 0.0
    front = math.sqrt((1 - s1) * (1 - s2))
    return front * hi**k * gauss_2f1_terminating(k, 0.5, 1.0, 1 - lo / hi)


def two_mode_p2k_distribution(
    s1: float,
    s2: float,
    n_max: int | None = None,
    *,
    tol_imag: float = DEFAULT_TOL_IMAG,
    tol_neg: float = DEFAULT_TOL_NEG,
) -> PhotonDistribution:
    """Total-photon-number distribution (odd counts are zero)."""

    def series(n_cut: int) -> list[complex]:
        out: list[complex] = []
        for n in range(n_cut + 1):
            out.append(0j if n % 2 else complex(two_mode_p2k(s1, s2, n // 2)))
        return out

    return _build_distribution(series, n_max, tol_imag, tol_neg)


def two_mode_joint(params: LegendreParams, n1: int, n2: int) -> float:
    """Joint weight of the Legendre representation:

        P(n1, n2) = N exp(-|ln(n1!/n2!)|) F1^{(n1-n2)/2} F2^{(n1+n2)/2}
                    |L_{(n1+n2)/2}^{|n1-n2|/2}(F3)|^2

    Raises:
        ParityError: n1 + n2 odd (half-integer Legendre indices undefined).
        DomainError: negative indices.
    """
    if n1 < 0 or n2 < 0:
        raise DomainError("photon indices must be nonnegative")
    if (n1 + n2) % 2:
        raise ParityError(f"n1 + n2 must be even, got {n1} + {n2}")
    l = (n1 + n2) // 2
    m = abs(n1 - n2) // 2
    log_t = (
        -abs(log_factorial(n1) - log_factorial(n2))
        + ((n1 - n2) / 2) * math.log(params.f1)
        + ((n1 + n2) / 2) * math.log(params.f2)
    )
    leg = assoc_legendre(l, m, params.f3)
    if leg == 0.0:
        return 0.0
    return params.n_factor * math.exp(log_t + 2 * math.log(abs(leg)))


def two_mode_joint_distribution(
    params: LegendreParams, n1_max: int, n2_max: int
) -> TwoModeJointDistribution:
    """Tabulate the joint weights on [0, n1_max] x [0, n2_max].

    Odd-parity cells carry zero weight.  The caller chooses ``n_factor`` so
    the table is (near-)normalized; the residual above the retained box is
    reported as ``tail_bound``.
    """
    table = np.zeros((n1_max + 1, n2_max + 1))
    for n1 in range(n1_max + 1):
        for n2 in range(n2_max + 1):
            if (n1 + n2) % 2 == 0:
                table[n1, n2] = two_mode_joint(params, n1, n2)
    tail = max(0.0, 1.0 - float(table.sum()))
    return TwoModeJointDistribution(
        values=table, truncation=(n1_max, n2_max), tail_bound=tail
    )


# ---------------------------------------------------------------------------
# deformed-oscillator families
# ---------------------------------------------------------------------------


def _log_sinh(t: float) -> float:
    # overflow-free ln(sinh t) for t > 0
    return t - math.log(2) + math.log1p(-math.exp(-2 * t))


@lru_cache(maxsize=64)
def _deformed_log_weights(spec: DeformationSpec) -> tuple[float, tuple[float, ...]]:
    """(log C0, log term_n table) for the series-normalized families."""
    a2 = spec.alpha_mag2
    if a2 == 0:
        return 0.0, (0.0,)
    log_a2 = math.log(a2)
    logs: list[float] = []
    denom_acc = 0.0
    n = 0
    while True:
        if spec.kind is DeformationKind.F_COHERENT:
            if spec.f_values:
                if n >= len(spec.f_values):
                    raise InvalidSpecError(
                        "f_values exhausted before the normalization series converged"
                    )
                fv = spec.f_values[n]
                if fv == 0:
                    raise InvalidSpecError(f"f({n}) is zero")
                denom_acc += 2 * math.log(abs(fv))
            fact_w = 0.5 if spec.f_convention == "sqrt-factorial" else 1.0
            logs.append(n * log_a2 - fact_w * log_factorial(n) - denom_acc)
        else:  # Q_COHERENT
            if n >= 1:
                denom_acc += _log_sinh(spec.lam * n) - _log_sinh(spec.lam)
            logs.append(n * log_a2 - denom_acc)
        if n >= 8:
            top = max(logs)
            if logs[-1] < top - 620:  # below double-precision underflow
                break
            if n >= 20000:
                raise DivergentSeriesError(
                    "normalization series failed the term-ratio test"
                )
            if n >= 40 and logs[-1] > logs[-2] > logs[-3] > top + 1:
                raise DivergentSeriesError("normalization series diverges")
        n += 1
    top = max(logs)
    log_norm = top + math.log(math.fsum(math.exp(v - top) for v in logs))
    return -log_norm, tuple(logs)


def _squeezed_correlated_amplitude(spec: DeformationSpec) -> tuple[float, complex]:
    """(P0, Hermite argument g) of the squeezed/correlated family."""
    r, th = spec.r, spec.theta
    q, p = spec.mean_q, spec.mean_p
    tanh_r = math.tanh(r)
    g = (
        cmath.exp(-1j * th / 2)
        * math.sqrt(tanh_r)
        * (complex(q, -p) / 2 + cmath.exp(1j * th) / tanh_r * complex(q, p) / 2)
    )
    p0v = (1 / math.cosh(r)) * math.exp(
        -(p * p + q * q) / 2
        + (tanh_r / 2) * ((p * p - q * q) * math.cos(th) + 2 * p * q * math.sin(th))
    )
    return p0v, g


def deformed_pn(spec: DeformationSpec, n: int) -> float:
    """Weight of counting n photons in the selected deformed family.

    Normalization constants of the f- and q-coherent families are computed
    internally from their truncated series (with a term-ratio convergence
    check); the remaining families have closed forms.

    Raises:
        DomainError: n < 0.
        InvalidSpecError: inconsistent deformation parameters (zero or
            exhausted f-values, non-positive lam, negative squeeze).
        DivergentSeriesError: the normalization series fails its ratio test.
    """
    if n < 0:
        raise DomainError("photon number must be nonnegative")
    kind = spec.kind
    if kind is DeformationKind.POISSON:
        x_bar = spec.alpha_mag2
        if x_bar == 0:
            return 1.0 if n == 0 else 0.0
        return math.exp(-x_bar + n * math.log(x_bar) - log_factorial(n))
    if kind is DeformationKind.SQUEEZED_VACUUM:
        if n % 2:
            return 0.0
        m = n // 2
        t_half = math.tanh(abs(spec.r)) / 2
        if t_half == 0:
            return 1.0 if m == 0 else 0.0
        return math.exp(
            -math.log(math.cosh(spec.r))
            + 2 * m * math.log(t_half)
            + log_factorial(2 * m)
            - 2 * log_factorial(m)
        )
    if kind is DeformationKind.SQUEEZED_CORRELATED:
        if spec.r < 0:
            raise InvalidSpecError("squeeze modulus r must be nonnegative")
        if spec.r == 0:
            # unsqueezed limit: coherent statistics at |alpha|^2 = (q^2+p^2)/2
            x_bar = (spec.mean_q**2 + spec.mean_p**2) / 2
            return deformed_pn(
                DeformationSpec(DeformationKind.POISSON, alpha_mag2=x_bar), n
            )
        p0v, g = _squeezed_correlated_amplitude(spec)
        h = hermite_sequence_log(g, n)[-1]
        if h.is_zero:
            return 0.0
        return p0v * math.exp(
            n * math.log(math.tanh(spec.r) / 2)
            - log_factorial(n)
            + 2 * h.log_magnitude
        )
    if kind is DeformationKind.Q_COHERENT and spec.lam <= 0:
        raise InvalidSpecError("q-coherent family needs lam > 0")
    log_c0, logs = _deformed_log_weights(spec)
    if n >= len(logs):
        return 0.0
    return math.exp(log_c0 + logs[n])


def deformed_distribution(
    spec: DeformationSpec,
    n_max: int | None = None,
    *,
    tol_imag: float = DEFAULT_TOL_IMAG,
    tol_neg: float = DEFAULT_TOL_NEG,
) -> PhotonDistribution:
    """Tabulated distribution of a deformed family."""

    def series(n_cut: int) -> list[complex]:
        return [complex(deformed_pn(spec, n)) for n in range(n_cut + 1)]

    return _build_distribution(series, n_max, tol_imag, tol_neg)


# ---------------------------------------------------------------------------
# export
# ---------------------------------------------------------------------------


def _fmt(v: float) -> str:
    return format(v, ".17g")


def distribution_to_csv(dist: PhotonDistribution) -> str:
    """CSV export: metadata comment lines, then rows n, re, im."""
    lines = [
        f"# classification={dist.classification.value}",
        f"# truncation={dist.truncation}",
        f"# tail_bound={_fmt(dist.tail_bound)}",
        "n,re,im",
    ]
    for n, v in enumerate(dist.values):
        lines.append(f"{n},{_fmt(v.real)},{_fmt(v.imag)}")
    return "\n".join(lines) + "\n"


def distribution_to_json(dist: PhotonDistribution) -> str:
    """JSON export mirroring the distribution fields."""
    return json.dumps(
        {
            "values": [{"re": v.real, "im": v.imag} for v in dist.values],
            "truncation": dist.truncation,
            "tail_bound": dist.tail_bound,
            "classification": dist.classification.value,
        }
    )
