"""One-mode Gaussian states described by their five Wigner parameters: the
quadrature covariance matrix

    Sigma = [[sigma_pp, sigma_pq],
             [sigma_pq, sigma_qq]]

and the means <q>, <p>.  The module derives the auxiliary R-matrix feeding
the two-index Hermite representation of the photon-number distribution, the
no-photon probability P0, and the quadrature-uncertainty verdict

    det Sigma = sigma_pp sigma_qq - sigma_pq^2 >= 1/4.

States violating the inequality are deliberately representable: validity is
a query (`uncertainty_check`), never an invariant of the type.  In the
violation regime `p0` returns a complex diagnostic value instead of raising.

All types are frozen and all functions pure, so concurrent use is
unrestricted.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError, SingularDenominatorError

__all__ = [
    "OneModeGaussianState",
    "XYTState",
    "RMatrix",
    "UncertaintyVerdict",
    "uncertainty_check",
    "r_matrix",
    "p0",
    "from_tau",
]

_STATE_FIELDS = ("sigma_pp", "sigma_qq", "sigma_pq", "mean_q", "mean_p")


@dataclass(frozen=True)
class OneModeGaussianState:
    """Five Wigner parameters of a one-mode Gaussian state.

    Vacuum units: the vacuum has sigma_pp = sigma_qq = 1/2, sigma_pq = 0.
    """

    sigma_pp: float
    sigma_qq: float
    sigma_pq: float = 0.0
    mean_q: float = 0.0
    mean_p: float = 0.0

    def __post_init__(self):
        for name in _STATE_FIELDS:
            v = getattr(self, name)
            if not math.isfinite(v):
                raise DomainError(f"{name} must be finite, got {v!r}")

    @property
    def trace(self) -> float:
        return self.sigma_pp + self.sigma_qq

    @property
    def det(self) -> float:
        return self.sigma_pp * self.sigma_qq - self.sigma_pq**2

    @property
    def is_centered(self) -> bool:
        return self.mean_q == 0.0 and self.mean_p == 0.0

    # -- common families -------------------------------------------------

    @classmethod
    def vacuum(cls) -> "OneModeGaussianState":
        return cls(0.5, 0.5, 0.0)

    @classmethod
    def thermal(cls, n_bar: float) -> "OneModeGaussianState":
        if n_bar < 0:
            raise DomainError("mean photon number must be nonnegative")
        return cls(n_bar + 0.5, n_bar + 0.5, 0.0)

    @classmethod
    def squeezed_vacuum(cls, r: float) -> "OneModeGaussianState":
        return cls(math.exp(2 * r) / 2, math.exp(-2 * r) / 2, 0.0)

    @classmethod
    def squeezed_correlated(
        cls, r: float, theta: float, mean_q: float = 0.0, mean_p: float = 0.0
    ) -> "OneModeGaussianState":
        ch, sh = math.cosh(2 * r), math.sinh(2 * r)
        return cls(
            0.5 * (ch + math.cos(theta) * sh),
            0.5 * (ch - math.cos(theta) * sh),
            0.5 * math.sin(theta) * sh,
            mean_q,
            mean_p,
        )

    @classmethod
    def coherent(cls, mean_q: float, mean_p: float) -> "OneModeGaussianState":
        return cls(0.5, 0.5, 0.0, mean_q, mean_p)

    # -- JSON state descriptor (consumed by the CLI) ---------------------

    @classmethod
    def from_dict(cls, data: dict) -> "OneModeGaussianState":
        missing = [k for k in _STATE_FIELDS if k not in data]
        if missing:
            raise DomainError(f"state descriptor missing fields: {', '.join(missing)}")
        return cls(*(float(data[k]) for k in _STATE_FIELDS))

    def to_dict(self) -> dict:
        return {k: getattr(self, k) for k in _STATE_FIELDS}


@dataclass(frozen=True)
class XYTState:
    """Centered covariance triple (x, y, t) = (sigma_pp, sigma_qq, sigma_pq)."""

    x: float
    y: float
    t: float = 0.0

    def __post_init__(self):
        for name in ("x", "y", "t"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite")

    def to_state(self) -> OneModeGaussianState:
        return OneModeGaussianState(self.x, self.y, self.t)


@dataclass(frozen=True)
class RMatrix:
    """The symmetric 2x2 matrix R and the Hermite arguments y1, y2.

    Invariants (enforced for real covariance input): r22 = conj(r11),
    y2 = conj(y1), r12 real.
    """

    r11: complex
    r22: complex
    r12: float
    y1: complex
    y2: complex


@dataclass(frozen=True)
class UncertaintyVerdict:
    """det Sigma, its slack above 1/4, and the validity flag."""

    det_sigma: float
    slack: float
    valid: bool


def uncertainty_check(state: OneModeGaussianState) -> UncertaintyVerdict:
    """Evaluate the quadrature uncertainty relation det Sigma >= 1/4."""
    d = state.det
    slack = d - 0.25
    return UncertaintyVerdict(det_sigma=d, slack=slack, valid=slack >= 0)


def _r_denominator(state: OneModeGaussianState) -> float:
    return state.trace + 2 * state.det + 0.5


def r_matrix(state: OneModeGaussianState) -> RMatrix:
    """Derive the R-matrix and Hermite arguments of a state.

    R11 = conj(R22) = (sigma_pp - sigma_qq - 2i sigma_pq) / D,
    R12 = (1/2 - 2 det Sigma) / D,  D = Tr Sigma + 2 det Sigma + 1/2.

    For centered states y1 = y2 = 0 identically.  Otherwise

    y1 = conj(y2) = [(Tr Sigma - 1) <z*> + (sigma_pp - sigma_qq + 2i sigma_pq) <z>]
                    / (Tr Sigma - 2 det Sigma - 1/2),
    <z> = (<q> + i <p>) / sqrt(2).

    Raises:
        SingularDenominatorError: either denominator vanishes.
    """
    den = _r_denominator(state)
    if den == 0:
        raise SingularDenominatorError("Tr + 2 det + 1/2 vanishes for this state")
    r11 = complex(state.sigma_pp - state.sigma_qq, -2 * state.sigma_pq) / den
    r12 = (0.5 - 2 * state.det) / den
    if state.is_centered:
        y1 = 0j
    else:
        y_den = state.trace - 2 * state.det - 0.5
        if y_den == 0:
            raise SingularDenominatorError("Tr - 2 det - 1/2 vanishes for this state")
        z_mean = complex(state.mean_q, state.mean_p) / math.sqrt(2)
        y1 = (
            (state.trace - 1) * z_mean.conjugate()
            + complex(state.sigma_pp - state.sigma_qq, 2 * state.sigma_pq) * z_mean
        ) / y_den
    return RMatrix(r11=r11, r22=r11.conjugate(), r12=r12, y1=y1, y2=y1.conjugate())


def p0(state: OneModeGaussianState) -> float | complex:
    """Probability of counting zero photons.

        P0 = (det Sigma + Tr Sigma / 2 + 1/4)^(-1/2)
             * exp[ (-<p>^2 (sigma_qq + 1/2) - <q>^2 (sigma_pp + 1/2)
                     + 2 sigma_pq <q> <p>) / (Tr Sigma + 2 det Sigma + 1/2) ]

    For a centered state this reduces to 2 (2x - 4t^2 + 2y + 4xy + 1)^(-1/2).
    When the radicand is negative (uncertainty-violating state) the complex
    diagnostic value is returned instead of raising; the downstream
    distribution then classifies as non-probability.

    Raises:
        SingularDenominatorError: the radicand (equivalently D/2) vanishes.
    """
    radicand = state.det + state.trace / 2 + 0.25
    den = _r_denominator(state)
    if radicand == 0 or den == 0:
        raise SingularDenominatorError("P0 radicand vanishes for this state")
    expo = (
        -state.mean_p**2 * (state.sigma_qq + 0.5)
        - state.mean_q**2 * (state.sigma_pp + 0.5)
        + 2 * state.sigma_pq * state.mean_q * state.mean_p
    ) / den
    if radicand > 0:
        return radicand**-0.5 * math.exp(expo)
    return complex(radicand) ** -0.5 * cmath.exp(complex(expo))


def from_tau(tau: float, y: float, t: float = 0.0) -> XYTState:
    """Centered state with det Sigma = 1/4 - tau, i.e. x = (1/4 - tau + t^2) / y.

    tau > 0 violates the uncertainty relation by construction; tau = 0 sits
    exactly on the boundary.

    Raises:
        SingularDenominatorError: y = 0.
    """
    if y == 0:
        raise SingularDenominatorError("y must be nonzero to solve for x")
    return XYTState(x=(0.25 - tau + t * t) / y, y=y, t=t)
