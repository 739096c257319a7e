"""The six-parameter family of two-qubit pure states and its Pauli geometry.

Three angles fix the four real amplitudes through a hyperspherical
parametrization, three phases dress the |11>, |10> and |01> components. The
family covers every pure two-qubit state up to an irrelevant global phase.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from math import atan2, cos, hypot, sin

import numpy as np

from .errors import BadIndex, NonHermitian, NonNormalized, NotPure
from .pauli import PAULI2, SIGMA

_NORM_TOL = 1e-9
_IMAG_TOL = 1e-9


@dataclass(frozen=True)
class PureStateParams:
    """Parameters of a two-qubit pure state.

    theta, phi, psi set the amplitude magnitudes; phi11, phi10, phi01 are the
    phases of the |11>, |10>, |01> components relative to |00>. No canonical
    ranges are enforced (the trigonometric construction is total).
    """

    theta: float
    phi: float
    psi: float
    phi11: float = 0.0
    phi10: float = 0.0
    phi01: float = 0.0

    @property
    def varphi(self) -> float:
        """The combination (phi10 + phi01 - phi11) / 2 controlling the
        one-sided weight sum beta."""
        return (self.phi10 + self.phi01 - self.phi11) / 2.0

    def as_array(self) -> np.ndarray:
        """(theta, phi, psi, phi11, phi10, phi01) as a float vector."""
        return np.array([self.theta, self.phi, self.psi, self.phi11, self.phi10, self.phi01])

    @classmethod
    def from_array(cls, x) -> "PureStateParams":
        t, ph, ps, p11, p10, p01 = (float(v) for v in x)
        return cls(t, ph, ps, p11, p10, p01)

    def to_dict(self) -> dict:
        return {
            "theta": self.theta,
            "phi": self.phi,
            "psi": self.psi,
            "phi11": self.phi11,
            "phi10": self.phi10,
            "phi01": self.phi01,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "PureStateParams":
        return cls(
            float(d["theta"]),
            float(d["phi"]),
            float(d["psi"]),
            float(d["phi11"]),
            float(d["phi10"]),
            float(d["phi01"]),
        )


def amplitudes_from_angles(theta: float, phi: float, psi: float) -> tuple[float, float, float, float]:
    """Real amplitudes (c00, c11, c10, c01); their squares sum to 1.

    Individual values may be negative for some angle ranges; a sign is a
    phase, and keeping it preserves full coverage of the amplitude sphere.
    """
    half = theta / 2.0
    plus = (phi + psi) / 2.0
    minus = (phi - psi) / 2.0
    c00 = cos(plus) * cos(half)
    c11 = sin(minus) * sin(half)
    c10 = cos(minus) * sin(half)
    c01 = sin(plus) * cos(half)
    return c00, c11, c10, c01


def state_vector(params: PureStateParams) -> np.ndarray:
    """Amplitudes over |00>, |01>, |10>, |11> (unit norm)."""
    c00, c11, c10, c01 = amplitudes_from_angles(params.theta, params.phi, params.psi)
    return np.array(
        [
            c00,
            c01 * cmath.exp(1j * params.phi01),
            c10 * cmath.exp(1j * params.phi10),
            c11 * cmath.exp(1j * params.phi11),
        ]
    )


def density_matrix(vec: np.ndarray) -> np.ndarray:
    """Rank-1 projector |v><v| of a unit vector."""
    v = np.asarray(vec, dtype=complex)
    norm = np.linalg.norm(v)
    if abs(norm - 1.0) > _NORM_TOL:
        raise NonNormalized(f"state vector has norm {norm!r}")
    return np.outer(v, v.conj())


def pauli_weights(rho: np.ndarray) -> np.ndarray:
    """All sixteen weights w_nk = Tr(rho sigma_n x sigma_k) of a density operator.

    The traces of a Hermitian operator against Hermitian basis elements are
    real; the imaginary parts are checked against tolerance before being
    dropped, so a non-Hermitian input fails loudly instead of corrupting the
    weights.
    """
    rho = np.asarray(rho, dtype=complex)
    traces = np.einsum("nkab,ba->nk", PAULI2, rho)
    worst = np.abs(traces.imag).max()
    if worst > _IMAG_TOL:
        raise NonHermitian(f"weight imaginary part {worst:.3e} exceeds tolerance")
    return traces.real.copy()


def weights_to_density(w: np.ndarray) -> np.ndarray:
    """Reassemble (1/4) sum_nk w_nk sigma_n x sigma_k; inverse of pauli_weights."""
    w = np.asarray(w, dtype=float)
    return np.einsum("nk,nkab->ab", w, PAULI2) / 4.0


def alpha_beta(params: PureStateParams) -> tuple[float, float, float]:
    """Closed forms of the weight sums (alpha_plus, alpha_minus, beta).

    alpha_pm = w11^2 + w22^2 +- w33^2 and beta = sum_n (w_n0^2 + w_0n^2),
    evaluated directly from the angles and phases. Tight bounds:
    alpha_minus <= 1, alpha_plus <= 3, beta <= 2, and alpha_plus + beta <= 3,
    so no single pure state saturates alpha_plus and beta together.
    """
    th, ph, ps = params.theta, params.phi, params.psi
    sin2t = sin(th) ** 2
    transverse = 0.5 * sin2t * (
        cos(params.phi10 - params.phi01) ** 2 * (sin(ph) + sin(ps)) ** 2
        + cos(params.phi11) ** 2 * (sin(ph) - sin(ps)) ** 2
    )
    w33 = cos(th) * cos(ph) * cos(ps) - sin(ph) * sin(ps)
    varphi = params.varphi
    beta = 2.0 * (
        1.0 - sin2t * (sin(ps) ** 2 * cos(varphi) ** 2 + sin(ph) ** 2 * sin(varphi) ** 2)
    )
    return transverse + w33 * w33, transverse - w33 * w33, beta


def product_optimal_state(l: int, zeta: int = 1, xi: int = 1) -> np.ndarray:
    """(1/4)(sigma_0 + zeta sigma_l) x (sigma_0 + xi sigma_l).

    Both qubits sit in +-1 eigenstates of the same Pauli axis l; these are the
    entropy-minimizing inputs at low memory.
    """
    if l not in (1, 2, 3):
        raise BadIndex(f"axis index must be 1, 2 or 3, got {l!r}")
    if zeta not in (-1, 1) or xi not in (-1, 1):
        raise BadIndex(f"signs must be +1 or -1, got {(zeta, xi)!r}")
    a = (SIGMA[0] + zeta * SIGMA[l]) / 2.0
    b = (SIGMA[0] + xi * SIGMA[l]) / 2.0
    return np.kron(a, b)


def bell_state(eta: int, nu: int, xi: int) -> np.ndarray:
    """(1/4)(1 + eta s1s1 + nu s2s2 + xi s3s3); a Bell projector iff eta*nu*xi = -1.

    The four sign patterns with product -1 give the four maximally entangled
    Bell states; product +1 would give an operator that is not a pure-state
    projector.
    """
    if eta not in (-1, 1) or nu not in (-1, 1) or xi not in (-1, 1):
        raise BadIndex(f"signs must be +1 or -1, got {(eta, nu, xi)!r}")
    if eta * nu * xi != -1:
        raise NotPure(f"sign pattern {(eta, nu, xi)} has product +1, not a pure state")
    out = PAULI2[0, 0] + eta * PAULI2[1, 1] + nu * PAULI2[2, 2] + xi * PAULI2[3, 3]
    return out / 4.0


def random_pure_params(seed: int) -> PureStateParams:
    """Deterministic pseudo-random parameters, all six uniform on [0, 2*pi).

    Uniform in parameter space, not Haar-uniform on states; every pure state
    identity tested here holds pointwise, so full support is all that matters.
    """
    rng = np.random.default_rng(seed)
    vals = rng.uniform(0.0, 2.0 * np.pi, 6)
    return PureStateParams(*(float(v) for v in vals))


def params_from_state(vec: np.ndarray) -> PureStateParams:
    """Invert state_vector up to a global phase.

    Rotates the global phase so the |00> amplitude is real and nonnegative,
    reads the three relative phases, and recovers the angles from the
    amplitude magnitudes. Demonstrates that the family covers every pure
    state.
    """
    v = np.asarray(vec, dtype=complex)
    norm = np.linalg.norm(v)
    if abs(norm - 1.0) > _NORM_TOL:
        raise NonNormalized(f"state vector has norm {norm!r}")
    a00 = v[0]
    if abs(a00) > 1e-15:
        v = v * cmath.exp(-1j * cmath.phase(complex(a00)))
    r00 = abs(v[0])
    r01, r10, r11 = abs(v[1]), abs(v[2]), abs(v[3])
    theta = 2.0 * atan2(hypot(r10, r11), hypot(r00, r01))
    plus = atan2(r01, r00)
    minus = atan2(r11, r10)
    return PureStateParams(
        theta,
        plus + minus,
        plus - minus,
        cmath.phase(complex(v[3])),
        cmath.phase(complex(v[2])),
        cmath.phase(complex(v[1])),
    )
