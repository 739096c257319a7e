"""Output spectra, entropies, regimes, and the two-use capacity curve.

The two candidate input families (product states along the dominant Pauli
axis, and Bell states) both admit closed-form output spectra. The capacity
per use is 1 - S/2 with S the smaller of the two output entropies; the
equal-weight ensemble of the sixteen Pauli-conjugated copies of the optimal
input achieves it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .channel import ChannelParams, PauliChannel, apply_channel, channel_params
from .errors import InvalidSpectrum, InvalidState, OutOfRange
from .pauli import PAULI2

_SPECTRUM_TOL = 1e-9
_TIE_TOL = 1e-12
_ENSEMBLE_ENTROPY_TOL = 1e-10

SWEEP_CSV_HEADER = "mu,regime,c2,entropy_product,entropy_bell,l1,l2,l3,l4"


class Regime(str, Enum):
    """Which input family minimizes the output entropy."""

    PRODUCT = "product"
    ENTANGLED = "entangled"
    TIE = "tie"


def entropy_bits(lambdas) -> float:
    """Von Neumann entropy -sum lam log2(lam) of a 4-point spectrum, in bits.

    Eigenvalues in [-1e-9, 0) are treated as rounded zeros; anything more
    negative, or a total away from 1 by more than 1e-9, is rejected.
    """
    lam = np.asarray(lambdas, dtype=float)
    if lam.shape != (4,):
        raise InvalidSpectrum(f"expected 4 eigenvalues, got shape {lam.shape}")
    low = lam.min()
    if low < -_SPECTRUM_TOL:
        raise InvalidSpectrum(f"negative eigenvalue {low!r}")
    total = lam.sum()
    if abs(total - 1.0) > _SPECTRUM_TOL:
        raise InvalidSpectrum(f"eigenvalues sum to {total!r}, not 1")
    lam = np.clip(lam, 0.0, None)
    nz = lam[lam > 0.0]
    s = float(-np.sum(nz * np.log2(nz)))
    return max(s, 0.0)  # eigenvalues a hair above 1 give a tiny negative sum


def spectrum_product_regime(cp: ChannelParams) -> np.ndarray:
    """Output spectrum of the optimal product inputs, sorted descending.

    The four values are (1 + eps_ll +- 2 eps_l)/4 and (1 - eps_ll)/4 twice;
    they match the diagonalized output of any sigma_l eigenstate pair.
    """
    l = cp.ordering[0]
    e_l = cp.eps[l]
    e_ll = cp.eps2[l, l]
    lam = np.array(
        [1.0 + e_ll + 2.0 * e_l, 1.0 + e_ll - 2.0 * e_l, 1.0 - e_ll, 1.0 - e_ll]
    ) / 4.0
    return np.sort(lam)[::-1]


def spectrum_bell_regime(cp: ChannelParams) -> np.ndarray:
    """Output spectrum of any Bell input, sorted descending.

    (1 + s1 eps_11 + s2 eps_22 + s3 eps_33)/4 over the four sign patterns
    with product +1; all four Bell inputs give this same multiset, so no
    axis relabeling is needed.
    """
    e11, e22, e33 = cp.eps2[1, 1], cp.eps2[2, 2], cp.eps2[3, 3]
    lam = np.array(
        [
            1.0 + e33 + e11 + e22,
            1.0 + e33 - e11 - e22,
            1.0 - e33 + e11 - e22,
            1.0 - e33 - e11 + e22,
        ]
    ) / 4.0
    return np.sort(lam)[::-1]


@dataclass(frozen=True)
class CapacityResult:
    """Two-use capacity at one memory value, with both branch diagnostics."""

    mu: float
    regime: Regime
    lambdas_product: np.ndarray
    lambdas_bell: np.ndarray
    entropy_product: float
    entropy_bell: float
    c2: float
    mu_ml: float
    mu_star: float
    optimal_state_descriptor: dict

    def __post_init__(self):
        self.lambdas_product.setflags(write=False)
        self.lambdas_bell.setflags(write=False)

    def winning_spectrum(self) -> np.ndarray:
        """Spectrum of the branch named in optimal_state_descriptor."""
        if self.optimal_state_descriptor["family"] == "product":
            return self.lambdas_product
        return self.lambdas_bell

    def to_dict(self) -> dict:
        return {
            "mu": self.mu,
            "regime": self.regime.value,
            "c2": self.c2,
            "entropy_product": self.entropy_product,
            "entropy_bell": self.entropy_bell,
            "lambdas_product": [float(x) for x in self.lambdas_product],
            "lambdas_bell": [float(x) for x in self.lambdas_bell],
            "mu_ml": _json_float(self.mu_ml),
            "mu_star": _json_float(self.mu_star),
            "optimal_state": self.optimal_state_descriptor,
        }


def _json_float(x: float):
    return float(x) if np.isfinite(x) else None


def capacity_two_use(channel: PauliChannel) -> CapacityResult:
    """Classical capacity of two correlated uses, in bits per use.

    Evaluates both analytic branches and returns c2 = 1 - S_min/2. The regime
    label comes from comparing the two entropies directly (differences below
    1e-12 report TIE); mu_star is reported alongside but not used for the
    decision, because the entropy crossover can sit a hair away from it.
    On a tie the product family is named in the descriptor; both families
    are then optimal.
    """
    cp = channel_params(channel)
    lam_p = spectrum_product_regime(cp)
    lam_b = spectrum_bell_regime(cp)
    s_p = entropy_bits(lam_p)
    s_b = entropy_bits(lam_b)
    if abs(s_p - s_b) < _TIE_TOL:
        regime = Regime.TIE
    elif s_p < s_b:
        regime = Regime.PRODUCT
    else:
        regime = Regime.ENTANGLED
    if regime is Regime.ENTANGLED:
        descriptor = {"family": "bell", "signs": [1, -1, 1]}
    else:
        descriptor = {"family": "product", "l": cp.ordering[0]}
    c2 = 1.0 - min(s_p, s_b) / 2.0
    return CapacityResult(
        mu=channel.mu,
        regime=regime,
        lambdas_product=lam_p,
        lambdas_bell=lam_b,
        entropy_product=s_p,
        entropy_bell=s_b,
        c2=c2,
        mu_ml=cp.mu_ml,
        mu_star=cp.mu_star,
        optimal_state_descriptor=descriptor,
    )


def capacity_sweep(channel_base: PauliChannel, mu_grid) -> list[CapacityResult]:
    """Capacity at every memory value of the grid, with q held fixed."""
    results = []
    for mu in mu_grid:
        mu = float(mu)
        if not 0.0 <= mu <= 1.0:
            raise OutOfRange(f"memory value outside [0, 1]: {mu}")
        results.append(capacity_two_use(channel_base.with_mu(mu)))
    return results


def _ensemble_outputs(channel: PauliChannel, rho_star: np.ndarray) -> list[np.ndarray]:
    outs = []
    for i in range(4):
        for j in range(4):
            u = PAULI2[i, j]
            outs.append(apply_channel(channel, u @ rho_star @ u))
    return outs


def ensemble_output_entropies(channel: PauliChannel, rho_star: np.ndarray) -> np.ndarray:
    """Output entropies of the sixteen Pauli-conjugated copies of rho_star.

    The channel is covariant under Pauli conjugation, so all sixteen agree.
    """
    ents = []
    for out in _ensemble_outputs(channel, rho_star):
        ents.append(entropy_bits(np.linalg.eigvalsh(out)))
    return np.array(ents)


def verify_ensemble_achievability(channel: PauliChannel, rho_star: np.ndarray) -> float:
    """Max-norm deviation of the equal-weight ensemble's average output from I/4.

    The sixteen inputs (sigma_i x sigma_j) rho (sigma_i x sigma_j), sent with
    equal probabilities, average to the maximally mixed output, and each
    member has the same output entropy; together these make 1 - S/2
    achievable, not just an upper bound. Raises InvalidState if the member
    entropies spread by more than 1e-10.
    """
    outs = _ensemble_outputs(channel, rho_star)
    avg = sum(outs) / 16.0
    deviation = float(np.abs(avg - np.eye(4) / 4.0).max())
    ents = [entropy_bits(np.linalg.eigvalsh(out)) for out in outs]
    spread = max(ents) - min(ents)
    if spread > _ENSEMBLE_ENTROPY_TOL:
        raise InvalidState(f"ensemble output entropies spread by {spread:.3e}")
    return deviation


def _csv_num(x: float) -> str:
    return format(float(x) + 0.0, ".12g")  # + 0.0 normalizes -0.0


def sweep_to_csv(results: list[CapacityResult]) -> str:
    """Fixed-schema CSV of a sweep; l1..l4 hold the winning branch spectrum."""
    lines = [SWEEP_CSV_HEADER]
    for r in results:
        cells = [
            _csv_num(r.mu),
            r.regime.value,
            _csv_num(r.c2),
            _csv_num(r.entropy_product),
            _csv_num(r.entropy_bell),
        ]
        cells.extend(_csv_num(x) for x in r.winning_spectrum())
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def sweep_to_json(results: list[CapacityResult]) -> str:
    """JSON array of full CapacityResult objects (double precision)."""
    return json.dumps([r.to_dict() for r in results], indent=2) + "\n"
