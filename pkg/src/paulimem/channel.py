"""Pauli channels used twice with correlated noise, and their derived parameters.

A channel draws one of the four Pauli transformations with probabilities q and
applies it to each of two qubits; with probability mu the second qubit suffers
the *same* transformation as the first, with probability 1 - mu an independent
one. Everything the capacity analysis needs derives from the signed error sums
eps_n and the 4x4 matrix eps_nk that scales the Pauli components of a state.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isfinite, sqrt

import numpy as np

from .errors import InvalidState, NonNormalized, OutOfRange
from .pauli import PAULI2, PRODUCT_INDEX, SIGN_TABLE

_SUM_TOL = 1e-9
_TRACE_TOL = 1e-9
_DEGENERATE_TOL = 1e-15

# Plain float table for scalar accumulation (see epsilon_vector).
_SIGN = [[float(SIGN_TABLE[i, j]) for j in range(4)] for i in range(4)]


@dataclass(frozen=True)
class PauliChannel:
    """Two correlated uses of a Pauli channel.

    q holds the probabilities of sigma_0..sigma_3 (validated, never silently
    renormalized); mu in [0, 1] is the probability that both uses suffer the
    same transformation.
    """

    q: tuple[float, float, float, float]
    mu: float

    def __post_init__(self):
        q = tuple(float(x) for x in self.q)
        if len(q) != 4:
            raise OutOfRange(f"need 4 probabilities, got {len(q)}")
        mu = float(self.mu)
        if not all(isfinite(x) for x in q) or not isfinite(mu):
            raise OutOfRange("channel parameters must be finite")
        if any(x < 0.0 or x > 1.0 for x in q):
            raise OutOfRange(f"probabilities outside [0, 1]: {q}")
        if not 0.0 <= mu <= 1.0:
            raise OutOfRange(f"mu outside [0, 1]: {mu}")
        total = ((q[0] + q[1]) + q[2]) + q[3]
        if abs(total - 1.0) > _SUM_TOL:
            raise NonNormalized(f"probabilities sum to {total!r}, not 1")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "mu", mu)

    def with_mu(self, mu: float) -> "PauliChannel":
        """Same error distribution, different memory."""
        return PauliChannel(self.q, mu)

    def joint_probabilities(self) -> np.ndarray:
        """p[i, j]: probability that sigma_i hits the first use and sigma_j the second."""
        q = np.array(self.q)
        return (1.0 - self.mu) * np.outer(q, q) + self.mu * np.diag(q)


def depolarizing(p: float, mu: float) -> PauliChannel:
    """Depolarizing channel q = (1 - p, p/3, p/3, p/3).

    p is restricted to [0, 3/4], the range where the identity remains the
    dominant outcome.
    """
    p = float(p)
    if not 0.0 <= p <= 0.75:
        raise OutOfRange(f"depolarizing parameter outside [0, 3/4]: {p}")
    third = p / 3.0
    return PauliChannel((1.0 - p, third, third, third), mu)


def mp_channel(p: float, mu: float) -> PauliChannel:
    """One-parameter family q = (p, 1/2 - p, 1/2 - p, p) with p in [0, 1/2]."""
    p = float(p)
    if not 0.0 <= p <= 0.5:
        raise OutOfRange(f"mp parameter outside [0, 1/2]: {p}")
    return PauliChannel((p, 0.5 - p, 0.5 - p, p), mu)


def epsilon_vector(channel: PauliChannel) -> np.ndarray:
    """Signed error sums eps_n = sum_k q_k s_kn; eps_0 is identically 1.

    Accumulated left to right in index order so that decimal probabilities
    cancel exactly (a channel with q0 + q1 == q2 + q3 really reports eps_1 == 0).
    """
    q = channel.q
    eps = np.empty(4)
    eps[0] = 1.0
    for n in range(1, 4):
        acc = 0.0
        for k in range(4):
            acc += q[k] * _SIGN[k][n]
        eps[n] = acc
    return eps


def epsilon_matrix(channel: PauliChannel) -> np.ndarray:
    """The symmetric 4x4 scaling factors eps_kk' of the two-qubit Pauli basis.

    eps_kk' = (1 - mu) eps_k eps_k' + mu eps_k'' where sigma_k sigma_k' is
    proportional to sigma_k''. Row and column 0 reproduce the single-use
    values; the diagonal grows affinely from eps_k^2 at mu = 0 to 1 at mu = 1.
    """
    eps = epsilon_vector(channel)
    mu = channel.mu
    out = np.empty((4, 4))
    for k in range(4):
        for kp in range(4):
            out[k, kp] = (1.0 - mu) * eps[k] * eps[kp] + mu * eps[PRODUCT_INDEX[k, kp]]
    return out


def epsilon_matrix_bruteforce(channel: PauliChannel) -> np.ndarray:
    """Same matrix, straight from the joint error distribution.

    eps_nk = sum_ij p_ij s_in s_jk; kept as an independent route for testing
    the closed form.
    """
    p = channel.joint_probabilities()
    return SIGN_TABLE.T @ p @ SIGN_TABLE


def ordering(channel: PauliChannel) -> tuple[int, int, int]:
    """Indices (l, m, s) of eps_1..eps_3 sorted by decreasing magnitude.

    Ties keep the smaller index first, which makes the output deterministic;
    the capacity is invariant under tied permutations.
    """
    eps = epsilon_vector(channel)
    ranked = sorted((1, 2, 3), key=lambda k: (-abs(eps[k]), k))
    return (ranked[0], ranked[1], ranked[2])


@dataclass(frozen=True)
class Thresholds:
    """Memory values where the channel-parameter ordering changes.

    mu_ml solves eps_mm(mu)^2 = eps_l^2 and mu_star solves
    eps_mm(mu)^2 + eps_ss(mu)^2 = 2 eps_l^2 (the point where maximally
    entangled inputs overtake the best product inputs). The public values are
    clamped to [0, 1]; the raw solutions are kept for diagnostics.

    degenerate marks channels with a single certain error (some q_i = 1,
    hence every |eps_k| = 1): both equations become 0 = 0 and the thresholds
    are reported as 0. no_threshold marks a negative radicand in the mu_star
    formula; for valid channels the radicand is provably nonnegative, so the
    flag only guards against pathological rounding.
    """

    mu_ml: float
    mu_star: float
    mu_ml_raw: float
    mu_star_raw: float
    degenerate: bool = False
    no_threshold: bool = False


def _clamp01(x: float) -> float:
    return min(max(x, 0.0), 1.0)


def thresholds(channel: PauliChannel) -> Thresholds:
    """Both memory thresholds of the channel (mu itself is ignored)."""
    eps = epsilon_vector(channel)
    l, m, s = ordering(channel)
    em2 = eps[m] * eps[m]
    es2 = eps[s] * eps[s]
    dm = 1.0 - em2
    ds = 1.0 - es2
    if dm < _DEGENERATE_TOL:
        # |eps_m| = 1 forces a point-mass q, so |eps_s| = 1 as well.
        return Thresholds(0.0, 0.0, 0.0, 0.0, degenerate=True)
    mu_ml_raw = (abs(eps[l]) - em2) / dm
    denom = dm * dm + ds * ds
    rad = 2.0 * eps[l] * eps[l] * denom - (dm - ds) ** 2
    if -1e-12 <= rad < 0.0:
        rad = 0.0  # provably >= 0; clear roundoff only
    if rad < 0.0:
        return Thresholds(
            _clamp01(mu_ml_raw), float("nan"), mu_ml_raw, float("nan"), no_threshold=True
        )
    mu_star_raw = (-dm * em2 - ds * es2 + sqrt(rad)) / denom
    return Thresholds(_clamp01(mu_ml_raw), _clamp01(mu_star_raw), mu_ml_raw, mu_star_raw)


def threshold_ml(channel: PauliChannel) -> float:
    """Memory value where eps_mm crosses |eps_l| (0 for degenerate channels)."""
    return thresholds(channel).mu_ml


def threshold_star(channel: PauliChannel) -> float:
    """Memory value above which entangled inputs win (0 for degenerate channels)."""
    return thresholds(channel).mu_star


@dataclass(frozen=True)
class ChannelParams:
    """Everything derived from a channel: eps vector, eps matrix, magnitude
    ordering and the two thresholds."""

    eps: np.ndarray
    eps2: np.ndarray
    ordering: tuple[int, int, int]
    mu_ml: float
    mu_star: float
    thresholds: Thresholds

    def __post_init__(self):
        self.eps.setflags(write=False)
        self.eps2.setflags(write=False)


def channel_params(channel: PauliChannel) -> ChannelParams:
    th = thresholds(channel)
    return ChannelParams(
        eps=epsilon_vector(channel),
        eps2=epsilon_matrix(channel),
        ordering=ordering(channel),
        mu_ml=th.mu_ml,
        mu_star=th.mu_star,
        thresholds=th,
    )


def apply_channel(channel: PauliChannel, rho: np.ndarray) -> np.ndarray:
    """Operator-sum action sum_ij p_ij (sigma_i x sigma_j) rho (sigma_i x sigma_j).

    rho must be Hermitian with unit trace; the output is again Hermitian,
    unit-trace and positive semidefinite.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise InvalidState(f"expected a 4x4 density operator, got shape {rho.shape}")
    tr = complex(np.trace(rho))
    if abs(tr - 1.0) > _TRACE_TOL:
        raise InvalidState(f"trace {tr}, expected 1")
    if np.abs(rho - rho.conj().T).max() > _TRACE_TOL:
        raise InvalidState("density operator is not Hermitian")
    p = channel.joint_probabilities()
    out = np.zeros((4, 4), dtype=complex)
    for i in range(4):
        for j in range(4):
            u = PAULI2[i, j]
            out += p[i, j] * (u @ rho @ u)
    return out


def apply_channel_weights(channel: PauliChannel, w: np.ndarray) -> np.ndarray:
    """Channel action in the Pauli basis: every weight scales by eps_nk.

    Expects the weights of a unit-trace operator (w[0, 0] = 1).
    """
    return epsilon_matrix(channel) * np.asarray(w, dtype=float)


def channel_from_config(cfg: dict, mu: float | None = None) -> PauliChannel:
    """Build a channel from a configuration mapping.

    Two layouts are accepted: {"q": [q0, q1, q2, q3], "mu": m} or
    {"family": "depolarizing" | "mp", "p": x, "mu": m}. An explicit mu
    argument overrides the one in the mapping.
    """
    if not isinstance(cfg, dict):
        raise OutOfRange("channel config must be a JSON object")
    if mu is None:
        if "mu" not in cfg:
            raise OutOfRange("channel config is missing 'mu'")
        mu = cfg["mu"]
    if ("q" in cfg) == ("family" in cfg):
        raise OutOfRange("channel config needs exactly one of 'q' or 'family'")
    if "q" in cfg:
        q = cfg["q"]
        if not isinstance(q, (list, tuple)) or len(q) != 4:
            raise OutOfRange("'q' must be a list of 4 probabilities")
        return PauliChannel(tuple(float(x) for x in q), float(mu))
    if "p" not in cfg:
        raise OutOfRange("family config is missing 'p'")
    family = cfg["family"]
    if family == "depolarizing":
        return depolarizing(float(cfg["p"]), float(mu))
    if family == "mp":
        return mp_channel(float(cfg["p"]), float(mu))
    raise OutOfRange(f"unknown channel family {family!r}")
