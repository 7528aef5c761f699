"""Seeded random channel generation for the coexisting WET / WIT systems.

Links from the energy transmitter to the energy receivers are Rician with
a deterministic line-of-sight component; every other link is Rayleigh.
Path loss enters as a scalar amplitude factor so each entry has average
power equal to the configured linear path loss.  Every trial owns an
independent PRNG stream derived from (rng_seed, trial_index) through a
SplitMix64 mix, so trials are reproducible and order-independent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, fields, replace
from pathlib import Path

import numpy as np

from .numerics import NumericalFailure

_MASK64 = (1 << 64) - 1
_SPLITMIX_GAMMA = 0x9E3779B97F4A7C15


def per_trial_seed(base_seed: int, trial_index: int) -> int:
    """Derive the 64-bit PRNG seed for one trial via the SplitMix64 finalizer.

    Distinct trial indices map to distinct seeds for a fixed base: the
    pre-mix states differ and the mixing function is a bijection on 64-bit
    words.  Pure function, safe to call from any thread in any order.
    """
    z = (int(base_seed) + (int(trial_index) + 1) * _SPLITMIX_GAMMA) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (z ^ (z >> 31)) & _MASK64


def db_to_linear(db: float) -> float:
    """Power ratio for a dB value."""
    return 10.0 ** (db / 10.0)


def dbm_to_watts(dbm: float) -> float:
    return 10.0 ** ((dbm - 30.0) / 10.0)


def watts_to_dbm(watts: float) -> float:
    return 10.0 * math.log10(watts) + 30.0


def uniform_profile(k: int) -> tuple[float, ...]:
    """Equal energy-profile weights alpha_k = 1/K."""
    return (1.0 / k,) * k


@dataclass(frozen=True)
class ScenarioConfig:
    """Full description of one simulated scenario.

    Powers are in watts, times in seconds, path losses in dB (positive =
    attenuation).  ``alpha`` is the energy-profile vector; ``None`` means
    the uniform profile 1/K.  The harvesting efficiency ``eta`` is carried
    here but only applied when reporting energies in physical units; the
    beamforming optimization itself is efficiency-independent.

    Defaults follow the reference numerical setup: a 4-antenna energy
    transmitter serving 20 single-antenna receivers at 40 dB path loss,
    a 4x4 information link at 80 dB path loss, 1 W transmit powers,
    -70 dBm noise.  The Rician K-factor default of 5 dB is a documented
    choice (see README); rank statistics of the energy covariance depend
    on it.
    """

    m_e: int = 4
    n_e: int = 1
    k: int = 20
    m_i: int = 4
    n_i: int = 4
    p_e: float = 1.0
    p_i: float = 1.0
    sigma2: float = 1e-10
    eta: float = 0.5
    t_block: float = 1.0
    alpha: tuple[float, ...] | None = None
    pathloss_et_er_db: float = 40.0
    pathloss_it_ir_db: float = 80.0
    pathloss_et_ir_db: float = 80.0
    rician_k_db: float = 5.0
    rng_seed: int = 12345

    def __post_init__(self):
        for name in ("m_e", "n_e", "k", "m_i", "n_i"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")
        for name in ("p_e", "p_i", "sigma2", "t_block"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be > 0")
        if not 0.0 < self.eta <= 1.0:
            raise ValueError("eta must lie in (0, 1]")
        alpha = self.alpha
        if alpha is None:
            alpha = uniform_profile(self.k)
        else:
            alpha = tuple(float(a) for a in alpha)
            if len(alpha) != self.k:
                raise ValueError(f"alpha has {len(alpha)} entries, expected K={self.k}")
            if any(a < 0 for a in alpha):
                raise ValueError("alpha entries must be non-negative")
            if abs(sum(alpha) - 1.0) > 1e-12:
                raise ValueError(f"alpha must sum to 1, got {sum(alpha)!r}")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "rng_seed", int(self.rng_seed) & _MASK64)

    def replace(self, **changes) -> "ScenarioConfig":
        """Like dataclasses.replace, but resets alpha to uniform when K
        changes and no explicit profile is given."""
        if "k" in changes and "alpha" not in changes:
            changes["alpha"] = None
        return replace(self, **changes)

    def as_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def to_text(self) -> str:
        """Serialize to the flat key=value config format."""
        lines = ["# beamshare scenario configuration"]
        for f in fields(self):
            value = getattr(self, f.name)
            if f.name == "alpha":
                value = ",".join(repr(a) for a in value)
            lines.append(f"{f.name} = {value}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "ScenarioConfig":
        known = {f.name: f for f in fields(cls)}
        raw: dict[str, str] = {}
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"line {lineno}: expected 'key = value', got {line!r}")
            key, value = (part.strip() for part in line.split("=", 1))
            if key not in known:
                raise ValueError(f"line {lineno}: unknown config key {key!r}")
            raw[key] = value
        kwargs: dict = {}
        for key, value in raw.items():
            kwargs[key] = parse_config_value(key, value)
        return cls(**kwargs)

    def to_file(self, path: str | Path) -> None:
        Path(path).write_text(self.to_text())

    @classmethod
    def from_file(cls, path: str | Path) -> "ScenarioConfig":
        return cls.from_text(Path(path).read_text())


_INT_KEYS = {"m_e", "n_e", "k", "m_i", "n_i", "rng_seed"}


def parse_config_value(key: str, value: str):
    """Parse one config-file / CLI override value into its typed form."""
    value = value.strip()
    if key == "alpha":
        if value.lower() in {"", "none", "uniform"}:
            return None
        return tuple(float(part) for part in value.split(","))
    if key in _INT_KEYS:
        return int(value)
    return float(value)


@dataclass(frozen=True)
class ChannelRealization:
    """One draw of every channel matrix, plus the config that produced it.

    ``G`` stacks the K energy-transmitter-to-receiver matrices as a
    (K, N_E, M_E) array; ``F`` (N_I x M_E) is the interference path from
    the energy transmitter to the information receiver and ``H``
    (N_I x M_I) the information link itself.  Entries are amplitude gains
    with path loss folded in.
    """

    config: ScenarioConfig
    G: np.ndarray = field(repr=False)
    F: np.ndarray = field(repr=False)
    H: np.ndarray = field(repr=False)
    seed_used: int = 0


def complex_gaussian(rng: np.random.Generator, shape: tuple[int, ...]) -> np.ndarray:
    """Circularly-symmetric complex Gaussian entries with unit average power."""
    parts = rng.standard_normal(size=(2,) + shape)
    return (parts[0] + 1j * parts[1]) / math.sqrt(2.0)


def _rician_mix(rician_k_db: float) -> tuple[float, float]:
    """LOS and scatter amplitude weights for a K-factor in dB (unit power)."""
    if math.isinf(rician_k_db):
        if rician_k_db > 0:
            return 1.0, 0.0
        return 0.0, 1.0
    kf = db_to_linear(rician_k_db)
    return math.sqrt(kf / (kf + 1.0)), math.sqrt(1.0 / (kf + 1.0))


def los_matrix(n_e: int, m_e: int) -> np.ndarray:
    """Deterministic rank-1 line-of-sight component, unit-modulus entries.

    The outer product of all-ones (zero-phase) vectors: the simplest
    reproducible choice, identical for every receiver and trial.
    """
    return np.ones((n_e, m_e), dtype=complex)


def _full_rank_draw(
    rng: np.random.Generator, shape: tuple[int, int], amplitude: float
) -> np.ndarray:
    """Rayleigh draw, redrawn in the measure-zero event of rank deficiency."""
    for _ in range(16):
        mat = amplitude * complex_gaussian(rng, shape)
        sv = np.linalg.svd(mat, compute_uv=False)
        if sv[-1] > 1e-9 * sv[0]:
            return mat
    raise NumericalFailure(f"could not draw a full-rank {shape} channel matrix")


def sample_channels(config: ScenarioConfig, trial_index: int) -> ChannelRealization:
    """Draw one channel realization, deterministic in (config, trial_index).

    Draw order is fixed (G, then F, then H) so the energy-side channels are
    identical across configs that differ only in the information link.
    """
    seed = per_trial_seed(config.rng_seed, trial_index)
    rng = np.random.default_rng(seed)

    amp_g = math.sqrt(db_to_linear(-config.pathloss_et_er_db))
    amp_f = math.sqrt(db_to_linear(-config.pathloss_et_ir_db))
    amp_h = math.sqrt(db_to_linear(-config.pathloss_it_ir_db))

    los_w, scatter_w = _rician_mix(config.rician_k_db)
    los = los_matrix(config.n_e, config.m_e)
    scatter = complex_gaussian(rng, (config.k, config.n_e, config.m_e))
    g = amp_g * (los_w * los[np.newaxis, :, :] + scatter_w * scatter)

    f = _full_rank_draw(rng, (config.n_i, config.m_e), amp_f)
    h = _full_rank_draw(rng, (config.n_i, config.m_i), amp_h)

    return ChannelRealization(config=config, G=g, F=f, H=h, seed_used=seed)
