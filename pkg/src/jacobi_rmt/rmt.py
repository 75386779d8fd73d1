"""Monte Carlo for squared singular values of ``Y = G_r ... G_{s+1} T_s ... T_1``.

Factor ``j`` (1-based) has shape ``(n + nu_j) x (n + nu_{j-1})``.  Factors
``1..s`` are truncations of ``l_j x l_j`` Haar unitaries with
``l_j = 2n + kappa_j``; factors ``s+1..r`` are complex Ginibre matrices with
``E|g|^2 = 1``.  Spectra are rescaled by ``n^{-(r-s)}``.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .moments import ModelParams, moment_jacobi
from .spectral.support import endpoints

MASK64 = (1 << 64) - 1


class ConfigError(ValueError):
    """Inconsistent ensemble configuration."""


def mix_seed(master: int, index: int) -> int:
    """64-bit seed for replicate ``index``: splitmix64 finalizer applied to
    ``master + (index + 1) * 0x9E3779B97F4A7C15``."""
    z = (int(master) + (int(index) + 1) * 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def sample_ginibre(rows: int, cols: int, rng: np.random.Generator) -> np.ndarray:
    """Complex Gaussian matrix; real and imaginary parts each have variance 1/2."""
    if rows < 1 or cols < 1:
        raise ValueError("matrix dimensions must be positive")
    g = rng.standard_normal((rows, cols, 2))
    return (g[..., 0] + 1j * g[..., 1]) * math.sqrt(0.5)


def sample_haar_unitary(l: int, rng: np.random.Generator) -> np.ndarray:
    """Haar unitary from the QR factorization of a Ginibre matrix.

    Columns of ``Q`` are multiplied by the phases of ``diag(R)`` so the
    factorization is unique and the result is Haar distributed.
    """
    if l < 1:
        raise ValueError("l must be positive")
    for _ in range(8):
        z = sample_ginibre(l, l, rng)
        q, r = np.linalg.qr(z)
        d = np.diag(r)
        ad = np.abs(d)
        if np.all(ad > 1e-300):
            return q * (d / ad)
    raise ArithmeticError("repeatedly drew numerically singular Ginibre matrices")


def sample_truncation(l: int, m_rows: int, n_cols: int, rng: np.random.Generator) -> np.ndarray:
    """Upper-left ``m_rows x n_cols`` block of a fresh ``l x l`` Haar unitary."""
    if m_rows < 1 or n_cols < 1:
        raise ValueError("block dimensions must be positive")
    if l < m_rows + n_cols:
        raise ValueError(f"need l >= m + n, got l={l}, m={m_rows}, n={n_cols}")
    return sample_haar_unitary(l, rng)[:m_rows, :n_cols].copy()


@dataclass(frozen=True)
class EnsembleConfig:
    n: int
    r: int
    s: int
    nu: tuple[int, ...] | None = None
    kappa: tuple[int, ...] | None = None
    trials: int = 50
    seed: int = 0
    k_max: int = 4

    def __post_init__(self):
        n, r, s = self.n, self.r, self.s
        if n < 1:
            raise ConfigError("n must be positive")
        if r < 1 or not 0 <= s < r:
            raise ConfigError(f"need r >= 1 and 0 <= s < r, got r={r}, s={s}")
        nu = tuple(int(v) for v in self.nu) if self.nu is not None else (0,) * (r + 1)
        if len(nu) != r + 1:
            raise ConfigError(f"nu needs r+1 = {r + 1} entries, got {len(nu)}")
        if nu[0] != 0:
            raise ConfigError("nu_0 must be 0")
        if any(v < 0 for v in nu):
            raise ConfigError("nu entries must be nonnegative")
        if self.kappa is None:
            kappa = tuple(nu[j] + nu[j - 1] for j in range(1, s + 1))
        else:
            kappa = tuple(int(v) for v in self.kappa)
        if len(kappa) != s:
            raise ConfigError(f"kappa needs s = {s} entries, got {len(kappa)}")
        for j, kj in enumerate(kappa, start=1):
            if kj < nu[j] + nu[j - 1]:
                raise ConfigError(
                    f"l_{j} = 2n + {kj} is smaller than the block size sum "
                    f"(needs kappa_{j} >= nu_{j} + nu_{j - 1} = {nu[j] + nu[j - 1]})"
                )
        if self.trials < 0 or self.k_max < 1:
            raise ConfigError("trials must be >= 0 and k_max >= 1")
        if not 0 <= self.seed <= MASK64:
            raise ConfigError("seed must fit in 64 bits")
        object.__setattr__(self, "nu", nu)
        object.__setattr__(self, "kappa", kappa)

    def shape(self, j: int) -> tuple[int, int]:
        return self.n + self.nu[j], self.n + self.nu[j - 1]

    def l(self, j: int) -> int:
        return 2 * self.n + self.kappa[j - 1]


@dataclass(frozen=True)
class EmpiricalSpectrum:
    eigenvalues: np.ndarray
    n: int
    replicate_seed: int

    def moment(self, k: int) -> float:
        return float(np.mean(self.eigenvalues ** k))


def product_matrix(config: EnsembleConfig, rng: np.random.Generator, *,
                   truncation_norms: list | None = None) -> np.ndarray:
    """Draw the factors in order T_1, ..., T_s, G_{s+1}, ..., G_r and multiply."""
    y = None
    for j in range(1, config.r + 1):
        m, k = config.shape(j)
        if j <= config.s:
            f = sample_truncation(config.l(j), m, k, rng)
            if truncation_norms is not None:
                truncation_norms.append(np.linalg.svd(f, compute_uv=False))
        else:
            f = sample_ginibre(m, k, rng)
        y = f if y is None else f @ y
    return y


def sample_spectrum(config: EnsembleConfig, replicate_index: int) -> EmpiricalSpectrum:
    """Squared singular values of the product, divided by ``n^{r-s}``."""
    seed = mix_seed(config.seed, replicate_index)
    rng = np.random.default_rng(seed)
    y = product_matrix(config, rng)
    if y.shape != (config.n + config.nu[config.r], config.n):
        raise ConfigError(f"unexpected product shape {y.shape}")
    sv = np.linalg.svd(y, compute_uv=False)
    lam = np.sort(sv ** 2 / float(config.n) ** (config.r - config.s))
    return EmpiricalSpectrum(lam, config.n, seed)


def sample_spectra(config: EnsembleConfig, workers: int = 1) -> list[EmpiricalSpectrum]:
    """All replicates in index order; ``workers > 1`` runs them in threads."""
    idx = range(config.trials)
    if workers <= 1:
        return [sample_spectrum(config, i) for i in idx]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda i: sample_spectrum(config, i), idx))


@dataclass(frozen=True)
class MomentComparison:
    k: int
    mean: float
    standard_error: float
    theoretical: float

    @property
    def z_score(self) -> float:
        if self.standard_error == 0:
            return 0.0 if self.mean == self.theoretical else math.inf
        return (self.mean - self.theoretical) / self.standard_error

    @property
    def passed(self) -> bool:
        return abs(self.mean - self.theoretical) <= 3 * self.standard_error


@dataclass(frozen=True)
class ComparisonReport:
    config: EnsembleConfig
    moments: tuple[MomentComparison, ...]
    max_eigenvalue: float
    x_star: float
    edge_allowance: float = 0.15
    spectra: tuple[EmpiricalSpectrum, ...] = field(default=(), repr=False, compare=False)

    @property
    def edge_passed(self) -> bool:
        return self.max_eigenvalue <= self.x_star * (1 + self.edge_allowance)

    @property
    def verdicts(self) -> list[bool]:
        return [m.passed for m in self.moments]

    @property
    def passed(self) -> bool:
        return all(self.verdicts) and self.edge_passed

    def to_dict(self) -> dict:
        c = self.config
        return {
            "config": {
                "n": c.n, "r": c.r, "s": c.s, "nu": list(c.nu), "kappa": list(c.kappa),
                "trials": c.trials, "seed": c.seed, "k_max": c.k_max,
            },
            "moments": [
                {
                    "k": m.k,
                    "mean": m.mean,
                    "standard_error": m.standard_error,
                    "theoretical": m.theoretical,
                    "z_score": m.z_score,
                    "passed": m.passed,
                }
                for m in self.moments
            ],
            "max_eigenvalue": self.max_eigenvalue,
            "x_star": self.x_star,
            "edge_allowance": self.edge_allowance,
            "edge_passed": self.edge_passed,
            "passed": self.passed,
        }


def compare(config: EnsembleConfig, spectra: list[EmpiricalSpectrum]) -> ComparisonReport:
    """Per-replicate moments, their mean and standard error, against J_{r,s,1}."""
    if len(spectra) < 2:
        raise ConfigError("need at least 2 replicates for a standard error")
    params = ModelParams(config.r, config.s, 1)
    rows = []
    for k in range(1, config.k_max + 1):
        per = np.array([sp.moment(k) for sp in spectra])
        mean = float(per.mean())
        se = float(per.std(ddof=1) / math.sqrt(len(per)))
        rows.append(MomentComparison(k, mean, se, float(moment_jacobi(params, k))))
    lam_max = max(float(sp.eigenvalues[-1]) for sp in spectra)
    return ComparisonReport(config, tuple(rows), lam_max, endpoints(params).x_star,
                            spectra=tuple(spectra))


def run_experiment(config: EnsembleConfig, workers: int = 1) -> ComparisonReport:
    if config.trials < 2:
        raise ConfigError("trials must be >= 2 (standard error undefined otherwise)")
    return compare(config, sample_spectra(config, workers))
