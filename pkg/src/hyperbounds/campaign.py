"""Randomized checks of the degree bounds against computed spectral radii."""

from __future__ import annotations

import math
import random
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .bounds import bound
from .combinatorics import binom
from .hypergraph import Hypergraph, HypergraphError, degree_sequence, random_m
from .spectral import SpectralConfig, spectral_radius

OPERATOR_FOR = {"adjacency": "adjacency", "signless": "signless"}
VIOLATION_THRESHOLD = 1e-6


@dataclass(frozen=True)
class CampaignConfig:
    kind: str = "adjacency"
    n_min: int = 4
    n_max: int = 12
    k_values: tuple[int, ...] = (2, 3, 4)
    # None: from the sparsest connectable size up to half of all k-subsets
    m_range: tuple[int, int] | None = None
    trials: int = 1000
    seed: int = 0
    tolerance: float = 1e-10
    max_iterations: int = 1_000_000
    threshold: float = VIOLATION_THRESHOLD

    def __post_init__(self) -> None:
        if self.kind not in OPERATOR_FOR:
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not self.k_values or min(self.k_values) < 2:
            raise ValueError("k values must all be >= 2")
        if self.n_max < max(self.k_values):
            raise ValueError(f"n_max={self.n_max} is below the largest k")


@dataclass
class TrialRecord:
    trial: int | None
    seed: int | None
    n: int
    k: int
    m: int
    bound: float
    argmin_s: int
    computed: float
    lower: float
    upper: float
    converged: bool
    degree_bracket_ok: bool

    @property
    def margin(self) -> float:
        return self.bound - self.computed


@dataclass
class CampaignResult:
    kind: str
    trials: int
    records: list[TrialRecord] = field(default_factory=list)
    skipped: list[int] = field(default_factory=list)
    threshold: float = VIOLATION_THRESHOLD

    @property
    def violations(self) -> list[TrialRecord]:
        return [r for r in self.records if r.bound < r.computed - self.threshold]

    @property
    def non_converged(self) -> int:
        return sum(not r.converged for r in self.records)

    @property
    def degree_bracket_failures(self) -> list[TrialRecord]:
        return [r for r in self.records if not r.degree_bracket_ok]

    def margin_stats(self) -> dict[str, float | None]:
        margins = [r.margin for r in self.records if r.converged]
        if not margins:
            return {"min": None, "median": None, "max": None}
        return {"min": min(margins), "median": statistics.median(margins), "max": max(margins)}

    def to_dict(self) -> dict:
        def row(r: TrialRecord) -> dict:
            return {"seed": r.seed, "n": r.n, "k": r.k, "m": r.m,
                    "bound": r.bound, "computed": r.computed, "margin": r.margin}

        return {
            "kind": self.kind,
            "trials": self.trials,
            "completed": len(self.records),
            "skipped": len(self.skipped),
            "non_converged": self.non_converged,
            "violations": [row(r) for r in self.violations],
            "degree_bracket_failures": [row(r) for r in self.degree_bracket_failures],
            "margin_stats": self.margin_stats(),
        }


def check_instance(h: Hypergraph, kind: str, config: SpectralConfig | None = None,
                   seed: int | None = None, trial: int | None = None) -> TrialRecord:
    """Bound and spectral radius for one hypergraph."""
    config = config or SpectralConfig()
    d = degree_sequence(h)
    report = bound(d, h.n, h.k, kind)
    est = spectral_radius(h, OPERATOR_FOR[kind], config)
    w = 1 if kind == "adjacency" else 2
    lo, hi = w * d.degrees[-1], w * d.degrees[0]
    ok = lo - VIOLATION_THRESHOLD <= est.value <= hi + VIOLATION_THRESHOLD
    return TrialRecord(trial, seed, h.n, h.k, h.m, report.min_value, report.argmin_s,
                       est.value, est.lower, est.upper, est.converged, ok)


def draw_shape(rng: random.Random, config: CampaignConfig) -> tuple[int, int, int]:
    """Pick (n, k, m) for one trial."""
    k = rng.choice([k for k in config.k_values if k <= config.n_max])
    n = rng.randint(max(k, config.n_min), config.n_max)
    total = binom(n, k)
    if config.m_range is None:
        lo = math.ceil((n - 1) / (k - 1))
        hi = max(lo, total // 2)
    else:
        lo, hi = config.m_range
    lo, hi = max(lo, 1), min(hi, total)
    if lo > hi:
        raise HypergraphError(f"empty m range for n={n} k={k}")
    return n, k, rng.randint(lo, hi)


def run_trial(config: CampaignConfig, index: int) -> TrialRecord | None:
    seed = config.seed + index
    rng = random.Random(seed)
    try:
        n, k, m = draw_shape(rng, config)
        h = random_m(n, k, m, seed=rng.getrandbits(64), connected=True)
    except HypergraphError:
        return None
    spectral_config = SpectralConfig(tolerance=config.tolerance, max_iterations=config.max_iterations)
    return check_instance(h, config.kind, spectral_config, seed=seed, trial=index)


def run_campaign(config: CampaignConfig, jobs: int = 1) -> CampaignResult:
    indices = range(config.trials)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(run_trial, [config] * config.trials, indices, chunksize=16))
    else:
        outcomes = [run_trial(config, i) for i in indices]
    result = CampaignResult(config.kind, config.trials, threshold=config.threshold)
    for i, rec in zip(indices, outcomes):
        if rec is None:
            result.skipped.append(i)
        else:
            result.records.append(rec)
    return result


def check_fixed(h: Hypergraph, kind: str, config: SpectralConfig | None = None,
                seed: int | None = None) -> CampaignResult:
    """A one-trial campaign on a given hypergraph."""
    result = CampaignResult(kind, 1)
    result.records.append(check_instance(h, kind, config, seed=seed, trial=0))
    return result


def record_dict(r: TrialRecord) -> dict:
    return asdict(r) | {"margin": r.margin}
