"""Experiment harness: per-theorem ratio experiments, sharpness blow-up
experiments, multiplication-bound experiments and CSV/JSON reporting.

Each registered theorem id fixes an operator form (plain kernel, easy or
hard oscillatory form), the object whose mixed modulation norm is taken
(kernel, symbol-times-phase product, or bare symbol), a permutation-class
requirement and an exponent pattern.  A trial draws a seeded ensemble,
builds the operator, and records

    ratio = schatten_norm(A, p) / mixed_modulation_norm(object).

Reports carry the per-n max ratio and the cross-n growth factor
max_n(max ratio) / min_n(max ratio); empirical ceilings/floors on that
factor are configuration knobs, not fixed constants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .fio import build_easy_fio, build_hard_fio, quadratic_phase_table
from .mixednorm import (
    ExponentVector,
    Permutation,
    classify_permutation,
    mixed_modulation_norm,
    satisfies_blocks,
)
from .operators import OperatorMatrix, PhaseTable, QuadraticPhase, SymbolTable
from .schatten import schatten_norm
from .signals import FiniteSignal, delta, periodized_gaussian, random_signal

__all__ = [
    "ConfigError",
    "ExperimentConfig",
    "TrialRecord",
    "Report",
    "THEOREM_IDS",
    "SHARPNESS_IDS",
    "make_window",
    "gen_ensemble",
    "ratio_experiment",
    "sharpness_experiment",
    "multiplication_experiment",
]

INF = math.inf

CSV_HEADER = "theorem,n,trial,p,schatten,mixednorm,ratio,seed"


class ConfigError(ValueError):
    """Invalid experiment configuration."""


# ---------------------------------------------------------------------------
# Theorem registry
# ---------------------------------------------------------------------------


def _slice_ok(c, d=1):
    return bool(classify_permutation(c, d) & {"first-slice", "second-slice"})


def _fio_slice_ok(c, d=1):
    return bool(classify_permutation(c, d) & {"first-FIO-slice", "second-FIO-slice"})


def _fio_symbol_ok(c, d=1):
    return bool(classify_permutation(c, d) & {"first-FIO-symbol", "second-FIO-symbol"})


def _relaxed_easy_ok(c, d=1):
    # xi_y axes innermost, or y axes innermost.
    cond_i = [(frozenset(range(3 * d + 1, 4 * d + 1)), frozenset(range(1, d + 1)))]
    cond_ii = [(frozenset(range(2 * d + 1, 3 * d + 1)), frozenset(range(1, d + 1)))]
    return satisfies_blocks(c, cond_i) or satisfies_blocks(c, cond_ii)


def _relaxed_hard_ok(c, d=1):
    base = [
        (frozenset(range(5 * d + 1, 6 * d + 1)), frozenset(range(1, d + 1))),
        (frozenset(range(2 * d + 1, 3 * d + 1)), frozenset(range(5 * d + 1, 6 * d + 1))),
    ]
    cond_i = [(frozenset(range(4 * d + 1, 5 * d + 1)), frozenset(range(d + 1, 2 * d + 1)))]
    cond_ii = [(frozenset(range(3 * d + 1, 4 * d + 1)), frozenset(range(d + 1, 2 * d + 1)))]
    return satisfies_blocks(c, base) and (
        satisfies_blocks(c, cond_i) or satisfies_blocks(c, cond_ii)
    )


@dataclass(frozen=True)
class TheoremSpec:
    form: str              # "kernel" | "easy" | "hard"
    norm_object: str       # "kernel" | "product" | "bare"
    phase: str             # "none" | "random" | "quadratic-zero-mixed" | "quadratic"
    perm_ok: callable
    perm_hint: str
    exps: callable         # p -> tuple
    default_perm: tuple


THEOREMS = {
    "T2.9": TheoremSpec(
        "kernel", "kernel", "none", _slice_ok, "slice",
        lambda p: (2.0, 2.0, p, p), (1, 3, 2, 4)),
    "T3.1": TheoremSpec(
        "easy", "product", "random", _slice_ok, "slice",
        lambda p: (2.0, 2.0, p, p), (1, 3, 2, 4)),
    "T3.2": TheoremSpec(
        "hard", "product", "random", _fio_slice_ok, "FIO slice",
        lambda p: (2.0, 2.0, p, p, 1.0, INF), (2, 5, 1, 4, 3, 6)),
    "T4.2a": TheoremSpec(  # multiplication bound; handled by its own driver
        "kernel", "kernel", "none", lambda c, d=1: len(c) == 2, "two-axis",
        lambda p: (2.0, p), (1, 2)),
    "T4.3a": TheoremSpec(
        "easy", "bare", "quadratic-zero-mixed", _slice_ok, "slice",
        lambda p: (2.0, 2.0, p, p), (1, 3, 2, 4)),
    "T4.3b": TheoremSpec(
        "hard", "bare", "quadratic-zero-mixed", _fio_slice_ok, "FIO slice",
        lambda p: (2.0, 2.0, p, p, 1.0, INF), (2, 5, 1, 4, 3, 6)),
    "T4.4a": TheoremSpec(
        "easy", "bare", "quadratic-zero-mixed", _slice_ok, "slice",
        lambda p: (2.0, 2.0, p, p), (1, 3, 2, 4)),
    "T4.4b": TheoremSpec(
        "hard", "bare", "quadratic-zero-mixed", _fio_symbol_ok, "FIO symbol",
        lambda p: (INF, 2.0, 2.0, p, p, 1.0), (6, 1, 4, 2, 5, 3)),
    "T4.5a": TheoremSpec(
        "easy", "bare", "quadratic", _relaxed_easy_ok, "relaxed easy",
        lambda p: (2.0, p, p, p), (4, 1, 2, 3)),
    "T4.5b": TheoremSpec(
        "hard", "bare", "quadratic", _relaxed_hard_ok, "relaxed hard",
        lambda p: (INF, 2.0, p, p, p, 1.0), (6, 5, 1, 2, 4, 3)),
}

# Sharpness families: base theorem plus default raised exponent slots.
SHARPNESS = {
    "SHARP-T2.9": ("T2.9", {1: INF, 3: INF, 4: INF}),
    "SHARP-T4.3": ("T4.3b", {5: INF}),
    "SHARP-T4.4": ("T4.4b", {6: INF}),
}

THEOREM_IDS = tuple(THEOREMS)
SHARPNESS_IDS = tuple(SHARPNESS)

WINDOW_KINDS = ("delta", "gaussian-sampled", "random")


# ---------------------------------------------------------------------------
# Configuration and report containers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExperimentConfig:
    theorem_id: str
    n_values: tuple
    p: float = 1.5
    trials: int = 10
    seed: int = 0
    permutation: Permutation = None
    window_kind: str = None
    output_path: str = None
    ratio_ceiling: float = 4.0
    growth_floor: float = 2.0
    raise_slots: dict = None
    control_arm: bool = False

    def __post_init__(self):
        if self.theorem_id not in THEOREMS and self.theorem_id not in SHARPNESS:
            raise ConfigError(f"unknown theorem id {self.theorem_id!r}")
        n_values = tuple(int(n) for n in self.n_values)
        if not n_values or any(n < 2 for n in n_values):
            raise ConfigError("n_values must be a nonempty list of sizes >= 2")
        object.__setattr__(self, "n_values", n_values)
        if not (1.0 <= self.p <= 2.0):
            raise ConfigError(f"p must lie in [1, 2], got {self.p}")
        if self.trials < 1:
            raise ConfigError("trials must be positive")
        if self.seed < 0 or self.seed >= 2**64:
            raise ConfigError("seed must be a 64-bit non-negative integer")

        spec = THEOREMS[self.base_theorem]
        if spec.phase.startswith("quadratic") and any(n % 2 for n in n_values):
            raise ConfigError("chirped ensembles require even group sizes")

        perm = self.permutation or Permutation(spec.default_perm)
        if isinstance(perm, (tuple, list)):
            perm = Permutation(tuple(perm))
        if not spec.perm_ok(perm):
            raise ConfigError(
                f"permutation {perm.image} is not a {spec.perm_hint} permutation, "
                f"as required by {self.base_theorem}"
            )
        object.__setattr__(self, "permutation", perm)

        kind = self.window_kind
        if kind is None:
            kind = "delta" if self.theorem_id in SHARPNESS else "gaussian-sampled"
        if kind not in WINDOW_KINDS:
            raise ConfigError(f"unknown window kind {kind!r}")
        object.__setattr__(self, "window_kind", kind)

        if self.theorem_id in SHARPNESS:
            slots = self.raise_slots
            if slots is None:
                slots = dict(SHARPNESS[self.theorem_id][1])
            slots = {int(k): float(v) for k, v in slots.items()}
            base = spec.exps(self.p)
            for slot, q in slots.items():
                if not 1 <= slot <= len(base):
                    raise ConfigError(f"exponent slot {slot} out of range")
                if not q > base[slot - 1]:
                    raise ConfigError(
                        f"slot {slot}: exponent {q} does not exceed the "
                        f"threshold {base[slot - 1]}; nothing to falsify"
                    )
            object.__setattr__(self, "raise_slots", slots)
        elif self.raise_slots:
            raise ConfigError("raise_slots only applies to SHARP-* experiments")

    @property
    def base_theorem(self) -> str:
        return SHARPNESS[self.theorem_id][0] if self.theorem_id in SHARPNESS \
            else self.theorem_id

    def exponents(self) -> ExponentVector:
        base = list(THEOREMS[self.base_theorem].exps(self.p))
        if self.theorem_id in SHARPNESS and not self.control_arm:
            for slot, q in self.raise_slots.items():
                base[slot - 1] = q
        return ExponentVector(tuple(base))


@dataclass(frozen=True)
class TrialRecord:
    theorem: str
    n: int
    trial: int
    p: float
    schatten: float
    mixed_norm: float
    ratio: float
    seed: int
    metadata: dict = field(default_factory=dict)


@dataclass
class Report:
    theorem: str
    records: list
    per_n_max: dict
    growth_factor: float
    summary_extra: dict = field(default_factory=dict)

    def csv_body(self) -> str:
        lines = [CSV_HEADER]
        for r in self.records:
            lines.append(
                f"{r.theorem},{r.n},{r.trial},{r.p!r},{r.schatten!r},"
                f"{r.mixed_norm!r},{r.ratio!r},{r.seed}"
            )
        return "\n".join(lines) + "\n"

    def write_csv(self, path) -> None:
        with open(path, "w") as fh:
            fh.write(self.csv_body())

    def summary(self) -> dict:
        out = {
            "theorem": self.theorem,
            "per_n_max_ratio": {str(n): v for n, v in self.per_n_max.items()},
            "growth_factor": self.growth_factor,
            "rows": len(self.records),
        }
        out.update(self.summary_extra)
        return out

    def all_finite(self) -> bool:
        return all(
            math.isfinite(r.schatten) and math.isfinite(r.mixed_norm)
            and math.isfinite(r.ratio)
            for r in self.records
        )


def _finish_report(theorem, records, extra) -> Report:
    per_n = {}
    for r in records:
        per_n[r.n] = max(per_n.get(r.n, 0.0), r.ratio)
    positives = [v for v in per_n.values() if v > 0]
    growth = (max(positives) / min(positives)) if positives else 0.0
    return Report(theorem, records, per_n, growth, extra)


# ---------------------------------------------------------------------------
# Ensembles
# ---------------------------------------------------------------------------


def make_window(kind: str, n: int, seed: int = 0) -> FiniteSignal:
    """Unit-norm analysis window of the configured kind."""
    if kind == "delta":
        return delta(n)
    if kind == "gaussian-sampled":
        return periodized_gaussian(n)
    if kind == "random":
        rng = np.random.default_rng([seed, 7919])
        w = random_signal(n, 1, rng)
        return w.scaled(1.0 / w.norm())
    raise ConfigError(f"unknown window kind {kind!r}")


def gen_ensemble(kind: str, n: int, seed, rank: int = 3, zero_mixed: bool = False):
    """Seeded random draws: symbols or phases of the requested kind.

    kinds: "gaussian-symbol" (i.i.d. complex Gaussian SymbolTable),
    "tensor-symbol" (b1 (x) b2 with b2 constant 1),
    "quadratic-phase" (integer QuadraticPhase, mixed x-y block zeroed on
    request), "random-phase" (uniform PhaseTable in cycles).
    """
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    shape = (n,) * rank
    if kind == "gaussian-symbol":
        vals = (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)
        return SymbolTable(n, rank, vals)
    if kind == "tensor-symbol":
        b1 = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
        b2 = np.ones(n, dtype=np.complex128)
        return SymbolTable(n, 3, b1[:, :, None] * b2[None, None, :]), b1, b2
    if kind == "quadratic-phase":
        q = rng.integers(-2, 3, size=rank)
        m = rng.integers(-2, 3, size=(rank, rank))
        m = m + m.T  # symmetric with even diagonal, well-defined for every n
        if zero_mixed:
            m[0, 1] = m[1, 0] = 0
        qp = QuadraticPhase(float(rng.integers(0, 4)) / 4.0, q, m)
        qp.check_well_defined(n)
        return qp
    if kind == "random-phase":
        return PhaseTable(n, rank, rng.random(shape))
    raise ConfigError(f"unknown ensemble kind {kind!r}")


def _trial_rng(seed: int, n: int, trial: int) -> np.random.Generator:
    return np.random.default_rng([seed, n, trial])


def _build_trial(spec: TheoremSpec, n: int, rng) -> tuple:
    """(operator, norm-object SymbolTable, metadata) for one draw."""
    rank = 2 if spec.form in ("kernel", "easy") else 3
    sym = gen_ensemble("gaussian-symbol", n, rng, rank=rank)
    meta = {}
    if spec.form == "kernel":
        return OperatorMatrix(n, sym.values), sym, meta

    if spec.phase == "random":
        phase = gen_ensemble("random-phase", n, rng, rank=rank)
        meta["phase"] = "random"
    else:
        qp = gen_ensemble("quadratic-phase", n, rng, rank=rank,
                          zero_mixed=(spec.phase == "quadratic-zero-mixed"))
        phase = quadratic_phase_table(qp, rank, n)
        meta["phase"] = spec.phase
        if rank == 2:
            meta["det_mixed_block"] = float(qp.m[0, 1])
        else:
            block = np.array([[qp.m[0, 1], qp.m[0, 2]], [qp.m[1, 2], qp.m[2, 2]]])
            meta["det_nondegeneracy_block"] = float(np.linalg.det(block))

    if spec.form == "easy":
        op = build_easy_fio(sym, phase)
    else:
        op = build_hard_fio(sym, phase)

    if spec.norm_object == "bare":
        obj = sym
    else:
        obj = SymbolTable(n, rank, sym.values * phase.unit_table())
    return op, obj, meta


# ---------------------------------------------------------------------------
# Experiments
# ---------------------------------------------------------------------------


def ratio_experiment(cfg: ExperimentConfig) -> Report:
    """Schatten-vs-mixed-modulation-norm ratios for one theorem."""
    if cfg.theorem_id in SHARPNESS:
        raise ConfigError("use sharpness_experiment for SHARP-* ids")
    if cfg.theorem_id == "T4.2a":
        raise ConfigError("use multiplication_experiment for T4.2a")
    spec = THEOREMS[cfg.theorem_id]
    exps = cfg.exponents()
    records = []
    for n in cfg.n_values:
        window = make_window(cfg.window_kind, n, cfg.seed)
        for trial in range(cfg.trials):
            rng = _trial_rng(cfg.seed, n, trial)
            op, obj, meta = _build_trial(spec, n, rng)
            s = schatten_norm(op, cfg.p)
            m = mixed_modulation_norm(obj, window, cfg.permutation, exps)
            ratio = 0.0 if s == 0.0 else s / m
            records.append(TrialRecord(cfg.theorem_id, n, trial, cfg.p, s, m,
                                       ratio, cfg.seed, meta))
    return _finish_report(cfg.theorem_id, records, _config_extra(cfg, exps))


def _induced_factor(c: Permutation, exps: ExponentVector, remap: dict):
    """Sub-permutation and exponents for one tensor factor's axes."""
    image, sub = [], []
    for level, axis in enumerate(c.image, start=1):
        if axis in remap:
            image.append(remap[axis])
            sub.append(exps.exps[level - 1])
    return Permutation(tuple(image)), ExponentVector(tuple(sub))


def tensor_mixed_norm(b1: np.ndarray, window: FiniteSignal, c: Permutation,
                      exps: ExponentVector) -> float:
    """Mixed modulation norm of b1(x, y) (x) 1(xi), computed factorized.

    Exact because the STFT of a tensor product against a tensor-power
    window splits axis-by-axis, so nested contractions factor.
    """
    n = window.n
    perm1, exps1 = _induced_factor(c, exps, {1: 1, 2: 2, 4: 3, 5: 4})
    perm2, exps2 = _induced_factor(c, exps, {3: 1, 6: 2})
    part1 = mixed_modulation_norm(SymbolTable(n, 2, b1), window, perm1, exps1)
    ones = FiniteSignal(n, 1, np.ones(n, dtype=np.complex128))
    part2 = mixed_modulation_norm(ones, window, perm2, exps2)
    return part1 * part2


def sharpness_experiment(cfg: ExperimentConfig) -> Report:
    """Closed-form blow-up families with one or more exponent slots raised."""
    if cfg.theorem_id not in SHARPNESS:
        raise ConfigError(f"{cfg.theorem_id} is not a sharpness experiment id")
    base_id = cfg.base_theorem
    spec = THEOREMS[base_id]
    exps = cfg.exponents()
    records = []
    for n in cfg.n_values:
        window = make_window(cfg.window_kind, n, cfg.seed)
        for trial in range(cfg.trials):
            rng = _trial_rng(cfg.seed, n, trial)
            meta = {"arm": "control" if cfg.control_arm else "violated"}
            if base_id == "T2.9":
                kernel = np.ones((n, n), dtype=np.complex128)
                op = OperatorMatrix(n, kernel)
                m = mixed_modulation_norm(SymbolTable(n, 2, kernel), window,
                                          cfg.permutation, exps)
            else:
                b, b1, _ = gen_ensemble("tensor-symbol", n, rng)
                psi = PhaseTable(n, 3, np.zeros((n, n, n)))
                op = build_hard_fio(b, psi)
                m = tensor_mixed_norm(b1, window, cfg.permutation, exps)
            s = schatten_norm(op, cfg.p)
            ratio = 0.0 if s == 0.0 else s / m
            records.append(TrialRecord(cfg.theorem_id, n, trial, cfg.p, s, m,
                                       ratio, cfg.seed, meta))
    return _finish_report(cfg.theorem_id, records, _config_extra(cfg, exps))


def multiplication_experiment(n_values, seed: int, c: Permutation,
                              exps: ExponentVector, trials: int,
                              window_kind: str = "gaussian-sampled") -> Report:
    """Ratios for the pointwise-product bound against an (inf, 1)-type factor."""
    if isinstance(n_values, int):
        n_values = (n_values,)
    exps = exps if isinstance(exps, ExponentVector) else ExponentVector(tuple(exps))
    if len(c) != 2 or len(exps) != 2:
        raise ConfigError("multiplication experiment runs on d = 1 (two axes)")
    if exps.exps[0] != 2.0:
        raise ConfigError("exponents must follow the (2, p) pattern")
    id2 = Permutation.identity(2)
    winf1 = ExponentVector((INF, 1.0))
    records = []
    for n in n_values:
        window = make_window(window_kind, n, seed)
        for trial in range(trials):
            rng = _trial_rng(seed, n, trial)
            f = random_signal(n, 1, rng)
            g = random_signal(n, 1, rng)
            prod = FiniteSignal(n, 1, f.values * g.values)
            num = mixed_modulation_norm(prod, window, c, exps)
            den_f = mixed_modulation_norm(f, window, c, exps)
            den_g = mixed_modulation_norm(g, window, id2, winf1)
            den = den_f * den_g
            ratio = 0.0 if num == 0.0 else num / den
            records.append(TrialRecord("MULT", n, trial, exps.exps[1], num, den,
                                       ratio, seed, {}))
    extra = {
        "permutation": list(c.image),
        "exponents": [str(e) for e in exps.exps],
        "trials": trials,
        "seed": seed,
        "window": window_kind,
    }
    return _finish_report("MULT", records, extra)


def _config_extra(cfg: ExperimentConfig, exps: ExponentVector) -> dict:
    return {
        "n_values": list(cfg.n_values),
        "p": cfg.p,
        "trials": cfg.trials,
        "seed": cfg.seed,
        "permutation": list(cfg.permutation.image),
        "exponents": [str(e) for e in exps.exps],
        "window": cfg.window_kind,
        "ratio_ceiling": cfg.ratio_ceiling,
        "growth_floor": cfg.growth_floor,
        "control_arm": cfg.control_arm,
    }
