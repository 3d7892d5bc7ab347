"""Seeded random ensembles and table emission for the four benchmark studies.

Each example draws a family of random (matrix) polynomials, computes a set
of competing bound variants per trial, verifies every reported bound or gap
against the brute-force eigenvalue oracle (a failed check aborts the run),
and aggregates ratio means, standard deviations, best-bound frequencies and
gap tallies into tables:

* ex1 -- degree-10 polynomials with random m x m coefficients; Cauchy upper
  bounds from P vs its companion-squared Q, and lower bounds from P, Q, the
  preconditioned A_0^-1 P and B_0^-1 Q, and the reciprocal-squared Q_R.
* ex2 -- degree-14, 25 x 25 polynomials with two dominant coefficients;
  Pellet gap detection at k=12 for P vs Q, plain and preconditioned, as the
  top coefficient's magnitude eta varies.
* ex3 -- random scalar degree-20 polynomials; scalar Pellet at k=4,12 vs the
  preconditioned squared variant.
* ex4 -- random lacunary polynomials of degree n; scalar Cauchy/Pellet vs the
  2x2 matrix embedding, at k=2 and k=n-2.

Per-trial randomness comes from counter-based Philox streams keyed by
(seed, trial index), so runs are reproducible and trials independent.
Identical (seed, config) produces byte-identical CSV output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .bounds import GAP, UPPER_ONLY, cauchy_bounds, pellet_gap, squared_bounds, squared_gap
from .embed import LacunaryPolynomial, embed_even, to_scalar
from .linalg import NormKind, SingularMatrixError
from .matpoly import MatrixPolynomial, scalar_polynomial
from .oracle import DEFAULT_BOUNDARY_TOL, EigenReport, count_in_annulus, count_in_disk, eigen_oracle

EXAMPLE_IDS = ("ex1", "ex2", "ex3", "ex4")

_DEFAULT_KINDS = {
    "ex1": (NormKind.ONE,),
    "ex2": (NormKind.ONE,),
    "ex3": (NormKind.TWO,),
    "ex4": (NormKind.TWO,),
}

_EX1_DEGREE = 10
_EX2_DEGREE = 14
_EX2_BLOCK = 25
_EX2_K = 12
_EX3_DEGREE = 20
_EX3_KS = (4, 12)


class SoundnessError(Exception):
    """A reported bound or gap failed its oracle containment check."""


@dataclass(frozen=True)
class ExperimentConfig:
    """Which study to run and at what scale.

    ``norm_kinds`` left empty selects the norms the reference tables use
    (1-norm for ex1/ex2, 2-norm for ex3/ex4).  ``m`` applies to ex1, ``eta``
    to ex2, ``n`` to ex4.  ``scale_per_entry`` switches ex1 to drawing one
    scale factor per coefficient entry instead of one per coefficient matrix.
    """

    example_id: str
    trials: int = 200
    seed: int = 0
    norm_kinds: tuple = ()
    m: int = 10
    eta: float = 0.0
    n: int = 80
    scale_per_entry: bool = False

    def __post_init__(self):
        if self.example_id not in EXAMPLE_IDS:
            raise ValueError(f"unknown example {self.example_id!r}")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.seed < 0:
            raise ValueError("seed must be a nonnegative 64-bit integer")
        if self.example_id == "ex1" and self.m < 1:
            raise ValueError("ex1 needs m >= 1")
        if self.example_id == "ex2" and self.eta < 0:
            raise ValueError("ex2 needs eta >= 0")
        if self.example_id == "ex4" and (self.n < 6 or self.n % 2 != 0):
            raise ValueError("ex4 needs an even degree n >= 6")
        kinds = tuple(NormKind.coerce(k) for k in self.norm_kinds)
        object.__setattr__(self, "norm_kinds", kinds)

    @property
    def resolved_kinds(self) -> tuple:
        return self.norm_kinds or _DEFAULT_KINDS[self.example_id]

    def describe(self) -> str:
        extras = {"ex1": f"m={self.m}", "ex2": f"eta={self.eta:.6g}",
                  "ex3": "", "ex4": f"n={self.n}"}[self.example_id]
        kinds = ",".join(k.value for k in self.resolved_kinds)
        parts = [self.example_id, f"trials={self.trials}", f"seed={self.seed}", f"norms={kinds}"]
        if extras:
            parts.append(extras)
        if self.example_id == "ex1" and self.scale_per_entry:
            parts.append("scale_per_entry=true")
        return " ".join(parts)


@dataclass(frozen=True)
class TrialStats:
    """Aggregate over trials for one bound/gap variant."""

    mean_ratio_percent: float = math.nan
    std_percent: float = math.nan
    best_count: int = 0
    gap_total: int = 0
    gap_only: int = 0
    gap_ratio_mean: float = math.nan
    gap_ratio_std: float = math.nan
    skipped: int = 0


@dataclass
class ResultTable:
    name: str
    columns: list
    rows: list = field(default_factory=list)


@dataclass
class ExperimentResult:
    config: ExperimentConfig
    tables: list
    stats: dict

    def to_csv(self) -> str:
        lines = [f"# pelletbounds experiment {self.config.describe()}"]
        for table in self.tables:
            lines.append(f"# table: {table.name}")
            lines.append(",".join(table.columns))
            for row in table.rows:
                lines.append(",".join(_fmt(v) for v in row))
            lines.append("")
        return "\n".join(lines)

    def to_markdown(self) -> str:
        lines = [f"Experiment {self.config.describe()}", ""]
        for table in self.tables:
            lines.append(f"### {table.name}")
            lines.append("| " + " | ".join(table.columns) + " |")
            lines.append("|" + "|".join("---" for _ in table.columns) + "|")
            for row in table.rows:
                lines.append("| " + " | ".join(_fmt(v) for v in row) + " |")
            lines.append("")
        return "\n".join(lines)

    def to_json_obj(self) -> dict:
        return {
            "config": self.config.describe(),
            "tables": {t.name: {"columns": t.columns,
                                "rows": [[_json_cell(v) for v in row] for row in t.rows]}
                       for t in self.tables},
        }


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return format(float(v), ".6g")
    return str(v)


def _json_cell(v):
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, (np.floating,)):
        return float(v)
    return v


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Counter-based substream for one trial: Philox keyed by (seed, trial)."""
    key = np.array([seed, trial], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


# ---------------------------------------------------------------------------
# instance generators

def gen_ex1(rng: np.random.Generator, m: int, scale_per_entry: bool = False) -> MatrixPolynomial:
    """Monic degree-10 polynomial; each lower coefficient has entries with
    real and imaginary parts uniform in [-1, 1], the whole matrix scaled by
    one uniform [0, 10] draw (or one per entry)."""
    coeffs = []
    for _ in range(_EX1_DEGREE):
        re = rng.uniform(-1.0, 1.0, (m, m))
        im = rng.uniform(-1.0, 1.0, (m, m))
        scale = rng.uniform(0.0, 10.0, (m, m)) if scale_per_entry else rng.uniform(0.0, 10.0)
        coeffs.append(scale * (re + 1j * im))
    coeffs.append(np.eye(m))
    return MatrixPolynomial(coeffs)


def gen_ex2(rng: np.random.Generator, eta: float) -> MatrixPolynomial:
    """Monic degree-14 polynomial with 25 x 25 coefficients: entries uniform
    in +-50^2/2 for j=11, +-200^2/2 for j=12, +-eta for j=13, +-2 otherwise."""
    m = _EX2_BLOCK
    coeffs = []
    for j in range(_EX2_DEGREE):
        half = {11: 50.0**2 / 2, 12: 200.0**2 / 2, 13: float(eta)}.get(j, 2.0)
        re = rng.uniform(-half, half, (m, m))
        im = rng.uniform(-half, half, (m, m))
        coeffs.append(re + 1j * im)
    coeffs.append(np.eye(m))
    return MatrixPolynomial(coeffs)


def gen_ex3(rng: np.random.Generator) -> MatrixPolynomial:
    """Monic real scalar degree-20 polynomial with two dominant coefficient
    pairs: |a_4| in [8,10], |a_12| in [14,16], |a_j| in [1,2] for
    j=3,5,11,13, all other coefficients uniform in [-1,1]."""
    coeffs = []
    for j in range(_EX3_DEGREE):
        if j in (3, 5, 11, 13):
            lo, hi = 1.0, 2.0
        elif j == 4:
            lo, hi = 8.0, 10.0
        elif j == 12:
            lo, hi = 14.0, 16.0
        else:
            coeffs.append(rng.uniform(-1.0, 1.0))
            continue
        mag = rng.uniform(lo, hi)
        sign = -1.0 if rng.uniform(0.0, 1.0) < 0.5 else 1.0
        coeffs.append(sign * mag)
    coeffs.append(1.0)
    return scalar_polynomial(coeffs)


def gen_ex4(rng: np.random.Generator, n: int) -> LacunaryPolynomial:
    """Lacunary polynomial of degree n with six real coefficients uniform in
    [-50, 50]; redraws the (measure-zero) case a * alpha == 0."""
    while True:
        vals = rng.uniform(-50.0, 50.0, 6)
        if vals[0] * vals[3] != 0.0:
            return LacunaryPolynomial(n, *vals)


# ---------------------------------------------------------------------------
# oracle containment (hard assertions: a violation aborts the run)

def _check_upper(rep: EigenReport, value: float, label: str) -> None:
    if value < rep.max_modulus * (1.0 - DEFAULT_BOUNDARY_TOL):
        raise SoundnessError(f"{label}: upper bound {value} < max modulus {rep.max_modulus}")


def _check_lower(rep: EigenReport, value: float, label: str) -> None:
    if value > rep.min_modulus * (1.0 + DEFAULT_BOUNDARY_TOL):
        raise SoundnessError(f"{label}: lower bound {value} > min modulus {rep.min_modulus}")


def _check_gap(rep: EigenReport, gap, label: str) -> None:
    if gap.status == UPPER_ONLY:
        _check_upper(rep, gap.x1, label)
        return
    if gap.status != GAP:
        return
    inside = count_in_disk(rep, gap.x1)
    if inside != gap.eig_count_inside:
        raise SoundnessError(
            f"{label}: {inside} eigenvalues inside |z| <= {gap.x1}, claimed {gap.eig_count_inside}")
    stray = count_in_annulus(rep, gap.x1, gap.x2)
    if stray:
        raise SoundnessError(f"{label}: {stray} eigenvalues inside the annulus ({gap.x1}, {gap.x2})")


# ---------------------------------------------------------------------------
# aggregation helpers

def _mean_std(values):
    if not values:
        return math.nan, math.nan
    if len(values) == 1:
        return float(values[0]), 0.0
    arr = np.asarray(values, dtype=float)
    return float(arr.mean()), float(arr.std(ddof=1))


def _ratio_stats(ratios, best: int, skipped: int) -> TrialStats:
    mean, std = _mean_std(ratios)
    return TrialStats(mean_ratio_percent=mean, std_percent=std, best_count=best, skipped=skipped)


def _gap_stats(widths_pct, total: int, only: int, skipped: int) -> TrialStats:
    mean, std = _mean_std(widths_pct)
    return TrialStats(gap_total=total, gap_only=only, gap_ratio_mean=mean,
                      gap_ratio_std=std, skipped=skipped)


def _pct(count: int, denom: int) -> float:
    return 100.0 * count / denom if denom else math.nan


def _best_index(values, names, maximize: bool):
    """Index of the winning variant; ties keep the first-listed one."""
    best = None
    for i, v in enumerate(values):
        if v is None:
            continue
        if best is None or (v > values[best] if maximize else v < values[best]):
            best = i
    return None if best is None else names[best]


# ---------------------------------------------------------------------------
# ex1: Cauchy upper/lower bound comparison

_EX1_UPPER = ("P", "Q")
_EX1_LOWER = ("P", "Q", "A0invP", "B0invQ", "QR")
# P and Q are dominated by their preconditioned versions, so the best-bound
# tally runs over the undominated three, ties toward the first listed.
_EX1_LOWER_BEST = ("A0invP", "B0invQ", "QR")


def _run_ex1(cfg: ExperimentConfig) -> ExperimentResult:
    kinds = cfg.resolved_kinds
    acc = {kind: {"upper": {v: [] for v in _EX1_UPPER},
                  "lower": {v: [] for v in _EX1_LOWER},
                  "upper_best": {v: 0 for v in _EX1_UPPER},
                  "lower_best": {v: 0 for v in _EX1_LOWER_BEST},
                  "upper_skip": {v: 0 for v in _EX1_UPPER},
                  "lower_skip": {v: 0 for v in _EX1_LOWER}}
           for kind in kinds}

    for t in range(cfg.trials):
        p = gen_ex1(trial_rng(cfg.seed, t), cfg.m, cfg.scale_per_entry)
        rep = eigen_oracle(p)
        for kind in kinds:
            uppers, lowers = {}, {}
            cb = cauchy_bounds(p, kind)
            uppers["P"], lowers["P"] = cb.upper, cb.lower
            sq = squared_bounds(p, kind)
            uppers["Q"], lowers["Q"] = sq.upper, sq.lower
            try:
                lowers["A0invP"] = cauchy_bounds(p, kind, precondition=True).lower
            except SingularMatrixError:
                lowers["A0invP"] = None
            try:
                lowers["B0invQ"] = squared_bounds(p, kind, precondition_index=0).lower
            except SingularMatrixError:
                lowers["B0invQ"] = None
            try:
                lowers["QR"] = squared_bounds(p, kind, use_reciprocal=True).lower
            except SingularMatrixError:
                lowers["QR"] = None

            a = acc[kind]
            for name in _EX1_UPPER:
                value = uppers[name]
                if value is None:
                    a["upper_skip"][name] += 1
                    continue
                _check_upper(rep, value, f"ex1 trial {t} upper {name} {kind.value}")
                a["upper"][name].append(100.0 * value / rep.max_modulus)
            for name in _EX1_LOWER:
                value = lowers[name]
                if value is None:
                    a["lower_skip"][name] += 1
                    continue
                _check_lower(rep, value, f"ex1 trial {t} lower {name} {kind.value}")
                a["lower"][name].append(100.0 * value / rep.min_modulus)
            win = _best_index([uppers[v] for v in _EX1_UPPER], _EX1_UPPER, maximize=False)
            if win is not None:
                a["upper_best"][win] += 1
            win = _best_index([lowers[v] for v in _EX1_LOWER_BEST], _EX1_LOWER_BEST, maximize=True)
            if win is not None:
                a["lower_best"][win] += 1

    stats, tables = {}, []
    for kind in kinds:
        a = acc[kind]
        upper_stats = {v: _ratio_stats(a["upper"][v], a["upper_best"][v], a["upper_skip"][v])
                       for v in _EX1_UPPER}
        lower_stats = {v: _ratio_stats(a["lower"][v], a["lower_best"].get(v, 0), a["lower_skip"][v])
                       for v in _EX1_LOWER}
        stats[kind.value] = {"upper": upper_stats, "lower": lower_stats}

        tab = ResultTable(f"ex1_upper_m{cfg.m}_{kind.value}",
                          ["variant", "mean_ratio_percent", "std_percent", "best_count", "skipped"])
        for v in _EX1_UPPER:
            s = upper_stats[v]
            tab.rows.append([v, s.mean_ratio_percent, s.std_percent, s.best_count, s.skipped])
        tables.append(tab)

        tab = ResultTable(f"ex1_lower_m{cfg.m}_{kind.value}",
                          ["variant", "mean_ratio_percent", "std_percent", "best_count", "skipped"])
        for v in _EX1_LOWER:
            s = lower_stats[v]
            tab.rows.append([v, s.mean_ratio_percent, s.std_percent, s.best_count, s.skipped])
        tables.append(tab)

    return ExperimentResult(cfg, tables, stats)


# ---------------------------------------------------------------------------
# ex2: Pellet gap detection, plain and preconditioned pairs

def _gap_width(gap) -> float | None:
    return (gap.x2 - gap.x1) if (gap is not None and gap.status == GAP) else None


def _run_gap_pairs(cfg, ks, make_instance, make_report, pair_variants):
    """Common tally loop for the gap-comparison studies.

    ``pair_variants`` maps a pair label to (name_a, name_b, fn_a, fn_b) where
    each fn(instance, k) returns a GapResult or raises SingularMatrixError.
    Returns per-(pair, k) tallies plus per-variant both-k counts.
    """
    tallies = {(pair, k): {"a": [], "b": [], "a_total": 0, "b_total": 0,
                           "a_only": 0, "b_only": 0, "both": 0, "b_wider": 0,
                           "a_skip": 0, "b_skip": 0}
               for pair in pair_variants for k in ks}
    both_k = {(pair, side): 0 for pair in pair_variants for side in "ab"}
    both_k_only = {(pair, side): 0 for pair in pair_variants for side in "ab"}

    for t in range(cfg.trials):
        inst = make_instance(trial_rng(cfg.seed, t))
        rep, km_of = make_report(inst)
        gapped = {}
        for pair, (name_a, name_b, fn_a, fn_b) in pair_variants.items():
            for k in ks:
                tal = tallies[(pair, k)]
                km = km_of(k)
                actual = rep.moduli[km] - rep.moduli[km - 1]
                widths = {}
                for side, name, fn in (("a", name_a, fn_a), ("b", name_b, fn_b)):
                    try:
                        gap = fn(inst, k)
                    except SingularMatrixError:
                        tal[f"{side}_skip"] += 1
                        gapped[(pair, side, k)] = False
                        continue
                    _check_gap(rep, gap, f"{cfg.example_id} trial {t} k={k} {name}")
                    width = _gap_width(gap)
                    gapped[(pair, side, k)] = width is not None
                    if width is not None:
                        tal[f"{side}_total"] += 1
                        tal[side].append(100.0 * width / actual)
                        widths[side] = width
                if gapped.get((pair, "a", k)) and not gapped.get((pair, "b", k)):
                    tal["a_only"] += 1
                if gapped.get((pair, "b", k)) and not gapped.get((pair, "a", k)):
                    tal["b_only"] += 1
                if gapped.get((pair, "a", k)) and gapped.get((pair, "b", k)):
                    tal["both"] += 1
                    if widths["b"] > widths["a"]:
                        tal["b_wider"] += 1
        for pair in pair_variants:
            for side in "ab":
                hit_all = all(gapped.get((pair, side, k)) for k in ks)
                other = all(gapped.get((pair, "b" if side == "a" else "a", k)) for k in ks)
                if hit_all:
                    both_k[(pair, side)] += 1
                    if not other:
                        both_k_only[(pair, side)] += 1
    return tallies, both_k, both_k_only


def _run_ex2(cfg: ExperimentConfig) -> ExperimentResult:
    kind = cfg.resolved_kinds[0]
    k = _EX2_K

    pair_variants = {
        "plain": ("P", "Q",
                  lambda p, k: pellet_gap(p, k, kind),
                  lambda p, k: squared_gap(p, k, kind)),
        "preconditioned": ("AkinvP", "BkinvQ",
                           lambda p, k: pellet_gap(p, k, kind, precondition=True),
                           lambda p, k: squared_gap(p, k, kind, precondition=True)),
    }
    tallies, _, _ = _run_gap_pairs(
        cfg, (k,),
        make_instance=lambda rng: gen_ex2(rng, cfg.eta),
        make_report=lambda p: (eigen_oracle(p), lambda kk: kk * _EX2_BLOCK),
        pair_variants=pair_variants,
    )

    stats, tables = {}, []
    for pair, (name_a, name_b, _, _) in pair_variants.items():
        tal = tallies[(pair, k)]
        stats[pair] = {
            name_a: _gap_stats(tal["a"], tal["a_total"], tal["a_only"], tal["a_skip"]),
            name_b: _gap_stats(tal["b"], tal["b_total"], tal["b_only"], tal["b_skip"]),
            "pct_b_wider": _pct(tal["b_wider"], tal["both"]),
        }
        suffix = "" if pair == "plain" else "_preconditioned"
        tab = ResultTable(f"ex2_gap_frequency{suffix}",
                          ["eta", f"{name_a}_total", f"{name_b}_total",
                           f"{name_a}_only", f"{name_b}_only",
                           f"{name_a}_skipped", f"{name_b}_skipped"])
        tab.rows.append([cfg.eta, tal["a_total"], tal["b_total"], tal["a_only"], tal["b_only"],
                         tal["a_skip"], tal["b_skip"]])
        tables.append(tab)
        tab = ResultTable(f"ex2_gap_ratio{suffix}",
                          ["eta", f"{name_a}_mean", f"{name_a}_std",
                           f"{name_b}_mean", f"{name_b}_std",
                           f"pct_gap_{name_b}_gt_{name_a}"])
        ma, sa = _mean_std(tal["a"])
        mb, sb = _mean_std(tal["b"])
        tab.rows.append([cfg.eta, ma, sa, mb, sb, _pct(tal["b_wider"], tal["both"])])
        tables.append(tab)

    return ExperimentResult(cfg, tables, stats)


# ---------------------------------------------------------------------------
# ex3: scalar Pellet vs preconditioned squared variant at k=4, 12

def _run_ex3(cfg: ExperimentConfig) -> ExperimentResult:
    kind = cfg.resolved_kinds[0]
    pair_variants = {
        "ex3": ("p", "BkinvQ",
                lambda p, k: pellet_gap(p, k, kind),
                lambda p, k: squared_gap(p, k, kind, precondition=True)),
    }
    tallies, both_k, both_k_only = _run_gap_pairs(
        cfg, _EX3_KS,
        make_instance=gen_ex3,
        make_report=lambda p: (eigen_oracle(p), lambda kk: kk),
        pair_variants=pair_variants,
    )

    stats, tables = {}, []
    freq = ResultTable("ex3_gap_frequency",
                       ["k", "p_total", "BkinvQ_total", "p_only", "BkinvQ_only",
                        "p_skipped", "BkinvQ_skipped"])
    ratio = ResultTable("ex3_gap_ratio",
                        ["k", "p_mean", "p_std", "BkinvQ_mean", "BkinvQ_std",
                         "pct_gap_BkinvQ_gt_p"])
    for k in _EX3_KS:
        tal = tallies[("ex3", k)]
        stats[k] = {
            "p": _gap_stats(tal["a"], tal["a_total"], tal["a_only"], tal["a_skip"]),
            "BkinvQ": _gap_stats(tal["b"], tal["b_total"], tal["b_only"], tal["b_skip"]),
            "pct_b_wider": _pct(tal["b_wider"], tal["both"]),
        }
        freq.rows.append([k, tal["a_total"], tal["b_total"], tal["a_only"], tal["b_only"],
                          tal["a_skip"], tal["b_skip"]])
        ma, sa = _mean_std(tal["a"])
        mb, sb = _mean_std(tal["b"])
        ratio.rows.append([k, ma, sa, mb, sb, _pct(tal["b_wider"], tal["both"])])
    both = ResultTable("ex3_both_k",
                       ["p_both", "BkinvQ_both", "p_both_only", "BkinvQ_both_only"])
    both.rows.append([both_k[("ex3", "a")], both_k[("ex3", "b")],
                      both_k_only[("ex3", "a")], both_k_only[("ex3", "b")]])
    stats["both_k"] = {"p": both_k[("ex3", "a")], "BkinvQ": both_k[("ex3", "b")],
                       "p_only": both_k_only[("ex3", "a")], "BkinvQ_only": both_k_only[("ex3", "b")]}
    tables.extend([freq, ratio, both])
    return ExperimentResult(cfg, tables, stats)


# ---------------------------------------------------------------------------
# ex4: scalar vs lacunary-embedding bounds and gaps

def _run_ex4(cfg: ExperimentConfig) -> ExperimentResult:
    kind = cfg.resolved_kinds[0]
    n = cfg.n
    ks = (2, n - 2)

    bacc = {name: [] for name in ("upper_scalar", "upper_matrix", "lower_scalar", "lower_matrix")}
    bskip = {name: 0 for name in bacc}
    upper_better = lower_better = both_better = 0
    both_present = 0

    # The bound and gap comparisons share one instance stream, so run a
    # single loop rather than reusing _run_gap_pairs.
    gap_tal = {k: {"a": [], "b": [], "a_total": 0, "b_total": 0, "a_only": 0,
                   "b_only": 0, "both": 0, "b_wider": 0, "a_skip": 0, "b_skip": 0}
               for k in ks}
    both_k = {"a": 0, "b": 0}
    both_k_only = {"a": 0, "b": 0}

    for t in range(cfg.trials):
        lac = gen_ex4(trial_rng(cfg.seed, t), n)
        ps = to_scalar(lac)
        rep = eigen_oracle(ps)
        qe = embed_even(lac)

        su = cauchy_bounds(ps, kind)
        mu = cauchy_bounds(qe, kind)
        values = {"upper_scalar": su.upper, "upper_matrix": mu.upper,
                  "lower_scalar": su.lower, "lower_matrix": mu.lower}
        for name, value in values.items():
            if value is None:
                bskip[name] += 1
                continue
            if name.startswith("upper"):
                _check_upper(rep, value, f"ex4 trial {t} {name}")
                bacc[name].append(100.0 * value / rep.max_modulus)
            else:
                _check_lower(rep, value, f"ex4 trial {t} {name}")
                bacc[name].append(100.0 * value / rep.min_modulus)
        if None not in values.values():
            both_present += 1
            up = values["upper_matrix"] < values["upper_scalar"]
            lo = values["lower_matrix"] > values["lower_scalar"]
            upper_better += up
            lower_better += lo
            both_better += up and lo

        gapped = {}
        for k in ks:
            tal = gap_tal[k]
            actual = rep.moduli[k] - rep.moduli[k - 1]
            widths = {}
            for side, fn in (("a", lambda: pellet_gap(ps, k, kind)),
                             ("b", lambda: pellet_gap(qe, k // 2, kind))):
                try:
                    gap = fn()
                except SingularMatrixError:
                    tal[f"{side}_skip"] += 1
                    gapped[(side, k)] = False
                    continue
                _check_gap(rep, gap, f"ex4 trial {t} k={k} {'scalar' if side == 'a' else 'matrix'}")
                width = _gap_width(gap)
                gapped[(side, k)] = width is not None
                if width is not None:
                    tal[f"{side}_total"] += 1
                    tal[side].append(100.0 * width / actual)
                    widths[side] = width
            if gapped.get(("a", k)) and not gapped.get(("b", k)):
                tal["a_only"] += 1
            if gapped.get(("b", k)) and not gapped.get(("a", k)):
                tal["b_only"] += 1
            if gapped.get(("a", k)) and gapped.get(("b", k)):
                tal["both"] += 1
                if widths["b"] > widths["a"]:
                    tal["b_wider"] += 1
        for side in "ab":
            hit_all = all(gapped.get((side, k)) for k in ks)
            other = all(gapped.get(("b" if side == "a" else "a", k)) for k in ks)
            if hit_all:
                both_k[side] += 1
                if not other:
                    both_k_only[side] += 1

    stats = {"bounds": {name: _ratio_stats(bacc[name], 0, bskip[name]) for name in bacc}}
    stats["bounds"]["pct_upper_better"] = _pct(upper_better, both_present)
    stats["bounds"]["pct_lower_better"] = _pct(lower_better, both_present)
    stats["bounds"]["pct_both_better"] = _pct(both_better, both_present)
    stats["gaps"] = {}
    for k in ks:
        tal = gap_tal[k]
        stats["gaps"][k] = {
            "scalar": _gap_stats(tal["a"], tal["a_total"], tal["a_only"], tal["a_skip"]),
            "matrix": _gap_stats(tal["b"], tal["b_total"], tal["b_only"], tal["b_skip"]),
            "pct_matrix_wider": _pct(tal["b_wider"], tal["both"]),
        }
    stats["both_k"] = {"scalar": both_k["a"], "matrix": both_k["b"],
                       "scalar_only": both_k_only["a"], "matrix_only": both_k_only["b"]}

    tables = []
    tab = ResultTable(f"ex4_bounds_n{n}",
                      ["n", "upper_scalar_mean", "upper_scalar_std",
                       "upper_matrix_mean", "upper_matrix_std",
                       "lower_scalar_mean", "lower_scalar_std",
                       "lower_matrix_mean", "lower_matrix_std",
                       "pct_upper_better", "pct_lower_better", "pct_both_better"])
    us = _mean_std(bacc["upper_scalar"])
    um = _mean_std(bacc["upper_matrix"])
    ls = _mean_std(bacc["lower_scalar"])
    lm = _mean_std(bacc["lower_matrix"])
    tab.rows.append([n, us[0], us[1], um[0], um[1], ls[0], ls[1], lm[0], lm[1],
                     _pct(upper_better, both_present), _pct(lower_better, both_present),
                     _pct(both_better, both_present)])
    tables.append(tab)

    freq = ResultTable(f"ex4_gap_frequency_n{n}",
                       ["k", "scalar_total", "matrix_total", "scalar_only", "matrix_only",
                        "scalar_skipped", "matrix_skipped"])
    ratio = ResultTable(f"ex4_gap_ratio_n{n}",
                        ["k", "scalar_mean", "scalar_std", "matrix_mean", "matrix_std",
                         "pct_matrix_wider"])
    for k in ks:
        tal = gap_tal[k]
        freq.rows.append([k, tal["a_total"], tal["b_total"], tal["a_only"], tal["b_only"],
                          tal["a_skip"], tal["b_skip"]])
        ma, sa = _mean_std(tal["a"])
        mb, sb = _mean_std(tal["b"])
        ratio.rows.append([k, ma, sa, mb, sb, _pct(tal["b_wider"], tal["both"])])
    both = ResultTable(f"ex4_both_k_n{n}",
                       ["scalar_both", "matrix_both", "scalar_both_only", "matrix_both_only"])
    both.rows.append([both_k["a"], both_k["b"], both_k_only["a"], both_k_only["b"]])
    tables.extend([freq, ratio, both])

    return ExperimentResult(cfg, tables, stats)


_RUNNERS = {"ex1": _run_ex1, "ex2": _run_ex2, "ex3": _run_ex3, "ex4": _run_ex4}


def run_experiment(cfg: ExperimentConfig) -> ExperimentResult:
    """Run one configured study; every reported bound is oracle-checked."""
    return _RUNNERS[cfg.example_id](cfg)
