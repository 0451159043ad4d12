"""Two-class Gaussian model: sampling, estimators, robust error, tail bounds.

The data model draws a label y uniformly from {-1, +1} and a point
x ~ N(y * theta_star, sigma^2 I).  For a linear classifier sign<w, x> the
exact L-infinity robust classification error at radius eps has the closed
form Phi((eps * ||w||_1 - <w, theta_star>) / (sigma * ||w||_2)): the worst
perturbation in the ball shifts the signed margin by exactly eps * ||w||_1
(the L1 norm is the dual of L-infinity).

This module also contains the semi-supervised sample-mean estimator built
from pseudo-labels, the sample-complexity sweep machinery, and Monte-Carlo
checks of the concentration inequalities used in its analysis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.stats import norm

from .seeding import chain, derive_rng, derive_seed


class RegimeError(ValueError):
    """Raised when parameters leave a result's stated validity region."""


class ZeroVectorError(ValueError):
    """Raised when a zero weight vector cannot define a classifier."""


def _as_rng(seed_or_rng) -> np.random.Generator:
    if isinstance(seed_or_rng, np.random.Generator):
        return seed_or_rng
    return np.random.default_rng(seed_or_rng)


@dataclass(frozen=True)
class GaussianModel:
    """Two-class model with per-class mean +/- theta_star and noise scale sigma."""

    theta_star: np.ndarray
    sigma: float

    def __post_init__(self):
        theta = np.asarray(self.theta_star, dtype=np.float64)
        if theta.ndim != 1 or theta.size < 1:
            raise ValueError("theta_star must be a vector of length d >= 1")
        object.__setattr__(self, "theta_star", theta)
        if not (self.sigma > 0):
            raise ValueError(f"sigma must be positive, got {self.sigma}")

    @property
    def d(self) -> int:
        return self.theta_star.size

    def require_sweep_regime(self, sigma_scale: float = 1.0 / 32.0, rtol: float = 1e-9):
        """Validate the sample-complexity regime: ||theta*||_2 = sqrt(d), sigma <= scale * d^{1/4}.

        The default scale 1/32 is the regime of the single-labeled-example
        guarantee; sweeps that deliberately run harder noise pass a larger
        scale explicitly.
        """
        want = math.sqrt(self.d)
        got = float(np.linalg.norm(self.theta_star))
        if abs(got - want) > rtol * max(1.0, want):
            raise RegimeError(
                f"||theta_star||_2 = {got:.6g}, regime requires sqrt(d) = {want:.6g}"
            )
        cap = sigma_scale * self.d ** 0.25
        if self.sigma > cap * (1 + rtol):
            raise RegimeError(
                f"sigma = {self.sigma:.6g} exceeds the regime cap "
                f"{sigma_scale:.6g} * d^(1/4) = {cap:.6g}"
            )


@dataclass
class LinearClassifier:
    """Linear predictor sign<w, x>; prediction is invariant to positive scaling of w."""

    w: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.w, dtype=np.float64)
        if w.ndim != 1:
            raise ValueError("w must be a vector")
        if np.linalg.norm(w) == 0.0:
            raise ZeroVectorError("zero weight vector does not define a classifier")
        self.w = w

    def unit(self) -> np.ndarray:
        return self.w / np.linalg.norm(self.w)

    def predict(self, x: np.ndarray) -> np.ndarray:
        """Labels in {-1, +1}; the measure-zero tie <w, x> = 0 resolves to +1."""
        x = np.asarray(x, dtype=np.float64)
        scores = x @ self.w
        return np.where(scores >= 0.0, 1.0, -1.0)


def sample_gaussian(model: GaussianModel, n: int, seed_or_rng) -> tuple[np.ndarray, np.ndarray]:
    """Draw n labeled points: y uniform on {-1,+1}, x = y*theta_star + sigma*z."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    rng = _as_rng(seed_or_rng)
    y = np.where(rng.random(n) < 0.5, -1.0, 1.0)
    x = y[:, None] * model.theta_star[None, :] + model.sigma * rng.standard_normal((n, model.d))
    return x, y


def supervised_estimator(x: np.ndarray, y: np.ndarray) -> LinearClassifier:
    """Unnormalized sample-mean direction w = sum_i y_i x_i."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.ndim != 2 or x.shape[0] < 1:
        raise ValueError("need at least one labeled sample")
    if y.shape != (x.shape[0],):
        raise ValueError("labels must align with samples")
    return LinearClassifier(y @ x)


def pseudo_labels(clf: LinearClassifier, x: np.ndarray) -> np.ndarray:
    return clf.predict(x)


def uat_ft_estimator(
    labeled_x: np.ndarray,
    labeled_y: np.ndarray,
    unlabeled_x: np.ndarray,
) -> LinearClassifier:
    """Pseudo-label the pool with the supervised direction, then re-estimate.

    w_sup = sum y_i x_i over the labeled set; y_hat = sign<w_sup, x> on the
    pool; the returned direction is sum y_hat_i x_i.
    """
    unlabeled_x = np.asarray(unlabeled_x, dtype=np.float64)
    if unlabeled_x.ndim != 2 or unlabeled_x.shape[0] < 1:
        raise ValueError("need at least one unlabeled sample")
    base = supervised_estimator(labeled_x, labeled_y)
    y_hat = base.predict(unlabeled_x)
    return LinearClassifier(y_hat @ unlabeled_x)


def exact_robust_error(clf: LinearClassifier, model: GaussianModel, epsilon: float) -> float:
    """Closed-form L-infinity robust classification error at radius epsilon."""
    if epsilon < 0:
        raise ValueError("epsilon must be nonnegative")
    w = clf.w
    if w.shape != (model.d,):
        raise ValueError("classifier dimension does not match the model")
    margin = float(w @ model.theta_star)
    return float(norm.cdf((epsilon * np.abs(w).sum() - margin) / (model.sigma * np.linalg.norm(w))))


def lemma20_error_bound(clf: LinearClassifier, model: GaussianModel, epsilon: float) -> float:
    """Sub-Gaussian upper bound on the robust error of a unit-norm direction.

    Requires ||w||_2 = 1 (within 1e-9).  When the margin condition
    <w, theta*> >= eps * ||w||_1 fails the bound is vacuous and 1 is returned.
    """
    if epsilon < 0:
        raise ValueError("epsilon must be nonnegative")
    w = clf.w
    nrm = float(np.linalg.norm(w))
    if abs(nrm - 1.0) > 1e-9:
        raise ValueError(f"bound requires a unit vector, got ||w||_2 = {nrm!r}")
    gap = float(w @ model.theta_star) - epsilon * float(np.abs(w).sum())
    if gap < 0:
        return 1.0
    return float(math.exp(-(gap * gap) / (2.0 * model.sigma**2)))


# ---------------------------------------------------------------------------
# Sample-complexity sweep
# ---------------------------------------------------------------------------

# Endpoints of the radius range in the sample-complexity statement.  The
# small-radius branch (m >= 100) applies below SPLITPOINT * d^(-1/4); the
# m >= 256 eps^2 sqrt(d) branch applies up to EPS_UPPER.  Both are exposed as
# configuration on the sweep.
SPLITPOINT_DEFAULT = 0.25
EPS_UPPER_DEFAULT = 0.25
M_CONSTANT = 256.0


def required_m(d: int, epsilon: float, splitpoint: float = SPLITPOINT_DEFAULT) -> int:
    """Unlabeled-sample rule: 100 below the small-radius threshold, else ceil(256 eps^2 sqrt(d))."""
    if epsilon <= splitpoint * d ** -0.25:
        return 100
    return int(math.ceil(M_CONSTANT * epsilon**2 * math.sqrt(d)))


def regime_epsilon_range(
    d: int,
    splitpoint: float = SPLITPOINT_DEFAULT,
    eps_upper: float = EPS_UPPER_DEFAULT,
) -> tuple[float, float]:
    return (splitpoint * d ** -0.25, eps_upper)


def _sweep_model(d: int, sigma_scale: float) -> GaussianModel:
    # theta* = all-ones has ||theta*||_2 = sqrt(d) exactly and maximal L1 mass,
    # the canonical hard direction for L-infinity robustness.
    return GaussianModel(np.ones(d), sigma_scale * d**0.25)


def theorem_trial(model: GaussianModel, m: int, epsilon: float, rng) -> float:
    """One experiment: 1 labeled + m unlabeled -> semi-supervised estimator -> exact robust error."""
    if m < 1:
        raise ValueError("m must be >= 1: the pool estimator is undefined on an empty pool")
    lx, ly = sample_gaussian(model, 1, rng)
    ux, _ = sample_gaussian(model, m, rng)
    est = uat_ft_estimator(lx, ly, ux)
    return exact_robust_error(est, model, epsilon)


@dataclass
class SweepCell:
    d: int
    epsilon: float
    m: int
    trials: int
    success_rate: float
    mean_error: float
    seed: int


@dataclass
class SweepReport:
    cells: list[SweepCell]
    master_seed: int
    target_error: float
    sigma_scale: float
    flagged: list[dict] = field(default_factory=list)

    CSV_COLUMNS = ("d", "epsilon", "m", "trials", "success_rate", "mean_error", "seed")

    def as_rows(self) -> list[dict]:
        return [
            {k: getattr(c, k) for k in self.CSV_COLUMNS}
            for c in self.cells
        ]


def sweep_cell(
    d: int,
    epsilon: float,
    m: int,
    trials: int,
    master_seed: int,
    cell_index: int,
    target_error: float = 0.01,
    sigma_scale: float = 1.0 / 32.0,
    validate_regime: bool = True,
    splitpoint: float = SPLITPOINT_DEFAULT,
    eps_upper: float = EPS_UPPER_DEFAULT,
) -> SweepCell:
    """Run one (d, epsilon, m) cell of independent trials.

    Trial t draws its generator from (master_seed, cell_index, t), so cells
    and trials can run in any order or in parallel without changing results.
    """
    if m < 1:
        raise ValueError("m must be >= 1: the pool estimator is undefined on an empty pool")
    model = _sweep_model(d, sigma_scale)
    if validate_regime:
        model.require_sweep_regime(sigma_scale=sigma_scale)
        lo, hi = regime_epsilon_range(d, splitpoint, eps_upper)
        if not (0 <= epsilon <= hi):
            raise RegimeError(
                f"epsilon = {epsilon:.6g} outside the validated range [0, {hi:.6g}] for d = {d}"
            )
    errors = np.empty(trials)
    for t in range(trials):
        errors[t] = theorem_trial(model, m, epsilon, derive_rng(master_seed, cell_index, t))
    return SweepCell(
        d=d,
        epsilon=float(epsilon),
        m=int(m),
        trials=trials,
        success_rate=float(np.mean(errors <= target_error)),
        mean_error=float(np.mean(errors)),
        seed=derive_seed(master_seed, cell_index),
    )


def theorem_sweep(
    d_grid,
    epsilon_grid,
    m_grid=None,
    trials: int = 100,
    target_error: float = 0.01,
    master_seed: int = 0,
    sigma_scale: float = 1.0 / 32.0,
    splitpoint: float = SPLITPOINT_DEFAULT,
    eps_upper: float = EPS_UPPER_DEFAULT,
    on_regime_violation: str = "raise",
    threads: int = 1,
) -> SweepReport:
    """Success-rate sweep over (d, epsilon, m) cells.

    ``epsilon_grid`` entries may be absolute radii or, when given as
    ("rel", r), the fraction r of the small-radius threshold span; ``m_grid``
    of None applies the sample-count rule per cell.  Cells violating the
    regime checks are rejected ("raise") or recorded in ``flagged`` ("skip"),
    never silently computed.
    """
    cells_spec = []
    for d in d_grid:
        lo, hi = regime_epsilon_range(d, splitpoint, eps_upper)
        for eps in epsilon_grid:
            if isinstance(eps, tuple) and eps[0] == "rel":
                eps = lo + (hi - lo) * eps[1]
            ms = m_grid if m_grid is not None else [required_m(d, eps, splitpoint)]
            for m in ms:
                cells_spec.append((int(d), float(eps), int(m)))

    report = SweepReport([], master_seed, target_error, sigma_scale)

    def run_one(idx_spec):
        idx, (d, eps, m) = idx_spec
        return sweep_cell(
            d, eps, m, trials, master_seed, idx,
            target_error=target_error, sigma_scale=sigma_scale,
            splitpoint=splitpoint, eps_upper=eps_upper,
        )

    results: list = [None] * len(cells_spec)
    jobs = list(enumerate(cells_spec))
    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = {pool.submit(_guarded, run_one, job): job[0] for job in jobs}
            for fut, idx in futures.items():
                results[idx] = fut.result()
    else:
        results = [_guarded(run_one, job) for job in jobs]

    for idx, res in enumerate(results):
        if isinstance(res, RegimeError) or isinstance(res, ValueError):
            if on_regime_violation == "skip":
                d, eps, m = cells_spec[idx]
                report.flagged.append(
                    {"d": d, "epsilon": eps, "m": m, "violation": str(res)}
                )
            else:
                raise res
        else:
            report.cells.append(res)
    return report


def _guarded(fn, arg):
    try:
        return fn(arg)
    except (RegimeError, ValueError) as exc:
        return exc


# ---------------------------------------------------------------------------
# Empirical sample-complexity scaling
# ---------------------------------------------------------------------------


def _cell_success(d, epsilon, m, trials, master_seed, sigma_scale, target_error, key) -> float:
    model = _sweep_model(d, sigma_scale)
    hits = 0
    for t in range(trials):
        rng = derive_rng(master_seed, key, m, t)
        hits += theorem_trial(model, m, epsilon, rng) <= target_error
    return hits / trials


def min_m_for_success(
    d: int,
    epsilon: float,
    master_seed: int,
    sigma_scale: float,
    trials: int = 50,
    target_error: float = 0.01,
    success_target: float = 0.95,
    m_max: int = 200_000,
    grid_ratio: float = 1.25,
    key: int = 0,
) -> int:
    """Smallest m on a geometric grid reaching the success target.

    Success probability is monotone in m to within trial noise.  The search
    climbs geometrically from m = 1 until the first success (so cost stays
    proportional to the threshold itself), then bisects the refined grid
    between the last failure and that success.
    """

    def ok(m):
        return _cell_success(
            d, epsilon, m, trials, master_seed, sigma_scale, target_error, key
        ) >= success_target

    if ok(1):
        return 1
    lo, hi = 1, None
    m = 2
    while m <= m_max:
        if ok(m):
            hi = m
            break
        lo = m
        m = max(m + 1, int(round(m * 1.6)))
    if hi is None:
        raise RegimeError(
            f"no m <= {m_max} reaches {success_target:.0%} success at d={d}, eps={epsilon}"
        )
    grid = [lo]
    while grid[-1] < hi:
        grid.append(min(hi, max(grid[-1] + 1, int(round(grid[-1] * grid_ratio)))))
    a, b = 0, len(grid) - 1
    while b - a > 1:
        mid = (a + b) // 2
        if ok(grid[mid]):
            b = mid
        else:
            a = mid
    return grid[b]


@dataclass
class ScalingReport:
    slope_epsilon: float
    slope_d: float
    eps_points: list[tuple[float, int]]
    d_points: list[tuple[int, int]]
    fixed_d: int
    fixed_epsilon: float
    sigma_scale: float
    master_seed: int


def scaling_slopes(
    eps_grid,
    d_grid,
    fixed_d: int,
    fixed_epsilon: float,
    master_seed: int = 0,
    sigma_scale: float = 1.0,
    trials: int = 50,
    target_error: float = 0.01,
    success_target: float = 0.95,
) -> ScalingReport:
    """Regress log m* on log eps (fixed d) and on log d (fixed eps).

    The noise scale here is deliberately harder than the single-example
    guarantee regime: with sigma at the 1/32 scale the pool threshold
    degenerates to m* = 1 at desk-scale d and no slope is observable, so the
    default sigma = d^(1/4) runs where the eps^2 sqrt(d) law actually binds.
    """
    eps_points = []
    for j, eps in enumerate(eps_grid):
        m_star = min_m_for_success(
            fixed_d, eps, master_seed, sigma_scale, trials, target_error,
            success_target, key=1000 + j,
        )
        eps_points.append((float(eps), m_star))
    d_points = []
    for j, d in enumerate(d_grid):
        m_star = min_m_for_success(
            int(d), fixed_epsilon, master_seed, sigma_scale, trials, target_error,
            success_target, key=2000 + j,
        )
        d_points.append((int(d), m_star))

    slope_eps = _loglog_slope([p[0] for p in eps_points], [p[1] for p in eps_points])
    slope_d = _loglog_slope([p[0] for p in d_points], [p[1] for p in d_points])
    return ScalingReport(
        slope_epsilon=slope_eps,
        slope_d=slope_d,
        eps_points=eps_points,
        d_points=d_points,
        fixed_d=fixed_d,
        fixed_epsilon=fixed_epsilon,
        sigma_scale=sigma_scale,
        master_seed=master_seed,
    )


def _loglog_slope(xs, ys) -> float:
    lx = np.log(np.asarray(xs, dtype=np.float64))
    ly = np.log(np.asarray(ys, dtype=np.float64))
    return float(np.polyfit(lx, ly, 1)[0])


# ---------------------------------------------------------------------------
# Concentration-bound checks
# ---------------------------------------------------------------------------


@dataclass
class BoundCheck:
    bound_name: str
    analytic_bound: float
    empirical_tail: float
    mc_se: float
    draws: int
    passed: bool
    params: dict


def _tail_result(name, bound, hits, draws, params) -> BoundCheck:
    tail = hits / draws
    se = math.sqrt(max(tail * (1 - tail), 0.0) / draws)
    return BoundCheck(
        bound_name=name,
        analytic_bound=float(bound),
        empirical_tail=float(tail),
        mc_se=float(se),
        draws=draws,
        passed=bool(tail <= bound + 3 * se),
        params=params,
    )


def check_chi_squared_tail(n: int, sigma: float, alpha_sq: float, draws: int, rng) -> BoundCheck:
    """P(||X||^2 >= alpha^2) <= exp(-alpha^2 / (20 sigma^2)), valid for alpha^2 > 2 n sigma^2."""
    if not alpha_sq > 2 * n * sigma**2:
        raise RegimeError(
            f"chi-squared tail bound requires alpha^2 > 2 n sigma^2 "
            f"({alpha_sq:.6g} <= {2 * n * sigma**2:.6g})"
        )
    hits = 0
    for start in range(0, draws, 200_000):
        k = min(200_000, draws - start)
        x = rng.standard_normal((k, n)) * sigma
        hits += int(np.count_nonzero(np.einsum("ij,ij->i", x, x) >= alpha_sq))
    bound = math.exp(-alpha_sq / (20.0 * sigma**2))
    return _tail_result(
        "chi_squared_norm", bound, hits, draws,
        {"n": n, "sigma": sigma, "alpha_sq": alpha_sq},
    )


def check_l1_tail(m: int, sigma: float, a: float, draws: int, rng) -> BoundCheck:
    """P(mean |X_i| >= a) <= 2^m exp(-m a^2 / (2 sigma^2)) for X ~ N(0, sigma^2 I_m)."""
    if not a > 0:
        raise RegimeError("L1 tail bound requires a > 0")
    hits = 0
    for start in range(0, draws, 200_000):
        k = min(200_000, draws - start)
        x = rng.standard_normal((k, m)) * sigma
        hits += int(np.count_nonzero(np.abs(x).mean(axis=1) >= a))
    bound = 2.0**m * math.exp(-m * a * a / (2.0 * sigma**2))
    return _tail_result("l1_norm", bound, hits, draws, {"m": m, "sigma": sigma, "a": a})


def check_mean_norm_tail(d: int, m: int, sigma_scale: float, draws: int, rng) -> BoundCheck:
    """Tail of ||zbar||_2 for the pseudo-labeled sample mean, any base classifier.

    P(||zbar||_2 >= (1+c) ||theta*||_2 + 2 sigma sqrt(d/m)) <= exp(-6 sqrt(d) / 5)
    with c = sqrt(20) sigma / ||theta*||_2 * sqrt(sqrt(d)/m + ln 2).
    """
    if d < 1 or m < 1:
        raise RegimeError("mean-norm tail bound requires d >= 1 and m >= 1")
    model = _sweep_model(d, sigma_scale)
    sigma = model.sigma
    theta_norm = math.sqrt(d)
    c = math.sqrt(20.0) * sigma / theta_norm * math.sqrt(math.sqrt(d) / m + math.log(2.0))
    threshold = (1 + c) * theta_norm + 2 * sigma * math.sqrt(d / m)
    hits = 0
    for _ in range(draws):
        lx, ly = sample_gaussian(model, 1, rng)
        base = supervised_estimator(lx, ly)
        ux, _ = sample_gaussian(model, m, rng)
        zbar = (base.predict(ux) @ ux) / m
        hits += np.linalg.norm(zbar) >= threshold
    bound = math.exp(-6.0 * math.sqrt(d) / 5.0)
    return _tail_result(
        "pseudo_mean_norm", bound, hits, draws,
        {"d": d, "m": m, "sigma": sigma, "threshold": threshold},
    )


def check_inner_product_tail(
    d: int, m: int, sigma: float, accuracy: float, delta: float, draws: int, rng
) -> BoundCheck:
    """Lower-tail bound on <zbar, theta*> for a base classifier of known accuracy p.

    P(<zbar, theta*> <= (7p/4 - 1) ||theta*||^2 - sqrt(2) ||theta*|| sigma
    sqrt(ln(1/delta)/m + ln 2)) <= exp(-m p / 128) + delta.  The base here is a
    fixed direction at the angle that realizes accuracy p exactly.
    """
    if not (0 < accuracy <= 1):
        raise RegimeError("inner-product tail bound requires accuracy p in (0, 1]")
    if not (0 < delta < 1):
        raise RegimeError("inner-product tail bound requires delta in (0, 1)")
    if d < 2:
        raise RegimeError("inner-product tail check needs d >= 2 to realize the base angle")
    theta = np.ones(d)
    theta_norm = math.sqrt(d)
    model = GaussianModel(theta, sigma)
    # Fixed unit direction u at the angle realizing accuracy p exactly:
    # accuracy of sign<u, .> is Phi(<u, theta*> / sigma).
    target_dot = sigma * norm.ppf(accuracy)
    if abs(target_dot) > theta_norm:
        raise RegimeError("requested accuracy is unreachable at this sigma")
    alpha = target_dot / theta_norm
    v = np.zeros(d)
    v[0], v[1] = 1.0 / math.sqrt(2.0), -1.0 / math.sqrt(2.0)  # unit, orthogonal to ones
    u = alpha * theta / theta_norm + math.sqrt(max(1 - alpha**2, 0.0)) * v
    p = float(norm.cdf(float(u @ theta) / sigma))
    threshold = (7 * p / 4 - 1) * theta_norm**2 - math.sqrt(2) * theta_norm * sigma * math.sqrt(
        math.log(1 / delta) / m + math.log(2.0)
    )
    base = LinearClassifier(u)
    hits = 0
    for _ in range(draws):
        ux, _ = sample_gaussian(model, m, rng)
        zbar = (base.predict(ux) @ ux) / m
        hits += float(zbar @ theta) <= threshold
    bound = math.exp(-m * p / 128.0) + delta
    return _tail_result(
        "pseudo_mean_inner_product", bound, hits, draws,
        {"d": d, "m": m, "sigma": sigma, "p": p, "delta": delta, "threshold": threshold},
    )


@dataclass
class ConcentrationConfig:
    chi_sq: dict = field(default_factory=lambda: {"n": 50, "sigma": 1.0, "alpha_sq": 200.0, "draws": 1_000_000})
    l1: dict = field(default_factory=lambda: {"m": 20, "sigma": 1.0, "a": 3.0, "draws": 1_000_000})
    mean_norm: dict = field(default_factory=lambda: {"d": 100, "m": 1000, "sigma_scale": 1.0 / 32.0, "draws": 2000})
    inner_product: dict = field(default_factory=lambda: {"d": 50, "m": 200, "sigma": 1.0, "accuracy": 0.9, "delta": 0.01, "draws": 2000})


def concentration_checks(config: ConcentrationConfig | None = None, seed: int = 0) -> list[BoundCheck]:
    """Monte-Carlo check of each tail bound inside its validity region."""
    config = config or ConcentrationConfig()
    return [
        check_chi_squared_tail(rng=derive_rng(seed, 1), **config.chi_sq),
        check_l1_tail(rng=derive_rng(seed, 2), **config.l1),
        check_mean_norm_tail(rng=derive_rng(seed, 3), **config.mean_norm),
        check_inner_product_tail(rng=derive_rng(seed, 4), **config.inner_product),
    ]
