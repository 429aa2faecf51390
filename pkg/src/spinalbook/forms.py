"""Differential forms on coordinate charts, checked on sample grids.

Coefficients are sympy expressions in the chart coordinates (differentiated
exactly) or tabulated 1-D profiles (differentiated by second-order finite
differences). Positivity on a grid is evidence, not proof; every report says
how many points were sampled.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from typing import Callable, Mapping, Optional, Sequence, Union

import numpy as np
import sympy as sp

CLOSED_FORM_TOL = 1e-12
FINITE_DIFF_TOL = 1e-6


@dataclass(frozen=True)
class Chart:
    names: tuple[str, ...]
    ranges: tuple[tuple[float, float], ...]
    periodic: tuple[bool, ...]
    resolution: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.names)
        if not (len(self.ranges) == len(self.periodic) == len(self.resolution) == n):
            raise ValueError("chart data must have one entry per coordinate")
        if any(r < 2 for r in self.resolution):
            raise ValueError("resolution must be at least 2 per axis")

    @classmethod
    def build(cls, spec: Mapping[str, tuple], resolution: Union[int, Sequence[int]] = 16) -> "Chart":
        """``spec`` maps name -> (lo, hi) or (lo, hi, periodic)."""
        names = tuple(spec)
        ranges = tuple((float(v[0]), float(v[1])) for v in spec.values())
        periodic = tuple(bool(v[2]) if len(v) > 2 else False for v in spec.values())
        if isinstance(resolution, int):
            resolution = (resolution,) * len(names)
        return cls(names, ranges, periodic, tuple(resolution))

    @property
    def dimension(self) -> int:
        return len(self.names)

    def symbols(self) -> tuple[sp.Symbol, ...]:
        return tuple(sp.Symbol(n, real=True) for n in self.names)

    def axes(self) -> list[np.ndarray]:
        out = []
        for (lo, hi), per, n in zip(self.ranges, self.periodic, self.resolution):
            out.append(np.linspace(lo, hi, n, endpoint=not per))
        return out

    def grid(self) -> list[np.ndarray]:
        return np.meshgrid(*self.axes(), indexing="ij")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(self.resolution)

    def with_range(self, name: str, lo: float, hi: float) -> "Chart":
        i = self.names.index(name)
        ranges = list(self.ranges)
        ranges[i] = (lo, hi)
        return Chart(self.names, tuple(ranges), self.periodic, self.resolution)


@dataclass(frozen=True, eq=False)
class Profile:
    """A function of one chart coordinate, given by samples."""

    coordinate: str
    xs: np.ndarray
    ys: np.ndarray

    def __post_init__(self) -> None:
        xs, ys = np.asarray(self.xs, float), np.asarray(self.ys, float)
        if xs.ndim != 1 or xs.shape != ys.shape or len(xs) < 3:
            raise ValueError("a profile needs matching 1-D samples (at least 3)")
        if np.any(np.diff(xs) <= 0):
            raise ValueError("profile coordinates must be strictly increasing")
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "ys", ys)

    @classmethod
    def sample(cls, coordinate: str, fn: Callable, lo: float, hi: float, n: int = 2001) -> "Profile":
        xs = np.linspace(lo, hi, n)
        return cls(coordinate, xs, np.asarray(fn(xs), float) * np.ones_like(xs))

    @classmethod
    def from_csv(cls, path, coordinate: str) -> "Profile":
        with open(path, newline="") as fh:
            rows = [r for r in csv.reader(fh) if r and not r[0].lstrip().startswith("#")]
        try:
            data = np.array([[float(a), float(b)] for a, b, *_ in rows])
        except ValueError:
            data = np.array([[float(a), float(b)] for a, b, *_ in rows[1:]])  # header row
        return cls(coordinate, data[:, 0], data[:, 1])

    def derivative(self) -> "Profile":
        return Profile(self.coordinate, self.xs, np.gradient(self.ys, self.xs, edge_order=2))

    def scaled(self, c: float) -> "Profile":
        return Profile(self.coordinate, self.xs, c * self.ys)

    def __call__(self, x) -> np.ndarray:
        return np.interp(x, self.xs, self.ys)


Coefficient = Union[sp.Expr, Profile, float, int]


def _is_profile(c) -> bool:
    return isinstance(c, Profile)


@dataclass(frozen=True, eq=False)
class ChartForm:
    """A 1- or 2-form: ``coeffs[(i,)]`` or ``coeffs[(i, j)]`` with ``i < j``."""

    degree: int
    coeffs: Mapping[tuple[int, ...], Coefficient]

    def __post_init__(self) -> None:
        if self.degree not in (1, 2):
            raise ValueError("only 1- and 2-forms are supported")
        clean: dict[tuple[int, ...], Coefficient] = {}
        for key, c in dict(self.coeffs).items():
            key = tuple(key)
            if len(key) != self.degree:
                raise ValueError(f"index {key} does not match degree {self.degree}")
            if not _is_profile(c):
                c = sp.sympify(c)
            if self.degree == 2:
                i, j = key
                if i == j:
                    raise ValueError("a 2-form has no diagonal coefficients")
                if i > j:
                    key, c = (j, i), (c.scaled(-1.0) if _is_profile(c) else -c)
            if key in clean:
                raise ValueError(f"coefficient {key} given twice")
            clean[key] = c
        object.__setattr__(self, "coeffs", clean)

    @property
    def tabulated(self) -> bool:
        return any(_is_profile(c) for c in self.coeffs.values())

    def scaled(self, s: float) -> "ChartForm":
        return ChartForm(self.degree, {k: (c.scaled(s) if _is_profile(c) else s * c) for k, c in self.coeffs.items()})

    def __add__(self, other: "ChartForm") -> "ChartForm":
        if self.degree != other.degree:
            raise ValueError("cannot add forms of different degree")
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            if k not in out:
                out[k] = c
            elif _is_profile(c) or _is_profile(out[k]):
                raise ValueError("sums of tabulated coefficients on the same index are not supported")
            else:
                out[k] = out[k] + c
        return ChartForm(self.degree, out)


def one_form(**named) -> Callable[[Chart], ChartForm]:
    """Helper: ``one_form(theta=expr, phi=expr)(chart)``."""
    def build(chart: Chart) -> ChartForm:
        return ChartForm(1, {(chart.names.index(n),): c for n, c in named.items()})
    return build


# ---------------------------------------------------------------- evaluation

def _eval(chart: Chart, c: Coefficient, grid: list[np.ndarray]) -> np.ndarray:
    if _is_profile(c):
        if c.coordinate not in chart.names:
            raise ValueError(f"profile in {c.coordinate!r} but chart has {chart.names}")
        i = chart.names.index(c.coordinate)
        lo, hi = chart.ranges[i]
        if lo < c.xs[0] - 1e-12 or hi > c.xs[-1] + 1e-12:
            raise ValueError(f"profile covers [{c.xs[0]}, {c.xs[-1]}], chart needs [{lo}, {hi}]")
        return c(grid[i])
    fn = sp.lambdify(chart.symbols(), c, "numpy")
    return np.broadcast_to(np.asarray(fn(*grid), dtype=float), grid[0].shape)


def _partial(chart: Chart, c: Coefficient, k: int) -> Coefficient:
    if _is_profile(c):
        return c.derivative() if chart.names[k] == c.coordinate else sp.Integer(0)
    return sp.diff(c, chart.symbols()[k])


def _as_symbols(chart: Chart, c: Coefficient) -> Coefficient:
    """Re-express a sympy coefficient written with plain symbols in chart symbols."""
    if _is_profile(c):
        return c
    subs = {sp.Symbol(n): s for n, s in zip(chart.names, chart.symbols())}
    return sp.sympify(c).subs(subs)


def components(chart: Chart, form: ChartForm) -> dict[tuple[int, ...], np.ndarray]:
    grid = chart.grid()
    return {k: _eval(chart, _as_symbols(chart, c), grid) for k, c in form.coeffs.items()}


def exterior_derivative(chart: Chart, alpha: ChartForm) -> dict[tuple[int, int], np.ndarray]:
    """Grid values of ``(d alpha)_{ij} = d_i alpha_j - d_j alpha_i`` for ``i < j``."""
    if alpha.degree != 1:
        raise ValueError("exterior_derivative expects a 1-form")
    grid = chart.grid()
    n = chart.dimension
    zero = np.zeros(chart.shape)
    out = {}
    for i in range(n):
        for j in range(i + 1, n):
            val = zero.copy()
            if (j,) in alpha.coeffs:
                val = val + _eval(chart, _partial(chart, _as_symbols(chart, alpha.coeffs[(j,)]), i), grid)
            if (i,) in alpha.coeffs:
                val = val - _eval(chart, _partial(chart, _as_symbols(chart, alpha.coeffs[(i,)]), j), grid)
            out[i, j] = val
    return out


def exterior_derivative_form(chart: Chart, alpha: ChartForm) -> ChartForm:
    """``d alpha`` as a ChartForm, symbolically when possible."""
    if alpha.tabulated:
        raise ValueError("symbolic exterior derivative needs closed-form coefficients")
    n = chart.dimension
    coeffs = {}
    for i in range(n):
        for j in range(i + 1, n):
            aj = _as_symbols(chart, alpha.coeffs.get((j,), 0))
            ai = _as_symbols(chart, alpha.coeffs.get((i,), 0))
            coeffs[i, j] = _partial(chart, aj, i) - _partial(chart, ai, j)
    return ChartForm(2, coeffs)


def _vector(chart: Chart, alpha: ChartForm) -> list[np.ndarray]:
    comps = components(chart, alpha)
    return [comps.get((i,), np.zeros(chart.shape)) for i in range(chart.dimension)]


def _matrix(chart: Chart, vals: Mapping[tuple[int, int], np.ndarray]) -> list[list[np.ndarray]]:
    n = chart.dimension
    zero = np.zeros(chart.shape)
    m = [[zero] * n for _ in range(n)]
    for (i, j), v in vals.items():
        m[i][j] = v
        m[j][i] = -v
    return m


def alpha_wedge_dalpha(chart: Chart, alpha: ChartForm) -> np.ndarray:
    """Coefficient of alpha ^ d alpha against d x0 ^ d x1 ^ d x2."""
    return one_wedge_two(_vector(chart, alpha), _matrix(chart, exterior_derivative(chart, alpha)))


def one_wedge_two(a: Sequence[np.ndarray], w: Sequence[Sequence[np.ndarray]]) -> np.ndarray:
    return a[0] * w[1][2] - a[1] * w[0][2] + a[2] * w[0][1]


def omega_wedge_omega(w: Sequence[Sequence[np.ndarray]]) -> np.ndarray:
    """Coefficient of omega ^ omega against the standard volume form in 4D."""
    return 2.0 * (w[0][1] * w[2][3] - w[0][2] * w[1][3] + w[0][3] * w[1][2])


# ---------------------------------------------------------------- reports

@dataclass(frozen=True)
class CheckReport:
    name: str
    min_value: float
    worst_point: dict
    passed: bool
    n_points: int
    clauses: dict = field(default_factory=dict)
    details: tuple[str, ...] = ()
    metrics: dict = field(default_factory=dict)

    @property
    def summary(self) -> str:
        status = "pass" if self.passed else "FAIL"
        return f"{self.name}: {status}, min {self.min_value:.6g}, verified at {self.n_points} sample points"

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "min_value": self.min_value,
                "worst_point": self.worst_point, "n_points": self.n_points,
                "clauses": self.clauses, "metrics": self.metrics, "details": list(self.details),
                "summary": self.summary}


def _report(name: str, chart: Chart, values: np.ndarray, tol: float, clauses=None, details=(),
            metrics=None) -> CheckReport:
    values = np.broadcast_to(values, chart.shape)
    idx = np.unravel_index(int(np.argmin(values)), values.shape)
    axes = chart.axes()
    worst = {n: float(axes[i][idx[i]]) for i, n in enumerate(chart.names)}
    lo = float(values[idx])
    clauses = dict(clauses or {})
    passed = lo > tol and all(clauses.values())
    return CheckReport(name, lo, worst, passed, int(values.size), clauses, tuple(details), dict(metrics or {}))


def _default_tol(*forms: ChartForm) -> float:
    return FINITE_DIFF_TOL if any(f.tabulated for f in forms) else CLOSED_FORM_TOL


def contact_check(chart: Chart, alpha: ChartForm, tol: Optional[float] = None) -> CheckReport:
    """alpha ^ d alpha > 0 at every grid node."""
    if chart.dimension != 3:
        raise ValueError("contact_check needs a 3-dimensional chart")
    if alpha.degree != 1:
        raise ValueError("contact_check needs a 1-form")
    tol = _default_tol(alpha) if tol is None else tol
    return _report("contact", chart, alpha_wedge_dalpha(chart, alpha), tol)


def symplectic_check(chart: Chart, omega: ChartForm, tol: Optional[float] = None) -> CheckReport:
    """omega ^ omega > 0 at every grid node."""
    if chart.dimension != 4:
        raise ValueError("symplectic_check needs a 4-dimensional chart")
    if omega.degree != 2:
        raise ValueError("symplectic_check needs a 2-form")
    tol = _default_tol(omega) if tol is None else tol
    w = _matrix(chart, components(chart, omega))
    return _report("symplectic", chart, omega_wedge_omega(w), tol)


def liouville_check(chart: Chart, lam: ChartForm, tol: Optional[float] = None) -> CheckReport:
    """d lambda ^ d lambda > 0 at every grid node."""
    if chart.dimension != 4:
        raise ValueError("liouville_check needs a 4-dimensional chart")
    tol = _default_tol(lam) if tol is None else tol
    w = _matrix(chart, exterior_derivative(chart, lam))
    return _report("liouville", chart, omega_wedge_omega(w), tol)


# ---------------------------------------------------------------- thresholds

LADDER_RATIO = 1.1
LADDER_RUNGS = 20


@dataclass(frozen=True)
class Threshold:
    value: Optional[float]  # None means unbounded on [0, K_max]
    kind: str
    K_max: float
    evaluations: int

    @property
    def unbounded(self) -> bool:
        return self.value is None

    def to_json(self) -> dict:
        return {"K0": "unbounded" if self.value is None else self.value, "kind": self.kind,
                "K_max": self.K_max, "evaluations": self.evaluations}


def thurston_threshold(family: Callable[[float], ChartForm], chart: Chart, K_max: float,
                       kind: str = "contact", resolution: float = 1e-3, tol: Optional[float] = None) -> Threshold:
    """Least K in [0, K_max] (to ``resolution``) from which the family passes.

    "Passes from K" is tested on a geometric ladder K, 1.1 K, ... (20 rungs,
    capped at K_max) plus K_max itself, which only approximates "for all
    K' >= K".
    """
    checks = {"contact": contact_check, "liouville": liouville_check, "symplectic": symplectic_check}
    if kind not in checks:
        raise ValueError(f"unknown family kind {kind!r}")
    check = checks[kind]
    cache: dict[float, bool] = {}

    def ok(K: float) -> bool:
        if K not in cache:
            cache[K] = check(chart, family(K), tol).passed
        return cache[K]

    def ladder(K: float) -> list[float]:
        start = K if K > 0 else resolution
        rungs = [min(start * LADDER_RATIO ** i, K_max) for i in range(LADDER_RUNGS)]
        return sorted({K, *rungs, K_max})

    def holds_from(K: float) -> bool:
        return all(ok(k) for k in ladder(K))

    if holds_from(0.0):
        return Threshold(0.0, kind, K_max, len(cache))
    if not ok(K_max):
        return Threshold(None, kind, K_max, len(cache))
    lo, hi = 0.0, K_max
    while hi - lo > resolution:
        mid = 0.5 * (lo + hi)
        if holds_from(mid):
            hi = mid
        else:
            lo = mid
    return Threshold(hi, kind, K_max, len(cache))


def scaled_family(omega: ChartForm, eta: ChartForm) -> Callable[[float], ChartForm]:
    """C -> C * omega + eta, for scaling arguments with a fixed perturbation."""
    return lambda C: omega.scaled(C) + eta


# ---------------------------------------------------------------- profiles

def _profile_values(c, rho: np.ndarray, name: str):
    """Values and first derivative of a profile given as sympy expression,
    callable pair or tabulated Profile."""
    if isinstance(c, Profile):
        return c(rho), c.derivative()(rho), True
    if isinstance(c, tuple):
        fn, dfn = c
        return np.asarray(fn(rho), float) * np.ones_like(rho), np.asarray(dfn(rho), float) * np.ones_like(rho), False
    x = sp.Symbol(name, real=True)
    expr = sp.sympify(c).subs(sp.Symbol(name), x)
    f = sp.lambdify(x, expr, "numpy")
    df = sp.lambdify(x, sp.diff(expr, x), "numpy")
    return (np.asarray(f(rho), float) * np.ones_like(rho), np.asarray(df(rho), float) * np.ones_like(rho), False)


def giroux_interface_check(f, g, chart: Chart, tol: Optional[float] = None) -> CheckReport:
    """Positivity of alpha ^ d beta + beta ^ d alpha for alpha = f(rho) d theta,
    beta = g(rho) d phi on a (rho, phi, theta) chart."""
    if chart.dimension != 3:
        raise ValueError("the interface chart is (rho, phi, theta)")
    rho_name, phi_i, theta_i = chart.names[0], 1, 2
    alpha = ChartForm(1, {(theta_i,): f})
    beta = ChartForm(1, {(phi_i,): g})
    fa = _vector(chart, alpha)
    if np.min(fa[theta_i]) <= 0:
        raise ValueError("f must be positive on the chart")
    val = (one_wedge_two(fa, _matrix(chart, exterior_derivative(chart, beta)))
           + one_wedge_two(_vector(chart, beta), _matrix(chart, exterior_derivative(chart, alpha))))
    tol = _default_tol(alpha, beta) if tol is None else tol
    return _report("giroux-interface", chart, val, tol, details=(f"coordinate {rho_name}",))


def boundary_profile_check(f, g, delta: float, n: int = 4001, collar: float = 0.1,
                           tol: float = FINITE_DIFF_TOL) -> CheckReport:
    """Conditions on the boundary adjustment path t -> (f(t), g(t)), t in (-delta, 0]:
    (e^t, 1) near -delta; f'g - fg' > 0; f(0) = 1, g(0) = 0; f'(0) = 0."""
    t = np.linspace(-delta, 0.0, n)
    fv, dfv, ftab = _profile_values(f, t, "t")
    gv, dgv, _ = _profile_values(g, t, "t")
    near = t <= -delta + collar * delta
    match_err = float(max(np.max(np.abs(fv[near] - np.exp(t[near]))), np.max(np.abs(gv[near] - 1.0))))
    cross = dfv * gv - fv * dgv
    scale = max(1.0, float(np.max(np.abs(dfv))))
    clauses = {
        "matches (e^t, 1) near -delta": match_err <= tol,
        "f'g - fg' > 0": bool(np.min(cross) > 0),
        "f(0) = 1 and g(0) = 0": abs(fv[-1] - 1.0) <= tol and abs(gv[-1]) <= tol,
        "f'(0) = 0": abs(dfv[-1]) <= tol * scale,
    }
    chart = Chart(("t",), ((-delta, 0.0),), (False,), (n,))
    details = (f"max deviation from (e^t, 1) on the collar: {match_err:.3g}",
               f"f(0) = {fv[-1]:.12g}, g(0) = {gv[-1]:.12g}, f'(0) = {dfv[-1]:.3g}")
    return _report("boundary-profile", chart, cross, -math.inf, clauses, details)


# ---------------------------------------------------------------- collar model

def collar_chart(resolution: int = 10, s_range=(-1.0, 0.0), t_range=(-1.0, 0.0)) -> Chart:
    return Chart.build({"s": s_range, "phi": (0.0, 2 * math.pi, True), "t": t_range,
                        "theta": (0.0, 2 * math.pi, True)}, resolution)


def collar_form(K: float, m: int) -> ChartForm:
    """K m e^s d phi + e^t d theta on (s, phi, t, theta)."""
    s, t = sp.Symbol("s", real=True), sp.Symbol("t", real=True)
    return ChartForm(1, {(1,): K * m * sp.exp(s), (3,): sp.exp(t)})


def handle_form(K: float) -> ChartForm:
    """K ds ^ d phi + e^t dt ^ d theta on (s, phi, t, theta)."""
    t = sp.Symbol("t", real=True)
    return ChartForm(2, {(0, 1): K, (2, 3): sp.exp(t)})


def standard_smoothing_profiles():
    """Closed-form corner smoothing (F, G): (rho, 0) for rho <= -1/4,
    (0, -rho) for rho >= 1/4, with F' - G' = 1 throughout."""
    rho = sp.Symbol("rho", real=True)
    u = 2 * rho + sp.Rational(1, 2)
    inner = (u ** 3 - u ** 4 / 2) / 2
    quarter = sp.Rational(1, 4)
    integral = sp.Piecewise((0, rho <= -quarter), (inner, rho <= quarter), (quarter + (rho - quarter), True))
    return rho - integral, -integral


def collar_model_check(K: float, m: int, chart: Optional[Chart] = None, F=None, G=None,
                       field_tol: float = 1e-9, rho_samples: int = 397) -> CheckReport:
    """(a) d lambda_K symplectic, (b) Liouville field = d_s + d_t with ds(V) > 0,
    (c) the corner smoothing (F, G) is transverse to it with the required
    monotonicity."""
    if K <= 0 or m < 1:
        raise ValueError("need K > 0 and m >= 1")
    chart = chart or collar_chart()
    lam = collar_form(K, m)
    omega_vals = exterior_derivative(chart, lam)
    W = _matrix(chart, omega_vals)
    vol = omega_wedge_omega(W)

    # (b): solve Omega^T V = lambda, i.e. d lambda(V, .) = lambda, pointwise
    mat = np.stack([np.stack(row, axis=-1) for row in W], axis=-2).reshape(-1, 4, 4)
    rhs = np.stack(_vector(chart, lam), axis=-1).reshape(-1, 4)
    V = np.linalg.solve(np.transpose(mat, (0, 2, 1)), rhs[..., None])[..., 0]
    field_err = float(np.max(np.abs(V - np.array([1.0, 0.0, 1.0, 0.0]))))
    ds_min = float(np.min(V[:, 0]))

    # (c): profiles on rho in (-1, 1)
    if F is None or G is None:
        F0, G0 = standard_smoothing_profiles()
        F = F0 if F is None else F
        G = G0 if G is None else G
    rho = np.linspace(-0.99, 0.99, rho_samples)
    Fv, dF, tabF = _profile_values(F, rho, "rho")
    Gv, dG, tabG = _profile_values(G, rho, "rho")
    margin = 2 * (rho[1] - rho[0]) if (tabF or tabG) else 0.0
    eps = FINITE_DIFF_TOL if (tabF or tabG) else CLOSED_FORM_TOL
    left, right = rho <= -0.25, rho >= 0.25
    clauses = {
        "(a) d lambda_K ^ d lambda_K > 0": bool(np.min(vol) > CLOSED_FORM_TOL),
        "(b) V = d_s + d_t": field_err < field_tol,
        "(b) ds(V) > 0": ds_min > 0,
        "(c) F' - G' > 0": bool(np.min(dF - dG) > 0),
        "(c) F' >= 0, G' <= 0": bool(np.min(dF) >= -eps and np.max(dG) <= eps),
        "(c) F' > 0 for rho < 1/4": bool(np.all(dF[rho < 0.25 - margin] > 0)),
        "(c) G' < 0 for rho > -1/4": bool(np.all(dG[rho > -0.25 + margin] < 0)),
        "(c) (F, G) = (rho, 0) for rho <= -1/4": bool(np.all(np.abs(Fv[left] - rho[left]) <= eps)
                                                     and np.all(np.abs(Gv[left]) <= eps)),
        "(c) (F, G) = (0, -rho) for rho >= 1/4": bool(np.all(np.abs(Fv[right]) <= eps)
                                                     and np.all(np.abs(Gv[right] + rho[right]) <= eps)),
    }
    details = (f"max |V - (1,0,1,0)| = {field_err:.3g}", f"min ds(V) = {ds_min:.6g}",
               f"min F' - G' = {float(np.min(dF - dG)):.6g}")
    metrics = {"field_error": field_err, "ds_min": ds_min,
               "field_error_per_component": [float(e) for e in np.max(np.abs(V - [1.0, 0.0, 1.0, 0.0]), axis=0)]}
    return _report("collar-model", chart, vol, CLOSED_FORM_TOL, clauses, details, metrics)
