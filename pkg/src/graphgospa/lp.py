"""Integer / relaxed linear program for the graph GOSPA family metric.

The assignment is encoded as an (n_X+1) x (n_Y+1) matrix W whose last
column and row mark unassigned nodes; the corner entry is fixed to zero
and is not a variable. The node costs are linear in W. The edge cost's
absolute value is linearized through an auxiliary matrix H and a scalar
bound, and its bilinear part (products of W unassignment entries) is
linearized exactly for binary W with the four-inequality bound trick
applied to one auxiliary q value per node, using the block-diagonal
adjacency matrix as the quadratic form.

Integer mode branches on W and recovers the exact metric. Relaxed mode
drops integrality (W >= 0 only) and returns a polynomial-time lower
bound, which equals the exact value whenever the optimizer lands on a
binary vertex; it requires eta >= 1/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .exact import FamilyParams, MetricBreakdown, normalize_assignment
from .graphs import BaseMetricSpec, Graph, adjacency, distance_matrix, make_graph
from .simplex import LinearProgram, SolverError, lp_format_text, solve_ilp, solve_lp

__all__ = [
    "AssignmentMatrix",
    "FamilyLpResult",
    "TriangleSearchReport",
    "build_cost_matrix",
    "build_family_program",
    "family_distance_lp",
    "edge_cost_matrix_form",
    "matrix_from_assignment",
    "assignment_from_matrix",
    "breakdown_from_matrix",
    "triangle_violation_search",
    "lp_format_text",
]

_ROWSUM_TOL = 1e-6


@dataclass(frozen=True)
class AssignmentMatrix:
    """(n_X+1) x (n_Y+1) assignment with GOSPA-style unassignment row/column.

    ``binaryness`` is the largest entrywise distance to {0, 1}; zero
    means the matrix is an integral assignment.
    """

    matrix: np.ndarray

    @property
    def binaryness(self) -> float:
        w = self.matrix
        return float(np.min(np.stack([np.abs(w), np.abs(1.0 - w)]), axis=0).max(initial=0.0))

    def check(self) -> None:
        w = self.matrix
        n_x, n_y = w.shape[0] - 1, w.shape[1] - 1
        if abs(w[n_x, n_y]) > _ROWSUM_TOL:
            raise ValueError("corner entry of an assignment matrix must be 0")
        rows = w[:n_x, :].sum(axis=1)
        cols = w[:, :n_y].sum(axis=0)
        if np.any(np.abs(rows - 1.0) > _ROWSUM_TOL) or np.any(np.abs(cols - 1.0) > _ROWSUM_TOL):
            raise ValueError("assignment matrix row/column sums differ from 1")


class FamilyLpResult(NamedTuple):
    value: float
    assignment: AssignmentMatrix
    breakdown: MetricBreakdown
    binaryness: float
    status: str


def build_cost_matrix(x: Graph, y: Graph, params: FamilyParams,
                      spec: BaseMetricSpec = BaseMetricSpec()) -> np.ndarray:
    """Node cost matrix: d^p in the interior, c^p/2 on the unassignment
    rim, 0 in the corner."""
    n_x, n_y = x.n_nodes, y.n_nodes
    d = np.full((n_x + 1, n_y + 1), params.c_p / 2.0)
    d[:n_x, :n_y] = distance_matrix(x.attributes, y.attributes, spec) ** params.p
    d[n_x, n_y] = 0.0
    return d


def _layout(n_x: int, n_y: int):
    """W (row-major, corner skipped), then H, then the scalar edge bound,
    then q. Returns (w_index, n_vars, names, blocks)."""
    w_index: dict[tuple[int, int], int] = {}
    names: list[str] = []
    for i in range(n_x + 1):
        for j in range(n_y + 1):
            if i == n_x and j == n_y:
                continue
            w_index[(i, j)] = len(names)
            names.append(f"W_{i}_{j}")
    n_w = len(names)
    for i in range(n_x):
        for j in range(n_y):
            names.append(f"H_{i}_{j}")
    e_hat = len(names)
    names.append("ehat")
    for t in range(n_x + n_y):
        names.append(f"q_{t}")
    blocks = {
        "W": range(0, n_w),
        "H": range(n_w, e_hat),
        "ehat": range(e_hat, e_hat + 1),
        "q": range(e_hat + 1, e_hat + 1 + n_x + n_y),
    }
    return w_index, len(names), names, blocks


def build_family_program(x: Graph, y: Graph, params: FamilyParams,
                         integrality: bool,
                         spec: BaseMetricSpec = BaseMetricSpec()) -> LinearProgram:
    """Assemble the linearized program for one graph pair.

    Relaxed mode (integrality False) keeps only W >= 0 and needs
    eta >= 1/2 for the objective to stay nonnegative.
    """
    if not integrality:
        params.require_relaxable()
    n_x, n_y = x.n_nodes, y.n_nodes
    ax = adjacency(x).astype(float)
    ay = adjacency(y).astype(float)
    d = build_cost_matrix(x, y, params, spec)
    eps_p = params.eps_p
    w_index, n_vars, names, blocks = _layout(n_x, n_y)
    h_index = {(i, j): blocks["H"][0] + i * n_y + j for i in range(n_x) for j in range(n_y)}
    e_hat = blocks["ehat"][0]
    q0 = blocks["q"][0]

    # x-alias: the unassignment entries of W, X side then Y side
    x_cols = [w_index[(i, n_y)] for i in range(n_x)] + [w_index[(n_x, j)] for j in range(n_y)]
    deg = np.concatenate([ax.sum(axis=1), ay.sum(axis=1)]) if n_x + n_y else np.zeros(0)

    c = np.zeros(n_vars)
    for (i, j), k in w_index.items():
        c[k] = d[i, j]
    for t in range(n_x + n_y):
        c[x_cols[t]] += (params.eta - 0.5) * eps_p * deg[t]
        c[q0 + t] = (params.beta / 2.0 - params.eta + 0.5) * eps_p
    c[e_hat] = eps_p / 2.0

    rows: list[np.ndarray] = []
    relations: list[str] = []
    rhs: list[float] = []

    def add(coefs: dict[int, float], rel: str, b: float) -> None:
        row = np.zeros(n_vars)
        for k, v in coefs.items():
            row[k] += v
        rows.append(row)
        relations.append(rel)
        rhs.append(b)

    for j in range(n_y):
        add({w_index[(i, j)]: 1.0 for i in range(n_x + 1)}, "=", 1.0)
    for i in range(n_x):
        add({w_index[(i, j)]: 1.0 for j in range(n_y + 1)}, "=", 1.0)

    for i in range(n_x):
        for j in range(n_y):
            flow: dict[int, float] = {}
            for k in range(n_x):
                if ax[i, k]:
                    flow[w_index[(k, j)]] = flow.get(w_index[(k, j)], 0.0) + ax[i, k]
            for k in range(n_y):
                if ay[k, j]:
                    flow[w_index[(i, k)]] = flow.get(w_index[(i, k)], 0.0) - ay[k, j]
            # H(i,j) >= +-(A_X W - W A_Y)(i,j)
            add({h_index[(i, j)]: 1.0, **{k: -v for k, v in flow.items()}}, ">=", 0.0)
            add({h_index[(i, j)]: 1.0, **flow}, ">=", 0.0)

    add({e_hat: 1.0, **{h: -1.0 for h in h_index.values()}}, ">=", 0.0)

    # bound q_t to equal x_t * sum_s Q(t,s) x_s at binary points, with
    # Q = blockdiag(A_X, A_Y); row sums of its negative part are zero
    for t in range(n_x + n_y):
        if t < n_x:
            qrow = [(x_cols[s], ax[t, s]) for s in range(n_x) if ax[t, s]]
        else:
            qrow = [(x_cols[n_x + s], ay[t - n_x, s]) for s in range(n_y) if ay[t - n_x, s]]
        q_plus = float(deg[t])
        q_minus = 0.0
        add({q0 + t: 1.0, x_cols[t]: -q_plus}, "<=", 0.0)
        add({q0 + t: 1.0, x_cols[t]: -q_minus}, ">=", 0.0)
        coefs = {q0 + t: 1.0}
        for col, v in qrow:
            coefs[col] = coefs.get(col, 0.0) - v
        lo = dict(coefs)
        lo[x_cols[t]] = lo.get(x_cols[t], 0.0) - q_minus
        add(lo, "<=", -q_minus)
        hi = dict(coefs)
        hi[x_cols[t]] = hi.get(x_cols[t], 0.0) - q_plus
        add(hi, ">=", -q_plus)

    lower = np.zeros(n_vars)
    upper = np.full(n_vars, np.inf)
    integral = np.zeros(n_vars, dtype=bool)
    if integrality:
        upper[blocks["W"]] = 1.0
        integral[blocks["W"]] = True
    lower[blocks["q"]] = -np.inf

    return LinearProgram(
        objective=c,
        a=np.vstack(rows) if rows else np.zeros((0, n_vars)),
        relations=relations,
        rhs=np.array(rhs),
        lower=lower,
        upper=upper,
        integral=integral,
        names=names,
        blocks=blocks,
    )


def _matrix_from_solution(sol_x: np.ndarray, n_x: int, n_y: int,
                          w_index: dict[tuple[int, int], int]) -> np.ndarray:
    w = np.zeros((n_x + 1, n_y + 1))
    for (i, j), k in w_index.items():
        w[i, j] = sol_x[k]
    return w


def matrix_from_assignment(gamma, n_x: int, n_y: int) -> np.ndarray:
    """Binary assignment matrix of an assignment set."""
    gamma = normalize_assignment(gamma, n_x, n_y)
    w = np.zeros((n_x + 1, n_y + 1))
    for i, j in gamma:
        w[i, j] = 1.0
    for i in range(n_x):
        if not any(i == a for a, _ in gamma):
            w[i, n_y] = 1.0
    for j in range(n_y):
        if not any(j == b for _, b in gamma):
            w[n_x, j] = 1.0
    return w


def assignment_from_matrix(w: np.ndarray) -> tuple[tuple[int, int], ...]:
    """Assignment set of a (near-)binary assignment matrix."""
    n_x, n_y = w.shape[0] - 1, w.shape[1] - 1
    pairs = [(i, j) for i in range(n_x) for j in range(n_y) if w[i, j] > 0.5]
    return normalize_assignment(pairs, n_x, n_y)


def edge_cost_matrix_form(w: np.ndarray, ax: np.ndarray, ay: np.ndarray,
                          params: FamilyParams) -> float:
    """Edge mismatch cost evaluated directly on an assignment matrix.

    For a binary matrix this equals the assignment-set edge cost; for a
    fractional one it is the same expression extended to fractions.
    """
    w = np.asarray(w, dtype=float)
    AssignmentMatrix(w).check()
    ax = np.asarray(ax, dtype=float)
    ay = np.asarray(ay, dtype=float)
    n_x, n_y = ax.shape[0], ay.shape[0]
    w_in = w[:n_x, :n_y]
    u = w[:n_x, n_y]
    v = w[n_x, :n_y]
    eps_p = params.eps_p
    abs_term = float(np.abs(ax @ w_in - w_in @ ay).sum())
    quad = float(u @ ax @ u + v @ ay @ v)
    half_bilinear = float(u @ ax @ (np.ones(n_x) - u) + (np.ones(n_y) - v) @ ay @ v)
    return (eps_p / 2.0) * abs_term + (params.beta / 2.0) * eps_p * quad \
        + (params.eta - 0.5) * eps_p * half_bilinear


def breakdown_from_matrix(w: np.ndarray, x: Graph, y: Graph, params: FamilyParams,
                          spec: BaseMetricSpec = BaseMetricSpec()) -> MetricBreakdown:
    """Six-way decomposition evaluated on an assignment matrix.

    Linear terms use the cost matrix; the three edge components are the
    matrix-form expressions, which for binary W coincide with the
    assignment-set tallies.
    """
    n_x, n_y = x.n_nodes, y.n_nodes
    d = build_cost_matrix(x, y, params, spec)
    w = np.asarray(w, dtype=float)
    ax = adjacency(x).astype(float)
    ay = adjacency(y).astype(float)
    w_in = w[:n_x, :n_y]
    u = w[:n_x, n_y]
    v = w[n_x, :n_y]
    eps_p = params.eps_p
    abs_term = float(np.abs(ax @ w_in - w_in @ ay).sum())
    n_half = float(u @ ax @ (np.ones(n_x) - u) + (np.ones(n_y) - v) @ ay @ v)
    n_un = float(u @ ax @ u + v @ ay @ v) / 2.0

    def clamp(z: float) -> float:
        return 0.0 if -1e-9 < z < 0.0 else z

    return MetricBreakdown.from_components(
        params.p,
        localisation_p=float((d[:n_x, :n_y] * w_in).sum()),
        missed_p=params.c_p / 2.0 * float(u.sum()),
        false_p=params.c_p / 2.0 * float(v.sum()),
        assigned_edge_p=clamp(eps_p * (abs_term - n_half) / 2.0),
        half_edge_p=clamp(params.eta * eps_p * n_half),
        unassigned_edge_p=clamp(params.beta * eps_p * n_un),
    )


def family_distance_lp(x: Graph, y: Graph, params: FamilyParams,
                       mode: str = "relaxed",
                       spec: BaseMetricSpec = BaseMetricSpec(),
                       max_nodes: int = 100_000,
                       time_limit: float | None = None) -> FamilyLpResult:
    """Family metric through the linear program.

    mode "integer" solves the binary program and returns the exact
    value; mode "relaxed" returns the LP lower bound. The reported
    breakdown is evaluated on the returned assignment matrix, so for a
    fractional relaxed solution its total is the cost of that fractional
    assignment rather than the (lower-bound) objective value.
    """
    if mode not in ("integer", "relaxed"):
        raise ValueError(f"unknown mode {mode!r}")
    program = build_family_program(x, y, params, integrality=(mode == "integer"), spec=spec)
    if mode == "integer":
        sol = solve_ilp(program, max_nodes=max_nodes, time_limit=time_limit)
    else:
        sol = solve_lp(program, time_limit=time_limit)
    if sol.status in ("infeasible", "unbounded"):
        raise SolverError(
            f"family program reported {sol.status}; "
            "this cannot happen for valid inputs"
        )
    w_index, _, _, _ = _layout(x.n_nodes, y.n_nodes)
    w = _matrix_from_solution(sol.x, x.n_nodes, y.n_nodes, w_index)
    assignment = AssignmentMatrix(np.clip(w, 0.0, 1.0))
    breakdown = breakdown_from_matrix(assignment.matrix, x, y, params, spec)
    value = max(sol.objective, 0.0) ** (1.0 / params.p)
    return FamilyLpResult(
        value=value,
        assignment=assignment,
        breakdown=breakdown,
        binaryness=assignment.binaryness,
        status=sol.status,
    )


@dataclass
class TriangleSearchReport:
    """Outcome of sampling for relaxed-mode triangle inequality breaks."""

    n_samples: int
    n_violations: int
    worst_gap: float
    examples: list[dict]

    def summary(self) -> str:
        if self.n_violations:
            return (
                f"relaxed triangle search: {self.n_violations}/{self.n_samples} "
                f"violating triples found, worst gap {self.worst_gap:.3e}"
            )
        return (
            f"relaxed triangle search: no violating triple found in "
            f"{self.n_samples} samples"
        )


def _random_graph(rng: np.random.Generator, n: int, p_edge: float,
                  spread: float = 4.0) -> Graph:
    attrs = rng.uniform(0.0, spread, size=(n, 2))
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if rng.random() < p_edge]
    return make_graph(attrs, edges)


def triangle_violation_search(n_samples: int = 200, seed: int = 0,
                              params: FamilyParams | None = None,
                              max_graph_nodes: int = 5,
                              tol: float = 1e-9) -> TriangleSearchReport:
    """Sample graph triples and test the relaxed value for triangle breaks.

    The relaxed lower bound is not a metric in general; this search
    documents whether violations show up in the sampled region. Finding
    none is a report, not a proof.
    """
    rng = np.random.default_rng(seed)
    examples: list[dict] = []
    n_violations = 0
    worst = 0.0
    for idx in range(n_samples):
        if params is None:
            eta = rng.uniform(0.5, 1.0)
            trial = FamilyParams(
                c=float(rng.uniform(0.5, 4.0)),
                p=1.0,
                epsilon=float(rng.uniform(0.2, 2.0)),
                beta=float(rng.uniform(0.0, eta)),
                eta=float(eta),
                allow_zero_beta=True,
            )
        else:
            trial = params
        sizes = rng.integers(1, max_graph_nodes + 1, size=3)
        gx, gz, gy = (_random_graph(rng, int(s), 0.5) for s in sizes)
        d_xy = family_distance_lp(gx, gy, trial, mode="relaxed").value
        d_xz = family_distance_lp(gx, gz, trial, mode="relaxed").value
        d_zy = family_distance_lp(gz, gy, trial, mode="relaxed").value
        gap = d_xy - d_xz - d_zy
        if gap > tol:
            n_violations += 1
            worst = max(worst, gap)
            if len(examples) < 10:
                examples.append({
                    "sample": idx,
                    "gap": float(gap),
                    "d_xy": float(d_xy),
                    "d_xz": float(d_xz),
                    "d_zy": float(d_zy),
                    "params": (trial.c, trial.p, trial.epsilon, trial.beta, trial.eta),
                })
    return TriangleSearchReport(
        n_samples=n_samples,
        n_violations=n_violations,
        worst_gap=worst,
        examples=examples,
    )
