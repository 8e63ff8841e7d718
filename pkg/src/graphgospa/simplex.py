"""Self-contained dense LP toolkit: model, revised simplex, branch & bound.

The solver is a two-phase revised simplex over the bounded form

    min c.x   s.t.   A x {<=, =, >=} b,   lower <= x <= upper,

with Dantzig pricing and a switch to Bland's rule after a run of
degenerate pivots, so it cannot cycle. Solutions returned with status
"optimal" satisfy all constraints within 1e-8 absolute. Integer
variables (the mask) are handled by depth-first branch and bound on the
most fractional variable, pruning nodes whose relaxation bound cannot
beat the incumbent.

Everything is deterministic: identical programs produce identical
solutions, pivots and node counts.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "LinearProgram",
    "LpSolution",
    "SolverError",
    "solve_lp",
    "solve_ilp",
    "constraint_violation",
    "lp_format_text",
]

FEAS_TOL = 1e-8
_TOL = 1e-9
_PIVOT_TOL = 1e-7
# The ratio-test tie window must stay at dust level: a wider window lets
# the leaving variable overshoot other basics' bounds, and those small
# violations amplify when the offenders later leave the basis themselves.
_HARRIS_MARGIN = 1e-12
# Bland's rule is the cycling backstop only: Devex, the widened-tie ratio
# test and bound perturbation handle degenerate stretches far faster, so
# it engages only after a long stall.
_DEGENERATE_STREAK = 400
_REFACTOR_EVERY = 60


class SolverError(RuntimeError):
    """Solver could not produce a usable answer."""


class _NumericalTrouble(RuntimeError):
    """Internal: basis went bad; retried with tighter settings."""


@dataclass
class LinearProgram:
    """Dense LP/ILP in minimization form.

    ``relations`` holds one of "<=", "=", ">=" per constraint row.
    ``integral`` marks 0/1 variables for branch and bound; masked
    variables must be bounded [0, 1]. ``names`` and ``blocks`` document
    the variable layout for debugging and text export.
    """

    objective: np.ndarray
    a: np.ndarray
    relations: list[str]
    rhs: np.ndarray
    lower: np.ndarray
    upper: np.ndarray
    integral: np.ndarray
    names: list[str] = field(default_factory=list)
    blocks: dict[str, range] = field(default_factory=dict)

    def __post_init__(self):
        self.objective = np.asarray(self.objective, dtype=float)
        self.a = np.asarray(self.a, dtype=float)
        n = self.objective.size
        if self.a.size == 0:
            self.a = self.a.reshape(len(self.relations), n)
        self.rhs = np.asarray(self.rhs, dtype=float)
        self.lower = np.asarray(self.lower, dtype=float)
        self.upper = np.asarray(self.upper, dtype=float)
        self.integral = np.asarray(self.integral, dtype=bool)
        m = self.a.shape[0]
        if self.a.shape != (m, n) or self.rhs.size != m or len(self.relations) != m:
            raise ValueError("inconsistent constraint dimensions")
        if self.lower.size != n or self.upper.size != n or self.integral.size != n:
            raise ValueError("inconsistent variable dimensions")
        if any(rel not in ("<=", "=", ">=") for rel in self.relations):
            raise ValueError("relations must be one of <=, =, >=")
        if np.any(self.lower > self.upper):
            raise ValueError("lower bound exceeds upper bound")
        if np.any(self.integral & ((self.lower < 0) | (self.upper > 1))):
            raise ValueError("integral variables must be bounded within [0, 1]")

    @property
    def n_vars(self) -> int:
        return self.objective.size

    @property
    def n_constraints(self) -> int:
        return self.a.shape[0]


@dataclass
class LpSolution:
    x: np.ndarray
    objective: float
    status: str  # optimal | infeasible | unbounded | limit_reached
    iterations: int = 0
    nodes: int = 0


def constraint_violation(lp: LinearProgram, x: np.ndarray) -> float:
    """Largest absolute violation of constraints and bounds at x."""
    worst = 0.0
    ax = lp.a @ x
    for i, rel in enumerate(lp.relations):
        r = float(ax[i] - lp.rhs[i])
        if rel == "<=":
            worst = max(worst, r)
        elif rel == ">=":
            worst = max(worst, -r)
        else:
            worst = max(worst, abs(r))
    worst = max(worst, float(np.max(lp.lower - x, initial=0.0)))
    worst = max(worst, float(np.max(x - lp.upper, initial=0.0)))
    return worst


class _Core:
    """Equality form min c.z, A z = b, 0 <= z <= u of a LinearProgram.

    Finite lower bounds are shifted out; variables bounded only above
    are reflected; fully free variables are split into two nonnegative
    halves; inequality rows get slack columns. ``slack_of_row`` maps a
    constraint row to its slack column so the solver can crash-start on
    slacks instead of artificials.
    """

    def __init__(self, lp: LinearProgram, lower: np.ndarray, upper: np.ndarray):
        m = lp.n_constraints
        cols: list[np.ndarray] = []
        cost: list[float] = []
        ubs: list[float] = []
        self.var_map: list[tuple[int, str]] = []
        b = lp.rhs.astype(float).copy()
        for k in range(lp.n_vars):
            lo, hi = lower[k], upper[k]
            col = lp.a[:, k]
            if lo > -np.inf:
                cols.append(col)
                cost.append(float(lp.objective[k]))
                ubs.append(hi - lo)
                self.var_map.append((k, "shift"))
                if lo != 0.0:
                    b = b - col * lo
            elif hi < np.inf:
                cols.append(-col)
                cost.append(-float(lp.objective[k]))
                ubs.append(np.inf)
                self.var_map.append((k, "reflect"))
                b = b - col * hi
            else:
                cols.append(col)
                cost.append(float(lp.objective[k]))
                ubs.append(np.inf)
                self.var_map.append((k, "pos"))
                cols.append(-col)
                cost.append(-float(lp.objective[k]))
                ubs.append(np.inf)
                self.var_map.append((k, "neg"))
        self.slack_of_row: dict[int, int] = {}
        for i, rel in enumerate(lp.relations):
            if rel == "=":
                continue
            slack = np.zeros(m)
            slack[i] = 1.0 if rel == "<=" else -1.0
            self.slack_of_row[i] = len(cols)
            cols.append(slack)
            cost.append(0.0)
            ubs.append(np.inf)
            self.var_map.append((-1, "slack"))
        self.a = np.column_stack(cols) if cols else np.zeros((m, 0))
        self.c = np.array(cost)
        self.u = np.array(ubs)
        self.b = b
        # equilibrate rows with exact powers of two so pivot magnitudes
        # stay comparable; solutions are unchanged
        if self.a.size:
            worst = np.abs(self.a).max(axis=1)
            scale = np.exp2(np.ceil(np.log2(np.maximum(worst, 1.0))))
            self.a /= scale[:, None]
            self.b = self.b / scale
        self.lower = lower
        self.upper = upper
        self.n_vars = lp.n_vars

    def restore(self, z: np.ndarray) -> np.ndarray:
        x = np.zeros(self.n_vars)
        for zk, (k, kind) in enumerate(self.var_map):
            if kind == "shift":
                x[k] = z[zk] + (self.lower[k] if self.lower[k] > -np.inf else 0.0)
            elif kind == "reflect":
                x[k] = self.upper[k] - z[zk]
            elif kind == "pos":
                x[k] += z[zk]
            elif kind == "neg":
                x[k] -= z[zk]
        return x


class _Simplex:
    """Bounded-variable two-phase revised simplex on equality form.

    Starts from a crash basis: every inequality row whose slack can sit
    at a feasible value hosts its slack; only the remaining rows (the
    equalities, typically few) get artificial variables.
    """

    def __init__(self, a: np.ndarray, b: np.ndarray, c: np.ndarray, u: np.ndarray,
                 max_iterations: int, deadline: float | None,
                 slack_of_row: dict[int, int] | None = None,
                 refactor_every: int = _REFACTOR_EVERY,
                 pivot_tol: float = _PIVOT_TOL):
        self.pivot_tol = pivot_tol
        m, n = a.shape
        a = a.copy()
        b = b.copy()
        flip = b < 0
        a[flip] *= -1.0
        b[flip] *= -1.0  # nonnegative rhs so initial basics are feasible
        self.m, self.n = m, n
        self.full = np.hstack([a, np.eye(m)])
        self.u = np.concatenate([u, np.full(m, np.inf)])
        self.b = b
        self.cost2 = np.concatenate([c, np.zeros(m)])
        self.max_iterations = max_iterations
        self.deadline = deadline
        self.refactor_every = refactor_every

        basis = np.arange(n, n + m)
        xb = b.copy()
        self.artificial_rows = np.ones(m, dtype=bool)
        if slack_of_row:
            for i, col in slack_of_row.items():
                coef = self.full[i, col]  # sign already row-normalized
                if coef > 0 or b[i] <= _TOL:
                    basis[i] = col
                    xb[i] = b[i] / coef if coef > 0 else 0.0
                    self.artificial_rows[i] = False
        self.basis = basis
        self.in_basis = np.zeros(n + m, dtype=bool)
        self.in_basis[self.basis] = True
        self.at_upper = np.zeros(n + m, dtype=bool)
        self.binv = np.linalg.inv(self.full[:, self.basis])
        self.xb = xb
        self.lo = np.zeros(n + m)  # lower bounds; perturbation dips below 0
        self.iterations = 0

    def _clean(self, xb: np.ndarray) -> np.ndarray:
        # remove dust just below the lower bound; real violations must stay
        # visible so the ratio test can drive the offender out again
        lo_b = self.lo[self.basis]
        return np.where((xb < lo_b) & (xb > lo_b - 1e-11), lo_b, xb)

    def _recompute_xb(self) -> None:
        up = self.at_upper & ~self.in_basis
        resid = self.b - self.full[:, up] @ self.u[up]
        down = ~self.at_upper & ~self.in_basis & (self.lo != 0.0)
        if np.any(down):
            resid = resid - self.full[:, down] @ self.lo[down]
        self.xb = self._clean(self.binv @ resid)

    def _refactor(self) -> None:
        try:
            self.binv = np.linalg.inv(self.full[:, self.basis])
        except np.linalg.LinAlgError as exc:
            raise _NumericalTrouble("singular basis at refactorization") from exc
        self._recompute_xb()

    def _pivot(self, j: int, leave: int, d: np.ndarray,
               leave_to_upper: bool) -> None:
        out = self.basis[leave]
        self.in_basis[out] = False
        self.at_upper[out] = leave_to_upper
        self.basis[leave] = j
        self.in_basis[j] = True
        self.at_upper[j] = False
        row = self.binv[leave] / d[leave]
        d_rest = d.copy()
        d_rest[leave] = 0.0
        self.binv -= np.outer(d_rest, row)
        self.binv[leave] = row
        # recompute basics exactly under the updated inverse: it costs the
        # same as the rank-1 update and stops ratio-test overshoot residue
        # from accumulating across pivots
        self._recompute_xb()

    def _perturb(self, round_no: int) -> None:
        """Loosen the bounds of the *basic* variables by tiny deterministic
        amounts so ratio-test ties become distinct. Basic values do not
        depend on their own bounds, so the current point is untouched;
        the true bounds come back before any result is reported."""
        if self._saved_bounds is None:
            self._saved_bounds = (self.lo.copy(), self.u.copy())
        idx = self.basis[self.basis < self.n]
        h = ((idx.astype(np.uint64) + np.uint64(1 + 977 * round_no))
             * np.uint64(2654435761) % np.uint64(2**32)) / 2.0**32
        xi = 1e-9 * (1.0 + 9.0 * h)
        self.lo[idx] = self.lo[idx] - xi
        up = np.isfinite(self.u[idx])
        self.u[idx[up]] = self.u[idx[up]] + xi[up]

    def _unperturb(self) -> None:
        self.lo, self.u = self._saved_bounds
        self._saved_bounds = None
        self._refactor()

    def run(self, cost: np.ndarray, allowed: np.ndarray) -> str:
        n_priced = self.n  # artificials never enter, so never price them
        struct = self.full[:, :n_priced]
        cost_s = cost[:n_priced]
        allowed_s = allowed[:n_priced]
        bland = False
        bland_spent = 0
        streak = 0
        local_iter = 0
        perturb_rounds = 0
        self._saved_bounds = None
        fresh_basis = True  # True right after (re)factorization
        weights = np.ones(n_priced)  # Devex reference weights
        banned = np.zeros(n_priced, dtype=bool)  # no safe pivot available
        unban_epochs = 0

        def finish(status: str) -> str:
            if self._saved_bounds is not None:
                self._unperturb()
            return status

        while True:
            if local_iter >= self.max_iterations:
                return finish("limit_reached")
            if (self.deadline is not None and local_iter % 64 == 0
                    and time.monotonic() > self.deadline):
                return finish("limit_reached")
            local_iter += 1
            self.iterations += 1
            if local_iter % (10 if bland else self.refactor_every) == 0:
                self._refactor()
                fresh_basis = True

            y = cost[self.basis] @ self.binv
            red = cost_s - y @ struct
            cand = (~self.in_basis[:n_priced] & allowed_s & ~banned
                    & (self.u[:n_priced] - self.lo[:n_priced] > _TOL))
            viol = np.where(
                cand & ~self.at_upper[:n_priced] & (red < -_TOL), -red,
                np.where(cand & self.at_upper[:n_priced] & (red > _TOL), red, 0.0),
            )
            if not np.any(viol > 0):
                if np.any(banned):
                    # see whether a banned column has become pivotable
                    unban_epochs += 1
                    if unban_epochs > 3:
                        raise _NumericalTrouble("no numerically safe pivot exists")
                    banned[:] = False
                    if not fresh_basis:
                        self._refactor()
                        fresh_basis = True
                    continue
                if self._saved_bounds is not None:
                    # optimal for the perturbed bounds: restore the real
                    # ones and clean up with a few more pivots
                    self._unperturb()
                    fresh_basis = True
                    streak = 0
                    continue
                lo_b = self.lo[self.basis]
                ub_b = self.u[self.basis]
                bad = (self.xb - lo_b < -1e-9) | (
                    self.xb - np.where(np.isfinite(ub_b), ub_b, np.inf) > 1e-7
                )
                if np.any(bad):
                    if not fresh_basis:
                        self._refactor()
                        fresh_basis = True
                        continue
                    raise _NumericalTrouble("converged to a primal-infeasible basis")
                return "optimal"
            if bland:
                bland_spent += 1
                if bland_spent > 5000:
                    raise _NumericalTrouble("anti-cycling mode failed to progress")
                j = int(np.flatnonzero(viol > 0)[0])
            else:
                j = int(np.argmax(viol * viol / weights))
            from_upper = bool(self.at_upper[j])
            step = (self.binv @ self.full[:, j]) * (-1.0 if from_upper else 1.0)

            # blocking ratios of the basic variables (vectorized); every
            # row with a non-negligible step must cap t, otherwise large
            # steps silently drag small-step basics outside their bounds
            lo_b = self.lo[self.basis]
            ub_b = self.u[self.basis]
            dec = step > 1e-11
            inc = (step < -1e-11) & np.isfinite(ub_b)
            ratios = np.full(self.m, np.inf)
            ratios[dec] = (self.xb[dec] - lo_b[dec]) / step[dec]
            ratios[inc] = (ub_b[inc] - self.xb[inc]) / (-step[inc])
            t_block = float(ratios.min()) if self.m else np.inf

            span = self.u[j] - self.lo[j]  # distance to the far bound
            if not np.isfinite(t_block) and not np.isfinite(span):
                if not fresh_basis:
                    # rule out an unbounded ray caused by basis drift
                    self._refactor()
                    fresh_basis = True
                    continue
                return finish("unbounded")

            if span < t_block - _TOL or not np.isfinite(t_block):
                # entering variable flips to its other bound; basis unchanged
                self.at_upper[j] = not from_upper
                self._recompute_xb()
                streak = 0
                fresh_basis = False
                continue

            if bland:
                ties = np.flatnonzero(ratios <= t_block + _TOL)
                leave = int(ties[np.argmin(self.basis[ties])])
            else:
                # Harris two-pass: widen the window by the feasibility
                # tolerance, then take the largest pivot inside it
                slack = np.full(self.m, np.inf)
                slack[dec] = (self.xb[dec] - lo_b[dec] + FEAS_TOL) / step[dec]
                slack[inc] = (ub_b[inc] - self.xb[inc] + FEAS_TOL) / (-step[inc])
                t_harris = float(slack.min())
                ties = np.flatnonzero(ratios <= t_harris)
                leave = int(ties[np.argmax(np.abs(step[ties]))])
            leave_to_upper = bool(inc[leave])

            if abs(step[leave]) < max(self.pivot_tol, 1e-5):
                # a pivot this small is either factorization drift or a
                # genuinely unusable column: confirm on a fresh basis,
                # then set the column aside rather than divide by noise
                if not fresh_basis:
                    self._refactor()
                    fresh_basis = True
                else:
                    banned[j] = True
                continue

            t = max(float(ratios[leave]), 0.0)
            if t <= _TOL:
                streak += 1
                if streak >= _DEGENERATE_STREAK:
                    # long stall: break ratio-test ties with a tiny bound
                    # perturbation; Bland remains the final backstop
                    streak = 0
                    if perturb_rounds < 4:
                        perturb_rounds += 1
                        self._perturb(perturb_rounds)
                    elif not bland:
                        bland = True
                        self._refactor()
                        fresh_basis = True
                    continue
            else:
                streak = 0
                bland = False
            d = step * (-1.0 if from_upper else 1.0)

            # Devex weight update from the pivotal row
            pivot = d[leave]
            alpha = self.binv[leave] @ struct
            w_enter = max(weights[j], 1.0)
            scaled = (alpha / pivot) ** 2 * w_enter
            np.maximum(weights, scaled, out=weights)
            out_var = self.basis[leave]
            if out_var < n_priced:
                weights[out_var] = max(w_enter / (pivot * pivot), 1.0)
            if w_enter > 1e8:
                weights[:] = 1.0  # reference framework drifted; reset

            self._pivot(j, leave, d, leave_to_upper)
            fresh_basis = False

    def values(self) -> np.ndarray:
        z = np.where(self.at_upper & np.isfinite(self.u), self.u, self.lo)
        z[self.basis] = self.xb
        return z[: self.n]

    def solve(self) -> str:
        n, m = self.n, self.m
        allowed = np.ones(n + m, dtype=bool)
        allowed[n:] = False  # artificials never enter
        art_cost = np.zeros(n + m)
        art_cost[n + np.flatnonzero(self.artificial_rows)] = 1.0
        if np.any(self.artificial_rows):
            status = self.run(art_cost, allowed)
            if status != "optimal":
                return status if status == "limit_reached" else "infeasible"
            if float(art_cost[self.basis] @ self.xb) > 1e-7:
                return "infeasible"

            # drive leftover zero-valued artificials out of the basis
            for pos in range(m):
                if self.basis[pos] < n or not self.artificial_rows[self.basis[pos] - n]:
                    continue
                row = self.binv[pos] @ self.full[:, :n]
                choices = np.flatnonzero((np.abs(row) > 1e-7) & ~self.in_basis[:n])
                if choices.size == 0:
                    self.u[self.basis[pos]] = 0.0  # redundant row: pin it
                    continue
                j = int(choices[0])
                d = self.binv @ self.full[:, j]
                self._pivot(j, pos, d, False)

        art_idx = n + np.flatnonzero(self.artificial_rows)
        self.u[art_idx] = 0.0  # pin artificials for phase 2
        return self.run(self.cost2, allowed)


def solve_lp(lp: LinearProgram, max_iterations: int | None = None,
             time_limit: float | None = None,
             _bounds: tuple[np.ndarray, np.ndarray] | None = None) -> LpSolution:
    """Solve the continuous relaxation of ``lp`` (integrality ignored)."""
    lower, upper = _bounds if _bounds is not None else (lp.lower, lp.upper)
    core = _Core(lp, lower, upper)
    if max_iterations is None:
        max_iterations = 200 * (lp.n_constraints + lp.n_vars) + 2000
    deadline = time.monotonic() + time_limit if time_limit is not None else None
    iterations_spent = 0
    for refactor_every, pivot_tol in ((_REFACTOR_EVERY, _PIVOT_TOL), (8, 1e-6), (2, 1e-5)):
        engine = _Simplex(core.a, core.b, core.c, core.u, max_iterations,
                          deadline, core.slack_of_row, refactor_every, pivot_tol)
        try:
            status = engine.solve()
        except _NumericalTrouble:
            iterations_spent += engine.iterations
            continue
        x = core.restore(engine.values())
        objective = float(lp.objective @ x) if status in ("optimal", "limit_reached") else np.nan
        return LpSolution(x=x, objective=objective, status=status,
                          iterations=engine.iterations + iterations_spent)
    raise SolverError("simplex kept losing the basis despite tight refactorization")


def solve_ilp(lp: LinearProgram, max_nodes: int = 100_000,
              time_limit: float | None = None) -> LpSolution:
    """Branch and bound over the integrality mask of ``lp``.

    Depth first, branching on the most fractional integer variable and
    pruning nodes whose relaxation cannot improve on the incumbent.
    Exhausting the node or time budget returns the incumbent with
    status "limit_reached"; with no incumbent at all it raises
    SolverError.
    """
    mask = np.flatnonzero(lp.integral)
    if mask.size == 0:
        raise ValueError("program has no integral variables")
    deadline = time.monotonic() + time_limit if time_limit is not None else None

    best_x: np.ndarray | None = None
    best_obj = np.inf
    nodes = 0
    iterations = 0
    out_of_budget = False
    stack: list[tuple[np.ndarray, np.ndarray]] = [(lp.lower.copy(), lp.upper.copy())]

    while stack:
        if nodes >= max_nodes or (deadline is not None and time.monotonic() > deadline):
            out_of_budget = True
            break
        lower, upper = stack.pop()
        nodes += 1
        rel = solve_lp(lp, _bounds=(lower, upper))
        iterations += rel.iterations
        if rel.status == "infeasible":
            continue
        if rel.status == "unbounded":
            raise SolverError("integer program with unbounded relaxation")
        if rel.status == "limit_reached":
            out_of_budget = True  # subtree left unexplored
            continue
        if rel.objective > best_obj - 1e-9:
            continue
        frac = np.abs(rel.x[mask] - np.round(rel.x[mask]))
        worst = int(np.argmax(frac)) if frac.size else 0
        if frac.size == 0 or frac[worst] <= 1e-6:
            if rel.objective < best_obj - 1e-12:
                best_obj = rel.objective
                best_x = rel.x.copy()
                best_x[mask] = np.round(best_x[mask])
            continue
        j = int(mask[worst])
        value = rel.x[j]
        lo0, up0 = lower.copy(), upper.copy()
        lo1, up1 = lower.copy(), upper.copy()
        up0[j] = np.floor(value)
        lo1[j] = np.ceil(value)
        if value - np.floor(value) >= 0.5:
            stack.append((lo0, up0))
            stack.append((lo1, up1))  # explored first
        else:
            stack.append((lo1, up1))
            stack.append((lo0, up0))

    if best_x is None:
        if out_of_budget:
            raise SolverError("branch and bound budget exhausted with no incumbent")
        return LpSolution(x=np.zeros(lp.n_vars), objective=np.nan,
                          status="infeasible", iterations=iterations, nodes=nodes)
    status = "limit_reached" if out_of_budget else "optimal"
    return LpSolution(x=best_x, objective=best_obj, status=status,
                      iterations=iterations, nodes=nodes)


def lp_format_text(lp: LinearProgram) -> str:
    """Render the program in CPLEX LP text format for external solvers."""
    names = lp.names or [f"x{k}" for k in range(lp.n_vars)]

    def term(coef: float, name: str) -> str:
        sign = "-" if coef < 0 else "+"
        return f" {sign} {abs(coef):.12g} {name}"

    lines = ["Minimize", " obj:" + "".join(
        term(c, names[k]) for k, c in enumerate(lp.objective) if c != 0.0
    )]
    lines.append("Subject To")
    for i in range(lp.n_constraints):
        body = "".join(
            term(lp.a[i, k], names[k]) for k in range(lp.n_vars) if lp.a[i, k] != 0.0
        )
        lines.append(f" c{i}:{body or ' 0 ' + names[0]} {lp.relations[i]} {lp.rhs[i]:.12g}")
    lines.append("Bounds")
    for k in range(lp.n_vars):
        lo, hi = lp.lower[k], lp.upper[k]
        if lo == -np.inf and hi == np.inf:
            lines.append(f" {names[k]} free")
        elif hi == np.inf:
            lines.append(f" {lo:.12g} <= {names[k]}")
        else:
            lines.append(f" {lo:.12g} <= {names[k]} <= {hi:.12g}")
    binaries = [names[k] for k in range(lp.n_vars) if lp.integral[k]]
    if binaries:
        lines.append("Binaries")
        lines.append(" " + " ".join(binaries))
    lines.append("End")
    return "\n".join(lines) + "\n"
