"""Exact graph GOSPA family metric by exhaustive search over assignments.

The metric between graphs X and Y minimizes, over partial one-to-one
assignments gamma between node indices,

    sum_{(i,j) in gamma} d^p(x_i, y_j)
    + (c^p / 2) * (n_X + n_Y - 2 |gamma|)
    + e^p(gamma)

and reports the p-th root. The edge term charges eps^p per assigned
edge mismatch, eta * eps^p per edge joining an assigned node to an
unassigned one, and beta * eps^p per edge with both endpoints
unassigned.

Exhaustive enumeration is exponential in the node counts, so it is kept
behind a size guard; this module is the ground truth the LP backends are
validated against.

An assignment is represented as a tuple of (i, j) pairs sorted by i,
with every i and j used at most once; :func:`normalize_assignment`
produces this canonical form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Iterator, NamedTuple

import numpy as np

from .graphs import BaseMetricSpec, Graph, adjacency, distance_matrix

__all__ = [
    "FamilyParams",
    "MetricBreakdown",
    "EdgeCounts",
    "ExactResult",
    "SizeLimitError",
    "normalize_assignment",
    "enumerate_assignments",
    "count_assignments",
    "edge_mismatch_cost",
    "decompose",
    "family_distance_exact",
]

DEFAULT_MAX_NODES = 8


class SizeLimitError(ValueError):
    """Graph too large for exhaustive assignment enumeration."""


@dataclass(frozen=True)
class FamilyParams:
    """Hyperparameters (c, p, epsilon, beta, eta) of the metric family.

    Validity: c > 0, 1 <= p < inf, epsilon > 0 and 0 < beta <= eta <= 1.
    ``allow_zero_beta`` widens the domain to beta = 0, the corner at
    which (together with eta = 1/2) the family reduces to the plain
    graph GOSPA metric that has no unassigned-edge penalty.
    """

    c: float
    p: float
    epsilon: float
    beta: float
    eta: float
    allow_zero_beta: bool = False

    def __post_init__(self):
        if not self.c > 0:
            raise ValueError("c must satisfy c > 0")
        if not (1 <= self.p < math.inf):
            raise ValueError("p must satisfy 1 <= p < inf")
        if not self.epsilon > 0:
            raise ValueError("epsilon must satisfy epsilon > 0")
        low_ok = self.beta > 0 or (self.allow_zero_beta and self.beta == 0)
        if not (low_ok and self.beta <= self.eta <= 1):
            raise ValueError(
                "beta and eta must satisfy 0 < beta <= eta <= 1"
                + (" (beta = 0 allowed in compatibility mode)" if self.allow_zero_beta else "")
            )

    def require_relaxable(self) -> None:
        """Relaxed-LP evaluation additionally needs eta >= 1/2."""
        if self.eta < 0.5:
            raise ValueError("relaxed LP mode requires eta >= 1/2")

    @property
    def c_p(self) -> float:
        return self.c**self.p

    @property
    def eps_p(self) -> float:
        return self.epsilon**self.p


class EdgeCounts(NamedTuple):
    """Edge mismatch tallies for one assignment."""

    assigned_mismatch: int
    half_assigned: int
    unassigned: int


@dataclass(frozen=True)
class MetricBreakdown:
    """Six-way cost decomposition; the *_p fields are to the p-th power.

    With X read as ground truth, ``missed_p`` charges X's unassigned
    nodes and ``false_p`` Y's. ``total`` carries the 1/p root, so
    total**p equals the sum of the six components.
    """

    localisation_p: float
    missed_p: float
    false_p: float
    assigned_edge_p: float
    half_edge_p: float
    unassigned_edge_p: float
    total: float

    @classmethod
    def from_components(cls, p: float, localisation_p: float, missed_p: float,
                        false_p: float, assigned_edge_p: float, half_edge_p: float,
                        unassigned_edge_p: float) -> "MetricBreakdown":
        total_p = (localisation_p + missed_p + false_p
                   + assigned_edge_p + half_edge_p + unassigned_edge_p)
        return cls(localisation_p, missed_p, false_p, assigned_edge_p,
                   half_edge_p, unassigned_edge_p, max(total_p, 0.0) ** (1.0 / p))

    @property
    def total_p(self) -> float:
        return (self.localisation_p + self.missed_p + self.false_p
                + self.assigned_edge_p + self.half_edge_p + self.unassigned_edge_p)

    def as_tuple(self) -> tuple[float, float, float, float, float, float]:
        return (self.localisation_p, self.missed_p, self.false_p,
                self.assigned_edge_p, self.half_edge_p, self.unassigned_edge_p)


class ExactResult(NamedTuple):
    value: float
    assignment: tuple[tuple[int, int], ...]
    breakdown: MetricBreakdown


def normalize_assignment(pairs: Iterable[tuple[int, int]], n_x: int, n_y: int
                         ) -> tuple[tuple[int, int], ...]:
    """Canonical sorted form of an assignment; validates one-to-one-ness."""
    gamma = tuple(sorted((int(i), int(j)) for i, j in pairs))
    xs = [i for i, _ in gamma]
    ys = [j for _, j in gamma]
    if len(set(xs)) != len(xs) or len(set(ys)) != len(ys):
        raise ValueError("assignment reuses a node index")
    if gamma and (min(xs) < 0 or max(xs) >= n_x or min(ys) < 0 or max(ys) >= n_y):
        raise ValueError("assignment index out of range")
    return gamma


def count_assignments(n_x: int, n_y: int) -> int:
    """Number of partial one-to-one assignments: sum_k C(n_x,k) C(n_y,k) k!."""
    return sum(
        math.comb(n_x, k) * math.comb(n_y, k) * math.factorial(k)
        for k in range(min(n_x, n_y) + 1)
    )


def enumerate_assignments(n_x: int, n_y: int,
                          max_nodes: int = DEFAULT_MAX_NODES
                          ) -> Iterator[tuple[tuple[int, int], ...]]:
    """Yield every assignment between index sets of sizes n_x and n_y.

    Deterministic order: by assignment size, then lexicographically.
    Raises SizeLimitError beyond ``max_nodes`` per side; the count grows
    super-exponentially.
    """
    if n_x < 0 or n_y < 0:
        raise ValueError("node counts must be nonnegative")
    if n_x > max_nodes or n_y > max_nodes:
        raise SizeLimitError(
            f"enumeration over ({n_x}, {n_y}) nodes exceeds the guard of {max_nodes}"
        )
    for k in range(min(n_x, n_y) + 1):
        for xs in combinations(range(n_x), k):
            for ys in permutations(range(n_y), k):
                yield tuple(zip(xs, ys))


def _edge_counts(gamma, ax: np.ndarray, ay: np.ndarray) -> EdgeCounts:
    degx = ax.sum(axis=1)
    degy = ay.sum(axis=1)
    ex_total = int(ax.sum()) // 2
    ey_total = int(ay.sum()) // 2

    mis = 0
    ax_assigned = 0  # edges of X with both endpoints assigned
    ay_assigned = 0
    k = len(gamma)
    for a in range(k):
        ia, ja = gamma[a]
        for b in range(a + 1, k):
            ib, jb = gamma[b]
            ex = ax[ia, ib]
            ey = ay[ja, jb]
            ax_assigned += ex
            ay_assigned += ey
            if ex != ey:
                mis += 1
    half_x = int(sum(degx[i] for i, _ in gamma)) - 2 * ax_assigned
    half_y = int(sum(degy[j] for _, j in gamma)) - 2 * ay_assigned
    un_x = ex_total - ax_assigned - half_x
    un_y = ey_total - ay_assigned - half_y
    return EdgeCounts(int(mis), int(half_x + half_y), int(un_x + un_y))


def edge_mismatch_cost(gamma, ax: np.ndarray, ay: np.ndarray,
                       params: FamilyParams) -> tuple[float, EdgeCounts]:
    """Edge mismatch error e^p of an assignment plus its three tallies.

    e^p = eps^p * (assigned mismatches)
        + eta * eps^p * (half-assigned edges)
        + beta * eps^p * (fully unassigned edges).
    """
    ax = np.asarray(ax)
    ay = np.asarray(ay)
    gamma = normalize_assignment(gamma, ax.shape[0], ay.shape[0])
    counts = _edge_counts(gamma, ax, ay)
    e_p = params.eps_p * (
        counts.assigned_mismatch
        + params.eta * counts.half_assigned
        + params.beta * counts.unassigned
    )
    return e_p, counts


def decompose(gamma, x: Graph, y: Graph, params: FamilyParams,
              spec: BaseMetricSpec = BaseMetricSpec()) -> MetricBreakdown:
    """Six-way cost decomposition of one assignment between two graphs."""
    gamma = normalize_assignment(gamma, x.n_nodes, y.n_nodes)
    dp = distance_matrix(x.attributes, y.attributes, spec) ** params.p
    half = params.c_p / 2.0
    _, counts = edge_mismatch_cost(gamma, adjacency(x), adjacency(y), params)
    loc = float(sum(dp[i, j] for i, j in gamma))
    return MetricBreakdown.from_components(
        params.p,
        localisation_p=loc,
        missed_p=half * (x.n_nodes - len(gamma)),
        false_p=half * (y.n_nodes - len(gamma)),
        assigned_edge_p=params.eps_p * counts.assigned_mismatch,
        half_edge_p=params.eta * params.eps_p * counts.half_assigned,
        unassigned_edge_p=params.beta * params.eps_p * counts.unassigned,
    )


def family_distance_exact(x: Graph, y: Graph, params: FamilyParams,
                          spec: BaseMetricSpec = BaseMetricSpec(),
                          max_nodes: int = DEFAULT_MAX_NODES) -> ExactResult:
    """Exact family metric, its optimal assignment, and the decomposition.

    Ties between optimal assignments break to the lexicographically
    smallest pair list, so results are reproducible.
    """
    n_x, n_y = x.n_nodes, y.n_nodes
    dp = (distance_matrix(x.attributes, y.attributes, spec) ** params.p).tolist()
    ax = adjacency(x)
    ay = adjacency(y)
    axl = ax.tolist()
    ayl = ay.tolist()
    degx = [int(d) for d in ax.sum(axis=1)]
    degy = [int(d) for d in ay.sum(axis=1)]
    ex_total = sum(degx) // 2
    ey_total = sum(degy) // 2

    half = params.c_p / 2.0
    eps_p = params.eps_p
    eta = params.eta
    beta = params.beta

    best_cost = math.inf
    best_gamma: tuple[tuple[int, int], ...] = ()
    for gamma in enumerate_assignments(n_x, n_y, max_nodes=max_nodes):
        k = len(gamma)
        cost = half * (n_x + n_y - 2 * k)
        mis = 0
        ax_assigned = 0
        ay_assigned = 0
        degsum_x = 0
        degsum_y = 0
        for a in range(k):
            ia, ja = gamma[a]
            cost += dp[ia][ja]
            degsum_x += degx[ia]
            degsum_y += degy[ja]
            rowx = axl[ia]
            rowy = ayl[ja]
            for b in range(a + 1, k):
                ib, jb = gamma[b]
                ex = rowx[ib]
                ey = rowy[jb]
                ax_assigned += ex
                ay_assigned += ey
                if ex != ey:
                    mis += 1
        half_edges = degsum_x + degsum_y - 2 * (ax_assigned + ay_assigned)
        unassigned = ex_total + ey_total - ax_assigned - ay_assigned - half_edges
        cost += eps_p * (mis + eta * half_edges + beta * unassigned)
        if cost < best_cost or (cost == best_cost and gamma < best_gamma):
            best_cost = cost
            best_gamma = gamma

    breakdown = decompose(best_gamma, x, y, params, spec)
    return ExactResult(
        value=max(best_cost, 0.0) ** (1.0 / params.p),
        assignment=best_gamma,
        breakdown=breakdown,
    )
