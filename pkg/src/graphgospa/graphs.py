"""Attributed undirected graphs and the base metric on node attributes.

A graph is an ordered list of node attribute vectors (all sharing one
dimension) plus a set of undirected edges over 0-based node indices.
Everything here is immutable after construction and safe to share
between threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "Graph",
    "BaseMetricSpec",
    "GraphError",
    "make_graph",
    "adjacency",
    "base_distance",
    "distance_matrix",
]


class GraphError(ValueError):
    """Invalid graph construction or invariant violation."""


def _canonical_edges(edges, n_nodes: int) -> tuple[tuple[int, int], ...]:
    """Validate and canonicalize edges to sorted (i, j) pairs with i < j."""
    seen: set[tuple[int, int]] = set()
    for e in edges:
        pair = tuple(e)
        if len(pair) != 2:
            raise GraphError(f"edge {pair!r} is not a pair of node indices")
        i, j = int(pair[0]), int(pair[1])
        if i == j:
            raise GraphError(f"self-loop on node {i}")
        if not (0 <= i < n_nodes and 0 <= j < n_nodes):
            raise GraphError(f"edge ({i}, {j}) out of range for {n_nodes} nodes")
        key = (i, j) if i < j else (j, i)
        if key in seen:
            raise GraphError(f"duplicate edge {key}")
        seen.add(key)
    return tuple(sorted(seen))


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected graph with real attribute vectors on nodes.

    ``attributes`` has shape (n_nodes, attr_dim); ``edges`` is a sorted
    tuple of (i, j) pairs with i < j. Use :func:`make_graph` instead of
    constructing directly so the invariants are checked.
    """

    attributes: np.ndarray
    edges: tuple[tuple[int, int], ...] = field(default=())

    @property
    def n_nodes(self) -> int:
        return self.attributes.shape[0]

    @property
    def attr_dim(self) -> int:
        return self.attributes.shape[1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.attributes.shape == other.attributes.shape
            and np.array_equal(self.attributes, other.attributes)
            and self.edges == other.edges
        )

    def __repr__(self) -> str:
        return f"Graph(n_nodes={self.n_nodes}, n_edges={len(self.edges)})"


def make_graph(attributes, edges=()) -> Graph:
    """Build a validated graph.

    ``attributes`` is a sequence of equal-length real vectors (or an
    (n, d) array); ``edges`` a collection of index pairs, unordered pair
    semantics. Rejects self-loops, duplicates and out-of-range indices.
    The empty graph (no nodes, no edges) is valid.
    """
    attrs = np.array(attributes, dtype=float)
    if attrs.size == 0:
        attrs = attrs.reshape(0, attrs.shape[1] if attrs.ndim == 2 else 0)
    if attrs.ndim == 1:
        # a flat list of scalars is read as 1-D attribute vectors
        attrs = attrs.reshape(-1, 1)
    if attrs.ndim != 2:
        raise GraphError("attributes must form an (n_nodes, dim) array of equal-length vectors")
    attrs.flags.writeable = False
    return Graph(attributes=attrs, edges=_canonical_edges(edges, attrs.shape[0]))


def adjacency(g: Graph) -> np.ndarray:
    """Symmetric {0,1} adjacency matrix with zero diagonal."""
    a = np.zeros((g.n_nodes, g.n_nodes), dtype=np.int8)
    for i, j in g.edges:
        a[i, j] = 1
        a[j, i] = 1
    return a


@dataclass(frozen=True)
class BaseMetricSpec:
    """Base metric d(.,.) on the node attribute space.

    kind "euclidean": L2 norm of the difference.
    kind "discrete": 0 if the vectors are identical, else ``delta``.
    """

    kind: str = "euclidean"
    delta: float = 1.0

    def __post_init__(self):
        if self.kind not in ("euclidean", "discrete"):
            raise ValueError(f"unknown base metric kind {self.kind!r}")
        if self.kind == "discrete" and not self.delta > 0:
            raise ValueError("discrete base metric requires delta > 0")


def default_discrete_delta(c: float) -> float:
    """Discrete-metric delta making a label mismatch strictly worse than
    unassigning both nodes (delta^p > c^p for every p >= 1)."""
    return 2.0 * c


def base_distance(x, y, spec: BaseMetricSpec = BaseMetricSpec()) -> float:
    """Distance between two attribute vectors under ``spec``."""
    xv = np.asarray(x, dtype=float).ravel()
    yv = np.asarray(y, dtype=float).ravel()
    if xv.shape != yv.shape:
        raise ValueError(f"attribute dimension mismatch: {xv.shape} vs {yv.shape}")
    if spec.kind == "euclidean":
        return float(np.linalg.norm(xv - yv))
    return 0.0 if np.array_equal(xv, yv) else float(spec.delta)


def distance_matrix(ax: np.ndarray, ay: np.ndarray, spec: BaseMetricSpec) -> np.ndarray:
    """All-pairs base distances between two attribute arrays.

    ``ax`` is (n, d), ``ay`` is (m, d); returns an (n, m) matrix.
    """
    ax = np.asarray(ax, dtype=float)
    ay = np.asarray(ay, dtype=float)
    if ax.shape[0] and ay.shape[0] and ax.shape[1] != ay.shape[1]:
        raise ValueError(
            f"attribute dimension mismatch: {ax.shape[1]} vs {ay.shape[1]}"
        )
    if ax.shape[0] == 0 or ay.shape[0] == 0:
        return np.zeros((ax.shape[0], ay.shape[0]))
    if spec.kind == "euclidean":
        diff = ax[:, None, :] - ay[None, :, :]
        return np.sqrt((diff * diff).sum(axis=2))
    equal = (ax[:, None, :] == ay[None, :, :]).all(axis=2)
    return np.where(equal, 0.0, float(spec.delta))
