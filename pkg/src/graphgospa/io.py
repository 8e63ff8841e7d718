"""Reading and writing graphs.

Two formats are supported:

* a single-graph JSON document::

      {"nodes": [[x11, x12, ...], ...], "edges": [[i, j], ...]}

  with 0-based node indices, unordered pair semantics ([0, 1] and
  [1, 0] name the same edge), no self-loops, no duplicates;

* the TUDataset plain-text layout for classification corpora:
  ``<name>_A.txt`` (1-based edge endpoints, both directions listed),
  ``<name>_graph_indicator.txt`` (graph id per node line) and the
  optional ``<name>_graph_labels.txt`` / ``<name>_node_attributes.txt``
  / ``<name>_node_labels.txt`` companions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .graphs import Graph, GraphError, make_graph

__all__ = [
    "Dataset",
    "DatasetError",
    "parse_graph_json",
    "write_graph_json",
    "load_graph",
    "parse_tudataset",
]


class DatasetError(ValueError):
    """Malformed dataset directory or file contents."""


@dataclass
class Dataset:
    """Graphs with integer class labels, one label per graph."""

    graphs: list[Graph]
    labels: list[int]
    name: str = ""

    def __post_init__(self):
        if len(self.graphs) != len(self.labels):
            raise DatasetError(
                f"{len(self.graphs)} graphs but {len(self.labels)} labels"
            )

    def __len__(self) -> int:
        return len(self.graphs)


def parse_graph_json(text: str) -> Graph:
    """Parse a graph from its JSON document.

    Raises GraphError for schema or invariant violations.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"malformed JSON: {exc}") from exc
    if not isinstance(doc, dict) or "nodes" not in doc or "edges" not in doc:
        raise GraphError('graph JSON must be an object with "nodes" and "edges"')
    nodes = doc["nodes"]
    edges = doc["edges"]
    if not isinstance(nodes, list) or not isinstance(edges, list):
        raise GraphError('"nodes" and "edges" must be arrays')
    for v in nodes:
        if not isinstance(v, list) or not all(isinstance(x, (int, float)) for x in v):
            raise GraphError("every node must be an array of numbers")
    if nodes and len({len(v) for v in nodes}) != 1:
        raise GraphError("node attribute vectors must share one dimension")
    for e in edges:
        if (
            not isinstance(e, list)
            or len(e) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)
        ):
            raise GraphError("every edge must be a 2-element array of integers")
    return make_graph(nodes, edges)


def write_graph_json(g: Graph) -> str:
    """Serialize a graph; round-trips exactly through parse_graph_json."""
    doc = {
        "nodes": [list(row) for row in g.attributes],
        "edges": [list(e) for e in g.edges],
    }
    return json.dumps(doc)


def load_graph(path) -> Graph:
    return parse_graph_json(Path(path).read_text(encoding="utf-8"))


def _read_numbers(path: Path, kind=float) -> list:
    """Read one line of comma/whitespace separated numbers per row."""
    rows = []
    for ln, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            rows.append([kind(tok) for tok in line.replace(",", " ").split()])
        except ValueError as exc:
            raise DatasetError(f"{path.name}:{ln}: {exc}") from exc
    return rows


def parse_tudataset(directory, dataset_name: str, use_node_labels: bool = False) -> Dataset:
    """Load a TUDataset-format directory.

    Node and graph ids in the files are 1-based and converted to 0-based.
    Every undirected edge must be listed in both directions and is kept
    once. Node attributes are used when present, unless
    ``use_node_labels`` forces the 1-D integer label codes instead.
    """
    directory = Path(directory)
    prefix = directory / dataset_name

    a_path = Path(f"{prefix}_A.txt")
    ind_path = Path(f"{prefix}_graph_indicator.txt")
    if not a_path.is_file():
        raise DatasetError(f"missing mandatory file {a_path}")
    if not ind_path.is_file():
        raise DatasetError(f"missing mandatory file {ind_path}")

    indicator = [int(r[0]) for r in _read_numbers(ind_path, int)]
    n_nodes = len(indicator)
    n_graphs = max(indicator) if indicator else 0
    if indicator and (min(indicator) < 1 or sorted(set(indicator)) != list(range(1, n_graphs + 1))):
        raise DatasetError("graph indicator ids must cover 1..n_graphs")

    # global node id (0-based) -> (graph id, local node index)
    node_graph = np.array(indicator, dtype=int) - 1
    local_index = np.zeros(n_nodes, dtype=int)
    counts = np.zeros(n_graphs, dtype=int)
    for v in range(n_nodes):
        g = node_graph[v]
        local_index[v] = counts[g]
        counts[g] += 1

    # edges: each direction listed once; collapse to unordered pairs
    directed: set[tuple[int, int]] = set()
    for ln, row in enumerate(_read_numbers(a_path, int), start=1):
        if len(row) != 2:
            raise DatasetError(f"{a_path.name}:{ln}: expected two endpoints")
        u, v = row[0] - 1, row[1] - 1
        if not (0 <= u < n_nodes and 0 <= v < n_nodes):
            raise DatasetError(f"{a_path.name}:{ln}: node id out of range")
        if node_graph[u] != node_graph[v]:
            raise DatasetError(f"{a_path.name}:{ln}: edge crosses graph boundary")
        if (u, v) in directed:
            raise DatasetError(f"{a_path.name}:{ln}: repeated directed edge ({u + 1}, {v + 1})")
        directed.add((u, v))
    for u, v in directed:
        if (v, u) not in directed:
            raise DatasetError(
                f"asymmetric edge list: ({u + 1}, {v + 1}) has no reverse entry"
            )
    edges_per_graph: list[set[tuple[int, int]]] = [set() for _ in range(n_graphs)]
    for u, v in directed:
        if u < v:
            g = node_graph[u]
            edges_per_graph[g].add((int(local_index[u]), int(local_index[v])))

    # node features: attributes file wins unless labels are forced
    attr_path = Path(f"{prefix}_node_attributes.txt")
    nlab_path = Path(f"{prefix}_node_labels.txt")
    if attr_path.is_file() and not use_node_labels:
        feats = _read_numbers(attr_path, float)
    elif nlab_path.is_file():
        feats = [[float(r[0])] for r in _read_numbers(nlab_path, int)]
    elif attr_path.is_file():
        feats = _read_numbers(attr_path, float)
    else:
        raise DatasetError(
            f"need {attr_path.name} or {nlab_path.name} for node features"
        )
    if len(feats) != n_nodes:
        raise DatasetError(
            f"{len(feats)} feature lines for {n_nodes} indicator lines"
        )

    glab_path = Path(f"{prefix}_graph_labels.txt")
    if glab_path.is_file():
        labels = [int(r[0]) for r in _read_numbers(glab_path, int)]
        if len(labels) != n_graphs:
            raise DatasetError(f"{len(labels)} graph labels for {n_graphs} graphs")
    else:
        labels = [0] * n_graphs

    graphs = []
    feat_rows: list[list[list[float]]] = [[] for _ in range(n_graphs)]
    for v in range(n_nodes):
        feat_rows[node_graph[v]].append(feats[v])
    for g in range(n_graphs):
        try:
            graphs.append(make_graph(feat_rows[g], sorted(edges_per_graph[g])))
        except GraphError as exc:
            raise DatasetError(f"graph {g + 1}: {exc}") from exc
    return Dataset(graphs=graphs, labels=labels, name=dataset_name)
