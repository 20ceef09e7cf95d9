"""Finite simple graphs, total labelings, and total-graph construction.

A graph lives on the vertex set {1, ..., m} with edges stored as sorted
pairs in lexicographic order.  A total labeling assigns the labels
{1, ..., N}, N = m + |E|, bijectively to the vertices and edges; the total
graph is the graph on those N labels in which two labels are adjacent
exactly when the underlying objects are adjacent vertices, adjacent edges,
or an incident vertex/edge pair.

All values are immutable after construction and safe to share.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations


@dataclass(frozen=True)
class Graph:
    """A finite simple graph on vertices 1..m with canonically sorted edges."""

    m: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, m: int, edges=()):
        if m < 1:
            raise ValueError(f"vertex count must be positive, got {m}")
        seen = set()
        canon = []
        for pair in edges:
            u, v = pair
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed")
            if not (1 <= u <= m and 1 <= v <= m):
                raise ValueError(f"edge {pair} out of range 1..{m}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            canon.append(e)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def neighbors(self, v: int) -> set[int]:
        return {u + w - v for u, w in self.edges if v in (u, w)}

    def isolated_vertices(self) -> tuple[int, ...]:
        touched = {v for e in self.edges for v in e}
        return tuple(v for v in range(1, self.m + 1) if v not in touched)


#: A total graph is an ordinary graph whose vertices are the labels 1..N.
TotalGraph = Graph


@dataclass(frozen=True)
class TotalLabeling:
    """Bijection from the vertices and (canonically ordered) edges of a graph
    onto {1, ..., N}.

    ``vertex_labels[i-1]`` is the label of vertex i; ``edge_labels[k-1]`` is
    the label of the k-th edge in the graph's canonical edge order.
    """

    vertex_labels: tuple[int, ...]
    edge_labels: tuple[int, ...]

    def __post_init__(self):
        labels = tuple(self.vertex_labels) + tuple(self.edge_labels)
        n = len(labels)
        if set(labels) != set(range(1, n + 1)):
            raise ValueError(f"labels must be a bijection onto 1..{n}, got {labels}")
        object.__setattr__(self, "vertex_labels", tuple(self.vertex_labels))
        object.__setattr__(self, "edge_labels", tuple(self.edge_labels))

    @property
    def label_count(self) -> int:
        return len(self.vertex_labels) + len(self.edge_labels)

    def vertex_label(self, i: int) -> int:
        return self.vertex_labels[i - 1]

    def edge_label(self, k: int) -> int:
        """Label of the k-th canonical edge (1-based)."""
        return self.edge_labels[k - 1]

    def matches(self, g: Graph) -> bool:
        return len(self.vertex_labels) == g.m and len(self.edge_labels) == g.edge_count


def graph_from_edge_list(m: int, pairs) -> Graph:
    """Build a canonical Graph from a vertex count and unordered edge pairs.

    Rejects loops, duplicate pairs and out-of-range endpoints.
    """
    return Graph(m, [tuple(p) for p in pairs])


def default_labeling(g: Graph) -> TotalLabeling:
    """Vertex i keeps label i; the k-th canonical edge gets label m + k."""
    return TotalLabeling(
        vertex_labels=tuple(range(1, g.m + 1)),
        edge_labels=tuple(range(g.m + 1, g.m + g.edge_count + 1)),
    )


def gen_friendship(n: int) -> tuple[Graph, TotalLabeling]:
    """Friendship graph with n triangles glued at one center vertex.

    The graph has 2n+1 vertices and 3n edges.  Labels run 1..5n+1: for the
    k-th triangle the outer vertices get 3k-2 and 3k, the outer edge 3k-1,
    the two center edges 3n+2k-1 and 3n+2k; the center vertex gets 5n+1.
    """
    if n < 1:
        raise ValueError(f"friendship graph needs n >= 1 triangles, got {n}")
    center = 2 * n + 1
    edges = []
    label_of_edge = {}
    vertex_labels = [0] * center
    for k in range(1, n + 1):
        a, b = 2 * k - 1, 2 * k
        vertex_labels[a - 1] = 3 * k - 2
        vertex_labels[b - 1] = 3 * k
        edges += [(a, b), (a, center), (b, center)]
        label_of_edge[(a, b)] = 3 * k - 1
        label_of_edge[(a, center)] = 3 * n + 2 * k - 1
        label_of_edge[(b, center)] = 3 * n + 2 * k
    vertex_labels[center - 1] = 5 * n + 1
    g = Graph(center, edges)
    labeling = TotalLabeling(
        vertex_labels=tuple(vertex_labels),
        edge_labels=tuple(label_of_edge[e] for e in g.edges),
    )
    return g, labeling


def gen_c42() -> tuple[Graph, TotalLabeling]:
    """The graph made of two 4-cycles sharing a common path of length two.

    Vertices a,b,c,d,e are numbered 1..5; the cycles are a-b-c-d-a and
    a-b-c-e-a.  Labels alternate vertex/edge along the first cycle
    (a=1, ab=2, b=3, bc=4, c=5, cd=6, d=7, da=8) and continue ea=9, e=10,
    ce=11.
    """
    g = Graph(5, [(1, 2), (2, 3), (3, 4), (1, 4), (1, 5), (3, 5)])
    label_of_edge = {
        (1, 2): 2,   # ab
        (2, 3): 4,   # bc
        (3, 4): 6,   # cd
        (1, 4): 8,   # da
        (1, 5): 9,   # ea
        (3, 5): 11,  # ce
    }
    labeling = TotalLabeling(
        vertex_labels=(1, 3, 5, 7, 10),
        edge_labels=tuple(label_of_edge[e] for e in g.edges),
    )
    return g, labeling


def total_graph(g: Graph, labeling: TotalLabeling) -> TotalGraph:
    """Total graph on the labels 1..N.

    Two labels are adjacent iff the labeled objects are adjacent vertices of
    g, edges of g sharing an endpoint, or an incident vertex/edge pair.
    """
    if not labeling.matches(g):
        raise ValueError(
            f"labeling has {len(labeling.vertex_labels)} vertex and "
            f"{len(labeling.edge_labels)} edge labels; graph has {g.m} and {g.edge_count}"
        )
    n_labels = labeling.label_count
    t_edges = set()
    for k, (u, v) in enumerate(g.edges, start=1):
        lu, lv, le = labeling.vertex_label(u), labeling.vertex_label(v), labeling.edge_label(k)
        t_edges.add(tuple(sorted((lu, lv))))   # adjacent vertices
        t_edges.add(tuple(sorted((lu, le))))   # incidences
        t_edges.add(tuple(sorted((lv, le))))
    for (j, e), (k, f) in combinations(enumerate(g.edges, start=1), 2):
        if set(e) & set(f):                    # edges sharing an endpoint
            t_edges.add(tuple(sorted((labeling.edge_label(j), labeling.edge_label(k)))))
    return Graph(n_labels, sorted(t_edges))


def is_connected(g: Graph) -> bool:
    reached = {1}
    frontier = [1]
    adjacency = {v: g.neighbors(v) for v in range(1, g.m + 1)}
    while frontier:
        v = frontier.pop()
        for u in adjacency[v]:
            if u not in reached:
                reached.add(u)
                frontier.append(u)
    return len(reached) == g.m


# --- JSON interchange ------------------------------------------------------
#
# {"m": int, "edges": [[u, v], ...],
#  "labels": {"v<i>": label, "e<k>": label}}   (labels optional)


def graph_to_json_dict(g: Graph, labeling: TotalLabeling | None = None) -> dict:
    if labeling is None:
        labeling = default_labeling(g)
    if not labeling.matches(g):
        raise ValueError("labeling does not match graph")
    labels = {f"v{i}": labeling.vertex_label(i) for i in range(1, g.m + 1)}
    labels.update({f"e{k}": labeling.edge_label(k) for k in range(1, g.edge_count + 1)})
    return {"m": g.m, "edges": [list(e) for e in g.edges], "labels": labels}


def graph_from_json_dict(data: dict) -> tuple[Graph, TotalLabeling]:
    try:
        g = graph_from_edge_list(int(data["m"]), data["edges"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed graph JSON: {exc}") from exc
    labels = data.get("labels")
    if labels is None:
        return g, default_labeling(g)
    try:
        labeling = TotalLabeling(
            vertex_labels=tuple(int(labels[f"v{i}"]) for i in range(1, g.m + 1)),
            edge_labels=tuple(int(labels[f"e{k}"]) for k in range(1, g.edge_count + 1)),
        )
    except KeyError as exc:
        raise ValueError(f"graph JSON labels incomplete: missing {exc}") from exc
    return g, labeling


def graph_dumps(g: Graph, labeling: TotalLabeling | None = None) -> str:
    """Canonical (byte-stable) JSON text for a labeled graph."""
    return json.dumps(graph_to_json_dict(g, labeling), sort_keys=True, separators=(",", ":")) + "\n"


def graph_loads(text: str) -> tuple[Graph, TotalLabeling]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from exc
    return graph_from_json_dict(data)
