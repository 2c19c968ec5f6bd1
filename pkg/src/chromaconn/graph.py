"""Simple undirected graphs: construction, graph6 I/O, generators, connectivity.

Vertices are 0..n-1.  Edges are stored as a sorted tuple of (a, b) pairs with
a < b; the position of an edge in that tuple is its stable edge index, used by
colorings, cuts and certificates throughout the package.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

GRAPH6_HEADER = ">>graph6<<"

# edge/vertex sets are plain frozensets of indices
VertexSet = frozenset
EdgeSet = frozenset


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph with a canonical (sorted) edge list."""

    n: int
    edges: tuple = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        prev = None
        for e in self.edges:
            if len(e) != 2:
                raise ValueError(f"malformed edge {e!r}")
            a, b = e
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise ValueError(f"edge {e!r} out of range for n={self.n}")
            if a == b:
                raise ValueError(f"loop at vertex {a} not allowed")
            if a > b:
                raise ValueError(f"edge {e!r} not normalized; use build_graph")
            if prev is not None and e <= prev:
                raise ValueError("edges not sorted/deduplicated; use build_graph")
            prev = e
        # adjacency cache: adj[v] = tuple of (neighbor, edge index), neighbor-sorted
        adj = [[] for _ in range(self.n)]
        for i, (a, b) in enumerate(self.edges):
            adj[a].append((b, i))
            adj[b].append((a, i))
        object.__setattr__(self, "_adj", tuple(tuple(sorted(x)) for x in adj))
        object.__setattr__(self, "_eidx", {e: i for i, e in enumerate(self.edges)})

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self):
        """adjacency()[v] is a sorted tuple of (neighbor, edge_index)."""
        return self._adj

    def edge_index(self, a: int, b: int) -> int:
        """Index of edge {a, b}; raises KeyError if absent."""
        return self._eidx[(a, b) if a < b else (b, a)]

    def has_edge(self, a: int, b: int) -> bool:
        return ((a, b) if a < b else (b, a)) in self._eidx

    def degree(self, v: int) -> int:
        return len(self._adj[v])


def build_graph(n: int, edges: Iterable) -> Graph:
    """Construct a Graph from arbitrary (u, v) pairs, normalizing edge order.

    Rejects loops, duplicate edges and out-of-range endpoints.
    """
    normalized = []
    seen = set()
    for e in edges:
        u, v = e
        if u == v:
            raise ValueError(f"loop at vertex {u} not allowed")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ValueError(f"duplicate edge {key}")
        seen.add(key)
        normalized.append(key)
    return Graph(n, tuple(sorted(normalized)))


@dataclass(frozen=True)
class Path:
    """A simple path: vertex sequence plus the edge indices joining it.

    A single vertex with no edges is the zero-length path.
    """

    vertices: tuple
    edges: tuple = ()

    def __post_init__(self):
        if not self.vertices:
            raise ValueError("path needs at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("path revisits a vertex")
        if len(self.edges) != len(self.vertices) - 1:
            raise ValueError("edge count must be vertex count - 1")

    @classmethod
    def from_vertices(cls, graph: Graph, vertices: Sequence) -> "Path":
        vs = tuple(vertices)
        eidx = []
        for a, b in zip(vs, vs[1:]):
            try:
                eidx.append(graph.edge_index(a, b))
            except KeyError:
                raise ValueError(f"vertices {a},{b} not adjacent in graph")
        return cls(vs, tuple(eidx))

    @property
    def length(self) -> int:
        return len(self.edges)


# ---------------------------------------------------------------------------
# graph6

def _g6_bytes_for_n(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    raise ValueError("graph too large for this graph6 writer")


def write_graph6(graph: Graph) -> str:
    """Encode as a graph6 string (no header)."""
    n = graph.n
    out = [_g6_bytes_for_n(n)]
    present = set(graph.edges)
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if (i, j) in present else 0)
    for k in range(0, len(bits), 6):
        group = bits[k:k + 6]
        group += [0] * (6 - len(group))
        val = 0
        for b in group:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode a graph6 string; the optional '>>graph6<<' header is accepted."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise ValueError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(d < 0 or d > 63 for d in data):
        raise ValueError("graph6 byte out of range 63..126")
    if data[0] <= 62:
        n, pos = data[0], 1
    else:
        if len(data) >= 2 and data[1] == 63:
            raise ValueError("graph6 sizes beyond 258047 vertices unsupported")
        if len(data) < 4:
            raise ValueError("truncated graph6 size field")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != nbytes:
        raise ValueError(f"graph6 body has {len(body)} bytes, expected {nbytes}")
    bits = []
    for d in body:
        for s_ in (5, 4, 3, 2, 1, 0):
            bits.append((d >> s_) & 1)
    if any(bits[nbits:]):
        raise ValueError("nonzero padding bits in graph6 body")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, tuple(sorted(edges)))


def to_dot(graph: Graph) -> str:
    """DOT text for visualization; vertex ids as labels, no color attributes."""
    lines = ["graph G {"]
    for v in range(graph.n):
        lines.append(f"  {v};")
    for a, b in graph.edges:
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# connectivity

def bfs_distances(graph: Graph, source: int):
    """List of BFS distances from source; -1 for unreachable vertices."""
    dist = [-1] * graph.n
    dist[source] = 0
    q = deque([source])
    adj = graph.adjacency()
    while q:
        x = q.popleft()
        for y, _ in adj[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                q.append(y)
    return dist


def is_connected(graph: Graph) -> bool:
    if graph.n <= 1:
        return True
    return min(bfs_distances(graph, 0)) >= 0


def diameter(graph: Graph) -> int:
    """Greatest BFS distance over all pairs; errors on a disconnected graph."""
    if graph.n == 0:
        raise ValueError("diameter undefined for the empty graph")
    best = 0
    for v in range(graph.n):
        d = bfs_distances(graph, v)
        if min(d) < 0:
            raise ValueError("diameter requires a connected graph")
        best = max(best, max(d))
    return best


# ---------------------------------------------------------------------------
# disjoint paths (unit-capacity max flow)

def _max_flow_unit(num_nodes: int, arcs, s: int, t: int):
    """Edmonds-Karp on unit/small integer capacities.

    arcs: dict (a, b) -> capacity.  Returns (value, flow dict).
    """
    cap = dict(arcs)
    out = {}
    for (a, b) in cap:
        out.setdefault(a, set()).add(b)
        out.setdefault(b, set()).add(a)  # residual arcs
    nbr = {x: sorted(ys) for x, ys in out.items()}
    flow = {}
    value = 0
    while True:
        parent = {s: None}
        q = deque([s])
        while q and t not in parent:
            x = q.popleft()
            for y in nbr.get(x, ()):
                if y not in parent and cap.get((x, y), 0) > 0:
                    parent[y] = x
                    q.append(y)
        if t not in parent:
            return value, flow
        y = t
        while parent[y] is not None:
            x = parent[y]
            cap[(x, y)] = cap.get((x, y), 0) - 1
            cap[(y, x)] = cap.get((y, x), 0) + 1
            flow[(x, y)] = flow.get((x, y), 0) + 1
            y = x
        value += 1


def _decompose_unit_paths(value: int, used, s: int, t: int):
    """Split a set of unit-flow arcs into `value` arc-disjoint s-t node walks,
    dropping flow cycles, and return them as vertex sequences."""
    succ = {}
    for (a, b) in sorted(used):
        succ.setdefault(a, deque()).append(b)
    paths = []
    for _ in range(value):
        walk = [s]
        pos = {s: 0}
        x = s
        while x != t:
            y = succ[x].popleft()
            if y in pos:
                # flow cycle: drop the loop just traversed
                walk = walk[: pos[y] + 1]
                pos = {v: i for i, v in enumerate(walk)}
                x = y
                continue
            walk.append(y)
            pos[y] = len(walk) - 1
            x = y
        paths.append(tuple(walk))
    return paths


def max_disjoint_paths(graph: Graph, u: int, v: int, mode: str = "edge"):
    """Maximum number of pairwise edge-disjoint (mode='edge') or internally
    vertex-disjoint (mode='vertex') u-v paths, with one witnessing family.

    Returns (count, tuple_of_Paths).  Equals the minimum u-v cut size of the
    corresponding kind (max-flow/min-cut).
    """
    if mode not in ("edge", "vertex"):
        raise ValueError(f"unknown mode {mode!r}")
    if not (0 <= u < graph.n and 0 <= v < graph.n):
        raise ValueError("endpoint out of range")
    if u == v:
        raise ValueError("endpoints must differ")
    if mode == "edge":
        arcs = {}
        for (a, b) in graph.edges:
            arcs[(a, b)] = 1
            arcs[(b, a)] = 1
        value, flow = _max_flow_unit(graph.n, arcs, u, v)
        used = set()
        for (a, b) in graph.edges:
            net = flow.get((a, b), 0) - flow.get((b, a), 0)
            if net > 0:
                used.add((a, b))
            elif net < 0:
                used.add((b, a))
        walks = _decompose_unit_paths(value, used, u, v)
    else:
        # split every internal vertex w into in-node 2w and out-node 2w+1
        def node_in(w):
            return 2 * w

        def node_out(w):
            return 2 * w + 1

        arcs = {}
        for w in range(graph.n):
            arcs[(node_in(w), node_out(w))] = 1 if w not in (u, v) else graph.n
        for (a, b) in graph.edges:
            arcs[(node_out(a), node_in(b))] = 1
            arcs[(node_out(b), node_in(a))] = 1
        value, flow = _max_flow_unit(2 * graph.n, arcs, node_out(u), node_in(v))
        used = set()
        for (a, b), f in flow.items():
            back = flow.get((b, a), 0)
            if f - back > 0:
                used.add((a, b))
        walks = _decompose_unit_paths(value, used, node_out(u), node_in(v))
        # a split walk reads out(u), in(x1), out(x1), ..., in(v); the even
        # positions give u and the internal vertices, and v is re-appended
        walks = [tuple(x // 2 for x in w[0::2]) + (v,) for w in walks]
    paths = tuple(
        sorted((Path.from_vertices(graph, w) for w in walks),
               key=lambda p: p.vertices)
    )
    return value, paths


# ---------------------------------------------------------------------------
# cuts

def crossing_cut(graph: Graph, side: Iterable) -> frozenset:
    """Edge indices with exactly one endpoint in `side`.

    `side` must be a nonempty proper subset of the vertices.
    """
    s = set(side)
    if not s or not s.issubset(range(graph.n)) or len(s) == graph.n:
        raise ValueError("side must be a nonempty proper vertex subset")
    return frozenset(
        i for i, (a, b) in enumerate(graph.edges) if (a in s) != (b in s)
    )


def uv_bipartitions(graph: Graph, u: int, v: int):
    """Yield (side, cut) for every vertex set with u inside and v outside.

    side is a sorted vertex tuple containing u; cut is the sorted tuple of
    crossing edge indices.  2^(n-2) bipartitions are produced.
    """
    if u == v or not (0 <= u < graph.n and 0 <= v < graph.n):
        raise ValueError("invalid endpoint pair")
    others = [w for w in range(graph.n) if w != u and w != v]
    for mask in range(1 << len(others)):
        side = {u}
        for i, w in enumerate(others):
            if (mask >> i) & 1:
                side.add(w)
        cut = tuple(
            i for i, (a, b) in enumerate(graph.edges) if (a in side) != (b in side)
        )
        yield tuple(sorted(side)), cut


def enumerate_uv_cuts(graph: Graph, u: int, v: int) -> Iterator:
    """Crossing cuts of every bipartition separating u from v, as frozensets.

    Every yielded set is a u-v edge cut, and every u-v edge cut contains at
    least one yielded set (take the crossing cut of u's component after
    removal), so minimizing cardinality over this stream gives the minimum
    u-v cut size.
    """
    for _, cut in uv_bipartitions(graph, u, v):
        yield frozenset(cut)


# ---------------------------------------------------------------------------
# derived graphs

def line_graph(graph: Graph) -> Graph:
    """Vertices are edge indices of the input; adjacency is sharing an endpoint."""
    m = graph.m
    edges = []
    for i in range(m):
        a, b = graph.edges[i]
        for j in range(i + 1, m):
            c, d = graph.edges[j]
            if a == c or a == d or b == c or b == d:
                edges.append((i, j))
    return Graph(m, tuple(edges))


def delete_edge(graph: Graph, edge) -> Graph:
    """Remove one edge (given as an index or endpoint pair); vertex set is kept."""
    i = edge if isinstance(edge, int) else graph.edge_index(*edge)
    if not (0 <= i < graph.m):
        raise ValueError(f"edge index {i} out of range")
    return Graph(graph.n, graph.edges[:i] + graph.edges[i + 1:])


def contract_edge(graph: Graph, edge) -> Graph:
    """Merge the endpoints of one edge, drop loops/parallels, renumber.

    The higher endpoint is folded into the lower one and vertices above it
    shift down, so the result is canonical.
    """
    i = edge if isinstance(edge, int) else graph.edge_index(*edge)
    if not (0 <= i < graph.m):
        raise ValueError(f"edge index {i} out of range")
    a, b = graph.edges[i]

    def relabel(w):
        if w == b:
            w = a
        return w - 1 if w > b else w

    edges = set()
    for j, (x, y) in enumerate(graph.edges):
        if j == i:
            continue
        p, q = relabel(x), relabel(y)
        if p != q:
            edges.add((p, q) if p < q else (q, p))
    return Graph(graph.n - 1, tuple(sorted(edges)))


# ---------------------------------------------------------------------------
# canonical form (exhaustive, for small n)

def _mask_of(n: int, edges) -> int:
    mask = 0
    for (a, b) in edges:
        mask |= 1 << (a * n - a * (a + 1) // 2 + (b - a - 1))
    return mask


def _graph_from_mask(n: int, mask: int) -> Graph:
    edges = []
    k = 0
    for a in range(n):
        for b in range(a + 1, n):
            if (mask >> k) & 1:
                edges.append((a, b))
            k += 1
    return Graph(n, tuple(edges))


def canonical_form(graph: Graph):
    """(n, adjacency bitmask) minimized over vertex relabelings.

    Two graphs are isomorphic iff their canonical forms are equal.  The search
    runs over all relabelings that sort degrees in nonincreasing order, which
    is exhaustive within each degree class; cost grows with the factorials of
    the degree-multiplicity counts, fine for n <= 7 or so.
    """
    n = graph.n
    if n == 0:
        return (0, 0)
    by_degree = {}
    for v in range(n):
        by_degree.setdefault(graph.degree(v), []).append(v)
    classes = [by_degree[d] for d in sorted(by_degree, reverse=True)]
    best = None
    for arrangement in itertools.product(*(itertools.permutations(c) for c in classes)):
        order = [v for cls in arrangement for v in cls]
        new = [0] * n
        for pos, v in enumerate(order):
            new[v] = pos
        mask = 0
        for (a, b) in graph.edges:
            p, q = new[a], new[b]
            if p > q:
                p, q = q, p
            mask |= 1 << (p * n - p * (p + 1) // 2 + (q - p - 1))
        if best is None or mask < best:
            best = mask
    return (n, best)


# ---------------------------------------------------------------------------
# generators

def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph(n, tuple(itertools.combinations(range(n), 2)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("complete bipartite graph needs both sides >= 1")
    return Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def star_graph(leaves: int) -> Graph:
    """Star with one center (vertex `leaves`) and `leaves` leaves."""
    if leaves < 1:
        raise ValueError("star needs at least one leaf")
    return complete_bipartite_graph(leaves, 1)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def connected_graphs_up_to(max_n: int) -> Iterator[Graph]:
    """Every connected graph with 1..max_n vertices, once per isomorphism class.

    Builds level k from level k-1 by attaching one new vertex with every
    nonempty neighborhood, deduplicating by canonical_form.  Every connected
    graph arises this way (remove a non-cut vertex, e.g. a leaf of a spanning
    tree).  Feasible up to max_n = 7.
    """
    if not (1 <= max_n <= 7):
        raise ValueError("supported range is 1 <= n <= 7")
    level = {canonical_form(Graph(1)): Graph(1)}
    for g in sorted(level.values(), key=lambda g: g.edges):
        yield g
    for k in range(2, max_n + 1):
        nxt = {}
        for g in level.values():
            base = list(g.edges)
            for nb_mask in range(1, 1 << (k - 1)):
                extra = [
                    (w, k - 1) for w in range(k - 1) if (nb_mask >> w) & 1
                ]
                h = Graph(k, tuple(sorted(base + extra)))
                key = canonical_form(h)
                if key not in nxt:
                    nxt[key] = _graph_from_mask(k, key[1])
        level = nxt
        for key in sorted(nxt):
            yield nxt[key]


_FAMILIES = {
    "path": (1, path_graph),
    "cycle": (1, cycle_graph),
    "complete": (1, complete_graph),
    "complete_bipartite": (2, complete_bipartite_graph),
    "star": (1, star_graph),
    "petersen": (0, petersen_graph),
    "all_connected_up_to": (1, connected_graphs_up_to),
}


def generate(family: str, params: Sequence = ()):
    """Build a named family member; all_connected_up_to returns an iterator."""
    if family not in _FAMILIES:
        raise ValueError(
            f"unknown family {family!r}; choose from {sorted(_FAMILIES)}"
        )
    arity, fn = _FAMILIES[family]
    params = tuple(params)
    if len(params) != arity:
        raise ValueError(f"family {family!r} takes {arity} parameter(s)")
    return fn(*params)
