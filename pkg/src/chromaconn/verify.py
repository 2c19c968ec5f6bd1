"""Coloring verifiers and machine-checkable certificates.

A certificate carries one witness per unordered vertex pair: a pattern path
(connection), k pairwise disjoint pattern paths (k_connection), or the u-side
of a bipartition whose crossing cut fits the pattern (disconnection).
verify_certificate revalidates everything in polynomial time and returns
False, never raising, on malformed input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .coloring import EdgeColoring, Pattern, PathSearch, _seq_satisfies
from .graph import Graph, bfs_distances, max_disjoint_paths, uv_bipartitions
from .local import is_proper_edge_coloring

PROPER_RAINBOW = "proper_rainbow"

CUT_PATTERNS = (Pattern.RAINBOW, Pattern.PROPER, Pattern.MONOCHROMATIC)


@dataclass(frozen=True)
class PairWitness:
    u: int
    v: int
    paths: Optional[tuple] = None  # tuple of vertex tuples
    side: Optional[tuple] = None   # sorted vertex tuple containing u


@dataclass(frozen=True)
class Certificate:
    kind: str                      # connection | k_connection | disconnection
    pattern: str                   # pattern name, or proper_rainbow
    pairs: tuple
    k: Optional[int] = None        # k_connection only
    mode: Optional[str] = None     # k_connection only


def certificate_to_dict(cert: Certificate) -> dict:
    """JSON-ready dict with stable field order."""
    out = {"kind": cert.kind, "pattern": cert.pattern}
    if cert.kind == "k_connection":
        out["k"] = cert.k
        out["mode"] = cert.mode
    pairs = []
    for w in cert.pairs:
        entry = {"u": w.u, "v": w.v}
        if w.side is not None:
            entry["side"] = list(w.side)
        else:
            entry["paths"] = [list(p) for p in (w.paths or ())]
        pairs.append(entry)
    out["pairs"] = pairs
    return out


def certificate_from_dict(data: dict) -> Certificate:
    """Parse the JSON layout; raises ValueError on structural problems."""
    if not isinstance(data, dict):
        raise ValueError("certificate must be an object")
    kind = data.get("kind")
    pattern = data.get("pattern")
    if kind not in ("connection", "k_connection", "disconnection"):
        raise ValueError(f"unknown certificate kind {kind!r}")
    known = {p.value for p in Pattern} | {PROPER_RAINBOW}
    if pattern not in known:
        raise ValueError(f"unknown certificate pattern {pattern!r}")
    pairs = []
    raw = data.get("pairs")
    if not isinstance(raw, list):
        raise ValueError("certificate pairs must be a list")
    for entry in raw:
        if not isinstance(entry, dict):
            raise ValueError("pair witness must be an object")
        u, v = entry.get("u"), entry.get("v")
        if not isinstance(u, int) or not isinstance(v, int):
            raise ValueError("pair endpoints must be integers")
        if "side" in entry:
            side = entry["side"]
            if not isinstance(side, list) or not all(isinstance(x, int) for x in side):
                raise ValueError("side must be a list of integers")
            pairs.append(PairWitness(u, v, side=tuple(side)))
        else:
            paths = entry.get("paths")
            if not isinstance(paths, list):
                raise ValueError("paths must be a list")
            parsed = []
            for p in paths:
                if not isinstance(p, list) or not all(isinstance(x, int) for x in p):
                    raise ValueError("each path must be a list of integers")
                parsed.append(tuple(p))
            pairs.append(PairWitness(u, v, paths=tuple(parsed)))
    k = data.get("k")
    mode = data.get("mode")
    if kind == "k_connection":
        if not isinstance(k, int):
            raise ValueError("k_connection certificate needs integer k")
        if mode not in ("edge", "vertex"):
            raise ValueError("k_connection certificate needs mode edge|vertex")
    elif k is not None or mode is not None:
        raise ValueError("k and mode apply only to k_connection certificates")
    return Certificate(kind, pattern, tuple(pairs), k=k, mode=mode)


# ---------------------------------------------------------------------------
# reusable per-graph checkers (shared by public verifiers and the solvers)

def _all_pairs(n: int):
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


class ConnCheck:
    """Pattern-connectivity tests for one graph across many colorings."""

    def __init__(self, graph: Graph):
        self.graph = graph
        self.search = PathSearch(graph)
        dist = {}
        for u in range(graph.n):
            d = bfs_distances(graph, u)
            for v in range(u + 1, graph.n):
                dist[(u, v)] = d[v]
        self.pairs = _all_pairs(graph.n)
        # single-edge paths satisfy every pattern, so only nonadjacent pairs
        # can fail; test the most distant first to fail fast
        self.nonadjacent = sorted(
            (p for p in self.pairs if not graph.has_edge(*p)),
            key=lambda p: (-dist[p], p),
        )

    def connected(self, colors: Sequence, pattern: Pattern) -> bool:
        exists = self.search.exists
        for u, v in self.nonadjacent:
            if not exists(colors, u, v, pattern):
                return False
        return True

    def witnesses(self, colors: Sequence, pattern: Pattern):
        out = []
        for u, v in self.pairs:
            p = self.search.find(colors, u, v, pattern)
            if p is None:
                return None
            out.append(PairWitness(u, v, paths=(p.vertices,)))
        return tuple(out)


class KConnCheck:
    """k-disjoint pattern-path tests (edge- or internally-vertex-disjoint)."""

    def __init__(self, graph: Graph, k: int, mode: str):
        if mode not in ("edge", "vertex"):
            raise ValueError(f"unknown mode {mode!r}")
        if k < 1:
            raise ValueError("k must be >= 1")
        self.graph = graph
        self.k = k
        self.mode = mode
        self.search = PathSearch(graph)
        self.pairs = _all_pairs(graph.n)

    def _family(self, colors: Sequence, u: int, v: int, pattern: Pattern):
        """k pairwise disjoint pattern paths, or None."""
        cand = self.search.all_pattern_paths(colors, u, v, pattern)
        if len(cand) < self.k:
            return None
        cand.sort(key=lambda p: (p.length, p.vertices))
        if self.mode == "edge":
            masks = [sum(1 << e for e in p.edges) for p in cand]
        else:
            masks = [sum(1 << w for w in p.vertices[1:-1]) for p in cand]
        chosen = []

        def pick(start: int, used: int) -> bool:
            if len(chosen) == self.k:
                return True
            if len(cand) - start < self.k - len(chosen):
                return False
            for i in range(start, len(cand)):
                if masks[i] & used:
                    continue
                chosen.append(i)
                if pick(i + 1, used | masks[i]):
                    return True
                chosen.pop()
            return False

        if not pick(0, 0):
            return None
        return tuple(cand[i] for i in chosen)

    def connected(self, colors: Sequence, pattern: Pattern) -> bool:
        for u, v in self.pairs:
            if self._family(colors, u, v, pattern) is None:
                return False
        return True

    def witnesses(self, colors: Sequence, pattern: Pattern):
        out = []
        for u, v in self.pairs:
            fam = self._family(colors, u, v, pattern)
            if fam is None:
                return None
            out.append(
                PairWitness(u, v, paths=tuple(p.vertices for p in fam))
            )
        return tuple(out)


def _cut_adjacent_pairs(graph: Graph, cut):
    pairs = []
    for i in range(len(cut)):
        a, b = graph.edges[cut[i]]
        for j in range(i + 1, len(cut)):
            c, d = graph.edges[cut[j]]
            if a == c or a == d or b == c or b == d:
                pairs.append((cut[i], cut[j]))
    return tuple(pairs)


def _cut_ok(colors, cut, adjacent, pattern: Pattern) -> bool:
    if pattern is Pattern.RAINBOW:
        seen = set()
        for e in cut:
            c = colors[e]
            if c in seen:
                return False
            seen.add(c)
        return True
    if pattern is Pattern.MONOCHROMATIC:
        first = colors[cut[0]]
        return all(colors[e] == first for e in cut)
    if pattern is Pattern.PROPER:
        return all(colors[e] != colors[f] for e, f in adjacent)
    raise ValueError(f"pattern {pattern.value} has no cut form")


class DisconnCheck:
    """Pattern-cut separability tests for one graph across many colorings.

    For each pair only bipartition crossing cuts are scanned.  That is
    complete: any separating edge set contains the crossing cut of the
    u-component after removal, and rainbow/proper/monochromatic are all
    preserved by passing to subsets.
    """

    def __init__(self, graph: Graph):
        self.graph = graph
        self.pairs = _all_pairs(graph.n)
        self.cuts = {}
        for u, v in self.pairs:
            entries = []
            seen = set()
            for side, cut in uv_bipartitions(graph, u, v):
                if cut in seen:
                    continue
                seen.add(cut)
                entries.append((side, cut, _cut_adjacent_pairs(graph, cut)))
            # small cuts are cheapest to test and most likely to fit a pattern
            entries.sort(key=lambda t: (len(t[1]), t[1]))
            self.cuts[(u, v)] = entries

    def _pair_side(self, colors, u, v, pattern: Pattern):
        for side, cut, adjacent in self.cuts[(u, v)]:
            if not cut:
                continue  # disconnected bipartition cannot happen (connected pre)
            if _cut_ok(colors, cut, adjacent, pattern):
                return side
        return None

    def disconnected(self, colors: Sequence, pattern: Pattern) -> bool:
        for u, v in self.pairs:
            if self._pair_side(colors, u, v, pattern) is None:
                return False
        return True

    def witnesses(self, colors: Sequence, pattern: Pattern):
        out = []
        for u, v in self.pairs:
            side = self._pair_side(colors, u, v, pattern)
            if side is None:
                return None
            out.append(PairWitness(u, v, side=side))
        return tuple(out)


# ---------------------------------------------------------------------------
# public verifiers

def _require_connected(graph: Graph):
    from .graph import is_connected

    if not is_connected(graph):
        raise ValueError("requires a connected graph")


def _check_coloring(graph: Graph, coloring: EdgeColoring):
    if len(coloring.colors) != graph.m:
        raise ValueError("coloring length differs from edge count")


def is_pattern_connected(graph: Graph, coloring: EdgeColoring,
                         pattern: Pattern) -> Optional[Certificate]:
    """Certificate with one pattern path per pair, or None if some pair has none."""
    _require_connected(graph)
    _check_coloring(graph, coloring)
    wit = ConnCheck(graph).witnesses(coloring.colors, pattern)
    if wit is None:
        return None
    return Certificate("connection", pattern.value, wit)


def is_pattern_k_connected(graph: Graph, coloring: EdgeColoring,
                           pattern: Pattern, k: int,
                           mode: str = "edge") -> Optional[Certificate]:
    """Certificate with k disjoint pattern paths per pair, or None.

    Requires the graph to support k disjoint paths between every pair
    (checked with max_disjoint_paths).  With k=1 the answer coincides with
    is_pattern_connected.
    """
    _require_connected(graph)
    _check_coloring(graph, coloring)
    checker = KConnCheck(graph, k, mode)
    for u, v in checker.pairs:
        have = max_disjoint_paths(graph, u, v, mode)[0]
        if have < k:
            raise ValueError(
                f"graph is not {k}-{mode}-connected: pair ({u},{v}) "
                f"supports only {have} disjoint paths"
            )
    wit = checker.witnesses(coloring.colors, pattern)
    if wit is None:
        return None
    return Certificate("k_connection", pattern.value, wit, k=k, mode=mode)


def is_pattern_disconnected(graph: Graph, coloring: EdgeColoring,
                            pattern: Pattern) -> Optional[Certificate]:
    """Certificate with one pattern-cut side per pair, or None.

    Defined for rainbow, proper and monochromatic cut patterns; a cut is
    proper when no two of its edges sharing an endpoint get equal colors.
    """
    if pattern not in CUT_PATTERNS:
        raise ValueError(f"pattern {pattern.value} has no disconnection variant")
    _require_connected(graph)
    _check_coloring(graph, coloring)
    wit = DisconnCheck(graph).witnesses(coloring.colors, pattern)
    if wit is None:
        return None
    return Certificate("disconnection", pattern.value, wit)


def is_proper_rainbow_connected(graph: Graph,
                                coloring: EdgeColoring) -> Optional[Certificate]:
    """Proper edge coloring that also rainbow-connects every pair."""
    _require_connected(graph)
    _check_coloring(graph, coloring)
    if not is_proper_edge_coloring(graph, coloring):
        return None
    wit = ConnCheck(graph).witnesses(coloring.colors, Pattern.RAINBOW)
    if wit is None:
        return None
    return Certificate("connection", PROPER_RAINBOW, wit)


# ---------------------------------------------------------------------------
# certificate validation

def _paths_pattern(cert_pattern: str) -> Pattern:
    if cert_pattern == PROPER_RAINBOW:
        return Pattern.RAINBOW
    return Pattern.from_name(cert_pattern)


def _valid_path(graph: Graph, colors, u, v, vs, pattern: Pattern) -> bool:
    if not vs or vs[0] != u or vs[-1] != v:
        return False
    if len(set(vs)) != len(vs):
        return False
    if any(not isinstance(x, int) or not (0 <= x < graph.n) for x in vs):
        return False
    eidx = []
    for a, b in zip(vs, vs[1:]):
        if not graph.has_edge(a, b):
            return False
        eidx.append(graph.edge_index(a, b))
    return _seq_satisfies([colors[e] for e in eidx], pattern)


def verify_certificate(graph: Graph, coloring: EdgeColoring,
                       cert: Certificate) -> bool:
    """Recheck a certificate against graph and coloring in polynomial time.

    True only if every pair of distinct vertices is covered exactly once and
    every witness is structurally valid and satisfies its pattern; malformed
    certificates yield False.
    """
    try:
        return _verify(graph, coloring, cert)
    except Exception:
        return False


def _verify(graph: Graph, coloring: EdgeColoring, cert: Certificate) -> bool:
    if len(coloring.colors) != graph.m:
        return False
    if cert.kind not in ("connection", "k_connection", "disconnection"):
        return False
    colors = coloring.colors
    covered = set()
    for w in cert.pairs:
        if not (0 <= w.u < graph.n and 0 <= w.v < graph.n) or w.u == w.v:
            return False
        key = (w.u, w.v) if w.u < w.v else (w.v, w.u)
        if key in covered:
            return False
        covered.add(key)
    if covered != set(_all_pairs(graph.n)):
        return False

    if cert.kind == "disconnection":
        try:
            pattern = Pattern.from_name(cert.pattern)
        except ValueError:
            return False
        if pattern not in CUT_PATTERNS:
            return False
        for w in cert.pairs:
            if w.side is None or w.paths is not None:
                return False
            side = set(w.side)
            if not side or not all(
                isinstance(x, int) and 0 <= x < graph.n for x in side
            ):
                return False
            if w.u not in side or w.v in side:
                return False
            cut = tuple(
                i for i, (a, b) in enumerate(graph.edges)
                if (a in side) != (b in side)
            )
            if not cut:
                return False
            if not _cut_ok(colors, cut, _cut_adjacent_pairs(graph, cut), pattern):
                return False
        return True

    # path kinds
    if cert.pattern == PROPER_RAINBOW:
        if cert.kind != "connection":
            return False
        if not is_proper_edge_coloring(graph, coloring):
            return False
        pattern = Pattern.RAINBOW
    else:
        try:
            pattern = Pattern.from_name(cert.pattern)
        except ValueError:
            return False

    if cert.kind == "connection":
        want = 1
        mode = None
    else:
        if not isinstance(cert.k, int) or cert.k < 1:
            return False
        if cert.mode not in ("edge", "vertex"):
            return False
        want = cert.k
        mode = cert.mode

    for w in cert.pairs:
        if w.paths is None or w.side is not None:
            return False
        if len(w.paths) != want:
            return False
        if len(set(w.paths)) != len(w.paths):
            return False
        for vs in w.paths:
            if not _valid_path(graph, colors, w.u, w.v, vs, pattern):
                return False
        if want > 1:
            if mode == "edge":
                claims = [
                    frozenset(
                        graph.edge_index(a, b) for a, b in zip(vs, vs[1:])
                    )
                    for vs in w.paths
                ]
            else:
                claims = [frozenset(vs[1:-1]) for vs in w.paths]
            for i in range(len(claims)):
                for j in range(i + 1, len(claims)):
                    if claims[i] & claims[j]:
                        return False
    return True
