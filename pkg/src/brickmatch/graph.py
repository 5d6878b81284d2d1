"""Loopless multigraph with stable vertex/edge ids, cuts, minors, connectivity.

Vertices and edges are identified by append-only integer ids.  Ids survive
deletion and contraction (no renumbering), which lets perfect matchings and
cuts computed on a derived graph be compared against edge sets resolved on the
original.  Parallel edges are first-class: every edge id is a distinct object
even when endpoints coincide.  Loops are rejected everywhere.

Graphs are mutable while being built and can then be frozen; every analysis
in the package is a read-only query, so frozen graphs are safe to share.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterable, Optional, Tuple


class GraphError(ValueError):
    """Invalid graph construction or query (loop, unknown id, duplicate label)."""


class FrozenGraphError(GraphError):
    """Mutation attempted on a frozen graph."""


class ScaleError(RuntimeError):
    """Exact search requested beyond the configured size cap.

    Raised instead of silently degrading: every predicate in this package is
    exact or refuses to answer.
    """


@dataclass(frozen=True)
class EdgeCut:
    """A vertex subset X together with the edge set having one end in X."""

    side: frozenset
    edges: frozenset
    trivial: bool

    def sorted_edges(self) -> Tuple[int, ...]:
        return tuple(sorted(self.edges))


@dataclass
class VertexMap:
    """Injective vertex-id correspondence, used as an isomorphism witness."""

    pairs: Dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if len(set(self.pairs.values())) != len(self.pairs):
            raise GraphError("vertex map is not injective")

    def __getitem__(self, v: int) -> int:
        return self.pairs[v]

    def __len__(self) -> int:
        return len(self.pairs)

    def inverse(self) -> "VertexMap":
        return VertexMap({w: v for v, w in self.pairs.items()})


class MultiGraph:
    """Loopless undirected multigraph with stable integer ids."""

    def __init__(self, name: str = ""):
        self.name = name
        self._vlabels: Dict[int, Optional[str]] = {}
        self._edges: Dict[int, Tuple[int, int]] = {}
        self._inc: Dict[int, set] = {}
        self._label_index: Dict[str, int] = {}
        self._next_vid = 0
        self._next_eid = 0
        self._frozen = False
        self._cache: Dict[str, object] = {}

    # -- construction ----------------------------------------------------

    def _check_mutable(self):
        if self._frozen:
            raise FrozenGraphError("graph is frozen")

    def add_vertex(self, label: Optional[str] = None) -> int:
        self._check_mutable()
        if label is not None and label in self._label_index:
            raise GraphError(f"duplicate vertex label {label!r}")
        vid = self._next_vid
        self._next_vid += 1
        self._vlabels[vid] = label
        self._inc[vid] = set()
        if label is not None:
            self._label_index[label] = vid
        self._cache.clear()
        return vid

    def add_edge(self, a: int, b: int) -> int:
        self._check_mutable()
        if a == b:
            raise GraphError(f"loop rejected at vertex {a}")
        for v in (a, b):
            if v not in self._vlabels:
                raise GraphError(f"unknown vertex {v}")
        eid = self._next_eid
        self._next_eid += 1
        self._edges[eid] = (a, b)
        self._inc[a].add(eid)
        self._inc[b].add(eid)
        self._cache.clear()
        return eid

    def freeze(self) -> "MultiGraph":
        self._frozen = True
        return self

    @property
    def frozen(self) -> bool:
        return self._frozen

    @classmethod
    def from_parts(
        cls,
        vertices: Iterable[Tuple[int, Optional[str]]],
        edges: Iterable[Tuple[int, int, int]],
        name: str = "",
    ) -> "MultiGraph":
        """Build a graph with explicit ids, e.g. when reading a file.

        ``vertices`` yields ``(vid, label)``; ``edges`` yields ``(eid, a, b)``.
        """
        g = cls(name=name)
        for vid, label in vertices:
            if vid in g._vlabels:
                raise GraphError(f"duplicate vertex id {vid}")
            if label is not None:
                if label in g._label_index:
                    raise GraphError(f"duplicate vertex label {label!r}")
                g._label_index[label] = vid
            g._vlabels[vid] = label
            g._inc[vid] = set()
            g._next_vid = max(g._next_vid, vid + 1)
        for eid, a, b in edges:
            if eid in g._edges:
                raise GraphError(f"duplicate edge id {eid}")
            if a == b:
                raise GraphError(f"loop rejected at vertex {a}")
            for v in (a, b):
                if v not in g._vlabels:
                    raise GraphError(f"unknown vertex {v}")
            g._edges[eid] = (a, b)
            g._inc[a].add(eid)
            g._inc[b].add(eid)
            g._next_eid = max(g._next_eid, eid + 1)
        return g

    def copy(self, name: Optional[str] = None) -> "MultiGraph":
        """Unfrozen deep copy with identical ids and labels."""
        g = MultiGraph.from_parts(
            sorted(self._vlabels.items()),
            [(e, a, b) for e, (a, b) in sorted(self._edges.items())],
            name=self.name if name is None else name,
        )
        g._next_vid = self._next_vid
        g._next_eid = self._next_eid
        return g

    # -- queries ----------------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return len(self._vlabels)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def vertices(self) -> Tuple[int, ...]:
        return tuple(sorted(self._vlabels))

    def edges(self) -> Tuple[int, ...]:
        return tuple(sorted(self._edges))

    def has_vertex(self, v: int) -> bool:
        return v in self._vlabels

    def has_edge(self, e: int) -> bool:
        return e in self._edges

    def endpoints(self, e: int) -> Tuple[int, int]:
        try:
            return self._edges[e]
        except KeyError:
            raise GraphError(f"unknown edge {e}") from None

    def incident_edges(self, v: int) -> Tuple[int, ...]:
        try:
            return tuple(sorted(self._inc[v]))
        except KeyError:
            raise GraphError(f"unknown vertex {v}") from None

    def degree(self, v: int) -> int:
        return len(self._inc[v])

    def other_end(self, e: int, v: int) -> int:
        a, b = self.endpoints(e)
        if v == a:
            return b
        if v == b:
            return a
        raise GraphError(f"vertex {v} is not an end of edge {e}")

    def neighbors(self, v: int) -> Tuple[int, ...]:
        """Distinct neighbors, sorted (parallel edges collapse)."""
        return tuple(sorted({self.other_end(e, v) for e in self._inc[v]}))

    def multiplicity(self, a: int, b: int) -> int:
        if a not in self._inc or b not in self._inc:
            raise GraphError("unknown vertex")
        return sum(1 for e in self._inc[a] if self.other_end(e, a) == b)

    def edges_between(self, a: int, b: int) -> Tuple[int, ...]:
        return tuple(sorted(e for e in self._inc[a] if self.other_end(e, a) == b))

    def edge_between(self, a: int, b: int) -> int:
        """The unique edge joining a and b; error if absent or parallel."""
        es = self.edges_between(a, b)
        if len(es) != 1:
            raise GraphError(f"expected one edge between {a} and {b}, found {len(es)}")
        return es[0]

    def label(self, v: int) -> Optional[str]:
        try:
            return self._vlabels[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v}") from None

    def has_label(self, label: str) -> bool:
        return label in self._label_index

    def vertex_by_label(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise GraphError(f"no vertex labeled {label!r}") from None

    def adjacency(self) -> Dict[int, Dict[int, int]]:
        """Neighbor -> multiplicity map per vertex (cached on frozen graphs)."""
        adj = self._cache.get("adjacency")
        if adj is None:
            adj = {v: {} for v in self._vlabels}
            for a, b in self._edges.values():
                adj[a][b] = adj[a].get(b, 0) + 1
                adj[b][a] = adj[b].get(a, 0) + 1
            self._cache["adjacency"] = adj
        return adj

    def degree_sequence(self) -> Tuple[int, ...]:
        return tuple(sorted(len(self._inc[v]) for v in self._vlabels))

    def simple_copy(self, name: Optional[str] = None) -> "MultiGraph":
        """Underlying simple graph: parallel edges collapse to the lowest id."""
        seen = {}
        for e in sorted(self._edges):
            a, b = self._edges[e]
            key = (min(a, b), max(a, b))
            seen.setdefault(key, e)
        return MultiGraph.from_parts(
            sorted(self._vlabels.items()),
            [(e, a, b) for (a, b), e in sorted(seen.items(), key=lambda kv: kv[1])],
            name=self.name if name is None else name,
        )

    def __repr__(self) -> str:
        tag = f" {self.name!r}" if self.name else ""
        return f"<MultiGraph{tag} n={self.vertex_count} m={self.edge_count}>"


# -- cut / minor operations ------------------------------------------------


def _check_side(g: MultiGraph, X: Iterable[int]) -> frozenset:
    side = frozenset(X)
    for v in side:
        if not g.has_vertex(v):
            raise GraphError(f"unknown vertex {v}")
    if not side:
        raise GraphError("cut side must be nonempty")
    if len(side) == g.vertex_count:
        raise GraphError("cut side must be a proper subset of the vertices")
    return side


def edge_cut(g: MultiGraph, X: Iterable[int]) -> EdgeCut:
    """The cut determined by X: all edges with exactly one end in X."""
    side = _check_side(g, X)
    cut = frozenset(
        e for e in g.edges() if (g.endpoints(e)[0] in side) != (g.endpoints(e)[1] in side)
    )
    trivial = len(side) == 1 or len(side) == g.vertex_count - 1
    return EdgeCut(side=side, edges=cut, trivial=trivial)


def contract(g: MultiGraph, X: Iterable[int], new_label: Optional[str] = None) -> MultiGraph:
    """Contract X to a single fresh vertex.

    Edges inside X disappear (loops are dropped); edges across the cut keep
    their ids and are reattached to the new vertex, so parallel edges are
    retained and the new vertex has degree |cut|.  The new vertex id is the
    next unused id of ``g``.
    """
    side = _check_side(g, X)
    new_vid = g._next_vid
    verts = [(v, g.label(v)) for v in g.vertices() if v not in side]
    verts.append((new_vid, new_label))
    edges = []
    for e in g.edges():
        a, b = g.endpoints(e)
        ina, inb = a in side, b in side
        if ina and inb:
            continue
        if ina:
            a = new_vid
        if inb:
            b = new_vid
        edges.append((e, a, b))
    label_conflict = new_label is not None and any(
        lbl == new_label for _, lbl in verts[:-1]
    )
    if label_conflict:
        raise GraphError(f"contraction label {new_label!r} already in use")
    out = MultiGraph.from_parts(verts, edges, name=g.name)
    out._next_vid = new_vid + 1
    out._next_eid = g._next_eid
    return out


def delete_vertices(g: MultiGraph, S: Iterable[int]) -> MultiGraph:
    """Remove S and all incident edges; surviving ids are unchanged."""
    drop = frozenset(S)
    for v in drop:
        if not g.has_vertex(v):
            raise GraphError(f"unknown vertex {v}")
    verts = [(v, g.label(v)) for v in g.vertices() if v not in drop]
    edges = [
        (e, a, b)
        for e in g.edges()
        for a, b in [g.endpoints(e)]
        if a not in drop and b not in drop
    ]
    out = MultiGraph.from_parts(verts, edges, name=g.name)
    out._next_vid = g._next_vid
    out._next_eid = g._next_eid
    return out


# -- structure predicates ----------------------------------------------------


def _components(adj: Dict[int, Dict[int, int]], keep=None) -> list:
    vs = sorted(adj) if keep is None else sorted(keep)
    alive = set(vs)
    comps = []
    while alive:
        root = min(alive)
        comp = {root}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w in alive and w not in comp:
                    comp.add(w)
                    queue.append(w)
        alive -= comp
        comps.append(comp)
    return comps


def is_connected(g: MultiGraph) -> bool:
    if g.vertex_count == 0:
        return False
    return len(_components(g.adjacency())) == 1


def is_bipartite(g: MultiGraph) -> bool:
    """2-colorability of the underlying simple graph."""
    adj = g.adjacency()
    color: Dict[int, int] = {}
    for root in g.vertices():
        if root in color:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in color:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def vertex_connectivity_at_least(g: MultiGraph, k: int) -> bool:
    """No vertex set of size < k disconnects the underlying simple graph.

    Parallel edges never change vertex cuts, so they are ignored.  Complete
    graphs come out (m-1)-connected under this definition because no subset
    short of everything-but-one disconnects them; the |V| > k precondition
    keeps the convention honest.
    """
    if k < 1:
        raise GraphError("connectivity threshold must be positive")
    if g.vertex_count <= k:
        raise GraphError(f"graph on {g.vertex_count} vertices is too small for k={k}")
    adj = g.adjacency()
    vs = g.vertices()
    for size in range(0, k):
        for cut in combinations(vs, size):
            keep = [v for v in vs if v not in cut]
            if len(_components(adj, keep)) != 1:
                return False
    return True
