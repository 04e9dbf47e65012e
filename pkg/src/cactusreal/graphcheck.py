"""Simple undirected graphs and an independent family-membership verifier.

Nothing in here knows about the sequence-level characterizations; it only
looks at graphs. That keeps it usable as the ground truth the decision
predicates and the constructions are checked against.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property

from .seqcore import DegreeSequence


class Family(str, enum.Enum):
    FOREST = "forest"
    TREE = "tree"
    UNICYCLIC = "unicyclic"
    BI_UNICYCLIC = "bi-unicyclic"
    BRIDGELESS_CACTUS = "bridgeless-cactus"
    TRIANGULATED_CACTUS = "triangulated-cactus"
    BRIDGELESS_BICACTUS = "bridgeless-bicactus"
    CORE_CACTUS = "core-cactus"
    CORE_BICACTUS = "core-bicactus"
    CACTUS = "cactus"
    BICACTUS = "bicactus"
    # sequence-level only: "every realization is in the family"
    FORCIBLY_BICACTUS = "forcibly-bicactus"
    FORCIBLY_BI_UNICYCLIC = "forcibly-bi-unicyclic"

    @property
    def is_forcibly(self) -> bool:
        return self in (Family.FORCIBLY_BICACTUS, Family.FORCIBLY_BI_UNICYCLIC)

    @property
    def bipartite(self) -> bool:
        return self in _BIPARTITE

    @classmethod
    def parse(cls, name: str) -> Family:
        key = name.strip().lower().replace("_", "-").replace(" ", "-")
        key = _ALIASES.get(key, key)
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"unknown family {name!r}") from None


_BIPARTITE = frozenset({
    Family.BI_UNICYCLIC,
    Family.BRIDGELESS_BICACTUS,
    Family.CORE_BICACTUS,
    Family.BICACTUS,
    Family.FORCIBLY_BICACTUS,
    Family.FORCIBLY_BI_UNICYCLIC,
})

_ALIASES = {
    "bi-cactus": "bicactus",
    "biunicyclic": "bi-unicyclic",
    "bridgeless-bi-cactus": "bridgeless-bicactus",
    "bridge-less-cactus": "bridgeless-cactus",
    "bridge-less-bicactus": "bridgeless-bicactus",
    "bridge-less-bi-cactus": "bridgeless-bicactus",
    "core-bi-cactus": "core-bicactus",
    "triangulated": "triangulated-cactus",
    "forcibly-bi-cactus": "forcibly-bicactus",
    "forcibly-bipartite-unicyclic": "forcibly-bi-unicyclic",
}

GRAPH_FAMILIES = tuple(f for f in Family if not f.is_forcibly)


class GraphError(ValueError):
    pass


class Graph:
    """Simple undirected graph on vertices ``1..n``.

    Edges are stored as ``(u, v)`` with ``u < v``. Large witnesses can be
    held as two integer columns instead; the tuple view is then built on
    first access. Adjacency is likewise built lazily.
    """

    __slots__ = ("n", "_edges", "_columns", "__dict__")

    def __init__(self, n: int, edges, check: bool = True):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        norm = tuple((u, v) if u < v else (v, u) for u, v in edges)
        if check:
            for u, v in norm:
                if u == v:
                    raise GraphError(f"self-loop at {u}")
                if u < 1 or v > n:
                    raise GraphError(f"edge ({u}, {v}) outside 1..{n}")
            if len(set(norm)) != len(norm):
                raise GraphError("duplicate edge")
        self.n = n
        self._edges = norm
        self._columns = None

    @classmethod
    def from_columns(cls, n: int, lo, hi) -> Graph:
        """Wrap parallel sequences with ``lo[i] < hi[i]``, skipping every check.

        ``lo`` and ``hi`` may be lists or numpy integer arrays.
        """
        if len(lo) != len(hi):
            raise GraphError("edge columns differ in length")
        g = cls.__new__(cls)
        g.n = n
        g._edges = None
        g._columns = (lo, hi)
        return g

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        if self._edges is None:
            lo, hi = self._columns
            if hasattr(lo, "tolist"):
                lo, hi = lo.tolist(), hi.tolist()
            self._edges = tuple(zip(lo, hi))
            self._columns = None
        return self._edges

    @property
    def m(self) -> int:
        if self._edges is None:
            return len(self._columns[0])
        return len(self._edges)

    @cached_property
    def adjacency(self) -> list[list[int]]:
        """``adjacency[v]`` lists the neighbours of ``v``; index 0 is unused."""
        adj: list[list[int]] = [[] for _ in range(self.n + 1)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degrees(self) -> list[int]:
        """Degrees of vertices ``1..n`` in label order."""
        deg = [0] * (self.n + 1)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg[1:]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and set(self.edges) == set(other.edges)

    def __hash__(self):
        return hash((self.n, frozenset(self.edges)))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def degree_sequence_of(g: Graph) -> DegreeSequence:
    degrees = g.degrees()
    for v, d in enumerate(degrees, 1):
        if d == 0:
            raise GraphError(f"vertex {v} is isolated")
    return DegreeSequence.from_degrees(degrees)


def components(g: Graph) -> list[list[int]]:
    adj = g.adjacency
    seen = [False] * (g.n + 1)
    out = []
    for s in range(1, g.n + 1):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        out.append(comp)
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def is_bipartite(g: Graph) -> bool:
    adj = g.adjacency
    color = [-1] * (g.n + 1)
    for s in range(1, g.n + 1):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if color[w] < 0:
                    color[w] = color[u] ^ 1
                    stack.append(w)
                elif color[w] == color[u]:
                    return False
    return True


@dataclass(frozen=True)
class Block:
    kind: str  # "bridge", "cycle" or "other"
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks of a connected graph and the block-cutpoint tree.

    Cycle blocks list their vertices in cycle order. ``bc_edges`` pairs a cut
    vertex with the index of a block (into ``blocks``) containing it.
    """

    blocks: tuple[Block, ...]
    cut_vertices: frozenset[int]
    bc_edges: tuple[tuple[int, int], ...] = field(repr=False)

    @property
    def bridges(self) -> list[tuple[int, int]]:
        return [b.edges[0] for b in self.blocks if b.kind == "bridge"]

    @property
    def cycle_blocks(self) -> list[tuple[int, ...]]:
        return [b.vertices for b in self.blocks if b.kind == "cycle"]

    @property
    def other_blocks(self) -> list[Block]:
        return [b for b in self.blocks if b.kind == "other"]

    @property
    def cycle_count(self) -> int:
        return sum(1 for b in self.blocks if b.kind == "cycle")


def _cycle_order(vertices: set[int], edges) -> tuple[int, ...]:
    nbrs: dict[int, list[int]] = {v: [] for v in vertices}
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    start = min(vertices)
    order = [start]
    prev, cur = start, min(nbrs[start])
    while cur != start:
        order.append(cur)
        a, b = nbrs[cur]
        prev, cur = cur, (b if a == prev else a)
    return tuple(order)


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Biconnected components via an iterative lowlink DFS with an edge stack."""
    if not is_connected(g):
        raise GraphError("block decomposition needs a connected graph")
    n = g.n
    adj = g.adjacency
    disc = [0] * (n + 1)
    low = [0] * (n + 1)
    blocks: list[Block] = []
    cut: set[int] = set()
    edge_stack: list[tuple[int, int]] = []
    clock = 1
    for root in range(1, n + 1):
        if disc[root]:
            continue
        disc[root] = low[root] = clock
        clock += 1
        root_children = 0
        # frames: (vertex, parent, next-neighbour index)
        stack = [[root, 0, 0]]
        while stack:
            frame = stack[-1]
            u, parent, i = frame
            if i < len(adj[u]):
                frame[2] = i + 1
                w = adj[u][i]
                if not disc[w]:
                    disc[w] = low[w] = clock
                    clock += 1
                    edge_stack.append((u, w))
                    stack.append([w, u, 0])
                elif w != parent and disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    if disc[w] < low[u]:
                        low[u] = disc[w]
                continue
            stack.pop()
            if not stack:
                continue
            p = stack[-1][0]
            if low[u] < low[p]:
                low[p] = low[u]
            if low[u] >= disc[p]:
                if p == root:
                    root_children += 1
                else:
                    cut.add(p)
                comp = []
                while True:
                    e = edge_stack.pop()
                    comp.append(e)
                    if e == (p, u):
                        break
                blocks.append(_make_block(comp))
        if root_children > 1:
            cut.add(root)
    bc = tuple(
        (v, idx)
        for idx, block in enumerate(blocks)
        for v in block.vertices
        if v in cut
    )
    return BlockDecomposition(tuple(blocks), frozenset(cut), bc)


def _make_block(comp: list[tuple[int, int]]) -> Block:
    edges = tuple((u, v) if u < v else (v, u) for u, v in comp)
    verts = {x for e in edges for x in e}
    if len(edges) == 1:
        return Block("bridge", tuple(sorted(verts)), edges)
    if len(edges) == len(verts):
        return Block("cycle", _cycle_order(verts, edges), edges)
    return Block("other", tuple(sorted(verts)), edges)


@dataclass(frozen=True)
class Profile:
    """Everything membership needs, computed in one pass."""

    n: int
    m: int
    components: int
    connected: bool
    bipartite: bool
    cactus: bool
    bridges: int
    cycle_lengths: tuple[int, ...]
    cyclic_cores: int  # bridge-deleted components that contain a cycle

    def member(self, family: Family) -> bool:
        if family is Family.FOREST:
            return self.acyclic
        if family is Family.TREE:
            return self.connected and self.acyclic
        if not self.cactus:
            return False
        if family.bipartite and not self.bipartite:
            return False
        if family in (Family.UNICYCLIC, Family.BI_UNICYCLIC):
            return len(self.cycle_lengths) == 1
        if family in (Family.BRIDGELESS_CACTUS, Family.BRIDGELESS_BICACTUS):
            return self.bridges == 0
        if family is Family.TRIANGULATED_CACTUS:
            return self.bridges == 0 and all(k == 3 for k in self.cycle_lengths)
        if family in (Family.CORE_CACTUS, Family.CORE_BICACTUS):
            return self.cyclic_cores <= 1
        if family in (Family.CACTUS, Family.BICACTUS):
            return True
        raise ValueError(f"{family.value} is not a graph family")

    @property
    def acyclic(self) -> bool:
        return self.m == self.n - self.components


def profile(g: Graph) -> Profile:
    comps = components(g)
    connected = len(comps) <= 1
    bip = is_bipartite(g)
    cactus = False
    bridges = 0
    lengths: tuple[int, ...] = ()
    cores = 0
    if connected:
        bd = block_decomposition(g)
        cactus = not bd.other_blocks
        bridges = len(bd.bridges)
        lengths = tuple(len(c) for c in bd.cycle_blocks)
        cores = _cyclic_core_count(g.n, bd.cycle_blocks)
    return Profile(g.n, g.m, len(comps), connected, bip, cactus, bridges, lengths, cores)


def _cyclic_core_count(n: int, cycles) -> int:
    """Count connected pieces of the union of cycle blocks."""
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    touched = set()
    for cyc in cycles:
        r = find(cyc[0])
        touched.update(cyc)
        for v in cyc[1:]:
            rv = find(v)
            if rv != r:
                parent[rv] = r
    return len({find(v) for v in touched})


def is_member(family: Family, g: Graph) -> bool:
    if family.is_forcibly:
        raise ValueError(f"{family.value} is a property of sequences, not graphs")
    return profile(g).member(family)


def euler_cycle_identity(g: Graph) -> bool:
    """``m == n + c - 1`` for a cactus with ``c`` cycles."""
    if not is_member(Family.CACTUS, g):
        raise GraphError("euler_cycle_identity needs a cactus")
    if g.n <= 1:
        return g.m == 0
    return g.m == g.n + block_decomposition(g).cycle_count - 1


def verify_realization(family: Family, d: DegreeSequence, g: Graph) -> bool:
    if g.n != d.n:
        return False
    if sorted(g.degrees(), reverse=True) != list(d.entries):
        return False
    if family.is_forcibly:
        base = Family.BI_UNICYCLIC if family is Family.FORCIBLY_BI_UNICYCLIC else Family.BICACTUS
        return is_member(base, g)
    return is_member(family, g)


def read_graph(text: str) -> Graph:
    """Parse the ``n m`` header followed by ``m`` lines of ``u v``."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 2:
        raise GraphError("missing 'n m' header")
    try:
        n, m = int(lines[0][0]), int(lines[0][1])
        edges = [(int(a), int(b)) for a, b in lines[1:]]
    except ValueError as exc:
        raise GraphError(f"malformed graph file: {exc}") from None
    if len(edges) != m:
        raise GraphError(f"header says {m} edges, found {len(edges)}")
    return Graph(n, edges)


def write_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"
