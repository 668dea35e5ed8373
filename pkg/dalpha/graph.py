"""Simple undirected graphs on bitset adjacency, and their distance profiles."""
import logging
from dataclasses import dataclass
from typing import Iterable
from typing import Iterator
from typing import List
from typing import Sequence
from typing import Tuple

from .consts import _MAX_ORDER
from .errors import BadParams
from .errors import DisconnectedGraph
from .errors import EdgeExists
from .errors import SelfLoop
from .errors import TooLarge

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbor bitset of ``v``.
    """

    n: int
    adj: Tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= _MAX_ORDER:
            raise TooLarge(f"n={self.n} outside 1..{_MAX_ORDER}")
        if len(self.adj) != self.n:
            raise BadParams(f"{len(self.adj)} adjacency rows for n={self.n}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise BadParams(f"row {v} references vertices beyond n")
            if row >> v & 1:
                raise SelfLoop(f"self-loop at {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise BadParams(f"asymmetric adjacency at ({v}, {u})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise BadParams(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise SelfLoop(f"self-loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    def __repr__(self):
        return f"Graph<n={self.n}, m={self.edge_count}>"

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def neighbors(self, v: int) -> List[int]:
        return list(iter_bits(self.adj[v]))

    @property
    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def edges(self) -> List[Edge]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [
            (u, v)
            for u in range(self.n)
            for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))
        ]

    def non_edges(self) -> List[Edge]:
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if not self.has_edge(u, v)
        ]

    @property
    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2


@dataclass(frozen=True)
class DistanceProfile:
    """All-pairs hop distances of a connected graph."""

    n: int
    dist: Tuple[Tuple[int, ...], ...]
    trans: Tuple[int, ...]
    wiener: int


def bfs_layers(g: Graph, source: int) -> List[int]:
    """Hop distance from ``source`` to every vertex, ``-1`` if unreachable."""
    dist = [-1] * g.n
    dist[source] = 0
    visited = frontier = 1 << source
    depth = 0
    while frontier:
        depth += 1
        reach = 0
        for v in iter_bits(frontier):
            reach |= g.adj[v]
        frontier = reach & ~visited
        visited |= frontier
        for v in iter_bits(frontier):
            dist[v] = depth
    return dist


def is_connected(g: Graph) -> bool:
    visited = frontier = 1
    while frontier:
        reach = 0
        for v in iter_bits(frontier):
            reach |= g.adj[v]
        frontier = reach & ~visited
        visited |= frontier
    return visited == (1 << g.n) - 1


def distance_profile(g: Graph) -> DistanceProfile:
    """BFS from every vertex; raises :class:`DisconnectedGraph` on any gap."""
    rows = []
    for source in range(g.n):
        row = bfs_layers(g, source)
        if -1 in row:
            raise DisconnectedGraph(
                f"vertex {row.index(-1)} unreachable from {source}"
            )
        rows.append(tuple(row))
    trans = tuple(sum(row) for row in rows)
    # Sum of transmissions counts every unordered pair twice.
    return DistanceProfile(
        n=g.n, dist=tuple(rows), trans=trans, wiener=sum(trans) // 2
    )


def is_transmission_regular(p: DistanceProfile) -> bool:
    return len(set(p.trans)) == 1


def add_edge(g: Graph, u: int, v: int) -> Graph:
    """Return ``g + uv``; ``g`` is left untouched."""
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise BadParams(f"vertex outside 0..{g.n - 1}")
    if u == v:
        raise SelfLoop(f"self-loop at {u}")
    if g.has_edge(u, v):
        raise EdgeExists(f"edge ({u}, {v}) already present")
    rows = list(g.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.n, tuple(rows))


def permute(g: Graph, sigma: Sequence[int]) -> Graph:
    """Relabel vertex ``v`` as ``sigma[v]``."""
    if sorted(sigma) != list(range(g.n)):
        raise BadParams(f"{list(sigma)} is not a permutation of 0..{g.n - 1}")
    rows = [0] * g.n
    for v in range(g.n):
        row = 0
        for u in iter_bits(g.adj[v]):
            row |= 1 << sigma[u]
        rows[sigma[v]] = row
    return Graph(g.n, tuple(rows))


def is_twin_pair(g: Graph, u: int, v: int) -> bool:
    """True iff swapping ``u`` and ``v`` preserves the edge set."""
    mask = ~((1 << u) | (1 << v))
    return g.adj[u] & mask == g.adj[v] & mask


def transposition_automorphisms(g: Graph) -> List[Edge]:
    return [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if is_twin_pair(g, u, v)
    ]
