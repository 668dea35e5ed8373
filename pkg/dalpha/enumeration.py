"""Exhaustive generation of small graphs up to isomorphism.

Canonical forms come from an individualization-refinement search over
ordered vertex partitions; every generator deduplicates on them and emits
graphs in increasing canonical-code order, relabeled canonically.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Dict
from typing import Iterable
from typing import Iterator
from typing import List
from typing import Optional

import networkx as nx

from .consts import _CANONICAL_MAX
from .consts import _CHROMATIC_MAX
from .consts import _CONNECTED_LARGE_MAX
from .consts import _CONNECTED_MAX
from .consts import _TREE_MAX
from .consts import _UNICYCLIC_MAX
from .errors import BadParams
from .errors import EnumerationCapExceeded
from .errors import TooLarge
from .graph import Graph
from .graph import add_edge
from .graph import bfs_layers
from .graph import is_connected
from .graph import is_twin_pair
from .utils import from_networkx

logger = logging.getLogger(__name__)

KINDS = ("trees", "unicyclic", "connected", "chromatic")


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Minimal upper-triangular adjacency code of an isomorphism class.

    Bits run column by column, ``(0,1), (0,2), (1,2), (0,3), ...`` (the
    graph6 order), with the first pair most significant.
    """

    n: int
    code: int

    @property
    def bits(self) -> str:
        width = self.n * (self.n - 1) // 2
        return format(self.code, f"0{width}b") if width else ""

    def __str__(self):
        return f"{self.n}:{self.bits}"

    def to_graph(self) -> Graph:
        pairs = [(i, j) for j in range(1, self.n) for i in range(j)]
        return Graph.from_edges(
            self.n, [pair for pair, bit in zip(pairs, self.bits) if bit == "1"]
        )


def _code(g: Graph, order: List[int]) -> int:
    code = 0
    for j in range(1, g.n):
        row = g.adj[order[j]]
        for i in range(j):
            code = code << 1 | (row >> order[i] & 1)
    return code


def _initial_cells(g: Graph) -> List[List[int]]:
    """Cells of equal (degree, distance-layer counts), ordered by invariant."""
    invariants: Dict[tuple, List[int]] = {}
    for v in range(g.n):
        layers = [0] * (g.n + 1)
        for d in bfs_layers(g, v):
            layers[d] += 1  # index -1 counts unreachable vertices
        invariants.setdefault((g.degree(v), tuple(layers)), []).append(v)
    return [invariants[key] for key in sorted(invariants)]


def _refine(g: Graph, cells: List[List[int]]) -> List[List[int]]:
    """Split cells by neighbor counts into every cell until stable."""
    while True:
        masks = [sum(1 << v for v in cell) for cell in cells]
        refined = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups: Dict[tuple, List[int]] = {}
            for v in cell:
                key = tuple(_popcount(g.adj[v] & mask) for mask in masks)
                groups.setdefault(key, []).append(v)
            refined.extend(groups[key] for key in sorted(groups))
        if len(refined) == len(cells):
            return refined
        cells = refined


def _search(g: Graph, cells: List[List[int]], best: List[Optional[int]]):
    cells = _refine(g, cells)
    target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
    if target is None:
        code = _code(g, [cell[0] for cell in cells])
        if best[0] is None or code < best[0]:
            best[0] = code
        return
    chosen: List[int] = []
    for v in cells[target]:
        # Swapping twins is an automorphism fixing the partition.
        if any(is_twin_pair(g, u, v) for u in chosen):
            continue
        chosen.append(v)
        rest = [u for u in cells[target] if u != v]
        _search(g, cells[:target] + [[v], rest] + cells[target + 1 :], best)


def canonical_form(g: Graph) -> CanonicalForm:
    if g.n > _CANONICAL_MAX:
        raise TooLarge(f"canonical form supports n <= {_CANONICAL_MAX}")
    best: List[Optional[int]] = [None]
    _search(g, _initial_cells(g), best)
    return CanonicalForm(g.n, best[0] or 0)


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n: int
    r: Optional[int] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise BadParams(f"kind must be one of {KINDS}, got {self.kind!r}")
        if (self.r is not None) != (self.kind == "chromatic"):
            raise BadParams("r is required for, and only for, kind 'chromatic'")
        if self.r is not None and not 3 <= self.r <= self.n - 1:
            raise BadParams(f"need 3 <= r <= n-1, got n={self.n}, r={self.r}")

    def __str__(self):
        suffix = f", r={self.r}" if self.r is not None else ""
        return f"{self.kind}(n={self.n}{suffix})"

    def to_dict(self) -> dict:
        return {"kind": self.kind, "n": self.n, "r": self.r}


# Free trees by level sequences: each tree is rooted at its center and
# stored as the depths of its vertices in preorder. Successors follow the
# Beyer-Hedetniemi rooted-tree step, with the Wright-Richmond-Odlyzko-McKay
# conditions skipping rootings that are not canonical for the free tree.


def _next_rooted(levels: List[int], p: Optional[int] = None) -> Optional[List[int]]:
    if p is None:
        p = len(levels) - 1
        while levels[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    successor = list(levels)
    for i in range(p, len(successor)):
        successor[i] = successor[i - p + q]
    return successor


def _split_left(levels: List[int]):
    """The first subtree of the root, and the tree with it removed."""
    ones = [i for i, depth in enumerate(levels) if depth == 1]
    cut = ones[1] if len(ones) > 1 else len(levels)
    left = [depth - 1 for depth in levels[1:cut]]
    rest = [0] + levels[cut:]
    return left, rest


def _next_free(levels: List[int]) -> Optional[List[int]]:
    left, rest = _split_left(levels)
    left_height, rest_height = max(left), max(rest)
    valid = rest_height >= left_height
    if valid and rest_height == left_height:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            valid = False
    if valid:
        return levels
    p = len(left)
    successor = _next_rooted(levels, p)
    if levels[p] > 2:
        new_left, _ = _split_left(successor)
        suffix = list(range(1, max(new_left) + 2))
        successor[-len(suffix) :] = suffix
    return successor


def _levels_to_graph(levels: List[int]) -> Graph:
    edges = []
    stack: List[int] = []
    for v, depth in enumerate(levels):
        while stack and levels[stack[-1]] >= depth:
            stack.pop()
        if stack:
            edges.append((stack[-1], v))
        stack.append(v)
    return Graph.from_edges(len(levels), edges)


def level_sequence_trees(n: int) -> Iterator[Graph]:
    """Free trees in level-sequence order, one per isomorphism class."""
    if n < 2:
        raise BadParams(f"trees need n >= 2, got {n}")
    # Start from the path rooted at its center.
    levels: Optional[List[int]] = list(range(n // 2 + 1)) + list(
        range(1, (n + 1) // 2)
    )
    while levels is not None:
        levels = _next_free(levels)
        if levels is not None:
            yield _levels_to_graph(levels)
            levels = _next_rooted(levels)


def _sorted_by_code(forms: Iterable[CanonicalForm]) -> Iterator[Graph]:
    for form in sorted(forms):
        yield form.to_graph()


def enumerate_trees(n: int) -> Iterator[Graph]:
    if not 2 <= n <= _TREE_MAX:
        raise BadParams(f"trees need 2 <= n <= {_TREE_MAX}, got {n}")
    if n > _CANONICAL_MAX:
        # Beyond the canonical cap the stream keeps generation order.
        yield from level_sequence_trees(n)
        return
    yield from _sorted_by_code(canonical_form(t) for t in level_sequence_trees(n))


def _grow(graphs: Iterable[Graph]) -> Dict[CanonicalForm, Graph]:
    """Every graph with one more edge, deduplicated."""
    grown: Dict[CanonicalForm, Graph] = {}
    for g in graphs:
        for u, v in g.non_edges():
            h = add_edge(g, u, v)
            grown.setdefault(canonical_form(h), h)
    return grown


def enumerate_unicyclic(n: int) -> Iterator[Graph]:
    """Each unicyclic graph is a spanning tree plus one edge."""
    if not 3 <= n <= _UNICYCLIC_MAX:
        raise BadParams(f"unicyclic graphs need 3 <= n <= {_UNICYCLIC_MAX}")
    forms = _grow(level_sequence_trees(n))
    logger.debug(f"{len(forms)} unicyclic classes on {n} vertices")
    yield from _sorted_by_code(forms)


def _connected_cap(n: int, allow_large: bool) -> None:
    if n < 1:
        raise BadParams(f"need n >= 1, got {n}")
    cap = _CONNECTED_LARGE_MAX if allow_large else _CONNECTED_MAX
    if n > cap:
        hint = "" if allow_large else " without allow_large"
        raise EnumerationCapExceeded(f"connected graphs capped at n={cap}{hint}")


def enumerate_connected(n: int, allow_large: bool = False) -> Iterator[Graph]:
    """Connected graphs grown edge by edge from the spanning trees.

    A connected graph with ``m >= n`` edges keeps a connected spanning
    subgraph with ``m - 1`` edges, so each edge-count layer is the
    deduplicated one-edge extension of the layer below.
    """
    _connected_cap(n, allow_large)
    if n == 1:
        yield Graph.empty(1)
        return
    layer = {canonical_form(t): t for t in level_sequence_trees(n)}
    forms = set(layer)
    while layer:
        layer = _grow(layer.values())
        forms.update(layer)
    logger.debug(f"{len(forms)} connected classes on {n} vertices")
    yield from _sorted_by_code(forms)


def scan_masks(
    n: int, edges: Optional[int] = None, allow_large: bool = False
) -> List[Graph]:
    """Brute-force oracle: every adjacency mask, connected ones deduplicated."""
    _connected_cap(n, allow_large)
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    forms = set()
    for mask in range(1 << len(pairs)):
        if edges is not None and _popcount(mask) != edges:
            continue
        rows = [0] * n
        for bit, (i, j) in enumerate(pairs):
            if mask >> bit & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        g = Graph(n, tuple(rows))
        if is_connected(g):
            forms.add(canonical_form(g))
    return list(_sorted_by_code(forms))


def prufer_trees(n: int) -> List[Graph]:
    """Oracle: all labeled trees from Prüfer sequences, deduplicated."""
    if not 3 <= n <= 8:
        raise BadParams(f"Prüfer oracle runs for 3 <= n <= 8, got {n}")
    forms = {
        canonical_form(from_networkx(nx.from_prufer_sequence(list(seq))))
        for seq in itertools.product(range(n), repeat=n - 2)
    }
    return list(_sorted_by_code(forms))


def _max_clique(g: Graph) -> int:
    best = 0

    def expand(size: int, candidates: int):
        nonlocal best
        if not candidates:
            best = max(best, size)
            return
        while candidates:
            if size + _popcount(candidates) <= best:
                return
            low = candidates & -candidates
            v = low.bit_length() - 1
            expand(size + 1, candidates & g.adj[v])
            candidates ^= low

    expand(0, (1 << g.n) - 1)
    return best


def _colorable(g: Graph, order: List[int], k: int) -> bool:
    classes = [0] * k

    def place(index: int, used: int) -> bool:
        if index == len(order):
            return True
        v = order[index]
        # A fresh color is only ever the next unused one.
        for c in range(min(used + 1, k)):
            if classes[c] & g.adj[v]:
                continue
            classes[c] |= 1 << v
            if place(index + 1, max(used, c + 1)):
                return True
            classes[c] &= ~(1 << v)
        return False

    return place(0, 0)


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number by k-colorability from the clique bound up."""
    if g.n > _CHROMATIC_MAX:
        raise TooLarge(f"chromatic number supports n <= {_CHROMATIC_MAX}")
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    k = _max_clique(g)
    while not _colorable(g, order, k):
        k += 1
    return k


def filter_by_chromatic(stream: Iterable[Graph], r: int) -> Iterator[Graph]:
    return (g for g in stream if chromatic_number(g) == r)


def enumerate_family(spec: FamilySpec, allow_large: bool = False) -> Iterator[Graph]:
    if spec.kind == "trees":
        if spec.n > _TREE_MAX:
            raise EnumerationCapExceeded(f"trees capped at n={_TREE_MAX}")
        return enumerate_trees(spec.n)
    if spec.kind == "unicyclic":
        if spec.n > _UNICYCLIC_MAX:
            raise EnumerationCapExceeded(
                f"unicyclic graphs capped at n={_UNICYCLIC_MAX}"
            )
        return enumerate_unicyclic(spec.n)
    # Validate eagerly; generators defer their checks to the first next().
    _connected_cap(spec.n, allow_large)
    if spec.kind == "connected":
        return enumerate_connected(spec.n, allow_large)
    return filter_by_chromatic(enumerate_connected(spec.n, allow_large), spec.r)
