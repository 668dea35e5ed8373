"""Graph input/output: graph6, edge lists, and command-line graph arguments."""
import os
from typing import Iterable
from typing import List

import networkx as nx

from .errors import BadParams
from .errors import GraphFormatError
from .graph import Graph


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_networkx(h: nx.Graph) -> Graph:
    """Convert a networkx graph whose nodes are ``0..n-1``."""
    return Graph.from_edges(h.number_of_nodes(), h.edges())


def to_graph6(g: Graph) -> str:
    return nx.to_graph6_bytes(to_networkx(g), header=False).decode("ascii").strip()


def from_graph6(text: str) -> Graph:
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<") :]
    try:
        h = nx.from_graph6_bytes(text.encode("ascii"))
    except (nx.NetworkXError, ValueError, IndexError, UnicodeEncodeError) as err:
        raise GraphFormatError(f"bad graph6 string {text!r}: {err}")
    return from_networkx(h)


def write_graph6(graphs: Iterable[Graph], path: str) -> int:
    """Write one graph6 line per graph; returns the number written."""
    count = 0
    with open(path, "w") as fid:
        for g in graphs:
            print(to_graph6(g), file=fid)
            count += 1
    return count


def parse_edge_list(text: str) -> Graph:
    """First line ``n``, then one ``u v`` pair per line, 0-indexed.

    Blank lines and ``#`` comments are ignored.
    """
    lines = [line.split("#")[0].strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines:
        raise GraphFormatError("empty edge list")
    try:
        n = int(lines[0])
        edges = []
        for line in lines[1:]:
            u, v = line.split()
            edges.append((int(u), int(v)))
    except ValueError:
        raise GraphFormatError(f"malformed edge list line in {lines!r}")
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


def read_graph_file(path: str) -> Graph:
    """An edge-list file, or a graph6 file (first graph is used)."""
    with open(path, "r") as fid:
        text = fid.read()
    # '#' is outside the graph6 alphabet, so it only ever opens a comment.
    lines = [line.split("#")[0].strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines:
        raise GraphFormatError(f"no graph in {path}")
    if lines[0].isdigit():
        return parse_edge_list(text)
    return from_graph6(lines[0])


def resolve_graph(arg: str) -> Graph:
    """A file path, a family spec such as ``turan:7:3``, or a graph6 string."""
    from .families import family_from_name

    if os.path.exists(arg):
        return read_graph_file(arg)
    # ':' never occurs in graph6 (its alphabet is chr(63)..chr(126)).
    if ":" in arg:
        return family_from_name(arg)
    return from_graph6(arg)


def parse_floats(text: str) -> List[float]:
    try:
        return [float(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise BadParams(f"expected comma-separated numbers, got {text!r}")
