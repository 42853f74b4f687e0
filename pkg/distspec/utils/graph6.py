# distspec/utils/graph6.py
# graph6 and edge-list codecs shared by the cache, the reports and the command line.

import json
from typing import Any

import networkx as nx

from distspec.core.exceptions import ParseError
from distspec.models.graph import Graph


def to_networkx(g: Graph) -> nx.Graph:
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges)
    return nxg


def from_networkx(nxg: nx.Graph) -> Graph:
    """Relabel nodes to 0..n-1 in sorted order."""
    order = {v: i for i, v in enumerate(sorted(nxg.nodes()))}
    return Graph.from_edges(len(order), ((order[u], order[v]) for u, v in nxg.edges()))


def to_graph6(g: Graph) -> str:
    return nx.to_graph6_bytes(to_networkx(g), header=False).decode("ascii").strip()


def from_graph6(text: str) -> Graph:
    """
    Decode one graph6 string (an optional >>graph6<< header is accepted).

    Raises:
        ParseError: when the string is not valid graph6.
    """
    raw = text.strip()
    if raw.startswith(">>graph6<<"):
        raw = raw[len(">>graph6<<"):]
    if not raw:
        raise ParseError(text, "empty graph6 string")
    try:
        return from_networkx(nx.from_graph6_bytes(raw.encode("ascii")))
    except (nx.NetworkXError, ValueError, UnicodeEncodeError, IndexError) as exc:
        raise ParseError(text, f"invalid graph6 ({exc})") from exc


def to_edge_list(g: Graph) -> dict[str, Any]:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def to_edge_list_json(g: Graph) -> str:
    return json.dumps(to_edge_list(g), sort_keys=True)


def from_edge_list(payload: Any, source: str = "<edge list>") -> Graph:
    """
    Build a graph from {"n": int, "edges": [[u, v], ...]}.

    Raises:
        ParseError: when the payload does not have that shape.
    """
    if isinstance(payload, str):
        try:
            payload = json.loads(payload)
        except json.JSONDecodeError as exc:
            raise ParseError(source, f"invalid JSON ({exc.msg})") from exc
    if not isinstance(payload, dict) or "n" not in payload or "edges" not in payload:
        raise ParseError(source, 'expected an object with "n" and "edges"')
    n, edges = payload["n"], payload["edges"]
    if not isinstance(n, int) or not isinstance(edges, list):
        raise ParseError(source, '"n" must be an integer and "edges" a list')
    if not all(isinstance(e, (list, tuple)) and len(e) == 2 and all(isinstance(x, int) for x in e)
               for e in edges):
        raise ParseError(source, "each edge must be a pair of integers")
    return Graph.from_edges(n, edges)
