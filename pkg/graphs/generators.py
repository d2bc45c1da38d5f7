from __future__ import annotations

from typing import Callable, Dict, List, Optional

import networkx as nx

from core.errors import InvalidGeneratorParameters
from graphs.graph import Graph, edge_key


def from_networkx(nx_graph: nx.Graph) -> Graph:
    """Relabel nodes to 0..n-1 in sorted node order."""
    order = {node: i for i, node in enumerate(sorted(nx_graph.nodes()))}
    edges = frozenset(edge_key(order[u], order[v]) for u, v in nx_graph.edges() if u != v)
    return Graph(len(order), edges)


def to_networkx(g: Graph) -> nx.Graph:
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(g.vertices())
    nx_graph.add_edges_from(g.edges)
    return nx_graph


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InvalidGeneratorParameters(message)


def path_graph(n: int) -> Graph:
    _require(n >= 1, "path needs n >= 1")
    return from_networkx(nx.path_graph(n))


def cycle_graph(n: int) -> Graph:
    _require(n >= 3, "cycle needs n >= 3")
    return from_networkx(nx.cycle_graph(n))


def complete_graph(n: int) -> Graph:
    _require(n >= 1, "complete graph needs n >= 1")
    return from_networkx(nx.complete_graph(n))


def star_graph(n: int) -> Graph:
    """Center 0 joined to leaves 1..n-1."""
    _require(n >= 2, "star needs n >= 2")
    return from_networkx(nx.star_graph(n - 1))


def grid_graph(rows: int, cols: int) -> Graph:
    _require(rows >= 1 and cols >= 1, "grid needs rows, cols >= 1")
    return from_networkx(nx.grid_2d_graph(rows, cols))


def gnp_graph(n: int, p: float, seed: int = 0) -> Graph:
    _require(n >= 0, "gnp needs n >= 0")
    _require(0.0 <= p <= 1.0, "gnp needs 0 <= p <= 1")
    return from_networkx(nx.gnp_random_graph(n, p, seed=seed))


def regular_graph(n: int, d: int, seed: int = 0, attempts: int = 20) -> Graph:
    """Random d-regular graph by pairing, retrying with derived seeds."""
    _require(0 <= d < n, "regular graph needs 0 <= d < n")
    _require((n * d) % 2 == 0, "regular graph needs n*d even")
    last_error: Optional[Exception] = None
    for attempt in range(attempts):
        try:
            return from_networkx(nx.random_regular_graph(d, n, seed=seed + attempt))
        except nx.NetworkXError as exc:
            last_error = exc
    raise InvalidGeneratorParameters(f"no simple {d}-regular graph on {n} vertices found: {last_error}")


def _int(value: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise InvalidGeneratorParameters(f"expected an integer, got {value!r}") from None


def _float(value: str) -> float:
    try:
        return float(value)
    except ValueError:
        raise InvalidGeneratorParameters(f"expected a number, got {value!r}") from None


GeneratorFactory = Callable[[List[str], int], Graph]

FAMILIES: Dict[str, GeneratorFactory] = {
    "path": lambda params, seed: path_graph(_int(params[0])),
    "cycle": lambda params, seed: cycle_graph(_int(params[0])),
    "complete": lambda params, seed: complete_graph(_int(params[0])),
    "star": lambda params, seed: star_graph(_int(params[0])),
    "grid": lambda params, seed: grid_graph(_int(params[0]), _int(params[1])),
    "gnp": lambda params, seed: gnp_graph(_int(params[0]), _float(params[1]), seed),
    "regular": lambda params, seed: regular_graph(_int(params[0]), _int(params[1]), seed),
}

ARITY = {"path": 1, "cycle": 1, "complete": 1, "star": 1, "grid": 2, "gnp": 2, "regular": 2}


def generate(family: str, params: List[str], seed: int = 0) -> Graph:
    if family not in FAMILIES:
        raise InvalidGeneratorParameters(
            f"unknown family {family!r}; choose from {', '.join(sorted(FAMILIES))}"
        )
    if len(params) != ARITY[family]:
        raise InvalidGeneratorParameters(
            f"family {family!r} takes {ARITY[family]} parameter(s), got {len(params)}"
        )
    return FAMILIES[family](list(params), seed)
