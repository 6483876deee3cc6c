"""Instrumented weight oracles for the two query models.

The adjacency-matrix model answers weight(a, b) for any vertex pair and
returns +inf for non-edges; the edge-list model answers edge(i) with the
endpoints and weight of the i-th edge. Both keep exact monotone counters:
classical_queries counts direct lookups, quantum_queries counts whole
oracle applications (one per Grover iteration and one per classical check
of a measured index, regardless of superposition width).
"""

from __future__ import annotations

import threading
from enum import Enum

from .graph import INFINITE_WEIGHT, Edge, Graph


class OracleModel(Enum):
    ADJACENCY = "adjacency"
    EDGE_LIST = "edgelist"


class InstrumentedOracle:
    """Counting front end over a graph's weight data.

    Counter increments are lock-protected and safe under concurrent
    callers; the counters never decrease except through reset().
    """

    def __init__(self, graph: Graph, model: OracleModel):
        self.graph = graph
        self.model = model
        self._lock = threading.Lock()
        self._classical = 0
        self._quantum = 0

    @property
    def classical_queries(self) -> int:
        return self._classical

    @property
    def quantum_queries(self) -> int:
        return self._quantum

    def reset(self) -> None:
        """Zero both counters (the only way they ever decrease)."""
        with self._lock:
            self._classical = 0
            self._quantum = 0

    def _count(self, quantum: bool) -> None:
        with self._lock:
            if quantum:
                self._quantum += 1
            else:
                self._classical += 1

    def count_quantum_applications(self, k: int = 1) -> None:
        """Record k whole oracle applications issued by a quantum engine."""
        if k < 0:
            raise ValueError("application count must be >= 0")
        with self._lock:
            self._quantum += k

    def weight(self, a: int, b: int, *, quantum: bool = False) -> float:
        """Adjacency-model lookup: w(a, b), or +inf when (a, b) is not an edge.

        Total on the vertex-pair domain; symmetric in a and b. Parallel
        edges are served as the minimum weight for the pair.
        """
        if self.model is not OracleModel.ADJACENCY:
            raise ValueError("weight(a, b) requires an adjacency-model oracle")
        n = self.graph.n
        if not (0 <= a < n and 0 <= b < n):
            raise IndexError(f"vertex pair ({a}, {b}) outside [0, {n - 1}]^2")
        self._count(quantum)
        if a == b:
            return INFINITE_WEIGHT
        e = self.graph.pair_min(a, b)
        return e.w if e is not None else INFINITE_WEIGHT

    def edge(self, i: int, *, quantum: bool = False) -> tuple[int, int, float]:
        """Edge-list-model lookup: endpoints and weight of edge i."""
        if self.model is not OracleModel.EDGE_LIST:
            raise ValueError("edge(i) requires an edge-list-model oracle")
        if not (0 <= i < self.graph.m):
            raise IndexError(f"edge index {i} outside [0, {self.graph.m - 1}]")
        self._count(quantum)
        e = self.graph.edges[i]
        return (e.u, e.v, e.w)

    def edge_weight(self, e: Edge, *, quantum: bool = False) -> float:
        """Weight of a known edge through whichever model this oracle speaks."""
        if self.model is OracleModel.ADJACENCY:
            return self.weight(e.u, e.v, quantum=quantum)
        return self.edge(e.id, quantum=quantum)[2]
