"""Flow networks over exact integer capacities and costs."""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels


class InfeasibleFlowError(ValueError):
    """The requested flow value exceeds the maximum flow."""


@dataclass(frozen=True)
class FlowNetwork:
    """Directed network with arcs (u, v, capacity, cost).

    Capacities are nonnegative integers, costs are integers, the source and
    sink differ, no arc enters the source and none leaves the sink.
    """

    n: int
    arcs: tuple[tuple[int, int, int, int], ...]
    source: int
    sink: int

    def __post_init__(self):
        if not 0 <= self.source < self.n:
            raise ValueError(f"source {self.source} out of range")
        if not 0 <= self.sink < self.n:
            raise ValueError(f"sink {self.sink} out of range")
        if self.source == self.sink:
            raise ValueError("source and sink must differ")
        for u, v, capacity, cost in self.arcs:
            if not 0 <= u < self.n or not 0 <= v < self.n:
                raise ValueError(f"arc ({u}, {v}) out of range")
            if capacity < 0:
                raise ValueError(f"negative capacity on arc ({u}, {v})")
            if v == self.source:
                raise ValueError("no arc may enter the source")
            if u == self.sink:
                raise ValueError("no arc may leave the sink")


def network(n: int, arcs, source: int, sink: int) -> FlowNetwork:
    """FlowNetwork from (u, v, capacity) or (u, v, capacity, cost) tuples."""
    full = tuple(
        (a[0], a[1], a[2], a[3] if len(a) == 4 else 0) for a in arcs
    )
    return FlowNetwork(n, full, source, sink)


def _split(net: FlowNetwork):
    us = [a[0] for a in net.arcs]
    vs = [a[1] for a in net.arcs]
    caps = [a[2] for a in net.arcs]
    costs = [a[3] for a in net.arcs]
    return us, vs, caps, costs


def max_flow(net: FlowNetwork) -> int:
    us, vs, caps, _ = _split(net)
    value, _ = kernels.dinic(net.n, us, vs, caps, net.source, net.sink)
    return value


def min_cut(net: FlowNetwork) -> tuple[int, frozenset[int]]:
    """(max flow value, source side of a minimum cut)."""
    us, vs, caps, _ = _split(net)
    value, side = kernels.dinic(net.n, us, vs, caps, net.source, net.sink)
    return value, frozenset(side)


def min_cost_flow(net: FlowNetwork, value: int) -> int:
    """Minimum total cost of sending exactly `value` units.

    Raises InfeasibleFlowError when the maximum flow is smaller. Negative
    arc costs are supported on acyclic networks only.
    """
    if value < 0:
        raise ValueError(f"flow value must be nonnegative, got {value}")
    us, vs, caps, costs = _split(net)
    marginals, flow = kernels.ssp(
        net.n, us, vs, caps, costs, net.source, net.sink, value, 0, 0
    )
    if flow < value:
        raise InfeasibleFlowError(
            f"requested flow {value} exceeds maximum flow {flow}"
        )
    return sum(m * units for m, units in marginals)
