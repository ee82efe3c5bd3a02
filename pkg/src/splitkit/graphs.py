"""Directed-graph utilities: SCC condensation, order ideals, max-flow, DOT."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence


@dataclass(eq=True)
class Digraph:
    n: int
    edges: frozenset[tuple[int, int]]
    names: tuple[str, ...] = ()

    def __post_init__(self):
        self.edges = frozenset(self.edges)
        if not self.names:
            self.names = tuple(str(i) for i in range(self.n))

    def successors(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in sorted(self.edges):
            adj[u].append(v)
        return adj


def tarjan_scc(n: int, successors: Sequence[Sequence[int]]) -> list[list[int]]:
    """Strongly connected components, iterative so deep graphs cannot blow the stack."""
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    counter = 0
    sccs: list[list[int]] = []

    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            for i in range(pi, len(successors[v])):
                w = successors[v][i]
                if index[w] == -1:
                    work[-1] = (v, i + 1)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                sccs.append(comp)
    return sccs


@dataclass(eq=True)
class Condensation:
    sccs: tuple[frozenset[int], ...]
    dag_edges: frozenset[tuple[int, int]]
    weights: tuple[int, ...]
    topo_order: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not self.topo_order:
            self.topo_order = _topological_order(len(self.sccs), self.dag_edges)

    def predecessors(self) -> list[set[int]]:
        preds: list[set[int]] = [set() for _ in self.sccs]
        for u, v in self.dag_edges:
            preds[v].add(u)
        return preds


def _topological_order(n: int, edges: Iterable[tuple[int, int]]) -> tuple[int, ...]:
    indeg = [0] * n
    succ: list[list[int]] = [[] for _ in range(n)]
    for u, v in sorted(edges):
        indeg[v] += 1
        succ[u].append(v)
    ready = deque(sorted(i for i in range(n) if indeg[i] == 0))
    order = []
    while ready:
        u = ready.popleft()
        order.append(u)
        for v in succ[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                ready.append(v)
    if len(order) != n:
        raise ValueError("condensation contains a cycle")
    return tuple(order)


def condense(g: Digraph) -> Condensation:
    """Contract every SCC to a single weighted vertex; the result is acyclic."""
    comps = tarjan_scc(g.n, g.successors())
    comps = sorted((sorted(c) for c in comps), key=lambda c: c[0])
    member = {}
    for i, comp in enumerate(comps):
        for v in comp:
            member[v] = i
    dag_edges = frozenset(
        (member[u], member[v]) for u, v in g.edges if member[u] != member[v]
    )
    return Condensation(
        sccs=tuple(frozenset(c) for c in comps),
        dag_edges=dag_edges,
        weights=tuple(len(c) for c in comps),
    )


def order_ideals(cond: Condensation, limit: Optional[int] = None) -> list[frozenset[int]]:
    """All SCC-index sets closed under predecessors (no dag edge enters from outside)."""
    preds = cond.predecessors()
    order = cond.topo_order
    out: list[frozenset[int]] = []

    def rec(i: int, chosen: set[int]) -> bool:
        if limit is not None and len(out) >= limit:
            return False
        if i == len(order):
            out.append(frozenset(chosen))
            return True
        v = order[i]
        if not rec(i + 1, chosen):
            return False
        if preds[v] <= chosen:
            chosen.add(v)
            ok = rec(i + 1, chosen)
            chosen.remove(v)
            return ok
        return True

    rec(0, set())
    return out


def topo_prefix_ideals(cond: Condensation) -> list[frozenset[int]]:
    """The linear chain of ideals induced by the canonical topological order."""
    out = [frozenset()]
    chosen: set[int] = set()
    for v in cond.topo_order:
        chosen.add(v)
        out.append(frozenset(chosen))
    return out


def max_flow(n: int, arcs: dict[tuple[int, int], int], source: int, sink: int) -> tuple[int, set[int]]:
    """Edmonds-Karp max-flow; returns the flow value and the source-side cut."""
    cap = dict(arcs)
    adj: list[set[int]] = [set() for _ in range(n)]
    for (u, v) in arcs:
        adj[u].add(v)
        adj[v].add(u)
        cap.setdefault((v, u), 0)
    flow = 0
    while True:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            u = queue.popleft()
            for v in adj[u]:
                if v not in parent and cap.get((u, v), 0) > 0:
                    parent[v] = u
                    queue.append(v)
        if sink not in parent:
            reachable = set(parent)
            return flow, reachable
        path = [sink]
        while path[-1] != source:
            path.append(parent[path[-1]])
        path.reverse()
        bottleneck = min(cap[(path[i], path[i + 1])] for i in range(len(path) - 1))
        for i in range(len(path) - 1):
            u, v = path[i], path[i + 1]
            cap[(u, v)] -= bottleneck
            cap[(v, u)] += bottleneck
        flow += bottleneck


def to_dot(g: Digraph, title: str = "G") -> str:
    lines = [f"digraph {title} {{"]
    for i in range(g.n):
        lines.append(f'  n{i} [label="{g.names[i]}"];')
    for u, v in sorted(g.edges):
        lines.append(f"  n{u} -> n{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
