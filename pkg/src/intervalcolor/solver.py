"""Exhaustive backtracking search for interval colorings.

Edges are colored one at a time in a breadth-first order from vertex 1,
colors tried ascending, so results are deterministic: the same query
always yields the same witness. A negative answer is a proof of
nonexistence, not a timeout, unless a node budget was set and exhausted,
which is reported as an explicit inconclusive status.

Pruning rests on three facts about any completed interval t-coloring:
the colors at a vertex of degree d span exactly d consecutive integers,
so every incident color lies within d-1 of every other; a partial
palette with more gaps than uncolored incident edges can never become
consecutive; and every color in 1..t must end up on some edge, so a
color no future edge can take kills the branch. Disabling pruning falls
back to plain proper-coloring enumeration with a full check at each
leaf, which visits more nodes but accepts the same leaves in the same
order.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass
from typing import Mapping

from .coloring import EdgeColoring
from .constructions import color_count_bounds
from .graph import Edge, Graph

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
INCONCLUSIVE = "inconclusive"


class SearchLimitError(RuntimeError):
    """A definite answer was required but the node budget ran out."""


class _BudgetExhausted(Exception):
    pass


@dataclass(frozen=True)
class SearchOutcome:
    """Result of one bounded search at a fixed color count."""

    status: str
    t: int
    coloring: EdgeColoring | None
    nodes: int


@dataclass(frozen=True)
class SpectrumEntry:
    """Per-t line item of a spectrum sweep, for tables and CSV export."""

    t: int
    status: str
    nodes: int
    millis: float


@dataclass(frozen=True)
class SpectrumReport:
    """Feasible color counts of a graph over a swept range.

    min_colors / max_colors are None when the sweep did not settle them:
    min_colors needs every t below the smallest feasible value decided,
    max_colors additionally needs the sweep to reach the upper bound
    beyond which no interval coloring can exist.
    """

    vertex_count: int
    edge_count: int
    t_min_searched: int
    t_max_searched: int
    feasible_t: tuple[int, ...]
    inconclusive_t: tuple[int, ...]
    min_colors: int | None
    max_colors: int | None
    witnesses: Mapping[int, EdgeColoring]
    entries: tuple[SpectrumEntry, ...]
    nodes_searched: int
    elapsed_ms: float

    def to_json_dict(self) -> dict:
        return {
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "t_min_searched": self.t_min_searched,
            "t_max_searched": self.t_max_searched,
            "feasible_t": list(self.feasible_t),
            "inconclusive_t": list(self.inconclusive_t),
            "min_colors": self.min_colors,
            "max_colors": self.max_colors,
            "nodes_searched": self.nodes_searched,
            "elapsed_ms": self.elapsed_ms,
            "witnesses": {
                str(t): c.to_json_dict() for t, c in sorted(self.witnesses.items())
            },
        }


def bfs_edge_order(g: Graph) -> list[Edge]:
    """Edges in first-seen order of a BFS from vertex 1 (sorted adjacency).

    Keeps each new edge adjacent to already-ordered ones, which is what
    makes the per-vertex pruning bite early.
    """
    order: list[Edge] = []
    seen_edges: set[Edge] = set()
    seen = [False] * (g.vertex_count + 1)
    seen[1] = True
    queue = deque([1])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if not seen[w]:
                seen[w] = True
                queue.append(w)
            e = (u, w) if u < w else (w, u)
            if e not in seen_edges:
                seen_edges.add(e)
                order.append(e)
    return order


def search_interval_coloring(
    g: Graph,
    t: int,
    *,
    prune: bool = True,
    reflect: bool = False,
    node_limit: int | None = None,
) -> SearchOutcome:
    """Decide whether g has an interval t-coloring, with a witness if so.

    A node is one attempted edge-color assignment; the search gives up
    with INCONCLUSIVE rather than try more than node_limit of them.
    reflect=True restricts the first edge to colors up to ceil(t/2),
    sound for the verdict because flipping every color c to t+1-c turns
    any interval t-coloring into another one; the witness may then
    differ from the unrestricted search's.
    """
    if not isinstance(t, int) or t < 1:
        raise ValueError(f"color count t must be a positive integer, got {t!r}")
    if node_limit is not None and node_limit < 1:
        raise ValueError(f"node_limit must be positive, got {node_limit!r}")

    order = bfs_edge_order(g)
    m = len(order)
    nv = g.vertex_count
    deg = [0] * (nv + 1)
    for x in range(1, nv + 1):
        deg[x] = g.degree(x)

    vmin = [0] * (nv + 1)
    vmax = [0] * (nv + 1)
    vcnt = [0] * (nv + 1)
    vmask = [0] * (nv + 1)
    usage = [0] * (t + 1)
    assigned = [0] * m
    unused = t
    nodes = 0
    first_edge_cap = (t + 1) // 2 if reflect else t
    witness: dict[Edge, int] | None = None

    def window(x: int) -> tuple[int, int]:
        if vcnt[x] == 0:
            return 1, t
        d = deg[x]
        lo = vmax[x] - d + 1
        hi = vmin[x] + d - 1
        return (lo if lo > 1 else 1), (hi if hi < t else t)

    def every_unused_color_hosted(skip: int, i: int) -> bool:
        # exact check: each still-unused color must fit some future edge
        for cc in range(1, t + 1):
            if usage[cc] != 0 or cc == skip:
                continue
            hosted = False
            for j in range(i + 1, m):
                a, b = order[j]
                la, ha = window(a)
                if cc < la or cc > ha:
                    continue
                lb, hb = window(b)
                if cc < lb or cc > hb:
                    continue
                if ((vmask[a] | vmask[b]) >> cc) & 1:
                    continue
                hosted = True
                break
            if not hosted:
                return False
        return True

    def rec(i: int) -> bool:
        nonlocal unused, nodes, witness
        if i == m:
            if unused != 0:
                return False
            if not prune:
                for x in range(1, nv + 1):
                    if vcnt[x] and vmax[x] - vmin[x] + 1 != deg[x]:
                        return False
            witness = {order[j]: assigned[j] for j in range(m)}
            return True
        u, v = order[i]
        if prune:
            lo_u, hi_u = window(u)
            lo_v, hi_v = window(v)
            lo = lo_u if lo_u > lo_v else lo_v
            hi = hi_u if hi_u < hi_v else hi_v
        else:
            lo, hi = 1, t
        if i == 0 and hi > first_edge_cap:
            hi = first_edge_cap
        both = vmask[u] | vmask[v]
        rem_after = m - i - 1
        save_u = (vmin[u], vmax[u], vcnt[u])
        save_v = (vmin[v], vmax[v], vcnt[v])
        for c in range(lo, hi + 1):
            if (both >> c) & 1:
                continue
            if node_limit is not None and nodes >= node_limit:
                raise _BudgetExhausted
            nodes += 1
            new_unused = unused - 1 if usage[c] == 0 else unused
            ok = True
            for x in (u, v):
                if vcnt[x] == 0:
                    vmin[x] = vmax[x] = c
                else:
                    if c < vmin[x]:
                        vmin[x] = c
                    if c > vmax[x]:
                        vmax[x] = c
                vcnt[x] += 1
                if prune:
                    gaps = (vmax[x] - vmin[x] + 1) - vcnt[x]
                    if gaps > deg[x] - vcnt[x]:
                        ok = False
            if prune and ok and new_unused > rem_after:
                ok = False
            if prune and ok and new_unused > 0:
                ok = every_unused_color_hosted(c, i)
            if ok:
                vmask[u] |= 1 << c
                vmask[v] |= 1 << c
                usage[c] += 1
                old_unused = unused
                unused = new_unused
                assigned[i] = c
                if rec(i + 1):
                    return True
                usage[c] -= 1
                vmask[u] &= ~(1 << c)
                vmask[v] &= ~(1 << c)
                unused = old_unused
            vmin[u], vmax[u], vcnt[u] = save_u
            vmin[v], vmax[v], vcnt[v] = save_v
        return False

    try:
        found = rec(0)
    except _BudgetExhausted:
        return SearchOutcome(INCONCLUSIVE, t, None, nodes)
    if found:
        assert witness is not None
        return SearchOutcome(FEASIBLE, t, EdgeColoring(t, witness), nodes)
    return SearchOutcome(INFEASIBLE, t, None, nodes)


def find_interval_coloring(
    g: Graph,
    t: int,
    *,
    prune: bool = True,
    node_limit: int | None = None,
) -> EdgeColoring | None:
    """First interval t-coloring in search order, or None if none exists.

    None is a nonexistence proof: the search is exhaustive. If a node
    budget is given and runs out, raises SearchLimitError instead of
    guessing.
    """
    outcome = search_interval_coloring(g, t, prune=prune, node_limit=node_limit)
    if outcome.status == INCONCLUSIVE:
        raise SearchLimitError(
            f"node budget {node_limit} exhausted at t={t} without a verdict"
        )
    return outcome.coloring


def interval_spectrum(
    g: Graph,
    t_cap: int | str = "auto",
    *,
    prune: bool = True,
    node_limit: int | None = None,
) -> SpectrumReport:
    """Sweep t over [max_degree .. cap] and report the feasible set.

    Any interval coloring needs at least max_degree colors (the palette
    at a busiest vertex), and no interval coloring of a connected graph
    uses more than the diameter-based bound from color_count_bounds, so
    cap="auto" makes the sweep a complete decision of the spectrum. An
    integer cap trades completeness at the top for time; node_limit is
    applied per t, and budget-exhausted values land in inconclusive_t.
    """
    delta = g.max_degree()
    bound = color_count_bounds(g).applicable_bound
    if t_cap == "auto":
        cap = bound
    elif isinstance(t_cap, int) and not isinstance(t_cap, bool):
        if t_cap < delta:
            raise ValueError(f"cap {t_cap} is below the max degree {delta}")
        cap = t_cap
    else:
        raise ValueError(f't_cap must be "auto" or an integer, got {t_cap!r}')
    t_lo = max(delta, 1)

    feasible: list[int] = []
    inconclusive: list[int] = []
    witnesses: dict[int, EdgeColoring] = {}
    entries: list[SpectrumEntry] = []
    total_nodes = 0
    sweep_start = time.perf_counter()
    for t in range(t_lo, cap + 1):
        start = time.perf_counter()
        outcome = search_interval_coloring(g, t, prune=prune, node_limit=node_limit)
        millis = (time.perf_counter() - start) * 1000.0
        entries.append(SpectrumEntry(t, outcome.status, outcome.nodes, millis))
        total_nodes += outcome.nodes
        if outcome.status == FEASIBLE:
            feasible.append(t)
            assert outcome.coloring is not None
            witnesses[t] = outcome.coloring
        elif outcome.status == INCONCLUSIVE:
            inconclusive.append(t)
    elapsed_ms = (time.perf_counter() - sweep_start) * 1000.0

    min_colors = None
    max_colors = None
    if feasible:
        if all(t > feasible[0] for t in inconclusive):
            min_colors = feasible[0]
        if cap >= bound and all(t < feasible[-1] for t in inconclusive):
            max_colors = feasible[-1]

    return SpectrumReport(
        vertex_count=g.vertex_count,
        edge_count=g.edge_count,
        t_min_searched=t_lo,
        t_max_searched=cap,
        feasible_t=tuple(feasible),
        inconclusive_t=tuple(inconclusive),
        min_colors=min_colors,
        max_colors=max_colors,
        witnesses=witnesses,
        entries=tuple(entries),
        nodes_searched=total_nodes,
        elapsed_ms=elapsed_ms,
    )


def chromatic_index_is_delta(g: Graph, *, node_limit: int | None = None) -> bool:
    """Whether g has a proper edge coloring with exactly max_degree colors.

    Exhaustive backtracking over the BFS edge order. New colors are
    introduced in order (an edge may take at most one more than the
    largest color used so far), which removes color-permutation
    symmetry. For a regular graph this decides interval colorability.
    """
    delta = g.max_degree()
    order = bfs_edge_order(g)
    m = len(order)
    if m == 0:
        return True
    if node_limit is not None and node_limit < 1:
        raise ValueError(f"node_limit must be positive, got {node_limit!r}")

    vmask = [0] * (g.vertex_count + 1)
    nodes = 0

    def rec(i: int, highest: int) -> bool:
        nonlocal nodes
        if i == m:
            return True
        u, v = order[i]
        both = vmask[u] | vmask[v]
        limit = min(delta, highest + 1)
        for c in range(1, limit + 1):
            if (both >> c) & 1:
                continue
            if node_limit is not None and nodes >= node_limit:
                raise _BudgetExhausted
            nodes += 1
            bit = 1 << c
            vmask[u] |= bit
            vmask[v] |= bit
            if rec(i + 1, highest if c <= highest else c):
                return True
            vmask[u] &= ~bit
            vmask[v] &= ~bit
        return False

    try:
        return rec(0, 0)
    except _BudgetExhausted:
        raise SearchLimitError(
            f"node budget {node_limit} exhausted without a verdict"
        ) from None


def chromatic_index(g: Graph, *, node_limit: int | None = None) -> int:
    """Minimum colors in any proper edge coloring of g.

    Always max_degree or max_degree + 1, so one search settles it.
    """
    delta = g.max_degree()
    if g.edge_count == 0:
        return 0
    return delta if chromatic_index_is_delta(g, node_limit=node_limit) else delta + 1


def is_interval_colorable(g: Graph, *, node_limit: int | None = None) -> bool:
    """Whether g has an interval t-coloring for at least one t.

    An edgeless graph has none (color 1 is never used). A regular graph
    has one exactly when its chromatic index equals its degree, which is
    a much cheaper search. Other graphs get a full spectrum sweep with
    the automatic cap; the sweep range covers every t that could ever be
    feasible, so an empty result is a genuine no. Raises SearchLimitError
    if a node budget left any swept t undecided while none was feasible.
    """
    if g.edge_count == 0:
        return False
    if g.is_regular():
        return chromatic_index_is_delta(g, node_limit=node_limit)
    report = interval_spectrum(g, "auto", node_limit=node_limit)
    if report.feasible_t:
        return True
    if report.inconclusive_t:
        raise SearchLimitError(
            f"undecided at t in {list(report.inconclusive_t)} under node budget {node_limit}"
        )
    return False
