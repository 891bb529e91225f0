"""Fault sets, cut predicates, and the exhaustive/randomized cut searches.

Everything here is deterministic for a fixed seed: enumeration is by
subset size ascending and lexicographic within a size, parallel runs
partition the work by the smallest fault element (or by fixed-size trial
blocks), and merges pick the lexicographically least candidate.  A run
with 8 workers therefore returns byte-identical results to a run with 1.
"""

from __future__ import annotations

import itertools
import multiprocessing
import os
import random
from dataclasses import dataclass

from .cayley import (
    CayleyGraph,
    CutAnalysis,
    DenseGraph,
    _as_dense,
    component_analysis,
    enumerate_4cycles,
)
from .genset import describe
from .perms import perm_string

#: randomized procedures consume randomness in fixed-size trial blocks so
#: that results do not depend on how blocks land on workers
TRIAL_BLOCK = 4096


def resolve_workers(workers: int | None = None) -> int:
    """Worker count: explicit argument, else UGCONN_WORKERS, else CPU count."""
    if workers is None:
        env = os.environ.get("UGCONN_WORKERS", "").strip()
        if env:
            workers = int(env)
        else:
            workers = os.cpu_count() or 1
    return max(1, int(workers))


# ---------------------------------------------------------------------------
# predicates


def is_vertex_cut(g, fault) -> bool:
    return component_analysis(_as_dense(g), fault).component_count >= 2


def is_cyclic_cut(g, fault) -> bool:
    """True iff g - fault is disconnected with >= 2 cycle-carrying components."""
    analysis = component_analysis(_as_dense(g), fault)
    if analysis.component_count < 2:
        return False
    return analysis.cyclic_component_count() >= 2


def is_good_neighbor_cut(g, fault, good: int) -> bool:
    """True iff g - fault is disconnected and every survivor keeps >= good neighbors.

    Degrees are evaluated over all survivors on both sides of the cut.
    With good=0 this is plain disconnection.
    """
    if good < 0:
        raise ValueError("neighbor requirement must be >= 0")
    dense = _as_dense(g)
    analysis = component_analysis(dense, fault)
    if analysis.component_count < 2:
        return False
    if good == 0:
        return True
    fs = set(fault)
    for v in range(dense.order):
        if v in fs:
            continue
        deg = sum(1 for w in dense.neighbors[v] if w not in fs)
        if deg < good:
            return False
    return True


def large_component_profile(g, fault) -> tuple[int, int]:
    """(size of the largest component, vertices outside it) after removal."""
    analysis = component_analysis(_as_dense(g), fault)
    return analysis.largest(), analysis.residual()


def vertex_boundary(g, members) -> tuple[int, ...]:
    """N(S) minus S, sorted."""
    dense = _as_dense(g)
    s = set(members)
    out = set()
    for v in s:
        out.update(dense.neighbors[v])
    return tuple(sorted(out - s))


def build_cycle_neighborhood_cut(G: CayleyGraph, cycle) -> tuple[int, ...]:
    """Fault set N(V(C)) minus V(C) for a 4-cycle C, given in cycle order."""
    cyc = tuple(cycle)
    if len(cyc) != 4 or len(set(cyc)) != 4:
        raise ValueError("cycle must list 4 distinct vertices")
    for i in range(4):
        if not G.dense.adjacent(cyc[i], cyc[(i + 1) % 4]):
            raise ValueError(
                f"vertices {cyc[i]} and {cyc[(i + 1) % 4]} are not adjacent"
            )
    return vertex_boundary(G, cyc)


# ---------------------------------------------------------------------------
# witnesses


@dataclass(frozen=True)
class CutWitness:
    kind: str  # "vertex-cut" | "good-neighbor-cut(g)" | "cyclic-cut"
    fault: tuple[int, ...]
    analysis: CutAnalysis

    @property
    def size(self) -> int:
        return len(self.fault)


def render_witness(G: CayleyGraph, witness: CutWitness) -> str:
    """Witness file: header lines, then one permutation string per fault vertex."""
    lines = [
        f"kind={witness.kind}",
        f"size={witness.size}",
        f"graph={describe(G.gen)}",
    ]
    lines.extend(G.perm_str(u) for u in witness.fault)
    return "\n".join(lines) + "\n"


def _make_witness(dense: DenseGraph, fault: tuple[int, ...], kind: str) -> CutWitness:
    analysis = component_analysis(dense, fault)
    assert analysis.component_count >= 2, "witness must disconnect"
    if kind == "cyclic-cut":
        assert analysis.cyclic_component_count() >= 2, "witness must leave two cycles"
    return CutWitness(kind=kind, fault=fault, analysis=analysis)


# ---------------------------------------------------------------------------
# vertex connectivity via unit-capacity max-flow (vertex splitting)


@dataclass(frozen=True)
class ConnectivityResult:
    value: int
    complete: bool  # complete graphs get the |V|-1 convention
    cut: tuple[int, ...] | None  # a minimum vertex cut, when one exists


class _FlowNet:
    """Vertex-split unit-capacity network; node 2v = v_in, 2v+1 = v_out."""

    def __init__(self, dense: DenseGraph):
        self.order = dense.order
        self.to: list[int] = []
        self.base: list[int] = []
        self.adj: list[list[int]] = [[] for _ in range(2 * dense.order)]
        for v in range(dense.order):
            self._arc(2 * v, 2 * v + 1, 1)
        for u in range(dense.order):
            for v in dense.neighbors[u]:
                # edge arcs are effectively infinite so min cuts consist of
                # splitter arcs only, which is what the witness reads off
                self._arc(2 * u + 1, 2 * v, dense.order)
        self.cap: list[int] = []

    def _arc(self, u: int, v: int, c: int) -> None:
        self.adj[u].append(len(self.to))
        self.to.append(v)
        self.base.append(c)
        self.adj[v].append(len(self.to))
        self.to.append(u)
        self.base.append(0)

    def max_flow(self, s: int, t: int, cutoff: int) -> int:
        """Unit augmenting paths from s to t, stopping early at cutoff."""
        self.cap = self.base[:]
        cap, to, adj = self.cap, self.to, self.adj
        flow = 0
        nnodes = len(adj)
        while flow < cutoff:
            pred = [-1] * nnodes
            pred[s] = -2
            queue = [s]
            found = False
            for u in queue:
                for eid in adj[u]:
                    w = to[eid]
                    if cap[eid] > 0 and pred[w] == -1:
                        pred[w] = eid
                        if w == t:
                            found = True
                            break
                        queue.append(w)
                if found:
                    break
            if not found:
                break
            v = t
            while v != s:
                eid = pred[v]
                cap[eid] -= 1
                cap[eid ^ 1] += 1
                v = to[eid ^ 1]
            flow += 1
        return flow

    def min_cut_vertices(self, s: int) -> tuple[int, ...]:
        """Split vertices saturated by the last flow, via residual reachability."""
        cap, to, adj = self.cap, self.to, self.adj
        seen = [False] * len(adj)
        seen[s] = True
        queue = [s]
        for u in queue:
            for eid in adj[u]:
                w = to[eid]
                if cap[eid] > 0 and not seen[w]:
                    seen[w] = True
                    queue.append(w)
        return tuple(
            v for v in range(self.order) if seen[2 * v] and not seen[2 * v + 1]
        )


def vertex_connectivity_detail(g, all_pairs: bool = False) -> ConnectivityResult:
    """kappa(G) by Menger: minimum s-t disjoint paths over non-adjacent pairs.

    The default fixes the source at vertex 0 and scans all non-neighbors,
    which is justified on vertex-transitive graphs; all_pairs=True is the
    debug mode that scans every non-adjacent pair.
    """
    dense = _as_dense(g)
    order = dense.order
    if order <= 1:
        return ConnectivityResult(value=0, complete=True, cut=None)
    if all(len(dense.neighbors[v]) == order - 1 for v in range(order)):
        return ConnectivityResult(value=order - 1, complete=True, cut=None)
    net = _FlowNet(dense)
    if all_pairs:
        pairs = [
            (u, v)
            for u in range(order)
            for v in range(u + 1, order)
            if not dense.adjacent(u, v)
        ]
    else:
        nbrs = set(dense.neighbors[0])
        pairs = [(0, t) for t in range(1, order) if t not in nbrs]
    best = order  # kappa < |V| once a non-adjacent pair exists
    arg = None
    for s, t in pairs:
        f = net.max_flow(2 * s + 1, 2 * t, best)
        if f < best:
            best = f
            arg = (s, t)
    cut = None
    if arg is not None:
        s, t = arg
        net.max_flow(2 * s + 1, 2 * t, best + 1)
        cut = net.min_cut_vertices(2 * s + 1)
    return ConnectivityResult(value=best, complete=False, cut=cut)


def vertex_connectivity(g, all_pairs: bool = False) -> int:
    return vertex_connectivity_detail(g, all_pairs=all_pairs).value


# ---------------------------------------------------------------------------
# shared worker plumbing
#
# Workers receive the graph once through the pool initializer and read it
# from module state; tasks are small tuples.  Merging never depends on
# completion order, so results are worker-count independent.

_SHARED: dict = {}


def _pool_init(payload: dict) -> None:
    _SHARED.clear()
    _SHARED.update(payload)


def _run_tasks(payload: dict, func, tasks: list, workers: int) -> list:
    if workers <= 1 or len(tasks) <= 1:
        _pool_init(payload)
        return [func(t) for t in tasks]
    ctx = multiprocessing.get_context("fork")
    chunk = max(1, len(tasks) // (workers * 8))
    with ctx.Pool(workers, initializer=_pool_init, initargs=(payload,)) as pool:
        return pool.map(func, tasks, chunksize=chunk)


def _graph_payload(dense: DenseGraph) -> dict:
    return {
        "masks": dense.masks,
        "neighbors": dense.neighbors,
        "order": dense.order,
        "full": dense.full_mask,
    }


def _reach(masks, alive: int, start_bit: int) -> int:
    """Bitmask of the component of alive containing start_bit."""
    reach = start_bit
    frontier = start_bit
    while frontier:
        nxt = 0
        f = frontier
        while f:
            b = f & -f
            f ^= b
            nxt |= masks[b.bit_length() - 1]
        frontier = nxt & alive & ~reach
        reach |= frontier
    return reach


def _component_masks(masks, alive: int) -> list[int]:
    comps = []
    rem = alive
    while rem:
        c = _reach(masks, rem, rem & -rem)
        comps.append(c)
        rem &= ~c
    return comps


def _cyclic_component_count(masks, comps: list[int], stop_at: int = 2) -> int:
    count = 0
    for c in comps:
        verts = c.bit_count()
        edges = 0
        m = c
        while m:
            b = m & -m
            m ^= b
            edges += (masks[b.bit_length() - 1] & c).bit_count()
        if edges // 2 >= verts:
            count += 1
            if count >= stop_at:
                return count
    return count


# ---------------------------------------------------------------------------
# exhaustive minimum-cut search


def _search_task(task: tuple[int, int]):
    """Earliest fault with the given (size, first element) hitting the predicate."""
    size, first = task
    masks = _SHARED["masks"]
    order = _SHARED["order"]
    full = _SHARED["full"]
    pred = _SHARED["pred"]
    good = _SHARED["good"]
    base = 1 << first
    for rest in itertools.combinations(range(first + 1, order), size - 1):
        fmask = base
        for v in rest:
            fmask |= 1 << v
        alive = full ^ fmask
        reach = _reach(masks, alive, alive & -alive)
        if reach == alive:
            continue
        if pred == "vertex":
            return (first, *rest)
        if pred == "good":
            m = alive
            ok = True
            while m:
                b = m & -m
                m ^= b
                if (masks[b.bit_length() - 1] & alive).bit_count() < good:
                    ok = False
                    break
            if ok:
                return (first, *rest)
            continue
        # cyclic: need two components that each carry a cycle
        comps = [reach] + _component_masks(masks, alive & ~reach)
        if _cyclic_component_count(masks, comps) >= 2:
            return (first, *rest)
    return None


def _min_cut_search(
    g, pred: str, good: int, max_size: int, workers: int | None, kind: str
) -> CutWitness | None:
    dense = _as_dense(g)
    nworkers = resolve_workers(workers)
    payload = _graph_payload(dense)
    payload["pred"] = pred
    payload["good"] = good
    for size in range(1, min(max_size, dense.order - 1) + 1):
        tasks = [(size, first) for first in range(dense.order - size + 1)]
        results = _run_tasks(payload, _search_task, tasks, nworkers)
        hits = [r for r in results if r is not None]
        if hits:
            return _make_witness(dense, min(hits), kind)
    return None


def min_cyclic_cut_exhaustive(g, max_size: int, workers: int | None = None):
    """Lexicographically least minimum cyclic cut of size <= max_size, or None.

    Plain enumeration over all vertex subsets, sizes ascending.  Absence is
    a valid (and for the lower bounds, the desired) result.
    """
    return _min_cut_search(g, "cyclic", 0, max_size, workers, "cyclic-cut")


def min_good_neighbor_cut_exhaustive(
    g, good: int, max_size: int, workers: int | None = None
):
    """Least cut of size <= max_size after which all survivors keep >= good neighbors."""
    if good == 0:
        return _min_cut_search(g, "vertex", 0, max_size, workers, "vertex-cut")
    witness = _min_cut_search(
        g, "good", good, max_size, workers, f"good-neighbor-cut({good})"
    )
    if witness is not None and good >= 2:
        # minimum degree 2 in every surviving component forces a cycle there
        assert witness.analysis.cyclic_component_count() >= 2
    return witness


# ---------------------------------------------------------------------------
# disconnection census (one sweep feeds several bounds)


@dataclass(frozen=True)
class SizeCensus:
    """Aggregates over every fault set of one size."""

    size: int
    subsets: int
    disconnecting: int
    cyclic_cuts: int
    good2_cuts: int
    isolating: int  # exactly two components, one of them a single vertex
    neighborhood_faults: int  # fault set equals N(v) of the isolated vertex
    max_residual: int  # max vertices outside the largest component
    worst_fault: tuple[int, ...] | None  # least fault attaining max_residual
    first_cyclic: tuple[int, ...] | None
    first_good2: tuple[int, ...] | None


def _census_task(task: tuple[int, int]):
    size, first = task
    masks = _SHARED["masks"]
    order = _SHARED["order"]
    full = _SHARED["full"]
    base = 1 << first
    subsets = 0
    disconnecting = 0
    cyclic = 0
    good2 = 0
    isolating = 0
    nbhd = 0
    max_residual = 0
    worst = None
    first_cyclic = None
    first_good2 = None
    for rest in itertools.combinations(range(first + 1, order), size - 1):
        subsets += 1
        fmask = base
        for v in rest:
            fmask |= 1 << v
        alive = full ^ fmask
        reach = _reach(masks, alive, alive & -alive)
        if reach == alive:
            continue
        disconnecting += 1
        comps = [reach] + _component_masks(masks, alive & ~reach)
        sizes = [c.bit_count() for c in comps]
        largest = max(sizes)
        residual = sum(sizes) - largest
        if residual > max_residual:
            max_residual = residual
            worst = (first, *rest)
        if len(comps) == 2 and residual == 1:
            isolating += 1
            single = comps[sizes.index(1)]
            if masks[single.bit_length() - 1] == fmask:
                nbhd += 1
        if _cyclic_component_count(masks, comps) >= 2:
            cyclic += 1
            if first_cyclic is None:
                first_cyclic = (first, *rest)
        m = alive
        ok = True
        while m:
            b = m & -m
            m ^= b
            if (masks[b.bit_length() - 1] & alive).bit_count() < 2:
                ok = False
                break
        if ok:
            good2 += 1
            if first_good2 is None:
                first_good2 = (first, *rest)
    return (
        size,
        subsets,
        disconnecting,
        cyclic,
        good2,
        isolating,
        nbhd,
        max_residual,
        worst,
        first_cyclic,
        first_good2,
    )


def disconnection_census(
    g, max_size: int, workers: int | None = None
) -> tuple[SizeCensus, ...]:
    """Exhaustive per-size census of all fault sets up to max_size.

    Counts disconnecting sets, cyclic cuts, 2-good-neighbor cuts, and the
    two-components-one-isolated pattern, and tracks the worst residual.
    One sweep serves the isolation, large-component, and residue bounds.
    """
    dense = _as_dense(g)
    nworkers = resolve_workers(workers)
    payload = _graph_payload(dense)
    top = min(max_size, dense.order - 1)
    tasks = [
        (size, first)
        for size in range(1, top + 1)
        for first in range(dense.order - size + 1)
    ]
    rows = _run_tasks(payload, _census_task, tasks, nworkers)
    out = []
    for size in range(1, top + 1):
        mine = [r for r in rows if r[0] == size]
        subsets = sum(r[1] for r in mine)
        disconnecting = sum(r[2] for r in mine)
        cyclic = sum(r[3] for r in mine)
        good2 = sum(r[4] for r in mine)
        isolating = sum(r[5] for r in mine)
        nbhd = sum(r[6] for r in mine)
        max_residual = max(r[7] for r in mine)
        worsts = [r[8] for r in mine if r[7] == max_residual and r[8] is not None]
        cyclics = [r[9] for r in mine if r[9] is not None]
        good2s = [r[10] for r in mine if r[10] is not None]
        out.append(
            SizeCensus(
                size=size,
                subsets=subsets,
                disconnecting=disconnecting,
                cyclic_cuts=cyclic,
                good2_cuts=good2,
                isolating=isolating,
                neighborhood_faults=nbhd,
                max_residual=max_residual,
                worst_fault=min(worsts) if worsts else None,
                first_cyclic=min(cyclics) if cyclics else None,
                first_good2=min(good2s) if good2s else None,
            )
        )
    return tuple(out)


# ---------------------------------------------------------------------------
# connectivity-under-removal sweep (residue bound with p=1)


@dataclass(frozen=True)
class RemovalSweep:
    ok: bool
    counterexample: tuple[int, ...] | None  # a fault set that disconnects
    removals: int  # subsets actually enumerated
    mode: str  # "plain" or "articulation"


def _plain_removal_task(task: tuple[int, int]):
    size, first = task
    masks = _SHARED["masks"]
    order = _SHARED["order"]
    full = _SHARED["full"]
    base = 1 << first
    count = 0
    for rest in itertools.combinations(range(first + 1, order), size - 1):
        count += 1
        fmask = base
        for v in rest:
            fmask |= 1 << v
        alive = full ^ fmask
        if _reach(masks, alive, alive & -alive) != alive:
            return count, (first, *rest)
    return count, None


def _articulation_task(task: tuple[int, int]):
    """Scan removals of one (size, first) slice for disconnection or cut vertices.

    A disconnected removal ends the slice early (it is the least candidate
    of its size, and smaller sizes always win).  Articulation candidates
    are one vertex larger, so the scan must finish the slice and keep the
    lexicographic minimum to stay exact against the plain mode.
    """
    size, first = task
    neighbors = _SHARED["neighbors"]
    order = _SHARED["order"]
    if size == 0:
        removals: list[tuple[int, ...]] = [()]
    else:
        removals = [
            (first, *rest)
            for rest in itertools.combinations(range(first + 1, order), size - 1)
        ]
    count = 0
    best: tuple[int, ...] | None = None
    for removed in removals:
        count += 1
        bad = _disconnect_or_articulation(neighbors, order, removed)
        if bad is None:
            continue
        if len(bad) == len(removed):
            return count, bad  # the removal itself disconnects
        if best is None or bad < best:
            best = bad
    return count, best


def _disconnect_or_articulation(neighbors, order, removed):
    """Least fault set (the removal, possibly plus one cut vertex) that disconnects.

    Runs one iterative lowlink pass over the graph minus ``removed``.
    Returns the removal itself when the remainder is already disconnected,
    the removal plus its smallest cut vertex when one exists, and None
    when the remainder is connected and 2-connected.
    """
    dead = bytearray(order)
    for v in removed:
        dead[v] = 1
    start = 0
    while dead[start]:
        start += 1
    disc = [0] * order
    low = [0] * order
    parent = [-1] * order
    timer = 1
    disc[start] = low[start] = 1
    path = [start]
    iters = [iter(neighbors[start])]
    root_children = 0
    cut_vertex = -1
    while path:
        v = path[-1]
        advanced = False
        for w in iters[-1]:
            if dead[w]:
                continue
            if not disc[w]:
                timer += 1
                disc[w] = low[w] = timer
                parent[w] = v
                if v == start:
                    root_children += 1
                path.append(w)
                iters.append(iter(neighbors[w]))
                advanced = True
                break
            if w != parent[v] and disc[w] < low[v]:
                low[v] = disc[w]
        if not advanced:
            path.pop()
            iters.pop()
            if path:
                u = path[-1]
                if low[v] < low[u]:
                    low[u] = low[v]
                if u != start and low[v] >= disc[u]:
                    if cut_vertex < 0 or u < cut_vertex:
                        cut_vertex = u
    if timer != order - len(removed):
        return tuple(removed)  # already disconnected
    if root_children >= 2 and (cut_vertex < 0 or start < cut_vertex):
        cut_vertex = start
    if cut_vertex >= 0:
        return tuple(sorted((*removed, cut_vertex)))
    return None


def verify_connected_under_removal(
    g, max_size: int, workers: int | None = None, accelerated: bool = True
) -> RemovalSweep:
    """Certify that no fault set of size <= max_size disconnects g.

    Plain mode enumerates every fault set and BFS-checks it.  Accelerated
    mode enumerates only sets of size <= max_size-1 and additionally
    requires the remainder to have no cut vertex, which is equivalent:
    a disconnecting set F of size s factors as a removal of size s-1 whose
    remainder is either disconnected or has the last element of F as a cut
    vertex.  The accelerated mode is cross-checked against plain mode in
    the test suite.
    """
    dense = _as_dense(g)
    nworkers = resolve_workers(workers)
    payload = _graph_payload(dense)
    order = dense.order
    if accelerated:
        tasks: list[tuple[int, int]] = [(0, 0)]
        for size in range(1, max_size):
            tasks.extend((size, first) for first in range(order - size + 1))
        rows = _run_tasks(payload, _articulation_task, tasks, nworkers)
        mode = "articulation"
    else:
        tasks = [
            (size, first)
            for size in range(1, max_size + 1)
            for first in range(order - size + 1)
        ]
        rows = _run_tasks(payload, _plain_removal_task, tasks, nworkers)
        mode = "plain"
    removals = sum(r[0] for r in rows)
    bads = [r[1] for r in rows if r[1] is not None]
    bad = min(bads, key=lambda f: (len(f), f)) if bads else None
    return RemovalSweep(ok=bad is None, counterexample=bad, removals=removals, mode=mode)


# ---------------------------------------------------------------------------
# sampled residue bound (sizes where exhaustion is infeasible)


@dataclass(frozen=True)
class SampledResidual:
    ok: bool
    trials: int
    templates: int
    seed: int
    violations: int
    counterexample: tuple[int, ...] | None


def _residual_of(masks, full, fault) -> int:
    fmask = 0
    for v in fault:
        fmask |= 1 << v
    alive = full ^ fmask
    if not alive:
        return 0
    reach = _reach(masks, alive, alive & -alive)
    if reach == alive:
        return 0
    comps = [reach] + _component_masks(masks, alive & ~reach)
    sizes = [c.bit_count() for c in comps]
    return sum(sizes) - max(sizes)


def _template_task(task: tuple[int, int]):
    """All fault sets N(v) plus extra vertices for one v; first violation.

    The extra count is capped so templates never exceed the size scope of
    the surrounding check.
    """
    _, v = task
    masks = _SHARED["masks"]
    neighbors = _SHARED["neighbors"]
    order = _SHARED["order"]
    full = _SHARED["full"]
    bound = _SHARED["bound"]
    extras = min(2, _SHARED["max_size"] - len(neighbors[v]))
    if extras < 0:
        return 0, None
    closed = set(neighbors[v]) | {v}
    rest = [x for x in range(order) if x not in closed]
    count = 0
    for extra in itertools.combinations(rest, extras):
        count += 1
        fault = (*neighbors[v], *extra)
        if _residual_of(masks, full, fault) > bound:
            return count, tuple(sorted(fault))
    return count, None


def _sample_task(task: tuple[int, int]):
    """One block of random fault sets; returns (trials, first violation)."""
    _, block = task
    masks = _SHARED["masks"]
    order = _SHARED["order"]
    full = _SHARED["full"]
    bound = _SHARED["bound"]
    max_size = _SHARED["max_size"]
    min_size = _SHARED["min_size"]
    seed = _SHARED["seed"]
    trials = _SHARED["block_trials"][block]
    rng = random.Random((seed << 20) | block)
    span = max_size - min_size + 1
    for i in range(trials):
        size = min_size + (i % span)
        fault = rng.sample(range(order), size)
        if _residual_of(masks, full, fault) > bound:
            return trials, (i, tuple(sorted(fault)))
    return trials, None


def sampled_residual_check(
    g,
    max_size: int,
    bound: int,
    trials: int,
    seed: int = 0,
    workers: int | None = None,
    min_size: int | None = None,
) -> SampledResidual:
    """Seeded random + adversarial probe that residual stays <= bound.

    Adversarial templates are every N(v) plus two extra vertices (the
    near-misses for producing two small components); the random phase
    draws fault sets of the largest few sizes.  A pass supports the bound
    on the sampled evidence only, it proves nothing.
    """
    dense = _as_dense(g)
    nworkers = resolve_workers(workers)
    if min_size is None:
        min_size = max(1, max_size - 2)
    nblocks = (trials + TRIAL_BLOCK - 1) // TRIAL_BLOCK
    block_trials = [
        min(TRIAL_BLOCK, trials - b * TRIAL_BLOCK) for b in range(nblocks)
    ]
    payload = _graph_payload(dense)
    payload.update(
        bound=bound,
        max_size=max_size,
        min_size=min_size,
        seed=seed,
        block_trials=block_trials,
    )
    tasks = [(0, v) for v in range(dense.order)] + [(1, b) for b in range(nblocks)]
    template_rows = _run_tasks(
        payload, _template_task, [t for t in tasks if t[0] == 0], nworkers
    )
    sample_rows = _run_tasks(
        payload, _sample_task, [t for t in tasks if t[0] == 1], nworkers
    )
    templates = sum(r[0] for r in template_rows)
    done = sum(r[0] for r in sample_rows)
    bad: tuple[int, ...] | None = None
    violations = 0
    for _, hit in template_rows:
        if hit is not None:
            violations += 1
            if bad is None:
                bad = hit
    for _, hit in sample_rows:
        if hit is not None:
            violations += 1
            if bad is None:
                bad = hit[1]
    return SampledResidual(
        ok=violations == 0,
        trials=done,
        templates=templates,
        seed=seed,
        violations=violations,
        counterexample=bad,
    )


# ---------------------------------------------------------------------------
# minimum neighborhood over 4-element sets


def _four_subset_task(task: tuple[int, int]):
    """Min |N(S)| over 4-subsets with smallest element a."""
    _, a = task
    masks = _SHARED["masks"]
    order = _SHARED["order"]
    bits = _SHARED["bits"]
    best = order + 1
    arg = None
    ma = masks[a]
    sa = bits[a]
    for b in range(a + 1, order - 2):
        mab = ma | masks[b]
        sab = sa | bits[b]
        for c in range(b + 1, order - 1):
            mabc = mab | masks[c]
            sabc = sab | bits[c]
            for d in range(c + 1, order):
                cnt = ((mabc | masks[d]) & ~(sabc | bits[d])).bit_count()
                if cnt < best:
                    best = cnt
                    arg = (a, b, c, d)
    return best, arg


def min_neighborhood_over_4subsets(
    g, workers: int | None = None
) -> tuple[int, tuple[int, int, int, int]]:
    """Exhaustive min of |N(S) - S| over all 4-subsets, with least witness."""
    dense = _as_dense(g)
    nworkers = resolve_workers(workers)
    payload = _graph_payload(dense)
    payload["bits"] = [1 << v for v in range(dense.order)]
    tasks = [(0, a) for a in range(dense.order - 3)]
    rows = _run_tasks(payload, _four_subset_task, tasks, nworkers)
    best = min(r[0] for r in rows)
    args = [r[1] for r in rows if r[0] == best and r[1] is not None]
    return best, min(args)


def sampled_min_neighborhood(
    g, trials: int, seed: int = 0
) -> tuple[int, tuple[int, int, int, int], int]:
    """Best (smallest) |N(S)| found over templates plus random 4-subsets.

    Templates take S = a vertex with three of its neighbors, which is
    where the sharp small-neighborhood sets live.  Returns (best, witness,
    evaluations); no exhaustion is claimed.
    """
    dense = _as_dense(g)
    masks = dense.masks
    order = dense.order
    best = order + 1
    arg = None
    evals = 0

    def probe(quad):
        nonlocal best, arg, evals
        evals += 1
        smask = 0
        umask = 0
        for v in quad:
            smask |= 1 << v
            umask |= masks[v]
        cnt = (umask & ~smask).bit_count()
        if cnt < best:
            best = cnt
            arg = tuple(sorted(quad))

    for u in range(order):
        for triple in itertools.combinations(dense.neighbors[u], 3):
            probe((u, *triple))
    rng = random.Random(seed)
    for _ in range(trials):
        probe(rng.sample(range(order), 4))
    return best, arg, evals


# ---------------------------------------------------------------------------
# randomized cyclic-cut falsifier


def _falsify_block(task: tuple[int, int]):
    _, block = task
    masks = _SHARED["masks"]
    neighbors = _SHARED["neighbors"]
    order = _SHARED["order"]
    full = _SHARED["full"]
    target = _SHARED["target"]
    seed = _SHARED["seed"]
    cycles = _SHARED["cycles"]
    trials = _SHARED["block_trials"][block]
    rng = random.Random((seed << 20) | block)
    vertices = range(order)
    for i in range(trials):
        strat = i & 3 if cycles else 0
        if strat == 0:
            fault = set(rng.sample(vertices, target))
        elif strat == 1:
            # a 4-cycle's neighborhood, trimmed at random below the bound
            core = cycles[rng.randrange(len(cycles))]
            fault = _boundary_set(neighbors, core)
        elif strat == 2:
            # grow the cycle core a little before taking the boundary
            core = set(cycles[rng.randrange(len(cycles))])
            for _ in range(rng.randrange(1, 3)):
                edge = sorted(_boundary_set(neighbors, core))
                core.add(edge[rng.randrange(len(edge))])
            fault = _boundary_set(neighbors, core)
        else:
            # boundary of a small random connected blob
            core = {rng.randrange(order)}
            for _ in range(rng.randrange(1, 4)):
                edge = sorted(_boundary_set(neighbors, core))
                core.add(edge[rng.randrange(len(edge))])
            fault = _boundary_set(neighbors, core)
        while len(fault) > target:
            fault.remove(sorted(fault)[rng.randrange(len(fault))])
        if not fault:
            continue
        fmask = 0
        for v in fault:
            fmask |= 1 << v
        alive = full ^ fmask
        reach = _reach(masks, alive, alive & -alive)
        if reach == alive:
            continue
        comps = [reach] + _component_masks(masks, alive & ~reach)
        if _cyclic_component_count(masks, comps) >= 2:
            return (block, i, tuple(sorted(fault)))
    return None


def _boundary_set(neighbors, core) -> set[int]:
    out = set()
    for v in core:
        out.update(neighbors[v])
    return out - set(core)


def randomized_cut_falsifier(
    G,
    target_size: int,
    trials: int,
    seed: int = 0,
    workers: int | None = None,
) -> CutWitness | None:
    """Seeded stochastic hunt for a cyclic cut of size <= target_size.

    Strategies: uniform subsets, 4-cycle neighborhoods trimmed below the
    construction size, boundaries of slightly grown cycle cores, and
    boundaries of random blobs.  Returns the witness from the earliest
    trial if any strategy succeeds, else None.  Deterministic given seed;
    trial blocks make the result independent of the worker count.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    dense = _as_dense(G)
    nworkers = resolve_workers(workers)
    cycles = enumerate_4cycles(G) if isinstance(G, CayleyGraph) else []
    nblocks = (trials + TRIAL_BLOCK - 1) // TRIAL_BLOCK
    payload = _graph_payload(dense)
    payload.update(
        target=target_size,
        seed=seed,
        cycles=cycles,
        block_trials=[
            min(TRIAL_BLOCK, trials - b * TRIAL_BLOCK) for b in range(nblocks)
        ],
    )
    tasks = [(0, b) for b in range(nblocks)]
    rows = _run_tasks(payload, _falsify_block, tasks, nworkers)
    hits = [r for r in rows if r is not None]
    if not hits:
        return None
    _, _, fault = min(hits)
    return _make_witness(dense, fault, "cyclic-cut")
