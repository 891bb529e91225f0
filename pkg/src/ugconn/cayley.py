"""Materialized Cayley graphs of Sym(n) over transposition generators.

Vertices are lexicographic permutation ranks, adjacency lives in a flat
degree-uniform table, and for orders up to 7! each vertex also gets a
neighbor bitmask.  The exhaustive cut searches are dominated by set
intersections, so the bitmask form is the one the hot paths use.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .genset import (
    CYCLE,
    PEELABLE,
    UNICYCLIC_TF,
    GeneratingGraph,
    GeneratingGraphError,
    PeelChoice,
    choose_peel,
)
from .perms import CapacityError, MAX_ARITY, Perm, perm_string

#: neighbor bitmasks are materialized lazily up to this order (7! = 5040);
#: an 8!-vertex mask table would cost ~200 MB, so n = 8 walks the table
MASK_ORDER_LIMIT = 5040

#: component member lists are reported only up to this size
MEMBER_LIMIT = 24


class DenseGraph:
    """Undirected graph on vertices 0..order-1 with optional bitset adjacency."""

    def __init__(self, neighbors):
        self.neighbors: list[tuple[int, ...]] = [tuple(sorted(ns)) for ns in neighbors]
        self.order = len(self.neighbors)
        self.size = sum(len(ns) for ns in self.neighbors) // 2
        self._masks: list[int] | None = None

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def has_masks(self) -> bool:
        return self.order <= MASK_ORDER_LIMIT

    @property
    def masks(self) -> list[int]:
        """Per-vertex neighbor bitmask; built on first use."""
        if self._masks is None:
            if not self.has_masks():
                raise CapacityError(
                    f"bitmasks unavailable beyond order {MASK_ORDER_LIMIT}"
                )
            out = []
            for ns in self.neighbors:
                m = 0
                for v in ns:
                    m |= 1 << v
                out.append(m)
            self._masks = out
        return self._masks

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.neighbors[u]

    def degree_range(self) -> tuple[int, int]:
        degs = [len(ns) for ns in self.neighbors]
        return min(degs), max(degs)


@dataclass(frozen=True)
class ComponentInfo:
    vertices: int
    edges: int
    contains_cycle: bool
    members: tuple[int, ...] | None  # listed only for small components


@dataclass(frozen=True)
class CutAnalysis:
    """Component profile of a graph minus a fault set."""

    component_count: int
    components: tuple[ComponentInfo, ...]  # ordered by smallest member
    largest_index: int

    def largest(self) -> int:
        if not self.components:
            return 0
        return self.components[self.largest_index].vertices

    def residual(self) -> int:
        return sum(c.vertices for c in self.components) - self.largest()

    def cyclic_component_count(self) -> int:
        return sum(1 for c in self.components if c.contains_cycle)


def _validate_fault(order: int, fault) -> list[int]:
    fs = sorted(set(int(v) for v in fault))
    if fs and (fs[0] < 0 or fs[-1] >= order):
        raise ValueError(f"fault vertex out of range [0, {order})")
    return fs


def _mask_component_masks(masks: list[int], alive: int) -> list[int]:
    """All connected components of the alive set, as bitmasks, by least bit."""
    comps = []
    rem = alive
    while rem:
        frontier = rem & -rem
        reach = frontier
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                f ^= b
                nxt |= masks[b.bit_length() - 1]
            frontier = nxt & alive & ~reach
            reach |= frontier
        comps.append(reach)
        rem &= ~reach
    return comps


def _mask_members(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        b = mask & -mask
        mask ^= b
        out.append(b.bit_length() - 1)
    return tuple(out)


def component_analysis(dense: DenseGraph, fault) -> CutAnalysis:
    """Component census of ``dense`` minus ``fault``, with cycle flags.

    A connected component contains a cycle exactly when its edge count is
    at least its vertex count.
    """
    fs = _validate_fault(dense.order, fault)
    if dense.has_masks():
        masks = dense.masks
        fmask = 0
        for v in fs:
            fmask |= 1 << v
        alive = dense.full_mask & ~fmask
        infos = []
        for cmask in _mask_component_masks(masks, alive):
            members = _mask_members(cmask)
            edges = sum((masks[v] & cmask).bit_count() for v in members) // 2
            infos.append(
                ComponentInfo(
                    vertices=len(members),
                    edges=edges,
                    contains_cycle=edges >= len(members),
                    members=members if len(members) <= MEMBER_LIMIT else None,
                )
            )
    else:
        dead = bytearray(dense.order)
        for v in fs:
            dead[v] = 1
        infos = []
        for start in range(dense.order):
            if dead[start]:
                continue
            stack = [start]
            dead[start] = 1
            members = []
            while stack:
                v = stack.pop()
                members.append(v)
                for w in dense.neighbors[v]:
                    if not dead[w]:
                        dead[w] = 1
                        stack.append(w)
            members.sort()
            mset = set(members)
            edges = sum(
                1 for v in members for w in dense.neighbors[v] if w in mset
            ) // 2
            infos.append(
                ComponentInfo(
                    vertices=len(members),
                    edges=edges,
                    contains_cycle=edges >= len(members),
                    members=tuple(members) if len(members) <= MEMBER_LIMIT else None,
                )
            )
        # scanning starts in increasing order already yields components
        # sorted by smallest member
    largest_index = 0
    for i, c in enumerate(infos):
        if c.vertices > infos[largest_index].vertices:
            largest_index = i
    return CutAnalysis(
        component_count=len(infos),
        components=tuple(infos),
        largest_index=largest_index,
    )


def common_neighbor_count(g, u: int, v: int) -> int:
    """|N(u) ∩ N(v)| for distinct vertices."""
    dense = _as_dense(g)
    if u == v:
        raise ValueError("common neighbors of a vertex with itself are undefined")
    if dense.has_masks():
        return (dense.masks[u] & dense.masks[v]).bit_count()
    a, b = dense.neighbors[u], dense.neighbors[v]
    return len(set(a) & set(b))


def girth(g, all_sources: bool = False) -> int | None:
    """Length of a shortest cycle, or None for a forest.

    Cayley graphs are vertex-transitive, so a single-source sweep from
    vertex 0 suffices; ``all_sources=True`` is the debug mode that checks
    every start vertex.
    """
    dense = _as_dense(g)
    sources = range(dense.order) if all_sources else (0,)
    best: int | None = None
    for s in sources:
        dist = [-1] * dense.order
        parent = [-1] * dense.order
        dist[s] = 0
        queue = [s]
        while queue:
            nxt = []
            for v in queue:
                dv = dist[v]
                if best is not None and 2 * dv >= best:
                    continue
                for w in dense.neighbors[v]:
                    if dist[w] < 0:
                        dist[w] = dv + 1
                        parent[w] = v
                        nxt.append(w)
                    elif w != parent[v] and v < w:
                        # non-tree edge closes a walk through s
                        cand = dv + dist[w] + 1
                        if best is None or cand < best:
                            best = cand
            queue = nxt
    return best


class CayleyGraph:
    """Cay(Sym(n), T) with vertices indexed by lexicographic rank."""

    def __init__(
        self,
        gen: GeneratingGraph,
        perms: tuple[Perm, ...],
        index: dict[Perm, int],
        dense: DenseGraph,
        adj_table: np.ndarray | None,
        peel: PeelChoice | None,
        block_of: tuple[int, ...] | None,
    ):
        self.gen = gen
        self.perms = perms
        self.index = index
        self.dense = dense
        self.adj_table = adj_table
        self.peel = peel
        self.block_of = block_of

    @property
    def n(self) -> int:
        return self.gen.n

    @property
    def order(self) -> int:
        return self.dense.order

    @property
    def size(self) -> int:
        return self.dense.size

    @property
    def degree(self) -> int:
        return len(self.gen.edges)

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self.dense.neighbors[u]

    def perm_str(self, u: int) -> str:
        return perm_string(self.perms[u])

    def vertex(self, p: Perm) -> int:
        return self.index[tuple(p)]

    def block_members(self, i: int) -> tuple[int, ...]:
        if self.block_of is None:
            raise GeneratingGraphError("graph was built without a block decomposition")
        if not 1 <= i <= self.n:
            raise ValueError(f"block index {i} out of range 1..{self.n}")
        return tuple(u for u in range(self.order) if self.block_of[u] == i)


def build_cayley(g: GeneratingGraph) -> CayleyGraph:
    """Materialize the Cayley graph of Sym(n) generated by g's edges."""
    n = g.n
    if n > MAX_ARITY:
        raise CapacityError(f"n={n} exceeds the materialization cap {MAX_ARITY}")
    perms = tuple(itertools.permutations(range(1, n + 1)))
    index = {p: r for r, p in enumerate(perms)}
    gens = [(k - 1, l - 1) for k, l in g.edges]
    degree = len(gens)
    rows = np.empty((len(perms), degree), dtype=np.int32)
    for r, p in enumerate(perms):
        row = []
        lst = list(p)
        for k, l in gens:
            lst[k], lst[l] = lst[l], lst[k]
            row.append(index[tuple(lst)])
            lst[k], lst[l] = lst[l], lst[k]
        row.sort()
        rows[r] = row
    dense = DenseGraph([tuple(int(x) for x in row) for row in rows])
    peel: PeelChoice | None = None
    block_of: tuple[int, ...] | None = None
    if g.cls in PEELABLE:
        peel = choose_peel(g)
        pos = peel.position - 1
        block_of = tuple(p[pos] for p in perms)
    return CayleyGraph(
        gen=g,
        perms=perms,
        index=index,
        dense=dense,
        adj_table=rows,
        peel=peel,
        block_of=block_of,
    )


def out_neighbors(G: CayleyGraph, u: int) -> tuple[int, ...]:
    """Neighbors of u outside u's own block, in rank order."""
    if G.block_of is None:
        raise GeneratingGraphError("graph was built without a block decomposition")
    bu = G.block_of[u]
    return tuple(v for v in G.neighbors(u) if G.block_of[v] != bu)


@dataclass(frozen=True)
class CrossEdgeSet:
    i: int
    j: int
    edges: tuple[tuple[int, int], ...]  # (u in block i, v in block j)

    def count(self) -> int:
        return len(self.edges)


def cross_edges(G: CayleyGraph, i: int, j: int) -> CrossEdgeSet:
    """All edges joining block i to block j."""
    if i == j:
        raise ValueError("cross edges need two distinct blocks")
    if G.block_of is None:
        raise GeneratingGraphError("graph was built without a block decomposition")
    if not (1 <= i <= G.n and 1 <= j <= G.n):
        raise ValueError(f"block index out of range 1..{G.n}")
    block_of = G.block_of
    found = []
    for u in range(G.order):
        if block_of[u] != i:
            continue
        for v in G.neighbors(u):
            if block_of[v] == j:
                found.append((u, v))
    return CrossEdgeSet(i=i, j=j, edges=tuple(sorted(found)))


def edge_label(G: CayleyGraph, u: int, v: int) -> tuple[int, int]:
    """Generator (k,l) carrying the edge uv, as 1-based positions."""
    pu, pv = G.perms[u], G.perms[v]
    diff = [i for i in range(G.n) if pu[i] != pv[i]]
    if len(diff) != 2 or pu[diff[0]] != pv[diff[1]] or pu[diff[1]] != pv[diff[0]]:
        raise ValueError(f"vertices {u} and {v} do not differ by one transposition")
    return (diff[0] + 1, diff[1] + 1)


def enumerate_4cycles(G: CayleyGraph) -> list[tuple[int, int, int, int]]:
    """All 4-cycles, once each, as (a, b, c, d) in cycle order.

    Canonical form: a is the smallest rank on the cycle and b < d are its
    two cycle neighbors.
    """
    dense = G.dense
    masks = dense.masks
    out = []
    for a in range(dense.order):
        nbrs = [x for x in dense.neighbors[a] if x > a]
        for bi in range(len(nbrs)):
            for di in range(bi + 1, len(nbrs)):
                b, d = nbrs[bi], nbrs[di]
                common = masks[b] & masks[d] & ~(1 << a)
                while common:
                    cbit = common & -common
                    common ^= cbit
                    c = cbit.bit_length() - 1
                    if c > a:
                        out.append((a, b, c, d))
    return out


def canonical_four_cycle(G: CayleyGraph) -> tuple[int, int, int, int]:
    """A fixed 4-cycle through the identity, for deterministic witnesses.

    Uses the lexicographically first pair of generators with disjoint
    supports; two such swaps commute, which closes the cycle.
    """
    gens = sorted(G.gen.edges)
    for x in range(len(gens)):
        for y in range(x + 1, len(gens)):
            (k1, l1), (k2, l2) = gens[x], gens[y]
            if {k1, l1} & {k2, l2}:
                continue
            p0 = G.perms[0]
            p1 = _swapped(p0, k1, l1)
            p2 = _swapped(p1, k2, l2)
            p3 = _swapped(p0, k2, l2)
            v1, v2, v3 = G.vertex(p1), G.vertex(p2), G.vertex(p3)
            b, d = min(v1, v3), max(v1, v3)
            return (0, b, v2, d)
    raise GeneratingGraphError("no two generators have disjoint supports")


def _swapped(p: Perm, k: int, l: int) -> Perm:
    lst = list(p)
    lst[k - 1], lst[l - 1] = lst[l - 1], lst[k - 1]
    return tuple(lst)


def find_edge_cn_violation(dense: DenseGraph) -> tuple[int, int, int] | None:
    """First (p, q, s) with pq an edge and s sharing neighbors with both.

    Returns None when for every edge pq and outside vertex s at least one
    of cn(s,p), cn(s,q) is zero.
    """
    masks = dense.masks
    for p in range(dense.order):
        for q in dense.neighbors[p]:
            if q <= p:
                continue
            mp, mq = masks[p], masks[q]
            for s in range(dense.order):
                if s == p or s == q:
                    continue
                ms = masks[s]
                if (ms & mp) and (ms & mq):
                    return (p, q, s)
    return None


def find_cn_triple_violation(dense: DenseGraph) -> tuple[int, int, int] | None:
    """First triple (u, v, w) with cn(u,v)=2, cn(v,w)=2 and cn(u,w) >= 1."""
    masks = dense.masks
    order = dense.order
    partners: list[list[int]] = [[] for _ in range(order)]
    for u in range(order):
        mu = masks[u]
        for v in range(u + 1, order):
            if (mu & masks[v]).bit_count() == 2:
                partners[u].append(v)
                partners[v].append(u)
    for v in range(order):
        ps = partners[v]
        for i in range(len(ps)):
            for j in range(i + 1, len(ps)):
                u, w = ps[i], ps[j]
                if masks[u] & masks[w]:
                    return tuple(sorted((u, v, w)))  # type: ignore[return-value]
    return None


def max_common_neighbors(dense: DenseGraph) -> tuple[int, tuple[int, int]]:
    """Maximum cn over unordered vertex pairs, with the first pair attaining it."""
    masks = dense.masks
    best = -1
    arg = (0, 1)
    for u in range(dense.order):
        mu = masks[u]
        for v in range(u + 1, dense.order):
            c = (mu & masks[v]).bit_count()
            if c > best:
                best = c
                arg = (u, v)
    return best, arg


def with_redirected_cross_edge(G: CayleyGraph) -> CayleyGraph:
    """Deterministically corrupted copy: one cross edge redirected.

    The two lowest-rank vertices of vertex 0's block end up sharing an
    out-neighbor, which a correct graph never allows.  Degree uniformity is
    deliberately broken; the copy exists so negative-control tests and the
    CLI can demonstrate that failing graphs actually fail.
    """
    if G.block_of is None:
        raise GeneratingGraphError("corruption needs a block decomposition")
    b0 = G.block_of[0]
    block = [u for u in range(G.order) if G.block_of[u] == b0]
    u, v = block[0], block[1]
    u_out = out_neighbors(G, u)[0]
    v_out = out_neighbors(G, v)[0]
    neighbors = [set(ns) for ns in G.dense.neighbors]
    neighbors[u].discard(u_out)
    neighbors[u_out].discard(u)
    neighbors[u].add(v_out)
    neighbors[v_out].add(u)
    return CayleyGraph(
        gen=G.gen,
        perms=G.perms,
        index=G.index,
        dense=DenseGraph(neighbors),
        adj_table=None,
        peel=G.peel,
        block_of=G.block_of,
    )


def _as_dense(g) -> DenseGraph:
    return g.dense if isinstance(g, CayleyGraph) else g


# ---------------------------------------------------------------------------
# export formats


def to_dot(G: CayleyGraph, name: str = "G") -> str:
    """DOT text with one-line permutation strings as vertex labels."""
    lines = [f"graph {name} {{"]
    for u in range(G.order):
        lines.append(f'  v{u} [label="{G.perm_str(u)}"];')
    for u in range(G.order):
        for v in G.neighbors(u):
            if u < v:
                lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_graph6(g) -> str:
    """Standard graph6 encoding; defined for order <= 62 only."""
    dense = _as_dense(g)
    nv = dense.order
    if nv > 62:
        raise CapacityError(f"graph6 supports order <= 62, got {nv}")
    bits = []
    for j in range(1, nv):
        row = dense.neighbors[j]
        for i in range(j):
            bits.append(1 if i in row else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(63 + nv)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = (val << 1) | b
        chars.append(chr(63 + val))
    return "".join(chars)


def to_edgelist(G: CayleyGraph) -> str:
    """Sparse edge list: a header line, then one "u v" line per edge."""
    lines = [f"n={G.n} order={G.order} degree={G.degree}"]
    for u in range(G.order):
        for v in G.neighbors(u):
            if u < v:
                lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"
