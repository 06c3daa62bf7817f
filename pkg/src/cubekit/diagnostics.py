"""Hyperbolicity diagnostics for median graphs and their cone-offs.

Grids of hyperplanes, flat rectangles, the four-point constant, bigon
thinness, cone-off constructions, contracting hyperplanes and fineness
certificates.  Everything here is exact unless a search cap is hit, in
which case the result is flagged as a lower bound.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    ConsistencyError,
    GraphInputError,
    SizeCapError,
    ValidationError,
)
from .median import L1, MedianGraph

CLIQUE = "clique"
APEX = "apex"
EXACT = "exact"
LOWER_BOUND = "lower_bound"

DELTA_SIZE_LIMIT = 400
GRID_NODE_CAP = 200_000
RECT_STATE_CAP = 50_000
CYCLE_COUNT_CAP = 10**6


# -- wall systems --------------------------------------------------------------


class WallSystem:
    """Halfspace data (walls x vertices) with the transversality relation.

    This is the combinatorial core shared by hyperplanes of median graphs,
    walls of Coxeter balls and walls of polygonal complexes.  A *chain* is a
    family of pairwise disjoint walls all separating one vertex pair; such a
    family is linearly ordered by halfspace inclusion.
    """

    def __init__(self, sides: np.ndarray, transverse: np.ndarray):
        self.sides = np.ascontiguousarray(np.asarray(sides, dtype=bool))
        self.transverse = np.asarray(transverse, dtype=bool)
        if self.sides.ndim != 2:
            raise GraphInputError("wall sides must be a walls x vertices table")
        self.h = int(self.sides.shape[0])
        self.nv = int(self.sides.shape[1])
        if self.transverse.shape != (self.h, self.h):
            raise GraphInputError("transversality table has the wrong shape")
        self._side_count = self.sides.sum(axis=1).astype(np.int64)
        self._trans_int: list[int] = []
        for j in range(self.h):
            m = 0
            for k in np.flatnonzero(self.transverse[j]):
                m |= 1 << int(k)
            self._trans_int.append(m)
        full = (1 << self.h) - 1
        self._disjoint_int = [
            full & ~self._trans_int[j] & ~(1 << j) for j in range(self.h)
        ]
        self._pairs: list[tuple[int, tuple[int, int]]] | None = None
        self._chain_memo: dict[int, tuple[int, tuple[int, ...], tuple | None]] = {}
        self._pair_chain_memo: dict[int, tuple[int, tuple[int, ...]]] = {}

    @classmethod
    def from_graph(cls, g: MedianGraph) -> "WallSystem":
        g.require_median()
        return cls(g.sides, g.transverse)

    @property
    def pairs(self) -> list[tuple[int, tuple[int, int]]]:
        """Distinct separation masks, one representative vertex pair each."""
        if self._pairs is None:
            found: dict[bytes, tuple[int, tuple[int, int]]] = {}
            s = self.sides
            for x in range(self.nv):
                diff = s != s[:, x : x + 1]
                packed = np.packbits(diff, axis=0)
                for y in range(x + 1, self.nv):
                    key = packed[:, y].tobytes()
                    if key in found or not any(key):
                        continue
                    m = 0
                    for j in np.flatnonzero(diff[:, y]):
                        m |= 1 << int(j)
                    found[key] = (m, (x, y))
            self._pairs = list(found.values())
        return self._pairs

    def side_size_toward(self, j: int, x: int) -> int:
        if self.sides[j, x]:
            return int(self._side_count[j])
        return self.nv - int(self._side_count[j])

    def order_chain(self, members, rep: tuple[int, int]) -> tuple[int, ...]:
        """Order a chain by halfspace nesting toward the first pair vertex."""
        return tuple(sorted(members, key=lambda j: self.side_size_toward(j, rep[0])))

    def longest_chain(self, mask: int) -> tuple[int, tuple[int, ...], tuple | None]:
        """Longest chain inside the wall set `mask` (a bitmask)."""
        hit = self._chain_memo.get(mask)
        if hit is not None:
            return hit
        best_len, best_members, best_rep = 0, (), None
        if mask:
            for m, rep in self.pairs:
                mm = m & mask
                if mm.bit_count() <= best_len:
                    continue
                ln, members = self._chain_in_pair(mm, rep)
                if ln > best_len:
                    best_len, best_members, best_rep = ln, members, rep
        out = (best_len, best_members, best_rep)
        self._chain_memo[mask] = out
        return out

    def _chain_in_pair(self, mm: int, rep: tuple[int, int]):
        """Longest pairwise disjoint subfamily of walls all separating rep.

        Two disjoint walls separating the same pair are strictly nested, so
        sorting by halfspace size makes this a longest-increasing-chain DP.
        """
        hit = self._pair_chain_memo.get(mm)
        if hit is not None:
            return hit
        members = []
        rest = mm
        while rest:
            low = rest & -rest
            members.append(low.bit_length() - 1)
            rest ^= low
        members.sort(key=lambda j: self.side_size_toward(j, rep[0]))
        k = len(members)
        f = [1] * k
        parent = [-1] * k
        for i in range(k):
            for t in range(i):
                if not self.transverse[members[t], members[i]] and f[t] + 1 > f[i]:
                    f[i] = f[t] + 1
                    parent[i] = t
        if k == 0:
            out = (0, ())
        else:
            top = max(range(k), key=lambda i: f[i])
            chain = []
            cur = top
            while cur != -1:
                chain.append(members[cur])
                cur = parent[cur]
            chain.reverse()
            out = (f[top], tuple(chain))
        self._pair_chain_memo[mm] = out
        return out

    def wall_side(self, a: int, c: int):
        """The side of wall c on which wall a lies entirely (True for side a
        of c, False for side b), or None when they are transverse."""
        if self.transverse[a, c]:
            return None
        A, C = self.sides[a], self.sides[c]
        for val, mask in ((True, C), (False, ~C)):
            if (A & mask).any() and (~A & mask).any():
                return val
        return None


# -- grids ----------------------------------------------------------------------


@dataclass(frozen=True)
class Grid:
    verticals: tuple[int, ...]
    horizontals: tuple[int, ...]


@dataclass(frozen=True)
class GridReport:
    pareto: tuple[tuple[int, int], ...]  # (p, q) with p >= q
    witnesses: tuple[Grid, ...]
    thinness: int
    method: str
    nodes: int


def verify_grid(ws: WallSystem, grid: Grid) -> None:
    """Re-check every grid invariant from scratch; raises on any failure."""
    vs, hs = grid.verticals, grid.horizontals
    if not vs or not hs:
        raise ConsistencyError("a grid needs two nonempty families")
    for a in vs:
        for b in hs:
            if not ws.transverse[a, b]:
                raise ConsistencyError(
                    f"grid walls {a} and {b} are not transverse"
                )
    for fam in (vs, hs):
        for i, t in itertools.combinations(range(len(fam)), 2):
            if ws.transverse[fam[i], fam[t]]:
                raise ConsistencyError("chain members must be pairwise disjoint")
        for i in range(1, len(fam) - 1):
            before = ws.wall_side(fam[i - 1], fam[i])
            after = ws.wall_side(fam[i + 1], fam[i])
            if before is None or after is None or before == after:
                raise ConsistencyError(
                    f"wall {fam[i]} does not separate its chain neighbours"
                )


def grid_search(ws: WallSystem, cap: int = GRID_NODE_CAP) -> GridReport:
    """Pareto-maximal grid sizes with witnesses, by chain DFS.

    Chains are enumerated as nested subsets of separation masks; for each
    chain the best crossing chain is found among the walls transverse to all
    of its members.
    """
    table: dict[int, tuple[int, tuple[int, ...], tuple[int, ...]]] = {}
    state = {"nodes": 0, "exact": True}
    full = (1 << ws.h) - 1

    def maxq_from(p: int) -> int:
        return max((val[0] for pp, val in table.items() if pp >= p), default=0)

    def dfs(chain, chain_mask, pairs, tmask, dmask, last):
        if state["nodes"] >= cap:
            state["exact"] = False
            return
        state["nodes"] += 1
        qlen, qmem, _ = ws.longest_chain(tmask)
        p = len(chain)
        if p and qlen:
            cur = table.get(p)
            if cur is None or qlen > cur[0]:
                ordered = ws.order_chain(chain, pairs[0][1])
                table[p] = (qlen, ordered, qmem)
        if p and not qlen:
            # no wall crosses the whole chain; extensions cannot change that
            return
        ext = 0
        for m, _ in pairs:
            ext |= m
        ext &= dmask & ~chain_mask
        if last >= 0:
            ext = (ext >> (last + 1)) << (last + 1)
        maxext = ext.bit_count()
        if maxext == 0:
            return
        if p and qlen and all(
            maxq_from(p + k) >= qlen for k in range(1, maxext + 1)
        ):
            return
        rest = ext
        while rest:
            low = rest & -rest
            j = low.bit_length() - 1
            rest ^= low
            sub_pairs = [(m, r) for m, r in pairs if (m >> j) & 1]
            dfs(
                chain + (j,),
                chain_mask | low,
                sub_pairs,
                tmask & ws._trans_int[j],
                dmask & ws._disjoint_int[j],
                j,
            )

    if ws.h:
        dfs((), 0, ws.pairs, full, full, -1)

    sym = []
    for p, (q, chain, cross) in table.items():
        sym.append((p, q, chain, cross))
        sym.append((q, p, cross, chain))
    norm: dict[tuple[int, int], tuple[tuple[int, ...], tuple[int, ...]]] = {}
    for p, q, chain, cross in sym:
        if p < q:
            p, q, chain, cross = q, p, cross, chain
        norm.setdefault((p, q), (chain, cross))
    keys = [
        k
        for k in norm
        if not any(k2 != k and k2[0] >= k[0] and k2[1] >= k[1] for k2 in norm)
    ]
    keys.sort(reverse=True)
    witnesses = []
    for p, q in keys:
        chain, cross = norm[(p, q)]
        grid = Grid(verticals=chain, horizontals=cross)
        verify_grid(ws, grid)
        witnesses.append(grid)
    thinness = max((q for _, q in keys), default=0)
    return GridReport(
        pareto=tuple(keys),
        witnesses=tuple(witnesses),
        thinness=thinness,
        method=EXACT if state["exact"] else LOWER_BOUND,
        nodes=state["nodes"],
    )


def max_grid(g: MedianGraph, cap: int = GRID_NODE_CAP) -> GridReport:
    return grid_search(WallSystem.from_graph(g), cap)


def has_grid_through(
    ws: WallSystem, wall: int, n: int, cap: int = GRID_NODE_CAP
) -> tuple[bool, bool]:
    """Whether some (n,n)-grid has `wall` in one of its chains: (found, exact)."""
    if n < 1:
        raise GraphInputError("grid size must be >= 1")
    if n == 1:
        return bool(ws.transverse[wall].any()), True
    pairs0 = [(m, r) for m, r in ws.pairs if (m >> wall) & 1]
    state = {"nodes": 0, "exact": True, "found": False}

    def dfs(chain_mask, p, pairs, tmask, dmask, last):
        if state["found"]:
            return
        if state["nodes"] >= cap:
            state["exact"] = False
            return
        state["nodes"] += 1
        if ws.longest_chain(tmask)[0] < n:
            return
        if p >= n:
            state["found"] = True
            return
        ext = 0
        for m, _ in pairs:
            ext |= m
        ext &= dmask & ~chain_mask & ~(1 << wall)
        if last >= 0:
            ext = (ext >> (last + 1)) << (last + 1)
        if p + ext.bit_count() < n:
            return
        rest = ext
        while rest:
            low = rest & -rest
            j = low.bit_length() - 1
            rest ^= low
            sub_pairs = [(m, r) for m, r in pairs if (m >> j) & 1]
            dfs(
                chain_mask | low,
                p + 1,
                sub_pairs,
                tmask & ws._trans_int[j],
                dmask & ws._disjoint_int[j],
                j,
            )

    if pairs0:
        dfs(
            1 << wall,
            1,
            pairs0,
            ws._trans_int[wall],
            ws._disjoint_int[wall],
            -1,
        )
    return state["found"], state["exact"]


# -- flat rectangles -------------------------------------------------------------


@dataclass(frozen=True)
class FlatRectangle:
    a: int
    b: int
    embedding: tuple[tuple[str, ...], ...]  # embedding[i][j] = vertex at (i, j)

    @property
    def vertices(self) -> frozenset[str]:
        return frozenset(v for col in self.embedding for v in col)


@dataclass(frozen=True)
class RectangleReport:
    thickness: int
    best: FlatRectangle | None
    pareto: tuple[tuple[int, int], ...]  # (a, b) with a <= b
    method: str
    states: int


def verify_flat_rectangle(g: MedianGraph, rect: FlatRectangle) -> None:
    """Full isometric-embedding re-check of a rectangle witness."""
    d = g.dist
    cells = [
        (i, j) for i in range(rect.a + 1) for j in range(rect.b + 1)
    ]
    idx = {c: g.index[rect.embedding[c[0]][c[1]]] for c in cells}
    for (i1, j1), (i2, j2) in itertools.combinations(cells, 2):
        if d[idx[(i1, j1)], idx[(i2, j2)]] != abs(i1 - i2) + abs(j1 - j2):
            raise ConsistencyError(
                f"embedding is not isometric at cells {(i1, j1)} and {(i2, j2)}"
            )


def _transpose(emb):
    return tuple(zip(*emb))


def _extend_right(g: MedianGraph, emb):
    """All one-column extensions of an anchored rectangle embedding.

    The first cell of the new column branches over suitable neighbours; the
    rest of the column is forced by unique square completion (median graphs
    have no K_{2,3}).  Accepted extensions pass a full metric check of the
    new column against every existing cell.
    """
    d = g.dist
    adj = g.adj
    a = len(emb) - 1
    b = len(emb[0]) - 1
    used = {v for col in emb for v in col}
    base = emb[0][0]
    jj = np.arange(b + 1)
    col_gap = np.abs(jj[:, None] - jj[None, :])
    out = []
    for u in adj[emb[a][0]]:
        if u in used or d[u, base] != a + 1:
            continue
        col = [u]
        ok = True
        for j in range(1, b + 1):
            prev = col[j - 1]
            side = emb[a][j]
            cands = [
                w
                for w in adj[prev]
                if w in adj[side] and w != emb[a][j - 1] and w not in used and w not in col
            ]
            if len(cands) != 1:
                ok = False
                break
            col.append(cands[0])
        if not ok:
            continue
        new = np.array(col)
        if not (d[np.ix_(new, new)] == col_gap).all():
            continue
        good = True
        for i in range(a + 1):
            old = np.array(emb[i])
            if not (d[np.ix_(new, old)] == (a + 1 - i) + col_gap).all():
                good = False
                break
        if good:
            out.append(emb + (tuple(col),))
    return out


def flat_rectangles(
    g: MedianGraph, cap: int = RECT_STATE_CAP
) -> tuple[list[FlatRectangle], str, int]:
    """Every flat rectangle of g (dedup by vertex set), grown from squares."""
    g.require_median()
    adj = g.adj
    start = []
    for c in g.cubes():
        if c.dimension != 2:
            continue
        vs = [g.index[v] for v in sorted(c.vertices)]
        for p in vs:
            nb = [v for v in vs if v in adj[p]]
            opp = [v for v in vs if v != p and v not in nb][0]
            u1, u2 = nb
            for q, r in ((u1, u2), (u2, u1)):
                start.append(((p, r), (q, opp)))
    seen = set()
    queue = deque()
    for emb in start:
        key = (len(emb), len(emb[0]), emb[0][0], emb[-1][0], emb[0][-1], emb[-1][-1])
        if key not in seen:
            seen.add(key)
            queue.append(emb)
    states = 0
    exact = True
    by_set: dict[frozenset, FlatRectangle] = {}
    while queue:
        emb = queue.popleft()
        states += 1
        if states > cap:
            exact = False
            break
        a = len(emb) - 1
        b = len(emb[0]) - 1
        vset = frozenset(v for col in emb for v in col)
        if vset not in by_set:
            ids = tuple(tuple(g.ids[v] for v in col) for col in emb)
            by_set[vset] = FlatRectangle(a=a, b=b, embedding=ids)
        nxt = _extend_right(g, emb)
        nxt += [_transpose(e) for e in _extend_right(g, _transpose(emb))]
        for e in nxt:
            key = (len(e), len(e[0]), e[0][0], e[-1][0], e[0][-1], e[-1][-1])
            if key not in seen:
                seen.add(key)
                queue.append(e)
    return list(by_set.values()), EXACT if exact else LOWER_BOUND, states


def max_thick_rectangle(g: MedianGraph, cap: int = RECT_STATE_CAP) -> RectangleReport:
    rects, method, states = flat_rectangles(g, cap)
    best = None
    for r in rects:
        key = (min(r.a, r.b), max(r.a, r.b))
        if best is None or key > (min(best.a, best.b), max(best.a, best.b)):
            best = r
    if best is not None:
        verify_flat_rectangle(g, best)
    dims = sorted({(min(r.a, r.b), max(r.a, r.b)) for r in rects})
    pareto = tuple(
        k
        for k in dims
        if not any(k2 != k and k2[0] >= k[0] and k2[1] >= k[1] for k2 in dims)
    )
    thickness = min(best.a, best.b) if best is not None else 0
    return RectangleReport(
        thickness=thickness, best=best, pareto=pareto, method=method, states=states
    )


# -- four-point constant ----------------------------------------------------------


@dataclass(frozen=True)
class DeltaReport:
    value: Fraction
    witness: tuple[str, str, str, str] | None
    method: str


def _four_point(d, x, y, u, v) -> int:
    s = sorted(
        (int(d[x, y] + d[u, v]), int(d[x, u] + d[y, v]), int(d[x, v] + d[y, u]))
    )
    return s[2] - s[1]


def delta(
    g: MedianGraph,
    metric: str = L1,
    sample: int | None = None,
    seed: int = 0,
    size_limit: int = DELTA_SIZE_LIMIT,
) -> DeltaReport:
    """Four-point hyperbolicity constant: max over 4-tuples of the defect
    between the two largest pair sums, halved."""
    d = g.dist_matrix(metric).astype(np.int64)
    n = g.n
    if n > size_limit:
        if sample is None:
            raise SizeCapError(
                f"exact four-point scan is capped at {size_limit} vertices "
                f"(got {n}); pass a sample size for a lower bound"
            )
        rng = random.Random(seed)
        best, wit = 0, None
        for _ in range(sample):
            xs = rng.sample(range(n), 4)
            val = _four_point(d, *xs)
            if val > best:
                best, wit = val, tuple(g.ids[i] for i in xs)
        return DeltaReport(Fraction(best, 2), wit, LOWER_BOUND)
    best = 0
    arg = None
    for x in range(n):
        dx = d[x]
        for y in range(x + 1, n):
            p1 = d[x, y] + d
            p2 = dx[:, None] + d[y][None, :]
            p3 = p2.T
            top = np.maximum(np.maximum(p1, p2), p3)
            bot = np.minimum(np.minimum(p1, p2), p3)
            gap = 2 * top - (p1 + p2 + p3 - bot)
            m = int(gap.max())
            if m > best:
                best = m
                u, v = np.unravel_index(int(gap.argmax()), gap.shape)
                arg = (x, y, int(u), int(v))
    wit = tuple(g.ids[i] for i in arg) if arg is not None else None
    return DeltaReport(Fraction(best, 2), wit, EXACT)


# -- bigons -----------------------------------------------------------------------


@dataclass(frozen=True)
class BigonReport:
    value: int
    witness: tuple[str, str] | None
    method: str


def _bigon_core(g: MedianGraph, measure: np.ndarray) -> BigonReport:
    """Max over endpoint pairs and geodesic bigons of the Hausdorff gap.

    For fixed endpoints (x, y), F(v) = max over geodesics gamma from v to y
    of min over q in gamma of measure(p, q); a backwards DP over the
    geodesic DAG computes F for every interval basepoint p at once.
    """
    n = g.n
    d = g.dist
    adj = g.adj
    best = 0
    wit = None
    for x in range(n):
        dx = d[x]
        for y in range(x + 1, n):
            if dx[y] <= 1:
                continue
            ival = np.flatnonzero(dx + d[y] == dx[y])
            pos = {int(v): t for t, v in enumerate(ival)}
            M = measure[np.ix_(ival, ival)]
            order = sorted((int(v) for v in ival), key=lambda v: -int(dx[v]))
            F = {y: M[:, pos[y]]}
            for v in order[1:]:
                succ = [w for w in adj[v] if w in pos and dx[w] == dx[v] + 1]
                acc = F[succ[0]]
                for w in succ[1:]:
                    acc = np.maximum(acc, F[w])
                F[v] = np.minimum(M[:, pos[v]], acc)
            val = int(F[x].max())
            if val > best:
                best = val
                wit = (g.ids[x], g.ids[y])
    return BigonReport(best, wit, EXACT)


def bigon_thinness(
    g: MedianGraph, metric: str = L1, size_limit: int = DELTA_SIZE_LIMIT
) -> BigonReport:
    """Thinness of geodesic bigons of g, measured in the chosen metric.

    Geodesics are always taken in g itself; LINF measures their divergence
    in the cube cone-off metric (g must be median for that).
    """
    if g.n > size_limit:
        raise SizeCapError(
            f"bigon scan is capped at {size_limit} vertices (got {g.n})"
        )
    return _bigon_core(g, g.dist_matrix(metric))


def bigon_thinness_in(
    g: MedianGraph, measure: np.ndarray, size_limit: int = DELTA_SIZE_LIMIT
) -> BigonReport:
    """Thinness of g's geodesic bigons measured in an external metric table
    (rows/columns aligned with g's vertex order)."""
    if g.n > size_limit:
        raise SizeCapError(
            f"bigon scan is capped at {size_limit} vertices (got {g.n})"
        )
    if measure.shape != (g.n, g.n):
        raise GraphInputError("measure matrix shape does not match the graph")
    return _bigon_core(g, measure)


# -- cone-offs ---------------------------------------------------------------------


class ConeOff:
    """Cone-off of a base graph over named convex subcomplexes."""

    def __init__(self, base, kind, members, graph, provenance, apexes):
        self.base = base
        self.kind = kind
        self.members = members
        self.graph = graph
        self.provenance = provenance
        self.apexes = apexes

    def __repr__(self):
        return (
            f"ConeOff({self.kind}, {len(self.members)} members, "
            f"{self.graph.n} vertices)"
        )

    def distance(self, x: str, y: str) -> int:
        ix, iy = self.graph.indices_of([x, y])
        return int(self.graph.dist[ix, iy])

    def diameter_of(self, vertex_ids) -> int:
        idx = self.graph.indices_of(list(vertex_ids))
        return int(self.graph.dist[np.ix_(idx, idx)].max())

    def base_distance_matrix(self) -> np.ndarray:
        idx = [self.graph.index[v] for v in self.base.ids]
        return self.graph.dist[np.ix_(idx, idx)]


def _named_members(base: MedianGraph, family) -> dict[str, frozenset[str]]:
    if isinstance(family, dict):
        items = list(family.items())
    else:
        items = [(f"member_{i}", verts) for i, verts in enumerate(family)]
    out: dict[str, frozenset[str]] = {}
    for name, verts in items:
        vs = frozenset(str(v) for v in verts)
        if not vs:
            raise ValidationError(f"cone-off member {name!r} is empty")
        try:
            base.indices_of(vs)
        except GraphInputError as exc:
            raise ValidationError(f"member {name!r}: {exc}") from exc
        out[str(name)] = vs
    return out


def _validated_members(base: MedianGraph, family) -> dict[str, frozenset[str]]:
    members = _named_members(base, family)
    for name, verts in members.items():
        try:
            verdict = base.is_convex(verts)
        except GraphInputError as exc:
            raise ValidationError(f"member {name!r}: {exc}") from exc
        if not verdict.ok:
            a, b, v = verdict.violation
            raise ValidationError(
                f"member {name!r} is not convex: vertex {v!r} lies on a "
                f"geodesic from {a!r} to {b!r} but outside the member"
            )
    return members


def _clique_graph(base: MedianGraph, members):
    edges = {tuple(sorted((base.ids[u], base.ids[v]))) for u, v in base.edges}
    base_edges = set(edges)
    provenance: dict[tuple[str, str], list[str]] = {}
    for name, verts in members.items():
        for a, b in itertools.combinations(sorted(verts), 2):
            e = (a, b) if a < b else (b, a)
            if e not in base_edges:
                provenance.setdefault(e, []).append(name)
            edges.add(e)
    graph = MedianGraph(base.ids, sorted(edges))
    return graph, {e: tuple(ns) for e, ns in provenance.items()}


def _apex_graph(base: MedianGraph, members):
    apexes = {}
    vertices = list(base.ids)
    edges = [(base.ids[u], base.ids[v]) for u, v in base.edges]
    provenance = {}
    for name in sorted(members):
        apex = f"apex:{name}"
        if apex in base.index:
            raise ValidationError(f"vertex id {apex!r} collides with an apex name")
        apexes[apex] = name
        vertices.append(apex)
        for v in sorted(members[name]):
            edges.append((apex, v))
            provenance[(apex, v)] = (name,)
    graph = MedianGraph(vertices, edges)
    return graph, provenance, apexes


def _assert_sandwich(base, clique_graph, apex_graph, check_pairs, seed):
    n = base.n
    dc = clique_graph.dist
    da = apex_graph.dist
    if n * (n - 1) // 2 <= check_pairs:
        pairs = itertools.combinations(range(n), 2)
    else:
        rng = random.Random(seed)
        pairs = (
            tuple(rng.sample(range(n), 2)) for _ in range(check_pairs)
        )
    for i, j in pairs:
        c, a = int(dc[i, j]), int(da[i, j])
        if not (c <= a <= 2 * c):
            raise ConsistencyError(
                f"cone-off sandwich fails at ({base.ids[i]!r}, {base.ids[j]!r}): "
                f"clique {c}, apex {a}"
            )


def cone_off(
    base: MedianGraph,
    family,
    kind: str = CLIQUE,
    check_pairs: int = 200,
    seed: int = 0,
) -> ConeOff:
    """Cone-off over a family of convex subcomplexes.

    CLIQUE joins every vertex pair sharing a member; APEX adds one apex
    vertex per member.  Both graphs are built and the distance sandwich
    dist_CLIQUE <= dist_APEX <= 2 dist_CLIQUE is asserted on sampled pairs.
    """
    members = _validated_members(base, family)
    clique_graph, clique_prov = _clique_graph(base, members)
    apex_graph, apex_prov, apexes = _apex_graph(base, members)
    _assert_sandwich(base, clique_graph, apex_graph, check_pairs, seed)
    if kind == CLIQUE:
        return ConeOff(base, CLIQUE, members, clique_graph, clique_prov, {})
    if kind == APEX:
        return ConeOff(base, APEX, members, apex_graph, apex_prov, apexes)
    raise GraphInputError(f"unknown cone-off kind {kind!r}")


# -- contracting hyperplanes --------------------------------------------------------


@dataclass(frozen=True)
class HyperplaneVerdict:
    index: int
    dimension: int
    grid_found: bool | None
    contracting: bool
    method: str


@dataclass(frozen=True)
class ContractingReport:
    n: int
    verdicts: tuple[HyperplaneVerdict, ...]
    coneoff: ConeOff


def hyperplane_carrier(g: MedianGraph, index: int) -> frozenset[str]:
    """Endpoints of the dual edges of a hyperplane."""
    h = g.hyperplanes()[index]
    return frozenset(v for e in h.dual_edges for v in e)


def contracting(g: MedianGraph, n: int, cap: int = GRID_NODE_CAP) -> ContractingReport:
    """Classify each hyperplane as n-contracting or not, and build the
    cone-off over the carriers of the non-contracting ones.

    A hyperplane is n-contracting when its dimension is below n and no
    (n,n)-grid contains it.
    """
    if n < 1:
        raise GraphInputError("contracting level must be >= 1")
    g.require_median()
    ws = WallSystem.from_graph(g)
    verdicts = []
    for h in g.hyperplanes():
        if h.dimension >= n:
            verdicts.append(
                HyperplaneVerdict(h.index, h.dimension, None, False, EXACT)
            )
            continue
        found, exact = has_grid_through(ws, h.index, n, cap)
        verdicts.append(
            HyperplaneVerdict(
                h.index,
                h.dimension,
                found,
                not found,
                EXACT if exact else LOWER_BOUND,
            )
        )
    members = {
        f"carrier_{v.index}": hyperplane_carrier(g, v.index)
        for v in verdicts
        if not v.contracting
    }
    return ContractingReport(
        n=n, verdicts=tuple(verdicts), coneoff=cone_off(g, members, CLIQUE)
    )


# -- fineness ------------------------------------------------------------------------


@dataclass(frozen=True)
class FinenessCertificate:
    multiplicity: int
    multiplicity_edge: tuple[str, str] | None
    common_crossings: int
    crossing_pair: tuple[str, str] | None


def fineness_certificate(base: MedianGraph, family) -> FinenessCertificate:
    """Per-edge member multiplicity and the max number of hyperplanes
    crossing two distinct members, with witnesses."""
    members = _validated_members(base, family)
    mult, medge = 0, None
    for u, v in base.edges:
        uid, vid = base.ids[u], base.ids[v]
        c = sum(1 for verts in members.values() if uid in verts and vid in verts)
        if c > mult:
            mult, medge = c, (uid, vid)
    crossings = {
        name: frozenset(base.crossing_hyperplanes(verts))
        for name, verts in members.items()
    }
    cbest, cpair = 0, None
    for n1, n2 in itertools.combinations(sorted(members), 2):
        k = len(crossings[n1] & crossings[n2])
        if cpair is None or k > cbest:
            cbest, cpair = k, (n1, n2)
    return FinenessCertificate(
        multiplicity=mult,
        multiplicity_edge=medge,
        common_crossings=cbest,
        crossing_pair=cpair,
    )


def cycle_probe(
    cone: ConeOff, edge: tuple[str, str], length: int, cap: int = CYCLE_COUNT_CAP
) -> tuple[int, str]:
    """Count simple cycles of exactly `length` edges through a given edge.

    Each cycle is traced once (the traversal direction is fixed by the
    edge).  Hitting the count cap flags the result as a lower bound.
    """
    if not 3 <= length <= 8:
        raise GraphInputError("probe length must be between 3 and 8")
    gph = cone.graph
    ia, ib = gph.indices_of(list(edge))
    if ib not in gph.adj[ia]:
        raise GraphInputError(f"{edge!r} is not an edge of the cone-off")
    adj = gph.adj
    count = 0
    stack: list[tuple[int, tuple[int, ...]]] = [(ib, (ia, ib))]
    while stack:
        u, path = stack.pop()
        if len(path) == length:
            if ia in adj[u]:
                count += 1
                if count >= cap:
                    return count, LOWER_BOUND
            continue
        for w in adj[u]:
            if w not in path:
                stack.append((w, path + (w,)))
    return count, EXACT
