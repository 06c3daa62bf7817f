"""Finite median graphs and their hyperplane combinatorics.

A graph is median when every vertex triple x, y, z has exactly one vertex m
with d(x,y) = d(x,m) + d(m,y) and the two symmetric identities.  Median graphs
are exactly the 1-skeletons of CAT(0) cube complexes, so the whole cube-complex
dictionary is available combinatorially:

- hyperplanes are classes of edges under the "opposite sides of a square"
  relation, and each one cuts the graph into two convex halfspaces;
- cubes are intervals I(u, v) whose separating hyperplanes pairwise cross;
- the piecewise-ell_infinity distance between vertices is the graph distance in
  the cone-off where any two vertices of a common cube are joined by an edge,
  and it equals the longest chain of pairwise disjoint separating hyperplanes;
- every convex set admits a nearest-point projection (the gate map).

Everything here is exact and exhaustive; dense numpy tables are used
throughout, so the intended scale is a few thousand vertices at most.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components, shortest_path

from .errors import (
    ConsistencyError,
    GraphInputError,
    NotMedianError,
    SizeCapError,
)

L1 = "l1"
LINF = "linf"

METRICS = (L1, LINF)

# exhaustive triple scan above this many vertices is refused
IS_MEDIAN_CAP = 4000


def ram_bound(d: int) -> int:
    """Binomial upper bound C(2d, d) for the diagonal Ramsey number R(d+1, d+1).

    Used wherever a Ramsey number would appear in a bound; every such check is
    one-sided (the bound is only ever an upper estimate).
    """
    if d < 0:
        raise ValueError("d must be >= 0")
    return math.comb(2 * d, d)


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx


def _popcount(a: np.ndarray) -> np.ndarray:
    # a: uint8 array, popcount summed over the last axis
    return np.bitwise_count(a).sum(axis=-1, dtype=np.int64)


@dataclass(frozen=True)
class MedianVerdict:
    ok: bool
    witness: tuple[str, str, str] | None = None
    medians: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class Hyperplane:
    """One hyperplane: an edge class together with its two halfspaces.

    ``dimension`` is the maximal dimension of an inventory cube containing one
    of the dual edges (reported as dimension_source = cube_inventory).
    """

    index: int
    dual_edges: tuple[tuple[str, str], ...]
    side_a: frozenset[str]
    side_b: frozenset[str]
    dimension: int


@dataclass(frozen=True)
class Cube:
    dimension: int
    vertices: frozenset[str]
    hyperplanes: tuple[int, ...]
    corners: tuple[str, str]
    maximal: bool


@dataclass(frozen=True)
class ConvexityVerdict:
    ok: bool
    # (a, b, v): v lies on a geodesic from a to b but outside the set
    violation: tuple[str, str, str] | None = None

    def __bool__(self) -> bool:
        return self.ok


class MedianGraph:
    """A finite simple graph with opaque string vertex ids.

    The constructor accepts any simple graph; operations that only make sense
    on connected or median input check and refuse as they go.
    """

    def __init__(self, vertices: Iterable[str], edges: Iterable[tuple[str, str]]):
        self.ids: list[str] = list(dict.fromkeys(str(v) for v in vertices))
        if not self.ids:
            raise GraphInputError("graph needs at least one vertex")
        self.index: dict[str, int] = {v: i for i, v in enumerate(self.ids)}
        self.n = len(self.ids)
        self.adj: list[set[int]] = [set() for _ in range(self.n)]
        edge_set: set[tuple[int, int]] = set()
        for a, b in edges:
            a, b = str(a), str(b)
            if a not in self.index or b not in self.index:
                missing = a if a not in self.index else b
                raise GraphInputError(f"edge endpoint {missing!r} is not a declared vertex")
            ia, ib = self.index[a], self.index[b]
            if ia == ib:
                raise GraphInputError(f"loop at vertex {a!r}")
            key = (min(ia, ib), max(ia, ib))
            if key in edge_set:
                raise GraphInputError(f"duplicate edge {a!r} -- {b!r}")
            edge_set.add(key)
            self.adj[ia].add(ib)
            self.adj[ib].add(ia)
        self.edges: list[tuple[int, int]] = sorted(edge_set)
        self.edge_index: dict[tuple[int, int], int] = {e: i for i, e in enumerate(self.edges)}
        self._cache: dict[str, object] = {}

    # -- basic structure ----------------------------------------------------

    def __repr__(self) -> str:
        return f"MedianGraph({self.n} vertices, {len(self.edges)} edges)"

    def id_of(self, i: int) -> str:
        return self.ids[i]

    def indices_of(self, vs: Iterable[str]) -> list[int]:
        out = []
        for v in vs:
            if v not in self.index:
                raise GraphInputError(f"unknown vertex {v!r}")
            out.append(self.index[v])
        return out

    @property
    def is_connected(self) -> bool:
        if "connected" not in self._cache:
            if self.n == 1:
                self._cache["connected"] = True
            else:
                ncomp, _ = connected_components(self._sparse(), directed=False)
                self._cache["connected"] = ncomp == 1
        return bool(self._cache["connected"])

    def _sparse(self) -> csr_matrix:
        if "sparse" not in self._cache:
            if self.edges:
                rows = [e[0] for e in self.edges] + [e[1] for e in self.edges]
                cols = [e[1] for e in self.edges] + [e[0] for e in self.edges]
                data = np.ones(len(rows), dtype=np.int8)
                mat = csr_matrix((data, (rows, cols)), shape=(self.n, self.n))
            else:
                mat = csr_matrix((self.n, self.n), dtype=np.int8)
            self._cache["sparse"] = mat
        return self._cache["sparse"]

    @property
    def dist(self) -> np.ndarray:
        """All-pairs graph distance table (int32); requires connectivity."""
        if "dist" not in self._cache:
            self._require_connected()
            d = shortest_path(self._sparse(), method="D", unweighted=True)
            self._cache["dist"] = d.astype(np.int32)
        return self._cache["dist"]

    def _require_connected(self) -> None:
        if not self.is_connected:
            raise GraphInputError("graph is disconnected")

    def degree(self, i: int) -> int:
        return len(self.adj[i])

    # -- median recognition --------------------------------------------------

    def _interval_bits(self) -> np.ndarray:
        """Packed interval table: bit m of P[x, y] says m is on a geodesic x..y."""
        if "interval_bits" not in self._cache:
            d = self.dist
            ival = (d[:, None, :] + d[None, :, :]) == d[:, :, None]
            self._cache["interval_bits"] = np.packbits(ival, axis=-1)
        return self._cache["interval_bits"]

    def is_median(self) -> MedianVerdict:
        """Exhaustive triple scan: every triple must have exactly one median.

        Refuses disconnected input.  The scan is O(V^3) bit-operations over a
        packed O(V^2) interval table.
        """
        if "median_verdict" in self._cache:
            return self._cache["median_verdict"]
        self._require_connected()
        if self.n > IS_MEDIAN_CAP:
            raise SizeCapError(f"is_median cap is {IS_MEDIAN_CAP} vertices, got {self.n}")
        verdict = self._median_scan()
        self._cache["median_verdict"] = verdict
        return verdict

    def _median_scan(self) -> MedianVerdict:
        n = self.n
        pm = self._interval_bits()  # (n, n, W) uint8
        words = pm.shape[-1]
        # keep the per-x scratch block around 32 MB
        chunk = max(1, (32 << 20) // max(1, n * words))
        for x in range(n):
            px = pm[x]
            for y0 in range(0, n, chunk):
                y1 = min(n, y0 + chunk)
                block = px[y0:y1, None, :] & px[None, :, :]
                block &= pm[y0:y1]
                counts = _popcount(block)
                bad = np.argwhere(counts != 1)
                if bad.size:
                    y, z = int(bad[0][0]) + y0, int(bad[0][1])
                    meds = self._median_set(x, y, z)
                    return MedianVerdict(
                        ok=False,
                        witness=(self.ids[x], self.ids[y], self.ids[z]),
                        medians=tuple(self.ids[m] for m in meds),
                    )
        return MedianVerdict(ok=True)

    def _median_set(self, x: int, y: int, z: int) -> list[int]:
        d = self.dist
        mask = (
            ((d[x] + d[y]) == d[x, y])
            & ((d[y] + d[z]) == d[y, z])
            & ((d[x] + d[z]) == d[x, z])
        )
        return [int(i) for i in np.flatnonzero(mask)]

    def require_median(self) -> None:
        verdict = self.is_median()
        if not verdict.ok:
            raise NotMedianError(
                f"not a median graph: triple {verdict.witness} has "
                f"{len(verdict.medians)} medians"
            )

    def median(self, x: str, y: str, z: str) -> str:
        """The unique median vertex of a triple (median input required)."""
        self.require_median()
        ix, iy, iz = self.indices_of([x, y, z])
        meds = self._median_set(ix, iy, iz)
        if len(meds) != 1:
            raise ConsistencyError("median scan passed but a triple is ambiguous")
        return self.ids[meds[0]]

    def interval(self, x: str, y: str) -> frozenset[str]:
        ix, iy = self.indices_of([x, y])
        d = self.dist
        mask = (d[ix] + d[iy]) == d[ix, iy]
        return frozenset(self.ids[int(i)] for i in np.flatnonzero(mask))

    # -- hyperplanes ----------------------------------------------------------

    def _hyperplane_data(self):
        """Edge classes, halfspace matrix, per-edge class labels."""
        if "hyp" in self._cache:
            return self._cache["hyp"]
        self.require_median()
        m = len(self.edges)
        uf = UnionFind(m)
        for ei, (u, v) in enumerate(self.edges):
            for w in self.adj[u]:
                if w == v:
                    continue
                for x in self.adj[v]:
                    # square u - v - x - w: (u, v) is opposite (w, x)
                    if x == u or x == w:
                        continue
                    if x in self.adj[w]:
                        ej = self.edge_index[(min(w, x), max(w, x))]
                        uf.union(ei, ej)
        roots: dict[int, int] = {}
        edge_class = np.empty(m, dtype=np.int32)
        class_edges: list[list[int]] = []
        for ei in range(m):
            r = uf.find(ei)
            if r not in roots:
                roots[r] = len(class_edges)
                class_edges.append([])
            edge_class[ei] = roots[r]
            class_edges[roots[r]].append(ei)
        h = len(class_edges)
        # halfspaces: cut the dual edges, take the two components
        sides = np.zeros((h, self.n), dtype=bool)
        for ci, dual in enumerate(class_edges):
            cut = set(dual)
            comp = np.full(self.n, -1, dtype=np.int8)
            anchor = self.edges[dual[0]][0]
            stack = [anchor]
            comp[anchor] = 0
            while stack:
                u = stack.pop()
                for v in self.adj[u]:
                    key = (min(u, v), max(u, v))
                    if self.edge_index[key] in cut:
                        continue
                    if comp[v] == -1:
                        comp[v] = 0
                        stack.append(v)
            if not (comp == -1).any():
                raise ConsistencyError("hyperplane cut did not separate the graph")
            other = int(np.flatnonzero(comp == -1)[0])
            stack = [other]
            comp[other] = 1
            while stack:
                u = stack.pop()
                for v in self.adj[u]:
                    key = (min(u, v), max(u, v))
                    if self.edge_index[key] in cut:
                        continue
                    if comp[v] == -1:
                        comp[v] = 1
                        stack.append(v)
            if (comp == -1).any():
                raise ConsistencyError("hyperplane cut produced more than two sides")
            sides[ci] = comp == 0
        data = {"class_edges": class_edges, "edge_class": edge_class, "sides": sides}
        self._cache["hyp"] = data
        return data

    @property
    def hyperplane_count(self) -> int:
        return len(self._hyperplane_data()["class_edges"])

    @property
    def sides(self) -> np.ndarray:
        """Boolean (H, V) table: sides[j, v] iff v is in side A of hyperplane j."""
        return self._hyperplane_data()["sides"]

    @property
    def transverse(self) -> np.ndarray:
        """Boolean (H, H) table: all four quarter-space intersections nonempty."""
        if "transverse" not in self._cache:
            s = self.sides.astype(np.int32)
            t = 1 - s
            c11 = s @ s.T
            c10 = s @ t.T
            c00 = t @ t.T
            trans = (c11 > 0) & (c10 > 0) & (c10.T > 0) & (c00 > 0)
            np.fill_diagonal(trans, False)
            self._cache["transverse"] = trans
        return self._cache["transverse"]

    def separating(self, x: str, y: str) -> list[int]:
        """Indices of hyperplanes separating two vertices."""
        ix, iy = self.indices_of([x, y])
        return [int(j) for j in np.flatnonzero(self._sep_mask(ix, iy))]

    def _sep_mask(self, ix: int, iy: int) -> np.ndarray:
        s = self.sides
        return s[:, ix] != s[:, iy]

    def hyperplanes(self) -> list[Hyperplane]:
        """The hyperplane inventory with halfspaces and cube dimensions."""
        if "hyperplanes" not in self._cache:
            data = self._hyperplane_data()
            dims = self._hyperplane_dimensions()
            out = []
            for ci, dual in enumerate(data["class_edges"]):
                side_a = frozenset(
                    self.ids[int(i)] for i in np.flatnonzero(data["sides"][ci])
                )
                side_b = frozenset(
                    self.ids[int(i)] for i in np.flatnonzero(~data["sides"][ci])
                )
                out.append(
                    Hyperplane(
                        index=ci,
                        dual_edges=tuple(
                            (self.ids[self.edges[e][0]], self.ids[self.edges[e][1]])
                            for e in dual
                        ),
                        side_a=side_a,
                        side_b=side_b,
                        dimension=dims[ci],
                    )
                )
            self._cache["hyperplanes"] = out
        return self._cache["hyperplanes"]

    def halfspace(self, j: int, side: str = "a") -> frozenset[str]:
        data = self._hyperplane_data()
        mask = data["sides"][j] if side == "a" else ~data["sides"][j]
        return frozenset(self.ids[int(i)] for i in np.flatnonzero(mask))

    # -- cubes ----------------------------------------------------------------

    def cubes(self) -> list[Cube]:
        """Inventory of all cube subgraphs (dimension >= 1; a K1 graph reports
        its vertex as the single 0-cube).  Cubes are intervals I(u, v) whose
        separating hyperplanes pairwise cross."""
        if "cubes" not in self._cache:
            self._cache["cubes"] = self._cube_scan()
        return self._cache["cubes"]

    def maximal_cubes(self) -> list[Cube]:
        return [c for c in self.cubes() if c.maximal]

    def _cube_scan(self) -> list[Cube]:
        self.require_median()
        if not self.edges:
            return [Cube(0, frozenset({self.ids[0]}), (), (self.ids[0], self.ids[0]), True)]
        d = self.dist
        s = self.sides
        trans = self.transverse
        edge_class = self._hyperplane_data()["edge_class"]
        max_deg = max(len(a) for a in self.adj)
        seen: dict[frozenset[int], tuple[int, tuple[int, ...], tuple[int, int]]] = {}
        for u in range(self.n):
            near = np.flatnonzero((d[u] >= 1) & (d[u] <= max_deg))
            for v in near:
                v = int(v)
                if v <= u:
                    continue
                sep = np.flatnonzero(s[:, u] != s[:, v])
                k = len(sep)
                if k != d[u, v]:
                    raise ConsistencyError("separating count disagrees with distance")
                sub = trans[np.ix_(sep, sep)]
                if k > 1 and not (sub | np.eye(k, dtype=bool)).all():
                    continue
                verts = frozenset(
                    int(i) for i in np.flatnonzero((d[u] + d[v]) == d[u, v])
                )
                if len(verts) != 2**k:
                    raise ConsistencyError("cube interval has the wrong vertex count")
                if verts not in seen:
                    seen[verts] = (k, tuple(int(j) for j in sep), (u, v))
        cubes = []
        for verts, (k, hs, (u, v)) in seen.items():
            hs_set = set(hs)
            maximal = True
            for w in self.adj[v]:
                if w in verts:
                    continue
                ek = int(edge_class[self.edge_index[(min(v, w), max(v, w))]])
                if ek in hs_set:
                    continue
                if all(trans[ek, j] for j in hs):
                    maximal = False
                    break
            cubes.append(
                Cube(
                    dimension=k,
                    vertices=frozenset(self.ids[i] for i in verts),
                    hyperplanes=hs,
                    corners=(self.ids[u], self.ids[v]),
                    maximal=maximal,
                )
            )
        cubes.sort(key=lambda c: (-c.dimension, sorted(c.vertices)))
        return cubes

    def _hyperplane_dimensions(self) -> list[int]:
        dims = [1] * self.hyperplane_count
        for cube in self.cubes():
            for j in cube.hyperplanes:
                dims[j] = max(dims[j], cube.dimension)
        return dims

    # -- distances ------------------------------------------------------------

    def linf_adjacency(self) -> np.ndarray:
        """Boolean adjacency of the cube cone-off: u ~ v iff a common cube."""
        if "linf_adj" not in self._cache:
            adj = np.zeros((self.n, self.n), dtype=bool)
            for cube in self.maximal_cubes():
                idx = self.indices_of(sorted(cube.vertices))
                adj[np.ix_(idx, idx)] = True
            np.fill_diagonal(adj, False)
            self._cache["linf_adj"] = adj
        return self._cache["linf_adj"]

    def dist_matrix(self, metric: str = L1) -> np.ndarray:
        if metric == L1:
            return self.dist
        if metric == LINF:
            if "linf_dist" not in self._cache:
                adj = self.linf_adjacency()
                if adj.any():
                    mat = csr_matrix(adj.astype(np.int8))
                    dm = shortest_path(mat, method="D", unweighted=True).astype(np.int32)
                else:
                    dm = np.zeros((self.n, self.n), dtype=np.int32)
                self._cache["linf_dist"] = dm
            return self._cache["linf_dist"]
        raise ValueError(f"unknown metric {metric!r}")

    def _longest_separating_chain(self, ix: int, iy: int) -> list[int]:
        """Longest chain of pairwise disjoint hyperplanes separating x and y.

        Disjoint separating hyperplanes nest once oriented toward x, so the
        chain is a longest path in the DAG ordered by x-side size.
        """
        sep = [int(j) for j in np.flatnonzero(self._sep_mask(ix, iy))]
        if not sep:
            return []
        s = self.sides
        trans = self.transverse
        # size of the side containing x, per separating hyperplane
        sizes = []
        side_bits = []
        for j in sep:
            row = s[j] if s[j, ix] else ~s[j]
            side_bits.append(row)
            sizes.append(int(row.sum()))
        order = sorted(range(len(sep)), key=lambda t: sizes[t])
        best = [1] * len(sep)
        prev = [-1] * len(sep)
        for a_pos in range(len(order)):
            a = order[a_pos]
            for b_pos in range(a_pos):
                b = order[b_pos]
                if trans[sep[a], sep[b]]:
                    continue
                if best[b] + 1 > best[a]:
                    best[a] = best[b] + 1
                    prev[a] = b
        top = max(range(len(sep)), key=lambda t: best[t])
        chain = []
        while top != -1:
            chain.append(sep[top])
            top = prev[top]
        chain.reverse()
        return chain

    def distance(self, x: str, y: str, metric: str = L1) -> int:
        """Graph distance (l1) or cube cone-off distance (linf).

        The linf value is computed as the longest chain of pairwise disjoint
        separating hyperplanes and cross-checked against BFS in the cube
        cone-off on every call.
        """
        ix, iy = self.indices_of([x, y])
        if metric == L1:
            return int(self.dist_matrix(L1)[ix, iy])
        if metric == LINF:
            chain = self._longest_separating_chain(ix, iy)
            bfs = int(self.dist_matrix(LINF)[ix, iy])
            if len(chain) != bfs:
                raise ConsistencyError(
                    f"linf disagreement at ({x!r}, {y!r}): chain {len(chain)} vs cone-off BFS {bfs}"
                )
            return bfs
        raise ValueError(f"unknown metric {metric!r}")

    # -- convexity and projection ---------------------------------------------

    def is_convex(self, subset: Iterable[str]) -> ConvexityVerdict:
        """Interval test: the set must contain every vertex lying on a geodesic
        between two of its members.  Empty sets are rejected; the set must
        induce a connected subgraph."""
        idx = self.indices_of(subset)
        if not idx:
            raise GraphInputError("convexity test needs a nonempty vertex set")
        iset = set(idx)
        # induced connectivity
        seen = {idx[0]}
        stack = [idx[0]]
        while stack:
            u = stack.pop()
            for v in self.adj[u]:
                if v in iset and v not in seen:
                    seen.add(v)
                    stack.append(v)
        if seen != iset:
            raise GraphInputError("subset does not induce a connected subgraph")
        d = self.dist
        in_set = np.zeros(self.n, dtype=bool)
        in_set[list(iset)] = True
        arr = sorted(iset)
        for a in arr:
            between = (d[a][None, :] + d[arr, :]) == d[a, arr][:, None]
            bad = between & ~in_set[None, :]
            hits = np.argwhere(bad)
            if hits.size:
                b, v = arr[int(hits[0][0])], int(hits[0][1])
                return ConvexityVerdict(
                    ok=False, violation=(self.ids[a], self.ids[b], self.ids[v])
                )
        return ConvexityVerdict(ok=True)

    def require_convex(self, subset: Iterable[str]) -> list[int]:
        verdict = self.is_convex(subset)
        if not verdict.ok:
            a, b, v = verdict.violation
            raise GraphInputError(
                f"set is not convex: {v!r} lies on a geodesic from {a!r} to {b!r}"
            )
        return self.indices_of(subset)

    def project(self, convex_set: Iterable[str], x: str) -> str:
        """Nearest-point (gate) projection of x to a convex set.

        Checks on every call that the nearest point is unique and that every
        hyperplane separating x from its gate separates x from the whole set.
        """
        target = self.require_convex(convex_set)
        ix = self.index[x] if x in self.index else self.indices_of([x])[0]
        d = self.dist
        dists = d[ix, target]
        best = int(dists.min())
        winners = [target[t] for t in np.flatnonzero(dists == best)]
        if len(winners) != 1:
            raise ConsistencyError("gate is not unique on a convex set")
        p = winners[0]
        s = self.sides
        sep = np.flatnonzero(s[:, ix] != s[:, p])
        tmask = np.zeros(self.n, dtype=bool)
        tmask[target] = True
        for j in sep:
            row = s[j] if s[j, p] else ~s[j]
            if not row[tmask].all():
                raise ConsistencyError(
                    "a hyperplane separating x from its gate fails to separate x from the set"
                )
        return self.ids[p]

    def gate_image(
        self, convex_set: Iterable[str], source_set: Iterable[str]
    ) -> tuple[frozenset[str], tuple[int, ...]]:
        """Project a convex set onto another; returns (image, crossing hyperplanes).

        The crossing set is checked to equal the hyperplanes crossing both
        inputs, the image is checked convex, and the projection is checked
        1-Lipschitz on the source.
        """
        target = self.require_convex(convex_set)
        source = self.require_convex(source_set)
        gates = {v: self.project(convex_set, self.ids[v]) for v in source}
        image = sorted({self.index[g] for g in gates.values()})
        d = self.dist
        for a_pos, a in enumerate(source):
            for b in source[a_pos + 1 :]:
                ga, gb = self.index[gates[a]], self.index[gates[b]]
                if d[ga, gb] > d[a, b]:
                    raise ConsistencyError("projection is not 1-Lipschitz")
        image_ids = frozenset(self.ids[i] for i in image)
        if len(image) > 0:
            verdict = self.is_convex(image_ids)
            if not verdict.ok:
                raise ConsistencyError("gate image is not convex")
        crossing = self._crossing_set(image)
        expected = set(self._crossing_set(target)) & set(self._crossing_set(source))
        if set(crossing) != expected:
            raise ConsistencyError(
                "hyperplanes crossing the image differ from those crossing both sets"
            )
        return image_ids, tuple(sorted(crossing))

    def _crossing_set(self, idx: Sequence[int]) -> list[int]:
        """Hyperplanes separating at least one pair inside the given set."""
        if len(idx) < 2:
            return []
        s = self.sides[:, list(idx)]
        both = s.any(axis=1) & (~s).any(axis=1)
        return [int(j) for j in np.flatnonzero(both)]

    def crossing_hyperplanes(self, subset: Iterable[str]) -> list[int]:
        return self._crossing_set(self.indices_of(subset))
