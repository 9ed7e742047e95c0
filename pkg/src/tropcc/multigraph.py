"""Half-edge multigraphs: contraction, canonical labeling, automorphisms, census.

A multigraph is encoded by a fixed-point-free involution ``pairing`` on the
half-edge ids ``0 .. 2m-1`` together with an incidence map ``at_vertex``.
Each involution orbit is one edge.  The smaller half-edge id of a pair is the
edge's *source* end; all orientation conventions downstream refer to it.
Edges are numbered in increasing order of their source half-edge.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator


class GraphError(ValueError):
    """Structurally invalid graph or graph operation."""


class InvalidContraction(GraphError):
    """Attempted to contract a loop."""


class UnsupportedGenus(GraphError):
    """Census requested for a genus outside the supported range (g >= 2)."""


class HalfEdgeGraph:
    """Connected multigraph given by a half-edge involution.

    Immutable by convention: all fields are tuples and must not be mutated.
    """

    def __init__(self, v: int, pairing, at_vertex, check: bool = True):
        self.v = int(v)
        self.pairing = tuple(pairing)
        self.at_vertex = tuple(at_vertex)
        n_he = len(self.pairing)
        # edges sorted by source half-edge; source = smaller id of the pair
        self.edges = tuple(
            (h, self.pairing[h]) for h in range(n_he) if h < self.pairing[h]
        )
        self.num_edges = len(self.edges)
        edge_of = [0] * n_he
        for e, (hs, ht) in enumerate(self.edges):
            edge_of[hs] = e
            edge_of[ht] = e
        self.edge_of = tuple(edge_of)
        self.valences = tuple(
            sum(1 for x in self.at_vertex if x == u) for u in range(self.v)
        )
        vhe: list[list[int]] = [[] for _ in range(self.v)]
        for h, u in enumerate(self.at_vertex):
            vhe[u].append(h)
        self.vertex_half_edges = tuple(tuple(hs) for hs in vhe)
        if check:
            self._validate()

    def _validate(self) -> None:
        n_he = len(self.pairing)
        if n_he % 2 != 0:
            raise GraphError("odd number of half-edges")
        if len(self.at_vertex) != n_he:
            raise GraphError("at_vertex length does not match half-edge count")
        for h in range(n_he):
            p = self.pairing[h]
            if not 0 <= p < n_he or p == h or self.pairing[p] != h:
                raise GraphError("pairing is not a fixed-point-free involution")
        for u in self.at_vertex:
            if not 0 <= u < self.v:
                raise GraphError("half-edge attached to a vertex out of range")
        if any(val == 0 for val in self.valences):
            raise GraphError("isolated vertex")
        if self.v and not self.is_connected():
            raise GraphError("graph is not connected")

    # -- basic queries ----------------------------------------------------

    def endpoints(self, e: int) -> tuple[int, int]:
        hs, ht = self.edges[e]
        return self.at_vertex[hs], self.at_vertex[ht]

    def source_half_edge(self, e: int) -> int:
        return self.edges[e][0]

    def is_loop(self, e: int) -> bool:
        u, w = self.endpoints(e)
        return u == w

    def loops_at(self, u: int) -> int:
        return sum(1 for e in range(self.num_edges)
                   if self.endpoints(e) == (u, u))

    def multiplicity(self, u: int, w: int) -> int:
        """Number of edges between distinct vertices u, w, or loops at u if u == w."""
        if u == w:
            return self.loops_at(u)
        return sum(1 for e in range(self.num_edges)
                   if set(self.endpoints(e)) == {u, w})

    def is_connected(self) -> bool:
        if self.v == 0:
            return True
        seen = {0}
        stack = [0]
        adj: list[list[int]] = [[] for _ in range(self.v)]
        for hs, ht in self.edges:
            u, w = self.at_vertex[hs], self.at_vertex[ht]
            adj[u].append(w)
            adj[w].append(u)
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.v

    @property
    def genus(self) -> int:
        """First Betti number |E| - |V| + 1 of the connected graph."""
        if not self.is_connected():
            raise GraphError("genus is only defined for connected graphs")
        return self.num_edges - self.v + 1

    def is_stable(self) -> bool:
        """True iff every vertex has valence >= 3 (loops count twice)."""
        return all(val >= 3 for val in self.valences)

    def is_two_connected(self) -> bool:
        """Topological 2-connectivity: no vertex point separates.

        Loops always separate (the loop interior detaches from the rest once
        its vertex is removed), so loopless is required.  Dangling arcs stay
        attached at their far endpoint, so deleting a vertex together with
        all incident edges is the right combinatorial test.
        """
        if any(self.is_loop(e) for e in range(self.num_edges)):
            return False
        if self.v < 2:
            return False
        for x in range(self.v):
            rest = [u for u in range(self.v) if u != x]
            if len(rest) <= 1:
                continue
            adj: dict[int, list[int]] = {u: [] for u in rest}
            for e in range(self.num_edges):
                u, w = self.endpoints(e)
                if u != x and w != x:
                    adj[u].append(w)
                    adj[w].append(u)
            seen = {rest[0]}
            stack = [rest[0]]
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) != len(rest):
                return False
        return True

    # -- identity ---------------------------------------------------------

    def key(self) -> tuple:
        return (self.v, self.pairing, self.at_vertex)

    def __eq__(self, other) -> bool:
        return isinstance(other, HalfEdgeGraph) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return "HalfEdgeGraph(v=%d, pairing=%r, at_vertex=%r)" % (
            self.v, list(self.pairing), list(self.at_vertex))

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {"v": self.v, "pairing": list(self.pairing),
                "at_vertex": list(self.at_vertex)}

    @classmethod
    def from_json(cls, data: dict) -> "HalfEdgeGraph":
        return cls(data["v"], data["pairing"], data["at_vertex"])

    @classmethod
    def from_edge_list(cls, v: int, pairs) -> "HalfEdgeGraph":
        """Build from a list of (u, w) endpoint pairs; edge k gets
        half-edges 2k (source, at u) and 2k+1 (target, at w)."""
        pairing = []
        at = []
        for k, (u, w) in enumerate(pairs):
            pairing.extend([2 * k + 1, 2 * k])
            at.extend([u, w])
        return cls(v, pairing, at)


def genus(g: HalfEdgeGraph) -> int:
    return g.genus


# -- named small graphs ---------------------------------------------------

def parallel_graph(k: int) -> HalfEdgeGraph:
    """Two vertices joined by k parallel edges (k=3: theta, k=4: banana)."""
    return HalfEdgeGraph.from_edge_list(2, [(0, 1)] * k)


def theta_graph() -> HalfEdgeGraph:
    return parallel_graph(3)


def complete_graph(v: int) -> HalfEdgeGraph:
    return HalfEdgeGraph.from_edge_list(
        v, [(i, j) for i in range(v) for j in range(i + 1, v)])


def rose_graph(g: int) -> HalfEdgeGraph:
    return HalfEdgeGraph.from_edge_list(1, [(0, 0)] * g)


def cycle_with_multiplicities(mults) -> HalfEdgeGraph:
    """Cycle on len(mults) vertices with the i-th side repeated mults[i] times.

    cycle_with_multiplicities([2, 2, 1]) is the genus-3 graph with 5 edges;
    cycle_with_multiplicities([2, 1, 2, 1]) is the 6-edge prism-like one.
    """
    v = len(mults)
    pairs = []
    for i, m in enumerate(mults):
        pairs.extend([(i, (i + 1) % v)] * m)
    return HalfEdgeGraph.from_edge_list(v, pairs)


# -- canonical labeling ---------------------------------------------------

@dataclass(frozen=True)
class CanonicalForm:
    graph: HalfEdgeGraph
    half_edge_map: tuple      # original half-edge id -> canonical id
    vertex_map: tuple         # original vertex id -> canonical id


def _vertex_invariant(g: HalfEdgeGraph, u: int) -> tuple:
    mults = sorted(
        g.multiplicity(u, w) for w in range(g.v)
        if w != u and g.multiplicity(u, w) > 0
    )
    return (g.valences[u], g.loops_at(u), tuple(mults))


def _encoding(g: HalfEdgeGraph, order) -> tuple:
    """Adjacency encoding of g with vertices relabeled so new i = order[i]."""
    loops = tuple(g.loops_at(order[i]) for i in range(g.v))
    mult = tuple(
        g.multiplicity(order[i], order[j])
        for i in range(g.v) for j in range(i + 1, g.v)
    )
    return loops + mult


def _class_orders(classes) -> Iterator[tuple]:
    """All vertex orders permuting only within invariant classes."""
    pools = [itertools.permutations(c) for c in classes]
    for parts in itertools.product(*pools):
        yield tuple(itertools.chain.from_iterable(parts))


def _graph_from_encoding(v: int, enc: tuple) -> tuple[HalfEdgeGraph, dict]:
    """Reconstruct the canonical graph; also return first-edge offsets per
    vertex pair so original edges can be matched deterministically."""
    loops = enc[:v]
    mult = enc[v:]
    pairs = []
    offsets: dict[tuple[int, int], int] = {}
    idx = iter(range(len(mult)))
    pos = 0
    for i in range(v):
        if loops[i]:
            offsets[(i, i)] = pos
            pairs.extend([(i, i)] * loops[i])
            pos += loops[i]
        for j in range(i + 1, v):
            m = mult[next(idx)]
            if m:
                offsets[(i, j)] = pos
                pairs.extend([(i, j)] * m)
                pos += m
    return HalfEdgeGraph.from_edge_list(v, pairs), offsets


def _canonical_form_uncached(g: HalfEdgeGraph) -> CanonicalForm:
    v = g.v
    inv = [_vertex_invariant(g, u) for u in range(v)]
    by_class: dict[tuple, list[int]] = {}
    for u in range(v):
        by_class.setdefault(inv[u], []).append(u)
    classes = [by_class[k] for k in sorted(by_class)]

    best_enc = None
    best_order = None
    for order in _class_orders(classes):
        enc = _encoding(g, order)
        if best_enc is None or enc < best_enc:
            best_enc, best_order = enc, order
    assert best_order is not None

    canon, offsets = _graph_from_encoding(v, best_enc)
    vmap = [0] * v
    for new, old in enumerate(best_order):
        vmap[old] = new

    # match original edges to canonical slots, per vertex pair in old-id order
    used: dict[tuple[int, int], int] = {}
    he_map = [0] * len(g.pairing)
    for e in range(g.num_edges):
        hs, ht = g.edges[e]
        a, b = vmap[g.at_vertex[hs]], vmap[g.at_vertex[ht]]
        pair = (min(a, b), max(a, b))
        k = offsets[pair] + used.get(pair, 0)
        used[pair] = used.get(pair, 0) + 1
        if a <= b:
            he_map[hs], he_map[ht] = 2 * k, 2 * k + 1
        else:
            he_map[hs], he_map[ht] = 2 * k + 1, 2 * k
    return CanonicalForm(canon, tuple(he_map), tuple(vmap))


@lru_cache(maxsize=None)
def _canonical_form_cached(key: tuple) -> CanonicalForm:
    v, pairing, at_vertex = key
    return _canonical_form_uncached(HalfEdgeGraph(v, pairing, at_vertex, check=False))


def canonical_form(g: HalfEdgeGraph) -> CanonicalForm:
    """Canonical representative plus the half-edge/vertex relabeling onto it.

    Two graphs are isomorphic iff their canonical graphs are equal on the
    nose.  The search runs over vertex orders refined by the per-vertex
    invariant (valence, loop count, incident multiplicity multiset), picking
    the lexicographically minimal adjacency encoding.
    """
    if not g.is_connected():
        raise GraphError("canonical form requires a connected graph")
    return _canonical_form_cached(g.key())


# -- automorphisms --------------------------------------------------------

class GraphAut:
    """Automorphism of a HalfEdgeGraph, stored as a half-edge permutation."""

    def __init__(self, graph: HalfEdgeGraph, he_perm):
        self.graph = graph
        self.he_perm = tuple(he_perm)
        self.vertex_perm = tuple(
            graph.at_vertex[self.he_perm[graph.vertex_half_edges[u][0]]]
            for u in range(graph.v)
        )
        self.edge_perm = tuple(
            graph.edge_of[self.he_perm[hs]] for hs, _ in graph.edges
        )
        # flip: the image of the source end is the target end of the image edge
        self.orientation_flips = tuple(
            self.he_perm[hs] != graph.edges[self.edge_perm[e]][0]
            for e, (hs, ht) in enumerate(graph.edges)
        )

    def validate(self) -> None:
        g = self.graph
        seen = set(self.he_perm)
        if len(seen) != len(g.pairing):
            raise GraphError("half-edge map is not a permutation")
        for h in range(len(g.pairing)):
            if self.he_perm[g.pairing[h]] != g.pairing[self.he_perm[h]]:
                raise GraphError("automorphism does not commute with pairing")
            if g.at_vertex[self.he_perm[h]] != self.vertex_perm[g.at_vertex[h]]:
                raise GraphError("automorphism not compatible with at_vertex")

    @property
    def edge_sign(self) -> int:
        """Sign of the induced edge permutation (the det(E) twist)."""
        return perm_sign(self.edge_perm)

    def is_identity(self) -> bool:
        return all(self.he_perm[h] == h for h in range(len(self.he_perm)))

    def compose(self, other: "GraphAut") -> "GraphAut":
        """self after other (apply ``other`` first)."""
        return GraphAut(self.graph,
                        tuple(self.he_perm[other.he_perm[h]]
                              for h in range(len(self.he_perm))))

    def inverse(self) -> "GraphAut":
        inv = [0] * len(self.he_perm)
        for h, img in enumerate(self.he_perm):
            inv[img] = h
        return GraphAut(self.graph, inv)

    def __eq__(self, other) -> bool:
        return (isinstance(other, GraphAut)
                and self.graph.key() == other.graph.key()
                and self.he_perm == other.he_perm)

    def __hash__(self) -> int:
        return hash(self.he_perm)

    def __repr__(self) -> str:
        return "GraphAut(%r)" % (list(self.he_perm),)


def perm_sign(perm) -> int:
    """Sign of a permutation given as a tuple of images."""
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _vertex_automorphism_candidates(g: HalfEdgeGraph) -> Iterator[tuple]:
    inv = [_vertex_invariant(g, u) for u in range(g.v)]
    by_class: dict[tuple, list[int]] = {}
    for u in range(g.v):
        by_class.setdefault(inv[u], []).append(u)
    classes = list(by_class.values())
    pools = [itertools.permutations(c) for c in classes]
    for parts in itertools.product(*pools):
        phi = [0] * g.v
        for cls, image in zip(classes, parts):
            for u, w in zip(cls, image):
                phi[u] = w
        ok = True
        for u in range(g.v):
            if g.loops_at(u) != g.loops_at(phi[u]):
                ok = False
                break
            for w in range(u + 1, g.v):
                if g.multiplicity(u, w) != g.multiplicity(phi[u], phi[w]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield tuple(phi)


@lru_cache(maxsize=None)
def _automorphisms_cached(key: tuple) -> tuple:
    g = HalfEdgeGraph(*key, check=False)
    # edge classes keyed by unordered endpoint pair
    class_edges: dict[tuple[int, int], list[int]] = {}
    for e in range(g.num_edges):
        u, w = g.endpoints(e)
        class_edges.setdefault((min(u, w), max(u, w)), []).append(e)
    pair_keys = sorted(class_edges)
    loops = [e for e in range(g.num_edges) if g.is_loop(e)]

    auts = []
    for phi in _vertex_automorphism_candidates(g):
        image_lists = []
        for (u, w) in pair_keys:
            a, b = phi[u], phi[w]
            image_lists.append(class_edges[(min(a, b), max(a, b))])
        for betas in itertools.product(
                *(itertools.permutations(range(len(class_edges[k])))
                  for k in pair_keys)):
            edge_map = [0] * g.num_edges
            for k_idx, key_pair in enumerate(pair_keys):
                src = class_edges[key_pair]
                dst = image_lists[k_idx]
                for pos, e in enumerate(src):
                    edge_map[e] = dst[betas[k_idx][pos]]
            for flips in itertools.product(
                    *((False, True) if g.is_loop(e) else (False,)
                      for e in range(g.num_edges))):
                he = [0] * len(g.pairing)
                good = True
                for e in range(g.num_edges):
                    hs, ht = g.edges[e]
                    f = edge_map[e]
                    fs, ftg = g.edges[f]
                    if g.is_loop(e):
                        if flips[e]:
                            he[hs], he[ht] = ftg, fs
                        else:
                            he[hs], he[ht] = fs, ftg
                    else:
                        u = g.at_vertex[hs]
                        if g.at_vertex[fs] == phi[u]:
                            he[hs], he[ht] = fs, ftg
                        elif g.at_vertex[ftg] == phi[u]:
                            he[hs], he[ht] = ftg, fs
                        else:
                            good = False
                            break
                if good:
                    auts.append(GraphAut(g, he))
    return tuple(auts)


def automorphisms(g: HalfEdgeGraph) -> tuple:
    """The full automorphism group as half-edge permutations.

    Parallel-edge swaps and loop orientation reversals are included; the
    group is generated exhaustively from vertex bijections preserving the
    multidegree matrix.
    """
    return _automorphisms_cached(g.key())


# -- contraction ----------------------------------------------------------

@dataclass(frozen=True)
class ContractionData:
    """Contraction of a non-loop edge, with target canonicalized.

    ``edge_correspondence[f]`` is the source edge giving target edge ``f``;
    ``flips[f]`` records whether the source orientation maps to the reversed
    target orientation.
    """
    source: HalfEdgeGraph
    contracted_edge: int
    target: HalfEdgeGraph
    half_edge_map: tuple      # source half-edge -> target half-edge (or None)
    edge_correspondence: tuple
    flips: tuple
    vertex_correspondence: tuple
    merged_endpoints: tuple


def contract(g: HalfEdgeGraph, e: int) -> ContractionData:
    """Contract the non-loop edge e and canonicalize the result."""
    if g.is_loop(e):
        raise InvalidContraction("cannot contract a loop")
    hs, ht = g.edges[e]
    u, w = g.at_vertex[hs], g.at_vertex[ht]
    keep, drop = min(u, w), max(u, w)

    survivors = [h for h in range(len(g.pairing)) if h not in (hs, ht)]
    renum = {h: i for i, h in enumerate(survivors)}

    def vmap_raw(x: int) -> int:
        if x == drop:
            x = keep
        return x if x < drop else x - 1

    raw = HalfEdgeGraph(
        g.v - 1,
        [renum[g.pairing[h]] for h in survivors],
        [vmap_raw(g.at_vertex[h]) for h in survivors],
    )
    cf = canonical_form(raw)
    he_map: list = [None] * len(g.pairing)
    for h in survivors:
        he_map[h] = cf.half_edge_map[renum[h]]
    vertex_corr = tuple(cf.vertex_map[vmap_raw(x)] for x in range(g.v))

    target = cf.graph
    edge_corr = []
    flips = []
    for f in range(target.num_edges):
        fs = target.edges[f][0]
        h = he_map.index(fs)
        src_edge = g.edge_of[h]
        edge_corr.append(src_edge)
        flips.append(h != g.edges[src_edge][0])
    return ContractionData(
        source=g, contracted_edge=e, target=target,
        half_edge_map=tuple(he_map),
        edge_correspondence=tuple(edge_corr), flips=tuple(flips),
        vertex_correspondence=vertex_corr, merged_endpoints=(u, w),
    )


def contract_raw(g: HalfEdgeGraph, e: int) -> tuple[HalfEdgeGraph, tuple, tuple]:
    """Contract without canonicalizing; returns (raw graph, he map, vertex map).

    Used by the diamond/compose checks, where the two contraction orders must
    be compared through explicit renumberings rather than canonical forms.
    """
    if g.is_loop(e):
        raise InvalidContraction("cannot contract a loop")
    hs, ht = g.edges[e]
    u, w = g.at_vertex[hs], g.at_vertex[ht]
    keep, drop = min(u, w), max(u, w)
    survivors = [h for h in range(len(g.pairing)) if h not in (hs, ht)]
    renum = {h: i for i, h in enumerate(survivors)}

    def vmap_raw(x: int) -> int:
        if x == drop:
            x = keep
        return x if x < drop else x - 1

    raw = HalfEdgeGraph(
        g.v - 1,
        [renum[g.pairing[h]] for h in survivors],
        [vmap_raw(g.at_vertex[h]) for h in survivors],
    )
    he_map: list = [None] * len(g.pairing)
    for h in survivors:
        he_map[h] = renum[h]
    return raw, tuple(he_map), tuple(vmap_raw(x) for x in range(g.v))


# -- the census -----------------------------------------------------------

@dataclass(frozen=True)
class Arrow:
    """One Aut-orbit of category edges of ``source_key``, with its contraction."""
    source_key: str
    target_key: str
    rep_edge: int
    orbit: tuple
    transporters: dict          # edge -> index into aut group with a(edge) = rep
    contraction: ContractionData

    @property
    def orbit_size(self) -> int:
        return len(self.orbit)


class GraphCategory:
    """Isomorphism classes of stable genus-g graphs with contraction arrows."""

    def __init__(self, genus: int, two_connected: bool,
                 representatives: list[HalfEdgeGraph]):
        self.genus = genus
        self.two_connected = two_connected
        reps = sorted(representatives, key=lambda g: (g.num_edges, g.key()))
        self.representatives = tuple(reps)
        self.keys: list[str] = []
        self.by_key: dict[str, HalfEdgeGraph] = {}
        self.membership: dict[tuple, str] = {}
        counters: dict[int, int] = {}
        for g in reps:
            idx = counters.get(g.num_edges, 0)
            counters[g.num_edges] = idx + 1
            key = "g%d_e%d_i%d" % (genus, g.num_edges, idx)
            self.keys.append(key)
            self.by_key[key] = g
            self.membership[g.key()] = key
        self.aut_groups = {key: automorphisms(self.by_key[key])
                           for key in self.keys}
        self.arrows: dict[str, tuple] = {
            key: self._arrows_for(key) for key in self.keys}

    def _arrows_for(self, key: str) -> tuple:
        g = self.by_key[key]
        auts = self.aut_groups[key]
        qualifying = []
        for e in range(g.num_edges):
            if g.is_loop(e):
                continue
            cd = contract(g, e)
            tk = self.membership.get(cd.target.key())
            if tk is not None:
                qualifying.append(e)
        # orbit decomposition of qualifying edges under Aut(g)
        arrows = []
        remaining = set(qualifying)
        while remaining:
            rep = min(remaining)
            orbit = {}
            for i, a in enumerate(auts):
                src = [e for e in qualifying if a.edge_perm[e] == rep]
                for e in src:
                    orbit.setdefault(e, i)
            if set(orbit) - remaining:
                raise GraphError("A-edge set is not Aut-invariant")
            remaining -= set(orbit)
            cd = contract(g, rep)
            arrows.append(Arrow(
                source_key=key,
                target_key=self.membership[cd.target.key()],
                rep_edge=rep,
                orbit=tuple(sorted(orbit)),
                transporters=dict(sorted(orbit.items())),
                contraction=cd,
            ))
        return tuple(arrows)

    def counts_by_edges(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for g in self.representatives:
            out[g.num_edges] = out.get(g.num_edges, 0) + 1
        return out

    def __len__(self) -> int:
        return len(self.representatives)

    def check_diamond(self) -> bool:
        """Orbit-level diamond property: contracting two category edges in
        either order lands in the category with isomorphic results."""
        for key in self.keys:
            g = self.by_key[key]
            cat_edges = set()
            for arrow in self.arrows[key]:
                cat_edges.update(arrow.orbit)
            for e in cat_edges:
                for f in cat_edges:
                    if e == f or set(g.endpoints(e)) & set(g.endpoints(f)):
                        continue
                    ge = contract(g, e)
                    f_img = _image_edge_after(ge, f)
                    if ge.target.is_loop(f_img):
                        continue
                    gef = contract(ge.target, f_img)
                    if self.membership.get(gef.target.key()) is None:
                        continue
                    gf = contract(g, f)
                    e_img = _image_edge_after(gf, e)
                    gfe = contract(gf.target, e_img)
                    if gef.target.key() != gfe.target.key():
                        return False
        return True

    def to_json(self) -> dict:
        return {
            "g": self.genus,
            "two_connected": self.two_connected,
            "representatives": {
                key: self.by_key[key].to_json() for key in self.keys},
            "aut_orders": {key: len(self.aut_groups[key]) for key in self.keys},
            "arrows": {
                key: [{"target": a.target_key, "rep_edge": a.rep_edge,
                       "orbit": list(a.orbit)} for a in self.arrows[key]]
                for key in self.keys},
        }


def _image_edge_after(cd: ContractionData, e: int) -> int:
    """Index in cd.target of the source edge e (e != contracted edge)."""
    return cd.edge_correspondence.index(e)


def _degree_sequences(total: int, v: int) -> Iterator[tuple]:
    """Non-increasing sequences of v valences >= 3 summing to total."""
    def rec(remaining: int, slots: int, cap: int):
        if slots == 0:
            if remaining == 0:
                yield ()
            return
        lo = max(3, remaining - cap * (slots - 1))
        for d in range(min(cap, remaining - 3 * (slots - 1)), lo - 1, -1):
            for rest in rec(remaining - d, slots - 1, d):
                yield (d,) + rest
    yield from rec(total, v, total)


def _symmetric_fillings(degs: tuple) -> Iterator[tuple[tuple, tuple]]:
    """All (loops, upper-multiplicity) fillings with row sums = degs
    (loops count twice toward the row sum)."""
    v = len(degs)

    def rec(i: int, consumed: list[int], loops: list[int], rows: list[tuple]):
        if i == v:
            yield tuple(loops), tuple(itertools.chain.from_iterable(rows))
            return
        budget = degs[i] - consumed[i]
        if budget < 0:
            return
        for li in range(budget // 2 + 1):
            rem = budget - 2 * li
            caps = [degs[j] - consumed[j] for j in range(i + 1, v)]
            for row in _compositions_capped(rem, caps):
                consumed2 = consumed[:]
                for j, mij in enumerate(row):
                    consumed2[i + 1 + j] += mij
                loops.append(li)
                rows.append(row)
                yield from rec(i + 1, consumed2, loops, rows)
                loops.pop()
                rows.pop()
    yield from rec(0, [0] * v, [], [])


def _compositions_capped(total: int, caps: list[int]) -> Iterator[tuple]:
    if not caps:
        if total == 0:
            yield ()
        return
    if total > sum(caps):
        return
    first_cap = min(caps[0], total)
    for x in range(first_cap, -1, -1):
        for rest in _compositions_capped(total - x, caps[1:]):
            yield (x,) + rest


def _graph_from_matrix(v: int, loops: tuple, mult_rows: tuple) -> HalfEdgeGraph | None:
    pairs = []
    for i in range(v):
        pairs.extend([(i, i)] * loops[i])
    idx = 0
    for i in range(v):
        for j in range(i + 1, v):
            pairs.extend([(i, j)] * mult_rows[idx])
            idx += 1
    pairing = []
    at = []
    for k, (u, w) in enumerate(pairs):
        pairing.extend([2 * k + 1, 2 * k])
        at.extend([u, w])
    try:
        return HalfEdgeGraph(v, pairing, at)
    except GraphError:
        return None


def enumerate_category(g: int, two_connected: bool = True) -> GraphCategory:
    """All isomorphism classes of connected stable genus-g multigraphs,
    optionally restricted to 2-connected ones, with contraction arrows."""
    if g < 2:
        raise UnsupportedGenus("census supports genus >= 2 only")
    seen: dict[tuple, HalfEdgeGraph] = {}
    for v in range(1, 2 * g - 1):
        m = v + g - 1
        for degs in _degree_sequences(2 * m, v):
            for loops, mult in _symmetric_fillings(degs):
                if two_connected and any(loops):
                    continue
                cand = _graph_from_matrix(v, loops, mult)
                if cand is None:
                    continue
                if two_connected and not cand.is_two_connected():
                    continue
                cf = canonical_form(cand)
                seen.setdefault(cf.graph.key(), cf.graph)
    return GraphCategory(g, two_connected, list(seen.values()))


def a_edges(g: HalfEdgeGraph, category: GraphCategory) -> tuple:
    """Aut-orbit decomposition of the edges whose contraction stays in the
    category.  ``g`` must be one of the category representatives."""
    key = category.membership.get(g.key())
    if key is None:
        raise GraphError("graph is not a category representative")
    return category.arrows[key]


def count_stable_weighted_types(g: int) -> int:
    """Number of stable vertex-weighted graph types of genus g.

    Counts isomorphism classes of connected multigraphs with vertex weights
    w >= 0 satisfying b1 + sum(w) = g, where every weight-0 vertex has
    valence >= 3, including the edgeless single vertex of weight g.  This is
    the census of combinatorial types of genus-g tropical curves (7 for g=2,
    42 for g=3, 379 for g=4); dropping both the weight-0 and 2-connectivity
    reductions lands here.
    """
    if g < 2:
        raise UnsupportedGenus("weighted census supports genus >= 2 only")
    classes: set = set()
    for v in range(1, 2 * g - 1):
        for b1 in range(0, g + 1):
            m = v + b1 - 1
            if m < 1:
                continue
            for wv in _weight_vectors(g - b1, v):
                minval = tuple(3 if x == 0 else 1 for x in wv)
                for loops, mult in _weighted_fillings(v, m, minval):
                    if not _matrix_connected(v, mult):
                        continue
                    classes.add(_matrix_canonical_key(v, loops, mult, wv))
    return len(classes) + 1   # plus the edgeless weight-g vertex


def _matrix_connected(v: int, mult: tuple) -> bool:
    adj: list[list[int]] = [[] for _ in range(v)]
    idx = 0
    for i in range(v):
        for j in range(i + 1, v):
            if mult[idx]:
                adj[i].append(j)
                adj[j].append(i)
            idx += 1
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == v


def _matrix_canonical_key(v: int, loops: tuple, mult: tuple, weights: tuple) -> tuple:
    m = [[0] * v for _ in range(v)]
    idx = 0
    for i in range(v):
        for j in range(i + 1, v):
            m[i][j] = m[j][i] = mult[idx]
            idx += 1
    inv = []
    for u in range(v):
        deg = 2 * loops[u] + sum(m[u])
        inv.append((weights[u], deg, loops[u],
                    tuple(sorted(x for x in m[u] if x))))
    by_class: dict[tuple, list[int]] = {}
    for u in range(v):
        by_class.setdefault(inv[u], []).append(u)
    classes = [by_class[k] for k in sorted(by_class)]
    best = None
    for order in _class_orders(classes):
        enc = (tuple(weights[u] for u in order)
               + tuple(loops[u] for u in order)
               + tuple(m[order[i]][order[j]]
                       for i in range(v) for j in range(i + 1, v)))
        if best is None or enc < best:
            best = enc
    return (v, best)


def _weight_vectors(total: int, v: int) -> Iterator[tuple]:
    """Non-increasing weight vectors of length v summing to total."""
    def rec(remaining: int, slots: int, cap: int):
        if slots == 0:
            if remaining == 0:
                yield ()
            return
        for x in range(min(cap, remaining), -1, -1):
            if x * slots < remaining:
                break
            for rest in rec(remaining - x, slots - 1, x):
                yield (x,) + rest
    yield from rec(total, v, total)


def _weighted_fillings(v: int, m: int, minval: tuple) -> Iterator[tuple[tuple, tuple]]:
    """(loops, upper multiplicities) with total m and valence_i >= minval_i."""
    def rec(i: int, budget: int, val: list[int], loops: list, rows: list):
        if i == v:
            if budget == 0 and all(val[x] >= minval[x] for x in range(v)):
                yield tuple(loops), tuple(itertools.chain.from_iterable(rows))
            return
        for li in range(budget + 1):
            for row in _compositions_capped_total(budget - li, v - 1 - i):
                val2 = val[:]
                val2[i] += 2 * li
                for j, mij in enumerate(row):
                    val2[i] += mij
                    val2[i + 1 + j] += mij
                if val2[i] < minval[i]:
                    continue
                loops.append(li)
                rows.append(row)
                yield from rec(i + 1, budget - li - sum(row), val2, loops, rows)
                loops.pop()
                rows.pop()
    yield from rec(0, m, [0] * v, [], [])


def _compositions_capped_total(total_cap: int, slots: int) -> Iterator[tuple]:
    """All tuples of length ``slots`` with sum <= total_cap."""
    if slots == 0:
        yield ()
        return
    for x in range(total_cap + 1):
        for rest in _compositions_capped_total(total_cap - x, slots - 1):
            yield (x,) + rest


def graph_content_hash(g: HalfEdgeGraph) -> str:
    import hashlib
    blob = json.dumps(g.to_json(), sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()
