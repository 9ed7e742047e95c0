"""Compactly supported cochain model of Conf_n(G) for a finite graph G.

Cells are injective partial vertex assignments of the labels 1..n together
with an ordered word of the remaining labels on each edge (positions along
the edge's orientation).  The degree of a cell is the number of
edge-resident labels.

Orientation frame (normative): a degree-k cell is oriented by its k edge
coordinates listed by (edge id ascending, slot ascending).  The coboundary
moves one vertex label into an extreme slot of an incident edge, with sign
+/-(-1)^p: p is the number of coordinates strictly preceding the insertion
in the new cell's frame, and the extra sign is + at the target end of the
edge, - at the source end (the two endpoint faces of an interval carry
opposite incidence, which is what makes the two insertions into an empty
loop cancel).

Besides the explicit cell-by-cell model (used at small n and as an oracle),
this module provides the S_n-orbit model: since every label occurs exactly
once, S_n acts freely on cells, so the cochain spaces are free Q[S_n]-modules
with one generator per cell *shape*.  Equivariant maps are stored as sparse
matrices over the group algebra and specialized per irreducible via
``rep.anti`` (multiplicity spaces of free modules).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .exact_linalg import LinAlgError, RationalSparseMatrix, Subquotient
from .multigraph import ContractionData, GraphAut, HalfEdgeGraph, contract_raw


class ModelViolationError(RuntimeError):
    """An invariant of the cochain model failed (e.g. cohomology outside
    the two allowed degrees)."""


# -- cells -------------------------------------------------------------------


@dataclass(frozen=True)
class ConfCell:
    """vertex_labels[x] is the label at vertex x (0 if none); edge_words[e]
    is the tuple of labels on edge e in orientation order."""
    vertex_labels: tuple
    edge_words: tuple

    @property
    def degree(self) -> int:
        return sum(len(w) for w in self.edge_words)

    def labels_used(self) -> set:
        out = {x for x in self.vertex_labels if x}
        for w in self.edge_words:
            out.update(w)
        return out

    def validate(self, g: HalfEdgeGraph, n: int) -> None:
        if len(self.vertex_labels) != g.v or len(self.edge_words) != g.num_edges:
            raise ModelViolationError("cell does not fit the graph")
        seen = [x for x in self.vertex_labels if x]
        for w in self.edge_words:
            seen.extend(w)
        if sorted(seen) != list(range(1, n + 1)):
            raise ModelViolationError("labels are not exactly 1..n")


def _sequence_sign(positions: list[int]) -> int:
    """Sign of the permutation sending i to positions[i] (inversion count)."""
    inv = 0
    for i in range(len(positions)):
        for j in range(i + 1, len(positions)):
            if positions[i] > positions[j]:
                inv += 1
    return -1 if inv % 2 else 1


def _frame(cell: ConfCell) -> list[tuple[int, int]]:
    return [(e, s) for e, w in enumerate(cell.edge_words) for s in range(len(w))]


# -- the coboundary ----------------------------------------------------------


def delta_on_cell(g: HalfEdgeGraph, cell: ConfCell) -> dict[ConfCell, Fraction]:
    """Signed sum of the degree+1 cells covering ``cell``."""
    out: dict[ConfCell, Fraction] = {}
    prefix = [0] * g.num_edges   # coords strictly before edge e in the frame
    acc = 0
    for e in range(g.num_edges):
        prefix[e] = acc
        acc += len(cell.edge_words[e])
    for x, label in enumerate(cell.vertex_labels):
        if not label:
            continue
        for h in g.vertex_half_edges[x]:
            e = g.edge_of[h]
            word = cell.edge_words[e]
            at_source = (h == g.edges[e][0])
            if at_source:
                new_word = (label,) + word
                p = prefix[e]
                sign = -((-1) ** p)
            else:
                new_word = word + (label,)
                p = prefix[e] + len(word)
                sign = (-1) ** p
            vl = list(cell.vertex_labels)
            vl[x] = 0
            ew = list(cell.edge_words)
            ew[e] = new_word
            nc = ConfCell(tuple(vl), tuple(ew))
            val = out.get(nc, Fraction(0)) + sign
            if val:
                out[nc] = val
            else:
                out.pop(nc, None)
    return out


def aut_on_cell(g: HalfEdgeGraph, a: GraphAut, cell: ConfCell
                ) -> tuple[ConfCell, int]:
    """Image cell under the cellular action of an automorphism, with the
    orientation-frame sign."""
    vl = [0] * g.v
    for x, label in enumerate(cell.vertex_labels):
        if label:
            vl[a.vertex_perm[x]] = label
    ew: list[tuple] = [()] * g.num_edges
    flipped_labels = 0
    for e, w in enumerate(cell.edge_words):
        if not w:
            continue
        f = a.edge_perm[e]
        if a.orientation_flips[e]:
            ew[f] = tuple(reversed(w))
            flipped_labels += len(w)
        else:
            ew[f] = w
    image = ConfCell(tuple(vl), tuple(ew))
    sign = _transport_sign(cell, image, flipped_labels)
    return image, sign


def _transport_sign(cell: ConfCell, image: ConfCell, flipped_labels: int) -> int:
    pos_in_image = {}
    for k, (e, s) in enumerate(_frame(image)):
        pos_in_image[image.edge_words[e][s]] = k
    seq = [pos_in_image[cell.edge_words[e][s]] for (e, s) in _frame(cell)]
    sign = _sequence_sign(seq)
    if flipped_labels % 2:
        sign = -sign
    return sign


def sn_on_cell(sigma: tuple, cell: ConfCell) -> ConfCell:
    """Relabel by sigma (sign +1: the frame is label-independent)."""
    vl = tuple(sigma[x - 1] if x else 0 for x in cell.vertex_labels)
    ew = tuple(tuple(sigma[x - 1] for x in w) for w in cell.edge_words)
    return ConfCell(vl, ew)


def pullback_on_cell(cd: ContractionData, cell: ConfCell
                     ) -> list[tuple[ConfCell, int]]:
    """Lifts of a cell of Conf_n(G/e) to Conf_n(G), with signs.

    The label at the merged vertex (if any) lifts to either endpoint of the
    contracted edge; edge words transport through the correspondence,
    reversing on orientation flips.  No lift puts a label on the contracted
    edge, so the map is degree-preserving.
    """
    src = cd.source
    tgt = cd.target
    ew: list[tuple] = [()] * src.num_edges
    flipped_labels = 0
    for f, w in enumerate(cell.edge_words):
        if not w:
            continue
        e = cd.edge_correspondence[f]
        if cd.flips[f]:
            ew[e] = tuple(reversed(w))
            flipped_labels += len(w)
        else:
            ew[e] = w
    merged_image = cd.vertex_correspondence[cd.merged_endpoints[0]]
    preimages: dict[int, list[int]] = {}
    for x in range(src.v):
        preimages.setdefault(cd.vertex_correspondence[x], []).append(x)
    base = [0] * src.v
    choices: list[list[tuple[int, int]]] = []
    for y, label in enumerate(cell.vertex_labels):
        if not label:
            continue
        pre = preimages[y]
        choices.append([(x, label) for x in pre])
    out = []
    for combo in itertools.product(*choices):
        vl = base[:]
        for x, label in combo:
            vl[x] = label
        lift = ConfCell(tuple(vl), tuple(ew))
        sign = _transport_sign(cell, lift, flipped_labels)
        out.append((lift, sign))
    return out


# -- explicit complexes -------------------------------------------------------


class CochainComplexCc:
    """Explicit compactly supported cochain complex of Conf_n(G)."""

    def __init__(self, graph: HalfEdgeGraph, n: int):
        self.graph = graph
        self.n = n
        self.basis_by_degree: list[list[ConfCell]] = [
            [] for _ in range(n + 1)]
        for cell in _all_cells(graph, n):
            self.basis_by_degree[cell.degree].append(cell)
        for cells in self.basis_by_degree:
            cells.sort(key=lambda c: (c.vertex_labels, c.edge_words))
        self.index = [
            {c: i for i, c in enumerate(cells)}
            for cells in self.basis_by_degree]
        self.delta: list[RationalSparseMatrix] = []
        for q in range(n):
            m = RationalSparseMatrix(len(self.basis_by_degree[q + 1]),
                                     len(self.basis_by_degree[q]))
            for j, cell in enumerate(self.basis_by_degree[q]):
                for nc, val in delta_on_cell(graph, cell).items():
                    m.add_to(self.index[q + 1][nc], j, val)
            self.delta.append(m)

    def dims(self) -> list[int]:
        return [len(b) for b in self.basis_by_degree]

    def delta_at(self, q: int) -> RationalSparseMatrix:
        """delta: C^q -> C^{q+1}, zero map at the boundary degrees."""
        if 0 <= q < len(self.delta):
            return self.delta[q]
        if q == self.n:
            return RationalSparseMatrix(0, len(self.basis_by_degree[self.n]))
        return RationalSparseMatrix(len(self.basis_by_degree[max(q + 1, 0)])
                                    if q + 1 <= self.n else 0, 0)


def _all_cells(g: HalfEdgeGraph, n: int):
    labels = list(range(1, n + 1))
    for k in range(0, min(n, g.v) + 1):
        for vset in itertools.combinations(range(g.v), k):
            for lab_choice in itertools.permutations(labels, k):
                vl = [0] * g.v
                for x, lab in zip(vset, lab_choice):
                    vl[x] = lab
                rest = [x for x in labels if x not in lab_choice]
                for words in _word_distributions(tuple(rest), g.num_edges):
                    yield ConfCell(tuple(vl), words)


def _word_distributions(rest: tuple, m: int):
    if m == 0:
        if not rest:
            yield ()
        return
    for assign in itertools.product(range(m), repeat=len(rest)):
        per_edge: list[list[int]] = [[] for _ in range(m)]
        for lab, e in zip(rest, assign):
            per_edge[e].append(lab)
        for perms in itertools.product(
                *(itertools.permutations(p) for p in per_edge)):
            yield tuple(tuple(p) for p in perms)


def build_cc(g: HalfEdgeGraph, n: int) -> CochainComplexCc:
    """Explicit cell model; exponential in n, intended for small inputs and
    as the oracle for the orbit model."""
    return CochainComplexCc(g, n)


class CellMap:
    """Chain map between explicit complexes, one matrix per degree."""

    def __init__(self, source: CochainComplexCc, target: CochainComplexCc,
                 matrices: list[RationalSparseMatrix]):
        self.source = source
        self.target = target
        self.matrices = matrices

    def check_chain_map(self) -> bool:
        for q in range(self.source.n):
            if (self.target.delta_at(q) @ self.matrices[q]) != \
                    (self.matrices[q + 1] @ self.source.delta_at(q)):
                return False
        return True

    def __matmul__(self, other: "CellMap") -> "CellMap":
        return CellMap(other.source, self.target,
                       [a @ b for a, b in zip(self.matrices, other.matrices)])

    def __eq__(self, other) -> bool:
        return isinstance(other, CellMap) and self.matrices == other.matrices


def aut_action(g: HalfEdgeGraph, a: GraphAut, cc: CochainComplexCc) -> CellMap:
    mats = []
    for q, cells in enumerate(cc.basis_by_degree):
        m = RationalSparseMatrix(len(cells), len(cells))
        for j, cell in enumerate(cells):
            image, sign = aut_on_cell(g, a, cell)
            m.set(cc.index[q][image], j, sign)
        mats.append(m)
    return CellMap(cc, cc, mats)


def sn_action(sigma: tuple, cc: CochainComplexCc) -> CellMap:
    mats = []
    for q, cells in enumerate(cc.basis_by_degree):
        m = RationalSparseMatrix(len(cells), len(cells))
        for j, cell in enumerate(cells):
            m.set(cc.index[q][sn_on_cell(sigma, cell)], j, 1)
        mats.append(m)
    return CellMap(cc, cc, mats)


def contraction_pullback(cd: ContractionData, cc_target: CochainComplexCc,
                         cc_source: CochainComplexCc) -> CellMap:
    """Pullback C_c(Conf_n(G/e)) -> C_c(Conf_n(G)) at cochain level."""
    mats = []
    for q, cells in enumerate(cc_target.basis_by_degree):
        m = RationalSparseMatrix(len(cc_source.basis_by_degree[q]), len(cells))
        for j, cell in enumerate(cells):
            for lift, sign in pullback_on_cell(cd, cell):
                m.add_to(cc_source.index[q][lift], j, sign)
        mats.append(m)
    return CellMap(cc_target, cc_source, mats)


def cohomology(cc: CochainComplexCc) -> dict[int, Subquotient]:
    """Subquotients at degrees n-1 and n; certifies vanishing elsewhere.

    Raises ModelViolationError on nonzero cohomology outside {n-1, n}.
    """
    n = cc.n
    out = {}
    for q in range(n + 1):
        d_prev = cc.delta_at(q - 1) if q else RationalSparseMatrix(
            len(cc.basis_by_degree[0]), 0)
        d_next = cc.delta_at(q)
        sq = Subquotient(d_prev, d_next)
        if q in (n - 1, n):
            out[q] = sq
        elif sq.dim != 0:
            raise ModelViolationError(
                "cohomology of the cell model is nonzero in degree %d" % q)
    return out


def compose_check(g: HalfEdgeGraph, e: int, f: int, n: int) -> bool:
    """Pullbacks along the two orders of contracting disjoint edges e, f
    agree after matching the double quotients.  Tests functoriality of the
    cochain-level local system."""
    if set(g.endpoints(e)) & set(g.endpoints(f)):
        raise LinAlgError("edges must be disjoint")
    r1, hmap1, vmap1 = contract_raw(g, e)
    r2, hmap2, vmap2 = contract_raw(g, f)
    e_in_r2 = r2.edge_of[hmap2[g.edges[e][0]]]
    f_in_r1 = r1.edge_of[hmap1[g.edges[f][0]]]
    r12, hmap12, vmap12 = contract_raw(r1, f_in_r1)
    r21, hmap21, vmap21 = contract_raw(r2, e_in_r2)
    # match the two double quotients by a half-edge renumbering
    he_match = {}
    for h in range(len(g.pairing)):
        h1 = hmap1[h]
        h2 = hmap2[h]
        if h1 is None or h2 is None:
            continue
        a = hmap12[h1]
        b = hmap21[h2]
        if a is None or b is None:
            continue
        he_match[a] = b
    iso_v = {}
    for h, b in he_match.items():
        iso_v[r12.at_vertex[h]] = r21.at_vertex[b]

    cc_g = build_cc(g, n)
    cc12 = build_cc(r12, n)
    cc21 = build_cc(r21, n)

    def cd_from_raw(src, tgt, hmap, vmap):
        edge_corr = []
        flips = []
        inv = {v: k for k, v in enumerate(hmap) if v is not None}
        for ff in range(tgt.num_edges):
            fs = tgt.edges[ff][0]
            h = inv[fs]
            edge_corr.append(src.edge_of[h])
            flips.append(h != src.edges[src.edge_of[h]][0])
        merged = src.endpoints(0)
        return ContractionData(src, 0, tgt, tuple(hmap), tuple(edge_corr),
                               tuple(flips), tuple(vmap), merged)

    def cd_explicit(src, edge, tgt, hmap, vmap):
        cd = cd_from_raw(src, tgt, hmap, vmap)
        u, w = src.endpoints(edge)
        return ContractionData(src, edge, tgt, cd.half_edge_map,
                               cd.edge_correspondence, cd.flips,
                               cd.vertex_correspondence, (u, w))

    cd1 = cd_explicit(g, e, r1, hmap1, vmap1)
    cc_r1 = build_cc(r1, n)
    cd12 = cd_explicit(r1, f_in_r1, r12, hmap12, vmap12)
    path1 = [contraction_pullback(cd1, cc_r1, cc_g).matrices[q]
             @ contraction_pullback(cd12, cc12, cc_r1).matrices[q]
             for q in range(n + 1)]

    cd2 = cd_explicit(g, f, r2, hmap2, vmap2)
    cc_r2 = build_cc(r2, n)
    cd21 = cd_explicit(r2, e_in_r2, r21, hmap21, vmap21)
    path2mats = [contraction_pullback(cd2, cc_r2, cc_g).matrices[q]
                 @ contraction_pullback(cd21, cc21, cc_r2).matrices[q]
                 for q in range(n + 1)]

    # transport path2 through the renumbering iso r12 -> r21
    iso_edge = {}
    iso_flip = {}
    for a, b in he_match.items():
        ea, eb = r12.edge_of[a], r21.edge_of[b]
        iso_edge[ea] = eb
        if a == r12.edges[ea][0]:
            iso_flip[ea] = (b != r21.edges[eb][0])
    for q in range(n + 1):
        m = RationalSparseMatrix(len(cc21.basis_by_degree[q]),
                                 len(cc12.basis_by_degree[q]))
        for j, cell in enumerate(cc12.basis_by_degree[q]):
            vl = [0] * r21.v
            for x, lab in enumerate(cell.vertex_labels):
                if lab:
                    vl[iso_v[x]] = lab
            ew: list[tuple] = [()] * r21.num_edges
            flipped = 0
            for e2, w in enumerate(cell.edge_words):
                if not w:
                    continue
                if iso_flip[e2]:
                    ew[iso_edge[e2]] = tuple(reversed(w))
                    flipped += len(w)
                else:
                    ew[iso_edge[e2]] = w
            image = ConfCell(tuple(vl), tuple(ew))
            m.set(cc21.index[q][image], j, _transport_sign(cell, image, flipped))
        if path1[q] != (path2mats[q] @ m):
            return False
    return True


# -- the S_n-orbit (free module) model ----------------------------------------


@dataclass(frozen=True)
class CellShape:
    """S_n-orbit of cells: which vertices are occupied and the word length
    of every edge."""
    occupied: tuple
    lengths: tuple

    @property
    def degree(self) -> int:
        return sum(self.lengths)


class ConfOrbitModel:
    """Shape bookkeeping and group-algebra matrices for one (graph, n)."""

    def __init__(self, graph: HalfEdgeGraph, n: int):
        self.graph = graph
        self.n = n
        self.shapes_by_degree: list[list[CellShape]] = [
            [] for _ in range(n + 1)]
        for k in range(0, min(n, graph.v) + 1):
            q = n - k
            if q > n:
                continue
            for occ in itertools.combinations(range(graph.v), k):
                for lengths in _compositions(q, graph.num_edges):
                    self.shapes_by_degree[q].append(CellShape(occ, lengths))
        for shapes in self.shapes_by_degree:
            shapes.sort(key=lambda s: (s.occupied, s.lengths))
        self.shape_index = [
            {s: i for i, s in enumerate(shapes)}
            for shapes in self.shapes_by_degree]

    def dims(self) -> list[int]:
        return [len(s) for s in self.shapes_by_degree]

    def rep_cell(self, shape: CellShape) -> ConfCell:
        vl = [0] * self.graph.v
        label = 1
        for x in shape.occupied:
            vl[x] = label
            label += 1
        ew = []
        for length in shape.lengths:
            ew.append(tuple(range(label, label + length)))
            label += length
        return ConfCell(tuple(vl), tuple(ew))

    def decompose(self, cell: ConfCell) -> tuple[CellShape, tuple]:
        """(shape, sigma) with cell = sigma . rep_cell(shape)."""
        occ = tuple(x for x, lab in enumerate(cell.vertex_labels) if lab)
        lengths = tuple(len(w) for w in cell.edge_words)
        shape = CellShape(occ, lengths)
        seq = [cell.vertex_labels[x] for x in occ]
        for w in cell.edge_words:
            seq.extend(w)
        return shape, tuple(seq)

    # GA matrices: entries[(i, j)][sigma] = coefficient, meaning the map sends
    # rep_j to sum coeff * (sigma . rep_i)

    def delta_ga(self, q: int) -> "GAMatrix":
        rows = len(self.shapes_by_degree[q + 1])
        out = GAMatrix(rows, len(self.shapes_by_degree[q]), self.n)
        for j, shape in enumerate(self.shapes_by_degree[q]):
            cell = self.rep_cell(shape)
            for nc, val in delta_on_cell(self.graph, cell).items():
                s2, sigma = self.decompose(nc)
                out.add(self.shape_index[q + 1][s2], j, sigma, val)
        return out

    def aut_ga(self, a: GraphAut, q: int) -> "GAMatrix":
        size = len(self.shapes_by_degree[q])
        out = GAMatrix(size, size, self.n)
        for j, shape in enumerate(self.shapes_by_degree[q]):
            image, sign = aut_on_cell(self.graph, a, self.rep_cell(shape))
            s2, sigma = self.decompose(image)
            out.add(self.shape_index[q][s2], j, sigma, sign)
        return out

    def reynolds_ga(self, auts, q: int) -> "GAMatrix":
        """(1/|Aut|) sum_a sign_detE(a) . M_a: the det(E)-twisted projector."""
        size = len(self.shapes_by_degree[q])
        out = GAMatrix(size, size, self.n)
        c = Fraction(1, len(auts))
        for a in auts:
            s = a.edge_sign
            for j, shape in enumerate(self.shapes_by_degree[q]):
                image, sign = aut_on_cell(self.graph, a, self.rep_cell(shape))
                s2, sigma = self.decompose(image)
                out.add(self.shape_index[q][s2], j, sigma, c * s * sign)
        return out


def pullback_ga(cd: ContractionData, target_model: ConfOrbitModel,
                source_model: ConfOrbitModel, q: int) -> "GAMatrix":
    """Group-algebra matrix of the contraction pullback in degree q."""
    n = target_model.n
    out = GAMatrix(len(source_model.shapes_by_degree[q]),
                   len(target_model.shapes_by_degree[q]), n)
    for j, shape in enumerate(target_model.shapes_by_degree[q]):
        cell = target_model.rep_cell(shape)
        for lift, sign in pullback_on_cell(cd, cell):
            s2, sigma = source_model.decompose(lift)
            out.add(source_model.shape_index[q][s2], j, sigma, sign)
    return out


def _compositions(total: int, slots: int):
    if slots == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, slots - 1):
            yield (first,) + rest


class GAMatrix:
    """Sparse matrix over the group algebra Q[S_n].

    Specialization to the lambda-multiplicity space substitutes the
    antihomomorphism sigma -> rho(sigma^{-1}), so that composition of maps
    matches matrix multiplication of the specialized blocks.
    """

    def __init__(self, rows: int, cols: int, n: int):
        self.rows = rows
        self.cols = cols
        self.n = n
        self.entries: dict[tuple[int, int], dict[tuple, Fraction]] = {}

    def add(self, i: int, j: int, sigma: tuple, coeff) -> None:
        coeff = Fraction(coeff)
        if not coeff:
            return
        cell = self.entries.setdefault((i, j), {})
        val = cell.get(sigma, Fraction(0)) + coeff
        if val:
            cell[sigma] = val
        else:
            del cell[sigma]
            if not cell:
                del self.entries[(i, j)]

    def scale(self, c) -> "GAMatrix":
        out = GAMatrix(self.rows, self.cols, self.n)
        for key, terms in self.entries.items():
            out.entries[key] = {s: Fraction(c) * v for s, v in terms.items()}
        return out

    def __add__(self, other: "GAMatrix") -> "GAMatrix":
        out = GAMatrix(self.rows, self.cols, self.n)
        out.entries = {k: dict(v) for k, v in self.entries.items()}
        for (i, j), terms in other.entries.items():
            for s, v in terms.items():
                out.add(i, j, s, v)
        return out

    def specialize(self, rep) -> RationalSparseMatrix:
        """Matrix on multiplicity spaces: block (i, j) = sum coeff * rho(sigma^{-1})."""
        d = rep.dim
        out = RationalSparseMatrix(self.rows * d, self.cols * d)
        for (i, j), terms in self.entries.items():
            if d == 1:
                total = Fraction(0)
                for sigma, c in terms.items():
                    total += c * rep.anti(sigma)[0][0]
                if total:
                    out.add_to(i, j, total)
            else:
                block = [[Fraction(0)] * d for _ in range(d)]
                for sigma, c in terms.items():
                    A = rep.anti(sigma)
                    for a in range(d):
                        ra = A[a]
                        ba = block[a]
                        for b in range(d):
                            if ra[b]:
                                ba[b] += c * ra[b]
                for a in range(d):
                    for b in range(d):
                        if block[a][b]:
                            out.add_to(i * d + a, j * d + b, block[a][b])
        return out

    def diagonal_class_sums(self) -> dict[tuple, Fraction]:
        """sum over diagonal entries, grouped by cycle type; feeds the
        trace formula for equivariant maps of free modules."""
        from .sym_rep import cycle_type
        out: dict[tuple, Fraction] = {}
        for (i, j), terms in self.entries.items():
            if i != j:
                continue
            for sigma, c in terms.items():
                mu = cycle_type(sigma)
                out[mu] = out.get(mu, Fraction(0)) + c
        return out
