"""Exact sparse linear algebra over the rationals.

Everything on the result path is exact: entries are ``fractions.Fraction``,
elimination uses fraction-free (Bareiss) or plain rational pivoting, and the
only inexactness permitted is the optional modular rank fast path, which is
certified against exact elimination on demand.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, Sequence

_PRIMES = (2147483647, 2147483629, 2147483587)


class LinAlgError(ValueError):
    """Inconsistent linear-algebra request (e.g. image escapes a span)."""


class ActionViolationError(LinAlgError):
    """A claimed group action failed an idempotence/closure check."""


class RationalSparseMatrix:
    """Sparse matrix over Q; no zero entries are stored."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries=None):
        self.rows = rows
        self.cols = cols
        self.entries: dict[tuple[int, int], Fraction] = {}
        if entries:
            for (i, j), val in (entries.items() if isinstance(entries, dict)
                                else entries):
                v = Fraction(val)
                if v:
                    self.entries[(i, j)] = v

    # -- constructors ------------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "RationalSparseMatrix":
        return cls(n, n, {(i, i): Fraction(1) for i in range(n)})

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalSparseMatrix":
        return cls(rows, cols)

    @classmethod
    def from_dense(cls, data: Sequence[Sequence]) -> "RationalSparseMatrix":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        m = cls(rows, cols)
        for i, row in enumerate(data):
            for j, val in enumerate(row):
                v = Fraction(val)
                if v:
                    m.entries[(i, j)] = v
        return m

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[dict]) -> "RationalSparseMatrix":
        m = cls(rows, len(columns))
        for j, col in enumerate(columns):
            for i, val in col.items():
                if val:
                    m.entries[(i, j)] = Fraction(val)
        return m

    # -- basic access --------------------------------------------------------

    def get(self, i: int, j: int) -> Fraction:
        return self.entries.get((i, j), Fraction(0))

    def set(self, i: int, j: int, val) -> None:
        v = Fraction(val)
        if v:
            self.entries[(i, j)] = v
        else:
            self.entries.pop((i, j), None)

    def add_to(self, i: int, j: int, val) -> None:
        self.set(i, j, self.get(i, j) + Fraction(val))

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def copy(self) -> "RationalSparseMatrix":
        m = RationalSparseMatrix(self.rows, self.cols)
        m.entries = dict(self.entries)
        return m

    def columns(self) -> list[dict]:
        cols: list[dict] = [{} for _ in range(self.cols)]
        for (i, j), v in self.entries.items():
            cols[j][i] = v
        return cols

    def row_lists(self) -> list[dict]:
        rows: list[dict] = [{} for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        return rows

    def __eq__(self, other) -> bool:
        return (isinstance(other, RationalSparseMatrix)
                and self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def __hash__(self):
        raise TypeError("unhashable")

    def __repr__(self) -> str:
        return "RationalSparseMatrix(%d x %d, nnz=%d)" % (
            self.rows, self.cols, self.nnz)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "RationalSparseMatrix") -> "RationalSparseMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise LinAlgError("shape mismatch in addition")
        m = self.copy()
        for key, v in other.entries.items():
            m.set(*key, m.get(*key) + v)
        return m

    def __sub__(self, other: "RationalSparseMatrix") -> "RationalSparseMatrix":
        return self + other.scale(-1)

    def scale(self, c) -> "RationalSparseMatrix":
        c = Fraction(c)
        if not c:
            return RationalSparseMatrix(self.rows, self.cols)
        m = RationalSparseMatrix(self.rows, self.cols)
        m.entries = {k: c * v for k, v in self.entries.items()}
        return m

    def __matmul__(self, other: "RationalSparseMatrix") -> "RationalSparseMatrix":
        if self.cols != other.rows:
            raise LinAlgError("shape mismatch in product")
        out = RationalSparseMatrix(self.rows, other.cols)
        rows_other = other.row_lists()
        acc: dict[tuple[int, int], Fraction] = {}
        for (i, k), a in self.entries.items():
            row = rows_other[k]
            for j, b in row.items():
                key = (i, j)
                acc[key] = acc.get(key, Fraction(0)) + a * b
        out.entries = {k: v for k, v in acc.items() if v}
        return out

    def transpose(self) -> "RationalSparseMatrix":
        m = RationalSparseMatrix(self.cols, self.rows)
        m.entries = {(j, i): v for (i, j), v in self.entries.items()}
        return m

    def hstack(self, other: "RationalSparseMatrix") -> "RationalSparseMatrix":
        if self.rows != other.rows:
            raise LinAlgError("row mismatch in hstack")
        m = RationalSparseMatrix(self.rows, self.cols + other.cols)
        m.entries = dict(self.entries)
        for (i, j), v in other.entries.items():
            m.entries[(i, j + self.cols)] = v
        return m

    def take_columns(self, cols: Iterable[int]) -> "RationalSparseMatrix":
        cols = list(cols)
        pos = {c: k for k, c in enumerate(cols)}
        m = RationalSparseMatrix(self.rows, len(cols))
        for (i, j), v in self.entries.items():
            if j in pos:
                m.entries[(i, pos[j])] = v
        return m

    # -- serialization ---------------------------------------------------

    def to_triplets(self) -> list:
        return [[i, j, "%d/%d" % (v.numerator, v.denominator)]
                for (i, j), v in sorted(self.entries.items())]

    @classmethod
    def from_triplets(cls, rows: int, cols: int, triplets) -> "RationalSparseMatrix":
        m = cls(rows, cols)
        for i, j, s in triplets:
            m.entries[(int(i), int(j))] = Fraction(s)
        return m

    # -- elimination -------------------------------------------------------

    def rref(self) -> tuple["RationalSparseMatrix", list[int]]:
        """Reduced row echelon form with leftmost pivoting; returns (R, pivot columns)."""
        rows = self.row_lists()
        pivots: list[int] = []
        pivot_of_row: list[int] = []
        done: list[dict] = []
        active = [r for r in rows]
        for col in range(self.cols):
            # eliminate col from finished rows' perspective: pick pivot among active
            cand = [k for k, r in enumerate(active) if r.get(col)]
            if not cand:
                continue
            k = min(cand, key=lambda k: (len(active[k]), k))
            prow = active.pop(k)
            inv = Fraction(1) / prow[col]
            prow = {c: v * inv for c, v in prow.items()}
            for r in active:
                f = r.get(col)
                if f:
                    for c, v in prow.items():
                        nv = r.get(c, Fraction(0)) - f * v
                        if nv:
                            r[c] = nv
                        else:
                            r.pop(c, None)
            for idx, r in enumerate(done):
                f = r.get(col)
                if f:
                    for c, v in prow.items():
                        nv = r.get(c, Fraction(0)) - f * v
                        if nv:
                            r[c] = nv
                        else:
                            r.pop(c, None)
            done.append(prow)
            pivots.append(col)
            pivot_of_row.append(col)
            if not active:
                break
        out = RationalSparseMatrix(self.rows, self.cols)
        for i, r in enumerate(done):
            for c, v in r.items():
                out.entries[(i, c)] = v
        return out, pivots

    def rank(self, certify: bool = True) -> int:
        """Exact rank; with certify=False tries the modular fast path first
        and falls back to exact elimination when the primes disagree."""
        if not self.entries:
            return 0
        if not certify:
            ranks = {self._rank_mod(p) for p in _PRIMES}
            ranks.discard(None)
            if len(ranks) == 1:
                return ranks.pop()
        return self._rank_bareiss()

    def rank_modular(self, prime: int) -> int | None:
        return self._rank_mod(prime)

    def _rank_mod(self, p: int) -> int | None:
        rows: list[dict] = [{} for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            if v.denominator % p == 0:
                return None
            x = (v.numerator * pow(v.denominator, p - 2, p)) % p
            if x:
                rows[i][j] = x
        rows = [r for r in rows if r]
        rank = 0
        while rows:
            col = min(min(r) for r in rows)
            cand = [k for k, r in enumerate(rows) if r.get(col)]
            if not cand:
                # shouldn't happen: col is min over all rows
                col_rows = [k for k, r in enumerate(rows) if col in r]
                cand = col_rows
            k = min(cand, key=lambda k: (len(rows[k]), k))
            prow = rows.pop(k)
            inv = pow(prow[col], p - 2, p)
            prow = {c: (v * inv) % p for c, v in prow.items()}
            nxt = []
            for r in rows:
                f = r.get(col)
                if f:
                    for c, v in prow.items():
                        nv = (r.get(c, 0) - f * v) % p
                        if nv:
                            r[c] = nv
                        else:
                            r.pop(c, None)
                if r:
                    nxt.append(r)
            rows = nxt
            rank += 1
        return rank

    def _rank_bareiss(self) -> int:
        """Fraction-free elimination on integer-scaled rows."""
        rows = []
        for r in self.row_lists():
            if not r:
                continue
            den = 1
            for v in r.values():
                den = den * v.denominator // _gcd(den, v.denominator)
            ints = {c: int(v * den) for c, v in r.items()}
            g = 0
            for v in ints.values():
                g = _gcd(g, abs(v))
            if g > 1:
                ints = {c: v // g for c, v in ints.items()}
            rows.append(ints)
        rank = 0
        prev = 1
        while rows:
            col = min(min(r) for r in rows)
            cand = [k for k, r in enumerate(rows) if r.get(col)]
            k = min(cand, key=lambda k: (len(rows[k]), k))
            prow = rows.pop(k)
            piv = prow[col]
            nxt = []
            for r in rows:
                f = r.get(col, 0)
                # full Bareiss update: rows missing the pivot column are still
                # rescaled by piv/prev, or exact division breaks later
                if f:
                    keys = set(r) | set(prow)
                    nr = {}
                    for c in keys:
                        val = r.get(c, 0) * piv - prow.get(c, 0) * f
                        if val:
                            nr[c] = val // prev
                else:
                    nr = {c: (v * piv) // prev for c, v in r.items()}
                if nr:
                    nxt.append(nr)
            rows = nxt
            prev = piv
            rank += 1
        return rank

    def kernel_basis(self) -> "RationalSparseMatrix":
        """Columns span the kernel exactly; deterministic leftmost-pivot RREF."""
        R, pivots = self.rref()
        pivset = set(pivots)
        free = [c for c in range(self.cols) if c not in pivset]
        out = RationalSparseMatrix(self.cols, len(free))
        rowpiv = {c: i for i, c in enumerate(pivots)}
        Rrows = R.row_lists()
        for k, fc in enumerate(free):
            out.entries[(fc, k)] = Fraction(1)
            for pc in pivots:
                v = Rrows[rowpiv[pc]].get(fc)
                if v:
                    out.entries[(pc, k)] = -v
        return out

    def image_basis(self) -> "RationalSparseMatrix":
        """The pivot columns of the matrix itself (leftmost independent set)."""
        _, pivots = self.rref()
        return self.take_columns(pivots)

    def pivot_columns(self) -> list[int]:
        _, pivots = self.rref()
        return pivots


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def solve_columns(basis: RationalSparseMatrix,
                  rhs: RationalSparseMatrix) -> RationalSparseMatrix:
    """Solve basis @ X = rhs exactly; raises LinAlgError if inconsistent."""
    if basis.rows != rhs.rows:
        raise LinAlgError("shape mismatch in solve")
    aug = basis.hstack(rhs)
    R, pivots = aug.rref()
    for p in pivots:
        if p >= basis.cols:
            raise LinAlgError("right-hand side not in the span of the basis")
    X = RationalSparseMatrix(basis.cols, rhs.cols)
    rowpiv = {c: i for i, c in enumerate(pivots)}
    Rrows = R.row_lists()
    for pc in pivots:
        r = Rrows[rowpiv[pc]]
        for c, v in r.items():
            if c >= basis.cols:
                X.entries[(pc, c - basis.cols)] = v
    # columns beyond pivots of basis: free variables set to 0 (basis should
    # have full column rank in all our uses; tolerate otherwise)
    return X


def restrict_map(m: RationalSparseMatrix,
                 domain_basis: RationalSparseMatrix,
                 codomain_basis: RationalSparseMatrix) -> RationalSparseMatrix:
    """Matrix of m in subspace coordinates.

    Requires m(span(domain_basis)) <= span(codomain_basis); raises
    LinAlgError otherwise (which signals a broken equivariance assumption
    upstream).
    """
    return solve_columns(codomain_basis, m @ domain_basis)


def reynolds_project(group_action: list[RationalSparseMatrix],
                     with_signs: list | None = None,
                     ) -> tuple[RationalSparseMatrix, RationalSparseMatrix]:
    """Group-averaging projector P = (1/|A|) sum sign(a) M_a and an exact
    basis of its image (the sign-twisted invariants)."""
    if not group_action:
        raise LinAlgError("empty group action")
    n = group_action[0].rows
    if with_signs is None:
        with_signs = [Fraction(1)] * len(group_action)
    acc = RationalSparseMatrix(n, n)
    for mat, s in zip(group_action, with_signs):
        acc = acc + mat.scale(s)
    P = acc.scale(Fraction(1, len(group_action)))
    if (P @ P) != P:
        raise ActionViolationError("group average is not idempotent")
    return P, P.image_basis()


class Subquotient:
    """A cohomology subquotient H = ker(d_next)/im(d_prev) with an explicit
    section (cocycle lift per class) and retraction (class of a cocycle)."""

    def __init__(self, d_prev: RationalSparseMatrix, d_next: RationalSparseMatrix):
        if d_prev.rows != d_next.cols:
            raise LinAlgError("differentials do not compose")
        self.space_dim = d_prev.rows
        boundaries = d_prev.image_basis()
        cycles = d_next.kernel_basis()
        combined = boundaries.hstack(cycles)
        pivots = combined.pivot_columns()
        b = boundaries.cols
        if len([p for p in pivots if p < b]) != b:
            raise LinAlgError("boundaries are not cycles (d^2 != 0?)")
        section_cols = [p - b for p in pivots if p >= b]
        self.section = cycles.take_columns(section_cols)
        self.dim = self.section.cols
        self._frame = boundaries.hstack(self.section)
        self._b = boundaries.cols

    def project(self, cocycles: RationalSparseMatrix) -> RationalSparseMatrix:
        """Coordinates of cocycle columns in the cohomology basis."""
        coords = solve_columns(self._frame, cocycles)
        out = RationalSparseMatrix(self.dim, cocycles.cols)
        for (i, j), v in coords.entries.items():
            if i >= self._b:
                out.entries[(i - self._b, j)] = v
        return out


def random_sparse(rows: int, cols: int, density: float, rng: random.Random,
                  max_num: int = 9) -> RationalSparseMatrix:
    """Random sparse test matrix with small rational entries."""
    m = RationalSparseMatrix(rows, cols)
    target = max(1, int(rows * cols * density))
    for _ in range(target):
        i = rng.randrange(rows)
        j = rng.randrange(cols)
        num = rng.randint(-max_num, max_num)
        den = rng.randint(1, 4)
        if num:
            m.entries[(i, j)] = Fraction(num, den)
    return m
