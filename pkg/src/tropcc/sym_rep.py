"""Symmetric-group bookkeeping: partitions, characters, exact irreducible
representation matrices, and isotypic projectors.

Permutations of {1..n} are tuples ``p`` of length n with ``p[i-1]`` the image
of ``i``.  Irreducible matrices use Young's seminormal form, which is exact
over Q; it is validated by the test suite against Murnaghan-Nakayama traces
and the defining relations.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .exact_linalg import ActionViolationError, RationalSparseMatrix


# -- partitions and classes -------------------------------------------------


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of n, reverse-lexicographic: (n) first, (1^n) last."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return ((),)
    out: list[tuple[int, ...]] = []

    def rec(remaining: int, cap: int, prefix: tuple):
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(cap, remaining), 0, -1):
            rec(remaining - part, part, prefix + (part,))

    rec(n, n, ())
    return tuple(out)


def factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def centralizer_order(mu: tuple[int, ...]) -> int:
    """z_mu = prod i^{m_i} m_i! over cycle lengths i with multiplicity m_i."""
    z = 1
    for length in set(mu):
        m = mu.count(length)
        z *= length ** m * factorial(m)
    return z


def class_size(mu: tuple[int, ...]) -> int:
    return factorial(sum(mu)) // centralizer_order(mu)


def cycle_type(perm: tuple[int, ...]) -> tuple[int, ...]:
    n = len(perm)
    seen = [False] * n
    lengths = []
    for i in range(n):
        if seen[i]:
            continue
        j = i
        c = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j] - 1
            c += 1
        lengths.append(c)
    return tuple(sorted(lengths, reverse=True))


def perm_sign(perm: tuple[int, ...]) -> int:
    return (-1) ** (len(perm) - len(cycle_type(perm)))


def compose_perms(p: tuple, q: tuple) -> tuple:
    """p after q: (p*q)(i) = p(q(i))."""
    return tuple(p[q[i] - 1] for i in range(len(p)))


def invert_perm(p: tuple) -> tuple:
    inv = [0] * len(p)
    for i, img in enumerate(p):
        inv[img - 1] = i + 1
    return tuple(inv)


def identity_perm(n: int) -> tuple:
    return tuple(range(1, n + 1))


# -- Murnaghan-Nakayama characters -------------------------------------------


def _beta_set(lam: tuple[int, ...]) -> tuple[int, ...]:
    k = len(lam)
    return tuple(lam[i] + (k - 1 - i) for i in range(k))


def _partition_from_beta(beta: tuple[int, ...]) -> tuple[int, ...]:
    b = sorted(beta, reverse=True)
    k = len(b)
    lam = [b[i] - (k - 1 - i) for i in range(k)]
    return tuple(x for x in lam if x > 0)


@lru_cache(maxsize=None)
def mn_character(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """chi_lambda(mu) by recursive border-strip removal."""
    if sum(lam) != sum(mu):
        raise ValueError("partition sizes differ")
    if not mu:
        return 1
    r = mu[0]
    rest = mu[1:]
    beta = set(_beta_set(lam))
    total = 0
    for b in beta:
        if b - r < 0 or (b - r) in beta:
            continue
        height = sum(1 for x in beta if b - r < x < b)
        nb = (beta - {b}) | {b - r}
        total += (-1) ** height * mn_character(_partition_from_beta(tuple(sorted(nb))), rest)
    return total


def character_dimension(lam: tuple[int, ...]) -> int:
    return mn_character(lam, (1,) * sum(lam))


class Character:
    """Class function on S_n with rational values, indexed by cycle type."""

    def __init__(self, n: int, values: dict[tuple, Fraction] | None = None):
        self.n = n
        self.values: dict[tuple, Fraction] = {
            mu: Fraction(0) for mu in partitions(n)}
        if values:
            for mu, v in values.items():
                self.values[tuple(mu)] = Fraction(v)

    @classmethod
    def irreducible(cls, lam: tuple[int, ...]) -> "Character":
        n = sum(lam)
        return cls(n, {mu: Fraction(mn_character(tuple(lam), mu))
                       for mu in partitions(n)})

    @classmethod
    def from_multiplicities(cls, n: int, mults: dict[tuple, int]) -> "Character":
        chi = cls(n)
        for lam, m in mults.items():
            if not m:
                continue
            irr = cls.irreducible(tuple(lam))
            for mu in chi.values:
                chi.values[mu] += m * irr.values[mu]
        return chi

    @property
    def dimension(self) -> Fraction:
        return self.values[(1,) * self.n] if self.n else self.values[()]

    def __add__(self, other: "Character") -> "Character":
        out = Character(self.n)
        for mu in out.values:
            out.values[mu] = self.values[mu] + other.values[mu]
        return out

    def __sub__(self, other: "Character") -> "Character":
        out = Character(self.n)
        for mu in out.values:
            out.values[mu] = self.values[mu] - other.values[mu]
        return out

    def scale(self, c) -> "Character":
        out = Character(self.n)
        for mu in out.values:
            out.values[mu] = Fraction(c) * self.values[mu]
        return out

    def __eq__(self, other) -> bool:
        return (isinstance(other, Character) and self.n == other.n
                and self.values == other.values)

    def inner(self, other: "Character") -> Fraction:
        total = Fraction(0)
        for mu in self.values:
            total += class_size(mu) * self.values[mu] * other.values[mu]
        return total / factorial(self.n)

    def decompose(self) -> dict[tuple, Fraction]:
        """Multiplicity of each irreducible; exact rationals, so a fractional
        or negative value is a visible diagnostic rather than a crash."""
        out = {}
        for lam in partitions(self.n):
            m = self.inner(Character.irreducible(lam))
            if m:
                out[lam] = m
        return out

    def is_genuine(self) -> bool:
        return all(m.denominator == 1 and m >= 0
                   for m in self.decompose().values())

    def __repr__(self) -> str:
        terms = ["%s*V%s" % (m, list(lam))
                 for lam, m in sorted(self.decompose().items(), reverse=True)]
        return " + ".join(terms) if terms else "0"


# -- Young's seminormal representation ---------------------------------------


@lru_cache(maxsize=None)
def standard_tableaux(lam: tuple[int, ...]) -> tuple:
    """All standard Young tableaux of shape lam, as tuples of row tuples,
    in a fixed deterministic order."""
    n = sum(lam)
    if n == 0:
        return ((),)
    out = []

    def rec(filling: dict, k: int):
        if k > n:
            rows = tuple(
                tuple(filling[(r, c)] for c in range(lam[r])) for r in range(len(lam)))
            out.append(rows)
            return
        for r in range(len(lam)):
            c = len([1 for (rr, cc) in filling if rr == r])
            if c >= lam[r]:
                continue
            if r > 0 and (r - 1, c) not in filling:
                continue
            filling[(r, c)] = k
            rec(filling, k + 1)
            del filling[(r, c)]

    rec({}, 1)
    return tuple(sorted(out))


def _tableau_positions(t: tuple) -> dict[int, tuple[int, int]]:
    return {val: (r, c) for r, row in enumerate(t) for c, val in enumerate(row)}


def _swap_values(t: tuple, a: int, b: int) -> tuple:
    return tuple(tuple(b if x == a else a if x == b else x for x in row)
                 for row in t)


class SeminormalRep:
    """Exact rational matrices for the irreducible V_lambda."""

    def __init__(self, lam: tuple[int, ...]):
        self.lam = tuple(lam)
        self.n = sum(lam)
        self.tableaux = standard_tableaux(self.lam)
        self.dim = len(self.tableaux)
        self._index = {t: i for i, t in enumerate(self.tableaux)}
        self._cache: dict[tuple, list[list[Fraction]]] = {}

    def _adjacent(self, k: int) -> list[list[Fraction]]:
        """Matrix of the transposition (k, k+1)."""
        d = self.dim
        M = [[Fraction(0)] * d for _ in range(d)]
        for idx, t in enumerate(self.tableaux):
            pos = _tableau_positions(t)
            (r1, c1), (r2, c2) = pos[k], pos[k + 1]
            if r1 == r2:
                M[idx][idx] = Fraction(1)
            elif c1 == c2:
                M[idx][idx] = Fraction(-1)
            else:
                ax = Fraction((c2 - r2) - (c1 - r1))   # axial distance
                other = self._index[_swap_values(t, k, k + 1)]
                M[idx][idx] = 1 / ax
                if ax > 0:
                    M[other][idx] = Fraction(1)
                else:
                    M[other][idx] = 1 - 1 / ax ** 2
        return M

    @staticmethod
    def _matmul(a, b):
        d = len(a)
        out = [[Fraction(0)] * d for _ in range(d)]
        for i in range(d):
            ai = a[i]
            for k in range(d):
                x = ai[k]
                if x:
                    bk = b[k]
                    oi = out[i]
                    for j in range(d):
                        if bk[j]:
                            oi[j] += x * bk[j]
        return out

    def matrix(self, perm: tuple) -> list[list[Fraction]]:
        """rho(perm), composing adjacent-transposition matrices."""
        perm = tuple(perm)
        if perm in self._cache:
            return self._cache[perm]
        # sorting perm to the identity by right-multiplications s_{w_1}..s_{w_L}
        # means perm = s_{w_L} o ... o s_{w_1}
        word = _sorting_word(perm)
        d = self.dim
        M = [[Fraction(1) if i == j else Fraction(0) for j in range(d)]
             for i in range(d)]
        for k in reversed(word):
            M = self._matmul(M, self._adjacent_cached(k))
        self._cache[perm] = M
        return M

    def _adjacent_cached(self, k: int) -> list[list[Fraction]]:
        key = ("s", k)
        if key not in self._cache:
            self._cache[key] = self._adjacent(k)
        return self._cache[key]

    def anti(self, perm: tuple) -> list[list[Fraction]]:
        """rho(perm^{-1}); an antihomomorphism, as required when equivariant
        maps of free modules are specialized to multiplicity spaces."""
        return self.matrix(invert_perm(perm))

    def character_value(self, mu: tuple) -> int:
        return mn_character(self.lam, tuple(mu))


class ScalarRep:
    """dim-1 representation: trivial (all +1) or sign."""

    def __init__(self, n: int, sign: bool):
        self.n = n
        self.is_sign = sign
        self.lam = ((1,) * n) if sign else ((n,) if n else ())
        self.dim = 1

    def matrix(self, perm: tuple) -> list[list[Fraction]]:
        v = Fraction(perm_sign(perm)) if self.is_sign else Fraction(1)
        return [[v]]

    def anti(self, perm: tuple) -> list[list[Fraction]]:
        return self.matrix(perm)

    def scalar(self, perm: tuple) -> int:
        return perm_sign(perm) if self.is_sign else 1


def irreducible_rep(lam: tuple[int, ...]):
    """The cheapest exact model of V_lambda with the matrix/anti interface."""
    lam = tuple(lam)
    n = sum(lam)
    if lam == ((n,) if n else ()):
        return ScalarRep(n, sign=False)
    if lam == (1,) * n:
        return ScalarRep(n, sign=True)
    return SeminormalRep(lam)


def _sorting_word(perm: tuple) -> list[int]:
    """Adjacent swaps w_1..w_L with perm o s_{w_1} o ... o s_{w_L} = id.

    Right-multiplying by s_k swaps the entries at positions k, k+1 of the
    one-line form, so bubble sort records exactly this word.
    """
    arr = list(perm)
    n = len(arr)
    word = []
    changed = True
    while changed:
        changed = False
        for k in range(n - 1):
            if arr[k] > arr[k + 1]:
                arr[k], arr[k + 1] = arr[k + 1], arr[k]
                word.append(k + 1)
                changed = True
    return word


# -- isotypic projectors ------------------------------------------------------


def isotypic_projector(lam: tuple[int, ...],
                       cell_action) -> RationalSparseMatrix:
    """Central idempotent e_lambda = (dim/n!) sum chi(s^{-1}) M_s on an
    explicit representation; ``cell_action`` maps a permutation tuple to a
    RationalSparseMatrix.  Exponential in n; meant for small n and tests.
    """
    lam = tuple(lam)
    n = sum(lam)
    dim0 = None
    acc = None
    for perm in itertools.permutations(range(1, n + 1)):
        M = cell_action(perm)
        if acc is None:
            dim0 = M.rows
            acc = RationalSparseMatrix(dim0, dim0)
        chi = mn_character(lam, cycle_type(invert_perm(perm)))
        if chi:
            acc = acc + M.scale(chi)
    assert acc is not None
    e = acc.scale(Fraction(character_dimension(lam), factorial(n)))
    if (e @ e) != e:
        raise ActionViolationError("isotypic projector is not idempotent; "
                                   "cell_action is not a representation")
    return e
