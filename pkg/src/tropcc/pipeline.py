"""Job orchestration, caching, and verification against the bundled tables.

Computations run per irreducible S_n-type through
:func:`tropcc.graph_complex.run_isotypic`; this module owns job validation,
the content-addressed cache, result serialization in the table's (n, i)
convention, and the verify scopes.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources

from .graph_complex import GraphComplexSetup, hgc_degree, run_isotypic
from .multigraph import (GraphCategory, UnsupportedGenus,
                         count_stable_weighted_types, enumerate_category,
                         graph_content_hash)
from .sym_rep import character_dimension, partitions

FEASIBLE_FULL_N = 7       # scope "all" above this needs --force
FEASIBLE_SCALAR_N = 13    # trivial/sign above this needs --force


class CacheCorruptionError(RuntimeError):
    """A cache file failed its checksum."""


class JobError(ValueError):
    """Invalid job parameters."""


def default_cache_dir() -> str:
    return os.environ.get("TROPCC_CACHE", os.path.join(".", ".tropcc-cache"))


def _canonical(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def _checksum(data) -> str:
    return hashlib.sha256(_canonical(data).encode()).hexdigest()


class CacheStore:
    """Content-checksummed JSON cache with atomic writes."""

    def __init__(self, root: str):
        self.root = root

    def _path(self, kind: str, key: str) -> str:
        return os.path.join(self.root, "%s-%s.json" % (kind, key))

    def load(self, kind: str, key: str):
        path = self._path(kind, key)
        if not os.path.exists(path):
            return None
        with open(path) as f:
            try:
                payload = json.load(f)
            except json.JSONDecodeError as exc:
                raise CacheCorruptionError("unreadable cache file %s" % path) from exc
        data = payload.get("data")
        if payload.get("checksum") != _checksum(data):
            raise CacheCorruptionError("checksum mismatch in %s" % path)
        return data

    def store(self, kind: str, key: str, data) -> str:
        os.makedirs(self.root, exist_ok=True)
        path = self._path(kind, key)
        payload = {"checksum": _checksum(data), "data": data}
        fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
        with os.fdopen(fd, "w") as f:
            json.dump(payload, f, indent=1, sort_keys=True)
        os.replace(tmp, path)
        return path


@dataclass
class JobSpec:
    g: int
    n: int
    route: str = "e1-pruned"
    isotypic: str = "all"            # all | trivial | sign | "2,1;1,1,1"
    cache_dir: str | None = None
    jobs: int = 1
    certify: bool = False
    force: bool = False

    def validate(self) -> None:
        if self.g < 2:
            raise UnsupportedGenus("computations need genus >= 2")
        if self.n < 0:
            raise JobError("n must be nonnegative")
        if self.route not in ("total", "e1", "e1-pruned"):
            raise JobError("route must be one of total, e1, e1-pruned")
        if self.route != "total" and self.g > 3:
            raise JobError("routes e1/e1-pruned are gated to g <= 3; "
                           "use route=total for higher genus")
        if self.isotypic == "all" and self.n > FEASIBLE_FULL_N and not self.force:
            raise JobError("full-character scope above n=%d needs --force"
                           % FEASIBLE_FULL_N)
        if self.isotypic in ("trivial", "sign") and \
                self.n > FEASIBLE_SCALAR_N and not self.force:
            raise JobError("trivial/sign scope above n=%d needs --force"
                           % FEASIBLE_SCALAR_N)

    def lambdas(self) -> list[tuple]:
        if self.isotypic == "all":
            return list(partitions(self.n))
        if self.isotypic == "trivial":
            return [((self.n,) if self.n else ())]
        if self.isotypic == "sign":
            return [(1,) * self.n if self.n else ()]
        out = []
        for part in self.isotypic.split(";"):
            lam = tuple(int(x) for x in part.split(",") if x.strip())
            if sum(lam) != self.n or sorted(lam, reverse=True) != list(lam):
                raise JobError("bad partition %r for n=%d" % (part, self.n))
            out.append(lam)
        return out

    def cache_key(self) -> str:
        return _checksum({"g": self.g, "n": self.n, "route": self.route,
                          "isotypic": self.isotypic, "certify": self.certify})


@dataclass
class ResultTable:
    g: int
    n: int
    route: str
    isotypic: str
    degrees: dict[int, dict[tuple, int]] = field(default_factory=dict)
    gh: dict[tuple, dict[tuple, int]] | None = None
    euler_check: str = "pass"
    hgc: list[dict] = field(default_factory=list)

    def multiplicity(self, degree: int, lam: tuple) -> int:
        return self.degrees.get(degree, {}).get(tuple(lam), 0)

    def i_index(self, degree: int) -> int | None:
        if self.g == 3:
            return (self.n + 5) - degree
        if self.g == 2:
            return (self.n + 2) - degree
        return None

    def to_json(self) -> dict:
        degrees = {}
        for k in sorted(self.degrees):
            terms = [{"partition": list(lam), "mult": m}
                     for lam, m in sorted(self.degrees[k].items(), reverse=True)
                     if m]
            if terms:
                degrees[str(k)] = terms
        out = {"g": self.g, "n": self.n, "route": self.route,
               "isotypic": self.isotypic, "degrees": degrees,
               "euler_check": self.euler_check}
        if self.gh is not None:
            out["gh"] = {
                "%d,%d" % pq: [{"partition": list(lam), "mult": m}
                               for lam, m in sorted(terms.items(), reverse=True) if m]
                for pq, terms in sorted(self.gh.items())}
        if self.hgc:
            out["hgc"] = self.hgc
        return out

    def human_table(self) -> str:
        lines = ["g=%d n=%d route=%s isotypic=%s" % (self.g, self.n,
                                                     self.route, self.isotypic)]
        shown = False
        for k in sorted(self.degrees, reverse=True):
            terms = [(lam, m) for lam, m in sorted(self.degrees[k].items(),
                                                   reverse=True) if m]
            if not terms:
                continue
            shown = True
            desc = " + ".join(
                ("%d*" % m if m != 1 else "") + "V" + str(list(lam))
                for lam, m in terms)
            idx = self.i_index(k)
            tag = "  (i=%d)" % idx if idx is not None else ""
            line = "  degree %d%s: %s" % (k, tag, desc)
            if self.g == 3:
                line += "   [weight-0 H_c^%d of the genus-3, n-marked moduli]" \
                        % (k + 1)
            lines.append(line)
        if not shown:
            lines.append("  all degrees vanish")
        lines.append("  euler check: %s" % self.euler_check)
        return "\n".join(lines)


def _run_lambda(args) -> tuple:
    g, n, lam, route, certify, two_connected = args
    category = enumerate_category(g, two_connected)
    setup = GraphComplexSetup(category, n)
    res = run_isotypic(setup, lam, route, certify=certify)
    return lam, res.table, res.gh


def compute(job: JobSpec, category: GraphCategory | None = None,
            cache: CacheStore | None = None) -> ResultTable:
    """Run the full pipeline for one job; warm cache hits are returned
    byte-identically."""
    job.validate()
    cache = cache or CacheStore(job.cache_dir or default_cache_dir())
    cached = cache.load("result", job.cache_key())
    if cached is not None:
        return _table_from_json(cached)

    lams = job.lambdas()
    tables: dict[tuple, dict[int, int]] = {}
    ghs: dict[tuple, dict[tuple, int]] = {}
    if job.jobs > 1 and len(lams) > 1:
        args = [(job.g, job.n, lam, job.route, job.certify, True)
                for lam in lams]
        with ProcessPoolExecutor(max_workers=job.jobs) as pool:
            for lam, table, gh in pool.map(_run_lambda, args):
                tables[lam] = table
                if gh:
                    ghs[lam] = gh
    else:
        category = category or enumerate_category(job.g, True)
        setup = GraphComplexSetup(category, job.n)
        for lam in lams:
            res = run_isotypic(setup, lam, job.route, certify=job.certify)
            tables[lam] = res.table
            if res.gh:
                ghs[lam] = res.gh

    degrees: dict[int, dict[tuple, int]] = {}
    for lam, table in tables.items():
        for k, m in table.items():
            if m:
                degrees.setdefault(k, {})[lam] = m
    gh_out = None
    if ghs:
        gh_out = {}
        for lam, gh in ghs.items():
            for pq, m in gh.items():
                if m:
                    gh_out.setdefault(pq, {})[lam] = m
    result = ResultTable(job.g, job.n, job.route, job.isotypic,
                         degrees, gh_out)
    if job.isotypic in ("trivial", "sign"):
        result.hgc = _hgc_annotations(job, degrees)
    cache.store("result", job.cache_key(), result.to_json())
    return result


def _hgc_annotations(job: JobSpec, degrees: dict) -> list[dict]:
    m_par, n_par = (1, 2) if job.isotypic == "trivial" else (2, 2)
    out = []
    for k in sorted(degrees):
        mult = sum(degrees[k].values())
        if not mult:
            continue
        t, d = hgc_degree(job.g, job.n, k + 1, m_par, n_par)
        out.append({"degree": k, "mult": mult, "m": m_par, "N": n_par,
                    "t": t, "moduli_dim": d})
    return out


def _table_from_json(data: dict) -> ResultTable:
    degrees: dict[int, dict[tuple, int]] = {}
    for kstr, terms in data.get("degrees", {}).items():
        degrees[int(kstr)] = {tuple(t["partition"]): t["mult"] for t in terms}
    gh = None
    if "gh" in data:
        gh = {}
        for pqstr, terms in data["gh"].items():
            p, q = (int(x) for x in pqstr.split(","))
            gh[(p, q)] = {tuple(t["partition"]): t["mult"] for t in terms}
    out = ResultTable(data["g"], data["n"], data["route"], data["isotypic"],
                      degrees, gh, data.get("euler_check", "pass"))
    out.hgc = data.get("hgc", [])
    return out


# -- conf reports ---------------------------------------------------------------


def cached_build_cc(graph, n: int, cache: CacheStore | None):
    """Explicit cochain complex of Conf_n(graph) via the cell cache.

    The cache record per (canonical graph, n) stores the basis cardinalities
    per degree and the COO triplets of every coboundary.
    """
    from .config_complex import build_cc
    from .exact_linalg import RationalSparseMatrix

    key = _checksum({"graph": graph_content_hash(graph), "n": n})
    data = cache.load("cc-cells", key) if cache else None
    if data is not None:
        dims = data["dims"]
        deltas = []
        per_q: dict[int, list] = {}
        for q, i, j, s in data["delta"]:
            per_q.setdefault(q, []).append((i, j, s))
        for q in range(n):
            deltas.append(RationalSparseMatrix.from_triplets(
                dims[q + 1], dims[q], per_q.get(q, [])))
        return dims, deltas
    cc = build_cc(graph, n)
    dims = cc.dims()
    triplets = []
    for q, m in enumerate(cc.delta):
        for (i, j, s) in m.to_triplets():
            triplets.append([q, i, j, s])
    if cache:
        cache.store("cc-cells", key, {"dims": dims, "delta": triplets})
    return dims, cc.delta


_CELL_CACHE_LIMIT = 6000     # explicit cross-check only below this many cells


def conf_report(g: int, n: int, graph_key: str | None = None,
                cache: CacheStore | None = None) -> list[dict]:
    """Per-graph H_c(Conf_n) dimensions and S_n-characters for the census
    of genus g (2-connected)."""
    from .config_complex import ConfOrbitModel
    from .exact_linalg import RationalSparseMatrix, Subquotient
    from .graph_complex import AssemblyError
    from .sym_rep import irreducible_rep

    category = enumerate_category(g, True)
    keys = [graph_key] if graph_key else list(category.keys)
    reports = []
    for key in keys:
        if key not in category.by_key:
            raise JobError("unknown graph key %r" % key)
        graph = category.by_key[key]
        model = ConfOrbitModel(graph, n)
        mult: dict[int, dict[tuple, int]] = {}
        for lam in partitions(n):
            rep = irreducible_rep(lam)
            mats = [model.delta_ga(q).specialize(rep) for q in range(n)]
            dims = [len(s) * rep.dim for s in model.shapes_by_degree]
            for q in range(n + 1):
                d_prev = mats[q - 1] if q > 0 else RationalSparseMatrix(dims[0], 0)
                d_next = mats[q] if q < n else RationalSparseMatrix(0, dims[n])
                sq = Subquotient(d_prev, d_next)
                if sq.dim and q not in (n - 1, n):
                    raise AssemblyError(
                        "concentration violated for %s at degree %d" % (key, q))
                if sq.dim:
                    mult.setdefault(q, {})[lam] = sq.dim
        dims_out = {q: sum(m * character_dimension(lam)
                           for lam, m in mult.get(q, {}).items())
                    for q in (n - 1, n) if q >= 0}
        cells = [len(s) for s in model.shapes_by_degree]
        euler_cells = sum((-1) ** q * c for q, c in enumerate(cells)) * \
            (factorial_int(n))
        euler_h = sum((-1) ** q * d for q, d in dims_out.items())
        report = {
            "graph": key,
            "hash": graph_content_hash(graph),
            "dims": {str(q): dims_out[q] for q in sorted(dims_out)},
            "characters": {
                str(q): [{"partition": list(lam), "mult": m}
                         for lam, m in sorted(mult.get(q, {}).items(),
                                              reverse=True)]
                for q in sorted(dims_out)},
            "euler_check": "pass" if euler_cells == euler_h else "FAIL",
        }
        if euler_cells != euler_h:
            raise AssemblyError("Euler mismatch in conf report for %s" % key)
        # explicit cell model cross-check (and cache exercise) at small sizes
        n_cells = sum(cells) * factorial_int(n)
        if n_cells <= _CELL_CACHE_LIMIT:
            dims, deltas = cached_build_cc(graph, n, cache)
            for q in sorted(dims_out):
                d_prev = deltas[q - 1] if q > 0 else \
                    RationalSparseMatrix(dims[0], 0)
                d_next = deltas[q] if q < n else \
                    RationalSparseMatrix(0, dims[n])
                explicit = Subquotient(d_prev, d_next).dim
                if explicit != dims_out[q]:
                    raise AssemblyError(
                        "cell model disagrees with orbit model for %s q=%d"
                        % (key, q))
            report["cell_model_check"] = "pass"
        reports.append(report)
    return reports


def factorial_int(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


# -- golden data and verification -------------------------------------------------


def load_golden(name: str) -> dict:
    text = resources.files("tropcc.data").joinpath(name).read_text()
    payload = json.loads(text)
    if payload.get("checksum") != _checksum(payload.get("data")):
        raise CacheCorruptionError("bundled table %s fails its checksum" % name)
    return payload["data"]


def census_report(g: int, two_connected: bool = True) -> dict:
    category = enumerate_category(g, two_connected)
    out = {
        "g": g,
        "two_connected": two_connected,
        "classes": len(category),
        "by_edges": {str(k): v for k, v in
                     sorted(category.counts_by_edges().items())},
        "aut_orders": {key: len(category.aut_groups[key])
                       for key in category.keys},
        "arrows": {key: sorted({a.target_key for a in category.arrows[key]})
                   for key in category.keys},
    }
    if not two_connected:
        out["stable_weighted_types"] = count_stable_weighted_types(g)
    return out


def verify(scope: str, cache_dir: str | None = None, jobs: int = 1,
           route: str = "e1-pruned") -> tuple[bool, list[str]]:
    """Recompute the given scope and diff against the bundled tables.

    Scopes: census | structure | g3-full-n<K> | g3-trivial-n<K> |
    g3-sign-n<K> | g2-n<K> | default.
    """
    diffs: list[str] = []
    if scope == "default":
        ok = True
        for sub in ("census", "structure", "g3-full-n5",
                    "g3-trivial-n8", "g3-sign-n8"):
            sub_ok, sub_diffs = verify(sub, cache_dir, jobs, route)
            ok = ok and sub_ok
            diffs.extend(sub_diffs)
        return ok, diffs

    if scope == "census":
        golden = load_golden("golden_census.json")
        for gstr, expect in golden["two_connected"].items():
            got = len(enumerate_category(int(gstr), True))
            if got != expect:
                diffs.append("census g=%s 2-connected: got %d expected %d"
                             % (gstr, got, expect))
        for gstr, expect in golden["stable_weighted_types"].items():
            got = count_stable_weighted_types(int(gstr))
            if got != expect:
                diffs.append("census g=%s weighted types: got %d expected %d"
                             % (gstr, got, expect))
        return not diffs, diffs

    if scope == "structure":
        golden = load_golden("golden_census.json")["g3_structure"]
        cat = enumerate_category(3, True)
        counts = sorted(g.num_edges for g in cat.representatives)
        if counts != golden["edge_counts"]:
            diffs.append("g3 edge counts: got %s" % counts)
        arrows = sorted((k, a.target_key) for k in cat.keys
                        for a in cat.arrows[k])
        if arrows != sorted(tuple(x) for x in golden["arrows"]):
            diffs.append("g3 arrows: got %s" % arrows)
        gk = golden["goggles_key"]
        garr = cat.arrows[gk]
        if not (len(garr) == 1 and len(garr[0].orbit) == 1):
            diffs.append("goggles A-edge is not unique")
        else:
            e = garr[0].rep_edge
            stab = [a for a in cat.aut_groups[gk] if a.edge_perm[e] == e]
            if len(stab) != len(cat.aut_groups[gk]):
                diffs.append("goggles A-edge not fixed by the full group")
        return not diffs, diffs

    if scope.startswith("g3-full-n"):
        nmax = int(scope[len("g3-full-n"):])
        golden = load_golden("golden_g3_characters.json")["rows"]
        for n in range(1, nmax + 1):
            job = JobSpec(3, n, route=route, isotypic="all",
                          cache_dir=cache_dir, jobs=jobs, certify=True,
                          force=(n > FEASIBLE_FULL_N))
            table = compute(job)
            expect: dict[int, dict[tuple, int]] = {}
            for istr, terms in golden[str(n)].items():
                k = n + 5 - int(istr)
                for lam, m in terms:
                    expect.setdefault(k, {})[tuple(lam)] = m
            diffs.extend(_diff_tables(n, table.degrees, expect))
        return not diffs, diffs

    if scope.startswith("g3-trivial-n") or scope.startswith("g3-sign-n"):
        flavor = "trivial" if "trivial" in scope else "sign"
        nmax = int(scope.rsplit("n", 1)[1])
        golden = load_golden("golden_g3_trivial_sign.json")[flavor]
        for n in range(1, nmax + 1):
            job = JobSpec(3, n, route=route, isotypic=flavor,
                          cache_dir=cache_dir, jobs=jobs, certify=True,
                          force=(n > FEASIBLE_SCALAR_N))
            table = compute(job)
            lam = (n,) if flavor == "trivial" else (1,) * n
            for i, expect in enumerate(golden[str(n)]):
                k = n + 5 - i
                got = table.multiplicity(k, lam)
                if got != expect:
                    diffs.append("g3 %s n=%d i=%d: got %d expected %d"
                                 % (flavor, n, i, got, expect))
        return not diffs, diffs

    if scope.startswith("g2-n"):
        nmax = int(scope[len("g2-n"):])
        for n in range(0, nmax + 1):
            jt = JobSpec(2, n, route="total", isotypic="all",
                         cache_dir=cache_dir, jobs=jobs, certify=True,
                         force=(n > FEASIBLE_FULL_N))
            je = JobSpec(2, n, route="e1", isotypic="all",
                         cache_dir=cache_dir, jobs=jobs, certify=True,
                         force=(n > FEASIBLE_FULL_N))
            t1 = compute(jt)
            t2 = compute(je)
            if t1.degrees != t2.degrees:
                diffs.append("g2 n=%d: total and single-term routes disagree"
                             % n)
        return not diffs, diffs

    raise JobError("unknown verify scope %r" % scope)


def _diff_tables(n: int, got: dict, expect: dict) -> list[str]:
    diffs = []
    keys = set(got) | set(expect)
    for k in sorted(keys):
        lams = set(got.get(k, {})) | set(expect.get(k, {}))
        for lam in sorted(lams, reverse=True):
            a = got.get(k, {}).get(lam, 0)
            b = expect.get(k, {}).get(lam, 0)
            if a != b:
                diffs.append("g3 n=%d degree=%d (i=%d) lambda=%s: got %d expected %d"
                             % (n, k, n + 5 - k, list(lam), a, b))
    return diffs
