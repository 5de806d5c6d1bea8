"""Exhaustive enumeration of connection specs, the full survey with its
classifier-vs-BFS cross-check, and backtracking difference-set search."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import classifier, fourier, metrics, structure
from .cayley import ConnectionSpec, build_graph, canonicalize, validate_spec
from .classifier import classify
from .fourier import DEFAULT_TOLERANCE
from .metrics import IntersectionArray, distance_partition, is_distance_regular


class ParameterContradictionError(ValueError):
    pass


def enumerate_specs(n, dedup=True):
    """All valid (R, T) for this n, disconnected ones included (flagged
    on the spec).  R is built from the generator pairs {i, 2n-i}
    (1 <= i <= n; {n} is a singleton) and T from the pairs {i, n+i}
    (0 <= i <= n-1), so R = -R and T = n + T hold by construction.
    With dedup only specs that equal their canonical form are emitted.
    """
    m = 2 * n
    r_pairs = [frozenset({i, (m - i) % m}) for i in range(1, n + 1)]
    t_pairs = [frozenset({i, i + n}) for i in range(n)]
    for r_mask in range(1 << len(r_pairs)):
        R = frozenset().union(*(pair for b, pair in enumerate(r_pairs)
                                if r_mask >> b & 1) or [frozenset()])
        for t_mask in range(1 << len(t_pairs)):
            T = frozenset().union(*(pair for b, pair in enumerate(t_pairs)
                                    if t_mask >> b & 1) or [frozenset()])
            spec = validate_spec(n, R, T)
            if dedup and canonicalize(spec).sorted_sets() != spec.sorted_sets():
                continue
            yield spec


@dataclass(frozen=True)
class DrgInstance:
    spec: ConnectionSpec
    array: IntersectionArray
    classification: classifier.Classification
    bipartite: bool
    antipodal: bool
    primitive: bool
    fourier_ok: bool
    family: structure.FamilyTag


@dataclass(frozen=True)
class SpecRow:
    """One line of the survey: a spec and everything measured about it."""

    spec: ConnectionSpec
    drg: bool
    array: IntersectionArray = None
    classification: classifier.Classification = None
    instance: DrgInstance = None


@dataclass
class SurveyReport:
    n: int
    total_specs: int = 0
    connected_specs: int = 0
    canonical_classes: int = 0
    rows: list = field(default_factory=list)
    drg_instances: list = field(default_factory=list)
    cross_check_failures: list = field(default_factory=list)

    def to_dict(self, include_rows=False):
        def spec_dict(spec):
            r, t = spec.sorted_sets()
            return {"n": spec.n, "R": list(r), "T": list(t),
                    "connected": spec.connected}

        out = {
            "schema_version": 1,
            "n": self.n,
            "total_specs": self.total_specs,
            "connected_specs": self.connected_specs,
            "canonical_classes": self.canonical_classes,
            "drg_instances": [
                {
                    "spec": spec_dict(inst.spec),
                    "intersection_array": {"b": list(inst.array.b),
                                           "c": list(inst.array.c)},
                    "classification": {"tag": inst.classification.tag,
                                       "params": list(inst.classification.params)},
                    "bipartite": inst.bipartite,
                    "antipodal": inst.antipodal,
                    "primitive": inst.primitive,
                    "fourier_ok": inst.fourier_ok,
                    "family": {"kind": inst.family.kind,
                               "params": list(inst.family.params),
                               "also": list(inst.family.also)},
                }
                for inst in self.drg_instances
            ],
            "cross_check_failures": list(self.cross_check_failures),
        }
        if include_rows:
            out["rows"] = [
                {"spec": spec_dict(row.spec), "drg": row.drg,
                 "array": repr(row.array) if row.array else None,
                 "class": repr(row.classification) if row.classification else None}
                for row in self.rows
            ]
        return out


def evaluate_spec(spec, tolerance=DEFAULT_TOLERANCE):
    """BFS truth, classification, and structure flags for one spec."""
    if not spec.connected:
        return SpecRow(spec, False)
    g = build_graph(spec)
    drg = is_distance_regular(g, vertex_transitive_hint=True)
    classification = classify(spec)
    if not isinstance(drg, IntersectionArray):
        return SpecRow(spec, False, None, classification)
    d = drg.d
    bip = structure.bipartition(g) is not None
    antip = structure.antipodal_classes(g, d) is not None
    prim = structure.is_primitive(g, d)
    dp = distance_partition(spec, g)
    fourier_ok = fourier.check_fourier_lemma(spec, dp, drg, tolerance)
    family = structure.recognize_family(g)
    instance = DrgInstance(spec, drg, classification, bip, antip, prim,
                           fourier_ok, family)
    return SpecRow(spec, True, drg, classification, instance)


def _eval_for_pool(args):
    spec, tolerance = args
    return evaluate_spec(spec, tolerance)


def survey(n, dedup=True, tolerance=DEFAULT_TOLERANCE, workers=1):
    """Run enumerate -> build -> BFS DRG test -> classify -> structure
    analysis -> Fourier check over every connected spec; record every
    disagreement between the BFS truth and the classifier (there should
    be none)."""
    report = SurveyReport(n=n)
    specs = sorted(enumerate_specs(n, dedup=dedup),
                   key=lambda s: s.sorted_sets())
    report.total_specs = sum(1 for _ in enumerate_specs(n, dedup=False))
    report.canonical_classes = sum(1 for _ in enumerate_specs(n, dedup=True))
    report.connected_specs = sum(1 for s in specs if s.connected)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_eval_for_pool,
                                 [(s, tolerance) for s in specs],
                                 chunksize=16))
    else:
        rows = [evaluate_spec(s, tolerance) for s in specs]
    rows.sort(key=lambda row: row.spec.sorted_sets())
    for row in rows:
        report.rows.append(row)
        if not row.spec.connected:
            continue
        classifier_says_drg = row.classification.tag != classifier.NOT_DRG
        if classifier_says_drg != row.drg:
            report.cross_check_failures.append({
                "spec": repr(row.spec),
                "bfs_drg": row.drg,
                "classifier_tag": row.classification.tag,
            })
        if row.instance is not None:
            report.drg_instances.append(row.instance)
    return report


def search_difference_sets(table, v, k, lam, limit=None):
    """All (v, k, lam) difference sets in the group given by `table`,
    up to right translation: only sets whose sorted index tuple is
    minimal among all right-translates Dg are returned.  Backtracking
    over k-subsets with partial difference-count pruning."""
    classifier.validate_group_table(table)
    if len(table) != v:
        raise ParameterContradictionError(f"group order {len(table)} != v = {v}")
    if k * (k - 1) != lam * (v - 1):
        raise ParameterContradictionError(
            f"k(k-1) = {k * (k - 1)} != lam(v-1) = {lam * (v - 1)}")
    inv = [next(j for j in range(v) if table[i][j] == 0) for i in range(v)]
    results = []
    counts = [0] * v
    chosen = []

    def is_canonical(D):
        key = tuple(sorted(D))
        return all(key <= tuple(sorted(table[d][g] for d in D))
                   for g in range(1, v))

    def extend(start):
        if limit is not None and len(results) >= limit:
            return
        if len(chosen) == k:
            if all(c == lam for c in counts[1:]) and is_canonical(chosen):
                results.append(frozenset(chosen))
            return
        if v - start < k - len(chosen):
            return
        for nxt in range(start, v):
            deltas = [table[nxt][inv[d]] for d in chosen]
            deltas += [table[d][inv[nxt]] for d in chosen]
            for delta in deltas:
                counts[delta] += 1
            if all(counts[delta] <= lam for delta in deltas):
                chosen.append(nxt)
                extend(nxt + 1)
                chosen.pop()
            for delta in deltas:
                counts[delta] -= 1
            if limit is not None and len(results) >= limit:
                return

    extend(0)
    return results
