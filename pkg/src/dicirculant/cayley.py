"""Connection-set validation and dicirculant construction.

A dicirculant Dic(n, R, T) is the Cayley graph on Dic_n with connection
set a^R u a^T b, where 0 not in R, R = -R and T = n + T (mod 2n).
Vertices are indexed a^i -> i and a^i b -> 2n + i, so adjacency rows are
stable across runs and safe to serialize.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from . import group
from .group import Element

ZERO_IN_R = "ZeroInR"
R_NOT_SYMMETRIC = "RNotSymmetric"
T_NOT_HALF_PERIODIC = "TNotHalfPeriodic"
NOT_GENERATING = "NotGenerating"


class SpecValidationError(ValueError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("invalid connection set: " + ", ".join(self.violations))


class SpecParseError(ValueError):
    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} (at position {position})")


class Graph:
    """Dense undirected graph; one Python-int bitset row per vertex."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(rows)

    @property
    def n_vertices(self):
        return len(self.rows)

    def has_edge(self, u, v):
        return bool(self.rows[u] >> v & 1)

    def degree(self, v):
        return self.rows[v].bit_count()

    def neighbors(self, v):
        return bit_members(self.rows[v])

    def complement(self):
        full = (1 << self.n_vertices) - 1
        return Graph((full & ~row & ~(1 << v)) for v, row in enumerate(self.rows))

    def induced(self, vertices):
        """Subgraph on the given vertices, reindexed in the given order."""
        vertices = list(vertices)
        pos = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for w in bit_members(self.rows[v]):
                if w in pos:
                    row |= 1 << pos[w]
            rows.append(row)
        return Graph(rows)

    def edges(self):
        for u in range(self.n_vertices):
            for v in bit_members(self.rows[u]):
                if u < v:
                    yield (u, v)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)


def bit_members(x):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def bitset(members):
    out = 0
    for v in members:
        out |= 1 << v
    return out


def graph_from_edges(n_vertices, edges):
    rows = [0] * n_vertices
    for u, v in edges:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(rows)


@dataclass(frozen=True)
class ConnectionSpec:
    n: int
    R: frozenset
    T: frozenset
    connected: bool = field(compare=False)

    @property
    def degree(self):
        return len(self.R) + len(self.T)

    def sorted_sets(self):
        return tuple(sorted(self.R)), tuple(sorted(self.T))

    def __repr__(self):
        r, t = self.sorted_sets()
        return (f"n={self.n}; R={','.join(map(str, r))}; "
                f"T={','.join(map(str, t))}")


def spec_violations(n, R, T):
    """Names of violated structural constraints (connectivity excluded)."""
    m = 2 * n
    R = {r % m for r in R}
    T = {t % m for t in T}
    violations = []
    if 0 in R:
        violations.append(ZERO_IN_R)
    if R != {-r % m for r in R}:
        violations.append(R_NOT_SYMMETRIC)
    if T != {(t + n) % m for t in T}:
        violations.append(T_NOT_HALF_PERIODIC)
    return violations


def validate_spec(n, R, T):
    """Validated spec, or SpecValidationError naming each violated
    constraint.  Disconnected specs are accepted but flagged."""
    if n < 1:
        raise SpecValidationError(["NonPositiveN"])
    m = 2 * n
    R = frozenset(r % m for r in R)
    T = frozenset(t % m for t in T)
    violations = spec_violations(n, R, T)
    if violations:
        raise SpecValidationError(violations)
    gens = [Element(r, False) for r in sorted(R)]
    gens += [Element(t, True) for t in sorted(T)]
    connected = group.generated_subgroup(gens, n).order == 4 * n if gens else False
    return ConnectionSpec(n, R, T, connected)


def vertex_index(g, n):
    return g.exp + (2 * n if g.flip else 0)

def vertex_element(v, n):
    m = 2 * n
    return Element(v % m, v >= m)


def build_graph(spec):
    """Adjacency from the neighbor formulas
    N(a^i) = a^(i+R) u a^(i+T) b and N(a^i b) = a^(i-T) u a^(i+R) b."""
    n = spec.n
    m = 2 * n
    rows = []
    for i in range(m):  # vertex a^i
        row = 0
        for r in spec.R:
            row |= 1 << (i + r) % m
        for t in spec.T:
            row |= 1 << m + (i + t) % m
        rows.append(row)
    for i in range(m):  # vertex a^i b
        row = 0
        for t in spec.T:
            row |= 1 << (i - t) % m
        for r in spec.R:
            row |= 1 << m + (i + r) % m
        rows.append(row)
    return Graph(rows)


def definitional_graph(spec):
    """Adjacency straight from the Cayley definition g^-1 h in S.
    Used as an oracle against build_graph."""
    n = spec.n
    S = {Element(r, False) for r in spec.R} | {Element(t, True) for t in spec.T}
    verts = [vertex_element(v, n) for v in range(4 * n)]
    rows = []
    for g in verts:
        ginv = group.inverse(g, n)
        row = 0
        for j, h in enumerate(verts):
            if group.multiply(ginv, h, n) in S:
                row |= 1 << j
        rows.append(row)
    return Graph(rows)


def apply_automorphism(params, spec):
    """Spec for the isomorphic graph under a -> a^u, b -> a^v b."""
    R, T = group.transform_sets(params, spec.n, spec.R, spec.T)
    return ConnectionSpec(spec.n, R, T, spec.connected)


def canonicalize(spec):
    """Lexicographically least (R, T) over the whole (u, v) family.

    This dedups up to the (u, v) automorphisms only; distinct canonical
    specs can still build isomorphic graphs.
    """
    best = spec.sorted_sets()
    for params in group.automorphism_params(spec.n):
        R, T = group.transform_sets(params, spec.n, spec.R, spec.T)
        key = (tuple(sorted(R)), tuple(sorted(T)))
        if key < best:
            best = key
    return ConnectionSpec(spec.n, frozenset(best[0]), frozenset(best[1]),
                          spec.connected)


_SPEC_RE = re.compile(
    r"^\s*n\s*=\s*(\d+)\s*;\s*R\s*=\s*([\d\s,]*)\s*;\s*T\s*=\s*([\d\s,]*)\s*$")


def parse_spec(text):
    """Parse 'n=<int>; R=<comma list>; T=<comma list>' (whitespace-free
    or not); residues are reduced mod 2n."""
    match = _SPEC_RE.match(text)
    if match is None:
        for pos, (ch_a, ch_b) in enumerate(zip(text, "n=")):
            if ch_a != ch_b:
                break
        else:
            pos = 0
        raise SpecParseError("expected 'n=<int>; R=<list>; T=<list>'", pos)

    def parse_list(chunk, offset):
        values = []
        for piece in chunk.split(","):
            piece = piece.strip()
            if not piece:
                continue
            if not piece.isdigit():
                raise SpecParseError(f"bad residue {piece!r}",
                                     offset + chunk.find(piece))
            values.append(int(piece))
        return values

    n = int(match.group(1))
    if n < 1:
        raise SpecParseError("n must be >= 1", match.start(1))
    R = parse_list(match.group(2), match.start(2))
    T = parse_list(match.group(3), match.start(3))
    return validate_spec(n, R, T)
