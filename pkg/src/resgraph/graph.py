"""Resolution graphs: data model, text format, validation, intersection form.

A graph file is line oriented::

    # Example: the -1[g=1] -- -2 -- -2 chain
    vertex a0 e=-1 g=1
    vertex a1 e=-2
    vertex a2 e=-2
    edge a0 a1
    edge a1 a2

Omitted attributes default to 0, repeated ``edge`` lines add up to the
intersection multiplicity, and vertex order fixes the coordinate order of
every cycle computed downstream.
"""
import re
from collections import Counter
from dataclasses import dataclass, field

from . import linalg

_ID = re.compile(r"[A-Za-z0-9_]+\Z")
_ATTRS = ("e", "g", "nodes", "cusps")


class GraphSyntaxError(ValueError):
    """Malformed graph text.  ``lineno`` is 1-based."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class InvalidGraphError(ValueError):
    """A graph that violates one of the resolution-graph invariants."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(v.message for v in self.violations))


@dataclass(frozen=True)
class VertexData:
    id: str
    self_int: int
    genus: int = 0
    nodes: int = 0
    cusps: int = 0

    @property
    def delta(self):
        return self.nodes + self.cusps

    @property
    def smooth_rational(self):
        return self.genus == 0 and self.delta == 0


@dataclass(frozen=True)
class ResolutionGraph:
    vertices: tuple
    # sorted ((i, j), multiplicity) pairs with i < j, indices into vertices
    edges: tuple = ()

    @classmethod
    def build(cls, vertices, edges=()):
        """Construct from vertex records and an iterable of id pairs."""
        vertices = tuple(vertices)
        index = {v.id: i for i, v in enumerate(vertices)}
        counts = Counter()
        for a, b in edges:
            i, j = index[a], index[b]
            if i == j:
                raise GraphSyntaxError(f"self-loop edge on {a!r}")
            counts[min(i, j), max(i, j)] += 1
        return cls(vertices, tuple(sorted(counts.items())))

    def __len__(self):
        return len(self.vertices)

    @property
    def ids(self):
        return [v.id for v in self.vertices]

    def index(self, vid):
        for i, v in enumerate(self.vertices):
            if v.id == vid:
                return i
        raise KeyError(vid)

    def edge_count(self):
        """Number of edges counted with multiplicity."""
        return sum(mult for _, mult in self.edges)

    def neighbours(self, i):
        out = []
        for (a, b), _ in self.edges:
            if a == i:
                out.append(b)
            elif b == i:
                out.append(a)
        return out

    def is_connected(self, subset=None):
        subset = set(range(len(self))) if subset is None else set(subset)
        if not subset:
            return False
        start = min(subset)
        seen = {start}
        stack = [start]
        while stack:
            i = stack.pop()
            for j in self.neighbours(i):
                if j in subset and j not in seen:
                    seen.add(j)
                    stack.append(j)
        return seen == subset

    def components(self, subset):
        """Connected components (as sorted index lists) of an induced subgraph."""
        rest = set(subset)
        comps = []
        while rest:
            start = min(rest)
            seen = {start}
            stack = [start]
            while stack:
                i = stack.pop()
                for j in self.neighbours(i):
                    if j in rest and j not in seen:
                        seen.add(j)
                        stack.append(j)
            comps.append(sorted(seen))
            rest -= seen
        return comps

    def form(self):
        return intersection_form(self)


@dataclass(frozen=True)
class IntersectionForm:
    matrix: tuple
    k_degrees: tuple

    def dot(self, x, y):
        m = self.matrix
        n = len(m)
        return sum(x[i] * m[i][j] * y[j] for i in range(n) if x[i] for j in range(n) if y[j])

    def row(self, i, x):
        """A_i . x"""
        return sum(a * b for a, b in zip(self.matrix[i], x))

    def k_dot(self, x):
        return sum(a * b for a, b in zip(self.k_degrees, x))


@dataclass(frozen=True)
class Violation:
    kind: str
    message: str
    where: tuple = field(default=())


def parse_graph(text):
    """Parse graph text into a ResolutionGraph."""
    vertices = []
    seen = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        keyword = parts[0]
        if keyword == "vertex":
            if len(parts) < 2 or not _ID.match(parts[1]):
                raise GraphSyntaxError("expected 'vertex <id> e=<int> ...'", lineno)
            vid = parts[1]
            if vid in seen:
                raise GraphSyntaxError(f"duplicate vertex id {vid!r}", lineno)
            attrs = {}
            for tok in parts[2:]:
                key, eq, value = tok.partition("=")
                if not eq or key not in _ATTRS:
                    raise GraphSyntaxError(f"unknown attribute {tok!r}", lineno)
                if key in attrs:
                    raise GraphSyntaxError(f"attribute {key!r} given twice", lineno)
                pattern = r"-?\d+\Z" if key == "e" else r"\d+\Z"
                if not re.match(pattern, value):
                    raise GraphSyntaxError(f"bad value for {key}: {value!r}", lineno)
                attrs[key] = int(value)
            if "e" not in attrs:
                raise GraphSyntaxError(f"vertex {vid!r} lacks e=<int>", lineno)
            seen[vid] = lineno
            vertices.append(VertexData(vid, attrs["e"], attrs.get("g", 0),
                                       attrs.get("nodes", 0), attrs.get("cusps", 0)))
        elif keyword == "edge":
            if len(parts) != 3 or not all(_ID.match(p) for p in parts[1:]):
                raise GraphSyntaxError("expected 'edge <id> <id>'", lineno)
            a, b = parts[1], parts[2]
            for vid in (a, b):
                if vid not in seen:
                    raise GraphSyntaxError(f"edge references unknown vertex {vid!r}", lineno)
            if a == b:
                raise GraphSyntaxError(f"self-loop edge on {a!r} (encode as nodes=)", lineno)
            edges.append((a, b))
        else:
            raise GraphSyntaxError(f"unknown keyword {keyword!r}", lineno)
    if not vertices:
        raise GraphSyntaxError("graph has no vertices")
    return ResolutionGraph.build(vertices, edges)


def read_graph(path):
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def serialize(g):
    """Canonical text form; parse_graph(serialize(g)) == g."""
    lines = []
    for v in g.vertices:
        parts = [f"vertex {v.id} e={v.self_int}"]
        if v.genus:
            parts.append(f"g={v.genus}")
        if v.nodes:
            parts.append(f"nodes={v.nodes}")
        if v.cusps:
            parts.append(f"cusps={v.cusps}")
        lines.append(" ".join(parts))
    ids = g.ids
    for (i, j), mult in g.edges:
        lines.extend([f"edge {ids[i]} {ids[j]}"] * mult)
    return "\n".join(lines) + "\n"


def intersection_form(g):
    """Intersection matrix and the adjunction degrees K.A_i."""
    n = len(g)
    m = [[0] * n for _ in range(n)]
    for i, v in enumerate(g.vertices):
        m[i][i] = v.self_int
    for (i, j), mult in g.edges:
        m[i][j] += mult
        m[j][i] += mult
    k = tuple(-v.self_int - 2 + 2 * v.genus + 2 * v.delta for v in g.vertices)
    return IntersectionForm(tuple(map(tuple, m)), k)


def is_negative_definite(f):
    """(-1)^k det of every leading principal k-minor is positive."""
    matrix = f.matrix if isinstance(f, IntersectionForm) else f
    minors = linalg.leading_minors(matrix)
    return all(d is not None and (-1) ** k * d > 0 for k, d in enumerate(minors, start=1))


def validate(g, allow_nonminimal=False):
    """List every violated invariant; an empty list means the graph is valid.

    With ``allow_nonminimal`` smooth rational -1 curves are tolerated (the
    caller is expected to warn).
    """
    out = []
    for i, v in enumerate(g.vertices):
        if v.self_int > -1:
            out.append(Violation("self_int", f"vertex {v.id}: self-intersection {v.self_int} > -1", (v.id,)))
        if min(v.genus, v.nodes, v.cusps) < 0:
            out.append(Violation("negative", f"vertex {v.id}: negative genus/nodes/cusps", (v.id,)))
        if not allow_nonminimal and v.smooth_rational and v.self_int == -1:
            out.append(Violation("nonminimal", f"vertex {v.id}: contractible smooth rational -1 curve", (v.id,)))
    for (i, j), _ in g.edges:
        if i == j:
            out.append(Violation("self_loop", f"self-loop edge on {g.vertices[i].id}", (g.vertices[i].id,)))
    if not g.is_connected():
        out.append(Violation("disconnected", "graph is not connected"))
    if not is_negative_definite(intersection_form(g)):
        out.append(Violation("not_negative_definite", "intersection form is not negative definite"))
    return out


def require_valid(g, allow_nonminimal=False):
    violations = validate(g, allow_nonminimal)
    if violations:
        raise InvalidGraphError(violations)
    return g
