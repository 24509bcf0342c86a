"""The cycle lattice of a resolution graph.

Cycles are dense tuples of ints in vertex order.  Rational cycles (the
canonical cycle before its integrality is known) are tuples of Fractions.
"""
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .graph import intersection_form


class PreconditionError(ValueError):
    """An operation was called outside its domain."""


@lru_cache(maxsize=256)
def form_of(g):
    return intersection_form(g)


def zero(g):
    return (0,) * len(g)


def basis(g, i):
    c = [0] * len(g)
    c[i] = 1
    return tuple(c)


def add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def sub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def scale(k, x):
    return tuple(k * a for a in x)


def leq(x, y):
    return all(a <= b for a, b in zip(x, y))


def is_positive(x):
    return all(a >= 0 for a in x) and any(x)


def support(x):
    return frozenset(i for i, a in enumerate(x) if a)


def is_integral(x):
    return all(Fraction(a).denominator == 1 for a in x)


def dot(g, x, y):
    return form_of(g).dot(x, y)


def intersections(g, x):
    """The vector (A_i . x)_i."""
    return tuple(linalg.matvec(form_of(g).matrix, x))


def self_intersection(g, x):
    return dot(g, x, x)


def euler_char(g, d):
    """chi(D) = -(D.D + D.K) / 2 for an arbitrary integer cycle D."""
    f = form_of(g)
    twice = f.dot(d, d) + f.k_dot(d)
    assert twice % 2 == 0, f"D(D+K) odd for {d}: graph is not a valid resolution graph"
    return -twice // 2


@dataclass(frozen=True)
class Step:
    vertex: int
    before: tuple
    after: tuple
    intersection: int  # A_i . Z_l before the addition, always > 0
    smooth_rational: bool


@dataclass(frozen=True)
class ComputationSequence:
    start: tuple
    steps: tuple

    @property
    def end(self):
        return self.steps[-1].after if self.steps else self.start

    def __len__(self):
        return len(self.steps)


def _greedy(g, start, subset, rng=None):
    f = form_of(g)
    z = list(start)
    order = sorted(subset)
    steps = []
    while True:
        positive = [i for i in order if f.row(i, z) > 0]
        if not positive:
            break
        i = rng.choice(positive) if rng is not None else positive[0]
        before = tuple(z)
        z[i] += 1
        steps.append(Step(i, before, tuple(z), f.row(i, before), g.vertices[i].smooth_rational))
    return ComputationSequence(tuple(start), tuple(steps))


def _check_subset(g, subset):
    subset = frozenset(range(len(g))) if subset is None else frozenset(subset)
    if not subset:
        raise PreconditionError("empty vertex subset")
    if not subset <= set(range(len(g))):
        raise PreconditionError("subset has indices outside the graph")
    if not g.is_connected(subset):
        raise PreconditionError("subset does not induce a connected subgraph")
    return subset


def fundamental_cycle(g, subset=None, seed=None):
    """Artin's fundamental cycle of a connected vertex subset via Laufer's loop.

    Starts from a basis cycle and keeps adding a vertex A_i of the subset
    with A_i.Z > 0 until none is left.  By default the start and every
    tie-break is the lowest index; with ``seed`` both are drawn at random
    (the result does not depend on the choices, the recorded sequence does).
    Returns ``(cycle, ComputationSequence)``; the cycle is zero outside the
    subset.
    """
    subset = _check_subset(g, subset)
    rng = random.Random(seed) if seed is not None else None
    first = rng.choice(sorted(subset)) if rng is not None else min(subset)
    seq = _greedy(g, basis(g, first), subset, rng)
    return seq.end, seq


def connecting_sequence(g, start, to_support, elliptic=False):
    """Greedy computation sequence from ``start`` up to the fundamental cycle of
    ``to_support``.

    ``start`` must be the fundamental cycle of a connected subset of
    ``to_support``.  With ``elliptic=True`` every step is additionally
    required to add a smooth rational curve with A_i.Z_l == 1.
    """
    target_support = _check_subset(g, to_support)
    start = tuple(start)
    if not is_positive(start) or not support(start) <= target_support:
        raise PreconditionError("start cycle must be positive and supported in the target")
    if fundamental_cycle(g, support(start))[0] != start:
        raise PreconditionError("start is not the fundamental cycle of its support")
    seq = _greedy(g, start, target_support)
    target = fundamental_cycle(g, target_support)[0]
    if seq.end != target:
        raise PreconditionError(f"greedy loop stopped at {seq.end}, expected {target}")
    if elliptic:
        for st in seq.steps:
            if st.intersection != 1 or not st.smooth_rational:
                raise AssertionError(
                    f"step adding {g.vertices[st.vertex].id}: A.Z={st.intersection}, "
                    f"smooth rational={st.smooth_rational}")
    return seq


def canonical_cycle(g):
    """Solve Z_K . A_i = -K . A_i exactly.

    Returns ``(rational cycle, numerically_gorenstein)``.
    """
    f = form_of(g)
    zk = tuple(linalg.solve(f.matrix, [-k for k in f.k_degrees]))
    integral = is_integral(zk)
    minimal = not any(v.smooth_rational and v.self_int == -1 for v in g.vertices)
    if integral and any(zk) and minimal:
        zn = fundamental_cycle(g)[0]
        assert all(c > 0 for c in zk), "nonzero integral Z_K must have full support"
        assert leq(zn, zk), "Z_num <= Z_K violated"
    return zk, integral


def as_int(x):
    """Convert an integral rational cycle to ints."""
    assert is_integral(x)
    return tuple(int(a) for a in x)
