"""Elliptic sequences of numerically Gorenstein elliptic graphs.

B_0 is the whole graph and Z_{B_0} = Z_num.  As long as the partial sum
C_j = Z_{B_0} + ... + Z_{B_j} is below Z_K, the next support is
B_{j+1} = |Z_K - C_j| and Z_{B_{j+1}} is its fundamental cycle.  The last
member is the minimally elliptic cycle E.
"""
from dataclasses import dataclass

from . import cycles as cy
from .cycles import PreconditionError


@dataclass(frozen=True)
class EllipticSequence:
    supports: tuple  # frozensets of vertex indices, B_0 ... B_m
    members: tuple  # Z_{B_0} ... Z_{B_m}
    canonical: tuple  # Z_K as ints

    @property
    def m(self):
        return len(self.members) - 1

    @property
    def length(self):
        return len(self.members)

    @property
    def minimally_elliptic(self):
        return self.members[-1]

    def partial_sum(self, t):
        """C_t = Z_{B_0} + ... + Z_{B_t}"""
        out = self.members[0]
        for z in self.members[1:t + 1]:
            out = cy.add(out, z)
        return out

    def tail_sum(self, t):
        """C'_t = Z_{B_t} + ... + Z_{B_m}"""
        out = self.members[t]
        for z in self.members[t + 1:]:
            out = cy.add(out, z)
        return out

    @property
    def partial_sums(self):
        return tuple(self.partial_sum(t) for t in range(self.length))

    @property
    def tail_sums(self):
        return tuple(self.tail_sum(t) for t in range(self.length))


def _elliptic_data(g):
    zn = cy.fundamental_cycle(g)[0]
    zk, integral = cy.canonical_cycle(g)
    return zn, zk, integral


def elliptic_sequence(g):
    """Construct the elliptic sequence and assert its structural properties."""
    zn, zk, integral = _elliptic_data(g)
    if not integral:
        raise PreconditionError("graph is not numerically Gorenstein")
    zk = cy.as_int(zk)
    if not any(zk):
        raise PreconditionError("Z_K = 0 (Du Val graph)")
    if cy.euler_char(g, zn) != 0:
        raise PreconditionError("graph is not elliptic (chi(Z_num) != 0)")
    supports = [frozenset(range(len(g)))]
    members = [zn]
    partial = zn
    while partial != zk:
        rest = cy.sub(zk, partial)
        assert cy.is_positive(rest), f"Z_K - C_j = {rest} is not positive"
        nxt = cy.support(rest)
        assert nxt < supports[-1], "supports must shrink strictly"
        assert g.is_connected(nxt), "B_{j+1} must be connected"
        z = cy.fundamental_cycle(g, nxt)[0]
        supports.append(nxt)
        members.append(z)
        partial = cy.add(partial, z)
    seq = EllipticSequence(tuple(supports), tuple(members), zk)
    check_sequence(g, seq)
    return seq


def check_sequence(g, seq):
    """Assert every structural property of an elliptic sequence.

    Raises AssertionError naming the first property that fails.
    """
    n = len(g)
    members = seq.members
    m = seq.m
    assert seq.supports[0] == frozenset(range(n))
    for j, (b, z) in enumerate(zip(seq.supports, members)):
        assert cy.support(z) == b, f"support of Z_B{j} differs from B_{j}"
        assert g.is_connected(b), f"B_{j} disconnected"
        if j:
            assert b < seq.supports[j - 1], f"B_{j} not strictly inside B_{j - 1}"
            assert cy.leq(z, members[j - 1]), f"Z_B{j} not <= Z_B{j - 1}"
    # sum of the members is Z_K, and the last member closes the sequence exactly
    assert seq.partial_sum(m) == seq.canonical, "sum of Z_Bj != Z_K"
    for i in range(m + 1):
        for j in range(i + 1, m + 1):
            assert cy.dot(g, members[i], members[j]) == 0, f"Z_B{i}.Z_B{j} != 0"
    for j in range(m):
        for a in seq.supports[j + 1]:
            assert cy.form_of(g).row(a, members[j]) == 0, f"A_{a}.Z_B{j} != 0 on B_{j + 1}"
    f = cy.form_of(g)
    kdeg = f.k_degrees
    for t in range(m + 1):
        c = seq.partial_sum(t)
        c_tail = seq.tail_sum(t)
        for i in range(n):
            assert f.row(i, c) <= 0, f"A_{i}.C_{t} > 0"
        for i in seq.supports[t]:
            assert f.row(i, c_tail) == -kdeg[i], f"A_{i}.C'_{t} != A_{i}.Z_K"
        for name, cyc in (("Z_B", members[t]), ("C", c), ("C'", c_tail)):
            assert cy.euler_char(g, cyc) == 0, f"chi({name}{t}) != 0"
    zn = members[0]
    assert cy.leq(members[-1], zn) and cy.leq(zn, seq.canonical), "E <= Z_num <= Z_K violated"
    return True


def minimally_elliptic_cycle(g):
    """The unique minimally elliptic cycle E (last member of the sequence)."""
    e = elliptic_sequence(g).minimally_elliptic
    assert cy.euler_char(g, e) == 0
    return e


@dataclass(frozen=True)
class StructureVerdict:
    case: str  # "a" or "b"
    distinguished: object  # vertex index for case (a), else None
    e_cycle: tuple
    rational_components: tuple  # components of A minus |E|, all supporting rational singularities


def structure_dichotomy(g, e_cycle=None):
    """Decide which of the two possible shapes an elliptic exceptional set has.

    Case "a": exactly one vertex has chi(A_i) = 0 (genus 1, or rational with
    one node/cusp) and all others are smooth rational; that vertex is E.
    Case "b": all vertices are smooth rational.  In both cases each
    connected component of the graph minus |E| must carry a rational
    singularity.  Raises AssertionError when neither shape applies.
    """
    zn = cy.fundamental_cycle(g)[0]
    if cy.euler_char(g, zn) != 0:
        raise PreconditionError("graph is not elliptic")
    special = [i for i, v in enumerate(g.vertices) if not v.smooth_rational]
    if not special:
        case, dist = "b", None
    else:
        chi0 = [i for i in special if cy.euler_char(g, cy.basis(g, i)) == 0]
        if len(special) != 1 or len(chi0) != 1:
            raise AssertionError("neither structure case holds")
        case, dist = "a", special[0]
    if e_cycle is None:
        if case == "a":
            e_cycle = cy.basis(g, dist)
        else:
            zk, integral = cy.canonical_cycle(g)
            if integral:
                e_cycle = minimally_elliptic_cycle(g)
            else:
                from .oracle import minimally_elliptic_bruteforce
                found = minimally_elliptic_bruteforce(g)
                if len(found) != 1:
                    raise AssertionError("could not isolate a unique minimally elliptic cycle")
                e_cycle = found[0]
    if case == "a" and e_cycle != cy.basis(g, dist):
        raise AssertionError("E differs from the distinguished curve")
    rest = set(range(len(g))) - cy.support(e_cycle)
    comps = g.components(rest)
    for comp in comps:
        z = cy.fundamental_cycle(g, comp)[0]
        if cy.euler_char(g, z) != 1:
            raise AssertionError(f"component {comp} of A - |E| is not rational")
    return StructureVerdict(case, dist, tuple(e_cycle), tuple(tuple(c) for c in comps))


@dataclass(frozen=True)
class ChainDecomposition:
    chain: tuple  # gamma_0 ... gamma_{m-1}; gamma_0 is the far end of the chain
    basepoint_vertex: int  # gamma_0, carries the base point of |O(-Z_num)|
    attach_vertex: int  # the vertex of |E| the chain hangs from
    e_cycle: tuple


def check_structure_zn_minus_one(g, seq):
    """Decompose a Z_num^2 = -1 elliptic graph into |E| plus a -2 chain.

    Peels off, for j = 0 .. m-1, the unique vertex gamma_j of B_j with
    gamma_j . Z_{B_j} = -1, and checks that it is a smooth rational -2
    curve of multiplicity one, meeting B_{j+1} once in a single vertex.
    """
    if seq.m < 1:
        raise PreconditionError("chain decomposition needs m >= 1")
    zn = seq.members[0]
    if cy.self_intersection(g, zn) != -1:
        raise PreconditionError("Z_num^2 != -1")
    f = cy.form_of(g)
    chain = []
    for j in range(seq.m):
        zb, b, b_next = seq.members[j], seq.supports[j], seq.supports[j + 1]
        cands = [i for i in sorted(b) if f.row(i, zb) == -1]
        assert len(cands) == 1, f"B_{j}: expected a unique vertex with A.Z_B{j} = -1, got {cands}"
        gamma = cands[0]
        v = g.vertices[gamma]
        assert v.smooth_rational and v.self_int == -2, f"gamma_{j} is not a smooth rational -2 curve"
        assert b - b_next == {gamma}, f"B_{j} minus B_{j + 1} is not gamma_{j}"
        assert zb[gamma] == 1, f"m(gamma_{j}) in Z_B{j} != 1"
        if j == 0:
            assert seq.canonical[gamma] == 1, "m(gamma_0) in Z_K != 1"
        touching = [(i, mult) for i in b_next for (pair, mult) in g.edges if set(pair) == {i, gamma}]
        assert len(touching) == 1 and touching[0][1] == 1, f"gamma_{j} must meet B_{j + 1} once"
        chain.append(gamma)
    e = seq.minimally_elliptic
    assert cy.self_intersection(g, e) == -1, "E^2 != -1"
    for j in range(seq.m + 1):
        expected = e
        for gamma in chain[j:]:
            expected = cy.add(expected, cy.basis(g, gamma))
        assert seq.members[j] == expected, f"Z_B{j} != E + sum of gamma_i, i >= {j}"
    last = chain[-1]
    attach = [i for i in seq.supports[-1] if i in g.neighbours(last)]
    assert len(attach) == 1, "chain must attach to |E| in exactly one vertex"
    assert f.row(attach[0], e) == -1, "attaching vertex must satisfy A.E = -1"
    # the chain is a path: gamma_j meets gamma_{j+1}
    for a, b in zip(chain, chain[1:]):
        assert b in g.neighbours(a), "gamma vertices do not form a path"
    return ChainDecomposition(tuple(chain), chain[0], attach[0], e)
