"""Classification and analytic invariants that the graph determines.

Gorenstein-ness cannot be read off a graph, so callers declare it in
``assumptions`` (a collection of strings; only ``"gorenstein"`` is
recognised).  Every conclusion records which hypotheses it used in a
trail entry.  Operations whose theorems need hypotheses that are not met
raise HypothesisError naming the missing one instead of guessing.
"""
from dataclasses import dataclass, field

from . import cycles as cy
from . import elliptic as el

GORENSTEIN = "gorenstein"


class HypothesisError(Exception):
    """A theorem-backed operation was asked for outside its hypotheses."""

    def __init__(self, missing, detail=""):
        self.missing = missing
        msg = f"hypothesis not satisfied: {missing}"
        super().__init__(f"{msg} ({detail})" if detail else msg)


@dataclass(frozen=True)
class TrailEntry:
    claim: str
    basis: str
    hypotheses: tuple = ()


@dataclass(frozen=True)
class ClassificationReport:
    chi_znum: int
    cls: str  # "rational", "elliptic" or "neither"
    du_val: bool
    numerically_gorenstein: bool
    minimally_elliptic: bool
    h1_link_zero: bool
    znum: tuple
    znum_sq: int
    zk: tuple  # Fractions
    m_plus_one: object = None
    structure_case: object = None
    e_cycle: object = None


@dataclass(frozen=True)
class PgVerdict:
    kind: str  # "exact", "range" or "undetermined"
    lo: object = None
    hi: object = None
    note: str = ""
    trail: tuple = ()

    def __str__(self):
        if self.kind == "exact":
            return f"exact({self.lo})"
        if self.kind == "range":
            return f"range({self.lo},{self.hi})"
        return "undetermined" + (f" (>= {self.lo})" if self.lo is not None else "")


@dataclass(frozen=True)
class Conclusion:
    value: object
    trail: tuple
    extra: dict = field(default_factory=dict)


def h1_link_zero(g):
    """Whether the exceptional set has no 1-cycles (rational homology sphere link).

    Needs a tree (edges counted with multiplicity), genus 0 everywhere and
    no nodal curves.  Cusps are fine: a cuspidal rational curve is still a
    topological sphere.
    """
    if g.edge_count() != len(g) - 1 or not g.is_connected():
        return False
    return all(v.genus == 0 and v.nodes == 0 for v in g.vertices)


def classify(g):
    zn = cy.fundamental_cycle(g)[0]
    chi = cy.euler_char(g, zn)
    zk, integral = cy.canonical_cycle(g)
    cls = {1: "rational", 0: "elliptic"}.get(chi, "neither")
    assert chi <= 1, "chi(Z_num) > 1 cannot happen on a valid graph"
    du_val = integral and not any(zk)
    minimally = integral and any(zk) and cy.as_int(zk) == zn
    m_plus_one = case = e = None
    if cls == "elliptic" and integral:
        seq = el.elliptic_sequence(g)
        m_plus_one = seq.length
        e = seq.minimally_elliptic
        case = el.structure_dichotomy(g, e).case
    if minimally:
        assert cls == "elliptic" and m_plus_one == 1
    return ClassificationReport(
        chi_znum=chi, cls=cls, du_val=du_val, numerically_gorenstein=integral,
        minimally_elliptic=minimally, h1_link_zero=h1_link_zero(g), znum=zn,
        znum_sq=cy.self_intersection(g, zn), zk=zk, m_plus_one=m_plus_one,
        structure_case=case, e_cycle=e)


def geometric_genus(g, report=None, assumptions=()):
    """The geometric genus as far as the graph (plus assumptions) forces it."""
    report = report or classify(g)
    gor = GORENSTEIN in assumptions
    hyp = (GORENSTEIN,) if gor else ()
    if report.cls == "neither":
        return PgVerdict("undetermined", note="chi(Z_num) < 0: no topological statement available")
    if report.cls == "rational":
        return PgVerdict("exact", 0, 0, trail=(TrailEntry(
            "p_g = 0", "Artin: chi(Z_num) = 1 characterises rational singularities"),))
    # elliptic from here on: p_g >= 1
    if not report.numerically_gorenstein:
        note = "elliptic, so p_g >= 1; no upper bound without an integral canonical cycle"
        if gor:
            note = "declared Gorenstein but Z_K is not integral: the assumption is inconsistent with the graph"
        return PgVerdict("undetermined", lo=1, note=note, trail=(TrailEntry(
            "p_g >= 1", "elliptic singularities are not rational"),))
    m1 = report.m_plus_one
    upper = TrailEntry(f"p_g <= {m1}", "Yau: p_g is at most the length of the elliptic sequence")
    if not gor:
        return PgVerdict("range", 1, m1,
                         note="without the Gorenstein condition p_g is generically 1",
                         trail=(TrailEntry("p_g >= 1", "elliptic singularities are not rational"), upper))
    if report.minimally_elliptic:
        return PgVerdict("exact", 1, 1, trail=(TrailEntry(
            "p_g = 1", "Laufer: Z_K = Z_num characterises minimally elliptic singularities", hyp),))
    if report.h1_link_zero:
        return PgVerdict("exact", m1, m1, trail=(TrailEntry(
            f"p_g = {m1}",
            "elliptic Gorenstein singularities with rational homology sphere link have p_g = length of the elliptic sequence",
            hyp + ("h1_link_zero",)),))
    return PgVerdict("range", 2, m1,
                     note="H^1(A,Z) != 0: both endpoints can occur for the same graph",
                     trail=(TrailEntry("p_g >= 2", "Gorenstein with Z_K != Z_num: h^1(O_{Z_K}) > h^1(O_E) = 1", hyp),
                            upper))


def pg2_characterization(g):
    """chi(Z_num) = 0 and Z_K = Z_num + E (topological test for p_g = 2)."""
    zk, integral = cy.canonical_cycle(g)
    if not integral:
        raise cy.PreconditionError("graph is not numerically Gorenstein")
    zn = cy.fundamental_cycle(g)[0]
    if cy.euler_char(g, zn) != 0:
        return False
    e = el.elliptic_sequence(g).minimally_elliptic
    return cy.as_int(zk) == cy.add(zn, e)


@dataclass(frozen=True)
class MultiplicityContext:
    seq: object
    znum: tuple
    d: int  # -Z_num^2
    pg: PgVerdict
    hypotheses: tuple


def multiplicity_context(g, assumptions=()):
    """Check the hypotheses shared by the multiplicity / embedding dimension /
    Hilbert-Samuel results: elliptic, numerically Gorenstein, declared
    Gorenstein and p_g forced to equal m + 1."""
    report = classify(g)
    if report.cls != "elliptic":
        raise HypothesisError("elliptic", f"graph is {report.cls}")
    if not report.numerically_gorenstein:
        raise HypothesisError("numerically Gorenstein", "Z_K is not integral")
    if GORENSTEIN not in assumptions:
        raise HypothesisError("gorenstein", "declare it with --assume-gorenstein")
    pg = geometric_genus(g, report, assumptions)
    if pg.kind != "exact" or pg.lo != report.m_plus_one:
        raise HypothesisError("p_g = m+1", f"p_g is {pg} (needs m = 0 or H^1(A,Z) = 0)")
    seq = el.elliptic_sequence(g)
    hyp = (GORENSTEIN, "p_g = m+1")
    return MultiplicityContext(seq, report.znum, -report.znum_sq, pg, hyp)


def multiplicity(g, assumptions=()):
    ctx = multiplicity_context(g, assumptions)
    if ctx.d >= 2:
        return Conclusion(ctx.d, (TrailEntry(
            f"mult = -Z_num^2 = {ctx.d}", "maximal ideal cycle is Z_num when Z_num^2 <= -2", ctx.hypotheses),))
    extra = {}
    if ctx.seq.m >= 1:
        chain = el.check_structure_zn_minus_one(g, ctx.seq)
        extra["basepoint_vertex"] = chain.basepoint_vertex
        extra["chain"] = chain
    return Conclusion(2, (TrailEntry(
        "mult = 2", "Z_num^2 = -1: m_p O_M = m_Q O(-Z_num) for a smooth point Q", ctx.hypotheses),), extra)


def embedding_dimension(g, assumptions=(), oracle_check=False):
    """max(3, -Z_num^2).  With ``oracle_check`` also confirms
    emb dim >= mult + min chi using a brute-force minimum."""
    ctx = multiplicity_context(g, assumptions)
    value = max(3, ctx.d)
    mult = multiplicity(g, assumptions).value
    if mult >= 3:
        assert value == mult
    else:
        assert value == 3
    if oracle_check:
        from .oracle import min_chi_bruteforce
        assert value >= mult + min_chi_bruteforce(g).value
    extra = {}
    if ctx.d >= 5:
        extra["not_complete_intersection"] = True
    return Conclusion(value, (TrailEntry(
        f"emb dim = max(3, -Z_num^2) = {value}", "embedding dimension of elliptic Gorenstein with p_g = m+1",
        ctx.hypotheses),), extra)


def hilbert_samuel(g, k, assumptions=()):
    """(dim O/m^k, dim m^k/m^{k+1}) = (chi(k Z_num) + 1, -k Z_num^2) for k >= 1.

    Only available when Z_num^2 <= -3.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    ctx = multiplicity_context(g, assumptions)
    if ctx.d <= 2:
        raise HypothesisError("Z_num^2 <= -3", f"Z_num^2 = {-ctx.d}; use generator_degrees for this case")
    zn = ctx.znum
    colength = cy.euler_char(g, cy.scale(k, zn)) + 1
    graded = k * ctx.d
    nxt = cy.euler_char(g, cy.scale(k + 1, zn)) + 1
    assert nxt - colength == graded, "telescoping identity failed"
    return colength, graded


def hilbert_samuel_descriptor(g, assumptions=(), upto=5):
    ctx = multiplicity_context(g, assumptions)
    if ctx.d <= 2:
        return None
    return {
        "colength": "chi(k*Z_num) + 1",
        "graded_piece": f"{ctx.d}*k",
        "values": [list(hilbert_samuel(g, k, assumptions)) for k in range(1, upto + 1)],
    }


def generator_degrees(g, assumptions=()):
    """Degrees generating the graded ring of O(-k Z_num) sections."""
    ctx = multiplicity_context(g, assumptions)
    degrees = (1,) if ctx.d >= 3 else (1, 2) if ctx.d == 2 else (1, 2, 3)
    return Conclusion(degrees, (TrailEntry(
        f"generated in degrees {degrees}", "section ring of O(-Z_num)", ctx.hypotheses),))


@dataclass(frozen=True)
class Flags:
    complete_intersection_possible: bool
    not_complete_intersection: bool
    kodaira_graph: bool
    hypersurface_excluded: bool


def auxiliary_flags(g, seq=None):
    """Flags read off d = -Z_num^2 for numerically Gorenstein elliptic graphs.

    The complete-intersection and hypersurface flags are analytic
    conclusions and only meaningful under the multiplicity hypotheses;
    kodaira_graph is a statement about the graph's shape.
    """
    seq = seq or el.elliptic_sequence(g)
    d = -cy.self_intersection(g, seq.members[0])
    return Flags(
        complete_intersection_possible=d == 4,
        not_complete_intersection=d >= 5,
        kodaira_graph=d == 1,
        hypersurface_excluded=d >= 4,
    )


@dataclass(frozen=True)
class InvariantReport:
    assumptions: tuple
    classification: ClassificationReport
    p_g: PgVerdict
    multiplicity: object = None
    emb_dim: object = None
    hilbert_samuel: object = None
    generator_degrees: object = None
    flags: dict = field(default_factory=dict)
    hypothesis_trail: tuple = ()
    refused: object = None  # HypothesisError message for the multiplicity results


def invariant_report(g, assumptions=()):
    """Run the whole pipeline; multiplicity-type results are None when refused."""
    assumptions = tuple(sorted(set(assumptions)))
    report = classify(g)
    pg = geometric_genus(g, report, assumptions)
    trail = list(pg.trail)
    flags = {}
    if report.cls == "elliptic" and report.numerically_gorenstein:
        seq = el.elliptic_sequence(g)
        flags["kodaira_graph"] = auxiliary_flags(g, seq).kodaira_graph
        flags["pg2_characterization"] = pg2_characterization(g)
        if flags["pg2_characterization"] and pg.kind == "exact":
            assert pg.lo == 2
    try:
        ctx = multiplicity_context(g, assumptions)
    except HypothesisError as exc:
        return InvariantReport(assumptions, report, pg, flags=flags, hypothesis_trail=tuple(trail),
                               refused=str(exc))
    mult = multiplicity(g, assumptions)
    emb = embedding_dimension(g, assumptions)
    gens = generator_degrees(g, assumptions)
    aux = auxiliary_flags(g, ctx.seq)
    flags.update(complete_intersection_possible=aux.complete_intersection_possible,
                 not_complete_intersection=aux.not_complete_intersection,
                 hypersurface_excluded=aux.hypersurface_excluded)
    if "basepoint_vertex" in mult.extra:
        flags["basepoint_vertex"] = g.vertices[mult.extra["basepoint_vertex"]].id
    trail += [*mult.trail, *emb.trail, *gens.trail]
    hs = hilbert_samuel_descriptor(g, assumptions)
    if hs is not None:
        trail.append(TrailEntry("dim O/m^k = chi(k Z_num) + 1, dim m^k/m^(k+1) = -k Z_num^2",
                                "Hilbert-Samuel function when Z_num^2 <= -3", ctx.hypotheses))
    return InvariantReport(assumptions, report, pg, mult.value, emb.value, hs, gens.value, flags, tuple(trail))
