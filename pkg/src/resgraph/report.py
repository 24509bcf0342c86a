"""Report documents: stable-ordered dicts for JSON and a plain text rendering."""
import json
from fractions import Fraction

from . import __version__
from .graph import serialize

SAFE_INT = 2 ** 53 - 1


def _num(x):
    """JSON-safe exact number: ints beyond 53 bits and non-integral rationals become strings."""
    if isinstance(x, Fraction):
        if x.denominator != 1:
            return f"{x.numerator}/{x.denominator}"
        x = x.numerator
    if isinstance(x, bool) or x is None:
        return x
    x = int(x)
    return x if abs(x) <= SAFE_INT else str(x)


def _cycle(c):
    return None if c is None else [_num(a) for a in c]


def graph_doc(g):
    return {"vertices": g.ids, "text": serialize(g)}


def classification_doc(r):
    return {
        "chi_znum": _num(r.chi_znum),
        "class": r.cls,
        "du_val": r.du_val,
        "numerically_gorenstein": r.numerically_gorenstein,
        "minimally_elliptic": r.minimally_elliptic,
        "h1_link_zero": r.h1_link_zero,
        "z_num": _cycle(r.znum),
        "z_num_self_intersection": _num(r.znum_sq),
        "z_k": _cycle(r.zk),
        "m_plus_one": _num(r.m_plus_one),
        "structure_case": r.structure_case,
        "e_cycle": _cycle(r.e_cycle),
    }


def sequence_doc(g, seq):
    if seq is None:
        return None
    ids = g.ids
    return [{"support": [ids[i] for i in sorted(b)], "cycle": _cycle(z)}
            for b, z in zip(seq.supports, seq.members)]


def pg_doc(pg):
    return {"kind": pg.kind, "lo": _num(pg.lo), "hi": _num(pg.hi), "note": pg.note}


def trail_doc(trail):
    return [{"claim": t.claim, "basis": t.basis, "hypotheses": list(t.hypotheses)} for t in trail]


FLAG_KEYS = ("complete_intersection_possible", "not_complete_intersection", "kodaira_graph",
             "pg2_characterization", "basepoint_vertex", "hypersurface_excluded")


def invariants_doc(rep):
    if rep is None:
        return None
    hs = rep.hilbert_samuel
    if hs is not None:
        hs = {"colength": hs["colength"], "graded_piece": hs["graded_piece"],
              "values": [[_num(a), _num(b)] for a, b in hs["values"]]}
    return {
        "p_g": pg_doc(rep.p_g),
        "multiplicity": _num(rep.multiplicity),
        "emb_dim": _num(rep.emb_dim),
        "hilbert_samuel": hs,
        "generator_degrees": None if rep.generator_degrees is None else list(rep.generator_degrees),
        "flags": {k: rep.flags.get(k) for k in FLAG_KEYS},
        "hypothesis_trail": trail_doc(rep.hypothesis_trail),
        "refused": rep.refused,
    }


def document(g, command, assumptions=(), classification=None, sequence=None,
             invariants=None, oracle=None, extra=None):
    """The full report.  Every key is always present (None when not computed)."""
    doc = {
        "tool": "resgraph",
        "version": __version__,
        "command": command,
        "assumptions": sorted(assumptions),
        "graph": graph_doc(g),
        "classification": None if classification is None else classification_doc(classification),
        "sequence": sequence_doc(g, sequence),
        "invariants": invariants_doc(invariants),
        "oracle": oracle,
        "result": extra,
    }
    return doc


def dumps(doc, lines=False):
    if lines:
        return json.dumps(doc, separators=(",", ":"), ensure_ascii=False)
    return json.dumps(doc, indent=2, ensure_ascii=False)


def fmt_cycle(c):
    return "(" + ",".join(str(a) for a in c) + ")"


def classification_text(r):
    out = [
        f"Z_num = {fmt_cycle(r.znum)}",
        f"Z_num^2 = {r.znum_sq}",
        f"chi(Z_num) = {r.chi_znum}",
        f"class = {r.cls}",
        f"Z_K = {fmt_cycle(r.zk)}",
        f"numerically Gorenstein = {r.numerically_gorenstein}",
        f"Du Val = {r.du_val}",
        f"minimally elliptic = {r.minimally_elliptic}",
        f"H^1(A,Z) = 0 = {r.h1_link_zero}",
    ]
    if r.m_plus_one is not None:
        out += [f"m+1 = {r.m_plus_one}", f"E = {fmt_cycle(r.e_cycle)}",
                f"structure case = {r.structure_case}"]
    return out


def sequence_text(g, seq):
    ids = g.ids
    out = [f"m = {seq.m}"]
    for j, (b, z) in enumerate(zip(seq.supports, seq.members)):
        out.append(f"Z_B{j} = {fmt_cycle(z)}  support {{{', '.join(ids[i] for i in sorted(b))}}}")
    out.append(f"Z_K = {fmt_cycle(seq.canonical)}")
    return out


def invariants_text(rep):
    out = [f"p_g = {rep.p_g}" + (f"  [{rep.p_g.note}]" if rep.p_g.note else "")]
    if rep.refused:
        out.append(f"multiplicity results refused: {rep.refused}")
    else:
        out += [f"multiplicity = {rep.multiplicity}", f"embdim = {rep.emb_dim}",
                f"generator degrees = {list(rep.generator_degrees)}"]
        if rep.hilbert_samuel:
            vals = ", ".join(f"k={k}: {a},{b}" for k, (a, b) in enumerate(rep.hilbert_samuel["values"], 1))
            out.append(f"Hilbert-Samuel (dim O/m^k, dim m^k/m^k+1): {vals}")
    for k in FLAG_KEYS:
        if rep.flags.get(k) is not None:
            out.append(f"{k} = {rep.flags[k]}")
    out.append("hypothesis trail:")
    for t in rep.hypothesis_trail:
        hyp = ", ".join(t.hypotheses) if t.hypotheses else "topological"
        out.append(f"  {t.claim}  <- {t.basis} [{hyp}]")
    return out
