"""Named graph families used by tests, scripts and the acceptance suite."""
import random

from .graph import ResolutionGraph, VertexData, validate


def chain(weights, prefix="v"):
    vs = [VertexData(f"{prefix}{i}", e) for i, e in enumerate(weights)]
    return ResolutionGraph.build(vs, [(vs[i].id, vs[i + 1].id) for i in range(len(vs) - 1)])


def a_n(n):
    return chain([-2] * n)


def d_n(n):
    """D_n: a chain of n-2 vertices with two extra leaves on the last one."""
    assert n >= 4
    vs = [VertexData(f"v{i}", -2) for i in range(n)]
    edges = [(f"v{i}", f"v{i + 1}") for i in range(n - 3)]
    edges += [(f"v{n - 3}", f"v{n - 2}"), (f"v{n - 3}", f"v{n - 1}")]
    return ResolutionGraph.build(vs, edges)


def e_n(n):
    """E_6, E_7, E_8: chain of n-1 vertices, extra vertex on the third."""
    assert n in (6, 7, 8)
    vs = [VertexData(f"v{i}", -2) for i in range(n)]
    edges = [(f"v{i}", f"v{i + 1}") for i in range(n - 2)]
    edges.append(("v2", f"v{n - 1}"))
    return ResolutionGraph.build(vs, edges)


def star(center, arms, center_kw=None):
    """Star-shaped graph; ``arms`` is a list of weight chains read outward."""
    vs = [VertexData("c", center, **(center_kw or {}))]
    edges = []
    for a, weights in enumerate(arms):
        prev = "c"
        for j, e in enumerate(weights):
            vid = f"a{a}_{j}"
            vs.append(VertexData(vid, e))
            edges.append((prev, vid))
            prev = vid
    return ResolutionGraph.build(vs, edges)


def genus1_chain():
    """The -1[g=1] -- -2 -- -2 chain: elliptic, m = 2, Z_num^2 = -1, genus not fixed by the graph."""
    vs = [VertexData("a0", -1, genus=1), VertexData("a1", -2), VertexData("a2", -2)]
    return ResolutionGraph.build(vs, [("a0", "a1"), ("a1", "a2")])


def cusp_chain(m, e=-1):
    """Cuspidal rational curve of self-intersection ``e`` followed by m smooth -2 curves."""
    vs = [VertexData("v0", e, cusps=1)] + [VertexData(f"v{i}", -2) for i in range(1, m + 1)]
    return ResolutionGraph.build(vs, [(f"v{i}", f"v{i + 1}") for i in range(m)])


def single(e, genus=0, nodes=0, cusps=0):
    return ResolutionGraph.build([VertexData("v0", e, genus, nodes, cusps)])


def ade():
    out = {f"A{n}": a_n(n) for n in range(1, 7)}
    out.update({f"D{n}": d_n(n) for n in range(4, 8)})
    out.update({f"E{n}": e_n(n) for n in (6, 7, 8)})
    return out


def random_tree(rng, max_vertices=8, special_prob=0.5):
    """A random valid tree; with probability ``special_prob`` one vertex is a
    cuspidal or genus-1 curve, which makes elliptic graphs common."""
    while True:
        n = rng.randint(1, max_vertices)
        weights = [rng.choice((-2, -2, -2, -3, -4)) for _ in range(n)]
        kws = [{} for _ in range(n)]
        if rng.random() < special_prob:
            i = rng.randrange(n)
            kws[i] = rng.choice(({"cusps": 1}, {"genus": 1}))
            weights[i] = rng.choice((-1, -1, -2, -3))
        vs = [VertexData(f"v{i}", weights[i], **kws[i]) for i in range(n)]
        edges = [(f"v{rng.randrange(i)}", f"v{i}") for i in range(1, n)]
        g = ResolutionGraph.build(vs, edges)
        if not validate(g):
            return g


def random_trees(count, seed=0, max_vertices=8):
    rng = random.Random(seed)
    return [random_tree(rng, max_vertices) for _ in range(count)]


def elliptic_extras():
    """Hand-picked elliptic graphs covering every Z_num^2 regime."""
    out = {f"cusp_e{e}": single(e, cusps=1) for e in (-1, -2, -3, -4, -5)}
    out.update({f"elliptic_curve_e{e}": single(e, genus=1) for e in (-1, -2, -3)})
    out["nodal_e-3"] = single(-3, nodes=1)
    # all curves smooth rational: a minimally elliptic star, the same star
    # with a -2 tail of length 1 and 2, and a cycle of three -3 curves
    out["star_min_elliptic"] = star(-2, [[-2, -2], [-2, -2], [-2, -3]])
    out["star_kodaira_m1"] = star(-2, [[-2, -2], [-2, -2], [-2, -3, -2]])
    out["star_kodaira_m2"] = star(-2, [[-2, -2], [-2, -2], [-2, -3, -2, -2]])
    vs = [VertexData(f"v{i}", -3) for i in range(3)]
    out["cusp_cycle_333"] = ResolutionGraph.build(vs, [("v0", "v1"), ("v1", "v2"), ("v2", "v0")])
    # elliptic but not numerically Gorenstein
    out["g1_e-2_leaf"] = ResolutionGraph.build(
        [VertexData("v0", -2, genus=1), VertexData("v1", -2)], [("v0", "v1")])
    out["star_not_gorenstein"] = star(-2, [[-2, -2], [-2, -3], [-2, -3, -2]])
    return out


def negative_extras():
    """Graphs with chi(Z_num) < 0."""
    return {
        "genus2_e-1": single(-1, genus=2),
        "genus2_e-3": single(-3, genus=2),
    }


def acceptance_corpus(random_count=12, seed=20261016):
    out = dict(ade())
    out["genus1_chain"] = genus1_chain()
    out.update({f"cusp_chain_m{m}": cusp_chain(m) for m in range(5)})
    out["D4_star"] = star(-2, [[-2], [-2], [-2]])
    out.update({f"random_tree_{i}": t for i, t in enumerate(random_trees(random_count, seed))})
    return out
