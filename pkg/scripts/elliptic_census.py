"""Census of random trees: how often each class, sequence length and Z_num^2 occurs,
and how often the topological p_g verdict is exact under the Gorenstein assumption.

    python3 scripts/elliptic_census.py [--count 2000] [--max-vertices 8] [--seed 0] [--json out.json]
"""
import argparse
import json
import random
from collections import Counter
from dataclasses import asdict, dataclass

from resgraph import corpus
from resgraph import invariants as inv


@dataclass
class CensusConfig:
    count: int = 2000
    max_vertices: int = 8
    seed: int = 0
    special_prob: float = 0.7


def census(cfg):
    rng = random.Random(cfg.seed)
    classes, lengths, degrees, verdicts, cases = Counter(), Counter(), Counter(), Counter(), Counter()
    for _ in range(cfg.count):
        g = corpus.random_tree(rng, cfg.max_vertices, cfg.special_prob)
        r = inv.classify(g)
        classes[r.cls] += 1
        if r.cls != "elliptic":
            continue
        degrees[-r.znum_sq] += 1
        verdicts[inv.geometric_genus(g, r, (inv.GORENSTEIN,)).kind] += 1
        if r.numerically_gorenstein:
            lengths[r.m_plus_one] += 1
            cases[r.structure_case] += 1
    return {
        "config": asdict(cfg),
        "classes": dict(sorted(classes.items())),
        "elliptic_minus_znum_sq": dict(sorted(degrees.items())),
        "sequence_length": dict(sorted(lengths.items())),
        "structure_case": dict(sorted(cases.items())),
        "pg_verdict_with_gorenstein": dict(sorted(verdicts.items())),
    }


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--count", type=int, default=CensusConfig.count)
    p.add_argument("--max-vertices", type=int, default=CensusConfig.max_vertices)
    p.add_argument("--seed", type=int, default=CensusConfig.seed)
    p.add_argument("--json", help="also write the census to this file")
    a = p.parse_args()
    out = census(CensusConfig(a.count, a.max_vertices, a.seed))
    for key, value in out.items():
        if key != "config":
            print(f"{key}: {value}")
    if a.json:
        with open(a.json, "w", encoding="utf-8") as fh:
            json.dump(out, fh, indent=2, sort_keys=True)


if __name__ == "__main__":
    main()
