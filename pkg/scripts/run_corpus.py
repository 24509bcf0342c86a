"""Classify the built-in graph families and cross-check each one against brute force.

    python3 scripts/run_corpus.py [--random 12] [--seed 20261016] [--assume-gorenstein]
"""
import argparse
import time
from dataclasses import dataclass

from resgraph import corpus
from resgraph import invariants as inv
from resgraph import oracle as orc
from resgraph.report import fmt_cycle


@dataclass
class Config:
    random: int = 12
    seed: int = 20261016
    assume_gorenstein: bool = False
    extras: bool = True


def run(cfg):
    graphs = corpus.acceptance_corpus(cfg.random, cfg.seed)
    if cfg.extras:
        graphs.update(corpus.elliptic_extras())
        graphs.update(corpus.negative_extras())
    assumptions = (inv.GORENSTEIN,) if cfg.assume_gorenstein else ()
    failures = 0
    print(f"{'graph':<22}{'n':>3}  {'class':<9}{'Z_num':<22}{'Z_K':<26}{'m+1':>4}  {'p_g':<21}checks")
    for name, g in graphs.items():
        t0 = time.perf_counter()
        r = inv.classify(g)
        pg = inv.geometric_genus(g, r, assumptions)
        rows = orc.run_checks(g)
        bad = [row["check"] for row in rows if not row["passed"]]
        failures += bool(bad)
        zk = fmt_cycle(r.zk) if r.numerically_gorenstein else "non-integral"
        status = "ok" if not bad else "FAIL: " + ", ".join(bad)
        print(f"{name:<22}{len(g):>3}  {r.cls:<9}{fmt_cycle(r.znum):<22}{zk:<26}"
              f"{r.m_plus_one or '-':>4}  {str(pg):<21}{status} ({time.perf_counter() - t0:.2f}s)")
    print(f"{len(graphs)} graphs, {failures} with failed checks")
    return failures


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--random", type=int, default=Config.random)
    p.add_argument("--seed", type=int, default=Config.seed)
    p.add_argument("--assume-gorenstein", action="store_true")
    p.add_argument("--no-extras", action="store_true")
    a = p.parse_args()
    raise SystemExit(1 if run(Config(a.random, a.seed, a.assume_gorenstein, not a.no_extras)) else 0)


if __name__ == "__main__":
    main()
