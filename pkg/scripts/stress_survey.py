"""Exact rigidity data for realized polytopes: rank, dim S, dim S_sym and the lower bound.

    python3 scripts/stress_survey.py --d 4 5 --stackings 3 --seeds 0 1
"""

import argparse
from math import comb

from cspoly.complex import graph
from cspoly.constructions import random_script
from cspoly.geometry import realize_script
from cspoly.rigidity import (
    is_infinitesimally_rigid,
    rank,
    rigidity_matrix,
    stress_basis,
    symmetric_stress_bound,
    symmetric_stress_subspace,
)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--d", type=int, nargs="+", default=[4, 5])
    ap.add_argument("--stackings", type=int, default=3)
    ap.add_argument("--seeds", type=int, nargs="+", default=[0])
    args = ap.parse_args()

    print(f"{'kind':<7}{'d':>3}{'k':>3}{'seed':>6}{'f0':>5}{'f1':>5}{'rank':>6}{'rigid':>7}{'dimS':>6}{'dimSsym':>9}{'bound':>7}")
    for kind in ("simplex", "cross"):
        for d in args.d:
            for k in range(args.stackings + 1):
                for seed in args.seeds:
                    p = realize_script(random_script(kind, d, k, seed), seed)
                    g = graph(p.complex)
                    m = rigidity_matrix(g, p.embedding)
                    b = stress_basis(m)
                    sym = bound = "-"
                    if p.alpha is not None:
                        sym = symmetric_stress_subspace(b, p.alpha)[0]
                        bound = symmetric_stress_bound(g, d)
                    rigid = is_infinitesimally_rigid(g, p.embedding)
                    print(f"{kind:<7}{d:>3}{k:>3}{seed:>6}{len(g.vertices):>5}{len(g.edges):>5}{rank(m):>6}"
                          f"{str(rigid):>7}{b.dim:>6}{str(sym):>9}{str(bound):>7}")
    print(f"expected dim S: 0 for stacked, C(d,2)-d for cs ({', '.join(f'd={d}: {comb(d, 2) - d}' for d in args.d)})")


if __name__ == "__main__":
    main()
