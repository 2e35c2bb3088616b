"""Face numbers and g-numbers of cross-polytopes and their symmetric stackings.

    python3 scripts/g2_table.py --d-max 8 --stackings 3
"""

import argparse

from cspoly.constructions import apply_script, cross_polytope_boundary, random_script
from cspoly.enumerative import f_vector, g_number, h_polynomial


def row(label: str, delta, d: int) -> str:
    g = [g_number(delta, r) for r in range(1, d // 2 + 1)]
    return f"{label:<16} f={f_vector(delta)[1:]}  h={h_polynomial(delta)}  g_1..={tuple(g)}"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--d-min", type=int, default=3)
    ap.add_argument("--d-max", type=int, default=7)
    ap.add_argument("--stackings", type=int, default=2)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    for d in range(args.d_min, args.d_max + 1):
        print(row(f"C*_{d}", cross_polytope_boundary(d).complex, d))
        for k in range(1, args.stackings + 1):
            c = apply_script(random_script("cross", d, k, args.seed))
            print(row(f"  +{k} sym. stack", c.complex, d))


if __name__ == "__main__":
    main()
