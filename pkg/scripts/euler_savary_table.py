"""Print conjugate points for a fan of directions through the pole.

    python3 scripts/euler_savary_table.py S1 --t 0.3 --count 12 --radius 0.5
"""
import argparse

from hyperkin import canonical as cn
from hyperkin.errors import NoConjugate
from hyperkin.scenarios import SCENARIOS, document
from hyperkin.verify import oracle_conjugate, probe_directions, signed_along


def main() -> None:
    parser = argparse.ArgumentParser(description="Euler-Savary conjugates around the pole")
    parser.add_argument("scenario", choices=sorted(SCENARIOS))
    parser.add_argument("--t", type=float, default=0.0)
    parser.add_argument("--count", type=int, default=12)
    parser.add_argument("--radius", type=float, default=0.5)
    args = parser.parse_args()

    spec = document(args.scenario).spec
    cd = cn.canonical_data(spec, args.t)
    print(f"# {args.scenario} t={args.t:g}: r={cd.r:.9g} r'={cd.r_p:.9g} dnu/ds={cd.nu_ds:.9g}")
    print(f"{'x_re':>10} {'x_uni':>10} {'sector':>8} {'alpha':>10} {'a_prime':>12} {'oracle':>12}")
    for x in probe_directions(args.count, args.radius):
        try:
            pair = cn.conjugate_point(cd, x)
        except NoConjugate:
            print(f"{x.re:10.5f} {x.uni:10.5f}  inflection locus")
            continue
        ref = signed_along(oracle_conjugate(spec, cd, x), pair.direction)
        print(f"{x.re:10.5f} {x.uni:10.5f} {pair.sector:>8} {pair.alpha:10.5f} "
              f"{pair.a_p_signed:12.8f} {ref:12.8f}")


if __name__ == "__main__":
    main()
