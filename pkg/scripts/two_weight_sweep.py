"""Sweep q and coprime (w1, w2), comparing brute-force parameters with the s=2 closed forms.

Writes one CSV row per (q, w1, w2, d); the last column flags disagreement.
"""

import argparse
import csv
import sys
from dataclasses import dataclass

from wprm import build_code, dimension, field_new, minimum_distance_bruteforce, semigroup_new
from wprm.codes import dimension_formula_1d, distance_formula_1d, regularity_bound_1d
from wprm.validation import coprime_pairs


@dataclass
class Config:
    fields: tuple[int, ...] = (3, 4, 5, 7, 8, 9)
    pair_max: int = 7
    threads: int = 1


def main(cfg: Config) -> int:
    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["q", "w1", "w2", "d", "dim", "dim_formula", "delta", "delta_formula", "mds", "agree"])
    bad = 0
    for q in cfg.fields:
        f = field_new(q)
        for w1, w2 in coprime_pairs(cfg.pair_max):
            sg = semigroup_new((w1, w2))
            for d in range(regularity_bound_1d(q, w1, w2) + 1):
                code = build_code(f, (w1, w2), d)
                k = dimension(code)
                kf = dimension_formula_1d(q, w1, w2, d)
                delta = minimum_distance_bruteforce(code, cfg.threads)
                df = distance_formula_1d(q, w1, w2, d) if sg.contains(d) else None
                mds = None if delta is None else delta == code.length - k + 1
                agree = k == kf and delta == df and mds in (None, True)
                bad += not agree
                out.writerow([q, w1, w2, d, k, kf, delta, df, mds, agree])
    print(f"# disagreements: {bad}", file=sys.stderr)
    return 1 if bad else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--fields", default="3,4,5,7,8,9")
    p.add_argument("--pair-max", type=int, default=Config.pair_max)
    p.add_argument("--threads", type=int, default=Config.threads)
    a = p.parse_args()
    fields = tuple(int(x) for x in a.fields.split(","))
    raise SystemExit(main(Config(fields, a.pair_max, a.threads)))
