"""Recompute the (d, dim, delta) table for q=4, w=(3,4,5) and diff it against the published values."""

import argparse
import time
from dataclasses import dataclass

from wprm import field_new, parameter_table, torus_hilbert_series

EXPECTED_DIMS = [1, 0, 0, 1, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 4, 4, 4, 5, 5, 6, 6, 6, 7, 7, 8, 8, 7, 9, 9, 8]
EXPECTED_DELTA = [9, None, None, 9, 9, 9, 9, 9, 6, 6, 6, 6, 6, 6, 6, 3, 3, 4, 3, 3, 3, 3, 3, 2, 2, 2, 2, 2, 1, 1, 2]


@dataclass
class Config:
    q: int = 4
    weights: tuple[int, ...] = (3, 4, 5)
    d_max: int = 30
    threads: int = 1


def main(cfg: Config) -> int:
    start = time.perf_counter()
    rows = parameter_table(field_new(cfg.q), cfg.weights, cfg.d_max, threads=cfg.threads)
    hs = torus_hilbert_series(cfg.q, cfg.weights)
    phi = hs.coefficients(cfg.d_max + 1)
    mismatches = 0
    print(f"{'d':>3} {'dim':>4} {'phi':>4} {'delta':>5}  expected")
    for r in rows:
        exp = ""
        if r.d < len(EXPECTED_DIMS):
            ed, ee = EXPECTED_DIMS[r.d], EXPECTED_DELTA[r.d]
            ok = (r.dimension, r.min_distance) == (ed, ee)
            mismatches += not ok
            exp = f"{ed:>3} {'-' if ee is None else ee:>3} {'ok' if ok else 'MISMATCH'}"
        delta = "-" if r.min_distance is None else r.min_distance
        print(f"{r.d:>3} {r.dimension:>4} {phi[r.d]:>4} {delta:>5}  {exp}")
    print(f"regularity {hs.regularity}; {mismatches} mismatches; {time.perf_counter() - start:.2f}s")
    return 1 if mismatches else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--dmax", type=int, default=Config.d_max)
    p.add_argument("--threads", type=int, default=Config.threads)
    a = p.parse_args()
    raise SystemExit(main(Config(d_max=a.dmax, threads=a.threads)))
