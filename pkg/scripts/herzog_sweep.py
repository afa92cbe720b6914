"""Count weight tuples with a given first entry that fail the Herzog condition as ordered,
and whether some reordering keeping that entry first rescues them."""

import argparse
import itertools
import math
from dataclasses import dataclass

from wprm import herzog_condition


@dataclass
class Config:
    first: int = 2
    top: int = 8
    sizes: tuple[int, ...] = (3, 4)
    show: int = 10


def main(cfg: Config) -> int:
    failing, rescued = [], 0
    for s in cfg.sizes:
        for rest in itertools.product(range(1, cfg.top + 1), repeat=s - 1):
            w = (cfg.first,) + rest
            if math.gcd(*w) != 1 or herzog_condition(w):
                continue
            failing.append(w)
            if any(herzog_condition((cfg.first,) + p) for p in itertools.permutations(rest)):
                rescued += 1
    print(f"first weight {cfg.first}, entries <= {cfg.top}, s in {cfg.sizes}")
    print(f"fail as ordered: {len(failing)}; rescued by reordering the tail: {rescued}")
    for w in failing[: cfg.show]:
        print("  ", w)
    return 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--first", type=int, default=Config.first)
    p.add_argument("--top", type=int, default=Config.top)
    a = p.parse_args()
    raise SystemExit(main(Config(first=a.first, top=a.top)))
