"""Skeleton expansions of random germs, with the rank of the leftover after each prefix."""
import argparse
import random
from dataclasses import dataclass

from gog import series as S
from gog.errors import IdentityHasNoRank
from gog.gogcore import asym_expand, expansion_remainder, rank, render_expansion
from gog.sampling import random_germ


@dataclass
class Config:
    count: int = 10
    depth: int = 4
    seed: int = 0


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=Config.count)
    ap.add_argument("--depth", type=int, default=Config.depth)
    ap.add_argument("--seed", type=int, default=Config.seed)
    cfg = Config(**vars(ap.parse_args()))
    rng = random.Random(cfg.seed)
    for _ in range(cfg.count):
        f = random_germ(rng)
        steps = asym_expand(f, cfg.depth)
        try:
            left = str(rank(expansion_remainder(f, steps)))
        except IdentityHasNoRank:
            left = "identity"
        print(S.render(f, 4))
        print(f"  = {render_expansion(steps)}")
        print(f"  remainder rank: {left}")


if __name__ == "__main__":
    main()
