"""Compare the rank classifier with the bounded-power preceq oracle on random pairs."""
import argparse
import random
from collections import Counter
from dataclasses import dataclass

from gog.coeff import Ordering
from gog.gogcore import preceq_oracle, rank
from gog.sampling import random_germ


@dataclass
class Config:
    pairs: int = 200
    n_max: int = 6
    seed: int = 5


def classify(f, g, n_max):
    by_rank = rank(f) <= rank(g)
    oracle = preceq_oracle(f, g, n_max).verdict == "Yes"
    if by_rank == oracle:
        return "agree"
    return "contradiction" if oracle else "undecided"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pairs", type=int, default=Config.pairs)
    ap.add_argument("--n-max", type=int, default=Config.n_max)
    ap.add_argument("--seed", type=int, default=Config.seed)
    args = ap.parse_args()
    cfg = Config(args.pairs, args.n_max, args.seed)
    rng = random.Random(cfg.seed)
    tally = Counter()
    for _ in range(cfg.pairs):
        tally[classify(random_germ(rng), random_germ(rng), cfg.n_max)] += 1
    for k in ("agree", "undecided", "contradiction"):
        print(f"{k:<14}{tally[k]:>5}")


if __name__ == "__main__":
    main()
