"""Conjugate germs x + delta to x + 1 + eps and print the conjugator and the defect."""
import argparse
from dataclasses import dataclass, field

from gog import series as S
from gog.cli import germ
from gog.hfield import conjugate_to_translation


@dataclass
class Config:
    germs: list = field(default_factory=lambda: ["x + x^(-2)", "x + x^(1/2)", "x + 1 + x^(-1)", "x + 3*x^(2/3)"])
    depth: int = 6
    terms: int = 4


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("germs", nargs="*")
    ap.add_argument("--depth", type=int, default=Config.depth)
    args = ap.parse_args()
    cfg = Config(depth=args.depth)
    if args.germs:
        cfg.germs = args.germs
    for text in cfg.germs:
        h, eps = conjugate_to_translation(germ(text), cfg.depth)
        print(text)
        print(f"  h   = {S.render(h, cfg.terms)}")
        print(f"  eps = {S.render(eps, cfg.terms)}")


if __name__ == "__main__":
    main()
