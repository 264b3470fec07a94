"""Run the growth-order-group axiom suites on every built-in group and print a table."""
import argparse
import json
import time
from dataclasses import asdict, dataclass

from gog.combinators import aff_group, gog_axiom_suite, hahn_group, puiseux_group, semidirect_demo


@dataclass
class Config:
    samples: int = 500
    seed: int = 0
    fuel: int = 32
    n_max: int = 6
    workers: int = 4


def groups(cfg: Config):
    return [puiseux_group(cfg.fuel), aff_group(), hahn_group([0, 1, 2]), semidirect_demo()]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    for name, default in asdict(Config()).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=int, default=default)
    ap.add_argument("--json", action="store_true")
    args = vars(ap.parse_args())
    as_json = args.pop("json")
    cfg = Config(**args)
    rows = []
    for G in groups(cfg):
        t0 = time.perf_counter()
        recs = gog_axiom_suite(G, cfg.samples, cfg.seed, cfg.n_max, workers=cfg.workers)
        dt = time.perf_counter() - t0
        for r in recs:
            rows.append({**r, "failures": len(r["failures"]), "seconds": round(dt, 2)})
    if as_json:
        print(json.dumps({"config": asdict(cfg), "rows": rows}, indent=2))
        return
    print(f"{'group':<24}{'axiom':<7}{'pass':>6}{'fail':>6}{'undec':>7}{'vac':>6}")
    for r in rows:
        print(f"{r['group']:<24}{r['axiom']:<7}{r['passes']:>6}{r['failures']:>6}{r['undecided']:>7}{r['vacuous']:>6}")


if __name__ == "__main__":
    main()
