"""Run every verification and write one JSON report per run.

    python3 scripts/verify_all.py --out reports --trials 1000 --seed 0
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

from esymstab.esym import EsymSpec
from esymstab.stabilizer import (mpb_invariance_check, product_stabilizer_check,
                                 verify_rank_lemma_grid, verify_theorem1)
from esymstab.weights import verify_theorem_group


@dataclass
class RunConfig:
    out: Path = Path("reports")
    trials: int = 1000
    seed: int = 0
    stabilizer_cases: list = field(default_factory=lambda: [(4, 3), (5, 3), (5, 4), (6, 4)])
    grid_cases: list = field(default_factory=lambda: [(5, 3), (5, 4)])
    grid_bound: int = 2
    lattice_max_n: int = 8


def jobs(cfg: RunConfig):
    for n, r in cfg.stabilizer_cases:
        yield f"stabilizer_n{n}_r{r}", lambda n=n, r=r: verify_theorem1(n, r, cfg.trials, cfg.seed)
    for n, r in cfg.grid_cases:
        yield f"rank_grid_n{n}_r{r}", lambda n=n, r=r: verify_rank_lemma_grid(n, r, cfg.grid_bound)
    yield "product_n5_r4", lambda: product_stabilizer_check(5, 4)
    yield "minors_n5_r3", lambda: mpb_invariance_check(5, 3, min(cfg.trials, 100), cfg.seed)
    for n in range(4, cfg.lattice_max_n + 1):
        for r in range(3, n):
            yield f"lattice_n{n}_r{r}", lambda n=n, r=r: verify_theorem_group(n, r)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=RunConfig.out)
    ap.add_argument("--trials", type=int, default=RunConfig.trials)
    ap.add_argument("--seed", type=int, default=RunConfig.seed)
    cfg = RunConfig(**vars(ap.parse_args(argv)))
    cfg.out.mkdir(parents=True, exist_ok=True)

    failed = 0
    summary = []
    for name, job in jobs(cfg):
        start = time.perf_counter()
        rep = job()
        elapsed = time.perf_counter() - start
        (cfg.out / f"{name}.json").write_text(rep.dumps() + "\n")
        status = "ok" if rep.passed else "REFUTED"
        failed += not rep.passed
        summary.append({"run": name, "passed": rep.passed, "seconds": round(elapsed, 3)})
        print(f"{status:8} {name:24} {rep.confirmed}/{rep.candidates_checked} "
              f"confirmed  {elapsed:6.2f}s")

    config = {k: str(v) if isinstance(v, Path) else v for k, v in asdict(cfg).items()}
    (cfg.out / "summary.json").write_text(
        json.dumps({"config": config, "runs": summary}, indent=2, sort_keys=True) + "\n")
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
