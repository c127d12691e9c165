"""How often is J = 12 for End^0 of t^2 - p?  Running fractions against the 3/4 density."""

from __future__ import annotations

import argparse
import csv
from dataclasses import dataclass, field
from pathlib import Path

from jordanic.weil import survey_sqrt_p

# Dirichlet densities: p = 3 mod 4 (1/2), p = 5 mod 8 (1/4), p = 17 mod 24 (1/8), rest 1/8
LIMIT_DENSITY = {12: 0.75, 2: 0.125, 1: 0.125, 24: 0.0, 60: 0.0}


@dataclass
class SurveyConfig:
    max_prime: int = 100_000
    checkpoints: list = field(default_factory=lambda: [100, 1_000, 10_000, 100_000])
    threads: int = 1
    out: Path = Path("survey_density.csv")


def run(cfg: SurveyConfig) -> list:
    res = survey_sqrt_p(cfg.max_prime, threads=cfg.threads)
    table = []
    counts: dict = {}
    marks = sorted(c for c in cfg.checkpoints if c <= cfg.max_prime)
    seen = 0
    for row in res.rows:
        while marks and row.p > marks[0]:
            table.append(_line(marks.pop(0), seen, counts))
        counts[row.jordan] = counts.get(row.jordan, 0) + 1
        seen += 1
    for m in marks:
        table.append(_line(m, seen, counts))
    return table


def _line(n, seen, counts) -> dict:
    return {"N": n, "primes": seen, **{f"J={k}": counts.get(k, 0) / seen for k in sorted(LIMIT_DENSITY)}}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-prime", type=int, default=SurveyConfig.max_prime)
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--out", type=Path, default=SurveyConfig.out)
    a = ap.parse_args()
    cfg = SurveyConfig(max_prime=a.max_prime, threads=a.threads, out=a.out)
    cfg.checkpoints = [c for c in cfg.checkpoints if c < cfg.max_prime] + [cfg.max_prime]
    table = run(cfg)
    with cfg.out.open("w", newline="") as fh:
        wr = csv.DictWriter(fh, fieldnames=list(table[0]))
        wr.writeheader()
        wr.writerows(table)
    keys = [k for k in table[0] if k.startswith("J=")]
    print(f"{'N':>8} {'primes':>7} " + " ".join(f"{k:>7}" for k in keys))
    for r in table:
        print(f"{r['N']:>8} {r['primes']:>7} " + " ".join(f"{r[k]:>7.4f}" for k in keys))
    print(f"{'limit':>8} {'':>7} " + " ".join(f"{LIMIT_DENSITY[int(k[2:])]:>7.4f}" for k in keys))
    print(f"wrote {cfg.out}")


if __name__ == "__main__":
    main()
