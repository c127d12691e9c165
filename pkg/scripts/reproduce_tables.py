"""Regenerate every quantitative table: group values, both cascades, the five surfaces, cross-checks."""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path

from jordanic.groups import GroupFamily, build_group, jordan_constant, subgroups
from jordanic.quadfield import INFINITY, QuadraticField, RationalPlace
from jordanic.quatalg import QuaternionClass, base_change, d_p_infty, jordan_over_Q
from jordanic.quatarith import cross_validate
from jordanic.validate import run_suite
from jordanic.weil import analyze_poly


@dataclass
class ReproConfig:
    out_dir: Path = Path("results")
    include_suite: bool = True


def group_table() -> list:
    fams = [GroupFamily.dicyclic(n) for n in range(2, 7)] + [GroupFamily(k) for k in ("2T", "2O", "2I")]
    rows = []
    for fam in fams:
        G = build_group(fam)
        jc = jordan_constant(G)
        rows.append({"group": str(fam), "order": G.order, "subgroups": len(subgroups(G)), "jordan": jc.value,
                     "H": len(jc.subgroup), "A": len(jc.normal_abelian)})
    return rows


def rational_table() -> list:
    places = [RationalPlace(p) for p in (2, 3, 5, 7, 11, 13)] + [INFINITY]
    return [{"ram": ",".join(map(str, pair)), "jordan": jordan_over_Q(QuaternionClass(None, frozenset(pair))).value}
            for pair in combinations(places, 2)]


def surface_table() -> list:
    rows = []
    for p in (73, 17, 3, 2, 5):
        d = analyze_poly((-p, 0, 1), p, 1)
        rows.append({"h": str(d.weil), "center": str(d.center), "ram": d.ram_str(), "d": d.d, "e": d.e, "g": d.g,
                     "class": d.surface_class, "jordan": d.jordan.value})
    return rows


def basechange_table() -> list:
    rows = []
    for p in (2, 3):
        for m in (5, 2, 17, 33, 73, -1, -2, -3, -7):
            D = base_change(d_p_infty(p), QuadraticField(m))
            rows.append({"D": f"D_({p},inf)", "m": m, "ram": D.ram_str(), "division": D.is_division})
    return rows


def _print(title, rows):
    print(f"\n== {title}")
    cols = list(rows[0])
    width = {c: max(len(c), *(len(str(r[c])) for r in rows)) for c in cols}
    print("  ".join(c.ljust(width[c]) for c in cols))
    for r in rows:
        print("  ".join(str(r[c]).ljust(width[c]) for c in cols))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", type=Path, default=ReproConfig.out_dir)
    ap.add_argument("--no-suite", action="store_true")
    a = ap.parse_args()
    cfg = ReproConfig(out_dir=a.out_dir, include_suite=not a.no_suite)
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    t0 = time.perf_counter()
    tables = {
        "groups": group_table(),
        "rational_cascade": rational_table(),
        "surfaces": surface_table(),
        "base_change": basechange_table(),
        "cross_validation": [cross_validate(f).to_json() for f in (GroupFamily.quaternion8(), GroupFamily.dicyclic(3),
                                                                    GroupFamily("2T"), GroupFamily("2O"), GroupFamily("2I"))],
    }
    for name, rows in tables.items():
        _print(name, rows)
        (cfg.out_dir / f"{name}.json").write_text(json.dumps(rows, indent=2))
    if cfg.include_suite:
        checks = run_suite()
        _print("validation suite", [c.to_json() for c in checks])
        (cfg.out_dir / "suite.json").write_text(json.dumps([c.to_json() for c in checks], indent=2))
    print(f"\nwrote {len(tables) + cfg.include_suite} files to {cfg.out_dir} in {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
