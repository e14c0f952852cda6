"""
Sweep the bundled census of alternating knots up to ten crossings.

Every entry is checked for the trapezoidal shape of its Alexander
coefficients and for the Hirasawa-Murasugi inequality between the
signature and the stable length.  A violation would be a counterexample;
the script prints where the inequality is sharp and which polynomials
factor as f(t) f(1/t).

    python3 demos/02_census_sweep.py
"""

from __future__ import annotations

from collections import Counter

from knottrap.harness import BUNDLED_CENSUS, CensusOptions, sweep


def main():
    res = sweep(BUNDLED_CENSUS, CensusOptions(jobs=2))
    reps = res.reports
    print(f"{len(reps)} entries, exit code {res.exit_code}, violations {len(res.violations)}")
    by_crossings = Counter(r.crossings for r in reps)
    print("entries by crossing number:", dict(sorted(by_crossings.items())))
    sharp = [r for r in reps if r.hm_sharp]
    print(f"H-M sharp on {len(sharp)} of {len(reps)} entries")
    slack = Counter(r.hm_lhs - r.hm_rhs for r in reps)
    print("H-M slack (lhs - rhs):", dict(sorted(slack.items())))
    fm = [r for r in reps if r.fox_milnor and r.fox_milnor["found"]]
    print(f"{len(fm)} polynomials factor as f(t) f(1/t):")
    for r in fm[:8]:
        print(f"  {r.name:24} {tuple(r.coeffs)}  f = {r.fox_milnor['factor']}")
    not_lc = [r for r in reps if r.ratios and not r.ratios["log_concave"]]
    print(f"{len(not_lc)} sequences are not log-concave")
    widest = max(reps, key=lambda r: r.sl)
    print(f"longest plateau: {widest.name} {tuple(widest.coeffs)} sl = {widest.sl}")


if __name__ == "__main__":
    main()
