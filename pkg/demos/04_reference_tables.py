"""Analytic predictions against bundled reference measurements.

The package ships the published coincidence-count measurements for both
state families (ten mixing weights each, three criteria per state).  This
demo prints the full comparison and pulls out the structure of the
disagreements: norm-based entries are biased upward near chi = 0, where the
measured norm of an almost-zero correlation vector is dominated by noise.
"""
from steerq import reproduce_tables
from steerq.expio import comparison_to_text

cmp = reproduce_tables()
print(comparison_to_text(cmp))

worst = sorted(cmp.rows, key=lambda r: r.deviation, reverse=True)[:5]
print("largest deviations:")
for row in worst:
    print(f"  {row.family} chi={row.chi:.2f} {row.criterion}: "
          f"analytic {row.analytic:.4f} vs measured {row.measured:.4f} "
          f"(deviation {row.deviation:.4f})")
print("\nboth chi = 0 entries of the lsc column measure the norm of a zero")
print("vector, which any noise inflates; away from that corner the analytic")
print("predictions track the measurements to a few parts in a hundred.")
