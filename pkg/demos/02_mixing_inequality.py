#!/usr/bin/env python3
"""The bipartite mixing inequality in action.

For subsets A of X and B of Y, the edge count e(A, B) deviates from its
density prediction sqrt(ab)/sqrt(|X||Y|) * |A||B| by at most
lambda2 * sqrt(|A||B| (1-|A|/|X|)(1-|B|/|Y|)). Small lambda2 means the
graph spreads its edges like a random one.
"""

from biregular import heawood, mixing_audit, mixing_check, random_biregular, singular_values

g = heawood()
spectrum = singular_values(g)
print(f"Heawood graph, lambda2 = {spectrum.lambda2:.6f}")

a_side = [("x", 0), ("x", 1), ("x", 2)]
b_side = [("y", 0), ("y", 3), ("y", 5), ("y", 6)]
rep = mixing_check(g, a_side, b_side, spectrum)
print(f"|A|=3, |B|=4: deviation {rep.lhs:.4f} <= bound {rep.rhs:.4f} -> {rep.holds}")

# sweep a thousand random subset pairs and record the tightest slack
report = mixing_audit(g, pairs=1000, seed=7, spectrum=spectrum)
print(f"1000 sampled pairs: {report.violations} violations, "
      f"slack in [{report.min_slack:.4f}, {report.max_slack:.4f}]")

# a sparser random graph has a bigger lambda2, hence looser bounds
g2 = random_biregular(15, 15, 3, 3, seed=99)
s2 = singular_values(g2)
report2 = mixing_audit(g2, pairs=1000, seed=8, spectrum=s2)
print(f"\nrandom (3,3)-biregular on 15+15: lambda2 = {s2.lambda2:.4f}")
print(f"1000 sampled pairs: {report2.violations} violations, "
      f"min slack {report2.min_slack:.4f}")
