#!/usr/bin/env python3
"""Build biregular bipartite graphs and look at their adjacency spectra.

The spectrum of a bipartite graph is +/- the singular values of its
biadjacency matrix (plus zeros when the parts differ in size). For an
(a,b)-biregular graph the top value is sqrt(a*b); everything interesting
lives in the second one, lambda2.
"""

import math

from biregular import (
    complete_bipartite,
    even_cycle,
    heawood,
    is_ramanujan,
    random_biregular,
    singular_values,
    validate_biregular,
    write_bbg,
)

for name, g in [
    ("K_{3,3}", complete_bipartite(3, 3)),
    ("6-cycle", even_cycle(6)),
    ("Heawood", heawood()),
    ("random (3,4)-biregular", random_biregular(8, 6, 3, 4, seed=2024)),
]:
    profile = validate_biregular(g)
    s = singular_values(g)
    ram = is_ramanujan(g)
    print(f"{name}: parts {g.x_count}+{g.y_count}, degrees ({profile.a},{profile.b})")
    print(f"  sigma    = {tuple(round(v, 6) for v in s.sigma)}")
    print(f"  lambda1  = {s.lambda1:.6f} (= sqrt(ab) = {math.sqrt(profile.a*profile.b):.6f})")
    print(f"  lambda2  = {s.lambda2:.6f}, spectral gap = {s.gap:.6f}")
    print(f"  Ramanujan bound sqrt(a-1)+sqrt(b-1) = {ram.threshold:.6f} -> {ram.verdict.value}")
    print()

# graphs serialize to a tiny plain-text format
print("bbg serialization of K_{2,3}:")
print(write_bbg(complete_bipartite(2, 3)))
