#!/usr/bin/env python3
"""Certify structural properties from lambda2 alone.

Each certificate compares lambda2 against a closed-form threshold; firing
proves the property outright (the conditions are sufficient, never
necessary), so a not-fired certificate is silence, not a refutation.
"""

from biregular import (
    certify_edge_connectivity,
    certify_global_rigidity,
    certify_rigid_packing,
    certify_tree_packing,
    certify_vertex_connectivity,
    complete_bipartite,
    even_cycle,
    random_biregular,
    singular_values,
)


def show(cert):
    thr = "n/a" if cert.threshold is None else f"{cert.threshold:.4f}"
    print(f"  {cert.property.value:14} k={cert.k}: lambda2={cert.lambda2:.4f} "
          f"vs threshold {thr:>7} -> {cert.verdict.value}")


for name, g in [
    ("6-cycle", even_cycle(6)),
    ("K_{4,4}", complete_bipartite(4, 4)),
    ("K_{6,6}", complete_bipartite(6, 6)),
    ("random (4,4) on 8+8", random_biregular(8, 8, 4, 4, seed=17)),
]:
    print(name)
    s = singular_values(g)
    show(certify_edge_connectivity(g, 2, s))
    show(certify_vertex_connectivity(g, 2, s))
    show(certify_tree_packing(g, 2, s))
    show(certify_rigid_packing(g, 1, s))
    show(certify_global_rigidity(g, s))
    print()

# a fired rigid-packing certificate carries its free consequences
cert = certify_rigid_packing(complete_bipartite(6, 6), 1)
print(f"K_{{6,6}} rigid-packing k=1 implies: {', '.join(cert.implied)}")
