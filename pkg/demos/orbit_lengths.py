"""Predicted vs observed orbit lengths of PSL(2,q) subgroups on the projective line."""

import sys

from steiner.pgl import admitted_kinds, observed_orbit_census

q = int(sys.argv[1]) if len(sys.argv) > 1 else 23
for kind in admitted_kinds(q):
    row = observed_orbit_census(q, kind)
    print(f"{str(kind):20s} {row.predicted} {'ok' if row.match else 'MISMATCH ' + str(row.observed)}")
