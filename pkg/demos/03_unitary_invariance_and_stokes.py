"""P is a basis-independent scalar: rotating the polarization frame moves the
Stokes vector around but never changes its length relative to s0.
"""

import math

from wpipol import (AmplitudePair, build_rho, degree_of_polarization, polarization_matrix,
                    random_unitary, stokes_from_gamma, unitary_conjugate)

rho = build_rho(AmplitudePair(math.sqrt(0.7), math.sqrt(0.3) * 1j), 0.8)
gamma = polarization_matrix(rho)
p0 = degree_of_polarization(gamma)
s = stokes_from_gamma(gamma)
print(f"original frame: P = {p0:.12f}, stokes = "
      f"({s.s0:+.4f}, {s.s1:+.4f}, {s.s2:+.4f}, {s.s3:+.4f})")
print()
print("after random unitary frame changes:")
for seed in range(5):
    u = random_unitary(seed)
    g2 = unitary_conjugate(gamma, u)
    s2 = stokes_from_gamma(g2)
    p2 = degree_of_polarization(g2)
    print(f"  seed {seed}: stokes = ({s2.s0:+.4f}, {s2.s1:+.4f}, {s2.s2:+.4f}, {s2.s3:+.4f})"
          f"   P = {p2:.12f}   |P - P0| = {abs(p2 - p0):.2e}")
