"""How which-path knowledge shows up in the polarization of the output light.

Builds two-path single-photon states across the (|a1|^2, I) plane, where I
is the degree of indistinguishability of the two paths, and tabulates the
degree of polarization P of the emerging light.  Two facts stand out:

* P >= I always, and
* P == I exactly when the two path intensities are equal.
"""

import math

from wpipol import AmplitudePair, build_rho, duality_report

print("Equal-intensity line (|a1|^2 = 0.5): P tracks I exactly")
print(f"{'I':>6} {'P':>10} {'P - I':>12}")
amps = AmplitudePair(math.sqrt(0.5), math.sqrt(0.5))
for k in range(6):
    indist = k / 5
    rep = duality_report(build_rho(amps, indist))
    print(f"{indist:6.2f} {rep.deg_pol:10.6f} {rep.inequality_margin:12.2e}")

print()
print("Unbalanced paths (|a1|^2 = 0.8): P exceeds I, floor set by the imbalance")
print(f"{'I':>6} {'P':>10} {'margin P-I':>12} {'identity residual':>20}")
amps = AmplitudePair(math.sqrt(0.8), math.sqrt(0.2))
for k in range(6):
    indist = k / 5
    rep = duality_report(build_rho(amps, indist))
    print(f"{indist:6.2f} {rep.deg_pol:10.6f} {rep.inequality_margin:12.6f} {rep.identity_residual:20.2e}")

print()
print("Complete which-path information with balanced paths -> completely unpolarized:")
rep = duality_report(build_rho(AmplitudePair(math.sqrt(0.5), math.sqrt(0.5)), 0.0))
print(f"  I = {rep.indist}, P = {rep.deg_pol}")
