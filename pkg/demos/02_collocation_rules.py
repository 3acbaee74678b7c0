"""The two collocation point rules.

Collocation happens at six interior points per element: either the roots
of the degree-6 shifted Legendre polynomial or the degree-6 Chebyshev
(first kind) roots, both mapped to [0, 1].
"""

import numpy as np

from hermite_heat import chebyshev_rule, legendre_rule

for rule in (legendre_rule(), chebyshev_rule()):
    print(f"{rule.kind} points:")
    for i, xi in enumerate(rule.points, start=1):
        print(f"  xi_{i} = {xi:.12f}")
    gaps = np.diff(rule.points)
    print(f"  symmetric about 1/2: max |xi_i + xi_(7-i) - 1| = "
          f"{np.max(np.abs(rule.points + rule.points[::-1] - 1)):.2e}")
    print(f"  spacing ranges from {gaps.min():.6f} to {gaps.max():.6f}")
    print()
