"""Exact computation of the mod-3 Weyl-group invariants of E6 on H*(BT).

The package rebuilds the thirteen generators of the invariant subalgebra
from the root-system data, machine-verifies every displayed identity of
the underlying computation (reflection actions, defining formulas, the
sigma table, product relations, module presentations, the Poincare
series), and cross-checks dimensions against an independent linear-algebra
oracle.  See the e6inv command-line tool or e6inv.verify for the suites.
"""

__version__ = "0.1.0"
