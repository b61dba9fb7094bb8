#!/usr/bin/env python3
"""Clock-and-shift relations and the su(2) ladder, certified per dimension.

For every d the pair (X, Z) satisfies X^d = Z^d = 1 and X Z = q Z X, the
phased shifts factor as X Z^a, and their d-th powers return to the
identity up to the sign (-1)^((d-1)a). All of that is exact. The su(2)
side pairs an exact integer identity (the ladder commutator, rearranged to
avoid square roots) with float checks of the commutators that genuinely
contain them.
"""

from quditbases import ladder_modulus, su2_report, weyl_report

print("exact clock-and-shift verification:")
for dim in range(1, 13):
    report = weyl_report(dim)
    print(f"  d = {dim:2d}: {len(report.checks)} identities, passed = {report.passed}")

print("\nladder radicands (d-1-k)(k+1) for d = 6:", ladder_modulus(6).radicands)
print("the trailing zero kills the wrap-around column of modulus * shift")

print("\nsu(2) reports (worst float residual over a in Z_d):")
for dim in (2, 3, 5, 10, 25, 50):
    worst = 0.0
    ok = True
    for a in range(dim):
        report = su2_report(dim, a, 1e-12)
        ok = ok and report.passed
        for check in report.checks:
            if check.max_residual is not None:
                worst = max(worst, check.max_residual)
    print(f"  d = {dim:2d}: passed = {ok}, max residual = {worst:.2e}")
