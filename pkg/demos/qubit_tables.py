#!/usr/bin/env python3
"""Walk through the d = 2 story: three mutually unbiased qubit bases.

The shift eigenbases B_00 and B_01 together with the computational basis
are pairwise unbiased: every cross overlap has squared magnitude exactly
1/2. The operators behind them are the familiar Pauli matrices.
"""

from quditbases import (
    clock_matrix,
    ket,
    mub_set,
    phased_shift_matrix,
)


def show_matrix(name, matrix):
    print(f"{name}:")
    for row in matrix.rows:
        print("   [" + ", ".join(str(e) for e in row) + "]")


def show_basis(basis):
    print(f"basis {basis.label}:")
    for vec in basis.vectors:
        entries = ", ".join(str(e) for e in vec.entries)
        print(f"   ({entries}) / sqrt({vec.scale_sq.denominator})")


show_matrix("V_00 = sigma_x", phased_shift_matrix(2, 0))
show_matrix("V_01 = X Z = -i sigma_y", phased_shift_matrix(2, 1))
show_matrix("Z = sigma_z", clock_matrix(2))
print()

bases, certificate = mub_set(2)
for basis in bases:
    show_basis(basis)
print()

print("pairwise verdicts:")
for pair in certificate.pairs:
    print(f"   {pair.first} vs {pair.second}: {pair.verdict}")
print(f"maximal family of d+1 = 3: {certificate.maximal}")

overlap = ket(2, 0).overlap_squared(bases[1][0])
print(f"|<0|a=1,alpha=0>|^2 = {overlap} (exactly 1/2, no floats involved)")
