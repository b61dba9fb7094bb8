#!/usr/bin/env python3
"""A tour of the generalized Pauli group P_d = {q^a X^b Z^c}.

The symbolic composition law lives on exponent triples; the matrix
realization is the authority it is checked against. P_d has order d^3,
sits inside the unitary group, and its center contains the pure phases.
"""

from quditbases import (
    PauliElement,
    enumerate_group,
    pauli_compose,
    pauli_inverse,
    pauli_matrix,
)

print("qubit case, d = 2 (q = -1):")
xz = PauliElement(0, 1, 1)
zx = pauli_compose(2, PauliElement(0, 0, 1), PauliElement(0, 1, 0))
print(f"  X Z       -> {xz.text()}")
print(f"  Z X       -> {zx.text()}   (the reordering phase appears)")
print(f"  (X Z)^-1  -> {pauli_inverse(2, xz).text()}   since (X Z)^2 = -1")
square = pauli_compose(2, xz, xz)
print(f"  (X Z)^2   -> {square.text()}")

print("\nmatrix of q X^2 Z in d = 3:")
for row in pauli_matrix(3, PauliElement(1, 2, 1)).rows:
    print("   [" + ", ".join(str(e) for e in row) + "]")

print("\nfull enumeration reports:")
for dim in range(2, 8):
    report = enumerate_group(dim)
    oracle = "all pairs" if dim <= 4 else f"{report.sampled_pairs} sampled pairs"
    print(
        f"  d = {dim}: order {report.order:3d}, unitary = {report.unitary}, "
        f"matrix oracle on {oracle} = {report.faithful}, passed = {report.passed}"
    )
