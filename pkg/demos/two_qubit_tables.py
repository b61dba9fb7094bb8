#!/usr/bin/env python3
"""Dimension four: five MUBs from two qubits, plus their entanglement split.

d = 4 is not prime, and the four shift eigenbases of a single four-level
system fail to be pairwise unbiased. Viewing the space as two qubits fixes
this: the canonical product basis plus the eigenbases of the four tensor
products of single-qubit phased shifts form a maximal family of five.

The same family splits cleanly under the determinant measure: the pure
tensor bases w_00 and w_11 carry no global entanglement, while every
vector of the recombined bases w_01 and w_10 is maximally entangled.
"""

from quditbases import (
    certify_unbiased,
    classify_basis,
    computational_basis,
    eigenvalue_of,
    mub_basis,
    phased_shift_matrix,
    triplet_singlet_basis,
    two_qubit_mub_set,
)

print("single-system eigenbases fail for d = 4:")
failed = certify_unbiased([mub_basis(4, a) for a in range(4)] + [computational_basis(4)])
for pair in failed.pairs:
    if pair.verdict == "failed":
        w = pair.witness
        print(
            f"  {pair.first} vs {pair.second}: vectors ({w.first_index}, {w.second_index})"
            f" have |overlap|^2 = {w.overlap_sq} instead of 1/4"
        )

bases, certificate = two_qubit_mub_set()
print(f"\ntwo-qubit family: {', '.join(certificate.basis_labels)}")
print(f"all pairs unbiased: {certificate.all_unbiased}, maximal: {certificate.maximal}")

print("\ncolumns (times 1/2) and product-operator eigenvalues:")
factors = {"w_00": (0, 0), "w_11": (1, 1), "w_01": (0, 1), "w_10": (1, 0)}
for basis in bases[1:]:
    a, b = factors[basis.label]
    w = phased_shift_matrix(2, a).kron(phased_shift_matrix(2, b))
    print(f"  {basis.label}:")
    for vec in basis.vectors:
        entries = ", ".join(str(e) for e in vec.entries)
        value = eigenvalue_of(w, vec)
        print(f"     ({entries})   eigenvalue {value}")

print("\ndeterminant classes:")
for basis in bases:
    result = classify_basis(basis, 2)
    values = ", ".join(str(r.det_abs_sq) for r in result.results)
    print(f"  {basis.label}: {result.summary} (|det A|^2 = {values})")

coupled = triplet_singlet_basis()
print(f"\nfor contrast, the coupled spin basis '{coupled.label}':")
for vec, tag in zip(coupled.vectors, coupled.tags):
    entries = ", ".join(str(e) for e in vec.entries)
    print(f"  ({entries}) scale_sq={vec.scale_sq}  [{tag}]")
