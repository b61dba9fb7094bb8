#!/usr/bin/env python3
"""The d = 3 tables: four mutually unbiased qutrit bases, exactly.

Prints the three eigenbasis column tables in q-notation
(q = exp(2*pi*i/3)) and certifies, in exact cyclotomic arithmetic, that
together with the computational basis they form a maximal family of
d + 1 = 4 mutually unbiased bases.
"""

from quditbases import mub_set, phased_shift_matrix, root_of_unity

Q = root_of_unity(3, 1)


def q_power(value):
    for e in range(3):
        if value == Q ** e:
            return {0: "1  ", 1: "q  ", 2: "q^2"}[e]
    return f"({value})"


print("phased shift matrices V_0a (column k maps to row k-1 mod 3):")
for a in range(3):
    rows = phased_shift_matrix(3, a).rows
    print(f"  a = {a}:")
    for row in rows:
        cells = ["0  " if not e else q_power(e) for e in row]
        print("     [" + " ".join(cells) + "]")

bases, certificate = mub_set(3)
print("\neigenbasis columns (each divided by sqrt(3)):")
for basis in bases[:-1]:
    print(f"  {basis.label}:")
    for vec in basis.vectors:
        print("     (" + ", ".join(q_power(e).strip() for e in vec.entries) + ")")

print("\ncertificate:")
for pair in certificate.pairs:
    print(f"  {pair.first} vs {pair.second}: {pair.verdict}")
print(f"maximal: {certificate.maximal} ({len(certificate.basis_labels)} bases)")
