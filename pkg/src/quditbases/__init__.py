"""Exact construction and certification of qudit bases.

The package builds, entirely in exact cyclotomic arithmetic, the
clock-and-shift operator family on a d-dimensional space, the eigenbases of
the phased shifts, mutually unbiased basis families (maximal for prime d,
and the two-qubit family for d = 4), the generalized Pauli group of order
d^3, and a determinant measure of two-qudit entanglement. Every claimed
property is certified by exact computation; floating point appears only in
cross-checks of identities that genuinely involve square roots.
"""

from .cyclotomic import Cyclotomic, cyclotomic_polynomial, euler_phi, root_of_unity
from .entanglement import (
    BasisClassification,
    TangleResult,
    classify_basis,
    coefficient_matrix,
    global_tangle,
)
from .mub import (
    EigenCheck,
    MubCertificate,
    OverlapWitness,
    PairVerdict,
    certify_unbiased,
    computational_basis,
    eigen_check,
    mub_basis,
    mub_set,
    mub_vector,
    triplet_singlet_basis,
    two_qubit_mub_set,
)
from .operators import (
    CheckResult,
    OperatorMatrix,
    RadicalDiagonal,
    VerificationReport,
    clock_matrix,
    eigenvalue_of,
    ladder_modulus,
    phased_shift_matrix,
    shift_matrix,
    su2_report,
    weyl_report,
)
from .pauli import (
    GroupReport,
    PauliElement,
    enumerate_group,
    pauli_compose,
    pauli_inverse,
    pauli_matrix,
)
from .states import Basis, ScaledScalar, SpinLabel, StateVector, ket

__version__ = "0.1.0"

__all__ = [
    "Cyclotomic",
    "root_of_unity",
    "euler_phi",
    "cyclotomic_polynomial",
    "SpinLabel",
    "StateVector",
    "ScaledScalar",
    "Basis",
    "ket",
    "OperatorMatrix",
    "RadicalDiagonal",
    "CheckResult",
    "VerificationReport",
    "phased_shift_matrix",
    "shift_matrix",
    "clock_matrix",
    "ladder_modulus",
    "eigenvalue_of",
    "weyl_report",
    "su2_report",
    "mub_vector",
    "mub_basis",
    "computational_basis",
    "eigen_check",
    "EigenCheck",
    "certify_unbiased",
    "mub_set",
    "two_qubit_mub_set",
    "triplet_singlet_basis",
    "MubCertificate",
    "PairVerdict",
    "OverlapWitness",
    "PauliElement",
    "pauli_matrix",
    "pauli_compose",
    "pauli_inverse",
    "enumerate_group",
    "GroupReport",
    "coefficient_matrix",
    "global_tangle",
    "classify_basis",
    "TangleResult",
    "BasisClassification",
]
