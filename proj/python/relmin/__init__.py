"""Exact computational algebra: Cayley-Dickson algebras over the rationals,
generalized Heisenberg groups, unitriangular matrix groups, absolute values,
and the witness constructions that connect them.

All arithmetic is exact; rationals cross the boundary as ``Rational`` objects,
``int``, or ``"p/q"`` strings.
"""

from relmin._core import (
    BiadditiveMap,
    CDElement,
    HeisenbergElement,
    PairingOrder,
    Rational,
    SubgroupFamily,
    UniTriMatrix,
    archimedean_witness_euclidean,
    archimedean_witness_padic,
    break_compatibility,
    cd_associator,
    cd_conjugate,
    cd_invert,
    cd_mul,
    cd_norm_form,
    corner_elem,
    coset_projection_eq,
    delete_reduction,
    find_composition_violation,
    h_commutator,
    h_identity,
    h_inverse,
    h_mul,
    heisenberg_realization,
    kronecker_escalate,
    padic_abs,
    run_verify,
    separatedness_witness,
    sqrt_sum_leq,
    subgroup_membership,
    tilde_membership,
    ut_inverse,
    ut_mul,
    w_eval,
)

__all__ = [
    "BiadditiveMap",
    "CDElement",
    "HeisenbergElement",
    "PairingOrder",
    "Rational",
    "SubgroupFamily",
    "UniTriMatrix",
    "archimedean_witness_euclidean",
    "archimedean_witness_padic",
    "break_compatibility",
    "cd_associator",
    "cd_conjugate",
    "cd_invert",
    "cd_mul",
    "cd_norm_form",
    "corner_elem",
    "coset_projection_eq",
    "delete_reduction",
    "find_composition_violation",
    "h_commutator",
    "h_identity",
    "h_inverse",
    "h_mul",
    "heisenberg_realization",
    "kronecker_escalate",
    "padic_abs",
    "run_verify",
    "separatedness_witness",
    "sqrt_sum_leq",
    "subgroup_membership",
    "tilde_membership",
    "ut_inverse",
    "ut_mul",
    "w_eval",
]
