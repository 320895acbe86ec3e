"""Groups of squarefree order and Hopf-Galois structures on cyclic extensions.

The library classifies all groups of a given squarefree order n via the
metacyclic presentation G(d,e,k), counts the Hopf-Galois structures of each
type on a cyclic field extension of degree n, and ships brute-force oracles
over the holomorph that verify every counting formula at small n.
"""

from .numutil import (
    MAX_N,
    FactorizationTriple,
    NonCoprimeModuli,
    NotAUnit,
    NotSquarefree,
    SquarefreeFactorization,
    TooLarge,
    crt_combine,
    divisors,
    euler_phi,
    factor_squarefree,
    mobius,
    omega,
    ord_mod,
    triples_of,
    v_count,
)
from .grouptypes import (
    GroupSpec,
    InvalidSpec,
    centre_commutator,
    enumerate_types,
    holder_count,
    make_spec,
    types_per_triple,
)
from .hgscount import (
    ConsistencyFailure,
    CongruenceConditionUnmet,
    CountBreakdown,
    FormulaTerm,
    NotDistinctPrimes,
    TypeReport,
    breakdown,
    four_prime_table,
    hgs_per_type,
    three_prime_table,
    total_formula,
)
from .holomorph import (
    DEFAULT_BUDGET,
    AutElement,
    BudgetExceeded,
    GroupElement,
    HolElement,
    NonInvertibleK,
    OracleReport,
    PreconditionB1,
    brute_force_structure,
    count_regular_cyclic_fast,
    count_regular_cyclic_perm,
    double_sum_T,
    geometric_sum_S,
    hol_act,
    hol_identity,
    hol_multiply,
    hol_power,
    is_regular_generator,
    regular_cyclic_subgroups,
)

__version__ = "0.1.0"
