"""Asymmetric quantum cyclic codes: build, derive, verify.

Classical cyclic codes over GF(q) are identified by defining sets (unions
of cyclotomic cosets); nested pairs yield asymmetric CSS codes
[[n, k, dz/dx]]_q and asymmetric subsystem codes [[n, k, r, dz/dx]]_q, with
the two distances established by exhaustive minimum-weight search over
codeword set differences at desk scale, and by designed-distance bounds
beyond it.
"""

from .aqec import (
    AqecParams,
    CorrectionCapability,
    SubsystemParams,
    aqec_to_subsystem,
    build_stabilizer_matrix,
    check_css_commutativity,
    correction_capability,
    css_aqec,
    extend_by_defining_set,
    extend_by_polynomial,
    subsystem_euclidean,
    subsystem_to_stabilizer,
    trade_dimension,
)
from .audit import REFERENCE_TABLE, RowAudit, audit_rows
from .cyclic import (
    CheckMatrix,
    CyclicCode,
    DefiningSet,
    bch,
    code_sum,
    contains,
    from_defining_set,
    full_space,
    generator_matrix,
    hamming,
    intersect,
    parity_check_matrix,
    parse_code,
    repetition,
    rs,
    zero_code,
)
from .errors import BudgetExceeded, InternalConsistencyError, NotNested
from .galois import (
    Field,
    FieldElement,
    field_of_size,
    load_modulus_table,
    make_field,
    nth_root_field,
    set_modulus_override,
    subfield_embedding,
)
from .polyring import (
    CyclotomicCoset,
    Polynomial,
    cyclotomic_cosets,
    factor_xn_minus_1,
    minimal_polynomial,
    parse_poly,
    poly_gcd,
    render_poly,
)
from .search import all_cyclic_codes, search
from .weights import (
    DEFAULT_BUDGET,
    WeightReport,
    macwilliams_transform,
    min_weight,
    min_weight_difference,
    symplectic_weight,
    weight_distribution,
)

__version__ = "0.1.0"
