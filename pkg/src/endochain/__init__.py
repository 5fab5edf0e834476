"""endochain: the semiring of monotone self-maps of a finite chain.

Addition is pointwise max, multiplication is left-to-right composition.
The package provides the value type and algebra (``core``), exhaustive
enumeration (``enumeration``), idempotent structure (``idempotents``),
root classes with Catalan counting (``classes``), verification suites
(``verify``), and a CLI (``cli``).
"""

from .core import (
    Endo,
    EndoError,
    OmegaPower,
    add,
    compose,
    constant,
    fixed_points,
    format_endo,
    identity,
    is_idempotent,
    jump_points,
    k_minus,
    k_plus,
    make_endo,
    omega,
    parse_endo,
    power,
)
from .enumeration import (
    DEFAULT_CAP,
    all_endos,
    all_endos_with_prefix,
    count_endos,
    filter_endos,
    fixes_all,
    has_fixed_set,
    has_jump_set,
    partition_by_omega,
    zero_preserving,
)
from .idempotents import (
    CayleyTables,
    IdFamily,
    SegmentClass,
    cayley_tables,
    check_image_equals_fix,
    enumerate_id_family,
    enumerate_idempotents_by_jumps,
    gap_jump_point,
    id_family_order,
    ideal_check,
    idempotent_witness,
    isolated_nonfixed_predicate,
    no_jump_idempotent_count,
    segment_classify,
    stabilization_index,
)
from .classes import (
    ClassReport,
    ProductWitness,
    TypeDescriptor,
    catalan,
    class_members_constructive,
    class_of,
    class_order,
    class_order_printed,
    class_semiring_check,
    congruence_counterexample,
    count_above_diagonal_tuples,
    count_below_diagonal_tuples,
    equivalent,
    idempotent_of_type,
    mixed_type_product_probe,
    type_of,
    validate_noncongruence_triple,
)
from .report import VerificationReport
from .verify import CLAIMS, run_all, run_claim

__version__ = "0.1.0"
