"""rectbal: exact balance analysis of word rectangles built from the
Fibonacci, Tribonacci and Thue-Morse words."""

from .exact_quadratic import (
    GAMMA,
    PHI,
    QuadraticValue,
    floor_n_gamma,
    floor_n_phi,
    floor_value,
    frac_value,
)
from .numeration import (
    EmptyExpansion,
    FibIndexList,
    InvalidRepresentation,
    NegaBinRep,
    TribRep,
    ZeckRep,
    adjacent_fib,
    fib_index_list,
    is_fibonacci,
    negabin_decode,
    negabin_encode,
    pair_decode,
    pair_encode,
    trib_decode,
    trib_encode,
    zeck_decode,
    zeck_encode,
    zeck_shift,
)
from .words import (
    BudgetExceeded,
    PrefixCounts,
    SequenceKind,
    Word,
    fib_symbol,
    prefix_counts,
    sturmian_a_symbol,
    tm_symbol,
    trib2_symbol,
    trib_symbol,
    word,
)
from .rectangles import (
    LetterCountVector,
    RectangleQuery,
    delta,
    rect_letter_counts,
    rect_sum,
    rect_transpose_check,
)
from .fib_balance import (
    BalanceStatus,
    BalanceVerdict,
    CirclePartition,
    balance_table,
    circle_partition,
    delta_block_scan,
    distinct_value_count,
    diverse_identities_check,
    exact_balance,
    is_balanced,
    t_counting_form,
    value_set,
    zeck_characterization,
)
from .trib_balance import (
    CornerWitness,
    NotFoundWithinLimit,
    TwoBalanceReport,
    balanced_2xn_list,
    find_corner_witness,
    two_balance_scan,
    verify_no_2balance_3plus,
)
from .tm_balance import (
    ExcessProfile,
    ParityViolation,
    excess,
    excess_class_parity_check,
    excess_even_even,
    excess_parity_reduced,
    excess_profile,
    excess_sign_symmetry,
)
from .dfa_tools import (
    Dfa,
    InconsistentSample,
    SampleTable,
    build_sample_table,
    dfa_accepts_pair,
    dfa_from_text,
    dfa_run,
    dfa_to_text,
    infer_min_dfa,
    state_count_stability,
)

__version__ = "0.1.0"
