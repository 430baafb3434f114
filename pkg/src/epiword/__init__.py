"""Generators and deciders for Sturmian, episturmian, skew and episkew words."""

from .words import (
    EQUAL,
    GREATER,
    LESS,
    MAX_ALPHABET,
    EpiwordError,
    FactorSet,
    InconclusiveError,
    InputError,
    InsufficientDirectiveError,
    Order,
    all_orders,
    alph,
    alphabetical,
    factor_complexity,
    factors,
    is_palindrome,
    lex_compare,
    lex_le,
    max_factor,
    max_of,
    min_factor,
    min_of,
    reversal,
    validate_word,
)
from .generate import (
    DirectiveSpec,
    EpiskewSpec,
    EventuallyPeriodicSpec,
    MechanicalSpec,
    apply_morphism,
    episkew_prefix,
    eventually_periodic_prefix,
    h_words,
    mechanical_prefix,
    pal_closure,
    palindromic_prefixes,
    psi,
    psi_inverse,
    standard_prefix,
)
from .classify import (
    Certificate,
    RejectReason,
    SturmianResult,
    Verdict,
    WideSenseResult,
    check_fine_prefix,
    check_min_inequality,
    check_witness,
    find_witness,
    is_balanced,
    is_finite_episturmian,
    separating_letters,
    sturmian_test,
    wide_sense_check,
)
from .oracles import (
    SweepReport,
    discovery_table,
    enumerate_balanced,
    oracle_is_finite_episturmian,
    sweep,
)

__version__ = "0.1.0"
