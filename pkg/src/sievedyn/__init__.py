"""Symbolic word algebra for the prime sieve and kneading tools for 1 - u*x^2."""

__version__ = "0.1.0"

from .words import (
    Ordering,
    Word,
    WordSyntaxError,
    dot_compose,
    format_word,
    is_admissible,
    minimal_period,
    parity_compare,
    parse_word,
    shift_word,
    star_compose,
    star_power,
)
from .sieve import (
    SieveState,
    advance,
    gap_pattern_count,
    initial_state,
    next_prime_word,
    prime_word,
    primes_from_state,
    sieve_step,
    state_from_record,
    state_period_word,
    state_record,
    state_stream_word,
    symbol_at,
)
from .kneading import (
    BAND_MARKERS,
    BifurcationPoint,
    InversionError,
    KneadResult,
    band_structure,
    bifurcation_csv,
    bifurcation_data,
    itinerary,
    iterate_map,
    lap_count_oracle,
    lyapunov,
    topological_entropy,
    u_of_word,
)
from .numtheory import (
    PrimeTable,
    classic_sieve,
    goldbach_r,
    is_prime,
    prime_count_estimate,
    twin_count,
)

__all__ = [
    "Ordering",
    "Word",
    "WordSyntaxError",
    "dot_compose",
    "format_word",
    "is_admissible",
    "minimal_period",
    "parity_compare",
    "parse_word",
    "shift_word",
    "star_compose",
    "star_power",
    "SieveState",
    "advance",
    "gap_pattern_count",
    "initial_state",
    "next_prime_word",
    "prime_word",
    "primes_from_state",
    "sieve_step",
    "state_from_record",
    "state_period_word",
    "state_record",
    "state_stream_word",
    "symbol_at",
    "BAND_MARKERS",
    "BifurcationPoint",
    "InversionError",
    "KneadResult",
    "band_structure",
    "bifurcation_csv",
    "bifurcation_data",
    "itinerary",
    "iterate_map",
    "lap_count_oracle",
    "lyapunov",
    "topological_entropy",
    "u_of_word",
    "PrimeTable",
    "classic_sieve",
    "goldbach_r",
    "is_prime",
    "prime_count_estimate",
    "twin_count",
]
