import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sievedyn.words import (
    DEFAULT_HORIZON,
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

finite_rl = st.text(alphabet="RL", min_size=1, max_size=12)


# ---------------------------------------------------------------- parsing

def test_parse_plain():
    assert parse_word("RLRRRL") == Word("RLRRRL")


def test_parse_eventually_periodic():
    w = parse_word("RL(R)^inf")
    assert w.preperiod == "RL" and w.period == "R"


def test_parse_exponent():
    assert parse_word("R^3") == Word("RRR")
    assert parse_word("RLR^3LRC") == Word("RLRRRLRC")


def test_parse_group_exponent():
    assert parse_word("(RL)^3") == Word("RLRLRL")


def test_parse_sym_inf():
    assert parse_word("RLR^inf") == parse_word("RL(R)^inf")


@pytest.mark.parametrize(
    "text,pos",
    [
        ("", 0),
        ("RL X", 2),
        ("(RL", 0),
        ("()^inf", 0),
        ("R^1", 2),
        ("R^", 2),
        ("(R)^inf(L)^inf", 7),
        ("(R)^infL", 7),
        ("RCL", 1),
        ("(RC)^inf", 2),
        ("C^2", 0),
    ],
)
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(WordSyntaxError) as exc:
        parse_word(text)
    assert exc.value.position == pos


def test_parse_c_final_ok():
    assert parse_word("RLC") == Word("RLC")
    assert parse_word("C") == Word("C")


# ------------------------------------------------------------- formatting

def test_format_short_runs_literal():
    assert format_word(Word("RL")) == "RL"
    assert format_word(Word("RLLLL")) == "RLLLL"


def test_format_long_runs_compressed():
    assert format_word(Word("RLLLLL")) == "RL^5"
    assert format_word(parse_word("RL^5")) == "RL^5"


def test_format_periodic():
    assert format_word(Word("RL", "R")) == "RL(R)^inf"
    assert format_word(Word("", "RLRRRL")) == "(RLRRRL)^inf"


def test_canonicalization_absorbs_preperiod():
    assert Word("RLR", "R") == Word("RL", "R")
    assert Word("RLRL", "RLRL") == Word("", "RL")


@given(pre=st.text(alphabet="RL", min_size=0, max_size=8), per=st.text(alphabet="RL", min_size=0, max_size=6))
def test_roundtrip_random_words(pre, per):
    if not pre and not per:
        return
    w = Word(pre, per)
    assert parse_word(format_word(w)) == w


@given(finite_rl)
def test_roundtrip_with_terminal_c(body):
    w = Word(body + "C")
    assert parse_word(format_word(w)) == w


# ------------------------------------------------------------ composition

def test_dot_symbol_table():
    # a . b = L iff a = b = L, over all pairs; associative and commutative on triples
    for a in "RL":
        for b in "RL":
            prod = dot_compose(Word(a), Word(b)).preperiod
            assert prod == ("L" if a == b == "L" else "R")
    for a in "RL":
        for b in "RL":
            for c in "RL":
                left = dot_compose(dot_compose(Word(a), Word(b)), Word(c))
                right = dot_compose(Word(a), dot_compose(Word(b), Word(c)))
                assert left == right


def test_dot_compose_prime_words():
    assert dot_compose(Word("RL"), Word("RLL")) == Word("RLRRRL")


def test_dot_compose_idempotent():
    for text in ("RL", "RLRRRL", "RLLLL"):
        w = Word(text)
        assert dot_compose(w, w) == w


def test_dot_compose_divisibility_oracle():
    # positions surviving both RL and RLLLL are those divisible by neither 2 nor 5
    expect = "".join("L" if q % 2 and q % 5 else "R" for q in range(10))
    assert expect == "RLRLRRRLRL"
    assert dot_compose(Word("RL"), Word("RLLLL")) == Word(expect)


def test_dot_compose_rejects_c_and_infinite():
    with pytest.raises(ValueError):
        dot_compose(Word("RC"), Word("RL"))
    with pytest.raises(ValueError):
        dot_compose(Word("RL", "R"), Word("RL"))


@given(finite_rl, finite_rl, finite_rl)
def test_dot_compose_commutative_associative(a, b, c):
    wa, wb, wc = Word(a), Word(b), Word(c)
    assert dot_compose(wa, wb) == dot_compose(wb, wa)
    assert dot_compose(dot_compose(wa, wb), wc) == dot_compose(wa, dot_compose(wb, wc))


@given(st.text(alphabet="RL", min_size=1, max_size=10), st.text(alphabet="RL", min_size=1, max_size=10))
def test_dot_compose_is_pointwise_on_streams(a, b):
    prod = dot_compose(Word(a), Word(b)).preperiod
    n = len(prod)
    for q in range(3 * n):
        sa, sb = a[q % len(a)], b[q % len(b)]
        assert prod[q % n] == ("L" if sa == sb == "L" else "R")


# ---------------------------------------------------------- minimal period

def _period_by_divisor_scan(s):
    for d in range(1, len(s) + 1):
        if len(s) % d == 0 and s[:d] * (len(s) // d) == s:
            return d
    raise AssertionError


@pytest.mark.parametrize("text,expect", [("RLRL", 2), ("RLRRRL", 6), ("RL", 2), ("RR", 1)])
def test_minimal_period_examples(text, expect):
    assert _period_by_divisor_scan(text) == expect
    assert minimal_period(Word(text)) == expect


def test_minimal_period_of_composition():
    w = dot_compose(Word("RLL"), Word("RLLLL"))
    assert _period_by_divisor_scan(w.preperiod) == 15
    assert minimal_period(w) == 15


@given(finite_rl)
def test_minimal_period_matches_divisor_scan(s):
    assert minimal_period(Word(s)) == _period_by_divisor_scan(s)


# ------------------------------------------------------------- comparison

def test_parity_compare_periodic_tails():
    # first difference at position 2 after one R: base order reversed, so R < L there
    assert parity_compare(parse_word("RL(R)^inf"), parse_word("RL(L)^inf"), 64) is Ordering.LESS


def test_parity_compare_composed_vs_tail():
    # difference at position 5 behind four R's: even parity keeps L < R
    assert parity_compare(parse_word("(RLRRRL)^inf"), parse_word("RL(R)^inf"), 64) is Ordering.LESS


def test_parity_compare_reflexive():
    for text in ("RL(R)^inf", "RLRRRL", "RLC"):
        w = parse_word(text)
        assert parity_compare(w, w, 64) is Ordering.EQUAL


def test_parity_compare_equal_within_horizon():
    a = parse_word("(RLRR)^inf")
    b = parse_word("RLRR(RLRR)^inf")  # identical stream
    assert parity_compare(a, b, 16) is Ordering.EQUAL


def test_parity_compare_finite_words_get_terminal_c():
    # a finite word compares as if closed by C: RL > RLR because R < C at odd parity
    assert parity_compare(Word("RL"), Word("RLR"), 64) is Ordering.GREATER
    assert parity_compare(Word("RC"), Word("RLRC"), 64) is Ordering.LESS


def test_parity_compare_antisymmetric():
    a, b = parse_word("RL(R)^inf"), parse_word("RL(L)^inf")
    assert parity_compare(a, b, 64) is Ordering.LESS
    assert parity_compare(b, a, 64) is Ordering.GREATER


words_strategy = st.one_of(
    st.builds(Word, finite_rl),
    st.builds(Word, st.text(alphabet="RL", min_size=0, max_size=6), st.text(alphabet="RL", min_size=1, max_size=4)),
)


@given(words_strategy, words_strategy, words_strategy)
def test_parity_compare_total_preorder(a, b, c):
    h = 64
    ab, ba = parity_compare(a, b, h), parity_compare(b, a, h)
    assert ab.value == -ba.value
    # transitivity of <=
    def le(x, y):
        return parity_compare(x, y, h) is not Ordering.GREATER
    if le(a, b) and le(b, c):
        assert le(a, c)


# ---------------------------------------------------------------- shifting

def test_shift_finite():
    assert shift_word(Word("RLC"), 1) == Word("LC")
    with pytest.raises(ValueError):
        shift_word(Word("RL"), 2)


def test_shift_periodic_rotates():
    w = parse_word("RL(RRL)^inf")
    assert shift_word(w, 3) == parse_word("(RLR)^inf")
    assert shift_word(w, 0) == w


@given(words_strategy, st.integers(min_value=0, max_value=10))
def test_shift_agrees_with_stream(w, s):
    if w.is_finite and s >= len(w):
        return
    shifted = shift_word(w, s)
    want = w.prefix(s + 24)[s:]
    assert shifted.prefix(len(want)) == want


# ----------------------------------------------------------- admissibility

def test_admissible_examples():
    assert is_admissible(parse_word("RL(R)^inf"), 64)
    assert not is_admissible(parse_word("RR(L)^inf"), 64)
    assert is_admissible(parse_word("(RL)^inf"), 64)


def test_admissible_requires_leading_r():
    with pytest.raises(ValueError):
        is_admissible(parse_word("LR"), 64)


def test_admissible_finite_words():
    assert is_admissible(parse_word("RLC"), 64)
    assert is_admissible(parse_word("RLRC"), 64)
    assert not is_admissible(parse_word("RRC"), 64)


def test_admissible_matches_shift_definition():
    # brute-force the definition with shift_word + parity_compare
    for text in ("RL(R)^inf", "RR(L)^inf", "(RL)^inf", "(RLRRRL)^inf", "RLRC", "RLLRC"):
        w = parse_word(text)
        h = 48
        limit = (len(w) - 1) if w.is_finite else h
        expected = all(
            parity_compare(shift_word(w, s), w, h) is not Ordering.GREATER
            for s in range(1, limit + 1)
        )
        assert is_admissible(w, h) == expected, text


# ------------------------------------------------------------ star product

def test_star_doubling():
    assert star_compose(parse_word("RC"), parse_word("RC")) == parse_word("RLRC")


def test_star_period_eight():
    assert star_compose(parse_word("RLRC"), parse_word("RC")) == parse_word("RLR^3LRC")


def test_star_identity_like():
    assert star_compose(parse_word("RC"), parse_word("C")) == parse_word("RC")


def test_star_requires_terminal_c():
    with pytest.raises(ValueError):
        star_compose(parse_word("RL"), parse_word("RC"))


def test_star_periodic_operand():
    w = star_compose(parse_word("RC"), parse_word("(RL)^inf"))
    assert w.prefix(8) == "RLRR" * 2


def test_star_cascade_admissible():
    rc = parse_word("RC")
    for k in range(1, 8):
        assert is_admissible(star_power(rc, k), DEFAULT_HORIZON)
