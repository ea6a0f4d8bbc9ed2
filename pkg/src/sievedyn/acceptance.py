"""End-to-end checks behind both ``tests/test_acceptance.py`` and ``verify``.

Every check pins its tolerance here; each suite returns a list of results
so callers can print one pass/fail line per item.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from . import kneading, numtheory, sieve, words
from .words import Ordering, Word, parse_word


@dataclass
class CheckResult:
    suite: str
    name: str
    passed: bool
    measured: str
    expected: str

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} [{self.suite}] {self.name}: measured {self.measured}, expected {self.expected}"


def _result(suite, name, passed, measured, expected) -> CheckResult:
    return CheckResult(suite, name, bool(passed), str(measured), str(expected))


TABLE1_ROWS = [
    ("RC", 1.0),
    ("RLRC", 1.3107),
    ("RLR^3LRC", 1.3815),
    ("RLR^2(RL)^inf", 1.4304),
    ("RL(R)^inf", 1.5437),
    ("RLC", 1.754),
    ("RL(L)^inf", 2.0),
]


def check_table1() -> list[CheckResult]:
    """Word-to-parameter inversion for the seven tabulated rows, +-2e-3 each."""
    out = []
    t0 = time.perf_counter()
    for text, expected in TABLE1_ROWS:
        u = kneading.u_of_word(parse_word(text)).u
        out.append(_result("table1", f"u({text})", abs(u - expected) <= 2e-3, f"{u:.6f}", f"{expected} +- 2e-3"))
    elapsed = time.perf_counter() - t0
    out.append(_result("table1", "runtime", elapsed < 5.0, f"{elapsed:.2f}s", "< 5 s"))
    return out


def check_feigenbaum() -> list[CheckResult]:
    """Parameters of the doubling cascade increase toward 1.40115."""
    rc = parse_word("RC")
    us = [kneading.u_of_word(words.star_power(rc, k)).u for k in range(1, 8)]
    increasing = all(a < b for a, b in zip(us, us[1:]))
    out = [_result("feigenbaum", "u((RC)^*k) increasing for k=1..7", increasing,
                   "[" + ", ".join(f"{u:.5f}" for u in us) + "]", "strictly increasing")]
    out.append(_result("feigenbaum", "u at k=7 near accumulation", abs(us[-1] - 1.40115) <= 5e-3,
                       f"{us[-1]:.6f}", "1.40115 +- 5e-3"))
    return out


def check_anchors() -> list[CheckResult]:
    """Spot values: the composed-word parameter, entropy, Lyapunov exponents."""
    out = []
    u2 = kneading.u_of_word(parse_word("(RLRRRL)^inf")).u
    out.append(_result("anchors", "u((RLRRRL)^inf)", abs(u2 - 1.476) <= 3e-3, f"{u2:.6f}", "1.476 +- 3e-3"))
    h = kneading.topological_entropy(parse_word("RL(R)^inf"))
    out.append(_result("anchors", "entropy(RL(R)^inf)", abs(h - 0.34657) <= 1e-3, f"{h:.6f}", "0.34657 +- 1e-3"))
    lam = kneading.lyapunov(1.5437, n=10**7)
    out.append(_result("anchors", "lyapunov(1.5437)", 0.33 <= lam <= 0.36, f"{lam:.5f}", "in [0.33, 0.36]"))
    lam2 = kneading.lyapunov(2.0, n=10**7)
    out.append(_result("anchors", "lyapunov(2.0)", abs(lam2 - 0.6931) <= 5e-3, f"{lam2:.5f}", "0.6931 +- 5e-3"))
    return out


def check_sieve() -> list[CheckResult]:
    """Exact recursion, prime-set, and prefix-convergence checks for 8 states."""
    out = []
    t0 = time.perf_counter()
    state = sieve.initial_state()
    oracle = numtheory.classic_sieve(23 * 23).primes
    for i in range(1, 9):
        extracted = sieve.next_prime_word(sieve.state_period_word(state))
        p_next = len(extracted.preperiod)
        expected_word = sieve.prime_word(p_next)
        out.append(_result("sieve", f"extraction from state {i} reproduces prime word",
                           extracted == expected_word and numtheory.is_prime(p_next),
                           str(extracted), str(expected_word)))
        p_next_sq = p_next * p_next
        got = sieve.primes_from_state(state, p_next_sq)
        want = [p for p in oracle if state.primes[-1] < p < p_next_sq]
        out.append(_result("sieve", f"L positions of state {i} in (1, {p_next_sq})",
                           got == want, f"{len(got)} positions", f"primes in ({state.primes[-1]}, {p_next_sq})"))
        stream = sieve.state_stream_word(state)
        lcp = 0
        for q in range(p_next + 2):
            ref = "R" if q != 1 else "L"  # the limit word R L R R R ...
            if stream.symbol_at(q) != ref:
                break
            lcp += 1
        out.append(_result("sieve", f"common prefix of state {i} with RL(R)^inf",
                           lcp == p_next, str(lcp), str(p_next)))
        state = sieve.sieve_step(state)
    elapsed = time.perf_counter() - t0
    out.append(_result("sieve", "runtime", elapsed < 1.0, f"{elapsed:.2f}s", "< 1 s"))
    return out


def check_period() -> list[CheckResult]:
    """Composed prime words have period exactly p*q."""
    out = []
    ps = [2, 3, 5, 7, 11, 13]
    for a in ps:
        for b in ps:
            if a >= b:
                continue
            m = words.minimal_period(words.dot_compose(sieve.prime_word(a), sieve.prime_word(b)))
            out.append(_result("period", f"period of word({a}) . word({b})", m == a * b, str(m), str(a * b)))
    return out


def check_ordering() -> list[CheckResult]:
    """The composed words form a strictly increasing admissible chain."""
    out = []
    horizon = 4096
    state = sieve.initial_state()
    streams = []
    for i in range(1, 9):
        streams.append(sieve.state_stream_word(state))
        state = sieve.sieve_step(state)
    for i in range(7):
        ok = words.parity_compare(streams[i], streams[i + 1], horizon) is Ordering.LESS
        out.append(_result("ordering", f"state {i + 1} < state {i + 2}", ok, "", "LESS"))
    tail = parse_word("RL(R)^inf")
    top = parse_word("RL(L)^inf")
    out.append(_result("ordering", "state 8 < RL(R)^inf",
                       words.parity_compare(streams[7], tail, horizon) is Ordering.LESS, "", "LESS"))
    out.append(_result("ordering", "RL(R)^inf < RL(L)^inf",
                       words.parity_compare(tail, top, horizon) is Ordering.LESS, "", "LESS"))
    for i, w in enumerate(streams, start=1):
        out.append(_result("ordering", f"state {i} admissible", words.is_admissible(w, horizon), "", "admissible"))
    return out


def check_bands() -> list[CheckResult]:
    """One two-band to one-band transition, located at the merging parameter."""
    us = [round(1.50 + k * 1e-3, 10) for k in range(81)]
    vals = [kneading.band_structure(u) for u in us]
    down = [us[k + 1] for k in range(len(vals) - 1) if vals[k] == 2 and vals[k + 1] == 1]
    up = [us[k + 1] for k in range(len(vals) - 1) if vals[k] == 1 and vals[k + 1] == 2]
    out = [_result("bands", "exactly one 2->1 transition on [1.50, 1.58]",
                   len(down) == 1 and not up, f"down at {down}, up at {up}", "one downward, none upward")]
    if down:
        out.append(_result("bands", "transition near the merging point",
                           abs(down[0] - 1.5437) <= 5e-3, f"{down[0]:.4f}", "1.5437 +- 5e-3"))
    else:
        out.append(_result("bands", "transition near the merging point", False, "none", "1.5437 +- 5e-3"))
    return out


def check_twins() -> list[CheckResult]:
    """Symbolic gap counts equal prime twin counts; Goldbach counts check out."""
    out = []
    state = sieve.advance(sieve.initial_state(), 7)  # eight primes absorbed
    gaps = sieve.gap_pattern_count(state, 2, 20, 529)
    tw = numtheory.twin_count(20, 529)
    out.append(_result("twins", "gap pattern count vs twin count on (19, 529)", gaps == tw, str(gaps), str(tw)))

    flags = [False, False] + [numtheory.is_prime(k) for k in range(2, 10**4 + 1)]
    bad_match = bad_floor = None
    for n in range(4, 10**4 + 1, 2):
        r = numtheory.goldbach_r(n)
        brute = sum(1 for p in range(2, n // 2 + 1) if flags[p] and flags[n - p])
        if r != brute and bad_match is None:
            bad_match = (n, r, brute)
        if r < 1 and bad_floor is None:
            bad_floor = n
    out.append(_result("twins", "goldbach_r matches brute force on [4, 10^4]",
                       bad_match is None, str(bad_match), "no mismatch"))
    out.append(_result("twins", "goldbach_r >= 1 on [4, 10^4]", bad_floor is None, str(bad_floor), "none below 1"))
    return out


def check_estimate() -> list[CheckResult]:
    """Quality band of the closed-form prime-count estimate."""
    out = []
    for p in (31, 101, 997):
        est = numtheory.prime_count_estimate(p)
        table = numtheory.classic_sieve(p * p)
        actual = sum(1 for q in table.primes if p < q < p * p)
        ratio = est / actual
        out.append(_result("estimate", f"estimate/actual at p={p}",
                           0.75 <= ratio <= 1.05, f"{ratio:.4f}", "in [0.75, 1.05]"))
    return out


SUITES = {
    "table1": check_table1,
    "feigenbaum": check_feigenbaum,
    "anchors": check_anchors,
    "sieve": check_sieve,
    "period": check_period,
    "ordering": check_ordering,
    "bands": check_bands,
    "twins": check_twins,
    "estimate": check_estimate,
}


def run_suite(name: str) -> list[CheckResult]:
    if name == "all":
        results = []
        for fn in SUITES.values():
            results.extend(fn())
        return results
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    return SUITES[name]()
