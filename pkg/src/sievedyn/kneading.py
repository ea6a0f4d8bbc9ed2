"""Dynamics of the quadratic family x -> 1 - u*x^2 on [-1, 1], u in [0, 2].

Itineraries of the critical orbit, inversion from a target kneading word
to the parameter u, topological entropy via the kneading determinant with
an independent lap-count oracle, Lyapunov exponents, and bifurcation /
band-structure data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

from .words import C, L, R, Ordering, Word, is_admissible, parity_compare

# parameters bounding the two-band window examined by the band scan;
# emitted alongside bifurcation data so plots can draw the marker lines
BAND_MARKERS = (1.476, 1.5437)

_TINY = 1e-300


@dataclass(frozen=True)
class KneadResult:
    """Outcome of inverting a kneading word to a parameter."""

    target: Word
    u: float
    horizon: int
    tolerance: float
    matched_prefix_len: int

    def to_record(self) -> dict:
        return {
            "word": str(self.target),
            "u": self.u,
            "horizon": self.horizon,
            "tolerance": self.tolerance,
            "matched_prefix_len": self.matched_prefix_len,
        }


@dataclass(frozen=True)
class BifurcationPoint:
    u: float
    x: float


class InversionError(RuntimeError):
    """Bisection failed to reach the requested tolerance; carries the bracket."""

    def __init__(self, message: str, bracket: tuple[float, float]):
        super().__init__(f"{message}; best bracket {bracket}")
        self.bracket = bracket


def _check_u(u: float, lo: float = 0.0):
    if not lo <= u <= 2.0:
        raise ValueError(f"u must be in [{lo}, 2], got {u}")


def iterate_map(u: float, x0: float, n: int) -> list[float]:
    """Orbit x_1..x_n of x -> 1 - u*x^2 from x0; stays inside [-1, 1]."""
    _check_u(u)
    if not -1.0 <= x0 <= 1.0:
        raise ValueError(f"x0 must be in [-1, 1], got {x0}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []
    x = x0
    for _ in range(n):
        x = 1.0 - u * x * x
        out.append(x)
    return out


def itinerary(u: float, n: int, c_tol: float = 1e-12) -> Word:
    """Symbols of the orbit of the critical value f(0) = 1.

    R for x > 0, L for x < 0, C when |x| <= c_tol; a C ends the word.
    """
    _check_u(u)
    if n < 1:
        raise ValueError("n must be >= 1")
    syms = []
    x = 1.0
    for _ in range(n):
        if abs(x) <= c_tol:
            syms.append(C)
            break
        syms.append(R if x > 0 else L)
        x = 1.0 - u * x * x
    return Word("".join(syms))


def u_of_word(
    target: Word,
    horizon: int | None = None,
    u_tol: float = 1e-12,
    c_tol: float = 1e-12,
    max_iter: int = 200,
) -> KneadResult:
    """Locate the parameter whose kneading sequence matches ``target``.

    Bisection on [0, 2] using the parity order of itineraries, which is
    monotone in u.  For targets realized on a parameter plateau the
    returned u is the infimum of parameters whose itinerary compares >=
    the target, a deterministic tie-break.
    """
    if u_tol <= 0:
        raise ValueError("u_tol must be positive")
    if horizon is None:
        horizon = 256 if target.is_finite else 1024
    if not is_admissible(target, horizon):
        raise ValueError(f"target {target} is not admissible at horizon {horizon}")

    def at_least_target(u: float) -> bool:
        it = itinerary(u, horizon, c_tol)
        return parity_compare(it, target, horizon) is not Ordering.LESS

    lo, hi = 0.0, 2.0
    if at_least_target(lo):
        hi = lo
    for _ in range(max_iter):
        if hi - lo <= u_tol:
            break
        mid = 0.5 * (lo + hi)
        if at_least_target(mid):
            hi = mid
        else:
            lo = mid
    else:
        if hi - lo > u_tol:
            raise InversionError(
                f"no convergence to {u_tol} within {max_iter} iterations", (lo, hi)
            )

    it = itinerary(hi, horizon, c_tol).preperiod
    want = target.prefix(horizon) if not target.is_finite else target.preperiod
    matched = 0
    for a, b in zip(it, want):
        if a != b:
            break
        matched += 1
    return KneadResult(target=target, u=hi, horizon=horizon, tolerance=u_tol, matched_prefix_len=matched)


def _determinant_coefficients(target: Word, truncation: int) -> np.ndarray:
    """Coefficients of 1 + sum theta_n t^n with theta the running sign product.

    L contributes +1 and R contributes -1.  A terminal C truncates the
    series: averaging the two sign continuations cancels every later term
    up to a positive factor, so the finite polynomial has the same roots
    in (0, 1).
    """
    if target.is_finite:
        syms = target.preperiod
        if syms.endswith(C):
            syms = syms[:-1]
        syms = syms[:truncation]
    else:
        syms = target.prefix(truncation)
    coef = np.empty(len(syms) + 1)
    coef[0] = 1.0
    sign = 1.0
    for k, ch in enumerate(syms):
        sign = -sign if ch == R else sign
        coef[k + 1] = sign
    return coef


def topological_entropy(target: Word, truncation: int = 4096) -> float:
    """Entropy -ln t* from the smallest root t* in (0, 1) of the kneading series.

    Returns 0.0 when the truncated series has no root there (bounded lap
    growth).
    """
    if truncation < 64:
        raise ValueError("truncation must be >= 64")
    coef = _determinant_coefficients(target, truncation)
    grid = np.linspace(0.0, 1.0, 4097)[1:-1]
    vals = npoly.polyval(grid, coef)
    neg = np.flatnonzero(vals <= 0.0)
    if neg.size == 0:
        return 0.0
    j = int(neg[0])
    if vals[j] == 0.0:
        return -math.log(grid[j])
    lo = grid[j - 1] if j > 0 else 0.0
    hi = grid[j]
    while hi - lo > 1e-14:
        mid = 0.5 * (lo + hi)
        if npoly.polyval(mid, coef) <= 0.0:
            hi = mid
        else:
            lo = mid
    return -math.log(0.5 * (lo + hi))


def lap_count_oracle(u: float, n: int) -> int:
    """Lap number of the n-th iterate, by backward preimage enumeration of 0.

    Counts 1 + #{x in [-1,1] : f^k(x) = 0, k = 0..n-1}; the count grows
    like e^(h n), giving an entropy estimate independent of the kneading
    determinant.
    """
    _check_u(u)
    if u == 0.0:
        raise ValueError("u must be positive")
    if not 1 <= n <= 22:
        raise ValueError("n must be in 1..22")
    total = 1  # the single solution of f^0(x) = 0
    level = np.array([0.0])
    for _ in range(1, n):
        arg = (1.0 - level) / u
        arg = arg[arg >= 0.0]
        roots = np.sqrt(arg)
        level = np.concatenate([roots, -roots])
        level = np.unique(level[np.abs(level) <= 1.0])  # unique merges the double root at 0
        total += level.size
    return 1 + total


def lyapunov(u: float, n: int = 10**7, burn_in: int = 10**4, x0: float = 0.3) -> float:
    """Average of ln|f'(x)| = ln|2 u x| along the post-burn-in orbit."""
    _check_u(u)
    if u == 0.0:
        raise ValueError("u must be positive")
    if n < 10**4:
        raise ValueError("n must be >= 10^4")
    if not -1.0 <= x0 <= 1.0:
        raise ValueError(f"x0 must be in [-1, 1], got {x0}")
    x = x0
    for _ in range(burn_in):
        x = 1.0 - u * x * x
    acc = 0.0
    two_u = 2.0 * u
    log = math.log
    for _ in range(n):
        x = 1.0 - u * x * x
        ax = abs(x)
        if ax < _TINY:
            ax = _TINY  # measure-zero guard against exact critical hits
        acc += log(two_u * ax)
    return acc / n


def bifurcation_data(
    u_min: float,
    u_max: float,
    u_steps: int,
    transient: int,
    keep: int,
    x0: float = 0.3,
) -> list[BifurcationPoint]:
    """Post-transient samples on an equally spaced parameter grid.

    Exactly u_steps * keep points, ordered by (u, sample index).
    """
    if not 0.0 <= u_min < u_max <= 2.0:
        raise ValueError("need 0 <= u_min < u_max <= 2")
    if u_steps < 1 or keep < 1 or transient < 0:
        raise ValueError("u_steps and keep must be >= 1, transient >= 0")
    points = []
    for u in np.linspace(u_min, u_max, u_steps):
        u = float(u)
        x = x0
        for _ in range(transient):
            x = 1.0 - u * x * x
        for _ in range(keep):
            x = 1.0 - u * x * x
            points.append(BifurcationPoint(u, x))
    return points


def bifurcation_csv(points: list[BifurcationPoint]) -> str:
    """CSV serialization, header ``u,x``, 17 significant digits."""
    lines = ["u,x"]
    lines.extend(f"{p.u:.17g},{p.x:.17g}" for p in points)
    return "\n".join(lines) + "\n"


def band_structure(
    u: float,
    samples: int = 200_000,
    transient: int = 10_000,
    bins: int = 512,
    min_gap_bins: int = 4,
    x0: float = 0.3,
) -> int:
    """2 if the attractor splits into two bands the orbit alternates between.

    The post-transient orbit is histogrammed over [-1, 1]; a candidate
    split is an interior run of at least ``min_gap_bins`` empty bins, and
    it counts as a band separation only when consecutive iterates strictly
    alternate across it.  The alternation test rejects both one-band chaos
    and periodic windows, which pure gap-hunting misclassifies.
    """
    _check_u(u)
    if u == 0.0:
        raise ValueError("u must be positive")
    if samples < 2 or bins < 8 or min_gap_bins < 1:
        raise ValueError("need samples >= 2, bins >= 8, min_gap_bins >= 1")
    xs = np.empty(samples)
    x = x0
    for _ in range(transient):
        x = 1.0 - u * x * x
    for i in range(samples):
        x = 1.0 - u * x * x
        xs[i] = x
    hist, edges = np.histogram(xs, bins=bins, range=(-1.0, 1.0))
    occupied = np.flatnonzero(hist > 0)
    for k in range(1, occupied.size):
        empty_run = occupied[k] - occupied[k - 1] - 1
        if empty_run < min_gap_bins:
            continue
        split = 0.5 * (edges[occupied[k - 1] + 1] + edges[occupied[k]])
        side = xs > split
        if np.all(side[1:] != side[:-1]):
            return 2
    return 1
