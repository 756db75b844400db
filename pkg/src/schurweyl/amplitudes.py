"""Transition amplitudes between Gelfand-Tsetlin patterns.

A transition runs from a pattern with ``n`` boxes to one with ``n + 1``:
there is a smallest level ``k`` at which the patterns differ, and every
level ``j >= k`` of the upper pattern exceeds the lower by exactly one,
at position ``tau_j``.  Two engines compute the amplitude:

* ``louck``: the closed-form product formula over partial hooks
  ``p_{i,j} = m_{i,j} + j - i`` of the lower pattern, valid for any
  alphabet size.  The amplitude is a signed square root of a rational,
  so it is always a single-term :class:`~schurweyl.radicals.Radical`.
* ``pattern``: counting rules special to two-letter alphabets.

Both are exact; ``both`` evaluates the two and insists they agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from schurweyl.radicals import ONE, Radical, radical_from_sqrt
from schurweyl.tableaux import GTPattern, validate_gt

ENGINES = ("louck", "pattern", "both")


class NotAnEdge(ValueError):
    """The two patterns are not related by a single-box transition."""


class WrongDimension(ValueError):
    """The pattern engine only applies to two-letter alphabets."""


class EngineMismatch(AssertionError):
    """The two amplitude engines disagreed on an edge (should be impossible)."""


@dataclass(frozen=True)
class TransitionContext:
    """Where an upper pattern exceeds a lower one.

    ``k`` is the smallest differing level and ``taus[j - k]`` is the
    1-based position of the extra box at level ``j``, for ``j = k..d``.
    """

    lower: GTPattern
    upper: GTPattern
    k: int
    taus: tuple[int, ...]

    def tau(self, j: int) -> int:
        return self.taus[j - self.k]


def transition_context(lower: GTPattern, upper: GTPattern) -> TransitionContext:
    """Validate a single-box transition and locate its bumped positions."""
    validate_gt(lower)
    validate_gt(upper)
    d = lower.d
    if upper.d != d:
        raise NotAnEdge(f"pattern depths differ: {d} vs {upper.d}")
    k = 0
    taus = []
    for j in range(1, d + 1):
        low, up = lower.levels[j - 1], upper.levels[j - 1]
        bumped = [i for i in range(j) if up[i] != low[i]]
        if not bumped:
            if k:
                raise NotAnEdge(f"level {j} unchanged above level {k}")
            continue
        if len(bumped) > 1 or up[bumped[0]] != low[bumped[0]] + 1:
            raise NotAnEdge(f"level {j} changes by more than one box")
        if not k:
            k = j
        taus.append(bumped[0] + 1)
    if not k:
        raise NotAnEdge("patterns are identical")
    return TransitionContext(lower, upper, k, tuple(taus))


def partial_hook(p: GTPattern, i: int, j: int) -> int:
    """Partial hook ``p_{i,j} = m_{i,j} + j - i``."""
    return p.m(i, j) + j - i


@cache
def louck_amplitude(lower: GTPattern, upper: GTPattern) -> Radical:
    """Exact transition amplitude from the product formula over partial hooks.

    All hooks are evaluated on the lower pattern.  The first factor runs
    over level pairs ``(j-1, j)`` for ``j = k+1..d`` and carries the sign
    ``sgn(tau_{j-1} - tau_j)`` with ``sgn(0) = +1``; the second factor
    involves level ``k`` alone and drops out when ``k = 1``.
    """
    ctx = transition_context(lower, upper)
    d, k = lower.d, ctx.k

    def hook(i: int, j: int) -> int:
        return partial_hook(lower, i, j)

    amp = ONE
    for j in range(k + 1, d + 1):
        t_up, t_lo = ctx.tau(j), ctx.tau(j - 1)
        num = 1
        den = 1
        for i in range(1, j):
            if i != t_lo:
                num *= hook(t_up, j) - hook(i, j - 1)
                den *= hook(t_lo, j - 1) - hook(i, j - 1) + 1
        for i in range(1, j + 1):
            if i != t_up:
                num *= hook(t_lo, j - 1) - hook(i, j) + 1
                den *= hook(t_up, j) - hook(i, j)
        if den == 0:
            raise NotAnEdge(f"vanishing hook product at level {j}")
        sign = -1 if t_lo < t_up else 1
        amp = amp.mul(radical_from_sqrt(sign, abs(num), abs(den)))
    if k > 1:
        num = 1
        den = 1
        for i in range(1, k):
            num *= hook(ctx.tau(k), k) - hook(i, k - 1)
        for i in range(1, k + 1):
            if i != ctx.tau(k):
                den *= hook(ctx.tau(k), k) - hook(i, k)
        if den == 0:
            raise NotAnEdge(f"vanishing hook product at level {k}")
        amp = amp.mul(radical_from_sqrt(1, abs(num), abs(den)))
    return amp


@cache
def pattern_amplitude_d2(lower: GTPattern, upper: GTPattern) -> Radical:
    """Exact d=2 transition amplitude from the entry-counting rules.

    After subtracting the common box count ``c`` of the second row, the
    amplitude depends only on the reduced first-row length ``n`` of the
    upper pattern and on whether the bottom entries ``m_{1,1}`` agree.
    """
    if lower.d != 2:
        raise WrongDimension(f"pattern engine needs d=2, got d={lower.d}")
    transition_context(lower, upper)

    m_low = lower.m(1, 1)
    m_up = upper.m(1, 1)
    a_up, b_up = upper.levels[1]

    if (a_up, b_up) == (lower.levels[1][0] + 1, lower.levels[1][1]):
        # box added to row 1
        c = b_up
        n = a_up - c
        if m_low == m_up:
            return radical_from_sqrt(1, n - (m_up - c), n)
        return radical_from_sqrt(1, m_up - c, n)
    # box added to row 2
    c = b_up - 1
    n = a_up - c + 1
    if m_low == m_up:
        return radical_from_sqrt(1, m_up - c, n)
    return radical_from_sqrt(-1, n - (m_up - c), n)


def edge_amplitude(lower: GTPattern, upper: GTPattern, engine: str = "louck") -> Radical:
    """Amplitude of the transition ``lower -> upper`` under the chosen engine."""
    if engine == "louck":
        return louck_amplitude(lower, upper)
    if engine == "pattern":
        return pattern_amplitude_d2(lower, upper)
    if engine == "both":
        still = louck_amplitude(lower, upper)
        quick = pattern_amplitude_d2(lower, upper)
        if still != quick:
            raise EngineMismatch(
                f"louck={still} pattern={quick} for {lower} -> {upper}"
            )
        return still
    raise ValueError(f"unknown engine {engine!r}; expected one of {ENGINES}")


def _levels_ok(levels: list[list[int]], j: int) -> bool:
    """In-betweenness between levels ``j-1`` and ``j`` (1-based), both current."""
    if j < 2:
        return True
    upper, lower = levels[j - 1], levels[j - 2]
    return all(upper[i] >= lower[i] >= upper[i + 1] for i in range(j - 1))


@cache
def up_transitions(lower: GTPattern, k: int) -> tuple[GTPattern, ...]:
    """All valid upper patterns reached from ``lower`` by inserting letter ``k``.

    Levels ``k..d`` each gain one box; a depth-first scan over the bump
    positions prunes on in-betweenness as soon as a level is placed.
    """
    d = lower.d
    if not 1 <= k <= d:
        raise ValueError(f"letter out of range: {k} with d={d}")
    levels = [list(level) for level in lower.levels]
    found: list[GTPattern] = []

    def scan(j: int) -> None:
        if j > d:
            found.append(GTPattern(tuple(tuple(level) for level in levels)))
            return
        row = levels[j - 1]
        for pos in range(j):
            row[pos] += 1
            if (pos == 0 or row[pos - 1] >= row[pos]) and _levels_ok(levels, j):
                scan(j + 1)
            row[pos] -= 1

    scan(k)
    return tuple(found)


@cache
def down_transitions(upper: GTPattern) -> tuple[tuple[GTPattern, int], ...]:
    """All ``(lower, k)`` whose transition by letter ``k`` yields ``upper``.

    Walks levels top-down removing one box per level until it stops;
    stopping after level ``j+1`` removes letter ``k = j + 1``.
    """
    d = upper.d
    levels = [list(level) for level in upper.levels]
    found: list[tuple[GTPattern, int]] = []

    def emit(k: int) -> None:
        found.append((GTPattern(tuple(tuple(level) for level in levels)), k))

    def scan(j: int) -> None:
        # levels above j are already decremented and mutually consistent
        if j == 0:
            emit(1)
            return
        if j < d and _levels_ok(levels, j + 1):
            emit(j + 1)
        row = levels[j - 1]
        for pos in range(j):
            row[pos] -= 1
            if row[pos] >= 0 and (pos + 1 == j or row[pos] >= row[pos + 1]):
                if j == d or _levels_ok(levels, j + 1):
                    scan(j - 1)
            row[pos] += 1

    if sum(upper.levels[-1]):
        scan(d)
    return tuple(found)
