"""Exact reachability probabilities on randomly oriented complete graphs.

unreachable_prob(n, k) is the probability that, after orienting every edge
of the complete graph on n vertices by a fair coin, none of k marked
vertices has a directed path to a further marked target vertex.
joint_unreachable_prob(n, k) additionally requires that the target has no
path to yet another marked vertex.  Both satisfy recursions obtained by
conditioning on the set of vertices the marked set beats directly, and both
are dyadic rationals with denominator dividing 2^C(n,2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .dyadic import DyadicProb

# Exact forms of the decimal constants in the envelope bounds.
_C_SINGLE_UPPER = Fraction(16, 5)       # 3.2
_C_JOINT_UPPER = Fraction(104, 5)       # 20.8
_C_SUM2_A = Fraction(28, 5)             # 5.6
_C_SUM2_B = Fraction(68, 5)             # 13.6
_C_SUM3 = Fraction(4)
_C_MARGIN_1 = Fraction(32, 5)           # 6.4
_C_MARGIN_2 = Fraction(256, 25)         # 10.24


@lru_cache(maxsize=None)
def unreachable_prob(n: int, k: int) -> Fraction:
    """P(no directed path from any of a k-set to the target) on K_n."""
    if k == 0:
        if n < 1:
            raise ValueError(f"need n >= 1, got n={n}")
        return Fraction(1)
    if n < k + 1:
        raise ValueError(f"need n >= k+1, got n={n}, k={k}")
    total = Fraction(0)
    scale = Fraction(1, 2 ** (k * (n - k)))
    for i in range(n - k):
        total += comb(n - k - 1, i) * (2**k - 1) ** i * scale * unreachable_prob(n - k, i)
    return total


@lru_cache(maxsize=None)
def joint_unreachable_prob(n: int, k: int) -> Fraction:
    """P(k-set has no path to the target and the target none to a third vertex)."""
    if k == 0:
        if n == 2:
            return Fraction(1, 2)
        return unreachable_prob(n, 1)
    if n < k + 2:
        raise ValueError(f"need n >= k+2, got n={n}, k={k}")
    total = Fraction(0)
    scale = Fraction(1, 2 ** (k * (n - k)))
    for i in range(n - k - 1):
        total += comb(n - k - 2, i) * (2**k - 1) ** i * scale * joint_unreachable_prob(n - k, i)
    return total


def relative_covariance(n: int) -> Fraction:
    """(p_joint - p_single^2) / p_joint for K_n, n >= 3."""
    single = unreachable_prob(n, 1)
    joint = joint_unreachable_prob(n, 1)
    return (joint - single * single) / joint


def covariance_sign(n: int) -> int:
    """Sign of the covariance of the two no-path events on K_n, n >= 3."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    single = unreachable_prob(n, 1)
    joint = joint_unreachable_prob(n, 1)
    diff = joint - single * single
    return (diff > 0) - (diff < 0)


@dataclass(frozen=True)
class KnRow:
    """One table row: exact no-path probabilities on K_n.

    scaled_single and scaled_joint are the numerators over 2^C(n,2); the
    joint columns are absent for n = 2.
    """

    n: int
    p_single: DyadicProb
    scaled_single: int
    p_joint: DyadicProb | None
    scaled_joint: int | None
    rel_cov: Fraction | None


def table_row(n: int) -> KnRow:
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    exp = n * (n - 1) // 2
    single = unreachable_prob(n, 1)
    scaled_single = single * 2**exp
    assert scaled_single.denominator == 1
    if n == 2:
        return KnRow(n, DyadicProb.from_fraction(single), int(scaled_single), None, None, None)
    joint = joint_unreachable_prob(n, 1)
    scaled_joint = joint * 2**exp
    assert scaled_joint.denominator == 1
    return KnRow(
        n=n,
        p_single=DyadicProb.from_fraction(single),
        scaled_single=int(scaled_single),
        p_joint=DyadicProb.from_fraction(joint),
        scaled_joint=int(scaled_joint),
        rel_cov=relative_covariance(n),
    )


def double_binomial_sum(n: int) -> Fraction:
    """Auxiliary sum bounding the single-event envelope slack.

    Sum over k of C(n,k) * sum over m of C(n-k,m) / 2^(k*m), both indices
    starting at 1.  Accumulated as an integer numerator over one power of
    two to keep the many-term addition cheap.
    """
    if n < 2:
        return Fraction(0)
    top = max(k * m for k in range(1, n) for m in range(1, n - k + 1))
    num = 0
    for k in range(1, n):
        for m in range(1, n - k + 1):
            num += comb(n, k) * comb(n - k, m) << (top - k * m)
    return Fraction(num, 1 << top)


def triple_binomial_sum(n: int) -> Fraction:
    """Auxiliary sum bounding the joint-event envelope slack (three indices)."""
    if n < 3:
        return Fraction(0)
    top = 0
    for k in range(1, n):
        for i in range(1, n - k):
            for m in range(1, k + 1):
                top = max(top, k * i + m * (n - k - i))
    num = 0
    for k in range(1, n):
        for i in range(1, n - k):
            for m in range(1, k + 1):
                num += comb(n, k) * comb(n - k, i) * comb(k, m) << (top - k * i - m * (n - k - i))
    return Fraction(num, 1 << top)


def sign_margin(n: int) -> Fraction:
    """Error budget whose staying under 5 certifies positive covariance."""
    return (
        Fraction(1, 2) ** (n - 5)
        + _C_MARGIN_1 * Fraction(7, 8) ** (n - 1)
        + _C_MARGIN_2 * Fraction(49, 64) ** (n - 1)
    )


@dataclass(frozen=True)
class BoundRow:
    """Exact-rational verdicts for the analytic bounds at one n."""

    n: int
    single_lower_ok: bool
    single_upper_ok: bool
    joint_lower_ok: bool | None
    joint_upper_ok: bool | None
    sum2_bound_a_ok: bool
    sum2_bound_b_ok: bool
    sum3_bound_ok: bool
    margin_below_5: bool | None
    margin_decreased: bool | None
    single_scaled_limit: float
    joint_scaled_limit: float | None

    def all_ok(self) -> bool:
        checks = [
            self.single_lower_ok, self.single_upper_ok, self.joint_lower_ok,
            self.joint_upper_ok, self.sum2_bound_a_ok, self.sum2_bound_b_ok,
            self.sum3_bound_ok, self.margin_decreased,
        ]
        return all(c for c in checks if c is not None)


def bound_report(n_max: int) -> list[BoundRow]:
    """Check every analytic bound exactly for 2 <= n <= n_max."""
    if n_max < 3:
        raise ValueError(f"need n_max >= 3, got {n_max}")
    half = Fraction(1, 2)
    rows = []
    for n in range(2, n_max + 1):
        single = unreachable_prob(n, 1)
        single_lo = half ** (n - 2) * (1 - half ** (n - 1))
        single_hi = half ** (n - 2) * (1 + _C_SINGLE_UPPER * Fraction(7, 8) ** (n - 1))
        if n >= 3:
            joint = joint_unreachable_prob(n, 1)
            joint_lo = half ** (2 * n - 3) * (3 - 2 * half ** (n - 3))
            joint_hi = half ** (2 * n - 3) * (3 + _C_JOINT_UPPER * Fraction(7, 8) ** (n - 3))
            joint_lower_ok = joint_lo <= joint
            joint_upper_ok = joint <= joint_hi
            joint_limit = float(joint / half ** (2 * n - 3))
            margin_below = sign_margin(n) < 5
            margin_dec = sign_margin(n) < sign_margin(n - 1) if n >= 4 else None
        else:
            joint_lower_ok = joint_upper_ok = None
            joint_limit = None
            margin_below = margin_dec = None
        sum2 = double_binomial_sum(n)
        sum3 = triple_binomial_sum(n)
        rows.append(BoundRow(
            n=n,
            single_lower_ok=single_lo <= single,
            single_upper_ok=single <= single_hi,
            joint_lower_ok=joint_lower_ok,
            joint_upper_ok=joint_upper_ok,
            sum2_bound_a_ok=sum2 <= _C_SUM2_A * Fraction(7, 4) ** n,
            sum2_bound_b_ok=sum2 <= _C_SUM2_B * Fraction(13, 8) ** n,
            sum3_bound_ok=sum3 <= _C_SUM3 * Fraction(7, 4) ** n,
            margin_below_5=margin_below,
            margin_decreased=margin_dec,
            single_scaled_limit=float(single / half ** (n - 2)),
            joint_scaled_limit=joint_limit,
        ))
    return rows
