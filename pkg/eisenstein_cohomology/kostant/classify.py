"""
Classification of self-dual Kostant data at the evaluation points t = k/2 and t = k.

The scans are exhaustive over W^{P_k}. The family predicates describe the
shape of (I, J, lambda) and are always conjoined with "eval_t hits the target
and mu_w is self-dual", so they can be compared against the scans in both
directions.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from django.db import models

from eisenstein_cohomology.kostant.representatives import (
    HighestWeight,
    KostantPair,
    KostantRep,
    enumerate_kostant,
    eval_t,
    is_self_dual,
    mu_w,
)
from eisenstein_cohomology.weyl.exceptions import PreconditionError
from eisenstein_cohomology.weyl.rootsys import RankContext, Weight
from eisenstein_cohomology.weyl.scalars import HalfInt, Rational, is_half_integral, to_rational

logger = logging.getLogger(__name__)


class Family(models.TextChoices):
    HALF = "half", "t = k/2"
    ONE_I = "one_i", "t = k, tail, J one step after I"
    ONE_II = "one_ii", "t = k, tail, J two steps after I"
    ONE_III = "one_iii", "t = k, balanced, J one step after I"
    ONE_IV = "one_iv", "t = k, balanced, J two steps after I"
    ONE_MIXED = "one_mixed", "t = k, J one or two steps after I, steps vary"


@dataclass(frozen=True)
class ClassifiedRep:
    rep: KostantRep
    t: HalfInt
    mu: Weight
    self_dual: bool
    families: tuple[str, ...] = field(default=())

    @property
    def pair(self) -> KostantPair:
        return self.rep.pair

    @property
    def family(self) -> str | None:
        """First tag, or None for untagged entries."""
        return self.families[0] if self.families else None

    def with_families(self, families: list[str]) -> ClassifiedRep:
        return ClassifiedRep(self.rep, self.t, self.mu, self.self_dual, tuple(str(tag) for tag in families))


@dataclass
class ExclusionReport:
    """Outcome of the 0 <= t < k/2 exclusion scan."""

    ctx: RankContext
    lam: HighestWeight
    checked: int = 0
    violations: list[ClassifiedRep] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


def classify_rep(rep: KostantRep, lam: HighestWeight) -> ClassifiedRep:
    mu = mu_w(rep.pair, lam)
    return ClassifiedRep(rep=rep, t=eval_t(rep.pair, lam), mu=mu, self_dual=is_self_dual(mu, rep.ctx))


def classify_all(ctx: RankContext, lam: HighestWeight) -> list[ClassifiedRep]:
    lam.check_rank(ctx)
    return [classify_rep(rep, lam) for rep in enumerate_kostant(ctx)]


def scan_t(ctx: RankContext, lam: HighestWeight, t_target: Rational) -> list[ClassifiedRep]:
    """Self-dual representatives with eval_t = t_target, in (I, J) order."""
    target = to_rational(t_target)
    if not is_half_integral(target):
        # t is always a half-integer
        lam.check_rank(ctx)
        return []
    wanted = HalfInt.from_fraction(target)
    return [entry for entry in classify_all(ctx, lam) if entry.self_dual and entry.t == wanted]


def verify_no_small_t(ctx: RankContext, lam: HighestWeight) -> ExclusionReport:
    """Check that no self-dual representative has 0 <= t < k/2."""
    report = ExclusionReport(ctx=ctx, lam=lam)
    for entry in classify_all(ctx, lam):
        report.checked += 1
        if entry.self_dual and 0 <= entry.t.twice_value < ctx.k:
            report.violations.append(entry)
    if report.violations:
        logger.warning(f"Small-t exclusion fails for {ctx}, lambda={lam}: {[str(e.pair) for e in report.violations]}")
    return report


# ─────────────────────────────────────────────────────────────
# t = k/2
# ─────────────────────────────────────────────────────────────

def matches_half_pattern(pair: KostantPair, lam: HighestWeight) -> bool:
    """
    k odd: I ends in n, J = {i + 1 : i in I minus {n}}, lambda_i = lambda_{i+1}, lambda_n = 0.
    k even: |I| = |J| = k/2, J = I + 1, lambda_i = lambda_{i+1}.
    """
    n, k = pair.ctx.n, pair.ctx.k
    if k % 2:
        if pair.size_i != (k + 1) // 2 or pair.I[-1] != n or lam.coord(n) != 0:
            return False
        head = pair.I[:-1]
    else:
        if pair.size_i != k // 2:
            return False
        head = pair.I
    if pair.J != tuple(i + 1 for i in head):
        return False
    return all(lam.coord(i) == lam.coord(i + 1) for i in head)


def family_half(ctx: RankContext, lam: HighestWeight) -> list[ClassifiedRep]:
    target = HalfInt(ctx.k)
    result = []
    for entry in classify_all(ctx, lam):
        if entry.self_dual and entry.t == target and matches_half_pattern(entry.pair, lam):
            result.append(entry.with_families([Family.HALF]))
    return result


def length_half_closed_form(ctx: RankContext) -> int:
    """The common length of every self-dual representative with t = k/2."""
    n, k = ctx.n, ctx.k
    if k % 2:
        h = (k - 1) // 2
        return h * (2 * n - 3 * h) + n - k + 1
    h = k // 2
    return h * (2 * n - 3 * h + 1)


# ─────────────────────────────────────────────────────────────
# t = k (k even, k < n)
# ─────────────────────────────────────────────────────────────

def _stepped_pairs(pair: KostantPair, lam: HighestWeight) -> list[tuple[int, int]] | None:
    """
    The (i_l, j_l) couples that must satisfy a step rule, or None when the
    shape is neither balanced (|I| = |J|) nor a tail (|I| = |J| + 2 with I
    ending in n-1, n and lambda_{n-1} = lambda_n = 0).
    """
    n = pair.ctx.n
    if pair.size_i == pair.size_j:
        return list(zip(pair.I, pair.J))
    if pair.size_i == pair.size_j + 2 and pair.I[-2:] == (n - 1, n):
        if lam.coord(n - 1) == 0 and lam.coord(n) == 0:
            return list(zip(pair.I[:-2], pair.J))
    return None


def one_families(pair: KostantPair, lam: HighestWeight) -> list[str]:
    """
    Shape tags for t = k.

    Each couple (i, j) steps by s = j - i in {1, 2} with lambda_i - lambda_j = 2 - s.
    Uniform steps give (i)-(iv); an empty head fits both step sizes and gets
    both tags.
    """
    couples = _stepped_pairs(pair, lam)
    if couples is None:
        return []
    steps = set()
    for i, j in couples:
        step = j - i
        if step not in (1, 2) or lam.coord(i) - lam.coord(j) != 2 - step:
            return []
        steps.add(step)
    tail = pair.size_i != pair.size_j
    if len(steps) > 1:
        return [Family.ONE_MIXED]
    tags = []
    if steps <= {1}:
        tags.append(Family.ONE_I if tail else Family.ONE_III)
    if steps <= {2}:
        tags.append(Family.ONE_II if tail else Family.ONE_IV)
    return tags


def _check_one_range(ctx: RankContext) -> None:
    if ctx.k % 2 or ctx.k >= ctx.n:
        raise PreconditionError(f"The t = k classification needs k even and k < n, got {ctx}")


def family_one(ctx: RankContext, lam: HighestWeight) -> list[ClassifiedRep]:
    _check_one_range(ctx)
    target = HalfInt.from_int(ctx.k)
    result = []
    for entry in classify_all(ctx, lam):
        if not (entry.self_dual and entry.t == target):
            continue
        tags = one_families(entry.pair, lam)
        if tags:
            result.append(entry.with_families(tags))
    return result


def ineq1_window(ctx: RankContext) -> tuple[Fraction, Fraction]:
    """Length bounds k(n - 3k/4 + 1/2) <= l(w) <= k(n - 3k/4 + 1) at t = k."""
    _check_one_range(ctx)
    n, k = ctx.n, ctx.k
    base = k * (n - Fraction(3 * k, 4))
    return base + Fraction(k, 2), base + k


def one_family_length_window(ctx: RankContext, family: str) -> tuple[Fraction, Fraction] | None:
    """
    Length range of one t = k family inside the window from ineq1_window.

    (i) sits one above the lower bound and (iii) on it; (ii) and (iv) reach
    down from the upper bound by floor((k-2)/4) and floor(k/4). Mixed steps
    only satisfy the common window, so they get None.
    """
    lower, upper = ineq1_window(ctx)
    k = ctx.k
    windows = {
        Family.ONE_I: (lower + 1, lower + 1),
        Family.ONE_II: (upper - (k - 2) // 4, upper),
        Family.ONE_III: (lower, lower),
        Family.ONE_IV: (upper - k // 4, upper),
    }
    return windows.get(family)


# ─────────────────────────────────────────────────────────────
# Tagging for arbitrary targets
# ─────────────────────────────────────────────────────────────

def family_tags(entry: ClassifiedRep, lam: HighestWeight) -> list[str]:
    """
    Tags for one classified entry.

    Self-dual t = k/2 entries get "half" when they fit the pattern; self-dual
    t = k entries get the (i)-(iv)/mixed tags when k is even and k < n.
    Everything else is untagged.
    """
    ctx = entry.rep.ctx
    if not entry.self_dual:
        return []
    if entry.t.twice_value == ctx.k:
        return [Family.HALF] if matches_half_pattern(entry.pair, lam) else []
    if entry.t.twice_value == 2 * ctx.k and ctx.k % 2 == 0 and ctx.k < ctx.n:
        return one_families(entry.pair, lam)
    return []


def classify_at(ctx: RankContext, lam: HighestWeight, t_target: Rational) -> list[ClassifiedRep]:
    """scan_t with family tags attached where a classification exists."""
    return [entry.with_families(family_tags(entry, lam)) for entry in scan_t(ctx, lam, t_target)]


def classify_table(ctx: RankContext, lam: HighestWeight) -> list[ClassifiedRep]:
    """Every representative, classified and tagged."""
    return [entry.with_families(family_tags(entry, lam)) for entry in classify_all(ctx, lam)]
