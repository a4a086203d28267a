"""
Brute-force Weyl group enumeration and definition-level recomputation.

Nothing in this module touches the closed forms of the kostant app: Kostant
membership is the definition w^{-1}(alpha) > 0, t and mu_w come from acting
on lambda + rho and restricting, self-duality is the coordinate test on the
GL block.

Usage:
    for w in enumerate_weyl(4):
        ...
    reps = brute_kostant(RankContext(4, 2))
    t = brute_t(w, lam, ctx)
"""

import logging
from functools import lru_cache
from itertools import permutations, product
from typing import Iterator

from django.conf import settings

from eisenstein_cohomology.kostant.representatives import HighestWeight
from eisenstein_cohomology.weyl.exceptions import InvalidRankError, ResourceGuardError
from eisenstein_cohomology.weyl.rootsys import (
    RankContext,
    SignedPermutation,
    Weight,
    act,
    in_levi_subsystem,
    is_kostant,
    positive_roots,
    restrict_a,
    restrict_a_rational,
    restrict_b,
    rho,
)
from eisenstein_cohomology.weyl.scalars import HalfInt

logger = logging.getLogger(__name__)

DEFAULT_CAP = 6
HARD_CAP = 7


def enumeration_cap(cap: int | None = None) -> int:
    """
    Resolve the largest rank enumerate_weyl accepts.

    An explicit cap wins over settings.WEYL_ENUMERATION_CAP; neither may pass
    the hard cap.
    """
    hard_cap = getattr(settings, "WEYL_ENUMERATION_HARD_CAP", HARD_CAP)
    requested = cap if cap is not None else getattr(settings, "WEYL_ENUMERATION_CAP", DEFAULT_CAP)
    if requested > hard_cap:
        logger.warning(f"Enumeration cap {requested} exceeds the hard cap {hard_cap}; using {hard_cap}")
        return hard_cap
    return requested


def enumerate_weyl(n: int, cap: int | None = None) -> Iterator[SignedPermutation]:
    """
    Every element of W(B_n) exactly once.

    Order: permutations in lexicographic order, and for each permutation the
    sign vectors in product((1, -1), repeat=n) order.

    Raises:
        ResourceGuardError: If n exceeds the enumeration cap
    """
    if n < 1:
        raise InvalidRankError(f"Rank must be at least 1, got n={n}")
    limit = enumeration_cap(cap)
    if n > limit:
        raise ResourceGuardError(f"Enumerating W(B_{n}) ({2 ** n} * {n}! elements) exceeds the cap n <= {limit}")
    for perm in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            yield SignedPermutation(perm, signs)


@lru_cache(maxsize=32)
def _brute_kostant(ctx: RankContext, cap: int) -> frozenset[SignedPermutation]:
    logger.info(f"Filtering W(B_{ctx.n}) for Kostant representatives of {ctx}")
    return frozenset(w for w in enumerate_weyl(ctx.n, cap) if is_kostant(w, ctx))


def brute_kostant(ctx: RankContext, cap: int | None = None) -> frozenset[SignedPermutation]:
    """{w in W : w^{-1}(alpha) > 0 for every Levi simple root alpha}."""
    return _brute_kostant(ctx, enumeration_cap(cap))


def _shifted(lam: HighestWeight, n: int) -> Weight:
    return lam.as_weight() + rho(n)


def brute_t(w: SignedPermutation, lam: HighestWeight, ctx: RankContext) -> HalfInt:
    """alpha_k-coefficient of -w(lambda + rho) on a_k."""
    return restrict_a(-act(w, _shifted(lam, ctx.n)), ctx)


def brute_mu(w: SignedPermutation, lam: HighestWeight, ctx: RankContext) -> Weight:
    """b_k-part of w(lambda + rho) - rho."""
    return restrict_b(act(w, _shifted(lam, ctx.n)) - rho(ctx.n), ctx)


def brute_a_part(w: SignedPermutation, lam: HighestWeight, ctx: RankContext) -> HalfInt:
    """alpha_k-coefficient of (w(lambda + rho) - rho) on a_k."""
    return HalfInt.from_fraction(restrict_a_rational(act(w, _shifted(lam, ctx.n)) - rho(ctx.n), ctx))


def brute_self_dual(mu: Weight, ctx: RankContext) -> bool:
    """mu_l = -mu_{k+1-l} on the GL block; the SO block is always self-dual."""
    return all(mu.coord(index) == -mu.coord(ctx.k + 1 - index) for index in range(1, ctx.k + 1))


def brute_scan(
    ctx: RankContext,
    lam: HighestWeight,
    t_target: HalfInt,
    cap: int | None = None,
) -> set[SignedPermutation]:
    """Representatives with self-dual mu_w and t = t_target, by definition only."""
    found = set()
    for w in brute_kostant(ctx, cap):
        if brute_t(w, lam, ctx) == t_target and brute_self_dual(brute_mu(w, lam, ctx), ctx):
            found.add(w)
    return found


def brute_levi_root_count(ctx: RankContext) -> int:
    """Number of positive roots inside the Levi subsystem of P_k."""
    return sum(1 for gamma in positive_roots(ctx.n) if in_levi_subsystem(gamma, ctx))
