"""
Kostant representatives of the maximal parabolic P_k of SO(2n+1).

Every element of W^{P_k} is named by an ordered pair (I, J) of disjoint
subsets of {1..n} with |I| + |J| = k. Writing I = {i_1 < ... < i_a},
J = {j_1 < ... < j_b} and R = {1..n} minus (I u J) = {r_1 < ... }, the
representative w_(I,J) is

    eps_{i_l} -> -eps_{k+1-l}
    eps_{j_l} ->  eps_l
    eps_{r_l} ->  eps_{k+l}

This module holds the closed forms attached to w_(I,J): its length, the
evaluation point t, the restricted highest weight mu_w and the images of the
Levi simple roots under w^{-1}. Nothing here enumerates the Weyl group; the
oracle app recomputes all of it from the definitions.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Iterator

from eisenstein_cohomology.weyl.exceptions import ConstraintError, DimensionMismatchError
from eisenstein_cohomology.weyl.rootsys import (
    RankContext,
    SignedPermutation,
    Weight,
    act,
    is_positive_root,
    levi_simple_roots,
    longest_levi,
)
from eisenstein_cohomology.weyl.scalars import HalfInt

logger = logging.getLogger(__name__)


# ─────────────────────────────────────────────────────────────
# Value types
# ─────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class KostantPair:
    """
    An ordered pair (I, J) of disjoint, sorted index sets with |I| + |J| = k.

    Use KostantPair.of() to build from unsorted input; the constructor
    expects strictly increasing tuples and rejects anything else.
    """

    ctx: RankContext
    I: tuple[int, ...]  # noqa: E741
    J: tuple[int, ...]

    def __post_init__(self) -> None:
        n, k = self.ctx.n, self.ctx.k
        for name, block in (("I", self.I), ("J", self.J)):
            if any(not 1 <= index <= n for index in block):
                raise ConstraintError(f"{name}={list(block)} has entries outside 1..{n}")
            if any(a >= b for a, b in zip(block, block[1:])):
                raise ConstraintError(f"{name}={list(block)} must be strictly increasing")
        if set(self.I) & set(self.J):
            raise ConstraintError(f"I={list(self.I)} and J={list(self.J)} must be disjoint")
        if len(self.I) + len(self.J) != k:
            raise ConstraintError(f"|I| + |J| must equal k={k}, got {len(self.I)} + {len(self.J)}")

    @classmethod
    def of(cls, ctx: RankContext, I: Iterable[int], J: Iterable[int]) -> KostantPair:  # noqa: E741
        I, J = list(I), list(J)  # noqa: E741
        for name, block in (("I", I), ("J", J)):
            if len(set(block)) != len(block):
                raise ConstraintError(f"{name}={block} has repeated entries")
        return cls(ctx, tuple(sorted(I)), tuple(sorted(J)))

    @property
    def size_i(self) -> int:
        return len(self.I)

    @property
    def size_j(self) -> int:
        return len(self.J)

    @property
    def R(self) -> tuple[int, ...]:
        used = set(self.I) | set(self.J)
        return tuple(index for index in range(1, self.ctx.n + 1) if index not in used)

    def sort_key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return self.I, self.J

    def __str__(self) -> str:
        return f"(I={{{', '.join(map(str, self.I))}}}, J={{{', '.join(map(str, self.J))}}})"


@dataclass(frozen=True)
class HighestWeight:
    """
    Dominant integral highest weight lambda_1 >= ... >= lambda_n >= 0.

    Spin (half-integral) weights are rejected.
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.values:
            raise ConstraintError("Highest weight must have at least one entry")
        for value in self.values:
            if isinstance(value, bool) or not isinstance(value, int):
                raise ConstraintError(f"Highest weight entries must be integers, got {value!r}")
        if any(value < 0 for value in self.values):
            raise ConstraintError(f"Highest weight entries must be nonnegative: {list(self.values)}")
        if any(a < b for a, b in zip(self.values, self.values[1:])):
            raise ConstraintError(f"Highest weight is not dominant (must be weakly decreasing): {list(self.values)}")

    @classmethod
    def of(cls, values: Iterable[int | Fraction | str]) -> HighestWeight:
        parsed = []
        for raw in values:
            try:
                value = Fraction(raw.strip()) if isinstance(raw, str) else Fraction(raw)
            except (ValueError, TypeError, ZeroDivisionError) as e:
                raise ConstraintError(f"Malformed highest weight entry {raw!r}") from e
            if value.denominator != 1:
                raise ConstraintError(
                    f"Highest weight entries must be integers (spin weights are not supported), got {value}"
                )
            parsed.append(int(value))
        return cls(tuple(parsed))

    @classmethod
    def parse(cls, literal: str) -> HighestWeight:
        """Parse a comma list such as "2,1,0"."""
        return cls.of(part for part in literal.split(",") if part.strip() != "")

    @classmethod
    def zero(cls, n: int) -> HighestWeight:
        return cls((0,) * n)

    @property
    def rank(self) -> int:
        return len(self.values)

    def coord(self, i: int) -> int:
        """lambda_i (1-based)."""
        return self.values[i - 1]

    def as_weight(self) -> Weight:
        return Weight.of(self.values)

    def check_rank(self, ctx: RankContext) -> None:
        if self.rank != ctx.n:
            raise DimensionMismatchError(f"Highest weight has {self.rank} entries, context has n={ctx.n}")

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.values)) + ")"


def iter_dominant_weights(n: int, cap: int) -> Iterator[HighestWeight]:
    """All dominant weights of rank n with entries in 0..cap, in a fixed order."""
    for values in combinations_with_replacement(range(cap, -1, -1), n):
        yield HighestWeight(tuple(values))


@dataclass(frozen=True)
class SimpleRootImage:
    """w^{-1}(alpha_index) computed directly, next to the case-table value."""

    index: int
    direct: Weight
    printed: Weight
    agrees: bool


@dataclass(frozen=True)
class KostantRep:
    pair: KostantPair
    w: SignedPermutation = field(compare=False)
    length: int = field(compare=False)

    @classmethod
    def from_pair(cls, pair: KostantPair) -> KostantRep:
        return cls(pair=pair, w=to_signed_perm(pair), length=length_formula(pair))

    @property
    def ctx(self) -> RankContext:
        return self.pair.ctx


# ─────────────────────────────────────────────────────────────
# Parametrization
# ─────────────────────────────────────────────────────────────

def to_signed_perm(pair: KostantPair) -> SignedPermutation:
    k = pair.ctx.k
    images: dict[int, tuple[int, int]] = {}
    for position, i in enumerate(pair.I, start=1):
        images[i] = (-1, k + 1 - position)
    for position, j in enumerate(pair.J, start=1):
        images[j] = (1, position)
    for position, r in enumerate(pair.R, start=1):
        images[r] = (1, k + position)
    return SignedPermutation.from_images(images)


@lru_cache(maxsize=None)
def _kostant_reps(ctx: RankContext) -> tuple[KostantRep, ...]:
    n, k = ctx.n, ctx.k
    reps = []
    for size_i in range(k + 1):
        for I in combinations(range(1, n + 1), size_i):  # noqa: E741
            rest = [index for index in range(1, n + 1) if index not in I]
            for J in combinations(rest, k - size_i):
                reps.append(KostantRep.from_pair(KostantPair(ctx, I, J)))
    reps.sort(key=lambda rep: rep.pair.sort_key())
    logger.debug(f"Built {len(reps)} Kostant representatives for {ctx}")
    return tuple(reps)


def enumerate_kostant(ctx: RankContext) -> list[KostantRep]:
    """
    All 2^k * C(n, k) representatives of W^{P_k}, ordered by (I, J).
    """
    return list(_kostant_reps(ctx))


def length_formula(pair: KostantPair) -> int:
    """
    Closed-form length of w_(I,J).

        sum_I (2n - k - i + 1) + sum_l (j_l - l) - sum_{l > m} #{i in I : i < j_l}

    where m is the largest l with j_l < min(I) (0 if none, and |J| when I is
    empty).
    """
    n, k = pair.ctx.n, pair.ctx.k
    length = sum(2 * n - k - i + 1 for i in pair.I)
    length += sum(j - position for position, j in enumerate(pair.J, start=1))
    if not pair.I:
        return length
    first_i = pair.I[0]
    m = max((position for position, j in enumerate(pair.J, start=1) if j < first_i), default=0)
    for j in pair.J[m:]:
        length -= sum(1 for i in pair.I if i < j)
    return length


# ─────────────────────────────────────────────────────────────
# Evaluation point and restricted highest weight
# ─────────────────────────────────────────────────────────────

def _check(pair: KostantPair, lam: HighestWeight) -> None:
    lam.check_rank(pair.ctx)


def eval_t(pair: KostantPair, lam: HighestWeight) -> HalfInt:
    """
    The alpha_k-coefficient t of -w(lambda + rho) restricted to a_k.

        t = sum_I (lambda_i - i) - sum_J (lambda_j - j) + (|I| - |J|)(n + 1/2)
    """
    _check(pair, lam)
    n = pair.ctx.n
    doubled = 2 * sum(lam.coord(i) - i for i in pair.I)
    doubled -= 2 * sum(lam.coord(j) - j for j in pair.J)
    doubled += (pair.size_i - pair.size_j) * (2 * n + 1)
    return HalfInt(doubled)


def mu_w(pair: KostantPair, lam: HighestWeight) -> Weight:
    """
    Highest weight of the coefficient module on M_k attached to w_(I,J).

    Blocks by position: the |J| entries coming from J, then the |I| entries
    coming from I in reverse order, then the SO_{2l+1} block coming from R.
    """
    _check(pair, lam)
    n, k = pair.ctx.n, pair.ctx.k
    t = eval_t(pair, lam).to_fraction()
    shift = t / k + n - Fraction(k, 2)
    size_i, size_j = pair.size_i, pair.size_j

    coords: list[Fraction] = []
    for position, j in enumerate(pair.J, start=1):
        coords.append(lam.coord(j) - j + position + shift)
    for position in range(1, size_i + 1):
        i = pair.I[size_i - position]
        coords.append(-(lam.coord(i) - i - size_j - position + n + 1 - t / k + Fraction(k, 2)))
    for position, r in enumerate(pair.R, start=1):
        coords.append(Fraction(lam.coord(r) - r + k + position))
    return Weight(tuple(coords))


def a_part_coefficient(pair: KostantPair, lam: HighestWeight) -> HalfInt:
    """alpha_k-coefficient of (w(lambda + rho) - rho)|_{a_k}, i.e. -(t/k + n - k/2) * k."""
    n, k = pair.ctx.n, pair.ctx.k
    t = eval_t(pair, lam).to_fraction()
    return HalfInt.from_fraction(-(t / k + n - Fraction(k, 2)) * k)


def is_self_dual(mu: Weight, ctx: RankContext) -> bool:
    """True iff -w_{L_k}(mu) = mu."""
    if mu.rank != ctx.n:
        raise DimensionMismatchError(f"Weight has rank {mu.rank}, context has n={ctx.n}")
    return -act(longest_levi(ctx), mu) == mu


# ─────────────────────────────────────────────────────────────
# Images of Levi simple roots
# ─────────────────────────────────────────────────────────────

def _eps(n: int, i: int) -> Weight:
    return Weight.basis(n, i)


def _printed_image(pair: KostantPair, index: int) -> Weight:
    n, k = pair.ctx.n, pair.ctx.k
    I, J, R = pair.I, pair.J, pair.R  # noqa: E741
    b = pair.size_j
    if index < b:
        return _eps(n, J[index - 1]) - _eps(n, J[index])
    if index == b:
        # As printed; the true image is eps_{j_b} + eps_{i_a}.
        return _eps(n, J[b - 1]) - _eps(n, I[-1])
    if index < k:
        return _eps(n, I[k - index - 1]) - _eps(n, I[k - index])
    if index < n:
        return _eps(n, R[index - k - 1]) - _eps(n, R[index - k])
    return _eps(n, R[n - k - 1])


def inverse_simple_images(pair: KostantPair) -> dict[int, SimpleRootImage]:
    """
    w^{-1}(alpha_l) for every Levi simple root index l != k.

    The direct value comes from acting with w^{-1}; the printed value follows
    the five-row case table (J-chain, the J/I junction, I-chain, R-chain and
    the short root). At the junction l = |J| the table carries a sign slip:
    it lists eps_{j_b} - eps_{i_a}, which is negative, while w^{-1} actually
    sends alpha_l to eps_{j_b} + eps_{i_a}. Such rows come back with
    agrees=False.
    """
    w_inv = to_signed_perm(pair).inverse()
    images = {}
    for index, alpha in levi_simple_roots(pair.ctx).items():
        direct = act(w_inv, alpha)
        printed = _printed_image(pair, index)
        if not is_positive_root(direct):
            logger.error(f"w^-1(alpha_{index}) = {direct} is not positive for {pair}")
        images[index] = SimpleRootImage(index=index, direct=direct, printed=printed, agrees=direct == printed)
    return images
