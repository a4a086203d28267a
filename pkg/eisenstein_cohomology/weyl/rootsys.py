"""
Type B_n root system primitives.

Weights are vectors over the basis eps_1, ..., eps_n. Indices are 1-based in
every public signature and in serialized output; the tuples underneath are
0-based and never exposed as such.

Positivity is the standard one for SO(2n+1):
    positive roots = {eps_i - eps_j, eps_i + eps_j : i < j} u {eps_i}
    simple roots   = alpha_i = eps_i - eps_{i+1} (i < n), alpha_n = eps_n
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from eisenstein_cohomology.weyl.exceptions import (
    ConstraintError,
    DimensionMismatchError,
    InvalidRankError,
)
from eisenstein_cohomology.weyl.scalars import HalfInt, Rational, is_half_integral, to_rational


# ─────────────────────────────────────────────────────────────
# Value types
# ─────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class RankContext:
    """
    Rank n of SO(2n+1) together with the index k of the maximal parabolic P_k.

    The Levi factor of P_k is GL_k x SO_{2l+1} with l = n - k.
    """

    n: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidRankError(f"Rank must be at least 1, got n={self.n}")
        if not 1 <= self.k <= self.n:
            raise InvalidRankError(f"Parabolic index must satisfy 1 <= k <= n, got k={self.k}, n={self.n}")

    @property
    def l(self) -> int:  # noqa: E743
        return self.n - self.k

    @property
    def is_siegel(self) -> bool:
        return self.k == self.n

    def __str__(self) -> str:
        return f"(n={self.n}, k={self.k})"


@dataclass(frozen=True)
class Weight:
    """
    A weight sum_i coords[i] eps_{i+1} with exact rational coordinates.
    """

    coords: tuple[Fraction, ...]

    @classmethod
    def of(cls, values: Iterable[Rational]) -> Weight:
        return cls(tuple(to_rational(value) for value in values))

    @classmethod
    def zero(cls, n: int) -> Weight:
        return cls((Fraction(0),) * n)

    @classmethod
    def basis(cls, n: int, i: int, sign: int = 1) -> Weight:
        """Return sign * eps_i in rank n (1-based i)."""
        if not 1 <= i <= n:
            raise DimensionMismatchError(f"eps_{i} does not exist in rank {n}")
        values = [Fraction(0)] * n
        values[i - 1] = Fraction(sign)
        return cls(tuple(values))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def coord(self, i: int) -> Fraction:
        """Coefficient of eps_i (1-based)."""
        return self.coords[i - 1]

    def _check_rank(self, other: Weight) -> None:
        if self.rank != other.rank:
            raise DimensionMismatchError(f"Weights of rank {self.rank} and {other.rank} cannot be combined")

    def __add__(self, other: Weight) -> Weight:
        self._check_rank(other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: Weight) -> Weight:
        self._check_rank(other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> Weight:
        return Weight(tuple(-a for a in self.coords))

    def scale(self, factor: Rational) -> Weight:
        factor = to_rational(factor)
        return Weight(tuple(factor * a for a in self.coords))

    def is_half_integral(self) -> bool:
        return all(is_half_integral(a) for a in self.coords)

    def as_halfints(self) -> tuple[HalfInt, ...]:
        return tuple(HalfInt.from_fraction(a) for a in self.coords)

    def __str__(self) -> str:
        from eisenstein_cohomology.weyl.scalars import format_rational

        return "(" + ", ".join(format_rational(a) for a in self.coords) + ")"


@dataclass(frozen=True)
class SignedPermutation:
    """
    An element of the hyperoctahedral group W(B_n).

    Maps eps_i to signs[i] * eps_{perm[i]} (1-based targets in perm).
    """

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.perm) != len(self.signs):
            raise DimensionMismatchError("perm and signs must have the same length")
        if sorted(self.perm) != list(range(1, len(self.perm) + 1)):
            raise ConstraintError(f"perm is not a permutation of 1..{len(self.perm)}: {self.perm}")
        if any(sign not in (1, -1) for sign in self.signs):
            raise ConstraintError(f"signs must be +1 or -1: {self.signs}")

    @classmethod
    def identity(cls, n: int) -> SignedPermutation:
        return cls(tuple(range(1, n + 1)), (1,) * n)

    @classmethod
    def from_images(cls, images: dict[int, tuple[int, int]]) -> SignedPermutation:
        """Build from {i: (sign, target)} meaning eps_i -> sign * eps_target."""
        n = len(images)
        perm = tuple(images[i][1] for i in range(1, n + 1))
        signs = tuple(images[i][0] for i in range(1, n + 1))
        return cls(perm, signs)

    @property
    def rank(self) -> int:
        return len(self.perm)

    def image(self, i: int) -> tuple[int, int]:
        """Return (sign, target) with eps_i -> sign * eps_target."""
        return self.signs[i - 1], self.perm[i - 1]

    def compose(self, other: SignedPermutation) -> SignedPermutation:
        """Return self o other (other acts first)."""
        if self.rank != other.rank:
            raise DimensionMismatchError(f"Cannot compose elements of rank {self.rank} and {other.rank}")
        perm = tuple(self.perm[p - 1] for p in other.perm)
        signs = tuple(s * self.signs[p - 1] for s, p in zip(other.signs, other.perm))
        return SignedPermutation(perm, signs)

    def inverse(self) -> SignedPermutation:
        perm = [0] * self.rank
        signs = [0] * self.rank
        for i, (target, sign) in enumerate(zip(self.perm, self.signs), start=1):
            perm[target - 1] = i
            signs[target - 1] = sign
        return SignedPermutation(tuple(perm), tuple(signs))

    def __str__(self) -> str:
        parts = []
        for i, (target, sign) in enumerate(zip(self.perm, self.signs), start=1):
            prefix = "-" if sign < 0 else ""
            parts.append(f"e{i}->{prefix}e{target}")
        return "[" + ", ".join(parts) + "]"


# ─────────────────────────────────────────────────────────────
# Roots
# ─────────────────────────────────────────────────────────────

def _check_rank(n: int) -> None:
    if n < 1:
        raise InvalidRankError(f"Rank must be at least 1, got n={n}")


@lru_cache(maxsize=None)
def _positive_roots(n: int) -> tuple[Weight, ...]:
    roots = []
    for i, j in combinations(range(1, n + 1), 2):
        roots.append(Weight.basis(n, i) - Weight.basis(n, j))
        roots.append(Weight.basis(n, i) + Weight.basis(n, j))
    roots.extend(Weight.basis(n, i) for i in range(1, n + 1))
    return tuple(roots)


@lru_cache(maxsize=None)
def _positive_root_set(n: int) -> frozenset[Weight]:
    return frozenset(_positive_roots(n))


def positive_roots(n: int) -> list[Weight]:
    """
    Return the n^2 positive roots of B_n.

    Order: for each i < j the pair eps_i - eps_j, eps_i + eps_j, then the
    short roots eps_1, ..., eps_n.
    """
    _check_rank(n)
    return list(_positive_roots(n))


def is_positive_root(beta: Weight) -> bool:
    return beta in _positive_root_set(beta.rank)


def is_negative_root(beta: Weight) -> bool:
    """A weight is a negative root iff its negation is a positive root."""
    return -beta in _positive_root_set(beta.rank)


def simple_root(n: int, index: int) -> Weight:
    """alpha_index = eps_index - eps_{index+1} for index < n, alpha_n = eps_n."""
    _check_rank(n)
    if not 1 <= index <= n:
        raise InvalidRankError(f"Simple root index must lie in 1..{n}, got {index}")
    if index == n:
        return Weight.basis(n, n)
    return Weight.basis(n, index) - Weight.basis(n, index + 1)


def rho(n: int) -> Weight:
    """Half the sum of positive roots: (n - 1/2, n - 3/2, ..., 1/2)."""
    _check_rank(n)
    return Weight(tuple(Fraction(2 * (n - i) + 1, 2) for i in range(1, n + 1)))


# ─────────────────────────────────────────────────────────────
# Group action and length
# ─────────────────────────────────────────────────────────────

def act(w: SignedPermutation, beta: Weight) -> Weight:
    """Apply w to beta: the eps_{perm[i]} coordinate of w(beta) is signs[i] * beta_i."""
    if w.rank != beta.rank:
        raise DimensionMismatchError(f"Element of rank {w.rank} cannot act on a weight of rank {beta.rank}")
    values = [Fraction(0)] * beta.rank
    for value, target, sign in zip(beta.coords, w.perm, w.signs):
        values[target - 1] = sign * value
    return Weight(tuple(values))


def inv_length(w: SignedPermutation, n: int | None = None) -> int:
    """Number of positive roots that w sends to negative roots."""
    if n is not None and n != w.rank:
        raise DimensionMismatchError(f"Element has rank {w.rank}, expected {n}")
    return sum(1 for gamma in _positive_roots(w.rank) if is_negative_root(act(w, gamma)))


# ─────────────────────────────────────────────────────────────
# Levi subsystem of P_k
# ─────────────────────────────────────────────────────────────

def levi_simple_roots(ctx: RankContext) -> dict[int, Weight]:
    """
    Simple roots of the Levi factor M_k, keyed by simple root index.

    These are alpha_l for every l != k: the GL_k roots alpha_1..alpha_{k-1}
    and, when l >= 1, the SO_{2l+1} roots alpha_{k+1}..alpha_n.
    """
    return {index: simple_root(ctx.n, index) for index in range(1, ctx.n + 1) if index != ctx.k}


def in_levi_subsystem(gamma: Weight, ctx: RankContext) -> bool:
    """True iff the root gamma belongs to the root system of L_k."""
    support = [i for i, value in enumerate(gamma.coords, start=1) if value != 0]
    if all(i <= ctx.k for i in support):
        return sum(gamma.coords) == 0
    return all(i > ctx.k for i in support)


def longest_levi(ctx: RankContext) -> SignedPermutation:
    """
    Longest element of the Weyl group of L_k = GL_k x SO_{2l+1}.

    Reverses eps_1..eps_k and negates eps_{k+1}..eps_n.
    """
    perm = tuple(ctx.k + 1 - i for i in range(1, ctx.k + 1)) + tuple(range(ctx.k + 1, ctx.n + 1))
    signs = (1,) * ctx.k + (-1,) * ctx.l
    return SignedPermutation(perm, signs)


def is_kostant(w: SignedPermutation, ctx: RankContext) -> bool:
    """True iff w^{-1}(alpha) > 0 for every simple root alpha of M_k."""
    if w.rank != ctx.n:
        raise DimensionMismatchError(f"Element has rank {w.rank}, context has n={ctx.n}")
    w_inv = w.inverse()
    return all(is_positive_root(act(w_inv, alpha)) for alpha in levi_simple_roots(ctx).values())


# ─────────────────────────────────────────────────────────────
# Restriction to a_k and b_k
# ─────────────────────────────────────────────────────────────

def _check_weight(beta: Weight, ctx: RankContext) -> None:
    if beta.rank != ctx.n:
        raise DimensionMismatchError(f"Weight has rank {beta.rank}, context has n={ctx.n}")


def restrict_a_rational(beta: Weight, ctx: RankContext) -> Fraction:
    _check_weight(beta, ctx)
    return sum(beta.coords[: ctx.k], Fraction(0))


def restrict_a(beta: Weight, ctx: RankContext) -> HalfInt:
    """
    Coefficient t with beta|_{a_k} = t * alpha_k|_{a_k}.

    Since alpha_k|_{a_k} = (1/k) sum_{i<=k} eps_i, t is the plain sum of the
    first k coordinates.
    """
    return HalfInt.from_fraction(restrict_a_rational(beta, ctx))


def restrict_b(beta: Weight, ctx: RankContext) -> Weight:
    """beta minus its a_k-part; the first k coordinates of the result sum to zero."""
    _check_weight(beta, ctx)
    mean = restrict_a_rational(beta, ctx) / ctx.k
    head = tuple(value - mean for value in beta.coords[: ctx.k])
    return Weight(head + beta.coords[ctx.k:])


def embed_a(t: Rational, ctx: RankContext) -> Weight:
    """The weight t * alpha_k|_{a_k}, i.e. t/k on each of the first k coordinates."""
    share = to_rational(t) / ctx.k
    return Weight((share,) * ctx.k + (Fraction(0),) * ctx.l)


def rho_parabolic(ctx: RankContext) -> HalfInt:
    """rho_{P_k} = (k(2n-k)/2) alpha_k|_{a_k}; returns the coefficient."""
    return HalfInt(ctx.k * (2 * ctx.n - ctx.k))


def dim_nilradical(ctx: RankContext) -> int:
    """dim N_k = k(2n-k) - k(k-1)/2."""
    return ctx.k * (2 * ctx.n - ctx.k) - ctx.k * (ctx.k - 1) // 2
