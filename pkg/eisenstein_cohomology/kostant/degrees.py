"""
Cohomology degree arithmetic for cuspidal supports on the Levi L_k = GL_k x SO_{2l+1}.

All degrees are absolute (g, K)-cohomology degrees. Every formula written as
"(1/2)(...)" is halved exactly; an odd numerator is a ConstraintError rather
than a silent floor.
"""

from __future__ import annotations

from dataclasses import dataclass

from eisenstein_cohomology.weyl.exceptions import ConstraintError, InvalidRankError, PreconditionError
from eisenstein_cohomology.weyl.rootsys import RankContext, dim_nilradical
from eisenstein_cohomology.weyl.scalars import Rational, exact_half, format_rational, to_rational


@dataclass(frozen=True)
class DegreeRange:
    """Inclusive range lo..hi of cohomology degrees."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo < 0 or self.lo > self.hi:
            raise ConstraintError(f"Invalid degree range [{self.lo}, {self.hi}]")

    def shift(self, offset: int) -> DegreeRange:
        return DegreeRange(self.lo + offset, self.hi + offset)

    def __contains__(self, degree: int) -> bool:
        return self.lo <= degree <= self.hi

    def to_dict(self) -> dict:
        return {"lo": self.lo, "hi": self.hi}

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


def gl_cusp_range(k: int) -> DegreeRange:
    """
    Degrees of cuspidal cohomology of GL_k:

        (1/2)(k(k-1)/2 + [k/2])  <=  q  <=  (1/2)((k-1)(k+4)/2 - [k/2])
    """
    if k < 1:
        raise InvalidRankError(f"GL_k needs k >= 1, got k={k}")
    lo = exact_half(k * (k - 1) // 2 + k // 2, f"Lower GL_{k} bound")
    hi = exact_half((k - 1) * (k + 4) // 2 - k // 2, f"Upper GL_{k} bound")
    return DegreeRange(lo, hi)


def so_cusp_degree(l: int) -> int:  # noqa: E741
    """(l^2 + l)/2; l = 0 is the empty factor."""
    if l < 0:
        raise InvalidRankError(f"SO_(2l+1) needs l >= 0, got l={l}")
    return (l * l + l) // 2


def levi_cusp_range(ctx: RankContext) -> DegreeRange:
    """Kunneth sum of the GL_k range and the SO_{2l+1} degree."""
    return gl_cusp_range(ctx.k).shift(so_cusp_degree(ctx.l))


def levi_cusp_range_closed_form(ctx: RankContext) -> DegreeRange:
    k, l = ctx.k, ctx.l  # noqa: E741
    lo = exact_half(k * (k - 1) // 2 + k // 2 + l * l + l, "Lower Levi bound")
    hi = exact_half((k - 1) * (k + 4) // 2 - k // 2 + l * l + l, "Upper Levi bound")
    return DegreeRange(lo, hi)


def residual_degree(q: int, ctx: RankContext, lw: int) -> int:
    """q' = q + dim N_k - 2 l(w), with q already containing the l(w) shift."""
    if lw < 0:
        raise PreconditionError(f"Length must be nonnegative, got l(w)={lw}")
    if q < lw:
        raise PreconditionError(f"Degree q={q} must be at least l(w)={lw}")
    return q + dim_nilradical(ctx) - 2 * lw


def residual_window(ctx: RankContext, t: Rational) -> DegreeRange:
    """
    Window for the degree q' of a residual Eisenstein class.

    t = k/2 (and t = n/2 for k = n): [(n^2+n)/2 - ceil(k/2), (n^2+n)/2 - 1]
    t = k, k even and k < n:        [(n^2+n)/2 - k, (n^2+n)/2 - 1]
    """
    n, k = ctx.n, ctx.k
    value = to_rational(t)
    total = (n * n + n) // 2
    if value * 2 == k:
        return DegreeRange(total - (k + 1) // 2, total - 1)
    if value == k and k % 2 == 0 and k < n:
        return DegreeRange(total - k, total - 1)
    raise PreconditionError(f"No residual window for t={format_rational(value)} at {ctx}")


def regular_window(ctx: RankContext, lw: int) -> DegreeRange:
    """Levi range shifted by l(w)."""
    if lw < 0:
        raise PreconditionError(f"Length must be nonnegative, got l(w)={lw}")
    return levi_cusp_range(ctx).shift(lw)


def trivial_rep_lowest_degree(n: int) -> int:
    """Lowest degree carried by the trivial representation: n."""
    if n < 1:
        raise InvalidRankError(f"Rank must be at least 1, got n={n}")
    return n
