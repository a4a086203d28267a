"""
Pole conditions for Eisenstein series attached to P_k.

No L-function is evaluated here. The analytic facts about the cuspidal
datum (sigma on GL_k, tau on SO_{2l+1}) are booleans supplied by the caller,
and the functions below encode which combinations produce a pole.

The evaluation point Lambda = t alpha_k corresponds to

    s = t / k     for k < n
    s = 2t / n    for k = n (Siegel parabolic)

For t >= k/2 the only candidate poles are s = 1/2 and s = 1 when k < n, and
s = 1 (t = n/2) for the Siegel parabolic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from eisenstein_cohomology.weyl.exceptions import ConstraintError, PreconditionError
from eisenstein_cohomology.weyl.rootsys import RankContext
from eisenstein_cohomology.weyl.scalars import HalfInt, Rational, to_rational


@dataclass(frozen=True)
class CuspidalDatum:
    """
    Analytic flags for a cuspidal datum on L_k.

    Attributes:
        ctx: Rank context (n, k)
        sigma_self_dual: sigma is self-dual
        omega_sigma_trivial: the central character of sigma is trivial
        L_half_nonzero: L(1/2, sigma x tau) != 0; None when k = n
        rs_pole_at_one: L(s, sigma x tau) has a pole at s = 1; None when k = n
        lift_from_so_k: sigma is a weak functorial lift from SO_k
    """

    ctx: RankContext
    sigma_self_dual: bool
    omega_sigma_trivial: bool
    L_half_nonzero: bool | None = None
    rs_pole_at_one: bool | None = None
    lift_from_so_k: bool = False

    def __post_init__(self) -> None:
        tau_flags = (self.L_half_nonzero, self.rs_pole_at_one)
        if self.ctx.is_siegel:
            if any(flag is not None for flag in tau_flags):
                raise ConstraintError(
                    "The Siegel parabolic (k = n) has no tau: L_half_nonzero and rs_pole_at_one must be absent"
                )
        elif any(flag is None for flag in tau_flags):
            raise ConstraintError("For k < n both L_half_nonzero and rs_pole_at_one are required")

    def to_dict(self) -> dict:
        return {
            "n": self.ctx.n,
            "k": self.ctx.k,
            "sigma_self_dual": self.sigma_self_dual,
            "omega_sigma_trivial": self.omega_sigma_trivial,
            "L_half_nonzero": self.L_half_nonzero,
            "rs_pole_at_one": self.rs_pole_at_one,
            "lift_from_so_k": self.lift_from_so_k,
        }


@dataclass(frozen=True)
class PoleReport:
    pole_at_half: bool | None = None
    pole_at_one: bool | None = None
    pole_siegel: bool | None = None

    def to_dict(self) -> dict:
        return {key: value for key, value in vars(self).items() if value is not None}


@dataclass(frozen=True)
class PolePoint:
    s: Fraction
    t: HalfInt
    condition: str


def s_of_t(t: Rational, ctx: RankContext) -> Fraction:
    value = to_rational(t)
    if ctx.is_siegel:
        return 2 * value / ctx.n
    return value / ctx.k


def _require_non_siegel(d: CuspidalDatum, what: str) -> None:
    if d.ctx.is_siegel:
        raise PreconditionError(f"{what} applies to k < n, got {d.ctx}; use pole_siegel")


def pole_at_half(d: CuspidalDatum) -> bool:
    """
    Pole at s = 1/2 (k < n).

    k odd or omega nontrivial: sigma self-dual and L(1/2, sigma x tau) != 0.
    k even and omega trivial: additionally k >= 4 and sigma lifts from SO_k;
    for k = 2 the series is holomorphic at s = 1/2.
    """
    _require_non_siegel(d, "pole_at_half")
    if d.ctx.k % 2 or not d.omega_sigma_trivial:
        return d.sigma_self_dual and bool(d.L_half_nonzero)
    return d.ctx.k >= 4 and d.sigma_self_dual and d.lift_from_so_k and bool(d.L_half_nonzero)


def pole_at_one(d: CuspidalDatum) -> bool:
    """Pole at s = 1 (k < n): sigma self-dual, k even and L(s, sigma x tau) has a pole at 1."""
    _require_non_siegel(d, "pole_at_one")
    return d.sigma_self_dual and d.ctx.k % 2 == 0 and bool(d.rs_pole_at_one)


def pole_siegel(d: CuspidalDatum) -> bool:
    """Pole at s = 1 for k = n."""
    if not d.ctx.is_siegel:
        raise PreconditionError(f"pole_siegel applies to k = n, got {d.ctx}")
    if d.ctx.n % 2 == 0 and d.omega_sigma_trivial:
        return d.ctx.n >= 4 and d.sigma_self_dual and d.lift_from_so_k
    return d.sigma_self_dual


def pole_report(d: CuspidalDatum) -> PoleReport:
    if d.ctx.is_siegel:
        return PoleReport(pole_siegel=pole_siegel(d))
    return PoleReport(pole_at_half=pole_at_half(d), pole_at_one=pole_at_one(d))


def poles_in_region(ctx: RankContext) -> list[PolePoint]:
    """Candidate pole points with t >= k/2, in increasing t."""
    if ctx.is_siegel:
        return [PolePoint(s=Fraction(1), t=HalfInt(ctx.n), condition="pole_siegel")]
    return [
        PolePoint(s=Fraction(1, 2), t=HalfInt(ctx.k), condition="pole_at_half"),
        PolePoint(s=Fraction(1), t=HalfInt.from_int(ctx.k), condition="pole_at_one"),
    ]


POLE_CONDITIONS = {
    "pole_at_half": pole_at_half,
    "pole_at_one": pole_at_one,
    "pole_siegel": pole_siegel,
}
