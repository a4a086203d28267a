"""
Verdict assembly: residual class, regular class or no class.

Given the analytic flags of a cuspidal datum, a highest weight and a Kostant
pair, decide which kind of Eisenstein class the pair can carry and in which
degree window it lives.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from django.conf import settings
from django.db import models

from eisenstein_cohomology.kostant.degrees import DegreeRange, regular_window, residual_window
from eisenstein_cohomology.kostant.representatives import (
    HighestWeight,
    KostantPair,
    eval_t,
    is_self_dual,
    length_formula,
    mu_w,
)
from eisenstein_cohomology.spectral.poles import POLE_CONDITIONS, CuspidalDatum, poles_in_region, s_of_t
from eisenstein_cohomology.weyl.exceptions import ConstraintError
from eisenstein_cohomology.weyl.scalars import HalfInt, format_rational

logger = logging.getLogger(__name__)


class VerdictKind(models.TextChoices):
    RESIDUAL = "Residual", "Residual Eisenstein class"
    REGULAR = "Regular", "Regular Eisenstein class"
    NO_CLASS = "NoClass", "No class"


@dataclass(frozen=True)
class Verdict:
    kind: str
    t: HalfInt | None = None
    window: DegreeRange | None = None
    notes: list[str] = field(default_factory=list)


def verdict(d: CuspidalDatum, lam: HighestWeight, pair: KostantPair, local_kernel: bool = False) -> Verdict:
    """
    Classify the Eisenstein class attached to (d, lambda, w_(I,J)).

    NoClass when mu_w is not self-dual or t < 0. Residual when t is a pole
    point, the matching pole condition holds and no local kernel vector
    evades it. Regular otherwise, with the Levi window shifted by l(w).
    """
    ctx = d.ctx
    if pair.ctx != ctx:
        raise ConstraintError(f"Pair lives in {pair.ctx} but the datum lives in {ctx}")
    min_rank = getattr(settings, "POLE_RESULTS_MIN_RANK", 3)
    if ctx.n < min_rank:
        logger.warning(f"Verdict requested for n={ctx.n}; the pole and degree results assume n >= {min_rank}")

    t = eval_t(pair, lam)
    self_dual = is_self_dual(mu_w(pair, lam), ctx)
    notes = [f"t={t}", f"s={format_rational(s_of_t(t, ctx))}", f"mu_self_dual={str(self_dual).lower()}"]

    if not self_dual or t.twice_value < 0:
        notes.append("no self-dual coefficient module at t >= 0")
        return Verdict(kind=VerdictKind.NO_CLASS, notes=notes)

    pole = False
    for point in poles_in_region(ctx):
        if point.t == t:
            pole = POLE_CONDITIONS[point.condition](d)
            notes.append(f"{point.condition}={str(pole).lower()}")
            break
    else:
        notes.append("t is not a pole point")

    if pole and not local_kernel:
        return Verdict(kind=VerdictKind.RESIDUAL, t=t, window=residual_window(ctx, t), notes=notes)

    if pole:
        notes.append("pole evaded by a local kernel vector")
    return Verdict(kind=VerdictKind.REGULAR, window=regular_window(ctx, length_formula(pair)), notes=notes)
