"""
Formula-vs-oracle verification suite.

This module provides run_suite(), which executes every closed-form check
against the brute-force recomputation, and VerificationService, which runs
the suite and records the outcome as a VerificationRun.

Usage:
    report = run_suite(n_max=3, k_max=3, lambda_cap=1)
    assert report.passed

    # Persisted run (admin-visible audit trail)
    run = VerificationService().run(n_max=5, k_max=5, lambda_cap=2)

Work is split by rank: run_rank(n, ...) covers one n and reports merge
associatively, so ranks can be verified on separate workers.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import comb
from typing import Any

from django.conf import settings
from django.utils import timezone

from eisenstein_cohomology.kostant.classify import (
    family_half,
    family_one,
    ineq1_window,
    length_half_closed_form,
    one_family_length_window,
    verify_no_small_t,
)
from eisenstein_cohomology.kostant.degrees import (
    levi_cusp_range,
    levi_cusp_range_closed_form,
    residual_degree,
    residual_window,
    trivial_rep_lowest_degree,
)
from eisenstein_cohomology.kostant.representatives import (
    HighestWeight,
    KostantRep,
    a_part_coefficient,
    enumerate_kostant,
    eval_t,
    inverse_simple_images,
    is_self_dual,
    iter_dominant_weights,
    mu_w,
)
from eisenstein_cohomology.oracle.models import VerificationRun
from eisenstein_cohomology.oracle.services.enumeration import (
    brute_a_part,
    brute_kostant,
    brute_levi_root_count,
    brute_mu,
    brute_scan,
    brute_self_dual,
    brute_t,
    enumerate_weyl,
)
from eisenstein_cohomology.weyl.rootsys import (
    RankContext,
    SignedPermutation,
    Weight,
    act,
    dim_nilradical,
    embed_a,
    in_levi_subsystem,
    inv_length,
    is_kostant,
    is_negative_root,
    is_positive_root,
    longest_levi,
    positive_roots,
    restrict_a_rational,
    restrict_b,
    rho,
)
from eisenstein_cohomology.weyl.scalars import HalfInt

logger = logging.getLogger(__name__)

# inv_length(w) = inv_length(w^-1) is checked on the full group up to this rank
INVERSE_SYMMETRY_MAX_RANK = 5


@dataclass(frozen=True)
class SuiteFailure:
    check: str
    input: str
    expected: str
    got: str

    def to_dict(self) -> dict:
        return {"check": self.check, "input": self.input, "expected": self.expected, "got": self.got}


@dataclass
class SuiteReport:
    """
    Number of checks executed and every failing one.

    An empty failure list means the run passed.
    """

    checks_run: int = 0
    failures: list[SuiteFailure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, name: str, inputs: str, expected: Any, got: Any) -> bool:
        self.checks_run += 1
        if expected == got:
            return True
        failure = SuiteFailure(check=name, input=inputs, expected=str(expected), got=str(got))
        logger.warning(f"Check failed: {name} [{inputs}] expected={failure.expected} got={failure.got}")
        self.failures.append(failure)
        return False

    def merge(self, other: SuiteReport) -> SuiteReport:
        """Combine two reports; the result does not depend on the order of merging."""
        failures = sorted(self.failures + other.failures, key=lambda f: (f.check, f.input, f.expected, f.got))
        return SuiteReport(checks_run=self.checks_run + other.checks_run, failures=failures)

    def to_dict(self) -> dict:
        return {
            "checks_run": self.checks_run,
            "passed": self.passed,
            "failures": [failure.to_dict() for failure in self.failures],
        }

    @classmethod
    def from_dict(cls, data: dict) -> SuiteReport:
        return cls(
            checks_run=data.get("checks_run", 0),
            failures=[SuiteFailure(**item) for item in data.get("failures", [])],
        )


# ─────────────────────────────────────────────────────────────
# Check groups
# ─────────────────────────────────────────────────────────────

def _check_roots(report: SuiteReport, n: int) -> None:
    roots = positive_roots(n)
    report.check("rootsys.positive_root_count", f"n={n}", n * n, len(roots))
    report.check("rootsys.positive_roots_distinct", f"n={n}", n * n, len(set(roots)))
    half_sum = sum(roots, Weight.zero(n)).scale(HalfInt(1))
    report.check("rootsys.rho_half_sum", f"n={n}", half_sum, rho(n))


def _check_group(report: SuiteReport, n: int, contexts: list[RankContext], cap: int | None) -> None:
    identity = SignedPermutation.identity(n)
    parametrized = {ctx.k: {rep.w for rep in enumerate_kostant(ctx)} for ctx in contexts}
    for w in enumerate_weyl(n, cap):
        report.check("weyl.compose_inverse", f"w={w}", identity, w.compose(w.inverse()))
        if n <= INVERSE_SYMMETRY_MAX_RANK:
            report.check("weyl.inv_length_symmetry", f"w={w}", inv_length(w), inv_length(w.inverse()))
        for ctx in contexts:
            report.check("kostant.membership", f"{ctx} w={w}", is_kostant(w, ctx), w in parametrized[ctx.k])


def _check_context(report: SuiteReport, ctx: RankContext, reps: list[KostantRep], brute: frozenset) -> None:
    n, k, l = ctx.n, ctx.k, ctx.l  # noqa: E741
    label = str(ctx)

    report.check("rootsys.dim_nilradical", label, n * n - brute_levi_root_count(ctx), dim_nilradical(ctx))
    longest = longest_levi(ctx)
    report.check("rootsys.longest_levi_length", label, k * (k - 1) // 2 + l * l, inv_length(longest))
    levi_roots = [gamma for gamma in positive_roots(n) if in_levi_subsystem(gamma, ctx)]
    report.check(
        "rootsys.longest_levi_negates_levi_roots",
        label,
        True,
        all(is_negative_root(act(longest, gamma)) for gamma in levi_roots),
    )

    expected_size = 2 ** k * comb(n, k)
    report.check("kostant.brute_count", label, expected_size, len(brute))
    report.check("kostant.parametrized_count", label, expected_size, len({rep.w for rep in reps}))
    report.check("kostant.set_equality", label, brute, frozenset(rep.w for rep in reps))

    for rep in reps:
        inputs = f"{label} pair={rep.pair}"
        report.check("kostant.length_formula", inputs, inv_length(rep.w), rep.length)
        report.check("kostant.is_kostant", inputs, True, is_kostant(rep.w, ctx))
        w_inv = rep.w.inverse()
        for index, alpha in sorted(_levi_simple(ctx).items()):
            image = act(w_inv, alpha)
            report.check("kostant.simple_image_positive", f"{inputs} l={index}", True, is_positive_root(image))

    report.check("degrees.levi_closed_form", label, levi_cusp_range(ctx), levi_cusp_range_closed_form(ctx))
    total = (n * n + n) // 2
    if n >= 2:
        report.check("degrees.lower_bound_half", label, True, trivial_rep_lowest_degree(n) <= total - (k + 1) // 2)
    if n >= 3 and k % 2 == 0:
        report.check("degrees.lower_bound_one", label, True, trivial_rep_lowest_degree(n) <= total - k)


def _levi_simple(ctx: RankContext) -> dict[int, Weight]:
    """Levi simple roots written out by hand for the oracle."""
    roots = {}
    for index in range(1, ctx.n + 1):
        if index == ctx.k:
            continue
        if index == ctx.n:
            roots[index] = Weight.basis(ctx.n, ctx.n)
        else:
            roots[index] = Weight.basis(ctx.n, index) - Weight.basis(ctx.n, index + 1)
    return roots


def _check_simple_image_table(report: SuiteReport, ctx: RankContext, reps: list[KostantRep]) -> None:
    """The case table matches the direct image everywhere except the J/I junction."""
    for rep in reps:
        junction = rep.pair.size_j
        for index, image in inverse_simple_images(rep.pair).items():
            report.check(
                "kostant.simple_image_table",
                f"{ctx} pair={rep.pair} l={index}",
                index != junction,
                image.agrees,
            )


def _check_weight(
    report: SuiteReport,
    ctx: RankContext,
    lam: HighestWeight,
    reps: list[KostantRep],
    cap: int | None,
) -> None:
    label = f"{ctx} lambda={lam}"
    for rep in reps:
        inputs = f"{label} pair={rep.pair}"
        t = brute_t(rep.w, lam, ctx)
        mu = brute_mu(rep.w, lam, ctx)
        self_dual = brute_self_dual(mu, ctx)
        report.check("kostant.eval_t", inputs, t, eval_t(rep.pair, lam))
        report.check("kostant.mu_w", inputs, mu, mu_w(rep.pair, lam))
        report.check("kostant.a_part", inputs, brute_a_part(rep.w, lam, ctx), a_part_coefficient(rep.pair, lam))
        report.check("kostant.self_dual", inputs, self_dual, is_self_dual(mu_w(rep.pair, lam), ctx))
        shifted = act(rep.w, lam.as_weight() + rho(ctx.n))
        report.check(
            "rootsys.restriction_rebuilds",
            inputs,
            shifted,
            embed_a(restrict_a_rational(shifted, ctx), ctx) + restrict_b(shifted, ctx),
        )
        if self_dual and t.twice_value >= 0:
            report.check("kostant.size_reduction", inputs, True, rep.pair.size_i >= rep.pair.size_j)

    violations = [
        w
        for w in brute_kostant(ctx, cap)
        if 0 <= brute_t(w, lam, ctx).twice_value < ctx.k and brute_self_dual(brute_mu(w, lam, ctx), ctx)
    ]
    report.check("classify.no_small_t_brute", label, 0, len(violations))
    report.check("classify.no_small_t", label, True, verify_no_small_t(ctx, lam).passed)

    half_t = HalfInt(ctx.k)
    at_half = brute_scan(ctx, lam, half_t, cap)
    report.check("classify.family_half", label, at_half, {entry.rep.w for entry in family_half(ctx, lam)})
    for w in at_half:
        report.check("classify.half_length", f"{label} w={w}", length_half_closed_form(ctx), inv_length(w))
    _check_windows(report, ctx, half_t, at_half, label)

    if ctx.k % 2 == 0 and ctx.k < ctx.n:
        one_t = HalfInt.from_int(ctx.k)
        at_one = brute_scan(ctx, lam, one_t, cap)
        report.check("classify.family_one", label, at_one, {entry.rep.w for entry in family_one(ctx, lam)})
        lo, hi = ineq1_window(ctx)
        for w in at_one:
            report.check("classify.one_length_window", f"{label} w={w}", True, lo <= inv_length(w) <= hi)
        for entry in family_one(ctx, lam):
            for tag in entry.families:
                window = one_family_length_window(ctx, tag)
                if window is None:
                    continue
                report.check(
                    "classify.one_family_length",
                    f"{label} pair={entry.pair} family={tag}",
                    True,
                    window[0] <= inv_length(entry.rep.w) <= window[1],
                )
        _check_windows(report, ctx, one_t, at_one, label)


def _check_windows(report: SuiteReport, ctx: RankContext, t: HalfInt, found: set, label: str) -> None:
    """Compose Levi degrees + l(w) through q' = q + dim N - 2 l(w) and land in the window."""
    window = residual_window(ctx, t)
    levi = levi_cusp_range(ctx)
    for w in found:
        lw = inv_length(w)
        for q in range(levi.lo + lw, levi.hi + lw + 1):
            report.check(
                "degrees.window_consistency",
                f"{label} t={t} w={w} q={q}",
                True,
                residual_degree(q, ctx, lw) in window,
            )


# ─────────────────────────────────────────────────────────────
# Entry points
# ─────────────────────────────────────────────────────────────

def run_rank(n: int, k_max: int, lambda_cap: int, cap: int | None = None) -> SuiteReport:
    """All checks for a single rank n."""
    report = SuiteReport()
    contexts = [RankContext(n, k) for k in range(1, min(n, k_max) + 1)]
    logger.info(f"Verifying rank n={n}: k<={min(n, k_max)}, lambda entries<={lambda_cap}")

    _check_roots(report, n)
    _check_group(report, n, contexts, cap)
    weights = list(iter_dominant_weights(n, lambda_cap))
    for ctx in contexts:
        reps = enumerate_kostant(ctx)
        _check_context(report, ctx, reps, brute_kostant(ctx, cap))
        _check_simple_image_table(report, ctx, reps)
        for lam in weights:
            _check_weight(report, ctx, lam, reps, cap)

    logger.info(f"Rank n={n}: {report.checks_run} checks, {len(report.failures)} failures")
    return report


def run_suite(n_max: int, k_max: int, lambda_cap: int, cap: int | None = None) -> SuiteReport:
    """
    Execute every formula-vs-oracle check for 1 <= n <= n_max.

    Args:
        n_max: Largest rank (0 gives an empty, passing report)
        k_max: Largest parabolic index per rank
        lambda_cap: Largest highest-weight entry scanned
        cap: Optional override of the Weyl enumeration cap

    Returns:
        SuiteReport listing every failure
    """
    logger.info(f"Starting verification suite: n_max={n_max}, k_max={k_max}, lambda_cap={lambda_cap}")
    report = SuiteReport()
    for n in range(1, n_max + 1):
        report = report.merge(run_rank(n, k_max, lambda_cap, cap))
    logger.info(
        f"Verification suite complete: checks={report.checks_run}, failures={len(report.failures)}"
    )
    return report


def suite_defaults() -> dict[str, int]:
    defaults = {"n_max": 5, "k_max": 5, "lambda_cap": 2}
    defaults.update(getattr(settings, "VERIFICATION_SUITE_DEFAULTS", {}))
    return defaults


class VerificationService:
    """
    Runs the verification suite and records it as a VerificationRun.

    Example:
        service = VerificationService()
        run = service.run(n_max=3, k_max=3, lambda_cap=1)
        print(f"{run.checks_run} checks, {run.failure_count} failed")
    """

    def run(
        self,
        n_max: int | None = None,
        k_max: int | None = None,
        lambda_cap: int | None = None,
        cap: int | None = None,
    ) -> VerificationRun:
        """
        Execute run_suite and persist the outcome.

        Missing parameters fall back to settings.VERIFICATION_SUITE_DEFAULTS.
        An exception inside the suite is recorded on the run, not raised.
        """
        defaults = suite_defaults()
        n_max = defaults["n_max"] if n_max is None else n_max
        k_max = defaults["k_max"] if k_max is None else k_max
        lambda_cap = defaults["lambda_cap"] if lambda_cap is None else lambda_cap

        run = VerificationRun.objects.create(n_max=n_max, k_max=k_max, lambda_cap=lambda_cap)

        try:
            report = run_suite(n_max, k_max, lambda_cap, cap)
            run.checks_run = report.checks_run
            run.failure_count = len(report.failures)
            run.success = report.passed
            run.report = report.to_dict()
        except Exception as e:
            logger.error(f"Verification run {run.pk} failed: {e}", exc_info=True)
            run.success = False
            run.error_message = str(e)

        run.completed_at = timezone.now()
        run.save()
        return run
