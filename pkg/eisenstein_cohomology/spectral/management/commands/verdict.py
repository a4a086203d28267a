"""
Management command to classify one Eisenstein class.

Usage:
    python manage.py verdict --n 3 --k 1 --lambda 0,0,0 --I 3 --J "" \
        --sigma-self-dual --no-omega-trivial --L-half-nonzero --no-rs-pole-at-one
    python manage.py verdict --n 3 --k 3 --lambda 0,0,0 --I 1,2,3 --J "" \
        --sigma-self-dual --omega-trivial --local-kernel
"""

import argparse
from typing import Any

from django.core.management.base import CommandParser

from eisenstein_cohomology.kostant.representatives import KostantPair
from eisenstein_cohomology.spectral.poles import pole_report
from eisenstein_cohomology.spectral.schemas import CuspidalDatumSchema, VerdictSchema
from eisenstein_cohomology.spectral.verdicts import verdict
from eisenstein_cohomology.utils.commands import CommandResult, FormattedCommand, parse_index_set


class Command(FormattedCommand):
    help = "Decide Residual / Regular / NoClass for a cuspidal datum and a Kostant pair"
    csv_columns = ["kind", "t", "lo", "hi", "notes"]

    def add_command_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("--n", type=int, required=True, help="Rank n of SO(2n+1)")
        parser.add_argument("--k", type=int, required=True, help="Parabolic index k (1 <= k <= n)")
        parser.add_argument("--lambda", dest="lam", type=str, help="Dominant highest weight as a comma list")
        parser.add_argument("--I", dest="I", type=str, default="", help="Comma list I (may be empty)")
        parser.add_argument("--J", dest="J", type=str, default="", help="Comma list J (may be empty)")
        parser.add_argument(
            "--sigma-self-dual",
            action=argparse.BooleanOptionalAction,
            default=False,
            help="sigma is self-dual",
        )
        parser.add_argument(
            "--omega-trivial",
            action=argparse.BooleanOptionalAction,
            default=False,
            help="The central character of sigma is trivial",
        )
        parser.add_argument(
            "--L-half-nonzero",
            dest="L_half_nonzero",
            action=argparse.BooleanOptionalAction,
            default=None,
            help="L(1/2, sigma x tau) != 0 (required for k < n, forbidden for k = n)",
        )
        parser.add_argument(
            "--rs-pole-at-one",
            dest="rs_pole_at_one",
            action=argparse.BooleanOptionalAction,
            default=None,
            help="L(s, sigma x tau) has a pole at s = 1 (required for k < n, forbidden for k = n)",
        )
        parser.add_argument(
            "--lift-from-so-k",
            action=argparse.BooleanOptionalAction,
            default=False,
            help="sigma is a weak functorial lift from SO_k",
        )
        parser.add_argument(
            "--local-kernel",
            action="store_true",
            help="Some local component lies in the kernel of the normalized intertwining operator",
        )

    def build(self, **options: Any) -> CommandResult:
        ctx = self.parse_context(options)
        lam = self.parse_lambda(options, ctx)
        tau_flags = {"--L-half-nonzero": options["L_half_nonzero"], "--rs-pole-at-one": options["rs_pole_at_one"]}
        if ctx.is_siegel:
            given = [flag for flag, value in tau_flags.items() if value is not None]
            if given:
                raise self.usage_error(f"k = n has no tau; remove {', '.join(given)}")
        else:
            missing = [flag for flag, value in tau_flags.items() if value is None]
            if missing:
                raise self.usage_error(f"k < n requires {', '.join(missing)} (or the --no- form)")

        datum_schema = CuspidalDatumSchema(
            n=ctx.n,
            k=ctx.k,
            sigma_self_dual=options["sigma_self_dual"],
            omega_sigma_trivial=options["omega_trivial"],
            L_half_nonzero=options["L_half_nonzero"],
            rs_pole_at_one=options["rs_pole_at_one"],
            lift_from_so_k=options["lift_from_so_k"],
        )
        datum = datum_schema.to_datum()
        pair = KostantPair.of(ctx, parse_index_set(options["I"]), parse_index_set(options["J"]))
        result = verdict(datum, lam, pair, local_kernel=options["local_kernel"])

        payload = VerdictSchema.from_verdict(result).as_dict()
        payload["datum"] = datum_schema.model_dump()
        payload["poles"] = pole_report(datum).to_dict()
        window = result.window
        row = {
            "kind": str(result.kind),
            "t": result.t,
            "lo": window.lo if window else None,
            "hi": window.hi if window else None,
            "notes": result.notes,
        }
        return CommandResult(payload=payload, rows=[row])
