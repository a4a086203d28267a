"""
Management command exposing the degree arithmetic.

Usage:
    python manage.py degrees --op gl --k 3
    python manage.py degrees --op so --l 2
    python manage.py degrees --op levi --n 5 --k 3
    python manage.py degrees --op residual-degree --n 3 --k 1 --q 6 --lw 3
    python manage.py degrees --op residual-window --n 3 --k 1 --t 1/2
    python manage.py degrees --op regular-window --n 3 --k 1 --lw 3
"""

from typing import Any

from django.core.management.base import CommandParser

from eisenstein_cohomology.kostant import degrees
from eisenstein_cohomology.utils.commands import CommandResult, FormattedCommand
from eisenstein_cohomology.weyl.rootsys import RankContext
from eisenstein_cohomology.weyl.scalars import HalfInt

OPERATIONS = ["gl", "so", "levi", "residual-degree", "residual-window", "regular-window"]

# Inputs each operation needs, in display order
REQUIRED = {
    "gl": ["k"],
    "so": ["l"],
    "levi": ["n", "k"],
    "residual-degree": ["n", "k", "q", "lw"],
    "residual-window": ["n", "k", "t"],
    "regular-window": ["n", "k", "lw"],
}


class Command(FormattedCommand):
    help = "Cohomology degree ranges, residual degrees and verdict windows"
    csv_columns = ["op", "n", "k", "l", "q", "lw", "t", "lo", "hi", "degree"]

    def add_command_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("--op", choices=OPERATIONS, required=True, help="Degree operation to evaluate")
        parser.add_argument("--n", type=int, help="Rank n")
        parser.add_argument("--k", type=int, help="Parabolic index k / GL_k size")
        parser.add_argument("--l", type=int, help="SO_(2l+1) rank l (op so)")
        parser.add_argument("--q", type=int, help="Degree q including the l(w) shift (op residual-degree)")
        parser.add_argument("--lw", type=int, help="Length l(w) of the Kostant representative")
        parser.add_argument("--t", type=str, help='Evaluation point t, e.g. "1/2" (op residual-window)')

    def build(self, **options: Any) -> CommandResult:
        op = options["op"]
        missing = [name for name in REQUIRED[op] if options.get(name) is None]
        if missing:
            raise self.usage_error(f"--op {op} requires " + ", ".join(f"--{name}" for name in missing))

        inputs = {name: options[name] for name in REQUIRED[op]}
        result: dict[str, Any]
        if op == "gl":
            result = degrees.gl_cusp_range(options["k"]).to_dict()
        elif op == "so":
            result = {"degree": degrees.so_cusp_degree(options["l"])}
        else:
            ctx = RankContext(options["n"], options["k"])
            if op == "levi":
                result = degrees.levi_cusp_range(ctx).to_dict()
            elif op == "residual-degree":
                result = {"degree": degrees.residual_degree(options["q"], ctx, options["lw"])}
            elif op == "residual-window":
                t = HalfInt.parse(options["t"])
                inputs["t"] = str(t)
                result = degrees.residual_window(ctx, t).to_dict()
            else:
                result = degrees.regular_window(ctx, options["lw"]).to_dict()

        return CommandResult(
            payload={"op": op, "inputs": inputs, "result": result},
            rows=[{"op": op, **inputs, **result}],
        )
