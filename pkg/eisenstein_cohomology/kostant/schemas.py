"""
Pydantic schemas for Kostant data on the wire.

These schemas define the JSON shape of:
- Kostant representatives ({"I", "J", "n", "k", "length", "perm", "signs"})
- Classified rows emitted by the table and classify commands
- Degree ranges ({"lo", "hi"})
"""

from pydantic import BaseModel, Field

from eisenstein_cohomology.kostant.classify import ClassifiedRep
from eisenstein_cohomology.kostant.degrees import DegreeRange
from eisenstein_cohomology.kostant.representatives import KostantPair, KostantRep
from eisenstein_cohomology.utils.rendering import twice_cell
from eisenstein_cohomology.weyl.rootsys import RankContext, SignedPermutation, Weight
from eisenstein_cohomology.weyl.scalars import HalfInt
from eisenstein_cohomology.weyl.schemas import ScalarSchema


class KostantRepSchema(BaseModel):
    I: list[int] = Field(..., description="Indices sent to negative GL-block vectors, ascending")  # noqa: E741
    J: list[int] = Field(..., description="Indices sent to positive GL-block vectors, ascending")
    n: int = Field(..., ge=1)
    k: int = Field(..., ge=1)
    length: int = Field(..., ge=0)
    perm: list[int] = Field(..., description="1-based targets: eps_i maps to signs[i] * eps_{perm[i]}")
    signs: list[int]

    @classmethod
    def from_rep(cls, rep: KostantRep) -> "KostantRepSchema":
        return cls(
            I=list(rep.pair.I),
            J=list(rep.pair.J),
            n=rep.ctx.n,
            k=rep.ctx.k,
            length=rep.length,
            perm=list(rep.w.perm),
            signs=list(rep.w.signs),
        )

    def to_rep(self) -> KostantRep:
        pair = KostantPair(RankContext(self.n, self.k), tuple(self.I), tuple(self.J))
        return KostantRep(pair=pair, w=SignedPermutation(tuple(self.perm), tuple(self.signs)), length=self.length)


class ClassifiedRowSchema(KostantRepSchema):
    """One row of the table / classify output: the representative plus its classification."""

    t: ScalarSchema
    mu: list[ScalarSchema]
    self_dual: bool
    family: list[str] = Field(default_factory=list, description="Family tags; several when shapes overlap")

    @classmethod
    def from_entry(cls, entry: ClassifiedRep) -> "ClassifiedRowSchema":
        return cls(
            **KostantRepSchema.from_rep(entry.rep).model_dump(),
            t=ScalarSchema.from_value(entry.t),
            mu=[ScalarSchema.from_value(value) for value in entry.mu.coords],
            self_dual=entry.self_dual,
            family=list(entry.families),
        )

    def t_value(self) -> HalfInt:
        return self.t.to_halfint()

    def mu_value(self) -> Weight:
        return Weight(tuple(item.to_fraction() for item in self.mu))

    def as_dict(self) -> dict:
        data = self.model_dump(exclude={"t", "mu"})
        data["t"] = self.t.as_dict()
        data["mu"] = [item.as_dict() for item in self.mu]
        return data


class DegreeRangeSchema(BaseModel):
    lo: int = Field(..., ge=0)
    hi: int = Field(..., ge=0)

    @classmethod
    def from_range(cls, degrees: DegreeRange) -> "DegreeRangeSchema":
        return cls(lo=degrees.lo, hi=degrees.hi)

    def to_range(self) -> DegreeRange:
        return DegreeRange(self.lo, self.hi)


def table_order(entries: list[ClassifiedRep]) -> list[ClassifiedRep]:
    """t descending, then length ascending, then (I, J)."""
    return sorted(entries, key=lambda e: (-e.t.twice_value, e.rep.length, e.pair.sort_key()))


TABLE_COLUMNS = ["n", "k", "I", "J", "length", "t_twice", "mu", "self_dual", "family"]


def flat_row(entry: ClassifiedRep) -> dict:
    """CSV/Markdown view of a classified entry; t and mu as twice-values."""
    return {
        "n": entry.rep.ctx.n,
        "k": entry.rep.ctx.k,
        "I": list(entry.pair.I),
        "J": list(entry.pair.J),
        "length": entry.rep.length,
        "t_twice": twice_cell(entry.t),
        "mu": [twice_cell(value) for value in entry.mu.coords],
        "self_dual": entry.self_dual,
        "family": list(entry.families),
    }
