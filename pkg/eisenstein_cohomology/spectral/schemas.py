"""
Pydantic schemas for spectral input and output.

Absent tau flags (k = n) travel as null.
"""

from typing import Literal

from pydantic import BaseModel, Field

from eisenstein_cohomology.kostant.schemas import DegreeRangeSchema
from eisenstein_cohomology.spectral.poles import CuspidalDatum
from eisenstein_cohomology.spectral.verdicts import Verdict
from eisenstein_cohomology.weyl.rootsys import RankContext
from eisenstein_cohomology.weyl.schemas import ScalarSchema


class CuspidalDatumSchema(BaseModel):
    n: int = Field(..., ge=1)
    k: int = Field(..., ge=1)
    sigma_self_dual: bool
    omega_sigma_trivial: bool
    L_half_nonzero: bool | None = Field(None, description="L(1/2, sigma x tau) != 0; null for k = n")
    rs_pole_at_one: bool | None = Field(None, description="L(s, sigma x tau) has a pole at s = 1; null for k = n")
    lift_from_so_k: bool = Field(False, description="sigma is a weak functorial lift from SO_k")

    @classmethod
    def from_datum(cls, datum: CuspidalDatum) -> "CuspidalDatumSchema":
        return cls(**datum.to_dict())

    def to_datum(self) -> CuspidalDatum:
        return CuspidalDatum(
            ctx=RankContext(self.n, self.k),
            sigma_self_dual=self.sigma_self_dual,
            omega_sigma_trivial=self.omega_sigma_trivial,
            L_half_nonzero=self.L_half_nonzero,
            rs_pole_at_one=self.rs_pole_at_one,
            lift_from_so_k=self.lift_from_so_k,
        )


class VerdictSchema(BaseModel):
    kind: Literal["Residual", "Regular", "NoClass"]
    t: ScalarSchema | None = None
    window: DegreeRangeSchema | None = None
    notes: list[str] = Field(default_factory=list)

    @classmethod
    def from_verdict(cls, result: Verdict) -> "VerdictSchema":
        return cls(
            kind=str(result.kind),
            t=ScalarSchema.from_value(result.t) if result.t is not None else None,
            window=DegreeRangeSchema.from_range(result.window) if result.window is not None else None,
            notes=list(result.notes),
        )

    def to_verdict(self) -> Verdict:
        return Verdict(
            kind=self.kind,
            t=self.t.to_halfint() if self.t is not None else None,
            window=self.window.to_range() if self.window is not None else None,
            notes=list(self.notes),
        )

    def as_dict(self) -> dict:
        data = self.model_dump(exclude={"t"})
        data["t"] = self.t.as_dict() if self.t is not None else None
        return data
