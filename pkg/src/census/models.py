from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.core.models import Permutation, Relation

CENSUS_COLUMNS = (
    "n",
    "total",
    "rigid",
    "strongly_rigid",
    "hereditarily_rigid",
    "irreflexive_hereditarily_rigid",
)


class CensusRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=0)
    total: int
    rigid: int
    strongly_rigid: int
    hereditarily_rigid: int
    irreflexive_hereditarily_rigid: int

    @model_validator(mode="after")
    def _ordered(self):
        if not self.strongly_rigid <= self.rigid <= self.total:
            raise ValueError("expected strongly_rigid <= rigid <= total")
        if not self.irreflexive_hereditarily_rigid <= self.hereditarily_rigid <= self.rigid:
            raise ValueError("expected irreflexive_hereditarily_rigid <= hereditarily_rigid <= rigid")
        return self

    def tsv(self) -> str:
        return "\t".join(str(getattr(self, column)) for column in CENSUS_COLUMNS)


class GraphCensusRow(BaseModel):
    """Symmetric relations (loops allowed) and simple graphs on n labeled vertices."""

    model_config = ConfigDict(frozen=True)

    n: int
    symmetric_total: int
    symmetric_rigid: int
    simple_total: int
    simple_rigid: int


class RigidNonHereditaryExample(BaseModel):
    model_config = ConfigDict(frozen=True)

    relation: Relation
    witness_subset: tuple[int, ...]
    witness_perm: Permutation
