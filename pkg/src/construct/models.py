from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.core.models import Relation


class CantorPoint(BaseModel):
    """A finite binary string standing for a basic clopen set of Cantor space."""

    model_config = ConfigDict(frozen=True)

    bits: str = Field(..., min_length=1, pattern=r"^[01]+$")

    def extends(self, prefix: str) -> bool:
        return self.bits.startswith(prefix)

    def __str__(self):
        return self.bits


class PrefixCode(BaseModel):
    model_config = ConfigDict(frozen=True)

    index: int = Field(..., ge=0)
    sequence: str = Field("", pattern=r"^[01]*$")


class SpineDesignation(BaseModel):
    """The designated points z* and z_0, ..., z_k of the carrier, as carrier indices."""

    model_config = ConfigDict(frozen=True)

    z_star: int = Field(..., ge=0)
    z_chain: tuple[int, ...] = ()

    @model_validator(mode="after")
    def _distinct(self):
        indices = (self.z_star, *self.z_chain)
        if len(set(indices)) != len(indices):
            raise ValueError("z* and the chain points must be pairwise distinct")
        if any(i < 0 for i in self.z_chain):
            raise ValueError("chain indices must be non-negative")
        return self

    @property
    def members(self) -> frozenset[int]:
        return frozenset((self.z_star, *self.z_chain))


class LabeledPair(BaseModel):
    model_config = ConfigDict(frozen=True)

    point: CantorPoint
    label: int = Field(..., ge=0)


class CantorRequest(BaseModel):
    points: list[CantorPoint]
    spine: SpineDesignation


class ProductMainRequest(BaseModel):
    pairs: list[LabeledPair]
    base: Relation
    spine: SpineDesignation


class ProductLexRequest(BaseModel):
    pairs: list[LabeledPair]
    base: Relation
