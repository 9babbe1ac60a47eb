from enum import Enum
from functools import cached_property
from typing import Iterable

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from src.exceptions import InvalidArgumentError

Edge = tuple[int, int]


class Relation(BaseModel):
    """A finite binary relation (directed graph, loops allowed) on vertices 0..n-1."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=0)
    edges: tuple[Edge, ...] = ()

    @field_validator("edges", mode="before")
    @classmethod
    def _sorted_edges(cls, value):
        try:
            return tuple(sorted({(int(u), int(v)) for u, v in value}))
        except (TypeError, ValueError):
            raise ValueError("edges must be pairs of integers")

    @model_validator(mode="after")
    def _edges_in_range(self):
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside [0, {self.n})")
        return self

    @classmethod
    def of(cls, n: int, edges: Iterable[Edge] = ()) -> "Relation":
        try:
            return cls(n=n, edges=tuple(edges))
        except ValidationError as e:
            raise InvalidArgumentError(_first_error(e)) from e

    @classmethod
    def empty(cls, n: int) -> "Relation":
        return cls.of(n)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def matrix(self) -> tuple[tuple[bool, ...], ...]:
        rows = [[False] * self.n for _ in range(self.n)]
        for u, v in self.edges:
            rows[u][v] = True
        return tuple(tuple(row) for row in rows)

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edge_set

    def __len__(self):
        return len(self.edges)


class Permutation(BaseModel):
    """A bijection on [0, n); images[i] is the image of i."""

    model_config = ConfigDict(frozen=True)

    images: tuple[int, ...] = ()

    @field_validator("images")
    @classmethod
    def _is_bijection(cls, value: tuple[int, ...]):
        if sorted(value) != list(range(len(value))):
            raise ValueError(f"{list(value)} is not a bijection on [0, {len(value)})")
        return value

    @classmethod
    def of(cls, images: Iterable[int]) -> "Permutation":
        try:
            return cls(images=tuple(images))
        except ValidationError as e:
            raise InvalidArgumentError(_first_error(e)) from e

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(images=tuple(range(n)))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> "Permutation":
        if not (0 <= a < n and 0 <= b < n):
            raise InvalidArgumentError(f"transposition ({a} {b}) outside [0, {n})")
        images = list(range(n))
        images[a], images[b] = b, a
        return cls(images=tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    @property
    def is_identity(self) -> bool:
        return all(i == image for i, image in enumerate(self.images))

    def __call__(self, vertex: int) -> int:
        return self.images[vertex]


class VertexMap(BaseModel):
    """A total self-map on [0, n), not necessarily injective."""

    model_config = ConfigDict(frozen=True)

    images: tuple[int, ...] = ()

    @field_validator("images")
    @classmethod
    def _is_total(cls, value: tuple[int, ...]):
        n = len(value)
        for image in value:
            if not 0 <= image < n:
                raise ValueError(f"image {image} outside [0, {n})")
        return value

    @classmethod
    def of(cls, images: Iterable[int]) -> "VertexMap":
        try:
            return cls(images=tuple(images))
        except ValidationError as e:
            raise InvalidArgumentError(_first_error(e)) from e

    @classmethod
    def identity(cls, n: int) -> "VertexMap":
        return cls(images=tuple(range(n)))

    @classmethod
    def constant(cls, n: int, value: int) -> "VertexMap":
        return cls.of([value] * n)

    @property
    def n(self) -> int:
        return len(self.images)

    @property
    def is_identity(self) -> bool:
        return all(i == image for i, image in enumerate(self.images))

    def __call__(self, vertex: int) -> int:
        return self.images[vertex]


class RigidityStatus(str, Enum):
    RIGID = "Rigid"
    NOT_RIGID = "NotRigid"


class StrongRigidityStatus(str, Enum):
    STRONGLY_RIGID = "StronglyRigid"
    NOT_STRONGLY_RIGID = "NotStronglyRigid"


class HereditaryStatus(str, Enum):
    HEREDITARILY_RIGID = "HereditarilyRigid"
    NOT_HEREDITARILY_RIGID = "NotHereditarilyRigid"


class RigidityVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    status: RigidityStatus
    witness: Permutation | None = None

    @model_validator(mode="after")
    def _witness_iff_negative(self):
        if (self.witness is not None) != (self.status == RigidityStatus.NOT_RIGID):
            raise ValueError("a witness is present exactly when the verdict is NotRigid")
        if self.witness is not None and self.witness.is_identity:
            raise ValueError("the witness must be a nontrivial permutation")
        return self

    @property
    def positive(self) -> bool:
        return self.status == RigidityStatus.RIGID


class StrongRigidityVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    status: StrongRigidityStatus
    witness: VertexMap | None = None

    @model_validator(mode="after")
    def _witness_iff_negative(self):
        if (self.witness is not None) != (self.status == StrongRigidityStatus.NOT_STRONGLY_RIGID):
            raise ValueError("a witness is present exactly when the verdict is NotStronglyRigid")
        if self.witness is not None and self.witness.is_identity:
            raise ValueError("the witness must be a nontrivial map")
        return self

    @property
    def positive(self) -> bool:
        return self.status == StrongRigidityStatus.STRONGLY_RIGID


class HereditaryVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    status: HereditaryStatus
    witness_subset: tuple[int, ...] | None = None
    witness_perm: Permutation | None = None

    @model_validator(mode="after")
    def _witness_iff_negative(self):
        negative = self.status == HereditaryStatus.NOT_HEREDITARILY_RIGID
        if negative != (self.witness_subset is not None) or negative != (self.witness_perm is not None):
            raise ValueError("witnesses are present exactly when the verdict is NotHereditarilyRigid")
        if negative and len(self.witness_subset) != self.witness_perm.n:
            raise ValueError("the witness permutation must act on the witness subset")
        return self

    @property
    def positive(self) -> bool:
        return self.status == HereditaryStatus.HEREDITARILY_RIGID


def _first_error(e: ValidationError) -> str:
    errors = e.errors()
    if not errors:
        return str(e)
    return errors[0]["msg"].removeprefix("Value error, ")
