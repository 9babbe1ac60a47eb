from enum import Enum
from itertools import combinations
from typing import Iterator

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.core.models import Edge, Relation


class GroupKind(str, Enum):
    FULL = "full"
    FIX = "fix"


class GroupDescription(BaseModel):
    """Either the group of all permutations of the atoms, or fix(E)."""

    model_config = ConfigDict(frozen=True)

    atoms: int = Field(..., ge=0)
    kind: GroupKind = GroupKind.FULL
    fixed_set: tuple[int, ...] = ()

    @field_validator("fixed_set", mode="before")
    @classmethod
    def _sorted(cls, value):
        return tuple(sorted(set(value)))

    @model_validator(mode="after")
    def _valid(self):
        if self.kind == GroupKind.FULL and self.fixed_set:
            raise ValueError("the full group fixes no atoms")
        for a in self.fixed_set:
            if not 0 <= a < self.atoms:
                raise ValueError(f"atom {a} outside [0, {self.atoms})")
        return self

    @classmethod
    def fix(cls, atoms: int, fixed_set) -> "GroupDescription":
        return cls(atoms=atoms, kind=GroupKind.FIX, fixed_set=fixed_set)

    @property
    def moved_atoms(self) -> list[int]:
        fixed = set(self.fixed_set)
        return [a for a in range(self.atoms) if a not in fixed]

    def generators(self) -> Iterator[tuple[int, int]]:
        """Transpositions of two moved atoms; they generate the group."""
        return combinations(self.moved_atoms, 2)


def swap_preserves(edges: frozenset[Edge], a: int, b: int) -> bool:
    def move(x):
        return b if x == a else a if x == b else x

    return all((move(u), move(v)) in edges for u, v in edges)


class SupportedRelation(BaseModel):
    """A relation on the atoms 0..N-1 together with a support E."""

    model_config = ConfigDict(frozen=True)

    atoms: int = Field(..., ge=0)
    edges: tuple[Edge, ...] = ()
    support: tuple[int, ...] = ()

    @field_validator("edges", mode="before")
    @classmethod
    def _sorted_edges(cls, value):
        return tuple(sorted({tuple(pair) for pair in value}))

    @field_validator("support", mode="before")
    @classmethod
    def _sorted_support(cls, value):
        return tuple(sorted(set(value)))

    @model_validator(mode="after")
    def _supported(self):
        for u, v in self.edges:
            if not (0 <= u < self.atoms and 0 <= v < self.atoms):
                raise ValueError(f"edge ({u}, {v}) has an atom outside [0, {self.atoms})")
        for a in self.support:
            if not 0 <= a < self.atoms:
                raise ValueError(f"support atom {a} outside [0, {self.atoms})")
        group = GroupDescription.fix(self.atoms, self.support)
        edge_set = frozenset(self.edges)
        for a, b in group.generators():
            if not swap_preserves(edge_set, a, b):
                raise ValueError(f"swapping atoms {a} and {b} outside the support moves the relation")
        return self

    @property
    def relation(self) -> Relation:
        return Relation.of(self.atoms, self.edges)


class PairOrbit(BaseModel):
    model_config = ConfigDict(frozen=True)

    pairs: tuple[Edge, ...]

    @property
    def size(self) -> int:
        return len(self.pairs)


class SupportReport(BaseModel):
    support: tuple[int, ...]
    orbit_classes: int
    relations: int
    witness: tuple[int, int]
    failure_count: int = 0
    # the first few failing relations
    failures: list[tuple[Edge, ...]] = []


class LemmaReport(BaseModel):
    atoms: int
    max_support: int
    applicable: bool
    supports: list[SupportReport] = []

    @property
    def relations_checked(self) -> int:
        return sum(s.relations for s in self.supports)

    @property
    def failure_count(self) -> int:
        return sum(s.failure_count for s in self.supports)

    @property
    def all_non_rigid(self) -> bool:
        return self.failure_count == 0

    def for_support(self, support) -> SupportReport:
        key = tuple(sorted(support))
        return next(s for s in self.supports if s.support == key)
