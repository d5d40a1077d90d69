"""Formal contexts, approximation spaces, and set-level primitives.

Objects and attributes are addressed by their position in the input
order, which fixes index assignment for everything downstream.  Every
set accepted or returned here is a ``frozenset`` of such indices; the
container types offer helpers to translate between names and indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import (
    DuplicateNameError,
    InvalidSetError,
    PartitionError,
    UniverseMismatchError,
    UnknownNameError,
)

ObjectSet = frozenset[int]
AttributeSet = frozenset[int]


def _unique_names(names: Iterable[str], kind: str) -> tuple[str, ...]:
    out = tuple(names)
    seen: set[str] = set()
    for name in out:
        if not isinstance(name, str) or not name:
            raise InvalidSetError(f"{kind} names must be nonempty strings, got {name!r}")
        if name in seen:
            raise DuplicateNameError(f"duplicate {kind} name {name!r}")
        seen.add(name)
    return out


def _checked_indices(values: Iterable[int], size: int, kind: str) -> frozenset[int]:
    out = frozenset(values)
    for i in out:
        if not isinstance(i, int) or not 0 <= i < size:
            raise InvalidSetError(f"{kind} index {i!r} out of range for universe of size {size}")
    return out


@dataclass(frozen=True)
class FormalContext:
    """A binary incidence table between named objects and attributes.

    ``rows[g]`` holds the attribute indices object ``g`` has; the column
    view (per-attribute extents) is derived from the rows, so the two
    views can never disagree.  Instances are immutable and hashable.
    """

    objects: tuple[str, ...]
    attributes: tuple[str, ...]
    rows: tuple[AttributeSet, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "objects", _unique_names(self.objects, "object"))
        object.__setattr__(self, "attributes", _unique_names(self.attributes, "attribute"))
        rows = tuple(
            _checked_indices(row, len(self.attributes), "attribute") for row in self.rows
        )
        if len(rows) != len(self.objects):
            raise InvalidSetError(
                f"expected {len(self.objects)} incidence rows, got {len(rows)}"
            )
        object.__setattr__(self, "rows", rows)

    # -- construction ------------------------------------------------------

    @classmethod
    def from_pairs(
        cls,
        objects: Sequence[str],
        attributes: Sequence[str],
        pairs: Iterable[tuple[str, str]],
    ) -> "FormalContext":
        """Build a context from (object name, attribute name) pairs."""
        objects = _unique_names(objects, "object")
        attributes = _unique_names(attributes, "attribute")
        obj_index = {name: i for i, name in enumerate(objects)}
        attr_index = {name: i for i, name in enumerate(attributes)}
        rows: list[set[int]] = [set() for _ in objects]
        for obj, attr in pairs:
            if obj not in obj_index:
                raise UnknownNameError(f"unknown object {obj!r}")
            if attr not in attr_index:
                raise UnknownNameError(f"unknown attribute {attr!r}")
            rows[obj_index[obj]].add(attr_index[attr])
        return cls(objects, attributes, tuple(frozenset(r) for r in rows))

    @classmethod
    def from_bools(
        cls,
        objects: Sequence[str],
        attributes: Sequence[str],
        table: Sequence[Sequence[object]],
    ) -> "FormalContext":
        """Build a context from a row-major table of truthy marks."""
        rows = tuple(
            frozenset(m for m, cell in enumerate(row) if cell) for row in table
        )
        return cls(tuple(objects), tuple(attributes), rows)

    @classmethod
    def from_columns(
        cls,
        objects: Sequence[str],
        attributes: Sequence[str],
        columns: Sequence[Iterable[int]],
    ) -> "FormalContext":
        """Build a context from per-attribute extents."""
        objects = tuple(objects)
        attributes = tuple(attributes)
        if len(columns) != len(attributes):
            raise InvalidSetError(
                f"expected {len(attributes)} columns, got {len(columns)}"
            )
        rows: list[set[int]] = [set() for _ in objects]
        for m, column in enumerate(columns):
            for g in _checked_indices(column, len(objects), "object"):
                rows[g].add(m)
        return cls(objects, attributes, tuple(frozenset(r) for r in rows))

    # -- name/index helpers --------------------------------------------------

    @cached_property
    def _object_index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.objects)}

    @cached_property
    def _attribute_index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.attributes)}

    def object_index(self, name: str) -> int:
        try:
            return self._object_index[name]
        except KeyError:
            raise UnknownNameError(f"unknown object {name!r}") from None

    def attribute_index(self, name: str) -> int:
        try:
            return self._attribute_index[name]
        except KeyError:
            raise UnknownNameError(f"unknown attribute {name!r}") from None

    def object_set(self, *names: str) -> ObjectSet:
        return frozenset(self.object_index(name) for name in names)

    def attribute_set(self, *names: str) -> AttributeSet:
        return frozenset(self.attribute_index(name) for name in names)

    def object_names(self, objects: Iterable[int]) -> tuple[str, ...]:
        """Names of the given object indices, in input order."""
        members = self.check_object_set(objects)
        return tuple(self.objects[g] for g in sorted(members))

    def attribute_names(self, attributes: Iterable[int]) -> tuple[str, ...]:
        """Names of the given attribute indices, in input order."""
        members = self.check_attribute_set(attributes)
        return tuple(self.attributes[m] for m in sorted(members))

    # -- incidence views -------------------------------------------------------

    @cached_property
    def columns(self) -> tuple[ObjectSet, ...]:
        """Per-attribute extents, derived from the rows."""
        cols: list[set[int]] = [set() for _ in self.attributes]
        for g, row in enumerate(self.rows):
            for m in row:
                cols[m].add(g)
        return tuple(frozenset(c) for c in cols)

    def has(self, g: int, m: int) -> bool:
        """Whether object ``g`` has attribute ``m`` (by index)."""
        if not 0 <= g < len(self.objects):
            raise InvalidSetError(f"object index {g!r} out of range")
        if not 0 <= m < len(self.attributes):
            raise InvalidSetError(f"attribute index {m!r} out of range")
        return m in self.rows[g]

    @property
    def incidence_count(self) -> int:
        return sum(len(row) for row in self.rows)

    def pairs(self) -> Iterator[tuple[int, int]]:
        """All incidence pairs, ordered by object then attribute index."""
        for g, row in enumerate(self.rows):
            for m in sorted(row):
                yield g, m

    def check_object_set(self, objects: Iterable[int]) -> ObjectSet:
        return _checked_indices(objects, len(self.objects), "object")

    def check_attribute_set(self, attributes: Iterable[int]) -> AttributeSet:
        return _checked_indices(attributes, len(self.attributes), "attribute")


@dataclass(frozen=True)
class ApproximationSpace:
    """A partition of the object universe into indiscernibility blocks.

    Two objects are indiscernible exactly when they share a block, which
    realizes the underlying equivalence relation with O(1) lookup.
    Blocks are normalized to ascending order of their smallest member,
    so equal partitions compare equal regardless of input order.
    """

    objects: tuple[str, ...]
    blocks: tuple[ObjectSet, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "objects", _unique_names(self.objects, "object"))
        raw = tuple(frozenset(block) for block in self.blocks)
        covered: set[int] = set()
        for block in raw:
            if not block:
                raise PartitionError("blocks must be nonempty")
            checked = _checked_indices(block, len(self.objects), "object")
            overlap = covered & checked
            if overlap:
                raise PartitionError(
                    f"object {self.objects[min(overlap)]!r} appears in more than one block"
                )
            covered |= checked
        if len(covered) != len(self.objects):
            missing = sorted(set(range(len(self.objects))) - covered)
            names = ", ".join(self.objects[g] for g in missing)
            raise PartitionError(f"objects not covered by any block: {names}")
        object.__setattr__(self, "blocks", tuple(sorted(raw, key=min)))

    # -- construction ------------------------------------------------------

    @classmethod
    def from_names(
        cls, objects: Sequence[str], named_blocks: Iterable[Sequence[str]]
    ) -> "ApproximationSpace":
        """Build a space from blocks given as lists of object names."""
        objects = _unique_names(objects, "object")
        index = {name: i for i, name in enumerate(objects)}
        blocks: list[frozenset[int]] = []
        for block in named_blocks:
            members = list(block)
            if len(set(members)) != len(members):
                raise PartitionError(f"object listed twice within a block: {members}")
            ids = set()
            for name in members:
                if name not in index:
                    raise UnknownNameError(f"unknown object {name!r}")
                ids.add(index[name])
            blocks.append(frozenset(ids))
        return cls(objects, tuple(blocks))

    @classmethod
    def identity(cls, objects: Sequence[str]) -> "ApproximationSpace":
        """The finest partition: every object alone in its block."""
        objects = tuple(objects)
        return cls(objects, tuple(frozenset({i}) for i in range(len(objects))))

    @classmethod
    def from_attribute_classes(
        cls, ctx: FormalContext, attributes: Iterable[int]
    ) -> "ApproximationSpace":
        """Partition objects by equality of their rows restricted to ``attributes``."""
        members = ctx.check_attribute_set(attributes)
        groups: dict[frozenset[int], set[int]] = {}
        for g in range(len(ctx.objects)):
            groups.setdefault(ctx.rows[g] & members, set()).add(g)
        return cls(ctx.objects, tuple(frozenset(v) for v in groups.values()))

    # -- lookup ------------------------------------------------------------

    @cached_property
    def _block_index(self) -> tuple[int, ...]:
        out = [0] * len(self.objects)
        for b, block in enumerate(self.blocks):
            for g in block:
                out[g] = b
        return tuple(out)

    @cached_property
    def _object_index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.objects)}

    def object_index(self, name: str) -> int:
        try:
            return self._object_index[name]
        except KeyError:
            raise UnknownNameError(f"unknown object {name!r}") from None

    def object_set(self, *names: str) -> ObjectSet:
        return frozenset(self.object_index(name) for name in names)

    def block_index_of(self, g: int) -> int:
        if not 0 <= g < len(self.objects):
            raise InvalidSetError(f"object index {g!r} out of range")
        return self._block_index[g]

    def block_of(self, g: int) -> ObjectSet:
        """The indiscernibility block containing object ``g``."""
        return self.blocks[self.block_index_of(g)]

    def check_object_set(self, objects: Iterable[int]) -> ObjectSet:
        return _checked_indices(objects, len(self.objects), "object")


def require_same_universe(space: ApproximationSpace, ctx: FormalContext) -> None:
    if space.objects != ctx.objects:
        raise UniverseMismatchError(
            "context and approximation space name different object universes"
        )


# -- derivation operators ------------------------------------------------------


def derive_intent(ctx: FormalContext, objects: Iterable[int]) -> AttributeSet:
    """Attributes shared by every object in the set.

    The empty set derives to all of the attributes (empty-intersection
    convention), making this one half of a Galois connection with
    :func:`derive_extent`.
    """
    members = ctx.check_object_set(objects)
    if not members:
        return frozenset(range(len(ctx.attributes)))
    return frozenset.intersection(*(ctx.rows[g] for g in members))


def derive_extent(ctx: FormalContext, attributes: Iterable[int]) -> ObjectSet:
    """Objects having every attribute in the set (all objects for the empty set)."""
    members = ctx.check_attribute_set(attributes)
    if not members:
        return frozenset(range(len(ctx.objects)))
    return frozenset.intersection(*(ctx.columns[m] for m in members))


# -- set approximation -----------------------------------------------------


def upper_approx_set(space: ApproximationSpace, objects: Iterable[int]) -> ObjectSet:
    """Union of all blocks meeting the set: its least definable superset."""
    members = space.check_object_set(objects)
    hit = {space.block_index_of(g) for g in members}
    out: set[int] = set()
    for b in hit:
        out |= space.blocks[b]
    return frozenset(out)


def lower_approx_set(space: ApproximationSpace, objects: Iterable[int]) -> ObjectSet:
    """Union of all blocks contained in the set: its greatest definable subset."""
    members = space.check_object_set(objects)
    out: set[int] = set()
    for block in space.blocks:
        if block <= members:
            out |= block
    return frozenset(out)


def is_definable_set(space: ApproximationSpace, objects: Iterable[int]) -> bool:
    """Whether the set is exactly a union of indiscernibility blocks."""
    members = space.check_object_set(objects)
    return upper_approx_set(space, members) == members


def definable_attributes(space: ApproximationSpace, ctx: FormalContext) -> AttributeSet:
    """Attributes whose extent is definable; all of them iff the context is definable."""
    require_same_universe(space, ctx)
    return frozenset(
        m for m, column in enumerate(ctx.columns) if is_definable_set(space, column)
    )
