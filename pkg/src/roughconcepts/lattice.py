"""Concept enumeration and the lattice structure on the result."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .context import AttributeSet, FormalContext, ObjectSet, derive_extent, derive_intent
from .errors import ConceptLimitError, LatticeMismatchError

DEFAULT_MAX_CONCEPTS = 100_000


@dataclass(frozen=True)
class FormalConcept:
    """An extent/intent pair closed under both derivation operators."""

    extent: ObjectSet
    intent: AttributeSet
    index: int
    lattice: "ConceptLattice | None" = field(default=None, compare=False, repr=False)


class ConceptLattice:
    """All concepts of a context, in canonical order, plus the Hasse covers.

    Canonical order is descending extent size with ties broken by the
    sorted extent index tuple; the top concept is always first and the
    bottom always last.  ``covers`` lists (lower, upper) index pairs, the
    transitive reduction of the extent-inclusion order.  Instances are
    immutable once built; use :func:`enumerate_concepts` to build one.
    """

    def __init__(
        self,
        context: FormalContext,
        concepts: Iterable[FormalConcept],
        covers: Iterable[tuple[int, int]],
    ):
        self.context = context
        self.concepts: tuple[FormalConcept, ...] = tuple(concepts)
        self.covers: tuple[tuple[int, int], ...] = tuple(covers)
        self._by_extent = {c.extent: c for c in self.concepts}
        for concept in self.concepts:
            object.__setattr__(concept, "lattice", self)

    def __len__(self) -> int:
        return len(self.concepts)

    def __iter__(self) -> Iterator[FormalConcept]:
        return iter(self.concepts)

    def __getitem__(self, index: int) -> FormalConcept:
        return self.concepts[index]

    @property
    def top(self) -> FormalConcept:
        return self.concepts[0]

    @property
    def bottom(self) -> FormalConcept:
        return self.concepts[-1]

    def concept_with_extent(self, extent: Iterable[int]) -> FormalConcept:
        """The unique concept with this extent; KeyError if the set is not closed."""
        return self._by_extent[frozenset(extent)]

    def require_member(self, concept: FormalConcept) -> FormalConcept:
        """The lattice's own instance of ``concept``.

        Membership is structural, so concepts from a separately built but
        equal lattice are accepted.
        """
        if 0 <= concept.index < len(self.concepts) and self.concepts[concept.index] == concept:
            return self.concepts[concept.index]
        raise LatticeMismatchError("concept does not belong to this lattice")


def _mask(indices: Iterable[int]) -> int:
    out = 0
    for i in indices:
        out |= 1 << i
    return out


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _next_closed(attrs: int, width: int, close: Callable[[int], int]) -> int | None:
    """Lectically next closed attribute set after ``attrs``, or None at the end."""
    for i in range(width - 1, -1, -1):
        bit = 1 << i
        if attrs & bit:
            attrs &= ~bit
        else:
            candidate = close(attrs | bit)
            if not candidate & (bit - 1) & ~attrs:
                return candidate
    return None


def enumerate_concepts(
    ctx: FormalContext, max_concepts: int = DEFAULT_MAX_CONCEPTS
) -> ConceptLattice:
    """All formal concepts of ``ctx`` as a :class:`ConceptLattice`.

    Closed attribute sets are generated in lectic order (NextClosure), so
    every concept appears exactly once without keeping a seen-set.  Work
    happens on integer bitmasks; the public concepts carry frozensets.
    """
    n_objects = len(ctx.objects)
    n_attributes = len(ctx.attributes)
    row_mask = [_mask(row) for row in ctx.rows]
    col_mask = [_mask(col) for col in ctx.columns]
    all_objects = (1 << n_objects) - 1
    all_attributes = (1 << n_attributes) - 1

    def extent_of(attrs: int) -> int:
        out = all_objects
        for m in _bits(attrs):
            out &= col_mask[m]
        return out

    def intent_of(objs: int) -> int:
        out = all_attributes
        for g in _bits(objs):
            out &= row_mask[g]
        return out

    def close(attrs: int) -> int:
        return intent_of(extent_of(attrs))

    intents: list[int] = []
    current: int | None = close(0)
    while current is not None:
        intents.append(current)
        if len(intents) > max_concepts:
            raise ConceptLimitError(
                f"more than {max_concepts} concepts; raise the limit to proceed"
            )
        current = _next_closed(current, n_attributes, close)

    raw = [(extent_of(intent), intent) for intent in intents]
    raw.sort(key=lambda pair: (-pair[0].bit_count(), tuple(_bits(pair[0]))))
    concepts = [
        FormalConcept(frozenset(_bits(e)), frozenset(_bits(i)), index)
        for index, (e, i) in enumerate(raw)
    ]
    covers = _covering_pairs([e for e, _ in raw])
    return ConceptLattice(ctx, concepts, covers)


def _covering_pairs(extents: list[int]) -> list[tuple[int, int]]:
    """Transitive reduction of extent inclusion, as (lower, upper) index pairs."""
    n = len(extents)
    above = [0] * n
    for i, ei in enumerate(extents):
        for j, ej in enumerate(extents):
            if ei != ej and not ei & ~ej:
                above[i] |= 1 << j
    covers: list[tuple[int, int]] = []
    for i in range(n):
        reachable = 0
        for j in _bits(above[i]):
            reachable |= above[j]
        for j in _bits(above[i] & ~reachable):
            covers.append((i, j))
    covers.sort()
    return covers


def covering_relation(lat: ConceptLattice) -> list[tuple[int, int]]:
    """The Hasse diagram of the lattice as (lower, upper) index pairs."""
    return list(lat.covers)


def _require_same_lattice(first: FormalConcept, second: FormalConcept) -> None:
    if first.lattice is None or second.lattice is None:
        raise LatticeMismatchError("concept does not belong to a lattice")
    if first.lattice is not second.lattice and first.lattice.context != second.lattice.context:
        raise LatticeMismatchError("concepts come from different lattices")


def concept_leq(first: FormalConcept, second: FormalConcept) -> bool:
    """Generalization order: ``first <= second`` iff its extent is contained."""
    _require_same_lattice(first, second)
    return first.extent <= second.extent


def _lookup(lat: ConceptLattice, extent: ObjectSet) -> FormalConcept:
    try:
        return lat.concept_with_extent(extent)
    except KeyError:  # pragma: no cover - would indicate an enumeration bug
        raise RuntimeError(
            f"no concept with extent {sorted(extent)}; lattice enumeration is inconsistent"
        ) from None


def lattice_meet(lat: ConceptLattice, concepts: Iterable[FormalConcept]) -> FormalConcept:
    """Greatest lower bound; the empty collection meets to the top."""
    items = [lat.require_member(c) for c in concepts]
    if not items:
        return lat.top
    shared = frozenset.intersection(*(c.extent for c in items))
    intent = derive_intent(lat.context, shared)
    extent = derive_extent(lat.context, intent)
    return _lookup(lat, extent)


def lattice_join(lat: ConceptLattice, concepts: Iterable[FormalConcept]) -> FormalConcept:
    """Least upper bound; the empty collection joins to the bottom."""
    items = [lat.require_member(c) for c in concepts]
    if not items:
        return lat.bottom
    shared = frozenset.intersection(*(c.intent for c in items))
    extent = derive_extent(lat.context, shared)
    return _lookup(lat, extent)
