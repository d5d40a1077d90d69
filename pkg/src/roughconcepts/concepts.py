"""Concept-level approximation between the base and approximation lattices.

A base concept is approximated externally: its intent is re-derived
inside the upper (or lower) approximation context and closed there.
Both assignments are monotone.  The lower assignment preserves meets
and forms a Galois adjunction with :func:`upper_meet`; on the upper
side the unit inclusion ``c <= lower_join(upper image of c)`` always
holds, but the full adjunction with :func:`lower_join` (and with it
join preservation) can fail for partitions that merge objects whose
combined row pattern is not realized, so it is a property of the
(context, partition) pair rather than of the construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .approx import lower_context, upper_context
from .context import ApproximationSpace, FormalContext, derive_extent, require_same_universe
from .lattice import (
    DEFAULT_MAX_CONCEPTS,
    ConceptLattice,
    FormalConcept,
    concept_leq,
    enumerate_concepts,
    lattice_join,
    lattice_meet,
)

OrderMode = Literal["upper", "lower", "rough"]
_MODES = ("upper", "lower", "rough")


@dataclass(frozen=True)
class RoughConceptClass:
    """Base concepts sharing both conceptual approximations.

    ``members`` holds base-lattice concept indices in ascending order.
    """

    members: tuple[int, ...]
    upper_image: FormalConcept
    lower_image: FormalConcept


class ConceptApproximationMaps:
    """The three lattices plus both assignment maps between them.

    ``to_upper[i]`` (resp. ``to_lower[i]``) is the index, in the upper
    (resp. lower) approximation lattice, of the image of base concept
    ``i``.  Built once by :func:`approximation_maps`; immutable after.
    """

    def __init__(
        self,
        space: ApproximationSpace,
        base: ConceptLattice,
        upper: ConceptLattice,
        lower: ConceptLattice,
        to_upper: tuple[int, ...],
        to_lower: tuple[int, ...],
    ):
        self.space = space
        self.base = base
        self.upper = upper
        self.lower = lower
        self.to_upper = tuple(to_upper)
        self.to_lower = tuple(to_lower)

    @property
    def context(self) -> FormalContext:
        return self.base.context


def _image_index(target: ConceptLattice, concept: FormalConcept) -> int:
    # Intent-first: derive the intent through the approximation context,
    # then close.  The derived extent is closed there by construction.
    extent = derive_extent(target.context, concept.intent)
    try:
        return target.concept_with_extent(extent).index
    except KeyError:  # pragma: no cover - would indicate an enumeration bug
        raise RuntimeError(
            "derived extent missing from the target lattice; enumeration is inconsistent"
        ) from None


def approximation_maps(
    space: ApproximationSpace,
    ctx: FormalContext,
    max_concepts: int = DEFAULT_MAX_CONCEPTS,
) -> ConceptApproximationMaps:
    """Enumerate the base and both approximation lattices and map into them."""
    require_same_universe(space, ctx)
    base = enumerate_concepts(ctx, max_concepts)
    upper = enumerate_concepts(upper_context(space, ctx), max_concepts)
    lower = enumerate_concepts(lower_context(space, ctx), max_concepts)
    to_upper = tuple(_image_index(upper, concept) for concept in base)
    to_lower = tuple(_image_index(lower, concept) for concept in base)
    return ConceptApproximationMaps(space, base, upper, lower, to_upper, to_lower)


def concept_upper_approx(
    maps: ConceptApproximationMaps, concept: FormalConcept
) -> FormalConcept:
    """Image of a base concept in the upper approximation lattice."""
    maps.base.require_member(concept)
    return maps.upper.concepts[maps.to_upper[concept.index]]


def concept_lower_approx(
    maps: ConceptApproximationMaps, concept: FormalConcept
) -> FormalConcept:
    """Image of a base concept in the lower approximation lattice."""
    maps.base.require_member(concept)
    return maps.lower.concepts[maps.to_lower[concept.index]]


def lower_join(maps: ConceptApproximationMaps, concept: FormalConcept) -> FormalConcept:
    """Join of all base concepts whose extent fits inside the given upper concept.

    The unit inclusion ``c <= lower_join(upper image of c)`` holds for
    every base concept; the converse direction of the would-be
    adjunction depends on the partition (see the module docstring).
    """
    maps.upper.require_member(concept)
    below = [c for c in maps.base if c.extent <= concept.extent]
    return lattice_join(maps.base, below)


def upper_meet(maps: ConceptApproximationMaps, concept: FormalConcept) -> FormalConcept:
    """Meet of all base concepts whose extent covers the given lower concept.

    Left adjoint to the lower assignment: ``upper_meet(d) <= c`` iff
    ``d <= lower image of c``, for every context and partition.
    """
    maps.lower.require_member(concept)
    above = [c for c in maps.base if c.extent >= concept.extent]
    return lattice_meet(maps.base, above)


def concept_order(
    maps: ConceptApproximationMaps,
    first: FormalConcept,
    second: FormalConcept,
    mode: OrderMode,
) -> bool:
    """Preorder base concepts through their images (upper, lower, or both)."""
    if mode not in _MODES:
        raise ValueError(f"unknown order mode {mode!r}")
    maps.base.require_member(first)
    maps.base.require_member(second)
    ok = True
    if mode in ("upper", "rough"):
        ok = concept_leq(
            concept_upper_approx(maps, first), concept_upper_approx(maps, second)
        )
    if ok and mode in ("lower", "rough"):
        ok = concept_leq(
            concept_lower_approx(maps, first), concept_lower_approx(maps, second)
        )
    return ok


def rough_concept_classes(maps: ConceptApproximationMaps) -> tuple[RoughConceptClass, ...]:
    """Partition of the base concepts by their pair of image concepts.

    This is the common refinement of the two kernels; classes are listed
    by their smallest member index.
    """
    groups: dict[tuple[int, int], list[int]] = {}
    for i in range(len(maps.base)):
        groups.setdefault((maps.to_upper[i], maps.to_lower[i]), []).append(i)
    return tuple(
        RoughConceptClass(
            tuple(members),
            maps.upper.concepts[maps.to_upper[members[0]]],
            maps.lower.concepts[maps.to_lower[members[0]]],
        )
        for members in sorted(groups.values())
    )


def _fibers(assignment: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    groups: dict[int, list[int]] = {}
    for i, target in enumerate(assignment):
        groups.setdefault(target, []).append(i)
    return tuple(tuple(groups[t]) for t in sorted(groups))


def indiscernibility_kernels(
    maps: ConceptApproximationMaps,
) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
    """Fibers of both assignments, ordered by image index.

    Returns the indiscernibility of possibility (fibers of the upper
    assignment) and of necessity (fibers of the lower assignment); both
    partition the base concept indices.
    """
    return _fibers(maps.to_upper), _fibers(maps.to_lower)
