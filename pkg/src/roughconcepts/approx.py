"""Context-level approximation relative to an indiscernibility partition.

Approximating a whole context happens columnwise: each attribute extent
is replaced by its upper or lower approximation.  Both results are
definable contexts and bracket the original one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

from .context import (
    ApproximationSpace,
    FormalContext,
    ObjectSet,
    derive_extent,
    lower_approx_set,
    require_same_universe,
    upper_approx_set,
)
from .errors import InvalidSetError, ShapeMismatchError

OrderMode = Literal["upper", "lower", "rough"]
_MODES = ("upper", "lower", "rough")


def upper_context(space: ApproximationSpace, ctx: FormalContext) -> FormalContext:
    """Columnwise upper approximation: the least definable context containing ``ctx``."""
    require_same_universe(space, ctx)
    columns = [upper_approx_set(space, column) for column in ctx.columns]
    return FormalContext.from_columns(ctx.objects, ctx.attributes, columns)


def lower_context(space: ApproximationSpace, ctx: FormalContext) -> FormalContext:
    """Columnwise lower approximation: the greatest definable context inside ``ctx``."""
    require_same_universe(space, ctx)
    columns = [lower_approx_set(space, column) for column in ctx.columns]
    return FormalContext.from_columns(ctx.objects, ctx.attributes, columns)


def extent_upper_free(
    space: ApproximationSpace, ctx: FormalContext, attributes: Iterable[int]
) -> ObjectSet:
    """Intersection of the upper-approximated attribute extents.

    This is the official attribute-set extent under the upper
    approximation (it equals the plain extent taken in the upper
    context); an object belongs iff it possibly carries every listed
    attribute individually.
    """
    require_same_universe(space, ctx)
    members = ctx.check_attribute_set(attributes)
    if not members:
        return frozenset(range(len(ctx.objects)))
    return frozenset.intersection(
        *(upper_approx_set(space, ctx.columns[m]) for m in members)
    )


def extent_upper_strict(
    space: ApproximationSpace, ctx: FormalContext, attributes: Iterable[int]
) -> ObjectSet:
    """Upper approximation of the plain attribute-set extent.

    Always contained in :func:`extent_upper_free`: it only keeps blocks
    that meet the combined extent, not blocks meeting each individual
    extent.
    """
    require_same_universe(space, ctx)
    return upper_approx_set(space, derive_extent(ctx, attributes))


def extent_lower(
    space: ApproximationSpace, ctx: FormalContext, attributes: Iterable[int]
) -> ObjectSet:
    """Attribute-set extent under the lower approximation.

    Intersecting the lowered columns and lowering the intersected extent
    coincide, so there is a single lower variant.
    """
    require_same_universe(space, ctx)
    members = ctx.check_attribute_set(attributes)
    if not members:
        return frozenset(range(len(ctx.objects)))
    return frozenset.intersection(
        *(lower_approx_set(space, ctx.columns[m]) for m in members)
    )


def _resolve_object(ctx: FormalContext, obj: int | str) -> int:
    if isinstance(obj, str):
        return ctx.object_index(obj)
    if not 0 <= obj < len(ctx.objects):
        raise InvalidSetError(f"object index {obj!r} out of range")
    return obj


def possibly_has(
    space: ApproximationSpace,
    ctx: FormalContext,
    obj: int | str,
    attributes: Iterable[int],
) -> bool:
    """Whether the object possibly has every attribute in the set."""
    return _resolve_object(ctx, obj) in extent_upper_free(space, ctx, attributes)


def certainly_has(
    space: ApproximationSpace,
    ctx: FormalContext,
    obj: int | str,
    attributes: Iterable[int],
) -> bool:
    """Whether the object certainly has every attribute in the set."""
    return _resolve_object(ctx, obj) in extent_lower(space, ctx, attributes)


def _require_same_shape(first: FormalContext, second: FormalContext) -> None:
    if first.objects != second.objects or first.attributes != second.attributes:
        raise ShapeMismatchError("contexts must share both object and attribute lists")


def relation_subset(first: FormalContext, second: FormalContext) -> bool:
    """Incidence-wise containment of two same-shape contexts."""
    _require_same_shape(first, second)
    return all(a <= b for a, b in zip(first.rows, second.rows))


def context_order(
    space: ApproximationSpace,
    first: FormalContext,
    second: FormalContext,
    mode: OrderMode,
) -> bool:
    """Preorder contexts through their approximations.

    ``upper`` compares upper approximations (Smyth), ``lower`` compares
    lower approximations (Hoare), and ``rough`` requires both (Milner).
    All three are relative to the fixed partition ``space``.
    """
    if mode not in _MODES:
        raise ValueError(f"unknown order mode {mode!r}")
    _require_same_shape(first, second)
    require_same_universe(space, first)
    ok = True
    if mode in ("upper", "rough"):
        ok = relation_subset(upper_context(space, first), upper_context(space, second))
    if ok and mode in ("lower", "rough"):
        ok = relation_subset(lower_context(space, first), lower_context(space, second))
    return ok


def contexts_roughly_equal(
    space: ApproximationSpace, first: FormalContext, second: FormalContext
) -> bool:
    """Whether both approximations of the two contexts coincide exactly."""
    _require_same_shape(first, second)
    require_same_universe(space, first)
    return upper_context(space, first) == upper_context(space, second) and lower_context(
        space, first
    ) == lower_context(space, second)


@dataclass(frozen=True, eq=False)
class RoughFormalContext:
    """A context bundled with its two definable approximations.

    All contexts sharing both approximations form one rough context, so
    the (lower, upper) pair is the canonical representative of the whole
    class and equality compares exactly that pair.
    """

    space: ApproximationSpace
    representative: FormalContext
    upper: FormalContext
    lower: FormalContext

    def __post_init__(self) -> None:
        require_same_universe(self.space, self.representative)
        if not (
            relation_subset(self.lower, self.representative)
            and relation_subset(self.representative, self.upper)
        ):
            raise ValueError("approximations do not sandwich the representative context")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RoughFormalContext):
            return NotImplemented
        return self.upper == other.upper and self.lower == other.lower

    def __hash__(self) -> int:
        return hash((self.upper, self.lower))


def rough_context(space: ApproximationSpace, ctx: FormalContext) -> RoughFormalContext:
    """Canonical representation of the class of contexts roughly equal to ``ctx``."""
    return RoughFormalContext(
        space, ctx, upper_context(space, ctx), lower_context(space, ctx)
    )
