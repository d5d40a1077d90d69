"""Assembly of the machine-readable analysis report."""

from __future__ import annotations

from typing import Sequence

from .concepts import (
    ConceptApproximationMaps,
    approximation_maps,
    indiscernibility_kernels,
    rough_concept_classes,
)
from .context import ApproximationSpace, FormalContext, definable_attributes
from .errors import UndefinedMeasureError
from .lattice import DEFAULT_MAX_CONCEPTS, ConceptLattice
from .rules import Implication, certain_rule, implication_holds, possible_rule, rough_measure


def _context_dict(ctx: FormalContext) -> dict:
    return {
        "objects": list(ctx.objects),
        "attributes": list(ctx.attributes),
        "incidence": [[ctx.objects[g], ctx.attributes[m]] for g, m in ctx.pairs()],
    }


def _lattice_dict(lat: ConceptLattice) -> dict:
    ctx = lat.context
    return {
        "concepts": [
            {
                "index": concept.index,
                "extent": list(ctx.object_names(concept.extent)),
                "intent": list(ctx.attribute_names(concept.intent)),
            }
            for concept in lat.concepts
        ],
        "covers": [[low, high] for low, high in lat.covers],
    }


def _rule_dict(
    space: ApproximationSpace, ctx: FormalContext, implication: Implication
) -> dict:
    try:
        measure = rough_measure(ctx, implication)
        measure_dict = {
            "numerator": measure.numerator,
            "denominator": measure.denominator,
            "value": str(measure.value),
        }
    except UndefinedMeasureError:
        measure_dict = None
    return {
        "premise": list(ctx.attribute_names(implication.premise)),
        "conclusion": list(ctx.attribute_names(implication.conclusion)),
        "holds": implication_holds(ctx, implication),
        "certain": certain_rule(space, ctx, implication),
        "possible": possible_rule(space, ctx, implication),
        "measure": measure_dict,
    }


def build_report(
    space: ApproximationSpace,
    ctx: FormalContext,
    rules: Sequence[Implication] = (),
    max_concepts: int = DEFAULT_MAX_CONCEPTS,
) -> dict:
    """Full analysis of a context under an approximation space, as plain data.

    The report is self-contained: sets appear as name arrays ordered by
    the input order, concepts are listed with their canonical index, and
    every index elsewhere in the report resolves into those listings.
    """
    maps: ConceptApproximationMaps = approximation_maps(space, ctx, max_concepts)
    possibility, necessity = indiscernibility_kernels(maps)
    return {
        "context": _context_dict(ctx),
        "space": {
            "blocks": [[ctx.objects[g] for g in sorted(block)] for block in space.blocks]
        },
        "definable_attributes": list(ctx.attribute_names(definable_attributes(space, ctx))),
        "approximations": {
            "upper": _context_dict(maps.upper.context),
            "lower": _context_dict(maps.lower.context),
        },
        "lattices": {
            "base": _lattice_dict(maps.base),
            "upper": _lattice_dict(maps.upper),
            "lower": _lattice_dict(maps.lower),
        },
        "maps": {"to_upper": list(maps.to_upper), "to_lower": list(maps.to_lower)},
        "kernels": {
            "possibility": [list(fiber) for fiber in possibility],
            "necessity": [list(fiber) for fiber in necessity],
        },
        "rough_classes": [
            {
                "members": list(cls.members),
                "upper": cls.upper_image.index,
                "lower": cls.lower_image.index,
            }
            for cls in rough_concept_classes(maps)
        ],
        "rules": [_rule_dict(space, ctx, implication) for implication in rules],
    }
