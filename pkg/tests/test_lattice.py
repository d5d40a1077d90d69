"""Concept enumeration, order, meets/joins, and the covering relation."""

from __future__ import annotations

import itertools
import random

import pytest

from roughconcepts import (
    ConceptLimitError,
    FormalContext,
    LatticeMismatchError,
    concept_leq,
    covering_relation,
    derive_extent,
    derive_intent,
    enumerate_concepts,
    lattice_join,
    lattice_meet,
)

from conftest import aset, oset, random_context


def brute_force_concept_count(ctx: FormalContext) -> int:
    """Closed attribute sets counted over all 2^|M| subsets."""
    n_m = len(ctx.attributes)
    count = 0
    for mask in range(1 << n_m):
        attrs = frozenset(m for m in range(n_m) if mask >> m & 1)
        closed = derive_intent(ctx, derive_extent(ctx, attrs))
        if closed == attrs:
            count += 1
    return count


def brute_force_covers(lat) -> set[tuple[int, int]]:
    """O(n^3) transitive reduction of the extent-inclusion order."""
    n = len(lat)
    less = [[lat[i].extent < lat[j].extent for j in range(n)] for i in range(n)]
    covers = set()
    for i in range(n):
        for j in range(n):
            if less[i][j] and not any(less[i][k] and less[k][j] for k in range(n)):
                covers.add((i, j))
    return covers


# ── enumeration ───────────────────────────────────────────────────────


def test_living_has_19_concepts(living):
    assert len(enumerate_concepts(living)) == 19


def test_upper_and_lower_counts(living_upper, living_lower):
    assert len(enumerate_concepts(living_upper)) == 9
    assert len(enumerate_concepts(living_lower)) == 10


def test_empty_context_single_concept():
    lat = enumerate_concepts(FormalContext((), (), ()))
    assert len(lat) == 1
    assert lat.top.extent == frozenset() and lat.top.intent == frozenset()


def test_every_concept_is_closed(living):
    lat = enumerate_concepts(living)
    for concept in lat:
        assert derive_intent(living, concept.extent) == concept.intent
        assert derive_extent(living, concept.intent) == concept.extent


def test_count_matches_brute_force(living):
    assert len(enumerate_concepts(living)) == brute_force_concept_count(living)
    rng = random.Random(99)
    for _ in range(20):
        ctx = random_context(rng, 6, 8)
        assert len(enumerate_concepts(ctx)) == brute_force_concept_count(ctx)


def test_canonical_order(living):
    lat = enumerate_concepts(living)
    assert lat.top.extent == frozenset(range(8))
    assert lat.bottom.intent == frozenset(range(9))
    sizes = [len(c.extent) for c in lat]
    assert sizes == sorted(sizes, reverse=True)
    assert [c.index for c in lat] == list(range(19))


def test_attribute_and_object_concepts_present(living):
    lat = enumerate_concepts(living)
    for m in range(len(living.attributes)):
        extent = derive_extent(living, frozenset({m}))
        lat.concept_with_extent(extent)  # raises KeyError if missing
    for g in range(len(living.objects)):
        extent = derive_extent(living, derive_intent(living, frozenset({g})))
        lat.concept_with_extent(extent)


def test_concept_cap(living):
    with pytest.raises(ConceptLimitError):
        enumerate_concepts(living, max_concepts=3)


# ── order ────────────────────────────────────────────────────────────


def test_concept_leq_examples(living):
    lat = enumerate_concepts(living)
    b2 = lat.concept_with_extent(oset(living, "Br Fr Dg"))
    b6 = lat.concept_with_extent(oset(living, "Fr Dg"))
    assert concept_leq(b6, b2)
    assert concept_leq(b2, b2)
    assert not concept_leq(b2, b6)
    assert concept_leq(b6, b2) == (b2.intent <= b6.intent)


def test_concept_leq_lattice_mismatch(living, living_upper):
    base = enumerate_concepts(living)
    other = enumerate_concepts(living_upper)
    with pytest.raises(LatticeMismatchError):
        concept_leq(base.top, other.top)


# ── meet and join ──────────────────────────────────────────────────────


def test_meet_join_extremes(living):
    lat = enumerate_concepts(living)
    assert lattice_meet(lat, lat.concepts) == lat.bottom
    assert lattice_join(lat, lat.concepts) == lat.top
    assert lattice_meet(lat, ()) == lat.top
    assert lattice_join(lat, ()) == lat.bottom
    for concept in lat:
        assert lattice_meet(lat, [concept]) == concept
        assert lattice_join(lat, [concept]) == concept


def test_meet_join_examples(living):
    lat = enumerate_concepts(living)
    b1 = lat.concept_with_extent(oset(living, "Le Br Fr Dg"))
    b5 = lat.concept_with_extent(oset(living, "Fr Dg Rd Bn Mz"))
    assert lattice_meet(lat, [b1, b5]).extent == oset(living, "Fr Dg")
    b7 = lat.concept_with_extent(oset(living, "Dg"))
    b16 = lat.concept_with_extent(oset(living, "Fr"))
    join = lattice_join(lat, [b7, b16])
    assert join.extent == oset(living, "Fr Dg")
    assert join.intent == aset(living, "nw ll mo lb")


def test_meet_join_laws_on_living(living):
    lat = enumerate_concepts(living)
    rng = random.Random(7)
    sample = rng.sample(list(lat.concepts), 8)
    for x, y in itertools.combinations(sample, 2):
        meet = lattice_meet(lat, [x, y])
        join = lattice_join(lat, [x, y])
        assert meet == lattice_meet(lat, [y, x])
        assert join == lattice_join(lat, [y, x])
        assert concept_leq(meet, x) and concept_leq(meet, y)
        assert concept_leq(x, join) and concept_leq(y, join)
        # absorption
        assert lattice_join(lat, [x, meet]) == x
        assert lattice_meet(lat, [x, join]) == x
        # greatest lower / least upper bound against all candidates
        for z in lat:
            if concept_leq(z, x) and concept_leq(z, y):
                assert concept_leq(z, meet)
            if concept_leq(x, z) and concept_leq(y, z):
                assert concept_leq(join, z)
    for x, y, z in itertools.combinations(sample, 3):
        assert lattice_meet(lat, [x, lattice_meet(lat, [y, z])]) == lattice_meet(lat, [x, y, z])
        assert lattice_join(lat, [x, lattice_join(lat, [y, z])]) == lattice_join(lat, [x, y, z])


def test_meet_rejects_foreign_concepts(living, living_upper):
    lat = enumerate_concepts(living)
    other = enumerate_concepts(living_upper)
    with pytest.raises(LatticeMismatchError):
        lattice_meet(lat, [other.top])


# ── covering relation ─────────────────────────────────────────────────────


def test_covers_of_limbed_land_organisms(living):
    lat = enumerate_concepts(living)
    b6 = lat.concept_with_extent(oset(living, "Fr Dg"))
    uppers = {lat[j].extent for i, j in lat.covers if i == b6.index}
    assert uppers == {oset(living, "Br Fr Dg"), oset(living, "Fr Dg Rd Bn Mz")}


def test_two_element_chain_single_cover():
    ctx = FormalContext(("a",), ("m",), (frozenset(),))
    lat = enumerate_concepts(ctx)
    assert len(lat) == 2
    assert covering_relation(lat) == [(1, 0)]


def test_covers_match_brute_force(living):
    lat = enumerate_concepts(living)
    assert set(covering_relation(lat)) == brute_force_covers(lat)
    rng = random.Random(123)
    for _ in range(10):
        ctx = random_context(rng, 5, 5)
        lat = enumerate_concepts(ctx)
        assert set(covering_relation(lat)) == brute_force_covers(lat)
