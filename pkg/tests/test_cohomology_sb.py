"""Skew-brace second cohomology: triplets, cocycles, classes, extensions."""

import json
import pathlib

import pytest

from bracelab.braces import trivial_brace, validate_brace
from bracelab.cohomology.skew_brace import (
    SB2Cochain,
    add_cochains,
    enumerate_sb_coboundaries,
    enumerate_sb_cocycles,
    extension_from_sb_cocycle,
    h2_sb,
    is_sb_cocycle,
    is_sb_coboundary,
    sb_coboundary,
    sb_cocycle_failure,
    sb_cocycle_from_extension,
    triplet_from_extension,
    trivial_triplet,
    validate_good_triplet,
    zero_cochain,
)
from bracelab.errors import (
    CoeffNotAbelian,
    NotGoodTriplet,
    SearchTooLarge,
)
from bracelab.groups import ElementMap
from bracelab.named_groups import cyclic_group, symmetric_group_3

ORACLE = json.loads(
    (pathlib.Path(__file__).parent.parent / "scripts" / "h2_oracle_output.json")
    .read_text()
)


def signed_cyclic_brace(n):
    add = [[(a + b) % n for b in range(n)] for a in range(n)]
    mul = [[(a + (-1) ** a * b) % n for b in range(n)] for a in range(n)]
    return validate_brace(add, mul)


def c2_setting():
    return trivial_triplet(trivial_brace(cyclic_group(2)), cyclic_group(2))


def test_trivial_triplet_validates_everywhere():
    for M in (trivial_brace(cyclic_group(2)), signed_cyclic_brace(4)):
        for I in (cyclic_group(2), cyclic_group(3)):
            t = trivial_triplet(M, I)
            assert t.base is M and t.coeff is I


def test_nonabelian_coefficients_rejected():
    with pytest.raises(CoeffNotAbelian):
        trivial_triplet(trivial_brace(cyclic_group(2)), symmetric_group_3())


def test_broken_action_law_reported():
    M = trivial_brace(cyclic_group(4))
    I = cyclic_group(4)
    ident = tuple(range(4))
    neg = (0, 3, 2, 1)
    flat = (ident,) * 4
    with pytest.raises(NotGoodTriplet):
        validate_good_triplet(M, I, flat, (ident, neg, ident, ident), flat)


def test_compatibility_violation_carries_witness():
    # trivial xi and zeta but eps = negation on C3 breaks the first identity
    M = trivial_brace(cyclic_group(2))
    I = cyclic_group(3)
    ident = tuple(range(3))
    neg = (0, 2, 1)
    flat = (ident, ident)
    with pytest.raises(NotGoodTriplet) as err:
        validate_good_triplet(M, I, flat, flat, (ident, neg))
    assert err.value.witness is not None


def test_c2_counts_match_the_frozen_oracle():
    t = c2_setting()
    cocycles = enumerate_sb_cocycles(t)
    boundaries = enumerate_sb_coboundaries(t)
    classes = h2_sb(t)
    pinned = ORACLE["skew_brace"]["trivial_triplet"]
    assert len(cocycles) == pinned["Z2"]
    assert len(boundaries) == pinned["B2"]
    assert len(classes) == pinned["H2"]


def test_zero_cochain_is_cocycle_with_zero_witness():
    t = c2_setting()
    c = zero_cochain(2)
    assert is_sb_cocycle(t, c)
    theta = is_sb_coboundary(t, c)
    assert tuple(theta) == (0, 0)


def test_g_spike_is_a_cocycle_but_not_a_coboundary():
    t = c2_setting()
    c = SB2Cochain([[0, 0], [0, 1]], [[0, 0], [0, 0]])
    assert is_sb_cocycle(t, c)
    assert is_sb_coboundary(t, c) is None


def test_unnormalized_cochain_reported():
    t = c2_setting()
    c = SB2Cochain([[1, 0], [0, 0]], [[0, 0], [0, 0]])
    kind, _ = sb_cocycle_failure(t, c)
    assert kind == "normalization"


def test_forward_coboundaries_are_cocycles_and_invertible():
    B = signed_cyclic_brace(4)
    I = cyclic_group(2)
    t = trivial_triplet(B, I)
    for tail in ((0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 1)):
        theta = (0,) + tail
        c = sb_coboundary(t, theta)
        assert is_sb_cocycle(t, c)
        found = is_sb_coboundary(t, c)
        assert found is not None
        assert sb_coboundary(t, tuple(found)) == c


def test_cocycles_closed_under_addition():
    t = c2_setting()
    cocycles = enumerate_sb_cocycles(t)
    flat = {c.flatten() for c in cocycles}
    bflat = {c.flatten() for c in enumerate_sb_coboundaries(t)}
    assert bflat <= flat
    for a in cocycles:
        for b in cocycles:
            assert add_cochains(t.coeff, a, b).flatten() in flat


def test_extension_from_zero_cochain_is_direct_product():
    t = c2_setting()
    E, embed, project = extension_from_sb_cocycle(t, zero_cochain(2))
    assert E.n == 4
    assert E.is_trivial()
    for y in range(2):
        assert project(embed(y)) == 0


def test_extension_round_trip_is_exact_for_canonical_section():
    t = c2_setting()
    for c in enumerate_sb_cocycles(t):
        E, embed, project = extension_from_sb_cocycle(t, c)
        section = ElementMap([m * 2 for m in range(2)])
        back = sb_cocycle_from_extension(E, embed, project, section)
        assert back == c
        trip = triplet_from_extension(E, embed, project, section)
        assert trip.xi.images == t.xi.images
        assert trip.zeta.images == t.zeta.images
        assert trip.eps.images == t.eps.images


def test_twisted_section_of_direct_product_yields_coboundary():
    M = trivial_brace(cyclic_group(2))
    I = cyclic_group(4)
    t = trivial_triplet(M, I)
    E, embed, project = extension_from_sb_cocycle(t, zero_cochain(2))
    twisted = ElementMap([0, 1 * 4 + 1])  # s(1) = (1, 1)
    c = sb_cocycle_from_extension(E, embed, project, twisted)
    assert c.g[1][1] == 2
    theta = is_sb_coboundary(t, c)
    assert theta is not None and sb_coboundary(t, tuple(theta)) == c


def test_triplet_from_extension_is_section_independent():
    M = trivial_brace(cyclic_group(2))
    I = cyclic_group(4)
    t = trivial_triplet(M, I)
    E, embed, project = extension_from_sb_cocycle(t, zero_cochain(2))
    canonical = ElementMap([0, 4])
    twisted = ElementMap([0, 5])
    a = triplet_from_extension(E, embed, project, canonical)
    b = triplet_from_extension(E, embed, project, twisted)
    assert a.xi.images == b.xi.images
    assert a.zeta.images == b.zeta.images
    assert a.eps.images == b.eps.images


def test_search_bounds_raise():
    big = trivial_triplet(trivial_brace(cyclic_group(12)), cyclic_group(4))
    with pytest.raises(SearchTooLarge):
        is_sb_coboundary(big, zero_cochain(12))
    with pytest.raises(SearchTooLarge):
        h2_sb(trivial_triplet(signed_cyclic_brace(4), cyclic_group(4)))


def test_h2_on_b4_with_c2_coefficients():
    # a 2^18-candidate enumeration is over the default cap; raise it locally
    t = trivial_triplet(signed_cyclic_brace(4), cyclic_group(2))
    with pytest.raises(SearchTooLarge):
        h2_sb(t)
