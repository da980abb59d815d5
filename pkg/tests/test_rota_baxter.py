"""Rota-Baxter operators, relative RB groups, and the semi-direct transport."""

import pytest

from bracelab.braces import validate_brace
from bracelab.errors import (
    ActionInvalid,
    NotRRBHom,
    OrderTooLarge,
    RBAxiomFails,
    RRBAxiomFails,
)
from bracelab.groups import (
    ElementMap,
    conjugation_action,
    identity_map,
    pair_split,
    trivial_action,
)
from bracelab.named_groups import cyclic_group, symmetric_group_3
from bracelab.rota_baxter import (
    brace_from_rb,
    brace_from_rrb,
    descendent_circle,
    enumerate_rb,
    map_rrb_hom,
    rb_on_semidirect,
    rrb_from_brace,
    validate_rb,
    validate_rrb,
)


def signed_cyclic_brace(n):
    add = [[(a + b) % n for b in range(n)] for a in range(n)]
    mul = [[(a + (-1) ** a * b) % n for b in range(n)] for a in range(n)]
    return validate_brace(add, mul)


def test_zero_map_is_always_an_operator():
    for G in (cyclic_group(5), symmetric_group_3()):
        op = validate_rb(G, [0] * G.n)
        B = brace_from_rb(op)
        assert B.is_trivial()


def test_inversion_is_always_an_operator():
    # R(x)R(y) = x^-1 y^-1 = (yx)^-1 = R(x . x^-1 . y . x) on any group
    for G in (cyclic_group(4), symmetric_group_3()):
        op = validate_rb(G, G.inv)
        B = brace_from_rb(op)
        # the induced circle product is the opposite group
        for x in range(G.n):
            for y in range(G.n):
                assert B.circ(x, y) == G.table[y][x]
        assert B.is_trivial() == G.is_abelian()


def test_axiom_failure_carries_a_pair_witness():
    G = cyclic_group(4)
    with pytest.raises(RBAxiomFails) as err:
        validate_rb(G, [0, 1, 1, 1])
    x, y = err.value.witness
    r = [0, 1, 1, 1]
    inner = (x + r[x] + y - r[x]) % 4
    assert (r[x] + r[y]) % 4 != r[inner]


def test_enumerate_c2_finds_exactly_zero_and_identity():
    ops = enumerate_rb(cyclic_group(2))
    assert [tuple(op.map) for op in ops] == [(0, 0), (0, 1)]


def test_enumerate_rejects_large_groups():
    with pytest.raises(OrderTooLarge):
        enumerate_rb(cyclic_group(7))


def test_enumerated_operators_all_induce_braces():
    for G in (cyclic_group(3), cyclic_group(4), symmetric_group_3()):
        ops = enumerate_rb(G)
        assert ops, "zero map at minimum"
        maps = [tuple(op.map) for op in ops]
        assert maps == sorted(maps)
        for op in ops:
            B = brace_from_rb(op)
            # lambda agrees with conjugation by the R-image
            for x in range(G.n):
                for y in range(G.n):
                    assert B.lam(x, y) == G.conjugate(op.map(x), y)


def test_rrb_from_conjugation_matches_plain_rb():
    G = symmetric_group_3()
    op = validate_rb(G, G.inv)
    rrb = validate_rrb(G, G, conjugation_action(G), G.inv)
    assert brace_from_rrb(rrb) == brace_from_rb(op)


def test_rrb_from_brace_round_trips():
    B = signed_cyclic_brace(4)
    rrb = rrb_from_brace(B)
    assert tuple(rrb.r) == tuple(range(4))
    assert brace_from_rrb(rrb) == B


def test_trivial_action_forces_multiplicative_r():
    G = cyclic_group(4)
    with pytest.raises(RRBAxiomFails) as err:
        validate_rrb(G, G, trivial_action(G, G), [0, 1, 1, 1])
    h1, h2 = err.value.witness
    r = [0, 1, 1, 1]
    assert r[(h1 + h2) % 4] != (r[h1] + r[h2]) % 4


def test_bad_action_is_rejected():
    G = cyclic_group(2)
    H = cyclic_group(4)
    flip = (0, 3, 2, 1)
    with pytest.raises(ActionInvalid):
        validate_rrb(H, G, (tuple(range(4)), (0, 1, 3, 2)), [0, 0, 0, 0])
    # a well-formed non-example: images fine, law broken
    with pytest.raises(ActionInvalid):
        validate_rrb(H, G, (flip, flip), [0, 0, 0, 0])


def test_semidirect_operator_on_trivial_c2_pair():
    G = cyclic_group(2)
    rrb = validate_rrb(G, G, trivial_action(G, G), [0, 0])
    E, op = rb_on_semidirect(rrb)
    assert E.n == 4
    for x in range(4):
        h, g = pair_split(x, 2)
        assert pair_split(op.map(x), 2) == (0, (-g) % 2)


def test_semidirect_operator_from_signed_brace():
    rrb = rrb_from_brace(signed_cyclic_brace(4))
    E, op = rb_on_semidirect(rrb)
    assert E.n == 16
    # validate_rb already ran inside; spot-check the formula R~(h,g) = (0, g^-1 R(h))
    for x in range(16):
        h, g = pair_split(x, 4)
        assert pair_split(op.map(x), 4) == (0, rrb.g_group.table[rrb.g_group.inv[g]][h])


def test_descendent_circle_matches_brace_tables():
    rrb = rrb_from_brace(signed_cyclic_brace(4))
    assert descendent_circle(rrb, 1, 1) == 0
    B = brace_from_rrb(rrb)
    for a in range(4):
        for b in range(4):
            assert descendent_circle(rrb, a, b) == B.circ(a, b)
    trivial = validate_rrb(
        cyclic_group(3),
        cyclic_group(3),
        trivial_action(cyclic_group(3), cyclic_group(3)),
        [0, 0, 0],
    )
    assert descendent_circle(trivial, 1, 2) == 0


def test_identity_pair_transports_to_identity():
    rrb = rrb_from_brace(signed_cyclic_brace(4))
    f = map_rrb_hom(identity_map(4), identity_map(4), rrb, rrb)
    assert tuple(f) == tuple(range(16))


def test_zero_pair_into_trivial_target():
    src = rrb_from_brace(signed_cyclic_brace(4))
    c1 = cyclic_group(1)
    tgt = validate_rrb(c1, c1, trivial_action(c1, c1), [0])
    f = map_rrb_hom(ElementMap([0] * 4), ElementMap([0] * 4), src, tgt)
    assert tuple(f) == (0,) * 16


def test_non_intertwining_pair_is_rejected():
    B = signed_cyclic_brace(4)
    rrb = rrb_from_brace(B)
    # x -> 3x is an automorphism of both carriers of B4 but does not commute
    # with lambda unless paired correctly; pairing it with the identity breaks
    # the action law
    twist = ElementMap([0, 3, 2, 1])
    with pytest.raises(NotRRBHom):
        map_rrb_hom(twist, identity_map(4), rrb, rrb)
