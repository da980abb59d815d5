"""Annihilators, commutators, quotients, and isoclinism lifting to squares."""

import pytest

from bracelab.braces import is_brace_homomorphism, trivial_brace, validate_brace
from bracelab.errors import (
    NotAnIdeal,
    OrderTooLarge,
    PreconditionFails,
    SearchTooLarge,
)
from bracelab.groups import (
    ElementMap,
    derived_subgroup,
    group_center,
    identity_map,
    pair_index,
)
from bracelab.isoclinism import (
    IsoclinismWitness,
    annihilator,
    brace_commutator,
    check_isoclinism,
    circle_center,
    find_isoclinism,
    fix_lambda,
    isoclinism_failure,
    isoclinism_frame,
    quotient_brace,
    square_annihilator_hypothesis,
    square_isoclinism,
    sub_brace,
    validate_ideal,
)
from bracelab.named_groups import (
    cyclic_group,
    dihedral_group,
    direct_product,
    klein_group,
    quaternion_group,
    symmetric_group_3,
)
from bracelab.squares import square_brace

C2 = cyclic_group(2)
C4 = cyclic_group(4)
D4 = dihedral_group(4)
Q8 = quaternion_group()
S3 = symmetric_group_3()

ZB4 = validate_brace(
    C4.table, [[(n + (-1) ** n * m) % 4 for m in range(4)] for n in range(4)]
)
C8 = cyclic_group(8)
ZB8 = validate_brace(
    C8.table, [[(n + (-1) ** n * m) % 8 for m in range(8)] for n in range(8)]
)
PB8 = validate_brace(
    C8.table, [[(n + pow(3, n, 8) * m) % 8 for m in range(8)] for n in range(8)]
)

SMALL_BRACES = [
    trivial_brace(C2),
    trivial_brace(C4),
    trivial_brace(klein_group()),
    trivial_brace(S3),
    trivial_brace(D4),
    trivial_brace(Q8),
    ZB4,
    ZB8,
    PB8,
]


def test_annihilator_of_trivial_brace_is_the_group_center():
    for G in (D4, Q8, S3):
        assert annihilator(trivial_brace(G)).elements == tuple(group_center(G))


def test_annihilator_examples():
    assert annihilator(ZB4).elements == (0, 2)
    assert annihilator(trivial_brace(cyclic_group(1))).elements == (0,)


def test_annihilator_elements_commute_with_everything():
    for B in SMALL_BRACES:
        for a in annihilator(B).elements:
            for b in range(B.n):
                assert B.circ(a, b) == B.circ(b, a) == B.dot(a, b) == B.dot(b, a)


def test_commutator_examples():
    assert brace_commutator(trivial_brace(C4)).elements == (0,)
    assert brace_commutator(ZB4).elements == (0, 2)
    # for the trivial brace this is the derived subgroup; rotations for S3
    assert brace_commutator(trivial_brace(S3)).elements == (0, 1, 2)


def test_commutator_sub_brace_of_trivial_s3_is_addition_mod_3():
    comm = sub_brace(trivial_brace(S3), brace_commutator(trivial_brace(S3)).elements)
    assert comm.brace.add.table == ((0, 1, 2), (1, 2, 0), (2, 0, 1))
    assert tuple(comm.embed) == (0, 1, 2)


def test_validate_ideal_rejections():
    with pytest.raises(NotAnIdeal):
        validate_ideal(trivial_brace(S3), [1, 2])  # missing the identity
    with pytest.raises(NotAnIdeal):
        validate_ideal(trivial_brace(S3), [0, 3])  # reflection line, not normal
    with pytest.raises(NotAnIdeal):
        validate_ideal(ZB4, [0, 1])  # not closed under addition


def test_quotient_by_the_zero_ideal_reproduces_the_brace():
    q = quotient_brace(ZB4, [0])
    assert q.brace == ZB4
    assert tuple(q.project) == (0, 1, 2, 3)


def test_quotient_by_the_annihilator_and_by_everything():
    assert quotient_brace(ZB4, annihilator(ZB4)).brace.n == 2
    assert quotient_brace(ZB4, range(4)).brace.n == 1


def test_quotient_projection_is_a_homomorphism_sending_zero_to_zero():
    for B in SMALL_BRACES:
        q = quotient_brace(B, annihilator(B))
        assert is_brace_homomorphism(q.project, B, q.brace)
        assert q.project(0) == 0
        assert all(q.project(r) == c for c, r in enumerate(q.section))


def test_quotient_rejects_an_ideal_of_a_different_brace():
    with pytest.raises(NotAnIdeal):
        quotient_brace(ZB4, annihilator(trivial_brace(C4)))


def test_frames_build_for_all_small_braces():
    # construction itself asserts both pairings are constant on cosets
    for B in SMALL_BRACES:
        frame = isoclinism_frame(B)
        k = frame.commutator.brace.n
        assert all(0 <= v < k for row in frame.theta for v in row)
        assert all(0 <= v < k for row in frame.theta_star for v in row)


def test_self_isoclinism_via_identity_witness():
    w = IsoclinismWitness(identity_map(2), identity_map(2))
    assert check_isoclinism(ZB4, ZB4, w)


def test_dihedral_and_quaternion_trivial_braces_are_isoclinic():
    a, b = trivial_brace(D4), trivial_brace(Q8)
    w = find_isoclinism(a, b)
    assert w is not None
    assert check_isoclinism(a, b, w)


def test_perturbed_commutator_map_is_reported():
    a, b = trivial_brace(D4), trivial_brace(Q8)
    w = find_isoclinism(a, b)
    bad = IsoclinismWitness(w.xi1, ElementMap((1, 0)))
    failure = isoclinism_failure(a, b, bad)
    assert failure is not None and failure[0] == "xi2"
    assert not check_isoclinism(a, b, bad)


def test_find_isoclinism_returns_none_on_size_obstruction():
    assert find_isoclinism(trivial_brace(S3), trivial_brace(D4)) is None


def test_find_isoclinism_on_equal_braces_returns_the_identity():
    w = find_isoclinism(ZB4, ZB4)
    assert tuple(w.xi1) == (0, 1) and tuple(w.xi2) == (0, 1)


def test_find_isoclinism_raises_when_the_search_exceeds_the_bound():
    big = trivial_brace(direct_product(S3, S3))  # centerless, quotient order 36
    with pytest.raises(SearchTooLarge):
        find_isoclinism(big, big)


def test_square_hypothesis_examples():
    assert square_annihilator_hypothesis(trivial_brace(D4))
    assert square_annihilator_hypothesis(trivial_brace(C2))
    sq = square_brace(trivial_brace(D4)).brace
    center = group_center(D4)
    assert annihilator(sq).elements == tuple(
        sorted(pair_index(a, b, 8) for a in center for b in center)
    )


def test_square_hypothesis_rejects_orders_past_the_bound():
    with pytest.raises(OrderTooLarge):
        square_annihilator_hypothesis(trivial_brace(cyclic_group(9)))


def test_annihilator_product_embeds_in_the_square_annihilator():
    for B in SMALL_BRACES:
        ann = annihilator(B).elements
        product = {pair_index(a1, a2, B.n) for a1 in ann for a2 in ann}
        assert product <= set(annihilator(square_brace(B).brace).elements)


def test_square_annihilator_lies_in_fixed_points_cross_circle_center():
    for B in SMALL_BRACES:
        fixed = set(fix_lambda(B))
        central = set(circle_center(B))
        for e in annihilator(square_brace(B).brace).elements:
            h, g = divmod(e, B.n)
            assert h in fixed and g in central


def test_square_additive_center_lies_in_fixed_points_cross_circle_center():
    for B in SMALL_BRACES:
        fixed = set(fix_lambda(B))
        central = set(circle_center(B))
        for e in group_center(square_brace(B).brace.add):
            h, g = divmod(e, B.n)
            assert h in fixed and g in central


def test_square_additive_derived_subgroup_splits_componentwise():
    for B in SMALL_BRACES:
        sq = square_brace(B).brace
        expected = {
            pair_index(a, g, B.n)
            for a in brace_commutator(B).elements
            for g in derived_subgroup(B.mul)
        }
        assert set(derived_subgroup(sq.add)) == expected


def test_coset_pairs_identify_square_quotient_with_quotient_square():
    for B in SMALL_BRACES:
        ann = annihilator(B).elements
        sq = square_brace(B).brace
        product = [pair_index(a1, a2, B.n) for a1 in ann for a2 in ann]
        q_sq = quotient_brace(sq, product)
        qb = quotient_brace(B, ann)
        target = square_brace(qb.brace).brace
        phi = []
        for rep in q_sq.section:
            a1, a2 = divmod(rep, B.n)
            phi.append(pair_index(qb.project(a1), qb.project(a2), qb.brace.n))
        assert sorted(phi) == list(range(target.n))
        assert is_brace_homomorphism(ElementMap(phi), q_sq.brace, target)


def test_square_isoclinism_of_dihedral_and_quaternion_braces():
    a, b = trivial_brace(D4), trivial_brace(Q8)
    w = find_isoclinism(a, b)
    verdict = square_isoclinism(a, b, w)
    assert verdict.isoclinic
    assert len(tuple(verdict.witness.xi1)) == 16
    assert len(tuple(verdict.witness.xi2)) == 4
    sq_a, sq_b = square_brace(a).brace, square_brace(b).brace
    assert check_isoclinism(sq_a, sq_b, verdict.witness)


def test_identity_witness_lifts_to_the_identity_on_squares():
    w = IsoclinismWitness(identity_map(4), identity_map(2))
    verdict = square_isoclinism(trivial_brace(D4), trivial_brace(D4), w)
    assert tuple(verdict.witness.xi1) == tuple(range(16))
    assert tuple(verdict.witness.xi2) == tuple(range(4))


def test_square_isoclinism_rejects_a_witness_that_is_not_an_isoclinism():
    bad = IsoclinismWitness(identity_map(4), ElementMap((1, 0)))
    with pytest.raises(PreconditionFails):
        square_isoclinism(trivial_brace(D4), trivial_brace(D4), bad)


def test_lifted_witnesses_compose_with_the_found_ones():
    # lifting the D4 -> Q8 witness and the Q8 -> D4 inverse witness round-trips
    a, b = trivial_brace(D4), trivial_brace(Q8)
    w = find_isoclinism(a, b)
    back = find_isoclinism(b, a)
    v_there = square_isoclinism(a, b, w).witness
    v_back = square_isoclinism(b, a, back).witness
    n1 = len(tuple(v_there.xi1))
    round1 = tuple(v_back.xi1(v_there.xi1(i)) for i in range(n1))
    assert sorted(round1) == list(range(n1))  # still a bijection
    n2 = len(tuple(v_there.xi2))
    round2 = tuple(v_back.xi2(v_there.xi2(i)) for i in range(n2))
    assert sorted(round2) == list(range(n2))
