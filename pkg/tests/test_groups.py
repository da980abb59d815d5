"""Group-table validation, invariants, and the product constructions."""

import pytest

from bracelab.errors import (
    MissingInverse,
    NoIdentityAtZero,
    NotAssociative,
    NotClosed,
    NotHomomorphic,
    OrderTooLarge,
)
from bracelab.groups import (
    ElementMap,
    conjugation_action,
    derived_subgroup,
    enumerate_automorphisms,
    group_center,
    is_homomorphism,
    semidirect_product,
    trivial_action,
    validate_action,
    validate_group,
)


def cyclic(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


S3 = [
    # row-major table of the symmetric group on 3 letters; elements are
    # e, (123), (132), (12), (13), (23) in that order
    [0, 1, 2, 3, 4, 5],
    [1, 2, 0, 4, 5, 3],
    [2, 0, 1, 5, 3, 4],
    [3, 5, 4, 0, 2, 1],
    [4, 3, 5, 1, 0, 2],
    [5, 4, 3, 2, 1, 0],
]


def test_c2_validates():
    g = validate_group([[0, 1], [1, 0]])
    assert g.n == 2
    assert g.inv == (0, 1)


def test_c4_validates():
    g = validate_group(cyclic(4))
    assert g.mul(1, 3) == 0
    assert g.inverse(1) == 3


def test_s3_validates_and_is_nonabelian():
    g = validate_group(S3)
    assert not g.is_abelian()
    assert g.mul(3, 1) != g.mul(1, 3)


def test_rejects_bad_identity():
    with pytest.raises(NoIdentityAtZero):
        validate_group([[1, 0], [0, 1]])


def test_rejects_out_of_range_entry():
    with pytest.raises(NotClosed) as err:
        validate_group([[0, 1], [1, 7]])
    assert err.value.witness == (1, 1)


def test_rejects_nonassociative_or_no_inverse():
    with pytest.raises((NotAssociative, MissingInverse)):
        validate_group([[0, 1], [1, 1]])


def test_rejects_latin_square_that_is_not_a_group():
    # a quasigroup of order 5 with identity: rows/columns are permutations
    # but associativity fails
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(NotAssociative) as err:
        validate_group(table)
    a, b, c = err.value.witness
    t = table
    assert t[t[a][b]][c] != t[a][t[b][c]]


def test_center_abelian_is_everything():
    assert group_center(validate_group(cyclic(4))) == [0, 1, 2, 3]


def test_center_s3_is_trivial():
    assert group_center(validate_group(S3)) == [0]


def test_derived_subgroup_abelian_trivial():
    assert derived_subgroup(validate_group(cyclic(6))) == [0]


def test_derived_subgroup_s3():
    assert derived_subgroup(validate_group(S3)) == [0, 1, 2]


def test_automorphisms_c2():
    assert enumerate_automorphisms(validate_group(cyclic(2))) == [(0, 1)]


def test_automorphisms_c4():
    auts = enumerate_automorphisms(validate_group(cyclic(4)))
    assert auts == [(0, 1, 2, 3), (0, 3, 2, 1)]


def test_automorphisms_klein_four():
    klein = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
    auts = enumerate_automorphisms(validate_group(klein))
    assert len(auts) == 6


def test_automorphism_set_is_a_group():
    g = validate_group(S3)
    auts = enumerate_automorphisms(g)
    aut_set = set(auts)
    for p in auts:
        q = [0] * g.n
        for i, v in enumerate(p):
            q[v] = i
        assert tuple(q) in aut_set
        for r in auts:
            assert tuple(p[r[i]] for i in range(g.n)) in aut_set


def test_automorphism_bound():
    with pytest.raises(OrderTooLarge):
        enumerate_automorphisms(validate_group(cyclic(13)))


def test_validate_action_rejects_non_homomorphic_images():
    c2 = validate_group(cyclic(2))
    c4 = validate_group(cyclic(4))
    flip = (0, 3, 2, 1)
    # image of 1*1 = 0 should be flip . flip = identity; lie about it
    with pytest.raises(NotHomomorphic):
        validate_action(c2, c4, [flip, flip])


def test_conjugation_action_valid_for_s3():
    act = conjugation_action(validate_group(S3))
    assert act.perm(0) == (0, 1, 2, 3, 4, 5)


def test_semidirect_trivial_action_is_direct_product():
    c2 = validate_group(cyclic(2))
    c3 = validate_group(cyclic(3))
    g = semidirect_product(c2, c3, trivial_action(c3, c2))
    for h1 in range(2):
        for k1 in range(3):
            for h2 in range(2):
                for k2 in range(3):
                    got = g.table[h1 * 3 + k1][h2 * 3 + k2]
                    assert got == ((h1 + h2) % 2) * 3 + (k1 + k2) % 3


def test_semidirect_c2_on_c4_by_inversion_is_dihedral():
    c2 = validate_group(cyclic(2))
    c4 = validate_group(cyclic(4))
    inversion = (0, 3, 2, 1)
    phi = validate_action(c2, c4, [(0, 1, 2, 3), inversion])
    d4 = semidirect_product(c4, c2, phi)
    assert d4.n == 8
    assert not d4.is_abelian()
    assert len(group_center(d4)) == 2


def test_is_homomorphism():
    c4 = validate_group(cyclic(4))
    assert is_homomorphism(ElementMap((0, 1, 2, 3)), c4, c4)
    assert is_homomorphism(ElementMap((0, 0, 0, 0)), c4, c4)
    assert is_homomorphism(ElementMap((0, 3, 2, 1)), c4, c4)
    assert not is_homomorphism(ElementMap((0, 2, 1, 3)), c4, c4)


def test_inverse_involution():
    g = validate_group(S3)
    for a in range(g.n):
        assert g.mul(a, g.inverse(a)) == 0
        assert g.inverse(g.inverse(a)) == a
