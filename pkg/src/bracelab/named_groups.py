"""Constructors for the small groups used throughout the test corpus and catalog.

Every constructor returns a validated FiniteGroup on {0..n-1} with the
identity at 0.
"""

from __future__ import annotations

from .groups import validate_group


def cyclic_group(n):
    return validate_group([[(a + b) % n for b in range(n)] for a in range(n)])


def direct_product(G, H):
    """Pairs (g, h) encoded g*|H|+h, componentwise product."""
    nh = H.n
    size = G.n * nh
    table = [[0] * size for _ in range(size)]
    for g1 in range(G.n):
        for h1 in range(nh):
            row = table[g1 * nh + h1]
            for g2 in range(G.n):
                for h2 in range(nh):
                    row[g2 * nh + h2] = G.table[g1][g2] * nh + H.table[h1][h2]
    return validate_group(table)


def klein_group():
    c2 = cyclic_group(2)
    return direct_product(c2, c2)


def elementary_abelian_2(k):
    """The k-fold direct product of the 2-element group (bitwise xor)."""
    n = 1 << k
    return validate_group([[a ^ b for b in range(n)] for a in range(n)])


def dihedral_group(n):
    """Order 2n; element i + n*j stands for (rotation^i, reflection^j).

    (r^i s^j)(r^k s^l) = r^(i + (-1)^j k) s^(j + l).
    """
    size = 2 * n
    table = [[0] * size for _ in range(size)]
    for i in range(n):
        for j in range(2):
            row = table[i + n * j]
            for k in range(n):
                for l in range(2):
                    rot = (i + (k if j == 0 else -k)) % n
                    row[k + n * l] = rot + n * ((j + l) % 2)
    return validate_group(table)


def quaternion_group():
    """Order 8: index s*4 + b with sign s and basis b in (1, i, j, k)."""
    basis = {
        (0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
        (1, 0): (0, 1), (1, 1): (1, 0), (1, 2): (0, 3), (1, 3): (1, 2),
        (2, 0): (0, 2), (2, 1): (1, 3), (2, 2): (1, 0), (2, 3): (0, 1),
        (3, 0): (0, 3), (3, 1): (0, 2), (3, 2): (1, 1), (3, 3): (1, 0),
    }
    table = [[0] * 8 for _ in range(8)]
    for s1 in range(2):
        for b1 in range(4):
            row = table[s1 * 4 + b1]
            for s2 in range(2):
                for b2 in range(4):
                    sign, b = basis[(b1, b2)]
                    row[s2 * 4 + b2] = ((s1 + s2 + sign) % 2) * 4 + b
    return validate_group(table)


def symmetric_group_3():
    """Order 6; same carrier as dihedral_group(3)."""
    return dihedral_group(3)
