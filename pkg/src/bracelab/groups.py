"""Finite groups as explicit Cayley tables on {0..n-1}, identity at index 0.

The table convention is ``table[i][j] = i * j``.  Validation is vectorized
with numpy (the associativity check compares the two triple-product cubes);
everything downstream trusts validated instances and works by plain index
lookups.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _search
from .errors import (
    ImageNotAutomorphism,
    MissingInverse,
    NoIdentityAtZero,
    NotAssociative,
    NotClosed,
    NotHomomorphic,
    OrderTooLarge,
)

AUTOMORPHISM_ORDER_BOUND = 12


class FiniteGroup:
    """A finite group given by its full multiplication table.

    Build instances through :func:`validate_group`; the constructor trusts
    its input and only precomputes inverses.
    """

    __slots__ = ("n", "table", "inv")

    def __init__(self, table):
        self.table = tuple(tuple(int(v) for v in row) for row in table)
        self.n = len(self.table)
        self.inv = tuple(row.index(0) for row in self.table)

    def mul(self, a, b):
        return self.table[a][b]

    def inverse(self, a):
        return self.inv[a]

    def elements(self):
        return range(self.n)

    def conjugate(self, g, x):
        """g x g^-1."""
        return self.table[self.table[g][x]][self.inv[g]]

    def is_abelian(self):
        return all(
            self.table[a][b] == self.table[b][a]
            for a in range(self.n)
            for b in range(a + 1, self.n)
        )

    def as_array(self):
        return np.asarray(self.table, dtype=np.int64)

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"FiniteGroup(order={self.n})"


@dataclass(frozen=True)
class ElementMap:
    """A set map between carriers, stored as the tuple of images."""

    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))

    @property
    def domain_order(self):
        return len(self.values)

    def __call__(self, i):
        return self.values[i]

    def __iter__(self):
        return iter(self.values)


def identity_map(n):
    return ElementMap(tuple(range(n)))


def validate_group(table):
    """Check every group axiom on a square index table and wrap it.

    Raises NotClosed, NoIdentityAtZero, NotAssociative, or MissingInverse,
    each naming the first violating tuple.
    """
    arr = np.asarray(table, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise NotClosed(f"expected a nonempty square table, got shape {arr.shape}")
    n = arr.shape[0]
    bad = (arr < 0) | (arr >= n)
    if bad.any():
        i, j = map(int, np.argwhere(bad)[0])
        raise NotClosed(
            f"entry ({i},{j}) = {int(arr[i, j])} outside 0..{n - 1}", witness=(i, j)
        )
    rng = np.arange(n)
    if not np.array_equal(arr[0], rng):
        j = int(np.argwhere(arr[0] != rng)[0][0])
        raise NoIdentityAtZero(f"table[0][{j}] = {int(arr[0, j])} != {j}", witness=(0, j))
    if not np.array_equal(arr[:, 0], rng):
        i = int(np.argwhere(arr[:, 0] != rng)[0][0])
        raise NoIdentityAtZero(f"table[{i}][0] = {int(arr[i, 0])} != {i}", witness=(i, 0))
    left = arr[arr]        # left[a,b,c] = (a*b)*c
    right = arr[:, arr]    # right[a,b,c] = a*(b*c)
    if not np.array_equal(left, right):
        a, b, c = map(int, np.argwhere(left != right)[0])
        raise NotAssociative(
            f"({a}*{b})*{c} = {int(left[a, b, c])} but {a}*({b}*{c}) = {int(right[a, b, c])}",
            witness=(a, b, c),
        )
    has_right_inv = (arr == 0).any(axis=1)
    if not has_right_inv.all():
        a = int(np.argwhere(~has_right_inv)[0][0])
        raise MissingInverse(f"element {a} has no right inverse", witness=(a,))
    g = FiniteGroup(arr.tolist())
    for a in range(n):
        if g.table[g.inv[a]][a] != 0:
            raise MissingInverse(f"inverse of {a} is one-sided", witness=(a,))
    return g


def group_center(G):
    """Elements commuting with everything, sorted ascending."""
    return [
        z
        for z in range(G.n)
        if all(G.table[z][g] == G.table[g][z] for g in range(G.n))
    ]


def subgroup_closure(G, seed):
    """Smallest subset containing ``seed`` and 0, closed under the product."""
    members = set(seed) | {0}
    frontier = list(members)
    while frontier:
        nxt = []
        for a in frontier:
            for b in list(members):
                for c in (G.table[a][b], G.table[b][a]):
                    if c not in members:
                        members.add(c)
                        nxt.append(c)
        frontier = nxt
    return sorted(members)


def derived_subgroup(G):
    """The subgroup generated by all commutators a b a^-1 b^-1."""
    comms = {
        G.table[G.table[G.table[a][b]][G.inv[a]]][G.inv[b]]
        for a in range(G.n)
        for b in range(G.n)
    }
    return subgroup_closure(G, comms)


def enumerate_automorphisms(G, bound=AUTOMORPHISM_ORDER_BOUND):
    """All table-preserving bijections fixing 0, in lexicographic order."""
    if G.n > bound:
        raise OrderTooLarge(f"order {G.n} exceeds automorphism bound {bound}")
    return _search.table_isomorphisms([G.table], [G.table], find_all=True)


@dataclass(frozen=True)
class GroupAction:
    """A family of automorphisms of ``space`` indexed by ``actor``.

    With ``contravariant`` unset the family composes covariantly,
    image(g1 g2) = image(g1) . image(g2); with it set, in reversed order.
    """

    actor: FiniteGroup
    space: FiniteGroup
    images: tuple
    contravariant: bool = False

    def apply(self, g, x):
        return self.images[g][x]

    def perm(self, g):
        return self.images[g]


def _is_automorphism(space, perm):
    n = space.n
    if sorted(perm) != list(range(n)) or perm[0] != 0:
        return False
    return all(
        perm[space.table[a][b]] == space.table[perm[a]][perm[b]]
        for a in range(n)
        for b in range(n)
    )


def validate_action(actor, space, images, contravariant=False):
    """Check automorphism images and the (anti-)homomorphism law."""
    images = tuple(tuple(int(v) for v in p) for p in images)
    if len(images) != actor.n:
        raise ImageNotAutomorphism(
            f"expected {actor.n} images, got {len(images)}"
        )
    for g, perm in enumerate(images):
        if len(perm) != space.n or not _is_automorphism(space, perm):
            raise ImageNotAutomorphism(
                f"image of actor element {g} is not an automorphism of the space",
                witness=(g,),
            )
    for g1 in range(actor.n):
        for g2 in range(actor.n):
            prod = images[actor.table[g1][g2]]
            if contravariant:
                comp = tuple(images[g2][images[g1][x]] for x in range(space.n))
            else:
                comp = tuple(images[g1][images[g2][x]] for x in range(space.n))
            if prod != comp:
                raise NotHomomorphic(
                    f"images of {g1} and {g2} do not compose to the image of their product",
                    witness=(g1, g2),
                )
    return GroupAction(actor, space, images, contravariant)


def trivial_action(actor, space):
    ident = tuple(range(space.n))
    return GroupAction(actor, space, tuple(ident for _ in range(actor.n)), False)


def conjugation_action(G):
    """The action of G on itself by g x g^-1."""
    images = tuple(
        tuple(G.conjugate(g, x) for x in range(G.n)) for g in range(G.n)
    )
    return validate_action(G, G, images)


def pair_index(h, g, g_order):
    return h * g_order + g


def pair_split(idx, g_order):
    return divmod(idx, g_order)


def semidirect_product(H, G, phi):
    """The group on pairs (h, g), encoded h*|G|+g, twisted by phi.

    (h1, g1)(h2, g2) = (h1 . phi_{g1}(h2), g1 g2); identity (0,0) is index 0.
    """
    n = H.n * G.n
    table = [[0] * n for _ in range(n)]
    for h1 in range(H.n):
        for g1 in range(G.n):
            row = table[pair_index(h1, g1, G.n)]
            for h2 in range(H.n):
                for g2 in range(G.n):
                    row[pair_index(h2, g2, G.n)] = pair_index(
                        H.table[h1][phi.apply(g1, h2)], G.table[g1][g2], G.n
                    )
    return validate_group(table)


def is_homomorphism(f, G, K):
    """True iff f(0) = 0 and f(ab) = f(a)f(b) for every pair."""
    vals = tuple(f)
    if len(vals) != G.n or vals[0] != 0:
        return False
    if any(v < 0 or v >= K.n for v in vals):
        return False
    return all(
        vals[G.table[a][b]] == K.table[vals[a]][vals[b]]
        for a in range(G.n)
        for b in range(G.n)
    )
