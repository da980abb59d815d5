"""Skew left braces: two group structures on one carrier, identity 0 for both.

The additive table is written ``dot`` and the multiplicative one ``circ``
throughout; the compatibility law ties them together as

    a o (b . c) = (a o b) . a^-1 . (a o c)

checked over all triples (vectorized).  The lambda map lam_a(b) = a^-1.(a o b)
realizes the multiplicative group as automorphisms of the additive one.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _search
from .errors import (
    AddNotGroup,
    AlgebraError,
    BraceAxiomFails,
    MulNotGroup,
    NotBraceHom,
    OrderTooLarge,
)
from .groups import ElementMap, validate_action, validate_group

ISOMORPHISM_ORDER_BOUND = 16


class SkewBrace:
    """A validated skew left brace; construct via :func:`validate_brace`."""

    __slots__ = ("n", "add", "mul")

    def __init__(self, add, mul):
        self.add = add
        self.mul = mul
        self.n = add.n

    def dot(self, a, b):
        return self.add.table[a][b]

    def circ(self, a, b):
        return self.mul.table[a][b]

    def dot_inv(self, a):
        return self.add.inv[a]

    def circ_inv(self, a):
        return self.mul.inv[a]

    def lam(self, a, b):
        """lam_a(b) = a^-1 . (a o b)."""
        return self.add.table[self.add.inv[a]][self.mul.table[a][b]]

    def lam_inv(self, a, b):
        """The inverse automorphism: the unique c with lam_a(c) = b."""
        return self.lam(self.mul.inv[a], b)

    def elements(self):
        return range(self.n)

    def is_trivial(self):
        return self.add.table == self.mul.table

    def __eq__(self, other):
        return (
            isinstance(other, SkewBrace)
            and self.add.table == other.add.table
            and self.mul.table == other.mul.table
        )

    def __hash__(self):
        return hash((self.add.table, self.mul.table))

    def __repr__(self):
        kind = "trivial " if self.is_trivial() else ""
        return f"SkewBrace({kind}order={self.n})"


def validate_brace(add, mul):
    """Validate both tables as groups and the compatibility law on all triples."""
    try:
        add_g = validate_group(add)
    except AlgebraError as exc:
        raise AddNotGroup(f"additive table: {exc}", witness=exc.witness) from exc
    try:
        mul_g = validate_group(mul)
    except AlgebraError as exc:
        raise MulNotGroup(f"multiplicative table: {exc}", witness=exc.witness) from exc
    if add_g.n != mul_g.n:
        raise MulNotGroup(
            f"carrier sizes differ: {add_g.n} vs {mul_g.n}"
        )
    A = add_g.as_array()
    M = mul_g.as_array()
    ainv = np.asarray(add_g.inv, dtype=np.int64)
    lhs = M[:, A]                      # lhs[a,b,c] = a o (b . c)
    P = A[M, ainv[:, None]]            # P[a,b] = (a o b) . a^-1
    rhs = A[P[:, :, None], M[:, None, :]]
    if not np.array_equal(lhs, rhs):
        a, b, c = map(int, np.argwhere(lhs != rhs)[0])
        raise BraceAxiomFails(
            f"a o (b . c) != (a o b) . a^-1 . (a o c) at (a,b,c)=({a},{b},{c})",
            witness=(a, b, c),
        )
    return SkewBrace(add_g, mul_g)


def trivial_brace(G):
    """Any group is a brace with both operations equal."""
    return SkewBrace(G, G)


def lambda_map(B):
    """The action of (H,o) on (H,.) by lam_a(b) = a^-1 . (a o b).

    The brace law guarantees this is a homomorphism into the automorphism
    group; validation is run anyway so a defective table can never produce a
    silently broken action.
    """
    images = tuple(
        tuple(B.lam(a, b) for b in range(B.n)) for a in range(B.n)
    )
    return validate_action(B.mul, B.add, images)


def circle_inverse(B, a):
    return B.mul.inv[a]


def is_brace_homomorphism(f, A, B):
    """True iff f maps 0 to 0 and preserves both operations."""
    vals = tuple(f)
    if len(vals) != A.n or vals[0] != 0:
        return False
    if any(v < 0 or v >= B.n for v in vals):
        return False
    for a in range(A.n):
        for b in range(A.n):
            if vals[A.dot(a, b)] != B.dot(vals[a], vals[b]):
                return False
            if vals[A.circ(a, b)] != B.circ(vals[a], vals[b]):
                return False
    return True


@dataclass(frozen=True)
class BraceHom:
    """A checked homomorphism of skew braces."""

    source: SkewBrace
    target: SkewBrace
    map: ElementMap


def brace_hom(source, target, values):
    f = ElementMap(tuple(values))
    if not is_brace_homomorphism(f, source, target):
        raise NotBraceHom("map does not preserve both operations")
    return BraceHom(source, target, f)


def find_brace_isomorphisms(A, B, bound=ISOMORPHISM_ORDER_BOUND):
    """All bijections preserving both tables, in lexicographic order."""
    if A.n != B.n:
        return []
    if A.n > bound:
        raise OrderTooLarge(
            f"order {A.n} exceeds isomorphism search bound {bound}"
        )
    found = _search.table_isomorphisms(
        [A.add.table, A.mul.table], [B.add.table, B.mul.table], find_all=True
    )
    return [ElementMap(t) for t in found]


def braces_isomorphic(A, B, node_budget=None):
    """Existence-only isomorphism test; None means the budget ran out."""
    if A.n != B.n:
        return False
    found = _search.table_isomorphisms(
        [A.add.table, A.mul.table],
        [B.add.table, B.mul.table],
        find_all=False,
        node_budget=node_budget,
    )
    if found is None:
        return None
    return bool(found)
