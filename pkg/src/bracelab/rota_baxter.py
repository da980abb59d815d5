"""Rota-Baxter operators (weight 1) on finite groups, and the relative version.

An operator R on G satisfies R(x)R(y) = R(x.R(x).y.R(x)^-1) at every pair;
each one yields a skew brace on the same carrier via x o y = x.R(x).y.R(x)^-1.
The relative variant replaces inner conjugation with an arbitrary action
phi of a second group G on H, the axiom becoming R(h1)R(h2) = R(h1.phi_{R(h1)}(h2)),
and every skew brace arises this way from (add, mul, lambda, identity).
Both directions, the induced operator on the semi-direct product, and
morphism transport live here.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .braces import SkewBrace, lambda_map, validate_brace
from .errors import (
    ActionInvalid,
    AlgebraError,
    NotRRBHom,
    OrderTooLarge,
    RBAxiomFails,
    RRBAxiomFails,
)
from .groups import (
    ElementMap,
    FiniteGroup,
    GroupAction,
    identity_map,
    is_homomorphism,
    pair_index,
    semidirect_product,
    validate_action,
)

RB_ENUMERATION_BOUND = 6


@dataclass(frozen=True)
class RBOperator:
    """A checked Rota-Baxter operator; construct via :func:`validate_rb`."""

    group: FiniteGroup
    map: ElementMap


@dataclass(frozen=True)
class RRBGroup:
    """A relative Rota-Baxter group (H, G, phi, R); see :func:`validate_rrb`."""

    h_group: FiniteGroup
    g_group: FiniteGroup
    phi: GroupAction
    r: ElementMap


def _rb_mismatch(arr, inv, r):
    """First (x, y) violating the operator axiom, or None.

    arr/inv describe the group, r the candidate map, all as numpy arrays.
    """
    n = arr.shape[0]
    rng = np.arange(n)
    xr = arr[rng, r]                        # x.R(x)
    xry = arr[xr]                           # x.R(x).y
    inner = arr[xry, inv[r][:, None]]       # x.R(x).y.R(x)^-1
    lhs = arr[r[:, None], r[None, :]]
    rhs = r[inner]
    if np.array_equal(lhs, rhs):
        return None
    x, y = map(int, np.argwhere(lhs != rhs)[0])
    return x, y


def validate_rb(G, R):
    """Check R(x)R(y) = R(x.R(x).y.R(x)^-1) at every pair of G."""
    values = tuple(R)
    if len(values) != G.n or any(v < 0 or v >= G.n for v in values):
        raise RBAxiomFails(f"map must send {G.n} elements into the carrier")
    arr = G.as_array()
    inv = np.asarray(G.inv, dtype=np.int64)
    r = np.asarray(values, dtype=np.int64)
    bad = _rb_mismatch(arr, inv, r)
    if bad is not None:
        x, y = bad
        raise RBAxiomFails(
            f"R({x})R({y}) != R({x}.R({x}).{y}.R({x})^-1)", witness=(x, y)
        )
    return RBOperator(G, ElementMap(values))


def brace_from_rb(op):
    """The skew brace with x o y = x.R(x).y.R(x)^-1 over the operator's group.

    Validity is a theorem, but the result is run through validate_brace
    anyway: a failure here would mean a defect, not bad input.
    """
    G, r = op.group, op.map
    mul = [
        [
            G.table[G.table[G.table[x][r(x)]][y]][G.inv[r(x)]]
            for y in range(G.n)
        ]
        for x in range(G.n)
    ]
    return validate_brace(G.table, mul)


def enumerate_rb(G, bound=RB_ENUMERATION_BOUND):
    """All Rota-Baxter operators on G, lexicographic by map values.

    Setting x = y = identity in the axiom forces R(0) = 0, so only the
    remaining n-1 entries are searched.
    """
    if G.n > bound:
        raise OrderTooLarge(
            f"order {G.n} exceeds enumeration bound {bound}"
        )
    arr = G.as_array()
    inv = np.asarray(G.inv, dtype=np.int64)
    out = []
    for tail in itertools.product(range(G.n), repeat=G.n - 1):
        r = np.asarray((0,) + tail, dtype=np.int64)
        if _rb_mismatch(arr, inv, r) is None:
            out.append(RBOperator(G, ElementMap(r.tolist())))
    return out


def validate_rrb(H, G, phi, R):
    """Check the relative axiom R(h1)R(h2) = R(h1.phi_{R(h1)}(h2)).

    phi may be a GroupAction or a raw tuple of permutations; either way the
    action laws are re-checked here.
    """
    images = phi.images if isinstance(phi, GroupAction) else phi
    try:
        action = validate_action(G, H, images)
    except AlgebraError as exc:
        raise ActionInvalid(f"phi is not an action of G on H: {exc}") from exc
    values = tuple(R)
    if len(values) != H.n or any(v < 0 or v >= G.n for v in values):
        raise RRBAxiomFails(f"map must send {H.n} elements into the actor carrier")
    ht = H.as_array()
    gt = G.as_array()
    im = np.asarray(action.images, dtype=np.int64)
    r = np.asarray(values, dtype=np.int64)
    rng = np.arange(H.n)
    inner = ht[rng[:, None], im[r]]        # h1 . phi_{R(h1)}(h2)
    lhs = gt[r[:, None], r[None, :]]
    rhs = r[inner]
    if not np.array_equal(lhs, rhs):
        h1, h2 = map(int, np.argwhere(lhs != rhs)[0])
        raise RRBAxiomFails(
            f"R({h1})R({h2}) != R({h1}.phi_R({h1})({h2}))", witness=(h1, h2)
        )
    return RRBGroup(H, G, action, ElementMap(values))


def brace_from_rrb(rrb):
    """The skew brace with h1 o h2 = h1 . phi_{R(h1)}(h2) on the H carrier."""
    H, r, phi = rrb.h_group, rrb.r, rrb.phi
    mul = [
        [H.table[h1][phi.apply(r(h1), h2)] for h2 in range(H.n)]
        for h1 in range(H.n)
    ]
    return validate_brace(H.table, mul)


def rrb_from_brace(B):
    """(additive group, multiplicative group, lambda, identity) as an RRB group."""
    lam = lambda_map(B)
    return validate_rrb(B.add, B.mul, lam, identity_map(B.n))


def rb_on_semidirect(rrb):
    """The operator (h, g) -> (identity, g^-1 R(h)) on the semi-direct product.

    Returns the product group on pairs (h |G| + g encoding) together with
    the validated operator.
    """
    H, G, phi, r = rrb.h_group, rrb.g_group, rrb.phi, rrb.r
    E = semidirect_product(H, G, phi)
    values = [
        pair_index(0, G.table[G.inv[g]][r(h)], G.n)
        for h in range(H.n)
        for g in range(G.n)
    ]
    return E, validate_rb(E, values)


def descendent_circle(rrb, a1, a2):
    """The circle product a1 . phi_{R(a1)}(a2) on the H carrier."""
    return rrb.h_group.table[a1][rrb.phi.apply(rrb.r(a1), a2)]


def map_rrb_hom(f1, f2, source_rrb, target_rrb):
    """Transport a morphism of RRB groups to the semi-direct-product operators.

    (f1, f2) must be group homomorphisms H -> H', G -> G' intertwining the
    operators (f2 R = S f1) and the actions (f1 phi_g = phi'_{f2(g)} f1);
    each law is checked and the first violation reported.  The returned map
    (h, g) -> (f1(h), f2(g)) is verified to commute with the induced
    operators on both semi-direct products.
    """
    f1 = ElementMap(tuple(f1))
    f2 = ElementMap(tuple(f2))
    H, G = source_rrb.h_group, source_rrb.g_group
    H2, G2 = target_rrb.h_group, target_rrb.g_group
    if not is_homomorphism(f1, H, H2):
        raise NotRRBHom("f1 is not a group homomorphism between the H carriers")
    if not is_homomorphism(f2, G, G2):
        raise NotRRBHom("f2 is not a group homomorphism between the G carriers")
    r, s = source_rrb.r, target_rrb.r
    for h in range(H.n):
        if f2(r(h)) != s(f1(h)):
            raise NotRRBHom(
                f"operators not intertwined: f2(R({h})) != S(f1({h}))",
                witness=(h,),
            )
    for g in range(G.n):
        for h in range(H.n):
            if f1(source_rrb.phi.apply(g, h)) != target_rrb.phi.apply(f2(g), f1(h)):
                raise NotRRBHom(
                    f"actions not intertwined at (g,h)=({g},{h})",
                    witness=(g, h),
                )
    values = [
        pair_index(f1(h), f2(g), G2.n) for h in range(H.n) for g in range(G.n)
    ]
    f = ElementMap(values)
    E1, rb1 = rb_on_semidirect(source_rrb)
    E2, rb2 = rb_on_semidirect(target_rrb)
    if not is_homomorphism(f, E1, E2):
        raise NotRRBHom("induced pair map is not a group homomorphism")
    for x in range(E1.n):
        if f(rb1.map(x)) != rb2.map(f(x)):
            raise NotRRBHom(
                f"induced map does not commute with the operators at {x}",
                witness=(x,),
            )
    return f
