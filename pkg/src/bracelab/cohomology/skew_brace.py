"""Second skew-brace cohomology with trivial-brace abelian coefficients.

A *good triplet* on a brace M with coefficient group I consists of three
actions of M's carriers on I: xi (multiplicative, covariant), zeta (additive,
contravariant), eps (multiplicative, contravariant), subject to two
compatibility identities.  Cochains are pairs of tables (g, f) vanishing
whenever an argument is 0; the three cocycle identities, the coboundary
construction from a 1-cochain theta, the brute-force class computation, and
the extension <-> cocycle dictionary all follow the same additive
transliteration: coefficient products become I-table sums, inverses become
negation.  Everything is exhaustive; nothing is sampled.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..braces import validate_brace
from ..errors import (
    AlgebraError,
    CoeffNotAbelian,
    NotASection,
    NotCocycle,
    NotGoodTriplet,
    PreconditionFails,
    SearchTooLarge,
)
from ..groups import (
    ElementMap,
    FiniteGroup,
    GroupAction,
    validate_action,
    validate_group,
)

THETA_SEARCH_BOUND = 2**20
CLASS_ENUMERATION_BOUND = 2**16


@dataclass(frozen=True)
class ActionTriplet:
    """A validated good triplet; construct via :func:`validate_good_triplet`."""

    base: SkewBrace
    coeff: FiniteGroup
    xi: GroupAction
    zeta: GroupAction
    eps: GroupAction

    def xi_inv(self, m, y):
        """The inverse permutation of xi_m, realized as xi of the circle inverse."""
        return self.xi.images[self.base.mul.inv[m]][y]


@dataclass(frozen=True)
class SB2Cochain:
    """A pair of 2-cochain tables (g for the dot side, f for the circle side)."""

    g: tuple
    f: tuple

    def __post_init__(self):
        object.__setattr__(self, "g", tuple(tuple(int(v) for v in r) for r in self.g))
        object.__setattr__(self, "f", tuple(tuple(int(v) for v in r) for r in self.f))

    def flatten(self):
        return tuple(v for row in self.g for v in row) + tuple(
            v for row in self.f for v in row
        )


def zero_cochain(n):
    zero = tuple(tuple(0 for _ in range(n)) for _ in range(n))
    return SB2Cochain(zero, zero)


def _as_images(a):
    return a.images if isinstance(a, GroupAction) else tuple(tuple(p) for p in a)


def validate_good_triplet(M, I, xi, zeta, eps):
    """Validate the three action laws and both compatibility identities."""
    if not I.is_abelian():
        raise CoeffNotAbelian("coefficient group must be abelian")
    try:
        xi_a = validate_action(M.mul, I, _as_images(xi))
        zeta_a = validate_action(M.add, I, _as_images(zeta), contravariant=True)
        eps_a = validate_action(M.mul, I, _as_images(eps), contravariant=True)
    except AlgebraError as exc:
        raise NotGoodTriplet(f"action law broken: {exc}") from exc
    xi_i, zeta_i, eps_i = xi_a.images, zeta_a.images, eps_a.images
    t = I.table
    n = M.n
    for m1 in range(n):
        for m2 in range(n):
            dot = M.dot(m1, m2)
            lam = M.lam(m1, m2)
            for y in range(I.n):
                left = t[xi_i[dot][eps_i[dot][y]]][zeta_i[m2][y]]
                right = t[zeta_i[m2][xi_i[m1][eps_i[m1][y]]]][xi_i[m2][eps_i[m2][y]]]
                if left != right:
                    raise NotGoodTriplet(
                        "first compatibility identity fails",
                        witness=(m1, m2, y),
                    )
                if zeta_i[lam][xi_i[m1][y]] != xi_i[m1][zeta_i[m2][y]]:
                    raise NotGoodTriplet(
                        "second compatibility identity fails",
                        witness=(m1, m2, y),
                    )
    return ActionTriplet(M, I, xi_a, zeta_a, eps_a)


def trivial_triplet(M, I):
    """All three actions trivial; always a good triplet."""
    ident = tuple(range(I.n))
    flat = tuple(ident for _ in range(M.n))
    return validate_good_triplet(M, I, flat, flat, flat)


def sb_cocycle_failure(t, c):
    """None if c is a cocycle, else (equation label, violating tuple).

    The label "normalization" flags a nonzero value on a degenerate tuple;
    "dot", "circle", and "mixed" name the three cocycle identities.
    """
    M, I = t.base, t.coeff
    n = M.n
    g, f = c.g, c.f
    for i in range(n):
        if g[0][i] or g[i][0] or f[0][i] or f[i][0]:
            return "normalization", (i,)
    xi, zeta, eps = t.xi.images, t.zeta.images, t.eps.images
    tab, neg = I.table, I.inv
    for m1 in range(n):
        for m2 in range(n):
            for m3 in range(n):
                # dot-side identity
                acc = tab[g[m2][m3]][neg[g[M.dot(m1, m2)][m3]]]
                acc = tab[acc][g[m1][M.dot(m2, m3)]]
                acc = tab[acc][neg[zeta[m3][g[m1][m2]]]]
                if acc:
                    return "dot", (m1, m2, m3)
                # circle-side identity
                circ12 = M.circ(m1, m2)
                acc = tab[xi[m1][f[m2][m3]]][neg[f[circ12][m3]]]
                acc = tab[acc][f[m1][M.circ(m2, m3)]]
                twist = xi[M.circ(circ12, m3)][
                    eps[m3][t.xi_inv(circ12, f[m1][m2])]
                ]
                acc = tab[acc][neg[twist]]
                if acc:
                    return "circle", (m1, m2, m3)
                # mixed identity
                neg1 = M.dot_inv(m1)
                c13 = M.circ(m1, m3)
                acc = tab[xi[m1][g[m2][m3]]][zeta[c13][g[m1][neg1]]]
                acc = tab[acc][neg[zeta[c13][g[circ12][neg1]]]]
                acc = tab[acc][neg[g[M.dot(circ12, neg1)][c13]]]
                acc = tab[acc][neg[zeta[M.lam(m1, m3)][f[m1][m2]]]]
                acc = tab[acc][f[m1][M.dot(m2, m3)]]
                acc = tab[acc][neg[f[m1][m3]]]
                if acc:
                    return "mixed", (m1, m2, m3)
    return None


def is_sb_cocycle(t, c):
    return sb_cocycle_failure(t, c) is None


def sb_coboundary(t, theta):
    """The cochain induced by a normalized 1-cochain theta (theta(0) = 0)."""
    M, I = t.base, t.coeff
    n = M.n
    th = tuple(theta)
    if len(th) != n or th[0] != 0:
        raise PreconditionFails("theta must be normalized with theta(0) = 0")
    xi, zeta, eps = t.xi.images, t.zeta.images, t.eps.images
    tab, neg = I.table, I.inv
    g = [[0] * n for _ in range(n)]
    f = [[0] * n for _ in range(n)]
    for m1 in range(n):
        for m2 in range(n):
            acc = tab[neg[th[M.dot(m1, m2)]]][zeta[m2][th[m1]]]
            g[m1][m2] = tab[acc][th[m2]]
            c12 = M.circ(m1, m2)
            acc = tab[neg[th[c12]]][xi[c12][eps[m2][t.xi_inv(m1, th[m1])]]]
            f[m1][m2] = tab[acc][xi[m1][th[m2]]]
    return SB2Cochain(g, f)


def is_sb_coboundary(t, c, bound=THETA_SEARCH_BOUND):
    """A witness theta with c = coboundary(theta), or None; exhaustive search."""
    M, I = t.base, t.coeff
    candidates = I.n ** (M.n - 1)
    if candidates > bound:
        raise SearchTooLarge(
            f"{candidates} candidate 1-cochains exceed bound {bound}"
        )
    for tail in itertools.product(range(I.n), repeat=M.n - 1):
        theta = (0,) + tail
        if sb_coboundary(t, theta) == c:
            return ElementMap(theta)
    return None


def add_cochains(I, a, b):
    """Pointwise sum of two cochains in the coefficient group."""
    t = I.table
    g = [[t[x][y] for x, y in zip(ra, rb)] for ra, rb in zip(a.g, b.g)]
    f = [[t[x][y] for x, y in zip(ra, rb)] for ra, rb in zip(a.f, b.f)]
    return SB2Cochain(g, f)


def enumerate_sb_cocycles(t, bound=CLASS_ENUMERATION_BOUND):
    """All cocycles, lexicographic by flattened tables."""
    M, I = t.base, t.coeff
    n = M.n
    free = 2 * (n - 1) * (n - 1)
    total = I.n**free
    if total > bound:
        raise SearchTooLarge(f"{total} candidate cochains exceed bound {bound}")
    out = []
    for flat in itertools.product(range(I.n), repeat=free):
        g = [[0] * n for _ in range(n)]
        f = [[0] * n for _ in range(n)]
        it = iter(flat)
        for i in range(1, n):
            for j in range(1, n):
                g[i][j] = next(it)
        for i in range(1, n):
            for j in range(1, n):
                f[i][j] = next(it)
        c = SB2Cochain(g, f)
        if is_sb_cocycle(t, c):
            out.append(c)
    return out


def enumerate_sb_coboundaries(t):
    """All coboundaries, deduplicated, sorted by flattened tables."""
    M, I = t.base, t.coeff
    seen = {}
    for tail in itertools.product(range(I.n), repeat=M.n - 1):
        c = sb_coboundary(t, (0,) + tail)
        seen[c.flatten()] = c
    return [seen[k] for k in sorted(seen)]


def h2_sb(t, bound=CLASS_ENUMERATION_BOUND):
    """One representative per cohomology class, lexicographically least, sorted."""
    cocycles = enumerate_sb_cocycles(t, bound=bound)
    boundaries = enumerate_sb_coboundaries(t)
    I = t.coeff
    remaining = {c.flatten(): c for c in cocycles}
    reps = []
    while remaining:
        key = min(remaining)
        rep = remaining[key]
        reps.append(rep)
        for b in boundaries:
            shifted = add_cochains(I, rep, b)
            remaining.pop(shifted.flatten(), None)
    return reps


def extension_from_sb_cocycle(t, c):
    """The brace on pairs (m, y) -> m*|I| + y twisted by the cocycle.

    Returns (brace, embed, project) where embed sends y to (0, y) and
    project drops the coefficient.
    """
    failure = sb_cocycle_failure(t, c)
    if failure is not None:
        raise NotCocycle(
            f"{failure[0]} identity fails at {failure[1]}", witness=failure[1]
        )
    M, I = t.base, t.coeff
    n, k = M.n, I.n
    xi, zeta, eps = t.xi.images, t.zeta.images, t.eps.images
    tab = I.table
    size = n * k
    add = [[0] * size for _ in range(size)]
    mul = [[0] * size for _ in range(size)]
    for m1 in range(n):
        for y1 in range(k):
            arow = add[m1 * k + y1]
            mrow = mul[m1 * k + y1]
            for m2 in range(n):
                c12 = M.circ(m1, m2)
                tw = xi[c12][eps[m2][t.xi_inv(m1, y1)]]
                for y2 in range(k):
                    arow[m2 * k + y2] = M.dot(m1, m2) * k + tab[
                        tab[c.g[m1][m2]][zeta[m2][y1]]
                    ][y2]
                    mrow[m2 * k + y2] = c12 * k + tab[tab[c.f[m1][m2]][tw]][
                        xi[m1][y2]
                    ]
    brace = validate_brace(add, mul)
    embed = ElementMap(tuple(range(k)))
    project = ElementMap(tuple(m for m in range(n) for _ in range(k)))
    return brace, embed, project


def _embedded_coeff(E, i):
    """Rebuild the coefficient group from its embedding and index its image."""
    values = tuple(i)
    if len(set(values)) != len(values) or values[0] != 0:
        raise PreconditionFails("embedding must be injective and send 0 to 0")
    lookup = {e: y for y, e in enumerate(values)}
    table = []
    for y1 in range(len(values)):
        row = []
        for y2 in range(len(values)):
            prod = E.dot(values[y1], values[y2])
            if prod not in lookup:
                raise PreconditionFails("embedded image is not add-closed")
            row.append(lookup[prod])
        table.append(row)
    return validate_group(table), lookup


def _check_section(E, project, s):
    vals = tuple(s)
    proj = tuple(project)
    if vals[0] != 0:
        raise NotASection("section must send 0 to 0")
    for m, e in enumerate(vals):
        if proj[e] != m:
            raise NotASection(f"project(s({m})) = {proj[e]} != {m}", witness=(m,))
    return vals, proj


def _base_from_projection(E, project, s):
    """Reconstruct the quotient brace through the section."""
    vals, proj = _check_section(E, project, s)
    n = len(vals)
    add = [[proj[E.dot(vals[a], vals[b])] for b in range(n)] for a in range(n)]
    mul = [[proj[E.circ(vals[a], vals[b])] for b in range(n)] for a in range(n)]
    return validate_brace(add, mul)


def sb_cocycle_from_extension(E, i, project, s):
    """The cochain of section defects: how far s is from a homomorphism."""
    _, lookup = _embedded_coeff(E, i)
    vals, proj = _check_section(E, project, s)
    n = len(vals)

    def coeff_of(e):
        if e not in lookup:
            raise PreconditionFails(
                "section defect leaves the embedded coefficient subgroup"
            )
        return lookup[e]

    g = [[0] * n for _ in range(n)]
    f = [[0] * n for _ in range(n)]
    for m1 in range(n):
        for m2 in range(n):
            sdot = vals[proj[E.dot(vals[m1], vals[m2])]]
            g[m1][m2] = coeff_of(
                E.dot(E.dot(E.dot_inv(sdot), vals[m1]), vals[m2])
            )
            scirc = vals[proj[E.circ(vals[m1], vals[m2])]]
            f[m1][m2] = coeff_of(
                E.dot(E.dot_inv(scirc), E.circ(vals[m1], vals[m2]))
            )
    return SB2Cochain(g, f)


def triplet_from_extension(E, i, project, s):
    """The good triplet realized by lambda, add-conjugation, and circle-conjugation."""
    I, lookup = _embedded_coeff(E, i)
    vals, proj = _check_section(E, project, s)
    M = _base_from_projection(E, project, s)
    emb = tuple(i)

    def coeff_of(e):
        if e not in lookup:
            raise PreconditionFails(
                "conjugated coefficient leaves the embedded subgroup"
            )
        return lookup[e]

    xi = []
    zeta = []
    eps = []
    for m in range(M.n):
        sm = vals[m]
        xi.append(tuple(coeff_of(E.lam(sm, emb[y])) for y in range(I.n)))
        zeta.append(
            tuple(
                coeff_of(E.dot(E.dot(E.dot_inv(sm), emb[y]), sm))
                for y in range(I.n)
            )
        )
        eps.append(
            tuple(
                coeff_of(E.circ(E.circ(E.circ_inv(sm), emb[y]), sm))
                for y in range(I.n)
            )
        )
    return validate_good_triplet(M, I, xi, zeta, eps)
