"""Second cohomology of a Rota-Baxter group with module coefficients.

Coefficients form a pair (I, R_I) with I abelian, R_I an endomorphism, and a
right action gamma of the base group H on I tied to both operators by one
module law.  Cochains are pairs (tau, r): a normalized 2-cochain and a
normalized 1-cochain.  The coboundary of theta is (delta^1 theta, -Phi^1 theta)
and the cocycle condition couples the standard group identity for tau with a
second identity mixing r, tau, and both operators through the descendent
product h1 o h2 = h1.R_H(h1).h2.R_H(h1)^-1.  The extension dictionary
realizes every cocycle as a twisted product group with the operator

    R_E(h, y) = (R_H(h), r(h) + R_I(gamma_{R_H(h)}(y)))

and extracts (tau, r) back through a normalized section.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..errors import (
    AlgebraError,
    CoeffNotAbelian,
    ModuleLawFails,
    NotASection,
    NotAntiAction,
    NotCocycle,
    NotEndomorphism,
    NotRBExtension,
    PreconditionFails,
    SearchTooLarge,
)
from ..groups import (
    ElementMap,
    FiniteGroup,
    GroupAction,
    is_homomorphism,
    validate_action,
    validate_group,
)
from ..rota_baxter import RBOperator, validate_rb

RB_CLASS_ENUMERATION_BOUND = 2**16


@dataclass(frozen=True)
class RBModuleSpec:
    """Validated coefficient data; construct via :func:`validate_rb_module`."""

    base: RBOperator
    coeff: FiniteGroup
    r_i: ElementMap
    gamma: GroupAction


@dataclass(frozen=True)
class RB2Cochain:
    """A 2-cochain table tau paired with a 1-cochain r."""

    tau: tuple
    r: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "tau", tuple(tuple(int(v) for v in row) for row in self.tau)
        )
        object.__setattr__(self, "r", tuple(int(v) for v in self.r))

    def flatten(self):
        return tuple(v for row in self.tau for v in row) + self.r


def zero_rb_cochain(n):
    return RB2Cochain(tuple(tuple(0 for _ in range(n)) for _ in range(n)), (0,) * n)


def validate_rb_module(base, I, r_i, gamma):
    """Check endomorphism, anti-action, and the coupling law at every (h, z)."""
    if not I.is_abelian():
        raise CoeffNotAbelian("coefficient group must be abelian")
    r_i = ElementMap(tuple(r_i))
    if not is_homomorphism(r_i, I, I):
        raise NotEndomorphism("coefficient operator must be an endomorphism")
    images = gamma.images if isinstance(gamma, GroupAction) else gamma
    try:
        gamma_a = validate_action(base.group, I, images, contravariant=True)
    except AlgebraError as exc:
        raise NotAntiAction(f"gamma is not a right action: {exc}") from exc
    H = base.group
    rh = base.map
    g = gamma_a.images
    tab, neg = I.table, I.inv
    for h in range(H.n):
        outer = g[rh(h)]
        inner = g[H.table[h][rh(h)]]
        for z in range(I.n):
            left = outer[r_i(z)]
            right = r_i(tab[inner[tab[z][r_i(z)]]][neg[outer[r_i(z)]]])
            if left != right:
                raise ModuleLawFails(
                    f"coupling law fails at (h,z)=({h},{z})", witness=(h, z)
                )
    return RBModuleSpec(base, I, r_i, gamma_a)


def trivial_rb_module(base, I, r_i=None):
    """Trivial action; any endomorphism of I satisfies the law then."""
    values = tuple(r_i) if r_i is not None else (0,) * I.n
    ident = tuple(range(I.n))
    return validate_rb_module(
        base, I, values, tuple(ident for _ in range(base.group.n))
    )


def rb_coboundary(m, theta):
    """(delta^1 theta, -Phi^1 theta) for a normalized 1-cochain theta."""
    H, I = m.base.group, m.coeff
    rh, ri = m.base.map, m.r_i
    g = m.gamma.images
    tab, neg = I.table, I.inv
    th = tuple(theta)
    if len(th) != H.n or th[0] != 0:
        raise PreconditionFails("theta must be normalized with theta(0) = 0")
    tau = [
        [
            tab[tab[th[h2]][neg[th[H.table[h1][h2]]]]][g[h2][th[h1]]]
            for h2 in range(H.n)
        ]
        for h1 in range(H.n)
    ]
    r = [
        neg[tab[ri(g[rh(h)][th[h]])][neg[th[rh(h)]]]]
        for h in range(H.n)
    ]
    out = RB2Cochain(tau, r)
    failure = rb_cocycle_failure(m, out)
    if failure is not None:
        raise AssertionError(
            f"coboundary escaped the cocycle space at {failure}; internal defect"
        )
    return out


def _descendent(H, rh, h1, h2):
    t, inv = H.table, H.inv
    return t[t[t[h1][rh(h1)]][h2]][inv[rh(h1)]]


def rb_cocycle_failure(m, c):
    """None if c is a cocycle, else (component, violating tuple)."""
    H, I = m.base.group, m.coeff
    rh, ri = m.base.map, m.r_i
    g = m.gamma.images
    tab, neg = I.table, I.inv
    n = H.n
    tau, r = c.tau, c.r
    if r[0] != 0:
        return "normalization", (0,)
    for i in range(n):
        if tau[0][i] or tau[i][0]:
            return "normalization", (i,)
    for h1 in range(n):
        for h2 in range(n):
            for h3 in range(n):
                acc = tab[tau[h2][h3]][neg[tau[H.table[h1][h2]][h3]]]
                acc = tab[acc][tau[h1][H.table[h2][h3]]]
                acc = tab[acc][neg[g[h3][tau[h1][h2]]]]
                if acc:
                    return "group", (h1, h2, h3)
    hinv = H.inv
    for h1 in range(n):
        rh1 = rh(h1)
        left = H.table[h1][rh1]          # h1 . R_H(h1)
        for h2 in range(n):
            circ = _descendent(H, rh, h1, h2)
            d1 = tab[tab[r[h2]][neg[r[circ]]]][g[rh(h2)][r[h1]]]
            mid = ri(g[rh(h2)][tab[g[h2][r[h1]]][neg[r[h1]]]])
            right = H.table[h2][hinv[rh1]]   # h2 . R_H(h1)^-1
            inner = tab[g[rh(circ)][tau[left][right]]][g[right][tau[h1][rh1]]]
            inner = tab[inner][tau[h2][hinv[rh1]]]
            inner = tab[inner][neg[tau[rh1][hinv[rh1]]]]
            phi2 = tab[tau[rh1][rh(h2)]][neg[ri(inner)]]
            beta = tab[tab[d1][neg[mid]]][neg[phi2]]
            if beta:
                return "operator", (h1, h2)
    return None


def is_rb_cocycle(m, c):
    return rb_cocycle_failure(m, c) is None


def add_rb_cochains(I, a, b):
    t = I.table
    tau = [[t[x][y] for x, y in zip(ra, rb)] for ra, rb in zip(a.tau, b.tau)]
    r = [t[x][y] for x, y in zip(a.r, b.r)]
    return RB2Cochain(tau, r)


def enumerate_rb_cocycles(m, bound=RB_CLASS_ENUMERATION_BOUND):
    """All cocycles, lexicographic by flattened values."""
    H, I = m.base.group, m.coeff
    n = H.n
    free = (n - 1) * (n - 1) + (n - 1)
    total = I.n**free
    if total > bound:
        raise SearchTooLarge(f"{total} candidate cochains exceed bound {bound}")
    out = []
    for flat in itertools.product(range(I.n), repeat=free):
        it = iter(flat)
        tau = [[0] * n for _ in range(n)]
        for i in range(1, n):
            for j in range(1, n):
                tau[i][j] = next(it)
        r = [0] + [next(it) for _ in range(n - 1)]
        c = RB2Cochain(tau, r)
        if is_rb_cocycle(m, c):
            out.append(c)
    return out


def enumerate_rb_coboundaries(m):
    H, I = m.base.group, m.coeff
    seen = {}
    for tail in itertools.product(range(I.n), repeat=H.n - 1):
        c = rb_coboundary(m, (0,) + tail)
        seen[c.flatten()] = c
    return [seen[k] for k in sorted(seen)]


def h2_rb(m, bound=RB_CLASS_ENUMERATION_BOUND):
    """One lexicographically-least representative per class, sorted."""
    cocycles = enumerate_rb_cocycles(m, bound=bound)
    boundaries = enumerate_rb_coboundaries(m)
    I = m.coeff
    remaining = {c.flatten(): c for c in cocycles}
    reps = []
    while remaining:
        rep = remaining[min(remaining)]
        reps.append(rep)
        for b in boundaries:
            remaining.pop(add_rb_cochains(I, rep, b).flatten(), None)
    return reps


@dataclass(frozen=True)
class RBExtension:
    """An operator group containing the coefficients, with projection to the base."""

    op: RBOperator
    embed: ElementMap
    project: ElementMap


def extension_from_rb_cocycle(m, c):
    """The twisted product (h,y) -> h*|I|+y realizing the cocycle."""
    failure = rb_cocycle_failure(m, c)
    if failure is not None:
        raise NotCocycle(f"{failure[0]} identity fails at {failure[1]}")
    H, I = m.base.group, m.coeff
    rh, ri = m.base.map, m.r_i
    g = m.gamma.images
    tab = I.table
    n, k = H.n, I.n
    size = n * k
    table = [[0] * size for _ in range(size)]
    for h1 in range(n):
        for y1 in range(k):
            row = table[h1 * k + y1]
            for h2 in range(n):
                base = H.table[h1][h2] * k
                tw = tab[c.tau[h1][h2]][g[h2][y1]]
                for y2 in range(k):
                    row[h2 * k + y2] = base + tab[tw][y2]
    E = validate_group(table)
    values = [
        rh(h) * k + tab[c.r[h]][ri(g[rh(h)][y])]
        for h in range(n)
        for y in range(k)
    ]
    op = validate_rb(E, values)
    embed = ElementMap(tuple(range(k)))
    project = ElementMap(tuple(h for h in range(n) for _ in range(k)))
    return RBExtension(op, embed, project)


def _embedded_coeff_group(E, embed):
    values = tuple(embed)
    if len(set(values)) != len(values) or values[0] != 0:
        raise NotRBExtension("embedding must be injective and send 0 to 0")
    lookup = {e: y for y, e in enumerate(values)}
    table = []
    for y1 in range(len(values)):
        row = []
        for y2 in range(len(values)):
            prod = E.table[values[y1]][values[y2]]
            if prod not in lookup:
                raise NotRBExtension("embedded image is not closed")
            row.append(lookup[prod])
        table.append(row)
    return validate_group(table), lookup


def rb_cocycle_from_extension(ext, s):
    """Extract (tau, r) through a normalized section of the projection.

    The quotient operator and the coefficient operator are both derived and
    checked for well-definedness on the way.
    """
    E = ext.op.group
    re_map = ext.op.map
    proj = tuple(ext.project)
    vals = tuple(s)
    _, lookup = _embedded_coeff_group(E, ext.embed)
    n = len(vals)
    if vals[0] != 0:
        raise NotASection("section must send 0 to 0")
    for h, e in enumerate(vals):
        if proj[e] != h:
            raise NotASection(f"project(s({h})) = {proj[e]} != {h}", witness=(h,))
    # the embedded subgroup must be stable under the big operator
    for e in tuple(ext.embed):
        if re_map(e) not in lookup:
            raise NotRBExtension("operator does not restrict to the coefficients")
    # quotient operator: well-defined iff project . R_E factors through project
    rh = [proj[re_map(vals[h])] for h in range(n)]
    for e in range(E.n):
        if proj[re_map(e)] != rh[proj[e]]:
            raise NotRBExtension(
                f"projected operator not well defined at {e}", witness=(e,)
            )
    tau = [[0] * n for _ in range(n)]
    r = [0] * n
    for h1 in range(n):
        for h2 in range(n):
            prod = E.table[vals[h1]][vals[h2]]
            sh = vals[proj[prod]]
            defect = E.table[E.inv[sh]][prod]
            if defect not in lookup:
                raise NotRBExtension("section defect leaves the coefficients")
            tau[h1][h2] = lookup[defect]
    for h in range(n):
        defect = E.table[E.inv[vals[rh[h]]]][re_map(vals[h])]
        if defect not in lookup:
            raise NotRBExtension("operator defect leaves the coefficients")
        r[h] = lookup[defect]
    return RB2Cochain(tau, r)
