"""Second cohomology of a relative Rota-Baxter group with module coefficients.

The base is a relative operator group (A, B, beta, T).  Coefficients are a
pair of abelian groups (K, L) joined by a homomorphism S : K -> L (a relative
operator group whose action component is trivial), made into a module by a
quadruple of maps: a left action nu of B on K, a right action mu of A on K, a
right action sigma of B on L, and a pairing f : L x A -> K that is additive
in L and a mu-derivation in A.  Two coupling laws tie S to the actions:

    S(nu^-1_{T(a)}(mu_a(k)) + nu^-1_{T(a)}(f(S(k), a))) = sigma_{T(a)}(S(k))
    nu_b(mu_a(k)) = mu_{beta_b(a)}(nu_b(k))

A 2-cochain is a quadruple (tau1, tau2, rho, chi) of normalized tables
valued in K, L, K, L respectively.  Cocycles satisfy five identities: the
group 2-cocycle identity for tau1 over mu and for tau2 over sigma, two mixed
identities for rho, and one operator identity coupling everything through S
and the descendent product a1 . beta_{T(a1)}(a2).  Coboundaries arise from
pairs of normalized 1-cochains (kappa1, kappa2).

The extension dictionary realizes every cocycle as a relative operator group
on the twisted products H = A x K and G = B x L with

    phi_{(b,l)}(a, k) = (beta_b(a), rho(a,b) + nu_b(f(l,a) + k))
    R(a, k) = (T(a), chi(a) + S(nu^-1_{T(a)}(k)))

and extracts the module data and the cochain back through normalized
sections of the two projections.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from ..errors import (
    ActionInvalid,
    AlgebraError,
    CoeffNotAbelian,
    ModuleLawFails,
    NotASection,
    NotAntiAction,
    NotCocycle,
    NotHomomorphic,
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
from ..rota_baxter import RRBGroup, descendent_circle, validate_rrb

RRB_CLASS_ENUMERATION_BOUND = 2**16
KAPPA_SEARCH_BOUND = 2**20


@dataclass(frozen=True)
class ActionQuadruple:
    """Validated module data; construct via :func:`validate_rrb_module`."""

    base: RRBGroup
    coeff_k: FiniteGroup
    coeff_l: FiniteGroup
    s_op: ElementMap
    nu: GroupAction
    mu: GroupAction
    sigma: GroupAction
    f: tuple

    def nu_inv(self, b, k):
        return self.nu.images[self.base.g_group.inv[b]][k]


@dataclass(frozen=True)
class RRB2Cochain:
    """Tables (tau1, tau2, rho, chi) valued in K, L, K, L."""

    tau1: tuple
    tau2: tuple
    rho: tuple
    chi: tuple

    def __post_init__(self):
        for name in ("tau1", "tau2", "rho"):
            rows = getattr(self, name)
            object.__setattr__(
                self, name, tuple(tuple(int(v) for v in row) for row in rows)
            )
        object.__setattr__(self, "chi", tuple(int(v) for v in self.chi))

    def flatten(self):
        flat = []
        for name in ("tau1", "tau2", "rho"):
            for row in getattr(self, name):
                flat.extend(row)
        flat.extend(self.chi)
        return tuple(flat)


def zero_rrb_cochain(a_n, b_n):
    zero_row_a = tuple(0 for _ in range(a_n))
    zero_row_b = tuple(0 for _ in range(b_n))
    return RRB2Cochain(
        tuple(zero_row_a for _ in range(a_n)),
        tuple(zero_row_b for _ in range(b_n)),
        tuple(zero_row_b for _ in range(a_n)),
        zero_row_a,
    )


def _as_images(maps):
    if isinstance(maps, GroupAction):
        return maps.images
    return maps


def validate_rrb_module(base, coeff_k, coeff_l, s_op, nu, mu, sigma, f):
    """Exhaustively check every condition that makes the data a module."""
    A, B = base.h_group, base.g_group
    K, L = coeff_k, coeff_l
    if not K.is_abelian() or not L.is_abelian():
        raise CoeffNotAbelian("both coefficient groups must be abelian")
    s_op = ElementMap(tuple(s_op))
    if s_op.domain_order != K.n or any(v >= L.n for v in s_op):
        raise PreconditionFails("coefficient operator must map K into L")
    if not is_homomorphism(s_op, K, L):
        raise NotHomomorphic("coefficient operator must be a homomorphism")
    try:
        nu_a = validate_action(B, K, _as_images(nu), contravariant=False)
    except AlgebraError as exc:
        raise ActionInvalid(f"nu is not a left action of B on K: {exc}") from exc
    try:
        mu_a = validate_action(A, K, _as_images(mu), contravariant=True)
    except AlgebraError as exc:
        raise NotAntiAction(f"mu is not a right action of A on K: {exc}") from exc
    try:
        sigma_a = validate_action(B, L, _as_images(sigma), contravariant=True)
    except AlgebraError as exc:
        raise NotAntiAction(f"sigma is not a right action of B on L: {exc}") from exc
    f = tuple(tuple(int(v) for v in row) for row in f)
    if len(f) != L.n or any(len(row) != A.n for row in f) or any(
        v < 0 or v >= K.n for row in f for v in row
    ):
        raise PreconditionFails("pairing must be an |L| x |A| table valued in K")
    kt = K.table
    nu_im, mu_im, sg_im = nu_a.images, mu_a.images, sigma_a.images
    beta, t_map = base.phi, base.r
    for l1 in range(L.n):
        for l2 in range(L.n):
            for a in range(A.n):
                if f[L.table[l1][l2]][a] != kt[f[l1][a]][f[l2][a]]:
                    raise ModuleLawFails(
                        "pairing is not additive in its L slot at "
                        f"(l1,l2,a)=({l1},{l2},{a})",
                        witness=(l1, l2, a),
                    )
    for l in range(L.n):
        for a1 in range(A.n):
            for a2 in range(A.n):
                if f[l][A.table[a1][a2]] != kt[mu_im[a2][f[l][a1]]][f[l][a2]]:
                    raise ModuleLawFails(
                        "pairing is not a mu-derivation in its A slot at "
                        f"(l,a1,a2)=({l},{a1},{a2})",
                        witness=(l, a1, a2),
                    )
    b_inv = B.inv
    for a in range(A.n):
        ta = t_map(a)
        nu_back = nu_im[b_inv[ta]]
        for k in range(K.n):
            lhs = s_op(kt[nu_back[mu_im[a][k]]][nu_back[f[s_op(k)][a]]])
            if lhs != sg_im[ta][s_op(k)]:
                raise ModuleLawFails(
                    f"operator compatibility fails at (a,k)=({a},{k})",
                    witness=(a, k),
                )
    for b in range(B.n):
        for a in range(A.n):
            ba = beta.apply(b, a)
            for k in range(K.n):
                if nu_im[b][mu_im[a][k]] != mu_im[ba][nu_im[b][k]]:
                    raise ModuleLawFails(
                        f"nu and mu do not commute at (a,b,k)=({a},{b},{k})",
                        witness=(a, b, k),
                    )
    return ActionQuadruple(base, K, L, s_op, nu_a, mu_a, sigma_a, f)


def trivial_rrb_module(base, coeff_k, coeff_l, s_op=None, f=None):
    """Trivial actions; S and f may still be nontrivial when the laws allow."""
    A, B = base.h_group, base.g_group
    K, L = coeff_k, coeff_l
    s_vals = tuple(s_op) if s_op is not None else (0,) * K.n
    f_rows = (
        tuple(tuple(row) for row in f)
        if f is not None
        else tuple(tuple(0 for _ in range(A.n)) for _ in range(L.n))
    )
    ident_k = tuple(range(K.n))
    ident_l = tuple(range(L.n))
    return validate_rrb_module(
        base,
        K,
        L,
        s_vals,
        tuple(ident_k for _ in range(B.n)),
        tuple(ident_k for _ in range(A.n)),
        tuple(ident_l for _ in range(B.n)),
        f_rows,
    )


def rrb_coboundary(q, kappa1, kappa2):
    """The cochain induced by a pair of normalized 1-cochains."""
    A, B = q.base.h_group, q.base.g_group
    K, L = q.coeff_k, q.coeff_l
    k1, k2 = tuple(kappa1), tuple(kappa2)
    if len(k1) != A.n or k1[0] != 0 or len(k2) != B.n or k2[0] != 0:
        raise PreconditionFails("kappa1 and kappa2 must be normalized 1-cochains")
    kt, kneg = K.table, K.inv
    lt, lneg = L.table, L.inv
    nu_im, mu_im, sg_im = q.nu.images, q.mu.images, q.sigma.images
    beta, t_map, s_op, f = q.base.phi, q.base.r, q.s_op, q.f
    tau1 = [
        [
            kt[kt[kneg[k1[A.table[a1][a2]]]][k1[a2]]][mu_im[a2][k1[a1]]]
            for a2 in range(A.n)
        ]
        for a1 in range(A.n)
    ]
    tau2 = [
        [
            lt[lt[lneg[k2[B.table[b1][b2]]]][k2[b2]]][sg_im[b2][k2[b1]]]
            for b2 in range(B.n)
        ]
        for b1 in range(B.n)
    ]
    rho = [
        [
            kt[nu_im[b][kt[f[k2[b]][a]][k1[a]]]][kneg[k1[beta.apply(b, a)]]]
            for b in range(B.n)
        ]
        for a in range(A.n)
    ]
    chi = [
        lt[s_op(nu_im[B.inv[t_map(a)]][k1[a]])][lneg[k2[t_map(a)]]]
        for a in range(A.n)
    ]
    out = RRB2Cochain(tau1, tau2, rho, chi)
    failure = rrb_cocycle_failure(q, out)
    if failure is not None:
        raise AssertionError(
            f"coboundary escaped the cocycle space at {failure}; internal defect"
        )
    return out


def _identity_residuals(q, c):
    """Yield (identity name, instance tuple, lhs, rhs) for every instance.

    The single transliteration of the five cocycle identities; consumers
    compare lhs against rhs (failure reporting) or difference them (the
    GF(2) sampler).  Normalization is not an identity and is checked by
    :func:`rrb_cocycle_failure` directly.
    """
    A, B = q.base.h_group, q.base.g_group
    K, L = q.coeff_k, q.coeff_l
    kt, lt = K.table, L.table
    nu_im, mu_im, sg_im = q.nu.images, q.mu.images, q.sigma.images
    beta, t_map, s_op, f = q.base.phi, q.base.r, q.s_op, q.f
    na, nb = A.n, B.n
    tau1, tau2, rho, chi = c.tau1, c.tau2, c.rho, c.chi
    at, bt = A.table, B.table
    for a1 in range(na):
        for a2 in range(na):
            for a3 in range(na):
                lhs = kt[tau1[a2][a3]][tau1[a1][at[a2][a3]]]
                rhs = kt[tau1[at[a1][a2]][a3]][mu_im[a3][tau1[a1][a2]]]
                yield "tau1", (a1, a2, a3), lhs, rhs
    for b1 in range(nb):
        for b2 in range(nb):
            for b3 in range(nb):
                lhs = lt[tau2[b2][b3]][tau2[b1][bt[b2][b3]]]
                rhs = lt[tau2[bt[b1][b2]][b3]][sg_im[b3][tau2[b1][b2]]]
                yield "tau2", (b1, b2, b3), lhs, rhs
    for a1 in range(na):
        for b1 in range(nb):
            for b2 in range(nb):
                lhs = kt[rho[beta.apply(b2, a1)][b1]][nu_im[b1][rho[a1][b2]]]
                b12 = bt[b1][b2]
                rhs = kt[rho[a1][b12]][nu_im[b12][f[tau2[b1][b2]][a1]]]
                yield "rho-action", (a1, b1, b2), lhs, rhs
    for a1 in range(na):
        for a2 in range(na):
            for b1 in range(nb):
                lhs = kt[rho[at[a1][a2]][b1]][nu_im[b1][tau1[a1][a2]]]
                ba1, ba2 = beta.apply(b1, a1), beta.apply(b1, a2)
                rhs = kt[kt[mu_im[ba2][rho[a1][b1]]][rho[a2][b1]]][tau1[ba1][ba2]]
                yield "rho-product", (a1, a2, b1), lhs, rhs
    lneg = L.inv
    for a1 in range(na):
        ta1 = t_map(a1)
        for a2 in range(na):
            circ = descendent_circle(q.base, a1, a2)
            dchi = lt[lt[chi[a2]][lneg[chi[circ]]]][sg_im[t_map(a2)][chi[a1]]]
            lhs = lt[tau2[ta1][t_map(a2)]][dchi]
            inner = kt[
                kt[rho[a2][ta1]][tau1[a1][beta.apply(ta1, a2)]]
            ][nu_im[ta1][f[chi[a1]][a2]]]
            rhs = s_op(nu_im[B.inv[t_map(circ)]][inner])
            yield "operator", (a1, a2), lhs, rhs


def rrb_cocycle_failure(q, c):
    """None if c is a cocycle, else (identity name, violating tuple)."""
    na, nb = q.base.h_group.n, q.base.g_group.n
    tau1, tau2, rho, chi = c.tau1, c.tau2, c.rho, c.chi
    if chi[0] != 0:
        return "normalization", ("chi", 0)
    for i in range(na):
        if tau1[0][i] or tau1[i][0]:
            return "normalization", ("tau1", i)
    for i in range(nb):
        if tau2[0][i] or tau2[i][0]:
            return "normalization", ("tau2", i)
    for a in range(na):
        if rho[a][0]:
            return "normalization", ("rho", a)
    for b in range(nb):
        if rho[0][b]:
            return "normalization", ("rho", b)
    for name, where, lhs, rhs in _identity_residuals(q, c):
        if lhs != rhs:
            return name, where
    return None


def is_rrb_cocycle(q, c):
    return rrb_cocycle_failure(q, c) is None


def add_rrb_cochains(q, a, b):
    kt, lt = q.coeff_k.table, q.coeff_l.table
    tau1 = [[kt[x][y] for x, y in zip(ra, rb)] for ra, rb in zip(a.tau1, b.tau1)]
    tau2 = [[lt[x][y] for x, y in zip(ra, rb)] for ra, rb in zip(a.tau2, b.tau2)]
    rho = [[kt[x][y] for x, y in zip(ra, rb)] for ra, rb in zip(a.rho, b.rho)]
    chi = [lt[x][y] for x, y in zip(a.chi, b.chi)]
    return RRB2Cochain(tau1, tau2, rho, chi)


def _cochain_from_slots(na, nb, flat):
    """Rebuild a normalized cochain from its free slots, in tau1/tau2/rho/chi order."""
    it = iter(flat)
    tau1 = [[0] * na for _ in range(na)]
    for i in range(1, na):
        for j in range(1, na):
            tau1[i][j] = next(it)
    tau2 = [[0] * nb for _ in range(nb)]
    for i in range(1, nb):
        for j in range(1, nb):
            tau2[i][j] = next(it)
    rho = [[0] * nb for _ in range(na)]
    for i in range(1, na):
        for j in range(1, nb):
            rho[i][j] = next(it)
    chi = [0] + [next(it) for _ in range(na - 1)]
    return RRB2Cochain(tau1, tau2, rho, chi)


def enumerate_rrb_cocycles(q, bound=RRB_CLASS_ENUMERATION_BOUND):
    """All cocycles, lexicographic by flattened values."""
    na, nb = q.base.h_group.n, q.base.g_group.n
    nk, nl = q.coeff_k.n, q.coeff_l.n
    k_slots = (na - 1) * (na - 1) + (na - 1) * (nb - 1)
    l_slots = (nb - 1) * (nb - 1) + (na - 1)
    total = nk**k_slots * nl**l_slots
    if total > bound:
        raise SearchTooLarge(f"{total} candidate cochains exceed bound {bound}")
    sizes = (
        [nk] * ((na - 1) * (na - 1))
        + [nl] * ((nb - 1) * (nb - 1))
        + [nk] * ((na - 1) * (nb - 1))
        + [nl] * (na - 1)
    )
    out = []
    for flat in itertools.product(*[range(s) for s in sizes]):
        c = _cochain_from_slots(na, nb, flat)
        if is_rrb_cocycle(q, c):
            out.append(c)
    return out


def _gf2_kernel(columns):
    """Null-space basis of the GF(2) matrix whose columns are the bitmasks."""
    pivots = {}
    kernel = []
    for i, col in enumerate(columns):
        combo = 1 << i
        while col:
            lead = col.bit_length() - 1
            if lead not in pivots:
                pivots[lead] = (col, combo)
                break
            seen_col, seen_combo = pivots[lead]
            col ^= seen_col
            combo ^= seen_combo
        else:
            kernel.append(combo)
    return kernel


def rrb_cocycle_basis(q):
    """A GF(2) basis of the cocycle space, for order-2 coefficient groups.

    When both coefficients have order 2 every structural map (the actions, S,
    and the L slot of the pairing) is additive, so the five identities cut
    out a GF(2)-linear subspace of the normalized free slots; its basis comes
    from Gaussian elimination on the residuals of the single-slot cochains.
    The whole cocycle space is the set of XOR combinations of the basis —
    use this instead of :func:`enumerate_rrb_cocycles` when the slot count
    makes full enumeration infeasible.
    """
    if q.coeff_k.n != 2 or q.coeff_l.n != 2:
        raise PreconditionFails(
            "the cocycle space is GF(2)-linear only for order-2 coefficients"
        )
    na, nb = q.base.h_group.n, q.base.g_group.n
    dim = (na - 1) * (na - 1) + (nb - 1) * (nb - 1) + (na - 1) * (nb - 1) + (na - 1)
    columns = []
    for i in range(dim):
        single = [0] * dim
        single[i] = 1
        c = _cochain_from_slots(na, nb, single)
        mask = 0
        for bit, (_, _, lhs, rhs) in enumerate(_identity_residuals(q, c)):
            if lhs != rhs:
                mask |= 1 << bit
        columns.append(mask)
    basis = []
    for combo in _gf2_kernel(columns):
        slots = [(combo >> i) & 1 for i in range(dim)]
        c = _cochain_from_slots(na, nb, slots)
        assert is_rrb_cocycle(q, c), "kernel member fails the identities"
        basis.append(c)
    return basis


def sample_rrb_cocycles(q, count, seed=0):
    """A deterministic sample of ``count`` distinct cocycles, seeded."""
    basis = [c.flatten() for c in rrb_cocycle_basis(q)]
    total = 1 << len(basis)
    if count > total:
        raise SearchTooLarge(
            f"only {total} cocycles exist; cannot sample {count} distinct ones"
        )
    na, nb = q.base.h_group.n, q.base.g_group.n
    length = len(zero_rrb_cochain(na, nb).flatten())
    rng = random.Random(seed)
    out = []
    chosen = set()
    while len(out) < count:
        pick = rng.randrange(total)
        if pick in chosen:
            continue
        chosen.add(pick)
        flat = [0] * length
        for j, vec in enumerate(basis):
            if (pick >> j) & 1:
                flat = [x ^ y for x, y in zip(flat, vec)]
        it = iter(flat)
        tau1 = [[next(it) for _ in range(na)] for _ in range(na)]
        tau2 = [[next(it) for _ in range(nb)] for _ in range(nb)]
        rho = [[next(it) for _ in range(nb)] for _ in range(na)]
        chi = [next(it) for _ in range(na)]
        out.append(RRB2Cochain(tau1, tau2, rho, chi))
    return out


def enumerate_rrb_coboundaries(q):
    na, nb = q.base.h_group.n, q.base.g_group.n
    nk, nl = q.coeff_k.n, q.coeff_l.n
    seen = {}
    for tail1 in itertools.product(range(nk), repeat=na - 1):
        for tail2 in itertools.product(range(nl), repeat=nb - 1):
            c = rrb_coboundary(q, (0,) + tail1, (0,) + tail2)
            seen[c.flatten()] = c
    return [seen[k] for k in sorted(seen)]


def is_rrb_coboundary(q, c, bound=KAPPA_SEARCH_BOUND):
    """The witnessing (kappa1, kappa2) in lexicographic order, or None."""
    na, nb = q.base.h_group.n, q.base.g_group.n
    nk, nl = q.coeff_k.n, q.coeff_l.n
    total = nk ** (na - 1) * nl ** (nb - 1)
    if total > bound:
        raise SearchTooLarge(f"{total} candidate pairs exceed bound {bound}")
    target = c.flatten()
    for tail1 in itertools.product(range(nk), repeat=na - 1):
        for tail2 in itertools.product(range(nl), repeat=nb - 1):
            k1, k2 = (0,) + tail1, (0,) + tail2
            if rrb_coboundary(q, k1, k2).flatten() == target:
                return ElementMap(k1), ElementMap(k2)
    return None


def h2_rrb(q, bound=RRB_CLASS_ENUMERATION_BOUND):
    """One lexicographically-least representative per class, sorted."""
    cocycles = enumerate_rrb_cocycles(q, bound=bound)
    boundaries = enumerate_rrb_coboundaries(q)
    remaining = {c.flatten(): c for c in cocycles}
    reps = []
    while remaining:
        rep = remaining[min(remaining)]
        reps.append(rep)
        for b in boundaries:
            remaining.pop(add_rrb_cochains(q, rep, b).flatten(), None)
    return reps


@dataclass(frozen=True)
class RRBExtension:
    """A relative operator group containing the coefficients on both levels."""

    rrb: RRBGroup
    embed_k: ElementMap
    embed_l: ElementMap
    project_h: ElementMap
    project_g: ElementMap


def extension_from_rrb_cocycle(q, c):
    """The twisted products (a,k) -> a*|K|+k and (b,l) -> b*|L|+l."""
    failure = rrb_cocycle_failure(q, c)
    if failure is not None:
        raise NotCocycle(f"{failure[0]} identity fails at {failure[1]}")
    A, B = q.base.h_group, q.base.g_group
    K, L = q.coeff_k, q.coeff_l
    kt, lt = K.table, L.table
    nu_im, mu_im, sg_im = q.nu.images, q.mu.images, q.sigma.images
    beta, t_map, s_op, f = q.base.phi, q.base.r, q.s_op, q.f
    na, nb, nk, nl = A.n, B.n, K.n, L.n
    h_size, g_size = na * nk, nb * nl
    h_table = [[0] * h_size for _ in range(h_size)]
    for a1 in range(na):
        for k1 in range(nk):
            row = h_table[a1 * nk + k1]
            for a2 in range(na):
                lead = A.table[a1][a2] * nk
                tw = kt[c.tau1[a1][a2]][mu_im[a2][k1]]
                for k2 in range(nk):
                    row[a2 * nk + k2] = lead + kt[tw][k2]
    g_table = [[0] * g_size for _ in range(g_size)]
    for b1 in range(nb):
        for l1 in range(nl):
            row = g_table[b1 * nl + l1]
            for b2 in range(nb):
                lead = B.table[b1][b2] * nl
                tw = lt[c.tau2[b1][b2]][sg_im[b2][l1]]
                for l2 in range(nl):
                    row[b2 * nl + l2] = lead + lt[tw][l2]
    H = validate_group(h_table)
    G = validate_group(g_table)
    phi_images = [
        [
            beta.apply(b, a) * nk + kt[c.rho[a][b]][nu_im[b][kt[f[l][a]][k]]]
            for a in range(na)
            for k in range(nk)
        ]
        for b in range(nb)
        for l in range(nl)
    ]
    nu_back = [nu_im[B.inv[b]] for b in range(nb)]
    r_values = [
        t_map(a) * nl + lt[c.chi[a]][s_op(nu_back[t_map(a)][k])]
        for a in range(na)
        for k in range(nk)
    ]
    rrb = validate_rrb(H, G, phi_images, r_values)
    return RRBExtension(
        rrb,
        ElementMap(tuple(range(nk))),
        ElementMap(tuple(range(nl))),
        ElementMap(tuple(a for a in range(na) for _ in range(nk))),
        ElementMap(tuple(b for b in range(nb) for _ in range(nl))),
    )


def _embedded_subgroup(E, embed):
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


def _checked_section(s, project, size, label):
    vals = tuple(s)
    proj = tuple(project)
    if len(vals) != size:
        raise NotASection(f"{label} must list one lift per base element")
    if vals[0] != 0:
        raise NotASection(f"{label} must send 0 to 0")
    for x, e in enumerate(vals):
        if proj[e] != x:
            raise NotASection(f"project({label}({x})) = {proj[e]} != {x}", witness=(x,))
    return vals, proj


def _quotient_table(E, vals, proj, size, label):
    table = [[proj[E.table[vals[x1]][vals[x2]]] for x2 in range(size)] for x1 in range(size)]
    for e1 in range(E.n):
        for e2 in range(E.n):
            if proj[E.table[e1][e2]] != table[proj[e1]][proj[e2]]:
                raise NotRBExtension(
                    f"{label} projection is not multiplicative at ({e1},{e2})",
                    witness=(e1, e2),
                )
    return validate_group(table)


def _analyzed_extension(ext, s_h, s_g):
    """Derive base, module data, and cochain; check every well-definedness law."""
    E = ext.rrb
    H, G, phi, r_op = E.h_group, E.g_group, E.phi, E.r
    K, lookup_k = _embedded_subgroup(H, ext.embed_k)
    L, lookup_l = _embedded_subgroup(G, ext.embed_l)
    na = H.n // K.n
    nb = G.n // L.n
    h_vals, h_proj = _checked_section(s_h, ext.project_h, na, "s_h")
    g_vals, g_proj = _checked_section(s_g, ext.project_g, nb, "s_g")
    if {e for e in range(H.n) if h_proj[e] == 0} != set(tuple(ext.embed_k)):
        raise NotRBExtension("K must embed onto the kernel of the H projection")
    if {e for e in range(G.n) if g_proj[e] == 0} != set(tuple(ext.embed_l)):
        raise NotRBExtension("L must embed onto the kernel of the G projection")
    A = _quotient_table(H, h_vals, h_proj, na, "H")
    B = _quotient_table(G, g_vals, g_proj, nb, "G")
    beta = [[h_proj[phi.apply(g_vals[b], h_vals[a])] for a in range(na)] for b in range(nb)]
    for g in range(G.n):
        for h in range(H.n):
            if h_proj[phi.apply(g, h)] != beta[g_proj[g]][h_proj[h]]:
                raise NotRBExtension(
                    f"the action does not descend to the base at ({g},{h})",
                    witness=(g, h),
                )
    t_vals = [g_proj[r_op(h_vals[a])] for a in range(na)]
    for h in range(H.n):
        if g_proj[r_op(h)] != t_vals[h_proj[h]]:
            raise NotRBExtension(
                f"the operator does not descend to the base at {h}", witness=(h,)
            )
    k_emb, l_emb = tuple(ext.embed_k), tuple(ext.embed_l)
    for l in range(L.n):
        for k in range(K.n):
            if phi.apply(l_emb[l], k_emb[k]) != k_emb[k]:
                raise NotRBExtension(
                    "embedded L must act trivially on embedded K", witness=(l, k)
                )
    base = validate_rrb(A, B, beta, t_vals)
    s_vals = [lookup_l[r_op(k_emb[k])] for k in range(K.n)]
    nu_images = [
        [lookup_k[phi.apply(g_vals[b], k_emb[k])] for k in range(K.n)]
        for b in range(nb)
    ]
    mu_images = [
        [
            lookup_k[H.table[H.table[H.inv[h_vals[a]]][k_emb[k]]][h_vals[a]]]
            for k in range(K.n)
        ]
        for a in range(na)
    ]
    sigma_images = [
        [
            lookup_l[G.table[G.table[G.inv[g_vals[b]]][l_emb[l]]][g_vals[b]]]
            for l in range(L.n)
        ]
        for b in range(nb)
    ]
    f_table = [
        [
            lookup_k[H.table[H.inv[h_vals[a]]][phi.apply(l_emb[l], h_vals[a])]]
            for a in range(na)
        ]
        for l in range(L.n)
    ]
    quadruple = validate_rrb_module(
        base, K, L, s_vals, nu_images, mu_images, sigma_images, f_table
    )
    tau1 = [
        [
            lookup_k[
                H.table[H.inv[h_vals[A.table[a1][a2]]]][
                    H.table[h_vals[a1]][h_vals[a2]]
                ]
            ]
            for a2 in range(na)
        ]
        for a1 in range(na)
    ]
    tau2 = [
        [
            lookup_l[
                G.table[G.inv[g_vals[B.table[b1][b2]]]][
                    G.table[g_vals[b1]][g_vals[b2]]
                ]
            ]
            for b2 in range(nb)
        ]
        for b1 in range(nb)
    ]
    rho = [
        [
            lookup_k[
                H.table[H.inv[h_vals[beta[b][a]]]][phi.apply(g_vals[b], h_vals[a])]
            ]
            for b in range(nb)
        ]
        for a in range(na)
    ]
    chi = [
        lookup_l[G.table[G.inv[g_vals[t_vals[a]]]][r_op(h_vals[a])]]
        for a in range(na)
    ]
    return quadruple, RRB2Cochain(tau1, tau2, rho, chi)


def quadruple_from_extension(ext, s_h, s_g):
    """The module data induced on the coefficients by the ambient structure."""
    quadruple, _ = _analyzed_extension(ext, s_h, s_g)
    return quadruple


def rrb_cocycle_from_extension(ext, s_h, s_g):
    """The cochain measuring how far the sections are from homomorphisms."""
    quadruple, cochain = _analyzed_extension(ext, s_h, s_g)
    failure = rrb_cocycle_failure(quadruple, cochain)
    if failure is not None:
        raise AssertionError(
            f"extracted cochain is not a cocycle at {failure}; internal defect"
        )
    return cochain
