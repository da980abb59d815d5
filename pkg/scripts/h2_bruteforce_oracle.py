#!/usr/bin/env python3
"""Brute-force counts of second-cohomology data over the two-element group.

Reference script, deliberately independent of the library: it enumerates raw
cochain tables over C2 = ({0,1}, xor) and filters them through the defining
equations of three cohomology theories (skew brace, Rota-Baxter group,
relative Rota-Baxter group), written out term by term with plain loops.
Class counts come from literally partitioning the cocycle set by coboundary
shifts.  The numbers printed here are frozen into the test suite as
independently produced expected values, so this script must never import
from the library.

At carrier size 2 every automorphism-valued action is forced to be the
identity (C2 has no nontrivial automorphisms).  The action maps are still
written into the formulas so each equation keeps the shape of its
definition.

Run:  python scripts/h2_bruteforce_oracle.py
"""

import itertools
import json

# ---------------------------------------------------------------------------
# C2 = {0, 1} under xor, identity 0.  Both the base carrier and the
# coefficient group; coefficients are written additively.

ELEMS = (0, 1)


def op(a, b):
    return a ^ b


def inv(a):
    return a  # every element of C2 is its own inverse


cadd = op
cneg = inv

# Enumeration material: all binary tables {0,1}^2 -> {0,1} and all maps
# {0,1} -> {0,1}, whether normalized or not; normalization is filtered
# explicitly like any other condition.
TABLES = [((a, b), (c, d)) for a in ELEMS for b in ELEMS for c in ELEMS for d in ELEMS]
MAPS = [(a, b) for a in ELEMS for b in ELEMS]
PAIRS = list(itertools.product(ELEMS, repeat=2))
TRIPLES = list(itertools.product(ELEMS, repeat=3))


def normalized2(t):
    return t[0][0] == 0 and t[0][1] == 0 and t[1][0] == 0


def normalized1(m):
    return m[0] == 0


def txor(x, y):
    """Elementwise xor of two equally-shaped nested tuples (or ints)."""
    if isinstance(x, int):
        return x ^ y
    return tuple(txor(a, b) for a, b in zip(x, y))


def class_count(cocycles, boundaries):
    """Number of cosets of the boundary set inside the cocycle set.

    Sanity-checks the group structure on the way: boundaries must all be
    cocycles, the cocycle set must be closed under addition, and every coset
    must have exactly |boundaries| members.
    """
    zset = set(cocycles)
    bset = set(boundaries)
    if not bset <= zset:
        raise AssertionError("a coboundary failed the cocycle conditions")
    for x in zset:
        for y in bset:
            if txor(x, y) not in zset:
                raise AssertionError("cocycle set not closed under boundary shift")
    reps = {min(txor(z, b) for b in bset) for z in zset}
    if len(reps) * len(bset) != len(zset):
        raise AssertionError("cosets do not partition evenly")
    return len(reps)


# ---------------------------------------------------------------------------
# Theory 1: skew-brace cohomology of the trivial brace on C2 with C2
# coefficients and the (forced) trivial good triplet xi = zeta = eps = id.
#
# A 2-cochain is a pair of normalized tables (g, f).  The three defining
# equations, transliterated additively with explicit action subscripts:
#
#   E1: g(m2,m3) - g(m1.m2, m3) + g(m1, m2.m3) - zeta_{m3}(g(m1,m2)) = 0
#   E2: xi_{m1}(f(m2,m3)) - f(m1*m2, m3) + f(m1, m2*m3)
#       - xi_{m1*m2*m3}(eps_{m3}(xi^{-1}_{m1*m2}(f(m1,m2)))) = 0
#   E3: xi_{m1}(g(m2,m3)) + zeta_{m1*m3}(g(m1, m1^-1))
#       - zeta_{m1*m3}(g(m1*m2, m1^-1)) - g((m1*m2).m1^-1, m1*m3)
#       - zeta_{m1^-1.(m1*m3)}(f(m1,m2)) + f(m1, m2.m3) - f(m1, m3) = 0
#
# where "." is the additive and "*" the multiplicative brace operation (both
# xor for the trivial brace on C2).

dot = op
circ = op


def xi(m, y):
    return y


def xi_inv(m, y):
    return y


def zeta(m, y):
    return y


def eps(m, y):
    return y


def sb_is_cocycle(g, f):
    for m1, m2, m3 in TRIPLES:
        e1 = cadd(
            cadd(g[m2][m3], cneg(g[dot(m1, m2)][m3])),
            cadd(g[m1][dot(m2, m3)], cneg(zeta(m3, g[m1][m2]))),
        )
        if e1 != 0:
            return False
        e2 = cadd(
            cadd(xi(m1, f[m2][m3]), cneg(f[circ(m1, m2)][m3])),
            cadd(
                f[m1][circ(m2, m3)],
                cneg(
                    xi(
                        circ(circ(m1, m2), m3),
                        eps(m3, xi_inv(circ(m1, m2), f[m1][m2])),
                    )
                ),
            ),
        )
        if e2 != 0:
            return False
        e3 = 0
        e3 = cadd(e3, xi(m1, g[m2][m3]))
        e3 = cadd(e3, zeta(circ(m1, m3), g[m1][inv(m1)]))
        e3 = cadd(e3, cneg(zeta(circ(m1, m3), g[circ(m1, m2)][inv(m1)])))
        e3 = cadd(e3, cneg(g[dot(circ(m1, m2), inv(m1))][circ(m1, m3)]))
        e3 = cadd(e3, cneg(zeta(dot(inv(m1), circ(m1, m3)), f[m1][m2])))
        e3 = cadd(e3, f[m1][dot(m2, m3)])
        e3 = cadd(e3, cneg(f[m1][m3]))
        if e3 != 0:
            return False
    return True


def sb_coboundary(theta):
    g = [[0, 0], [0, 0]]
    f = [[0, 0], [0, 0]]
    for m1, m2 in PAIRS:
        g[m1][m2] = cadd(
            cadd(cneg(theta[dot(m1, m2)]), zeta(m2, theta[m1])), theta[m2]
        )
        f[m1][m2] = cadd(
            cadd(
                cneg(theta[circ(m1, m2)]),
                xi(circ(m1, m2), eps(m2, xi_inv(m1, theta[m1]))),
            ),
            xi(m1, theta[m2]),
        )
    return (tuple(map(tuple, g)), tuple(map(tuple, f)))


def run_sb():
    z2 = [
        (g, f)
        for g in TABLES
        for f in TABLES
        if normalized2(g) and normalized2(f) and sb_is_cocycle(g, f)
    ]
    b2 = {sb_coboundary(theta) for theta in MAPS if normalized1(theta)}
    return {"Z2": len(z2), "B2": len(b2), "H2": class_count(z2, b2)}


# ---------------------------------------------------------------------------
# Theory 2: Rota-Baxter group cohomology.  Base (C2, RH), coefficients
# (C2, RI), associated action gamma trivial; RH and RI range over the two
# endomorphisms of C2 (the zero map and the identity).
#
# A 2-cochain is a pair (tau, r) with tau a normalized table and r a
# normalized map.  Cocycle conditions:
#
#   standard part: tau(h2,h3) - tau(h1 h2, h3) + tau(h1, h2 h3)
#                  - gamma_{h3}(tau(h1,h2)) = 0
#   operator part: beta(h1,h2) = d1r(h1,h2)
#                  - RI(gamma_{RH(h2)}(gamma_{h2}(r(h1)) - r(h1)))
#                  - Phi2(tau)(h1,h2) = 0, where
#   d1r(h1,h2)   = r(h2) - r(h1 o h2) + gamma_{RH(h2)}(r(h1)),
#   Phi2(tau)(h1,h2) = tau(RH h1, RH h2)
#       - RI( gamma_{RH(h1 o h2)}(tau(h1.RH(h1), h2.RH(h1)^-1))
#             + gamma_{h2.RH(h1)^-1}(tau(h1, RH(h1)))
#             + tau(h2, RH(h1)^-1) - tau(RH h1, RH(h1)^-1) ),
#
# with h1 o h2 = h1.RH(h1).h2.RH(h1)^-1 the descendent operation.
# Coboundaries are (d1 theta, -Phi1 theta) with
#   d1 theta(h1,h2) = theta(h2) - theta(h1 h2) + gamma_{h2}(theta(h1)),
#   Phi1 theta(h)   = RI(gamma_{RH(h)}(theta(h))) - theta(RH(h)).

ZERO_MAP = (0, 0)
ID_MAP = (0, 1)


def gamma(h, y):
    return y


def rb_module_law_holds(rh, ri):
    # gamma_{RH(h)}(RI z) = RI( gamma_{h.RH(h)}(z + RI z) - gamma_{RH(h)}(RI z) )
    for h in ELEMS:
        for z in ELEMS:
            lhs = gamma(rh[h], ri[z])
            rhs = ri[
                cadd(
                    gamma(op(h, rh[h]), cadd(z, ri[z])),
                    cneg(gamma(rh[h], ri[z])),
                )
            ]
            if lhs != rhs:
                return False
    return True


def rb_circ(rh, h1, h2):
    return op(op(h1, rh[h1]), op(h2, inv(rh[h1])))


def rb_is_cocycle(rh, ri, tau, r):
    for h1, h2, h3 in TRIPLES:
        std = cadd(
            cadd(tau[h2][h3], cneg(tau[op(h1, h2)][h3])),
            cadd(tau[h1][op(h2, h3)], cneg(gamma(h3, tau[h1][h2]))),
        )
        if std != 0:
            return False
    for h1, h2 in PAIRS:
        d1r = cadd(
            cadd(r[h2], cneg(r[rb_circ(rh, h1, h2)])),
            gamma(rh[h2], r[h1]),
        )
        mid = ri[gamma(rh[h2], cadd(gamma(h2, r[h1]), cneg(r[h1])))]
        phi2 = cadd(
            tau[rh[h1]][rh[h2]],
            cneg(
                ri[
                    cadd(
                        cadd(
                            gamma(
                                rh[rb_circ(rh, h1, h2)],
                                tau[op(h1, rh[h1])][op(h2, inv(rh[h1]))],
                            ),
                            gamma(op(h2, inv(rh[h1])), tau[h1][rh[h1]]),
                        ),
                        cadd(tau[h2][inv(rh[h1])], cneg(tau[rh[h1]][inv(rh[h1])])),
                    )
                ]
            ),
        )
        beta = cadd(cadd(d1r, cneg(mid)), cneg(phi2))
        if beta != 0:
            return False
    return True


def rb_coboundary(rh, ri, theta):
    tau = [[0, 0], [0, 0]]
    for h1, h2 in PAIRS:
        tau[h1][h2] = cadd(
            cadd(theta[h2], cneg(theta[op(h1, h2)])), gamma(h2, theta[h1])
        )
    r = [0, 0]
    for h in ELEMS:
        phi1 = cadd(ri[gamma(rh[h], theta[h])], cneg(theta[rh[h]]))
        r[h] = cneg(phi1)
    return (tuple(map(tuple, tau)), tuple(r))


def run_rb(rh, ri):
    if not rb_module_law_holds(rh, ri):
        raise AssertionError("coefficient pair fails the module law")
    z2 = [
        (tau, r)
        for tau in TABLES
        for r in MAPS
        if normalized2(tau) and normalized1(r) and rb_is_cocycle(rh, ri, tau, r)
    ]
    b2 = {rb_coboundary(rh, ri, theta) for theta in MAPS if normalized1(theta)}
    return {"Z2": len(z2), "B2": len(b2), "H2": class_count(z2, b2)}


# ---------------------------------------------------------------------------
# Theory 3: relative Rota-Baxter cohomology.  Base quadruple (A, B, beta, T)
# with A = B = C2, beta the trivial action and T the identity; coefficients
# (K, L, S) with K = L = C2, nu/mu/sigma trivial, S in {zero, id}, and the
# pairing f : L x A -> K ranging over the tables permitted by the module
# conditions (f additive in each slot, S-compatibility, beta-equivariance).
#
# A 2-cochain is (tau1, tau2, rho, chi) with tau1 : A^2 -> K,
# tau2 : B^2 -> L, rho : A x B -> K, chi : A -> L, all normalized.

def beta_act(b, a):
    return a


def t_op(a):
    return a


def nu(b, k):
    return k


def nu_inv(b, k):
    return k


def mu(a, k):
    return k


def sigma(b, l):
    return l


def pairing_allowed(s_map, f):
    # f(-, a) a homomorphism, f(l, -) a mu-derivation
    for l1, l2, a in TRIPLES:
        if f[op(l1, l2)][a] != cadd(f[l1][a], f[l2][a]):
            return False
    for l, a1, a2 in TRIPLES:
        if f[l][op(a1, a2)] != cadd(mu(a2, f[l][a1]), f[l][a2]):
            return False
    # S( nu^-1_{T(a)}(mu_a(k)) + nu^-1_{T(a)}(f(S(k), a)) ) = sigma_{T(a)}(S(k))
    for a in ELEMS:
        for k in ELEMS:
            lhs = s_map[
                cadd(nu_inv(t_op(a), mu(a, k)), nu_inv(t_op(a), f[s_map[k]][a]))
            ]
            if lhs != sigma(t_op(a), s_map[k]):
                return False
    # nu_b(mu_a(k)) = mu_{beta_b(a)}(nu_b(k))
    for b, a, k in TRIPLES:
        if nu(b, mu(a, k)) != mu(beta_act(b, a), nu(b, k)):
            return False
    return True


def rrb_circ_t(a1, a2):
    return op(a1, beta_act(t_op(a1), a2))


def rrb_is_cocycle(s_map, f, tau1, tau2, rho, chi):
    for x1, x2, x3 in TRIPLES:
        # (1) tau1(a2,a3) + tau1(a1, a2 a3) = tau1(a1 a2, a3) + mu_{a3}(tau1(a1,a2))
        if cadd(tau1[x2][x3], tau1[x1][op(x2, x3)]) != cadd(
            tau1[op(x1, x2)][x3], mu(x3, tau1[x1][x2])
        ):
            return False
        # (2) same shape for tau2 with sigma
        if cadd(tau2[x2][x3], tau2[x1][op(x2, x3)]) != cadd(
            tau2[op(x1, x2)][x3], sigma(x3, tau2[x1][x2])
        ):
            return False
    for a1, b1, b2 in TRIPLES:
        # (3) rho(beta_{b2}(a1), b1) + nu_{b1}(rho(a1,b2))
        #     = rho(a1, b1 b2) + nu_{b1 b2}(f(tau2(b1,b2), a1))
        lhs = cadd(rho[beta_act(b2, a1)][b1], nu(b1, rho[a1][b2]))
        rhs = cadd(rho[a1][op(b1, b2)], nu(op(b1, b2), f[tau2[b1][b2]][a1]))
        if lhs != rhs:
            return False
    for a1, a2, b1 in TRIPLES:
        # (4) rho(a1 a2, b1) + nu_{b1}(tau1(a1,a2))
        #     = mu_{beta_{b1}(a2)}(rho(a1,b1)) + rho(a2,b1)
        #       + tau1(beta_{b1}(a1), beta_{b1}(a2))
        lhs = cadd(rho[op(a1, a2)][b1], nu(b1, tau1[a1][a2]))
        rhs = cadd(
            cadd(mu(beta_act(b1, a2), rho[a1][b1]), rho[a2][b1]),
            tau1[beta_act(b1, a1)][beta_act(b1, a2)],
        )
        if lhs != rhs:
            return False
    for a1, a2 in PAIRS:
        # (5) tau2(T a1, T a2) + [chi(a2) - chi(a1 oT a2) + sigma_{T(a2)}(chi(a1))]
        #     = S( nu^-1_{T(a1 oT a2)}( rho(a2, T(a1)) + tau1(a1, beta_{T(a1)}(a2))
        #                               + nu_{T(a1)}(f(chi(a1), a2)) ) )
        dchi = cadd(
            cadd(chi[a2], cneg(chi[rrb_circ_t(a1, a2)])),
            sigma(t_op(a2), chi[a1]),
        )
        lhs = cadd(tau2[t_op(a1)][t_op(a2)], dchi)
        inner = cadd(
            cadd(rho[a2][t_op(a1)], tau1[a1][beta_act(t_op(a1), a2)]),
            nu(t_op(a1), f[chi[a1]][a2]),
        )
        rhs = s_map[nu_inv(t_op(rrb_circ_t(a1, a2)), inner)]
        if lhs != rhs:
            return False
    return True


def rrb_coboundary(s_map, f, k1, k2):
    tau1 = [[0, 0], [0, 0]]
    tau2 = [[0, 0], [0, 0]]
    rho = [[0, 0], [0, 0]]
    chi = [0, 0]
    for x1, x2 in PAIRS:
        tau1[x1][x2] = cadd(cadd(cneg(k1[op(x1, x2)]), k1[x2]), mu(x2, k1[x1]))
        tau2[x1][x2] = cadd(cadd(cneg(k2[op(x1, x2)]), k2[x2]), sigma(x2, k2[x1]))
    for a, b in PAIRS:
        rho[a][b] = cadd(
            nu(b, cadd(f[k2[b]][a], k1[a])), cneg(k1[beta_act(b, a)])
        )
    for a in ELEMS:
        chi[a] = cadd(s_map[nu_inv(t_op(a), k1[a])], cneg(k2[t_op(a)]))
    return (
        tuple(map(tuple, tau1)),
        tuple(map(tuple, tau2)),
        tuple(map(tuple, rho)),
        tuple(chi),
    )


def run_rrb(s_map, f):
    if not pairing_allowed(s_map, f):
        raise AssertionError("pairing table rejected by the module conditions")
    z2 = [
        (tau1, tau2, rho, chi)
        for tau1 in TABLES
        for tau2 in TABLES
        for rho in TABLES
        for chi in MAPS
        if normalized2(tau1)
        and normalized2(tau2)
        and normalized2(rho)
        and normalized1(chi)
        and rrb_is_cocycle(s_map, f, tau1, tau2, rho, chi)
    ]
    b2 = {
        rrb_coboundary(s_map, f, k1, k2)
        for k1 in MAPS
        for k2 in MAPS
        if normalized1(k1) and normalized1(k2)
    }
    return {"Z2": len(z2), "B2": len(b2), "H2": class_count(z2, b2)}


# ---------------------------------------------------------------------------

def main():
    f_zero = ((0, 0), (0, 0))
    f_prod = ((0, 0), (0, 1))  # f(l, a) = l * a, the nonzero bilinear pairing
    report = {
        "carrier": "C2",
        "skew_brace": {"trivial_triplet": run_sb()},
        "rota_baxter": {
            "RH=zero,RI=zero": run_rb(ZERO_MAP, ZERO_MAP),
            "RH=zero,RI=id": run_rb(ZERO_MAP, ID_MAP),
            "RH=id,RI=zero": run_rb(ID_MAP, ZERO_MAP),
            "RH=id,RI=id": run_rb(ID_MAP, ID_MAP),
        },
        "relative": {
            "S=zero,f=zero": run_rrb(ZERO_MAP, f_zero),
            "S=zero,f=product": run_rrb(ZERO_MAP, f_prod),
            "S=id,f=zero": run_rrb(ID_MAP, f_zero),
        },
    }
    print(json.dumps(report, indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
