"""Bundled small structures with stable names, and the brace enumerator.

The catalog holds six named groups, three named braces, and one
representative of every isomorphism class of skew brace up to order 8
(``brace-<order>-<index>``), each as a canonical JSON payload that validates
on load.  ``enumerate_braces`` produces those representatives: for each group
in the order-n census it searches the maps ``lam: carrier -> Aut(add)`` with

    lam_{a . lam_a(b)} = lam_a lam_b,

each of which yields the circle table ``a o b = a . lam_a(b)``, then keeps
one table per orbit of the automorphism group of the additive table.  Two
braces sharing an additive table are isomorphic exactly when such an
automorphism transports one circle table to the other, so the orbit minima
enumerate isomorphism classes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braces import trivial_brace, validate_brace
from .errors import BadPayload, OrderTooLarge, PreconditionFails
from .groups import enumerate_automorphisms
from .named_groups import (
    cyclic_group,
    dihedral_group,
    direct_product,
    elementary_abelian_2,
    klein_group,
    quaternion_group,
    symmetric_group_3,
)
from .serialization import dumps, loads

BRACE_ENUMERATION_BOUND = 8


def zbrace(n):
    """The brace on {0..n-1} with a+b and a + (-1)^a b, for even n."""
    if n % 2 != 0 or n < 2:
        raise PreconditionFails(f"the alternating-sign brace needs even order, got {n}")
    add = [[(a + b) % n for b in range(n)] for a in range(n)]
    mul = [[(a + (-1) ** a * b) % n for b in range(n)] for a in range(n)]
    return validate_brace(add, mul)


def group_census(n):
    """One representative per isomorphism class of groups of order n <= 8."""
    if not 1 <= n <= BRACE_ENUMERATION_BOUND:
        raise OrderTooLarge(
            f"census covers orders 1..{BRACE_ENUMERATION_BOUND}, got {n}"
        )
    if n == 4:
        return [cyclic_group(4), klein_group()]
    if n == 6:
        return [cyclic_group(6), symmetric_group_3()]
    if n == 8:
        return [
            cyclic_group(8),
            direct_product(cyclic_group(4), cyclic_group(2)),
            elementary_abelian_2(3),
            dihedral_group(4),
            quaternion_group(),
        ]
    return [cyclic_group(n)]


def _lambda_solutions(G):
    """All maps lam with lam_0 = id and lam_{a.lam_a(b)} = lam_a lam_b.

    Returns the automorphism list and each solution as a tuple of indices
    into it.  Backtracking assigns the smallest unassigned element and
    closes under two propagation rules: the defining equation on every
    assigned pair, and the forced value at each circle inverse
    lam_a^{-1}(a^{-1}).
    """
    n, add = G.n, G.table
    auts = enumerate_automorphisms(G)
    index = {p: i for i, p in enumerate(auts)}
    comp = [
        [index[tuple(p[q[x]] for x in range(n))] for q in auts] for p in auts
    ]
    inv_of = [index[tuple(sorted(range(n), key=lambda x: p[x]))] for p in auts]

    def close(lam):
        changed = True
        while changed:
            changed = False
            known = [a for a in range(n) if lam[a] is not None]
            for x in known:
                perm = auts[lam[x]]
                for y in known:
                    c = add[x][perm[y]]
                    need = comp[lam[x]][lam[y]]
                    if lam[c] is None:
                        lam[c] = need
                        changed = True
                    elif lam[c] != need:
                        return None
                xi = inv_of[lam[x]]
                c = auts[xi][G.inv[x]]
                if lam[c] is None:
                    lam[c] = xi
                    changed = True
                elif lam[c] != xi:
                    return None
        return lam

    results = []

    def search(lam):
        free = [a for a in range(n) if lam[a] is None]
        if not free:
            results.append(tuple(lam))
            return
        for phi in range(len(auts)):
            branch = list(lam)
            branch[free[0]] = phi
            branch = close(branch)
            if branch is not None:
                search(branch)

    start = [None] * n
    start[0] = index[tuple(range(n))]
    search(close(start))
    return auts, results


def _circle_classes(G):
    """Sorted orbit-minimal circle tables over the additive group G."""
    n = G.n
    auts, solutions = _lambda_solutions(G)
    tables = sorted(
        tuple(tuple(G.table[a][auts[lam[a]][b]] for b in range(n)) for a in range(n))
        for lam in solutions
    )
    seen = set()
    classes = []
    for t in tables:
        if t in seen:
            continue
        classes.append(t)
        for f in auts:
            f_inv = sorted(range(n), key=lambda x: f[x])
            seen.add(
                tuple(
                    tuple(f[t[f_inv[a]][f_inv[b]]] for b in range(n))
                    for a in range(n)
                )
            )
    return classes


def enumerate_braces(n):
    """All skew braces on {0..n-1} up to isomorphism, deterministic order."""
    if not 1 <= n <= BRACE_ENUMERATION_BOUND:
        raise OrderTooLarge(
            f"order {n} outside the enumeration range 1..{BRACE_ENUMERATION_BOUND}"
        )
    out = []
    for G in group_census(n):
        for mul in _circle_classes(G):
            out.append(validate_brace(G.table, mul))
    return out


@dataclass(frozen=True)
class CatalogEntry:
    """A named bundled object; the payload is canonical JSON."""

    name: str
    kind: str  # "group" | "skew_brace"
    payload: str

    def load(self):
        return loads(self.payload)


_NAMED_GROUPS = (
    ("c2", lambda: cyclic_group(2)),
    ("c4", lambda: cyclic_group(4)),
    ("klein", klein_group),
    ("s3", symmetric_group_3),
    ("d4", lambda: dihedral_group(4)),
    ("q8", quaternion_group),
)

_NAMED_BRACES = (
    ("trivial-c2", lambda: trivial_brace(cyclic_group(2))),
    ("zbrace4", lambda: zbrace(4)),
    ("zbrace8", lambda: zbrace(8)),
)

_ENTRIES = None


def catalog_entries():
    """Every bundled entry, in a fixed order; built once per process."""
    global _ENTRIES
    if _ENTRIES is None:
        entries = [
            CatalogEntry(name, "group", dumps(make())) for name, make in _NAMED_GROUPS
        ]
        entries.extend(
            CatalogEntry(name, "skew_brace", dumps(make()))
            for name, make in _NAMED_BRACES
        )
        for n in range(1, BRACE_ENUMERATION_BOUND + 1):
            for i, brace in enumerate(enumerate_braces(n), start=1):
                entries.append(CatalogEntry(f"brace-{n}-{i}", "skew_brace", dumps(brace)))
        _ENTRIES = tuple(entries)
    return _ENTRIES


def catalog_names():
    return [entry.name for entry in catalog_entries()]


def catalog_get(name):
    for entry in catalog_entries():
        if entry.name == name:
            return entry
    raise BadPayload(f"unknown catalog entry {name!r}")


def catalog_object(name):
    return catalog_get(name).load()


def catalog_braces(max_order=None):
    """(name, brace) for every bundled skew-brace entry, optionally capped."""
    out = []
    for entry in catalog_entries():
        if entry.kind != "skew_brace":
            continue
        brace = entry.load()
        if max_order is None or brace.n <= max_order:
            out.append((entry.name, brace))
    return out


def catalog_groups(max_order=None):
    out = []
    for entry in catalog_entries():
        if entry.kind != "group":
            continue
        group = entry.load()
        if max_order is None or group.n <= max_order:
            out.append((entry.name, group))
    return out
