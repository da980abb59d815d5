#!/usr/bin/env python3
"""Brute-force count of skew braces on tiny carriers, up to isomorphism.

Reference script, independent of the library: for each order n <= 4 it
enumerates every Cayley table on {0..n-1} with identity 0 (filling the
(n-1) x (n-1) free block exhaustively and filtering by associativity and
inverses), then every pair of such tables, keeps the pairs satisfying the
brace compatibility law

    a o (b . c) = (a o b) . a^-1 . (a o c),

and counts orbits under simultaneous relabelling by permutations fixing 0.
The counts are frozen into the test suite as independently produced
expected values, so this script must never import from the library.

Run:  python scripts/brace_count_oracle.py
"""

import itertools
import json


def group_tables(n):
    """All group Cayley tables on {0..n-1} with identity 0, by brute force."""
    if n == 1:
        return [((0,),)]
    found = []
    cells = [(i, j) for i in range(1, n) for j in range(1, n)]
    for fill in itertools.product(range(n), repeat=len(cells)):
        table = [[0] * n for _ in range(n)]
        for j in range(n):
            table[0][j] = j
        for i in range(n):
            table[i][0] = i
        for (i, j), v in zip(cells, fill):
            table[i][j] = v
        if not all(sorted(row) == list(range(n)) for row in table):
            continue  # not a latin square in rows => no inverses/cancellation
        if not all(sorted(table[i][j] for i in range(n)) == list(range(n))
                   for j in range(n)):
            continue
        ok = True
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if table[table[a][b]][c] != table[a][table[b][c]]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            found.append(tuple(tuple(row) for row in table))
    return found


def inverses(table):
    n = len(table)
    inv = [0] * n
    for a in range(n):
        for b in range(n):
            if table[a][b] == 0:
                inv[a] = b
    return inv


def brace_law_holds(add, mul):
    n = len(add)
    ainv = inverses(add)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                lhs = mul[a][add[b][c]]
                rhs = add[add[mul[a][b]][ainv[a]]][mul[a][c]]
                if lhs != rhs:
                    return False
    return True


def relabel(table, perm):
    """Transport a table along a permutation of the carrier."""
    n = len(table)
    inv_perm = [0] * n
    for i, p in enumerate(perm):
        inv_perm[p] = i
    return tuple(
        tuple(perm[table[inv_perm[i]][inv_perm[j]]] for j in range(n))
        for i in range(n)
    )


def count_braces(n):
    tables = group_tables(n)
    pairs = [
        (add, mul)
        for add in tables
        for mul in tables
        if brace_law_holds(add, mul)
    ]
    perms = [(0,) + rest for rest in itertools.permutations(range(1, n))]
    canon = {
        min((relabel(add, p), relabel(mul, p)) for p in perms)
        for add, mul in pairs
    }
    return {"group_tables": len(tables), "brace_pairs": len(pairs),
            "braces_up_to_iso": len(canon)}


def main():
    report = {str(n): count_braces(n) for n in range(1, 5)}
    print(json.dumps(report, indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
