"""Backtracking search for bijections that transport one family of Cayley
tables onto another.

Used for automorphism groups (one table against itself), brace isomorphisms
(two tables simultaneously), and the existence checks behind the
square-versus-double report.  The search assigns images to the first
unassigned element, propagates forced images through all tables until a
fixed point, and prunes candidates by cheap per-element invariants (orders
and centrality in each table).
"""

from __future__ import annotations


class _Budget(Exception):
    pass


def element_order(table, x):
    acc = x
    k = 1
    while acc != 0:
        acc = table[acc][x]
        k += 1
    return k


def _profiles(tables):
    n = len(tables[0])
    out = []
    for x in range(n):
        feats = []
        for t in tables:
            feats.append(element_order(t, x))
            feats.append(all(t[x][y] == t[y][x] for y in range(n)))
        out.append(tuple(feats))
    return out


def table_isomorphisms(src_tables, dst_tables, find_all=True, node_budget=None):
    """Bijections p of {0..n-1} with p(0)=0 and p(s[a][b]) = d[p(a)][p(b)]
    for every paired table (s, d).

    Returns a lexicographically sorted list of image tuples when ``find_all``
    is set, otherwise a list holding just the first map found (possibly
    empty).  Returns None if ``node_budget`` assignment attempts were
    exhausted before the search completed.
    """
    n = len(src_tables[0])
    if len(dst_tables[0]) != n:
        return []
    src_prof = _profiles(src_tables)
    dst_prof = _profiles(dst_tables)
    if sorted(src_prof) != sorted(dst_prof):
        return []

    img = [None] * n
    used = [False] * n
    results = []
    nodes = [0]

    def assign(a, x, trail):
        """Set img[a] = x and derive every forced consequence; undo via trail."""
        queue = [(a, x)]
        while queue:
            e, v = queue.pop()
            if img[e] is not None:
                if img[e] != v:
                    return False
                continue
            if used[v] or src_prof[e] != dst_prof[v]:
                return False
            img[e] = v
            used[v] = True
            trail.append(e)
            for s, d in zip(src_tables, dst_tables):
                for k in range(n):
                    if img[k] is None:
                        continue
                    queue.append((s[e][k], d[v][img[k]]))
                    queue.append((s[k][e], d[img[k]][v]))
        return True

    def undo(trail):
        for e in trail:
            used[img[e]] = False
            img[e] = None

    def rec():
        a = next((i for i in range(n) if img[i] is None), None)
        if a is None:
            results.append(tuple(img))
            return not find_all
        for x in range(n):
            if used[x] or src_prof[a] != dst_prof[x]:
                continue
            nodes[0] += 1
            if node_budget is not None and nodes[0] > node_budget:
                raise _Budget
            trail = []
            ok = assign(a, x, trail)
            if ok and rec():
                return True
            undo(trail)
        return False

    trail0 = []
    if assign(0, 0, trail0):
        try:
            rec()
        except _Budget:
            return None
    if find_all:
        results.sort()
    return results
