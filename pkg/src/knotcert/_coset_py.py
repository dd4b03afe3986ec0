"""Pure-Python coset-table scanner (HLT-style relator scanning).

This is the hot loop of the group engine.  A compiled twin with the
identical algorithm lives in _coset_c.pyx; knotcert.kernels picks one at
import time.  Both must produce bit-identical tables: enumeration is part
of the certificate, so determinism beats cleverness throughout.

Conventions
-----------
Generators are letters 2*g (and inverses 2*g + 1), so letter ^ 1 is the
inverse.  Relators arrive as tuples of letters.  Cosets are enumerated
over the trivial subgroup with a first-undefined-entry definition order;
coincidences are processed through a FIFO queue with union-find labels.

The main scan runs in full sweeps until a sweep makes no change to the
table, which guarantees on return that the table is complete and every
relator closes at every live coset (re-verified by the caller anyway).

Returns (closed, table, cosets_used): table is the live-renumbered coset
table (rows are cosets, columns are letters), or None when max_cosets
was exceeded.
"""

from __future__ import annotations

UNDEF = -1


def hlt_enumerate(
    n_letters: int, relators: tuple[tuple[int, ...], ...], max_cosets: int
) -> tuple[bool, list[tuple[int, ...]] | None, int]:
    if max_cosets < 1:
        raise ValueError("max_cosets must be >= 1")
    table: list[list[int]] = [[UNDEF] * n_letters]
    p: list[int] = [0]
    queue: list[int] = []

    def rep(k: int) -> int:
        l = k
        while p[l] != l:
            l = p[l]
        while p[k] != l:
            p[k], k = l, p[k]
        return l

    def merge(k: int, l: int) -> None:
        k, l = rep(k), rep(l)
        if k != l:
            if k > l:
                k, l = l, k
            p[l] = k
            queue.append(l)

    def coincidence(a: int, b: int) -> None:
        merge(a, b)
        qi = 0
        while qi < len(queue):
            g = queue[qi]
            qi += 1
            row = table[g]
            for x in range(n_letters):
                d = row[x]
                if d == UNDEF:
                    continue
                table[d][x ^ 1] = UNDEF
                mu, nu = rep(g), rep(d)
                if table[mu][x] != UNDEF:
                    merge(nu, table[mu][x])
                elif table[nu][x ^ 1] != UNDEF:
                    merge(mu, table[nu][x ^ 1])
                else:
                    table[mu][x] = nu
                    table[nu][x ^ 1] = mu
        queue.clear()

    changed = True

    def define(a: int, x: int) -> int:
        nonlocal changed
        c = len(table)
        table.append([UNDEF] * n_letters)
        p.append(c)
        table[a][x] = c
        table[c][x ^ 1] = a
        changed = True
        return c

    def scan_and_fill(a: int, w: tuple[int, ...]) -> bool:
        # returns False on coset overflow
        nonlocal changed
        f, i = a, 0
        b, j = a, len(w) - 1
        while True:
            while i <= j and table[f][w[i]] != UNDEF:
                f = rep(table[f][w[i]])
                i += 1
            if i > j:
                if f != b:
                    changed = True
                    coincidence(f, b)
                return True
            while j >= i and table[b][w[j] ^ 1] != UNDEF:
                b = rep(table[b][w[j] ^ 1])
                j -= 1
            if j < i:
                if f != b:
                    changed = True
                    coincidence(f, b)
                return True
            if i == j:
                table[f][w[i]] = b
                table[b][w[i] ^ 1] = f
                changed = True
                return True
            if len(table) >= max_cosets:
                return False
            f = define(f, w[i])
            i += 1

    while changed:
        changed = False
        a = 0
        while a < len(table):
            if p[a] != a:
                a += 1
                continue
            alive = True
            for w in relators:
                if not scan_and_fill(a, w):
                    return False, None, len(table)
                if rep(a) != a:
                    alive = False
                    break
            if alive:
                row = table[a]
                for x in range(n_letters):
                    if row[x] == UNDEF:
                        if len(table) >= max_cosets:
                            return False, None, len(table)
                        define(a, x)
            a += 1

    live = [c for c in range(len(table)) if p[c] == c]
    index = {c: k for k, c in enumerate(live)}
    final = [tuple(index[rep(table[c][x])] for x in range(n_letters)) for c in live]
    return True, final, len(table)
