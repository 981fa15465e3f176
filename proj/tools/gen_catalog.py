#!/usr/bin/env python3
"""Generate the bundled small-groups catalog (all groups of order <= 16).

Each group is emitted as a table-backend descriptor under data/catalog/.
Every table is verified against the group axioms (including associativity)
and the catalog is checked for completeness: the number of groups per order
matches the classification, and invariant fingerprints are pairwise distinct
within each order.
"""

import itertools
import json
import os
import sys

# ---------------------------------------------------------------- constructions


def cyclic(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def direct_product(a, b):
    na, nb = len(a), len(b)
    n = na * nb

    def idx(x, y):
        return x * nb + y

    table = [[0] * n for _ in range(n)]
    for x1, y1, x2, y2 in itertools.product(range(na), range(nb), range(na), range(nb)):
        table[idx(x1, y1)][idx(x2, y2)] = idx(a[x1][x2], b[y1][y2])
    return table


def metacyclic(m, s, t, u):
    """<a, b | a^m = e, b^s = a^u, b a b^-1 = a^t>, elements a^i b^j -> i + m*j."""
    assert pow(t, s, m) == 1 and (u * (t - 1)) % m == 0
    n = m * s

    def mul(i, j, k, l):
        i2 = (i + k * pow(t, j, m)) % m
        j2 = j + l
        if j2 >= s:
            i2 = (i2 + u) % m
            j2 -= s
        return i2 + m * j2

    return [[mul(p % m, p // m, q % m, q // m) for q in range(n)] for p in range(n)]


def semidirect(normal, phi, s):
    """normal (table) extended by Z/s acting through the automorphism phi."""
    nn = len(normal)
    n = nn * s
    powers = [list(range(nn))]
    for _ in range(s - 1):
        powers.append([phi[x] for x in powers[-1]])
    assert [phi[x] for x in powers[-1]] == powers[0], "phi^s != id"

    def mul(v, j, w, l):
        return normal[v][powers[j][w]] + nn * ((j + l) % s)

    return [[mul(p % nn, p // nn, q % nn, q // nn) for q in range(n)] for p in range(n)]


def pauli16():
    """Central product of the dihedral group of order 8 with Z/4: phases
    i^k times {I, X, Y, Z} under the Pauli multiplication rules."""
    names = ["I", "X", "Y", "Z"]
    prod = {}
    for p in names:
        prod[("I", p)] = (0, p)
        prod[(p, "I")] = (0, p)
        prod[(p, p)] = (0, "I")
    for a, b, c in [("X", "Y", "Z"), ("Y", "Z", "X"), ("Z", "X", "Y")]:
        prod[(a, b)] = (1, c)   # a*b = i c
        prod[(b, a)] = (3, c)   # b*a = -i c

    def idx(k, p):
        return k * 4 + names.index(p)

    table = [[0] * 16 for _ in range(16)]
    for k1, p1, k2, p2 in itertools.product(range(4), names, range(4), names):
        ph, p = prod[(p1, p2)]
        table[idx(k1, p1)][idx(k2, p2)] = idx((k1 + k2 + ph) % 4, p)
    return table


# ---------------------------------------------------------------- verification


def check_axioms(name, tab):
    n = len(tab)
    for i, row in enumerate(tab):
        assert len(row) == n, f"{name}: row {i} malformed"
        assert sorted(row) == list(range(n)), f"{name}: row {i} not a permutation"
    for j in range(n):
        col = [tab[i][j] for i in range(n)]
        assert sorted(col) == list(range(n)), f"{name}: column {j} not a permutation"
    assert all(tab[0][j] == j and tab[j][0] == j for j in range(n)), f"{name}: identity"
    for a in range(n):
        assert any(tab[a][b] == 0 and tab[b][a] == 0 for b in range(n)), f"{name}: inverse"
    for a, b, c in itertools.product(range(n), repeat=3):
        assert tab[tab[a][b]][c] == tab[a][tab[b][c]], f"{name}: assoc at {(a,b,c)}"


def inverse(tab, a):
    return next(b for b in range(len(tab)) if tab[a][b] == 0)


def element_order(tab, a):
    x, k = a, 1
    while x != 0:
        x = tab[x][a]
        k += 1
    return k


def class_sizes(tab):
    n = len(tab)
    seen, sizes = [False] * n, []
    for x in range(n):
        if seen[x]:
            continue
        orbit = {tab[tab[g][x]][inverse(tab, g)] for g in range(n)}
        for m in orbit:
            seen[m] = True
        sizes.append(len(orbit))
    return sorted(sizes)


def commutator_size(tab):
    n = len(tab)
    gens = {tab[tab[a][b]][tab[inverse(tab, a)][inverse(tab, b)]]
            for a in range(n) for b in range(n)}
    closure = {0}
    frontier = set(gens)
    while frontier:
        closure |= frontier
        frontier = {tab[x][g] for x in closure for g in gens} - closure
    return len(closure)


def fingerprint(tab):
    n = len(tab)
    orders = tuple(sorted(element_order(tab, a) for a in range(n)))
    center = sum(1 for z in range(n) if all(tab[z][g] == tab[g][z] for g in range(n)))
    squares = len({tab[a][a] for a in range(n)})
    return (n, orders, tuple(class_sizes(tab)), center, squares, commutator_size(tab))


def is_abelian(tab):
    n = len(tab)
    return all(tab[i][j] == tab[j][i] for i in range(n) for j in range(i + 1, n))


# ---------------------------------------------------------------- catalog

C2 = cyclic(2)
C2xC2 = direct_product(C2, C2)
PHI_SWAP = [0, 2, 1, 3]      # swap the two generators of C2 x C2
PHI_CYCLE = [0, 2, 3, 1]     # cycle the three involutions of C2 x C2

CATALOG = [
    ("C1", cyclic(1), True),
    ("C2", C2, True),
    ("C3", cyclic(3), True),
    ("C4", cyclic(4), True),
    ("C2xC2", C2xC2, True),
    ("C5", cyclic(5), True),
    ("C6", cyclic(6), True),
    ("S3", metacyclic(3, 2, 2, 0), False),
    ("C7", cyclic(7), True),
    ("C8", cyclic(8), True),
    ("C4xC2", direct_product(cyclic(4), C2), True),
    ("C2xC2xC2", direct_product(C2xC2, C2), True),
    ("D4", metacyclic(4, 2, 3, 0), False),
    ("Q8", metacyclic(4, 2, 3, 2), False),
    ("C9", cyclic(9), True),
    ("C3xC3", direct_product(cyclic(3), cyclic(3)), True),
    ("C10", cyclic(10), True),
    ("D5", metacyclic(5, 2, 4, 0), False),
    ("C11", cyclic(11), True),
    ("C12", cyclic(12), True),
    ("C6xC2", direct_product(cyclic(6), C2), True),
    ("D6", metacyclic(6, 2, 5, 0), False),
    ("A4", semidirect(C2xC2, PHI_CYCLE, 3), False),
    ("Dic3", metacyclic(6, 2, 5, 3), False),
    ("C13", cyclic(13), True),
    ("C14", cyclic(14), True),
    ("D7", metacyclic(7, 2, 6, 0), False),
    ("C15", cyclic(15), True),
    ("C16", cyclic(16), True),
    ("C8xC2", direct_product(cyclic(8), C2), True),
    ("C4xC4", direct_product(cyclic(4), cyclic(4)), True),
    ("C4xC2xC2", direct_product(cyclic(4), C2xC2), True),
    ("C2xC2xC2xC2", direct_product(C2xC2, C2xC2), True),
    ("D8", metacyclic(8, 2, 7, 0), False),
    ("SD16", metacyclic(8, 2, 3, 0), False),
    ("M16", metacyclic(8, 2, 5, 0), False),
    ("Q16", metacyclic(8, 2, 7, 4), False),
    ("D4xC2", direct_product(metacyclic(4, 2, 3, 0), C2), False),
    ("Q8xC2", direct_product(metacyclic(4, 2, 3, 2), C2), False),
    ("C4sdC4", metacyclic(4, 4, 3, 0), False),
    ("C22sdC4", semidirect(C2xC2, PHI_SWAP, 4), False),
    ("Pauli16", pauli16(), False),
]

GROUPS_PER_ORDER = {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2, 10: 2,
                    11: 1, 12: 5, 13: 1, 14: 2, 15: 1, 16: 14}


def main():
    out_dir = sys.argv[1] if len(sys.argv) > 1 else os.path.join(
        os.path.dirname(__file__), "..", "data", "catalog")
    os.makedirs(out_dir, exist_ok=True)

    by_order = {}
    for name, tab, abelian in CATALOG:
        check_axioms(name, tab)
        assert is_abelian(tab) == abelian, f"{name}: abelian flag"
        by_order.setdefault(len(tab), []).append((name, fingerprint(tab)))

    for order, entries in sorted(by_order.items()):
        assert len(entries) == GROUPS_PER_ORDER[order], (
            f"order {order}: got {len(entries)} groups, expected {GROUPS_PER_ORDER[order]}")
        prints = [fp for _, fp in entries]
        assert len(set(prints)) == len(prints), f"order {order}: fingerprint clash"

    # spot checks against standard facts
    q8 = dict((n, t) for n, t, _ in CATALOG)["Q8"]
    assert class_sizes(q8) == [1, 1, 2, 2, 2]
    s3 = dict((n, t) for n, t, _ in CATALOG)["S3"]
    assert class_sizes(s3) == [1, 2, 3]
    a4 = dict((n, t) for n, t, _ in CATALOG)["A4"]
    assert class_sizes(a4) == [1, 3, 4, 4]

    for name, tab, _ in CATALOG:
        rows = ",\n    ".join("[" + ",".join(map(str, row)) + "]" for row in tab)
        text = ('{\n  "kind": "table",\n  "name": "%s",\n  "size": %d,\n'
                '  "mul": [\n    %s\n  ]\n}\n' % (name, len(tab), rows))
        with open(os.path.join(out_dir, name + ".json"), "w") as f:
            f.write(text)

    print(f"wrote {len(CATALOG)} groups to {out_dir}")
    counts = json.dumps({o: len(e) for o, e in sorted(by_order.items())})
    print(f"groups per order: {counts}")


if __name__ == "__main__":
    main()
