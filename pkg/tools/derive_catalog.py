#!/usr/bin/env python3
"""Derive and verify the catalog's Wirtinger crossing lists from first principles.

Every catalog diagram is the closure of a braid word (all strands parallel)
or the 4-plat closure of a word in B_4 (caps join positions (0,1) and (2,3)
top and bottom).  A crossing triple (a, b, c) encodes x_a x_b x_a^-1 x_c^-1,
i.e. the outgoing under-arc c is the incoming under-arc b conjugated by the
over-arc a.

Plat strands carry opposite circuit orientations, which flips crossing signs
(sign = letter_sign * dir_over * dir_under) and swaps which under-arc is
"incoming"; braid closures are orientation-uniform, so no tracking is needed
there.

Each derived presentation is verified against independent invariants before
being printed: the arcs form one closed circuit, the exponent matrix has
rank l-1, Fox p-coloring counts match the knot determinants, and the
Alexander polynomial (Fox calculus, needs sympy) matches the classical
values.  Run:  python tools/derive_catalog.py
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from fractions import Fraction


class _UnionFind:
    def __init__(self):
        self.parent: dict[int, int] = {}

    def find(self, x: int) -> int:
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def _renumber(triples, uf):
    label: dict[int, int] = {}
    out = []
    for a, b, c in triples:
        for t in (a, b, c):
            r = uf.find(t)
            if r not in label:
                label[r] = len(label) + 1
    out = [(label[uf.find(a)], label[uf.find(b)], label[uf.find(c)]) for a, b, c in triples]
    return len(label), out


def braid_closure(word: list[int], strands: int):
    """Wirtinger triples for the closure of a braid (strands all run downward)."""
    cur = list(range(strands))
    nxt = strands
    triples = []
    uf = _UnionFind()
    for s in word:
        i = abs(s) - 1
        a, b = cur[i], cur[i + 1]
        new = nxt
        nxt += 1
        if s > 0:
            triples.append((a, b, new))  # x_new = x_a x_b x_a^-1
            cur[i], cur[i + 1] = new, a
        else:
            triples.append((b, new, a))  # x_new = x_b^-1 x_a x_b
            cur[i], cur[i + 1] = b, new
    for j in range(strands):
        uf.union(cur[j], j)
    return _renumber(triples, uf)


def plat_closure(word: list[int]):
    """Wirtinger triples for the 4-plat closure, tracking strand orientations."""
    # pass 1: where each strand ends up, then walk the circuit to orient it
    pos = list(range(4))
    for s in word:
        i = abs(s) - 1
        pos[i], pos[i + 1] = pos[i + 1], pos[i]
    bottom_of = {sid: p for p, sid in enumerate(pos)}
    strand_at_bottom = dict(enumerate(pos))
    cap = {0: 1, 1: 0, 2: 3, 3: 2}
    direction: dict[int, int] = {}
    sid, going_down = 0, True
    for _ in range(8):
        if going_down:
            direction[sid] = +1
            sid = strand_at_bottom[cap[bottom_of[sid]]]
            going_down = False
        else:
            direction[sid] = -1
            sid = cap[sid]  # a strand's id is its top position
            going_down = True
        if sid == 0 and going_down:
            break
    if len(direction) != 4:
        raise ValueError("plat closure is a link, not a knot")

    # pass 2: emit orientation-corrected triples
    cur = list(range(4))
    strand = list(range(4))
    nxt = 4
    triples = []
    uf = _UnionFind()
    uf.union(0, 1)
    uf.union(2, 3)
    for s in word:
        i = abs(s) - 1
        over_pos, under_pos = (i, i + 1) if s > 0 else (i + 1, i)
        over_arc, under_arc = cur[over_pos], cur[under_pos]
        sign = (1 if s > 0 else -1) * direction[strand[over_pos]] * direction[strand[under_pos]]
        new = nxt
        nxt += 1
        cin, cout = (under_arc, new) if direction[strand[under_pos]] == +1 else (new, under_arc)
        triples.append((over_arc, cin, cout) if sign == +1 else (over_arc, cout, cin))
        cur[i], cur[i + 1] = cur[i + 1], cur[i]
        strand[i], strand[i + 1] = strand[i + 1], strand[i]
        # the under strand continues with the new arc from its post-swap position
        cur[i if under_pos == i + 1 else i + 1] = new
    uf.union(cur[0], cur[1])
    uf.union(cur[2], cur[3])
    return _renumber(triples, uf)


# -- independent verification ---------------------------------------------------


def is_single_circuit(l, triples):
    if not triples:
        return l == 1
    deg = defaultdict(int)
    adj = defaultdict(list)
    for i, (a, b, c) in enumerate(triples):
        deg[b] += 1
        deg[c] += 1
        adj[b].append((i, c))
        adj[c].append((i, b))
    if set(deg) != set(range(1, l + 1)) or any(d != 2 for d in deg.values()):
        return False
    used = set()
    arc, steps = 1, 0
    while steps < len(triples):
        nxt = next(((i, o) for i, o in adj[arc] if i not in used), None)
        if nxt is None:
            return False
        used.add(nxt[0])
        arc = nxt[1]
        steps += 1
    return len(used) == len(triples) and arc == 1


def exponent_rank(l, triples):
    rows = []
    for a, b, c in triples:
        row = [Fraction(0)] * l
        row[b - 1] += 1
        row[c - 1] -= 1
        rows.append(row)
    rank, r = 0, 0
    for col in range(l):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][col]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col] / pv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        rank += 1
    return rank


def fox_colorings(l, triples, p):
    return sum(
        1
        for colors in itertools.product(range(p), repeat=l)
        if all((2 * colors[a - 1] - colors[b - 1] - colors[c - 1]) % p == 0 for a, b, c in triples)
    )


def alexander_coeffs(l, triples):
    import sympy

    t = sympy.symbols("t")
    m = sympy.zeros(len(triples), l)
    for i, (a, b, c) in enumerate(triples):
        m[i, a - 1] += 1 - t
        m[i, b - 1] += t
        m[i, c - 1] += -1
    det = sympy.expand(m[: l - 1, : l - 1].det()) if l > 1 else sympy.Integer(1)
    coeffs = list(sympy.Poly(det, t).all_coeffs()) or [0]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if coeffs and coeffs[-1] < 0:
        coeffs = [-v for v in coeffs]
    return tuple(coeffs)


# name -> (construction, expected Alexander coefficients, expected colorings)
TARGETS = {
    "trefoil": (lambda: braid_closure([1, 1, 1], 2), (1, -1, 1), {3: 9, 5: 5, 7: 7}),
    "figure-eight": (
        lambda: braid_closure([1, -2, 1, -2], 3),
        (1, -3, 1),
        {3: 3, 5: 25, 7: 7},
    ),
    "5_1": (lambda: braid_closure([1] * 5, 2), (1, -1, 1, -1, 1), {3: 3, 5: 25, 7: 7}),
    "5_2": (lambda: plat_closure([2, -1, 2, 2, 2]), (2, -3, 2), {3: 3, 5: 5, 7: 49}),
    "6_1": (lambda: plat_closure([2, -1, 2, 2, 2, 2]), (2, -5, 2), {3: 9, 5: 5, 7: 7}),
}


def main() -> int:
    failures = 0
    for name, (construct, alex, colorings) in TARGETS.items():
        l, triples = construct()
        ok = is_single_circuit(l, triples) and exponent_rank(l, triples) == l - 1
        for p, want in colorings.items():
            ok = ok and fox_colorings(l, triples, p) == want
        try:
            got = alexander_coeffs(l, triples)
            ok = ok and got in (alex, tuple(reversed(alex)))
        except ImportError:
            got = "(sympy unavailable; skipped)"
        print(f"{name}: l={l}")
        print(f"  triples   = {triples}")
        print(f"  alexander = {got}  expected {alex}")
        print(f"  verified  = {ok}")
        failures += 0 if ok else 1
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
