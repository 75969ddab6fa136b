#!/usr/bin/env python3
"""PD-code generator for catalog curation.

Crossings are boxes with four corner edges in CCW cyclic order; `under`
marks which cyclic-position pair is the under-strand diagonal. After an
orientation pass (all per-component direction combos), tuples are rotated to
start at the incoming under-strand and emitted as X(a,b,c,d) text.
"""

import itertools

class Builder:
    def __init__(self):
        self.next_edge = 0
        self.crossings = []  # (cyclic [4 edges], under_positions (0,2) or (1,3))
        self.parent = {}

    def edge(self):
        e = self.next_edge
        self.next_edge += 1
        self.parent[e] = e
        return e

    def find(self, e):
        while self.parent[e] != e:
            self.parent[e] = self.parent[self.parent[e]]
            e = self.parent[e]
        return e

    def unify(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb

    def braid_crossing(self, left_in, right_in, kind):
        """Downward-flow crossing; kind 'A' = left strand over right.
        Returns (left_out, right_out)."""
        left_out, right_out = self.edge(), self.edge()
        cyclic = [right_in, left_in, left_out, right_out]  # NE NW SW SE
        under = (0, 2) if kind == 'A' else (1, 3)
        self.crossings.append((cyclic, under))
        return left_out, right_out

    def horiz_crossing(self, w_top, w_bot, kind):
        """Rightward-flow crossing; returns (e_top, e_bot)."""
        e_top, e_bot = self.edge(), self.edge()
        cyclic = [e_top, w_top, w_bot, e_bot]  # NE NW SW SE
        under = (0, 2) if kind == 'A' else (1, 3)
        self.crossings.append((cyclic, under))
        return e_top, e_bot

    def mirrored(self):
        m = Builder()
        m.next_edge = self.next_edge
        m.parent = dict(self.parent)
        m.crossings = [(list(cyc), (1, 3) if und == (0, 2) else (0, 2))
                       for cyc, und in self.crossings]
        return m

    def emit(self):
        cross = [([self.find(e) for e in cyc], und) for cyc, und in self.crossings]
        occ = {}
        for ci, (cyc, _) in enumerate(cross):
            for pos, e in enumerate(cyc):
                occ.setdefault(e, []).append((ci, pos))
        for e, lst in self.parent.items():
            r = self.find(e)
            if r not in occ:
                raise ValueError("crossing-free closed component")
        for e, lst in occ.items():
            if len(lst) != 2:
                raise ValueError(f"edge {e}: {len(lst)} occurrences")
        # trace components: lists of (edge, head_occurrence_for_forward)
        comps = []
        seen = set()
        for e0 in sorted(occ):
            if e0 in seen:
                continue
            cycle = []
            e, h = e0, 0
            while (e, h) not in set(cycle):
                cycle.append((e, h))
                seen.add(e)
                ci, pos = occ[e][h]
                nxt = cross[ci][0][(pos + 2) % 4]
                arrive = occ[nxt].index((ci, (pos + 2) % 4))
                e, h = nxt, 1 - arrive
            comps.append(cycle)
        q = len(comps)
        variants = []
        for dirs in itertools.product([0, 1], repeat=q):
            head = {}
            for cid, cycle in enumerate(comps):
                for e, h in cycle:
                    head[e] = h if dirs[cid] == 0 else 1 - h
            tuples = []
            for ci, (cyc, und) in enumerate(cross):
                start = None
                for p in und:
                    if occ[cyc[p]][head[cyc[p]]] == (ci, p):
                        start = p
                        break
                assert start is not None
                tuples.append(cyc[start:] + cyc[:start])
            relabel = {}
            for cyc in tuples:
                for e in cyc:
                    if e not in relabel:
                        relabel[e] = len(relabel) + 1
            text = " ".join("X(%d,%d,%d,%d)" % tuple(relabel[e] for e in cyc)
                            for cyc in tuples)
            variants.append((dirs, text))
        return variants


def braid(word, strands):
    """Trace closure of a braid word (entries ±i for the i-th generator)."""
    b = Builder()
    top = [b.edge() for _ in range(strands)]
    cur = list(top)
    for g in word:
        i = abs(g) - 1
        kind = 'A' if g > 0 else 'B'
        cur[i], cur[i + 1] = b.braid_crossing(cur[i], cur[i + 1], kind)
    for t, c in zip(top, cur):
        b.unify(t, c)
    return b


def rational(coeffs, closure="numerator"):
    """Alternating horizontal (east) and vertical (south) twist regions,
    starting horizontal; signed entries choose the crossing kind."""
    b = Builder()
    top = b.edge()
    bot = b.edge()
    nw = ne = top
    sw = se = bot
    horizontal = True
    for a in coeffs:
        kind = 'A' if a > 0 else 'B'
        for _ in range(abs(a)):
            if horizontal:
                ne, se = b.horiz_crossing(ne, se, kind)
            else:
                sw, se = b.braid_crossing(sw, se, kind)
        horizontal = not horizontal
    if closure == "numerator":
        b.unify(nw, ne)
        b.unify(sw, se)
    else:
        b.unify(nw, sw)
        b.unify(ne, se)
    return b


def variants_of(builder):
    """All orientation variants of a builder and its mirror."""
    out = []
    for tag, br in (("", builder), ("*", builder.mirrored())):
        try:
            for dirs, text in br.emit():
                out.append((tag, dirs, text))
        except (ValueError, AssertionError):
            pass
    return out


if __name__ == "__main__":
    import sys
    mode = sys.argv[1]
    spec = [int(x) for x in sys.argv[2].split(",")]
    if mode == "braid":
        strands = int(sys.argv[3])
        b = braid(spec, strands)
    elif mode == "rational":
        b = rational(spec, sys.argv[3] if len(sys.argv) > 3 else "numerator")
    for tag, dirs, text in variants_of(b):
        print(f"{tag}{dirs}\t{text}")


def pretzel(twists):
    """Pretzel link: vertical twist regions side by side, outer closure."""
    b = Builder()
    tops = []
    bots = []
    for p in twists:
        kind = 'A' if p > 0 else 'B'
        lt, rt = b.edge(), b.edge()
        l, r = lt, rt
        for _ in range(abs(p)):
            l, r = b.braid_crossing(l, r, kind)
        tops.append((lt, rt))
        bots.append((l, r))
    n = len(twists)
    for t in range(n):
        b.unify(tops[t][1], tops[(t + 1) % n][0])
        b.unify(bots[t][1], bots[(t + 1) % n][0])
    return b
