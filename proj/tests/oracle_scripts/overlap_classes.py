"""Brute-force enumeration of overlap classes of a suspension tiling.

Independent of the C++ library: walks a long window of the two-sided fixed
point, forms every return vector y and every tile pair (U, V) and records the
class (color(U), color(V), pos(V) - y - pos(U)) whenever the interiors meet.
Numbers are integer coordinate tuples in the basis 1, b, b^2, ...; order
comparisons use 80-digit evaluation, which is ample for the small heights
involved.  Used only to produce frozen expectations for the test suite.
"""
import bisect
import sys
from mpmath import mp, mpf, polyroots

mp.dps = 80


def make_field(min_poly):
    # min_poly: coefficients low -> high, monic
    roots = polyroots(list(reversed(min_poly)), maxsteps=200, extraprec=200)
    beta = max((r.real for r in roots if abs(r.imag) < mpf(10) ** -40), key=lambda x: x)
    return beta


def ev(c, beta):
    return sum(mpf(ci) * beta ** k for k, ci in enumerate(c))


def add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def fixed_window(rules, k, a, b, depth):
    def img(w, n):
        for _ in range(n):
            w = [x for l in w for x in rules[l]]
        return w
    left = img([a], k * depth)
    right = img([b], k * depth)
    return left, right


def classes(rules, lengths, min_poly, k, a, b, depth, window):
    beta = make_field(min_poly)
    d = len(min_poly) - 1
    zero = tuple([0] * d)
    left, right = fixed_window(rules, k, a, b, depth)
    tiles = []
    pos = zero
    for l in reversed(left):
        pos = sub(pos, lengths[l])
        tiles.append((l, pos))
    tiles.reverse()
    pos = zero
    for l in right:
        tiles.append((l, pos))
        pos = add(pos, lengths[l])
    # keep a central window
    tiles = [t for t in tiles if abs(ev(t[1], beta)) < window]
    vals = [ev(t[1], beta) for t in tiles]
    ys = set()
    for i, (ci, pi) in enumerate(tiles):
        for j, (cj, pj) in enumerate(tiles):
            if ci == cj:
                ys.add(sub(pj, pi))
    lv = {c: ev(l, beta) for c, l in lengths.items()}
    eps = mpf(10) ** -60
    out = set()
    for y in ys:
        yv = ev(y, beta)
        for (cu, pu), vu in zip(tiles, vals):
            lo = vu + yv - max(lv.values()) - 1
            hi = vu + yv + lv[cu] + 1
            i0 = bisect.bisect_left(vals, lo)
            i1 = bisect.bisect_right(vals, hi)
            for (cv, pv), vv in zip(tiles[i0:i1], vals[i0:i1]):
                t = sub(sub(pv, y), pu)
                tv = ev(t, beta)
                if -lv[cv] + eps < tv < lv[cu] - eps:
                    out.add((cu, cv, t))
    return sorted(out, key=lambda c: (c[0], c[1], ev(c[2], beta)))


CASES = {
    # name: rules, lengths (coords), min poly, seed power, seed letters
    "fibonacci": ({1: [1, 2], 2: [1]}, {1: (0, 1), 2: (1, 0)}, [-1, -1, 1], 2, 1, 1),
    "thue_morse": ({1: [1, 2], 2: [2, 1]}, {1: (1,), 2: (1,)}, [-2, 1], 2, 1, 1),
    "period_doubling": ({1: [1, 2], 2: [1, 1]}, {1: (1,), 2: (1,)}, [-2, 1], 2, 1, 1),
    "tribonacci": ({1: [1, 2], 2: [1, 3], 3: [1]},
                   {1: (0, 1, 0), 2: (0, -1, 1), 3: (1, 0, 0)}, [-1, -1, -1, 1], 3, 1, 1),
    "s112_12": ({1: [1, 1, 2], 2: [1, 2]}, {1: (-1, 1), 2: (1, 0)}, [1, -3, 1], 1, 2, 1),
    "s112_221": ({1: [1, 1, 2], 2: [2, 2, 1]}, {1: (1,), 2: (1,)}, [-3, 1], 2, 1, 1),
}

if __name__ == "__main__":
    name = sys.argv[1]
    depth = int(sys.argv[2]) if len(sys.argv) > 2 else 4
    window = int(sys.argv[3]) if len(sys.argv) > 3 else 60
    rules, lengths, mpoly, k, a, b = CASES[name]
    cls = classes(rules, lengths, mpoly, k, a, b, depth, window)
    print(len(cls))
    for c in cls:
        print(c)
