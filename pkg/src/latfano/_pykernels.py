"""Pure-Python reference implementations of the hot kernels.

Every function here has a twin of the same name and signature in
``_ckernels.pyx``; :mod:`latfano.kernels` picks one at import time.
Points and normals are tuples of ints, facets are ``(normal, offset)`` pairs
meaning ``<normal, x> + offset >= 0``.
"""

from __future__ import annotations

from itertools import combinations, product
from math import gcd

from .linalg import det, rank

BACKEND = "python"


def _normal(diffs, n):
    if n == 2:
        (a, b), = diffs
        return (b, -a)
    if n == 3:
        (a1, a2, a3), (b1, b2, b3) = diffs
        return (a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1)
    out = []
    for k in range(n):
        minor = [row[:k] + row[k + 1:] for row in diffs]
        d = det(minor)
        out.append(-d if k % 2 else d)
    return tuple(out)


def hull(points, n):
    """Facets and vertex flags of a full-dimensional finite point set.

    Enumerates hyperplanes through every ``n``-subset of points and keeps the
    supporting ones.  Returns ``(facets, flags)`` with ``facets`` sorted and
    ``flags[i]`` true iff ``points[i]`` is a vertex of the hull.
    """
    pts = [tuple(p) for p in points]
    found = set()
    for sub in combinations(range(len(pts)), n):
        p0 = pts[sub[0]]
        diffs = [[x - y for x, y in zip(pts[i], p0)] for i in sub[1:]]
        nv = _normal(diffs, n)
        g = 0
        for x in nv:
            g = gcd(g, x)
        if g == 0:
            continue
        nv = tuple(x // g for x in nv)
        b = sum(x * y for x, y in zip(nv, p0))
        pos = neg = False
        for q in pts:
            s = sum(x * y for x, y in zip(nv, q)) - b
            if s > 0:
                pos = True
            elif s < 0:
                neg = True
            if pos and neg:
                break
        if pos and neg:
            continue
        if neg:
            found.add((tuple(-x for x in nv), b))
        else:
            found.add((nv, -b))
    facets = sorted(found)
    flags = []
    for q in pts:
        tight = [u for u, c in facets if sum(x * y for x, y in zip(u, q)) + c == 0]
        flags.append(len(tight) >= n and rank(tight) == n)
    return facets, flags


def _intervals(normals, offsets, lo, hi, threshold):
    """Yield ``(prefix, first, last)`` runs of the last coordinate."""
    n = len(lo)
    last = n - 1
    ranges = [range(lo[i], hi[i] + 1) for i in range(last)]
    rows = list(zip(normals, offsets))
    for prefix in product(*ranges):
        low, high = lo[last], hi[last]
        for u, c in rows:
            s = c - threshold
            for i in range(last):
                s += u[i] * prefix[i]
            a = u[last]
            if a > 0:
                # a*x + s >= 0
                t = -(s // a)
                if t > low:
                    low = t
            elif a < 0:
                t = s // (-a)
                if t < high:
                    high = t
            elif s < 0:
                high = low - 1
            if high < low:
                break
        if low <= high:
            yield prefix, low, high


def count_points(normals, offsets, lo, hi, strict):
    """Number of integer points in the box ``[lo, hi]`` satisfying every facet
    inequality (strictly when ``strict``)."""
    th = 1 if strict else 0
    return sum(h - l + 1 for _, l, h in _intervals(normals, offsets, lo, hi, th))


def list_points(normals, offsets, lo, hi, strict):
    th = 1 if strict else 0
    out = []
    for prefix, l, h in _intervals(normals, offsets, lo, hi, th):
        for x in range(l, h + 1):
            out.append(prefix + (x,))
    return out


def layer_covered(normals, offsets, k, small, big):
    """True iff every point of ``big`` is ``y + z`` with ``y`` in ``small`` and
    ``z`` in ``k*P`` (tested through the facet inequalities of ``P``)."""
    ay = [[sum(a * b for a, b in zip(u, y)) for u in normals] for y in small]
    kc = [k * c for c in offsets]
    for x in big:
        ax = [sum(a * b for a, b in zip(u, x)) for u in normals]
        base = [p + q for p, q in zip(ax, kc)]
        for row in ay:
            if all(b >= r for b, r in zip(base, row)):
                break
        else:
            return False
    return True


def symmetry_key(verts, syms, lo):
    """Smallest sorted vertex tuple over signed axis permutations, translated to ``lo``."""
    best = None
    n = len(lo)
    for perm, flips in syms:
        img = [tuple(-v[perm[i]] if flips[i] else v[perm[i]] for i in range(n)) for v in verts]
        mins = [min(c) for c in zip(*img)]
        img = tuple(sorted(tuple(x - m + l for x, m, l in zip(pt, mins, lo)) for pt in img))
        if best is None or img < best:
            best = img
    return best
