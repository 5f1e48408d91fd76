"""Compiled vs pure-Python kernel timings.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import sys
import timeit
from itertools import product

from latfano import _pykernels
from latfano.census import _box_symmetries, CensusSpec
from latfano.equivalence import make_dn
from latfano.polytope import convex_hull, dilate

try:
    from latfano import _ckernels
except ImportError:
    _ckernels = None


def cases():
    rng = random.Random(7)
    cloud3 = [tuple(rng.randint(-3, 3) for _ in range(3)) for _ in range(14)]
    cloud4 = [tuple(rng.randint(-2, 2) for _ in range(4)) for _ in range(11)]
    d5 = dilate(make_dn(5), 3)
    oct3 = convex_hull([(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)])
    lo5, hi5 = (0,) * 5, (3,) * 5
    small = sorted(product(range(-1, 2), repeat=3))
    big = [x for x in product(range(-2, 3), repeat=3) if sum(map(abs, x)) <= 2]
    spec = CensusSpec.cube(3, 0, 2)
    syms = _box_symmetries(spec)
    verts = [(0, 0, 0), (2, 1, 0), (0, 2, 1), (1, 0, 2), (2, 2, 2)]
    return {
        "hull 3d, 14 pts": ("hull", (cloud3, 3)),
        "hull 4d, 11 pts": ("hull", (cloud4, 4)),
        "count 3*D_5 box": ("count_points", (d5.normals, d5.offsets, lo5, (6,) * 3 + (3, 3), False)),
        "list strict 5d": ("list_points", (d5.normals, d5.offsets, lo5, hi5, True)),
        "layer_covered oct": ("layer_covered", (oct3.normals, oct3.offsets, 1,
                                                [x for x in small if sum(map(abs, x)) <= 1], big)),
        "symmetry_key 3d": ("symmetry_key", (verts, syms, spec.lo)),
    }


def main(argv=None) -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled extension not built; only the Python timings are meaningful")
    print(f"{'case':<22}{'python ms':>12}{'cython ms':>12}{'speedup':>10}")
    for label, (name, fargs) in cases().items():
        py = getattr(_pykernels, name)
        n, t = timeit.Timer(lambda: py(*fargs)).autorange()
        tp = min(timeit.repeat(lambda: py(*fargs), number=n, repeat=args.repeat)) / n
        if _ckernels is not None:
            c = getattr(_ckernels, name)
            assert c(*fargs) == py(*fargs), label
            n, _ = timeit.Timer(lambda: c(*fargs)).autorange()
            tc = min(timeit.repeat(lambda: c(*fargs), number=n, repeat=args.repeat)) / n
            print(f"{label:<22}{tp * 1e3:>12.3f}{tc * 1e3:>12.3f}{tp / tc:>9.1f}x")
        else:
            print(f"{label:<22}{tp * 1e3:>12.3f}{'-':>12}{'-':>10}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
