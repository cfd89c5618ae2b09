"""Compiled kernels vs the numpy fallback.

    python benchmarks/bench_kernels.py [--group "Sz(8)"] [--repeat 3] [--end-to-end]

Each kernel is fed the inputs it sees while enumerating classes and building
class matrices for the chosen group. ``--end-to-end`` also times full class
enumeration plus character table in fresh subprocesses, once per backend.
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from realchar import _fallback
from realchar.catalog import build_group
from realchar.chartab import _inverse_base_images, dixon_prime
from realchar.classes import conjugacy_classes
from realchar.perm import inverse

try:
    from realchar import _kernels
except ImportError:
    _kernels = None


def kernel_inputs(G):
    X = G.elements()
    keys = G.element_keys()
    radix = G._key_radix()
    base = np.asarray(G.base)
    g = G.generators[0]
    C = conjugacy_classes(G)
    succ = [_fallback.conj_successor(X, h, inverse(h), base, radix, keys) for h in G.generators]
    xinv_base = _inverse_base_images(G)
    z = C.reps[len(C) // 2]
    class_of = np.asarray(C.class_of, dtype=np.int64)
    p = dixon_prime(G.order, C.exponent)
    rng = np.random.default_rng(0)
    M = rng.integers(0, p, size=(len(C), len(C)), dtype=np.int64)
    return {
        "label_components": (len(X), succ),
        "lookup": (keys, rng.permutation(keys)),
        "conj_successor": (X, g, inverse(g), base, radix, keys),
        "pair_counts": (z, xinv_base, radix, keys, class_of, len(C)),
        "rref_mod": (M, p),
    }


def bench(group: str, repeat: int) -> list[tuple[str, float, float | None]]:
    G = build_group(group)
    inputs = kernel_inputs(G)
    rows = []
    for name, args in inputs.items():
        py = min(timeit.repeat(lambda: getattr(_fallback, name)(*args), number=1, repeat=repeat))
        cy = None
        if _kernels is not None:
            cy = min(timeit.repeat(lambda: getattr(_kernels, name)(*args), number=1,
                                   repeat=repeat))
        rows.append((name, py, cy))
    return rows


_E2E = """
import time
from realchar.catalog import build_group
from realchar.chartab import character_table
from realchar.kernels import BACKEND
t = time.perf_counter()
character_table(build_group({group!r}))
print(BACKEND, time.perf_counter() - t)
"""


def end_to_end(group: str) -> dict[str, float]:
    out = {}
    for pure in (False, True):
        env = dict(os.environ)
        env.pop("REALCHAR_PURE_PYTHON", None)
        if pure:
            env["REALCHAR_PURE_PYTHON"] = "1"
        res = subprocess.run([sys.executable, "-c", _E2E.format(group=group)], env=env,
                             capture_output=True, text=True, check=True)
        backend, secs = res.stdout.split()
        out[backend] = float(secs)
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--group", default="Sz(8)")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--end-to-end", action="store_true")
    args = ap.parse_args(argv)

    G = build_group(args.group)
    print(f"group {args.group}: order {G.order}, degree {G.degree}")
    print(f"{'kernel':18} {'python (ms)':>12} {'cython (ms)':>12} {'speedup':>8}")
    for name, py, cy in bench(args.group, args.repeat):
        if cy is None:
            print(f"{name:18} {py * 1e3:12.2f} {'n/a':>12} {'':>8}")
        else:
            print(f"{name:18} {py * 1e3:12.2f} {cy * 1e3:12.2f} {py / cy:7.1f}x")
    if args.end_to_end:
        t = end_to_end(args.group)
        print("classes + character table, fresh process:")
        for backend, secs in t.items():
            print(f"  {backend:8} {secs:8.2f} s")


if __name__ == "__main__":
    main()
