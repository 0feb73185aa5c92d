"""Compare the compiled and pure-Python elimination kernels.

Usage: python3 benchmarks/bench_snf.py [--repeat N] [--seed S]

Workloads are coboundary matrices of real complexes (a development of S_5,
once- and twice-subdivided tori) and random sparse integer matrices.  Each
backend's invariant factors are checked against the other before timing.

Two timings are reported per backend: the unit-pivot kernel alone, and the
full Smith form, which adds the shared pure-Python residual pass.  On
coboundary matrices nearly every pivot is a unit and the kernel dominates;
on random matrices with entries in [-9, 9] the residual pass dominates.
"""

from __future__ import annotations

import argparse
import random
import sys
import timeit
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from bredon import kernels
from bredon.cog import develop
from bredon.cog.complexes import finite_complex
from bredon.linalg import IntMatrix, smith_normal_form
from bredon.pgroup import from_cycles, generated, symmetric
from bredon.poset import build_poset
from bredon.scomplex import barycentric_subdivision
from bredon.zcohomology import cochain_complex


def s5_development():
    Q = build_poset(["A", "B", "C"], [("A", "B"), ("B", "C")])
    G = symmetric(5)
    return develop(finite_complex(Q, G, {
        "A": generated(5, []),
        "B": generated(5, [from_cycles(5, [0, 1])]),
        "C": generated(5, [from_cycles(5, [0, 1]), from_cycles(5, [2, 3])]),
    })).X


def workloads(seed: int):
    import surfaces

    out = []
    X = s5_development()
    cx = cochain_complex(X)
    for n in range(cx.lo, cx.hi):
        out.append((f"S5 development delta^{n}", cx.delta(n)))
    T = barycentric_subdivision(surfaces.torus())
    for k, C in ((1, T), (2, barycentric_subdivision(T))):
        cx = cochain_complex(C)
        for n in range(cx.lo, cx.hi):
            out.append((f"torus sd{k} delta^{n}", cx.delta(n)))
    rng = random.Random(seed)
    for size in (200, 400):
        dense = [[rng.choice((-1, 1)) if rng.random() < 0.01 else 0 for _ in range(size)] for _ in range(size)]
        out.append((f"random +-1 {size}x{size}", IntMatrix.from_dense(dense)))
    for size in (60, 100):
        dense = [[rng.randint(-9, 9) if rng.random() < 0.03 else 0 for _ in range(size)] for _ in range(size)]
        out.append((f"random [-9,9] {size}x{size}", IntMatrix.from_dense(dense)))
    return out


def best(fn, repeat: int) -> float:
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    backends = kernels.available_backends()
    if "compiled" not in backends:
        print("compiled kernel not built; only the Python backend is available")
    cols = [f"kernel:{b}" for b in backends] + [f"snf:{b}" for b in backends]
    print(f"{'workload':26} {'shape':>9} {'nnz':>6} " + " ".join(f"{c:>16}" for c in cols)
          + ("  kernel speedup" if len(backends) > 1 else ""))
    for name, A in workloads(args.seed):
        forms = {b: smith_normal_form(A, backend=b) for b in backends}
        if len(set(forms.values())) != 1:
            print(f"{name}: backends disagree: {forms}")
            return 1
        M = A if A.rows <= A.cols else A.transpose()
        csr = M.csr()
        kern = {b: best(lambda b=b: kernels.unit_eliminate(M.rows, M.cols, *csr, backend=b), args.repeat)
                for b in backends}
        full = {b: best(lambda b=b: smith_normal_form(A, backend=b), args.repeat) for b in backends}
        row = f"{name:26} {f'{A.rows}x{A.cols}':>9} {len(A.entries):>6} " + " ".join(
            f"{t * 1e3:>14.2f}ms" for t in [*kern.values(), *full.values()])
        if len(backends) > 1:
            row += f" {kern['python'] / max(kern['compiled'], 1e-9):>15.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
