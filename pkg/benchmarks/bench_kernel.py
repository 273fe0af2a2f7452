"""Benchmark: compiled kernel vs pure-Python fallback.

Workload 1 drives the Buchberger oracle over every d=3 case (the
dominant cost of a verification sweep); workload 2 stresses the division
loop by reducing dense products against a fixed basis.

Run:  python benchmarks/bench_kernel.py [--repeat N]
"""

import argparse
import time

from tancone.kernel import available_kernels
from tancone.patch import generator_set
from tancone.ring import Poly, PolyRing, normal_form, reduced_groebner
from tancone.verify import all_triples


def groebner_workload(kernel):
    total = 0
    for a, b, g in all_triples(3):
        gens = generator_set(a, b, g, 3)
        ring = PolyRing(gens.ring.variables, p=0, kernel=kernel)
        polys = [ring.poly(f.terms) for f in gens.polys]
        total += len(reduced_groebner(polys))
    return total


def reduction_workload(kernel):
    gens = generator_set((1, 2, 3), (1, 3, 5), (4, 5, 6), 3)
    ring = PolyRing(gens.ring.variables, p=0, kernel=kernel)
    basis = [ring.poly(f.terms) for f in gens.polys]
    gb = reduced_groebner(basis)
    dense = ring.one()
    for v in ring.variables:
        dense = dense * (ring.gen(v) + ring.one())
    cube = dense * dense * dense
    acc = 0
    for scale in range(1, 9):
        acc += len(normal_form(cube.scale(scale), gb).terms)
    return acc


def run(name, fn, kernel, repeat):
    best = None
    checksum = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        checksum = fn(kernel)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, checksum


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    kernels = available_kernels()
    if "cython" not in kernels:
        print("compiled kernel not built; only the pure kernel will run")

    results = {}
    for wname, fn in (("groebner d=3 sweep", groebner_workload),
                      ("normal-form stress", reduction_workload)):
        for kname, kernel in kernels.items():
            dt, checksum = run(wname, fn, kernel, args.repeat)
            results[(wname, kname)] = (dt, checksum)
            print(f"{wname:22s}  {kname:8s}  {dt * 1000:9.1f} ms  (checksum {checksum})")
        if "cython" in kernels:
            ref = results[(wname, "python")]
            acc = results[(wname, "cython")]
            if ref[1] != acc[1]:
                raise SystemExit(f"checksum mismatch on {wname}: kernels disagree")
            print(f"{wname:22s}  speedup   {ref[0] / acc[0]:9.2f}x")


if __name__ == "__main__":
    main()
