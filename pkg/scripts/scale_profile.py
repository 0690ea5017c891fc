#!/usr/bin/env python3
"""Time the exact and approximate solvers on large hosts and print state counts next to their bounds."""

from __future__ import annotations

import argparse
import time

from tourwidth.cutwidth import exact_cutwidth
from tourwidth.generators import random_tournament, transitive, transitive_noise
from tourwidth.pathwidth import approx_pathwidth, exact_pathwidth


def hosts(n: int):
    yield "random", random_tournament(n, 0)
    yield "transitive", transitive(n)
    yield "noise-0.002", transitive_noise(n, 0.002, 1)
    yield "noise-0.01", transitive_noise(n, 0.01, 2)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-cut", type=int, default=300)
    ap.add_argument("--n-path", type=int, default=1000)
    ap.add_argument("--max-k-cut", type=int, default=3)
    ap.add_argument("--max-k-path", type=int, default=5)
    ap.add_argument("--max-k-exact-path", type=int, default=1)
    args = ap.parse_args()

    print("host,solver,k,answer,states,bound,seconds")
    for name, T in hosts(args.n_cut):
        for k in range(args.max_k_cut + 1):
            t = time.perf_counter()
            out = exact_cutwidth(T, k)
            print(f"{name},cutwidth-exact,{k},{out.yes},{out.stats.states},{out.stats.bound},{time.perf_counter() - t:.2f}")
        for k in range(args.max_k_exact_path + 1):
            t = time.perf_counter()
            out = exact_pathwidth(T, k)
            st = out.stats
            print(f"{name},pathwidth-exact,{k},{out.yes},{st.characterizations},{st.bound},{time.perf_counter() - t:.2f}")
    for name, T in hosts(args.n_path):
        for k in range(args.max_k_path + 1):
            t = time.perf_counter()
            out = approx_pathwidth(T, k)
            print(f"{name},pathwidth-approx,{k},{out.yes},,,{time.perf_counter() - t:.2f}")


if __name__ == "__main__":
    main()
