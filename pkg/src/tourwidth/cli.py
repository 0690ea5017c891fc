"""Command-line front end.

Exit codes: 0 success / YES, 1 NO / infeasible, 2 usage or input error,
3 budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import io
from .constants import PROVEN, load_profile
from .containment import contains_on_decomposition, contains_topological
from .cutwidth import approx_cutwidth, cutwidth, exact_cutwidth
from .decomposition import verify_path_decomposition
from .digraph import ordering_width
from .errors import BudgetExceeded, InputError, InternalContradiction, TourwidthError
from .generators import MODELS, generate
from .obstacles import (
    BackwardTangle,
    DegreeTangle,
    MatchingTangle,
    cutwidth_bound_from_backward_tangle,
    pathwidth_bound_from_degree_tangle,
    pathwidth_bound_from_matching_tangle,
    verify,
    verify_model,
)
from .oracles import oracle_contains, oracle_cutwidth, oracle_pathwidth
from .pathwidth import approx_pathwidth, exact_pathwidth, pathwidth

EXIT_YES, EXIT_NO, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3
CSV_COLUMNS = ("instance", "n", "seed", "cmd", "k", "outcome", "width", "time_ms")


@dataclass
class RunReport:
    instance: str
    n: int
    seed: int | None
    cmd: str
    k: int | None
    outcome: str  # ordering, decomposition, tangle, jungle, yes, no, error
    width: int | None
    time_ms: float
    certificate: str = ""

    def csv(self) -> str:
        vals = [self.instance, self.n, "" if self.seed is None else self.seed, self.cmd,
                "" if self.k is None else self.k, self.outcome, "" if self.width is None else self.width,
                f"{self.time_ms:.1f}"]
        return ",".join(map(str, vals))


def _out(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _err(text: str) -> None:
    sys.stderr.write(text.rstrip("\n") + "\n")


def _cert_path(args, label: str) -> Path:
    if getattr(args, "cert_out", None):
        return Path(args.cert_out)
    src = Path(args.file)
    return src.with_name(f"{src.stem}.{label}.cert")


def _emit_obstacle(args, T, obstacle, label: str) -> None:
    if args.selfcheck:
        bad = verify(T, obstacle)
        if bad is not None:
            raise InternalContradiction(f"selfcheck: emitted certificate fails verification: {bad}")
    path = _cert_path(args, label)
    path.write_text(io.format_certificate(obstacle))
    if isinstance(obstacle, DegreeTangle):
        bound = pathwidth_bound_from_degree_tangle(obstacle)
        what = f"degree tangle ({obstacle.k},{obstacle.ell})"
    elif isinstance(obstacle, MatchingTangle):
        bound = pathwidth_bound_from_matching_tangle(obstacle)
        what = f"matching tangle ({obstacle.k},{obstacle.ell})"
    else:
        bound = cutwidth_bound_from_backward_tangle(obstacle)
        what = f"{obstacle.k}-backward tangle"
    _out(f"NO {what}")
    _out(f"certificate: {path}")
    if bound is not None:
        measure = "ctw" if isinstance(obstacle, BackwardTangle) else "pw"
        _out(f"certifies {measure} > {bound}")


# ------------------------------------------------------------------ commands
def cmd_gen(args) -> int:
    T = generate(args.model, args.n, args.seed, args.p)
    text = io.format_scd(T)
    if args.output:
        Path(args.output).write_text(text)
    else:
        _out(text)
    return EXIT_YES


def cmd_validate(args) -> int:
    T = io.load_scd(args.file, tournament=args.tournament)
    _out(f"ok n={T.n} arcs={T.arc_count()} {'tournament' if T.is_tournament() else 'semi-complete'}")
    return EXIT_YES


def cmd_cutwidth(args) -> int:
    T = io.load_scd(args.file)
    if args.mode == "opt":
        res = cutwidth(T)
        if args.selfcheck and ordering_width(T, res.ordering) != res.value:
            raise InternalContradiction("selfcheck: optimal ordering width mismatch")
        _out(str(res.value))
        _out(io.format_ordering(res.ordering))
        return EXIT_YES
    k = _need_k(args)
    out = approx_cutwidth(T, k, args.threshold) if args.mode == "approx" else exact_cutwidth(T, k)
    if out.yes:
        width = ordering_width(T, out.ordering)
        if args.selfcheck and (width != out.width or (args.mode == "exact" and width > k)):
            raise InternalContradiction("selfcheck: ordering width mismatch")
        _out(f"YES width={width}")
        _out(io.format_ordering(out.ordering))
        return EXIT_YES
    obstacle = out.obstacle or out.witness
    if obstacle is not None:
        _emit_obstacle(args, T, obstacle, f"cutwidth.k{k}")
    else:
        _out(f"NO ({out.reason})")
    return EXIT_NO


def cmd_pathwidth(args) -> int:
    T = io.load_scd(args.file)
    if args.mode == "opt":
        res = pathwidth(T)
        if args.selfcheck and verify_path_decomposition(T, res.decomposition) > res.value:
            raise InternalContradiction("selfcheck: optimal decomposition too wide")
        _out(str(res.value))
        _out(io.format_decomposition(res.decomposition))
        return EXIT_YES
    k = _need_k(args)
    if args.mode == "approx":
        out = approx_pathwidth(T, k, args.ell)
    else:
        out = exact_pathwidth(T, k)
    if out.yes:
        width = verify_path_decomposition(T, out.decomposition) if args.selfcheck else out.width
        bound = k if args.mode == "exact" else (args.ell if args.ell is not None else 5 * k) + 2 * k
        if args.selfcheck and width > bound:
            raise InternalContradiction(f"selfcheck: width {width} exceeds {bound}")
        _out(f"YES width={width}")
        _out(io.format_decomposition(out.decomposition))
        return EXIT_YES
    if out.obstacle is not None:
        _emit_obstacle(args, T, out.obstacle, f"pathwidth.k{k}")
    else:
        _out(f"NO ({out.reason})")
    return EXIT_NO


def cmd_contains(args) -> int:
    T = io.load_scd(args.file)
    H = io.load_pattern(args.pattern)
    constants = load_profile(args.constants) if args.constants else PROVEN
    if args.decomposition:
        W = io.parse_decomposition(io.read_text(args.decomposition))
        answer = contains_on_decomposition(T, H, W, budget=args.budget)
        _out("YES" if answer else "NO")
        return EXIT_YES if answer else EXIT_NO
    res = contains_topological(T, H, constants, budget=args.budget)
    if res.model is not None:
        if args.selfcheck and verify_model(T, H, res.model) is not None:
            raise InternalContradiction("selfcheck: expansion fails verification")
        _out("YES expansion")
        _out("vertices: " + " ".join(map(str, res.model.vertex_map)))
        for (a, b), p in zip(H.arcs, res.model.arc_paths):
            _out(f"arc {a} {b}: " + " ".join(map(str, p)))
    elif res.certificate == "asserted":
        _out(f"YES asserted by obstacle ({res.note})")
    else:
        _out(("YES" if res.answer else "NO") + f" dp max_table={res.trace.max_size}")
    return EXIT_YES if res.answer else EXIT_NO


def cmd_verify_cert(args) -> int:
    T = io.load_scd(args.file)
    text = io.read_text(args.certificate)
    if args.kind == "ordering":
        _out(f"ok width={ordering_width(T, io.parse_ordering(text))}")
        return EXIT_YES
    if args.kind == "decomposition":
        _out(f"ok width={verify_path_decomposition(T, io.parse_decomposition(text))}")
        return EXIT_YES
    obstacle = io.parse_certificate(text)
    bad = verify(T, obstacle)
    if bad is not None:
        _out(f"violation {bad}")
        return EXIT_NO
    _out(f"ok {type(obstacle).__name__}")
    return EXIT_YES


def cmd_oracle(args) -> int:
    T = io.load_scd(args.file)
    if args.what == "cutwidth":
        res = oracle_cutwidth(T)
        _out(str(res.value))
        _out(io.format_ordering(res.witness))
    elif args.what == "pathwidth":
        res = oracle_pathwidth(T)
        _out(str(res.value))
        _out(io.format_decomposition(res.witness))
    else:
        if not args.pattern:
            raise InputError("oracle contains needs a pattern file")
        res = oracle_contains(T, io.load_pattern(args.pattern))
        _out("YES" if res.value else "NO")
        if res.value:
            _out("vertices: " + " ".join(map(str, res.witness.vertex_map)))
        return EXIT_YES if res.value else EXIT_NO
    return EXIT_YES


# ------------------------------------------------------------------ bench
def _bench_one(job: tuple) -> RunReport:
    model, n, seed, cmd, k, p = job
    T = generate(model, n, seed, p)
    name = f"{model}-{n}-{seed}"
    start = time.perf_counter()
    outcome, width = "error", None
    try:
        kind, mode = cmd.split("-")
        if kind == "cutwidth":
            if mode == "opt":
                res = cutwidth(T)
                outcome, width = "ordering", res.value
            else:
                out = approx_cutwidth(T, k) if mode == "approx" else exact_cutwidth(T, k)
                outcome = "ordering" if out.yes else ("tangle" if (out.obstacle or out.witness) else "no")
                width = out.width
        else:
            if mode == "opt":
                res = pathwidth(T)
                outcome, width = "decomposition", res.value
            else:
                out = approx_pathwidth(T, k) if mode == "approx" else exact_pathwidth(T, k)
                outcome = "decomposition" if out.yes else ("tangle" if out.obstacle else "no")
                width = out.width
    except TourwidthError:
        outcome = "error"
    ms = (time.perf_counter() - start) * 1000
    return RunReport(name, n, seed, cmd, None if cmd.endswith("opt") else k, outcome, width, ms)


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s]
    jobs = [
        (args.model, n, args.seed + i, args.cmd, args.k, args.p)
        for n in sizes
        for i in range(args.seeds)
    ]
    if args.workers > 1:
        with ProcessPoolExecutor(args.workers) as pool:
            reports = list(pool.map(_bench_one, jobs))
    else:
        reports = [_bench_one(j) for j in jobs]
    _out(",".join(CSV_COLUMNS))
    for r in reports:
        if args.no_timing:
            r.time_ms = 0.0
        _out(r.csv())
    return EXIT_YES


# ------------------------------------------------------------------ parser
def _need_k(args) -> int:
    if args.k is None:
        raise InputError("this mode needs -k")
    return args.k


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tourwidth", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate an instance")
    g.add_argument("--model", choices=MODELS, required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--p", type=float, default=0.1, help="flip / digon probability")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("validate", help="check a .scd file")
    v.add_argument("file")
    v.add_argument("--tournament", action="store_true")
    v.set_defaults(func=cmd_validate)

    for name, func in (("cutwidth", cmd_cutwidth), ("pathwidth", cmd_pathwidth)):
        s = sub.add_parser(name, help=f"{name} solvers")
        s.add_argument("mode", choices=("approx", "exact", "opt"))
        s.add_argument("file")
        s.add_argument("-k", type=int)
        s.add_argument("--selfcheck", action="store_true")
        s.add_argument("--cert-out")
        if name == "cutwidth":
            s.add_argument("--threshold", type=int, help="override m(k) in approx mode")
        else:
            s.add_argument("--ell", type=int, help="window length in approx mode (default 5k)")
        s.set_defaults(func=func)

    c = sub.add_parser("contains", help="topological containment")
    c.add_argument("file")
    c.add_argument("pattern")
    c.add_argument("--constants", help="key = value profile file")
    c.add_argument("--decomposition", help="run the dynamic programming on this decomposition")
    c.add_argument("--budget", type=int, default=2_000_000)
    c.add_argument("--selfcheck", action="store_true")
    c.set_defaults(func=cmd_contains)

    vc = sub.add_parser("verify-cert", help="check a certificate against a digraph")
    vc.add_argument("file")
    vc.add_argument("certificate")
    vc.add_argument("--kind", choices=("obstacle", "ordering", "decomposition"), default="obstacle")
    vc.set_defaults(func=cmd_verify_cert)

    o = sub.add_parser("oracle", help="brute-force reference values")
    o.add_argument("what", choices=("cutwidth", "pathwidth", "contains"))
    o.add_argument("file")
    o.add_argument("pattern", nargs="?")
    o.set_defaults(func=cmd_oracle)

    b = sub.add_parser("bench", help="sweep instances and print CSV")
    b.add_argument("--cmd", required=True, choices=[f"{a}-{m}" for a in ("cutwidth", "pathwidth") for m in ("approx", "exact", "opt")])
    b.add_argument("--model", choices=MODELS, default="transitive_noise")
    b.add_argument("--sizes", default="10,20")
    b.add_argument("--seeds", type=int, default=3)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--p", type=float, default=0.05)
    b.add_argument("-k", type=int, default=1)
    b.add_argument("--workers", type=int, default=1)
    b.add_argument("--no-timing", action="store_true", help="print 0 in time_ms for byte-identical reruns")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        _err(f"budget exceeded: {exc}")
        return EXIT_BUDGET
    except InputError as exc:
        _err(f"input error: {exc}")
        return EXIT_INPUT
    except TourwidthError as exc:
        _err(f"error: {type(exc).__name__}: {exc}")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
