"""Timing harness for the decision procedures and the extension
algorithm: measures runtimes across generated instance sizes, fits each
operation's stated growth bound, and writes a delimited table plus
rendered figures."""

from __future__ import annotations

import csv
import math
import random
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

from .core import SetFamily
from .extension import minimal_wg_extension
from .generate import random_base
from .verify import endpoints, is_base, is_learning_space_base, is_wg_base

BOUNDS: dict[str, tuple[str, Callable[[int, int, int], float]]] = {
    "endpoints": ("m", lambda n, m, ell: m),
    "is_base": ("n*m", lambda n, m, ell: n * m),
    "is_learning_space_base": ("n*m", lambda n, m, ell: n * m),
    "is_wg_base": ("n^2*m", lambda n, m, ell: n * n * m),
    "minimal_wg_extension": (
        "n*m*ell + n^3*m",
        lambda n, m, ell: n * m * ell + n**3 * m,
    ),
}


@dataclass(frozen=True)
class BenchRow:
    op: str
    n: int
    m: int
    ell: int
    seconds: float
    bound: float


def _best_of(fn: Callable[[], object], repeats: int) -> float:
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_family(n: int, ell: int, ground: int, seed: int) -> SetFamily:
    rng = random.Random(seed * 1_000_003 + n)
    return random_base(rng, n=n, ell=ell, ground_size=ground, include_empty=True)


def run_bench(
    sizes: Sequence[int],
    *,
    ell: int = 8,
    ground: int = 24,
    seed: int = 1,
    repeats: int = 3,
    ops: Sequence[str] = tuple(BOUNDS),
) -> list[BenchRow]:
    rows: list[BenchRow] = []
    for n in sizes:
        family = bench_family(n, ell, ground, seed)
        params = family.size_params()
        sets = family.sets

        def time_endpoints() -> float:
            total = _best_of(lambda: [endpoints(family, s) for s in sets], repeats)
            return total / len(sets)

        timers: dict[str, Callable[[], float]] = {
            "endpoints": time_endpoints,
            "is_base": lambda: _best_of(lambda: is_base(family), repeats),
            "is_learning_space_base": lambda: _best_of(
                lambda: is_learning_space_base(family), repeats
            ),
            "is_wg_base": lambda: _best_of(lambda: is_wg_base(family), repeats),
            "minimal_wg_extension": lambda: _best_of(
                lambda: minimal_wg_extension(family), max(1, repeats - 2)
            ),
        }
        for op in ops:
            seconds = timers[op]()
            _, bound_fn = BOUNDS[op]
            rows.append(
                BenchRow(
                    op=op,
                    n=params.n,
                    m=params.m,
                    ell=params.ell,
                    seconds=seconds,
                    bound=bound_fn(params.n, params.m, params.ell),
                )
            )
    return rows


def fit_ratios(rows: Sequence[BenchRow]) -> dict[str, list[tuple[BenchRow, float]]]:
    """Per operation: fit the single constant a in t = a*bound by the
    geometric mean of t/bound, and report each row's t/(a*bound)."""
    out: dict[str, list[tuple[BenchRow, float]]] = {}
    for op in {r.op for r in rows}:
        mine = [r for r in rows if r.op == op]
        logs = [math.log(r.seconds / r.bound) for r in mine]
        a = math.exp(sum(logs) / len(logs))
        out[op] = [(r, r.seconds / (a * r.bound)) for r in mine]
    return out


def write_csv(path: Path, rows: Sequence[BenchRow]) -> None:
    ratios = fit_ratios(rows)
    ratio_of = {id(r): ratio for pairs in ratios.values() for r, ratio in pairs}
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["op", "n", "m", "ell", "seconds", "bound", "fit_ratio"])
        for r in rows:
            writer.writerow(
                [r.op, r.n, r.m, r.ell, f"{r.seconds:.6g}", f"{r.bound:.6g}",
                 f"{ratio_of[id(r)]:.4g}"]
            )


def render_figure(path: Path, rows: Sequence[BenchRow]) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ops = [op for op in BOUNDS if any(r.op == op for r in rows)]
    fig, axes = plt.subplots(
        2, (len(ops) + 1) // 2, figsize=(4.2 * ((len(ops) + 1) // 2), 7.2)
    )
    flat = list(axes.flat)
    ratios = fit_ratios(rows)
    for ax, op in zip(flat, ops):
        mine = sorted((r for r in rows if r.op == op), key=lambda r: r.n)
        logs = [math.log(r.seconds / r.bound) for r in mine]
        a = math.exp(sum(logs) / len(logs))
        ns = [r.n for r in mine]
        ax.loglog(ns, [r.seconds for r in mine], "o-", label="measured")
        ax.loglog(ns, [a * r.bound for r in mine], "--", label="fit a*bound")
        bound_name, _ = BOUNDS[op]
        worst = max(abs(math.log(ratio)) for _, ratio in ratios[op])
        ax.set_title(f"{op}\nbound {bound_name}, max dev x{math.exp(worst):.2f}")
        ax.set_xlabel("n")
        ax.set_ylabel("seconds")
        ax.grid(True, which="both", alpha=0.3)
        ax.legend(fontsize=8)
    for ax in flat[len(ops):]:
        ax.set_visible(False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def cmd_bench(args) -> int:
    sizes = [int(s) for s in str(args.sizes).split(",") if s]
    rows = run_bench(
        sizes, ell=args.ell, ground=args.ground, seed=args.seed, repeats=args.repeats
    )
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    csv_path = outdir / "bench.csv"
    fig_path = outdir / "bench.png"
    write_csv(csv_path, rows)
    render_figure(fig_path, rows)
    if args.format == "json":
        import json

        ratios = fit_ratios(rows)
        ratio_of = {id(r): ratio for pairs in ratios.values() for r, ratio in pairs}
        print(
            json.dumps(
                [
                    {
                        "op": r.op,
                        "n": r.n,
                        "m": r.m,
                        "ell": r.ell,
                        "seconds": r.seconds,
                        "bound": r.bound,
                        "fit_ratio": ratio_of[id(r)],
                    }
                    for r in rows
                ],
                indent=2,
            )
        )
    else:
        ratios = fit_ratios(rows)
        ratio_of = {id(r): ratio for pairs in ratios.values() for r, ratio in pairs}
        print(f"{'op':<24}{'n':>6}{'m':>8}{'ell':>5}{'seconds':>12}{'fit ratio':>11}")
        for r in rows:
            print(
                f"{r.op:<24}{r.n:>6}{r.m:>8}{r.ell:>5}"
                f"{r.seconds:>12.6f}{ratio_of[id(r)]:>11.3f}"
            )
        print(f"wrote {csv_path} and {fig_path}")
    return 0
