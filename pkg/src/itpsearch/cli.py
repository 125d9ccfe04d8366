"""Command-line front end: verification suites, sweeps, and file benchmarks.

Defaults follow the recommended operating point (kappa1=0.01, kappa2=0.83,
relaxed radius with N_max = N_1/2 + 0.99); the strict minmax variant must be
requested explicitly except in sweep-kappa, whose table is defined against
the strict rule.
"""

from __future__ import annotations

import argparse
import sys

from . import bench, datasets, oracle
from .distributions import (
    Exponential,
    Gaussian,
    Step,
    Triangular,
    Uniform,
    as_rng,
    sample_list,
    sample_target,
    trial_rng,
)
from .keycodec import MAX_DIGITS, encode_base27, normalize
from .search import (
    DEFAULT_CAP,
    DEFAULT_KAPPA1,
    DEFAULT_KAPPA2,
    DEFAULT_NMAX_EXTRA,
    Local,
    Relaxed,
    SearchConfig,
    SortedList,
    Strict,
    make_probe_fn,
    minmax_bound,
    search,
)

DISTRIBUTIONS = {
    "uniform": Uniform,
    "gaussian": Gaussian,
    "exponential": Exponential,
    "triangular": Triangular,
    "step": Step,
}


def _float_list(text: str) -> list[float]:
    values = [float(part) for part in text.split(",") if part.strip()]
    if not values:
        raise argparse.ArgumentTypeError(f"empty list: {text!r}")
    return values


def _int_list(text: str) -> list[int]:
    values = [int(part) for part in text.split(",") if part.strip()]
    if not values:
        raise argparse.ArgumentTypeError(f"empty list: {text!r}")
    return values


def _variant(args):
    if args.variant == "strict":
        return Strict()
    if args.variant == "local":
        return Local()
    return Relaxed(extra=args.nmax_extra)


def _emit(rows, output: str) -> None:
    if output == "-":
        bench.write_csv(rows, sys.stdout)
    else:
        with open(output, "w", newline="") as fh:
            bench.write_csv(rows, fh)


def _add_run_flags(parser, *, trials: int) -> None:
    parser.add_argument("--trials", type=int, default=trials, help="Monte Carlo trials per row")
    parser.add_argument("--seed", type=int, default=0, help="master seed; trials derive from it")
    parser.add_argument("--cap", type=int, default=DEFAULT_CAP, help="query cap per search")
    parser.add_argument("--output", default="-", help="CSV path, or - for stdout")


def _add_variant_flags(parser) -> None:
    parser.add_argument(
        "--variant",
        choices=("strict", "relaxed", "local"),
        default="relaxed",
        help="minmax radius rule for the ITP strategy",
    )
    parser.add_argument(
        "--nmax-extra",
        type=float,
        default=DEFAULT_NMAX_EXTRA,
        help="relaxed budget above ceil(log2 n)",
    )
    parser.add_argument("--kappa1", type=float, default=DEFAULT_KAPPA1)
    parser.add_argument("--kappa2", type=float, default=DEFAULT_KAPPA2)


# ---------------------------------------------------------------------------
# verify: desk-scale invariant and oracle suites


def _quadratic_list(n: int) -> SortedList:
    return SortedList([(i / n) ** 2 for i in range(n + 1)], validate=False)


def _check_minmax_exhaustive(max_n: int):
    configs = (SearchConfig.itp(variant=Strict()), SearchConfig.binary())
    for n in range(2, max_n + 1):
        lst = _quadratic_list(n)
        bound = minmax_bound(n)
        targets = [(lst[k] + lst[k + 1]) / 2 for k in range(n)]
        targets += [lst[k] for k in range(1, n)]
        for z in targets:
            for config in configs:
                outcome = search(lst, z, config)
                if outcome.queries > bound:
                    return f"n={n} z={z!r}: {outcome.queries} queries > {bound}"
    return None


def _check_minimax_oracle(max_n: int):
    for n in range(2, max_n + 1):
        if oracle.minimax_depth(n) != minmax_bound(n):
            return f"minimax_depth({n}) = {oracle.minimax_depth(n)} != {minmax_bound(n)}"
    return None


def _check_worst_depth(max_n: int):
    config = SearchConfig.itp(variant=Strict())
    for n in range(2, max_n + 1):
        depth = oracle.strategy_worst_depth(make_probe_fn(config, n), n)
        if depth > minmax_bound(n):
            return f"ITP-Strict worst depth {depth} > {minmax_bound(n)} at n={n}"
    # the enumerator must expose a deliberately bad rule
    if oracle.strategy_worst_depth(oracle.sequential_rule, 17) != 16:
        return "adversary failed to force n-1 probes from the sequential rule"
    return None


def _check_equivalence(trials: int, seed: int):
    specs = (Uniform(), Gaussian(), Exponential(), Triangular(), Step())
    configs = (
        SearchConfig.binary(),
        SearchConfig.interpolation(),
        SearchConfig.itp(variant=Relaxed()),
    )
    rng = as_rng(seed)
    for t in range(trials):
        n = int(rng.integers(2, 513))
        lst = sample_list(specs[t % len(specs)], n, rng)
        z = sample_target(lst[0], lst[n], rng)
        expected = oracle.linear_scan(lst, z)
        for config in configs:
            got = search(lst, z, config).k_star
            if got != expected:
                return f"trial {t}: {config.strategy.name} found {got}, scan found {expected}"
    return None


def _check_codec(pairs: int, seed: int):
    rng = as_rng(seed)
    alphabet = "abcdefghijklmnopqrstuvwxyzABCXYZ -'.,0123456789"
    def draw():
        length = int(rng.integers(0, 15))
        picks = rng.integers(0, len(alphabet), size=length)
        return "".join(alphabet[i] for i in picks)
    for _ in range(pairs):
        s, t = draw(), draw()
        ks, kt = normalize(s)[:MAX_DIGITS], normalize(t)[:MAX_DIGITS]
        es, et = encode_base27(s), encode_base27(t)
        if (ks < kt and not es < et) or (ks == kt and es != et) or (ks > kt and not es > et):
            return f"order broken for {s!r} vs {t!r}"
    return None


def _cmd_verify(args) -> int:
    checks = [
        (
            f"minmax bound exhaustive, n=2..{args.max_n}",
            lambda: _check_minmax_exhaustive(args.max_n),
        ),
        ("minimax oracle equals ceil(log2 n), n=2..512", lambda: _check_minimax_oracle(512)),
        ("ITP-Strict adversarial depth <= bound, n=2..256", lambda: _check_worst_depth(256)),
        (
            f"strategies agree with linear scan, {args.trials} random instances",
            lambda: _check_equivalence(args.trials, args.seed),
        ),
        ("base-27 codec preserves key order, 5000 pairs", lambda: _check_codec(5000, args.seed)),
    ]
    failed = 0
    for name, run in checks:
        problem = run()
        if problem is None:
            print(f"PASS {name}")
        else:
            print(f"FAIL {name}: {problem}")
            failed += 1
    return 1 if failed else 0


def _cmd_oracle_check(args) -> int:
    failed = 0

    problem = _check_minimax_oracle(args.max_n)
    if problem is None:
        print(f"PASS minimax_depth equals ceil(log2 n), n=2..{args.max_n}")
    else:
        print(f"FAIL minimax oracle: {problem}")
        failed += 1

    problem = _check_worst_depth(128)
    if problem is None:
        print("PASS adversarial depth enumeration, n=2..128")
    else:
        print(f"FAIL adversarial depth: {problem}")
        failed += 1

    bad = None
    for n in range(2, 257):
        half = minmax_bound(n)
        profile = oracle.binary_equality_profile(n)
        closed = oracle.average_depth_c2(n)
        if profile.avg_depth < half - 2 or not (half - 2 <= closed <= half):
            bad = f"n={n}: equality avg {float(profile.avg_depth):.4f}, closed form {closed:.4f}"
            break
    if bad is None:
        print("PASS binary average depth within lower-bound band, n=2..256")
    else:
        print(f"FAIL binary average depth: {bad}")
        failed += 1

    return 1 if failed else 0


# ---------------------------------------------------------------------------
# benchmark verbs


def _cmd_sweep_kappa(args) -> int:
    rows = bench.sweep_kappa(
        args.kappa1,
        args.kappa2,
        args.n,
        args.trials,
        args.seed,
        variant=_variant(args),
        cap=args.cap,
        spec=DISTRIBUTIONS[args.distribution](),
    )
    _emit(rows, args.output)
    return 0


def _cmd_sweep_n(args) -> int:
    variant = _variant(args)
    strategies = [
        SearchConfig.binary(cap=args.cap),
        SearchConfig.interpolation(cap=args.cap),
        SearchConfig.itp(variant=variant, kappa1=args.kappa1, kappa2=args.kappa2, cap=args.cap),
    ]
    rows = bench.sweep_n(
        args.n, DISTRIBUTIONS[args.distribution](), strategies, args.trials, args.seed
    )
    _emit(rows, args.output)
    return 0


def _cmd_bench_file(args) -> int:
    if args.text and args.column is not None:
        raise ValueError("--column applies to numeric input only, not --text")
    if args.text:
        dataset = datasets.load_text(args.input)
    else:
        dataset = datasets.load_numeric(args.input, column=args.column)
    strategies = [
        SearchConfig.binary(cap=args.cap),
        SearchConfig.interpolation(cap=args.cap),
        SearchConfig.itp(
            variant=_variant(args), kappa1=args.kappa1, kappa2=args.kappa2, cap=args.cap
        ),
    ]
    rows = bench.run_trials(dataset, strategies, args.trials, args.seed)
    _emit(rows, args.output)
    return 0


def _cmd_generate(args) -> int:
    dataset = datasets.generate(args.kind, args.n)
    lines = "".join(f"{value!r}\n" for value in dataset.list.values.tolist())
    if args.output == "-":
        sys.stdout.write(lines)
    else:
        with open(args.output, "w") as fh:
            fh.write(lines)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="itpsearch",
        description="Sorted-list searching with interpolation, truncation and projection.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("verify", help="run the desk-scale invariant and oracle suites")
    p.add_argument("--max-n", type=int, default=128, help="exhaustive minmax check up to this n")
    p.add_argument("--trials", type=int, default=2000, help="random equivalence instances")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("sweep-kappa", help="mean queries over a (kappa1, kappa2) grid")
    p.add_argument("--n", type=int, default=200_000, help="list size")
    p.add_argument("--kappa1", type=_float_list, default=list(bench.TABLE1_KAPPA1))
    p.add_argument("--kappa2", type=_float_list, default=list(bench.TABLE1_KAPPA2))
    p.add_argument(
        "--variant",
        choices=("strict", "relaxed", "local"),
        default="strict",
        help="the sweep table is defined against the strict rule",
    )
    p.add_argument("--nmax-extra", type=float, default=DEFAULT_NMAX_EXTRA)
    p.add_argument(
        "--distribution", choices=sorted(DISTRIBUTIONS), default="uniform"
    )
    _add_run_flags(p, trials=500)
    p.set_defaults(func=_cmd_sweep_kappa)

    p = sub.add_parser("sweep-n", help="per-strategy stats across list sizes")
    p.add_argument("--n", type=_int_list, required=True, help="comma-separated list sizes")
    _add_variant_flags(p)
    p.add_argument(
        "--distribution", choices=sorted(DISTRIBUTIONS), default="uniform"
    )
    _add_run_flags(p, trials=500)
    p.set_defaults(func=_cmd_sweep_n)

    p = sub.add_parser("bench-file", help="benchmark all strategies against a file's keys")
    p.add_argument("--input", required=True, help="file of values or text keys")
    p.add_argument("--text", action="store_true", help="treat lines as text keys")
    p.add_argument("--column", type=int, default=None, help="1-based CSV column")
    _add_variant_flags(p)
    _add_run_flags(p, trials=500)
    p.set_defaults(func=_cmd_bench_file)

    p = sub.add_parser("oracle-check", help="cross-check the analytic and enumerated oracles")
    p.add_argument("--max-n", type=int, default=1024)
    p.set_defaults(func=_cmd_oracle_check)

    p = sub.add_parser("generate", help="emit a self-generated value list")
    p.add_argument("--kind", choices=datasets.GENERATOR_KINDS, required=True)
    p.add_argument("--n", type=int, required=True, help="problem size; emits n+1 values")
    p.add_argument("--output", default="-", help="path, or - for stdout")
    p.set_defaults(func=_cmd_generate)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
