"""
Command-line entry point: `dronesched <command> ...`

Every command reads and writes plain JSON / JSONL / CSV files and exits with status 2 on a scheduling error.
"""

import argparse
import sys
from collections.abc import Sequence
from fractions import Fraction
from pathlib import Path

from loguru import logger as L
from pydantic import TypeAdapter

from dronesched.core.api import SchedulingError
from dronesched.exceptions import MalformedRequest
from dronesched.models.enums import Strategy
from dronesched.models.intervals import Instance
from dronesched.models.reports import GenSpec
from dronesched.models.routes import RejectedRequest
from dronesched.services.benchmark import bench_doubling
from dronesched.services.bin_packing import PlacementTrace
from dronesched.services.harness import compare_random, compare_strategies, generate_instance
from dronesched.services.interval_generator import stream_generate
from dronesched.services.normalize import validate_instance
from dronesched.services.oracle import summarize
from dronesched.services.scheduler import schedule_instance
from dronesched.services.variable_size import parse_capacity_source, solve_ovds
from dronesched.settings import settings
from dronesched.tools.plot_bench import render_bench
from dronesched.tools.plot_schedule import render_schedule
from dronesched.utils.io import read_intervals, read_requests, read_route, write_jsonl, write_model
from dronesched.utils.logger import setup_logger
from dronesched.utils.rational import parse_rational

EXIT_SCHEDULING_ERROR = 2


def rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def positive_rational(text: str) -> Fraction:
    value = rational(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def size_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _add_generation_flags(parser: argparse.ArgumentParser, required: bool) -> None:
    parser.add_argument("--n", type=int, required=required, help="number of requests")
    parser.add_argument("--horizon", type=positive_rational, required=required, help="time span of the instance")
    parser.add_argument("--min-len", type=positive_rational, required=required, help="shortest interval length")
    parser.add_argument("--max-len", type=positive_rational, required=required, help="longest interval length")
    parser.add_argument("--seed", type=int, default=settings.default_seed, help="random seed")
    parser.add_argument("--max-overlap", type=int, default=None, help="redraw requests above this clique size")


def _gen_spec(args: argparse.Namespace) -> GenSpec:
    return GenSpec(
        n=args.n,
        horizon=args.horizon,
        min_len=args.min_len,
        max_len=args.max_len,
        budget=args.budget,
        seed=args.seed,
        max_overlap=args.max_overlap,
    )


def cmd_gen(args: argparse.Namespace) -> None:
    instance = generate_instance(_gen_spec(args))
    write_jsonl(args.output, instance.intervals)
    L.info(f"wrote {len(instance.intervals)} requests to {args.output}")


def cmd_schedule(args: argparse.Namespace) -> None:
    instance = Instance(intervals=tuple(read_intervals(args.input)), budget=args.budget)
    instance = validate_instance(instance, args.epsilon)
    trace = PlacementTrace() if args.trace else None
    _, report = schedule_instance(instance, args.strategy, epsilon=args.epsilon, trace=trace)
    write_model(args.output, report)
    L.info(f"wrote schedule to {args.output}")
    if trace is not None:
        trace.to_frame().to_csv(args.trace, index=False)
        L.info(f"wrote placement trace to {args.trace}")
    if args.image:
        Path(args.image).write_bytes(render_schedule(report, instance.intervals, args.dpi))
        L.info(f"wrote schedule chart to {args.image}")


def cmd_ovds(args: argparse.Namespace) -> None:
    report = solve_ovds(read_intervals(args.input), parse_capacity_source(args.capacities), args.epsilon)
    write_model(args.output, report)
    L.info(f"wrote OVDS report to {args.output}")


def cmd_genintervals(args: argparse.Namespace) -> None:
    batch = stream_generate(read_route(args.route), read_requests(args.requests), args.quantum, args.epsilon)
    write_jsonl(args.output, batch.intervals)
    L.info(f"wrote {len(batch.intervals)} intervals to {args.output}")
    if args.rejected:
        adapter = TypeAdapter(tuple[RejectedRequest, ...])
        Path(args.rejected).write_bytes(adapter.dump_json(batch.rejected, indent=2) + b"\n")


def cmd_oracle(args: argparse.Namespace) -> None:
    instance = validate_instance(Instance(intervals=tuple(read_intervals(args.input)), budget=args.budget))
    summary = summarize(instance.intervals, instance.budget, exact=not args.lb)
    if args.output:
        write_model(args.output, summary)
    else:
        print(summary.model_dump_json(indent=2, by_alias=True))


def cmd_bench(args: argparse.Namespace) -> None:
    frame = bench_doubling(args.sizes, args.strategy, args.seeds, args.budget)
    frame.to_csv(args.output, index=False)
    L.info(f"wrote benchmark table to {args.output}")
    if args.plot:
        Path(args.plot).write_bytes(render_bench(frame))


def cmd_compare(args: argparse.Namespace) -> None:
    if args.input:
        instance = Instance(intervals=tuple(read_intervals(args.input)), budget=args.budget)
        write_model(args.output, compare_strategies(instance))
    else:
        if args.n is None or args.horizon is None or args.min_len is None or args.max_len is None:
            raise MalformedRequest("compare --instances needs --n, --horizon, --min-len and --max-len")
        compare_random(_gen_spec(args), args.instances).to_csv(args.output, index=False)
    L.info(f"wrote comparison to {args.output}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dronesched",
        description="Online drone scheduling for truck-drone delivery",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--verbose", "-v", action="store_true", help="log every scheduling decision")
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="generate a random request stream")
    _add_generation_flags(gen, required=True)
    gen.add_argument("--budget", type=positive_rational, required=True)
    gen.add_argument("--output", required=True)
    gen.set_defaults(func=cmd_gen)

    schedule = commands.add_parser("schedule", help="color a request stream online")
    schedule.add_argument("--budget", type=positive_rational, required=True)
    schedule.add_argument("--strategy", type=Strategy, choices=list(Strategy), default=Strategy.NEXT_FIT)
    schedule.add_argument("--input", required=True)
    schedule.add_argument("--output", required=True)
    schedule.add_argument("--epsilon", type=positive_rational, default=None)
    schedule.add_argument("--trace", default=None, help="CSV of every bin placement")
    schedule.add_argument("--image", default=None, help="PNG chart of the drones")
    schedule.add_argument("--dpi", type=int, default=None)
    schedule.set_defaults(func=cmd_schedule)

    ovds = commands.add_parser("ovds", help="serve known requests with drones of varying capacity")
    ovds.add_argument("--input", required=True)
    ovds.add_argument("--capacities", required=True, help='capacity file, or "uniform:lo,hi,seed"')
    ovds.add_argument("--output", required=True)
    ovds.add_argument("--epsilon", type=positive_rational, default=None)
    ovds.set_defaults(func=cmd_ovds)

    genintervals = commands.add_parser("genintervals", help="turn customer requests into delivery intervals")
    genintervals.add_argument("--route", required=True)
    genintervals.add_argument("--requests", required=True)
    genintervals.add_argument("--output", required=True)
    genintervals.add_argument("--quantum", type=positive_rational, default=None)
    genintervals.add_argument("--epsilon", type=positive_rational, default=None)
    genintervals.add_argument("--rejected", default=None, help="JSON list of the requests left out")
    genintervals.set_defaults(func=cmd_genintervals)

    oracle = commands.add_parser("oracle", help="offline reference values of a request set")
    oracle.add_argument("--input", required=True)
    oracle.add_argument("--budget", type=positive_rational, required=True)
    oracle.add_argument("--output", default=None)
    mode = oracle.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="branch-and-bound optimum (default)")
    mode.add_argument("--lb", action="store_true", help="lower bound only")
    oracle.set_defaults(func=cmd_oracle)

    bench = commands.add_parser("bench", help="doubling experiment")
    bench.add_argument("--sizes", type=size_list, required=True, help="e.g. 1024,2048,4096")
    bench.add_argument("--strategy", type=Strategy, choices=list(Strategy), default=Strategy.NEXT_FIT)
    bench.add_argument("--seeds", type=int, default=None)
    bench.add_argument("--budget", type=positive_rational, default=Fraction(1))
    bench.add_argument("--output", required=True)
    bench.add_argument("--plot", default=None)
    bench.set_defaults(func=cmd_bench)

    compare = commands.add_parser("compare", help="next-fit against first-fit")
    source = compare.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", default=None)
    source.add_argument("--instances", type=int, default=None, help="number of random instances")
    compare.add_argument("--budget", type=positive_rational, required=True)
    compare.add_argument("--output", required=True)
    _add_generation_flags(compare, required=False)
    compare.set_defaults(func=cmd_compare)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logger("DEBUG" if args.verbose else settings.log_level)
    try:
        args.func(args)
    except SchedulingError as exc:
        L.error(str(exc))
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCHEDULING_ERROR
    return 0


if __name__ == "__main__":
    sys.exit(main())
