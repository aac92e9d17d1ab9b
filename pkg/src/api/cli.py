"""
Command-line front end.

Commands are thin wrappers that delegate to the service layer. JSON goes to
standard output, logs go to standard error.
"""
import argparse
import csv
import json
import logging
import sys
from pathlib import Path
from typing import Any, List, Optional, Sequence

from ..config import Config
from ..constants import (
    DEFAULT_CROSSCHECK_SEEDS,
    DEFAULT_EDGE_DENSITY,
    DEFAULT_GEN_STATES,
    DEFAULT_P2_FRACTION,
    DEFAULT_TARGET_COUNT,
    DEFAULT_WEIGHT_RANGE,
    EXIT_ERROR,
    EXIT_P1_LOSES,
    EXIT_P1_WINS,
    WINNER_P1,
)
from ..exceptions import ConfigurationError, EnergyArenaError, NoWitnessError
from ..harness.crosscheck import PAIRINGS, run_crosscheck
from ..harness.generator import GenParams, random_arena
from ..models.constraint import ConstraintSpec
from ..models.types import Kind, Measure, Objective, TraceRow
from ..services.arena_io import arena_to_json, load_arena, serialize_arena, serialize_expanded
from ..services.expansion import build_l_capped, build_lu, build_luv, build_lw
from ..services.reductions import reduce_energy_to_reach, reduce_reach_to_energy
from ..services.solver_service import SolverService

logger = logging.getLogger(__name__)

TRACE_FIELDS = ["index", "state", "level", "violating"]


def _emit_json(payload: Any) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _emit_trace(rows: Sequence[TraceRow]) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(TRACE_FIELDS)
    for row in rows:
        violating = "" if row["violating"] is None else int(row["violating"])
        writer.writerow([row["index"], row["state"], row["level"], violating])


def _exit_for(winner: str) -> int:
    return EXIT_P1_WINS if winner == WINNER_P1 else EXIT_P1_LOSES


def spec_from_args(args: argparse.Namespace) -> ConstraintSpec:
    """
    Build the constraint from ``--kind`` and its bound flags.

    Raises:
        ConfigurationError: If a flag required by the kind is missing
        BoundsError: If the bounds are out of order
    """
    return ConstraintSpec(
        kind=Kind(args.kind),
        L=args.L,
        objective=Objective(args.objective),
        U=args.U,
        W=args.W,
        S=args.S,
        V=args.V,
        measure=Measure(args.measure) if args.measure else None,
    )


# ----------------------------------------------------------------------
# commands
# ----------------------------------------------------------------------

def cmd_solve(args: argparse.Namespace) -> int:
    arena = load_arena(args.arena)
    service = SolverService(arena, stable=args.stable)
    report = service.solve(spec_from_args(args), oracle=args.oracle, expand=args.expand)
    _emit_json(report)
    return _exit_for(report["winner"])


def cmd_trace(args: argparse.Namespace) -> int:
    arena = load_arena(args.arena)
    states = [s.strip() for s in args.run.split(",")] if args.run else None
    rows = SolverService(arena).trace(spec_from_args(args), states)
    _emit_trace(rows)
    return EXIT_P1_WINS


def cmd_witness(args: argparse.Namespace) -> int:
    arena = load_arena(args.arena)
    payload = SolverService(arena).witness(spec_from_args(args), expand=args.expand)
    trace = payload.pop("trace", None)
    _emit_json(payload)
    if trace is not None:
        sys.stdout.write("\n")
        _emit_trace(trace)
    return EXIT_P1_WINS


def cmd_minimize(args: argparse.Namespace) -> int:
    arena = load_arena(args.arena)
    report = SolverService(arena).minimize(
        args.L, args.S, args.vmax, Measure(args.measure), Objective(args.objective)
    )
    _emit_json(report)
    return _exit_for(report["winner"])


def cmd_exists_bound(args: argparse.Namespace) -> int:
    arena = load_arena(args.arena)
    report = SolverService(arena).exists_bound(
        args.L, args.S, args.V, Measure(args.measure), Objective(args.objective)
    )
    _emit_json(report)
    return _exit_for(report["winner"])


def cmd_reduce(args: argparse.Namespace) -> int:
    arena = load_arena(args.arena)
    if args.direction == "energy-to-reach":
        output = reduce_energy_to_reach(arena)
    else:
        output = reduce_reach_to_energy(arena)

    if args.format == "json":
        _emit_json({
            "arena": arena_to_json(output.arena),
            "scale": output.scale,
            "delta": output.delta,
            "mapping": {q: list(reduced) for q, reduced in output.mapping.items()},
        })
    else:
        sys.stdout.write("\n".join(output.mapping_comments()) + "\n")
        sys.stdout.write(serialize_arena(output.arena))
    return EXIT_P1_WINS


def cmd_expand(args: argparse.Namespace) -> int:
    arena = load_arena(args.arena)
    spec = spec_from_args(args)
    if spec.kind is Kind.LU:
        expanded = build_lu(arena, spec.L, spec.U)
    elif spec.kind is Kind.LW:
        expanded = build_lw(arena, spec.L, spec.W)
    elif spec.kind is Kind.LV:
        expanded = build_luv(arena, spec.L, spec.S, spec.U, spec.V, spec.measure)
    else:
        expanded = build_l_capped(arena, spec.L, objective=spec.objective)
    sys.stdout.write(serialize_expanded(expanded))
    return EXIT_P1_WINS


def _parse_weights(text: str) -> tuple:
    try:
        low, high = (int(part) for part in text.split(","))
    except ValueError:
        raise ConfigurationError(f"--weights expects 'low,high', got '{text}'")
    return (low, high)


def cmd_gen(args: argparse.Namespace) -> int:
    params = GenParams(
        seed=args.seed,
        n_states=args.states,
        p2_fraction=args.p2,
        weight_range=_parse_weights(args.weights),
        edge_density=args.density,
        target_count=args.targets,
    )
    arena = random_arena(params)
    if args.format == "json":
        text = json.dumps(arena_to_json(arena), indent=2) + "\n"
    else:
        text = serialize_arena(arena)

    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        logger.info(f"Wrote arena seed={params.seed} to {args.output}")
    else:
        sys.stdout.write(text)
    return EXIT_P1_WINS


def cmd_crosscheck(args: argparse.Namespace) -> int:
    if args.params:
        with open(args.params, "r", encoding="utf-8") as f:
            params = GenParams.from_dict(json.load(f))
    else:
        params = GenParams(
            seed=Config.DEFAULT_SEED,
            p2_fraction=PAIRINGS[args.pair].default_p2_fraction,
        )
    if args.seed is not None:
        params = params.with_seed(args.seed)
    report = run_crosscheck(args.pair, args.seeds, params, save=not args.no_save)
    _emit_json(report.to_dict())
    return EXIT_P1_WINS if report.ok else EXIT_P1_LOSES


# ----------------------------------------------------------------------
# parser
# ----------------------------------------------------------------------

def _add_arena(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("arena", help="Arena file (text format, or .json)")


def _add_spec_flags(parser: argparse.ArgumentParser) -> None:
    _add_arena(parser)
    parser.add_argument("--kind", choices=[k.value for k in Kind], required=True)
    parser.add_argument("--L", type=int, default=0, help="Lower bound and initial level")
    parser.add_argument("--U", type=int, help="Strict upper bound (LU, LV)")
    parser.add_argument("--W", type=int, help="Weak upper bound (LW)")
    parser.add_argument("--S", type=int, help="Soft upper bound (LV)")
    parser.add_argument("--V", type=int, help="Violation budget (LV)")
    parser.add_argument("--measure", choices=[m.value for m in Measure])
    parser.add_argument("--objective", choices=[o.value for o in Objective], default=Objective.REACH.value)


def _add_soft_flags(parser: argparse.ArgumentParser) -> None:
    _add_arena(parser)
    parser.add_argument("--L", type=int, default=0)
    parser.add_argument("--S", type=int, required=True)
    parser.add_argument("--measure", choices=[m.value for m in Measure], required=True)
    parser.add_argument("--objective", choices=[o.value for o in Objective], default=Objective.REACH.value)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="enarena",
        description="Energy games with lower, upper, weak and soft bounds",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="Decide the winner at the initial state")
    _add_spec_flags(solve)
    solve.add_argument("--oracle", action="store_true", help="Force the brute-force path")
    solve.add_argument("--stable", action="store_true", help="Omit wall-time statistics")
    solve.add_argument("--expand", action="store_true", help="Include the expanded witness trace")
    solve.set_defaults(func=cmd_solve)

    trace = sub.add_parser("trace", help="CSV trace of a witness or of a given run")
    _add_spec_flags(trace)
    trace.add_argument("--run", help="Comma-separated state sequence to replay instead")
    trace.set_defaults(func=cmd_trace)

    witness = sub.add_parser("witness", help="Compact witness of a one-player reachability win")
    _add_spec_flags(witness)
    witness.add_argument("--expand", action="store_true", help="Also print the full run as CSV")
    witness.set_defaults(func=cmd_witness)

    minimize = sub.add_parser("minimize", help="Least violation budget, then least strict bound")
    _add_soft_flags(minimize)
    minimize.add_argument("--vmax", type=int, required=True)
    minimize.set_defaults(func=cmd_minimize)

    exists = sub.add_parser("exists-bound", help="Whether some strict bound wins with budget V")
    _add_soft_flags(exists)
    exists.add_argument("--V", type=int, required=True)
    exists.set_defaults(func=cmd_exists_bound)

    reduce = sub.add_parser("reduce", help="Reduce between energy and energy-reachability games")
    _add_arena(reduce)
    reduce.add_argument("--direction", choices=["energy-to-reach", "reach-to-energy"], required=True)
    reduce.add_argument("--format", choices=["text", "json"], default="text")
    reduce.set_defaults(func=cmd_reduce)

    expand = sub.add_parser("expand", help="Dump the expanded arena")
    _add_spec_flags(expand)
    expand.set_defaults(func=cmd_expand)

    gen = sub.add_parser("gen", help="Generate a seeded random arena")
    gen.add_argument("--seed", type=int, default=Config.DEFAULT_SEED)
    gen.add_argument("--states", type=int, default=DEFAULT_GEN_STATES)
    gen.add_argument("--p2", type=float, default=DEFAULT_P2_FRACTION, help="Fraction of P2 states")
    gen.add_argument("--weights", default=",".join(map(str, DEFAULT_WEIGHT_RANGE)), help="low,high")
    gen.add_argument("--density", type=float, default=DEFAULT_EDGE_DENSITY)
    gen.add_argument("--targets", type=int, default=DEFAULT_TARGET_COUNT)
    gen.add_argument("--format", choices=["text", "json"], default="text")
    gen.add_argument("--output", "-o", help="Write to a file instead of standard output")
    gen.set_defaults(func=cmd_gen)

    crosscheck = sub.add_parser("crosscheck", help="Compare a solver with its oracle on random arenas")
    crosscheck.add_argument("--pair", choices=sorted(PAIRINGS), required=True)
    crosscheck.add_argument("--seeds", type=int, default=DEFAULT_CROSSCHECK_SEEDS)
    crosscheck.add_argument("--params", help="JSON file of generator parameters")
    crosscheck.add_argument("--seed", type=int, help="First seed (default: params seed)")
    crosscheck.add_argument("--no-save", action="store_true", help="Do not write reproducer files")
    crosscheck.set_defaults(func=cmd_crosscheck)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments and run one command.

    Returns:
        0 when P1 wins (or the command succeeded), 2 when P1 loses or a
        cross-check diverged, 1 on usage or internal errors
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_P1_WINS if e.code == 0 else EXIT_ERROR

    try:
        Config.validate()
        return args.func(args)
    except NoWitnessError as e:
        logger.error(f"No witness: {e}")
        _emit_json({"error": str(e)})
        return EXIT_P1_LOSES
    except (EnergyArenaError, OSError, json.JSONDecodeError) as e:
        logger.error(f"{args.command} failed: {e}")
        _emit_json({"error": str(e)})
        return EXIT_ERROR
