"""
Seeded solver/oracle cross-checks.

Every pairing draws a random arena per seed, asks a solver and its oracle
the same question and compares the answers. Divergences are logged and
dumped as reproducer files.
"""
import logging
import random
from dataclasses import dataclass, field, replace
from typing import Any, Callable, Dict, List, Optional, Tuple

from ..constants import MAX_BOUND_SPAN, MIXED_P2_FRACTION, WINNER_P1, WINNER_P2
from ..exceptions import ConfigurationError
from ..models.arena import Arena
from ..models.constraint import ConstraintSpec
from ..models.expanded import Configuration
from ..models.types import Kind, Measure, Objective, Player
from ..services.arena_io import serialize_arena
from ..services.energy import solve_l_energy
from ..services.expansion import build_l_capped, build_lw
from ..services.game_engine import shortest_witness
from ..services.lw_solver import solve_lw_2p, solve_lw_reach_1p
from ..services.reductions import reduce_energy_to_reach, reduce_reach_to_energy
from ..services.replay import is_valid_run
from ..services.violations import solve_lv
from ..utils.results_storage import save_reproducer
from .generator import GenParams, random_arena
from .oracles import bounded_run_oracle, enumerate_p2_memoryless, oracle_solve

logger = logging.getLogger(__name__)

# (arena, bound rng) -> (solver answer, oracle answer, context)
PairCheck = Callable[[Arena, random.Random], Tuple[Any, Any, Dict[str, Any]]]


def _label(p1_wins: bool) -> str:
    return WINNER_P1 if p1_wins else WINNER_P2


def _check_lwpoly(arena: Arena, rng: random.Random):
    W = rng.randint(0, MAX_BOUND_SPAN)
    result = solve_lw_reach_1p(arena, 0, W)
    solver = _label(result.reachable)
    if result.reachable:
        run = result.witness.expand()
        spec = ConstraintSpec(Kind.LW, 0, objective=Objective.REACH, W=W)
        if not is_valid_run(arena, spec, run) or run.last[0] not in arena.targets:
            solver = "invalid-witness"
    expanded = build_lw(arena, 0, W)
    oracle = _label(oracle_solve(expanded, Objective.REACH).wins(expanded.init))
    return solver, oracle, {"L": 0, "W": W}


def _check_lenergy(arena: Arena, rng: random.Random):
    solver = _label(solve_l_energy(arena, 0).wins(arena.initial))
    expanded = build_l_capped(arena, 0)
    oracle = _label(oracle_solve(expanded, Objective.INFINITE_RUN).wins(expanded.init))
    return solver, oracle, {"L": 0, "cap": expanded.semantics}


def _check_lw2p(arena: Arena, rng: random.Random):
    W = rng.randint(0, 4)
    region = solve_lw_2p(arena, 0, W, Objective.REACH)
    solver = _label(region.wins(Configuration(arena.initial, 0)))
    spec = ConstraintSpec(Kind.LW, 0, objective=Objective.REACH, W=W)
    oracle = _label(enumerate_p2_memoryless(arena, spec) is Player.P1)
    return solver, oracle, {"L": 0, "W": W}


def _check_lv(arena: Arena, rng: random.Random):
    S = rng.randint(0, 2)
    U = S + rng.randint(0, 3)
    V = rng.randint(0, 3)
    measure = rng.choice(list(Measure))
    solver = _label(solve_lv(arena, 0, S, U, V, measure, Objective.REACH, with_witness=False).p1_wins)
    spec = ConstraintSpec(Kind.LV, 0, objective=Objective.REACH, U=U, S=S, V=V, measure=measure)
    # (V+1) counter values per (state, level) bound the shortest run
    max_len = len(arena.states) * (U + 1) * (V + 1)
    oracle = _label(bounded_run_oracle(arena, spec, max_len) is not None)
    return solver, oracle, {"L": 0, "S": S, "U": U, "V": V, "measure": measure.value}


def _check_e2r(arena: Arena, rng: random.Random):
    solver = _label(solve_l_energy(arena, 0).wins(arena.initial))
    reduced = reduce_energy_to_reach(arena).arena
    expanded = build_l_capped(reduced, 0, objective=Objective.REACH)
    oracle = _label(oracle_solve(expanded, Objective.REACH).wins(expanded.init))
    return solver, oracle, {"L": 0, "reduced_states": len(reduced.states)}


def _check_r2e(arena: Arena, rng: random.Random):
    reduced = reduce_reach_to_energy(arena).arena
    solver = _label(solve_l_energy(reduced, 0).wins(reduced.initial))
    expanded = build_l_capped(arena, 0, objective=Objective.REACH)
    oracle = _label(oracle_solve(expanded, Objective.REACH).wins(expanded.init))
    return solver, oracle, {"L": 0, "reduced_states": len(reduced.states)}


def _check_witness(arena: Arena, rng: random.Random):
    W = rng.randint(0, MAX_BOUND_SPAN)
    run = shortest_witness(build_lw(arena, 0, W))
    spec = ConstraintSpec(Kind.LW, 0, objective=Objective.REACH, W=W)
    bounded = bounded_run_oracle(arena, spec, len(arena.states) * (W + 1))
    solver = None if run is None else len(run)
    oracle = None if bounded is None else len(bounded)
    return solver, oracle, {"L": 0, "W": W}


@dataclass(frozen=True)
class Pairing:
    """A solver/oracle pairing and the arena shape it needs"""
    name: str
    check: PairCheck
    one_player: bool = False
    needs_targets: bool = True
    default_p2_fraction: float = 0.0


PAIRINGS: Dict[str, Pairing] = {
    p.name: p for p in (
        Pairing("lwpoly:exglw", _check_lwpoly, one_player=True),
        Pairing("lenergy:capped", _check_lenergy, needs_targets=False, default_p2_fraction=MIXED_P2_FRACTION),
        Pairing("lw2p:enum", _check_lw2p, default_p2_fraction=MIXED_P2_FRACTION),
        Pairing("lv:bounded", _check_lv, one_player=True),
        Pairing("e2r:capped", _check_e2r, needs_targets=False, default_p2_fraction=MIXED_P2_FRACTION),
        Pairing("r2e:capped", _check_r2e, default_p2_fraction=MIXED_P2_FRACTION),
        Pairing("witness:bounded", _check_witness, one_player=True),
    )
}


@dataclass
class Divergence:
    seed: int
    solver: Any
    oracle: Any
    context: Dict[str, Any]
    reproducer: Optional[str] = None


@dataclass
class CrosscheckReport:
    """Outcome of one pairing over a range of seeds"""
    pair: str
    seeds: List[int]
    divergences: List[Divergence] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.divergences

    def to_dict(self) -> Dict[str, Any]:
        return {
            "pair": self.pair,
            "seeds": len(self.seeds),
            "divergences": [
                {
                    "seed": d.seed,
                    "solver": d.solver,
                    "oracle": d.oracle,
                    "context": d.context,
                    "reproducer": d.reproducer,
                }
                for d in self.divergences
            ],
        }


def params_for(pairing: Pairing, params: GenParams) -> GenParams:
    """Adjust generator parameters to what the pairing needs."""
    if pairing.one_player and params.p2_fraction != 0.0:
        params = replace(params, p2_fraction=0.0)
    if pairing.needs_targets and params.target_count == 0:
        params = replace(params, target_count=1)
    return params


def check_seed(pairing: Pairing, params: GenParams) -> Tuple[Arena, Any, Any, Dict[str, Any]]:
    """Run one pairing on the arena drawn from ``params``."""
    arena = random_arena(params)
    bound_rng = random.Random(params.seed * 7919 + 1)
    solver, oracle, context = pairing.check(arena, bound_rng)
    return arena, solver, oracle, context


def run_crosscheck(
    pair: str,
    seeds: int,
    params: Optional[GenParams] = None,
    save: bool = True,
) -> CrosscheckReport:
    """
    Run a pairing on ``seeds`` consecutive seeds starting at params.seed.

    Args:
        pair: Pairing name, one of PAIRINGS
        seeds: Number of seeds
        params: Generator parameters (default: GenParams with the
            pairing's ownership mix)
        save: Write a reproducer file for each divergence

    Raises:
        ConfigurationError: On an unknown pairing
    """
    if pair not in PAIRINGS:
        raise ConfigurationError(f"unknown pairing '{pair}', expected one of {sorted(PAIRINGS)}")
    pairing = PAIRINGS[pair]
    if params is None:
        params = GenParams(p2_fraction=pairing.default_p2_fraction)
    base = params_for(pairing, params)
    report = CrosscheckReport(pair, list(range(base.seed, base.seed + seeds)))
    logger.info(f"Cross-checking {pair} on {seeds} seeds from {base.seed}")

    for seed in report.seeds:
        seed_params = base.with_seed(seed)
        arena, solver, oracle, context = check_seed(pairing, seed_params)
        if solver == oracle:
            continue
        logger.warning(f"{pair} seed {seed}: solver {solver} != oracle {oracle}")
        divergence = Divergence(seed, solver, oracle, context)
        if save:
            divergence.reproducer = save_reproducer(pair, seed, {
                "pair": pair,
                "params": seed_params.to_dict(),
                "arena": serialize_arena(arena),
                "solver": solver,
                "oracle": oracle,
                "context": context,
            })
        report.divergences.append(divergence)

    logger.info(f"{pair}: {len(report.divergences)} divergences over {seeds} seeds")
    return report
