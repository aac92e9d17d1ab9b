"""
Solver dispatch: picks the right algorithm for a constraint spec and shapes
its answer into the report payloads the CLI prints.
"""
import logging
import time
from typing import List, Optional, Sequence, Tuple

from ..constants import WINNER_P1, WINNER_P2
from ..exceptions import ConfigurationError, NoWitnessError
from ..models.arena import Arena
from ..models.constraint import ConstraintSpec
from ..models.expanded import ExpandedArena
from ..models.run import Run
from ..models.types import (
    Kind,
    Measure,
    MinimizeReport,
    Objective,
    SolveReport,
    SolveStats,
    TraceRow,
    WitnessPayload,
)
from .energy import solve_l_energy
from .expansion import build_l_capped, build_lu, build_lw
from .game_engine import shortest_witness, solve_expanded
from .lw_solver import Witness, solve_lw_reach_1p
from .reductions import reduce_reach_to_energy
from .replay import edges_for_states, replay_run
from .violations import bound_existence, minimize, solve_lv

logger = logging.getLogger(__name__)


def winner_label(p1_wins: bool) -> str:
    return WINNER_P1 if p1_wins else WINNER_P2


def trace_rows(run: Run, S: Optional[int] = None) -> List[TraceRow]:
    """Per-position rows of a run; ``violating`` is None without a soft bound."""
    return [
        {
            "index": i,
            "state": state,
            "level": level,
            "violating": None if S is None else level > S,
        }
        for i, (state, level) in enumerate(run.steps)
    ]


def _path_payload(arena: Arena, run: Run, expand: bool, S: Optional[int]) -> WitnessPayload:
    edges = [arena.edges[i] for i in run.edges_taken]
    payload: WitnessPayload = {
        "segments": [{
            "type": "path",
            "edges": [f"{e.src} {e.weight:+d} {e.dst}" for e in edges],
        }],
        "length": len(run),
    }
    if expand:
        payload["trace"] = trace_rows(run, S)
    return payload


def _compact_payload(witness: Witness, expand: bool) -> WitnessPayload:
    payload: WitnessPayload = {
        "segments": witness.to_payload(),
        "length": witness.length(),
    }
    if expand:
        payload["trace"] = trace_rows(witness.expand())
    return payload


class SolverService:
    """
    Entry point for every query on a single arena.

    Each query returns plain dicts (see models.types) so callers only need
    json.dumps to print them.
    """

    def __init__(self, arena: Arena, stable: bool = False):
        """
        Args:
            arena: Valid arena
            stable: Drop wall-time statistics for byte-identical reports
        """
        self.arena = arena
        self.stable = stable

    # ------------------------------------------------------------------
    # solve
    # ------------------------------------------------------------------

    def solve(self, spec: ConstraintSpec, oracle: bool = False, expand: bool = False) -> SolveReport:
        """
        Decide the winner at the initial state.

        One-player LW reachability goes to the polynomial solver; plain L
        goes to the progress measure (reachability through the reduction to
        an energy game); bounded kinds are solved on their expanded arena.
        ``oracle`` forces the expanded (or capped) arena for every kind.

        Raises:
            ConfigurationError: If the spec does not fit the arena
        """
        spec.validate(self.arena)
        started = time.perf_counter()
        stats: SolveStats = {"configs_explored": 0, "labels_stored": 0}

        if oracle:
            solver, p1_wins, witness = self._solve_oracle(spec, expand, stats)
        elif spec.kind is Kind.L:
            solver, p1_wins, witness = self._solve_l(spec, stats)
        elif spec.kind is Kind.LW and spec.objective is Objective.REACH and self.arena.is_one_player:
            solver, p1_wins, witness = self._solve_lw_poly(spec, expand, stats)
        elif spec.kind is Kind.LV:
            solver, p1_wins, witness = self._solve_lv(spec, expand, stats)
        else:
            expanded = build_lu(self.arena, spec.L, spec.U) if spec.kind is Kind.LU \
                else build_lw(self.arena, spec.L, spec.W)
            solver = f"ex{expanded.semantics}"
            p1_wins, witness = self._solve_on(expanded, spec, expand, stats)

        if not self.stable:
            stats["wall_time_ms"] = round((time.perf_counter() - started) * 1000, 3)
        logger.info(f"{spec.kind.value}/{spec.objective.value} via {solver}: {winner_label(p1_wins)}")
        return {
            "query": spec.echo(),
            "solver": solver,
            "winner": winner_label(p1_wins),
            "witness": witness,
            "stats": stats,
        }

    def _solve_on(
        self,
        expanded: ExpandedArena,
        spec: ConstraintSpec,
        expand: bool,
        stats: SolveStats,
    ) -> Tuple[bool, Optional[WitnessPayload]]:
        region = solve_expanded(expanded, spec.objective)
        stats["configs_explored"] = len(expanded)
        p1_wins = region.wins(expanded.init)
        witness = None
        if p1_wins and spec.objective is Objective.REACH and self.arena.is_one_player:
            run = shortest_witness(expanded)
            if run is not None:
                witness = _path_payload(self.arena, run, expand, spec.S)
        return p1_wins, witness

    def _solve_oracle(self, spec: ConstraintSpec, expand: bool, stats: SolveStats):
        if spec.kind is Kind.L:
            expanded = build_l_capped(self.arena, spec.L, objective=spec.objective)
        elif spec.kind is Kind.LU:
            expanded = build_lu(self.arena, spec.L, spec.U)
        elif spec.kind is Kind.LW:
            expanded = build_lw(self.arena, spec.L, spec.W)
        else:
            solution = solve_lv(
                self.arena, spec.L, spec.S, spec.U, spec.V, spec.measure, spec.objective,
                with_witness=False,
            )
            expanded = solution.expanded
        p1_wins, witness = self._solve_on(expanded, spec, expand, stats)
        return f"oracle:{expanded.semantics}", p1_wins, witness

    def _solve_l(self, spec: ConstraintSpec, stats: SolveStats):
        if spec.objective is Objective.INFINITE_RUN:
            region = solve_l_energy(self.arena, spec.L)
            return region.method, region.wins(self.arena.initial), None

        reduction = reduce_reach_to_energy(self.arena)
        reduced = reduction.arena
        region = solve_l_energy(reduced, spec.L)
        stats["configs_explored"] = len(reduced.states)
        return f"reach-to-energy+{region.method}", region.wins(reduced.initial), None

    def _solve_lw_poly(self, spec: ConstraintSpec, expand: bool, stats: SolveStats):
        result = solve_lw_reach_1p(self.arena, spec.L, spec.W)
        stats["configs_explored"] = result.augmented.size
        stats["labels_stored"] = result.labels_stored
        witness = _compact_payload(result.witness, expand) if result.reachable else None
        return "lw-poly", result.reachable, witness

    def _solve_lv(self, spec: ConstraintSpec, expand: bool, stats: SolveStats):
        solution = solve_lv(
            self.arena, spec.L, spec.S, spec.U, spec.V, spec.measure, spec.objective
        )
        stats["configs_explored"] = len(solution.expanded)
        witness = None
        if solution.witness is not None:
            witness = _path_payload(self.arena, solution.witness, expand, spec.S)
        return f"ex{solution.expanded.semantics}", solution.p1_wins, witness

    # ------------------------------------------------------------------
    # witnesses and traces
    # ------------------------------------------------------------------

    def witness_run(self, spec: ConstraintSpec) -> Run:
        """
        Concrete winning run for a one-player reachability query.

        Raises:
            ConfigurationError: If the query is not one-player reachability
            NoWitnessError: If P1 loses
        """
        spec.validate(self.arena)
        if spec.objective is not Objective.REACH or not self.arena.is_one_player:
            raise ConfigurationError("witnesses need a one-player reachability query")

        if spec.kind is Kind.LW:
            result = solve_lw_reach_1p(self.arena, spec.L, spec.W)
            run = result.witness.expand() if result.reachable else None
        elif spec.kind is Kind.LV:
            run = solve_lv(
                self.arena, spec.L, spec.S, spec.U, spec.V, spec.measure, spec.objective
            ).witness
        elif spec.kind is Kind.LU:
            run = shortest_witness(build_lu(self.arena, spec.L, spec.U))
        else:
            run = shortest_witness(build_l_capped(self.arena, spec.L, objective=Objective.REACH))

        if run is None:
            raise NoWitnessError(f"P1 cannot reach a target under {spec.kind.value}")
        return run

    def witness(self, spec: ConstraintSpec, expand: bool = False) -> WitnessPayload:
        """Compact witness (segments + length), plus the trace when ``expand``."""
        if spec.kind is Kind.LW and self.arena.is_one_player and spec.objective is Objective.REACH:
            spec.validate(self.arena)
            result = solve_lw_reach_1p(self.arena, spec.L, spec.W)
            if not result.reachable:
                raise NoWitnessError(f"P1 cannot reach a target under LW[{spec.L},{spec.W}]")
            return _compact_payload(result.witness, expand)
        return _path_payload(self.arena, self.witness_run(spec), expand, spec.S)

    def trace(self, spec: ConstraintSpec, states: Optional[Sequence[str]] = None) -> List[TraceRow]:
        """
        Trace rows of the witness run, or of the given state sequence
        replayed under the spec's semantics.

        Raises:
            InfeasibleRunError: If the given sequence breaks the constraint
            NoWitnessError: If no witness exists
        """
        if states:
            run = replay_run(self.arena, spec, edges_for_states(self.arena, states), start=states[0])
        else:
            run = self.witness_run(spec)
        return trace_rows(run, spec.S)

    # ------------------------------------------------------------------
    # soft bounds
    # ------------------------------------------------------------------

    def minimize(
        self,
        L: int,
        S: int,
        v_max: int,
        measure: Measure,
        objective: Objective,
    ) -> MinimizeReport:
        result = minimize(self.arena, L, S, v_max, measure, objective)
        if result is None:
            return {"bestV": None, "bestU": None, "winner": WINNER_P2, "witnessLength": None}
        witness = result.solution.witness
        return {
            "bestV": result.best_v,
            "bestU": result.best_u,
            "winner": WINNER_P1,
            "witnessLength": len(witness) if witness is not None else None,
        }

    def exists_bound(self, L: int, S: int, V: int, measure: Measure, objective: Objective) -> dict:
        U = bound_existence(self.arena, L, S, V, measure, objective)
        return {"U": U, "winner": winner_label(U is not None)}

