"""
Weak-upper-bound (LW) energy reachability.

One-player arenas are solved in polynomial time: universal cycles of length
at most |Q| are summarized per state by cycle labels on a depth-|Q| DAG,
each state's best universal cycle becomes a set-edge that jumps straight to
its stabilized level, and a final max-level pass over the augmented arena
decides reachability and yields a compact witness. Two-player arenas are
solved exactly on the expanded LW arena.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple, Union

from ..exceptions import BoundsError, ConfigurationError, LabelBoundError
from ..models.arena import Arena
from ..models.constraint import ConstraintSpec
from ..models.run import Run
from ..models.types import Kind, Objective
from ..utils.checked_math import checked_add
from .expansion import build_lw
from .game_engine import WinningRegion, solve_expanded
from .replay import replay_run

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CycleLabel:
    """
    (M, m) summary of a universal-cycle prefix started at level L: M is the
    highest level seen, m the gap from M down to the current level.
    """
    M: int
    m: int

    @property
    def level(self) -> int:
        return self.M - self.m

    def preceq(self, other: "CycleLabel") -> bool:
        """(M,m) precedes (M',m') iff M-m <= M'-m' and m' <= m."""
        return self.level <= other.level and other.m <= self.m

    def as_tuple(self) -> Tuple[int, int]:
        return (self.M, self.m)


def label_step(label: CycleLabel, w: int, L: int, W: int) -> Optional[CycleLabel]:
    """
    Extend a prefix label by one edge of weight ``w``.

    Returns:
        (min(W, M-m+w), 0) when w > m, (M, m-w) when m+L-M <= w <= m,
        None when the level would drop below L
    """
    if w > label.m:
        return CycleLabel(min(W, checked_add(label.level, w)), 0)
    if label.m + L - label.M <= w:
        return CycleLabel(label.M, label.m - w)
    return None


def prune_labels(labels: Iterable[CycleLabel]) -> List[CycleLabel]:
    """Keep the preceq-maximal labels; among equal labels the first one."""
    kept: List[CycleLabel] = []
    for label in labels:
        if any(label.preceq(other) for other in kept):
            continue
        kept = [other for other in kept if not other.preceq(label)]
        kept.append(label)
    return kept


@dataclass
class LabelEntry:
    """A label with a back-pointer to the label it was extended from"""
    label: CycleLabel
    parent: Optional[Tuple[str, int, int]] = None  # (state, depth, index)
    edge: Optional[int] = None


class LabelDag:
    """
    Labels of the unwinding DAG rooted at one state, keyed by [state, depth].
    """

    def __init__(self, root: str, depth: int):
        self.root = root
        self.depth = depth
        self.nodes: Dict[Tuple[str, int], List[LabelEntry]] = {}

    def __getitem__(self, key: Tuple[str, int]) -> List[CycleLabel]:
        return [entry.label for entry in self.nodes.get(key, [])]

    def __contains__(self, key: Tuple[str, int]) -> bool:
        return key in self.nodes

    def entries(self, key: Tuple[str, int]) -> List[LabelEntry]:
        return self.nodes.get(key, [])

    def path(self, state: str, depth: int, index: int) -> List[int]:
        """Edge indices of the prefix that produced a label."""
        edges: List[int] = []
        entry = self.nodes[(state, depth)][index]
        while entry.parent is not None:
            edges.append(entry.edge)
            entry = self.nodes[(entry.parent[0], entry.parent[1])][entry.parent[2]]
        edges.reverse()
        return edges

    def label_count(self) -> int:
        return sum(len(entries) for entries in self.nodes.values())

    def max_labels_at(self, depth: int) -> int:
        """Largest label set over the nodes at one depth."""
        return max(
            (len(entries) for (_, d), entries in self.nodes.items() if d == depth),
            default=0,
        )


def label_dag(
    arena: Arena,
    L: int,
    W: int,
    q0: str,
    prune: bool = True,
    depth: Optional[int] = None,
) -> LabelDag:
    """
    Label the depth-|Q| unwinding of a one-player arena from q0.

    [q0, 0] holds (L, 0); a label on [q, d] extended by an edge (q, w, q')
    via label_step lands on [q', d+1]. A label (M, m) on [q, d] means some
    run of length d from (q0, L) ends at (q, M-m) with every level in
    [L, M] and M reached.

    Args:
        arena: One-player arena
        L: Lower bound
        W: Weak upper bound
        q0: Root state
        prune: Keep only preceq-maximal labels per node (default); otherwise
            keep every distinct label
        depth: Unwinding depth (default |Q|)

    Returns:
        LabelDag

    Raises:
        BoundsError: If L > W
        LabelBoundError: If a pruned node at depth d holds more than d*|Q|
            labels
    """
    if L > W:
        raise BoundsError(f"L={L} > W={W}")
    depth = len(arena.states) if depth is None else depth
    dag = LabelDag(q0, depth)
    dag.nodes[(q0, 0)] = [LabelEntry(CycleLabel(L, 0))]

    for d in range(depth):
        pending: Dict[str, List[LabelEntry]] = {}
        for state in arena.states:
            entries = dag.nodes.get((state, d))
            if not entries:
                continue
            for idx in arena.out_edges(state):
                edge = arena.edges[idx]
                for i, entry in enumerate(entries):
                    label = label_step(entry.label, edge.weight, L, W)
                    if label is not None:
                        pending.setdefault(edge.dst, []).append(
                            LabelEntry(label, (state, d, i), idx)
                        )
        for state in arena.states:
            if state not in pending:
                continue
            candidates = pending[state]
            if prune:
                keep = prune_labels(entry.label for entry in candidates)
            else:
                keep = list(dict.fromkeys(entry.label for entry in candidates))
            first = {}
            for entry in candidates:
                first.setdefault(entry.label, entry)
            dag.nodes[(state, d + 1)] = [first[label] for label in keep]
        bound = (d + 1) * len(arena.states)
        if prune and dag.max_labels_at(d + 1) > bound:
            raise LabelBoundError(
                f"depth {d + 1} from {q0} holds {dag.max_labels_at(d + 1)} labels, above {bound}"
            )
    return dag


@dataclass
class UniversalCycleTable:
    """
    Per state, the least m over positive universal cycles of length <= |Q|
    (absent when none), with the edges of one cycle achieving it.

    Iterating that cycle W-L times from any level >= L ends at W - m.
    """
    L: int
    W: int
    m: Dict[str, int] = field(default_factory=dict)
    cycles: Dict[str, Tuple[int, ...]] = field(default_factory=dict)
    labels_stored: int = 0

    def level(self, state: str) -> Optional[int]:
        """Stabilized level W - m_q, or None."""
        if state not in self.m:
            return None
        return self.W - self.m[state]

    def __contains__(self, state: str) -> bool:
        return state in self.m

    def __len__(self) -> int:
        return len(self.m)


def universal_cycle_table(arena: Arena, L: int, W: int) -> UniversalCycleTable:
    """
    Compute m_q for every state of a one-player arena.

    m_q is the least m over labels (M, m) found at [q, d], 0 < d <= |Q|, in
    the DAG rooted at q, such that M > L + m and L + m < W.
    """
    table = UniversalCycleTable(L, W)
    n = len(arena.states)
    for q in arena.states:
        dag = label_dag(arena, L, W, q)
        table.labels_stored += dag.label_count()
        best: Optional[Tuple[int, int, int]] = None  # (m, depth, index)
        for d in range(1, n + 1):
            for i, label in enumerate(dag[(q, d)]):
                if label.M > L + label.m and L + label.m < W:
                    if best is None or label.m < best[0]:
                        best = (label.m, d, i)
        if best is not None:
            table.m[q] = best[0]
            table.cycles[q] = tuple(dag.path(q, best[1], best[2]))
    logger.debug(f"Universal cycles at {sorted(table.m)} ({table.labels_stored} labels)")
    return table


@dataclass(frozen=True)
class AugmentedArena:
    """
    Arena plus one set-edge self-loop per state with a universal cycle; the
    set-edge moves (q, l) to (q, W - m_q) for any l >= L.
    """
    arena: Arena
    set_levels: Dict[str, int]
    table: UniversalCycleTable

    @property
    def size(self) -> int:
        return len(self.arena.states)


def augment_with_set_edges(arena: Arena, table: UniversalCycleTable, W: int) -> AugmentedArena:
    """Attach set-edges for every state the table covers."""
    set_levels = {q: W - table.m[q] for q in arena.states if q in table.m}
    return AugmentedArena(arena, set_levels, table)


@dataclass(frozen=True)
class AcyclicPath:
    """
    Ordinary edges taken one after the other.

    Only cycles that do not raise the level are cut out, so a segment can
    still revisit a state along a climbing cycle.
    """
    edges: Tuple[int, ...]


@dataclass(frozen=True)
class SetJump:
    """Universal cycle at ``state`` iterated until the level is ``level``"""
    state: str
    level: int
    cycle: Tuple[int, ...]


Segment = Union[AcyclicPath, SetJump]


@dataclass
class Witness:
    """
    Compact LW run: ordinary path segments interleaved with set-jumps, each
    jump standing for its cycle repeated W-L times.
    """
    arena: Arena
    L: int
    W: int
    segments: List[Segment]

    @property
    def repetitions(self) -> int:
        return self.W - self.L

    def edge_sequence(self) -> List[int]:
        edges: List[int] = []
        for segment in self.segments:
            if isinstance(segment, SetJump):
                edges.extend(segment.cycle * self.repetitions)
            else:
                edges.extend(segment.edges)
        return edges

    def length(self) -> int:
        """Length of the expanded run, computed without expanding it."""
        total = 0
        for segment in self.segments:
            if isinstance(segment, SetJump):
                total += len(segment.cycle) * self.repetitions
            else:
                total += len(segment.edges)
        return total

    def expand(self) -> Run:
        """
        Concrete run from (init, L).

        Raises:
            InfeasibleRunError: If the witness is not LW-feasible
        """
        spec = ConstraintSpec(Kind.LW, self.L, objective=Objective.REACH, W=self.W)
        return replay_run(self.arena, spec, self.edge_sequence())

    def to_payload(self) -> List[Dict]:
        payload = []
        for segment in self.segments:
            if isinstance(segment, SetJump):
                payload.append({
                    "type": "cycle",
                    "state": segment.state,
                    "level": segment.level,
                    "cycle": [self._edge_text(i) for i in segment.cycle],
                    "repeat": self.repetitions,
                })
            else:
                payload.append({
                    "type": "path",
                    "edges": [self._edge_text(i) for i in segment.edges],
                })
        return payload

    def _edge_text(self, idx: int) -> str:
        edge = self.arena.edges[idx]
        return f"{edge.src} {edge.weight:+d} {edge.dst}"


@dataclass
class LWReachResult:
    """
    Outcome of the one-player LW solver; ``witness`` is None when no target
    is reachable.
    """
    witness: Optional[Witness]
    max_levels: Dict[str, int]
    augmented: AugmentedArena
    depth: int

    @property
    def reachable(self) -> bool:
        return self.witness is not None

    @property
    def labels_stored(self) -> int:
        return self.augmented.table.labels_stored


def _excise_nonpositive_cycles(arena: Arena, edges: List[int], level: int, L: int, W: int) -> List[int]:
    # removing a cycle whose effect is <= 0 never lowers later levels
    while True:
        states = [arena.edges[edges[0]].src] if edges else []
        levels = [level]
        for idx in edges:
            edge = arena.edges[idx]
            levels.append(min(W, checked_add(levels[-1], edge.weight)))
            states.append(edge.dst)
        cut = None
        for j in range(1, len(states)):
            for i in range(j):
                if states[i] == states[j] and levels[j] <= levels[i]:
                    cut = (i, j)
                    break
            if cut:
                break
        if cut is None:
            return edges
        edges = edges[:cut[0]] + edges[cut[1]:]


def solve_lw_reach_1p(arena: Arena, L: int, W: int) -> LWReachResult:
    """
    Decide one-player LW-energy reachability in polynomial time.

    The max-level pass runs to depth (|Q'|+1)^2 over the augmented arena,
    keeping one level per state and depth.

    Args:
        arena: One-player arena with targets
        L: Lower bound (initial level)
        W: Weak upper bound

    Returns:
        LWReachResult with the compact witness (or None) and the maximal
        level reached at each state

    Raises:
        ConfigurationError: If the arena has P2 states or no targets
        BoundsError: If L > W
    """
    if not arena.is_one_player:
        raise ConfigurationError("the polynomial LW solver needs a one-player arena")
    if not arena.targets:
        raise ConfigurationError("reachability objective needs at least one target")
    if L > W:
        raise BoundsError(f"L={L} > W={W}")

    table = universal_cycle_table(arena, L, W)
    augmented = augment_with_set_edges(arena, table, W)
    depth = (augmented.size + 1) ** 2

    layer: Dict[str, int] = {arena.initial: L}
    max_levels: Dict[str, int] = {arena.initial: L}
    back: Dict[Tuple[int, str], Tuple[str, Optional[int]]] = {}
    hit: Optional[Tuple[int, str]] = (0, arena.initial) if arena.initial in arena.targets else None

    for d in range(1, depth + 1):
        nxt: Dict[str, int] = {}
        for state in arena.states:
            if state not in layer:
                continue
            level = layer[state]
            for idx in arena.out_edges(state):
                edge = arena.edges[idx]
                raw = checked_add(level, edge.weight)
                if raw < L:
                    continue
                new = min(W, raw)
                if edge.dst not in nxt or new > nxt[edge.dst]:
                    nxt[edge.dst] = new
                    back[(d, edge.dst)] = (state, idx)
            if state in augmented.set_levels:
                new = augmented.set_levels[state]
                if state not in nxt or new > nxt[state]:
                    nxt[state] = new
                    back[(d, state)] = (state, None)
        for state, level in nxt.items():
            if level > max_levels.get(state, L - 1):
                max_levels[state] = level
        if hit is None:
            reached = [q for q in arena.states if q in nxt and q in arena.targets]
            if reached:
                hit = (d, reached[0])
        if nxt == layer:
            break
        layer = nxt

    if hit is None:
        logger.info(f"LW[{L},{W}] one-player: no target reachable")
        return LWReachResult(None, max_levels, augmented, depth)

    steps: List[Tuple[str, Optional[int]]] = []
    d, state = hit
    while d > 0:
        prev, idx = back[(d, state)]
        steps.append((state, idx))
        state = prev
        d -= 1
    steps.reverse()

    segments: List[Segment] = []
    current: List[int] = []
    level = L
    for state, idx in steps:
        if idx is None:
            if current:
                segments.append(AcyclicPath(tuple(_excise_nonpositive_cycles(arena, current, level, L, W))))
                current = []
            segments.append(SetJump(state, augmented.set_levels[state], table.cycles[state]))
            level = augmented.set_levels[state]
        else:
            current.append(idx)
    if current:
        segments.append(AcyclicPath(tuple(_excise_nonpositive_cycles(arena, current, level, L, W))))

    witness = Witness(arena, L, W, segments)
    logger.info(
        f"LW[{L},{W}] one-player: target {hit[1]} reached, witness length {witness.length()}"
    )
    return LWReachResult(witness, max_levels, augmented, depth)


def solve_lw_2p(arena: Arena, L: int, W: int, objective: Objective) -> WinningRegion:
    """
    Solve a two-player LW game exactly on the expanded LW arena: attractor
    to target configurations (REACH) or safety from ERR (INFINITE_RUN).
    """
    expanded = build_lw(arena, L, W)
    return solve_expanded(expanded, objective)
