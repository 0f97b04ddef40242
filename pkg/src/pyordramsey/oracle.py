"""Ground truth at desk scale: pruned exhaustive searches and golden-value files.

Colorings and labelings are enumerated slot by slot, a slot being a pair (or triple)
whose largest vertex is the newest one. A branch dies as soon as the slot just assigned
completes a forbidden copy, so a prefix that survives through vertex ``N`` is an avoider
on ``1..N`` and every avoider on ``1..N`` extends one on ``1..N-1``.
"""

from __future__ import annotations

import asyncio
import logging
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import UTC, datetime
from itertools import combinations, product
from pathlib import Path
from typing import TYPE_CHECKING, Any, Self

from ._bitset import below, iter_bits
from .enums import Color, Notion, PatternKind
from .exceptions import FormatError, InputError, SearchCapExceeded
from .models import PairLabeling, PatternSpec, TripleColoring, TwoColoring
from .witness import (
    Certificate,
    Instance,
    LabelTable,
    hst_violation,
    non_increasing_triple,
)

if TYPE_CHECKING:
    from ._sync import SyncWrapper

logger = logging.getLogger(__name__)

Slot = tuple[int, ...]


@dataclass
class OracleConfig:
    n_max: int = 8
    vertex_cap: int = 40
    jobs: int = 1
    split_depth: int = 3


@dataclass(frozen=True, slots=True)
class Threshold:
    """Least N forcing the target, or ``value=None`` when no N <= n_max does.

    ``extremal`` is an avoider on ``value - 1`` vertices (on ``n_max`` when unknown).
    """

    value: int | None
    n_max: int
    extremal: Instance | None = None

    @property
    def is_known(self) -> bool:
        return self.value is not None


# --- Pattern shapes ---


def pattern_order(pattern: PatternSpec) -> int:
    """Number of vertices of the target."""
    if pattern.kind is PatternKind.BLOWUP:
        return pattern.size * pattern.t
    return pattern.size


def _last_pair_joined(pattern: PatternSpec) -> bool:
    """Whether the two largest vertices of every copy form an edge (hyperedge with the third)."""
    if pattern.is_hypergraph:
        return True
    order = pattern_order(pattern)
    return order - 1 in _later_neighbors(pattern)(order - 2)


def is_edgeless(pattern: PatternSpec) -> bool:
    match pattern.kind:
        case PatternKind.TIGHT_PATH3 | PatternKind.CLIQUE3:
            return pattern.size <= 2
        case _:
            return pattern.size <= 1


def _later_neighbors(pattern: PatternSpec) -> Callable[[int], range]:
    """Positions after ``p`` that position ``p`` must be joined to."""
    order = pattern_order(pattern)
    t = pattern.t
    match pattern.kind:
        case PatternKind.CLIQUE:
            return lambda p: range(p + 1, order)
        case PatternKind.PATH_POWER:
            return lambda p: range(p + 1, min(p + t, order - 1) + 1)
        case PatternKind.BLOWUP:

            def next_group(p: int) -> range:
                group = p // t + 1
                return range(group * t, (group + 1) * t) if group < pattern.size else range(0)

            return next_group
    raise InputError(f"{pattern.kind.value} is not a graph pattern")


def _later_triples(pattern: PatternSpec) -> Callable[[int], list[tuple[int, int]]]:
    """Pairs of later positions that form a hyperedge with position ``p``."""
    order = pattern_order(pattern)
    match pattern.kind:
        case PatternKind.TIGHT_PATH3:
            return lambda p: [(p + 1, p + 2)] if p + 2 < order else []
        case PatternKind.CLIQUE3:
            return lambda p: list(combinations(range(p + 1, order), 2))
    raise InputError(f"{pattern.kind.value} is not a 3-uniform pattern")


def _close_graph(
    adj: Sequence[int], pattern: PatternSpec, u: int, v: int
) -> tuple[int, ...] | None:
    """A copy in ``adj`` whose two largest vertices are ``u < v``."""
    order = pattern_order(pattern)
    needs = _later_neighbors(pattern)
    clique = pattern.kind is PatternKind.CLIQUE
    chosen = [0] * order
    chosen[-2:] = [u, v]
    if order - 1 in needs(order - 2) and not (adj[u] >> v) & 1:
        return None

    def extend(p: int) -> tuple[int, ...] | None:
        if p < 0:
            return tuple(chosen)
        cand = below(chosen[p + 1])
        for q in needs(p):
            cand &= adj[chosen[q]]
        # in a clique every earlier position lands in cand as well
        if clique and cand.bit_count() < p + 1:
            return None
        # positions 0..p need p + 1 distinct vertices, so chosen[p] > p
        for w in iter_bits(cand & ~below(p + 1)):
            chosen[p] = w
            found = extend(p - 1)
            if found is not None:
                return found
        return None

    return extend(order - 3)


def _close_triples(
    table: Sequence[Sequence[int]], pattern: PatternSpec, i: int, j: int, v: int
) -> tuple[int, ...] | None:
    """A copy in ``table`` whose three largest vertices are ``i < j < v``."""
    order = pattern_order(pattern)
    needs = _later_triples(pattern)
    chosen = [0] * order
    chosen[-3:] = [i, j, v]

    def joined(p: int) -> bool:
        w = chosen[p]
        return all((table[w][chosen[a]] >> chosen[b]) & 1 for a, b in needs(p))

    if not joined(order - 3):
        return None

    def extend(p: int) -> tuple[int, ...] | None:
        if p < 0:
            return tuple(chosen)
        for w in iter_bits(below(chosen[p + 1])):
            chosen[p] = w
            if joined(p):
                found = extend(p - 1)
                if found is not None:
                    return found
        return None

    return extend(order - 4)


def _close_non_increasing(
    table: LabelTable, s: int, notion: Notion, u: int, v: int
) -> tuple[int, ...] | None:
    chosen = [0] * s
    chosen[-2:] = [u, v]

    def fits(p: int) -> bool:
        w = chosen[p]
        return all(
            non_increasing_triple(table[w][x], table[x][y], table[w][y], notion)
            for x, y in combinations(chosen[p + 1 :], 2)
        )

    def extend(p: int) -> tuple[int, ...] | None:
        if p < 0:
            return tuple(chosen)
        for w in iter_bits(below(chosen[p + 1])):
            chosen[p] = w
            if fits(p):
                found = extend(p - 1)
                if found is not None:
                    return found
        return None

    return extend(s - 3)


def _close_hst(table: LabelTable, s: int, t: int, u: int, v: int) -> tuple[int, ...] | None:
    for rest in combinations(range(1, u), s + t - 3):
        vertices = (*rest, u, v)
        if hst_violation(table, vertices, s, t) is None:
            return vertices
    return None


def _as_certificate(pattern: PatternSpec, vertices: Sequence[int]) -> Certificate:
    match pattern.kind:
        case PatternKind.CLIQUE:
            return Certificate.mono_clique(pattern.color, vertices)
        case PatternKind.PATH_POWER:
            return Certificate.mono_path_power(pattern.color, vertices, pattern.t)
        case PatternKind.BLOWUP:
            t = pattern.t
            return Certificate.mono_blowup(
                pattern.color, [vertices[k : k + t] for k in range(0, len(vertices), t)]
            )
        case PatternKind.TIGHT_PATH3:
            return Certificate.mono_tight_path3(pattern.color, vertices)
        case PatternKind.CLIQUE3:
            return Certificate.mono_clique3(pattern.color, vertices)
    raise InputError(f"Unsupported pattern {pattern.kind.value}")


# --- Brute force ---


def brute_force_witness(
    instance: Instance, pattern: PatternSpec, *, vertex_cap: int = 40
) -> Certificate | None:
    """Backtracking search for ``pattern`` in ``instance``; None is authoritative."""
    if not isinstance(instance, TwoColoring | TripleColoring):
        raise InputError("Patterns are searched in two-colorings or triple colorings")
    if pattern.is_hypergraph != isinstance(instance, TripleColoring):
        raise InputError(f"Pattern {pattern.kind.value} does not fit {type(instance).__name__}")
    n = instance.n_vertices
    if n > vertex_cap:
        raise SearchCapExceeded(f"N={n} exceeds the brute-force cap {vertex_cap}")
    order = pattern_order(pattern)
    if order > n:
        return None
    if is_edgeless(pattern):
        return _as_certificate(pattern, range(1, order + 1))
    if isinstance(instance, TwoColoring):
        adj = instance.blue if pattern.color is Color.BLUE else instance.red
        for v in range(2, n + 1):
            for u in range(1, v):
                found = _close_graph(adj, pattern, u, v)
                if found is not None:
                    return _as_certificate(pattern, found)
        return None
    table = _triple_table(instance, pattern.color)
    for v in range(3, n + 1):
        for j in range(2, v):
            for i in range(1, j):
                found = _close_triples(table, pattern, i, j, v)
                if found is not None:
                    return _as_certificate(pattern, found)
    return None


def _triple_table(h: TripleColoring, color: Color) -> list[list[int]]:
    if color is Color.BLUE:
        return [list(row) for row in h.blue]
    n = h.n_vertices
    table = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            table[i][j] = (below(n + 1) & ~below(j + 1)) ^ h.blue[i][j]
    return table


# --- Exhaustive threshold search ---


@dataclass(frozen=True, slots=True)
class _Problem:
    """Everything a worker needs to rebuild the search; picklable."""

    arity: int
    n_values: int
    n_max: int
    limit: int
    symmetric: bool = False
    patterns: tuple[PatternSpec, ...] = ()
    s: int = 0
    t: int = 0
    notion: Notion | None = None

    @property
    def labels(self) -> bool:
        return not self.patterns

    @property
    def start(self) -> int:
        return min(self.arity - 1, self.limit)

    def slots(self) -> list[Slot]:
        out: list[Slot] = []
        for v in range(self.arity, self.n_max + 1):
            if self.arity == 2:
                out.extend((u, v) for u in range(1, v))
            else:
                out.extend((i, j, v) for j in range(2, v) for i in range(1, j))
        return out

    def choices(self, k: int) -> range:
        if self.labels:
            return range(1, self.n_values + 1)
        return range(1) if k == 0 and self.symmetric else range(2)


def _completed(slot: Slot) -> int:
    """Vertex finished by ``slot``, or 0 when more slots of that vertex follow."""
    v = slot[-1]
    return v if slot[:-1] == tuple(range(v - len(slot) + 1, v)) else 0


class _Search:
    """Depth-first slot assignment tracking the deepest completed avoider."""

    def __init__(self, problem: _Problem) -> None:
        self.problem = problem
        self.slots = problem.slots()
        self.completes = [_completed(slot) for slot in self.slots]
        n = problem.n_max
        if problem.labels:
            self.table = [[0] * (n + 1) for _ in range(n + 1)]
        elif problem.arity == 2:
            self.adj = ([0] * (n + 1), [0] * (n + 1))
        else:
            self.tri = tuple([[0] * (n + 1) for _ in range(n + 1)] for _ in range(2))
        # colors to check after each value; loose patterns close off their own slots
        live = [c for c, pattern in enumerate(problem.patterns) if not is_edgeless(pattern)]
        loose = [c for c in live if not _last_pair_joined(problem.patterns[c])]
        self.watched = tuple(
            [c for c in live if c == value or c in loose] for value in range(2)
        )
        self.best = problem.start
        self.snapshot: tuple[int, ...] = ()

    def _assign(self, k: int, value: int) -> None:
        slot = self.slots[k]
        if self.problem.labels:
            self.table[slot[0]][slot[1]] = value
        elif self.problem.arity == 2:
            u, v = slot
            self.adj[value][u] |= 1 << v
            self.adj[value][v] |= 1 << u
        else:
            i, j, v = slot
            self.tri[value][i][j] |= 1 << v

    def _clear(self, k: int, value: int) -> None:
        slot = self.slots[k]
        if self.problem.labels:
            self.table[slot[0]][slot[1]] = 0
        elif self.problem.arity == 2:
            u, v = slot
            self.adj[value][u] &= ~(1 << v)
            self.adj[value][v] &= ~(1 << u)
        else:
            i, j, v = slot
            self.tri[value][i][j] &= ~(1 << v)

    def _closes(self, k: int, value: int) -> bool:
        problem, slot = self.problem, self.slots[k]
        if problem.labels:
            u, v = slot
            if problem.notion is not None:
                found = _close_non_increasing(self.table, problem.s, problem.notion, u, v)
            else:
                found = _close_hst(self.table, problem.s, problem.t, u, v)
            return found is not None
        for color in self.watched[value]:
            if problem.arity == 2:
                found = _close_graph(self.adj[color], problem.patterns[color], *slot)
            else:
                found = _close_triples(self.tri[color], problem.patterns[color], *slot)
            if found is not None:
                return True
        return False

    def _place(self, k: int, value: int, values: list[int]) -> bool:
        self._assign(k, value)
        if self._closes(k, value):
            self._clear(k, value)
            return False
        values.append(value)
        if self.completes[k] > self.best:
            self.best = self.completes[k]
            self.snapshot = tuple(values)
        return True

    def _descend(self, k: int, values: list[int]) -> None:
        if k == len(self.slots) or self.best >= self.problem.limit:
            return
        for value in self.problem.choices(k):
            if self._place(k, value, values):
                self._descend(k + 1, values)
                values.pop()
                self._clear(k, value)
            if self.best >= self.problem.limit:
                return

    def run(self, prefix: Sequence[int] = ()) -> tuple[int, tuple[int, ...]]:
        values: list[int] = []
        for k, value in enumerate(prefix):
            if not self._place(k, value, values):
                return self.best, self.snapshot
        self._descend(len(prefix), values)
        return self.best, self.snapshot


def _run_prefix(problem: _Problem, prefix: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    return _Search(problem).run(prefix)


def _prefixes(problem: _Problem, depth: int) -> list[tuple[int, ...]]:
    depth = min(depth, len(problem.slots()))
    return list(product(*(problem.choices(k) for k in range(depth))))


def _merge(results: Iterable[tuple[int, tuple[int, ...]]]) -> tuple[int, tuple[int, ...]]:
    """Deepest avoider; ties go to the smallest prefix index."""
    best, snapshot = -1, ()
    for depth, values in results:
        if depth > best:
            best, snapshot = depth, values
    return best, snapshot


def _rebuild(problem: _Problem, depth: int, snapshot: Sequence[int]) -> Instance | None:
    if depth < 1:
        return None
    assigned = list(zip(problem.slots(), snapshot, strict=False))
    if problem.labels:
        labels = {slot: value for slot, value in assigned}
        return PairLabeling.from_function(depth, problem.n_values, lambda i, j: labels[(i, j)])
    blue = [slot for slot, color in assigned if color == 1]
    if problem.arity == 2:
        return TwoColoring.from_blue_pairs(depth, blue)  # type: ignore[arg-type]
    return TripleColoring.from_blue_triples(depth, blue)  # type: ignore[arg-type]


def _threshold(problem: _Problem, depth: int, snapshot: Sequence[int]) -> Threshold:
    extremal = _rebuild(problem, depth, snapshot)
    if depth < problem.limit:
        return Threshold(depth + 1, problem.n_max, extremal)
    if problem.limit < problem.n_max:
        return Threshold(problem.limit + 1, problem.n_max, extremal)
    return Threshold(None, problem.n_max, extremal)


def _ramsey_problem(g: PatternSpec, h: PatternSpec, n_max: int) -> _Problem:
    if g.color is h.color:
        raise InputError("The two targets must carry different colors")
    if g.is_hypergraph != h.is_hypergraph:
        raise InputError("Targets must both be graphs or both be 3-uniform")
    red, blue = (g, h) if g.color is Color.RED else (h, g)
    limit = n_max
    for pattern in (red, blue):
        if is_edgeless(pattern):
            limit = min(limit, pattern_order(pattern) - 1)
    symmetric = (red.kind, red.size, red.t) == (blue.kind, blue.size, blue.t)
    arity = 3 if g.is_hypergraph else 2
    return _Problem(arity, 2, n_max, limit, symmetric, (red, blue))


def _label_problem(
    n: int, s: int, t: int, n_max: int, notion: Notion | None
) -> _Problem:
    if n < 1 or s < 1 or t < 1:
        raise InputError("Need n, s, t >= 1")
    order = s + t - 1
    limit = min(n_max, order - 1) if order <= 2 else n_max
    return _Problem(2, n, n_max, limit, s=s, t=t, notion=notion)


class Oracle:
    """Async exact searches. Sync access via .sync property."""

    def __init__(
        self,
        *,
        n_max: int = 8,
        vertex_cap: int = 40,
        jobs: int = 1,
        split_depth: int = 3,
    ) -> None:
        self._config = OracleConfig(
            n_max=n_max, vertex_cap=vertex_cap, jobs=jobs, split_depth=split_depth
        )
        self._executor: ProcessPoolExecutor | None = None
        self._sync: SyncWrapper | None = None

    @property
    def config(self) -> OracleConfig:
        return self._config

    @property
    def sync(self) -> SyncWrapper:
        if self._sync is None:
            from ._sync import SyncWrapper

            self._sync = SyncWrapper(self)
        return self._sync

    async def __aenter__(self) -> Self:
        return self

    async def __aexit__(self, *_: object) -> None:
        await self.close()

    async def close(self) -> None:
        if self._executor is not None:
            self._executor.shutdown(wait=True)
            self._executor = None

    # --- Searches ---

    async def _solve(self, problem: _Problem) -> Threshold:
        logger.info(
            "Searching %s slots up to N=%d (limit %d, jobs %d)",
            "label" if problem.labels else f"{problem.arity}-set",
            problem.n_max,
            problem.limit,
            self._config.jobs,
        )
        if self._config.jobs <= 1:
            depth, snapshot = await asyncio.to_thread(_run_prefix, problem, ())
        else:
            if self._executor is None:
                self._executor = ProcessPoolExecutor(max_workers=self._config.jobs)
            loop = asyncio.get_running_loop()
            prefixes = _prefixes(problem, self._config.split_depth)
            logger.debug("Split into %d prefixes", len(prefixes))
            results = await asyncio.gather(
                *(loop.run_in_executor(self._executor, _run_prefix, problem, p) for p in prefixes)
            )
            depth, snapshot = _merge(results)
        result = _threshold(problem, depth, snapshot)
        logger.info("Deepest avoider has %d vertices; threshold %s", depth, result.value)
        return result

    async def brute_force_witness(
        self, instance: Instance, pattern: PatternSpec
    ) -> Certificate | None:
        return await asyncio.to_thread(
            brute_force_witness, instance, pattern, vertex_cap=self._config.vertex_cap
        )

    async def exact_ordered_ramsey(
        self, g: PatternSpec, h: PatternSpec, n_max: int | None = None
    ) -> Threshold:
        """Least N such that every coloring of 1..N has ``g`` or ``h`` in its own color."""
        return await self._solve(_ramsey_problem(g, h, n_max or self._config.n_max))

    async def exact_g(
        self, n: int, s: int, n_max: int | None = None, notion: Notion = Notion.FULL
    ) -> Threshold:
        """Least N such that every n-labeling of 1..N has a non-increasing s-set."""
        return await self._solve(_label_problem(n, s, 1, n_max or self._config.n_max, notion))

    async def exact_f(self, n: int, s: int, t: int, n_max: int | None = None) -> Threshold:
        """Least N such that every n-labeling of 1..N contains H_{s,t}."""
        return await self._solve(_label_problem(n, s, t, n_max or self._config.n_max, None))


def _run_once(n_max: int, method: str, *args: Any, **kwargs: Any) -> Threshold:
    sync = Oracle(n_max=n_max).sync
    try:
        return getattr(sync, method)(*args, **kwargs)
    finally:
        sync.close()


def exact_ordered_ramsey(g: PatternSpec, h: PatternSpec, n_max: int = 8) -> Threshold:
    return _run_once(n_max, "exact_ordered_ramsey", g, h)


def exact_g(n: int, s: int, n_max: int = 8, notion: Notion = Notion.FULL) -> Threshold:
    return _run_once(n_max, "exact_g", n, s, notion=notion)


def exact_f(n: int, s: int, t: int, n_max: int = 8) -> Threshold:
    return _run_once(n_max, "exact_f", n, s, t)


# --- Golden files ---


@dataclass(frozen=True, slots=True)
class GoldenRecord:
    """One line of a golden file: ``name k=v ... -> value, witness-file``."""

    name: str
    params: dict[str, int | str] = field(default_factory=dict)
    value: int | None = None
    witness: str | None = None

    def to_line(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        value = "unknown" if self.value is None else str(self.value)
        head = f"{self.name} {params}" if params else self.name
        return f"{head} -> {value}, {self.witness or '-'}"

    @classmethod
    def from_line(cls, line: str) -> Self:
        left, sep, right = line.partition(" -> ")
        if not sep:
            raise FormatError(f"Golden line without '->': {line!r}")
        tokens = left.split()
        if not tokens:
            raise FormatError(f"Golden line without a name: {line!r}")
        params: dict[str, int | str] = {}
        for token in tokens[1:]:
            key, eq, raw = token.partition("=")
            if not eq:
                raise FormatError(f"Malformed parameter {token!r}")
            params[key] = int(raw) if raw.lstrip("-").isdigit() else raw
        value_text, _, witness = (part.strip() for part in right.partition(","))
        if value_text == "unknown":
            value = None
        elif value_text.isdigit():
            value = int(value_text)
        else:
            raise FormatError(f"Malformed golden value {value_text!r}")
        return cls(tokens[0], params, value, None if witness in ("", "-") else witness)


def write_golden(
    directory: Path | str, name: str, records: Iterable[GoldenRecord], *, provenance: str
) -> Path:
    """Write ``<directory>/<name>.golden`` with a provenance header."""
    path = Path(directory) / f"{name}.golden"
    path.parent.mkdir(parents=True, exist_ok=True)
    stamp = datetime.now(UTC).strftime("%Y-%m-%d")
    lines = [f"# provenance: {provenance}", f"# generated: {stamp}"]
    lines.extend(record.to_line() for record in records)
    path.write_text("\n".join(lines) + "\n")
    return path


def read_golden(path: Path | str) -> list[GoldenRecord]:
    records = []
    for line in Path(path).read_text().splitlines():
        if line.strip() and not line.startswith("#"):
            records.append(GoldenRecord.from_line(line))
    return records
