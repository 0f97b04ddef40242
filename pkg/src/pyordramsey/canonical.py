"""Non-increasing sets, H_{s,t} copies and lexicographic sets of pair labelings.

The 3-uniform clique versus tight path extractor reduces to a labeling first: chi(x, y) is
the number of vertices of the longest blue tight path ending in x, y.
"""

import logging
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from .basic import chvatal_komlos_extract
from .bounds import f_bound
from .enums import Color, Direction, Notion, Strategy
from .exceptions import EnumerationBudgetExceeded, InputError, ParadoxError
from .models import PairLabeling, TripleColoring
from .witness import Certificate, hst_violation, non_increasing_triple, non_increasing_violation

logger = logging.getLogger(__name__)


def _vertices(labeling: PairLabeling, within: Iterable[int] | None) -> list[int]:
    if within is None:
        return list(range(1, labeling.n_vertices + 1))
    return sorted(within)


@dataclass(slots=True)
class _Budget:
    left: int

    def spend(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise EnumerationBudgetExceeded("Copy enumeration budget exhausted")


# --- 3-uniform reduction ---


def tightpath_reduction(coloring: TripleColoring) -> PairLabeling:
    """chi(x, y) = vertices on the longest blue tight path ending in x, y; values in 2..N."""
    n = coloring.n_vertices
    if n < 2:
        raise InputError("Need N >= 2")
    rows = [[0] * (n + 1) for _ in range(n + 1)]
    for y in range(2, n + 1):
        for x in range(1, y):
            best = 2
            for w in range(1, x):
                if coloring.has(w, x, y, Color.BLUE) and rows[w][x] + 1 > best:
                    best = rows[w][x] + 1
            rows[x][y] = best
    return PairLabeling(n, max(n, 2), tuple(tuple(row) for row in rows))


def trace_tight_path(coloring: TripleColoring, labeling: PairLabeling, x: int, y: int) -> list[int]:
    """A longest blue tight path ending in x, y, choosing the least predecessor each step."""
    lab = labeling.labels
    path = [y, x]
    while lab[path[-1]][path[-2]] > 2:
        b, c = path[-1], path[-2]
        w = next(
            w
            for w in range(1, b)
            if lab[w][b] == lab[b][c] - 1 and coloring.has(w, b, c, Color.BLUE)
        )
        path.append(w)
    path.reverse()
    return path


def extract_3uniform_clique_vs_tightpath(
    coloring: TripleColoring, s: int, n: int
) -> Certificate | None:
    """Red K_s^(3) or blue tight path on n vertices."""
    if s < 3 or n < 3:
        raise InputError("Need s, n >= 3")
    if coloring.n_vertices < 2:
        return None
    labeling = tightpath_reduction(coloring)
    lab = labeling.labels
    for y in range(2, coloring.n_vertices + 1):
        for x in range(1, y):
            if lab[x][y] >= n:
                path = trace_tight_path(coloring, labeling, x, y)
                return Certificate.mono_tight_path3(Color.BLUE, path[-n:])

    found = next(iter_non_increasing_sets(labeling, s), None)
    if found is None:
        return None
    for a, x in enumerate(found):
        for b in range(a + 1, len(found)):
            for z in found[b + 1 :]:
                if coloring.has(x, found[b], z, Color.BLUE):
                    triple = (x, found[b], z)
                    raise ParadoxError(f"Non-increasing set {found} holds blue triple {triple}")
    return Certificate.mono_clique3(Color.RED, found)


# --- Non-increasing sets ---


def iter_non_increasing_sets(
    labeling: PairLabeling,
    s: int,
    notion: Notion = Notion.FULL,
    within: Iterable[int] | None = None,
    node_budget: int | None = None,
) -> Iterator[tuple[int, ...]]:
    """Non-increasing s-sets in lexicographic order.

    Candidates are filtered as each vertex joins, so an extension test costs O(|partial|).
    """
    lab = labeling.labels
    vertices = _vertices(labeling, within)
    nodes = 0

    def extend(chosen: list[int], candidates: list[int]) -> Iterator[tuple[int, ...]]:
        nonlocal nodes
        if len(chosen) == s:
            yield tuple(chosen)
            return
        need = s - len(chosen)
        for idx, y in enumerate(candidates):
            if len(candidates) - idx < need:
                break
            nodes += 1
            if node_budget is not None and nodes > node_budget:
                raise EnumerationBudgetExceeded(f"Non-increasing search passed {node_budget} nodes")
            rest = [
                z
                for z in candidates[idx + 1 :]
                if all(
                    non_increasing_triple(lab[x][y], lab[y][z], lab[x][z], notion) for x in chosen
                )
            ]
            yield from extend([*chosen, y], rest)

    yield from extend([], vertices)


def _descent_table(labeling: PairLabeling, vertices: Sequence[int]) -> dict[tuple[int, int], int]:
    """Edges on the longest label-non-increasing path starting with edge (i, j)."""
    lab = labeling.labels
    table: dict[tuple[int, int], int] = {}
    for b in range(len(vertices) - 1, -1, -1):
        j = vertices[b]
        for i in vertices[:b]:
            best = 1
            for k in vertices[b + 1 :]:
                if lab[j][k] <= lab[i][j] and table[j, k] + 1 > best:
                    best = table[j, k] + 1
            table[i, j] = best
    return table


def _paths_from(
    labeling: PairLabeling,
    vertices: Sequence[int],
    table: dict[tuple[int, int], int],
    start: int,
    cap: int,
    edges: int,
) -> Iterator[tuple[int, ...]]:
    """Label-non-increasing paths with ``edges`` edges from ``start``, first label <= cap."""
    if edges == 0:
        yield ()
        return
    lab = labeling.labels
    for j in vertices:
        if j <= start or lab[start][j] > cap or table[start, j] < edges:
            continue
        for rest in _paths_from(labeling, vertices, table, j, lab[start][j], edges - 1):
            yield (j, *rest)


def iter_hst_copies(
    labeling: PairLabeling, s: int, t: int, within: Iterable[int] | None = None
) -> Iterator[tuple[int, ...]]:
    """Copies x_1..x_s = y_1..y_t of H_{s,t} in lexicographic order of the non-increasing part."""
    vertices = _vertices(labeling, within)
    table = _descent_table(labeling, vertices) if t >= 2 else {}
    for xs in iter_non_increasing_sets(labeling, s, within=vertices):
        entry = labeling.labels[xs[-2]][xs[-1]]
        for path in _paths_from(labeling, vertices, table, xs[-1], entry, t - 1):
            yield (*xs, *path)


def find_hst_copy(
    labeling: PairLabeling, s: int, t: int, within: Iterable[int] | None = None
) -> tuple[int, ...] | None:
    return next(iter_hst_copies(labeling, s, t, within), None)


def _hst_recursive(
    labeling: PairLabeling, s: int, t: int, vertices: list[int], budget: _Budget
) -> tuple[int, ...] | None:
    lab = labeling.labels
    if s == 2:
        found = chvatal_komlos_extract(labeling, t, labeling.n_colors + 1, within=vertices)
        if found is None:
            return None
        if found.aux["direction"] == Direction.INCREASING.value:
            raise ParadoxError(f"Strictly increasing path with {labeling.n_colors + 1} edges")
        return found.vertices

    threshold = f_bound(labeling.n_colors, s - 1, t + 1)
    buckets: dict[tuple, list[int]] = {}
    order: list[tuple[tuple, list[int]]] | None = None
    for copy in iter_hst_copies(labeling, s - 1, t + 1, vertices):
        budget.spend()
        x = copy[s - 2]
        alphas = tuple(lab[copy[i]][x] for i in range(s - 2))
        key = (alphas, lab[x][copy[s - 1]], copy[: s - 2], copy[s - 1 :])
        members = buckets.setdefault(key, [])
        members.append(x)
        if len(members) >= threshold:
            order = [(key, members)]
            break
    if order is None:
        order = sorted(buckets.items(), key=lambda kv: (-len(kv[1]), kv[0]))

    for key, members in order:
        if len(members) < s + t - 1:
            break
        inner = _hst_recursive(labeling, s - 1, t + 1, members, budget)
        if inner is None:
            continue
        _, beta, frame_x, frame_y = key
        v1, v2 = inner[s - 2], inner[s - 1]
        if lab[v1][v2] <= beta:
            result = (*frame_x, *inner[s - 2 :])
        else:
            result = (*inner[: s - 1], *frame_y)
        bad = hst_violation(labeling, result, s, t)
        if bad is not None:
            raise ParadoxError(f"Assembled H_{s},{t} {result} fails {bad[0]} at {bad[1]}")
        logger.debug("H_%d,%d from bucket %s of size %d", s, t, key, len(members))
        return result
    return None


def extract_hst(
    labeling: PairLabeling,
    s: int,
    t: int,
    *,
    budget: int = 1_000_000,
    fallback: bool = True,
    within: Iterable[int] | None = None,
) -> Certificate | None:
    """Copy of H_{s,t} by the double-counting recursion on H_{s-1,t+1}.

    With ``fallback`` the direct search takes over when the copy budget runs out or the
    recursion comes back empty.
    """
    if s < 2 or t < 1:
        raise InputError("Need s >= 2 and t >= 1")
    vertices = _vertices(labeling, within)
    try:
        found = _hst_recursive(labeling, s, t, vertices, _Budget(budget))
    except EnumerationBudgetExceeded:
        if not fallback:
            raise
        logger.info("copy budget %d exhausted; switching to direct search", budget)
        found = None
    if found is None and fallback:
        found = find_hst_copy(labeling, s, t, vertices)
    return None if found is None else Certificate.hst_copy(found, s, t)


def extract_non_increasing(
    labeling: PairLabeling,
    s: int,
    strategy: Strategy = Strategy.DIRECT_DFS,
    notion: Notion = Notion.FULL,
) -> Certificate | None:
    if s < 2:
        raise InputError("Need s >= 2")
    if strategy is Strategy.PROOF_RECURSION:
        if notion is not Notion.FULL:
            raise InputError("The recursion only produces full non-increasing sets")
        found = extract_hst(labeling, s, 1)
        return None if found is None else Certificate.non_increasing_set(found.vertices)
    first = next(iter_non_increasing_sets(labeling, s, notion), None)
    return None if first is None else Certificate.non_increasing_set(first, notion)


# --- Lexicographic sets ---


@dataclass(frozen=True, slots=True)
class WeakLexStructure:
    """A weakly lexicographic set with the item used at each nesting level.

    ``items[0]`` describes the whole set: FORWARD peels the first vertex (constant
    colors out of it), BACKWARD peels the last (constant colors into it).
    """

    vertices: tuple[int, ...]
    items: tuple[Direction, ...]

    def inner(self) -> "WeakLexStructure":
        if self.items[0] is Direction.FORWARD:
            return WeakLexStructure(self.vertices[1:], self.items[1:])
        return WeakLexStructure(self.vertices[:-1], self.items[1:])


def weakly_lex_decompose(
    labeling: PairLabeling, ni_set: Sequence[int], s: int
) -> WeakLexStructure:
    """Weakly lexicographic s-subset of a non-increasing set of size >= 2^(s-1)."""
    if s < 2:
        raise InputError("Need s >= 2")
    xs = sorted(ni_set)
    if len(xs) < 2 ** (s - 1):
        raise InputError(f"Need at least {2 ** (s - 1)} vertices, got {len(xs)}")
    bad = non_increasing_violation(labeling, xs)
    if bad is not None:
        raise InputError(f"Input is not non-increasing: {bad[0]} at {bad[1]}")
    lab = labeling.labels

    def split(part: list[int], size: int) -> WeakLexStructure:
        if size == 2:
            return WeakLexStructure((part[0], part[1]), ())
        first, last = part[0], part[-1]
        c = lab[first][last]
        middle = part[1:-1]
        to_first = [x for x in middle if lab[first][x] == c]
        to_last = [x for x in middle if lab[x][last] == c]
        if len(to_first) >= len(to_last):
            sub = split([*to_first, last], size - 1)
            return WeakLexStructure((first, *sub.vertices), (Direction.FORWARD, *sub.items))
        sub = split([first, *to_last], size - 1)
        return WeakLexStructure((*sub.vertices, last), (Direction.BACKWARD, *sub.items))

    return split(xs, s)


def is_weakly_lexicographic(labeling: PairLabeling, vertices: Sequence[int]) -> bool:
    """Recursive check of the definition, trying both items at every level."""
    lab = labeling.labels
    vs = list(vertices)
    if len(vs) <= 2:
        return True
    first, last = vs[0], vs[-1]
    if len({lab[first][x] for x in vs[1:]}) == 1 and is_weakly_lexicographic(labeling, vs[1:]):
        return True
    return len({lab[x][last] for x in vs[:-1]}) == 1 and is_weakly_lexicographic(
        labeling, vs[:-1]
    )


def _lex_certificate(
    labeling: PairLabeling, vs: Sequence[int], direction: Direction
) -> Certificate:
    colors = [labeling.labels[a][b] for a, b in zip(vs, vs[1:], strict=False)]
    monotone = all(c >= d for c, d in zip(colors, colors[1:], strict=False))
    return Certificate.lexicographic_set(vs, direction, colors, nonincreasing_colors=monotone)


def lexicographic_from_weak(
    labeling: PairLabeling, structure: WeakLexStructure, s: int, t: int
) -> Certificate:
    """Forward lexicographic s-set or backward lexicographic t-set inside a weak-lex set."""
    if s < 2 or t < 2:
        raise InputError("Need s, t >= 2")
    if len(structure.vertices) < s + t - 2:
        raise InputError(f"Need a weakly lexicographic set of size {s + t - 2}")

    def combine(st: WeakLexStructure, s: int, t: int) -> tuple[Direction, tuple[int, ...]]:
        vs = st.vertices
        if s == 2:
            return Direction.FORWARD, vs[:2]
        if t == 2:
            return Direction.BACKWARD, vs[-2:]
        if st.items[0] is Direction.FORWARD:
            direction, sub = combine(st.inner(), s - 1, t)
            if direction is Direction.FORWARD:
                sub = (vs[0], *sub)
            return direction, sub
        direction, sub = combine(st.inner(), s, t - 1)
        if direction is Direction.BACKWARD:
            sub = (*sub, vs[-1])
        return direction, sub

    direction, vs = combine(structure, s, t)
    return _lex_certificate(labeling, vs, direction)


def _is_lexicographic(labeling: PairLabeling, vs: Sequence[int], direction: Direction) -> bool:
    lab = labeling.labels
    if direction is Direction.FORWARD:
        return all(len({lab[x][y] for y in vs[a + 1 :]}) == 1 for a, x in enumerate(vs[:-1]))
    return all(len({lab[x][y] for x in vs[:b]}) == 1 for b, y in enumerate(vs) if b)


def extract_lexicographic_nonincreasing(
    labeling: PairLabeling, s: int, *, node_budget: int = 200_000
) -> Certificate | None:
    """Lexicographic s-set with non-increasing colors.

    Runs non-increasing set of size 2^(2s-3), weak-lex decomposition to 2s-2, then the
    forward/backward combination; falls back to a direct search of non-increasing s-sets.
    """
    if s < 2:
        raise InputError("Need s >= 2")
    if labeling.n_vertices < s:
        return None
    if s == 2:
        return _lex_certificate(labeling, (1, 2), Direction.FORWARD)
    size = 2 ** (2 * s - 3)
    try:
        ni = next(iter_non_increasing_sets(labeling, size, node_budget=node_budget), None)
    except EnumerationBudgetExceeded:
        logger.info("no non-increasing %d-set within %d nodes", size, node_budget)
        ni = None
    if ni is not None:
        structure = weakly_lex_decompose(labeling, ni, 2 * s - 2)
        found = lexicographic_from_weak(labeling, structure, s, s)
        if not found.aux["nonincreasing_colors"]:
            raise ParadoxError(f"Lexicographic set {found.vertices} has increasing colors")
        return found
    for vs in iter_non_increasing_sets(labeling, s):
        for direction in (Direction.FORWARD, Direction.BACKWARD):
            if _is_lexicographic(labeling, vs, direction):
                return _lex_certificate(labeling, vs, direction)
    return None
