"""Red-net pipeline for red K_{s+1} versus blue P_n^t.

Blocks of blue cliques feed the chi_j block functions, those give a chi-forest, the forest
gives an s-red-net, and resolving the net yields either s+1 pairwise K_{t,t}-free sets (which
hold a red K_{s+1}) or s disjoint blue path powers covering the middle thirds.
"""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from math import ceil, comb

import networkx as nx
from networkx.algorithms import bipartite

from ._bitset import mask_of
from .basic import ramsey_extract
from .bounds import red_net_order
from .enums import Color, Outcome
from .exceptions import ExhaustedWithoutClique, GreedyColorOverflow, InputError, ParadoxError
from .generators import rng_for
from .models import FunctionFamily, TwoColoring
from .pathpower import WindowChi, window_chi
from .witness import (
    Certificate,
    OrderedForest,
    RedNetCertificate,
    Verdict,
    has_blue_ktt,
    is_blue_path_power,
    red_net_violation,
    reject,
    verify_certificate,
)

logger = logging.getLogger(__name__)

Block = tuple[int, ...]


def thirds(block: Sequence[int]) -> tuple[Block, Block, Block]:
    """(up, mid, down): first, middle and last r/3 elements."""
    r = len(block)
    if r % 3:
        raise InputError(f"Set size {r} is not divisible by 3")
    k = r // 3
    xs = tuple(block)
    return xs[:k], xs[k : 2 * k], xs[2 * k :]


@dataclass(frozen=True, slots=True)
class BlockFamily:
    """Blue cliques V_1 < ... < V_M of size s*r, each cut into parts of size r.

    Part j of block i is X_i^(j); part s-1 is the leftmost and part 0 the rightmost.
    """

    blocks: tuple[Block, ...]
    s: int
    r: int

    def __post_init__(self) -> None:
        previous = 0
        for block in self.blocks:
            if len(block) != self.s * self.r:
                raise InputError(f"Block {block} is not of size s*r = {self.s * self.r}")
            if list(block) != sorted(block) or block[0] <= previous:
                raise InputError(f"Blocks must be increasing and ordered, got {block}")
            previous = block[-1]

    def __len__(self) -> int:
        return len(self.blocks)

    def part(self, i: int, j: int) -> Block:
        """X_i^(j) for block i (1-based) and 0 <= j < s."""
        start = (self.s - 1 - j) * self.r
        return self.blocks[i - 1][start : start + self.r]

    @property
    def union(self) -> list[int]:
        return [v for block in self.blocks for v in block]


def build_blue_clique_blocks(
    coloring: TwoColoring, s: int, r: int, m: int, window: int | None = None
) -> BlockFamily | Certificate | None:
    """Blue K_{sr} in each of m consecutive windows, or the first red K_{s+1} met."""
    if s < 1 or r < 1 or m < 1:
        raise InputError("Need s, r, M >= 1")
    if window is None:
        window = comb(s * r + s - 1, s)
    if m * window > coloring.n_vertices:
        raise InputError(f"Need N >= M * window = {m * window}, got {coloring.n_vertices}")
    blocks: list[Block] = []
    for k in range(m):
        vertices = range(k * window + 1, (k + 1) * window + 1)
        found = ramsey_extract(coloring, s + 1, s * r, within=vertices)
        if found is None:
            logger.debug("window %d holds neither red K_%d nor blue K_%d", k + 1, s + 1, s * r)
            return None
        if found.color is Color.RED:
            return found
        blocks.append(found.vertices)
    return BlockFamily(tuple(blocks), s, r)


def _block_windows(
    coloring: TwoColoring, family: BlockFamily, t: int, stop_at: int | None = None
) -> WindowChi:
    return window_chi(coloring, t, Color.BLUE, within=family.union, stop_at=stop_at)


def compute_block_chi(
    coloring: TwoColoring, family: BlockFamily, t: int, n_values: int | None = None
) -> FunctionFamily:
    """chi_j(i): longest blue P^t whose last t vertices lie in parts j+1..s-1 of block i.

    Paths are taken inside the union of the blocks.
    """
    chi = _block_windows(coloring, family, t)
    s = family.s
    functions: list[list[int]] = []
    for j in range(s - 1):
        row: list[int] = []
        for i in range(1, len(family) + 1):
            allowed = mask_of(v for d in range(j + 1, s) for v in family.part(i, d))
            row.append(
                max(
                    (c for w, c in chi.table.items() if mask_of(w) & ~allowed == 0),
                    default=t,
                )
            )
        functions.append(row)
    return FunctionFamily.from_lists(functions, n_values)


# --- Chi-forests ---


def _record_setters(universe: Sequence[int], chi: Sequence[int]) -> list[int]:
    setters: list[int] = []
    for x in universe:
        if not setters or chi[x] > chi[setters[-1]]:
            setters.append(x)
    return setters


def _forest_on(universe: list[int], functions: Sequence[Sequence[int]]) -> dict[int, int | None]:
    """Parent map of a (chi_0..chi_{q-1})-forest on ``universe`` (sorted)."""
    if not universe:
        return {}
    chi0 = functions[0]
    xs = _record_setters(universe, chi0)
    setters = set(xs)

    def owner(y: int) -> int:
        # last record-setter before y
        return max(x for x in xs if x < y)

    if len(functions) == 1:
        parent: dict[int, int | None] = {}
        for y in universe:
            if y in setters:
                continue
            x = owner(y)
            parent.setdefault(x, None)
            parent[y] = x
        return parent

    rest = [v for v in universe if v not in setters]
    sub = OrderedForest(_forest_on(rest, functions[1:]))
    groups: dict[int, list[int]] = {}
    for y in sub.roots:
        groups.setdefault(owner(y), []).append(y)
    intervals = {
        x: (x, max(sub.subtree_max(y) for y in ys)) for x, ys in sorted(groups.items())
    }

    # greedy proper coloring of the interval graph by left endpoint
    color_of: dict[int, int] = {}
    ends: dict[int, int] = {}
    for x, (left, right) in intervals.items():
        used = {color_of[z] for z in color_of if ends[z] >= left}
        free = [c for c in (0, 1) if c not in used]
        if not free:
            raise GreedyColorOverflow(f"Interval {left}..{right} meets both color classes")
        color_of[x], ends[x] = free[0], right
    weight = [0, 0]
    for x, ys in groups.items():
        weight[color_of[x]] += sum(
            1 for y in ys for u in (y, *sub.descendants(y)) if not sub.children(u)
        )
    keep = 0 if weight[0] >= weight[1] else 1

    kept: dict[int, int | None] = {}
    for x, ys in sorted(groups.items()):
        if color_of[x] != keep:
            continue
        kept[x] = None
        for y in ys:
            kept[y] = x
            for u in sub.descendants(y):
                kept[u] = sub.parent[u]
    return kept


def build_chi_forest(chi: FunctionFamily, n: int) -> OrderedForest:
    """Balanced well-ordered forest of depth q dominated level by level, |L| >= M/2^(q-1) - n."""
    q = chi.depth
    if q < 1:
        raise InputError("Need at least one function")
    if any(not 1 <= x <= n for row in chi.values for x in row[1:]):
        raise InputError(f"Function values must lie in 1..{n}")
    forest = OrderedForest(_forest_on(list(range(1, chi.size + 1)), chi.values))
    verdict = verify_certificate(chi, Certificate.chi_forest(forest, q))
    if not verdict:
        raise ParadoxError(f"Constructed forest rejected: {verdict}")
    floor = chi.size / 2 ** (q - 1) - n
    if len(forest.leaves) < floor:
        raise ParadoxError(f"Forest has {len(forest.leaves)} leaves, below M/2^(q-1) - n = {floor}")
    return forest


# --- Red-nets ---


def assemble_red_net(
    coloring: TwoColoring, family: BlockFamily, forest: OrderedForest, t: int
) -> RedNetCertificate:
    """X_v = X_v^(depth v), with the ancestor/descendant K_{t,t}-freeness re-checked."""
    sets = {v: family.part(v, forest.depth_of(v)) for v in forest.nodes}
    net = RedNetCertificate(forest, sets, family.s, family.r, t)
    bad = red_net_violation(coloring, net)
    if bad is not None:
        raise ParadoxError(f"Red-net condition {bad[0]} fails at {bad[1]}")
    return net


@dataclass(frozen=True, slots=True)
class NetResolution:
    """Either s+1 pairwise K_{t,t}-free sets or s disjoint blue path powers.

    ``sigma[i]`` and ``pi[i]`` are the head and tail nodes holding the ends of ``paths[i]``.
    """

    outcome: Outcome
    members: tuple[tuple[int, Block], ...] = ()
    paths: tuple[Block, ...] = ()
    sigma: tuple[int, ...] = ()
    pi: tuple[int, ...] = ()
    first_reached: bool = True

    def to_certificate(self, t: int, min_total: int = 0) -> Certificate:
        if self.outcome is Outcome.KTT_FREE_FAMILY:
            min_size = min(len(a) for _, a in self.members)
            return Certificate.ktt_free_family(self.members, t, min_size)
        return Certificate.path_bundle(self.paths, t, min_total)

    def check(self, coloring: TwoColoring, net: RedNetCertificate) -> Verdict:
        """Invariants of the outcome against ``net``."""
        r, t, s = net.r, net.t, net.s
        if self.outcome is Outcome.KTT_FREE_FAMILY:
            nodes = [v for v, _ in self.members]
            if len(set(nodes)) != s + 1:
                return reject("members", *nodes)
            for v, a in self.members:
                if len(a) < r // 3 or not set(a) <= set(net.sets[v]):
                    return reject("member_set", v)
            cert = self.to_certificate(t)
            return verify_certificate(coloring, cert)
        if len(self.paths) != s:
            return reject("paths", len(self.paths))
        if sorted(self.sigma) != sorted(net.forest.head()):
            return reject("sigma", *self.sigma)
        if sorted(self.pi) != sorted(net.forest.tail()):
            return reject("pi", *self.pi)
        for path, head, tail in zip(self.paths, self.sigma, self.pi, strict=True):
            if not set(path[:t]) <= set(thirds(net.sets[head])[1]):
                return reject("head_third", head, *path[:t])
            if not set(path[-t:]) <= set(thirds(net.sets[tail])[1]):
                return reject("tail_third", tail, *path[-t:])
            if not is_blue_path_power(coloring, path, t):
                return reject("blue_path_power", *path)
        return verify_certificate(coloring, self.to_certificate(t, len(net.forest) * r // 3))


def _connect(
    coloring: TwoColoring, net: RedNetCertificate, u: int, v: int
) -> tuple[Block, Block] | None:
    return has_blue_ktt(coloring, thirds(net.sets[u])[2], thirds(net.sets[v])[0], net.t)


def _resolve(coloring: TwoColoring, net: RedNetCertificate) -> NetResolution:
    forest, sets = net.forest, net.sets
    roots = forest.roots
    if net.s == 1:
        path = list(thirds(sets[roots[0]])[1])
        for u, v in zip(roots, roots[1:], strict=False):
            link = _connect(coloring, net, u, v)
            if link is None:
                members = ((u, thirds(sets[u])[2]), (v, thirds(sets[v])[0]))
                return NetResolution(Outcome.KTT_FREE_FAMILY, members=members)
            path += [*link[0], *link[1], *thirds(sets[v])[1]]
        return NetResolution(
            Outcome.PATH_BUNDLE, paths=(tuple(path),), sigma=(roots[0],), pi=(roots[-1],)
        )

    bundles: list[NetResolution] = []
    for x in roots:
        inner = _resolve(coloring, net.child_net(x))
        if inner.outcome is Outcome.KTT_FREE_FAMILY:
            members = ((x, sets[x]), *inner.members)
            return NetResolution(Outcome.KTT_FREE_FAMILY, members=members)
        bundles.append(
            NetResolution(
                Outcome.PATH_BUNDLE,
                paths=(*inner.paths, thirds(sets[x])[1]),
                sigma=(*inner.sigma, x),
                pi=(*inner.pi, x),
            )
        )

    paths, sigma, pi = list(bundles[0].paths), bundles[0].sigma, list(bundles[0].pi)
    for nxt in bundles[1:]:
        graph = nx.Graph()
        graph.add_nodes_from(pi, bipartite=0)
        graph.add_nodes_from(nxt.sigma, bipartite=1)
        links: dict[tuple[int, int], tuple[Block, Block]] = {}
        for u in pi:
            for v in nxt.sigma:
                link = _connect(coloring, net, u, v)
                if link is not None:
                    links[u, v] = link
                    graph.add_edge(u, v)
        matching = bipartite.hopcroft_karp_matching(graph, top_nodes=pi)
        if sum(1 for u in pi if u in matching) < net.s:
            cover = bipartite.to_vertex_cover(graph, matching, top_nodes=pi)
            violator = [u for u in pi if u not in cover]
            reached = {v for u in violator for v in graph[u]}
            members = [(u, thirds(sets[u])[2]) for u in violator]
            members += [(v, thirds(sets[v])[0]) for v in nxt.sigma if v not in reached]
            logger.debug("Hall violator %s with neighbourhood %s", violator, sorted(reached))
            return NetResolution(
                Outcome.KTT_FREE_FAMILY, members=tuple(sorted(members)[: net.s + 1])
            )
        for i, u in enumerate(pi):
            v = matching[u]
            j = nxt.sigma.index(v)
            left, right = links[u, v]
            paths[i] = (*paths[i], *left, *right, *nxt.paths[j])
            pi[i] = nxt.pi[j]
    return NetResolution(Outcome.PATH_BUNDLE, paths=tuple(paths), sigma=sigma, pi=tuple(pi))


def resolve_red_net(coloring: TwoColoring, net: RedNetCertificate) -> NetResolution:
    """K_{t,t}-free family of s+1 sets or a bundle of s blue path powers; checked on return."""
    if net.r % 3 or net.r < 3 * net.t:
        raise InputError(f"Need r divisible by 3 and r >= 3t, got r={net.r}")
    if not len(net.forest):
        raise InputError("Cannot resolve an empty net")
    found = _resolve(coloring, net)
    verdict = found.check(coloring, net)
    if not verdict:
        raise ParadoxError(f"Net resolution fails its invariants: {verdict}")
    return found


# --- Red clique from K_{t,t}-free sets ---


@dataclass(slots=True)
class _TransversalSearch:
    """Backtracking over one candidate order per set, smallest candidate set first."""

    coloring: TwoColoring
    orders: list[list[int]]
    node_budget: int
    nodes: int = 0
    exhausted: bool = True

    def run(self, chosen: dict[int, int], cand: list[int]) -> dict[int, int] | None:
        if len(chosen) == len(self.orders):
            return chosen
        a = min(
            (b for b in range(len(self.orders)) if b not in chosen),
            key=lambda b: (cand[b].bit_count(), b),
        )
        for v in self.orders[a]:
            if not (cand[a] >> v) & 1:
                continue
            self.nodes += 1
            if self.nodes > self.node_budget:
                self.exhausted = False
                return None
            red = self.coloring.red[v]
            found = self.run({**chosen, a: v}, [c & red for c in cand])
            if found is not None or not self.exhausted:
                return found
        return None


def red_clique_from_ktt_free(
    coloring: TwoColoring,
    sets: Sequence[Iterable[int]],
    t: int,
    *,
    seed: int = 0,
    restarts: int = 8,
    node_budget: int = 200_000,
) -> Certificate:
    """Red transversal v_1 in A_1, ..., v_k in A_k of pairwise K_{t,t}-free sets.

    The first attempt orders candidates by descending cross-red degree; restarts shuffle
    each set with the seeded generator before the stable degree sort.
    """
    family = [sorted(a) for a in sets]
    for a in range(len(family)):
        for b in range(a + 1, len(family)):
            if set(family[a]) & set(family[b]):
                raise InputError(f"Sets {a + 1} and {b + 1} overlap")
            if has_blue_ktt(coloring, family[a], family[b], t) is not None:
                raise InputError(f"Sets {a + 1} and {b + 1} span a blue K_{t},{t}")
    masks = [mask_of(a) for a in family]
    degree: dict[int, int] = {}
    for a, members in enumerate(family):
        others = [m for b, m in enumerate(masks) if b != a]
        for v in members:
            degree[v] = sum((coloring.red[v] & m).bit_count() for m in others)
    rng = rng_for(seed)

    for attempt in range(max(restarts, 1)):
        orders = []
        for members in family:
            shuffled = [members[k] for k in rng.permutation(len(members))] if attempt else members
            orders.append(sorted(shuffled, key=lambda v: -degree[v]))
        search = _TransversalSearch(coloring, orders, node_budget)
        found = search.run({}, list(masks))
        if found is not None:
            return Certificate.mono_clique(Color.RED, sorted(found.values()))
        if search.exhausted:
            break
        logger.info("transversal search attempt %d hit %d nodes", attempt + 1, node_budget)
    raise ExhaustedWithoutClique(f"No red transversal across {len(family)} sets")


# --- Pipeline ---


def _direct(coloring: TwoColoring, s: int, t: int, n: int) -> Certificate | None:
    clique = coloring.first_clique(Color.RED, s + 1)
    if clique is not None:
        return Certificate.mono_clique(Color.RED, clique)
    chi = window_chi(coloring, t, Color.BLUE, stop_at=n)
    hit = chi.first_at_least(n)
    if hit is None:
        return None
    return Certificate.mono_path_power(Color.BLUE, chi.trace(hit)[-n:], t)


def extract_clique_vs_powerpath(
    coloring: TwoColoring, s: int, t: int, n: int, *, r: int | None = None, seed: int = 0
) -> Certificate | None:
    """Red K_{s+1} or blue P_n^t through blocks, chi-forest, red-net and its resolution.

    Below the pipeline's vertex count a direct search answers instead. ``r`` overrides the
    block order; the clique and path guarantees then no longer hold. ``seed`` drives the
    restarts of the final transversal search.
    """
    if s < 1 or not 1 <= t <= n:
        raise InputError("Need s >= 1 and n >= t >= 1")
    order = red_net_order(s, t) if r is None else r
    if order % 3 or order < 3 * t:
        raise InputError(f"Order r={order} must be divisible by 3 and at least 3t")
    m = 2 ** (s - 1) * n
    window = comb(s * order + s - 1, s)
    if coloring.n_vertices < m * window:
        logger.info("N=%d below M*window=%d; searching directly", coloring.n_vertices, m * window)
        return _direct(coloring, s, t, n)

    family = build_blue_clique_blocks(coloring, s, order, m, window)
    if not isinstance(family, BlockFamily):
        return family
    chi = _block_windows(coloring, family, t, stop_at=n)
    hit = chi.first_at_least(n)
    if hit is not None:
        return Certificate.mono_path_power(Color.BLUE, chi.trace(hit)[-n:], t)

    if s == 1:
        forest = OrderedForest.isolated(range(1, m + 1))
    else:
        forest = build_chi_forest(compute_block_chi(coloring, family, t, n), n)
    need = max(1, ceil(3 * s * n / order))
    if len(forest.leaves) < need:
        logger.info("forest has %d leaves, %d needed", len(forest.leaves), need)
        return None

    net = assemble_red_net(coloring, family, forest, t)
    resolution = resolve_red_net(coloring, net)
    logger.debug("net of %d nodes resolved to %s", len(forest), resolution.outcome)
    if resolution.outcome is Outcome.KTT_FREE_FAMILY:
        try:
            sets = [a for _, a in resolution.members]
            return red_clique_from_ktt_free(coloring, sets, t, seed=seed)
        except ExhaustedWithoutClique:
            if r is None:
                raise
            return None
    longest = max(resolution.paths, key=len)
    if len(longest) >= n:
        return Certificate.mono_path_power(Color.BLUE, longest[:n], t)
    if r is None:
        raise ParadoxError(f"Longest bundle path has {len(longest)} < {n} vertices")
    return None
