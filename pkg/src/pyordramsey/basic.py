"""Foundational extractors: ES paths, greedy Ramsey, label-monotone paths, clique chains."""

import logging
from collections.abc import Iterable
from math import comb

from ._bitset import below, between, iter_bits, mask_of
from .enums import ChainMode, Color, Direction
from .exceptions import InputError, ParadoxError
from .models import PairLabeling, TwoColoring
from .witness import Certificate

logger = logging.getLogger(__name__)


def _vertices(coloring: TwoColoring | PairLabeling, within: Iterable[int] | None) -> list[int]:
    if within is None:
        return list(range(1, coloring.n_vertices + 1))
    return sorted(within)


def _trace(pred: list[int | None], v: int) -> list[int]:
    path = [v]
    while (u := pred[path[-1]]) is not None:
        path.append(u)
    path.reverse()
    return path


# --- Erdős–Szekeres ---


def monotone_path_lengths(
    coloring: TwoColoring, color: Color = Color.BLUE, within: Iterable[int] | None = None
) -> tuple[list[int], list[int | None]]:
    """lambda(v) = vertices on the longest monotone ``color`` path ending at v, with predecessors.

    Vertices outside ``within`` get 0.
    """
    vertices = _vertices(coloring, within)
    allowed = mask_of(vertices)
    lam = [0] * (coloring.n_vertices + 1)
    pred: list[int | None] = [None] * (coloring.n_vertices + 1)
    for v in vertices:
        best, arg = 1, None
        for u in iter_bits(coloring.neighbors(v, color) & below(v) & allowed):
            if lam[u] + 1 > best:
                best, arg = lam[u] + 1, u
        lam[v], pred[v] = best, arg
    return lam, pred


def extract_clique_vs_monopath(coloring: TwoColoring, s: int, n: int) -> Certificate | None:
    """Red K_s or blue P_n; guaranteed once N >= (s-1)(n-1)+1."""
    if s < 2 or n < 2:
        raise InputError("Need s, n >= 2")
    lam, pred = monotone_path_lengths(coloring)
    for v in range(1, coloring.n_vertices + 1):
        if lam[v] == n:
            return Certificate.mono_path_power(Color.BLUE, _trace(pred, v), 1)

    classes: dict[int, list[int]] = {}
    for v in range(1, coloring.n_vertices + 1):
        classes.setdefault(lam[v], []).append(v)
    for value in sorted(classes):
        members = classes[value]
        if len(members) >= s:
            clique = members[:s]
            if not coloring.is_clique(clique, Color.RED):
                raise ParadoxError(f"lambda-class {value} is not a red clique: {clique}")
            logger.debug("red K_%d from lambda-class %d", s, value)
            return Certificate.mono_clique(Color.RED, clique)
    return None


# --- Greedy off-diagonal Ramsey ---


def _ramsey_threshold(s: int, n: int) -> int:
    return comb(s + n - 2, s - 1)


def _pivot(
    coloring: TwoColoring, candidates: list[int], s: int, n: int
) -> tuple[Color, list[int]] | None:
    if not candidates:
        return None
    if s == 1:
        return Color.RED, [candidates[0]]
    if n == 1:
        return Color.BLUE, [candidates[0]]
    v, rest = candidates[0], candidates[1:]
    red_row = coloring.neighbors(v, Color.RED)
    red = [u for u in rest if (red_row >> u) & 1]
    blue = [u for u in rest if not (red_row >> u) & 1]
    branches = [(red, s - 1, n, Color.RED), (blue, s, n - 1, Color.BLUE)]
    # branches meeting their threshold first; the others only as best effort
    branches.sort(key=lambda b: len(b[0]) < _ramsey_threshold(b[1], b[2]))
    for sub, s2, n2, pivot_color in branches:
        found = _pivot(coloring, sub, s2, n2)
        if found is None:
            continue
        color, clique = found
        if color is pivot_color:
            clique = [v, *clique]
        return color, clique
    return None


def ramsey_extract(
    coloring: TwoColoring, s: int, n: int, within: Iterable[int] | None = None
) -> Certificate | None:
    """Red K_s or blue K_n by pivoting on the least vertex; guaranteed at binom(s+n-2, s-1)."""
    if s < 1 or n < 1:
        raise InputError("Need s, n >= 1")
    found = _pivot(coloring, _vertices(coloring, within), s, n)
    if found is None:
        return None
    return Certificate.mono_clique(*found)


# --- Chvátal–Komlós ---


def chvatal_komlos_extract(
    labeling: PairLabeling, p: int, q: int, within: Iterable[int] | None = None
) -> Certificate | None:
    """Non-increasing-label path with p edges or strictly increasing one with q edges."""
    if p < 1 or q < 1:
        raise InputError("Need p, q >= 1")
    vertices = _vertices(labeling, within)
    lab = labeling.labels
    dec: dict[tuple[int, int], int] = {}
    inc: dict[tuple[int, int], int] = {}
    dec_pred: dict[tuple[int, int], int | None] = {}
    inc_pred: dict[tuple[int, int], int | None] = {}
    for b, j in enumerate(vertices):
        for i in vertices[:b]:
            c = lab[i][j]
            best_dec, arg_dec, best_inc, arg_inc = 1, None, 1, None
            for h in vertices:
                if h >= i:
                    break
                if lab[h][i] >= c:
                    if dec[h, i] + 1 > best_dec:
                        best_dec, arg_dec = dec[h, i] + 1, h
                elif inc[h, i] + 1 > best_inc:
                    best_inc, arg_inc = inc[h, i] + 1, h
            dec[i, j], dec_pred[i, j] = best_dec, arg_dec
            inc[i, j], inc_pred[i, j] = best_inc, arg_inc
            if best_dec >= p:
                return Certificate.label_monotone_path(
                    _trace_edges(dec_pred, i, j), Direction.NON_INCREASING
                )
            if best_inc >= q:
                return Certificate.label_monotone_path(
                    _trace_edges(inc_pred, i, j), Direction.INCREASING
                )
    return None


def _trace_edges(pred: dict[tuple[int, int], int | None], i: int, j: int) -> list[int]:
    path = [j, i]
    edge = (i, j)
    while (h := pred[edge]) is not None:
        path.append(h)
        edge = (h, edge[0])
    path.reverse()
    return path


# --- t-clique chains ---


def chain_values(
    coloring: TwoColoring, t: int, color: Color, within: Iterable[int] | None = None
) -> tuple[list[int], list[tuple[int, ...] | None]]:
    """chi(v) = most ``color`` t-cliques in a chain ending at v, with the last clique used.

    Needs t >= 2; vertices without a clique ending there get 0.
    """
    if t < 2:
        raise InputError("Chain values need t >= 2")
    vertices = _vertices(coloring, within)
    allowed = mask_of(vertices)
    value = [0] * (coloring.n_vertices + 1)
    link: list[tuple[int, ...] | None] = [None] * (coloring.n_vertices + 1)
    for v in vertices:
        row = coloring.neighbors(v, color)
        for x in iter_bits(row & below(v) & allowed):
            if value[x] + 1 <= value[v]:
                continue
            inner = row & coloring.neighbors(x, color) & between(x, v) & allowed
            bridge = coloring.first_clique(color, t - 2, inner)
            if bridge is not None:
                value[v], link[v] = value[x] + 1, (x, *bridge, v)
    return value, link


def _trace_chain(link: list[tuple[int, ...] | None], v: int, m: int) -> list[tuple[int, ...]]:
    cliques: list[tuple[int, ...]] = []
    while len(cliques) < m:
        clique = link[v]
        if clique is None:
            raise ParadoxError(f"Chain broke at {v} after {len(cliques)} cliques")
        cliques.append(clique)
        v = clique[0]
    cliques.reverse()
    return cliques


def clique_chain_extract(
    coloring: TwoColoring,
    t: int,
    m: int,
    mode: ChainMode = ChainMode.MONO,
    n: int | None = None,
    within: Iterable[int] | None = None,
) -> Certificate | None:
    """Monochromatic chain of m t-cliques; RED_OR_BLUE_CLIQUE mode gives a red chain or blue K_n."""
    if t < 1 or m < 1:
        raise InputError("Need t, m >= 1")
    if mode is ChainMode.RED_OR_BLUE_CLIQUE and (n is None or n < 1):
        raise InputError("RED_OR_BLUE_CLIQUE mode needs n >= 1")
    vertices = _vertices(coloring, within)
    if not vertices:
        return None
    if t == 1:
        # consecutive singletons share their only vertex
        return Certificate.clique_chain(Color.RED, [(vertices[0],)] * m)

    colors = [Color.RED] if mode is ChainMode.RED_OR_BLUE_CLIQUE else [Color.RED, Color.BLUE]
    best: tuple[int, Color, list[tuple[int, ...] | None]] | None = None
    tables: dict[Color, list[int]] = {}
    for color in colors:
        value, link = chain_values(coloring, t, color, vertices)
        tables[color] = value
        hit = next((v for v in vertices if value[v] >= m), None)
        if hit is not None and (best is None or hit < best[0]):
            best = (hit, color, link)
    if best is not None:
        hit, color, link = best
        return Certificate.clique_chain(color, _trace_chain(link, hit, m))
    if mode is ChainMode.MONO:
        return None

    classes: dict[int, list[int]] = {}
    for v in vertices:
        classes.setdefault(tables[Color.RED][v], []).append(v)
    key = max(classes, key=lambda c: (len(classes[c]), -c))
    found = ramsey_extract(coloring, t, n or 1, within=classes[key])
    logger.debug("chain class %d of size %d -> %s", key, len(classes[key]), found)
    if found is None:
        return None
    if found.color is Color.RED:
        raise ParadoxError(f"Red K_{t} {found.vertices} inside equal chain-value class {key}")
    return found
