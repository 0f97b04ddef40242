"""Window DP over monochromatic t-cliques and the path-power extractors built on it."""

import logging
from collections import deque
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, replace
from itertools import combinations

from ._bitset import below, between, first_bits, iter_bits, mask_of
from .basic import ramsey_extract
from .bounds import bound
from .enums import BoundFormula, Color, GoodPairVariant
from .exceptions import InputError, ParadoxError
from .models import TwoColoring
from .witness import Certificate

logger = logging.getLogger(__name__)

Window = tuple[int, ...]


def _vertices(coloring: TwoColoring, within: Iterable[int] | None) -> list[int]:
    if within is None:
        return list(range(1, coloring.n_vertices + 1))
    return sorted(within)


@dataclass(frozen=True, slots=True)
class WindowChi:
    """chi over the ``color`` t-cliques: most vertices of a ``color`` P^t ending in the window."""

    t: int
    color: Color
    table: Mapping[Window, int]
    predecessor: Mapping[Window, int | None]
    complete: bool = True

    @property
    def max_value(self) -> int:
        return max(self.table.values(), default=0)

    def first_at_least(self, n: int) -> Window | None:
        return next((w for w, v in self.table.items() if v >= n), None)

    def trace(self, window: Window) -> list[int]:
        """Vertices of a longest path power ending in ``window``."""
        path = deque(window)
        current = window
        while (x0 := self.predecessor[current]) is not None:
            path.appendleft(x0)
            current = (x0, *current[:-1])
        return list(path)


def window_chi(
    coloring: TwoColoring,
    t: int,
    color: Color,
    within: Iterable[int] | None = None,
    stop_at: int | None = None,
) -> WindowChi:
    """Fill chi in increasing order of the last then the first window vertex.

    With ``stop_at`` the fill stops at the first window reaching that value.
    """
    if t < 1:
        raise InputError("t must be >= 1")
    vertices = _vertices(coloring, within)
    allowed = mask_of(vertices)
    table: dict[Window, int] = {}
    pred: dict[Window, int | None] = {}
    for v in vertices:
        row = coloring.neighbors(v, color)
        for head in coloring.iter_cliques(color, t - 1, row & below(v) & allowed):
            window = (*head, v)
            common = allowed & below(window[0])
            for u in window:
                common &= coloring.neighbors(u, color)
            best, arg = t, None
            for x0 in iter_bits(common):
                value = table[(x0, *window[:-1])] + 1
                if value > best:
                    best, arg = value, x0
            table[window], pred[window] = best, arg
            if stop_at is not None and best >= stop_at:
                return WindowChi(t, color, table, pred, complete=False)
    return WindowChi(t, color, table, pred)


@dataclass(frozen=True, slots=True)
class GoodPair:
    """Two same-color t-cliques X, Y with last(X) = first(Y) and chi(X) >= chi(Y).

    For t = 1 the windows are single vertices u < v.
    """

    x: Window
    y: Window
    color: Color
    chi_x: int
    chi_y: int

    @property
    def frame(self) -> tuple[Window, Window]:
        return self.x[:-1], self.y[1:]

    @property
    def middle(self) -> int:
        return self.x[-1]


def _good_pairs_of(chi: WindowChi) -> list[GoodPair]:
    table = chi.table
    pairs: list[GoodPair] = []
    if chi.t == 1:
        items = list(table.items())
        for a, (x, cx) in enumerate(items):
            for y, cy in items[a + 1 :]:
                if cx >= cy:
                    pairs.append(GoodPair(x, y, chi.color, cx, cy))
        return pairs
    by_first: dict[int, list[Window]] = {}
    for window in table:
        by_first.setdefault(window[0], []).append(window)
    for x, cx in table.items():
        for y in by_first.get(x[-1], ()):
            if cx >= table[y]:
                pairs.append(GoodPair(x, y, chi.color, cx, table[y]))
    return pairs


def enumerate_good_pairs(
    coloring: TwoColoring,
    t: int,
    variant: GoodPairVariant = GoodPairVariant.MONO,
    tables: Mapping[Color, WindowChi] | None = None,
) -> list[GoodPair]:
    """All good pairs, red first, each color in window order."""
    colors = [Color.RED] if variant is GoodPairVariant.RED_ONLY else [Color.RED, Color.BLUE]
    pairs: list[GoodPair] = []
    for color in colors:
        chi = (tables or {}).get(color)
        if chi is None or not chi.complete:
            chi = window_chi(coloring, t, color)
        pairs.extend(_good_pairs_of(chi))
    return pairs


def _y_sets(pairs: Iterable[GoodPair]) -> list[tuple[tuple, list[int]]]:
    """Y-sets keyed by (color, frame, c), largest first then least key."""
    buckets: dict[tuple, list[int]] = {}
    for pair in pairs:
        key = (pair.color is Color.BLUE, pair.frame, pair.chi_x)
        buckets.setdefault(key, []).append(pair.middle)
    return sorted(buckets.items(), key=lambda kv: (-len(kv[1]), kv[0]))


def _extension(
    chi: WindowChi, frame: tuple[Window, Window], clique: Window
) -> tuple[list[int], int, int]:
    """Extend the path realising chi(x.., y_1) by y_2..y_t and z; returns (path, before, after)."""
    xs, zs = frame
    start = (*xs, clique[0])
    path = chi.trace(start) + list(clique[1:]) + list(zs)
    last = (clique[-1], *zs)
    return path, chi.table[start], chi.table.get(last, 0)


def _class_clique(
    coloring: TwoColoring, values: Mapping[int, int], n: int, color: Color
) -> Certificate | None:
    classes: dict[int, list[int]] = {}
    for v, value in values.items():
        classes.setdefault(value, []).append(v)
    for value in sorted(classes, key=lambda c: (-len(classes[c]), c)):
        members = classes[value]
        if len(members) < n:
            break
        if not coloring.is_clique(members[:n], color):
            raise ParadoxError(f"Equal-chi class {value} is not a {color.name} clique")
        return Certificate.mono_clique(color, members[:n])
    return None


def extract_pathpower_vs_clique(coloring: TwoColoring, t: int, n: int) -> Certificate | None:
    """Red P_n^t or blue K_n."""
    if not 1 <= t <= n:
        raise InputError("Need n >= t >= 1")
    red = window_chi(coloring, t, Color.RED, stop_at=n)
    hit = red.first_at_least(n)
    if hit is not None:
        return Certificate.mono_path_power(Color.RED, red.trace(hit)[-n:], t)
    if t == 1:
        return _class_clique(coloring, {w[0]: c for w, c in red.table.items()}, n, Color.BLUE)

    threshold = bound(BoundFormula.RAMSEY_GREEDY, s=t, n=n)
    for (_, frame, c), ys in _y_sets(_good_pairs_of(red)):
        if len(ys) < threshold:
            break
        logger.debug("frame %s value %d: |Y|=%d (threshold %d)", frame, c, len(ys), threshold)
        found = ramsey_extract(coloring, t, n, within=ys)
        if found is None:
            raise ParadoxError(
                f"Y-set of value {c} with {len(ys)} >= {threshold} vertices "
                f"holds neither red K_{t} nor blue K_{n}"
            )
        if found.color is Color.RED:
            path, before, after = _extension(red, frame, found.vertices)
            raise ParadoxError(
                f"Red K_{t} {found.vertices} in Y-set of value {c}: extension {path} "
                f"reaches {before + 2 * t - 1} while chi(y_t, z) = {after}"
            )
        return found
    clique = coloring.first_clique(Color.BLUE, n)
    return None if clique is None else Certificate.mono_clique(Color.BLUE, clique)


def extract_diagonal_pathpower(coloring: TwoColoring, t: int, n: int) -> Certificate | None:
    """Monochromatic P_n^t in either color."""
    if not 1 <= t <= n:
        raise InputError("Need n >= t >= 1")
    tables: dict[Color, WindowChi] = {}
    for color in (Color.RED, Color.BLUE):
        chi = window_chi(coloring, t, color, stop_at=n)
        hit = chi.first_at_least(n)
        if hit is not None:
            return Certificate.mono_path_power(color, chi.trace(hit)[-n:], t)
        tables[color] = chi

    if t == 1:
        seen: dict[tuple[int, int], int] = {}
        for v in range(1, coloring.n_vertices + 1):
            key = (tables[Color.RED].table[(v,)], tables[Color.BLUE].table[(v,)])
            if key in seen:
                raise ParadoxError(f"Vertices {seen[key]} and {v} share path lengths {key}")
            seen[key] = v
        return None

    pairs = _good_pairs_of(tables[Color.RED]) + _good_pairs_of(tables[Color.BLUE])
    buckets = _y_sets(pairs)
    if not buckets:
        return None
    (is_blue, frame, c), ys = buckets[0]
    major = Color.BLUE if is_blue else Color.RED
    clique = coloring.first_clique(major, t, mask_of(ys))
    if clique is not None:
        path, before, after = _extension(tables[major], frame, clique)
        raise ParadoxError(
            f"{major.name} K_{t} {clique} in Y-set of value {c}: extension {path} "
            f"reaches {before + 2 * t - 1} while chi(y_t, z) = {after}"
        )
    if len(ys) < bound(BoundFormula.CLIQUE_POWERPATH, s=t - 1, t=t, n=n):
        return None
    from .rednet import extract_clique_vs_powerpath

    sub = coloring.induced(ys)
    if major is Color.BLUE:
        sub = sub.swapped()
    found = extract_clique_vs_powerpath(sub, t - 1, t, n)
    if found is None:
        return None
    if found.color is Color.RED:
        raise ParadoxError(f"{major.name} K_{t} inside Y-set via the red-net pipeline")
    return replace(found.relabel(ys), color=major.other)


# --- Blowups ---


def blowup_chi(
    coloring: TwoColoring,
    t: int,
    color: Color = Color.RED,
    within: Iterable[int] | None = None,
    stop_at: int | None = None,
) -> WindowChi:
    """chi(G) = most groups of a ``color`` P_l[t] whose last group is the t-set G."""
    vertices = _vertices(coloring, within)
    allowed = mask_of(vertices)
    table: dict[Window, int] = {}
    pred: dict[Window, Window | None] = {}
    for group in combinations(vertices, t):
        common = allowed & below(group[0])
        for u in group:
            common &= coloring.neighbors(u, color)
        best, arg = 1, None
        for previous in combinations(list(iter_bits(common)), t):
            value = table[previous] + 1
            if value > best:
                best, arg = value, previous
        table[group], pred[group] = best, arg
        if stop_at is not None and best >= stop_at:
            return WindowChi(t, color, table, pred, complete=False)  # type: ignore[arg-type]
    return WindowChi(t, color, table, pred)  # type: ignore[arg-type]


def _trace_groups(chi: WindowChi, group: Window) -> list[Window]:
    groups = [group]
    while (previous := chi.predecessor[groups[-1]]) is not None:
        groups.append(previous)  # type: ignore[arg-type]
    groups.reverse()
    return groups


def is_semi_red(coloring: TwoColoring, group: Window) -> bool:
    """x_1 x_i and x_i x_t red for every i."""
    first, last = group[0], group[-1]
    return all(
        coloring.has(first, u, Color.RED) and coloring.has(u, last, Color.RED)
        for u in group[1:-1]
    ) and (len(group) < 2 or coloring.has(first, last, Color.RED))


def find_semi_red_clique(
    coloring: TwoColoring, k: int, n: int, within: Iterable[int] | None = None
) -> tuple[Color, tuple[int, ...]] | None:
    """Lexicographically first semi-red k-clique, else a blue K_n, inside ``within``.

    Returns (RED, clique) or (BLUE, clique).
    """
    vertices = _vertices(coloring, within)
    allowed = mask_of(vertices)
    if vertices and k == 1:
        return Color.RED, (vertices[0],)
    for x1 in vertices:
        forward = coloring.neighbors(x1, Color.RED) & allowed & ~below(x1 + 1)
        for xk in iter_bits(forward):
            inner = forward & coloring.neighbors(xk, Color.RED) & between(x1, xk)
            if inner.bit_count() >= k - 2:
                return Color.RED, (x1, *first_bits(inner, k - 2), xk)
    clique = coloring.first_clique(Color.BLUE, n, allowed)
    return None if clique is None else (Color.BLUE, clique)


def extract_blowup_vs_clique(coloring: TwoColoring, t: int, n: int) -> Certificate | None:
    """Red P_n[t] or blue K_n."""
    if t < 1 or n < 2:
        raise InputError("Need t >= 1 and n >= 2")
    chi = blowup_chi(coloring, t, stop_at=n)
    hit = chi.first_at_least(n)
    if hit is not None:
        return Certificate.mono_blowup(Color.RED, _trace_groups(chi, hit)[-n:])
    if t == 1:
        return _class_clique(coloring, {w[0]: c for w, c in chi.table.items()}, n, Color.BLUE)

    semi = {g: c for g, c in chi.table.items() if is_semi_red(coloring, g)}
    by_first: dict[int, list[Window]] = {}
    for group in semi:
        by_first.setdefault(group[0], []).append(group)
    pairs = [
        GoodPair(x, y, Color.RED, cx, semi[y])
        for x, cx in semi.items()
        for y in by_first.get(x[-1], ())
        if cx >= semi[y]
    ]
    for (_, frame, c), ys in _y_sets(pairs):
        if len(ys) < min(n, t + 2):
            break
        found = find_semi_red_clique(coloring, t + 2, n, ys)
        if found is None:
            continue
        color, clique = found
        if color is Color.RED:
            raise ParadoxError(
                f"Semi-red {t + 2}-clique {clique} in Y-set of frame {frame} with value {c}"
            )
        return Certificate.mono_clique(Color.BLUE, clique)
    clique = coloring.first_clique(Color.BLUE, n)
    return None if clique is None else Certificate.mono_clique(Color.BLUE, clique)
