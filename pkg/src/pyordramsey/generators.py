from collections.abc import Iterable
from fractions import Fraction

import numpy as np

from .enums import Color, Shape
from .exceptions import InputError
from .models import PairLabeling, TripleColoring, TwoColoring, iter_triples


def build_two_coloring(n_vertices: int, blue_pairs: Iterable[tuple[int, int]]) -> TwoColoring:
    """Coloring with ``blue_pairs`` blue and every other pair red. Duplicates are rejected."""
    if n_vertices < 1:
        raise InputError("N must be >= 1")
    seen: set[tuple[int, int]] = set()
    for i, j in blue_pairs:
        if not 1 <= i < j <= n_vertices:
            raise InputError(f"Pair ({i}, {j}) out of range for N={n_vertices}")
        if (i, j) in seen:
            raise InputError(f"Duplicate pair ({i}, {j})")
        seen.add((i, j))
    return TwoColoring.from_blue_pairs(n_vertices, sorted(seen))


def rng_for(seed: int) -> np.random.Generator:
    """Named generator behind every randomized operation."""
    return np.random.Generator(np.random.PCG64(seed))


def spawn_seeds(seed: int, count: int) -> list[int]:
    """Independent child seeds for split work."""
    children = np.random.SeedSequence(seed).spawn(count)
    return [int(c.generate_state(1)[0]) for c in children]


def generate_random(
    shape: Shape | str,
    n_vertices: int,
    *,
    n_colors: int = 2,
    p_blue: float | Fraction = 0.5,
    seed: int = 0,
) -> TwoColoring | TripleColoring | PairLabeling:
    """Independent per-pair (or per-triple) draws; a pure function of the arguments."""
    shape = Shape(shape)
    p = float(p_blue)
    if not 0 <= p <= 1:
        raise InputError("p_blue must lie in [0, 1]")
    if n_vertices < 1:
        raise InputError("N must be >= 1")
    rng = rng_for(seed)
    match shape:
        case Shape.PAIRS:
            pairs = [(i, j) for i in range(1, n_vertices + 1) for j in range(i + 1, n_vertices + 1)]
            draws = rng.random(len(pairs)) < p
            return TwoColoring.from_blue_pairs(
                n_vertices, [pair for pair, blue in zip(pairs, draws, strict=True) if blue]
            )
        case Shape.TRIPLES:
            triples = list(iter_triples(n_vertices))
            draws = rng.random(len(triples)) < p
            return TripleColoring.from_blue_triples(
                n_vertices, [tri for tri, blue in zip(triples, draws, strict=True) if blue]
            )
        case Shape.LABELS:
            if n_colors < 1:
                raise InputError("n_colors must be >= 1")
            count = n_vertices * (n_vertices - 1) // 2
            values = iter(rng.integers(1, n_colors + 1, size=count).tolist())
            return PairLabeling.from_function(n_vertices, n_colors, lambda i, j: next(values))


def generate_lower_bound_blocked(s: int, t: int, n: int, inner: TwoColoring) -> TwoColoring:
    """(n-1)/t copies of ``inner`` in consecutive intervals, all cross-interval pairs blue.

    ``inner`` must avoid red K_{s+1} and blue K_{t+1}; the result then avoids red K_{s+1}
    and blue P_n^t.
    """
    if s < 1 or t < 1 or n < 2:
        raise InputError("Need s, t >= 1 and n >= 2")
    if (n - 1) % t:
        raise InputError(f"t={t} must divide n-1={n - 1}")
    red = inner.first_clique(Color.RED, s + 1)
    if red is not None:
        raise InputError(f"Inner coloring contains red K_{s + 1} on {list(red)}")
    blue = inner.first_clique(Color.BLUE, t + 1)
    if blue is not None:
        raise InputError(f"Inner coloring contains blue K_{t + 1} on {list(blue)}")
    size = inner.n_vertices
    copies = (n - 1) // t
    total = copies * size

    def block(v: int) -> int:
        return (v - 1) // size

    def color_of(i: int, j: int) -> Color:
        if block(i) != block(j):
            return Color.BLUE
        offset = block(i) * size
        return inner.color(i - offset, j - offset)

    return TwoColoring.from_function(total, color_of)


def generate_es_extremal(s: int, n: int) -> TwoColoring:
    """s-1 blocks of n-1 vertices, blue inside blocks and red across: no red K_s, no blue P_n."""
    if s < 2 or n < 2:
        raise InputError("Need s, n >= 2")
    size = n - 1

    def color_of(i: int, j: int) -> Color:
        return Color.BLUE if (i - 1) // size == (j - 1) // size else Color.RED

    return TwoColoring.from_function((s - 1) * size, color_of)
