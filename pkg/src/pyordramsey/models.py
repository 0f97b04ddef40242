from collections.abc import Callable, Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from typing import Self

from ._bitset import full, iter_bits
from .enums import BoundFormula, Color, PatternKind
from .exceptions import InputError


def _check_pair(i: int, j: int, n: int) -> None:
    if not 1 <= i < j <= n:
        raise InputError(f"Pair ({i}, {j}) is not 1 <= i < j <= {n}")


@dataclass(frozen=True, slots=True)
class TwoColoring:
    """Red/blue coloring of the ordered complete graph on 1..N.

    ``blue[v]`` is the bitset of blue neighbors of ``v``; index 0 is unused.
    """

    n_vertices: int
    blue: tuple[int, ...]
    red: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        n = self.n_vertices
        if n < 1:
            raise InputError("A coloring needs at least one vertex")
        if len(self.blue) != n + 1 or self.blue[0] != 0:
            raise InputError("Blue adjacency must have N+1 rows with an empty row 0")
        everything = full(n)
        for v in range(1, n + 1):
            row = self.blue[v]
            if row & ~everything or (row >> v) & 1:
                raise InputError(f"Blue row {v} leaves the vertex range")
            for u in iter_bits(row):
                if not (self.blue[u] >> v) & 1:
                    raise InputError(f"Blue adjacency not symmetric at ({u}, {v})")
        red = (0, *(everything ^ self.blue[v] ^ (1 << v) for v in range(1, n + 1)))
        object.__setattr__(self, "red", red)

    @classmethod
    def from_blue_pairs(cls, n_vertices: int, pairs: Iterable[tuple[int, int]]) -> Self:
        rows = [0] * (n_vertices + 1)
        for i, j in pairs:
            _check_pair(i, j, n_vertices)
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(n_vertices, tuple(rows))

    @classmethod
    def from_function(cls, n_vertices: int, color_of: Callable[[int, int], Color]) -> Self:
        pairs = [
            (i, j)
            for i in range(1, n_vertices + 1)
            for j in range(i + 1, n_vertices + 1)
            if color_of(i, j) is Color.BLUE
        ]
        return cls.from_blue_pairs(n_vertices, pairs)

    @classmethod
    def monochromatic(cls, n_vertices: int, color: Color) -> Self:
        return cls.from_function(n_vertices, lambda i, j: color)

    @property
    def full_mask(self) -> int:
        return full(self.n_vertices)

    def color(self, i: int, j: int) -> Color:
        _check_pair(i, j, self.n_vertices)
        return Color.BLUE if (self.blue[i] >> j) & 1 else Color.RED

    def has(self, i: int, j: int, color: Color) -> bool:
        """Unchecked lookup; ``i`` and ``j`` may come in either order."""
        return bool((self.neighbors(i, color) >> j) & 1)

    def neighbors(self, v: int, color: Color) -> int:
        return self.blue[v] if color is Color.BLUE else self.red[v]

    def blue_pairs(self) -> Iterator[tuple[int, int]]:
        for i in range(1, self.n_vertices + 1):
            for j in iter_bits(self.blue[i] >> (i + 1) << (i + 1)):
                yield (i, j)

    def is_clique(self, vertices: Sequence[int], color: Color) -> bool:
        for a, u in enumerate(vertices):
            row = self.neighbors(u, color)
            for w in vertices[a + 1 :]:
                if not (row >> w) & 1:
                    return False
        return True

    def first_clique(
        self, color: Color, k: int, within: int | None = None
    ) -> tuple[int, ...] | None:
        """Lexicographically first ``color`` clique of size ``k`` inside ``within``."""
        candidates = self.full_mask if within is None else within & self.full_mask

        def extend(chosen: tuple[int, ...], cand: int) -> tuple[int, ...] | None:
            if len(chosen) == k:
                return chosen
            need = k - len(chosen)
            while cand and cand.bit_count() >= need:
                low = cand & -cand
                v = low.bit_length() - 1
                cand ^= low
                found = extend((*chosen, v), cand & self.neighbors(v, color))
                if found is not None:
                    return found
            return None

        return extend((), candidates)

    def iter_cliques(
        self, color: Color, k: int, within: int | None = None
    ) -> Iterator[tuple[int, ...]]:
        """All ``color`` cliques of size ``k`` inside ``within``, in lexicographic order."""
        candidates = self.full_mask if within is None else within & self.full_mask

        def extend(chosen: tuple[int, ...], cand: int) -> Iterator[tuple[int, ...]]:
            if len(chosen) == k:
                yield chosen
                return
            need = k - len(chosen)
            while cand and cand.bit_count() >= need:
                low = cand & -cand
                v = low.bit_length() - 1
                cand ^= low
                yield from extend((*chosen, v), cand & self.neighbors(v, color))

        yield from extend((), candidates)

    def induced(self, vertices: Sequence[int]) -> Self:
        """Sub-coloring on ``vertices`` (sorted), relabelled 1..len(vertices)."""
        index = {v: k for k, v in enumerate(vertices, start=1)}
        pairs = [
            (index[u], index[w])
            for a, u in enumerate(vertices)
            for w in vertices[a + 1 :]
            if (self.blue[u] >> w) & 1
        ]
        return type(self).from_blue_pairs(len(vertices), pairs)

    def swapped(self) -> Self:
        return type(self)(self.n_vertices, self.red)


@dataclass(frozen=True, slots=True)
class TripleColoring:
    """Red/blue coloring of the ordered complete 3-uniform hypergraph on 1..N.

    ``blue[i][j]`` is the bitset of ``k > j`` with ``(i, j, k)`` blue.
    """

    n_vertices: int
    blue: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = self.n_vertices
        if n < 1:
            raise InputError("A coloring needs at least one vertex")
        if len(self.blue) != n + 1 or any(len(row) != n + 1 for row in self.blue):
            raise InputError("Triple table must be (N+1) x (N+1)")
        for i in range(n + 1):
            for j in range(n + 1):
                mask = self.blue[i][j]
                inside = mask & ~full(n) == 0 and mask >> (j + 1) << (j + 1) == mask
                if mask and not (1 <= i < j and inside):
                    raise InputError(f"Triple row ({i}, {j}) leaves the valid range")

    @classmethod
    def from_blue_triples(cls, n_vertices: int, triples: Iterable[tuple[int, int, int]]) -> Self:
        rows = [[0] * (n_vertices + 1) for _ in range(n_vertices + 1)]
        for i, j, k in triples:
            if not 1 <= i < j < k <= n_vertices:
                raise InputError(f"Triple ({i}, {j}, {k}) is not increasing within 1..{n_vertices}")
            rows[i][j] |= 1 << k
        return cls(n_vertices, tuple(tuple(row) for row in rows))

    @classmethod
    def from_function(
        cls, n_vertices: int, color_of: Callable[[int, int, int], Color]
    ) -> Self:
        return cls.from_blue_triples(
            n_vertices, (t for t in iter_triples(n_vertices) if color_of(*t) is Color.BLUE)
        )

    @classmethod
    def monochromatic(cls, n_vertices: int, color: Color) -> Self:
        return cls.from_function(n_vertices, lambda i, j, k: color)

    def color(self, i: int, j: int, k: int) -> Color:
        if not 1 <= i < j < k <= self.n_vertices:
            raise InputError(f"Triple ({i}, {j}, {k}) is not increasing in 1..{self.n_vertices}")
        return Color.BLUE if (self.blue[i][j] >> k) & 1 else Color.RED

    def has(self, i: int, j: int, k: int, color: Color) -> bool:
        """Unchecked lookup for an increasing triple."""
        return bool((self.blue[i][j] >> k) & 1) == (color is Color.BLUE)


def iter_triples(n: int) -> Iterator[tuple[int, int, int]]:
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                yield (i, j, k)


@dataclass(frozen=True, slots=True)
class PairLabeling:
    """Labeling chi of the pairs i < j of 1..N with values in 1..n.

    ``labels[i][j]`` holds chi(i, j) for ``i < j``; other cells are 0.
    """

    n_vertices: int
    n_colors: int
    labels: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n, k = self.n_vertices, self.n_colors
        if n < 1 or k < 1:
            raise InputError("A labeling needs N >= 1 and n >= 1")
        if len(self.labels) != n + 1 or any(len(row) != n + 1 for row in self.labels):
            raise InputError("Label table must be (N+1) x (N+1)")
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                if not 1 <= self.labels[i][j] <= k:
                    raise InputError(f"Label of ({i}, {j}) outside 1..{k}")

    @classmethod
    def from_function(
        cls, n_vertices: int, n_colors: int, label_of: Callable[[int, int], int]
    ) -> Self:
        rows = [[0] * (n_vertices + 1) for _ in range(n_vertices + 1)]
        for i in range(1, n_vertices + 1):
            for j in range(i + 1, n_vertices + 1):
                rows[i][j] = label_of(i, j)
        return cls(n_vertices, n_colors, tuple(tuple(row) for row in rows))

    @classmethod
    def constant(cls, n_vertices: int, n_colors: int = 1, value: int = 1) -> Self:
        return cls.from_function(n_vertices, n_colors, lambda i, j: value)

    def label(self, i: int, j: int) -> int:
        _check_pair(i, j, self.n_vertices)
        return self.labels[i][j]

    def restricted(self, vertices: Sequence[int]) -> Self:
        """Labeling induced on ``vertices`` (sorted), relabelled 1..len(vertices)."""
        return type(self).from_function(
            len(vertices), self.n_colors, lambda a, b: self.labels[vertices[a - 1]][vertices[b - 1]]
        )


@dataclass(frozen=True, slots=True)
class FunctionFamily:
    """Functions chi_0..chi_{q-1} on the blocks 1..M with values in 1..n."""

    size: int
    n_values: int
    values: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        for d, row in enumerate(self.values):
            if len(row) != self.size + 1:
                raise InputError(f"Function {d} must have M+1 entries")
            if any(not 1 <= x <= self.n_values for x in row[1:]):
                raise InputError(f"Function {d} leaves the range 1..{self.n_values}")

    @classmethod
    def from_lists(cls, functions: Sequence[Sequence[int]], n_values: int | None = None) -> Self:
        """Build from q lists of M values each (position 0 is block 1)."""
        size = len(functions[0]) if functions else 0
        if n_values is None:
            n_values = max((max(f, default=1) for f in functions), default=1)
        return cls(size, n_values, tuple((0, *f) for f in functions))

    @property
    def depth(self) -> int:
        return len(self.values)

    def value(self, d: int, a: int) -> int:
        return self.values[d][a]


@dataclass(frozen=True, slots=True)
class PatternSpec:
    """Target structure with a color: K_s, P_n^t, P_n^(3), K_s^(3) or the blowup P_n[t]."""

    kind: PatternKind
    size: int
    color: Color
    t: int = 1

    def __post_init__(self) -> None:
        if self.size < 1 or self.t < 1:
            raise InputError("Pattern sizes must be >= 1")
        if self.kind is PatternKind.PATH_POWER and self.size < self.t:
            raise InputError("PathPower requires n >= t")

    @classmethod
    def clique(cls, s: int, color: Color) -> Self:
        return cls(PatternKind.CLIQUE, s, color)

    @classmethod
    def path_power(cls, n: int, t: int, color: Color) -> Self:
        return cls(PatternKind.PATH_POWER, n, color, t)

    @classmethod
    def tight_path3(cls, n: int, color: Color) -> Self:
        return cls(PatternKind.TIGHT_PATH3, n, color)

    @classmethod
    def clique3(cls, s: int, color: Color) -> Self:
        return cls(PatternKind.CLIQUE3, s, color)

    @classmethod
    def blowup(cls, n: int, t: int, color: Color) -> Self:
        return cls(PatternKind.BLOWUP, n, color, t)

    @property
    def is_hypergraph(self) -> bool:
        return self.kind in (PatternKind.TIGHT_PATH3, PatternKind.CLIQUE3)


@dataclass(frozen=True, slots=True)
class BoundRequest:
    """A named bound formula with its integer parameters."""

    formula: BoundFormula
    params: Mapping[str, int] = field(default_factory=dict)
