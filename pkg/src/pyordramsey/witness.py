from collections.abc import Callable, Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Self

from ._bitset import first_bits, mask_of
from .enums import CertificateKind, Color, Direction, Notion
from .exceptions import FormatError, InputError
from .models import FunctionFamily, PairLabeling, TripleColoring, TwoColoring

Instance = TwoColoring | TripleColoring | PairLabeling | FunctionFamily
LabelTable = Sequence[Sequence[int]]

# aux keys whose payload is a list of vertex lists
_VERTEX_LIST_KEYS = ("cliques", "groups", "paths")


def _freeze(value: Any) -> Any:
    if isinstance(value, list | tuple):
        return tuple(_freeze(v) for v in value)
    return value


def _thaw(value: Any) -> Any:
    if isinstance(value, tuple):
        return [_thaw(v) for v in value]
    return value


@dataclass(frozen=True, slots=True)
class Certificate:
    """A witness: kind, color, vertices, integer params and a kind-specific aux payload."""

    kind: CertificateKind
    vertices: tuple[int, ...]
    color: Color | None = None
    params: Mapping[str, int] = field(default_factory=dict)
    aux: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "params", dict(sorted(self.params.items())))
        object.__setattr__(self, "aux", {k: _freeze(v) for k, v in sorted(self.aux.items())})

    @classmethod
    def from_raw(cls, raw: Mapping[str, Any]) -> Self:
        try:
            kind = CertificateKind(raw["kind"])
            color = None if raw.get("color") is None else Color(raw["color"])
            vertices = tuple(int(v) for v in raw["vertices"])
            params = {str(k): int(v) for k, v in raw.get("params", {}).items()}
            aux = dict(raw.get("aux", {}))
        except (KeyError, ValueError, TypeError) as e:
            raise FormatError(f"Malformed certificate: {e}") from e
        return cls(kind=kind, vertices=vertices, color=color, params=params, aux=aux)

    def to_raw(self) -> dict[str, Any]:
        return {
            "kind": self.kind.value,
            "params": dict(self.params),
            "vertices": list(self.vertices),
            "color": None if self.color is None else self.color.value,
            "aux": {k: _thaw(v) for k, v in self.aux.items()},
        }

    def relabel(self, mapping: Sequence[int]) -> Self:
        """Map vertex k to ``mapping[k - 1]``; used for witnesses found on induced sub-colorings."""

        def move(value: Any) -> Any:
            if isinstance(value, tuple):
                return tuple(move(v) for v in value)
            return mapping[value - 1]

        aux = {k: move(v) if k in _VERTEX_LIST_KEYS else v for k, v in self.aux.items()}
        return type(self)(
            kind=self.kind,
            vertices=tuple(mapping[v - 1] for v in self.vertices),
            color=self.color,
            params=self.params,
            aux=aux,
        )

    # --- Constructors ---

    @classmethod
    def mono_clique(cls, color: Color, vertices: Sequence[int]) -> Self:
        return cls(CertificateKind.MONO_CLIQUE, tuple(vertices), color, {"s": len(vertices)})

    @classmethod
    def mono_path_power(cls, color: Color, vertices: Sequence[int], t: int) -> Self:
        return cls(
            CertificateKind.MONO_PATH_POWER, tuple(vertices), color, {"n": len(vertices), "t": t}
        )

    @classmethod
    def mono_tight_path3(cls, color: Color, vertices: Sequence[int]) -> Self:
        return cls(CertificateKind.MONO_TIGHT_PATH3, tuple(vertices), color, {"n": len(vertices)})

    @classmethod
    def mono_clique3(cls, color: Color, vertices: Sequence[int]) -> Self:
        return cls(CertificateKind.MONO_CLIQUE3, tuple(vertices), color, {"s": len(vertices)})

    @classmethod
    def mono_blowup(cls, color: Color, groups: Sequence[Sequence[int]]) -> Self:
        t = len(groups[0]) if groups else 0
        return cls(
            CertificateKind.MONO_BLOWUP,
            tuple(v for g in groups for v in g),
            color,
            {"n": len(groups), "t": t},
            {"groups": groups},
        )

    @classmethod
    def non_increasing_set(cls, vertices: Sequence[int], notion: Notion = Notion.FULL) -> Self:
        return cls(
            CertificateKind.NON_INCREASING_SET,
            tuple(vertices),
            params={"s": len(vertices)},
            aux={"notion": notion.value},
        )

    @classmethod
    def lexicographic_set(
        cls,
        vertices: Sequence[int],
        direction: Direction,
        colors: Sequence[int],
        *,
        nonincreasing_colors: bool = True,
    ) -> Self:
        return cls(
            CertificateKind.LEXICOGRAPHIC_SET,
            tuple(vertices),
            params={"s": len(vertices)},
            aux={
                "direction": direction.value,
                "colors": tuple(colors),
                "nonincreasing_colors": nonincreasing_colors,
            },
        )

    @classmethod
    def clique_chain(cls, color: Color, cliques: Sequence[Sequence[int]]) -> Self:
        union = sorted({v for c in cliques for v in c})
        t = len(cliques[0]) if cliques else 0
        return cls(
            CertificateKind.CLIQUE_CHAIN,
            tuple(union),
            color,
            {"m": len(cliques), "t": t},
            {"cliques": cliques},
        )

    @classmethod
    def hst_copy(cls, vertices: Sequence[int], s: int, t: int) -> Self:
        return cls(CertificateKind.HST_COPY, tuple(vertices), params={"s": s, "t": t})

    @classmethod
    def label_monotone_path(cls, vertices: Sequence[int], direction: Direction) -> Self:
        return cls(
            CertificateKind.LABEL_MONOTONE_PATH,
            tuple(vertices),
            params={"edges": len(vertices) - 1},
            aux={"direction": direction.value},
        )

    @classmethod
    def chi_forest(cls, forest: "OrderedForest", q: int) -> Self:
        return cls(
            CertificateKind.CHI_FOREST,
            forest.nodes,
            params={"q": q},
            aux={"parent": forest.parent_pairs()},
        )

    @classmethod
    def ktt_free_family(
        cls, members: Sequence[tuple[int, Sequence[int]]], t: int, min_size: int = 1
    ) -> Self:
        union = sorted({v for _, a in members for v in a})
        return cls(
            CertificateKind.KTT_FREE_FAMILY,
            tuple(union),
            params={"t": t, "min_size": min_size},
            aux={"sets": tuple((node, tuple(a)) for node, a in members)},
        )

    @classmethod
    def path_bundle(cls, paths: Sequence[Sequence[int]], t: int, min_total: int = 0) -> Self:
        union = sorted(v for p in paths for v in p)
        return cls(
            CertificateKind.PATH_BUNDLE,
            tuple(union),
            Color.BLUE,
            {"t": t, "min_total": min_total},
            {"paths": paths},
        )


@dataclass(frozen=True, slots=True)
class Verdict:
    """Verifier answer. A rejection names the first violated clause and the offending tuple."""

    accepted: bool
    clause: str | None = None
    witness: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.accepted

    def __str__(self) -> str:
        if self.accepted:
            return "ACCEPT"
        return f"REJECT {self.clause} {list(self.witness)}"


ACCEPT = Verdict(True)


def reject(clause: str, *witness: int) -> Verdict:
    return Verdict(False, clause, tuple(witness))


@dataclass(frozen=True, slots=True)
class OrderedForest:
    """Rooted forest on integer nodes, given by a parent map (roots map to None)."""

    parent: Mapping[int, int | None]
    _children: dict[int | None, tuple[int, ...]] = field(
        init=False, repr=False, compare=False
    )
    _depth: dict[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        parent = dict(sorted(self.parent.items()))
        children: dict[int | None, list[int]] = {None: []}
        for v in parent:
            children[v] = []
        for v, p in parent.items():
            if p is not None and p not in parent:
                raise InputError(f"Parent {p} of node {v} is not a node")
            children[p].append(v)
        depth: dict[int, int] = {}
        for v in parent:
            d, u, seen = 0, v, 0
            while parent[u] is not None:
                u = parent[u]
                d += 1
                seen += 1
                if seen > len(parent):
                    raise InputError("Parent map contains a cycle")
            depth[v] = d
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "_children", {k: tuple(v) for k, v in children.items()})
        object.__setattr__(self, "_depth", depth)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[int | None]]) -> Self:
        return cls({int(v): (None if p is None else int(p)) for v, p in pairs})

    @classmethod
    def isolated(cls, nodes: Iterable[int]) -> Self:
        return cls(dict.fromkeys(nodes))

    def parent_pairs(self) -> tuple[tuple[int, int | None], ...]:
        return tuple(self.parent.items())

    @property
    def nodes(self) -> tuple[int, ...]:
        return tuple(self.parent)

    @property
    def roots(self) -> tuple[int, ...]:
        return self._children[None]

    def __len__(self) -> int:
        return len(self.parent)

    def children(self, v: int) -> tuple[int, ...]:
        return self._children[v]

    def depth_of(self, v: int) -> int:
        return self._depth[v]

    @property
    def depth(self) -> int | None:
        """Depth of the deepest leaf; None for the empty forest."""
        return max(self._depth.values(), default=None)

    @property
    def leaves(self) -> tuple[int, ...]:
        return tuple(v for v in self.parent if not self._children[v])

    def descendants(self, v: int) -> Iterator[int]:
        stack = list(self._children[v])
        while stack:
            u = stack.pop()
            yield u
            stack.extend(self._children[u])

    def subtree_max(self, v: int) -> int:
        return max((v, *self.descendants(v)))

    @property
    def is_balanced(self) -> bool:
        return len({self._depth[v] for v in self.leaves}) <= 1

    @property
    def is_well_ordered(self) -> bool:
        return self.ordering_violation() is None

    def ordering_violation(self) -> tuple[int, int] | None:
        for v, p in self.parent.items():
            if p is not None and p >= v:
                return (p, v)
        levels: dict[int, list[int]] = {}
        for v, d in self._depth.items():
            levels.setdefault(d, []).append(v)
        for row in levels.values():
            row.sort()
            for y, y2 in zip(row, row[1:], strict=False):
                if self.subtree_max(y) >= y2:
                    return (y, y2)
        return None

    def head(self) -> tuple[int, ...]:
        """Leftmost root-to-leaf path of the first tree."""
        return self._walk(lambda kids: kids[0])

    def tail(self) -> tuple[int, ...]:
        """Rightmost root-to-leaf path of the last tree."""
        return self._walk(lambda kids: kids[-1])

    def _walk(self, pick: Callable[[tuple[int, ...]], int]) -> tuple[int, ...]:
        path: list[int] = []
        kids = self.roots
        while kids:
            v = pick(kids)
            path.append(v)
            kids = self._children[v]
        return tuple(path)

    def subforest(self, roots: Iterable[int]) -> "OrderedForest":
        """Forest made of the subtrees hanging from ``roots``, which become roots."""
        parent: dict[int, int | None] = {}
        for root in roots:
            parent[root] = None
            for u in self.descendants(root):
                parent[u] = self.parent[u]
        return OrderedForest(parent)


@dataclass(frozen=True, slots=True)
class RedNetCertificate:
    """An s-red-net: forest of depth s-1 whose nodes carry blue cliques X_v of size r."""

    forest: OrderedForest
    sets: Mapping[int, tuple[int, ...]]
    s: int
    r: int
    t: int

    def to_certificate(self) -> Certificate:
        union = sorted(v for x in self.sets.values() for v in x)
        return Certificate(
            CertificateKind.RED_NET,
            tuple(union),
            Color.BLUE,
            {"r": self.r, "s": self.s, "t": self.t},
            {
                "parent": self.forest.parent_pairs(),
                "sets": tuple((v, tuple(self.sets[v])) for v in self.forest.nodes),
            },
        )

    @classmethod
    def from_certificate(cls, cert: Certificate) -> Self:
        if cert.kind is not CertificateKind.RED_NET:
            raise InputError(f"Expected a red-net certificate, got {cert.kind}")
        forest = OrderedForest.from_pairs(cert.aux["parent"])
        sets = {int(v): tuple(x) for v, x in cert.aux["sets"]}
        return cls(forest, sets, cert.params["s"], cert.params["r"], cert.params["t"])

    def child_net(self, v: int) -> "RedNetCertificate":
        """The (s-1)-red-net formed by the subtrees of the children of ``v``."""
        forest = self.forest.subforest(self.forest.children(v))
        sets = {u: self.sets[u] for u in forest.nodes}
        return RedNetCertificate(forest, sets, self.s - 1, self.r, self.t)


# --- Predicates ---


def non_increasing_triple(xy: int, yz: int, xz: int, notion: Notion = Notion.FULL) -> bool:
    """Triple condition on chi(x,y), chi(y,z), chi(x,z) for x < y < z."""
    match notion:
        case Notion.FULL:
            return xy >= yz and xz in (xy, yz)
        case Notion.MIDDLE_CHAIN:
            return xy >= xz >= yz
        case Notion.WEAK:
            return xy >= yz


def has_blue_ktt(
    coloring: TwoColoring, a: Iterable[int], b: Iterable[int], t: int
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Lexicographically first blue K_{t,t} with parts L in ``a`` and R in ``b``, or None."""
    if t < 1:
        raise InputError("t must be >= 1")
    left = sorted(a)
    b_mask = mask_of(b)
    if mask_of(left) & b_mask:
        raise InputError("Parts of a K_{t,t} query must be disjoint")
    candidates = [v for v in left if (coloring.blue[v] & b_mask).bit_count() >= t]

    def extend(start: int, chosen: tuple[int, ...], common: int) -> tuple[int, ...] | None:
        if len(chosen) == t:
            return chosen
        for idx in range(start, len(candidates)):
            if len(candidates) - idx < t - len(chosen):
                break
            narrowed = common & coloring.blue[candidates[idx]]
            if narrowed.bit_count() >= t:
                found = extend(idx + 1, (*chosen, candidates[idx]), narrowed)
                if found is not None:
                    return found
        return None

    chosen = extend(0, (), b_mask)
    if chosen is None:
        return None
    common = b_mask
    for v in chosen:
        common &= coloring.blue[v]
    return chosen, tuple(first_bits(common, t))


def is_blue_path_power(coloring: TwoColoring, path: Sequence[int], t: int) -> bool:
    for a, u in enumerate(path):
        for w in path[a + 1 : a + 1 + t]:
            if u >= w or not (coloring.blue[u] >> w) & 1:
                return False
    return True


# --- Verifier ---


def _vertex_order(vertices: Sequence[int], n: int) -> Verdict:
    for a, v in enumerate(vertices):
        if not 1 <= v <= n:
            return reject("vertex_range", v)
        if a and vertices[a - 1] >= v:
            return reject("ordering", vertices[a - 1], v)
    return ACCEPT


def _check_mono_clique(g: TwoColoring, cert: Certificate) -> Verdict:
    if cert.color is None:
        return reject("color")
    for u, w in combinations(cert.vertices, 2):
        if not g.has(u, w, cert.color):
            return reject("monochromatic", u, w)
    if cert.params.get("s", len(cert.vertices)) != len(cert.vertices):
        return reject("size", len(cert.vertices))
    return ACCEPT


def _check_mono_path_power(g: TwoColoring, cert: Certificate) -> Verdict:
    vs, t = cert.vertices, cert.params.get("t", 1)
    if cert.color is None:
        return reject("color")
    if len(vs) != cert.params.get("n", len(vs)) or t < 1:
        return reject("size", len(vs))
    for a, u in enumerate(vs):
        for w in vs[a + 1 : a + 1 + t]:
            if not g.has(u, w, cert.color):
                return reject("monochromatic", u, w)
    return ACCEPT


def _check_mono_blowup(g: TwoColoring, cert: Certificate) -> Verdict:
    groups: tuple[tuple[int, ...], ...] = cert.aux.get("groups", ())
    t = cert.params.get("t", 1)
    if cert.color is None:
        return reject("color")
    if len(groups) != cert.params.get("n", len(groups)):
        return reject("size", len(groups))
    if tuple(v for grp in groups for v in grp) != cert.vertices:
        return reject("groups")
    for grp in groups:
        if len(grp) != t:
            return reject("group_size", *grp)
    for left, right in zip(groups, groups[1:], strict=False):
        for u in left:
            for w in right:
                if not g.has(u, w, cert.color):
                    return reject("monochromatic", u, w)
    return ACCEPT


def _check_mono_tight_path3(h: TripleColoring, cert: Certificate) -> Verdict:
    vs = cert.vertices
    if cert.color is None:
        return reject("color")
    if len(vs) != cert.params.get("n", len(vs)):
        return reject("size", len(vs))
    for a in range(len(vs) - 2):
        if not h.has(vs[a], vs[a + 1], vs[a + 2], cert.color):
            return reject("monochromatic", *vs[a : a + 3])
    return ACCEPT


def _check_mono_clique3(h: TripleColoring, cert: Certificate) -> Verdict:
    if cert.color is None:
        return reject("color")
    if cert.params.get("s", len(cert.vertices)) != len(cert.vertices):
        return reject("size", len(cert.vertices))
    for x, y, z in combinations(cert.vertices, 3):
        if not h.has(x, y, z, cert.color):
            return reject("monochromatic", x, y, z)
    return ACCEPT


def _table(labeling: PairLabeling | LabelTable) -> LabelTable:
    return labeling.labels if isinstance(labeling, PairLabeling) else labeling


def non_increasing_violation(
    labeling: PairLabeling | LabelTable, vertices: Sequence[int], notion: Notion = Notion.FULL
) -> tuple[str, tuple[int, int, int]] | None:
    """First triple of ``vertices`` breaking ``notion``; also accepts a raw label table."""
    lab = _table(labeling)
    for x, y, z in combinations(vertices, 3):
        xy, yz, xz = lab[x][y], lab[y][z], lab[x][z]
        if non_increasing_triple(xy, yz, xz, notion):
            continue
        clause = "non_increasing" if xy < yz else "third_edge"
        return clause, (x, y, z)
    return None


def _check_non_increasing(lab: PairLabeling, cert: Certificate) -> Verdict:
    notion = Notion(cert.aux.get("notion", Notion.FULL.value))
    found = non_increasing_violation(lab, cert.vertices, notion)
    if found is not None:
        return reject(found[0], *found[1])
    return ACCEPT


def _check_lexicographic(lab: PairLabeling, cert: Certificate) -> Verdict:
    vs = cert.vertices
    direction = Direction(cert.aux.get("direction", Direction.FORWARD.value))
    colors: tuple[int, ...] = cert.aux.get("colors", ())
    if len(colors) != max(len(vs) - 1, 0):
        return reject("colors", *colors)
    for a, b in combinations(range(len(vs)), 2):
        expected = colors[a] if direction is Direction.FORWARD else colors[b - 1]
        if lab.labels[vs[a]][vs[b]] != expected:
            return reject("lexicographic", vs[a], vs[b])
    if cert.aux.get("nonincreasing_colors"):
        for a in range(len(colors) - 1):
            if colors[a] < colors[a + 1]:
                return reject("nonincreasing_colors", colors[a], colors[a + 1])
    return ACCEPT


def _check_clique_chain(g: TwoColoring, cert: Certificate) -> Verdict:
    cliques: tuple[tuple[int, ...], ...] = cert.aux.get("cliques", ())
    t = cert.params.get("t", 1)
    if cert.color is None:
        return reject("color")
    if len(cliques) != cert.params.get("m", len(cliques)) or not cliques:
        return reject("size", len(cliques))
    if tuple(sorted({v for c in cliques for v in c})) != cert.vertices:
        return reject("union")
    for clique in cliques:
        if len(clique) != t or not _vertex_order(clique, g.n_vertices):
            return reject("clique_shape", *clique)
        for u, w in combinations(clique, 2):
            if not g.has(u, w, cert.color):
                return reject("monochromatic", u, w)
    for left, right in zip(cliques, cliques[1:], strict=False):
        if len(set(left) & set(right)) != 1:
            return reject("intersection", *left, *right)
        if left[-1] != right[0]:
            return reject("endpoint", left[-1], right[0])
    return ACCEPT


def hst_violation(
    labeling: PairLabeling | LabelTable, vertices: Sequence[int], s: int, t: int
) -> tuple[str, tuple[int, ...]] | None:
    if len(vertices) != s + t - 1:
        return "size", (len(vertices),)
    lab = _table(labeling)
    xs, ys = vertices[:s], vertices[s - 1 :]
    found = non_increasing_violation(labeling, xs)
    if found is not None:
        return "clique_part", found[1]
    for a in range(len(ys) - 2):
        if lab[ys[a]][ys[a + 1]] < lab[ys[a + 1]][ys[a + 2]]:
            return "path_part", tuple(ys[a : a + 3])
    if s >= 2 and t >= 2 and lab[xs[-2]][xs[-1]] < lab[ys[0]][ys[1]]:
        return "junction", (xs[-2], xs[-1], ys[1])
    return None


def _check_hst(lab: PairLabeling, cert: Certificate) -> Verdict:
    found = hst_violation(lab, cert.vertices, cert.params.get("s", 2), cert.params.get("t", 1))
    if found is not None:
        return reject(found[0], *found[1])
    return ACCEPT


def _check_label_path(lab: PairLabeling, cert: Certificate) -> Verdict:
    vs = cert.vertices
    direction = cert.aux.get("direction")
    if direction not in (Direction.NON_INCREASING.value, Direction.INCREASING.value):
        return reject("direction")
    if cert.params.get("edges", len(vs) - 1) != len(vs) - 1:
        return reject("size", len(vs))
    increasing = direction == Direction.INCREASING.value
    for a in range(len(vs) - 2):
        left, right = lab.labels[vs[a]][vs[a + 1]], lab.labels[vs[a + 1]][vs[a + 2]]
        if (increasing and left >= right) or (not increasing and left < right):
            return reject("monotone", *vs[a : a + 3])
    return ACCEPT


def forest_violation(
    forest: OrderedForest, depth: int | None
) -> tuple[str, tuple[int, ...]] | None:
    if not forest.nodes:
        return None
    if not forest.is_balanced:
        return "balanced", forest.leaves
    bad = forest.ordering_violation()
    if bad is not None:
        return "well_ordered", bad
    if depth is not None and forest.depth != depth:
        return "depth", (forest.depth or 0,)
    return None


def _check_chi_forest(fam: FunctionFamily, cert: Certificate) -> Verdict:
    forest = OrderedForest.from_pairs(cert.aux.get("parent", ()))
    q = cert.params.get("q", fam.depth)
    if forest.nodes != cert.vertices:
        return reject("nodes")
    if any(not 1 <= v <= fam.size for v in forest.nodes):
        return reject("vertex_range", *forest.nodes)
    if q > fam.depth:
        return reject("functions", q)
    found = forest_violation(forest, q)
    if found is not None:
        return reject(found[0], *found[1])
    for v in forest.nodes:
        d = forest.depth_of(v)
        for child in forest.children(v):
            if fam.value(d, v) < fam.value(d, child):
                return reject("dominance", d, v, child)
    return ACCEPT


def red_net_violation(g: TwoColoring, net: RedNetCertificate) -> tuple[str, tuple[int, ...]] | None:
    forest, r = net.forest, net.r
    if r % 3 or r < 1:
        return "divisible", (r,)
    found = forest_violation(forest, net.s - 1)
    if found is not None:
        return found
    previous: tuple[int, ...] | None = None
    for v in forest.nodes:
        x = net.sets[v]
        if len(x) != r or not _vertex_order(x, g.n_vertices):
            return "set_shape", (v,)
        if not g.is_clique(x, Color.BLUE):
            return "blue_clique", (v,)
        if previous is not None and previous[-1] >= x[0]:
            return "set_order", (previous[-1], x[0])
        previous = x
    for v in forest.nodes:
        for u in forest.descendants(v):
            ktt = has_blue_ktt(g, net.sets[v], net.sets[u], net.t)
            if ktt is not None:
                return "ktt_free", (v, u, *ktt[0], *ktt[1])
    return None


def _check_red_net(g: TwoColoring, cert: Certificate) -> Verdict:
    net = RedNetCertificate.from_certificate(cert)
    if tuple(sorted(v for x in net.sets.values() for v in x)) != cert.vertices:
        return reject("union")
    if set(net.sets) != set(net.forest.nodes):
        return reject("sets")
    found = red_net_violation(g, net)
    if found is not None:
        return reject(found[0], *found[1])
    return ACCEPT


def _check_ktt_free(g: TwoColoring, cert: Certificate) -> Verdict:
    members: tuple[tuple[int, tuple[int, ...]], ...] = cert.aux.get("sets", ())
    t, min_size = cert.params.get("t", 1), cert.params.get("min_size", 1)
    for node, a in members:
        if len(a) < min_size or not _vertex_order(a, g.n_vertices):
            return reject("set_shape", node)
    for (v, a), (u, b) in combinations(members, 2):
        if set(a) & set(b):
            return reject("disjoint", v, u)
        ktt = has_blue_ktt(g, a, b, t)
        if ktt is not None:
            return reject("ktt_free", v, u, *ktt[0], *ktt[1])
    return ACCEPT


def _check_path_bundle(g: TwoColoring, cert: Certificate) -> Verdict:
    paths: tuple[tuple[int, ...], ...] = cert.aux.get("paths", ())
    t = cert.params.get("t", 1)
    outside = [v for p in paths for v in p if not 1 <= v <= g.n_vertices]
    if outside:
        return reject("vertex_range", *outside)
    if sorted(v for p in paths for v in p) != list(cert.vertices):
        return reject("union")
    if len(cert.vertices) != len(set(cert.vertices)):
        return reject("disjoint")
    if sum(len(p) for p in paths) < cert.params.get("min_total", 0):
        return reject("total_length", sum(len(p) for p in paths))
    for path in paths:
        if len(path) < t:
            return reject("length", *path)
        if not is_blue_path_power(g, path, t):
            return reject("blue_path_power", *path)
    return ACCEPT


_CHECKS: dict[CertificateKind, tuple[type, Callable[[Any, Certificate], Verdict]]] = {
    CertificateKind.MONO_CLIQUE: (TwoColoring, _check_mono_clique),
    CertificateKind.MONO_PATH_POWER: (TwoColoring, _check_mono_path_power),
    CertificateKind.MONO_BLOWUP: (TwoColoring, _check_mono_blowup),
    CertificateKind.MONO_TIGHT_PATH3: (TripleColoring, _check_mono_tight_path3),
    CertificateKind.MONO_CLIQUE3: (TripleColoring, _check_mono_clique3),
    CertificateKind.NON_INCREASING_SET: (PairLabeling, _check_non_increasing),
    CertificateKind.LEXICOGRAPHIC_SET: (PairLabeling, _check_lexicographic),
    CertificateKind.CLIQUE_CHAIN: (TwoColoring, _check_clique_chain),
    CertificateKind.HST_COPY: (PairLabeling, _check_hst),
    CertificateKind.LABEL_MONOTONE_PATH: (PairLabeling, _check_label_path),
    CertificateKind.CHI_FOREST: (FunctionFamily, _check_chi_forest),
    CertificateKind.RED_NET: (TwoColoring, _check_red_net),
    CertificateKind.KTT_FREE_FAMILY: (TwoColoring, _check_ktt_free),
    CertificateKind.PATH_BUNDLE: (TwoColoring, _check_path_bundle),
}

# kinds whose vertex list is a union rather than an ordered structure
_UNORDERED = {CertificateKind.PATH_BUNDLE}


def verify_certificate(instance: Instance, cert: Certificate) -> Verdict:
    """Re-check ``cert`` against ``instance`` from the definitions alone."""
    expected, check = _CHECKS[cert.kind]
    if not isinstance(instance, expected):
        return reject("instance_type")
    bound = instance.size if isinstance(instance, FunctionFamily) else instance.n_vertices
    if cert.kind not in _UNORDERED:
        ordered = _vertex_order(cert.vertices, bound)
        if not ordered:
            return ordered
    return check(instance, cert)
