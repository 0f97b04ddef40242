from itertools import combinations, pairwise
from pathlib import Path

import pytest

from pyordramsey import (
    Color,
    FormatError,
    GoldenRecord,
    InputError,
    Notion,
    Oracle,
    PairLabeling,
    PatternKind,
    PatternSpec,
    SearchCapExceeded,
    TripleColoring,
    TwoColoring,
    brute_force_witness,
    exact_f,
    exact_g,
    exact_ordered_ramsey,
    extract_non_increasing,
    read_golden,
    verify_certificate,
    write_golden,
)

K3_RED = PatternSpec.clique(3, Color.RED)


def _blue_path(n: int) -> PatternSpec:
    return PatternSpec.path_power(n, 1, Color.BLUE)


def _plant(n: int, edges: set[tuple[int, int]], color: Color) -> TwoColoring:
    """``edges`` in ``color`` on 1..n, every other pair in the opposite color."""
    pairs = combinations(range(1, n + 1), 2)
    blue = [p for p in pairs if (p in edges) == (color is Color.BLUE)]
    return TwoColoring.from_blue_pairs(n, blue)


def _pattern_edges(pattern: PatternSpec, vertices: tuple[int, ...]) -> set[tuple[int, int]]:
    if pattern.kind is PatternKind.BLOWUP:
        t = pattern.t
        groups = [vertices[k : k + t] for k in range(0, len(vertices), t)]
        return {(u, w) for a, b in pairwise(groups) for u in a for w in b}
    return {
        (vertices[a], vertices[b])
        for a, b in combinations(range(len(vertices)), 2)
        if b - a <= pattern.t
    }


class TestExactOrderedRamsey:
    """Tests for exact_ordered_ramsey."""

    @pytest.mark.parametrize(("n", "expected"), [(3, 5), (4, 7)])
    def test_triangle_vs_path(self, n: int, expected: int) -> None:
        """Test R(K_3, P_n) = 2n - 1."""
        result = exact_ordered_ramsey(K3_RED, _blue_path(n))
        assert result.is_known
        assert result.value == expected

    def test_triangles(self) -> None:
        """Test R(K_3, K_3) = 6 with a pentagon-like avoider."""
        result = exact_ordered_ramsey(K3_RED, PatternSpec.clique(3, Color.BLUE))
        assert result.value == 6
        assert isinstance(result.extremal, TwoColoring)
        assert result.extremal.n_vertices == 5

    def test_extremal_avoids_both(self) -> None:
        """Test the avoider on N - 1 vertices holds neither target."""
        blue = _blue_path(3)
        result = exact_ordered_ramsey(K3_RED, blue)
        assert isinstance(result.extremal, TwoColoring)
        assert result.extremal.n_vertices == 4
        assert brute_force_witness(result.extremal, K3_RED) is None
        assert brute_force_witness(result.extremal, blue) is None

    def test_tight_paths(self) -> None:
        """Test a single blue triple against a red tight path on four vertices."""
        result = exact_ordered_ramsey(
            PatternSpec.tight_path3(4, Color.RED), PatternSpec.tight_path3(3, Color.BLUE)
        )
        assert result.value == 4
        assert isinstance(result.extremal, TripleColoring)

    def test_unknown_below_threshold(self) -> None:
        """Test a cap at the Ramsey number leaves the threshold unknown."""
        result = exact_ordered_ramsey(K3_RED, PatternSpec.clique(3, Color.BLUE), n_max=5)
        assert not result.is_known
        assert result.value is None
        assert isinstance(result.extremal, TwoColoring)
        assert result.extremal.n_vertices == 5

    def test_same_color(self) -> None:
        """Test targets of one color are an input error."""
        with pytest.raises(InputError):
            exact_ordered_ramsey(K3_RED, PatternSpec.clique(3, Color.RED))

    def test_mixed_arity(self) -> None:
        """Test a graph against a hypergraph target is an input error."""
        with pytest.raises(InputError):
            exact_ordered_ramsey(K3_RED, PatternSpec.clique3(3, Color.BLUE))

    @pytest.mark.parametrize(
        ("red", "blue", "expected"),
        [
            (PatternSpec.path_power(3, 1, Color.RED), _blue_path(3), 5),
            (PatternSpec.path_power(3, 1, Color.RED), _blue_path(4), 7),
            (PatternSpec.blowup(2, 2, Color.RED), PatternSpec.clique(2, Color.BLUE), 4),
        ],
    )
    def test_non_clique_targets(self, red: PatternSpec, blue: PatternSpec, expected: int) -> None:
        """Test thresholds of non-clique targets and that each avoider holds neither target."""
        result = exact_ordered_ramsey(red, blue)
        assert result.value == expected
        assert isinstance(result.extremal, TwoColoring)
        assert result.extremal.n_vertices == expected - 1
        assert brute_force_witness(result.extremal, red) is None
        assert brute_force_witness(result.extremal, blue) is None


class TestBruteForceWitness:
    """Tests for brute_force_witness on planted copies."""

    @pytest.mark.parametrize(
        ("pattern", "n", "vertices"),
        [
            (PatternSpec.path_power(4, 1, Color.BLUE), 4, (1, 2, 3, 4)),
            (PatternSpec.path_power(5, 1, Color.BLUE), 8, (1, 3, 4, 6, 8)),
            (PatternSpec.path_power(5, 2, Color.BLUE), 7, (2, 3, 5, 6, 7)),
            (PatternSpec.path_power(6, 2, Color.RED), 9, (1, 2, 4, 5, 7, 8)),
            (PatternSpec.blowup(3, 2, Color.RED), 8, (1, 3, 4, 5, 7, 8)),
            (PatternSpec.blowup(2, 3, Color.BLUE), 7, (1, 2, 4, 5, 6, 7)),
        ],
    )
    def test_planted_graph_copy(
        self, pattern: PatternSpec, n: int, vertices: tuple[int, ...]
    ) -> None:
        """Test the only copy of a sparse pattern is found among opposite-colored pairs."""
        g = _plant(n, _pattern_edges(pattern, vertices), pattern.color)
        cert = brute_force_witness(g, pattern)
        assert cert is not None
        assert cert.vertices == vertices
        assert verify_certificate(g, cert)

    @pytest.mark.parametrize("color", list(Color))
    def test_planted_tight_path(self, color: Color) -> None:
        """Test a tight path on five spread-out vertices among opposite-colored triples."""
        path = {(1, 2, 4), (2, 4, 6), (4, 6, 7)}
        triples = combinations(range(1, 8), 3)
        h = TripleColoring.from_blue_triples(
            7, [x for x in triples if (x in path) == (color is Color.BLUE)]
        )
        cert = brute_force_witness(h, PatternSpec.tight_path3(5, color))
        assert cert is not None
        assert cert.vertices == (1, 2, 4, 6, 7)
        assert verify_certificate(h, cert)

    def test_broken_path(self) -> None:
        """Test two blue runs without a joining edge hold no blue P_4."""
        g = TwoColoring.from_blue_pairs(5, [(1, 2), (2, 3), (4, 5)])
        assert brute_force_witness(g, _blue_path(4)) is None
        assert brute_force_witness(g, _blue_path(3)) is not None


class TestExactLabelThresholds:
    """Tests for exact_g and exact_f."""

    @pytest.mark.parametrize("s", [2, 3, 4])
    def test_one_label(self, s: int) -> None:
        """Test g(1, s) = s."""
        assert exact_g(1, s).value == s

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_pairs(self, n: int) -> None:
        """Test g(n, 2) = 2."""
        assert exact_g(n, 2).value == 2

    @pytest.mark.parametrize("t", [1, 2, 3])
    def test_f_one_label(self, t: int) -> None:
        """Test f(1, 2, t) = t + 1."""
        assert exact_f(1, 2, t).value == t + 1

    def test_f_with_t_one_is_g(self) -> None:
        """Test f(n, s, 1) = g(n, s)."""
        assert exact_f(2, 3, 1).value == exact_g(2, 3).value

    def test_extremal_labeling(self) -> None:
        """Test the avoider holds no non-increasing 3-set."""
        result = exact_g(2, 3)
        assert result.is_known
        assert result.value is not None
        assert isinstance(result.extremal, PairLabeling)
        assert result.extremal.n_vertices == result.value - 1
        assert extract_non_increasing(result.extremal, 3) is None

    def test_notions_are_ordered(self) -> None:
        """Test weaker notions are forced no later than stronger ones."""
        full, middle, weak = (exact_g(2, 3, notion=notion).value for notion in Notion)
        assert None not in (weak, middle, full)
        assert weak <= middle <= full

    def test_rejects_zero(self) -> None:
        """Test n = 0 is an input error."""
        with pytest.raises(InputError):
            exact_g(0, 3)


class TestOracle:
    """Tests for the async Oracle and its sync wrapper."""

    async def test_async_matches_sync(self) -> None:
        """Test the awaited search gives the sync answer."""
        async with Oracle(n_max=6) as oracle:
            result = await oracle.exact_ordered_ramsey(K3_RED, _blue_path(3))
        assert result.value == 5

    async def test_parallel_matches_serial(self) -> None:
        """Test split prefixes across workers reach the same threshold."""
        async with Oracle(n_max=7, jobs=2, split_depth=2) as oracle:
            result = await oracle.exact_ordered_ramsey(K3_RED, _blue_path(4))
        assert result.value == 7
        assert isinstance(result.extremal, TwoColoring)
        assert brute_force_witness(result.extremal, _blue_path(4)) is None

    async def test_sync_from_async_context(self) -> None:
        """Test the sync wrapper refuses to run inside an event loop."""
        oracle = Oracle()
        with pytest.raises(RuntimeError):
            oracle.sync.exact_g(1, 3)

    async def test_brute_force(self, all_red_6: TwoColoring) -> None:
        """Test the async brute force finds the first red triangle."""
        async with Oracle() as oracle:
            cert = await oracle.brute_force_witness(all_red_6, K3_RED)
        assert cert is not None
        assert cert.vertices == (1, 2, 3)

    def test_vertex_cap(self) -> None:
        """Test instances above the cap are refused."""
        g = TwoColoring.monochromatic(12, Color.RED)
        with pytest.raises(SearchCapExceeded):
            Oracle(vertex_cap=10).sync.brute_force_witness(g, K3_RED)

    def test_labelings_are_refused(self, constant_labels: PairLabeling) -> None:
        """Test brute force only searches colorings."""
        with pytest.raises(InputError):
            brute_force_witness(constant_labels, K3_RED)

    def test_config(self) -> None:
        """Test keyword arguments land in the config."""
        config = Oracle(n_max=5, jobs=3).config
        assert (config.n_max, config.jobs, config.vertex_cap) == (5, 3, 40)


class TestGolden:
    """Tests for golden records and files."""

    def test_line(self) -> None:
        """Test the line layout and its parse."""
        record = GoldenRecord("g", {"n": 2, "s": 3, "notion": "full"}, 5, "g_n2.txt")
        line = record.to_line()
        assert line == "g n=2 s=3 notion=full -> 5, g_n2.txt"
        assert GoldenRecord.from_line(line) == record

    def test_unknown_without_witness(self) -> None:
        """Test unknown values and missing witnesses parse to None."""
        record = GoldenRecord.from_line("ramsey red=clique:3 -> unknown, -")
        assert record.params == {"red": "clique:3"}
        assert record.value is None
        assert record.witness is None

    @pytest.mark.parametrize("line", ["g n=2", "-> 5, -", "g n2 -> 5, -", "g n=2 -> five, -"])
    def test_malformed(self, line: str) -> None:
        """Test malformed lines are format errors."""
        with pytest.raises(FormatError):
            GoldenRecord.from_line(line)

    def test_file(self, tmp_path: Path) -> None:
        """Test a written file carries provenance and reads back."""
        records = [GoldenRecord("f", {"n": 1, "s": 2, "t": 2}, 3), GoldenRecord("g", {}, None)]
        path = write_golden(tmp_path / "golden", "thresholds", records, provenance="unit test")
        lines = path.read_text().splitlines()
        assert path.name == "thresholds.golden"
        assert lines[0] == "# provenance: unit test"
        assert lines[1].startswith("# generated: ")
        assert read_golden(path) == records
