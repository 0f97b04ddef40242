from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pyordramsey import (
    CertificateKind,
    Color,
    Direction,
    EnumerationBudgetExceeded,
    InputError,
    Notion,
    PairLabeling,
    PatternSpec,
    Strategy,
    TripleColoring,
    brute_force_witness,
    extract_3uniform_clique_vs_tightpath,
    extract_hst,
    extract_lexicographic_nonincreasing,
    extract_non_increasing,
    find_hst_copy,
    generate_random,
    iter_hst_copies,
    iter_non_increasing_sets,
    lexicographic_from_weak,
    tightpath_reduction,
    trace_tight_path,
    verify_certificate,
    weakly_lex_decompose,
)
from pyordramsey.canonical import is_weakly_lexicographic
from pyordramsey.witness import hst_violation, non_increasing_violation

from .settings import QUICK


def _labels(n: int, n_colors: int, seed: int) -> PairLabeling:
    lab = generate_random("labels", n, n_colors=n_colors, seed=seed)
    assert isinstance(lab, PairLabeling)
    return lab


def _descending(n: int) -> PairLabeling:
    """chi(i, j) = n + 1 - i: every subset is non-increasing and forward lexicographic."""
    return PairLabeling.from_function(n, n, lambda i, j: n + 1 - i)


class TestTightPathReduction:
    """Tests for tightpath_reduction and trace_tight_path."""

    def test_all_blue(self, all_blue_triples: TripleColoring) -> None:
        """Test chi(x, y) = x + 1 when every triple is blue."""
        lab = tightpath_reduction(all_blue_triples)
        assert all(lab.labels[x][y] == x + 1 for x, y in combinations(range(1, 7), 2))
        assert trace_tight_path(all_blue_triples, lab, 5, 6) == [1, 2, 3, 4, 5, 6]

    def test_all_red(self) -> None:
        """Test no blue triple leaves every label at 2."""
        lab = tightpath_reduction(TripleColoring.monochromatic(5, Color.RED))
        assert {lab.labels[x][y] for x, y in combinations(range(1, 6), 2)} == {2}

    @QUICK
    @given(st.integers(3, 5), st.integers(0, 10_000))
    def test_agrees_with_brute_force(self, n: int, seed: int) -> None:
        """Test a label reaches n exactly when a blue tight path on n vertices exists."""
        h = generate_random("triples", 7, p_blue=0.6, seed=seed)
        assert isinstance(h, TripleColoring)
        lab = tightpath_reduction(h)
        longest = max(lab.labels[x][y] for x, y in combinations(range(1, 8), 2))
        found = brute_force_witness(h, PatternSpec.tight_path3(n, Color.BLUE))
        assert (longest >= n) == (found is not None)


class TestExtract3Uniform:
    """Tests for extract_3uniform_clique_vs_tightpath."""

    def test_blue_tight_path(self, all_blue_triples: TripleColoring) -> None:
        """Test all blue gives the first blue tight path on four vertices."""
        cert = extract_3uniform_clique_vs_tightpath(all_blue_triples, 3, 4)
        assert cert is not None
        assert cert.kind is CertificateKind.MONO_TIGHT_PATH3
        assert cert.vertices == (1, 2, 3, 4)

    def test_red_clique(self) -> None:
        """Test all red gives a red K_3^(3) from a non-increasing set."""
        h = TripleColoring.monochromatic(5, Color.RED)
        cert = extract_3uniform_clique_vs_tightpath(h, 3, 3)
        assert cert is not None
        assert cert.kind is CertificateKind.MONO_CLIQUE3
        assert cert.vertices == (1, 2, 3)

    def test_rejects_small_parameters(self, all_blue_triples: TripleColoring) -> None:
        """Test s = 2 is an input error."""
        with pytest.raises(InputError):
            extract_3uniform_clique_vs_tightpath(all_blue_triples, 2, 4)

    @QUICK
    @given(st.integers(0, 10_000))
    def test_random_witnesses_verify(self, seed: int) -> None:
        """Test any witness returned on a random hypergraph verifies."""
        h = generate_random("triples", 8, seed=seed)
        assert isinstance(h, TripleColoring)
        cert = extract_3uniform_clique_vs_tightpath(h, 3, 4)
        if cert is not None:
            assert verify_certificate(h, cert)


class TestNonIncreasingSets:
    """Tests for iter_non_increasing_sets and extract_non_increasing."""

    def test_constant_labels(self, constant_labels: PairLabeling) -> None:
        """Test every 3-set of a constant labeling qualifies, in lexicographic order."""
        sets = list(iter_non_increasing_sets(constant_labels, 3))
        assert len(sets) == 56
        assert sets[0] == (1, 2, 3)
        assert sets == sorted(sets)

    def test_increasing_labels(self) -> None:
        """Test chi(i, j) = i has no non-increasing 3-set."""
        lab = PairLabeling.from_function(6, 6, lambda i, j: i)
        assert next(iter_non_increasing_sets(lab, 3), None) is None
        assert extract_non_increasing(lab, 3) is None

    def test_node_budget(self, constant_labels: PairLabeling) -> None:
        """Test the search stops once the node budget is spent."""
        with pytest.raises(EnumerationBudgetExceeded):
            list(iter_non_increasing_sets(constant_labels, 3, node_budget=10))

    @QUICK
    @given(st.integers(0, 10_000))
    def test_notions_are_nested(self, seed: int) -> None:
        """Test full sets are middle-chain sets and middle-chain sets are weak sets."""
        lab = _labels(7, 3, seed)
        full = set(iter_non_increasing_sets(lab, 3, Notion.FULL))
        middle = set(iter_non_increasing_sets(lab, 3, Notion.MIDDLE_CHAIN))
        weak = set(iter_non_increasing_sets(lab, 3, Notion.WEAK))
        assert full <= middle <= weak

    @QUICK
    @given(st.integers(3, 4), st.integers(0, 10_000))
    def test_sets_verify(self, s: int, seed: int) -> None:
        """Test every enumerated set passes the verifier's triple check."""
        lab = _labels(8, 2, seed)
        for vertices in iter_non_increasing_sets(lab, s):
            assert non_increasing_violation(lab, vertices) is None

    @pytest.mark.parametrize("strategy", list(Strategy))
    def test_strategies(self, constant_labels: PairLabeling, strategy: Strategy) -> None:
        """Test both strategies find a verified 4-set."""
        cert = extract_non_increasing(constant_labels, 4, strategy)
        assert cert is not None
        assert verify_certificate(constant_labels, cert)
        assert len(cert.vertices) == 4

    def test_recursion_is_full_only(self, constant_labels: PairLabeling) -> None:
        """Test the recursion refuses weaker notions."""
        with pytest.raises(InputError):
            extract_non_increasing(constant_labels, 3, Strategy.PROOF_RECURSION, Notion.WEAK)


class TestHst:
    """Tests for H_{s,t} copies."""

    def test_first_copy(self) -> None:
        """Test the first H_{3,2} in a descending labeling."""
        assert find_hst_copy(_descending(6), 3, 2) == (1, 2, 3, 4)

    def test_copies_verify(self) -> None:
        """Test every enumerated copy has the right shape."""
        lab = _labels(7, 3, seed=11)
        for copy in iter_hst_copies(lab, 2, 3):
            assert hst_violation(lab, copy, 2, 3) is None

    def test_budget_without_fallback(self) -> None:
        """Test an exhausted copy budget surfaces when the fallback is off."""
        with pytest.raises(EnumerationBudgetExceeded):
            extract_hst(_descending(8), 3, 2, budget=1, fallback=False)

    def test_budget_with_fallback(self) -> None:
        """Test the direct search answers once the budget runs out."""
        lab = _descending(8)
        cert = extract_hst(lab, 3, 2, budget=1)
        assert cert is not None
        assert verify_certificate(lab, cert)

    @QUICK
    @given(st.integers(2, 3), st.integers(1, 2), st.integers(0, 10_000))
    def test_random_copies_verify(self, s: int, t: int, seed: int) -> None:
        """Test the recursion returns verified copies or nothing."""
        lab = _labels(9, 2, seed)
        cert = extract_hst(lab, s, t)
        if cert is not None:
            assert cert.params == {"s": s, "t": t}
            assert verify_certificate(lab, cert)


class TestLexicographic:
    """Tests for weak-lex decomposition and lexicographic sets."""

    def test_weak_decomposition(self) -> None:
        """Test a descending labeling peels the first vertex at every level."""
        lab = _descending(6)
        structure = weakly_lex_decompose(lab, range(1, 7), 3)
        assert structure.vertices == (1, 2, 3)
        assert structure.items == (Direction.FORWARD,)
        assert is_weakly_lexicographic(lab, structure.vertices)

    def test_decomposition_needs_size(self) -> None:
        """Test fewer than 2^(s-1) vertices is an input error."""
        with pytest.raises(InputError):
            weakly_lex_decompose(_descending(6), [1, 2, 3], 3)

    def test_decomposition_needs_non_increasing(self) -> None:
        """Test an input set that is not non-increasing is rejected."""
        lab = PairLabeling.from_function(4, 4, lambda i, j: i)
        with pytest.raises(InputError):
            weakly_lex_decompose(lab, [1, 2, 3, 4], 3)

    def test_forward_from_weak(self) -> None:
        """Test the combination keeps the forward item."""
        lab = _descending(8)
        structure = weakly_lex_decompose(lab, range(1, 9), 4)
        cert = lexicographic_from_weak(lab, structure, 3, 3)
        assert cert.vertices == (1, 2, 3)
        assert cert.aux["direction"] == Direction.FORWARD.value
        assert cert.aux["colors"] == (8, 7)
        assert verify_certificate(lab, cert)

    @QUICK
    @given(st.integers(0, 10_000))
    def test_random_decompositions(self, seed: int) -> None:
        """Test every decomposed non-increasing 4-set is weakly lexicographic."""
        lab = _labels(9, 2, seed)
        for vertices in iter_non_increasing_sets(lab, 4):
            structure = weakly_lex_decompose(lab, vertices, 3)
            assert set(structure.vertices) <= set(vertices)
            assert is_weakly_lexicographic(lab, structure.vertices)

    def test_lexicographic_descending(self) -> None:
        """Test the pipeline on a labeling that is non-increasing throughout."""
        lab = _descending(8)
        cert = extract_lexicographic_nonincreasing(lab, 3)
        assert cert is not None
        assert cert.vertices == (1, 2, 3)
        assert verify_certificate(lab, cert)

    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_lexicographic_two_colors(self, seed: int) -> None:
        """Test two colors on twenty vertices always give a verified lexicographic 3-set."""
        lab = _labels(20, 2, seed)
        cert = extract_lexicographic_nonincreasing(lab, 3, node_budget=5_000)
        assert cert is not None
        assert cert.aux["nonincreasing_colors"]
        assert verify_certificate(lab, cert)
