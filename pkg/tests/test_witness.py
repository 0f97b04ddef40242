from dataclasses import replace

import pytest

from pyordramsey import (
    Certificate,
    CertificateKind,
    Color,
    Direction,
    FunctionFamily,
    InputError,
    Notion,
    OrderedForest,
    PairLabeling,
    RedNetCertificate,
    TripleColoring,
    TwoColoring,
    verify_certificate,
)
from pyordramsey.witness import has_blue_ktt, non_increasing_triple

from .conftest import ELEVEN_PARENTS


class TestVerdict:
    """Tests for Verdict."""

    def test_accept_renders(self, all_blue_5: TwoColoring) -> None:
        """Test an accepted verdict is truthy and prints ACCEPT."""
        verdict = verify_certificate(all_blue_5, Certificate.mono_clique(Color.BLUE, [1, 3, 5]))
        assert verdict
        assert str(verdict) == "ACCEPT"

    def test_reject_names_clause(self, pentagon: TwoColoring) -> None:
        """Test a rejection names the clause and the offending pair."""
        verdict = verify_certificate(pentagon, Certificate.mono_clique(Color.BLUE, [1, 2, 3]))
        assert not verdict
        assert verdict.clause == "monochromatic"
        assert verdict.witness == (1, 3)
        assert str(verdict) == "REJECT monochromatic [1, 3]"

    def test_wrong_instance_type(self, constant_labels: PairLabeling) -> None:
        """Test a clique certificate against a labeling is rejected."""
        verdict = verify_certificate(constant_labels, Certificate.mono_clique(Color.RED, [1, 2]))
        assert verdict.clause == "instance_type"

    def test_unordered_vertices(self, all_blue_5: TwoColoring) -> None:
        """Test decreasing vertices fail the ordering clause."""
        verdict = verify_certificate(all_blue_5, Certificate.mono_clique(Color.BLUE, [3, 2]))
        assert verdict.clause == "ordering"

    def test_vertex_out_of_range(self, all_blue_5: TwoColoring) -> None:
        """Test vertex 6 on five vertices fails the range clause."""
        verdict = verify_certificate(all_blue_5, Certificate.mono_clique(Color.BLUE, [1, 6]))
        assert verdict.clause == "vertex_range"


class TestColoringCertificates:
    """Tests for the two-coloring certificate kinds."""

    def test_path_power(self, pentagon: TwoColoring) -> None:
        """Test the blue cycle is a blue monotone path but not its square."""
        assert verify_certificate(pentagon, Certificate.mono_path_power(Color.BLUE, range(1, 6), 1))
        verdict = verify_certificate(
            pentagon, Certificate.mono_path_power(Color.BLUE, range(1, 6), 2)
        )
        assert verdict.clause == "monochromatic"
        assert verdict.witness == (1, 3)

    def test_red_path_on_diagonals(self, pentagon: TwoColoring) -> None:
        """Test 1, 3, 5 is a red path: both steps are diagonals."""
        assert verify_certificate(pentagon, Certificate.mono_path_power(Color.RED, [1, 3, 5], 1))

    def test_blowup(self, all_red_6: TwoColoring) -> None:
        """Test three groups of two in all-red K_6."""
        cert = Certificate.mono_blowup(Color.RED, [(1, 2), (3, 4), (5, 6)])
        assert verify_certificate(all_red_6, cert)
        assert cert.params == {"n": 3, "t": 2}

    def test_blowup_ignores_edges_inside_groups(self) -> None:
        """Test blue edges inside a group do not matter."""
        g = TwoColoring.from_blue_pairs(4, [(1, 2), (3, 4)])
        assert verify_certificate(g, Certificate.mono_blowup(Color.RED, [(1, 2), (3, 4)]))

    def test_blowup_cross_edge(self) -> None:
        """Test a blue edge between consecutive groups is rejected."""
        g = TwoColoring.from_blue_pairs(4, [(2, 3)])
        verdict = verify_certificate(g, Certificate.mono_blowup(Color.RED, [(1, 2), (3, 4)]))
        assert verdict.clause == "monochromatic"
        assert verdict.witness == (2, 3)

    def test_clique_chain(self, all_red_6: TwoColoring) -> None:
        """Test two triangles sharing vertex 3."""
        cert = Certificate.clique_chain(Color.RED, [(1, 2, 3), (3, 4, 5)])
        assert verify_certificate(all_red_6, cert)
        assert cert.vertices == (1, 2, 3, 4, 5)

    def test_clique_chain_endpoint(self, all_red_6: TwoColoring) -> None:
        """Test cliques meeting in a vertex that is not last then first are rejected."""
        cert = Certificate.clique_chain(Color.RED, [(1, 2, 4), (2, 5, 6)])
        assert verify_certificate(all_red_6, cert).clause == "endpoint"

    def test_path_bundle(self, all_blue_5: TwoColoring) -> None:
        """Test two disjoint blue path powers with a total length bound."""
        cert = Certificate.path_bundle([(1, 3, 4), (2, 5)], 1, min_total=5)
        assert verify_certificate(all_blue_5, cert)

    def test_path_bundle_total(self, all_blue_5: TwoColoring) -> None:
        """Test a bundle short of its total is rejected."""
        cert = Certificate.path_bundle([(1, 3), (2, 5)], 1, min_total=5)
        assert verify_certificate(all_blue_5, cert).clause == "total_length"

    def test_path_bundle_overlap(self, all_blue_5: TwoColoring) -> None:
        """Test paths sharing a vertex are rejected."""
        cert = Certificate.path_bundle([(1, 3), (3, 5)], 1)
        assert verify_certificate(all_blue_5, cert).clause == "disjoint"

    def test_ktt_free_family(self, pentagon: TwoColoring) -> None:
        """Test {1}, {3} and {5} have no blue K_{1,1} between 1-3 and 3-5 but 1-5 is blue."""
        ok = Certificate.ktt_free_family([(1, (1,)), (2, (3,))], 1)
        assert verify_certificate(pentagon, ok)
        bad = Certificate.ktt_free_family([(1, (1,)), (2, (3,)), (3, (5,))], 1)
        verdict = verify_certificate(pentagon, bad)
        assert verdict.clause == "ktt_free"
        assert verdict.witness == (1, 3, 1, 5)


class TestHypergraphCertificates:
    """Tests for the 3-uniform certificate kinds."""

    def test_tight_path(self, all_blue_triples: TripleColoring) -> None:
        """Test a blue tight path in the all-blue hypergraph."""
        cert = Certificate.mono_tight_path3(Color.BLUE, [1, 2, 4, 6])
        assert verify_certificate(all_blue_triples, cert)

    def test_tight_path_consecutive_triples_only(self) -> None:
        """Test only consecutive triples of a tight path are checked."""
        h = TripleColoring.from_blue_triples(4, [(1, 2, 3), (2, 3, 4)])
        assert verify_certificate(h, Certificate.mono_tight_path3(Color.BLUE, [1, 2, 3, 4]))
        verdict = verify_certificate(h, Certificate.mono_clique3(Color.BLUE, [1, 2, 3, 4]))
        assert verdict.clause == "monochromatic"
        assert verdict.witness == (1, 2, 4)

    def test_clique3_size_mismatch(self, all_blue_triples: TripleColoring) -> None:
        """Test a clique whose stated size differs from its vertex count is rejected."""
        cert = Certificate.mono_clique3(Color.BLUE, [1, 2, 3])
        assert verify_certificate(all_blue_triples, cert)
        verdict = verify_certificate(all_blue_triples, replace(cert, params={"s": 4}))
        assert verdict.clause == "size"
        assert verdict.witness == (3,)


class TestLabelingCertificates:
    """Tests for certificates on pair labelings."""

    @pytest.fixture
    def descending(self) -> PairLabeling:
        """chi(i, j) = 7 - i on six vertices: forward lexicographic, non-increasing."""
        return PairLabeling.from_function(6, 6, lambda i, j: 7 - i)

    def test_non_increasing(self, descending: PairLabeling) -> None:
        """Test the whole vertex set is non-increasing."""
        assert verify_certificate(descending, Certificate.non_increasing_set(range(1, 7)))

    def test_increasing_rejected(self) -> None:
        """Test chi(i, j) = i breaks the first condition."""
        lab = PairLabeling.from_function(4, 4, lambda i, j: i)
        verdict = verify_certificate(lab, Certificate.non_increasing_set([1, 2, 3]))
        assert verdict.clause == "non_increasing"
        assert verdict.witness == (1, 2, 3)

    def test_third_edge_rejected(self) -> None:
        """Test chi(x, z) outside {chi(x, y), chi(y, z)} breaks the third-edge condition."""
        table = {(1, 2): 2, (2, 3): 1, (1, 3): 3}
        lab = PairLabeling.from_function(3, 3, lambda i, j: table[i, j])
        assert verify_certificate(lab, Certificate.non_increasing_set([1, 2, 3])).clause == (
            "third_edge"
        )
        assert verify_certificate(lab, Certificate.non_increasing_set([1, 2, 3], Notion.WEAK))

    def test_lexicographic(self, descending: PairLabeling) -> None:
        """Test forward lexicographic colors read off the first vertex of each pair."""
        cert = Certificate.lexicographic_set([1, 3, 5], Direction.FORWARD, [6, 4])
        assert verify_certificate(descending, cert)
        backward = Certificate.lexicographic_set([1, 3, 5], Direction.BACKWARD, [6, 4])
        assert verify_certificate(descending, backward).clause == "lexicographic"

    def test_hst_copy(self, descending: PairLabeling) -> None:
        """Test an H_{3,2} copy: three non-increasing vertices then one path step."""
        assert verify_certificate(descending, Certificate.hst_copy([1, 2, 3, 5], 3, 2))
        assert verify_certificate(descending, Certificate.hst_copy([1, 2, 3], 3, 2)).clause == (
            "size"
        )

    def test_label_monotone_path(self) -> None:
        """Test increasing and non-increasing label paths."""
        lab = PairLabeling.from_function(4, 4, lambda i, j: i)
        assert verify_certificate(
            lab, Certificate.label_monotone_path([1, 2, 3, 4], Direction.INCREASING)
        )
        verdict = verify_certificate(
            lab, Certificate.label_monotone_path([1, 2, 3, 4], Direction.NON_INCREASING)
        )
        assert verdict.clause == "monotone"

    def test_label_path_direction(self) -> None:
        """Test a lexicographic direction on a label path is rejected."""
        lab = PairLabeling.from_function(4, 4, lambda i, j: i)
        cert = Certificate.label_monotone_path([1, 2, 3, 4], Direction.INCREASING)
        tampered = replace(cert, aux={"direction": Direction.FORWARD.value})
        assert verify_certificate(lab, tampered).clause == "direction"
        assert verify_certificate(lab, replace(cert, aux={})).clause == "direction"

    def test_label_path_edge_count(self) -> None:
        """Test a path whose stated edge count differs from its vertices is rejected."""
        lab = PairLabeling.from_function(4, 4, lambda i, j: i)
        cert = Certificate.label_monotone_path([1, 2, 3], Direction.INCREASING)
        verdict = verify_certificate(lab, replace(cert, params={"edges": 3}))
        assert verdict.clause == "size"
        assert verdict.witness == (3,)


class TestNonIncreasingTriple:
    """Tests for non_increasing_triple."""

    @pytest.mark.parametrize(
        ("labels", "full", "middle", "weak"),
        [
            ((3, 2, 3), True, True, True),
            ((3, 2, 2), True, True, True),
            ((3, 1, 2), False, True, True),
            ((2, 1, 3), False, False, True),
            ((1, 2, 1), False, False, False),
        ],
    )
    def test_notions(
        self, labels: tuple[int, int, int], full: bool, middle: bool, weak: bool
    ) -> None:
        """Test each notion is weaker than the previous one."""
        assert non_increasing_triple(*labels, Notion.FULL) is full
        assert non_increasing_triple(*labels, Notion.MIDDLE_CHAIN) is middle
        assert non_increasing_triple(*labels, Notion.WEAK) is weak


class TestHasBlueKtt:
    """Tests for has_blue_ktt."""

    def test_finds_first(self, all_blue_5: TwoColoring) -> None:
        """Test the lexicographically first K_{2,2}."""
        assert has_blue_ktt(all_blue_5, [1, 2, 3], [4, 5], 2) == ((1, 2), (4, 5))

    def test_none_in_red(self, all_red_6: TwoColoring) -> None:
        """Test no blue K_{1,1} in all red."""
        assert has_blue_ktt(all_red_6, [1, 2], [3, 4], 1) is None

    def test_overlapping_parts(self, all_blue_5: TwoColoring) -> None:
        """Test overlapping parts are an input error."""
        with pytest.raises(InputError):
            has_blue_ktt(all_blue_5, [1, 2], [2, 3], 1)


class TestOrderedForest:
    """Tests for OrderedForest."""

    @pytest.fixture
    def forest(self) -> OrderedForest:
        return OrderedForest(ELEVEN_PARENTS)

    def test_shape(self, forest: OrderedForest) -> None:
        """Test roots, leaves and depth."""
        assert forest.roots == (1, 9)
        assert forest.leaves == (3, 5, 7, 8, 11)
        assert forest.depth == 2
        assert forest.is_balanced
        assert forest.is_well_ordered

    def test_head_and_tail(self, forest: OrderedForest) -> None:
        """Test the leftmost and rightmost root-to-leaf paths."""
        assert forest.head() == (1, 2, 3)
        assert forest.tail() == (9, 10, 11)

    def test_subforest(self, forest: OrderedForest) -> None:
        """Test the subtrees below the children of the first root."""
        sub = forest.subforest(forest.children(1))
        assert sub.roots == (2, 4, 6)
        assert sub.leaves == (3, 5, 7, 8)

    def test_interleaved_subtrees(self) -> None:
        """Test a subtree reaching past its right sibling breaks the ordering."""
        forest = OrderedForest({1: None, 2: 1, 3: None, 4: 3, 5: 1})
        assert forest.ordering_violation() == (1, 3)

    def test_cycle_rejected(self) -> None:
        """Test a parent cycle is an input error."""
        with pytest.raises(InputError):
            OrderedForest({1: 2, 2: 1})

    def test_chi_forest_certificate(
        self, forest: OrderedForest, eleven_chi: FunctionFamily
    ) -> None:
        """Test the eleven-block forest is a (chi_0, chi_1)-forest."""
        assert verify_certificate(eleven_chi, Certificate.chi_forest(forest, 2))

    def test_chi_forest_dominance(self, eleven_chi: FunctionFamily) -> None:
        """Test hanging 9 under 1 breaks dominance: chi_0(1) = 7 < chi_0(9) = 9."""
        forest = OrderedForest({1: None, 9: 1, 10: 9})
        verdict = verify_certificate(eleven_chi, Certificate.chi_forest(forest, 2))
        assert verdict.clause == "dominance"
        assert verdict.witness == (0, 1, 9)


class TestRedNetCertificate:
    """Tests for RedNetCertificate."""

    @pytest.fixture
    def blocks(self) -> TwoColoring:
        """Blue triangles 1-3 and 4-6, red in between."""
        return TwoColoring.from_blue_pairs(6, [(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)])

    def test_round_trip_and_verify(self, blocks: TwoColoring) -> None:
        """Test a two-root 1-red-net verifies and survives the certificate form."""
        sets = {1: (1, 2, 3), 2: (4, 5, 6)}
        net = RedNetCertificate(OrderedForest.isolated([1, 2]), sets, 1, 3, 1)
        cert = net.to_certificate()
        assert cert.kind is CertificateKind.RED_NET
        assert RedNetCertificate.from_certificate(cert) == net
        assert verify_certificate(blocks, cert)

    def test_sets_must_be_blue(self, all_red_6: TwoColoring) -> None:
        """Test red sets fail the blue-clique clause."""
        net = RedNetCertificate(OrderedForest.isolated([1]), {1: (1, 2, 3)}, 1, 3, 1)
        assert verify_certificate(all_red_6, net.to_certificate()).clause == "blue_clique"

    def test_descendant_ktt(self) -> None:
        """Test a blue K_{1,1} between a node and its child is rejected."""
        sets = {1: (1, 2, 3), 2: (4, 5, 6)}
        net = RedNetCertificate(OrderedForest({1: None, 2: 1}), sets, 2, 3, 1)
        verdict = verify_certificate(TwoColoring.monochromatic(6, Color.BLUE), net.to_certificate())
        assert verdict.clause == "ktt_free"
        assert verdict.witness == (1, 2, 1, 4)


class TestRelabel:
    """Tests for Certificate.relabel."""

    def test_relabel_chain(self) -> None:
        """Test vertices and nested clique lists are mapped."""
        cert = Certificate.clique_chain(Color.RED, [(1, 2), (2, 3)])
        moved = cert.relabel([4, 7, 9])
        assert moved.vertices == (4, 7, 9)
        assert moved.aux["cliques"] == ((4, 7), (7, 9))

    def test_relabel_on_induced(self, pentagon: TwoColoring) -> None:
        """Test a witness on an induced sub-coloring verifies on the host after relabelling."""
        keep = [1, 3, 5]
        sub = pentagon.induced(keep)
        cert = Certificate.mono_path_power(Color.RED, [1, 2], 1)
        assert verify_certificate(sub, cert)
        assert verify_certificate(pentagon, cert.relabel(keep))
