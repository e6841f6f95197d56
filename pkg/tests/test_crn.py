from fractions import Fraction

import pytest

from toricnet.crn import (
    Network,
    analyze,
    birch_point,
    build_rate_matrix,
    cayley_matrix,
    conservation_laws,
    deficiency,
    is_weakly_reversible,
    linkage_classes,
    parse_network,
    simulate,
    stoichiometric_matrix,
    strong_components,
    toric_binomials,
    tree_constants,
)
from toricnet.crn.trees import matrix_tree_cofactor
from toricnet.errors import (
    InputError,
    NotComplexBalanced,
    NotWeaklyReversible,
    ParseError,
)
from toricnet.exactcore import SparsePoly

TRIANGLE = "A -> B : 1\nB -> C : 1\nC -> A : 1"
BRIDGE = "2A <-> A + B : k1, k2\nA + B <-> 2B : k3, k4"


class TestParser:
    def test_species_first_appearance_order(self):
        net = parse_network("2A -> A+B : k1")
        assert net.species == ("A", "B")
        assert net.n_complexes == 2
        assert len(net.reactions) == 1
        assert net.reactions[0].rate == "k1"

    def test_reversible_sugar(self):
        net = parse_network("A <-> B : 1, 2")
        assert len(net.reactions) == 2
        assert net.reactions[0].rate == Fraction(1)
        assert net.reactions[1].rate == Fraction(2)
        assert net.reactions[0].source == net.reactions[1].target

    def test_comments_and_blank_lines(self):
        net = parse_network("# header\n\nA -> B : 1  # inline\n")
        assert net.n_complexes == 2

    def test_empty_complex(self):
        net = parse_network("0 -> A : 1")
        assert net.complexes[0] == (0,)

    def test_inline_binding(self):
        net = parse_network("A -> B : k1 = 3/2")
        assert net.bindings == {"k1": Fraction(3, 2)}

    def test_loop_rejected(self):
        with pytest.raises(ParseError):
            parse_network("A -> A : 1")

    def test_zero_coefficient_rejected(self):
        with pytest.raises(ParseError):
            parse_network("0A -> B : 1")

    def test_conflicting_inline_binding(self):
        with pytest.raises(ParseError):
            parse_network("A -> B : k = 1\nB -> A : k = 2")

    def test_no_reactions(self):
        with pytest.raises(ParseError):
            parse_network("# nothing here")

    def test_nonpositive_rate(self):
        with pytest.raises(ParseError):
            parse_network("A -> B : 0")

    def test_complex_label(self):
        net = parse_network("2A + B -> C : 1")
        assert net.complex_label(0) == "2A + B"


class TestStructure:
    def test_triangle_analysis(self):
        net = parse_network(TRIANGLE)
        info = analyze(net)
        assert len(info.linkage_classes) == 1
        assert info.weakly_reversible
        assert info.stoich_rank == 2
        assert info.deficiency == 0

    def test_bridge_analysis(self):
        net = parse_network(BRIDGE)
        info = analyze(net)
        assert info.deficiency == 1
        assert info.cayley == ((2, 1, 0), (0, 1, 2), (1, 1, 1))

    def test_not_weakly_reversible(self):
        net = parse_network("A -> B : 1")
        assert not is_weakly_reversible(net)
        assert deficiency(net) == 0

    def test_multi_class(self):
        net = parse_network("A <-> B : 1, 1\nC <-> D : 1, 1")
        assert len(linkage_classes(net)) == 2
        assert len(strong_components(net)) == 2
        assert deficiency(net) == 0

    def test_rate_matrix_columns_sum_zero(self):
        net = parse_network(TRIANGLE)
        a = build_rate_matrix(net, None)
        n = net.n_complexes
        for j in range(n):
            assert sum(a[i][j] for i in range(n)) == 0

    def test_rate_matrix_symbolic(self):
        net = parse_network(BRIDGE)
        a = build_rate_matrix(net, None)
        assert isinstance(a[1][0], SparsePoly)
        assert a[1][0] == SparsePoly.variable("k1")

    def test_rate_matrix_binding_override(self):
        net = parse_network("A -> B : k1 = 2")
        a = build_rate_matrix(net, {"k1": Fraction(5)})
        assert a[1][0] == Fraction(5)

    def test_unbound_symbol(self):
        net = parse_network("A -> B : k9")
        with pytest.raises(InputError):
            build_rate_matrix(net, {})

    def test_cayley_shape(self):
        net = parse_network("A <-> B : 1, 1\nC <-> D : 1, 1")
        cay = cayley_matrix(net)
        # 4 species rows + 2 class indicator rows
        assert len(cay) == 6
        assert list(cay[4]) == [1, 1, 0, 0]
        assert list(cay[5]) == [0, 0, 1, 1]


class TestTrees:
    def test_triangle_symbolic(self):
        net = parse_network("A -> B : k1\nB -> C : k2\nC -> A : k3")
        k = tree_constants(net)
        k1, k2, k3 = (SparsePoly.variable(f"k{i}") for i in (1, 2, 3))
        assert k == [k2 * k3, k1 * k3, k1 * k2]

    def test_triangle_numeric(self):
        net = parse_network("A -> B : 2\nB -> C : 3\nC -> A : 5")
        assert tree_constants(net) == [15, 10, 6]

    def test_cofactor_row_choice_immaterial(self):
        net = parse_network("A -> B : k1\nB -> C : k2\nC -> A : k3")
        a = build_rate_matrix(net, None)
        k = tree_constants(net)
        for root in range(3):
            for row in range(3):
                assert matrix_tree_cofactor(a, root, row) == k[root]

    def test_kernel_identity(self):
        net = parse_network("A -> B : k1\nB -> C : k2\nC -> A : k3")
        a = build_rate_matrix(net, None)
        k = tree_constants(net)
        for i in range(3):
            acc = SparsePoly.zero()
            for j in range(3):
                acc = acc + a[i][j] * k[j]
            assert acc.is_zero()

    def test_not_weakly_reversible_refused(self):
        net = parse_network("A -> B : 1")
        with pytest.raises(NotWeaklyReversible):
            tree_constants(net)


class TestToric:
    def test_bridge_binomials(self):
        net = parse_network(BRIDGE)
        bins = toric_binomials(net)
        assert [b.text for b in bins] == ["K1*K3 - K2^2"]

    def test_triangle_binomials_empty(self):
        assert toric_binomials(parse_network(TRIANGLE)) == []

    def test_birch_triangle_unit(self):
        st = birch_point(parse_network(TRIANGLE))
        assert st.residual < 1e-9
        assert max(abs(c - 1.0) for c in st.concentrations) < 1e-9
        assert st.normalization == "min-norm-log"

    def test_birch_balanced_bridge(self):
        # k2*k3 == k1*k4 makes the bridge complex balanced
        net = parse_network("2A <-> A + B : 2, 3\nA + B <-> 2B : 4, 6")
        st = birch_point(net)
        assert st.residual < 1e-9
        a, b = st.concentrations
        # tree constants (18, 12, 8): Birch point has b/a = K3/K2 = 2/3
        assert abs(b / a - 2 / 3) < 1e-9

    def test_birch_unbalanced_refused(self):
        net = parse_network("2A <-> A + B : 1, 1\nA + B <-> 2B : 1, 2")
        with pytest.raises(NotComplexBalanced):
            birch_point(net)


class TestSimulate:
    def test_exponential_decay(self):
        import math

        net = parse_network("A -> B : 1")
        traj = simulate(net, None, [1.0, 0.0], t_end=1.0, dt=0.001)
        assert abs(traj.final[0] - math.exp(-1.0)) < 1e-9
        assert abs(sum(traj.final) - 1.0) < 1e-12

    def test_triangle_converges_to_birch(self):
        net = parse_network(TRIANGLE)
        traj = simulate(net, None, [3.0, 0.0, 0.0], t_end=40.0, dt=0.01)
        assert max(abs(c - 1.0) for c in traj.final) < 1e-8

    def test_negative_c0_rejected(self):
        net = parse_network(TRIANGLE)
        with pytest.raises(InputError):
            simulate(net, None, [-1.0, 1.0, 1.0], t_end=1.0, dt=0.1)

    def test_bad_dt_rejected(self):
        net = parse_network(TRIANGLE)
        with pytest.raises(InputError):
            simulate(net, None, [1.0, 1.0, 1.0], t_end=1.0, dt=0.0)

    def test_conservation_laws(self):
        laws = conservation_laws(parse_network(TRIANGLE))
        assert laws == [[Fraction(1), Fraction(1), Fraction(1)]]

    def test_stoichiometric_matrix(self):
        s = stoichiometric_matrix(parse_network("A -> B : 1"))
        assert s == [[-1], [1]]
