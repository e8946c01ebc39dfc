"""Closed-form self-consistency and golden values.

Golden energies and spectra below marked as published values are exact
rationals transcribed from the source tables; everything else is verified
against independent recomputation (structural spectra of the closed-form
decomposition, or exact comparisons from the energy definitions).
"""

from fractions import Fraction

import pytest

import cccenergy as cc
from cccenergy.closed_forms import OrderingCase

# Wide formula-only grid: cheap because no group is ever enumerated.
WIDE_GRID = [
    (p, m, n)
    for p in (2, 3, 5, 7)
    for m in range(1, 7)
    for n in range(1, 7)
    if p ** (m + n + 1) <= 10**9
]


def params(p, m, n):
    return cc.make_params(p, m, n, max_order=1 << 200)


class TestCounts:
    @pytest.mark.parametrize(
        "p,m,n,v,e", [(2, 1, 1, 3, 0), (2, 2, 1, 6, 3), (2, 2, 2, 12, 14), (3, 1, 1, 8, 4)]
    )
    def test_examples(self, p, m, n, v, e):
        pr = params(p, m, n)
        assert cc.vertex_count(pr) == v
        assert cc.edge_count(pr) == e

    @pytest.mark.parametrize("p,m,n", WIDE_GRID)
    def test_counts_match_predicted_decomposition(self, p, m, n):
        pr = params(p, m, n)
        decomp = cc.predicted_decomposition(pr)
        assert cc.vertex_count(pr) == decomp.total_vertices
        assert cc.edge_count(pr) == decomp.total_edges


class TestSpectra:
    def test_order_32_adjacency(self):
        adjacency, _, _ = cc.closed_form_spectra(params(2, 2, 2))
        assert adjacency.pairs == ((3, 2), (1, 2), (-1, 8))

    def test_order_32_laplacian_and_signless(self):
        _, laplacian, signless = cc.closed_form_spectra(params(2, 2, 2))
        assert laplacian.pairs == ((4, 6), (2, 2), (0, 4))
        assert signless.pairs == ((6, 2), (2, 8), (0, 2))

    def test_order_27_adjacency(self):
        adjacency, _, _ = cc.closed_form_spectra(params(3, 1, 1))
        assert adjacency.pairs == ((1, 4), (-1, 4))

    @pytest.mark.parametrize("p,m,n", WIDE_GRID)
    def test_spectra_match_predicted_decomposition(self, p, m, n):
        # the printed eigenvalue formulas and the printed decomposition
        # describe the same graph, everywhere
        pr = params(p, m, n)
        decomp = cc.predicted_decomposition(pr)
        adjacency, laplacian, signless = cc.closed_form_spectra(pr)
        assert adjacency == cc.adjacency_spectrum(decomp)
        assert laplacian == cc.laplacian_spectrum(decomp)
        assert signless == cc.signless_spectrum(decomp)

    @pytest.mark.parametrize("p,m,n", WIDE_GRID)
    def test_always_integral(self, p, m, n):
        for spec in cc.closed_form_spectra(params(p, m, n)):
            assert spec.is_integral()


class TestEnergies:
    def test_published_value_2_1_2(self):
        triple = cc.closed_form_energies(params(2, 1, 2))
        assert triple.le == triple.le_plus == Fraction(16, 3)

    def test_published_values_2_2_2(self):
        triple = cc.closed_form_energies(params(2, 2, 2))
        assert triple.e == 16
        assert triple.le == 20
        assert triple.le_plus == Fraction(44, 3)

    def test_published_baseline_k12(self):
        triple = cc.energies_from_decomposition(
            cc.CliqueDecomposition.from_parts([(1, 12)])
        )
        assert triple.le == 22

    def test_n1_collapse(self):
        triple = cc.closed_form_energies(params(2, 2, 1))
        assert triple.e == triple.le == triple.le_plus == 6

    @pytest.mark.parametrize("p,m,n", WIDE_GRID)
    def test_energies_match_predicted_decomposition(self, p, m, n):
        pr = params(p, m, n)
        expected = cc.energies_from_decomposition(cc.predicted_decomposition(pr))
        got = cc.closed_form_energies(pr)
        assert got == expected


class TestOrdering:
    @pytest.mark.parametrize(
        "p,m,n,case",
        [
            (3, 2, 1, OrderingCase.ALL_EQUAL),
            (2, 1, 2, OrderingCase.E_LT_LEP_EQ_LE),
            (2, 2, 2, OrderingCase.LEP_LT_E_LT_LE),
            (2, 4, 2, OrderingCase.E_LT_LEP_LT_LE),
            (3, 2, 2, OrderingCase.E_LT_LEP_LT_LE),
        ],
    )
    def test_examples(self, p, m, n, case):
        assert cc.energy_ordering(params(p, m, n)).case_id is case

    @pytest.mark.parametrize("p,m,n", WIDE_GRID)
    def test_case_matches_exact_comparison(self, p, m, n):
        pr = params(p, m, n)
        ordering = cc.energy_ordering(pr)
        assert cc.ordering_from_triple(ordering.witness) is ordering.case_id

    def test_unmatchable_triple_returns_none(self):
        from cccenergy.spectral import EnergyTriple

        triple = EnergyTriple(
            e=Fraction(5), le=Fraction(4), le_plus=Fraction(3),
            num_vertices=4, num_edges=3,
        )
        assert cc.ordering_from_triple(triple) is None


class TestClassification:
    @pytest.mark.parametrize(
        "p,m,n,l_hyper,q_hyper",
        [
            (2, 1, 1, False, False),
            (2, 2, 2, False, False),
            (2, 3, 2, True, False),
            (2, 1, 3, True, False),
            (2, 4, 2, True, True),
            (3, 2, 2, True, True),
            (2, 2, 3, True, True),
            (2, 4, 4, True, True),
        ],
    )
    def test_examples(self, p, m, n, l_hyper, q_hyper):
        cls = cc.hyper_classification(params(p, m, n))
        assert cls is not None
        assert cls.l_hyperenergetic is l_hyper
        assert cls.q_hyperenergetic is q_hyper
        assert not cls.hyperenergetic
        assert not cls.borderenergetic
        assert not cls.l_borderenergetic
        assert not cls.q_borderenergetic

    def test_uncovered_parameters_return_none(self):
        assert cc.hyper_classification(params(3, 3, 3)) is None
        assert cc.hyper_classification(params(5, 3, 3)) is None

    @pytest.mark.parametrize("p,m,n", WIDE_GRID)
    def test_table_matches_definitions(self, p, m, n):
        pr = params(p, m, n)
        table = cc.hyper_classification(pr)
        direct = cc.classify_from_definitions(cc.closed_form_energies(pr))
        if table is None:
            assert n == 3 and p >= 3
        else:
            assert table == direct

    def test_definitions_on_complete_graph(self):
        triple = cc.energies_from_decomposition(
            cc.CliqueDecomposition.from_parts([(1, 12)])
        )
        cls = cc.classify_from_definitions(triple)
        assert cls.baseline == 22
        assert cls.borderenergetic
        assert cls.l_borderenergetic
        assert cls.q_borderenergetic

    def test_rejects_empty(self):
        from cccenergy.spectral import EnergyTriple

        with pytest.raises(ValueError):
            cc.classify_from_definitions(
                EnergyTriple(Fraction(0), Fraction(0), Fraction(0), 0, 0)
            )


class TestConjecture:
    @pytest.mark.parametrize("p,m,n", WIDE_GRID)
    def test_e_at_most_le_and_lep_at_most_le(self, p, m, n):
        triple = cc.closed_form_energies(params(p, m, n))
        assert triple.e <= triple.le
        assert triple.le_plus <= triple.le
