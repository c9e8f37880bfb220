import itertools

from hypothesis import given, strategies as st

from secrisk import (
    LinguisticTerm,
    MatrixKind,
    embed_term,
    fuse_linguistic,
    fuse_quant,
    fused_term_score,
    fusion_matrix,
    term_score,
)

from reference_tables import EXPECTED_LINGUISTIC_CELLS, EXPECTED_QUANTITATIVE_CELLS

TERMS = list(LinguisticTerm)
terms_strategy = st.sampled_from(TERMS)


def test_quantitative_cells_match_reference_exactly():
    for i, a in enumerate(TERMS):
        for j, b in enumerate(TERMS):
            assert fuse_quant(a, b).value == EXPECTED_QUANTITATIVE_CELLS[i][j], (a, b)


def test_linguistic_cells_match_reference_exactly():
    for i, a in enumerate(TERMS):
        for j, b in enumerate(TERMS):
            assert fuse_linguistic(a, b).code == EXPECTED_LINGUISTIC_CELLS[i][j], (a, b)


def test_both_matrices_consistent_at_every_cell():
    for a, b in itertools.product(TERMS, TERMS):
        assert fused_term_score(fuse_linguistic(a, b)) == fuse_quant(a, b)


def test_fuse_quant_is_the_mean_of_term_scores():
    for a, b in itertools.product(TERMS, TERMS):
        mean = (term_score(a).value + term_score(b).value) / 2  # halves: exact in floats
        assert fuse_quant(a, b).value == mean


@given(terms_strategy, terms_strategy)
def test_fusion_is_symmetric(a, b):
    assert fuse_quant(a, b) == fuse_quant(b, a)
    assert fuse_linguistic(a, b) is fuse_linguistic(b, a)


@given(terms_strategy, terms_strategy, terms_strategy)
def test_fusion_is_monotone_in_each_argument(a, a_prime, b):
    if a.points <= a_prime.points:
        assert fuse_quant(a, b) <= fuse_quant(a_prime, b)


@given(terms_strategy, terms_strategy)
def test_fusion_stays_on_half_grid_in_range(a, b):
    score = fuse_quant(a, b)
    assert 2 <= score.half_units <= 10


def test_diagonal_is_idempotent():
    for term in TERMS:
        assert fuse_quant(term, term) == term_score(term)
        assert fuse_linguistic(term, term) is embed_term(term)


def test_materialized_matrices_expose_all_cells():
    quantitative = fusion_matrix(MatrixKind.QUANTITATIVE)
    linguistic = fusion_matrix(MatrixKind.LINGUISTIC)
    assert len(quantitative.cells) == 25
    assert len(linguistic.cells) == 25
    assert quantitative.cell(LinguisticTerm.VERY_HIGH, LinguisticTerm.VERY_HIGH).value == 5.0
    assert linguistic.cell(LinguisticTerm.VERY_LOW, LinguisticTerm.HIGH).code == "LM"
    for a, b in itertools.product(TERMS, TERMS):
        assert quantitative.cell(a, b) == quantitative.cell(b, a)
        assert linguistic.cell(a, b) is linguistic.cell(b, a)


def test_matrix_rows_and_columns_non_decreasing():
    quantitative = fusion_matrix(MatrixKind.QUANTITATIVE)
    for a in TERMS:
        row = [quantitative.cell(a, b) for b in TERMS]
        col = [quantitative.cell(b, a) for b in TERMS]
        assert row == sorted(row)
        assert col == sorted(col)
