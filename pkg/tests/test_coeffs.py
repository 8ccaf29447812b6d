import pytest

from cycloseq.coeffs import (
    appendix_cell,
    appendix_tables,
    c_coeff,
    c_coeff_by_recurrence,
    c_dim_enumerated,
    c_general,
    c_prime,
    c_tableau,
    c_weight,
    c_weight_enumerated,
    c_weight_tableau,
    pascal_identity_check,
)
from cycloseq.exactmath import binomial, demoivre
from cycloseq.reference_tables import APPENDIX_PUBLISHED, PRINT_DEFECTS


def test_c_coeff_examples():
    assert c_coeff(6, 2, 1) == 2
    assert c_coeff(6, 2, 2) == 3
    assert c_coeff(4, 2, 2) == 1
    assert c_coeff(10, 5, 5) == 1
    assert c_coeff(6, 2, 5) == 0


def test_diagonal_conventions():
    # matrix convention charges the single-column tableau once per cell,
    # tableau convention counts its empty remainder once
    assert c_coeff(7, 7, 0) == 7
    assert c_coeff(7, 7, 0, tableau=True) == 1
    assert c_coeff(7, 7, 2) == 0
    assert c_coeff(7, 7, 2, tableau=True) == 0


def test_recurrence_examples():
    assert c_coeff_by_recurrence(7, 3, 2) == 9
    assert c_coeff_by_recurrence(8, 4, 4) == 1
    assert c_coeff_by_recurrence(9, 4, 3) == 24


@pytest.mark.parametrize("i", range(1, 13))
def test_recurrence_equals_closed_form(i):
    for j in range(0, i + 1):
        for k in range(0, i + 1):
            assert c_coeff_by_recurrence(i, j, k) == c_coeff(i, j, k)


@pytest.mark.parametrize("i", range(1, 13))
def test_row_sum_law(i):
    # total remainders equal the composition count of the source shape
    for j in range(1, i + 1):
        total = sum(c_coeff(i, j, k, tableau=True) for k in range(i + 1))
        assert total == demoivre(j, i)


def test_c_prime_examples():
    assert c_prime(5, 2, 1) == 4
    assert c_prime(6, 3, 1) == 9
    assert c_prime(4, 2, 0) == 1
    assert c_prime(4, 2, 0) == binomial(2, 4 - 2)


def test_c_general_reduces():
    assert c_general(0, 6, 2, 2) == c_coeff(6, 2, 2) == 3
    assert c_general(1, 5, 2, 1) == c_prime(5, 2, 1) == 4
    for i in range(1, 9):
        for j in range(0, i + 1):
            for k in range(0, i + 1):
                assert c_general(0, i, j, k) == c_tableau(i, j, k)
                assert c_general(1, i, j, k) == c_prime(i, j, k)


def test_c_general_deep_chain():
    assert c_general(2, 9, 3, 1) == 24
    # three extra deletions, spot-checked against direct enumeration
    for i, j, k in [(9, 2, 0), (10, 2, 1), (12, 3, 2), (8, 2, 0)]:
        assert c_general(3, i, j, k) == c_dim_enumerated(3, i, j, k)


@pytest.mark.parametrize("s", [0, 1, 2])
def test_dimension_counts_match_enumeration(s):
    for i in range(1, 11):
        for j in range(0, i + 1):
            for k in range(0, i + 1):
                want = c_dim_enumerated(s, i, j, k)
                if s == 0:
                    assert c_tableau(i, j, k) == want
                else:
                    assert c_general(s, i, j, k) == want


@pytest.mark.parametrize("s", [0, 1, 2])
def test_weight_counts_match_enumeration(s):
    for m in range(1, 11):
        for h in range(1, m + 1):
            for g in range(0, m + 1):
                assert c_weight_tableau(s, m, g, h) == c_weight_enumerated(s, m, g, h)


def test_c_weight_examples():
    assert c_weight(1, 7, 3, 3) == 3
    assert c_weight(1, 7, 2, 3) == 9
    for h in range(1, 8):
        assert c_weight(0, 7, 3, h) == binomial(6, 3)


def test_weight_index_range_law():
    # one extra deletion: nonzero weights lie in max(0, m-2h) .. m-h-1,
    # plus the empty remainder at weight 0 when m <= 2h
    for m in range(2, 11):
        for h in range(1, m + 1):
            lo, hi = max(0, m - 2 * h), m - h - 1
            for g in range(0, m + 1):
                v = c_weight_tableau(1, m, g, h)
                if v:
                    assert lo <= g <= max(hi, 0)


def test_appendix_published_cells():
    defects = {
        (d["kind"], d["fixed_index"], d["cell"]): d for d in PRINT_DEFECTS
    }
    checked = 0
    for (kind, fixed), cells in APPENDIX_PUBLISHED.items():
        for (row, col), published in cells.items():
            computed = appendix_cell(kind, fixed, row, col)
            defect = defects.get((kind, fixed, (row, col)))
            if defect is None:
                assert computed == published, (kind, fixed, row, col)
            else:
                assert computed == defect["corrected"]
                assert published == defect["published"] != defect["corrected"]
            checked += 1
    assert checked > 300


def test_appendix_rows_shape():
    blocks = appendix_tables("c_by_k", 2)
    assert len(blocks) == 1
    block = blocks[0]
    assert block["fixed_index"] == 2
    assert block["rows"][11] == [0, 9, 24, 42, 60, 75, 84, 84, 72, 45, 0, 0]
    blocks = appendix_tables("c_by_i", 3)
    assert blocks[0]["rows"][0] == [0, 1, 0, 0, 0, 0]
    assert blocks[0]["rows"][2] == [3, 0, 0, 0, 0, 0]
    with pytest.raises(ValueError):
        appendix_tables("nope")
    with pytest.raises(ValueError):
        appendix_tables("c_by_k", 9)


def test_appendix_cprime_row():
    blocks = appendix_tables("cprime_by_k", 3)
    row12 = blocks[0]["rows"][11]
    assert row12 == [0, 0, 10, 36, 50, 20, 0, 0, 0, 0, 0]


@pytest.mark.parametrize("k", [0, 1, 2])
def test_pascal_identity(k):
    report = pascal_identity_check(k, bound=12)
    assert report["ok"], report["mismatches"]
