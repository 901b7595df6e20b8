import random

import pytest

from cayleynav.core import (
    MatZ,
    eletter,
    elementary_matrix,
    eval_word_z,
    letter_matrix_z,
    sup_norm,
)
from cayleynav.errors import (
    InternalStateError,
    NotInGroupError,
    UnsupportedDimensionError,
)
from cayleynav.normalform import (
    NormalFormResult,
    column_clear_phase,
    normal_form,
    normal_form_result,
    sign_fix_phase,
    upper_clear_phase,
)


def random_unimodular(rng, n, length):
    m = MatZ.identity(n)
    for _ in range(length):
        i = rng.randrange(1, n + 1)
        j = rng.choice([x for x in range(1, n + 1) if x != i])
        m = m * elementary_matrix(n, i, j, rng.choice([1, -1]))
    return m


def test_identity_gives_empty_word():
    r = normal_form_result(MatZ.identity(3))
    assert len(r.word) == 0
    assert r.phase_lengths == (0, 0, 0)
    assert r.column_norms == (1, 1, 1)
    assert eval_word_z(r.word) == MatZ.identity(3)


def test_single_transvection_power_stays_plain():
    m = MatZ.from_rows([[1, 5, 0], [0, 1, 0], [0, 0, 1]])
    w = normal_form(m)
    assert w.letters == (eletter(1, 2),) * 5
    assert eval_word_z(w) == m


def test_column_clear_is_a_premultiplier():
    m = MatZ.from_rows([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    out, w = column_clear_phase(m, 1)
    assert eval_word_z(w) * m == out
    # pivot row swapped up, displaced row negated
    assert out.rows == ((1, 0, 0), (0, 0, -1), (0, 1, 0))
    assert w.tokens() == "e(1,2) e(2,1)^-1 e(1,2)"


def test_column_clear_random_columns():
    rng = random.Random(12)
    for n in (3, 4, 5):
        for _ in range(10):
            m = random_unimodular(rng, n, 12)
            out, w = column_clear_phase(m, 1)
            assert eval_word_z(w) * m == out
            col = [out.rows[r][0] for r in range(n)]
            assert col[0] in (1, -1)
            assert col[1:] == [0] * (n - 1)


def test_column_clear_second_column_needs_cleared_first():
    m = MatZ.from_rows([[1, 0, 0], [0, 2, 3], [0, 3, 5]])
    out, w = column_clear_phase(m, 2)
    assert eval_word_z(w) * m == out
    assert [out.rows[r][1] for r in range(1, 3)][1] == 0
    with pytest.raises(InternalStateError):
        column_clear_phase(MatZ.from_rows([[0, 0, 1], [1, 0, 0], [0, 1, 0]]), 2)


def test_column_clear_rejects_bad_column_index():
    m = MatZ.identity(3)
    with pytest.raises(InternalStateError):
        column_clear_phase(m, 0)
    with pytest.raises(InternalStateError):
        column_clear_phase(m, 3)


def test_sign_fix_pairs_of_negative_pivots():
    cases = [
        [[-1, 0, 0], [0, -1, 0], [0, 0, 1]],
        [[1, 0, 0], [0, -1, 0], [0, 0, -1]],
        [[-1, 0, 0], [0, 1, 0], [0, 0, -1]],
    ]
    for rows in cases:
        out, w = sign_fix_phase(MatZ.from_rows(rows))
        assert out == MatZ.identity(3)
        assert len(w) == 6
        assert eval_word_z(w) * MatZ.from_rows(rows) == out


def test_sign_fix_negates_whole_rows():
    m = MatZ.from_rows([[-1, 3, 0], [0, -1, 0], [0, 0, 1]])
    out, w = sign_fix_phase(m)
    assert out.rows == ((1, -3, 0), (0, 1, 0), (0, 0, 1))
    assert w.tokens() == "e(1,2) e(2,1)^-1 e(1,2) e(1,2) e(2,1)^-1 e(1,2)"
    assert eval_word_z(w) * m == out


def test_sign_fix_preconditions():
    with pytest.raises(InternalStateError):
        sign_fix_phase(MatZ.from_rows([[1, 0, 0], [2, 1, 0], [0, 0, 1]]))
    with pytest.raises(InternalStateError):
        sign_fix_phase(MatZ.from_rows([[2, 0, 0], [0, 1, 0], [0, 0, 1]]))
    # a lone -1 pivot cannot happen for determinant one input
    with pytest.raises(InternalStateError):
        sign_fix_phase(MatZ.from_rows([[-1, 0, 0], [0, 1, 0], [0, 0, 1]]))


def test_upper_clear_compresses_big_entries():
    m = MatZ.from_rows([[1, 0, 999], [0, 1, 0], [0, 0, 1]])
    out, w = upper_clear_phase(m)
    assert out == MatZ.identity(3)
    assert len(w) == 76
    assert eval_word_z(w) * m == MatZ.identity(3)


def test_upper_clear_requires_unit_diagonal():
    with pytest.raises(InternalStateError):
        upper_clear_phase(MatZ.from_rows([[1, 2, 0], [0, -1, 0], [0, 0, -1]]))
    with pytest.raises(InternalStateError):
        upper_clear_phase(MatZ.from_rows([[1, 0, 0], [3, 1, 0], [0, 0, 1]]))


def test_normal_form_round_trips():
    rng = random.Random(2024)
    for n in (3, 4, 5):
        for _ in range(12):
            m = random_unimodular(rng, n, 25)
            r = normal_form_result(m)
            assert eval_word_z(r.word) == m
            assert sum(r.phase_lengths) == len(r.word)
            assert len(r.column_norms) == n
            assert r.column_norms[0] == sup_norm(m)


def test_normal_form_handles_large_entries():
    m = (
        MatZ.from_rows([[1, 10**9, 0], [0, 1, 0], [0, 0, 1]])
        * MatZ.from_rows([[1, 0, 0], [0, 1, 10**8], [0, 0, 1]])
        * MatZ.from_rows([[1, 0, 0], [7, 1, 0], [0, 0, 1]])
    )
    w = normal_form(m)
    assert eval_word_z(w) == m
    assert len(w) < 500


def test_normal_form_group_membership():
    with pytest.raises(NotInGroupError):
        normal_form(MatZ.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 0]]))
    with pytest.raises(NotInGroupError):
        normal_form(MatZ.from_rows([[0, 1, 0], [1, 0, 0], [0, 0, 1]]))
    with pytest.raises(UnsupportedDimensionError):
        normal_form(MatZ.identity(2))


def test_normal_form_result_record():
    m = MatZ.from_rows([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    r = normal_form_result(m)
    assert isinstance(r, NormalFormResult)
    assert eval_word_z(r.word) == m
    assert r.phase_lengths[1] % 6 == 0
