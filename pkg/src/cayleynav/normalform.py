"""Constructive words for integer unimodular matrices in dimension >= 3.

The matrix is driven to the identity by premultiplications in three phases:
column-by-column gcd clearing below the diagonal, pairwise sign repair of
negative pivots, then compressed clearing of the upper triangle.  Recording
every premultiplication letter in temporal order and inverting each one in
place yields a word whose evaluation is the original matrix.

Entry growth during phase one is steep: clearing column c can square the
magnitudes accumulated so far, so intermediate norms behave like the input
norm raised to 2^c.  The per-column sup norms are reported on the result
for inspection; they do not affect correctness.
"""

from dataclasses import dataclass

from .compression import compress_power
from .core import MatZ, Word, determinant, eletter
from .errors import (
    InternalStateError,
    NotInGroupError,
    UnsupportedDimensionError,
)
from .euclid import accelerated_reduce


def _check_cleared_prefix(rows, col: int) -> None:
    n = len(rows)
    for d in range(col - 1):
        if rows[d][d] not in (1, -1):
            raise InternalStateError(f"pivot at column {d + 1} is {rows[d][d]}, not a unit")
        if any(rows[r][d] != 0 for r in range(d + 1, n)):
            raise InternalStateError(f"column {d + 1} is not cleared below the diagonal")


def _clear_column(rows, col: int) -> list:
    """Zero column col below the diagonal, leaving a unit pivot at (col, col).

    Mutates rows in place and returns the applied letters in temporal order.
    """
    n = len(rows)
    _check_cleared_prefix(rows, col)
    entries = tuple(rows[r][col - 1] for r in range(n))
    if all(v == 0 for v in entries[col - 1:]):
        raise InternalStateError(f"column {col} is zero at and below the diagonal")
    res = accelerated_reduce(entries, n - col + 1)
    for st in res.quotient_steps:
        t, s = st.target - 1, st.source - 1
        rows[t] = [x + st.multiple * y for x, y in zip(rows[t], rows[s])]
    temporal = list(reversed(res.word.letters))
    carrier = next(r for r in range(col, n + 1) if res.final[r - 1] != 0)
    if carrier != col:
        c0, r0 = col - 1, carrier - 1
        rows[c0], rows[r0] = rows[r0], [-x for x in rows[c0]]
        a = eletter(col, carrier)
        b = eletter(carrier, col, -1)
        temporal.extend((a, b, a))
    if rows[col - 1][col - 1] not in (1, -1):
        raise InternalStateError(
            f"gcd of column {col} is {rows[col - 1][col - 1]}, matrix is not unimodular"
        )
    return temporal


def _fix_signs(rows) -> list:
    """Turn -1 pivots into +1 in pairs.  Returns temporal letters."""
    n = len(rows)
    for r in range(n):
        if any(rows[r][c] != 0 for c in range(r)):
            raise InternalStateError("matrix is not upper triangular")
        if rows[r][r] not in (1, -1):
            raise InternalStateError(f"pivot at column {r + 1} is {rows[r][r]}, not a unit")
    neg = [r + 1 for r in range(n) if rows[r][r] == -1]
    if len(neg) % 2:
        raise InternalStateError("odd number of negative pivots, determinant is -1")
    temporal: list = []
    for i, j in zip(neg[0::2], neg[1::2]):
        a = eletter(i, j)
        b = eletter(j, i, -1)
        temporal.extend((a, b, a, a, b, a))
        rows[i - 1] = [-x for x in rows[i - 1]]
        rows[j - 1] = [-x for x in rows[j - 1]]
    return temporal


def _clear_upper(rows) -> list:
    """Zero the strict upper triangle of a unitriangular matrix."""
    n = len(rows)
    for r in range(n):
        if rows[r][r] != 1 or any(rows[r][c] != 0 for c in range(r)):
            raise InternalStateError("matrix is not upper unitriangular")
    temporal: list = []
    for j in range(2, n + 1):
        for i in range(1, j):
            v = rows[i - 1][j - 1]
            if v == 0:
                continue
            chunk = compress_power(n, i, j, -v)
            temporal.extend(reversed(chunk.letters))
            rows[i - 1] = [x - v * y for x, y in zip(rows[i - 1], rows[j - 1])]
    return temporal


def _premultiplier(n: int, temporal) -> Word:
    return Word(n, tuple(reversed(temporal)))


def column_clear_phase(m: MatZ, col: int) -> tuple[MatZ, Word]:
    """One column of phase one.  Returns (new matrix, premultiplier word)."""
    if not (1 <= col <= m.n - 1):
        raise InternalStateError(f"phase one handles columns 1..{m.n - 1}, got {col}")
    rows = [list(r) for r in m.rows]
    temporal = _clear_column(rows, col)
    return MatZ(m.n, tuple(tuple(r) for r in rows)), _premultiplier(m.n, temporal)


def sign_fix_phase(m: MatZ) -> tuple[MatZ, Word]:
    """Phase two on an upper triangular matrix with unit pivots."""
    rows = [list(r) for r in m.rows]
    temporal = _fix_signs(rows)
    return MatZ(m.n, tuple(tuple(r) for r in rows)), _premultiplier(m.n, temporal)


def upper_clear_phase(m: MatZ) -> tuple[MatZ, Word]:
    """Phase three on a unitriangular matrix; the result is the identity."""
    rows = [list(r) for r in m.rows]
    temporal = _clear_upper(rows)
    return MatZ(m.n, tuple(tuple(r) for r in rows)), _premultiplier(m.n, temporal)


@dataclass(frozen=True)
class NormalFormResult:
    """Word for a unimodular matrix plus per-phase diagnostics.

    phase_lengths counts letters contributed by the three phases and
    column_norms lists the sup norm before phase one and after each
    cleared column.
    """

    word: Word
    phase_lengths: tuple[int, int, int]
    column_norms: tuple[int, ...]


def normal_form_result(m: MatZ) -> NormalFormResult:
    """Express m as a word over the elementary generators, with diagnostics."""
    n = m.n
    if n < 3:
        raise UnsupportedDimensionError(f"normal form needs dimension >= 3, got {n}")
    det = determinant(m)
    if det != 1:
        raise NotInGroupError(f"determinant is {det}, not 1")
    rows = [list(r) for r in m.rows]
    norms = [max(abs(x) for row in rows for x in row)]
    t1: list = []
    for col in range(1, n):
        t1.extend(_clear_column(rows, col))
        norms.append(max(abs(x) for row in rows for x in row))
    t2 = _fix_signs(rows)
    t3 = _clear_upper(rows)
    if any(rows[r][c] != (1 if r == c else 0) for r in range(n) for c in range(n)):
        raise InternalStateError("reduction did not reach the identity")
    word = Word(n, tuple(l.inverse() for l in t1 + t2 + t3))
    return NormalFormResult(word, (len(t1), len(t2), len(t3)), tuple(norms))


def normal_form(m: MatZ) -> Word:
    """Word over e(i, j) letters whose evaluation equals m exactly."""
    return normal_form_result(m).word
