"""Plain-text and JSON encodings for matrices and words.

Matrix text: first line "N" (integer matrix) or "N p" (mod-p matrix),
then N lines of N space-separated integers.

Word text: whitespace-separated tokens e(i,j), e(i,j)^-1, A, A^-1, B, B^-1.
The token stream does not carry the dimension; callers supply it.
"""

import re

from .core import AB, ELEMENTARY, MatFp, MatZ, Word, abletter, eletter
from .errors import ParseError

_TOKEN_RE = re.compile(r"^(?:e\((\d+),(\d+)\)|([AB]))(\^-1)?$")


def parse_word_text(text: str, n: int) -> Word:
    """Parse a token stream into a Word of dimension n."""
    letters = []
    for tok in text.split():
        m = _TOKEN_RE.match(tok)
        if not m:
            raise ParseError(f"bad word token {tok!r}")
        e = -1 if m.group(4) else 1
        try:
            if m.group(3):
                letters.append(abletter(m.group(3), e))
            else:
                letters.append(eletter(int(m.group(1)), int(m.group(2)), e))
        except Exception as exc:
            raise ParseError(f"bad word token {tok!r}: {exc}") from exc
    try:
        return Word(n, tuple(letters))
    except Exception as exc:
        raise ParseError(f"invalid word: {exc}") from exc


def format_word_text(w: Word) -> str:
    return w.tokens()


def parse_matrix_text(text: str) -> MatZ | MatFp:
    """Parse the matrix text format; the header decides Z versus F_p."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty matrix input")
    header = lines[0].split()
    if len(header) not in (1, 2):
        raise ParseError(f"matrix header must be 'N' or 'N p', got {lines[0]!r}")
    try:
        n = int(header[0])
        p = int(header[1]) if len(header) == 2 else None
    except ValueError as exc:
        raise ParseError(f"bad matrix header {lines[0]!r}") from exc
    if len(lines) != n + 1:
        raise ParseError(f"expected {n} matrix rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        try:
            row = [int(x) for x in ln.split()]
        except ValueError as exc:
            raise ParseError(f"bad matrix row {ln!r}") from exc
        if len(row) != n:
            raise ParseError(f"expected {n} entries per row, got {len(row)}")
        rows.append(row)
    try:
        if p is None:
            return MatZ.from_rows(rows)
        return MatFp.from_rows(rows, p)
    except Exception as exc:
        raise ParseError(f"invalid matrix: {exc}") from exc


def format_matrix_text(m: MatZ | MatFp) -> str:
    header = f"{m.n} {m.p}" if isinstance(m, MatFp) else f"{m.n}"
    body = "\n".join(" ".join(str(x) for x in row) for row in m.rows)
    return f"{header}\n{body}\n"


def word_to_json(w: Word) -> dict:
    letters = []
    for l in w.letters:
        if l.alphabet == ELEMENTARY:
            letters.append({"i": l.i, "j": l.j, "e": l.e})
        else:
            letters.append({"sym": l.sym, "e": l.e})
    return {"n": w.n, "alphabet": w.alphabet or ELEMENTARY, "letters": letters}


def word_from_json(obj: dict) -> Word:
    try:
        n = int(obj["n"])
        letters = []
        for d in obj["letters"]:
            e = int(d.get("e", 1))
            if "sym" in d:
                letters.append(abletter(d["sym"], e))
            else:
                letters.append(eletter(int(d["i"]), int(d["j"]), e))
        return Word(n, tuple(letters))
    except ParseError:
        raise
    except Exception as exc:
        raise ParseError(f"invalid word object: {exc}") from exc


def matrix_to_json(m: MatZ | MatFp) -> dict:
    obj = {"n": m.n, "rows": [list(row) for row in m.rows]}
    if isinstance(m, MatFp):
        obj["p"] = m.p
    return obj


def matrix_from_json(obj: dict) -> MatZ | MatFp:
    try:
        rows = obj["rows"]
        if "p" in obj and obj["p"] is not None:
            return MatFp.from_rows(rows, int(obj["p"]))
        return MatZ.from_rows(rows)
    except Exception as exc:
        raise ParseError(f"invalid matrix object: {exc}") from exc
