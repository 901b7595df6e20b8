"""Exact word and matrix algebra for SL_N over Z and over prime fields.

Generators are the elementary transvections e(i, j): the identity matrix
with one extra unit in off-diagonal position (i, j), indices 1-based.  The
two-letter alphabet consists of A = e(1, 2) and B, the cyclic basis shift
whose corner entry (-1)^(N-1) keeps the determinant equal to 1.

Words multiply left to right, eval(w) = M(l_1) * ... * M(l_k).  Acting on a
column vector the rightmost letter acts first, and e(p, q)^s sends entry
a_p to a_p + s * a_q.
"""

from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, InvalidGeneratorError

ELEMENTARY = "elementary"
AB = "ab"


@dataclass(frozen=True, slots=True)
class GenLetter:
    """A single generator symbol with exponent +1 or -1."""

    alphabet: str
    e: int
    i: int = 0
    j: int = 0
    sym: str = ""

    def __post_init__(self):
        if self.e not in (1, -1):
            raise InvalidGeneratorError(f"letter exponent must be +1 or -1, got {self.e}")
        if self.alphabet == ELEMENTARY:
            if self.i < 1 or self.j < 1:
                raise InvalidGeneratorError(f"indices must be 1-based, got ({self.i},{self.j})")
            if self.i == self.j:
                raise InvalidGeneratorError(f"e({self.i},{self.j}) needs i != j")
        elif self.alphabet == AB:
            if self.sym not in ("A", "B"):
                raise InvalidGeneratorError(f"AB symbol must be A or B, got {self.sym!r}")
        else:
            raise InvalidGeneratorError(f"unknown alphabet {self.alphabet!r}")

    def inverse(self) -> "GenLetter":
        if self.alphabet == ELEMENTARY:
            return eletter(self.i, self.j, -self.e)
        return abletter(self.sym, -self.e)

    def token(self) -> str:
        base = f"e({self.i},{self.j})" if self.alphabet == ELEMENTARY else self.sym
        return base + "^-1" if self.e < 0 else base


@lru_cache(maxsize=None)
def eletter(i: int, j: int, e: int = 1) -> GenLetter:
    """Interned elementary letter e(i, j)^e."""
    return GenLetter(ELEMENTARY, e, i, j)


@lru_cache(maxsize=None)
def abletter(sym: str, e: int = 1) -> GenLetter:
    """Interned AB letter A^e or B^e."""
    return GenLetter(AB, e, sym=sym)


@dataclass(frozen=True, slots=True)
class Word:
    """An immutable word over one generator alphabet in dimension n."""

    n: int
    letters: tuple[GenLetter, ...] = ()

    def __post_init__(self):
        if self.n < 2:
            raise DomainError(f"word dimension must be at least 2, got {self.n}")
        if not self.letters:
            return
        first = self.letters[0].alphabet
        n = self.n
        if not all(
            l.alphabet == first and (first == AB or (l.i <= n and l.j <= n))
            for l in self.letters
        ):
            for l in self.letters:
                if l.alphabet != first:
                    raise DomainError("word mixes elementary and AB letters")
                if first == ELEMENTARY and (l.i > n or l.j > n):
                    raise InvalidGeneratorError(
                        f"letter {l.token()} exceeds dimension {n}"
                    )

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def alphabet(self) -> str | None:
        """Alphabet of the word, or None when empty."""
        return self.letters[0].alphabet if self.letters else None

    def __mul__(self, other: "Word") -> "Word":
        if self.n != other.n:
            raise DomainError(f"cannot concatenate words of dimension {self.n} and {other.n}")
        return Word(self.n, self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(self.n, tuple(l.inverse() for l in reversed(self.letters)))

    def free_reduce(self) -> "Word":
        out: list[GenLetter] = []
        for l in self.letters:
            if out and out[-1] is not l and out[-1] == l.inverse():
                out.pop()
            else:
                out.append(l)
        return Word(self.n, tuple(out))

    def tokens(self) -> str:
        return " ".join(l.token() for l in self.letters)

    def __str__(self) -> str:
        return self.tokens()

    def __repr__(self) -> str:
        if len(self.letters) > 8:
            head = " ".join(l.token() for l in self.letters[:8])
            return f"Word(n={self.n}, len={len(self.letters)}, '{head} ...')"
        return f"Word(n={self.n}, '{self.tokens()}')"


def word_inverse(w: Word) -> Word:
    """Reverse the letters and invert each exponent."""
    return w.inverse()


def free_reduce(w: Word) -> Word:
    """Cancel all adjacent inverse pairs."""
    return w.free_reduce()


@dataclass(frozen=True)
class MatZ:
    """Immutable integer matrix, stored as a tuple of row tuples."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.rows) != self.n or any(len(r) != self.n for r in self.rows):
            raise DomainError(f"matrix rows do not form an {self.n}x{self.n} square")

    @classmethod
    def identity(cls, n: int) -> "MatZ":
        return cls(n, tuple(tuple(1 if r == c else 0 for c in range(n)) for r in range(n)))

    @classmethod
    def from_rows(cls, rows) -> "MatZ":
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        return cls(len(rows), rows)

    def __mul__(self, other: "MatZ") -> "MatZ":
        if self.n != other.n:
            raise DomainError("dimension mismatch in matrix product")
        cols = list(zip(*other.rows))
        return MatZ(
            self.n,
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.rows
            ),
        )

    def key(self) -> tuple[int, ...]:
        """Flat row-major entry tuple, usable as a dict key."""
        return tuple(x for row in self.rows for x in row)


@dataclass(frozen=True)
class MatFp:
    """Immutable matrix over the prime field F_p, entries stored in [0, p)."""

    n: int
    p: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise DomainError(f"modulus {self.p} is not prime")
        if len(self.rows) != self.n or any(len(r) != self.n for r in self.rows):
            raise DomainError(f"matrix rows do not form an {self.n}x{self.n} square")
        if any(x < 0 or x >= self.p for row in self.rows for x in row):
            raise DomainError(f"entries must be residues in [0, {self.p})")

    @classmethod
    def identity(cls, n: int, p: int) -> "MatFp":
        return cls(n, p, tuple(tuple(1 if r == c else 0 for c in range(n)) for r in range(n)))

    @classmethod
    def from_rows(cls, rows, p: int) -> "MatFp":
        rows = tuple(tuple(int(x) % p for x in r) for r in rows)
        return cls(len(rows), p, rows)

    def __mul__(self, other: "MatFp") -> "MatFp":
        if self.n != other.n or self.p != other.p:
            raise DomainError("dimension or modulus mismatch in matrix product")
        p = self.p
        cols = list(zip(*other.rows))
        return MatFp(
            self.n,
            p,
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) % p for col in cols)
                for row in self.rows
            ),
        )

    def key(self) -> tuple[int, ...]:
        return tuple(x for row in self.rows for x in row)


def elementary_matrix(n: int, i: int, j: int, e: int = 1) -> MatZ:
    """The transvection e(i, j)^e in dimension n."""
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise InvalidGeneratorError(f"e({i},{j}) invalid in dimension {n}")
    if e not in (1, -1):
        raise InvalidGeneratorError("exponent must be +1 or -1")
    rows = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
    rows[i - 1][j - 1] = e
    return MatZ(n, tuple(tuple(r) for r in rows))


def ab_matrix(n: int, sym: str, e: int = 1) -> MatZ:
    """The generator A (= e(1, 2)) or the shift B, or their inverses."""
    if n < 2:
        raise DomainError(f"A and B need dimension >= 2, got {n}")
    if sym == "A":
        return elementary_matrix(n, 1, 2, e)
    if sym != "B":
        raise InvalidGeneratorError(f"AB symbol must be A or B, got {sym!r}")
    if e not in (1, -1):
        raise InvalidGeneratorError("exponent must be +1 or -1")
    sign = (-1) ** (n - 1)
    rows = [[0] * n for _ in range(n)]
    if e == 1:
        for r in range(n - 1):
            rows[r][r + 1] = 1
        rows[n - 1][0] = sign
    else:
        for r in range(1, n):
            rows[r][r - 1] = 1
        rows[0][n - 1] = sign
    return MatZ(n, tuple(tuple(r) for r in rows))


def letter_matrix_z(letter: GenLetter, n: int) -> MatZ:
    """Integer matrix of a single letter in dimension n."""
    if letter.alphabet == ELEMENTARY:
        return elementary_matrix(n, letter.i, letter.j, letter.e)
    return ab_matrix(n, letter.sym, letter.e)


def apply_letter_z(rows: list[list[int]], letter: GenLetter) -> None:
    """Premultiply the row-list matrix by one letter, in place."""
    if letter.alphabet == ELEMENTARY:
        i, j = letter.i - 1, letter.j - 1
        s = letter.e
        rows[i] = [x + s * y for x, y in zip(rows[i], rows[j])]
    elif letter.sym == "A":
        s = letter.e
        rows[0] = [x + s * y for x, y in zip(rows[0], rows[1])]
    else:
        sign = (-1) ** (len(rows) - 1)
        if letter.e == 1:
            first = rows[0]
            rows[:-1] = rows[1:]
            rows[-1] = [sign * x for x in first]
        else:
            last = rows[-1]
            rows[1:] = rows[:-1]
            rows[0] = [sign * x for x in last]


def apply_letter_fp(rows: list[list[int]], letter: GenLetter, p: int) -> None:
    """Premultiply the row-list matrix by one letter, mod p, in place."""
    if letter.alphabet == ELEMENTARY:
        i, j = letter.i - 1, letter.j - 1
        s = letter.e
        rows[i] = [(x + s * y) % p for x, y in zip(rows[i], rows[j])]
    elif letter.sym == "A":
        s = letter.e
        rows[0] = [(x + s * y) % p for x, y in zip(rows[0], rows[1])]
    else:
        sign = (-1) ** (len(rows) - 1)
        if letter.e == 1:
            first = rows[0]
            rows[:-1] = rows[1:]
            rows[-1] = [sign * x % p for x in first]
        else:
            last = rows[-1]
            rows[1:] = rows[:-1]
            rows[0] = [sign * x % p for x in last]


def eval_word_z(w: Word) -> MatZ:
    """Exact integer product of the word's letters, left to right."""
    rows = [[1 if r == c else 0 for c in range(w.n)] for r in range(w.n)]
    for letter in reversed(w.letters):
        apply_letter_z(rows, letter)
    return MatZ(w.n, tuple(tuple(r) for r in rows))


def eval_word_fp(w: Word, p: int) -> MatFp:
    """Product of the word's letters reduced mod the prime p."""
    if not is_prime(p):
        raise DomainError(f"modulus {p} is not prime")
    rows = [[1 if r == c else 0 for c in range(w.n)] for r in range(w.n)]
    for letter in reversed(w.letters):
        apply_letter_fp(rows, letter, p)
    return MatFp(w.n, p, tuple(tuple(r) for r in rows))


def sup_norm(m: MatZ) -> int:
    """Largest absolute value of an entry."""
    return max(abs(x) for row in m.rows for x in row)


def determinant(m: MatZ) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = m.n
    a = [list(r) for r in m.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def determinant_fp(m: MatFp) -> int:
    """Determinant of a mod-p matrix as a residue in [0, p)."""
    n, p = m.n, m.p
    a = [list(r) for r in m.rows]
    det = 1
    for k in range(n):
        piv = next((r for r in range(k, n) if a[r][k] % p != 0), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det = det * a[k][k] % p
        inv = inverse_mod(a[k][k], p)
        for r in range(k + 1, n):
            f = a[r][k] * inv % p
            if f:
                a[r] = [(x - f * y) % p for x, y in zip(a[r], a[k])]
    return det % p


def mat_fp_inverse(m: MatFp) -> MatFp:
    """Inverse of a mod-p matrix by Gauss-Jordan elimination."""
    n, p = m.n, m.p
    a = [[*m.rows[r], *(1 if c == r else 0 for c in range(n))] for r in range(n)]
    for k in range(n):
        piv = next((r for r in range(k, n) if a[r][k] % p != 0), None)
        if piv is None:
            raise DomainError("matrix is singular mod p")
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
        inv = inverse_mod(a[k][k], p)
        a[k] = [x * inv % p for x in a[k]]
        for r in range(n):
            if r != k and a[r][k]:
                f = a[r][k]
                a[r] = [(x - f * y) % p for x, y in zip(a[r], a[k])]
    return MatFp(n, p, tuple(tuple(row[n:]) for row in a))


def mat_z_mod(m: MatZ, p: int) -> MatFp:
    """Reduce an integer matrix mod the prime p."""
    return MatFp(m.n, p, tuple(tuple(x % p for x in row) for row in m.rows))


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def inverse_mod(a: int, p: int) -> int:
    """Multiplicative inverse of a mod p, via extended Euclid."""
    g, x, _ = xgcd(a % p, p)
    if g != 1:
        raise DomainError(f"{a} is not invertible mod {p}")
    return x % p


def least_abs_residue(m: int, p: int) -> int:
    """Representative of m mod p in the window (-p/2, p/2]."""
    r = m % p
    if r > p // 2:
        r -= p
    return r


_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n below 3.3 * 10^24."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True
