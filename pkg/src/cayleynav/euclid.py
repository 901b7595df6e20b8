"""Gcd engines on integer tuples, driven by row operations.

Two reducers live here.  The subtractive one performs a_p += s * a_q one
unit multiple at a time and exists mainly for its step statistics; its step
count on a pair equals the sum of the continued fraction quotients.  The
accelerated one replaces runs of equal subtractions by a single compressed
power word, so the letter count is logarithmic in the entry size.
"""

import math
from dataclasses import dataclass

from .compression import compress_power
from .core import ELEMENTARY, Word, eletter
from .errors import DomainError

DEFAULT_K = 40


@dataclass(frozen=True, slots=True)
class EuclidStep:
    """One subtractive move a_target += sign * a_source, indices 1-based."""

    target: int
    source: int
    sign: int


@dataclass(frozen=True)
class EuclidTrace:
    """Full record of a subtractive reduction."""

    initial: tuple[int, ...]
    steps: tuple[EuclidStep, ...]
    final: tuple[int, ...]

    @property
    def step_count(self) -> int:
        return len(self.steps)

    def tuples(self) -> list[tuple[int, ...]]:
        """Every intermediate tuple, from initial to final inclusive."""
        vals = list(self.initial)
        out = [self.initial]
        for st in self.steps:
            vals[st.target - 1] += st.sign * vals[st.source - 1]
            out.append(tuple(vals))
        return out

    def word(self) -> Word:
        """Premultiplier word: evaluating it on initial yields final."""
        return Word(
            len(self.initial),
            tuple(eletter(st.target, st.source, st.sign) for st in reversed(self.steps)),
        )


def subtractive_gcd(entries) -> EuclidTrace:
    """Deterministic one-unit-at-a-time reduction of an integer tuple.

    Each move picks p = position of largest absolute value and q = second
    largest (earliest position on ties) and adds -sign(a_p * a_q) times a_q
    to a_p, so the target magnitude strictly drops.  Stops when a single
    nonzero entry remains; that entry is the gcd up to sign.
    """
    vals = [int(x) for x in entries]
    if len(vals) < 2:
        raise DomainError(f"need at least two entries, got {len(vals)}")
    if all(v == 0 for v in vals):
        raise DomainError("all entries are zero, gcd undefined")
    initial = tuple(vals)
    steps: list[EuclidStep] = []
    while sum(1 for v in vals if v != 0) > 1:
        order = sorted(range(len(vals)), key=lambda r: (-abs(vals[r]), r))
        p, q = order[0], order[1]
        s = -1 if vals[p] * vals[q] > 0 else 1
        vals[p] += s * vals[q]
        steps.append(EuclidStep(p + 1, q + 1, s))
    return EuclidTrace(initial, tuple(steps), tuple(vals))


def replay_word_on_tuple(w: Word, entries) -> tuple[int, ...]:
    """Apply an elementary word to a column tuple, rightmost letter first."""
    vals = [int(x) for x in entries]
    if len(vals) != w.n:
        raise DomainError(f"tuple length {len(vals)} does not match dimension {w.n}")
    if w.letters and w.alphabet != ELEMENTARY:
        raise DomainError("column replay is defined for elementary words only")
    for l in reversed(w.letters):
        vals[l.i - 1] += l.e * vals[l.j - 1]
    return tuple(vals)


@dataclass(frozen=True)
class QuotientStep:
    """One division move a_target += multiple * a_source, indices 1-based."""

    target: int
    source: int
    multiple: int


@dataclass(frozen=True)
class AcceleratedResult:
    """Outcome of an accelerated reduction.

    word evaluates to the premultiplier taking initial to final;
    quotient_steps lists the same moves in temporal order, one entry per
    compressed chunk, for O(n) net-effect application.
    """

    word: Word
    initial: tuple[int, ...]
    final: tuple[int, ...]
    quotient_steps: tuple[QuotientStep, ...]


def accelerated_reduce(entries, k: int | None = None) -> AcceleratedResult:
    """Gcd reduction of the trailing k entries using compressed power words.

    A carrier position holds the running gcd; every later nonzero active
    position is folded in by Euclidean division, each quotient realized as
    one compress_power chunk.  With k >= 3 the auxiliary index stays inside
    the active range, so the word only touches the trailing k positions.
    With k == 2 the smallest index outside the range serves as auxiliary.
    """
    vals = [int(x) for x in entries]
    n = len(vals)
    if n < 3:
        raise DomainError(f"accelerated reduction needs dimension >= 3, got {n}")
    if k is None:
        k = n
    if not (2 <= k <= n):
        raise DomainError(f"active length must lie in 2..{n}, got {k}")
    active = list(range(n - k + 1, n + 1))
    if all(vals[a - 1] == 0 for a in active):
        raise DomainError("active entries are all zero, gcd undefined")
    initial = tuple(vals)

    def aux_for(x: int, y: int) -> int:
        if k >= 3:
            return next(a for a in active if a != x and a != y)
        return next(a for a in range(1, n + 1) if a not in active)

    qsteps: list[QuotientStep] = []
    carrier = next(a for a in active if vals[a - 1] != 0)
    for pos in active:
        if pos == carrier or vals[pos - 1] == 0:
            continue
        a, b = carrier, pos
        while vals[b - 1] != 0:
            q = vals[a - 1] // vals[b - 1]
            if q:
                vals[a - 1] -= q * vals[b - 1]
                qsteps.append(QuotientStep(a, b, -q))
            a, b = b, a
        carrier = a

    letters: list = []
    for st in reversed(qsteps):
        chunk = compress_power(n, st.target, st.source, st.multiple, aux_for(st.target, st.source))
        letters.extend(chunk.letters)
    return AcceleratedResult(Word(n, tuple(letters)), initial, tuple(vals), tuple(qsteps))


def step_bound(k: int, max_abs: int, K: float = DEFAULT_K) -> float:
    """Letter budget K * (k - 1) * (1 + ln max_abs) for an accelerated run."""
    if k < 2:
        raise DomainError(f"active length must be at least 2, got {k}")
    if max_abs < 1:
        raise DomainError(f"largest magnitude must be at least 1, got {max_abs}")
    return K * (k - 1) * (1.0 + math.log(max_abs))
