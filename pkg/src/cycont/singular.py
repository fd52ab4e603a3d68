"""Singular cyclic words: delta arithmetic, insertion maps, and construction.

A cyclic word is *singular* when every factorization into two
non-palindromic parts is synchronizing under the plain order
(*alt-singular* for the alternating order).  Singular words are exactly the
words that admit no strictly improving exchange move, hence every maximizer
of the cyclic semi-regular continuant within its Abelian class is singular.

For a Parikh vector v and a letter b,

    delta_b(v) = sum of counts above b - sum of counts below b.

Scanning the totals of [0, N] split into per-letter sections, the midpoint
of the interval either falls inside a single section (one letter with
n_b > |delta_b|) or on the boundary between two positive sections (a pair
with n = |delta|, zeros in between); ``midpoint_case`` reports which.

The insertion map xi_b adds one b to every run of consecutive b and one b
inside every adjacent pair whose letters lie strictly on the same side
of b.  It preserves singularity whenever delta_b != 0, adds exactly
|delta_b| occurrences of b to a singular word, and is invertible on its
image (erase one b per run).  This drives the constructor: repeatedly find
the least letter b with n_b >= |delta_b| and strip |delta_b| occurrences,
until the remaining vector is a power of a single letter (success: unwind
the xi maps from that constant seed) or is not (failure; singular words
with that vector, if any, are only reachable by exhaustive search).  On
success the output is the unique singular cyclic word with the requested
vector, and it is a cyclic palindrome.

One descent detail: when the remaining vector is a pair of equal counts
n(e_x + e_y), both letters satisfy the descent inequality with opposite
delta signs and either subtraction reaches a terminal single-letter vector;
we subtract the greater letter, so that the terminal seed is a power of the
smaller one.  Outputs are unaffected by this choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .extremal import SyncKind, classify
from .words import CyclicWord, LinearWord, OrderedAlphabet, ParikhVector


def _delta(counts: Sequence[int], b: int) -> int:
    return sum(counts[b + 1 :]) - sum(counts[:b])


def delta(vector: ParikhVector, symbol: str) -> int:
    """delta_b(v): occurrences above b minus occurrences below b."""
    return _delta(vector.counts, vector.alphabet.index(symbol))


def delta_profile(vector: ParikhVector) -> tuple[int, ...]:
    """All delta_b values in alphabet order (antitone, step n_b + n_b')."""
    return tuple(_delta(vector.counts, b) for b in range(len(vector.alphabet)))


@dataclass(frozen=True)
class SingleLetter:
    """Midpoint falls inside one letter's section: n_b > |delta_b|."""

    letter: str


@dataclass(frozen=True)
class LetterPair:
    """Midpoint falls on a section boundary: n = |delta| > 0 at both ends."""

    low: str
    high: str


MidpointCase = SingleLetter | LetterPair


def midpoint_case(vector: ParikhVector) -> MidpointCase:
    """Classify a non-zero vector by where the half-total lands."""
    counts = vector.counts
    if vector.total < 1:
        raise ValueError("midpoint case of the zero vector is undefined")
    symbols = vector.alphabet.symbols
    for b, n in enumerate(counts):
        if n > abs(_delta(counts, b)):
            return SingleLetter(symbols[b])
    boundary = [
        b for b, n in enumerate(counts) if n > 0 and n == abs(_delta(counts, b))
    ]
    low, high = boundary
    return LetterPair(symbols[low], symbols[high])


# -- insertion maps ---------------------------------------------------------------

def _xi_linear(b: int, t: tuple[int, ...]) -> tuple[int, ...]:
    out: list[int] = []
    n = len(t)
    for i, s in enumerate(t):
        out.append(s)
        if s == b and (i + 1 == n or t[i + 1] != b):
            out.append(b)
        if i + 1 < n:
            e = t[i + 1]
            if (s > b and e > b) or (s < b and e < b):
                out.append(b)
    return tuple(out)


def _xi_cyclic(b: int, t: tuple[int, ...]) -> tuple[int, ...]:
    """Apply xi_b through an arbitrary linear representative t."""
    if all(s == b for s in t):
        return t + (b,)
    y = _xi_linear(b, t)
    first, last = t[0], t[-1]
    if (first > b and last > b) or (first < b and last < b):
        y = y + (b,)
    elif first == b and last == b:
        y = y[:-1]
    return y


def xi_linear(b: str, x: LinearWord) -> LinearWord:
    """Insert one b into each b-run and between same-side adjacent letters."""
    bi = x.alphabet.index(b)
    return LinearWord(x.alphabet, _xi_linear(bi, x.indices))


def xi_cyclic(b: str, omega: CyclicWord) -> CyclicWord:
    """Cyclic insertion map; the result class is representative-independent."""
    bi = omega.alphabet.index(b)
    return CyclicWord(LinearWord(omega.alphabet, _xi_cyclic(bi, omega.indices)))


def _erase_one_per_run(b: int, t: tuple[int, ...]) -> tuple[int, ...]:
    out: list[int] = []
    i, n = 0, len(t)
    while i < n:
        if t[i] == b:
            j = i
            while j < n and t[j] == b:
                j += 1
            out.extend([b] * (j - i - 1))
            i = j
        else:
            out.append(t[i])
            i += 1
    return tuple(out)


def _in_xi_image(b: int, t: tuple[int, ...], cyclic: bool) -> bool:
    n = len(t)
    pairs = range(n) if cyclic else range(n - 1)
    for i in pairs:
        s, e = t[i], t[(i + 1) % n]
        if (s > b and e > b) or (s < b and e < b):
            return False
    mids = range(n) if cyclic else range(1, n - 1)
    for i in mids:
        if t[i] != b:
            continue
        s, e = t[i - 1], t[(i + 1) % n]
        if (s < b < e) or (s > b > e):
            return False
    if cyclic:
        return t != (b,)
    if t == (b,):
        return False
    if n >= 2 and t[0] == b and t[1] != b:
        return False
    if n >= 2 and t[-1] == b and t[-2] != b:
        return False
    return True


def xi_preimage(
    b: str, w: LinearWord | CyclicWord
) -> LinearWord | CyclicWord | None:
    """The unique x with xi_b(x) = w, or None when w is not an image.

    Image membership: no adjacent pair strictly on one side of b, no
    ascending or descending triple through b, and (linear case only) no
    lone b at the start, end, or as the whole word; cyclically only the
    one-letter word b is excluded.  Inversion erases one b from each run.
    """
    alphabet = w.alphabet
    bi = alphabet.index(b)
    if isinstance(w, CyclicWord):
        t = w.indices
        if not _in_xi_image(bi, t, cyclic=True):
            return None
        if all(s == bi for s in t):
            return CyclicWord(LinearWord(alphabet, t[:-1]))
        r = next(i for i, s in enumerate(t) if s != bi)
        rotated = t[r:] + t[:r]
        return CyclicWord(LinearWord(alphabet, _erase_one_per_run(bi, rotated)))
    if not _in_xi_image(bi, w.indices, cyclic=False):
        return None
    return LinearWord(alphabet, _erase_one_per_run(bi, w.indices))


# -- constructor ------------------------------------------------------------------

@dataclass(frozen=True)
class ConstructionStep:
    """One descent step: the vector reached after removing delta letters."""

    vector: ParikhVector
    letter: str
    delta: int


@dataclass(frozen=True)
class ConstructionTrace:
    """Full record of a constructor run, successful or not."""

    start: ParikhVector
    steps: tuple[ConstructionStep, ...]
    terminal: ParikhVector
    seed_letter: str
    words: tuple[CyclicWord, ...] | None

    @property
    def succeeded(self) -> bool:
        return self.words is not None

    @property
    def outcome(self) -> CyclicWord | None:
        return self.words[-1] if self.words else None


def _descent_letter(counts: tuple[int, ...]) -> int:
    nonzero = [i for i, c in enumerate(counts) if c]
    if len(nonzero) == 2 and counts[nonzero[0]] == counts[nonzero[1]]:
        return nonzero[1]
    for b, n in enumerate(counts):
        if n >= abs(_delta(counts, b)):
            return b
    raise AssertionError("every non-zero vector admits a descent letter")


def construct_singular(
    vector: ParikhVector,
) -> tuple[CyclicWord | None, ConstructionTrace]:
    """Build the unique singular cyclic word with the given Parikh vector.

    Repeatedly removes |delta_b| occurrences of the least letter b with
    n_b >= |delta_b| until delta vanishes at the letter found; succeeds iff
    the terminal vector is a power of that letter, in which case the word
    is recovered by unwinding the insertion maps from the constant seed.
    On failure the outcome is None and the trace records the descent.
    """
    alphabet = vector.alphabet
    if vector.total < 1:
        raise ValueError("cannot construct from the zero vector")
    symbols = alphabet.symbols
    counts = vector.counts
    steps: list[ConstructionStep] = []
    letters: list[int] = []
    while True:
        b = _descent_letter(counts)
        d = _delta(counts, b)
        if d == 0:
            break
        reduced = list(counts)
        reduced[b] -= abs(d)
        counts = tuple(reduced)
        steps.append(
            ConstructionStep(ParikhVector(alphabet, counts), symbols[b], abs(d))
        )
        letters.append(b)

    terminal = ParikhVector(alphabet, counts)
    trace_base = dict(
        start=vector,
        steps=tuple(steps),
        terminal=terminal,
        seed_letter=symbols[b],
    )
    if any(c for i, c in enumerate(counts) if i != b):
        return None, ConstructionTrace(words=None, **trace_base)

    seed = CyclicWord(LinearWord(alphabet, (b,) * counts[b]))
    words = [seed]
    for letter in reversed(letters):
        words.append(
            CyclicWord(LinearWord(alphabet, _xi_cyclic(letter, words[-1].indices)))
        )
    outcome = words[-1]
    return outcome, ConstructionTrace(words=tuple(words), **trace_base)


def is_singular(omega: CyclicWord, kind: SyncKind = SyncKind.PLAIN) -> bool:
    """True iff every factorization of omega is synchronizing under the kind."""
    membership = classify(omega)
    return membership.in_S if kind is SyncKind.PLAIN else membership.in_S_alt


# -- the binary case ----------------------------------------------------------------

_AB = OrderedAlphabet(("a", "b"))


def christoffel(
    p: int, q: int, alphabet: OrderedAlphabet | None = None
) -> CyclicWord:
    """Cyclic lower Christoffel word with p low and q high letters.

    Non-coprime counts give the g-th power of the primitive word,
    g = gcd(p, q).  The result is balanced, singular, and the unique such
    cyclic word in its Abelian class.
    """
    if alphabet is None:
        alphabet = _AB
    if len(alphabet) != 2:
        raise ValueError("Christoffel words live on a two-letter alphabet")
    if p < 0 or q < 0 or p + q < 1:
        raise ValueError("need non-negative counts with p + q >= 1")
    if p == 0:
        t: tuple[int, ...] = (1,) * q
    elif q == 0:
        t = (0,) * p
    else:
        g = gcd(p, q)
        pp, qq = p // g, q // g
        n = pp + qq
        primitive = tuple(
            0 if (k * qq) % n > ((k - 1) * qq) % n else 1 for k in range(1, n + 1)
        )
        t = primitive * g
    return CyclicWord(LinearWord(alphabet, t))


def is_balanced(omega: CyclicWord) -> bool:
    """Any two equal-length cyclic factors differ by at most one in counts."""
    if len(omega.alphabet) != 2:
        raise ValueError("balance is defined over a two-letter alphabet")
    t = omega.indices
    n = len(t)
    doubled = t + t
    for length in range(1, n + 1):
        c = sum(1 for s in doubled[:length] if s == 0)
        lo = hi = c
        for i in range(1, n):
            c += (doubled[i + length - 1] == 0) - (doubled[i - 1] == 0)
            lo = min(lo, c)
            hi = max(hi, c)
            if hi - lo > 1:
                return False
    return True
