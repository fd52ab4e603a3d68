"""Ordered alphabets, linear and cyclic words, and the two comparison orders.

Words live over a finite totally ordered alphabet.  A cyclic word is the
rotation class of a nonempty linear word, stored through its canonical
representative (the least rotation, found with Booth's algorithm).

Two total orders on linear words are provided.  Both compare by the first
differing position and both carry a non-standard rule for prefix pairs:

* plain order: the smaller letter wins at the first difference, and a word
  is *smaller* than any of its proper prefixes (the reverse of dictionary
  order on prefix pairs).
* alternating order: the comparison sense flips at even positions
  (1-indexed), and for prefix pairs the longer word is smaller exactly when
  the prefix has even length.

These conventions make the plain order the decreasing order of semi-regular
continued-fraction values and the alternating order the decreasing order of
regular ones; the continuants module exposes the quotients used to
cross-check that empirically.

Cyclic Abelian classes (all cyclic words with a given Parikh vector) are
enumerated with an FKM-style fixed-content necklace generator, yielding
each class member exactly once in lexicographic order of canonical
representatives.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Sequence


class Ordering(Enum):
    """Result of a three-way comparison."""

    LESS = -1
    EQUAL = 0
    GREATER = 1


def _as_ordering(c: int) -> Ordering:
    return Ordering.LESS if c < 0 else Ordering.GREATER if c > 0 else Ordering.EQUAL


@dataclass(frozen=True)
class OrderedAlphabet:
    """Finite totally ordered symbol set, optionally with integer values.

    Symbols are ordered by position.  When a value assignment is present it
    must be strictly increasing along the symbol order, with every value a
    positive integer.
    """

    symbols: tuple[str, ...]
    values: tuple[int, ...] | None = None
    _index: dict[str, int] = field(
        init=False, repr=False, compare=False, default_factory=dict
    )

    def __post_init__(self) -> None:
        symbols = tuple(self.symbols)
        object.__setattr__(self, "symbols", symbols)
        if not symbols:
            raise ValueError("alphabet must be non-empty")
        if any(not s for s in symbols):
            raise ValueError("alphabet symbols must be non-empty strings")
        if len(set(symbols)) != len(symbols):
            raise ValueError("alphabet symbols must be distinct")
        if self.values is not None:
            values = tuple(self.values)
            object.__setattr__(self, "values", values)
            if len(values) != len(symbols):
                raise ValueError("one value per symbol required")
            if any(v < 1 for v in values):
                raise ValueError("symbol values must be positive integers")
            if any(a >= b for a, b in zip(values, values[1:])):
                raise ValueError("symbol values must strictly increase with symbol order")
        self._index.update({s: i for i, s in enumerate(symbols)})

    def __len__(self) -> int:
        return len(self.symbols)

    def index(self, symbol: str) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise ValueError(f"symbol {symbol!r} not in alphabet") from None

    def with_values(self, values: Sequence[int]) -> "OrderedAlphabet":
        return OrderedAlphabet(self.symbols, tuple(values))

    def word(self, text: str | Sequence[str]) -> "LinearWord":
        """Parse a word: one character per symbol, or comma-separated tokens."""
        if isinstance(text, str):
            if "," in text:
                parts = [p for p in text.split(",") if p]
            elif all(len(s) == 1 for s in self.symbols):
                parts = list(text)
            else:
                parts = [text] if text else []
        else:
            parts = list(text)
        return LinearWord(self, tuple(self.index(p) for p in parts))

    def cyclic(self, text: str | Sequence[str]) -> "CyclicWord":
        return CyclicWord(self.word(text))

    def vector(self, counts: Sequence[int]) -> "ParikhVector":
        return ParikhVector(self, tuple(counts))


def alphabet_of_size(k: int, values: Sequence[int] | None = None) -> OrderedAlphabet:
    """Default alphabet a < b < c < ... of k letters."""
    if not 1 <= k <= 26:
        raise ValueError("default alphabets support 1..26 letters")
    return OrderedAlphabet(tuple("abcdefghijklmnopqrstuvwxyz"[:k]),
                           tuple(values) if values is not None else None)


@dataclass(frozen=True)
class LinearWord:
    """Finite (possibly empty) sequence of alphabet symbols, stored as indices."""

    alphabet: OrderedAlphabet
    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "indices", tuple(self.indices))
        k = len(self.alphabet)
        if any(not 0 <= i < k for i in self.indices):
            raise ValueError("word contains indices outside the alphabet")

    def __len__(self) -> int:
        return len(self.indices)

    def __str__(self) -> str:
        names = [self.alphabet.symbols[i] for i in self.indices]
        if all(len(n) == 1 for n in self.alphabet.symbols):
            return "".join(names)
        return ",".join(names)

    def __repr__(self) -> str:
        return f"LinearWord({str(self)!r})"

    def __add__(self, other: "LinearWord") -> "LinearWord":
        if other.alphabet != self.alphabet:
            raise ValueError("words must share an alphabet")
        return LinearWord(self.alphabet, self.indices + other.indices)

    def reverse(self) -> "LinearWord":
        return LinearWord(self.alphabet, self.indices[::-1])

    def is_palindrome(self) -> bool:
        return self.indices == self.indices[::-1]

    def parikh(self) -> "ParikhVector":
        return _parikh_of(self.alphabet, self.indices)


@dataclass(frozen=True)
class CyclicWord:
    """Rotation class of a nonempty linear word; stores the least rotation.

    Two cyclic words are equal iff their canonical representatives are.
    """

    word: LinearWord

    def __post_init__(self) -> None:
        t = self.word.indices
        if not t:
            raise ValueError("cyclic words must be non-empty")
        k = least_rotation_index(t)
        if k:
            object.__setattr__(
                self, "word", LinearWord(self.word.alphabet, t[k:] + t[:k])
            )

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return str(self.word)

    def __repr__(self) -> str:
        return f"CyclicWord({str(self)!r})"

    @property
    def alphabet(self) -> OrderedAlphabet:
        return self.word.alphabet

    @property
    def indices(self) -> tuple[int, ...]:
        return self.word.indices

    def rotations(self) -> list[LinearWord]:
        """Distinct linear representatives, canonical first."""
        return [
            LinearWord(self.alphabet, t) for t in _distinct_rotations(self.indices)
        ]

    def reverse(self) -> "CyclicWord":
        return CyclicWord(self.word.reverse())

    def parikh(self) -> "ParikhVector":
        return _parikh_of(self.alphabet, self.indices)


@dataclass(frozen=True)
class ParikhVector:
    """Per-symbol occurrence counts; the key of a cyclic Abelian class."""

    alphabet: OrderedAlphabet
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "counts", tuple(self.counts))
        if len(self.counts) != len(self.alphabet):
            raise ValueError("one count per alphabet symbol required")
        if any(c < 0 for c in self.counts):
            raise ValueError("counts must be non-negative")

    @property
    def total(self) -> int:
        return sum(self.counts)

    def count(self, symbol: str) -> int:
        return self.counts[self.alphabet.index(symbol)]


def _parikh_of(alphabet: OrderedAlphabet, indices: tuple[int, ...]) -> ParikhVector:
    counts = [0] * len(alphabet)
    for i in indices:
        counts[i] += 1
    return ParikhVector(alphabet, tuple(counts))


# -- comparison orders -------------------------------------------------------

def _cmp_lex(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    """Plain order on index tuples; proper prefixes are greater than the word."""
    for x, y in zip(a, b):
        if x != y:
            return -1 if x < y else 1
    if len(a) == len(b):
        return 0
    return -1 if len(a) > len(b) else 1


def _cmp_alt(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    """Alternating order: the sense flips at even (1-indexed) positions.

    Prefix rule: against its proper prefix p, the longer word is smaller
    iff |p| is even.
    """
    for i, (x, y) in enumerate(zip(a, b)):
        if x != y:
            c = -1 if x < y else 1
            return c if i % 2 == 0 else -c
    if len(a) == len(b):
        return 0
    if len(a) > len(b):
        return -1 if len(b) % 2 == 0 else 1
    return 1 if len(a) % 2 == 0 else -1


def _check_same_alphabet(u: LinearWord, v: LinearWord) -> None:
    if u.alphabet != v.alphabet:
        raise ValueError("words must share an alphabet")


def compare_lex(u: LinearWord, v: LinearWord) -> Ordering:
    """Plain order: first difference wins; a proper prefix exceeds the word."""
    _check_same_alphabet(u, v)
    return _as_ordering(_cmp_lex(u.indices, v.indices))


def compare_alt(u: LinearWord, v: LinearWord) -> Ordering:
    """Alternating order: comparison sense flips at even positions."""
    _check_same_alphabet(u, v)
    return _as_ordering(_cmp_alt(u.indices, v.indices))


# -- rotations and canonical form --------------------------------------------

def least_rotation_index(t: Sequence[int]) -> int:
    """Index of the lexicographically least rotation (Booth's algorithm)."""
    n = len(t)
    if n <= 1:
        return 0
    s = tuple(t) + tuple(t)
    f = [-1] * len(s)
    k = 0
    for j in range(1, len(s)):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k % n


def _least_rotation(t: tuple[int, ...]) -> tuple[int, ...]:
    k = least_rotation_index(t)
    return t[k:] + t[:k] if k else t


def _distinct_rotations(t: tuple[int, ...]) -> list[tuple[int, ...]]:
    n = len(t)
    d = t + t
    seen = set()
    out = []
    for i in range(n):
        r = d[i : i + n]
        if r not in seen:
            seen.add(r)
            out.append(r)
    return out


def reverse(w: LinearWord) -> LinearWord:
    return w.reverse()


def reverse_cyclic(omega: CyclicWord) -> CyclicWord:
    return omega.reverse()


def parikh(w: LinearWord | CyclicWord) -> ParikhVector:
    return w.parikh()


def canonicalize(x: LinearWord) -> CyclicWord:
    """Rotation class of x; canonical representative is the least rotation."""
    return CyclicWord(x)


# -- factorizations -----------------------------------------------------------

def _splits(t: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Cuts of every distinct rotation into two non-palindromic parts."""
    for r in _distinct_rotations(t):
        for m in range(1, len(r)):
            u = r[:m]
            if u == u[::-1]:
                continue
            v = r[m:]
            if v == v[::-1]:
                continue
            yield u, v


def split_points(omega: CyclicWord) -> Iterator[tuple[LinearWord, LinearWord]]:
    """Factorizations omega = uv over all rotations, both parts non-palindromic.

    Each (distinct rotation, cut position) pair is yielded at most once, in a
    deterministic order.  Words of length one yield nothing.
    """
    alphabet = omega.alphabet
    for u, v in _splits(omega.indices):
        yield LinearWord(alphabet, u), LinearWord(alphabet, v)


# -- cyclic Abelian class enumeration -----------------------------------------

def _necklaces(counts: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Necklaces (least rotations) with fixed content, in lexicographic order.

    FKM-style prenecklace recursion with remaining-count pruning; a full
    word is emitted when its length is a multiple of its last period.
    """
    n = sum(counts)
    if n == 0:
        return
    k = len(counts)
    rem = list(counts)
    first = next(i for i, c in enumerate(counts) if c)
    a = [0] * (n + 1)
    a[1] = first
    rem[first] -= 1

    def gen(t: int, p: int) -> Iterator[tuple[int, ...]]:
        if t > n:
            if n % p == 0:
                yield tuple(a[1:])
            return
        lo = a[t - p]
        for j in range(lo, k):
            if rem[j]:
                a[t] = j
                rem[j] -= 1
                yield from gen(t + 1, p if j == lo else t)
                rem[j] += 1

    if n == 1:
        yield (first,)
        return
    yield from gen(2, 1)


def enumerate_class(vector: ParikhVector) -> Iterator[CyclicWord]:
    """All cyclic words with the given Parikh vector, each exactly once."""
    if vector.total < 1:
        raise ValueError("cannot enumerate the class of the zero vector")
    alphabet = vector.alphabet
    for t in _necklaces(vector.counts):
        yield CyclicWord(LinearWord(alphabet, t))
