"""Synchronization predicates, class membership, exchange moves, and search.

A factorization omega = uv (both parts non-palindromic) is *synchronizing*
when u compares to its reversal the same way v does, under the selected
order (plain or alternating).  Four classes arise per cyclic Abelian class:
all-synchronizing (S), none-synchronizing (U), and their alternating
twins (S_alt, U_alt); a word with no admissible factorization at all is
vacuously in all four.

Exchanging a factorization uv -> u*v preserves the Parikh vector, strictly
increases the cyclic semi-regular continuant across plain non-synchronizing
cuts, and strictly decreases the cyclic regular continuant across
alternating ones.  Directing every non-synchronizing cut this way turns the
reversal-identified class into a DAG whose sinks are exactly the
singular (resp. alt-singular) members; exhaustive search over a class
therefore certifies extremal arrangements together with their class
membership.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Literal, Mapping, Sequence

from .continuants import DomainError, _K, resolve_values
from .words import (
    CyclicWord,
    LinearWord,
    ParikhVector,
    _cmp_alt,
    _cmp_lex,
    _least_rotation,
    _necklaces,
    _splits,
)

Direction = Literal["max", "min"]


class SyncKind(Enum):
    """Which order drives the synchronization predicate."""

    PLAIN = "plain"
    ALT = "alt"

    @property
    def cmp(self):
        return _cmp_lex if self is SyncKind.PLAIN else _cmp_alt


@dataclass(frozen=True)
class ClassMembership:
    """Flags for the four synchronization classes of one cyclic word."""

    in_S: bool
    in_S_alt: bool
    in_U: bool
    in_U_alt: bool


@dataclass(frozen=True)
class SearchReport:
    """Outcome of an exhaustive extremal search over a cyclic Abelian class."""

    parikh: ParikhVector
    valuation: str
    direction: str
    value: int
    optima: tuple[CyclicWord, ...]
    certificates: tuple[ClassMembership, ...]
    unique_up_to_reversal: bool
    class_size: int


def is_synchronizing(
    u: LinearWord, v: LinearWord, kind: SyncKind = SyncKind.PLAIN
) -> bool:
    """True iff u vs u* compares the same way as v vs v* under the kind."""
    if u.alphabet != v.alphabet:
        raise ValueError("words must share an alphabet")
    a, b = u.indices, v.indices
    if a == a[::-1] or b == b[::-1]:
        raise ValueError("synchronization needs both parts non-palindromic")
    cmp = kind.cmp
    return (cmp(a, a[::-1]) < 0) == (cmp(b, b[::-1]) < 0)


def _classify_raw(t: tuple[int, ...]) -> ClassMembership:
    in_s = in_s_alt = in_u = in_u_alt = True
    for u, v in _splits(t):
        ru, rv = u[::-1], v[::-1]
        if (_cmp_lex(u, ru) < 0) == (_cmp_lex(v, rv) < 0):
            in_u = False
        else:
            in_s = False
        if (_cmp_alt(u, ru) < 0) == (_cmp_alt(v, rv) < 0):
            in_u_alt = False
        else:
            in_s_alt = False
        if not (in_s or in_u or in_s_alt or in_u_alt):
            break
    return ClassMembership(in_s, in_s_alt, in_u, in_u_alt)


def classify(omega: CyclicWord) -> ClassMembership:
    """Membership in S, S_alt, U, U_alt; vacuously all true if no split exists."""
    return _classify_raw(omega.indices)


def exchange(
    omega: CyclicWord, split: tuple[LinearWord, LinearWord]
) -> CyclicWord:
    """Cyclic word represented by u*v, for a factorization (u, v) of omega."""
    u, v = split
    if u.alphabet != v.alphabet or u.alphabet != omega.alphabet:
        raise ValueError("split words must share the cyclic word's alphabet")
    a, b = u.indices, v.indices
    if not a or not b:
        raise ValueError("split parts must be non-empty")
    if a == a[::-1] or b == b[::-1]:
        raise ValueError("split parts must be non-palindromic")
    if _least_rotation(a + b) != omega.indices:
        raise ValueError("split is not a factorization of the cyclic word")
    return CyclicWord(LinearWord(omega.alphabet, a[::-1] + b))


def reversal_class_representative(omega: CyclicWord) -> CyclicWord:
    """Canonical label of the reversal-identified pair {omega, omega*}."""
    rev = omega.reverse()
    return omega if omega.indices <= rev.indices else rev


# -- exhaustive extremal search ------------------------------------------------

def _eval_words(
    words: Sequence[tuple[int, ...]], values: tuple[int, ...], sign: int
) -> list[int]:
    out = []
    for t in words:
        w = tuple(values[i] for i in t)
        out.append(_K(w, sign) + sign * _K(w[1:-1], sign))
    return out


def _eval_chunk(args: tuple) -> list[int]:
    return _eval_words(*args)


def search(
    vector: ParikhVector,
    values: Sequence[int] | None = None,
    valuation: str = "semiregular",
    direction: Direction = "max",
    jobs: int = 1,
) -> SearchReport:
    """Exhaustively evaluate the cyclic continuant over a cyclic Abelian class.

    Returns every optimizer (ties are reported, never broken), each with its
    full membership certificate.  Evaluation order is deterministic; with
    jobs > 1 the class is scored in order-preserving parallel chunks.
    """
    if direction not in ("max", "min"):
        raise ValueError(f"direction must be 'max' or 'min', got {direction!r}")
    if vector.total < 1:
        raise ValueError("cannot search the class of the zero vector")
    vals = resolve_values(vector.alphabet, values, valuation)  # type: ignore[arg-type]
    if any(a >= b for a, b in zip(vals, vals[1:])):
        raise DomainError(
            "extremal search needs values strictly increasing with symbol order"
        )
    sign = 1 if valuation == "regular" else -1
    words = list(_necklaces(vector.counts))

    if jobs > 1 and len(words) > 1:
        size = max(1, (len(words) + jobs - 1) // jobs)
        chunks = [words[i : i + size] for i in range(0, len(words), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            scored: list[int] = []
            for part in pool.map(
                _eval_chunk, [(c, vals, sign) for c in chunks]
            ):
                scored.extend(part)
    else:
        scored = _eval_words(words, vals, sign)

    best = max(scored) if direction == "max" else min(scored)
    arg = [t for t, s in zip(words, scored) if s == best]
    alphabet = vector.alphabet
    optima = tuple(CyclicWord(LinearWord(alphabet, t)) for t in arg)
    certificates = tuple(classify(w) for w in optima)
    unique = len(optima) == 1 or (
        len(optima) == 2 and optima[0].reverse() == optima[1]
    )
    return SearchReport(
        parikh=vector,
        valuation=valuation,
        direction=direction,
        value=best,
        optima=optima,
        certificates=certificates,
        unique_up_to_reversal=unique,
        class_size=len(words),
    )


# -- exchange graph -------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class ExchangeGraph:
    """Directed exchange graph on the reversal-identified Abelian class.

    One vertex per pair {omega, omega*}; one edge per non-synchronizing
    factorization, deduplicated per target.  Sinks are exactly the singular
    (resp. alt-singular) members; the graph is acyclic.
    """

    parikh: ParikhVector
    kind: SyncKind
    vertices: tuple[CyclicWord, ...]
    edges: Mapping[CyclicWord, tuple[CyclicWord, ...]]

    def successors(self, vertex: CyclicWord) -> tuple[CyclicWord, ...]:
        return self.edges[vertex]

    def sources(self) -> tuple[CyclicWord, ...]:
        entered = {t for outs in self.edges.values() for t in outs}
        return tuple(v for v in self.vertices if v not in entered)

    def sinks(self) -> tuple[CyclicWord, ...]:
        return tuple(v for v in self.vertices if not self.edges[v])

    def topological_order(self) -> tuple[CyclicWord, ...]:
        """Kahn's algorithm; raises ValueError if a cycle exists."""
        indeg = {v: 0 for v in self.vertices}
        for outs in self.edges.values():
            for t in outs:
                indeg[t] += 1
        queue = [v for v in self.vertices if indeg[v] == 0]
        order = []
        while queue:
            v = queue.pop()
            order.append(v)
            for t in self.edges[v]:
                indeg[t] -= 1
                if indeg[t] == 0:
                    queue.append(t)
        if len(order) != len(self.vertices):
            raise ValueError("exchange graph contains a cycle")
        return tuple(order)

    def is_acyclic(self) -> bool:
        try:
            self.topological_order()
        except ValueError:
            return False
        return True


def build_exchange_graph(
    vector: ParikhVector, kind: SyncKind = SyncKind.PLAIN
) -> ExchangeGraph:
    """Exchange graph of the symmetric cyclic Abelian class of the vector."""
    if vector.total < 1:
        raise ValueError("cannot build the graph of the zero vector")
    alphabet = vector.alphabet
    cmp = kind.cmp

    reps: dict[tuple[int, ...], CyclicWord] = {}
    for t in _necklaces(vector.counts):
        word = CyclicWord(LinearWord(alphabet, t))
        rep = reversal_class_representative(word)
        reps.setdefault(rep.indices, rep)
    vertices = tuple(reps[key] for key in sorted(reps))

    edges: dict[CyclicWord, tuple[CyclicWord, ...]] = {}
    for vertex in vertices:
        targets: set[tuple[int, ...]] = set()
        for u, v in _splits(vertex.indices):
            if (cmp(u, u[::-1]) < 0) != (cmp(v, v[::-1]) < 0):
                moved = _least_rotation(u[::-1] + v)
                rev = _least_rotation(moved[::-1])
                targets.add(min(moved, rev))
        edges[vertex] = tuple(reps[key] for key in sorted(targets))
    return ExchangeGraph(parikh=vector, kind=kind, vertices=vertices, edges=edges)


# -- linear-to-circular bridge ---------------------------------------------------

def check_lintocirc(
    x: LinearWord, j: str, kind: SyncKind = SyncKind.PLAIN
) -> tuple[bool, bool]:
    """Evaluate both sides of the linear/circular singularity bridge.

    cyclic side: the class of x followed by the top letter j lies in S
    (resp. S_alt).
    linear side: every way of writing x as (reverse of u) v w with v
    non-palindromic and u != w satisfies (v < v-reversed) iff (w < u),
    under the kind's order with its prefix conventions; u and w may be
    empty.  Both booleans are computed by brute force; they agree.
    """
    alphabet = x.alphabet
    if alphabet.index(j) != len(alphabet) - 1:
        raise ValueError("j must be the greatest letter of the alphabet")
    t = x.indices
    if not t:
        raise ValueError("x must be non-empty")
    jx = alphabet.index(j)
    if jx in t:
        raise ValueError("x must avoid the letter j")

    cyclic_word = CyclicWord(LinearWord(alphabet, t + (jx,)))
    membership = classify(cyclic_word)
    cyclic_side = membership.in_S if kind is SyncKind.PLAIN else membership.in_S_alt

    cmp = kind.cmp
    n = len(t)
    linear_side = True
    for i in range(n + 1):
        for k in range(i + 2, n + 1):
            v = t[i:k]
            if v == v[::-1]:
                continue
            u = t[:i][::-1]
            w = t[k:]
            if u == w:
                continue
            if (cmp(v, v[::-1]) < 0) != (cmp(w, u) < 0):
                linear_side = False
                break
        if not linear_side:
            break
    return cyclic_side, linear_side
