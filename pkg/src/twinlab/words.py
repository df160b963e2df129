"""Words in twin groups and the exact word problem.

The twin group on n strands is the right-angled Coxeter group generated by
involutions t_1, ..., t_{n-1} subject only to far commutativity
t_i t_j = t_j t_i for |i - j| >= 2.  A word is geodesic iff no two equal
letters are separated only by letters commuting with both (Tits' criterion
for right-angled Coxeter groups), and two geodesics represent the same
element iff they differ by far-commutativity swaps alone.  This module
implements reduction, a lexicographic normal form on the commutation class,
the permutation image, cyclic reduction, canonical conjugacy
representatives, and the q-generator presentation obtained from coface
maps.

Conventions, used consistently across the package:

* generator indices are 1-based (t_1..t_{n-1});
* reading a letter sequence left to right stacks diagrams top to bottom,
  and a strand is identified by its endpoint on the top line;
* ``nu`` therefore composes left to right: nu(u*w)(a) = nu(w)(nu(u)(a));
* ``w ** g`` with a word g denotes the conjugate g^-1 * w * g.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence


# ---------------------------------------------------------------------------
# letter-level kernels (cached on tuples; reduction is independent of n)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _reduced(letters: tuple[int, ...]) -> tuple[int, ...]:
    """Geodesic word equal to ``letters`` in any twin group containing it.

    Left-to-right stack algorithm: a new letter j cancels the latest earlier
    occurrence of j separated only by letters commuting with j; otherwise it
    is appended.  Idempotent letter-for-letter on reduced input.
    """
    out: list[int] = []
    for j in letters:
        k = len(out) - 1
        while k >= 0:
            d = out[k] - j
            if d == 0:
                del out[k]
                break
            if -1 <= d <= 1:
                out.append(j)
                break
            k -= 1
        else:
            out.append(j)
    return tuple(out)


@lru_cache(maxsize=None)
def _lex_normal(letters: tuple[int, ...]) -> tuple[int, ...]:
    """Lexicographically least geodesic in the commutation class.

    Greedy: among the letters that can be brought to the front (all earlier
    letters commute with them), repeatedly pick the smallest.
    """
    rem = list(_reduced(letters))
    out: list[int] = []
    while rem:
        blocked = 0
        best_v = 0
        best_i = -1
        for i, v in enumerate(rem):
            if not (blocked >> v) & 1 and (best_i < 0 or v < best_v):
                best_v, best_i = v, i
                if v == 1:
                    break
            blocked |= 7 << (v - 1)  # v-1, v, v+1 can no longer reach the front
        out.append(best_v)
        del rem[best_i]
    return tuple(out)


def _postswap(images: tuple[int, ...], j: int) -> tuple[int, ...]:
    """Swap the values j and j+1 in an image tuple (append t_j on the right)."""
    return tuple(j + 1 if v == j else j if v == j + 1 else v for v in images)


# ---------------------------------------------------------------------------
# domain types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}; ``images[a-1]`` is the image of a.

    Products compose left to right: (p * q)(a) = q(p(a)), matching the
    top-to-bottom stacking of twin diagrams.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, j: int) -> "Permutation":
        if not 1 <= j <= n - 1:
            raise ValueError(f"transposition ({j},{j+1}) out of range for n={n}")
        return cls(_postswap(tuple(range(1, n + 1)), j))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, a: int) -> int:
        return self.images[a - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.n != other.n:
            raise ValueError("degree mismatch")
        return Permutation(tuple(other.images[v - 1] for v in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for a, v in enumerate(self.images, start=1):
            inv[v - 1] = a
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == a for a, v in enumerate(self.images, start=1))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        seen = [False] * self.n
        out = []
        for a in range(1, self.n + 1):
            if seen[a - 1]:
                continue
            cyc = [a]
            seen[a - 1] = True
            b = self(a)
            while b != a:
                cyc.append(b)
                seen[b - 1] = True
                b = self(b)
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_count(self) -> int:
        return len(self.cycles(include_fixed=True))

    def __str__(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)


@dataclass(frozen=True)
class TwinWord:
    """A word in the generators t_1..t_{n-1} of the twin group on n strands.

    Immutable; the letter sequence is stored as given (not auto-reduced).
    """

    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"strand count must be >= 1, got {self.n}")
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        for j in letters:
            if not 1 <= j <= self.n - 1:
                raise ValueError(f"letter t{j} out of range for {self.n} strands")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "TwinWord") -> "TwinWord":
        return multiply(self, other)

    def __invert__(self) -> "TwinWord":
        return invert(self)

    def __pow__(self, e) -> "TwinWord":
        if isinstance(e, TwinWord):
            return conjugate(self, e)
        return power(self, e)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"t{j}" for j in self.letters)


def word(n: int, letters: Iterable[int] = ()) -> TwinWord:
    return TwinWord(n, tuple(letters))


def gen(n: int, j: int) -> TwinWord:
    """The generator t_j of the twin group on n strands."""
    return TwinWord(n, (j,))


# ---------------------------------------------------------------------------
# word problem
# ---------------------------------------------------------------------------


def tits_reduce(w: TwinWord) -> TwinWord:
    """A geodesic word representing the same element."""
    return TwinWord(w.n, _reduced(w.letters))


def normal_form(w: TwinWord) -> TwinWord:
    """The lexicographically least geodesic equal to w.

    Two words represent the same element iff their normal forms are equal
    letter for letter.
    """
    return TwinWord(w.n, _lex_normal(w.letters))


def reduced_length(w: TwinWord) -> int:
    return len(_reduced(w.letters))


def is_trivial(w: TwinWord) -> bool:
    return not _reduced(w.letters)


def equal(u: TwinWord, w: TwinWord) -> bool:
    """Exact word-problem equality, as identity of normal forms."""
    if u.n != w.n:
        raise ValueError(f"strand counts differ: {u.n} != {w.n}")
    return _lex_normal(u.letters) == _lex_normal(w.letters)


def multiply(u: TwinWord, w: TwinWord) -> TwinWord:
    if u.n != w.n:
        raise ValueError(f"strand counts differ: {u.n} != {w.n}")
    return TwinWord(u.n, _reduced(u.letters + w.letters))


def invert(w: TwinWord) -> TwinWord:
    """Inverse word: the letters reversed, since every generator is an involution."""
    return TwinWord(w.n, _reduced(w.letters[::-1]))


def power(w: TwinWord, k: int) -> TwinWord:
    if k < 0:
        return power(invert(w), -k)
    out: tuple[int, ...] = ()
    for _ in range(k):
        out = _reduced(out + w.letters)
    return TwinWord(w.n, out)


def conjugate(w: TwinWord, g: TwinWord) -> TwinWord:
    """The conjugate g^-1 * w * g (exponent notation w ** g)."""
    if w.n != g.n:
        raise ValueError(f"strand counts differ: {w.n} != {g.n}")
    return TwinWord(w.n, _reduced(g.letters[::-1] + w.letters + g.letters))


def nu(w: TwinWord) -> Permutation:
    """The permutation image, sending t_j to the transposition (j, j+1).

    ``nu(w)(a)`` is the bottom endpoint of the strand whose top endpoint is a.
    """
    img = list(range(1, w.n + 1))
    pos = [0] + list(range(w.n))  # pos[v] = index a-1 with img[a-1] == v
    for j in w.letters:
        a, b = pos[j], pos[j + 1]
        img[a], img[b] = j + 1, j
        pos[j], pos[j + 1] = b, a
    return Permutation(tuple(img))


def is_pure(w: TwinWord) -> bool:
    return nu(w).is_identity()


# ---------------------------------------------------------------------------
# cyclic reduction and conjugacy representatives
# ---------------------------------------------------------------------------


def cyclic_reduce(w: TwinWord) -> TwinWord:
    """Shorten w by (reduce; rotate one letter front to back; repeat).

    Returns the first minimal-length representative found under the
    deterministic rotation schedule; every cyclic permutation of the result
    is itself reduced.
    """
    letters = _reduced(w.letters)
    improved = True
    while improved:
        improved = False
        m = len(letters)
        for k in range(1, m):
            red = _reduced(letters[k:] + letters[:k])
            if len(red) < m:
                letters = red
                improved = True
                break
    return TwinWord(w.n, letters)


def min_length_conjugates(w: TwinWord) -> frozenset[tuple[int, ...]]:
    """Normal forms of all minimal-length conjugates reachable by
    length-nonincreasing generator conjugations.

    Conjugating by a generator preserves length exactly when it rotates a
    letter of some geodesic spelling around the word (or fixes the element),
    so this orbit is the set of cyclic rearrangements of the cyclic
    reduction.
    """
    v = _lex_normal(cyclic_reduce(w).letters)
    while True:
        seen = {v}
        queue: deque[tuple[int, ...]] = deque([v])
        shorter = None
        while queue and shorter is None:
            u = queue.popleft()
            for j in range(1, w.n):
                c = _lex_normal((j,) + u + (j,))
                if len(c) < len(u):
                    shorter = c
                    break
                if len(c) == len(u) and c not in seen:
                    seen.add(c)
                    queue.append(c)
        if shorter is None:
            return frozenset(seen)
        v = shorter


def canonical_conjugacy_rep(w: TwinWord) -> TwinWord:
    """Deterministic conjugacy-class representative: the lexicographically
    least normal form among all minimal-length conjugates."""
    return TwinWord(w.n, min(min_length_conjugates(w)))


# ---------------------------------------------------------------------------
# geodesic coset representatives in the symmetric group image
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _geodesic_reps(n: int) -> dict[tuple[int, ...], tuple[int, ...]]:
    """images-tuple -> lexicographically least geodesic word with that image.

    Breadth-first search appending generators in ascending order enumerates
    words in (length, lex) order, so the first word reaching a permutation
    is its lex-least geodesic representative.
    """
    start = tuple(range(1, n + 1))
    reps: dict[tuple[int, ...], tuple[int, ...]] = {start: ()}
    queue: deque[tuple[int, ...]] = deque([start])
    while queue:
        img = queue.popleft()
        w = reps[img]
        for j in range(1, n):
            nxt = _postswap(img, j)
            if nxt not in reps:
                reps[nxt] = w + (j,)
                queue.append(nxt)
    return reps


def lex_geodesic_rep(p: Permutation) -> TwinWord:
    """The lex-least geodesic twin word whose permutation image is p."""
    return TwinWord(p.n, _geodesic_reps(p.n)[p.images])


# ---------------------------------------------------------------------------
# sampling helpers
# ---------------------------------------------------------------------------


def random_word(n: int, length: int, rng: random.Random) -> TwinWord:
    if n < 2:
        return TwinWord(n)
    return TwinWord(n, tuple(rng.randint(1, n - 1) for _ in range(length)))


def random_pure_word(n: int, length: int, rng: random.Random) -> TwinWord:
    """A pseudo-random pure twin: a random word times the lex-least geodesic
    undoing its permutation, reduced."""
    w = random_word(n, length, rng)
    tail = lex_geodesic_rep(nu(w).inverse())
    return multiply(w, tail)


# ---------------------------------------------------------------------------
# q-generator presentation
# ---------------------------------------------------------------------------


def q_generators(n: int) -> list[TwinWord]:
    """The generators q_1..q_n of the twin group on n+1 strands.

    q_k = t_n ... t_{k+1} t_k t_{k+1} ... t_n for k <= n-1 and q_n = t_n;
    equivalently q_k is the iterated coface image of t_k.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    out = []
    for k in range(1, n):
        desc = tuple(range(n, k, -1))
        out.append(TwinWord(n + 1, desc + (k,) + desc[::-1]))
    out.append(TwinWord(n + 1, (n,)))
    return out


def q_presentation(n: int):
    """Return (q_1..q_n, report) checking the q-generator relations inside
    the twin group on n+1 strands:

    (1) each q_i is an involution,
    (2) q_{i+1} q_i q_{i+1} commutes with q_n for i < n-1,
    (3) the far commutators [q_{i+1}q_iq_{i+1}, q_{j+1}q_jq_{j+1}] vanish,
    and the recovery t_k = q_{k+1} q_k q_{k+1} of the Coxeter generators.
    """
    from .report import Report
    from .strands import coface

    qs = q_generators(n)
    report = Report(f"q-presentation of the twin group on {n + 1} strands")

    # the closed-form words agree with the iterated coface definition
    for k in range(1, n):
        via_coface = TwinWord(k + 1, (k,))
        for i in range(k, n):
            via_coface = coface(via_coface, i)
        report.add(
            f"q{k} matches d^{n-1}...d^{k}(t{k})",
            equal(qs[k - 1], via_coface),
            str(qs[k - 1]),
        )
    report.add(f"q{n} matches d^{n-2}(t{n-1})",
               equal(qs[n - 1], coface(TwinWord(n, (n - 1,)), n - 2)), str(qs[n - 1]))

    def comm(a: TwinWord, b: TwinWord) -> TwinWord:
        return multiply(multiply(a, b), multiply(invert(a), invert(b)))

    one = TwinWord(n + 1)
    for i, q in enumerate(qs, start=1):
        report.add(f"q{i}^2 = 1", equal(multiply(q, q), one))
    for i in range(1, n - 1):
        lhs = multiply(multiply(qs[i], qs[i - 1]), qs[i])
        report.add(f"[q{i+1} q{i} q{i+1}, q{n}] = 1", equal(comm(lhs, qs[n - 1]), one))
    for i in range(1, n):
        for j in range(1, i):
            if i - j > 2:
                u = multiply(multiply(qs[i], qs[i - 1]), qs[i])
                v = multiply(multiply(qs[j], qs[j - 1]), qs[j])
                report.add(f"[q{i+1} q{i} q{i+1}, q{j+1} q{j} q{j+1}] = 1",
                           equal(comm(u, v), one))
    for k in range(1, n):
        rhs = multiply(multiply(qs[k], qs[k - 1]), qs[k])
        report.add(f"t{k} = q{k+1} q{k} q{k+1}",
                   equal(TwinWord(n + 1, (k,)), rhs))
    return qs, report
