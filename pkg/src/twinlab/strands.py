"""Strand-level operations on twin words.

``delete_strand`` removes a strand (a face map), ``coface`` inserts one,
``double_strand`` doubles one (a degeneracy map), and ``add_strand_left``
prepends a trivial strand.  Indices for all four maps are 0-based: index i
acts on the (i+1)-th strand, identified by its endpoint on the top line.

Deleting is not a homomorphism on full twin groups but satisfies the
composition law  d_i(u w) = d_i(u) d_{nu(u)(i+1)-1}(w);  restricted to pure
twins all four maps are homomorphisms, faces and degeneracies satisfy the
simplicial identities, and faces with cofaces satisfy the bi-Delta
identities.  ``verify_simplicial_identities`` checks all of this on
pseudo-random words.
"""

from __future__ import annotations

import random

from .report import Report
from .words import (
    TwinWord,
    equal,
    invert,
    is_pure,
    multiply,
    nu,
    random_pure_word,
    random_word,
    tits_reduce,
)

COFACE_VARIANTS = ("standard", "mirror")


def delete_strand(w: TwinWord, i: int) -> TwinWord:
    """Delete the (i+1)-th strand, yielding a word on n-1 strands.

    Scans left to right tracking the current position p of the marked
    strand: a crossing involving it is dropped (and p updated), crossings
    left of it are kept, crossings right of it shift down by one.
    """
    n = w.n
    if n < 2:
        raise ValueError("cannot delete a strand from the 1-strand group")
    if not 0 <= i <= n - 1:
        raise ValueError(f"strand index {i} out of range for {n} strands")
    p = i + 1
    out = []
    for j in w.letters:
        if j == p:
            p += 1
        elif j == p - 1:
            p -= 1
        elif j < p - 1:
            out.append(j)
        else:
            out.append(j - 1)
    return tits_reduce(TwinWord(n - 1, tuple(out)))


def coface(w: TwinWord, i: int, variant: str = "standard") -> TwinWord:
    """Insert a trivial strand at position i+1 (group homomorphism).

    On generators: t_j -> t_j for j < i, t_j -> t_{j+1} for j > i, and
    t_i -> t_{i+1} t_i t_{i+1} ("standard") or t_i t_{i+1} t_i ("mirror").
    Satisfies delete_strand(coface(w, i), i) = w.
    """
    if not 0 <= i <= w.n:
        raise ValueError(f"coface index {i} out of range for {w.n} strands")
    if variant not in COFACE_VARIANTS:
        raise ValueError(f"unknown coface variant {variant!r}")
    out: list[int] = []
    for j in w.letters:
        if j < i:
            out.append(j)
        elif j > i:
            out.append(j + 1)
        elif variant == "standard":
            out.extend((i + 1, i, i + 1))
        else:
            out.extend((i, i + 1, i))
    return tits_reduce(TwinWord(w.n + 1, tuple(out)))


def double_strand(w: TwinWord, i: int) -> TwinWord:
    """Double the (i+1)-th strand, yielding a word on n+1 strands.

    The doubled pair occupies positions p, p+1 where p tracks the strand
    through the diagram: a crossing with the neighbour on either side
    becomes two crossings, the single strand crossing the nearer cabled
    strand first; other crossings keep or shift their index.  Restricted to
    pure twins this is the degeneracy homomorphism s_i.
    """
    n = w.n
    if not 0 <= i <= n - 1:
        raise ValueError(f"strand index {i} out of range for {n} strands")
    p = i + 1
    out: list[int] = []
    for j in w.letters:
        if j + 1 < p:
            out.append(j)
        elif j > p:
            out.append(j + 1)
        elif j == p:
            out.extend((p + 1, p))
            p += 1
        else:  # j + 1 == p
            out.extend((p - 1, p))
            p -= 1
    return tits_reduce(TwinWord(n + 1, tuple(out)))


def add_strand_left(w: TwinWord) -> TwinWord:
    """Add a trivial strand on the left: shift every letter index by one.

    A group homomorphism with delete_strand(add_strand_left(w), 0) = w; it
    is the extra degeneracy making the simplicial pure twin groups
    contractible.
    """
    return TwinWord(w.n + 1, tuple(j + 1 for j in w.letters))


# ---------------------------------------------------------------------------
# identity suites
# ---------------------------------------------------------------------------


def _sample_words(n: int, samples: int, rng: random.Random, pure: bool):
    maker = random_pure_word if pure else random_word
    return [maker(n, rng.randint(0, 14), rng) for _ in range(samples)]


def simplicial_identity_cases(w: TwinWord):
    """Yield (name, lhs, rhs) word pairs for the five simplicial identities
    of the pair (delete_strand, double_strand) instantiated at w."""
    n = w.n
    d, s = delete_strand, double_strand
    for j in range(1, n):
        for i in range(j):
            if n >= 3:
                yield (f"d{i} d{j} = d{j-1} d{i}", d(d(w, j), i), d(d(w, i), j - 1))
            yield (f"d{i} s{j} = s{j-1} d{i}", d(s(w, j), i), s(d(w, i), j - 1))
    for j in range(n):
        for i in range(j + 1):
            yield (f"s{i} s{j} = s{j+1} s{i}", s(s(w, j), i), s(s(w, i), j + 1))
    for j in range(n):
        sj = s(w, j)
        yield (f"d{j} s{j} = id", d(sj, j), w)
        yield (f"d{j+1} s{j} = id", d(sj, j + 1), w)
        for i in range(j + 2, n + 1):
            yield (f"d{i} s{j} = s{j} d{i-1}", d(sj, i), s(d(w, i - 1), j))


def bidelta_identity_cases(w: TwinWord, variant: str = "standard"):
    """Yield (name, lhs, rhs) word pairs for the five bi-Delta identities of
    (delete_strand, coface) instantiated at w."""
    n = w.n
    d = delete_strand

    def c(u, i):
        return coface(u, i, variant)

    if n >= 3:
        for i in range(n):
            for j in range(i, n - 1):
                yield (f"d{j} d{i} = d{i} d{j+1}", d(d(w, i), j), d(d(w, j + 1), i))
    for i in range(n + 1):
        for j in range(i + 1):
            yield (f"d^{j} d^{i} = d^{i+1} d^{j}", c(c(w, i), j), c(c(w, j), i + 1))
        ci = c(w, i)
        yield (f"d{i} d^{i} = id", d(ci, i), w)
        for j in range(i):
            if j <= n - 1:
                yield (f"d{j} d^{i} = d^{i-1} d{j}", d(ci, j), c(d(w, j), i - 1))
        for j in range(i + 1, n + 1):
            yield (f"d{j} d^{i} = d^{i} d{j-1}", d(ci, j), c(d(w, j - 1), i))


def verify_simplicial_identities(n: int, samples: int = 50, seed: int = 0,
                                 max_n: int = 9) -> Report:
    """Check the simplicial and bi-Delta identity suites on pseudo-random
    pure twins on n strands, plus the delete_strand composition law on
    non-pure words.  Returns a report with per-identity counts and any
    counterexamples."""
    if not 2 <= n <= max_n:
        raise ValueError(f"need 2 <= n <= {max_n}, got n={n}")
    rng = random.Random(seed)
    tallies: dict[str, list[int]] = {}
    bad: dict[str, str] = {}

    def record(name: str, ok: bool, w: TwinWord):
        tally = tallies.setdefault(name, [0, 0])
        tally[ok] += 1
        if not ok and name not in bad:
            bad[name] = f"counterexample: {w}"

    for w in _sample_words(n, samples, rng, pure=True):
        for name, lhs, rhs in simplicial_identity_cases(w):
            record("simplicial " + name, equal(lhs, rhs), w)
        for variant in COFACE_VARIANTS:
            for name, lhs, rhs in bidelta_identity_cases(w, variant):
                record(f"bi-delta[{variant}] " + name, equal(lhs, rhs), w)

    # composition law on arbitrary (generally non-pure) words
    for _ in range(samples):
        u = random_word(n, rng.randint(0, 14), rng)
        v = random_word(n, rng.randint(0, 14), rng)
        uv = TwinWord(n, u.letters + v.letters)
        for i in range(n):
            lhs = delete_strand(uv, i)
            rhs = multiply(delete_strand(u, i), delete_strand(v, nu(u)(i + 1) - 1))
            record("composition law d_i(uw) = d_i(u) d_{nu(u)(i+1)-1}(w)",
                   equal(lhs, rhs), uv)

    # deleting is a homomorphism on pure twins
    for _ in range(samples):
        u = random_pure_word(n, rng.randint(0, 12), rng)
        v = random_pure_word(n, rng.randint(0, 12), rng)
        for i in range(n):
            ok = equal(delete_strand(multiply(u, v), i),
                       multiply(delete_strand(u, i), delete_strand(v, i)))
            record("d_i homomorphism on pure twins", ok, multiply(u, v))

    # purity preservation
    for _ in range(samples):
        u = random_pure_word(n, rng.randint(0, 12), rng)
        ok = all(is_pure(delete_strand(u, i)) for i in range(n))
        ok = ok and all(is_pure(double_strand(u, i)) for i in range(n))
        ok = ok and all(is_pure(coface(u, i, v)) for i in range(n + 1)
                        for v in COFACE_VARIANTS)
        record("faces/degeneracies/cofaces preserve purity", ok, u)

    report = Report(f"simplicial and bi-Delta identities on {n} strands (seed {seed})")
    for name in sorted(tallies):
        fails, passes = tallies[name][0], tallies[name][1]
        detail = f"{passes} cases"
        if fails:
            detail = f"{fails} failures / {passes + fails} cases; " + bad[name]
        report.add(name, fails == 0, detail)
    return report


def identity_case_count(report: Report) -> int:
    """Smallest per-identity case count in a verification report."""
    counts = []
    for check in report.checks:
        head = check.detail.split(" cases")[0].split("/")[-1].strip()
        counts.append(int(head))
    return min(counts) if counts else 0
