"""Closed trails in vertex-deleted complete graphs and their compatibility.

A circuit stores a cyclic vertex sequence; each consecutive pair, including
the wrap-around, is one traversed edge.  The circuit excluding vertex i must
traverse every pair of the remaining labels exactly m times (an Eulerian
circuit of the m-fold complete graph minus i).

Two circuits interlock through *transitions*: the two consecutive edges
a-j, j-b of a circuit form the transition (a, j, b).  Circuits T_i and T_j
are compatible when every transition (a, j, b) of T_i is matched, with
multiplicity, by transitions (a, i, b) or (b, i, a) of T_j; they are
strongly compatible when the match is always the reversed form (b, i, a).
A family {T_1..T_n} that is pairwise compatible encodes a quadrilateral
surface embedding of the Levi graph (see `scheme`), with strong families
corresponding to the orientable embeddings.
"""

from collections import Counter
from dataclasses import dataclass, field
from math import comb

from .exceptions import MismatchedAmbient, VertexAbsent


@dataclass(frozen=True)
class Transition:
    a: int
    mid: int
    b: int

    @property
    def outer(self) -> tuple[int, int]:
        """Outer endpoints as a sorted pair."""
        return (self.a, self.b) if self.a <= self.b else (self.b, self.a)


@dataclass(frozen=True)
class Circuit:
    """Cyclic closed trail in the m-fold complete graph on [n] minus one vertex.

    `copy_labels`, when present, assigns each traversed edge (position p
    covers the pair seq[p], seq[p+1]) to one of the m parallel copies; the
    builders fill it in so that multi-edge schemes can be reconstructed
    without search.  It is ignored for m=1.
    """

    excluded: int
    n: int
    m: int
    seq: tuple[int, ...]
    copy_labels: tuple[int, ...] | None = field(default=None, compare=False)

    def __len__(self) -> int:
        return len(self.seq)

    @property
    def expected_length(self) -> int:
        return self.m * comb(self.n - 1, 2)

    def steps(self):
        """Directed traversals (seq[p], seq[p+1]) including the wrap-around."""
        s = self.seq
        k = len(s)
        for p in range(k):
            yield s[p], s[(p + 1) % k]

    def rotated(self, offset: int) -> "Circuit":
        """Same cyclic trail written from a different starting point."""
        k = len(self.seq)
        offset %= k
        seq = self.seq[offset:] + self.seq[:offset]
        labels = self.copy_labels
        if labels is not None:
            labels = labels[offset:] + labels[:offset]
        return Circuit(self.excluded, self.n, self.m, seq, labels)

    def reversed_(self) -> "Circuit":
        seq = self.seq[::-1]
        labels = self.copy_labels
        if labels is not None:
            k = len(labels)
            labels = tuple(labels[(k - 2 - q) % k] for q in range(k))
        return Circuit(self.excluded, self.n, self.m, seq, labels)

    def canonical_seq(self) -> tuple[int, ...]:
        """Lexicographically least writing over all rotations of seq and its reverse."""
        best = None
        for s in (self.seq, self.seq[::-1]):
            k = len(s)
            for off in range(k):
                cand = s[off:] + s[:off]
                if best is None or cand < best:
                    best = cand
        return best

    def cyclically_equal(self, other: "Circuit") -> bool:
        """Equality up to rotation only (reversal is a distinct trail)."""
        if len(self.seq) != len(other.seq):
            return False
        k = len(self.seq)
        return any(self.seq[off:] + self.seq[:off] == other.seq for off in range(k))

    def equivalent(self, other: "Circuit") -> bool:
        """Equality up to rotation and reversal."""
        return self.canonical_seq() == other.canonical_seq()


@dataclass(frozen=True)
class EmbeddingSet:
    """Circuits T_1..T_n, T_i excluding i, pairwise compatible.

    `strong` records whether all pairs are strongly compatible (which is
    what the orientable constructions produce); `is_embedding_set` checks it.
    """

    n: int
    m: int
    circuits: tuple[Circuit, ...]
    strong: bool

    def circuit(self, i: int) -> Circuit:
        return self.circuits[i - 1]


@dataclass
class ValidationReport:
    ok: bool
    failures: list[str]

    def __bool__(self) -> bool:
        return self.ok

    def first(self) -> str:
        return self.failures[0] if self.failures else ""


def validate_eulerian(c: Circuit) -> ValidationReport:
    """Check the Eulerian-multiset invariant, reporting the first violation."""
    failures: list[str] = []
    ground = [v for v in range(1, c.n + 1) if v != c.excluded]
    if len(c.seq) != c.expected_length:
        failures.append(
            f"length {len(c.seq)} != expected {c.expected_length} "
            f"(m*C(n-1,2) with n={c.n}, m={c.m})"
        )
    for v in c.seq:
        if v == c.excluded:
            failures.append(f"excluded vertex {v} occurs in the sequence")
            break
        if not 1 <= v <= c.n:
            failures.append(f"vertex {v} outside 1..{c.n}")
            break
    for u, v in c.steps():
        if u == v:
            failures.append(f"immediate repetition at vertex {u}")
            break
    if not failures:
        counts = Counter()
        for u, v in c.steps():
            pair = (u, v) if u <= v else (v, u)
            counts[pair] += 1
            if counts[pair] > c.m:
                failures.append(
                    f"pair {{{pair[0]},{pair[1]}}} count {counts[pair]} expected {c.m}"
                )
                break
        if not failures:
            for i, u in enumerate(ground):
                for v in ground[i + 1:]:
                    got = counts.get((u, v), 0)
                    if got != c.m:
                        failures.append(
                            f"pair {{{u},{v}}} count {got} expected {c.m}"
                        )
                        break
                if failures:
                    break
    return ValidationReport(not failures, failures)


def transitions_through(c: Circuit, j: int) -> list[Transition]:
    """All transitions (prev, j, next) around occurrences of j, in scan order."""
    if j == c.excluded:
        raise VertexAbsent(f"vertex {j} is the excluded vertex of this circuit")
    s = c.seq
    k = len(s)
    out = [
        Transition(s[p - 1], j, s[(p + 1) % k])
        for p in range(k)
        if s[p] == j
    ]
    if not out:
        raise VertexAbsent(f"vertex {j} does not occur in the circuit")
    return out


def _ordered_outer_counts(c: Circuit, j: int) -> Counter:
    return Counter((t.a, t.b) for t in transitions_through(c, j))


def _check_ambient(t_i: Circuit, t_j: Circuit) -> None:
    if t_i.n != t_j.n or t_i.m != t_j.m:
        raise MismatchedAmbient(
            f"(n={t_i.n}, m={t_i.m}) vs (n={t_j.n}, m={t_j.m})"
        )
    if t_i.excluded == t_j.excluded:
        raise ValueError("compatibility is defined for circuits excluding distinct vertices")


def is_compatible(t_i: Circuit, t_j: Circuit) -> bool:
    """Multiset compatibility: outer pairs of transitions through j in T_i
    match those through i in T_j with equal counts (either orientation)."""
    _check_ambient(t_i, t_j)
    mine = Counter(t.outer for t in transitions_through(t_i, t_j.excluded))
    theirs = Counter(t.outer for t in transitions_through(t_j, t_i.excluded))
    return mine == theirs


def is_strongly_compatible(t_i: Circuit, t_j: Circuit) -> bool:
    """Strong compatibility: every (a, j, b) of T_i is matched by (b, i, a)
    of T_j with equal multiplicity."""
    _check_ambient(t_i, t_j)
    mine = _ordered_outer_counts(t_i, t_j.excluded)
    theirs = _ordered_outer_counts(t_j, t_i.excluded)
    return all(theirs[(b, a)] == cnt for (a, b), cnt in mine.items()) and all(
        mine[(b, a)] == cnt for (a, b), cnt in theirs.items()
    )


def _strong_failure(t_i: Circuit, t_j: Circuit) -> Transition | None:
    """A transition of T_i whose reversed form is under-represented in T_j."""
    mine = _ordered_outer_counts(t_i, t_j.excluded)
    theirs = _ordered_outer_counts(t_j, t_i.excluded)
    for t in transitions_through(t_i, t_j.excluded):
        if theirs[(t.b, t.a)] != mine[(t.a, t.b)]:
            return t
    return None


def is_embedding_set(s: EmbeddingSet, require_strong: bool | None = None) -> ValidationReport:
    """Validate every circuit Eulerian and every pair (strongly) compatible.

    `require_strong=None` uses the set's own flag.
    """
    if require_strong is None:
        require_strong = s.strong
    failures: list[str] = []
    if len(s.circuits) != s.n:
        failures.append(f"{len(s.circuits)} circuits for order {s.n}")
        return ValidationReport(False, failures)
    for i in range(1, s.n + 1):
        c = s.circuit(i)
        if c.excluded != i:
            failures.append(f"circuit at index {i} excludes {c.excluded}")
        elif c.n != s.n or c.m != s.m:
            failures.append(f"circuit {i} has ambient (n={c.n}, m={c.m})")
        else:
            rep = validate_eulerian(c)
            if not rep:
                failures.append(f"circuit {i} not Eulerian: {rep.first()}")
    if failures:
        return ValidationReport(False, failures)
    for i in range(1, s.n + 1):
        for j in range(i + 1, s.n + 1):
            t_i, t_j = s.circuit(i), s.circuit(j)
            if not is_compatible(t_i, t_j):
                failures.append(f"pair ({i},{j}) not compatible")
                return ValidationReport(False, failures)
            if require_strong and not is_strongly_compatible(t_i, t_j):
                t = _strong_failure(t_i, t_j)
                where = f" at transition ({t.a},{t.mid},{t.b})" if t else ""
                failures.append(f"pair ({i},{j}) not strongly compatible{where}")
                return ValidationReport(False, failures)
    return ValidationReport(True, failures)


def relabel(s: EmbeddingSet, perm: dict[int, int]) -> EmbeddingSet:
    """Apply a permutation of the vertex labels 1..n to a whole family.

    The circuit excluding i becomes the circuit excluding perm[i], with its
    sequence mapped elementwise.  Copy labels ride along unchanged.
    """
    circuits: list[Circuit | None] = [None] * s.n
    for c in s.circuits:
        new_excl = perm[c.excluded]
        circuits[new_excl - 1] = Circuit(
            new_excl,
            c.n,
            c.m,
            tuple(perm[v] for v in c.seq),
            c.copy_labels,
        )
    return EmbeddingSet(s.n, s.m, tuple(circuits), s.strong)


def canonical_set_key(s: EmbeddingSet) -> tuple[tuple[int, ...], ...]:
    """Rotation/reversal-invariant key; equal keys mean equivalent families."""
    return tuple(c.canonical_seq() for c in s.circuits)
