"""Canonical forms, isomorphism, enumeration, and exact counting bounds.

Two circuit families are equivalent when they agree circuit by circuit up
to rotation and reversal; `canonicalize` produces an invariant normal form
deciding that.  Isomorphism additionally allows relabelling the vertices.
The enumerator replays the inductive construction with randomized choices
(transition picks, vertex pairings, role swaps, apex exchange) and dedupes
by canonical form, which realizes the counting lower bound in practice.
"""

from dataclasses import dataclass
from itertools import product
from random import Random

from .builder import build_even
from .circuits import (
    Circuit,
    EmbeddingSet,
    canonical_set_key,
    is_embedding_set,
    relabel,
)
from .exceptions import BoundExceeded, OddOrder
from .levi import HypergraphSpec, euler_genus_lower_bound
from .scheme import set_to_scheme, trace_faces


@dataclass(frozen=True)
class CanonicalSet:
    """Rotation/reversal-invariant normal form of a circuit family."""

    n: int
    m: int
    circuits: tuple[tuple[int, ...], ...]


def canonicalize(s: EmbeddingSet) -> CanonicalSet:
    return CanonicalSet(n=s.n, m=s.m, circuits=canonical_set_key(s))


def canonical_rewrite(s: EmbeddingSet) -> EmbeddingSet:
    """Equivalent, deterministically written form of a family.

    Every circuit takes its lexicographically least rotation, and the whole
    family is written either all-forward or all-reversed, whichever sorts
    first.  Reversal is applied globally rather than per circuit because
    reversing circuits one at a time destroys the strong-compatibility
    presentation of orientable families (only rotations and simultaneous
    reversal preserve it); copy labels ride along.
    """

    def least_rotation(c: Circuit) -> Circuit:
        best = c
        for off in range(1, len(c.seq)):
            cand = c.rotated(off)
            if cand.seq < best.seq:
                best = cand
        return best

    forward = tuple(least_rotation(c) for c in s.circuits)
    backward = tuple(least_rotation(c.reversed_()) for c in s.circuits)
    circuits = min(forward, backward, key=lambda cs: tuple(c.seq for c in cs))
    return EmbeddingSet(s.n, s.m, circuits, s.strong)


def sets_isomorphic(
    a: EmbeddingSet, b: EmbeddingSet, max_order: int = 10
) -> dict[int, int] | None:
    """A vertex relabelling carrying family a onto family b, or None.

    Any isomorphism must align the circuit missing vertex 1 of `a` with
    some circuit of `b` (forwards or reversed, at some rotation), and that
    alignment already determines the whole permutation; so only n * 2 * N
    candidates need checking rather than n! relabellings.
    """
    if a.n != b.n or a.m != b.m:
        raise ValueError("families must share n and m to be compared")
    if a.n > max_order:
        raise BoundExceeded(
            f"isomorphism search limited to order {max_order}, got {a.n}"
        )
    key_b = canonical_set_key(b)
    t1 = a.circuit(1)
    length = len(t1.seq)
    for j in range(1, b.n + 1):
        for direction in (b.circuit(j), b.circuit(j).reversed_()):
            for off in range(length):
                aligned = direction.seq[off:] + direction.seq[:off]
                sigma = {1: j}
                ok = True
                for p, v in enumerate(t1.seq):
                    w = aligned[p]
                    if sigma.setdefault(v, w) != w:
                        ok = False
                        break
                if not ok or len(set(sigma.values())) != a.n:
                    continue
                if canonical_set_key(relabel(a, sigma)) == key_b:
                    return sigma
    return None


@dataclass
class EnumerationResult:
    families: list[EmbeddingSet]
    budget_exhausted: bool

    def __len__(self) -> int:
        return len(self.families)


def enumerate_variants(
    n: int,
    orientable: bool,
    count: int,
    seed: int | None = None,
    budget_factor: int = 50,
) -> EnumerationResult:
    """Up to `count` pairwise-inequivalent minimum-genus families.

    Runs the seeded builder repeatedly, verifying each candidate (valid
    family, all faces quadrilateral, Euler genus equal to the lower bound,
    requested orientability) and deduping by canonical form.  Stops early
    with `budget_exhausted` set once budget_factor * count attempts have
    been spent.
    """
    rng = Random(seed)
    target = euler_genus_lower_bound(HypergraphSpec(n, 1))
    found: dict[CanonicalSet, EmbeddingSet] = {}
    budget = budget_factor * count
    attempts = 0
    while len(found) < count and attempts < budget:
        attempts += 1
        s = build_even(n, orientable, seed=rng.randrange(2**63))
        key = canonicalize(s)
        if key in found:
            continue
        if not is_embedding_set(s, require_strong=orientable):
            continue
        report = trace_faces(set_to_scheme(s))
        if not (
            report.all_quadrilateral
            and report.euler_genus == target
            and report.orientable == orientable
        ):
            continue
        found[key] = s
    return EnumerationResult(
        families=list(found.values()), budget_exhausted=len(found) < count
    )


def double_factorial(k: int) -> int:
    """k(k-2)(k-4)...; empty product (k <= 0) is 1."""
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def count_lower_bound(n: int) -> int:
    """Exact value of the recurrence bounding inequivalent minimum embeddings.

    R_4 = 1 and R_k = ((k-4)/2)^((k-2)/2) * (k-3)!! * 2^((k-2)/2) / 2 * R_{k-2}.
    """
    if n % 2 != 0:
        raise OddOrder(f"bound defined for even orders, got n={n}")
    if n < 4:
        raise ValueError(f"order must be >= 4, got n={n}")
    r = 1
    for k in range(6, n + 1, 2):
        half = (k - 2) // 2
        r = r * ((k - 4) // 2) ** half * double_factorial(k - 3) * 2**half // 2
    return r


def count_upper_bound(n: int) -> int:
    """Exact value of ((n-3)!!)^(n(n-1)/2), bounding families from above."""
    if n % 2 != 0:
        raise OddOrder(f"bound defined for even orders, got n={n}")
    if n < 4:
        raise ValueError(f"order must be >= 4, got n={n}")
    return double_factorial(n - 3) ** (n * (n - 1) // 2)


def exhaustive_classes_order4() -> list[EmbeddingSet]:
    """All equivalence classes of valid order-4 families, by brute force.

    Each circuit is an Eulerian circuit of a triangle, so there are two
    cyclic orientations per vertex and 16 raw combinations in total.
    """
    options = []
    for i in range(1, 5):
        a, b, c = [v for v in range(1, 5) if v != i]
        options.append(
            (
                Circuit(i, 4, 1, (a, b, c)),
                Circuit(i, 4, 1, (a, c, b)),
            )
        )
    classes: dict[CanonicalSet, EmbeddingSet] = {}
    for combo in product(*options):
        s = EmbeddingSet(4, 1, combo, strong=False)
        if is_embedding_set(s, require_strong=False):
            classes.setdefault(canonicalize(s), s)
    return list(classes.values())
