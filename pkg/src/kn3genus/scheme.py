"""Embedding schemes of Levi graphs: rotations, signatures, face tracing.

An embedding scheme is a rotation system (a cyclic order of incident edges
at every vertex) plus a signature assigning +1 or -1 to every edge.  Up to
switching equivalence this determines a 2-cell surface embedding, whose
faces are traced combinatorially.

The central conversions realize the bijection between quadrilateral
embeddings of the Levi graph and pairwise-compatible circuit families:
`set_to_scheme` reads rotations off the circuits and derives the signature
from traversal directions, `scheme_to_set` recovers the circuits from the
rotations around the vertex side.
"""

from collections import Counter, deque
from dataclasses import dataclass
from itertools import permutations, product

from .circuits import (
    Circuit,
    EmbeddingSet,
    canonical_set_key,
    is_embedding_set,
    is_strongly_compatible,
)
from .exceptions import (
    CopyResolutionError,
    Disconnected,
    GraphMismatch,
    NotAnEmbeddingSet,
    NotQuadrilateral,
    OddOrder,
    UnsupportedCase,
)
from .levi import HypergraphSpec, LeviGraph, YVertex, build_levi

XVertex = int
Vertex = XVertex | YVertex
Edge = tuple[XVertex, YVertex]


@dataclass(frozen=True)
class EmbeddingScheme:
    graph: LeviGraph
    rotation: dict[Vertex, tuple[Edge, ...]]
    signature: dict[Edge, int]


@dataclass(frozen=True)
class FaceReport:
    face_count: int
    face_lengths: tuple[int, ...]
    euler_genus: int
    orientable: bool

    @property
    def all_quadrilateral(self) -> bool:
        return all(length == 4 for length in self.face_lengths)

    def length_histogram(self) -> Counter:
        return Counter(self.face_lengths)


def _vertices(sch: EmbeddingScheme):
    yield from sch.graph.x_vertices
    yield from sch.graph.y_vertices


def _check_connected(sch: EmbeddingScheme) -> None:
    start = next(iter(_vertices(sch)))
    seen = {start}
    queue = deque([start])
    adjacency: dict[Vertex, list[Vertex]] = {}
    for x, y in sch.graph.edges():
        adjacency.setdefault(x, []).append(y)
        adjacency.setdefault(y, []).append(x)
    while queue:
        v = queue.popleft()
        for w in adjacency.get(v, ()):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    if len(seen) != sch.graph.vertex_count:
        raise Disconnected(
            f"scheme graph has {sch.graph.vertex_count} vertices "
            f"but only {len(seen)} reachable"
        )


def trace_faces(sch: EmbeddingScheme) -> FaceReport:
    """Trace all faces by walking edge sides.

    Every edge contributes four flags (two ends, two sides); faces are the
    orbits under the corner pairing (consecutive edge-ends around a vertex)
    and the band pairing (sides matched across an edge, crossed when the
    signature is negative).  A face of length L is an orbit of 2L flags.
    """
    _check_connected(sch)

    base: dict[Vertex, int] = {}
    order: list[tuple[Vertex, int]] = []
    total = 0
    for v in _vertices(sch):
        deg = len(sch.rotation[v])
        base[v] = total
        order.append((v, deg))
        total += 2 * deg

    # Flag id: base[v] + 2*p + s for the side s of the edge at position p
    # in the rotation at v.  Side 1 touches the corner toward position p+1.
    partner_corner = [0] * total
    partner_band = [0] * total
    position: dict[tuple[Vertex, Edge], int] = {}
    for v, deg in order:
        rot = sch.rotation[v]
        for p, e in enumerate(rot):
            position[(v, e)] = p
        for p in range(deg):
            a = base[v] + 2 * p + 1
            b = base[v] + 2 * ((p + 1) % deg)
            partner_corner[a] = b
            partner_corner[b] = a

    for x, y in sch.graph.edges():
        e = (x, y)
        px, py = position[(x, e)], position[(y, e)]
        fx0, fx1 = base[x] + 2 * px, base[x] + 2 * px + 1
        fy0, fy1 = base[y] + 2 * py, base[y] + 2 * py + 1
        if sch.signature[e] == 1:
            partner_band[fx1], partner_band[fy0] = fy0, fx1
            partner_band[fx0], partner_band[fy1] = fy1, fx0
        else:
            partner_band[fx1], partner_band[fy1] = fy1, fx1
            partner_band[fx0], partner_band[fy0] = fy0, fx0

    lengths = []
    seen = bytearray(total)
    for start in range(total):
        if seen[start]:
            continue
        size = 0
        stack = [start]
        seen[start] = 1
        while stack:
            f = stack.pop()
            size += 1
            for g in (partner_corner[f], partner_band[f]):
                if not seen[g]:
                    seen[g] = 1
                    stack.append(g)
        assert size % 2 == 0
        lengths.append(size // 2)

    v_count = sch.graph.vertex_count
    e_count = sch.graph.edge_count
    f_count = len(lengths)
    assert sum(lengths) == 2 * e_count
    genus = 2 - (v_count - e_count + f_count)
    return FaceReport(
        face_count=f_count,
        face_lengths=tuple(sorted(lengths)),
        euler_genus=genus,
        orientable=is_orientable(sch),
    )


def is_orientable(sch: EmbeddingScheme) -> bool:
    """True iff the signature is switching-equivalent to all-positive.

    Switch a spanning tree to all-positive by propagating vertex signs,
    then check that every non-tree edge comes out positive.
    """
    _check_connected(sch)
    adjacency: dict[Vertex, list[tuple[Vertex, Edge]]] = {}
    for x, y in sch.graph.edges():
        adjacency.setdefault(x, []).append((y, (x, y)))
        adjacency.setdefault(y, []).append((x, (x, y)))
    start = next(iter(_vertices(sch)))
    sign = {start: 1}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w, e in adjacency[v]:
            if w not in sign:
                sign[w] = sign[v] * sch.signature[e]
                queue.append(w)
    return all(
        sch.signature[(x, y)] == sign[x] * sign[y] for x, y in sch.graph.edges()
    )


# ---------------------------------------------------------------------------
# circuits -> scheme


def _traversal_positions(c: Circuit) -> dict[tuple[int, int], list[int]]:
    """Positions of each unordered traversed pair, in scan order."""
    out: dict[tuple[int, int], list[int]] = {}
    for p, (u, v) in enumerate(c.steps()):
        key = (u, v) if u <= v else (v, u)
        out.setdefault(key, []).append(p)
    return out


def _scan_order_labels(c: Circuit) -> tuple[int, ...]:
    labels = [0] * len(c.seq)
    for positions in _traversal_positions(c).values():
        for r, p in enumerate(positions):
            labels[p] = r
    return tuple(labels)


def _labels_consistent(c: Circuit, labels: tuple[int, ...]) -> bool:
    for positions in _traversal_positions(c).values():
        if sorted(labels[p] for p in positions) != list(range(c.m)):
            return False
    return True


def _build_scheme(s: EmbeddingSet, labelled: list[tuple[int, ...]]) -> EmbeddingScheme:
    graph = build_levi(HypergraphSpec(s.n, s.m))
    rotation: dict[Vertex, tuple[Edge, ...]] = {}
    signature: dict[Edge, int] = {}

    for y in graph.y_vertices:
        triple = y[0]
        rotation[y] = tuple((x, y) for x in triple)

    for i in range(1, s.n + 1):
        c = s.circuit(i)
        labels = labelled[i - 1]
        rot = []
        for p, (u, v) in enumerate(c.steps()):
            triple = tuple(sorted((i, u, v)))
            y: YVertex = (triple, labels[p])
            e: Edge = (i, y)
            rot.append(e)
            # Positive signature iff the traversal runs u -> v where (u, v)
            # follows i cyclically in the sorted triple (i,j,k) -> jk, etc.
            j, k = [w for w in triple if w != i]
            if triple.index(i) == 1:
                j, k = k, j
            signature[e] = 1 if (u, v) == (j, k) else -1
        rotation[i] = tuple(rot)
    return EmbeddingScheme(graph=graph, rotation=rotation, signature=signature)


def _resolve_labels_by_search(s: EmbeddingSet, budget: int) -> list[tuple[int, ...]]:
    """Find copy labels yielding a quadrilateral scheme by bounded search.

    The circuit of the smallest element of each triple keeps scan-order
    labels; the other two circuits try every per-pair relabelling.  Intended
    for small label-less inputs (files); builder output carries labels.
    """
    scan = [_scan_order_labels(c) for c in s.circuits]
    # Free slots: for each circuit i and pair {u,v} with i not minimal in
    # the triple {i,u,v}, the m positions may take any permutation of 0..m-1.
    slots: list[tuple[int, list[int]]] = []
    for i in range(1, s.n + 1):
        for (u, v), positions in _traversal_positions(s.circuit(i)).items():
            if min(u, v) < i:
                slots.append((i, positions))
    perms = list(permutations(range(s.m)))
    space = len(perms) ** len(slots)
    if space > budget:
        raise CopyResolutionError(
            f"no copy labels given and the search space ({space} candidates) "
            f"exceeds the budget ({budget}); rebuild the family with the "
            "builders, which record copy labels"
        )
    for assignment in product(perms, repeat=len(slots)):
        labelled = [list(lab) for lab in scan]
        for (i, positions), perm in zip(slots, assignment):
            for r, p in enumerate(positions):
                labelled[i - 1][p] = perm[r]
        candidate = [tuple(lab) for lab in labelled]
        sch = _build_scheme(s, candidate)
        if trace_faces(sch).all_quadrilateral:
            return candidate
    raise CopyResolutionError(
        "no copy labelling yields an all-quadrilateral scheme"
    )


def with_copy_labels(s: EmbeddingSet, search_budget: int = 50000) -> EmbeddingSet:
    """The same family with parallel-copy labels attached to every circuit.

    No-op when labels are already present or m = 1 (labels trivial); for
    label-less multi-edge families the assignment is found by the bounded
    search and is face-consistent by construction.
    """
    if all(c.copy_labels is not None for c in s.circuits):
        return s
    if s.m == 1:
        labelled = [(0,) * len(c.seq) for c in s.circuits]
    else:
        report = is_embedding_set(s, require_strong=False)
        if not report:
            raise NotAnEmbeddingSet(report.first())
        labelled = _resolve_labels_by_search(s, budget=search_budget)
    circuits = tuple(
        Circuit(c.excluded, c.n, c.m, c.seq, lab)
        for c, lab in zip(s.circuits, labelled)
    )
    return EmbeddingSet(s.n, s.m, circuits, s.strong)


def set_to_scheme(s: EmbeddingSet, search_budget: int = 50000) -> EmbeddingScheme:
    """Rotation and signature of the quadrilateral embedding encoded by a family.

    The rotation around vertex i lists the triples read off consecutive
    pairs of its circuit; the rotation around a triple is its three elements
    in sorted cyclic order; the signature of an end records whether the
    circuit at that end traverses the opposite pair in the cyclic direction
    of the sorted triple.

    For m > 1 the parallel copies are told apart by the circuits' copy
    labels when present, otherwise by a bounded search validated through
    face tracing.
    """
    report = is_embedding_set(s, require_strong=False)
    if not report:
        raise NotAnEmbeddingSet(report.first())
    if s.m == 1:
        labelled = [(0,) * len(c.seq) for c in s.circuits]
    elif all(c.copy_labels is not None for c in s.circuits):
        for c in s.circuits:
            if not _labels_consistent(c, c.copy_labels):
                raise CopyResolutionError(
                    f"circuit {c.excluded}: copy labels are not a permutation "
                    "of 0..m-1 on some parallel pair"
                )
        labelled = [c.copy_labels for c in s.circuits]
    else:
        labelled = _resolve_labels_by_search(s, budget=search_budget)
    return _build_scheme(s, labelled)


# ---------------------------------------------------------------------------
# scheme -> circuits


def _read_circuit(sch: EmbeddingScheme, i: int) -> Circuit:
    rot = sch.rotation[i]
    neighbors: list[YVertex] = [e[1] for e in rot]
    k = len(neighbors)

    def third(y: YVertex, prev: int) -> int | None:
        rest = [w for w in y[0] if w != i and w != prev]
        return rest[0] if len(rest) == 1 else None

    first = [w for w in neighbors[0][0] if w != i]
    for a0 in first:
        seq = [a0]
        labels = []
        ok = True
        for p in range(1, k):
            nxt = third(neighbors[p], seq[-1])
            if nxt is None:
                ok = False
                break
            seq.append(nxt)
            labels.append(neighbors[p][1])
        if not ok:
            continue
        # Close the cycle: the first neighbor must be the triple {i, a_last, a_0}.
        if set(neighbors[0][0]) == {i, seq[-1], seq[0]}:
            labels.append(neighbors[0][1])
            return Circuit(
                excluded=i,
                n=sch.graph.n,
                m=sch.graph.m,
                seq=tuple(seq),
                copy_labels=tuple(labels),
            )
    raise NotQuadrilateral(
        f"rotation around vertex {i} does not read as an Eulerian circuit"
    )


def scheme_to_set(sch: EmbeddingScheme) -> EmbeddingSet:
    """Recover the circuit family of a quadrilateral embedding.

    Raises NotQuadrilateral when some face has length != 4, and OddOrder for
    odd n (the vertex-deleted complete graph has odd degrees then, so no
    quadrilateral embedding exists).
    """
    if sch.graph.n % 2 != 0:
        raise OddOrder(f"no quadrilateral embedding for odd order {sch.graph.n}")
    report = trace_faces(sch)
    if not report.all_quadrilateral:
        bad = next(length for length in report.face_lengths if length != 4)
        raise NotQuadrilateral(f"face of length {bad} traced")
    circuits = tuple(_read_circuit(sch, i) for i in range(1, sch.graph.n + 1))
    n = sch.graph.n
    strong = all(
        is_strongly_compatible(circuits[i], circuits[j])
        for i in range(n)
        for j in range(i + 1, n)
    )
    s = EmbeddingSet(n=n, m=sch.graph.m, circuits=circuits, strong=strong)
    rep = is_embedding_set(s, require_strong=False)
    if not rep:
        raise NotQuadrilateral(f"recovered family invalid: {rep.first()}")
    return s


# ---------------------------------------------------------------------------
# switching equivalence


def _cyclic_variants(rot: tuple[Edge, ...]):
    k = len(rot)
    for off in range(k):
        yield rot[off:] + rot[:off]


def _cyclically_equal(a: tuple[Edge, ...], b: tuple[Edge, ...]) -> bool:
    return len(a) == len(b) and any(v == b for v in _cyclic_variants(a))


def _switched_equal(a: EmbeddingScheme, b: EmbeddingScheme, flipped) -> bool:
    for v in _vertices(a):
        rot = a.rotation[v]
        if v in flipped:
            rot = rot[::-1]
        if not _cyclically_equal(rot, b.rotation[v]):
            return False
    for x, y in a.graph.edges():
        lam = a.signature[(x, y)]
        if (x in flipped) != (y in flipped):
            lam = -lam
        if lam != b.signature[(x, y)]:
            return False
    return True


def schemes_equivalent(a: EmbeddingScheme, b: EmbeddingScheme) -> bool:
    """Switching equivalence of two schemes on the same labelled graph.

    Quadrilateral schemes are compared through their circuit families
    (the bijection turns switching classes into rotation/reversal classes);
    anything else falls back to brute force over switching sets, which is
    only tolerable for the smallest graphs.
    """
    if a.graph != b.graph:
        raise GraphMismatch("schemes are defined on different labelled graphs")
    try:
        fam_a = scheme_to_set(a)
        fam_b = scheme_to_set(b)
    except (NotQuadrilateral, OddOrder):
        nv = a.graph.vertex_count
        if nv > 16:
            raise UnsupportedCase(
                "switching search over 2^|V| is only supported for |V| <= 16 "
                "on non-quadrilateral schemes"
            ) from None
        verts = list(_vertices(a))
        for mask in range(1 << nv):
            flipped = {verts[t] for t in range(nv) if mask >> t & 1}
            if _switched_equal(a, b, flipped):
                return True
        return False
    return canonical_set_key(fam_a) == canonical_set_key(fam_b)
