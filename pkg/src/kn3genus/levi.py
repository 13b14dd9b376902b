"""Complete 3-uniform hypergraphs, their Levi graphs, and genus formulas.

The hypergraph of order n with multiplicity m has every 3-element subset of
{1..n} as an edge, repeated m times.  Its Levi graph is the bipartite
incidence graph: one side is the n vertices, the other the m*C(n,3) edge
copies, and each edge copy is joined to its three elements.

All arithmetic here is exact integer arithmetic.
"""

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .exceptions import OddOrder, UnsupportedCase

Triple = tuple[int, int, int]
# A Levi vertex on the edge side: (sorted triple, copy index in 0..m-1).
YVertex = tuple[Triple, int]


@dataclass(frozen=True)
class HypergraphSpec:
    """Order n (>= 4) and edge multiplicity m (>= 1)."""

    n: int
    m: int = 1

    def __post_init__(self):
        if not isinstance(self.n, int) or not isinstance(self.m, int):
            raise TypeError("n and m must be integers")
        if self.n < 4:
            raise ValueError(f"order n must be >= 4, got {self.n}")
        if self.m < 1:
            raise ValueError(f"multiplicity m must be >= 1, got {self.m}")

    @property
    def edge_count(self) -> int:
        return self.m * comb(self.n, 3)

    @property
    def levi_vertex_count(self) -> int:
        return self.n + self.edge_count

    @property
    def levi_edge_count(self) -> int:
        return 3 * self.edge_count


@dataclass(frozen=True)
class LeviGraph:
    """Bipartite incidence graph of the complete 3-uniform hypergraph.

    Side X carries the vertex labels 1..n.  Side Y carries one vertex per
    edge copy, written as a sorted triple plus a copy index.  Every Y-vertex
    has degree 3; every X-vertex has degree m*C(n-1,2).
    """

    n: int
    m: int
    y_vertices: tuple[YVertex, ...]

    @property
    def x_vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def vertex_count(self) -> int:
        return self.n + len(self.y_vertices)

    @property
    def edge_count(self) -> int:
        return 3 * len(self.y_vertices)

    def edges(self):
        """All incidence edges as (x, y) pairs, x listed first."""
        for y in self.y_vertices:
            for x in y[0]:
                yield (x, y)

    def x_degree(self) -> int:
        return self.m * comb(self.n - 1, 2)


def build_levi(spec: HypergraphSpec) -> LeviGraph:
    """Construct the Levi graph with triples sorted and copies indexed."""
    ys = tuple(
        (triple, c)
        for triple in combinations(range(1, spec.n + 1), 3)
        for c in range(spec.m)
    )
    return LeviGraph(n=spec.n, m=spec.m, y_vertices=ys)


def euler_genus_lower_bound(spec: HypergraphSpec) -> int:
    """Euler-formula lower bound ceil(e/2 - n + 2) on the Euler genus.

    Tight exactly when the Levi graph has a quadrilateral embedding, which
    holds for every even n handled by the builders.
    """
    e = spec.edge_count
    return -((-(e - 2 * spec.n + 4)) // 2)


def genus_formula(spec: HypergraphSpec, orientable: bool) -> int:
    """Closed-form minimum genus for even n.

    Orientable genus is (n-2)(m*n*(n-1)-12)/24; the non-orientable genus
    (crosscap number) is twice that.  The non-orientable value is undefined
    for the planar case n=4, m=1.
    """
    n, m = spec.n, spec.m
    if n % 2 != 0:
        raise OddOrder(f"genus formula requires even order, got n={n}")
    if not orientable and n == 4 and m == 1:
        raise UnsupportedCase(
            "the order-4 single-edge hypergraph is planar; "
            "it has no non-orientable minimum genus"
        )
    numerator = (n - 2) * (m * n * (n - 1) - 12)
    divisor = 24 if orientable else 12
    assert numerator % divisor == 0, (n, m, orientable)
    return numerator // divisor
