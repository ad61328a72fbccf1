"""Simple undirected graphs on vertices {1..n} with bitmask adjacency.

The strict upper triangle of the adjacency relation is packed into a single
Python integer: the pair (i, j) with i < j sits at bit (j-1)(j-2)/2 + (i-1).
This is the column-major pair order of the graph6 wire format, so
serialization, complementation and whole-graph enumeration all reduce to
integer arithmetic on masks.  Graph values are immutable and safe to share.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

DEFAULT_MAX_ORDER = 4096
MAX_ORDER_ENV = "NG_MAX_ORDER"

GENERATOR_KINDS = (
    "complete",
    "empty",
    "path",
    "cycle",
    "complete_bipartite",
    "erdos_renyi",
)


def max_order() -> int:
    """Hard cap on graph order; override with the NG_MAX_ORDER env var."""
    raw = os.environ.get(MAX_ORDER_ENV)
    if raw is None:
        return DEFAULT_MAX_ORDER
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValueError(f"{MAX_ORDER_ENV} must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise ValueError(f"{MAX_ORDER_ENV} must be positive, got {cap}")
    return cap


def check_order(n: int) -> None:
    if n < 1:
        raise ValueError(f"graph order must be positive, got {n}")
    cap = max_order()
    if n > cap:
        raise ValueError(
            f"graph order {n} exceeds size cap {cap} (set {MAX_ORDER_ENV} to raise it)"
        )


def pair_bit(i: int, j: int) -> int:
    """Bit position of the unordered pair {i, j} of 1-based vertices."""
    if i > j:
        i, j = j, i
    return (j - 1) * (j - 2) // 2 + (i - 1)


def pair_positions(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(row, col, bit) arrays for the strict upper triangle, rows/cols 0-based."""
    iu, ju = np.triu_indices(n, 1)
    return iu, ju, ju * (ju - 1) // 2 + iu


def mask_to_bitarray(bits: int, m: int) -> np.ndarray:
    """Expand an m-bit mask into a uint8 0/1 array indexed by bit position."""
    if m == 0:
        return np.zeros(0, dtype=np.uint8)
    buf = bits.to_bytes((m + 7) // 8, "little")
    return np.unpackbits(np.frombuffer(buf, dtype=np.uint8), bitorder="little")[:m]


def bitarray_to_mask(arr: np.ndarray) -> int:
    """Inverse of mask_to_bitarray."""
    if arr.size == 0:
        return 0
    packed = np.packbits(arr.astype(np.uint8), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph of positive order with 1-based vertices."""

    n: int
    bits: int = 0

    def __post_init__(self) -> None:
        check_order(self.n)
        if self.bits < 0 or self.bits >> self.pair_count:
            raise ValueError("adjacency mask has bits outside the upper triangle")

    @property
    def pair_count(self) -> int:
        return self.n * (self.n - 1) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.pair_count) - 1

    @property
    def edge_count(self) -> int:
        return self.bits.bit_count()

    def _check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} out of range 1..{self.n}")

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            return False
        return bool(self.bits >> pair_bit(u, v) & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges (i, j) with i < j, in ascending bit order."""
        bits = self.bits
        for j in range(2, self.n + 1):
            base = (j - 1) * (j - 2) // 2
            for i in range(1, j):
                if bits >> (base + i - 1) & 1:
                    yield (i, j)

    def degrees(self) -> list[int]:
        a = self.adjacency_matrix(dtype=np.int64)
        return [int(x) for x in a.sum(axis=0)]

    def adjacency_matrix(self, dtype=np.float64) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        if self.pair_count:
            iu, ju, pos = pair_positions(self.n)
            vals = mask_to_bitarray(self.bits, self.pair_count)[pos]
            a[iu, ju] = vals
            a[ju, iu] = vals
        return a

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        check_order(n)
        bits = 0
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u}, {v}) out of range 1..{n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u} not allowed")
            bits |= 1 << pair_bit(u, v)
        return cls(n, bits)

    @classmethod
    def from_adjacency(cls, matrix) -> "Graph":
        a = np.asarray(matrix)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency matrix must be square")
        n = int(a.shape[0])
        check_order(n)
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency matrix must be symmetric")
        if np.any((a != 0) & (a != 1)):
            raise ValueError("adjacency entries must be 0 or 1")
        if np.any(np.diagonal(a) != 0):
            raise ValueError("adjacency diagonal must be zero (no loops)")
        m = n * (n - 1) // 2
        arr = np.zeros(m, dtype=np.uint8)
        if m:
            iu, ju, pos = pair_positions(n)
            arr[pos] = a[iu, ju] != 0
        return cls(n, bitarray_to_mask(arr))


def complement(g: Graph) -> Graph:
    """Graph on the same vertices with edges exactly where g has none."""
    return Graph(g.n, g.bits ^ g.full_mask)


def _check_blowup_factor(t: int) -> None:
    if t < 1:
        raise ValueError(f"blow-up factor must be at least 1, got {t}")


def blowup_independent(g: Graph, t: int) -> Graph:
    """Replace every vertex by t independent copies and every edge by a
    complete bipartite join between the corresponding blocks.

    Copy j of vertex u becomes vertex (u-1)t + j, so the adjacency matrix of
    the result is the Kronecker product of A(g) with the all-ones t x t block.
    """
    _check_blowup_factor(t)
    check_order(g.n * t)
    a = g.adjacency_matrix(dtype=np.int64)
    return Graph.from_adjacency(np.kron(a, np.ones((t, t), dtype=np.int64)))


def blowup_clique(g: Graph, t: int) -> Graph:
    """Like blowup_independent, but every t-block additionally induces a clique.

    Equals the complement of the independent blow-up of the complement.
    """
    _check_blowup_factor(t)
    check_order(g.n * t)
    a = g.adjacency_matrix(dtype=np.int64)
    blown = np.kron(a, np.ones((t, t), dtype=np.int64))
    blocks = np.kron(
        np.eye(g.n, dtype=np.int64),
        np.ones((t, t), dtype=np.int64) - np.eye(t, dtype=np.int64),
    )
    return Graph.from_adjacency(blown + blocks)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on the given nonempty vertex subset (sorted order)."""
    vs = sorted(set(vertices))
    if not vs:
        raise ValueError("vertex subset must be nonempty")
    for v in vs:
        g._check_vertex(v)
    edges = []
    for a_idx, u in enumerate(vs, start=1):
        for b_idx, v in enumerate(vs, start=1):
            if u < v and g.has_edge(u, v):
                edges.append((a_idx, b_idx))
    return Graph.from_edges(len(vs), edges)


def complete(n: int) -> Graph:
    check_order(n)
    return Graph(n, (1 << (n * (n - 1) // 2)) - 1)


def empty(n: int) -> Graph:
    check_order(n)
    return Graph(n, 0)


def path(n: int) -> Graph:
    check_order(n)
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs order >= 3, got {n}")
    check_order(n)
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError(f"complete_bipartite parts must be positive, got {a}, {b}")
    check_order(a + b)
    return Graph.from_edges(
        a + b, [(u, v) for u in range(1, a + 1) for v in range(a + 1, a + b + 1)]
    )


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """G(n, p) with every pair drawn independently; fully seed-determined."""
    check_order(n)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    m = n * (n - 1) // 2
    rng = np.random.default_rng(seed)
    draws = rng.random(m)
    return Graph(n, bitarray_to_mask(draws < p))


def generate(kind: str, params: Sequence[float], seed: int | None = None) -> Graph:
    """Build a named graph; deterministic for fixed (kind, params, seed)."""
    if kind not in GENERATOR_KINDS:
        raise ValueError(f"unknown generator {kind!r}; choose from {GENERATOR_KINDS}")

    def _ints(count: int) -> list[int]:
        if len(params) != count:
            raise ValueError(f"generator {kind} takes {count} parameter(s), got {len(params)}")
        out = []
        for x in params:
            if float(x) != int(x):
                raise ValueError(f"generator {kind} needs integer parameters, got {x}")
            out.append(int(x))
        return out

    if kind == "complete":
        return complete(*_ints(1))
    if kind == "empty":
        return empty(*_ints(1))
    if kind == "path":
        return path(*_ints(1))
    if kind == "cycle":
        return cycle(*_ints(1))
    if kind == "complete_bipartite":
        return complete_bipartite(*_ints(2))
    if len(params) != 2:
        raise ValueError("erdos_renyi takes parameters (n, p)")
    n, p = params
    if float(n) != int(n):
        raise ValueError(f"erdos_renyi order must be an integer, got {n}")
    if seed is None:
        raise ValueError("erdos_renyi requires a seed")
    return erdos_renyi(int(n), float(p), seed)
