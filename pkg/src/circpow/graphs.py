"""Circulant graphs, circuit distance powers and path distance powers.

Vertices are always 0-based: the graph lives on {0, ..., n-1} and the jump
set is a symmetric subset of {1, ..., n-1} (j is a jump iff n-j is).  All
adjacency matrices are dense numpy int64 arrays; the target scale is a few
thousand vertices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError


@dataclass(frozen=True)
class CirculantGraph:
    """A circulant graph given by its order and symmetric jump set."""

    n: int
    jumps: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"order must be positive, got n={self.n}")
        jumps = frozenset(int(j) for j in self.jumps)
        object.__setattr__(self, "jumps", jumps)
        for j in jumps:
            if not 1 <= j <= self.n - 1:
                raise DomainError(f"jump {j} outside 1..{self.n - 1}")
            if (self.n - j) not in jumps:
                raise DomainError(
                    f"jump set not symmetric: {j} present but {self.n - j} missing"
                )

    @property
    def degree(self) -> int:
        return len(self.jumps)


@dataclass(frozen=True)
class CircuitPower:
    """The d-th distance power of the circuit graph on n vertices."""

    n: int
    d: int

    def __post_init__(self):
        if self.n < 3:
            raise DomainError(f"circuit needs n >= 3, got n={self.n}")
        if self.d < 1:
            raise DomainError(f"distance-power exponent must be >= 1, got d={self.d}")

    @property
    def complete(self) -> bool:
        # d >= (n-1)/2 makes every vertex pair adjacent
        return 2 * self.d >= self.n - 1

    def as_circulant(self) -> CirculantGraph:
        return CirculantGraph(self.n, jump_set(self))


@dataclass(frozen=True)
class PathPower:
    """The d-th distance power of the path graph on n vertices.

    Adjacency: i ~ j  iff  0 < |i - j| <= d.  For d >= n-1 this is K_n.
    """

    n: int
    d: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"path needs n >= 1, got n={self.n}")
        if self.d < 1:
            raise DomainError(f"distance-power exponent must be >= 1, got d={self.d}")

    @property
    def complete(self) -> bool:
        return self.d >= self.n - 1


def circuit_power(n: int, d: int) -> CircuitPower:
    """Construct the distance power, rejecting n < 3 or d < 1."""
    return CircuitPower(n, d)


def jump_set(g: CircuitPower) -> frozenset[int]:
    """Jump set of the circuit power: {1..d} plus {n-d..n-1}.

    For complete powers every jump 1..n-1 is present.
    """
    if g.complete:
        return frozenset(range(1, g.n))
    return frozenset(range(1, g.d + 1)) | frozenset(range(g.n - g.d, g.n))


def adjacency(g: CirculantGraph | CircuitPower | PathPower) -> np.ndarray:
    """Dense 0/1 adjacency matrix (int64, symmetric, zero diagonal).

    For circulant inputs row r is row 0 rotated right by r, so the whole
    matrix is determined by the jump set.
    """
    if isinstance(g, CircuitPower):
        g = g.as_circulant()
    if isinstance(g, CirculantGraph):
        first_row = np.zeros(g.n, dtype=np.int64)
        for j in g.jumps:
            first_row[j] = 1
        a = np.empty((g.n, g.n), dtype=np.int64)
        for r in range(g.n):
            a[r] = np.roll(first_row, r)
        return a
    if isinstance(g, PathPower):
        i = np.arange(g.n)
        dist = np.abs(i[:, None] - i[None, :])
        return ((dist > 0) & (dist <= g.d)).astype(np.int64)
    raise TypeError(f"unsupported graph type {type(g).__name__}")


def bfs_distances(adj: np.ndarray, source: int) -> list[int]:
    """Unweighted shortest-path distances from source (-1 if unreachable)."""
    n = adj.shape[0]
    dist = [-1] * n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in np.nonzero(adj[v])[0]:
            if dist[u] == -1:
                dist[u] = dist[v] + 1
                queue.append(int(u))
    return dist


def distance_power_by_bfs(adj: np.ndarray, d: int) -> np.ndarray:
    """d-th distance power of an arbitrary graph, computed from BFS distances.

    Independent of the jump-set construction; used as an oracle for the
    closed-form adjacency builders.
    """
    n = adj.shape[0]
    out = np.zeros_like(adj)
    for v in range(n):
        dist = bfs_distances(adj, v)
        for u in range(n):
            if u != v and 0 < dist[u] <= d:
                out[v, u] = 1
    return out
