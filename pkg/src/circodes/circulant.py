"""Circulant graphs on Z_n and their neighbourhood/distance queries.

A circulant graph C(n; d_1,...,d_k) has vertex set Z_n = {0,...,n-1},
with x and y adjacent exactly when the circular difference
min(|x-y|, n-|x-y|) is one of the offsets d_i.  Offsets must satisfy
1 <= d < n/2, so the graph is simple, loop-free and 2k-regular.

Vertex subsets are handled as int bitmasks internally (bit u set means
vertex u is in the set).  Python ints are arbitrary precision, so one
representation covers every n with identical semantics.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable

from .errors import DuplicateOffset, OffsetOutOfRange, VertexOutOfRange

__all__ = ["CirculantGraph", "mask_of", "set_of"]


def mask_of(vertices: Iterable[int]) -> int:
    """Pack an iterable of vertices into a bitmask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def set_of(mask: int) -> frozenset[int]:
    """Unpack a bitmask into a frozenset of vertices."""
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


class CirculantGraph:
    """The circulant graph C(n; d_1,...,d_k).

    Immutable after construction; all query methods are pure, so
    instances are safe to share between threads.
    """

    __slots__ = ("n", "offsets", "_closed_masks")

    def __init__(self, n: int, offsets: Iterable[int] = (1, 3)):
        offsets = tuple(offsets)
        if n < 3:
            raise OffsetOutOfRange(f"need n >= 3, got n={n}")
        if not offsets:
            raise OffsetOutOfRange("offset set must be nonempty")
        if len(set(offsets)) != len(offsets):
            raise DuplicateOffset(f"duplicate offsets in {offsets}")
        for d in offsets:
            if d <= 0 or 2 * d >= n:
                raise OffsetOutOfRange(
                    f"offset {d} out of range: need 1 <= d < n/2 = {n / 2}"
                )
        self.n = n
        self.offsets = tuple(sorted(offsets))
        # Closed-neighbourhood bitmasks; the workhorse of every verifier.
        masks = []
        for u in range(n):
            m = 1 << u
            for d in self.offsets:
                m |= 1 << ((u + d) % n)
                m |= 1 << ((u - d) % n)
            masks.append(m)
        self._closed_masks = tuple(masks)

    # -- basic queries -------------------------------------------------

    @property
    def degree(self) -> int:
        """Common degree 2k of every vertex."""
        return 2 * len(self.offsets)

    def check_vertex(self, u: int) -> None:
        """Reject anything that is not a canonical residue 0..n-1.

        Negative inputs are rejected rather than normalized: silently
        aliasing -3 to n-3 would make bad test vectors undetectable.
        """
        if not isinstance(u, int) or isinstance(u, bool) or not 0 <= u < self.n:
            raise VertexOutOfRange(f"vertex {u!r} not in 0..{self.n - 1}")

    def is_adjacent(self, x: int, y: int) -> bool:
        self.check_vertex(x)
        self.check_vertex(y)
        diff = abs(x - y)
        return min(diff, self.n - diff) in self.offsets

    def closed_neighborhood_mask(self, u: int) -> int:
        """Bitmask of N[u] = N(u) + {u}."""
        self.check_vertex(u)
        return self._closed_masks[u]

    def closed_neighborhood(self, u: int) -> frozenset[int]:
        """N[u] as a frozenset."""
        return set_of(self.closed_neighborhood_mask(u))

    def neighbors(self, u: int) -> frozenset[int]:
        """Open neighbourhood N(u)."""
        return set_of(self.closed_neighborhood_mask(u) & ~(1 << u))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted pairs (x, y) with x < y."""
        out = []
        for x in range(self.n):
            for y in sorted(self.neighbors(x)):
                if x < y:
                    out.append((x, y))
        return out

    def ball(self, u: int, r: int) -> frozenset[int]:
        """Vertices at graph distance <= r from u (the set N_r[u]).

        ball(u, 0) == {u} and ball(u, 1) == closed_neighborhood(u);
        the ball stabilizes at all of Z_n once r reaches the diameter.
        """
        self.check_vertex(u)
        if r < 0:
            raise ValueError(f"radius must be nonnegative, got {r}")
        seen = 1 << u
        frontier = deque([(u, 0)])
        while frontier:
            x, dist = frontier.popleft()
            if dist == r:
                continue
            new = self._closed_masks[x] & ~seen
            seen |= new
            for y in set_of(new):
                frontier.append((y, dist + 1))
        return set_of(seen)

    # -- dunder --------------------------------------------------------

    def __repr__(self) -> str:
        return f"C({self.n}; {','.join(map(str, self.offsets))})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CirculantGraph)
            and self.n == other.n
            and self.offsets == other.offsets
        )

    def __hash__(self) -> int:
        return hash((self.n, self.offsets))
