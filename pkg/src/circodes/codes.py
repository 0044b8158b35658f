"""Codes (vertex subsets) and the dominating/locating/identifying verifiers.

Terminology: given a code S, the *shadow* of a vertex u is S intersected
with the closed neighbourhood N[u].  S is dominating when every shadow is
nonempty, a locating code when additionally the shadows of vertices
outside S are pairwise distinct, and an identifying code when the shadows
of *all* vertices are pairwise distinct.

Shadows live inside the window [u - dmax, u + dmax] around their owner,
so two vertices at circular distance greater than 2*dmax can never have
equal nonempty shadows.  Every pairwise check below is restricted to that
window, which makes verification O(n) per code.

Shares are exact rationals (`fractions.Fraction`): the thresholds used by
the heavy-vertex classifiers (3 and 11/4) must be compared exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property

from .circulant import CirculantGraph, mask_of, set_of
from .errors import NotInCode, ShareUndefined

__all__ = [
    "Kind",
    "Status",
    "VerificationResult",
    "Code",
    "LOCATING_HEAVY_THRESHOLD",
    "IDENTIFYING_HEAVY_THRESHOLD",
    "LOCATING_HEAVY_PROFILES",
    "IDENTIFYING_HEAVY_PROFILES",
    "heavy_profile_violations",
    "valid_mask",
]


class Kind(str, Enum):
    """The three code properties, ordered by strength."""

    DOMINATING = "dominating"
    LOCATING = "locating"
    IDENTIFYING = "identifying"


class Status(str, Enum):
    VALID = "valid"
    NOT_DOMINATING = "not-dominating"
    NOT_LOCATING = "not-locating"
    NOT_IDENTIFYING = "not-identifying"


_FAIL_STATUS = {Kind.LOCATING: Status.NOT_LOCATING, Kind.IDENTIFYING: Status.NOT_IDENTIFYING}

# Share thresholds beyond which a code vertex is called heavy, and the
# only shadow-size profiles a heavy vertex can then have (n >= 13).
LOCATING_HEAVY_THRESHOLD = Fraction(3)
IDENTIFYING_HEAVY_THRESHOLD = Fraction(11, 4)
LOCATING_HEAVY_PROFILES = frozenset({(1, 1, 2, 2, 3), (1, 1, 2, 3, 4)})
IDENTIFYING_HEAVY_PROFILES = frozenset({(1, 2, 2, 2, 3)})


@dataclass(frozen=True)
class VerificationResult:
    """Outcome of a code-property check, with a concrete refutation.

    ``witness`` is None when valid, the smallest vertex with an empty
    shadow when domination fails, and otherwise the lexicographically
    smallest pair (u, v), u < v, of vertices with equal shadows.
    """

    status: Status
    witness: int | tuple[int, int] | None = None

    @property
    def ok(self) -> bool:
        return self.status is Status.VALID

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class Code:
    """A candidate code: a vertex subset of a circulant graph."""

    graph: CirculantGraph
    members: frozenset[int]

    def __post_init__(self):
        members = frozenset(self.members)
        object.__setattr__(self, "members", members)
        for v in members:
            self.graph.check_vertex(v)

    @classmethod
    def from_mask(cls, graph: CirculantGraph, mask: int) -> "Code":
        return cls(graph, set_of(mask))

    @cached_property
    def mask(self) -> int:
        return mask_of(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v: int) -> bool:
        return v in self.members

    def __repr__(self) -> str:
        return f"Code({self.graph!r}, {{{','.join(map(str, sorted(self.members)))}}})"

    # -- shadows and profiles -------------------------------------------

    def shadow_mask(self, u: int) -> int:
        return self.mask & self.graph.closed_neighborhood_mask(u)

    def shadow(self, u: int) -> frozenset[int]:
        """S intersected with N[u]: the code vertices visible from u."""
        return set_of(self.shadow_mask(u))

    def profile(self, u: int) -> tuple[int, ...]:
        """Shadow sizes over N[u], in ascending order."""
        mask = self.mask
        g = self.graph
        sizes = [
            (mask & g.closed_neighborhood_mask(x)).bit_count()
            for x in g.closed_neighborhood(u)
        ]
        return tuple(sorted(sizes))

    # -- shares ----------------------------------------------------------

    def share(self, u: int) -> Fraction:
        """Sum of 1/|shadow(x)| over x in N[u], for a code vertex u.

        Defined only for members of a dominating code; the empty-shadow
        and non-member cases raise rather than returning a junk value.
        """
        self.graph.check_vertex(u)
        if u not in self.members:
            raise NotInCode(f"vertex {u} is not in the code")
        mask = self.mask
        g = self.graph
        total = Fraction(0)
        for x in g.closed_neighborhood(u):
            size = (mask & g.closed_neighborhood_mask(x)).bit_count()
            if size == 0:
                raise ShareUndefined(f"vertex {x} has an empty shadow")
            total += Fraction(1, size)
        return total

    def sum_of_shares(self) -> Fraction:
        """Total share of all code vertices; equals n for dominating codes."""
        if not self.is_dominating():
            raise ShareUndefined("shares are only defined for dominating codes")
        return sum((self.share(u) for u in self.members), Fraction(0))

    def heavy_vertices(self, threshold: Fraction | int) -> list[int]:
        """Code vertices whose share strictly exceeds the threshold."""
        if not self.is_dominating():
            raise ShareUndefined("shares are only defined for dominating codes")
        return [u for u in sorted(self.members) if self.share(u) > threshold]

    # -- verification ------------------------------------------------------

    def verify(self, kind: Kind) -> VerificationResult:
        """Check the code property, returning a witness on failure."""
        g = self.graph
        n = g.n
        mask = self.mask
        nbhd = g._closed_masks

        for u in range(n):
            if mask & nbhd[u] == 0:
                return VerificationResult(Status.NOT_DOMINATING, u)
        if kind is Kind.DOMINATING:
            return VerificationResult(Status.VALID)

        # All shadows are now nonempty, so colliding pairs are confined
        # to circular distance <= 2 * dmax.
        reach = min(2 * g.offsets[-1], n - 1)
        skip_code = kind is Kind.LOCATING
        worst: tuple[int, int] | None = None
        for u in range(n):
            if skip_code and (mask >> u) & 1:
                continue
            su = mask & nbhd[u]
            for d in range(1, reach + 1):
                v = u + d
                if v >= n:
                    v -= n
                if skip_code and (mask >> v) & 1:
                    continue
                if su == mask & nbhd[v]:
                    pair = (u, v) if u < v else (v, u)
                    if worst is None or pair < worst:
                        worst = pair
        if worst is not None:
            return VerificationResult(_FAIL_STATUS[kind], worst)
        return VerificationResult(Status.VALID)

    def is_dominating(self) -> VerificationResult:
        return self.verify(Kind.DOMINATING)

    def is_locating(self) -> VerificationResult:
        return self.verify(Kind.LOCATING)

    def is_identifying(self) -> VerificationResult:
        return self.verify(Kind.IDENTIFYING)


def valid_mask(n: int, mask: int, nbhd, reach: int, kind: Kind) -> bool:
    """Boolean-only verifier on raw bitmasks, for search inner loops.

    ``nbhd`` is the tuple of closed-neighbourhood masks and ``reach`` the
    collision window 2*dmax.  Semantics match Code.verify exactly.
    """
    for u in range(n):
        if mask & nbhd[u] == 0:
            return False
    if kind is Kind.DOMINATING:
        return True
    reach = min(reach, n - 1)
    skip_code = kind is Kind.LOCATING
    for u in range(n):
        if skip_code and (mask >> u) & 1:
            continue
        su = mask & nbhd[u]
        for d in range(1, reach + 1):
            v = u + d
            if v >= n:
                v -= n
            if skip_code and (mask >> v) & 1:
                continue
            if su == mask & nbhd[v]:
                return False
    return True


def heavy_profile_violations(code: Code, kind: Kind) -> list[tuple[int, tuple[int, ...]]]:
    """Vertices breaking the heavy-vertex profile classification.

    In a valid locating code every vertex with share > 3 must have
    profile (1,1,2,2,3) or (1,1,2,3,4); in a valid identifying code every
    vertex with share > 11/4 must have profile (1,2,2,2,3).  Returns the
    offending (vertex, profile) pairs, empty when the classifier holds.
    """
    if kind is Kind.LOCATING:
        threshold, allowed = LOCATING_HEAVY_THRESHOLD, LOCATING_HEAVY_PROFILES
    elif kind is Kind.IDENTIFYING:
        threshold, allowed = IDENTIFYING_HEAVY_THRESHOLD, IDENTIFYING_HEAVY_PROFILES
    else:
        raise ValueError("heavy-vertex profiles apply to locating/identifying codes")
    out = []
    for u in code.heavy_vertices(threshold):
        prof = code.profile(u)
        if prof not in allowed:
            out.append((u, prof))
    return out
