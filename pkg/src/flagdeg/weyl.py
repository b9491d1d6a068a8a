"""Symmetric group combinatorics in one-line (window) notation.

Bruhat order is decided by rank-table dominance: y <= w iff for all i, k the
count #{j <= i : y(j) <= k} is at least the same count for w. Rank tables are
the one tool here that transfers unchanged to partial flags and to positions
of arbitrary flags, which is why they are the production order engine; the
reduced-word subword criterion lives in the test suite as an independent
oracle.

>>> bruhat_leq(Permutation((2, 1, 3)), Permutation((3, 2, 1)))
True
>>> [p.window for p in min_coset_reps(FlagShape((1,), 3))]
[(1, 2, 3), (2, 1, 3), (3, 1, 2)]
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

__all__ = [
    "Permutation",
    "SignedPermutation",
    "FlagShape",
    "RankTable",
    "length",
    "bruhat_leq",
    "min_coset_reps",
    "coset_rep_of_coordinate_flag",
    "bruhat_interval",
]


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..N} stored as its window (one-line notation)."""

    window: tuple[int, ...]

    def __post_init__(self):
        n = len(self.window)
        if sorted(self.window) != list(range(1, n + 1)):
            raise ValueError(f"window {self.window} is not a permutation of 1..{n}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_string(cls, text: str) -> "Permutation":
        return cls(tuple(int(part) for part in text.split(",")))

    def to_string(self) -> str:
        return ",".join(str(v) for v in self.window)

    @property
    def size(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        return self.window[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.size != other.size:
            raise ValueError("cannot compose permutations of different sizes")
        return Permutation(tuple(self.window[other.window[i] - 1] for i in range(self.size)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for i, v in enumerate(self.window):
            inv[v - 1] = i + 1
        return Permutation(tuple(inv))

    def length(self) -> int:
        """Number of inversions.

        >>> Permutation((3, 1, 4, 2)).length()
        3
        """
        w = self.window
        return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])

    def descents(self) -> tuple[int, ...]:
        """Positions i (1-based) with w(i) > w(i+1)."""
        w = self.window
        return tuple(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])

    def times_s(self, i: int) -> "Permutation":
        """Right multiplication by the adjacent transposition s_i."""
        if not 1 <= i <= self.size - 1:
            raise ValueError(f"s_{i} undefined in S_{self.size}")
        w = list(self.window)
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation(tuple(w))

    def conjugate_by_longest(self) -> "Permutation":
        n = self.size
        return Permutation(tuple(n + 1 - self.window[n - i] for i in range(1, n + 1)))


def length(w: Permutation) -> int:
    return w.length()


@lru_cache(maxsize=None)
def _rank_table(window: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """table[i][k] = #{j <= i+1 : w(j) <= k+1}, both indices 0-based."""
    n = len(window)
    table = []
    prev = [0] * n
    for i in range(n):
        row = prev*0 if False else list(prev)
        v = window[i]
        for k in range(v - 1, n):
            row[k] += 1
        table.append(tuple(row))
        prev = row
    return tuple(table)


def bruhat_leq(y: Permutation, w: Permutation) -> bool:
    """Bruhat order on S_N by rank-table dominance (y is below w)."""
    if y.size != w.size:
        raise ValueError("Bruhat comparison requires equal window sizes")
    ty = _rank_table(y.window)
    tw = _rank_table(w.window)
    n = y.size
    for i in range(n - 1):
        ry, rw = ty[i], tw[i]
        for k in range(n - 1):
            if ry[k] < rw[k]:
                return False
    return True


@dataclass(frozen=True)
class FlagShape:
    """Strictly increasing member dimensions d_1 < ... < d_r inside N."""

    dims: tuple[int, ...]
    ambient: int

    def __post_init__(self):
        d = self.dims
        if not d:
            raise ValueError("a flag shape needs at least one member dimension")
        if any(b <= a for a, b in zip(d, d[1:])):
            raise ValueError(f"dims {d} are not strictly increasing")
        if d[0] < 1 or d[-1] > self.ambient - 1:
            raise ValueError(f"dims {d} do not fit inside ambient {self.ambient}")

    @classmethod
    def complete(cls, n: int) -> "FlagShape":
        return cls(tuple(range(1, n)), n)

    @property
    def boundaries(self) -> tuple[int, ...]:
        return (0,) + self.dims + (self.ambient,)

    @property
    def block_sizes(self) -> tuple[int, ...]:
        b = self.boundaries
        return tuple(b[i + 1] - b[i] for i in range(len(b) - 1))


@dataclass(frozen=True)
class RankTable:
    """dim(U_{d_i} intersect <e_1..e_k>) for the members of a flag position."""

    dims: tuple[int, ...]
    ambient: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for i, row in enumerate(self.entries):
            if len(row) != self.ambient:
                raise ValueError("rank table row has wrong width")
            if row[-1] != self.dims[i]:
                raise ValueError("rank table row must end at the member dimension")
            prev = 0
            for x in row:
                if x - prev not in (0, 1):
                    raise ValueError("rank table increments must be 0 or 1")
                prev = x
        for upper, lower in zip(self.entries, self.entries[1:]):
            if any(a > b for a, b in zip(upper, lower)):
                raise ValueError("rank table rows must be nondecreasing down the flag")

    @classmethod
    def from_permutation(cls, w: Permutation, shape: FlagShape) -> "RankTable":
        full = _rank_table(w.window)
        rows = tuple(full[d - 1] for d in shape.dims)
        return cls(shape.dims, shape.ambient, rows)

    @classmethod
    def from_member_sets(cls, members, ambient: int) -> "RankTable":
        rows = []
        dims = []
        for s in members:
            s = set(s)
            dims.append(len(s))
            rows.append(tuple(sum(1 for x in s if x <= k) for k in range(1, ambient + 1)))
        return cls(tuple(dims), ambient, tuple(rows))

    def dominates(self, other: "RankTable") -> bool:
        """Entrywise >= , the closure order on cells with these member dims."""
        if self.dims != other.dims or self.ambient != other.ambient:
            raise ValueError("rank tables are not comparable")
        return all(a >= b for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb))


@lru_cache(maxsize=None)
def min_coset_reps(shape: FlagShape) -> tuple[Permutation, ...]:
    """All minimal length coset representatives for the parabolic quotient.

    These are the windows that ascend within every block of the shape, one per
    coordinate flag; sorted by (length, window).
    """
    sizes = shape.block_sizes
    reps: list[Permutation] = []

    def build(remaining: tuple[int, ...], acc: tuple[int, ...], block: int):
        if block == len(sizes):
            reps.append(Permutation(acc))
            return
        for chosen in combinations(remaining, sizes[block]):
            rest = tuple(x for x in remaining if x not in chosen)
            build(rest, acc + chosen, block + 1)

    build(tuple(range(1, shape.ambient + 1)), (), 0)
    reps.sort(key=lambda p: (p.length(), p.window))
    return tuple(reps)


def coset_rep_of_coordinate_flag(members, shape: FlagShape) -> Permutation:
    """The minimal coset representative whose coordinate flag has these members.

    `members` are nested subsets of {1..N} with sizes equal to the shape dims;
    the window simply lists each successive block in ascending order.

    >>> coset_rep_of_coordinate_flag([{3}, {1, 3, 4}], FlagShape((1, 3), 4)).window
    (3, 1, 4, 2)
    """
    sets = [frozenset(m) for m in members]
    if tuple(len(s) for s in sets) != shape.dims:
        raise ValueError("member sizes do not match the flag shape")
    previous: frozenset = frozenset()
    window: list[int] = []
    for s in sets:
        if not previous <= s:
            raise ValueError("members are not nested")
        if not s <= frozenset(range(1, shape.ambient + 1)):
            raise ValueError("member indices outside the ambient range")
        window.extend(sorted(s - previous))
        previous = s
    window.extend(sorted(frozenset(range(1, shape.ambient + 1)) - previous))
    return Permutation(tuple(window))


def is_min_coset_rep(w: Permutation, shape: FlagShape) -> bool:
    if w.size != shape.ambient:
        return False
    return set(w.descents()) <= set(shape.dims)


@lru_cache(maxsize=None)
def bruhat_interval(w: Permutation, shape: FlagShape) -> tuple[tuple[Permutation, ...], ...]:
    """All representatives y <= w, grouped by length from 0 up to length(w)."""
    if not is_min_coset_rep(w, shape):
        raise ValueError(f"{w.window} is not a minimal coset representative for {shape.dims}")
    levels: list[list[Permutation]] = [[] for _ in range(w.length() + 1)]
    for y in min_coset_reps(shape):
        if y.length() <= w.length() and bruhat_leq(y, w):
            levels[y.length()].append(y)
    return tuple(tuple(level) for level in levels)


@dataclass(frozen=True)
class SignedPermutation:
    """A signed window: absolute values form a permutation of {1..n}.

    The hyperoctahedral group is realised inside S_{2n} as the windows that
    commute with conjugation by the longest element; entry v at position i
    places v (if positive) or 2n+1-|v| (if negative) at position i, and the
    mirrored value at position 2n+1-i.
    """

    window: tuple[int, ...]

    def __post_init__(self):
        n = len(self.window)
        if sorted(abs(v) for v in self.window) != list(range(1, n + 1)) or 0 in self.window:
            raise ValueError(f"signed window {self.window} is not valid")

    @classmethod
    def from_string(cls, text: str) -> "SignedPermutation":
        return cls(tuple(int(part) for part in text.split(",")))

    def to_string(self) -> str:
        return ",".join(str(v) for v in self.window)

    @property
    def size(self) -> int:
        return len(self.window)

    def to_symmetric(self) -> Permutation:
        n = self.size
        first = [v if v > 0 else 2 * n + 1 + v for v in
                 (x if x > 0 else -(2 * n - (-x) + 1) + 0 for x in self.window)]
        # map +k -> k and -k -> 2n+1-k, then complete symmetrically
        first = [v if v > 0 else 2 * n + 1 - (-v) for v in self.window]
        second = [2 * n + 1 - v for v in reversed(first)]
        return Permutation(tuple(first + second))

    def bruhat_leq(self, other: "SignedPermutation") -> bool:
        """Order via the symmetric-group embedding, restricted to mirrored windows."""
        return bruhat_leq(self.to_symmetric(), other.to_symmetric())
