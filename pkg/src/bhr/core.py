"""Fundamental types and operations for cyclic edge-length realizations.

Vertices of the complete graph K_v are labeled 0..v-1 and the length of
the edge between x and y is min(|x-y|, v-|x-y|).  A Hamiltonian path
realizes the multiset of its v-1 edge lengths.  This module provides the
multiset/path types, admissibility testing, realization verification and
the growability test that the rest of the package is built on.

Conventions that are easy to get wrong:

* The second coordinate m of a grow point is a vertex *label*, not a
  position in the path.  The embedding y -> y (y <= m), y -> y+x (y > m)
  acts on labels.
* A "lengthened" edge is one whose image under the embedding into
  K_{v+x} has a strictly larger cyclic length than the original edge
  had in K_v.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field


class MultisetError(ValueError):
    """Malformed length multiset or multiset text."""


class PathError(ValueError):
    """Sequence is not a valid Hamiltonian path on 0..v-1."""


class NotGrowableError(ValueError):
    """A grow-type operation was attempted at a point that is not growable."""


@dataclass(frozen=True, order=True)
class GrowPoint:
    """A pair (x, m): the path is x-growable at vertex label m."""

    x: int
    m: int


@dataclass(frozen=True)
class LengthMultiset:
    """Multiset of edge lengths, stored as sorted (length, count) pairs."""

    items: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for length, count in self.items:
            if length < 1:
                raise MultisetError(f"length {length} < 1")
            if count < 1:
                raise MultisetError(f"count {count} < 1 for length {length}")
        if [l for l, _ in self.items] != sorted({l for l, _ in self.items}):
            raise MultisetError("items must be sorted with distinct lengths")

    @classmethod
    def from_counts(cls, counts: dict[int, int]) -> "LengthMultiset":
        return cls(tuple(sorted((l, c) for l, c in counts.items() if c)))

    @classmethod
    def from_lengths(cls, lengths) -> "LengthMultiset":
        counts: dict[int, int] = {}
        for l in lengths:
            counts[l] = counts.get(l, 0) + 1
        return cls.from_counts(counts)

    @classmethod
    def parse(cls, text: str) -> "LengthMultiset":
        """Parse the `len` / `len^mult` grammar, e.g. "1^4 2 3^8 4"."""
        counts: dict[int, int] = {}
        tokens = text.split()
        if not tokens:
            raise MultisetError("empty multiset text")
        for tok in tokens:
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", tok)
            if not m:
                raise MultisetError(f"bad multiset token {tok!r}")
            length = int(m.group(1))
            mult = int(m.group(2)) if m.group(2) else 1
            if length < 1 or mult < 1:
                raise MultisetError(f"bad multiset token {tok!r}")
            counts[length] = counts.get(length, 0) + mult
        return cls.from_counts(counts)

    def counts(self) -> dict[int, int]:
        return dict(self.items)

    def multiplicity(self, length: int) -> int:
        return dict(self.items).get(length, 0)

    @property
    def size(self) -> int:
        return sum(c for _, c in self.items)

    @property
    def v(self) -> int:
        """Order of the complete graph this multiset is sized for."""
        return self.size + 1

    @property
    def underlying_set(self) -> frozenset[int]:
        return frozenset(l for l, _ in self.items)

    @property
    def max_length(self) -> int:
        return self.items[-1][0] if self.items else 0

    def __add__(self, other: "LengthMultiset") -> "LengthMultiset":
        counts = self.counts()
        for l, c in other.items:
            counts[l] = counts.get(l, 0) + c
        return LengthMultiset.from_counts(counts)

    def add_copies(self, length: int, count: int) -> "LengthMultiset":
        counts = self.counts()
        counts[length] = counts.get(length, 0) + count
        return LengthMultiset.from_counts(counts)

    def scale(self, factor: int) -> "LengthMultiset":
        """Multiset with every length multiplied by factor."""
        return LengthMultiset(tuple((l * factor, c) for l, c in self.items))

    def format(self) -> str:
        return " ".join(
            f"{l}^{c}" if c > 1 else str(l) for l, c in self.items
        )

    def __str__(self) -> str:
        return self.format()


@dataclass(frozen=True)
class HamPath:
    """A Hamiltonian path: a permutation of 0..v-1 in visiting order."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        v = len(self.vertices)
        if v < 1:
            raise PathError("empty path")
        if sorted(self.vertices) != list(range(v)):
            raise PathError(f"not a permutation of 0..{v - 1}: {self.vertices}")

    @classmethod
    def of(cls, vertices) -> "HamPath":
        return cls(tuple(vertices))

    @property
    def v(self) -> int:
        return len(self.vertices)

    def reverse(self) -> "HamPath":
        return HamPath(tuple(reversed(self.vertices)))

    def pairs(self):
        vs = self.vertices
        return zip(vs, vs[1:])


@dataclass(frozen=True)
class Admissibility:
    """Verdict of the divisor test.  ok, or the smallest obstruction.

    reason is one of "ok", "oversized" (some length exceeds floor(v/2),
    in which case `length` is set) or "divisor" (`divisor` multiples
    count `count` exceeds the bound v - divisor).
    """

    ok: bool
    reason: str = "ok"
    divisor: int | None = None
    count: int | None = None
    bound: int | None = None
    length: int | None = None

    def describe(self) -> str:
        if self.ok:
            return "admissible"
        if self.reason == "oversized":
            return f"length {self.length} exceeds floor(v/2)"
        return (
            f"divisor {self.divisor}: {self.count} multiples "
            f"exceed bound {self.bound}"
        )


def edge_length(a: int, b: int, v: int) -> int:
    """Length of the edge between vertices a and b of K_v."""
    if not (0 <= a < v and 0 <= b < v):
        raise PathError(f"vertex out of range for v={v}: ({a}, {b})")
    if a == b:
        raise PathError(f"no edge from vertex {a} to itself")
    d = abs(a - b)
    return min(d, v - d)


def cyclic_lengths(path: HamPath) -> LengthMultiset:
    """Multiset of cyclic edge lengths along the path."""
    v = path.v
    return LengthMultiset.from_lengths(
        edge_length(a, b, v) for a, b in path.pairs()
    )


def linear_diffs(path: HamPath) -> LengthMultiset:
    """Multiset of absolute differences along the path."""
    return LengthMultiset.from_lengths(abs(a - b) for a, b in path.pairs())


def is_standard(path: HamPath) -> bool:
    return path.vertices[0] == 0


def is_perfect(path: HamPath) -> bool:
    return path.vertices[0] == 0 and path.vertices[-1] == path.v - 1


def divisors(n: int) -> list[int]:
    result = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            result.append(d)
            if d != n // d:
                result.append(n // d)
        d += 1
    return sorted(result)


def is_admissible(ms: LengthMultiset) -> Admissibility:
    """Divisor condition: for each d | v, multiples of d number at most v-d."""
    if not ms.items:
        raise MultisetError("admissibility of the empty multiset is undefined")
    v = ms.v
    for length, _ in ms.items:
        if length > v // 2:
            return Admissibility(False, "oversized", length=length)
    for d in divisors(v):
        if d == 1:
            continue
        count = sum(c for l, c in ms.items if l % d == 0)
        if count > v - d:
            return Admissibility(
                False, "divisor", divisor=d, count=count, bound=v - d
            )
    return Admissibility(True)


def check_realization(path: HamPath, ms: LengthMultiset) -> tuple[bool, str]:
    """Check path realizes ms; distinguishes order and multiset mismatches."""
    if path.v != ms.v:
        return False, f"order mismatch: path has {path.v} vertices, need {ms.v}"
    realized = cyclic_lengths(path)
    if realized != ms:
        return False, f"multiset mismatch: path realizes {realized}"
    return True, "ok"


def verify_realization(path: HamPath, ms: LengthMultiset) -> bool:
    return check_realization(path, ms)[0]


def embed(y: int, x: int, m: int) -> int:
    """The K_v -> K_{v+x} embedding used throughout: shift labels above m."""
    return y if y <= m else y + x


def lengthened_pairs(
    path: HamPath, x: int, m: int
) -> list[tuple[int, int]]:
    """Consecutive pairs whose edge length increases under the embedding."""
    v = path.v
    out = []
    for a, b in path.pairs():
        old = edge_length(a, b, v)
        new = edge_length(embed(a, x, m), embed(b, x, m), v + x)
        if new > old:
            out.append((a, b))
    return out


def is_growable_at(path: HamPath, x: int, m: int) -> bool:
    """Test x-growability at label m.

    Each label y with m-x < y <= m must be incident with exactly one
    lengthened edge, and no edge outside those may be lengthened.  The
    window must consist of x actual labels (m >= x-1); otherwise growing
    could not insert the x labels m+1..m+x and is reported not growable.

    A lengthened edge is either a straddling pair (y <= m < z, whose
    non-wrapping length z - y gains x from the shift of z) or a
    wrap-around pair with both endpoints fixed (length v - |a - b|,
    which gains x because v does).  Either way the growth construction
    can only serve it through a single window endpoint, so an edge with
    both endpoints in the window rules growability out.
    """
    v = path.v
    if not (0 < x <= v / 2):
        raise ValueError(f"x={x} out of range 0 < x <= v/2 for v={v}")
    if not (0 <= m < v):
        raise ValueError(f"m={m} out of range 0 <= m < v for v={v}")
    if m - x + 1 < 0:
        return False
    window = range(m - x + 1, m + 1)
    incident = {y: 0 for y in window}
    for a, b in lengthened_pairs(path, x, m):
        hits = [y for y in (a, b) if y in incident]
        if len(hits) != 1:
            return False
        incident[hits[0]] += 1
    return all(n == 1 for n in incident.values())


def growth_points(path: HamPath) -> list[GrowPoint]:
    """All grow points of the path, sorted by (x, m)."""
    v = path.v
    return [
        GrowPoint(x, m)
        for x in range(1, v // 2 + 1)
        for m in range(v)
        if is_growable_at(path, x, m)
    ]


def translate(seq, m: int) -> list[int]:
    """Elementwise shift; a splice building block, not generally a HamPath."""
    return [y + m for y in seq]


@dataclass(frozen=True)
class Certificate:
    """A verified realization with its known grow points and derivation."""

    path: HamPath
    multiset: LengthMultiset
    grow_points: tuple[GrowPoint, ...] = ()
    trace: tuple[tuple[str, dict], ...] = field(default_factory=tuple)

    def __post_init__(self):
        ok, why = check_realization(self.path, self.multiset)
        if not ok:
            raise PathError(f"certificate does not verify: {why}")
        for gp in self.grow_points:
            if not is_growable_at(self.path, gp.x, gp.m):
                raise NotGrowableError(
                    f"declared grow point ({gp.x}, {gp.m}) fails"
                )

    def point_for(self, x: int) -> GrowPoint:
        for gp in self.grow_points:
            if gp.x == x:
                return gp
        raise NotGrowableError(f"certificate has no {x}-grow point")

    def with_step(self, name: str, **params) -> tuple[tuple[str, dict], ...]:
        return self.trace + ((name, params),)

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "path": list(self.path.vertices),
            "multiset": self.multiset.format(),
            "grow_points": [[gp.x, gp.m] for gp in self.grow_points],
            "trace": [[name, params] for name, params in self.trace],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "Certificate":
        return cls(
            path=HamPath.of(data["path"]),
            multiset=LengthMultiset.parse(data["multiset"]),
            grow_points=tuple(GrowPoint(x, m) for x, m in data["grow_points"]),
            trace=tuple(
                (name, dict(params)) for name, params in data.get("trace", [])
            ),
        )

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        return cls.from_dict(json.loads(text))


def certificate(path, counts_or_ms, grow_points=(), trace=()) -> Certificate:
    """Convenience constructor from raw sequences / count maps."""
    if isinstance(counts_or_ms, LengthMultiset):
        ms = counts_or_ms
    else:
        ms = LengthMultiset.from_counts(counts_or_ms)
    if not isinstance(path, HamPath):
        path = HamPath.of(path)
    gps = tuple(
        gp if isinstance(gp, GrowPoint) else GrowPoint(*gp)
        for gp in grow_points
    )
    return Certificate(path, ms, gps, tuple(trace))
