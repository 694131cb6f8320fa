"""Closed-form {1,x}-growable realizations of {1^(x-1), x^(x+1)},
{1^(x-2), x^(x+2)}, {1^(x-2), x^(2x)} and {1^(x-2), x^b} for every b
with x+3 <= b <= 2x-1.

Together these supply, for any x >= 4, a growable seed whose number of
x's hits every residue class mod x, which is what the general
{1, x, 2x} solver needs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Certificate, GrowPoint, HamPath, LengthMultiset


@dataclass(frozen=True)
class FamilyParams:
    """The (r, s) decomposition behind a {1^(x-2), x^b} construction.

    Derived uniquely from (x, b); the four branches satisfy
      even x, odd b:  x = 2r+2s+4, b = x+2r+3, 0 <= r <= (x-4)/2
      even x, even b: x = 2r+2s+6, b = x+2r+4, 0 <= r <= (x-6)/2
      odd x, odd b:   x = 2r+2s+5, b = x+2r+4, 0 <= r <= (x-5)/2
      odd x, even b:  x = 2r+2s+5, b = x+2r+3, 0 <= r <= (x-5)/2
    """

    x: int
    b: int
    r: int
    s: int

    @classmethod
    def derive(cls, x: int, b: int) -> "FamilyParams":
        if not x + 3 <= b <= 2 * x - 1:
            raise ValueError(f"b={b} outside range {x+3}..{2*x-1}")
        if x % 2 == 0:
            if b % 2 == 1:
                r = (b - x - 3) // 2
                s = (x - 4 - 2 * r) // 2
            else:
                if x == 4:
                    raise ValueError("x=4 has no even b in range")
                r = (b - x - 4) // 2
                s = (x - 6 - 2 * r) // 2
        else:
            if b % 2 == 1:
                r = (b - x - 4) // 2
                s = (x - 5 - 2 * r) // 2
            else:
                r = (b - x - 3) // 2
                s = (x - 5 - 2 * r) // 2
        if r < 0 or s < 0:
            raise ValueError(f"no (r, s) decomposition for x={x}, b={b}")
        return cls(x, b, r, s)


def _cert(seq, counts, points) -> Certificate:
    return Certificate(
        path=HamPath.of(seq),
        multiset=LengthMultiset.from_counts(counts),
        grow_points=tuple(GrowPoint(x, m) for x, m in points),
        trace=(("family", {"v": len(seq)}),),
    )


def construct_1x_basic(x: int, which: int) -> Certificate:
    """The three hand-patterned families: which selects the number of
    x's among x+1, x+2 and 2x.  All are {1,x}-growable."""
    if x < 4:
        raise ValueError("x must be at least 4")
    if which == x + 1:
        if x % 2 == 0:
            seq = [1, x + 1, 0, 2 * x, x]
            for j in range(1, x - 1):
                pair = [x - j, 2 * x - j]
                seq += pair if j % 2 else pair[::-1]
            points = [(1, 1), (x, x)]
        else:
            seq = [x, x + 1, 1, 0, 2 * x, x - 1, 2 * x - 1]
            for j in range(2, x - 1):
                pair = [x - j, 2 * x - j]
                seq += pair if j % 2 == 0 else pair[::-1]
            # the x-grow point is x, not x-1: at m = x-1 both endpoints
            # of the wrap edge (0, 2x) land in the window
            points = [(1, 2 * x - 1), (x, x)]
        counts = {1: x - 1, x: x + 1}
    elif which == x + 2:
        if x % 2 == 0:
            seq = [x, 2 * x, 0, x + 1, 1, x + 2, 2]
            for j in range(3, x):
                pair = [j, x + j]
                seq += pair if j % 2 else pair[::-1]
            points = [(1, 1), (x, x)]
        else:
            seq = [0, x, x - 1, 2 * x, 2 * x - 1, x - 2, 2 * x - 2]
            for j in range(3, x):
                pair = [x - j, 2 * x - j]
                seq += pair if j % 2 else pair[::-1]
            points = [(1, 2 * x - 2), (x, x - 1)]
        counts = {1: x - 2, x: x + 2}
    elif which == 2 * x:
        if x % 2 == 0:
            seq = []
            for j in range(0, x - 3):
                triple = [j, x + j, 2 * x + j]
                seq += triple if j % 2 == 0 else triple[::-1]
            seq += [x - 3, 2 * x - 3, 2 * x - 2, x - 2,
                    3 * x - 3, 3 * x - 2, x - 1, 2 * x - 1]
            # 1-growable at 3x-4, not 3x-3: at m = 3x-3 the edge to
            # 3x-2 is lengthened alongside the wrap edge
            points = [(1, 3 * x - 4), (x, x - 1)]
        else:
            seq = [3 * x - 2, x - 1, 2 * x - 1]
            for j in range(0, x - 3):
                triple = [j, x + j, 2 * x + j]
                seq += triple[::-1] if j % 2 == 0 else triple
            seq += [x - 3, 2 * x - 3, 2 * x - 2, x - 2, 3 * x - 3]
            points = [(1, 3 * x - 4), (x, x)]
        counts = {1: x - 2, x: 2 * x}
    else:
        raise ValueError(f"which must be {x+1}, {x+2} or {2*x}")
    return _cert(seq, counts, points)


def _pairs(a0, b0, n):
    """n pairs (a0 + p, b0 + p); odd-indexed pairs are reversed."""
    seq = []
    for p in range(n):
        pair = [a0 + p, b0 + p]
        seq += pair if p % 2 == 0 else pair[::-1]
    return seq


def _triples(first, n):
    """n descending triples stepping down by 1, odd ones reversed."""
    a, b, c = first
    seq = []
    for q in range(n):
        triple = [a - q, b - q, c - q]
        seq += triple if q % 2 == 0 else triple[::-1]
    return seq


def construct_1x_even(x: int, b: int) -> Certificate:
    """{1^(x-2), x^b} for even x >= 4 and x+3 <= b <= 2x-1."""
    if x < 4 or x % 2:
        raise ValueError("x must be even and at least 4")
    p = FamilyParams.derive(x, b)
    r, s = p.r, p.s
    if b % 2 == 1:
        # pairs, then triples, then a two-edge closer; v = 6r+4s+10
        seq = _pairs(2 * r + 1, 4 * r + 2 * s + 5, 2 * s + 2)
        seq += _triples(
            (6 * r + 4 * s + 8, 4 * r + 2 * s + 4, 2 * r), 2 * r + 1
        )
        seq += [6 * r + 4 * s + 9, 2 * r + 2 * s + 3, 4 * r + 4 * s + 7]
        v = 6 * r + 4 * s + 10
        points = [(1, v - 2), (x, x - 1)]
    else:
        # pairs, a fixed 10-element middle, then triples; v = 6r+4s+15
        seq = _pairs(4 * r + 2 * s + 11, 2 * r + 5, 2 * s + 1)
        seq += [2 * r + 2 * s + 6, 4 * r + 4 * s + 12,
                4 * r + 4 * s + 13, 2 * r + 2 * s + 7, 1,
                4 * r + 2 * s + 10, 2 * r + 4, 2 * r + 3,
                4 * r + 2 * s + 9, 0]
        seq += _triples(
            (6 * r + 4 * s + 14, 4 * r + 2 * s + 8, 2 * r + 2),
            2 * r + 1,
        )
        points = [(1, 1), (x, x)]
    return _cert(seq, {1: x - 2, x: b}, points)


def construct_1x_odd(x: int, b: int) -> Certificate:
    """{1^(x-2), x^b} for odd x >= 5 and x+3 <= b <= 2x-1."""
    if x < 5 or x % 2 == 0:
        raise ValueError("x must be odd and at least 5")
    p = FamilyParams.derive(x, b)
    r, s = p.r, p.s
    triples = _triples(
        (6 * r + 4 * s + 10, 4 * r + 2 * s + 5, 2 * r), 2 * r + 1
    )
    if b % 2 == 1:
        # triples, a six-element middle, then pairs; v = 6r+4s+13
        seq = triples
        seq += [6 * r + 4 * s + 12, 2 * r + 2 * s + 4,
                4 * r + 4 * s + 9, 4 * r + 4 * s + 8,
                2 * r + 2 * s + 3, 6 * r + 4 * s + 11]
        seq += _pairs(4 * r + 2 * s + 6, 2 * r + 1, 2 * s + 2)
        v = 6 * r + 4 * s + 13
    else:
        # pairs, the same triples, then a two-edge closer; v = 6r+4s+12
        seq = _pairs(4 * r + 2 * s + 6, 2 * r + 1, 2 * s + 3)
        seq += triples
        seq += [6 * r + 4 * s + 11, 2 * r + 2 * s + 4, 4 * r + 4 * s + 9]
        v = 6 * r + 4 * s + 12
    points = [(1, v - 2), (x, x - 1)]
    return _cert(seq, {1: x - 2, x: b}, points)


def seed_for_residue(x: int, residue: int) -> Certificate:
    """A {1,x}-growable seed for {1^a', x^b'} with b' = residue mod x.

    b' runs over x+1 .. 2x, so every residue is reachable; a' = x-2
    except for residue 1, where admissibility forces a' = x-1.
    """
    if x < 4:
        raise ValueError("x must be at least 4")
    residue %= x
    b = 2 * x if residue == 0 else x + residue
    if b == x + 1:
        return construct_1x_basic(x, x + 1)
    if b == x + 2 or b == 2 * x:
        return construct_1x_basic(x, b)
    if x % 2 == 0:
        return construct_1x_even(x, b)
    return construct_1x_odd(x, b)
