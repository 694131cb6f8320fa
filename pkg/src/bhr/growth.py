"""The growth calculus: the grow step, iterated growth and splices.

All operations take a Certificate, rebuild the path explicitly, and
return a new Certificate whose multiset is recomputed from the path and
checked against the operation's contract, so a successful return is
itself a proof that the step is sound.

Grow-point bookkeeping after growing with (x, m): a known point (x', m')
stays at m' if m' <= m and moves to m' + x otherwise.  Every remapped
point is re-validated before it is kept.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Certificate,
    GrowPoint,
    HamPath,
    LengthMultiset,
    NotGrowableError,
    cyclic_lengths,
    growth_points,
    is_growable_at,
    is_perfect,
    lengthened_pairs,
    linear_diffs,
    translate,
)


@dataclass(frozen=True)
class GrowthSchedule:
    """Ordered (x, count) steps; step i applies count grows with that x."""

    steps: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for x, count in self.steps:
            if x < 1 or count < 0:
                raise ValueError(f"bad schedule step ({x}, {count})")

    @classmethod
    def parse(cls, text: str) -> "GrowthSchedule":
        """Parse "2*4 3*3" as four 2-grows then three 3-grows."""
        steps = []
        for tok in text.split():
            x, _, count = tok.partition("*")
            steps.append((int(x), int(count) if count else 1))
        return cls(tuple(steps))


def _remap_points(points, x: int, m: int, path: HamPath):
    """Relocate grow points across a grow: m' <= m keeps its label,
    m' > m shifts by x.  Every relocated point is re-validated and
    silently dropped if it no longer passes; relocation usually
    preserves growability, but an edge sitting exactly at the wrap
    threshold can start lengthening once v grows, so preservation is
    not universal.  A later step that needs a dropped point fails
    loudly in point_for."""
    remapped = []
    for gp in points:
        new_m = gp.m if gp.m <= m else gp.m + x
        if is_growable_at(path, gp.x, new_m):
            remapped.append(GrowPoint(gp.x, new_m))
    return tuple(remapped)


def _expect(cert_path: HamPath, expected: LengthMultiset, op: str) -> None:
    realized = cyclic_lengths(cert_path)
    if realized != expected:
        raise NotGrowableError(
            f"{op} produced {realized}, expected {expected}"
        )


def grow(cert: Certificate, x: int, m: int) -> Certificate:
    """One grow step: embed into K_{v+x} and insert labels m+1..m+x.

    Each lengthened pair is broken by inserting w + x next to its
    window endpoint w: a straddling pair (y, z+x) becomes
    (y, y+x, z+x), its reverse (z+x, y) becomes (z+x, y+x, y), and a
    wrap-around pair (z, w) with both endpoints fixed becomes
    (z, w+x, w).  Orientation follows the path, so the result is
    deterministic.
    """
    path = cert.path
    v = path.v
    if not is_growable_at(path, x, m):
        raise NotGrowableError(f"path is not {x}-growable at {m}")

    window = range(m - x + 1, m + 1)
    pending = {}
    for a, b in lengthened_pairs(path, x, m):
        hits = [t for t in (a, b) if t in window]
        if len(hits) != 1:
            raise NotGrowableError(
                f"lengthened pair ({a}, {b}) has no unique window endpoint"
            )
        if (a, b) in pending:
            raise NotGrowableError(f"pair ({a}, {b}) lengthened twice")
        pending[(a, b)] = hits[0]

    def img(y):
        return y if y <= m else y + x

    new_vertices = [img(path.vertices[0])]
    for a, b in path.pairs():
        if (a, b) in pending:
            new_vertices.append(pending[(a, b)] + x)
        new_vertices.append(img(b))
    new_path = HamPath.of(new_vertices)

    expected = cert.multiset.add_copies(x, x)
    _expect(new_path, expected, "grow")
    return Certificate(
        path=new_path,
        multiset=expected,
        grow_points=_remap_points(cert.grow_points, x, m, new_path),
        trace=cert.with_step("grow", x=x, m=m),
    )


def multi_grow(cert: Certificate, schedule: GrowthSchedule) -> Certificate:
    """Apply the schedule left-to-right, reusing the tracked grow point."""
    for index, (x, count) in enumerate(schedule.steps):
        for _ in range(count):
            try:
                cert = grow(cert, x, cert.point_for(x).m)
            except NotGrowableError as exc:
                raise NotGrowableError(
                    f"schedule step {index} (x={x}): {exc}"
                ) from exc
    return cert


def _substitute(path: HamPath, values: list[int], repl: list[int]) -> HamPath:
    """Replace the (possibly reversed) run of values with repl.

    repl must have the same endpoints as values so the boundary edges
    keep their lengths; interior elements may differ.
    """
    vs = _substitute_raw(list(path.vertices), values, repl)
    return HamPath.of(vs)


def _substitute_raw(vs: list[int], values: list[int], repl: list[int]):
    """Run replacement on a raw vertex list, deferring validation.

    Needed when two replacements only restore a permutation jointly."""
    pos = {label: i for i, label in enumerate(vs)}
    i = pos[values[0]]
    n = len(values)
    if vs[i : i + n] == values:
        return vs[:i] + repl + vs[i + n :]
    j = i - n + 1
    if j >= 0 and vs[j : i + 1] == values[::-1]:
        return vs[:j] + repl[::-1] + vs[i + 1 :]
    raise NotGrowableError(f"expected subsequence {values} not found in path")


def splice_perfect(cert: Certificate, k_real: HamPath) -> Certificate:
    """Grow a 1-run of |K| new labels and overwrite it with a translate
    of a perfect linear realization of K.  Realizes L with K merged in.

    Grow points of the result are re-derived by a full scan.
    """
    if not is_perfect(k_real):
        raise NotGrowableError("k_real must be a perfect linear realization")
    k = k_real.v - 1
    gp = cert.point_for(1)
    for _ in range(k):
        cert = grow(cert, 1, gp.m)
    run = list(range(gp.m, gp.m + k + 1))
    new_path = _substitute(cert.path, run, translate(k_real.vertices, gp.m))

    spliced = linear_diffs(k_real)
    # cert.multiset currently holds L + {1^k}; swap those 1s for K.
    counts = cert.multiset.counts()
    counts[1] -= k
    expected = LengthMultiset.from_counts(counts) + spliced
    _expect(new_path, expected, "splice_perfect")
    return Certificate(
        path=new_path,
        multiset=expected,
        grow_points=tuple(growth_points(new_path)),
        trace=cert.with_step("splice", k_real=list(k_real.vertices)),
    )


def _zigzag(lows: list[int], highs: list[int]) -> list[int]:
    """Interleave [l0,H0,H1,l1, l2,H2,H3,l3, ...] ending [l_last, H_last].

    Requires an odd number of lows (= highs); consecutive low pairs give
    difference-1 edges, low/high hops give the long edges.
    """
    n = len(lows)
    assert n == len(highs) and n % 2 == 1
    out = []
    for j in range(0, n - 1, 2):
        out += [lows[j], highs[j], highs[j + 1], lows[j + 1]]
    out += [lows[n - 1], highs[n - 1]]
    return out


def even_grow(cert: Certificate, y: int, z: int) -> Certificate:
    """From a 2-growable realization of L, realize
    L + {1^(y+z-4), y^(y+1), z^(z+1)} for even y, z >= 4.

    Grows 2s until two interleaved arithmetic runs cover the new labels,
    then rewrites the runs with two explicit sequences whose lengths are
    {1^(y-2), y^(y-1), z^2} and {1^(z-2), y^2, z^(z-1)}.  The result is
    y-growable at m+y-1 and z-growable at m+2y+z-2.
    """
    if y % 2 or z % 2:
        raise NotGrowableError("y and z must be even")
    if y < 4 or z < 4:
        raise NotGrowableError("y and z must be at least 4")
    gp = cert.point_for(2)
    m = gp.m
    base = cert.multiset
    others = tuple(p for p in cert.grow_points if p != gp)
    for _ in range(y + z - 1):
        cert = grow(cert, 2, m)

    run_a = list(range(m, m + 2 * y + 2 * z - 1, 2))
    run_b = list(range(m - 1, m + 2 * y + 2 * z - 2, 2))
    g = _zigzag(list(range(1, y)), list(range(y + 1, 2 * y)))
    g += [2 * y + z - 1, 2 * y + 2 * z - 1]
    h = [0, y] + _zigzag(
        list(range(2 * y, 2 * y + z - 1)),
        list(range(2 * y + z, 2 * y + 2 * z - 1)),
    )
    # the two replacement sequences only restore a permutation jointly,
    # so both substitutions happen before the path is validated
    vs = _substitute_raw(list(cert.path.vertices), run_a, translate(g, m - 1))
    vs = _substitute_raw(vs, run_b, translate(h, m - 1))
    new_path = HamPath.of(vs)

    expected = base + LengthMultiset.from_counts(
        {1: y + z - 4, y: y + 1, z: z + 1}
        if y != z
        else {1: y + z - 4, y: 2 * y + 2}
    )
    _expect(new_path, expected, "even_grow")
    points = [GrowPoint(y, m + y - 1), GrowPoint(z, m + 2 * y + z - 2)]
    for p in points:
        if not is_growable_at(new_path, p.x, p.m):
            raise NotGrowableError(f"even_grow point ({p.x}, {p.m}) fails")
    # relocated carried-over points (the consumed 2-point included) are
    # re-validated and dropped on failure, matching grow's semantics
    shift = 2 * (y + z - 1)
    for p in others + (gp,):
        cand = GrowPoint(p.x, p.m if p.m <= m else p.m + shift)
        if cand not in points and is_growable_at(new_path, cand.x, cand.m):
            points.append(cand)
    return Certificate(
        path=new_path,
        multiset=expected,
        grow_points=tuple(sorted(points)),
        trace=cert.with_step("even_grow", y=y, z=z),
    )


def x2x_swap(cert: Certificate, x: int, i: int) -> Certificate:
    """Three x-grows, then swap the middle pair in i of the x four-term
    arithmetic runs, realizing L + {x^(3x-2i), (2x)^(2i)}.

    The runs start at m+1-x, ..., m; the i runs with the smallest
    starting labels are swapped, which makes the operation deterministic.
    """
    if not (0 <= i <= x):
        raise NotGrowableError(f"i={i} out of range 0..{x}")
    gp = cert.point_for(x)
    m = gp.m
    base = cert.multiset
    for _ in range(3):
        cert = grow(cert, x, m)
    new_path = cert.path
    for t in range(i):
        start = m + 1 - x + t
        run = [start, start + x, start + 2 * x, start + 3 * x]
        swapped = [start, start + 2 * x, start + x, start + 3 * x]
        new_path = _substitute(new_path, run, swapped)

    added = {x: 3 * x - 2 * i}
    if i:
        added[2 * x] = 2 * i
    expected = base + LengthMultiset.from_counts(added)
    _expect(new_path, expected, "x2x_swap")
    points = _remap_points_after_block(cert.grow_points, new_path)
    return Certificate(
        path=new_path,
        multiset=expected,
        grow_points=points,
        trace=cert.with_step("x2x_swap", x=x, i=i),
    )


def _remap_points_after_block(points, path: HamPath):
    """Re-validate already-relocated points after an in-place rewrite,
    dropping any the rewrite broke (see _remap_points)."""
    return tuple(
        gp for gp in points if is_growable_at(path, gp.x, gp.m)
    )


def perf_grow(cert: Certificate, x: int, parts) -> Certificate:
    """Generalized swap: grow k times at x, then overwrite the t-th
    arithmetic run with the x-scaled translate of the t-th perfect
    linear realization.  Realizes L + x*L_1 + ... + x*L_x where L_t is
    the difference multiset of part t (each of size k).
    """
    parts = [p if isinstance(p, HamPath) else HamPath.of(p) for p in parts]
    if len(parts) != x:
        raise NotGrowableError(f"need exactly {x} parts, got {len(parts)}")
    k = parts[0].v - 1
    for p in parts:
        if p.v - 1 != k:
            raise NotGrowableError("parts must all have the same length")
        if not is_perfect(p):
            raise NotGrowableError(f"part {list(p.vertices)} is not perfect")
    gp = cert.point_for(x)
    m = gp.m
    base = cert.multiset
    for _ in range(k):
        cert = grow(cert, x, m)
    new_path = cert.path
    expected = base
    for t, part in enumerate(parts):
        start = m + 1 - x + t
        run = [start + j * x for j in range(k + 1)]
        repl = translate([x * e for e in part.vertices], start)
        new_path = _substitute(new_path, run, repl)
        expected = expected + linear_diffs(part).scale(x)
    _expect(new_path, expected, "perf_grow")
    points = _remap_points_after_block(cert.grow_points, new_path)
    return Certificate(
        path=new_path,
        multiset=expected,
        grow_points=points,
        trace=cert.with_step(
            "perf_grow", x=x, parts=[list(p.vertices) for p in parts]
        ),
    )
