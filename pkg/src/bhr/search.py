"""Heuristic and exhaustive search for realizations, plus small-order
conjecture sweeps.

local_search hill-climbs on the overlap between the target multiset and
the multiset realized by a candidate path, moving through a 2-opt-style
neighborhood: cut one path edge and reconnect the two fragments another
way.  brute_force is a depth-first oracle with remaining-length pruning;
it is exhaustive, so a None return is a definitive nonexistence verdict.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import (
    Certificate,
    HamPath,
    LengthMultiset,
    MultisetError,
    cyclic_lengths,
    edge_length,
    is_admissible,
)

DEFAULT_BRUTE_CAP = 14
DEFAULT_DEFINITIVE_CAP = 12


@dataclass(frozen=True)
class SearchConfig:
    """Budget and determinism knobs for the heuristic search."""

    rng_seed: int = 0
    max_restarts: int = 200
    max_steps_per_restart: int = 2000
    parallel_restarts: int = 1

    def __post_init__(self):
        if self.max_restarts < 1:
            raise ValueError("max_restarts must be positive")
        if self.max_steps_per_restart < 1:
            raise ValueError("max_steps_per_restart must be positive")
        if self.parallel_restarts < 1:
            raise ValueError("parallel_restarts must be positive")


def _overlap(target: dict[int, int], realized: dict[int, int]) -> int:
    """|L intersect L'| as multisets."""
    return sum(min(c, realized.get(l, 0)) for l, c in target.items())


def _length_counts(vertices: list[int], v: int) -> dict[int, int]:
    counts: dict[int, int] = {}
    for a, b in zip(vertices, vertices[1:]):
        l = edge_length(a, b, v)
        counts[l] = counts.get(l, 0) + 1
    return counts


def _reconnect(vertices: list[int], i: int, which: int) -> list[int]:
    """Reconnection `which` after cutting the edge at position i.

    Cutting between positions i and i+1 leaves fragments A and B; the
    candidates are A + reversed(B), reversed(A) + B and B + A, each of
    which replaces exactly the cut edge with one new edge."""
    a, b = vertices[: i + 1], vertices[i + 1 :]
    if which == 0:
        return a + b[::-1]
    if which == 1:
        return a[::-1] + b
    return b + a


def _new_edge(vertices: list[int], i: int, which: int, v: int) -> int:
    """Length of the single edge that reconnection `which` introduces."""
    if which == 0:
        return edge_length(vertices[i], vertices[-1], v)
    if which == 1:
        return edge_length(vertices[0], vertices[i + 1], v)
    return edge_length(vertices[-1], vertices[0], v)


def local_search(
    ms: LengthMultiset, cfg: SearchConfig | None = None
) -> Certificate | None:
    """Randomized hill climb for a realization of ms.

    Deterministic for a fixed SearchConfig: restart r draws from
    random.Random(f"{rng_seed}:{r}"), and restarts are merged in index
    order, so the answer does not depend on scheduling.  Returns a
    verified Certificate, or None when the budget is exhausted.
    """
    cfg = cfg or SearchConfig()
    adm = is_admissible(ms)
    if not adm.ok:
        raise MultisetError(f"not admissible: {adm.describe()}")
    v = ms.v
    target = ms.counts()
    full = ms.size
    for restart in range(cfg.max_restarts):
        rng = random.Random(f"{cfg.rng_seed}:{restart}")
        current = list(range(v))
        rng.shuffle(current)
        counts = _length_counts(current, v)
        score = _overlap(target, counts)
        stagnant = 0
        steps = 0
        while score < full and stagnant < cfg.max_steps_per_restart:
            steps += 1
            i = rng.randrange(v - 1)
            # each reconnection replaces only the cut edge, so its score
            # is an O(1) delta from the current one
            removed = edge_length(current[i], current[i + 1], v)
            drop = 1 if counts[removed] <= target.get(removed, 0) else 0
            best = None
            for which in range(3):
                added = _new_edge(current, i, which, v)
                have = counts.get(added, 0) - (1 if added == removed else 0)
                gain = 1 if have < target.get(added, 0) else 0
                # ties: smaller deficit vector first, then the RNG
                deficit = tuple(
                    max(
                        0,
                        c
                        - counts.get(l, 0)
                        + (l == removed)
                        - (l == added),
                    )
                    for l, c in sorted(target.items())
                )
                key = (-(score - drop + gain), deficit, rng.random())
                if best is None or key < best[0]:
                    best = (key, which, added)
            (neg_score, _, _), which, added = best
            c_score = -neg_score
            if c_score >= score:
                stagnant = stagnant + 1 if c_score == score else 0
                current = _reconnect(current, i, which)
                counts[removed] -= 1
                if not counts[removed]:
                    del counts[removed]
                counts[added] = counts.get(added, 0) + 1
                score = c_score
            else:
                stagnant += 1
        if score == full:
            return Certificate(
                path=HamPath.of(current),
                multiset=ms,
                trace=(
                    (
                        "local_search",
                        {
                            "seed": cfg.rng_seed,
                            "restart": restart,
                            "steps": steps,
                        },
                    ),
                ),
            )
    return None


def brute_force(
    ms: LengthMultiset, cap: int | None = None
) -> Certificate | None:
    """Exhaustive depth-first search for a realization of ms.

    Prunes by the remaining count of each length; breaks the reversal
    symmetry by keeping only paths with first vertex smaller than last
    (translation classes are not quotiented: labels matter to lengths
    only through differences, but no cheap canonical form exists for
    paths).  Returns a Certificate, or None -- and None is definitive:
    ms has no realization.  Does not require admissibility, so it also
    serves as the necessity-direction oracle.
    """
    cap = DEFAULT_BRUTE_CAP if cap is None else cap
    v = ms.v
    if v > cap:
        raise ValueError(f"v={v} exceeds brute-force cap {cap}")
    remaining = ms.counts()
    path: list[int] = []
    used = [False] * v

    def extend() -> bool:
        if len(path) == v:
            return path[0] < path[-1]
        for w in range(v):
            if used[w]:
                continue
            if path:
                l = edge_length(path[-1], w, v)
                if not remaining.get(l, 0):
                    continue
                remaining[l] -= 1
            used[w] = True
            path.append(w)
            if extend():
                return True
            path.pop()
            used[w] = False
            if path:
                remaining[l] += 1
        return False

    if extend():
        return Certificate(
            path=HamPath.of(path),
            multiset=ms,
            trace=(("brute_force", {"v": v}),),
        )
    return None


def enumerate_admissible(v: int, lengths=None):
    """All admissible multisets of size v-1 over the given lengths
    (default 1..v//2), in lexicographic order of their count vectors.

    The optional restriction keeps enumeration tractable when only a
    particular underlying-set family is of interest."""
    if v < 2:
        raise ValueError("v must be at least 2")
    allowed = (
        list(range(1, v // 2 + 1))
        if lengths is None
        else sorted(l for l in lengths if 1 <= l <= v // 2)
    )
    n = len(allowed)

    def vectors(pos: int, left: int, prefix: list[int]):
        if pos == n - 1:
            yield prefix + [left]
            return
        for c in range(left + 1):
            yield from vectors(pos + 1, left - c, prefix + [c])

    if not allowed:
        return
    for vec in vectors(0, v - 1, []):
        ms = LengthMultiset.from_counts(
            {l: c for l, c in zip(allowed, vec) if c}
        )
        if not ms.items:
            continue
        if is_admissible(ms).ok:
            yield ms


def sweep(
    v_max: int,
    cfg: SearchConfig | None = None,
    definitive: bool = False,
    brute_cap: int | None = None,
) -> list[dict]:
    """Try to realize every admissible multiset of order up to v_max.

    Runs local_search first and falls back to brute_force when it fits
    under the cap.  With definitive=True, every unresolved multiset must
    go through brute_force, so v_max may not exceed the definitive cap
    and the unknown count is always zero.  Returns one report dict per
    order: {v, admissible_count, realized, unrealizable, unknown}.
    """
    cfg = cfg or SearchConfig()
    cap = DEFAULT_BRUTE_CAP if brute_cap is None else brute_cap
    if definitive and v_max > DEFAULT_DEFINITIVE_CAP:
        raise ValueError(
            f"definitive sweep capped at v <= {DEFAULT_DEFINITIVE_CAP}"
        )
    reports = []
    for v in range(2, v_max + 1):
        admissible = realized = unrealizable = unknown = 0
        for ms in enumerate_admissible(v):
            admissible += 1
            cert = local_search(ms, cfg)
            if cert is None and (definitive or v <= cap):
                cert = brute_force(ms, cap=max(cap, v))
                if cert is None:
                    unrealizable += 1
                    continue
            if cert is None:
                unknown += 1
            else:
                realized += 1
        reports.append(
            {
                "v": v,
                "admissible_count": admissible,
                "realized": realized,
                "unrealizable": unrealizable,
                "unknown": unknown,
            }
        )
    return reports
