import json
import random

import pytest

from bhr.core import (
    Certificate,
    GrowPoint,
    HamPath,
    LengthMultiset,
    MultisetError,
    NotGrowableError,
    PathError,
    certificate,
    cyclic_lengths,
    divisors,
    edge_length,
    embed,
    growth_points,
    is_admissible,
    is_growable_at,
    is_perfect,
    is_standard,
    lengthened_pairs,
    linear_diffs,
    translate,
    verify_realization,
)


def test_multiset_parse_format_roundtrip():
    for text in ["1^2 2 3^3", "1", "2^5", "1^3 4 5^7"]:
        ms = LengthMultiset.parse(text)
        assert ms.format() == text
        assert LengthMultiset.parse(ms.format()) == ms


def test_multiset_parse_normalizes():
    assert LengthMultiset.parse("3 1 1").format() == "1^2 3"
    assert LengthMultiset.parse("2^1").format() == "2"


def test_multiset_parse_rejects_garbage():
    for bad in ["", "0", "1^0", "-2", "a", "1^^2"]:
        with pytest.raises((MultisetError, ValueError)):
            LengthMultiset.parse(bad)


def test_multiset_basics():
    ms = LengthMultiset.from_counts({1: 2, 3: 3, 2: 1})
    assert ms.size == 6
    assert ms.v == 7
    assert ms.underlying_set == frozenset({1, 2, 3})
    assert ms.max_length == 3
    assert ms.multiplicity(3) == 3
    assert ms.multiplicity(9) == 0
    assert ms == LengthMultiset.from_lengths([1, 1, 2, 3, 3, 3])


def test_multiset_add_and_scale():
    a = LengthMultiset.parse("1^2 2")
    b = LengthMultiset.parse("2 3")
    assert (a + b).format() == "1^2 2^2 3"
    assert a.add_copies(2, 3).format() == "1^2 2^4"
    assert b.scale(3).format() == "6 9"


def test_edge_length():
    assert edge_length(0, 1, 9) == 1
    assert edge_length(0, 8, 9) == 1
    assert edge_length(2, 7, 9) == 4
    assert edge_length(0, 5, 10) == 5
    with pytest.raises(PathError):
        edge_length(0, 9, 9)
    with pytest.raises(PathError):
        edge_length(3, 3, 9)


def test_hampath_validation():
    with pytest.raises(PathError):
        HamPath.of([0, 1, 1])
    with pytest.raises(PathError):
        HamPath.of([0, 2])
    p = HamPath.of([0, 2, 1])
    assert p.v == 3
    assert p.reverse().vertices == (1, 2, 0)


def test_cyclic_lengths():
    p = HamPath.of([0, 5, 1, 2, 6, 3, 4])
    assert cyclic_lengths(p) == LengthMultiset.parse("1^2 2 3^3")


def test_linear_diffs_and_perfect():
    p = HamPath.of([0, 3, 1, 4, 2, 5])
    assert linear_diffs(p) == LengthMultiset.parse("2^2 3^3")
    assert is_standard(p)
    assert is_perfect(p)
    q = HamPath.of([0, 2, 4, 1, 3, 5])
    assert linear_diffs(q) == LengthMultiset.parse("2^4 3")
    assert is_perfect(q)
    assert not is_perfect(HamPath.of([1, 0, 2]))
    assert is_perfect(HamPath.of([0, 2, 1, 3]))


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]


def test_admissibility_ok():
    for text in ["1", "1^2 2 3^3", "1^4 2 3^8 4", "2^2 3^4"]:
        adm = is_admissible(LengthMultiset.parse(text))
        assert adm.ok, text


def test_admissibility_oversized():
    adm = is_admissible(LengthMultiset.parse("5^3"))
    assert not adm.ok
    assert adm.reason == "oversized"
    assert adm.length == 5


def test_admissibility_divisor():
    # v = 6, three multiples of 3 but bound is v - 3 = 3; the divisor-2
    # test fails first: 5 multiples of 2 exceed v - 2 = 4.
    adm = is_admissible(LengthMultiset.parse("2^5"))
    assert not adm.ok
    assert adm.reason == "divisor"
    assert adm.count > adm.bound
    # v = 9, six multiples of 3 sit exactly at the bound 9 - 3 = 6
    assert is_admissible(LengthMultiset.parse("1^2 3^6")).ok


def test_admissibility_divisor_exact():
    adm = is_admissible(LengthMultiset.parse("3^8"))
    assert not adm.ok and adm.reason == "divisor" and adm.divisor == 3


def test_verify_realization():
    p = [0, 5, 1, 2, 6, 3, 4]
    assert verify_realization(HamPath.of(p), LengthMultiset.parse("1^2 2 3^3"))
    assert not verify_realization(HamPath.of(p), LengthMultiset.parse("1^6"))


def test_embed():
    assert embed(2, 3, 4) == 2
    assert embed(5, 3, 4) == 8
    assert embed(4, 3, 4) == 4


def test_growable_is_sound_on_random_paths():
    """Whenever the predicate says yes, the grow construction must
    actually produce a realization of L + {x^x}."""
    from bhr.growth import grow

    rng = random.Random(5)
    checked = 0
    for _ in range(40):
        v = rng.randint(2, 11)
        verts = list(range(v))
        rng.shuffle(verts)
        path = HamPath.of(verts)
        base = cyclic_lengths(path)
        for x in range(1, v // 2 + 1):
            for m in range(v):
                if not is_growable_at(path, x, m):
                    continue
                cert = certificate(verts, base, grow_points=[(x, m)])
                grown = grow(cert, x, m)
                assert grown.multiset == base.add_copies(x, x)
                assert verify_realization(grown.path, grown.multiset)
                checked += 1
    assert checked > 100


def test_growable_examples():
    demo9 = HamPath.of([6, 4, 3, 0, 7, 1, 5, 2, 8])
    assert is_growable_at(demo9, 3, 2)
    assert not is_growable_at(demo9, 3, 1)  # truncated window
    assert not is_growable_at(demo9, 3, 8)
    demo15 = HamPath.of([0, 3, 6, 2, 1, 13, 10, 11, 14, 12, 9, 8, 5, 4, 7])
    pts = set(growth_points(demo15))
    for gp in [(1, 8), (1, 9), (2, 3), (3, 11), (4, 5)]:
        assert GrowPoint(*gp) in pts


def test_lengthened_pairs():
    demo9 = HamPath.of([6, 4, 3, 0, 7, 1, 5, 2, 8])
    pairs = lengthened_pairs(demo9, 3, 2)
    window = {0, 1, 2}
    flat = [w for pair in pairs for w in pair if w in window]
    assert sorted(flat) == [0, 1, 2]


def test_translate():
    assert translate([0, 2, 1, 3], 5) == [5, 7, 6, 8]


def test_certificate_roundtrip():
    cert = certificate(
        [6, 4, 3, 0, 7, 1, 5, 2, 8],
        {1: 1, 2: 2, 3: 4, 4: 1},
        grow_points=[(3, 2)],
        trace=[("seed", {"table": "demo"})],
    )
    again = Certificate.from_json(cert.to_json())
    assert again == cert
    data = json.loads(cert.to_json())
    assert data["schema"] == 1
    assert data["multiset"] == "1 2^2 3^4 4"


def test_certificate_rejects_lies():
    with pytest.raises(PathError):
        certificate([0, 1, 2], {1: 3})
    with pytest.raises(NotGrowableError):
        certificate(
            [6, 4, 3, 0, 7, 1, 5, 2, 8],
            {1: 1, 2: 2, 3: 4, 4: 1},
            grow_points=[(3, 1)],
        )


def test_certificate_point_for():
    cert = certificate(
        [6, 4, 3, 0, 7, 1, 5, 2, 8],
        {1: 1, 2: 2, 3: 4, 4: 1},
        grow_points=[(3, 2)],
    )
    assert cert.point_for(3) == GrowPoint(3, 2)
    with pytest.raises(NotGrowableError):
        cert.point_for(2)
