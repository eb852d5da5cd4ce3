"""Construction, order queries, products, isomorphism, serialization."""

import json
import random

import pytest

import posetlab as pl
from posetlab.verification import random_graded_poset, random_poset


def diamond():
    return pl.from_covers("abcd", [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")])


def vee():
    # a < b < d and c < d: maximal chains of different sizes.
    return pl.from_covers("abcd", [("a", "b"), ("b", "d"), ("c", "d")])


def test_from_covers_basics():
    p = diamond()
    assert len(p) == 4
    assert p.labels == ("a", "b", "c", "d")
    assert p.index("c") == 2
    assert p.label(2) == "c"
    a, b, c, d = range(4)
    assert p.leq(a, d) and p.leq(a, a) and not p.leq(b, c) and not p.leq(d, a)
    assert p.covers == {(a, b), (a, c), (b, d), (c, d)}
    assert p.up[a] == (b, c) and p.down[d] == (b, c)
    assert p.minimal_elements() == (a,)
    assert p.maximal_elements() == (d,)
    assert "4 elements" in repr(p)


def test_redundant_pairs_absorbed():
    p = pl.from_covers("abc", [("a", "b"), ("b", "c"), ("a", "c")])
    assert p.covers == {(0, 1), (1, 2)}
    assert p.leq(0, 2)


def test_construction_errors():
    with pytest.raises(ValueError, match="duplicate label"):
        pl.from_covers(["x", "x"], [])
    with pytest.raises(ValueError, match="unknown label"):
        pl.from_covers(["x"], [("x", "y")])
    with pytest.raises(pl.CycleError, match="cycle"):
        pl.from_covers("ab", [("a", "b"), ("b", "a")])
    with pytest.raises(pl.CycleError):
        pl.from_covers("abc", [("a", "b"), ("b", "c"), ("c", "a")])


def test_element_validation():
    p = diamond()
    with pytest.raises(ValueError, match="unknown label"):
        p.index("z")
    with pytest.raises(IndexError):
        p.leq(0, 99)
    with pytest.raises(IndexError):
        p.label(-1)


def test_gradedness():
    assert diamond().graded
    assert diamond().ranks == (0, 1, 1, 2)
    assert diamond().max_rank == 2
    assert pl.whitney(diamond()) == (1, 2, 1)
    v = vee()
    assert not v.graded
    assert v.ranks is None and v.max_rank is None
    with pytest.raises(pl.NotGradedError):
        pl.whitney(v)
    assert pl.is_graded(diamond()) and not pl.is_graded(v)


def test_empty_and_trivial_posets():
    empty = pl.from_covers([], [])
    assert len(empty) == 0
    assert empty.graded and empty.max_rank == -1
    assert pl.whitney(empty) == ()
    assert pl.is_connected(empty)
    single = pl.from_covers(["x"], [])
    assert single.graded and pl.whitney(single) == (1,)
    anti = pl.from_covers("xyz", [])
    assert anti.graded and pl.whitney(anti) == (3,)
    assert not pl.is_connected(anti)


def test_nabla():
    p = diamond()
    assert pl.nabla(p, [0]) == {1, 2}
    assert pl.nabla(p, [1, 2]) == {3}
    assert pl.nabla(p, []) == set()
    with pytest.raises(IndexError):
        pl.nabla(p, [17])


def test_connectivity():
    assert pl.is_connected(diamond())
    two = pl.from_covers("abcd", [("a", "b"), ("c", "d")])
    assert not pl.is_connected(two)


def test_product():
    t1 = pl.total(1)
    sq = pl.product(t1, t1)
    assert len(sq) == 4
    assert pl.whitney(sq) == (1, 2, 1)
    assert pl.is_isomorphic(sq, pl.boolean(2))
    assert "(0,0)" in sq.labels and "(1,1)" in sq.labels
    ii = pl.product(pl.isotropic(1), pl.isotropic(1))
    assert pl.whitney(ii) == (1, 4, 4)
    assert pl.is_isomorphic(ii, pl.isotropic(2))


def test_product_with_empty():
    empty = pl.from_covers([], [])
    assert len(pl.product(empty, pl.boolean(2))) == 0
    assert len(pl.product(pl.boolean(2), empty)) == 0


def test_product_order_is_coordinatewise():
    p = pl.total(2)
    q = pl.boolean(1)
    pr = pl.product(p, q)
    # (a, b) <= (c, d) iff a <= c and b <= d; ids are a * |q| + b.
    nq = q.n
    for a in range(p.n):
        for b in range(q.n):
            for c in range(p.n):
                for d in range(q.n):
                    expected = p.leq(a, c) and q.leq(b, d)
                    assert pr.leq(a * nq + b, c * nq + d) == expected


def test_isomorphism_finds_valid_mapping():
    rng = random.Random(4242)
    for _ in range(30):
        p = random_poset(rng, 7)
        # Rebuild the same structure under shuffled labels and ids.
        perm = rng.sample(range(p.n), p.n)
        labels = [f"y{i}" for i in range(p.n)]
        pairs = [(labels[perm[a]], labels[perm[b]]) for a, b in p.covers]
        q = pl.from_covers(labels, pairs)
        mapping = pl.find_isomorphism(p, q)
        assert mapping is not None
        assert sorted(mapping) == list(range(p.n))
        for x in range(p.n):
            for y in range(p.n):
                assert p.leq(x, y) == q.leq(mapping[x], mapping[y])


def test_isomorphism_rejects():
    assert not pl.is_isomorphic(pl.total(2), pl.total(3))
    assert not pl.is_isomorphic(pl.boolean(2), pl.total(3))  # same size
    n_poset = pl.from_covers("abcd", [("a", "c"), ("a", "d"), ("b", "d")])
    two_chains = pl.from_covers("abcd", [("a", "c"), ("b", "d")])
    assert not pl.is_isomorphic(n_poset, two_chains)
    assert pl.find_isomorphism(n_poset, two_chains) is None


def test_isomorphism_needs_search_beyond_refinement():
    # An 8-cycle versus two 4-cycles (as bipartite cover graphs): every
    # element has the same local neighborhood, so color refinement cannot
    # separate them and the verdict rests on the backtracking search.
    def cycle_poset(sizes):
        labels, pairs = [], []
        offset = 0
        for m in sizes:
            a = [f"a{offset + i}" for i in range(m)]
            b = [f"b{offset + i}" for i in range(m)]
            labels += a + b
            for i in range(m):
                pairs.append((a[i], b[i]))
                pairs.append((a[i], b[(i + 1) % m]))
            offset += m
        return pl.from_covers(labels, pairs)

    c8 = cycle_poset([4])
    c44 = cycle_poset([2, 2])
    assert len(c8) == len(c44) == 8
    assert len(c8.covers) == len(c44.covers) == 8
    assert pl.whitney(c8) == pl.whitney(c44) == (4, 4)
    assert not pl.is_isomorphic(c8, c44)
    assert pl.is_isomorphic(c8, cycle_poset([4]))


def test_isomorphism_on_deep_chains():
    # Deep enough that a recursive search would hit the recursion limit.
    assert pl.is_isomorphic(pl.total(1500), pl.total(1500))
    assert not pl.is_isomorphic(pl.total(1500), pl.total(1499))


def test_serialization_round_trip(tmp_path):
    rng = random.Random(7)
    for p in [diamond(), vee(), pl.isotropic(2), random_graded_poset(rng, 9)]:
        d = pl.to_dict(p)
        q = pl.from_dict(d)
        assert q.labels == p.labels
        assert q.covers == p.covers
        path = tmp_path / "poset.json"
        pl.dump(p, str(path))
        r = pl.load(str(path))
        assert r.covers == p.covers and r.labels == p.labels
        assert json.loads(path.read_text())["labels"] == list(p.labels)


def test_serialization_errors(tmp_path):
    with pytest.raises(ValueError, match="labels"):
        pl.from_dict({"covers": []})
    with pytest.raises(ValueError):
        pl.from_dict([1, 2])
    with pytest.raises(OSError):
        pl.load(str(tmp_path / "missing.json"))
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ValueError):
        pl.load(str(bad))


def test_random_graded_generator_is_graded():
    rng = random.Random(99)
    for _ in range(50):
        p = random_graded_poset(rng, 12)
        assert p.graded
        assert 1 <= len(p) <= 12
