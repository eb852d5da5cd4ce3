"""The chain-poset operator and multichain ranks."""

import math
import random

import pytest

import posetlab as pl
from posetlab.verification import _oracle_chain_covers, random_poset


def test_total_chain_frozen():
    cp = pl.chain_poset(pl.total(1), 3)
    assert cp.labels == ("000", "001", "011", "111")
    assert cp.covers == {(0, 1), (1, 2), (2, 3)}
    assert cp.graded and pl.whitney(cp) == (1, 1, 1, 1)


def test_total_chain_sizes():
    # Multichains of length k from a (m+1)-element total order: the count is
    # a binomial; the poset is itself total only when the base is the 2-chain.
    for m in range(5):
        for k in range(1, 5):
            cp = pl.chain_poset(pl.total(m), k)
            assert len(cp) == math.comb(m + k, k)
            assert cp.graded and cp.max_rank == m * k
    for k in range(1, 7):
        assert pl.is_isomorphic(pl.chain_poset(pl.total(1), k), pl.total(k))
    # With m >= 2 and k >= 2 the multichain poset widens out of total order:
    # pairs a <= b from {0, 1, 2} form the profile (1, 1, 2, 1, 1).
    grid = pl.chain_poset(pl.total(2), 2)
    assert not pl.is_isomorphic(grid, pl.total(len(grid) - 1))
    assert pl.whitney(grid) == (1, 1, 2, 1, 1)


def test_boolean_square():
    cp = pl.chain_poset(pl.boolean(2), 2)
    assert len(cp) == 9
    assert pl.whitney(cp) == (1, 2, 3, 2, 1)
    assert "{},{1}" in cp.labels
    assert "{1},{1,2}" in cp.labels
    assert "{},{}" in cp.labels


def test_elements_are_multichains():
    p = pl.example_sym()
    cp = pl.chain_poset(p, 3)
    assert cp.multichains is not None and len(cp.multichains) == len(cp)
    assert len(set(cp.multichains)) == len(cp)
    for chain in cp.multichains:
        assert len(chain) == 3
        for a, b in zip(chain, chain[1:]):
            assert p.leq(a, b)


def test_single_coordinate_covers_frozen():
    p = pl.example_sym()
    cp = pl.chain_poset(p, 2)
    named = {
        (cp.labels[a], cp.labels[b]) for a, b in cp.covers
    }
    assert ("FF", "FC") in named  # raise the second coordinate by a cover
    assert ("FF", "CC") not in named  # two coordinates change
    assert ("FC", "CC") in named
    f, c = p.index("F"), p.index("C")
    assert not any(
        cp.multichains[a] == (f, f) and cp.multichains[b] == (c, c)
        for a, b in cp.covers
    )


def test_covers_match_order_definition_on_fixed_posets():
    for p in [pl.example_sym(), pl.example_uni(), pl.boolean(2), pl.isotropic(1)]:
        for k in (1, 2, 3):
            cp = pl.chain_poset(p, k)
            got = {(cp.multichains[a], cp.multichains[b]) for a, b in cp.covers}
            assert got == _oracle_chain_covers(p, k)


def test_chain_poset_of_ungraded_base():
    v = pl.from_covers("abcd", [("a", "b"), ("b", "d"), ("c", "d")])
    assert not v.graded
    for k in (1, 2, 3):
        cp = pl.chain_poset(v, k)
        got = {(cp.multichains[a], cp.multichains[b]) for a, b in cp.covers}
        assert got == _oracle_chain_covers(v, k)


def test_chain_length_one_is_the_base():
    rng = random.Random(11)
    for _ in range(10):
        p = random_poset(rng, 6)
        cp = pl.chain_poset(p, 1)
        assert pl.is_isomorphic(cp, p)
    cp = pl.chain_poset(pl.example_uni(), 1)
    assert cp.labels == pl.example_uni().labels


def test_chain_poset_validation():
    p = pl.total(2)
    with pytest.raises(ValueError, match="positive integer"):
        pl.chain_poset(p, 0)
    with pytest.raises(ValueError, match="positive integer"):
        pl.chain_poset(p, -2)
    with pytest.raises(ValueError, match="positive integer"):
        pl.chain_poset(p, "2")


def test_chain_poset_of_empty():
    empty = pl.from_covers([], [])
    cp = pl.chain_poset(empty, 3)
    assert len(cp) == 0 and cp.graded


def test_multichain_rank():
    b2 = pl.boolean(2)
    bottom = b2.index("{}")
    top = b2.index("{1,2}")
    one = b2.index("{1}")
    assert pl.multichain_rank(b2, (bottom, top)) == 2
    assert pl.multichain_rank(b2, (one, one, top)) == 4
    assert pl.multichain_rank(b2, (bottom,)) == 0
    with pytest.raises(ValueError, match="not a multichain"):
        pl.multichain_rank(b2, (top, bottom))
    with pytest.raises(ValueError, match="empty"):
        pl.multichain_rank(b2, ())
    with pytest.raises(IndexError):
        pl.multichain_rank(b2, (0, 99))
    v = pl.from_covers("abcd", [("a", "b"), ("b", "d"), ("c", "d")])
    with pytest.raises(pl.NotGradedError):
        pl.multichain_rank(v, (0,))


def test_chain_ranks_add_coordinatewise():
    p = pl.isotropic(1)
    cp = pl.chain_poset(p, 4)
    for idx, chain in enumerate(cp.multichains):
        assert cp.ranks[idx] == pl.multichain_rank(p, chain)


def test_composite_labels_join_with_commas():
    b1 = pl.boolean(1)  # labels "{}", "{1}" are multi-character
    cp = pl.chain_poset(b1, 2)
    assert cp.labels == ("{},{}", "{},{1}", "{1},{1}")
