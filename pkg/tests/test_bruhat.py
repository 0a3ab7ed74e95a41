"""Tests for Bruhat order, intervals and chains."""

from itertools import product

import pytest

from schubert_complexity import bruhat
from schubert_complexity.exceptions import ChainError, NotBruhatLeqError, SizeMismatchError
from schubert_complexity.graph_kit import cyclomatic
from schubert_complexity.oracle.subword import bruhat_subword_leq
from schubert_complexity.perm_core import all_permutations, identity, longest, parse


class TestLeq:
    def test_identity_and_longest_are_extremes(self, w45231):
        assert bruhat.leq(identity(5), w45231)
        assert bruhat.leq(w45231, longest(5))
        assert not bruhat.leq(longest(5), w45231)

    def test_worked_pair(self, kl_pair):
        v, w = kl_pair
        assert bruhat.leq(v, w)
        assert not bruhat.leq(w, v)

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatchError):
            bruhat.leq(identity(3), identity(4))

    def test_agrees_with_subword_order_on_s4(self):
        perms = list(all_permutations(4))
        for v, w in product(perms, perms):
            assert bruhat.leq(v, w) == bruhat_subword_leq(v, w), (v, w)


class TestCovers:
    def test_covers_of_identity(self):
        found = bruhat.covers(identity(3))
        assert found == [((1, 2), parse("213")), ((2, 3), parse("132"))]

    def test_cocovers_of_longest(self):
        assert {str(u) for _, u in bruhat.cocovers(longest(3))} == {"231", "312"}

    def test_cover_raises_length_by_one(self, w45231):
        for _, u in bruhat.covers(w45231):
            assert u.length == w45231.length + 1


class TestIntervals:
    def test_s3_interval(self):
        span = bruhat.interval(identity(3), longest(3))
        assert span.length == 3
        assert len(span.elements()) == 6

    def test_not_below(self):
        with pytest.raises(NotBruhatLeqError):
            bruhat.interval(longest(3), identity(3))

    def test_atoms(self, toric_interval):
        v, w = toric_interval
        atoms = [str(u) for _, u in bruhat.atoms(v, w)]
        assert atoms and all(bruhat.leq(parse(u), w) for u in atoms)


class TestChains:
    def test_s3_has_four_maximal_chains(self):
        chains = list(bruhat.maximal_chains(identity(3), longest(3)))
        assert len(chains) == 4
        assert all(c.length == 3 for c in chains)

    def test_chain_from_recovers_labels(self):
        chain = bruhat.chain_from([parse("123"), parse("213"), parse("231")])
        assert chain.labels == ((1, 2), (2, 3))
        assert chain.to_dict()["elements"] == ["123", "213", "231"]

    def test_chain_from_rejects_non_covers(self):
        with pytest.raises(ChainError):
            bruhat.chain_from([parse("123"), parse("321")])
        with pytest.raises(ChainError):
            bruhat.chain_from([])

    def test_chain_graphs_of_toric_interval_are_forests(self, toric_interval):
        v, w = toric_interval
        for chain in bruhat.maximal_chains(v, w):
            assert cyclomatic(bruhat.chain_graph(chain)) == 0

    def test_some_chain_is_maximal(self, toric_interval):
        v, w = toric_interval
        chain = bruhat.some_chain(v, w)
        assert chain.elements[0] == v and chain.elements[-1] == w
        assert chain.length == w.length - v.length


class TestChainPartitions:
    def test_counts_every_chain_of_s4(self):
        e, w0 = identity(4), longest(4)
        found = bruhat.chain_partitions(e, w0)
        total = sum(1 for _ in bruhat.maximal_chains(e, w0))
        assert sum(found.values()) == total
        assert total > 24
        assert list(found) == [frozenset([frozenset([1, 2, 3, 4])])]

    def test_matches_enumeration(self, kl_pair):
        v, w = kl_pair
        enumerated = {}
        for chain in bruhat.maximal_chains(v, w):
            parts = frozenset(frozenset(p) for p in bruhat.chain_graph(chain).components())
            enumerated[parts] = enumerated.get(parts, 0) + 1
        assert bruhat.chain_partitions(v, w) == enumerated

    def test_trivial_interval(self, w45231):
        found = bruhat.chain_partitions(w45231, w45231)
        assert found == {frozenset(frozenset([i]) for i in range(1, 6)): 1}
