from itertools import combinations

import pytest

from appendix_data import appendix_sts25_blocks
from steiner_doubling import (
    APPENDIX_PHI_TAGS,
    Coloring,
    DifferenceTriple,
    TripleSystem,
    appendix_phi,
    build_chain,
    circle_method_factorization,
    circular_difference,
    delta_translates,
    difference_factorization,
    double_plus_one,
    double_plus_seven,
    extend_bicoloring,
    extend_independent_set,
    index_bijection,
    parity_split_bijection,
    reduced_family,
    verify_bicoloring,
    verify_independent,
    verify_maximal_independent,
    verify_sts,
)
from steiner_doubling.errors import (
    CardinalityMismatch,
    InvalidInput,
    InvalidTriple,
    NotAnSTS,
    SizeMismatch,
)

T123 = DifferenceTriple(1, 2, 3)


def fstar(n, t=T123):
    return reduced_family(difference_factorization(n), t)


class TestSeed:
    def test_blocks(self, sts9):
        assert (0, 1, 2) in sts9.blocks and (2, 4, 6) in sts9.blocks
        assert len(sts9.blocks) == 12

    def test_independent_set(self, seed):
        assert seed.independent_set == {0, 1, 3, 4}
        assert verify_maximal_independent(seed.system, seed.independent_set).passed

    def test_coloring(self, seed):
        assert seed.coloring.classes == (frozenset({0, 1, 3, 4}), frozenset({2, 5, 6, 7}), frozenset({8}))

    def test_labels(self, sts9):
        assert sts9.label(0) == "x_1" and sts9.label(8) == "x_9"


class TestDoublePlusOne:
    def test_sts3_to_sts7(self, sts3):
        ts = double_plus_one(sts3, circle_method_factorization(4))
        assert ts.v == 7 and len(ts.blocks) == 7
        assert verify_sts(ts).passed

    def test_sts7_to_sts15(self, sts3):
        ts7 = double_plus_one(sts3, circle_method_factorization(4))
        ts15 = double_plus_one(ts7, circle_method_factorization(8))
        assert len(ts15.blocks) == 35 == 7 + 28
        assert verify_sts(ts15).passed
        assert set(ts7.blocks) <= set(ts15.blocks)

    def test_sts9_with_difference_factorization(self, sts9):
        # K_10 is not a power of two; the round-robin factorization covers it
        ts = double_plus_one(sts9, circle_method_factorization(10))
        assert ts.v == 19 and verify_sts(ts).passed

    def test_permuted_phi(self, sts3):
        fact = circle_method_factorization(4)
        phi = index_bijection(fact.factors[::-1])
        assert verify_sts(double_plus_one(sts3, fact, phi)).passed

    def test_size_mismatch(self, sts3):
        with pytest.raises(SizeMismatch):
            double_plus_one(sts3, circle_method_factorization(6))


class TestDelta:
    def test_n4(self):
        d = delta_translates(4, T123)
        assert len(d) == 16
        assert set(d) == {tuple(sorted(((i) % 16, (i + 1) % 16, (i + 3) % 16))) for i in range(16)}

    def test_wrap_pair_once(self):
        d = delta_translates(4, T123)
        assert sum(1 for b in d if {15, 0} <= set(b)) == 1

    def test_n3_pair_count(self):
        d = delta_translates(3, T123)
        pairs = [p for b in d for p in combinations(b, 2)]
        assert len(d) == 8 and len(pairs) == 24 == len(set(pairs))
        assert {circular_difference(x, y, 8) for x, y in pairs} == {1, 2, 3}

    @pytest.mark.parametrize("n, t", [(4, (3, 6, 7)), (5, (2, 4, 6)), (5, (5, 6, 11)), (5, (9, 10, 13))])
    def test_covers_each_difference_once(self, n, t):
        m = 2**n
        t = DifferenceTriple(*t)
        pairs = [p for b in delta_translates(n, t) for p in combinations(b, 2)]
        assert len(pairs) == len(set(pairs)) == 3 * m
        assert {circular_difference(x, y, m) for x, y in pairs} == set(t)

    def test_offset(self):
        assert delta_translates(4, T123, offset=9)[0] == (9, 10, 12)

    def test_invalid(self):
        with pytest.raises(InvalidTriple):
            delta_translates(4, DifferenceTriple(4, 8, 12))


class TestDoublePlusSeven:
    def test_appendix_sts25(self, sts9):
        trace = double_plus_seven(sts9, 4, T123, appendix_phi())
        assert set(trace.result.blocks) == appendix_sts25_blocks()
        assert len(trace.result.blocks) == 100
        assert verify_sts(trace.result).passed

    def test_appendix_phi_tags(self):
        assert appendix_phi().tags() == list(APPENDIX_PHI_TAGS)

    def test_block_counts(self, sts9):
        trace = double_plus_seven(sts9, 4)
        counts = [len(trace.blocks_of_type(k)) for k in (1, 2, 3)]
        assert counts == [12, 72, 16]
        assert sum(counts) == 25 * 24 // 6

    def test_sts1_to_sts9(self):
        trace = double_plus_seven(TripleSystem(1, ()), 3)
        assert trace.result.v == 9 and verify_sts(trace.result).passed

    def test_wrong_order(self):
        ts10 = TripleSystem(10, ())
        with pytest.raises(SizeMismatch):
            double_plus_seven(ts10, 4)

    def test_seed_not_sts(self, sts9):
        with pytest.raises(NotAnSTS):
            double_plus_seven(TripleSystem(9, sts9.blocks[1:]), 4)

    def test_invalid_triple(self, sts9):
        with pytest.raises(InvalidTriple):
            double_plus_seven(sts9, 4, DifferenceTriple(4, 8, 12))

    @pytest.mark.parametrize("t", [(2, 4, 6), (3, 6, 7), (1, 4, 5), (2, 5, 7)])
    def test_other_triples(self, sts9, t):
        trace = double_plus_seven(sts9, 4, DifferenceTriple(*t))
        assert verify_sts(trace.result).passed

    def test_phi_not_onto(self, sts9):
        wrong = index_bijection(fstar(4, DifferenceTriple(2, 4, 6)))
        with pytest.raises(InvalidInput):
            double_plus_seven(sts9, 4, T123, wrong)

    @pytest.mark.parametrize("phi", ["index", "appendix"])
    def test_pair_coverage_trichotomy(self, sts9, phi):
        bij = appendix_phi() if phi == "appendix" else None
        trace = double_plus_seven(sts9, 4, T123, bij)
        v, m = 9, 16
        cover = {}
        for b in trace.result.blocks:
            for p in combinations(b, 2):
                assert p not in cover
                cover[p] = trace.block_types[b]
        for x, y in combinations(range(v + m), 2):
            if y < v:
                expected = 1
            elif x >= v and circular_difference(x - v, y - v, m) in (1, 2, 3):
                expected = 3
            else:
                expected = 2
            assert cover[(x, y)] == expected

    def test_embedding(self, sts9):
        for trace in build_chain(8, verify=False):
            assert set(trace.seed.blocks) <= set(trace.result.blocks)


class TestParitySplit:
    def test_seed(self, seed):
        phi = parity_split_bijection(seed.system, seed.independent_set, fstar(4))
        odd = {str(phi[p].tag) for p in seed.independent_set}
        rest = {str(phi[p].tag) for p in range(9) if p not in seed.independent_set}
        assert odd == {"F5,1", "F5,2", "F7,1", "F7,2"}
        assert rest == {"G4,1", "G4,2", "G6,1", "G6,2", "H"}

    def test_counts(self):
        assert sum(f.tag.diff % 2 for f in fstar(4)) == 4 == (9 - 1) // 2
        assert sum(f.tag.diff % 2 for f in fstar(5)) == 12 == (25 - 1) // 2

    def test_mismatch(self, seed):
        with pytest.raises(CardinalityMismatch):
            parity_split_bijection(seed.system, {0, 1, 3}, fstar(4))

    def test_all_even_triple(self, seed):
        with pytest.raises(CardinalityMismatch):
            parity_split_bijection(seed.system, seed.independent_set, fstar(4, DifferenceTriple(2, 4, 6)))


class TestExtensions:
    def test_independent_set(self):
        t2 = extend_independent_set({0, 1, 3, 4}, 4, 9)
        assert t2 == {0, 1, 3, 4} | {9 + 2 * i for i in range(8)}
        assert len(t2) == 12 == (25 - 1) // 2

    def test_degenerate(self):
        assert extend_independent_set(set(), 3, 1) == {1, 3, 5, 7}

    @pytest.mark.parametrize("n", range(4, 12))
    def test_size_identity(self, n):
        v = 2**n - 7
        v2 = 2 * v + 7
        t = set(range((v - 1) // 2))
        assert len(extend_independent_set(t, n, v)) == (v2 - 1) // 2

    def test_bicoloring(self, seed):
        c = extend_bicoloring(seed.coloring, 0, 4, 9)
        sizes = [len(k) for k in c.classes]
        assert sizes == [12, 4, 1, 8]
        assert c.classes[1] == {2, 5, 6, 7} and c.classes[2] == {8}
        assert c.classes[3] == {9 + 2 * i + 1 for i in range(8)}

    def test_bicoloring_without_coloring(self):
        with pytest.raises(InvalidInput):
            extend_bicoloring(None, 0, 4, 9)

    def test_bicoloring_missing_class(self, seed):
        with pytest.raises(InvalidInput):
            extend_bicoloring(seed.coloring, 5, 4, 9)

    def test_appendix_construction_coloring(self, seed):
        # the extension also works with the printed phi, which is a parity split too
        trace = double_plus_seven(seed.system, 4, T123, appendix_phi())
        t2 = extend_independent_set(seed.independent_set, 4, 9)
        c = extend_bicoloring(seed.coloring, 0, 4, 9)
        assert verify_maximal_independent(trace.result, t2).passed
        assert verify_bicoloring(trace.result, c).passed


class TestChain:
    def test_n5(self):
        chain = build_chain(5)
        assert [9] + [t.result.v for t in chain] == [9, 25]
        assert len(chain[0].carried_independent_set) == 12
        assert chain[0].carried_coloring.num_classes == 4

    def test_n9(self):
        chain = build_chain(9)
        assert [chain[0].seed.v] + [t.result.v for t in chain] == [9, 25, 57, 121, 249, 505]
        assert [len(t.carried_independent_set) for t in chain] == [12, 28, 60, 124, 252]

    def test_n4_empty(self):
        assert build_chain(4) == []

    def test_below_seed(self):
        with pytest.raises(InvalidInput):
            build_chain(3)

    def test_deterministic(self):
        a = build_chain(7)
        b = build_chain(7)
        assert [t.result.blocks for t in a] == [t.result.blocks for t in b]
        assert [t.phi.tags() for t in a] == [t.phi.tags() for t in b]

    def test_class_one_is_independent_set(self):
        for t in build_chain(8):
            assert t.carried_coloring.classes[t.independent_class] == t.carried_independent_set

    def test_index_phi(self):
        chain = build_chain(6, phi="index")
        assert all(t.carried_independent_set is None for t in chain)
        assert verify_sts(chain[-1].result).passed

    def test_all_even_triple_refused_for_parity(self):
        with pytest.raises(InvalidTriple):
            build_chain(6, DifferenceTriple(2, 4, 6))

    def test_all_even_triple_index_phi(self):
        chain = build_chain(6, DifferenceTriple(2, 4, 6), phi="index")
        assert all(verify_sts(t.result).passed for t in chain)

    def test_other_mixed_triple(self):
        chain = build_chain(7, DifferenceTriple(1, 4, 5))
        for t in chain:
            assert verify_maximal_independent(t.result, t.carried_independent_set).passed
            assert verify_bicoloring(t.result, t.carried_coloring).passed
            assert verify_independent(t.result, t.carried_independent_set).passed

    def test_unknown_phi(self):
        with pytest.raises(InvalidInput):
            build_chain(5, phi="random")

    def test_bicoloring_rejected_for_non_split(self, seed):
        # index phi sends some independent point to an even factor, breaking the extension
        trace = double_plus_seven(seed.system, 4)
        c = extend_bicoloring(seed.coloring, 0, 4, 9)
        assert not verify_bicoloring(trace.result, c).passed

    def test_coloring_type(self):
        assert isinstance(build_chain(5)[0].carried_coloring, Coloring)
