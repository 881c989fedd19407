"""Kernels, transversal classification, refinements, and the coarsest
convex-collapsing refinement."""

from itertools import product

import pytest

from contracta import (
    ChainMap,
    Transversal,
    collapse_map,
    convex_refinement_transversals,
    has_convex_transversal,
    is_admissible,
    is_contraction,
    is_convex,
    is_idempotent,
    is_isometry_on,
    is_relatively_convex,
    kernel,
    make_map,
    make_partition,
    max_convex_refinement,
    partition_from_json,
    partition_to_json,
    partition_to_text,
    refinements,
    transversals,
)

ALPHA = make_map(6, [1, 2, 2, 3, 4, 3])
BETA = make_map(6, [4, 3, 2, 2, 1, 2])


def all_maps(n, pred=None):
    for word in product(range(1, n + 1), repeat=n):
        m = ChainMap(n, word)
        if pred is None or pred(m):
            yield m


def independent_set_partitions(items):
    """Partition enumeration by assignment vectors (restricted growth strings);
    independent of the library's recursive generator."""
    items = list(items)
    if not items:
        return [()]
    out = []

    def walk(i, assignment, used):
        if i == len(items):
            blocks = {}
            for x, g in zip(items, assignment):
                blocks.setdefault(g, []).append(x)
            out.append(tuple(sorted((tuple(sorted(b)) for b in blocks.values()), key=lambda b: b[0])))
            return
        for g in range(used + 1):
            walk(i + 1, assignment + [g], max(used, g + 1))

    walk(0, [], 0)
    return out


class TestKernel:
    def test_alpha_display(self):
        k = kernel(ALPHA)
        assert k.blocks == ((1,), (2, 3), (4, 6), (5,))
        assert k.block_images == (1, 2, 3, 4)

    def test_beta_display(self):
        k = kernel(BETA)
        assert k.blocks == ((1,), (2,), (3, 4, 6), (5,))
        assert k.block_images == (4, 3, 2, 1)

    def test_identity(self):
        k = kernel(make_map(4, [1, 2, 3, 4]))
        assert k.blocks == ((1,), (2,), (3,), (4,))

    def test_fibers_recover_map(self):
        for m in all_maps(4):
            k = kernel(m)
            for block, value in zip(k.blocks, k.block_images):
                assert all(m(x) == value for x in block)


class TestPartitionValidation:
    def test_make_partition_canonicalizes(self):
        k = make_partition(4, [(3, 1), (4, 2)], images=[1, 2])
        assert k.blocks == ((1, 3), (2, 4))
        assert k.block_images == (1, 2)

    def test_rejects_gap(self):
        with pytest.raises(ValueError, match="missing"):
            make_partition(4, [(1, 2), (4,)])

    def test_rejects_overlap(self):
        with pytest.raises(ValueError, match="more than one block"):
            make_partition(3, [(1, 2), (2, 3)])

    def test_rejects_duplicate_images(self):
        with pytest.raises(ValueError, match="distinct"):
            make_partition(3, [(1,), (2, 3)], images=[2, 2])


class TestTransversals:
    def test_alpha_kernel_has_four(self):
        got = [t.points for t in transversals(kernel(ALPHA))]
        assert got == [(1, 2, 4, 5), (1, 2, 5, 6), (1, 3, 4, 5), (1, 3, 5, 6)]

    def test_matches_cartesian_product_oracle(self):
        k = kernel(ALPHA)
        expected = sorted(
            tuple(sorted(choice)) for choice in product(*k.blocks)
        )
        assert sorted(t.points for t in transversals(k)) == expected

    def test_singleton_partition_unique(self):
        k = kernel(make_map(3, [1, 2, 3]))
        assert len(transversals(k)) == 1

    def test_single_block(self):
        k = make_partition(3, [(1, 2, 3)])
        assert [t.points for t in transversals(k)] == [(1,), (2,), (3,)]

    def test_invalid_transversal_rejected(self):
        k = kernel(ALPHA)
        with pytest.raises(ValueError, match="meets the transversal"):
            Transversal((1, 2, 3, 4), k)  # misses block {5}


class TestClassification:
    def test_alpha_transversals_all_non_convex(self):
        ts = transversals(kernel(ALPHA))
        assert all(not is_convex(t) for t in ts)
        assert not has_convex_transversal(kernel(ALPHA))

    def test_convex_implies_admissible_here(self):
        k = make_partition(6, [(1, 2, 3), (4,), (5,), (6,)])
        t = Transversal((3, 4, 5, 6), k)
        assert is_convex(t)
        assert is_admissible(t)

    def test_single_block_point_convex(self):
        k = make_partition(4, [(1, 2, 3, 4)])
        assert all(is_convex(t) for t in transversals(k))

    def test_relatively_convex_equals_convex_for_full_maps(self):
        # Full maps have the whole chain as domain.
        for n in (4, 5):
            for m in all_maps(n):
                for t in transversals(kernel(m)):
                    assert is_relatively_convex(t) == is_convex(t)

    def test_admissible_iff_convex_on_contraction_kernels(self):
        for n in range(2, 6):
            for m in all_maps(n, is_contraction):
                for t in transversals(kernel(m)):
                    assert is_admissible(t) == is_convex(t)

    def test_admissibility_is_the_collapse_contraction(self):
        k = kernel(ALPHA)
        for t in transversals(k):
            c = collapse_map(k, t)
            assert kernel(c).blocks == k.blocks
            assert is_admissible(t) == is_contraction(c)

    def test_convex_not_admissible_outside_contraction_kernels(self):
        # {1,2,3} is a convex transversal of {{1,4},{2},{3}} but collapsing
        # sends 3 -> 3 and 4 -> 1, stretching an adjacent pair.
        k = make_partition(4, [(1, 4), (2,), (3,)])
        t = Transversal((1, 2, 3), k)
        assert is_convex(t)
        assert not is_admissible(t)


class TestHasConvexTransversal:
    def test_idempotent_kernels_always(self):
        for n in range(2, 6):
            for m in all_maps(n, lambda m: is_contraction(m) and is_idempotent(m)):
                assert has_convex_transversal(kernel(m))

    def test_all_singletons(self):
        assert has_convex_transversal(kernel(make_map(4, [1, 2, 3, 4])))

    def test_window_scan_matches_enumeration(self):
        for m in all_maps(4, is_contraction):
            k = kernel(m)
            by_enumeration = any(is_convex(t) for t in transversals(k))
            assert has_convex_transversal(k) == by_enumeration


class TestRefinements:
    def test_two_block(self):
        k = make_partition(3, [(1, 2), (3,)])
        got = {p.blocks for p in refinements(k)}
        assert got == {((1, 2), (3,)), ((1,), (2,), (3,))}

    def test_singletons_only_themselves(self):
        k = make_partition(3, [(1,), (2,), (3,)])
        assert [p.blocks for p in refinements(k)] == [((1,), (2,), (3,))]

    def test_single_block_bell_number(self):
        k = make_partition(3, [(1, 2, 3)])
        got = sorted(p.blocks for p in refinements(k))
        expected = sorted(independent_set_partitions([1, 2, 3]))
        assert got == expected
        assert len(got) == 5

    def test_every_refinement_sits_inside_original(self):
        k = kernel(ALPHA)
        owner = {x: i for i, b in enumerate(k.blocks) for x in b}
        for p in refinements(k):
            for b in p.blocks:
                assert len({owner[x] for x in b}) == 1


class TestMaxConvexRefinement:
    def test_alpha(self):
        m = max_convex_refinement(ALPHA)
        assert m.blocks == ((1,), (2,), (3,), (4, 6), (5,))
        assert has_convex_transversal(m)

    def test_beta_same_refinement(self):
        m = max_convex_refinement(BETA)
        assert m.blocks == ((1,), (2,), (3,), (4, 6), (5,))

    def test_regular_maps_keep_their_kernel(self):
        for m in all_maps(4, is_contraction):
            if has_convex_transversal(kernel(m)):
                assert max_convex_refinement(m).blocks == kernel(m).blocks

    def test_rejects_non_contraction(self):
        with pytest.raises(ValueError, match="not a contraction"):
            max_convex_refinement(make_map(3, [3, 1, 3]))

    def test_maximality_by_exhaustive_scan(self):
        # No strictly coarser refinement with an admissible convex transversal
        # exists; checked independently through transversal enumeration.
        for n in range(2, 6):
            for m in all_maps(n, is_contraction):
                best = max_convex_refinement(m)
                assert any(
                    is_convex(t) and is_admissible(t) for t in transversals(best)
                )
                owner = {x: i for i, b in enumerate(kernel(m).blocks) for x in b}
                for p in refinements(kernel(m)):
                    if not any(is_convex(t) and is_admissible(t) for t in transversals(p)):
                        continue
                    if len(p.blocks) < len(best.blocks):
                        pytest.fail(f"{p} is coarser than {best} for {m}")
                    # every good refinement refines the reported maximum
                    downer = {x: i for i, b in enumerate(best.blocks) for x in b}
                    assert all(len({downer[x] for x in b}) == 1 for b in p.blocks)


class TestIsometryOn:
    def test_stationary_blocks(self):
        m = make_map(4, [1, 2, 2, 2])
        t = Transversal((1, 2), kernel(m))
        assert is_isometry_on(t, m)

    def test_alpha_transversal_fails(self):
        t = Transversal((1, 2, 4, 5), kernel(ALPHA))
        assert not is_isometry_on(t, ALPHA)  # |1-4| = 3 but images 1, 3

    def test_shift(self):
        m = make_map(4, [2, 3, 4, 4])
        t = Transversal((1, 2, 3), kernel(m))
        assert is_isometry_on(t, m)

    def test_mismatch_rejected(self):
        t = Transversal((1, 2), kernel(make_map(3, [1, 2, 2])))
        with pytest.raises(ValueError, match="kernel"):
            is_isometry_on(t, make_map(3, [1, 1, 2]))


class TestRefinementTransversals:
    def test_alpha_good_intervals(self):
        got = convex_refinement_transversals(kernel(ALPHA).without_images())
        assert got == ((1, 2, 3, 4, 5), (1, 2, 3, 4, 5, 6))

    def test_full_chain_always_good(self):
        for m in all_maps(4, is_contraction):
            k = kernel(m).without_images()
            assert (1, 2, 3, 4) in convex_refinement_transversals(k)

    def test_each_good_interval_is_realized(self):
        # Every reported interval really is an admissible convex transversal
        # of some refinement: re-derive one refinement and check it.
        k = kernel(ALPHA).without_images()
        for points in convex_refinement_transversals(k):
            found = False
            for p in refinements(k):
                try:
                    t = Transversal(points, p)
                except ValueError:
                    continue
                if is_convex(t) and is_admissible(t):
                    found = True
                    break
            assert found, points


class TestCodecs:
    def test_text(self):
        assert partition_to_text(kernel(ALPHA)) == "{1}|{2,3}|{4,6}|{5}"

    def test_json_roundtrip(self):
        k = kernel(ALPHA)
        obj = partition_to_json(k)
        assert obj == {"n": 6, "blocks": [[1], [2, 3], [4, 6], [5]], "images": [1, 2, 3, 4]}
        assert partition_from_json(obj) == k
