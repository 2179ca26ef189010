"""Twin classes and the far-witness test for special classes."""

import itertools

import pytest

from lexmetric.construct import (
    Graph,
    complete_graph,
    cycle_graph,
    discrete_metric,
    graph_metric,
    path_graph,
)
from lexmetric.resolving import EnumerationCapExceeded
from lexmetric.space import FiniteMetricSpace, diameter, nearness
from lexmetric.twins import is_twins_free, special_classes, twin_classes

from test_construct import HALF_PAIR, K2

P3 = graph_metric(path_graph(3))
P4 = graph_metric(path_graph(4))
K3 = graph_metric(complete_graph(3))
C4 = graph_metric(cycle_graph(4))


def star_space(leaves: int) -> FiniteMetricSpace:
    labels = ("c",) + tuple(f"l{i + 1}" for i in range(leaves))
    return graph_metric(Graph(labels, tuple(("c", leaf, 1.0) for leaf in labels[1:])))


class TestTwinClasses:
    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_complete_graph_is_one_class(self, n):
        partition = twin_classes(graph_metric(complete_graph(n)))
        assert partition.classes == (tuple(f"v{i + 1}" for i in range(n)),)
        assert partition.gap[partition.classes[0]] == 1.0

    def test_path_p3_endpoints_are_twins(self):
        partition = twin_classes(P3)
        assert partition.classes == (("a", "c"), ("b",))
        assert partition.gap[("a", "c")] == 2.0
        assert partition.class_nearness[("a", "c")] == 1.0

    def test_path_p4_is_twins_free(self):
        assert twin_classes(P4).classes == (("a",), ("b",), ("c",), ("d",))

    def test_two_point_space_is_vacuously_one_class(self):
        partition = twin_classes(K2)
        assert partition.classes == (("v1", "v2"),)
        assert partition.gap[("v1", "v2")] == 1.0

    def test_four_cycle_has_two_antipodal_classes(self):
        partition = twin_classes(C4)
        assert partition.classes == (("v1", "v3"), ("v2", "v4"))
        assert partition.gap[("v1", "v3")] == 2.0

    def test_star_leaves_form_a_class(self):
        partition = twin_classes(star_space(3))
        assert partition.classes == (("c",), ("l1", "l2", "l3"))
        assert partition.gap[("l1", "l2", "l3")] == 2.0

    @pytest.mark.parametrize(
        "space", [P3, P4, C4, K3, star_space(3), discrete_metric(5)]
    )
    def test_partition_matches_pairwise_relation(self, space):
        """Classes must coincide with the raw pairwise relation, which is
        recomputed here from the definition and checked for transitivity."""
        pts = space.points
        tau = space.tolerance

        def are_twins(u, v):
            return all(
                abs(space.d(u, w) - space.d(v, w)) <= tau
                for w in pts
                if w not in (u, v)
            )

        partition = twin_classes(space)
        cls_of = {p: cls for cls in partition.classes for p in cls}
        assert sorted(p for cls in partition.classes for p in cls) == sorted(pts)
        for u, v in itertools.combinations(pts, 2):
            assert are_twins(u, v) == (cls_of[u] is cls_of[v])
        for u, v, w in itertools.permutations(pts, 3):
            if are_twins(u, v) and are_twins(v, w):
                assert are_twins(u, w)

    @pytest.mark.parametrize("space", [P3, C4, K3, star_space(4)])
    def test_gap_and_nearness_are_constant_within_class(self, space):
        partition = twin_classes(space)
        for cls in partition.non_singleton_classes:
            gaps = [space.d(u, v) for u, v in itertools.combinations(cls, 2)]
            assert max(gaps) - min(gaps) <= 2 * space.tolerance
            near = [min(space.d(u, w) for w in space.points if w != u) for u in cls]
            assert max(near) - min(near) <= 2 * space.tolerance


class TestTwinsFree:
    def test_path_p4(self):
        assert is_twins_free(P4)

    def test_complete_graph(self):
        assert not is_twins_free(K3)

    def test_two_point_space(self):
        assert not is_twins_free(K2)


class TestSpecialClasses:
    def test_k2_pair_qualifies(self):
        special = special_classes(K2, K2)
        assert special.member_classes == (("v1", "v2"),)
        for checks in special.evidence[("v1", "v2")].values():
            for chk in checks:
                assert chk.witness is not None

    def test_half_distance_pair_fails(self):
        # The fiber keeps distance 0.5, so nothing sits at the gap 1.
        special = special_classes(K2, HALF_PAIR)
        assert special.member_classes == ()
        failing = special.evidence[("v1", "v2")]["v1"][-1]
        assert failing.witness is None

    def test_twins_free_base_has_no_special_classes(self):
        special = special_classes(P4, K2)
        assert special.member_classes == ()
        assert special.evidence == {}

    def test_path_fiber_center_is_the_witness(self):
        special = special_classes(K2, P3)
        assert special.member_classes == (("v1", "v2"),)
        checks = special.evidence[("v1", "v2")]["v1"]
        assert [chk.basis for chk in checks] == [("a",), ("c",)]
        assert all(chk.witness == "b" for chk in checks)

    def test_small_second_diameter_empty(self):
        # With the second factor strictly inside the base nearness every
        # capped distance stays below any twin gap.
        tight = FiniteMetricSpace(
            ("y1", "y2", "y3"),
            [[0, 0.4, 0.4], [0.4, 0, 0.4], [0.4, 0.4, 0]],
        )
        assert diameter(tight) < nearness(K3)
        assert special_classes(K3, tight).member_classes == ()

    def test_enumeration_cap_propagates(self):
        with pytest.raises(EnumerationCapExceeded):
            special_classes(K2, discrete_metric(17))

    def test_duplicate_witness_raises(self):
        # Two candidate witnesses within tolerance of the gap but still more
        # than tolerance apart from each other: the guard must fire rather
        # than silently picking one.
        eps = 0.9e-9
        second = FiniteMetricSpace(
            ("s", "z", "zp"),
            [[0, 1 + eps, 1 - eps], [1 + eps, 0, 0.5], [1 - eps, 0.5, 0]],
        )
        base = FiniteMetricSpace(("u1", "u2"), [[0, 1], [1, 0]])
        with pytest.raises(ValueError, match="not unique"):
            special_classes(base, second)

    @pytest.mark.parametrize(
        "base", [K3, C4, star_space(3), graph_metric(complete_graph(4))]
    )
    def test_members_agree_within_class(self, base):
        """All members of a class reach the same verdict; the implementation
        checks each one instead of trusting that fibers are isometric."""
        for second in (K2, P3, HALF_PAIR):
            special = special_classes(base, second)
            for cls, per_member in special.evidence.items():
                verdicts = {
                    member: all(chk.witness is not None for chk in checks)
                    for member, checks in per_member.items()
                }
                if cls in special.member_classes:
                    assert len(verdicts) == len(cls)
                    assert all(verdicts.values())
