from __future__ import annotations

import pytest

from btzeta import (
    ClassWeight,
    GeodesicClass,
    assemble_S_series,
    build_chamber_operator,
    build_edge_operator,
    count_closed_paths,
    count_table,
    enumerate_primitive_classes,
    primitive_counts,
    primitive_product,
    torus_primitive_counts,
    torus_trace_counts,
)
from btzeta.polynomials import series_exp_neg_integral

M = 12


class TestClosedPathCounts:
    def test_three_cycle(self, three_cycle):
        counts = count_closed_paths(three_cycle, M)
        assert counts == [0, 0, 0, 3, 0, 0, 3, 0, 0, 3, 0, 0, 3]

    def test_single_chamber_all_zero(self, single_chamber):
        assert count_closed_paths(single_chamber, M) == [0] * (M + 1)
        assert count_closed_paths(single_chamber, M, "gallery") == [0] * (M + 1)

    def test_torus_matches_matrix_traces(self, torus):
        for kind, builder in (("edge", build_edge_operator),
                              ("gallery", build_chamber_operator)):
            brute = count_closed_paths(torus, M, kind)
            assert builder(torus).trace_powers(M) == brute[1:]

    def test_torus_matches_geometry(self, torus, torus_spec):
        for kind in ("edge", "gallery"):
            assert count_closed_paths(torus, M, kind) == \
                torus_trace_counts(torus_spec.basis, M, kind)

    def test_skew_torus_matches_geometry(self, skew_torus, skew_torus_spec):
        for kind in ("edge", "gallery"):
            assert count_closed_paths(skew_torus, M, kind) == \
                torus_trace_counts(skew_torus_spec.basis, M, kind)

    def test_order_cap(self, three_cycle):
        with pytest.raises(ValueError, match="cap"):
            count_closed_paths(three_cycle, 21)
        assert count_closed_paths(three_cycle, 21, allow_large=True)[21] == 3

    def test_boundary_rejected(self, ball_q2):
        with pytest.raises(ValueError, match="closed"):
            count_closed_paths(ball_q2, 4)


class TestPrimitiveClasses:
    def test_three_cycle_single_class(self, three_cycle):
        classes = enumerate_primitive_classes(three_cycle, M)
        prim = [g for g in classes if g.power == 1]
        assert len(prim) == 1 and prim[0].length == 3
        lengths = sorted(g.length for g in classes)
        assert lengths == [3, 6, 9, 12]
        assert [g.power for g in sorted(classes, key=lambda g: g.length)] == [1, 2, 3, 4]

    def test_six_cycle_no_length_three(self, six_cycle):
        classes = enumerate_primitive_classes(six_cycle, M)
        prim = [g for g in classes if g.power == 1]
        assert len(prim) == 1 and prim[0].length == 6
        assert not [g for g in classes if g.length == 3]

    def test_power_structure_identity(self, three_cycle, six_cycle, single_chamber,
                                      torus, skew_torus):
        for c in (three_cycle, six_cycle, single_chamber, torus, skew_torus):
            for kind in ("edge", "gallery"):
                table = count_table(c, M, kind)
                for m in range(1, M + 1):
                    assert table.N[m] == sum(
                        d * table.P[d] for d in range(1, m + 1) if m % d == 0)

    def test_torus_primitive_counts_match_geometry(self, torus, torus_spec):
        for kind in ("edge", "gallery"):
            classes = enumerate_primitive_classes(torus, M, kind)
            assert primitive_counts(classes, M) == \
                torus_primitive_counts(torus_spec.basis, M, kind)

    def test_representatives_are_closed_orbits(self, torus):
        from btzeta.operators import edge_successors

        for g in enumerate_primitive_classes(torus, 6):
            rep = g.representative
            for cur, nxt in zip(rep, rep[1:] + rep[:1]):
                assert nxt in edge_successors(torus, cur)


class TestSeriesAssembly:
    def test_primitive_product_three_cycle(self, three_cycle):
        classes = enumerate_primitive_classes(three_cycle, M)
        series = primitive_product(classes, M)
        assert [series[m] for m in range(M + 1)] == [1, 0, 0, -1] + [0] * 9

    def test_primitive_product_empty(self):
        assert [primitive_product([], 5)[m] for m in range(6)] == [1, 0, 0, 0, 0, 0]

    def test_default_weights_give_path_counts(self, torus):
        classes = enumerate_primitive_classes(torus, M)
        series = assemble_S_series(classes, M)
        counts = count_closed_paths(torus, M)
        assert [series[m] for m in range(M + 1)] == counts

    def test_exp_identity(self, three_cycle, six_cycle, torus, skew_torus):
        # exp(-integral of the length series) equals the primitive product
        for c in (three_cycle, six_cycle, torus, skew_torus):
            for kind in ("edge", "gallery"):
                classes = enumerate_primitive_classes(c, M, kind)
                s = assemble_S_series(classes, M)
                exp_side = series_exp_neg_integral(
                    [0] + [s[m] for m in range(1, M + 1)], M)
                assert exp_side == primitive_product(classes, M)

    def test_weight_negation(self, three_cycle):
        classes = enumerate_primitive_classes(three_cycle, 6)
        flipped = [
            GeodesicClass(g.length, g.primitive_length, g.power, g.representative,
                          ClassWeight(lam=g.primitive_length, trace_omega=-1))
            for g in classes
        ]
        plain = assemble_S_series(classes, 6)
        negated = assemble_S_series(flipped, 6)
        assert all(negated[m] == -plain[m] for m in range(1, 7))

    def test_empty_class_list(self):
        series = assemble_S_series([], 6)
        assert all(series[m] == 0 for m in range(7))

    def test_weight_defaults(self, three_cycle):
        g = enumerate_primitive_classes(three_cycle, 3)[0]
        assert g.weight.lam == g.primitive_length
        assert g.weight.chi_abs == 1
        assert g.weight.scalar() == 3


class TestGeodesicClassInvariants:
    def test_length_consistency_enforced(self):
        with pytest.raises(ValueError):
            GeodesicClass(length=6, primitive_length=4, power=2, representative=())
