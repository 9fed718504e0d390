"""Relocation null model and the adjustment arithmetic."""

import math

import numpy as np
import pytest

from hyperlp import (
    Hypergraph,
    adjusted_auc,
    assemble_report,
    performance_reversal_check,
    relocate,
    size_distribution,
)
from conftest import random_hypergraph


class TestRelocate:
    def test_size_multiset_preserved(self):
        rng = np.random.default_rng(1)
        for trial in range(100):
            h = random_hypergraph(rng, int(rng.integers(6, 20)), int(rng.integers(1, 12)))
            h_rel = relocate(h, seed=trial)
            assert size_distribution(h_rel) == size_distribution(h)
            assert len(h_rel) == len(h)
            assert h_rel.n == h.n

    def test_full_size_hyperedge_is_forced(self):
        h = Hypergraph(4, [[0, 1, 2, 3]])
        h_rel = relocate(h, seed=0)
        assert h_rel.hyperedges[0] == frozenset(range(4))

    def test_single_pair_uniform_over_targets(self):
        h = Hypergraph(5, [[0, 1]])
        counts = {}
        trials = 10000
        for seed in range(trials):
            f = tuple(sorted(relocate(h, seed).hyperedges[0]))
            counts[f] = counts.get(f, 0) + 1
        assert len(counts) == 10
        p = 0.1
        se = math.sqrt(p * (1 - p) / trials)
        for f, c in counts.items():
            assert abs(c / trials - p) <= 3 * se, f

    def test_deterministic(self):
        rng = np.random.default_rng(5)
        h = random_hypergraph(rng, 12, 6)
        assert relocate(h, 99).hyperedges == relocate(h, 99).hyperedges


class TestAssembleReport:
    def test_identities(self):
        report = assemble_report(0.99, [0.9] * 5, seeds=list(range(5)))
        assert report.af == pytest.approx(1.8, abs=1e-15)
        assert report.auc_adjusted == pytest.approx(0.55, abs=1e-15)
        assert report.af == report.auc_rel_mean / 0.5
        assert report.auc_adjusted == report.auc_original / report.af

    def test_baseline_exactly_half_is_identity(self):
        report = assemble_report(0.8, [0.5, 0.5, 0.5], seeds=[1, 2, 3])
        assert report.af == 1.0
        assert report.auc_adjusted == 0.8

    def test_below_half_not_clamped(self):
        report = assemble_report(0.6, [0.4, 0.4], seeds=[1, 2])
        assert report.af == pytest.approx(0.8)
        assert report.auc_adjusted == pytest.approx(0.75)

    def test_std_and_counts(self):
        runs = [0.5, 0.6, 0.7]
        report = assemble_report(0.9, runs, seeds=[1, 2, 3])
        assert report.auc_rel_std == pytest.approx(np.std(runs, ddof=1))
        assert report.n_runs == len(report.auc_rel_runs) == len(report.seeds) == 3

    def test_empty_runs_rejected(self):
        with pytest.raises(ValueError):
            assemble_report(0.9, [], seeds=[])


class TestAdjustedAuc:
    def test_default_run_count(self):
        rng = np.random.default_rng(2)
        h = random_hypergraph(rng, 15, 10, max_size=3)
        report = adjusted_auc(h, "cn", "loo", seed=3)
        assert report.n_runs == 5
        assert len(report.auc_rel_runs) == 5
        assert report.af == report.auc_rel_mean / 0.5
        assert report.auc_adjusted == report.auc_original / report.af

    def test_signal_free_graph_adjusts_to_itself(self):
        # one pair among four vertices: every score is zero everywhere, so
        # the original and every relocated AUC are exactly 0.5
        h = Hypergraph(4, [[0, 1]])
        report = adjusted_auc(h, "cn", "loo", n_runs=4, seed=0)
        assert report.auc_original == 0.5
        assert report.auc_rel_runs == [0.5] * 4
        assert report.af == 1.0
        assert report.auc_adjusted == 0.5

    def test_deterministic(self):
        rng = np.random.default_rng(4)
        h = random_hypergraph(rng, 12, 8, max_size=3)
        a = adjusted_auc(h, "cn", "loo", n_runs=3, seed=11)
        b = adjusted_auc(h, "cn", "loo", n_runs=3, seed=11)
        assert a == b

    def test_invalid_runs(self):
        h = Hypergraph(4, [[0, 1]])
        with pytest.raises(ValueError):
            adjusted_auc(h, "cn", "loo", n_runs=0)

    def test_self_adjustment_near_half(self):
        # adjusting an already-relocated hypergraph should self-correct to
        # about 0.5 on average
        rng = np.random.default_rng(6)
        h = random_hypergraph(rng, 30, 40, max_size=4)
        values = []
        for k in range(12):
            h_rel = relocate(h, seed=1000 + k)
            report = adjusted_auc(h_rel, "cn", "loo", n_runs=3, seed=k)
            values.append(report.auc_adjusted)
        assert abs(float(np.mean(values)) - 0.5) <= 0.05


class TestPerformanceReversal:
    def test_flagged_pair(self):
        reports = {
            "a": assemble_report(0.95, [0.913461538], seeds=[1]),
            "b": assemble_report(0.83, [0.51875], seeds=[1]),
        }
        # a outranks b raw (0.95 > 0.83) but not adjusted (0.52 < 0.80)
        assert reports["a"].auc_adjusted < reports["b"].auc_adjusted
        assert performance_reversal_check(reports) == [("a", "b")]

    def test_identical_reports_not_flagged(self):
        reports = {
            "a": assemble_report(0.9, [0.6], seeds=[1]),
            "b": assemble_report(0.9, [0.6], seeds=[1]),
        }
        assert performance_reversal_check(reports) == []

    def test_single_scorer_empty(self):
        assert performance_reversal_check({"a": assemble_report(0.9, [0.6], [1])}) == []

    def test_consistent_ordering_not_flagged(self):
        reports = {
            "a": assemble_report(0.9, [0.6], seeds=[1]),
            "b": assemble_report(0.8, [0.6], seeds=[1]),
        }
        assert performance_reversal_check(reports) == []
