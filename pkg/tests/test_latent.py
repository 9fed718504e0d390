"""Generator correctness: candidate enumeration against brute force,
closed-form link probabilities against exhaustive enumeration, and the
sigmoid comparator."""

import math
from itertools import combinations

import numpy as np
import pytest
from scipy.spatial.distance import pdist, squareform

from hyperlp import (
    HoffParams,
    LatentModel,
    ResourceLimitError,
    build_potential,
    default_hoff_params,
    edge_distance_profile,
    hoff_clique_probability,
    hoff_edge_probability,
    link_probability,
    phi_preset,
    potential_from_candidates,
    radii_from_percentiles,
    sample_hypergraph,
    sample_latents,
)



def brute_force_candidates(positions, radii):
    """All subsets whose points are pairwise within twice the size radius."""
    n = len(positions)
    dist = squareform(pdist(positions))
    out = {}
    for s_idx, r in enumerate(radii):
        s = s_idx + 2
        out[s] = sorted(
            c
            for c in combinations(range(n), s)
            if all(dist[a][b] <= 2 * r for a, b in combinations(c, 2))
        )
    return out


def enumerate_link_probability(candidates, phi, i, j):
    """Oracle for the closed form: sum the probability of every selection
    outcome in which some chosen candidate contains both vertices."""
    probs = [phi[len(c) - 2] for c in candidates]
    total = 0.0
    for bits in range(2 ** len(candidates)):
        weight = 1.0
        linked = False
        for idx, c in enumerate(candidates):
            if bits >> idx & 1:
                weight *= probs[idx]
                if i in c and j in c:
                    linked = True
            else:
                weight *= 1 - probs[idx]
        if linked:
            total += weight
    return total


class TestSampleLatents:
    def test_moments(self):
        u = sample_latents(1000, 2, 123)
        assert np.all(np.abs(u.mean(axis=0)) < 0.1)
        assert np.all(np.abs(u.var(axis=0) - 1.0) < 0.15)

    def test_deterministic(self):
        assert np.array_equal(sample_latents(50, 3, 9), sample_latents(50, 3, 9))

    def test_minimal_shape(self):
        assert sample_latents(2, 1, 0).shape == (2, 1)

    def test_invalid_sizes(self):
        with pytest.raises(ValueError):
            sample_latents(1, 2, 0)


class TestRadiiFromPercentiles:
    def test_three_collinear_points(self):
        # distances are {d, d, 2d}; the median is d
        pts = np.array([[0.0], [1.0], [2.0]])
        assert radii_from_percentiles(pts, [50]) == pytest.approx([1.0])

    def test_percentile_100_is_max(self):
        pts = np.array([[0.0], [1.0], [5.0]])
        assert radii_from_percentiles(pts, [100])[0] == pytest.approx(5.0)

    def test_matches_numpy_percentile(self):
        u = sample_latents(40, 2, 5)
        got = radii_from_percentiles(u, [1, 5, 9, 13])
        expected = np.percentile(pdist(u), [1, 5, 9, 13])
        assert np.allclose(got, expected)
        assert np.all(np.diff(got) >= 0)

    def test_non_increasing_rejected(self):
        pts = sample_latents(5, 2, 0)
        with pytest.raises(ValueError, match="strictly increasing"):
            radii_from_percentiles(pts, [5, 5])


# Ten points laid out so that, at thresholds 1.0 (pairs) and 1.6
# (triples), the candidate set is exactly four pairs and one triple.
TEN_POINTS = np.array(
    [
        [0.0, 0.0],    # 0
        [0.4, 1.5],    # 1
        [5.0, 5.0],    # 2
        [-5.0, 5.0],   # 3
        [0.8, 0.0],    # 4
        [5.0, 5.9],    # 5
        [10.0, 0.0],   # 6
        [1.75, 0.0],   # 7
        [-10.0, 0.0],  # 8
        [-5.0, 5.8],   # 9
    ]
)


class TestBuildPotential:
    def test_ten_point_scenario(self):
        pot = build_potential(TEN_POINTS, [0.5, 0.8])
        assert pot.by_size[2] == [(0, 4), (2, 5), (3, 9), (4, 7)]
        assert pot.by_size[3] == [(0, 1, 4)]

    def test_zero_radii_distinct_points(self):
        pts = sample_latents(8, 2, 1)
        pot = build_potential(pts, [0.0, 0.0])
        assert pot.total == 0

    def test_tight_cluster_all_subsets(self):
        pts = np.array([[0.0, 0.0], [0.1, 0.0], [0.0, 0.1], [0.1, 0.1]])
        pot = build_potential(pts, [1.0, 1.0])
        assert len(pot.by_size[2]) == 6
        assert len(pot.by_size[3]) == 4

    def test_matches_brute_force(self):
        rng = np.random.default_rng(0)
        for _ in range(15):
            n = int(rng.integers(4, 10))
            pts = rng.standard_normal((n, int(rng.integers(1, 4))))
            radii = np.sort(rng.uniform(0.1, 0.9, size=3))
            pot = build_potential(pts, radii)
            assert {s: pot.by_size[s] for s in pot.sizes} == brute_force_candidates(
                pts, radii
            )

    def test_pair_counts_match_recount(self):
        rng = np.random.default_rng(8)
        pts = rng.standard_normal((10, 2))
        pot = build_potential(pts, [0.4, 0.6])
        for (i, j), vec in pot.pair_counts.items():
            for s in pot.sizes:
                recount = sum(1 for f in pot.by_size[s] if i in f and j in f)
                assert recount == vec[s - 2]
        # and no covered pair is missing
        for s in pot.sizes:
            for f in pot.by_size[s]:
                for a, b in combinations(f, 2):
                    assert pot.pair_counts[(a, b)][s - 2] >= 1

    def test_growing_radius_grows_candidates(self):
        rng = np.random.default_rng(21)
        pts = rng.standard_normal((12, 2))
        small = build_potential(pts, [0.3, 0.5])
        for bumped in ([0.45, 0.5], [0.3, 0.7]):
            grown = build_potential(pts, bumped)
            for s in small.sizes:
                assert set(small.by_size[s]) <= set(grown.by_size[s])

    def test_cap_enforced(self):
        pts = sample_latents(30, 2, 3)
        with pytest.raises(ResourceLimitError, match="cap"):
            build_potential(pts, [5.0, 5.0], max_potential=10)


class TestSampleHypergraph:
    def test_phi_one_keeps_everything(self):
        pot = build_potential(TEN_POINTS, [0.5, 0.8])
        h = sample_hypergraph(pot, [1.0, 1.0], seed=0)
        assert sorted(tuple(sorted(f)) for f in h.hyperedges) == sorted(
            pot.all_candidates()
        )

    def test_phi_zero_keeps_nothing(self):
        pot = build_potential(TEN_POINTS, [0.5, 0.8])
        assert len(sample_hypergraph(pot, [0.0, 0.0], seed=0)) == 0

    def test_binomial_concentration(self):
        pairs = [(i, j) for i in range(100) for j in range(i + 1, 100)][:1000]
        pot = potential_from_candidates(100, pairs, k_max=2)
        h = sample_hypergraph(pot, [0.5], seed=42)
        assert 440 <= len(h) <= 560

    def test_marginal_inclusion_frequency(self):
        pot = potential_from_candidates(6, [(0, 1), (2, 3, 4)], k_max=3)
        phi = [0.3, 0.7]
        hits = np.zeros(2)
        trials = 10000
        for seed in range(trials):
            h = sample_hypergraph(pot, phi, seed)
            fs = set(h.hyperedges)
            hits[0] += frozenset((0, 1)) in fs
            hits[1] += frozenset((2, 3, 4)) in fs
        freq = hits / trials
        for k, p in enumerate(phi):
            se = math.sqrt(p * (1 - p) / trials)
            assert abs(freq[k] - p) <= 3 * se

    def test_deterministic(self):
        pot = build_potential(TEN_POINTS, [0.5, 0.8])
        a = sample_hypergraph(pot, [0.5, 0.5], seed=7)
        b = sample_hypergraph(pot, [0.5, 0.5], seed=7)
        assert a.hyperedges == b.hyperedges


class TestPhiPresets:
    def test_power_law(self):
        phi = phi_preset("power_law", k_max=5)
        assert phi[0] == pytest.approx(0.25)
        assert np.allclose(phi, [1 / 4, 1 / 9, 1 / 16, 1 / 25])

    def test_constant(self):
        assert np.allclose(phi_preset("constant", k_max=4), 0.1)

    def test_sigmoid_midpoint(self):
        phi = phi_preset("hoff_sigmoid", k_max=3, radii=[0.5, 0.7], alpha=10, gamma=0.5)
        assert phi[0] == pytest.approx(0.5)
        assert phi[1] < 0.5

    def test_empirical_scales_by_largest(self):
        pot = potential_from_candidates(
            6, [(0, 1), (1, 2), (3, 4), (0, 1, 2)], k_max=3
        )
        phi = phi_preset("empirical", k_max=3, pot=pot)
        assert np.allclose(phi, [1.0, 1 / 3])

    def test_unknown_name(self):
        with pytest.raises(ValueError, match="unknown phi preset"):
            phi_preset("bogus", k_max=3)


class TestLinkProbability:
    def test_uncovered_pair_is_zero(self):
        pot = potential_from_candidates(4, [(0, 1)], k_max=2)
        assert link_probability(pot, [0.9], 2, 3) == 0.0

    def test_single_triple(self):
        pot = potential_from_candidates(3, [(0, 1, 2)], k_max=3)
        assert link_probability(pot, [0.0, 0.6], 0, 1) == pytest.approx(0.6)

    def test_two_pairs_one_triple(self):
        pot = potential_from_candidates(4, [(0, 1), (0, 1), (0, 1, 2)], k_max=3)
        assert link_probability(pot, [0.5, 0.5], 0, 1) == pytest.approx(
            0.875, abs=1e-15
        )

    def test_matches_exhaustive_enumeration(self):
        rng = np.random.default_rng(14)
        for _ in range(40):
            n = int(rng.integers(3, 7))
            m = int(rng.integers(1, 9))
            candidates = []
            for _ in range(m):
                k = int(rng.integers(2, min(4, n) + 1))
                candidates.append(
                    tuple(sorted(int(x) for x in rng.choice(n, size=k, replace=False)))
                )
            k_top = max(len(c) for c in candidates)
            phi = rng.uniform(0, 1, size=k_top - 1)
            pot = potential_from_candidates(n, candidates, k_max=k_top)
            i, j = (int(x) for x in rng.choice(n, size=2, replace=False))
            # the index deduplicates candidate multisets, so enumerate its view
            kept = pot.all_candidates()
            expected = enumerate_link_probability(kept, phi, i, j)
            assert link_probability(pot, phi, i, j) == pytest.approx(
                expected, abs=1e-12
            )

    def test_self_pair_rejected(self):
        pot = potential_from_candidates(3, [(0, 1)], k_max=2)
        with pytest.raises(ValueError):
            link_probability(pot, [0.5], 1, 1)


class TestHoffModel:
    def test_midpoint(self):
        assert hoff_edge_probability(HoffParams(2.0, 1.0), 1.0) == pytest.approx(0.5)

    def test_far_distance_vanishes(self):
        p = hoff_edge_probability(HoffParams(10.0, 0.0), 2.0)  # exponent 20
        assert p < 1e-6

    def test_known_value(self):
        assert hoff_edge_probability(HoffParams(1.0, 0.0), math.log(3)) == pytest.approx(
            0.25, abs=1e-12
        )

    def test_strictly_decreasing(self):
        params = HoffParams(3.0, 0.5)
        d = np.linspace(0, 4, 50)
        p = hoff_edge_probability(params, d)
        assert np.all(np.diff(p) < 0)

    def test_clique_probability_midpoint_triple(self):
        params = HoffParams(2.0, 1.0)
        assert hoff_clique_probability(params, [1.0] * 3) == pytest.approx(0.125)

    def test_clique_probability_six_factors(self):
        params = HoffParams(2.0, 1.0)
        assert hoff_clique_probability(params, [1.0] * 6) == pytest.approx(0.5**6)

    def test_empty_pair_list(self):
        assert hoff_clique_probability(HoffParams(1.0, 0.0), []) == 1.0

    def test_log_probability_bound(self):
        rng = np.random.default_rng(3)
        params = HoffParams(2.0, 1.0)
        for k in (3, 4, 5):
            m = k * (k - 1) // 2
            dists = rng.uniform(0.2, 3.0, size=m)
            p = hoff_clique_probability(params, dists)
            best = float(np.max(hoff_edge_probability(params, dists)))
            assert math.log(p) <= m * math.log(best) + 1e-9

    def test_alpha_must_be_positive(self):
        with pytest.raises(ValueError):
            HoffParams(0.0, 1.0)

    def test_default_gamma_is_median_distance(self):
        pts = sample_latents(30, 2, 11)
        params = default_hoff_params(pts)
        assert params.gamma == pytest.approx(float(np.median(pdist(pts))))


class TestEdgeDistanceProfile:
    def test_phi_zero_gives_zero_profile(self):
        model = LatentModel(TEN_POINTS, radii=[0.5, 0.8], phi=[0.0, 0.0], seed=0)
        prof = edge_distance_profile(model, n_trials=10, bins=5)
        assert np.all(prof.model_freq == 0)

    def test_pairs_beyond_reach_never_link(self):
        model = LatentModel(TEN_POINTS, radii=[0.5, 0.8], phi=[1.0, 1.0], seed=0)
        prof = edge_distance_profile(model, n_trials=5, bins=30)
        reach = 2 * 0.8
        beyond = prof.bin_edges[:-1] > reach
        assert np.all(prof.model_freq[beyond] == 0)

    def test_generator_exceeds_sigmoid_in_mid_range(self):
        # statistical comparison in the band between the pair and top reach
        rng_pts = sample_latents(120, 2, 33)
        radii = radii_from_percentiles(rng_pts, [1, 5, 9, 13])
        model = LatentModel(rng_pts, radii=radii, phi=[0, 0, 0, 0], seed=33)
        phi = phi_preset("power_law", k_max=5)
        hoff = default_hoff_params(rng_pts)
        prof = edge_distance_profile(model, phi=phi, n_trials=30, bins=25, hoff=hoff)
        band = (prof.bin_centers >= 2 * radii[0]) & (prof.bin_centers <= 2 * radii[-1])
        assert band.any()
        assert prof.model_freq[band].mean() >= prof.hoff_prob[band].mean()


class TestModelValidation:
    def test_mismatched_lengths(self):
        with pytest.raises(ValueError):
            LatentModel(TEN_POINTS, radii=[0.5], phi=[0.5, 0.5])

    def test_phi_range(self):
        with pytest.raises(ValueError):
            LatentModel(TEN_POINTS, radii=[0.5, 0.8], phi=[0.5, 1.5])

    def test_k_max(self):
        m = LatentModel(TEN_POINTS, radii=[0.5, 0.8], phi=[0.5, 0.5])
        assert m.k_max == 3 and m.n == 10 and m.dim == 2
