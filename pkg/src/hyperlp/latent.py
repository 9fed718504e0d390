"""Latent-space hypergraph generator and its exact link probabilities.

Vertices get i.i.d. standard-normal positions in ``R^d``. For every
hyperedge size ``s`` in ``2..k_max`` there is a radius ``r_s``: the
candidate (potential) hyperedges of size ``s`` are exactly the ``s``-sets
whose points are pairwise within ``2 * r_s`` of each other, i.e. the
``s``-cliques of the distance-threshold graph at ``2 * r_s``. A hypergraph
is then drawn by keeping each candidate independently with a per-size
probability ``phi_s``.

Because the selections are independent, the chance that a vertex pair ends
up linked after clique expansion has a closed form: if ``S_s(i, j)`` counts
the size-``s`` candidates containing both ``i`` and ``j``,

    P(i ~ j) = 1 - prod_s (1 - phi_s) ** S_s(i, j).

The sigmoid pairwise model (edge probability ``1 / (1 + exp(alpha *
(dist - gamma)))``) is implemented alongside as the comparison baseline.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy.spatial.distance import pdist, squareform

from .hypergraph import Hypergraph

DEFAULT_MAX_POTENTIAL = 10_000_000
DEFAULT_HOFF_ALPHA = 10.0

PHI_PRESETS = ("power_law", "hoff_sigmoid", "constant", "empirical")


class ResourceLimitError(RuntimeError):
    """Raised when candidate-hyperedge enumeration exceeds its cap."""


@dataclass
class LatentModel:
    """Bundle of everything needed to draw hypergraphs: positions,
    per-size radii, per-size selection probabilities, and a seed.

    ``radii`` and ``phi`` are aligned to sizes ``2..k_max`` (entry 0 is
    size 2). Size-1 radii/probabilities, if a config supplies them, are
    dropped upstream: singletons contribute nothing after expansion.
    """

    positions: np.ndarray
    radii: np.ndarray
    phi: np.ndarray
    seed: int = 0

    def __post_init__(self):
        self.positions = np.asarray(self.positions, dtype=np.float64)
        self.radii = np.asarray(self.radii, dtype=np.float64)
        self.phi = np.asarray(self.phi, dtype=np.float64)
        if self.positions.ndim != 2:
            raise ValueError("positions must be an n-by-d array")
        if self.radii.shape != self.phi.shape or self.radii.ndim != 1:
            raise ValueError("radii and phi must be 1-d arrays of equal length")
        if len(self.radii) == 0:
            raise ValueError("need at least one size (k_max >= 2)")
        if np.any(self.radii < 0):
            raise ValueError("radii must be nonnegative")
        if np.any((self.phi < 0) | (self.phi > 1)):
            raise ValueError("phi entries must lie in [0, 1]")

    @property
    def n(self) -> int:
        return self.positions.shape[0]

    @property
    def dim(self) -> int:
        return self.positions.shape[1]

    @property
    def k_max(self) -> int:
        return len(self.radii) + 1


@dataclass
class PotentialIndex:
    """All candidate hyperedges, grouped by size, plus per-pair coverage
    counts.

    ``by_size[s]`` lists the size-``s`` candidates as sorted vertex tuples
    in canonical (lexicographic) order. ``pair_counts[(i, j)]`` (i < j) is
    an integer vector over sizes ``2..k_max`` counting the candidates of
    each size that contain both vertices; pairs covered by no candidate are
    absent.
    """

    n: int
    k_max: int
    by_size: dict[int, list[tuple[int, ...]]]
    pair_counts: dict[tuple[int, int], np.ndarray] = field(repr=False)

    @property
    def sizes(self) -> range:
        return range(2, self.k_max + 1)

    @property
    def total(self) -> int:
        return sum(len(v) for v in self.by_size.values())

    def size_counts(self) -> np.ndarray:
        """Number of candidates per size, aligned to sizes ``2..k_max``."""
        return np.array([len(self.by_size.get(s, [])) for s in self.sizes])

    def all_candidates(self) -> list[tuple[int, ...]]:
        out = []
        for s in self.sizes:
            out.extend(self.by_size.get(s, []))
        return out


@dataclass
class HoffParams:
    """Sigmoid edge-probability parameters: slope ``alpha`` and distance
    offset ``gamma``."""

    alpha: float
    gamma: float

    def __post_init__(self):
        if self.alpha <= 0:
            raise ValueError(f"alpha must be positive, got {self.alpha}")


def sample_latents(n: int, d: int, seed: int) -> np.ndarray:
    """Draw ``n`` i.i.d. standard-normal points in ``R^d``."""
    if n < 2 or d < 1:
        raise ValueError(f"need n >= 2 and d >= 1, got n={n}, d={d}")
    return np.random.default_rng(seed).standard_normal((n, d))


def pairwise_distances(positions: np.ndarray) -> np.ndarray:
    """Condensed vector of all n*(n-1)/2 pairwise Euclidean distances."""
    return pdist(np.asarray(positions, dtype=np.float64))


def radii_from_percentiles(
    positions: np.ndarray, percentiles: Sequence[float]
) -> np.ndarray:
    """Radii for sizes ``2..k_max`` as percentiles of the pairwise
    distances.

    ``percentiles`` must be strictly increasing, one entry per size; the
    returned radii are then nondecreasing in size.
    """
    pct = np.asarray(percentiles, dtype=np.float64)
    if pct.ndim != 1 or len(pct) == 0:
        raise ValueError("percentiles must be a nonempty 1-d sequence")
    if np.any(np.diff(pct) <= 0):
        raise ValueError(f"percentiles must be strictly increasing, got {pct.tolist()}")
    if np.any((pct <= 0) | (pct > 100)):
        raise ValueError("percentiles must lie in (0, 100]")
    return np.percentile(pairwise_distances(positions), pct)


def _cliques_of_size(
    n: int,
    higher_neighbors: list[np.ndarray],
    neighbor_sets: list[set[int]],
    s: int,
    budget: int,
) -> list[tuple[int, ...]]:
    """All s-cliques of a threshold graph, each as an increasing tuple.

    Ordered-vertex extension: a partial clique is grown only with vertices
    greater than its last member that are adjacent to every current member.
    ``budget`` caps the number of cliques returned across calls.
    """
    out: list[tuple[int, ...]] = []

    def extend(base: list[int], cands: Sequence[int], need: int):
        if need == 0:
            out.append(tuple(int(x) for x in base))
            if len(out) > budget:
                raise ResourceLimitError(
                    f"candidate enumeration exceeded the cap of {budget}"
                )
            return
        for idx in range(len(cands)):
            if len(cands) - idx < need:
                return
            v = cands[idx]
            base.append(v)
            allowed = neighbor_sets[v]
            extend(base, [w for w in cands[idx + 1 :] if w in allowed], need - 1)
            base.pop()

    for v in range(n):
        extend([v], list(higher_neighbors[v]), s - 1)
    return out


def build_potential(
    positions: np.ndarray,
    radii: Sequence[float],
    max_potential: int = DEFAULT_MAX_POTENTIAL,
) -> PotentialIndex:
    """Enumerate the candidate hyperedges for every size.

    For size ``s`` these are the ``s``-cliques of the graph linking points
    within ``2 * radii[s-2]`` of each other. Raises
    :class:`ResourceLimitError` when the total candidate count would exceed
    ``max_potential``.
    """
    positions = np.asarray(positions, dtype=np.float64)
    radii = np.asarray(radii, dtype=np.float64)
    n = positions.shape[0]
    k_max = len(radii) + 1
    dist = squareform(pairwise_distances(positions)) if n > 1 else np.zeros((1, 1))

    by_size: dict[int, list[tuple[int, ...]]] = {}
    pair_counts: dict[tuple[int, int], np.ndarray] = {}
    remaining = max_potential
    for s_idx, r in enumerate(radii):
        s = s_idx + 2
        threshold = 2.0 * r
        within = dist <= threshold
        higher = [np.nonzero(within[v, v + 1 :])[0] + v + 1 for v in range(n)]
        nbr_sets = [set(np.nonzero(within[v])[0]) - {v} for v in range(n)]
        cliques = _cliques_of_size(n, higher, nbr_sets, s, remaining)
        remaining -= len(cliques)
        cliques.sort()
        by_size[s] = cliques
        if not cliques:
            continue
        arr = np.asarray(cliques, dtype=np.int64)
        encoded = np.concatenate(
            [arr[:, a] * n + arr[:, b] for a in range(s) for b in range(a + 1, s)]
        )
        uniq, counts = np.unique(encoded, return_counts=True)
        for key, count in zip(uniq.tolist(), counts.tolist()):
            pair = (key // n, key % n)
            vec = pair_counts.get(pair)
            if vec is None:
                vec = np.zeros(k_max - 1, dtype=np.int64)
                pair_counts[pair] = vec
            vec[s_idx] += count
    return PotentialIndex(n=n, k_max=k_max, by_size=by_size, pair_counts=pair_counts)


def potential_from_candidates(
    n: int,
    candidates: Sequence[Sequence[int]],
    k_max: int | None = None,
) -> PotentialIndex:
    """Build a candidate index from an explicit list of vertex sets,
    bypassing geometry. Useful for hand-crafted configurations."""
    sets = [tuple(sorted({int(v) for v in c})) for c in candidates]
    for c in sets:
        if len(c) < 2:
            raise ValueError(f"candidate {c} has fewer than 2 distinct vertices")
        if c[-1] >= n or c[0] < 0:
            raise ValueError(f"candidate {c} outside 0..{n - 1}")
    top = max((len(c) for c in sets), default=2)
    k_max = top if k_max is None else k_max
    if k_max < top:
        raise ValueError(f"k_max={k_max} below the largest candidate size {top}")
    by_size: dict[int, list[tuple[int, ...]]] = {s: [] for s in range(2, k_max + 1)}
    pair_counts: dict[tuple[int, int], np.ndarray] = {}
    for c in sets:
        by_size[len(c)].append(c)
        for a in range(len(c)):
            for b in range(a + 1, len(c)):
                key = (c[a], c[b])
                vec = pair_counts.get(key)
                if vec is None:
                    vec = np.zeros(k_max - 1, dtype=np.int64)
                    pair_counts[key] = vec
                vec[len(c) - 2] += 1
    for s in by_size:
        by_size[s].sort()
    return PotentialIndex(n=n, k_max=k_max, by_size=by_size, pair_counts=pair_counts)


def sample_hypergraph(pot: PotentialIndex, phi: Sequence[float], seed: int) -> Hypergraph:
    """Keep each candidate hyperedge independently with its per-size
    probability. Deterministic for a fixed seed."""
    phi = np.asarray(phi, dtype=np.float64)
    if len(phi) != pot.k_max - 1:
        raise ValueError(
            f"phi has {len(phi)} entries; expected {pot.k_max - 1} for sizes 2..{pot.k_max}"
        )
    rng = np.random.default_rng(seed)
    kept: list[tuple[int, ...]] = []
    for s in pot.sizes:
        candidates = pot.by_size.get(s, [])
        if not candidates:
            continue
        draws = rng.random(len(candidates))
        p = phi[s - 2]
        kept.extend(f for f, x in zip(candidates, draws) if x < p)
    return Hypergraph(pot.n, kept)


def phi_preset(
    name: str,
    *,
    k_max: int,
    radii: Sequence[float] | None = None,
    alpha: float = DEFAULT_HOFF_ALPHA,
    gamma: float | None = None,
    pot: PotentialIndex | None = None,
) -> np.ndarray:
    """Selection probabilities for sizes ``2..k_max`` per a named rule.

    ``power_law``     1 / s**2
    ``hoff_sigmoid``  1 / (1 + exp(alpha * (r_s - gamma)))  (needs radii, gamma)
    ``constant``      0.1 for every size
    ``empirical``     candidate counts per size, scaled so the largest is 1
                      (needs ``pot``)
    """
    sizes = np.arange(2, k_max + 1, dtype=np.float64)
    if name == "power_law":
        return 1.0 / sizes**2
    if name == "constant":
        return np.full(len(sizes), 0.1)
    if name == "hoff_sigmoid":
        if radii is None or gamma is None:
            raise ValueError("hoff_sigmoid preset needs radii and gamma")
        radii = np.asarray(radii, dtype=np.float64)
        if len(radii) != len(sizes):
            raise ValueError("radii length must match k_max - 1")
        return 1.0 / (1.0 + np.exp(alpha * (radii - gamma)))
    if name == "empirical":
        if pot is None:
            raise ValueError("empirical preset needs a PotentialIndex")
        counts = pot.size_counts().astype(np.float64)
        top = counts.max()
        if top == 0:
            return np.zeros(len(sizes))
        return counts / top
    raise ValueError(f"unknown phi preset {name!r}; valid: {', '.join(PHI_PRESETS)}")


def link_probability(
    pot: PotentialIndex, phi: Sequence[float], i: int, j: int
) -> float:
    """Exact probability that clique expansion links ``i`` and ``j``.

    One minus the probability that every candidate covering the pair is
    rejected; candidate selections are independent, so the miss
    probabilities multiply.
    """
    if i == j:
        raise ValueError("link probability is undefined for a vertex with itself")
    phi = np.asarray(phi, dtype=np.float64)
    key = (i, j) if i < j else (j, i)
    counts = pot.pair_counts.get(key)
    if counts is None:
        return 0.0
    return float(1.0 - np.prod((1.0 - phi) ** counts))


def link_probability_map(
    pot: PotentialIndex, phi: Sequence[float]
) -> dict[tuple[int, int], float]:
    """Link probability for every covered pair (uncovered pairs are 0)."""
    phi = np.asarray(phi, dtype=np.float64)
    miss = 1.0 - phi
    return {
        pair: float(1.0 - np.prod(miss**counts))
        for pair, counts in pot.pair_counts.items()
    }


def hoff_edge_probability(params: HoffParams, dist) -> np.ndarray | float:
    """Sigmoid edge probability at the given distance(s); strictly
    decreasing in distance."""
    d = np.asarray(dist, dtype=np.float64)
    if np.any(d < 0):
        raise ValueError("distances must be nonnegative")
    with np.errstate(over="ignore"):
        out = 1.0 / (1.0 + np.exp(params.alpha * (d - params.gamma)))
    return float(out) if out.ndim == 0 else out


def hoff_clique_probability(params: HoffParams, dists: Sequence[float]) -> float:
    """Probability the sigmoid model realizes a full clique: the product of
    the pairwise edge probabilities (one factor per pair, so a size-k set
    has k*(k-1)/2 factors)."""
    dists = np.asarray(dists, dtype=np.float64)
    if dists.size == 0:
        return 1.0
    return float(np.prod(hoff_edge_probability(params, dists)))


def default_hoff_params(positions: np.ndarray, alpha: float = DEFAULT_HOFF_ALPHA) -> HoffParams:
    """Fallback sigmoid parameters: slope ``alpha``, offset at the median
    pairwise distance."""
    return HoffParams(alpha=alpha, gamma=float(np.median(pairwise_distances(positions))))


@dataclass
class DistanceProfile:
    """Edge frequency by pairwise distance, for the generator and for the
    sigmoid baseline at the same distances."""

    bin_edges: np.ndarray
    bin_centers: np.ndarray
    pair_counts: np.ndarray
    model_freq: np.ndarray
    hoff_prob: np.ndarray
    hoff_params: HoffParams
    n_trials: int


def edge_distance_profile(
    model: LatentModel,
    phi: Sequence[float] | None = None,
    n_trials: int = 100,
    bins: int = 20,
    hoff: HoffParams | None = None,
    max_potential: int = DEFAULT_MAX_POTENTIAL,
) -> DistanceProfile:
    """Empirical probability that a pair at a given distance becomes an
    edge, binned by distance, against the sigmoid baseline at bin centers.

    Pairs farther apart than ``2 * max(radii)`` can never be covered, so
    their frequency is exactly zero by construction.
    """
    if n_trials < 1:
        raise ValueError("n_trials must be >= 1")
    phi_vec = model.phi if phi is None else np.asarray(phi, dtype=np.float64)
    hoff = hoff or default_hoff_params(model.positions)
    dist = pairwise_distances(model.positions)
    n = model.n
    pot = build_potential(model.positions, model.radii, max_potential=max_potential)

    # Condensed pair indices (pdist ordering) covered by each candidate,
    # one row per candidate: lets a whole trial reduce to array indexing.
    covered_idx: dict[int, np.ndarray] = {}
    for s in pot.sizes:
        cands = pot.by_size.get(s, [])
        if not cands:
            continue
        arr = np.asarray(cands, dtype=np.int64)
        cols = [(a, b) for a in range(s) for b in range(a + 1, s)]
        ii = arr[:, [a for a, _ in cols]]
        jj = arr[:, [b for _, b in cols]]
        covered_idx[s] = n * ii - (ii * (ii + 1)) // 2 + (jj - ii - 1)

    hits = np.zeros(len(dist))
    seed_rng = np.random.default_rng(model.seed)
    trial_seeds = seed_rng.integers(0, 2**63 - 1, size=n_trials)
    for ts in trial_seeds:
        # Same per-size draw order as sample_hypergraph, so a trial here
        # realizes the same hypergraph that seed would produce there.
        rng = np.random.default_rng(int(ts))
        parts = []
        for s in pot.sizes:
            cands = pot.by_size.get(s, [])
            if not cands:
                continue
            mask = rng.random(len(cands)) < phi_vec[s - 2]
            if mask.any():
                parts.append(covered_idx[s][mask].ravel())
        if parts:
            hits[np.unique(np.concatenate(parts))] += 1
    freq = hits / n_trials

    edges = np.histogram_bin_edges(dist, bins=bins)
    which = np.clip(np.digitize(dist, edges) - 1, 0, len(edges) - 2)
    counts = np.bincount(which, minlength=len(edges) - 1)
    sums = np.bincount(which, weights=freq, minlength=len(edges) - 1)
    model_freq = np.divide(
        sums, counts, out=np.zeros(len(edges) - 1), where=counts > 0
    )
    centers = 0.5 * (edges[:-1] + edges[1:])
    return DistanceProfile(
        bin_edges=edges,
        bin_centers=centers,
        pair_counts=counts,
        model_freq=model_freq,
        hoff_prob=np.asarray(hoff_edge_probability(hoff, centers)),
        hoff_params=hoff,
        n_trials=n_trials,
    )
