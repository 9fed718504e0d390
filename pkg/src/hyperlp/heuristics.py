"""Neighborhood-based link scorers.

Six classical scorers are exposed under short string ids:

==========  =============================  ==========================================
id          name                           score for a pair (u, v)
==========  =============================  ==========================================
``cn``      common neighbors               ``|N(u) & N(v)|``
``aa``      Adamic/Adar                    ``sum(1 / log(1 + deg(w)))`` over common w
``ra``      resource allocation            ``sum(1 / deg(w))`` over common w
``pa``      preferential attachment        ``deg(u) * deg(v)``
``jc``      Jaccard coefficient            ``|N(u) & N(v)| / |N(u) | N(v)|``
``sr``      SimRank                        fixed point of the pairwise recursion
==========  =============================  ==========================================

Adamic/Adar uses the natural log of ``1 + deg``, which keeps degree-1
common neighbors finite (they cannot occur anyway: a common neighbor has
degree >= 2, asserted in the tests).

Scores are raw, not normalized; rank-based evaluation downstream makes
monotone rescaling irrelevant.
"""

from __future__ import annotations

import math
import weakref
from typing import Callable, Iterable, Sequence

import numpy as np

from .hypergraph import SimpleGraph

SCORER_IDS: tuple[str, ...] = ("cn", "aa", "pa", "jc", "ra", "sr")

SIMRANK_DECAY = 0.8
SIMRANK_TOL = 1e-4
SIMRANK_MAX_ITER = 100


class SimRankConvergenceError(RuntimeError):
    """Raised when the SimRank iteration has not met tolerance at the
    iteration cap."""


def _check_pair(g: SimpleGraph, u: int, v: int) -> None:
    if u == v:
        raise ValueError(f"scores are undefined for a vertex paired with itself ({u})")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"pair ({u}, {v}) outside 0..{g.n - 1}")


def common_neighbors(g: SimpleGraph, u: int, v: int) -> float:
    _check_pair(g, u, v)
    return float(len(g.neighbors(u) & g.neighbors(v)))


def adamic_adar(g: SimpleGraph, u: int, v: int) -> float:
    _check_pair(g, u, v)
    return sum(1.0 / math.log(1 + g.degree(w)) for w in g.neighbors(u) & g.neighbors(v))


def resource_allocation(g: SimpleGraph, u: int, v: int) -> float:
    _check_pair(g, u, v)
    return sum(1.0 / g.degree(w) for w in g.neighbors(u) & g.neighbors(v))


def preferential_attachment(g: SimpleGraph, u: int, v: int) -> float:
    _check_pair(g, u, v)
    return float(g.degree(u) * g.degree(v))


def jaccard(g: SimpleGraph, u: int, v: int) -> float:
    _check_pair(g, u, v)
    nu, nv = g.neighbors(u), g.neighbors(v)
    union = len(nu | nv)
    if union == 0:
        return 0.0
    return len(nu & nv) / union


def simrank_matrix(
    g: SimpleGraph,
    decay: float = SIMRANK_DECAY,
    tol: float = SIMRANK_TOL,
    max_iter: int = SIMRANK_MAX_ITER,
) -> np.ndarray:
    """Full n-by-n SimRank similarity table.

    Iterates ``S <- decay * W.T S W`` with the diagonal pinned to 1, where
    ``W`` is the column-normalized adjacency matrix, starting from the
    identity (all off-diagonal similarity zero). Stops when successive
    iterates differ by less than ``tol`` in max-norm.
    """
    n = g.n
    a = g.adjacency_matrix()
    deg = a.sum(axis=0)
    w = np.divide(a, deg, out=np.zeros_like(a), where=deg > 0)
    s = np.eye(n)
    for _ in range(max_iter):
        s_next = decay * (w.T @ s @ w)
        np.fill_diagonal(s_next, 1.0)
        delta = np.max(np.abs(s_next - s)) if n else 0.0
        s = s_next
        if delta < tol:
            return s
    raise SimRankConvergenceError(
        f"SimRank not within {tol} after {max_iter} iterations (last delta {delta:.3g})"
    )


# One table per graph; graphs are immutable so entries never go stale.
_simrank_cache: "weakref.WeakKeyDictionary[SimpleGraph, np.ndarray]" = (
    weakref.WeakKeyDictionary()
)


def _simrank_cached(g: SimpleGraph) -> np.ndarray:
    table = _simrank_cache.get(g)
    if table is None:
        table = simrank_matrix(g)
        _simrank_cache[g] = table
    return table


def simrank(g: SimpleGraph, u: int, v: int) -> float:
    _check_pair(g, u, v)
    return float(_simrank_cached(g)[u, v])


_SCORERS: dict[str, Callable[[SimpleGraph, int, int], float]] = {
    "cn": common_neighbors,
    "aa": adamic_adar,
    "ra": resource_allocation,
    "pa": preferential_attachment,
    "jc": jaccard,
    "sr": simrank,
}


def score(scorer: str, g: SimpleGraph, u: int, v: int) -> float:
    """Score one vertex pair with the scorer named by ``scorer``."""
    try:
        fn = _SCORERS[scorer]
    except KeyError:
        raise ValueError(
            f"unknown scorer {scorer!r}; valid ids: {', '.join(SCORER_IDS)}"
        ) from None
    return fn(g, u, v)


def score_all_pairs(
    scorer: str, g: SimpleGraph, pairs: Iterable[Sequence[int]]
) -> list[float]:
    """Score a list of pairs, preserving order."""
    return [score(scorer, g, u, v) for u, v in pairs]
