"""Hand-sized cases where every number is checkable on paper.

Case 1: five vertices, one triple {a,b,c} plus one pair {d,e}. Under
leave-one-out, common neighbors gives the triple's pairs score 1 and the
pair score 0, so the evaluation claims AUC 0.875 -- yet both hyperedges
appeared with the same probability, so nothing was predictable.

Case 2: three vertices. With only pair candidates, pooled scoring over
many draws sits at 0.5, matching the probability ceiling. With a single
triple candidate, the scorer hits a perfect pooled 1.0 while the ceiling
stays at 0.5: the inflation in its purest form. The exact enumerator
confirms both numbers without sampling.

Run:  python3 demos/04_toy_walkthroughs.py
"""

import numpy as np

from hyperlp import (
    Hypergraph,
    auc,
    auc_conditional,
    clique_expand,
    exact_ensemble_auc,
    leave_one_out,
    model_auc,
    potential_from_candidates,
    sample_hypergraph,
)
from hyperlp.evaluation import all_pairs
from hyperlp.heuristics import score

print("case 1: triple + pair over five vertices")
h = Hypergraph(5, [[0, 1, 2], [3, 4]])
g = clique_expand(h)
lp = leave_one_out(g, "cn")
names = "abcde"
for (u, v), s, label in zip(lp.pairs, lp.scores, lp.labels):
    mark = "edge" if label else "    "
    print(f"  {names[u]}{names[v]} {mark} score {s:.0f}")
print(f"  tie-aware AUC  : {auc(lp.scores, lp.labels):.3f}")
print(f"  strict AUC     : {auc_conditional(lp.scores, lp.labels):.3f}")

print("\ncase 2a: three pair candidates, phi=0.6")
pot_a = potential_from_candidates(3, [(0, 1), (0, 2), (1, 2)], k_max=3)
phi_a = [0.6, 0.0]
scores, labels = [], []
for seed in range(5000):
    g = clique_expand(sample_hypergraph(pot_a, phi_a, seed))
    for u, v in all_pairs(3):
        scores.append(score("cn", g, u, v))
        labels.append(g.has_edge(u, v))
pooled = auc(np.array(scores), np.array(labels))
exact, _ = exact_ensemble_auc(pot_a, phi_a)
print(f"  pooled scorer AUC over 5000 draws: {pooled:.3f} (exact {exact:.3f})")

print("\ncase 2b: one triple candidate, phi=0.6")
pot_b = potential_from_candidates(3, [(0, 1, 2)], k_max=3)
phi_b = [0.0, 0.6]
exact_b, _ = exact_ensemble_auc(pot_b, phi_b)
sample = clique_expand(sample_hypergraph(pot_b, phi_b, seed=1))
print(f"  exact pooled scorer AUC: {exact_b:.3f}")
print(f"  probability ceiling     : {model_auc(pot_b, phi_b, sample):.3f}")
print("  the scorer claims certainty; the data owns none of it")
