"""
Dominating cliques in a fixed set
=================================

A k-clique K inside Y dominates when every vertex outside Y misses at least
one vertex of K. Its extension inside Y is then maximal in the whole graph.
Here the Monte Carlo mean of the count is set against its closed form.
"""

import statistics

from cliquechroma import (
    GenParams,
    count_dominating_cliques,
    estimate_lemma1_probability,
    expected_dominating_cliques,
    gen_random_graph,
)

counts = [count_dominating_cliques(gen_random_graph(GenParams(40, 0.5, s)), m=12, k=3)
          for s in range(20_000)]
print(f"mean count {statistics.fmean(counts):.4f}, closed form {expected_dominating_cliques(40, 12, 3):.4f}")

# The bad event: every outside vertex has enough non-neighbours in Y, and still
# no dominating k-clique exists.
est = estimate_lemma1_probability(n=30, y=12, k=3, threshold=2, trials=5000, seed=1)
print(f"bad event frequency {est.fraction:.4f}, 95% CI [{est.ci_low:.4f}, {est.ci_high:.4f}]")
