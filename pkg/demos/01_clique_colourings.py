"""
Clique colourings on small graphs
=================================

A clique colouring only has to break up the maximal cliques, so it can use far
fewer colours than a proper colouring.
"""

from cliquechroma import Coloring, Graph, exact_chi_c, verify_clique_coloring
from cliquechroma.coloring import brute_force_chromatic_number

# On a complete graph the only maximal clique is the whole vertex set, so two
# colours are enough however large the graph is.
for n in (3, 6, 10):
    K = Graph.complete(n)
    print(f"K_{n}: chi_c = {exact_chi_c(K)[0]}, chi = {n}")

# Without triangles the maximal cliques are exactly the edges, and the two
# numbers coincide.
for name, G in [("C5", Graph.cycle(5)), ("C7", Graph.cycle(7)), ("Petersen", Graph.petersen())]:
    print(f"{name}: chi_c = {exact_chi_c(G)[0]}, chi = {brute_force_chromatic_number(G)}")

# A failed check returns the offending clique as a certificate.
verdict = verify_clique_coloring(Graph.cycle(5), Coloring([0, 1, 0, 1, 0]))
print("C5 with colours 0,1,0,1,0 ->", "valid" if verdict else f"monochromatic {verdict.certificate}")
