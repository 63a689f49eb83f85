"""
Certifying the line graph of the Petersen graph
===============================================

"""

from cubic_normality import (build_certificate, line_graph, named_graph,
                             to_normality_witness, verify_certificate, verify_witness)

g = named_graph("petersen")
print(g)

# a good vertex cover: every edge sits in a matching that touches all of it
cert = build_certificate(g)
print("cover:", sorted(cert.cover))

# one covering matching per edge
for e in g.sorted_edges[:4]:
    print(e, "->", sorted(cert.per_edge[e]))
print("...")

# stars at the cover vertices are the cliques of L(G), the matchings its stable sets
wit = to_normality_witness(cert)
print(len(wit.cliques), "star cliques,", len(wit.stables), "distinct stable sets")

# both checks replay the definitions from scratch
print("certificate:", verify_certificate(g, cert))
print("witness:   ", verify_witness(line_graph(g), wit))
