"""
Graphs with bridges
===================

Minimal covers of bridged cubic graphs can fail to be good, so the pipeline
cuts along bridges, closes each piece with pendant gadgets and picks covers
piece by piece.
"""

from cubic_normality import bridges, decompose, named_graph, solve
from cubic_normality.decomposition import cubic_completion

g = named_graph("gadget_chain", 3)
print(g, "bridges:", sorted(bridges(g)))

tree = decompose(g)
for i, piece in enumerate(tree.pieces):
    comp = cubic_completion(piece)
    print(f"piece {i}: body {len(piece.body)}, arms {len(piece.arms)}, "
          f"completion has {comp.graph.n} vertices")

# which rule produced each piece cover
sol = solve(g)
print("piece cases:", [p.case for p in sol.pieces])
print("merged cover:", sorted(sol.cover))

# a matching for the bridge itself, and one for an edge far away from it
for f in (tree.links[0].bridge, g.sorted_edges[0]):
    print(f, "->", sorted(sol.matching_for_edge(f)))

# ladders hanging off one arm walk through the single-arm cases in turn
for rungs in range(4):
    lad = named_graph("ladder", rungs)
    print(f"ladder({rungs}):", [p.case for p in solve(lad).pieces])
