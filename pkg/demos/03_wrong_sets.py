"""
Why some minimal covers are not good
====================================

"""

from collections import Counter

from cubic_normality import bridges, connected_cubic_graphs, find_wrong_set, is_good
from cubic_normality.decomposition import check_technical_exclusions
from cubic_normality.oracle import enumerate_minimal_covers

# every connected cubic graph on at most 12 vertices that has a bridge
graphs = [g for n in (4, 6, 8, 10, 12) for g in connected_cubic_graphs(n) if bridges(g)]
print(len(graphs), "bridged cubic graphs")

kinds = Counter()
example = None
for g in graphs:
    for c in enumerate_minimal_covers(g):
        if is_good(g, c):
            continue
        ws = find_wrong_set(g, c)
        assert check_technical_exclusions(ws, g, c) == []
        kinds[ws.type] += 1
        example = example or (g, c, ws)

print("obstructions by type:", dict(kinds))

g, c, ws = example
print("\nfirst one:", g, "cover", sorted(c))
print("  W =", sorted(ws.W))
print("  Z =", sorted(ws.Z), " Y =", sorted(ws.Y), " U =", ws.U)
print("  the only edge leaving W:", ws.bridge)
