"""
Normality of small odd cycles, by exhaustive search
===================================================

"""

import time

from cubic_normality import brute_normal, named_graph
from cubic_normality.oracle import brute_edge_normal, brute_strongly_edge_normal

for k in (3, 5, 7, 9, 11):
    start = time.perf_counter()
    answer = brute_normal(named_graph("C", k))
    print(f"C{k}: normal = {answer}  ({time.perf_counter() - start:.3f}s)")

# the triangle: its line graph is normal, but not with stars alone
k3 = named_graph("triangle")
print("triangle edge-normal:", brute_edge_normal(k3))
print("triangle strongly edge-normal:", brute_strongly_edge_normal(k3))

# cubic graphs do manage with stars
print("K4 strongly edge-normal:", brute_strongly_edge_normal(named_graph("K4")))
