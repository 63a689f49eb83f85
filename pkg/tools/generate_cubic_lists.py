"""Regenerate the stored lists of connected cubic graphs (graph6, one per line).

Labeled cubic graphs are enumerated in breadth-first vertex order (every vertex
is numbered when first reached, fresh neighbours take the next free labels), so
only connected graphs appear and most relabelings are skipped. Isomorphic copies
are then dropped with networkx. Counts are checked against the known sequence
1, 2, 5, 19, 85 before anything is written.

    python tools/generate_cubic_lists.py
"""

import itertools
import pathlib

import networkx as nx

KNOWN_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85}
OUT = pathlib.Path(__file__).resolve().parents[1] / "src" / "cubic_normality" / "data"


def bfs_cubic(n):
    adj = [set() for _ in range(n)]

    def extend(i, fresh):
        if i == n:
            yield [tuple(sorted(a)) for a in adj]
            return
        if i >= fresh:
            return
        need = 3 - len(adj[i])
        if need == 0:
            yield from extend(i + 1, fresh)
            return
        reached = [j for j in range(i + 1, fresh) if len(adj[j]) < 3 and j not in adj[i]]
        for k_fresh in range(need + 1):
            if fresh + k_fresh > n:
                break
            new = list(range(fresh, fresh + k_fresh))
            for old in itertools.combinations(reached, need - k_fresh):
                chosen = list(old) + new
                for j in chosen:
                    adj[i].add(j)
                    adj[j].add(i)
                yield from extend(i + 1, fresh + k_fresh)
                for j in chosen:
                    adj[i].discard(j)
                    adj[j].discard(i)

    yield from extend(0, 1)


def invariant(g):
    # WL hashing cannot separate regular graphs; distance profiles and triangle counts mostly can
    tri = nx.triangles(g)
    profile = []
    for v in g.nodes():
        dist = nx.single_source_shortest_path_length(g, v)
        hist = [0] * (max(dist.values()) + 1)
        for d in dist.values():
            hist[d] += 1
        profile.append((tri[v], tuple(hist)))
    return tuple(sorted(profile))


def family(n):
    buckets = {}
    for rows in bfs_cubic(n):
        g = nx.Graph((v, w) for v, row in enumerate(rows) for w in row)
        bucket = buckets.setdefault(invariant(g), [])
        if not any(nx.is_isomorphic(g, h) for h in bucket):
            bucket.append(g)
    return [g for bucket in buckets.values() for g in bucket]


def canonical_g6(g):
    # smallest encoding over BFS relabelings keeps the file byte-stable
    best = None
    for start in sorted(g.nodes()):
        order = list(nx.bfs_tree(g, start))
        relabel = {v: i for i, v in enumerate(order)}
        code = nx.to_graph6_bytes(nx.relabel_nodes(g, relabel), header=False).strip()
        if best is None or code < best:
            best = code
    return best.decode()


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for n, expected in KNOWN_COUNTS.items():
        graphs = family(n)
        assert len(graphs) == expected, (n, len(graphs))
        lines = sorted(canonical_g6(g) for g in graphs)
        (OUT / f"cubic{n:02d}.g6").write_text("\n".join(lines) + "\n")
        print(n, len(lines))


if __name__ == "__main__":
    main()
