"""Shared graph builders and independent brute-force oracles.

The oracles here deliberately avoid the production code paths they are
used to check: peeling order is randomized, meagerness enumerates all
subsets, short-cycle pairs enumerate raw vertex sequences, and existence
checks enumerate side subsets with itertools.
"""

from itertools import combinations

from degpart import DemandPair, Graph


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(s, t):
    return Graph(s + t, [(i, s + j) for i in range(s) for j in range(t)])


def book_b3():
    """Spine 0-1, pages 2, 3, 4."""
    return Graph(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])


def edgeless(n):
    return Graph(n, [])


def vertex_pairs(n):
    return list(combinations(range(n), 2))


def graph_from_bits(n, bits):
    """Graph whose edge set is the bits-indexed subset of vertex_pairs(n)."""
    pairs = vertex_pairs(n)
    return Graph(n, [pairs[i] for i in range(len(pairs)) if bits >> i & 1])


def all_graphs(n):
    for bits in range(2 ** (n * (n - 1) // 2)):
        yield graph_from_bits(n, bits)


# -- independent oracles -----------------------------------------------------


def f_core_random_order(G, X, f, rng):
    """Peel violators in random order instead of ascending id."""
    alive = set(X)
    while True:
        violators = [u for u in sorted(alive) if len(G.adj[u] & alive) < f[u]]
        if not violators:
            return frozenset(alive)
        alive.discard(rng.choice(violators))


def meager_bruteforce(G, X, side, d, h):
    """Every nonempty subset has a bad vertex; exponential in |X|."""
    X = sorted(X)
    for r in range(1, len(X) + 1):
        for sub in combinations(X, r):
            sub_set = frozenset(sub)
            if side == 1:
                bad = any(len(G.adj[u] & sub_set) <= d.a[u] for u in sub)
            else:
                bad = any(
                    len(G.adj[u] & sub_set) <= d.b[u] + h[u] - 1 for u in sub
                )
            if not bad:
                return False
    return True


def degenerate_bruteforce(G, X, f):
    X = sorted(X)
    for r in range(1, len(X) + 1):
        for sub in combinations(X, r):
            sub_set = frozenset(sub)
            if not any(len(G.adj[u] & sub_set) <= f[u] for u in sub):
                return False
    return True


def s1_bruteforce(G):
    """Direct transcription of the short-cycle-pair definition: enumerate
    vertex sequences of lengths 3 and 4 starting with each ordered adjacent
    pair, keep those tracing cycles, and compare vertex sets."""
    out = set()
    for u1 in range(G.n):
        for u2 in G.adj[u1]:
            found = set()
            for w in range(G.n):
                if w in (u1, u2):
                    continue
                if w in G.adj[u2] and u1 in G.adj[w]:
                    found.add(frozenset((u1, u2, w)))
            for w in range(G.n):
                if w in (u1, u2):
                    continue
                for z in range(G.n):
                    if z in (u1, u2, w):
                        continue
                    if w in G.adj[u2] and z in G.adj[w] and u1 in G.adj[z]:
                        found.add(frozenset((u1, u2, w, z)))
            if len(found) >= 2:
                out.add(u1)
                out.add(u2)
    return frozenset(out)


def feasible_exists_bruteforce(G, d):
    """Existence of a feasible partition by subset enumeration."""
    vertices = range(G.n)
    for size in range(1, G.n):
        for side1 in combinations(vertices, size):
            A = frozenset(side1)
            B = frozenset(vertices) - A
            if all(len(G.adj[u] & A) >= d.a[u] for u in A) and all(
                len(G.adj[v] & B) >= d.b[v] for v in B
            ):
                return True
    return False


def random_graph(rng, n, p):
    return Graph(
        n, [(u, v) for u, v in vertex_pairs(n) if rng.random() < p]
    )


def random_demands(rng, n, lo=0, hi=3):
    return DemandPair(
        tuple(rng.randint(lo, hi) for _ in range(n)),
        tuple(rng.randint(lo, hi) for _ in range(n)),
    )
