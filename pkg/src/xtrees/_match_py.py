"""Pure-Python kernel for order-preserving subgraph embedding search.

This is the reference implementation of the hot loop shared by containment
queries, the solver and the acceptance checks. A compiled twin with the same
signature lives in _fastmatch.pyx; xtrees.kernels picks one at import time.

The search assigns pattern vertices 0..p-1 (0-based here) to host positions in
increasing (linear) or anchored cyclic order, backtracking over bitmask
candidate sets:

* candidates for pattern vertex v = positions after the previous image,
  capped so enough room remains for the rest of the pattern, intersected with
  the host adjacency masks of all already-placed pattern neighbours of v;
* cyclic order is handled by anchoring pattern vertex 0 on every host vertex
  in turn and comparing positions relative to the anchor, so each embedding is
  found exactly once.

Only backward pattern edges (u, v) with u < v are consulted, which is all of
them since edges are normalised.
"""

from __future__ import annotations


def order_embeddings(n, adj, p, pat_edges, cyclic, limit=0):
    """Order-preserving embeddings of a p-vertex pattern into an n-vertex host.

    n: host size; adj: length-n list of neighbour bitmasks (0-based);
    p: pattern size; pat_edges: normalised 0-based pattern edges;
    cyclic: preserve cyclic rather than linear order;
    limit: stop after this many embeddings (0 = enumerate all).

    Returns a list of p-tuples of 0-based host positions, in lexicographic
    order (cyclic: ordered by anchor, then lexicographic).
    """
    if p > n or p < 1:
        return []
    prev = [[] for _ in range(p)]
    for u, v in pat_edges:
        prev[v].append(u)
    full = (1 << n) - 1
    out = []
    img = [0] * p

    if not cyclic:
        def extend(v, lo):
            hi = n - (p - v)  # inclusive; leaves room for vertices v+1..p-1
            m = (full >> (n - 1 - hi)) & ~((1 << lo) - 1) if hi >= lo else 0
            for u in prev[v]:
                m &= adj[img[u]]
            while m:
                b = m & -m
                m ^= b
                img[v] = b.bit_length() - 1
                if v + 1 == p:
                    out.append(tuple(img))
                    if limit and len(out) >= limit:
                        return True
                elif extend(v + 1, img[v] + 1):
                    return True
            return False

        extend(0, 0)
        return out

    # cyclic: anchor the image of pattern vertex 0
    def cyc_mask(t, lo, hi):
        """Positions whose offset from t lies in [lo, hi] (offsets mod n)."""
        a, b = (t + lo) % n, (t + hi) % n
        if a <= b:
            return ((1 << (b + 1)) - 1) & ~((1 << a) - 1)
        return (full & ~((1 << a) - 1)) | ((1 << (b + 1)) - 1)

    for t in range(n):
        img[0] = t
        if p == 1:
            out.append((t,))
            if limit and len(out) >= limit:
                return out
            continue

        def extend_c(v, lorel):
            m = cyc_mask(t, lorel, n - (p - v))
            for u in prev[v]:
                m &= adj[img[u]]
            # iterate in increasing offset-from-anchor order
            while m:
                lowpart = m & ~((1 << t) - 1)  # offsets t..n-1 come first
                b = (lowpart & -lowpart) if lowpart else (m & -m)
                m ^= b
                q = b.bit_length() - 1
                img[v] = q
                if v + 1 == p:
                    out.append(tuple(img))
                    if limit and len(out) >= limit:
                        return True
                elif extend_c(v + 1, (q - t) % n + 1):
                    return True
            return False

        if extend_c(1, 1):
            return out
    return out
