"""Bitset enumeration kernels compiled with numba.

Every kernel takes the packed adjacency ``bits`` (n x words, uint64) and an
``allowed`` vertex mask in the same layout; vertices outside the mask are
ignored. Witnesses come back as int64 arrays, with ``-1`` meaning none.
"""

import numpy as np
from numba import njit

_ONE = np.uint64(1)
_ZERO = np.uint64(0)


@njit(cache=True, inline="always")
def _has(row, v):
    return (row[v >> 6] >> np.uint64(v & 63)) & _ONE


@njit(cache=True, inline="always")
def _first_common(x, y, words):
    """Least vertex in ``x & y`` or -1."""
    for k in range(words):
        w = x[k] & y[k]
        if w != _ZERO:
            t = 0
            while (w >> np.uint64(t)) & _ONE == _ZERO:
                t += 1
            return k * 64 + t
    return -1


@njit(cache=True)
def c5_search(bits, allowed, n):
    """Find an induced 5-cycle a-b-c-d-e inside ``allowed``.

    ``a`` is taken as the least vertex of the cycle, so only vertices above
    it are admitted for the other four roles.
    """
    words = bits.shape[1]
    out = np.full(5, -1, np.int64)
    above = allowed.copy()
    cset = np.empty(words, np.uint64)
    dset = np.empty(words, np.uint64)
    for a in range(n):
        if not _has(allowed, a):
            continue
        above[a >> 6] &= ~(_ONE << np.uint64(a & 63))
        ra = bits[a]
        for b in range(a + 1, n):
            if not (_has(above, b) and _has(ra, b)):
                continue
            rb = bits[b]
            for e in range(b + 1, n):
                if not (_has(above, e) and _has(ra, e)) or _has(rb, e):
                    continue
                re = bits[e]
                cnt = _ZERO
                dnt = _ZERO
                for k in range(words):
                    cset[k] = rb[k] & ~ra[k] & ~re[k] & above[k]
                    dset[k] = re[k] & ~ra[k] & ~rb[k] & above[k]
                    cnt |= cset[k]
                    dnt |= dset[k]
                if cnt == _ZERO or dnt == _ZERO:
                    continue
                for k in range(words):
                    w = cset[k]
                    while w != _ZERO:
                        t = 0
                        while (w >> np.uint64(t)) & _ONE == _ZERO:
                            t += 1
                        c = k * 64 + t
                        w &= ~(_ONE << np.uint64(t))
                        d = _first_common(bits[c], dset, words)
                        if d >= 0:
                            out[0] = a
                            out[1] = b
                            out[2] = c
                            out[3] = d
                            out[4] = e
                            return out
    return out


@njit(cache=True)
def bull_search(bits, allowed, n):
    """Find an induced bull inside ``allowed``.

    Returns (t1, t2, t3, p1, p2): triangle t1 t2 t3, pendant p1 at t1 and
    pendant p2 at t2.
    """
    words = bits.shape[1]
    out = np.full(5, -1, np.int64)
    p1set = np.empty(words, np.uint64)
    p2set = np.empty(words, np.uint64)
    for t3 in range(n):
        if not _has(allowed, t3):
            continue
        r3 = bits[t3]
        for t1 in range(n):
            if not (_has(allowed, t1) and _has(r3, t1)):
                continue
            r1 = bits[t1]
            for t2 in range(t1 + 1, n):
                if not (_has(allowed, t2) and _has(r3, t2) and _has(r1, t2)):
                    continue
                r2 = bits[t2]
                any1 = _ZERO
                any2 = _ZERO
                for k in range(words):
                    p1set[k] = r1[k] & ~r2[k] & ~r3[k] & allowed[k]
                    p2set[k] = r2[k] & ~r1[k] & ~r3[k] & allowed[k]
                    any1 |= p1set[k]
                    any2 |= p2set[k]
                if any1 == _ZERO or any2 == _ZERO:
                    continue
                for k in range(words):
                    w = p1set[k]
                    while w != _ZERO:
                        t = 0
                        while (w >> np.uint64(t)) & _ONE == _ZERO:
                            t += 1
                        p1 = k * 64 + t
                        w &= ~(_ONE << np.uint64(t))
                        rp = bits[p1]
                        for kk in range(words):
                            x = p2set[kk] & ~rp[kk]
                            if x != _ZERO:
                                tt = 0
                                while (x >> np.uint64(tt)) & _ONE == _ZERO:
                                    tt += 1
                                out[0] = t1
                                out[1] = t2
                                out[2] = t3
                                out[3] = p1
                                out[4] = kk * 64 + tt
                                return out
    return out


@njit(cache=True)
def anchor_search(bits, allowed, n):
    """Find an anchor inside ``allowed``: (p1, p2, p3, p4, c, a)."""
    words = bits.shape[1]
    out = np.full(6, -1, np.int64)
    cset = np.empty(words, np.uint64)
    aset = np.empty(words, np.uint64)
    for p2 in range(n):
        if not _has(allowed, p2):
            continue
        r2 = bits[p2]
        for p3 in range(n):
            if p3 == p2 or not (_has(allowed, p3) and _has(r2, p3)):
                continue
            r3 = bits[p3]
            for p1 in range(n):
                if p1 == p3 or not (_has(allowed, p1) and _has(r2, p1)) or _has(r3, p1):
                    continue
                r1 = bits[p1]
                for p4 in range(p1 + 1, n):
                    if p4 == p2 or not (_has(allowed, p4) and _has(r3, p4)):
                        continue
                    if _has(r2, p4) or _has(r1, p4):
                        continue
                    r4 = bits[p4]
                    hit_c = _ZERO
                    hit_a = _ZERO
                    for k in range(words):
                        cset[k] = r1[k] & r2[k] & r3[k] & r4[k] & allowed[k]
                        aset[k] = ~(r1[k] | r2[k] | r3[k] | r4[k]) & allowed[k]
                        hit_c |= cset[k]
                    # path vertices themselves are never anticomplete candidates
                    for v in (p1, p2, p3, p4):
                        aset[v >> 6] &= ~(_ONE << np.uint64(v & 63))
                    for k in range(words):
                        hit_a |= aset[k]
                    if hit_c == _ZERO or hit_a == _ZERO:
                        continue
                    c = _first_common(cset, allowed, words)
                    a = _first_common(aset, allowed, words)
                    out[0] = p1
                    out[1] = p2
                    out[2] = p3
                    out[3] = p4
                    out[4] = c
                    out[5] = a
                    return out
    return out


@njit(cache=True)
def bfs_tables(nbr_ptr, nbr_idx, n):
    """All-pairs BFS with least-index parents.

    Returns (dist, parent, branch): ``parent[s, v]`` is the least-index
    neighbour of ``v`` one step closer to ``s``; ``branch[s, v]`` is the
    vertex after ``s`` on the canonical path from ``s`` to ``v``.
    """
    dist = np.full((n, n), -1, np.int64)
    parent = np.full((n, n), -1, np.int64)
    branch = np.full((n, n), -1, np.int64)
    order = np.empty(n, np.int64)
    for s in range(n):
        d = dist[s]
        d[s] = 0
        head = 0
        tail = 1
        order[0] = s
        while head < tail:
            u = order[head]
            head += 1
            for p in range(nbr_ptr[u], nbr_ptr[u + 1]):
                w = nbr_idx[p]
                if d[w] < 0:
                    d[w] = d[u] + 1
                    order[tail] = w
                    tail += 1
        for i in range(1, tail):
            v = order[i]
            for p in range(nbr_ptr[v], nbr_ptr[v + 1]):
                u = nbr_idx[p]
                if d[u] == d[v] - 1:
                    parent[s, v] = u
                    break
            if parent[s, v] == s:
                branch[s, v] = v
            else:
                branch[s, v] = branch[s, parent[s, v]]
    return dist, parent, branch


@njit(cache=True)
def triple_scan(adj, dist, parent, branch, edges_u, edges_v, n):
    """Scan triples (y, x1, x2) for two equal shortest paths closing an odd hole.

    Returns the cycle y .. x1 x2 .. (back to y) as an array, or an empty
    array if no triple fires.
    """
    p1 = np.empty(n, np.int64)
    p2 = np.empty(n, np.int64)
    for y in range(n):
        dy = dist[y]
        for ei in range(edges_u.shape[0]):
            x1 = edges_u[ei]
            x2 = edges_v[ei]
            if x1 == y or x2 == y:
                continue
            L = dy[x1]
            if L < 2 or dy[x2] != L:
                continue
            if branch[y, x1] == branch[y, x2]:
                continue
            # fill paths from the far end back to y: p[i] at distance i
            v = x1
            for i in range(L, -1, -1):
                p1[i] = v
                v = parent[y, v]
            v = x2
            for i in range(L, -1, -1):
                p2[i] = v
                v = parent[y, v]
            ok = True
            for i in range(1, L + 1):
                ai = adj[p1[i]]
                for j in range(1, L + 1):
                    if ai[p2[j]] != (i == L and j == L):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                cyc = np.empty(2 * L + 1, np.int64)
                for i in range(L + 1):
                    cyc[i] = p1[i]
                for j in range(L):
                    cyc[L + 1 + j] = p2[L - j]
                return cyc
    return np.empty(0, np.int64)


@njit(cache=True)
def _least_cross_pair(bits, xs, ys, n, want_edge):
    """Lexicographically least pair (u < v), one end in ``xs`` and the other
    in ``ys``, whose adjacency equals ``want_edge``. ``xs`` and ``ys`` must be
    disjoint."""
    words = bits.shape[1]
    for k in range(words):
        w = xs[k] | ys[k]
        while w != _ZERO:
            t = 0
            while (w >> np.uint64(t)) & _ONE == _ZERO:
                t += 1
            w &= ~(_ONE << np.uint64(t))
            u = k * 64 + t
            other = ys if _has(xs, u) else xs
            ru = bits[u]
            for kk in range(words):
                cand = other[kk] & (ru[kk] if want_edge else ~ru[kk])
                if cand != _ZERO:
                    tt = 0
                    while (cand >> np.uint64(tt)) & _ONE == _ZERO:
                        tt += 1
                    return u, kk * 64 + tt
    return -1, -1


@njit(cache=True)
def _sorted_less(a, b):
    for i in range(a.shape[0]):
        if a[i] != b[i]:
            return a[i] < b[i]
    return False


@njit(cache=True)
def c5_least_through(bits, allowed, n, a):
    """Least sorted vertex set of an induced C5 whose minimum vertex is ``a``."""
    words = bits.shape[1]
    best = np.full(5, -1, np.int64)
    cur = np.empty(5, np.int64)
    above = allowed.copy()
    for v in range(a + 1):
        above[v >> 6] &= ~(_ONE << np.uint64(v & 63))
    cset = np.empty(words, np.uint64)
    dset = np.empty(words, np.uint64)
    ra = bits[a]
    for b in range(a + 1, n):
        if not (_has(above, b) and _has(ra, b)):
            continue
        rb = bits[b]
        for e in range(b + 1, n):
            if not (_has(above, e) and _has(ra, e)) or _has(rb, e):
                continue
            re = bits[e]
            for k in range(words):
                cset[k] = rb[k] & ~ra[k] & ~re[k] & above[k]
                dset[k] = re[k] & ~ra[k] & ~rb[k] & above[k]
            x, y = _least_cross_pair(bits, cset, dset, n, True)
            if x < 0:
                continue
            cur[0] = a
            cur[1] = b
            cur[2] = e
            cur[3] = x
            cur[4] = y
            cur.sort()
            if best[0] < 0 or _sorted_less(cur, best):
                best[:] = cur
    return best


@njit(cache=True)
def bull_least(bits, allowed, n):
    """Least sorted vertex set inducing a bull, or all -1."""
    words = bits.shape[1]
    best = np.full(5, -1, np.int64)
    cur = np.empty(5, np.int64)
    p1set = np.empty(words, np.uint64)
    p2set = np.empty(words, np.uint64)
    for t3 in range(n):
        if not _has(allowed, t3):
            continue
        r3 = bits[t3]
        for t1 in range(n):
            if not (_has(allowed, t1) and _has(r3, t1)):
                continue
            r1 = bits[t1]
            for t2 in range(t1 + 1, n):
                if not (_has(allowed, t2) and _has(r3, t2) and _has(r1, t2)):
                    continue
                r2 = bits[t2]
                for k in range(words):
                    p1set[k] = r1[k] & ~r2[k] & ~r3[k] & allowed[k]
                    p2set[k] = r2[k] & ~r1[k] & ~r3[k] & allowed[k]
                x, y = _least_cross_pair(bits, p1set, p2set, n, False)
                if x < 0:
                    continue
                cur[0] = t1
                cur[1] = t2
                cur[2] = t3
                cur[3] = x
                cur[4] = y
                cur.sort()
                if best[0] < 0 or _sorted_less(cur, best):
                    best[:] = cur
    return best


@njit(cache=True)
def anchor_least(bits, allowed, n):
    """Least sorted vertex set inducing an anchor, or all -1."""
    words = bits.shape[1]
    best = np.full(6, -1, np.int64)
    cur = np.empty(6, np.int64)
    cset = np.empty(words, np.uint64)
    aset = np.empty(words, np.uint64)
    for p2 in range(n):
        if not _has(allowed, p2):
            continue
        r2 = bits[p2]
        for p3 in range(n):
            if p3 == p2 or not (_has(allowed, p3) and _has(r2, p3)):
                continue
            r3 = bits[p3]
            for p1 in range(n):
                if p1 == p3 or not (_has(allowed, p1) and _has(r2, p1)) or _has(r3, p1):
                    continue
                r1 = bits[p1]
                for p4 in range(p1 + 1, n):
                    if p4 == p2 or not (_has(allowed, p4) and _has(r3, p4)):
                        continue
                    if _has(r2, p4) or _has(r1, p4):
                        continue
                    r4 = bits[p4]
                    for k in range(words):
                        cset[k] = r1[k] & r2[k] & r3[k] & r4[k] & allowed[k]
                        aset[k] = ~(r1[k] | r2[k] | r3[k] | r4[k]) & allowed[k]
                    for v in (p1, p2, p3, p4):
                        aset[v >> 6] &= ~(_ONE << np.uint64(v & 63))
                    c = _first_common(cset, allowed, words)
                    a = _first_common(aset, allowed, words)
                    if c < 0 or a < 0:
                        continue
                    cur[0] = p1
                    cur[1] = p2
                    cur[2] = p3
                    cur[3] = p4
                    cur[4] = c
                    cur[5] = a
                    cur.sort()
                    if best[0] < 0 or _sorted_less(cur, best):
                        best[:] = cur
    return best


@njit(cache=True)
def module_closure_mask(adj, members):
    """Grow ``members`` (bool, modified in place) to the smallest module
    containing it: a vertex seeing part of the set must join it."""
    n = adj.shape[0]
    count = np.zeros(n, np.int64)
    size = 0
    for w in range(n):
        if members[w]:
            size += 1
            for u in range(n):
                count[u] += adj[u, w]
    grew = True
    while grew:
        grew = False
        for u in range(n):
            if not members[u] and 0 < count[u] < size:
                members[u] = True
                size += 1
                for x in range(n):
                    count[x] += adj[x, u]
                grew = True
    return members


@njit(cache=True)
def modules_avoiding(adj, v):
    """Class labels of the coarsest partition of V - {v} into modules of
    the graph (``v`` gets -1). Each pass splits every class not containing a
    pivot y by adjacency to y; stop after a pass with no split."""
    n = adj.shape[0]
    label = np.zeros(n, np.int64)
    label[v] = -1
    for u in range(n):
        if u != v and adj[v, u]:
            label[u] = 1
    classes = 2
    size = np.zeros(n + 1, np.int64)
    hits = np.zeros(n + 1, np.int64)
    fresh = np.full(n + 1, -1, np.int64)
    changed = True
    while changed:
        changed = False
        for y in range(n):
            if y == v:
                continue
            size[:classes] = 0
            hits[:classes] = 0
            for u in range(n):
                if u != v:
                    size[label[u]] += 1
                    if adj[y, u]:
                        hits[label[u]] += 1
            own = label[y]
            fresh[:classes] = -1
            for u in range(n):
                if u == v or not adj[y, u]:
                    continue
                c = label[u]
                if c != own and hits[c] < size[c]:
                    if fresh[c] < 0:
                        fresh[c] = classes
                        classes += 1
                    label[u] = fresh[c]
                    changed = True
    return label


@njit(cache=True)
def homogeneous_mask(adj):
    """Smallest module containing the lexicographically first pair that
    lies in a proper module; all-False when the graph is prime."""
    n = adj.shape[0]
    out = np.zeros(n, np.bool_)
    if n < 3:
        return out
    for v in range(1, n):
        members = np.zeros(n, np.bool_)
        members[0] = True
        members[v] = True
        module_closure_mask(adj, members)
        if not members.all():
            return members
    # no proper module holds 0, so every module sits inside one class
    label = modules_avoiding(adj, 0)
    first = np.full(2 * n + 2, -1, np.int64)
    best_a = -1
    best_b = -1
    for u in range(1, n):
        c = label[u]
        if first[c] < 0:
            first[c] = u
        elif best_a < 0 or (first[c], u) < (best_a, best_b):
            best_a = first[c]
            best_b = u
    if best_a < 0:
        return out
    members = np.zeros(n, np.bool_)
    members[best_a] = True
    members[best_b] = True
    return module_closure_mask(adj, members)
