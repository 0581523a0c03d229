"""Pure-Python perfect matching enumerator.

Twin of the compiled kernel in _matchcore.pyx; both must emit matchings in
exactly the same order: propagate forced edges (degree-1 vertices, ascending
vertex id), then branch on a minimum-degree vertex (ties by id) over its
incident edges in ascending edge id order.
"""

from __future__ import annotations


def list_matchings(nv, edge_u, edge_v):
    """All perfect matchings of the graph as sorted tuples of edge ids."""
    ne = len(edge_u)
    if nv == 0:
        return [()]
    inc = [[] for _ in range(nv)]
    for e in range(ne):
        inc[edge_u[e]].append(e)
        inc[edge_v[e]].append(e)
    v_alive = [True] * nv
    e_alive = [True] * ne
    deg = [len(inc[v]) for v in range(nv)]
    chosen = []
    out = []

    def kill_edge(e, trail):
        e_alive[e] = False
        trail.append(e)
        for w in (edge_u[e], edge_v[e]):
            deg[w] -= 1

    def revive(trail, vtrail):
        for e in reversed(trail):
            e_alive[e] = True
            deg[edge_u[e]] += 1
            deg[edge_v[e]] += 1
        for v in vtrail:
            v_alive[v] = True

    def take(e, trail, vtrail):
        for v in (edge_u[e], edge_v[e]):
            v_alive[v] = False
            vtrail.append(v)
        for v in (edge_u[e], edge_v[e]):
            for f in inc[v]:
                if e_alive[f]:
                    kill_edge(f, trail)

    def solve():
        trail = []
        vtrail = []
        nchosen = 0
        # forced propagation
        while True:
            forced = -1
            done = True
            best = -1
            best_deg = 0
            for v in range(nv):
                if not v_alive[v]:
                    continue
                done = False
                d = deg[v]
                if d == 0:
                    revive(trail, vtrail)
                    del chosen[len(chosen) - nchosen :]
                    return
                if d == 1:
                    forced = v
                    break
                if best < 0 or d < best_deg:
                    best, best_deg = v, d
            if done:
                out.append(tuple(sorted(chosen)))
                break
            if forced >= 0:
                e = next(f for f in inc[forced] if e_alive[f])
                take(e, trail, vtrail)
                chosen.append(e)
                nchosen += 1
                continue
            # branch
            for e in inc[best]:
                if not e_alive[e]:
                    continue
                t2, v2 = [], []
                take(e, t2, v2)
                chosen.append(e)
                solve()
                chosen.pop()
                revive(t2, v2)
            break
        revive(trail, vtrail)
        del chosen[len(chosen) - nchosen :]

    solve()
    return out
