# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled perfect matching enumerator.

Twin of _matchcore_py.list_matchings; the branching and emission order is
identical so the two kernels are interchangeable.
"""

from libc.stdlib cimport free, malloc


cdef struct State:
    int nv
    int ne
    int *eu
    int *ev
    int *inc_start
    int *inc
    unsigned char *v_alive
    unsigned char *e_alive
    int *deg
    int *chosen
    int nchosen


cdef int _take(State *s, int e, int *trail, int *ntrail, int *vtrail, int *nvtrail) noexcept:
    cdef int side, v, idx, f
    for side in range(2):
        v = s.eu[e] if side == 0 else s.ev[e]
        s.v_alive[v] = 0
        vtrail[nvtrail[0]] = v
        nvtrail[0] += 1
    for side in range(2):
        v = s.eu[e] if side == 0 else s.ev[e]
        for idx in range(s.inc_start[v], s.inc_start[v + 1]):
            f = s.inc[idx]
            if s.e_alive[f]:
                s.e_alive[f] = 0
                trail[ntrail[0]] = f
                ntrail[0] += 1
                s.deg[s.eu[f]] -= 1
                s.deg[s.ev[f]] -= 1
    return 0


cdef void _revive(State *s, int *trail, int ntrail, int *vtrail, int nvtrail) noexcept:
    cdef int i, e
    for i in range(ntrail - 1, -1, -1):
        e = trail[i]
        s.e_alive[e] = 1
        s.deg[s.eu[e]] += 1
        s.deg[s.ev[e]] += 1
    for i in range(nvtrail):
        s.v_alive[vtrail[i]] = 1


cdef void _solve(State *s, list out):
    cdef int *trail = <int *> malloc(s.ne * sizeof(int))
    cdef int *vtrail = <int *> malloc(s.nv * sizeof(int))
    cdef int ntrail = 0, nvtrail = 0, base_chosen = s.nchosen
    cdef int v, d, forced, best, best_deg, e, idx
    cdef bint done
    cdef int t2n, v2n
    cdef int *t2
    cdef int *v2
    while True:
        forced = -1
        best = -1
        best_deg = 0
        done = True
        for v in range(s.nv):
            if not s.v_alive[v]:
                continue
            done = False
            d = s.deg[v]
            if d == 0:
                _revive(s, trail, ntrail, vtrail, nvtrail)
                s.nchosen = base_chosen
                free(trail)
                free(vtrail)
                return
            if d == 1:
                forced = v
                break
            if best < 0 or d < best_deg:
                best = v
                best_deg = d
        if done:
            res = []
            for idx in range(s.nchosen):
                res.append(s.chosen[idx])
            res.sort()
            out.append(tuple(res))
            break
        if forced >= 0:
            e = -1
            for idx in range(s.inc_start[forced], s.inc_start[forced + 1]):
                if s.e_alive[s.inc[idx]]:
                    e = s.inc[idx]
                    break
            _take(s, e, trail, &ntrail, vtrail, &nvtrail)
            s.chosen[s.nchosen] = e
            s.nchosen += 1
            continue
        t2 = <int *> malloc(s.ne * sizeof(int))
        v2 = <int *> malloc(s.nv * sizeof(int))
        for idx in range(s.inc_start[best], s.inc_start[best + 1]):
            e = s.inc[idx]
            if not s.e_alive[e]:
                continue
            t2n = 0
            v2n = 0
            _take(s, e, t2, &t2n, v2, &v2n)
            s.chosen[s.nchosen] = e
            s.nchosen += 1
            _solve(s, out)
            s.nchosen -= 1
            _revive(s, t2, t2n, v2, v2n)
        free(t2)
        free(v2)
        break
    _revive(s, trail, ntrail, vtrail, nvtrail)
    s.nchosen = base_chosen
    free(trail)
    free(vtrail)


def list_matchings(int nv, edge_u, edge_v):
    """All perfect matchings of the graph as sorted tuples of edge ids."""
    cdef int ne = len(edge_u)
    if nv == 0:
        return [()]
    cdef State s
    s.nv = nv
    s.ne = ne
    s.eu = <int *> malloc(ne * sizeof(int))
    s.ev = <int *> malloc(ne * sizeof(int))
    s.inc_start = <int *> malloc((nv + 1) * sizeof(int))
    s.inc = <int *> malloc(2 * ne * sizeof(int))
    s.v_alive = <unsigned char *> malloc(nv)
    s.e_alive = <unsigned char *> malloc(ne if ne else 1)
    s.deg = <int *> malloc(nv * sizeof(int))
    s.chosen = <int *> malloc((nv // 2 + 1) * sizeof(int))
    s.nchosen = 0
    cdef int e, v, pos
    for v in range(nv):
        s.deg[v] = 0
        s.v_alive[v] = 1
    for e in range(ne):
        s.eu[e] = edge_u[e]
        s.ev[e] = edge_v[e]
        s.e_alive[e] = 1
        s.deg[s.eu[e]] += 1
        s.deg[s.ev[e]] += 1
    s.inc_start[0] = 0
    for v in range(nv):
        s.inc_start[v + 1] = s.inc_start[v] + s.deg[v]
    fill = [0] * nv
    for e in range(ne):
        for v in (s.eu[e], s.ev[e]):
            pos = s.inc_start[v] + fill[v]
            s.inc[pos] = e
            fill[v] += 1
    out = []
    _solve(&s, out)
    free(s.eu)
    free(s.ev)
    free(s.inc_start)
    free(s.inc)
    free(s.v_alive)
    free(s.e_alive)
    free(s.deg)
    free(s.chosen)
    return out
