"""Hot loops for cycle search, written once in numba's nopython subset.

With ``PLANTURAN_DISABLE_NUMBA=1`` in the environment the same functions run
as plain Python over numpy arrays; results are identical either way, only
speed differs. All graphs arrive as CSR ``(indptr, indices)`` int64 arrays
and vertex masks as uint8 arrays.
"""

import os

import numpy as np

NUMBA_DISABLED = os.environ.get("PLANTURAN_DISABLE_NUMBA", "").strip() not in ("", "0")

if NUMBA_DISABLED:
    def jit(fn):
        return fn
else:
    try:
        import numba

        def jit(fn):
            return numba.njit(cache=True, nogil=True)(fn)
    except ImportError:  # pragma: no cover
        NUMBA_DISABLED = True

        def jit(fn):
            return fn

# search modes
CYCLE = 0
CYCLE_PLUS = 1
THETA = 2
THETA_PLUS = 3
TWO_CYCLES = 4
UNION_PLUS = 5

# witness layout in ``out``: [c1 (k), tag a, tag b, c2 (k)]
# CYCLE_PLUS: a = cycle vertex, b = pendant; THETA: a, b = chord ends;
# THETA_PLUS: chord in a, b and (attach, pendant) stored in out[2k+2: 2k+4]
# TWO_CYCLES / UNION_PLUS: second cycle at out[k+2: 2k+2]; UNION_PLUS puts
# the pendant edge of whichever cycle carries it in a, b.
UNREACHED = 1 << 30


@jit
def bfs_dist(indptr, indices, alive, src, dist):
    n = alive.shape[0]
    for i in range(n):
        dist[i] = UNREACHED
    queue = np.empty(n, dtype=np.int64)
    dist[src] = 0
    queue[0] = src
    head = 0
    tail = 1
    while head < tail:
        x = queue[head]
        head += 1
        for p in range(indptr[x], indptr[x + 1]):
            y = indices[p]
            if alive[y] and dist[y] == UNREACHED:
                dist[y] = dist[x] + 1
                queue[tail] = y
                tail += 1


@jit
def next_cycle(indptr, indices, alive, anchor, k, dist, path, it, inpath, pos, state):
    """Advance a resumable DFS to the next ``k``-cycle through ``anchor``.

    ``state[0]`` is the current path length (0 = exhausted, set to 1 with
    ``path[0] = anchor`` to start). On ``True`` the cycle is ``path[:k]``
    with ``inpath``/``pos`` describing it; calling again resumes. Each cycle
    is reported once (orientation fixed by ``path[1] < path[k-1]``).
    """
    d = state[0]
    while d > 0:
        if d == k:
            d -= 1
            inpath[path[d]] = 0
            continue
        x = path[d - 1]
        if it[d - 1] < indptr[x + 1]:
            y = indices[it[d - 1]]
            it[d - 1] += 1
            if not alive[y] or inpath[y]:
                continue
            # after adding y the path has d edges; it still needs dist[y] more
            if d + dist[y] > k:
                continue
            if d + 1 == k:
                if dist[y] != 1 or path[1] > y:
                    continue
            path[d] = y
            inpath[y] = 1
            pos[y] = d
            it[d] = indptr[y]
            d += 1
            if d == k:
                state[0] = d
                return True
        else:
            d -= 1
            inpath[path[d]] = 0
    state[0] = 0
    return False


@jit
def _start(anchor, path, it, inpath, pos, state, indptr):
    path[0] = anchor
    inpath[anchor] = 1
    pos[anchor] = 0
    it[0] = indptr[anchor]
    state[0] = 1


@jit
def _clear(path, inpath, k):
    for i in range(k):
        inpath[path[i]] = 0


@jit
def pendant_of(indptr, indices, path, k, inpath, forbid, out):
    """Some cycle vertex with a neighbor off the cycle and not forbidden."""
    for i in range(k):
        x = path[i]
        for p in range(indptr[x], indptr[x + 1]):
            y = indices[p]
            if not inpath[y] and not forbid[y]:
                out[0] = x
                out[1] = y
                return True
    return False


@jit
def chord_of(indptr, indices, path, k, inpath, pos, out):
    for i in range(k):
        x = path[i]
        for p in range(indptr[x], indptr[x + 1]):
            y = indices[p]
            if inpath[y]:
                j = pos[y]
                if j > i + 1 and not (i == 0 and j == k - 1):
                    out[0] = x
                    out[1] = y
                    return True
    return False


@jit
def theta_plus_of(indptr, indices, path, k, inpath, pos, forbid, out):
    """Cycle plus chord plus a pendant at a vertex that is not a chord end."""
    n_att = 0
    att = np.full(k, -1, dtype=np.int64)
    for i in range(k):
        x = path[i]
        for p in range(indptr[x], indptr[x + 1]):
            y = indices[p]
            if not inpath[y] and not forbid[y]:
                att[i] = y
                n_att += 1
                break
    if n_att == 0:
        return False
    for i in range(k):
        x = path[i]
        for p in range(indptr[x], indptr[x + 1]):
            y = indices[p]
            if inpath[y]:
                j = pos[y]
                if j > i + 1 and not (i == 0 and j == k - 1):
                    m = n_att
                    if att[i] >= 0:
                        m -= 1
                    if att[j] >= 0:
                        m -= 1
                    if m > 0:
                        for z in range(k):
                            if z != i and z != j and att[z] >= 0:
                                out[0] = x
                                out[1] = y
                                out[2] = path[z]
                                out[3] = att[z]
                                return True
    return False


@jit
def any_cycle(indptr, indices, alive, k, forbid, need_pendant, out):
    """Find one ``k``-cycle inside ``alive`` (anchors tried in label order).

    With ``need_pendant`` the cycle must have a vertex with a neighbor off the
    cycle that is not marked in ``forbid``. Writes the cycle to ``out[:k]``
    and, for pendants, the edge to ``out[k:k+2]``. ``alive`` is not modified.
    """
    n = alive.shape[0]
    local = alive.copy()
    count = 0
    for v in range(n):
        if local[v]:
            count += 1
    dist = np.empty(n, dtype=np.int64)
    path = np.empty(k, dtype=np.int64)
    it = np.empty(k, dtype=np.int64)
    inpath = np.zeros(n, dtype=np.uint8)
    pos = np.zeros(n, dtype=np.int64)
    state = np.zeros(1, dtype=np.int64)
    tag = np.empty(2, dtype=np.int64)
    for v in range(n):
        if count < k:
            break
        if not local[v]:
            continue
        bfs_dist(indptr, indices, local, v, dist)
        _start(v, path, it, inpath, pos, state, indptr)
        while next_cycle(indptr, indices, local, v, k, dist, path, it, inpath, pos, state):
            ok = True
            if need_pendant:
                ok = pendant_of(indptr, indices, path, k, inpath, forbid, tag)
            if ok:
                for i in range(k):
                    out[i] = path[i]
                if need_pendant:
                    out[k] = tag[0]
                    out[k + 1] = tag[1]
                _clear(path, inpath, k)
                return True
        inpath[v] = 0
        local[v] = 0
        count -= 1
    return False


@jit
def cycles_through(indptr, indices, alive, anchor, k, mode, out):
    """Search ``k``-cycles through ``anchor`` inside ``alive`` for a pattern.

    ``mode`` selects what a cycle must additionally carry (see module
    constants). Chords and pendants are looked up in the whole graph, and the
    second cycle of the two-cycle modes may use any vertex of the graph
    outside the first one, so ``alive`` only restricts the enumerated cycle.
    Returns True and fills ``out`` on success.
    """
    n = alive.shape[0]
    dist = np.empty(n, dtype=np.int64)
    path = np.empty(k, dtype=np.int64)
    it = np.empty(k, dtype=np.int64)
    inpath = np.zeros(n, dtype=np.uint8)
    pos = np.zeros(n, dtype=np.int64)
    state = np.zeros(1, dtype=np.int64)
    none = np.zeros(n, dtype=np.uint8)
    tag = np.empty(4, dtype=np.int64)
    second = np.empty(k + 2, dtype=np.int64)
    rest = np.empty(n, dtype=np.uint8)
    tried = np.zeros(n, dtype=np.uint8)
    bfs_dist(indptr, indices, alive, anchor, dist)
    _start(anchor, path, it, inpath, pos, state, indptr)
    while next_cycle(indptr, indices, alive, anchor, k, dist, path, it, inpath, pos, state):
        found = False
        if mode == CYCLE:
            found = True
        elif mode == CYCLE_PLUS:
            found = pendant_of(indptr, indices, path, k, inpath, none, tag)
        elif mode == THETA:
            found = chord_of(indptr, indices, path, k, inpath, pos, tag)
        elif mode == THETA_PLUS:
            found = theta_plus_of(indptr, indices, path, k, inpath, pos, none, tag)
            if found:
                out[2 * k + 2] = tag[2]
                out[2 * k + 3] = tag[3]
        elif mode == TWO_CYCLES:
            for i in range(n):
                rest[i] = 1 - inpath[i]
            found = any_cycle(indptr, indices, rest, k, none, False, second)
            if found:
                for i in range(k):
                    out[k + 2 + i] = second[i]
        elif mode == UNION_PLUS:
            # this cycle carries the pendant ...
            for i in range(n):
                tried[i] = 0
            for i in range(k):
                if found:
                    break
                x = path[i]
                for p in range(indptr[x], indptr[x + 1]):
                    w = indices[p]
                    if inpath[w] or tried[w]:
                        continue
                    tried[w] = 1
                    for j in range(n):
                        rest[j] = 1 - inpath[j]
                    rest[w] = 0
                    if any_cycle(indptr, indices, rest, k, none, False, second):
                        tag[0] = x
                        tag[1] = w
                        for j in range(k):
                            out[k + 2 + j] = second[j]
                        found = True
                        break
            # ... or the other one does, with a pendant off both cycles
            if not found:
                for j in range(n):
                    rest[j] = 1 - inpath[j]
                if any_cycle(indptr, indices, rest, k, inpath, True, second):
                    tag[0] = second[k]
                    tag[1] = second[k + 1]
                    for j in range(k):
                        out[k + 2 + j] = second[j]
                    found = True
        if found:
            for i in range(k):
                out[i] = path[i]
            out[k] = tag[0]
            out[k + 1] = tag[1]
            _clear(path, inpath, k)
            return True
    return False


@jit
def longest_cycle_through(indptr, indices, alive, anchor, cap, out):
    """Length of a longest cycle through ``anchor`` inside ``alive`` (0 if none).

    Stops early once a cycle of length ``cap`` is found. The cycle is written
    to ``out``.
    """
    n = alive.shape[0]
    path = np.empty(n, dtype=np.int64)
    it = np.empty(n, dtype=np.int64)
    inpath = np.zeros(n, dtype=np.uint8)
    adj_anchor = np.zeros(n, dtype=np.uint8)
    for p in range(indptr[anchor], indptr[anchor + 1]):
        adj_anchor[indices[p]] = 1
    best = 0
    path[0] = anchor
    inpath[anchor] = 1
    it[0] = indptr[anchor]
    d = 1
    while d > 0:
        x = path[d - 1]
        if it[d - 1] < indptr[x + 1]:
            y = indices[it[d - 1]]
            it[d - 1] += 1
            if not alive[y] or inpath[y]:
                continue
            path[d] = y
            inpath[y] = 1
            it[d] = indptr[y]
            d += 1
            if d >= 3 and adj_anchor[y] and d > best and path[1] < y:
                best = d
                for i in range(d):
                    out[i] = path[i]
                if best >= cap:
                    break
        else:
            d -= 1
            inpath[path[d]] = 0
    return best
