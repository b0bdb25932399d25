"""Hot counting loops, each in a numba form and a vectorised numpy form.

Two kernels live here:

* signed linear-extension counting by dynamic programming over down-sets,
* brute-force counting of isotone maps that avoid a set of forbidden
  equalities.

Posets reach the kernels as arrays of bitmasks indexed by reference position:
``below[e]`` has bit ``j`` set when element ``j`` lies strictly below ``e``.
``ideal_sign_counts`` and ``count_isotone_maps`` dispatch on the backend flag
in :mod:`posetlin._accel`; the ``*_numba`` / ``*_numpy`` names are exported so
tests and the benchmark can drive both paths directly.
"""

import numpy as np

from ._accel import USE_NUMBA, njit

# n! < 2**63 for n <= 20, so int64 accumulators cannot wrap below this size.
DENSE_MAX = 20


# ---------------------------------------------------------------------------
# signed linear extensions
# ---------------------------------------------------------------------------

@njit
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit
def _ideal_sign_loop(below, n):
    size = 1 << n
    full = size - 1
    even = np.zeros(size, dtype=np.int64)
    odd = np.zeros(size, dtype=np.int64)
    even[0] = 1
    for mask in range(size):
        ev = even[mask]
        od = odd[mask]
        if ev == 0 and od == 0:
            continue
        for e in range(n):
            bit = 1 << e
            if mask & bit:
                continue
            if below[e] & ~mask:
                continue
            t = mask | bit
            # elements already placed that come later in the reference order
            if _popcount(mask & (full ^ ((bit << 1) - 1))) & 1:
                even[t] += od
                odd[t] += ev
            else:
                even[t] += ev
                odd[t] += od
    return even[full], odd[full]


def ideal_sign_counts_numba(below, n):
    if n == 0:
        return 1, 0
    ev, od = _ideal_sign_loop(np.asarray(below, dtype=np.int64), n)
    return int(ev), int(od)


def _popcounts(size, n):
    masks = np.arange(size, dtype=np.int64)
    pc = np.zeros(size, dtype=np.int64)
    for b in range(n):
        pc += (masks >> b) & 1
    return masks, pc


def ideal_sign_counts_numpy(below, n):
    if n == 0:
        return 1, 0
    size = 1 << n
    full = size - 1
    below = [int(b) for b in below]
    masks, pc = _popcounts(size, n)
    layers = [masks[pc == k] for k in range(n)]
    even = np.zeros(size, dtype=np.int64)
    odd = np.zeros(size, dtype=np.int64)
    even[0] = 1
    for k in range(n):
        layer = layers[k]
        live = layer[(even[layer] | odd[layer]) != 0]
        for e in range(n):
            bit = 1 << e
            ok = live[((live & bit) == 0) & ((live & below[e]) == below[e])]
            if ok.size == 0:
                continue
            t = ok | bit
            flip = (pc[ok & (full ^ ((bit << 1) - 1))] & 1).astype(bool)
            ev = even[ok]
            od = odd[ok]
            # targets are distinct for a fixed e, so plain fancy-index adds are safe
            even[t] += np.where(flip, od, ev)
            odd[t] += np.where(flip, ev, od)
    return int(even[full]), int(odd[full])


def ideal_sign_counts_sparse(below, n):
    """Arbitrary-precision variant; walks only the down-sets that occur."""
    full = (1 << n) - 1
    layer = {0: (1, 0)}
    for _ in range(n):
        nxt = {}
        for mask, (ev, od) in layer.items():
            for e in range(n):
                bit = 1 << e
                if mask & bit or below[e] & ~mask:
                    continue
                t = mask | bit
                a, b = nxt.get(t, (0, 0))
                if (mask >> (e + 1)).bit_count() & 1:
                    nxt[t] = (a + od, b + ev)
                else:
                    nxt[t] = (a + ev, b + od)
        layer = nxt
    return layer[full]


def ideal_sign_counts(below, n):
    """Return ``(even, odd)`` linear-extension counts relative to index order."""
    if n > DENSE_MAX:
        return ideal_sign_counts_sparse(below, n)
    if USE_NUMBA:
        return ideal_sign_counts_numba(below, n)
    return ideal_sign_counts_numpy(below, n)


# ---------------------------------------------------------------------------
# isotone maps with forbidden equalities
# ---------------------------------------------------------------------------
# Elements are given in a topological order; ``pred[k]`` and ``forb[k]`` only
# mention positions < k.

@njit
def _count_maps_loop(n, pred, forb):
    m = pred.shape[0]
    if m == 0:
        return 1
    if n == 0:
        return 0
    phi = np.zeros(m, dtype=np.int64)
    count = 0
    k = 0
    phi[0] = 0
    while k >= 0:
        phi[k] += 1
        if phi[k] > n:
            k -= 1
            continue
        clash = False
        f = forb[k]
        for j in range(k):
            if (f >> j) & 1 and phi[j] == phi[k]:
                clash = True
                break
        if clash:
            continue
        if k == m - 1:
            count += 1
            continue
        k += 1
        lb = 1
        p = pred[k]
        for j in range(k):
            if (p >> j) & 1 and phi[j] > lb:
                lb = phi[j]
        phi[k] = lb - 1
    return count


def count_isotone_maps_numba(n, pred, forb):
    return int(_count_maps_loop(n, np.asarray(pred, dtype=np.int64), np.asarray(forb, dtype=np.int64)))


def count_isotone_maps_numpy(n, pred, forb):
    m = len(pred)
    if m == 0:
        return 1
    if n == 0:
        return 0
    values = np.arange(1, n + 1, dtype=np.int64)
    frontier = np.zeros((1, 0), dtype=np.int64)
    for k in range(m):
        rows = frontier.shape[0]
        rep = np.repeat(frontier, n, axis=0)
        vals = np.tile(values, rows)
        keep = np.ones(rows * n, dtype=bool)
        for j in range(k):
            if (pred[k] >> j) & 1:
                keep &= vals >= rep[:, j]
            if (forb[k] >> j) & 1:
                keep &= vals != rep[:, j]
        if k == m - 1:
            return int(keep.sum())
        frontier = np.column_stack([rep[keep], vals[keep]])
        if frontier.shape[0] == 0:
            return 0
    raise AssertionError("unreachable")


def count_isotone_maps(n, pred, forb):
    if USE_NUMBA:
        return count_isotone_maps_numba(n, pred, forb)
    return count_isotone_maps_numpy(n, pred, forb)
