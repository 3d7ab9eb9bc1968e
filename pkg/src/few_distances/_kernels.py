"""Jitted scan kernels.

Import this module lazily (inside functions): importing it pulls in numba,
and the worker pool size is only adjustable before numba's first import
(see runtime.configure_workers).

All kernels take recentered int64 coordinate arrays and assume the caller
has checked that every squared distance fits comfortably in int64. Every
scan is defined so its result is independent of scheduling: table marking
is idempotent, census counts are sums, and witness searches reduce to the
lexicographic minimum.
"""

from __future__ import annotations

import numpy as np
from numba import njit, prange


@njit(cache=True)
def mark_pair_values(xs, ys, kk, table):
    """Mark table[d] = 1 for the squared distance d of every point pair."""
    n = xs.shape[0]
    for i in range(n):
        xi = xs[i]
        yi = ys[i]
        for j in range(i):
            du = xi - xs[j]
            dv = yi - ys[j]
            table[du * du + kk * dv * dv] = 1


@njit(cache=True)
def _cycle_is_square(xs, ys, kk, a, b, c, d):
    # Cycle a, b, c, d with diagonals (a, c) and (b, d): four equal sides,
    # equal diagonals of twice the side value, and one right angle.
    abx = xs[b] - xs[a]
    aby = ys[b] - ys[a]
    s_ab = abx * abx + kk * aby * aby
    bcx = xs[c] - xs[b]
    bcy = ys[c] - ys[b]
    if s_ab != bcx * bcx + kk * bcy * bcy:
        return False
    cdx = xs[d] - xs[c]
    cdy = ys[d] - ys[c]
    if s_ab != cdx * cdx + kk * cdy * cdy:
        return False
    dax = xs[a] - xs[d]
    day = ys[a] - ys[d]
    if s_ab != dax * dax + kk * day * day:
        return False
    acx = xs[c] - xs[a]
    acy = ys[c] - ys[a]
    bdx = xs[d] - xs[b]
    bdy = ys[d] - ys[b]
    s_ac = acx * acx + kk * acy * acy
    if s_ac != bdx * bdx + kk * bdy * bdy or s_ac != 2 * s_ab:
        return False
    return abx * bcx + kk * aby * bcy == 0


@njit(cache=True)
def _is_square_idx(xs, ys, kk, p, q, r, s):
    # One diagonal pairing per candidate cycle; exactly one matches a square.
    if _cycle_is_square(xs, ys, kk, p, r, q, s):
        return True
    if _cycle_is_square(xs, ys, kk, p, q, r, s):
        return True
    return _cycle_is_square(xs, ys, kk, p, q, s, r)


@njit(cache=True)
def scan_quads_lex(xs, ys, kk, early_exit):
    """First 4-subset (by index order) with at most 2 distinct squared
    distances; (-1, -1, -1, -1) when none exists.

    With early_exit False the full range is still scanned but only the
    first witness is recorded, so the returned value never depends on the
    flag. Triples that already show 3 distinct values skip their whole
    fourth-point loop: no completion of them can drop below 3.
    """
    n = xs.shape[0]
    wi = np.int64(-1)
    wj = np.int64(-1)
    wk = np.int64(-1)
    wl = np.int64(-1)
    found = False
    for i in range(n - 3):
        if found and early_exit:
            break
        for j in range(i + 1, n - 2):
            if found and early_exit:
                break
            dxj = xs[j] - xs[i]
            dyj = ys[j] - ys[i]
            dij = dxj * dxj + kk * dyj * dyj
            for k in range(j + 1, n - 1):
                if found and early_exit:
                    break
                dxk = xs[k] - xs[i]
                dyk = ys[k] - ys[i]
                dik = dxk * dxk + kk * dyk * dyk
                dxm = xs[k] - xs[j]
                dym = ys[k] - ys[j]
                djk = dxm * dxm + kk * dym * dym
                v0 = dij
                v1 = np.int64(-1)
                if dik != v0:
                    v1 = dik
                if djk != v0 and djk != v1:
                    if v1 != np.int64(-1):
                        continue
                    v1 = djk
                for l in range(k + 1, n):
                    u0 = v0
                    u1 = v1
                    good = True
                    dx = xs[l] - xs[i]
                    dy = ys[l] - ys[i]
                    d = dx * dx + kk * dy * dy
                    if d != u0 and d != u1:
                        if u1 == np.int64(-1):
                            u1 = d
                        else:
                            good = False
                    if good:
                        dx = xs[l] - xs[j]
                        dy = ys[l] - ys[j]
                        d = dx * dx + kk * dy * dy
                        if d != u0 and d != u1:
                            if u1 == np.int64(-1):
                                u1 = d
                            else:
                                good = False
                    if good:
                        dx = xs[l] - xs[k]
                        dy = ys[l] - ys[k]
                        d = dx * dx + kk * dy * dy
                        if d != u0 and d != u1:
                            if u1 == np.int64(-1):
                                u1 = d
                            else:
                                good = False
                    if good:
                        if not found:
                            wi = i
                            wj = j
                            wk = k
                            wl = l
                            found = True
                        if early_exit:
                            break
    return wi, wj, wk, wl


@njit(cache=True, parallel=True)
def scan_quads_parallel(xs, ys, kk, early_exit, out):
    """Per-first-index witness scan: out[i] = encoded (j, k, l) of the
    lexicographically first violating completion of i, or -1.

    The progress cell lets workers skip first indices that already lie
    beyond a found witness; races on it are benign (they only cause extra
    scanning) because the reduction below is the min over out.
    """
    n = xs.shape[0]
    progress = np.full(1, n, dtype=np.int64)
    for i in prange(n - 3):
        if early_exit and progress[0] < i:
            out[i] = -1
            continue
        best = np.int64(-1)
        done = False
        for j in range(i + 1, n - 2):
            if done:
                break
            dxj = xs[j] - xs[i]
            dyj = ys[j] - ys[i]
            dij = dxj * dxj + kk * dyj * dyj
            for k in range(j + 1, n - 1):
                if done:
                    break
                dxk = xs[k] - xs[i]
                dyk = ys[k] - ys[i]
                dik = dxk * dxk + kk * dyk * dyk
                dxm = xs[k] - xs[j]
                dym = ys[k] - ys[j]
                djk = dxm * dxm + kk * dym * dym
                v0 = dij
                v1 = np.int64(-1)
                if dik != v0:
                    v1 = dik
                if djk != v0 and djk != v1:
                    if v1 != np.int64(-1):
                        continue
                    v1 = djk
                for l in range(k + 1, n):
                    u0 = v0
                    u1 = v1
                    good = True
                    dx = xs[l] - xs[i]
                    dy = ys[l] - ys[i]
                    d = dx * dx + kk * dy * dy
                    if d != u0 and d != u1:
                        if u1 == np.int64(-1):
                            u1 = d
                        else:
                            good = False
                    if good:
                        dx = xs[l] - xs[j]
                        dy = ys[l] - ys[j]
                        d = dx * dx + kk * dy * dy
                        if d != u0 and d != u1:
                            if u1 == np.int64(-1):
                                u1 = d
                            else:
                                good = False
                    if good:
                        dx = xs[l] - xs[k]
                        dy = ys[l] - ys[k]
                        d = dx * dx + kk * dy * dy
                        if d != u0 and d != u1:
                            if u1 == np.int64(-1):
                                u1 = d
                            else:
                                good = False
                    if good:
                        best = (j * n + k) * n + l
                        done = True
                        break
        out[i] = best
        if best >= 0 and i < progress[0]:
            progress[0] = i


@njit(cache=True)
def census_quads_segment(xs, ys, kk, i_start, i_end):
    """Counts over 4-subsets with first index in [i_start, i_end):
    (two_distance_quads, squares). Squares are only sought among
    two-distance quads since every square has exactly two values."""
    n = xs.shape[0]
    two = np.int64(0)
    squares = np.int64(0)
    for i in range(i_start, i_end):
        for j in range(i + 1, n - 2):
            dxj = xs[j] - xs[i]
            dyj = ys[j] - ys[i]
            dij = dxj * dxj + kk * dyj * dyj
            for k in range(j + 1, n - 1):
                dxk = xs[k] - xs[i]
                dyk = ys[k] - ys[i]
                dik = dxk * dxk + kk * dyk * dyk
                dxm = xs[k] - xs[j]
                dym = ys[k] - ys[j]
                djk = dxm * dxm + kk * dym * dym
                v0 = dij
                v1 = np.int64(-1)
                if dik != v0:
                    v1 = dik
                if djk != v0 and djk != v1:
                    if v1 != np.int64(-1):
                        continue
                    v1 = djk
                for l in range(k + 1, n):
                    u0 = v0
                    u1 = v1
                    good = True
                    dx = xs[l] - xs[i]
                    dy = ys[l] - ys[i]
                    d = dx * dx + kk * dy * dy
                    if d != u0 and d != u1:
                        if u1 == np.int64(-1):
                            u1 = d
                        else:
                            good = False
                    if good:
                        dx = xs[l] - xs[j]
                        dy = ys[l] - ys[j]
                        d = dx * dx + kk * dy * dy
                        if d != u0 and d != u1:
                            if u1 == np.int64(-1):
                                u1 = d
                            else:
                                good = False
                    if good:
                        dx = xs[l] - xs[k]
                        dy = ys[l] - ys[k]
                        d = dx * dx + kk * dy * dy
                        if d != u0 and d != u1:
                            if u1 == np.int64(-1):
                                u1 = d
                            else:
                                good = False
                    if good:
                        two += 1
                        if _is_square_idx(xs, ys, kk, i, j, k, l):
                            squares += 1
    return two, squares


@njit(cache=True, parallel=True)
def census_quads_parallel(xs, ys, kk, i_start, i_end, two_out, sq_out):
    """Parallel variant of census_quads_segment: per-first-index counts
    written to two_out[i] and sq_out[i]; the caller sums them."""
    n = xs.shape[0]
    for i in prange(i_start, i_end):
        two = np.int64(0)
        squares = np.int64(0)
        for j in range(i + 1, n - 2):
            dxj = xs[j] - xs[i]
            dyj = ys[j] - ys[i]
            dij = dxj * dxj + kk * dyj * dyj
            for k in range(j + 1, n - 1):
                dxk = xs[k] - xs[i]
                dyk = ys[k] - ys[i]
                dik = dxk * dxk + kk * dyk * dyk
                dxm = xs[k] - xs[j]
                dym = ys[k] - ys[j]
                djk = dxm * dxm + kk * dym * dym
                v0 = dij
                v1 = np.int64(-1)
                if dik != v0:
                    v1 = dik
                if djk != v0 and djk != v1:
                    if v1 != np.int64(-1):
                        continue
                    v1 = djk
                for l in range(k + 1, n):
                    u0 = v0
                    u1 = v1
                    good = True
                    dx = xs[l] - xs[i]
                    dy = ys[l] - ys[i]
                    d = dx * dx + kk * dy * dy
                    if d != u0 and d != u1:
                        if u1 == np.int64(-1):
                            u1 = d
                        else:
                            good = False
                    if good:
                        dx = xs[l] - xs[j]
                        dy = ys[l] - ys[j]
                        d = dx * dx + kk * dy * dy
                        if d != u0 and d != u1:
                            if u1 == np.int64(-1):
                                u1 = d
                            else:
                                good = False
                    if good:
                        dx = xs[l] - xs[k]
                        dy = ys[l] - ys[k]
                        d = dx * dx + kk * dy * dy
                        if d != u0 and d != u1:
                            if u1 == np.int64(-1):
                                u1 = d
                            else:
                                good = False
                    if good:
                        two += 1
                        if _is_square_idx(xs, ys, kk, i, j, k, l):
                            squares += 1
        two_out[i] = two
        sq_out[i] = squares


@njit(cache=True)
def census_triples_segment(xs, ys, kk, i_start, i_end):
    """Equilateral (three equal squared distances, non-collinear) triple
    count over first indices in [i_start, i_end)."""
    n = xs.shape[0]
    cnt = np.int64(0)
    for i in range(i_start, i_end):
        for j in range(i + 1, n - 1):
            dxj = xs[j] - xs[i]
            dyj = ys[j] - ys[i]
            dij = dxj * dxj + kk * dyj * dyj
            for l in range(j + 1, n):
                dxl = xs[l] - xs[i]
                dyl = ys[l] - ys[i]
                if dxl * dxl + kk * dyl * dyl != dij:
                    continue
                dx = xs[l] - xs[j]
                dy = ys[l] - ys[j]
                if dx * dx + kk * dy * dy != dij:
                    continue
                if dxj * dyl - dyj * dxl != 0:
                    cnt += 1
    return cnt


def warm_all() -> None:
    """Compile every kernel on tiny inputs so timed runs start warm."""
    xs = np.array([0, 1, 0, 1, 2], dtype=np.int64)
    ys = np.array([0, 0, 1, 1, 2], dtype=np.int64)
    table = np.zeros(16, dtype=np.uint8)
    mark_pair_values(xs, ys, 2, table)
    scan_quads_lex(xs, ys, 2, True)
    scan_quads_lex(xs, ys, 2, False)
    out = np.full(5, -1, dtype=np.int64)
    scan_quads_parallel(xs, ys, 2, True, out)
    scan_quads_parallel(xs, ys, 2, False, out)
    census_quads_segment(xs, ys, 2, 0, 2)
    two_out = np.zeros(5, dtype=np.int64)
    sq_out = np.zeros(5, dtype=np.int64)
    census_quads_parallel(xs, ys, 2, 0, 2, two_out, sq_out)
    census_triples_segment(xs, ys, 2, 0, 3)
