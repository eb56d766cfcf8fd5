"""Compiled sweep over the cyclic shifts z^j U of a subspace.

For each j in [1, orbit_size) the kernels compute dim(U ∩ z^j U) =
k - (rank [U; z^j U] - k).  U is inserted once into a table indexed by the
highest nonzero coordinate; each shifted basis row is reduced against that
table and, if something survives, claims a free slot.  Rows of z^j U are
advanced to z^(j+1) U by multiplying every basis row by z in place, using
z^n = Σ r_i z^i on GF(q)-coordinates.

Three encodings share that scheme:

* q = 2: a row is one uint64, bit i = coordinate i.
* q = 3: a row is two uint64 bit planes (coordinate == 1, coordinate == 2).
* any other q: a row is a uint8 vector and GF(q) goes through lookup tables.

The exponent range is split into contiguous chunks; each chunk starts from
z^start U and keeps its own histogram, so the merged result does not depend
on the number of chunks or threads.
"""

from __future__ import annotations

import warnings
from typing import Callable

import numba
import numpy as np
from numba import njit, prange

numba.config.THREADING_LAYER_PRIORITY = ["omp", "workqueue", "tbb"]
warnings.filterwarnings("ignore", message=".*TBB.*", category=numba.NumbaWarning)

MIN_CHUNK = 4096
MAX_CHUNKS = 512
MAX_PACKED_N = 63


# -- q = 2 ---------------------------------------------------------------------


@njit(cache=True)
def _gf2_insert(tab, fill, v, n):
    # returns the slot claimed, or -1 if v reduced to zero
    for p in range(n - 1, -1, -1):
        if (v >> p) & 1:
            if fill[p]:
                v ^= tab[p]
            else:
                tab[p] = v
                fill[p] = True
                return p
    return -1


@njit(cache=True)
def _gf2_chunk(utab, ufill, start, count, n, red, hist, dims, want_dims):
    k = start.shape[0]
    mask = np.uint64((1 << n) - 1)
    top_shift = np.uint64(n - 1)
    one = np.uint64(1)
    tab = utab.copy()
    fill = ufill.copy()
    cur = start.copy()
    claimed = np.empty(k, np.int64)
    for step in range(count):
        r = 0
        for i in range(k):
            s = _gf2_insert(tab, fill, cur[i], n)
            if s >= 0:
                claimed[r] = s
                r += 1
        for i in range(r):
            fill[claimed[i]] = False
        hist[k - r] += 1
        if want_dims:
            dims[step] = k - r
        for i in range(k):
            v = cur[i]
            top = (v >> top_shift) & one
            v = (v << one) & mask
            if top:
                v ^= red
            cur[i] = v


@njit(parallel=True, cache=True)
def _gf2_sweep(utab, ufill, starts, counts, offsets, n, red, hist, dims, want_dims):
    for c in prange(starts.shape[0]):
        d = dims[offsets[c] : offsets[c] + counts[c]] if want_dims else dims
        _gf2_chunk(utab, ufill, starts[c], counts[c], n, red, hist[c], d, want_dims)


# -- q = 3, bit-sliced ------------------------------------------------------------


@njit(cache=True, inline="always")
def _gf3_add(xa, xb, ya, yb):
    ny = ~(ya | yb)
    nx = ~(xa | xb)
    return (xa & ny) | (ya & nx) | (xb & yb), (xb & ny) | (yb & nx) | (xa & ya)


@njit(cache=True)
def _gf3_insert(ta, tb, fill, a, b, n):
    for p in range(n - 1, -1, -1):
        if ((a | b) >> p) & 1:
            if fill[p]:
                if (a >> p) & 1:
                    a, b = _gf3_add(a, b, tb[p], ta[p])
                else:
                    a, b = _gf3_add(a, b, ta[p], tb[p])
            else:
                if (a >> p) & 1:
                    ta[p], tb[p] = a, b
                else:
                    ta[p], tb[p] = b, a
                fill[p] = True
                return p
    return -1


@njit(cache=True)
def _gf3_chunk(uta, utb, ufill, start_a, start_b, count, n, ra, rb, hist, dims, want_dims):
    k = start_a.shape[0]
    mask = np.uint64((1 << n) - 1)
    top_shift = np.uint64(n - 1)
    one = np.uint64(1)
    ta = uta.copy()
    tb = utb.copy()
    fill = ufill.copy()
    ca = start_a.copy()
    cb = start_b.copy()
    claimed = np.empty(k, np.int64)
    for step in range(count):
        r = 0
        for i in range(k):
            s = _gf3_insert(ta, tb, fill, ca[i], cb[i], n)
            if s >= 0:
                claimed[r] = s
                r += 1
        for i in range(r):
            fill[claimed[i]] = False
        hist[k - r] += 1
        if want_dims:
            dims[step] = k - r
        for i in range(k):
            a = ca[i]
            b = cb[i]
            top_a = (a >> top_shift) & one
            top_b = (b >> top_shift) & one
            a = (a << one) & mask
            b = (b << one) & mask
            if top_a:
                a, b = _gf3_add(a, b, ra, rb)
            elif top_b:
                a, b = _gf3_add(a, b, rb, ra)
            ca[i] = a
            cb[i] = b


@njit(parallel=True, cache=True)
def _gf3_sweep(uta, utb, ufill, starts_a, starts_b, counts, offsets, n, ra, rb, hist, dims, want_dims):
    for c in prange(starts_a.shape[0]):
        d = dims[offsets[c] : offsets[c] + counts[c]] if want_dims else dims
        _gf3_chunk(uta, utb, ufill, starts_a[c], starts_b[c], counts[c], n, ra, rb, hist[c], d, want_dims)


# -- general q, table arithmetic ---------------------------------------------------


@njit(cache=True)
def _tab_insert(tab, fill, v, n, sub, mul, inv):
    for p in range(n - 1, -1, -1):
        c = v[p]
        if c:
            if fill[p]:
                row = mul[c]
                for i in range(p + 1):
                    v[i] = sub[v[i], row[tab[p, i]]]
            else:
                row = mul[inv[c]]
                for i in range(p + 1):
                    tab[p, i] = row[v[i]]
                for i in range(p + 1, n):
                    tab[p, i] = 0
                fill[p] = True
                return p
    return -1


@njit(cache=True)
def _tab_chunk(utab, ufill, start, count, n, red, add, sub, mul, inv, hist, dims, want_dims):
    k = start.shape[0]
    tab = utab.copy()
    fill = ufill.copy()
    cur = start.copy()
    scratch = np.empty(n, np.uint8)
    claimed = np.empty(k, np.int64)
    for step in range(count):
        r = 0
        for i in range(k):
            for j in range(n):
                scratch[j] = cur[i, j]
            s = _tab_insert(tab, fill, scratch, n, sub, mul, inv)
            if s >= 0:
                claimed[r] = s
                r += 1
        for i in range(r):
            fill[claimed[i]] = False
        hist[k - r] += 1
        if want_dims:
            dims[step] = k - r
        for i in range(k):
            top = cur[i, n - 1]
            for j in range(n - 1, 0, -1):
                cur[i, j] = cur[i, j - 1]
            cur[i, 0] = 0
            if top:
                row = mul[top]
                for j in range(n):
                    cur[i, j] = add[cur[i, j], row[red[j]]]


@njit(parallel=True, cache=True)
def _tab_sweep(utab, ufill, starts, counts, offsets, n, red, add, sub, mul, inv, hist, dims, want_dims):
    for c in prange(starts.shape[0]):
        d = dims[offsets[c] : offsets[c] + counts[c]] if want_dims else dims
        _tab_chunk(utab, ufill, starts[c], counts[c], n, red, add, sub, mul, inv, hist[c], d, want_dims)


# -- orchestration ----------------------------------------------------------------


def _pack2(rows) -> np.ndarray:
    return np.array([sum(int(x) << i for i, x in enumerate(r)) for r in rows], dtype=np.uint64)


def _pack3(rows) -> tuple[np.ndarray, np.ndarray]:
    a = np.array([sum(int(x == 1) << i for i, x in enumerate(r)) for r in rows], dtype=np.uint64)
    b = np.array([sum(int(x == 2) << i for i, x in enumerate(r)) for r in rows], dtype=np.uint64)
    return a, b


def choose_kernel(q: int, n: int) -> str:
    if n <= MAX_PACKED_N and q == 2:
        return "gf2"
    if n <= MAX_PACKED_N and q == 3:
        return "gf3"
    return "table"


def chunk_bounds(total: int, min_chunk: int = MIN_CHUNK, max_chunks: int = MAX_CHUNKS) -> list[tuple[int, int]]:
    """Split shifts 1..total into contiguous (start, count) chunks."""
    if total <= 0:
        return []
    nchunks = max(1, min(max_chunks, total // min_chunk))
    base, extra = divmod(total, nchunks)
    out, start = [], 1
    for c in range(nchunks):
        cnt = base + (c < extra)
        out.append((start, cnt))
        start += cnt
    return out


def set_threads(threads: int | None) -> int:
    """Clamp and apply the worker count; returns the count in effect."""
    limit = numba.config.NUMBA_NUM_THREADS
    t = limit if threads is None else max(1, min(int(threads), limit))
    numba.set_num_threads(t)
    return t


def sweep_intersections(
    u,
    orbit_size: int,
    *,
    threads: int | None = None,
    collect_dims: bool = False,
    kernel: str | None = None,
    progress: Callable[[int, int], None] | None = None,
    min_chunk: int = MIN_CHUNK,
):
    """Histogram of dim(U ∩ z^j U) over 1 <= j < orbit_size.

    Returns ``(hist, dims)`` where ``hist`` has length k+1 and ``dims`` is
    an int8 array over j in [0, orbit_size) (``dims[0] = k``) or None.
    """
    tower = u.tower
    q, n, k = tower.q, tower.n, u.k
    kernel = kernel or choose_kernel(q, n)
    total = orbit_size - 1
    workers = set_threads(threads)
    chunks = chunk_bounds(total, min_chunk=min_chunk)
    basis = u.basis_elements()
    red_coords = tower.z_power_n_coords

    dims = np.zeros(orbit_size if collect_dims else 1, dtype=np.int8)
    if collect_dims:
        dims[0] = k
    hist = np.zeros(k + 1, dtype=np.int64)
    if not chunks:
        return hist, (dims if collect_dims else None)

    if kernel == "gf2":
        utab = np.zeros(n, np.uint64)
        ufill = np.zeros(n, np.bool_)
        for r in _pack2(u.rows):
            _gf2_insert(utab, ufill, r, n)
        red = _pack2([red_coords])[0]
    elif kernel == "gf3":
        uta = np.zeros(n, np.uint64)
        utb = np.zeros(n, np.uint64)
        ufill = np.zeros(n, np.bool_)
        ua, ub = _pack3(u.rows)
        for a, b in zip(ua, ub):
            _gf3_insert(uta, utb, ufill, a, b, n)
        ra, rb = (x[0] for x in _pack3([red_coords]))
    elif kernel == "table":
        add, sub, mul, inv = tower.fq.tables
        utab = np.zeros((n, n), np.uint8)
        ufill = np.zeros(n, np.bool_)
        for r in u.rows:
            _tab_insert(utab, ufill, np.array(r, dtype=np.uint8), n, sub, mul, inv)
        red = np.array(red_coords, dtype=np.uint8)
    else:
        raise ValueError(f"unknown kernel {kernel!r}")

    wave = max(1, workers) * 4
    done = 0
    zcur = None
    for w0 in range(0, len(chunks), wave):
        batch = chunks[w0 : w0 + wave]
        start_rows = []
        for start, _ in batch:
            if zcur is None:
                zcur = tower.power_of_z(start)
            else:
                zcur = tower.mul(zcur, tower.power_of_z(start - prev_start))
            prev_start = start
            start_rows.append([tower.to_fq_coords(tower.mul(zcur, b)) for b in basis])
        counts = np.array([c for _, c in batch], dtype=np.int64)
        offsets = np.array([s for s, _ in batch], dtype=np.int64)
        bhist = np.zeros((len(batch), k + 1), dtype=np.int64)
        if kernel == "gf2":
            starts = np.array([_pack2(rs) for rs in start_rows], dtype=np.uint64)
            _gf2_sweep(utab, ufill, starts, counts, offsets, n, red, bhist, dims, collect_dims)
        elif kernel == "gf3":
            packed = [_pack3(rs) for rs in start_rows]
            sa = np.array([p[0] for p in packed], dtype=np.uint64)
            sb = np.array([p[1] for p in packed], dtype=np.uint64)
            _gf3_sweep(uta, utb, ufill, sa, sb, counts, offsets, n, ra, rb, bhist, dims, collect_dims)
        else:
            starts = np.array(start_rows, dtype=np.uint8).reshape(len(batch), k, n)
            _tab_sweep(utab, ufill, starts, counts, offsets, n, red, add, sub, mul, inv, bhist, dims, collect_dims)
        hist += bhist.sum(axis=0)
        done += int(counts.sum())
        if progress is not None:
            progress(done, total)
    return hist, (dims if collect_dims else None)
