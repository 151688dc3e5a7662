"""Littlewood-Richardson enumeration kernel.

The LR tableaux are built one row at a time, bottom row first, choosing for
each row how many 1s, 2s, ... it holds.  With ``used[j]`` the number of
``j+1`` entries placed in earlier rows, row ``r`` is legal when

* lattice:  used[j] + x[r, j] <= used[j-1]         (j >= 1)
* columns:  inner[r] + x[r, 0..j] <= inner[r-1] + x[r-1, 0..j-1]
* shape:    inner[r] + |row r| <= inner[r-1] + |row r-1|

Either the outer shape or the content may be left free; the kernel records
the free one at each leaf.  Set ``SCHURPOS_DISABLE_NUMBA=1`` to run the
same source as plain Python on lists instead of compiled code.
"""
from __future__ import annotations

import os

import numpy as np

_DISABLE = os.environ.get("SCHURPOS_DISABLE_NUMBA", "").lower() in ("1", "true", "yes")

try:
    if _DISABLE:
        raise ImportError
    from numba import njit
except ImportError:  # pragma: no cover - exercised via the env flag
    njit = None

USE_NUMBA = njit is not None


def _lr_enumerate(inner, outer, content, R, C, fixed_outer, fixed_content,
                  x, used, rowsum, lo_arr, out, cap):
    S = R * C
    total = 0
    placed = 0
    if fixed_content:
        for j in range(C):
            total += content[j]
    nleaves = 0
    width = R if not fixed_outer else (C if not fixed_content else 0)
    pos = 0
    fresh = True
    while pos >= 0:
        leaf = pos == S
        if not leaf and fresh and pos % C == 0 and fixed_content:
            r = pos // C
            # nothing left to place, or an empty row above an empty inner row
            if placed == total:
                leaf = True
            elif r >= 1 and inner[r] == 0 and inner[r - 1] == 0 and rowsum[r - 1] == 0:
                leaf = True
        if leaf:
            if not fixed_content or placed == total:
                if nleaves < cap and width > 0:
                    base = nleaves * width
                    if not fixed_outer:
                        for i in range(R):
                            out[base + i] = inner[i] + rowsum[i]
                    else:
                        for i in range(C):
                            out[base + i] = used[i]
                nleaves += 1
            pos -= 1
            fresh = False
            continue
        r = pos // C
        j = pos - r * C
        k = r * C + j
        if fresh:
            jmax = r if r < C - 1 else C - 1
            if j > jmax:
                lo_arr[k] = 0
                x[k] = 0
                pos += 1
                continue
            prefix = rowsum[r]
            hi = 1 << 40
            if fixed_content:
                hi = content[j] - used[j]
            if j >= 1:
                b = used[j - 1] - x[k - 1] - used[j]
                if b < hi:
                    hi = b
            if r >= 1:
                pprev = 0
                for jj in range(j):
                    pprev += x[k - C - j + jj]
                b = inner[r - 1] + pprev - inner[r] - prefix
                if b < hi:
                    hi = b
                b = inner[r - 1] + rowsum[r - 1] - inner[r] - prefix
                if b < hi:
                    hi = b
            lo = 0
            if fixed_outer:
                rem = outer[r] - inner[r] - prefix
                if rem < hi:
                    hi = rem
                if j == jmax:
                    lo = rem
            if hi < lo:
                pos -= 1
                fresh = False
                continue
            lo_arr[k] = lo
            x[k] = hi
            used[j] += hi
            rowsum[r] += hi
            placed += hi
            pos += 1
            continue
        # revisiting slot k on the way back
        if x[k] > lo_arr[k]:
            x[k] -= 1
            used[j] -= 1
            rowsum[r] -= 1
            placed -= 1
            pos += 1
            fresh = True
        else:
            v = x[k]
            used[j] -= v
            rowsum[r] -= v
            placed -= v
            x[k] = 0
            pos -= 1
    return nleaves


if USE_NUMBA:
    lr_enumerate = njit(cache=True, nogil=True)(_lr_enumerate)
else:
    lr_enumerate = _lr_enumerate


def run_lr(inner, outer, content, R, C, fixed_outer, fixed_content, want_records=True):
    """Drive the kernel; returns ``(count, records)`` with records shaped (count, width)."""
    width = R if not fixed_outer else (C if not fixed_content else 0)
    cap = 4096 if (want_records and width) else 0
    while True:
        if USE_NUMBA:
            args = (
                np.asarray(inner, dtype=np.int64),
                np.asarray(outer, dtype=np.int64),
                np.asarray(content, dtype=np.int64),
            )
            work = (
                np.zeros(R * C, np.int64), np.zeros(max(C, 1), np.int64),
                np.zeros(R, np.int64), np.zeros(R * C, np.int64),
            )
            out = np.zeros(max(cap * width, 1), np.int64)
        else:
            args = (list(inner), list(outer), list(content))
            work = ([0] * (R * C), [0] * max(C, 1), [0] * R, [0] * (R * C))
            out = [0] * max(cap * width, 1)
        n = lr_enumerate(*args, R, C, fixed_outer, fixed_content, *work, out, cap)
        if n <= cap or not (want_records and width):
            recs = np.asarray(out[: n * width], dtype=np.int64).reshape(n, width) if width and want_records else None
            return n, recs
        cap = n
