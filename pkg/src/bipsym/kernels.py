"""Batch cycle-structure kernels for census-scale enumeration.

The census classifies up to n!*m! permutations; extracting each one's cycle
structure is the hot loop.  Two interchangeable implementations are provided:

* ``numba``: per-row @njit loop (default when numba imports cleanly),
* ``numpy``: vectorized iterated-permutation fallback.

Select with the ``BIPSYM_BACKEND`` environment variable (``numba`` or
``numpy``) or per call.  Both produce identical int64 stat rows; the
single-automorphism path in :mod:`bipsym.core` is independent of either and
serves as the reference in the test suite.

Stat row layout for a permutation of N = n + m vertices::

    col 0          side action (0 part-preserving, 1 part-swapping)
    col 1          r, the lcm of all cycle lengths
    col 2, 3       number of fixed vertices in V, in W
    col 4 + k*N + (L-1)
                   number of cycles of length L and kind k
                   (k = 0 pure-V, 1 pure-W, 2 mixed)
"""

from __future__ import annotations

import os

import numpy as np

from .core import BipartiteShape, CycleSignature, SideAction

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAS_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        if args and callable(args[0]):
            return args[0]
        return wrap


ENV_VAR = "BIPSYM_BACKEND"


def available_backends() -> tuple[str, ...]:
    return ("numba", "numpy") if HAS_NUMBA else ("numpy",)


def default_backend() -> str:
    choice = os.environ.get(ENV_VAR, "").strip().lower()
    if choice in ("numba", "numpy"):
        if choice == "numba" and not HAS_NUMBA:
            raise RuntimeError("BIPSYM_BACKEND=numba but numba is not importable")
        return choice
    return "numba" if HAS_NUMBA else "numpy"


def stats_width(size: int) -> int:
    return 4 + 3 * size


@njit(cache=True, nogil=True)
def _cycle_stats_numba(perms, n, out):  # pragma: no cover - exercised via wrapper
    B, N = perms.shape
    for b in range(B):
        seen = np.zeros(N, np.bool_)
        r = 1
        fv = 0
        fw = 0
        for s in range(N):
            if seen[s]:
                continue
            length = 0
            crosses = False
            g = s
            while True:
                seen[g] = True
                length += 1
                if (g < n) != (s < n):
                    crosses = True
                g = perms[b, g]
                if g == s:
                    break
            if length == 1:
                if s < n:
                    fv += 1
                else:
                    fw += 1
            else:
                if crosses:
                    kind = 2
                elif s < n:
                    kind = 0
                else:
                    kind = 1
                out[b, 4 + kind * N + (length - 1)] += 1
                a0, b0 = r, length
                while b0:
                    a0, b0 = b0, a0 % b0
                r = r * length // a0
        out[b, 0] = 1 if perms[b, 0] >= n else 0
        out[b, 1] = r
        out[b, 2] = fv
        out[b, 3] = fw


def _cycle_stats_numpy(perms: np.ndarray, n: int) -> np.ndarray:
    B, N = perms.shape
    out = np.zeros((B, stats_width(N)), dtype=np.int64)
    idx = np.arange(N)
    part_v = idx < n

    # period[b, v] = cycle length through v; cross marks orbits visiting both parts
    period = np.zeros((B, N), dtype=np.int64)
    cross = np.zeros((B, N), dtype=bool)
    cur = perms.copy()
    for t in range(1, N + 1):
        period[(cur == idx) & (period == 0)] = t
        cross |= (cur < n) != part_v[None, :]
        if t < N:
            cur = np.take_along_axis(perms, cur, axis=1)

    fixed = period == 1
    out[:, 0] = perms[:, 0] >= n
    out[:, 1] = np.lcm.reduce(period, axis=1)
    out[:, 2] = (fixed & part_v[None, :]).sum(axis=1)
    out[:, 3] = (fixed & ~part_v[None, :]).sum(axis=1)

    kind = np.where(cross, 2, np.where(part_v[None, :], 0, 1))
    moved = ~fixed
    rows = np.broadcast_to(np.arange(B)[:, None], (B, N))[moved]
    cols = 4 + kind[moved] * N + (period[moved] - 1)
    np.add.at(out, (rows, cols), 1)
    # each length-L cycle was counted once per member
    lengths = np.tile(np.arange(1, N + 1), 3)
    out[:, 4:] //= lengths[None, :]
    return out


def cycle_stats(perms: np.ndarray, n: int, backend: str | None = None) -> np.ndarray:
    """Cycle-structure stat rows for a batch of vertex permutations.

    ``perms`` is (B, n+m) int64, each row a permutation of 0..n+m-1 sending
    part V = [0, n) to one part and W = [n, n+m) to the other.
    """
    perms = np.ascontiguousarray(perms, dtype=np.int64)
    if backend is None:
        backend = default_backend()
    if backend == "numba":
        out = np.zeros((perms.shape[0], stats_width(perms.shape[1])), dtype=np.int64)
        _cycle_stats_numba(perms, n, out)
        return out
    if backend == "numpy":
        return _cycle_stats_numpy(perms, n)
    raise ValueError(f"unknown backend {backend!r}")


def stats_row_to_signature(row: np.ndarray, shape: BipartiteShape) -> CycleSignature:
    """Rebuild a CycleSignature from one stat row."""
    N = shape.size
    pure_v: list[int] = []
    pure_w: list[int] = []
    mixed: list[int] = []
    for kind, bucket in enumerate((pure_v, pure_w, mixed)):
        base = 4 + kind * N
        for L in range(2, N + 1):
            bucket.extend([L] * int(row[base + L - 1]))
    return CycleSignature(
        shape=shape,
        side_action=SideAction.SWAPPING if row[0] else SideAction.PRESERVING,
        r=int(row[1]),
        fixed_v=int(row[2]),
        fixed_w=int(row[3]),
        pure_v_cycles=tuple(pure_v),
        pure_w_cycles=tuple(pure_w),
        mixed_cycles=tuple(mixed),
    )
