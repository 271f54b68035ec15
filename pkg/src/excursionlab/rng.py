"""Counter-based random streams for deterministic parallel Monte Carlo.

Each replica of an experiment gets its own Philox4x32-10 stream keyed by
``(master_seed, replica_index)``.  A stream's output depends only on that
pair, never on scheduling or worker count, so any order-independent
reduction over replicas is bit-reproducible across 1..N workers.

State layout (uint32 array of length 12):

    [0:4]   counter words c0..c3 (c0/c1 = draw block counter, c2/c3 = replica)
    [4:6]   key words derived from the master seed
    [6:10]  current output block
    [10]    position within the output block (0..4)
    [11]    unused padding

A separate float64 array of length 2 caches the spare Box-Muller normal.
"""

from __future__ import annotations

import numpy as np
from numba import njit

_M0 = np.uint64(0xD2511F53)
_M1 = np.uint64(0xCD9E8D57)
_W0 = np.uint32(0x9E3779B9)
_W1 = np.uint32(0xBB67AE85)
_MASK32 = np.uint64(0xFFFFFFFF)


@njit(cache=True)
def philox4x32(c0, c1, c2, c3, k0, k1):
    """One Philox4x32-10 block: four uint32 outputs from counter+key."""
    for _ in range(10):
        p0 = _M0 * np.uint64(c0)
        p1 = _M1 * np.uint64(c2)
        hi0 = np.uint32(p0 >> np.uint64(32))
        lo0 = np.uint32(p0 & _MASK32)
        hi1 = np.uint32(p1 >> np.uint64(32))
        lo1 = np.uint32(p1 & _MASK32)
        c0 = hi1 ^ c1 ^ k0
        c1 = lo1
        c2 = hi0 ^ c3 ^ k1
        c3 = lo0
        k0 = np.uint32(k0 + _W0)
        k1 = np.uint32(k1 + _W1)
    return c0, c1, c2, c3


@njit(cache=True)
def stream_init(seed, replica):
    """Fresh stream state for (master seed, replica index)."""
    state = np.zeros(12, dtype=np.uint32)
    seed = np.uint64(seed)
    replica = np.uint64(replica)
    state[4] = np.uint32(seed & _MASK32)
    state[5] = np.uint32((seed >> np.uint64(32)) & _MASK32)
    state[2] = np.uint32(replica & _MASK32)
    state[3] = np.uint32((replica >> np.uint64(32)) & _MASK32)
    state[10] = 4  # force a refill on first draw
    return state


@njit(cache=True)
def next_u32(state):
    pos = state[10]
    if pos >= 4:
        o0, o1, o2, o3 = philox4x32(
            state[0], state[1], state[2], state[3], state[4], state[5]
        )
        state[6] = o0
        state[7] = o1
        state[8] = o2
        state[9] = o3
        # 64-bit draw counter in words 0/1
        state[0] = np.uint32(state[0] + np.uint32(1))
        if state[0] == 0:
            state[1] = np.uint32(state[1] + np.uint32(1))
        pos = 0
    out = state[6 + pos]
    state[10] = pos + 1
    return out


@njit(cache=True)
def uniform(state):
    """float64 uniform on [0, 1) with 53 random bits."""
    a = np.uint64(next_u32(state))
    b = np.uint64(next_u32(state))
    return ((a >> np.uint64(5)) * 67108864.0 + (b >> np.uint64(6))) * (2.0 ** -53)


@njit(cache=True)
def exponential(state):
    """Standard exponential (mean 1)."""
    return -np.log(1.0 - uniform(state))


@njit(cache=True)
def normal(state, cache):
    """Standard normal via Box-Muller; cache holds the spare value."""
    if cache[1] > 0.5:
        cache[1] = 0.0
        return cache[0]
    u1 = 1.0 - uniform(state)
    u2 = uniform(state)
    r = np.sqrt(-2.0 * np.log(u1))
    ang = 2.0 * np.pi * u2
    cache[0] = r * np.sin(ang)
    cache[1] = 1.0
    return r * np.cos(ang)


@njit(cache=True)
def normal_cache():
    return np.zeros(2, dtype=np.float64)


def philox4x32_reference(counter, key):
    """Pure-python Philox4x32-10 block for cross-checking the jitted one."""
    m0, m1 = 0xD2511F53, 0xCD9E8D57
    w0, w1 = 0x9E3779B9, 0xBB67AE85
    c = list(counter)
    k = list(key)
    for _ in range(10):
        p0 = c[0] * m0
        p1 = c[2] * m1
        c = [
            ((p1 >> 32) ^ c[1] ^ k[0]) & 0xFFFFFFFF,
            p1 & 0xFFFFFFFF,
            ((p0 >> 32) ^ c[3] ^ k[1]) & 0xFFFFFFFF,
            p0 & 0xFFFFFFFF,
        ]
        k[0] = (k[0] + w0) & 0xFFFFFFFF
        k[1] = (k[1] + w1) & 0xFFFFFFFF
    return tuple(c)


class Stream:
    """Thin python wrapper over the jitted stream, mainly for tests."""

    def __init__(self, seed: int, replica: int = 0):
        self.state = stream_init(seed, replica)
        self.cache = normal_cache()

    def u32(self) -> int:
        return int(next_u32(self.state))

    def uniform(self) -> float:
        return float(uniform(self.state))

    def normal(self) -> float:
        return float(normal(self.state, self.cache))

    def exponential(self) -> float:
        return float(exponential(self.state))
