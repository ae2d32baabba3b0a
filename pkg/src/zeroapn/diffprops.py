"""Differential behaviour of power maps x -> x^d over GF(2^n).

Every scan works on the full value table ``T[x] = x^d`` and compares
``T[x ^ a]`` with ``T[x]``.  For a power map the derivative in direction a
is a scaled copy of the derivative in direction 1,

    delta(a, b) = delta(1, b / a^d)        (substitute x -> a x),

so uniformity and spectrum come from the single row a = 1.
"""

from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import gf2n
from .errors import FieldTooLarge, InvalidExponent, ZeroDirection

SCAN_LIMIT = 24
TABLE_LIMIT = 26
MAX_WITNESSES = 16


@dataclass(frozen=True)
class PowerMap:
    ctx: gf2n.FieldCtx
    d: int

    def __post_init__(self):
        if self.d < 1:
            raise InvalidExponent("d must be a positive integer")
        if self.d % (self.ctx.order - 1) == 0:
            raise InvalidExponent(
                f"d={self.d} is a multiple of 2^n-1: x^d is constant on nonzero x"
            )

    @property
    def n(self) -> int:
        return self.ctx.n

    @property
    def exponent(self) -> int:
        """d reduced modulo 2^n - 1."""
        return self.d % (self.ctx.order - 1)

    def __call__(self, x: int) -> int:
        return self.ctx.pow(x, self.d)


def power_map(n: int, d: int, modulus: int | None = None) -> PowerMap:
    return PowerMap(gf2n.field_new(n, modulus), d)


@lru_cache(maxsize=4)
def _table(ctx: gf2n.FieldCtx, e: int) -> np.ndarray:
    return gf2n.power_table(ctx, e)


def values(pm: PowerMap) -> np.ndarray:
    """T[x] = x^d for every x, as a uint32 array of length 2^n."""
    if pm.n > TABLE_LIMIT:
        raise FieldTooLarge(f"value tables stop at n={TABLE_LIMIT}")
    return _table(pm.ctx, pm.exponent)


def _guard(pm: PowerMap, force: bool):
    if pm.n > SCAN_LIMIT and not force:
        raise FieldTooLarge(f"n={pm.n} exceeds the default scan ceiling {SCAN_LIMIT}; pass force")


def derivative_row(pm: PowerMap, a: int = 1) -> np.ndarray:
    """D_a F(x) = F(x + a) + F(x) for every x."""
    if a == 0:
        raise ZeroDirection("direction a must be nonzero")
    t = values(pm)
    xs = np.arange(pm.ctx.order, dtype=np.uint32)
    return t[xs ^ np.uint32(a)] ^ t


def derivative_count(pm: PowerMap, a: int, b: int) -> int:
    """|{x : F(x + a) + F(x) = b}|."""
    return int(np.count_nonzero(derivative_row(pm, a) == b))


def row_counts(pm: PowerMap, a: int = 1) -> np.ndarray:
    """delta_F(a, b) for every b."""
    return np.bincount(derivative_row(pm, a), minlength=pm.ctx.order)


def differential_uniformity(pm: PowerMap, force: bool = False) -> int:
    _guard(pm, force)
    return int(row_counts(pm).max())


def is_apn(pm: PowerMap, force: bool = False) -> bool:
    return differential_uniformity(pm, force) == 2


def naive_uniformity(pm: PowerMap) -> int:
    """max over every a != 0 and b, without the power-map reduction."""
    best = 0
    for a in range(1, pm.ctx.order):
        best = max(best, int(row_counts(pm, a).max()))
    return best


@dataclass
class DiffSpectrum:
    """Number of (a, b) pairs, a != 0, attaining each derivative count."""

    n: int
    counts: dict[int, int]
    row: dict[int, int] = field(default_factory=dict)

    @property
    def uniformity(self) -> int:
        return max(k for k, v in self.counts.items() if v)

    def row_sum(self) -> int:
        return sum(k * v for k, v in self.row.items())


def diff_spectrum(pm: PowerMap, force: bool = False) -> DiffSpectrum:
    _guard(pm, force)
    row = Counter(row_counts(pm).tolist())
    scale = pm.ctx.order - 1
    return DiffSpectrum(
        n=pm.n,
        counts={k: v * scale for k, v in sorted(row.items())},
        row=dict(sorted(row.items())),
    )


def _pairs_block(t: np.ndarray, x0: int, xs: np.ndarray, ys: np.ndarray) -> bool:
    fx0 = t[x0]
    s = fx0 ^ t[xs][:, None] ^ t[ys][None, :] ^ t[(xs[:, None] ^ ys[None, :]) ^ x0]
    trivial = (xs[:, None] == x0) | (ys[None, :] == x0) | (xs[:, None] == ys[None, :])
    return not np.any((s == 0) & ~trivial)


def is_x0_apn(pm: PowerMap, x0: int, block: int = 256) -> bool:
    """All (x, y) with F(x0)+F(x)+F(y)+F(x0+x+y) = 0 lie on (x0+x)(x0+y)(x+y) = 0."""
    t = values(pm)
    order = pm.ctx.order
    ys = np.arange(order, dtype=np.uint32)
    for lo in range(0, order, block):
        xs = np.arange(lo, min(lo + block, order), dtype=np.uint32)
        if not _pairs_block(t, x0, xs, ys):
            return False
    return True


def _zero_apn_chunk(pm: PowerMap, lo: int, hi: int, table) -> np.ndarray:
    xs = np.arange(max(lo, 2), hi, dtype=np.uint64)
    if xs.size == 0:
        return xs
    if table is not None:
        lhs = table[(xs ^ 1).astype(np.int64)] ^ table[xs.astype(np.int64)]
    else:
        lhs = pm.ctx.pow_vec(xs ^ np.uint64(1), pm.exponent) ^ pm.ctx.pow_vec(xs, pm.exponent)
    return xs[lhs == 1]


def zero_apn_solutions(pm: PowerMap, threads: int = 1, chunk: int = 1 << 20, limit: int | None = None):
    """Solutions of F(x+1) + F(x) + 1 = 0 outside {0, 1}, ascending."""
    order = pm.ctx.order
    table = values(pm) if pm.n <= TABLE_LIMIT else None
    bounds = [(lo, min(lo + chunk, order)) for lo in range(0, order, chunk)]
    if threads > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda b: _zero_apn_chunk(pm, b[0], b[1], table), bounds))
    else:
        parts = [_zero_apn_chunk(pm, lo, hi, table) for lo, hi in bounds]
    out = []
    for p in parts:  # ranges are contiguous and ordered, so the merge is too
        out.extend(int(v) for v in p)
        if limit is not None and len(out) >= limit:
            return out[:limit]
    return out


def is_zero_apn(pm: PowerMap, threads: int = 1) -> tuple[bool, list[int]]:
    """(True, []) when F(x+1)+F(x)+1 = 0 has no root outside {0, 1}.

    Otherwise (False, first 16 roots in ascending order).
    """
    wit = zero_apn_solutions(pm, threads=threads, limit=MAX_WITNESSES)
    return (not wit, wit)


def check_record(pm: PowerMap, threads: int = 1, with_uniformity: bool = True, force: bool = False) -> dict:
    """One JSON-ready report record for (n, d)."""
    _guard(pm, force)
    t0 = time.perf_counter()
    ok, wit = is_zero_apn(pm, threads=threads)
    uni = differential_uniformity(pm, force=force) if with_uniformity else None
    return {
        "n": pm.n,
        "d": pm.d,
        "modulus_hex": pm.ctx.modulus_hex,
        "zero_apn": ok,
        "uniformity": uni,
        "witnesses": [format(w, "x") for w in wit],
        "elapsed_ms": round((time.perf_counter() - t0) * 1000, 3),
    }
