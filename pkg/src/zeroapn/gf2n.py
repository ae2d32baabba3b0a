"""Arithmetic in GF(2^n), n <= 32.

Elements are Python ints holding the coefficient bits of a residue modulo
the field's irreducible modulus.  Scalar operations use carryless
multiplication followed by shift-XOR reduction.  The ``*_vec`` helpers do
the same on numpy arrays and back the exhaustive scans.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

import numpy as np

from . import gf2poly
from .errors import DegreeMismatch, DivisionByZero, NonIrreducibleModulus, UnsupportedDegree

MAX_DEGREE = 32


@lru_cache(maxsize=None)
def default_modulus(n: int) -> int:
    """Smallest irreducible polynomial of degree n, by integer value."""
    return gf2poly.smallest_irreducible(n)


@dataclass(frozen=True)
class FieldCtx:
    n: int
    modulus: int
    order: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "order", 1 << self.n)

    @property
    def mask(self) -> int:
        return self.order - 1

    @property
    def modulus_hex(self) -> str:
        return gf2poly.to_hex(self.modulus)

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        n = self.n
        mod = self.modulus
        r = 0
        # interleave the carryless product with the reduction
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a >> n:
                a ^= mod
        return r

    def square(self, a: int) -> int:
        return gf2poly.pmod(gf2poly.psquare(a), self.modulus)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            raise ValueError("negative exponent; use inv")
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("0 has no inverse")
        # extended Euclid in GF(2)[x]
        r0, r1 = self.modulus, a
        s0, s1 = 0, 1
        while r1 != 1:
            q, r = gf2poly.pdivrem(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 ^ gf2poly.pmul(q, s1)
        return gf2poly.pmod(s1, self.modulus)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def frobenius(self, a: int, k: int = 1) -> int:
        """a^(2^k)."""
        for _ in range(k % self.n):
            a = self.mul(a, a)
        return a

    def elements(self):
        return range(self.order)

    def order_of(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("0 has no multiplicative order")
        q = self.order - 1
        o = q
        for p in gf2poly._prime_factors(q):
            while o % p == 0 and self.pow(a, o // p) == 1:
                o //= p
        return o

    def primitive_element(self) -> int:
        q = self.order - 1
        for g in range(2, self.order):
            if self.order_of(g) == q:
                return g
        return 1  # GF(2)

    # -- vectorised paths ---------------------------------------------------

    def mul_vec(self, a: np.ndarray, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.uint64).copy()
        b = np.asarray(b, dtype=np.uint64)
        r = np.zeros(np.broadcast(a, b).shape, dtype=np.uint64)
        top = np.uint64(self.n)
        mod = np.uint64(self.modulus)
        one = np.uint64(1)
        for i in range(self.n):
            bit = (b >> np.uint64(i)) & one
            r ^= a * bit
            a = a << one
            a ^= (a >> top) * mod
        return r

    def pow_vec(self, a: np.ndarray, e: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.uint64)
        result = np.ones_like(a)
        while e:
            if e & 1:
                result = self.mul_vec(result, a)
            e >>= 1
            if e:
                a = self.mul_vec(a, a)
        return result


def field_new(n: int, modulus: int | None = None) -> FieldCtx:
    if not 1 <= n <= MAX_DEGREE:
        raise UnsupportedDegree(f"n={n} outside 1..{MAX_DEGREE}")
    if modulus is None:
        modulus = default_modulus(n)
    if gf2poly.degree(modulus) != n:
        raise DegreeMismatch(f"modulus has degree {gf2poly.degree(modulus)}, expected {n}")
    if not gf2poly.is_irreducible(modulus):
        raise NonIrreducibleModulus(f"{gf2poly.to_str(modulus)} is reducible")
    return FieldCtx(n, modulus)


def load_modulus_table(path: str | Path) -> dict[int, int]:
    """Read ``n <hex>`` lines; blank lines and ``#`` comments are skipped."""
    table = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"{path}:{lineno}: expected 'n hex'")
        n = int(parts[0])
        table[n] = field_new(n, gf2poly.from_hex(parts[1])).modulus
    return table


@lru_cache(maxsize=4)
def log_tables(ctx: FieldCtx) -> tuple[np.ndarray, np.ndarray]:
    """(exp, log) tables of length 2^n - 1 and 2^n built from a primitive element.

    log[0] is unused (left at 0).
    """
    q = ctx.order - 1
    g = ctx.primitive_element()
    exp = np.empty(q, dtype=np.uint64)
    exp[0] = 1
    filled = 1
    # doubling: exp[k:2k] = exp[:k] * g^k
    while filled < q:
        take = min(filled, q - filled)
        exp[filled:filled + take] = ctx.mul_vec(exp[:take], ctx.pow(g, filled))
        filled += take
    exp = exp.astype(np.uint32)
    log = np.zeros(ctx.order, dtype=np.uint32)
    log[exp] = np.arange(q, dtype=np.uint32)
    return exp, log


def power_table(ctx: FieldCtx, d: int, chunk: int = 1 << 20) -> np.ndarray:
    """Array T with T[x] = x^d for every field element x (0^0 = 1)."""
    q = ctx.order - 1
    exp, log = log_tables(ctx)
    e = d % q
    out = np.empty(ctx.order, dtype=np.uint32)
    out[0] = 0 if d > 0 else 1
    for lo in range(1, ctx.order, chunk):
        hi = min(lo + chunk, ctx.order)
        idx = (log[lo:hi].astype(np.int64) * e) % q
        out[lo:hi] = exp[idx]
    return out
