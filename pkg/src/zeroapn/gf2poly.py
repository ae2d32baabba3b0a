"""Univariate polynomials over GF(2).

A polynomial is a plain Python ``int``: bit ``i`` is the coefficient of
``x^i``.  Python integers are arbitrary precision, so degrees in the
thousands cost nothing special and XOR is addition.  The zero polynomial
has degree -1.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from functools import reduce

from .errors import (
    BothZero,
    ConstantPolynomial,
    DivisionByZero,
    PolySyntaxError,
    ZeroPolynomial,
)

X = 0b10
ONE = 1
DEFAULT_SEED = 20240607


def degree(f: int) -> int:
    return f.bit_length() - 1


def padd(a: int, b: int) -> int:
    return a ^ b


def _mul_small(a: int, b: int) -> int:
    r = 0
    while b:
        low = b & -b
        r ^= a << (low.bit_length() - 1)
        b ^= low
    return r


def pmul(a: int, b: int) -> int:
    """Carryless product."""
    if a.bit_length() < b.bit_length():
        a, b = b, a
    if b.bit_length() <= 64:
        return _mul_small(a, b)
    # 8-bit windows over the shorter operand
    table = [0] * 256
    for k in range(1, 256):
        table[k] = _mul_small(a, k)
    r = 0
    shift = 0
    while b:
        chunk = b & 0xFF
        if chunk:
            r ^= table[chunk] << shift
        b >>= 8
        shift += 8
    return r


def psquare(a: int) -> int:
    # squaring over GF(2) spreads the coefficient bits apart
    if a == 0:
        return 0
    return int("0".join(bin(a)[2:]), 2)


def ppow(a: int, e: int) -> int:
    result = 1
    while e:
        if e & 1:
            result = pmul(result, a)
        e >>= 1
        if e:
            a = psquare(a)
    return result


def pdivrem(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise DivisionByZero("polynomial division by zero")
    db = b.bit_length()
    q = 0
    while True:
        shift = a.bit_length() - db
        if shift < 0:
            return q, a
        a ^= b << shift
        q |= 1 << shift


def pmod(a: int, b: int) -> int:
    if b == 0:
        raise DivisionByZero("polynomial division by zero")
    db = b.bit_length()
    while True:
        shift = a.bit_length() - db
        if shift < 0:
            return a
        a ^= b << shift


def pdiv_exact(a: int, b: int) -> int:
    q, r = pdivrem(a, b)
    if r:
        raise ValueError("polynomial division is not exact")
    return q


def pgcd(a: int, b: int) -> int:
    if a == 0 and b == 0:
        raise BothZero("gcd(0, 0) is undefined")
    while b:
        a, b = b, pmod(a, b)
    return a


def pmulmod(a: int, b: int, f: int) -> int:
    return pmod(pmul(a, b), f)


def psqrmod(a: int, f: int) -> int:
    return pmod(psquare(a), f)


def powmod(a: int, e: int, f: int) -> int:
    a = pmod(a, f)
    result = pmod(1, f)
    while e:
        if e & 1:
            result = pmulmod(result, a, f)
        e >>= 1
        if e:
            a = psqrmod(a, f)
    return result


_EVEN_MASK_CACHE: dict[int, int] = {}


def _even_mask(bits: int) -> int:
    words = max(1, (bits + 63) // 64)
    m = _EVEN_MASK_CACHE.get(words)
    if m is None:
        m = int("5555555555555555" * words, 16)
        _EVEN_MASK_CACHE[words] = m
    return m


def pderiv(f: int) -> int:
    """Formal derivative: x^i -> x^(i-1) for odd i, vanishes for even i."""
    return (f >> 1) & _even_mask(f.bit_length())


def psqrt(f: int) -> int:
    """Square root of a polynomial with only even-degree terms."""
    if f & ~_even_mask(f.bit_length()):
        raise ValueError("polynomial is not a perfect square")
    s = bin(f)[2:][::-1][::2][::-1]
    return int(s, 2) if s else 0


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f: int) -> bool:
    """Rabin's test: x^(2^d) = x mod f, and gcd(x^(2^(d/p)) - x, f) = 1."""
    d = degree(f)
    if d < 1:
        raise ConstantPolynomial("irreducibility is undefined for constants")
    if d == 1:
        return True
    if not f & 1:
        return False
    # x^(2^k) mod f for every k up to d
    frob = [X]
    h = X
    for _ in range(d):
        h = psqrmod(h, f)
        frob.append(h)
    if frob[d] != X:
        return False
    for p in _prime_factors(d):
        if pgcd(frob[d // p] ^ X, f) != 1:
            return False
    return True


def irreducibles(d: int):
    """Yield all irreducible polynomials of degree d in ascending value."""
    lo = 1 << d
    for f in range(lo, lo << 1):
        if is_irreducible(f):
            yield f


def smallest_irreducible(d: int) -> int:
    return next(irreducibles(d))


def count_irreducibles(d: int) -> int:
    """Gauss's formula (1/d) * sum_{e | d} mu(e) 2^(d/e)."""

    def mobius(k):
        res = 1
        for p in _prime_factors(k):
            if (k // p) % p == 0:
                return 0
            res = -res
        return res

    total = sum(mobius(e) * 2 ** (d // e) for e in range(1, d + 1) if d % e == 0)
    return total // d


@dataclass(frozen=True)
class Factorization:
    """Sorted multiset of irreducible factors; the unit is always 1."""

    factors: tuple[tuple[int, int], ...]

    def expand(self) -> int:
        return reduce(pmul, (ppow(p, k) for p, k in self.factors), 1)

    def degree_set(self, exclude_linear: bool = True) -> set[int]:
        return degree_set(self, exclude_linear)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def __str__(self):
        return format_factorization(self)


def _canonical(pairs) -> Factorization:
    merged: dict[int, int] = {}
    for p, k in pairs:
        merged[p] = merged.get(p, 0) + k
    return Factorization(tuple(sorted(merged.items(), key=lambda t: (degree(t[0]), t[0]))))


def squarefree_decomposition(f: int) -> list[tuple[int, int]]:
    """Return [(g_i, i)] with f = prod g_i^i and every g_i squarefree."""
    out = []
    c = pgcd(f, pderiv(f))
    w = pdiv_exact(f, c)
    i = 1
    while w != 1:
        y = pgcd(w, c)
        fac = pdiv_exact(w, y)
        if fac != 1:
            out.append((fac, i))
        w = y
        c = pdiv_exact(c, y)
        i += 1
    if c != 1:
        # remaining cofactor has vanishing derivative: a perfect square
        for g, j in squarefree_decomposition(psqrt(c)):
            out.append((g, 2 * j))
    return out


def distinct_degree(f: int) -> list[tuple[int, int]]:
    """Split a squarefree f into (product of all degree-d factors, d)."""
    out = []
    h = X
    rest = f
    d = 0
    while degree(rest) >= 2 * (d + 1):
        d += 1
        h = psqrmod(h, rest)
        g = pgcd(h ^ X, rest)
        if g != 1:
            out.append((g, d))
            rest = pdiv_exact(rest, g)
            h = pmod(h, rest)
    if degree(rest) > 0:
        out.append((rest, degree(rest)))
    return out


def equal_degree(f: int, d: int, rng: random.Random) -> list[int]:
    """Split a product of degree-d irreducibles with the trace map."""
    n = degree(f)
    if n == d:
        return [f]
    while True:
        a = rng.getrandbits(n) | 2
        a = pmod(a, f)
        t = a
        s = a
        for _ in range(d - 1):
            s = psqrmod(s, f)
            t ^= s
        g = pgcd(t, f)
        if 0 < degree(g) < n:
            return equal_degree(g, d, rng) + equal_degree(pdiv_exact(f, g), d, rng)


def factorize(f: int, seed: int = DEFAULT_SEED) -> Factorization:
    """Complete factorization into irreducibles with multiplicities."""
    if f == 0:
        raise ZeroPolynomial("cannot factor the zero polynomial")
    rng = random.Random(seed)
    pairs = []
    for g, mult in squarefree_decomposition(f):
        for block, d in distinct_degree(g):
            for p in equal_degree(block, d, rng):
                pairs.append((p, mult))
    return _canonical(pairs)


def degree_set(fact: Factorization, exclude_linear: bool = True) -> set[int]:
    skip = {X, X | 1} if exclude_linear else set()
    return {degree(p) for p, _ in fact.factors if p not in skip}


# -- literal syntax ----------------------------------------------------------

_TERM = re.compile(r"^(?:(1)|([a-z])(?:\^(\d+))?)$")


def to_str(f: int, var: str = "x") -> str:
    if f == 0:
        return "0"
    terms = []
    for i in range(degree(f), -1, -1):
        if (f >> i) & 1:
            if i == 0:
                terms.append("1")
            elif i == 1:
                terms.append(var)
            else:
                terms.append(f"{var}^{i}")
    return "+".join(terms)


def to_hex(f: int) -> str:
    return format(f, "x")


def from_hex(text: str) -> int:
    t = text.strip().lower()
    if t.startswith("0x"):
        t = t[2:]
    try:
        return int(t, 16)
    except ValueError:
        raise PolySyntaxError(f"bad hex polynomial {text!r}") from None


def parse(text: str, var: str = "x") -> int:
    """Parse ``x^3+x+1`` style sums (duplicates cancel) or ``0x..`` hex."""
    t = text.replace(" ", "")
    if t.lower().startswith("0x"):
        return from_hex(t)
    if t in ("", "0"):
        return 0
    f = 0
    for term in t.split("+"):
        m = _TERM.match(term)
        if not m or (m.group(2) and m.group(2) != var):
            raise PolySyntaxError(f"bad term {term!r} in {text!r}")
        if m.group(1):
            f ^= 1
        else:
            f ^= 1 << int(m.group(3) or 1)
    return f


def format_factorization(fact: Factorization, var: str = "x") -> str:
    if not fact.factors:
        return "1"
    parts = []
    for p, k in fact.factors:
        s = to_str(p, var)
        if "+" in s:
            s = f"({s})"
        parts.append(s if k == 1 else f"{s}^{k}")
    return "*".join(parts)
