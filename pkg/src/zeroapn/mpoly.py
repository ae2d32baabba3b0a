"""Sparse multivariate polynomials over GF(2) in the variables x, y, z, u, v.

A monomial is packed into one integer, 16 bits per exponent with x in the
most significant field, so monomial multiplication is integer addition and
comparing packed integers is lex order x > y > z > u > v.  A polynomial is
the set of its monomials; duplicate insertion cancels.
"""

from __future__ import annotations

import math
import re
from functools import reduce

import numpy as np

from . import gf2n, gf2poly
from .errors import (
    DegreeZeroInVariable,
    InexactDivision,
    LeadingCoefficientVanished,
    MissingVariable,
    PolySyntaxError,
    UnknownVariable,
)

VARS = ("x", "y", "z", "u", "v")
WIDTH = 16
FIELD = (1 << WIDTH) - 1
_SHIFT = {name: WIDTH * (len(VARS) - 1 - i) for i, name in enumerate(VARS)}


def _exps(m: int) -> tuple[int, ...]:
    return tuple((m >> _SHIFT[v]) & FIELD for v in VARS)


def _pack(exps) -> int:
    m = 0
    for v, e in zip(VARS, exps):
        if e > FIELD:
            raise OverflowError(f"exponent {e} of {v} exceeds {FIELD}")
        m |= e << _SHIFT[v]
    return m


def _total(m: int) -> int:
    t = 0
    while m:
        t += m & FIELD
        m >>= WIDTH
    return t


def _grlex(m: int):
    return (_total(m), m)


def _check_var(var: str) -> str:
    if var not in _SHIFT:
        raise UnknownVariable(f"unknown variable {var!r}; expected one of {VARS}")
    return var


class MPoly:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms=()):
        self.terms = frozenset(terms)
        self._hash = None

    # -- construction ---------------------------------------------------------

    @classmethod
    def var(cls, name: str, power: int = 1) -> "MPoly":
        _check_var(name)
        return cls((power << _SHIFT[name],))

    @classmethod
    def one(cls) -> "MPoly":
        return cls((0,))

    @classmethod
    def zero(cls) -> "MPoly":
        return cls()

    @classmethod
    def from_exponents(cls, vectors) -> "MPoly":
        acc = set()
        for exps in vectors:
            acc ^= {_pack(tuple(exps) + (0,) * (len(VARS) - len(exps)))}
        return cls(acc)

    @classmethod
    def from_bitpoly(cls, f: int, var: str = "x") -> "MPoly":
        sh = _SHIFT[_check_var(var)]
        return cls(i << sh for i in range(f.bit_length()) if (f >> i) & 1)

    # -- basic protocol -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = MPoly.one() if other & 1 else MPoly.zero()
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"MPoly({mp_print(self)!r})"

    def __str__(self):
        return mp_print(self)

    def __add__(self, other):
        other = _coerce(other)
        return MPoly(self.terms ^ other.terms)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __mul__(self, other):
        other = _coerce(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        acc = set()
        for t in b:
            acc ^= {t + s for s in a}
        return MPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = MPoly.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base.square()
        return result

    def square(self) -> "MPoly":
        # Frobenius: (sum t)^2 = sum t^2 in characteristic 2
        return MPoly(t << 1 for t in self.terms)

    # -- structure ------------------------------------------------------------

    def degree(self, var: str | None = None) -> int:
        if not self.terms:
            return -1
        if var is None:
            return max(_total(t) for t in self.terms)
        sh = _SHIFT[_check_var(var)]
        return max((t >> sh) & FIELD for t in self.terms)

    def variables(self) -> tuple[str, ...]:
        present = reduce(lambda a, b: a | b, self.terms, 0)
        return tuple(v for v in VARS if (present >> _SHIFT[v]) & FIELD)

    def coeffs(self, var: str) -> list["MPoly"]:
        """Coefficients in GF(2)[other vars], indexed by the power of var."""
        sh = _SHIFT[_check_var(var)]
        mask = FIELD << sh
        buckets: dict[int, set] = {}
        for t in self.terms:
            buckets.setdefault((t >> sh) & FIELD, set()).add(t & ~mask)
        d = max(buckets) if buckets else -1
        return [MPoly(buckets.get(i, ())) for i in range(d + 1)]

    def leading_term(self) -> int:
        return max(self.terms, key=_grlex)

    def is_univariate(self, var: str = "x") -> bool:
        sh = _SHIFT[_check_var(var)]
        mask = FIELD << sh
        return all(not (t & ~mask) for t in self.terms)

    def to_bitpoly(self, var: str = "x") -> int:
        if not self.is_univariate(var):
            raise ValueError(f"{self} is not univariate in {var}")
        sh = _SHIFT[var]
        f = 0
        for t in self.terms:
            f |= 1 << (t >> sh)
        return f

    def exponent_vectors(self):
        return sorted((_exps(t) for t in self.terms), key=lambda e: (sum(e), e), reverse=True)

    def subs(self, mapping: dict[str, "MPoly"]) -> "MPoly":
        """Substitute polynomials for variables."""
        for v in mapping:
            _check_var(v)
        cache: dict[tuple[str, int], MPoly] = {}

        def power(v, e):
            key = (v, e)
            if key not in cache:
                cache[key] = mapping[v] ** e
            return cache[key]

        acc = set()
        for t in self.terms:
            keep = 0
            prod = MPoly.one()
            for v, e in zip(VARS, _exps(t)):
                if e == 0:
                    continue
                if v in mapping:
                    prod = prod * power(v, e)
                else:
                    keep |= e << _SHIFT[v]
            acc ^= {s + keep for s in prod.terms}
        return MPoly(acc)


def _coerce(other) -> MPoly:
    if isinstance(other, MPoly):
        return other
    if isinstance(other, int):
        return MPoly.one() if other & 1 else MPoly.zero()
    raise TypeError(f"cannot combine MPoly with {type(other).__name__}")


def mp_print(p: MPoly) -> str:
    """Canonical text: graded lex order, x > y > z > u > v."""
    if not p.terms:
        return "0"
    out = []
    for t in sorted(p.terms, key=_grlex, reverse=True):
        factors = []
        for v, e in zip(VARS, _exps(t)):
            if e == 1:
                factors.append(v)
            elif e > 1:
                factors.append(f"{v}^{e}")
        out.append("*".join(factors) if factors else "1")
    return "+".join(out)


# -- parser -------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z])|(\^|\*\*)|([-+*()]))")


def _tokenize(text: str):
    pos = 0
    toks = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise PolySyntaxError(f"unexpected character {text[pos:pos + 1]!r} at {pos}")
        pos = m.end()
        num, name, caret, op = m.groups()
        if num is not None:
            toks.append(("num", int(num)))
        elif name is not None:
            if name not in _SHIFT:
                raise UnknownVariable(f"unknown variable {name!r}")
            toks.append(("var", name))
        elif caret is not None:
            toks.append(("op", "^"))
        else:
            toks.append(("op", op))
    return toks


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0
        self.text = text

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def error(self, msg):
        raise PolySyntaxError(f"{msg} in {self.text!r}")

    def parse(self) -> MPoly:
        if not self.toks:
            self.error("empty polynomial")
        p = self.expr()
        if self.i != len(self.toks):
            self.error(f"trailing token {self.peek()[1]!r}")
        return p

    def expr(self) -> MPoly:
        if self.peek() in (("op", "+"), ("op", "-")):
            self.take()
        p = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            self.take()
            p = p + self.term()
        return p

    def term(self) -> MPoly:
        p = self.power()
        while True:
            kind, val = self.peek()
            if (kind, val) == ("op", "*"):
                self.take()
                p = p * self.power()
            elif kind in ("var", "num") or (kind, val) == ("op", "("):
                p = p * self.power()  # juxtaposition
            else:
                return p

    def power(self) -> MPoly:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind == "num":
                return base ** val
            if (kind, val) == ("op", "("):
                k, e = self.take()
                if k != "num" or self.take() != ("op", ")"):
                    self.error("exponent must be an integer")
                return base ** e
            self.error("exponent must be an integer")
        return base

    def atom(self) -> MPoly:
        kind, val = self.take()
        if kind == "num":
            return MPoly.one() if val & 1 else MPoly.zero()
        if kind == "var":
            return MPoly.var(val)
        if (kind, val) == ("op", "("):
            p = self.expr()
            if self.take() != ("op", ")"):
                self.error("missing ')'")
            return p
        self.error(f"unexpected token {val!r}")


def mp_parse(text: str) -> MPoly:
    """Parse sums/products/powers over x, y, z, u, v; ``-`` is ``+``.

    Juxtaposition multiplies, so the transcription ``y^2x^2+x`` is accepted
    alongside the canonical ``x^2*y^2+x``.
    """
    return _Parser(text).parse()


# -- exact division ------------------------------------------------------------


def _divides(a: int, b: int) -> bool:
    """Monomial a divides monomial b."""
    for sh in _SHIFT.values():
        if (a >> sh) & FIELD > (b >> sh) & FIELD:
            return False
    return True


def mp_divmod(p: MPoly, q: MPoly) -> tuple[MPoly, MPoly]:
    """Multivariate division by a single divisor in graded lex order."""
    if not q.terms:
        raise ZeroDivisionError("division by the zero polynomial")
    lq = q.leading_term()
    rest = set(p.terms)
    quot = set()
    rem = set()
    qterms = q.terms
    while rest:
        lt = max(rest, key=_grlex)
        if _divides(lq, lt):
            mono = lt - lq
            quot.add(mono)
            rest ^= {t + mono for t in qterms}
        else:
            rest.discard(lt)
            rem.add(lt)
    return MPoly(quot), MPoly(rem)


def mp_divexact(p: MPoly, q: MPoly) -> MPoly:
    quot, rem = mp_divmod(p, q)
    if rem:
        raise InexactDivision(f"{len(rem)}-term remainder dividing by {q}")
    return quot


# -- evaluation ----------------------------------------------------------------


def mp_eval(p: MPoly, ctx: gf2n.FieldCtx, assignment: dict[str, int]) -> int:
    needed = p.variables()
    missing = [v for v in needed if v not in assignment]
    if missing:
        raise MissingVariable(f"no value for {', '.join(missing)}")
    powers: dict[tuple[str, int], int] = {}

    def pw(v, e):
        key = (v, e)
        if key not in powers:
            powers[key] = ctx.pow(assignment[v], e)
        return powers[key]

    acc = 0
    for t in p.terms:
        val = 1
        for v, e in zip(VARS, _exps(t)):
            if e:
                val = ctx.mul(val, pw(v, e))
                if not val:
                    break
        acc ^= val
    return acc


def mp_eval_vec(p: MPoly, ctx: gf2n.FieldCtx, assignment: dict[str, np.ndarray]) -> np.ndarray:
    """mp_eval over equally shaped arrays of field elements (n <= 26)."""
    needed = p.variables()
    missing = [v for v in needed if v not in assignment]
    if missing:
        raise MissingVariable(f"no value for {', '.join(missing)}")
    F = _LogField(ctx)
    arrays = {v: np.asarray(a, dtype=np.int64) for v, a in assignment.items()}
    shape = np.broadcast(*arrays.values()).shape if arrays else ()
    logs = {v: F.log_np[a] for v, a in arrays.items()}
    zero = {v: a == 0 for v, a in arrays.items()}
    acc = np.zeros(shape, dtype=np.int64)
    for t in p.terms:
        total = np.zeros(shape, dtype=np.int64)
        dead = np.zeros(shape, dtype=bool)
        for v, e in zip(VARS, _exps(t)):
            if e:
                total = total + logs[v] * e
                dead = dead | zero[v]
        acc ^= np.where(dead, 0, F.exp_np[total % F.q])
    return acc


# -- univariate resultants over a field -----------------------------------------


class _LogField:
    """Scalar and vector GF(2^s) arithmetic through exp/log tables."""

    def __init__(self, ctx: gf2n.FieldCtx):
        exp, log = gf2n.log_tables(ctx)
        self.ctx = ctx
        self.q = ctx.order - 1
        self.exp_np = exp.astype(np.int64)
        self.log_np = log.astype(np.int64)
        self.exp = exp.tolist() * 2
        self.log = log.tolist()

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self.exp[self.log[a] + self.log[b]]

    def inv(self, a):
        return self.exp[(self.q - self.log[a]) % self.q]

    def pow(self, a, e):
        if e == 0:
            return 1
        if a == 0:
            return 0
        return self.exp[(self.log[a] * e) % self.q]

    def vmul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = self.exp_np[(self.log_np[a] + self.log_np[b]) % self.q]
        return np.where((a == 0) | (b == 0), 0, out)

    def vinv(self, a):
        a = np.asarray(a, dtype=np.int64)
        return self.exp_np[(self.q - self.log_np[a]) % self.q]

    def vpow(self, a, e: int):
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            return np.ones_like(a)
        out = self.exp_np[(self.log_np[a] * e) % self.q]
        return np.where(a == 0, 0, out)


def _trim(f: list) -> list:
    while f and f[-1] == 0:
        f.pop()
    return f


def _field_mod(a: list, b: list, F) -> list:
    """Remainder of a by b; coefficient lists, low degree first."""
    a = list(a)
    db = len(b) - 1
    inv_lc = F.inv(b[-1])
    mul = F.mul
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            c = mul(c, inv_lc)
            off = i - db
            for j, bj in enumerate(b):
                if bj:
                    a[off + j] ^= mul(c, bj)
    return _trim(a[:db])


def field_resultant(f: list, g: list, F) -> int:
    """Res(f, g) of trimmed coefficient lists by the Euclidean remainder sequence.

    Characteristic 2 removes every sign from the usual recursion
    Res(f, g) = lc(g)^(deg f - deg r) Res(g, r), r = f mod g.
    """
    f = _trim(list(f))
    g = _trim(list(g))
    acc = 1
    while True:
        if not f or not g:
            return 0
        if len(g) == 1:
            return F.mul(acc, F.pow(g[0], len(f) - 1))
        if len(f) == 1:
            return F.mul(acc, F.pow(f[0], len(g) - 1))
        r = _field_mod(f, g, F)
        if not r:
            return 0
        acc = F.mul(acc, F.pow(g[-1], len(f) - len(r)))
        f, g = g, r


def formal_resultant(f: list, g: list, deg_f: int, deg_g: int, F) -> int:
    """Sylvester determinant for formal degrees deg_f, deg_g.

    When the specialised leading coefficient of one side vanishes, the
    determinant picks up a power of the other side's leading coefficient;
    when both vanish the first column is zero.
    """
    f = _trim(list(f))
    g = _trim(list(g))
    if not f or not g:
        return 0
    df, dg = len(f) - 1, len(g) - 1
    if df < deg_f and dg < deg_g:
        return 0
    base = field_resultant(f, g, F)
    if df < deg_f:
        return F.mul(base, F.pow(g[-1], deg_f - df))
    if dg < deg_g:
        return F.mul(base, F.pow(f[-1], deg_g - dg))
    return base


# -- multivariate resultants ------------------------------------------------------


def degree_bounds(f: MPoly, g: MPoly, var: str) -> dict[str, int]:
    """deg_w Res <= deg_var(f) deg_w(g) + deg_var(g) deg_w(f) for every other w."""
    n, m = f.degree(var), g.degree(var)
    others = sorted(set(f.variables()) | set(g.variables()) - {var}, key=VARS.index)
    out = {}
    for w in others:
        if w == var:
            continue
        out[w] = n * max(g.degree(w), 0) + m * max(f.degree(w), 0)
    return out


_FIELD_CACHE: dict[int, _LogField] = {}


def _interp_field(points_needed: int) -> _LogField:
    s = max(8, points_needed.bit_length() + 1)
    if s not in _FIELD_CACHE:
        _FIELD_CACHE[s] = _LogField(gf2n.field_new(s))
    return _FIELD_CACHE[s]


def _newton_interpolate(F: _LogField, pts: np.ndarray, vals: np.ndarray) -> np.ndarray:
    """Coefficients (low first) along axis -1 of vals, for distinct pts.

    Works on a batch: vals has shape (lines, len(pts)).
    """
    k = len(pts)
    c = np.array(vals, dtype=np.int64, copy=True)
    for j in range(1, k):
        num = c[:, j:] ^ c[:, j - 1:-1]
        den = pts[j:] ^ pts[:k - j]
        c[:, j:] = F.vmul(num, F.vinv(den)[None, :])
    # Newton form to monomial basis by Horner on (X - p_j)
    poly = np.zeros_like(c)
    poly[:, 0] = c[:, k - 1]
    for j in range(k - 2, -1, -1):
        shifted = np.zeros_like(poly)
        shifted[:, 1:] = poly[:, :-1]
        poly = shifted ^ F.vmul(poly, np.int64(pts[j]))
        poly[:, 0] ^= c[:, j]
    return poly


def _vec_eval_coeff(coeff: MPoly, grid: dict[str, np.ndarray], F, shape) -> np.ndarray:
    acc = np.zeros(shape, dtype=np.int64)
    cache = {}
    for t in coeff.terms:
        val = np.ones(shape, dtype=np.int64)
        for v, e in zip(VARS, _exps(t)):
            if e:
                key = (v, e)
                if key not in cache:
                    cache[key] = F.vpow(grid[v], e)
                val = F.vmul(val, cache[key])
        acc ^= val
    return acc


def _resultant_interp(f: MPoly, g: MPoly, var: str, bounds: dict[str, int]) -> MPoly:
    names = [w for w in bounds]
    sizes = [bounds[w] + 1 for w in names]
    F = _interp_field(max(sizes, default=1))
    axes = [np.arange(1, s + 1, dtype=np.int64) for s in sizes]
    if names:
        mesh = np.meshgrid(*axes, indexing="ij")
        grid = {w: mesh[i].ravel() for i, w in enumerate(names)}
        npts = int(np.prod(sizes))
    else:
        grid = {}
        npts = 1
    shape = (npts,)
    fc = [_vec_eval_coeff(c, grid, F, shape) for c in f.coeffs(var)]
    gc = [_vec_eval_coeff(c, grid, F, shape) for c in g.coeffs(var)]
    fa = np.stack(fc, axis=1).tolist()
    ga = np.stack(gc, axis=1).tolist()
    df, dg = len(fc) - 1, len(gc) - 1
    vals = np.array([formal_resultant(a, b, df, dg, F) for a, b in zip(fa, ga)], dtype=np.int64)
    # tensor Newton interpolation, one axis at a time
    vals = vals.reshape(sizes) if names else vals.reshape(())
    for ax, w in enumerate(names):
        moved = np.moveaxis(vals, ax, -1)
        lead_shape = moved.shape[:-1]
        flat = moved.reshape(-1, moved.shape[-1])
        coeffs = _newton_interpolate(F, axes[ax], flat)
        vals = np.moveaxis(coeffs.reshape(lead_shape + (moved.shape[-1],)), -1, ax)
    if np.any((vals != 0) & (vals != 1)):
        raise ArithmeticError("interpolated resultant has coefficients outside GF(2)")
    terms = []
    for idx in zip(*np.nonzero(vals)) if names else ([()] if int(vals) else []):
        exps = dict(zip(names, (int(i) for i in idx)))
        terms.append(_pack(tuple(exps.get(v, 0) for v in VARS)))
    return MPoly(terms)


def sylvester_matrix(f: MPoly, g: MPoly, var: str) -> list[list[MPoly]]:
    a = f.coeffs(var)[::-1]  # leading coefficient first
    b = g.coeffs(var)[::-1]
    n, m = len(a) - 1, len(b) - 1
    size = n + m
    zero = MPoly.zero()
    rows = []
    for i in range(m):
        rows.append([zero] * i + a + [zero] * (size - n - 1 - i))
    for i in range(n):
        rows.append([zero] * i + b + [zero] * (size - m - 1 - i))
    return rows


def bareiss_determinant(mat: list[list[MPoly]]) -> MPoly:
    """Fraction-free elimination with exact multivariate division."""
    a = [list(row) for row in mat]
    size = len(a)
    prev = MPoly.one()
    for k in range(size - 1):
        if not a[k][k]:
            for r in range(k + 1, size):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]  # sign is irrelevant in characteristic 2
                    break
            else:
                return MPoly.zero()
        piv = a[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                num = piv * a[i][j] + a[i][k] * a[k][j]
                a[i][j] = num if prev == 1 else mp_divexact(num, prev)
        prev = piv
    return a[size - 1][size - 1]


def resultant(f: MPoly, g: MPoly, var: str, method: str = "auto", max_points: int = 4_000_000) -> MPoly:
    """Res(f, g) with respect to var, as a polynomial in the remaining variables.

    ``interp`` evaluates the Sylvester determinant at a grid of points of a
    large enough GF(2^s) and interpolates; ``bareiss`` expands the
    determinant symbolically.  ``auto`` interpolates unless the grid would
    exceed max_points.
    """
    _check_var(var)
    if f.degree(var) < 1 or g.degree(var) < 1:
        raise DegreeZeroInVariable(f"both inputs need positive degree in {var}")
    if method == "bareiss":
        return bareiss_determinant(sylvester_matrix(f, g, var))
    bounds = degree_bounds(f, g, var)
    npts = math.prod(b + 1 for b in bounds.values())
    if method == "auto" and npts > max_points:
        return bareiss_determinant(sylvester_matrix(f, g, var))
    if method not in ("auto", "interp"):
        raise ValueError(f"unknown resultant method {method!r}")
    return _resultant_interp(f, g, var, bounds)


def resultant_univariate_oracle(
    f: MPoly, g: MPoly, var: str, ctx: gf2n.FieldCtx, point: dict[str, int]
) -> int:
    """Specialise every variable but var at point, then Euclid over the field."""
    fc = [mp_eval(c, ctx, point) for c in f.coeffs(var)]
    gc = [mp_eval(c, ctx, point) for c in g.coeffs(var)]
    if not fc or not gc or fc[-1] == 0 or gc[-1] == 0:
        raise LeadingCoefficientVanished(f"leading coefficient in {var} vanishes at {point}")

    class _Scalar:
        mul = staticmethod(ctx.mul)
        inv = staticmethod(ctx.inv)
        pow = staticmethod(ctx.pow)

    return field_resultant(fc, gc, _Scalar)


def univariate(p: MPoly, var: str = "x") -> int:
    """The BitPoly of a polynomial that only involves var."""
    return p.to_bitpoly(var)


def from_factors(pairs) -> MPoly:
    """Expand [(MPoly, multiplicity)] into a single polynomial."""
    return reduce(lambda acc, pk: acc * (pk[0] ** pk[1]), pairs, MPoly.one())


def gf2_univariate_str(f: int, var: str = "x") -> str:
    return mp_print(MPoly.from_bitpoly(f, var))


__all__ = [
    "MPoly",
    "VARS",
    "mp_parse",
    "mp_print",
    "mp_eval",
    "mp_eval_vec",
    "mp_divmod",
    "mp_divexact",
    "resultant",
    "resultant_univariate_oracle",
    "sylvester_matrix",
    "bareiss_determinant",
    "degree_bounds",
    "field_resultant",
    "formal_resultant",
    "gf2poly",
]
