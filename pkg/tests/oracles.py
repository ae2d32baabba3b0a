"""Independent reference implementations used only by the tests."""

import sympy as sp

SYMS = sp.symbols("x y z u v")


def bits_to_sympy(f: int, var=SYMS[0]):
    return sum(var**i for i in range(f.bit_length()) if (f >> i) & 1)


def sympy_factor_gf2(f: int):
    """[(bitpoly, multiplicity)] from sympy's GF(2) factorizer, sorted like ours."""
    x = SYMS[0]
    _, facs = sp.Poly(bits_to_sympy(f), x, modulus=2).factor_list()
    out = []
    for p, k in facs:
        coeffs = p.all_coeffs()[::-1]
        out.append((sum((int(c) % 2) << i for i, c in enumerate(coeffs)), k))
    return sorted(out, key=lambda t: (t[0].bit_length(), t[0]))


def mpoly_to_sympy(p):
    from zeroapn.mpoly import _exps

    return sum(sp.Mul(*[s**e for s, e in zip(SYMS, _exps(t))]) for t in p.terms) if p.terms else sp.Integer(0)


def sympy_resultant_gf2(f, g, var: str):
    """Resultant over ZZ of the 0/1 lifts, reduced mod 2, as an MPoly."""
    from zeroapn.mpoly import VARS, MPoly

    s = SYMS[VARS.index(var)]
    r = sp.resultant(mpoly_to_sympy(f), mpoly_to_sympy(g), s)
    r = sp.Poly(sp.expand(r), *SYMS)
    vecs = [m for m, c in r.terms() if int(c) % 2]
    return MPoly.from_exponents(vecs)


def naive_field_mul(a: int, b: int, modulus: int) -> int:
    """Schoolbook product then long-division reduction."""
    prod = 0
    for i in range(b.bit_length()):
        if (b >> i) & 1:
            prod ^= a << i
    n = modulus.bit_length() - 1
    for i in range(prod.bit_length() - 1, n - 1, -1):
        if (prod >> i) & 1:
            prod ^= modulus << (i - n)
    return prod
