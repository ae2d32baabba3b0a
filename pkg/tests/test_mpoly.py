import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from zeroapn import gf2n, gf2poly
from zeroapn.errors import (
    DegreeZeroInVariable,
    InexactDivision,
    LeadingCoefficientVanished,
    MissingVariable,
    PolySyntaxError,
    UnknownVariable,
)
from zeroapn.mpoly import (
    VARS,
    MPoly,
    degree_bounds,
    mp_divexact,
    mp_divmod,
    mp_eval,
    mp_eval_vec,
    mp_parse,
    mp_print,
    resultant,
    resultant_univariate_oracle,
)

from oracles import sympy_resultant_gf2

EQ3A = "y^2*x^2+y^2*x+y^2+x^3+x^2+x"
EQ3B = "xy^2+xy+x+y^3+y^2+y"


def rand_mpoly(rng, nvars=3, terms=6, maxdeg=4):
    vecs = [[rng.randint(0, maxdeg) for _ in range(nvars)] for _ in range(terms)]
    return MPoly.from_exponents(vecs)


def test_parse_and_print():
    p = mp_parse(EQ3A)
    assert len(p) == 6
    assert mp_parse("x+x") == 0
    assert mp_print(p) == "x^2*y^2+x^3+x*y^2+x^2+y^2+x"
    assert mp_parse("(x+1)^2") == mp_parse("x^2+1")
    assert mp_parse("2x") == 0 and mp_parse("3x") == mp_parse("x")
    with pytest.raises(UnknownVariable):
        mp_parse("x+w")
    with pytest.raises(PolySyntaxError):
        mp_parse("x+(y")


def test_print_parse_round_trip_100():
    rng = random.Random(7)
    for _ in range(100):
        p = rand_mpoly(rng, nvars=5, terms=rng.randint(0, 10), maxdeg=6)
        s = mp_print(p)
        assert mp_parse(s) == p
        assert mp_print(mp_parse(s)) == s


@given(st.integers(0, 2**32), st.integers(0, 2**32), st.integers(0, 2**32))
def test_ring_laws(a, b, c):
    rng = random.Random(a ^ (b << 1) ^ (c << 2))
    p, q, r = (rand_mpoly(rng) for _ in range(3))
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)
    assert p.square() == p * p
    assert p ** 3 == p * p * p


def test_division():
    rng = random.Random(3)
    for _ in range(50):
        p, q = rand_mpoly(rng), rand_mpoly(rng)
        if not q:
            continue
        assert mp_divexact(p * q, q) == p
        quo, rem = mp_divmod(p, q)
        assert quo * q + rem == p
    with pytest.raises(InexactDivision):
        mp_divexact(mp_parse("x^2+y"), mp_parse("x+1"))


def test_eval():
    ctx = gf2n.field_new(8)
    assert mp_eval(mp_parse("x+y"), ctx, {"x": 77, "y": 77}) == 0
    assert mp_eval(MPoly.one(), ctx, {}) == 1
    with pytest.raises(MissingVariable):
        mp_eval(mp_parse("x+y"), ctx, {"x": 1})


def test_eval_eq3a_matches_scalar_equation():
    ctx = gf2n.field_new(9)
    d, m = 35, 4
    eq = mp_parse(EQ3A)
    for c in range(ctx.order):
        lhs = ctx.pow(c ^ 1, d) ^ ctx.pow(c, d) ^ 1
        v = mp_eval(eq, ctx, {"x": c, "y": ctx.pow(c, 1 << m)})
        assert (lhs == 0) == (v == 0)


def test_eval_vec_matches_scalar():
    rng = random.Random(11)
    ctx = gf2n.field_new(7)
    xs = np.arange(ctx.order)
    for _ in range(10):
        p = rand_mpoly(rng, nvars=3, terms=8, maxdeg=9)
        asg = {v: np.array([rng.randrange(ctx.order) for _ in xs]) for v in VARS[:3]}
        got = mp_eval_vec(p, ctx, asg)
        want = [mp_eval(p, ctx, {v: int(asg[v][i]) for v in asg}) for i in range(len(xs))]
        assert got.tolist() == want


def test_small_resultants():
    assert resultant(mp_parse("y+x"), mp_parse("y+x+1"), "y") == 1
    assert resultant(mp_parse("y+x^2"), mp_parse("y^2+y+x"), "y") == mp_parse("x^4+x^2+x")
    with pytest.raises(DegreeZeroInVariable):
        resultant(mp_parse("x"), mp_parse("y+1"), "y")


def test_resultant_eq3():
    r = resultant(mp_parse(EQ3A), mp_parse(EQ3B), "y")
    assert str(gf2poly.factorize(r.to_bitpoly())) == "x*(x+1)*(x^2+x+1)^4"


@pytest.mark.parametrize("seed", range(25))
def test_resultant_matches_sympy(seed):
    rng = random.Random(seed)
    f = rand_mpoly(rng, nvars=3, terms=5, maxdeg=3) + MPoly.var("y", 3)
    g = rand_mpoly(rng, nvars=3, terms=5, maxdeg=3) + MPoly.var("y", 2)
    want = sympy_resultant_gf2(f, g, "y")
    assert resultant(f, g, "y", method="interp") == want
    assert resultant(f, g, "y", method="bareiss") == want


def test_common_factor_gives_zero():
    rng = random.Random(5)
    h = mp_parse("y+x")
    for _ in range(10):
        f = h * rand_mpoly(rng)
        g = h * rand_mpoly(rng)
        if f.degree("y") >= 1 and g.degree("y") >= 1:
            assert resultant(f, g, "y") == 0


def test_degree_bound():
    rng = random.Random(9)
    for _ in range(20):
        f = rand_mpoly(rng) + MPoly.var("y", 2)
        g = rand_mpoly(rng) + MPoly.var("y", 3)
        r = resultant(f, g, "y")
        for v, bound in degree_bounds(f, g, "y").items():
            assert r.degree(v) <= bound
            assert bound <= f.degree("y") * g.degree(v) + g.degree("y") * f.degree(v)


def test_specialization_identity_200():
    rng = random.Random(200)
    ctx = gf2n.field_new(16)
    checked = 0
    while checked < 200:
        f = rand_mpoly(rng, nvars=3, terms=5, maxdeg=3) + MPoly.var("z", 2)
        g = rand_mpoly(rng, nvars=3, terms=5, maxdeg=3) + MPoly.var("z", 1)
        if f.degree("z") < 1 or g.degree("z") < 1:
            continue
        r = resultant(f, g, "z")
        point = {"x": rng.randrange(ctx.order), "y": rng.randrange(ctx.order)}
        try:
            want = resultant_univariate_oracle(f, g, "z", ctx, point)
        except LeadingCoefficientVanished:
            continue
        assert mp_eval(r, ctx, point) == want
        checked += 1


def test_oracle_edge_cases():
    ctx = gf2n.field_new(16)
    one = mp_parse("y+1")
    assert resultant_univariate_oracle(one, one, "y", ctx, {}) == 0
    f, g = mp_parse(EQ3A), mp_parse(EQ3B)
    r = resultant(f, g, "y")
    rng = random.Random(1)
    for _ in range(50):
        c = rng.randrange(ctx.order)
        try:
            assert resultant_univariate_oracle(f, g, "y", ctx, {"x": c}) == mp_eval(r, ctx, {"x": c})
        except LeadingCoefficientVanished:
            pass
    with pytest.raises(LeadingCoefficientVanished):
        resultant_univariate_oracle(mp_parse("x*y+1"), one, "y", ctx, {"x": 0})


def test_resultant_vanishes_on_common_zeros():
    ctx = gf2n.field_new(6)
    f = mp_parse("x*y+y^2+x+1")
    g = mp_parse("y^3+x^2*y+x")
    r = resultant(f, g, "y")
    for a in range(ctx.order):
        for b in range(ctx.order):
            pt = {"x": a, "y": b}
            if mp_eval(f, ctx, pt) == 0 and mp_eval(g, ctx, pt) == 0:
                assert mp_eval(r, ctx, {"x": a}) == 0
