import random

import pytest

from zeroapn import diffprops as dp
from zeroapn import equiv, gf2n
from zeroapn.errors import CatalogError, ExponentOutOfRange
from zeroapn.exprs import Constraint, Expr


def test_coset_examples():
    assert equiv.cyclotomic_coset(3, 5).members == (3, 6, 12, 17, 24)
    assert equiv.cyclotomic_coset(1, 6).members == (1, 2, 4, 8, 16, 32)
    with pytest.raises(ExponentOutOfRange):
        equiv.cyclotomic_coset(31, 5)
    with pytest.raises(ExponentOutOfRange):
        equiv.cyclotomic_coset(0, 5)


def test_coset_size_divides_n():
    rng = random.Random(200)
    for _ in range(200):
        n = rng.randint(2, 20)
        d = rng.randint(1, (1 << n) - 2)
        c = equiv.cyclotomic_coset(d, n)
        assert n % len(c) == 0
        q = (1 << n) - 1
        assert all((2 * e) % q in c for e in c.members)


def test_ccz_examples():
    assert equiv.ccz_equivalent_power(3, 6, 5)
    assert equiv.ccz_equivalent_power(3, 21, 5)
    assert not equiv.ccz_equivalent_power(3, 5, 5)
    # gcd(3, 63) = 3: no inverse branch
    assert equiv.inverse_exponent(3, 6) is None


@pytest.mark.parametrize("n", range(2, 9))
def test_ccz_reflexive_symmetric_coset_respecting(n):
    q = (1 << n) - 1
    rng = random.Random(n)
    ds = range(1, q) if n <= 6 else rng.sample(range(1, q), 40)
    for d in ds:
        assert equiv.ccz_equivalent_power(d, d, n)
        for e in range(1, q):
            r = equiv.ccz_equivalent_power(d, e, n)
            assert r == equiv.ccz_equivalent_power(e, d, n)
            assert r == equiv.ccz_equivalent_power((2 * d) % q, e, n)


@pytest.mark.parametrize("n", range(2, 9))
def test_zero_apn_constant_on_cosets(n):
    ctx = gf2n.field_new(n)
    q = ctx.order - 1
    seen = {}
    for d in range(1, q):
        lead = equiv.cyclotomic_coset(d, n).leader
        v = dp.is_zero_apn(dp.PowerMap(ctx, d))[0]
        assert seen.setdefault(lead, v) == v


def test_classify_examples():
    assert "Gold" in equiv.classify(3, 7)
    for n in (5, 6, 8):
        assert "Inverse" in equiv.classify((1 << n) - 2, n)
    hits = equiv.classify(35, 9)
    assert {"family-1", "family-12"} <= set(hits)
    cat = {e.name: e.kind for e in equiv.load_catalog()}
    assert not any(cat[h] == "APN-classical" for h in hits)
    assert equiv.classify(27, 10) == ["family-14"]
    assert "family-10" not in equiv.classify(27, 10)


def test_catalog_entries_in_range():
    for e in equiv.load_catalog():
        for n in range(3, 16):
            for d in e.exponents(n):
                assert 1 <= d <= (1 << n) - 2


def test_catalog_parsing_and_extension(tmp_path):
    extra = tmp_path / "extra.txt"
    extra.write_text("Mine | prior-0APN | 2^m+5 | n = 2m+1\n")
    cat = equiv.load_catalog(extra)
    mine = next(e for e in cat if e.name == "Mine")
    assert mine.exponents(9) == [21]
    with pytest.raises(CatalogError):
        equiv.parse_catalog("X | bogus-kind | 3")
    with pytest.raises(CatalogError):
        equiv.parse_catalog("X | APN-classical")
    extra.write_text("Gold | APN-classical | 3\n")
    with pytest.raises(CatalogError):
        equiv.load_catalog(extra)


def test_expressions():
    assert Expr("5·2^(m-1)+1")(m=4) == 41
    assert Expr("3(2^m-1)")(m=4) == 45
    assert Expr("2^(2m+1)-3*2^(m-1)+1")(m=3) == 117
    assert Constraint("m != 5 mod 14")(m=19) is False
    assert Constraint("gcd(i, n) = 1")(i=2, n=9) is True
    with pytest.raises(CatalogError):
        Expr("__import__('os')")
    with pytest.raises(CatalogError):
        Expr("q+1")


def test_report_single_and_pair():
    cat = {e.name: e for e in equiv.load_catalog()}
    rep = equiv.pairwise_inequivalence_report([cat["Inverse"]], 7)
    assert rep["matrix"] == [[True]]
    rep = equiv.pairwise_inequivalence_report([cat["family-1"], cat["family-12"]], 9)
    assert rep["exponents"] == [35, 35] and rep["matrix"][0][1]


def test_new_families_at_11():
    cat = [e for e in equiv.load_catalog() if e.kind == "paper-family"]
    ents = [e for e in cat if e.exponents(11)]
    assert sorted(int(e.name.split("-")[1]) for e in ents) == [1, 2, 3, 4, 8, 9, 10, 11]
    rep = equiv.pairwise_inequivalence_report(ents, 11)
    exps = rep["exponents"]
    for i, row in enumerate(rep["matrix"]):
        for j, v in enumerate(row):
            if i != j:
                assert v == (exps[i] == exps[j])
