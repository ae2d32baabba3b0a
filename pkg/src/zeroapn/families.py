"""The fourteen Table-1 families of 0-APN power maps x^d over GF(2^n).

Rows live in ``data/families.toml``; each gives d and n as expressions in m,
its congruence exclusions, the proof case that covers it and the published
(d, n) examples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from .errors import ConstraintViolated, MTooSmall, NotApplicable
from .exprs import Constraint, Expr

MIN_M = 2


@dataclass(frozen=True)
class FamilySpec:
    id: int
    d_formula: Expr
    n_formula: Expr
    constraints: tuple[Constraint, ...]
    case: str
    printed: bool
    examples: tuple[tuple[int, int], ...]
    subfield_degree: int | None = None

    def n(self, m: int) -> int:
        return self.n_formula(m=m)

    def d(self, m: int) -> int:
        return self.d_formula(m=m)

    def violated(self, m: int) -> Constraint | None:
        for c in self.constraints:
            if not c(m=m, n=self.n(m)):
                return c
        return None

    def valid(self, m: int) -> bool:
        return m >= MIN_M and self.violated(m) is None

    def instantiate(self, m: int) -> tuple[int, int]:
        if m < MIN_M:
            raise MTooSmall(f"family {self.id}: m={m} < {MIN_M}")
        bad = self.violated(m)
        if bad is not None:
            raise ConstraintViolated(self.id, m, str(bad))
        return self.d(m), self.n(m)

    def valid_m(self, n_max: int) -> list[int]:
        """Every valid m with n(m) <= n_max (n grows with m)."""
        out = []
        m = MIN_M
        while self.n(m) <= n_max:
            if self.valid(m):
                out.append(m)
            m += 1
        return out

    def m_for_n(self, n: int) -> int | None:
        """The m with n(m) = n, if any (regardless of constraints)."""
        m = MIN_M
        while self.n(m) < n:
            m += 1
        return m if self.n(m) == n else None

    def example_m(self) -> list[int]:
        """m values reproducing the listed examples."""
        out = []
        for d, n in self.examples:
            m = self.m_for_n(n)
            if m is None or self.d(m) != d:
                raise ValueError(f"family {self.id}: example {(d, n)} not on the family")
            out.append(m)
        return out


def _parse(row: dict) -> FamilySpec:
    return FamilySpec(
        id=int(row["id"]),
        d_formula=Expr(row["d"]),
        n_formula=Expr(row["n"]),
        constraints=tuple(Constraint(c) for c in row.get("constraints", [])),
        case=row["case"],
        printed=bool(row["printed"]),
        examples=tuple((int(d), int(n)) for d, n in row.get("examples", [])),
        subfield_degree=row.get("subfield_degree"),
    )


@lru_cache(maxsize=None)
def _families() -> tuple[FamilySpec, ...]:
    raw = resources.files("zeroapn.data").joinpath("families.toml").read_text()
    rows = tomllib.loads(raw)["family"]
    return tuple(sorted((_parse(r) for r in rows), key=lambda f: f.id))


def all_families() -> tuple[FamilySpec, ...]:
    return _families()


def get_family(fid: int) -> FamilySpec:
    for f in _families():
        if f.id == fid:
            return f
    raise KeyError(f"no family with id {fid}; ids run 1..{len(_families())}")


def family_instantiate(fid: int, m: int) -> tuple[int, int]:
    """(d, n) of family ``fid`` at parameter m."""
    return get_family(fid).instantiate(m)


def subfield_membership_check(n: int, k: int) -> bool:
    """True when GF(2^k) meets GF(2^n) only in GF(2), i.e. gcd(k, n) = 1."""
    return math.gcd(k, n) == 1


def constraint_gcd_check(fid: int, m: int) -> bool:
    """gcd(k, n(m)) = 1 for the family's subfield degree k."""
    fam = get_family(fid)
    if fam.subfield_degree is None:
        raise NotApplicable(f"family {fid} has no subfield-degree argument")
    return subfield_membership_check(fam.n(m), fam.subfield_degree)
