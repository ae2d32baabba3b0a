"""CCZ-equivalence of power maps via cyclotomic cosets, and a family catalog.

Two power maps x^d and x^e on GF(2^n) are CCZ-equivalent exactly when e is
in the 2-cyclotomic coset of d modulo 2^n - 1, or d is invertible modulo
2^n - 1 and e is in the coset of its inverse.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from importlib import resources
from itertools import product
from pathlib import Path

from .errors import CatalogError, ExponentOutOfRange
from .exprs import Constraint, Expr, parse_constraints
from .families import MIN_M, all_families

KINDS = ("APN-classical", "paper-family", "prior-0APN")


def _check_range(d: int, n: int):
    if not 1 <= d <= (1 << n) - 2:
        raise ExponentOutOfRange(f"exponent {d} outside [1, 2^{n}-2]")


@dataclass(frozen=True)
class Coset:
    n: int
    members: tuple[int, ...]

    @property
    def leader(self) -> int:
        return self.members[0]

    def __contains__(self, e: int) -> bool:
        return e % ((1 << self.n) - 1) in self.members

    def __len__(self):
        return len(self.members)


def cyclotomic_coset(d: int, n: int) -> Coset:
    _check_range(d, n)
    q = (1 << n) - 1
    seen = set()
    e = d
    for _ in range(n):
        seen.add(e)
        e = (2 * e) % q
    return Coset(n, tuple(sorted(seen)))


def inverse_exponent(d: int, n: int) -> int | None:
    q = (1 << n) - 1
    if math.gcd(d, q) != 1:
        return None
    return pow(d, -1, q)


def ccz_equivalent_power(d: int, e: int, n: int) -> bool:
    _check_range(d, n)
    _check_range(e, n)
    if e in cyclotomic_coset(d, n):
        return True
    dinv = inverse_exponent(d, n)
    return dinv is not None and e in cyclotomic_coset(dinv, n)


# -- catalog ---------------------------------------------------------------------


@dataclass
class FamilyCatalogEntry:
    name: str
    kind: str
    exponent: Expr
    constraints: list[Constraint] = field(default_factory=list)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise CatalogError(f"{self.name}: unknown kind {self.kind!r}")

    @property
    def parameters(self) -> list[str]:
        names = set(self.exponent.names)
        for c in self.constraints:
            names |= c.names
        return [p for p in ("m", "i") if p in names]

    def instances(self, n: int) -> list[tuple[dict, int]]:
        """[(params, d)] for every parameter choice valid at n, d reduced mod 2^n-1."""
        q = (1 << n) - 1
        params = self.parameters
        out = []
        seen = set()
        for values in product(range(1, n + 2), repeat=len(params)):
            env = dict(zip(params, values), n=n)
            try:
                if not all(c(**env) for c in self.constraints):
                    continue
                d = self.exponent(**env)
            except (ZeroDivisionError, CatalogError):
                continue
            d %= q
            if d == 0 or d in seen:
                continue
            seen.add(d)
            out.append(({p: env[p] for p in params}, d))
        return out

    def exponents(self, n: int) -> list[int]:
        return [d for _, d in self.instances(n)]

    def to_line(self) -> str:
        cons = "; ".join(str(c) for c in self.constraints)
        return f"{self.name} | {self.kind} | {self.exponent} | {cons}"


def parse_catalog(text: str, source: str = "<catalog>") -> list[FamilyCatalogEntry]:
    entries = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split("|")]
        if len(parts) not in (3, 4):
            raise CatalogError(f"{source}:{lineno}: expected 'name | kind | exponent | constraints'")
        name, kind, expr = parts[:3]
        cons = parse_constraints(parts[3]) if len(parts) == 4 else []
        entries.append(FamilyCatalogEntry(name, kind, Expr(expr), cons))
    return entries


def table_entries() -> list[FamilyCatalogEntry]:
    """The Table-1 families as catalog entries named family-<id>."""
    out = []
    for fam in all_families():
        cons = [Constraint(f"n = {fam.n_formula}"), Constraint(f"m >= {MIN_M}")]
        out.append(
            FamilyCatalogEntry(f"family-{fam.id}", "paper-family", fam.d_formula, cons + list(fam.constraints))
        )
    return out


def load_catalog(extra: str | Path | None = None) -> list[FamilyCatalogEntry]:
    """Built-in catalog (classical APN, Table-1 families, prior 0-APN) plus an optional file."""
    text = resources.files("zeroapn.data").joinpath("catalog.txt").read_text()
    entries = parse_catalog(text, "catalog.txt") + table_entries()
    if extra is not None:
        entries += parse_catalog(Path(extra).read_text(), str(extra))
    names = [e.name for e in entries]
    dup = {x for x in names if names.count(x) > 1}
    if dup:
        raise CatalogError(f"duplicate catalog names: {sorted(dup)}")
    return entries


def classify(d: int, n: int, catalog: list[FamilyCatalogEntry] | None = None) -> list[str]:
    """Names of catalog entries with an exponent at n CCZ-equivalent to d."""
    _check_range(d, n)
    catalog = load_catalog() if catalog is None else catalog
    hits = []
    for entry in catalog:
        if any(ccz_equivalent_power(d, e, n) for e in entry.exponents(n)):
            hits.append(entry.name)
    return hits


def _label(entry: FamilyCatalogEntry, params: dict) -> str:
    if not params:
        return entry.name
    inner = ",".join(f"{k}={v}" for k, v in params.items())
    return f"{entry.name}({inner})"


def pairwise_inequivalence_report(entries: list[FamilyCatalogEntry], n: int) -> dict:
    """Full ccz_equivalent_power matrix over every instance of the entries at n."""
    labels, kinds, exps = [], [], []
    for entry in entries:
        for params, d in entry.instances(n):
            labels.append(_label(entry, params))
            kinds.append(entry.kind)
            exps.append(d)
    matrix = [[ccz_equivalent_power(a, b, n) for b in exps] for a in exps]
    return {
        "n": n,
        "labels": labels,
        "kinds": kinds,
        "exponents": exps,
        "cosets": [cyclotomic_coset(d, n).leader for d in exps],
        "matrix": matrix,
    }


def equivalent_pairs(report: dict) -> list[tuple[str, str]]:
    out = []
    labels = report["labels"]
    for i, row in enumerate(report["matrix"]):
        for j in range(i + 1, len(row)):
            if row[j]:
                out.append((labels[i], labels[j]))
    return out
