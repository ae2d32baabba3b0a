"""Exhaustive checks of family instances and of the transcribed systems."""

from __future__ import annotations

import time

import numpy as np

from .. import diffprops, gf2n
from ..errors import FieldTooLarge
from ..families import all_families, get_family
from ..mpoly import VARS, mp_eval_vec
from . import theorems
from .systems import load_system

CONJUGATE_LIMIT = 16


def verify_family_exhaustive(fid: int, m: int, force: bool = False, threads: int = 1, modulus: int | None = None) -> dict:
    """0-APN verdict and differential uniformity of family ``fid`` at m."""
    fam = get_family(fid)
    d, n = fam.instantiate(m)
    if n > diffprops.SCAN_LIMIT and not force:
        raise FieldTooLarge(f"n={n} exceeds the default scan ceiling {diffprops.SCAN_LIMIT}; pass force")
    pm = diffprops.PowerMap(gf2n.field_new(n, modulus), d)
    t0 = time.perf_counter()
    zero_apn, wit = diffprops.is_zero_apn(pm, threads=threads)
    uni = diffprops.differential_uniformity(pm, force=force) if n <= diffprops.TABLE_LIMIT else None
    report = {
        "family": fid,
        "m": m,
        "n": n,
        "d": d,
        "modulus_hex": pm.ctx.modulus_hex,
        "zero_apn": zero_apn,
        "uniformity": uni,
        "witnesses": [format(w, "x") for w in wit],
    }
    if (d, n) in fam.examples:
        report["example"] = True
        report["example_ok"] = bool(zero_apn and uni is not None and uni > 2)
    report["elapsed_ms"] = round((time.perf_counter() - t0) * 1000, 3)
    return report


def _family_for_case(slug: str):
    return next(f for f in all_families() if f.case == slug)


def conjugate_system_report(tag: str, m: int, modulus: int | None = None) -> dict:
    """Compare, over all of GF(2^n), the scalar 0-APN equation with the system.

    The system is evaluated at (x, y, z, ...) = (c, c^(2^m), c^(2^(2m)), ...).
    """
    slug = theorems.resolve(tag)
    fam = _family_for_case(slug)
    d, n = fam.instantiate(m)
    if n > CONJUGATE_LIMIT:
        raise FieldTooLarge(f"n={n} exceeds {CONJUGATE_LIMIT} for the conjugate-system check")
    ctx = gf2n.field_new(n, modulus)
    system = load_system(slug)
    cs = np.arange(ctx.order, dtype=np.int64)
    table = gf2n.power_table(ctx, d).astype(np.int64)
    scalar = (table[cs ^ 1] ^ table[cs] ^ 1) == 0

    used = sorted({v for eq in system.equations.values() for v in eq.variables()}, key=VARS.index)
    assignment = {}
    frob = gf2n.power_table(ctx, 1 << (m % n)).astype(np.int64)  # c -> c^(2^m)
    cur = cs
    for v in VARS[: max(VARS.index(v) for v in used) + 1]:
        assignment[v] = cur
        cur = frob[cur]
    values = [mp_eval_vec(eq, ctx, assignment) for eq in system.equations.values()]
    vanish = np.ones(ctx.order, dtype=bool)
    for v in values:
        vanish &= v == 0

    # each eq_j should be eq1 pushed through x -> x^(2^((j-1)m)), up to a
    # further power of two coming from how the printed equation was normalised
    square = gf2n.power_table(ctx, 2).astype(np.int64)
    twists = []
    for j, v in enumerate(values):
        w = values[0]
        for _ in range(j):
            w = frob[w]
        found = None
        for t in range(n):
            if np.array_equal(w, v):
                found = t
                break
            w = square[w]
        twists.append(found)

    mismatch = np.nonzero(scalar != vanish)[0]
    return {
        "case": slug,
        "family": fam.id,
        "m": m,
        "n": n,
        "d": d,
        "solutions": int(scalar.sum()),
        "system_solutions": int(vanish.sum()),
        "frobenius_twists": twists,
        "agree": mismatch.size == 0 and None not in twists,
        "mismatches": [format(int(c), "x") for c in mismatch[:16]],
    }


def verify_conjugate_system(tag: str, m: int, modulus: int | None = None) -> bool:
    return conjugate_system_report(tag, m, modulus)["agree"]


def smallest_m(tag: str, limit: int = CONJUGATE_LIMIT) -> int | None:
    """Smallest valid m of the case's family with n(m) <= limit."""
    fam = _family_for_case(theorems.resolve(tag))
    ms = fam.valid_m(limit)
    return ms[0] if ms else None
