"""Constructors for the standard examples and an exhaustive census of
small UP-algebras up to isomorphism."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path

from .core import UpAlgebra, default_names, derived_laws, make_algebra, validate
from .errors import OrderOutOfRange, UnknownName
from .morphism import canonical_form

log = logging.getLogger(__name__)

MAX_ORDER = 5
HARD_MAX_ORDER = 6


# --------------------------------------------------------------------------
# named examples

_BUILTIN = {
    "paper4": (
        ("0", "a", "b", "c"),
        (
            (0, 1, 2, 3),
            (0, 0, 0, 0),
            (0, 1, 0, 3),
            (0, 1, 2, 0),
        ),
    ),
    "paper5": (
        ("0", "a", "b", "c", "d"),
        (
            (0, 1, 2, 3, 4),
            (0, 0, 2, 3, 4),
            (0, 0, 0, 3, 4),
            (0, 0, 2, 0, 4),
            (0, 0, 0, 0, 0),
        ),
    ),
}

BUILTIN_NAMES = tuple(_BUILTIN)


def builtin(name: str) -> UpAlgebra:
    try:
        names, table = _BUILTIN[name]
    except KeyError:
        raise UnknownName(f"no built-in algebra {name!r}; known: {', '.join(_BUILTIN)}") from None
    return make_algebra(names, 0, table)


def _subset_label(mask: int, m: int) -> str:
    return "{" + ",".join(str(i + 1) for i in range(m) if mask >> i & 1) + "}"


def _power(m: int, op, zero_mask: int) -> UpAlgebra:
    if not 0 <= m <= 4:
        raise OrderOutOfRange(f"universe size must be in 0..4, got {m}")
    size = 1 << m
    names = [_subset_label(a, m) for a in range(size)]
    table = [[op(a, b, size - 1) for b in range(size)] for a in range(size)]
    return make_algebra(names, zero_mask, table)


def power_type1(m: int) -> UpAlgebra:
    """Subsets of ``{1..m}`` with ``A.B = B - A`` and constant the empty set."""
    return _power(m, lambda a, b, full: b & ~a & full, 0)


def power_type2(m: int) -> UpAlgebra:
    """Subsets of ``{1..m}`` with ``A*B = B | complement(A)`` and constant
    the full set."""
    return _power(m, lambda a, b, full: (b | ~a) & full, (1 << m) - 1)


# --------------------------------------------------------------------------
# census


@dataclass(frozen=True)
class Census:
    order: int
    representatives: tuple[UpAlgebra, ...]
    raw_count: int

    @property
    def iso_count(self) -> int:
        return len(self.representatives)


def _constraints_ok(t, n) -> bool:
    """Check every axiom consequence whose lookups are all known (-1 = unknown)."""
    # UP-4 on known pairs
    for x in range(1, n):
        tx = t[x]
        for y in range(1, n):
            if x == y:
                continue
            if tx[y] == 0 and t[y][x] == 0:
                return False
    for x in range(n):
        tx = t[x]
        for y in range(n):
            txy = tx[y]
            if txy < 0:
                continue
            # x.(y.x) = 0
            v = tx[t[y][x]] if t[y][x] >= 0 else -1
            if v > 0:
                return False
            ty = t[y]
            tx_xy = t[txy]
            for z in range(n):
                yz = ty[z]
                xz = tx[z]
                if yz < 0 or xz < 0:
                    continue
                inner = tx_xy[xz]
                if inner < 0:
                    continue
                v = t[yz][inner]
                if v > 0:
                    return False
    return True


def _search(n: int) -> list[tuple[tuple[int, ...], ...]]:
    """All labeled UP-algebras on ``0..n-1`` with constant 0."""
    if n == 1:
        return [((0,),)]
    t = [[-1] * n for _ in range(n)]
    for x in range(n):
        t[0][x] = x
        t[x][0] = 0
        t[x][x] = 0
    free = [(x, y) for x in range(1, n) for y in range(1, n) if x != y]
    found = []

    def rec(k):
        if k == len(free):
            found.append(tuple(tuple(r) for r in t))
            return
        x, y = free[k]
        row = t[x]
        for v in range(n):
            row[y] = v
            if _constraints_ok(t, n):
                rec(k + 1)
        row[y] = -1

    if _constraints_ok(t, n):
        rec(0)
    return found


def enumerate_algebras(n: int, allow_six: bool = False) -> Census:
    """Census of all UP-algebras of order ``n`` up to isomorphism.

    Row 0, column 0 and the diagonal are fixed; remaining cells are filled
    row-major and each partial table is pruned against UP-1, UP-4 and the
    derived law ``x.(y.x) = 0``.  Representatives are canonical tables,
    sorted.
    """
    limit = HARD_MAX_ORDER if allow_six else MAX_ORDER
    if not 1 <= n <= limit:
        raise OrderOutOfRange(f"order must be in 1..{limit}, got {n}"
                              + ("" if allow_six else " (order 6 needs allow_six)"))
    tables = _search(n)
    canon = set()
    names = default_names(n)
    for tbl in tables:
        alg = UpAlgebra(names, tbl)
        if any(v is not None for v in derived_laws(alg).values()):
            raise AssertionError("accepted table violates a derived law")
        canon.add(canonical_form(alg).table)
    reps = tuple(UpAlgebra(names, tbl) for tbl in sorted(canon))
    log.info("order %d: %d labeled, %d up to isomorphism", n, len(tables), len(reps))
    return Census(n, reps, len(tables))


def census_upto(n: int) -> list[UpAlgebra]:
    """Representatives of every order from 1 to ``n``."""
    out = []
    for k in range(1, n + 1):
        out.extend(enumerate_algebras(k).representatives)
    return out


def write_census(census: Census, outdir) -> list[Path]:
    """One ``up_n<order>_<seq>.tbl`` file per representative; the order's
    line in ``census-index.txt`` is added or replaced."""
    from .formats import format_algebra

    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for seq, alg in enumerate(census.representatives, 1):
        p = out / f"up_n{census.order}_{seq}.tbl"
        p.write_text(format_algebra(alg))
        paths.append(p)
    index = out / "census-index.txt"
    lines = []
    if index.exists():
        lines = [ln for ln in index.read_text().splitlines()
                 if ln.strip() and not ln.startswith(f"n={census.order} ")]
    lines.append(census_index_line(census))
    lines.sort(key=lambda ln: int(ln.split()[0][2:]))
    index.write_text("\n".join(lines) + "\n")
    return paths


def census_index_line(census: Census) -> str:
    return f"n={census.order} raw={census.raw_count} iso={census.iso_count}"


def check_representative(alg) -> bool:
    return not validate(alg) and all(v is None for v in derived_laws(alg).values())
