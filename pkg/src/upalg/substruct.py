"""UP-ideals and UP-subalgebras: membership tests, exhaustive lists, and
generation from a seed set."""
from __future__ import annotations

from typing import Optional

from .core import DEFAULT_CAP, ElementSet, Violation, check_cap
from .errors import EmptySet, NotASubalgebra, NotSubset


def _require_nonempty(s: ElementSet):
    if not s:
        raise EmptySet("subset is empty")


def _ideal_violation(t, mask: int) -> Optional[Violation]:
    if not mask & 1:
        return Violation("contains-0", (0,))
    n = len(t)
    members = [y for y in range(n) if mask >> y & 1]
    for x in range(n):
        tx = t[x]
        for y in members:
            ty = t[y]
            for z in range(n):
                if mask >> tx[ty[z]] & 1 and not mask >> tx[z] & 1:
                    return Violation("ideal-rule", (x, y, z))
    return None


def _closure_violation(t, mask: int) -> Optional[Violation]:
    n = len(t)
    members = [y for y in range(n) if mask >> y & 1]
    for x in members:
        for y in members:
            if not mask >> t[x][y] & 1:
                return Violation("closure", (x, y))
    if not mask & 1:
        return Violation("contains-0", (0,))
    return None


def is_ideal(alg, s: ElementSet) -> Optional[Violation]:
    """``None`` if ``s`` is a UP-ideal, else the first failing triple.

    The ideal rule: ``x.(y.z) in s`` and ``y in s`` imply ``x.z in s``.
    """
    _require_nonempty(s)
    return _ideal_violation(alg.table, s.mask)


def is_subalgebra(alg, s: ElementSet) -> Optional[Violation]:
    """``None`` if ``s`` is closed under the operation (hence contains 0)."""
    _require_nonempty(s)
    return _closure_violation(alg.table, s.mask)


def all_ideals(alg, cap: int = DEFAULT_CAP) -> list[ElementSet]:
    """Every UP-ideal, ordered by ascending mask."""
    check_cap(alg.n, cap)
    t, n = alg.table, alg.n
    return [ElementSet(n, m) for m in range(1, 1 << n, 2) if _ideal_violation(t, m) is None]


def all_subalgebras(alg, cap: int = DEFAULT_CAP) -> list[ElementSet]:
    """Every UP-subalgebra, ordered by ascending mask."""
    check_cap(alg.n, cap)
    t, n = alg.table, alg.n
    return [ElementSet(n, m) for m in range(1, 1 << n, 2) if _closure_violation(t, m) is None]


def generated_ideal(alg, seed: ElementSet) -> ElementSet:
    """Least UP-ideal containing ``seed`` (worklist fixpoint)."""
    t, n = alg.table, alg.n
    mask = seed.mask | 1
    changed = True
    while changed:
        changed = False
        members = [y for y in range(n) if mask >> y & 1]
        for x in range(n):
            tx = t[x]
            for y in members:
                ty = t[y]
                for z in range(n):
                    if mask >> tx[ty[z]] & 1 and not mask >> tx[z] & 1:
                        mask |= 1 << tx[z]
                        changed = True
    return ElementSet(n, mask)


def generated_subalgebra(alg, seed: ElementSet) -> ElementSet:
    """Least subset closed under the operation containing ``seed`` and 0."""
    t, n = alg.table, alg.n
    mask = seed.mask | 1
    frontier = [i for i in range(n) if mask >> i & 1]
    members = list(frontier)
    while frontier:
        new = []
        for a in frontier:
            for b in members:
                for v in (t[a][b], t[b][a]):
                    if not mask >> v & 1:
                        mask |= 1 << v
                        new.append(v)
        members.extend(new)
        frontier = new
    return ElementSet(n, mask)


def ideal_criterion_in_subalgebra(alg, b: ElementSet, s: ElementSet) -> Optional[Violation]:
    """Test the sufficient condition for ``s`` to be an ideal of subalgebra ``b``:
    for all ``x, u, v`` in ``b`` with ``u, v`` in ``s``, ``(v.(u.x)).x in s``.

    Returns the first failing ``(x, u, v)`` or ``None``.  When the condition
    holds, ``s`` is also checked to be an ideal of ``b`` viewed as a
    standalone algebra; a failure there raises ``AssertionError``.
    """
    _require_nonempty(s)
    if not s.issubset(b):
        raise NotSubset("s is not contained in b")
    if is_subalgebra(alg, b) is not None:
        raise NotASubalgebra("b is not a subalgebra")
    if 0 not in s:
        return Violation("contains-0", (0,))
    t = alg.table
    for x in b:
        for u in s:
            for v in s:
                if t[t[v][t[u][x]]][x] not in s:
                    return Violation("ideal-criterion", (x, u, v))
    sub, embed = alg.restrict(b)
    inner = ElementSet.of(sub.n, (k for k, old in enumerate(embed) if old in s))
    bad = is_ideal(sub, inner)
    if bad is not None:
        raise AssertionError(f"criterion holds but s is not an ideal of b: {bad}")
    return None


def image(mapping, s: ElementSet, n_target: int) -> ElementSet:
    return ElementSet.of(n_target, (mapping[x] for x in s))


def preimage(mapping, s: ElementSet) -> ElementSet:
    return ElementSet.of(len(mapping), (x for x, fx in enumerate(mapping) if fx in s))
