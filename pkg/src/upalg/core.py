"""Finite UP-algebras as Cayley tables.

A UP-algebra is a set with a binary operation ``x.y`` and a constant 0
satisfying

    UP-1  (y.z).((x.y).(x.z)) = 0
    UP-2  0.x = x
    UP-3  x.0 = 0
    UP-4  x.y = y.x = 0  implies  x = y

Elements are integer indices ``0..n-1``; after normalization the constant
is always index 0.  Raw tables that have not been checked yet live in
:class:`Magma`; an :class:`UpAlgebra` cannot be constructed unless all four
axioms hold.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import AxiomViolation, CapExceeded, MalformedTable

DEFAULT_CAP = 16

AXIOMS = ("UP-1", "UP-2", "UP-3", "UP-4")

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Violation:
    """A failed rule together with the element indices that break it."""

    rule: str
    witness: tuple[int, ...]

    def describe(self, names: Optional[Sequence[str]] = None) -> str:
        if names is None:
            elems = ", ".join(str(i) for i in self.witness)
        else:
            elems = ", ".join(names[i] for i in self.witness)
        return f"{self.rule} fails at ({elems})"


# --------------------------------------------------------------------------
# element sets


@dataclass(frozen=True)
class ElementSet:
    """A subset of ``{0, ..., n-1}`` stored as a bit mask."""

    n: int
    mask: int = 0

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError(f"mask {self.mask:#x} has bits outside [0, {self.n})")

    @classmethod
    def of(cls, n: int, indices: Iterable[int]) -> "ElementSet":
        mask = 0
        for i in indices:
            if not 0 <= i < n:
                raise ValueError(f"index {i} outside [0, {n})")
            mask |= 1 << i
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> "ElementSet":
        return cls(n, (1 << n) - 1)

    @classmethod
    def empty(cls, n: int) -> "ElementSet":
        return cls(n, 0)

    def __iter__(self) -> Iterator[int]:
        m, i = self.mask, 0
        while m:
            if m & 1:
                yield i
            m >>= 1
            i += 1

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, i: int) -> bool:
        return 0 <= i < self.n and bool(self.mask >> i & 1)

    def __bool__(self) -> bool:
        return self.mask != 0

    def _check(self, other: "ElementSet"):
        if self.n != other.n:
            raise ValueError("element sets belong to carriers of different size")

    def __and__(self, other: "ElementSet") -> "ElementSet":
        self._check(other)
        return ElementSet(self.n, self.mask & other.mask)

    def __or__(self, other: "ElementSet") -> "ElementSet":
        self._check(other)
        return ElementSet(self.n, self.mask | other.mask)

    def __sub__(self, other: "ElementSet") -> "ElementSet":
        self._check(other)
        return ElementSet(self.n, self.mask & ~other.mask)

    def issubset(self, other: "ElementSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    __le__ = issubset

    def add(self, i: int) -> "ElementSet":
        return ElementSet(self.n, self.mask | 1 << i)

    def indices(self) -> tuple[int, ...]:
        return tuple(self)

    def __repr__(self) -> str:
        return f"ElementSet({self.n}, {set(self)!r})"


# --------------------------------------------------------------------------
# raw tables


def _as_table(table) -> Table:
    try:
        rows = tuple(tuple(int(v) for v in row) for row in table)
    except (TypeError, ValueError) as exc:
        raise MalformedTable(f"table entries must be integers: {exc}") from None
    n = len(rows)
    if n == 0:
        raise MalformedTable("table is empty")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise MalformedTable(f"row {i} has {len(row)} entries, expected {n}")
        for j, v in enumerate(row):
            if not 0 <= v < n:
                raise MalformedTable(f"entry ({i},{j}) = {v} is not an element index")
    return rows


@dataclass(frozen=True)
class Magma:
    """An unvalidated Cayley table with a designated constant."""

    names: tuple[str, ...]
    table: Table
    zero: int = 0

    def __post_init__(self):
        table = _as_table(self.table)
        object.__setattr__(self, "table", table)
        names = tuple(str(s) for s in self.names)
        object.__setattr__(self, "names", names)
        n = len(table)
        if len(names) != n:
            raise MalformedTable(f"{len(names)} labels for a {n}x{n} table")
        if len(set(names)) != n:
            raise MalformedTable("element labels are not unique")
        if not 0 <= self.zero < n:
            raise MalformedTable(f"constant index {self.zero} out of range")

    @classmethod
    def from_table(cls, table, zero: int = 0, names=None) -> "Magma":
        table = _as_table(table)
        if names is None:
            names = default_names(len(table))
        return cls(tuple(names), table, zero)

    @property
    def n(self) -> int:
        return len(self.table)

    def normalized(self) -> "Magma":
        """Relabel so that the constant sits at index 0, other elements keep
        their relative order."""
        if self.zero == 0:
            return self
        order = [self.zero] + [i for i in range(self.n) if i != self.zero]
        return relabel_magma(self, order)


def default_names(n: int) -> tuple[str, ...]:
    return ("0",) + tuple(f"e{i}" for i in range(1, n))


def relabel_magma(m: Magma, order: Sequence[int]) -> Magma:
    """New magma whose element ``k`` is old element ``order[k]``."""
    new_of = [0] * m.n
    for k, old in enumerate(order):
        new_of[old] = k
    t = m.table
    table = tuple(tuple(new_of[t[a][b]] for b in order) for a in order)
    return Magma(tuple(m.names[i] for i in order), table, new_of[m.zero])


# --------------------------------------------------------------------------
# axiom checks (total functions on raw tables)


def _up1(t, z0) -> Optional[Violation]:
    n = len(t)
    for x in range(n):
        tx = t[x]
        for y in range(n):
            txy = t[tx[y]]
            ty = t[y]
            for z in range(n):
                if t[ty[z]][txy[tx[z]]] != z0:
                    return Violation("UP-1", (x, y, z))
    return None


def _up2(t, z0) -> Optional[Violation]:
    for x, v in enumerate(t[z0]):
        if v != x:
            return Violation("UP-2", (x,))
    return None


def _up3(t, z0) -> Optional[Violation]:
    for x in range(len(t)):
        if t[x][z0] != z0:
            return Violation("UP-3", (x,))
    return None


def _up4(t, z0) -> Optional[Violation]:
    n = len(t)
    for x in range(n):
        for y in range(n):
            if x != y and t[x][y] == z0 and t[y][x] == z0:
                return Violation("UP-4", (x, y))
    return None


def _alt2(t, z0) -> Optional[Violation]:
    n = len(t)
    for x in range(n):
        for y in range(n):
            if t[t[y][z0]][x] != x:
                return Violation("(y.0).x=x", (x, y))
    return None


_CHECKS = {"UP-1": _up1, "UP-2": _up2, "UP-3": _up3, "UP-4": _up4}
_ALIASES = {"UP1": "UP-1", "UP2": "UP-2", "UP3": "UP-3", "UP4": "UP-4"}


def check_axiom(candidate, which: str) -> Optional[Violation]:
    """Exhaustively check one axiom; ``None`` when it holds, otherwise the
    lexicographically first witness.

    ``candidate`` is anything with ``table`` and ``zero`` attributes
    (a :class:`Magma` or :class:`UpAlgebra`).
    """
    key = _ALIASES.get(which, which)
    try:
        fn = _CHECKS[key]
    except KeyError:
        raise ValueError(f"unknown axiom {which!r}") from None
    return fn(candidate.table, candidate.zero)


def check_alt_axiomatization(candidate) -> Optional[Violation]:
    """Check UP-1, ``(y.0).x = x`` and UP-4; first failure or ``None``."""
    t, z0 = candidate.table, candidate.zero
    return _up1(t, z0) or _alt2(t, z0) or _up4(t, z0)


def validate(candidate) -> list[Violation]:
    """Every violated axiom with its first witness, in axiom order."""
    out = []
    for name in AXIOMS:
        v = _CHECKS[name](candidate.table, candidate.zero)
        if v is not None:
            out.append(v)
    return out


def is_up_algebra(candidate) -> bool:
    t, z0 = candidate.table, candidate.zero
    return not (_up2(t, z0) or _up3(t, z0) or _up4(t, z0) or _up1(t, z0))


# --------------------------------------------------------------------------
# validated algebras


@dataclass(frozen=True)
class UpAlgebra:
    """An immutable finite UP-algebra with its constant at index 0.

    Construction validates all four axioms and raises
    :class:`AxiomViolation` on failure.
    """

    names: tuple[str, ...]
    table: Table

    def __post_init__(self):
        m = Magma(self.names, self.table, 0)
        object.__setattr__(self, "names", m.names)
        object.__setattr__(self, "table", m.table)
        bad = validate(m)
        if bad:
            raise AxiomViolation(bad, m.names)

    zero = 0

    @classmethod
    def from_table(cls, table, names=None) -> "UpAlgebra":
        table = _as_table(table)
        return cls(tuple(names) if names is not None else default_names(len(table)), table)

    @property
    def n(self) -> int:
        return len(self.table)

    def __len__(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(len(self.table))

    def op(self, x: int, y: int) -> int:
        return self.table[x][y]

    def index(self, label: str) -> int:
        try:
            return self.names.index(label)
        except ValueError:
            raise KeyError(f"no element labelled {label!r}") from None

    def subset(self, labels: Iterable[str]) -> ElementSet:
        return ElementSet.of(self.n, (self.index(s) for s in labels))

    def carrier(self) -> ElementSet:
        return ElementSet.full(self.n)

    def zero_set(self) -> ElementSet:
        return ElementSet(self.n, 1)

    def as_magma(self) -> Magma:
        return Magma(self.names, self.table, 0)

    def restrict(self, s: ElementSet, names=None) -> tuple["UpAlgebra", tuple[int, ...]]:
        """The subalgebra on ``s`` as a standalone algebra.

        Returns the algebra and the embedding (new index -> old index).
        ``s`` must contain 0 and be closed under the operation.
        """
        embed = s.indices()
        if not embed or embed[0] != 0:
            raise ValueError("a subalgebra must contain 0")
        pos = {old: k for k, old in enumerate(embed)}
        try:
            table = tuple(tuple(pos[self.table[a][b]] for b in embed) for a in embed)
        except KeyError:
            raise ValueError("set is not closed under the operation") from None
        if names is None:
            names = tuple(self.names[i] for i in embed)
        return UpAlgebra(tuple(names), table), embed

    def __repr__(self) -> str:
        return f"UpAlgebra(n={self.n}, names={self.names!r})"


def make_algebra(names, zero, table) -> UpAlgebra:
    """Build and validate an algebra from labels, constant index and table.

    The constant is moved to index 0.  Raises :class:`MalformedTable` for a
    bad table and :class:`AxiomViolation` (listing every failed axiom)
    otherwise.
    """
    m = Magma(tuple(names), table, zero).normalized()
    bad = validate(m)
    if bad:
        raise AxiomViolation(bad, m.names)
    return UpAlgebra(m.names, m.table)


def check_cap(n: int, cap: int = DEFAULT_CAP):
    if n > cap:
        raise CapExceeded(f"{n} elements exceeds the cap of {cap}")


# --------------------------------------------------------------------------
# derived laws and the ordering

DERIVED_LAWS = {
    1: "x.x = 0",
    2: "x.y = 0 and y.z = 0 imply x.z = 0",
    3: "x.y = 0 implies (z.x).(z.y) = 0",
    4: "x.y = 0 implies (y.z).(x.z) = 0",
    5: "x.(y.x) = 0",
    6: "(y.x).x = 0 iff x = y.x",
    7: "x.(y.y) = 0",
}


def derived_laws(alg) -> dict[int, Optional[Violation]]:
    """Check the seven standard consequences of the axioms.

    Returns law number -> ``None`` (holds) or the first witness.
    """
    t = alg.table
    z0 = alg.zero
    n = len(t)
    out: dict[int, Optional[Violation]] = {k: None for k in DERIVED_LAWS}

    def fail(k, w):
        if out[k] is None:
            out[k] = Violation(f"law {k}", w)

    for x in range(n):
        if t[x][x] != z0:
            fail(1, (x,))
        for y in range(n):
            if t[x][t[y][x]] != z0:
                fail(5, (x, y))
            if (t[t[y][x]][x] == z0) != (x == t[y][x]):
                fail(6, (x, y))
            if t[x][t[y][y]] != z0:
                fail(7, (x, y))
            xy0 = t[x][y] == z0
            for z in range(n):
                if xy0 and t[y][z] == z0 and t[x][z] != z0:
                    fail(2, (x, y, z))
                if xy0 and t[t[z][x]][t[z][y]] != z0:
                    fail(3, (x, y, z))
                if xy0 and t[t[y][z]][t[x][z]] != z0:
                    fail(4, (x, y, z))
    return out


@dataclass(frozen=True)
class PosetView:
    """The relation ``x <= y  iff  x.y = 0`` as a boolean matrix."""

    leq: tuple[tuple[bool, ...], ...]

    @property
    def n(self) -> int:
        return len(self.leq)

    def is_reflexive(self) -> bool:
        return all(self.leq[x][x] for x in range(self.n))

    def is_antisymmetric(self) -> bool:
        r = self.leq
        return all(not (r[x][y] and r[y][x]) or x == y
                   for x in range(self.n) for y in range(self.n))

    def is_transitive(self) -> bool:
        r, n = self.leq, self.n
        return all(r[x][z] or not (r[x][y] and r[y][z])
                   for x in range(n) for y in range(n) for z in range(n))

    def is_partial_order(self) -> bool:
        return self.is_reflexive() and self.is_antisymmetric() and self.is_transitive()

    def greatest(self) -> Optional[int]:
        for g in range(self.n):
            if all(self.leq[x][g] for x in range(self.n)):
                return g
        return None

    def covers(self) -> list[tuple[int, int]]:
        """Pairs ``(x, y)`` with ``x < y`` and nothing strictly between."""
        r, n = self.leq, self.n
        out = []
        for x in range(n):
            for y in range(n):
                if x == y or not r[x][y]:
                    continue
                if not any(z != x and z != y and r[x][z] and r[z][y] for z in range(n)):
                    out.append((x, y))
        return out


def up_ordering(alg) -> PosetView:
    t, z0 = alg.table, alg.zero
    return PosetView(tuple(tuple(v == z0 for v in row) for row in t))
