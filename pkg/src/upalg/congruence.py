"""Partitions, congruences, the relation induced by an ideal, quotient
algebras and natural projections."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .core import ElementSet, UpAlgebra, Violation
from .errors import (
    NotACongruence,
    NotAnIdeal,
    WellDefinednessViolation,
)
from .substruct import is_ideal, is_subalgebra


@dataclass(frozen=True)
class Partition:
    """A partition of ``0..n-1``.

    ``class_of[x]`` is the id of the block holding ``x``; ids are numbered
    by the smallest element of each block, so the block of 0 is always id 0.
    """

    class_of: tuple[int, ...]

    def __post_init__(self):
        # renumber blocks in order of first appearance (= minimum element)
        seen: dict[int, int] = {}
        ids = []
        for c in self.class_of:
            if c not in seen:
                seen[c] = len(seen)
            ids.append(seen[c])
        object.__setattr__(self, "class_of", tuple(ids))

    @classmethod
    def from_classes(cls, n: int, classes: Iterable[Iterable[int]]) -> "Partition":
        class_of = [-1] * n
        for k, block in enumerate(classes):
            block = list(block)
            if not block:
                raise ValueError("empty block")
            for x in block:
                if not 0 <= x < n:
                    raise ValueError(f"element {x} outside [0, {n})")
                if class_of[x] != -1:
                    raise ValueError(f"element {x} appears in two blocks")
                class_of[x] = k
        if -1 in class_of:
            raise ValueError(f"element {class_of.index(-1)} is in no block")
        return cls(tuple(class_of))

    @classmethod
    def identity(cls, n: int) -> "Partition":
        return cls(tuple(range(n)))

    @classmethod
    def single(cls, n: int) -> "Partition":
        return cls((0,) * n)

    @property
    def n(self) -> int:
        return len(self.class_of)

    @property
    def num_classes(self) -> int:
        return max(self.class_of) + 1

    @property
    def classes(self) -> tuple[ElementSet, ...]:
        masks = [0] * self.num_classes
        for x, c in enumerate(self.class_of):
            masks[c] |= 1 << x
        return tuple(ElementSet(self.n, m) for m in masks)

    def block(self, x: int) -> ElementSet:
        c = self.class_of[x]
        return ElementSet.of(self.n, (y for y, d in enumerate(self.class_of) if d == c))

    def related(self, x: int, y: int) -> bool:
        return self.class_of[x] == self.class_of[y]

    def section(self) -> tuple[int, ...]:
        """Smallest element of each block, by block id."""
        out = [-1] * self.num_classes
        for x, c in enumerate(self.class_of):
            if out[c] == -1:
                out[c] = x
        return tuple(out)


def relation_mod_ideal(alg, b: ElementSet) -> Partition:
    """Partition by ``x ~ y  iff  x.y in b and y.x in b``."""
    bad = is_ideal(alg, b)
    if bad is not None:
        raise NotAnIdeal(f"not an ideal: {bad.describe(alg.names)}")
    t, n = alg.table, alg.n
    rel = [[t[x][y] in b and t[y][x] in b for y in range(n)] for x in range(n)]
    for x in range(n):
        if not rel[x][x]:
            raise AssertionError(f"~B not reflexive at {x}")
        for y in range(n):
            if rel[x][y] != rel[y][x]:
                raise AssertionError(f"~B not symmetric at ({x},{y})")
            if rel[x][y]:
                for z in range(n):
                    if rel[y][z] and not rel[x][z]:
                        raise AssertionError(f"~B not transitive at ({x},{y},{z})")
    class_of = [-1] * n
    for x in range(n):
        if class_of[x] == -1:
            for y in range(x, n):
                if rel[x][y]:
                    class_of[y] = x
    return Partition(tuple(class_of))


def is_congruence(alg, p: Partition) -> Optional[Violation]:
    """``None`` if ``p`` is compatible with the operation on both sides,
    else the first ``(x, y, z)`` with ``x ~ y`` and ``x.z !~ y.z`` or
    ``z.x !~ z.y``."""
    if p.n != alg.n:
        raise ValueError("partition and algebra differ in size")
    t, c = alg.table, p.class_of
    n = alg.n
    for x in range(n):
        for y in range(n):
            if c[x] != c[y]:
                continue
            for z in range(n):
                if c[t[x][z]] != c[t[y][z]]:
                    return Violation("right-compatible", (x, y, z))
                if c[t[z][x]] != c[t[z][y]]:
                    return Violation("left-compatible", (x, y, z))
    return None


@dataclass(frozen=True)
class ClassReport:
    zero_class: ElementSet
    zero_class_is_ideal: bool
    zero_class_is_subalgebra: bool
    # per block id: (is ideal, is subalgebra, related to 0)
    blocks: tuple[tuple[bool, bool, bool], ...]
    zero_class_equals_ideal: Optional[bool] = None

    @property
    def ok(self) -> bool:
        return (self.zero_class_is_ideal and self.zero_class_is_subalgebra
                and all(i == r and s == r for i, s, r in self.blocks)
                and self.zero_class_equals_ideal is not False)


def class_of_zero_checks(alg, p: Partition, ideal: Optional[ElementSet] = None) -> ClassReport:
    """Check that the block of 0 is an ideal and a subalgebra, and that any
    other block is an ideal (or a subalgebra) exactly when it is the block
    of 0.  With ``ideal`` given, ``p`` is expected to be induced by it and
    the block of 0 must equal it.
    """
    bad = is_congruence(alg, p)
    if bad is not None:
        raise NotACongruence(bad.describe(alg.names))
    blocks = p.classes
    rows = []
    for k, blk in enumerate(blocks):
        rows.append((is_ideal(alg, blk) is None, is_subalgebra(alg, blk) is None, k == 0))
    eq = None if ideal is None else blocks[0] == ideal
    return ClassReport(blocks[0], rows[0][0], rows[0][1], tuple(rows), eq)


def block_label(alg, block: ElementSet) -> str:
    return "[" + alg.names[min(block)] + "]"


@dataclass(frozen=True)
class QuotientAlgebra:
    base: UpAlgebra
    ideal: ElementSet
    partition: Partition
    algebra: UpAlgebra
    section: tuple[int, ...]

    def class_of(self, x: int) -> int:
        return self.partition.class_of[x]


def quotient_by_partition(alg, p: Partition) -> tuple[UpAlgebra, tuple[int, ...]]:
    """Quotient table of a congruence, re-verifying that the product of
    blocks does not depend on the representatives chosen."""
    c = p.class_of
    section = p.section()
    t = alg.table
    table = [[c[t[a][b]] for b in section] for a in section]
    n = alg.n
    for x in range(n):
        for y in range(n):
            if c[t[x][y]] != table[c[x]][c[y]]:
                raise WellDefinednessViolation(
                    f"class of {alg.names[x]}.{alg.names[y]} differs from the "
                    f"product of its classes")
    names = [block_label(alg, blk) for blk in p.classes]
    q = UpAlgebra(tuple(names), tuple(tuple(r) for r in table))
    return q, section


def quotient(alg, b: ElementSet) -> QuotientAlgebra:
    """The quotient algebra by the congruence induced by ideal ``b``."""
    p = relation_mod_ideal(alg, b)
    q, section = quotient_by_partition(alg, p)
    return QuotientAlgebra(alg, b, p, q, section)


def natural_projection(alg, b: ElementSet, q: Optional[QuotientAlgebra] = None):
    """``x -> class of x`` as a morphism onto the quotient by ``b``.

    Asserts surjectivity and that the kernel is exactly ``b``.
    """
    from .morphism import Morphism

    if q is None:
        q = quotient(alg, b)
    pi = Morphism(alg, q.algebra, q.partition.class_of)
    if not pi.is_surjective():
        raise AssertionError("natural projection is not surjective")
    if pi.kernel != b:
        raise AssertionError("kernel of natural projection differs from the ideal")
    return pi
