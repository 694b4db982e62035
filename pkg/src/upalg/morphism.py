"""UP-homomorphisms, their enumeration, and isomorphism testing through
canonical forms."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

from .core import DEFAULT_CAP, ElementSet, UpAlgebra, Violation, check_cap, up_ordering
from .errors import HomViolation, NotBijective, NotComposable
from .substruct import (
    all_ideals,
    all_subalgebras,
    image,
    is_ideal,
    is_subalgebra,
    preimage,
)


def check_hom(src, dst, mapping: Sequence[int]) -> Optional[Violation]:
    """First ``(x, y)`` with ``f(x.y) != f(x).f(y)``, or ``None``."""
    if len(mapping) != src.n:
        raise ValueError(f"map has {len(mapping)} entries, source has {src.n} elements")
    for v in mapping:
        if not 0 <= v < dst.n:
            raise ValueError(f"map value {v} is not an element of the target")
    s, d = src.table, dst.table
    for x in range(src.n):
        fx = mapping[x]
        for y in range(src.n):
            if mapping[s[x][y]] != d[fx][mapping[y]]:
                return Violation("homomorphism", (x, y))
    return None


@dataclass(frozen=True)
class Morphism:
    """A validated UP-homomorphism ``source -> target``."""

    source: UpAlgebra
    target: UpAlgebra
    mapping: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mapping", tuple(int(v) for v in self.mapping))
        bad = check_hom(self.source, self.target, self.mapping)
        if bad is not None:
            raise HomViolation(bad, bad.describe(self.source.names))

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    @cached_property
    def kernel(self) -> ElementSet:
        return ElementSet.of(self.source.n, (x for x, v in enumerate(self.mapping) if v == 0))

    @cached_property
    def image(self) -> ElementSet:
        return ElementSet.of(self.target.n, self.mapping)

    def is_injective(self) -> bool:
        return len(set(self.mapping)) == self.source.n

    def is_surjective(self) -> bool:
        return len(self.image) == self.target.n

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def image_of(self, s: ElementSet) -> ElementSet:
        return image(self.mapping, s, self.target.n)

    def preimage_of(self, s: ElementSet) -> ElementSet:
        return preimage(self.mapping, s)

    def __repr__(self) -> str:
        pairs = ", ".join(f"{self.source.names[x]}->{self.target.names[v]}"
                          for x, v in enumerate(self.mapping))
        return f"Morphism({pairs})"


def identity(alg) -> Morphism:
    return Morphism(alg, alg, tuple(alg.elements))


def constant_zero(src, dst) -> Morphism:
    return Morphism(src, dst, (0,) * src.n)


def compose(f: Morphism, g: Morphism) -> Morphism:
    """``g o f`` (apply ``f`` first)."""
    if f.target != g.source:
        raise NotComposable("target of f is not the source of g")
    return Morphism(f.source, g.target, tuple(g.mapping[v] for v in f.mapping))


def inverse(f: Morphism) -> Morphism:
    if not f.is_bijective():
        raise NotBijective("only bijective morphisms have inverses")
    inv = [0] * f.target.n
    for x, v in enumerate(f.mapping):
        inv[v] = x
    return Morphism(f.target, f.source, tuple(inv))


HOM_PARTS = (
    "preserves-zero",
    "monotone",
    "image-of-subalgebra",
    "preimage-of-subalgebra",
    "image-of-ideal",
    "preimage-of-ideal",
    "kernel-vs-injective",
)


def hom_properties(f: Morphism) -> dict[str, Optional[str]]:
    """Instance-wise check of the standard homomorphism properties.

    Maps each part in :data:`HOM_PARTS` to ``None`` when it holds, or a
    short description of the failing instance.
    """
    A, B = f.source, f.target
    out: dict[str, Optional[str]] = dict.fromkeys(HOM_PARTS)
    if f(0) != 0:
        out["preserves-zero"] = f"f(0) = {B.names[f(0)]}"

    la, lb = up_ordering(A).leq, up_ordering(B).leq
    for x in A.elements:
        for y in A.elements:
            if la[x][y] and not lb[f(x)][f(y)]:
                out["monotone"] = f"{A.names[x]} <= {A.names[y]} but images are not ordered"
                break
        if out["monotone"]:
            break

    for c in all_subalgebras(A):
        if is_subalgebra(B, f.image_of(c)) is not None:
            out["image-of-subalgebra"] = f"f({sorted(c)}) is not a subalgebra"
            break
    for d in all_subalgebras(B):
        if is_subalgebra(A, f.preimage_of(d)) is not None:
            out["preimage-of-subalgebra"] = f"f^-1({sorted(d)}) is not a subalgebra"
            break

    img_alg, embed = B.restrict(f.image)
    pos = {old: k for k, old in enumerate(embed)}
    for c in all_ideals(A):
        if not f.kernel.issubset(c):
            continue
        fc = ElementSet.of(img_alg.n, (pos[f(x)] for x in c))
        if is_ideal(img_alg, fc) is not None:
            out["image-of-ideal"] = f"f({sorted(c)}) is not an ideal of Im(f)"
            break
    for d in all_ideals(B):
        if is_ideal(A, f.preimage_of(d)) is not None:
            out["preimage-of-ideal"] = f"f^-1({sorted(d)}) is not an ideal"
            break

    if (f.kernel == A.zero_set()) != f.is_injective():
        out["kernel-vs-injective"] = "trivial kernel does not match injectivity"
    return out


def _hom_schedule(src) -> list[list[tuple[int, int, int]]]:
    # for each x: products (a, b, a.b) whose three indices are all <= x with max == x
    s, n = src.table, src.n
    sched: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
    for a in range(n):
        for b in range(n):
            c = s[a][b]
            sched[max(a, b, c)].append((a, b, c))
    return sched


def enumerate_homs(src, dst, cap: int = DEFAULT_CAP) -> list[Morphism]:
    """All homomorphisms ``src -> dst``, in lexicographic order of their maps.

    The map is extended element by element with ``f(0) = 0`` fixed; after
    each assignment every product among assigned elements is checked.
    """
    check_cap(src.n, cap)
    check_cap(dst.n, cap)
    d = dst.table
    n, m = src.n, dst.n
    sched = _hom_schedule(src)
    f = [0] * n
    found: list[tuple[int, ...]] = []

    def ok(x):
        for a, b, c in sched[x]:
            if f[c] != d[f[a]][f[b]]:
                return False
        return True

    def extend(x):
        if x == n:
            found.append(tuple(f))
            return
        for v in range(m):
            f[x] = v
            if ok(x):
                extend(x + 1)

    if ok(0):
        extend(1)
    return [Morphism(src, dst, mp) for mp in found]


# --------------------------------------------------------------------------
# canonical forms


@dataclass(frozen=True)
class CanonicalForm:
    """Least relabeled table over permutations fixing 0.

    ``relabel[old] = new`` sends the original algebra onto ``table``.
    """

    table: tuple[tuple[int, ...], ...]
    relabel: tuple[int, ...]


def canonical_form(alg) -> CanonicalForm:
    """Lexicographically least row-major table over all relabelings that fix
    element 0, found by branch and bound on row prefixes."""
    t = alg.table
    n = len(t)
    if n == 1:
        return CanonicalForm(t, (0,))
    best: list = [None, None]  # flat table, order
    order = [0]
    new_of = [-1] * n
    new_of[0] = 0
    used = [False] * n
    used[0] = True

    def prefix_worse(k: int) -> bool:
        # labels 0..k assigned; compare determined row-major prefix with best
        bt = best[0]
        for i in range(n):
            if i > k:
                return False
            row = t[order[i]]
            for j in range(n):
                if j > k:
                    return False
                v = new_of[row[order[j]]]
                b = bt[i * n + j]
                if v == -1:
                    # value still unlabeled, so it will be > k
                    return b <= k
                if v != b:
                    return v > b
        return False

    def search(k: int):
        if k == n - 1:
            flat = [new_of[t[order[i]][order[j]]] for i in range(n) for j in range(n)]
            if best[0] is None or flat < best[0]:
                best[0] = flat
                best[1] = list(order)
            return
        for cand in range(1, n):
            if used[cand]:
                continue
            used[cand] = True
            new_of[cand] = k + 1
            order.append(cand)
            if best[0] is None or not prefix_worse(k + 1):
                search(k + 1)
            order.pop()
            new_of[cand] = -1
            used[cand] = False

    search(0)
    flat, order_best = best
    relabel = [0] * n
    for k, old in enumerate(order_best):
        relabel[old] = k
    table = tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n))
    return CanonicalForm(table, tuple(relabel))


def fingerprint(alg) -> tuple:
    """A relabeling invariant used to reject non-isomorphic pairs quickly."""
    t, n = alg.table, alg.n
    per = []
    for x in range(n):
        row0 = sum(1 for y in range(n) if t[x][y] == 0)
        col0 = sum(1 for y in range(n) if t[y][x] == 0)
        fixed = sum(1 for y in range(n) if t[x][y] == y)
        per.append((row0, col0, fixed))
    return (n, tuple(sorted(per)))


def relabeled(alg, relabel: Sequence[int]) -> UpAlgebra:
    """Copy of ``alg`` with element ``x`` renamed to ``relabel[x]``."""
    n = alg.n
    order = [0] * n
    for old, new in enumerate(relabel):
        order[new] = old
    t = alg.table
    table = tuple(tuple(relabel[t[order[i]][order[j]]] for j in range(n)) for i in range(n))
    return UpAlgebra(tuple(alg.names[order[i]] for i in range(n)), table)


def is_isomorphic(a, b) -> Optional[Morphism]:
    """An explicit isomorphism ``a -> b``, or ``None``."""
    if a.n != b.n or fingerprint(a) != fingerprint(b):
        return None
    if len(all_ideals(a)) != len(all_ideals(b)):
        return None
    ca, cb = canonical_form(a), canonical_form(b)
    if ca.table != cb.table:
        return None
    back = [0] * b.n
    for old, new in enumerate(cb.relabel):
        back[new] = old
    f = Morphism(a, b, tuple(back[ca.relabel[x]] for x in range(a.n)))
    if not f.is_bijective():
        raise AssertionError("isomorphism witness is not bijective")
    inverse(f)  # validates the reverse direction
    return f
