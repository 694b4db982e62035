"""Constructive certificates for the factorization theorem of
homomorphisms and the four isomorphism theorems.

Each function builds every map involved, checks each claimed property on
the finite instance, and returns a :class:`Certificate`.  If any check
fails a :class:`~upalg.errors.CertificateFailure` is raised carrying the
partial certificate.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .congruence import natural_projection, quotient, relation_mod_ideal
from .core import ElementSet
from .errors import CertificateFailure, NotSurjective, PreconditionViolation
from .morphism import Morphism, check_hom, compose, enumerate_homs, is_isomorphic
from .substruct import all_ideals, is_ideal, is_subalgebra

# above this many elements on either side, uniqueness of the induced map is
# argued pointwise instead of by enumerating homomorphisms
UNIQUENESS_ENUM_CAP = 6


@dataclass
class Check:
    claim_id: str
    claim: str
    passed: bool
    details: str = ""


@dataclass
class Certificate:
    theorem: str  # FUND | ISO1 | ISO2 | ISO3 | ISO4
    inputs: dict[str, Any] = field(default_factory=dict)
    constructed: dict[str, Any] = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)
    parts: list["Certificate"] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks) and all(p.ok for p in self.parts)

    def all_checks(self):
        """(theorem, check) pairs, nested certificates included."""
        for c in self.checks:
            yield self.theorem, c
        for p in self.parts:
            yield from p.all_checks()

    def lines(self) -> list[str]:
        """Machine format: ``PASS|FAIL <theorem> <claim-id> <details>``."""
        out = []
        for thm, c in self.all_checks():
            status = "PASS" if c.passed else "FAIL"
            details = (c.details or c.claim).replace("\n", " ")
            out.append(f"{status} {thm} {c.claim_id} {details}")
        return out

    def report(self, indent: int = 0) -> str:
        pad = " " * indent
        verdict = "verified" if self.ok else "FAILED"
        out = [f"{pad}{self.theorem}: {verdict}"]
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            extra = f" -- {c.details}" if c.details else ""
            out.append(f"{pad}  [{mark}] {c.claim}{extra}")
        for p in self.parts:
            out.append(p.report(indent + 2))
        return "\n".join(out)


class _Builder:
    def __init__(self, theorem: str, **inputs):
        self.cert = Certificate(theorem, inputs)

    def check(self, claim_id: str, claim: str, passed: bool, details: str = "") -> bool:
        self.cert.checks.append(Check(claim_id, claim, bool(passed), details))
        return bool(passed)

    def require(self, claim_id: str, claim: str, passed: bool, details: str = ""):
        """Record a check whose failure makes the remaining steps meaningless."""
        if not self.check(claim_id, claim, passed, details):
            self.fail()

    def fail(self):
        failed = [c for _, c in self.cert.all_checks() if not c.passed]
        raise CertificateFailure(self.cert, failed)

    def add_part(self, make):
        try:
            part = make()
        except CertificateFailure as exc:
            self.cert.parts.append(exc.certificate)
            self.fail()
        self.cert.parts.append(part)
        return part

    def finish(self) -> Certificate:
        if not self.cert.ok:
            self.fail()
        return self.cert


def _names(alg, s: ElementSet) -> str:
    return "{" + ",".join(alg.names[i] for i in s) + "}"


def _hom_or_fail(b: _Builder, claim_id: str, claim: str, src, dst, mapping) -> Morphism:
    bad = check_hom(src, dst, mapping)
    b.require(claim_id, claim, bad is None, "" if bad is None else bad.describe(src.names))
    return Morphism(src, dst, mapping)


def fundamental(f: Morphism, uniqueness_cap: int = UNIQUENESS_ENUM_CAP) -> Certificate:
    """Factor ``f = phi o pi`` through the quotient by its kernel."""
    A, B = f.source, f.target
    b = _Builder("FUND", f=f)
    K = f.kernel
    bad = is_ideal(A, K)
    b.require("kernel-ideal", "Ker(f) is an ideal of A", bad is None,
              _names(A, K) if bad is None else bad.describe(A.names))
    q = quotient(A, K)
    pi = natural_projection(A, K, q)
    b.cert.constructed.update(kernel=K, quotient=q, projection=pi)

    cls = q.partition.class_of
    clash = next(((x, y) for x in A.elements for y in A.elements
                  if cls[x] == cls[y] and f(x) != f(y)), None)
    b.require("phi-well-defined", "phi((x)) = f(x) does not depend on the representative",
              clash is None,
              "" if clash is None else f"{A.names[clash[0]]} ~ {A.names[clash[1]]} but images differ")
    phi_map = tuple(f(x) for x in q.section)
    phi = _hom_or_fail(b, "phi-hom", "phi is a homomorphism A/~K -> B", q.algebra, B, phi_map)
    b.cert.constructed["phi"] = phi

    b.check("factorization", "f = phi o pi pointwise",
            compose(pi, phi).mapping == f.mapping)
    b.check("pi-epi", "pi is surjective", pi.is_surjective())
    b.check("phi-mono", "phi is injective", phi.is_injective())
    b.check("epi-iff-iso", "f surjective iff phi bijective",
            f.is_surjective() == phi.is_bijective(),
            f"f surjective: {f.is_surjective()}, phi bijective: {phi.is_bijective()}")

    if max(q.algebra.n, B.n) <= uniqueness_cap:
        homs = enumerate_homs(q.algebra, B)
        factoring = [g for g in homs if compose(pi, g).mapping == f.mapping]
        b.check("uniqueness-enumerated",
                "phi is the only homomorphism with f = phi o pi (exhaustive)",
                factoring == [phi], f"{len(homs)} homs, {len(factoring)} factor f")
    else:
        # pi is onto, so any phi' with f = phi' o pi is forced on every class
        forced = all(phi(cls[x]) == f(x) for x in A.elements)
        b.check("uniqueness-pointwise",
                "phi is determined on every class by f (pi surjective)",
                forced and pi.is_surjective())
    return b.finish()


def first_iso(f: Morphism, uniqueness_cap: int = UNIQUENESS_ENUM_CAP) -> Certificate:
    """``A/~Ker(f)`` is isomorphic to ``Im(f)``."""
    A, B = f.source, f.target
    b = _Builder("ISO1", f=f)
    im = f.image
    b.require("image-subalgebra", "Im(f) is a subalgebra of B",
              is_subalgebra(B, im) is None, _names(B, im))
    img, embed = B.restrict(im)
    pos = {old: k for k, old in enumerate(embed)}
    onto = Morphism(A, img, tuple(pos[f(x)] for x in A.elements))
    b.check("corestriction-epi", "f: A -> Im(f) is surjective", onto.is_surjective())
    fund = b.add_part(lambda: fundamental(onto, uniqueness_cap))
    phi = fund.constructed["phi"]
    b.check("phi-iso", "phi: A/~Ker(f) -> Im(f) is bijective", phi.is_bijective())
    witness = is_isomorphic(fund.constructed["quotient"].algebra, img)
    b.check("canonical-iso", "A/~Ker(f) and Im(f) have equal canonical forms",
            witness is not None)
    b.cert.constructed.update(image=img, embedding=embed, corestriction=onto,
                              quotient=fund.constructed["quotient"], iso=phi)
    return b.finish()


def hk_set(alg, h: ElementSet, k: ElementSet) -> ElementSet:
    """Union of the ``~K``-classes of the elements of ``H``."""
    p = relation_mod_ideal(alg, k)
    ids = {p.class_of[x] for x in h}
    hk = ElementSet.of(alg.n, (x for x in alg.elements if p.class_of[x] in ids))
    bad = is_subalgebra(alg, hk)
    if bad is not None:
        raise AssertionError(f"HK is not a subalgebra: {bad.describe(alg.names)}")
    return hk


def second_iso(alg, h: ElementSet, k: ElementSet,
               uniqueness_cap: int = UNIQUENESS_ENUM_CAP) -> Certificate:
    """``H/~(H∩K)`` is isomorphic to ``HK/~K``."""
    if not h or is_subalgebra(alg, h) is not None:
        raise PreconditionViolation(f"{_names(alg, h)} is not a subalgebra")
    if not k or is_ideal(alg, k) is not None:
        raise PreconditionViolation(f"{_names(alg, k)} is not an ideal")
    b = _Builder("ISO2", algebra=alg, H=h, K=k)

    hk = hk_set(alg, h, k)
    b.check("hk-subalgebra", "HK is a subalgebra of A", is_subalgebra(alg, hk) is None,
            _names(alg, hk))
    b.check("h-in-hk", "H is contained in HK", h.issubset(hk))
    b.check("k-in-hk", "K is contained in HK", k.issubset(hk))

    q = quotient(alg, k)
    hk_mod_k = ElementSet.of(q.algebra.n, (q.class_of(x) for x in hk))
    b.require("hk-mod-k-subalgebra", "HK/~K is a subalgebra of A/~K",
              is_subalgebra(q.algebra, hk_mod_k) is None, _names(q.algebra, hk_mod_k))
    right, right_embed = q.algebra.restrict(hk_mod_k)
    rpos = {old: i for i, old in enumerate(right_embed)}

    hs, h_embed = alg.restrict(h)
    f = _hom_or_fail(b, "f-hom", "f: H -> HK/~K, x -> (x) is a homomorphism",
                     hs, right, tuple(rpos[q.class_of(x)] for x in h_embed))
    b.check("f-epi", "f is surjective", f.is_surjective())
    h_cap_k = ElementSet.of(hs.n, (i for i, x in enumerate(h_embed) if x in k))
    b.check("kernel", "Ker(f) = H ∩ K", f.kernel == h_cap_k,
            f"Ker(f) = {_names(hs, f.kernel)}, H∩K = {_names(hs, h_cap_k)}")
    bad = is_ideal(hs, h_cap_k)
    b.require("hk-ideal-of-h", "H ∩ K is an ideal of H", bad is None,
              "" if bad is None else bad.describe(hs.names))

    b.add_part(lambda: first_iso(f, uniqueness_cap))
    left = quotient(hs, h_cap_k)
    b.check("canonical-iso", "H/~(H∩K) and HK/~K have equal canonical forms",
            is_isomorphic(left.algebra, right) is not None,
            f"{left.algebra.n} and {right.n} elements")
    b.cert.constructed.update(HK=hk, H_algebra=hs, left=left, right=right, f=f)
    return b.finish()


def third_iso(alg, h: ElementSet, k: ElementSet,
              uniqueness_cap: int = UNIQUENESS_ENUM_CAP) -> Certificate:
    """``(A/~H)/~(K/~H)`` is isomorphic to ``A/~K`` for ideals ``H ⊆ K``."""
    for s in (h, k):
        if not s or is_ideal(alg, s) is not None:
            raise PreconditionViolation(f"{_names(alg, s)} is not an ideal")
    if not h.issubset(k):
        raise PreconditionViolation(f"{_names(alg, h)} is not contained in {_names(alg, k)}")
    b = _Builder("ISO3", algebra=alg, H=h, K=k)

    qh, qk = quotient(alg, h), quotient(alg, k)
    fmap = tuple(qk.class_of(x) for x in qh.section)
    clash = next((x for x in alg.elements if fmap[qh.class_of(x)] != qk.class_of(x)), None)
    b.require("f-well-defined", "(x)_H -> (x)_K does not depend on the representative",
              clash is None, "" if clash is None else f"at {alg.names[clash]}")
    f = _hom_or_fail(b, "f-hom", "f: A/~H -> A/~K is a homomorphism",
                     qh.algebra, qk.algebra, fmap)
    b.check("f-epi", "f is surjective", f.is_surjective())
    k_mod_h = ElementSet.of(qh.algebra.n, (qh.class_of(x) for x in k))
    b.check("kernel", "Ker(f) = K/~H", f.kernel == k_mod_h,
            f"Ker(f) = {_names(qh.algebra, f.kernel)}, K/~H = {_names(qh.algebra, k_mod_h)}")
    bad = is_ideal(qh.algebra, k_mod_h)
    b.require("k-mod-h-ideal", "K/~H is an ideal of A/~H", bad is None,
              "" if bad is None else bad.describe(qh.algebra.names))
    double = quotient(qh.algebra, k_mod_h)

    b.add_part(lambda: first_iso(f, uniqueness_cap))
    b.check("canonical-iso", "(A/~H)/~(K/~H) and A/~K have equal canonical forms",
            is_isomorphic(double.algebra, qk.algebra) is not None)
    b.cert.constructed.update(A_mod_H=qh, A_mod_K=qk, double=double, f=f)
    return b.finish()


def fourth_iso(f: Morphism, uniqueness_cap: int = UNIQUENESS_ENUM_CAP) -> Certificate:
    """Correspondence between ideals of ``A`` above ``Ker(f)`` and ideals of
    ``B`` for a surjective ``f``, and ``A/~X ≅ B/~f(X)`` for each of them."""
    if not f.is_surjective():
        raise NotSurjective("the correspondence needs a surjective homomorphism")
    A, B = f.source, f.target
    b = _Builder("ISO4", f=f)
    ker = f.kernel
    ideals_a = [X for X in all_ideals(A) if ker.issubset(X)]
    ideals_b = all_ideals(B)
    images = [f.image_of(X) for X in ideals_a]
    b.cert.constructed.update(ideals_A=ideals_a, ideals_B=ideals_b, images=images)

    b.check("same-size", "|𝒜| = |ℬ|", len(ideals_a) == len(ideals_b),
            f"{len(ideals_a)} vs {len(ideals_b)}")
    set_b = set(ideals_b)
    bad_img = [X for X, Y in zip(ideals_a, images) if Y not in set_b]
    b.check("image-ideal", "f(X) is an ideal of B for every X in 𝒜", not bad_img,
            "" if not bad_img else _names(A, bad_img[0]))
    b.check("injective", "X -> f(X) is injective on 𝒜", len(set(images)) == len(images))
    b.check("surjective", "X -> f(X) maps 𝒜 onto ℬ", set(images) == set_b)
    set_a = set(ideals_a)
    back_ok = all(f.preimage_of(Y) in set_a and f.image_of(f.preimage_of(Y)) == Y
                  for Y in ideals_b)
    b.check("inverse-on-B", "f(f^-1(Y)) = Y with f^-1(Y) in 𝒜 for every Y in ℬ", back_ok)
    fwd_ok = all(f.preimage_of(Y) == X for X, Y in zip(ideals_a, images))
    b.check("inverse-on-A", "f^-1(f(X)) = X for every X in 𝒜", fwd_ok)
    incl = all((X1.issubset(X2)) == (Y1.issubset(Y2))
               for X1, Y1 in zip(ideals_a, images) for X2, Y2 in zip(ideals_a, images))
    b.check("inclusion", "X1 ⊆ X2 iff f(X1) ⊆ f(X2)", incl)

    for X, Y in zip(ideals_a, images):
        if Y not in set_b:
            continue
        qb = quotient(B, Y)
        g = compose(f, natural_projection(B, Y, qb))
        tag = _names(A, X)
        b.check(f"kernel{tag}", f"Ker(pi o f) = X for X = {tag}", g.kernel == X,
                f"Ker = {_names(A, g.kernel)}")
        b.check(f"epi{tag}", f"pi o f is surjective for X = {tag}", g.is_surjective())
        b.add_part(lambda: first_iso(g, uniqueness_cap))
        b.check(f"canonical-iso{tag}", f"A/~X and B/~f(X) have equal canonical forms, X = {tag}",
                is_isomorphic(quotient(A, X).algebra, qb.algebra) is not None)
    return b.finish()


THEOREMS = {
    "FUND": fundamental,
    "ISO1": first_iso,
    "ISO2": second_iso,
    "ISO3": third_iso,
    "ISO4": fourth_iso,
}

