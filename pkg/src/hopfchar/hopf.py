"""The combinatorial Hopf algebra interface and instance-independent machinery.

An instance provides its graded generator alphabet, the coproduct on
generators (or on basis elements, where the structure maps live on a
non-monomial basis, as for the shuffle algebra), and optionally an explicit
antipode.  Everything else -- multiplicative extension, counit, reduced
coproduct, the two recursive antipode formulas, and the exact Hopf-axiom
checker -- is generic.

Conventions: the basis of degree 0 is the empty monomial alone (connected),
generators have degree >= 1, and the coproduct of a basis element x always
contains x (x) 1 and 1 (x) x once.
"""

from __future__ import annotations

import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field

from .core import (
    COMMUTATIVE,
    WORD,
    Coeff,
    GradedVector,
    Monomial,
    TensorVector,
    empty_monomial,
    monomial_product,
    tensor_product,
)


class HopfAlgebra(ABC):
    """Graded connected Hopf algebra presented on a generator alphabet."""

    name: str
    mode: str

    def __init__(self):
        self._coproduct_cache: dict[Monomial, TensorVector] = {}
        self._antipode_cache: dict[Monomial, GradedVector] = {}
        self._rec_cache: dict[tuple[int, Monomial], GradedVector] = {}
        self._basis_cache: dict[int, tuple[Monomial, ...]] = {}

    # ------------------------------------------------------------------ alphabet

    @abstractmethod
    def generators(self, n: int) -> tuple[Monomial, ...]:
        """The degree-n polynomial generators, as single-factor monomials."""

    def generators_upto(self, n: int) -> list[Monomial]:
        out: list[Monomial] = []
        for d in range(1, n + 1):
            out.extend(self.generators(d))
        return out

    @abstractmethod
    def generator_from_text(self, text: str) -> Monomial:
        """Decode one generator from its canonical text key."""

    def is_generator(self, m: Monomial) -> bool:
        return m.is_single()

    def empty(self) -> Monomial:
        return empty_monomial(self.mode)

    def basis(self, n: int) -> tuple[Monomial, ...]:
        """The degree-n vector space basis; monomials over generators by default."""
        if n not in self._basis_cache:
            self._basis_cache[n] = self._basis_commutative(n)
        return self._basis_cache[n]

    def basis_upto(self, n: int) -> list[Monomial]:
        out = [self.empty()]
        for d in range(1, n + 1):
            out.extend(self.basis(d))
        return out

    def _basis_commutative(self, n: int) -> tuple[Monomial, ...]:
        if self.mode != COMMUTATIVE:
            raise NotImplementedError("word-mode instances must override basis()")
        if n == 0:
            return (self.empty(),)
        pool = self.generators_upto(n)
        out: list[Monomial] = []

        def extend(prefix: list, start: int, remaining: int) -> None:
            if remaining == 0:
                out.append(Monomial(COMMUTATIVE, tuple(g for m in prefix for g in m.factors)))
                return
            for i in range(start, len(pool)):
                g = pool[i]
                if g.degree > remaining:
                    continue
                prefix.append(g)
                extend(prefix, i, remaining - g.degree)
                prefix.pop()

        extend([], 0, n)
        return tuple(out)

    def axiom_domain(self, n: int) -> tuple[Monomial, ...]:
        """Elements the axiom checker visits; generators unless overridden."""
        return self.generators(n)

    # ------------------------------------------------------------------ product

    def product_monomials(self, a: Monomial, b: Monomial) -> GradedVector:
        """Algebra product of two basis elements; the monoid product by default."""
        return GradedVector.of(monomial_product(a, b))

    def product(self, u: GradedVector, v: GradedVector) -> GradedVector:
        out = GradedVector()
        for ma, ca in u.terms.items():
            for mb, cb in v.terms.items():
                out = out + self.product_monomials(ma, mb).scale(ca * cb)
        return out

    def generator_factorizations(
        self, m: Monomial
    ) -> tuple[tuple[Coeff, tuple[Monomial, ...]], ...]:
        """m written as a combination of algebra products of generators.

        Polynomial instances factor literally; the shuffle instance rewrites
        the word into its Lyndon polynomial.  Used to evaluate characters,
        which are only stored on generators.
        """
        return ((1, tuple(Monomial(m.mode, (g,), _sorted=True) for g in m.factors)),)

    # ------------------------------------------------------------------ coproduct

    @abstractmethod
    def coproduct_generator(self, g: Monomial) -> TensorVector: ...

    def coproduct_monomial(self, m: Monomial) -> TensorVector:
        cached = self._coproduct_cache.get(m)
        if cached is not None:
            return cached
        if m.is_empty():
            out = TensorVector.of(m, m)
        elif m.is_single():
            out = self.coproduct_generator(m)
        else:
            head = Monomial(m.mode, (m.factors[0],), _sorted=True)
            tail = Monomial(m.mode, m.factors[1:], _sorted=True)
            out = tensor_product(self.coproduct_monomial(head), self.coproduct_monomial(tail))
        self._coproduct_cache[m] = out
        return out

    def coproduct(self, v: GradedVector) -> TensorVector:
        out = TensorVector()
        for m, c in v.terms.items():
            out = out + self.coproduct_monomial(m).scale(c)
        return out

    def reduced_coproduct_monomial(self, m: Monomial) -> TensorVector:
        """Coproduct minus the two primitive terms m (x) 1 and 1 (x) m."""
        if m.is_empty():
            return TensorVector()
        full = self.coproduct_monomial(m)
        out = {p: c for p, c in full.terms.items() if p[0].factors and p[1].factors}
        t = TensorVector.__new__(TensorVector)
        t.terms = out
        return t

    def counit(self, v: GradedVector) -> Coeff:
        return v.counit(self.mode)

    # ------------------------------------------------------------------ antipode

    def antipode_generator_explicit(self, g: Monomial) -> GradedVector | None:
        """Closed-form antipode on a generator, when the instance has one."""
        return None

    def antipode_monomial(self, m: Monomial) -> GradedVector:
        cached = self._antipode_cache.get(m)
        if cached is not None:
            return cached
        if m.is_empty():
            out = GradedVector.of(m)
        elif m.is_single():
            explicit = self.antipode_generator_explicit(m)
            out = explicit if explicit is not None else self.antipode_recursive(m, variant=1)
        else:
            # S is an algebra antimorphism; factor order only matters in word mode
            factors = m.factors if self.mode == COMMUTATIVE else tuple(reversed(m.factors))
            out = GradedVector.of(self.empty())
            for g in factors:
                out = self.product(out, self.antipode_monomial(Monomial(m.mode, (g,), _sorted=True)))
        self._antipode_cache[m] = out
        return out

    def antipode(self, v: GradedVector) -> GradedVector:
        out = GradedVector()
        for m, c in v.terms.items():
            out = out + self.antipode_monomial(m).scale(c)
        return out

    def antipode_recursive(self, m: Monomial, variant: int = 1) -> GradedVector:
        """S from the connected-grading recursion.

        variant 1: S(x) = -x - sum S(x') x'';  variant 2: S(x) = -x - sum x' S(x'').
        Both recurse on strictly smaller degree, with no reference to an
        explicit formula.
        """
        if variant not in (1, 2):
            raise ValueError("variant must be 1 or 2")
        if m.is_empty():
            return GradedVector.of(m)
        key = (variant, m)
        cached = self._rec_cache.get(key)
        if cached is not None:
            return cached
        acc = GradedVector.of(m, -1)
        for (mu, sigma), c in self.reduced_coproduct_monomial(m).terms.items():
            if variant == 1:
                term = self.product(self.antipode_recursive(mu, 1), GradedVector.of(sigma))
            else:
                term = self.product(GradedVector.of(mu), self.antipode_recursive(sigma, 2))
            acc = acc - term.scale(c)
        self._rec_cache[key] = acc
        return acc

    # ------------------------------------------------------------------ misc

    def monomial_text(self, m: Monomial) -> str:
        if m.is_empty():
            return "1"
        return "*".join(g.key for g in m.factors)

    def monomial_from_text(self, text: str) -> Monomial:
        """Inverse of monomial_text: '*'-separated generator keys, or '1'."""
        if text in ("1", ""):
            return self.empty()
        factors = []
        for part in text.split("*"):
            factors.extend(self.generator_from_text(part).factors)
        return Monomial(self.mode, tuple(factors))

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name}>"


@dataclass
class AxiomViolation:
    instance: str
    degree: int
    element: str
    check: str
    witness: str

    def to_dict(self) -> dict:
        return {
            "instance": self.instance,
            "degree": self.degree,
            "generator": self.element,
            "check": self.check,
            "status": "fail",
            "witness": self.witness,
        }


@dataclass
class AxiomsReport:
    instance: str
    max_degree: int
    elements_checked: int = 0
    violations: list[AxiomViolation] = field(default_factory=list)
    elapsed_seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "instance": self.instance,
            "max_degree": self.max_degree,
            "elements_checked": self.elements_checked,
            "status": "pass" if self.ok else "fail",
            "violations": [v.to_dict() for v in self.violations],
            "elapsed_seconds": round(self.elapsed_seconds, 3),
        }


def check_hopf_axioms(H: HopfAlgebra, max_degree: int, fail_fast: bool = True) -> AxiomsReport:
    """Exact verification of counit, coassociativity, antipode and grading.

    Runs over H.axiom_domain(n) for n <= max_degree.  All comparisons are
    exact rational identities; the report carries the first violation per
    element if any.
    """
    report = AxiomsReport(H.name, max_degree)
    start = time.perf_counter()
    for n in range(1, max_degree + 1):
        for x in H.axiom_domain(n):
            report.elements_checked += 1
            bad = _check_element(H, x, n)
            if bad is not None:
                report.violations.append(bad)
                if fail_fast:
                    report.elapsed_seconds = time.perf_counter() - start
                    return report
    report.elapsed_seconds = time.perf_counter() - start
    return report


def _check_element(H: HopfAlgebra, x: Monomial, n: int) -> AxiomViolation | None:
    label = H.monomial_text(x)
    one = H.empty()
    cop = H.coproduct_monomial(x)

    # grading and the two primitive terms
    for (mu, sigma), c in cop.terms.items():
        if mu.degree + sigma.degree != n:
            return AxiomViolation(H.name, n, label, "degree-preservation",
                                  f"{H.monomial_text(mu)} (x) {H.monomial_text(sigma)}")
    if cop.coefficient(x, one) != 1 or cop.coefficient(one, x) != 1:
        return AxiomViolation(H.name, n, label, "connected-primitive-terms", repr(cop))

    # counit: (eps (x) id) Delta = id = (id (x) eps) Delta
    left = GradedVector({sigma: c for (mu, sigma), c in cop.terms.items() if mu.is_empty()})
    right = GradedVector({mu: c for (mu, sigma), c in cop.terms.items() if sigma.is_empty()})
    if left != GradedVector.of(x) or right != GradedVector.of(x):
        return AxiomViolation(H.name, n, label, "counit", f"left={left!r} right={right!r}")

    # coassociativity, accumulated as (Delta (x) id - id (x) Delta) Delta(x)
    acc: dict[tuple[Monomial, Monomial, Monomial], Coeff] = {}
    for (mu, sigma), c in cop.terms.items():
        for (a, b), d in H.coproduct_monomial(mu).terms.items():
            key = (a, b, sigma)
            v = acc.get(key, 0) + c * d
            if v:
                acc[key] = v
            else:
                acc.pop(key, None)
        for (b, cc), d in H.coproduct_monomial(sigma).terms.items():
            key = (mu, b, cc)
            v = acc.get(key, 0) - c * d
            if v:
                acc[key] = v
            else:
                acc.pop(key, None)
    if acc:
        some = next(iter(acc))
        return AxiomViolation(
            H.name, n, label, "coassociativity",
            f"{len(acc)} unbalanced terms, e.g. {tuple(H.monomial_text(m) for m in some)}",
        )

    # antipode axiom: m(S (x) id) Delta = u eps = m(id (x) S) Delta
    lhs = GradedVector()
    rhs = GradedVector()
    for (mu, sigma), c in cop.terms.items():
        lhs = lhs + H.product(H.antipode_monomial(mu), GradedVector.of(sigma)).scale(c)
        rhs = rhs + H.product(GradedVector.of(mu), H.antipode_monomial(sigma)).scale(c)
    if not lhs.is_zero() or not rhs.is_zero():
        return AxiomViolation(H.name, n, label, "antipode", f"S*id={lhs!r} id*S={rhs!r}")
    return None
