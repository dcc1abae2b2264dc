"""Truncated characters and infinitesimal characters into a target algebra.

A character is stored by its values on generators only; evaluation extends
multiplicatively (through the Lyndon rewrite where the basis is not the
generator monoid).  Convolution of two characters therefore needs only
generator coproducts.  Full monomial tables appear only inside the exp/log
series, which are genuinely linear-map valued midway.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from fractions import Fraction
from math import factorial
from typing import Mapping

from .core import Coeff, GradedVector, Monomial
from .growth import GrowthFamily, builtin
from .hopf import HopfAlgebra


# --------------------------------------------------------------------------
# target algebras


class TargetAlgebra(ABC):
    """Commutative unital algebra with a submultiplicative norm, ||1|| = 1."""

    name: str

    @property
    @abstractmethod
    def one(self): ...

    @property
    @abstractmethod
    def zero(self): ...

    @abstractmethod
    def add(self, a, b): ...

    @abstractmethod
    def mul(self, a, b): ...

    @abstractmethod
    def scale(self, q: Coeff, a): ...

    @abstractmethod
    def norm(self, a): ...

    @abstractmethod
    def from_rational(self, q: Coeff): ...

    def neg(self, a):
        return self.scale(-1, a)

    def is_zero(self, a) -> bool:
        return a == self.zero

    def __repr__(self) -> str:
        return f"<target {self.name}>"


class RationalTarget(TargetAlgebra):
    name = "rational"
    one = 1
    zero = 0

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def scale(self, q, a):
        return q * a

    def norm(self, a):
        return abs(a)

    def from_rational(self, q):
        return q


class FloatTarget(TargetAlgebra):
    name = "float"
    one = 1.0
    zero = 0.0

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def scale(self, q, a):
        return float(q) * a

    def norm(self, a):
        return abs(a)

    def from_rational(self, q):
        return float(q)


class DualTarget(TargetAlgebra):
    """Dual numbers a + eps a' with eps^2 = 0; norm |a| + |a'|."""

    name = "dual"
    one = (1, 0)
    zero = (0, 0)

    def add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def mul(self, a, b):
        return (a[0] * b[0], a[0] * b[1] + a[1] * b[0])

    def scale(self, q, a):
        return (q * a[0], q * a[1])

    def norm(self, a):
        return abs(a[0]) + abs(a[1])

    def from_rational(self, q):
        return (q, 0)


RATIONAL = RationalTarget()
FLOAT = FloatTarget()
DUAL = DualTarget()

TARGETS = {"rational": RATIONAL, "float": FLOAT, "dual": DUAL}


# --------------------------------------------------------------------------
# the three map containers


class _BaseMap:
    kind: str

    def __init__(self, hopf: HopfAlgebra, N: int, target: TargetAlgebra):
        self.hopf = hopf
        self.N = N
        self.target = target
        self._cache: dict[Monomial, object] = {}

    def _guard(self, m: Monomial) -> None:
        if m.degree > self.N:
            raise ValueError(
                f"degree {m.degree} exceeds truncation N={self.N} for {self.kind}")

    def on_vector(self, v: GradedVector):
        """Linear extension to a vector of monomials."""
        B = self.target
        total = B.zero
        for m, c in v.terms.items():
            total = B.add(total, B.scale(c, self.evaluate(m)))
        return total

    def evaluate(self, m: Monomial):  # pragma: no cover - overridden
        raise NotImplementedError


def _clean_generator_values(hopf: HopfAlgebra, N: int,
                            values: Mapping[Monomial, object]) -> dict[Monomial, object]:
    out: dict[Monomial, object] = {}
    for m, v in values.items():
        if not hopf.is_generator(m):
            raise ValueError(f"{hopf.monomial_text(m)} is not a generator of {hopf.name}")
        if m.degree > N:
            raise ValueError(f"generator {hopf.monomial_text(m)} exceeds N={N}")
        out[m] = v
    return out


class TruncatedCharacter(_BaseMap):
    """Multiplicative unital map, determined by generator values."""

    kind = "character"

    def __init__(self, hopf, N, target, values: Mapping[Monomial, object]):
        super().__init__(hopf, N, target)
        self.values = _clean_generator_values(hopf, N, values)

    def evaluate(self, m: Monomial):
        self._guard(m)
        if m.is_empty():
            return self.target.one
        cached = self._cache.get(m)
        if cached is not None:
            return cached
        B = self.target
        total = B.zero
        for coeff, gens in self.hopf.generator_factorizations(m):
            prod = B.one
            for g in gens:
                prod = B.mul(prod, self.values.get(g, B.zero))
            total = B.add(total, B.scale(coeff, prod))
        self._cache[m] = total
        return total


class TruncatedInfChar(_BaseMap):
    """Derivation past the counit: zero on 1 and on multi-factor monomials."""

    kind = "infinitesimal character"

    def __init__(self, hopf, N, target, values: Mapping[Monomial, object]):
        super().__init__(hopf, N, target)
        self.values = _clean_generator_values(hopf, N, values)

    def evaluate(self, m: Monomial):
        self._guard(m)
        if m.is_empty():
            return self.target.zero
        cached = self._cache.get(m)
        if cached is not None:
            return cached
        B = self.target
        total = B.zero
        for coeff, gens in self.hopf.generator_factorizations(m):
            if len(gens) == 1:
                total = B.add(total, B.scale(coeff, self.values.get(gens[0], B.zero)))
        self._cache[m] = total
        return total


class TruncatedLinearMap(_BaseMap):
    """Plain table on all monomials of degree <= N; no algebraic law."""

    kind = "linear map"

    def __init__(self, hopf, N, target, table: Mapping[Monomial, object]):
        super().__init__(hopf, N, target)
        self.table = dict(table)

    def evaluate(self, m: Monomial):
        self._guard(m)
        return self.table.get(m, self.target.zero)


def counit_character(hopf: HopfAlgebra, N: int,
                     target: TargetAlgebra = RATIONAL) -> TruncatedCharacter:
    return TruncatedCharacter(hopf, N, target, {})


# --------------------------------------------------------------------------
# convolution and the group operations


def _check_compatible(phi, psi) -> None:
    if phi.hopf.name != psi.hopf.name:
        raise ValueError(f"instances differ: {phi.hopf.name} vs {psi.hopf.name}")
    if phi.N != psi.N:
        raise ValueError(f"truncations differ: {phi.N} vs {psi.N}")
    if phi.target is not psi.target:
        raise ValueError("target algebras differ")


def _convolve_on(phi, psi, m: Monomial):
    B = phi.target
    total = B.zero
    for (mu, sigma), c in phi.hopf.coproduct_monomial(m).terms.items():
        total = B.add(total, B.scale(c, B.mul(phi.evaluate(mu), psi.evaluate(sigma))))
    return total


def convolve(phi, psi):
    """phi * psi through the coproduct; character inputs give a character."""
    _check_compatible(phi, psi)
    H, N, B = phi.hopf, phi.N, phi.target
    if isinstance(phi, TruncatedCharacter) and isinstance(psi, TruncatedCharacter):
        values = {g: _convolve_on(phi, psi, g) for g in H.generators_upto(N)}
        return TruncatedCharacter(H, N, B, values)
    table = {m: _convolve_on(phi, psi, m) for m in H.basis_upto(N)}
    return TruncatedLinearMap(H, N, B, table)


def inverse(phi: TruncatedCharacter) -> TruncatedCharacter:
    """Convolution inverse: composition with the antipode."""
    H = phi.hopf
    values = {g: phi.on_vector(H.antipode_monomial(g)) for g in H.generators_upto(phi.N)}
    return TruncatedCharacter(H, phi.N, phi.target, values)


def linf_norm(phi, family: GrowthFamily, k: int, N: int | None = None,
              over: str = "generators"):
    """Finite-degree sup of ||phi(m)|| / omega_k(|m|).

    A truncation cannot certify the supremum over all degrees; treat the
    result as a finite-degree proxy.
    """
    if N is None:
        N = phi.N
    if over == "generators":
        domain = phi.hopf.generators_upto(N)
    elif over == "monomials":
        domain = phi.hopf.basis_upto(N)
    else:
        raise ValueError("over must be 'generators' or 'monomials'")
    best = None
    for m in domain:
        ratio = phi.target.norm(phi.evaluate(m)) / family.eval(k, m.degree)
        if best is None or ratio > best:
            best = ratio
    return 0 if best is None else best


def extend(hopf: HopfAlgebra, N: int, target: TargetAlgebra,
           f: Mapping[Monomial, object]) -> TruncatedCharacter:
    """The unique multiplicative extension of generator values."""
    return TruncatedCharacter(hopf, N, target, f)


def controlled_witness(phi, family: GrowthFamily, radius=1, k_max: int = 64,
                       over: str = "generators") -> dict:
    """Least k whose finite-degree norm is <= radius; a truncation proxy."""
    guard = 1e-12 if not family.is_exact or phi.target is FLOAT else 0
    for k in range(1, k_max + 1):
        norm = linf_norm(phi, family, k, over=over)
        if norm <= radius + guard:
            return {"witness_k": k, "norm": _json_number(norm),
                    "note": "finite-degree proxy"}
    return {"witness_k": None, "norm": None, "note": "finite-degree proxy"}


# --------------------------------------------------------------------------
# exp / log / bracket


def _table_convolve(H, N, B, t1: dict, t2: dict) -> dict:
    out = {}
    for m in t1:  # both tables share the basis key set
        total = B.zero
        for (mu, sigma), c in H.coproduct_monomial(m).terms.items():
            total = B.add(total, B.scale(c, B.mul(t1[mu], t2[sigma])))
        out[m] = total
    return out


def exp_infchar(eta: TruncatedInfChar, N: int | None = None) -> TruncatedCharacter:
    """exp(eta) = sum eta^{*j}/j!; the j-th power vanishes below degree j."""
    if N is None:
        N = eta.N
    H, B = eta.hopf, eta.target
    basis = H.basis_upto(N)
    eta_table = {m: eta.evaluate(m) for m in basis}
    acc = {m: (B.one if m.is_empty() else B.zero) for m in basis}
    power = dict(acc)
    for j in range(1, N + 1):
        power = _table_convolve(H, N, B, power, eta_table)
        inv = Fraction(1, factorial(j))
        for m in basis:
            acc[m] = B.add(acc[m], B.scale(inv, power[m]))
    values = {g: acc[g] for g in H.generators_upto(N)}
    return TruncatedCharacter(H, N, B, values)


def log_character(phi: TruncatedCharacter, N: int | None = None) -> TruncatedInfChar:
    """Formal inverse of exp: sum (-1)^{j+1} (phi - counit)^{*j} / j."""
    if N is None:
        N = phi.N
    H, B = phi.hopf, phi.target
    basis = H.basis_upto(N)
    psi = {m: (B.zero if m.is_empty() else phi.evaluate(m)) for m in basis}
    acc = {m: B.zero for m in basis}
    power = psi
    for j in range(1, N + 1):
        if j > 1:
            power = _table_convolve(H, N, B, power, psi)
        c = Fraction(1 if j % 2 else -1, j)
        for m in basis:
            acc[m] = B.add(acc[m], B.scale(c, power[m]))
    values = {g: acc[g] for g in H.generators_upto(N)}
    return TruncatedInfChar(H, N, B, values)


def bracket(eta1: TruncatedInfChar, eta2: TruncatedInfChar) -> TruncatedInfChar:
    """Convolution commutator eta1 * eta2 - eta2 * eta1 on generators."""
    _check_compatible(eta1, eta2)
    H, N, B = eta1.hopf, eta1.N, eta1.target
    values = {}
    for g in H.generators_upto(N):
        v = B.add(_convolve_on(eta1, eta2, g), B.neg(_convolve_on(eta2, eta1, g)))
        values[g] = v
    return TruncatedInfChar(H, N, B, values)


# --------------------------------------------------------------------------
# law-verification helpers (used by tests and reports)


def check_multiplicative(phi: TruncatedCharacter,
                         pairs) -> tuple[bool, str | None]:
    """phi(m1 . m2) == phi(m1) phi(m2) under the instance product."""
    H, B = phi.hopf, phi.target
    for m1, m2 in pairs:
        lhs = phi.on_vector(H.product_monomials(m1, m2))
        rhs = B.mul(phi.evaluate(m1), phi.evaluate(m2))
        if lhs != rhs:
            return False, f"{H.monomial_text(m1)} . {H.monomial_text(m2)}"
    return True, None


def check_derivation(eta: TruncatedInfChar, pairs) -> tuple[bool, str | None]:
    """eta(m1 . m2) == eps(m1) eta(m2) + eta(m1) eps(m2) for nonempty mi."""
    H, B = eta.hopf, eta.target
    for m1, m2 in pairs:
        lhs = eta.on_vector(H.product_monomials(m1, m2))
        e1 = B.one if m1.is_empty() else B.zero
        e2 = B.one if m2.is_empty() else B.zero
        rhs = B.add(B.mul(e1, eta.evaluate(m2)), B.mul(eta.evaluate(m1), e2))
        if lhs != rhs:
            return False, f"{H.monomial_text(m1)} . {H.monomial_text(m2)}"
    return True, None


def _json_number(x):
    if isinstance(x, Fraction):
        return float(x) if x.denominator != 1 else int(x)
    return x


# --------------------------------------------------------------------------
# the non-group counterexample


def counterexample_demo() -> dict:
    """The controlled-character set can fail to be a group.

    On the one-primitive-generator instance, characters correspond to their
    value at X and convolution adds values.  Under the decaying pseudo
    family exp(-n/k), the value 0.9 is controlled (witness k = 10) but the
    convolution square's value 1.8 exceeds every weight exp(-1/k) < 1, so
    no k controls it.
    """
    from .instances import Binomial

    H = Binomial()
    anti = builtin("anti")
    N = 2
    X = H.generators(1)[0]
    phi = TruncatedCharacter(H, N, FLOAT, {X: 0.9})

    w10 = anti.eval(10, 1)
    controlled = 0.9 <= w10 + 1e-12
    square = convolve(phi, phi)
    val = square.evaluate(X)

    # exp(-1/k) increases in k, so the largest weight is at the largest k
    k_big = 10**6
    max_weight = anti.eval(k_big, 1)
    escapes_all = val > max_weight
    sampled_ok = all(val > anti.eval(k, 1) for k in range(1, 10001))

    steps = [
        {"step": "construct", "detail": "character value at X", "value": 0.9, "ok": True},
        {"step": "control-witness", "detail": "0.9 <= exp(-1/10)",
         "value": w10, "ok": bool(controlled)},
        {"step": "convolve", "detail": "(phi * phi)(X) adds values",
         "value": val, "ok": abs(val - 1.8) < 1e-12},
        {"step": "escape", "detail": f"1.8 > exp(-1/k) for all k <= {k_big}",
         "value": max_weight, "ok": bool(escapes_all and sampled_ok)},
    ]
    return {
        "instance": H.name,
        "family": anti.name,
        "phi_at_X": 0.9,
        "witness_k": 10,
        "controlled": bool(controlled),
        "square_at_X": val,
        "max_weight_at_degree_1": max_weight,
        "uncontrolled_square": bool(escapes_all and sampled_ok),
        "status": "pass" if (controlled and escapes_all and sampled_ok
                             and abs(val - 1.8) < 1e-12) else "fail",
        "trace": steps,
    }
