"""Graded alphabets, free (commutative) monoids and sparse exact-rational vectors.

Everything downstream is built from four value types:

* :class:`Generator` -- an element of a graded alphabet (a tree, a word, a
  series coefficient), identified by a canonical text key.
* :class:`Monomial` -- a product of generators: a sorted multiset in
  commutative mode, an ordered sequence in word mode.  The empty monomial is
  the unit and the only degree-0 element.
* :class:`GradedVector` -- finitely supported map ``Monomial -> coefficient``.
* :class:`TensorVector` -- finitely supported map on pairs of monomials,
  the output type of coproducts.

Coefficients are exact rationals stored as ``int`` where possible and
``fractions.Fraction`` otherwise; no zero coefficient is ever stored.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

Coeff = Union[int, Fraction]

COMMUTATIVE = "commutative"
WORD = "word"
_MODES = (COMMUTATIVE, WORD)


def normalize_coeff(c: Coeff) -> Coeff:
    """Collapse integral Fractions to plain ints (exactness is unaffected)."""
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


class Generator:
    """A graded alphabet element with a canonical text key.

    Two generators are equal iff alphabet and key agree; the degree is
    carried along and must be >= 1 (pure alphabet, no degree-0 generators).
    """

    __slots__ = ("alphabet", "key", "degree", "_hash")

    def __init__(self, alphabet: str, key: str, degree: int):
        if degree < 1:
            raise ValueError(f"generator degree must be >= 1, got {degree}")
        self.alphabet = alphabet
        self.key = key
        self.degree = degree
        self._hash = hash((alphabet, key))

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, Generator):
            return NotImplemented
        return self.key == other.key and self.alphabet == other.alphabet

    def __hash__(self) -> int:
        return self._hash

    def sort_key(self) -> tuple:
        return (self.degree, self.key)

    def __repr__(self) -> str:
        return f"Generator({self.alphabet!r}, {self.key!r}, deg={self.degree})"


class Monomial:
    """A product of generators from one alphabet, in one commutativity mode."""

    __slots__ = ("mode", "factors", "degree", "_hash")

    def __init__(self, mode: str, factors: tuple[Generator, ...], _sorted: bool = False):
        if mode not in _MODES:
            raise ValueError(f"unknown mode {mode!r}")
        if mode == COMMUTATIVE and not _sorted:
            factors = tuple(sorted(factors, key=Generator.sort_key))
        alphabets = {g.alphabet for g in factors}
        if len(alphabets) > 1:
            raise ValueError(f"mixed alphabets in one monomial: {sorted(alphabets)}")
        self.mode = mode
        self.factors = factors
        self.degree = sum(g.degree for g in factors)
        self._hash = hash((mode, factors))

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, Monomial):
            return NotImplemented
        return self._hash == other._hash and self.mode == other.mode and self.factors == other.factors

    def __hash__(self) -> int:
        return self._hash

    def is_empty(self) -> bool:
        return not self.factors

    def is_single(self) -> bool:
        return len(self.factors) == 1

    def alphabet(self) -> str | None:
        return self.factors[0].alphabet if self.factors else None

    def sort_key(self) -> tuple:
        return (self.degree, tuple(g.key for g in self.factors))

    def __repr__(self) -> str:
        if not self.factors:
            return "1"
        return "*".join(g.key for g in self.factors)


def empty_monomial(mode: str) -> Monomial:
    return Monomial(mode, ())


def monomial_of(g: Generator, mode: str = COMMUTATIVE) -> Monomial:
    return Monomial(mode, (g,), _sorted=True)


def monomial_product(a: Monomial, b: Monomial) -> Monomial:
    """Monoid product: multiset union (commutative) or concatenation (word)."""
    if a.mode != b.mode:
        raise ValueError(f"cannot multiply a {a.mode} monomial by a {b.mode} one")
    if a.factors and b.factors and a.factors[0].alphabet != b.factors[0].alphabet:
        raise ValueError("cannot multiply monomials over different alphabets")
    if not a.factors:
        return b
    if not b.factors:
        return a
    return Monomial(a.mode, a.factors + b.factors)


class GradedVector:
    """Sparse linear combination of monomials with exact coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Coeff] | None = None):
        clean: dict[Monomial, Coeff] = {}
        if terms:
            for m, c in terms.items():
                c = normalize_coeff(c)
                if c:
                    clean[m] = c
        self.terms = clean

    @classmethod
    def zero(cls) -> "GradedVector":
        return cls()

    @classmethod
    def unit(cls, mode: str) -> "GradedVector":
        return cls({empty_monomial(mode): 1})

    @classmethod
    def of(cls, m: Monomial, c: Coeff = 1) -> "GradedVector":
        return cls({m: c})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedVector):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        raise TypeError("GradedVector is not hashable")

    def __iter__(self) -> Iterator[tuple[Monomial, Coeff]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: "GradedVector") -> "GradedVector":
        out = dict(self.terms)
        for m, c in other.terms.items():
            acc = out.get(m, 0) + c
            if acc:
                out[m] = acc
            else:
                out.pop(m, None)
        v = GradedVector.__new__(GradedVector)
        v.terms = out
        return v

    def __neg__(self) -> "GradedVector":
        v = GradedVector.__new__(GradedVector)
        v.terms = {m: -c for m, c in self.terms.items()}
        return v

    def __sub__(self, other: "GradedVector") -> "GradedVector":
        return self + (-other)

    def scale(self, c: Coeff) -> "GradedVector":
        c = normalize_coeff(c)
        if not c:
            return GradedVector()
        v = GradedVector.__new__(GradedVector)
        v.terms = {m: normalize_coeff(k * c) for m, k in self.terms.items()}
        return v

    def __rmul__(self, c: Coeff) -> "GradedVector":
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, GradedVector):
            return vector_product(self, other)
        return NotImplemented

    def coefficient(self, m: Monomial) -> Coeff:
        return self.terms.get(m, 0)

    def counit(self, mode: str) -> Coeff:
        return self.terms.get(empty_monomial(mode), 0)

    def max_degree(self) -> int:
        return max((m.degree for m in self.terms), default=0)

    def l1_norm(self, family, k: int):
        """Sum of |coefficient| * omega_k(degree) over all terms."""
        total = 0
        for m, c in self.terms.items():
            total += abs(c) * family.eval(k, m.degree)
        return normalize_coeff(total) if isinstance(total, Fraction) else total

    def sorted_terms(self) -> list[tuple[Monomial, Coeff]]:
        return sorted(self.terms.items(), key=lambda mc: mc[0].sort_key())

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{m!r}" for m, c in self.sorted_terms())


def vector_product(u: GradedVector, v: GradedVector) -> GradedVector:
    """Bilinear extension of the monoid product."""
    out: dict[Monomial, Coeff] = {}
    for ma, ca in u.terms.items():
        for mb, cb in v.terms.items():
            m = monomial_product(ma, mb)
            acc = out.get(m, 0) + ca * cb
            if acc:
                out[m] = acc
            else:
                out.pop(m, None)
    w = GradedVector.__new__(GradedVector)
    w.terms = {m: normalize_coeff(c) for m, c in out.items()}
    return w


class TensorVector:
    """Sparse vector on pairs of monomials; houses coproduct output."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[Monomial, Monomial], Coeff] | None = None):
        clean: dict[tuple[Monomial, Monomial], Coeff] = {}
        if terms:
            for p, c in terms.items():
                c = normalize_coeff(c)
                if c:
                    clean[p] = c
        self.terms = clean

    @classmethod
    def of(cls, left: Monomial, right: Monomial, c: Coeff = 1) -> "TensorVector":
        return cls({(left, right): c})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorVector):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        raise TypeError("TensorVector is not hashable")

    def __iter__(self) -> Iterator[tuple[tuple[Monomial, Monomial], Coeff]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: "TensorVector") -> "TensorVector":
        out = dict(self.terms)
        for p, c in other.terms.items():
            acc = out.get(p, 0) + c
            if acc:
                out[p] = acc
            else:
                out.pop(p, None)
        t = TensorVector.__new__(TensorVector)
        t.terms = out
        return t

    def __neg__(self) -> "TensorVector":
        t = TensorVector.__new__(TensorVector)
        t.terms = {p: -c for p, c in self.terms.items()}
        return t

    def __sub__(self, other: "TensorVector") -> "TensorVector":
        return self + (-other)

    def scale(self, c: Coeff) -> "TensorVector":
        c = normalize_coeff(c)
        if not c:
            return TensorVector()
        t = TensorVector.__new__(TensorVector)
        t.terms = {p: normalize_coeff(k * c) for p, k in self.terms.items()}
        return t

    def __rmul__(self, c: Coeff) -> "TensorVector":
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def coefficient(self, left: Monomial, right: Monomial) -> Coeff:
        return self.terms.get((left, right), 0)

    def l1_norm(self, family, k: int):
        """Sum of |c_{mu,sigma}| * omega_k(|mu| + |sigma|)."""
        total = 0
        for (left, right), c in self.terms.items():
            total += abs(c) * family.eval(k, left.degree + right.degree)
        return normalize_coeff(total) if isinstance(total, Fraction) else total

    def l1_count(self) -> Coeff:
        """Unweighted coefficient mass, sum of |c|."""
        total = sum(abs(c) for c in self.terms.values())
        return normalize_coeff(total) if isinstance(total, Fraction) else total

    def sorted_terms(self) -> list[tuple[tuple[Monomial, Monomial], Coeff]]:
        return sorted(self.terms.items(), key=lambda pc: (pc[0][0].sort_key(), pc[0][1].sort_key()))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*({a!r} (x) {b!r})" for (a, b), c in self.sorted_terms())


def tensor_product(s: TensorVector, t: TensorVector) -> TensorVector:
    """Componentwise product, (a (x) b)(c (x) d) = ac (x) bd."""
    out: dict[tuple[Monomial, Monomial], Coeff] = {}
    for (la, ra), ca in s.terms.items():
        for (lb, rb), cb in t.terms.items():
            p = (monomial_product(la, lb), monomial_product(ra, rb))
            acc = out.get(p, 0) + ca * cb
            if acc:
                out[p] = acc
            else:
                out.pop(p, None)
    u = TensorVector.__new__(TensorVector)
    u.terms = {p: normalize_coeff(c) for p, c in out.items()}
    return u


def l1_norm(v: GradedVector, family, k: int):
    return v.l1_norm(family, k)


def tensor_l1_norm(t: TensorVector, family, k: int):
    return t.l1_norm(family, k)
