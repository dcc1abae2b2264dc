"""Concrete Hopf algebras: rooted trees, shuffle, substitution, binomial.

Five instances share the interface in :mod:`hopfchar.hopf`:

``ck`` / ``ck2``
    Polynomial algebra on rooted trees (one or two node colours).  The
    coproduct sums over rooted subtree cuts, forest on the left and kept
    root part on the right; the antipode sums signed edge-subset cuts.
``shuffle:<letters>``
    Words under the shuffle product with deconcatenation coproduct.  The
    polynomial generators are the Lyndon words.
``fdb-a`` / ``fdb-x``
    One generator per positive degree, with the composition-of-series
    coproduct in two normalisations; closed antipode via lattice-path
    coefficients.
``binomial``
    One primitive generator; the smallest instance and the standard
    source of counterexamples.
"""

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterator

from .core import (
    COMMUTATIVE,
    WORD,
    Coeff,
    Generator,
    GradedVector,
    Monomial,
    TensorVector,
    monomial_of,
)
from .hopf import HopfAlgebra
from .trees import RootedTree, edge_cuts, iter_nodes, parse_tree, root_cuts, trees_of_order
from .words import (
    Word,
    all_words,
    deconcatenations,
    is_lyndon,
    lyndon_rewrite_word,
    lyndon_words,
    shuffle_words,
)

# --------------------------------------------------------------------------
# small combinatorial helpers


def compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of `parts` positive integers summing to n."""
    if parts < 1 or n < parts:
        return
    for cuts in itertools.combinations(range(1, n), parts - 1):
        bounds = (0,) + cuts + (n,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(parts))


def partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Nonincreasing positive parts summing to n; () is the partition of 0."""
    if n == 0:
        yield ()
        return
    mp = n if max_part is None else min(max_part, n)
    for p in range(mp, 0, -1):
        for rest in partitions(n - p, p):
            yield (p,) + rest


@lru_cache(maxsize=None)
def admissible_tuples(r: int) -> tuple[tuple[int, ...], ...]:
    """Tuples (m_1..m_r) of nonnegative integers with sum r and every
    proper prefix sum m_1+..+m_h >= h.  There are Catalan(r) of them."""
    if r == 0:
        return ((),)
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], total: int) -> None:
        h = len(prefix)
        if h == r - 1:
            last = r - total
            if last >= 0:
                out.append(tuple(prefix) + (last,))
            return
        for m in range(r - total + 1):
            if total + m >= h + 1:
                prefix.append(m)
                rec(prefix, total + m)
                prefix.pop()

    rec([], 0)
    return tuple(out)


@lru_cache(maxsize=None)
def lambda_coefficient(parts: tuple[int, ...]) -> int:
    """Lattice-path weight used by the closed substitution antipodes."""
    r = len(parts)
    total = 0
    for ms in admissible_tuples(r):
        p = 1
        for n_i, m_i in zip(parts, ms):
            p *= comb(n_i + 1, m_i)
            if not p:
                break
        total += p
    return total


def bell_partial(n: int, k: int, args):
    """Partial Bell polynomial B_{n,k} at args = (x_1, ..., x_{n-k+1}).

    Works on numbers and on GradedVectors alike; with vector arguments the
    caller supplies the unit vector for any argument equal to 1.
    """
    vector_mode = any(isinstance(a, GradedVector) for a in args)
    total_vec = GradedVector() if vector_mode else None
    total_num: Coeff = 0
    for part in partitions(n, n - k + 1):
        if len(part) != k:
            continue
        mult = Counter(part)
        den = 1
        for j, m in mult.items():
            den *= factorial(m) * factorial(j) ** m
        coeff = factorial(n) // den
        if vector_mode:
            term = None
            for j, m in mult.items():
                for _ in range(m):
                    term = args[j - 1] if term is None else term * args[j - 1]
            total_vec = total_vec + term.scale(coeff)
        else:
            prod: Coeff = coeff
            for j, m in mult.items():
                prod *= args[j - 1] ** m
            total_num += prod
    return total_vec if vector_mode else total_num


# --------------------------------------------------------------------------
# rooted trees


class ConnesKreimer(HopfAlgebra):
    """Polynomial Hopf algebra on rooted trees (1 or more node colours)."""

    mode = COMMUTATIVE

    def __init__(self, colours: int = 1):
        super().__init__()
        if colours < 1:
            raise ValueError("colours must be >= 1")
        self.colours = colours
        self.name = "ck" if colours == 1 else f"ck{colours}"
        self._coloured = colours > 1
        self._gen_by_tree: dict[RootedTree, Generator] = {}
        self._tree_by_key: dict[str, RootedTree] = {}

    def tree_generator(self, t: RootedTree) -> Generator:
        g = self._gen_by_tree.get(t)
        if g is None:
            key = t.encode(self._coloured)
            g = Generator(self.name, key, t.order)
            self._gen_by_tree[t] = g
            self._tree_by_key[key] = t
        return g

    def tree_monomial(self, t: RootedTree) -> Monomial:
        return monomial_of(self.tree_generator(t))

    def forest_monomial(self, forest: tuple[RootedTree, ...]) -> Monomial:
        return Monomial(COMMUTATIVE, tuple(self.tree_generator(t) for t in forest))

    def tree_of(self, g: Generator) -> RootedTree:
        t = self._tree_by_key.get(g.key)
        if t is None:
            t = parse_tree(g.key, self._coloured)
            self._tree_by_key[g.key] = t
        return t

    def generators(self, n: int) -> tuple[Monomial, ...]:
        return tuple(self.tree_monomial(t) for t in trees_of_order(n, self.colours))

    def generator_from_text(self, text: str) -> Monomial:
        t = parse_tree(text, self._coloured)
        if any(node.colour >= self.colours for node in iter_nodes(t)):
            raise ValueError(f"tree {text!r} uses colours beyond {self.name}")
        return self.tree_monomial(t)

    def coproduct_generator(self, g: Monomial) -> TensorVector:
        t = self.tree_of(g.factors[0])
        terms: dict[tuple[Monomial, Monomial], Coeff] = {}
        empty = self.empty()
        for kept, forest in root_cuts(t):
            left = self.forest_monomial(forest)
            right = empty if kept is None else self.tree_monomial(kept)
            terms[(left, right)] = terms.get((left, right), 0) + 1
        return TensorVector(terms)

    def antipode_generator_explicit(self, g: Monomial) -> GradedVector:
        t = self.tree_of(g.factors[0])
        terms: dict[Monomial, Coeff] = {}
        for forest in edge_cuts(t):
            m = self.forest_monomial(forest)
            sign = -1 if len(forest) % 2 else 1
            terms[m] = terms.get(m, 0) + sign
        return GradedVector(terms)


# --------------------------------------------------------------------------
# shuffle algebra on words


class Shuffle(HopfAlgebra):
    """Words over a finite alphabet with the shuffle product.

    The vector-space basis in each degree is the full set of words; the
    polynomial generators are the Lyndon words, via the factorisation of
    every word as a shuffle polynomial in Lyndon words.
    """

    mode = WORD

    def __init__(self, letters: str):
        super().__init__()
        if not letters:
            raise ValueError("shuffle alphabet must be nonempty")
        if len(set(letters)) != len(letters):
            raise ValueError(f"repeated letters in alphabet {letters!r}")
        self.letters = "".join(sorted(letters))
        self.name = f"shuffle:{self.letters}"
        self._gen = {ch: Generator(self.name, ch, 1) for ch in self.letters}

    def word_monomial(self, w: Word) -> Monomial:
        return Monomial(WORD, tuple(self._gen[ch] for ch in w), _sorted=True)

    def word_of(self, m: Monomial) -> Word:
        return tuple(g.key for g in m.factors)

    def generators(self, n: int) -> tuple[Monomial, ...]:
        return tuple(
            self.word_monomial(w) for w in lyndon_words(self.letters, n) if len(w) == n
        )

    def basis(self, n: int) -> tuple[Monomial, ...]:
        if n not in self._basis_cache:
            self._basis_cache[n] = tuple(
                self.word_monomial(w) for w in all_words(self.letters, n)
            )
        return self._basis_cache[n]

    def axiom_domain(self, n: int) -> tuple[Monomial, ...]:
        return self.basis(n)

    def is_generator(self, m: Monomial) -> bool:
        return bool(m.factors) and is_lyndon(self.word_of(m))

    def generator_from_text(self, text: str) -> Monomial:
        w = tuple(text)
        for ch in w:
            if ch not in self._gen:
                raise ValueError(f"letter {ch!r} not in alphabet {self.letters!r}")
        if not is_lyndon(w):
            raise ValueError(f"word {text!r} is not a Lyndon word")
        return self.word_monomial(w)

    def monomial_from_text(self, text: str) -> Monomial:
        if text in ("1", ""):
            return self.empty()
        w = tuple(text)
        for ch in w:
            if ch not in self._gen:
                raise ValueError(f"letter {ch!r} not in alphabet {self.letters!r}")
        return self.word_monomial(w)

    def monomial_text(self, m: Monomial) -> str:
        return "".join(g.key for g in m.factors) if m.factors else "1"

    def product_monomials(self, a: Monomial, b: Monomial) -> GradedVector:
        out = shuffle_words(self.word_of(a), self.word_of(b))
        return GradedVector({self.word_monomial(w): c for w, c in out.items()})

    def coproduct_generator(self, g: Monomial) -> TensorVector:
        return self.coproduct_monomial(g)

    def coproduct_monomial(self, m: Monomial) -> TensorVector:
        cached = self._coproduct_cache.get(m)
        if cached is None:
            w = self.word_of(m)
            cached = TensorVector(
                {(self.word_monomial(u), self.word_monomial(v)): 1
                 for u, v in deconcatenations(w)}
            )
            self._coproduct_cache[m] = cached
        return cached

    def antipode_monomial(self, m: Monomial) -> GradedVector:
        sign = -1 if len(m.factors) % 2 else 1
        return GradedVector.of(self.word_monomial(tuple(reversed(self.word_of(m)))), sign)

    def generator_factorizations(
        self, m: Monomial
    ) -> tuple[tuple[Coeff, tuple[Monomial, ...]], ...]:
        if m.is_empty():
            return ((1, ()),)
        return tuple(
            (coeff, tuple(self.word_monomial(w) for w in multiset))
            for multiset, coeff in lyndon_rewrite_word(self.word_of(m))
        )


# --------------------------------------------------------------------------
# substitution (composition-of-series) algebras


class _FaaDiBrunoBase(HopfAlgebra):
    mode = COMMUTATIVE
    prefix: str

    def __init__(self):
        super().__init__()
        self._gens: dict[int, Generator] = {}

    def gen(self, n: int) -> Generator:
        g = self._gens.get(n)
        if g is None:
            g = Generator(self.name, f"{self.prefix}{n}", n)
            self._gens[n] = g
        return g

    def gen_monomial(self, n: int) -> Monomial:
        return monomial_of(self.gen(n))

    def generators(self, n: int) -> tuple[Monomial, ...]:
        return (self.gen_monomial(n),) if n >= 1 else ()

    def generator_from_text(self, text: str) -> Monomial:
        if not text.startswith(self.prefix):
            raise ValueError(f"expected generator like {self.prefix}3, got {text!r}")
        n = int(text[len(self.prefix):])
        if n < 1:
            raise ValueError(f"generator index must be >= 1, got {text!r}")
        return self.gen_monomial(n)

    def _composition_monomial(self, comp: tuple[int, ...]) -> Monomial:
        return Monomial(COMMUTATIVE, tuple(self.gen(i) for i in comp))


class FaaDiBrunoA(_FaaDiBrunoBase):
    """Coefficient normalisation f(x) = x + sum a_n x^{n+1}."""

    name = "fdb-a"
    prefix = "a"

    def coproduct_generator(self, g: Monomial) -> TensorVector:
        n = g.degree
        terms: dict[tuple[Monomial, Monomial], Coeff] = {}
        empty = self.empty()
        for r in range(n + 1):
            left = empty if r == 0 else self.gen_monomial(r)
            for part in partitions(n - r):
                used = len(part)
                b0 = r + 1 - used
                if b0 < 0:
                    continue
                den = factorial(b0)
                for m in Counter(part).values():
                    den *= factorial(m)
                coeff = factorial(r + 1) // den
                right = self._composition_monomial(part)
                key = (left, right)
                terms[key] = terms.get(key, 0) + coeff
        return TensorVector(terms)

    def antipode_generator_explicit(self, g: Monomial) -> GradedVector:
        n = g.degree
        terms: dict[Monomial, Coeff] = {self.gen_monomial(n): -1}
        for r in range(1, n):
            sign = 1 if r % 2 else -1  # -(-1)^r
            for comp in compositions(n, r + 1):
                lam = lambda_coefficient(comp[:r])
                if not lam:
                    continue
                m = self._composition_monomial(comp)
                acc = terms.get(m, 0) + sign * lam
                if acc:
                    terms[m] = acc
                else:
                    terms.pop(m, None)
        return GradedVector(terms)


class FaaDiBrunoX(_FaaDiBrunoBase):
    """Coefficient normalisation with X_n = (n+1)! a_n; Bell-polynomial coproduct."""

    name = "fdb-x"
    prefix = "X"

    def coproduct_generator(self, g: Monomial) -> TensorVector:
        n = g.degree
        terms: dict[tuple[Monomial, Monomial], Coeff] = {}
        empty = self.empty()
        unit = GradedVector.unit(COMMUTATIVE)
        # argument x_j of the Bell polynomial is X_{j-1}, with X_0 = 1
        args = [unit] + [GradedVector.of(self.gen_monomial(j)) for j in range(1, n + 1)]
        for k in range(n + 1):
            left = empty if k == 0 else self.gen_monomial(k)
            right = bell_partial(n + 1, k + 1, args[: n - k + 1])
            for m, c in right.terms.items():
                key = (left, m)
                acc = terms.get(key, 0) + c
                if acc:
                    terms[key] = acc
                else:
                    terms.pop(key, None)
        return TensorVector(terms)

    def antipode_generator_explicit(self, g: Monomial) -> GradedVector:
        n = g.degree
        terms: dict[Monomial, Coeff] = {self.gen_monomial(n): -1}
        for r in range(1, n):
            sign = 1 if r % 2 else -1  # -(-1)^r
            for comp in compositions(n, r + 1):
                lam = lambda_coefficient(comp[:r])
                if not lam:
                    continue
                den = 1
                for i in comp:
                    den *= factorial(i + 1)
                coeff = Fraction(sign * lam * factorial(n + 1), den)
                m = self._composition_monomial(comp)
                acc = terms.get(m, 0) + coeff
                if acc:
                    terms[m] = acc
                else:
                    terms.pop(m, None)
        return GradedVector(terms)


def fdb_a_coproduct_via_bell(H: FaaDiBrunoA, n: int) -> TensorVector:
    """The a-basis coproduct assembled from partial Bell polynomials.

    Independent of :meth:`FaaDiBrunoA.coproduct_generator`; the two must
    agree, which the tests assert.
    """
    terms: dict[tuple[Monomial, Monomial], Coeff] = {}
    empty = H.empty()
    unit = GradedVector.unit(COMMUTATIVE)
    # x_j = j! a_{j-1} with a_0 = 1
    args = [unit] + [
        GradedVector.of(H.gen_monomial(j - 1), factorial(j)) for j in range(2, n + 2)
    ]
    for r in range(n + 1):
        left = empty if r == 0 else H.gen_monomial(r)
        vec = bell_partial(n + 1, r + 1, args[: n - r + 1])
        scale = Fraction(factorial(r + 1), factorial(n + 1))
        for m, c in vec.scale(scale).terms.items():
            key = (left, m)
            acc = terms.get(key, 0) + c
            if acc:
                terms[key] = acc
            else:
                terms.pop(key, None)
    return TensorVector(terms)


# --------------------------------------------------------------------------
# binomial (one primitive generator)


class Binomial(HopfAlgebra):
    """Polynomial algebra on one primitive generator X."""

    mode = COMMUTATIVE
    name = "binomial"

    def __init__(self):
        super().__init__()
        self._X = Generator(self.name, "X", 1)

    def generators(self, n: int) -> tuple[Monomial, ...]:
        return (monomial_of(self._X),) if n == 1 else ()

    def generator_from_text(self, text: str) -> Monomial:
        if text != "X":
            raise ValueError(f"the only generator is 'X', got {text!r}")
        return monomial_of(self._X)

    def axiom_domain(self, n: int) -> tuple[Monomial, ...]:
        return self.basis(n)

    def coproduct_generator(self, g: Monomial) -> TensorVector:
        empty = self.empty()
        return TensorVector({(g, empty): 1, (empty, g): 1})

    def antipode_generator_explicit(self, g: Monomial) -> GradedVector:
        return GradedVector.of(g, -1)


# --------------------------------------------------------------------------
# registry

INSTANCE_NAMES = ("ck", "ck2", "fdb-a", "fdb-x", "binomial", "shuffle:<letters>")


def instance_by_name(label: str) -> HopfAlgebra:
    """Build an instance from its command-line label."""
    if label == "ck":
        return ConnesKreimer(1)
    if label == "ck2":
        return ConnesKreimer(2)
    if label == "fdb-a":
        return FaaDiBrunoA()
    if label == "fdb-x":
        return FaaDiBrunoX()
    if label == "binomial":
        return Binomial()
    if label.startswith("shuffle:"):
        return Shuffle(label.split(":", 1)[1])
    raise ValueError(f"unknown instance {label!r}; known: {', '.join(INSTANCE_NAMES)}")
