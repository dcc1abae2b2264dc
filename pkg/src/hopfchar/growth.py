"""Weight families omega_k(n) and finite-grid verification of their axioms.

Axioms checked (on explicit finite grids; the reports say so):

* W1: omega_k(0) = 1 and omega_k(n) <= omega_{k+1}(n).
* W2: omega_k(n) * omega_k(m) <= omega_k(n+m).
* W3: for each k1 there is k2 with omega_{k2}(n) >= 2^n * omega_{k1}(n).
* cW: for k1 < k2 < k3 there is alpha in (0,1) with
  omega_{k1}^alpha * omega_{k3}^(1-alpha) <= omega_{k2} pointwise.

The five genuine built-ins are exact (integer-valued); comparisons clear
denominators and exponents so every verdict on them is an exact integer
comparison.  The deliberate non-family exp(-n/k) exposes its exact log
exponent -n/k, so only W3 (which mixes in log 2) needs floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

LOG2 = math.log(2.0)
_W3_FLOAT_GUARD = 1e-12


@dataclass(frozen=True)
class GrowthFamily:
    name: str
    description: str
    _eval: Callable[[int, int], object]
    is_exact: bool = True
    is_growth_family: bool = True
    # natural-log exponent as an exact rational, for exp-type families
    _log_eval: Optional[Callable[[int, int], Fraction]] = None
    # the witness k2 used in the source analysis of W3, when one is known
    analytic_w3_witness: Optional[Callable[[int], int]] = None

    def eval(self, k: int, n: int):
        if k < 1:
            raise ValueError(f"family index must be >= 1, got {k}")
        if n < 0:
            raise ValueError(f"degree must be >= 0, got {n}")
        return self._eval(k, n)

    def log_eval(self, k: int, n: int) -> Fraction:
        if self._log_eval is None:
            raise ValueError(f"{self.name} has no exact log form")
        return self._log_eval(k, n)


def _double_index(k: int) -> int:
    return 2 * k


BUILTIN_FAMILIES: dict[str, GrowthFamily] = {
    "pow": GrowthFamily(
        "pow", "k^n", lambda k, n: k**n, analytic_w3_witness=_double_index
    ),
    "pow2": GrowthFamily(
        "pow2", "2^(k*n)", lambda k, n: 2 ** (k * n), analytic_w3_witness=_double_index
    ),
    "pow-fact": GrowthFamily(
        "pow-fact",
        "k^n * n!",
        lambda k, n: k**n * math.factorial(n),
        analytic_w3_witness=_double_index,
    ),
    "pow-nsq": GrowthFamily(
        "pow-nsq", "k^(n^2)", lambda k, n: k ** (n * n), analytic_w3_witness=_double_index
    ),
    "pow-factk": GrowthFamily(
        "pow-factk",
        "k^n * (n!)^k",
        lambda k, n: k**n * math.factorial(n) ** k,
        analytic_w3_witness=_double_index,
    ),
    "anti": GrowthFamily(
        "anti",
        "exp(-n/k), fails W3",
        lambda k, n: math.exp(-n / k),
        is_exact=False,
        is_growth_family=False,
        _log_eval=lambda k, n: Fraction(-n, k),
    ),
}


def builtin(name: str) -> GrowthFamily:
    try:
        return BUILTIN_FAMILIES[name]
    except KeyError:
        raise ValueError(
            f"unknown growth family {name!r}; available: {', '.join(sorted(BUILTIN_FAMILIES))}"
        ) from None


def composed(family: GrowthFamily, phi: Callable[[int], int], phi_name: str) -> GrowthFamily:
    """The reindexed family (k, n) -> omega_k(phi(n)); phi must map 0 to 0."""
    if phi(0) != 0:
        raise ValueError("degree reindexing must fix 0, else W1 breaks")
    return GrowthFamily(
        name=f"{family.name}∘{phi_name}",
        description=f"{family.description} at n={phi_name}",
        _eval=lambda k, n: family._eval(k, phi(n)),
        is_exact=family.is_exact,
        is_growth_family=family.is_growth_family,
        _log_eval=None
        if family._log_eval is None
        else (lambda k, n: family._log_eval(k, phi(n))),
        analytic_w3_witness=family.analytic_w3_witness,
    )


@dataclass
class AxiomCheck:
    """Outcome of one axiom on one finite grid."""

    family: str
    axiom: str
    grid: dict
    ok: bool
    witness: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "axiom": self.axiom,
            "grid": self.grid,
            "status": "pass" if self.ok else "fail",
            "witness": self.witness,
        }


def check_W1(family: GrowthFamily, k_max: int, n_max: int) -> AxiomCheck:
    grid = {"k_max": k_max, "n_max": n_max}
    for k in range(1, k_max + 1):
        if family.eval(k, 0) != 1:
            return AxiomCheck(family.name, "W1", grid, False, {"k": k, "n": 0})
    for k in range(1, k_max):
        for n in range(n_max + 1):
            if _lt(family, (k + 1, n, 1), (k, n, 1)):
                return AxiomCheck(family.name, "W1", grid, False, {"k": k, "n": n})
    return AxiomCheck(family.name, "W1", grid, True)


def check_W2(family: GrowthFamily, k_max: int, n_max: int) -> AxiomCheck:
    grid = {"k_max": k_max, "n_max": n_max, "pairs": "n+m<=n_max"}
    for k in range(1, k_max + 1):
        for n in range(n_max + 1):
            for m in range(n, n_max + 1 - n):
                if _product_exceeds(family, k, n, m):
                    return AxiomCheck(family.name, "W2", grid, False, {"k": k, "n": n, "m": m})
    return AxiomCheck(family.name, "W2", grid, True)


def _product_exceeds(family: GrowthFamily, k: int, n: int, m: int) -> bool:
    # true iff omega_k(n)*omega_k(m) > omega_k(n+m)
    if family.is_exact:
        return family.eval(k, n) * family.eval(k, m) > family.eval(k, n + m)
    return family.log_eval(k, n) + family.log_eval(k, m) > family.log_eval(k, n + m)


def _lt(family: GrowthFamily, a: tuple[int, int, int], b: tuple[int, int, int]) -> bool:
    # omega_{ka}(na)^pa < omega_{kb}(nb)^pb
    (ka, na, pa), (kb, nb, pb) = a, b
    if family.is_exact:
        return family.eval(ka, na) ** pa < family.eval(kb, nb) ** pb
    return pa * family.log_eval(ka, na) < pb * family.log_eval(kb, nb)


def w3_holds_at(family: GrowthFamily, k1: int, k2: int, n_max: int) -> bool:
    """omega_{k2}(n) >= 2^n * omega_{k1}(n) for all n <= n_max."""
    if family.is_exact:
        return all(
            family.eval(k2, n) >= 2**n * family.eval(k1, n) for n in range(n_max + 1)
        )
    for n in range(n_max + 1):
        lhs = float(family.log_eval(k2, n))
        rhs = n * LOG2 + float(family.log_eval(k1, n))
        if lhs < rhs - _W3_FLOAT_GUARD * max(1.0, abs(rhs)):
            return False
    return True


def check_W3(family: GrowthFamily, k1: int, n_max: int, k2_max: int = 64) -> AxiomCheck:
    """Search the least verified k2 <= k2_max; report the analytic witness too."""
    grid = {"k1": k1, "n_max": n_max, "k2_max": k2_max}
    least = None
    for k2 in range(k1, k2_max + 1):
        if w3_holds_at(family, k1, k2, n_max):
            least = k2
            break
    witness: dict = {}
    if family.analytic_w3_witness is not None:
        ak2 = family.analytic_w3_witness(k1)
        witness["analytic_k2"] = ak2
        if ak2 <= k2_max:
            witness["analytic_k2_verified"] = w3_holds_at(family, k1, ak2, n_max)
    if least is None:
        return AxiomCheck(family.name, "W3", grid, False, {"k1": k1, **witness})
    return AxiomCheck(family.name, "W3", grid, True, {"k1": k1, "least_k2": least, **witness})


def suggest_alpha(k1: int, k2: int, k3: int) -> Fraction:
    """The index-interpolation weight with alpha*k1 + (1-alpha)*k3 = k2.

    By the arithmetic-geometric mean inequality this alpha also satisfies
    k1^alpha * k3^(1-alpha) <= k2, so it works for every built-in family.
    """
    if not k1 < k2 < k3:
        raise ValueError(f"need k1 < k2 < k3, got {(k1, k2, k3)}")
    return Fraction(k3 - k2, k3 - k1)


def check_cW(
    family: GrowthFamily,
    k1: int,
    k2: int,
    k3: int,
    alpha: Fraction,
    n_max: int,
) -> AxiomCheck:
    grid = {"k1": k1, "k2": k2, "k3": k3, "alpha": str(alpha), "n_max": n_max}
    if not (0 < alpha < 1):
        raise ValueError(f"alpha must lie in (0,1), got {alpha}")
    p, q = alpha.numerator, alpha.denominator
    for n in range(n_max + 1):
        if family.is_exact:
            lhs = family.eval(k1, n) ** p * family.eval(k3, n) ** (q - p)
            rhs = family.eval(k2, n) ** q
            bad = lhs > rhs
        else:
            bad = (
                p * family.log_eval(k1, n) + (q - p) * family.log_eval(k3, n)
                > q * family.log_eval(k2, n)
            )
        if bad:
            return AxiomCheck(family.name, "cW", grid, False, {"n": n})
    return AxiomCheck(family.name, "cW", grid, True, {"alpha": str(alpha)})


def check_all_axioms(family: GrowthFamily, k_max: int, n_max: int, k2_max: int = 64) -> list[AxiomCheck]:
    """W1, W2, W3 for every k1 <= k_max, and cW for every triple in range."""
    out = [check_W1(family, k_max, n_max), check_W2(family, k_max, n_max)]
    w3_all_ok = True
    w3_fail: dict = {}
    w3_detail = {}
    for k1 in range(1, k_max + 1):
        res = check_W3(family, k1, n_max, k2_max)
        w3_detail[str(k1)] = res.witness.get("least_k2")
        if not res.ok:
            w3_all_ok = False
            w3_fail = res.witness
    out.append(
        AxiomCheck(
            family.name,
            "W3",
            {"k1_max": k_max, "n_max": n_max, "k2_max": k2_max},
            w3_all_ok,
            w3_fail if not w3_all_ok else {"least_k2_by_k1": w3_detail},
        )
    )
    cw_ok = True
    cw_fail: dict = {}
    alphas = {}
    for k1 in range(1, k_max - 1):
        for k2 in range(k1 + 1, k_max):
            for k3 in range(k2 + 1, k_max + 1):
                alpha = suggest_alpha(k1, k2, k3)
                res = check_cW(family, k1, k2, k3, alpha, n_max)
                alphas[f"{k1},{k2},{k3}"] = str(alpha)
                if not res.ok:
                    cw_ok = False
                    cw_fail = {"k1": k1, "k2": k2, "k3": k3, **res.witness}
    out.append(
        AxiomCheck(
            family.name,
            "cW",
            {"k_max": k_max, "n_max": n_max},
            cw_ok,
            cw_fail if not cw_ok else {"alpha_by_triple": alphas},
        )
    )
    return out
