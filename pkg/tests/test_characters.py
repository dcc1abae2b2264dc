"""Truncated character group: convolution laws, exp/log, norms, and the
non-group counterexample under a decaying weight family."""

import random
from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from hopfchar.characters import (DUAL, FLOAT, RATIONAL, TruncatedCharacter,
                                 TruncatedInfChar, bracket, check_derivation,
                                 check_multiplicative, controlled_witness,
                                 convolve, counit_character,
                                 counterexample_demo, exp_infchar, inverse,
                                 linf_norm, log_character)
from hopfchar.control import coproduct_ratio
from hopfchar.growth import builtin
from oracles import seeded_rational_values


def _char(H, N, seed):
    return TruncatedCharacter(
        H, N, RATIONAL, seeded_rational_values(H, N, random.Random(seed))
    )


def _inf(H, N, seed):
    return TruncatedInfChar(
        H, N, RATIONAL, seeded_rational_values(H, N, random.Random(seed))
    )


def _same_on_basis(phi, psi, N):
    return all(
        phi.evaluate(m) == psi.evaluate(m) for m in phi.hopf.basis_upto(N)
    )


def test_convolution_through_degree_two_cut(ck):
    tree1 = ck.generator_from_text("B")
    tree2 = ck.generator_from_text("[B]")
    phi = TruncatedCharacter(ck, 2, RATIONAL, {tree1: 2, tree2: 1})
    psi = TruncatedCharacter(ck, 2, RATIONAL, {tree1: 1, tree2: 2})
    conv = convolve(phi, psi)
    assert conv.evaluate(tree2) == 1 + 2 * 1 + 2
    assert conv.evaluate(tree1) == 2 + 1


def test_convolution_associative_seeded(ck, fdb_a):
    for H in (ck, fdb_a):
        for seed in range(3):
            phi = _char(H, 5, 10 * seed)
            psi = _char(H, 5, 10 * seed + 1)
            chi = _char(H, 5, 10 * seed + 2)
            lhs = convolve(convolve(phi, psi), chi)
            rhs = convolve(phi, convolve(psi, chi))
            assert _same_on_basis(lhs, rhs, 5)


def test_counit_is_convolution_unit(ck):
    eps = counit_character(ck, 5)
    phi = _char(ck, 5, 3)
    assert _same_on_basis(convolve(eps, phi), phi, 5)
    assert _same_on_basis(convolve(phi, eps), phi, 5)


def test_inverse_via_antipode(ck, fdb_a, shuffle_ab):
    for H, seed in ((ck, 4), (fdb_a, 5), (shuffle_ab, 6)):
        phi = _char(H, 5, seed)
        eps = counit_character(H, 5)
        assert _same_on_basis(convolve(phi, inverse(phi)), eps, 5)
        assert _same_on_basis(convolve(inverse(phi), phi), eps, 5)


def test_inverse_is_involutive(ck):
    phi = _char(ck, 5, 7)
    assert _same_on_basis(inverse(inverse(phi)), phi, 5)


def test_characters_are_multiplicative(fdb_a):
    phi = _char(fdb_a, 6, 8)
    pairs = list(
        combinations_with_replacement(fdb_a.basis_upto(3), 2)
    )
    ok, witness = check_multiplicative(phi, pairs)
    assert ok and witness is None


def test_closure_estimate_connes_kreimer(ck):
    # |(phi*psi)(x)| <= |phi| |psi| ||Delta x||, summed against k^n weights
    fam = builtin("pow")
    for k1 in (1, 2):
        k2 = 2 * k1
        c_hat = coproduct_ratio(ck, fam, k1, k2, 8).c_hat
        for seed in range(4):
            phi = _char(ck, 8, 100 + seed)
            psi = _char(ck, 8, 200 + seed)
            lhs = linf_norm(convolve(phi, psi), fam, k2)
            bound = (
                linf_norm(phi, fam, k1, over="monomials")
                * linf_norm(psi, fam, k1, over="monomials")
                * c_hat
            )
            assert lhs <= bound


def test_exp_log_round_trip(ck, fdb_a):
    for H, seed in ((ck, 11), (fdb_a, 12)):
        eta = _inf(H, 5, seed)
        phi = exp_infchar(eta)
        back = log_character(phi)
        for g in H.generators_upto(5):
            assert back.evaluate(g) == eta.evaluate(g)
        again = exp_infchar(back)
        assert _same_on_basis(again, phi, 5)


def test_exp_of_single_seed_on_chain(ck):
    # eta = 1 on the single node only: exp(eta)([B]) = 1/2
    node = ck.generator_from_text("B")
    chain = ck.generator_from_text("[B]")
    eta = TruncatedInfChar(ck, 3, RATIONAL, {node: 1})
    phi = exp_infchar(eta)
    assert phi.evaluate(node) == 1
    assert phi.evaluate(chain) == Fraction(1, 2)


def test_exp_result_is_multiplicative(ck):
    eta = _inf(ck, 5, 13)
    phi = exp_infchar(eta)
    pairs = [(m1, m2) for m1 in ck.basis_upto(2) for m2 in ck.basis_upto(3)]
    ok, _ = check_multiplicative(phi, pairs)
    assert ok


def test_log_of_counit_vanishes(fdb_a):
    eta = log_character(counit_character(fdb_a, 6))
    assert all(eta.evaluate(g) == 0 for g in fdb_a.generators_upto(6))


def test_inf_char_vanishes_on_products(fdb_a):
    eta = _inf(fdb_a, 6, 14)
    a1 = fdb_a.gen_monomial(1)
    sq = fdb_a.product_monomials(a1, a1)
    assert eta.on_vector(sq) == 0
    pairs = [(m1, m2) for m1 in fdb_a.basis_upto(3) for m2 in fdb_a.basis_upto(2)]
    ok, _ = check_derivation(eta, pairs)
    assert ok


def test_bracket_is_inf_char_and_antisymmetric(ck):
    e1, e2 = _inf(ck, 5, 15), _inf(ck, 5, 16)
    b12 = bracket(e1, e2)
    b21 = bracket(e2, e1)
    for g in ck.generators_upto(5):
        assert b12.evaluate(g) == -b21.evaluate(g)
    assert all(bracket(e1, e1).evaluate(g) == 0 for g in ck.generators_upto(5))
    pairs = [(m1, m2) for m1 in ck.basis_upto(2) for m2 in ck.basis_upto(3)]
    ok, _ = check_derivation(b12, pairs)
    assert ok


def test_dual_target_tracks_directional_part(binomial):
    X = binomial.generators(1)[0]
    phi = TruncatedCharacter(binomial, 4, DUAL, {X: (Fraction(1, 2), 1)})
    sq = binomial.product_monomials(X, X)
    # (a + eps b)^2 = a^2 + eps 2ab
    assert phi.on_vector(sq) == (Fraction(1, 4), 1)
    assert DUAL.mul((0, 1), (0, 1)) == (0, 0)
    assert DUAL.norm((Fraction(-1, 2), Fraction(1, 3))) == Fraction(5, 6)


def test_linf_norm_on_counit(ck):
    eps = counit_character(ck, 6)
    assert linf_norm(eps, builtin("pow"), 1) == 0
    assert linf_norm(eps, builtin("pow"), 1, over="monomials") == 1
    with pytest.raises(ValueError):
        linf_norm(eps, builtin("pow"), 1, over="words")


def test_controlled_witness_small_character(binomial):
    X = binomial.generators(1)[0]
    phi = TruncatedCharacter(binomial, 4, RATIONAL, {X: Fraction(3, 2)})
    w = controlled_witness(phi, builtin("pow"))
    assert w["witness_k"] == 2
    big = TruncatedCharacter(binomial, 4, FLOAT, {X: 0.9})
    assert controlled_witness(big, builtin("anti"))["witness_k"] == 10


def test_counterexample_square_escapes_every_weight():
    d = counterexample_demo()
    assert d["status"] == "pass"
    assert d["controlled"] is True
    assert abs(d["square_at_X"] - 1.8) < 1e-12
    assert d["uncontrolled_square"] is True
    assert d["max_weight_at_degree_1"] < 1
    assert all(step["ok"] for step in d["trace"])


def test_multiplicativity_checker_detects_violation(ck):
    from hopfchar.characters import TruncatedLinearMap

    table = {m: Fraction(1) for m in ck.basis_upto(4)}
    node = ck.generator_from_text("B")
    table[ck.product_monomials(node, node).terms and list(
        ck.product_monomials(node, node).terms
    )[0]] = Fraction(3)
    broken = TruncatedLinearMap(ck, 4, RATIONAL, table)
    ok, witness = check_multiplicative(broken, [(node, node)])
    assert not ok
    assert witness == "B . B"
