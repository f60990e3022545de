import random
from fractions import Fraction

import pytest

from troplex.laurent import (
    LaurentPoly, render, is_unit, canonical_associate, exact_div,
    laurent_gcd, gcd_list, squarefree_part, partial_derivative,
    initial_form_valued, initial_form_chi, reduce_mod_p, coefficient_primes,
)
from troplex.rings import ZZ, QQ, GF, TRIVIAL, padic


def P(terms, ring=ZZ, nvars=2):
    return LaurentPoly(ring, nvars, terms)


QUADRIC = P({(0, 0): 1, (1, 0): -2, (2, 0): 1, (0, 2): -3})


def random_poly(rng, ring=ZZ, nvars=2, max_terms=4, span=3):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        e = tuple(rng.randint(-span, span) for _ in range(nvars))
        c = rng.choice([-3, -2, -1, 1, 2, 3])
        terms[e] = terms.get(e, 0) + c
    return LaurentPoly(ring, nvars, {e: c for e, c in terms.items() if c})


def test_constructor_cleans_zeros():
    f = P({(0, 0): 0, (1, 0): 2})
    assert f.terms == {(1, 0): 2}
    assert LaurentPoly.zero(ZZ, 2).is_zero
    with pytest.raises(ValueError):
        P({(0,): 1})  # wrong exponent length


def test_arithmetic_ring_axioms():
    rng = random.Random(23)
    for _ in range(25):
        f, g, h = (random_poly(rng) for _ in range(3))
        assert (f + g) * h == f * h + g * h
        assert f * g == g * f
        assert f - f == LaurentPoly.zero(ZZ, 2)
        assert f * LaurentPoly.one(ZZ, 2) == f


def test_pow_and_shift():
    t1 = LaurentPoly.var(ZZ, 2, 0)
    f = t1 + 1
    assert f ** 2 == f * f
    assert f ** 0 == LaurentPoly.one(ZZ, 2)
    assert t1 ** -3 == LaurentPoly.monomial(ZZ, 2, (-3, 0), 1)
    assert f.shift((1, 2)).terms == {(2, 2): 1, (1, 2): 1}
    with pytest.raises(ValueError):
        f ** -1  # negative powers only for monomials


def test_render_strings():
    assert render(QUADRIC) == "1 - 2*t1 + t1^2 - 3*t2^2"
    assert render(LaurentPoly.zero(ZZ, 2)) == "0"
    assert render(LaurentPoly.one(ZZ, 2)) == "1"
    # terms print in lex order of exponents
    assert render(P({(-1, -1): 1, (0, 0): -1})) == "t1^-1*t2^-1 - 1"
    assert render(P({(1,): 1, (0,): -1}, nvars=1)) == "-1 + t1"


def test_is_unit():
    assert is_unit(LaurentPoly.monomial(ZZ, 2, (3, -2), 1))
    assert is_unit(LaurentPoly.monomial(ZZ, 2, (0, 0), -1))
    assert not is_unit(LaurentPoly.monomial(ZZ, 2, (0, 0), 2))  # 2 not a unit in Z
    assert is_unit(LaurentPoly.monomial(QQ, 2, (0, 0), Fraction(2)))
    assert not is_unit(QUADRIC)
    assert not is_unit(LaurentPoly.zero(ZZ, 2))


def test_canonical_associate_fixed_points():
    t1 = LaurentPoly.var(ZZ, 2, 0)
    one = LaurentPoly.one(ZZ, 2)
    f = t1 - one
    g = one - t1
    # both associates normalize to the same representative
    assert canonical_associate(f) == canonical_associate(g)
    assert render(canonical_associate(f)) == "1 - t1"
    assert canonical_associate(QUADRIC) == QUADRIC


def test_canonical_associate_properties():
    rng = random.Random(7)
    for _ in range(50):
        f = random_poly(rng)
        if f.is_zero:
            continue
        c = canonical_associate(f)
        # idempotent
        assert canonical_associate(c) == c
        # componentwise minimum exponent is normalized to the origin
        assert c.min_exponents() == (0,) * c.nvars
        # differs from f by a unit monomial
        q = exact_div(f, c)
        assert q is not None and is_unit(q)
        # invariant under unit scaling
        u = LaurentPoly.monomial(ZZ, 2, (rng.randint(-2, 2), rng.randint(-2, 2)),
                                 rng.choice([-1, 1]))
        assert canonical_associate(f * u) == c


def test_exact_div():
    rng = random.Random(31)
    for _ in range(30):
        f, g = random_poly(rng), random_poly(rng)
        if g.is_zero:
            continue
        q = exact_div(f * g, g)
        assert q == f
    t1 = LaurentPoly.var(ZZ, 2, 0)
    assert exact_div(t1 + 1, t1 - 1) is None
    assert exact_div(t1 + 1, LaurentPoly.constant(ZZ, 2, 2)) is None  # content blocks
    assert exact_div((t1 + 1) * 2, LaurentPoly.constant(ZZ, 2, 2)) == t1 + 1


def test_gcd_divisibility_and_idempotence():
    # 50 random pairs: the gcd divides both inputs, is already canonical,
    # and multiplying in a common factor keeps it a divisor of the gcd
    rng = random.Random(97)
    for _ in range(50):
        f, g, h = (random_poly(rng, max_terms=3, span=2) for _ in range(3))
        if f.is_zero or g.is_zero:
            continue
        d = laurent_gcd(f, g)
        assert exact_div(f, d) is not None
        assert exact_div(g, d) is not None
        assert canonical_associate(d) == d
        assert laurent_gcd(f, g) == laurent_gcd(g, f)
        if not h.is_zero:
            d2 = laurent_gcd(f * h, g * h)
            assert exact_div(d2, h) is not None


def test_gcd_known_values():
    t1 = LaurentPoly.var(ZZ, 2, 0)
    t2 = LaurentPoly.var(ZZ, 2, 1)
    one = LaurentPoly.one(ZZ, 2)
    f = (t1 - one) * (t2 - one)
    g = (t1 - one) * (t1 + one)
    assert laurent_gcd(f, g) == canonical_associate(t1 - one)
    assert laurent_gcd(f, LaurentPoly.zero(ZZ, 2)) == canonical_associate(f)
    # integer content is part of the gcd over Z
    assert laurent_gcd(2 * (t1 - one), 4 * (t1 - one)) == 2 * canonical_associate(t1 - one)


def test_gcd_list():
    t1 = LaurentPoly.var(ZZ, 2, 0)
    one = LaurentPoly.one(ZZ, 2)
    polys = [(t1 - one) * (t1 + one), (t1 - one) * 3, (t1 - one) ** 2]
    assert gcd_list(polys) == canonical_associate(t1 - one)
    with pytest.raises(ValueError):
        gcd_list([])


def test_partial_derivative():
    # d/dt1 of the quadric: -2 + 2*t1
    d = partial_derivative(QUADRIC, 0)
    assert d == P({(0, 0): -2, (1, 0): 2})
    d2 = partial_derivative(QUADRIC, 1)
    assert d2 == P({(0, 1): -6})
    # negative exponents differentiate too
    f = P({(-2, 0): 1})
    assert partial_derivative(f, 0) == P({(-3, 0): -2})


def test_squarefree_part():
    t1 = LaurentPoly.var(ZZ, 2, 0)
    t2 = LaurentPoly.var(ZZ, 2, 1)
    one = LaurentPoly.one(ZZ, 2)
    f = (t1 - one) ** 2 * (t2 - one)
    sf = squarefree_part(f)
    assert sf == canonical_associate((t1 - one) * (t2 - one))
    # already squarefree input is fixed
    assert squarefree_part(QUADRIC) == QUADRIC


def test_squarefree_part_char_p():
    # (1 + t1 + t2)^2 = 1 + t1^2 + t2^2 over F_2; the p-th power collapses
    F2 = GF(2)
    f = LaurentPoly(F2, 2, {(0, 0): 1, (2, 0): 1, (0, 2): 1})
    assert squarefree_part(f) == LaurentPoly(F2, 2, {(0, 0): 1, (1, 0): 1, (0, 1): 1})
    # (1 - t1)^2 over F_3 reduces to 1 + 2*t1 = canonical of 1 - t1
    F3 = GF(3)
    g = LaurentPoly(F3, 2, {(0, 0): 1, (1, 0): 1, (2, 0): 1})
    assert squarefree_part(g) == LaurentPoly(F3, 2, {(0, 0): 1, (1, 0): 2})


def test_initial_form_valued_trivial():
    f = QUADRIC.map_coefficients(QQ, Fraction)
    # at w = (1, 0) the exponents (0,0) and (0,2) share the minimum
    init = initial_form_valued(f, (1, 0), TRIVIAL)
    assert init.terms == {(0, 0): 1, (0, 2): -3}
    # at w = (0, 1) the t2 term drops out, leaving (1 - t1)^2
    init = initial_form_valued(f, (0, 1), TRIVIAL)
    assert init.terms == {(0, 0): 1, (1, 0): -2, (2, 0): 1}
    # generic w keeps a single term
    init = initial_form_valued(f, (Fraction(1, 7), Fraction(1, 11)), TRIVIAL)
    assert init.num_terms() == 1


def test_initial_form_valued_padic():
    f = QUADRIC.map_coefficients(QQ, Fraction)
    # 3-adically the -3 coefficient gains height 1, moving the vertex
    init = initial_form_valued(f, (0, Fraction(-1, 2)), padic(3))
    assert set(init.terms) == {(0, 0), (1, 0), (2, 0), (0, 2)}
    init = initial_form_valued(f, (0, 0), padic(3))
    assert set(init.terms) == {(0, 0), (1, 0), (2, 0)}


def test_initial_form_chi():
    init = initial_form_chi(QUADRIC, (0, 1))
    assert init.terms == {(0, 0): 1, (1, 0): -2, (2, 0): 1}
    init = initial_form_chi(QUADRIC, (1, -1))
    assert init.terms == {(0, 2): -3}
    init = initial_form_chi(QUADRIC, (-1, -1))
    assert init.terms == {(2, 0): 1, (0, 2): -3}


def test_reduce_mod_p():
    assert reduce_mod_p(QUADRIC, 3) == LaurentPoly(GF(3), 2, {(0, 0): 1, (1, 0): 1, (2, 0): 1})
    assert reduce_mod_p(QUADRIC, 2) == LaurentPoly(GF(2), 2, {(0, 0): 1, (2, 0): 1, (0, 2): 1})
    f = QUADRIC.map_coefficients(QQ, Fraction) * Fraction(1, 5)
    assert reduce_mod_p(f, 3).num_terms() == 3
    with pytest.raises(ValueError):
        reduce_mod_p(f, 5)  # 1/5 has no residue mod 5


def test_coefficient_primes():
    assert coefficient_primes(QUADRIC) == [2, 3]
    t1 = LaurentPoly.var(ZZ, 2, 0)
    assert coefficient_primes(t1 - 1) == []
    f = QUADRIC.map_coefficients(QQ, Fraction) * Fraction(1, 7)
    assert coefficient_primes(f) == [2, 3, 7]
