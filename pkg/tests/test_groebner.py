import random

import pytest

from nullkit.errors import ImproperIdeal, MixedRings
from nullkit.field import QQ, PrimeField
from nullkit.groebner import (
    INFINITE,
    Ideal,
    elimination_ideal,
    groebner_basis,
    is_proper,
    member,
    reduce,
    s_polynomial,
    staircase_dimension,
)
from nullkit.poly import PolyRing, exp_divides


def rand_poly(rng, ring, max_terms=4, max_total=3):
    # bounded total degree keeps random lex bases tractable
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = [0] * ring.nvars
        for _ in range(rng.randint(0, max_total)):
            exps[rng.randrange(ring.nvars)] += 1
        terms[tuple(exps)] = ring.field.random_element(rng)
    return ring.from_dict(terms)


def rand_ideal(rng, ring, max_gens=3):
    return Ideal(ring, [rand_poly(rng, ring) for _ in range(rng.randint(1, max_gens))])


FIELDS = [PrimeField(2), PrimeField(3), PrimeField(5), QQ]


def iter_random_ideals(count, seed, nvars=(2, 3)):
    rng = random.Random(seed)
    for _ in range(count):
        field = rng.choice(FIELDS)
        n = rng.choice(nvars)
        ring = PolyRing(field, tuple(f"x{i+1}" for i in range(n)))
        yield rng, rand_ideal(rng, ring)


def test_generators_reduce_to_zero():
    for _, ideal in iter_random_ideals(300, 31):
        gb = groebner_basis(ideal)
        for g in ideal.generators:
            assert not reduce(g, gb)


def test_basis_elements_are_members():
    for _, ideal in iter_random_ideals(60, 37):
        for g in groebner_basis(ideal):
            assert member(g, ideal) or g.is_constant()


def test_s_polynomials_certify_basis():
    for _, ideal in iter_random_ideals(120, 41):
        gb = list(groebner_basis(ideal))
        for i in range(len(gb)):
            for j in range(i + 1, len(gb)):
                assert not reduce(s_polynomial(gb[i], gb[j]), gb)


def test_basis_is_reduced_monic_and_sorted():
    for _, ideal in iter_random_ideals(120, 43):
        gb = groebner_basis(ideal)
        keys = [g.lead_exps[::-1] for g in gb]
        assert keys == sorted(keys)
        for i, g in enumerate(gb):
            assert g.lead_coeff == 1
            for j, h in enumerate(gb):
                if i == j:
                    continue
                assert not any(exp_divides(h.lead_exps, e) for e in g.terms)


def test_groebner_deterministic():
    for _, ideal in iter_random_ideals(40, 47):
        again = Ideal(ideal.ring, list(ideal.generators))
        assert groebner_basis(ideal) == groebner_basis(again)


def test_normal_form_is_linear_and_idempotent():
    rng = random.Random(53)
    R = PolyRing(PrimeField(5), ("x", "y"))
    for _ in range(100):
        ideal = rand_ideal(rng, R)
        gb = groebner_basis(ideal)
        f = rand_poly(rng, R)
        g = rand_poly(rng, R)
        assert reduce(f + g, gb) == reduce(f, gb) + reduce(g, gb)
        assert reduce(reduce(f, gb), gb) == reduce(f, gb)
        assert member(f - reduce(f, gb), ideal)


def test_membership_of_combinations():
    rng = random.Random(59)
    for _ in range(100):
        field = rng.choice(FIELDS)
        R = PolyRing(field, ("x", "y"))
        ideal = rand_ideal(rng, R)
        combo = R.zero
        for g in ideal.generators:
            combo = combo + rand_poly(rng, R, max_terms=2, max_total=2) * g
        assert member(combo, ideal)
        if is_proper(ideal):
            assert not member(R.one, ideal)


def test_membership_golden():
    R = PolyRing(PrimeField(3), ("x1", "x2"))
    x1, x2 = R.gens
    I = Ideal(R, [x2 - x1, x2**2])
    assert member(x1**2, I)
    assert not member(x2, I)
    assert not member(x1, I)
    with pytest.raises(MixedRings):
        member(PolyRing(PrimeField(3), ("y",)).gen(0), I)


def test_elimination_golden_and_containment():
    R = PolyRing(PrimeField(3), ("x1", "x2"))
    x1, x2 = R.gens
    I = Ideal(R, [x2 - x1, x2**2])
    E = elimination_ideal(I, 1)
    assert E.ring.names == ("x1",)
    assert E.groebner_basis() == (E.ring.gen(0) ** 2,)
    for rng, ideal in iter_random_ideals(80, 61):
        n = ideal.ring.nvars
        k = rng.randint(1, n)
        E = elimination_ideal(ideal, k)
        if k == n:
            assert E is ideal
            continue
        for g in E.generators:
            assert member(g.lift_to(ideal.ring), ideal)
            assert all(not any(e[k:]) for e in g.terms)


def test_proper_goldens():
    R = PolyRing(QQ, ("x",))
    x = R.gen(0)
    assert not is_proper(Ideal(R, [x, x - 1]))
    assert is_proper(Ideal(R, [x**2 + 1]))
    assert groebner_basis(Ideal(R, [x, x - 1])) == (R.one,)


def test_zero_ideal():
    R = PolyRing(PrimeField(3), ("x", "y"))
    Z = Ideal(R, [R.zero])
    assert Z.generators == ()
    assert groebner_basis(Z) == ()
    assert is_proper(Z)
    assert staircase_dimension(Z) is INFINITE
    assert not member(R.gen(0), Z)
    assert member(R.zero, Z)


def test_staircase_triangular_chains():
    # a triangular system has dimension equal to the product of top degrees
    rng = random.Random(67)
    for _ in range(50):
        p = rng.choice([2, 3, 5])
        F = PrimeField(p)
        n = rng.choice([1, 2, 3])
        R = PolyRing(F, tuple(f"x{i+1}" for i in range(n)))
        gens = []
        expected = 1
        for i in range(n):
            d = rng.randint(1, 3)
            expected *= d
            xi = R.gen(i)
            g = xi**d
            for j in range(d):
                coeff = rand_poly(rng, R.subring(i), max_terms=2, max_total=2).lift_to(R) if i else R.constant(F.random_element(rng))
                g = g + coeff * xi**j
            gens.append(g)
        I = Ideal(R, gens)
        assert staircase_dimension(I) == expected


def test_staircase_infinite_and_improper():
    R = PolyRing(PrimeField(3), ("x", "y"))
    x, y = R.gens
    assert staircase_dimension(Ideal(R, [x * y - 1])) is INFINITE
    assert staircase_dimension(Ideal(R, [x])) is INFINITE
    with pytest.raises(ImproperIdeal):
        staircase_dimension(Ideal(R, [x, x + 1]))


def test_staircase_counts_standard_monomials():
    R = PolyRing(PrimeField(5), ("x", "y"))
    x, y = R.gens
    # leading terms x^2 and y^2 with a mixed generator shrinking the box
    I = Ideal(R, [x**2, y**2 + x])
    dim = staircase_dimension(I)
    gb = groebner_basis(I)
    leads = [g.lead_exps for g in gb]
    count = sum(
        1
        for a in range(5)
        for b in range(5)
        if not any(exp_divides(le, (a, b)) for le in leads)
    )
    assert dim == count == 4


def test_ideal_sum():
    R = PolyRing(PrimeField(3), ("x", "y"))
    x, y = R.gens
    I = Ideal(R, [x])
    J = Ideal(R, [y])
    assert staircase_dimension(I + J) == 1
    with pytest.raises(MixedRings):
        I + Ideal(PolyRing(PrimeField(3), ("z",)), [])
