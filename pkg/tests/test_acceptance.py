"""Release gate: every promised behavior exercised at full scale.

Each test drives one numbered criterion end to end on seeded random
inputs plus pinned goldens and prints a single line

    ACCEPTANCE <number> <label>: PASS|FAIL (<elapsed>s)

so a verbose run doubles as a checklist.  A crash inside a criterion is
reported on its own line rather than silently dropping it.  Scales,
field lists, and degree bounds are fixed here and every draw is seeded,
so the whole gate is deterministic.
"""

import itertools
import random
import subprocess
import sys
import time
import traceback

from nullkit.cli import parse_ideal, render_ideal
from nullkit.errors import ImproperIdeal
from nullkit.field import QQ, PrimeField
from nullkit.groebner import (
    INFINITE,
    Ideal,
    elimination_ideal,
    is_proper,
    member,
    reduce,
    staircase_dimension,
)
from nullkit.noether import build_monicizer
from nullkit.nullsatz import (
    field_obstruction,
    is_field,
    is_maximal,
    maximal_ideal_containing,
    points_of_maximal_ideal,
    quotient_dimension,
    quotient_inverse,
    radical_member,
)
from nullkit.oracle import power_member_oracle, radical_member_oracle
from nullkit.poly import PolyRing
from nullkit.resultant import det_fraction_free, properness_certificate, resultant
from nullkit.unifactor import canonical_extension, factor, is_irreducible

PRIMES = [PrimeField(2), PrimeField(3), PrimeField(5)]
FIELDS = PRIMES + [QQ]

# maximal ideals built by criterion 3, reused by criterion 4
_CONSTRUCTED = []


def _gate(number, label, body):
    failures = []
    start = time.perf_counter()
    try:
        body(failures)
    except Exception:
        failures.append("crashed: " + traceback.format_exc(limit=8))
    elapsed = time.perf_counter() - start
    verdict = "FAIL" if failures else "PASS"
    print(f"\nACCEPTANCE {number} {label}: {verdict} ({elapsed:.1f}s)")
    assert not failures, f"{len(failures)} failed cases; first: {failures[0]}"


def rand_poly(rng, ring, max_terms=4, max_total=3):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = [0] * ring.nvars
        for _ in range(rng.randint(0, max_total)):
            exps[rng.randrange(ring.nvars)] += 1
        terms[tuple(exps)] = ring.field.random_element(rng)
    return ring.from_dict(terms)


def _vars_ring(field, n):
    return PolyRing(field, tuple(f"x{i+1}" for i in range(n)))


def _monic_in_last(rng, ring, degree):
    # x_n^degree plus a random tail of smaller last-variable degree
    xn = ring.gen(ring.nvars - 1)
    tail = rand_poly(rng, ring, max_terms=3, max_total=2)
    trimmed = ring.from_dict(
        {e: c for e, c in tail.terms.items() if e[-1] < degree}
    )
    return xn**degree + trimmed


def ext_value(g, point, F):
    # value of a prime-coefficient polynomial at a point over the extension
    total = F.zero
    for exps, c in g.terms.items():
        val = F.element(c.value)
        for coord, e in zip(point, exps):
            if e:
                val = val * coord**e
        total = total + val
    return total


# -- criterion 1: shears that make a polynomial monic in the last variable --


def test_criterion_1_monicizing_shear():
    def body(failures):
        rng = random.Random(10_001)
        cases = []
        while len(cases) < 500:
            ring = _vars_ring(rng.choice(FIELDS), rng.choice([2, 3, 4]))
            f = rand_poly(rng, ring, max_terms=4, max_total=4)
            if f.is_constant():
                continue
            cases.append(f)
        for k, f in enumerate(cases):
            ring = f.ring
            n = ring.nvars
            mp = build_monicizer(f)
            image = mp.apply(f)
            top = max(f.terms)
            predicted = sum(e * w for e, w in zip(top, mp.weights))
            if image.degree_in(n - 1) != predicted:
                failures.append(
                    f"case {k}: degree {image.degree_in(n - 1)} differs from "
                    f"the digit value {predicted} of the greatest tuple of {f}"
                )
                continue
            lead = image.coefficients_in(n - 1)[-1]
            c = mp.dominating_coefficient(f)
            if not lead.is_constant() or lead != ring.constant(c):
                failures.append(f"case {k}: leading coefficient {lead} is not {c}")
                continue
            monic = image * ring.constant(c.inverse())
            if monic.coefficients_in(n - 1)[-1] != ring.one:
                failures.append(f"case {k}: scaled image of {f} is not monic")
            if k < 200 and mp.apply_inverse(image) != f:
                failures.append(f"case {k}: inverse substitution missed {f}")

    _gate(1, "monicizing shear", body)


# -- criterion 2: resultants eliminate the last variable inside the ideal ----


def test_criterion_2_resultant_elimination():
    def body(failures):
        rng = random.Random(20_002)

        # 200 pairs, two fifths routed through the shear map first
        done = 0
        while done < 200:
            sheared = done % 5 < 2
            if sheared:
                ring = _vars_ring(rng.choice(FIELDS), 2)
                g0 = rand_poly(rng, ring, max_terms=3, max_total=2)
                f0 = rand_poly(rng, ring, max_terms=3, max_total=2)
                if f0.is_constant() or g0.is_constant():
                    continue
                mp = build_monicizer(g0)
                if any(e >= mp.base for exps in f0.terms for e in exps):
                    continue
                c = mp.dominating_coefficient(g0)
                g = mp.apply(g0) * ring.constant(c.inverse())
                f = mp.apply(f0)
            else:
                ring = _vars_ring(rng.choice(FIELDS), rng.choice([2, 3]))
                g = _monic_in_last(rng, ring, rng.randint(1, 3))
                f = rand_poly(rng, ring, max_terms=3, max_total=3)
                if not f:
                    continue
            var = ring.nvars - 1
            R = resultant(f, g, var)
            if R.degree_in(var) > 0:
                failures.append(f"pair {done}: resultant still involves {ring.names[var]}")
            elif not member(R, Ideal(ring, [f, g])):
                failures.append(f"pair {done}: resultant of {f} and {g} left the ideal")
            done += 1

        # 100 congruence cases: f a unit plus subring-ideal noise, so the
        # resultant against any monic g reduces to 1 modulo that ideal
        made = 0
        while made < 100:
            ring = _vars_ring(rng.choice(FIELDS), rng.choice([2, 3]))
            n = ring.nvars
            mgens = []
            for _ in range(rng.randint(1, 2)):
                raw = rand_poly(rng, ring, max_terms=3, max_total=2)
                flat = ring.from_dict({e: c for e, c in raw.terms.items() if e[-1] == 0})
                if flat:
                    mgens.append(flat)
            if not mgens:
                continue
            Mp = Ideal(ring, mgens)
            if not is_proper(Mp):
                continue
            f = ring.one
            for m in mgens:
                f = f + m * rand_poly(rng, ring, max_terms=2, max_total=2)
            g = _monic_in_last(rng, ring, rng.randint(1, 2))
            R = resultant(f, g, n - 1)
            if reduce(R, Mp.groebner_basis()) != ring.one:
                failures.append(f"congruence case {made}: normal form of {R} is not 1")
            made += 1

        # 100 end-to-end properness certificates
        made = 0
        while made < 100:
            ring = _vars_ring(rng.choice(PRIMES), rng.choice([2, 3]))
            n = ring.nvars
            g = _monic_in_last(rng, ring, rng.randint(1, 2))
            gens = [g]
            extra = rand_poly(rng, ring, max_terms=2, max_total=2)
            if extra and rng.random() < 0.7:
                gens.append(extra)
            I = Ideal(ring, gens)
            if not is_proper(I):
                continue
            small = elimination_ideal(I, n - 1)
            if rng.random() < 0.5:
                small = maximal_ideal_containing(small, seed=made).ideal()
            witness = None
            if rng.random() < 0.5:
                w = ring.one
                for h in small.generators:
                    w = w + h.lift_to(ring) * rand_poly(rng, ring, max_terms=1, max_total=1)
                witness = w
            report = properness_certificate(I, g, small, n - 1, witness=witness)
            if report.combined_proper is not True:
                failures.append(f"certificate {made}: combination not certified proper")
            if witness is not None and report.residue != small.ring.one:
                failures.append(f"certificate {made}: witness residue {report.residue}")
            made += 1

    _gate(2, "resultant elimination", body)


# -- criterion 3: a maximal ideal above every proper ideal, with points ------


def test_criterion_3_maximal_ideal_construction():
    def body(failures):
        rng = random.Random(30_003)
        made = 0
        while made < 100:
            ring = _vars_ring(rng.choice(PRIMES), rng.choice([1, 2, 3]))
            I = Ideal(ring, [rand_poly(rng, ring) for _ in range(rng.randint(1, 3))])
            if not is_proper(I):
                continue
            res = maximal_ideal_containing(I, seed=made)
            out = res.ideal()
            if not all(member(g, out) for g in I.generators):
                failures.append(f"ideal {made}: a source generator fell outside the result")
                made += 1
                continue
            if not is_proper(out):
                failures.append(f"ideal {made}: result is improper")
                made += 1
                continue
            D = quotient_dimension(out)
            if not isinstance(D, int) or D != res.residue_degree:
                failures.append(f"ideal {made}: dimension {D} vs degree {res.residue_degree}")
                made += 1
                continue
            if not is_field(out):
                failures.append(f"ideal {made}: quotient is not a field")
                made += 1
                continue
            pts = points_of_maximal_ideal(res, max_degree=64, max_order=1 << 62)
            if pts.extension_degree != D or not pts.points:
                failures.append(f"ideal {made}: no points over the degree {D} extension")
                made += 1
                continue
            for point in pts.points:
                for g in tuple(I.generators) + res.generators:
                    if ext_value(g, point, pts.field):
                        failures.append(f"ideal {made}: {g} does not vanish at {point}")
                        break
                else:
                    continue
                break
            _CONSTRUCTED.append((I, res, D))
            made += 1

    _gate(3, "maximal ideal construction", body)


# -- criterion 4: field recognition, its failure modes, and unit inverses ----


def _ensure_constructed():
    if not _CONSTRUCTED:
        test_criterion_3_maximal_ideal_construction()
    return _CONSTRUCTED


def test_criterion_4_field_certification():
    def body(failures):
        built = _ensure_constructed()
        rng = random.Random(40_004)

        for k, (I, res, D) in enumerate(built):
            out = res.ideal()
            if not is_field(out) or quotient_dimension(out) != D:
                failures.append(f"ideal {k}: lost the field certificate")
                continue
            gb = out.groebner_basis()
            for _ in range(20):
                while True:
                    f = rand_poly(rng, out.ring, max_terms=3, max_total=3)
                    if reduce(f, gb):
                        break
                inv = quotient_inverse(f, out)
                if reduce(f * inv, gb) != out.ring.one:
                    failures.append(f"ideal {k}: {f} times {inv} is not 1 in the quotient")
                    break

        # 25 products of two distinct constructed maximal ideals: proper,
        # zero dimensional, but split by an idempotent
        by_ring = {}
        for I, res, D in built:
            by_ring.setdefault(res.chain.ring, []).append(res)
        pairs = []
        for ring, group in by_ring.items():
            for a, b in itertools.combinations(group, 2):
                if a.generators != b.generators:
                    pairs.append((ring, a, b))
        if len(pairs) < 25:
            failures.append(f"only {len(pairs)} distinct same-ring pairs available")
        for ring, a, b in pairs[:25]:
            prod = Ideal(ring, [ga * gb for ga in a.generators for gb in b.generators])
            if staircase_dimension(prod) is INFINITE:
                failures.append("a product of maximal ideals came out positive dimensional")
                continue
            reason = field_obstruction(prod)
            if reason != "disconnected":
                failures.append(f"product obstruction {reason!r} instead of disconnected")
            if is_maximal(prod):
                failures.append("a product of two distinct maximal ideals passed as maximal")

        # 25 systems padded with a squared generator: nilpotents kill the
        # trace form
        made = 0
        while made < 25:
            ring = _vars_ring(rng.choice(PRIMES), rng.choice([1, 2]))
            gens = [ring.gen(0) ** rng.choice([2, 3])]
            for i in range(1, ring.nvars):
                gens.append(ring.gen(i) + ring.constant(ring.field.random_element(rng)))
            J = Ideal(ring, gens)
            reason = field_obstruction(J)
            if reason != "degenerate trace form":
                failures.append(f"nilpotent obstruction {reason!r} instead of a degenerate trace form")
            if is_field(J):
                failures.append(f"{J.generators} passed as a field")
            made += 1

    _gate(4, "field certification", body)


# -- criterion 5: three independent radical membership deciders agree --------


def _sampled_zero_dim(rng):
    # bounded quotient dimension and point budget keep enumeration honest
    while True:
        field = rng.choice(PRIMES)
        n = rng.choice([1, 2])
        ring = _vars_ring(field, n)
        gens = []
        for i in range(n):
            d = rng.randint(1, 8 if n == 1 else 3)
            g = ring.gen(i) ** d
            for j in range(d):
                exps = tuple(j if m == i else 0 for m in range(n))
                g = g + ring.monomial(exps, field.random_element(rng))
            gens.append(g)
        if n == 2 and rng.random() < 0.5:
            extra = rand_poly(rng, ring, max_terms=2, max_total=2)
            if extra:
                gens.append(extra)
        I = Ideal(ring, gens)
        try:
            D = staircase_dimension(I)
        except ImproperIdeal:
            continue
        if D is INFINITE or not 1 <= D <= 8 or field.p ** (D * n) > 4096:
            continue
        return I, D


def test_criterion_5_radical_membership_agreement():
    def body(failures):
        rng = random.Random(50_005)
        for k in range(100):
            I, D = _sampled_zero_dim(rng)
            ring = I.ring
            if k % 4 == 0:
                f = I.generators[0] * rand_poly(rng, ring, max_terms=2, max_total=2)
            else:
                f = rand_poly(rng, ring, max_terms=3, max_total=3)
            a = radical_member(f, I)
            b = power_member_oracle(f, I, D)
            c = radical_member_oracle(f, I, D)
            if not a == b == c:
                failures.append(
                    f"case {k}: adjoined-inverse {a}, power {b}, enumeration {c} "
                    f"for {f} against {I.generators}"
                )

        xring = PolyRing(QQ, ("x",))
        x = xring.gen(0)
        xyring = PolyRing(QQ, ("x", "y"))
        xx, yy = xyring.gen(0), xyring.gen(1)
        rational_cases = [
            (Ideal(xring, [x**2]), x, True),
            (Ideal(xring, [x**2]), x + 1, False),
            (Ideal(xring, [(x - 1) ** 2]), x - 1, True),
            (Ideal(xring, [(x - 1) ** 2]), x + 1, False),
            (Ideal(xring, [x**2 - 1]), x - 1, False),
            (Ideal(xring, [x**2 - 1]), x**2 - 1, True),
            (Ideal(xring, [x**3]), x**2, True),
            (Ideal(xring, [x**2 + 1]), x, False),
            (Ideal(xring, [x]), x**2, True),
            (Ideal(xring, [x**3 + x]), x, False),
            (Ideal(xyring, [xx**2, yy**2]), xx + yy, True),
            (Ideal(xyring, [xx**2, yy**2]), xx + 1, False),
            (Ideal(xyring, [xx**2 + yy**2, xx * yy]), xx + yy, True),
            (Ideal(xyring, [xx**2 + yy**2, xx * yy]), xx + 1, False),
            (Ideal(xyring, [xx - 1, yy - 2]), (xx - 1) * yy, True),
            (Ideal(xyring, [xx - 1, yy - 2]), xx, False),
            (Ideal(xyring, [(xx - 1) ** 2, yy**2]), xx + yy - 1, True),
            (Ideal(xyring, [(xx - 1) ** 2, yy**2]), yy + 1, False),
            (Ideal(xyring, [xx**3, yy - xx]), yy, True),
            (Ideal(xyring, [xx**3, yy - xx]), xx + yy + 1, False),
        ]
        assert len(rational_cases) == 20
        for k, (I, f, expect) in enumerate(rational_cases):
            D = quotient_dimension(I)
            a = radical_member(f, I)
            b = power_member_oracle(f, I, D)
            if a != b or a != expect:
                failures.append(
                    f"rational case {k}: adjoined-inverse {a}, power {b}, expected {expect}"
                )

    _gate(5, "radical membership agreement", body)


# -- criterion 6: fraction-free determinants match cofactor expansion --------


def _cofactor_det(rows, ring):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = ring.zero
    for j in range(n):
        entry = rows[0][j]
        if not entry:
            continue
        minor = [[row[c] for c in range(n) if c != j] for row in rows[1:]]
        piece = entry * _cofactor_det(minor, ring)
        total = total - piece if j % 2 else total + piece
    return total


def test_criterion_6_fraction_free_determinant():
    def body(failures):
        rng = random.Random(60_006)
        for k in range(100):
            ring = _vars_ring(rng.choice(FIELDS), rng.choice([1, 2]))
            size = rng.randint(1, 4)
            rows = []
            for _ in range(size):
                row = []
                for _ in range(size):
                    if rng.random() < 0.3:
                        row.append(ring.zero)
                    else:
                        row.append(rand_poly(rng, ring, max_terms=2, max_total=2))
                rows.append(row)
            if all(not e for row in rows for e in row):
                rows[0][0] = ring.one
            fast = det_fraction_free(rows)
            slow = _cofactor_det(rows, ring)
            if fast != slow:
                failures.append(f"matrix {k}: {fast} differs from the cofactor value {slow}")

    _gate(6, "fraction-free determinant", body)


# -- criterion 7: factorization refactors, proves, and repeats ---------------


def test_criterion_7_univariate_factorization():
    def body(failures):
        rng = random.Random(70_007)
        grounds = [
            canonical_extension(2, 1),
            canonical_extension(3, 1),
            canonical_extension(5, 1),
            canonical_extension(2, 2),
            canonical_extension(2, 3),
            canonical_extension(3, 2),
            canonical_extension(5, 2),
        ]
        for k in range(300):
            field = grounds[k % len(grounds)]
            ring = PolyRing(field, ("x",))
            d = rng.randint(1, 8)
            while True:
                lead = field.random_element(rng)
                if lead:
                    break
            f = ring.monomial((d,), lead)
            for i in range(d):
                f = f + ring.monomial((i,), field.random_element(rng))
            fac = factor(f, seed=k)
            if fac != factor(f, seed=k):
                failures.append(f"case {k}: repeated run changed the factorization of {f}")
                continue
            if fac.expand() != f:
                failures.append(f"case {k}: factors of {f} do not multiply back")
                continue
            for piece, mult in fac.factors:
                if mult < 1 or piece != piece.monic() or not is_irreducible(piece):
                    failures.append(f"case {k}: bad factor {piece}^{mult} of {f}")
                    break

    _gate(7, "univariate factorization", body)


# -- criterion 8: the command line parses, renders, and stays byte stable ----

HYPERBOLA = "field GF(3)\nvars x1, x2\nx1*x2 - 1\n"
CONTEXT3 = "field GF(3)\nvars x1, x2\n"
CONTEXT5 = "field GF(5)\nvars x1, x2\n"

MAXIDEAL_GOLDEN = (
    "chain:\n"
    "  x1\n"
    "  x2 + 2\n"
    "automorphisms:\n"
    "  x1 -> x1 + x2^2\n"
    "generators:\n"
    "  x1 + 2\n"
    "  x2 + 2\n"
    "residue degree: 1\n"
    "verification:\n"
    "  contains source: true\n"
    "  proper: true\n"
    "  dimension matches: true\n"
    "  quotient is a field: true\n"
)

NORMALIZE_GOLDEN = (
    "base: 4\n"
    "map:\n"
    "  x1 -> x1 + x2^4\n"
    "image: x2^9 + 2*x1*x2^5 + x2^3 + x1^2*x2\n"
    "degree: 9\n"
)


def test_criterion_8_command_line_round_trip():
    def body(failures):
        rng = random.Random(80_008)
        made = 0
        while made < 100:
            ring = _vars_ring(rng.choice(FIELDS), rng.randint(1, 3))
            gens = []
            for _ in range(rng.randint(1, 3)):
                terms = {}
                for _ in range(rng.randint(1, 4)):
                    exps = [0] * ring.nvars
                    for _ in range(rng.randint(0, 3)):
                        exps[rng.randrange(ring.nvars)] += 1
                    terms[tuple(exps)] = ring.field.element(rng.randint(-9, 9))
                gens.append(ring.from_dict(terms))
            ideal = Ideal(ring, gens)
            if not ideal.generators:
                continue
            if parse_ideal(render_ideal(ideal)) != ideal:
                failures.append(f"round trip {made} changed {ideal.generators}")
            made += 1

        goldens = [
            (["maxideal", "--seed", "0"], HYPERBOLA, MAXIDEAL_GOLDEN),
            (["normalize", "x1^2*x2 + x2^3"], CONTEXT3, NORMALIZE_GOLDEN),
            (["resultant", "1 + x1*x2", "x1 + x2^2", "x2"], CONTEXT5, "x1^3 + 1\n"),
        ]
        for argv, text, want in goldens:
            for attempt in range(2):
                proc = subprocess.run(
                    [sys.executable, "-m", "nullkit", *argv],
                    input=text,
                    capture_output=True,
                    text=True,
                    timeout=60,
                )
                if proc.returncode != 0:
                    failures.append(f"{argv[0]} exited {proc.returncode}: {proc.stderr}")
                    break
                if proc.stdout != want:
                    failures.append(f"{argv[0]} run {attempt} drifted: {proc.stdout!r}")
                    break

    _gate(8, "command line round trip", body)
