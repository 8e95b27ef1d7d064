"""Tests for Witt presentations, the obstruction battery, and the
Bing-double verdict."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from bingcheck.errors import AdmissibilityError, InternalInvariantError
from bingcheck.laurent import parse_poly, normalize_unit
from bingcheck.matrices import ExactMatrix
from bingcheck.fields import evaluated_hermitian_signature
from bingcheck.sigfunc import signature_function_of_matrix
from bingcheck.seifert import SeifertMatrix, alexander, connected_sum, mirror
from bingcheck.cover import covering_seifert_matrix
from bingcheck.witt import (
    NOT_ALG_SLICE,
    NO_OBSTRUCTION_FOUND,
    ObstructionReport,
    WittPresentation,
    bing_double_verdict,
    cyclotomic_factors,
    from_seifert,
    jpq_presentation,
    obstruction_battery,
    phi,
    presentation_battery,
    witt_sum,
)

TREFOIL = SeifertMatrix([[-1, 1], [0, -1]], name="3_1")
FIGURE_EIGHT = SeifertMatrix([[1, 1], [0, -1]], name="4_1")
STEVEDORE = SeifertMatrix([[1, 1], [0, -2]], name="6_1")
UNKNOT = SeifertMatrix([], name="unknot")
CATALOG = [UNKNOT, TREFOIL, FIGURE_EIGHT, STEVEDORE]

ONE = parse_poly("1")
T = parse_poly("t")


class TestWittPresentation:
    def test_trefoil_entries(self):
        b = from_seifert(TREFOIL).matrix
        diag = parse_poly("t - 2 + t^-1")
        assert b[0, 0] == diag and b[1, 1] == diag
        assert b[0, 1] == parse_poly("1 - t")
        assert b[1, 0] == parse_poly("1 - t^-1")

    def test_ring_flags(self):
        assert from_seifert(TREFOIL).ring == "Z"
        rational = covering_seifert_matrix(TREFOIL, 3)
        assert from_seifert(rational).ring == "Q"

    def test_hermitian_for_catalog(self):
        for s in CATALOG:
            b = from_seifert(s).matrix
            for i in range(b.rows):
                for j in range(b.cols):
                    assert b[i, j].substitute_power(-1) == b[j, i]

    def test_rejects_non_hermitian(self):
        with pytest.raises(AdmissibilityError):
            WittPresentation(ExactMatrix([[parse_poly("t")]]))

    def test_rejects_singular(self):
        with pytest.raises(AdmissibilityError):
            WittPresentation(ExactMatrix([[parse_poly("0")]]))

    def test_ring_flag_validation(self):
        half = ExactMatrix([[parse_poly("1/2")]])
        third = ExactMatrix([[parse_poly("1/3")]])
        with pytest.raises(AdmissibilityError):
            WittPresentation(half, ring="Z")
        with pytest.raises(AdmissibilityError):
            WittPresentation(half, ring="Z2loc")
        assert WittPresentation(third, ring="Z2loc").ring == "Z2loc"
        assert WittPresentation(half, ring="Q").ring == "Q"
        with pytest.raises(ValueError):
            WittPresentation(third, ring="R")

    def test_unknot_empty(self):
        p = from_seifert(UNKNOT)
        assert p.size == 0
        assert p.order() == ONE

    def test_order_is_unit_times_cyclotomic_deficient_alexander(self):
        # det B = (1 - t)^n * Delta up to units
        for s in CATALOG:
            expected = (ONE - T) ** s.size * alexander(s)
            assert from_seifert(s).order() == normalize_unit(expected)


class TestPhi:
    def test_identity(self):
        p = from_seifert(TREFOIL)
        assert phi(p, 1) is p

    def test_composition(self):
        p = from_seifert(FIGURE_EIGHT)
        assert phi(phi(p, 3), 5) == phi(p, 15)

    def test_order_substitution(self):
        p = from_seifert(TREFOIL)
        for n in (2, 3, 5):
            assert phi(p, n).order() == normalize_unit(
                p.order().substitute_power(n)
            )

    def test_rejects_nonpositive(self):
        p = from_seifert(TREFOIL)
        for n in (0, -1):
            with pytest.raises(ValueError):
                phi(p, n)

    def test_reparametrization_law(self):
        # signature of phi_n P at a/q equals signature of P at na/q mod 1
        for s in (TREFOIL, FIGURE_EIGHT):
            p = from_seifert(s)
            for n in (3, 5):
                pn = phi(p, n)
                for theta in (Fraction(1, 7), Fraction(2, 7), Fraction(3, 8),
                              Fraction(1, 9), Fraction(4, 11)):
                    pulled = (n * theta) % 1
                    assert evaluated_hermitian_signature(pn.matrix, theta) \
                        == evaluated_hermitian_signature(p.matrix, pulled)


class TestWittSum:
    def test_empty_neutral(self):
        p = from_seifert(TREFOIL)
        empty = from_seifert(UNKNOT)
        assert witt_sum(p, empty) == p
        assert witt_sum(empty, p) == p

    def test_ring_promotion(self):
        z = from_seifert(TREFOIL)
        q = from_seifert(covering_seifert_matrix(TREFOIL, 3))
        z2 = WittPresentation(ExactMatrix([[parse_poly("1/3")]]), ring="Z2loc")
        assert witt_sum(z, z).ring == "Z"
        assert witt_sum(z, q).ring == "Q"
        assert witt_sum(z, z2).ring == "Z2loc"
        assert witt_sum(z2, q).ring == "Q"

    def test_order_multiplicative(self):
        p1 = from_seifert(TREFOIL)
        p2 = from_seifert(STEVEDORE)
        assert witt_sum(p1, p2).order() == normalize_unit(p1.order() * p2.order())

    def test_signature_additive(self):
        p1 = from_seifert(TREFOIL)
        p2 = from_seifert(FIGURE_EIGHT)
        s = witt_sum(p1, p2)
        for theta in (Fraction(1, 5), Fraction(1, 7), Fraction(2, 5)):
            s1 = evaluated_hermitian_signature(p1.matrix, theta)
            s2 = evaluated_hermitian_signature(p2.matrix, theta)
            assert evaluated_hermitian_signature(s.matrix, theta) \
                == (s1[0] + s2[0], s1[1] + s2[1])

    def test_p_fold_multiplicity(self):
        # for odd p, the p-fold sum has exactly p times the signature data
        base = from_seifert(TREFOIL)
        for p in (3, 5):
            total = base
            for _ in range(p - 1):
                total = witt_sum(total, base)
            f_base = signature_function_of_matrix(base.matrix)
            f_total = signature_function_of_matrix(total.matrix)
            assert len(f_total.jumps) == len(f_base.jumps)
            assert [a.signature for a in f_total.arcs] \
                == [p * a.signature for a in f_base.arcs]


class TestJpqPresentation:
    def test_unknot_empty(self):
        assert jpq_presentation(UNKNOT, 2, 3).size == 0

    def test_block_structure(self):
        j = jpq_presentation(TREFOIL, 1, 2)
        assert j.size == 6
        b = from_seifert(TREFOIL).matrix
        expected = b.block_sum(b.substitute_power(3)).block_sum(
            b.substitute_power(2)
        )
        assert j.matrix == expected

    def test_order_expansion(self):
        # det of the J(1,2) presentation is the product of the three
        # substituted block determinants (1 - t^k)^2 Delta(t^k), k = 1, 3, 2
        j = jpq_presentation(TREFOIL, 1, 2)
        delta = alexander(TREFOIL)
        expected = ONE
        for k in (1, 3, 2):
            expected = expected * (ONE - T ** k) ** 2 * delta.substitute_power(k)
        assert j.order() == normalize_unit(expected)

    def test_rejects_bad_pq(self):
        with pytest.raises(ValueError):
            jpq_presentation(TREFOIL, 0, 1)
        with pytest.raises(ValueError):
            jpq_presentation(TREFOIL, 1, -2)


class TestCyclotomicFactors:
    def test_trefoil(self):
        assert cyclotomic_factors(alexander(TREFOIL)) == [6]

    def test_figure_eight(self):
        assert cyclotomic_factors(alexander(FIGURE_EIGHT)) == []

    def test_synthetic_product(self):
        f = parse_poly("t^4 + t^3 + t^2 + t + 1") * parse_poly("t^2 - t + 1")
        assert cyclotomic_factors(f) == [5, 6]

    def test_t_minus_one_and_plus_one(self):
        assert cyclotomic_factors(parse_poly("t - 1") * parse_poly("t^2 - t + 1")) \
            == [1, 6]
        assert cyclotomic_factors(parse_poly("1/4t^2 + 1/2t + 1/4")) == [2]

    def test_unit_and_shift_blind(self):
        assert cyclotomic_factors(parse_poly("t^-1 - 1 + t")) == [6]
        assert cyclotomic_factors(parse_poly("7")) == []

    def test_jpq_order_factors(self):
        # (1-t)^2 (1-t^3)^2 (1-t^2)^2 Phi_6(t) Phi_6(t^3) Phi_6(t^2) yields
        # Phi_d for d in {1, 2, 3} from the units and {6, 18, 12} from Delta
        j = jpq_presentation(TREFOIL, 1, 2)
        assert cyclotomic_factors(j.order()) == [1, 2, 3, 6, 12, 18]

    def test_no_prime_power_for_knots(self):
        for s in CATALOG:
            for d in cyclotomic_factors(alexander(s)):
                factors = set()
                m = d
                for p in range(2, m + 1):
                    while m % p == 0:
                        factors.add(p)
                        m //= p
                assert d == 1 or len(factors) >= 2

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            cyclotomic_factors(parse_poly("0"))


class TestObstructionBattery:
    def test_stevedore_no_obstruction(self):
        r = obstruction_battery(STEVEDORE)
        assert r.verdict == NO_OBSTRUCTION_FOUND
        assert r.certificate is None
        assert r.fox_milnor.passes
        assert str(r.fox_milnor.witness) == "2t - 1"
        assert r.signature.is_zero
        assert r.arf == 0
        assert r.determinant == 9 and r.determinant_is_square
        assert r.ring == "Z"

    def test_trefoil_certificate_order(self):
        # Delta = Phi_6 has odd multiplicity, so Fox-Milnor fails before the
        # signature test in the fixed certificate order
        r = obstruction_battery(TREFOIL)
        assert r.verdict == NOT_ALG_SLICE
        assert r.certificate == "fox_milnor"
        assert r.arf == 1
        assert r.determinant == 3 and not r.determinant_is_square
        assert r.cyclotomic == (6,)

    def test_figure_eight(self):
        r = obstruction_battery(FIGURE_EIGHT)
        assert r.verdict == NOT_ALG_SLICE
        assert r.certificate == "fox_milnor"
        assert r.determinant == 5 and not r.determinant_is_square

    def test_unknot(self):
        r = obstruction_battery(UNKNOT)
        assert r.verdict == NO_OBSTRUCTION_FOUND
        assert r.alexander == ONE
        assert r.determinant == 1 and r.determinant_is_square

    def test_granny_signature_certificate(self):
        # trefoil # trefoil has Delta = Phi_6^2 (Fox-Milnor passes) but
        # signature -4, so the second test in the order fires
        granny = connected_sum(TREFOIL, TREFOIL)
        r = obstruction_battery(granny)
        assert r.verdict == NOT_ALG_SLICE
        assert r.certificate == "signature_function"
        assert r.fox_milnor.passes
        assert r.arf == 0
        assert r.determinant == 9 and r.determinant_is_square

    def test_rational_input(self):
        r = obstruction_battery(covering_seifert_matrix(TREFOIL, 3))
        assert r.ring == "Q"
        assert r.arf is None
        assert r.determinant is None
        assert r.determinant_is_square is None
        assert r.verdict == NO_OBSTRUCTION_FOUND

    def test_connected_sum_with_mirror_invisible(self):
        for s in CATALOG:
            r = obstruction_battery(connected_sum(s, mirror(s)))
            assert r.verdict == NO_OBSTRUCTION_FOUND

    def test_deterministic(self):
        assert obstruction_battery(TREFOIL) == obstruction_battery(TREFOIL)

    def test_report_consistency_enforced(self):
        r = obstruction_battery(TREFOIL)
        with pytest.raises(InternalInvariantError):
            ObstructionReport(
                name=r.name, ring=r.ring, alexander=r.alexander,
                fox_milnor=r.fox_milnor, signature=r.signature, arf=r.arf,
                determinant=r.determinant, cyclotomic=r.cyclotomic,
                verdict=NOT_ALG_SLICE, certificate=None,
            )


class TestPresentationBattery:
    def test_stevedore_jpq_all_clear(self):
        for p in range(1, 4):
            for q in range(1, 4):
                r = presentation_battery(jpq_presentation(STEVEDORE, p, q))
                assert r.verdict == NO_OBSTRUCTION_FOUND, (p, q)

    def test_trefoil_jpq_obstructed(self):
        r = presentation_battery(jpq_presentation(TREFOIL, 1, 1))
        assert r.verdict == NOT_ALG_SLICE
        assert r.certificate == "fox_milnor"

    def test_arf_and_determinant_not_applicable(self):
        r = presentation_battery(jpq_presentation(TREFOIL, 1, 2))
        assert r.arf is None
        assert r.determinant is None

    def test_figure_eight_diagonal_pairs_invisible(self):
        # J(p, p) doubles Delta(t^p) and Delta(t^2p) splits into a reciprocal
        # pair, so Fox-Milnor passes; the signature vanishes identically, so
        # the battery cannot see J(p, p) for the figure-eight
        r = presentation_battery(jpq_presentation(FIGURE_EIGHT, 1, 1))
        assert r.verdict == NO_OBSTRUCTION_FOUND
        r = presentation_battery(jpq_presentation(FIGURE_EIGHT, 1, 2))
        assert r.verdict == NOT_ALG_SLICE


class TestBingDoubleVerdict:
    def test_unknot_trivial(self):
        r = bing_double_verdict(UNKNOT, 2)
        assert r.verdict == NO_OBSTRUCTION_FOUND
        assert r.conclusion is None
        assert not r.arf_certificate
        assert len(r.crosschecks) == 4
        for c in r.crosschecks:
            assert c.additivity == "pass"
            assert c.telescoping == "verified"

    def test_figure_eight_not_slice(self):
        r = bing_double_verdict(FIGURE_EIGHT, 2)
        assert r.verdict == NOT_ALG_SLICE
        assert r.certificate == "fox_milnor"
        assert r.conclusion == "B(K) is not slice"
        assert r.arf_certificate  # Arf(4_1) = 1 independently obstructs
        tele = {(c.p, c.q): c.telescoping for c in r.crosschecks}
        assert tele[(1, 1)] == "verified"  # J(1,1) battery is wholly zero
        assert tele[(1, 2)] == "skipped"

    def test_trefoil_not_slice(self):
        r = bing_double_verdict(TREFOIL, 2)
        assert r.verdict == NOT_ALG_SLICE
        assert r.conclusion == "B(K) is not slice"
        assert r.arf_certificate
        assert all(c.telescoping == "skipped" for c in r.crosschecks)

    def test_stevedore_all_checks_pass(self):
        r = bing_double_verdict(STEVEDORE, 3)
        assert r.verdict == NO_OBSTRUCTION_FOUND
        assert r.conclusion is None
        assert not r.arf_certificate
        assert len(r.crosschecks) == 9
        for c in r.crosschecks:
            assert c.additivity == "pass"
            assert c.telescoping == "verified"

    def test_sum_with_mirror_nontrivial_telescoping(self):
        r = bing_double_verdict(connected_sum(TREFOIL, mirror(TREFOIL)), 2)
        assert r.verdict == NO_OBSTRUCTION_FOUND
        assert all(c.telescoping == "verified" for c in r.crosschecks)

    def test_rejects_rational(self):
        with pytest.raises(AdmissibilityError):
            bing_double_verdict(covering_seifert_matrix(TREFOIL, 3), 2)

    def test_rejects_bad_range(self):
        with pytest.raises(ValueError):
            bing_double_verdict(TREFOIL, 0)


@st.composite
def admissible_2x2(draw):
    a = draw(st.integers(min_value=-3, max_value=3))
    b = draw(st.integers(min_value=-3, max_value=3))
    d = draw(st.integers(min_value=-3, max_value=3))
    eps = draw(st.sampled_from([1, -1]))
    return SeifertMatrix([[a, b], [b - eps, d]])


class TestBatteryProperties:
    @given(admissible_2x2())
    @settings(max_examples=25, deadline=None)
    def test_battery_runs_and_is_consistent(self, s):
        r = obstruction_battery(s)
        assert (r.verdict == NOT_ALG_SLICE) == (r.certificate is not None)
        # Fox-Milnor subsumes the determinant test, and a passing Fox-Milnor
        # forces |Delta(-1)| to be an odd square, hence Arf 0: with the fixed
        # order, arf/determinant certificates are unreachable from knots
        assert r.certificate in (None, "fox_milnor", "signature_function")
        if r.fox_milnor.passes:
            assert r.determinant_is_square
            assert r.arf == 0

    @given(admissible_2x2())
    @settings(max_examples=10, deadline=None)
    def test_mirror_sum_invisible(self, s):
        r = obstruction_battery(connected_sum(s, mirror(s)))
        assert r.verdict == NO_OBSTRUCTION_FOUND
