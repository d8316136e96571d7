import itertools
import math

import pytest

from seifert import (
    MarkedLens,
    SeifertInvariant,
    Theorem1Case,
    classify_lens,
    decide_hvf,
    enumerate_lens_fiberings,
    equal,
    exceptional_lens_fibering,
    fibered_lens_hvf,
    homeomorphic,
    lens_cover,
    lens_from_invariant,
    marked_equal,
    oriented_diffeomorphic,
    reverse_orientation_lens,
)
from seifert.errors import IncompatibleCover, NotALensForm, NotCoprime, ZeroDegree
from seifert.exactmath import ext_gcd


def inv(genus, *pairs, boundary=0):
    return SeifertInvariant(genus, tuple(pairs), boundary)


def all_marked(max_p):
    out = []
    for p in range(-max_p, max_p + 1):
        qs = range(abs(p)) if p != 0 else (1,)
        out.extend(MarkedLens(p, q) for q in qs if math.gcd(p, q) == 1)
    return out


class TestMarkedLensType:
    def test_q_canonicalized(self):
        assert MarkedLens(-2, -1) == MarkedLens(-2, 1)

    def test_p_zero(self):
        assert MarkedLens(0, -1) == MarkedLens(0, 1)

    def test_non_coprime_rejected(self):
        with pytest.raises(NotCoprime):
            MarkedLens(6, 2)


class TestLensFromInvariant:
    def test_unit_tangent_bundle_of_sphere(self):
        lens = lens_from_invariant(inv(0, (1, -1), (1, -1)))
        assert lens == MarkedLens(-2, 1)

    def test_two_cone_points(self):
        assert lens_from_invariant(inv(0, (2, 1), (2, 5))) == MarkedLens(12, 7)

    def test_sphere_cross_circle(self):
        assert lens_from_invariant(inv(0, (2, 1), (2, -1))) == MarkedLens(0, 1)

    def test_not_a_lens_form(self):
        with pytest.raises(NotALensForm):
            lens_from_invariant(inv(0, (2, 1), (3, 1), (5, 1)))
        with pytest.raises(NotALensForm):
            lens_from_invariant(inv(1, (2, 1)))

    def test_normalization_does_not_change_marking(self):
        a = inv(0, (2, 1), (2, 5))
        b = inv(0, (2, -1), (2, 5), (1, 1))  # same fibering, different moves
        assert equal(a, b)
        assert marked_equal(lens_from_invariant(a), lens_from_invariant(b))

    def test_q_independent_of_bezout_choice(self):
        # recompute q with every valid companion |alpha'| <= 5*alpha: for a
        # fixed presentation it is constant mod p, and the library value
        # (computed from the canonical presentation, possibly with the pairs
        # relabeled) names the same marked space
        for a1, b1, a2, b2 in itertools.product(range(1, 6), range(-5, 6), range(1, 6), range(-5, 6)):
            if math.gcd(a1, b1) != 1 or math.gcd(a2, b2) != 1:
                continue
            reference = lens_from_invariant(inv(0, (a1, b1), (a2, b2)))
            p = a1 * b2 + a2 * b1
            assert reference.p == p
            qs = set()
            for a1p in range(-5 * a1, 5 * a1 + 1):
                if (1 + b1 * a1p) % a1:
                    continue
                b1p = (1 + b1 * a1p) // a1
                q = a1p * b2 + a2 * b1p
                qs.add(q % abs(p) if p != 0 else q)
            if p != 0:
                assert len(qs) == 1
                assert marked_equal(reference, MarkedLens(p, qs.pop()))
            else:
                assert qs <= {1, -1}


class TestMarkedEqual:
    def test_relabeling_is_inverse_mod_p(self):
        # 3 * 5 = 15 = 1 (mod 7): same marked space with tori relabeled
        assert marked_equal(MarkedLens(7, 3), MarkedLens(7, 5))

    def test_relabel_rule_from_fiberings(self):
        # operational ground truth for the relabeling move: computing the
        # marking of one fibering with the two solid tori labeled either way
        # gives q and q' with q * q' = +1 (mod p), so those markings must
        # compare equal
        for a1, b1, a2, b2 in itertools.product(
            range(1, 7), range(-6, 7), range(1, 7), range(-6, 7)
        ):
            if math.gcd(a1, b1) != 1 or math.gcd(a2, b2) != 1:
                continue
            p = a1 * b2 + a2 * b1
            if p == 0:
                continue
            _, x1, y1 = ext_gcd(a1, b1)
            q_forward = -y1 * b2 + a2 * x1
            _, x2, y2 = ext_gcd(a2, b2)
            q_swapped = -y2 * b1 + a1 * x2
            assert (q_forward * q_swapped - 1) % abs(p) == 0
            assert marked_equal(MarkedLens(p, q_forward), MarkedLens(p, q_swapped))

    def test_product_minus_one_is_not_the_relabel(self):
        # 3 * 2 = 6 = -1 (mod 7): these markings differ
        assert not marked_equal(MarkedLens(7, 3), MarkedLens(7, 2))

    def test_distinct(self):
        assert not marked_equal(MarkedLens(7, 3), MarkedLens(7, 4))

    def test_same_residue(self):
        assert marked_equal(MarkedLens(5, 4), MarkedLens(5, -1))

    def test_plus_minus_one_differ(self):
        # the classification depends on L(p, 1) and L(p, -1) being different
        for p in range(3, 13):
            assert not marked_equal(MarkedLens(p, 1), MarkedLens(p, -1))

    def test_equivalence_relation(self):
        spaces = all_marked(9)
        for a in spaces:
            assert marked_equal(a, a)
        for a, b in itertools.combinations(spaces, 2):
            assert marked_equal(a, b) == marked_equal(b, a)


class TestOrientationAndHomeomorphism:
    def test_reverse_orientation(self):
        assert reverse_orientation_lens(MarkedLens(5, 4)) == MarkedLens(-5, 4)
        assert reverse_orientation_lens(MarkedLens(0, 1)) == MarkedLens(0, 1)

    def test_core_reversal_is_oriented_diffeo(self):
        assert oriented_diffeomorphic(MarkedLens(5, 1), MarkedLens(-5, -1))
        assert not marked_equal(MarkedLens(5, 1), MarkedLens(-5, -1))

    def test_inverse_move(self):
        assert oriented_diffeomorphic(MarkedLens(7, 2), MarkedLens(7, 4))

    def test_distinct_oriented_classes(self):
        assert not oriented_diffeomorphic(MarkedLens(5, 1), MarkedLens(5, 2))

    def test_brody_inverse(self):
        assert homeomorphic(MarkedLens(7, 2), MarkedLens(7, 4))

    def test_brody_distinct(self):
        assert not homeomorphic(MarkedLens(7, 1), MarkedLens(7, 2))

    def test_brody_signs(self):
        assert homeomorphic(MarkedLens(5, 1), MarkedLens(-5, 1))

    def test_relations_are_nested(self):
        spaces = all_marked(12)
        for a, b in itertools.combinations(spaces, 2):
            if marked_equal(a, b):
                assert oriented_diffeomorphic(a, b)
            if oriented_diffeomorphic(a, b):
                assert homeomorphic(a, b)

    def test_nesting_is_strict(self):
        assert oriented_diffeomorphic(MarkedLens(5, 1), MarkedLens(-5, -1))
        assert not marked_equal(MarkedLens(5, 1), MarkedLens(-5, -1))
        assert homeomorphic(MarkedLens(5, 1), MarkedLens(5, 4))
        assert not oriented_diffeomorphic(MarkedLens(5, 1), MarkedLens(5, 4))


class TestFiberedLensHvf:
    def test_q_minus_one(self):
        assert fibered_lens_hvf(MarkedLens(5, 4))

    def test_p_zero(self):
        assert not fibered_lens_hvf(MarkedLens(0, 1))

    def test_q_one(self):
        assert not fibered_lens_hvf(MarkedLens(5, 1))


class TestLensCover:
    def test_negative_degree(self):
        assert lens_cover(MarkedLens(-2, 1), -1) == MarkedLens(2, 1)

    def test_keeps_marking_representative(self):
        assert lens_cover(MarkedLens(5, 4), 3) == MarkedLens(15, 4)

    def test_shared_factor_raises(self):
        with pytest.raises(IncompatibleCover):
            lens_cover(MarkedLens(3, 2), 2)

    def test_zero_degree(self):
        with pytest.raises(ZeroDegree):
            lens_cover(MarkedLens(3, 2), 0)

    def test_composition(self):
        for lens in all_marked(8):
            for d1, d2 in itertools.product((-3, -2, -1, 1, 2, 3), repeat=2):
                try:
                    twice = lens_cover(lens_cover(lens, d1), d2)
                    once = lens_cover(lens, d1 * d2)
                except IncompatibleCover:
                    continue
                assert marked_equal(twice, once)

    def test_quotient_marking_is_congruent_mod_p(self):
        # the fiberwise quotient of a two-fiber invariant presents the lens
        # space L(d*p, q') with q' = q (mod p)
        for a1, b1, b2, d in itertools.product(range(1, 5), range(-4, 5), range(-4, 5), (2, 3, 5)):
            pairs = ((a1, b1), (1, b2))
            if math.gcd(a1, b1) != 1 or math.gcd(d, a1) != 1:
                continue
            source = lens_from_invariant(inv(0, *pairs))
            covered = lens_from_invariant(
                inv(0, *((a, d * b) for a, b in pairs))
            )
            assert covered.p == d * source.p
            if source.p != 0:
                assert (covered.q - source.q) % abs(source.p) == 0


class TestClassifyLens:
    def test_all_have(self):
        assert classify_lens(2, 1).case is Theorem1Case.ALL_HAVE

    def test_exactly_one(self):
        result = classify_lens(8, 5)
        assert result.case is Theorem1Case.EXACTLY_ONE
        assert equal(result.witness, inv(-1, (2, -1)))

    def test_none_have(self):
        assert classify_lens(5, 2).case is Theorem1Case.NONE_HAVE

    def test_mixed(self):
        assert classify_lens(7, 6).case is Theorem1Case.MIXED_INFINITE

    def test_p_zero(self):
        assert classify_lens(0, 1).case is Theorem1Case.NONE_HAVE

    def test_negative_p_rejected(self):
        with pytest.raises(ValueError):
            classify_lens(-5, 1)

    def test_non_coprime_rejected(self):
        with pytest.raises(NotCoprime):
            classify_lens(6, 3)

    def test_cases_partition(self):
        # exactly one verdict per (p, q), and the exactly-one range never
        # collides with q = +-1
        for p in range(0, 101):
            for q in range(p or 1):
                if math.gcd(p, q) != 1:
                    continue
                result = classify_lens(p, q)
                if result.case is Theorem1Case.EXACTLY_ONE:
                    assert p >= 8 and p % 4 == 0
                    assert q % p in (p // 2 + 1, p // 2 - 1)
                    assert q % p not in (1, p - 1)


class TestExceptionalFibering:
    @pytest.mark.parametrize(
        "alpha,pq",
        [(1, (4, 3)), (2, (8, 5)), (3, (12, 7))],
    )
    def test_values(self, alpha, pq):
        fibering, lens = exceptional_lens_fibering(alpha)
        assert fibering == inv(-1, (alpha, -1))
        assert lens == MarkedLens(*pq)

    @pytest.mark.parametrize("alpha", range(1, 8))
    def test_has_horizontal_field(self, alpha):
        fibering, _ = exceptional_lens_fibering(alpha)
        assert decide_hvf(fibering).exists

    @pytest.mark.parametrize("alpha", range(1, 8))
    def test_lens_dual_agrees(self, alpha):
        # the genus-0 presentation of the same manifold computes the same
        # lens space
        fibering, lens = exceptional_lens_fibering(alpha)
        dual = inv(0, (2, 1), (2, -1), (1, alpha))
        assert marked_equal(lens_from_invariant(dual), lens)


class TestEnumerateLensFiberings:
    def test_small_sphere_quotients(self):
        found = enumerate_lens_fiberings(MarkedLens(2, 1), 3)
        assert any(equal(f, inv(0, (1, 1), (1, 1))) for f in found)
        assert any(equal(f, inv(0, (3, 2))) for f in found)
        # an invariant with two order-3 fibers has p divisible by 3
        assert not any(equal(f, inv(0, (3, 1), (3, -1))) for f in found)

    def test_sphere_cross_circle(self):
        found = enumerate_lens_fiberings(MarkedLens(0, 1), 2)
        assert any(equal(f, inv(0, (2, 1), (2, -1))) for f in found)

    def test_three_sphere(self):
        found = enumerate_lens_fiberings(MarkedLens(1, 0), 1)
        assert any(equal(f, inv(0, (1, 1), (1, 0))) for f in found)

    def test_members_map_to_target(self):
        target = MarkedLens(7, 6)
        for fibering in enumerate_lens_fiberings(target, 7):
            assert marked_equal(lens_from_invariant(fibering), target)

    def test_deduplicated(self):
        found = enumerate_lens_fiberings(MarkedLens(2, 1), 3)
        for i, a in enumerate(found):
            for b in found[i + 1 :]:
                assert not equal(a, b)


class TestCrossValidation:
    def test_unit_tangent_bundles_are_l_p_minus_one(self):
        # the unit tangent bundle of a sphere with at most two cone points is
        # the marked lens space L(-(a1+a2), -1), and it carries a field
        from seifert import sphere, unit_tangent_invariant

        for a1, a2 in itertools.product(range(1, 9), repeat=2):
            cones = tuple(a for a in (a1, a2) if a > 1)
            lens = lens_from_invariant(unit_tangent_invariant(sphere(*cones)))
            assert marked_equal(lens, MarkedLens(-(a1 + a2), -1))
            assert fibered_lens_hvf(lens)

    def test_exceptional_fibering_dual_is_homeomorphic(self):
        from seifert import alternate_fiberings

        for alpha in range(1, 9):
            fibering, lens = exceptional_lens_fibering(alpha)
            (dual,) = [
                a.invariant
                for a in alternate_fiberings(fibering)
                if a.kind == "lens_dual"
            ]
            assert homeomorphic(lens_from_invariant(dual), lens)

    def test_reversal_commutes_with_marking(self):
        from seifert import reverse_orientation

        for a1, b1, a2, b2 in itertools.product(
            range(1, 5), range(-4, 5), range(1, 5), range(-4, 5)
        ):
            if math.gcd(a1, b1) != 1 or math.gcd(a2, b2) != 1:
                continue
            fibering = inv(0, (a1, b1), (a2, b2))
            lens = lens_from_invariant(fibering)
            reversed_lens = lens_from_invariant(reverse_orientation(fibering))
            assert marked_equal(reversed_lens, reverse_orientation_lens(lens))


class TestConsistencyWithDecision:
    def test_existence_matches_marking_criterion(self):
        pairs = [
            (a, b)
            for a in range(1, 6)
            for b in range(-5, 6)
            if math.gcd(a, b) == 1
        ]
        for i, p1 in enumerate(pairs):
            for p2 in pairs[i:]:
                fibering = inv(0, p1, p2)
                assert (
                    decide_hvf(fibering).exists
                    == fibered_lens_hvf(lens_from_invariant(fibering))
                )
