import itertools
import random
import unittest

from fatpoints.core.dimension import dim2
from fatpoints.core.errors import AmbientDimensionError, PreconditionError
from fatpoints.core.lattice import apply_word, intersect, k_dot, self_intersection
from fatpoints.core.minus_one import (
    enumerate_minus_one,
    is_minus_one_class,
    is_special2,
    is_sum_of_minus_one_classes,
    iter_canonical_minus_one,
    minus_one_descent_word,
    negative_classes,
    special_witness,
)
from fatpoints.core.reduction import standardize
from fatpoints.schemas.divisor import DivisorClass
from fatpoints.schemas.reports import FailureReason, ReductionStatus


def _c(n, d, *mults):
    return DivisorClass(ambient_dim=n, degree=d, mults=mults)


class TestMinusOneClass(unittest.TestCase):
    def test_plane_curves(self):
        for e in (
            _c(2, 0, 0, -1),
            _c(2, 1, 1, 1),
            _c(2, 2, 1, 1, 1, 1, 1),
            _c(2, 3, 2, 1, 1, 1, 1, 1, 1),
            _c(2, 6, 3, 2, 2, 2, 2, 2, 2, 2),
        ):
            certificate = is_minus_one_class(e)
            self.assertTrue(certificate.verdict, msg=str(e))
            self.assertIsNone(certificate.failure_reason)
            self.assertEqual(certificate.chain[0], e)
            self.assertIsNotNone(certificate.chain[-1].exceptional_slot())

    def test_space_classes(self):
        self.assertTrue(is_minus_one_class(_c(3, 1, 1, 1, 1)).verdict)
        self.assertTrue(is_minus_one_class(_c(3, 3, 3, 2, 1, 1, 1, 1, 1, 1)).verdict)

    def test_wrong_numerics(self):
        certificate = is_minus_one_class(_c(2, 1, 1, 0))
        self.assertFalse(certificate.verdict)
        self.assertEqual(certificate.failure_reason, FailureReason.BAD_NUMERICS)
        self.assertFalse(is_minus_one_class(_c(2, 3, 1, 1, 1, 1, 1, 1, 1, 1, 1)).verdict)

    def test_descent_word_reaches_an_exceptional_class(self):
        e = _c(2, 2, 1, 1, 1, 1, 1)
        word = minus_one_descent_word(e)
        self.assertTrue(word.is_weyl)
        self.assertGreater(word.cremona_count, 0)
        self.assertIsNotNone(apply_word(e, word).exceptional_slot())

    def test_descent_word_needs_a_minus_one_class(self):
        with self.assertRaises(PreconditionError):
            minus_one_descent_word(_c(2, 1, 0, 0))


class TestEnumeration(unittest.TestCase):
    def test_lines_on_del_pezzo_surfaces(self):
        self.assertEqual(len(enumerate_minus_one(2, 5, 2)), 16)
        self.assertEqual(len(enumerate_minus_one(2, 6, 2)), 27)
        self.assertEqual(len(enumerate_minus_one(2, 7, 3)), 56)
        self.assertEqual(len(enumerate_minus_one(2, 8, 6)), 240)

    def test_degree_bound(self):
        self.assertEqual(len(enumerate_minus_one(2, 6, 0)), 6)
        self.assertEqual(len(enumerate_minus_one(2, 6, 1)), 6 + 15)

    def test_fewer_points_than_cremona_needs(self):
        classes = enumerate_minus_one(2, 2, 5)
        self.assertEqual(classes, {_c(2, 0, -1, 0), _c(2, 0, 0, -1), _c(2, 1, 1, 1)})

    def test_every_enumerated_class_passes(self):
        for n, r, d_max in ((2, 9, 4), (3, 7, 3), (4, 7, 2)):
            for e in enumerate_minus_one(n, r, d_max):
                self.assertEqual(self_intersection(e), -1)
                self.assertEqual(k_dot(e), -1)
                self.assertTrue(is_minus_one_class(e).verdict, msg=str(e))

    def test_canonical_representatives_are_sorted(self):
        reps = list(iter_canonical_minus_one(3, 7, 3))
        self.assertEqual(reps[0], _c(3, 0, 0, 0, 0, 0, 0, 0, -1))
        for rep in reps:
            self.assertEqual(list(rep.mults), sorted(rep.mults, reverse=True))

    def test_matches_exhaustive_integer_search(self):
        for r in range(2, 9):
            found = {_c(2, 0, *(-1 if j == i else 0 for j in range(r))) for i in range(r)}
            for degree in range(1, 4):
                for mults in itertools.product(range(-1, degree + 1), repeat=r):
                    square = degree * degree - sum(m * m for m in mults)
                    if square == -1 and sum(mults) - 3 * degree == -1:
                        found.add(_c(2, degree, *mults))
            self.assertEqual(enumerate_minus_one(2, r, 3), found, msg=f"r = {r}")

    def test_bounds_are_checked(self):
        with self.assertRaises(PreconditionError):
            enumerate_minus_one(2, 0, 3)
        with self.assertRaises(PreconditionError):
            enumerate_minus_one(2, 5, -1)
        with self.assertRaises(PreconditionError):
            enumerate_minus_one(2, 40, 2)


class TestSpecialWitness(unittest.TestCase):
    def test_double_conic(self):
        d = _c(2, 4, 2, 2, 2, 2, 2)
        self.assertTrue(is_special2(d))
        self.assertEqual(special_witness(d), (_c(2, 2, 1, 1, 1, 1, 1), -2))
        self.assertEqual(negative_classes(d, 2), [(_c(2, 2, 1, 1, 1, 1, 1), -2)])
        self.assertTrue(is_sum_of_minus_one_classes(d))

    def test_non_special_class_has_no_witness(self):
        d = _c(2, 3, 1, 1, 1, 1, 1)
        self.assertFalse(is_special2(d))
        self.assertIsNone(special_witness(d))
        self.assertFalse(is_sum_of_minus_one_classes(d))

    def test_plane_only(self):
        with self.assertRaises(AmbientDimensionError):
            special_witness(_c(3, 4, 2, 2))
        with self.assertRaises(AmbientDimensionError):
            is_special2(_c(3, 4, 2, 2))

    def test_special_effective_classes_have_a_witness(self):
        rng = random.Random(3)
        checked = 0
        for _ in range(400):
            r = rng.randint(2, 8)
            d = _c(2, rng.randint(1, 12), *(rng.randint(0, 5) for _ in range(r)))
            if not is_special2(d):
                continue
            checked += 1
            found = special_witness(d)
            self.assertIsNotNone(found, msg=str(d))
            e, product = found
            self.assertLessEqual(product, -2)
            self.assertEqual(intersect(d, e), product)
        self.assertGreater(checked, 0)


class TestSweepProperties(unittest.TestCase):
    """Plane classes with d <= 8, r <= 5 and m_i <= 3 against the (-1)-curves of degree <= 6."""

    def setUp(self):
        self.classes = [
            _c(2, degree, *mults)
            for degree in range(9)
            for r in range(1, 6)
            for mults in itertools.combinations_with_replacement(range(3, -1, -1), r)
        ]

    def test_standard_classes_meet_minus_one_curves_nonnegatively(self):
        for d in self.classes:
            report = standardize(d)
            if report.status is not ReductionStatus.STANDARD or report.result != d:
                continue
            for e in enumerate_minus_one(2, d.r, 3):
                self.assertGreaterEqual(intersect(d, e), 0, msg=f"{d} . {e}")

    def test_negative_curves_are_disjoint(self):
        for d in self.classes:
            if dim2(d).h0 == 0:
                continue
            curves = [e for e, _ in negative_classes(d, 6)]
            for e1, e2 in itertools.combinations(curves, 2):
                self.assertEqual(intersect(e1, e2), 0, msg=f"{d}: {e1} . {e2}")

    def test_special_iff_witness_on_effective_classes(self):
        for d in self.classes:
            if dim2(d).h0 == 0:
                continue
            self.assertEqual(is_special2(d), special_witness(d) is not None, msg=str(d))


if __name__ == "__main__":
    unittest.main()
