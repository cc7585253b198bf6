import random
import unittest
from fractions import Fraction

from pydantic import ValidationError

from fatpoints.core.dimension import chi
from fatpoints.core.errors import NotARootError, PreconditionError, WordNotInvertibleError
from fatpoints.core.lattice import (
    apply_word,
    cremona,
    exceptional,
    generators,
    hyperplane,
    intersect,
    invert_word,
    is_k_orthogonal,
    k_dot,
    k_self,
    reflect,
    root_lattice_type,
    self_intersection,
    simple_root_pairings,
    sort_desc,
    transpose,
)
from fatpoints.core.reduction import is_pre_standard
from fatpoints.schemas.divisor import DivisorClass, RootClass
from fatpoints.schemas.word import Clamp, CremonaMove, Transposition, WeylWord


def _c(n, d, *mults):
    return DivisorClass(ambient_dim=n, degree=d, mults=mults)


def _random_class(rng, n, r):
    return _c(n, rng.randint(-3, 15), *(rng.randint(-2, 8) for _ in range(r)))


class TestIntersectionForm(unittest.TestCase):
    def test_generators_of_pic(self):
        for n in (2, 3, 5):
            h = hyperplane(n, 4)
            e2 = exceptional(n, 4, 2)
            self.assertEqual(self_intersection(h), n - 1)
            self.assertEqual(self_intersection(e2), -1)
            self.assertEqual(intersect(h, e2), 0)
            self.assertEqual(intersect(e2, exceptional(n, 4, 3)), 0)
            self.assertEqual(e2.exceptional_slot(), 2)

    def test_exceptional_slot_out_of_range(self):
        with self.assertRaises(PreconditionError):
            exceptional(2, 3, 4)

    def test_shorter_class_is_zero_padded(self):
        self.assertEqual(intersect(_c(2, 3, 1), _c(2, 1, 1, 1, 1)), 3 - 1)

    def test_k_dot_and_k_self(self):
        self.assertEqual(k_dot(_c(2, 3, 1, 1, 1)), 3 - 9)
        self.assertEqual(k_dot(exceptional(3, 2, 1)), -1)
        self.assertEqual(k_self(2, 9), 0)
        self.assertEqual(k_self(3, 8), 0)
        self.assertEqual(k_self(4, 0), Fraction(25, 3))

    def test_generators_are_k_orthogonal_roots(self):
        for n, r in ((2, 4), (3, 6), (4, 2)):
            roots = generators(n, r)
            self.assertEqual(len(roots), r)
            for root in roots:
                self.assertEqual(self_intersection(root), -2)
                self.assertTrue(is_k_orthogonal(root))

    def test_root_class_rejects_wrong_square(self):
        with self.assertRaises(ValidationError):
            RootClass(ambient_dim=2, degree=1, mults=(1, 1))
        with self.assertRaises(PreconditionError):
            RootClass.simple(2, 3, 3)


class TestRootLatticeType(unittest.TestCase):
    def test_plane_series(self):
        expected = {3: "A_3", 4: "A_4", 5: "D_5", 6: "E_6", 7: "E_7", 8: "E_8", 9: "INDEFINITE"}
        for r, name in expected.items():
            self.assertEqual(root_lattice_type(2, r), name)

    def test_higher_dimensions(self):
        self.assertEqual(root_lattice_type(3, 6), "D_6")
        self.assertEqual(root_lattice_type(3, 7), "E_7")
        self.assertEqual(root_lattice_type(3, 8), "INDEFINITE")
        self.assertEqual(root_lattice_type(4, 8), "E_8")
        self.assertEqual(root_lattice_type(5, 8), "D_8")
        self.assertEqual(root_lattice_type(5, 9), "INDEFINITE")

    def test_needs_a_point(self):
        with self.assertRaises(PreconditionError):
            root_lattice_type(2, 0)


class TestWeylAction(unittest.TestCase):
    def setUp(self):
        self.rng = random.Random(20240611)

    def test_cremona_of_cubic_through_three_points(self):
        self.assertEqual(cremona(_c(2, 2, 1, 1, 1)), _c(2, 1, 0, 0, 0))
        self.assertEqual(cremona(_c(3, 4, 3, 3, 3, 3)), _c(3, 0, -1, -1, -1, -1))

    def test_cremona_pads_short_classes(self):
        # H goes to 2H - E_1 - E_2 - E_3 even with a single point blown up.
        self.assertEqual(cremona(_c(2, 1, 0)), _c(2, 2, 1, 1, 1))

    def test_cremona_is_an_isometry_and_an_involution(self):
        for _ in range(200):
            n = self.rng.choice((2, 3, 4))
            d = _random_class(self.rng, n, self.rng.randint(n + 1, n + 6))
            image = cremona(d)
            self.assertEqual(cremona(image), d)
            self.assertEqual(self_intersection(image), self_intersection(d))
            self.assertEqual(k_dot(image), k_dot(d))

    def test_plane_chi_is_weyl_invariant(self):
        for _ in range(300):
            d = _random_class(self.rng, 2, self.rng.randint(3, 10))
            self.assertEqual(chi(cremona(d)), chi(d))
            self.assertEqual(chi(transpose(d, self.rng.randint(1, d.r - 1))), chi(d))

    def test_root_pairings_describe_pre_standard_form(self):
        for _ in range(300):
            n = self.rng.choice((2, 3, 4))
            d = _random_class(self.rng, n, self.rng.randint(0, 8))
            first, adjacent, f = simple_root_pairings(d)
            expected = first >= 0 and all(a >= 0 for a in adjacent) and f >= 0
            self.assertEqual(is_pre_standard(d), expected, msg=str(d))

    def test_reflect_along_f_is_cremona(self):
        f = RootClass.cremona_root(2, 5)
        d = _c(2, 7, 3, 3, 2, 2, 1)
        self.assertEqual(reflect(d, f), cremona(d))

    def test_reflect_along_simple_root_swaps(self):
        d = _c(3, 5, 1, 4, 2)
        self.assertEqual(reflect(d, RootClass.simple(3, 3, 1)), _c(3, 5, 4, 1, 2))

    def test_reflect_rejects_non_roots(self):
        with self.assertRaises(NotARootError):
            reflect(_c(2, 3, 1), _c(2, 1, 1))

    def test_sort_desc_records_transpositions(self):
        d = _c(2, 5, 1, 3, 2, 3)
        result, word = sort_desc(d)
        self.assertEqual(result.mults, (3, 3, 2, 1))
        self.assertTrue(all(isinstance(move, Transposition) for move in word.moves))
        self.assertEqual(apply_word(d, word), result)

    def test_sorted_input_gives_empty_word(self):
        result, word = sort_desc(_c(2, 5, 3, 2, 2))
        self.assertEqual(len(word), 0)
        self.assertEqual(result, _c(2, 5, 3, 2, 2))

    def test_word_round_trip(self):
        for _ in range(100):
            n = self.rng.choice((2, 3))
            d = _random_class(self.rng, n, self.rng.randint(1, 7))
            moves = []
            for _ in range(self.rng.randint(1, 8)):
                if self.rng.random() < 0.4:
                    moves.append(CremonaMove())
                else:
                    moves.append(Transposition(slot=self.rng.randint(1, max(d.r - 1, 1))))
            word = WeylWord(moves=tuple(moves))
            back = apply_word(apply_word(d, word), invert_word(word))
            self.assertEqual(back.normalized(), d.normalized())

    def test_clamp_is_not_invertible(self):
        word = WeylWord(moves=(CremonaMove(), Clamp(slot=1, amount=2)))
        self.assertFalse(word.is_weyl)
        with self.assertRaises(WordNotInvertibleError):
            invert_word(word)

    def test_generators_on_ten_thousand_classes(self):
        """|d| <= 20, r <= 10, |m_i| <= 10 for n = 2, 3."""
        rng = random.Random(10_000)

        def bounded(n):
            mults = [rng.randint(-10, 10) for _ in range(rng.randint(0, 10))]
            return _c(n, rng.randint(-20, 20), *mults)

        for _ in range(10_000):
            n = rng.choice((2, 3))
            d1, d2 = bounded(n), bounded(n)
            slot = rng.randint(1, max(d1.r - 1, 1))
            for name, g in (("cremona", cremona), ("transpose", lambda d: transpose(d, slot))):
                image1, image2 = g(d1), g(d2)
                msg = f"{name} on {d1}, {d2}"
                self.assertEqual(intersect(image1, image2), intersect(d1, d2), msg=msg)
                self.assertEqual(k_dot(image1), k_dot(d1), msg=msg)
                self.assertEqual(g(image1).normalized(), d1.normalized(), msg=msg)
                if n == 2:
                    self.assertEqual(chi(image1), chi(d1), msg=msg)

    def test_simple_root_pairings_on_pre_standard_class(self):
        first, adjacent, f = simple_root_pairings(_c(2, 10, 4, 3, 3, 1))
        self.assertEqual(first, 6)
        self.assertEqual(adjacent, [1, 0, 2])
        self.assertEqual(f, 0)


if __name__ == "__main__":
    unittest.main()
