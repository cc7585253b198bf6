import random
import unittest

from fatpoints.core.errors import ClassExpressionError
from fatpoints.schemas.divisor import DivisorClass
from fatpoints.schemas.expression import ClassExpression, format_flat, format_notation


def _c(n, d, *mults):
    return DivisorClass(ambient_dim=n, degree=d, mults=mults)


class TestParse(unittest.TestCase):
    def test_flat(self):
        expression = ClassExpression.parse(["4", "2", "2", "1"])
        self.assertEqual(expression.degree, 4)
        self.assertEqual(expression.mults, (2, 2, 1))
        self.assertIsNone(expression.ambient_dim)
        self.assertEqual(ClassExpression.parse("[4, 2, 2, 1]").mults, (2, 2, 1))
        self.assertEqual(ClassExpression.parse("-3").degree, -3)

    def test_exponent_notation(self):
        expression = ClassExpression.parse("L3(19; 9^9)")
        self.assertEqual(expression.ambient_dim, 3)
        self.assertEqual(expression.to_class(), _c(3, 19, *[9] * 9))
        self.assertEqual(ClassExpression.parse("L2(0;(-1)^2,1)").mults, (-1, -1, 1))

    def test_nested_list_is_exponent_notation(self):
        expression = ClassExpression.parse("[96,[34,8]]")
        self.assertEqual(expression.degree, 96)
        self.assertEqual(expression.mults, (34,) * 8)
        self.assertEqual(expression.notation, "exponent")
        self.assertEqual(ClassExpression.parse("[10, [3, 2], 1]").mults, (3, 3, 1))
        self.assertEqual(ClassExpression.parse(["[19,", "[9,9]]"]).mults, (9,) * 9)

    def test_malformed_brackets(self):
        for text in (
            "[96,[34,8]",
            "[96,[34,8]]]",
            "[[34,8],96]",
            "4 [2,2]",
            "[96,[34]]",
            "[96,,[3,2]]",
        ):
            with self.assertRaises(ClassExpressionError, msg=text):
                ClassExpression.parse(text)

    def test_not_integers(self):
        with self.assertRaises(ClassExpressionError):
            ClassExpression.parse(["4", "two"])
        with self.assertRaises(ClassExpressionError):
            ClassExpression.parse("L2(4;2^)")

    def test_dimension_mismatch(self):
        with self.assertRaises(ClassExpressionError):
            ClassExpression.parse("L2(4;2^5)").to_class(3)
        with self.assertRaises(ClassExpressionError):
            ClassExpression.parse("4 2 2").to_class()


class TestFormat(unittest.TestCase):
    def test_notation(self):
        self.assertEqual(format_notation(_c(2, 96, *[34] * 8)), "L2(96;34^8)")
        self.assertEqual(format_notation(_c(3, 4, 2, 2, 2, 1)), "L3(4;2^3,1)")
        self.assertEqual(format_notation(_c(2, 0, -1, -1)), "L2(0;(-1)^2)")
        self.assertEqual(format_notation(_c(2, 5)), "L2(5)")

    def test_round_trips(self):
        rng = random.Random(4242)
        for _ in range(10_000):
            n = rng.choice((2, 3))
            mults = [rng.randint(-10, 10) for _ in range(rng.randint(0, 10))]
            d = _c(n, rng.randint(-20, 20), *mults)
            self.assertEqual(ClassExpression.parse(format_flat(d)).to_class(n), d)
            self.assertEqual(ClassExpression.parse(format_flat(d).split()).to_class(n), d)
            self.assertEqual(ClassExpression.parse(format_notation(d)).to_class(), d)


if __name__ == "__main__":
    unittest.main()
