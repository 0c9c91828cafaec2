import pickle
import random
from fractions import Fraction

import pytest

from processes.P06_class_items import TutteDomainError
from processes.P07_bipoly import BiPoly, evaluate, multiply, quotient_by_connector

x, y, one = BiPoly.x(), BiPoly.y(), BiPoly.one()


def test_zero_coefficients_are_dropped():
    p = BiPoly({(1, 0): 2, (0, 1): 0})
    assert p.terms == {(1, 0): 2}
    assert BiPoly({(2, 2): 0}).is_zero


def test_negative_degree_rejected():
    with pytest.raises(TutteDomainError):
        BiPoly({(-1, 0): 1})


def test_render_canonical_order():
    assert (x * x + x + y).render() == "x^2 + x + y"
    assert (x + y + y * y).render() == "x + y + y^2"
    assert (x - x * x * y).render() == "-x^2y + x"
    assert (3 * x * y + 2).render() == "3xy + 2"
    assert BiPoly.zero().render() == "0"


def test_arithmetic():
    assert (x + y) * (x + y) == x * x + 2 * x * y + y * y
    assert (x + y) - (x + y) == BiPoly.zero()
    assert (x + 1) ** 3 == x ** 3 + 3 * x ** 2 + 3 * x + 1
    assert multiply(BiPoly.zero(), x) == 0
    assert x + y == y + x


def test_geometric_sums():
    assert BiPoly.geometric_x(3) == 1 + x + x * x
    assert BiPoly.geometric_y(1) == one
    assert BiPoly.geometric_y(0).is_zero
    assert BiPoly.geometric_y(-2).is_zero


def test_evaluate_is_exact():
    p = x * x + x + y
    assert evaluate(p, 1, 1) == 3
    assert evaluate(p, Fraction(1, 2), 3) == Fraction(15, 4)
    assert p.evaluate(0, 0) == 0


def test_quotient_recovers_factor():
    connector = BiPoly.connector()
    for factor in (one, 1 + x, x * y + 2 * y ** 3, x ** 4 - y):
        assert quotient_by_connector(connector * factor) == factor


def test_quotient_rejects_non_multiples():
    assert quotient_by_connector(x) is None
    assert quotient_by_connector(x + y) is None
    assert quotient_by_connector(BiPoly.connector() * (1 + x) + 1) is None
    assert quotient_by_connector(BiPoly.zero()) == BiPoly.zero()


@pytest.mark.parametrize("a", range(1, 11))
@pytest.mark.parametrize("b", range(1, 11))
def test_multiedge_difference_identity(a, b):
    geometric = BiPoly.geometric_y
    left = x + y * geometric(a + b - 2) - y ** (a - 1) * (x + y * geometric(b - 1))
    assert left == BiPoly.connector() * geometric(a - 1)


def test_sign_class():
    assert (1 + x).sign_class() == "nonnegative"
    assert (-x - y).sign_class() == "nonpositive"
    assert (x - y).sign_class() == "mixed"
    assert BiPoly.zero().sign_class() == "zero"


def test_json_and_pickle_round_trip():
    p = x ** 3 + 2 * x * y - 5 * y ** 2
    assert BiPoly.from_json(p.to_json()) == p
    assert p.to_json()[0] == [3, 0, "1"]
    for value in (p, BiPoly.zero()):
        assert pickle.loads(pickle.dumps(value)) == value


def test_from_json_rejects_garbage():
    with pytest.raises(TutteDomainError):
        BiPoly.from_json([[1, "a", "2"]])


def test_hash_matches_equality():
    assert hash(x + y) == hash(y + x)
    assert len({x + y, y + x, x}) == 2


def random_poly(rng: random.Random, degree: int = 8, terms: int = 6) -> BiPoly:
    result = BiPoly.zero()
    for _ in range(rng.randint(0, terms)):
        i = rng.randint(0, degree)
        j = rng.randint(0, degree - i)
        result = result + BiPoly.monomial(i, j, rng.randint(-9, 9))
    return result


def test_ring_axioms_on_random_polynomials():
    rng = random.Random(23)
    zero = BiPoly.zero()
    for _ in range(60):
        p, q, r = random_poly(rng), random_poly(rng), random_poly(rng)
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p + q == q + p and p * q == q * p
        assert p * (q + r) == p * q + p * r
        assert p + zero == p and p * one == p and (p * zero).is_zero
        assert (p - p).is_zero and -(-p) == p
        assert (p * q).evaluate(2, -3) == p.evaluate(2, -3) * q.evaluate(2, -3)


def test_divide_then_multiply_round_trip():
    rng = random.Random(31)
    connector = BiPoly.connector()
    for _ in range(80):
        factor = random_poly(rng)
        product = connector * factor
        quotient = quotient_by_connector(product)
        assert quotient == factor
        assert connector * quotient == product
        assert quotient_by_connector(-product) == -quotient
        remainder = BiPoly.monomial(rng.randint(0, 3), rng.randint(0, 3), rng.choice([-2, -1, 1, 2]))
        assert quotient_by_connector(product + remainder) is None
