from __future__ import annotations

import random
from fractions import Fraction as F

import pytest

from qoab.divis import (Gaussian, GaussianFraction, build_divisibility_object, divides,
                        gaussian_factor, gaussian_primes, group_of_divisibility,
                        parse_element, parse_gaussian)
from qoab.qab import leq, order_equivalent


def test_integer_examples():
    assert divides(F(3), F(12)) and not divides(F(12), F(3))
    assert divides(F(5, 7), F(5, 7))
    with pytest.raises(ValueError):
        divides(F(0), F(1))


def test_gaussian_examples():
    g = lambda s: parse_element(s, "Zi")
    assert divides(g("1+i"), g("2"))
    assert g("2") / g("1+i") == GaussianFraction(Gaussian(1, -1))
    assert not divides(g("2"), g("1+i"))


@pytest.mark.parametrize("text,value", [
    ("3", Gaussian(3)), ("i", Gaussian(0, 1)), ("-2i", Gaussian(0, -2)),
    ("1-i", Gaussian(1, -1)), ("-3+4i", Gaussian(-3, 4)), ("(2+i)", Gaussian(2, 1)),
])
def test_parse_gaussian(text, value):
    assert parse_gaussian(text) == value


@pytest.mark.parametrize("bad", ["", "1+", "ii", "2x", "+"])
def test_parse_gaussian_rejects(bad):
    with pytest.raises(ValueError):
        parse_gaussian(bad)


def test_gaussian_fraction_normalization():
    f = GaussianFraction(Gaussian(1), Gaussian(0, 1))
    assert f.den == Gaussian(1) and f.num == Gaussian(0, -1)
    h = GaussianFraction(Gaussian(2), Gaussian(-1, 1))
    assert h.den.re > 0 and h.den.im >= 0


def test_gaussian_factor_reconstructs():
    rng = random.Random(8)
    for _ in range(100):
        z = Gaussian(rng.randint(-60, 60), rng.randint(-60, 60))
        if z.is_zero():
            continue
        k, fac = gaussian_factor(z)
        prod = Gaussian(0, 1)
        acc = Gaussian(1)
        for _ in range(k):
            acc = acc * prod
        for p, e in fac:
            assert len(gaussian_factor(p)[1]) == 1
            for _ in range(e):
                acc = acc * p
        assert acc == z
    with pytest.raises(ValueError):
        gaussian_factor(Gaussian(10 ** 7), norm_bound=10 ** 6)


def test_gaussian_primes_small():
    assert gaussian_primes(10) == [Gaussian(1, 1), Gaussian(1, 2), Gaussian(2, 1), Gaussian(3)]


def test_encode_examples():
    Q, enc = build_divisibility_object("Z", [2, 3])
    assert enc(F(12)).coords == (2, 1, 0)
    assert enc(F(-1, 2)).coords == (-1, 0, 1)
    assert enc(F(1)).is_zero()
    with pytest.raises(ValueError):
        enc(F(5))
    assert leq(Q, enc(F(1)), enc(F(18)))


def test_divisibility_properties_and_homomorphism():
    rng = random.Random(12)
    Q, enc = build_divisibility_object("Z", [2, 3, 5])

    def sample():
        x = F(rng.choice([1, -1]))
        for p in (2, 3, 5):
            x *= F(p) ** rng.randint(-2, 2)
        return x

    for _ in range(60):
        a, b, c = sample(), sample(), sample()
        assert divides(a, a)
        if divides(a, b) and divides(b, c):
            assert divides(a, c)
        if divides(a, b):
            assert divides(a * c, b * c)
        assert enc(a * b) == enc(a) + enc(b)
        assert (divides(a, b) and divides(b, a)) == order_equivalent(Q, enc(a), enc(b))
        assert (divides(a, b) and divides(b, a)) == (abs(a) == abs(b))


def test_gaussian_cross_oracle():
    rng = random.Random(13)
    primes = ["1+i", "2+i", "1+2i"]
    Q, enc = build_divisibility_object("Zi", primes)
    ps = [parse_element(p, "Zi") for p in primes]
    units = [parse_element(u, "Zi") for u in ("1", "i", "-1", "-i")]

    def sample():
        x = rng.choice(units)
        for p in ps:
            for _ in range(rng.randint(0, 2)):
                x = x * p
            for _ in range(rng.randint(0, 2)):
                x = x / p
        return x

    for _ in range(60):
        a, b = sample(), sample()
        assert divides(a, b) == leq(Q, enc(a), enc(b))
        assert enc(a * b) == enc(a) + enc(b)


def test_group_of_divisibility():
    G = group_of_divisibility("Z", [2, 3])
    assert G.group.canonical_form() == (2, ())
    rng = random.Random(0)
    for _ in range(40):
        u = G.group.element([rng.randint(-2, 2) for _ in range(3)])
        v = G.group.element([rng.randint(-2, 2) for _ in range(3)])
        assert leq(G, u, v) == all(y >= x for x, y in zip(u.coords[:2], v.coords[:2]))
    assert group_of_divisibility("Z", [2]).group.canonical_form() == (1, ())
    assert group_of_divisibility("Z", []).group.describe() == "0"
    assert group_of_divisibility("Zi", ["1+i"]).group.canonical_form() == (1, ())


def test_prime_validation():
    with pytest.raises(ValueError):
        build_divisibility_object("Z", [4])
    with pytest.raises(ValueError):
        build_divisibility_object("Zi", ["2"])
    with pytest.raises(ValueError):
        build_divisibility_object("Zi", ["1+2i", "2-i"])
    with pytest.raises(ValueError):
        build_divisibility_object("Q", [2])
