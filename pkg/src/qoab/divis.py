"""Divisibility quasi-orders on the fraction fields of Z and Z[i].

``a | b`` in the fraction field iff ``b / a`` lies in the ring.  Restricted
to fractions supported on finitely many primes this is a finitely generated
qo-group: valuations at the primes plus the unit group as torsion.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence, Union

from .cone import Cone
from .fgab import GroupElement, GroupPresentation
from .qab import QoGroup, antisymmetrize

RINGS = ("Z", "Zi")
DEFAULT_NORM_BOUND = 10 ** 12


@dataclass(frozen=True)
class Gaussian:
    """A Gaussian integer ``re + im*i``."""

    re: int
    im: int = 0

    def __add__(self, other: "Gaussian") -> "Gaussian":
        return Gaussian(self.re + other.re, self.im + other.im)

    def __neg__(self) -> "Gaussian":
        return Gaussian(-self.re, -self.im)

    def __sub__(self, other: "Gaussian") -> "Gaussian":
        return self + (-other)

    def __mul__(self, other: "Gaussian") -> "Gaussian":
        return Gaussian(self.re * other.re - self.im * other.im,
                        self.re * other.im + self.im * other.re)

    def conj(self) -> "Gaussian":
        return Gaussian(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_unit(self) -> bool:
        return self.norm() == 1

    def exact_div(self, other: "Gaussian") -> "Gaussian | None":
        """``self / other`` when it is a Gaussian integer, else None."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero")
        num = self * other.conj()
        n = other.norm()
        if num.re % n or num.im % n:
            return None
        return Gaussian(num.re // n, num.im // n)

    def round_div(self, other: "Gaussian") -> "Gaussian":
        """Nearest Gaussian integer to ``self / other``."""
        num = self * other.conj()
        n = other.norm()
        return Gaussian(_round_half(num.re, n), _round_half(num.im, n))

    def normalized(self) -> tuple["Gaussian", int]:
        """First-quadrant associate ``z`` (``re > 0``, ``im >= 0``) and ``k`` with ``self = i^k z``."""
        if self.is_zero():
            return self, 0
        z = self
        for k in range(4):
            if z.re > 0 and z.im >= 0:
                return z, k
            z = z * Gaussian(0, -1)
        raise AssertionError("unreachable")

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        im = {1: "", -1: "-"}.get(self.im, str(self.im))
        if self.re == 0:
            return f"{im}i"
        sign = "+" if self.im > 0 else ""
        return f"{self.re}{sign}{im}i"


def _round_half(a: int, n: int) -> int:
    return (2 * a + n) // (2 * n)


I_POWERS = (Gaussian(1), Gaussian(0, 1), Gaussian(-1), Gaussian(0, -1))


def gaussian_gcd(a: Gaussian, b: Gaussian) -> Gaussian:
    while not b.is_zero():
        q = a.round_div(b)
        a, b = b, a - q * b
    return a.normalized()[0]


@dataclass(frozen=True)
class GaussianFraction:
    """A reduced quotient of Gaussian integers; the denominator is first-quadrant."""

    num: Gaussian
    den: Gaussian = Gaussian(1)

    def __post_init__(self):
        if self.den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = gaussian_gcd(self.num, self.den)
        num = self.num.exact_div(g)
        den = self.den.exact_div(g)
        den, k = den.normalized()
        num = num * I_POWERS[(-k) % 4]
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __mul__(self, other: "GaussianFraction") -> "GaussianFraction":
        return GaussianFraction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "GaussianFraction") -> "GaussianFraction":
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero")
        return GaussianFraction(self.num * other.den, self.den * other.num)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def in_ring(self) -> bool:
        return self.den == Gaussian(1)

    def __str__(self) -> str:
        if self.in_ring():
            return str(self.num)
        return f"({self.num})/({self.den})"


Element = Union[Fraction, GaussianFraction]

_GAUSS = re.compile(r"^[+-]?\d*i?$|^[+-]?\d+[+-]\d*i$")


def parse_gaussian(text: str) -> Gaussian:
    """Parse ``"a+bi"``, ``"3"``, ``"-2i"``, ``"1-i"`` and similar."""
    s = text.replace(" ", "")
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if not s or not _GAUSS.match(s) or s in ("+", "-"):
        raise ValueError(f"not a Gaussian integer: {text!r}")
    if not s.endswith("i"):
        return Gaussian(int(s))
    body = s[:-1]
    k = max(body.rfind("+"), body.rfind("-"))
    if k <= 0:
        re_part, im_part = 0, body
    else:
        re_part, im_part = int(body[:k]), body[k:]
    im = {"": 1, "+": 1, "-": -1}.get(im_part)
    return Gaussian(re_part, int(im_part) if im is None else im)


def parse_element(text: str, ring: str) -> Element:
    """Parse a fraction: ``"p/q"`` over Z, ``"(a+bi)/(c+di)"`` or ``"a+bi"`` over Z[i]."""
    _check_ring(ring)
    if ring == "Z":
        return Fraction(text.replace(" ", ""))
    s = text.replace(" ", "")
    depth = 0
    for k, ch in enumerate(s):
        depth += ch == "("
        depth -= ch == ")"
        if ch == "/" and depth == 0:
            return GaussianFraction(parse_gaussian(s[:k]), parse_gaussian(s[k + 1:]))
    return GaussianFraction(parse_gaussian(s))


def _check_ring(ring: str) -> None:
    if ring not in RINGS:
        raise ValueError(f"unsupported ring {ring!r}; expected one of {RINGS}")


def _is_zero(a: Element) -> bool:
    return a == 0 if isinstance(a, Fraction) else a.is_zero()


def divides(a: Element, b: Element) -> bool:
    """``a | b``: whether ``b / a`` lies in the ring."""
    if _is_zero(a) or _is_zero(b):
        raise ValueError("divisibility is defined on nonzero elements")
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return (b / a).denominator == 1
    if isinstance(a, GaussianFraction) and isinstance(b, GaussianFraction):
        return (b / a).in_ring()
    raise TypeError("elements from different rings")


def _is_rational_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def gaussian_primes(max_norm: int) -> list[Gaussian]:
    """First-quadrant Gaussian primes of norm at most ``max_norm``, by norm."""
    out = []
    for p in range(2, max_norm + 1):
        if not _is_rational_prime(p):
            continue
        if p == 2:
            out.append(Gaussian(1, 1))
        elif p % 4 == 1:
            a = 1
            while True:
                b2 = p - a * a
                b = int(b2 ** 0.5)
                while b * b > b2:
                    b -= 1
                while (b + 1) * (b + 1) <= b2:
                    b += 1
                if b * b == b2:
                    break
                a += 1
            out += [Gaussian(a, b), Gaussian(b, a)]
        elif p * p <= max_norm:
            out.append(Gaussian(p))
    return sorted(out, key=lambda z: (z.norm(), z.re, z.im))


def gaussian_factor(z: Gaussian, norm_bound: int = DEFAULT_NORM_BOUND
                    ) -> tuple[int, list[tuple[Gaussian, int]]]:
    """Factor ``z = i^k * prod p^e`` over first-quadrant primes by trial division.

    Returns ``(k, [(p, e), ...])`` with primes ordered by norm.  Inputs of
    norm above ``norm_bound`` are rejected.
    """
    if z.is_zero():
        raise ValueError("cannot factor zero")
    if z.norm() > norm_bound:
        raise ValueError(f"norm {z.norm()} exceeds the factorization bound {norm_bound}")
    rest = z
    factors: list[tuple[Gaussian, int]] = []
    limit = 1
    while limit * limit < z.norm():
        limit += 1
    for p in gaussian_primes(limit):
        if p.norm() * p.norm() > rest.norm():
            break
        e = 0
        while True:
            q = rest.exact_div(p)
            if q is None:
                break
            rest, e = q, e + 1
        if e:
            factors.append((p, e))
    if rest.norm() > 1:
        p, _ = rest.normalized()
        rest = rest.exact_div(p)
        merged = dict(factors)
        merged[p] = merged.get(p, 0) + 1
        factors = sorted(merged.items(), key=lambda t: (t[0].norm(), t[0].re, t[0].im))
    return I_POWERS.index(rest), factors


def _strip_gaussian(z: Gaussian, primes: Sequence[Gaussian]) -> tuple[list[int], Gaussian]:
    vals = []
    for p in primes:
        e = 0
        while True:
            q = z.exact_div(p)
            if q is None:
                break
            z, e = q, e + 1
        vals.append(e)
    return vals, z


def _strip_int(n: int, primes: Sequence[int]) -> tuple[list[int], int]:
    vals = []
    for p in primes:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        vals.append(e)
    return vals, n


def _validate_primes(ring: str, primes: Sequence) -> list:
    if ring == "Z":
        primes = [int(p) for p in primes]
        for p in primes:
            if not _is_rational_prime(p):
                raise ValueError(f"{p} is not a prime")
        if len(set(primes)) != len(primes):
            raise ValueError("primes must be distinct")
        return primes
    out = [p if isinstance(p, Gaussian) else parse_gaussian(str(p)) for p in primes]
    for p in out:
        if p.is_zero() or p.is_unit():
            raise ValueError(f"{p} is not a Gaussian prime")
        k, fac = gaussian_factor(p)
        if len(fac) != 1 or fac[0][1] != 1:
            raise ValueError(f"{p} is not a Gaussian prime")
    normal = [p.normalized()[0] for p in out]
    if len(set(normal)) != len(normal):
        raise ValueError("primes must be pairwise non-associate")
    return out


def build_divisibility_object(ring: str, primes: Sequence
                              ) -> tuple[QoGroup, Callable[[Element], GroupElement]]:
    """Divisibility qo-group on fractions supported on ``primes``.

    The group is Z^len(primes) plus the unit group (Z/2 for Z, Z/4 for
    Z[i]) as the last coordinate.  The cone is generated by the prime basis
    vectors and the unit generator.  ``encode`` sends a fraction to its
    valuations and unit exponent.
    """
    _check_ring(ring)
    primes = _validate_primes(ring, primes)
    n = len(primes)
    t = 2 if ring == "Z" else 4
    P = GroupPresentation(n + 1, [[0] * n + [t]])
    gens = [P.basis(k) for k in range(n + 1)]
    names = [str(p) for p in primes] + ["unit"]
    Q = QoGroup(P, Cone(P, gens), labels=names, basis_labels=names)

    def encode(a: Element) -> GroupElement:
        if _is_zero(a):
            raise ValueError("zero has no valuation")
        if ring == "Z":
            if not isinstance(a, Fraction):
                a = Fraction(a)
            vn, rn = _strip_int(abs(a.numerator), primes)
            vd, rd = _strip_int(a.denominator, primes)
            if rn != 1 or rd != 1:
                raise ValueError(f"{a} has prime support outside {primes}")
            unit = 0 if a > 0 else 1
        else:
            if not isinstance(a, GaussianFraction):
                raise TypeError("expected a Gaussian fraction")
            vn, rn = _strip_gaussian(a.num, primes)
            vd, rd = _strip_gaussian(a.den, primes)
            if not (rn.is_unit() and rd.is_unit()):
                raise ValueError(f"{a} has prime support outside the given primes")
            unit = (I_POWERS.index(rn) - I_POWERS.index(rd)) % 4
        return P.element([x - y for x, y in zip(vn, vd)] + [unit])

    return Q, encode


def group_of_divisibility(ring: str, primes: Sequence) -> QoGroup:
    """Antisymmetrization of the divisibility object: the unit torsion is killed."""
    Q, _ = build_divisibility_object(ring, primes)
    return antisymmetrize(Q)[0]
