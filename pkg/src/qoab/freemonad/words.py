"""Finitely supported integer-valued maps: elements of free abelian groups.

A :class:`Word` over a set ``X`` is an element of the free abelian group on
``X``; a :class:`PosWord` is an element of the free commutative monoid.  Keys
may themselves be words, which is how ``T^2`` and ``T^3`` are represented.
Zero coefficients are never stored, so equal words have equal items.
"""

from __future__ import annotations

import random
from typing import Callable, Hashable, Iterable, Mapping, Sequence


def order_key(k):
    """Total order on keys used for canonical item order."""
    if isinstance(k, Word):
        return (2, tuple((order_key(a), c) for a, c in k.items))
    sk = getattr(k, "sort_key", None)
    if sk is not None:
        return (1, sk())
    return (0, str(k))


class Word:
    __slots__ = ("items", "_hash")

    def __init__(self, terms: Mapping[Hashable, int] | Iterable[tuple[Hashable, int]] = ()):
        acc: dict = {}
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        for k, c in pairs:
            acc[k] = acc.get(k, 0) + int(c)
        self.items = tuple(sorted(((k, c) for k, c in acc.items() if c),
                                  key=lambda kc: order_key(kc[0])))
        self._check()
        self._hash = hash(self.items)

    def _check(self) -> None:
        pass

    @classmethod
    def unit(cls, x: Hashable) -> "Word":
        """The singleton word ``x``."""
        return cls({x: 1})

    def coeff(self, k: Hashable) -> int:
        for key, c in self.items:
            if key == k:
                return c
        return 0

    @property
    def support(self) -> tuple:
        return tuple(k for k, _ in self.items)

    def __bool__(self) -> bool:
        return bool(self.items)

    def __add__(self, other: "Word") -> "Word":
        return type(self)(self.items + other.items)

    def __neg__(self) -> "Word":
        return Word((k, -c) for k, c in self.items)

    def __sub__(self, other: "Word") -> "Word":
        return Word(self.items + tuple((k, -c) for k, c in other.items))

    def scale(self, n: int) -> "Word":
        return type(self)((k, n * c) for k, c in self.items)

    def map_keys(self, f: Callable[[Hashable], Hashable]) -> "Word":
        """The functor on maps: relabel keys through ``f`` and collect terms."""
        return type(self)((f(k), c) for k, c in self.items)

    def evaluate(self, add, neg, zero, embed: Callable = lambda k: k):
        """Fold the word into an additive structure, left to right."""
        acc = zero
        for k, c in self.items:
            x = embed(k)
            term = x if c > 0 else neg(x)
            for _ in range(abs(c)):
                acc = add(acc, term)
        return acc

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.items == other.items

    def __hash__(self) -> int:
        return self._hash

    def to_json(self):
        return [[_key_json(k), c] for k, c in self.items]

    def __repr__(self) -> str:
        if not self.items:
            return "1"
        return " + ".join(f"{c}*{k!r}" for k, c in self.items)


class PosWord(Word):
    """Element of the free commutative monoid: all coefficients nonnegative."""

    __slots__ = ()

    def _check(self) -> None:
        if any(c < 0 for _, c in self.items):
            raise ValueError("free commutative monoid words have nonnegative coefficients")

    def __neg__(self):
        raise TypeError("no inverses in a free commutative monoid")


def _key_json(k):
    if isinstance(k, Word):
        return k.to_json()
    coords = getattr(k, "coords", None)
    if coords is not None:
        return list(coords)
    return k


def word_from_json(data, nested: int = 0, cls=Word) -> Word:
    """Inverse of :meth:`Word.to_json` for words nested ``nested`` levels deep."""
    if nested:
        return cls((word_from_json(k, nested - 1, cls), c) for k, c in data)
    return cls((k, c) for k, c in data)


def mu(w: Word) -> Word:
    """Monad multiplication: flatten a word of words by linear expansion."""
    cls = type(w)
    acc: dict = {}
    for inner, c in w.items:
        for k, d in inner.items:
            acc[k] = acc.get(k, 0) + c * d
    return cls(acc)


def eta(x: Hashable, cls=Word) -> Word:
    return cls.unit(x)


def random_word(rng: random.Random, labels: Sequence[Hashable], lo: int = -3, hi: int = 3,
                cls=Word, max_support: int | None = None) -> Word:
    """Uniform coefficients in ``[lo, hi]`` on a random subset of ``labels``."""
    if not labels:
        return cls()
    k = rng.randint(0, min(len(labels), max_support or len(labels)))
    keys = rng.sample(list(labels), k)
    return cls((x, rng.randint(lo, hi)) for x in keys)


def random_nested(rng: random.Random, labels: Sequence[Hashable], depth: int,
                  lo: int = -3, hi: int = 3, cls=Word, width: int = 3) -> Word:
    """A word nested ``depth`` levels (depth 1 is a plain word over ``labels``)."""
    if depth <= 1:
        return random_word(rng, labels, lo, hi, cls)
    keys = [random_nested(rng, labels, depth - 1, lo, hi, cls, width)
            for _ in range(rng.randint(0, width))]
    return cls((k, rng.randint(lo, hi)) for k in keys)
