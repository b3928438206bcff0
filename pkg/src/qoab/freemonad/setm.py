"""Injective set maps ``i: X' -> X`` and the commuting squares between them."""

from __future__ import annotations

from functools import cached_property
from typing import Mapping, Sequence


class SetmError(ValueError):
    pass


class SetmObject:
    """An injective map ``i`` from the finite set ``X_prime`` into ``X``.

    Label order is kept as given; it fixes the basis order of free objects.
    """

    def __init__(self, X_prime: Sequence[str], X: Sequence[str], i: Mapping[str, str]):
        X_prime = tuple(X_prime)
        X = tuple(X)
        if len(set(X)) != len(X) or len(set(X_prime)) != len(X_prime):
            raise SetmError("labels must be distinct")
        if set(i) != set(X_prime):
            raise SetmError("i must be defined exactly on X_prime")
        if not set(i.values()) <= set(X):
            raise SetmError("i must land in X")
        if len(set(i.values())) != len(i):
            raise SetmError("i is not injective")
        self.X_prime = X_prime
        self.X = X
        self.i = {x: i[x] for x in X_prime}

    @classmethod
    def inclusion(cls, X_prime: Sequence[str], X: Sequence[str]) -> "SetmObject":
        return cls(X_prime, X, {x: x for x in X_prime})

    @classmethod
    def standard(cls, k: int, n: int) -> "SetmObject":
        """``{p0..p(k-1)} -> {x0..x(n-1)}``, ``pj -> xj``; every object up to relabeling."""
        if not 0 <= k <= n:
            raise SetmError("need 0 <= k <= n")
        return cls([f"p{j}" for j in range(k)], [f"x{j}" for j in range(n)],
                   {f"p{j}": f"x{j}" for j in range(k)})

    @cached_property
    def free(self):
        from .adjunction import free_object
        return free_object(self)

    def to_dict(self) -> dict:
        return {"X": list(self.X), "X_prime": list(self.X_prime), "i": dict(self.i)}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetmObject):
            return NotImplemented
        return (self.X, self.X_prime, self.i) == (other.X, other.X_prime, other.i)

    def __hash__(self) -> int:
        return hash((self.X, self.X_prime, tuple(sorted(self.i.items()))))

    def __repr__(self) -> str:
        return f"SetmObject(X_prime={list(self.X_prime)}, X={list(self.X)}, i={self.i})"


class SetmMorphism:
    """A pair ``(f1: X -> Y, f2: X' -> Y')`` with ``j . f2 == f1 . i``."""

    def __init__(self, source: SetmObject, target: SetmObject,
                 f1: Mapping[str, str], f2: Mapping[str, str]):
        if set(f1) != set(source.X) or not set(f1.values()) <= set(target.X):
            raise SetmError("f1 must map X into Y")
        if set(f2) != set(source.X_prime) or not set(f2.values()) <= set(target.X_prime):
            raise SetmError("f2 must map X' into Y'")
        for x in source.X_prime:
            if target.i[f2[x]] != f1[source.i[x]]:
                raise SetmError(f"square does not commute at {x!r}")
        self.source = source
        self.target = target
        self.f1 = dict(f1)
        self.f2 = dict(f2)

    @classmethod
    def from_f1(cls, source: SetmObject, target: SetmObject, f1: Mapping[str, str]) -> "SetmMorphism":
        """The morphism determined by ``f1``; ``f2`` is forced since ``j`` is injective."""
        back = {y: yp for yp, y in target.i.items()}
        f2 = {}
        for x in source.X_prime:
            y = f1[source.i[x]]
            if y not in back:
                raise SetmError(f"f1 sends i({x!r}) outside the image of j")
            f2[x] = back[y]
        return cls(source, target, f1, f2)

    @classmethod
    def identity(cls, obj: SetmObject) -> "SetmMorphism":
        return cls(obj, obj, {x: x for x in obj.X}, {x: x for x in obj.X_prime})

    def __matmul__(self, other: "SetmMorphism") -> "SetmMorphism":
        """``self @ other`` is ``self . other``."""
        if other.target is not self.source and other.target != self.source:
            raise SetmError("morphisms do not compose")
        return SetmMorphism(other.source, self.target,
                            {x: self.f1[y] for x, y in other.f1.items()},
                            {x: self.f2[y] for x, y in other.f2.items()})
