"""Index-2 extensions G = A u A*beta of a finite abelian group A.

The extension is presented by beta^2 = alpha and beta * a * beta^{-1} = f(a)
for an order-2 automorphism f of A fixing alpha. Elements are pairs
(a, flag) where flag 1 marks the coset A*beta; the stored a is the left
coefficient of a*beta.
"""

from __future__ import annotations

import warnings
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from . import config
from .abelian import AbelianGroup, Element, Involution
from .errors import CapExceededError, InputError


class AbelianExtensionWarning(UserWarning):
    """The conjugation action is trivial, so the extension is abelian."""


class ExtElement(NamedTuple):
    a: Element
    beta: int


class ExtensionSpec:
    """The group G = <A, beta | beta^2 = alpha, beta a beta^{-1} = f(a)>."""

    def __init__(self, group: AbelianGroup, f: Involution, alpha: Sequence[int]):
        if f.group != group:
            raise InputError("involution is defined on a different group")
        alpha = group.validate(alpha)
        if f.apply(alpha) != alpha:
            raise InputError(
                f"alpha must be fixed by f, but f({alpha}) = {f.apply(alpha)}"
            )
        self.A = group
        self.f = f
        self.alpha = alpha
        self.n = group.order
        self.order = 2 * group.order
        self.alpha_is_identity = alpha == group.identity()
        self.kind = "dihedral-type" if self.alpha_is_identity else "dicyclic-type"
        self.is_abelian = f.is_identity
        if self.is_abelian:
            warnings.warn(
                "conjugation action is trivial: the extension is abelian",
                AbelianExtensionWarning,
                stacklevel=2,
            )
        self._elements: list[ExtElement] | None = None
        self._mul_table: np.ndarray | None = None
        self._ldiv_table: np.ndarray | None = None
        self._arc_table: np.ndarray | None = None

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExtensionSpec)
            and self.A == other.A
            and self.f == other.f
            and self.alpha == other.alpha
        )

    def __hash__(self) -> int:
        return hash((self.A, self.f, self.alpha))

    def __repr__(self) -> str:
        return f"ExtensionSpec({self.A!r}, f={list(self.f.images)}, alpha={self.alpha})"

    def describe(self) -> str:
        return f"{self.A.describe()} extension ({self.kind}, alpha={self.alpha})"

    # -- element arithmetic -------------------------------------------------
    def identity(self) -> ExtElement:
        return ExtElement(self.A.identity(), 0)

    def validate(self, u: ExtElement | tuple) -> ExtElement:
        a, beta = u
        if beta not in (0, 1):
            raise InputError(f"beta flag must be 0 or 1, got {beta}")
        return ExtElement(self.A.validate(a), int(beta))

    def mul(self, u: ExtElement, v: ExtElement) -> ExtElement:
        (a, s) = self.validate(u)
        (b, t) = self.validate(v)
        rhs = b if s == 0 else self.f.apply(b)
        prod = self.A.add(a, rhs)
        if s == 1 and t == 1:
            return ExtElement(self.A.add(prod, self.alpha), 0)
        return ExtElement(prod, s ^ t)

    def inv(self, u: ExtElement) -> ExtElement:
        (a, s) = self.validate(u)
        if s == 0:
            return ExtElement(self.A.neg(a), 0)
        return ExtElement(self.A.neg(self.A.add(self.f.apply(a), self.alpha)), 1)

    # -- enumeration ----------------------------------------------------------
    def elements(self) -> list[ExtElement]:
        """All 2n elements: A first in lexicographic order, then A*beta."""
        if self._elements is None:
            base = self.A.elements()
            self._elements = [ExtElement(a, 0) for a in base] + [
                ExtElement(a, 1) for a in base
            ]
        return self._elements

    def rank(self, u: ExtElement) -> int:
        (a, s) = self.validate(u)
        return s * self.n + self.A.rank(a)

    def element(self, rank: int) -> ExtElement:
        if not 0 <= rank < self.order:
            raise InputError(f"rank {rank} out of range [0, {self.order})")
        s, r = divmod(rank, self.n)
        return ExtElement(self.A.element(r), s)

    # -- cached index tables --------------------------------------------------
    def _check_table_cap(self):
        if self.order > config.MATRIX_CAP:
            raise CapExceededError(
                f"dense tables refused above order {config.MATRIX_CAP}"
            )

    def mul_rank_table(self) -> np.ndarray:
        """Table M with M[i, j] = rank(element(i) * element(j))."""
        if self._mul_table is None:
            self._check_table_cap()
            elems = self.elements()
            order = self.order
            table = np.empty((order, order), dtype=np.int64)
            for i, u in enumerate(elems):
                for j, v in enumerate(elems):
                    table[i, j] = self.rank(self.mul(u, v))
            self._mul_table = table
        return self._mul_table

    def inv_perm(self) -> np.ndarray:
        return np.array([self.rank(self.inv(u)) for u in self.elements()], dtype=np.int64)

    def ldiv_table(self) -> np.ndarray:
        """Table T with T[g, i] = rank(element(i)^{-1} * element(g))."""
        if self._ldiv_table is None:
            mul = self.mul_rank_table()
            inv = self.inv_perm()
            self._ldiv_table = mul[inv, :].T.copy()
        return self._ldiv_table

    def arc_table(self) -> np.ndarray:
        """Table R with R[x, y] = rank(element(y) * element(x)^{-1})."""
        if self._arc_table is None:
            mul = self.mul_rank_table()
            inv = self.inv_perm()
            self._arc_table = mul[:, inv].T.copy()
        return self._arc_table


def make_extension(
    group: AbelianGroup, f: Involution, alpha: Sequence[int]
) -> ExtensionSpec:
    return ExtensionSpec(group, f, alpha)


def dihedral(n: int) -> ExtensionSpec:
    """Dihedral-type extension of Z_n: f = negation, alpha = identity."""
    group = AbelianGroup([n])
    return ExtensionSpec(group, Involution.negation(group), (0,))


def dicyclic(n: int) -> ExtensionSpec:
    """Dicyclic-type extension of Z_n (n even): f = negation, alpha = n/2."""
    if n % 2 != 0:
        raise InputError(f"dicyclic extensions need even n, got {n}")
    group = AbelianGroup([n])
    return ExtensionSpec(group, Involution.negation(group), (n // 2,))


def generalized_dihedral(group: AbelianGroup) -> ExtensionSpec:
    """Extension with f = negation and alpha = identity over any abelian A."""
    return ExtensionSpec(group, Involution.negation(group), group.identity())


def connection_elements(
    spec: ExtensionSpec, X: Iterable[Element], Y: Iterable[Element]
) -> list[ExtElement]:
    """The connection set X u Y*beta as extension elements."""
    xs = [ExtElement(spec.A.validate(x), 0) for x in X]
    ys = [ExtElement(spec.A.validate(y), 1) for y in Y]
    return xs + ys
