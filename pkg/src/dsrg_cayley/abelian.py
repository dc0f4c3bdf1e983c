"""Finite abelian groups as products of cyclic factors.

Elements are exponent vectors (plain tuples) reduced componentwise, so
equality is tuple comparison. Enumeration order is lexicographic with the
leftmost coordinate most significant; the identity always has rank 0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd, lcm, prod
from typing import Iterable, Sequence

import numpy as np

from . import config
from .errors import CapExceededError, InputError

Element = tuple[int, ...]


class AbelianGroup:
    """The group Z_{d1} x ... x Z_{dm}, written additively."""

    def __init__(self, factors: Sequence[int]):
        factors = tuple(int(d) for d in factors)
        if not factors:
            raise InputError("factor list must be non-empty")
        for d in factors:
            if d < 1:
                raise InputError(f"cyclic factor orders must be >= 1, got {d}")
        order = prod(factors)
        cap = config.max_order()
        if order > cap:
            raise CapExceededError(f"group order {order} exceeds cap {cap}")
        self.factors = factors
        self.order = order
        self.rank_width = len(factors)
        self._elements: list[Element] | None = None
        self._rank_map: dict[Element, int] | None = None
        self._sub_table: np.ndarray | None = None

    # -- value semantics -------------------------------------------------
    def __eq__(self, other) -> bool:
        return isinstance(other, AbelianGroup) and self.factors == other.factors

    def __hash__(self) -> int:
        return hash(self.factors)

    def __repr__(self) -> str:
        return f"AbelianGroup({list(self.factors)})"

    def describe(self) -> str:
        return " x ".join(f"Z{d}" for d in self.factors)

    # -- element arithmetic ----------------------------------------------
    def identity(self) -> Element:
        return (0,) * len(self.factors)

    def reduce(self, coords: Sequence[int]) -> Element:
        if len(coords) != len(self.factors):
            raise InputError(
                f"element has {len(coords)} coordinates, expected {len(self.factors)}"
            )
        return tuple(int(c) % d for c, d in zip(coords, self.factors))

    def validate(self, x: Sequence[int]) -> Element:
        x = tuple(int(c) for c in x)
        if len(x) != len(self.factors):
            raise InputError(
                f"element has {len(x)} coordinates, expected {len(self.factors)}"
            )
        for c, d in zip(x, self.factors):
            if not 0 <= c < d:
                raise InputError(f"coordinate {c} out of range [0, {d}) in {x}")
        return x

    def add(self, x: Element, y: Element) -> Element:
        self.validate(x)
        self.validate(y)
        return tuple((a + b) % d for a, b, d in zip(x, y, self.factors))

    def neg(self, x: Element) -> Element:
        self.validate(x)
        return tuple((-a) % d for a, d in zip(x, self.factors))

    def sub(self, x: Element, y: Element) -> Element:
        return self.add(x, self.neg(y))

    def smul(self, k: int, x: Element) -> Element:
        self.validate(x)
        return tuple((k * a) % d for a, d in zip(x, self.factors))

    def element_order(self, x: Element) -> int:
        self.validate(x)
        return lcm(*(d // gcd(d, a) for a, d in zip(x, self.factors)))

    # -- enumeration -------------------------------------------------------
    def elements(self) -> list[Element]:
        if self._elements is None:
            self._elements = [
                tuple(v) for v in itertools.product(*(range(d) for d in self.factors))
            ]
        return self._elements

    def rank(self, x: Element) -> int:
        r = 0
        for a, d in zip(self.validate(x), self.factors):
            r = r * d + a
        return r

    def element(self, rank: int) -> Element:
        if not 0 <= rank < self.order:
            raise InputError(f"rank {rank} out of range [0, {self.order})")
        coords = []
        for d in reversed(self.factors):
            rank, a = divmod(rank, d)
            coords.append(a)
        return tuple(reversed(coords))

    def rank_map(self) -> dict[Element, int]:
        if self._rank_map is None:
            self._rank_map = {x: i for i, x in enumerate(self.elements())}
        return self._rank_map

    # -- cached index tables (exact integer convolution support) -----------
    def sub_table(self) -> np.ndarray:
        """Table T with T[g, i] = rank(element(g) - element(i))."""
        if self._sub_table is None:
            if self.order > config.MATRIX_CAP:
                raise CapExceededError(
                    f"dense tables refused above order {config.MATRIX_CAP}"
                )
            n = self.order
            elems = self.elements()
            table = np.empty((n, n), dtype=np.int64)
            for i, x in enumerate(elems):
                neg_x = self.neg(x)
                for g in range(n):
                    table[g, i] = self.rank(self.add(elems[g], neg_x))
            self._sub_table = table
        return self._sub_table

    def ldiv_table(self) -> np.ndarray:
        """Table T with T[g, i] = rank(element(i)^{-1} + element(g)); equals sub_table."""
        return self.sub_table()

    def neg_perm(self) -> np.ndarray:
        return np.array([self.rank(self.neg(x)) for x in self.elements()], dtype=np.int64)

    # -- subgroups, cosets, orbits -----------------------------------------
    def subgroup_closure(self, gens: Iterable[Element]) -> "Subgroup":
        gens = [self.validate(g) for g in gens]
        seen = {self.identity()}
        frontier = [self.identity()]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.add(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return Subgroup(self, tuple(sorted(seen)))

    def is_subgroup(self, elems: Iterable[Element]) -> bool:
        members = {self.validate(x) for x in elems}
        if self.identity() not in members:
            return False
        for x in members:
            if self.neg(x) not in members:
                return False
            for y in members:
                if self.add(x, y) not in members:
                    return False
        return True

    def cosets(self, subgroup: "Subgroup") -> list[tuple[Element, ...]]:
        """All cosets of ``subgroup``, each sorted, ordered by smallest member."""
        if subgroup.group != self:
            raise InputError("subgroup belongs to a different group")
        seen: set[Element] = set()
        blocks: list[tuple[Element, ...]] = []
        for x in self.elements():
            if x in seen:
                continue
            block = tuple(sorted(self.add(x, b) for b in subgroup.elements))
            seen.update(block)
            blocks.append(block)
        return blocks

    def is_coset_union(self, subgroup: "Subgroup", members: Iterable[Element]) -> bool:
        member_set = {self.validate(x) for x in members}
        return all(
            self.add(x, b) in member_set for x in member_set for b in subgroup.elements
        )

    def generator_orbit(self, x: Element) -> tuple[Element, ...]:
        """All y generating the same cyclic subgroup as x."""
        x = self.validate(x)
        d = self.element_order(x)
        return tuple(sorted({self.smul(k, x) for k in range(d) if gcd(k, d) == 1}))

    def generator_orbits(self) -> list[tuple[Element, ...]]:
        """The generator orbits, a partition of the group."""
        seen: set[Element] = set()
        orbits = []
        for x in self.elements():
            if x in seen:
                continue
            orbit = self.generator_orbit(x)
            seen.update(orbit)
            orbits.append(orbit)
        return orbits


@dataclass(frozen=True)
class Subgroup:
    """A subgroup held as its sorted element tuple."""

    group: AbelianGroup
    elements: tuple[Element, ...]

    def __post_init__(self):
        if not self.group.is_subgroup(self.elements):
            raise InputError("element set is not closed under the group operations")

    @property
    def order(self) -> int:
        return len(self.elements)

    def contains(self, x: Element) -> bool:
        return self.group.validate(x) in self.elements

    @staticmethod
    def from_elements(group: AbelianGroup, elems: Iterable[Element]) -> "Subgroup":
        return Subgroup(group, tuple(sorted(group.validate(x) for x in elems)))


class Involution:
    """An automorphism f with f o f = id, given by generator images.

    The i-th image is f applied to the i-th standard generator; f extends
    additively. Construction validates that the images define an
    endomorphism (d_i * image_i = 0) and that f o f fixes every generator,
    which together force f to be an automorphism of order dividing 2.
    """

    def __init__(self, group: AbelianGroup, images: Sequence[Sequence[int]]):
        if len(images) != len(group.factors):
            raise InputError(
                f"expected {len(group.factors)} generator images, got {len(images)}"
            )
        images = tuple(group.validate(img) for img in images)
        for i, (img, d) in enumerate(zip(images, group.factors)):
            if group.smul(d, img) != group.identity():
                raise InputError(
                    f"not a homomorphism: {d} * f(g{i}) = {group.smul(d, img)} != identity"
                )
        self.group = group
        self.images = images
        self._perm: np.ndarray | None = None
        for i, gen in enumerate(_standard_generators(group)):
            twice = self.apply(self.apply(gen))
            if twice != gen:
                raise InputError(
                    f"f o f is not the identity: f(f(g{i})) = {twice} != {gen}"
                )

    def apply(self, x: Element) -> Element:
        x = self.group.validate(x)
        acc = self.group.identity()
        for a, img in zip(x, self.images):
            acc = self.group.add(acc, self.group.smul(a, img))
        return acc

    @property
    def is_identity(self) -> bool:
        return all(
            img == gen
            for img, gen in zip(self.images, _standard_generators(self.group))
        )

    def is_fixed(self, x: Element) -> bool:
        return self.apply(x) == self.group.validate(x)

    def perm(self) -> np.ndarray:
        """Rank permutation P with P[rank(x)] = rank(f(x))."""
        if self._perm is None:
            self._perm = np.array(
                [self.group.rank(self.apply(x)) for x in self.group.elements()],
                dtype=np.int64,
            )
        return self._perm

    def image_set(self, members: Iterable[Element]) -> set[Element]:
        return {self.apply(x) for x in members}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Involution)
            and self.group == other.group
            and self.images == other.images
        )

    def __hash__(self) -> int:
        return hash((self.group, self.images))

    def __repr__(self) -> str:
        return f"Involution({self.group!r}, {list(self.images)})"

    @staticmethod
    def identity_map(group: AbelianGroup) -> "Involution":
        return Involution(group, _standard_generators(group))

    @staticmethod
    def negation(group: AbelianGroup) -> "Involution":
        """The inversion map a -> -a (dihedral/dicyclic conjugation action)."""
        return Involution(group, [group.neg(g) for g in _standard_generators(group)])


def _standard_generators(group: AbelianGroup) -> list[Element]:
    m = len(group.factors)
    return [
        group.reduce(tuple(1 if j == i else 0 for j in range(m))) for i in range(m)
    ]


def make_group(factors: Sequence[int]) -> AbelianGroup:
    return AbelianGroup(factors)


def make_involution(group: AbelianGroup, images: Sequence[Sequence[int]]) -> Involution:
    return Involution(group, images)
