"""Exact integer group-algebra arithmetic over A and over G.

An element is a finitely supported integer coefficient function; products
are group convolutions computed exactly in int64. Coefficient magnitudes
are bounded at construction so convolutions cannot overflow (see
``config.coefficient_bound``).
"""

from __future__ import annotations

from typing import Iterable, Mapping, Union

import numpy as np

from . import config
from .abelian import AbelianGroup, Element, Involution
from .errors import InputError
from .extension import ExtElement, ExtensionSpec

Carrier = Union[AbelianGroup, ExtensionSpec]


def _carrier_kind(carrier: Carrier) -> str:
    if isinstance(carrier, AbelianGroup):
        return "A"
    if isinstance(carrier, ExtensionSpec):
        return "G"
    raise InputError(f"unsupported carrier type {type(carrier).__name__}")


def _validate_member(carrier: Carrier, item):
    if isinstance(carrier, AbelianGroup):
        return carrier.validate(item)
    return carrier.validate(item)


class AlgElem:
    """An integer-coefficient element of the group algebra of the carrier."""

    __slots__ = ("carrier", "coeffs")

    def __init__(self, carrier: Carrier, coeffs: np.ndarray | dict):
        _carrier_kind(carrier)
        self.carrier = carrier
        if isinstance(coeffs, dict):
            self.coeffs = coeffs
        else:
            self.coeffs = np.asarray(coeffs, dtype=np.int64)
            if self.coeffs.shape != (carrier.order,):
                raise InputError(
                    f"coefficient vector has shape {self.coeffs.shape}, "
                    f"expected ({carrier.order},)"
                )
        self._check_bound()

    # -- construction -------------------------------------------------------
    @staticmethod
    def zero(carrier: Carrier) -> "AlgElem":
        if carrier.order <= config.DENSE_ALGEBRA_CAP:
            return AlgElem(carrier, np.zeros(carrier.order, dtype=np.int64))
        return AlgElem(carrier, {})

    @staticmethod
    def from_set(carrier: Carrier, members: Iterable) -> "AlgElem":
        """Coefficient 1 on each member (duplicates accumulate)."""
        out = AlgElem.zero(carrier)
        for item in members:
            member = _validate_member(carrier, item)
            r = carrier.rank(member)
            if isinstance(out.coeffs, dict):
                out.coeffs[r] = out.coeffs.get(r, 0) + 1
            else:
                out.coeffs[r] += 1
        out._check_bound()
        return out

    @staticmethod
    def from_coeffs(carrier: Carrier, mapping: Mapping) -> "AlgElem":
        out = AlgElem.zero(carrier)
        for item, c in mapping.items():
            member = _validate_member(carrier, item)
            r = carrier.rank(member)
            if isinstance(out.coeffs, dict):
                out.coeffs[r] = out.coeffs.get(r, 0) + int(c)
            else:
                out.coeffs[r] += int(c)
        out._check_bound()
        return out

    @staticmethod
    def all_ones(carrier: Carrier) -> "AlgElem":
        """The sum of all carrier elements with coefficient 1."""
        if carrier.order <= config.DENSE_ALGEBRA_CAP:
            return AlgElem(carrier, np.ones(carrier.order, dtype=np.int64))
        return AlgElem(carrier, {r: 1 for r in range(carrier.order)})

    @staticmethod
    def identity(carrier: Carrier) -> "AlgElem":
        out = AlgElem.zero(carrier)
        out._bump(0, 1)
        return out

    def _bump(self, rank: int, c: int):
        if isinstance(self.coeffs, dict):
            self.coeffs[rank] = self.coeffs.get(rank, 0) + c
        else:
            self.coeffs[rank] += c

    def _check_bound(self):
        bound = config.coefficient_bound(self.carrier.order)
        if isinstance(self.coeffs, dict):
            bad = next((r for r, c in self.coeffs.items() if abs(c) > bound), None)
            if bad is not None:
                raise InputError(
                    f"coefficient {self.coeffs[bad]} exceeds overflow bound {bound}"
                )
        else:
            if self.coeffs.size and int(np.abs(self.coeffs).max()) > bound:
                raise InputError(f"a coefficient exceeds overflow bound {bound}")

    # -- inspection ---------------------------------------------------------
    @property
    def carrier_kind(self) -> str:
        return _carrier_kind(self.carrier)

    def coefficient(self, item) -> int:
        member = _validate_member(self.carrier, item)
        r = self.carrier.rank(member)
        if isinstance(self.coeffs, dict):
            return int(self.coeffs.get(r, 0))
        return int(self.coeffs[r])

    def items(self):
        """(element, coefficient) pairs over the support, in rank order."""
        if isinstance(self.coeffs, dict):
            for r in sorted(self.coeffs):
                if self.coeffs[r]:
                    yield self.carrier.element(r), int(self.coeffs[r])
        else:
            for r in np.nonzero(self.coeffs)[0]:
                yield self.carrier.element(int(r)), int(self.coeffs[r])

    def support(self) -> list:
        return [x for x, _ in self.items()]

    def total(self) -> int:
        """Sum of all coefficients (the trivial-character value)."""
        if isinstance(self.coeffs, dict):
            return int(sum(self.coeffs.values()))
        return int(self.coeffs.sum())

    def as_vector(self) -> np.ndarray:
        if isinstance(self.coeffs, dict):
            vec = np.zeros(self.carrier.order, dtype=np.int64)
            for r, c in self.coeffs.items():
                vec[r] = c
            return vec
        return self.coeffs.copy()

    def is_zero(self) -> bool:
        if isinstance(self.coeffs, dict):
            return all(c == 0 for c in self.coeffs.values())
        return not self.coeffs.any()

    # -- linear operations ----------------------------------------------------
    def _require_same_carrier(self, other: "AlgElem"):
        if not isinstance(other, AlgElem) or other.carrier != self.carrier:
            raise InputError("carrier mismatch between group-algebra elements")

    def __add__(self, other: "AlgElem") -> "AlgElem":
        self._require_same_carrier(other)
        if isinstance(self.coeffs, dict) or isinstance(other.coeffs, dict):
            out = dict(self.coeffs) if isinstance(self.coeffs, dict) else {
                int(r): int(c) for r, c in enumerate(self.coeffs) if c
            }
            for r, c in (
                other.coeffs.items()
                if isinstance(other.coeffs, dict)
                else enumerate(other.coeffs)
            ):
                if c:
                    out[int(r)] = out.get(int(r), 0) + int(c)
            return AlgElem(self.carrier, out)
        return AlgElem(self.carrier, self.coeffs + other.coeffs)

    def __neg__(self) -> "AlgElem":
        if isinstance(self.coeffs, dict):
            return AlgElem(self.carrier, {r: -c for r, c in self.coeffs.items()})
        return AlgElem(self.carrier, -self.coeffs)

    def __sub__(self, other: "AlgElem") -> "AlgElem":
        return self + (-other)

    def scale(self, k: int) -> "AlgElem":
        k = int(k)
        if isinstance(self.coeffs, dict):
            return AlgElem(self.carrier, {r: k * c for r, c in self.coeffs.items()})
        return AlgElem(self.carrier, self.coeffs * k)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgElem) or other.carrier != self.carrier:
            return False
        return np.array_equal(self.as_vector(), other.as_vector())

    def __hash__(self):
        return hash((self.carrier, tuple(self.as_vector().tolist())))

    def __repr__(self) -> str:
        terms = ", ".join(f"{x}:{c}" for x, c in self.items())
        return f"AlgElem[{self.carrier_kind}]({{{terms}}})"

    # -- multiplicative structure -----------------------------------------
    def __mul__(self, other: "AlgElem") -> "AlgElem":
        return convolve(self, other)

    def f_image(self, f: Involution) -> "AlgElem":
        """Pushforward of the coefficients along the automorphism f."""
        if not isinstance(self.carrier, AbelianGroup):
            raise InputError("f_image is defined for carriers over A only")
        if f.group != self.carrier:
            raise InputError("involution belongs to a different group")
        if isinstance(self.coeffs, dict):
            out: dict[int, int] = {}
            for r, c in self.coeffs.items():
                img = self.carrier.rank(f.apply(self.carrier.element(r)))
                out[img] = out.get(img, 0) + c
            return AlgElem(self.carrier, out)
        vec = np.zeros_like(self.coeffs)
        vec[f.perm()] = self.coeffs
        return AlgElem(self.carrier, vec)

    def reversed(self) -> "AlgElem":
        """Pushforward along inversion x -> x^{-1}."""
        if isinstance(self.carrier, AbelianGroup):
            perm = self.carrier.neg_perm()
        else:
            perm = self.carrier.inv_perm()
        if isinstance(self.coeffs, dict):
            out: dict[int, int] = {}
            for r, c in self.coeffs.items():
                out[int(perm[r])] = out.get(int(perm[r]), 0) + c
            return AlgElem(self.carrier, out)
        vec = np.zeros_like(self.coeffs)
        vec[perm] = self.coeffs
        return AlgElem(self.carrier, vec)

    def is_inverse_closed(self) -> bool:
        return self == self.reversed()

    def translate(self, item) -> "AlgElem":
        """Right-multiply by a single carrier element."""
        single = AlgElem.zero(self.carrier)
        single._bump(self.carrier.rank(_validate_member(self.carrier, item)), 1)
        return convolve(self, single)


def convolve(x: AlgElem, y: AlgElem) -> AlgElem:
    """The group-algebra product: (x*y)[g] = sum over uv = g of x[u] y[v]."""
    x._require_same_carrier(y)
    carrier = x.carrier
    if isinstance(x.coeffs, np.ndarray) and isinstance(y.coeffs, np.ndarray):
        ldiv = carrier.ldiv_table()
        return AlgElem(carrier, y.coeffs[ldiv] @ x.coeffs)
    out: dict[int, int] = {}
    if isinstance(carrier, AbelianGroup):
        compose = carrier.add
    else:
        compose = carrier.mul
    for u, cu in x.items():
        for v, cv in y.items():
            r = carrier.rank(compose(u, v))
            out[r] = out.get(r, 0) + cu * cv
    return AlgElem(carrier, out)


def from_set(carrier: Carrier, members: Iterable) -> AlgElem:
    return AlgElem.from_set(carrier, members)


def all_ones(carrier: Carrier) -> AlgElem:
    return AlgElem.all_ones(carrier)
