"""Cayley graph construction over G and exact DSRG verification.

Three independent routes decide whether Cay(G, X u Y*beta) satisfies the
defining equation A^2 = tI + lambda*A + mu*(J - I - A):

* ``infer_dsrg_params``  - group-algebra convolution over G, reads the
  parameters off S-bar squared;
* ``verify_dsrg_matrix`` - entrywise integer adjacency-matrix oracle;
* ``lemma6_residuals``   - the two A-level convolution identities whose
  vanishing (with k = |X| + |Y|) is equivalent to the equation.

"Proper" DSRGs have 0 < t < k; t = k instances are strongly regular
graphs and t = 0 instances are doubly regular tournaments, both flagged.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import config
from .abelian import AbelianGroup, Element
from .algebra import AlgElem
from .errors import (
    CapExceededError,
    DegenerateConnectionSetError,
    InputError,
)
from .extension import ExtElement, ExtensionSpec, connection_elements


@dataclass(frozen=True)
class ConnectionSet:
    """The pair (X, Y) defining S = X u Y*beta; X avoids the identity."""

    X: tuple[Element, ...]
    Y: tuple[Element, ...]

    @staticmethod
    def make(
        group: AbelianGroup, X: Iterable[Sequence[int]], Y: Iterable[Sequence[int]]
    ) -> "ConnectionSet":
        xs = sorted({group.validate(x) for x in X})
        ys = sorted({group.validate(y) for y in Y})
        if group.identity() in xs:
            raise InputError("X must not contain the identity")
        return ConnectionSet(tuple(xs), tuple(ys))

    @property
    def size(self) -> int:
        return len(self.X) + len(self.Y)


@dataclass(frozen=True)
class DsrgParams:
    """The tuple (2n, k, mu, lambda, t) of the defining equation."""

    n2: int
    k: int
    mu: int
    lam: int
    t: int

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.n2, self.k, self.mu, self.lam, self.t)

    def row_sum_ok(self) -> bool:
        """k^2 = t + lambda*k + mu*(2n - 1 - k), from applying J."""
        return self.k**2 == self.t + self.lam * self.k + self.mu * (
            self.n2 - 1 - self.k
        )

    @property
    def is_srg(self) -> bool:
        return self.t == self.k

    @property
    def is_tournament(self) -> bool:
        return self.t == 0

    @property
    def is_proper(self) -> bool:
        return 0 < self.t < self.k

    @property
    def kind(self) -> str:
        if self.is_proper:
            return "dsrg"
        return "srg" if self.is_srg else "tournament"


@dataclass(frozen=True)
class Violation:
    """Witness that S-bar squared is not of DSRG shape."""

    kind: str  # "not_regular" | "coeff_mismatch"
    element: ExtElement | None
    expected: int | None
    actual: int | None


def _validate_conn(spec: ExtensionSpec, conn: ConnectionSet) -> ConnectionSet:
    return ConnectionSet.make(spec.A, conn.X, conn.Y)


def build_cayley(spec: ExtensionSpec, conn: ConnectionSet) -> np.ndarray:
    """Adjacency matrix: a[x][y] = 1 iff y * x^{-1} lies in S."""
    if spec.order > config.MATRIX_CAP:
        raise CapExceededError(
            f"adjacency matrices refused above order {config.MATRIX_CAP}"
        )
    conn = _validate_conn(spec, conn)
    indicator = np.zeros(spec.order, dtype=np.int64)
    for u in connection_elements(spec, conn.X, conn.Y):
        indicator[spec.rank(u)] = 1
    return indicator[spec.arc_table()]


def infer_dsrg_params(
    spec: ExtensionSpec, conn: ConnectionSet
) -> DsrgParams | Violation:
    """Read (t, lambda, mu) from S-bar squared over G, or the first violation.

    The coefficient at the identity is t; the coefficient must be one
    constant lambda across S and another constant mu across the rest.
    Violations report the first offending element in element-rank order.
    """
    conn = _validate_conn(spec, conn)
    k = conn.size
    if k == 0 or k == spec.order - 1:
        raise DegenerateConnectionSetError(
            "degenerate: parameters unconstrained for empty or complete S"
        )
    s_elem = AlgElem.from_set(spec, connection_elements(spec, conn.X, conn.Y))
    square = (s_elem * s_elem).as_vector()
    in_s = s_elem.as_vector().astype(bool)
    t = int(square[0])
    lam: int | None = None
    mu: int | None = None
    for r in range(spec.order):
        if r == 0:
            continue
        value = int(square[r])
        if in_s[r]:
            if lam is None:
                lam = value
            elif value != lam:
                return Violation("coeff_mismatch", spec.element(r), lam, value)
        else:
            if mu is None:
                mu = value
            elif value != mu:
                return Violation("coeff_mismatch", spec.element(r), mu, value)
    assert lam is not None and mu is not None
    params = DsrgParams(spec.order, k, mu, lam, t)
    assert params.row_sum_ok(), "row-sum identity must hold for inferred tuples"
    return params


def verify_dsrg_matrix(
    spec: ExtensionSpec, conn: ConnectionSet, params: DsrgParams
) -> bool:
    """Entrywise integer oracle for the defining equation (independent path)."""
    adjacency = build_cayley(spec, conn)
    order = spec.order
    if params.n2 != order:
        return False
    ones = np.ones((order, order), dtype=np.int64)
    eye = np.eye(order, dtype=np.int64)
    if not np.array_equal(adjacency @ ones, params.k * ones):
        return False
    if not np.array_equal(ones @ adjacency, params.k * ones):
        return False
    target = (
        params.t * eye
        + params.lam * adjacency
        + params.mu * (ones - eye - adjacency)
    )
    return np.array_equal(adjacency @ adjacency, target)


def lemma6_residuals(
    spec: ExtensionSpec, conn: ConnectionSet, params: DsrgParams
) -> tuple[AlgElem, AlgElem]:
    """LHS - RHS of the two A-level identities, as exact elements over A.

    Both vanish (together with k = |X| + |Y|) exactly when the graph
    satisfies the defining equation with the given parameters:

        X^2 + Y f(Y) alpha = (t - mu) e + (lambda - mu) X + mu A
        X Y + Y f(X)       = (lambda - mu) Y + mu A
    """
    conn = _validate_conn(spec, conn)
    A = spec.A
    x_bar = AlgElem.from_set(A, conn.X)
    y_bar = AlgElem.from_set(A, conn.Y)
    fx = x_bar.f_image(spec.f)
    fy = y_bar.f_image(spec.f)
    ones = AlgElem.all_ones(A)
    e = AlgElem.identity(A)
    lhs1 = x_bar * x_bar + (y_bar * fy).translate(spec.alpha)
    rhs1 = (
        e.scale(params.t - params.mu)
        + x_bar.scale(params.lam - params.mu)
        + ones.scale(params.mu)
    )
    lhs2 = x_bar * y_bar + y_bar * fx
    rhs2 = y_bar.scale(params.lam - params.mu) + ones.scale(params.mu)
    return lhs1 - rhs1, lhs2 - rhs2


def is_dsrg_with_params(
    spec: ExtensionSpec, conn: ConnectionSet, params: DsrgParams
) -> bool:
    """Exact check via the A-level identities (no dense G tables needed)."""
    if params.k != conn.size or params.n2 != spec.order:
        return False
    r1, r2 = lemma6_residuals(spec, conn, params)
    return r1.is_zero() and r2.is_zero()
