"""Characters of finite abelian groups and Cayley-graph spectra.

Character values use double-precision complex arithmetic. Realness and
integrality flags are decided at tolerance ``config.char_tolerance(n)``;
eigenvalue multiplicities are grouped at ``config.EIG_GROUP_TOL``. Nothing
exactness-critical is decided here: certificates rest on the integer
group-algebra side.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, NamedTuple, Sequence

import numpy as np

from . import config
from .abelian import AbelianGroup, Element
from .algebra import AlgElem
from .errors import CapExceededError, InputError, PreconditionError
from .extension import ExtElement, ExtensionSpec


class Character(NamedTuple):
    """The character a -> prod_i omega_{d_i}^{exps_i * a_i}."""

    exps: Element


@lru_cache(maxsize=None)
def _char_table(factors: tuple[int, ...]) -> np.ndarray:
    """Full character table T[j, a] in element rank order (row 0 trivial)."""
    table = np.ones((1, 1), dtype=np.complex128)
    for d in factors:
        js = np.arange(d)
        block = np.exp(2j * np.pi * np.outer(js, js) / d)
        table = np.kron(table, block)
    return table


def characters(group: AbelianGroup) -> list[Character]:
    """All |A| characters, indexed like the elements (trivial first)."""
    return [Character(x) for x in group.elements()]


def char_table(group: AbelianGroup) -> np.ndarray:
    return _char_table(group.factors)


def _coeff_vector(group: AbelianGroup, S) -> np.ndarray:
    if isinstance(S, AlgElem):
        if S.carrier != group:
            raise InputError("group-algebra element lives over a different carrier")
        return S.as_vector()
    if isinstance(S, Mapping):
        return AlgElem.from_coeffs(group, S).as_vector()
    return AlgElem.from_set(group, S).as_vector()


def char_eval(group: AbelianGroup, chi: Character | Element, x) -> complex:
    """The character sum over a group-algebra element (or set/multiset)."""
    exps = chi.exps if isinstance(chi, Character) else group.validate(chi)
    vec = _coeff_vector(group, x)
    row = char_table(group)[group.rank(exps)]
    return complex(row @ vec)


@dataclass(frozen=True)
class SpectrumReport:
    """Eigenvalue multiset with multiplicity grouping and numeric flags."""

    values: tuple[complex, ...]
    eigenvalues: tuple[tuple[complex, int], ...]
    all_real: bool
    all_integral: bool
    second_largest: float | None
    order: int

    def distinct_count(self) -> int:
        return len(self.eigenvalues)


def group_eigenvalues(
    values: Sequence[complex], tol: float = config.EIG_GROUP_TOL
) -> list[tuple[complex, int]]:
    """Group a value multiset at absolute tolerance, largest first."""
    if len(values) == 0:
        return []
    vals = sorted((complex(v) for v in values), key=lambda z: (z.real, z.imag))
    groups: list[tuple[complex, int]] = []
    anchor, count = vals[0], 1
    for z in vals[1:]:
        if abs(z - anchor) <= tol:
            count += 1
        else:
            groups.append((anchor, count))
            anchor, count = z, 1
    groups.append((anchor, count))
    groups.sort(key=lambda pair: (pair[0].real, pair[0].imag), reverse=True)
    return groups


def _build_report(values: np.ndarray, order_n: int, tol: float | None) -> SpectrumReport:
    tol_flags = config.char_tolerance(order_n, tol)
    grouped = tuple(group_eigenvalues(values))
    all_real = bool(np.max(np.abs(values.imag)) <= tol_flags) if len(values) else True
    all_integral = bool(
        all_real
        and np.max(np.abs(values.real - np.round(values.real))) <= tol_flags
    )
    second = None
    if all_real and len(values) >= 2:
        reals = np.sort(values.real)[::-1]
        second = float(reals[1])
    return SpectrumReport(
        values=tuple(complex(v) for v in values),
        eigenvalues=grouped,
        all_real=all_real,
        all_integral=all_integral,
        second_largest=second,
        order=len(values),
    )


def cayley_eigenvalues_abelian(
    group: AbelianGroup, S, tol: float | None = None
) -> SpectrumReport:
    """Spectrum of the Cayley multigraph over A: the character sums.

    ``values`` is ordered by character rank, so the trivial character's
    value (the degree) comes first.
    """
    vec = _coeff_vector(group, S)
    values = char_table(group) @ vec
    return _build_report(values, group.order, tol)


def full_spectrum(
    spec: ExtensionSpec, S: Iterable[ExtElement], tol: float | None = None
) -> SpectrumReport:
    """Numeric spectrum of the Cayley graph over G via a dense eigensolver."""
    if spec.order > config.MATRIX_CAP:
        raise CapExceededError(
            f"spectrum refused above order {config.MATRIX_CAP}, got {spec.order}"
        )
    indicator = np.zeros(spec.order, dtype=np.int64)
    for u in S:
        indicator[spec.rank(spec.validate(u))] = 1
    adjacency = indicator[spec.arc_table()]
    values = np.linalg.eigvals(adjacency.astype(np.float64))
    values = values[np.lexsort((values.imag, values.real))][::-1]
    return _build_report(values, spec.order, tol)


def is_integral(group: AbelianGroup, S) -> tuple[bool, list[tuple[Element, int | None]]]:
    """Exact integrality test: the multiset must be constant on generator orbits.

    Returns (flag, decomposition) where the decomposition lists one
    (orbit representative, multiplicity) pair per orbit; a ``None``
    multiplicity marks an orbit on which the multiset is not constant.
    """
    vec = _coeff_vector(group, S)
    if vec.min() < 0:
        raise InputError("integrality test expects non-negative multiplicities")
    decomposition: list[tuple[Element, int | None]] = []
    ok = True
    for orbit in group.generator_orbits():
        coeffs = {int(vec[group.rank(x)]) for x in orbit}
        if len(coeffs) == 1:
            decomposition.append((orbit[0], coeffs.pop()))
        else:
            decomposition.append((orbit[0], None))
            ok = False
    return ok, decomposition


@dataclass(frozen=True)
class MultipartiteVerdict:
    is_complete_multipartite: bool
    parts: int | None = None
    part_size: int | None = None
    witness: tuple[Element, Element, Element] | None = None


def complete_multipartite_check(group: AbelianGroup, S) -> MultipartiteVerdict:
    """Structural test: is the underlying simple graph complete multipartite?

    Requires an inverse-closed (undirected) connection multiset whose graph
    is connected. Complete multipartite means the complement of the
    underlying simple graph is a disjoint union of cliques; a failure
    witness is a triple (u, v, w) with u !~ v !~ w but u ~ w.
    """
    vec = _coeff_vector(group, S)
    if vec.min() < 0:
        raise InputError("expected non-negative multiplicities")
    neg = group.neg_perm()
    if not np.array_equal(vec, vec[neg]):
        raise PreconditionError("connection multiset is directed (S != S^{-1})")
    support = [group.element(int(r)) for r in np.nonzero(vec)[0]]
    support = [x for x in support if x != group.identity()]
    # connectivity of the underlying simple graph via closure of the support
    reached = group.subgroup_closure(support)
    if reached.order != group.order:
        raise PreconditionError("underlying graph is disconnected")
    support_set = set(support)
    elems = group.elements()
    non_neighbors: dict[Element, set[Element]] = {}
    for x in elems:
        non_neighbors[x] = {
            y for y in elems if y != x and group.sub(y, x) not in support_set
        }
    # complete multipartite <=> non-adjacency is transitive on distinct vertices
    for v in elems:
        for u in non_neighbors[v]:
            for w in non_neighbors[v]:
                if u != w and w not in non_neighbors[u]:
                    return MultipartiteVerdict(False, witness=(u, v, w))
    # parts are the classes {x} u non_neighbors[x]
    seen: set[Element] = set()
    parts = []
    for x in elems:
        if x in seen:
            continue
        block = {x} | non_neighbors[x]
        seen.update(block)
        parts.append(block)
    sizes = {len(block) for block in parts}
    if len(sizes) != 1:
        # cannot happen for vertex-transitive graphs; defensive
        return MultipartiteVerdict(False)
    return MultipartiteVerdict(True, parts=len(parts), part_size=sizes.pop())
