"""Subgroup enumeration and coset pairing under an involution."""

from __future__ import annotations

from dataclasses import dataclass

from .abelian import AbelianGroup, Element, Involution, Subgroup
from .errors import InputError

Coset = tuple[Element, ...]


def enumerate_subgroups(group: AbelianGroup) -> list[Subgroup]:
    """All subgroups, by closing known subgroups under one extra generator.

    Returned sorted by (order, element list) so output is deterministic.
    """
    trivial = group.subgroup_closure([])
    found: dict[tuple[Element, ...], Subgroup] = {trivial.elements: trivial}
    frontier = [trivial]
    while frontier:
        nxt = []
        for sub in frontier:
            members = set(sub.elements)
            for x in group.elements():
                if x in members:
                    continue
                extended = group.subgroup_closure(list(sub.elements) + [x])
                if extended.elements not in found:
                    found[extended.elements] = extended
                    nxt.append(extended)
        frontier = nxt
    return sorted(found.values(), key=lambda s: (s.order, s.elements))


@dataclass(frozen=True)
class OrbitPairing:
    """Non-B cosets grouped under f: swapped pairs and f-fixed cosets."""

    pairs: tuple[tuple[Coset, Coset], ...]
    fixed: tuple[Coset, ...]


def f_orbit_pairing(group: AbelianGroup, B: Subgroup, f: Involution) -> OrbitPairing:
    """Partition the non-B cosets into {C, f(C)} pairs plus f-fixed cosets.

    Requires f(B) = B, otherwise f does not act on the coset space.
    """
    if B.group != group:
        raise InputError("subgroup belongs to a different group")
    if f.image_set(B.elements) != set(B.elements):
        raise InputError("subgroup is not stable under the involution")
    cosets = group.cosets(B)
    image_of: dict[Coset, Coset] = {}
    by_member: dict[Element, Coset] = {}
    for block in cosets:
        for x in block:
            by_member[x] = block
    for block in cosets:
        image_of[block] = by_member[f.apply(block[0])]
    pairs = []
    fixed = []
    seen: set[Coset] = set()
    for block in cosets[1:]:  # cosets[0] is B itself
        if block in seen:
            continue
        image = image_of[block]
        if image == block:
            fixed.append(block)
            seen.add(block)
        else:
            pairs.append((block, image))
            seen.add(block)
            seen.add(image)
    return OrbitPairing(tuple(pairs), tuple(fixed))
