"""Canonical forms of vertex-labelled families of bit masks.

Both graphs (edge masks) and simplicial complexes (facet masks) reduce to the
same problem: find the lexicographically least sorted tuple of masks over all
relabellings of ``range(n)``.  The search individualizes vertices of the first
non-singleton cell of an equitable partition and refines; branches related by
a transposition automorphism are explored once.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .errors import CapacityExceeded

DEFAULT_LIMIT = 16


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def permute_mask(mask: int, pos: list[int] | tuple[int, ...]) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << pos[low.bit_length() - 1]
        mask ^= low
    return out


def _refine(cells, n, incidence, members):
    while True:
        cell_of = [0] * n
        for ci, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = ci
        new_cells = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                sig = tuple(sorted(
                    tuple(sorted(cell_of[w] for w in members[m] if w != v))
                    for m in incidence[v]
                ))
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                new_cells.append(cell)
                continue
            changed = True
            for sig in sorted(groups):
                new_cells.append(groups[sig])
        cells = new_cells
        if not changed:
            return cells


def canonical_labeling(n: int, masks: Iterable[int],
                       limit: int = DEFAULT_LIMIT) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Return ``(encoding, pos)`` where ``pos[v]`` is the canonical index of ``v``.

    ``encoding`` is the sorted tuple of relabelled masks and is a complete
    isomorphism invariant of the family.
    """
    if n > limit:
        raise CapacityExceeded(f"canonical form limited to {limit} vertices, got {n}")
    masks = tuple(sorted(set(masks)))
    members = {m: bits(m) for m in masks}
    incidence = [[m for m in masks if m >> v & 1] for v in range(n)]
    mask_set = frozenset(masks)
    best: list = [None, None]

    def swap_is_automorphism(a: int, b: int) -> bool:
        both = (1 << a) | (1 << b)
        for m in masks:
            hit = m & both
            if hit and hit != both and (m ^ both) not in mask_set:
                return False
        return True

    def search(cells):
        cells = _refine(cells, n, incidence, members)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            pos = [0] * n
            for i, c in enumerate(cells):
                pos[c[0]] = i
            enc = tuple(sorted(permute_mask(m, pos) for m in masks))
            if best[0] is None or enc < best[0]:
                best[0], best[1] = enc, tuple(pos)
            return
        cell = cells[target]
        reps: list[int] = []
        for w in cell:
            if any(swap_is_automorphism(r, w) for r in reps):
                continue
            reps.append(w)
            rest = [x for x in cell if x != w]
            search(cells[:target] + [[w], rest] + cells[target + 1:])

    if n == 0:
        return masks, ()
    search([list(range(n))])
    return best[0], best[1]


@lru_cache(maxsize=1 << 16)
def canonical_masks(n: int, masks: tuple[int, ...], limit: int = DEFAULT_LIMIT) -> tuple[int, ...]:
    return canonical_labeling(n, masks, limit)[0]
