"""Reduced simplicial homology over Q or GF(p), Reisner's criterion, strong connectivity."""

from __future__ import annotations

from dataclasses import dataclass

from .canonical import bits
from .complex import SimplicialComplex, link_mask, popcount


@dataclass(frozen=True)
class FieldChoice:
    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p < 0 or (p and not _is_prime(p)):
            raise ValueError(f"characteristic must be 0 or a prime, got {p}")


@dataclass(frozen=True)
class HomologyProfile:
    field: FieldChoice
    betti: tuple[int, ...]  # betti[k] is the reduced Betti number in dimension k - 1

    def __getitem__(self, dim: int) -> int:
        return self.betti[dim + 1]

    def is_acyclic(self) -> bool:
        return not any(self.betti)


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % q for q in range(2, int(p ** 0.5) + 1))


def _field(field) -> FieldChoice:
    return field if isinstance(field, FieldChoice) else FieldChoice(int(field))


# -- rank kernels ----------------------------------------------------------------

def _rank_gf2(rows: list[int]) -> int:
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top not in basis:
                basis[top] = r
                break
            r ^= basis[top]
    return len(basis)


def _rank_mod_p(matrix: list[list[int]], p: int) -> int:
    m = [[x % p for x in row] for row in matrix]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        pivot = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][c], p - 2, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                k = m[r][c]
                m[r] = [(x - k * y) % p for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def _rank_bareiss(matrix: list[list[int]]) -> int:
    """Fraction-free elimination; exact over the integers, hence over Q."""
    m = [list(row) for row in matrix]
    rows = len(m)
    cols = len(m[0]) if m else 0
    rank = 0
    prev = 1
    for c in range(cols):
        pivot = next((r for r in range(rank, rows) if m[r][c]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        piv = m[rank][c]
        for r in range(rank + 1, rows):
            rc = m[r][c]
            row_r, row_k = m[r], m[rank]
            m[r] = [(piv * row_r[j] - rc * row_k[j]) // prev if j > c else 0
                    for j in range(cols)]
        prev = piv
        rank += 1
    return rank


# -- chain complex -------------------------------------------------------------------

def _faces_by_dim(cx: SimplicialComplex) -> list[list[int]]:
    out: list[list[int]] = [[] for _ in range(cx.dim + 2)]
    for face in cx.faces:
        out[popcount(face)].append(face)
    for level in out:
        level.sort()
    return out


def _boundary_rank(levels: list[list[int]], i: int, field: FieldChoice) -> int:
    """Rank of the map from i-faces to (i-1)-faces; ``levels[k]`` holds (k-1)-faces."""
    if i < 0 or i + 1 >= len(levels):
        return 0
    src, dst = levels[i + 1], levels[i]
    if not src or not dst:
        return 0
    index = {f: k for k, f in enumerate(dst)}
    p = field.characteristic
    if p == 2:
        rows = []
        for face in src:
            r = 0
            for v in bits(face):
                r |= 1 << index[face & ~(1 << v)]
            rows.append(r)
        return _rank_gf2(rows)
    matrix = []
    for face in src:
        row = [0] * len(dst)
        for sign_pos, v in enumerate(bits(face)):
            row[index[face & ~(1 << v)]] = -1 if sign_pos % 2 else 1
        matrix.append(row)
    return _rank_bareiss(matrix) if p == 0 else _rank_mod_p(matrix, p)


def boundary_rank(cx: SimplicialComplex, i: int, field=0) -> int:
    """Rank of the boundary map on i-dimensional chains (augmented at i = 0)."""
    return _boundary_rank(_faces_by_dim(cx), i, _field(field))


def reduced_betti(cx: SimplicialComplex, field=0) -> HomologyProfile:
    fc = _field(field)
    levels = _faces_by_dim(cx)
    ranks = [_boundary_rank(levels, i, fc) for i in range(-1, cx.dim + 2)]
    # ranks[k] is the rank of the boundary on (k-1)-chains
    betti = tuple(len(levels[k]) - ranks[k] - ranks[k + 1] for k in range(cx.dim + 2))
    return HomologyProfile(fc, betti)


def _vanishes_below_top(cx: SimplicialComplex, fc: FieldChoice) -> bool:
    levels = _faces_by_dim(cx)
    top = cx.dim
    ranks = [_boundary_rank(levels, i, fc) for i in range(-1, top + 1)]
    return all(len(levels[k]) - ranks[k] - ranks[k + 1] == 0 for k in range(top + 1))


def is_cm(cx: SimplicialComplex, field=0) -> bool:
    """Reisner's criterion over every face, the empty face included.

    Impure complexes are rejected up front: the criterion forces purity.
    """
    fc = _field(field)
    if not cx.is_pure():
        return False
    for face in sorted(cx.faces):
        lk = link_mask(cx, face)
        if lk.dim > 0 and not _vanishes_below_top(lk, fc):
            return False
    return True


def is_cm_reisner_all_faces(cx: SimplicialComplex, field=0) -> bool:
    """Reisner's criterion without the purity shortcut."""
    fc = _field(field)
    for face in sorted(cx.faces):
        lk = link_mask(cx, face)
        if not _vanishes_below_top(lk, fc):
            return False
    return True


def is_strongly_connected(cx: SimplicialComplex) -> bool:
    """Pure, and the facets are connected through shared codimension-one faces."""
    if not cx.is_pure():
        return False
    facets = cx.facets
    size = popcount(facets[0])
    seen = {0}
    stack = [0]
    while stack:
        a = stack.pop()
        for b in range(len(facets)):
            if b not in seen and popcount(facets[a] & facets[b]) == size - 1:
                seen.add(b)
                stack.append(b)
    return len(seen) == len(facets)
