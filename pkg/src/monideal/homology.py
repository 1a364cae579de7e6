"""Reduced simplicial homology over GF(p) and Reisner's Cohen-Macaulay test.

The chain complex is augmented: the empty face sits in degree -1, so the
irrelevant complex has reduced Betti number 1 there and any complex with a
vertex has 0.  All ranks are computed by dense elimination; rows are
bit-packed ints for p = 2 and numpy residue arrays otherwise.  Coefficient
fields are prime fields only; field dependence of Cohen-Macaulayness is a
feature under test, not a bug.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bitsets import bits
from .complexes import SimplicialComplex
from .errors import VoidComplexError


@dataclass(frozen=True)
class PrimeField:
    """GF(p) for a prime 2 <= p < 2**16."""

    p: int

    def __post_init__(self):
        p = self.p
        if not isinstance(p, int) or not 2 <= p < 2**16:
            raise ValueError(f"field order {p!r} outside [2, 2^16)")
        if any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")


GF2 = PrimeField(2)

# When enabled, every Betti computation also asserts that consecutive
# boundary maps compose to zero and that the alternating Betti sum matches
# the alternating face count (reduced Euler characteristic).  Off by default;
# the acceptance suite switches it on for a whole run.
VERIFY_CHAIN_COMPLEX = False
CHAIN_CHECKS = 0


def _rank_gf2(rows: list[int]) -> int:
    """Rank of a GF(2) matrix whose rows are bitmask ints."""
    pivots: list[int] = []
    rank = 0
    for row in rows:
        for piv in pivots:
            low = piv & -piv
            if row & low:
                row ^= piv
        if row:
            pivots.append(row)
            rank += 1
    return rank


def _rank_modp_rows(rows, width: int, p: int) -> int:
    """Row-echelon rank of a matrix given as residue rows mod odd prime p."""
    m = len(rows)
    if m == 0 or width == 0:
        return 0
    if m * width <= 1024:
        # tiny matrices: plain python beats numpy call overhead
        work = [list(r) for r in rows]
        rank = 0
        for c in range(width):
            piv = next(
                (i for i in range(rank, m) if work[i][c] % p), None
            )
            if piv is None:
                continue
            work[rank], work[piv] = work[piv], work[rank]
            inv = pow(work[rank][c], p - 2, p)
            prow = [(x * inv) % p for x in work[rank]]
            work[rank] = prow
            for i in range(rank + 1, m):
                f = work[i][c] % p
                if f:
                    work[i] = [(a - f * b) % p for a, b in zip(work[i], prow)]
            rank += 1
            if rank == m:
                break
        return rank
    a = np.array(rows, dtype=np.int64) % p
    rank = 0
    for c in range(width):
        if rank == a.shape[0]:
            break
        nz = np.nonzero(a[rank:, c])[0]
        if nz.size == 0:
            continue
        i = rank + int(nz[0])
        if i != rank:
            a[[rank, i]] = a[[i, rank]]
        inv = pow(int(a[rank, c]), p - 2, p)
        a[rank] = (a[rank] * inv) % p
        col = a[rank + 1 :, c]
        hit = np.nonzero(col)[0]
        if hit.size:
            idx = rank + 1 + hit
            a[idx] = (a[idx] - np.outer(a[idx, c], a[rank])) % p
        rank += 1
    return rank


def rank_mod_p(matrix, field: PrimeField) -> int:
    """Rank over GF(p) of a dense matrix (any sequence of rows)."""
    rows = [[int(x) for x in r] for r in matrix]
    if not rows or not rows[0]:
        return 0
    p = field.p
    if p == 2:
        packed = []
        for r in rows:
            bitsrow = 0
            for j, x in enumerate(r):
                if x % 2:
                    bitsrow |= 1 << j
            packed.append(bitsrow)
        return _rank_gf2(packed)
    return _rank_modp_rows(rows, len(rows[0]), p)


def _sign_exponent(face: int, v: int) -> int:
    """Position of vertex v within the sorted members of ``face``."""
    return (face & ((1 << v) - 1)).bit_count()


def _dense_boundary(rows: list[int], cols: list[int], p: int) -> np.ndarray:
    index = {f: k for k, f in enumerate(rows)}
    mat = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for j, face in enumerate(cols):
        for v in bits(face):
            sign = -1 if _sign_exponent(face, v) % 2 else 1
            mat[index[face ^ (1 << v)], j] = sign % p
    return mat


def boundary_matrix(
    complex: SimplicialComplex, i: int, field: PrimeField
) -> np.ndarray:
    """The i-th boundary map as a dense matrix mod p.

    Rows are the (i-1)-faces, columns the i-faces, both in (size, members)
    order; the entry for dropping vertex v from face F is (-1)^(position of v
    in sorted F), reduced mod p.  i = 0 maps vertices to the empty face.
    """
    by_dim = complex.faces_by_dim()
    if not by_dim:
        raise VoidComplexError("void complex has no boundary maps")
    if not 0 <= i <= complex.dim:
        raise ValueError(f"boundary index {i} outside [0, dim]")
    return _dense_boundary(by_dim[i - 1], by_dim[i], field.p)


def _boundary_rank(cols: list[int], rows: list[int], p: int) -> int:
    """Rank of the boundary map sending ``cols`` faces into ``rows`` faces.

    Works on the transpose (one packed row per column face); rank is the
    same and the packing is cheaper.
    """
    if not cols or not rows:
        return 0
    index = {f: k for k, f in enumerate(rows)}
    if p == 2:
        packed = []
        for face in cols:
            r = 0
            for v in bits(face):
                r |= 1 << index[face ^ (1 << v)]
            packed.append(r)
        return _rank_gf2(packed)
    width = len(rows)
    dense = []
    for face in cols:
        r = [0] * width
        for v in bits(face):
            r[index[face ^ (1 << v)]] = p - 1 if _sign_exponent(face, v) % 2 else 1
        dense.append(r)
    return _rank_modp_rows(dense, width, p)


def reduced_betti_numbers(
    complex: SimplicialComplex, field: PrimeField
) -> dict[int, int]:
    """Reduced Betti numbers over GF(p), degrees -1 through dim."""
    by_dim = complex.faces_by_dim()
    if not by_dim:
        raise VoidComplexError("void complex has no homology")
    top = complex.dim
    p = field.p
    # ranks[i] = rank of the boundary map C_i -> C_{i-1}
    ranks = {top + 1: 0}
    for i in range(0, top + 1):
        ranks[i] = _boundary_rank(by_dim[i], by_dim[i - 1], p)
    betti = {-1: 1 - ranks.get(0, 0)}
    for i in range(0, top + 1):
        betti[i] = len(by_dim[i]) - ranks[i] - ranks[i + 1]
    if VERIFY_CHAIN_COMPLEX:
        _verify_chain(by_dim, betti, p)
    return betti


def _verify_chain(by_dim: dict[int, list[int]], betti: dict[int, int], p: int):
    global CHAIN_CHECKS
    top = max(by_dim)
    mats = {
        i: _dense_boundary(by_dim[i - 1], by_dim[i], p)
        for i in range(0, top + 1)
    }
    for i in range(1, top + 1):
        assert not ((mats[i - 1] @ mats[i]) % p).any(), "boundary squared != 0"
    euler_faces = sum(
        (-1 if d % 2 else 1) * len(fs) for d, fs in by_dim.items()
    )
    euler_betti = sum((-1 if d % 2 else 1) * b for d, b in betti.items())
    assert euler_betti == euler_faces, "Euler characteristic mismatch"
    CHAIN_CHECKS += 1


def _is_cone(complex: SimplicialComplex) -> bool:
    """True if some vertex lies in every facet (such complexes are acyclic)."""
    common = complex.facets[0]
    for f in complex.facets[1:]:
        common &= f
        if not common:
            return False
    return common != 0


def is_cohen_macaulay(complex: SimplicialComplex, field: PrimeField) -> bool:
    """Reisner's criterion over GF(p).

    True iff for every face F (the empty face included) the link of F has
    vanishing reduced homology below its own dimension.  Impure complexes
    fail immediately (purity is necessary); cone links are acyclic and skip
    the rank computation.
    """
    if complex.is_void:
        raise VoidComplexError("Cohen-Macaulayness undefined for void complex")
    if complex.is_irrelevant:
        return True
    if not complex.is_pure:
        return False
    for face in complex.faces():
        link = complex.link(face)
        if link.is_irrelevant:
            continue
        d = link.dim
        if d <= 0:
            continue
        if _is_cone(link):
            continue
        betti = reduced_betti_numbers(link, field)
        if any(betti[i] for i in range(-1, d)):
            return False
    return True
