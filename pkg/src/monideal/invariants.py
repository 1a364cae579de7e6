"""Depth, projective dimension, the sequential Cohen-Macaulay test, and the
verification pipeline tying them to big height.

depth comes from the skeleton criterion: one plus the largest i for which the
i-skeleton of the Stanley-Reisner complex is Cohen-Macaulay.  Projective
dimension is n - depth.  Sequential Cohen-Macaulayness is decided through the
pure-skeleton criterion.  All of it is checked against the big height: depth
<= n - d and pd >= d always, with equality in the sequentially CM case.
"""
from __future__ import annotations

from dataclasses import dataclass

from .complexes import SquareFreeIdeal
from .covers import minimal_primes
from .homology import PrimeField, is_cohen_macaulay


def depth(ideal: SquareFreeIdeal, field: PrimeField) -> int:
    """max{i : i-skeleton of the Stanley-Reisner complex is CM} + 1.

    Scans i downward from dim and stops at the first CM skeleton, which is
    the maximum by construction; no monotonicity of skeleton CM-ness is
    assumed (an ascending scan with early exit would need that).  The
    (-1)-skeleton is the irrelevant complex and always CM, hence depth >= 0.
    """
    delta = ideal.stanley_reisner_complex()
    best = -1
    for i in range(delta.dim, -2, -1):
        if i <= best:
            break
        if is_cohen_macaulay(delta.skeleton(i), field):
            best = i
    return best + 1


def projective_dimension(ideal: SquareFreeIdeal, field: PrimeField) -> int:
    """n - depth (Auslander-Buchsbaum bookkeeping)."""
    return ideal.n - depth(ideal, field)


def is_sequentially_cm(ideal: SquareFreeIdeal, field: PrimeField) -> bool:
    """True iff every pure skeleton of the Stanley-Reisner complex is CM.

    i = -1 is skipped: the pure (-1)-skeleton is the irrelevant complex,
    whose quotient is the base field and trivially CM.
    """
    delta = ideal.stanley_reisner_complex()
    return all(
        is_cohen_macaulay(delta.pure_skeleton(i), field)
        for i in range(delta.dim + 1)
    )


@dataclass(frozen=True)
class VerificationReport:
    """All computed invariants of one ideal plus the theorem checks."""

    n: int
    d_min: int
    d_max: int
    dim: int
    depth: int
    pd: int
    is_cm: bool
    is_scm: bool
    field_p: int
    inequality_depth_ok: bool
    inequality_pd_ok: bool
    theorem_equality_ok: bool
    pd_oracle: int | None = None
    oracle_agrees: bool | None = None

    def all_ok(self) -> bool:
        checks = [
            self.inequality_depth_ok,
            self.inequality_pd_ok,
            self.theorem_equality_ok,
        ]
        if self.oracle_agrees is not None:
            checks.append(self.oracle_agrees)
        return all(checks)


def verify_main_theorem(
    ideal: SquareFreeIdeal,
    field: PrimeField,
    with_oracle: bool = False,
    oracle_cap: int = 20,
) -> VerificationReport:
    """Compute every invariant of one ideal and check the theorem on it.

    The two unconditional checks are depth <= n - d_max and pd >= d_max; the
    conditional one is pd = d_max whenever the quotient is sequentially CM.
    With ``with_oracle`` the projective dimension is recomputed from the
    brute-force Betti table and compared.
    """
    primes = minimal_primes(ideal)
    n = ideal.n
    dep = depth(ideal, field)
    pd = n - dep
    delta = ideal.stanley_reisner_complex()
    cm = is_cohen_macaulay(delta, field)
    scm = is_sequentially_cm(ideal, field)
    pd_oracle = None
    agrees = None
    if with_oracle:
        from .betti import pd_oracle as oracle_pd

        pd_oracle = oracle_pd(ideal, field, cap=oracle_cap)
        agrees = pd_oracle == pd
    return VerificationReport(
        n=n,
        d_min=primes.d_min,
        d_max=primes.d_max,
        dim=n - primes.d_min,
        depth=dep,
        pd=pd,
        is_cm=cm,
        is_scm=scm,
        field_p=field.p,
        inequality_depth_ok=dep <= n - primes.d_max,
        inequality_pd_ok=pd >= primes.d_max,
        theorem_equality_ok=(not scm) or pd == primes.d_max,
        pd_oracle=pd_oracle,
        oracle_agrees=agrees,
    )
