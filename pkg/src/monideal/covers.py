"""Minimal vertex covers of facet complexes and the prime data they encode.

For a square-free ideal the minimal primes are generated by exactly the
minimal vertex covers of its facet complex; heights are cover sizes.  The big
height is the largest such size, the Krull dimension of the quotient is n
minus the smallest.
"""
from __future__ import annotations

from dataclasses import dataclass

from .bitsets import minimal_transversals
from .complexes import SimplicialComplex, SquareFreeIdeal
from .errors import VoidOrIrrelevantError


@dataclass(frozen=True)
class PrimaryDecomposition:
    """Minimal primes of a square-free ideal, as vertex-cover masks."""

    primes: tuple[int, ...]
    heights: tuple[int, ...]

    @property
    def d_min(self) -> int:
        return min(self.heights)

    @property
    def d_max(self) -> int:
        return max(self.heights)

    @property
    def distinct_heights(self) -> tuple[int, ...]:
        """The strictly increasing d_1 < ... < d_s."""
        return tuple(sorted(set(self.heights)))


def minimal_vertex_covers(complex: SimplicialComplex) -> tuple[int, ...]:
    """All inclusion-minimal vertex sets meeting every facet.

    Output is complete and sorted by (size, members) for reproducibility.
    """
    if complex.is_void or complex.is_irrelevant:
        raise VoidOrIrrelevantError(
            "vertex covers need at least one nonempty facet"
        )
    return minimal_transversals(complex.facets, complex.n)


def minimal_primes(ideal: SquareFreeIdeal) -> PrimaryDecomposition:
    """Minimal primes = minimal vertex covers of the facet complex."""
    primes = minimal_vertex_covers(ideal.facet_complex())
    return PrimaryDecomposition(
        primes=primes, heights=tuple(p.bit_count() for p in primes)
    )


def big_height(ideal: SquareFreeIdeal) -> int:
    """Largest height of a minimal (= associated) prime."""
    return minimal_primes(ideal).d_max


def krull_dimension(ideal: SquareFreeIdeal) -> int:
    """dim of the quotient ring: n minus the smallest prime height."""
    return ideal.n - minimal_primes(ideal).d_min
