"""Resource caps shared by the enumeration and search routines."""

from __future__ import annotations

from dataclasses import dataclass


class OverCapError(RuntimeError):
    """Raised when a computation would exceed a configured resource cap."""


@dataclass(frozen=True)
class Caps:
    """Limits that keep exhaustive routines at desk scale.

    element_cap bounds full element enumeration, lattice_cap bounds
    subgroup-lattice construction, degree_cap bounds permutation degree,
    field_cap bounds finite-field size, sieve_cap bounds the prime sieve.
    """

    element_cap: int = 20000
    lattice_cap: int = 5000
    degree_cap: int = 4096
    field_cap: int = 1 << 20
    sieve_cap: int = 10**8


DEFAULT_CAPS = Caps()
