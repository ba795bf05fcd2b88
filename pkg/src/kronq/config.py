"""Resource caps for the exact enumeration routines.

Every cap is a hard bound checked before work starts, so a scan either
completes exactly or refuses up front.  The defaults are sized for the
desk-scale verification runs (n <= 8, q in {2, 3, 5}, lengths <= 12).
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Caps:
    # largest module length accepted by the measure recursion
    submodule_length: int = 12
    # q**dim bound when enumerating all subspaces of F_q^dim
    subspace_points: int = 1024
    # |End(M)| bound for the exhaustive idempotent search
    idempotent_points: int = 2**20
    # |Hom(M,N)| bound for the isomorphism scan
    hom_scan_points: int = 2**20
    # per-dimension-vector bound on q**(n*d1*d2) in exhaustive scans
    exhaustive_tuples: int = 2**24
    # largest module length accepted by the chain-enumeration oracle
    oracle_length: int = 5


DEFAULT_CAPS = Caps()
