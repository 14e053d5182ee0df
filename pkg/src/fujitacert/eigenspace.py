"""Per-character Hodge numbers and Hermitian signatures for rank-2 eigenspaces.

A weight tuple (n; m0, m1, m2, m3) with sum(m) = n describes a cyclic cover
of the line branched over four points.  For each nontrivial character j of
the deck group, the corresponding rank-2 local system carries exact Hodge
data governed by the normalized residues mu_i = [m_i * j] / n:

    dim H^{1,0} = -1 + sum_i mu_i,     dim H^{0,1} = 2 - dim H^{1,0},

and the invariant Hermitian form has index (dim H^{1,0}, dim H^{0,1}).
Everything here is integer/rational arithmetic; no periods are computed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .residues import check_modulus, is_unit


class DegenerateCharacterError(ValueError):
    """Some m_i * j = 0 mod n: the rank-2 local system degenerates at j.

    Degenerate characters are surfaced explicitly (never skipped) because
    downstream certificates must prove none occur.
    """

    def __init__(self, n: int, branch: int, j: int):
        self.n = n
        self.branch = branch
        self.j = j
        super().__init__(f"character j={j} is degenerate: m_{branch} * j = 0 mod {n}")


class SplitClass(enum.Enum):
    """Trichotomy of the character summand V_j inside the direct image V.

    AMPLE_CANDIDATE (not AMPLE) reflects that the indefinite case can a
    priori split either way for the individual rank-1 piece; the certifier
    never claims more than it can check.
    """

    ZERO = "ZERO"
    AMPLE_CANDIDATE = "AMPLE_CANDIDATE"
    FLAT = "FLAT"


@dataclass(frozen=True)
class WeightTuple:
    """Covering datum (n; m0, m1, m2, m3) with sum(m) = n.

    Invariants: 0 < m_i <= n - 3 for every i, and gcd(m0, ..., m3, n) = 1.
    """

    n: int
    m: tuple[int, int, int, int]

    def __post_init__(self):
        check_modulus(self.n)
        m = tuple(self.m)
        if len(m) != 4:
            raise ValueError("weight tuple needs exactly four branch exponents")
        object.__setattr__(self, "m", m)
        if sum(m) != self.n:
            raise ValueError(f"weights must sum to n: sum{m} = {sum(m)} != {self.n}")
        for i, mi in enumerate(m):
            if not 0 < mi <= self.n - 3:
                raise ValueError(f"m_{i} = {mi} outside (0, n-3] for n = {self.n}")
        if gcd(gcd(gcd(gcd(m[0], m[1]), m[2]), m[3]), self.n) != 1:
            raise ValueError(f"gcd(m0,...,m3, n) != 1 for m = {m}, n = {self.n}")

    def all_units(self) -> bool:
        return all(is_unit(mi, self.n) for mi in self.m)


@dataclass(frozen=True)
class ResidueWeights:
    """Relaxed covering datum: four residues mod n with sum = 0 mod n.

    The per-character sigma and dimension formulas need only this much; the
    strict WeightTuple (sum exactly n, positive exponents) is what the
    surface construction consumes.  Residues equal to 0 are allowed here and
    simply degenerate at every character.
    """

    n: int
    m: tuple[int, int, int, int]

    def __post_init__(self):
        check_modulus(self.n)
        m = tuple(x % self.n for x in self.m)
        if len(m) != 4:
            raise ValueError("need exactly four branch residues")
        object.__setattr__(self, "m", m)
        if sum(m) % self.n != 0:
            raise ValueError(
                f"weights must sum to n (mod n): sum{m} = {sum(m)} is not 0 mod {self.n}"
            )

    def all_units(self) -> bool:
        return all(is_unit(mi, self.n) for mi in self.m)


@dataclass(frozen=True)
class EigenspaceReport:
    """Exact data of one character eigenspace: dims, signature, split class.

    A degenerate character (some m_i * j = 0 mod n) yields a flagged entry
    with split_class None and placeholder dims.
    """

    j: int
    sigma: int
    dim_h10: int
    dim_h01: int
    signature: tuple[int, int]
    split_class: SplitClass | None
    degenerate: bool = False


def _check_character(w: WeightTuple | ResidueWeights, j: int) -> int:
    j = j % w.n
    if j == 0:
        raise ValueError("character index j must be nonzero mod n")
    return j


def mu(w: WeightTuple | ResidueWeights, i: int, j: int) -> Fraction:
    """The normalized residue mu_{i,j} = [m_i * j] / n, an exact rational in (0,1)."""
    if i not in (0, 1, 2, 3):
        raise ValueError(f"branch index must be 0..3, got {i}")
    j = _check_character(w, j)
    r = (w.m[i] * j) % w.n
    if r == 0:
        raise DegenerateCharacterError(w.n, i, j)
    return Fraction(r, w.n)


def sigma_sum(w: WeightTuple | ResidueWeights, j: int) -> int:
    """sum_i [m_i * j]; always one of n, 2n, 3n for a non-degenerate character."""
    j = _check_character(w, j)
    total = 0
    for i in range(4):
        r = (w.m[i] * j) % w.n
        if r == 0:
            raise DegenerateCharacterError(w.n, i, j)
        total += r
    assert total in (w.n, 2 * w.n, 3 * w.n), (w, j, total)
    return total


def hodge_dims(w: WeightTuple | ResidueWeights, j: int) -> tuple[int, int]:
    """(dim H^{1,0}, dim H^{0,1}) of the j-eigenspace; the two always sum to 2."""
    h10 = sigma_sum(w, j) // w.n - 1
    return h10, 2 - h10


def signature(w: WeightTuple | ResidueWeights, j: int) -> tuple[int, int]:
    """Index (p, q) of the invariant Hermitian form on the j-eigenspace.

    (2,0) and (0,2) are definite, (1,1) indefinite; coincides with hodge_dims.
    """
    return hodge_dims(w, j)


def split_class_of_sigma(sigma: int, n: int) -> SplitClass:
    if sigma == n:
        return SplitClass.ZERO
    if sigma == 2 * n:
        return SplitClass.AMPLE_CANDIDATE
    if sigma == 3 * n:
        return SplitClass.FLAT
    raise ValueError(f"sigma = {sigma} is not in {{n, 2n, 3n}} for n = {n}")


def eigenspace_report(w: WeightTuple | ResidueWeights, j: int) -> EigenspaceReport:
    sigma = sigma_sum(w, j)
    h10, h01 = sigma // w.n - 1, 3 - sigma // w.n
    return EigenspaceReport(
        j=j % w.n,
        sigma=sigma,
        dim_h10=h10,
        dim_h01=h01,
        signature=(h10, h01),
        split_class=split_class_of_sigma(sigma, w.n),
    )


def eigenspace_table(w: WeightTuple | ResidueWeights) -> list[EigenspaceReport]:
    """Reports for j = 1 .. n-1.

    Degenerate characters are flagged entries (sigma = 0, dims = -1), not
    silent omissions and not fatal: bulk sweeps must see them.
    """
    table = []
    for j in range(1, w.n):
        try:
            table.append(eigenspace_report(w, j))
        except DegenerateCharacterError:
            table.append(
                EigenspaceReport(
                    j=j,
                    sigma=0,
                    dim_h10=-1,
                    dim_h01=-1,
                    signature=(-1, -1),
                    split_class=None,
                    degenerate=True,
                )
            )
    return table
