"""Fibred surfaces from (Z/n)^2 covers of the degree-5 del Pezzo.

A family is the covering datum (n; m0..m3) together with base weights
(n0, n1, n2).  Admissibility (each m_j, each n_i and each m_i + m_3 a unit
mod n, sums equal to n, gcd(n,6) = 1) guarantees the total space is a smooth
minimal surface of general type fibred over a curve; every numerical
invariant is a closed form in n and is computed exactly here, with the
smoothness verification reduced to its combinatorial content (orders and
pairwise spans of inertia elements in (Z/n)^2).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .eigenspace import WeightTuple
from .residues import units


class NotCoprimeTo6Error(ValueError):
    pass


class InadmissibleFamilyError(ValueError):
    pass


@dataclass(frozen=True)
class FamilyData:
    """Weight tuple plus base weights (n0, n1, n2) with n0 + n1 + n2 = n."""

    w: WeightTuple
    base_weights: tuple[int, int, int]

    def __post_init__(self):
        bw = tuple(self.base_weights)
        if len(bw) != 3:
            raise ValueError("base weights must be a triple")
        object.__setattr__(self, "base_weights", bw)
        n = self.w.n
        if sum(bw) != n:
            raise ValueError(f"base weights must sum to n: sum{bw} != {n}")
        for i, ni in enumerate(bw):
            if not 1 <= ni <= n - 1:
                raise ValueError(f"n_{i} = {ni} outside [1, n-1]")

    @property
    def n(self) -> int:
        return self.w.n


def family(n: int, m: tuple[int, int, int, int], base_weights: tuple[int, int, int]) -> FamilyData:
    return FamilyData(w=WeightTuple(n=n, m=tuple(m)), base_weights=tuple(base_weights))


# ---------------------------------------------------------------------------
# admissibility


@dataclass(frozen=True)
class AdmissibilityResult:
    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def admissibility_reason(n: int, m, base_weights) -> str | None:
    """First violated constraint for raw integer data, None if admissible.

    Raw-level so that exhaustive searches can probe tuples that the typed
    constructors would reject outright.
    """
    m = tuple(m)
    bw = tuple(base_weights)
    if n < 5:
        return f"n = {n} < 5"
    if gcd(n, 6) != 1:
        return f"gcd(n, 6) = {gcd(n, 6)} != 1"
    if len(m) != 4:
        return "need four branch exponents"
    if len(bw) != 3:
        return "need three base weights"
    for j, mj in enumerate(m):
        if not 1 <= mj <= n - 1:
            return f"m_{j} = {mj} outside [1, n-1]"
    for i, ni in enumerate(bw):
        if not 1 <= ni <= n - 1:
            return f"n_{i} = {ni} outside [1, n-1]"
    if sum(m) != n:
        return f"sum(m) = {sum(m)} != n"
    if sum(bw) != n:
        return f"sum(base weights) = {sum(bw)} != n"
    for j, mj in enumerate(m):
        if gcd(mj, n) != 1:
            return f"m_{j} = {mj} is not a unit mod {n}"
    for i, ni in enumerate(bw):
        if gcd(ni, n) != 1:
            return f"n_{i} = {ni} is not a unit mod {n}"
    for i in range(3):
        if gcd((m[i] + m[3]) % n, n) != 1:
            return f"m_{i} + m_3 = {m[i] + m[3]} is not a unit mod {n}"
    return None


def is_admissible(f: FamilyData) -> AdmissibilityResult:
    reason = admissibility_reason(f.n, f.w.m, f.base_weights)
    return AdmissibilityResult(ok=reason is None, reason=reason)


def admissible_exists(n: int) -> bool:
    """Admissible data exists iff gcd(n, 6) = 1 (for n >= 5)."""
    if n < 5:
        raise ValueError("admissible families need n >= 5")
    return gcd(n, 6) == 1


def standard_family(n: int) -> FamilyData:
    """The standard case m = (1, 1, 1, n-3), base weights (1, 1, n-2)."""
    if n < 5 or gcd(n, 6) != 1:
        raise NotCoprimeTo6Error(f"standard family needs n >= 5 coprime to 6, got {n}")
    return family(n, (1, 1, 1, n - 3), (1, 1, n - 2))


def iter_admissible_families(n: int):
    """All admissible (m, base_weights) for this n, in lexicographic order."""
    if n < 5 or gcd(n, 6) != 1:
        return
    unit_set = set(units(n))
    base_choices = [
        bw
        for bw in itertools.product(range(1, n), repeat=3)
        if sum(bw) == n and all(x in unit_set for x in bw)
    ]
    for m in itertools.product(range(1, n), repeat=4):
        if sum(m) != n:
            continue
        if not all(x in unit_set for x in m):
            continue
        if not all((m[i] + m[3]) % n in unit_set for i in range(3)):
            continue
        for bw in base_choices:
            yield family(n, m, bw)


# ---------------------------------------------------------------------------
# branch divisors on the del Pezzo


class BranchLabel(enum.Enum):
    Y_INF = "Y_INF"
    Y_0 = "Y_0"
    Y_1 = "Y_1"
    X_INF = "X_INF"
    X_0 = "X_0"
    X_1 = "X_1"
    DELTA = "DELTA"
    E0 = "E0"
    E1 = "E1"
    E2 = "E2"


@dataclass(frozen=True)
class BranchDivisor:
    label: BranchLabel
    monodromy: tuple[int, int]


# Intersection pairs on the del Pezzo: the three blown-up points separate
# {y-line, x-line, diagonal} triples, each exceptional curve meets its three
# branches, and the remaining grid crossings survive.  This is data, fixed by
# the blowup combinatorics.
ADJACENT_PAIRS: tuple[tuple[BranchLabel, BranchLabel], ...] = (
    (BranchLabel.X_0, BranchLabel.Y_INF),
    (BranchLabel.X_0, BranchLabel.Y_1),
    (BranchLabel.X_1, BranchLabel.Y_INF),
    (BranchLabel.X_1, BranchLabel.Y_0),
    (BranchLabel.X_INF, BranchLabel.Y_0),
    (BranchLabel.X_INF, BranchLabel.Y_1),
    (BranchLabel.E0, BranchLabel.Y_INF),
    (BranchLabel.E0, BranchLabel.X_INF),
    (BranchLabel.E0, BranchLabel.DELTA),
    (BranchLabel.E1, BranchLabel.Y_0),
    (BranchLabel.E1, BranchLabel.X_0),
    (BranchLabel.E1, BranchLabel.DELTA),
    (BranchLabel.E2, BranchLabel.Y_1),
    (BranchLabel.E2, BranchLabel.X_1),
    (BranchLabel.E2, BranchLabel.DELTA),
)


def _adjacency_sanity():
    degree: dict[BranchLabel, int] = {label: 0 for label in BranchLabel}
    for a, b in ADJACENT_PAIRS:
        degree[a] += 1
        degree[b] += 1
    for label in (BranchLabel.E0, BranchLabel.E1, BranchLabel.E2, BranchLabel.DELTA):
        assert degree[label] == 3, (label, degree[label])


_adjacency_sanity()


def branch_table(f: FamilyData) -> list[BranchDivisor]:
    """The ten branch divisors with their (Z/n)^2 local monodromies."""
    n = f.n
    m0, m1, m2, m3 = f.w.m
    n0, n1, n2 = f.base_weights
    return [
        BranchDivisor(BranchLabel.Y_INF, (m0 % n, 0)),
        BranchDivisor(BranchLabel.Y_0, (m1 % n, 0)),
        BranchDivisor(BranchLabel.Y_1, (m2 % n, 0)),
        BranchDivisor(BranchLabel.X_INF, ((n - m3) % n, n0 % n)),
        BranchDivisor(BranchLabel.X_0, (0, n1 % n)),
        BranchDivisor(BranchLabel.X_1, (0, n2 % n)),
        BranchDivisor(BranchLabel.DELTA, (m3 % n, 0)),
        BranchDivisor(BranchLabel.E0, (m0 % n, n0 % n)),
        BranchDivisor(BranchLabel.E1, ((m1 + m3) % n, n1 % n)),
        BranchDivisor(BranchLabel.E2, ((m2 + m3) % n, n2 % n)),
    ]


@dataclass(frozen=True)
class SmoothnessReport:
    ok: bool
    order_failures: tuple[tuple[str, tuple[int, int]], ...]
    pair_failures: tuple[tuple[str, str, int], ...]


def smoothness_check(f: FamilyData) -> SmoothnessReport:
    """Combinatorial smoothness: inertia of order n everywhere, full span at crossings.

    (i) each divisor's monodromy (u, v) has exact order n in (Z/n)^2, i.e.
    gcd(u, v, n) = 1; (ii) for every intersecting pair the 2x2 determinant of
    the two monodromies is a unit mod n, i.e. the pair generates (Z/n)^2.
    """
    n = f.n
    table = {d.label: d.monodromy for d in branch_table(f)}
    order_failures = []
    for label, (u, v) in table.items():
        if gcd(gcd(u, v), n) != 1:
            order_failures.append((label.value, (u, v)))
    pair_failures = []
    for a, b in ADJACENT_PAIRS:
        (u1, v1), (u2, v2) = table[a], table[b]
        det = (u1 * v2 - u2 * v1) % n
        if gcd(det, n) != 1:
            pair_failures.append((a.value, b.value, det))
    return SmoothnessReport(
        ok=not order_failures and not pair_failures,
        order_failures=tuple(order_failures),
        pair_failures=tuple(pair_failures),
    )


# ---------------------------------------------------------------------------
# numerical invariants


@dataclass(frozen=True)
class SurfaceInvariants:
    g: int
    b: int
    e: int
    K2: int
    chi: int
    slope: Fraction
    deg_V: int
    mu: int
    ball_quotient: bool
    irregularity: int
    p_g: int


def invariants(f: FamilyData) -> SurfaceInvariants:
    """All numerical invariants of the fibred surface, exactly.

    deg V is computed as chi - (g-1)(b-1) with chi from Noether; the closed
    form (n^2 - 1)/12 and the Zeuthen-Segre count mu = 3 are asserted as
    internal consistency checks on every call.
    """
    adm = is_admissible(f)
    if not adm:
        raise InadmissibleFamilyError(adm.reason)
    n = f.n
    g = n - 1
    b = (n - 1) // 2
    e = 2 * n * n - 10 * n + 15
    k2 = 5 * (n - 2) ** 2
    assert (k2 + e) % 12 == 0, (n, k2, e)
    chi = (k2 + e) // 12
    deg_v = chi - (g - 1) * (b - 1)
    assert deg_v * 12 == n * n - 1, (n, deg_v)
    mu = e - 4 * (g - 1) * (b - 1)
    assert mu == 3, (n, mu)
    slope = Fraction(k2, e)
    p_g = chi - 1 + b
    assert p_g >= 0
    return SurfaceInvariants(
        g=g,
        b=b,
        e=e,
        K2=k2,
        chi=chi,
        slope=slope,
        deg_V=deg_v,
        mu=mu,
        ball_quotient=slope == 3,
        irregularity=b,
        p_g=p_g,
    )


@dataclass(frozen=True)
class SingularFibreProfile:
    count: int
    component_genus: int
    components_per_fibre: int
    intersection: str


def singular_fibre_profile(f: FamilyData) -> SingularFibreProfile:
    """Three singular fibres, each two genus-b curves meeting transversally once."""
    adm = is_admissible(f)
    if not adm:
        raise InadmissibleFamilyError(adm.reason)
    n = f.n
    b = (n - 1) // 2
    g = n - 1
    # arithmetic genus of the fibre: 2 components, 1 node -> g = 2b
    assert g == 2 * b
    return SingularFibreProfile(
        count=3,
        component_genus=b,
        components_per_fibre=2,
        intersection="transverse single point",
    )


# ---------------------------------------------------------------------------
# normalization up to the construction's symmetries


def family_orbit(f: FamilyData):
    """Orbit of the family datum under the symmetries of the construction.

    Generators: unit rescaling of (m0..m3) preserving sum(m) = n, independent
    unit rescaling of (n0, n1, n2) preserving its sum, and simultaneous
    permutations of (m0, m1, m2) and (n0, n1, n2) (the three blown-up points
    are permuted as pairs, m3's role is fixed).
    """
    n = f.n
    m = f.w.m
    bw = f.base_weights
    seen = set()
    for perm in itertools.permutations(range(3)):
        pm = (m[perm[0]], m[perm[1]], m[perm[2]], m[3])
        pbw = (bw[perm[0]], bw[perm[1]], bw[perm[2]])
        for h in units(n):
            hm = tuple((h * x) % n for x in pm)
            if sum(hm) != n:
                continue
            for u in units(n):
                ubw = tuple((u * x) % n for x in pbw)
                if sum(ubw) != n:
                    continue
                key = (hm, ubw)
                if key not in seen:
                    seen.add(key)
                    yield key


def canonical_family(f: FamilyData) -> FamilyData:
    """Lexicographically least representative of the symmetry orbit."""
    best = min(family_orbit(f))
    return family(f.n, best[0], best[1])
