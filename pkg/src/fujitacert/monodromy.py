"""Monodromy of the rank-2 character eigenspaces: criteria and matrix oracle.

Two independent routes decide (ir)reducibility and (in)finiteness:

* criteria - integer arithmetic on the weight tuple: the four non-integrality
  conditions for irreducibility, and Galois-definiteness for finiteness
  (finite iff every unit conjugate of the character has a definite form);
* oracle - an explicit rigid rank-2 matrix triple over Q(zeta_n) built from
  companion matrices, with brute-force group closure, infinite-order element
  search, and an exactly solved invariant Hermitian form.

The sweep tests elsewhere hold agreement of the two routes as the highest
severity invariant; neither side may be shortcut through the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .cyclotomic import CyclotomicNumber, finite_order_bound, real_sign, zeta
from .eigenspace import WeightTuple, sigma_sum
from .residues import NonUnitError, inverse_mod, units

DEFAULT_CLOSURE_CAP = 20000
DEFAULT_MAX_WORD_LEN = 8


class ReducibleParametersError(ValueError):
    """Levelt construction rejected: local eigenvalue multisets at 0 and oo share a root."""


class IrreducibilityRequiredError(ValueError):
    """Galois-definiteness criterion invoked without its irreducibility hypothesis."""


class ReducibleNoUniqueFormError(ValueError):
    """Invariant-form solution space is not 1-dimensional: triple is not irreducible."""


# ---------------------------------------------------------------------------
# parameters and criteria


@dataclass(frozen=True)
class HypergeometricParams:
    """Character-scaled parameter triple (ja, jb, jc) as exact rationals.

    Base values for the weight tuple (n; m0..m3) are a = m3/n, b = 1 - m0/n,
    c = 2 - m0/n - m2/n; integer shifts are fixed at zero (they change none
    of the implemented conclusions).
    """

    a: Fraction
    b: Fraction
    c: Fraction


def params_from_weights(w: WeightTuple, j: int) -> HypergeometricParams:
    """(ja, jb, jc), not reduced mod 1; callers reduce as needed."""
    j = j % w.n
    if j == 0:
        raise ValueError("character index j must be nonzero mod n")
    n = w.n
    m = w.m
    return HypergeometricParams(
        a=Fraction(j * m[3], n),
        b=j - Fraction(j * m[0], n),
        c=2 * j - Fraction(j * (m[0] + m[2]), n),
    )


def is_irreducible(w: WeightTuple, j: int) -> bool:
    """True iff none of ja, jb, j(a-c), j(b-c) is an integer.

    Unwinding the parameter substitution, this is exactly: n divides none of
    j*m_i -- so irreducible characters are in particular non-degenerate.
    """
    p = params_from_weights(w, j)
    for value in (p.a, p.b, p.a - p.c, p.b - p.c):
        if value.denominator == 1:
            return False
    return True


@dataclass(frozen=True)
class FinitenessVerdict:
    """FINITE(order) | INFINITE(witness) | INCONCLUSIVE(cap).

    The criterion route emits FINITE without an order (order is only known
    to the closure oracle) and INFINITE with an indefinite-conjugate witness;
    the oracle route emits FINITE with the exact group order and INFINITE
    with an infinite-order word witness.
    """

    kind: str  # "FINITE" | "INFINITE" | "INCONCLUSIVE"
    order: int | None = None
    witness: tuple[tuple[str, object], ...] | None = None
    cap: int | None = None

    @property
    def is_finite(self) -> bool:
        return self.kind == "FINITE"

    @property
    def is_infinite(self) -> bool:
        return self.kind == "INFINITE"

    @property
    def is_inconclusive(self) -> bool:
        return self.kind == "INCONCLUSIVE"


def finiteness_by_signature(w: WeightTuple, j: int) -> FinitenessVerdict:
    """Galois-definiteness criterion: finite iff every unit conjugate is definite.

    Requires is_irreducible(w, j); the criterion is not licensed otherwise.
    Never INCONCLUSIVE.
    """
    if not is_irreducible(w, j):
        raise IrreducibilityRequiredError(
            f"finiteness criterion needs an irreducible character, got j={j} for {w}"
        )
    n = w.n
    j = j % n
    for h in units(n):
        hj = (h * j) % n
        if sigma_sum(w, hj) == 2 * n:
            witness = (("unit", h), ("character", hj), ("sigma", 2 * n))
            return FinitenessVerdict(kind="INFINITE", witness=witness)
    return FinitenessVerdict(kind="FINITE")


def find_infinite_character(w: WeightTuple) -> int:
    """The character j with j*(m0+m3) = -1 mod n; its sigma sum is forced to 2n."""
    n = w.n
    s = (w.m[0] + w.m[3]) % n
    if gcd(s, n) != 1:
        raise NonUnitError(f"m0+m3 = {s} is not a unit mod {n}")
    j = (-inverse_mod(s, n)) % n
    total = sigma_sum(w, j)
    assert total == 2 * n, (w, j, total)
    return j


# ---------------------------------------------------------------------------
# 2x2 matrices over a cyclotomic field

Mat = tuple[tuple[CyclotomicNumber, CyclotomicNumber], tuple[CyclotomicNumber, CyclotomicNumber]]


def mat_identity(level: int) -> Mat:
    one = CyclotomicNumber.one(level)
    zero = CyclotomicNumber.zero(level)
    return ((one, zero), (zero, one))


def mat_mul(a: Mat, b: Mat) -> Mat:
    (a00, a01), (a10, a11) = a
    (b00, b01), (b10, b11) = b
    return (
        (a00 * b00 + a01 * b10, a00 * b01 + a01 * b11),
        (a10 * b00 + a11 * b10, a10 * b01 + a11 * b11),
    )


def mat_vec(a: Mat, v) -> tuple[CyclotomicNumber, CyclotomicNumber]:
    (a00, a01), (a10, a11) = a
    return (a00 * v[0] + a01 * v[1], a10 * v[0] + a11 * v[1])


def mat_trace(a: Mat) -> CyclotomicNumber:
    return a[0][0] + a[1][1]


def mat_det(a: Mat) -> CyclotomicNumber:
    return a[0][0] * a[1][1] - a[0][1] * a[1][0]


def mat_inverse(a: Mat) -> Mat:
    d = mat_det(a)
    inv = d.inverse()
    return (
        (a[1][1] * inv, -a[0][1] * inv),
        (-a[1][0] * inv, a[0][0] * inv),
    )


def mat_conj_transpose(a: Mat) -> Mat:
    return (
        (a[0][0].conjugate(), a[1][0].conjugate()),
        (a[0][1].conjugate(), a[1][1].conjugate()),
    )


def mat_is_identity(a: Mat) -> bool:
    level = a[0][0].level
    return a == mat_identity(level)


def _scalar_of(a: Mat) -> CyclotomicNumber | None:
    if a[0][1].is_zero() and a[1][0].is_zero() and a[0][0] == a[1][1]:
        return a[0][0]
    return None


# ---------------------------------------------------------------------------
# the rigid rank-2 triple


@dataclass(frozen=True)
class MonodromyTriple:
    """Generators g0, g1, ginf over Q(zeta_level) with g0*g1*ginf = 1.

    params records the ordered character-scaled exponents used to build the
    triple; all downstream checks except the Hodge orientation of the
    invariant form are conjugation-invariant and ignore it.
    """

    level: int
    g0: Mat
    g1: Mat
    ginf: Mat
    params: HypergeometricParams

    def __post_init__(self):
        prod = mat_mul(mat_mul(self.g0, self.g1), self.ginf)
        if not mat_is_identity(prod):
            raise ValueError("g0*g1*ginf is not the identity")

    def generators(self) -> list[tuple[str, Mat]]:
        return [("g0", self.g0), ("g1", self.g1), ("ginf", self.ginf)]


def _companion(level: int, trace: CyclotomicNumber, det: CyclotomicNumber) -> Mat:
    zero = CyclotomicNumber.zero(level)
    one = CyclotomicNumber.one(level)
    return ((zero, -det), (one, trace))


def _exponent_mod_level(value: Fraction, level: int) -> int:
    scaled = value * level
    if scaled.denominator != 1:
        raise ValueError(f"parameter {value} has denominator not dividing {level}")
    return scaled.numerator % level


def levelt_triple(p: HypergeometricParams, n: int) -> MonodromyTriple:
    """Companion-matrix realization of the rigid rank-2 local system.

    ginf is the companion matrix with eigenvalues e(a), e(b); the companion
    matrix B with eigenvalues e(c), 1 yields g0 = B^-1 and g1 = B*ginf^-1,
    so the product relation holds by construction.  Parameters whose local
    eigenvalue multisets at 0 and oo intersect are rejected: the rigid
    construction only covers the irreducible case.
    """
    level = n
    ka = _exponent_mod_level(p.a, level)
    kb = _exponent_mod_level(p.b, level)
    kc = _exponent_mod_level(p.c, level)
    if {ka, kb} & {kc, 0}:
        raise ReducibleParametersError(
            f"eigenvalue sharing between local multisets: alpha exps {{{ka},{kb}}}, "
            f"beta exps {{{kc},0}} (level {level})"
        )
    alpha1, alpha2 = zeta(level, ka), zeta(level, kb)
    beta1 = zeta(level, kc)
    one = CyclotomicNumber.one(level)
    a_mat = _companion(level, alpha1 + alpha2, alpha1 * alpha2)
    b_mat = _companion(level, beta1 + one, beta1)
    g0 = mat_inverse(b_mat)
    g1 = mat_mul(b_mat, mat_inverse(a_mat))
    return MonodromyTriple(level=level, g0=g0, g1=g1, ginf=a_mat, params=p)


def triple_from_weights(w: WeightTuple, j: int) -> MonodromyTriple:
    return levelt_triple(params_from_weights(w, j), w.n)


# ---------------------------------------------------------------------------
# exact finite-order testing


def _in_field_unit_root(level: int, trace: CyclotomicNumber, det: CyclotomicNumber) -> bool:
    """Does x^2 - trace*x + det have a root of unity root inside Q(zeta_level)?

    Roots of unity in the field are exactly +-zeta^k, so 2*level sparse
    evaluations settle it.
    """
    for k in range(level):
        zsq = zeta(level, 2 * k)
        shifted = trace.mul_zeta_power(k)
        if (zsq - shifted + det).is_zero():  # lambda = +zeta^k
            return True
        if (zsq + shifted + det).is_zero():  # lambda = -zeta^k
            return True
    return False


def _x_power_mod_quadratic(
    exponent: int, trace: CyclotomicNumber, det: CyclotomicNumber
) -> tuple[CyclotomicNumber, CyclotomicNumber]:
    """x^exponent mod (x^2 - trace*x + det), as (constant, linear) coefficients."""
    level = trace.level
    r0, r1 = CyclotomicNumber.one(level), CyclotomicNumber.zero(level)
    for bit in bin(exponent)[2:]:
        sq = r1 * r1
        r0, r1 = r0 * r0 - det * sq, (2 * r0) * r1 + trace * sq
        if bit == "1":
            r0, r1 = -det * r1, r0 + trace * r1
    return r0, r1


def has_finite_order(m: Mat, level: int) -> bool:
    """Exact finite-order test for a 2x2 matrix over Q(zeta_level).

    A finite-order element has eigenvalues that are roots of unity of degree
    at most 2 over the field, so its order divides B = finite_order_bound;
    for a non-scalar matrix, M^B = I reduces to x^B = 1 modulo the
    characteristic polynomial.  Cheap complete shortcuts run first: scalars,
    vanishing discriminant (non-semisimple, hence infinite), an in-field
    root-of-unity eigenvalue scan, and a rigorously confirmed conjugate
    trace-norm bound (some |trace|^2 > 4 forbids unit-circle eigenvalues).
    """
    scalar = _scalar_of(m)
    unit_order = lcm(2, level)
    if scalar is not None:
        return (scalar ** unit_order) == CyclotomicNumber.one(level)
    t = mat_trace(m)
    d = mat_det(m)
    disc = t * t - 4 * d
    if disc.is_zero():
        return False
    if _in_field_unit_root(level, t, d):
        return True
    # float router for the exact trace-norm rejection
    tt = None
    for h in units(level) if level > 2 else [1]:
        approx = t.complex_value(h)
        if approx.real * approx.real + approx.imag * approx.imag > 4.0 + 1e-9:
            if tt is None:
                tt = t * t.conjugate()
            if real_sign(tt.galois(h) - 4) > 0:
                return False
    r0, r1 = _x_power_mod_quadratic(finite_order_bound(level), t, d)
    return r1.is_zero() and r0 == CyclotomicNumber.one(level)


# ---------------------------------------------------------------------------
# oracle searches


def infinite_order_witness(t: MonodromyTriple, max_word_len: int = DEFAULT_MAX_WORD_LEN) -> str | None:
    """Breadth-first search for a word of infinite order in the generators.

    Words run over g0, g1, ginf and their inverses, in deterministic order;
    the first element failing the exact finite-order test is returned as a
    '*'-joined word.  None means no witness within the length bound (a valid
    empty result: finite groups have none at any bound).
    """
    if max_word_len < 1:
        raise ValueError("max_word_len must be >= 1")
    level = t.level
    alphabet: list[tuple[str, Mat]] = []
    for name, g in t.generators():
        alphabet.append((name, g))
    for name, g in t.generators():
        alphabet.append((name + "^-1", mat_inverse(g)))
    identity = mat_identity(level)
    seen = {identity}
    frontier: list[tuple[Mat, list[str]]] = [(identity, [])]
    for _ in range(max_word_len):
        next_frontier: list[tuple[Mat, list[str]]] = []
        for mat, word in frontier:
            for name, g in alphabet:
                prod = mat_mul(mat, g)
                if prod in seen:
                    continue
                seen.add(prod)
                new_word = word + [name]
                if not has_finite_order(prod, level):
                    return "*".join(new_word)
                next_frontier.append((prod, new_word))
        frontier = next_frontier
    return None


def group_closure(
    t: MonodromyTriple,
    cap: int = DEFAULT_CLOSURE_CAP,
    max_word_len: int = DEFAULT_MAX_WORD_LEN,
) -> FinitenessVerdict:
    """Brute-force the generated matrix group under exact equality.

    The infinite-order word search runs first (it is cheap and its success
    certifies INFINITE; a closure that would have terminated under the cap
    cannot coexist with a witness).  Then breadth-first closure: FINITE with
    the exact order if it terminates within the cap, INCONCLUSIVE otherwise.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    witness = infinite_order_witness(t, max_word_len)
    if witness is not None:
        return FinitenessVerdict(
            kind="INFINITE", witness=(("kind", "infinite_order_word"), ("word", witness))
        )
    gens = [t.g0, t.g1, t.ginf]
    elements = {mat_identity(t.level)}
    boundary = [mat_identity(t.level)]
    while boundary:
        new_boundary = []
        for mat in boundary:
            for g in gens:
                prod = mat_mul(mat, g)
                if prod not in elements:
                    if len(elements) >= cap:
                        return FinitenessVerdict(kind="INCONCLUSIVE", cap=cap)
                    elements.add(prod)
                    new_boundary.append(prod)
        boundary = new_boundary
    return FinitenessVerdict(kind="FINITE", order=len(elements))


# ---------------------------------------------------------------------------
# common eigenvectors (irreducibility oracle)

Vec = tuple[CyclotomicNumber, CyclotomicNumber]


def _eigenvector_candidates(m: Mat, level: int) -> list[Vec] | None:
    """Eigenvectors of m for its in-field root-of-unity eigenvalues.

    Returns None when m is scalar (every vector is an eigenvector).
    Generator eigenvalues are prescribed roots of unity, so the +-zeta^k
    scan is exhaustive for the triples built here.
    """
    if _scalar_of(m) is not None:
        return None
    t = mat_trace(m)
    d = mat_det(m)
    zero = CyclotomicNumber.zero(level)
    candidates: list[Vec] = []
    seen_eigs = set()
    for k in range(level):
        for sign in (1, -1):
            lam = zeta(level, k) if sign == 1 else -zeta(level, k)
            if lam in seen_eigs:
                continue
            value = lam * lam - t * lam + d
            if not value.is_zero():
                continue
            seen_eigs.add(lam)
            p = m[0][0] - lam
            q = m[0][1]
            if not (p.is_zero() and q.is_zero()):
                candidates.append((-q, p))
            else:
                candidates.append((m[1][1] - lam, -m[1][0]))
    return candidates


def _is_eigenvector(m: Mat, v: Vec) -> bool:
    w = mat_vec(m, v)
    return (w[0] * v[1] - w[1] * v[0]).is_zero()


def has_common_eigenvector(t: MonodromyTriple) -> bool:
    """Exact reducibility oracle: some nonzero vector fixed (projectively) by all three."""
    candidates = _eigenvector_candidates(t.g0, t.level)
    if candidates is None:
        candidates = _eigenvector_candidates(t.g1, t.level)
    if candidates is None:
        return True  # g0, g1 scalar forces ginf scalar: everything is invariant
    for v in candidates:
        if v[0].is_zero() and v[1].is_zero():
            continue
        if all(_is_eigenvector(g, v) for _, g in t.generators()):
            return True
    return False


# ---------------------------------------------------------------------------
# invariant Hermitian form


def _kernel_of_system(rows: list[list[CyclotomicNumber]], ncols: int, level: int):
    """Kernel basis of a small linear system over the cyclotomic field."""
    zero = CyclotomicNumber.zero(level)
    one = CyclotomicNumber.one(level)
    matrix = [row[:] for row in rows if any(not c.is_zero() for c in row)]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(r, len(matrix)):
            if not matrix[i][col].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            continue
        matrix[r], matrix[pivot_row] = matrix[pivot_row], matrix[r]
        inv = matrix[r][col].inverse()
        matrix[r] = [c * inv for c in matrix[r]]
        for i in range(len(matrix)):
            if i != r and not matrix[i][col].is_zero():
                factor = matrix[i][col]
                matrix[i] = [a - factor * b for a, b in zip(matrix[i], matrix[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [zero] * ncols
        vec[fc] = one
        for row_idx, pc in enumerate(pivots):
            vec[pc] = -matrix[row_idx][fc]
        basis.append(vec)
    return basis


def _fractional(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def hodge_weight_sum(p: HypergeometricParams) -> int:
    """Sum of the four normalized branch residues encoded by the parameters.

    mu0 = {-b}, mu1 = {c-a}, mu2 = {b-c}, mu3 = {a}; the sum is 1, 2 or 3
    for any character of a valid weight tuple.
    """
    total = (
        _fractional(-p.b) + _fractional(p.c - p.a) + _fractional(p.b - p.c) + _fractional(p.a)
    )
    assert total.denominator == 1, p
    return int(total)


def invariant_hermitian_form(t: MonodromyTriple) -> tuple[Mat, tuple[int, int]]:
    """Solve gbar^T M g = M for all generators; return (form, signature).

    The solution space must be 1-dimensional over the field (Schur);
    otherwise ReducibleNoUniqueFormError.  The returned form is Hermitian and
    oriented by the Hodge convention: among the two real rays of solutions,
    the one whose positivity index equals (weight sum - 1) when the form is
    definite.  The definite/indefinite alternative itself is solved, not
    assumed: an indefinite solution is returned as (1,1) regardless of the
    weight data, and the cross-check against the eigenspace signature is a
    real test.
    """
    level = t.level
    zero = CyclotomicNumber.zero(level)
    # unknowns (m00, m01, m10, m11); invariance under g0 and g1 implies ginf
    rows: list[list[CyclotomicNumber]] = []
    for g in (t.g0, t.g1):
        gc = mat_conj_transpose(g)
        for r in range(2):
            for c in range(2):
                row = []
                for k in range(2):
                    for l in range(2):
                        coeff = gc[r][k] * g[l][c]
                        if k == r and l == c:
                            coeff = coeff - CyclotomicNumber.one(level)
                        row.append(coeff)
                rows.append(row)
    basis = _kernel_of_system(rows, 4, level)
    if len(basis) != 1:
        raise ReducibleNoUniqueFormError(
            f"invariant form space has dimension {len(basis)}, expected 1"
        )
    m0: Mat = ((basis[0][0], basis[0][1]), (basis[0][2], basis[0][3]))
    m0_ct = mat_conj_transpose(m0)
    # m0_ct is again a solution, so m0_ct = alpha * m0 with |alpha| = 1
    alpha = None
    for r in range(2):
        for c in range(2):
            if not m0[r][c].is_zero():
                alpha = m0_ct[r][c] / m0[r][c]
                break
        if alpha is not None:
            break
    assert alpha is not None
    for r in range(2):
        for c in range(2):
            assert m0_ct[r][c] == alpha * m0[r][c], "conjugate-transpose left the solution line"
    herm = None
    for k in range(level):
        lam = zeta(level, k) + zeta(level, -k) * alpha
        if not lam.is_zero():
            herm = ((lam * m0[0][0], lam * m0[0][1]), (lam * m0[1][0], lam * m0[1][1]))
            break
    assert herm is not None, "no Hermitian representative found"
    assert mat_conj_transpose(herm) == herm
    signature = _hermitian_signature(herm)
    if signature in ((2, 0), (0, 2)):
        wanted_p = hodge_weight_sum(t.params) - 1
        if wanted_p in (0, 2) and signature[0] != wanted_p:
            herm = ((-herm[0][0], -herm[0][1]), (-herm[1][0], -herm[1][1]))
            signature = (signature[1], signature[0])
    return herm, signature


def _hermitian_signature(m: Mat) -> tuple[int, int]:
    det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
    s_det = real_sign(det)
    if s_det > 0:
        return (2, 0) if real_sign(m[0][0]) > 0 else (0, 2)
    if s_det < 0:
        return (1, 1)
    s_tr = real_sign(m[0][0] + m[1][1])
    if s_tr > 0:
        return (1, 0)
    if s_tr < 0:
        return (0, 1)
    return (0, 0)
