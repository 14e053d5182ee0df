"""Exhaustive criterion-vs-oracle equivalence sweeps over small moduli.

For every valid weight tuple with n up to a safe bound and every character,
three independent cross-checks run:

* irreducibility: the four non-integrality conditions against the
  common-eigenvector test on the explicit triple;
* finiteness: Galois-definiteness against brute-force group closure plus
  infinite-order word search;
* signature: the eigenspace index against the exactly solved invariant form.

Any disagreement is an internal inconsistency (the severest failure class);
INCONCLUSIVE closures are tolerated and reported separately.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

from .eigenspace import WeightTuple, signature
from .monodromy import (
    DEFAULT_CLOSURE_CAP,
    DEFAULT_MAX_WORD_LEN,
    ReducibleParametersError,
    finiteness_by_signature,
    group_closure,
    has_common_eigenvector,
    invariant_hermitian_form,
    is_irreducible,
    triple_from_weights,
)

SAFE_N_MAX = 12


def iter_weight_tuples(n: int):
    """All valid weight tuples for this n, lexicographically."""
    for m in itertools.product(range(1, n - 2), repeat=4):
        if sum(m) != n:
            continue
        if gcd(gcd(gcd(gcd(m[0], m[1]), m[2]), m[3]), n) != 1:
            continue
        yield WeightTuple(n=n, m=m)


@dataclass(frozen=True)
class SweepSummary:
    n_min: int
    n_max: int
    cap: int
    max_word_len: int
    weight_tuples: int
    characters: int
    irreducibility_checked: int
    irreducibility_mismatches: tuple[tuple[int, tuple[int, ...], int], ...]
    finiteness_checked: int
    agreements: int
    disagreements: tuple[tuple[int, tuple[int, ...], int, str, str], ...]
    inconclusive: tuple[tuple[int, tuple[int, ...], int], ...]
    signature_checked: int
    signature_mismatches: tuple[tuple[int, tuple[int, ...], int], ...]

    @property
    def clean(self) -> bool:
        return not (
            self.irreducibility_mismatches or self.disagreements or self.signature_mismatches
        )


def sweep_instance(
    w: WeightTuple,
    j: int,
    cap: int = DEFAULT_CLOSURE_CAP,
    max_word_len: int = DEFAULT_MAX_WORD_LEN,
):
    """(criterion kind, oracle kind) for one irreducible instance."""
    criterion = finiteness_by_signature(w, j)
    oracle = group_closure(triple_from_weights(w, j), cap, max_word_len)
    return criterion, oracle


def run_sweep(
    n_max: int,
    cap: int = DEFAULT_CLOSURE_CAP,
    max_word_len: int = DEFAULT_MAX_WORD_LEN,
    n_min: int = 4,
    check_signatures: bool = True,
) -> SweepSummary:
    if n_max > SAFE_N_MAX:
        raise ValueError(f"sweep bound {n_max} exceeds the safe bound {SAFE_N_MAX}")
    if n_min < 4:
        raise ValueError("weight tuples need n >= 4")
    tuples = 0
    characters = 0
    irr_checked = 0
    irr_mismatches = []
    fin_checked = 0
    agreements = 0
    disagreements = []
    inconclusive = []
    sig_checked = 0
    sig_mismatches = []
    for n in range(n_min, n_max + 1):
        for w in iter_weight_tuples(n):
            tuples += 1
            for j in range(1, n):
                characters += 1
                irr_criterion = is_irreducible(w, j)
                triple = None
                try:
                    triple = triple_from_weights(w, j)
                    irr_oracle = not has_common_eigenvector(triple)
                except ReducibleParametersError:
                    irr_oracle = False
                irr_checked += 1
                if irr_criterion != irr_oracle:
                    irr_mismatches.append((n, w.m, j))
                    continue
                if not irr_criterion:
                    continue
                criterion = finiteness_by_signature(w, j)
                oracle = group_closure(triple, cap, max_word_len)
                fin_checked += 1
                if oracle.is_inconclusive:
                    inconclusive.append((n, w.m, j))
                elif criterion.kind == oracle.kind:
                    agreements += 1
                else:
                    disagreements.append((n, w.m, j, criterion.kind, oracle.kind))
                if check_signatures:
                    _, sig_oracle = invariant_hermitian_form(triple)
                    sig_checked += 1
                    if sig_oracle != signature(w, j):
                        sig_mismatches.append((n, w.m, j))
    return SweepSummary(
        n_min=n_min,
        n_max=n_max,
        cap=cap,
        max_word_len=max_word_len,
        weight_tuples=tuples,
        characters=characters,
        irreducibility_checked=irr_checked,
        irreducibility_mismatches=tuple(irr_mismatches),
        finiteness_checked=fin_checked,
        agreements=agreements,
        disagreements=tuple(disagreements),
        inconclusive=tuple(inconclusive),
        signature_checked=sig_checked,
        signature_mismatches=tuple(sig_mismatches),
    )


def retry_inconclusive(
    summary: SweepSummary, cap: int, max_word_len: int
) -> tuple[tuple[int, tuple[int, ...], int], ...]:
    """Re-run only the INCONCLUSIVE instances at stronger limits.

    Sound shortcut: FINITE/INFINITE verdicts are stable under raising the
    limits, so only the inconclusive set can change.  Returns the instances
    still unresolved.
    """
    still = []
    for n, m, j in summary.inconclusive:
        w = WeightTuple(n=n, m=m)
        criterion, oracle = sweep_instance(w, j, cap, max_word_len)
        if oracle.is_inconclusive:
            still.append((n, m, j))
        elif criterion.kind != oracle.kind:
            raise AssertionError(
                f"criterion/oracle disagreement at n={n}, m={m}, j={j}: "
                f"{criterion.kind} vs {oracle.kind}"
            )
    return tuple(still)
