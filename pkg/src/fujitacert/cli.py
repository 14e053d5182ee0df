"""Command-line front end: analyze, certify, enumerate, sweep, shimura, oracle.

All output is machine-readable JSON on stdout (one record per line for the
streaming commands); diagnostics go to stderr.  Exit codes: 0 success or
certified, 1 invalid input, 2 internal inconsistency (criterion vs oracle
disagreement - never expected), 3 not certified.  No environment-variable
configuration: everything is a flag, so certificates are reproducible.
"""

from __future__ import annotations

import argparse
import sys
from math import gcd

from . import records
from .certify import (
    Certificate,
    EnumerationMode,
    certify,
    enumerate_families,
    shimura_count,
)
from .eigenspace import (
    DegenerateCharacterError,
    ResidueWeights,
    WeightTuple,
    eigenspace_table,
    mu,
    signature as eigen_signature,
)
from .monodromy import (
    DEFAULT_CLOSURE_CAP,
    DEFAULT_MAX_WORD_LEN,
    ReducibleParametersError,
    finiteness_by_signature,
    group_closure,
    invariant_hermitian_form,
    is_irreducible,
    mat_det,
    mat_trace,
    triple_from_weights,
)
from .records import check, dumps_record, output_record
from .surfaces import FamilyData, standard_family
from .sweep import SAFE_N_MAX, run_sweep

EXIT_OK = 0
EXIT_INVALID_INPUT = 1
EXIT_INCONSISTENT = 2
EXIT_NOT_CERTIFIED = 3


class CliInputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliInputError(message)


def _parse_int_list(text: str, count: int, what: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise CliInputError(f"{what} must be comma-separated integers, got {text!r}")
    if len(values) != count:
        raise CliInputError(f"{what} needs exactly {count} entries, got {len(values)}")
    return values


def build_parser() -> _Parser:
    parser = _Parser(prog="fujitacert", description=__doc__)
    parser.add_argument("--schema", action="store_true", help="print the JSON schema and exit")
    sub = parser.add_subparsers(dest="cmd", parser_class=_Parser)

    p = sub.add_parser("analyze", help="eigenspace table for a weight tuple")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-m", required=True, help="four branch exponents, e.g. 1,1,1,2")
    p.add_argument("-j", type=int, default=None, help="single character instead of the table")

    p = sub.add_parser("certify", help="counterexample certificate for a family")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-m", required=True)
    p.add_argument("--nw", required=True, help="three base weights, e.g. 1,1,3")
    p.add_argument("--oracle", action="store_true", help="re-decide the witness by matrix closure")
    p.add_argument("--cap", type=int, default=DEFAULT_CLOSURE_CAP)
    p.add_argument("--max-word", type=int, default=DEFAULT_MAX_WORD_LEN)

    p = sub.add_parser("enumerate", help="certify families over a range of n")
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--standard-only", action="store_true")
    group.add_argument("--all", dest="all_families", action="store_true")
    p.add_argument("--normalize", action="store_true")

    p = sub.add_parser("sweep", help="criterion vs oracle equivalence sweep")
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--cap", type=int, default=DEFAULT_CLOSURE_CAP)
    p.add_argument("--max-word", type=int, default=DEFAULT_MAX_WORD_LEN)

    p = sub.add_parser("shimura", help="ample-pair counts and Shimura-curve candidates")
    p.add_argument("--n-max", type=int, required=True)

    p = sub.add_parser("oracle", help="inspect the monodromy triple of one character")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-m", required=True)
    p.add_argument("-j", type=int, required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CLOSURE_CAP)
    p.add_argument("--max-word", type=int, default=DEFAULT_MAX_WORD_LEN)
    return parser


# ---------------------------------------------------------------------------
# commands


def _weight_tuple(n: int, m_text: str) -> WeightTuple:
    m = _parse_int_list(m_text, 4, "-m")
    try:
        return WeightTuple(n=n, m=m)
    except ValueError as exc:
        raise CliInputError(str(exc))


def _analysis_weights(n: int, m_text: str) -> WeightTuple | ResidueWeights:
    """Strict tuple when sum(m) = n, relaxed residue system when sum = 0 mod n."""
    m = _parse_int_list(m_text, 4, "-m")
    try:
        if sum(m) == n:
            return WeightTuple(n=n, m=m)
        return ResidueWeights(n=n, m=m)
    except ValueError as exc:
        raise CliInputError(str(exc))


def cmd_analyze(args, out) -> int:
    w = _analysis_weights(args.n, args.m)
    n = w.n
    inputs = {"n": n, "m": list(w.m), "j": args.j}
    if args.j is not None:
        j = args.j % n
        if j == 0:
            raise CliInputError("character index j must be nonzero mod n")
        mu_values = []
        for i in range(4):
            try:
                mu_values.append(mu(w, i, j))
            except DegenerateCharacterError:
                mu_values.append(None)
        table = eigenspace_table(w)
        rows = [records.eigenspace_report_dict(table[j - 1], mu_values)]
    else:
        rows = [records.eigenspace_report_dict(rep) for rep in eigenspace_table(w)]
    live = [r for r in rows if not r["degenerate"]]
    checks = [
        check(
            "sigma_in_range",
            all(r["sigma"] in (n, 2 * n, 3 * n) for r in live),
            "sigma values lie in {n, 2n, 3n}",
        )
    ]
    if args.j is None:
        complementary = all(
            rows[j - 1]["degenerate"]
            or rows[n - j - 1]["degenerate"]
            or rows[j - 1]["sigma"] + rows[n - j - 1]["sigma"] == 4 * n
            for j in range(1, n)
        )
        checks.append(check("complementary_characters", complementary, "sigma_j + sigma_{n-j} = 4n"))
        if isinstance(w, WeightTuple) and w.all_units():
            total = sum(r["dim_h10"] for r in rows)
            checks.append(check("h10_total", total == n - 1, f"sum of dim_h10 = {total}, want n-1"))
    result = {"n": n, "m": list(w.m), "table": rows}
    out.write(dumps_record(output_record("analyze", inputs, result, checks)))
    return EXIT_OK


def _certificate_checks(cert: Certificate) -> list[dict]:
    checks = [
        check("admissible", cert.admissible, cert.admissibility_reason or ""),
        check("smooth", bool(cert.smooth), ""),
        check(
            "no_degenerate_characters",
            cert.splitting is not None and not cert.splitting.has_degenerate,
            "",
        ),
        check("irreducible_all", bool(cert.irreducible_all), ""),
        check(
            "flat_rank_at_least_2",
            cert.splitting is not None and cert.splitting.rank_flat >= 2,
            "",
        ),
        check(
            "infinite_witness_valid",
            cert.infinite_witness is not None
            and cert.infinite_witness.sigma == 2 * cert.family.n,
            "witness character has sigma = 2n",
        ),
    ]
    if cert.oracle_verdicts is not None:
        checks.append(
            check(
                "oracle_agrees",
                cert.oracle_agreement is True,
                f"criterion {cert.oracle_verdicts[0]}, closure {cert.oracle_verdicts[1]}",
            )
        )
    return checks


def cmd_certify(args, out) -> int:
    w = _weight_tuple(args.n, args.m)
    nw = _parse_int_list(args.nw, 3, "--nw")
    try:
        fam = FamilyData(w=w, base_weights=nw)
    except ValueError as exc:
        raise CliInputError(str(exc))
    cert = certify(fam, with_oracle=args.oracle, cap=args.cap, max_word_len=args.max_word)
    inputs = {
        "n": fam.n,
        "m": list(w.m),
        "nw": list(nw),
        "oracle": args.oracle,
        "cap": args.cap,
        "max_word": args.max_word,
    }
    record = output_record("certify", inputs, records.certificate_dict(cert), _certificate_checks(cert))
    out.write(dumps_record(record))
    if args.oracle and cert.oracle_agreement is False:
        return EXIT_INCONSISTENT
    return EXIT_OK if cert.is_counterexample else EXIT_NOT_CERTIFIED


def cmd_enumerate(args, out) -> int:
    mode = EnumerationMode.ALL if args.all_families else EnumerationMode.STANDARD_ONLY
    if not 5 <= args.n_min <= args.n_max:
        raise CliInputError("need 5 <= --n-min <= --n-max")
    certs = enumerate_families(args.n_min, args.n_max, mode, normalize=args.normalize)
    for cert in certs:
        inputs = {
            "n_min": args.n_min,
            "n_max": args.n_max,
            "mode": mode.value,
            "normalize": args.normalize,
        }
        record = output_record(
            "enumerate",
            inputs,
            records.certificate_dict(cert),
            [check("certified", cert.is_counterexample, cert.not_certified_reason or "")],
        )
        out.write(dumps_record(record))
    return EXIT_OK


def cmd_sweep(args, out) -> int:
    if args.n_max > SAFE_N_MAX:
        raise CliInputError(f"--n-max must be <= {SAFE_N_MAX} (documented safe bound)")
    if args.n_max < 4:
        raise CliInputError("--n-max must be >= 4")
    summary = run_sweep(args.n_max, cap=args.cap, max_word_len=args.max_word)
    inputs = {"n_max": args.n_max, "cap": args.cap, "max_word": args.max_word}
    checks = [
        check("zero_disagreements", not summary.disagreements, ""),
        check("zero_irreducibility_mismatches", not summary.irreducibility_mismatches, ""),
        check("zero_signature_mismatches", not summary.signature_mismatches, ""),
    ]
    out.write(dumps_record(output_record("sweep", inputs, records.sweep_dict(summary), checks)))
    return EXIT_OK if summary.clean else EXIT_INCONSISTENT


def cmd_shimura(args, out) -> int:
    if args.n_max < 5:
        raise CliInputError("--n-max must be >= 5")
    inputs = {"n_max": args.n_max}
    for n in range(5, args.n_max + 1):
        if gcd(n, 6) != 1:
            continue
        fam = standard_family(n)
        count, candidate = shimura_count(fam.w)
        result = {"n": n, "m": list(fam.w.m), "count": count, "candidate": candidate}
        out.write(dumps_record(output_record("shimura", inputs, result, [])))
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    w = _weight_tuple(args.n, args.m)
    j = args.j % w.n
    if j == 0:
        raise CliInputError("character index j must be nonzero mod n")
    if not is_irreducible(w, j):
        raise CliInputError(f"character j={j} is reducible for m={w.m} mod {w.n}")
    try:
        triple = triple_from_weights(w, j)
    except ReducibleParametersError as exc:
        raise CliInputError(str(exc))
    form, sig = invariant_hermitian_form(triple)
    closure = group_closure(triple, args.cap, args.max_word)
    criterion = finiteness_by_signature(w, j)
    inputs = {"n": w.n, "m": list(w.m), "j": j, "cap": args.cap, "max_word": args.max_word}
    result = {
        "level": triple.level,
        "traces": {
            name: records.cyclotomic_dict(mat_trace(g)) for name, g in triple.generators()
        },
        "determinants": {
            name: records.cyclotomic_dict(mat_det(g)) for name, g in triple.generators()
        },
        "invariant_form": records.matrix_dict(form),
        "signature": list(sig),
        "closure": records.verdict_dict(closure),
        "criterion": records.verdict_dict(criterion),
    }
    agree = None if closure.is_inconclusive else closure.kind == criterion.kind
    checks = [
        check("criterion_oracle_agree", agree is not False, f"{criterion.kind} vs {closure.kind}"),
        check(
            "signature_matches_eigenspace",
            sig == eigen_signature(w, j),
            f"form {sig}, eigenspace {eigen_signature(w, j)}",
        ),
    ]
    out.write(dumps_record(output_record("oracle", inputs, result, checks)))
    if agree is False or sig != eigen_signature(w, j):
        return EXIT_INCONSISTENT
    return EXIT_OK


_COMMANDS = {
    "analyze": cmd_analyze,
    "certify": cmd_certify,
    "enumerate": cmd_enumerate,
    "sweep": cmd_sweep,
    "shimura": cmd_shimura,
    "oracle": cmd_oracle,
}


def main(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.schema:
            out.write(dumps_record(records.JSON_SCHEMA))
            return EXIT_OK
        if args.cmd is None:
            raise CliInputError("a command is required (analyze, certify, enumerate, sweep, shimura, oracle)")
        return _COMMANDS[args.cmd](args, out)
    except CliInputError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INVALID_INPUT
    except (ValueError, ZeroDivisionError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INVALID_INPUT


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
