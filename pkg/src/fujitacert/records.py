"""Machine-readable output records: deterministic JSON with exact rationals.

Every command emits OutputRecord objects: schema_version, command, an echo
of the parsed inputs, a command-specific result payload, and a list of
named checks.  Exact rationals are serialized as "p/q" strings in lowest
terms with positive denominator, never floats; the slope additionally gets
a 6-place decimal string for readability.  Field order is fixed so output
is byte-identical across runs.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .certify import Certificate, SplittingReport
from .cyclotomic import CyclotomicNumber
from .eigenspace import EigenspaceReport
from .monodromy import FinitenessVerdict, Mat
from .surfaces import SurfaceInvariants
from .sweep import SweepSummary

SCHEMA_VERSION = "1.0"


def rational_str(value) -> str:
    q = Fraction(value)
    return f"{q.numerator}/{q.denominator}"


def decimal_str(value, places: int = 6) -> str:
    q = Fraction(value)
    scaled = q * 10**places
    whole = scaled.numerator // scaled.denominator  # floor; all our values are positive
    digits = str(whole).rjust(places + 1, "0")
    return f"{digits[:-places]}.{digits[-places:]}"


def check(name: str, passed: bool, details: str = "") -> dict:
    return {"name": name, "passed": bool(passed), "details": details}


def output_record(command: str, inputs: dict, result, checks: list[dict]) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "result": result,
        "checks": checks,
    }


def dumps_record(record: dict) -> str:
    return json.dumps(record, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------------
# converters


def eigenspace_report_dict(report: EigenspaceReport, mu_values=None) -> dict:
    out = {
        "j": report.j,
        "degenerate": report.degenerate,
        "sigma": report.sigma if not report.degenerate else None,
        "dim_h10": report.dim_h10 if not report.degenerate else None,
        "dim_h01": report.dim_h01 if not report.degenerate else None,
        "signature": list(report.signature) if not report.degenerate else None,
        "split_class": report.split_class.value if report.split_class else None,
    }
    if mu_values is not None:
        out["mu"] = [rational_str(v) if v is not None else None for v in mu_values]
    return out


def invariants_dict(inv: SurfaceInvariants) -> dict:
    return {
        "g": inv.g,
        "b": inv.b,
        "e": inv.e,
        "K2": inv.K2,
        "chi": inv.chi,
        "slope": rational_str(inv.slope),
        "slope_decimal": decimal_str(inv.slope),
        "deg_V": inv.deg_V,
        "mu": inv.mu,
        "ball_quotient": inv.ball_quotient,
        "irregularity": inv.irregularity,
        "p_g": inv.p_g,
    }


def splitting_dict(split: SplittingReport) -> dict:
    return {
        "entries": [
            {
                "j": e.j,
                "dim_Vj": e.dim_Vj,
                "split_class": e.split_class.value if e.split_class else None,
                "degenerate": e.degenerate,
            }
            for e in split.entries
        ],
        "rank_V": split.rank_V,
        "rank_flat": split.rank_flat,
        "rank_ample_candidate": split.rank_ample_candidate,
        "deg_V": split.deg_V,
        "has_degenerate": split.has_degenerate,
    }


def verdict_dict(verdict: FinitenessVerdict) -> dict:
    return {
        "kind": verdict.kind,
        "order": verdict.order,
        "witness": dict(verdict.witness) if verdict.witness is not None else None,
        "cap": verdict.cap,
    }


def certificate_dict(cert: Certificate) -> dict:
    return {
        "family": {
            "n": cert.family.n,
            "m": list(cert.family.w.m),
            "base_weights": list(cert.family.base_weights),
        },
        "admissible": cert.admissible,
        "admissibility_reason": cert.admissibility_reason,
        "smooth": cert.smooth,
        "invariants": invariants_dict(cert.invariants) if cert.invariants else None,
        "splitting": splitting_dict(cert.splitting) if cert.splitting else None,
        "irreducible_all": cert.irreducible_all,
        "infinite_witness": (
            {
                "j_star": cert.infinite_witness.j_star,
                "unit": cert.infinite_witness.unit,
                "sigma": cert.infinite_witness.sigma,
            }
            if cert.infinite_witness
            else None
        ),
        "oracle": (
            {
                "criterion": cert.oracle_verdicts[0],
                "closure": cert.oracle_verdicts[1],
                "agreement": cert.oracle_agreement,
            }
            if cert.oracle_verdicts
            else None
        ),
        "verdict": cert.verdict,
        "not_certified_reason": cert.not_certified_reason,
        "prose": cert.prose,
    }


def cyclotomic_dict(x: CyclotomicNumber) -> dict:
    return {
        "level": x.level,
        "coefficients": [rational_str(c) for c in x.coefficients()],
    }


def matrix_dict(m: Mat) -> list[list[dict]]:
    return [[cyclotomic_dict(entry) for entry in row] for row in m]


def sweep_dict(summary: SweepSummary) -> dict:
    return {
        "n_min": summary.n_min,
        "n_max": summary.n_max,
        "cap": summary.cap,
        "max_word_len": summary.max_word_len,
        "weight_tuples": summary.weight_tuples,
        "characters": summary.characters,
        "irreducibility_checked": summary.irreducibility_checked,
        "irreducibility_mismatches": [list(x) for x in summary.irreducibility_mismatches],
        "finiteness_checked": summary.finiteness_checked,
        "agreements": summary.agreements,
        "disagreements": [list(x) for x in summary.disagreements],
        "inconclusive": [list(x) for x in summary.inconclusive],
        "signature_checked": summary.signature_checked,
        "signature_mismatches": [list(x) for x in summary.signature_mismatches],
    }


# ---------------------------------------------------------------------------
# schema document

JSON_SCHEMA = {
    "schema_version": SCHEMA_VERSION,
    "record": {
        "schema_version": "string; this document's version",
        "command": "string; one of analyze, certify, enumerate, sweep, shimura, oracle",
        "inputs": "object; echo of the parsed command inputs",
        "result": "object; command-specific payload",
        "checks": [{"name": "string", "passed": "boolean", "details": "string"}],
    },
    "conventions": {
        "rationals": "exact strings 'p/q', lowest terms, positive q; never floats",
        "slope": "given both as 'p/q' and as a 6-place decimal string",
        "streaming": "enumerate and shimura emit one record per line",
        "determinism": "byte-identical output for identical inputs",
    },
    "exit_codes": {
        "0": "success / certified",
        "1": "invalid input",
        "2": "internal inconsistency (criterion vs oracle disagreement)",
        "3": "not certified",
    },
    "results": {
        "analyze": {
            "n": "int",
            "m": "[int x4]",
            "table": [
                {
                    "j": "int",
                    "degenerate": "bool",
                    "sigma": "int|null",
                    "dim_h10": "int|null",
                    "dim_h01": "int|null",
                    "signature": "[p, q]|null",
                    "split_class": "ZERO|AMPLE_CANDIDATE|FLAT|null",
                    "mu": "['p/q' x4]|null (single-character reports)",
                }
            ],
        },
        "certify": {
            "family": {"n": "int", "m": "[int x4]", "base_weights": "[int x3]"},
            "admissible": "bool",
            "admissibility_reason": "string|null",
            "smooth": "bool|null",
            "invariants": "object|null (g, b, e, K2, chi, slope, deg_V, mu, ...)",
            "splitting": "object|null (entries, rank_V, rank_flat, rank_ample_candidate, deg_V)",
            "irreducible_all": "bool|null",
            "infinite_witness": "{j_star, unit, sigma}|null",
            "oracle": "{criterion, closure, agreement}|null",
            "verdict": "COUNTEREXAMPLE|NOT_CERTIFIED",
            "not_certified_reason": "string|null",
            "prose": "string; scope statement of what the certificate does and does not assert",
        },
        "sweep": {
            "weight_tuples": "int",
            "characters": "int",
            "finiteness_checked": "int",
            "agreements": "int",
            "disagreements": "[[n, m, j, criterion, oracle]]",
            "inconclusive": "[[n, m, j]]",
            "irreducibility_mismatches": "[[n, m, j]]",
            "signature_mismatches": "[[n, m, j]]",
        },
        "shimura": {"n": "int", "m": "[int x4]", "count": "int", "candidate": "bool"},
        "oracle": {
            "traces": "object of generator name -> cyclotomic number",
            "determinants": "object of generator name -> cyclotomic number",
            "invariant_form": "2x2 matrix of cyclotomic numbers",
            "signature": "[p, q]",
            "closure": "finiteness verdict",
            "criterion": "finiteness verdict",
        },
    },
}
