"""Command-line front end.

Every command reads a JSON problem document (see :mod:`hyperchoquet.problem`)
and writes a JSON result document to standard output, or an aligned text
rendering with ``--pretty``.  Numbers carry 12 significant digits and the
infinite value is written as ``"Infinite"``.

Exit codes: 0 ok, 1 golden failure, 2 schema error, 3 precondition error,
4 disagreement between two independent computations.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Any, Callable

import numpy as np

from .errors import CrossCheckError, FamilyTooLargeForEnumeration, HyperChoquetError, PreconditionError, SchemaError
from .goldens import run_examples
from .hypermeasure import (
    TABLE_MAX_P,
    additivity_characterization,
    dual_pair_check,
    n_mu,
    n_mu_is_additive,
    n_mu_is_minitive,
    n_mu_is_monotone,
    n_mu_is_submodular,
    n_mu_is_superadditive,
    n_mu_is_supermodular,
    n_mu_table,
    zero_set_check,
)
from .integral import duality_identity_check, integrate_all, integrate_riemann, survival, survival_function, survival_via_hyper
from .measures import (
    EPS,
    is_additive,
    is_maxitive,
    is_minitive,
    is_submodular,
    is_superadditive,
    is_supermodular,
    range_of,
)
from .moebius import integrate_moebius, moebius_transform, zeta_table
from .problem import INFINITE, Problem, load_problem, parse_hyper
from .setcore import hypermasks_by_size, is_closed_under_complements

EXIT_OK, EXIT_GOLDEN, EXIT_SCHEMA, EXIT_PRECONDITION, EXIT_CROSS_CHECK = 0, 1, 2, 3, 4
ENUMERATE_MAX_P = 16
FULL_MOEBIUS_LISTING_MAX_P = 10


# -- serialization ---------------------------------------------------------------------


def clean(obj: Any) -> Any:
    """JSON-ready copy with floats rounded to 12 significant digits."""
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if math.isinf(x):
            return INFINITE if x > 0 else "-" + INFINITE
        if math.isnan(x):
            return "NaN"
        return float(f"{x:.12g}") + 0.0
    if isinstance(obj, dict):
        return {str(k): clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [clean(v) for v in obj]
    return obj


def dumps(doc: dict) -> str:
    return json.dumps(clean(doc), indent=2)


def _cell(v: Any) -> str:
    return v if isinstance(v, str) else json.dumps(v)


def render(doc: Any, indent: int = 0) -> str:
    """Aligned plain-text rendering of a cleaned result document."""
    pad = " " * indent
    lines = []
    for key, value in doc.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(render(value, indent + 2))
        elif isinstance(value, list) and value and all(isinstance(r, dict) for r in value):
            cols = list(dict.fromkeys(k for r in value for k in r))
            cells = [[_cell(r.get(c, "")) for c in cols] for r in value]
            widths = [max(len(c), *(len(row[j]) for row in cells)) for j, c in enumerate(cols)]
            lines.append(f"{pad}{key}:")
            lines.append(pad + "  " + "  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip())
            for row in cells:
                lines.append(pad + "  " + "  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
        elif isinstance(value, list) and value and all(isinstance(r, str) for r in value):
            lines.append(f"{pad}{key}:")
            lines.extend(f"{pad}  {r}" for r in value)
        else:
            lines.append(f"{pad}{key}: {_cell(value)}")
    return "\n".join(lines)


def _num_set(values) -> str:
    return "{" + ", ".join(f"{float(v):.12g}" for v in values) + "}"


# -- commands -----------------------------------------------------------------------------


def _steps(step) -> list[dict]:
    return [{"from": a, "to": b, "value": v} for a, b, v in step.pieces()]


def _T_rows(problem: Problem, T) -> list[dict]:
    return [{"set": problem.subset(problem.family.member(i)), "T": T.values[i]} for i in problem.order]


def cmd_integrate(problem: Problem, args) -> tuple[dict, int]:
    T = problem.T()
    step = survival_function(T, problem.mu)
    report = integrate_all(T, problem.mu)
    doc = {
        "command": "integrate",
        "input": problem.doc,
        "T": _T_rows(problem, T),
        "survival": _steps(step),
        "integral": {"value": report.value, "routes": report.routes, "deviation": report.deviation},
    }
    if report.skipped:
        doc["integral"]["skipped"] = report.skipped
    if math.isinf(report.value):
        doc["integral"]["note"] = next(iter(report.skipped.values()))
    if report.deviation > args.tolerance:
        raise CrossCheckError(f"integral routes disagree by {report.deviation:.3g}", doc)
    return doc, EXIT_OK


def _survival_row(problem: Problem, T, alpha: float, tol: float) -> dict:
    direct = survival(T, problem.mu, alpha)
    via = survival_via_hyper(T, problem.mu, alpha)
    row = {"alpha": alpha, "survival": direct, "via_N_mu": via}
    if not (direct == via or abs(direct - via) <= tol):
        raise CrossCheckError(f"survival routes disagree at alpha={alpha}: {direct} vs {via}", row)
    return row


def cmd_survival(problem: Problem, args) -> tuple[dict, int]:
    T = problem.T()
    alphas = args.alpha or list(problem.alphas)
    doc: dict = {"command": "survival", "input": problem.doc, "T": _T_rows(problem, T)}
    if args.table or not alphas:
        step = survival_function(T, problem.mu)
        doc["survival"] = _steps(step)
        probes = sorted(set(step.alphas) | {(a + b) / 2 for a, b, _ in step.pieces()[:-1]})
        probes.append(step.alphas[-1] + 1.0)
        for a in probes:
            _survival_row(problem, T, a, args.tolerance)
        doc["routes_checked_at"] = probes
    if alphas:
        doc["values"] = [_survival_row(problem, T, a, args.tolerance) for a in alphas]
    return doc, EXIT_OK


def _written_hyper(problem: Problem, w: int) -> int:
    """Hypermask for a subset of positions in the written family order."""
    return sum(1 << problem.order[k] for k in range(problem.family.p) if w >> k & 1)


def cmd_transform(problem: Problem, args) -> tuple[dict, int]:
    fam = problem.family
    if args.hyper:
        hypers = []
        for text in args.hyper:
            try:
                subsets = json.loads(text)
            except json.JSONDecodeError as exc:
                raise SchemaError(f"--hyper {text!r}: not valid JSON ({exc})") from None
            hypers.append(parse_hyper(fam, subsets, f"--hyper {text}"))
    elif problem.hypers and not args.enumerate:
        hypers = list(problem.hypers)
    else:
        if fam.p > ENUMERATE_MAX_P:
            raise FamilyTooLargeForEnumeration(f"enumeration needs p <= {ENUMERATE_MAX_P}, the family has p={fam.p}")
        hypers = [_written_hyper(problem, w) for w in hypermasks_by_size(fam.p)]
    rows = [{"subfamily": problem.subfamily(h), "N_mu": n_mu(problem.mu, h)} for h in hypers]
    return {"command": "transform", "input": problem.doc, "N_mu": rows}, EXIT_OK


def cmd_moebius(problem: Problem, args) -> tuple[dict, int]:
    fam = problem.family
    table = moebius_transform(problem.mu)
    back = zeta_table(table)
    drift = float(np.max(np.abs(back - n_mu_table(problem.mu))))
    doc: dict = {"command": "moebius", "input": problem.doc}
    order = [_written_hyper(problem, w) for w in hypermasks_by_size(fam.p)]
    if fam.p > FULL_MOEBIUS_LISTING_MAX_P:
        order = [h for h in order if abs(table[h]) > args.tolerance]
        doc["listing"] = "nonzero masses only"
    doc["moebius"] = [{"subfamily": problem.subfamily(h), "mass": table[h]} for h in order]
    doc["round_trip"] = {"max_error": drift, "status": "ok" if drift <= args.tolerance else "failed"}
    if drift > args.tolerance:
        raise CrossCheckError(f"zeta of the Moebius table misses N_mu by {drift:.3g}", doc)
    if problem.raw_T is not None or (problem.fca is not None and problem.f is not None):
        T = problem.T()
        via_moebius = integrate_moebius(T, problem.mu)
        riemann = integrate_riemann(survival_function(T, problem.mu))
        doc["integral"] = {"moebius": via_moebius, "riemann": riemann}
        if not (via_moebius == riemann or abs(via_moebius - riemann) <= args.tolerance):
            raise CrossCheckError(f"Moebius integral {via_moebius} differs from {riemann}", doc)
    return doc, EXIT_OK


def _guard(fn: Callable[[], Any]) -> tuple[Any, str | None]:
    try:
        return fn(), None
    except PreconditionError as exc:
        return None, str(exc)


def _skipped(reason: str) -> dict:
    return {"status": "skipped", "reason": reason}


def cmd_audit(problem: Problem, args) -> tuple[dict, int]:
    mu, fam, tol = problem.mu, problem.family, args.tolerance
    findings: list[str] = []
    failures: list[str] = []

    def set_check(check) -> dict:
        out = {"holds": check.ok}
        if check.witness:
            out["witness"] = [problem.subset(m) for m in check.witness]
        return out

    def hyper_check(fn) -> dict:
        check, reason = _guard(fn)
        if reason:
            return _skipped(reason)
        out = {"holds": check.ok}
        if check.witness:
            out["witness"] = [problem.subfamily(h) for h in check.witness]
        return out

    mu_props = {
        "minitive": set_check(is_minitive(mu, tol)),
        "maxitive": set_check(is_maxitive(mu, tol)),
        "additive": set_check(is_additive(mu, tol)),
        "superadditive": set_check(is_superadditive(mu, tol)),
        "supermodular": set_check(is_supermodular(mu, tol)),
        "submodular": set_check(is_submodular(mu, tol)),
    }
    n_props = {
        "monotone": hyper_check(lambda: n_mu_is_monotone(mu)),
        "minitive": hyper_check(lambda: n_mu_is_minitive(mu, tol)),
        "additive": hyper_check(lambda: n_mu_is_additive(mu, tol)),
        "superadditive": hyper_check(lambda: n_mu_is_superadditive(mu, tol)),
        "supermodular": hyper_check(lambda: n_mu_is_supermodular(mu, tol)),
        "submodular": hyper_check(lambda: n_mu_is_submodular(mu, tol)),
    }
    for name in ("monotone", "minitive"):
        if n_props[name].get("holds") is False:
            failures.append(f"N_mu is not {name}")

    additive = n_props["additive"]
    if "holds" not in additive:
        findings.append(f"N_mu additive: skipped ({additive['reason']})")
    elif additive["holds"]:
        findings.append("N_mu additive: yes")
    else:
        a, b = (fam.label(h) for h in n_mu_is_additive(mu, tol).witness)
        findings.append(f"N_mu additive: no (witness {a} and {b})")

    zero, reason = _guard(lambda: zero_set_check(mu))
    zero_doc = _skipped(reason) if reason else {"holds": zero}
    if zero is False:
        failures.append("null-set description of N_mu fails")

    if fam.p <= TABLE_MAX_P:
        mu_range = list(range_of(mu))
        n_range = np.unique(n_mu_table(mu)).tolist()
        range_doc = {"mu": mu_range, "N_mu": n_range, "equal": mu_range == n_range}
        if mu_range == n_range:
            findings.append(f"rng(N_mu) = rng(mu) = {_num_set(mu_range)}")
        else:
            failures.append(f"rng(N_mu) = {_num_set(n_range)} differs from rng(mu) = {_num_set(mu_range)}")
    else:
        range_doc = _skipped(f"p={fam.p} exceeds {TABLE_MAX_P}")

    verdict, reason = _guard(lambda: additivity_characterization(mu, tol))
    if reason:
        additivity_doc = _skipped(reason)
    else:
        additivity_doc = {
            "mu_constant_on_nonempty": verdict.constant_on_nonempty,
            "N_mu_additive": verdict.n_mu_additive,
            "agree": verdict.agree,
        }
        if not verdict.agree:
            failures.append("additivity of N_mu does not match constancy of mu on nonempty sets")

    if is_closed_under_complements(fam):
        pair, reason = _guard(lambda: dual_pair_check(mu, tol))
        duality_doc = {"N_mu_vs_dual_maxitive": _skipped(reason) if reason else {"holds": pair}}
        if pair is False:
            failures.append("N_mu and the maxitive measure of the dual do not pair up")
        if problem.fca is not None and problem.f is not None and problem.ybar is not None:
            ident, reason = _guard(lambda: duality_identity_check(problem.fca, problem.f, mu, problem.ybar, tol=tol))
            duality_doc["survival_vs_level_measure"] = _skipped(reason) if reason else {"holds": ident}
            if ident is False:
                failures.append("survival and level-measure duality identity fails")
        else:
            duality_doc["survival_vs_level_measure"] = _skipped("needs 'fca', 'f' and 'ybar'")
    else:
        duality_doc = _skipped("family is not closed under complements")

    doc = {
        "command": "audit",
        "input": problem.doc,
        "findings": findings + failures,
        "mu": mu_props,
        "N_mu": n_props,
        "zero_sets": zero_doc,
        "range": range_doc,
        "additivity_characterization": additivity_doc,
        "duality": duality_doc,
    }
    if failures:
        raise CrossCheckError("; ".join(failures), doc)
    return doc, EXIT_OK


def cmd_examples(args) -> tuple[dict, int]:
    results = run_examples()
    rows = []
    for r in results:
        row = {"status": "PASS" if r.passed else "FAIL", "name": r.name}
        if not r.passed:
            row["diff"] = r.diff
        rows.append(row)
    passed = sum(r.passed for r in results)
    doc = {"command": "examples", "results": rows, "summary": f"{passed}/{len(results)} passed"}
    return doc, EXIT_OK if passed == len(results) else EXIT_GOLDEN


# -- entry point ------------------------------------------------------------------------------

COMMANDS = {
    "integrate": cmd_integrate,
    "survival": cmd_survival,
    "transform": cmd_transform,
    "moebius": cmd_moebius,
    "audit": cmd_audit,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="aligned text instead of JSON")
    common.add_argument("--tolerance", type=float, default=EPS, help="tolerance of cross-checks (default 1e-9)")

    parser = argparse.ArgumentParser(prog="hyperchoquet", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "integrate": "survival step function and the integral by every route",
        "survival": "survival values at given levels or as a breakpoint table",
        "transform": "values of N_mu on given subfamilies or on all of them",
        "moebius": "Moebius table of N_mu, round trip and the Moebius-route integral",
        "audit": "structural properties of mu and N_mu",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("spec", help="problem document (JSON)")
        if name == "survival":
            p.add_argument("--alpha", type=float, nargs="+", help="levels to evaluate")
            p.add_argument("--table", action="store_true", help="full breakpoint table")
        if name == "transform":
            p.add_argument("--hyper", nargs="+", help='subfamilies as JSON, e.g. \'[[], [1]]\'')
            p.add_argument("--enumerate", action="store_true", help="every nonempty subfamily (p <= 16)")
    sub.add_parser("examples", parents=[common], help="reproduce the worked examples")
    return parser


def _emit(doc: dict, pretty: bool) -> None:
    text = render(clean(doc)) if pretty else dumps(doc)
    sys.stdout.write(text + "\n")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.tolerance < 0:
        print("hyperchoquet: --tolerance must be nonnegative", file=sys.stderr)
        return EXIT_SCHEMA
    try:
        if args.command == "examples":
            doc, code = cmd_examples(args)
        else:
            problem = load_problem(args.spec)
            doc, code = COMMANDS[args.command](problem, args)
    except OSError as exc:
        print(f"hyperchoquet: cannot read problem: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except SchemaError as exc:
        print(f"hyperchoquet: schema error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except CrossCheckError as exc:
        message, *partial = exc.args
        if partial:
            _emit(partial[0] | {"status": "cross-check failed"}, args.pretty)
        print(f"hyperchoquet: cross-check failed: {message}", file=sys.stderr)
        return EXIT_CROSS_CHECK
    except PreconditionError as exc:
        print(f"hyperchoquet: precondition failed ({type(exc).__name__}): {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except HyperChoquetError as exc:
        print(f"hyperchoquet: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    doc["status"] = "ok" if code == EXIT_OK else "failed"
    _emit(doc, args.pretty)
    return code


if __name__ == "__main__":
    sys.exit(main())
