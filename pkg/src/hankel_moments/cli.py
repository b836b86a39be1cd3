"""Command-line interface: one JSON document per run on standard output.

Exit status is 0 when everything checked out, 1 when a mismatch was found
and 2 for usage errors or malformed input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from fractions import Fraction

from .exact_core import (
    RationalParseError,
    det_condensation,
    det_fraction_free,
    format_rational,
    parse_rational_list,
)
from .heine import (
    DiscreteMeasure,
    EnumerationBudgetError,
    heine_multisum,
    measure_moments,
    twist_measure,
    twisted_hankel,
)
from .identity import (
    LinearCombination,
    PointConfiguration,
    combination_hankel,
    lambda_from_points,
    verify_theorem1,
)
from .orthopoly import (
    InsufficientMomentsError,
    MomentSequence,
    RecurrenceCoeffs,
    hankel_matrix,
    moments_from_coeffs,
)
from . import sampling
from .recurrence import (
    c1_value,
    default_scaling,
    first_failure,
    fit_recurrence,
    scaled_hankel_seq,
    symmetry_check,
    synthesize_recurrence,
)
from .sequences import get_sequence, registry


class UsageError(Exception):
    pass


def _rationals(text: str | None, flag: str) -> list[Fraction] | None:
    if text is None:
        return None
    try:
        return parse_rational_list(text)
    except RationalParseError as exc:
        raise UsageError(f"{flag}: {exc}") from None


def _load_json(path: str, what: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {what} file {path!r}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON in {what} file {path!r}: {exc}") from None


def _coeffs(args, rng=None) -> tuple[RecurrenceCoeffs, str]:
    if args.coeffs and args.sequence:
        raise UsageError("give either --coeffs or --sequence, not both")
    if args.coeffs:
        doc = _load_json(args.coeffs, "coefficient")
        try:
            return RecurrenceCoeffs.from_json(doc), args.coeffs
        except (ValueError, RationalParseError) as exc:
            raise UsageError(f"bad coefficient document: {exc}") from None
    if args.sequence:
        try:
            return get_sequence(args.sequence).coeffs, args.sequence
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
    if rng is not None:
        return sampling.recurrence_coeffs(rng), "random"
    raise UsageError("one of --coeffs or --sequence is required")


def _points(args, rng=None, d: int | None = None) -> PointConfiguration | None:
    pts = _rationals(args.points, "--points")
    if pts is None:
        if rng is None:
            return None
        pts = sampling.distinct_rationals(rng, rng.randint(0, 3) if d is None else d)
    return PointConfiguration.from_list(pts)


def _combination(args) -> LinearCombination | None:
    lam = _rationals(args.lam, "--lambda")
    cfg = _points(args)
    if lam is not None and cfg is not None:
        raise UsageError("give either --lambda or --points, not both")
    if lam is not None:
        try:
            return LinearCombination(tuple(lam))
        except ValueError as exc:
            raise UsageError(f"--lambda: {exc}") from None
    if cfg is not None:
        return lambda_from_points(cfg)
    return None


def _require_n(args, default: int | None = None) -> int:
    n = args.n if args.n is not None else default
    if n is None:
        raise UsageError("--n is required")
    if n < 0:
        raise UsageError("--n must be non-negative")
    return n


def _rng(args):
    if args.seed is None:
        return None
    return random.Random(args.seed)


def cmd_verify(args) -> tuple[dict, int]:
    rng = _rng(args)
    c, source = _coeffs(args, rng)
    cfg = _points(args, rng)
    if cfg is None:
        raise UsageError("--points is required")
    n = _require_n(args, None if rng is None else rng.randint(0, 6))
    moments = None
    override = _rationals(args.moments, "--moments")
    if override is not None:
        moments = MomentSequence(tuple(override), "user-supplied")
    first_bad = None
    report = None
    for k in range(n + 1):
        try:
            rep = verify_theorem1(c, cfg, k, moments)
        except InsufficientMomentsError as exc:
            raise UsageError(str(exc)) from None
        if k == n:
            report = rep
        if not rep.equal and first_bad is None:
            first_bad = k
    doc = report.to_json()
    doc["coeffs"] = c.to_json()
    doc["points"] = [format_rational(x) for x in cfg.expanded()]
    doc["source"] = source
    doc["first_failing_n"] = first_bad
    return doc, 0 if first_bad is None else 1


def _moment_source(args, count: int) -> tuple[MomentSequence, str]:
    override = _rationals(args.moments, "--moments")
    if override is not None:
        if args.coeffs or args.sequence:
            raise UsageError("--moments cannot be combined with --coeffs or --sequence")
        return MomentSequence(tuple(override), "user-supplied"), "moments"
    c, source = _coeffs(args)
    return moments_from_coeffs(c, max(count, 1)), source


def cmd_hankel(args) -> tuple[dict, int]:
    n = _require_n(args)
    shift = args.shift or 0
    if shift < 0:
        raise UsageError("--shift must be non-negative")
    lc = _combination(args)
    weights = [Fraction(0)] * shift + (list(lc.lam) if lc else [Fraction(1)])
    moments, source = _moment_source(args, 2 * n - 2 + len(weights))
    try:
        table = [combination_hankel(moments, weights, k) for k in range(n + 1)]
    except InsufficientMomentsError as exc:
        raise UsageError(str(exc)) from None
    doc = {"n": n, "shift": shift, "source": source,
           "lambda": [format_rational(v) for v in (lc.lam if lc else (1,))],
           "value": format_rational(table[-1]),
           "table": [format_rational(v) for v in table]}
    return doc, 0


def cmd_recurrence(args) -> tuple[dict, int]:
    c, source = _coeffs(args)
    lc = _combination(args)
    if lc is None:
        raise UsageError("one of --lambda or --points is required")
    d = lc.d
    spec = synthesize_recurrence(c, lc)
    order = spec.order
    count = spec.validity_start + max(order + 8, 2 * order + 2)
    if args.count is not None:
        count = max(count, args.count)
    seq = scaled_hankel_seq(c, lc, count, default_scaling(c))
    bad = first_failure(seq.values, spec)
    fitted = fit_recurrence(seq.values, order, spec.validity_start, spec.window_rule)
    doc = spec.to_json()
    checks = {
        "recurrence_holds": bad is None,
        "fit_agrees": fitted is not None and fitted.c == spec.c,
        "c1_formula": spec.c[1] == c1_value(lc, c.s_tail) if order >= 1 else True,
        "symmetry": symmetry_check(spec, c.t_tail, d) if d >= 1 else True,
    }
    doc.update({
        "source": source,
        "lambda": [format_rational(v) for v in lc.lam],
        "H": [format_rational(v) for v in seq.values],
        "H_integral": all(v.denominator == 1 for v in seq.values),
        "checks": checks,
        "first_failing_n": bad,
    })
    # a non-unique fit (lower-order recurrence) is not a mismatch
    ok = checks["recurrence_holds"] and checks["c1_formula"] and checks["symmetry"]
    return doc, 0 if ok else 1


def cmd_heine(args) -> tuple[dict, int]:
    if not args.measure:
        raise UsageError("--measure is required")
    doc = _load_json(args.measure, "measure")
    try:
        m = DiscreteMeasure.from_json(doc)
    except (ValueError, RationalParseError) as exc:
        raise UsageError(f"bad measure document: {exc}") from None
    cfg = _points(args) or PointConfiguration(())
    n = _require_n(args)
    moments = measure_moments(m, max(2 * n - 1 + cfg.d, 1))
    lhs = twisted_hankel(moments, cfg, n)
    try:
        rhs = heine_multisum(twist_measure(m, cfg), n)
    except EnumerationBudgetError as exc:
        raise UsageError(str(exc)) from None
    out = {"n": n, "points": [format_rational(x) for x in cfg.expanded()],
           "hankel": format_rational(lhs), "multisum": format_rational(rhs),
           "equal": lhs == rhs}
    return out, 0 if lhs == rhs else 1


def cmd_sequences(args) -> tuple[dict, int]:
    count = args.count if args.count is not None else 10
    specs = registry()
    if args.sequence:
        try:
            specs = [get_sequence(args.sequence)]
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
    out = []
    all_ok = True
    for s in specs:
        terms = [int(v) for v in s.moments(count)]
        ok = tuple(terms[:len(s.known_terms)]) == s.known_terms[:count]
        all_ok &= ok
        out.append({"name": s.name, "coeffs": s.coeffs.to_json(),
                    "provenance": s.provenance,
                    "base_hankel": s.base_hankel_closed_form,
                    "terms": [str(v) for v in terms], "matches_known": ok})
    return {"sequences": out}, 0 if all_ok else 1


def cmd_bench(args) -> tuple[dict, int]:
    n = args.n if args.n is not None else 12
    name = args.sequence or "schroeder_large"
    try:
        seq = get_sequence(name)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    mat = hankel_matrix(seq.moments(2 * n - 1 + (args.shift or 0)), n, args.shift or 0)
    reps = 5
    timings = {}
    values = {}
    for label, kernel in (("fraction_free", det_fraction_free),
                          ("condensation", det_condensation)):
        start = time.perf_counter()
        for _ in range(reps):
            values[label] = kernel(mat)
        timings[label] = (time.perf_counter() - start) / reps
    agree = values["fraction_free"] == values["condensation"]
    doc = {"sequence": name, "size": n, "repetitions": reps,
           "value": format_rational(values["fraction_free"]),
           "seconds": {k: round(v, 6) for k, v in timings.items()},
           "agree": agree}
    return doc, 0 if agree else 1


COMMANDS = {
    "verify-theorem1": cmd_verify,
    "hankel": cmd_hankel,
    "recurrence": cmd_recurrence,
    "heine": cmd_heine,
    "sequences": cmd_sequences,
    "bench": cmd_bench,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hankel-moments",
                description="Exact Hankel determinants of linear combinations of moments.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--coeffs", metavar="FILE", help="recurrence coefficient JSON")
    p.add_argument("--points", metavar="LIST", help="comma-separated rational points")
    p.add_argument("--lambda", dest="lam", metavar="LIST",
                   help="lambda_0..lambda_d, last entry 1")
    p.add_argument("--n", type=int, help="determinant size")
    p.add_argument("--shift", type=int, help="moment index shift")
    p.add_argument("--sequence", metavar="NAME", help="registry sequence name")
    p.add_argument("--measure", metavar="FILE", help="discrete measure JSON")
    p.add_argument("--moments", metavar="LIST", help="explicit moments, overriding derived ones")
    p.add_argument("--count", type=int, help="number of terms to produce")
    p.add_argument("--seed", type=int, help="seed for random instances")
    p.add_argument("--pretty", action="store_true", help="indented, human-readable output")
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        doc, status = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"hankel-moments: error: {exc}", file=stderr)
        return 2
    except (ValueError, ArithmeticError) as exc:
        print(f"hankel-moments: error: {exc}", file=stderr)
        return 2
    if args.seed is not None:
        doc["seed"] = args.seed
    if args.pretty:
        json.dump(doc, stdout, indent=2)
    else:
        json.dump(doc, stdout, separators=(",", ":"))
    stdout.write("\n")
    return status


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
