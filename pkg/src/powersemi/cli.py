"""Batch front end: every experiment is a subcommand emitting a JSON report.

Exit codes: 0 on success, 1 when a run surfaces a theorem-violation
finding (so CI fails loudly on a mathematical surprise), 2 on usage
errors, including tables that fail validation.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog as _catalog
from . import freewords as _freewords
from .cancellation import (cancellative_elements_bruteforce,
                           singleton_cancellative_elements,
                           witness_noncancellative)
from .errors import (NonAssociative, NotCompatible, PreconditionViolated,
                     TheoremViolation, WorkbenchError)
from .morphisms import (describe_fingerprint_mismatch, find_isomorphism,
                        fingerprint, lift_isomorphism, restrict_isomorphism)
from .numerical import NumericalMonoid
from .power import (POWER_CAP, build_power_semigroup, congruence_family,
                    downward_complete_closure, family_report, full_family)
from .semigroups import FiniteSemigroup, congruence_from_partition, read_table

SCHEMA_VERSION = 1
EXIT_OK = 0
EXIT_FINDING = 1
EXIT_USAGE = 2


class UsageError(Exception):
    def __init__(self, message, extra=None):
        super().__init__(message)
        self.extra = extra or {}


def _load_semigroup(path):
    try:
        rows = read_table(path)
    except OSError as exc:
        raise UsageError(f"cannot read table file {path}: {exc}")
    except ValueError as exc:
        raise UsageError(f"malformed table file {path}: {exc}")
    try:
        return FiniteSemigroup(rows)
    except NonAssociative as exc:
        raise UsageError(str(exc), {"type": "NonAssociative",
                                    "triple": list(exc.triple)})
    except WorkbenchError as exc:
        raise UsageError(str(exc), {"type": type(exc).__name__})


def _parse_elements(text):
    try:
        return [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}")


def _parse_mask(semigroup, text):
    elems = _parse_elements(text)
    if not elems:
        raise UsageError("element set must be non-empty")
    if any(not 0 <= x < semigroup.order for x in elems):
        raise UsageError(f"elements {elems} outside the carrier of order "
                         f"{semigroup.order}")
    mask = 0
    for x in elems:
        mask |= 1 << x
    return mask


def _select_family(semigroup, args, cap):
    if getattr(args, "congruence", None):
        labels = _parse_elements(args.congruence)
        try:
            cong = congruence_from_partition(semigroup, labels)
        except NotCompatible as exc:
            raise UsageError(str(exc), {"type": "NotCompatible",
                                        "quadruple": list(exc.quadruple)})
        except WorkbenchError as exc:
            raise UsageError(str(exc))
        return congruence_family(cong)
    if getattr(args, "generators", None) is not None:
        masks = []
        for chunk in args.generators.split(";"):
            if chunk.strip() == "":
                continue
            masks.append(_parse_mask(semigroup, chunk))
        return downward_complete_closure(semigroup, masks)
    return full_family(semigroup, cap)


def _cmd_validate(args):
    sgr = _load_semigroup(args.table)
    return {
        "order": sgr.order,
        "commutative": sgr.commutative,
        "identity": sgr.identity,
        "idempotents": sgr.idempotents(),
        "cancellative_elements": sgr.cancellative_elements(),
    }, EXIT_OK


def _cmd_power(args):
    sgr = _load_semigroup(args.table)
    power = build_power_semigroup(sgr, args.cap)
    return {
        "carrier_order": sgr.order,
        "order": power.order,
        "commutative": power.commutative,
        "identity": power.identity,
        "table": power.rows,
    }, EXIT_OK


def _cmd_family(args):
    sgr = _load_semigroup(args.table)
    family = _select_family(sgr, args, args.cap)
    return family_report(family), EXIT_OK


def _cmd_cancellatives(args):
    sgr = _load_semigroup(args.table)
    family = _select_family(sgr, args, args.cap)
    brute = sorted(m.mask for m in cancellative_elements_bruteforce(family))
    report = {
        "family": family_report(family),
        "bruteforce": brute,
        "singleton_rule": None,
        "agree": None,
    }
    code = EXIT_OK
    if sgr.commutative and family.is_downward_complete:
        rule = sorted(m.mask for m in singleton_cancellative_elements(family))
        report["singleton_rule"] = rule
        report["agree"] = rule == brute
        if not report["agree"]:
            code = EXIT_FINDING
    return report, code


def _cmd_witness(args):
    sgr = _load_semigroup(args.table)
    family = _select_family(sgr, args, args.cap)
    mask = _parse_mask(sgr, args.set)
    witness = witness_noncancellative(mask, family)
    return witness.report(), EXIT_OK


def _verdict(source, target):
    found = find_isomorphism(source, target)
    mismatch = describe_fingerprint_mismatch(fingerprint(source),
                                             fingerprint(target))
    return found, {
        "isomorphic": found is not None,
        "map": None if found is None else list(found.mapping),
        "fingerprint_mismatch": mismatch,
    }


def _cmd_iso(args):
    left = _load_semigroup(args.table)
    right = _load_semigroup(args.other)
    _, report = _verdict(left, right)
    return report, EXIT_OK


def _cmd_lift(args):
    left = _load_semigroup(args.table)
    right = _load_semigroup(args.other)
    found, report = _verdict(left, right)
    report["power_map"] = None
    if found is not None:
        lifted = lift_isomorphism(found, args.cap)
        report["power_map"] = list(lifted.mapping)
    return report, EXIT_OK


def _cmd_restrict(args):
    left = _load_semigroup(args.table)
    right = _load_semigroup(args.other)
    power_left = build_power_semigroup(left, args.cap)
    power_right = build_power_semigroup(right, args.cap)
    found = find_isomorphism(power_left, power_right)
    report = {
        "power_isomorphic": found is not None,
        "power_map": None if found is None else list(found.mapping),
        "restricted_map": None,
        "theorem_violation": None,
    }
    if found is None:
        return report, EXIT_OK
    try:
        small = restrict_isomorphism(found, full_family(left, args.cap),
                                     full_family(right, args.cap))
    except TheoremViolation as exc:
        report["theorem_violation"] = str(exc)
        return report, EXIT_FINDING
    report["restricted_map"] = list(small.mapping)
    return report, EXIT_OK


def _cmd_enumerate(args):
    entries = _catalog.enumerate_semigroups(
        args.order, up_to_isomorphism=not args.labeled,
        long_running=args.long_running, jobs=args.jobs)
    return {
        "order": args.order,
        "up_to_isomorphism": not args.labeled,
        "classes": len(entries),
        "tables": [entry.semigroup.rows for entry in entries],
    }, EXIT_OK


def _cmd_probe(args):
    report = _catalog.global_iso_probe(
        args.order, jobs=args.jobs, long_running=args.long_running,
        cap=args.cap)
    code = EXIT_FINDING if report["counterexamples"] else EXIT_OK
    return report, code


def _cmd_prop1_check(args):
    report = _catalog.singleton_characterization_check(
        args.order, seed=args.seed, closures_per_semigroup=args.closures,
        long_running=args.long_running)
    code = EXIT_FINDING if report["violations"] else EXIT_OK
    return report, code


def _make_monoid(text):
    gens = _parse_elements(text)
    try:
        return NumericalMonoid(gens)
    except ValueError as exc:
        raise UsageError(str(exc))


def _cmd_nm(args):
    monoid = _make_monoid(args.gens)
    report = {
        "generators": list(monoid.generators),
        "frobenius": monoid.frobenius,
        "gap_count": len(monoid.gaps),
    }
    if args.gaps:
        report["gaps"] = list(monoid.gaps)
    if args.member is not None:
        report["member"] = {"value": args.member,
                            "is_member": monoid.membership(args.member)}
    return report, EXIT_OK


def _cmd_nm_witness(args):
    monoid = _make_monoid(args.gens)
    subset = _parse_elements(args.set)
    witness = monoid.witness_noncancellative(subset)
    report = witness.report()
    report["generators"] = list(monoid.generators)
    return report, EXIT_OK


def _cmd_free_check(args):
    report = _freewords.cancellativity_campaign(
        alphabet=args.alphabet, trials=args.trials, seed=args.seed,
        max_word_len=args.max_word_len, max_set_size=args.max_set_size)
    bad = report["violations"] or report["disjointness_failures"]
    return report, EXIT_FINDING if bad else EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the JSON report here instead of stdout")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for any randomized part of the run")
    common.add_argument("--jobs", type=int, default=1,
                        help="worker processes for probe/enumerate")
    common.add_argument("--long-running", action="store_true",
                        dest="long_running",
                        help="opt in to order-5 workloads")

    parser = argparse.ArgumentParser(
        prog="powersemi",
        description="Workbench for power semigroups of finite semigroups.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("validate", _cmd_validate,
            "validate a Cayley table and report its basic structure")
    p.add_argument("--table", required=True, help="Cayley table file")

    p = add("power", _cmd_power, "materialize the power semigroup of a table")
    p.add_argument("--table", required=True)
    p.add_argument("--cap", type=int, default=POWER_CAP)

    for name, func, help_text in (
            ("family", _cmd_family,
             "build a subset family and report its flags"),
            ("cancellatives", _cmd_cancellatives,
             "classify cancellative members of a family both ways"),
            ("witness", _cmd_witness,
             "construct a non-cancellativity witness for a subset")):
        p = add(name, func, help_text)
        p.add_argument("--table", required=True)
        p.add_argument("--cap", type=int, default=POWER_CAP)
        p.add_argument("--generators",
                       help="semicolon-separated element lists, e.g. '0,2;1,3'; "
                            "the downward-complete closure is used")
        p.add_argument("--congruence",
                       help="comma-separated block labels, one per element")
        if name == "witness":
            p.add_argument("--set", required=True,
                           help="comma-separated elements of the subset")

    for name, func, help_text in (
            ("iso", _cmd_iso, "decide isomorphism of two tables"),
            ("lift", _cmd_lift,
             "lift a found carrier isomorphism to the power semigroups"),
            ("restrict", _cmd_restrict,
             "find a power-semigroup isomorphism and restrict it to carriers")):
        p = add(name, func, help_text)
        p.add_argument("--table", required=True, help="first Cayley table file")
        p.add_argument("--other", required=True, help="second Cayley table file")
        if name in ("lift", "restrict"):
            p.add_argument("--cap", type=int, default=POWER_CAP)

    p = add("enumerate", _cmd_enumerate,
            "enumerate all semigroups of one order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--labeled", action="store_true",
                   help="emit all labeled tables instead of one per class")

    p = add("probe", _cmd_probe,
            "compare power semigroups of all non-isomorphic pairs of one order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--cap", type=int, default=POWER_CAP)

    p = add("prop1-check", _cmd_prop1_check,
            "verify the two cancellativity classifiers agree over the catalog")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--closures", type=int, default=3,
                   help="seeded random closures per semigroup")

    p = add("nm", _cmd_nm, "gap structure of a numerical monoid")
    p.add_argument("--gens", required=True,
                   help="comma-separated positive generators with gcd 1")
    p.add_argument("--gaps", action="store_true", help="include the gap list")
    p.add_argument("--member", type=int, help="also test one membership")

    p = add("nm-witness", _cmd_nm_witness,
            "non-cancellativity witness inside a numerical monoid")
    p.add_argument("--gens", required=True)
    p.add_argument("--set", required=True,
                   help="comma-separated members, at least two")

    p = add("free-check", _cmd_free_check,
            "randomized cancellation checks over free-word sets")
    p.add_argument("--alphabet", type=int, default=4)
    p.add_argument("--trials", type=int, default=10000)
    p.add_argument("--max-word-len", type=int, default=6)
    p.add_argument("--max-set-size", type=int, default=8)

    return parser


def _emit(report, args):
    text = json.dumps(report, indent=2) + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def run(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, code = args.func(args)
    except UsageError as exc:
        report = {"schema_version": SCHEMA_VERSION,
                  "error": {"message": str(exc), **exc.extra}}
        _emit(report, args)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TheoremViolation as exc:
        report = {"schema_version": SCHEMA_VERSION,
                  "error": {"type": "TheoremViolation", "message": str(exc)}}
        _emit(report, args)
        print(f"theorem violation: {exc}", file=sys.stderr)
        return EXIT_FINDING
    except PreconditionViolated as exc:
        report = {"schema_version": SCHEMA_VERSION,
                  "error": {"type": "PreconditionViolated",
                            "message": str(exc)}}
        _emit(report, args)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except WorkbenchError as exc:
        report = {"schema_version": SCHEMA_VERSION,
                  "error": {"type": type(exc).__name__, "message": str(exc)}}
        _emit(report, args)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit({"schema_version": SCHEMA_VERSION, **report}, args)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
