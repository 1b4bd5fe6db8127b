"""Command line front end.

Commands:

* ``homology``: basis sizes and integral homology of weight components.
* ``verify``: computed homology against the sphere-smash closed form,
  plus the operator-identity and alternating-count suites.
* ``tp``: the factor table of one degree of the relative periodic
  theory, with truncation notice and verdicts.
* ``verdict``: nil-invariance verdicts for one pair (p, k).
* ``selftest``: the built-in property suite on a fixed small range.

Reports render as text or as a single JSON tree (``--format json``) with
stable field names and sorted keys, so identical inputs give identical
bytes.  Exit codes: 0 on success, 1 when a mathematical check fails, 2
for usage or validation errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from functools import partial
from math import inf
from pathlib import Path

from .cyclic_bar import CyclicBar, identity_report
from .homology import ZERO_GROUP, chain_complex, homology_groups, verify_weight_piece
from .tate_tp import nil_invariance_report, relative_tp

__all__ = ["main", "RunConfig", "UsageError"]


class UsageError(ValueError):
    """Bad command line input; maps to exit code 2."""


@dataclass
class RunConfig:
    """Validated parameters of one invocation."""

    command: str
    fmt: str = "text"
    out: str | None = None
    jobs: int = 1
    k: int | None = None
    p: int | None = None
    i_lo: int | None = None
    i_hi: int | None = None
    j: int | None = None
    max_i: int | None = None
    truncate: int | None = None


def _parse_weight_range(text):
    """A single weight '7' or an inclusive range '1..12'."""
    raw = text.strip()
    try:
        if ".." in raw:
            lo_text, hi_text = raw.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
        else:
            lo = hi = int(raw)
    except ValueError:
        raise UsageError(f"cannot parse weight range {text!r}; use N or A..B") from None
    if lo < 0:
        raise UsageError(f"weights must be nonnegative, got {lo}")
    if hi < lo:
        raise UsageError(f"empty weight range {text!r}")
    return lo, hi


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cycbar",
        description="homology of cyclic bar weight components of truncated "
        "polynomial monoids, and the closed-form relative periodic theory",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument(
            "--format", choices=("text", "json"), default="text", dest="fmt",
            help="report format (default: text)",
        )
        sp.add_argument("--out", default=None, help="write the report to this file")
        sp.add_argument(
            "--jobs", type=int, default=1,
            help="worker processes for independent weights (default: 1)",
        )

    sp = sub.add_parser("homology", help="homology of weight components")
    sp.add_argument("--k", type=int, required=True, help="truncation order, >= 2")
    sp.add_argument("--i", required=True, help="weight or inclusive range A..B")
    common(sp)

    sp = sub.add_parser("verify", help="check homology against the closed form")
    sp.add_argument("--k", type=int, required=True, help="truncation order, >= 2")
    sp.add_argument("--max-i", type=int, required=True, help="largest weight checked")
    common(sp)

    sp = sub.add_parser("tp", help="factor table of the relative periodic theory")
    sp.add_argument("--p", type=int, required=True, help="prime")
    sp.add_argument("--k", type=int, required=True, help="truncation order, >= 2")
    sp.add_argument("--j", type=int, required=True, help="degree")
    sp.add_argument("--truncate", type=int, required=True, help="largest weight listed")
    common(sp)

    sp = sub.add_parser("verdict", help="nil-invariance verdicts")
    sp.add_argument("--p", type=int, required=True, help="prime")
    sp.add_argument("--k", type=int, required=True, help="truncation order, >= 2")
    common(sp)

    sp = sub.add_parser("selftest", help="run the built-in property suite")
    common(sp)

    return parser


def _config_from_args(args):
    cfg = RunConfig(command=args.command, fmt=args.fmt, out=args.out, jobs=args.jobs)
    if cfg.jobs < 1:
        raise UsageError(f"--jobs must be >= 1, got {cfg.jobs}")
    if cfg.command in ("homology", "verify", "tp", "verdict"):
        cfg.k = args.k
        if cfg.k < 2:
            raise UsageError(f"--k must be >= 2, got {cfg.k}")
    if cfg.command == "homology":
        cfg.i_lo, cfg.i_hi = _parse_weight_range(args.i)
    if cfg.command == "verify":
        cfg.max_i = args.max_i
        if cfg.max_i < 1:
            raise UsageError(f"--max-i must be >= 1, got {cfg.max_i}")
    if cfg.command in ("tp", "verdict"):
        cfg.p = args.p
        if cfg.p < 2:
            raise UsageError(f"--p must be a prime >= 2, got {cfg.p}")
    if cfg.command == "tp":
        cfg.j = args.j
        cfg.truncate = args.truncate
        if cfg.truncate < 1:
            raise UsageError(f"--truncate must be >= 1, got {cfg.truncate}")
    return cfg


def _group_node(group):
    return {"rank": group.rank, "torsion": list(group.torsion), "name": str(group)}


def _homology_entry(k, i):
    cx = chain_complex(CyclicBar(k).enumerate_weight_component(i))
    groups = homology_groups(cx)
    return {
        "i": i,
        "degrees": [
            {
                "degree": l,
                "basis_size": cx.dimension(l),
                "homology": _group_node(groups[l]),
            }
            for l in range(cx.top_degree + 1)
        ],
    }


def _verify_entry(k, i):
    rep = verify_weight_piece(k, i)
    shown = sorted(
        l
        for l in set(rep.computed) | set(rep.expected)
        if not rep.computed.get(l, ZERO_GROUP).is_trivial
        or not rep.expected.get(l, ZERO_GROUP).is_trivial
    )
    return {
        "i": i,
        "match": rep.matches,
        "mismatched_degrees": list(rep.mismatched_degrees),
        "degrees": [
            {
                "degree": l,
                "computed": _group_node(rep.computed.get(l, ZERO_GROUP)),
                "expected": _group_node(rep.expected.get(l, ZERO_GROUP)),
            }
            for l in shown
        ],
    }


def _run_jobs(fn, items, jobs):
    items = list(items)
    if jobs > 1 and len(items) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def _verdict_node(v):
    return {
        "p": v.p,
        "k": v.k,
        "integral_iso": v.integral_iso,
        "p_inverted_iso": v.p_inverted_iso,
        "witness_weight": v.witness_weight,
        "witness_exponent": v.witness_exponent,
        "exponent_sup": "infinity" if v.exponent_sup is inf else v.exponent_sup,
        "remark": v.remark,
    }


def _verdict_lines(node, indent=""):
    yes_no = {True: "yes", False: "no"}
    return [
        f"{indent}integral isomorphism:  {yes_no[node['integral_iso']]} "
        f"(weight {node['witness_weight']} contributes "
        f"Z/{node['p']}^{node['witness_exponent']})",
        f"{indent}after inverting p:     {yes_no[node['p_inverted_iso']]}",
        f"{indent}exponent supremum:     {node['exponent_sup']}",
        f"{indent}remark: {node['remark']}",
    ]


def cmd_homology(cfg):
    weights = range(cfg.i_lo, cfg.i_hi + 1)
    entries = _run_jobs(partial(_homology_entry, cfg.k), weights, cfg.jobs)
    tree = {
        "tool": "cycbar",
        "command": "homology",
        "config": {"k": cfg.k, "i_min": cfg.i_lo, "i_max": cfg.i_hi},
        "components": entries,
    }
    lines = []
    for entry in entries:
        lines.append(f"weight component k={cfg.k}, i={entry['i']}")
        lines.append("  degree  basis  homology")
        for row in entry["degrees"]:
            lines.append(
                f"  {row['degree']:>6} {row['basis_size']:>6}  "
                f"{row['homology']['name']}"
            )
    _emit(tree, lines, cfg)
    return 0


def cmd_verify(cfg):
    weights = [i for i in range(1, cfg.max_i + 1) if i % cfg.k]
    entries = _run_jobs(partial(_verify_entry, cfg.k), weights, cfg.jobs)
    bar = CyclicBar(cfg.k)
    euler = []
    for i in range(1, cfg.max_i + 1):
        count = bar.enumerate_weight_component(i).alternating_count()
        euler.append({"i": i, "alternating_count": count, "ok": count == 0})
    checked, violations = identity_report(cfg.k, cfg.max_i)
    ok = (
        all(e["match"] for e in entries)
        and all(e["ok"] for e in euler)
        and not violations
    )
    tree = {
        "tool": "cycbar",
        "command": "verify",
        "config": {"k": cfg.k, "max_i": cfg.max_i},
        "weight_pieces": entries,
        "euler": euler,
        "identities": {
            "simplices_checked": checked,
            "violations": violations,
        },
        "ok": ok,
    }
    lines = [f"verify k={cfg.k} for weights 1..{cfg.max_i}"]
    lines.append("  sphere-smash closed form:")
    for e in entries:
        if e["match"]:
            degs = ", ".join(str(r["degree"]) for r in e["degrees"])
            lines.append(f"    i={e['i']:>2}: match  (Z at degrees {degs})")
        else:
            lines.append(f"    i={e['i']:>2}: MISMATCH")
            for r in e["degrees"]:
                lines.append(
                    f"      degree {r['degree']}: computed "
                    f"{r['computed']['name']}, expected {r['expected']['name']}"
                )
    bad_euler = [e for e in euler if not e["ok"]]
    lines.append(
        f"  alternating counts: {len(euler)} weights, "
        + ("all zero" if not bad_euler else f"{len(bad_euler)} NONZERO")
    )
    lines.append(
        f"  operator identities: {checked} simplices, {len(violations)} violations"
    )
    lines.append(f"overall: {'PASS' if ok else 'FAIL'}")
    _emit(tree, lines, cfg)
    return 0 if ok else 1


def cmd_tp(cfg):
    report = relative_tp(cfg.p, cfg.k, cfg.j, cfg.truncate)
    tree = {
        "tool": "cycbar",
        "command": "tp",
        "config": {
            "p": cfg.p,
            "k": cfg.k,
            "j": cfg.j,
            "truncate": cfg.truncate,
        },
        "parity": "odd" if cfg.j % 2 else "even",
        "truncated": report.truncated,
        "factors": [
            {
                "i": f.weight,
                "k_divides_i": f.multiple_of_k,
                "exponent": f.exponent,
                "order": f.order,
                "group": str(f.group),
            }
            for f in report.factors
        ],
        "verdicts": _verdict_node(report.verdicts),
    }
    lines = [
        f"relative periodic theory for p={cfg.p}, k={cfg.k}, degree j={cfg.j}"
    ]
    if report.factors:
        lines.append("  weight  k|i  factor")
        for f in tree["factors"]:
            lines.append(
                f"  {f['i']:>6}  {'yes' if f['k_divides_i'] else ' no'}  "
                f"{f['group']} (exponent {f['exponent']})"
            )
        lines.append(
            f"  truncated at weight {cfg.truncate}; higher weights follow the "
            "same two-case exponent rule"
        )
    else:
        lines.append("  the group vanishes in even degrees (no factors)")
    lines.append("verdicts:")
    lines.extend(_verdict_lines(tree["verdicts"], indent="  "))
    _emit(tree, lines, cfg)
    return 0


def cmd_verdict(cfg):
    node = _verdict_node(nil_invariance_report(cfg.p, cfg.k))
    tree = {
        "tool": "cycbar",
        "command": "verdict",
        "config": {"p": cfg.p, "k": cfg.k},
        "verdicts": node,
    }
    lines = [f"nil-invariance verdicts for p={cfg.p}, k={cfg.k}"]
    lines.extend(_verdict_lines(node, indent="  "))
    _emit(tree, lines, cfg)
    return 0


SELFTEST_K = (2, 3, 4)
SELFTEST_MAX_WEIGHT = 10


def _selftest_identities():
    total = 0
    for k in SELFTEST_K:
        checked, violations = identity_report(k, SELFTEST_MAX_WEIGHT)
        total += checked
        if violations:
            return False, f"k={k}: {len(violations)} violations"
    return True, f"{total} simplices checked"


def _selftest_boundary():
    count = 0
    for k in SELFTEST_K:
        for i in range(SELFTEST_MAX_WEIGHT + 1):
            cx = chain_complex(CyclicBar(k).enumerate_weight_component(i))
            if not cx.boundary_composes_to_zero():
                return False, f"boundary fails to square to zero at k={k}, i={i}"
            count += 1
    return True, f"{count} complexes checked"


def _selftest_euler():
    for k in SELFTEST_K:
        bar = CyclicBar(k)
        for i in range(1, SELFTEST_MAX_WEIGHT + 1):
            count = bar.enumerate_weight_component(i).alternating_count()
            if count != 0:
                return False, f"alternating count {count} at k={k}, i={i}"
    return True, f"{len(SELFTEST_K) * SELFTEST_MAX_WEIGHT} weights checked"


def _selftest_sphere_smash():
    matched = 0
    for k in SELFTEST_K:
        for i in range(1, SELFTEST_MAX_WEIGHT + 1):
            if i % k == 0:
                continue
            if not verify_weight_piece(k, i).matches:
                return False, f"homology mismatch at k={k}, i={i}"
            matched += 1
    return True, f"{matched} weight pieces matched"


SELFTEST_CHECKS = (
    ("operator identities", _selftest_identities),
    ("boundary squares to zero", _selftest_boundary),
    ("alternating counts vanish", _selftest_euler),
    ("homology matches the closed form", _selftest_sphere_smash),
)


def cmd_selftest(cfg):
    results = []
    for name, check in SELFTEST_CHECKS:
        ok, detail = check()
        results.append({"name": name, "ok": ok, "detail": detail})
    ok = all(r["ok"] for r in results)
    tree = {
        "tool": "cycbar",
        "command": "selftest",
        "config": {"k_values": list(SELFTEST_K), "max_i": SELFTEST_MAX_WEIGHT},
        "checks": results,
        "ok": ok,
    }
    lines = [
        f"{'PASS' if r['ok'] else 'FAIL'}  {r['name']} ({r['detail']})"
        for r in results
    ]
    lines.append(f"selftest: {'all checks passed' if ok else 'CHECKS FAILED'}")
    _emit(tree, lines, cfg)
    return 0 if ok else 1


def _emit(tree, lines, cfg):
    if cfg.fmt == "json":
        payload = json.dumps(tree, indent=2, sort_keys=True) + "\n"
    else:
        payload = "\n".join(lines) + "\n"
    if cfg.out:
        Path(cfg.out).write_text(payload)
    else:
        sys.stdout.write(payload)


_HANDLERS = {
    "homology": cmd_homology,
    "verify": cmd_verify,
    "tp": cmd_tp,
    "verdict": cmd_verdict,
    "selftest": cmd_selftest,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = _config_from_args(args)
        return _HANDLERS[cfg.command](cfg)
    except ValueError as exc:
        # UsageError and validation errors from the library both land here
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
