"""Command-line front end: ranks, segments, shadows, bounds, and verification sweeps.

Verification output is a stream of flat records with the fields
{claim, n, k, i, expected, observed, attained_at, passed, seed}, one JSON
object per line (default), CSV with a header row, or a human-readable line.
Integers beyond 2^53 are serialized as decimal strings so exact values
survive JSON consumers that parse numbers as doubles. A summary line goes to
stderr after the stream. Exit codes: 0 all passed, 1 some claim failed,
2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .core import KSubset, Params, SetFamily, binom
from .families import (
    BoundReport,
    build_extremal_pair,
    check_proof_inequalities,
    is_cross_intersecting,
    max_compatible_b,
)
from .orders import Order, SegmentSpec, initial_segment, rank, unrank
from .oracle import (
    SweepConfig,
    Verdict,
    exhaustive_allowed,
    sweep_pyber,
    sweep_thm1,
    sweep_thm2,
    verify_hilton_exhaustive,
    verify_kk,
    verify_lemma7,
    verify_mors,
    verify_prop1,
)
from .shadows import ShadowQuery, kk_min_shadow, lovasz_bound, shadow

CLAIMS = (
    "pyber", "thm1", "thm2", "prop1", "lemma7", "kk", "mors", "hilton",
    "inequalities",
)
RECORD_FIELDS = (
    "claim", "n", "k", "i", "expected", "observed", "attained_at", "passed",
    "seed",
)
_JSON_INT_LIMIT = 2**53


def parse_values(text: str) -> tuple[int, ...]:
    """Parse '6', '4..14', or '3,5,7' into a tuple of integers."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    if not out:
        raise ValueError(f"empty value list: {text!r}")
    return tuple(out)


def parse_set(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(",") if x.strip())


def parse_family(text: str, params: Params) -> SetFamily:
    """Parse ';'-separated set literals, or @file with one set per line."""
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            literals = [line.strip() for line in fh if line.strip()]
    else:
        literals = [s for s in text.split(";") if s.strip()]
    return SetFamily.of(params, (parse_set(s) for s in literals))


def _json_safe(value):
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value) if abs(value) > _JSON_INT_LIMIT else value
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    return value


def verdict_record(v: Verdict) -> dict:
    p = v.parameters
    return {
        "claim": v.claim,
        "n": p.get("n", p.get("m")),
        "k": p.get("k", p.get("a", p.get("l"))),
        "i": p.get("i", p.get("j", p.get("t", p.get("x")))),
        "expected": v.expected,
        "observed": v.observed,
        "attained_at": [list(t) if isinstance(t, tuple) else [t] for t in v.attained_at],
        "passed": v.passed,
        "seed": v.seed,
    }


def report_record(r: BoundReport) -> dict:
    p = r.parameters
    if r.bound_name == "log_concavity":
        observed, expected = p["violations"], 0
    else:
        observed, expected = p["lhs"], p["rhs"]
    return {
        "claim": f"ineq:{r.bound_name}",
        "n": p.get("n"),
        "k": p.get("k"),
        "i": p.get("i", p.get("x")),
        "expected": expected,
        "observed": observed,
        "attained_at": [],
        "passed": r.passed,
        "seed": None,
    }


def run_claim_point(
    claim: str, point: dict, sample_count: int, seed: int
) -> list[dict]:
    """Evaluate one claim at one parameter point; returns flat records."""
    if claim == "pyber":
        verdicts = sweep_pyber(SweepConfig.grid((point["n"],), (point["k"],)))
    elif claim == "thm1":
        verdicts = sweep_thm1(SweepConfig.grid((point["n"],), (point["k"],)))
    elif claim == "thm2":
        verdicts = sweep_thm2(
            SweepConfig.grid(
                (point["n"],), (point["k"],), i_values=(point["i"],)
            )
        )
    elif claim == "prop1":
        verdicts = [verify_prop1(point["n"], point["k"])]
    elif claim == "hilton":
        verdicts = [
            verify_hilton_exhaustive(
                point["n"], point["k"], sample_count=sample_count, seed=seed
            )
        ]
    elif claim == "lemma7":
        verdicts = [verify_lemma7(point["m"], point["a"], point["j"])]
    elif claim == "kk":
        mode = (
            "exhaustive_families"
            if exhaustive_allowed(point["n"], point["k"])
            else "sampled"
        )
        verdicts = [
            verify_kk(
                point["n"], point["k"], point["t"], mode=mode,
                sample_count=sample_count, seed=seed,
            )
        ]
    elif claim == "mors":
        verdicts = [verify_mors(point["n"], point["l"], point["t"])]
    elif claim == "inequalities":
        return [
            report_record(r)
            for r in check_proof_inequalities(point["n"], point["k"])
        ]
    else:
        raise ValueError(f"unknown claim {claim!r}")
    return [verdict_record(v) for v in verdicts]


def _verify_points(claim: str, args) -> list[dict]:
    def need(flag: str) -> tuple[int, ...]:
        value = getattr(args, flag, None)
        if value is None:
            raise ValueError(f"claim {claim!r} requires --{flag}")
        return parse_values(value)

    points: list[dict] = []
    if claim in ("pyber", "inequalities", "prop1", "hilton"):
        for n in need("n"):
            for k in need("k"):
                if k >= 1 and n >= 2 * k:
                    points.append({"n": n, "k": k})
    elif claim == "thm1":
        for n in need("n"):
            for k in need("k"):
                if k >= 1 and n > 2 * k:
                    points.append({"n": n, "k": k})
    elif claim == "thm2":
        i_text = getattr(args, "i", None)
        for n in need("n"):
            for k in need("k"):
                if k < 2 or n < 2 * k:
                    continue
                i_values = parse_values(i_text) if i_text else range(3, k + 2)
                for i in i_values:
                    if 3 <= i <= k + 1:
                        points.append({"n": n, "k": k, "i": i})
    elif claim == "lemma7":
        m_text = args.m or args.n
        a_text = args.a or args.k
        j_text = args.j or args.i
        if not (m_text and a_text and j_text):
            raise ValueError("claim 'lemma7' requires --m, --a, --j")
        for m in parse_values(m_text):
            for a in parse_values(a_text):
                if a < 1 or m < 2 * a:
                    continue
                for j in parse_values(j_text):
                    if 1 <= j <= a:
                        points.append({"m": m, "a": a, "j": j})
    elif claim == "kk":
        if args.t is None:
            raise ValueError("claim 'kk' requires --t")
        for n in need("n"):
            for k in need("k"):
                if 0 <= args.t <= k <= n:
                    points.append({"n": n, "k": k, "t": args.t})
    elif claim == "mors":
        if args.t is None:
            raise ValueError("claim 'mors' requires --t")
        for n in need("n"):
            for l in need("k"):
                if n >= l > args.t >= 1:
                    points.append({"n": n, "l": l, "t": args.t})
    if not points:
        raise ValueError("no valid parameter points in the requested ranges")
    return points


class _Emitter:
    """Streams records in the requested format; remembers pass/fail counts."""

    def __init__(self, fmt: str, out) -> None:
        self.fmt = fmt
        self.out = out
        self.passed = 0
        self.failed = 0
        self._csv = None

    def emit(self, record: dict) -> None:
        if record["passed"]:
            self.passed += 1
        else:
            self.failed += 1
        if self.fmt == "json":
            safe = {key: _json_safe(record[key]) for key in RECORD_FIELDS}
            print(json.dumps(safe), file=self.out)
        elif self.fmt == "csv":
            if self._csv is None:
                self._csv = csv.DictWriter(self.out, fieldnames=RECORD_FIELDS)
                self._csv.writeheader()
            row = dict(record)
            row["attained_at"] = ";".join(
                "(" + ",".join(map(str, pair)) + ")"
                for pair in record["attained_at"]
            )
            row["passed"] = "true" if record["passed"] else "false"
            self._csv.writerow(row)
        else:
            attained = " ".join(
                "(" + ",".join(map(str, pair)) + ")"
                for pair in record["attained_at"][:8]
            )
            status = "pass" if record["passed"] else "FAIL"
            print(
                f"{record['claim']:<22} n={record['n']} k={record['k']} "
                f"i={record['i']} expected={record['expected']} "
                f"observed={record['observed']} attained={attained or '-'} "
                f"{status}",
                file=self.out,
            )

    def summary(self) -> None:
        total = self.passed + self.failed
        print(f"# summary: {self.passed}/{total} passed", file=sys.stderr)


def cmd_verify(args) -> int:
    claim = args.claim
    points = _verify_points(claim, args)
    emitter = _Emitter(args.format, sys.stdout)
    jobs = max(1, args.jobs)
    if jobs == 1:
        for point in points:
            for record in run_claim_point(claim, point, args.sample_count, args.seed):
                emitter.emit(record)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(run_claim_point, claim, p, args.sample_count, args.seed)
                for p in points
            ]
            if args.ordered:
                for fut in futures:
                    for record in fut.result():
                        emitter.emit(record)
            else:
                from concurrent.futures import as_completed

                for fut in as_completed(futures):
                    for record in fut.result():
                        emitter.emit(record)
    emitter.summary()
    return 0 if emitter.failed == 0 else 1


def cmd_rank(args) -> int:
    params = Params(args.n, args.k)
    elements = parse_set(args.set)
    if len(elements) != args.k:
        raise ValueError(f"set {elements} does not have k={args.k} elements")
    subset = KSubset.of(args.n, elements)
    r = rank(subset, Order.parse(args.order))
    if args.format == "json":
        print(json.dumps({"n": args.n, "k": args.k, "order": args.order,
                          "set": list(subset.elements), "rank": _json_safe(r)}))
    else:
        print(r)
    return 0


def cmd_unrank(args) -> int:
    params = Params(args.n, args.k)
    subset = unrank(args.rank, Order.parse(args.order), params)
    if args.format == "json":
        print(json.dumps({"n": args.n, "k": args.k, "order": args.order,
                          "rank": _json_safe(args.rank),
                          "set": list(subset.elements)}))
    else:
        print(",".join(map(str, subset.elements)))
    return 0


def cmd_segment(args) -> int:
    spec = SegmentSpec(Order.parse(args.order), Params(args.n, args.k), args.size)
    family = initial_segment(spec)
    if args.format == "json":
        print(json.dumps({
            "order": args.order, "n": args.n, "k": args.k, "size": args.size,
            "sets": [list(s.elements) for s in family],
        }))
    else:
        for s in family:
            print(",".join(map(str, s.elements)))
    return 0


def cmd_shadow(args) -> int:
    params = Params(args.n, args.k)
    t = args.t
    family = None
    if args.family:
        family = parse_family(args.family, params)
        m = len(family)
    elif args.segment:
        order_text, _, size_text = args.segment.partition(":")
        spec = SegmentSpec(Order.parse(order_text), params, int(size_text))
        family = initial_segment(spec)
        m = len(family)
    elif args.m is not None:
        m = args.m
    else:
        raise ValueError("provide one of --family, --segment, or --m")
    query = ShadowQuery(params, t, m)
    kk_value = kk_min_shadow(query)
    shadow_size = len(shadow(family, t)) if family is not None else kk_value
    lov = lovasz_bound(m, args.k, t)
    if args.format == "json":
        print(json.dumps({
            "n": args.n, "k": args.k, "t": t, "m": _json_safe(m),
            "shadow": _json_safe(shadow_size), "kk_min": _json_safe(kk_value),
            "lovasz": lov,
        }))
    else:
        print(f"shadow={shadow_size} kk_min={kk_value} lovasz={lov:.4f}")
    return 0


def cmd_maxb(args) -> int:
    value = max_compatible_b(args.n, args.k, args.a)
    if args.format == "json":
        print(json.dumps({"n": args.n, "k": args.k, "a": _json_safe(args.a),
                          "max_b": _json_safe(value)}))
    else:
        print(value)
    return 0


def cmd_extremal(args) -> int:
    pair = build_extremal_pair(args.n, args.k, args.i)
    a_size, b_size = pair.sizes
    crossing = is_cross_intersecting(pair.a_family, pair.b_family)
    if args.format == "json":
        payload = {
            "n": args.n, "k": args.k, "i": args.i,
            "a_size": _json_safe(a_size), "b_size": _json_safe(b_size),
            "product": _json_safe(a_size * b_size),
            "cross_intersecting": crossing,
        }
        if args.emit == "sets":
            payload["a_sets"] = [list(s.elements) for s in pair.a_family]
            payload["b_sets"] = [list(s.elements) for s in pair.b_family]
        print(json.dumps(payload))
    else:
        print(
            f"a_size={a_size} b_size={b_size} product={a_size * b_size} "
            f"cross_intersecting={str(crossing).lower()}"
        )
        if args.emit == "sets":
            for s in pair.a_family:
                print("A: " + ",".join(map(str, s.elements)))
            for s in pair.b_family:
                print("B: " + ",".join(map(str, s.elements)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crossfam",
        description=(
            "Exact combinatorics of cross-intersecting families: subset "
            "orders, shadows, product bounds, and verification sweeps."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, fmt_choices=("human", "json")):
        p.add_argument("--format", choices=fmt_choices, default=fmt_choices[0])

    p = sub.add_parser("rank", help="0-based rank of a k-set in an order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--order", default="lex")
    p.add_argument("--set", required=True, help="comma-separated 1-based elements")
    add_common(p)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("unrank", help="the k-set at a 0-based rank")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--order", default="lex")
    p.add_argument("--rank", type=int, required=True)
    add_common(p)
    p.set_defaults(func=cmd_unrank)

    p = sub.add_parser("segment", help="materialize an initial segment")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--order", default="lex")
    p.add_argument("--size", type=int, required=True)
    add_common(p)
    p.set_defaults(func=cmd_segment)

    p = sub.add_parser(
        "shadow", help="shadow size, exact minimum, and the real-exponent bound"
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--family", help="';'-separated set literals or @file")
    p.add_argument("--segment", help="ORDER:SIZE, e.g. colex:5")
    p.add_argument("--m", type=int, help="family size only (minimum-shadow query)")
    add_common(p)
    p.set_defaults(func=cmd_shadow)

    p = sub.add_parser("maxb", help="largest compatible partner-segment size")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--a", type=int, required=True, help="first segment size")
    add_common(p)
    p.set_defaults(func=cmd_maxb)

    p = sub.add_parser("extremal", help="build the extremal pair at parameter i")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--emit", choices=("sizes", "sets"), default="sizes")
    add_common(p)
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument("claim", choices=CLAIMS)
    p.add_argument("--n", help="value, range a..b, or comma list")
    p.add_argument("--k", help="value, range a..b, or comma list")
    p.add_argument("--i", help="value, range a..b, or comma list")
    p.add_argument("--t", type=int, help="shadow target size (kk, mors)")
    p.add_argument("--m", help="ground-set sizes (lemma7)")
    p.add_argument("--a", help="layer sizes (lemma7)")
    p.add_argument("--j", help="window sizes (lemma7)")
    p.add_argument("--sample-count", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--ordered", action="store_true",
                   help="emit records in parameter order even with --jobs > 1")
    add_common(p, fmt_choices=("json", "csv", "human"))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("inequalities", help="alias of 'verify inequalities'")
    p.add_argument("--n", required=True)
    p.add_argument("--k", required=True)
    p.add_argument("--sample-count", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--ordered", action="store_true")
    add_common(p, fmt_choices=("json", "csv", "human"))
    p.set_defaults(func=cmd_verify, claim="inequalities", i=None, t=None,
                   m=None, a=None, j=None)

    return parser


def main(argv=None) -> None:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        sys.exit(2)
    sys.exit(code)


if __name__ == "__main__":
    main()
