"""Command-line front end.

Every subcommand builds a service request model and renders the service
response; by default the service handlers run in process, and with
``--server URL`` the same requests go over HTTP to a running instance.
Exit codes: 0 success, 1 domain or I/O error, 2 usage error, 3 a
computation contradicted a property that must hold.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import DomainError, TheoremViolationError
from .service import schemas as sc
from .service.app import ROUTES


class UsageError(Exception):
    pass


def _natural(text: str) -> int:
    # isdigit alone admits unicode digits that int() rejects
    if not (text.isascii() and text.isdigit()):
        raise argparse.ArgumentTypeError("expected a decimal natural, got %r" % text)
    return int(text)


def _at_least(minimum: int):
    def parse(text: str) -> int:
        value = _natural(text)
        if value < minimum:
            raise argparse.ArgumentTypeError("expected an integer >= %d, got %s" % (minimum, text))
        return value

    return parse


def _default_jobs() -> int:
    return os.cpu_count() or 1


def _call(args: argparse.Namespace, path: str, payload):
    """Dispatch a request model: in process by default, HTTP with --server."""
    if args.server:
        return _post(args.server, path, payload)
    handler, _request_cls = ROUTES[path]
    return handler(payload)


def _post(server: str, path: str, payload):
    import httpx

    url = server.rstrip("/") + path
    try:
        response = httpx.post(url, json=payload.model_dump(), timeout=None)
    except httpx.HTTPError as exc:
        raise DomainError("cannot reach server at %s: %s" % (url, exc)) from exc
    if response.status_code >= 400:
        _raise_remote(response)
    return response.json()


def _raise_remote(response) -> None:
    try:
        body = response.json()
    except ValueError:
        body = {}
    detail = body.get("detail", response.text)
    kind = body.get("kind", "")
    if response.status_code == 422:
        raise UsageError("invalid request: %s" % detail)
    if kind == "theorem-violation":
        raise TheoremViolationError(str(detail))
    raise DomainError(str(detail))


def _model(response, cls):
    """Remote responses arrive as dicts; local ones are already models."""
    if isinstance(response, cls):
        return response
    return cls.model_validate(response)


# -- subcommands ---------------------------------------------------------


def cmd_gamma(args: argparse.Namespace) -> int:
    req = sc.GammaRequest(a=args.a, b=args.b, solve=args.solve)
    resp = _model(_call(args, "/v1/gamma", req), sc.GammaResponse)
    print(resp.gamma)
    if args.solve:
        print("reduced: %d %d (gcd %d)" % (resp.reduced_a, resp.reduced_b, resp.common_divisor))
        if resp.branch == "divides":
            print("branch: divides, tag 1 with no inverse needed")
        elif resp.branch == "first-odd":
            print("branch: first-odd, theta(b, a) = %d" % resp.theta)
        else:
            print("branch: first-even, theta(a, b) = %d" % resp.theta)
        s = resp.solution
        print(
            "solution: equation %d, x = %d, y = %d (for the reduced pair)"
            % (s.equation, s.x, s.y)
        )
    return 0


def cmd_theta(args: argparse.Namespace) -> int:
    req = sc.ThetaRequest(a=args.a, b=args.b)
    resp = _model(_call(args, "/v1/theta", req), sc.ThetaResponse)
    print(resp.theta)
    return 0


def cmd_delta(args: argparse.Namespace) -> int:
    terms = None
    if args.family == "explicit":
        if not args.file:
            raise DomainError("--family explicit requires --file")
        from .sequences import load_explicit

        terms = list(load_explicit(args.file).terms)
    elif args.file:
        raise DomainError("--file is only valid with --family explicit")
    req = sc.DeltaRequest(
        family=args.family,
        k=args.k,
        a=args.a,
        b=args.b,
        r=args.r,
        terms=terms,
        start=args.start,
        count=args.count,
        include_runs=args.runs,
    )
    resp = _model(_call(args, "/v1/delta", req), sc.DeltaResponse)
    records = resp.records
    if args.format == "plain":
        print(",".join(str(r.gamma) for r in records))
        if args.runs:
            print("runs: " + " ".join("%d:%d" % (r.tag, r.length) for r in resp.runs))
    elif args.format == "csv":
        print("n,a_n,a_next,gcd,gamma")
        for r in records:
            print("%d,%d,%d,%d,%d" % (r.n, r.term, r.next_term, r.gcd, r.gamma))
        if args.runs:
            print("# runs: " + " ".join("%d:%d" % (r.tag, r.length) for r in resp.runs))
    else:  # jsonl
        for r in records:
            print(
                json.dumps(
                    {"n": r.n, "a_n": r.term, "a_next": r.next_term, "gcd": r.gcd, "gamma": r.gamma},
                    separators=(",", ":"),
                )
            )
        if args.runs:
            print(
                json.dumps(
                    {"runs": [{"tag": r.tag, "length": r.length} for r in resp.runs]},
                    separators=(",", ":"),
                )
            )
    return 0


def cmd_period(args: argparse.Namespace) -> int:
    req = sc.PeriodRequest(k=args.k, window=args.window)
    resp = _model(_call(args, "/v1/period", req), sc.PeriodResponse)
    print(json.dumps(resp.model_dump(), separators=(",", ":")))
    return 0


def cmd_mk(args: argparse.Namespace) -> int:
    req = sc.MkRequest(k=args.k)
    resp = _model(_call(args, "/v1/mk", req), sc.MkResponse)
    print(json.dumps(resp.model_dump(), separators=(",", ":")))
    return 0


def cmd_density(args: argparse.Namespace) -> int:
    req = sc.DensityRequest(
        x_max=args.max, samples=args.samples, coprime=args.coprime, jobs=args.jobs
    )
    resp = _model(_call(args, "/v1/density", req), sc.DensityResponse)
    if args.csv or args.svg:
        from .density import emit_csv, emit_svg

        samples = [m.to_sample() for m in resp.samples]
        if args.csv:
            emit_csv(samples, args.csv)
        if args.svg:
            emit_svg(samples, args.svg)
    print(resp.final_ratio)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    req = sc.VerifyRequest(limit=args.max, jobs=args.jobs)
    resp = _model(_call(args, "/v1/verify", req), sc.VerifyResponse)
    for c in resp.uniqueness_counterexamples:
        print(
            json.dumps(
                {
                    "type": "counterexample",
                    "check": "uniqueness",
                    "a": c.a,
                    "b": c.b,
                    "solutions": [
                        {"equation": s.equation, "x": s.x, "y": s.y} for s in c.solutions
                    ],
                },
                separators=(",", ":"),
            )
        )
    for m in resp.equivalence_mismatches:
        print(
            json.dumps(
                {
                    "type": "counterexample",
                    "check": "criterion-vs-oracle",
                    "a": m.a,
                    "b": m.b,
                    "criterion": m.criterion,
                    "oracle": m.oracle,
                },
                separators=(",", ":"),
            )
        )
    print(
        json.dumps(
            {
                "type": "summary",
                "check": "uniqueness",
                "limit": resp.limit,
                "pairs_checked": resp.uniqueness_pairs_checked,
                "counterexamples": len(resp.uniqueness_counterexamples),
            },
            separators=(",", ":"),
        )
    )
    print(
        json.dumps(
            {
                "type": "summary",
                "check": "criterion-vs-oracle",
                "limit": resp.limit,
                "pairs_checked": resp.equivalence_pairs_checked,
                "mismatches": len(resp.equivalence_mismatches),
            },
            separators=(",", ":"),
        )
    )
    if not resp.ok:
        raise TheoremViolationError(
            "verification found counterexamples up to %d" % resp.limit
        )
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


# -- parser --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diopair",
        description="Classify pairs by which of the two complementary "
        "equations a*x + b*y (+1) = (a-1)(b-1)/2 they solve, and analyze "
        "tag patterns along sequences.",
    )
    parser.add_argument(
        "--server",
        metavar="URL",
        default=None,
        help="send requests to a running service instead of computing in process",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gamma", help="tag (1 or 2) of a pair")
    p.add_argument("a", type=_at_least(1))
    p.add_argument("b", type=_at_least(1))
    p.add_argument("--solve", action="store_true", help="also show the reduced pair, branch, and unique solution")
    p.set_defaults(fn=cmd_gamma)

    p = sub.add_parser("theta", help="inverse of a/d modulo b/d")
    p.add_argument("a", type=_at_least(1))
    p.add_argument("b", type=_at_least(1))
    p.set_defaults(fn=cmd_theta)

    p = sub.add_parser("delta", help="tags of consecutive pairs of a sequence")
    p.add_argument(
        "--family",
        required=True,
        choices=["fibonacci", "power", "ceilpow2", "ap", "sgp", "rec2", "explicit"],
    )
    p.add_argument("--k", type=_at_least(1))
    p.add_argument("--a", type=_at_least(1))
    p.add_argument("--b", type=_at_least(1))
    p.add_argument("--r", type=_at_least(1))
    p.add_argument("--file", help="explicit terms, one decimal natural per line")
    p.add_argument("--start", type=_at_least(1), default=1)
    p.add_argument("--count", type=_at_least(1), default=1)
    p.add_argument("--format", choices=["plain", "csv", "jsonl"], default="plain")
    p.add_argument("--runs", action="store_true", help="append the run-length encoding")
    p.set_defaults(fn=cmd_delta)

    p = sub.add_parser("period", help="period of the tag row (tag(k, n))_n")
    p.add_argument("--k", type=_at_least(1), required=True)
    p.add_argument("--window", type=_at_least(1), default=None)
    p.set_defaults(fn=cmd_period)

    p = sub.add_parser("mk", help="alternation threshold of the power sequence n^k")
    p.add_argument("--k", type=_at_least(1), required=True)
    p.set_defaults(fn=cmd_mk)

    p = sub.add_parser("density", help="share of pairs up to x solving equation (1)")
    p.add_argument("--max", type=_at_least(1), required=True)
    p.add_argument("--samples", type=_at_least(1), default=1)
    p.add_argument("--coprime", action="store_true", help="restrict to coprime pairs")
    p.add_argument("--csv", metavar="PATH")
    p.add_argument("--svg", metavar="PATH")
    p.add_argument("--jobs", type=_at_least(1), default=_default_jobs())
    p.set_defaults(fn=cmd_density)

    p = sub.add_parser("verify", help="exhaustive uniqueness and criterion-vs-oracle sweep")
    p.add_argument("--max", type=_at_least(2), required=True)
    p.add_argument("--jobs", type=_at_least(1), default=_default_jobs())
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(fn=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except DomainError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except TheoremViolationError as exc:
        print("theorem violation: %s" % exc, file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
