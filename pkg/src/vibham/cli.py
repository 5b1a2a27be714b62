"""Command-line front end; a thin client over the HTTP service.

Every subcommand sends one request to the service (in-process by default,
or a remote server via --url) and formats the JSON response.  The CLI does
no arithmetic of its own, so its numbers always agree with the library.

Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import IO, Any

from .client import ServiceClient, ServiceError


def _comma_floats(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _comma_ints(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vibham",
        description="Normalized vibrational Hamiltonians: invariant algebra, "
        "operator counting, and term-energy spectra.",
    )
    parser.add_argument(
        "--url",
        default=None,
        help="base URL of a running vibham service (default: run in-process)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="number of independent monomials up to an order")
    count.add_argument("--modes", type=int, required=True)
    count.add_argument("--order", type=int, required=True)
    count.add_argument("--json", action="store_true")

    lst = sub.add_parser("list", help="enumerate the monomial signatures, graded-lex")
    lst.add_argument("--modes", type=int, required=True)
    lst.add_argument("--order", type=int, required=True)
    lst.add_argument("--json", action="store_true")

    bracket = sub.add_parser("bracket", help="Poisson bracket of two polynomials")
    bracket.add_argument("--modes", type=int, required=True)
    bracket.add_argument("p", help="polynomial text, e.g. 'z1^2*zs2' or 's1'")
    bracket.add_argument("q")
    bracket.add_argument("--json", action="store_true")

    kernel = sub.add_parser("kernel", help="is a monomial annihilated by the adjoint?")
    kernel.add_argument("--modes", type=int, required=True)
    kernel.add_argument("--omega", type=_comma_floats, required=True, metavar="W1,W2,...")
    kernel.add_argument("--tol", type=float, default=1e-9)
    kernel.add_argument("monomial")
    kernel.add_argument("--json", action="store_true")

    resonance = sub.add_parser("resonance", help="search for an integer frequency relation")
    resonance.add_argument("--omega", type=_comma_floats, required=True, metavar="W1,W2,...")
    resonance.add_argument("--bound", type=int, required=True)
    resonance.add_argument("--tol", type=float, default=1e-9)
    resonance.add_argument("--json", action="store_true")

    energy = sub.add_parser("energy", help="term energy of one quantum state")
    _add_model_options(energy)
    energy.add_argument("--state", type=_comma_ints, required=True, metavar="N1,N2,...")
    energy.add_argument("--json", action="store_true")

    spectrum = sub.add_parser("spectrum", help="enumerate levels below a cutoff (CSV)")
    _add_model_options(spectrum)
    spectrum.add_argument("--cutoff", type=float, required=True, help="cm^-1")
    spectrum.add_argument("--box", type=_comma_ints, default=None, metavar="B1,B2,...")
    spectrum.add_argument("--json", action="store_true")

    check = sub.add_parser("check", help="run the seeded exact-algebra property suite")
    check.add_argument("--modes", type=int, required=True)
    check.add_argument("--order", type=int, required=True)
    check.add_argument("--seed", type=int, default=0)
    check.add_argument("--samples", type=int, default=40)
    check.add_argument("--json", action="store_true")

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)

    return parser


def _add_model_options(sub: argparse.ArgumentParser) -> None:
    source = sub.add_mutually_exclusive_group(required=True)
    source.add_argument("--builtin", help="builtin model name, e.g. cloh")
    source.add_argument("--model", help="path to a molecule model file")
    sub.add_argument(
        "--delta",
        type=float,
        choices=[0.0, 0.5],
        default=None,
        help="override the quantum-number offset convention",
    )


def _model_payload(args: argparse.Namespace) -> dict[str, Any]:
    payload: dict[str, Any] = {"delta": args.delta}
    if args.builtin is not None:
        payload["builtin"] = args.builtin
    else:
        with open(args.model, "r", encoding="utf-8") as handle:
            payload["model_text"] = handle.read()
    return payload


def _emit_json(body: Any, stdout: IO[str]) -> None:
    print(json.dumps(body, sort_keys=True), file=stdout)


def run(argv: list[str], stdout: IO[str] | None = None, stderr: IO[str] | None = None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        client = ServiceClient(args.url)
        return _dispatch(args, client, stdout, stderr)
    except ServiceError as exc:
        print(f"error: {exc.detail}", file=stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=stderr)
        return 1


def _dispatch(
    args: argparse.Namespace, client: ServiceClient, stdout: IO[str], stderr: IO[str]
) -> int:
    if args.command == "count":
        body = client.post("/count", {"modes": args.modes, "order": args.order})
        if args.json:
            _emit_json(body, stdout)
        else:
            print(body["count"], file=stdout)
        return 0

    if args.command == "list":
        body = client.post("/signatures", {"modes": args.modes, "order": args.order})
        if args.json:
            _emit_json(body, stdout)
        else:
            print(",".join(f"r{k + 1}" for k in range(args.modes)), file=stdout)
            for sig in body["signatures"]:
                print(",".join(str(r) for r in sig), file=stdout)
        return 0

    if args.command == "bracket":
        body = client.post("/bracket", {"modes": args.modes, "p": args.p, "q": args.q})
        if args.json:
            _emit_json(body, stdout)
        else:
            print(body["result"], file=stdout)
        return 0

    if args.command == "kernel":
        body = client.post(
            "/kernel",
            {
                "modes": args.modes,
                "omega": args.omega,
                "monomial": args.monomial,
                "tol": args.tol,
            },
        )
        if args.json:
            _emit_json(body, stdout)
        else:
            print("true" if body["in_kernel"] else "false", file=stdout)
        return 0

    if args.command == "resonance":
        body = client.post(
            "/resonance", {"omega": args.omega, "bound": args.bound, "tol": args.tol}
        )
        if args.json:
            _emit_json(body, stdout)
        elif body["found"]:
            print(",".join(str(v) for v in body["vector"]), file=stdout)
        else:
            print("none", file=stdout)
        return 0

    if args.command == "energy":
        body = client.post(
            "/energy", {"model": _model_payload(args), "state": args.state}
        )
        if args.json:
            _emit_json(body, stdout)
        else:
            print(f"{body['energy']:.4f}", file=stdout)
        return 0

    if args.command == "spectrum":
        body = client.post(
            "/spectrum",
            {"model": _model_payload(args), "cutoff": args.cutoff, "box": args.box},
        )
        if args.json:
            _emit_json(body, stdout)
        else:
            print(",".join(f"n{k + 1}" for k in range(body["modes"])) + ",energy_cm1", file=stdout)
            for level in body["levels"]:
                row = ",".join(str(q) for q in level["state"])
                print(f"{row},{level['energy']:.4f}", file=stdout)
        top = "n/a" if body["max_energy"] is None else f"{body['max_energy']:.4f}"
        print(f"levels: {body['count']}  max_energy_cm1: {top}", file=stderr)
        return 0

    if args.command == "check":
        body = client.post(
            "/check",
            {
                "modes": args.modes,
                "order": args.order,
                "seed": args.seed,
                "samples": args.samples,
            },
        )
        if args.json:
            _emit_json(body, stdout)
        else:
            for result in body["results"]:
                status = "PASS" if result["passed"] else "FAIL"
                print(f"{status} {result['name']}: {result['detail']}", file=stdout)
        return 0 if body["all_passed"] else 1

    if args.command == "serve":
        import uvicorn

        from .service import create_app

        uvicorn.run(create_app(), host=args.host, port=args.port)
        return 0

    raise AssertionError(f"unhandled command {args.command!r}")


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
