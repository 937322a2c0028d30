"""Command-line client for the HTTP service.

Every subcommand is a thin shim: read files, make one request, print
the response, map failures to a nonzero exit code. By default requests
run against an in-process application instance (no server needed);
--url points the same subcommands at a remote server instead.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import os
import sys

import httpx

_LEMMAS = ("small-angle", "island", "profile", "good-cell")
_GENERATORS = (
    "perturbed-regular-polygon", "flat-convex-set", "perturbed-grid-p0",
    "random-perturbed-grid", "equidistant-convex-grid", "uniform-square",
    "dense-set", "island-fixture", "grid-fill-fixture", "figure9",
)
_STRATEGIES = (
    "alternate-convex", "flat-convex", "one-crossing", "island-wedge",
    "grid-five-eighths", "grid-fill", "dense", "random",
)


def _request(url: str | None, method: str, path: str, body=None) -> httpx.Response:
    if url:
        with httpx.Client(base_url=url, timeout=None) as client:
            return client.request(method, path, json=body)

    async def go() -> httpx.Response:
        from .service import create_app
        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(transport=transport, timeout=None,
                                     base_url="http://mstcross.local") as client:
            return await client.request(method, path, json=body)

    return asyncio.run(go())


def _call(args, method: str, path: str, body=None) -> dict | list:
    resp = _request(args.url, method, path, body)
    try:
        payload = resp.json()
    except ValueError:
        payload = {"error": "BadResponse", "detail": resp.text}
    if resp.status_code >= 400:
        print(json.dumps(payload, indent=2), file=sys.stderr)
        raise SystemExit(1)
    return payload


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as f:
        return f.read()


def _points_body(args) -> dict:
    body: dict = {"text": _read_text(args.points)}
    labels_file = getattr(args, "labels_file", None)
    if labels_file:
        body["grid_labels"] = json.loads(_read_text(labels_file))
    return body


def _print(payload) -> None:
    print(json.dumps(payload, indent=2))


def _cmd_gen(args) -> int:
    body = {"generator": args.generator, "seed": args.seed,
            "alpha": args.alpha, "jitter": args.jitter,
            "wedge_deg": args.wedge_deg, "min_radius": args.min_radius}
    for field in ("n", "n1", "n2", "k"):
        value = getattr(args, field)
        if value is not None:
            body[field] = value
    payload = _call(args, "POST", "/generate", body)
    if args.json:
        _print(payload)
        return 0
    text = payload["points"]["text"]
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
        if payload.get("coloring"):
            with open(args.out + ".coloring.txt", "w") as f:
                f.write(payload["coloring"] + "\n")
    else:
        sys.stdout.write(text)
    if args.labels:
        if payload.get("grid_labels") is None:
            print(f"generator {args.generator} has no grid labels",
                  file=sys.stderr)
            return 1
        if not args.out:
            print("--labels needs --out (the sidecar sits next to the file)",
                  file=sys.stderr)
            return 1
        sidecar = args.out + ".labels.json"
        with open(sidecar, "w") as f:
            json.dump(payload["grid_labels"], f, indent=2, sort_keys=True)
            f.write("\n")
    return 0


def _cmd_mst(args) -> int:
    body = {"points": _points_body(args)}
    if args.subset is not None:
        body["subset"] = args.subset
    _print(_call(args, "POST", "/mst", body))
    return 0


def _coloring_arg(args) -> str:
    if args.coloring_file:
        return _read_text(args.coloring_file).strip()
    if args.coloring is None:
        print("need --coloring or --coloring-file", file=sys.stderr)
        raise SystemExit(2)
    return args.coloring


def _cmd_cross(args) -> int:
    body = {"points": _points_body(args), "coloring": _coloring_arg(args),
            "min_over_msts": args.min, "cap": args.cap}
    payload = _call(args, "POST", "/cross", body)
    if not args.dump_trees:
        payload = {k: v for k, v in payload.items()
                   if k not in ("red_tree", "blue_tree")}
    _print(payload)
    return 0


def _cmd_color(args) -> int:
    body = {"points": _points_body(args), "strategy": args.strategy,
            "seed": args.seed, "wedge_count": args.wedge_count,
            "alpha": args.alpha}
    if args.r is not None:
        body["r"] = args.r
    if args.k is not None:
        body["k"] = args.k
    if args.inner is not None:
        body["inner"] = args.inner
    payload = _call(args, "POST", "/color", body)
    if args.coloring_out:
        with open(args.coloring_out, "w") as f:
            f.write(payload["coloring"] + "\n")
    _print(payload)
    return 0


def _cmd_oracle(args) -> int:
    body = {"points": _points_body(args), "nongeneric": args.nongeneric,
            "cap": args.cap, "workers": args.workers}
    if args.max_n is not None:
        body["max_n"] = args.max_n
    _print(_call(args, "POST", "/oracle", body))
    return 0


def _cmd_verify(args) -> int:
    body = {"lemma": args.lemma, "seed": args.seed}
    if args.trials is not None:
        body["trials"] = args.trials
    payload = _call(args, "POST", "/verify", body)
    _print(payload)
    return 0 if payload["ok"] else 1


def _cmd_experiment(args) -> int:
    if args.list:
        _print(_call(args, "GET", "/experiments"))
        return 0
    if not args.name:
        print("need --name (or --list)", file=sys.stderr)
        return 2
    body = {"name": args.name, "seed": args.seed, "workers": args.workers}
    if args.n is not None:
        body["ns"] = args.n
    if args.trials is not None:
        body["trials"] = args.trials
    payload = _call(args, "POST", "/experiment", body)
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        with open(os.path.join(args.out, f"{args.name}.csv"), "w",
                  newline="") as f:
            f.write(payload["csv_text"])
        with open(os.path.join(args.out, f"{args.name}.json"), "w") as f:
            f.write(payload["json_text"])
    sys.stdout.write(payload["json_text"])
    if not payload["ok"]:
        for failure in payload["failures"][:20]:
            print(failure, file=sys.stderr)
        return 1
    return 0


def _cmd_serve(args) -> int:
    import uvicorn
    uvicorn.run("mstcross.service.app:app", host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mstcross",
        description="Red-blue MST crossings: generators, colorings, exact "
                    "oracle, lemma checks, and experiment sweeps.")
    parser.add_argument("--url", default=None,
                        help="talk to a running server instead of in-process")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a generated point set as text")
    p.add_argument("--generator", "-g", required=True, choices=_GENERATORS)
    p.add_argument("--n", type=int)
    p.add_argument("--n1", type=int)
    p.add_argument("--n2", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--alpha", default="2")
    p.add_argument("--jitter", default="1/64")
    p.add_argument("--wedge-deg", default="18/5")
    p.add_argument("--min-radius", default="3")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write the text here instead of stdout")
    p.add_argument("--labels", action="store_true",
                   help="write <out>.labels.json with the grid rows")
    p.add_argument("--json", action="store_true",
                   help="print the raw response instead of the text format")
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("mst", help="minimum spanning tree as JSON")
    p.add_argument("points", help="point-set text file, or - for stdin")
    p.add_argument("--subset", type=int, nargs="+")
    p.set_defaults(fn=_cmd_mst)

    p = sub.add_parser("cross", help="count red/blue MST crossings")
    p.add_argument("points", help="point-set text file, or - for stdin")
    p.add_argument("--coloring", help="inline string over {R,B,D}")
    p.add_argument("--coloring-file", help="file holding the coloring line")
    p.add_argument("--min", action="store_true",
                   help="minimum over MST choices (non-generic variant)")
    p.add_argument("--cap", type=int, default=100_000)
    p.add_argument("--dump-trees", action="store_true",
                   help="include both tree serializations in the output")
    p.set_defaults(fn=_cmd_cross)

    p = sub.add_parser("color", help="run a coloring strategy")
    p.add_argument("points", help="point-set text file, or - for stdin")
    p.add_argument("--strategy", required=True, choices=_STRATEGIES)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--wedge-count", type=int, default=100)
    p.add_argument("--alpha", default="2")
    p.add_argument("--r", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--inner", type=int, nargs="+")
    p.add_argument("--labels-file", help="grid-labels sidecar JSON")
    p.add_argument("--coloring-out", help="also write the bare coloring line")
    p.set_defaults(fn=_cmd_color)

    p = sub.add_parser("oracle", help="exact crossing number by brute force")
    p.add_argument("points", help="point-set text file, or - for stdin")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--nongeneric", action="store_true",
                   help="max over colorings of the min over MST choices")
    p.add_argument("--cap", type=int, default=100_000)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("verify", help="run a lemma sampler")
    p.add_argument("--lemma", required=True, choices=_LEMMAS)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("experiment", help="run a registered experiment")
    p.add_argument("--name")
    p.add_argument("--list", action="store_true",
                   help="list registered experiments and exit")
    p.add_argument("--n", type=int, nargs="+")
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="directory for <name>.csv and <name>.json")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(fn=_cmd_experiment)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(fn=_cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    raise SystemExit(main())
