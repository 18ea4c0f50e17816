"""``sweep``: every finite sweep at its default range, saved to one JSON file."""
from errors import EXIT_OK, EXIT_VERIFICATION_FAILED
from utils.json_io import save_json
from utils.output import emit
from verification import STATEMENTS, run_many, summarize


def run(args, settings):
    ids = args.only or [sid for sid, stmt in STATEMENTS.items() if stmt.finite_sweep]
    records = list(run_many(ids, settings, progress=args.progress))
    summary = summarize(records)
    save_json(args.out, {"statements": ids, "summary": summary, "records": [r.to_json() for r in records]})
    lines = [f"{sid}: {c['pass']} passed, {c['fail']} failed" for sid, c in summary.items()]
    lines.append(f"records written to {args.out}")
    emit(args, {"out": args.out, "summary": summary}, lines)
    return EXIT_VERIFICATION_FAILED if any(c["fail"] for c in summary.values()) else EXIT_OK


def register(subparsers):
    finite = [sid for sid, stmt in STATEMENTS.items() if stmt.finite_sweep]
    p = subparsers.add_parser("sweep", help="run the finite sweeps and save every record")
    p.add_argument("--out", default="sweep_results.json", help="output JSON path")
    p.add_argument("--only", nargs="+", choices=finite, default=None, help="restrict to these sweeps")
    p.add_argument("--progress", action="store_true")
    p.set_defaults(func=run)
