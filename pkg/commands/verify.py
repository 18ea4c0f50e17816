"""``verify STATEMENT``: stream verification records; exit 1 on any failure."""
from errors import EXIT_OK, EXIT_VERIFICATION_FAILED
from utils.output import emit_json_line, emit_text
from verification import STATEMENTS, run_many, summarize


def run(args, settings):
    ids = list(STATEMENTS) if args.statement == "all" else [args.statement]
    records = []
    for rec in run_many(ids, settings, lo=args.min, hi=args.max, progress=args.progress):
        records.append(rec)
        if args.json:
            emit_json_line(rec.to_json())
        elif args.verbose or not rec.passed:
            emit_text(str(rec))
    summary = summarize(records)
    if args.json:
        emit_json_line({"summary": summary})
    else:
        for sid, counts in summary.items():
            emit_text(f"{sid}: {counts['pass']} passed, {counts['fail']} failed")
    failed = any(c["fail"] for c in summary.values())
    return EXIT_VERIFICATION_FAILED if failed else EXIT_OK


def register(subparsers):
    p = subparsers.add_parser("verify", help="check a theorem or identity over a range of n")
    p.add_argument("statement", choices=[*STATEMENTS, "all"])
    p.add_argument("--min", type=int, default=None, help="smallest n (default per statement)")
    p.add_argument("--max", type=int, default=None, help="largest n (default per statement)")
    p.add_argument("--progress", action="store_true", help="show a progress bar on stderr")
    p.set_defaults(func=run)
