"""``table cos-sin|chebyshev``: recompute the invariant tables next to the reference values."""
from errors import EXIT_OK, EXIT_VERIFICATION_FAILED
from utils.output import emit
from utils.pool import ordered_map
from verification import TABLES, compare_cell, table_cell, table_rows


def _cell_task(args):
    family, n, settings = args
    return table_cell(family, n, settings)


def _fmt(v):
    return "inf" if v is None else f"{v:.6f}"


def _delta(d):
    return "-" if d is None else f"{d:.1e}"


def run(args, settings):
    families = TABLES[args.which]
    rows = table_rows(args.which, settings.data_dir)
    tasks = [(family, row["n"], settings) for row in rows for family in families]
    cells = iter(ordered_map(_cell_task, tasks, jobs=settings.jobs, desc=args.which, progress=args.progress))

    out_rows = []
    lines = [f"{'n':>3}  {'F':<4} {'W':>5} {'A':>10} {'A ref':>10} {'dA':>8} {'C':>10} {'C ref':>10} {'dC':>8}"]
    failed = False
    for row in rows:
        entry = {"n": row["n"]}
        for family in families:
            found = next(cells)
            deltas, witness = compare_cell(found, row[family])
            failed = failed or bool(witness)
            ref = row[family]
            entry[family] = {"found": found, "reference": ref, "deltas": deltas, "ok": not witness}
            w = "-" if found["W"] is None else str(found["W"])
            lines.append(
                f"{row['n']:>3}  {family:<4} {w:>5} {_fmt(found['A']):>10} {_fmt(ref.get('A')):>10} "
                f"{_delta(deltas.get('A')):>8} "
                f"{_fmt(found['C']):>10} {_fmt(ref.get('C')):>10} "
                f"{_delta(deltas.get('C')):>8}"
                + ("" if not witness else "  MISMATCH")
            )
        out_rows.append(entry)
    emit(args, {"table": args.which, "rows": out_rows}, lines)
    return EXIT_VERIFICATION_FAILED if failed else EXIT_OK


def register(subparsers):
    p = subparsers.add_parser("table", help="reproduce an invariant table with per-cell deltas")
    p.add_argument("which", choices=tuple(TABLES))
    p.add_argument("--progress", action="store_true")
    p.set_defaults(func=run)
