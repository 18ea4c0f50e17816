"""``invariants SOURCE``: group, lattice determinant, W, A and C = W*A."""
from autgroup.search import aut_search
from invariants.counting import count_represented
from invariants.report import c_f
from form_sources import parse_form_source
from utils.output import emit


def run(args, settings):
    source = parse_form_source(args.source, settings.precision)
    aut = None
    if source.form.degree >= 3:
        aut = aut_search(
            source.form,
            precision=settings.precision,
            denom_bound=settings.denom_bound,
            roots=source.roots,
            galois=source.galois,
        )
    report = c_f(
        source.form,
        family=source.family,
        aut=aut,
        roots=source.roots,
        rel_tol=settings.tol,
        precision=settings.precision,
        denom_bound=settings.denom_bound,
    )
    out = report.to_json()
    lines = [f"{source.label}: {source.form}"]
    if report.group_class is not None:
        lines.append(f"Aut F: {report.group_class.value}, order {report.aut_order}; lattice determinant m = {report.m}")
        lines.append(f"W = {report.W if report.W is not None else 'not computed'}")
    if report.divergent:
        lines.append("A = infinity (real root of high multiplicity)")
    else:
        lines.append(f"A = {report.A:.6f} +- {report.A_err:.1e}")
    if report.C is not None:
        lines.append(f"C = {report.C:.6f}")
    if report.c_limit is not None:
        lines.append(f"limit of C along this residue class: {report.c_limit:.6f}")
    if report.scope_note:
        lines.append(f"note: {report.scope_note}")

    if args.count is not None:
        count = count_represented(source.form, args.count, jobs=settings.jobs)
        out["count"] = {"Z": args.count, "R": count}
        lines.append(f"R({args.count}) = {count}")
        if report.C:
            ratio = count / args.count ** (2 / source.form.degree) / report.C
            out["count"]["ratio"] = ratio
            lines.append(f"R(Z) Z^(-2/d) / C = {ratio:.4f}")
    emit(args, out, lines)


def register(subparsers):
    p = subparsers.add_parser("invariants", help="W, A and C for a form")
    p.add_argument("source")
    p.add_argument("--count", type=int, default=None, metavar="Z", help="also count |h| <= Z represented (definite forms)")
    p.set_defaults(func=run)
