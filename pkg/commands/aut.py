"""``aut SOURCE``: Aut F and Aut|F| by root search, bounded brute force or the cubic formula."""
from autgroup.closed_forms import xiao_cubic_aut
from autgroup.groups import classify_group
from autgroup.oracles import expected_aut, in_scope
from autgroup.search import DEFAULT_BRUTE_HEIGHT, aut_brute_force, aut_search
from form_sources import parse_form_source
from utils.output import emit


def _cubic(args, source):
    group = xiao_cubic_aut(source.form)
    if group is None:
        emit(args, {"method": "cubic", "group": None}, f"{source.label}: discriminant is not a square, Aut is trivial")
        return
    emit(
        args,
        {"method": "cubic", "group": group.to_json()},
        [f"{source.label}: {source.form}", f"Aut = {group}  ({classify_group(group).value})"],
    )


def run(args, settings):
    source = parse_form_source(args.source, settings.precision)
    if args.method == "cubic":
        return _cubic(args, source)
    if args.method == "brute":
        result = aut_brute_force(source.form, args.height)
    else:
        result = aut_search(
            source.form,
            precision=settings.precision,
            denom_bound=settings.denom_bound,
            roots=source.roots,
            galois=source.galois,
            jobs=settings.jobs,
        )
    out = result.to_json()
    cls, abs_cls = result.classes
    lines = [
        f"{source.label}: {source.form}",
        f"Aut F   = {result.aut}  ({cls.value}, order {result.aut.order})",
        f"Aut |F| = {result.aut_abs}  ({abs_cls.value}, order {result.aut_abs.order})",
    ]
    if source.family and in_scope(source.family, source.n):
        expected = expected_aut(source.family, source.n)
        out["expected"] = expected.to_json()
        out["matches_expected"] = expected.matches(result)
        printed, printed_abs = expected.printed_labels
        lines.append(f"tabulated: {printed} / {printed_abs}, match: {'yes' if expected.matches(result) else 'NO'}")
    emit(args, out, lines)


def register(subparsers):
    p = subparsers.add_parser("aut", help="automorphism groups of a form")
    p.add_argument("source")
    p.add_argument("--method", choices=("search", "brute", "cubic"), default="search")
    p.add_argument("--height", type=int, default=DEFAULT_BRUTE_HEIGHT, help="entry bound for --method brute")
    p.set_defaults(func=run)
