"""``form SOURCE``: parse a form and print degree, discriminant and content."""
from form_sources import parse_form_source
from utils.json_io import format_rational
from utils.output import emit


def run(args, settings):
    source = parse_form_source(args.source, settings.precision)
    form = source.form
    disc = form.discriminant() if form.degree >= 2 else None
    content = form.content()
    emit(
        args,
        {
            "source": source.label,
            "family": source.family,
            "n": source.n,
            "form": form.to_json(),
            "discriminant": None if disc is None else format_rational(disc),
            "content": format_rational(content),
        },
        [
            f"{source.label}: {form}",
            f"degree {form.degree}",
            f"discriminant {'-' if disc is None else format_rational(disc)}",
            f"content {format_rational(content)}",
        ],
    )


def register(subparsers):
    p = subparsers.add_parser("form", help="parse a form: family:n, JSON coefficients or a JSON file")
    p.add_argument("source")
    p.set_defaults(func=run)
