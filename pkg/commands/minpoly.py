"""``minpoly cos|sin n``: Psi_n or Pi_n as a polynomial and as a binary form."""
from algebra.binary_form import homogenize
from families.trig_minpoly import c_of_n, psi
from utils.output import emit


def run(args, settings):
    n = args.n
    index = n if args.kind == "cos" else c_of_n(n)
    p = psi(index)
    form = homogenize(p, p.degree)
    label = f"Psi_{n}" if args.kind == "cos" else f"Pi_{n} = Psi_{index}"
    emit(
        args,
        {"kind": args.kind, "n": n, "psi_index": index, "degree": p.degree, "poly": str(p), "form": form.to_json()},
        [f"{label}: {p}", f"degree {p.degree}", f"form: {form}"],
    )


def register(subparsers):
    p = subparsers.add_parser("minpoly", help="minimal polynomial of 2cos(2pi/n) or 2sin(2pi/n)")
    p.add_argument("kind", choices=("cos", "sin"))
    p.add_argument("n", type=int)
    p.set_defaults(func=run)
