"""``chebyshev T|U|vtilde|utilde n``: the polynomial, its form, and the Psi factorization."""
from families.chebyshev import chebyshev_T, chebyshev_U, factor_u_tilde, factor_v_tilde, t_form, u_form, u_tilde, v_tilde
from utils.output import emit


def run(args, settings):
    n = args.n
    kind = args.kind
    out = {"kind": kind, "n": n}
    lines = []
    if kind in ("T", "U"):
        poly = chebyshev_T(n) if kind == "T" else chebyshev_U(n)
        form = t_form(n) if kind == "T" else u_form(n)
        out["poly"] = str(poly)
        lines.append(f"{kind}_{n}(x) = {poly}")
    else:
        form = v_tilde(n) if kind == "vtilde" else u_tilde(n)
        fac = factor_v_tilde(n) if kind == "vtilde" else factor_u_tilde(n)
        out["factorization"] = fac.to_json()
        lines.append(f"{kind}_{n} = {fac}")
        lines.extend(f"  {f}" for f in fac.factors)
    out["form"] = form.to_json()
    lines.insert(1, f"form: {form}")
    emit(args, out, lines)


def register(subparsers):
    p = subparsers.add_parser("chebyshev", help="Chebyshev polynomials, their forms and the tilde factorizations")
    p.add_argument("kind", choices=("T", "U", "vtilde", "utilde"))
    p.add_argument("n", type=int)
    p.set_defaults(func=run)
