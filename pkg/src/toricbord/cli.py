"""Command-line front end: ``toricbord <verb> ...``.

Exit codes: 0 on success, 1 when a verification finds a counterexample (or
the two engines disagree), 2 on usage or I/O errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from toricbord import bordism, engines, families, sweeps, wallring
from toricbord.quasitoric import CharacteristicPair, connected_sum, su_check, validate

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _family_from_flags(args):
    tag = args.family
    try:
        if tag == "cpn":
            return families.cpn(args.n)
        if tag in ("L", "tildeL", "tildeN"):
            builder = {"L": families.L, "tildeL": families.tildeL, "tildeN": families.tildeN}[tag]
            return builder(args.n1, args.n2)
        if tag == "proj":
            degrees = [int(d) for d in (args.degrees or "").split(",") if d.strip()]
            return families.proj_sum_line_bundles(args.n1, degrees)
        if tag == "product":
            if not args.factor or len(args.factor) < 2:
                raise UsageError("product needs at least two --factor specs")
            out = families.parse_family(args.factor[0])
            for f in args.factor[1:]:
                out = families.product(out, families.parse_family(f))
            return out
    except TypeError as exc:
        raise UsageError(f"missing parameters for family {tag}") from exc
    raise UsageError(f"unknown family tag {tag!r}")


def load_source(source, args=None):
    """Resolve a descriptor path, a family spec string, or ``--family`` flags.

    Returns ``(pair, family_or_None)``.
    """
    if source is None:
        if args is None or not getattr(args, "family", None):
            raise UsageError("give a descriptor path, a family spec, or --family")
        fam = _family_from_flags(args)
        return fam.pair, fam
    if source.endswith(".json") or os.path.exists(source):
        try:
            with open(source) as fh:
                pair = CharacteristicPair.from_json(fh.read())
        except OSError as exc:
            raise UsageError(f"cannot read {source}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise UsageError(f"{source} is not valid JSON: {exc}") from exc
        problems = validate(pair)
        if problems:
            raise UsageError(f"{source}: {problems[0].detail}")
        return pair, None
    fam = families.parse_family(source)
    return fam.pair, fam


def _parse_omega(text, n):
    try:
        raw = [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"bad --omega {text!r}") from exc
    return engines.normalize_omega(raw, n)


def cmd_family(args):
    pair, fam = load_source(args.source, args)
    payload = {"descriptor": pair.to_dict()}
    text = [f"{pair.name}: n={pair.n}, m={pair.m}, {len(pair.vertices)} vertices"]
    if fam is not None:
        pres = fam.presentation
        payload["presentation"] = pres.describe().splitlines()
        payload["linear_forms"] = [f.to_str(pres.names) for f in fam.linear_forms]
        text.append(pres.describe())
        text.append("facet classes: " + ", ".join(payload["linear_forms"]))
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(pair.to_json())
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc}") from exc
        text.append(f"wrote {args.out}")
    else:
        text.append(pair.to_json())
    return EXIT_OK, payload, "\n".join(text)


def cmd_chern(args):
    pair, fam = load_source(args.source, args)
    omega = _parse_omega(args.omega, pair.n)
    loc = engines.chern_number_localization(pair, omega)
    payload = {"name": pair.name, "omega": list(omega), "localization": loc}
    code = EXIT_OK
    text = f"c_{list(omega)}[{pair.name}] = {loc}"
    if fam is not None:
        coh = engines.chern_number_cohomology(fam, omega)
        payload["cohomology"] = coh
        payload["agree"] = coh == loc
        text += f" (cohomology: {coh}, {'agree' if coh == loc else 'DISAGREE'})"
        if coh != loc:
            code = EXIT_FAIL
    return code, payload, text


def cmd_s_number(args):
    pair, fam = load_source(args.source, args)
    loc = engines.s_number_localization(pair)
    payload = {"name": pair.name, "n": pair.n, "localization": loc}
    code = EXIT_OK
    text = str(loc)
    if fam is not None:
        coh = engines.s_number_cohomology(fam)
        payload["cohomology"] = coh
        payload["agree"] = coh == loc
        if coh != loc:
            code = EXIT_FAIL
            text += f" (cohomology engine gives {coh})"
    return code, payload, text


def cmd_su_check(args):
    pair, _ = load_source(args.source, args)
    phi = su_check(pair)
    payload = {"name": pair.name, "su": phi is not None, "phi": phi}
    return EXIT_OK, payload, "none" if phi is None else " ".join(map(str, phi))


def cmd_connected_sum(args):
    a, _ = load_source(args.a)
    b, _ = load_source(args.b)
    for label, pair, k in (("a", a, args.vertex_a), ("b", b, args.vertex_b)):
        if not 0 <= k < len(pair.vertices):
            raise UsageError(f"--vertex-{label} {k} out of range (0..{len(pair.vertices) - 1})")
    result = connected_sum(a, args.vertex_a, b, args.vertex_b)
    payload = {"descriptor": result.to_dict()}
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(result.to_json())
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc}") from exc
        text = f"wrote {args.out} ({result.name}, {len(result.vertices)} vertices)"
    else:
        text = result.to_json()
    return EXIT_OK, payload, text


def cmd_verify(args):
    result = sweeps.run(args.target, args.max)
    payload = result.to_dict()
    text = f"{result.name}: {result.checked} checked, {len(result.failures)} failed -> " + (
        "PASS" if result.ok else "FAIL"
    )
    for f in result.failures[:10]:
        text += f"\n  counterexample {f['case']}: {f['detail']}"
    return (EXIT_OK if result.ok else EXIT_FAIL), payload, text


def cmd_generators(args):
    if args.dim <= 0 or args.dim % 2:
        raise UsageError("--dim must be a positive even real dimension")
    i = args.dim // 2
    try:
        cert = bordism.find_generator(i, su=args.su)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    payload = cert.to_dict()
    text = f"{cert.klass.describe()}  s={cert.s_value} target={cert.target} su={cert.su}"
    if args.realize:
        pair = bordism.realize_certificate(cert)
        s = engines.s_number_localization(pair)
        payload["realized"] = {"name": pair.name, "vertices": len(pair.vertices), "s": s}
        try:
            with open(args.realize, "w") as fh:
                fh.write(pair.to_json())
        except OSError as exc:
            raise UsageError(f"cannot write {args.realize}: {exc}") from exc
        text += f"\nrealized as {len(pair.vertices)}-vertex pair, s={s}, wrote {args.realize}"
        if s != cert.s_value:
            return EXIT_FAIL, payload, text
    return EXIT_OK, payload, text


def cmd_wall(args):
    elem = wallring.parse(args.expr)
    d = wallring.boundary(elem)
    payload = {"element": str(elem), "degree": elem.degree(), "boundary": str(d)}
    return EXIT_OK, payload, f"{elem}\nd: {d}"


def _add_source(p, required=True):
    p.add_argument("source", nargs="?" if not required else None,
                   help="descriptor .json, or a family spec like 'L(2,1)'")
    p.add_argument("--family", choices=["cpn", "proj", "L", "tildeL", "tildeN", "product"])
    p.add_argument("--n", type=int)
    p.add_argument("--n1", type=int)
    p.add_argument("--n2", type=int)
    p.add_argument("--degrees", help="comma-separated line bundle degrees for proj")
    p.add_argument("--factor", action="append", help="factor spec for product (repeat)")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    parser = argparse.ArgumentParser(prog="toricbord", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("family", parents=[common], help="build a family and print its descriptor")
    _add_source(p, required=False)
    p.add_argument("--out")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("chern", parents=[common], help="a Chern number c_omega")
    _add_source(p, required=False)
    p.add_argument("--omega", required=True, help="comma-separated exponents i_1,..,i_n")
    p.set_defaults(func=cmd_chern)

    p = sub.add_parser("s-number", parents=[common], help="the s-number of a manifold")
    _add_source(p, required=False)
    p.set_defaults(func=cmd_s_number)

    p = sub.add_parser("su-check", parents=[common], help="find phi with phi(lambda_i) = 1")
    _add_source(p, required=False)
    p.set_defaults(func=cmd_su_check)

    p = sub.add_parser("connected-sum", parents=[common], help="equivariant connected sum")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--vertex-a", type=int, default=0)
    p.add_argument("--vertex-b", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_connected_sum)

    p = sub.add_parser("verify", parents=[common], help="run a verification sweep")
    p.add_argument("target", choices=sorted(sweeps.SWEEPS))
    p.add_argument("--max", type=int, default=None, help="sweep bound (target-specific default)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generators", parents=[common], help="generator certificate in a dimension")
    p.add_argument("--dim", type=int, required=True, help="real dimension 2i")
    p.add_argument("--su", action="store_true", help="SU generator instead of unitary")
    p.add_argument("--realize", metavar="FILE", help="write the connected-sum realization")
    p.set_defaults(func=cmd_generators)

    p = sub.add_parser("wall", parents=[common], help="parse a Wall ring element and apply d")
    p.add_argument("expr")
    p.set_defaults(func=cmd_wall)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        code, payload, text = args.func(args)
    except (UsageError, ValueError, IndexError, KeyError) as exc:
        msg = str(exc) or type(exc).__name__
        if getattr(args, "json", False):
            print(json.dumps({"error": msg}), file=stdout)
        print(f"toricbord: error: {msg}", file=stderr)
        return EXIT_USAGE
    if args.json:
        print(json.dumps(payload, sort_keys=False), file=stdout)
    else:
        print(text, file=stdout)
    return code


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
