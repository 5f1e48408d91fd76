"""``latfano`` command line: analyze, census, verify, gen.

Exit codes: 0 ok, 1 a verified claim has counterexamples, 2 bad input
(parse error, invalid spec or parameters, unknown claim), 3 dimension error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .polytope import DimensionError, ParseError, read_polytope, write_polytope

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_DIM = 0, 1, 2, 3

FAMILIES = {"dn": "dn", "basic": "basic_simplex", "cross": "cross_polytope",
            "dilated-simplex": "dilated_simplex"}


class UsageError(Exception):
    pass


def _box(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    try:
        a, b = int(lo), int(hi)
    except ValueError:
        raise UsageError(f"--box expects lo:hi, got {text!r}") from None
    if not sep or a > b:
        raise UsageError(f"--box expects lo:hi with lo <= hi, got {text!r}")
    return a, b


def _print_report(rep) -> None:
    print(f"dimension            {rep.dimension}")
    print(f"vertices             {rep.vertex_count}")
    for v in rep.vertices:
        print("  " + " ".join(map(str, v)))
    print(f"lattice points       {rep.lattice_point_count}")
    print("interior counts      " + ", ".join(
        f"k={k}: {c}" for k, c in enumerate(rep.interior_counts, 1)))
    print("interior points      " + (" ".join("(" + ",".join(map(str, x)) + ")"
                                            for x in rep.interior_points) or "none"))
    for c in rep.vertex_certificates:
        extra = f" m0={c.m0}" if c.m0 is not None else ""
        print(f"  vertex {c.vertex}: {c.status}{extra}")
    print(f"gorenstein           {rep.is_gorenstein}")
    print(f"gorenstein index     {rep.gorenstein_index}")
    print(f"reflexive            {rep.is_reflexive}")
    print(f"{f'normal (k<={rep.layers_checked})':<21}{rep.is_normal}")
    print(f"pyramid              {rep.is_pyramid}")
    print(f"simplex / basic      {rep.is_simplex} / {rep.is_basic}")
    print(f"D_n                  {rep.is_dn}")


def cmd_analyze(args) -> int:
    from .gorenstein import analyze

    if args.layers_up_to is not None and args.layers_up_to < 1:
        raise UsageError("--layers-up-to must be positive")
    p = read_polytope(args.file)
    rep = analyze(p, args.layers_up_to)
    if args.json:
        print(json.dumps(rep.to_json(), indent=2))
    else:
        _print_report(rep)
    return EXIT_OK


def cmd_census(args) -> int:
    from .census import CensusSpec, enumerate_polytopes, parse_profile
    from .claims import write_census

    lo, hi = _box(args.box)
    try:
        profile = parse_profile(args.interior_profile or "")
        spec = CensusSpec.cube(args.dim, lo, hi, profile, args.max_vertices)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if args.dim not in (2, 3) and not args.allow_high_dim:
        raise UsageError("exhaustive census supports --dim 2 or 3 (use --allow-high-dim)")
    classes = enumerate_polytopes(spec)
    if args.out:
        write_census(spec, classes, args.out)
    print(len(classes))
    return EXIT_OK


def cmd_verify(args) -> int:
    from .claims import CLAIMS, auto_corpus, read_corpus, verify_claim

    if args.claim not in CLAIMS:
        raise UsageError(f"unknown claim {args.claim!r}; known: {', '.join(CLAIMS)}")
    corpus = auto_corpus(args.claim) if args.auto else read_corpus(args.corpus)
    res = verify_claim(args.claim, corpus)
    print(json.dumps(res.to_json(), indent=2))
    return EXIT_OK if res.ok else EXIT_FAIL


def cmd_gen(args) -> int:
    from .claims import family_generators

    try:
        params = {"k": args.k} if args.k is not None else {}
        if args.k is not None and args.k < 1:
            raise ValueError("--k must be positive")
        p = family_generators(FAMILIES[args.family], args.n, **params)
    except ValueError as e:
        raise UsageError(str(e)) from None
    write_polytope(p, args.out, header=f"{args.family} n={args.n}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="latfano", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="report on one polytope file")
    a.add_argument("file")
    a.add_argument("--json", action="store_true")
    a.add_argument("--layers-up-to", type=int, default=None, metavar="K")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("census", help="enumerate polytopes in a box up to equivalence")
    c.add_argument("--dim", type=int, required=True)
    c.add_argument("--box", required=True, metavar="LO:HI")
    c.add_argument("--interior-profile", default="", metavar="K:COUNT,...")
    c.add_argument("--max-vertices", type=int, default=None)
    c.add_argument("--out", default=None, metavar="DIR")
    c.add_argument("--allow-high-dim", action="store_true", help=argparse.SUPPRESS)
    c.set_defaults(func=cmd_census)

    v = sub.add_parser("verify", help="check a claim over a corpus")
    v.add_argument("--claim", required=True)
    src = v.add_mutually_exclusive_group(required=True)
    src.add_argument("--corpus", metavar="DIR")
    src.add_argument("--auto", action="store_true")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("gen", help="write a family member")
    g.add_argument("--family", required=True, choices=sorted(FAMILIES))
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--k", type=int, default=None)
    g.add_argument("--out", required=True, metavar="FILE")
    g.set_defaults(func=cmd_gen)
    return ap


def _join_negative_values(argv: list[str]) -> list[str]:
    # argparse takes "-2:2" for an option; glue it to its flag
    out = []
    it = iter(argv)
    for tok in it:
        if tok in ("--box", "--interior-profile"):
            val = next(it, None)
            out.append(tok if val is None else f"{tok}={val}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    ap = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = ap.parse_args(_join_negative_values(argv))
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (ParseError, UsageError, FileNotFoundError, IsADirectoryError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except DimensionError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DIM


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
