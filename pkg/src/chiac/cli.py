"""Command-line interface.

Exit codes: 0 success, 1 input error (unresolvable/invalid posets, bad
arguments), 2 verification or hypothesis failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .catalogue import (
    ResolveError,
    ResultCache,
    default_workspace,
    inconsistencies,
    resolve_poset,
    search_lower_bound_witness,
    verify_paper,
)
from .colouring import (
    HypothesisError,
    chi_ac_upper_from_theorems,
    hypothesis_report,
    is_valid,
    min_colours,
    minimals_colouring,
    theorem3_colouring,
    theorem3_dual_colouring,
)
from .embedding import enumerate_copies, find_embedding
from .families import maximal_F_free
from .poset import CycleError, Poset, PosetParseError, format_poset

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VERIFY = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; the exit-code contract wants 1
    def error(self, message):
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _dump(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _elements(values) -> str:
    return "[" + ", ".join(str(v) for v in sorted(values)) + "]"


def _poset_record(p: Poset) -> dict:
    return {
        "name": p.name,
        "elements": p.n,
        "covers": [list(c) for c in p.covers()],
        "heights": list(p.heights),
        "minimals": sorted(p.minimals()),
        "maximals": sorted(p.maximals()),
        "bounded": p.is_bounded(),
        "isolated": sorted(p.isolated_elements()),
        "splitting": sorted(p.splitting_elements()),
        "interior_splitting": sorted(p.interior_splitting_elements()),
        "fingerprint": p.fingerprint(),
    }


def cmd_show(args) -> int:
    p = resolve_poset(args.poset)
    if args.json:
        _dump(_poset_record(p))
        return EXIT_OK
    print(f"poset {p.name or '(unnamed)'} with {p.n} elements")
    print("covers:", " ".join(f"({i},{j})" for i, j in p.covers()) or "(none)")
    print("heights:", list(p.heights))
    print("minimals:", _elements(p.minimals()))
    print("maximals:", _elements(p.maximals()))
    print("bounded:", str(p.is_bounded()).lower())
    print("isolated:", _elements(p.isolated_elements()))
    print("splitting:", _elements(p.splitting_elements()))
    print("interior_splitting:", _elements(p.interior_splitting_elements()))
    print("fingerprint:", p.fingerprint())
    return EXIT_OK


def cmd_embed(args) -> int:
    p = resolve_poset(args.poset)
    f = resolve_poset(args.pattern)
    if args.all:
        copies = enumerate_copies(p, f)
        if args.json:
            _dump({"copies": [list(c) for c in copies]})
        elif copies:
            print(f"{len(copies)} induced copies:")
            for c in copies:
                print(" ", _elements(c))
        else:
            print("no induced copies")
        return EXIT_OK
    image = find_embedding(p, f)
    if args.json:
        _dump({"embedding": None if image is None else list(image)})
    elif image is None:
        print("no embedding")
    else:
        print("embedding:", " ".join(f"{x}->{e}" for x, e in enumerate(image)))
    return EXIT_OK


def cmd_maximal_free(args) -> int:
    p = resolve_poset(args.poset)
    f = resolve_poset(args.pattern)
    family = maximal_F_free(p, f, not args.include_singletons)
    if args.json:
        _dump({"sets": [list(s) for s in family.sets], "filtered": family.filtered})
        return EXIT_OK
    kind = "all" if args.include_singletons else "with more than one element"
    print(f"{len(family)} maximal F-free subsets ({kind}):")
    for s in family.sets:
        print(" ", _elements(s))
    return EXIT_OK


def cmd_mincolours(args) -> int:
    p = resolve_poset(args.poset)
    f = resolve_poset(args.pattern)
    result = min_colours(p, f)
    if args.json:
        _dump(
            {
                "min_colours": result.min_colours,
                "witness": list(result.witness.colours),
                "family_size": result.family_size,
            }
        )
        return EXIT_OK
    print("min_colours:", result.min_colours)
    print("witness:", list(result.witness.colours))
    print("family_size:", result.family_size)
    return EXIT_OK


_METHODS = {
    "theorem3": theorem3_colouring,
    "theorem3-dual": theorem3_dual_colouring,
}


def cmd_colour(args) -> int:
    p = resolve_poset(args.poset)
    f = resolve_poset(args.pattern)
    if args.method == "minimals":
        colouring = minimals_colouring(p)
    else:
        colouring = _METHODS[args.method](p, f)
    valid = is_valid(p, f, colouring)
    if args.json:
        _dump(
            {
                "method": args.method,
                "colouring": list(colouring.colours),
                "valid": valid,
            }
        )
    else:
        print("method:", args.method)
        print("colouring:", list(colouring.colours))
        print("valid:", str(valid).lower())
    return EXIT_OK if valid else EXIT_VERIFY


def cmd_hypotheses(args) -> int:
    f = resolve_poset(args.pattern)
    report = hypothesis_report(f)
    bound = chi_ac_upper_from_theorems(f)
    record = {
        "f_name": f.name,
        "two_minimals": report.two_minimals,
        "maximals_have_nonminimal_cover": report.maximals_have_nonminimal_cover,
        "thm3_applies": report.thm3_applies,
        "thm3_dual_applies": report.thm3_dual_applies,
        "nonbounded": report.nonbounded,
        "no_isolated": report.no_isolated,
        "thm2_applies": report.thm2_applies,
        "bounded": report.bounded,
        "no_interior_splitting": report.no_interior_splitting,
        "thm1_applies": report.thm1_applies,
        "upper_bound": None if bound is None else {"bound": bound.bound, "source": bound.source},
    }
    if args.json:
        _dump(record)
        return EXIT_OK
    for key, value in record.items():
        if key == "upper_bound":
            if value is None:
                print("upper_bound: none (no registered theorem applies)")
            else:
                print(f"upper_bound: {value['bound']} (via {value['source']})")
        else:
            print(f"{key}: {str(value).lower() if isinstance(value, bool) else value}")
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    workspace = default_workspace()
    cache = ResultCache(workspace / "cache")
    report = verify_paper(
        n_max=args.max_size,
        cache=cache,
        threads=args.threads,
        on_phase=lambda msg: print(f"[verify-paper] {msg}"),
    )
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(report, indent=2, sort_keys=True))
    print(f"report written to {out}")

    from . import report as rendering

    csv_path = rendering.write_claims_csv(report, out.with_suffix(".claims.csv"))
    print(f"claims table written to {csv_path}")
    if not args.no_figures:
        for figure in rendering.write_figures(report, out.with_suffix("")):
            print(f"figure written to {figure}")

    if report["consistent"]:
        print(f"consistent: true ({report['elapsed_seconds']}s)")
        return EXIT_OK
    print("consistent: false")
    for problem in inconsistencies(report):
        print("  !", problem)
    return EXIT_VERIFY


def cmd_search_witness(args) -> int:
    f = resolve_poset(args.pattern)
    workspace = default_workspace()
    cache = ResultCache(workspace / "cache")
    witness = search_lower_bound_witness(
        f,
        args.colours,
        args.max_size,
        cache=cache,
        checkpoint_dir=workspace / "checkpoints",
        resume=args.resume,
    )
    if args.json:
        _dump(
            {
                "found": None
                if witness is None
                else {
                    "size": witness.n,
                    "fingerprint": witness.fingerprint(),
                    "covers": [list(c) for c in witness.covers()],
                    "certified": True,
                },
                "colours": args.colours,
                "max_size": args.max_size,
            }
        )
        return EXIT_OK
    if witness is None:
        print(
            f"no poset with up to {args.max_size} elements needs "
            f"{args.colours} colours against this pattern"
        )
        return EXIT_OK
    print(f"witness found (size {witness.n}, fingerprint {witness.fingerprint()}):")
    print(format_poset(witness), end="")
    print(f"certified: exhaustive search found no valid {args.colours - 1}-colouring")
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(
        prog="chiac",
        description=(
            "Exact desk-scale analysis of poset colourings in which every "
            "maximal F-free subset with more than one element must be "
            "non-monochromatic."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(fn=fn)
        return p

    p = add("show", cmd_show, "render a poset's structure")
    p.add_argument("poset", help="poset file or name (chain:3, diamond, ...)")
    p.add_argument("--json", action="store_true")

    p = add("embed", cmd_embed, "find an induced copy of a pattern")
    p.add_argument("poset")
    p.add_argument("pattern")
    p.add_argument("--all", action="store_true", help="list every copy instead")
    p.add_argument("--json", action="store_true")

    p = add("maximal-free", cmd_maximal_free, "list maximal F-free subsets")
    p.add_argument("poset")
    p.add_argument("pattern")
    p.add_argument("--include-singletons", action="store_true")
    p.add_argument("--json", action="store_true")

    p = add("mincolours", cmd_mincolours, "exact minimum colour count")
    p.add_argument("poset")
    p.add_argument("pattern")
    p.add_argument("--json", action="store_true")

    p = add("colour", cmd_colour, "run a constructive colouring and validate it")
    p.add_argument("poset")
    p.add_argument("pattern")
    p.add_argument(
        "--method",
        required=True,
        choices=["theorem3", "theorem3-dual", "minimals"],
    )
    p.add_argument("--json", action="store_true")

    p = add("hypotheses", cmd_hypotheses, "which theorem hypotheses a pattern satisfies")
    p.add_argument("pattern")
    p.add_argument("--json", action="store_true")

    p = add("verify-paper", cmd_verify_paper, "run the full verification report")
    p.add_argument("--max-size", type=int, default=6)
    p.add_argument("--out", default="chiac_report.json")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--no-figures", action="store_true")

    p = add("search-witness", cmd_search_witness, "search for a poset needing k colours")
    p.add_argument("pattern")
    p.add_argument("--colours", type=int, required=True)
    p.add_argument("--max-size", type=int, default=6)
    p.add_argument("--resume", action="store_true")
    p.add_argument("--json", action="store_true")

    return parser


def main(argv=None) -> int:
    logging.basicConfig(format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except (ResolveError, PosetParseError, CycleError, IndexError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except HypothesisError as exc:
        print(f"HypothesisError: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except ValueError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
