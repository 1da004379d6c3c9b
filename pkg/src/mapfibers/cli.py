"""Command-line entry points.

    mapfibers analyze    <file> [--json OUT] [--s-max K] [--seed N]
    mapfibers fibers     <file>
    mapfibers cohomology <file> --mu M [--s-max K]
    mapfibers image      <file>
    mapfibers bounds     <file>

Exit codes: 0 success, 1 usage/parse error, 2 hypothesis failure (not
generically finite, or the forms share a factor), 3 analysis finished but
completeness is not certified.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from .cohomology import m_mu_dims
from .fibers import image_ideal, rees_ideal
from .ideals import Ideal
from .mapfile import MapFileError, load_map_file
from .pipeline import (EXIT_HYPOTHESIS, EXIT_OK, PipelineOptions,
                       run_pipeline)
from .report import render_text, write_json


def _load(path: str):
    try:
        return load_map_file(path)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return None
    except MapFileError as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        return None


def _cmd_analyze(args) -> int:
    pmap = _load(args.file)
    if pmap is None:
        return 1
    opt = PipelineOptions(s_max=args.s_max, seed=args.seed)
    result = run_pipeline(pmap, opt, path=args.file)
    sys.stdout.write(render_text(result.report))
    if args.json:
        write_json(result.report, args.json)
    return result.exit_code


def _cmd_fibers(args) -> int:
    pmap = _load(args.file)
    if pmap is None:
        return 1
    opt = PipelineOptions(divisor_bound=False, factorization=False,
                          module_table=False, presentation=False,
                          surface_bounds=False)
    result = run_pipeline(pmap, opt, path=args.file)
    sys.stdout.write(render_text(result.report))
    return result.exit_code


def _cmd_bounds(args) -> int:
    pmap = _load(args.file)
    if pmap is None:
        return 1
    opt = PipelineOptions(module_table=False, factorization=False)
    result = run_pipeline(pmap, opt, path=args.file)
    sys.stdout.write(render_text(result.report))
    return result.exit_code


def _cmd_cohomology(args) -> int:
    pmap = _load(args.file)
    if pmap is None:
        return 1
    if pmap.common_factor is not None and pmap.common_factor.degree() >= 1:
        print(f"error: forms share the factor {pmap.common_factor}",
              file=sys.stderr)
        return EXIT_HYPOTHESIS
    I = Ideal(pmap.source, [f for f in pmap.forms if not f.is_zero()])
    table = m_mu_dims(I, pmap.d, args.mu, range(1, args.s_max + 1))
    print(f"dim H^{pmap.m}(I^s) in degree s*d + ({args.mu}):")
    for s in sorted(table.values):
        print(f"  s = {s}: {table.values[s]}")
    table.detect_stabilization()
    if table.stabilized:
        print(f"stabilizes at {table.stable_value} from s = {table.stable_from}")
    return EXIT_OK


def _cmd_image(args) -> int:
    pmap = _load(args.file)
    if pmap is None:
        return 1
    if pmap.common_factor is not None and pmap.common_factor.degree() >= 1:
        print(f"error: forms share the factor {pmap.common_factor}",
              file=sys.stderr)
        return EXIT_HYPOTHESIS
    img = image_ideal(pmap, rees_ideal(pmap))
    print(f"image: dimension {img.dimension}, degree {img.degree}, "
          f"generically finite: {img.generically_finite}")
    for g in img.ideal.minimal_basis():
        print(f"  {g}")
    return EXIT_OK if img.generically_finite else EXIT_HYPOTHESIS


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="mapfibers",
        description="Exact fiber analysis for rational maps between "
                    "projective spaces.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report: hypotheses, fibers, "
                                       "bounds, module table")
    p.add_argument("file")
    p.add_argument("--json", metavar="OUT", help="also write the JSON report")
    p.add_argument("--s-max", type=int, default=4, dest="s_max",
                   help="largest power of the base ideal to examine")
    p.add_argument("--seed", type=int, default=None,
                   help="seed echoed into the report for reproducibility")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("fibers", help="inventory of (m-1)-dimensional fibers")
    p.add_argument("file")
    p.set_defaults(func=_cmd_fibers)

    p = sub.add_parser("cohomology", help="per-power local cohomology strand")
    p.add_argument("file")
    p.add_argument("--mu", type=int, required=True,
                   help="strand offset: degree s*d + mu")
    p.add_argument("--s-max", type=int, default=4, dest="s_max")
    p.set_defaults(func=_cmd_cohomology)

    p = sub.add_parser("image", help="implicit equations of the image")
    p.add_argument("file")
    p.set_defaults(func=_cmd_image)

    p = sub.add_parser("bounds", help="divisor-degree and surface bounds")
    p.add_argument("file")
    p.set_defaults(func=_cmd_bounds)
    return ap


def main(argv: Optional[list] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
