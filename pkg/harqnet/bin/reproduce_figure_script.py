#!/usr/bin/env python

import argparse
import sys

from harqnet.figures import FIGURE_PRESETS, figure_spec

from .run_script import add_run_arguments
from .utils import enable_debug_output, run_and_report


def reproduce_figure_entry(args=None):
    """Run the desk-scale preset of one figure."""
    arg_parser = argparse.ArgumentParser(
        description="Reproduce a figure at desk scale",
        usage="harqnet reproduce-figure <N> [arguments]",
    )
    arg_parser.add_argument(
        "figure",
        type=int,
        choices=sorted(FIGURE_PRESETS),
        help="Number of the figure to reproduce",
    )
    arg_parser.add_argument(
        "--seed", type=int, default=None, help="Seed of the Monte Carlo engine"
    )
    arg_parser.add_argument(
        "--show",
        action="store_true",
        help="Print the preset experiment and exit without running it",
    )
    add_run_arguments(arg_parser)
    options = arg_parser.parse_args(args)
    if options.debug:
        enable_debug_output()

    spec = figure_spec(options.figure)
    if options.seed is not None:
        spec = spec.with_seed(options.seed)
    if options.show:
        sys.stdout.write(spec.dump())
        return

    run_and_report(
        spec,
        output_dir=options.output,
        workers=options.workers,
        show_progress=not options.no_progress,
    )


if __name__ == "__main__":
    reproduce_figure_entry()
