#!/usr/bin/env python

import argparse
import json
import logging
from functools import partial

from harqnet.config import ExperimentSpec
from harqnet.strings import HARQNET
from harqnet.util import version_info

from .utils import enable_debug_output, run_and_report


def run_entry(args=None):
    """Entry point for running an experiment."""
    options = setup_args(args)

    if options.debug:
        enable_debug_output()

    logging.getLogger(HARQNET).info(version_info())
    logging.getLogger(HARQNET).debug(
        json.dumps(options.config.to_dict(), sort_keys=True, indent=2)
    )
    run_and_report(
        options.config,
        output_dir=options.output,
        workers=options.workers,
        show_progress=not options.no_progress,
    )


def setup_args(argv):
    arg_parser = argparse.ArgumentParser(
        description="Run an experiment and write its results",
        usage="harqnet run <config_file> [arguments]",
    )
    arg_parser.add_argument(
        "config",
        type=partial(ExperimentSpec.load_file_with_argparser, parser=arg_parser),
        help="The path to the experiment configuration file",
    )
    add_run_arguments(arg_parser)
    return arg_parser.parse_args(argv)


def add_run_arguments(arg_parser: argparse.ArgumentParser) -> None:
    arg_parser.add_argument(
        "-o",
        "--output",
        default=None,
        help="Output folder, overriding environment.output_folder",
    )
    arg_parser.add_argument(
        "-w",
        "--workers",
        type=int,
        default=None,
        help="Concurrent trials or grid points; results do not depend on it",
    )
    arg_parser.add_argument(
        "--no-progress", action="store_true", help="Do not show a progress bar"
    )
    arg_parser.add_argument(
        "--debug", action="store_true", help="Display debug information in the terminal"
    )


if __name__ == "__main__":
    run_entry()
