#!/usr/bin/env python

import argparse
import sys
from functools import partial

from harqnet.config import ExperimentSpec


def validate_entry(args=None):
    arg_parser = argparse.ArgumentParser(
        description="Check if a config file is valid",
        usage="""harqnet validate <config_file> [--show]""",
    )
    arg_parser.add_argument(
        "config_file",
        type=partial(ExperimentSpec.load_file_with_argparser, parser=arg_parser),
        help="The path to the experiment configuration file",
    )
    arg_parser.add_argument(
        "--show",
        action="store_true",
        help="Also print the config with every default filled in",
    )

    options = arg_parser.parse_args(args)
    parsed_config = options.config_file
    print(f"{parsed_config.config_path} is valid")
    if options.show:
        sys.stdout.write(parsed_config.dump())


if __name__ == "__main__":
    validate_entry()
