#!/usr/bin/env python

import argparse
import sys

from ruamel.yaml import YAML

from harqnet.config_file_loader import yaml_file_to_substituted_config_dict
from harqnet.config_keys import ConfigKeys


def render_entry(args=None):
    arg_parser = argparse.ArgumentParser(
        description="Print the config file after templating, before validation",
        usage="""harqnet render <config_file>""",
    )
    arg_parser.add_argument(
        "config_file", help="The path to the experiment configuration file"
    )
    options = arg_parser.parse_args(args)

    config = yaml_file_to_substituted_config_dict(options.config_file)
    config.pop(ConfigKeys.CONFIGPATH, None)

    yaml = YAML(typ="safe", pure=True)
    yaml.indent = 2
    yaml.default_flow_style = False
    yaml.dump(config, sys.stdout)


if __name__ == "__main__":
    render_entry()
