import argparse
import logging
import sys

from harqnet import __version__ as harqnet_version
from harqnet import docs
from harqnet.bin.list_experiments_script import list_experiments_entry
from harqnet.bin.render_script import render_entry
from harqnet.bin.reproduce_figure_script import reproduce_figure_entry
from harqnet.bin.run_script import run_entry
from harqnet.bin.validate_script import validate_entry
from harqnet.strings import HARQNET_MAIN
from harqnet.util import configure_logger


def _create_dump_action(dumps, extended=False):
    # Action for aiding user, --help style
    class _DumpAction(argparse.Action):
        def __init__(
            self,
            option_strings,
            dest=argparse.SUPPRESS,
            default=argparse.SUPPRESS,
            help=None,
        ):
            super().__init__(
                option_strings=option_strings,
                dest=dest,
                default=default,
                nargs=0,
                help=help,
            )

        def __call__(self, parser, namespace, values, option_string=None):
            print(dumps(extended=extended))
            parser.exit()

    return _DumpAction


def _method_name(command: str) -> str:
    return command.replace("-", "_")


class HarqnetMain:
    def __init__(self, args):
        arg_parser = argparse.ArgumentParser(
            description="Delay, rate correlation and throughput of retransmission "
            "schemes in random MIMO networks",
            usage=(
                "harqnet <command> [<args>]\n\n"
                "The harqnet commands are:\n"
                "{commands}\n\n"
                "Run harqnet <command> --help for more information on a command"
            ).format(commands=self._methods_help()),
        )
        arg_parser.add_argument("command", help="Subcommand to run")
        arg_parser.add_argument(
            "--docs",
            action=_create_dump_action(docs.generate_config_reference),
            help="dump harqnet config documentation and exit",
        )
        arg_parser.add_argument(
            "--manual",
            action=_create_dump_action(docs.generate_config_reference, extended=True),
            help="dump config documentation with defaults and exit",
        )
        arg_parser.add_argument(
            "--version",
            action="version",
            version=f"%(prog)s {harqnet_version}",
        )

        # only the command is parsed here, its arguments go to the subcommand
        parsed_args = arg_parser.parse_args(args[1:2])
        command = _method_name(parsed_args.command)
        if command.startswith("_") or not hasattr(self, command):
            arg_parser.error("Unrecognized command")

        logging.getLogger().addHandler(logging.NullHandler())
        logger = configure_logger(HARQNET_MAIN)
        logger.info("Started harqnet with %s", parsed_args)
        getattr(self, command)(args[2:])

    @classmethod
    def _methods_help(cls):
        """Return documentation of the public methods in this class"""
        pubmets = [m for m in dir(cls) if not m.startswith("_")]
        names = [m.replace("_", "-") for m in pubmets]
        maxlen = max(len(n) for n in names)
        docstrs = [getattr(cls, m).__doc__ for m in pubmets]
        return "\n".join(n.ljust(maxlen + 1) + d for n, d in zip(names, docstrs))

    def run(self, args):
        """Run the experiment of a config file"""
        run_entry(args)

    def validate(self, args):
        """Validate a config file and show its resolved form"""
        validate_entry(args)

    def list_experiments(self, args):
        """List experiment kinds and the figures they reproduce"""
        list_experiments_entry(args)

    def reproduce_figure(self, args):
        """Run the desk-scale preset of a figure"""
        reproduce_figure_entry(args)

    def render(self, args):
        """Display the config file after template substitution"""
        render_entry(args)


def start_harqnet(args=None):
    """Main entry point for the harqnet application"""
    args = args or sys.argv
    HarqnetMain(args)
