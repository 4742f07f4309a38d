#!/usr/bin/env python

import argparse

from harqnet.config.experiment_config import (
    DEFAULT_SWEEPS,
    KIND_DESCRIPTIONS,
    KIND_FIGURES,
)


def list_experiments_entry(args=None):
    arg_parser = argparse.ArgumentParser(
        description="List the experiment kinds and the figure each reproduces",
        usage="""harqnet list-experiments""",
    )
    arg_parser.parse_args(args)

    width = max(len(kind) for kind in KIND_FIGURES)
    for kind, figure in sorted(KIND_FIGURES.items(), key=lambda item: item[1]):
        sweep = DEFAULT_SWEEPS[kind]["variable"]
        print(
            f"{figure}  {kind:<{width}}  {KIND_DESCRIPTIONS[kind]} "
            f"(default sweep: {sweep})"
        )


if __name__ == "__main__":
    list_experiments_entry()
