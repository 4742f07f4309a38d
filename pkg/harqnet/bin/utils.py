import logging
import sys
from typing import Optional

import colorama
from colorama import Fore

from harqnet.config import ExperimentSpec
from harqnet.strings import (
    EXIT_ALL_POINTS_FAILED,
    EXIT_IO_ERROR,
    EXIT_SUCCESS,
    HARQNET,
)
from harqnet.suite import ExperimentRun, run_experiment

try:
    from progressbar import AdaptiveETA, Bar, Percentage, ProgressBar, Timer
except ImportError:
    ProgressBar = None


def enable_debug_output() -> None:
    logger = logging.getLogger(HARQNET)
    logger.setLevel(logging.DEBUG)
    logger.addHandler(logging.StreamHandler())


def run_with_progress(
    spec: ExperimentSpec,
    output_dir: Optional[str] = None,
    workers: Optional[int] = None,
) -> ExperimentRun:
    if ProgressBar is None:
        return run_experiment(spec, output_dir, workers)

    widgets = [Percentage(), "  ", Bar(), "  ", Timer(), "  ", AdaptiveETA()]
    with ProgressBar(max_value=1, widgets=widgets) as bar:
        return run_experiment(
            spec,
            output_dir,
            workers,
            progress_callback=lambda done, total: bar.update(done / total),
        )


def report_run(run: ExperimentRun) -> int:
    """Print where the results went and return the exit code of the run."""
    colorama.init(autoreset=True)
    failed, total = len(run.failed_rows), len(run.rows)
    if run.all_failed:
        print(f"{Fore.RED}All {total} results of {run.spec.name} failed{Fore.RESET}")
        code = EXIT_ALL_POINTS_FAILED
    elif failed:
        print(f"{Fore.YELLOW}{failed} of {total} results failed{Fore.RESET}")
        code = EXIT_SUCCESS
    else:
        print(f"{Fore.GREEN}{total} results computed{Fore.RESET}")
        code = EXIT_SUCCESS
    for name, path in sorted(run.files.items()):
        print(f"  {name:<8} {path}")
    print(f"  {'plots':<8} {len(run.plot_files)} files")
    return code


def run_and_report(
    spec: ExperimentSpec,
    output_dir: Optional[str] = None,
    workers: Optional[int] = None,
    show_progress: bool = True,
) -> None:
    """Run an experiment, exiting with a nonzero code on total failure or I/O errors."""
    try:
        if show_progress:
            run = run_with_progress(spec, output_dir, workers)
        else:
            run = run_experiment(spec, output_dir, workers)
    except OSError as err:
        logging.getLogger(HARQNET).error("Writing results failed: %s", err)
        print(f"{Fore.RED}Writing results failed: {err}{Fore.RESET}", file=sys.stderr)
        sys.exit(EXIT_IO_ERROR)

    code = report_run(run)
    if code != EXIT_SUCCESS:
        sys.exit(code)
