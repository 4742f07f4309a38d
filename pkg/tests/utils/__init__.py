import contextlib
import logging
import os
import shutil
import tempfile
from io import StringIO

import decorator

from harqnet.config import AnalyticConfig, QuadratureSpec, SimConfig

# coarser than the defaults, still well below the tolerances the tests check
LIGHT_QUADRATURE = QuadratureSpec(rel_tol=1e-5, panel_width=2.0, panel_order=10)
LIGHT_ANALYTIC = AnalyticConfig(quadrature=LIGHT_QUADRATURE)


def small_sim(**kwargs) -> SimConfig:
    """A Monte Carlo setup that runs in well under a second."""
    settings = {
        "disk_radius": 150.0,
        "trials": 60,
        "fading_draws_per_realization": 50,
        "seed": 1234,
    }
    settings.update(kwargs)
    return SimConfig(**settings)


def relpath(*path):
    return os.path.join(os.path.dirname(os.path.dirname(__file__)), *path)


def tmpdir(path, teardown=True):
    """Run the decorated test inside ``tmp(path)``."""

    def real_decorator(function):
        def wrapper(function, *args, **kwargs):
            with tmp(path, teardown=teardown):
                return function(*args, **kwargs)

        return decorator.decorator(wrapper, function)

    return real_decorator


@contextlib.contextmanager
def tmp(path=None, teardown=True):
    """Work in a fresh directory, seeded with a copy of ``path`` if given."""
    if path and not os.path.isdir(path):
        raise IOError(f"No such directory: {path}")
    cwd = os.getcwd()
    workdir = os.path.join(tempfile.mkdtemp(prefix="harqnet-test-"), "work")
    if path:
        shutil.copytree(path, workdir)
    else:
        os.mkdir(workdir)

    os.chdir(workdir)
    try:
        yield workdir
    finally:
        os.chdir(cwd)
        if teardown:
            shutil.rmtree(os.path.dirname(workdir), ignore_errors=True)


@contextlib.contextmanager
def capture_streams():
    """Yield ``(out, err)`` buffers standing in for stdout and stderr."""
    out, err = StringIO(), StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        yield out, err


@contextlib.contextmanager
def capture_logger(name=None):
    """Yield a buffer receiving every record of the named logger."""
    stream = StringIO()
    handler = logging.StreamHandler(stream)
    handler.setLevel(logging.DEBUG)
    logger = logging.getLogger(name)
    logger.addHandler(handler)
    try:
        yield stream
    finally:
        logger.removeHandler(handler)


def satisfy(predicate):
    """Return an object comparing equal to anything ``predicate`` accepts.

    Meant for ``assert_called_with`` on mocks.
    """

    class _PredicateChecker:
        def __eq__(self, obj):
            return predicate(obj)

    return _PredicateChecker()


class MockParser:
    """
    Small class that contains the necessary functions in order to test custom
    validation functions used with the argparse module
    """

    def __init__(self):
        self.error_msg = None
        self.exit_status = None

    def get_error(self):
        return self.error_msg

    def error(self, value=None):
        self.error_msg = value

    def print_usage(self):
        pass

    def exit(self, status=0, message=None):
        self.exit_status = status
        self.error_msg = message
