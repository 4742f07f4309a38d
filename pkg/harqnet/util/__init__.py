import logging
import os
import platform

import numpy
import scipy

from harqnet.strings import DEFAULT_LOGGING_FORMAT
from harqnet.util.parallel import ordered_map  # noqa


def configure_logger(
    name=None,
    file_path=None,
    log_level=None,
    formatter=DEFAULT_LOGGING_FORMAT,
) -> logging.Logger:
    logger = logging.getLogger(name)

    logger.setLevel(log_level or logging.INFO)
    attached = {
        getattr(handler, "baseFilename", None) for handler in logger.handlers
    }
    if file_path is not None and os.path.abspath(file_path) not in attached:
        makedirs_if_needed(os.path.dirname(file_path))
        handler = logging.FileHandler(file_path)
        handler.setFormatter(logging.Formatter(formatter))
        logger.addHandler(handler)

    return logger


def version_info():
    from harqnet import __version__ as harqnet_version  # pylint: disable=C0415

    return ("harqnet:'{}'\nnumpy:'{}'\nscipy:'{}'\npython:'{}'").format(
        harqnet_version, numpy.__version__, scipy.__version__, platform.python_version()
    )


def makedirs_if_needed(path):
    if not os.path.isdir(path):
        os.makedirs(path)
