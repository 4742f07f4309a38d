import errno
import os
from collections import Counter, defaultdict
from typing import Any, Dict, List, Sequence

from pydantic import ValidationError


def check_path_valid(path: str):
    """Reject paths the file system could never hold, such as over-long names.

    Missing components are fine, the output folder is created on demand.
    """
    if not isinstance(path, str):
        raise ValueError("str type expected")

    partial = os.path.sep
    for component in path.split(os.path.sep):
        partial = os.path.join(partial, component)
        try:
            os.lstat(partial)
        except OSError as e:
            if e.errno in (errno.ENAMETOOLONG, errno.ERANGE):
                raise ValueError(e.strerror) from e
        except TypeError as e:
            raise ValueError(str(e)) from e


def check_for_duplicates(values: Sequence[Any], item_name: str):
    repeated = {value: n for value, n in Counter(values).items() if n > 1}
    if repeated:
        listing = ", ".join(f"{k} ({n} occurrences)" for k, n in repeated.items())
        raise ValueError(
            f"{item_name.capitalize()} values must be unique. Repeated "
            f"{item_name.lower()} values: {listing}"
        )


def check_in_unit_interval(values: List[float], item_name: str):
    bad = [v for v in values if not 0.0 < v <= 1.0]
    if bad:
        raise ValueError(
            f"{item_name} must lie in (0, 1], got: {', '.join(map(str, bad))}"
        )


def _error_loc(error_dict: dict) -> str:
    return " -> ".join(
        str(e) for e in error_dict["loc"] if e is not None and e != "__root__"
    )


def format_errors(error: ValidationError) -> str:
    """One block per offending location, in the order pydantic reports them."""
    errors = error.errors()
    by_location: Dict[str, List[str]] = defaultdict(list)
    for err in errors:
        by_location[_error_loc(err) or "experiment"].append(
            f"    * {err['msg']} (type={err['type']})"
        )
    blocks = ["\n".join([loc, *lines]) for loc, lines in by_location.items()]
    plural = "s" if len(errors) > 1 else ""
    return f"Found {len(errors)} validation error{plural}:\n\n" + "\n".join(blocks)
