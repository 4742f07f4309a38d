"""Read experiment files and expand their r{{ }} templates.

Experiment files are yaml with an optional ``definitions`` mapping. Values in
the file may refer to a definition as ``r{{ name }}``, to another definition
from inside ``definitions``, to ``r{{ configpath }}`` (the folder holding the
file) and to environment variables as ``r{{ os.NAME }}``.
"""

import logging
import os
from types import SimpleNamespace
from typing import Any, Dict, Optional

import jinja2
from ruamel.yaml import YAML, YAMLError

from .config_keys import ConfigKeys
from .strings import HARQNET

# A bare '{' opens a yaml flow mapping, so the template markers are prefixed.
BLOCK_START_STRING = "r{%"
VARIABLE_START_STRING = "r{{"

logger = logging.getLogger(HARQNET)


def _parse(text: str) -> Any:
    return YAML(typ="safe", pure=True).load(text)


def load_yaml(file_name: str) -> Optional[Dict[str, Any]]:
    with open(file_name, "r", encoding="utf-8") as input_file:
        text = input_file.read()
    try:
        return _parse(text)
    except YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        if mark is None:
            raise
        lines = text.splitlines()
        offending = lines[mark.line] if mark.line < len(lines) else ""
        raise YAMLError(
            f"{exc}\nError in line: {offending}\n {' ' * mark.column}^)"
        ) from exc


def _get_definitions(
    configuration: Optional[Dict[str, Any]], configpath: str
) -> Dict[str, Any]:
    if not configuration:
        logger.info("Empty configuration file provided, using defaults")
        definitions: Dict[str, Any] = {}
    elif ConfigKeys.DEFINITIONS in configuration:
        definitions = dict(configuration[ConfigKeys.DEFINITIONS] or {})
    else:
        logger.debug("No %s node found in configuration file", ConfigKeys.DEFINITIONS)
        definitions = {}
    definitions.setdefault("configpath", configpath)
    return definitions


def _environment_namespace() -> SimpleNamespace:
    return SimpleNamespace(**os.environ)


def _resolve_definitions(
    definitions: Dict[str, Any], environment: jinja2.Environment
) -> None:
    """Render string definitions against each other until they settle.

    A definition may only reach other definitions through a finite chain, so
    more passes than there are definitions means a cycle.
    """
    for key, value in definitions.items():
        if not isinstance(value, str):
            continue
        for _ in range(len(definitions) + 1):
            rendered = environment.from_string(value).render(**definitions)
            if rendered == value:
                break
            value = rendered
            definitions[key] = value
        if VARIABLE_START_STRING in value:
            raise ValueError(
                "Circular dependencies in definitions. Please resolve using "
                "harqnet validate."
            )


def yaml_file_to_substituted_config_dict(config_path: str) -> Dict[str, Any]:
    definitions = _get_definitions(
        configuration=load_yaml(config_path),
        configpath=os.path.dirname(os.path.abspath(config_path)),
    )
    definitions["os"] = _environment_namespace()

    environment = jinja2.Environment(
        block_start_string=BLOCK_START_STRING,
        variable_start_string=VARIABLE_START_STRING,
    )
    _resolve_definitions(definitions, environment)

    with open(config_path, "r", encoding="utf-8") as f:
        template = f.read()
    config = _parse(environment.from_string(template).render(**definitions))
    if not isinstance(config, dict):
        config = {}
    config[ConfigKeys.CONFIGPATH] = config_path
    return config
