"""reStructuredText reference of the experiment config from its field descriptions."""

import dataclasses
import re
from typing import Dict, List, Optional

from pydantic.fields import FieldInfo

from harqnet.config import ExperimentSpec

# top-level sections in the order they are documented
SECTION_ORDER = (
    "name",
    "kind",
    "base_params",
    "sweep",
    "backends",
    "sim",
    "analytic",
    "doppler",
    "short_packet",
    "design_grid",
    "environment",
    "definitions",
)


@dataclasses.dataclass
class ParsedField:
    name: str
    description: str
    type: str
    is_required: bool
    default: str
    subfields: Optional[List["ParsedField"]]

    def doc_title(self) -> str:
        return f"{self.name} ({'required' if self.is_required else 'optional'})"

    def doc_description(self) -> str:
        return "\n".join(
            line if line.startswith("|") else " ".join(line.split())
            for line in self.description.splitlines()
        )

    def clean_type(self) -> str:
        cleaned = re.sub(r"harqnet\.config\.\w+\.", "", self.type)
        cleaned = cleaned.replace("typing.", "")
        cleaned = cleaned.replace("Annotated[int, Gt]", "PositiveInt")
        return re.sub(r"Union\[(.+),\s+NoneType\]", r"Optional[\1]", cleaned)


def _default(model_field: FieldInfo) -> str:
    if model_field.is_required():
        return ""
    if model_field.default_factory is not None:
        value = model_field.default_factory()
        # nested models document their own defaults
        return "" if hasattr(value, "model_fields") else repr(value)
    return repr(model_field.default)


def parse_field_info(field_infos: Dict[str, FieldInfo]) -> List[ParsedField]:
    parsed_fields = []
    for name, model_field in field_infos.items():
        if model_field.exclude:
            continue
        annotation = model_field.annotation
        subfields = None
        if hasattr(annotation, "model_fields"):
            type_name = annotation.__name__
            subfields = parse_field_info(annotation.model_fields)
        else:
            type_name = (
                annotation.__name__
                if isinstance(annotation, type)
                else str(annotation)
            )
            # Optional[Model]
            for arg in getattr(annotation, "__args__", ()):
                if hasattr(arg, "model_fields"):
                    subfields = parse_field_info(arg.model_fields)
        parsed_fields.append(
            ParsedField(
                name=name,
                description=model_field.description or "",
                type=type_name,
                is_required=model_field.is_required(),
                default=_default(model_field),
                subfields=subfields,
            )
        )
    return parsed_fields


class DocBuilder:
    def __init__(self, extended: bool):
        self.doc = ""
        self.extended = extended

    @staticmethod
    def _indent(text: str, level: int) -> str:
        lines = [line.strip() for line in text.split("\n")]
        if level > 0:
            lines = ["    " * (level - 1) + line if line else "" for line in lines]
        return "\n".join(lines)

    def add_title(self, title: str, level: int):
        if level == 0:
            self.doc += title + "\n" + "-" * len(title)
        else:
            self.doc += self._indent(f"**{title}**", level)
        self.doc += "\n\n"

    def add_line(self, text: str, level: int):
        self.doc += self._indent(text, level) + "\n\n"


def _generate_rst(
    parsed_fields: List[ParsedField], builder: DocBuilder, level: int = 0
) -> DocBuilder:
    for f in parsed_fields:
        builder.add_title(f.doc_title(), level)
        builder.add_line(f"Type: *{f.clean_type()}*", level + 1)
        if builder.extended and f.default:
            builder.add_line(f"Default: ``{f.default}``", level + 1)
        if f.description:
            builder.add_line(f.doc_description(), level + 1)
        if f.subfields:
            _generate_rst(f.subfields, builder, level + 1)
    return builder


def generate_config_reference(extended: bool = False) -> str:
    """The config reference; extended adds the default of every field."""
    fields = ExperimentSpec.model_fields
    ordered = {name: fields[name] for name in SECTION_ORDER if name in fields}
    return _generate_rst(parse_field_info(ordered), DocBuilder(extended)).doc
