from harqnet.config import ExperimentSpec, SimConfig, SystemParams
from harqnet.docs import generate_config_reference
from harqnet.docs.config_reference import SECTION_ORDER, parse_field_info


def test_every_section_is_documented():
    documented = set(SECTION_ORDER)
    public = {
        name for name, field in ExperimentSpec.model_fields.items() if not field.exclude
    }
    # provenance is written by harqnet, never by hand
    assert public - documented == {"provenance"}


def test_reference_lists_nested_fields():
    reference = generate_config_reference()
    assert reference.startswith("name (optional)\n---------------")
    for name in SystemParams.model_fields:
        assert f"**{name} (optional)**" in reference
    for name in SimConfig.model_fields:
        assert f"**{name} (optional)**" in reference
    assert "config_path" not in reference


def test_extended_reference_shows_defaults():
    reference = generate_config_reference(extended=True)
    assert "Default: ``2000``" in reference
    assert "Default: ``'marginal'``" in reference


def test_types_are_readable():
    fields = {f.name: f for f in parse_field_info(SimConfig.model_fields)}
    assert fields["disk_radius"].clean_type() == "Optional[float]"
    assert fields["trials"].clean_type() == "int"
    assert fields["gain_model"].clean_type() == "Literal['marginal', 'matrix']"
