from harqnet.docs.config_reference import generate_config_reference

__all__ = ["generate_config_reference"]
