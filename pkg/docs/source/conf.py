# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.
#
# For a full list of options see the documentation:
# http://www.sphinx-doc.org/en/master/config

import os

import pkg_resources

from harqnet.docs import generate_config_reference

# -- Project information -----------------------------------------------------

project = "harqnet"
copyright = "2024, harqnet developers"
author = "harqnet developers"


def get_version():
    harqnet_version = pkg_resources.get_distribution(project).version
    print("harqnet version: {}".format(harqnet_version))
    return harqnet_version


def write_config_reference():
    # the keyword reference is generated from the pydantic field descriptions
    target = os.path.join(os.path.dirname(__file__), "config_generated.rst")
    with open(target, "w", encoding="utf-8") as fp:
        fp.write(generate_config_reference())


version = get_version()
release = version
write_config_reference()

# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.intersphinx",
    "sphinx.ext.mathjax",
    "sphinx.ext.viewcode",
    "sphinxarg.ext",
]

templates_path = ["_templates"]
source_suffix = ".rst"
master_doc = "index"
language = "en"
exclude_patterns = []
pygments_style = None

# -- Options for HTML output -------------------------------------------------

html_theme = "classic"
html_sidebars = {
    "**": ["globaltoc.html", "relations.html", "sourcelink.html", "searchbox.html"]
}
htmlhelp_basename = "harqnetdoc"

# -- Options for manual page output ------------------------------------------

man_pages = [(master_doc, "harqnet", "harqnet Documentation", [author], 1)]

numfig = True
intersphinx_mapping = {"python": ("https://docs.python.org/3", None)}
