# Configuration file for the Sphinx documentation builder.
#
# For the full list of built-in configuration values, see
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import os
import sys
from datetime import datetime

sys.path.insert(0, os.path.abspath("../../src"))

project = "Quantum Network Conferencing-Key Estimator"
year = datetime.now().year
copyright = f"{year}, qnet_estimator contributors"
author = "qnet_estimator contributors"

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.mathjax",
]

templates_path = ["_templates"]
exclude_patterns = []

html_theme = "alabaster"
html_sidebars = {"**": ["about.html", "navigation.html", "relations.html", "searchbox.html"]}
html_static_path = []


def skip_tests_block(app, what, name, obj, options, lines):
    """
    Drop the ``TESTS::`` blocks of the docstrings from the rendered documentation
    """
    for i, line in enumerate(lines):
        if line.strip() == "TESTS::":
            del lines[i:]
            break


def setup(app):
    app.connect("autodoc-process-docstring", skip_tests_block)
