# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.
#
# This file only contains a selection of the most common options. For a full
# list see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Path setup ------------------------------------------------------------------------
import sys
from pathlib import Path

repo_root = Path(__file__).parent.absolute().parent
sys.path.insert(0, str(repo_root))  # path to `partlab`

import partlab

# -- Project information ---------------------------------------------------------------
needs_sphinx = "4.3"

project = "partlab"
copyright = "the partlab developers"
author = "the partlab developers"
version = partlab.__version__
release = partlab.__version__

# -- General configuration -------------------------------------------------------------
extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.intersphinx",
    "sphinx.ext.viewcode",
    # Generates the value tables below before any document is read.
    "partlab",
]
exclude_patterns = ["_build"]

# -- partlab Extension Configuration ---------------------------------------------------
partlab_args = {
    "containmentFolder": "./tables",
    "rootFileName":      "tables_root.rst",
    "rootFileTitle":     "Value Tables",
    # The docs build should never hang on a misconfigured table.
    "termBudget":        10 ** 6,
    "tables": [
        {"fn": "p",      "n_lo": 0, "n_hi": 30, "name": "partitions"},
        {"fn": "pk",     "n_lo": 1, "n_hi": 12, "name": "parts_triangle",
         "title": "Partitions of n into exactly k parts"},
        {"fn": "spt",    "n_lo": 1, "n_hi": 20, "a": 0, "b": 1, "name": "spt_classic"},
        {"fn": "lambda", "n_lo": 1, "n_hi": 30, "k": 2, "name": "lambda_two_parts"},
        {"fn": "ppsi",   "n_lo": 1, "n_hi": 12, "name": "relatively_prime_triangle",
         "title": "Relatively prime partitions of n into exactly k parts"},
    ],
}

# -- Options for HTML output -----------------------------------------------------------
html_title = "partlab: Exact Partition Counting"
html_short_title = "partlab"
html_theme = "sphinx_rtd_theme"
html_theme_options = {
    "navigation_depth": -1
}

# -- sphinx.ext.autodoc Extension Configuration ----------------------------------------
autodoc_member_order = "bysource"

# -- Intersphinx Extension Configuration -----------------------------------------------
intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "sphinx": ("https://www.sphinx-doc.org/en/master", None),
    "click": ("https://click.palletsprojects.com/en/8.1.x/", None),
    "pytest": ("https://docs.pytest.org/en/latest/", None),
}
