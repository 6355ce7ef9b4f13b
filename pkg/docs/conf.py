# Sphinx configuration for the Gaussian Separability documentation.

import os
import sys


topdir = os.path.abspath("../")
sys.path.insert(0, topdir)

import gaussian_separability  # NOQA


project = "Gaussian Separability"
copyright = "2026, Contributors to the gaussian-separability project"
author = "Contributors to the gaussian-separability project"
version = ".".join(gaussian_separability.__version__.split(".")[:2])
release = gaussian_separability.__version__

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.intersphinx",
    "sphinx.ext.mathjax",
    "sphinx.ext.viewcode",
    "sphinx.ext.napoleon",
    "myst_parser",
]

exclude_patterns = ["_build"]
master_doc = "index"
source_suffix = {
    ".rst": "restructuredtext",
    ".md": "markdown",
}
myst_heading_anchors = 3

# Google-style docstrings only
napoleon_numpy_docstring = False
autodoc_member_order = "bysource"

html_theme = "alabaster"
html_theme_options = {
    "page_width": "1040px",
    "sidebar_collapse": True,
}
html_static_path = ["_static"]

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
    "scipy": ("https://docs.scipy.org/doc/scipy/", None),
    "pydantic": ("https://docs.pydantic.dev/latest/", None),
}


def run_apidoc(_):
    from sphinx.ext import apidoc

    apidoc.main(
        [
            "-f",
            "-o",
            os.path.join(topdir, "docs", "_source"),
            "-T",
            "-e",
            "-M",
            os.path.join(topdir, "gaussian_separability"),
        ]
    )


def setup(app):
    app.connect("builder-inited", run_apidoc)
