"""Sphinx configuration for the isotri docs."""
import os
import sys

import toml

sys.path.insert(0, os.path.abspath("../../"))

with open("../../pyproject.toml") as f:
    data = toml.load(f)

project = "isotri"
author = data["tool"]["poetry"]["authors"][0].split(" <")[0]
copyright = f"2023, {author}"
version = data["tool"]["poetry"]["version"]
release = version
html_title = f"{project} {version}"

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.autosummary",
    "sphinx.ext.napoleon",
    "sphinx.ext.viewcode",
    "myst_nb",
    "sphinx_copybutton",
]
source_suffix = [".md", ".rst"]
autosummary_generate = True

html_theme = "sphinx_book_theme"
html_theme_options = {"path_to_docs": "docs", "home_page_in_toc": True}
