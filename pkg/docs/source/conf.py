# Sphinx configuration, see https://www.sphinx-doc.org/en/master/usage/configuration.html

import sphinx_rtd_theme

import glimca

project   = "glimca"
copyright = "2026, glimca authors"
author    = "glimca authors"
version   = glimca.__version__

extensions = [
    "sphinx.ext.napoleon",
    "sphinx.ext.autodoc",
    "sphinx.ext.autosummary",
    "sphinx.ext.viewcode",
    "sphinx.ext.doctest",
    "sphinx.ext.mathjax",
]

# Docstrings are numpydoc
napoleon_google_docstring = False
napoleon_numpy_docstring  = True

add_module_names     = False
autoclass_content    = "both"
autosummary_generate = True

# Namedtuple plumbing stays out of the reference
autodoc_default_options = {
    "exclude-members": "__weakref__, __slots__",
}

templates_path   = ["_templates"]
exclude_patterns = []

html_theme      = "sphinx_rtd_theme"
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
