#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# Nicetop documentation build configuration file.
import os
import sys
sys.path.insert(0, os.path.abspath('../'))
from django import setup
import nicetop

setup()

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.autosectionlabel',
    'sphinx.ext.intersphinx',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'Nicetop'
copyright = 'Nicetop developers, 2026'
author = 'Nicetop developers'

version = nicetop.__version__
release = version
language = 'en'

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'
todo_include_todos = False

# -- Options for HTML output ----------------------------------------------

html_theme = 'alabaster'
htmlhelp_basename = 'Nicetopdoc'

# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'nicetopctl', 'Nicetop Documentation', [author], 1)
]

intersphinx_mapping = {
    'python': ('https://docs.python.org/3.8', None),
    'vstutils': ('https://vstutils.vstconsulting.net/en/stable', None),
    'numpy': ('https://numpy.org/doc/stable', None),
    'sympy': ('https://docs.sympy.org/latest', None),
}

autodoc_inherit_docstrings = False
