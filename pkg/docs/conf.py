# -*- coding: utf-8 -*-
#
# funnelq documentation build configuration file
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os

# make the checkout importable for autodoc without installing it
sys.path.insert(0, os.path.abspath('..'))

"""
Some notes:
http://www.sphinx-doc.org/en/stable/domains.html#python-roles
http://www.sphinx-doc.org/en/stable/ext/autodoc.html
"""

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.todo',
    'sphinx.ext.viewcode',
    'sphinx.ext.autosummary',
    'sphinx.ext.mathjax'
]

autodoc_default_flags = ['members']

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = 'funnelq'
copyright = '2026 The funnelq developers'
author = 'The funnelq developers'

version = '0.1.0' # keep in sync with setup.py
release = version

language = None

exclude_patterns = ['_build']

pygments_style = 'sphinx'

todo_include_todos = True

html_theme = 'alabaster'

html_sidebars = {
    '**': [
        'globaltoc.html',
        'searchbox.html',
    ]
}

html_static_path = ['_static']

htmlhelp_basename = 'funnelq'

latex_elements = {
}

latex_documents = [
    (master_doc, 'funnelq.tex', 'funnelq Documentation',
     'The funnelq developers', 'manual'),
]

man_pages = [
  (master_doc, 'funnelq', 'funnelq Documentation', [author], 1)
]

texinfo_documents = [
    (master_doc, 'funnelq', 'funnelq Documentation',
     author, 'funnelq', 'Addressable multi-level priority queue',
     'Miscellaneous'),
]
