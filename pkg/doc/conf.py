"""
Sphinx configuration of the pyradcool documentation
"""

import os
import sys

sys.path.insert(0, os.path.abspath('..'))

from pyradcool import __version__  # noqa: E402

project = 'pyradcool'
author = 'The pyradcool developers'
copyright = '2024, The pyradcool developers'
version = release = __version__

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.autosummary',
    'sphinx.ext.doctest',
    'sphinx.ext.mathjax',
    'sphinx.ext.napoleon',
    'sphinx.ext.viewcode',
]
# numpydoc sections
napoleon_google_docstring = False
napoleon_numpy_docstring = True
autodoc_member_order = 'bysource'

master_doc = 'index'
exclude_patterns = ['_build']
language = 'en'
pygments_style = 'sphinx'

html_theme = 'sphinx_rtd_theme'
htmlhelp_basename = 'pyradcooldoc'
