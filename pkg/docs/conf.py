# Sphinx configuration for python-mcb.
import os
import sys
sys.path.insert(0, os.path.abspath('../src'))

from mcb import __version__

project = 'python-mcb'
copyright = '2024-2026, The python-mcb authors'
author = 'The python-mcb authors'
release = __version__

extensions = [
    'sphinx.ext.autodoc',
    'sphinx_rtd_theme',
    'sphinx_autodoc_typehints',
]

master_doc = 'index'
exclude_patterns = ['_build']

# Type hints are rendered by sphinx_autodoc_typehints.
autodoc_member_order = 'bysource'
typehints_fully_qualified = False
always_document_param_types = False

html_theme = 'sphinx_rtd_theme'
pygments_style = 'sphinx'
