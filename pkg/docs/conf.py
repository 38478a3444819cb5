# Sphinx configuration for the polylaw documentation.
import os
import sys
from sphinx_gallery.sorting import FileNameSortKey

sys.path.insert(0, os.path.abspath('../'))

import polylaw  # noqa: E402

project = 'polylaw'
copyright = '2026, polylaw developers'
author = 'polylaw developers'
release = polylaw.__version__

extensions = [
    'sphinx.ext.mathjax',
    'sphinx.ext.autodoc',
    'sphinx.ext.napoleon',
    'sphinx_copybutton',
    'sphinx_gallery.gen_gallery',
    'sphinx.ext.autosummary',
]

autodoc_member_order = 'groupwise'
autodoc_default_options = {'members': True}
autodoc_typehints = "none"
autosummary_generate = True
autosummary_imported_members = True  # subpackages re-export from private modules

sphinx_gallery_conf = {
    'filename_pattern': '/*',
    'examples_dirs': ['../demos/tutorials'],
    'gallery_dirs': ['user/_auto_tutorials'],
    'download_all_examples': False,
    'within_subsection_order': FileNameSortKey,
}

root_doc = 'index'
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

html_theme = "pydata_sphinx_theme"
html_theme_options = {
    'collapse_navigation': False,
    'navigation_depth': 3,
    "show_prev_next": False,
}
