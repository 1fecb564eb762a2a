# Sphinx configuration for the ordconflict documentation.

# -- Path setup --------------------------------------------------------------

import os
import sys

sys.path.insert(0, os.path.abspath('../../'))

from ordconflict.version import VERSION


# -- Project information -----------------------------------------------------

project = 'ordconflict'
copyright = '2026, the ordconflict developers'
author = 'the ordconflict developers'

# The short X.Y version
version = '.'.join(VERSION.split('.')[:2])
# The full version, including alpha/beta/rc tags
release = VERSION


# -- General configuration ---------------------------------------------------

# Add any Sphinx extension module names here, as strings.
extensions = ['sphinx.ext.autodoc', 'sphinx.ext.napoleon']

autodoc_default_options = {
    # Make sure that any autodoc declarations show the right members
    'members': True,
    'show-inheritance': True,
}

# The suffix(es) of source filenames.
source_suffix = '.rst'

# The master toctree document.
master_doc = 'index'

# List of patterns, relative to source directory, that match files and
# directories to ignore when looking for source files.
exclude_patterns = []

# The name of the Pygments (syntax highlighting) style to use.
pygments_style = 'sphinx'


# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'


# -- Options for HTMLHelp output ---------------------------------------------

# Output file base name for HTML help builder.
htmlhelp_basename = 'ordconflictdoc'


# -- Options for manual page output ------------------------------------------

# One entry per manual page. List of tuples
# (source start file, name, description, authors, manual section).
man_pages = [
    (master_doc, 'ordconflict', 'ordconflict Documentation',
     [author], 1)
]
