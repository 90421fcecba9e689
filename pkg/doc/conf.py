# Configuration file for the Sphinx documentation builder.
#
# For a full list of options see the documentation:
# http://www.sphinx-doc.org/en/master/config

import os
import sys

sys.path.insert(0, os.path.abspath('../'))

from gpolylog import __version__  # noqa

# -- Project information -----------------------------------------------------

project = 'gpolylog'
copyright = '2026, the gpolylog developers'
author = 'the gpolylog developers'

# The full version, including alpha/beta/rc tags
release = __version__

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.autosummary',
    'sphinx.ext.viewcode',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinx_rtd_theme',
    'sphinx.ext.napoleon'
]

# For maths, use mathjax by default and svg if NO_MATHJAX env variable is set
# (useful for viewing the doc offline)
if os.environ.get('NO_MATHJAX'):
    extensions.append('sphinx.ext.imgmath')
    imgmath_image_format = 'svg'
else:
    extensions.append('sphinx.ext.mathjax')

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'mpmath': ('https://mpmath.org/doc/current/', None),
    'sklearn': ('https://scikit-learn.org/stable/', None)
}

autodoc_default_options = {'members': True, 'inherited-members': False}

templates_path = ['templates/']

# generate autosummary even if no references
autosummary_generate = True

source_suffix = '.rst'

master_doc = 'index'

exclude_patterns = ['templates/*.rst']

# If true, '()' will be appended to :func: etc. cross-reference text.
add_function_parentheses = False

pygments_style = 'sphinx'

# -- Options for HTML output -------------------------------------------------

html_theme = "sphinx_rtd_theme"

html_theme_options = {
    'collapse_navigation': False,
    'sticky_navigation': True,
}

html_sourcelink_suffix = ''
