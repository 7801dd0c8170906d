# coding=utf-8
"""Max-convolution algebra toolbox.

Classical, free and Boolean max-convolutions of distribution functions, the
maps between them, limit experiments and tail analysis.
"""

__version__ = '0.1.0'
